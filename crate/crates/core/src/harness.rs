//! Corpus enumeration, per-quiver verdict aggregation, and the diff
//! between the integer engine and the linear-algebra oracle.
//!
//! The harness exists to confirm-or-falsify: every expected law is run on
//! every corpus quiver, a failed law aborts the run with the
//! counterexample serialized, and a passing run emits one deterministic
//! JSON report per quiver.

use crate::error::{CheckError, UsageError, Violation};
use crate::ext::{
    self, ChainReport, ExtProfile, SelfInjectivityClassification, VanishingUniquenessReport,
};
use crate::quiver::{DeltaShape, Quiver};
use crate::rep::{self, Resolution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

/// Largest adjacency-matrix space the exhaustive mode will sweep.
pub const EXHAUSTIVE_GUARD: u128 = 1_000_000;

/// What to enumerate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Vertex count.
    pub n: usize,
    /// Largest allowed arrow multiplicity per ordered pair.
    pub max_entry: u32,
    pub mode: CorpusMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorpusMode {
    /// Every adjacency matrix in lexicographic order, connectivity filtered.
    Exhaustive,
    /// Seeded uniform sampling of connected quivers.
    Random { count: usize, seed: u64 },
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.n == 0 {
            return Err(UsageError::new("corpus needs at least one vertex"));
        }
        if let CorpusMode::Exhaustive = self.mode {
            let space = (self.max_entry as u128 + 1)
                .checked_pow((self.n * self.n) as u32)
                .unwrap_or(u128::MAX);
            if space > EXHAUSTIVE_GUARD {
                return Err(UsageError::new(format!(
                    "exhaustive corpus of {space} matrices exceeds the guard of {EXHAUSTIVE_GUARD}; use random mode"
                )));
            }
        }
        Ok(())
    }
}

/// Deterministic stream of connected quivers described by a [`CorpusSpec`].
pub fn enumerate_connected(spec: &CorpusSpec) -> Result<ConnectedQuivers, UsageError> {
    spec.validate()?;
    Ok(match spec.mode {
        CorpusMode::Exhaustive => ConnectedQuivers::Exhaustive {
            n: spec.n,
            max: spec.max_entry,
            state: Some(vec![0u32; spec.n * spec.n]),
        },
        CorpusMode::Random { count, seed } => ConnectedQuivers::Random {
            n: spec.n,
            max: spec.max_entry,
            remaining: count,
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
        },
    })
}

pub enum ConnectedQuivers {
    Exhaustive {
        n: usize,
        max: u32,
        /// Flattened row-major entries; `None` once exhausted.
        state: Option<Vec<u32>>,
    },
    Random {
        n: usize,
        max: u32,
        remaining: usize,
        rng: Box<ChaCha8Rng>,
    },
}

impl Iterator for ConnectedQuivers {
    type Item = Quiver;

    fn next(&mut self) -> Option<Quiver> {
        match self {
            ConnectedQuivers::Exhaustive { n, max, state } => loop {
                let flat = state.as_mut()?;
                let adj: Vec<Vec<u32>> = (0..*n)
                    .map(|i| flat[i * *n..(i + 1) * *n].to_vec())
                    .collect();
                // advance the odometer, last entry fastest
                let mut done = true;
                for x in flat.iter_mut().rev() {
                    if *x < *max {
                        *x += 1;
                        done = false;
                        break;
                    }
                    *x = 0;
                }
                if done {
                    *state = None;
                }
                let q = Quiver::new(adj).expect("generated matrices are square");
                if q.is_connected() {
                    return Some(q);
                }
                if state.is_none() {
                    return None;
                }
            },
            ConnectedQuivers::Random {
                n,
                max,
                remaining,
                rng,
            } => {
                if *remaining == 0 {
                    return None;
                }
                loop {
                    let adj: Vec<Vec<u32>> = (0..*n)
                        .map(|_| (0..*n).map(|_| rng.random_range(0..=*max)).collect())
                        .collect();
                    let q = Quiver::new(adj).expect("generated matrices are square");
                    if q.is_connected() {
                        *remaining -= 1;
                        return Some(q);
                    }
                }
            }
        }
    }
}

/// How and when the linear-algebra oracle runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Primes the oracle recomputes everything over.
    pub primes: Vec<u64>,
    /// Run the oracle only when `dim Λ = Σ dim P(i)` is at most this.
    pub dim_budget: usize,
    /// Cumulative dimension allowed across resolution terms when chasing
    /// Ext profiles into higher degrees; dense quivers get their profile
    /// cross-checked to a shallower depth instead of stalling the sweep.
    pub resolution_budget: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            primes: vec![2, 5],
            dim_budget: 64,
            resolution_budget: 4000,
        }
    }
}

/// One disagreement between the integer engine and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDiff {
    pub prime: u64,
    /// `"ext1_vs_proj"`, `"hom_vs_lambda"` or `"profile"`.
    pub quantity: String,
    pub vertex: usize,
    /// Target projective for `ext1_vs_proj`, degree for `profile`, 0 otherwise.
    pub index: usize,
    pub combinatorial: u64,
    pub oracle: u64,
}

/// Outcome of the oracle pass on one quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub ran: bool,
    pub primes: Vec<u64>,
    /// Per vertex: the Ext-profile depth the oracle confirmed (minimum
    /// over primes); degree-1 equivalence is always checked in full.
    pub profile_depth: Vec<usize>,
    /// Empty in a passing run.
    pub diffs: Vec<OracleDiff>,
}

impl OracleSummary {
    fn skipped() -> Self {
        OracleSummary {
            ran: false,
            primes: Vec::new(),
            profile_depth: Vec::new(),
            diffs: Vec::new(),
        }
    }
}

/// Everything the harness measured on one quiver. Serializes
/// deterministically (field order fixed, no timing in the payload).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub quiver: Quiver,
    pub connected: bool,
    pub delta: Option<DeltaShape>,
    pub self_injective: bool,
    pub simple_ring: bool,
    /// Ext profile of each simple to depth `n + 1`.
    pub profiles: Vec<ExtProfile>,
    /// Effective vanishing bound per simple.
    pub nakayama_bounds: Vec<usize>,
    pub classification: SelfInjectivityClassification,
    /// Maximal syzygy chain per non-projective simple (off the
    /// self-injective case).
    pub chains: Vec<ChainReport>,
    pub vanishing_uniqueness: Option<VanishingUniquenessReport>,
    pub oracle: OracleSummary,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Runs every law on one connected quiver. A failed law aborts with the
/// counterexample; a usage error means the quiver was not admissible.
pub fn run_all_checks(q: &Quiver, oracle: &OracleConfig) -> Result<AnalysisReport, CheckError> {
    let started = Instant::now();
    if !q.is_connected() {
        return Err(UsageError::new("checks need a connected quiver").into());
    }
    let n = q.n();
    let delta = q.detect_delta_shape();
    let self_injective = q.is_self_injective();
    let simple_ring = q.is_simple_ring();

    let mut profiles = Vec::with_capacity(n);
    for j in 0..n {
        profiles.push(ext::ext_profile(q, j, n + 1).map_err(CheckError::Usage)?);
    }
    let mut nakayama_bounds = Vec::with_capacity(n);
    for j in 0..n {
        nakayama_bounds.push(ext::nakayama_bound(q, j)?);
    }

    let classification = ext::classify_self_injectivity(q).map_err(CheckError::Usage)?;
    if !classification.consistent() {
        return Err(Violation::new(
            "self-injectivity-equivalence",
            format!(
                "flags disagree: self-injective-not-simple = {}, deep-vanishing witness = {:?}",
                classification.self_injective_not_simple, classification.witness
            ),
        )
        .on_quiver(q.adj().to_vec())
        .into());
    }

    let mut chains = Vec::new();
    if !self_injective {
        for j in 0..n {
            if q.is_sink(j) {
                continue;
            }
            let d_max = (0..=n)
                .take_while(|&d| profiles[j].vanishes_in(1, d))
                .last()
                .unwrap_or(0);
            for d in 0..=d_max {
                let report = ext::syzygy_chain(q, j, d).map_err(CheckError::Usage)?;
                if !report.ok() {
                    return Err(Violation::new(
                        "syzygy-chain",
                        format!("chain from S({j}) at depth {d} failed: {report:?}"),
                    )
                    .on_quiver(q.adj().to_vec())
                    .into());
                }
                if d == d_max {
                    chains.push(report);
                }
            }
        }
    }

    let vanishing_uniqueness = match &delta {
        Some(shape) if shape.t > 1 => {
            let report =
                ext::delta_vanishing_uniqueness(q, shape).map_err(CheckError::Usage)?;
            if !report.ok() {
                return Err(Violation::new(
                    "delta-vanishing-uniqueness",
                    format!("{report:?}"),
                )
                .on_quiver(q.adj().to_vec())
                .into());
            }
            Some(report)
        }
        _ => None,
    };

    ext::check_vanishing_structure(q)?;
    ext::check_chain_closure(q)?;

    let lambda_dim = n + q.arrow_count();
    let oracle_summary = if lambda_dim <= oracle.dim_budget {
        let summary = oracle_diff(q, &oracle.primes, oracle.resolution_budget);
        if !summary.diffs.is_empty() {
            return Err(Violation::new(
                "oracle-equivalence",
                serde_json::to_string(&summary.diffs).unwrap_or_else(|_| "diffs".into()),
            )
            .on_quiver(q.adj().to_vec())
            .into());
        }
        summary
    } else {
        OracleSummary::skipped()
    };

    Ok(AnalysisReport {
        quiver: q.clone(),
        connected: true,
        delta,
        self_injective,
        simple_ring,
        profiles,
        nakayama_bounds,
        classification,
        chains,
        vanishing_uniqueness,
        oracle: oracle_summary,
        elapsed: started.elapsed(),
    })
}

/// Compares the integer engine against the linear-algebra oracle on one
/// quiver: `dim Ext¹(S(j), P(i))` for every pair, `dim Hom(S(j), Λ)`, and
/// the Ext profile against `Λ` as deep as the resolution budget allows.
pub fn oracle_diff(q: &Quiver, primes: &[u64], resolution_budget: usize) -> OracleSummary {
    oracle_diff_with(q, primes, resolution_budget, &ext::ext1_simple_vs_proj_dim)
}

/// Same as [`oracle_diff`] with an injectable closed form, so tests can
/// prove the diff actually fires on a corrupted engine.
pub fn oracle_diff_with(
    q: &Quiver,
    primes: &[u64],
    resolution_budget: usize,
    ext1_fn: &dyn Fn(&Quiver, usize, usize) -> u64,
) -> OracleSummary {
    let n = q.n();
    let mut diffs = Vec::new();
    let mut profile_depth = vec![usize::MAX; n];
    for &p in primes {
        let lam = rep::lambda(q, p);
        let projs: Vec<_> = (0..n).map(|i| rep::projective(q, p, i)).collect();
        for j in 0..n {
            let mut res = Resolution::new(&rep::simple(q, p, j));
            for (i, proj) in projs.iter().enumerate() {
                let got = res.ext_dims(proj, 1)[1] as u64;
                let want = ext1_fn(q, j, i);
                if got != want {
                    diffs.push(OracleDiff {
                        prime: p,
                        quantity: "ext1_vs_proj".into(),
                        vertex: j,
                        index: i,
                        combinatorial: want,
                        oracle: got,
                    });
                }
            }
            let hom = res.ext_dims(&lam, 0)[0] as u64;
            let want_hom = ext::hom_simple_lambda_dim(q, j);
            if hom != want_hom {
                diffs.push(OracleDiff {
                    prime: p,
                    quantity: "hom_vs_lambda".into(),
                    vertex: j,
                    index: 0,
                    combinatorial: want_hom,
                    oracle: hom,
                });
            }
            // Profile to depth n + 1 where the resolution stays within
            // budget; dense quivers are confirmed to a shallower depth.
            let reached = res.extend_within(n + 2, resolution_budget);
            let max_i = reached.saturating_sub(1).min(n + 1);
            profile_depth[j] = profile_depth[j].min(max_i);
            if max_i >= 1 {
                let oracle_dims = res.ext_dims(&lam, max_i);
                if let Ok(profile) = ext::ext_profile(q, j, max_i) {
                    for i in 1..=max_i {
                        if oracle_dims[i] as u64 != profile.dims[i] {
                            diffs.push(OracleDiff {
                                prime: p,
                                quantity: "profile".into(),
                                vertex: j,
                                index: i,
                                combinatorial: profile.dims[i],
                                oracle: oracle_dims[i] as u64,
                            });
                        }
                    }
                }
            }
        }
    }
    OracleSummary {
        ran: true,
        primes: primes.to_vec(),
        profile_depth,
        diffs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive(n: usize, max: u32) -> Vec<Quiver> {
        enumerate_connected(&CorpusSpec {
            n,
            max_entry: max,
            mode: CorpusMode::Exhaustive,
        })
        .unwrap()
        .collect()
    }

    #[test]
    fn census_one_vertex() {
        let qs = exhaustive(1, 2);
        assert_eq!(qs.len(), 3);
        assert_eq!(qs[0].adj(), &[vec![0]]);
        assert_eq!(qs[2].adj(), &[vec![2]]);
    }

    #[test]
    fn census_two_vertices_binary() {
        // Of the 16 binary 2×2 matrices, exactly those with a cross arrow
        // are weakly connected: 16 − 4 = 12.
        let qs = exhaustive(2, 1);
        assert_eq!(qs.len(), 12);
        let brute = {
            let mut count = 0;
            for bits in 0..16u32 {
                let adj = vec![
                    vec![bits & 1, (bits >> 1) & 1],
                    vec![(bits >> 2) & 1, (bits >> 3) & 1],
                ];
                if Quiver::new(adj).unwrap().is_connected() {
                    count += 1;
                }
            }
            count
        };
        assert_eq!(qs.len(), brute);
    }

    #[test]
    fn exhaustive_guard_refuses_blowups() {
        let spec = CorpusSpec {
            n: 6,
            max_entry: 9,
            mode: CorpusMode::Exhaustive,
        };
        assert!(enumerate_connected(&spec).is_err());
    }

    #[test]
    fn random_mode_is_reproducible() {
        let spec = CorpusSpec {
            n: 4,
            max_entry: 3,
            mode: CorpusMode::Random { count: 20, seed: 7 },
        };
        let a: Vec<Quiver> = enumerate_connected(&spec).unwrap().collect();
        let b: Vec<Quiver> = enumerate_connected(&spec).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|q| q.is_connected()));
    }

    #[test]
    fn report_on_delta_32() {
        let q = Quiver::delta(3, 2);
        let report = run_all_checks(&q, &OracleConfig::default()).unwrap();
        let shape = report.delta.as_ref().unwrap();
        assert_eq!((shape.n, shape.m, shape.t), (3, 2, 4));
        assert!(!report.self_injective);
        assert!(!report.classification.self_injective_not_simple);
        assert_eq!(report.classification.witness, None);
        assert!(report.vanishing_uniqueness.is_some());
        assert!(report.oracle.ran);
        assert!(report.oracle.diffs.is_empty());
    }

    #[test]
    fn report_on_self_injective_cycle() {
        let q = Quiver::delta(2, 1);
        let report = run_all_checks(&q, &OracleConfig::default()).unwrap();
        assert!(report.self_injective);
        for profile in &report.profiles {
            assert!(profile.vanishes_in(1, 3));
        }
        assert!(report.classification.self_injective_not_simple);
    }

    #[test]
    fn report_nakayama_on_a2() {
        let q = Quiver::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let report = run_all_checks(&q, &OracleConfig::default()).unwrap();
        assert_eq!(report.nakayama_bounds, vec![1, 0]);
    }

    #[test]
    fn reports_serialize_deterministically() {
        let q = Quiver::delta(3, 2);
        let a = serde_json::to_string(&run_all_checks(&q, &OracleConfig::default()).unwrap())
            .unwrap();
        let b = serde_json::to_string(&run_all_checks(&q, &OracleConfig::default()).unwrap())
            .unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
    }

    #[test]
    fn oracle_agrees_on_delta_13() {
        let q = Quiver::delta(1, 3);
        let summary = oracle_diff(&q, &[2, 5], 4000);
        assert!(summary.diffs.is_empty());
    }

    #[test]
    fn corrupted_closed_form_is_caught() {
        let q = Quiver::delta(2, 2);
        let corrupted = |quiver: &Quiver, j: usize, i: usize| {
            ext::ext1_simple_vs_proj_dim(quiver, j, i) + u64::from(j == 1 && i == 1)
        };
        let summary = oracle_diff_with(&q, &[5], 4000, &corrupted);
        assert!(!summary.diffs.is_empty());
        let diff = &summary.diffs[0];
        assert_eq!((diff.vertex, diff.index), (1, 1));
        assert_eq!(diff.quantity, "ext1_vs_proj");
    }

    #[test]
    fn oracle_budget_skips_large_quivers() {
        let q = Quiver::delta(3, 2);
        let config = OracleConfig {
            dim_budget: 3, // dim Λ = 3 + 4 arrows = 7 > 3
            ..OracleConfig::default()
        };
        let report = run_all_checks(&q, &config).unwrap();
        assert!(!report.oracle.ran);
    }
}
