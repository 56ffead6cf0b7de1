//! Maps between sums of projectives as formal path combinations, and the
//! transpose construction built on them.
//!
//! A map `⊕_c P(a_c) → ⊕_r P(b_r)` is determined by the images of the
//! source generators. Each image component inside `P(b_r)` is a scalar
//! multiple of the generator (only possible when `a_c = b_r`) plus a
//! combination of arrow slots `b_r → a_c`; no longer paths exist because
//! they vanish in the algebra. Dualizing into right modules reverses
//! every path and transposes the matrix, which is how the transpose `Tr`
//! and the translates `τ = D Tr`, `τ⁻¹ = Tr D` are computed.

use crate::error::UsageError;
use crate::linalg::Matrix;
use crate::quiver::{Arrow, Quiver};
use crate::rep::{ModuleMap, PBasis, ProjectiveSum, Representation, Resolution};

/// One entry of a [`PathMatrix`]: the component `P(col_label) → P(row_label)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathEntry {
    /// Coefficient of the trivial path; may be nonzero only when the row
    /// and column labels agree.
    pub scalar: u64,
    /// Arrow terms `(arrow, coefficient)` with `arrow: row_label → col_label`.
    pub arrows: Vec<(Arrow, u64)>,
}

impl PathEntry {
    pub fn is_zero(&self) -> bool {
        self.scalar == 0 && self.arrows.iter().all(|&(_, c)| c == 0)
    }
}

/// A matrix of formal path combinations encoding a map between direct
/// sums of indecomposable projectives. Rows index the target summands,
/// columns the source summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrix {
    quiver: Quiver,
    p: u64,
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
    entries: Vec<Vec<PathEntry>>,
}

impl PathMatrix {
    pub fn new(
        quiver: Quiver,
        p: u64,
        row_labels: Vec<usize>,
        col_labels: Vec<usize>,
        entries: Vec<Vec<PathEntry>>,
    ) -> Result<Self, UsageError> {
        if entries.len() != row_labels.len()
            || entries.iter().any(|row| row.len() != col_labels.len())
        {
            return Err(UsageError::new("path matrix shape mismatch"));
        }
        let pm = PathMatrix {
            quiver,
            p,
            row_labels,
            col_labels,
            entries,
        };
        pm.validate()?;
        Ok(pm)
    }

    fn validate(&self) -> Result<(), UsageError> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                let (rl, cl) = (self.row_labels[r], self.col_labels[c]);
                if e.scalar != 0 && rl != cl {
                    return Err(UsageError::new(format!(
                        "trivial-path term between distinct labels {rl} and {cl}"
                    )));
                }
                for &(a, _) in &e.arrows {
                    if a.from != rl || a.to != cl {
                        return Err(UsageError::new(format!(
                            "arrow {}->{} cannot appear in entry with labels ({rl}, {cl})",
                            a.from, a.to
                        )));
                    }
                    if a.copy as u32 >= self.quiver.entry(a.from, a.to) {
                        return Err(UsageError::new("arrow copy index out of range"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    pub fn entry(&self, r: usize, c: usize) -> &PathEntry {
        &self.entries[r][c]
    }

    /// Entrywise path reversal plus matrix transposition: the dual map
    /// between the corresponding projectives over the opposite quiver.
    pub fn transpose(&self) -> PathMatrix {
        let op = self.quiver.opposite();
        let entries: Vec<Vec<PathEntry>> = (0..self.col_labels.len())
            .map(|r| {
                (0..self.row_labels.len())
                    .map(|c| {
                        let e = &self.entries[c][r];
                        PathEntry {
                            scalar: e.scalar,
                            arrows: e
                                .arrows
                                .iter()
                                .map(|&(a, coeff)| (a.reversed(), coeff))
                                .collect(),
                        }
                    })
                    .collect()
            })
            .collect();
        let pm = PathMatrix {
            quiver: op,
            p: self.p,
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries,
        };
        debug_assert!(pm.validate().is_ok());
        pm
    }
}

/// The start of a minimal projective resolution, with the connecting map
/// in both forms: formal paths and explicit matrices.
#[derive(Debug, Clone)]
pub struct MinimalPresentation {
    /// `P_1 → P_0` as formal paths; minimality makes every entry a pure
    /// arrow combination.
    pub matrix: PathMatrix,
    /// `P_0 → M`.
    pub cover: ModuleMap,
    /// `P_1 → P_0` as an explicit module map.
    pub map: ModuleMap,
}

/// Minimal presentation `P_1 → P_0 → M → 0`.
pub fn minimal_presentation(m: &Representation) -> MinimalPresentation {
    let res = Resolution::new(m);
    let p0 = res.p0();
    let row_labels = p0.labels().to_vec();
    let q = m.quiver().clone();
    let p = m.p();
    let mut col_labels = Vec::new();
    let mut entries: Vec<Vec<PathEntry>> =
        vec![Vec::new(); row_labels.len()];
    for v in 0..q.n() {
        let cols = &res.kernel_cols()[v];
        for c in 0..cols.cols() {
            col_labels.push(v);
            for row in entries.iter_mut() {
                row.push(PathEntry::default());
            }
            let col_idx = col_labels.len() - 1;
            for (idx, &basis) in p0.layout(v).iter().enumerate() {
                let coeff = cols.get(idx, c);
                if coeff == 0 {
                    continue;
                }
                match basis {
                    PBasis::Gen { summand } => {
                        entries[summand][col_idx].scalar =
                            (entries[summand][col_idx].scalar + coeff) % p;
                    }
                    PBasis::Arr { summand, arrow } => {
                        entries[summand][col_idx].arrows.push((arrow, coeff));
                    }
                }
            }
        }
    }
    let matrix = PathMatrix::new(q, p, row_labels, col_labels, entries)
        .expect("presentation entries are valid paths");
    let map = res.materialize_map(1);
    MinimalPresentation {
        matrix,
        cover: res.cover().clone(),
        map,
    }
}

/// Rebuilds the explicit module map a path matrix encodes. Inverse to the
/// extraction performed by [`minimal_presentation`] on minimal maps.
pub fn reconstruct(pm: &PathMatrix) -> ModuleMap {
    let q = &pm.quiver;
    let p = pm.p;
    let source = ProjectiveSum::new(q, p, pm.col_labels.clone());
    let target = ProjectiveSum::new(q, p, pm.row_labels.clone());
    let mut mats: Vec<Matrix> = (0..q.n())
        .map(|v| {
            Matrix::zeros(
                p,
                target.rep().dims()[v],
                source.rep().dims()[v],
            )
        })
        .collect();
    for v in 0..q.n() {
        for (col, &basis) in source.layout(v).iter().enumerate() {
            match basis {
                PBasis::Gen { summand: c } => {
                    for (r, _) in pm.row_labels.iter().enumerate() {
                        let e = pm.entry(r, c);
                        if e.scalar != 0 {
                            let (gv, gidx) = target.gen_pos(r);
                            debug_assert_eq!(gv, v);
                            mats[v].add_at(gidx, col, e.scalar);
                        }
                        for &(arrow, coeff) in &e.arrows {
                            let slot = target
                                .layout(arrow.to)
                                .iter()
                                .position(|&b| b == PBasis::Arr { summand: r, arrow })
                                .expect("arrow slot must exist in target");
                            debug_assert_eq!(arrow.to, v);
                            mats[v].add_at(slot, col, coeff);
                        }
                    }
                }
                PBasis::Arr { summand: c, arrow: beta } => {
                    // β · (image of the source generator): only the
                    // trivial-path terms survive, landing in the matching
                    // arrow slot of the target summand.
                    for (r, _) in pm.row_labels.iter().enumerate() {
                        let e = pm.entry(r, c);
                        if e.scalar != 0 {
                            let slot = target
                                .layout(beta.to)
                                .iter()
                                .position(|&b| {
                                    b == PBasis::Arr {
                                        summand: r,
                                        arrow: beta,
                                    }
                                })
                                .expect("arrow slot must exist in target");
                            debug_assert_eq!(beta.to, v);
                            mats[v].add_at(slot, col, e.scalar);
                        }
                    }
                }
            }
        }
    }
    ModuleMap::new(source.into_rep(), target.into_rep(), mats)
        .expect("reconstructed map must commute with arrows")
}

/// The transpose `Tr M`, a module over the opposite quiver: cokernel of
/// the dualized minimal presentation. `Tr P = 0` because minimal
/// presentations are used throughout.
pub fn transpose_module(m: &Representation) -> Representation {
    let pres = minimal_presentation(m);
    let dual = reconstruct(&pres.matrix.transpose());
    let (coker, _) = dual.cokernel();
    coker
}

/// The inverse Auslander–Reiten translate `τ⁻¹ M = Tr D M`, together with
/// the dualized presentation map whose cokernel it is. The second
/// component lets callers re-derive the length of `τ⁻¹ M` independently
/// from per-vertex ranks.
pub fn tau_inverse_with_presentation(m: &Representation) -> (Representation, ModuleMap) {
    let dual = m.dualize();
    let pres = minimal_presentation(&dual);
    let dual_map = reconstruct(&pres.matrix.transpose());
    let (coker, _) = dual_map.cokernel();
    (coker, dual_map)
}

/// `τ⁻¹ M = Tr D M`; zero on injectives.
pub fn tau_inverse(m: &Representation) -> Representation {
    tau_inverse_with_presentation(m).0
}

/// `τ M = D Tr M`; zero on projectives.
pub fn tau(m: &Representation) -> Representation {
    transpose_module(m).dualize()
}
