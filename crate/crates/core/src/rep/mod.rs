//! Exact module theory over `Λ = kQ/J²` as quiver representations over a
//! prime field.
//!
//! A left module is a vector space per vertex plus one matrix per arrow,
//! subject to the radical-square-zero relations: composable arrow matrices
//! multiply to zero. All constructions (covers, kernels, cokernels, duals,
//! translates) are carried out by exact Gaussian elimination, so this
//! engine serves as the oracle against which the integer engine in
//! [`crate::ext`] is validated.
//!
//! Conventions, fixed once and used everywhere:
//! * matrices act on column vectors, so the matrix of an arrow `u → v` has
//!   shape `dims[v] × dims[u]`;
//! * bases of projectives are ordered generator first, then the arrow
//!   images in `(from, to, copy)` order (see [`ProjectiveSum`]);
//! * pivoting is first-nonzero; no randomness outside [`random_module`].

mod checks;
mod pathmatrix;
mod projsum;
mod resolution;

pub use checks::{
    cm_check, descend_to_simple, distinguished_module, envelope_sequence_check,
    stable_hom_check, CmReport, DistinguishedChecks, DistinguishedModule,
    EnvelopeSequenceReport, StableHomReport,
};
pub use pathmatrix::{
    minimal_presentation, reconstruct, tau, tau_inverse, tau_inverse_with_presentation,
    transpose_module, MinimalPresentation, PathEntry, PathMatrix,
};
pub use projsum::{PBasis, ProjectiveSum};
pub use resolution::{ext_dim, Resolution};

use crate::error::UsageError;
use crate::ext::SimpleVector;
use crate::linalg::Matrix;
use crate::quiver::{Arrow, Quiver};
use rand::Rng;

/// A finite-dimensional representation of a quiver with the square-zero
/// relations. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    p: u64,
    dims: Vec<usize>,
    /// One matrix per arrow, indexed like `Quiver::arrows()`.
    mats: Vec<Matrix>,
}

impl Representation {
    /// Validating constructor for externally supplied matrices.
    pub fn new(
        quiver: Quiver,
        p: u64,
        dims: Vec<usize>,
        mats: Vec<Matrix>,
    ) -> Result<Self, UsageError> {
        let rep = Representation {
            quiver,
            p,
            dims,
            mats,
        };
        rep.validate()?;
        Ok(rep)
    }

    /// Internal constructor for matrices produced by the engine itself.
    /// Shape consistency is always enforced; the relation check runs in
    /// debug builds and in the explicit [`Representation::validate`] calls
    /// the test suites make.
    pub(crate) fn from_parts(quiver: Quiver, p: u64, dims: Vec<usize>, mats: Vec<Matrix>) -> Self {
        let rep = Representation {
            quiver,
            p,
            dims,
            mats,
        };
        rep.check_shapes().expect("internal representation shapes");
        debug_assert!(rep.check_relations().is_ok());
        rep
    }

    fn check_shapes(&self) -> Result<(), UsageError> {
        if self.dims.len() != self.quiver.n() {
            return Err(UsageError::new("dims length does not match vertex count"));
        }
        let arrows = self.quiver.arrows();
        if self.mats.len() != arrows.len() {
            return Err(UsageError::new("one matrix per arrow is required"));
        }
        for (a, m) in arrows.iter().zip(&self.mats) {
            if m.rows() != self.dims[a.to] || m.cols() != self.dims[a.from] {
                return Err(UsageError::new(format!(
                    "matrix for arrow {}->{} copy {} has shape {}x{}, expected {}x{}",
                    a.from,
                    a.to,
                    a.copy,
                    m.rows(),
                    m.cols(),
                    self.dims[a.to],
                    self.dims[a.from]
                )));
            }
            if m.p() != self.p {
                return Err(UsageError::new("field mismatch in arrow matrix"));
            }
        }
        Ok(())
    }

    fn check_relations(&self) -> Result<(), UsageError> {
        let arrows = self.quiver.arrows();
        for a in &arrows {
            for b in &arrows {
                if a.to == b.from {
                    let prod = self.arrow_mat(*b).matmul(self.arrow_mat(*a));
                    if !prod.is_zero() {
                        return Err(UsageError::new(format!(
                            "square-zero relation violated on {}->{}->{}",
                            a.from, a.to, b.to
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Full invariant check: shapes plus the square-zero relations.
    pub fn validate(&self) -> Result<(), UsageError> {
        self.check_shapes()?;
        self.check_relations()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim_total() == 0
    }

    pub fn arrow_mat(&self, a: Arrow) -> &Matrix {
        &self.mats[self.quiver.arrow_index(a)]
    }

    /// All arrow matrices are zero, i.e. the module is semisimple.
    pub fn is_semisimple(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// Per-vertex basis of the radical `rad M = Σ im(arrow)`, as columns.
    pub fn radical_basis(&self) -> Vec<Matrix> {
        let n = self.quiver.n();
        (0..n)
            .map(|v| {
                let mut stacked: Option<Matrix> = None;
                for a in self.quiver.arrows() {
                    if a.to == v {
                        let m = self.arrow_mat(a).clone();
                        stacked = Some(match stacked {
                            None => m,
                            Some(s) => s.hstack(&m),
                        });
                    }
                }
                match stacked {
                    None => Matrix::zeros(self.p, self.dims[v], 0),
                    Some(s) => s.column_space_basis(),
                }
            })
            .collect()
    }

    /// Multiplicity vector of `M / rad M`.
    pub fn top_vector(&self) -> SimpleVector {
        let rad = self.radical_basis();
        SimpleVector(
            (0..self.quiver.n())
                .map(|v| (self.dims[v] - rad[v].cols()) as u64)
                .collect(),
        )
    }

    /// Per-vertex basis of the socle `soc M` (joint kernel of the outgoing
    /// arrows), as columns. A vertex with no outgoing arrows contributes
    /// its whole space.
    pub fn socle_basis(&self) -> Vec<Matrix> {
        let n = self.quiver.n();
        (0..n)
            .map(|v| {
                let mut stacked: Option<Matrix> = None;
                for a in self.quiver.arrows() {
                    if a.from == v {
                        let m = self.arrow_mat(a).clone();
                        stacked = Some(match stacked {
                            None => m,
                            Some(s) => s.vstack(&m),
                        });
                    }
                }
                match stacked {
                    None => Matrix::identity(self.p, self.dims[v]),
                    Some(s) => s.kernel_basis(),
                }
            })
            .collect()
    }

    /// Multiplicity vector of `soc M`.
    pub fn socle_vector(&self) -> SimpleVector {
        SimpleVector(
            self.socle_basis()
                .iter()
                .map(|b| b.cols() as u64)
                .collect(),
        )
    }

    /// Block-diagonal direct sum. All parts must share quiver and field.
    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        assert!(!parts.is_empty(), "direct sum needs at least one part");
        let q = parts[0].quiver.clone();
        let p = parts[0].p;
        for part in parts {
            assert_eq!(part.quiver, q, "direct sum across different quivers");
            assert_eq!(part.p, p, "direct sum across different fields");
        }
        let n = q.n();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|m| m.dims[v]).sum())
            .collect();
        let mats = q
            .arrows()
            .iter()
            .map(|&a| {
                let mut big = Matrix::zeros(p, dims[a.to], dims[a.from]);
                let mut row_off = 0;
                let mut col_off = 0;
                for part in parts {
                    let m = part.arrow_mat(a);
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            big.set(row_off + i, col_off + j, m.get(i, j));
                        }
                    }
                    row_off += part.dims[a.to];
                    col_off += part.dims[a.from];
                }
                big
            })
            .collect();
        Representation::from_parts(q, p, dims, mats)
    }

    /// The dual module over the opposite quiver: same dimensions, each
    /// arrow matrix transposed and reattached to the reversed arrow.
    /// An involution: dualizing twice restores the original matrices.
    pub fn dualize(&self) -> Representation {
        let op = self.quiver.opposite();
        let mut mats = vec![Matrix::zeros(self.p, 0, 0); op.arrows().len()];
        for a in self.quiver.arrows() {
            let idx = op.arrow_index(a.reversed());
            mats[idx] = self.arrow_mat(a).transpose();
        }
        Representation::from_parts(op, self.p, self.dims.clone(), mats)
    }
}

/// The zero module.
pub fn zero(q: &Quiver, p: u64) -> Representation {
    let dims = vec![0; q.n()];
    let mats = q
        .arrows()
        .iter()
        .map(|_| Matrix::zeros(p, 0, 0))
        .collect();
    Representation::from_parts(q.clone(), p, dims, mats)
}

/// The simple module `S(i)`: one-dimensional at `i`, zero arrows.
pub fn simple(q: &Quiver, p: u64, i: usize) -> Representation {
    assert!(i < q.n());
    let mut dims = vec![0; q.n()];
    dims[i] = 1;
    let mats = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(p, dims[a.to], dims[a.from]))
        .collect();
    Representation::from_parts(q.clone(), p, dims, mats)
}

/// The indecomposable projective `P(i)`: generator at `i`, one basis
/// vector per arrow out of `i`. See [`ProjectiveSum`] for the basis order.
pub fn projective(q: &Quiver, p: u64, i: usize) -> Representation {
    ProjectiveSum::new(q, p, vec![i]).into_rep()
}

/// The indecomposable injective `I(i)`, built as the dual of the
/// projective at `i` over the opposite quiver. Its basis at vertex `l` is
/// the dual basis of that projective: the socle vector first when `l = i`,
/// then one vector per arrow `l → i` in copy order.
pub fn injective(q: &Quiver, p: u64, i: usize) -> Representation {
    projective(&q.opposite(), p, i).dualize()
}

/// `Λ` as a left module over itself: the direct sum of all `P(i)`.
pub fn lambda(q: &Quiver, p: u64) -> Representation {
    let parts: Vec<Representation> = (0..q.n()).map(|i| projective(q, p, i)).collect();
    let refs: Vec<&Representation> = parts.iter().collect();
    Representation::direct_sum(&refs)
}

/// A homomorphism of representations: one matrix per vertex, commuting
/// with every arrow matrix.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    mats: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(
        source: Representation,
        target: Representation,
        mats: Vec<Matrix>,
    ) -> Result<Self, UsageError> {
        if source.quiver != target.quiver {
            return Err(UsageError::new("module map across different quivers"));
        }
        if source.p != target.p {
            return Err(UsageError::new("module map across different fields"));
        }
        if mats.len() != source.quiver.n() {
            return Err(UsageError::new("one matrix per vertex is required"));
        }
        for v in 0..source.quiver.n() {
            if mats[v].rows() != target.dims[v] || mats[v].cols() != source.dims[v] {
                return Err(UsageError::new(format!(
                    "vertex {v} matrix has shape {}x{}, expected {}x{}",
                    mats[v].rows(),
                    mats[v].cols(),
                    target.dims[v],
                    source.dims[v]
                )));
            }
        }
        let map = ModuleMap {
            source,
            target,
            mats,
        };
        map.check_commutes()?;
        Ok(map)
    }

    fn check_commutes(&self) -> Result<(), UsageError> {
        for a in self.source.quiver.arrows() {
            let lhs = self.target.arrow_mat(a).matmul(&self.mats[a.from]);
            let rhs = self.mats[a.to].matmul(self.source.arrow_mat(a));
            if lhs != rhs {
                return Err(UsageError::new(format!(
                    "map does not commute with arrow {}->{} copy {}",
                    a.from, a.to, a.copy
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn vertex_mat(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    pub fn identity(rep: &Representation) -> ModuleMap {
        let mats = rep
            .dims
            .iter()
            .map(|&d| Matrix::identity(rep.p, d))
            .collect();
        ModuleMap {
            source: rep.clone(),
            target: rep.clone(),
            mats,
        }
    }

    /// Composition `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMap) -> ModuleMap {
        assert_eq!(inner.target.dims, self.source.dims, "composition mismatch");
        let mats = (0..self.mats.len())
            .map(|v| self.mats[v].matmul(&inner.mats[v]))
            .collect();
        ModuleMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.cols() == 0 || m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.rows() == 0 || m.rank() == m.rows())
    }

    pub fn is_zero_map(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    /// The kernel as an explicit representation with its inclusion.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let q = &self.source.quiver;
        let p = self.source.p;
        let bases: Vec<Matrix> = self.mats.iter().map(|m| m.kernel_basis()).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&a| {
                // Arrows restrict to the kernel; solve K_v · X = M_α · K_u.
                let img = self.source.arrow_mat(a).matmul(&bases[a.from]);
                bases[a.to]
                    .solve(&img)
                    .expect("arrow image must stay inside the kernel")
            })
            .collect();
        let ker = Representation::from_parts(q.clone(), p, dims, mats);
        let incl = ModuleMap {
            source: ker.clone(),
            target: self.source.clone(),
            mats: bases,
        };
        debug_assert!(incl.check_commutes().is_ok());
        (ker, incl)
    }

    /// The cokernel as an explicit representation with its projection.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let q = &self.target.quiver;
        let p = self.target.p;
        let n = q.n();
        let mut proj = Vec::with_capacity(n);
        let mut section = Vec::with_capacity(n);
        for v in 0..n {
            let image = self.mats[v].column_space_basis();
            let (comp, _) = self.mats[v].column_space_complement();
            let full = image.hstack(&comp);
            let inv = full.inverse().expect("basis completion must be invertible");
            // Quotient coordinates are the complement block of the inverse.
            let r = image.cols();
            let m = self.target.dims[v];
            let mut qv = Matrix::zeros(p, m - r, m);
            for i in 0..m - r {
                for j in 0..m {
                    qv.set(i, j, inv.get(r + i, j));
                }
            }
            proj.push(qv);
            section.push(comp);
        }
        let dims: Vec<usize> = proj.iter().map(|m| m.rows()).collect();
        let mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&a| {
                proj[a.to]
                    .matmul(self.target.arrow_mat(a))
                    .matmul(&section[a.from])
            })
            .collect();
        let coker = Representation::from_parts(q.clone(), p, dims, mats);
        let projection = ModuleMap {
            source: self.target.clone(),
            target: coker.clone(),
            mats: proj,
        };
        debug_assert!(projection.check_commutes().is_ok());
        (coker, projection)
    }
}

/// Basis of `Hom(M, N)`: the solution space of the per-arrow commutation
/// equations `N_α H_u = H_v M_α`, solved as one linear system. The basis
/// order is fixed by the variable layout (vertex-major, row-major), so the
/// result is deterministic.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    assert_eq!(m.quiver, n.quiver, "hom across different quivers");
    assert_eq!(m.p, n.p, "hom across different fields");
    let p = m.p;
    let nv = m.quiver.n();
    let var_offsets: Vec<usize> = {
        let mut offs = Vec::with_capacity(nv + 1);
        let mut acc = 0;
        for v in 0..nv {
            offs.push(acc);
            acc += n.dims[v] * m.dims[v];
        }
        offs.push(acc);
        offs
    };
    let total_vars = var_offsets[nv];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for a in m.quiver.arrows() {
        let (u, v) = (a.from, a.to);
        let na = n.arrow_mat(a);
        let ma = m.arrow_mat(a);
        for out_r in 0..n.dims[v] {
            for out_c in 0..m.dims[u] {
                let mut row = vec![0u64; total_vars];
                // Σ_k N_α[out_r, k] · H_u[k, out_c]
                for k in 0..n.dims[u] {
                    let coeff = na.get(out_r, k);
                    if coeff != 0 {
                        row[var_offsets[u] + k * m.dims[u] + out_c] =
                            (row[var_offsets[u] + k * m.dims[u] + out_c] + coeff) % p;
                    }
                }
                // − Σ_c H_v[out_r, c] · M_α[c, out_c]
                for c in 0..m.dims[v] {
                    let coeff = ma.get(c, out_c);
                    if coeff != 0 {
                        let idx = var_offsets[v] + out_r * m.dims[v] + c;
                        row[idx] = (row[idx] + p - coeff) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let constraint = if rows.is_empty() {
        Matrix::zeros(p, 0, total_vars)
    } else {
        Matrix::from_rows(p, &rows)
    };
    let kernel = constraint.kernel_basis();
    (0..kernel.cols())
        .map(|k| {
            let mats: Vec<Matrix> = (0..nv)
                .map(|v| {
                    let mut h = Matrix::zeros(p, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            h.set(r, c, kernel.get(var_offsets[v] + r * m.dims[v] + c, k));
                        }
                    }
                    h
                })
                .collect();
            ModuleMap {
                source: m.clone(),
                target: n.clone(),
                mats,
            }
        })
        .collect()
}

/// `dim Hom(M, N)` without materializing the basis maps.
pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_space(m, n).len()
}

/// Isomorphism test: equal dimension vectors plus an invertible map found
/// in the hom space. The search is exhaustive when the space is small
/// (`p^dim ≤ 4096`) and falls back to 200 deterministic pseudo-random
/// combinations otherwise. Meant for small modules in tests and checks.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> bool {
    if m.quiver != n.quiver || m.p != n.p || m.dims != n.dims {
        return false;
    }
    if m.dim_total() == 0 {
        return true;
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return false;
    }
    let p = m.p;
    let d = basis.len();
    let invertible = |coeffs: &[u64]| -> bool {
        (0..m.quiver.n()).all(|v| {
            let mut acc = Matrix::zeros(p, n.dims[v], m.dims[v]);
            for (b, &c) in basis.iter().zip(coeffs) {
                if c != 0 {
                    acc = acc.add(&b.mats[v].scale(c));
                }
            }
            acc.is_invertible()
        })
    };
    let space: u128 = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if space <= 4096 {
        let mut coeffs = vec![0u64; d];
        loop {
            // odometer over F_p^d, skipping the zero combination
            let mut carry = true;
            for c in coeffs.iter_mut() {
                if carry {
                    *c += 1;
                    if *c == p {
                        *c = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                return false; // wrapped: exhausted
            }
            if invertible(&coeffs) {
                return true;
            }
        }
    } else {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1505);
        for _ in 0..200 {
            let coeffs: Vec<u64> = (0..d).map(|_| rng.random_range(0..p)).collect();
            if coeffs.iter().any(|&c| c != 0) && invertible(&coeffs) {
                return true;
            }
        }
        false
    }
}

/// Minimal projective cover `⊕ P(top M) ↠ M`: generators are unit vectors
/// completing the radical at each vertex, so the cover is deterministic.
pub fn projective_cover(m: &Representation) -> (ProjectiveSum, ModuleMap) {
    let q = &m.quiver;
    let p = m.p;
    let rad = m.radical_basis();
    let mut labels = Vec::new();
    let mut gens: Vec<(usize, usize)> = Vec::new(); // (vertex, unit index)
    for v in 0..q.n() {
        let (_, free) = rad[v].column_space_complement();
        for idx in free {
            labels.push(v);
            gens.push((v, idx));
        }
    }
    let cover_source = ProjectiveSum::new(q, p, labels);
    let mut mats: Vec<Matrix> = (0..q.n())
        .map(|v| Matrix::zeros(p, m.dims[v], cover_source.rep().dims()[v]))
        .collect();
    for v in 0..q.n() {
        for (col, basis) in cover_source.layout(v).iter().enumerate() {
            match *basis {
                PBasis::Gen { summand } => {
                    let (gv, gidx) = gens[summand];
                    debug_assert_eq!(gv, v);
                    mats[v].set(gidx, col, 1);
                }
                PBasis::Arr { summand, arrow } => {
                    let (gv, gidx) = gens[summand];
                    debug_assert_eq!(arrow.from, gv);
                    debug_assert_eq!(arrow.to, v);
                    let am = m.arrow_mat(arrow);
                    for r in 0..m.dims[v] {
                        mats[v].set(r, col, am.get(r, gidx));
                    }
                }
            }
        }
    }
    let cover = ModuleMap {
        source: cover_source.rep().clone(),
        target: m.clone(),
        mats,
    };
    debug_assert!(cover.check_commutes().is_ok());
    debug_assert!(cover.is_surjective());
    (cover_source, cover)
}

/// The syzygy `Ω M`: kernel of the projective cover, with its inclusion.
/// Over a radical-square-zero algebra the kernel sits inside the radical
/// of the cover, hence is semisimple; that is asserted.
pub fn syzygy_rep(m: &Representation) -> (Representation, ModuleMap) {
    let (_, cover) = projective_cover(m);
    let (ker, incl) = cover.kernel();
    assert!(
        ker.is_semisimple(),
        "syzygy of a module over a square-zero radical must be semisimple"
    );
    (ker, incl)
}

/// Minimal injective envelope `M ↪ ⊕ I(j)^{soc_j}`.
///
/// For each socle copy a functional on `M_j` extending the dual socle
/// basis is chosen; the map into the corresponding copy of `I(j)` sends
/// `x ∈ M_l` to the functional's values on `x` and on all `M_α x` for
/// arrows `α: l → j`, written in the dual basis of `I(j)` (socle slot
/// first, then arrow slots in copy order).
pub fn injective_envelope(m: &Representation) -> ModuleMap {
    let q = &m.quiver;
    let p = m.p;
    let soc = m.socle_basis();
    // Functionals per vertex: first s_j rows of the inverse of the socle
    // basis completed by unit vectors.
    let mut functionals: Vec<Matrix> = Vec::with_capacity(q.n());
    for j in 0..q.n() {
        let s = soc[j].cols();
        if s == 0 {
            functionals.push(Matrix::zeros(p, 0, m.dims[j]));
            continue;
        }
        let (comp, _) = soc[j].column_space_complement();
        let full = soc[j].hstack(&comp);
        let inv = full.inverse().expect("socle completion must be invertible");
        let mut phi = Matrix::zeros(p, s, m.dims[j]);
        for r in 0..s {
            for c in 0..m.dims[j] {
                phi.set(r, c, inv.get(r, c));
            }
        }
        functionals.push(phi);
    }
    // Envelope target: ⊕_j I(j)^{s_j} in vertex order.
    let mut parts: Vec<Representation> = Vec::new();
    let mut part_info: Vec<(usize, usize)> = Vec::new(); // (socle vertex j, copy r)
    for j in 0..q.n() {
        let inj = injective(q, p, j);
        for r in 0..soc[j].cols() {
            parts.push(inj.clone());
            part_info.push((j, r));
        }
    }
    let target = if parts.is_empty() {
        zero(q, p)
    } else {
        let refs: Vec<&Representation> = parts.iter().collect();
        Representation::direct_sum(&refs)
    };
    let mut mats: Vec<Matrix> = (0..q.n())
        .map(|l| Matrix::zeros(p, target.dims[l], m.dims[l]))
        .collect();
    for l in 0..q.n() {
        let mut row_off = 0;
        for (part, &(j, r)) in parts.iter().zip(&part_info) {
            // Basis of I(j) at vertex l: socle slot first when l == j,
            // then one slot per arrow l → j in copy order.
            let phi_row = r;
            let mut slot = 0usize;
            if l == j {
                for c in 0..m.dims[l] {
                    mats[l].set(row_off + slot, c, functionals[j].get(phi_row, c));
                }
                slot += 1;
            }
            for copy in 0..q.entry(l, j) as usize {
                let a = Arrow {
                    from: l,
                    to: j,
                    copy,
                };
                let am = m.arrow_mat(a);
                // φ(M_α x): row vector φ composed with the arrow matrix.
                for c in 0..m.dims[l] {
                    let mut acc = 0u64;
                    for k in 0..m.dims[j] {
                        acc = (acc + functionals[j].get(phi_row, k) * am.get(k, c)) % p;
                    }
                    mats[l].set(row_off + slot, c, acc);
                }
                slot += 1;
            }
            debug_assert_eq!(slot, part.dims[l]);
            row_off += part.dims[l];
        }
    }
    let env = ModuleMap::new(m.clone(), target, mats)
        .expect("envelope construction must commute with arrows");
    debug_assert!(env.is_injective());
    env
}

/// A deterministic pseudo-random module in radical-split coordinates:
/// per-vertex top and radical parts with arrows sending top to radical,
/// which satisfies the square-zero relations by construction. Every
/// module over `kQ/J²` has this shape, so the family is exhaustive up to
/// isomorphism as the size bounds grow.
pub fn random_module<R: Rng>(
    q: &Quiver,
    p: u64,
    rng: &mut R,
    max_top: usize,
    max_rad: usize,
) -> Representation {
    loop {
        let top: Vec<usize> = (0..q.n()).map(|_| rng.random_range(0..=max_top)).collect();
        let rad: Vec<usize> = (0..q.n()).map(|_| rng.random_range(0..=max_rad)).collect();
        let dims: Vec<usize> = top.iter().zip(&rad).map(|(t, r)| t + r).collect();
        if dims.iter().all(|&d| d == 0) {
            continue;
        }
        // Basis order per vertex: top part first, then radical part.
        let mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&a| {
                let mut m = Matrix::zeros(p, dims[a.to], dims[a.from]);
                for i in 0..rad[a.to] {
                    for j in 0..top[a.from] {
                        m.set(top[a.to] + i, j, rng.random_range(0..p));
                    }
                }
                m
            })
            .collect();
        return Representation::from_parts(q.clone(), p, dims, mats);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn projective_shapes_on_delta() {
        let d32 = Quiver::delta(3, 2);
        let p2 = projective(&d32, 5, 2);
        assert_eq!(p2.dims(), &[2, 0, 1]);
        assert_eq!(p2.top_vector(), SimpleVector(vec![0, 0, 1]));
        assert_eq!(p2.socle_vector(), SimpleVector(vec![2, 0, 0]));
        let i0 = injective(&d32, 5, 0);
        assert_eq!(i0.dims(), &[1, 0, 2]);
        assert_eq!(i0.socle_vector(), SimpleVector(vec![1, 0, 0]));
        assert_eq!(i0.top_vector(), SimpleVector(vec![0, 0, 2]));
    }

    #[test]
    fn sink_projective_is_simple() {
        let a2 = Quiver::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let p1 = projective(&a2, 5, 1);
        assert_eq!(p1.dims(), simple(&a2, 5, 1).dims());
        assert!(is_isomorphic(&p1, &simple(&a2, 5, 1)));
    }

    #[test]
    fn simple_top_socle() {
        let d32 = Quiver::delta(3, 2);
        let s1 = simple(&d32, 5, 1);
        assert_eq!(s1.top_vector(), SimpleVector::unit(3, 1));
        assert_eq!(s1.socle_vector(), SimpleVector::unit(3, 1));
        assert!(s1.radical_basis().iter().all(|b| b.cols() == 0));
    }

    #[test]
    fn radical_sits_inside_socle() {
        let d32 = Quiver::delta(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let m = random_module(&d32, 5, &mut rng, 2, 2);
            let rad = m.radical_basis();
            let soc = m.socle_basis();
            for v in 0..3 {
                let joined = soc[v].hstack(&rad[v]);
                assert_eq!(joined.rank(), soc[v].cols(), "rad not inside soc");
            }
        }
    }

    #[test]
    fn syzygies_of_simples_match_rows() {
        let d32 = Quiver::delta(3, 2);
        let (omega, incl) = syzygy_rep(&simple(&d32, 5, 0));
        assert_eq!(omega.dims(), &[0, 1, 0]); // Ω S(0) = S(1)
        assert!(incl.is_injective());
        let (omega2, _) = syzygy_rep(&simple(&d32, 5, 2));
        assert_eq!(omega2.dims(), &[2, 0, 0]); // Ω S(2) = S(0)²
        let (zero_syz, _) = syzygy_rep(&projective(&d32, 5, 1));
        assert!(zero_syz.is_zero());
    }

    #[test]
    fn hom_dimensions_on_delta() {
        let d32 = Quiver::delta(3, 2);
        let p0 = projective(&d32, 5, 0);
        assert_eq!(hom_dim(&simple(&d32, 5, 1), &p0), 1);
        assert_eq!(hom_dim(&p0, &p0), 1);
        assert_eq!(hom_dim(&simple(&d32, 5, 0), &simple(&d32, 5, 1)), 0);
    }

    #[test]
    fn duality_is_involutive_and_swaps_proj_inj() {
        let d32 = Quiver::delta(3, 2);
        for i in 0..3 {
            let p = projective(&d32, 5, i);
            let dd = p.dualize().dualize();
            assert_eq!(dd, p);
            // D P_Q(i) is the injective at i over the opposite quiver.
            let dual = p.dualize();
            let op_inj = injective(&d32.opposite(), 5, i);
            assert!(is_isomorphic(&dual, &op_inj));
        }
        let s = simple(&d32, 5, 1);
        assert_eq!(s.dualize().dims(), s.dims());
    }

    #[test]
    fn envelope_is_injective_with_simple_socle_count() {
        let d32 = Quiver::delta(3, 2);
        let p2 = projective(&d32, 5, 2);
        let env = injective_envelope(&p2);
        assert!(env.is_injective());
        // soc P(2) = S(0)², so the envelope is I(0)².
        assert_eq!(env.target().dims(), &[2, 0, 4]);
        let s0 = simple(&d32, 5, 0);
        let env = injective_envelope(&s0);
        assert_eq!(env.target().dims(), injective(&d32, 5, 0).dims());
    }

    #[test]
    fn kernel_cokernel_ranks() {
        let d32 = Quiver::delta(3, 2);
        let p2 = projective(&d32, 5, 2);
        let env = injective_envelope(&p2);
        let (ker, _) = env.kernel();
        assert!(ker.is_zero());
        let (coker, proj) = env.cokernel();
        assert!(proj.is_surjective());
        assert_eq!(
            coker.dim_total(),
            env.target().dim_total() - p2.dim_total()
        );
    }

    #[test]
    fn iso_detects_relabelled_but_not_different() {
        let d32 = Quiver::delta(3, 2);
        let s0 = simple(&d32, 5, 0);
        let s1 = simple(&d32, 5, 1);
        assert!(is_isomorphic(&s0, &s0.clone()));
        assert!(!is_isomorphic(&s0, &s1));
        let p0 = projective(&d32, 5, 0);
        assert!(!is_isomorphic(&p0, &s0));
    }

    #[test]
    fn random_modules_satisfy_relations() {
        let q = Quiver::new(vec![vec![1, 2], vec![1, 0]]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let m = random_module(&q, 2, &mut rng, 2, 2);
            m.validate().unwrap();
        }
    }
}
