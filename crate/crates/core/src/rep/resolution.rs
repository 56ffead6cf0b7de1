//! Minimal projective resolutions and Ext via `Hom(−, N)`.
//!
//! The distinguishing feature of radical-square-zero algebras is that the
//! kernel of a minimal cover is semisimple and equals the whole radical of
//! the covering projective from the second step on. The resolution
//! therefore splits into an honest linear-algebra step (the cover of the
//! module itself and its kernel) followed by purely structural steps whose
//! covering maps send each generator to one arrow slot of its parent
//! summand. `Hom(P(a), N) ≅ N_a` on generators turns the dual complex
//! into explicit matrices whose ranks give every Ext dimension.

use crate::ext::SimpleVector;
use crate::linalg::Matrix;
use crate::quiver::Arrow;
use crate::rep::{ModuleMap, PBasis, ProjectiveSum, Representation};

/// A growing minimal projective resolution `… → P_1 → P_0 → M → 0`.
///
/// Step 0 stores the cover and its kernel explicitly; deeper steps store
/// only summand labels and parent pairings. Exactness and minimality are
/// structural here, and the test suites re-verify them numerically on
/// materialized prefixes.
pub struct Resolution {
    module: Representation,
    p0: ProjectiveSum,
    cover: ModuleMap,
    /// Per-vertex kernel basis of the cover, in `P_0` coordinates.
    kernel_cols: Vec<Matrix>,
    /// Summand labels of every computed term.
    labels: Vec<Vec<usize>>,
    /// For steps `k ≥ 2`: generator `g` of `P_k` covers the arrow slot
    /// `(parent summand of P_{k−1}, arrow)`.
    parents: Vec<Vec<(usize, Arrow)>>,
}

impl Resolution {
    pub fn new(m: &Representation) -> Self {
        let (p0, cover) = crate::rep::projective_cover(m);
        let kernel_cols: Vec<Matrix> = (0..m.quiver().n())
            .map(|v| cover.vertex_mat(v).kernel_basis())
            .collect();
        let labels0 = p0.labels().to_vec();
        let mut labels1 = Vec::new();
        for (v, cols) in kernel_cols.iter().enumerate() {
            for _ in 0..cols.cols() {
                labels1.push(v);
            }
        }
        Resolution {
            module: m.clone(),
            p0,
            cover,
            kernel_cols,
            labels: vec![labels0, labels1],
            parents: vec![Vec::new(), Vec::new()],
        }
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    /// Number of computed terms (steps `0 ..< computed_terms()`).
    pub fn computed_terms(&self) -> usize {
        self.labels.len()
    }

    /// Ensures terms `P_0 ..= P_step` exist.
    pub fn extend_to(&mut self, step: usize) {
        while self.labels.len() <= step {
            let k = self.labels.len();
            let prev = &self.labels[k - 1];
            let q = self.module.quiver();
            let mut labels = Vec::new();
            let mut parents = Vec::new();
            for (r, &a) in prev.iter().enumerate() {
                for to in 0..q.n() {
                    for copy in 0..q.entry(a, to) as usize {
                        labels.push(to);
                        parents.push((r, Arrow { from: a, to, copy }));
                    }
                }
            }
            self.labels.push(labels);
            self.parents.push(parents);
        }
    }

    /// Multiplicity vector of the top of `P_k`.
    pub fn term_top(&self, k: usize) -> SimpleVector {
        let n = self.module.quiver().n();
        let mut v = vec![0u64; n];
        for &a in &self.labels[k] {
            v[a] += 1;
        }
        SimpleVector(v)
    }

    /// Total dimension of `P_k` (each summand `P(a)` has `1 + out-degree`).
    pub fn term_total_dim(&self, k: usize) -> usize {
        let q = self.module.quiver();
        self.labels[k]
            .iter()
            .map(|&a| 1 + q.out_degree(a) as usize)
            .sum()
    }

    /// Extends while the cumulative dimension of all terms stays within
    /// `budget`; returns the largest fully computed step.
    pub fn extend_within(&mut self, step: usize, budget: usize) -> usize {
        let mut total: usize = (0..self.labels.len())
            .map(|k| self.term_total_dim(k))
            .sum();
        while self.labels.len() <= step {
            let k = self.labels.len();
            self.extend_to(k);
            total += self.term_total_dim(k);
            if total > budget {
                return k.saturating_sub(1).min(step);
            }
        }
        step
    }

    /// `dim Hom(P_k, N)` in the generator coordinates `⊕_r N_{a_r}`; also
    /// the row count of the dual-complex matrix at step `k`, which lets
    /// callers budget rank computations before running them.
    pub fn dual_space_dim(&self, k: usize, n: &Representation) -> usize {
        self.labels[k].iter().map(|&a| n.dims()[a]).sum()
    }

    /// Matrix of `Hom(P_{k−1}, N) → Hom(P_k, N)`, precomposition with the
    /// connecting map, in generator coordinates.
    fn dual_step_matrix(&self, k: usize, n: &Representation) -> Matrix {
        assert!(k >= 1 && k < self.labels.len());
        let p = self.module.p();
        let nd = n.dims();
        let row_offsets: Vec<usize> = {
            let mut offs = Vec::with_capacity(self.labels[k].len() + 1);
            let mut acc = 0;
            for &a in &self.labels[k] {
                offs.push(acc);
                acc += nd[a];
            }
            offs.push(acc);
            offs
        };
        let col_offsets: Vec<usize> = {
            let mut offs = Vec::with_capacity(self.labels[k - 1].len() + 1);
            let mut acc = 0;
            for &a in &self.labels[k - 1] {
                offs.push(acc);
                acc += nd[a];
            }
            offs.push(acc);
            offs
        };
        let rows = *row_offsets.last().unwrap();
        let cols = *col_offsets.last().unwrap();
        let mut t = Matrix::zeros(p, rows, cols);
        let mut add_block = |ro: usize, co: usize, block: &Matrix, coeff: u64| {
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    let v = block.get(i, j) * coeff % p;
                    if v != 0 {
                        t.add_at(ro + i, co + j, v);
                    }
                }
            }
        };
        if k == 1 {
            // Generators of P_1 are the kernel columns of the cover,
            // decomposed over the structured basis of P_0.
            let mut g = 0usize;
            for v in 0..self.module.quiver().n() {
                let cols_v = &self.kernel_cols[v];
                for c in 0..cols_v.cols() {
                    for (idx, &basis) in self.p0.layout(v).iter().enumerate() {
                        let coeff = cols_v.get(idx, c);
                        if coeff == 0 {
                            continue;
                        }
                        match basis {
                            PBasis::Gen { summand } => {
                                let id = Matrix::identity(p, nd[v]);
                                add_block(row_offsets[g], col_offsets[summand], &id, coeff);
                            }
                            PBasis::Arr { summand, arrow } => {
                                add_block(
                                    row_offsets[g],
                                    col_offsets[summand],
                                    n.arrow_mat(arrow),
                                    coeff,
                                );
                            }
                        }
                    }
                    g += 1;
                }
            }
        } else {
            for (g, &(r, arrow)) in self.parents[k].iter().enumerate() {
                add_block(row_offsets[g], col_offsets[r], n.arrow_mat(arrow), 1);
            }
        }
        t
    }

    /// `dim Ext^i(M, N)` for `0 ≤ i ≤ max_i`, all at once. Degree 0 is
    /// `dim Hom(M, N)` by left exactness.
    pub fn ext_dims(&mut self, n: &Representation, max_i: usize) -> Vec<usize> {
        assert_eq!(self.module.quiver(), n.quiver(), "ext across quivers");
        assert_eq!(self.module.p(), n.p(), "ext across fields");
        self.extend_to(max_i + 1);
        let mut ranks = vec![0usize; max_i + 2]; // ranks[k] = rank T_k, T_0 = 0
        for k in 1..=max_i + 1 {
            ranks[k] = self.dual_step_matrix(k, n).rank();
        }
        (0..=max_i)
            .map(|i| {
                let d = self.hom_dim_at(i, n);
                if i == 0 {
                    d - ranks[1]
                } else {
                    d - ranks[i] - ranks[i + 1]
                }
            })
            .collect()
    }

    /// The cover `δ_0 : P_0 → M`.
    pub fn cover(&self) -> &ModuleMap {
        &self.cover
    }

    pub fn p0(&self) -> &ProjectiveSum {
        &self.p0
    }

    /// Per-vertex kernel basis of the cover in `P_0` coordinates; the
    /// generators of `P_1`, in order.
    pub fn kernel_cols(&self) -> &[Matrix] {
        &self.kernel_cols
    }

    /// Materializes `P_k` as an explicit representation.
    pub fn materialize_term(&self, k: usize) -> ProjectiveSum {
        ProjectiveSum::new(
            self.module.quiver(),
            self.module.p(),
            self.labels[k].clone(),
        )
    }

    /// Materializes the connecting map `δ_k : P_k → P_{k−1}` (`k ≥ 1`) as
    /// an explicit module map; the constructor re-checks commutation.
    pub fn materialize_map(&self, k: usize) -> ModuleMap {
        assert!(k >= 1 && k < self.labels.len());
        let p = self.module.p();
        let q = self.module.quiver();
        let source = self.materialize_term(k);
        let target = self.materialize_term(k - 1);
        // Image of each generator of P_k inside P_{k-1}, per vertex.
        let gen_image = |g: usize| -> (usize, Vec<u64>) {
            if k == 1 {
                // Generator order is vertex-major over kernel columns.
                let mut seen = 0usize;
                for v in 0..q.n() {
                    let cols = self.kernel_cols[v].cols();
                    if g < seen + cols {
                        return (v, self.kernel_cols[v].col(g - seen));
                    }
                    seen += cols;
                }
                unreachable!("generator index out of range");
            }
            let (r, arrow) = self.parents[k][g];
            let v = arrow.to;
            let mut col = vec![0u64; target.rep().dims()[v]];
            let slot = target
                .layout(v)
                .iter()
                .position(|&b| b == PBasis::Arr { summand: r, arrow })
                .expect("parent arrow slot must exist");
            col[slot] = 1;
            (v, col)
        };
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
            for (col_idx, &basis) in source.layout(v).iter().enumerate() {
                match basis {
                    PBasis::Gen { summand } => {
                        let (gv, col) = gen_image(summand);
                        debug_assert_eq!(gv, v);
                        for (row, &x) in col.iter().enumerate() {
                            mats[v].set(row, col_idx, x);
                        }
                    }
                    PBasis::Arr { summand, arrow } => {
                        // δ(α·e) = α·δ(e), computed in P_{k−1}.
                        let (gv, col) = gen_image(summand);
                        debug_assert_eq!(gv, arrow.from);
                        let img = target
                            .rep()
                            .arrow_mat(arrow)
                            .matmul(&Matrix::column(p, &col));
                        for row in 0..img.rows() {
                            mats[v].set(row, col_idx, img.get(row, 0));
                        }
                    }
                }
            }
        }
        ModuleMap::new(source.into_rep(), target.into_rep(), mats)
            .expect("connecting map must commute with arrows")
    }
}

/// One-shot `dim Ext^i(M, N)`; reuse a [`Resolution`] when several degrees
/// or several targets are needed.
pub fn ext_dim(m: &Representation, n: &Representation, i: usize) -> usize {
    Resolution::new(m).ext_dims(n, i)[i]
}
