//! Direct sums of indecomposable projectives with a structured basis.
//!
//! The basis of `⊕_r P(a_r)` at a vertex `v` is laid out summand-major:
//! for each summand `r` in order, the generator slot when `a_r = v`,
//! followed by one slot per arrow `a_r → v` in `(from, to, copy)` order.
//! Resolutions and path matrices rely on this layout to translate between
//! column vectors and formal combinations of paths.

use crate::linalg::Matrix;
use crate::quiver::{Arrow, Quiver};
use crate::rep::Representation;

/// One structured basis element of a sum of projectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PBasis {
    /// The generator `e` of summand `summand`.
    Gen { summand: usize },
    /// The image `α · e` of the generator of `summand` under `arrow`.
    Arr { summand: usize, arrow: Arrow },
}

/// `⊕_r P(labels[r])` together with its basis layout.
#[derive(Debug, Clone)]
pub struct ProjectiveSum {
    labels: Vec<usize>,
    layout: Vec<Vec<PBasis>>,
    /// Per summand: (vertex, index into that vertex's layout) of the generator.
    gen_pos: Vec<(usize, usize)>,
    rep: Representation,
}

impl ProjectiveSum {
    pub fn new(q: &Quiver, p: u64, labels: Vec<usize>) -> Self {
        let n = q.n();
        let mut layout: Vec<Vec<PBasis>> = vec![Vec::new(); n];
        let mut gen_pos = vec![(0usize, 0usize); labels.len()];
        for (r, &a) in labels.iter().enumerate() {
            assert!(a < n, "summand label out of range");
            gen_pos[r] = (a, layout[a].len());
            layout[a].push(PBasis::Gen { summand: r });
            for to in 0..n {
                for copy in 0..q.entry(a, to) as usize {
                    layout[to].push(PBasis::Arr {
                        summand: r,
                        arrow: Arrow { from: a, to, copy },
                    });
                }
            }
        }
        let dims: Vec<usize> = layout.iter().map(|l| l.len()).collect();
        // Arrow β: u → v sends each generator slot at u to its `Arr` slot
        // at v and kills everything else.
        let mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&b| {
                let mut m = Matrix::zeros(p, dims[b.to], dims[b.from]);
                for (col, &basis) in layout[b.from].iter().enumerate() {
                    if let PBasis::Gen { summand } = basis {
                        let row = layout[b.to]
                            .iter()
                            .position(|&x| x == PBasis::Arr { summand, arrow: b })
                            .expect("generator image slot must exist");
                        m.set(row, col, 1);
                    }
                }
                m
            })
            .collect();
        let rep = Representation::from_parts(q.clone(), p, dims, mats);
        ProjectiveSum {
            labels,
            layout,
            gen_pos,
            rep,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn summands(&self) -> usize {
        self.labels.len()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn into_rep(self) -> Representation {
        self.rep
    }

    /// Basis layout at a vertex.
    pub fn layout(&self, v: usize) -> &[PBasis] {
        &self.layout[v]
    }

    /// Vertex and in-vertex index of a summand's generator.
    pub fn gen_pos(&self, summand: usize) -> (usize, usize) {
        self.gen_pos[summand]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::SimpleVector;

    #[test]
    fn layout_matches_projective_structure() {
        let d32 = Quiver::delta(3, 2);
        let ps = ProjectiveSum::new(&d32, 5, vec![2, 0]);
        // P(2) ⊕ P(0): dims (2+1, 1, 1) -> vertex 0 has the two arrow
        // slots of P(2) plus the generator of P(0).
        assert_eq!(ps.rep().dims(), &[3, 1, 1]);
        assert_eq!(ps.gen_pos(0), (2, 0));
        assert_eq!(ps.gen_pos(1), (0, 2));
        assert_eq!(
            ps.rep().top_vector(),
            SimpleVector(vec![1, 0, 1])
        );
        ps.rep().validate().unwrap();
    }

    #[test]
    fn loops_put_generator_and_arrow_slots_at_one_vertex() {
        let d12 = Quiver::delta(1, 2);
        let ps = ProjectiveSum::new(&d12, 5, vec![0]);
        assert_eq!(ps.rep().dims(), &[3]);
        assert_eq!(ps.layout(0).len(), 3);
        assert!(matches!(ps.layout(0)[0], PBasis::Gen { summand: 0 }));
        ps.rep().validate().unwrap();
    }
}
