//! Field generators and the reduced coordinates of their jet spaces.

use crate::index::IndexSpec;
use crate::linalg::{self, SRow};
use crate::scalar::GaussianRational;
use crate::tensor::{multi_indices, permutations_of, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Boson,
    Fermion,
}

impl Parity {
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Boson
        } else {
            Parity::Fermion
        }
    }
}

/// Structural symmetry of a generator's own indices, enforced by the reduced
/// basis rather than by rewriting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// Totally antisymmetric in all index slots.
    Antisym,
    /// Totally antisymmetric self-dual 3-form (six-dimensional).
    AntisymSelfDual,
}

#[derive(Clone, Debug)]
pub struct FieldGenerator {
    pub id: String,
    pub spec: IndexSpec,
    pub parity: Parity,
    pub constraint: Constraint,
}

impl FieldGenerator {
    pub fn new(
        id: &str,
        spec: IndexSpec,
        parity: Parity,
        constraint: Constraint,
    ) -> FieldGenerator {
        FieldGenerator {
            id: id.to_string(),
            spec,
            parity,
            constraint,
        }
    }

    pub fn dense_dim(&self) -> usize {
        self.spec.total_len()
    }
}

/// Exact reduced basis for a generator's value space: dense = V * reduced,
/// with W a left inverse of V and V*W the structural projector.
#[derive(Clone, Debug)]
pub struct GenBasis {
    pub dense_dim: usize,
    pub red_dim: usize,
    /// `v[dense][red]`
    pub v: Vec<Vec<GaussianRational>>,
    /// `w[red][dense]`
    pub w: Vec<Vec<GaussianRational>>,
}

impl GenBasis {
    fn identity(dim: usize) -> GenBasis {
        let eye = |n: usize| -> Vec<Vec<GaussianRational>> {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            if r == c {
                                GaussianRational::ONE
                            } else {
                                GaussianRational::ZERO
                            }
                        })
                        .collect()
                })
                .collect()
        };
        GenBasis {
            dense_dim: dim,
            red_dim: dim,
            v: eye(dim),
            w: eye(dim),
        }
    }

    /// Builds V from the independent columns of an idempotent projector and
    /// solves for the matching left inverse with V*W = P.
    fn from_projector(p: &[Vec<GaussianRational>]) -> GenBasis {
        let dense_dim = p.len();
        // Independent columns of P form V.
        let mut rref = linalg::Rref::new(dense_dim);
        let mut cols: Vec<usize> = Vec::new();
        for c in 0..dense_dim {
            let col: SRow = (0..dense_dim)
                .filter(|&r| !p[r][c].is_zero())
                .map(|r| (r, p[r][c].clone()))
                .collect();
            if rref.insert(col) {
                cols.push(c);
            }
        }
        let red_dim = cols.len();
        let v: Vec<Vec<GaussianRational>> = (0..dense_dim)
            .map(|r| cols.iter().map(|&c| p[r][c].clone()).collect())
            .collect();

        // Pivot rows making V[T,:] invertible, found by echelonizing V^T.
        let mut t_rref = linalg::Rref::new(dense_dim);
        for r in 0..red_dim {
            let row: SRow = (0..dense_dim)
                .filter(|&d| !v[d][r].is_zero())
                .map(|d| (d, v[d][r].clone()))
                .collect();
            t_rref.insert(row);
        }
        let t_rows = t_rref.pivot_cols.clone();
        assert_eq!(t_rows.len(), red_dim, "projector basis must have full rank");

        // Invert V[T,:] by Gauss-Jordan.
        let mut m: Vec<Vec<GaussianRational>> = t_rows
            .iter()
            .map(|&d| (0..red_dim).map(|r| v[d][r].clone()).collect())
            .collect();
        let mut inv: Vec<Vec<GaussianRational>> = (0..red_dim)
            .map(|r| {
                (0..red_dim)
                    .map(|c| {
                        if r == c {
                            GaussianRational::ONE
                        } else {
                            GaussianRational::ZERO
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..red_dim {
            let pivot = (col..red_dim)
                .find(|&r| !m[r][col].is_zero())
                .expect("invertible pivot block");
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let s = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x = &*x * &s;
            }
            for x in inv[col].iter_mut() {
                *x = &*x * &s;
            }
            for r in 0..red_dim {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..red_dim {
                    let d = &f * &m[col][c];
                    m[r][c] -= &d;
                    let d = &f * &inv[col][c];
                    inv[r][c] -= &d;
                }
            }
        }
        // W = inv(V[T,:]) * P[T,:].
        let w: Vec<Vec<GaussianRational>> = (0..red_dim)
            .map(|r| {
                (0..dense_dim)
                    .map(|d| {
                        let mut acc = GaussianRational::ZERO;
                        for (k, &trow) in t_rows.iter().enumerate() {
                            if inv[r][k].is_zero() || p[trow][d].is_zero() {
                                continue;
                            }
                            let x = &inv[r][k] * &p[trow][d];
                            acc += &x;
                        }
                        acc
                    })
                    .collect()
            })
            .collect();

        // Sanity: W V = I and V W = P.
        for r in 0..red_dim {
            for c in 0..red_dim {
                let mut acc = GaussianRational::ZERO;
                for d in 0..dense_dim {
                    if w[r][d].is_zero() || v[d][c].is_zero() {
                        continue;
                    }
                    let x = &w[r][d] * &v[d][c];
                    acc += &x;
                }
                let expect = if r == c {
                    GaussianRational::ONE
                } else {
                    GaussianRational::ZERO
                };
                assert_eq!(acc, expect, "left inverse failed");
            }
        }
        GenBasis {
            dense_dim,
            red_dim,
            v,
            w,
        }
    }

    /// The structural basis for a generator, given an optional self-dual
    /// projector builder for the 3-form case.
    pub fn for_generator(
        gen: &FieldGenerator,
        selfdual_projector: Option<&dyn Fn(&Tensor) -> Tensor>,
    ) -> GenBasis {
        match gen.constraint {
            Constraint::None => GenBasis::identity(gen.dense_dim()),
            Constraint::Antisym | Constraint::AntisymSelfDual => {
                let dims = gen.spec.dims();
                let rank = dims.len();
                let dim = gen.dense_dim();
                // Columns of the projector: antisymmetrize (and self-dual
                // project) each dense unit vector.
                let mut p: Vec<Vec<GaussianRational>> =
                    vec![vec![GaussianRational::ZERO; dim]; dim];
                let norm = GaussianRational::frac(1, (1..=rank as i64).product());
                for (col, idx) in multi_indices(&dims).enumerate() {
                    let mut t = Tensor::zeros(gen.spec.clone());
                    for (perm, sign) in permutations_of(rank) {
                        let mut pidx = vec![0usize; rank];
                        for (slot, &src) in perm.iter().enumerate() {
                            pidx[slot] = idx[src];
                        }
                        // Repeated indices collapse; accumulate.
                        let cur = t.get(&pidx).clone();
                        t.set(
                            &pidx,
                            &cur + &(&norm * &GaussianRational::from_int(sign as i64)),
                        );
                    }
                    let t = match gen.constraint {
                        Constraint::AntisymSelfDual => {
                            (selfdual_projector.expect("self-dual projector required"))(&t)
                        }
                        _ => t,
                    };
                    for (r, val) in t.data().iter().enumerate() {
                        p[r][col] = val.clone();
                    }
                }
                GenBasis::from_projector(&p)
            }
        }
    }
}

/// Multisets of size `k` over `0..dim`, as sorted tuples, lexicographic.
pub fn multisets(dim: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fill(dim, 0, 0, &mut cur, &mut out);
    return out;

    fn fill(dim: usize, pos: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in min..dim {
            cur[pos] = v;
            fill(dim, pos + 1, v, cur, out);
        }
    }
}

/// Reduced description of the jets of one generator at a fixed derivative
/// order: index = multiset slot * gen_red + gen component.
#[derive(Clone, Debug)]
pub struct JetSpace {
    pub order: usize,
    pub st_dim: usize,
    pub multisets: Vec<Vec<usize>>,
    /// multiset lookup: sorted tuple -> slot
    pub multiset_index: std::collections::HashMap<Vec<usize>, usize>,
    pub gen_red: usize,
    pub red_dim: usize,
}

impl JetSpace {
    pub fn new(st_dim: usize, order: usize, gen_red: usize) -> JetSpace {
        let ms = multisets(st_dim, order);
        let multiset_index = ms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let red_dim = ms.len() * gen_red;
        JetSpace {
            order,
            st_dim,
            multisets: ms,
            multiset_index,
            gen_red,
            red_dim,
        }
    }

    pub fn index(&self, multiset_slot: usize, gen_component: usize) -> usize {
        multiset_slot * self.gen_red + gen_component
    }

    /// Slot of the multiset obtained by inserting `d` into multiset `m`.
    pub fn parent_insert(&self, smaller: &JetSpace, m: usize, d: usize) -> usize {
        let mut tuple = smaller.multisets[m].clone();
        let pos = tuple.partition_point(|&x| x <= d);
        tuple.insert(pos, d);
        self.multiset_index[&tuple]
    }
}
