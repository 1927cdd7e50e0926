//! Six-dimensional chiral gamma matrices and their identity suite.
//!
//! The representation is built explicitly: six antisymmetric 4x4 matrices
//! spanning the second exterior power of the spinor space, normalized so the
//! Pfaffian pairing reproduces the mostly-minus metric, with the tilde family
//! obtained by raising both spinor indices with the spinor Levi-Civita
//! tensor. The builder validates every structural invariant before returning;
//! a candidate that fails any of them is rejected with the violated invariant
//! named.

use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec, Variance};
use crate::linalg;
use crate::matrix::{antisymmetrize_labels, Mat};
use crate::report::{ResidualReport, ResidualTracker};
use crate::scalar::GaussianRational;
use crate::tensor::{
    brace_project, contract, epsilon_tensor, kron_delta, levi_civita, metric, multi_indices,
    symplectic_eps, BraceMode, Tensor,
};

const D: usize = 6;
const S: usize = 4;

#[derive(Clone, Debug)]
pub struct GammaRep6 {
    /// `(gamma^A)_{ab}`, antisymmetric, both spinor slots lower.
    pub gamma: Vec<Tensor>,
    /// `(gammatilde^A)^{ab}`, both spinor slots upper.
    pub gamma_tilde: Vec<Tensor>,
    pub eta_down: Tensor,
    pub eta_up: Tensor,
    pub eps6_up: Tensor,
    pub eps6_down: Tensor,
    /// Spinor Levi-Civita `eps_{abcd}` with `eps_{0123} = 1`.
    pub eps_spinor_down: Tensor,
    /// Partner `eps^{abcd}` with `eps^{0123} = 1`, fixed so that both
    /// raising/lowering relations between the two gamma families hold.
    pub eps_spinor_up: Tensor,
    pub symplectic_up: Tensor,
    pub symplectic_down: Tensor,
    pub n: u8,
}

fn spinor_pair_spec(variance: Variance) -> IndexSpec {
    IndexSpec::new(vec![
        IndexSlot::new(IndexKind::Spinor6, variance),
        IndexSlot::new(IndexKind::Spinor6, variance),
    ])
}

/// Antisymmetric unit matrix `E_{ab}` (entry (a,b) = +1, (b,a) = -1) scaled
/// by a Gaussian rational.
fn antisym_unit(a: usize, b: usize, c: GaussianRational) -> Tensor {
    let mut t = Tensor::zeros(spinor_pair_spec(Variance::Lower));
    t.set(&[a, b], c.clone());
    t.set(&[b, a], -&c);
    t
}

fn eta_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

impl GammaRep6 {
    pub fn gamma_mat(&self, a: usize) -> Mat {
        Mat::from_tensor(&self.gamma[a])
    }

    pub fn gamma_tilde_mat(&self, a: usize) -> Mat {
        Mat::from_tensor(&self.gamma_tilde[a])
    }

    /// Mixed-height Levi-Civita `eps_{ABC}^{DEF}` as a rank-6 tensor.
    pub fn eps_mixed_down_up(&self) -> Tensor {
        let spec = IndexSpec::new(vec![
            IndexSlot::down(IndexKind::Spacetime6),
            IndexSlot::down(IndexKind::Spacetime6),
            IndexSlot::down(IndexKind::Spacetime6),
            IndexSlot::up(IndexKind::Spacetime6),
            IndexSlot::up(IndexKind::Spacetime6),
            IndexSlot::up(IndexKind::Spacetime6),
        ]);
        let eps = &self.eps6_down;
        Tensor::from_fn(spec, |idx| {
            let sign = eta_sign(idx[3]) * eta_sign(idx[4]) * eta_sign(idx[5]);
            match sign {
                1 => eps.get(idx).clone(),
                _ => -eps.get(idx),
            }
        })
    }

    /// Note recording the orientation choices the builder fixed.
    pub fn orientation_note(&self) -> &'static str {
        "eps^{012345}=+1, eps_{012345}=-1; spinor eps_{0123}=eps^{0123}=+1 \
         (0-indexed), fixed so both index-raising relations between the two \
         gamma families hold"
    }
}

/// Builds the validated six-dimensional representation. The gamma sector is
/// independent of `n`; `n` only sizes the symplectic structure.
pub fn build_gamma6(n: u8) -> Result<GammaRep6> {
    if n == 0 {
        return Err(Error::Config("symplectic rank N must be >= 1".into()));
    }
    let one = GaussianRational::ONE;
    let i = GaussianRational::I;

    // Hyperbolic pairs of the Pfaffian pairing on antisymmetric 4x4
    // matrices: (E01,E23), (E02,E13), (E03,E12). Signs and i factors chosen
    // to give Pf = -1 on the timelike direction and Pf = +1 on the five
    // spacelike ones; the overall sign of gamma^5 fixes the orientation so
    // that the duality identities hold with the stated epsilon conventions.
    let gamma = vec![
        antisym_unit(0, 1, one.clone()).add(&antisym_unit(2, 3, -&one)), // gamma^0
        antisym_unit(0, 1, one.clone()).add(&antisym_unit(2, 3, one.clone())), // gamma^1
        antisym_unit(0, 2, one.clone()).add(&antisym_unit(1, 3, -&one)), // gamma^2
        antisym_unit(0, 2, i.clone()).add(&antisym_unit(1, 3, i.clone())), // gamma^3
        antisym_unit(0, 3, i.clone()).add(&antisym_unit(1, 2, -&i)),     // gamma^4
        antisym_unit(0, 3, -&one).add(&antisym_unit(1, 2, -&one)),       // gamma^5
    ];

    let eps_spinor_down = levi_civita(IndexKind::Spinor6, Variance::Lower, 1);
    let eps_spinor_up = levi_civita(IndexKind::Spinor6, Variance::Upper, 1);

    // gammatilde^A raised from gamma^A: (gt^A)^{ab} = 1/2 eps^{abcd} (g^A)_{cd}.
    let half = GaussianRational::frac(1, 2);
    let gamma_tilde: Vec<Tensor> = gamma
        .iter()
        .map(|g| {
            contract(&eps_spinor_up, g, &[(2, 0), (3, 1)])
                .expect("raising contraction")
                .scale(&half)
        })
        .collect();

    let (symplectic_up, symplectic_down) = symplectic_eps(n);

    let rep = GammaRep6 {
        gamma,
        gamma_tilde,
        eta_down: metric(IndexKind::Spacetime6, Variance::Lower),
        eta_up: metric(IndexKind::Spacetime6, Variance::Upper),
        eps6_up: epsilon_tensor(IndexKind::Spacetime6, Variance::Upper)?,
        eps6_down: epsilon_tensor(IndexKind::Spacetime6, Variance::Lower)?,
        eps_spinor_down,
        eps_spinor_up,
        symplectic_up,
        symplectic_down,
        n,
    };
    validate(&rep)?;
    Ok(rep)
}

fn validate(rep: &GammaRep6) -> Result<()> {
    let fail = |what: &str| Err(Error::Representation(what.to_string()));

    for a in 0..D {
        let g = rep.gamma_mat(a);
        let gt = rep.gamma_tilde_mat(a);
        for r in 0..S {
            for c in 0..S {
                if g.at(r, c) != &(-g.at(c, r)) || gt.at(r, c) != &(-gt.at(c, r)) {
                    return fail("gamma matrices must be antisymmetric");
                }
            }
        }
    }

    // Clifford relation.
    for a in 0..D {
        for b in 0..D {
            let m = rep
                .gamma_mat(a)
                .mul(&rep.gamma_tilde_mat(b))
                .add(&rep.gamma_mat(b).mul(&rep.gamma_tilde_mat(a)));
            let eta = if a == b {
                GaussianRational::from_int(2 * eta_sign(a))
            } else {
                GaussianRational::ZERO
            };
            if m.sub(&Mat::identity(S).scale(&eta)).is_zero() == false {
                return fail("Clifford relation gamma gt + gt gamma = 2 eta");
            }
        }
    }

    // Hermiticity: gamma^0 (gamma^A)^dag gamma^0 = gamma^A and
    // (gamma^A)^dag = eta_{AA} gammatilde^A.
    let g0 = rep.gamma_mat(0);
    for a in 0..D {
        let dag = rep.gamma_mat(a).dagger();
        if !g0.mul(&dag).mul(&g0).sub(&rep.gamma_mat(a)).is_zero() {
            return fail("hermiticity conjugation by gamma^0");
        }
        let gt_low = rep
            .gamma_tilde_mat(a)
            .scale(&GaussianRational::from_int(eta_sign(a)));
        if !dag.sub(&gt_low).is_zero() {
            return fail("hermiticity dagger = lowered gammatilde");
        }
    }

    // Lowering with the spinor epsilon must return gamma from gammatilde.
    let half = GaussianRational::frac(1, 2);
    for a in 0..D {
        let lowered = contract(&rep.eps_spinor_down, &rep.gamma_tilde[a], &[(2, 0), (3, 1)])
            .expect("lowering contraction")
            .scale(&half);
        if lowered != rep.gamma[a] {
            return fail("spinor epsilon duality between gamma and gammatilde");
        }
    }

    let prod = contract(&rep.symplectic_up, &rep.symplectic_down, &[(1, 0)])
        .expect("symplectic contraction");
    if prod != kron_delta(IndexKind::Symplectic(rep.n)) {
        return fail("symplectic structure times inverse = identity");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Identity catalog.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity6 {
    Algebra,
    Tr2,
    Tr4,
    Tr6,
    Herm,
    AntisymComplete,
    Dual3,
    SymComplete,
    BasisComplete,
    Gtg,
    Minus,
    Plus,
    Minus2,
    L8,
    L6,
    L7,
    GgdA,
    GgdB,
    SixGamma,
    Epep6,
}

pub const IDENTITY6_ALL: [Identity6; 20] = [
    Identity6::Algebra,
    Identity6::Tr2,
    Identity6::Tr4,
    Identity6::Tr6,
    Identity6::Herm,
    Identity6::AntisymComplete,
    Identity6::Dual3,
    Identity6::SymComplete,
    Identity6::BasisComplete,
    Identity6::Gtg,
    Identity6::Minus,
    Identity6::Plus,
    Identity6::Minus2,
    Identity6::L8,
    Identity6::L6,
    Identity6::L7,
    Identity6::GgdA,
    Identity6::GgdB,
    Identity6::SixGamma,
    Identity6::Epep6,
];

impl Identity6 {
    pub fn id(self) -> &'static str {
        match self {
            Identity6::Algebra => "ALGEBRA",
            Identity6::Tr2 => "TR2",
            Identity6::Tr4 => "TR4",
            Identity6::Tr6 => "TR6",
            Identity6::Herm => "HERM",
            Identity6::AntisymComplete => "ANTISYM_COMPLETE",
            Identity6::Dual3 => "DUAL3",
            Identity6::SymComplete => "SYM_COMPLETE",
            Identity6::BasisComplete => "BASIS_COMPLETE",
            Identity6::Gtg => "GTG",
            Identity6::Minus => "MINUS",
            Identity6::Plus => "PLUS",
            Identity6::Minus2 => "MINUS2",
            Identity6::L8 => "L8",
            Identity6::L6 => "L6",
            Identity6::L7 => "L7",
            Identity6::GgdA => "GGD_A",
            Identity6::GgdB => "GGD_B",
            Identity6::SixGamma => "SIXGAMMA",
            Identity6::Epep6 => "EPEP6",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Identity6::Algebra => "Clifford anticommutator equals twice the metric",
            Identity6::Tr2 => "two-gamma trace",
            Identity6::Tr4 => "four-gamma trace",
            Identity6::Tr6 => "antisymmetrized six-gamma trace",
            Identity6::Herm => "hermiticity relations",
            Identity6::AntisymComplete => "antisymmetric-matrix completeness",
            Identity6::Dual3 => "duality of antisymmetrized triple products",
            Identity6::SymComplete => "symmetric-matrix completeness",
            Identity6::BasisComplete => "general 4x4 basis completeness",
            Identity6::Gtg => "spinor-epsilon raising and lowering",
            Identity6::Minus => "antisymmetric part of pair-product times gamma",
            Identity6::Plus => "symmetric part of pair-product times gamma",
            Identity6::Minus2 => "antisymmetric part of pair times triple product",
            Identity6::L8 => "single-gamma contraction rearrangement",
            Identity6::L6 => "pair-product contraction with one gamma",
            Identity6::L7 => "triple-pair contraction",
            Identity6::GgdA => "triple product times raised gamma, first form",
            Identity6::GgdB => "raised gamma times triple product, second form",
            Identity6::SixGamma => "sum of the two triple-product forms",
            Identity6::Epep6 => "contraction of two Levi-Civita tensors on two indices",
        }
    }

    pub fn from_id(s: &str) -> Result<Identity6> {
        IDENTITY6_ALL
            .iter()
            .copied()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::Catalog(format!("unknown identity id {s}")))
    }
}

/// Cached matrix products shared by the evaluators.
struct Tables {
    g: Vec<Mat>,
    gt: Vec<Mat>,
    g_low: Vec<Mat>,
    gt_low: Vec<Mat>,
    /// `gamma^A gammatilde^B`.
    p2: Vec<Vec<Mat>>,
    /// `gamma^{[A} gammatilde^{B]}`.
    g2: Vec<Vec<Mat>>,
    /// `gamma_{[A} gammatilde_{B]}`.
    g2_low: Vec<Vec<Mat>>,
    /// `gamma^A gammatilde^B gamma^C` (no antisymmetrization).
    p3: Vec<Vec<Vec<Mat>>>,
    /// `gamma^{[A} gammatilde^B gamma^{C]}`.
    g3: Vec<Vec<Vec<Mat>>>,
    /// `gammatilde^{[A} gamma^B gammatilde^{C]}`.
    g3t: Vec<Vec<Vec<Mat>>>,
    g3_low: Vec<Vec<Vec<Mat>>>,
    g3t_low: Vec<Vec<Vec<Mat>>>,
    /// `gamma_E gammatilde_F`.
    pl: Vec<Vec<Mat>>,
    eps_up: Vec<i64>,
    eps_down: Vec<i64>,
    eps_sp_up: Vec<i64>,
    eps_sp_down: Vec<i64>,
}

fn eps_to_i64(t: &Tensor) -> Vec<i64> {
    t.data()
        .iter()
        .map(|v| {
            if v.is_zero() {
                0
            } else if v == &GaussianRational::ONE {
                1
            } else {
                -1
            }
        })
        .collect()
}

fn eps6_at(e: &[i64], idx: &[usize]) -> i64 {
    let mut f = 0usize;
    for &i in idx {
        f = f * D + i;
    }
    e[f]
}

impl Tables {
    fn build(rep: &GammaRep6) -> Tables {
        let g: Vec<Mat> = (0..D).map(|a| rep.gamma_mat(a)).collect();
        let gt: Vec<Mat> = (0..D).map(|a| rep.gamma_tilde_mat(a)).collect();
        let sgn = |a: usize| GaussianRational::from_int(eta_sign(a));
        let g_low: Vec<Mat> = (0..D).map(|a| g[a].scale(&sgn(a))).collect();
        let gt_low: Vec<Mat> = (0..D).map(|a| gt[a].scale(&sgn(a))).collect();

        let p2: Vec<Vec<Mat>> = (0..D)
            .map(|a| (0..D).map(|b| g[a].mul(&gt[b])).collect())
            .collect();
        let half = GaussianRational::frac(1, 2);
        let g2: Vec<Vec<Mat>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| p2[a][b].sub(&p2[b][a]).scale(&half))
                    .collect()
            })
            .collect();
        let g2_low: Vec<Vec<Mat>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| g2[a][b].scale(&(&sgn(a) * &sgn(b))))
                    .collect()
            })
            .collect();
        let p3: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| (0..D).map(|c| p2[a][b].mul(&g[c])).collect())
                    .collect()
            })
            .collect();
        let g3: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| {
                        (0..D)
                            .map(|c| {
                                antisymmetrize_labels(&[a, b, c], |l| {
                                    p3[l[0]][l[1]][l[2]].clone()
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let p3t: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| {
                        (0..D)
                            .map(|c| gt[a].mul(&g[b]).mul(&gt[c]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let g3t: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| {
                        (0..D)
                            .map(|c| {
                                antisymmetrize_labels(&[a, b, c], |l| {
                                    p3t[l[0]][l[1]][l[2]].clone()
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let tri_sign = |a: usize, b: usize, c: usize| &(&sgn(a) * &sgn(b)) * &sgn(c);
        let g3_low: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| {
                        (0..D)
                            .map(|c| g3[a][b][c].scale(&tri_sign(a, b, c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let g3t_low: Vec<Vec<Vec<Mat>>> = (0..D)
            .map(|a| {
                (0..D)
                    .map(|b| {
                        (0..D)
                            .map(|c| g3t[a][b][c].scale(&tri_sign(a, b, c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let pl: Vec<Vec<Mat>> = (0..D)
            .map(|e| (0..D).map(|f| g_low[e].mul(&gt_low[f])).collect())
            .collect();

        Tables {
            g,
            gt,
            g_low,
            gt_low,
            p2,
            g2,
            g2_low,
            p3,
            g3,
            g3t,
            g3_low,
            g3t_low,
            pl,
            eps_up: eps_to_i64(&rep.eps6_up),
            eps_down: eps_to_i64(&rep.eps6_down),
            eps_sp_up: eps_to_i64(&rep.eps_spinor_up),
            eps_sp_down: eps_to_i64(&rep.eps_spinor_down),
        }
    }

    fn eta(&self, a: usize, b: usize) -> i64 {
        if a == b {
            eta_sign(a)
        } else {
            0
        }
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &[[i64; 4]; 4]) -> i64 {
    let mut acc = 0i64;
    for c in 0..4 {
        let mut sub = [[0i64; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for c2 in 0..4 {
                if c2 == c {
                    continue;
                }
                sub[r - 1][cc] = m[r][c2];
                cc += 1;
            }
        }
        let term = m[0][c] * det3(sub);
        acc += if c % 2 == 0 { term } else { -term };
    }
    acc
}

/// Record all entries of a matrix residual under an outer label tuple.
fn record_mat(tr: &mut ResidualTracker, outer: &[usize], m: &Mat) {
    let mut tuple = outer.to_vec();
    tuple.push(0);
    tuple.push(0);
    let k = tuple.len();
    for r in 0..m.n {
        for c in 0..m.n {
            tuple[k - 2] = r;
            tuple[k - 1] = c;
            tr.record(&tuple, m.at(r, c));
        }
    }
}

pub fn verify_identity6(rep: &GammaRep6, id: Identity6) -> ResidualReport {
    let t = Tables::build(rep);
    let mut tr = ResidualTracker::new(id.id());
    let two = GaussianRational::from_int(2);
    match id {
        Identity6::Algebra => {
            for a in 0..D {
                for b in 0..D {
                    let m = t.p2[a][b].add(&t.p2[b][a]).sub(
                        &Mat::identity(S).scale(&GaussianRational::from_int(2 * t.eta(a, b))),
                    );
                    record_mat(&mut tr, &[a, b], &m);
                }
            }
        }
        Identity6::Tr2 => {
            for a in 0..D {
                for b in 0..D {
                    let r = &t.p2[a][b].trace() - &GaussianRational::from_int(4 * t.eta(a, b));
                    tr.record(&[a, b], &r);
                }
            }
        }
        Identity6::Tr4 => {
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        for d in 0..D {
                            let rhs = 4 * (t.eta(a, b) * t.eta(c, d) - t.eta(a, c) * t.eta(b, d)
                                + t.eta(b, c) * t.eta(d, a));
                            let r = &t.p2[a][b].trace_mul(&t.p2[c][d])
                                - &GaussianRational::from_int(rhs);
                            tr.record(&[a, b, c, d], &r);
                        }
                    }
                }
            }
        }
        Identity6::Tr6 => {
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        for d in 0..D {
                            for e in 0..D {
                                for f in 0..D {
                                    // eps^{ABC}_{DEF}: all-upper epsilon with the
                                    // last three lowered by the diagonal metric.
                                    let eps = eps6_at(&t.eps_up, &[a, b, c, d, e, f])
                                        * eta_sign(d)
                                        * eta_sign(e)
                                        * eta_sign(f);
                                    let inc = [
                                        [delta(a, d), delta(a, e), delta(a, f)],
                                        [delta(b, d), delta(b, e), delta(b, f)],
                                        [delta(c, d), delta(c, e), delta(c, f)],
                                    ];
                                    let rhs = 4 * eps - 4 * det3(inc);
                                    let r = &t.g3[a][b][c].trace_mul(&t.g3t_low[d][e][f])
                                        - &GaussianRational::from_int(rhs);
                                    tr.record(&[a, b, c, d, e, f], &r);
                                }
                            }
                        }
                    }
                }
            }
        }
        Identity6::Herm => {
            for a in 0..D {
                let dag = t.g[a].dagger();
                let m0 = t.g[0].mul(&dag).mul(&t.g[0]).sub(&t.g[a]);
                record_mat(&mut tr, &[a, 0], &m0);
                let m1 = dag.sub(&t.gt_low[a]);
                record_mat(&mut tr, &[a, 1], &m1);
            }
        }
        Identity6::AntisymComplete => {
            for al in 0..S {
                for be in 0..S {
                    for ga in 0..S {
                        for de in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for a in 0..D {
                                let p = t.g[a].at(al, be) * t.gt_low[a].at(ga, de);
                                lhs += &p;
                            }
                            let rhs = 2 * (delta(al, de) * delta(be, ga)
                                - delta(al, ga) * delta(be, de));
                            let r = &lhs - &GaussianRational::from_int(rhs);
                            tr.record(&[al, be, ga, de], &r);
                        }
                    }
                }
            }
        }
        Identity6::Dual3 => {
            let sixth = GaussianRational::frac(1, 6);
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        // gamma triple: LHS + (1/6) eps^{ABC}_{DEF} gamma^D gt^E gamma^F.
                        let mut acc = Mat::zero(S);
                        let mut acc_t = Mat::zero(S);
                        for d in 0..D {
                            for e in 0..D {
                                for f in 0..D {
                                    let eps = eps6_at(&t.eps_up, &[a, b, c, d, e, f])
                                        * eta_sign(d)
                                        * eta_sign(e)
                                        * eta_sign(f);
                                    if eps == 0 {
                                        continue;
                                    }
                                    let w = GaussianRational::from_int(eps);
                                    acc = acc.add(&t.p3[d][e][f].scale(&w));
                                    acc_t = acc_t.add(
                                        &t.gt[d].mul(&t.g[e]).mul(&t.gt[f]).scale(&w),
                                    );
                                }
                            }
                        }
                        let m0 = t.g3[a][b][c].add(&acc.scale(&sixth));
                        record_mat(&mut tr, &[0, a, b, c], &m0);
                        let m1 = t.g3t[a][b][c].sub(&acc_t.scale(&sixth));
                        record_mat(&mut tr, &[1, a, b, c], &m1);
                    }
                }
            }
        }
        Identity6::SymComplete => {
            for al in 0..S {
                for be in 0..S {
                    for ga in 0..S {
                        for de in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for a in 0..D {
                                for b in 0..D {
                                    for c in 0..D {
                                        let x = t.g3[a][b][c].at(al, be);
                                        if x.is_zero() {
                                            continue;
                                        }
                                        let p = x * t.g3t_low[a][b][c].at(ga, de);
                                        lhs += &p;
                                    }
                                }
                            }
                            let rhs = -24
                                * (delta(al, ga) * delta(be, de) + delta(al, de) * delta(be, ga));
                            let r = &lhs - &GaussianRational::from_int(rhs);
                            tr.record(&[al, be, ga, de], &r);
                        }
                    }
                }
            }
        }
        Identity6::BasisComplete => {
            let eighth = GaussianRational::frac(-1, 8);
            let quarter = GaussianRational::frac(1, 4);
            for al in 0..S {
                for be in 0..S {
                    for ga in 0..S {
                        for de in 0..S {
                            let mut sum = GaussianRational::ZERO;
                            for a in 0..D {
                                for b in 0..D {
                                    let x = t.g2[a][b].at(al, be);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let p = x * t.g2_low[a][b].at(ga, de);
                                    sum += &p;
                                }
                            }
                            let lhs = &(&sum * &eighth)
                                + &(&quarter
                                    * &GaussianRational::from_int(delta(al, be) * delta(ga, de)));
                            let r = &lhs
                                - &GaussianRational::from_int(delta(al, de) * delta(ga, be));
                            tr.record(&[al, be, ga, de], &r);
                        }
                    }
                }
            }
        }
        Identity6::Gtg => {
            let half = GaussianRational::frac(1, 2);
            for a in 0..D {
                for al in 0..S {
                    for be in 0..S {
                        let mut low = GaussianRational::ZERO;
                        let mut up = GaussianRational::ZERO;
                        for ga in 0..S {
                            for de in 0..S {
                                let ed = t.eps_sp_down[((al * S + be) * S + ga) * S + de];
                                if ed != 0 {
                                    let p = &GaussianRational::from_int(ed) * t.gt[a].at(ga, de);
                                    low += &p;
                                }
                                let eu = t.eps_sp_up[((al * S + be) * S + ga) * S + de];
                                if eu != 0 {
                                    let p = &GaussianRational::from_int(eu) * t.g[a].at(ga, de);
                                    up += &p;
                                }
                            }
                        }
                        let r0 = t.g[a].at(al, be) - &(&half * &low);
                        tr.record(&[0, a, al, be], &r0);
                        let r1 = t.gt[a].at(al, be) - &(&half * &up);
                        tr.record(&[1, a, al, be], &r1);
                    }
                }
            }
        }
        Identity6::Minus => {
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        let m = t.g2[a][b].mul(&t.g[c]);
                        let lhs = m.sub(&m.transpose());
                        let rhs = t.g[a]
                            .scale(&GaussianRational::from_int(2 * t.eta(b, c)))
                            .sub(&t.g[b].scale(&GaussianRational::from_int(2 * t.eta(c, a))));
                        record_mat(&mut tr, &[a, b, c], &lhs.sub(&rhs));
                    }
                }
            }
        }
        Identity6::Plus => {
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        let m = t.g2[a][b].mul(&t.g[c]);
                        let lhs = m.add(&m.transpose());
                        let rhs = t.g3[a][b][c].scale(&two);
                        record_mat(&mut tr, &[a, b, c], &lhs.sub(&rhs));
                    }
                }
            }
        }
        Identity6::Minus2 => {
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        for d in 0..D {
                            for e in 0..D {
                                let m = t.g2[a][b].mul(&t.g3_low[c][d][e]);
                                let lhs = m.sub(&m.transpose());
                                // 2 eps^{AB}_{CDEF} gamma^F
                                let mut rhs = Mat::zero(S);
                                for f in 0..D {
                                    let eps = eps6_at(&t.eps_up, &[a, b, c, d, e, f])
                                        * eta_sign(c)
                                        * eta_sign(d)
                                        * eta_sign(e)
                                        * eta_sign(f);
                                    if eps != 0 {
                                        rhs = rhs.add(
                                            &t.g[f].scale(&GaussianRational::from_int(2 * eps)),
                                        );
                                    }
                                }
                                // -12 delta^A_{[C} delta^B_D gamma_{E]}
                                let anti = antisymmetrize_labels(&[c, d, e], |l| {
                                    t.g_low[l[2]].scale(&GaussianRational::from_int(
                                        delta(a, l[0]) * delta(b, l[1]),
                                    ))
                                });
                                let rhs = rhs.sub(&anti.scale(&GaussianRational::from_int(12)));
                                record_mat(&mut tr, &[a, b, c, d, e], &lhs.sub(&rhs));
                            }
                        }
                    }
                }
            }
        }
        Identity6::L8 => {
            // Cache gamma_A gammatilde^B.
            let q: Vec<Vec<Mat>> = (0..D)
                .map(|a| (0..D).map(|b| t.g_low[a].mul(&t.gt[b])).collect())
                .collect();
            for b in 0..D {
                for al in 0..S {
                    for be in 0..S {
                        for ga in 0..S {
                            for de in 0..S {
                                let mut lhs = GaussianRational::ZERO;
                                for a in 0..D {
                                    let x = t.g[a].at(al, be);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let p = x * q[a][b].at(ga, de);
                                    lhs += &p;
                                }
                                let mut rhs = GaussianRational::ZERO;
                                if de == al {
                                    rhs += &t.g[b].at(be, ga).scale_int(2);
                                }
                                if de == be {
                                    rhs += &t.g[b].at(ga, al).scale_int(2);
                                }
                                if de == ga {
                                    rhs += &t.g[b].at(al, be).scale_int(2);
                                }
                                let r = &lhs - &rhs;
                                tr.record(&[b, al, be, ga, de], &r);
                            }
                        }
                    }
                }
            }
        }
        Identity6::L6 => {
            for a in 0..D {
                for al in 0..S {
                    for be in 0..S {
                        for ga in 0..S {
                            for de in 0..S {
                                let mut lhs = GaussianRational::ZERO;
                                for b in 0..D {
                                    let x = t.g2[a][b].at(al, be);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let p = x * t.g_low[b].at(ga, de);
                                    lhs += &p;
                                }
                                let mut rhs = GaussianRational::ZERO;
                                if be == ga {
                                    rhs += &t.g[a].at(al, de).scale_int(2);
                                }
                                if be == de {
                                    rhs -= &t.g[a].at(al, ga).scale_int(2);
                                }
                                if al == be {
                                    rhs -= &t.g[a].at(ga, de).clone();
                                }
                                let r = &lhs - &rhs;
                                tr.record(&[a, al, be, ga, de], &r);
                            }
                        }
                    }
                }
            }
        }
        Identity6::L7 => {
            for c in 0..D {
                for al in 0..S {
                    for be in 0..S {
                        for ga in 0..S {
                            for de in 0..S {
                                let mut lhs = GaussianRational::ZERO;
                                for a in 0..D {
                                    for b in 0..D {
                                        let x = t.g3[a][b][c].at(al, be);
                                        if x.is_zero() {
                                            continue;
                                        }
                                        let p = x * t.g2_low[a][b].at(ga, de);
                                        lhs += &p;
                                    }
                                }
                                let mut rhs = GaussianRational::ZERO;
                                if de == al {
                                    rhs += &t.g[c].at(be, ga).scale_int(4);
                                }
                                if de == be {
                                    rhs += &t.g[c].at(al, ga).scale_int(4);
                                }
                                let r = &lhs - &rhs;
                                tr.record(&[c, al, be, ga, de], &r);
                            }
                        }
                    }
                }
            }
        }
        Identity6::GgdA | Identity6::GgdB | Identity6::SixGamma => {
            let half = GaussianRational::frac(1, 2);
            for a in 0..D {
                for b in 0..D {
                    for c in 0..D {
                        for d in 0..D {
                            // 3 gamma_{[A} gt_B delta_{C]}^D
                            let anti = antisymmetrize_labels(&[a, b, c], |l| {
                                if l[2] == d {
                                    t.pl[l[0]][l[1]].clone()
                                } else {
                                    Mat::zero(S)
                                }
                            });
                            // (1/2) eps_{ABC}^{DEF} gamma_E gt_F
                            let mut epsterm = Mat::zero(S);
                            for e in 0..D {
                                for f in 0..D {
                                    let eps = eps6_at(&t.eps_down, &[a, b, c, d, e, f])
                                        * eta_sign(d)
                                        * eta_sign(e)
                                        * eta_sign(f);
                                    if eps != 0 {
                                        epsterm = epsterm.add(
                                            &t.pl[e][f].scale(&GaussianRational::from_int(eps)),
                                        );
                                    }
                                }
                            }
                            let epsterm = epsterm.scale(&half);
                            let left1 = t.g3_low[a][b][c].mul(&t.gt[d]);
                            let left2 = t.g[d].mul(&t.g3t_low[a][b][c]);
                            let m = match id {
                                Identity6::GgdA => left1
                                    .sub(&anti.scale(&GaussianRational::from_int(3)))
                                    .add(&epsterm),
                                Identity6::GgdB => left2
                                    .sub(&anti.scale(&GaussianRational::from_int(3)))
                                    .sub(&epsterm),
                                _ => anti
                                    .scale(&GaussianRational::from_int(6))
                                    .sub(&left1)
                                    .sub(&left2),
                            };
                            record_mat(&mut tr, &[a, b, c, d], &m);
                        }
                    }
                }
            }
        }
        Identity6::Epep6 => {
            // Integer fast path: both Levi-Civita tensors have entries 0, +-1
            // and the right side is a 4x4 incidence determinant.
            let mut tuple = [0usize; 8];
            for a in 0..D {
                tuple[0] = a;
                for b in 0..D {
                    tuple[1] = b;
                    for c in 0..D {
                        tuple[2] = c;
                        for d in 0..D {
                            tuple[3] = d;
                            let degenerate = a == b
                                || a == c
                                || a == d
                                || b == c
                                || b == d
                                || c == d;
                            for e in 0..D {
                                tuple[4] = e;
                                for f in 0..D {
                                    tuple[5] = f;
                                    for g_ in 0..D {
                                        tuple[6] = g_;
                                        for h in 0..D {
                                            tuple[7] = h;
                                            let mut lhs = 0i64;
                                            if !degenerate {
                                                for i in 0..D {
                                                    for j in (i + 1)..D {
                                                        let x = eps6_at(
                                                            &t.eps_down,
                                                            &[a, b, c, d, i, j],
                                                        );
                                                        if x == 0 {
                                                            continue;
                                                        }
                                                        let y = eps6_at(
                                                            &t.eps_up,
                                                            &[e, f, g_, h, i, j],
                                                        );
                                                        lhs += 2 * x * y;
                                                    }
                                                }
                                            }
                                            let inc = [
                                                [delta(a, e), delta(a, f), delta(a, g_), delta(a, h)],
                                                [delta(b, e), delta(b, f), delta(b, g_), delta(b, h)],
                                                [delta(c, e), delta(c, f), delta(c, g_), delta(c, h)],
                                                [delta(d, e), delta(d, f), delta(d, g_), delta(d, h)],
                                            ];
                                            let rhs = -2 * det4(&inc);
                                            let r = GaussianRational::from_int(lhs - rhs);
                                            tr.record(&tuple, &r);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    tr.finish()
}

/// Splits an antisymmetric rank-3 spacetime tensor into its self-dual and
/// anti-self-dual parts: `H_+- = (H +- dual(H)) / 2` with
/// `dual(H)_{ABC} = (1/3!) eps_{ABC}^{DEF} H_{DEF}`.
pub fn project_selfdual3(rep: &GammaRep6, h: &Tensor) -> Result<(Tensor, Tensor)> {
    let expected = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6); 3]);
    if h.spec() != &expected {
        return Err(Error::Shape(
            "self-dual projection expects a rank-3 lower spacetime tensor".into(),
        ));
    }
    let anti = brace_project(h, &[0, 1, 2], BraceMode::Antisym)?;
    if &anti != h {
        return Err(Error::Shape(
            "self-dual projection requires a totally antisymmetric input".into(),
        ));
    }
    let eps = rep.eps_mixed_down_up();
    let dual = contract(&eps, h, &[(3, 0), (4, 1), (5, 2)])?
        .scale(&GaussianRational::frac(1, 6));
    let half = GaussianRational::frac(1, 2);
    let plus = h.add(&dual).scale(&half);
    let minus = h.sub(&dual).scale(&half);
    Ok((plus, minus))
}

/// Dimension of the self-dual subspace of antisymmetric 3-forms, computed by
/// exact elimination on the projector image.
pub fn selfdual_dimension(rep: &GammaRep6) -> usize {
    let spec = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6); 3]);
    let mut rows = Vec::new();
    for a in 0..D {
        for b in (a + 1)..D {
            for c in (b + 1)..D {
                let mut basis = Tensor::zeros(spec.clone());
                for (perm, sign) in crate::tensor::permutations_of(3) {
                    let idx = [[a, b, c][perm[0]], [a, b, c][perm[1]], [a, b, c][perm[2]]];
                    basis.set(&idx, GaussianRational::from_int(sign as i64));
                }
                let (plus, _) = project_selfdual3(rep, &basis).expect("projection");
                rows.push(linalg::dense_to_sparse(plus.data()));
            }
        }
    }
    linalg::rank_of(rows, spec.total_len())
}

impl GaussianRational {
    fn scale_int(&self, k: i64) -> GaussianRational {
        self * &GaussianRational::from_int(k)
    }
}

// Iterator helper used by evaluators that enumerate full index grids.
#[allow(dead_code)]
fn grid(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    multi_indices(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep() -> GammaRep6 {
        build_gamma6(1).expect("representation must validate")
    }

    #[test]
    fn build_validates() {
        let r = rep();
        assert_eq!(r.gamma.len(), 6);
        assert!(build_gamma6(0).is_err());
        // N=2, N=3 share the gamma sector.
        assert!(build_gamma6(2).is_ok());
        assert!(build_gamma6(3).is_ok());
    }

    #[test]
    fn clifford_examples() {
        let r = rep();
        // gamma^0 gt^1 + gamma^1 gt^0 = 0
        let m = r
            .gamma_mat(0)
            .mul(&r.gamma_tilde_mat(1))
            .add(&r.gamma_mat(1).mul(&r.gamma_tilde_mat(0)));
        assert!(m.is_zero());
        // antisymmetry of gamma^3 over all 16 entries
        let g3 = r.gamma_mat(3);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g3.at(a, b), &(-g3.at(b, a)));
            }
        }
        // tr(gamma^0 gt^0) = 4
        assert_eq!(
            r.gamma_mat(0).mul(&r.gamma_tilde_mat(0)).trace(),
            GaussianRational::from_int(4)
        );
        // tr(gamma^5 gt^5) = -4  (TR2 at A=B=5)
        assert_eq!(
            r.gamma_mat(5).mul(&r.gamma_tilde_mat(5)).trace(),
            GaussianRational::from_int(-4)
        );
    }

    #[test]
    fn contracted_clifford_gives_six_identity() {
        // gamma^A gt_A = 6 * 1 (contract the Clifford relation with eta).
        let r = rep();
        let mut acc = Mat::zero(4);
        for a in 0..6 {
            let sign = GaussianRational::from_int(super::eta_sign(a));
            acc = acc.add(&r.gamma_mat(a).mul(&r.gamma_tilde_mat(a)).scale(&sign));
        }
        assert_eq!(
            acc.sub(&Mat::identity(4).scale(&GaussianRational::from_int(6))),
            Mat::zero(4)
        );
    }

    #[test]
    fn tr4_spot_value() {
        // (A,B,C,D) = (0,1,0,1): RHS oracle
        // 4(eta^{01}eta^{01} - eta^{00}eta^{11} + eta^{10}eta^{10}) = 4.
        let r = rep();
        let lhs = r
            .gamma_mat(0)
            .mul(&r.gamma_tilde_mat(1))
            .mul(&r.gamma_mat(0))
            .mul(&r.gamma_tilde_mat(1))
            .trace();
        assert_eq!(lhs, GaussianRational::from_int(4));
    }

    #[test]
    fn epep6_spot_value() {
        // (A..D)=(0,1,2,3), (E..H)=(0,1,2,3): both sides -2 (oracle: direct
        // enumeration over I,J in {4,5}).
        let r = rep();
        let ed = &r.eps6_down;
        let eu = &r.eps6_up;
        let mut lhs = GaussianRational::ZERO;
        for i in 0..6 {
            for j in 0..6 {
                let p = ed.get(&[0, 1, 2, 3, i, j]) * eu.get(&[0, 1, 2, 3, i, j]);
                lhs += &p;
            }
        }
        assert_eq!(lhs, GaussianRational::from_int(-2));
    }

    #[test]
    fn all_twenty_identities_pass() {
        let r = rep();
        for id in IDENTITY6_ALL {
            let report = verify_identity6(&r, id);
            assert!(
                report.pass,
                "{} failed at {:?} with residual {}+{}i over {} tuples",
                report.id,
                report.first_failure,
                report.max_residual_re,
                report.max_residual_im,
                report.tuple_count
            );
        }
    }

    #[test]
    fn selfdual_projector_properties() {
        let r = rep();
        // A generic antisymmetric 3-form.
        let spec = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6); 3]);
        let mut h = Tensor::zeros(spec.clone());
        let mut v = 1i64;
        for a in 0..6 {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    for (perm, sign) in crate::tensor::permutations_of(3) {
                        let idx = [[a, b, c][perm[0]], [a, b, c][perm[1]], [a, b, c][perm[2]]];
                        h.set(&idx, GaussianRational::from_int(v * sign as i64));
                    }
                    v += 1;
                }
            }
        }
        let (plus, minus) = project_selfdual3(&r, &h).unwrap();
        assert_eq!(plus.add(&minus), h);
        // Idempotence: projecting the self-dual part again gives (plus, 0).
        let (pp, pm) = project_selfdual3(&r, &plus).unwrap();
        assert_eq!(pp, plus);
        assert!(pm.is_zero());
        // Non-antisymmetric input is rejected.
        let bad = metric(IndexKind::Spacetime6, Variance::Lower)
            .outer(&Tensor::from_fn(
                IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6)]),
                |_| GaussianRational::ONE,
            ));
        assert!(project_selfdual3(&r, &bad).is_err());
    }

    #[test]
    fn selfdual_space_has_dimension_ten() {
        assert_eq!(selfdual_dimension(&rep()), 10);
    }

    #[test]
    fn unknown_identity_id_is_catalog_error() {
        assert!(Identity6::from_id("NO_SUCH").is_err());
        assert_eq!(Identity6::from_id("EPEP6").unwrap(), Identity6::Epep6);
    }
}
