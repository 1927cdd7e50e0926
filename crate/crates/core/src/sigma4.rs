//! Four-dimensional sigma matrices and their identity suite.
//!
//! Standard construction: the identity and the three Hermitian traceless
//! 2x2 matrices, with the tilde family given by the spatial sign flip. The
//! four-dimensional Levi-Civita convention has the lower tensor normalized
//! to +1 on the identity permutation and the upper tensor to -1; the trace
//! of four sigmas is the canary for that orientation.

use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec, Variance};
use crate::matrix::Mat;
use crate::report::{ResidualReport, ResidualTracker};
use crate::scalar::GaussianRational;
use crate::tensor::{epsilon_tensor, metric, Tensor};

const D: usize = 4;
const S: usize = 2;

#[derive(Clone, Debug)]
pub struct SigmaRep4 {
    /// `(sigma^mu)_{a adot}`.
    pub sigma: Vec<Tensor>,
    /// `(sigmatilde^mu)^{adot a}`.
    pub sigma_tilde: Vec<Tensor>,
    pub eta_down: Tensor,
    pub eta_up: Tensor,
    pub eps4_up: Tensor,
    pub eps4_down: Tensor,
    /// `eps_{ab}` with `eps_{01} = 1`.
    pub eps2: Tensor,
    /// `epsbar_{adot bdot}` with `epsbar_{01} = 1`.
    pub bar_eps2: Tensor,
    /// `(eps^{-1})^{ab}`.
    pub eps2_inv: Tensor,
    /// `(epsbar^{-1})^{adot bdot}`.
    pub bar_eps2_inv: Tensor,
}

fn eta_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

fn mat2(entries: [[GaussianRational; 2]; 2], spec: IndexSpec) -> Tensor {
    let mut t = Tensor::zeros(spec);
    for (r, row) in entries.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            t.set(&[r, c], v);
        }
    }
    t
}

impl SigmaRep4 {
    pub fn sigma_mat(&self, mu: usize) -> Mat {
        Mat::from_tensor(&self.sigma[mu])
    }

    pub fn sigma_tilde_mat(&self, mu: usize) -> Mat {
        Mat::from_tensor(&self.sigma_tilde[mu])
    }
}

pub fn build_sigma4() -> Result<SigmaRep4> {
    let o = GaussianRational::ONE;
    let i = GaussianRational::I;
    let z = GaussianRational::ZERO;

    let down = |u: IndexKind, v: IndexKind| {
        IndexSpec::new(vec![IndexSlot::down(u), IndexSlot::down(v)])
    };
    let up = |u: IndexKind, v: IndexKind| {
        IndexSpec::new(vec![IndexSlot::up(u), IndexSlot::up(v)])
    };
    let su = IndexKind::Spinor4Undotted;
    let sd = IndexKind::Spinor4Dotted;

    let pauli = |k: usize| -> [[GaussianRational; 2]; 2] {
        match k {
            0 => [[o.clone(), z.clone()], [z.clone(), o.clone()]],
            1 => [[z.clone(), o.clone()], [o.clone(), z.clone()]],
            2 => [[z.clone(), -&i], [i.clone(), z.clone()]],
            _ => [[o.clone(), z.clone()], [z.clone(), -&o]],
        }
    };

    let sigma: Vec<Tensor> = (0..D)
        .map(|mu| mat2(pauli(mu), down(su, sd)))
        .collect();
    let sigma_tilde: Vec<Tensor> = (0..D)
        .map(|mu| {
            let m = mat2(pauli(mu), up(sd, su));
            if mu == 0 {
                m
            } else {
                m.neg()
            }
        })
        .collect();

    let eps_entries = |sign: i64| {
        [
            [z.clone(), GaussianRational::from_int(sign)],
            [GaussianRational::from_int(-sign), z.clone()],
        ]
    };
    let rep = SigmaRep4 {
        sigma,
        sigma_tilde,
        eta_down: metric(IndexKind::Spacetime4, Variance::Lower),
        eta_up: metric(IndexKind::Spacetime4, Variance::Upper),
        eps4_up: epsilon_tensor(IndexKind::Spacetime4, Variance::Upper)?,
        eps4_down: epsilon_tensor(IndexKind::Spacetime4, Variance::Lower)?,
        eps2: mat2(eps_entries(1), down(su, su)),
        bar_eps2: mat2(eps_entries(1), down(sd, sd)),
        eps2_inv: mat2(eps_entries(-1), up(su, su)),
        bar_eps2_inv: mat2(eps_entries(-1), up(sd, sd)),
    };
    validate(&rep)?;
    Ok(rep)
}

fn validate(rep: &SigmaRep4) -> Result<()> {
    let fail = |what: &str| Err(Error::Representation(what.to_string()));
    for mu in 0..D {
        for nu in 0..D {
            let m = rep
                .sigma_mat(mu)
                .mul(&rep.sigma_tilde_mat(nu))
                .add(&rep.sigma_mat(nu).mul(&rep.sigma_tilde_mat(mu)));
            let eta = if mu == nu {
                GaussianRational::from_int(2 * eta_sign(mu))
            } else {
                GaussianRational::ZERO
            };
            if !m.sub(&Mat::identity(S).scale(&eta)).is_zero() {
                return fail("Clifford relation sigma sigmatilde + swap = 2 eta");
            }
        }
    }
    let e = Mat::from_tensor(&rep.eps2);
    let eb = Mat::from_tensor(&rep.bar_eps2);
    for mu in 0..D {
        let lhs = e.mul(&rep.sigma_tilde_mat(mu).transpose()).mul(&eb);
        if !lhs.add(&rep.sigma_mat(mu)).is_zero() {
            return fail("eps sigmatilde^t epsbar = -sigma");
        }
    }
    let e_inv = Mat::from_tensor(&rep.eps2_inv);
    if !e.mul(&e_inv).sub(&Mat::identity(S)).is_zero() {
        return fail("eps2 inverse");
    }
    let eb_inv = Mat::from_tensor(&rep.bar_eps2_inv);
    if !eb.mul(&eb_inv).sub(&Mat::identity(S)).is_zero() {
        return fail("bar eps2 inverse");
    }
    if rep.eps2.get(&[0, 1]) != &GaussianRational::ONE
        || rep.bar_eps2.get(&[0, 1]) != &GaussianRational::ONE
    {
        return fail("eps normalization eps_{01} = epsbar_{01} = 1");
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity4 {
    Sti,
    FTr2,
    FTr4,
    FContract,
    Fese,
    FSig4A,
    FSig4B,
    FSig4C,
    Fdde,
}

pub const IDENTITY4_ALL: [Identity4; 9] = [
    Identity4::Sti,
    Identity4::FTr2,
    Identity4::FTr4,
    Identity4::FContract,
    Identity4::Fese,
    Identity4::FSig4A,
    Identity4::FSig4B,
    Identity4::FSig4C,
    Identity4::Fdde,
];

impl Identity4 {
    pub fn id(self) -> &'static str {
        match self {
            Identity4::Sti => "STI",
            Identity4::FTr2 => "FTR2",
            Identity4::FTr4 => "FTR4",
            Identity4::FContract => "FCONTRACT",
            Identity4::Fese => "FESE",
            Identity4::FSig4A => "FSIG4_A",
            Identity4::FSig4B => "FSIG4_B",
            Identity4::FSig4C => "FSIG4_C",
            Identity4::Fdde => "FDDE",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Identity4::Sti => "Clifford anticommutator equals twice the metric",
            Identity4::FTr2 => "two-sigma trace",
            Identity4::FTr4 => "four-sigma trace with the orientation term",
            Identity4::FContract => "completeness contraction of sigma with sigmatilde",
            Identity4::Fese => "relation between sigma and sigmatilde via the spinor epsilons",
            Identity4::FSig4A => "two-sigma contraction onto spinor epsilons",
            Identity4::FSig4B => "pair-product contraction, like chirality",
            Identity4::FSig4C => "pair-product contraction, mixed chirality",
            Identity4::Fdde => "Kronecker rearrangement via the spinor epsilon",
        }
    }

    pub fn from_id(s: &str) -> Result<Identity4> {
        IDENTITY4_ALL
            .iter()
            .copied()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::Catalog(format!("unknown identity id {s}")))
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

pub fn verify_identity4(rep: &SigmaRep4, id: Identity4) -> ResidualReport {
    let s: Vec<Mat> = (0..D).map(|mu| rep.sigma_mat(mu)).collect();
    let st: Vec<Mat> = (0..D).map(|mu| rep.sigma_tilde_mat(mu)).collect();
    let sgn = |mu: usize| GaussianRational::from_int(eta_sign(mu));
    let s_low: Vec<Mat> = (0..D).map(|mu| s[mu].scale(&sgn(mu))).collect();
    let st_low: Vec<Mat> = (0..D).map(|mu| st[mu].scale(&sgn(mu))).collect();
    // sigma^mu sigmatilde^nu and sigmatilde^mu sigma^nu.
    let ps: Vec<Vec<Mat>> = (0..D)
        .map(|m| (0..D).map(|n| s[m].mul(&st[n])).collect())
        .collect();
    let pt: Vec<Vec<Mat>> = (0..D)
        .map(|m| (0..D).map(|n| st[m].mul(&s[n])).collect())
        .collect();
    let half = GaussianRational::frac(1, 2);
    let g2: Vec<Vec<Mat>> = (0..D)
        .map(|m| {
            (0..D)
                .map(|n| ps[m][n].sub(&ps[n][m]).scale(&half))
                .collect()
        })
        .collect();
    let g2t: Vec<Vec<Mat>> = (0..D)
        .map(|m| {
            (0..D)
                .map(|n| pt[m][n].sub(&pt[n][m]).scale(&half))
                .collect()
        })
        .collect();
    let eta = |a: usize, b: usize| if a == b { eta_sign(a) } else { 0 };

    let mut tr = ResidualTracker::new(id.id());
    match id {
        Identity4::Sti => {
            for m in 0..D {
                for n in 0..D {
                    let r = ps[m][n].add(&ps[n][m]).sub(
                        &Mat::identity(S).scale(&GaussianRational::from_int(2 * eta(m, n))),
                    );
                    for a in 0..S {
                        for b in 0..S {
                            tr.record(&[m, n, a, b], r.at(a, b));
                        }
                    }
                }
            }
        }
        Identity4::FTr2 => {
            for m in 0..D {
                for n in 0..D {
                    let r = &(&ps[m][n].trace() * &half)
                        - &GaussianRational::from_int(eta(m, n));
                    tr.record(&[m, n], &r);
                }
            }
        }
        Identity4::FTr4 => {
            for m in 0..D {
                for n in 0..D {
                    for l in 0..D {
                        for r_ in 0..D {
                            let lhs = &ps[m][n].trace_mul(&ps[l][r_]) * &half;
                            let real = eta(m, n) * eta(l, r_) + eta(n, l) * eta(r_, m)
                                - eta(m, l) * eta(n, r_);
                            let eps = rep.eps4_up.get(&[m, n, l, r_]);
                            let rhs = &GaussianRational::from_int(real)
                                - &(&GaussianRational::I * eps);
                            let resid = &lhs - &rhs;
                            tr.record(&[m, n, l, r_], &resid);
                        }
                    }
                }
            }
        }
        Identity4::FContract => {
            for al in 0..S {
                for ad in 0..S {
                    for be in 0..S {
                        for bd in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for mu in 0..D {
                                let p = s[mu].at(al, ad) * st_low[mu].at(bd, be);
                                lhs += &p;
                            }
                            let rhs = 2 * delta(al, be) * delta(ad, bd);
                            let r = &lhs - &GaussianRational::from_int(rhs);
                            tr.record(&[al, ad, be, bd], &r);
                        }
                    }
                }
            }
        }
        Identity4::Fese => {
            let e = Mat::from_tensor(&rep.eps2);
            let eb = Mat::from_tensor(&rep.bar_eps2);
            for mu in 0..D {
                let r = e.mul(&st[mu].transpose()).mul(&eb).add(&s[mu]);
                for a in 0..S {
                    for b in 0..S {
                        tr.record(&[mu, a, b], r.at(a, b));
                    }
                }
            }
        }
        Identity4::FSig4A => {
            for al in 0..S {
                for ad in 0..S {
                    for be in 0..S {
                        for bd in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for mu in 0..D {
                                let p = s[mu].at(al, ad) * s_low[mu].at(be, bd);
                                lhs += &p;
                            }
                            let rhs = rep.eps2.get(&[al, be]) * rep.bar_eps2.get(&[ad, bd]);
                            let r = &lhs - &(&rhs * &GaussianRational::from_int(2));
                            tr.record(&[al, ad, be, bd], &r);
                        }
                    }
                }
            }
        }
        Identity4::FSig4B => {
            for al in 0..S {
                for be in 0..S {
                    for ga in 0..S {
                        for de in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for m in 0..D {
                                for n in 0..D {
                                    let x = g2[m][n].at(al, be);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let low = g2[m][n]
                                        .scale(&(&sgn(m) * &sgn(n)));
                                    let p = x * low.at(ga, de);
                                    lhs += &p;
                                }
                            }
                            let rhs = 4 * (delta(al, be) * delta(ga, de)
                                - 2 * delta(al, de) * delta(ga, be));
                            let r = &lhs - &GaussianRational::from_int(rhs);
                            tr.record(&[al, be, ga, de], &r);
                        }
                    }
                }
            }
        }
        Identity4::FSig4C => {
            for al in 0..S {
                for be in 0..S {
                    for ad in 0..S {
                        for bd in 0..S {
                            let mut lhs = GaussianRational::ZERO;
                            for m in 0..D {
                                for n in 0..D {
                                    let x = g2[m][n].at(al, be);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let low = g2t[m][n].scale(&(&sgn(m) * &sgn(n)));
                                    let p = x * low.at(ad, bd);
                                    lhs += &p;
                                }
                            }
                            tr.record(&[al, be, ad, bd], &lhs);
                        }
                    }
                }
            }
        }
        Identity4::Fdde => {
            for al in 0..S {
                for be in 0..S {
                    for ga in 0..S {
                        for de in 0..S {
                            let lhs = delta(al, de) * delta(ga, be) - delta(al, be) * delta(ga, de);
                            let rhs = rep.eps2.get(&[al, ga]) * rep.eps2_inv.get(&[be, de]);
                            let r = &GaussianRational::from_int(lhs) - &rhs;
                            tr.record(&[al, be, ga, de], &r);
                        }
                    }
                }
            }
        }
    }
    tr.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_spot_values() {
        let r = build_sigma4().unwrap();
        // sigma^0 st^1 + sigma^1 st^0 = 0
        assert!(r
            .sigma_mat(0)
            .mul(&r.sigma_tilde_mat(1))
            .add(&r.sigma_mat(1).mul(&r.sigma_tilde_mat(0)))
            .is_zero());
        // (1/2) tr(sigma^0 st^0) = 1
        assert_eq!(
            r.sigma_mat(0).mul(&r.sigma_tilde_mat(0)).trace(),
            GaussianRational::from_int(2)
        );
        // FTR4 spot at (0,1,0,1): oracle value 1.
        let lhs = r
            .sigma_mat(0)
            .mul(&r.sigma_tilde_mat(1))
            .mul(&r.sigma_mat(0))
            .mul(&r.sigma_tilde_mat(1))
            .trace();
        assert_eq!(lhs, GaussianRational::from_int(2));
        // Orientation canary: (1/2) tr(s^0 st^1 s^2 st^3) = -i eps^{0123} = +i.
        let canary = &r
            .sigma_mat(0)
            .mul(&r.sigma_tilde_mat(1))
            .mul(&r.sigma_mat(2))
            .mul(&r.sigma_tilde_mat(3))
            .trace()
            * &GaussianRational::frac(1, 2);
        assert_eq!(canary, GaussianRational::I);
    }

    #[test]
    fn all_nine_identities_pass() {
        let r = build_sigma4().unwrap();
        for id in IDENTITY4_ALL {
            let rep = verify_identity4(&r, id);
            assert!(
                rep.pass,
                "{} failed at {:?} with residual {}+{}i",
                rep.id, rep.first_failure, rep.max_residual_re, rep.max_residual_im
            );
        }
    }

    #[test]
    fn fcontract_spot() {
        // sigma^mu_{11} sigmatilde_mu^{11} = 2 (0-indexed (1,1),(1,1)).
        let r = build_sigma4().unwrap();
        let mut acc = GaussianRational::ZERO;
        for mu in 0..4 {
            let sign = GaussianRational::from_int(super::eta_sign(mu));
            let p = &(r.sigma_mat(mu).at(1, 1) * r.sigma_tilde_mat(mu).at(1, 1)) * &sign;
            acc += &p;
        }
        assert_eq!(acc, GaussianRational::from_int(2));
    }

    #[test]
    fn unknown_id_is_catalog_error() {
        assert!(Identity4::from_id("XYZ").is_err());
    }
}
