//! Nilpotent-coordinate expansion of the scalar superfield.
//!
//! With eight real anticommuting coordinates theta^{i a} (N = 1), the
//! conjugation `exp(i thetabar Q) phi exp(-i thetabar Q)` is expanded as
//! `sum_k (i^k / k!) ad^k(phi)`, where one adjoint step maps a monomial
//! tensor `M (x) E` to `sum_c (-1)^{|M|} (theta_c M) (x) [Q_c, E}` and
//! `theta_c` carries the inverse symplectic weight of `thetabar`.

use super::charge::ChargeKind;
use super::expression::Expression;
use super::model::{act_on_expression, Model};
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use std::collections::BTreeMap;

/// Coefficients of the expansion keyed by theta-monomial bitmask; the bit
/// for coordinate (i, a) is `i * 4 + a`, and monomials are ordered products
/// of ascending coordinates.
#[derive(Clone, Debug)]
pub struct GrassmannPolynomial {
    pub max_order: u32,
    pub terms: BTreeMap<u16, Expression>,
}

impl GrassmannPolynomial {
    pub fn order_terms(&self, k: u32) -> impl Iterator<Item = (&u16, &Expression)> {
        self.terms
            .iter()
            .filter(move |(mask, _)| mask.count_ones() == k)
    }
}

/// Sign from sorting `theta_c` into an ordered monomial: the number of set
/// bits below `c` counts the transpositions.
pub fn theta_insert(mask: u16, c: usize) -> Option<(u16, i64)> {
    let bit = 1u16 << c;
    if mask & bit != 0 {
        return None;
    }
    let below = (mask & (bit - 1)).count_ones();
    let sign = if below % 2 == 0 { 1 } else { -1 };
    Some((mask | bit, sign))
}

/// One adjoint step of `thetabar Q` on a monomial-keyed state.
fn ad_step(model: &Model, state: &BTreeMap<u16, Expression>) -> Result<BTreeMap<u16, Expression>> {
    let epsbar = &model
        .rep6
        .as_ref()
        .expect("six-dimensional model")
        .symplectic_down;
    let mut next: BTreeMap<u16, Expression> = BTreeMap::new();
    for (&mask, expr) in state {
        if expr.is_zero() {
            continue;
        }
        let parity_sign = if mask.count_ones() % 2 == 0 { 1i64 } else { -1 };
        // [Q^i_a, E} for all labels at once; slice per coordinate below.
        let qe = act_on_expression(model, ChargeKind::Q, expr)?;
        for j in 0..2usize {
            for a in 0..4usize {
                let c = j * 4 + a;
                let Some((new_mask, theta_sign)) = theta_insert(mask, c) else {
                    continue;
                };
                // thetabar_j Q^j pairing: coordinate (j, a) multiplies
                // epsbar_{j i} Q^i_a.
                let mut contribution: Option<Expression> = None;
                for i in 0..2usize {
                    let w = epsbar.get(&[j, i]);
                    if w.is_zero() {
                        continue;
                    }
                    let sliced = qe.slice_free(0, i).slice_free(0, a);
                    let sliced = sliced.scale(w);
                    contribution = Some(match contribution {
                        None => sliced,
                        Some(acc) => acc.add(&sliced),
                    });
                }
                let Some(contribution) = contribution else {
                    continue;
                };
                let total = contribution
                    .scale(&GaussianRational::from_int(parity_sign * theta_sign));
                if total.is_zero() {
                    continue;
                }
                match next.get_mut(&new_mask) {
                    Some(e) => *e = e.add(&total),
                    None => {
                        next.insert(new_mask, total);
                    }
                }
            }
        }
    }
    next.retain(|_, e| !e.is_zero());
    Ok(next)
}

/// Expands the conjugated scalar through the requested order (at most 8;
/// beyond that every monomial vanishes identically).
pub fn superfield_expand(model: &Model, max_order: u32) -> Result<GrassmannPolynomial> {
    if model.name != "6d-tensor-offshell" {
        return Err(Error::Config(format!(
            "superfield expansion is defined for the off-shell tensor model, not {}",
            model.name
        )));
    }
    if max_order > 8 {
        return Err(Error::Config(format!(
            "expansion order {max_order} exceeds the eight nilpotent coordinates"
        )));
    }
    let phi = model.gen_id("phi")?;
    let mut terms: BTreeMap<u16, Expression> = BTreeMap::new();
    let mut state: BTreeMap<u16, Expression> = BTreeMap::new();
    state.insert(0, model.identity_expression(phi, 0));
    let mut factorial = 1i64;
    for k in 0..=max_order {
        if k > 0 {
            state = ad_step(model, &state)?;
            factorial *= k as i64;
        }
        let scale = &GaussianRational::i_pow(k) * &GaussianRational::frac(1, factorial);
        for (mask, expr) in &state {
            let scaled = expr.scale(&scale);
            if !scaled.is_zero() {
                terms.insert(*mask, scaled);
            }
        }
    }
    Ok(GrassmannPolynomial { max_order, terms })
}

/// Applies one more adjoint step past the top order and reports whether
/// every ninth-order monomial vanishes (it must: there are only eight
/// coordinates).
pub fn order9_vanishes(model: &Model) -> Result<bool> {
    let phi = model.gen_id("phi")?;
    let mut state: BTreeMap<u16, Expression> = BTreeMap::new();
    state.insert(0, model.identity_expression(phi, 0));
    for _ in 0..8 {
        state = ad_step(model, &state)?;
    }
    let top_nonempty = !state.is_empty();
    let nine = ad_step(model, &state)?;
    Ok(top_nonempty && nine.is_empty())
}

/// The displayed low-order terms of the expansion, built independently of
/// the adjoint recursion: the scalar, the spinor pairing, the quadratic
/// 3-form term `i/8 thetabar Gamma theta H`, the cubic derivative term
/// `i/3 thetabar gamma theta thetabar dpsi`, and the quartic double
/// derivative `1/12 thetabar gamma theta thetabar gamma theta ddphi`; all
/// expanded into ordered monomials with exact signs.
pub fn printed_terms_through_quartic(
    model: &Model,
) -> Result<BTreeMap<u16, Expression>> {
    use crate::matrix::{antisymmetrize_labels, Mat};
    use crate::scalar::Rat;

    if model.name != "6d-tensor-offshell" {
        return Err(Error::Config(
            "printed expansion terms are defined for the off-shell tensor model".into(),
        ));
    }
    let rep = model.rep6.as_ref().unwrap();
    let epsbar = &rep.symplectic_down;
    let phi = model.gen_id("phi")?;
    let psi = model.gen_id("psi")?;
    let h = model.gen_id("H")?;
    let g: Vec<Mat> = (0..6).map(|a| rep.gamma_mat(a)).collect();
    let gt: Vec<Mat> = (0..6).map(|a| rep.gamma_tilde_mat(a)).collect();
    let gam3 = |a: usize, b: usize, c: usize| {
        antisymmetrize_labels(&[a, b, c], |l| g[l[0]].mul(&gt[l[1]]).mul(&g[l[2]]))
    };

    let mut out: BTreeMap<u16, Expression> = BTreeMap::new();
    let mut add = |mask: u16, e: Expression| {
        if e.is_zero() {
            return;
        }
        match out.get_mut(&mask) {
            Some(acc) => *acc = acc.add(&e),
            None => {
                out.insert(mask, e);
            }
        }
    };
    let coord = |i: usize, a: usize| i * 4 + a;

    // Order 0: phi.
    add(0, model.identity_expression(phi, 0));

    // Order 1: thetabar_i psi^i = epsbar_{ji} theta^{j a} psi^i_a.
    for j in 0..2 {
        for a in 0..4 {
            for i in 0..2 {
                let w = epsbar.get(&[j, i]);
                if w.is_zero() {
                    continue;
                }
                let e = model
                    .identity_expression(psi, 0)
                    .slice_free(0, i)
                    .slice_free(0, a)
                    .scale(w);
                add(1 << coord(j, a), e);
            }
        }
    }

    // Order 2: (i/8) epsbar_{ji} theta^{j a} (Gamma^{ABC})_{ab} theta^{i b} H_ABC.
    let h_ident = model.identity_expression(h, 0); // free (A,B,C)
    for j in 0..2 {
        for a in 0..4 {
            for i in 0..2 {
                for b in 0..4 {
                    let c1 = coord(j, a);
                    let c2 = coord(i, b);
                    if c1 == c2 {
                        continue;
                    }
                    let w = epsbar.get(&[j, i]);
                    if w.is_zero() {
                        continue;
                    }
                    // contract Gamma^{ABC}_{ab} against the H slots
                    let mut acc: Option<Expression> = None;
                    for ca in 0..6 {
                        for cb in 0..6 {
                            for cc in 0..6 {
                                let v = gam3(ca, cb, cc).at(a, b).clone();
                                if v.is_zero() {
                                    continue;
                                }
                                let e = h_ident
                                    .slice_free(0, ca)
                                    .slice_free(0, cb)
                                    .slice_free(0, cc)
                                    .scale(&v);
                                acc = Some(match acc {
                                    None => e,
                                    Some(x) => x.add(&e),
                                });
                            }
                        }
                    }
                    let Some(acc) = acc else { continue };
                    let (mask, sign) = if c1 < c2 {
                        (1u16 << c1 | 1 << c2, 1)
                    } else {
                        (1u16 << c1 | 1 << c2, -1)
                    };
                    let scale = &(w * &GaussianRational::frac_i(1, 8))
                        * &GaussianRational::from_int(sign);
                    add(mask, acc.scale(&scale));
                }
            }
        }
    }

    // Order 3: (i/3) thetabar_i gamma^A theta^j thetabar_j d_A psi^i
    //        = (i/3) epsbar_{ki} theta^{k a} gamma^A_{ab} theta^{j b}
    //          epsbar_{lj} theta^{l g} d_A psi^i_g.
    for k in 0..2 {
        for a in 0..4 {
            for j in 0..2 {
                for b in 0..4 {
                    for l in 0..2 {
                        for gsl in 0..4 {
                            let (c1, c2, c3) = (coord(k, a), coord(j, b), coord(l, gsl));
                            if c1 == c2 || c1 == c3 || c2 == c3 {
                                continue;
                            }
                            let sign = sort_sign(&[c1, c2, c3]);
                            let mask = (1u16 << c1) | (1 << c2) | (1 << c3);
                            for i in 0..2 {
                                let w1 = epsbar.get(&[k, i]);
                                let w2 = epsbar.get(&[l, j]);
                                let w = w1 * w2;
                                if w.is_zero() {
                                    continue;
                                }
                                let mut acc: Option<Expression> = None;
                                for ca in 0..6 {
                                    let v = g[ca].at(a, b);
                                    if v.is_zero() {
                                        continue;
                                    }
                                    let e = model
                                        .identity_expression(psi, 1)
                                        .slice_free(0, ca)
                                        .slice_free(0, i)
                                        .slice_free(0, gsl)
                                        .scale(v);
                                    acc = Some(match acc {
                                        None => e,
                                        Some(x) => x.add(&e),
                                    });
                                }
                                let Some(acc) = acc else { continue };
                                let scale = &(&w * &GaussianRational::frac_i(1, 3))
                                    * &GaussianRational::from_int(sign);
                                add(mask, acc.scale(&scale));
                            }
                        }
                    }
                }
            }
        }
    }

    // Order 4: (1/12) thetabar_i gamma^A theta^j thetabar_j gamma^B theta^i
    //          d_A d_B phi.
    let ddphi = model.identity_expression(phi, 2); // free (A, B)
    for k in 0..2 {
        for a in 0..4 {
            for j in 0..2 {
                for b in 0..4 {
                    for l in 0..2 {
                        for gsl in 0..4 {
                            for i in 0..2 {
                                for d in 0..4 {
                                    let cs = [coord(k, a), coord(j, b), coord(l, gsl), coord(i, d)];
                                    if cs[0] == cs[1]
                                        || cs[0] == cs[2]
                                        || cs[0] == cs[3]
                                        || cs[1] == cs[2]
                                        || cs[1] == cs[3]
                                        || cs[2] == cs[3]
                                    {
                                        continue;
                                    }
                                    let w = &(epsbar.get(&[k, i]) * epsbar.get(&[l, j]))
                                        * &GaussianRational::real(Rat::new(1, 12));
                                    if w.is_zero() {
                                        continue;
                                    }
                                    let sign = sort_sign(&cs);
                                    let mask = cs.iter().fold(0u16, |m, &c| m | 1 << c);
                                    let mut acc: Option<Expression> = None;
                                    for ca in 0..6 {
                                        let v1 = g[ca].at(a, b);
                                        if v1.is_zero() {
                                            continue;
                                        }
                                        for cb in 0..6 {
                                            let v2 = g[cb].at(gsl, d);
                                            if v2.is_zero() {
                                                continue;
                                            }
                                            let e = ddphi
                                                .slice_free(0, ca)
                                                .slice_free(0, cb)
                                                .scale(&(v1 * v2));
                                            acc = Some(match acc {
                                                None => e,
                                                Some(x) => x.add(&e),
                                            });
                                        }
                                    }
                                    let Some(acc) = acc else { continue };
                                    let scale = &w * &GaussianRational::from_int(sign);
                                    add(mask, acc.scale(&scale));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    out.retain(|_, e| !e.is_zero());
    Ok(out)
}

/// Sign of the permutation sorting distinct coordinates ascending.
fn sort_sign(cs: &[usize]) -> i64 {
    crate::tensor::permutation_sign(cs)
}
