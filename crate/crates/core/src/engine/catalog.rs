//! The five-model catalog: rule tensors, structural constraints and
//! quotient relations for each supported multiplet.

use super::charge::ChargeKind;
use super::expression::Expression;
use super::generator::{Constraint, FieldGenerator, Parity};
use super::model::{ClosureForm, Model};
use crate::clifford6::{build_gamma6, project_selfdual3, GammaRep6};
use crate::error::Result;
use crate::index::{IndexKind, IndexSlot, IndexSpec, Variance};
use crate::matrix::{antisymmetrize_labels, Mat};
use crate::scalar::GaussianRational;
use crate::sigma4::{build_sigma4, SigmaRep4};
use crate::tensor::{BraceMode, Tensor};

const ST6: IndexKind = IndexKind::Spacetime6;
const ST4: IndexKind = IndexKind::Spacetime4;
const SP6: IndexKind = IndexKind::Spinor6;
const S4U: IndexKind = IndexKind::Spinor4Undotted;
const S4D: IndexKind = IndexKind::Spinor4Dotted;

fn up(k: IndexKind) -> IndexSlot {
    IndexSlot::up(k)
}
fn dn(k: IndexKind) -> IndexSlot {
    IndexSlot::down(k)
}
fn spec(slots: Vec<IndexSlot>) -> IndexSpec {
    IndexSpec::new(slots)
}

fn eta_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

fn gi(v: i64) -> GaussianRational {
    GaussianRational::from_int(v)
}

/// Cached gamma-matrix products for the six-dimensional rule tensors.
struct Six {
    rep: GammaRep6,
    g: Vec<Mat>,
    gt: Vec<Mat>,
    /// `gamma_{[A} gammatilde_{B]}` (one lower, one upper spinor index).
    g2low: Vec<Vec<Mat>>,
    /// `gamma^{[A} gammatilde^B gamma^{C]}` (two lower spinor indices).
    gam3: Vec<Vec<Vec<Mat>>>,
    /// `gamma^D gammatilde_{[A} gamma_B gammatilde_{C]}`.
    qqqhm: Vec<Vec<Vec<Vec<Mat>>>>,
}

impl Six {
    fn new(n: u8) -> Result<Six> {
        let rep = build_gamma6(n)?;
        let g: Vec<Mat> = (0..6).map(|a| rep.gamma_mat(a)).collect();
        let gt: Vec<Mat> = (0..6).map(|a| rep.gamma_tilde_mat(a)).collect();
        let g_low: Vec<Mat> = (0..6).map(|a| g[a].scale(&gi(eta_sign(a)))).collect();
        let gt_low: Vec<Mat> = (0..6).map(|a| gt[a].scale(&gi(eta_sign(a)))).collect();
        let half = GaussianRational::frac(1, 2);
        let g2low: Vec<Vec<Mat>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        g_low[a]
                            .mul(&gt_low[b])
                            .sub(&g_low[b].mul(&gt_low[a]))
                            .scale(&half)
                    })
                    .collect()
            })
            .collect();
        let gam3: Vec<Vec<Vec<Mat>>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        (0..6)
                            .map(|c| {
                                antisymmetrize_labels(&[a, b, c], |l| {
                                    g[l[0]].mul(&gt[l[1]]).mul(&g[l[2]])
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let g3t_low: Vec<Vec<Vec<Mat>>> = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        (0..6)
                            .map(|c| {
                                antisymmetrize_labels(&[a, b, c], |l| {
                                    gt_low[l[0]].mul(&g_low[l[1]]).mul(&gt_low[l[2]])
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let qqqhm: Vec<Vec<Vec<Vec<Mat>>>> = (0..6)
            .map(|d| {
                (0..6)
                    .map(|a| {
                        (0..6)
                            .map(|b| {
                                (0..6)
                                    .map(|c| g[d].mul(&g3t_low[a][b][c]))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Six {
            rep,
            g,
            gt,
            g2low,
            gam3,
            qqqhm,
        })
    }
}

/// Cached sigma-matrix products for the four-dimensional rule tensors.
struct Four {
    rep: SigmaRep4,
    s: Vec<Mat>,
    st: Vec<Mat>,
    /// `sigma^{[mu} sigmatilde^{nu]}` (undotted row, undotted column).
    s2: Vec<Vec<Mat>>,
    /// `sigmatilde^{[mu} sigma^{nu]}` (dotted row, dotted column).
    s2t: Vec<Vec<Mat>>,
}

impl Four {
    fn new() -> Result<Four> {
        let rep = build_sigma4()?;
        let s: Vec<Mat> = (0..4).map(|m| rep.sigma_mat(m)).collect();
        let st: Vec<Mat> = (0..4).map(|m| rep.sigma_tilde_mat(m)).collect();
        let half = GaussianRational::frac(1, 2);
        let s2: Vec<Vec<Mat>> = (0..4)
            .map(|m| {
                (0..4)
                    .map(|n| s[m].mul(&st[n]).sub(&s[n].mul(&st[m])).scale(&half))
                    .collect()
            })
            .collect();
        let s2t: Vec<Vec<Mat>> = (0..4)
            .map(|m| {
                (0..4)
                    .map(|n| st[m].mul(&s[n]).sub(&st[n].mul(&s[m])).scale(&half))
                    .collect()
            })
            .collect();
        Ok(Four { rep, s, st, s2, s2t })
    }
}

pub fn build(name: &str, n: u8, jet_max: usize) -> Result<Model> {
    match name {
        "6d-tensor-offshell" => tensor_offshell(jet_max),
        "6d-tensor-onshell" => tensor_onshell(jet_max),
        "6d-toy-rigid" => toy_rigid6(n, jet_max),
        "4d-maxwell-onshell" => maxwell_onshell(jet_max),
        "4d-toy-rigid" => toy_rigid4(jet_max),
        _ => unreachable!("validated by load_model"),
    }
}

fn sympl(n: u8) -> IndexKind {
    IndexKind::Symplectic(n)
}

// ---------------------------------------------------------------------------
// 6d models
// ---------------------------------------------------------------------------

fn psi_gen(n: u8) -> FieldGenerator {
    FieldGenerator::new(
        "psi",
        spec(vec![up(sympl(n)), dn(SP6)]),
        Parity::Fermion,
        Constraint::None,
    )
}

/// Off-shell tensor multiplet: scalar, spinor and a self-dual 3-form field
/// with the superspace-derived transformation rules; the quotient carries
/// the derived constraints on the jets.
fn tensor_offshell(jet_max: usize) -> Result<Model> {
    let six = Six::new(1)?;
    let rep_for_projector = six.rep.clone();
    let sd = move |t: &Tensor| -> Tensor {
        project_selfdual3(&rep_for_projector, &crate::tensor::brace_project(t, &[0, 1, 2], BraceMode::Antisym).unwrap())
            .unwrap()
            .0
    };
    let gens = vec![
        FieldGenerator::new("phi", spec(vec![]), Parity::Boson, Constraint::None),
        psi_gen(1),
        FieldGenerator::new(
            "H",
            spec(vec![dn(ST6), dn(ST6), dn(ST6)]),
            Parity::Boson,
            Constraint::AntisymSelfDual,
        ),
    ];
    let mut m = Model::new(
        "6d-tensor-offshell",
        1,
        ST6,
        gens,
        vec![ChargeKind::Q, ChargeKind::P],
        true,
        jet_max,
        ClosureForm::POnly,
        Some(six.rep.clone()),
        None,
        Some(&sd),
    );
    set_rules_tensor_multiplet(&mut m, &six, TensorFlavor::OffshellH);
    m.validate_grading()?;
    m.build_actions();

    // Quotient: the derived jet constraints.
    add_offshell_quotient(&mut m, &six);
    Ok(m)
}

enum TensorFlavor {
    /// H is its own self-dual generator.
    OffshellH,
    /// H is the strength-one curl of the two-form B.
    OnshellB,
}

fn set_rules_tensor_multiplet(m: &mut Model, six: &Six, flavor: TensorFlavor) {
    let eps = six.rep.symplectic_up.clone();
    let minus_i = -&GaussianRational::I;

    // [Q^i_a, phi] = -i psi^i_a
    let t_qphi = Tensor::from_fn(
        spec(vec![up(sympl(1)), dn(SP6), dn(sympl(1)), up(SP6)]),
        |ix| {
            if ix[0] == ix[2] && ix[1] == ix[3] {
                minus_i.clone()
            } else {
                GaussianRational::ZERO
            }
        },
    );
    m.set_rule(ChargeKind::Q, "phi", vec![("psi", 0, t_qphi)]);

    // {Q^i_a, psi^j_b}: the d(phi) term is shared by both flavors.
    let t_qpsi_phi = Tensor::from_fn(
        spec(vec![up(sympl(1)), dn(SP6), up(sympl(1)), dn(SP6), up(ST6)]),
        |ix| {
            let (i, a, j, b, cap_a) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
            let e = eps.get(&[i, j]);
            if e.is_zero() {
                return GaussianRational::ZERO;
            }
            e * six.g[cap_a].at(a, b)
        },
    );
    match flavor {
        TensorFlavor::OffshellH => {
            // + 1/4 eps^{ij} (Gamma^{ABC})_{ab} H_ABC
            let t_qpsi_h = Tensor::from_fn(
                spec(vec![
                    up(sympl(1)),
                    dn(SP6),
                    up(sympl(1)),
                    dn(SP6),
                    up(ST6),
                    up(ST6),
                    up(ST6),
                ]),
                |ix| {
                    let e = eps.get(&[ix[0], ix[2]]);
                    if e.is_zero() {
                        return GaussianRational::ZERO;
                    }
                    let v = six.gam3[ix[4]][ix[5]][ix[6]].at(ix[1], ix[3]);
                    &(e * v) * &GaussianRational::frac(1, 4)
                },
            );
            m.set_rule(
                ChargeKind::Q,
                "psi",
                vec![("phi", 1, t_qpsi_phi), ("H", 0, t_qpsi_h)],
            );

            // [Q^k_a, H_ABC] = -(i/6)(gamma^D gt_[A g_B gt_C])_a^d  d_D psi^k_d
            let t_qh = Tensor::from_fn(
                spec(vec![
                    up(sympl(1)),
                    dn(SP6),
                    dn(ST6),
                    dn(ST6),
                    dn(ST6),
                    up(ST6),
                    dn(sympl(1)),
                    up(SP6),
                ]),
                |ix| {
                    let (k, al, a, b, c, d, kp, de) =
                        (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5], ix[6], ix[7]);
                    if k != kp {
                        return GaussianRational::ZERO;
                    }
                    let v = six.qqqhm[d][a][b][c].at(al, de);
                    v * &GaussianRational::frac_i(-1, 6)
                },
            );
            m.set_rule(ChargeKind::Q, "H", vec![("psi", 1, t_qh)]);
        }
        TensorFlavor::OnshellB => {
            // + 1/4 eps^{ij} (Gamma^{DAB})_{ab} d_D B_AB
            let t_qpsi_b = Tensor::from_fn(
                spec(vec![
                    up(sympl(1)),
                    dn(SP6),
                    up(sympl(1)),
                    dn(SP6),
                    up(ST6),
                    up(ST6),
                    up(ST6),
                ]),
                |ix| {
                    let e = eps.get(&[ix[0], ix[2]]);
                    if e.is_zero() {
                        return GaussianRational::ZERO;
                    }
                    let v = six.gam3[ix[4]][ix[5]][ix[6]].at(ix[1], ix[3]);
                    &(e * v) * &GaussianRational::frac(1, 4)
                },
            );
            m.set_rule(
                ChargeKind::Q,
                "psi",
                vec![("phi", 1, t_qpsi_phi), ("B", 1, t_qpsi_b)],
            );

            // [Q^i_a, B_AB] = -i (gamma_[A gt_B] psi^i)_a
            let t_qb = Tensor::from_fn(
                spec(vec![
                    up(sympl(1)),
                    dn(SP6),
                    dn(ST6),
                    dn(ST6),
                    dn(sympl(1)),
                    up(SP6),
                ]),
                |ix| {
                    let (i, al, a, b, ip, be) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
                    if i != ip {
                        return GaussianRational::ZERO;
                    }
                    six.g2low[a][b].at(al, be) * &minus_i
                },
            );
            m.set_rule(ChargeKind::Q, "B", vec![("psi", 0, t_qb)]);
        }
    }
}

fn add_offshell_quotient(m: &mut Model, six: &Six) {
    // gammatilde^A d_A psi = 0.
    let psi = m.gen_id("psi").unwrap();
    let cpsi = {
        let ident = m.identity_expression(psi, 1); // free: D, i, beta
        let gt_stack = Tensor::from_fn(
            spec(vec![up(ST6), up(SP6), up(SP6)]),
            |ix| six.gt[ix[0]].at(ix[1], ix[2]).clone(),
        );
        ident.contract_with(&gt_stack, &[(0, 0), (2, 2)])
    };
    m.add_quotient_relation(&cpsi, 3);

    // box phi = 0.
    let phi = m.gen_id("phi").unwrap();
    let boxphi = {
        let ident = m.identity_expression(phi, 2); // free: D, E
        let eta_up = crate::tensor::metric(ST6, Variance::Upper);
        ident.contract_with(&eta_up, &[(0, 0), (1, 1)])
    };
    m.add_quotient_relation(&boxphi, 3);

    // d_D H_ABC = 2 d_[A H_BC]D - eta_D[A d.H_BC]E + (1/6) eps_ABC^EFG d_E H_FGD.
    let jdh = jdh_relation(m, six);
    m.add_quotient_relation(&jdh, 3);
}

/// The oriented first-derivative constraint on the self-dual 3-form jets.
fn jdh_relation(m: &Model, six: &Six) -> Expression {
    let h = m.gen_id("H").unwrap();
    let base = m.identity_expression(h, 1); // free: (D, A, B, C) = d_D H_ABC
    let t1 = base.clone();

    // 2 d_[A H_BC]D: reorder to F[d,a,b,c] = base[a,b,c,d], antisymmetrize (1,2,3).
    let t2 = brace_free(&base.permute_free(&[1, 2, 3, 0]), &[1, 2, 3]);

    // eta_{D[A} d^E H_{BC]E}: S(B', C') = eta^{EF} d_E H_{B'C'F}.
    let eta_up = crate::tensor::metric(ST6, Variance::Upper);
    let s = base.contract_with(&eta_up, &[(0, 0), (1, 3)]); // free: (B', C')
    let eta_dn = crate::tensor::metric(ST6, Variance::Lower);
    let g = s.contract_with(&eta_dn, &[]); // free: (D, A, B', C')
    let t3 = brace_free(&g, &[1, 2, 3]);

    // (1/6) eps_{ABC}^{EFG} d_E H_{FGD}: contract then reorder to (D,A,B,C).
    let eps_mixed = six.rep.eps_mixed_down_up();
    let t4 = base
        .contract_with(&eps_mixed, &[(3, 0), (4, 1), (5, 2)])
        .permute_free(&[3, 0, 1, 2]);

    t1.sub(&t2.scale(&gi(2)))
        .add(&t3)
        .sub(&t4.scale(&GaussianRational::frac(1, 6)))
}

/// Strength-one antisymmetrization over free slots of an expression.
pub fn brace_free(expr: &Expression, positions: &[usize]) -> Expression {
    let k = positions.len();
    let perms = crate::tensor::permutations_of(k);
    let mut acc: Option<Expression> = None;
    for (perm, sign) in &perms {
        let mut full: Vec<usize> = (0..expr.free.rank()).collect();
        for (slot, &src) in positions.iter().zip(perm.iter()) {
            full[*slot] = positions[src];
        }
        let term = expr.permute_free(&full);
        let term = if *sign > 0 { term } else { term.neg() };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap()
        .scale(&GaussianRational::frac(1, (1..=k as i64).product()))
}

/// On-shell tensor multiplet with the two-form field, gauge charge, and the
/// self-duality plus spinor field equations in the quotient.
fn tensor_onshell(jet_max: usize) -> Result<Model> {
    let six = Six::new(1)?;
    let gens = vec![
        FieldGenerator::new(
            "B",
            spec(vec![dn(ST6), dn(ST6)]),
            Parity::Boson,
            Constraint::Antisym,
        ),
        psi_gen(1),
        FieldGenerator::new("phi", spec(vec![]), Parity::Boson, Constraint::None),
    ];
    let mut m = Model::new(
        "6d-tensor-onshell",
        1,
        ST6,
        gens,
        vec![ChargeKind::Q, ChargeKind::P, ChargeKind::Z],
        true,
        jet_max,
        ClosureForm::PPlusZ,
        Some(six.rep.clone()),
        None,
        None,
    );
    set_rules_tensor_multiplet(&mut m, &six, TensorFlavor::OnshellB);

    let minus_i = -&GaussianRational::I;
    // [Z_C, B_AB] = -i(d_A B_BC - d_B B_AC + eta_CA d_B phi - eta_CB d_A phi)
    let t_zb_b = Tensor::from_fn(
        spec(vec![dn(ST6), dn(ST6), dn(ST6), up(ST6), up(ST6), up(ST6)]),
        |ix| {
            let (c, a, b, d, x, y) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
            let mut v = 0i64;
            if d == a && x == b && y == c {
                v += 1;
            }
            if d == b && x == a && y == c {
                v -= 1;
            }
            &gi(v) * &minus_i
        },
    );
    let t_zb_phi = Tensor::from_fn(
        spec(vec![dn(ST6), dn(ST6), dn(ST6), up(ST6)]),
        |ix| {
            let (c, a, b, d) = (ix[0], ix[1], ix[2], ix[3]);
            let mut v = 0i64;
            if c == a && d == b {
                v += eta_sign(c);
            }
            if c == b && d == a {
                v -= eta_sign(c);
            }
            &gi(v) * &minus_i
        },
    );
    m.set_rule(
        ChargeKind::Z,
        "B",
        vec![("B", 1, t_zb_b), ("phi", 1, t_zb_phi)],
    );
    m.set_rule(ChargeKind::Z, "psi", vec![]);
    m.set_rule(ChargeKind::Z, "phi", vec![]);

    m.validate_grading()?;
    m.build_actions();

    // Quotient: self-duality of the field strength, and the spinor equation.
    let b = m.gen_id("B").unwrap();
    let h_expr = brace_free(&m.identity_expression(b, 1), &[0, 1, 2]);
    let eps_mixed = six.rep.eps_mixed_down_up();
    let dual = h_expr
        .contract_with(&eps_mixed, &[(3, 0), (4, 1), (5, 2)])
        .scale(&GaussianRational::frac(1, 6));
    let minus_part = h_expr.sub(&dual).scale(&GaussianRational::frac(1, 2));
    m.add_quotient_relation(&minus_part, 3);

    let psi = m.gen_id("psi").unwrap();
    let empsi = {
        let ident = m.identity_expression(psi, 1);
        let gt_stack = Tensor::from_fn(
            spec(vec![up(ST6), up(SP6), up(SP6)]),
            |ix| six.gt[ix[0]].at(ix[1], ix[2]).clone(),
        );
        ident.contract_with(&gt_stack, &[(0, 0), (2, 2)])
    };
    m.add_quotient_relation(&empsi, 3);
    Ok(m)
}

/// Rigid two-form toy model: the x-expansion coefficient operators of the
/// solved two-form multiplet, with explicit translation rules.
fn toy_rigid6(n: u8, jet_max: usize) -> Result<Model> {
    let six = Six::new(n)?;
    let rep_for_projector = six.rep.clone();
    let sd = move |t: &Tensor| -> Tensor {
        project_selfdual3(&rep_for_projector, &crate::tensor::brace_project(t, &[0, 1, 2], BraceMode::Antisym).unwrap())
            .unwrap()
            .0
    };
    let gens = vec![
        FieldGenerator::new("calB1", spec(vec![dn(ST6)]), Parity::Boson, Constraint::None),
        FieldGenerator::new(
            "calB3",
            spec(vec![dn(ST6), dn(ST6), dn(ST6)]),
            Parity::Boson,
            Constraint::AntisymSelfDual,
        ),
        FieldGenerator::new(
            "calB2",
            spec(vec![dn(ST6), dn(ST6)]),
            Parity::Boson,
            Constraint::Antisym,
        ),
        psi_gen(n),
    ];
    let mut m = Model::new(
        "6d-toy-rigid",
        n,
        ST6,
        gens,
        vec![ChargeKind::Q, ChargeKind::P],
        false,
        jet_max,
        ClosureForm::POnly,
        Some(six.rep.clone()),
        None,
        Some(&sd),
    );
    let eps = six.rep.symplectic_up.clone();
    let minus_i = -&GaussianRational::I;
    let nn = n;

    m.set_rule(ChargeKind::Q, "calB1", vec![]);
    m.set_rule(ChargeKind::Q, "calB3", vec![]);
    // [Q^i_a, calB_AB] = -i (gamma_[A gt_B] psi^i)_a
    let t_qb2 = Tensor::from_fn(
        spec(vec![
            up(sympl(nn)),
            dn(SP6),
            dn(ST6),
            dn(ST6),
            dn(sympl(nn)),
            up(SP6),
        ]),
        |ix| {
            if ix[0] != ix[4] {
                return GaussianRational::ZERO;
            }
            six.g2low[ix[2]][ix[3]].at(ix[1], ix[5]) * &minus_i
        },
    );
    m.set_rule(ChargeKind::Q, "calB2", vec![("psi", 0, t_qb2)]);

    // {Q^i_a, psi^j_b} = eps^{ij}(-calB^A gamma_A + 1/12 calB_ABC Gamma^ABC)_{ab}
    let t_qpsi_b1 = Tensor::from_fn(
        spec(vec![up(sympl(nn)), dn(SP6), up(sympl(nn)), dn(SP6), up(ST6)]),
        |ix| {
            let e = eps.get(&[ix[0], ix[2]]);
            if e.is_zero() {
                return GaussianRational::ZERO;
            }
            -&(e * six.g[ix[4]].at(ix[1], ix[3]))
        },
    );
    let t_qpsi_b3 = Tensor::from_fn(
        spec(vec![
            up(sympl(nn)),
            dn(SP6),
            up(sympl(nn)),
            dn(SP6),
            up(ST6),
            up(ST6),
            up(ST6),
        ]),
        |ix| {
            let e = eps.get(&[ix[0], ix[2]]);
            if e.is_zero() {
                return GaussianRational::ZERO;
            }
            &(e * six.gam3[ix[4]][ix[5]][ix[6]].at(ix[1], ix[3])) * &GaussianRational::frac(1, 12)
        },
    );
    m.set_rule(
        ChargeKind::Q,
        "psi",
        vec![("calB1", 0, t_qpsi_b1), ("calB3", 0, t_qpsi_b3)],
    );

    m.set_rule(ChargeKind::P, "calB1", vec![]);
    m.set_rule(ChargeKind::P, "calB3", vec![]);
    m.set_rule(ChargeKind::P, "psi", vec![]);
    // [P_C, calB_AB] = -i(calB_A eta_BC - calB_B eta_CA + calB_ABC)
    let t_pb2_b1 = Tensor::from_fn(
        spec(vec![dn(ST6), dn(ST6), dn(ST6), up(ST6)]),
        |ix| {
            let (c, a, b, x) = (ix[0], ix[1], ix[2], ix[3]);
            let mut v = 0i64;
            if x == a && b == c {
                v += eta_sign(b);
            }
            if x == b && c == a {
                v -= eta_sign(c);
            }
            &gi(v) * &minus_i
        },
    );
    let t_pb2_b3 = Tensor::from_fn(
        spec(vec![dn(ST6), dn(ST6), dn(ST6), up(ST6), up(ST6), up(ST6)]),
        |ix| {
            let (c, a, b, x, y, z) = (ix[0], ix[1], ix[2], ix[3], ix[4], ix[5]);
            if x == a && y == b && z == c {
                minus_i.clone()
            } else {
                GaussianRational::ZERO
            }
        },
    );
    m.set_rule(
        ChargeKind::P,
        "calB2",
        vec![("calB1", 0, t_pb2_b1), ("calB3", 0, t_pb2_b3)],
    );

    m.validate_grading()?;
    m.build_actions();
    Ok(m)
}

// ---------------------------------------------------------------------------
// 4d models
// ---------------------------------------------------------------------------

/// On-shell Maxwell multiplet with the gauge charge and Weyl field
/// equations in the quotient.
fn maxwell_onshell(jet_max: usize) -> Result<Model> {
    let four = Four::new()?;
    let gens = vec![
        FieldGenerator::new("A", spec(vec![dn(ST4)]), Parity::Boson, Constraint::None),
        FieldGenerator::new("psi", spec(vec![up(S4U)]), Parity::Fermion, Constraint::None),
        FieldGenerator::new(
            "psibar",
            spec(vec![up(S4D)]),
            Parity::Fermion,
            Constraint::None,
        ),
    ];
    let mut m = Model::new(
        "4d-maxwell-onshell",
        1,
        ST4,
        gens,
        vec![ChargeKind::Q, ChargeKind::QBar, ChargeKind::P, ChargeKind::Z],
        true,
        jet_max,
        ClosureForm::PPlusZ,
        None,
        Some(four.rep.clone()),
        None,
    );
    let i_ = GaussianRational::I;

    // [Q_a, A_mu] = (sigma_mu psibar)_a
    let t_qa = Tensor::from_fn(spec(vec![dn(S4U), dn(ST4), dn(S4D)]), |ix| {
        let (al, mu, bd) = (ix[0], ix[1], ix[2]);
        four.s[mu].at(al, bd) * &gi(eta_sign(mu))
    });
    m.set_rule(ChargeKind::Q, "A", vec![("psibar", 0, t_qa)]);
    // [Qbar_ad, A_mu] = -(psi sigma_mu)_ad
    let t_qba = Tensor::from_fn(spec(vec![dn(S4D), dn(ST4), dn(S4U)]), |ix| {
        let (ad, mu, be) = (ix[0], ix[1], ix[2]);
        -&(four.s[mu].at(be, ad) * &gi(eta_sign(mu)))
    });
    m.set_rule(ChargeKind::QBar, "A", vec![("psi", 0, t_qba)]);

    // {Q_a, psi^b} = i (sigma^{[rho} st^{lambda]})_a^b d_rho A_lambda
    let t_qpsi = Tensor::from_fn(
        spec(vec![dn(S4U), up(S4U), up(ST4), up(ST4)]),
        |ix| four.s2[ix[2]][ix[3]].at(ix[0], ix[1]) * &i_,
    );
    m.set_rule(ChargeKind::Q, "psi", vec![("A", 1, t_qpsi)]);
    // {Qbar_ad, psibar^bd} = i (st^{[rho} s^{lambda]})^{bd}_{ad} d_rho A_lambda
    let t_qbpsibar = Tensor::from_fn(
        spec(vec![dn(S4D), up(S4D), up(ST4), up(ST4)]),
        |ix| four.s2t[ix[2]][ix[3]].at(ix[1], ix[0]) * &i_,
    );
    m.set_rule(ChargeKind::QBar, "psibar", vec![("A", 1, t_qbpsibar)]);

    m.set_rule(ChargeKind::Q, "psibar", vec![]);
    m.set_rule(ChargeKind::QBar, "psi", vec![]);

    // [Z_mu, A_nu] = i d_nu A_mu
    let t_za = Tensor::from_fn(
        spec(vec![dn(ST4), dn(ST4), up(ST4), up(ST4)]),
        |ix| {
            let (mu, nu, d, lam) = (ix[0], ix[1], ix[2], ix[3]);
            if d == nu && lam == mu {
                i_.clone()
            } else {
                GaussianRational::ZERO
            }
        },
    );
    m.set_rule(ChargeKind::Z, "A", vec![("A", 1, t_za)]);
    m.set_rule(ChargeKind::Z, "psi", vec![]);
    m.set_rule(ChargeKind::Z, "psibar", vec![]);

    m.validate_grading()?;
    m.build_actions();

    // Quotient: sigma^mu d_mu psibar = 0 and d_mu psi sigma^mu = 0.
    let psibar = m.gen_id("psibar").unwrap();
    let eom1 = {
        let ident = m.identity_expression(psibar, 1); // free: D, bdot (upper)
        // (sigma^D)_{a bd}: slot 1 stays free (a), slot 2 pairs the jet's
        // upper dotted index.
        let s_stack = Tensor::from_fn(spec(vec![up(ST4), dn(S4U), dn(S4D)]), |ix| {
            four.s[ix[0]].at(ix[1], ix[2]).clone()
        });
        ident.contract_with(&s_stack, &[(0, 0), (2, 1)])
    };
    m.add_quotient_relation(&eom1, 3);
    let psi = m.gen_id("psi").unwrap();
    let eom2 = {
        let ident = m.identity_expression(psi, 1); // free: D, b (upper)
        // (sigma^D)_{b ad}: slot 1 pairs the jet's upper undotted index,
        // slot 2 stays free (ad).
        let s_stack = Tensor::from_fn(spec(vec![up(ST4), dn(S4U), dn(S4D)]), |ix| {
            four.s[ix[0]].at(ix[1], ix[2]).clone()
        });
        ident.contract_with(&s_stack, &[(0, 0), (1, 1)])
    };
    m.add_quotient_relation(&eom2, 3);
    Ok(m)
}

/// Rigid one-form toy model: the x-expansion coefficients of the solved
/// one-form multiplet, with explicit translation rules.
fn toy_rigid4(jet_max: usize) -> Result<Model> {
    let four = Four::new()?;
    let gens = vec![
        FieldGenerator::new("a", spec(vec![dn(ST4)]), Parity::Boson, Constraint::None),
        FieldGenerator::new("lambda", spec(vec![]), Parity::Boson, Constraint::None),
        FieldGenerator::new(
            "w",
            spec(vec![dn(ST4), dn(ST4)]),
            Parity::Boson,
            Constraint::Antisym,
        ),
        FieldGenerator::new("b", spec(vec![dn(ST4)]), Parity::Boson, Constraint::None),
        FieldGenerator::new("xi", spec(vec![up(S4U)]), Parity::Fermion, Constraint::None),
        FieldGenerator::new(
            "xibar",
            spec(vec![up(S4D)]),
            Parity::Fermion,
            Constraint::None,
        ),
        FieldGenerator::new("rho", spec(vec![dn(S4U)]), Parity::Fermion, Constraint::None),
        FieldGenerator::new(
            "rhobar",
            spec(vec![dn(S4D)]),
            Parity::Fermion,
            Constraint::None,
        ),
        FieldGenerator::new("varphi", spec(vec![]), Parity::Boson, Constraint::None),
    ];
    let mut m = Model::new(
        "4d-toy-rigid",
        1,
        ST4,
        gens,
        vec![ChargeKind::Q, ChargeKind::QBar, ChargeKind::P],
        false,
        jet_max,
        ClosureForm::POnly,
        None,
        Some(four.rep.clone()),
        None,
    );
    let i_ = GaussianRational::I;

    // [Q_a, a_mu] = (sigma_mu xibar)_a ; [Qbar_ad, a_mu] = -(xi sigma_mu)_ad
    let t_qa = Tensor::from_fn(spec(vec![dn(S4U), dn(ST4), dn(S4D)]), |ix| {
        four.s[ix[1]].at(ix[0], ix[2]) * &gi(eta_sign(ix[1]))
    });
    m.set_rule(ChargeKind::Q, "a", vec![("xibar", 0, t_qa)]);
    let t_qba = Tensor::from_fn(spec(vec![dn(S4D), dn(ST4), dn(S4U)]), |ix| {
        -&(four.s[ix[1]].at(ix[2], ix[0]) * &gi(eta_sign(ix[1])))
    });
    m.set_rule(ChargeKind::QBar, "a", vec![("xi", 0, t_qba)]);

    // [Q_a, lambda] = rho_a ; [Qbar_ad, lambda] = -rhobar_ad
    let t_ql = Tensor::from_fn(spec(vec![dn(S4U), up(S4U)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::ONE
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(ChargeKind::Q, "lambda", vec![("rho", 0, t_ql)]);
    let t_qbl = Tensor::from_fn(spec(vec![dn(S4D), up(S4D)]), |ix| {
        if ix[0] == ix[1] {
            gi(-1)
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(ChargeKind::QBar, "lambda", vec![("rhobar", 0, t_qbl)]);

    // [Q_a, w_mn] = (sigma_[m st_n] rho)_a ; [Qbar, w_mn] = (rhobar st_[m s_n])_ad
    let t_qw = Tensor::from_fn(
        spec(vec![dn(S4U), dn(ST4), dn(ST4), up(S4U)]),
        |ix| {
            let sgn = gi(eta_sign(ix[1]) * eta_sign(ix[2]));
            four.s2[ix[1]][ix[2]].at(ix[0], ix[3]) * &sgn
        },
    );
    m.set_rule(ChargeKind::Q, "w", vec![("rho", 0, t_qw)]);
    let t_qbw = Tensor::from_fn(
        spec(vec![dn(S4D), dn(ST4), dn(ST4), up(S4D)]),
        |ix| {
            let sgn = gi(eta_sign(ix[1]) * eta_sign(ix[2]));
            four.s2t[ix[1]][ix[2]].at(ix[3], ix[0]) * &sgn
        },
    );
    m.set_rule(ChargeKind::QBar, "w", vec![("rhobar", 0, t_qbw)]);

    m.set_rule(ChargeKind::Q, "b", vec![]);
    m.set_rule(ChargeKind::QBar, "b", vec![]);

    // {Q_a, xi^b} = -(i/2) w_mn (s^{[m} st^{n]})_a^b + (varphi + i lambda) delta
    let t_qxi_w = Tensor::from_fn(
        spec(vec![dn(S4U), up(S4U), up(ST4), up(ST4)]),
        |ix| four.s2[ix[2]][ix[3]].at(ix[0], ix[1]) * &GaussianRational::frac_i(-1, 2),
    );
    let t_qxi_phi = Tensor::from_fn(spec(vec![dn(S4U), up(S4U)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::ONE
        } else {
            GaussianRational::ZERO
        }
    });
    let t_qxi_l = Tensor::from_fn(spec(vec![dn(S4U), up(S4U)]), |ix| {
        if ix[0] == ix[1] {
            i_.clone()
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(
        ChargeKind::Q,
        "xi",
        vec![
            ("w", 0, t_qxi_w),
            ("varphi", 0, t_qxi_phi),
            ("lambda", 0, t_qxi_l),
        ],
    );
    let t_qbxib_w = Tensor::from_fn(
        spec(vec![dn(S4D), up(S4D), up(ST4), up(ST4)]),
        |ix| four.s2t[ix[2]][ix[3]].at(ix[1], ix[0]) * &GaussianRational::frac_i(-1, 2),
    );
    let t_qbxib_phi = Tensor::from_fn(spec(vec![dn(S4D), up(S4D)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::ONE
        } else {
            GaussianRational::ZERO
        }
    });
    let t_qbxib_l = Tensor::from_fn(spec(vec![dn(S4D), up(S4D)]), |ix| {
        if ix[0] == ix[1] {
            -&i_
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(
        ChargeKind::QBar,
        "xibar",
        vec![
            ("w", 0, t_qbxib_w),
            ("varphi", 0, t_qbxib_phi),
            ("lambda", 0, t_qbxib_l),
        ],
    );

    m.set_rule(ChargeKind::Q, "xibar", vec![]);
    m.set_rule(ChargeKind::QBar, "xi", vec![]);
    m.set_rule(ChargeKind::Q, "rho", vec![]);
    m.set_rule(ChargeKind::QBar, "rhobar", vec![]);

    // {Q_a, rhobar_bd} = 2i (b.sigma)_{a bd} ; {Qbar_ad, rho_a} = -2i (b.sigma)_{a ad}
    let t_qrhobar = Tensor::from_fn(
        spec(vec![dn(S4U), dn(S4D), up(ST4)]),
        |ix| four.s[ix[2]].at(ix[0], ix[1]) * &GaussianRational::frac_i(2, 1),
    );
    m.set_rule(ChargeKind::Q, "rhobar", vec![("b", 0, t_qrhobar)]);
    // Free slots are (ad, a); sigma's index order is (a, ad).
    let t_qbrho = Tensor::from_fn(
        spec(vec![dn(S4D), dn(S4U), up(ST4)]),
        |ix| four.s[ix[2]].at(ix[1], ix[0]) * &GaussianRational::frac_i(-2, 1),
    );
    m.set_rule(ChargeKind::QBar, "rho", vec![("b", 0, t_qbrho)]);

    // Translations.
    // [P_mu, a_nu] = i (w_mn - lambda eta_mn)
    let t_pa_w = Tensor::from_fn(
        spec(vec![dn(ST4), dn(ST4), up(ST4), up(ST4)]),
        |ix| {
            if ix[2] == ix[0] && ix[3] == ix[1] {
                i_.clone()
            } else {
                GaussianRational::ZERO
            }
        },
    );
    let t_pa_l = Tensor::from_fn(spec(vec![dn(ST4), dn(ST4)]), |ix| {
        if ix[0] == ix[1] {
            &i_ * &gi(-eta_sign(ix[0]))
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(
        ChargeKind::P,
        "a",
        vec![("w", 0, t_pa_w), ("lambda", 0, t_pa_l)],
    );
    // [P_mu, lambda] = -2i b_mu
    let t_pl = Tensor::from_fn(spec(vec![dn(ST4), up(ST4)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::frac_i(-2, 1)
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(ChargeKind::P, "lambda", vec![("b", 0, t_pl)]);
    // [P_l, w_mn] = 2i(b_m eta_nl - b_n eta_ml)
    let t_pw = Tensor::from_fn(
        spec(vec![dn(ST4), dn(ST4), dn(ST4), up(ST4)]),
        |ix| {
            let (l, mth, nth, x) = (ix[0], ix[1], ix[2], ix[3]);
            let mut v = 0i64;
            if x == mth && nth == l {
                v += eta_sign(nth);
            }
            if x == nth && mth == l {
                v -= eta_sign(mth);
            }
            &gi(2 * v) * &i_
        },
    );
    m.set_rule(ChargeKind::P, "w", vec![("b", 0, t_pw)]);
    m.set_rule(ChargeKind::P, "b", vec![]);
    // [P_mu, xi^a] = -i (rhobar st_mu)^a ; [P_mu, xibar^ad] = -i (st_mu rho)^ad
    let t_pxi = Tensor::from_fn(
        spec(vec![dn(ST4), up(S4U), up(S4D)]),
        |ix| {
            let v = four.st[ix[0]].at(ix[2], ix[1]) * &gi(eta_sign(ix[0]));
            &v * &GaussianRational::frac_i(-1, 1)
        },
    );
    m.set_rule(ChargeKind::P, "xi", vec![("rhobar", 0, t_pxi)]);
    let t_pxibar = Tensor::from_fn(
        spec(vec![dn(ST4), up(S4D), up(S4U)]),
        |ix| {
            let v = four.st[ix[0]].at(ix[1], ix[2]) * &gi(eta_sign(ix[0]));
            &v * &GaussianRational::frac_i(-1, 1)
        },
    );
    m.set_rule(ChargeKind::P, "xibar", vec![("rho", 0, t_pxibar)]);
    m.set_rule(ChargeKind::P, "rho", vec![]);
    m.set_rule(ChargeKind::P, "rhobar", vec![]);

    // [Q_a, varphi] = -3i rho_a ; [Qbar_ad, varphi] = -3i rhobar_ad ; [P, varphi] = 0
    let t_qv = Tensor::from_fn(spec(vec![dn(S4U), up(S4U)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::frac_i(-3, 1)
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(ChargeKind::Q, "varphi", vec![("rho", 0, t_qv)]);
    let t_qbv = Tensor::from_fn(spec(vec![dn(S4D), up(S4D)]), |ix| {
        if ix[0] == ix[1] {
            GaussianRational::frac_i(-3, 1)
        } else {
            GaussianRational::ZERO
        }
    });
    m.set_rule(ChargeKind::QBar, "varphi", vec![("rhobar", 0, t_qbv)]);
    m.set_rule(ChargeKind::P, "varphi", vec![]);

    m.validate_grading()?;
    m.build_actions();
    Ok(m)
}
