//! Integration tests of the charge engine against the catalog's stated
//! transformation rules, bracket values, and error contracts.

use pform_core::engine::*;
use pform_core::matrix::Mat;
use pform_core::tensor::Tensor;
use pform_core::{GaussianRational, IndexKind, IndexSlot, IndexSpec};

fn up(k: IndexKind) -> IndexSlot {
    IndexSlot::up(k)
}
fn dn(k: IndexKind) -> IndexSlot {
    IndexSlot::down(k)
}

#[test]
fn catalog_and_config_errors() {
    assert!(load_model("no-such-model", 1).is_err());
    assert!(load_model("6d-tensor-onshell", 2).is_err());
    assert!(load_model("4d-toy-rigid", 3).is_err());
    assert!(load_model("6d-toy-rigid", 0).is_err());
    assert!(load_model("6d-toy-rigid", 2).is_ok());
}

#[test]
fn translation_rule_on_constant_two_form() {
    // [P_C, calB_AB] = -i(calB_A eta_BC - calB_B eta_CA + calB_ABC):
    // exercise at concrete labels. With C = 2, A = 0, B = 2:
    // -i(calB_0 eta_{22} - calB_2 eta_{20} + calB_{022})
    //   = -i(-calB_0 + calB_{022}).
    let m = load_model("6d-toy-rigid", 1).unwrap();
    let e = act(&m, &Charge::p(2), &JetField::new("calB2", &[])).unwrap();
    // slice the symbolic A, B indices of calB2 to (0, 2)
    let e = e.slice_free(0, 0).slice_free(0, 2);

    let b1 = m.gen_id("calB1").unwrap();
    let b3 = m.gen_id("calB3").unwrap();
    // expected: -i * (-1) * calB1[0] - i * calB3_{0,2,2 -> antisym = 0}...
    // calB3_{022} vanishes by antisymmetry, so expected = +i calB1[0].
    let expected = m
        .identity_expression(b1, 0)
        .slice_free(0, 0)
        .scale(&GaussianRational::I);
    assert_eq!(e, expected);
    let _ = b3;
}

#[test]
fn supersymmetry_rule_on_scalar() {
    // [Q^i_a, phi] = -i psi^i_a at concrete labels (0, 1).
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    let e = act(&m, &Charge::q(0, 1), &JetField::new("phi", &[])).unwrap();
    let psi = m.gen_id("psi").unwrap();
    let expected = m
        .identity_expression(psi, 0)
        .slice_free(0, 0)
        .slice_free(0, 1)
        .scale(&(-&GaussianRational::I));
    assert_eq!(e, expected);
}

#[test]
fn gauge_charge_annihilates_spinor() {
    let m = load_model("4d-maxwell-onshell", 1).unwrap();
    let e = act(&m, &Charge::z(1), &JetField::new("psi", &[])).unwrap();
    assert!(e.is_zero());
}

#[test]
fn rigid_q_annihilates_expansion_coefficients() {
    // [Q^i_a, calB_A] = 0 and [Q^i_a, calB_ABC] = 0 for every label at N = 2.
    let m = load_model("6d-toy-rigid", 2).unwrap();
    for gen in ["calB1", "calB3"] {
        let e = act(&m, &Charge::symbolic(ChargeKind::Q), &JetField::new(gen, &[])).unwrap();
        assert!(e.is_zero(), "[Q, {gen}] must vanish");
    }
    // [Q_a, b_mu] = 0 in the one-form toy model.
    let m4 = load_model("4d-toy-rigid", 1).unwrap();
    let e = act(&m4, &Charge::symbolic(ChargeKind::Q), &JetField::new("b", &[])).unwrap();
    assert!(e.is_zero());
}

#[test]
fn missing_rule_and_jet_overflow_errors() {
    let toy = load_model("6d-toy-rigid", 1).unwrap();
    // No gauge charge in the rigid model.
    assert!(act(&toy, &Charge::z(0), &JetField::new("calB2", &[])).is_err());

    // Raising the derivative order past the truncation is a hard error.
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    let phi = m.gen_id("phi").unwrap();
    let mut e = m.identity_expression(phi, 0);
    for _ in 0..4 {
        e = act_on_expression(&m, ChargeKind::P, &e).unwrap();
    }
    assert!(act_on_expression(&m, ChargeKind::P, &e).is_err());

    // Unknown generator.
    assert!(act(&m, &Charge::p(0), &JetField::new("nope", &[])).is_err());
}

#[test]
fn bracket_on_scalar_is_translation() {
    // [{Q^i_a, Q^j_b}, phi] = -2i eps^{ij} gamma^A_{ab} d_A phi.
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    let brk = graded_bracket_on(&m, ChargeKind::Q, ChargeKind::Q, "phi").unwrap();
    let rep = m.rep6.as_ref().unwrap();
    let g: Vec<Mat> = (0..6).map(|a| rep.gamma_mat(a)).collect();
    let eps = rep.symplectic_up.clone();
    let t = Tensor::from_fn(
        IndexSpec::new(vec![
            up(IndexKind::Symplectic(1)),
            dn(IndexKind::Spinor6),
            up(IndexKind::Symplectic(1)),
            dn(IndexKind::Spinor6),
            up(IndexKind::Spacetime6),
        ]),
        |ix| {
            let e = eps.get(&[ix[0], ix[2]]);
            if e.is_zero() {
                return GaussianRational::ZERO;
            }
            &(e * g[ix[4]].at(ix[1], ix[3])) * &GaussianRational::frac_i(-2, 1)
        },
    );
    let phi = m.gen_id("phi").unwrap();
    let expected = m.identity_expression(phi, 1).contract_with(&t, &[(4, 0)]);
    assert_eq!(brk, expected);
}

#[test]
fn mixed_bracket_on_gauge_potential_is_field_strength() {
    // [{Q_a, Qbar_ad}, A_mu] = 2i F_{mu nu} sigma^nu_{a ad}.
    let m = load_model("4d-maxwell-onshell", 1).unwrap();
    let brk = graded_bracket_on(&m, ChargeKind::Q, ChargeKind::QBar, "A").unwrap();
    let rep = m.rep4.as_ref().unwrap();
    let s: Vec<Mat> = (0..4).map(|x| rep.sigma_mat(x)).collect();
    let t = Tensor::from_fn(
        IndexSpec::new(vec![
            dn(IndexKind::Spinor4Undotted),
            dn(IndexKind::Spinor4Dotted),
            up(IndexKind::Spacetime4),
        ]),
        |ix| s[ix[2]].at(ix[0], ix[1]) * &GaussianRational::frac_i(2, 1),
    );
    let a = m.gen_id("A").unwrap();
    let e = m.identity_expression(a, 1); // (d, x): d_d A_x
    // F_{mu nu} = d_mu A_nu - d_nu A_mu; contract nu with sigma.
    let term1 = e.contract_with(&t, &[(2, 1)]); // (a, ad) ++ (mu)
    let term2 = e.contract_with(&t, &[(2, 0)]); // (a, ad) ++ (nu->mu slot)
    let expected = term1.sub(&term2);
    assert_eq!(brk, expected);
}

#[test]
fn like_chirality_brackets_vanish() {
    let m = load_model("4d-toy-rigid", 1).unwrap();
    for gen in ["a", "lambda", "w", "b", "xi", "xibar", "rho", "rhobar", "varphi"] {
        let qq = graded_bracket_on(&m, ChargeKind::Q, ChargeKind::Q, gen).unwrap();
        assert!(qq.is_zero(), "{{Q,Q}} on {gen}");
        let bb = graded_bracket_on(&m, ChargeKind::QBar, ChargeKind::QBar, gen).unwrap();
        assert!(bb.is_zero(), "{{Qbar,Qbar}} on {gen}");
    }
}

#[test]
fn tower_examples() {
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    // [Z_A, H_BCD] = 0: evaluate the tower on the field-strength expression.
    let h_expr = brace_free_pub(&m.identity_expression(m.gen_id("B").unwrap(), 1), &[0, 1, 2]);
    let z = gauge_tower_raw(&m, &[Charge::symbolic(ChargeKind::Z)], &h_expr).unwrap();
    assert!(m.canonicalize(&z).is_zero());

    // Tower argument validation.
    assert!(gauge_tower(&m, &[], &JetField::new("B", &[])).is_err());
    assert!(gauge_tower(
        &m,
        &[Charge::symbolic(ChargeKind::Q)],
        &JetField::new("B", &[])
    )
    .is_err());

    // [Z_C, Z_D] acting on phi vanishes.
    let e = gauge_tower(
        &m,
        &[Charge::symbolic(ChargeKind::Z), Charge::symbolic(ChargeKind::Z)],
        &JetField::new("phi", &[]),
    )
    .unwrap();
    assert!(e.is_zero());
}

#[test]
fn canonicalization_is_idempotent_and_detects_equality() {
    // Confluence: canonical(canonical(e)) == canonical(e), and expressions
    // equal modulo the quotient share a canonical form.
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    let psi = m.gen_id("psi").unwrap();
    let e = act_on_expression(&m, ChargeKind::Q, &m.identity_expression(psi, 0)).unwrap();
    let once = m.canonicalize(&e);
    let twice = m.canonicalize(&once);
    assert_eq!(once, twice);

    // Adding any multiple of a quotient relation must not change the form.
    let rep = m.rep6.as_ref().unwrap();
    let gt: Vec<Mat> = (0..6).map(|a| rep.gamma_tilde_mat(a)).collect();
    let gt_stack = Tensor::from_fn(
        IndexSpec::new(vec![
            up(IndexKind::Spacetime6),
            up(IndexKind::Spinor6),
            up(IndexKind::Spinor6),
        ]),
        |ix| gt[ix[0]].at(ix[1], ix[2]).clone(),
    );
    let relation = m
        .identity_expression(psi, 1)
        .contract_with(&gt_stack, &[(0, 0), (2, 2)]);
    assert!(m.canonicalize(&relation).is_zero());
}

#[test]
fn relation_model_mismatch_is_catalog_error() {
    let m = load_model("6d-tensor-onshell", 1).unwrap();
    assert!(check_relation(&m, RelationId::Cpsi).is_err());
}
