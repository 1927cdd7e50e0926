//! Polynomial-ansatz solvers for the constrained kinematics.
//!
//! Two linear field equations are assembled over unknown rational
//! coefficients by matching monomial coefficients (no sampling), solved by
//! exact fraction-free elimination, and matched against the closed-form
//! solution families by mutual rank tests:
//!
//! * `MASTER6`: the two-form equation
//!   `d_A B_BC = 1/5 (eta_AB d.B_C - eta_AC d.B_B) + H_{+ABC}` with
//!   `H = d_[A B_BC]` at strength one, in six dimensions;
//! * `KILLING4`: the conformal Killing equation
//!   `d_mu A_nu + d_nu A_mu = 1/2 (d.A) eta_{mu nu}` in four dimensions.

use crate::clifford6::{build_gamma6, project_selfdual3, GammaRep6};
use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec};
use crate::linalg::{self, SRow};
use crate::report::MatchReport;
use crate::scalar::{GaussianRational, Rat};
use crate::tensor::Tensor;
use crate::Variance;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinematicsModel {
    Master6,
    Killing4,
}

impl KinematicsModel {
    pub fn id(self) -> &'static str {
        match self {
            KinematicsModel::Master6 => "MASTER6",
            KinematicsModel::Killing4 => "KILLING4",
        }
    }

    pub fn from_id(s: &str) -> Result<KinematicsModel> {
        match s {
            "MASTER6" => Ok(KinematicsModel::Master6),
            "KILLING4" => Ok(KinematicsModel::Killing4),
            _ => Err(Error::Catalog(format!("unknown kinematics model {s}"))),
        }
    }

    fn dim(self) -> usize {
        match self {
            KinematicsModel::Master6 => 6,
            KinematicsModel::Killing4 => 4,
        }
    }

    /// Independent field components: antisymmetric pairs for the two-form,
    /// plain vector components for the one-form.
    fn components(self) -> Vec<(usize, usize)> {
        match self {
            KinematicsModel::Master6 => {
                let mut v = Vec::new();
                for a in 0..6 {
                    for b in (a + 1)..6 {
                        v.push((a, b));
                    }
                }
                v
            }
            KinematicsModel::Killing4 => (0..4).map(|m| (m, 0)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateId {
    Eq27,
    F12,
}

impl TemplateId {
    pub fn id(self) -> &'static str {
        match self {
            TemplateId::Eq27 => "EQ27",
            TemplateId::F12 => "F12",
        }
    }

    pub fn from_id(s: &str) -> Result<TemplateId> {
        match s {
            "EQ27" => Ok(TemplateId::Eq27),
            "F12" => Ok(TemplateId::F12),
            _ => Err(Error::Catalog(format!("unknown template {s}"))),
        }
    }
}

/// Exponent vectors of all monomials in `dim` variables with total degree at
/// most `degree`, ordered by degree then lexicographically.
pub fn monomials(dim: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=degree {
        let mut cur = vec![0u32; dim];
        fill(dim, 0, d, &mut cur, &mut out);
    }
    return out;

    fn fill(dim: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == dim - 1 {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[pos] = k;
            fill(dim, pos + 1, left - k, cur, out);
            cur[pos] = 0;
        }
    }
}

/// A polynomial field ansatz: one unknown per (component, monomial).
#[derive(Clone, Debug)]
pub struct PolyAnsatz {
    pub model: KinematicsModel,
    pub degree: u32,
    pub components: Vec<(usize, usize)>,
    pub monomials: Vec<Vec<u32>>,
}

impl PolyAnsatz {
    pub fn new(model: KinematicsModel, degree: u32) -> PolyAnsatz {
        PolyAnsatz {
            model,
            degree,
            components: model.components(),
            monomials: monomials(model.dim(), degree),
        }
    }

    pub fn unknown_count(&self) -> usize {
        self.components.len() * self.monomials.len()
    }

    pub fn unknown(&self, comp: usize, mono: usize) -> usize {
        comp * self.monomials.len() + mono
    }

    fn mono_index(&self, m: &[u32]) -> usize {
        self.monomials
            .iter()
            .position(|x| x[..] == *m)
            .expect("monomial within degree bound")
    }
}

/// The field component `comp` as a polynomial (a single unknown per
/// monomial), represented as unknown-index weights per monomial. A "row
/// builder" accumulates, for each scalar equation and monomial, the weights
/// of every unknown.
struct RowAccum {
    /// unknown index -> coefficient
    entries: std::collections::BTreeMap<usize, Rat>,
}

impl RowAccum {
    fn new() -> RowAccum {
        RowAccum {
            entries: std::collections::BTreeMap::new(),
        }
    }

    fn add(&mut self, unknown: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(unknown).or_insert(Rat::ZERO);
        *slot += &c;
        if slot.is_zero() {
            self.entries.remove(&unknown);
        }
    }

    fn into_row(self) -> Vec<(usize, Rat)> {
        self.entries.into_iter().collect()
    }
}

#[derive(Clone, Debug)]
pub struct LinearConstraintSystem {
    pub model: KinematicsModel,
    pub degree: u32,
    pub ansatz: PolyAnsatz,
    pub rows: Vec<Vec<(usize, Rat)>>,
    /// Constraint id per row, for provenance.
    pub provenance: Vec<String>,
}

fn eta_sign(a: usize) -> i64 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Signed lookup of an antisymmetric component: `B_ab` in terms of the
/// stored `a<b` unknowns.
fn b_component(ansatz: &PolyAnsatz, a: usize, b: usize) -> Option<(usize, i64)> {
    if a == b {
        return None;
    }
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let comp = ansatz
        .components
        .iter()
        .position(|&(x, y)| (x, y) == (lo, hi))
        .expect("component");
    Some((comp, sign))
}

/// Coefficient-level derivative: contribution of unknown `(comp, m)` to the
/// monomial coefficients of `d_a field_comp`. Returns (monomial index of the
/// derivative, factor). `d_a x^m = m_a x^{m - e_a}` and lowering with the
/// diagonal metric is handled by the caller where needed.
fn derivative_terms(ansatz: &PolyAnsatz, mono: usize, a: usize) -> Option<(usize, Rat)> {
    let m = &ansatz.monomials[mono];
    if m[a] == 0 {
        return None;
    }
    let mut dm = m.clone();
    dm[a] -= 1;
    let idx = ansatz.mono_index(&dm);
    Some((idx, Rat::from(m[a] as i64)))
}

/// Assembles the constraint system for the model at the given maximum
/// polynomial degree; rows are coefficient-matching conditions per output
/// monomial. Degree is capped at 3: the closed-form solutions lie at degree
/// <= 2 and the cap leaves one degree of falsification margin.
pub fn assemble_system(model: KinematicsModel, degree: u32) -> Result<LinearConstraintSystem> {
    if degree > 3 {
        return Err(Error::Config(format!(
            "degree {degree} exceeds the supported cap of 3"
        )));
    }
    let ansatz = PolyAnsatz::new(model, degree);
    let mut rows = Vec::new();
    let mut provenance = Vec::new();

    match model {
        KinematicsModel::Killing4 => {
            // d_mu A_nu + d_nu A_mu - 1/2 (d.A) eta_{mu nu} = 0.
            // x-coordinates carry upper indices; d_mu x^nu = delta. A_nu is
            // the stored component; d.A = eta^{ab} d_a A_b.
            let out_monos = monomials(4, degree.saturating_sub(1));
            for mu in 0..4 {
                for nu in mu..4 {
                    for m in &out_monos {
                        let mut acc = RowAccum::new();
                        let target = ansatz.mono_index(m);
                        for mono in 0..ansatz.monomials.len() {
                            // d_mu A_nu term.
                            if let Some((idx, f)) = derivative_terms(&ansatz, mono, mu) {
                                if idx == target {
                                    acc.add(ansatz.unknown(nu, mono), f.clone());
                                }
                            }
                            // d_nu A_mu term.
                            if let Some((idx, f)) = derivative_terms(&ansatz, mono, nu) {
                                if idx == target {
                                    acc.add(ansatz.unknown(mu, mono), f.clone());
                                }
                            }
                            // -1/2 eta_{mu nu} eta^{ab} d_a A_b.
                            if mu == nu {
                                for a in 0..4 {
                                    if let Some((idx, f)) = derivative_terms(&ansatz, mono, a) {
                                        if idx == target {
                                            let w = &f
                                                * &Rat::new(
                                                    -eta_sign(mu) * eta_sign(a),
                                                    2,
                                                );
                                            acc.add(ansatz.unknown(a, mono), w);
                                        }
                                    }
                                }
                            }
                        }
                        let row = acc.into_row();
                        if !row.is_empty() {
                            rows.push(row);
                            provenance.push(format!("KILLING4[{mu},{nu}]m{:?}", m));
                        }
                    }
                }
            }
        }
        KinematicsModel::Master6 => {
            // d_A B_BC - 1/5 (eta_AB d.B_C - eta_AC d.B_B) - H_{+ABC} = 0,
            // H_{ABC} = d_[A B_BC] at strength one.
            let eps_up = crate::tensor::epsilon_tensor(IndexKind::Spacetime6, Variance::Upper)?;
            let out_monos = monomials(6, degree.saturating_sub(1));

            // Coefficient of each unknown in d_a B_{bc} (b,c arbitrary).
            let d_b = |ansatz: &PolyAnsatz,
                       a: usize,
                       b: usize,
                       c: usize,
                       target: usize|
             -> Vec<(usize, Rat)> {
                let mut out = Vec::new();
                if let Some((comp, sign)) = b_component(ansatz, b, c) {
                    for mono in 0..ansatz.monomials.len() {
                        if let Some((idx, f)) = derivative_terms(ansatz, mono, a) {
                            if idx == target {
                                out.push((ansatz.unknown(comp, mono), &f * &Rat::from(sign)));
                            }
                        }
                    }
                }
                out
            };
            // Strength-one H_{abc} = (1/3)(d_a B_bc + d_b B_ca + d_c B_ab).
            let h_terms = |ansatz: &PolyAnsatz, a: usize, b: usize, c: usize, target: usize| {
                let third = Rat::new(1, 3);
                let mut out: Vec<(usize, Rat)> = Vec::new();
                for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                    for (u, w) in d_b(ansatz, x, y, z, target) {
                        out.push((u, &w * &third));
                    }
                }
                out
            };

            for a in 0..6 {
                for b in 0..6 {
                    for c in (b + 1)..6 {
                        for m in &out_monos {
                            let target = ansatz.mono_index(m);
                            let mut acc = RowAccum::new();
                            for (u, w) in d_b(&ansatz, a, b, c, target) {
                                acc.add(u, w);
                            }
                            // -1/5 (eta_AB d.B_C - eta_AC d.B_B) with
                            // d.B_X = eta^{DE} d_D B_{EX}.
                            for (eta_pair, x, outer_sign) in
                                [(a == b, c, -1i64), (a == c, b, 1i64)]
                            {
                                if !eta_pair {
                                    continue;
                                }
                                let eta_ab = eta_sign(a);
                                for d in 0..6 {
                                    let w0 = Rat::new(outer_sign * eta_ab * eta_sign(d), 5);
                                    for (u, w) in d_b(&ansatz, d, d, x, target) {
                                        acc.add(u, &w * &w0);
                                    }
                                }
                            }
                            // -H_{+abc} = -1/2 (H_abc + (1/3!) eps_{abc}^{DEF} H_DEF).
                            let mhalf = Rat::new(-1, 2);
                            for (u, w) in h_terms(&ansatz, a, b, c, target) {
                                acc.add(u, &w * &mhalf);
                            }
                            for d in 0..6 {
                                for e in 0..6 {
                                    for f in 0..6 {
                                        // eps_{abc}^{def} = eps_down * raised
                                        // signs; eps_down = -eps_up entrywise.
                                        let v = eps_up.get(&[a, b, c, d, e, f]);
                                        if v.is_zero() {
                                            continue;
                                        }
                                        let sign = -v.re.to_i64().expect("unit epsilon entry")
                                            * eta_sign(d)
                                            * eta_sign(e)
                                            * eta_sign(f);
                                        let w0 = Rat::new(-sign, 12);
                                        for (u, w) in h_terms(&ansatz, d, e, f, target) {
                                            acc.add(u, &w * &w0);
                                        }
                                    }
                                }
                            }
                            let row = acc.into_row();
                            if !row.is_empty() {
                                rows.push(row);
                                provenance.push(format!("MASTER6[{a},{b},{c}]m{:?}", m));
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(LinearConstraintSystem {
        model,
        degree,
        ansatz,
        rows,
        provenance,
    })
}

#[derive(Clone, Debug)]
pub struct SolutionBasis {
    pub model: KinematicsModel,
    pub degree: u32,
    pub ansatz: PolyAnsatz,
    pub vectors: Vec<Vec<Rat>>,
}

impl SolutionBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Exact nullspace via fraction-free elimination.
pub fn nullspace_basis(system: &LinearConstraintSystem) -> SolutionBasis {
    let ech = linalg::fraction_free_echelon(system.rows.clone(), system.ansatz.unknown_count());
    SolutionBasis {
        model: system.model,
        degree: system.degree,
        ansatz: system.ansatz.clone(),
        vectors: ech.nullspace(),
    }
}

/// The closed-form template families as coefficient vectors over the same
/// unknown layout as the ansatz.
pub fn template_vectors(ansatz: &PolyAnsatz, template: TemplateId) -> Result<Vec<Vec<Rat>>> {
    let n = ansatz.unknown_count();
    let mut out = Vec::new();
    match (ansatz.model, template) {
        (KinematicsModel::Master6, TemplateId::Eq27) => {
            let lin = |a: usize| -> usize {
                // monomial index of x^a within the ansatz ordering
                let mut m = vec![0u32; 6];
                m[a] = 1;
                ansatz.mono_index(&m)
            };
            let const_m = ansatz.mono_index(&vec![0u32; 6]);

            // Family 1: B_AB = cB_A x_B - cB_B x_A, six parameters.
            // x_B = eta_BC x^C picks up the diagonal sign.
            for p in 0..6 {
                let mut v = vec![Rat::ZERO; n];
                for (comp_idx, &(a, b)) in ansatz.components.iter().enumerate() {
                    // B_ab = delta_{a,p} x_b - delta_{b,p} x_a
                    if a == p {
                        let u = comp_idx * ansatz.monomials.len() + lin(b);
                        v[u] += &Rat::from(eta_sign(b));
                    }
                    if b == p {
                        let u = comp_idx * ansatz.monomials.len() + lin(a);
                        v[u] -= &Rat::from(eta_sign(a));
                    }
                }
                out.push(v);
            }

            // Family 2: B_AB = cB_ABC x^C with cB self-dual; use an exact
            // basis of the 10-dimensional self-dual subspace.
            let rep = build_gamma6(1)?;
            let sd_basis = selfdual_basis(&rep);
            for t in &sd_basis {
                let mut v = vec![Rat::ZERO; n];
                for (comp_idx, &(a, b)) in ansatz.components.iter().enumerate() {
                    for c in 0..6 {
                        let val = t.get(&[a, b, c]);
                        if !val.is_zero() {
                            let u = comp_idx * ansatz.monomials.len() + lin(c);
                            v[u] += &val.re;
                        }
                    }
                }
                out.push(v);
            }

            // Family 3: constant antisymmetric cB_AB, 15 parameters.
            for comp_idx in 0..ansatz.components.len() {
                let mut v = vec![Rat::ZERO; n];
                v[comp_idx * ansatz.monomials.len() + const_m] = Rat::ONE;
                out.push(v);
            }
        }
        (KinematicsModel::Killing4, TemplateId::F12) => {
            let lin = |a: usize| -> usize {
                let mut m = vec![0u32; 4];
                m[a] = 1;
                ansatz.mono_index(&m)
            };
            let quad = |a: usize, b: usize| -> usize {
                let mut m = vec![0u32; 4];
                m[a] += 1;
                m[b] += 1;
                ansatz.mono_index(&m)
            };
            let const_m = ansatz.mono_index(&vec![0u32; 4]);
            let nm = ansatz.monomials.len();

            // a_mu: constants.
            for mu in 0..4 {
                let mut v = vec![Rat::ZERO; n];
                v[mu * nm + const_m] = Rat::ONE;
                out.push(v);
            }
            // lambda x_mu.
            {
                let mut v = vec![Rat::ZERO; n];
                for mu in 0..4 {
                    v[mu * nm + lin(mu)] = Rat::from(eta_sign(mu));
                }
                out.push(v);
            }
            // Rotation family: A_mu = w_{mu}{}^{nu} x_nu = w_{mu sigma} x^sigma
            // (the metric factors from raising and from x_nu cancel). One
            // basis vector per antisymmetric pair w_{rs} = 1 = -w_{sr}.
            for r in 0..4 {
                for s in (r + 1)..4 {
                    let mut v = vec![Rat::ZERO; n];
                    v[r * nm + lin(s)] += &Rat::ONE;
                    v[s * nm + lin(r)] -= &Rat::ONE;
                    out.push(v);
                }
            }
            // Special conformal family: A_mu = 2 (x.b) x_mu - x^2 b_mu with
            // b_nu = delta_{nu p}: (x.b) = x^p, x_mu = eta_{mu mu} x^mu and
            // x^2 = eta_{aa} x^a x^a.
            for p in 0..4 {
                let mut v = vec![Rat::ZERO; n];
                for mu in 0..4 {
                    v[mu * nm + quad(p, mu)] += &Rat::from(2 * eta_sign(mu));
                }
                for a in 0..4 {
                    v[p * nm + quad(a, a)] -= &Rat::from(eta_sign(a));
                }
                out.push(v);
            }
        }
        _ => {
            return Err(Error::Catalog(format!(
                "template {} does not apply to model {}",
                template.id(),
                ansatz.model.id()
            )))
        }
    }
    Ok(out)
}

/// Exact basis of the self-dual subspace of antisymmetric 3-forms, as
/// rank-3 tensors.
fn selfdual_basis(rep: &GammaRep6) -> Vec<Tensor> {
    let spec = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6); 3]);
    let mut rref = linalg::Rref::new(spec.total_len());
    let mut basis = Vec::new();
    for a in 0..6 {
        for b in (a + 1)..6 {
            for c in (b + 1)..6 {
                let mut t = Tensor::zeros(spec.clone());
                for (perm, sign) in crate::tensor::permutations_of(3) {
                    let idx = [[a, b, c][perm[0]], [a, b, c][perm[1]], [a, b, c][perm[2]]];
                    t.set(&idx, GaussianRational::from_int(sign as i64));
                }
                let (plus, _) = project_selfdual3(rep, &t).expect("projection");
                if rref.insert(linalg::dense_to_sparse(plus.data())) {
                    basis.push(plus);
                }
            }
        }
    }
    basis
}

/// Verifies span equality between a computed basis and a template family by
/// mutual rank tests, and reports the outcome.
pub fn match_template(basis: &SolutionBasis, template: TemplateId) -> Result<MatchReport> {
    let tvecs = template_vectors(&basis.ansatz, template)?;
    let n = basis.ansatz.unknown_count();
    let to_srow = |v: &Vec<Rat>| -> SRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, GaussianRational::real(x.clone())))
            .collect()
    };

    let basis_rref = linalg::rref_of(basis.vectors.iter().map(&to_srow), n);
    let template_rref = linalg::rref_of(tvecs.iter().map(&to_srow), n);

    let mut missing = 0usize;
    for t in &tvecs {
        if !basis_rref.in_rowspace(to_srow(t)) {
            missing += 1;
        }
    }
    let mut extra = 0usize;
    for b in &basis.vectors {
        if !template_rref.in_rowspace(to_srow(b)) {
            extra += 1;
        }
    }
    Ok(MatchReport {
        model: basis.model.id().to_string(),
        degree: basis.degree,
        dimension: basis.dimension(),
        template: template.id().to_string(),
        matched: missing == 0 && extra == 0,
        missing_directions: missing + extra,
    })
}

/// Field strength `H_{ABC} = d_[A B_BC]` (strength one) of a degree-<=1
/// two-form solution vector; constant, returned as a rank-3 tensor.
pub fn master6_field_strength(basis: &SolutionBasis, vector: &[Rat]) -> Tensor {
    assert_eq!(basis.model, KinematicsModel::Master6);
    let ansatz = &basis.ansatz;
    let spec = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime6); 3]);
    // d_a B_bc for a linear solution: the x^a coefficient of B_bc.
    let d_b = |a: usize, b: usize, c: usize| -> Rat {
        let Some((comp, sign)) = b_component(ansatz, b, c) else {
            return Rat::ZERO;
        };
        let mut m = vec![0u32; 6];
        m[a] = 1;
        let u = ansatz.unknown(comp, ansatz.mono_index(&m));
        &vector[u] * &Rat::from(sign)
    };
    Tensor::from_fn(spec, |idx| {
        let (a, b, c) = (idx[0], idx[1], idx[2]);
        let third = Rat::new(1, 3);
        let mut acc = Rat::ZERO;
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            acc += &(&d_b(x, y, z) * &third);
        }
        GaussianRational::real(acc)
    })
}

/// Checks that a polynomial one-form solution satisfies the conformal
/// Killing equation at `count` random rational points (a re-substitution
/// spot check on top of the exact coefficient matching).
pub fn killing4_resubstitution(
    basis: &SolutionBasis,
    vector: &[Rat],
    count: usize,
    rng: &mut impl Rng,
) -> bool {
    assert_eq!(basis.model, KinematicsModel::Killing4);
    let ansatz = &basis.ansatz;
    // numeric evaluation of d_mu A_nu at a rational point
    let eval_da = |mu: usize, nu: usize, x: &[Rat; 4]| -> Rat {
        let mut acc = Rat::ZERO;
        for (mi, m) in ansatz.monomials.iter().enumerate() {
            if m[mu] == 0 {
                continue;
            }
            let c = &vector[ansatz.unknown(nu, mi)];
            if c.is_zero() {
                continue;
            }
            let mut term = &Rat::from(m[mu] as i64) * c;
            for a in 0..4 {
                let pow = if a == mu { m[a] - 1 } else { m[a] };
                for _ in 0..pow {
                    term = &term * &x[a];
                }
            }
            acc += &term;
        }
        acc
    };
    for _ in 0..count {
        let x: [Rat; 4] = std::array::from_fn(|_| {
            Rat::new(rng.random_range(-12i64..=12), rng.random_range(1i64..=7))
        });
        // trace part: (d.A) = eta^{mn} d_m A_n
        let mut div = Rat::ZERO;
        for m in 0..4 {
            let v = &eval_da(m, m, &x) * &Rat::from(eta_sign(m));
            div += &v;
        }
        for mu in 0..4 {
            for nu in 0..4 {
                let mut lhs = &eval_da(mu, nu, &x) + &eval_da(nu, mu, &x);
                if mu == nu {
                    lhs -= &(&div * &Rat::new(eta_sign(mu), 2));
                }
                if !lhs.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn unknown_counts_match_combinatorics() {
        // Oracle: 15 antisymmetric components x sum_{k<=3} C(5+k,k) = 84
        // monomials; 4 x 35 for the one-form.
        let m6 = PolyAnsatz::new(KinematicsModel::Master6, 3);
        assert_eq!(m6.monomials.len(), 84);
        assert_eq!(m6.unknown_count(), 1260);
        let k4 = PolyAnsatz::new(KinematicsModel::Killing4, 3);
        assert_eq!(k4.monomials.len(), 35);
        assert_eq!(k4.unknown_count(), 140);
    }

    #[test]
    fn degree_cap_is_config_error() {
        assert!(assemble_system(KinematicsModel::Master6, 4).is_err());
    }

    #[test]
    fn degree_zero_master6_is_unconstrained() {
        // Both sides of the two-form equation are built from derivatives, so
        // every constant B satisfies the system.
        let sys = assemble_system(KinematicsModel::Master6, 0).unwrap();
        let basis = nullspace_basis(&sys);
        assert_eq!(basis.dimension(), 15);
    }

    #[test]
    fn killing4_dimensions_by_degree() {
        // Conformal algebra in 4d: dimension 15, saturated at degree 2.
        let dims: Vec<usize> = (0..=3)
            .map(|d| {
                let sys = assemble_system(KinematicsModel::Killing4, d).unwrap();
                nullspace_basis(&sys).dimension()
            })
            .collect();
        assert_eq!(dims, vec![4, 11, 15, 15]);
    }

    #[test]
    fn killing4_template_matches() {
        let sys = assemble_system(KinematicsModel::Killing4, 3).unwrap();
        let basis = nullspace_basis(&sys);
        assert_eq!(basis.dimension(), 15);
        let report = match_template(&basis, TemplateId::F12).unwrap();
        assert!(report.matched, "missing {}", report.missing_directions);

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for v in &basis.vectors {
            assert!(killing4_resubstitution(&basis, v, 20, &mut rng));
        }
    }

    #[test]
    fn master6_degree_one() {
        let sys = assemble_system(KinematicsModel::Master6, 1).unwrap();
        let basis = nullspace_basis(&sys);
        assert_eq!(basis.dimension(), 31);
    }
}
