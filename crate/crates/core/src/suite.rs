//! Batch suite runner: executes identity, closure, relation, tower,
//! kinematics and superfield checks and aggregates machine-readable
//! reports. Reports are deterministic: entries are sorted by id and wall
//! times live in a separate section excluded from reproducibility
//! comparisons.

use crate::clifford6::{self, build_gamma6};
use crate::engine::{self, ChargeKind};
use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec};
use crate::kinematics::{
    assemble_system, killing4_resubstitution, master6_field_strength, match_template,
    nullspace_basis, KinematicsModel, TemplateId,
};
use crate::report::ResidualReport;
use crate::scalar::GaussianRational;
use crate::sigma4::{self, build_sigma4};
use crate::tensor::Tensor;
use rand::SeedableRng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteId {
    AppendixA,
    AppendixB,
    Closure,
    Relations,
    Tower,
    Kinematics,
    Superfield,
    All,
}

pub const SUITES_ALL: [SuiteId; 8] = [
    SuiteId::AppendixA,
    SuiteId::AppendixB,
    SuiteId::Closure,
    SuiteId::Relations,
    SuiteId::Tower,
    SuiteId::Kinematics,
    SuiteId::Superfield,
    SuiteId::All,
];

impl SuiteId {
    pub fn id(self) -> &'static str {
        match self {
            SuiteId::AppendixA => "appendix-a",
            SuiteId::AppendixB => "appendix-b",
            SuiteId::Closure => "closure",
            SuiteId::Relations => "relations",
            SuiteId::Tower => "tower",
            SuiteId::Kinematics => "kinematics",
            SuiteId::Superfield => "superfield",
            SuiteId::All => "all",
        }
    }

    pub fn from_id(s: &str) -> Result<SuiteId> {
        SUITES_ALL
            .iter()
            .copied()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::Catalog(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteSpec {
    pub suite: SuiteId,
    pub n: u8,
    pub jet_order: usize,
    pub tower_depth: usize,
    pub jobs: usize,
}

impl SuiteSpec {
    pub fn new(suite: SuiteId) -> SuiteSpec {
        SuiteSpec {
            suite,
            n: 1,
            jet_order: 4,
            tower_depth: 4,
            jobs: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("N must be >= 1".into()));
        }
        if self.jet_order < 4 {
            return Err(Error::Config(
                "jet truncation below 4 cannot accommodate the checks in scope".into(),
            ));
        }
        if self.jet_order > 6 {
            return Err(Error::Config("jet truncation above 6 is unsupported".into()));
        }
        if self.tower_depth == 0 || self.tower_depth > self.jet_order {
            return Err(Error::Config(
                "tower depth must be between 1 and the jet truncation".into(),
            ));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunEntry {
    pub id: String,
    pub pass: bool,
    /// Informational entries never gate the run.
    pub informational: bool,
    pub summary: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub config: SuiteSpec,
    /// Hash of the built gamma and sigma representation tensors.
    pub representation_fingerprint: String,
    pub orientation_note: String,
    pub entries: Vec<RunEntry>,
    pub total_checks: usize,
    pub passed: usize,
    pub failed: usize,
    /// Wall time per check id, milliseconds. Excluded from reproducibility
    /// comparisons of the report body.
    pub timing_ms: BTreeMap<String, u128>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// The report body with timing stripped: two runs with the same config
    /// must agree on this byte for byte.
    pub fn body_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    }
}

fn tensor_bytes(h: &mut Sha256, t: &Tensor) {
    h.update(format!("{}", t.spec()).as_bytes());
    for v in t.data() {
        h.update(v.re.render().as_bytes());
        h.update(b",");
        h.update(v.im.render().as_bytes());
        h.update(b";");
    }
}

/// Hash of the gamma and sigma representation tensors actually used.
pub fn representation_fingerprint() -> Result<String> {
    let rep6 = build_gamma6(1)?;
    let rep4 = build_sigma4()?;
    let mut h = Sha256::new();
    for t in rep6.gamma.iter().chain(rep6.gamma_tilde.iter()) {
        tensor_bytes(&mut h, t);
    }
    tensor_bytes(&mut h, &rep6.eps_spinor_down);
    tensor_bytes(&mut h, &rep6.eps_spinor_up);
    for t in rep4.sigma.iter().chain(rep4.sigma_tilde.iter()) {
        tensor_bytes(&mut h, t);
    }
    tensor_bytes(&mut h, &rep4.eps2);
    tensor_bytes(&mut h, &rep4.bar_eps2);
    let digest = h.finalize();
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect::<String>())
}

struct Collector {
    entries: Vec<RunEntry>,
    timing: BTreeMap<String, u128>,
}

impl Collector {
    fn new() -> Collector {
        Collector {
            entries: Vec::new(),
            timing: BTreeMap::new(),
        }
    }

    fn push_residual(&mut self, prefix: &str, started: Instant, r: &ResidualReport) {
        let id = format!("{prefix}/{}", r.id);
        self.timing.insert(id.clone(), started.elapsed().as_millis());
        self.entries.push(RunEntry {
            id,
            pass: r.pass,
            informational: r.informational,
            summary: if r.pass {
                format!("residual 0 over {} tuples", r.tuple_count)
            } else {
                format!(
                    "residual {}+{}i, first failure {:?}",
                    r.max_residual_re, r.max_residual_im, r.first_failure
                )
            },
        });
    }

    fn push(&mut self, id: String, started: Instant, pass: bool, summary: String) {
        self.timing.insert(id.clone(), started.elapsed().as_millis());
        self.entries.push(RunEntry {
            id,
            pass,
            informational: false,
            summary,
        });
    }
}

fn run_appendix_a(c: &mut Collector) -> Result<()> {
    let rep = build_gamma6(1)?;
    use rayon::prelude::*;
    let results: Vec<(ResidualReport, u128)> = clifford6::IDENTITY6_ALL
        .par_iter()
        .map(|&id| {
            let t = Instant::now();
            let r = clifford6::verify_identity6(&rep, id);
            (r, t.elapsed().as_millis())
        })
        .collect();
    for (r, ms) in results {
        let id = format!("appendix-a/{}", r.id);
        c.timing.insert(id.clone(), ms);
        c.entries.push(RunEntry {
            id,
            pass: r.pass,
            informational: false,
            summary: if r.pass {
                format!("residual 0 over {} tuples", r.tuple_count)
            } else {
                format!(
                    "residual {}+{}i at {:?}",
                    r.max_residual_re, r.max_residual_im, r.first_failure
                )
            },
        });
    }
    Ok(())
}

fn run_appendix_b(c: &mut Collector) -> Result<()> {
    let rep = build_sigma4()?;
    for id in sigma4::IDENTITY4_ALL {
        let t = Instant::now();
        let r = sigma4::verify_identity4(&rep, id);
        c.push_residual("appendix-b", t, &r);
    }
    Ok(())
}

fn run_closure(c: &mut Collector, spec: &SuiteSpec) -> Result<()> {
    let mut jobs: Vec<(String, u8)> = vec![
        ("6d-toy-rigid".into(), spec.n),
        ("4d-toy-rigid".into(), 1),
        ("6d-tensor-onshell".into(), 1),
        ("4d-maxwell-onshell".into(), 1),
        ("6d-tensor-offshell".into(), 1),
    ];
    if spec.suite == SuiteId::Closure || spec.suite == SuiteId::All {
        // For the rigid model, additionally sweep the small symplectic ranks.
        for n in [1u8, 2, 3] {
            if n != spec.n {
                jobs.push(("6d-toy-rigid".into(), n));
            }
        }
    }
    for (name, n) in jobs {
        let t = Instant::now();
        let model = engine::load_model_with(&name, n, spec.jet_order)?;
        let report = engine::check_closure(&model)?;
        for e in &report.entries {
            c.push(
                format!("closure/{name}[N={n}]/{}", e.generator),
                t,
                e.pass,
                if e.pass {
                    format!("residual 0 over {} comparisons", e.tuple_count)
                } else {
                    format!("residual terms: {}", e.residual_terms.join(" | "))
                },
            );
        }
        // Informational reality check on the underlying representation.
        if name.starts_with("6d") {
            let t = Instant::now();
            let r = engine::pseudo_majorana_check(&model);
            c.push_residual(&format!("closure/{name}[N={n}]"), t, &r);
        }
    }

    // The modified-algebra residual with the quotient disabled must equal
    // the printed extra terms exactly.
    let t = Instant::now();
    let pass = onshell_b_residual_matches()?;
    c.push(
        "closure/6d-tensor-onshell[N=1]/B-residual-quotient-off".into(),
        t,
        pass,
        if pass {
            "bracket minus translation part equals the anti-self-dual and gauge terms".into()
        } else {
            "printed extra terms not reproduced".into()
        },
    );
    Ok(())
}

/// With the quotient disabled, the supersymmetry bracket on the two-form
/// minus the translation part must reproduce the extra terms exactly: the
/// anti-self-dual field-strength term (with exact coefficient `6i eps
/// H_- gamma`, i.e. `3i eps (H - dual H) gamma`) plus twice the gauge-charge
/// action.
pub fn onshell_b_residual_matches() -> Result<bool> {
    let m = engine::load_model("6d-tensor-onshell", 1)?.with_quotient(false);
    let rep = m.rep6.clone().expect("six-dimensional model");
    let b = m.gen_id("B")?;
    let g: Vec<crate::matrix::Mat> = (0..6).map(|a| rep.gamma_mat(a)).collect();
    let eps = rep.symplectic_up.clone();

    let coeff_tensor = |factor: GaussianRational| {
        let g = &g;
        let eps = &eps;
        Tensor::from_fn(
            IndexSpec::new(vec![
                IndexSlot::up(IndexKind::Symplectic(1)),
                IndexSlot::down(IndexKind::Spinor6),
                IndexSlot::up(IndexKind::Symplectic(1)),
                IndexSlot::down(IndexKind::Spinor6),
                IndexSlot::up(IndexKind::Spacetime6),
            ]),
            move |ix| {
                let e = eps.get(&[ix[0], ix[2]]);
                if e.is_zero() {
                    return GaussianRational::ZERO;
                }
                &(e * g[ix[4]].at(ix[1], ix[3])) * &factor
            },
        )
    };

    let brk = engine::graded_bracket_on(&m, ChargeKind::Q, ChargeKind::Q, "B")?;
    let p_act = engine::act_on_expression(&m, ChargeKind::P, &m.identity_expression(b, 0))?;
    let residual = brk.sub(&p_act.contract_with(&coeff_tensor(GaussianRational::from_int(2)), &[(4, 0)]));

    // Anti-self-dual part of the strength-one curl.
    let h_expr = engine::brace_free_pub(&m.identity_expression(b, 1), &[0, 1, 2]);
    let eps_mixed = rep.eps_mixed_down_up();
    let dual = h_expr
        .contract_with(&eps_mixed, &[(3, 0), (4, 1), (5, 2)])
        .scale(&GaussianRational::frac(1, 6));
    let h_minus = h_expr.sub(&dual).scale(&GaussianRational::frac(1, 2));
    let term_h = h_minus.contract_with(&coeff_tensor(GaussianRational::frac_i(6, 1)), &[(4, 2)]);

    // Twice the gauge action, built from the printed derivative combination
    // rather than the model rule.
    let phi = m.gen_id("phi")?;
    let e_b = m.identity_expression(b, 1);
    let w1 = e_b.permute_free(&[2, 0, 1]);
    let w2 = e_b.permute_free(&[2, 1, 0]);
    let e_phi = m.identity_expression(phi, 1);
    let eta_dn = crate::tensor::metric(IndexKind::Spacetime6, crate::Variance::Lower);
    let gphi = e_phi.contract_with(&eta_dn, &[]);
    let g1 = gphi.clone();
    let g2 = gphi.permute_free(&[0, 2, 1]);
    let w = w1.sub(&w2).add(&g1).sub(&g2);
    let term_z = w.contract_with(&coeff_tensor(GaussianRational::frac_i(-2, 1)), &[(4, 0)]);

    Ok(residual.sub(&term_h.add(&term_z)).is_zero())
}

fn run_relations(c: &mut Collector, spec: &SuiteSpec) -> Result<()> {
    for rel in engine::RELATIONS_ALL {
        let t = Instant::now();
        let model = engine::load_model_with(rel.model_name(), 1, spec.jet_order)?;
        let r = engine::check_relation(&model, rel)?;
        c.push_residual("relations", t, &r);
    }
    Ok(())
}

fn run_tower(c: &mut Collector, spec: &SuiteSpec) -> Result<()> {
    for name in ["6d-tensor-onshell", "4d-maxwell-onshell"] {
        let model = engine::load_model_with(name, 1, spec.jet_order)?;
        let t = Instant::now();
        for r in engine::tower_checks(&model, spec.tower_depth)? {
            c.push_residual("tower", t, &r);
        }
    }
    Ok(())
}

fn run_kinematics(c: &mut Collector) -> Result<()> {
    // Two-form system.
    let t = Instant::now();
    let sys = assemble_system(KinematicsModel::Master6, 3)?;
    let basis = nullspace_basis(&sys);
    c.push(
        "kinematics/MASTER6/dimension".into(),
        t,
        basis.dimension() == 31,
        format!("degree-3 solution space dimension {}", basis.dimension()),
    );
    let t = Instant::now();
    let mut linear_only = true;
    for v in &basis.vectors {
        for ci in 0..basis.ansatz.components.len() {
            for (mi, m) in basis.ansatz.monomials.iter().enumerate() {
                let deg: u32 = m.iter().sum();
                if deg >= 2 && !v[basis.ansatz.unknown(ci, mi)].is_zero() {
                    linear_only = false;
                }
            }
        }
    }
    c.push(
        "kinematics/MASTER6/at-most-linear".into(),
        t,
        linear_only,
        "no quadratic or cubic coefficients in any solution".into(),
    );
    let t = Instant::now();
    let m = match_template(&basis, TemplateId::Eq27)?;
    c.push(
        "kinematics/MASTER6/template-EQ27".into(),
        t,
        m.matched,
        format!("span match, {} missing directions", m.missing_directions),
    );
    let t = Instant::now();
    let rep = build_gamma6(1)?;
    let mut selfdual = true;
    for v in &basis.vectors {
        let h = master6_field_strength(&basis, v);
        let (_, minus) = clifford6::project_selfdual3(&rep, &h)?;
        if !minus.is_zero() {
            selfdual = false;
        }
    }
    c.push(
        "kinematics/MASTER6/selfdual-field-strength".into(),
        t,
        selfdual,
        "anti-self-dual part of every solution's field strength is zero".into(),
    );

    // One-form system.
    let t = Instant::now();
    let sys = assemble_system(KinematicsModel::Killing4, 3)?;
    let basis = nullspace_basis(&sys);
    c.push(
        "kinematics/KILLING4/dimension".into(),
        t,
        basis.dimension() == 15,
        format!("degree-3 solution space dimension {}", basis.dimension()),
    );
    let t = Instant::now();
    let m = match_template(&basis, TemplateId::F12)?;
    c.push(
        "kinematics/KILLING4/template-F12".into(),
        t,
        m.matched,
        format!("span match, {} missing directions", m.missing_directions),
    );
    let t = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6b696c6c);
    let mut resub = true;
    for v in &basis.vectors {
        if !killing4_resubstitution(&basis, v, 20, &mut rng) {
            resub = false;
        }
    }
    c.push(
        "kinematics/KILLING4/resubstitution".into(),
        t,
        resub,
        "conformal Killing equation holds at 20 random rational points per solution".into(),
    );
    Ok(())
}

fn run_superfield(c: &mut Collector, spec: &SuiteSpec) -> Result<()> {
    let model = engine::load_model_with("6d-tensor-offshell", 1, spec.jet_order)?;
    let t = Instant::now();
    let engine_poly = engine::superfield_expand(&model, 8)?;
    let printed = engine::printed_terms_through_quartic(&model)?;
    for k in 0..=4u32 {
        let e_masks: Vec<u16> = engine_poly.order_terms(k).map(|(m, _)| *m).collect();
        let p_masks: Vec<u16> = printed
            .iter()
            .filter(|(m, _)| m.count_ones() == k)
            .map(|(m, _)| *m)
            .collect();
        let mut pass = e_masks == p_masks;
        if pass {
            for mask in &e_masks {
                if model.canonicalize(&engine_poly.terms[mask])
                    != model.canonicalize(&printed[mask])
                {
                    pass = false;
                }
            }
        }
        c.push(
            format!("superfield/order-{k}-matches"),
            t,
            pass,
            format!("{} monomials compared term for term", e_masks.len()),
        );
    }
    let t = Instant::now();
    let top = engine_poly.order_terms(8).count();
    c.push(
        "superfield/order-8-exists".into(),
        t,
        top == 1,
        format!("{top} monomial(s) at the top order"),
    );
    let t = Instant::now();
    let vanish = engine::order9_vanishes(&model)?;
    c.push(
        "superfield/order-9-vanishes".into(),
        t,
        vanish,
        "ninth adjoint step is identically zero".into(),
    );
    let t = Instant::now();
    let over = engine::superfield_expand(&model, 9).is_err();
    c.push(
        "superfield/order-overflow-rejected".into(),
        t,
        over,
        "expansion order above eight is a configuration error".into(),
    );
    Ok(())
}

/// Executes all checks of a suite and assembles the deterministic report.
pub fn run_suite(spec: &SuiteSpec) -> Result<RunReport> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    pool.install(|| run_suite_inner(spec))
}

fn run_suite_inner(spec: &SuiteSpec) -> Result<RunReport> {
    let mut c = Collector::new();
    let run_a = matches!(spec.suite, SuiteId::AppendixA | SuiteId::All);
    let run_b = matches!(spec.suite, SuiteId::AppendixB | SuiteId::All);
    let run_cl = matches!(spec.suite, SuiteId::Closure | SuiteId::All);
    let run_re = matches!(spec.suite, SuiteId::Relations | SuiteId::All);
    let run_to = matches!(spec.suite, SuiteId::Tower | SuiteId::All);
    let run_ki = matches!(spec.suite, SuiteId::Kinematics | SuiteId::All);
    let run_su = matches!(spec.suite, SuiteId::Superfield | SuiteId::All);
    if run_a {
        run_appendix_a(&mut c)?;
    }
    if run_b {
        run_appendix_b(&mut c)?;
    }
    if run_cl {
        run_closure(&mut c, spec)?;
    }
    if run_re {
        run_relations(&mut c, spec)?;
    }
    if run_to {
        run_tower(&mut c, spec)?;
    }
    if run_ki {
        run_kinematics(&mut c)?;
    }
    if run_su {
        run_superfield(&mut c, spec)?;
    }

    c.entries.sort_by(|a, b| a.id.cmp(&b.id));
    let total = c.entries.len();
    let failed = c
        .entries
        .iter()
        .filter(|e| !e.pass && !e.informational)
        .count();
    let rep6 = build_gamma6(1)?;
    Ok(RunReport {
        config: spec.clone(),
        representation_fingerprint: representation_fingerprint()?,
        orientation_note: rep6.orientation_note().to_string(),
        entries: c.entries,
        total_checks: total,
        passed: total - failed,
        failed,
        timing_ms: c.timing,
    })
}

/// Catalog listing for the CLI: suite ids with their check families.
pub fn list_suites() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    out.push((
        "appendix-a".to_string(),
        clifford6::IDENTITY6_ALL
            .iter()
            .map(|i| format!("{} - {}", i.id(), i.describe()))
            .collect(),
    ));
    out.push((
        "appendix-b".to_string(),
        sigma4::IDENTITY4_ALL
            .iter()
            .map(|i| format!("{} - {}", i.id(), i.describe()))
            .collect(),
    ));
    out.push((
        "closure".to_string(),
        engine::MODEL_NAMES
            .iter()
            .map(|m| format!("{m} - bracket closure and translation commutators"))
            .chain(std::iter::once(
                "B-residual-quotient-off - printed extra terms of the modified algebra"
                    .to_string(),
            ))
            .collect(),
    ));
    out.push((
        "relations".to_string(),
        engine::RELATIONS_ALL
            .iter()
            .map(|r| format!("{} [{}] - {}", r.id(), r.model_name(), r.describe()))
            .collect(),
    ));
    out.push((
        "tower".to_string(),
        vec![
            "TOWER6_PSI, TOWER6_PHI, TOWER6_H - gauge towers annihilate the spectators".into(),
            "TOWER6_ZZ_B, TOWER6_ZQ_B - printed second-order actions on the two-form".into(),
            "TOWER4_PSI, TOWER4_PSIBAR, TOWER4_F - gauge towers annihilate the spectators".into(),
            "TOWER4_ZZ_A, TOWER4_ZQ_A - printed second-order actions on the one-form".into(),
        ],
    ));
    out.push((
        "kinematics".to_string(),
        vec![
            "MASTER6 - dimension 31, at most linear, template EQ27, self-dual field strength"
                .into(),
            "KILLING4 - dimension 15, template F12, random-point resubstitution".into(),
        ],
    ));
    out.push((
        "superfield".to_string(),
        vec![
            "order-0..4 coefficients match the displayed expansion term for term".into(),
            "order-8 exists; order-9 vanishes; order overflow rejected".into(),
        ],
    ));
    out.push(("all".to_string(), vec!["union of every suite".into()]));
    out
}
