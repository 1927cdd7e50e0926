//! Models: named rule sets with structural bases, oriented quotient
//! relations, and precomputed charge-action matrices on reduced jet
//! coordinates.

use super::charge::{Charge, ChargeKind, CompositeCharge};
use super::expression::{Expression, TermSlab};
use super::generator::{Constraint, FieldGenerator, GenBasis, JetSpace, Parity};
use crate::clifford6::GammaRep6;
use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec};
use crate::linalg::{Rref, SRow};
use crate::scalar::GaussianRational;
use crate::sigma4::SigmaRep4;
use crate::tensor::{multi_indices, Tensor};
use std::collections::{BTreeMap, HashMap};

/// Which right-hand side the supersymmetry bracket must close on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureForm {
    POnly,
    PPlusZ,
}

/// A field generator together with a concrete sorted derivative multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetField {
    pub generator: String,
    pub deriv: Vec<usize>,
}

impl JetField {
    pub fn new(generator: &str, deriv: &[usize]) -> JetField {
        let mut d = deriv.to_vec();
        d.sort_unstable();
        JetField {
            generator: generator.to_string(),
            deriv: d,
        }
    }
}

#[derive(Clone, Debug)]
pub(super) struct RuleTerm {
    pub out_gen: usize,
    pub s: usize,
    pub jet_red: usize,
    /// Row-major over [charge grid x gen dense x jet_red].
    pub slab: Vec<GaussianRational>,
}

#[derive(Clone, Debug, Default)]
pub(super) struct Rule {
    pub terms: Vec<RuleTerm>,
}

#[derive(Clone, Debug)]
struct ActionBlock {
    out_gen: usize,
    out_order: usize,
    out_red: usize,
    /// Entries grouped by input jet index: columns[in] = (charge flat,
    /// out index, coefficient). Grouping lets the application walk only the
    /// nonzero slab entries.
    columns: Vec<Vec<(u32, u32, GaussianRational)>>,
}

#[derive(Clone, Debug, Default)]
struct ActionMatrix {
    blocks: Vec<ActionBlock>,
}

#[derive(Clone)]
pub struct Model {
    pub name: String,
    pub n: u8,
    pub st: IndexKind,
    pub generators: Vec<FieldGenerator>,
    gen_index: HashMap<String, usize>,
    pub charge_kinds: Vec<ChargeKind>,
    bases: Vec<GenBasis>,
    jets: Vec<Vec<JetSpace>>,
    rules: HashMap<(ChargeKind, usize), Rule>,
    pub p_is_derivative: bool,
    pub jet_max: usize,
    pub quotient_enabled: bool,
    quotient: HashMap<(usize, usize), Rref>,
    actions: HashMap<(ChargeKind, usize, usize), ActionMatrix>,
    pub expected_closure: ClosureForm,
    pub rep6: Option<GammaRep6>,
    pub rep4: Option<SigmaRep4>,
}

impl Model {
    pub(super) fn new(
        name: &str,
        n: u8,
        st: IndexKind,
        generators: Vec<FieldGenerator>,
        charge_kinds: Vec<ChargeKind>,
        p_is_derivative: bool,
        jet_max: usize,
        expected_closure: ClosureForm,
        rep6: Option<GammaRep6>,
        rep4: Option<SigmaRep4>,
        selfdual_projector: Option<&dyn Fn(&Tensor) -> Tensor>,
    ) -> Model {
        let gen_index = generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.id.clone(), i))
            .collect();
        let bases: Vec<GenBasis> = generators
            .iter()
            .map(|g| GenBasis::for_generator(g, selfdual_projector))
            .collect();
        let st_dim = st.dim();
        let jets: Vec<Vec<JetSpace>> = bases
            .iter()
            .map(|b| {
                (0..=jet_max)
                    .map(|k| JetSpace::new(st_dim, k, b.red_dim))
                    .collect()
            })
            .collect();
        Model {
            name: name.to_string(),
            n,
            st,
            generators,
            gen_index,
            charge_kinds,
            bases,
            jets,
            rules: HashMap::new(),
            p_is_derivative,
            jet_max,
            quotient_enabled: true,
            quotient: HashMap::new(),
            actions: HashMap::new(),
            expected_closure,
            rep6,
            rep4,
        }
    }

    pub fn gen_id(&self, name: &str) -> Result<usize> {
        self.gen_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Catalog(format!("unknown generator {name}")))
    }

    pub fn generator(&self, idx: usize) -> &FieldGenerator {
        &self.generators[idx]
    }

    pub fn basis(&self, idx: usize) -> &GenBasis {
        &self.bases[idx]
    }

    pub fn jet_space(&self, gen: usize, order: usize) -> &JetSpace {
        &self.jets[gen][order]
    }

    pub fn charge_spec(&self, kind: ChargeKind) -> IndexSpec {
        kind.index_spec(self.st, self.n)
    }

    pub fn with_quotient(&self, enabled: bool) -> Model {
        let mut m = self.clone();
        m.quotient_enabled = enabled;
        m
    }

    /// Registers a rule with dense coefficient tensors. Each term's tensor
    /// runs over [charge slots ++ generator slots ++ s derivative slots
    /// (upper) ++ dual slots of the target generator]; the jet part is
    /// compressed into reduced coordinates here.
    pub(super) fn set_rule(
        &mut self,
        kind: ChargeKind,
        gen: &str,
        terms: Vec<(&str, usize, Tensor)>,
    ) {
        let g = self.gen_id(gen).expect("rule generator");
        let ch_total = self.charge_spec(kind).total_len();
        let gen_dense = self.generators[g].dense_dim();
        let mut rule = Rule::default();
        for (out_name, s, tensor) in terms {
            let out_gen = self.gen_id(out_name).expect("rule target generator");
            let out_basis = &self.bases[out_gen];
            let out_space = JetSpace::new(self.st.dim(), s, out_basis.red_dim);
            let jet_red = out_space.red_dim;

            // Expected dense layout check.
            let st_dim = self.st.dim();
            let out_dense = self.generators[out_gen].dense_dim();
            let expected_len = ch_total * gen_dense * st_dim.pow(s as u32) * out_dense;
            assert_eq!(
                tensor.data().len(),
                expected_len,
                "rule tensor shape mismatch for {} on {}",
                kind.label(),
                gen
            );

            let deriv_total = st_dim.pow(s as u32);
            let mut slab = vec![GaussianRational::ZERO; ch_total * gen_dense * jet_red];
            // Compress: sum over dense derivative tuples into multisets and
            // over dense generator components into the reduced basis.
            let out_dims = self.generators[out_gen].spec.dims();
            for cx in 0..ch_total * gen_dense {
                for dflat in 0..deriv_total {
                    // decode derivative tuple
                    let mut dd = vec![0usize; s];
                    let mut rem = dflat;
                    for slot in (0..s).rev() {
                        dd[slot] = rem % st_dim;
                        rem /= st_dim;
                    }
                    let mut sorted = dd.clone();
                    sorted.sort_unstable();
                    let ms = out_space.multiset_index[&sorted];
                    for (yflat, _) in multi_indices(&out_dims).enumerate() {
                        let v = &tensor.data()[(cx * deriv_total + dflat) * out_dense + yflat];
                        if v.is_zero() {
                            continue;
                        }
                        for r in 0..out_basis.red_dim {
                            let vv = &out_basis.v[yflat][r];
                            if vv.is_zero() {
                                continue;
                            }
                            let p = v * vv;
                            slab[cx * jet_red + out_space.index(ms, r)] += &p;
                        }
                    }
                }
            }
            rule.terms.push(RuleTerm {
                out_gen,
                s,
                jet_red,
                slab,
            });
        }
        self.rules.insert((kind, g), rule);
    }

    /// Grading consistency: for every rule, parity(target) must equal
    /// parity(charge) xor parity(source).
    pub(super) fn validate_grading(&self) -> Result<()> {
        for ((kind, g), rule) in &self.rules {
            let want = kind.parity().xor(self.generators[*g].parity);
            for t in &rule.terms {
                if self.generators[t.out_gen].parity != want {
                    return Err(Error::Representation(format!(
                        "grading violation: {} on {} produces {}",
                        kind.label(),
                        self.generators[*g].id,
                        self.generators[t.out_gen].id
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds action matrices for every (charge, generator, order) that can
    /// arise below the jet truncation.
    pub(super) fn build_actions(&mut self) {
        let st_dim = self.st.dim();
        let mut actions = HashMap::new();
        for (&(kind, g), rule) in &self.rules {
            let ch_total = self.charge_spec(kind).total_len();
            let basis = &self.bases[g];
            let max_s = rule.terms.iter().map(|t| t.s).max().unwrap_or(0);
            for k in 0..=self.jet_max {
                if k + max_s > self.jet_max && max_s > 0 && k + max_s > self.jet_max {
                    // Order overflow is reported at act time.
                    if k + max_s > self.jet_max {
                        // still build blocks for terms that fit
                    }
                }
                let in_space = &self.jets[g][k];
                let mut blocks: Vec<ActionBlock> = Vec::new();
                for t in &rule.terms {
                    if k + t.s > self.jet_max {
                        continue;
                    }
                    let out_space = &self.jets[t.out_gen][k + t.s];
                    let rule_space = JetSpace::new(st_dim, t.s, self.bases[t.out_gen].red_dim);
                    let gen_dense = self.generators[g].dense_dim();
                    let mut columns: Vec<Vec<(u32, u32, GaussianRational)>> =
                        vec![Vec::new(); in_space.red_dim];
                    let mut any = false;
                    // A[ch; merge(m, ms) (x) r', (m, r)] =
                    //   sum_x W[r][x] * slab[ch, x, (ms, r')].
                    for r in 0..basis.red_dim {
                        for x in 0..gen_dense {
                            let wv = &basis.w[r][x];
                            if wv.is_zero() {
                                continue;
                            }
                            for ch in 0..ch_total {
                                for (msi, ms) in rule_space.multisets.iter().enumerate() {
                                    for rp in 0..self.bases[t.out_gen].red_dim {
                                        let sv = &t.slab[(ch * gen_dense + x) * t.jet_red
                                            + rule_space.index(msi, rp)];
                                        if sv.is_zero() {
                                            continue;
                                        }
                                        let coeff = wv * sv;
                                        any = true;
                                        for (mi, m) in in_space.multisets.iter().enumerate() {
                                            // merge multisets m and ms
                                            let mut merged = m.clone();
                                            merged.extend_from_slice(ms);
                                            merged.sort_unstable();
                                            let mo = out_space.multiset_index[&merged];
                                            columns[in_space.index(mi, r)].push((
                                                ch as u32,
                                                out_space.index(mo, rp) as u32,
                                                coeff.clone(),
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                    if any {
                        // Merge duplicate (charge, out) pairs within each column.
                        for col in columns.iter_mut() {
                            col.sort_by_key(|e| (e.0, e.1));
                            let mut merged: Vec<(u32, u32, GaussianRational)> = Vec::new();
                            for e in col.drain(..) {
                                match merged.last_mut() {
                                    Some(last) if last.0 == e.0 && last.1 == e.1 => {
                                        last.2 += &e.2;
                                    }
                                    _ => merged.push(e),
                                }
                            }
                            merged.retain(|e| !e.2.is_zero());
                            *col = merged;
                        }
                        blocks.push(ActionBlock {
                            out_gen: t.out_gen,
                            out_order: k + t.s,
                            out_red: out_space.red_dim,
                            columns,
                        });
                    }
                }
                actions.insert((kind, g, k), ActionMatrix { blocks });
            }
        }
        self.actions = actions;
    }

    /// Whether a rule (possibly zero) exists for the charge kind on the
    /// generator.
    pub fn has_rule(&self, kind: ChargeKind, gen: usize) -> bool {
        if kind == ChargeKind::P && self.p_is_derivative {
            return true;
        }
        self.rules.contains_key(&(kind, gen))
    }

    /// Maximum derivative order a rule adds.
    fn rule_max_s(&self, kind: ChargeKind, gen: usize) -> usize {
        self.rules
            .get(&(kind, gen))
            .map(|r| r.terms.iter().map(|t| t.s).max().unwrap_or(0))
            .unwrap_or(0)
    }

    /// Registers a quotient relation. The expression must involve a single
    /// (generator, order) family; rows are its free components, prolonged by
    /// extra derivatives up to `prolong_to`.
    pub(super) fn add_quotient_relation(&mut self, expr: &Expression, prolong_to: usize) {
        assert_eq!(
            expr.terms.len(),
            1,
            "quotient relations must involve a single jet family"
        );
        let (&(gen, order), slab) = expr.terms.iter().next().unwrap();
        let free_total = expr.free_total();
        let base_rows: Vec<SRow> = (0..free_total)
            .map(|f| {
                (0..slab.inner)
                    .filter(|i| !slab.data[f * slab.inner + i].is_zero())
                    .map(|i| (i, slab.data[f * slab.inner + i].clone()))
                    .collect::<SRow>()
            })
            .filter(|r: &SRow| !r.is_empty())
            .collect();

        let st_dim = self.st.dim();
        let mut rows_at: BTreeMap<usize, Vec<SRow>> = BTreeMap::new();
        rows_at.insert(order, base_rows);
        for k in order..prolong_to.min(self.jet_max) {
            let cur = rows_at[&k].clone();
            let space_k = JetSpace::new(st_dim, k, self.bases[gen].red_dim);
            let space_k1 = JetSpace::new(st_dim, k + 1, self.bases[gen].red_dim);
            let mut next = Vec::new();
            for row in &cur {
                for d in 0..st_dim {
                    let shifted: SRow = row
                        .iter()
                        .map(|(idx, v)| {
                            let (mi, r) = (idx / space_k.gen_red, idx % space_k.gen_red);
                            let mo = space_k1.parent_insert(&space_k, mi, d);
                            (space_k1.index(mo, r), v.clone())
                        })
                        .collect::<Vec<_>>()
                        .into_iter()
                        .collect();
                        // entries stay sorted: inserting d preserves order of
                        // multiset slots only per-row after sort below
                    let mut shifted = shifted;
                    shifted.sort_by_key(|e| e.0);
                    next.push(shifted);
                }
            }
            rows_at.entry(k + 1).or_default().extend(next);
        }
        for (k, rows) in rows_at {
            let ncols = self.jets[gen][k].red_dim;
            let rref = self
                .quotient
                .entry((gen, k))
                .or_insert_with(|| Rref::new(ncols));
            for row in rows {
                rref.insert(row);
            }
        }
    }

    fn quotient_reduce(&self, expr: &mut Expression) {
        if !self.quotient_enabled {
            expr.prune();
            return;
        }
        let free_total = expr.free_total();
        for ((gen, order), slab) in expr.terms.iter_mut() {
            if let Some(rref) = self.quotient.get(&(*gen, *order)) {
                for f in 0..free_total {
                    rref.reduce_dense(&mut slab.data[f * slab.inner..(f + 1) * slab.inner]);
                }
            }
        }
        expr.prune();
    }

    /// Canonical form of an expression relative to this model: quotient
    /// reduction (when enabled) plus zero-term pruning.
    pub fn canonicalize(&self, expr: &Expression) -> Expression {
        let mut e = expr.clone();
        self.quotient_reduce(&mut e);
        e
    }

    /// The identity expression of a fully symbolic jet: free slots are the
    /// derivative positions followed by the generator's own indices.
    pub fn identity_expression(&self, gen: usize, order: usize) -> Expression {
        let st_slot = IndexSlot::down(self.st);
        let mut slots = vec![st_slot; order];
        slots.extend_from_slice(self.generators[gen].spec.slots());
        let free = IndexSpec::new(slots);
        let mut expr = Expression::zero(free, self.generators[gen].parity);

        let space = &self.jets[gen][order];
        let basis = &self.bases[gen];
        let gen_dims = self.generators[gen].spec.dims();
        let st_dim = self.st.dim();
        let deriv_total = st_dim.pow(order as u32);
        let gen_dense = self.generators[gen].dense_dim();
        let mut slab = TermSlab::zeros(deriv_total * gen_dense, space.red_dim);
        for dflat in 0..deriv_total {
            let mut dd = vec![0usize; order];
            let mut rem = dflat;
            for slot in (0..order).rev() {
                dd[slot] = rem % st_dim;
                rem /= st_dim;
            }
            dd.sort_unstable();
            let ms = space.multiset_index[&dd];
            for (x, _) in multi_indices(&gen_dims).enumerate() {
                let row = dflat * gen_dense + x;
                for r in 0..basis.red_dim {
                    let v = &basis.v[x][r];
                    if !v.is_zero() {
                        slab.data[row * space.red_dim + space.index(ms, r)] = v.clone();
                    }
                }
            }
        }
        expr.add_term((gen, order), slab);
        expr
    }

    /// Derivative of an expression: prepends one lower spacetime free slot
    /// and raises each term's order by one.
    pub fn derivative(&self, expr: &Expression) -> Result<Expression> {
        let st_dim = self.st.dim();
        let mut slots = vec![IndexSlot::down(self.st)];
        slots.extend_from_slice(expr.free.slots());
        let free = IndexSpec::new(slots);
        let free_total = expr.free_total();
        let mut out = Expression::zero(free, expr.parity);
        for (&(gen, order), slab) in &expr.terms {
            if order + 1 > self.jet_max {
                return Err(Error::JetOrder {
                    order: order + 1,
                    max: self.jet_max,
                });
            }
            let space_k = &self.jets[gen][order];
            let space_k1 = &self.jets[gen][order + 1];
            let mut ns = TermSlab::zeros(st_dim * free_total, space_k1.red_dim);
            for d in 0..st_dim {
                for f in 0..free_total {
                    for idx in 0..slab.inner {
                        let v = &slab.data[f * slab.inner + idx];
                        if v.is_zero() {
                            continue;
                        }
                        let (mi, r) = (idx / space_k.gen_red, idx % space_k.gen_red);
                        let mo = space_k1.parent_insert(space_k, mi, d);
                        let row = d * free_total + f;
                        ns.data[row * space_k1.red_dim + space_k1.index(mo, r)] += v;
                    }
                }
            }
            out.add_term((gen, order + 1), ns);
        }
        out.prune();
        Ok(out)
    }
}

/// Applies an elementary charge to an expression; the charge's index slots
/// are prepended to the free spec.
///
/// The result is raw (not quotient-reduced): nested applications must be
/// composed on unreduced expressions because the on-shell constraint ideals
/// are not invariant under the supersymmetry charges. Reduction happens once
/// at comparison time via [`Model::canonicalize`].
pub fn act_on_expression(model: &Model, kind: ChargeKind, expr: &Expression) -> Result<Expression> {
    if !model.charge_kinds.contains(&kind) {
        return Err(Error::MissingRule {
            charge: kind.label().into(),
            generator: "<model>".into(),
        });
    }
    let ch_spec = model.charge_spec(kind);
    let ch_total = ch_spec.total_len();
    let mut slots = ch_spec.slots().to_vec();
    slots.extend_from_slice(expr.free.slots());
    let free = IndexSpec::new(slots);
    let free_total = expr.free_total();
    let parity = kind.parity().xor(expr.parity);
    let mut out = Expression::zero(free, parity);

    let st_dim = model.st.dim();
    for (&(gen, order), slab) in &expr.terms {
        if kind == ChargeKind::P && model.p_is_derivative {
            // [P_A, X] = -i d_A X.
            if order + 1 > model.jet_max {
                return Err(Error::JetOrder {
                    order: order + 1,
                    max: model.jet_max,
                });
            }
            let space_k = model.jet_space(gen, order);
            let space_k1 = model.jet_space(gen, order + 1);
            let minus_i = -&GaussianRational::I;
            let mut ns = TermSlab::zeros(ch_total * free_total, space_k1.red_dim);
            for d in 0..st_dim {
                for f in 0..free_total {
                    for idx in 0..slab.inner {
                        let v = &slab.data[f * slab.inner + idx];
                        if v.is_zero() {
                            continue;
                        }
                        let (mi, r) = (idx / space_k.gen_red, idx % space_k.gen_red);
                        let mo = space_k1.parent_insert(space_k, mi, d);
                        let row = d * free_total + f;
                        let p = v * &minus_i;
                        ns.data[row * space_k1.red_dim + space_k1.index(mo, r)] += &p;
                    }
                }
            }
            out.add_term((gen, order + 1), ns);
            continue;
        }

        if !model.has_rule(kind, gen) {
            return Err(Error::MissingRule {
                charge: kind.label().into(),
                generator: model.generators[gen].id.clone(),
            });
        }
        if order + model.rule_max_s(kind, gen) > model.jet_max {
            return Err(Error::JetOrder {
                order: order + model.rule_max_s(kind, gen),
                max: model.jet_max,
            });
        }
        let Some(matrix) = model.actions.get(&(kind, gen, order)) else {
            continue;
        };
        for block in &matrix.blocks {
            let mut ns = TermSlab::zeros(ch_total * free_total, block.out_red);
            // Walk nonzero slab entries; apply the matching matrix column.
            for f in 0..free_total {
                let src_row = &slab.data[f * slab.inner..(f + 1) * slab.inner];
                for (ii, src) in src_row.iter().enumerate() {
                    if src.is_zero() {
                        continue;
                    }
                    for (ch, oi, v) in &block.columns[ii] {
                        let row = *ch as usize * free_total + f;
                        let p = v * src;
                        ns.data[row * block.out_red + *oi as usize] += &p;
                    }
                }
            }
            out.add_term((block.out_gen, block.out_order), ns);
        }
    }
    out.prune();
    Ok(out)
}

/// Applies a composite (nested bracket) charge to an expression.
pub fn act_composite(
    model: &Model,
    charge: &CompositeCharge,
    expr: &Expression,
) -> Result<Expression> {
    match charge {
        CompositeCharge::Elementary(k) => act_on_expression(model, *k, expr),
        CompositeCharge::Bracket(c1, c2) => {
            let e12 = act_composite(model, c1, &act_composite(model, c2, expr)?)?;
            let e21 = act_composite(model, c2, &act_composite(model, c1, expr)?)?;
            // Move c2's slots ahead of c1's to align with e12's layout.
            let n1 = c1.index_spec(model.st, model.n).rank();
            let n2 = c2.index_spec(model.st, model.n).rank();
            let rest = e21.free.rank() - n1 - n2;
            let mut perm: Vec<usize> = Vec::with_capacity(e21.free.rank());
            perm.extend(n2..n2 + n1);
            perm.extend(0..n2);
            perm.extend(n1 + n2..n1 + n2 + rest);
            let e21 = e21.permute_free(&perm);
            let both_fermionic =
                c1.parity() == Parity::Fermion && c2.parity() == Parity::Fermion;
            Ok(if both_fermionic {
                e12.add(&e21)
            } else {
                e12.sub(&e21)
            })
        }
    }
}

/// Applies a charge rule to a jet symbol. Symbolic charge labels become the
/// leading free indices; concrete labels are sliced away.
pub fn act(model: &Model, charge: &Charge, jet: &JetField) -> Result<Expression> {
    let gen = model.gen_id(&jet.generator)?;
    let order = jet.deriv.len();
    if order > model.jet_max {
        return Err(Error::JetOrder {
            order,
            max: model.jet_max,
        });
    }
    let ident = model.identity_expression(gen, order);
    // Fix the derivative slots to the concrete multi-index.
    let mut expr = ident;
    for (i, &d) in jet.deriv.iter().enumerate() {
        let _ = i;
        expr = expr.slice_free(0, d);
    }
    let mut out = act_on_expression(model, charge.kind, &expr)?;
    if let Some(labels) = &charge.labels {
        let spec = model.charge_spec(charge.kind);
        assert_eq!(labels.len(), spec.rank(), "charge label arity");
        for &v in labels {
            out = out.slice_free(0, v);
        }
    }
    Ok(model.canonicalize(&out))
}

/// The graded bracket of two elementary charges acting on a generator:
/// `act(c1, act(c2, gen)) +- act(c2, act(c1, gen))` with a plus sign exactly
/// when both charges are fermionic. Free slots: c1, c2, then the generator.
pub fn graded_bracket_on(
    model: &Model,
    c1: ChargeKind,
    c2: ChargeKind,
    gen: &str,
) -> Result<Expression> {
    let g = model.gen_id(gen)?;
    let ident = model.identity_expression(g, 0);
    let cc = CompositeCharge::Bracket(
        Box::new(CompositeCharge::Elementary(c1)),
        Box::new(CompositeCharge::Elementary(c2)),
    );
    Ok(model.canonicalize(&act_composite(model, &cc, &ident)?))
}

/// Renders the nonzero content of an expression for reports.
pub fn render_expression(model: &Model, expr: &Expression, limit: usize) -> Vec<String> {
    let mut out = Vec::new();
    let free_dims = expr.free.dims();
    'outer: for (&(gen, order), slab) in &expr.terms {
        let space = model.jet_space(gen, order);
        let g = &model.generators[gen];
        for (f, fidx) in multi_indices(&free_dims).enumerate() {
            for idx in 0..slab.inner {
                let v = &slab.data[f * slab.inner + idx];
                if v.is_zero() {
                    continue;
                }
                let (mi, r) = (idx / space.gen_red, idx % space.gen_red);
                let deriv = &space.multisets[mi];
                let comp = if g.constraint == Constraint::None {
                    let dims = g.spec.dims();
                    let mut rem = r;
                    let mut gi = vec![0usize; dims.len()];
                    for i in (0..dims.len()).rev() {
                        gi[i] = rem % dims[i];
                        rem /= dims[i];
                    }
                    format!("{gi:?}")
                } else {
                    format!("basis{r}")
                };
                let d = if deriv.is_empty() {
                    String::new()
                } else {
                    format!("d{deriv:?} ")
                };
                out.push(format!("free{fidx:?}: ({v}) {d}{}{comp}", g.id));
                if out.len() >= limit {
                    out.push("...".into());
                    break 'outer;
                }
            }
        }
    }
    out
}
