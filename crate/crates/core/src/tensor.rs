//! Dense typed tensors over exact scalars.
//!
//! Storage is row-major over the index spec. Equality is component-wise and
//! exact, so every "identity holds" assertion in the higher layers reduces to
//! a zero-tensor check here.

use crate::error::{Error, Result};
use crate::index::{IndexKind, IndexSlot, IndexSpec, Variance};
use crate::scalar::GaussianRational;

#[derive(Clone, Debug)]
pub struct Tensor {
    spec: IndexSpec,
    strides: Vec<usize>,
    data: Vec<GaussianRational>,
}

impl PartialEq for Tensor {
    fn eq(&self, other: &Tensor) -> bool {
        self.spec == other.spec && self.data == other.data
    }
}
impl Eq for Tensor {}

/// Odometer over a list of dimensions, yielding multi-indices in row-major
/// order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    let dims = dims.to_vec();
    (0..total).map(move |mut flat| {
        let mut idx = vec![0usize; dims.len()];
        for i in (0..dims.len()).rev() {
            idx[i] = flat % dims[i];
            flat /= dims[i];
        }
        idx
    })
}

/// All permutations of `0..k` with their signs (Heap's algorithm).
pub fn permutations_of(k: usize) -> Vec<(Vec<usize>, i8)> {
    // Heap's algorithm, tracking parity.
    let mut perms = Vec::new();
    let mut arr: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut sign = 1i8;
    perms.push((arr.clone(), sign));
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            sign = -sign;
            perms.push((arr.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    perms
}

/// Sign of the permutation sorting `idx`, or 0 if any entry repeats.
pub fn permutation_sign(idx: &[usize]) -> i64 {
    let mut v = idx.to_vec();
    let mut sign = 1i64;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            match v[j].cmp(&v[i]) {
                std::cmp::Ordering::Less => {
                    v.swap(i, j);
                    sign = -sign;
                }
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    sign
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraceMode {
    Sym,
    Antisym,
}

impl Tensor {
    pub fn zeros(spec: IndexSpec) -> Tensor {
        let len = spec.total_len();
        let strides = spec.strides();
        Tensor {
            spec,
            strides,
            data: vec![GaussianRational::ZERO; len],
        }
    }

    pub fn scalar(value: GaussianRational) -> Tensor {
        Tensor {
            spec: IndexSpec::scalar(),
            strides: Vec::new(),
            data: vec![value],
        }
    }

    pub fn from_fn(spec: IndexSpec, f: impl Fn(&[usize]) -> GaussianRational) -> Tensor {
        let dims = spec.dims();
        let data = multi_indices(&dims).map(|idx| f(&idx)).collect();
        let strides = spec.strides();
        Tensor { spec, strides, data }
    }

    pub fn spec(&self) -> &IndexSpec {
        &self.spec
    }

    pub fn data(&self) -> &[GaussianRational] {
        &self.data
    }

    pub fn flat(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.spec.rank());
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    pub fn get(&self, idx: &[usize]) -> &GaussianRational {
        &self.data[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: GaussianRational) {
        let flat = self.flat(idx);
        self.data[flat] = value;
    }

    pub fn add_at(&mut self, idx: &[usize], value: &GaussianRational) {
        let flat = self.flat(idx);
        self.data[flat] += value;
    }

    /// The single entry of a rank-0 tensor.
    pub fn scalar_value(&self) -> &GaussianRational {
        assert_eq!(self.spec.rank(), 0, "not a scalar tensor");
        &self.data[0]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn neg(&self) -> Tensor {
        Tensor {
            spec: self.spec.clone(),
            strides: self.strides.clone(),
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Tensor {
        Tensor {
            spec: self.spec.clone(),
            strides: self.strides.clone(),
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.spec, other.spec, "tensor shape mismatch in add");
        Tensor {
            spec: self.spec.clone(),
            strides: self.strides.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.spec, other.spec, "tensor shape mismatch in sub");
        Tensor {
            spec: self.spec.clone(),
            strides: self.strides.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn conj(&self) -> Tensor {
        Tensor {
            spec: self.spec.clone(),
            strides: self.strides.clone(),
            data: self.data.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Reorders axes: output slot `i` is input slot `perm[i]`.
    pub fn permute_axes(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.spec.rank());
        let new_spec = IndexSpec::new(perm.iter().map(|&p| self.spec.slots()[p]).collect());
        let old_strides = self.spec.strides();
        let dims = new_spec.dims();
        let mut out = Tensor::zeros(new_spec);
        for idx in multi_indices(&dims) {
            let mut old_flat = 0usize;
            for (i, &p) in perm.iter().enumerate() {
                old_flat += idx[i] * old_strides[p];
            }
            let flat = out.flat(&idx);
            out.data[flat] = self.data[old_flat].clone();
        }
        out
    }

    /// Outer product; output spec is `self.spec ++ other.spec`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let spec = self.spec.concat(&other.spec);
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            if a.is_zero() {
                data.extend(std::iter::repeat_n(GaussianRational::ZERO, other.data.len()));
            } else {
                data.extend(other.data.iter().map(|b| a * b));
            }
        }
        let strides = spec.strides();
        Tensor { spec, strides, data }
    }

    /// Contracts a pair of this tensor's own slots (a trace).
    pub fn trace_pair(&self, p1: usize, p2: usize) -> Tensor {
        assert_ne!(p1, p2);
        let slots = self.spec.slots();
        assert_eq!(slots[p1].kind, slots[p2].kind, "trace kind mismatch");
        let keep: Vec<usize> = (0..self.spec.rank()).filter(|&i| i != p1 && i != p2).collect();
        let out_spec = IndexSpec::new(keep.iter().map(|&i| slots[i]).collect());
        let strides = self.spec.strides();
        let dims = out_spec.dims();
        let d = slots[p1].dim();
        let mut out = Tensor::zeros(out_spec);
        for (flat_out, idx) in multi_indices(&dims).enumerate() {
            let mut base = 0usize;
            for (i, &k) in keep.iter().enumerate() {
                base += idx[i] * strides[k];
            }
            let mut acc = GaussianRational::ZERO;
            for s in 0..d {
                acc += &self.data[base + s * strides[p1] + s * strides[p2]];
            }
            out.data[flat_out] = acc;
        }
        out
    }

    pub fn render_nonzero(&self, limit: usize) -> String {
        let dims = self.spec.dims();
        let mut parts = Vec::new();
        for idx in multi_indices(&dims) {
            let v = self.get(&idx);
            if !v.is_zero() {
                parts.push(format!("{idx:?}={v}"));
                if parts.len() == limit {
                    parts.push("...".to_string());
                    break;
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(", ")
        }
    }
}

/// Kronecker delta with one upper and one lower slot of `kind`.
pub fn kron_delta(kind: IndexKind) -> Tensor {
    let spec = IndexSpec::new(vec![IndexSlot::up(kind), IndexSlot::down(kind)]);
    Tensor::from_fn(spec, |idx| {
        if idx[0] == idx[1] {
            GaussianRational::ONE
        } else {
            GaussianRational::ZERO
        }
    })
}

/// Mostly-minus Minkowski metric `diag(+1, -1, ..., -1)` for a spacetime
/// kind, with both slots of the given variance.
pub fn metric(kind: IndexKind, variance: Variance) -> Tensor {
    assert!(kind.is_spacetime(), "metric only defined for spacetime kinds");
    let spec = IndexSpec::new(vec![
        IndexSlot::new(kind, variance),
        IndexSlot::new(kind, variance),
    ]);
    Tensor::from_fn(spec, |idx| {
        if idx[0] != idx[1] {
            GaussianRational::ZERO
        } else if idx[0] == 0 {
            GaussianRational::ONE
        } else {
            GaussianRational::from_int(-1)
        }
    })
}

/// Totally antisymmetric tensor with an explicit value on the identity
/// permutation. Used internally for both spacetime and spinor alphabets.
pub fn levi_civita(kind: IndexKind, variance: Variance, base: i64) -> Tensor {
    let d = kind.dim();
    let spec = IndexSpec::new(vec![IndexSlot::new(kind, variance); d]);
    Tensor::from_fn(spec, |idx| {
        GaussianRational::from_int(base * permutation_sign(idx))
    })
}

/// Spacetime Levi-Civita tensor in the conventions used throughout:
/// in six dimensions the upper tensor has `eps^{012345} = +1`; in four
/// dimensions the lower tensor has `eps_{0123} = +1`. The partner of each is
/// obtained by contracting every index with the mostly-minus metric, which
/// flips the overall sign in both cases.
pub fn epsilon_tensor(kind: IndexKind, variance: Variance) -> Result<Tensor> {
    if !kind.is_spacetime() {
        return Err(Error::InvalidKind(kind));
    }
    let base = match (kind, variance) {
        (IndexKind::Spacetime6, Variance::Upper) => 1,
        (IndexKind::Spacetime6, Variance::Lower) => -1,
        (IndexKind::Spacetime4, Variance::Upper) => -1,
        (IndexKind::Spacetime4, Variance::Lower) => 1,
        _ => unreachable!(),
    };
    Ok(levi_civita(kind, variance, base))
}

/// Strength-one (anti)symmetrization over the given slot positions:
/// `(1/k!) * sum over permutations` (signed for antisym). Idempotent.
pub fn brace_project(t: &Tensor, positions: &[usize], mode: BraceMode) -> Result<Tensor> {
    if positions.is_empty() {
        return Ok(t.clone());
    }
    let slots = t.spec().slots();
    for &p in positions {
        if p >= slots.len() {
            return Err(Error::InvalidProjection(format!(
                "position {p} out of range for rank {}",
                slots.len()
            )));
        }
        if slots[p] != slots[positions[0]] {
            return Err(Error::InvalidProjection(format!(
                "slots {} and {} differ in kind or variance",
                positions[0], p
            )));
        }
    }
    let mut seen = positions.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != positions.len() {
        return Err(Error::InvalidProjection("repeated position".into()));
    }

    let k = positions.len();
    let perms = permutations_of(k);
    let norm = GaussianRational::frac(1, (1..=k as i64).product());
    let dims = t.spec().dims();
    let mut out = Tensor::zeros(t.spec().clone());
    let mut scratch = vec![0usize; dims.len()];
    for (flat, idx) in multi_indices(&dims).enumerate() {
        let mut acc = GaussianRational::ZERO;
        for (perm, sign) in &perms {
            scratch.copy_from_slice(&idx);
            for (slot, &src) in positions.iter().zip(perm.iter()) {
                scratch[*slot] = idx[positions[src]];
            }
            let v = t.get(&scratch);
            if v.is_zero() {
                continue;
            }
            match (mode, sign) {
                (BraceMode::Sym, _) | (BraceMode::Antisym, 1) => acc += v,
                (BraceMode::Antisym, _) => acc -= v,
            }
        }
        out.data[flat] = &acc * &norm;
    }
    Ok(out)
}

/// Contraction of `a` with `b` over the given slot pairs. Paired slots must
/// agree in kind (hence dimension) and have opposite variance. Free slots of
/// the output keep the order "a's free, then b's free".
pub fn contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor> {
    for &(pa, pb) in pairs {
        let sa = a
            .spec()
            .slots()
            .get(pa)
            .ok_or_else(|| Error::Contraction(format!("position {pa} out of range in lhs")))?;
        let sb = b
            .spec()
            .slots()
            .get(pb)
            .ok_or_else(|| Error::Contraction(format!("position {pb} out of range in rhs")))?;
        if sa.kind != sb.kind {
            return Err(Error::Contraction(format!(
                "kind mismatch at pair ({pa},{pb}): {} vs {}",
                sa.kind, sb.kind
            )));
        }
        if sa.variance == sb.variance {
            return Err(Error::Contraction(format!(
                "variance must be opposite at pair ({pa},{pb})"
            )));
        }
    }
    let mut pa_seen: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    pa_seen.sort_unstable();
    pa_seen.dedup();
    let mut pb_seen: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    pb_seen.sort_unstable();
    pb_seen.dedup();
    if pa_seen.len() != pairs.len() || pb_seen.len() != pairs.len() {
        return Err(Error::Contraction("repeated contraction position".into()));
    }

    let a_free: Vec<usize> = (0..a.spec().rank())
        .filter(|i| !pairs.iter().any(|p| p.0 == *i))
        .collect();
    let b_free: Vec<usize> = (0..b.spec().rank())
        .filter(|i| !pairs.iter().any(|p| p.1 == *i))
        .collect();

    let mut out_slots = Vec::new();
    out_slots.extend(a_free.iter().map(|&i| a.spec().slots()[i]));
    out_slots.extend(b_free.iter().map(|&i| b.spec().slots()[i]));
    let out_spec = IndexSpec::new(out_slots);

    let a_strides = a.spec().strides();
    let b_strides = b.spec().strides();
    let a_dims = a.spec().dims();

    let b_free_dims: Vec<usize> = b_free.iter().map(|&i| b.spec().slots()[i].dim()).collect();
    let b_free_total: usize = b_free_dims.iter().product();
    // Flat offsets of every b-free multi-index, enumerated once.
    let b_free_offsets: Vec<usize> = multi_indices(&b_free_dims)
        .map(|idx| {
            idx.iter()
                .zip(&b_free)
                .map(|(v, &slot)| v * b_strides[slot])
                .sum()
        })
        .collect();

    let mut out = Tensor::zeros(out_spec);
    // Walk a's nonzero entries; for each, accumulate over b's free block.
    for (a_flat, a_val) in a.data().iter().enumerate() {
        if a_val.is_zero() {
            continue;
        }
        let mut rem = a_flat;
        let mut a_idx = vec![0usize; a_dims.len()];
        for i in 0..a_dims.len() {
            a_idx[i] = rem / a_strides[i];
            rem %= a_strides[i];
        }
        let mut a_free_flat = 0usize;
        {
            let mut mult = 1usize;
            for &i in a_free.iter().rev() {
                a_free_flat += a_idx[i] * mult;
                mult *= a_dims[i];
            }
        }
        let b_summed_base: usize = pairs
            .iter()
            .map(|&(pa, pb)| a_idx[pa] * b_strides[pb])
            .sum();
        let out_base = a_free_flat * b_free_total;
        for (j, b_off) in b_free_offsets.iter().enumerate() {
            let b_val = &b.data()[b_summed_base + b_off];
            if b_val.is_zero() {
                continue;
            }
            let prod = a_val * b_val;
            out.data[out_base + j] += &prod;
        }
    }
    Ok(out)
}

/// The symplectic structure `eps^{ij}` (2N x 2N block form) and its inverse
/// `epsbar_{ij}` satisfying `eps^{ij} epsbar_{jk} = delta^i_k`.
pub fn symplectic_eps(n: u8) -> (Tensor, Tensor) {
    let kind = IndexKind::Symplectic(n);
    let nn = n as usize;
    let up = Tensor::from_fn(
        IndexSpec::new(vec![IndexSlot::up(kind), IndexSlot::up(kind)]),
        |idx| {
            if idx[0] + nn == idx[1] {
                GaussianRational::ONE
            } else if idx[1] + nn == idx[0] {
                GaussianRational::from_int(-1)
            } else {
                GaussianRational::ZERO
            }
        },
    );
    let down = Tensor::from_fn(
        IndexSpec::new(vec![IndexSlot::down(kind), IndexSlot::down(kind)]),
        |idx| {
            if idx[0] + nn == idx[1] {
                GaussianRational::from_int(-1)
            } else if idx[1] + nn == idx[0] {
                GaussianRational::ONE
            } else {
                GaussianRational::ZERO
            }
        },
    );
    (up, down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use proptest::prelude::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn epsilon_conventions() {
        let e6u = epsilon_tensor(IndexKind::Spacetime6, Variance::Upper).unwrap();
        assert_eq!(e6u.get(&[0, 1, 2, 3, 4, 5]), &g(1));
        let e6d = epsilon_tensor(IndexKind::Spacetime6, Variance::Lower).unwrap();
        assert_eq!(e6d.get(&[0, 1, 2, 3, 4, 5]), &g(-1));
        assert_eq!(e6d.get(&[0, 1, 2, 3, 4, 4]), &g(0));
        assert_eq!(e6d.get(&[1, 0, 2, 3, 4, 5]), &g(1));

        let e4u = epsilon_tensor(IndexKind::Spacetime4, Variance::Upper).unwrap();
        let e4d = epsilon_tensor(IndexKind::Spacetime4, Variance::Lower).unwrap();
        assert_eq!(e4u.get(&[0, 1, 2, 3]), &g(-1));
        assert_eq!(e4d.get(&[0, 1, 2, 3]), &g(1));

        assert!(epsilon_tensor(IndexKind::Spinor6, Variance::Upper).is_err());
    }

    #[test]
    fn epsilon_lowering_matches_metric_contraction() {
        // Lowering all indices of the upper tensor with the metric must give
        // the lower tensor.
        for kind in [IndexKind::Spacetime6, IndexKind::Spacetime4] {
            let up = epsilon_tensor(kind, Variance::Upper).unwrap();
            let eta = metric(kind, Variance::Lower);
            let mut cur = up;
            for _ in 0..kind.dim() {
                // Contract the first remaining upper slot; it lands at the end.
                cur = contract(&cur, &eta, &[(0, 0)]).unwrap();
            }
            let down = epsilon_tensor(kind, Variance::Lower).unwrap();
            assert_eq!(cur, down);
        }
    }

    #[test]
    fn full_epsilon_contraction_is_minus_d_factorial() {
        // Oracle: direct enumeration over permutations with metric signs,
        // frozen here as the regression value -d!.
        for (kind, expect) in [(IndexKind::Spacetime6, -720), (IndexKind::Spacetime4, -24)] {
            let up = epsilon_tensor(kind, Variance::Upper).unwrap();
            let down = epsilon_tensor(kind, Variance::Lower).unwrap();
            let pairs: Vec<(usize, usize)> = (0..kind.dim()).map(|i| (i, i)).collect();
            let s = contract(&up, &down, &pairs).unwrap();
            assert_eq!(s.scalar_value(), &g(expect));
        }
    }

    #[test]
    fn delta_trace_and_metric_inverse() {
        let d6 = kron_delta(IndexKind::Spacetime6);
        assert_eq!(d6.trace_pair(0, 1).scalar_value(), &g(6));

        let up = metric(IndexKind::Spacetime6, Variance::Upper);
        let down = metric(IndexKind::Spacetime6, Variance::Lower);
        let prod = contract(&up, &down, &[(1, 0)]).unwrap();
        assert_eq!(prod, kron_delta(IndexKind::Spacetime6));
    }

    #[test]
    fn brace_examples() {
        // delta^{[A}_C delta^{B]}_D at (A,B,C,D)=(0,1,0,1) is 1/2:
        // (1/2)(d^0_0 d^1_1 - d^1_0 d^0_1) = 1/2.
        let dd = kron_delta(IndexKind::Spacetime6).outer(&kron_delta(IndexKind::Spacetime6));
        // slots: A ^, C _, B ^, D _ ; antisymmetrize the upper pair (0, 2).
        let anti = brace_project(&dd, &[0, 2], BraceMode::Antisym).unwrap();
        assert_eq!(
            anti.get(&[0, 0, 1, 1]),
            &GaussianRational::frac(1, 2)
        );

        // Antisymmetrizing a symmetric tensor gives zero.
        let eta = metric(IndexKind::Spacetime6, Variance::Upper);
        let z = brace_project(&eta, &[0, 1], BraceMode::Antisym).unwrap();
        assert!(z.is_zero());

        // Mixed kinds are rejected.
        let mixed = Tensor::zeros(IndexSpec::new(vec![
            IndexSlot::up(IndexKind::Spacetime6),
            IndexSlot::up(IndexKind::Spinor6),
        ]));
        assert!(brace_project(&mixed, &[0, 1], BraceMode::Antisym).is_err());
    }

    #[test]
    fn contract_errors() {
        let eta_up = metric(IndexKind::Spacetime6, Variance::Upper);
        let eta4 = metric(IndexKind::Spacetime4, Variance::Lower);
        assert!(contract(&eta_up, &eta4, &[(0, 0)]).is_err()); // kind mismatch
        let eta_up2 = metric(IndexKind::Spacetime6, Variance::Upper);
        assert!(contract(&eta_up, &eta_up2, &[(0, 0)]).is_err()); // same variance
    }

    #[test]
    fn symplectic_inverse() {
        for n in [1u8, 2, 3] {
            let (up, down) = symplectic_eps(n);
            let prod = contract(&up, &down, &[(1, 0)]).unwrap();
            assert_eq!(prod, kron_delta(IndexKind::Symplectic(n)));
        }
    }

    fn small_tensor_strategy() -> impl Strategy<Value = Tensor> {
        // Rank-3 tensors over a 3-slot spacetime4 spec with small entries.
        proptest::collection::vec(-4i64..=4, 64).prop_map(|vals| {
            let spec = IndexSpec::new(vec![IndexSlot::down(IndexKind::Spacetime4); 3]);
            let mut t = Tensor::zeros(spec);
            for (i, v) in vals.into_iter().enumerate() {
                t.data[i] = g(v);
            }
            t
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn brace_is_idempotent(t in small_tensor_strategy()) {
            for mode in [BraceMode::Sym, BraceMode::Antisym] {
                let once = brace_project(&t, &[0, 1, 2], mode).unwrap();
                let twice = brace_project(&once, &[0, 1, 2], mode).unwrap();
                prop_assert_eq!(&once, &twice);
            }
        }

        #[test]
        fn sym_plus_antisym_resolves_identity(t in small_tensor_strategy()) {
            let s = brace_project(&t, &[0, 1], BraceMode::Sym).unwrap();
            let a = brace_project(&t, &[0, 1], BraceMode::Antisym).unwrap();
            prop_assert_eq!(s.add(&a), t);
        }

        #[test]
        fn contract_is_bilinear(t in small_tensor_strategy(), u in small_tensor_strategy(), c in -3i64..=3) {
            let eta = metric(IndexKind::Spacetime4, Variance::Upper);
            let lhs = contract(&t.scale(&g(c)).add(&u), &eta, &[(0, 0)]).unwrap();
            let rhs = contract(&t, &eta, &[(0, 0)]).unwrap().scale(&g(c))
                .add(&contract(&u, &eta, &[(0, 0)]).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rat_exactness_carries_through() {
        // A quick end-to-end exactness check: (1/3 + 1/6) * 2 == 1.
        let t = Tensor::scalar(GaussianRational::real(
            &(&Rat::new(1, 3) + &Rat::new(1, 6)) * &Rat::new(2, 1),
        ));
        assert_eq!(t.scalar_value(), &GaussianRational::ONE);
    }
}
