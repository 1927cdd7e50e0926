//! Formal linear combinations of jets with exact tensor coefficients.
//!
//! A term's coefficient is stored as a slab: a dense array over the
//! expression's free-index grid (outer) times the reduced jet coordinates of
//! one (generator, derivative order) pair (inner). Reduced coordinates make
//! symmetrized derivatives and constrained generators canonical by
//! construction, so two expressions are equal exactly when their slabs agree
//! component-wise.

use super::generator::Parity;
use crate::index::IndexSpec;
use crate::scalar::GaussianRational;
use crate::tensor::{multi_indices, Tensor};
use std::collections::BTreeMap;

/// Key of one jet family: (generator index in the model, derivative order).
pub type TermKey = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermSlab {
    /// Reduced jet dimension (inner stride).
    pub inner: usize,
    /// Row-major over [free grid x inner].
    pub data: Vec<GaussianRational>,
}

impl TermSlab {
    pub fn zeros(free_total: usize, inner: usize) -> TermSlab {
        TermSlab {
            inner,
            data: vec![GaussianRational::ZERO; free_total * inner],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct Expression {
    pub free: IndexSpec,
    pub parity: Parity,
    pub terms: BTreeMap<TermKey, TermSlab>,
}

impl PartialEq for Expression {
    fn eq(&self, other: &Expression) -> bool {
        if self.free != other.free || self.parity != other.parity {
            return false;
        }
        // Absent terms are zero slabs.
        let keys: std::collections::BTreeSet<TermKey> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for k in keys {
            match (self.terms.get(&k), other.terms.get(&k)) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return false;
                    }
                }
                (Some(a), None) => {
                    if !a.is_zero() {
                        return false;
                    }
                }
                (None, Some(b)) => {
                    if !b.is_zero() {
                        return false;
                    }
                }
                (None, None) => unreachable!(),
            }
        }
        true
    }
}
impl Eq for Expression {}

impl Expression {
    pub fn zero(free: IndexSpec, parity: Parity) -> Expression {
        Expression {
            free,
            parity,
            terms: BTreeMap::new(),
        }
    }

    pub fn free_total(&self) -> usize {
        self.free.total_len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|s| s.is_zero())
    }

    pub fn prune(&mut self) {
        self.terms.retain(|_, s| !s.is_zero());
    }

    pub fn add_term(&mut self, key: TermKey, slab: TermSlab) {
        debug_assert_eq!(slab.data.len(), self.free_total() * slab.inner);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                debug_assert_eq!(existing.inner, slab.inner);
                for (a, b) in existing.data.iter_mut().zip(&slab.data) {
                    *a += b;
                }
            }
            None => {
                self.terms.insert(key, slab);
            }
        }
    }

    pub fn add(&self, other: &Expression) -> Expression {
        assert_eq!(self.free, other.free, "free index spec mismatch in add");
        assert_eq!(self.parity, other.parity, "parity mismatch in add");
        let mut out = self.clone();
        for (k, s) in &other.terms {
            out.add_term(*k, s.clone());
        }
        out.prune();
        out
    }

    pub fn sub(&self, other: &Expression) -> Expression {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Expression {
        self.scale(&GaussianRational::from_int(-1))
    }

    pub fn scale(&self, c: &GaussianRational) -> Expression {
        let mut out = self.clone();
        for s in out.terms.values_mut() {
            for v in s.data.iter_mut() {
                *v = &*v * c;
            }
        }
        out.prune();
        out
    }

    /// Reorders free slots: output slot `i` is input slot `perm[i]`.
    pub fn permute_free(&self, perm: &[usize]) -> Expression {
        assert_eq!(perm.len(), self.free.rank());
        let new_free = IndexSpec::new(perm.iter().map(|&p| self.free.slots()[p]).collect());
        let old_dims = self.free.dims();
        let old_strides = self.free.strides();
        let new_dims = new_free.dims();
        let mut out = Expression::zero(new_free, self.parity);
        for (key, slab) in &self.terms {
            let mut ns = TermSlab::zeros(out.free_total(), slab.inner);
            for (new_flat, idx) in multi_indices(&new_dims).enumerate() {
                let mut old_flat = 0usize;
                for (i, &p) in perm.iter().enumerate() {
                    old_flat += idx[i] * old_strides[p];
                }
                let src = &slab.data[old_flat * slab.inner..(old_flat + 1) * slab.inner];
                let dst = &mut ns.data[new_flat * slab.inner..(new_flat + 1) * slab.inner];
                dst.clone_from_slice(src);
            }
            out.terms.insert(*key, ns);
        }
        let _ = old_dims;
        out.prune();
        out
    }

    /// Fixes free slot `pos` to the concrete value `val`.
    pub fn slice_free(&self, pos: usize, val: usize) -> Expression {
        let slots = self.free.slots();
        assert!(pos < slots.len());
        assert!(val < slots[pos].dim());
        let new_free = IndexSpec::new(
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pos)
                .map(|(_, s)| *s)
                .collect(),
        );
        let dims = self.free.dims();
        let new_dims = new_free.dims();
        let strides = self.free.strides();
        let mut out = Expression::zero(new_free, self.parity);
        for (key, slab) in &self.terms {
            let mut ns = TermSlab::zeros(out.free_total(), slab.inner);
            for (new_flat, idx) in multi_indices(&new_dims).enumerate() {
                let mut old_flat = val * strides[pos];
                let mut j = 0usize;
                for i in 0..dims.len() {
                    if i == pos {
                        continue;
                    }
                    old_flat += idx[j] * strides[i];
                    j += 1;
                }
                let src = &slab.data[old_flat * slab.inner..(old_flat + 1) * slab.inner];
                ns.data[new_flat * slab.inner..(new_flat + 1) * slab.inner].clone_from_slice(src);
            }
            out.terms.insert(*key, ns);
        }
        out.prune();
        out
    }

    /// Contracts an external tensor against free slots of this expression.
    /// Pairs are (tensor slot, expression free slot); paired slots must agree
    /// in kind and have opposite variance. The result's free spec is the
    /// tensor's unpaired slots followed by this expression's unpaired slots.
    pub fn contract_with(&self, t: &Tensor, pairs: &[(usize, usize)]) -> Expression {
        for &(tp, ep) in pairs {
            let ts = t.spec().slots()[tp];
            let es = self.free.slots()[ep];
            assert_eq!(ts.kind, es.kind, "contraction kind mismatch");
            assert_ne!(ts.variance, es.variance, "contraction variance must be opposite");
        }
        let t_free: Vec<usize> = (0..t.spec().rank())
            .filter(|i| !pairs.iter().any(|p| p.0 == *i))
            .collect();
        let e_free: Vec<usize> = (0..self.free.rank())
            .filter(|i| !pairs.iter().any(|p| p.1 == *i))
            .collect();
        let mut new_slots = Vec::new();
        new_slots.extend(t_free.iter().map(|&i| t.spec().slots()[i]));
        new_slots.extend(e_free.iter().map(|&i| self.free.slots()[i]));
        let new_free = IndexSpec::new(new_slots);

        // Group tensor entries by the contracted value tuple.
        let t_dims = t.spec().dims();
        let mut groups: std::collections::HashMap<Vec<usize>, Vec<(usize, GaussianRational)>> =
            std::collections::HashMap::new();
        let t_free_dims: Vec<usize> = t_free.iter().map(|&i| t_dims[i]).collect();
        for (flat, idx) in multi_indices(&t_dims).enumerate() {
            let v = &t.data()[flat];
            if v.is_zero() {
                continue;
            }
            let cvals: Vec<usize> = pairs.iter().map(|&(tp, _)| idx[tp]).collect();
            let mut tf_flat = 0usize;
            for (k, &i) in t_free.iter().enumerate() {
                tf_flat = tf_flat * t_free_dims[k] + idx[i];
            }
            groups.entry(cvals).or_default().push((tf_flat, v.clone()));
        }

        let e_dims = self.free.dims();
        let e_free_dims: Vec<usize> = e_free.iter().map(|&i| e_dims[i]).collect();
        let e_free_total: usize = e_free_dims.iter().product();
        let t_free_total: usize = t_free_dims.iter().product();

        let mut out = Expression::zero(new_free, self.parity);
        for (key, slab) in &self.terms {
            let mut ns = TermSlab::zeros(t_free_total * e_free_total, slab.inner);
            for (row, idx) in multi_indices(&e_dims).enumerate() {
                let src = &slab.data[row * slab.inner..(row + 1) * slab.inner];
                if src.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let cvals: Vec<usize> = pairs.iter().map(|&(_, ep)| idx[ep]).collect();
                let Some(entries) = groups.get(&cvals) else {
                    continue;
                };
                let mut ef_flat = 0usize;
                for (k, &i) in e_free.iter().enumerate() {
                    ef_flat = ef_flat * e_free_dims[k] + idx[i];
                }
                for (tf_flat, val) in entries {
                    let base = (tf_flat * e_free_total + ef_flat) * slab.inner;
                    for (j, s) in src.iter().enumerate() {
                        if s.is_zero() {
                            continue;
                        }
                        let p = val * s;
                        ns.data[base + j] += &p;
                    }
                }
            }
            out.add_term(*key, ns);
        }
        out.prune();
        out
    }
}
