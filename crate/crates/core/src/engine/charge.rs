//! Charges: elementary supersymmetry, translation and gauge charges, and
//! nested brackets of them.

use super::generator::Parity;
use crate::index::{IndexKind, IndexSlot, IndexSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChargeKind {
    /// Supersymmetry charge; carries a symplectic and a spinor label.
    Q,
    /// Conjugate supersymmetry charge of the four-dimensional models.
    QBar,
    /// Translation.
    P,
    /// Gauge charge.
    Z,
}

impl ChargeKind {
    pub fn parity(self) -> Parity {
        match self {
            ChargeKind::Q | ChargeKind::QBar => Parity::Fermion,
            ChargeKind::P | ChargeKind::Z => Parity::Boson,
        }
    }

    /// The free index slots the charge carries, for a model of the given
    /// spacetime kind and symplectic rank.
    pub fn index_spec(self, st: IndexKind, n: u8) -> IndexSpec {
        match (self, st) {
            (ChargeKind::Q, IndexKind::Spacetime6) => IndexSpec::new(vec![
                IndexSlot::up(IndexKind::Symplectic(n)),
                IndexSlot::down(IndexKind::Spinor6),
            ]),
            (ChargeKind::Q, IndexKind::Spacetime4) => {
                IndexSpec::new(vec![IndexSlot::down(IndexKind::Spinor4Undotted)])
            }
            (ChargeKind::QBar, IndexKind::Spacetime4) => {
                IndexSpec::new(vec![IndexSlot::down(IndexKind::Spinor4Dotted)])
            }
            (ChargeKind::P | ChargeKind::Z, _) => IndexSpec::new(vec![IndexSlot::down(st)]),
            _ => panic!("charge kind not available in this dimension"),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ChargeKind::Q => "Q",
            ChargeKind::QBar => "Qbar",
            ChargeKind::P => "P",
            ChargeKind::Z => "Z",
        }
    }
}

/// An elementary charge, optionally with concrete index labels. Symbolic
/// labels become free indices of the acted expression, in charge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charge {
    pub kind: ChargeKind,
    pub labels: Option<Vec<usize>>,
}

impl Charge {
    pub fn symbolic(kind: ChargeKind) -> Charge {
        Charge { kind, labels: None }
    }

    pub fn q(i: usize, alpha: usize) -> Charge {
        Charge {
            kind: ChargeKind::Q,
            labels: Some(vec![i, alpha]),
        }
    }

    pub fn q4(alpha: usize) -> Charge {
        Charge {
            kind: ChargeKind::Q,
            labels: Some(vec![alpha]),
        }
    }

    pub fn qbar(alpha_dot: usize) -> Charge {
        Charge {
            kind: ChargeKind::QBar,
            labels: Some(vec![alpha_dot]),
        }
    }

    pub fn p(a: usize) -> Charge {
        Charge {
            kind: ChargeKind::P,
            labels: Some(vec![a]),
        }
    }

    pub fn z(a: usize) -> Charge {
        Charge {
            kind: ChargeKind::Z,
            labels: Some(vec![a]),
        }
    }
}

/// Nested charge brackets, evaluated on fields via the graded recursion
/// `[[c1,c2}, X} = [c1,[c2,X}} -+ [c2,[c1,X}}` with a plus sign exactly when
/// both factors are fermionic.
#[derive(Clone, Debug)]
pub enum CompositeCharge {
    Elementary(ChargeKind),
    Bracket(Box<CompositeCharge>, Box<CompositeCharge>),
}

impl CompositeCharge {
    pub fn parity(&self) -> Parity {
        match self {
            CompositeCharge::Elementary(k) => k.parity(),
            CompositeCharge::Bracket(a, b) => a.parity().xor(b.parity()),
        }
    }

    /// Right-nested comb `[c1,[c2,[...,[c_{n-1},c_n]...]]]`.
    pub fn comb(kinds: &[ChargeKind]) -> CompositeCharge {
        assert!(!kinds.is_empty());
        let mut it = kinds.iter().rev();
        let mut acc = CompositeCharge::Elementary(*it.next().unwrap());
        for k in it {
            acc = CompositeCharge::Bracket(
                Box::new(CompositeCharge::Elementary(*k)),
                Box::new(acc),
            );
        }
        acc
    }

    /// Total free slots contributed, left to right.
    pub fn index_spec(&self, st: IndexKind, n: u8) -> IndexSpec {
        match self {
            CompositeCharge::Elementary(k) => k.index_spec(st, n),
            CompositeCharge::Bracket(a, b) => {
                a.index_spec(st, n).concat(&b.index_spec(st, n))
            }
        }
    }
}
