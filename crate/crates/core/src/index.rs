//! Typed tensor indices.
//!
//! Every tensor slot carries a kind (which fixes its dimension) and a
//! variance. Six-dimensional spacetime indices run over 0..6, chiral spinor
//! indices of the 6D algebra over 0..4, four-dimensional spacetime over 0..4,
//! two-component spinors over 0..2 and symplectic labels over 0..2N.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndexKind {
    Spacetime6,
    Spacetime4,
    Spinor6,
    Spinor4Undotted,
    Spinor4Dotted,
    /// Symplectic R-symmetry label; carries N, dimension is 2N.
    Symplectic(u8),
}

impl IndexKind {
    pub fn dim(self) -> usize {
        match self {
            IndexKind::Spacetime6 => 6,
            IndexKind::Spacetime4 => 4,
            IndexKind::Spinor6 => 4,
            IndexKind::Spinor4Undotted | IndexKind::Spinor4Dotted => 2,
            IndexKind::Symplectic(n) => 2 * n as usize,
        }
    }

    pub fn is_spacetime(self) -> bool {
        matches!(self, IndexKind::Spacetime6 | IndexKind::Spacetime4)
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Spacetime6 => write!(f, "spacetime6"),
            IndexKind::Spacetime4 => write!(f, "spacetime4"),
            IndexKind::Spinor6 => write!(f, "spinor6"),
            IndexKind::Spinor4Undotted => write!(f, "spinor4-undotted"),
            IndexKind::Spinor4Dotted => write!(f, "spinor4-dotted"),
            IndexKind::Symplectic(n) => write!(f, "symplectic(N={n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variance {
    Upper,
    Lower,
}

impl Variance {
    pub fn flip(self) -> Variance {
        match self {
            Variance::Upper => Variance::Lower,
            Variance::Lower => Variance::Upper,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IndexSlot {
    pub kind: IndexKind,
    pub variance: Variance,
}

impl IndexSlot {
    pub fn new(kind: IndexKind, variance: Variance) -> IndexSlot {
        IndexSlot { kind, variance }
    }

    pub fn up(kind: IndexKind) -> IndexSlot {
        IndexSlot::new(kind, Variance::Upper)
    }

    pub fn down(kind: IndexKind) -> IndexSlot {
        IndexSlot::new(kind, Variance::Lower)
    }

    pub fn dim(self) -> usize {
        self.kind.dim()
    }

    pub fn dual(self) -> IndexSlot {
        IndexSlot::new(self.kind, self.variance.flip())
    }
}

/// Ordered list of index slots; the shape of a tensor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Default)]
pub struct IndexSpec(pub Vec<IndexSlot>);

impl IndexSpec {
    pub fn new(slots: Vec<IndexSlot>) -> IndexSpec {
        IndexSpec(slots)
    }

    pub fn scalar() -> IndexSpec {
        IndexSpec(Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn slots(&self) -> &[IndexSlot] {
        &self.0
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.dim()).collect()
    }

    pub fn total_len(&self) -> usize {
        self.0.iter().map(|s| s.dim()).product()
    }

    /// Spec with every slot's variance flipped.
    pub fn dual(&self) -> IndexSpec {
        IndexSpec(self.0.iter().map(|s| s.dual()).collect())
    }

    pub fn concat(&self, other: &IndexSpec) -> IndexSpec {
        let mut slots = self.0.clone();
        slots.extend_from_slice(&other.0);
        IndexSpec(slots)
    }

    /// Row-major strides matching [`dims`](Self::dims).
    pub fn strides(&self) -> Vec<usize> {
        let dims = self.dims();
        let mut strides = vec![0usize; dims.len()];
        let mut acc = 1usize;
        for i in (0..dims.len()).rev() {
            strides[i] = acc;
            acc *= dims[i];
        }
        strides
    }
}

impl fmt::Display for IndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let v = match s.variance {
                Variance::Upper => "^",
                Variance::Lower => "_",
            };
            write!(f, "{v}{}", s.kind)?;
        }
        write!(f, "]")
    }
}
