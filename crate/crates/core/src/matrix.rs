//! Small dense square matrices over exact scalars; the workhorse for the
//! gamma/sigma identity evaluators where tensors would be needless overhead.

use crate::scalar::GaussianRational;
use crate::tensor::Tensor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    e: Vec<GaussianRational>,
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat {
            n,
            e: vec![GaussianRational::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.e[i * n + i] = GaussianRational::ONE;
        }
        m
    }

    /// Reads a rank-2 tensor into matrix form (row index first).
    pub fn from_tensor(t: &Tensor) -> Mat {
        assert_eq!(t.spec().rank(), 2);
        let n = t.spec().dims()[0];
        assert_eq!(t.spec().dims()[1], n);
        Mat {
            n,
            e: t.data().to_vec(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.e[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.e[r * self.n + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &GaussianRational) {
        self.e[r * self.n + c] += v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.e[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.e[k * n + c];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out.e[r * n + c] += &p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        Mat {
            n: self.n,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.n, other.n);
        Mat {
            n: self.n,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            n: self.n,
            e: self.e.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Mat {
        Mat {
            n: self.n,
            e: self.e.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.e[c * n + r] = self.e[r * n + c].clone();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.e[c * n + r] = self.e[r * n + c].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::ZERO;
        for i in 0..self.n {
            acc += &self.e[i * self.n + i];
        }
        acc
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_mul(&self, other: &Mat) -> GaussianRational {
        let n = self.n;
        let mut acc = GaussianRational::ZERO;
        for r in 0..n {
            for c in 0..n {
                let a = &self.e[r * n + c];
                if a.is_zero() {
                    continue;
                }
                let p = a * &other.e[c * n + r];
                acc += &p;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|v| v.is_zero())
    }
}

/// Strength-one antisymmetrization of a labelled family: for labels
/// `(l0..lk)` sums `sign(s) * f(permuted labels)` over all permutations,
/// divided by k!.
pub fn antisymmetrize_labels(labels: &[usize], f: impl Fn(&[usize]) -> Mat) -> Mat {
    let k = labels.len();
    let mut acc: Option<Mat> = None;
    let mut count = 0i64;
    for (perm, sign) in crate::tensor::permutations_of(k) {
        let permuted: Vec<usize> = perm.iter().map(|&i| labels[i]).collect();
        let m = f(&permuted);
        let m = if sign > 0 { m } else { m.neg() };
        acc = Some(match acc {
            None => m,
            Some(a) => a.add(&m),
        });
        count += 1;
    }
    acc.unwrap().scale(&GaussianRational::frac(1, count))
}
