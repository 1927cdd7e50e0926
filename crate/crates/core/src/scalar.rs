//! Exact scalar arithmetic.
//!
//! All quantities in this crate are Gaussian rationals a + b*i with rational
//! a, b. Nothing is ever rounded; every identity check reduces to comparing
//! exact values against zero.
//!
//! [`Rat`] keeps small values (the overwhelmingly common case here) inline as
//! an `i64/i64` pair and falls back to arbitrary precision only when an
//! intermediate no longer fits. Both representations are always normalized
//! (positive denominator, reduced), so equality is structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Clone, Debug)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone, Debug)]
pub struct Rat(Repr);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn big_from_i128(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Rat {
    pub const ZERO: Rat = Rat(Repr::Small(0, 1));
    pub const ONE: Rat = Rat(Repr::Small(1, 1));

    /// Builds `num/den`, reduced. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::normalized(num as i128, den as i128)
    }

    fn normalized(mut num: i128, mut den: i128) -> Rat {
        if num == 0 {
            return Rat::ZERO;
        }
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        num /= g;
        den /= g;
        if num >= i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128 {
            Rat(Repr::Small(num as i64, den as i64))
        } else {
            Rat(Repr::Big(Box::new(big_from_i128(num, den))))
        }
    }

    fn from_big(b: BigRational) -> Rat {
        // Demote when the value fits inline again.
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            Rat(Repr::Small(n, d))
        } else {
            Rat(Repr::Big(Box::new(b)))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn from_bigint_ratio(num: BigInt, den: BigInt) -> Rat {
        Rat::from_big(BigRational::new(num, den))
    }

    /// The value as an integer, when it is one and fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match &self.0 {
            Repr::Small(n, d) => Rat::normalized(*d as i128, *n as i128),
            Repr::Big(b) => Rat::from_big(b.recip()),
        }
    }

    /// Exact decimal-free rendering, `p/q` or `p`.
    pub fn render(&self) -> String {
        match &self.0 {
            Repr::Small(n, 1) => format!("{n}"),
            Repr::Small(n, d) => format!("{n}/{d}"),
            Repr::Big(b) => {
                if b.denom() == &BigInt::from(1) {
                    format!("{}", b.numer())
                } else {
                    format!("{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat(Repr::Small(v, 1))
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            // Representations are canonical: a Big never holds an i64-sized value.
            (Repr::Small(..), Repr::Big(..)) | (Repr::Big(..), Repr::Small(..)) => false,
            (Repr::Big(a), Repr::Big(b)) => a == b,
        }
    }
}
impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::normalized(a * d + c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::normalized(a * d - c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::normalized(a * c, b * d)
            }
            _ => Rat::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::normalized(a * d, b * c)
            }
            _ => Rat::from_big(self.to_big() / rhs.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => Rat(Repr::Small(-n, *d)),
            Repr::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $m:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(Rat, Add, add);
forward_owned_binop!(Rat, Sub, sub);
forward_owned_binop!(Rat, Mul, mul);
forward_owned_binop!(Rat, Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}
impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}
impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// An exact complex scalar `re + im*i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRational {
    pub const ZERO: GaussianRational = GaussianRational {
        re: Rat::ZERO,
        im: Rat::ZERO,
    };
    pub const ONE: GaussianRational = GaussianRational {
        re: Rat::ONE,
        im: Rat::ZERO,
    };
    pub const I: GaussianRational = GaussianRational {
        re: Rat::ZERO,
        im: Rat::ONE,
    };

    pub fn new(re: Rat, im: Rat) -> GaussianRational {
        GaussianRational { re, im }
    }

    pub fn real(re: Rat) -> GaussianRational {
        GaussianRational {
            re,
            im: Rat::ZERO,
        }
    }

    pub fn from_int(v: i64) -> GaussianRational {
        GaussianRational::real(Rat::from(v))
    }

    pub fn frac(num: i64, den: i64) -> GaussianRational {
        GaussianRational::real(Rat::new(num, den))
    }

    /// `num/den * i`.
    pub fn frac_i(num: i64, den: i64) -> GaussianRational {
        GaussianRational::new(Rat::ZERO, Rat::new(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussianRational {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|^2 = z * conj(z)`, always real.
    pub fn norm_sq(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn recip(&self) -> GaussianRational {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero");
        GaussianRational {
            re: &self.re / &n,
            im: &(-&self.im) / &n,
        }
    }

    /// `i^k` for the nilpotent-expansion prefactors.
    pub fn i_pow(k: u32) -> GaussianRational {
        match k % 4 {
            0 => GaussianRational::ONE,
            1 => GaussianRational::I,
            2 => -&GaussianRational::ONE,
            _ => -&GaussianRational::I,
        }
    }

    /// Magnitude surrogate used to pick the "largest" residual in reports:
    /// |re| + |im|, exact.
    pub fn abs_key(&self) -> Rat {
        &self.re.abs() + &self.im.abs()
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.recip()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

forward_owned_binop!(GaussianRational, Add, add);
forward_owned_binop!(GaussianRational, Sub, sub);
forward_owned_binop!(GaussianRational, Mul, mul);
forward_owned_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}
impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}
impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im == Rat::ONE {
                return write!(f, "i");
            }
            if self.im == -&Rat::ONE {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat_strategy() -> impl Strategy<Value = Rat> {
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rat::new(n, d))
    }

    #[test]
    fn normalization() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, 7), Rat::ZERO);
        assert_eq!(Rat::new(-4, -8), Rat::new(1, 2));
    }

    #[test]
    fn promotion_and_demotion() {
        let big = Rat::from(i64::MAX);
        let sq = &big * &big; // does not fit i64
        let back = &sq / &big;
        assert_eq!(back, big);
        assert_eq!(back.render(), format!("{}", i64::MAX));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::frac(3, 4).to_string(), "3/4");
        assert_eq!(GaussianRational::I.to_string(), "i");
        assert_eq!((-GaussianRational::I).to_string(), "-i");
        let z = GaussianRational::new(Rat::new(1, 2), Rat::new(-1, 3));
        assert_eq!(z.to_string(), "1/2-1/3i");
    }

    #[test]
    fn conjugation_involution_and_norm() {
        let z = GaussianRational::new(Rat::new(3, 7), Rat::new(-2, 5));
        assert_eq!(z.conj().conj(), z);
        let n = &z * &z.conj();
        assert!(n.is_real());
        assert_eq!(n.re, z.norm_sq());
    }

    #[test]
    fn complex_field_ops() {
        let z = GaussianRational::new(Rat::new(2, 3), Rat::new(-5, 4));
        let one = &z * &z.recip();
        assert_eq!(one, GaussianRational::ONE);
        assert_eq!(GaussianRational::i_pow(2), GaussianRational::from_int(-1));
        assert_eq!(GaussianRational::i_pow(7), -GaussianRational::I);
    }

    proptest! {
        #[test]
        fn matches_bigrational_add(a in rat_strategy(), b in rat_strategy()) {
            prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
        }

        #[test]
        fn matches_bigrational_mul(a in rat_strategy(), b in rat_strategy()) {
            prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
        }

        #[test]
        fn matches_bigrational_sub_div(a in rat_strategy(), b in rat_strategy()) {
            prop_assert_eq!((&a - &b).to_big(), a.to_big() - b.to_big());
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a / &b).to_big(), a.to_big() / b.to_big());
        }

        #[test]
        fn ordering_matches(a in rat_strategy(), b in rat_strategy()) {
            prop_assert_eq!(a.cmp(&b), a.to_big().cmp(&b.to_big()));
        }
    }
}
