//! Bicomplex numbers `q = Q1 + Q2 k` with complex components.
//!
//! The two imaginary units commute: `i^2 = k^2 = -1`, `ik = ki`. The ring
//! is commutative but not a field; the nonzero elements with
//! `Q1^2 + Q2^2 = 0` are zero divisors and have no inverse.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Relative tolerance of the default zero-divisor test.
pub const ZERO_DIVISOR_REL_TOL: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Bicomplex {
    /// Scalar (complex) part `Q1 = Sc(q)`.
    pub sc: Complex64,
    /// Vector part `Q2 = Vec(q)`, the coefficient of `k`.
    pub vec: Complex64,
}

impl Bicomplex {
    pub const fn new(sc: Complex64, vec: Complex64) -> Self {
        Bicomplex { sc, vec }
    }

    pub fn zero() -> Self {
        Bicomplex::default()
    }

    pub fn one() -> Self {
        Bicomplex::from(1.0)
    }

    /// The unit `k`.
    pub fn k() -> Self {
        Bicomplex::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// `z = x + k y` for a point in the plane.
    pub fn from_point(x: f64, y: f64) -> Self {
        Bicomplex::new(Complex64::new(x, 0.0), Complex64::new(y, 0.0))
    }

    /// Conjugation `C q = Q1 - Q2 k`. This is a ring automorphism.
    pub fn conj(&self) -> Self {
        Bicomplex::new(self.sc, -self.vec)
    }

    /// `q C(q) = Q1^2 + Q2^2`, always a scalar.
    pub fn modulus_sq(&self) -> Complex64 {
        self.sc * self.sc + self.vec * self.vec
    }

    /// Euclidean norm of the four real components.
    pub fn norm(&self) -> f64 {
        (self.sc.norm_sqr() + self.vec.norm_sqr()).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.sc == Complex64::new(0.0, 0.0) && self.vec == Complex64::new(0.0, 0.0)
    }

    /// True iff `q` is nonzero and `|Q1^2 + Q2^2| <= tol (|Q1|^2 + |Q2|^2)`.
    pub fn is_zero_divisor(&self, tol: f64) -> bool {
        if self.is_zero() {
            return false;
        }
        self.modulus_sq().norm() <= tol * (self.sc.norm_sqr() + self.vec.norm_sqr())
    }

    /// Multiplicative inverse `C(q) / (Q1^2 + Q2^2)`.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_with_tol(ZERO_DIVISOR_REL_TOL)
    }

    pub fn inverse_with_tol(&self, tol: f64) -> Result<Self> {
        if self.is_zero() || self.is_zero_divisor(tol) {
            return Err(Error::ZeroDivisor);
        }
        let m = self.modulus_sq();
        Ok(Bicomplex::new(self.sc / m, -self.vec / m))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Bicomplex::new(self.sc * c, self.vec * c)
    }

    /// Left multiplication by `k`: `k (Q1 + Q2 k) = -Q2 + Q1 k`.
    pub fn mul_k(&self) -> Self {
        Bicomplex::new(-self.vec, self.sc)
    }

    pub fn powu(&self, n: u32) -> Self {
        let mut acc = Bicomplex::one();
        for _ in 0..n {
            acc = acc * *self;
        }
        acc
    }
}

impl From<f64> for Bicomplex {
    fn from(re: f64) -> Self {
        Bicomplex::new(Complex64::new(re, 0.0), Complex64::new(0.0, 0.0))
    }
}

impl From<Complex64> for Bicomplex {
    fn from(sc: Complex64) -> Self {
        Bicomplex::new(sc, Complex64::new(0.0, 0.0))
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.sc + rhs.sc, self.vec + rhs.vec)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, rhs: Bicomplex) {
        *self = *self + rhs;
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.sc - rhs.sc, self.vec - rhs.vec)
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, rhs: Bicomplex) {
        *self = *self - rhs;
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-self.sc, -self.vec)
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        Bicomplex::new(
            self.sc * rhs.sc - self.vec * rhs.vec,
            self.sc * rhs.vec + self.vec * rhs.sc,
        )
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, rhs: Bicomplex) {
        *self = *self * rhs;
    }
}

/// Division panics-free variant is [`Bicomplex::inverse`]; this operator is a
/// convenience for code paths where the divisor is known to be regular.
impl Div for Bicomplex {
    type Output = Bicomplex;
    fn div(self, rhs: Bicomplex) -> Bicomplex {
        let m = rhs.modulus_sq();
        let inv = Bicomplex::new(rhs.sc / m, -rhs.vec / m);
        self * inv
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})k", self.sc, self.vec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn k_squared_is_minus_one() {
        let k = Bicomplex::k();
        assert_eq!(k * k, Bicomplex::from(-1.0));
    }

    #[test]
    fn zero_divisor_product_vanishes() {
        // (1 + ik)(1 - ik) = 0
        let a = Bicomplex::new(c(1.0, 0.0), c(0.0, 1.0));
        let b = a.conj();
        assert_eq!(a * b, Bicomplex::zero());
        assert!(a.is_zero_divisor(ZERO_DIVISOR_REL_TOL));
        assert!(matches!(a.inverse(), Err(Error::ZeroDivisor)));
    }

    #[test]
    fn one_plus_k_is_regular() {
        // (1 + k)(1 - k) = 2, so 1 + k is not a zero divisor.
        let q = Bicomplex::new(c(1.0, 0.0), c(1.0, 0.0));
        assert_eq!(q.modulus_sq(), c(2.0, 0.0));
        assert!(!q.is_zero_divisor(ZERO_DIVISOR_REL_TOL));
    }

    #[test]
    fn zero_is_not_a_zero_divisor() {
        assert!(!Bicomplex::zero().is_zero_divisor(ZERO_DIVISOR_REL_TOL));
    }

    #[test]
    fn simple_inverses() {
        let two = Bicomplex::from(2.0);
        assert_eq!(two.inverse().unwrap(), Bicomplex::from(0.5));
        let k = Bicomplex::k();
        assert_eq!(k.inverse().unwrap(), -k);
    }

    #[test]
    fn conjugation_flips_vector_part() {
        let q = Bicomplex::new(c(1.0, 2.0), c(3.0, 0.0));
        assert_eq!(q.conj(), Bicomplex::new(c(1.0, 2.0), c(-3.0, 0.0)));
        assert_eq!(q.conj().conj(), q);
        assert_eq!(Bicomplex::k().conj(), -Bicomplex::k());
    }

    fn arb_bicomplex() -> impl Strategy<Value = Bicomplex> {
        let comp = (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| c(re, im));
        (comp.clone(), comp).prop_map(|(sc, vec)| Bicomplex::new(sc, vec))
    }

    proptest! {
        #[test]
        fn mul_commutes(a in arb_bicomplex(), b in arb_bicomplex()) {
            prop_assert_eq!(a * b, b * a);
        }

        #[test]
        fn q_times_conj_is_scalar(q in arb_bicomplex()) {
            let p = q * q.conj();
            prop_assert!(p.vec.norm() <= 1e-12 * (1.0 + q.norm() * q.norm()));
            prop_assert!((p.sc - q.modulus_sq()).norm() <= 1e-12 * (1.0 + p.sc.norm()));
        }

        #[test]
        fn inverse_times_q_is_one(q in arb_bicomplex()) {
            prop_assume!(!q.is_zero() && !q.is_zero_divisor(1e-6));
            let p = q.inverse().unwrap() * q;
            prop_assert!((p - Bicomplex::one()).norm() <= 1e-12 * q.norm().max(1.0));
        }

        #[test]
        fn mul_associates(a in arb_bicomplex(), b in arb_bicomplex(), q in arb_bicomplex()) {
            let lhs = (a * b) * q;
            let rhs = a * (b * q);
            prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + lhs.norm()));
        }
    }
}
