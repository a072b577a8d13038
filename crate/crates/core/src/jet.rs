//! Second-order forward-mode jets over `N` real variables.
//!
//! A [`Jet`] carries a complex value together with its exact first and
//! second partial derivatives at the evaluation point. All arithmetic
//! propagates derivatives through product, quotient and chain rules; no
//! finite differences are involved anywhere.

use num_complex::Complex64;

/// Value + gradient + full (symmetric) Hessian at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<const N: usize> {
    pub value: Complex64,
    pub grad: [Complex64; N],
    pub hess: [[Complex64; N]; N],
}

pub type Jet1 = Jet<1>;
pub type Jet2 = Jet<2>;
pub type Jet3 = Jet<3>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl<const N: usize> Jet<N> {
    pub fn constant(value: Complex64) -> Self {
        Jet {
            value,
            grad: [ZERO; N],
            hess: [[ZERO; N]; N],
        }
    }

    pub fn zero() -> Self {
        Self::constant(ZERO)
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// Seed for the `axis`-th independent variable.
    pub fn variable(axis: usize, value: f64) -> Self {
        let mut jet = Self::constant(Complex64::new(value, 0.0));
        jet.grad[axis] = Complex64::new(1.0, 0.0);
        jet
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = *self;
        out.value *= c;
        for i in 0..N {
            out.grad[i] *= c;
            for j in 0..N {
                out.hess[i][j] *= c;
            }
        }
        out
    }

    /// Trace of the Hessian.
    pub fn laplacian(&self) -> Complex64 {
        (0..N).map(|i| self.hess[i][i]).sum()
    }

    /// Composition with a univariate function given by `(f, f', f'')`
    /// evaluated at `self.value`.
    pub fn chain(&self, f: Complex64, df: Complex64, ddf: Complex64) -> Self {
        let mut out = Self::constant(f);
        for i in 0..N {
            out.grad[i] = df * self.grad[i];
        }
        for i in 0..N {
            for j in 0..N {
                out.hess[i][j] = ddf * self.grad[i] * self.grad[j] + df * self.hess[i][j];
            }
        }
        out
    }

    pub fn exp(&self) -> Self {
        let e = self.value.exp();
        self.chain(e, e, e)
    }

    pub fn sin(&self) -> Self {
        let (s, c) = (self.value.sin(), self.value.cos());
        self.chain(s, c, -s)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = (self.value.sin(), self.value.cos());
        self.chain(c, -s, -c)
    }

    pub fn sinh(&self) -> Self {
        let (s, c) = (self.value.sinh(), self.value.cosh());
        self.chain(s, c, s)
    }

    pub fn cosh(&self) -> Self {
        let (s, c) = (self.value.sinh(), self.value.cosh());
        self.chain(c, s, c)
    }

    /// Principal-branch square root; `None` at the branch point 0.
    pub fn sqrt(&self) -> Option<Self> {
        if self.value == ZERO {
            return None;
        }
        let r = self.value.sqrt();
        let dr = Complex64::new(0.5, 0.0) / r;
        let ddr = -dr / (Complex64::new(2.0, 0.0) * self.value);
        Some(self.chain(r, dr, ddr))
    }

    /// Principal-branch natural logarithm; `None` at 0.
    pub fn ln(&self) -> Option<Self> {
        if self.value == ZERO {
            return None;
        }
        let inv = self.value.inv();
        Some(self.chain(self.value.ln(), inv, -inv * inv))
    }

    /// Multiplicative inverse; `None` at 0.
    pub fn recip(&self) -> Option<Self> {
        if self.value == ZERO {
            return None;
        }
        let inv = self.value.inv();
        let inv2 = inv * inv;
        Some(self.chain(inv, -inv2, Complex64::new(2.0, 0.0) * inv2 * inv))
    }

    /// Integer power. `None` only for negative exponents at 0.
    pub fn powi(&self, n: i32) -> Option<Self> {
        match n {
            0 => Some(Self::one()),
            1 => Some(*self),
            _ => {
                if n < 0 && self.value == ZERO {
                    return None;
                }
                let nf = Complex64::new(f64::from(n), 0.0);
                let f = self.value.powi(n);
                let df = nf * self.value.powi(n - 1);
                // n >= 2 keeps the exponent nonnegative, so powi(0) covers n == 2.
                let ddf = nf * Complex64::new(f64::from(n - 1), 0.0) * self.value.powi(n - 2);
                Some(self.chain(f, df, ddf))
            }
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        Some(*self * rhs.recip()?)
    }
}

/// Two-argument arctangent `atan2(u, v)` for jets with (numerically) real
/// values. Derivatives use d(theta) = (v du - u dv) / (u^2 + v^2).
pub fn atan2<const N: usize>(u: &Jet<N>, v: &Jet<N>) -> Option<Jet<N>> {
    let real_enough =
        |z: Complex64| z.im.abs() <= 1e-12 * (1.0 + z.re.abs());
    if !real_enough(u.value) || !real_enough(v.value) {
        return None;
    }
    let d2 = u.value * u.value + v.value * v.value;
    if d2 == ZERO {
        return None;
    }
    let tu = v.value / d2;
    let tv = -u.value / d2;
    let d4 = d2 * d2;
    let two = Complex64::new(2.0, 0.0);
    let tuu = -two * u.value * v.value / d4;
    let tuv = (u.value * u.value - v.value * v.value) / d4;
    let tvv = two * u.value * v.value / d4;

    let mut out = Jet::constant(Complex64::new(u.value.re.atan2(v.value.re), 0.0));
    for i in 0..N {
        out.grad[i] = tu * u.grad[i] + tv * v.grad[i];
    }
    for i in 0..N {
        for j in 0..N {
            out.hess[i][j] = tuu * u.grad[i] * u.grad[j]
                + tuv * (u.grad[i] * v.grad[j] + u.grad[j] * v.grad[i])
                + tvv * v.grad[i] * v.grad[j]
                + tu * u.hess[i][j]
                + tv * v.hess[i][j];
        }
    }
    Some(out)
}

impl<const N: usize> std::ops::Add for Jet<N> {
    type Output = Jet<N>;
    fn add(self, rhs: Jet<N>) -> Jet<N> {
        let mut out = self;
        out.value += rhs.value;
        for i in 0..N {
            out.grad[i] += rhs.grad[i];
            for j in 0..N {
                out.hess[i][j] += rhs.hess[i][j];
            }
        }
        out
    }
}

impl<const N: usize> std::ops::Sub for Jet<N> {
    type Output = Jet<N>;
    fn sub(self, rhs: Jet<N>) -> Jet<N> {
        let mut out = self;
        out.value -= rhs.value;
        for i in 0..N {
            out.grad[i] -= rhs.grad[i];
            for j in 0..N {
                out.hess[i][j] -= rhs.hess[i][j];
            }
        }
        out
    }
}

impl<const N: usize> std::ops::Neg for Jet<N> {
    type Output = Jet<N>;
    fn neg(self) -> Jet<N> {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl<const N: usize> std::ops::Mul for Jet<N> {
    type Output = Jet<N>;
    fn mul(self, rhs: Jet<N>) -> Jet<N> {
        let mut out = Jet::constant(self.value * rhs.value);
        for i in 0..N {
            out.grad[i] = self.grad[i] * rhs.value + self.value * rhs.grad[i];
        }
        for i in 0..N {
            for j in 0..N {
                out.hess[i][j] = self.hess[i][j] * rhs.value
                    + self.grad[i] * rhs.grad[j]
                    + self.grad[j] * rhs.grad[i]
                    + self.value * rhs.hess[i][j];
            }
        }
        out
    }
}

impl Jet2 {
    pub fn dx(&self) -> Complex64 {
        self.grad[0]
    }
    pub fn dy(&self) -> Complex64 {
        self.grad[1]
    }
    pub fn dxx(&self) -> Complex64 {
        self.hess[0][0]
    }
    pub fn dxy(&self) -> Complex64 {
        self.hess[0][1]
    }
    pub fn dyy(&self) -> Complex64 {
        self.hess[1][1]
    }
}
