use num_complex::Complex64;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Coefficient ring for truncated series.
///
/// Besides the field operations, a scalar exposes its `η⁰` part
/// ([`Scalar::value`]) and can be multiplied by the formal parameter `η`
/// ([`Scalar::times_eta`]); for plain complex numbers `η` is identically zero.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Number of independent grades (1 for complex, 2 for dual numbers).
    const GRADES: usize;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_c64(z: Complex64) -> Self;
    /// Multiplication by a complex number.
    fn scale(self, z: Complex64) -> Self;
    /// The `η⁰` component.
    fn value(self) -> Complex64;
    /// Multiplicative inverse; the `η⁰` part must be nonzero.
    fn recip(self) -> Self;
    /// Multiplication by the formal parameter `η`.
    fn times_eta(self) -> Self;
    /// Largest modulus over all components.
    fn magnitude(self) -> f64;
    fn is_zero(&self) -> bool {
        self.magnitude() == 0.0
    }
}

impl Scalar for Complex64 {
    const GRADES: usize = 1;
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_c64(z: Complex64) -> Self {
        z
    }
    fn scale(self, z: Complex64) -> Self {
        self * z
    }
    fn value(self) -> Complex64 {
        self
    }
    fn recip(self) -> Self {
        self.inv()
    }
    fn times_eta(self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Dual number `re + η·eps` with `η² = 0`.
///
/// Carrying series coefficients in this ring propagates exact first-order
/// sensitivities to a perturbation parameter through every recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual {
    pub re: Complex64,
    pub eps: Complex64,
}

impl Dual {
    pub fn new(re: Complex64, eps: Complex64) -> Self {
        Dual { re, eps }
    }
    /// The formal parameter `η` itself.
    pub fn eta() -> Self {
        Dual::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.re + o.re, self.eps + o.eps)
    }
}
impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.re - o.re, self.eps - o.eps)
    }
}
impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.re * o.re, self.re * o.eps + self.eps * o.re)
    }
}
impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.eps)
    }
}
impl AddAssign for Dual {
    fn add_assign(&mut self, o: Dual) {
        *self = *self + o;
    }
}
impl SubAssign for Dual {
    fn sub_assign(&mut self, o: Dual) {
        *self = *self - o;
    }
}
impl MulAssign for Dual {
    fn mul_assign(&mut self, o: Dual) {
        *self = *self * o;
    }
}

impl Scalar for Dual {
    const GRADES: usize = 2;
    fn zero() -> Self {
        Dual::default()
    }
    fn one() -> Self {
        Dual::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }
    fn from_c64(z: Complex64) -> Self {
        Dual::new(z, Complex64::new(0.0, 0.0))
    }
    fn scale(self, z: Complex64) -> Self {
        Dual::new(self.re * z, self.eps * z)
    }
    fn value(self) -> Complex64 {
        self.re
    }
    fn recip(self) -> Self {
        let r = self.re.inv();
        Dual::new(r, -self.eps * r * r)
    }
    fn times_eta(self) -> Self {
        Dual::new(Complex64::new(0.0, 0.0), self.re)
    }
    fn magnitude(self) -> f64 {
        self.re.norm().max(self.eps.norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_product_rule() {
        let a = Dual::new(Complex64::new(2.0, 1.0), Complex64::new(0.5, 0.0));
        let b = Dual::new(Complex64::new(-1.0, 3.0), Complex64::new(0.0, 2.0));
        let p = a * b;
        assert_eq!(p.re, a.re * b.re);
        assert_eq!(p.eps, a.re * b.eps + a.eps * b.re);
        let q = a * a.recip();
        assert!((q.re - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(q.eps.norm() < 1e-15);
    }

    #[test]
    fn eta_is_nilpotent() {
        let e = Dual::eta();
        assert_eq!(e * e, Dual::zero());
        assert_eq!(Complex64::new(3.0, 0.0).times_eta(), Complex64::new(0.0, 0.0));
    }
}
