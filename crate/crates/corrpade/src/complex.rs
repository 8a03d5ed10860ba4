//! Minimal complex arithmetic over MPFR floats, used by the factor-approximant builder.

use rug::Float;

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex::new(Float::new(prec), Float::new(prec))
    }

    pub fn real(re: Float) -> Self {
        let prec = re.prec();
        Complex::new(re, Float::new(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn add(&self, o: &Complex) -> Self {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re + &o.re),
            Float::with_val(p, &self.im + &o.im),
        )
    }

    pub fn sub(&self, o: &Complex) -> Self {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re - &o.re),
            Float::with_val(p, &self.im - &o.im),
        )
    }

    pub fn neg(&self) -> Self {
        let p = self.prec();
        Complex::new(Float::with_val(p, -&self.re), Float::with_val(p, -&self.im))
    }

    pub fn mul(&self, o: &Complex) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Complex::new(re, im)
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        Complex::new(Float::with_val(p, &self.re * k), Float::with_val(p, &self.im * k))
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Returns `None` on division by zero.
    pub fn div(&self, o: &Complex) -> Option<Self> {
        let d = o.norm_sqr();
        if d.is_zero() {
            return None;
        }
        let n = self.mul(&o.conj());
        Some(Complex::new(n.re / &d, n.im / &d))
    }

    /// Principal logarithm; `None` at zero.
    pub fn ln(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Complex::new(self.abs().ln(), self.arg()))
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let r = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Complex::new(Float::with_val(p, &r * c), r * s)
    }

    /// Principal power `self^e`; `None` for `0^e`.
    pub fn pow(&self, e: &Complex) -> Option<Self> {
        Some(e.mul(&self.ln()?).exp())
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Complex::real(Float::with_val(self.prec(), 1));
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(Float::with_val(128, re), Float::with_val(128, im))
    }

    #[test]
    fn field_ops() {
        let a = c(1.0, 2.0);
        let b = c(3.0, -1.0);
        assert_eq!(a.mul(&b), c(5.0, 5.0));
        let q = a.mul(&b).div(&b).unwrap();
        assert!(Float::with_val(128, &q.re - 1.0).abs() < 1e-30);
        assert!(Float::with_val(128, &q.im - 2.0).abs() < 1e-30);
        assert!(a.div(&Complex::zero(128)).is_none());
    }

    #[test]
    fn exp_ln_inverse() {
        let a = c(-0.5, 1.7);
        let back = a.ln().unwrap().exp();
        assert!(back.sub(&a).abs() < 1e-30);
    }

    #[test]
    fn powers_agree() {
        let a = c(0.3, -0.8);
        let p = a.pow(&c(3.0, 0.0)).unwrap();
        assert!(p.sub(&a.powi(3)).abs() < 1e-30);
    }
}
