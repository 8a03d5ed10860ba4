//! Truncated power series over extended-precision reals.
//!
//! A series of order `N` knows `c_0 ... c_N`; every operation returns the
//! smaller order of its operands.

use crate::error::SeriesError;
use crate::num;
use rug::ops::Pow;
use rug::Float;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Float>,
    label: String,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `len - 1`.
    pub fn new(coeffs: Vec<Float>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        let prec = coeffs.iter().map(|c| c.prec()).max().unwrap_or(64);
        let coeffs = coeffs.into_iter().map(|c| Float::with_val(prec, c)).collect();
        Ok(PowerSeries { coeffs, label: "x".into() })
    }

    pub fn from_strs<S: AsRef<str>>(prec: u32, coeffs: &[S]) -> Result<Self, SeriesError> {
        let parsed = coeffs
            .iter()
            .map(|s| num::parse(prec, s.as_ref()).ok_or_else(|| SeriesError::BadCoefficient(s.as_ref().into())))
            .collect::<Result<Vec<_>, _>>()?;
        PowerSeries::new(parsed)
    }

    pub fn from_f64s(prec: u32, coeffs: &[f64]) -> Result<Self, SeriesError> {
        PowerSeries::new(coeffs.iter().map(|&c| Float::with_val(prec, c)).collect())
    }

    pub fn zero(prec: u32, order: usize) -> Self {
        PowerSeries { coeffs: vec![Float::new(prec); order + 1], label: "x".into() }
    }

    pub fn constant(c: Float, order: usize) -> Self {
        let mut s = PowerSeries::zero(c.prec(), order);
        s.coeffs[0] = c;
        s
    }

    /// `coef * x^power`, truncated at `order`.
    pub fn monomial(coef: Float, power: usize, order: usize) -> Self {
        let mut s = PowerSeries::zero(coef.prec(), order);
        if power <= order {
            s.coeffs[power] = coef;
        }
        s
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn prec(&self) -> u32 {
        self.coeffs[0].prec()
    }

    pub fn coeffs(&self) -> &[Float] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Float {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<Float> {
        self.coeffs
    }

    /// Re-rounds every coefficient to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| Float::with_val(prec, c)).collect(),
            label: self.label.clone(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries { coeffs: self.coeffs[..=order].to_vec(), label: self.label.clone() }
    }

    fn from_parts(coeffs: Vec<Float>, label: &str) -> Self {
        PowerSeries { coeffs, label: label.to_string() }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        let c = self.coeffs.iter().map(|c| Float::with_val(p, c * k)).collect();
        PowerSeries::from_parts(c, &self.label)
    }

    /// `f(lambda x)`.
    pub fn scale_variable(&self, lambda: &Float) -> Self {
        let p = self.prec();
        let mut w = num::one(p);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(Float::with_val(p, c * &w));
            w *= lambda;
        }
        PowerSeries::from_parts(out, &self.label)
    }

    pub fn eval(&self, x: &Float) -> Float {
        let p = self.prec().max(x.prec());
        let mut acc = Float::new(p);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let p = self.prec();
        if self.order() == 0 {
            return PowerSeries::zero(p, 0).with_label(self.label.clone());
        }
        let c = (1..self.coeffs.len())
            .map(|k| Float::with_val(p, &self.coeffs[k] * k as u64))
            .collect();
        PowerSeries::from_parts(c, &self.label)
    }

    /// Term-wise antiderivative with zero constant; the order grows by one.
    pub fn integrate(&self) -> Self {
        let p = self.prec();
        let mut c = vec![Float::new(p)];
        for (k, a) in self.coeffs.iter().enumerate() {
            c.push(Float::with_val(p, a / (k as u64 + 1)));
        }
        PowerSeries::from_parts(c, &self.label)
    }

    /// `x^k f(x)`; an exact multiplication, so the known order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let p = self.prec();
        let mut c = vec![Float::new(p); k];
        c.extend(self.coeffs.iter().cloned());
        PowerSeries::from_parts(c, &self.label)
    }

    /// `f(x) / x^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Ok(self.clone());
        }
        if k > self.order() {
            return Err(SeriesError::LeadingTermsNonzero { index: self.order(), power: k });
        }
        let tol = self.negligible();
        for (i, c) in self.coeffs[..k].iter().enumerate() {
            if Float::with_val(self.prec(), c.abs_ref()) > tol {
                return Err(SeriesError::LeadingTermsNonzero { index: i, power: k });
            }
        }
        Ok(PowerSeries::from_parts(self.coeffs[k..].to_vec(), &self.label))
    }

    /// Threshold below which a coefficient is treated as a rounding artefact.
    fn negligible(&self) -> Float {
        let p = self.prec();
        let scale = num::max_abs(p, &self.coeffs);
        scale * num::ten_pow_neg(p, (num::digits_of(p) / 2) as f64)
    }

    /// Rewrites an even series `sum c_{2j} x^{2j}` as a series in `z = x^2`.
    pub fn to_even_variable(&self) -> Result<Self, SeriesError> {
        let tol = self.negligible();
        for k in (1..self.coeffs.len()).step_by(2) {
            if Float::with_val(self.prec(), self.coeffs[k].abs_ref()) > tol {
                return Err(SeriesError::NotEven { index: k });
            }
        }
        let c = self.coeffs.iter().step_by(2).cloned().collect();
        Ok(PowerSeries::from_parts(c, "z=x^2"))
    }

    /// Inverse of [`to_even_variable`](Self::to_even_variable).
    pub fn from_even_variable(&self) -> Self {
        let p = self.prec();
        let mut c = Vec::with_capacity(2 * self.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                c.push(Float::new(p));
            }
            c.push(a.clone());
        }
        PowerSeries::from_parts(c, "x")
    }

    pub fn mul_series(&self, g: &PowerSeries) -> Self {
        let n = self.order().min(g.order());
        let p = self.prec().max(g.prec());
        let mut out = vec![Float::new(p); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += Float::with_val(p, a * b);
            }
        }
        PowerSeries::from_parts(out, &self.label)
    }

    /// `1/f`; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantDivisor);
        }
        let p = self.prec();
        let inv0 = Float::with_val(p, c0.recip_ref());
        let mut g: Vec<Float> = vec![inv0.clone()];
        for k in 1..self.coeffs.len() {
            let mut s = Float::new(p);
            for j in 1..=k {
                s += Float::with_val(p, &self.coeffs[j] * &g[k - j]);
            }
            g.push(-(s * &inv0));
        }
        Ok(PowerSeries::from_parts(g, &self.label))
    }

    pub fn div(&self, g: &PowerSeries) -> Result<Self, SeriesError> {
        Ok(self.mul_series(&g.recip()?))
    }

    /// `f^p` for real `p`; the constant term must be positive.
    pub fn pow(&self, p: &Float) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if *c0 <= 0 {
            return Err(SeriesError::NonpositiveConstantTerm);
        }
        let prec = self.prec();
        let inv0 = Float::with_val(prec, c0.recip_ref());
        let u: Vec<Float> = self.coeffs.iter().map(|c| Float::with_val(prec, c * &inv0)).collect();
        let mut g = vec![num::one(prec)];
        for k in 1..u.len() {
            let mut s = Float::new(prec);
            for j in 1..=k {
                if u[j].is_zero() {
                    continue;
                }
                // ((p+1) j - k) u_j g_{k-j}
                let w = Float::with_val(prec, p * j as u64) - (k - j) as u64;
                s += w * &u[j] * &g[k - j];
            }
            g.push(s / k as u64);
        }
        let lead = Float::with_val(prec, c0.pow(p));
        let c = g.into_iter().map(|x| x * &lead).collect();
        Ok(PowerSeries::from_parts(c, &self.label))
    }

    /// Integer power by repeated squaring; negative `n` needs a nonzero constant term.
    pub fn powi(&self, n: i64) -> Result<Self, SeriesError> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PowerSeries::constant(num::one(self.prec()), self.order()).with_label(self.label.clone());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_series(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_series(&b);
            }
        }
        Ok(acc)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let mut g = vec![Float::with_val(p, self.coeffs[0].exp_ref())];
        for k in 1..self.coeffs.len() {
            let mut s = Float::new(p);
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                s += Float::with_val(p, &self.coeffs[j] * &g[k - j]) * j as u64;
            }
            g.push(s / k as u64);
        }
        PowerSeries::from_parts(g, &self.label)
    }

    pub fn ln(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if *c0 <= 0 {
            return Err(SeriesError::NonpositiveConstantTerm);
        }
        let p = self.prec();
        let inv0 = Float::with_val(p, c0.recip_ref());
        let u: Vec<Float> = self.coeffs.iter().map(|c| Float::with_val(p, c * &inv0)).collect();
        let mut l = vec![Float::with_val(p, c0.ln_ref())];
        for k in 1..u.len() {
            let mut s = Float::with_val(p, &u[k] * k as u64);
            for j in 1..k {
                s -= Float::with_val(p, &l[j] * &u[k - j]) * j as u64;
            }
            l.push(s / k as u64);
        }
        Ok(PowerSeries::from_parts(l, &self.label))
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, g: &PowerSeries) -> PowerSeries {
        let n = self.order().min(g.order());
        let p = self.prec().max(g.prec());
        let c = (0..=n).map(|k| Float::with_val(p, &self.coeffs[k] + &g.coeffs[k])).collect();
        PowerSeries::from_parts(c, &self.label)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, g: &PowerSeries) -> PowerSeries {
        let n = self.order().min(g.order());
        let p = self.prec().max(g.prec());
        let c = (0..=n).map(|k| Float::with_val(p, &self.coeffs[k] - &g.coeffs[k])).collect();
        PowerSeries::from_parts(c, &self.label)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, g: &PowerSeries) -> PowerSeries {
        self.mul_series(g)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        let p = self.prec();
        let c = self.coeffs.iter().map(|c| Float::with_val(p, -c)).collect();
        PowerSeries::from_parts(c, &self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 200;

    fn s(c: &[f64]) -> PowerSeries {
        PowerSeries::from_f64s(P, c).unwrap()
    }

    fn assert_coeffs(f: &PowerSeries, want: &[f64]) {
        assert_eq!(f.order() + 1, want.len(), "order mismatch");
        for (a, b) in f.coeffs().iter().zip(want) {
            let d = Float::with_val(P, a - *b).abs();
            assert!(d < 1e-40, "{a} vs {b}");
        }
    }

    #[test]
    fn add_cancels() {
        assert_coeffs(&(&s(&[1.0, 1.0]) + &s(&[1.0, -1.0])), &[2.0, 0.0]);
        let a = PowerSeries::from_strs(P, &["1", "-1/3", "0"]).unwrap();
        let b = PowerSeries::from_strs(P, &["0", "1/3", "-1"]).unwrap();
        assert_coeffs(&(&a + &b), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn order_is_min() {
        let f = &s(&[1.0, 2.0, 3.0]) * &s(&[1.0, 1.0]);
        assert_eq!(f.order(), 1);
        assert_eq!((&s(&[1.0, 2.0, 3.0]) - &s(&[1.0])).order(), 0);
    }

    #[test]
    fn difference_of_squares() {
        assert_coeffs(&(&s(&[1.0, 1.0, 0.0]) * &s(&[1.0, -1.0, 0.0])), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn pow_binomial() {
        let f = s(&[1.0, 1.0, 0.0, 0.0]);
        assert_coeffs(&f.pow(&Float::with_val(P, 2)).unwrap(), &[1.0, 2.0, 1.0, 0.0]);
        let half = Float::with_val(P, 0.5);
        let g = s(&[1.0, 2.0, 0.0, 0.0, 0.0]).pow(&half).unwrap();
        // C(1/2, n) 2^n
        assert_coeffs(&g, &[1.0, 1.0, -0.5, 0.5, -0.625]);
        let z = s(&[3.0, 1.0, 2.0]).pow(&Float::new(P)).unwrap();
        assert_coeffs(&z, &[1.0, 0.0, 0.0]);
    }

    #[test]
    fn pow_rejects_nonpositive() {
        let e = s(&[-1.0, 1.0]).pow(&Float::with_val(P, 0.5));
        assert_eq!(e.unwrap_err(), SeriesError::NonpositiveConstantTerm);
        assert!(s(&[0.0, 1.0]).ln().is_err());
    }

    #[test]
    fn pow_reattaches_constant() {
        let g = s(&[4.0, 4.0, 0.0]).pow(&Float::with_val(P, 0.5)).unwrap();
        // 2 (1+x)^{1/2}
        assert_coeffs(&g, &[2.0, 1.0, -0.25]);
    }

    #[test]
    fn division_and_recip() {
        let f = s(&[1.0, -1.0, 0.0, 0.0]);
        assert_coeffs(&f.div(&f).unwrap(), &[1.0, 0.0, 0.0, 0.0]);
        assert_coeffs(&f.recip().unwrap(), &[1.0, 1.0, 1.0, 1.0]);
        assert_eq!(f.div(&s(&[0.0, 1.0])).unwrap_err(), SeriesError::ZeroConstantDivisor);
    }

    #[test]
    fn exp_ln_inverse() {
        let f = s(&[0.0, 1.0, 0.0, 0.0, 0.0]);
        let e = f.exp();
        let want = PowerSeries::from_strs(P, &["1", "1", "1/2", "1/6", "1/24"]).unwrap();
        for k in 0..=4 {
            assert!(num::close(e.coeff(k), want.coeff(k), 1e-50));
        }
        assert_coeffs(&e.ln().unwrap(), &[0.0, 1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn horner() {
        assert_eq!(s(&[1.0, 2.0]).eval(&Float::with_val(P, 3)), 7);
        assert_eq!(s(&[5.0, 2.0, 9.0]).eval(&Float::new(P)), 5);
    }

    #[test]
    fn shifts() {
        let f = s(&[0.0, 0.0, 1.0, 2.0]);
        let g = f.shift_down(2).unwrap();
        assert_coeffs(&g, &[1.0, 2.0]);
        assert_coeffs(&g.shift_up(1), &[0.0, 1.0, 2.0]);
        assert!(f.shift_down(3).is_err());
    }

    #[test]
    fn even_variable_round_trip() {
        let f = s(&[1.0, 0.0, -2.0, 0.0, 3.0]);
        let z = f.to_even_variable().unwrap();
        assert_coeffs(&z, &[1.0, -2.0, 3.0]);
        assert_eq!(z.from_even_variable(), f.clone().with_label("x"));
        assert!(s(&[1.0, 1.0]).to_even_variable().is_err());
    }

    #[test]
    fn scattering_integrand_square() {
        // (sin t/t^3 - cos t/t^2) = sum (-1)^k 2(k+1)/(2k+3)! t^{2k}
        let p = P;
        let mut g = Vec::new();
        let mut fact = Float::with_val(p, 6); // 3!
        for k in 0..6u64 {
            let c = Float::with_val(p, 2 * (k + 1)) / &fact;
            g.push(if k % 2 == 0 { c } else { -c });
            fact *= (2 * k + 4) * (2 * k + 5);
        }
        let gs = PowerSeries::new(g).unwrap().from_even_variable();
        let sq = (&gs * &gs).integrate();
        let want = [
            (1usize, 1.0 / 9.0),
            (3, -1.0 / 135.0),
            (5, 1.0 / 2625.0),
            (7, -4.0 / 297675.0),
            (9, 2.0 / 5893965.0),
        ];
        for (k, v) in want {
            let d = Float::with_val(p, sq.coeff(k) - v).abs();
            assert!(d < 1e-15, "x^{k}: {}", sq.coeff(k));
        }
    }

    #[test]
    fn scale_variable_geometric() {
        let f = s(&[1.0, 1.0, 1.0]).scale_variable(&Float::with_val(P, 2));
        assert_coeffs(&f, &[1.0, 2.0, 4.0]);
    }
}
