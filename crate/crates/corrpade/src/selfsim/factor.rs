use crate::complex::Complex;
use crate::error::SelfSimError;
use crate::linalg;
use crate::num;
use crate::series::PowerSeries;
use rug::ops::Pow;
use rug::Float;

/// `A x^alpha prod_i (1 + b_i x)^{c_i}` with complex-conjugate pairs allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorApproximant {
    prefactor: Float,
    alpha: usize,
    factors: Vec<(Complex, Complex)>,
}

/// Matches `M` factors to `f` through the log moments.
///
/// With `l_n` the coefficients of `ln(f / A x^alpha)`, the moments
/// `mu_n = sum c_i b_i^n` are `(-1)^{n+1} n l_n`, and `mu_0 = s - alpha`.
/// The `b_i` are the roots of the Prony polynomial, the `c_i` follow from the
/// Vandermonde system.
pub fn build_factor_approximant(
    f: &PowerSeries,
    alpha: usize,
    s: &Float,
    m: usize,
) -> Result<FactorApproximant, SelfSimError> {
    let prec = f.prec();
    let h = f.shift_down(alpha)?;
    let a = h.coeff(0).clone();
    if a.is_zero() {
        return Err(SelfSimError::ZeroPrefactor);
    }
    if m == 0 {
        return Ok(FactorApproximant { prefactor: a, alpha, factors: vec![] });
    }
    let needed = 2 * m - 1;
    if h.order() < needed {
        return Err(SelfSimError::InsufficientCoefficients { needed: needed + alpha, available: f.order() });
    }
    let u = h.scale(&Float::with_val(prec, a.recip_ref()));
    let l = u.ln()?;
    let mut mu = vec![Float::with_val(prec, s - alpha as u64)];
    for n in 1..=needed {
        let v = Float::with_val(prec, l.coeff(n) * n as u64);
        mu.push(if n % 2 == 1 { v } else { -v });
    }

    let digits = num::digits_of(prec) as f64;
    let scale = num::max_abs(prec, &mu);
    let tol = num::ten_pow_neg(prec, digits * 0.75) * &scale;
    let hankel: Vec<Vec<Float>> = (0..m).map(|i| (0..m).map(|j| mu[i + j].clone()).collect()).collect();
    let rhs: Vec<Float> = (0..m).map(|i| Float::with_val(prec, -&mu[m + i])).collect();
    let p = linalg::solve(hankel, rhs, &tol).ok_or(SelfSimError::DegenerateHankel)?;

    let mut poly: Vec<Complex> = p.into_iter().map(Complex::real).collect();
    poly.push(Complex::real(num::one(prec)));
    let roots = aberth(&poly)?;

    let vander: Vec<Vec<Complex>> = (0..m).map(|n| roots.iter().map(|b| b.powi(n as u32)).collect()).collect();
    let rhs: Vec<Complex> = mu[..m].iter().map(|v| Complex::real(v.clone())).collect();
    let c = complex_solve(vander, rhs).ok_or(SelfSimError::DegenerateHankel)?;

    let mut factors = pair_up(roots.into_iter().zip(c).collect(), digits)?;
    sort_factors(&mut factors);
    Ok(FactorApproximant { prefactor: a, alpha, factors })
}

fn sort_factors(fs: &mut [(Complex, Complex)]) {
    fs.sort_by(|(x, _), (y, _)| {
        num::cmp_abs(&x.abs(), &y.abs())
            .then_with(|| x.arg().partial_cmp(&y.arg()).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// Checks conjugate pairing and makes it exact.
fn pair_up(mut fs: Vec<(Complex, Complex)>, digits: f64) -> Result<Vec<(Complex, Complex)>, SelfSimError> {
    let prec = fs.first().map(|f| f.0.prec()).unwrap_or(64);
    let rel = num::ten_pow_neg(prec, digits / 3.0);
    let n = fs.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        let (b, c) = fs[i].clone();
        let bt = Float::with_val(prec, &rel * b.abs().max(&num::one(prec)));
        let ct = Float::with_val(prec, &rel * c.abs().max(&num::one(prec)));
        if Float::with_val(prec, b.im.abs_ref()) <= bt {
            if Float::with_val(prec, c.im.abs_ref()) > ct {
                return Err(SelfSimError::ComplexPairMismatch);
            }
            fs[i].0.im = num::zero(prec);
            fs[i].1.im = num::zero(prec);
            used[i] = true;
            continue;
        }
        let partner = (0..n).find(|&j| {
            j != i && !used[j] && fs[j].0.sub(&b.conj()).abs() <= bt && fs[j].1.sub(&c.conj()).abs() <= ct
        });
        let j = partner.ok_or(SelfSimError::ComplexPairMismatch)?;
        fs[j] = (b.conj(), c.conj());
        used[i] = true;
        used[j] = true;
    }
    Ok(fs)
}

/// All roots of the polynomial with coefficients `poly` (lowest first, monic).
fn aberth(poly: &[Complex]) -> Result<Vec<Complex>, SelfSimError> {
    let deg = poly.len() - 1;
    let prec = poly[0].prec();
    if deg == 1 {
        return Ok(vec![poly[0].neg()]);
    }
    // Cauchy bound for the starting circle
    let mut radius = num::zero(prec);
    for c in &poly[..deg] {
        radius = radius.max(&c.abs());
    }
    radius += 1;
    let two_pi = num::pi(prec) * 2u32;
    let mut z: Vec<Complex> = (0..deg)
        .map(|i| {
            let theta = Float::with_val(prec, &two_pi * i as u64) / deg as u64 + 0.4f64;
            let (s, c) = theta.sin_cos(Float::new(prec));
            Complex::new(c * &radius, s * &radius).scale(&Float::with_val(prec, 0.5f64))
        })
        .collect();
    let eps = num::ten_pow_neg(prec, num::digits_of(prec) as f64 - 5.0);
    for _ in 0..2000 {
        let mut worst = num::zero(prec);
        for i in 0..deg {
            let (pv, dv) = horner_with_derivative(poly, &z[i]);
            if pv.is_zero() {
                continue;
            }
            let w = match pv.div(&dv) {
                Some(w) => w,
                None => continue,
            };
            let mut s = Complex::zero(prec);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    if let Some(t) = Complex::real(num::one(prec)).div(&z[i].sub(zj)) {
                        s = s.add(&t);
                    }
                }
            }
            let denom = Complex::real(num::one(prec)).sub(&w.mul(&s));
            let step = w.div(&denom).unwrap_or_else(|| w.clone());
            let size = step.abs() / (z[i].abs() + 1u32);
            worst = worst.max(&size);
            z[i] = z[i].sub(&step);
        }
        if worst <= eps {
            return Ok(z);
        }
    }
    Err(SelfSimError::RootsDidNotConverge)
}

fn horner_with_derivative(poly: &[Complex], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec();
    let mut p = Complex::zero(prec);
    let mut d = Complex::zero(prec);
    for c in poly.iter().rev() {
        d = d.mul(z).add(&p);
        p = p.mul(z).add(c);
    }
    (p, d)
}

fn complex_solve(mut a: Vec<Vec<Complex>>, mut b: Vec<Complex>) -> Option<Vec<Complex>> {
    let n = b.len();
    for i in 0..n {
        let pr = (i..n).max_by(|&x, &y| num::cmp_abs(&a[x][i].abs(), &a[y][i].abs()))?;
        if a[pr][i].is_zero() {
            return None;
        }
        a.swap(i, pr);
        b.swap(i, pr);
        for r in i + 1..n {
            let f = a[r][i].div(&a[i][i])?;
            for j in i..n {
                a[r][j] = a[r][j].sub(&f.mul(&a[i][j]));
            }
            b[r] = b[r].sub(&f.mul(&b[i]));
        }
    }
    let mut x = vec![Complex::zero(b[0].prec()); n];
    for i in (0..n).rev() {
        let mut s = b[i].clone();
        for j in i + 1..n {
            s = s.sub(&a[i][j].mul(&x[j]));
        }
        x[i] = s.div(&a[i][i])?;
    }
    Some(x)
}

impl FactorApproximant {
    pub fn from_parts(prefactor: Float, alpha: usize, factors: Vec<(Complex, Complex)>) -> Self {
        FactorApproximant { prefactor, alpha, factors }
    }

    pub fn prefactor(&self) -> &Float {
        &self.prefactor
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// `(b_i, c_i)` ordered by modulus of `b_i`, then argument.
    pub fn factors(&self) -> &[(Complex, Complex)] {
        &self.factors
    }

    /// `alpha + sum c_i`.
    pub fn exponent(&self) -> Float {
        let prec = self.prefactor.prec();
        let mut e = Float::with_val(prec, self.alpha as u64);
        for (_, c) in &self.factors {
            e += &c.re;
        }
        e
    }

    fn real_part(&self, z: Complex) -> Result<Float, SelfSimError> {
        let prec = z.prec();
        let tol = num::ten_pow_neg(prec, num::digits_of(prec) as f64 / 3.0) * z.abs().max(&num::one(prec));
        if Float::with_val(prec, z.im.abs_ref()) > tol {
            return Err(SelfSimError::ComplexPairMismatch);
        }
        Ok(z.re)
    }

    /// Amplitude `A prod b_i^{c_i}` of the large-x power law.
    pub fn amplitude(&self) -> Result<Float, SelfSimError> {
        let prec = self.prefactor.prec();
        let mut acc = Complex::zero(prec);
        for (b, c) in &self.factors {
            if b.im.is_zero() && b.re <= 0 {
                return Err(SelfSimError::BranchCutHit);
            }
            acc = acc.add(&c.mul(&b.ln().ok_or(SelfSimError::BranchCutHit)?));
        }
        Ok(self.real_part(acc.exp())? * &self.prefactor)
    }

    pub fn eval(&self, x: &Float) -> Result<Float, SelfSimError> {
        let prec = self.prefactor.prec().max(x.prec());
        let one = Complex::real(num::one(prec));
        let xc = Complex::real(Float::with_val(prec, x));
        let mut acc = Complex::zero(prec);
        for (b, c) in &self.factors {
            let w = one.add(&b.mul(&xc));
            if b.im.is_zero() && w.re <= 0 {
                return Err(SelfSimError::BranchCutHit);
            }
            acc = acc.add(&c.mul(&w.ln().ok_or(SelfSimError::BranchCutHit)?));
        }
        let xa = Float::with_val(prec, x.pow(self.alpha as u32));
        Ok(self.real_part(acc.exp())? * xa * &self.prefactor)
    }

    /// Expansion in x through `order`, via the real log series.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries, SelfSimError> {
        let prec = self.prefactor.prec();
        if order < self.alpha {
            return Ok(PowerSeries::zero(prec, order));
        }
        let inner = order - self.alpha;
        let mut logc = vec![num::zero(prec)];
        for n in 1..=inner {
            let mut acc = Complex::zero(prec);
            for (b, c) in &self.factors {
                acc = acc.add(&c.mul(&b.powi(n as u32)));
            }
            let mut v = self.real_part(acc)? / n as u64;
            if n % 2 == 0 {
                v = -v;
            }
            logc.push(v);
        }
        let s = PowerSeries::new(logc)?.exp().scale(&self.prefactor);
        Ok(s.shift_up(self.alpha))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn q(n: i64, d: i64) -> Float {
        num::ratio(P, n, d)
    }

    #[test]
    fn single_factor() {
        // (1+x)^-1
        let f = PowerSeries::new(vec![q(1, 1), q(-1, 1), q(1, 1)]).unwrap();
        let fa = build_factor_approximant(&f, 0, &q(-1, 1), 1).unwrap();
        let (b, c) = &fa.factors()[0];
        assert!(num::close(&b.re, &q(1, 1), 1e-50));
        assert!(num::close(&c.re, &q(-1, 1), 1e-50));
        assert!(b.im.is_zero() && c.im.is_zero());
    }

    #[test]
    fn two_real_factors() {
        // (1+x)^{1/2} (1+2x)^{1/4}
        let x = PowerSeries::monomial(q(1, 1), 1, 6);
        let one = PowerSeries::constant(q(1, 1), 6);
        let a = (&one + &x).pow(&q(1, 2)).unwrap();
        let b = (&one + &x.scale(&q(2, 1))).pow(&q(1, 4)).unwrap();
        let f = &a * &b;
        let fa = build_factor_approximant(&f, 0, &q(3, 4), 2).unwrap();
        let fs = fa.factors();
        assert!(num::close(&fs[0].0.re, &q(1, 1), 1e-40));
        assert!(num::close(&fs[0].1.re, &q(1, 2), 1e-40));
        assert!(num::close(&fs[1].0.re, &q(2, 1), 1e-40));
        assert!(num::close(&fs[1].1.re, &q(1, 4), 1e-40));
        let back = fa.to_series(6).unwrap();
        for k in 0..=6 {
            assert!(num::close(back.coeff(k), f.coeff(k), 1e-40));
        }
    }

    #[test]
    fn conjugate_pair_is_real_on_axis() {
        let b = Complex::new(q(1, 7), q(1, 4));
        let c = Complex::new(q(-1, 2), q(5, 3));
        let fa = FactorApproximant::from_parts(q(1, 1), 0, vec![(b.conj(), c.conj()), (b, c)]);
        for x in [0.0, 0.3, 2.0, 50.0] {
            assert!(fa.eval(&Float::with_val(P, x)).is_ok());
        }
        let s = fa.to_series(5).unwrap();
        assert_eq!(*s.coeff(0), 1);
        let rebuilt = build_factor_approximant(&s, 0, &q(-1, 1), 2).unwrap();
        let (b0, c0) = &rebuilt.factors()[0];
        assert!(num::close(&b0.re, &q(1, 7), 1e-40));
        assert!(num::close(&b0.im, &q(-1, 4), 1e-40));
        assert!(num::close(&c0.im, &q(-5, 3), 1e-40));
    }

    #[test]
    fn branch_cut() {
        let fa = FactorApproximant::from_parts(
            q(1, 1),
            0,
            vec![(Complex::real(q(-1, 1)), Complex::real(q(1, 2)))],
        );
        assert_eq!(fa.eval(&q(2, 1)).unwrap_err(), SelfSimError::BranchCutHit);
        assert_eq!(fa.amplitude().unwrap_err(), SelfSimError::BranchCutHit);
    }

    #[test]
    fn amplitude_matches_far_value() {
        let b = Complex::new(q(1, 7), q(1, 4));
        let c = Complex::new(q(-1, 2), q(5, 3));
        let fa = FactorApproximant::from_parts(q(2, 1), 0, vec![(b.conj(), c.conj()), (b, c)]);
        let x = Float::with_val(P, 1e30);
        let v = fa.eval(&x).unwrap() * &x;
        assert!(num::close(&v, &fa.amplitude().unwrap(), 1e-20));
    }
}
