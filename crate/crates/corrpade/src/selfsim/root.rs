use super::VarMap;
use crate::error::SelfSimError;
use crate::num;
use crate::series::PowerSeries;
use rug::ops::Pow;
use rug::Float;

/// `A x^alpha ((...((1 + A1 z)^{n1} + A2 z^2)^{n2} + ...) + Ak z^k)^{nk}`
/// with `n_j = (j+1)/j`, `n_k = (s - alpha)/(k m)` and `z = x^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootApproximant {
    prefactor: Float,
    alpha: usize,
    s: Float,
    params: Vec<Float>,
    var_map: VarMap,
}

/// Determines `A_1 ... A_k` one at a time from the series `f`.
///
/// `f` is the full series in x; its first `alpha` coefficients must vanish.
pub fn build_iterated_root(
    f: &PowerSeries,
    alpha: usize,
    s: &Float,
    k: usize,
    var_map: VarMap,
) -> Result<RootApproximant, SelfSimError> {
    let prec = f.prec();
    let h = f.shift_down(alpha)?;
    let a = h.coeff(0).clone();
    if a.is_zero() {
        return Err(SelfSimError::ZeroPrefactor);
    }
    let u = var_map.to_mapped(&h.scale(&Float::with_val(prec, a.recip_ref())))?;
    if u.order() < k {
        return Err(SelfSimError::InsufficientCoefficients {
            needed: alpha + var_map.x_order(k),
            available: f.order(),
        });
    }
    let sigma = outer_total(s, alpha, var_map, prec);
    if k > 0 && sigma.is_zero() {
        return Err(SelfSimError::VanishingLinearCoefficient { step: 1 });
    }
    let exps = exponents(k, &sigma);
    let mut params = vec![num::zero(prec); k];
    for j in 1..=k {
        let x = PowerSeries::monomial(num::one(prec), 1, j);
        let t = nest(&params, &exps, &x);
        // d(coefficient j)/dA_j = n_j ... n_k = sigma / j
        let delta = Float::with_val(prec, u.coeff(j) - t.coeff(j));
        params[j - 1] = delta * j as u64 / &sigma;
    }
    Ok(RootApproximant { prefactor: a, alpha, s: s.clone(), params, var_map })
}

/// `(s - alpha)` measured in the mapped variable.
fn outer_total(s: &Float, alpha: usize, var_map: VarMap, prec: u32) -> Float {
    Float::with_val(prec, s - alpha as u64) / var_map.factor()
}

fn exponents(k: usize, sigma: &Float) -> Vec<Float> {
    let prec = sigma.prec();
    (1..=k)
        .map(|j| {
            if j < k {
                num::ratio(prec, j as i64 + 1, j as i64)
            } else {
                Float::with_val(prec, sigma / k as u64)
            }
        })
        .collect()
}

/// Expands the nest with `z` replaced by the series `x` (zero constant term).
fn nest(params: &[Float], exps: &[Float], x: &PowerSeries) -> PowerSeries {
    let prec = x.prec();
    let order = x.order();
    let mut v = PowerSeries::constant(num::one(prec), order);
    let mut xp = v.clone();
    for (a, e) in params.iter().zip(exps) {
        xp = xp.mul_series(x);
        v = &v + &xp.scale(a);
        v = v.pow(e).expect("nest levels start at 1");
    }
    v
}

impl RootApproximant {
    /// Assembles a root from known parameters.
    pub fn from_parts(prefactor: Float, alpha: usize, s: Float, params: Vec<Float>, var_map: VarMap) -> Self {
        RootApproximant { prefactor, alpha, s, params, var_map }
    }

    pub fn prefactor(&self) -> &Float {
        &self.prefactor
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn s(&self) -> &Float {
        &self.s
    }

    pub fn k(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[Float] {
        &self.params
    }

    pub fn var_map(&self) -> VarMap {
        self.var_map
    }

    pub fn exponents(&self) -> Vec<Float> {
        let prec = self.prefactor.prec();
        exponents(self.k(), &outer_total(&self.s, self.alpha, self.var_map, prec))
    }

    /// `B_k` of `R_k(x) ~ B_k x^s`.
    pub fn amplitude(&self) -> Result<Float, SelfSimError> {
        let prec = self.prefactor.prec();
        let k = self.k();
        if k == 0 {
            return Ok(self.prefactor.clone());
        }
        let sigma = outer_total(&self.s, self.alpha, self.var_map, prec);
        let mut v = self.params[0].clone();
        for j in 2..=k {
            if v.is_sign_negative() && !v.is_zero() {
                return Err(SelfSimError::NegativeBase);
            }
            let e = num::ratio(prec, j as i64, j as i64 - 1);
            v = v.pow(&e) + &self.params[j - 1];
        }
        let e = Float::with_val(prec, &sigma / k as u64);
        if v < 0 || (v.is_zero() && e <= 0) {
            return Err(SelfSimError::NegativeBase);
        }
        Ok(Float::with_val(prec, v.pow(&e)) * &self.prefactor)
    }

    /// Expansion in x through `order`.
    pub fn to_series(&self, order: usize) -> PowerSeries {
        let prec = self.prefactor.prec();
        if order < self.alpha {
            return PowerSeries::zero(prec, order);
        }
        let inner = order - self.alpha;
        let zorder = self.var_map.mapped_order(inner);
        let z = PowerSeries::monomial(num::one(prec), 1, zorder);
        let mut h = nest(&self.params, &self.exponents(), &z).scale(&self.prefactor);
        if self.var_map == VarMap::Square {
            h = h.from_even_variable();
        }
        let mut c = h.into_coeffs();
        c.resize(inner + 1, num::zero(prec));
        PowerSeries::new(c).expect("nonempty").shift_up(self.alpha)
    }

    /// Expansion with `x` replaced by the series `x_of` (identity map, no
    /// `x^alpha` prefactor, zero constant term in `x_of`).
    pub fn to_series_in(&self, x_of: &PowerSeries) -> PowerSeries {
        nest(&self.params, &self.exponents(), x_of).scale(&self.prefactor)
    }

    pub fn eval(&self, x: &Float) -> Result<Float, SelfSimError> {
        let prec = self.prefactor.prec().max(x.prec());
        let z = match self.var_map {
            VarMap::Identity => Float::with_val(prec, x),
            VarMap::Square => Float::with_val(prec, x.square_ref()),
        };
        let exps = self.exponents();
        let mut v = num::one(prec);
        let mut zp = num::one(prec);
        for (a, e) in self.params.iter().zip(&exps) {
            zp *= &z;
            v += Float::with_val(prec, a * &zp);
            if v < 0 {
                return Err(SelfSimError::NegativeBase);
            }
            v = v.pow(e);
        }
        let xa = Float::with_val(prec, x.pow(self.alpha as u32));
        Ok(v * xa * &self.prefactor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn q(n: i64, d: i64) -> Float {
        num::ratio(P, n, d)
    }

    fn close(a: &Float, b: &Float) -> bool {
        num::close(a, b, 1e-40)
    }

    #[test]
    fn debye_huckel_k2() {
        // 1 - x/3 + x^2/12 - x^3/60
        let f = PowerSeries::new(vec![q(1, 1), q(-1, 3), q(1, 12), q(-1, 60)]).unwrap();
        let r = build_iterated_root(&f, 0, &q(-1, 1), 2, VarMap::Identity).unwrap();
        assert!(close(&r.params()[0], &q(1, 3)));
        assert!(close(&r.params()[1], &q(1, 18)));
        // sqrt(6) amplitude
        let amp = r.amplitude().unwrap();
        assert!(close(&amp, &Float::with_val(P, 6).sqrt()));
    }

    #[test]
    fn quartic_k2() {
        let f = PowerSeries::new(vec![q(1, 2), q(3, 4), q(-21, 8)]).unwrap();
        let r = build_iterated_root(&f, 0, &q(1, 3), 2, VarMap::Identity).unwrap();
        assert!(close(&r.params()[0], &q(9, 2)));
        assert!(close(&r.params()[1], &q(-18, 1)));
        let want = Float::with_val(P, q(9, 4).pow(q(1, 6))) / 2;
        assert!(close(&r.amplitude().unwrap(), &want));
        let back = r.to_series(2);
        for k in 0..=2 {
            assert!(close(back.coeff(k), f.coeff(k)));
        }
    }

    #[test]
    fn k_zero_and_k_one() {
        let f = PowerSeries::new(vec![q(1, 1), q(1, 1)]).unwrap();
        let r = build_iterated_root(&f, 0, &q(1, 1), 1, VarMap::Identity).unwrap();
        assert!(close(&r.amplitude().unwrap(), &q(1, 1)));
        let r0 = build_iterated_root(&f, 0, &q(1, 1), 0, VarMap::Identity).unwrap();
        assert_eq!(r0.to_series(3), PowerSeries::new(vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]).unwrap());
    }

    #[test]
    fn vanishing_exponent() {
        let f = PowerSeries::new(vec![q(1, 1), q(1, 1)]).unwrap();
        let e = build_iterated_root(&f, 0, &q(0, 1), 1, VarMap::Identity).unwrap_err();
        assert_eq!(e, SelfSimError::VanishingLinearCoefficient { step: 1 });
    }

    #[test]
    fn insufficient() {
        let f = PowerSeries::new(vec![q(1, 1), q(1, 1)]).unwrap();
        assert!(matches!(
            build_iterated_root(&f, 0, &q(1, 1), 2, VarMap::Identity),
            Err(SelfSimError::InsufficientCoefficients { .. })
        ));
    }

    #[test]
    fn negative_base() {
        let r = RootApproximant::from_parts(q(1, 1), 0, q(1, 1), vec![q(-1, 1)], VarMap::Identity);
        assert_eq!(r.amplitude().unwrap_err(), SelfSimError::NegativeBase);
        assert_eq!(r.eval(&q(2, 1)).unwrap_err(), SelfSimError::NegativeBase);
    }

    #[test]
    fn even_map_with_prefactor() {
        // x/9 (1 + 2x^2/15)^(-1/2)
        let f = PowerSeries::new(vec![q(0, 1), q(1, 9), q(0, 1), q(-1, 135)]).unwrap();
        let r = build_iterated_root(&f, 1, &q(0, 1), 1, VarMap::Square).unwrap();
        assert!(close(&r.params()[0], &q(2, 15)));
        let s = r.to_series(5);
        assert!(close(s.coeff(3), &q(-1, 135)));
        assert!(s.coeff(4).is_zero());
        let x = Float::with_val(P, 0.5);
        let direct = Float::with_val(P, q(2, 15) * Float::with_val(P, x.square_ref()) + 1u32).pow(q(-1, 2)) * &x / 9u32;
        assert!(close(&r.eval(&x).unwrap(), &direct));
    }

    #[test]
    fn amplitude_from_far_evaluation() {
        let f = PowerSeries::new(vec![q(1, 2), q(3, 4), q(-21, 8)]).unwrap();
        let r = build_iterated_root(&f, 0, &q(1, 3), 2, VarMap::Identity).unwrap();
        let x = Float::with_val(P, 1e8);
        let v = r.eval(&x).unwrap() / Float::with_val(P, x.pow(q(1, 3)));
        assert!(num::close(&v, &r.amplitude().unwrap(), 1e-6));
    }
}
