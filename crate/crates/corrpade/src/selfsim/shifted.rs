use crate::error::SelfSimError;
use crate::num;
use crate::series::PowerSeries;
use rug::ops::Pow;
use rug::Float;

/// `K(t) = v2 + v3 (v4 t + 1)^{-c}`; tends to `v2` for `c > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedRoot {
    pub v2: Float,
    pub v3: Float,
    pub v4: Float,
    pub c: Float,
}

impl ShiftedRoot {
    pub fn amplitude(&self) -> Float {
        self.v2.clone()
    }

    pub fn eval(&self, t: &Float) -> Result<Float, SelfSimError> {
        let prec = self.v2.prec().max(t.prec());
        let base = Float::with_val(prec, &self.v4 * t) + 1u32;
        if base <= 0 {
            return Err(SelfSimError::BranchCutHit);
        }
        let neg_c = Float::with_val(prec, -&self.c);
        Ok(Float::with_val(prec, base.pow(&neg_c)) * &self.v3 + &self.v2)
    }

    pub fn to_series(&self, order: usize) -> PowerSeries {
        let prec = self.v2.prec();
        let base = &PowerSeries::constant(num::one(prec), order) + &PowerSeries::monomial(self.v4.clone(), 1, order);
        let neg_c = Float::with_val(prec, -&self.c);
        let tail = base.pow(&neg_c).expect("constant term is 1").scale(&self.v3);
        &tail + &PowerSeries::constant(self.v2.clone(), order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn fixture() -> ShiftedRoot {
        let q = |s: &str| num::parse(P, s).unwrap();
        ShiftedRoot {
            v2: q("403171240048919/85626857995920"),
            v3: q("36337990380139/85626857995920"),
            v4: q("2331886111/1340069829"),
            c: q("9/10"),
        }
    }

    #[test]
    fn endpoints() {
        let k = fixture();
        let at0 = k.eval(&Float::new(P)).unwrap();
        assert!(num::close(&at0, &Float::with_val(P, &k.v2 + &k.v3), 1e-60));
        assert!(num::close(&k.amplitude(), &num::parse(P, "4.70845").unwrap(), 1e-5));
        let far = k.eval(&Float::with_val(P, 1e40)).unwrap();
        assert!(num::close(&far, &k.v2, 1e-30));
    }

    #[test]
    fn first_order_coefficient() {
        let k = fixture();
        let s = k.to_series(3);
        let want = Float::with_val(P, -&k.v3) * &k.c * &k.v4;
        assert!(num::close(s.coeff(1), &want, 1e-60));
    }
}
