//! Padé approximants fitted by accuracy-through-order, with rank-revealing
//! reduction for degenerate blocks and limits at infinity.

use crate::error::PadeError;
use crate::linalg;
use crate::num;
use crate::series::PowerSeries;
use rug::Float;
use serde::Serialize;

/// A real number or a signed infinity.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtReal {
    Finite(Float),
    PosInf,
    NegInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Float> {
        match self {
            ExtReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }
}

/// How a fit came out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitStatus {
    /// Requested degrees, accuracy-through-order holds.
    Full,
    /// A lower-degree approximant reproduces the whole block.
    Reduced,
    /// The numerator block vanishes and so does the rest of the series.
    ZeroNumerator,
    /// The linear conditions fix a unique rational, but it shares a factor
    /// `x^l` between numerator and denominator and so matches the series only
    /// to a lower order.
    Deficient,
    /// No approximant of these degrees matches the series through order n + m.
    Defective,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PadeApproximant {
    num: Vec<Float>,
    den: Vec<Float>,
    n: usize,
    m: usize,
    status: FitStatus,
}

/// Fits `P_{n/m}` to `f`.
///
/// Singular Toeplitz blocks are reduced by their numerical rank; the result is
/// flagged invalid when the reduced approximant no longer reproduces `f`
/// through order `n + m`.
pub fn pade_fit(f: &PowerSeries, n: usize, m: usize) -> Result<PadeApproximant, PadeError> {
    let needed = n + m;
    if f.order() < needed {
        return Err(PadeError::InsufficientCoefficients { n, m, needed, available: f.order() });
    }
    let prec = f.prec();
    let digits = num::digits_of(prec) as f64;
    let shift = balancing_shift(&f.coeffs()[..=needed], digits);
    let d: Vec<Float> = f.coeffs()[..=needed]
        .iter()
        .enumerate()
        .map(|(k, c)| Float::with_val(prec, c << (shift * k as i32)))
        .collect();
    let scale = num::max_abs(prec, &d);
    if scale.is_zero() {
        return Ok(PadeApproximant::zero(prec, n, m, FitStatus::ZeroNumerator));
    }
    let tol = num::ten_pow_neg(prec, digits / 2.0) * &scale;
    let check = num::ten_pow_neg(prec, digits / 3.0) * &scale;

    if num::max_abs(prec, &d[..=n]) <= tol {
        let status = if num::max_abs(prec, &d) <= check {
            FitStatus::ZeroNumerator
        } else {
            FitStatus::Defective
        };
        return Ok(PadeApproximant::zero(prec, n, m, status));
    }

    let (mut nn, mut mm) = (n, m);
    let q = loop {
        if mm == 0 {
            break vec![num::one(prec)];
        }
        let c = toeplitz_block(&d, nn, mm, prec);
        let (rank, null) = linalg::rank_and_null(c, mm + 1, &tol);
        if rank == mm {
            break null.expect("full-rank block has a null vector");
        }
        let drop = mm - rank;
        nn = nn.saturating_sub(drop);
        mm = rank;
    };
    let mut p: Vec<Float> = (0..=nn)
        .map(|k| {
            let mut s = num::zero(prec);
            for (j, qj) in q.iter().enumerate().take(k.min(mm) + 1) {
                s += Float::with_val(prec, qj * &d[k - j]);
            }
            s
        })
        .collect();
    let mut q = q;

    // common factors x^l shared by numerator and denominator
    let qmax = num::max_abs(prec, &q);
    let qtol = num::ten_pow_neg(prec, digits / 2.0) * &qmax;
    let lead = q.iter().take_while(|c| Float::with_val(prec, c.abs_ref()) <= qtol).count();
    if lead > 0 {
        q.drain(..lead);
        if lead >= p.len() {
            p = vec![num::zero(prec)];
        } else {
            p.drain(..lead);
        }
    }
    let q0 = q[0].clone();
    for c in p.iter_mut().chain(q.iter_mut()) {
        *c /= &q0;
    }
    trim_trailing(&mut p, digits, prec);
    trim_trailing(&mut q, digits, prec);

    let reduced = nn != n || mm != m || lead > 0;
    let consistent = reexpansion_error(&p, &q, &d) <= check;
    let status = match (consistent, reduced) {
        (false, _) if lead > 0 && nn == n && mm == m => FitStatus::Deficient,
        (false, _) => FitStatus::Defective,
        (true, false) => FitStatus::Full,
        (true, true) => FitStatus::Reduced,
    };

    let unscale = |v: &mut Vec<Float>, len: usize| {
        for (k, c) in v.iter_mut().enumerate() {
            *c >>= shift * k as i32;
        }
        v.resize(len, num::zero(prec));
    };
    unscale(&mut p, n + 1);
    unscale(&mut q, m + 1);
    Ok(PadeApproximant { num: p, den: q, n, m, status })
}

/// Power-of-two variable scaling that flattens the coefficient growth.
/// Coefficients at rounding level are left out of the fit.
fn balancing_shift(c: &[Float], digits: f64) -> i32 {
    let prec = c[0].prec();
    let floor = num::ten_pow_neg(prec, digits / 2.0) * num::max_abs(prec, c);
    let pts: Vec<(f64, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| Float::with_val(prec, v.abs_ref()) > floor)
        .filter_map(|(k, v)| v.get_exp().map(|e| (k as f64, e as f64)))
        .collect();
    if pts.len() < 2 {
        return 0;
    }
    let nf = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return 0;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    -(sxy / sxx).round() as i32
}

/// Rows `n+1 .. n+m` of the linearized conditions, `C[i][j] = d_{n+1+i-j}`.
fn toeplitz_block(d: &[Float], n: usize, m: usize, prec: u32) -> Vec<Vec<Float>> {
    (0..m)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let idx = (n + 1 + i) as isize - j as isize;
                    if idx < 0 {
                        num::zero(prec)
                    } else {
                        d[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect()
}

fn trim_trailing(v: &mut Vec<Float>, digits: f64, prec: u32) {
    let vmax = num::max_abs(prec, v);
    let tol = num::ten_pow_neg(prec, digits / 2.0) * vmax;
    while v.len() > 1 && Float::with_val(prec, v[v.len() - 1].abs_ref()) <= tol {
        v.pop();
    }
}

/// Largest deviation of the Taylor coefficients of `p/q` from `d`.
fn reexpansion_error(p: &[Float], q: &[Float], d: &[Float]) -> Float {
    let prec = d[0].prec();
    let order = d.len() - 1;
    let pad = |v: &[Float]| {
        let mut c: Vec<Float> = v.iter().take(order + 1).cloned().collect();
        c.resize(order + 1, num::zero(prec));
        PowerSeries::new(c).expect("nonempty")
    };
    let ratio = pad(p).div(&pad(q)).expect("q0 = 1");
    let diffs: Vec<Float> = ratio
        .coeffs()
        .iter()
        .zip(d)
        .map(|(a, b)| Float::with_val(prec, a - b))
        .collect();
    num::max_abs(prec, &diffs)
}

impl PadeApproximant {
    fn zero(prec: u32, n: usize, m: usize, status: FitStatus) -> Self {
        let mut den = vec![num::zero(prec); m + 1];
        den[0] = num::one(prec);
        PadeApproximant { num: vec![num::zero(prec); n + 1], den, n, m, status }
    }

    pub fn num(&self) -> &[Float] {
        &self.num
    }

    pub fn den(&self) -> &[Float] {
        &self.den
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn status(&self) -> FitStatus {
        self.status
    }

    /// Accuracy-through-order holds.
    pub fn is_valid(&self) -> bool {
        !matches!(self.status, FitStatus::Defective | FitStatus::Deficient)
    }

    /// Valid, or deficient with a uniquely determined rational.
    pub fn is_usable(&self) -> bool {
        self.status != FitStatus::Defective
    }

    /// Degrees after trimming; `None` for an identically zero numerator.
    pub fn effective_degrees(&self) -> (Option<usize>, usize) {
        let last = |v: &[Float]| v.iter().rposition(|c| !c.is_zero());
        (last(&self.num), last(&self.den).unwrap_or(0))
    }

    pub fn eval(&self, x: &Float) -> Result<Float, PadeError> {
        if !self.is_usable() {
            return Err(PadeError::InvalidFit);
        }
        let horner = |v: &[Float]| {
            let mut acc = Float::new(v[0].prec().max(x.prec()));
            for c in v.iter().rev() {
                acc *= x;
                acc += c;
            }
            acc
        };
        let q = horner(&self.den);
        if q.is_zero() {
            return Err(PadeError::PoleAtEvaluationPoint);
        }
        Ok(horner(&self.num) / q)
    }

    /// Limit of `P(x)` as `x -> +inf`.
    pub fn limit(&self) -> ExtReal {
        self.limit_times_power(0)
    }

    /// Limit of `x^shift P(x)` as `x -> +inf`.
    pub fn limit_times_power(&self, shift: i64) -> ExtReal {
        let prec = self.den[0].prec();
        let (dp, dq) = self.effective_degrees();
        let dp = match dp {
            Some(d) => d,
            None => return ExtReal::Finite(num::zero(prec)),
        };
        let lead = Float::with_val(prec, &self.num[dp] / &self.den[dq]);
        let e = dp as i64 - dq as i64 + shift;
        match e.cmp(&0) {
            std::cmp::Ordering::Less => ExtReal::Finite(num::zero(prec)),
            std::cmp::Ordering::Equal => ExtReal::Finite(lead),
            std::cmp::Ordering::Greater => {
                if lead.is_sign_negative() {
                    ExtReal::NegInf
                } else {
                    ExtReal::PosInf
                }
            }
        }
    }

    /// Taylor expansion of the approximant.
    pub fn to_series(&self, order: usize) -> PowerSeries {
        let prec = self.den[0].prec();
        let pad = |v: &[Float]| {
            let mut c: Vec<Float> = v.iter().take(order + 1).cloned().collect();
            c.resize(order + 1, num::zero(prec));
            PowerSeries::new(c).expect("nonempty")
        };
        pad(&self.num).div(&pad(&self.den)).expect("q0 = 1")
    }
}
