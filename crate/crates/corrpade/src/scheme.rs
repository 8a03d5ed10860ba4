//! Standard and corrected amplitude sequences, error tables, and the two
//! equation-of-state constructions built on the corrected scheme.

use crate::corpus::{self, CorrectedForm, Problem, StandardForm};
use crate::error::{CorpusError, SchemeError};
use crate::num;
use crate::pade::{pade_fit, ExtReal, FitStatus, PadeApproximant};
use crate::selfsim::{build_iterated_root, ControlFunction, RootApproximant, VarMap};
use crate::series::PowerSeries;
use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchemeTag {
    Standard,
    Corrected,
}

impl SchemeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SchemeTag::Standard => "standard",
            SchemeTag::Corrected => "corrected",
        }
    }
}

/// One order of an amplitude sequence, in reported units.
#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub n: usize,
    /// `None` when the underlying fit is defective.
    pub amplitude: Option<ExtReal>,
    /// Finite amplitude from a usable fit.
    pub valid: bool,
    pub status: Option<FitStatus>,
    pub percent_error: Option<Float>,
}

impl Entry {
    fn invalid(n: usize, status: Option<FitStatus>) -> Self {
        Entry { n, amplitude: None, valid: false, status, percent_error: None }
    }

    fn from_value(n: usize, value: ExtReal, status: Option<FitStatus>) -> Self {
        let valid = value.is_finite() && value.finite().map(|v| !v.is_nan()).unwrap_or(false);
        Entry { n, amplitude: Some(value), valid, status, percent_error: None }
    }

    pub fn value(&self) -> Option<&Float> {
        if self.valid {
            self.amplitude.as_ref().and_then(|a| a.finite())
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeSequence {
    pub problem_id: String,
    pub scheme: SchemeTag,
    pub entries: Vec<Entry>,
}

impl AmplitudeSequence {
    pub fn get(&self, n: usize) -> Option<&Entry> {
        self.entries.iter().find(|e| e.n == n)
    }

    pub fn value(&self, n: usize) -> Option<&Float> {
        self.get(n).and_then(|e| e.value())
    }

    /// Highest-order valid entry.
    pub fn last_valid(&self) -> Option<&Entry> {
        self.entries.iter().rev().find(|e| e.valid)
    }

    pub fn valid_values(&self) -> Vec<&Float> {
        self.entries.iter().filter_map(|e| e.value()).collect()
    }
}

/// Fills `percent_error = 100 (A_n / exact - 1)` for every finite amplitude.
pub fn error_table(seq: &mut AmplitudeSequence, exact: &Float) {
    for e in &mut seq.entries {
        e.percent_error = e.value().map(|a| percent_error(a, exact));
    }
}

pub fn percent_error(a: &Float, exact: &Float) -> Float {
    let prec = a.prec().max(exact.prec());
    (Float::with_val(prec, a / exact) - 1u32) * 100u32
}

/// `(s - alpha)` measured in the mapped variable.
fn mapped_exponent(p: &Problem, prec: u32) -> Float {
    Float::with_val(prec, p.s_value(prec) - p.alpha as u64) / p.var_map.factor()
}

/// Mapped-variable coefficient budget, or `None` for unbounded problems.
fn mapped_budget(p: &Problem) -> Option<usize> {
    p.max_supported_order
        .map(|m| if m < p.alpha { 0 } else { p.var_map.mapped_order(m - p.alpha) })
}

fn direct_shift(p: &Problem, prec: u32) -> Result<usize, SchemeError> {
    let sigma = mapped_exponent(p, prec);
    if !sigma.is_integer() || sigma.is_sign_negative() && !sigma.is_zero() {
        return Err(SchemeError::Unsupported(format!(
            "direct standard form needs a non-negative integer exponent, {} has {}",
            p.id, p.s
        )));
    }
    Ok(sigma.to_f64() as usize)
}

/// Largest standard order the coefficients support.
pub fn max_standard_order(p: &Problem) -> Option<usize> {
    let budget = mapped_budget(p)?;
    Some(match p.standard {
        StandardForm::RootTransform => budget.div_ceil(2),
        StandardForm::Direct => {
            let shift = direct_shift(p, 64).unwrap_or(0);
            budget.saturating_sub(shift) / 2
        }
    })
}

/// Largest corrected order the coefficients support.
pub fn max_corrected_order(p: &Problem) -> Option<usize> {
    let budget = mapped_budget(p)?;
    Some(match p.corrected {
        CorrectedForm::PadeOnControl => budget / 2,
        CorrectedForm::RootLadder => budget,
    })
}

fn check_order(requested: usize, max: Option<usize>) -> Result<(), SchemeError> {
    match max {
        Some(m) if requested > m => Err(SchemeError::InsufficientCoefficients { requested, max: m }),
        _ => Ok(()),
    }
}

/// The problem's series with `x^alpha` removed, in the mapped variable, through mapped order `order`.
fn mapped_series(p: &Problem, order: usize, prec: u32) -> Result<PowerSeries, SchemeError> {
    let f = p.generate(p.alpha + p.var_map.x_order(order), prec)?;
    let h = f.shift_down(p.alpha)?;
    Ok(p.var_map.to_mapped(&h)?)
}

fn scaled(value: ExtReal, scale: &Float) -> ExtReal {
    match value {
        ExtReal::Finite(v) => ExtReal::Finite(v * scale),
        inf if scale.is_sign_negative() => match inf {
            ExtReal::PosInf => ExtReal::NegInf,
            _ => ExtReal::PosInf,
        },
        inf => inf,
    }
}

/// `a L^{-sigma}` with `L` the limit of `x T`.
fn root_transform_amplitude(a: &Float, l: &ExtReal, sigma: &Float) -> ExtReal {
    let prec = a.prec();
    let neg = Float::with_val(prec, -sigma);
    let sign_inf = |pos: bool| if pos == a.is_sign_positive() { ExtReal::PosInf } else { ExtReal::NegInf };
    match l {
        ExtReal::Finite(v) if v.is_zero() => {
            if sigma.is_sign_positive() {
                sign_inf(true)
            } else {
                ExtReal::Finite(num::zero(prec))
            }
        }
        ExtReal::Finite(v) => ExtReal::Finite(Float::with_val(prec, v.pow(&neg)) * a),
        ExtReal::PosInf => {
            if sigma.is_sign_positive() {
                ExtReal::Finite(num::zero(prec))
            } else {
                sign_inf(true)
            }
        }
        ExtReal::NegInf => ExtReal::Finite(Float::with_val(prec, f64::NAN)),
    }
}

/// Standard Padé amplitudes for orders `1..=n_max`.
///
/// With `RootTransform`, order `n` fits `T_{(n-1)/n}` to `T = (h/a)^{-1/sigma}`
/// and returns `a L^{-sigma}`, `L = lim x T_{(n-1)/n}`. With `Direct`, order `n`
/// fits `h_{(n+sigma)/n}` and returns the ratio of leading coefficients.
pub fn standard_amplitudes(p: &Problem, n_max: usize, prec: u32) -> Result<AmplitudeSequence, SchemeError> {
    check_order(n_max, max_standard_order(p))?;
    let scale = p.scale_value(prec);
    let sigma = mapped_exponent(p, prec);
    let entries: Vec<Entry> = match p.standard {
        StandardForm::RootTransform => {
            if sigma.is_zero() {
                return Err(SchemeError::ZeroExponent);
            }
            let h = mapped_series(p, (2 * n_max).saturating_sub(1), prec)?;
            let a = h.coeff(0).clone();
            if a.is_zero() {
                return Err(SchemeError::Series(crate::error::SeriesError::ZeroConstantDivisor));
            }
            let u = h.scale(&Float::with_val(prec, a.recip_ref()));
            let e = -Float::with_val(prec, sigma.recip_ref());
            let t = u.pow(&e)?;
            (1..=n_max)
                .into_par_iter()
                .map(|n| {
                    let fit = pade_fit(&t.truncate(2 * n - 1), n - 1, n)?;
                    if !fit.is_usable() {
                        return Ok(Entry::invalid(n, Some(fit.status())));
                    }
                    let l = fit.limit_times_power(1);
                    let amp = root_transform_amplitude(&a, &l, &sigma);
                    Ok(Entry::from_value(n, scaled(amp, &scale), Some(fit.status())))
                })
                .collect::<Result<_, SchemeError>>()?
        }
        StandardForm::Direct => {
            let shift = direct_shift(p, prec)?;
            let h = mapped_series(p, 2 * n_max + shift, prec)?;
            (1..=n_max)
                .into_par_iter()
                .map(|n| {
                    let fit = pade_fit(&h.truncate(2 * n + shift), n + shift, n)?;
                    if !fit.is_usable() {
                        return Ok(Entry::invalid(n, Some(fit.status())));
                    }
                    let amp = fit.limit_times_power(-(shift as i64));
                    Ok(Entry::from_value(n, scaled(amp, &scale), Some(fit.status())))
                })
                .collect::<Result<_, SchemeError>>()?
        }
    };
    Ok(finish(p, SchemeTag::Standard, entries, prec))
}

/// Corrected amplitudes `A_n = A_0 lim G_{n/n}` for `n = 0..=n_max`, with
/// `G = f/K` and `A_0` the amplitude of `K`.
pub fn corrected_amplitudes(
    p: &Problem,
    k: &ControlFunction,
    n_max: usize,
    prec: u32,
) -> Result<AmplitudeSequence, SchemeError> {
    check_order(n_max, mapped_budget(p).map(|b| b / 2))?;
    let scale = p.scale_value(prec);
    let s = p.s_value(prec);
    let ke = k.exponent();
    let tol = num::ten_pow_neg(prec, num::digits_of(prec) as f64 / 3.0);
    if Float::with_val(prec, &ke - &s).abs() > tol {
        return Err(SchemeError::AmplitudeMismatch { control: ke.to_string(), problem: p.s.clone() });
    }
    let a0 = Float::with_val(prec, k.amplitude()?);
    let x_order = p.alpha + p.var_map.x_order(2 * n_max);
    let f = p.generate(x_order, prec)?;
    let kser = k.to_series(x_order)?.with_prec(prec);
    let g = f.shift_down(p.alpha)?.div(&kser.shift_down(p.alpha)?)?;
    let g = p.var_map.to_mapped(&g)?;
    let entries = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let fit = pade_fit(&g.truncate(2 * n), n, n)?;
            if !fit.is_usable() {
                return Ok(Entry::invalid(n, Some(fit.status())));
            }
            let amp = scaled(fit.limit(), &a0);
            Ok(Entry::from_value(n, scaled(amp, &scale), Some(fit.status())))
        })
        .collect::<Result<_, SchemeError>>()?;
    Ok(finish(p, SchemeTag::Corrected, entries, prec))
}

fn finish(p: &Problem, scheme: SchemeTag, entries: Vec<Entry>, prec: u32) -> AmplitudeSequence {
    let mut seq = AmplitudeSequence { problem_id: p.id.clone(), scheme, entries };
    if let Some(exact) = p.exact_amplitude(prec) {
        error_table(&mut seq, &exact);
    }
    seq
}

/// Amplitudes of the root approximants `R_1 ... R_{n_max}` built from the series.
pub fn root_ladder(p: &Problem, n_max: usize, prec: u32) -> Result<AmplitudeSequence, SchemeError> {
    check_order(n_max, mapped_budget(p))?;
    let s = p.s_value(prec);
    let scale = p.scale_value(prec);
    let f = p.generate(p.alpha + p.var_map.x_order(n_max), prec)?;
    let entries = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let r = build_iterated_root(&f, p.alpha, &s, n, p.var_map)?;
            Ok(match r.amplitude() {
                Ok(b) => Entry::from_value(n, ExtReal::Finite(b * &scale), None),
                Err(_) => Entry::invalid(n, None),
            })
        })
        .collect::<Result<_, SchemeError>>()?;
    Ok(finish(p, SchemeTag::Corrected, entries, prec))
}

/// The corrected sequence in the form the problem declares, with its own control.
pub fn corrected_for(p: &Problem, n_max: usize, prec: u32) -> Result<AmplitudeSequence, SchemeError> {
    match p.corrected {
        CorrectedForm::RootLadder => root_ladder(p, n_max, prec),
        CorrectedForm::PadeOnControl => corrected_amplitudes(p, &p.control(prec)?, n_max, prec),
    }
}

/// Equation of state `Z*(y) = K(x(y)) P_{m/m}(y)` built from the first
/// `n_virial` virial coefficients.
#[derive(Clone, Debug)]
pub struct HardSphereEos {
    pub control: RootApproximant,
    pub pade: PadeApproximant,
    /// `Z*(y)` re-expanded in `y`; coefficient `i - 1` is the predicted `B_i`.
    pub expansion: PowerSeries,
    pub n_virial: usize,
}

impl HardSphereEos {
    pub fn predicted(&self, i: usize) -> &Float {
        self.expansion.coeff(i - 1)
    }

    /// Largest relative error against the tabulated `B_i` for `i` in `range`.
    pub fn max_relative_error(&self, range: std::ops::RangeInclusive<usize>) -> Float {
        let prec = self.expansion.prec();
        let mut worst = num::zero(prec);
        for i in range {
            let want = num::parse(prec, corpus::printed::HARD_SPHERE_VIRIALS[i - 1]).expect("literal");
            worst = worst.max(&num::rel_diff(self.predicted(i), &want));
        }
        worst
    }
}

pub fn hard_sphere_eos(n_virial: usize, prec: u32) -> Result<HardSphereEos, SchemeError> {
    let table = corpus::printed::HARD_SPHERE_VIRIALS.len();
    if n_virial < 3 || n_virial > table {
        return Err(SchemeError::InsufficientCoefficients { requested: n_virial, max: table });
    }
    let p = corpus::find("hard_sphere")?;
    let control = match p.control(prec)? {
        ControlFunction::Root(r) => r,
        _ => return Err(SchemeError::Unsupported("hard-sphere control must be a root approximant".into())),
    };
    if control.var_map() != VarMap::Identity {
        return Err(SchemeError::Unsupported("hard-sphere control must use the identity map".into()));
    }
    let out = table - 1;
    let k_of_y = control.to_series_in(&corpus::packing_to_inverse_variable(prec, out));
    let z = PowerSeries::from_strs(prec, &corpus::printed::HARD_SPHERE_VIRIALS[..n_virial])
        .map_err(CorpusError::from)?;
    let g = z.div(&k_of_y.truncate(n_virial - 1))?;
    let m = (n_virial - 1) / 2;
    let pade = pade_fit(&g, m, m)?;
    if !pade.is_valid() {
        return Err(SchemeError::Pade(crate::error::PadeError::InvalidFit));
    }
    let expansion = k_of_y.mul_series(&pade.to_series(out));
    Ok(HardSphereEos { control, pade, expansion, n_virial })
}

#[derive(Clone, Debug)]
pub struct MembranePressure {
    pub control: RootApproximant,
    /// `p(inf)` with the `P_{4/4}` correction.
    pub pressure: Float,
    /// `p(inf)` from the control function alone.
    pub uncorrected: Float,
}

/// Limit of `p(x) = (pi^2 / 8 x^2) K(x) P_{4/4}(x)`.
pub fn membrane_pressure(prec: u32) -> Result<MembranePressure, SchemeError> {
    let p = corpus::find("membrane")?;
    let k = p.control(prec)?;
    let control = match &k {
        ControlFunction::Root(r) => r.clone(),
        _ => return Err(SchemeError::Unsupported("membrane control must be a root approximant".into())),
    };
    let seq = corrected_amplitudes(&p, &k, 4, prec)?;
    let value = |n: usize| {
        seq.value(n).cloned().ok_or(SchemeError::Pade(crate::error::PadeError::InvalidFit))
    };
    Ok(MembranePressure { control, pressure: value(4)?, uncorrected: value(0)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 256;

    fn q(n: i64, d: i64) -> Float {
        num::ratio(P, n, d)
    }

    #[test]
    fn percent_error_definition() {
        let e = percent_error(&q(101, 100), &q(1, 1));
        assert!(num::close(&e, &q(1, 1), 1e-50));
        assert!(percent_error(&q(1, 3), &q(1, 3)).is_zero());
    }

    #[test]
    fn exact_control_gives_exact_amplitude() {
        let p = corpus::find("debye_huckel").unwrap();
        let k = p.exact_control(12, P).unwrap();
        let seq = corrected_amplitudes(&p, &k, 6, P).unwrap();
        let exact = p.exact_amplitude(P).unwrap();
        for e in &seq.entries {
            assert!(num::close(e.value().unwrap(), &exact, 1e-30), "n = {}", e.n);
            assert!(e.percent_error.as_ref().unwrap().clone().abs() < 1e-28);
        }
    }

    #[test]
    fn corrected_zero_order_is_control_amplitude() {
        let p = corpus::find("mittag_leffler").unwrap();
        let k = p.control(P).unwrap();
        let seq = corrected_amplitudes(&p, &k, 0, P).unwrap();
        assert_eq!(seq.entries.len(), 1);
        assert!(num::close(seq.value(0).unwrap(), &k.amplitude().unwrap(), 1e-40));
    }

    #[test]
    fn exponent_mismatch() {
        let p = corpus::find("debye_huckel").unwrap();
        let other = corpus::find("generating_function").unwrap().control(P).unwrap();
        assert!(matches!(
            corrected_amplitudes(&p, &other, 2, P),
            Err(SchemeError::AmplitudeMismatch { .. })
        ));
    }

    #[test]
    fn zero_exponent_without_direct_form() {
        let mut p = corpus::find("connected_moments").unwrap();
        p.standard = StandardForm::RootTransform;
        assert_eq!(standard_amplitudes(&p, 2, P).unwrap_err(), SchemeError::ZeroExponent);
    }

    #[test]
    fn order_limits() {
        let p = corpus::find("schwinger").unwrap();
        assert_eq!(max_standard_order(&p), Some(4));
        assert_eq!(max_corrected_order(&p), Some(3));
        assert!(matches!(
            standard_amplitudes(&p, 5, P),
            Err(SchemeError::InsufficientCoefficients { requested: 5, max: 4 })
        ));
        let b = corpus::find("bose_o2").unwrap();
        assert_eq!(max_standard_order(&b), Some(2));
        assert_eq!(max_standard_order(&corpus::find("membrane").unwrap()), None);
    }

    #[test]
    fn standard_on_geometric_root() {
        // f = (1 + x)^{-1/2}: T = 1 + x exactly, so every order gives 1
        let mut p = corpus::from_json(r#"{"id": "g", "coefficients": ["1"], "s": "-1/2", "polynomial": true}"#)
            .unwrap()
            .remove(0);
        let f = PowerSeries::from_strs(P, &["1", "1"]).unwrap().pow(&q(-1, 2)).unwrap();
        p.coefficients = corpus::Coefficients::Listed {
            values: f.coeffs().iter().map(|c| c.to_string_radix(10, None)).collect(),
            polynomial: false,
        };
        p.max_supported_order = Some(1);
        let seq = standard_amplitudes(&p, 1, P).unwrap();
        assert!(num::close(seq.value(1).unwrap(), &q(1, 1), 1e-40));
    }

    #[test]
    fn deterministic_across_runs() {
        let p = corpus::find("correlation").unwrap();
        let a = standard_amplitudes(&p, 8, P).unwrap();
        let b = standard_amplitudes(&p, 8, P).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hard_sphere_reproduces_input_virials() {
        let eos = hard_sphere_eos(11, num::bits_for_digits(60)).unwrap();
        for i in 1..=11 {
            let want = num::parse(P, corpus::printed::HARD_SPHERE_VIRIALS[i - 1]).unwrap();
            assert!(num::close(eos.predicted(i), &want, 1e-30), "B_{i}");
        }
    }
}
