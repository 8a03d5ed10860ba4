//! Extended-precision scalar helpers built on MPFR floats.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use std::cmp::Ordering;

/// Working precision in significant decimal digits when nothing else is requested.
pub const DEFAULT_DIGITS: u32 = 60;

/// Environment variable that overrides [`DEFAULT_DIGITS`].
pub const PRECISION_ENV: &str = "CORRPADE_PRECISION";

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Binary precision for a number of decimal digits, with a few guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 8
}

/// Decimal digits carried by a binary precision.
pub fn digits_of(prec: u32) -> u32 {
    (prec.saturating_sub(8) as f64 / LOG2_10).floor() as u32
}

/// Digits needed for a sequence that reaches Padé order `order`.
pub fn digits_for_order(requested: u32, order: usize) -> u32 {
    requested.max(10 + 4 * order as u32)
}

/// Default digits, honouring [`PRECISION_ENV`] when it parses.
pub fn default_digits() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .unwrap_or(DEFAULT_DIGITS)
}

pub fn zero(prec: u32) -> Float {
    Float::new(prec)
}

pub fn one(prec: u32) -> Float {
    Float::with_val(prec, 1)
}

pub fn int(prec: u32, v: i64) -> Float {
    Float::with_val(prec, v)
}

pub fn ratio(prec: u32, num: i64, den: i64) -> Float {
    Float::with_val(prec, num) / den
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Parses a decimal literal such as `"-0.0661032"` or `"2.176347e-3"`.
pub fn parse(prec: u32, text: &str) -> Option<Float> {
    let t = text.trim();
    if let Some((a, b)) = t.split_once('/') {
        let a = Float::parse(a.trim()).ok()?;
        let b = Float::parse(b.trim()).ok()?;
        let den = Float::with_val(prec, b);
        if den.is_zero() {
            return None;
        }
        return Some(Float::with_val(prec, a) / den);
    }
    Float::parse(t).ok().map(|p| Float::with_val(prec, p))
}

/// `10^(-e)` at the given precision.
pub fn ten_pow_neg(prec: u32, e: f64) -> Float {
    Float::with_val(prec, 10).pow(Float::with_val(prec, -e))
}

/// Largest absolute value in a slice (zero for an empty slice).
pub fn max_abs(prec: u32, xs: &[Float]) -> Float {
    let mut m = zero(prec);
    for x in xs {
        let a = Float::with_val(prec, x.abs_ref());
        if a > m {
            m = a;
        }
    }
    m
}

pub fn cmp_abs(a: &Float, b: &Float) -> Ordering {
    a.cmp_abs(b).unwrap_or(Ordering::Equal)
}

/// `|a/b - 1|`, with `|a|` returned when `b` is zero.
pub fn rel_diff(a: &Float, b: &Float) -> Float {
    let prec = a.prec().max(b.prec());
    if b.is_zero() {
        return Float::with_val(prec, a.abs_ref());
    }
    let d = Float::with_val(prec, a - b);
    Float::with_val(prec, d / b).abs()
}

/// Relative agreement test that also accepts two exact zeros.
pub fn close(a: &Float, b: &Float, tol: f64) -> bool {
    if a.is_zero() && b.is_zero() {
        return true;
    }
    rel_diff(a, b) <= tol
}

/// Does `x` round to `printed` at the number of significant digits `printed` carries?
///
/// `printed` is a decimal literal; trailing zeros count as written.
pub fn matches_printed(x: &Float, printed: &str) -> bool {
    let sig = significant_digits(printed);
    let target = match parse(x.prec().max(64), printed) {
        Some(t) => t,
        None => return false,
    };
    if target.is_zero() {
        return x.is_zero();
    }
    // half a unit in the last printed place
    let exp10 = decimal_exponent(&target);
    let half_ulp = Float::with_val(x.prec(), 10).pow(exp10 - sig as i32 + 1) / 2;
    let diff = Float::with_val(x.prec(), x - &target).abs();
    diff <= half_ulp * 1.000_001f64
}

/// Number of significant digits written in a decimal literal.
pub fn significant_digits(printed: &str) -> usize {
    let mantissa = printed
        .trim()
        .trim_start_matches(['+', '-'])
        .split(['e', 'E'])
        .next()
        .unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let trimmed = digits.trim_start_matches('0');
    trimmed.len().max(1)
}

/// Decimal exponent `e` with `10^e <= |x| < 10^(e+1)`.
pub fn decimal_exponent(x: &Float) -> i32 {
    let a = Float::with_val(x.prec(), x.abs_ref());
    let mut e = a.clone().log10().floor().to_f64() as i32;
    let ten = Float::with_val(x.prec(), 10);
    // guard against rounding at exact powers of ten
    if Float::with_val(x.prec(), ten.clone().pow(e + 1)) <= a {
        e += 1;
    } else if Float::with_val(x.prec(), ten.pow(e)) > a {
        e -= 1;
    }
    e
}

/// Rounds to `sig` significant digits and renders in plain decimal where the
/// magnitude allows, scientific otherwise.
pub fn format_sig(x: &Float, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    if x.is_zero() {
        return "0".into();
    }
    let sig = sig.max(1);
    let raw = x.to_string_radix(10, Some(sig));
    let (mant, exp) = match raw.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i32>().unwrap_or(0)),
        None => (raw.clone(), 0),
    };
    let negative = mant.starts_with('-');
    let body = mant.trim_start_matches('-');
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits = format!("{int_part}{frac_part}");
    // value = 0.digits * 10^(point)
    let point = int_part.len() as i32 + exp;
    let plain = if (-6..=21).contains(&point) {
        let mut s = String::new();
        if point <= 0 {
            s.push_str("0.");
            s.extend(std::iter::repeat_n('0', (-point) as usize));
            s.push_str(&digits);
        } else if point as usize >= digits.len() {
            s.push_str(&digits);
            s.extend(std::iter::repeat_n('0', point as usize - digits.len()));
        } else {
            s.push_str(&digits[..point as usize]);
            s.push('.');
            s.push_str(&digits[point as usize..]);
        }
        if s.contains('.') {
            let t = s.trim_end_matches('0').trim_end_matches('.');
            t.to_string()
        } else {
            s
        }
    } else {
        let lead = &digits[..1];
        let rest = digits[1..].trim_end_matches('0');
        let e = point - 1;
        if rest.is_empty() {
            format!("{lead}e{e}")
        } else {
            format!("{lead}.{rest}e{e}")
        }
    };
    if negative {
        format!("-{plain}")
    } else {
        plain
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_round_trip() {
        for d in [30u32, 60, 200] {
            assert!(digits_of(bits_for_digits(d)) >= d);
        }
    }

    #[test]
    fn order_raises_precision() {
        assert_eq!(digits_for_order(60, 5), 60);
        assert_eq!(digits_for_order(60, 100), 410);
    }

    #[test]
    fn parse_forms() {
        let p = 128;
        assert_eq!(parse(p, "1/4").unwrap(), 0.25);
        assert_eq!(parse(p, "-2.5e-1").unwrap(), -0.25);
        assert!(parse(p, "abc").is_none());
        assert!(parse(p, "1/0").is_none());
    }

    #[test]
    fn printed_matching() {
        let p = 128;
        let x = parse(p, "0.7591472").unwrap();
        assert!(matches_printed(&x, "0.759147"));
        assert!(!matches_printed(&x, "0.759148"));
        let y = parse(p, "-0.061592").unwrap();
        assert!(matches_printed(&y, "-0.0616"));
        assert_eq!(significant_digits("0.00326452"), 6);
        assert_eq!(significant_digits("942803.4"), 7);
    }

    #[test]
    fn formatting() {
        let p = 128;
        assert_eq!(format_sig(&parse(p, "0.66534612").unwrap(), 6), "0.665346");
        assert_eq!(format_sig(&parse(p, "1.5").unwrap(), 6), "1.5");
        assert_eq!(format_sig(&parse(p, "-1234.4").unwrap(), 4), "-1234");
        assert_eq!(format_sig(&parse(p, "1e-9").unwrap(), 3), "1e-9");
        assert_eq!(format_sig(&parse(p, "0.000123").unwrap(), 3), "0.000123");
    }
}
