//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `10^exp` as a rational; negative exponents give `1/10^|exp|`.
pub fn pow10(exp: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses `"3"`, `"-3/7"`, `"0.25"` or `"1.5e-9"` exactly.
///
/// Decimals are converted through powers of ten, never through binary
/// floating point.
/// Largest exponent magnitude accepted in scientific notation.
pub const MAX_EXPONENT: i64 = 10_000;

pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseNumber(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let num: BigInt = parse_int(n).ok_or_else(err)?;
        let den: BigInt = parse_int(d).ok_or_else(err)?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..].parse().map_err(|_| err())?;
            if e.abs() > MAX_EXPONENT {
                return Err(err());
            }
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, fractional) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fractional.is_empty() {
        return Err(err());
    }
    if !whole
        .bytes()
        .chain(fractional.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{whole}{fractional}");
    let mut value = Rational::from_integer(digits.parse::<BigInt>().map_err(|_| err())?);
    value *= pow10(exponent - fractional.len() as i64);
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical exact text: `"p"` for integers, `"p/q"` otherwise.
pub fn to_exact_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal expansion with `digits` fractional digits, rounded toward
/// negative infinity (`ceil = false`) or positive infinity (`ceil = true`).
pub fn to_decimal(r: &Rational, digits: usize, ceil: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let q = if ceil { scaled.ceil() } else { scaled.floor() }.to_integer();
    let negative = q.is_negative();
    let (int_part, frac_part) = q.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    format!(
        "{sign}{int_part}.{:0>width$}",
        frac_part.to_string(),
        width = digits
    )
}

/// Number of decimal digits needed so that one unit in the last place is at
/// most a tenth of `width`.
pub fn digits_for_width(width: &Rational) -> usize {
    let target = width / int(10);
    (0..200usize)
        .find(|&d| pow10(-(d as i64)) <= target)
        .unwrap_or(200)
}

pub fn to_f64(r: &Rational) -> f64 {
    to_decimal(r, 17, false).parse().unwrap_or(f64::NAN)
}

/// Exact sign of a rational quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_positive() {
            Sign::Positive
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    /// `Negative` when `negative` holds, `Positive` otherwise.
    pub fn from_parity(negative: bool) -> Sign {
        if negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match self.as_i8() * other.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// A strictly positive rational bound on interval widths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tolerance(Rational);

impl Tolerance {
    pub fn new(width: Rational) -> Result<Self> {
        if width.is_positive() {
            Ok(Tolerance(width))
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    pub fn get(&self) -> &Rational {
        &self.0
    }
}

impl Default for Tolerance {
    /// `10^-9`.
    fn default() -> Self {
        Tolerance(pow10(-9))
    }
}

impl std::str::FromStr for Tolerance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tolerance::new(parse_rational(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3/7").unwrap(), frac(-3, 7));
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_rational("-.5").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("1e-9").unwrap(), pow10(-9));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "", "abc", "1/0", "1.2.3", "--1", "1e", "3/x", ".", "1 2", "nan", "inf", "0x10",
            "1e10001",
        ] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn decimal_rounding_directions() {
        let r = frac(-2, 3);
        assert_eq!(to_decimal(&r, 3, false), "-0.667");
        assert_eq!(to_decimal(&r, 3, true), "-0.666");
        assert_eq!(to_decimal(&frac(1, 8), 2, true), "0.13");
        assert_eq!(to_decimal(&int(5), 0, false), "5");
        assert_eq!(to_exact_string(&frac(6, 4)), "3/2");
        assert_eq!(digits_for_width(&pow10(-9)), 10);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(Tolerance::new(int(0)).is_err());
        assert!("-1e-3".parse::<Tolerance>().is_err());
        assert_eq!(Tolerance::default().get(), &pow10(-9));
    }
}
