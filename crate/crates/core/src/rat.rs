//! Exact rational scalars and the tiny grammar used for weights on the
//! command line: a rational is `p` or `p/q` with optional leading `-`,
//! a weight list is comma-separated rationals like `5/2,3/2,1/2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rat = num_rational::BigRational;

pub fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// k/2 — half-integers come up constantly in spin weights.
pub fn half(k: i64) -> Rat {
    frac(k, 2)
}

pub fn is_int(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` is an odd multiple of 1/2.
pub fn is_half_odd(x: &Rat) -> bool {
    *x.denom() == BigInt::from(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    BadLiteral(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("empty weight list")]
    EmptyList,
}

pub fn parse_rational(s: &str) -> Result<Rat, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError::Empty);
    }
    let bad = || ParseError::BadLiteral(s.to_string());
    match t.split_once('/') {
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((a, b)) => {
            let n: BigInt = a.trim().parse().map_err(|_| bad())?;
            let d: BigInt = b.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

pub fn parse_weight_list(s: &str) -> Result<Vec<Rat>, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError::EmptyList);
    }
    t.split(',').map(parse_rational).collect()
}

/// Canonical text form: `p` for integers, `p/q` otherwise (q > 0, reduced).
pub fn format_rational(x: &Rat) -> String {
    if is_int(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_weight_list(w: &[Rat]) -> String {
    w.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Sort key helper: exact comparison never allocates surprises, but a
/// convenience signum is handy in dominance checks.
pub fn signum(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        for s in ["0", "7", "-3", "3/2", "-5/2", "119/20"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn reduction_and_sign_normalization() {
        assert_eq!(parse_rational("4/8").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("3/-2").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&parse_rational("-6/-4").unwrap()), "3/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_weight_list("").is_err());
        assert!(parse_weight_list("1,,2").is_err());
    }

    #[test]
    fn weight_lists() {
        let w = parse_weight_list("5/2, 3/2 ,1/2").unwrap();
        assert_eq!(w, vec![half(5), half(3), half(1)]);
        assert_eq!(format_weight_list(&w), "5/2,3/2,1/2");
    }

    #[test]
    fn parity_predicates() {
        assert!(is_int(&rat(3)) && !is_half_odd(&rat(3)));
        assert!(is_half_odd(&half(7)) && !is_int(&half(7)));
        assert!(!is_half_odd(&frac(1, 3)));
    }
}
