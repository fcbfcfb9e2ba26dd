//! Exact arithmetic substrate: arbitrary-precision integers and rationals.
//!
//! Every quantity in this crate is an [`Int`] or a [`Rat`]; there is no
//! floating point anywhere. Rationals are kept in lowest terms with a
//! positive denominator (the representation `num_rational` maintains), and
//! serialize as `"p/q"` strings (`"p"` when the denominator is 1).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for small integer literals.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for small rational literals; panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn from_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// Parses `"p/q"` or `"p"` (optionally signed). Whitespace is trimmed.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Malformed("empty rational".into()));
    }
    let (ns, ds) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: Int = ns
        .parse()
        .map_err(|e| Error::Malformed(format!("bad numerator {ns:?}: {e}")))?;
    let d: Int = ds
        .parse()
        .map_err(|e| Error::Malformed(format!("bad denominator {ds:?}: {e}")))?;
    if d.is_zero() {
        return Err(Error::Malformed(format!("zero denominator in {t:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Canonical `"p/q"` rendering (just `"p"` for integers).
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn format_rat_vec(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

pub fn parse_rat_vec(v: &[String]) -> Result<Vec<Rat>> {
    v.iter().map(|s| parse_rat(s)).collect()
}

/// Decimal rendering with `digits` places, computed by exact long division
/// (truncated toward zero). Used only for display; never fed back into
/// computation.
pub fn decimal_string(r: &Rat, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let num = r.numer().abs();
    let den = r.denom().clone();
    let (q, rem) = num.div_rem(&den);
    if digits == 0 || rem.is_zero() {
        return format!("{sign}{q}");
    }
    let scale = Int::from(10u8).pow(digits as u32);
    let frac = (rem * &scale) / &den;
    let mut frac_str = frac.to_string();
    while frac_str.len() < digits {
        frac_str.insert(0, '0');
    }
    let frac_str = frac_str.trim_end_matches('0');
    if frac_str.is_empty() {
        format!("{sign}{q}")
    } else {
        format!("{sign}{q}.{frac_str}")
    }
}

/// Rational or positive infinity. Infinity shows up as the alpha invariant of
/// a numerically trivial divisor and as the per-ray gamma of a width-zero ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtRat {
    Finite(Rat),
    Infinity,
}

impl ExtRat {
    pub fn finite(r: Rat) -> Self {
        ExtRat::Finite(r)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinity => None,
        }
    }

    pub fn min(self, other: ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Infinity, b) => b,
            (a, ExtRat::Infinity) => a,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a.min(b)),
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (ExtRat::Infinity, ExtRat::Infinity) => Equal,
            (ExtRat::Infinity, _) => Greater,
            (_, ExtRat::Infinity) => Less,
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::fmt::Display for ExtRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::Infinity => write!(f, "inf"),
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

/// Parses `"inf"` or a rational.
pub fn parse_ext(s: &str) -> Result<ExtRat> {
    if s.trim() == "inf" {
        Ok(ExtRat::Infinity)
    } else {
        parse_rat(s).map(ExtRat::Finite)
    }
}

/// Floor of a rational as an integer.
pub fn floor_rat(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn ceil_rat(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Fractional part `r - floor(r)`, in `[0, 1)`.
pub fn fract(r: &Rat) -> Rat {
    r - Rat::from_integer(floor_rat(r))
}

/// Least common multiple of the denominators of a list of rationals.
pub fn denominator_lcm(xs: &[Rat]) -> Int {
    let mut l = Int::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    l
}

/// Checked narrowing for parameters that index into recursive sequences.
pub fn to_u32(x: &Int) -> Result<u32> {
    use num_traits::ToPrimitive;
    x.to_u32()
        .ok_or_else(|| Error::OutOfRange(format!("{x} does not fit in a 32-bit parameter")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // reduction and denominator sign are canonicalized on parse
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("-14/-6").unwrap()), "7/3");
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn decimal_rendering_is_exact_long_division() {
        assert_eq!(decimal_string(&rat(1, 6), 6), "0.166666");
        assert_eq!(decimal_string(&rat(-1, 2), 6), "-0.5");
        assert_eq!(decimal_string(&rat(42, 1), 6), "42");
        assert_eq!(decimal_string(&rat(1, 21), 4), "0.0476");
    }

    #[test]
    fn ext_rat_ordering_puts_infinity_on_top() {
        let a = ExtRat::Finite(rat(1, 2));
        assert!(a < ExtRat::Infinity);
        assert_eq!(
            ExtRat::Infinity.min(ExtRat::Finite(rat(1, 3))),
            ExtRat::Finite(rat(1, 3))
        );
        assert_eq!(ExtRat::Infinity.to_string(), "inf");
    }

    #[test]
    fn fract_and_lcm() {
        assert_eq!(fract(&rat(7, 3)), rat(1, 3));
        assert_eq!(fract(&rat(-1, 3)), rat(2, 3));
        assert_eq!(fract(&rat(2, 1)), rat(0, 1));
        assert_eq!(denominator_lcm(&[rat(1, 2), rat(3, 4), rat(1, 6)]), int(12));
    }
}
