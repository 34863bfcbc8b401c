//! Exact rational scalars and their string encoding (`"p/q"` or an integer).

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(int(t.parse().map_err(|_| bad())?)),
    }
}

/// Comma-separated list of rationals; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}

pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn floor(r: &Rational) -> i64 {
    r.floor().to_integer()
}

pub fn ceil(r: &Rational) -> i64 {
    r.ceil().to_integer()
}

/// Largest integer `t` with `t * t <= r`, for `r >= 0`.
pub fn isqrt_floor(r: &Rational) -> i64 {
    if !r.is_positive() {
        return 0;
    }
    let mut t = (*r.numer() as f64 / *r.denom() as f64).sqrt().floor() as i64;
    while int(t * t) > *r {
        t -= 1;
    }
    while int((t + 1) * (t + 1)) <= *r {
        t += 1;
    }
    t
}

/// Integers `t` with `(t - center)^2 <= radius_sq`, as an inclusive range `(lo, hi)`.
/// Returns `None` when no integer qualifies.
pub fn integer_ball(center: &Rational, radius_sq: &Rational) -> Option<(i64, i64)> {
    if radius_sq.is_negative() {
        return None;
    }
    let inside = |t: i64| {
        let d = int(t) - center;
        d * d <= *radius_sq
    };
    let approx = (*radius_sq.numer() as f64 / *radius_sq.denom() as f64).sqrt();
    let c = *center.numer() as f64 / *center.denom() as f64;
    let mut lo = (c - approx).floor() as i64 - 1;
    let mut hi = (c + approx).ceil() as i64 + 1;
    while lo <= hi && !inside(lo) {
        lo += 1;
    }
    while hi >= lo && !inside(hi) {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> i64 {
    values
        .into_iter()
        .filter(|v| !v.is_zero())
        .fold(1i64, |acc, v| acc.lcm(v.denom()))
}

pub(crate) mod serde_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| super::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub(crate) mod serde_one {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse(&raw).map_err(serde::de::Error::custom)
    }
}
