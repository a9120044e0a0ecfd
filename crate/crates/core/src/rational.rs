//! Exact fractions used for every density, ratio and bound.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i128>;

pub fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(num as i128, den as i128)
}

pub fn half() -> Rational {
    Rational::new(1, 2)
}

/// `1 - 2^-n`.
pub fn one_minus_half_pow(n: u32) -> Rational {
    Rational::one() - Rational::new(1, 1i128 << n)
}

/// Always renders as `p/q`, also for integers, so that machine readers see a
/// single shape.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a plain integer.
pub fn from_pq(text: &str) -> Option<Rational> {
    match text.split_once('/') {
        Some((p, q)) => {
            let q: i128 = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(text.trim().parse().ok()?)),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Serializes a rational as a `p/q` string.
pub fn serialize_pq<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_pq(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for r in [
            Rational::new(7, 17),
            Rational::from_integer(2),
            Rational::new(-3, 4),
        ] {
            assert_eq!(from_pq(&to_pq(&r)), Some(r));
        }
        assert_eq!(to_pq(&Rational::from_integer(1)), "1/1");
        assert_eq!(from_pq("1/0"), None);
    }

    #[test]
    fn half_powers() {
        assert_eq!(one_minus_half_pow(0), Rational::zero());
        assert_eq!(one_minus_half_pow(3), Rational::new(7, 8));
    }
}
