//! Exact scalar types.
//!
//! Everything in this crate is generic over [`Scalar`], an exact ordered field
//! with hashable values. The memo tables key on words, so floating point types
//! are deliberately not admissible. [`crate::Rat`] (arbitrary precision
//! rationals) is the type every suite runs on; `Ratio<i128>` is accepted too and
//! is handy for small hand-checked computations.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed};

/// An exact field element.
pub trait Scalar:
    Clone + Eq + Ord + Hash + Debug + Display + Send + Sync + 'static + Num + Signed + FromPrimitive
{
    /// `self / rhs`, or `None` when `rhs` is zero.
    fn checked_quot(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }

    /// The rational `numer / denom`.
    ///
    /// # Panics
    /// When `denom == 0`.
    fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_i64(numer).expect("i64 fits") / Self::from_i64(denom).expect("i64 fits")
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 fits")
    }

    /// Lowest-terms `"p/q"` rendering with `q > 0`, used by every serialized form.
    fn to_fraction_string(&self) -> String;

    /// Inverse of [`Scalar::to_fraction_string`]; also accepts a bare integer.
    fn parse_fraction(s: &str) -> Option<Self>;

    /// Canonical byte encoding, stable across runs; feeds the digest moulds.
    fn digest_bytes(&self) -> Vec<u8> {
        self.to_fraction_string().into_bytes()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + Send
        + Sync
        + 'static,
    Ratio<T>: FromPrimitive,
{
    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_fraction(s: &str) -> Option<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = T::from_str(n).ok()?;
        let d = T::from_str(d).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Ratio::new(n, d))
    }
}

/// Exact binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binom<S: Scalar>(n: i64, k: i64) -> S {
    if k < 0 || n < 0 || k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    // BigInt -> S through the decimal form keeps this generic over exact types
    S::parse_fraction(&acc.to_string()).expect("binomial coefficient overflows scalar type")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::Zero;

    fn pascal(n: usize, k: usize) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row.get(k).copied().unwrap_or(0)
    }

    #[test]
    fn binom_small_and_out_of_range() {
        assert_eq!(binom::<Rat>(5, 2), Rat::from_int(10));
        assert_eq!(binom::<Rat>(3, 5), Rat::zero());
        assert_eq!(binom::<Rat>(3, -1), Rat::zero());
        assert_eq!(binom::<Rat>(0, 0), Rat::one());
    }

    #[test]
    fn binom_matches_pascal_recurrence() {
        assert_eq!(pascal(30, 15), 155_117_520);
        assert_eq!(binom::<Rat>(30, 15), Rat::from_int(155_117_520));
        for n in 0..40usize {
            for k in 0..=n {
                let expect = Rat::parse_fraction(&pascal(n, k).to_string()).unwrap();
                assert_eq!(binom::<Rat>(n as i64, k as i64), expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn fraction_strings_are_lowest_terms() {
        let r = Rat::ratio(6, -4);
        assert_eq!(r.to_fraction_string(), "-3/2");
        assert_eq!(Rat::parse_fraction("-3/2"), Some(r));
        assert_eq!(Rat::parse_fraction("7"), Some(Rat::from_int(7)));
        assert_eq!(Rat::parse_fraction("1/0"), None);
        assert_eq!(Rat::from_int(3).to_fraction_string(), "3/1");
    }

    #[test]
    fn checked_quot_reports_zero_divisor() {
        assert_eq!(Rat::one().checked_quot(&Rat::zero()), None);
        assert_eq!(
            Rat::from_int(3).checked_quot(&Rat::from_int(6)),
            Some(Rat::ratio(1, 2))
        );
        let small: Ratio<i128> = Scalar::ratio(2, 4);
        assert_eq!(small.to_fraction_string(), "1/2");
    }
}
