//! Exact scalar field abstraction.
//!
//! Everything in this crate is generic over [`Scalar`], an ordered field with
//! exact equality and hashing. The blanket implementation covers
//! `num_rational::Ratio<I>` for the usual integer backends, so `Rational64`,
//! `Ratio<i128>` and `BigRational` all work. Floating point types are
//! deliberately not scalars: root-system membership, dominance and
//! stabilizer tests compare values for exact equality.

use std::fmt::{Debug, Display};
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone + Debug + Display + Eq + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// `numer / denom`; panics if `denom == 0`.
    fn ratio(numer: i64, denom: i64) -> Self;

    fn is_integer(&self) -> bool;

    /// Integer value, if this scalar is an integer that fits in `i64`.
    fn as_int(&self) -> Option<i64>;

    /// Largest integer `<= self`.
    fn floor_i64(&self) -> Option<i64>;

    /// Reduced `(numer, denom)` with `denom > 0`, if both fit in `i64`.
    fn to_i64_pair(&self) -> Option<(i64, i64)>;

    /// Feeds the reduced form to a hasher; agrees with `Eq` and is much
    /// cheaper than the `Hash` impl of `Ratio`.
    fn hash_reduced<H: Hasher>(&self, state: &mut H) {
        self.hash(state);
    }

    /// Canonical `p/q` text (reduced, `q > 0`, `/1` omitted).
    fn to_canonical(&self) -> String {
        self.to_string()
    }

    /// Parses `p`, `-p`, `p/q`; surrounding whitespace is ignored.
    fn parse_canonical(s: &str) -> Result<Self>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Clone
        + Debug
        + Display
        + Hash
        + Signed
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("i64 fits in scalar backend"))
    }

    fn ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(
            I::from_i64(numer).expect("i64 fits in scalar backend"),
            I::from_i64(denom).expect("i64 fits in scalar backend"),
        )
    }

    fn is_integer(&self) -> bool {
        self.denom().is_one()
    }

    fn as_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn floor_i64(&self) -> Option<i64> {
        self.floor().numer().to_i64()
    }

    fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    // arithmetic on `Ratio` always returns reduced values
    fn hash_reduced<H: Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = n.strip_prefix('+').unwrap_or(n);
        let numer = I::from_str(n).map_err(|_| bad())?;
        let denom = I::from_str(d).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Ratio::new(numer, denom))
    }
}

/// Parses a comma- or whitespace-separated list of rationals.
pub fn parse_vector<T: Scalar>(s: &str) -> Result<Vec<T>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(T::parse_canonical)
        .collect()
}

pub fn format_vector<T: Scalar>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_canonical).collect();
    format!("[{}]", parts.join(", "))
}

/// A non-negative real number `sqrt(square)` carried with a sign, compared
/// exactly without taking square roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRoot<T> {
    /// -1, 0 or 1.
    pub sign: i8,
    pub square: T,
}

impl<T: Scalar> SignedRoot<T> {
    pub fn zero() -> Self {
        SignedRoot { sign: 0, square: T::zero() }
    }

    /// `value / sqrt(norm_sq)` for a positive `norm_sq`.
    pub fn quotient(value: &T, norm_sq: &T) -> Self {
        let sign = if value.is_zero() {
            0
        } else if value.is_positive() {
            1
        } else {
            -1
        };
        SignedRoot { sign, square: value.clone() * value.clone() / norm_sq.clone() }
    }

    /// `sqrt(square)` with positive sign.
    pub fn from_square(square: T) -> Self {
        let sign = if square.is_zero() { 0 } else { 1 };
        SignedRoot { sign, square }
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    /// Multiplies by a positive rational factor.
    pub fn scale(&self, factor: &T) -> Self {
        assert!(factor.is_positive(), "scale factor must be positive");
        SignedRoot {
            sign: self.sign,
            square: self.square.clone() * factor.clone() * factor.clone(),
        }
    }

    /// Lossy conversion for display only.
    pub fn approx(&self) -> f64
    where
        T: ToPrimitive,
    {
        f64::from(self.sign) * self.square.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl<T: Scalar> PartialOrd for SignedRoot<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for SignedRoot<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                0 => Ordering::Equal,
                1 => self.square.cmp(&other.square),
                _ => other.square.cmp(&self.square),
            },
            ord => ord,
        }
    }
}
