//! Exact weight vectors in orthogonal coordinates.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A vector of exact rationals in the ambient coordinates `e_1, ..., e_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![Rational::zero(); len])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// `1/2 * (coords)`, the notation used for spinor-type weights.
    pub fn halves(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| frac(c, 2)).collect())
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut w = Self::zero(len);
        w.0[i] = Rational::one();
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, k: i64) -> Weight {
        self.scale(&int(k))
    }

    /// `self + c * other`, without allocating the intermediate.
    pub fn add_scaled(&self, c: &Rational, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    /// Unchecked standard product; callers guarantee equal lengths.
    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn select(&self, idx: &[usize]) -> Weight {
        Weight(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected,
                found: self.len(),
            })
        }
    }

    /// Multiset of absolute values, sorted; invariant under signed permutations.
    pub fn abs_sorted(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.0.iter().map(|c| c.abs()).collect();
        v.sort();
        v
    }
}

/// Checked inner product.
pub fn inner(a: &Weight, b: &Weight) -> Result<Rational> {
    b.check_len(a.len())?;
    Ok(a.dot(b))
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Prints `(3,2,1,0)` for integral weights and `1/d*(n_1,...,n_k)` otherwise,
/// with `d` the least common denominator.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.common_denominator();
        if !d.is_one() {
            write!(f, "1/{d}*")?;
        }
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let scaled = c * Rational::from_integer(d.clone());
            write!(f, "{}", scaled.to_integer())?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(rational_string))
    }
}

/// `"p/q"` with `q > 0`; integers keep the `/1` so every entry has one shape.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
