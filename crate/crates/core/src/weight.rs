//! Weights: exact rational vectors in an ε-basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, is_integer, Rational};

/// Coordinate convention of a weight space.
///
/// `TypeA(n)` is `ℝⁿ / ℝ·(1,…,1)`; weights are stored by their representative
/// with coordinate sum zero, so structural equality is equality in the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    Euclidean(usize),
    TypeA(usize),
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Euclidean(n) | Ambient::TypeA(n) => n,
        }
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, Ambient::TypeA(_))
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Euclidean(n) => write!(f, "R^{n}"),
            Ambient::TypeA(n) => write!(f, "R^{n}/R(1..1)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    ambient: Ambient,
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(ambient: Ambient, mut coords: Vec<Rational>) -> Result<Weight> {
        if coords.len() != ambient.dim() {
            return Err(Error::DimensionMismatch { expected: ambient.dim(), got: coords.len() });
        }
        if let Ambient::TypeA(n) = ambient {
            if n > 0 {
                let mean = coords.iter().fold(Rational::zero(), |a, b| a + b) / int(n as i64);
                for c in coords.iter_mut() {
                    *c -= mean;
                }
            }
        }
        Ok(Weight { ambient, coords })
    }

    pub fn from_ints(ambient: Ambient, coords: &[i64]) -> Result<Weight> {
        Weight::new(ambient, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(ambient: Ambient) -> Weight {
        Weight { ambient, coords: vec![Rational::zero(); ambient.dim()] }
    }

    /// Unit vector `e_i` (projected to the quotient for type A).
    pub fn unit(ambient: Ambient, i: usize) -> Weight {
        let mut c = vec![Rational::zero(); ambient.dim()];
        c[i] = int(1);
        Weight::new(ambient, c).expect("unit vector has the right length")
    }

    /// `e_i - e_j`.
    pub fn difference(ambient: Ambient, i: usize, j: usize) -> Weight {
        &Weight::unit(ambient, i) - &Weight::unit(ambient, j)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn check_same_ambient(&self, other: &Weight) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.ambient.to_string(), other.ambient.to_string()))
        }
    }

    /// Euclidean pairing. Panics on ambient mismatch; use [`crate::rootsys::inner`]
    /// for the checked form.
    pub fn dot(&self, other: &Weight) -> Rational {
        assert_eq!(self.ambient, other.ambient, "pairing weights from different ambients");
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, s: Rational) -> Weight {
        Weight { ambient: self.ambient, coords: self.coords.iter().map(|c| c * s).collect() }
    }

    /// Membership in the weight lattice ∧*: integer coordinates, or integer
    /// pairwise differences in the type-A quotient.
    pub fn is_integral(&self) -> bool {
        match self.ambient {
            Ambient::Euclidean(_) => self.coords.iter().all(is_integer),
            Ambient::TypeA(_) => match self.coords.first() {
                None => true,
                Some(first) => self.coords.iter().all(|c| is_integer(&(c - first))),
            },
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(format_rational))
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.ambient, rhs.ambient, "adding weights from different ambients");
        Weight {
            ambient: self.ambient,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.ambient, rhs.ambient, "subtracting weights from different ambients");
        Weight {
            ambient: self.ambient,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { ambient: self.ambient, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for Rational {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

/// Sum of a collection of weights in a given ambient.
pub fn sum<'a>(ambient: Ambient, it: impl IntoIterator<Item = &'a Weight>) -> Weight {
    it.into_iter().fold(Weight::zero(ambient), |acc, w| &acc + w)
}
