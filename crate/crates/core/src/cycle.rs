//! Rational cycles: vectors of exact rationals indexed by the vertices of a
//! plumbing graph, representing elements of L, L' and L_Q in the basis of
//! exceptional divisor classes.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigInt, BigRational, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::numeric::{parse_ratio, ratio_string};

/// A rational cycle `x = sum_j r_j E_j`, stored by its coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    coeffs: Vec<BigRational>,
}

impl Cycle {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Cycle { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Cycle {
            coeffs: vec![BigRational::zero(); len],
        }
    }

    /// The basis cycle E_j.
    pub fn basis(len: usize, j: usize) -> Self {
        let mut c = Cycle::zero(len);
        c.coeffs[j] = BigRational::from_integer(BigInt::from(1));
        c
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Cycle {
            coeffs: coeffs
                .iter()
                .map(|&n| BigRational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }

    /// Builds a cycle from `(numerator, denominator)` pairs.
    pub fn from_fracs(coeffs: &[(i64, i64)]) -> Self {
        Cycle {
            coeffs: coeffs
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: usize) -> &BigRational {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, j: usize) -> &mut BigRational {
        &mut self.coeffs[j]
    }

    /// Coordinatewise minimum of two cycles on the same graph.
    pub fn min(&self, other: &Cycle) -> Cycle {
        assert_eq!(self.len(), other.len(), "cycles on different graphs");
        Cycle {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| if a <= b { a.clone() } else { b.clone() })
                .collect(),
        }
    }

    /// Coordinatewise floor.
    pub fn floor(&self) -> Cycle {
        Cycle {
            coeffs: self.coeffs.iter().map(|r| r.floor()).collect(),
        }
    }

    /// Coordinatewise fractional part; all coefficients land in [0,1).
    pub fn frac(&self) -> Cycle {
        self - &self.floor()
    }

    pub fn scaled(&self, k: i64) -> Cycle {
        let k = BigRational::from_integer(BigInt::from(k));
        Cycle {
            coeffs: self.coeffs.iter().map(|r| r * &k).collect(),
        }
    }

    /// True when every coefficient is an integer (then x lies in L).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|r| r.is_integer())
    }

    /// True when every coefficient is >= 0.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|r| !r.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.is_zero())
    }

    /// Effective and nonzero (written x > 0).
    pub fn is_positive(&self) -> bool {
        self.is_effective() && !self.is_zero()
    }

    /// Vertices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    /// True when `self <= other` coordinatewise.
    pub fn dominated_by(&self, other: &Cycle) -> bool {
        assert_eq!(self.len(), other.len(), "cycles on different graphs");
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycles on different graphs");
        Cycle {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycles on different graphs");
        Cycle {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Cycle {
    type Output = Cycle;
    fn neg(self) -> Cycle {
        Cycle {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", ratio_string(r))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{}", self)
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ratio_string))
    }
}

impl<'de> Deserialize<'de> for Cycle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        let coeffs = texts
            .iter()
            .map(|t| parse_ratio(t).map_err(de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cycle { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_is_coordinatewise() {
        let x = Cycle::from_integers(&[1, 0]);
        let y = Cycle::from_integers(&[0, 1]);
        assert_eq!(x.min(&y), Cycle::from_integers(&[0, 0]));
        assert_eq!(x.min(&x), x);
    }

    #[test]
    fn frac_lands_in_unit_cube() {
        let x = Cycle::from_fracs(&[(-3, 2), (7, 3), (0, 1)]);
        let f = x.frac();
        assert_eq!(f, Cycle::from_fracs(&[(1, 2), (1, 3), (0, 1)]));
        assert!((&x - &f).is_integral());
    }

    #[test]
    fn support_and_order() {
        let x = Cycle::from_fracs(&[(1, 2), (0, 1), (-1, 4)]);
        assert_eq!(x.support(), vec![0, 2]);
        assert!(!x.is_effective());
        assert!(Cycle::zero(3).is_effective());
        assert!(!Cycle::zero(3).is_positive());
        assert!(x.min(&Cycle::zero(3)).dominated_by(&Cycle::zero(3)));
    }

    #[test]
    fn display_round_trips_through_serde() {
        let x = Cycle::from_fracs(&[(1, 2), (-2, 3)]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"["1/2","-2/3"]"#);
        let back: Cycle = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
