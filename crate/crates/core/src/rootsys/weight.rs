//! Integer weights in the fundamental-weight basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight written as coefficients on the fundamental weights ω₁..ωₙ.
///
/// Ordering is lexicographic on the coordinate vector, which is the order
/// used for every sorted output of the toolkit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight ω_i, with `i` a 1-based Bourbaki label.
    pub fn omega(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// True when every coordinate lies in `[0, bound]`; with `bound = p^r − 1`
    /// this is membership in the restricted region X_r(T).
    pub fn is_restricted(&self, bound: i64) -> bool {
        self.coords.iter().all(|&c| (0..=bound).contains(&c))
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Adds `k · other` in place.
    pub fn add_scaled(&mut self, other: &Weight, k: i64) {
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += k * b;
        }
    }

    /// Parses "c1,c2,...,cn" and checks the length against `rank`.
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Weight> {
        let w: Weight = s.parse()?;
        if w.rank() != rank {
            return Err(Error::MalformedWeight(format!(
                "{s:?} has {} coordinates, expected {rank}",
                w.rank()
            )));
        }
        Ok(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::MalformedWeight("empty weight".into()));
        }
        let coords = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::MalformedWeight(format!("bad coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(Weight { coords })
    }
}

impl From<Weight> for String {
    fn from(w: Weight) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Weight {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scaled(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let w: Weight = "1,-2, 0".parse().unwrap();
        assert_eq!(w.coords, vec![1, -2, 0]);
        assert_eq!(w.to_string(), "1,-2,0");
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"1,-2,0\"");
        let back: Weight = serde_json::from_str("\"1,-2,0\"").unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Weight>().is_err());
        assert!("1,x".parse::<Weight>().is_err());
        assert!(Weight::parse_with_rank("1,2", 3).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Weight::new(vec![1, 2]);
        let b = Weight::new(vec![3, -1]);
        assert_eq!(&a + &b, Weight::new(vec![4, 1]));
        assert_eq!(&a - &b, Weight::new(vec![-2, 3]));
        assert_eq!(-&a, Weight::new(vec![-1, -2]));
        assert_eq!(3 * &a, Weight::new(vec![3, 6]));
        assert!(a.is_dominant() && !b.is_dominant());
        assert!(a.is_restricted(2) && !a.is_restricted(1));
    }
}
