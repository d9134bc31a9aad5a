//! Simple types, Bourbaki Cartan matrices and ε-basis realizations.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational used for ε-basis coordinates and inverse Cartan entries.
pub type Rational = Ratio<i64>;

/// Cartan–Killing family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Checks the rank range for the family.
    pub fn validate(self, rank: usize) -> Result<()> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            let reason = match self {
                Family::A => "type A needs rank >= 1",
                Family::B => "type B needs rank >= 2",
                Family::C => "type C needs rank >= 2",
                Family::D => "type D needs rank >= 4",
                Family::E => "type E needs rank 6, 7 or 8",
                Family::F => "type F needs rank 4",
                Family::G => "type G needs rank 2",
            };
            Err(Error::InvalidType {
                family: self.to_string(),
                rank,
                reason: reason.into(),
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidType {
                family: other.into(),
                rank: 0,
                reason: "unknown family letter".into(),
            }),
        }
    }
}

/// Parses identifiers such as "E8" or "C12" into (family, rank).
pub fn parse_type(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::MalformedWeight("empty type identifier".into()))?;
    let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidType {
        family: letter.to_string(),
        rank: 0,
        reason: format!("cannot read a rank from {s:?}"),
    })?;
    let family: Family = letter.to_string().parse().map_err(|e| match e {
        Error::InvalidType { family, reason, .. } => Error::InvalidType {
            family,
            rank,
            reason,
        },
        other => other,
    })?;
    family.validate(rank)?;
    Ok((family, rank))
}

/// Bourbaki Cartan matrix with entry `[i][j] = ⟨α_i, α_j∨⟩`, so row `i`
/// is α_i in the fundamental-weight basis.
pub fn cartan_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    family.validate(n)?;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // (i, j, a_ij, a_ji) with 0-based labels.
    let mut edges: Vec<(usize, usize, i64, i64)> = Vec::new();
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                edges.push((i, i + 1, -1, -1));
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                edges.push((i, i + 1, -1, -1));
            }
            edges.push((n - 2, n - 1, -2, -1));
        }
        Family::C => {
            for i in 0..n - 2 {
                edges.push((i, i + 1, -1, -1));
            }
            edges.push((n - 2, n - 1, -1, -2));
        }
        Family::D => {
            for i in 0..n - 2 {
                edges.push((i, i + 1, -1, -1));
            }
            edges.push((n - 3, n - 1, -1, -1));
        }
        Family::E => {
            edges.push((0, 2, -1, -1));
            edges.push((1, 3, -1, -1));
            for i in 2..n - 1 {
                edges.push((i, i + 1, -1, -1));
            }
        }
        Family::F => {
            edges.push((0, 1, -1, -1));
            edges.push((1, 2, -2, -1));
            edges.push((2, 3, -1, -1));
        }
        Family::G => {
            edges.push((0, 1, -1, -3));
        }
    }
    for (i, j, aij, aji) in edges {
        a[i][j] = aij;
        a[j][i] = aji;
    }
    Ok(a)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Simple roots as exact vectors in the ε-basis (Bourbaki plates).
pub fn epsilon_simple_roots(family: Family, n: usize) -> Result<Vec<Vec<Rational>>> {
    family.validate(n)?;
    let zero = q(0, 1);
    let unit = |dim: usize, entries: &[(usize, Rational)]| {
        let mut v = vec![zero; dim];
        for &(k, c) in entries {
            v[k] += c;
        }
        v
    };
    let one = q(1, 1);
    let roots = match family {
        Family::A => (0..n)
            .map(|i| unit(n + 1, &[(i, one), (i + 1, -one)]))
            .collect(),
        Family::B | Family::C | Family::D => {
            let mut v: Vec<Vec<Rational>> = (0..n - 1)
                .map(|i| unit(n, &[(i, one), (i + 1, -one)]))
                .collect();
            v.push(match family {
                Family::B => unit(n, &[(n - 1, one)]),
                Family::C => unit(n, &[(n - 1, q(2, 1))]),
                _ => unit(n, &[(n - 2, one), (n - 1, one)]),
            });
            v
        }
        Family::E => {
            let h = q(1, 2);
            let mut v = vec![
                unit(
                    8,
                    &[
                        (0, h),
                        (1, -h),
                        (2, -h),
                        (3, -h),
                        (4, -h),
                        (5, -h),
                        (6, -h),
                        (7, h),
                    ],
                ),
                unit(8, &[(0, one), (1, one)]),
            ];
            for i in 0..6 {
                v.push(unit(8, &[(i + 1, one), (i, -one)]));
            }
            v.truncate(n);
            v
        }
        Family::F => {
            let h = q(1, 2);
            vec![
                unit(4, &[(1, one), (2, -one)]),
                unit(4, &[(2, one), (3, -one)]),
                unit(4, &[(3, one)]),
                unit(4, &[(0, h), (1, -h), (2, -h), (3, -h)]),
            ]
        }
        Family::G => vec![
            unit(3, &[(0, one), (1, -one)]),
            unit(3, &[(0, q(-2, 1)), (1, one), (2, one)]),
        ],
    };
    Ok(roots)
}

/// Standard inner product of two ε-vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Coordinates of X(T)/ℤΦ coset representatives other than 0: the minuscule
/// fundamental weights (1-based labels), plus ω_n for B_n and ω₁ for C_n.
pub fn coset_representative_labels(family: Family, n: usize) -> Vec<usize> {
    match family {
        Family::A => (1..=n).collect(),
        Family::B => vec![n],
        Family::C => vec![1],
        Family::D => vec![1, n - 1, n],
        Family::E => match n {
            6 => vec![1, 6],
            7 => vec![7],
            _ => vec![],
        },
        Family::F | Family::G => vec![],
    }
}
