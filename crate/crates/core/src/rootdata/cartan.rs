//! Cartan types and their Cartan matrices (Bourbaki numbering).
//!
//! Convention: `a[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

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

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_legal_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 is accepted as a relabelled A3.
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// One simple factor of a (possibly reducible) Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.is_legal_rank(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // alpha_n short
            Family::B => a[n - 2][n - 1] = -2,
            // alpha_n long
            Family::C => a[n - 1][n - 2] = -2,
            // alpha_1, alpha_2 long
            Family::F => a[1][2] = -2,
            // alpha_1 short
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A list of simple factors, e.g. `B3xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType(pub Vec<SimpleType>);

impl CartanType {
    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Ok(CartanType(vec![SimpleType::new(family, rank)?]))
    }

    pub fn from_pairs(pairs: &[(&str, usize)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidType("empty Cartan type".into()));
        }
        pairs
            .iter()
            .map(|&(letter, rank)| {
                let mut chars = letter.chars();
                let family = match (chars.next(), chars.next()) {
                    (Some(c), None) => Family::from_letter(c),
                    _ => None,
                }
                .ok_or_else(|| Error::InvalidType(letter.to_string()))?;
                SimpleType::new(family, rank)
            })
            .collect::<Result<Vec<_>>>()
            .map(CartanType)
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.0
    }

    /// Block-diagonal Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for t in &self.0 {
            let block = t.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    a[offset + i][offset + j] = x;
                }
            }
            offset += t.rank;
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidType("empty Cartan type".into()));
        }
        s.split(['x', 'X'])
            .map(|part| {
                let part = part.trim();
                let mut chars = part.chars();
                let family = chars
                    .next()
                    .and_then(Family::from_letter)
                    .ok_or_else(|| Error::InvalidType(part.to_string()))?;
                let rank: usize =
                    chars.as_str().parse().map_err(|_| Error::InvalidType(part.to_string()))?;
                SimpleType::new(family, rank)
            })
            .collect::<Result<Vec<_>>>()
            .map(CartanType)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reducible_types() {
        let t: CartanType = "b3XA1".parse().unwrap();
        assert_eq!(t.to_string(), "B3xA1");
        assert_eq!(t.rank(), 4);
        assert!("A0".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("Q2".parse::<CartanType>().is_err());
        assert!("".parse::<CartanType>().is_err());
        assert!(CartanType::from_pairs(&[("G", 2), ("A", 1)]).is_ok());
        assert!(CartanType::from_pairs(&[("F", 3)]).is_err());
    }

    #[test]
    fn g2_matrix() {
        let a = SimpleType::new(Family::G, 2).unwrap().cartan_matrix();
        assert_eq!(a, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn cartan_matrices_are_generalized_cartan() {
        for s in ["A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "D3xA2"] {
            let a = s.parse::<CartanType>().unwrap().cartan_matrix();
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                for j in 0..a.len() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0, "{s}");
                    }
                }
            }
        }
    }
}
