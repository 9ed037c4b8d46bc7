//! Quiver level data: the quantum characteristic e, the multicharge, the
//! dominant weight it determines, and the Cartan pairing.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Quantum characteristic: a finite e >= 2, or infinity (residues in Z).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Echar {
    Fin(i64),
    Inf,
}

impl Echar {
    pub fn parse(s: &str) -> Result<Echar, String> {
        if s == "inf" || s == "infinity" || s == "oo" {
            return Ok(Echar::Inf);
        }
        match s.parse::<i64>() {
            Ok(e) if e >= 2 => Ok(Echar::Fin(e)),
            _ => Err(format!("invalid quantum characteristic: {s:?} (need an integer >= 2 or \"inf\")")),
        }
    }
}

impl fmt::Display for Echar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Echar::Fin(e) => write!(f, "{e}"),
            Echar::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Echar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type Residue = i64;

/// A finite nonnegative integer combination of simple roots,
/// stored residue -> multiplicity.
pub type RootElement = BTreeMap<Residue, u64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Setting {
    pub e: Echar,
    pub charge: Vec<i64>,
}

impl Setting {
    pub fn new(e: Echar, charge: Vec<i64>) -> Setting {
        assert!(!charge.is_empty(), "the multicharge must have level >= 1");
        Setting { e, charge }
    }

    pub fn level(&self) -> usize {
        self.charge.len()
    }

    /// Normalize an integer to its residue class.
    pub fn res(&self, x: i64) -> Residue {
        match self.e {
            Echar::Fin(e) => x.rem_euclid(e),
            Echar::Inf => x,
        }
    }

    /// Residue of the node in component l (0-based), row r, column c (0-based).
    pub fn residue(&self, l: usize, r: usize, c: usize) -> Residue {
        self.res(self.charge[l] + c as i64 - r as i64)
    }

    /// Multiplicity of alpha_i in the dominant weight Lambda.
    pub fn lambda_mult(&self, i: Residue) -> u64 {
        let i = self.res(i);
        self.charge.iter().filter(|&&k| self.res(k) == i).count() as u64
    }

    /// Cartan pairing (alpha_i, alpha_j).
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        let i = self.res(i);
        let j = self.res(j);
        if i == j {
            return 2;
        }
        match self.e {
            Echar::Fin(2) => -2,
            Echar::Fin(e) => {
                if (j - i).rem_euclid(e) == 1 || (i - j).rem_euclid(e) == 1 {
                    -1
                } else {
                    0
                }
            }
            Echar::Inf => {
                if (i - j).abs() == 1 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Is there a quiver arrow i -> i+1 landing on j?
    pub fn arrow(&self, i: Residue, j: Residue) -> bool {
        if self.res(i) == self.res(j) {
            return false;
        }
        self.res(i + 1) == self.res(j)
    }

    /// Double edge between distinct residues (only when e = 2).
    pub fn double_edge(&self, i: Residue, j: Residue) -> bool {
        self.e == Echar::Fin(2) && self.res(i) != self.res(j)
    }

    /// (Lambda, beta) for beta a sum of simple roots.
    pub fn lambda_pair(&self, beta: &RootElement) -> i64 {
        beta.iter()
            .map(|(i, m)| self.lambda_mult(*i) as i64 * *m as i64)
            .sum()
    }

    /// (beta, beta) under the Cartan form.
    pub fn root_pair(&self, beta: &RootElement, gamma: &RootElement) -> i64 {
        let mut s = 0;
        for (i, a) in beta {
            for (j, b) in gamma {
                s += *a as i64 * *b as i64 * self.cartan(*i, *j);
            }
        }
        s
    }

    /// defect(beta) = (Lambda, beta) - (beta, beta)/2.
    pub fn defect(&self, beta: &RootElement) -> i64 {
        let bb = self.root_pair(beta, beta);
        assert!(bb % 2 == 0, "(beta,beta) is always even");
        self.lambda_pair(beta) - bb / 2
    }

    /// Residues as printable word: digits when e <= 10, else comma separated.
    pub fn residue_word_string(&self, word: &[Residue]) -> String {
        let compact = match self.e {
            Echar::Fin(e) => e <= 10,
            Echar::Inf => false,
        };
        if compact {
            word.iter().map(|r| r.to_string()).collect()
        } else {
            word.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Debug for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Setting(e={}, charge={:?})", self.e, self.charge)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic() {
        let s = Setting::new(Echar::Fin(2), vec![0]);
        assert_eq!(s.residue(0, 0, 0), 0);
        // first column of a single component alternates 0,1,0,1,...
        assert_eq!(s.residue(0, 1, 0), 1);
        assert_eq!(s.residue(0, 2, 0), 0);
        let si = Setting::new(Echar::Inf, vec![4]);
        assert_eq!(si.residue(0, 2, 0), 2);
    }

    #[test]
    fn cartan_values() {
        let s2 = Setting::new(Echar::Fin(2), vec![0]);
        assert_eq!(s2.cartan(0, 0), 2);
        assert_eq!(s2.cartan(0, 1), -2);
        let s3 = Setting::new(Echar::Fin(3), vec![0]);
        assert_eq!(s3.cartan(0, 1), -1);
        assert_eq!(s3.cartan(0, 2), -1);
        assert_eq!(s3.cartan(1, 0), -1);
        let s5 = Setting::new(Echar::Fin(5), vec![0]);
        assert_eq!(s5.cartan(0, 2), 0);
        let si = Setting::new(Echar::Inf, vec![0]);
        assert_eq!(si.cartan(3, 4), -1);
        assert_eq!(si.cartan(3, 5), 0);
    }

    #[test]
    fn defect_small() {
        // e=2, Lambda_0, beta = alpha_0 + alpha_1: (L,b)=1, (b,b)=2+2-2-2=0
        let s = Setting::new(Echar::Fin(2), vec![0]);
        let beta: RootElement = [(0, 1), (1, 1)].into_iter().collect();
        assert_eq!(s.defect(&beta), 1);
        // beta = 3 alpha_0 + 2 alpha_1: (L,b)=3, (b,b)=18+8-24=2 -> defect 2
        let beta: RootElement = [(0, 3), (1, 2)].into_iter().collect();
        assert_eq!(s.defect(&beta), 2);
    }
}
