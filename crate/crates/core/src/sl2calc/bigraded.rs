use std::collections::BTreeMap;

use super::character::Character;
use super::SL2Module;
use crate::error::{OrbitError, Result};

/// A module for `sl2 × sl2`, tracked by bigraded weight multiplicities
/// `(j, l)`: `j` for the first factor, `l` for the second.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedModule {
    chi: Character<(i32, i32)>,
}

impl BigradedModule {
    /// The external tensor product `a ⊠ b`.
    pub fn outer(a: &SL2Module, b: &SL2Module) -> Self {
        let mut pairs = Vec::new();
        for (j, ma) in a.character().terms() {
            for (l, mb) in b.character().terms() {
                pairs.push(((j, l), ma * mb));
            }
        }
        BigradedModule {
            chi: Character::from_pairs(pairs),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        BigradedModule {
            chi: self.chi.plus(&other.chi),
        }
    }

    pub fn ext_power(&self, k: u8) -> Result<Self> {
        let chi = match k {
            2 => self.chi.power2(-1),
            3 => self.chi.power3(-1),
            _ => return Err(OrbitError::UnsupportedPower(k)),
        };
        Ok(BigradedModule { chi })
    }

    pub fn sym_power(&self, k: u8) -> Result<Self> {
        let chi = match k {
            2 => self.chi.power2(1),
            3 => self.chi.power3(1),
            _ => return Err(OrbitError::UnsupportedPower(k)),
        };
        Ok(BigradedModule { chi })
    }

    pub fn dim(&self) -> u64 {
        self.chi.degree() as u64
    }

    /// `dim g(j, l)`.
    pub fn multiplicity(&self, j: i32, l: i32) -> u64 {
        self.chi.coeff((j, l)).max(0) as u64
    }

    /// Dimensions of the first grading, summed over the second.
    pub fn first_grading(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for ((j, _), m) in self.chi.terms() {
            *out.entry(j).or_insert(0) += m as u64;
        }
        out
    }

    /// Largest `|l|` carrying a nonzero multiplicity.
    pub fn max_second_weight(&self) -> i32 {
        self.chi.terms().map(|((_, l), _)| l.abs()).max().unwrap_or(0)
    }

    /// The first-grading slice `g(j)`, as a module for the second factor.
    pub fn slice(&self, j: i32) -> Result<SL2Module> {
        let weights: Vec<(i32, u64)> = self
            .chi
            .terms()
            .filter(|((jj, _), _)| *jj == j)
            .map(|((_, l), m)| (l, m as u64))
            .collect();
        SL2Module::from_weights(weights)
    }
}
