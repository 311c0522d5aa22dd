//! Character calculus for finite-dimensional sl2-modules.
//!
//! Modules are stored by their weight multiplicities (coefficients of the
//! character as a Laurent polynomial). The irreducible content is recovered
//! by peeling highest weights.

mod bigraded;
mod character;
mod expr;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{OrbitError, Result};

pub use bigraded::BigradedModule;
use character::Character;
pub use expr::{eval_expr, ModuleExpr};

/// Irreducible multiplicities: dimension `n` of `V_n` mapped to its
/// multiplicity.
pub type IrrepMultiset = BTreeMap<u32, u64>;

/// A finite-dimensional sl2-module, stored as weight multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SL2Module {
    chi: Character<i32>,
}

impl SL2Module {
    pub fn zero() -> Self {
        SL2Module::default()
    }

    /// `n` copies of the trivial module.
    pub fn trivial(n: u64) -> Self {
        SL2Module {
            chi: Character::from_pairs([(0, n as i64)]),
        }
    }

    /// The irreducible module `V_n` of dimension `n`.
    pub fn irrep(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(OrbitError::ZeroDimensionalIrrep);
        }
        Ok(Self::irrep_unchecked(n))
    }

    fn irrep_unchecked(n: u32) -> Self {
        let top = n as i32 - 1;
        SL2Module {
            chi: Character::from_pairs((0..n as i32).map(|k| (top - 2 * k, 1))),
        }
    }

    /// Direct sum of `V_n^{m}` over the entries of `irreps`; zero
    /// dimensions are rejected.
    pub fn from_irreps<I: IntoIterator<Item = (u32, u64)>>(irreps: I) -> Result<Self> {
        let mut chi = Character::default();
        for (n, mult) in irreps {
            if n == 0 {
                return Err(OrbitError::ZeroDimensionalIrrep);
            }
            chi = chi.plus(&Self::irrep_unchecked(n).chi.scaled(mult as i64));
        }
        Ok(SL2Module { chi })
    }

    /// Builds a module from raw weight multiplicities, checking that they
    /// are symmetric and decompose into genuine irreducibles.
    pub fn from_weights<I: IntoIterator<Item = (i32, u64)>>(weights: I) -> Result<Self> {
        let m = SL2Module {
            chi: Character::from_pairs(weights.into_iter().map(|(w, c)| (w, c as i64))),
        };
        m.decompose()?;
        Ok(m)
    }

    fn from_character(chi: Character<i32>) -> Self {
        SL2Module { chi }
    }

    pub(crate) fn character(&self) -> &Character<i32> {
        &self.chi
    }

    pub fn dim(&self) -> u64 {
        self.chi.degree() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.chi.terms().next().is_none()
    }

    /// Multiplicity of the weight `w`.
    pub fn weight_multiplicity(&self, w: i32) -> u64 {
        self.chi.coeff(w).max(0) as u64
    }

    /// Nonzero weight multiplicities in increasing weight order.
    pub fn weights(&self) -> Vec<(i32, u64)> {
        self.chi.terms().map(|(w, m)| (w, m as u64)).collect()
    }

    pub fn direct_sum(&self, other: &SL2Module) -> SL2Module {
        Self::from_character(self.chi.plus(&other.chi))
    }

    /// `n` copies of `self`.
    pub fn repeated(&self, n: u64) -> SL2Module {
        Self::from_character(self.chi.scaled(n as i64))
    }

    pub fn tensor(&self, other: &SL2Module) -> SL2Module {
        Self::from_character(self.chi.times(&other.chi))
    }

    /// Exterior power `Λ^k` for `k` in `{2, 3}`.
    pub fn ext_power(&self, k: u8) -> Result<SL2Module> {
        match k {
            2 => Ok(Self::from_character(self.chi.power2(-1))),
            3 => Ok(Self::from_character(self.chi.power3(-1))),
            _ => Err(OrbitError::UnsupportedPower(k)),
        }
    }

    /// Symmetric power `S^k` for `k` in `{2, 3}`.
    pub fn sym_power(&self, k: u8) -> Result<SL2Module> {
        match k {
            2 => Ok(Self::from_character(self.chi.power2(1))),
            3 => Ok(Self::from_character(self.chi.power3(1))),
            _ => Err(OrbitError::UnsupportedPower(k)),
        }
    }

    /// Irreducible decomposition by peeling highest weights.
    pub fn decompose(&self) -> Result<IrrepMultiset> {
        let mut rest = self.chi.clone();
        let mut out = IrrepMultiset::new();
        loop {
            let highest = rest.terms().last();
            let Some((top, mult)) = highest else {
                break;
            };
            if mult < 0 || top < 0 {
                return Err(OrbitError::NotGenuineModule { weight: top });
            }
            let n = (top + 1) as u32;
            *out.entry(n).or_insert(0) += mult as u64;
            rest = rest.plus(&Self::irrep_unchecked(n).chi.scaled(-mult));
        }
        Ok(out)
    }

    /// Multiplicity of `V_n` in the decomposition.
    pub fn irrep_multiplicity(&self, n: u32) -> Result<u64> {
        Ok(self.decompose()?.get(&n).copied().unwrap_or(0))
    }

    /// Removes an embedded copy of `sub`, irreducible by irreducible.
    pub fn quotient(&self, sub: &SL2Module) -> Result<SL2Module> {
        let mut have = self.decompose()?;
        for (n, need) in sub.decompose()? {
            let avail = have.get(&n).copied().unwrap_or(0);
            if avail < need {
                return Err(OrbitError::QuotientNotEmbedded {
                    irrep: n,
                    needed: need,
                    available: avail,
                });
            }
            have.insert(n, avail - need);
        }
        Self::from_irreps(have)
    }
}

/// `V_n` for `n >= 1`.
pub fn irrep(n: u32) -> Result<SL2Module> {
    SL2Module::irrep(n)
}

pub fn tensor(a: &SL2Module, b: &SL2Module) -> SL2Module {
    a.tensor(b)
}

pub fn ext_power(k: u8, m: &SL2Module) -> Result<SL2Module> {
    m.ext_power(k)
}

pub fn sym_power(k: u8, m: &SL2Module) -> Result<SL2Module> {
    m.sym_power(k)
}

pub fn weight_multiplicity(m: &SL2Module, w: i32) -> u64 {
    m.weight_multiplicity(w)
}

pub fn decompose(m: &SL2Module) -> Result<IrrepMultiset> {
    m.decompose()
}

/// Renders an irreducible multiset as `4V_1 ⊕ 5V_2`.
pub fn format_irreps(irreps: &IrrepMultiset) -> String {
    let terms: Vec<String> = irreps
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(n, m)| {
            if *m == 1 {
                format!("V_{n}")
            } else {
                format!("{m}V_{n}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" ⊕ ")
    }
}

impl fmt::Display for SL2Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decompose() {
            Ok(irreps) => f.write_str(&format_irreps(&irreps)),
            Err(_) => write!(f, "virtual{:?}", self.weights()),
        }
    }
}

impl fmt::Debug for SL2Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2Module({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct IrrepsJson {
    irreps: IrrepMultiset,
}

impl Serialize for SL2Module {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let irreps = self.decompose().map_err(serde::ser::Error::custom)?;
        IrrepsJson { irreps }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SL2Module {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        // Keys arrive as strings when buffered inside a tagged enum.
        #[derive(Deserialize)]
        struct Raw {
            irreps: BTreeMap<String, u64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut irreps = Vec::with_capacity(raw.irreps.len());
        for (k, m) in raw.irreps {
            let n = k
                .parse::<u32>()
                .map_err(|_| serde::de::Error::custom(format!("bad irrep dimension {k:?}")))?;
            irreps.push((n, m));
        }
        SL2Module::from_irreps(irreps).map_err(serde::de::Error::custom)
    }
}
