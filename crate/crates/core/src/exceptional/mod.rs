//! Non-special nilpotent orbits of the exceptional groups.
//!
//! Each row carries its weighted diagram, the Levi modules `g(1)` and
//! `g(2)`, and one or more restrictions of `g(1)` to the centralizing
//! `SL_2`. Two independent checks run against the data: the restriction is
//! re-evaluated with the `sl2` calculus to recover `m` and the `*`/`**`
//! mark, and the root system recomputes `dim g(j)` from the diagram.

mod lexpr;
mod roots;
mod table;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrbitError, Result};
use crate::raising::GroupFlavor;
use crate::sl2calc::{IrrepMultiset, ModuleExpr, SL2Module};

pub use lexpr::{base_name, rep_dim, LExpr};
pub use roots::{
    candidate_matches, cartan_matrix, graded_dims_from_diagram, node_order_candidates,
    positive_roots, root_system, CartanMatrix, NodeOrderCandidate,
};
pub use table::{load_table, table, table_json, TABLE_SCHEMA_VERSION};
pub use verify::{calibrate, verify_row, verify_table, CalibrationReport, RowReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalGroup {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 5] = [
        ExceptionalGroup::G2,
        ExceptionalGroup::F4,
        ExceptionalGroup::E6,
        ExceptionalGroup::E7,
        ExceptionalGroup::E8,
    ];

    pub fn rank(self) -> usize {
        match self {
            ExceptionalGroup::G2 => 2,
            ExceptionalGroup::F4 => 4,
            ExceptionalGroup::E6 => 6,
            ExceptionalGroup::E7 => 7,
            ExceptionalGroup::E8 => 8,
        }
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ExceptionalGroup {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        ExceptionalGroup::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| OrbitError::Parse {
                what: "exceptional group",
                input: s.to_string(),
            })
    }
}

/// What the tables say about a row: a raising with the given `m`, or one of
/// the marks `*` (only Mœglin's method applies) and `**` (neither does).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Classification {
    Raised { m: u64 },
    RaisedViaQuadraticAlgebra { m: u64 },
    MoeglinOnly,
    CompletelyOdd,
}

impl Classification {
    pub fn m(self) -> Option<u64> {
        match self {
            Classification::Raised { m } | Classification::RaisedViaQuadraticAlgebra { m } => Some(m),
            _ => None,
        }
    }

    /// The table's `m` column.
    pub fn mark(self) -> String {
        match self {
            Classification::Raised { m } | Classification::RaisedViaQuadraticAlgebra { m } => {
                m.to_string()
            }
            Classification::MoeglinOnly => "*".into(),
            Classification::CompletelyOdd => "**".into(),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Raised { m } => write!(f, "raised, m = {m}"),
            Classification::RaisedViaQuadraticAlgebra { m } => {
                write!(f, "raised over a quadratic algebra, m = {m}")
            }
            Classification::MoeglinOnly => f.write_str("* (Mœglin only)"),
            Classification::CompletelyOdd => f.write_str("** (completely odd)"),
        }
    }
}

/// One choice of `SL_{2,c}` and the restriction of each Levi representation
/// to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionCase {
    pub description: String,
    /// Base representation name to its restriction, in `sl2` notation.
    pub restriction: BTreeMap<String, String>,
    /// The stabilizer is `SL_2(K)` for a quadratic algebra `K`; the cover
    /// parity rule applies.
    #[serde(default)]
    pub quadratic_algebra: bool,
    /// `g(1)` as an `SL_{2,c}`-module.
    pub g1_expr: ModuleExpr,
}

impl RestrictionCase {
    pub fn restrict(&self, rep: &str) -> Result<SL2Module> {
        let target = self
            .restriction
            .get(base_name(rep))
            .ok_or_else(|| OrbitError::UnknownRep(rep.to_string()))?;
        LExpr::parse(target)?.as_sl2()
    }

    /// Substitutes the restriction into a Levi module.
    pub fn apply(&self, module: &str) -> Result<ModuleExpr> {
        LExpr::parse(module)?.substitute(&|r| self.restrict(r))
    }
}

/// Data printed beyond `g(1)` and `g(2)` for a row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Supplement {
    /// Further graded pieces as Levi modules, with their dimensions.
    pub grades: BTreeMap<i32, (String, u64)>,
    /// `g(0)` as a Levi module.
    pub g0: String,
    pub dim_g02: u64,
    pub dim_g22: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalOrbitRecord {
    pub group: ExceptionalGroup,
    pub label: String,
    /// Node weights in table order; for type E the upper node comes first.
    pub diagram: Vec<u8>,
    /// Simple factors of the Levi subgroup, e.g. `["A2", "A1"]`.
    pub levi: Vec<String>,
    pub g1: String,
    pub g2: String,
    pub g1_dim: u64,
    pub g2_dim: u64,
    pub stabilizer: String,
    pub cases: Vec<RestrictionCase>,
    pub expected: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supplement: Option<Supplement>,
}

impl ExceptionalOrbitRecord {
    pub fn id(&self) -> String {
        format!("{} {}", self.group, self.label)
    }
}

/// `m`, the fixed-residual flag and the full decomposition of `g(1)` for one
/// case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MRecomputation {
    pub m: u64,
    pub residual_fixed: bool,
    pub summands: IrrepMultiset,
}

pub fn recompute_m(r: &ExceptionalOrbitRecord, case_index: usize) -> Result<MRecomputation> {
    let case = r.cases.get(case_index).ok_or_else(|| OrbitError::RowMismatch {
        group: r.group.to_string(),
        label: r.label.clone(),
        reason: format!("no restriction case {case_index}"),
    })?;
    let summands = case.g1_expr.eval()?.decompose()?;
    Ok(MRecomputation {
        m: summands.get(&2).copied().unwrap_or(0),
        residual_fixed: summands.keys().all(|&n| n == 1 || n == 2),
        summands,
    })
}

/// The admissibility obstruction: an odd number of summands of dimension
/// `2 mod 4`.
pub fn nevins_not_admissible(summands: &IrrepMultiset) -> bool {
    let count: u64 = summands
        .iter()
        .filter(|(&n, _)| n % 4 == 2)
        .map(|(_, &k)| k)
        .sum();
    count % 2 == 1
}

/// Classification recomputed from the restriction cases alone.
pub fn classify(r: &ExceptionalOrbitRecord) -> Result<Classification> {
    let mut moeglin = false;
    for (idx, case) in r.cases.iter().enumerate() {
        let rec = recompute_m(r, idx)?;
        let group = if case.quadratic_algebra {
            GroupFlavor::MetaplecticSp
        } else {
            GroupFlavor::LinearSp
        };
        if rec.residual_fixed && group.raises_with(rec.m) {
            return Ok(if case.quadratic_algebra {
                Classification::RaisedViaQuadraticAlgebra { m: rec.m }
            } else {
                Classification::Raised { m: rec.m }
            });
        }
        moeglin |= nevins_not_admissible(&rec.summands);
    }
    Ok(if moeglin {
        Classification::MoeglinOnly
    } else {
        Classification::CompletelyOdd
    })
}

/// [`classify`], failing unless the result matches the table.
pub fn classify_row(r: &ExceptionalOrbitRecord) -> Result<Classification> {
    let got = classify(r)?;
    if got != r.expected {
        return Err(OrbitError::RowMismatch {
            group: r.group.to_string(),
            label: r.label.clone(),
            reason: format!("recomputed {got}, table says {}", r.expected),
        });
    }
    Ok(got)
}

/// Dimension and root count of a simple Levi factor such as `A3` or `E6`.
pub fn levi_factor(name: &str) -> Result<(usize, usize)> {
    let bad = || OrbitError::Parse {
        what: "Levi factor",
        input: name.to_string(),
    };
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let roots = match (kind, n) {
        ('A', n) if n >= 1 => n * (n + 1),
        ('B' | 'C', n) if n >= 2 => 2 * n * n,
        ('D', n) if n >= 4 => 2 * n * (n - 1),
        ('E', 6) => 72,
        ('E', 7) => 126,
        ('E', 8) => 240,
        ('F', 4) => 48,
        ('G', 2) => 12,
        _ => return Err(bad()),
    };
    Ok((n, roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(u32, u64)]) -> IrrepMultiset {
        pairs.iter().copied().collect()
    }

    #[test]
    fn nevins_examples() {
        assert!(nevins_not_admissible(&ms(&[(1, 4), (2, 5)])));
        assert!(!nevins_not_admissible(&ms(&[(4, 1)])));
        assert!(nevins_not_admissible(&ms(&[(1, 8), (2, 7), (3, 2)])));
        assert!(!nevins_not_admissible(&ms(&[(2, 3), (4, 3), (6, 1)])));
    }

    #[test]
    fn levi_factors() {
        assert_eq!(levi_factor("A3").unwrap(), (3, 12));
        assert_eq!(levi_factor("C3").unwrap(), (3, 18));
        assert_eq!(levi_factor("D5").unwrap(), (5, 40));
        assert_eq!(levi_factor("E6").unwrap(), (6, 72));
        assert!(levi_factor("D3").is_err());
        assert!(levi_factor("X").is_err());
    }

    #[test]
    fn marks() {
        assert_eq!(Classification::Raised { m: 5 }.mark(), "5");
        assert_eq!(Classification::MoeglinOnly.mark(), "*");
        assert_eq!(Classification::CompletelyOdd.mark(), "**");
        assert_eq!("e8".parse::<ExceptionalGroup>().unwrap(), ExceptionalGroup::E8);
    }
}
