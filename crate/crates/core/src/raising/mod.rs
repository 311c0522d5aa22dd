//! Orbit-raising moves on classical partitions.
//!
//! A skew multiplicity space `U_i` of dimension at least 2 contains a long
//! root `SL_2`; adding its nilpotent to the orbit replaces a pair `(i, i)`
//! by `(i+1, i-1)`. Whether the move is available for a given group is
//! decided by the parity of `m`, the number of copies of `V_2` in `g(1)`
//! under that `SL_2`.

mod conditions;
mod forms;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrbitError, Result};
use crate::partitions::{require_classical, Partition, WFlavor};
use crate::sl2calc::SL2Module;
use crate::special::SpecialFlavor;

pub use conditions::{
    condition_check, e_module, graded_dims, quadruple_condition_check, ConditionReport,
};
pub use forms::{raise_with_forms, FormSlot, OrbitWithForms, SquareClass};

/// The group whose orbits are being raised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupFlavor {
    /// `Sp(W)`.
    LinearSp,
    /// The metaplectic double cover of `Sp(W)`.
    MetaplecticSp,
    /// `O(W)`.
    OrthogonalO,
}

impl GroupFlavor {
    pub const ALL: [GroupFlavor; 3] = [
        GroupFlavor::LinearSp,
        GroupFlavor::MetaplecticSp,
        GroupFlavor::OrthogonalO,
    ];

    pub fn w_flavor(self) -> WFlavor {
        match self {
            GroupFlavor::LinearSp | GroupFlavor::MetaplecticSp => WFlavor::SymplecticW,
            GroupFlavor::OrthogonalO => WFlavor::OrthogonalW,
        }
    }

    pub fn special_flavor(self) -> SpecialFlavor {
        match self {
            GroupFlavor::LinearSp => SpecialFlavor::SymplecticSpecial,
            GroupFlavor::MetaplecticSp => SpecialFlavor::MetaplecticSpecial,
            GroupFlavor::OrthogonalO => SpecialFlavor::OrthogonalSpecial,
        }
    }

    /// Degree of the central extension: 2 for the metaplectic cover.
    pub fn cover_degree(self) -> u32 {
        match self {
            GroupFlavor::MetaplecticSp => 2,
            _ => 1,
        }
    }

    /// A slot raises when `m` is odd for a linear group and even for the
    /// double cover.
    pub fn raises_with(self, m: u64) -> bool {
        match self.cover_degree() {
            1 => m % 2 == 1,
            _ => m.is_multiple_of(2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupFlavor::LinearSp => "sp",
            GroupFlavor::MetaplecticSp => "metaplectic-sp",
            GroupFlavor::OrthogonalO => "o",
        }
    }
}

impl fmt::Display for GroupFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupFlavor {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" | "linear-sp" => Ok(GroupFlavor::LinearSp),
            "metaplectic-sp" | "mp" | "metaplectic" => Ok(GroupFlavor::MetaplecticSp),
            "o" | "orthogonal" => Ok(GroupFlavor::OrthogonalO),
            _ => Err(OrbitError::Parse {
                what: "group flavor",
                input: s.to_string(),
            }),
        }
    }
}

fn not_pair_raisable(p: &Partition, i: u32, reason: impl Into<String>) -> OrbitError {
    OrbitError::NotPairRaisable {
        partition: p.to_string(),
        part: i,
        reason: reason.into(),
    }
}

fn not_quadruple_raisable(p: &Partition, i: u32, reason: impl Into<String>) -> OrbitError {
    OrbitError::NotQuadrupleRaisable {
        partition: p.to_string(),
        part: i,
        reason: reason.into(),
    }
}

fn check_pair_slot(flavor: WFlavor, p: &Partition, i: u32) -> Result<()> {
    if !flavor.slot_is_skew(i) {
        return Err(not_pair_raisable(
            p,
            i,
            format!("U_{i} is symmetric for a {flavor} form"),
        ));
    }
    if p.multiplicity(i) < 2 {
        return Err(not_pair_raisable(p, i, "multiplicity below 2"));
    }
    Ok(())
}

fn check_quadruple_slot(flavor: WFlavor, p: &Partition, i: u32) -> Result<()> {
    if flavor.slot_is_skew(i) {
        return Err(not_quadruple_raisable(
            p,
            i,
            format!("U_{i} is skew for a {flavor} form"),
        ));
    }
    if p.multiplicity(i) < 4 {
        return Err(not_quadruple_raisable(p, i, "multiplicity below 4"));
    }
    Ok(())
}

/// `i * #{parts j > i of opposite parity} + sum of the parts j < i of
/// opposite parity`.
fn m_formula(p: &Partition, i: u32) -> u64 {
    let mut above = 0u64;
    let mut below = 0u64;
    for &j in p.parts() {
        if j % 2 == i % 2 {
            continue;
        }
        if j > i {
            above += 1;
        } else {
            below += j as u64;
        }
    }
    i as u64 * above + below
}

/// The multiplicity `m` of `V_2` in `g(1)` under a long root `SL_2` of
/// `Sp(U_i)`, by the closed formula.
pub fn m_value(flavor: WFlavor, p: &Partition, i: u32) -> Result<u64> {
    check_pair_slot(flavor, p, i)?;
    Ok(m_formula(p, i))
}

/// The same `m`, summed part by part from `dim (V_i ⊗ V_j)(1)`.
pub fn m_value_direct(flavor: WFlavor, p: &Partition, i: u32) -> Result<u64> {
    check_pair_slot(flavor, p, i)?;
    let vi = SL2Module::irrep(i)?;
    let mut m = 0u64;
    for (j, mult) in p.multiplicities() {
        if j == i {
            continue;
        }
        let weight_one = vi.tensor(&SL2Module::irrep(j)?).weight_multiplicity(1);
        m += weight_one * mult as u64;
    }
    Ok(m)
}

/// The `m` of a quadruple move at a symmetric slot; `g(1)` then contains
/// `2m` copies of `V_2`.
pub fn m_quadruple(flavor: WFlavor, p: &Partition, i: u32) -> Result<u64> {
    check_quadruple_slot(flavor, p, i)?;
    Ok(m_formula(p, i))
}

/// Replaces a pair `(i, i)` by `(i+1, i-1)`.
pub fn pair_raise(p: &Partition, i: u32) -> Result<Partition> {
    if i == 0 || p.multiplicity(i) < 2 {
        return Err(not_pair_raisable(p, i, "multiplicity below 2"));
    }
    Ok(replace_parts(p, i, 2, &[i + 1, i - 1]))
}

/// Replaces a quadruple `(i, i, i, i)` by `(i+1, i+1, i-1, i-1)`.
///
/// Whether `U_i` actually has a two-dimensional isotropic subspace is not
/// visible in the partition and is left to the caller.
pub fn quadruple_raise(p: &Partition, i: u32) -> Result<Partition> {
    if i == 0 || p.multiplicity(i) < 4 {
        return Err(not_quadruple_raisable(p, i, "multiplicity below 4"));
    }
    Ok(replace_parts(p, i, 4, &[i + 1, i + 1, i - 1, i - 1]))
}

fn replace_parts(p: &Partition, i: u32, count: usize, with: &[u32]) -> Partition {
    let mut removed = 0;
    let mut parts: Vec<u32> = p
        .parts()
        .iter()
        .copied()
        .filter(|&x| {
            if x == i && removed < count {
                removed += 1;
                false
            } else {
                true
            }
        })
        .collect();
    parts.extend_from_slice(with);
    Partition::new(parts)
}

/// Part values at which the group can raise: skew slot, multiplicity at
/// least 2 and `m` of the parity the group needs. Ascending.
pub fn raisable_indices(group: GroupFlavor, p: &Partition) -> Result<Vec<u32>> {
    let w = group.w_flavor();
    require_classical(w, p)?;
    let mut out = Vec::new();
    for (i, mult) in p.multiplicities().into_iter().rev() {
        if w.slot_is_skew(i) && mult >= 2 && group.raises_with(m_formula(p, i)) {
            out.push(i);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaiseStep {
    pub index: u32,
    pub partition: Partition,
}

/// A maximal sequence of pair raises.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaiseChain {
    pub input: Partition,
    pub flavor: GroupFlavor,
    pub steps: Vec<RaiseStep>,
    pub terminal: Partition,
}

/// Raises at the smallest raisable index until none is left. The terminal
/// partition is special for the group.
pub fn raise_chain(group: GroupFlavor, p: &Partition) -> Result<RaiseChain> {
    let mut current = p.clone();
    let mut steps = Vec::new();
    while let Some(&i) = raisable_indices(group, &current)?.first() {
        current = pair_raise(&current, i)?;
        steps.push(RaiseStep {
            index: i,
            partition: current.clone(),
        });
    }
    Ok(RaiseChain {
        input: p.clone(),
        flavor: group,
        steps,
        terminal: current,
    })
}

/// Every terminal reachable by raising at any raisable index in any order.
pub fn all_chain_terminals(group: GroupFlavor, p: &Partition) -> Result<BTreeSet<Vec<u32>>> {
    let mut memo: HashMap<Partition, BTreeSet<Vec<u32>>> = HashMap::new();
    terminals_from(group, p, &mut memo)
}

fn terminals_from(
    group: GroupFlavor,
    p: &Partition,
    memo: &mut HashMap<Partition, BTreeSet<Vec<u32>>>,
) -> Result<BTreeSet<Vec<u32>>> {
    if let Some(done) = memo.get(p) {
        return Ok(done.clone());
    }
    let indices = raisable_indices(group, p)?;
    let mut out = BTreeSet::new();
    if indices.is_empty() {
        out.insert(p.parts().to_vec());
    }
    for i in indices {
        out.extend(terminals_from(group, &pair_raise(p, i)?, memo)?);
    }
    memo.insert(p.clone(), out.clone());
    Ok(out)
}
