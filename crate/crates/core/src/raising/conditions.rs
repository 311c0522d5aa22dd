use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{check_pair_slot, check_quadruple_slot, m_formula};
use crate::error::Result;
use crate::partitions::{require_classical, Partition, WFlavor};
use crate::sl2calc::{BigradedModule, SL2Module};

/// Outcome of checking the three conditions for one raising slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// All `sl2_c` weights of `g` lie in `[-2, 2]`.
    pub weights_bounded: bool,
    /// Multiplicity of `V_2` in `g(1)`, read off the bigrading. For a
    /// quadruple slot this is half of it.
    pub m: u64,
    /// The closed-form value for comparison.
    pub m_formula: u64,
    /// `g(1)` is `m V_2` (or `2m V_2`) plus trivial summands only.
    pub residual_trivial: bool,
    pub dim_g02: u64,
    pub dim_g22: u64,
    /// `dim g(0,2) = dim g(2,2) + 1`.
    pub cond3: bool,
    /// `g(j,2)` matches the square of `V_i ⊗ U_i` for every `j`; for a pair
    /// slot this is `dim E_i(j)`.
    pub e_consistent: bool,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.weights_bounded
            && self.m == self.m_formula
            && self.residual_trivial
            && self.cond3
            && self.e_consistent
    }
}

fn w_module(flavor: WFlavor, p: &Partition) -> Result<SL2Module> {
    require_classical(flavor, p)?;
    SL2Module::from_irreps(p.multiplicities().into_iter().map(|(j, m)| (j, m as u64)))
}

fn adjoint(flavor: WFlavor, w: &SL2Module) -> Result<SL2Module> {
    match flavor {
        WFlavor::SymplecticW => w.sym_power(2),
        WFlavor::OrthogonalW => w.ext_power(2),
    }
}

/// `dim g(j)` for the grading defined by the nilpotent with partition `p`.
pub fn graded_dims(flavor: WFlavor, p: &Partition) -> Result<BTreeMap<i32, u64>> {
    let g = adjoint(flavor, &w_module(flavor, p)?)?;
    Ok(g.weights().into_iter().collect())
}

/// `E_i`: `Λ²V_i` for even `i`, `S²V_i` for odd `i`.
pub fn e_module(i: u32) -> Result<SL2Module> {
    let v = SL2Module::irrep(i)?;
    if i.is_multiple_of(2) {
        v.ext_power(2)
    } else {
        v.sym_power(2)
    }
}

/// Bigraded `g` after splitting `U_i` as `copies · V_2` plus a trivial
/// complement under `sl2_c`.
fn bigraded_g(flavor: WFlavor, p: &Partition, i: u32, copies: u64) -> Result<BigradedModule> {
    let mut w = BigradedModule::default();
    for (j, mult) in p.multiplicities() {
        let u = if j == i {
            SL2Module::irrep(2)?
                .repeated(copies)
                .direct_sum(&SL2Module::trivial(mult as u64 - 2 * copies))
        } else {
            SL2Module::trivial(mult as u64)
        };
        w = w.direct_sum(&BigradedModule::outer(&SL2Module::irrep(j)?, &u));
    }
    match flavor {
        WFlavor::SymplecticW => w.sym_power(2),
        WFlavor::OrthogonalW => w.ext_power(2),
    }
}

fn report(
    flavor: WFlavor,
    g: &BigradedModule,
    i: u32,
    copies: u64,
    m_formula: u64,
) -> Result<ConditionReport> {
    let g1 = g.slice(1)?.decompose()?;
    let v2 = g1.get(&2).copied().unwrap_or(0);
    let residual_trivial = g1.keys().all(|&n| n == 1 || n == 2);

    // The l = 2 part only comes from the square of V_i ⊗ U_i.
    let u = SL2Module::irrep(2)?.repeated(copies);
    let (s2u, l2u) = (u.sym_power(2)?.weight_multiplicity(2), u.ext_power(2)?.weight_multiplicity(2));
    let v = SL2Module::irrep(i)?;
    let (s2v, l2v) = (v.sym_power(2)?, v.ext_power(2)?);
    let expected = |j: i32| match flavor {
        WFlavor::SymplecticW => s2v.weight_multiplicity(j) * s2u + l2v.weight_multiplicity(j) * l2u,
        WFlavor::OrthogonalW => s2v.weight_multiplicity(j) * l2u + l2v.weight_multiplicity(j) * s2u,
    };
    let max_j = 2 * i as i32;
    let e_consistent = (-max_j..=max_j).all(|j| g.multiplicity(j, 2) == expected(j));

    let (dim_g02, dim_g22) = (g.multiplicity(0, 2), g.multiplicity(2, 2));
    Ok(ConditionReport {
        weights_bounded: g.max_second_weight() <= 2,
        m: v2 / copies,
        m_formula,
        residual_trivial,
        dim_g02,
        dim_g22,
        cond3: dim_g02 == dim_g22 + 1,
        e_consistent,
    })
}

/// Checks the raising conditions at a pair slot `i` through the full
/// bigraded computation.
pub fn condition_check(flavor: WFlavor, p: &Partition, i: u32) -> Result<ConditionReport> {
    require_classical(flavor, p)?;
    check_pair_slot(flavor, p, i)?;
    let g = bigraded_g(flavor, p, i, 1)?;
    report(flavor, &g, i, 1, m_formula(p, i))
}

/// The quadruple analogue: `U_i` symmetric, split as `2 V_2` plus trivial.
/// `g(1)` then carries `2m` copies of `V_2`; `m` in the report is halved.
pub fn quadruple_condition_check(
    flavor: WFlavor,
    p: &Partition,
    i: u32,
) -> Result<ConditionReport> {
    require_classical(flavor, p)?;
    check_quadruple_slot(flavor, p, i)?;
    let g = bigraded_g(flavor, p, i, 2)?;
    report(flavor, &g, i, 2, m_formula(p, i))
}
