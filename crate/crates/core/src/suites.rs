//! Exhaustive property sweeps over small partitions and the exceptional
//! tables. Each suite returns a [`SuiteReport`]; the command-line `verify`
//! and the acceptance tests are thin wrappers around [`run_suites`].

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exceptional::{self, ExceptionalGroup, ExceptionalOrbitRecord};
use crate::partitions::{
    dominance_cmp, dominates, enumerate_classical, enumerate_partitions, is_classical, transpose,
    Partition, WFlavor,
};
use crate::raising::{
    all_chain_terminals, condition_check, e_module, m_value, m_value_direct,
    quadruple_condition_check, raise_chain, raise_with_forms, FormSlot, GroupFlavor,
    OrbitWithForms, SquareClass,
};
use crate::sl2calc::SL2Module;
use crate::special::{
    even_parts_above, is_special, metaplectic_expansion_recipe, odd_parts_below,
    special_expansion, transpose_duality_check, SpecialFlavor,
};

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    /// The first few failing cases.
    pub witnesses: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    witnesses: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

/// Size limits for the sweeps. [`SuiteBounds::default`] gives the full
/// acceptance sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteBounds {
    pub recipe_total: u32,
    pub duality_total: u32,
    pub m_formula_total: u32,
    pub chain_total: u32,
    pub chain_order_total: u32,
    pub e_module_max: u32,
    pub condition_total: u32,
    pub forms_total: u32,
    pub transpose_total: u32,
    pub dominance_total: u32,
    pub classical_total: u32,
    pub expansion_total: u32,
    pub sl2_dim: u32,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            recipe_total: 20,
            duality_total: 20,
            m_formula_total: 24,
            chain_total: 16,
            chain_order_total: 12,
            e_module_max: 30,
            condition_total: 12,
            forms_total: 12,
            transpose_total: 30,
            dominance_total: 20,
            classical_total: 24,
            expansion_total: 16,
            sl2_dim: 40,
        }
    }
}

impl SuiteBounds {
    /// Caps every partition total at `max_n`.
    pub fn capped(max_n: u32) -> Self {
        let d = SuiteBounds::default();
        SuiteBounds {
            recipe_total: d.recipe_total.min(max_n),
            duality_total: d.duality_total.min(max_n),
            m_formula_total: d.m_formula_total.min(max_n),
            chain_total: d.chain_total.min(max_n),
            chain_order_total: d.chain_order_total.min(max_n),
            condition_total: d.condition_total.min(max_n),
            forms_total: d.forms_total.min(max_n),
            transpose_total: d.transpose_total.min(max_n),
            dominance_total: d.dominance_total.min(max_n),
            classical_total: d.classical_total.min(max_n),
            expansion_total: d.expansion_total.min(max_n),
            ..d
        }
    }
}

/// Names of the property suites, in run order.
pub const PROPERTY_SUITES: &[&str] = &[
    "partition-laws",
    "sl2-laws",
    "special-laws",
    "metaplectic-recipe",
    "transpose-duality",
    "m-formula",
    "raise-chain",
    "condition-laws",
    "form-tracking",
];

/// Names of the table suites, in run order.
pub const TABLE_SUITES: &[&str] = &["table-m-values", "table-classification", "root-system"];

fn classical(flavor: WFlavor, max_total: u32) -> Vec<Partition> {
    (0..=max_total)
        .filter(|n| flavor == WFlavor::OrthogonalW || n % 2 == 0)
        .flat_map(|n| enumerate_classical(flavor, n).unwrap_or_default())
        .collect()
}

const W_FLAVORS: [WFlavor; 2] = [WFlavor::SymplecticW, WFlavor::OrthogonalW];

fn partition_laws(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for n in 0..=b.transpose_total {
        for p in enumerate_partitions(n).unwrap_or_default() {
            t.check(transpose(&transpose(&p)) == p, || format!("transpose twice [{p}]"));
        }
    }

    // Dominance as bitsets; reflexivity, antisymmetry and transitivity.
    for n in 0..=b.dominance_total {
        let ps = enumerate_partitions(n).unwrap_or_default();
        let words = ps.len().div_ceil(64);
        let mut below = vec![vec![0u64; words]; ps.len()];
        for (i, p) in ps.iter().enumerate() {
            for (j, q) in ps.iter().enumerate() {
                if dominates(p, q).unwrap_or(false) {
                    below[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let has = |i: usize, j: usize| below[i][j / 64] >> (j % 64) & 1 == 1;
        for i in 0..ps.len() {
            t.check(has(i, i), || format!("[{}] does not dominate itself", ps[i]));
            for j in 0..ps.len() {
                if i != j && has(i, j) {
                    t.check(!has(j, i), || format!("[{}] and [{}] dominate each other", ps[i], ps[j]));
                    let closed = below[j].iter().zip(&below[i]).all(|(bj, bi)| bj & !bi == 0);
                    t.check(closed, || format!("transitivity fails through [{}] ≥ [{}]", ps[i], ps[j]));
                }
            }
        }
    }

    for flavor in W_FLAVORS {
        for n in 0..=b.classical_total {
            if flavor == WFlavor::SymplecticW && n % 2 == 1 {
                continue;
            }
            let direct = enumerate_classical(flavor, n).unwrap_or_default();
            let filtered: Vec<Partition> = enumerate_partitions(n)
                .unwrap_or_default()
                .into_iter()
                .filter(|p| is_classical(flavor, p))
                .collect();
            t.check(direct == filtered, || format!("{flavor} enumeration of {n}"));
        }
    }

    for p in classical(WFlavor::SymplecticW, b.classical_total) {
        let lhs = is_classical(WFlavor::OrthogonalW, &transpose(&p));
        let rhs = is_special(SpecialFlavor::MetaplecticSpecial, &p).unwrap_or(!lhs);
        t.check(lhs == rhs, || format!("transpose of [{p}] vs metaplectic specialness"));
    }
    t
}

fn sl2_laws(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    let max = b.sl2_dim;
    let v = |n: u32| SL2Module::irrep(n).expect("n ≥ 1");
    let symmetric = |m: &SL2Module| m.weights().iter().all(|&(w, k)| m.weight_multiplicity(-w) == k);
    let binom = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    };

    let mut modules: Vec<SL2Module> = (1..=max).map(v).collect();
    for i in 1..=max {
        for j in i..=max - i {
            modules.push(v(i).direct_sum(&v(j)));
        }
    }
    for m in &modules {
        let d = m.dim();
        for k in [2u8, 3] {
            let e = m.ext_power(k).expect("k ≤ 3");
            let s = m.sym_power(k).expect("k ≤ 3");
            t.check(e.dim() == binom(d, k as u64), || format!("dim Λ^{k}({m})"));
            t.check(s.dim() == binom(d + k as u64 - 1, k as u64), || format!("dim S^{k}({m})"));
            t.check(symmetric(&e) && symmetric(&s), || format!("weight symmetry of powers of {m}"));
        }
        let sq = m.tensor(m);
        t.check(sq.dim() == d * d, || format!("dim {m} ⊗ {m}"));
        let rebuilt = m.decompose().and_then(SL2Module::from_irreps);
        t.check(rebuilt.as_ref() == Ok(m), || format!("decompose/rebuild {m}"));
    }

    for i in 1..=15u32 {
        for j in 1..=15u32 {
            let w1 = v(i).tensor(&v(j)).weight_multiplicity(1);
            let want = if (i + j) % 2 == 1 { i.min(j) as u64 } else { 0 };
            t.check(w1 == want, || format!("dim (V_{i} ⊗ V_{j})(1) = {w1}"));
        }
    }
    for i in 2..=max {
        let got = v(i).tensor(&v(2)).decompose();
        let want = [(i - 1, 1), (i + 1, 1)].into_iter().collect();
        t.check(got == Ok(want), || format!("V_{i} ⊗ V_2"));
    }
    for n in 1..=20 {
        let lhs = v(n).ext_power(2).expect("k = 2").direct_sum(&v(n).sym_power(2).expect("k = 2"));
        t.check(lhs == v(n).tensor(&v(n)), || format!("Λ² ⊕ S² of V_{n}"));
    }
    t
}

fn special_laws(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for f in SpecialFlavor::ALL {
        let ps = classical(f.w_flavor(), b.expansion_total);
        let mut exp: HashMap<&Partition, Partition> = HashMap::new();
        for p in &ps {
            let Some(e) = t.check_result(special_expansion(f, p), || format!("{f} expansion of [{p}]"))
            else {
                continue;
            };
            let special = is_special(f, p).unwrap_or(false);
            t.check(dominates(&e, p).unwrap_or(false), || format!("{f}: [{e}] ≱ [{p}]"));
            t.check((e == *p) == special, || format!("{f}: fixed point [{p}]"));
            let again = special_expansion(f, &e);
            t.check(again.as_ref() == Ok(&e), || format!("{f}: not idempotent at [{p}]"));
            exp.insert(p, e);
        }
        for p in &ps {
            for q in &ps {
                if p.total() != q.total() || dominance_cmp(p, q) != Some(std::cmp::Ordering::Greater) {
                    continue;
                }
                if let (Some(ep), Some(eq)) = (exp.get(p), exp.get(q)) {
                    t.check(dominates(ep, eq).unwrap_or(false), || {
                        format!("{f}: not monotone on [{p}] ≥ [{q}]")
                    });
                }
            }
        }
    }
    t
}

fn metaplectic_recipe(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for p in classical(WFlavor::SymplecticW, b.recipe_total) {
        let recipe = metaplectic_expansion_recipe(&p);
        let brute = special_expansion(SpecialFlavor::MetaplecticSpecial, &p);
        t.check(recipe.is_ok() && recipe == brute, || {
            format!("[{p}]: recipe {recipe:?}, brute force {brute:?}")
        });
    }
    t
}

fn transpose_duality(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for n in (0..=b.duality_total).step_by(2) {
        let ok = transpose_duality_check(n);
        t.check(ok == Ok(true), || format!("duality at {n}: {ok:?}"));
    }
    t
}

fn m_formula(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for flavor in W_FLAVORS {
        for p in classical(flavor, b.m_formula_total) {
            for (i, mult) in p.multiplicities() {
                if !flavor.slot_is_skew(i) || mult < 2 {
                    continue;
                }
                let (m, direct) = (m_value(flavor, &p, i), m_value_direct(flavor, &p, i));
                t.check(m.is_ok() && m == direct, || format!("{flavor} [{p}] i={i}: {m:?} vs {direct:?}"));
                let count = match flavor {
                    WFlavor::SymplecticW => even_parts_above(&p, i),
                    WFlavor::OrthogonalW => odd_parts_below(&p, i),
                };
                if let Ok(m) = m {
                    t.check(m % 2 == (count % 2) as u64, || {
                        format!("{flavor} [{p}] i={i}: m={m} but count {count}")
                    });
                }
            }
        }
    }
    t
}

fn raise_chains(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for g in GroupFlavor::ALL {
        for p in classical(g.w_flavor(), b.chain_total) {
            let Some(chain) = t.check_result(raise_chain(g, &p), || format!("{g} chain of [{p}]"))
            else {
                continue;
            };
            let expansion = special_expansion(g.special_flavor(), &p);
            t.check(expansion.as_ref() == Ok(&chain.terminal), || {
                format!("{g} [{p}]: chain ends at [{}], expansion {expansion:?}", chain.terminal)
            });
            t.check(chain.steps.len() as u32 <= p.total() / 2, || format!("{g} [{p}]: chain too long"));
            if p.total() <= b.chain_order_total {
                let all = all_chain_terminals(g, &p);
                let unique = matches!(&all, Ok(s) if s.len() == 1 && s.contains(chain.terminal.parts()));
                t.check(unique, || format!("{g} [{p}]: terminals {all:?}"));
            }
        }
    }
    t
}

fn condition_laws(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    for i in 1..=b.e_module_max {
        let e = e_module(i).expect("i ≥ 1");
        t.check(e.weight_multiplicity(0) == e.weight_multiplicity(2) + 1, || {
            format!("dim E_{i}(0) ≠ dim E_{i}(2) + 1")
        });
    }
    for flavor in W_FLAVORS {
        for p in classical(flavor, b.condition_total) {
            for (i, mult) in p.multiplicities() {
                if flavor.slot_is_skew(i) && mult >= 2 {
                    if let Some(r) = t.check_result(condition_check(flavor, &p, i), || {
                        format!("{flavor} [{p}] i={i}")
                    }) {
                        t.check(r.all_hold(), || format!("{flavor} [{p}] i={i}: {r:?}"));
                    }
                }
                if !flavor.slot_is_skew(i) && mult >= 4 {
                    if let Some(r) = t.check_result(quadruple_condition_check(flavor, &p, i), || {
                        format!("{flavor} [{p}] quadruple i={i}")
                    }) {
                        let ok = r.weights_bounded && r.m == r.m_formula && r.residual_trivial && r.e_consistent;
                        t.check(ok, || format!("{flavor} [{p}] quadruple i={i}: {r:?}"));
                    }
                }
            }
        }
    }
    t
}

fn sym_len(o: &OrbitWithForms, j: u32) -> usize {
    match o.forms.get(&j) {
        Some(FormSlot::Sym { diag }) => diag.len(),
        _ => 0,
    }
}

fn last_class(o: &OrbitWithForms, j: u32) -> Option<SquareClass> {
    match o.forms.get(&j) {
        Some(FormSlot::Sym { diag }) => diag.last().copied(),
        _ => None,
    }
}

/// Raises at the smallest skew slot with room until none is left, checking
/// the form bookkeeping at each step.
fn track_forms(t: &mut Tally, start: OrbitWithForms, a: SquareClass) {
    let mut o = start;
    loop {
        let next_slot = o
            .forms
            .iter()
            .find(|(_, s)| matches!(s, FormSlot::Skew { dim } if *dim >= 2))
            .map(|(&i, _)| i);
        let Some(i) = next_slot else { break };
        let Some(r) = t.check_result(raise_with_forms(&o, i, a), || {
            format!("raise [{}] at {i} with a = {a}", o.partition)
        }) else {
            break;
        };
        let b = a * SquareClass::from_integer(i as i64).expect("i ≥ 1");
        let mut ok = r.validate().is_ok() && r.total() == o.total();
        ok &= sym_len(&r, i + 1) == sym_len(&o, i + 1) + 1 && last_class(&r, i + 1) == Some(b);
        if i > 1 {
            ok &= sym_len(&r, i - 1) == sym_len(&o, i - 1) + 1 && last_class(&r, i - 1) == Some(b);
        }
        t.check(ok, || format!("forms after raising [{}] at {i} with a = {a}", o.partition));
        o = r;
    }
}

fn form_tracking(b: &SuiteBounds) -> Tally {
    let mut t = Tally::default();
    let classes: Vec<SquareClass> = (-12i64..=12)
        .filter(|&a| a != 0)
        .map(|a| SquareClass::from_integer(a).expect("nonzero"))
        .collect();
    for flavor in W_FLAVORS {
        for p in classical(flavor, b.forms_total) {
            let Ok(o) = OrbitWithForms::with_unit_forms(flavor, p) else {
                continue;
            };
            for &a in &classes {
                track_forms(&mut t, o.clone(), a);
            }
        }
    }
    t
}

fn printed_m_values() -> Vec<(ExceptionalGroup, &'static [u64])> {
    use ExceptionalGroup::*;
    vec![
        (G2, &[1]),
        (F4, &[5, 2, 3]),
        (E6, &[9, 5, 3]),
        (E7, &[15, 7, 9, 5, 3, 5, 5, 3]),
        (E8, &[27, 15, 21, 17, 9, 15, 7, 9, 5, 10, 9, 5, 3, 5, 5, 3]),
    ]
}

fn table_m_values(rows: &[ExceptionalOrbitRecord]) -> Tally {
    let mut t = Tally::default();
    for (group, printed) in printed_m_values() {
        let mut got = Vec::new();
        for r in rows.iter().filter(|r| r.group == group && r.expected.m().is_some()) {
            let rec = (0..r.cases.len())
                .filter_map(|i| exceptional::recompute_m(r, i).ok())
                .find(|rec| rec.residual_fixed);
            match rec {
                Some(rec) => got.push(rec.m),
                None => t.check(false, || format!("{}: no case with fixed residual", r.id())),
            }
        }
        t.check(got.len() == printed.len(), || {
            format!("{group}: {} numeric rows, {} printed values", got.len(), printed.len())
        });
        for (k, (g, p)) in got.iter().zip(printed.iter()).enumerate() {
            t.check(g == p, || format!("{group} numeric row {}: recomputed {g}, printed {p}", k + 1));
        }
    }
    t
}

fn table_classification(rows: &[ExceptionalOrbitRecord]) -> Tally {
    let mut t = Tally::default();
    for r in rows {
        let got = exceptional::classify_row(r);
        t.check(got.is_ok(), || format!("{}: {}", r.id(), got.unwrap_err()));
    }
    t
}

fn root_system_suite(rows: &[ExceptionalOrbitRecord]) -> Tally {
    let mut t = Tally::default();
    let counts: Vec<usize> = ExceptionalGroup::ALL
        .iter()
        .map(|&g| exceptional::root_system(g).len())
        .collect();
    t.check(counts == [12, 48, 72, 126, 240], || format!("root counts {counts:?}"));
    for c in exceptional::calibrate(rows) {
        if c.builtin {
            t.check(c.matches_all(), || format!("{} built-in order: {:?}/{}", c.group, c.matched, c.rows));
        } else if c.matches_all() {
            t.check(false, || format!("{} also matched by {}", c.group, c.candidate));
        }
    }
    for rep in exceptional::verify_table(rows) {
        t.check(rep.passed(), || format!("{} {}: {}", rep.group, rep.label, rep.failures.join("; ")));
    }
    t
}

/// Runs one named suite. Table suites use `rows`.
pub fn run_suite(name: &str, bounds: &SuiteBounds, rows: &[ExceptionalOrbitRecord]) -> Option<SuiteReport> {
    let start = Instant::now();
    let tally = match name {
        "partition-laws" => partition_laws(bounds),
        "sl2-laws" => sl2_laws(bounds),
        "special-laws" => special_laws(bounds),
        "metaplectic-recipe" => metaplectic_recipe(bounds),
        "transpose-duality" => transpose_duality(bounds),
        "m-formula" => m_formula(bounds),
        "raise-chain" => raise_chains(bounds),
        "condition-laws" => condition_laws(bounds),
        "form-tracking" => form_tracking(bounds),
        "table-m-values" => table_m_values(rows),
        "table-classification" => table_classification(rows),
        "root-system" => root_system_suite(rows),
        _ => return None,
    };
    Some(SuiteReport {
        name: name.to_string(),
        checked: tally.checked,
        failed: tally.failed,
        witnesses: tally.witnesses,
        elapsed: start.elapsed(),
    })
}

/// Runs suites in parallel; reports come back in the order of `names`.
/// Unknown names are skipped.
pub fn run_suites(names: &[&str], bounds: &SuiteBounds, rows: &[ExceptionalOrbitRecord]) -> Vec<SuiteReport> {
    names
        .par_iter()
        .filter_map(|n| run_suite(n, bounds, rows))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_property_suites_pass() {
        let rows = exceptional::table();
        for rep in run_suites(PROPERTY_SUITES, &SuiteBounds::capped(8), rows) {
            assert!(rep.passed(), "{}: {:?}", rep.name, rep.witnesses);
            assert!(rep.checked > 0, "{}", rep.name);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteBounds::default(), &[]).is_none());
    }
}
