//! Library results against independent brute-force computations.

use std::collections::BTreeMap;

use orbits_core::partitions::{enumerate_classical, enumerate_partitions, make_partition, Partition};
use orbits_core::raising::{m_value, m_value_direct};
use orbits_core::sl2calc::SL2Module;
use orbits_core::special::{is_special, metaplectic_expansion_recipe, special_expansion};
use orbits_core::{SpecialFlavor, WFlavor};
use proptest::prelude::*;

/// All partitions of `n` with parts at most `max`, largest part first.
fn naive_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in naive_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn naive_classical(flavor: WFlavor, p: &[u32]) -> bool {
    let bad_parity = match flavor {
        WFlavor::SymplecticW => 1,
        WFlavor::OrthogonalW => 0,
    };
    p.iter()
        .filter(|&&x| x % 2 == bad_parity)
        .all(|&x| p.iter().filter(|&&y| y == x).count() % 2 == 0)
}

#[test]
fn partition_counts_match_naive_enumeration() {
    // p(n) for n = 0..=15
    let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];
    for (n, &count) in known.iter().enumerate() {
        let lib: Vec<Vec<u32>> = enumerate_partitions(n as u32)
            .unwrap()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(lib.len(), count);
        assert_eq!(lib, naive_partitions(n as u32, n as u32), "order at {n}");
    }
}

#[test]
fn classical_enumeration_matches_naive_filter() {
    for flavor in [WFlavor::SymplecticW, WFlavor::OrthogonalW] {
        for n in 0..=18u32 {
            if flavor == WFlavor::SymplecticW && n % 2 == 1 {
                continue;
            }
            let want: Vec<Vec<u32>> = naive_partitions(n, n)
                .into_iter()
                .filter(|p| naive_classical(flavor, p))
                .collect();
            let got: Vec<Vec<u32>> = enumerate_classical(flavor, n)
                .unwrap()
                .iter()
                .map(|p| p.parts().to_vec())
                .collect();
            assert_eq!(got, want, "{flavor} {n}");
        }
    }
}

/// Dominance by prefix sums, written out directly.
fn naive_dominates(p: &[u32], q: &[u32]) -> bool {
    let len = p.len().max(q.len());
    let (mut a, mut b) = (0, 0);
    for k in 0..len {
        a += p.get(k).copied().unwrap_or(0);
        b += q.get(k).copied().unwrap_or(0);
        if a < b {
            return false;
        }
    }
    true
}

/// Minimal special partitions above `p`, found by scanning everything.
fn naive_expansion(flavor: SpecialFlavor, p: &Partition) -> Vec<Vec<u32>> {
    let w = flavor.w_flavor();
    let n = p.total();
    let specials: Vec<Vec<u32>> = naive_partitions(n, n)
        .into_iter()
        .filter(|q| naive_classical(w, q))
        .filter(|q| is_special(flavor, &make_partition(q)).unwrap())
        .filter(|q| naive_dominates(q, p.parts()))
        .collect();
    specials
        .iter()
        .filter(|q| !specials.iter().any(|r| r != *q && naive_dominates(q, r)))
        .cloned()
        .collect()
}

#[test]
fn expansions_match_naive_minimum() {
    for f in SpecialFlavor::ALL {
        for n in 0..=14 {
            if f.w_flavor() == WFlavor::SymplecticW && n % 2 == 1 {
                continue;
            }
            for p in enumerate_classical(f.w_flavor(), n).unwrap() {
                let naive = naive_expansion(f, &p);
                assert_eq!(naive.len(), 1, "{f} [{p}] has minima {naive:?}");
                assert_eq!(special_expansion(f, &p).unwrap().parts(), &naive[0][..]);
            }
        }
    }
}

#[test]
fn recipe_matches_naive_minimum() {
    for n in (0..=16).step_by(2) {
        for p in enumerate_classical(WFlavor::SymplecticW, n).unwrap() {
            let naive = naive_expansion(SpecialFlavor::MetaplecticSpecial, &p);
            assert_eq!(metaplectic_expansion_recipe(&p).unwrap().parts(), &naive[0][..], "[{p}]");
        }
    }
}

/// `m` straight from the definition: the weight-1 space of
/// `V_i ⊗ V_j`, summed over the parts `j ≠ i`, found by listing weights.
fn naive_m(p: &Partition, i: u32) -> u64 {
    let mut m = 0;
    for &j in p.parts().iter().filter(|&&j| j != i) {
        // weights of V_i ⊗ V_j
        let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
        for a in 0..i as i32 {
            for b in 0..j as i32 {
                let w = (i as i32 - 1 - 2 * a) + (j as i32 - 1 - 2 * b);
                *counts.entry(w).or_default() += 1;
            }
        }
        m += counts.get(&1).copied().unwrap_or(0);
    }
    m
}

#[test]
fn m_values_match_weight_counting() {
    for (flavor, max) in [(WFlavor::SymplecticW, 18), (WFlavor::OrthogonalW, 15)] {
        for n in 0..=max {
            let Ok(ps) = enumerate_classical(flavor, n) else { continue };
            for p in ps {
                for (i, mult) in p.multiplicities() {
                    if !flavor.slot_is_skew(i) || mult < 2 {
                        continue;
                    }
                    let want = naive_m(&p, i);
                    assert_eq!(m_value(flavor, &p, i).unwrap(), want, "{flavor} [{p}] {i}");
                    assert_eq!(m_value_direct(flavor, &p, i).unwrap(), want);
                }
            }
        }
    }
}

/// Basis weights of a module, one entry per basis vector.
fn basis(m: &SL2Module) -> Vec<i32> {
    m.weights()
        .into_iter()
        .flat_map(|(w, k)| std::iter::repeat_n(w, k as usize))
        .collect()
}

fn weights_of(list: impl IntoIterator<Item = i32>) -> BTreeMap<i32, u64> {
    let mut out = BTreeMap::new();
    for w in list {
        *out.entry(w).or_default() += 1;
    }
    out
}

fn naive_ext(b: &[i32], k: usize) -> BTreeMap<i32, u64> {
    let n = b.len();
    let mut sums = Vec::new();
    match k {
        2 => {
            for x in 0..n {
                for y in x + 1..n {
                    sums.push(b[x] + b[y]);
                }
            }
        }
        3 => {
            for x in 0..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        sums.push(b[x] + b[y] + b[z]);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    weights_of(sums)
}

fn naive_sym(b: &[i32], k: usize) -> BTreeMap<i32, u64> {
    let n = b.len();
    let mut sums = Vec::new();
    match k {
        2 => {
            for x in 0..n {
                for y in x..n {
                    sums.push(b[x] + b[y]);
                }
            }
        }
        3 => {
            for x in 0..n {
                for y in x..n {
                    for z in y..n {
                        sums.push(b[x] + b[y] + b[z]);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    weights_of(sums)
}

fn module_strategy() -> impl Strategy<Value = SL2Module> {
    prop::collection::vec((1u32..=7, 1u64..=2), 1..=3)
        .prop_map(|irreps| SL2Module::from_irreps(irreps).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn powers_match_subset_sums(m in module_strategy()) {
        let b = basis(&m);
        for k in [2usize, 3] {
            let ext: BTreeMap<i32, u64> = m.ext_power(k as u8).unwrap().weights().into_iter().collect();
            let sym: BTreeMap<i32, u64> = m.sym_power(k as u8).unwrap().weights().into_iter().collect();
            prop_assert_eq!(ext, naive_ext(&b, k));
            prop_assert_eq!(sym, naive_sym(&b, k));
        }
    }

    #[test]
    fn tensor_matches_pairwise_sums(a in module_strategy(), c in module_strategy()) {
        let (ba, bc) = (basis(&a), basis(&c));
        let naive = weights_of(ba.iter().flat_map(|x| bc.iter().map(move |y| x + y)));
        let got: BTreeMap<i32, u64> = a.tensor(&c).weights().into_iter().collect();
        prop_assert_eq!(got, naive);
    }
}
