//! Integer partitions as the combinatorial data of classical nilpotent orbits.
//!
//! A nilpotent element of `sp(W)` or `o(W)` decomposes `W` under an sl2-triple
//! as a sum of irreducibles; the dimensions, with multiplicity, form a
//! partition of `dim W`. Parts whose multiplicity space carries a skew form
//! must occur an even number of times, which is the classical validity rule
//! implemented by [`is_classical`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{OrbitError, Result};

/// Largest total accepted by the exhaustive operations (enumeration and
/// brute-force expansions).
pub const MAX_TOTAL: u32 = 64;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Symmetry type of the ambient form on `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WFlavor {
    #[serde(rename = "sp")]
    SymplecticW,
    #[serde(rename = "o")]
    OrthogonalW,
}

impl WFlavor {
    /// Parity of the parts whose multiplicity space carries a skew form
    /// (and therefore must occur with even multiplicity).
    pub fn skew_parity(self) -> u32 {
        match self {
            WFlavor::SymplecticW => 1,
            WFlavor::OrthogonalW => 0,
        }
    }

    /// True when the multiplicity space `U_j` is skew for this flavor.
    pub fn slot_is_skew(self, j: u32) -> bool {
        j % 2 == self.skew_parity()
    }

    pub fn name(self) -> &'static str {
        match self {
            WFlavor::SymplecticW => "symplectic",
            WFlavor::OrthogonalW => "orthogonal",
        }
    }
}

impl fmt::Display for WFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WFlavor {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" | "symplectic" => Ok(WFlavor::SymplecticW),
            "o" | "orthogonal" => Ok(WFlavor::OrthogonalW),
            _ => Err(OrbitError::Parse {
                what: "form flavor",
                input: s.to_string(),
            }),
        }
    }
}

impl Partition {
    /// Builds a partition from arbitrary non-negative parts: sorts
    /// descending and drops zeros.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts equal to `j` (the dimension of `U_j`).
    pub fn multiplicity(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == j).count() as u32
    }

    /// Distinct part values with their multiplicities, largest first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn multiplicity_map(&self) -> BTreeMap<u32, u32> {
        self.multiplicities().into_iter().collect()
    }

    /// Prefix sums `p_1, p_1 + p_2, ...`.
    pub fn prefix_sums(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0u32, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Part at 1-based position `k`, zero beyond the last part.
    pub fn part_at(&self, k: usize) -> u32 {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = OrbitError;

    /// Parses the comma-separated syntax `"4,3,3,2"`. The empty string and
    /// `"[]"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|_| OrbitError::Parse {
                    what: "partition",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Vec::<u32>::deserialize(deserializer).map(Partition::new)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

/// Normalizing constructor; zeros vanish and the order is made descending.
pub fn make_partition(parts: &[u32]) -> Partition {
    Partition::new(parts.iter().copied())
}

/// Young-diagram transpose: the `k`-th part of the result counts the parts
/// of `p` that are at least `k`.
pub fn transpose(p: &Partition) -> Partition {
    let largest = p.parts.first().copied().unwrap_or(0);
    Partition {
        parts: (1..=largest)
            .map(|k| p.parts.iter().take_while(|&&x| x >= k).count() as u32)
            .collect(),
    }
}

/// Dominance order: `p >= q` iff every prefix sum of `p` is at least the
/// corresponding prefix sum of `q`.
pub fn dominates(p: &Partition, q: &Partition) -> Result<bool> {
    let (tp, tq) = (p.total(), q.total());
    if tp != tq {
        return Err(OrbitError::IncomparableSizes {
            left: tp,
            right: tq,
        });
    }
    let (mut sp, mut sq) = (0u32, 0u32);
    for k in 1..=p.len().max(q.len()) {
        sp += p.part_at(k);
        sq += q.part_at(k);
        if sp < sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dominance comparison as a partial order; `None` when incomparable or of
/// different totals.
pub fn dominance_cmp(p: &Partition, q: &Partition) -> Option<Ordering> {
    match (dominates(p, q).ok()?, dominates(q, p).ok()?) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}

/// Classical validity: parts whose multiplicity space is skew for `flavor`
/// (odd parts for symplectic `W`, even parts for orthogonal `W`) occur with
/// even multiplicity.
pub fn is_classical(flavor: WFlavor, p: &Partition) -> bool {
    p.multiplicities()
        .iter()
        .all(|&(j, m)| !flavor.slot_is_skew(j) || m % 2 == 0)
}

pub(crate) fn require_classical(flavor: WFlavor, p: &Partition) -> Result<()> {
    if is_classical(flavor, p) {
        Ok(())
    } else {
        Err(OrbitError::NotClassical {
            flavor: flavor.name().to_string(),
            partition: p.to_string(),
        })
    }
}

fn check_envelope(n: u32) -> Result<()> {
    if n > MAX_TOTAL {
        Err(OrbitError::TotalTooLarge {
            total: n,
            max: MAX_TOTAL,
        })
    } else {
        Ok(())
    }
}

/// All partitions of `n` in reverse lexicographic order, starting from
/// `[n]` and ending with `[1,...,1]`. This order is a linear extension of
/// dominance (a dominating partition always comes first).
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    check_envelope(n)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All classical partitions of `n` for `flavor`, in the order of
/// [`enumerate_partitions`].
pub fn enumerate_classical(flavor: WFlavor, n: u32) -> Result<Vec<Partition>> {
    if flavor == WFlavor::SymplecticW && n % 2 == 1 {
        return Err(OrbitError::OddSymplecticTotal(n));
    }
    Ok(enumerate_partitions(n)?
        .into_iter()
        .filter(|p| is_classical(flavor, p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        make_partition(parts)
    }

    #[test]
    fn normalizes_on_construction() {
        assert_eq!(p(&[1, 3, 0, 3]).parts(), &[3, 3, 1]);
        assert!(p(&[]).is_empty());
        assert_eq!(p(&[]).total(), 0);
        assert_eq!(p(&[4, 2]).parts(), &[4, 2]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&p(&[4, 2])), p(&[2, 2, 1, 1]));
        assert_eq!(transpose(&p(&[3, 3])), p(&[2, 2, 2]));
        assert_eq!(transpose(&p(&[4, 1, 1])), p(&[3, 1, 1, 1]));
        assert_eq!(transpose(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[4, 2]), &p(&[3, 3])).unwrap());
        assert!(dominates(&p(&[3, 3, 1, 1]), &p(&[3, 3, 1, 1])).unwrap());
        assert!(!dominates(&p(&[3, 3, 2]), &p(&[4, 2, 2])).unwrap());
        assert_eq!(
            dominates(&p(&[3]), &p(&[2])),
            Err(OrbitError::IncomparableSizes { left: 3, right: 2 })
        );
        assert_eq!(dominance_cmp(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])), None);
    }

    #[test]
    fn classical_examples() {
        assert!(is_classical(WFlavor::SymplecticW, &p(&[3, 3, 1, 1])));
        assert!(!is_classical(WFlavor::SymplecticW, &p(&[3, 1])));
        assert!(is_classical(WFlavor::OrthogonalW, &p(&[3, 1, 1, 1])));
        assert!(!is_classical(WFlavor::OrthogonalW, &p(&[2, 1])));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_classical(WFlavor::SymplecticW, 2).unwrap(),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            enumerate_classical(WFlavor::SymplecticW, 0).unwrap(),
            vec![Partition::empty()]
        );
        assert_eq!(
            enumerate_classical(WFlavor::OrthogonalW, 3).unwrap(),
            vec![p(&[3]), p(&[1, 1, 1])]
        );
        assert_eq!(
            enumerate_classical(WFlavor::SymplecticW, 5),
            Err(OrbitError::OddSymplecticTotal(5))
        );
        assert!(matches!(
            enumerate_partitions(65),
            Err(OrbitError::TotalTooLarge { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_reverse_lex() {
        let all = enumerate_partitions(6).unwrap();
        assert_eq!(all.len(), 11);
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
    }

    #[test]
    fn parses_text_syntax() {
        assert_eq!("4,3,3,2".parse::<Partition>().unwrap(), p(&[4, 3, 3, 2]));
        assert_eq!(" 1, 3 ,3".parse::<Partition>().unwrap(), p(&[3, 3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("4,x".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 3, 3, 2]).to_string(), "4,3,3,2");
    }

    #[test]
    fn json_is_a_descending_array() {
        let q: Partition = serde_json::from_str("[1,3,3]").unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), "[3,3,1]");
    }

    #[test]
    fn multiplicity_access() {
        let q = p(&[4, 3, 3, 2]);
        assert_eq!(q.multiplicity(3), 2);
        assert_eq!(q.multiplicity(5), 0);
        assert_eq!(q.multiplicities(), vec![(4, 1), (3, 2), (2, 1)]);
        assert_eq!(q.prefix_sums(), vec![4, 7, 10, 12]);
    }
}
