//! Specialness predicates and special expansions.
//!
//! The expansion of a classical partition is the dominance-smallest special
//! partition above it. [`special_expansion`] computes it by exhaustive
//! search over the classical partitions of the same total and fails if the
//! minimum is not unique; [`metaplectic_expansion_recipe`] is the closed-form
//! pair-bumping rule for the metaplectic case.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OrbitError, Result};
use crate::partitions::{
    dominates, enumerate_classical, is_classical, require_classical, transpose, Partition, WFlavor,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialFlavor {
    SymplecticSpecial,
    MetaplecticSpecial,
    OrthogonalSpecial,
}

impl SpecialFlavor {
    pub const ALL: [SpecialFlavor; 3] = [
        SpecialFlavor::SymplecticSpecial,
        SpecialFlavor::MetaplecticSpecial,
        SpecialFlavor::OrthogonalSpecial,
    ];

    /// The ambient form the partition must be classical for.
    pub fn w_flavor(self) -> WFlavor {
        match self {
            SpecialFlavor::SymplecticSpecial | SpecialFlavor::MetaplecticSpecial => {
                WFlavor::SymplecticW
            }
            SpecialFlavor::OrthogonalSpecial => WFlavor::OrthogonalW,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialFlavor::SymplecticSpecial => "symplectic-special",
            SpecialFlavor::MetaplecticSpecial => "metaplectic-special",
            SpecialFlavor::OrthogonalSpecial => "orthogonal-special",
        }
    }
}

impl fmt::Display for SpecialFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpecialFlavor {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "symplectic" | "sp" | "symplectic-special" => Ok(SpecialFlavor::SymplecticSpecial),
            "metaplectic" | "mp" | "metaplectic-special" => Ok(SpecialFlavor::MetaplecticSpecial),
            "orthogonal" | "o" | "orthogonal-special" => Ok(SpecialFlavor::OrthogonalSpecial),
            _ => Err(OrbitError::Parse {
                what: "special flavor",
                input: s.to_string(),
            }),
        }
    }
}

/// Number of even parts strictly larger than `i`, with multiplicity.
pub fn even_parts_above(p: &Partition, i: u32) -> u32 {
    p.parts().iter().filter(|&&j| j > i && j % 2 == 0).count() as u32
}

/// Number of odd parts strictly smaller than `i`, with multiplicity.
pub fn odd_parts_below(p: &Partition, i: u32) -> u32 {
    p.parts().iter().filter(|&&j| j < i && j % 2 == 1).count() as u32
}

/// Symplectic special: for every odd part `i` the number of even parts above
/// `i` is even; metaplectic special: that number is odd for every odd part.
/// Orthogonal special: for every even part `i` the number of odd parts below
/// `i` is even. Partitions without the relevant parts are special
/// vacuously.
pub fn is_special(flavor: SpecialFlavor, p: &Partition) -> Result<bool> {
    require_classical(flavor.w_flavor(), p)?;
    let distinct = p.multiplicities();
    Ok(match flavor {
        SpecialFlavor::SymplecticSpecial => distinct
            .iter()
            .filter(|(i, _)| i % 2 == 1)
            .all(|&(i, _)| even_parts_above(p, i).is_multiple_of(2)),
        SpecialFlavor::MetaplecticSpecial => distinct
            .iter()
            .filter(|(i, _)| i % 2 == 1)
            .all(|&(i, _)| even_parts_above(p, i) % 2 == 1),
        SpecialFlavor::OrthogonalSpecial => distinct
            .iter()
            .filter(|(i, _)| i % 2 == 0)
            .all(|&(i, _)| odd_parts_below(p, i).is_multiple_of(2)),
    })
}

/// The dominance-minimum of the special partitions dominating `p`.
///
/// Special partitions are their own expansions. Errors if no unique minimum
/// exists among the candidates.
pub fn special_expansion(flavor: SpecialFlavor, p: &Partition) -> Result<Partition> {
    let w = flavor.w_flavor();
    require_classical(w, p)?;
    if is_special(flavor, p)? {
        return Ok(p.clone());
    }
    let mut candidates = Vec::new();
    for q in enumerate_classical(w, p.total())? {
        if is_special(flavor, &q)? && dominates(&q, p)? {
            candidates.push(q);
        }
    }
    let mut minimal = Vec::new();
    for q in &candidates {
        let mut is_minimal = true;
        for r in &candidates {
            if r != q && dominates(q, r)? {
                is_minimal = false;
                break;
            }
        }
        if is_minimal {
            minimal.push(q.clone());
        }
    }
    match minimal.len() {
        1 => Ok(minimal.pop().expect("one element")),
        0 => Err(OrbitError::ExpansionNotWellDefined {
            partition: p.to_string(),
            reason: format!("no {} partition dominates it", flavor.name()),
        }),
        _ => Err(OrbitError::ExpansionNotWellDefined {
            partition: p.to_string(),
            reason: format!(
                "{} incomparable minimal {} partitions: {:?}",
                minimal.len(),
                flavor.name(),
                minimal
            ),
        }),
    }
}

/// Pair-bumping rule for the metaplectic expansion.
///
/// With `p = [p_1 >= p_2 >= ...]` (zero-padded), select every `i` with
/// `p_{2i-1} = p_{2i}` odd and either `2i - 2 = 0` or
/// `p_{2i-2} != p_{2i-1}`, then replace each selected pair by
/// `(p_{2i-1} + 1, p_{2i} - 1)`.
pub fn metaplectic_expansion_recipe(p: &Partition) -> Result<Partition> {
    require_classical(WFlavor::SymplecticW, p)?;
    let mut parts = p.parts().to_vec();
    let pairs = parts.len().div_ceil(2);
    let selected: Vec<usize> = (1..=pairs)
        .filter(|&i| {
            let (a, b) = (p.part_at(2 * i - 1), p.part_at(2 * i));
            a == b && a % 2 == 1 && (2 * i - 2 == 0 || p.part_at(2 * i - 2) != a)
        })
        .collect();
    for i in selected {
        parts[2 * i - 2] += 1;
        parts[2 * i - 1] -= 1;
    }
    Ok(Partition::new(parts))
}

/// Checks exhaustively that transpose maps the metaplectic-special
/// partitions of `n` bijectively onto the orthogonal-special partitions of
/// `n`.
pub fn transpose_duality_check(n: u32) -> Result<bool> {
    if n % 2 == 1 {
        return Err(OrbitError::OddSymplecticTotal(n));
    }
    let mut source = BTreeSet::new();
    for p in enumerate_classical(WFlavor::SymplecticW, n)? {
        if is_special(SpecialFlavor::MetaplecticSpecial, &p)? {
            source.insert(transpose(&p).parts().to_vec());
        }
    }
    let mut target = BTreeSet::new();
    for q in enumerate_classical(WFlavor::OrthogonalW, n)? {
        if is_special(SpecialFlavor::OrthogonalSpecial, &q)? {
            target.insert(q.parts().to_vec());
        }
    }
    Ok(source == target)
}

/// True iff `p` is classical for the flavor and special.
pub fn is_classical_special(flavor: SpecialFlavor, p: &Partition) -> bool {
    is_classical(flavor.w_flavor(), p) && is_special(flavor, p).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::make_partition;
    use SpecialFlavor::*;

    fn p(parts: &[u32]) -> Partition {
        make_partition(parts)
    }

    #[test]
    fn specialness_examples() {
        assert!(!is_special(SymplecticSpecial, &p(&[4, 1, 1])).unwrap());
        assert!(is_special(MetaplecticSpecial, &p(&[4, 1, 1])).unwrap());
        assert!(is_special(SymplecticSpecial, &p(&[2, 2])).unwrap());
        assert!(is_special(MetaplecticSpecial, &p(&[2, 2])).unwrap());
        assert!(matches!(
            is_special(SymplecticSpecial, &p(&[3, 1])),
            Err(OrbitError::NotClassical { .. })
        ));
        assert!(matches!(
            is_special(OrthogonalSpecial, &p(&[2, 1])),
            Err(OrbitError::NotClassical { .. })
        ));
        assert!(is_special(OrthogonalSpecial, &p(&[3, 1, 1, 1])).unwrap());
        assert!(!is_special(OrthogonalSpecial, &p(&[2, 2, 1])).unwrap());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(special_expansion(SymplecticSpecial, &p(&[4, 1, 1])).unwrap(), p(&[4, 2]));
        assert_eq!(
            special_expansion(MetaplecticSpecial, &p(&[3, 3, 1, 1])).unwrap(),
            p(&[4, 2, 2])
        );
        assert_eq!(special_expansion(SymplecticSpecial, &p(&[3, 3])).unwrap(), p(&[3, 3]));
        assert_eq!(
            special_expansion(OrthogonalSpecial, &p(&[2, 2, 1])).unwrap(),
            p(&[3, 1, 1])
        );
    }

    #[test]
    fn recipe_examples() {
        assert_eq!(metaplectic_expansion_recipe(&p(&[3, 3])).unwrap(), p(&[4, 2]));
        assert_eq!(
            metaplectic_expansion_recipe(&p(&[3, 3, 3, 3])).unwrap(),
            p(&[4, 3, 3, 2])
        );
        assert_eq!(metaplectic_expansion_recipe(&p(&[2, 2])).unwrap(), p(&[2, 2]));
        assert_eq!(metaplectic_expansion_recipe(&p(&[1, 1])).unwrap(), p(&[2]));
        assert!(metaplectic_expansion_recipe(&p(&[3, 1])).is_err());
    }

    #[test]
    fn duality_examples() {
        assert!(transpose_duality_check(0).unwrap());
        assert!(transpose_duality_check(4).unwrap());
        assert!(transpose_duality_check(12).unwrap());
        assert_eq!(transpose_duality_check(5), Err(OrbitError::OddSymplecticTotal(5)));
    }

    #[test]
    fn flavor_names_round_trip() {
        for f in SpecialFlavor::ALL {
            assert_eq!(f.name().parse::<SpecialFlavor>().unwrap(), f);
        }
    }
}
