use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_pair_slot, pair_raise};
use crate::error::{OrbitError, Result};
use crate::partitions::{require_classical, Partition, WFlavor};

/// A nonzero rational modulo squares: a sign and a square-free magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquareClass {
    sign: i8,
    magnitude: u64,
}

fn square_free_part(mut n: u64) -> u64 {
    let mut out = 1;
    let mut f = 2;
    while f * f <= n {
        let mut odd = false;
        while n.is_multiple_of(f) {
            n /= f;
            odd = !odd;
        }
        if odd {
            out *= f;
        }
        f += 1;
    }
    out * n
}

impl SquareClass {
    pub const ONE: SquareClass = SquareClass {
        sign: 1,
        magnitude: 1,
    };

    pub fn from_integer(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(OrbitError::ZeroSquareClass);
        }
        Ok(SquareClass {
            sign: if n < 0 { -1 } else { 1 },
            magnitude: square_free_part(n.unsigned_abs()),
        })
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn magnitude(self) -> u64 {
        self.magnitude
    }

}

impl std::ops::Mul for SquareClass {
    type Output = SquareClass;

    fn mul(self, other: SquareClass) -> SquareClass {
        let g = gcd(self.magnitude, other.magnitude);
        SquareClass {
            sign: self.sign * other.sign,
            magnitude: (self.magnitude / g) * (other.magnitude / g),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        write!(f, "{}", self.magnitude)
    }
}

/// The form on a multiplicity space `U_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FormSlot {
    Skew { dim: u32 },
    /// Diagonal of the symmetric form, one square class per basis vector.
    Sym { diag: Vec<SquareClass> },
}

impl FormSlot {
    pub fn dim(&self) -> u32 {
        match self {
            FormSlot::Skew { dim } => *dim,
            FormSlot::Sym { diag } => diag.len() as u32,
        }
    }
}

/// A nilpotent orbit together with the forms on its multiplicity spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitWithForms {
    pub flavor: WFlavor,
    pub partition: Partition,
    pub forms: BTreeMap<u32, FormSlot>,
}

impl OrbitWithForms {
    pub fn new(flavor: WFlavor, partition: Partition, forms: BTreeMap<u32, FormSlot>) -> Result<Self> {
        let o = OrbitWithForms {
            flavor,
            partition,
            forms,
        };
        o.validate()?;
        Ok(o)
    }

    /// Every symmetric slot gets the unit form `⟨1, ..., 1⟩`.
    pub fn with_unit_forms(flavor: WFlavor, partition: Partition) -> Result<Self> {
        let forms = partition
            .multiplicities()
            .into_iter()
            .map(|(j, m)| {
                let slot = if flavor.slot_is_skew(j) {
                    FormSlot::Skew { dim: m }
                } else {
                    FormSlot::Sym {
                        diag: vec![SquareClass::ONE; m as usize],
                    }
                };
                (j, slot)
            })
            .collect();
        Self::new(flavor, partition, forms)
    }

    pub fn validate(&self) -> Result<()> {
        require_classical(self.flavor, &self.partition)?;
        let mults = self.partition.multiplicity_map();
        if mults.keys().ne(self.forms.keys()) {
            return Err(OrbitError::InconsistentForms(format!(
                "slots {:?} do not match the parts of [{}]",
                self.forms.keys().collect::<Vec<_>>(),
                self.partition
            )));
        }
        for (j, slot) in &self.forms {
            if slot.dim() != mults[j] {
                return Err(OrbitError::InconsistentForms(format!(
                    "U_{j} has dimension {} but part {j} occurs {} times",
                    slot.dim(),
                    mults[j]
                )));
            }
            match (slot, self.flavor.slot_is_skew(*j)) {
                (FormSlot::Skew { dim }, true) if dim % 2 == 0 => {}
                (FormSlot::Sym { .. }, false) => {}
                _ => {
                    return Err(OrbitError::InconsistentForms(format!(
                        "U_{j} has the wrong form type for a {} space",
                        self.flavor
                    )))
                }
            }
        }
        Ok(())
    }

    /// `Σ j · dim U_j`, the dimension of `W`.
    pub fn total(&self) -> u32 {
        self.forms.iter().map(|(j, s)| j * s.dim()).sum()
    }
}

/// Pair-raises at `i` and tracks forms: the skew slot `U_i` loses a
/// hyperbolic plane and the symmetric slots `U_{i±1}` each gain `⟨a·i⟩`.
pub fn raise_with_forms(o: &OrbitWithForms, i: u32, a: SquareClass) -> Result<OrbitWithForms> {
    o.validate()?;
    check_pair_slot(o.flavor, &o.partition, i)?;
    let partition = pair_raise(&o.partition, i)?;
    let b = a * SquareClass::from_integer(i as i64)?;

    let mut forms = o.forms.clone();
    match forms.get_mut(&i) {
        Some(FormSlot::Skew { dim }) if *dim > 2 => *dim -= 2,
        _ => {
            forms.remove(&i);
        }
    }
    let neighbours = if i > 1 { vec![i + 1, i - 1] } else { vec![i + 1] };
    for j in neighbours {
        match forms.entry(j).or_insert(FormSlot::Sym { diag: Vec::new() }) {
            FormSlot::Sym { diag } => diag.push(b),
            FormSlot::Skew { .. } => {
                return Err(OrbitError::InconsistentForms(format!(
                    "U_{j} is skew next to the skew slot U_{i}"
                )))
            }
        }
    }
    OrbitWithForms::new(o.flavor, partition, forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::make_partition;

    fn sq(n: i64) -> SquareClass {
        SquareClass::from_integer(n).unwrap()
    }

    #[test]
    fn square_classes() {
        assert_eq!(sq(4), SquareClass::ONE);
        assert_eq!(sq(12).magnitude(), 3);
        assert_eq!(sq(-18).to_string(), "-2");
        assert_eq!(sq(6) * sq(10), sq(15));
        assert_eq!(sq(-3) * sq(-3), SquareClass::ONE);
        assert_eq!(SquareClass::from_integer(0), Err(OrbitError::ZeroSquareClass));
    }

    #[test]
    fn forms_on_three_three() {
        let o = OrbitWithForms::with_unit_forms(WFlavor::SymplecticW, make_partition(&[3, 3]))
            .unwrap();
        let r = raise_with_forms(&o, 3, SquareClass::ONE).unwrap();
        assert_eq!(r.partition, make_partition(&[4, 2]));
        assert_eq!(r.forms[&4], FormSlot::Sym { diag: vec![sq(3)] });
        assert_eq!(r.forms[&2], FormSlot::Sym { diag: vec![sq(3)] });
        assert!(!r.forms.contains_key(&3));
    }

    #[test]
    fn forms_on_five_five() {
        let o = OrbitWithForms::with_unit_forms(WFlavor::SymplecticW, make_partition(&[5, 5]))
            .unwrap();
        let r = raise_with_forms(&o, 5, sq(3)).unwrap();
        assert_eq!(r.forms[&6], FormSlot::Sym { diag: vec![sq(15)] });
        assert_eq!(r.forms[&4], FormSlot::Sym { diag: vec![sq(15)] });
    }

    #[test]
    fn orthogonal_square_appends_one() {
        let o = OrbitWithForms::with_unit_forms(WFlavor::OrthogonalW, make_partition(&[3, 2, 2]))
            .unwrap();
        let r = raise_with_forms(&o, 2, sq(2)).unwrap();
        assert_eq!(r.partition, make_partition(&[3, 3, 1]));
        assert_eq!(
            r.forms[&3],
            FormSlot::Sym {
                diag: vec![SquareClass::ONE, SquareClass::ONE]
            }
        );
        assert_eq!(r.forms[&1], FormSlot::Sym { diag: vec![SquareClass::ONE] });
    }

    #[test]
    fn i_equals_one_drops_lower_slot() {
        let o = OrbitWithForms::with_unit_forms(WFlavor::SymplecticW, make_partition(&[4, 1, 1]))
            .unwrap();
        let r = raise_with_forms(&o, 1, sq(-1)).unwrap();
        assert_eq!(r.partition, make_partition(&[4, 2]));
        assert_eq!(r.forms[&2], FormSlot::Sym { diag: vec![sq(-1)] });
        assert_eq!(r.total(), 6);
    }

    #[test]
    fn rejects_bad_forms() {
        let mut forms = BTreeMap::new();
        forms.insert(3, FormSlot::Skew { dim: 1 });
        assert!(OrbitWithForms::new(WFlavor::SymplecticW, make_partition(&[3]), forms).is_err());
        let o = OrbitWithForms::with_unit_forms(WFlavor::SymplecticW, make_partition(&[2, 2]))
            .unwrap();
        assert!(raise_with_forms(&o, 2, SquareClass::ONE).is_err());
    }
}
