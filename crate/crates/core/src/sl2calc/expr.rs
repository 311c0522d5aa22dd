use std::fmt;

use serde::{Deserialize, Serialize};

use super::SL2Module;
use crate::error::Result;

/// Symbolic module expression over sl2-modules.
///
/// JSON form is a tagged object, e.g.
/// `{"op":"quot","num":{"op":"ext","k":3,"of":...},"den":...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum ModuleExpr {
    Atom { module: SL2Module },
    Sum { terms: Vec<ModuleExpr> },
    Tensor { factors: Vec<ModuleExpr> },
    Ext { k: u8, of: Box<ModuleExpr> },
    Sym { k: u8, of: Box<ModuleExpr> },
    Quot { num: Box<ModuleExpr>, den: Box<ModuleExpr> },
}

impl ModuleExpr {
    pub fn atom(module: SL2Module) -> Self {
        ModuleExpr::Atom { module }
    }

    pub fn sum(terms: Vec<ModuleExpr>) -> Self {
        ModuleExpr::Sum { terms }
    }

    pub fn tensor(factors: Vec<ModuleExpr>) -> Self {
        ModuleExpr::Tensor { factors }
    }

    pub fn ext(k: u8, of: ModuleExpr) -> Self {
        ModuleExpr::Ext { k, of: Box::new(of) }
    }

    pub fn sym(k: u8, of: ModuleExpr) -> Self {
        ModuleExpr::Sym { k, of: Box::new(of) }
    }

    pub fn quot(num: ModuleExpr, den: ModuleExpr) -> Self {
        ModuleExpr::Quot {
            num: Box::new(num),
            den: Box::new(den),
        }
    }

    pub fn eval(&self) -> Result<SL2Module> {
        match self {
            ModuleExpr::Atom { module } => Ok(module.clone()),
            ModuleExpr::Sum { terms } => terms
                .iter()
                .try_fold(SL2Module::zero(), |acc, t| Ok(acc.direct_sum(&t.eval()?))),
            // The empty tensor product is the trivial module.
            ModuleExpr::Tensor { factors } => factors
                .iter()
                .try_fold(SL2Module::trivial(1), |acc, t| Ok(acc.tensor(&t.eval()?))),
            ModuleExpr::Ext { k, of } => of.eval()?.ext_power(*k),
            ModuleExpr::Sym { k, of } => of.eval()?.sym_power(*k),
            ModuleExpr::Quot { num, den } => num.eval()?.quotient(&den.eval()?),
        }
    }
}

/// Evaluates `e` recursively; a quotient whose denominator does not embed
/// reports the missing irreducible.
pub fn eval_expr(e: &ModuleExpr) -> Result<SL2Module> {
    e.eval()
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, items: &[ModuleExpr], sep: &str) -> fmt::Result {
            for (i, it) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "({it})")?;
            }
            Ok(())
        }
        match self {
            ModuleExpr::Atom { module } => write!(f, "{module}"),
            ModuleExpr::Sum { terms } if terms.is_empty() => f.write_str("0"),
            ModuleExpr::Sum { terms } => join(f, terms, " ⊕ "),
            ModuleExpr::Tensor { factors } if factors.is_empty() => f.write_str("V_1"),
            ModuleExpr::Tensor { factors } => join(f, factors, " ⊗ "),
            ModuleExpr::Ext { k, of } => write!(f, "Λ^{k}({of})"),
            ModuleExpr::Sym { k, of } => write!(f, "S^{k}({of})"),
            ModuleExpr::Quot { num, den } => write!(f, "({num}) / ({den})"),
        }
    }
}

impl From<SL2Module> for ModuleExpr {
    fn from(module: SL2Module) -> Self {
        ModuleExpr::atom(module)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::OrbitError;

    fn m(pairs: &[(u32, u64)]) -> SL2Module {
        SL2Module::from_irreps(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn exterior_cube_quotient() {
        let six = ModuleExpr::atom(m(&[(2, 1), (1, 4)]));
        let e = ModuleExpr::quot(ModuleExpr::ext(3, six.clone()), six);
        assert_eq!(eval_expr(&e).unwrap(), m(&[(1, 4), (2, 5)]));
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(eval_expr(&ModuleExpr::sum(vec![])).unwrap(), SL2Module::zero());
    }

    #[test]
    fn tensor_with_sum() {
        let e = ModuleExpr::tensor(vec![
            ModuleExpr::atom(m(&[(2, 1)])),
            ModuleExpr::atom(m(&[(2, 1), (1, 4)])),
        ]);
        assert_eq!(eval_expr(&e).unwrap(), m(&[(1, 1), (3, 1), (2, 4)]));
    }

    #[test]
    fn failed_quotient_names_irrep() {
        let e = ModuleExpr::quot(ModuleExpr::atom(m(&[(2, 1)])), ModuleExpr::atom(m(&[(4, 1)])));
        assert_eq!(
            eval_expr(&e),
            Err(OrbitError::QuotientNotEmbedded {
                irrep: 4,
                needed: 1,
                available: 0
            })
        );
    }

    #[test]
    fn tagged_json() {
        let e = ModuleExpr::ext(2, ModuleExpr::atom(m(&[(4, 1)])));
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"op":"ext","k":2,"of":{"op":"atom","module":{"irreps":{"4":1}}}}"#);
        let back: ModuleExpr = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
