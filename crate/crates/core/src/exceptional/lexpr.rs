//! A small notation for modules of a Levi factor, as printed in the tables.
//!
//! ```text
//! expr  := sum ('/' sum)?
//! sum   := term ('⊕' term)*
//! term  := count? prod
//! prod  := atom ('⊗' atom)*
//! atom  := ('Λ' | 'S') digit '(' expr ')' | '(' expr ')' | rep
//! rep   := 'V' digits ('^' [0-9a-z]+)? '\''? '*'?
//! ```
//!
//! `V1` is always the trivial module. A dual `V*` restricts like `V`.

use std::collections::BTreeSet;

use crate::error::{OrbitError, Result};
use crate::sl2calc::{ModuleExpr, SL2Module};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LExpr {
    Rep(String),
    Sum(Vec<LExpr>),
    Scaled(u64, Box<LExpr>),
    Tensor(Vec<LExpr>),
    Ext(u8, Box<LExpr>),
    Sym(u8, Box<LExpr>),
    Quot(Box<LExpr>, Box<LExpr>),
}

/// Name of a representation with any dual marker removed.
pub fn base_name(rep: &str) -> &str {
    rep.trim_end_matches('*')
}

/// Dimension encoded in a representation name, `V27^1*` → 27.
pub fn rep_dim(rep: &str) -> Result<u32> {
    let digits: String = rep
        .strip_prefix('V')
        .unwrap_or("")
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    digits
        .parse()
        .map_err(|_| OrbitError::Parse {
            what: "representation name",
            input: rep.to_string(),
        })
}

impl LExpr {
    pub fn parse(src: &str) -> Result<LExpr> {
        let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            src,
            chars,
            pos: 0,
        };
        let e = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.fail());
        }
        Ok(e)
    }

    /// Base names of all representations other than `V1`.
    pub fn reps(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_reps(&mut out);
        out
    }

    fn collect_reps(&self, out: &mut BTreeSet<String>) {
        match self {
            LExpr::Rep(r) if base_name(r) != "V1" => {
                out.insert(base_name(r).to_string());
            }
            LExpr::Rep(_) => {}
            LExpr::Sum(v) | LExpr::Tensor(v) => v.iter().for_each(|e| e.collect_reps(out)),
            LExpr::Scaled(_, e) | LExpr::Ext(_, e) | LExpr::Sym(_, e) => e.collect_reps(out),
            LExpr::Quot(a, b) => {
                a.collect_reps(out);
                b.collect_reps(out);
            }
        }
    }

    /// Substitutes an `sl2`-module for every representation.
    pub fn substitute<F>(&self, resolve: &F) -> Result<ModuleExpr>
    where
        F: Fn(&str) -> Result<SL2Module>,
    {
        Ok(match self {
            LExpr::Rep(r) if base_name(r) == "V1" => ModuleExpr::atom(SL2Module::trivial(1)),
            LExpr::Rep(r) => ModuleExpr::atom(resolve(base_name(r))?),
            LExpr::Sum(v) => ModuleExpr::sum(
                v.iter()
                    .map(|e| e.substitute(resolve))
                    .collect::<Result<_>>()?,
            ),
            LExpr::Scaled(n, e) => {
                let inner = e.substitute(resolve)?;
                ModuleExpr::sum(vec![inner; *n as usize])
            }
            LExpr::Tensor(v) => ModuleExpr::tensor(
                v.iter()
                    .map(|e| e.substitute(resolve))
                    .collect::<Result<_>>()?,
            ),
            LExpr::Ext(k, e) => ModuleExpr::ext(*k, e.substitute(resolve)?),
            LExpr::Sym(k, e) => ModuleExpr::sym(*k, e.substitute(resolve)?),
            LExpr::Quot(a, b) => ModuleExpr::quot(a.substitute(resolve)?, b.substitute(resolve)?),
        })
    }

    /// Dimension, treating every representation as a trivial module of its
    /// named dimension.
    pub fn dim(&self) -> Result<u64> {
        let e = self.substitute(&|r| Ok(SL2Module::trivial(rep_dim(r)? as u64)))?;
        Ok(e.eval()?.dim())
    }

    /// Reads the expression as an `sl2`-module, `V_n` meaning the
    /// irreducible of dimension `n`.
    pub fn as_sl2(&self) -> Result<SL2Module> {
        self.substitute(&|r| {
            if r.chars().skip(1).all(|c| c.is_ascii_digit()) {
                SL2Module::irrep(rep_dim(r)?)
            } else {
                Err(OrbitError::UnknownRep(r.to_string()))
            }
        })?
        .eval()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self) -> OrbitError {
        OrbitError::Parse {
            what: "module expression",
            input: self.src.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.fail())
        }
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn expr(&mut self) -> Result<LExpr> {
        let num = self.sum()?;
        if self.eat('/') {
            let den = self.sum()?;
            return Ok(LExpr::Quot(Box::new(num), Box::new(den)));
        }
        Ok(num)
    }

    fn sum(&mut self) -> Result<LExpr> {
        let mut terms = vec![self.term()?];
        while self.eat('⊕') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            LExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<LExpr> {
        let count = self.number();
        let prod = self.prod()?;
        Ok(match count {
            Some(n) => LExpr::Scaled(n, Box::new(prod)),
            None => prod,
        })
    }

    fn prod(&mut self) -> Result<LExpr> {
        let mut factors = vec![self.atom()?];
        while self.eat('⊗') {
            factors.push(self.atom()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            LExpr::Tensor(factors)
        })
    }

    fn atom(&mut self) -> Result<LExpr> {
        match self.peek() {
            Some(c @ ('Λ' | 'S')) => {
                self.pos += 1;
                let k = self.number().ok_or_else(|| self.fail())? as u8;
                self.expect('(')?;
                let inner = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(if c == 'Λ' {
                    LExpr::Ext(k, inner)
                } else {
                    LExpr::Sym(k, inner)
                })
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('V') => {
                let start = self.pos;
                self.pos += 1;
                self.number().ok_or_else(|| self.fail())?;
                if self.eat('^') {
                    let from = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                        self.pos += 1;
                    }
                    if from == self.pos {
                        return Err(self.fail());
                    }
                }
                self.eat('\'');
                self.eat('*');
                Ok(LExpr::Rep(self.chars[start..self.pos].iter().collect()))
            }
            _ => Err(self.fail()),
        }
    }
}
