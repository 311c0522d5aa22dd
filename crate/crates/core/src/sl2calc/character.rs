//! Virtual characters: finitely supported integer combinations of weights.
//!
//! Tensor products are convolutions and Adams operations dilate weights, so
//! the plethysm identities for second and third exterior and symmetric
//! powers become polynomial identities in the character ring.

use std::collections::BTreeMap;
use std::fmt::Debug;

pub(crate) trait Weight: Copy + Ord + Debug {
    fn plus(self, other: Self) -> Self;
    fn dilate(self, k: i32) -> Self;
}

impl Weight for i32 {
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn dilate(self, k: i32) -> Self {
        self * k
    }
}

impl Weight for (i32, i32) {
    fn plus(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn dilate(self, k: i32) -> Self {
        (self.0 * k, self.1 * k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Character<W: Weight> {
    coeffs: BTreeMap<W, i64>,
}

impl<W: Weight> Default for Character<W> {
    fn default() -> Self {
        Character {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<W: Weight> Character<W> {
    pub fn from_pairs<I: IntoIterator<Item = (W, i64)>>(pairs: I) -> Self {
        let mut c = Character::default();
        for (w, m) in pairs {
            c.add_term(w, m);
        }
        c
    }

    fn add_term(&mut self, w: W, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.coeffs.entry(w).or_insert(0);
        *e += m;
        if *e == 0 {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: W) -> i64 {
        self.coeffs.get(&w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (W, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &m)| (w, m))
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, m) in other.terms() {
            out.add_term(w, m);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self::from_pairs(self.terms().map(|(w, m)| (w, m * k)))
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Character::default();
        for (a, ma) in self.terms() {
            for (b, mb) in other.terms() {
                out.add_term(a.plus(b), ma * mb);
            }
        }
        out
    }

    /// Adams operation: every weight multiplied by `k`.
    pub fn adams(&self, k: i32) -> Self {
        Self::from_pairs(self.terms().map(|(w, m)| (w.dilate(k), m)))
    }

    fn divided(&self, d: i64) -> Self {
        Self::from_pairs(self.terms().map(|(w, m)| {
            debug_assert_eq!(m % d, 0, "plethysm identity must divide exactly");
            (w, m / d)
        }))
    }

    /// Second (`sign = -1`, exterior) or symmetric (`sign = +1`) power:
    /// `(chi^2 + sign * psi^2 chi) / 2`.
    pub fn power2(&self, sign: i64) -> Self {
        self.times(self).plus(&self.adams(2).scaled(sign)).divided(2)
    }

    /// Third exterior (`sign = -1`) or symmetric (`sign = +1`) power:
    /// `(chi^3 + 3 sign chi psi^2 chi + 2 psi^3 chi) / 6`.
    pub fn power3(&self, sign: i64) -> Self {
        let cube = self.times(self).times(self);
        let mixed = self.times(&self.adams(2)).scaled(3 * sign);
        let dilated = self.adams(3).scaled(2);
        cube.plus(&mixed).plus(&dilated).divided(6)
    }
}
