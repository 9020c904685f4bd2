//! Normal forms in the genus-2 surface group as the amalgam
//! `⟨a, b⟩ *_H ⟨c, d⟩` with `H = ⟨t⟩`, `t = [a, b] = aba⁻¹b⁻¹` in the first
//! factor and `t = [d, c] = dcd⁻¹c⁻¹` in the second.
//!
//! An element is written `t^k · r₁ ⋯ r_m` with alternating factors, each
//! `rᵢ` the shortlex-least element of its right coset `H·rᵢ` and nontrivial.
//! The representative is found by scanning `t^{−j}·w` over the window
//! `|j| ≤ |w|/2 + 1`, which contains every coset element no longer than `w`.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::matrix2::{GroupWord, Letter};

pub const ALPHABET: [char; 4] = ['a', 'b', 'c', 'd'];

pub fn parse_word(text: &str) -> Result<GroupWord> {
    GroupWord::parse(text, &ALPHABET)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Factor {
    /// `⟨a, b⟩`
    First,
    /// `⟨c, d⟩`
    Second,
}

impl Factor {
    pub fn of(l: Letter) -> Factor {
        match l.generator {
            'a' | 'b' => Factor::First,
            'c' | 'd' => Factor::Second,
            other => panic!("letter {other} outside the surface alphabet"),
        }
    }

    /// The edge-group generator `t` spelled in this factor.
    pub fn edge_word(self) -> [Letter; 4] {
        let (p, q) = match self {
            Factor::First => ('a', 'b'),
            Factor::Second => ('d', 'c'),
        };
        [Letter::new(p, false), Letter::new(q, false), Letter::new(p, true), Letter::new(q, true)]
    }
}

fn reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn edge_power(f: Factor, k: i64) -> Vec<Letter> {
    let t = f.edge_word();
    let unit: Vec<Letter> = if k >= 0 { t.to_vec() } else { t.iter().rev().map(|l| l.inv()).collect() };
    unit.iter().copied().cycle().take(4 * k.unsigned_abs() as usize).collect()
}

/// `w = t^k · r` with `r` the coset representative of `H·w`.
pub fn decompose(f: Factor, w: &[Letter]) -> (i64, Vec<Letter>) {
    let window = (w.len() / 2 + 1) as i64;
    let mut best: Option<(i64, Vec<Letter>)> = None;
    for j in -window..=window {
        let r = reduce(edge_power(f, -j).into_iter().chain(w.iter().copied()));
        let better = match &best {
            None => true,
            Some((_, b)) => (r.len(), &r) < (b.len(), b),
        };
        if better {
            best = Some((j, r));
        }
    }
    best.expect("nonempty window")
}

/// `Some(k)` when the reduced factor word is `t^k`.
pub fn edge_exponent(f: Factor, w: &[Letter]) -> Option<i64> {
    let (k, r) = decompose(f, &reduce(w.iter().copied()));
    r.is_empty().then_some(k)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AmalgamNormalForm {
    edge_power: i64,
    syllables: Vec<(Factor, Vec<Letter>)>,
}

impl AmalgamNormalForm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn of_letters(letters: &[Letter]) -> Self {
        let mut nf = Self::identity();
        for &l in letters {
            nf.push_letter(l);
        }
        nf
    }

    pub fn of_word(w: &GroupWord) -> Self {
        Self::of_letters(w.letters())
    }

    pub fn is_identity(&self) -> bool {
        self.edge_power == 0 && self.syllables.is_empty()
    }

    pub fn edge_power(&self) -> i64 {
        self.edge_power
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    pub fn syllables(&self) -> impl Iterator<Item = (Factor, GroupWord)> + '_ {
        self.syllables.iter().map(|(f, w)| (*f, GroupWord::new(w.clone())))
    }

    pub fn push_letter(&mut self, l: Letter) {
        let f = Factor::of(l);
        match self.syllables.last() {
            Some((g, last)) if *g == f => {
                let w = reduce(last.iter().copied().chain([l]));
                let (j, r) = decompose(f, &w);
                let idx = self.syllables.len() - 1;
                if r.is_empty() {
                    self.syllables.pop();
                } else {
                    self.syllables[idx].1 = r;
                }
                self.push_edge(idx, j);
            }
            _ => {
                let (j, r) = decompose(f, &[l]);
                let idx = self.syllables.len();
                self.syllables.push((f, r));
                self.push_edge(idx, j);
            }
        }
    }

    /// Carries `t^j`, sitting just before syllable `idx`, to the front.
    fn push_edge(&mut self, mut idx: usize, mut j: i64) {
        while j != 0 && idx > 0 {
            idx -= 1;
            let (f, ref r) = self.syllables[idx];
            let w = reduce(r.iter().copied().chain(edge_power(f, j)));
            let (j2, r2) = decompose(f, &w);
            debug_assert!(!r2.is_empty());
            self.syllables[idx].1 = r2;
            j = j2;
        }
        self.edge_power += j;
    }

    pub fn to_word(&self) -> GroupWord {
        let mut letters = edge_power(Factor::First, self.edge_power);
        for (_, r) in &self.syllables {
            letters.extend_from_slice(r);
        }
        GroupWord::new(letters)
    }

    /// Length of the cyclically reduced normal form: zero or one means
    /// elliptic on the Bass–Serre tree, otherwise it is the translation
    /// length.
    pub fn cyclic_length(&self) -> usize {
        let mut g = self.clone();
        loop {
            let m = g.syllables.len();
            if m <= 1 || m.is_multiple_of(2) {
                return if m <= 1 { 0 } else { m };
            }
            let u = GroupWord::new(g.syllables[m - 1].1.clone());
            g = Self::of_word(&u.concat(&g.to_word()).concat(&u.inverse()));
        }
    }

    pub fn is_elliptic(&self) -> bool {
        self.cyclic_length() == 0
    }
}

impl fmt::Display for AmalgamNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.edge_power)?;
        for (_, r) in &self.syllables {
            write!(f, " {}", GroupWord::new(r.clone()))?;
        }
        Ok(())
    }
}

pub fn amalgam_reduce(w: &GroupWord) -> AmalgamNormalForm {
    AmalgamNormalForm::of_word(w)
}

/// Image under `a, d ↦ x` and `b, c ↦ y`, freely reduced.
pub fn free_quotient(w: &GroupWord) -> GroupWord {
    GroupWord::new(
        w.letters()
            .iter()
            .map(|l| {
                let g = match l.generator {
                    'a' | 'd' => 'x',
                    'b' | 'c' => 'y',
                    other => panic!("letter {other} outside the surface alphabet"),
                };
                Letter::new(g, l.inverse)
            })
            .collect(),
    )
    .free_reduce()
}
