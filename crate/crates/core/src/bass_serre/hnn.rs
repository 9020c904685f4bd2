//! Britton normal forms for `⟨s, x, y | [x, y], s x s⁻¹ = y⟩`, the HNN
//! extension of `ℤ² = ⟨x, y⟩` with stable letter `s` conjugating `⟨x⟩` to
//! `⟨y⟩`.
//!
//! Normal form: `x^m y^n · s^{ε₁} g₁ · … · s^{εₖ} gₖ` where `gᵢ = y^e` after
//! `s` and `gᵢ = x^e` after `s⁻¹` (the other component has been pushed left
//! via `s x = y s` and `s⁻¹ y = x s⁻¹`), and no `s^ε · 1 · s^{−ε}` remains.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::matrix2::{GroupWord, Letter};

pub const ALPHABET: [char; 3] = ['s', 'x', 'y'];

pub fn parse_word(text: &str) -> Result<GroupWord> {
    GroupWord::parse(text, &ALPHABET)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Syllable {
    stable: i8,
    exponent: i64,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HnnNormalForm {
    head: (i64, i64),
    tail: Vec<Syllable>,
}

impl HnnNormalForm {
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
        self.head == (0, 0) && self.tail.is_empty()
    }

    /// Number of stable letters.
    pub fn stable_count(&self) -> usize {
        self.tail.len()
    }

    /// Base-group part `(m, n)` of `x^m y^n` when there are no stable letters.
    pub fn base_part(&self) -> Option<(i64, i64)> {
        self.tail.is_empty().then_some(self.head)
    }

    pub fn push_letter(&mut self, l: Letter) {
        let e = if l.inverse { -1 } else { 1 };
        match l.generator {
            'x' => self.push_base(self.tail.len(), (e, 0)),
            'y' => self.push_base(self.tail.len(), (0, e)),
            's' => {
                let e = e as i8;
                match self.tail.last() {
                    Some(last) if last.stable == -e && last.exponent == 0 => {
                        self.tail.pop();
                    }
                    _ => self.tail.push(Syllable { stable: e, exponent: 0 }),
                }
            }
            other => panic!("letter {other} outside the HNN alphabet"),
        }
    }

    /// Multiplies `(mx, my)` into the syllable at `pos` (0 = head, i = after
    /// the i-th stable letter), moving the non-representative component left.
    fn push_base(&mut self, mut pos: usize, (mut mx, mut my): (i64, i64)) {
        loop {
            if pos == 0 {
                self.head.0 += mx;
                self.head.1 += my;
                return;
            }
            let syl = &mut self.tail[pos - 1];
            if syl.stable > 0 {
                // s x^k = y^k s
                syl.exponent += my;
                (mx, my) = (0, mx);
            } else {
                // s⁻¹ y^k = x^k s⁻¹
                syl.exponent += mx;
                (mx, my) = (my, 0);
            }
            if mx == 0 && my == 0 {
                return;
            }
            pos -= 1;
        }
    }

    pub fn to_word(&self) -> GroupWord {
        let mut letters = Vec::new();
        let power = |g: char, k: i64, out: &mut Vec<Letter>| {
            for _ in 0..k.unsigned_abs() {
                out.push(Letter::new(g, k < 0));
            }
        };
        power('x', self.head.0, &mut letters);
        power('y', self.head.1, &mut letters);
        for syl in &self.tail {
            letters.push(Letter::new('s', syl.stable < 0));
            power(if syl.stable > 0 { 'y' } else { 'x' }, syl.exponent, &mut letters);
        }
        GroupWord::new(letters)
    }

    /// Translation length on the Bass–Serre tree: the number of stable
    /// letters after cyclic Britton reduction.
    pub fn translation_length(&self) -> usize {
        let mut g = self.clone();
        loop {
            let n = g.tail.len();
            if n == 0 {
                return 0;
            }
            let (first, last) = (g.tail[0], g.tail[n - 1]);
            // syllable between the last and (cyclically) first stable letters
            let last_vec = if last.stable > 0 { (0, last.exponent) } else { (last.exponent, 0) };
            let wrap = (last_vec.0 + g.head.0, last_vec.1 + g.head.1);
            let pinch = n >= 2
                && last.stable == -first.stable
                && if last.stable > 0 { wrap.1 == 0 } else { wrap.0 == 0 };
            if !pinch {
                return n;
            }
            // conjugate by s^{ε_n} g_n to rotate the wrap-around pinch inside
            let mut u = vec![Letter::new('s', last.stable < 0)];
            let g_n = if last.stable > 0 { ('y', last.exponent) } else { ('x', last.exponent) };
            for _ in 0..g_n.1.unsigned_abs() {
                u.push(Letter::new(g_n.0, g_n.1 < 0));
            }
            let u = GroupWord::new(u);
            let w = u.concat(&g.to_word()).concat(&u.inverse());
            g = HnnNormalForm::of_word(&w);
        }
    }
}

impl fmt::Display for HnnNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Britton reduction to the normal form above.
pub fn britton_reduce(w: &GroupWord) -> HnnNormalForm {
    HnnNormalForm::of_word(w)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TreeAction {
    Elliptic,
    Hyperbolic { length: usize },
}

pub fn hnn_translation_data(w: &GroupWord) -> TreeAction {
    match britton_reduce(w).translation_length() {
        0 => TreeAction::Elliptic,
        length => TreeAction::Hyperbolic { length },
    }
}

/// `θ: s ↦ 0, x ↦ 1, y ↦ 1`.
pub fn theta(w: &GroupWord) -> i64 {
    w.letters()
        .iter()
        .map(|l| match l.generator {
            's' => 0,
            _ if l.inverse => -1,
            _ => 1,
        })
        .sum()
}

/// An isometry `p ↦ sign·p + offset` of the simplicial line.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Dihedral {
    pub sign: i8,
    pub offset: i64,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { sign: 1, offset: 0 };

    /// `self ∘ other`.
    pub fn compose(self, other: Dihedral) -> Dihedral {
        Dihedral { sign: self.sign * other.sign, offset: self.sign as i64 * other.offset + self.offset }
    }

    pub fn inverse(self) -> Dihedral {
        Dihedral { sign: self.sign, offset: -(self.sign as i64) * self.offset }
    }

    /// Nonzero translations are the hyperbolic isometries; reflections fix
    /// the point `offset/2`.
    pub fn is_hyperbolic(self) -> bool {
        self.sign > 0 && self.offset != 0
    }
}

impl fmt::Display for Dihedral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign > 0 {
            write!(f, "translation({})", self.offset)
        } else {
            write!(f, "reflection(p -> {} - p)", self.offset)
        }
    }
}

/// `φ: s ↦ (p ↦ −p), x ↦ (p ↦ p+1), y ↦ (p ↦ p−1)`.
pub fn phi(w: &GroupWord) -> Dihedral {
    w.letters().iter().fold(Dihedral::IDENTITY, |acc, l| {
        let g = match l.generator {
            's' => Dihedral { sign: -1, offset: 0 },
            'x' => Dihedral { sign: 1, offset: 1 },
            'y' => Dihedral { sign: 1, offset: -1 },
            other => panic!("letter {other} outside the HNN alphabet"),
        };
        acc.compose(if l.inverse { g.inverse() } else { g })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: &str) -> String {
        britton_reduce(&parse_word(s).unwrap()).to_string()
    }

    #[test]
    fn relations_reduce() {
        assert_eq!(nf("sxS"), "y");
        assert_eq!(nf("xyXY"), "");
        assert_eq!(nf("SyyS"), "xxSS");
        assert_eq!(nf("SyyyYs"), "xx");
        assert_eq!(nf("sxyS"), "ysyS");
        assert_eq!(nf("ysyS"), "ysyS");
    }

    #[test]
    fn translation_examples() {
        let w = |s: &str| parse_word(s).unwrap();
        assert_eq!(hnn_translation_data(&w("x")), TreeAction::Elliptic);
        assert_eq!(hnn_translation_data(&w("s")), TreeAction::Hyperbolic { length: 1 });
        assert_eq!(hnn_translation_data(&w("Xsx")), TreeAction::Hyperbolic { length: 1 });
        // X·(sxS) = X·y
        assert_eq!(hnn_translation_data(&w("XsxS")), TreeAction::Elliptic);
        assert_eq!(hnn_translation_data(&w("sxxS")), TreeAction::Elliptic);
        assert_eq!(hnn_translation_data(&w("ysyS")), TreeAction::Elliptic);
        assert_eq!(hnn_translation_data(&w("ss")), TreeAction::Hyperbolic { length: 2 });
        assert_eq!(hnn_translation_data(&w("sS")), TreeAction::Elliptic);
    }

    #[test]
    fn theta_phi_examples() {
        let w = |s: &str| parse_word(s).unwrap();
        assert_eq!(theta(&w("xY")), 0);
        assert_eq!(phi(&w("xY")), Dihedral { sign: 1, offset: 2 });
        assert_eq!(theta(&w("x")), 1);
        assert!(!phi(&w("s")).is_hyperbolic());
        assert_eq!(phi(&w("s")).sign, -1);
    }

    #[test]
    fn phi_respects_relation() {
        let w = |s: &str| parse_word(s).unwrap();
        assert_eq!(phi(&w("sxS")), phi(&w("y")));
        assert_eq!(phi(&w("xyXY")), Dihedral::IDENTITY);
        assert_eq!(theta(&w("sxS")), theta(&w("y")));
    }
}
