//! 2×2 matrices over a [`Ring`] and evaluation of free-group words.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{parse_rational, PrimeField, RationalFunction, Ring};
use crate::error::{Error, Result};

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Matrix2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Matrix2 { a, b, c, d }
    }

    /// Identity over the ring of `template`.
    pub fn identity_like(template: &R) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Matrix2 { a: o.clone(), b: z.clone(), c: z, d: o }
    }

    pub fn diagonal(a: R, d: R) -> Self {
        let z = a.zero_like();
        Matrix2 { a, b: z.clone(), c: z, d }
    }

    pub fn entries(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Matrix2<S> {
        Matrix2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Matrix2 {
            a: self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            c: self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            d: self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|e| e.mul(s))
    }

    pub fn det(&self) -> R {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn trace(&self) -> R {
        self.a.add(&self.d)
    }

    pub fn adjugate(&self) -> Self {
        Matrix2 { a: self.d.clone(), b: self.b.neg(), c: self.c.neg(), d: self.a.clone() }
    }

    /// Inverse via adjugate/det; fails unless det is a unit.
    pub fn inv(&self) -> Result<Self> {
        let det_inv = self.det().try_inv().ok_or(Error::SingularMatrix)?;
        Ok(self.adjugate().scale(&det_inv))
    }

    /// `m1·m2·m1⁻¹·m2⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other).mul(&self.inv()?).mul(&other.inv()?))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    /// True for `±I`.
    pub fn is_plus_minus_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && {
            let one = self.a.one_like();
            self.a == one || self.a == one.neg()
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }
}

impl<R: fmt::Display> fmt::Display for Matrix2<R> {
    /// The matrix text format: four entries separated by `;`, row-major.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{};{}", self.a, self.b, self.c, self.d)
    }
}

/// Parses `"a;b;c;d"` with entries in the rational-function grammar.
pub fn parse_matrix(field: PrimeField, text: &str) -> Result<Matrix2<RationalFunction>> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("expected 4 entries separated by ';', got {}", parts.len())));
    }
    Ok(Matrix2 {
        a: parse_rational(field, parts[0])?,
        b: parse_rational(field, parts[1])?,
        c: parse_rational(field, parts[2])?,
        d: parse_rational(field, parts[3])?,
    })
}

/// A generator or its formal inverse. Lowercase is the generator, uppercase
/// the inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Letter {
    pub generator: char,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: char, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    pub fn to_char(self) -> char {
        if self.inverse {
            self.generator.to_ascii_uppercase()
        } else {
            self.generator
        }
    }
}

/// A word over an alphabet with formal inverses.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses letters of `alphabet` (lowercase generators); whitespace is
    /// skipped.
    pub fn parse(text: &str, alphabet: &[char]) -> Result<Self> {
        let mut letters = Vec::new();
        for ch in text.chars().filter(|c| !c.is_whitespace()) {
            let g = ch.to_ascii_lowercase();
            if !alphabet.contains(&g) {
                return Err(Error::BadLetter(ch));
            }
            letters.push(Letter::new(g, ch.is_ascii_uppercase()));
        }
        Ok(GroupWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { letters }
    }

    pub fn inverse(&self) -> Self {
        GroupWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        GroupWord { letters: out }
    }

    /// Free reduction followed by removal of inverse pairs at the two ends.
    pub fn cyclic_reduce(&self) -> Self {
        let w = self.free_reduce();
        let mut lo = 0;
        let mut hi = w.letters.len();
        while hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        GroupWord { letters: w.letters[lo..hi].to_vec() }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

/// Calls `visit` on every nonempty freely reduced word over `alphabet`
/// (generators and their inverses) of length at most `maxlen`, in
/// depth-first order.
pub fn visit_reduced_words(alphabet: &[char], maxlen: usize, visit: &mut dyn FnMut(&[Letter])) {
    visit_reduced_extensions(alphabet, &[], maxlen, visit);
}

/// Like [`visit_reduced_words`] restricted to words starting with `prefix`
/// (which is visited itself when nonempty and freely reduced).
pub fn visit_reduced_extensions(
    alphabet: &[char],
    prefix: &[Letter],
    maxlen: usize,
    visit: &mut dyn FnMut(&[Letter]),
) {
    fn go(letters: &[Letter], maxlen: usize, buf: &mut Vec<Letter>, visit: &mut dyn FnMut(&[Letter])) {
        for &l in letters {
            if buf.last() == Some(&l.inv()) {
                continue;
            }
            buf.push(l);
            visit(buf);
            if buf.len() < maxlen {
                go(letters, maxlen, buf, visit);
            }
            buf.pop();
        }
    }
    if prefix.len() > maxlen || prefix.windows(2).any(|p| p[1] == p[0].inv()) {
        return;
    }
    let letters: Vec<Letter> = alphabet
        .iter()
        .flat_map(|&g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    let mut buf = Vec::with_capacity(maxlen);
    buf.extend_from_slice(prefix);
    if !prefix.is_empty() {
        visit(&buf);
    }
    if buf.len() < maxlen {
        go(&letters, maxlen, &mut buf, visit);
    }
}

/// Number of nonempty freely reduced words of length ≤ `maxlen` over `k`
/// generators: `Σ_{n=1}^{L} 2k(2k−1)^{n−1}`.
pub fn reduced_word_count(k: u64, maxlen: u32) -> u64 {
    (1..=maxlen).map(|n| 2 * k * (2 * k - 1).pow(n - 1)).sum()
}

/// Evaluates words under a fixed assignment, with generator inverses
/// computed once.
#[derive(Clone, Debug)]
pub struct WordEvaluator<R> {
    images: BTreeMap<Letter, Matrix2<R>>,
    identity: Matrix2<R>,
}

impl<R: Ring> WordEvaluator<R> {
    pub fn new(assignment: &BTreeMap<char, Matrix2<R>>) -> Result<Self> {
        let mut images = BTreeMap::new();
        let mut identity = None;
        for (&g, m) in assignment {
            identity.get_or_insert_with(|| Matrix2::identity_like(&m.a));
            images.insert(Letter::new(g, false), m.clone());
            images.insert(Letter::new(g, true), m.inv()?);
        }
        let identity =
            identity.ok_or_else(|| Error::InvalidArgument("empty assignment".into()))?;
        Ok(WordEvaluator { images, identity })
    }

    pub fn image(&self, l: Letter) -> Result<&Matrix2<R>> {
        self.images.get(&l).ok_or(Error::UnboundLetter(l.generator))
    }

    pub fn identity(&self) -> &Matrix2<R> {
        &self.identity
    }

    pub fn eval(&self, word: &GroupWord) -> Result<Matrix2<R>> {
        let mut acc = self.identity.clone();
        for &l in word.letters() {
            acc = acc.mul(self.image(l)?);
        }
        Ok(acc)
    }
}

/// One-shot evaluation; see [`WordEvaluator`] for repeated use.
pub fn word_eval<R: Ring>(
    word: &GroupWord,
    assignment: &BTreeMap<char, Matrix2<R>>,
) -> Result<Matrix2<R>> {
    WordEvaluator::new(assignment)?.eval(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RationalFunction as Rf;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn m(field: PrimeField, s: &str) -> Matrix2<Rf> {
        parse_matrix(field, s).unwrap()
    }

    #[test]
    fn commutator_of_self_and_of_diagonals() {
        let f = f5();
        let g = m(f, "x;1;2;(1+2x)/x");
        assert!(g.commutator(&g).unwrap().is_identity());
        let d1 = m(f, "x;0;0;1/x");
        let d2 = m(f, "x+1;0;0;1/(x+1)");
        assert!(d1.commutator(&d2).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let f = f5();
        assert_eq!(m(f, "x;x;1;1").inv(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let f = f5();
        let g = m(f, "x^2+1;3;x;1/x");
        assert!(g.inv().unwrap().mul(&g).is_identity());
    }

    #[test]
    fn empty_and_cancelling_words() {
        let f = f5();
        let mut asg = BTreeMap::new();
        asg.insert('a', m(f, "x;1;0;1/x"));
        asg.insert('b', m(f, "1;0;x;1"));
        let ev = WordEvaluator::new(&asg).unwrap();
        assert!(ev.eval(&GroupWord::empty()).unwrap().is_identity());
        let w = GroupWord::parse("aA", &['a', 'b']).unwrap();
        assert!(ev.eval(&w).unwrap().is_identity());
        let w = GroupWord::parse("c", &['a', 'b', 'c']).unwrap();
        assert_eq!(ev.eval(&w), Err(Error::UnboundLetter('c')));
    }

    #[test]
    fn parse_rejects_foreign_letters() {
        assert_eq!(GroupWord::parse("aq", &['a']), Err(Error::BadLetter('q')));
    }

    fn stack_oracle(s: &str) -> String {
        let mut st: Vec<char> = Vec::new();
        for ch in s.chars() {
            let inv = if ch.is_ascii_lowercase() { ch.to_ascii_uppercase() } else { ch.to_ascii_lowercase() };
            if st.last() == Some(&inv) {
                st.pop();
            } else {
                st.push(ch);
            }
        }
        st.into_iter().collect()
    }

    #[test]
    fn free_reduce_examples() {
        let ab = ['a', 'b'];
        let r = |s: &str| GroupWord::parse(s, &ab).unwrap().free_reduce().to_string();
        assert_eq!(r("abBA"), "");
        assert_eq!(r("aabAAB"), "aabAAB");
        assert_eq!(r("aabAAB"), stack_oracle("aabAAB"));
        assert_eq!(r("abBBbA"), stack_oracle("abBBbA"));
        assert_eq!(r("bAaBab"), "ab");
    }

    #[test]
    fn cyclic_reduce_strips_conjugators() {
        let ab = ['a', 'b'];
        let w = GroupWord::parse("abaBA", &ab).unwrap();
        assert_eq!(w.cyclic_reduce().to_string(), "a");
    }

    #[test]
    fn reduced_word_enumeration_counts() {
        let mut n = 0u64;
        let mut all_reduced = true;
        visit_reduced_words(&['a', 'b'], 5, &mut |w| {
            n += 1;
            all_reduced &= GroupWord::new(w.to_vec()).is_freely_reduced();
        });
        assert!(all_reduced);
        assert_eq!(n, reduced_word_count(2, 5));
        assert_eq!(reduced_word_count(2, 2), 4 + 12);
        let mut zero = 0;
        visit_reduced_words(&['a'], 0, &mut |_| zero += 1);
        assert_eq!(zero, 0);
    }

    #[test]
    fn matrix_text_round_trip() {
        let f = PrimeField::new(7).unwrap();
        let g = m(f, "x;(x+1)/x^2;3;1");
        assert_eq!(parse_matrix(f, &g.to_string()).unwrap(), g);
        assert!(parse_matrix(f, "1;2;3").is_err());
    }
}
