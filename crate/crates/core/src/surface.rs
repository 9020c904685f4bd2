//! The two-parameter family of `SL(2)` pairs with diagonal commutator, the
//! explicit genus-2 surface-group representation built from it, and the
//! checks that certify it.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{LaurentInY, Polynomial, PrimeField, RationalFunction};
use crate::bass_serre::amalgam::{self, AmalgamNormalForm, Factor};
use crate::error::{Error, Result};
use crate::matrix2::{visit_reduced_words, GroupWord, Letter, Matrix2, WordEvaluator};
use crate::report::Report;
use crate::valuation_bt::{val, Valuation};

pub type RMat = Matrix2<RationalFunction>;
pub type LMat = Matrix2<LaurentInY>;

pub const NO_RELATOR_MAX: usize = 12;
pub const DEFAULT_SEED: u64 = 0x7265_6563;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceParams {
    pub c: RationalFunction,
    pub d: RationalFunction,
    pub delta: RationalFunction,
    pub h: RationalFunction,
    x_val: RationalFunction,
    y_val: RationalFunction,
}

impl SurfaceParams {
    pub fn new(
        c: RationalFunction,
        d: RationalFunction,
        delta: RationalFunction,
        h: RationalFunction,
    ) -> Result<Self> {
        for (name, v) in [("c = 0", &c), ("d = 0", &d), ("delta = 0", &delta), ("h = 0", &h)] {
            if v.is_zero() {
                return Err(Error::DegenerateParams(name));
            }
        }
        let one = RationalFunction::one(c.field());
        let dd = d.mul(&delta).mul(&h);
        let x_val = one.sub(&dd).add(&d.mul(&d).mul(&h).mul(&h));
        let y_val = delta.mul(&delta).sub(&dd).add(&h.mul(&h));
        match (x_val.is_zero(), y_val.is_zero()) {
            (true, true) => return Err(Error::DegenerateParams("X = Y = 0")),
            (true, false) => return Err(Error::DegenerateParams("X = 0")),
            (false, true) => return Err(Error::DegenerateParams("Y = 0")),
            _ => {}
        }
        Ok(SurfaceParams { c, d, delta, h, x_val, y_val })
    }

    pub fn field(&self) -> PrimeField {
        self.c.field()
    }

    /// `X = 1 − dδh + d²h²`.
    pub fn x(&self) -> &RationalFunction {
        &self.x_val
    }

    /// `Y = δ² − dδh + h²`.
    pub fn y(&self) -> &RationalFunction {
        &self.y_val
    }

    /// `Z = dδ(1 + h²) − h`.
    pub fn z(&self) -> RationalFunction {
        let one = RationalFunction::one(self.field());
        self.d.mul(&self.delta).mul(&one.add(&self.h.mul(&self.h))).sub(&self.h)
    }
}

/// `(1, 1/x², x+1, x)` for odd `p`; for `p = 2`,
/// `(1, x³/((x²+x+1)(x⁵+1)), x², x²+x+1)`.
pub fn standard_params(p: u64) -> Result<SurfaceParams> {
    let f = PrimeField::new(p)?;
    let poly = |c: &[i64]| RationalFunction::from_poly(Polynomial::from_i64(f, c));
    let one = RationalFunction::one(f);
    if p == 2 {
        let h = poly(&[1, 1, 1]);
        let den = Polynomial::from_i64(f, &[1, 1, 1]).mul(&Polynomial::from_i64(f, &[1, 0, 0, 0, 0, 1]));
        let d = RationalFunction::new(Polynomial::monomial(f, 1, 3), den)?;
        SurfaceParams::new(one, d, poly(&[0, 0, 1]), h)
    } else {
        SurfaceParams::new(one, RationalFunction::x_pow(f, -2), poly(&[1, 1]), RationalFunction::x(f))
    }
}

pub fn build_ab(params: &SurfaceParams) -> Result<(RMat, RMat)> {
    let SurfaceParams { c, d, delta, h, .. } = params;
    let (x, y) = (params.x(), params.y());
    let one = RationalFunction::one(params.field());
    let d2 = d.mul(d);
    let a = Matrix2::new(
        d.mul(y).div(x)?,
        d.mul(delta)
            .mul(h)
            .mul(&one.sub(&d2))
            .add(&d2.mul(delta).mul(delta))
            .sub(&one)
            .div(&c.mul(x))?,
        c.clone(),
        d.clone(),
    );
    let b = Matrix2::new(
        delta.mul(x).div(y)?,
        d.mul(delta)
            .mul(&one.sub(&delta.mul(delta)))
            .add(&h.mul(&d2.mul(delta).mul(delta).sub(&one)))
            .div(&c.mul(y))?,
        c.mul(h),
        delta.clone(),
    );
    Ok((a, b))
}

/// Checks every closed-form identity of the family against direct matrix
/// arithmetic.
pub fn verify_family(params: &SurfaceParams) -> Result<Report> {
    let (a, b) = build_ab(params)?;
    let SurfaceParams { c, d, delta, h, .. } = params;
    let (x, y, z) = (params.x(), params.y(), params.z());
    let one = RationalFunction::one(params.field());
    let xy = x.add(y);
    let mut r = Report::new("surface verify");

    r.check("det_A", a.det().is_one(), a.det().to_string());
    r.check("det_B", b.det().is_one(), b.det().to_string());
    let tr_a = d.mul(&xy).div(x)?;
    r.check("trace_A", a.trace() == tr_a, tr_a.to_string());
    let tr_b = delta.mul(&xy).div(y)?;
    r.check("trace_B", b.trace() == tr_b, tr_b.to_string());
    let ab = a.mul(&b);
    let tr_ab = z.mul(&xy).div(&x.mul(y))?;
    r.check("trace_AB", ab.trace() == tr_ab, tr_ab.to_string());

    let top_right = d
        .mul(h)
        .mul(&delta.mul(delta).sub(&one))
        .add(&delta.mul(&d.mul(d).sub(&one)));
    let bottom_left = c.mul(&delta.add(&d.mul(h).mul(h).mul(h)));
    let ab_want = Matrix2::new(
        z.div(x)?,
        top_right.div(&c.mul(x))?,
        bottom_left.div(y)?,
        z.div(y)?,
    );
    r.check("AB_bottom_left", ab.c == ab_want.c, ab_want.c.to_string());
    r.check("AB_matrix", ab == ab_want, ab_want.to_string());
    let ba_want = Matrix2::new(
        z.div(y)?,
        top_right.div(&c.mul(y))?,
        bottom_left.div(x)?,
        z.div(x)?,
    );
    r.check("BA_matrix", b.mul(&a) == ba_want, ba_want.to_string());

    let comm = a.commutator(&b)?;
    let diag = Matrix2::diagonal(y.div(x)?, x.div(y)?);
    r.check("commutator_diagonal", comm == diag, diag.to_string());
    r.check("commutator_entry_product", comm.a.mul(&comm.d).is_one(), "");
    Ok(r)
}

/// Valuations of `tr A`, `tr B`, `tr AB`.
pub fn trace_valuations(a: &RMat, b: &RMat) -> [Valuation; 3] {
    [val(&a.trace()), val(&b.trace()), val(&a.mul(b).trace())]
}

/// Passes iff the three trace valuations are equal and negative.
pub fn discreteness_certificate(a: &RMat, b: &RMat) -> Report {
    let vs = trace_valuations(a, b);
    let mut r = Report::new("surface discreteness");
    let equal = vs[0] == vs[1] && vs[1] == vs[2];
    let negative = matches!(vs[0].0, Some(v) if v < 0);
    r.check(
        "trace_valuations_equal_negative",
        equal && negative,
        format!("(v(trA), v(trB), v(trAB)) = ({}, {}, {})", vs[0], vs[1], vs[2]),
    );
    for (name, v) in ["v_trA", "v_trB", "v_trAB"].iter().zip(vs) {
        if let Some(v) = v.0 {
            r.counter(*name, v);
        }
    }
    r
}

fn lift(m: &RMat) -> LMat {
    m.map(|e| LaurentInY::constant(e.clone()))
}

/// `T·M·T⁻¹` for `T = diag(1, y)`.
pub fn conjugate_by_t(m: &LMat) -> LMat {
    let f = m.a.field();
    let y = LaurentInY::y(f);
    let y_inv = LaurentInY::monomial(RationalFunction::one(f), -1);
    Matrix2::new(m.a.clone(), m.b.mul(&y_inv), m.c.mul(&y), m.d.clone())
}

/// `A, B` and their doubles `C = TBT⁻¹`, `D = TAT⁻¹`.
#[derive(Clone, Debug)]
pub struct QuadrupleRep {
    pub base_a: RMat,
    pub base_b: RMat,
    pub a: LMat,
    pub b: LMat,
    pub c: LMat,
    pub d: LMat,
    pub discreteness_passed: bool,
}

impl QuadrupleRep {
    pub fn field(&self) -> PrimeField {
        self.base_a.a.field()
    }

    pub fn assignment(&self) -> BTreeMap<char, LMat> {
        BTreeMap::from([
            ('a', self.a.clone()),
            ('b', self.b.clone()),
            ('c', self.c.clone()),
            ('d', self.d.clone()),
        ])
    }

    pub fn evaluator(&self) -> WordEvaluator<LaurentInY> {
        WordEvaluator::new(&self.assignment()).expect("nonempty assignment")
    }

    pub fn eval(&self, w: &GroupWord) -> Result<LMat> {
        self.evaluator().eval(w)
    }

    /// Image with `c ↦ B` and `d ↦ A`, ignoring the doubling.
    pub fn folded_image(&self, l: Letter) -> Result<RMat> {
        let m = match l.generator {
            'a' | 'd' => &self.base_a,
            'b' | 'c' => &self.base_b,
            other => return Err(Error::BadLetter(other)),
        };
        if l.inverse {
            m.inv()
        } else {
            Ok(m.clone())
        }
    }
}

pub fn shalen_double(a: &RMat, b: &RMat) -> QuadrupleRep {
    let discreteness_passed = discreteness_certificate(a, b).passed();
    let (la, lb) = (lift(a), lift(b));
    QuadrupleRep {
        base_a: a.clone(),
        base_b: b.clone(),
        c: conjugate_by_t(&lb),
        d: conjugate_by_t(&la),
        a: la,
        b: lb,
        discreteness_passed,
    }
}

/// The representation for `standard_params(p)`.
pub fn standard_quadruple(p: u64) -> Result<QuadrupleRep> {
    let (a, b) = build_ab(&standard_params(p)?)?;
    Ok(shalen_double(&a, &b))
}

pub fn surface_relation_check(q: &QuadrupleRep) -> Result<Report> {
    let mut r = Report::new("surface relation");
    for (name, m) in [("A", &q.a), ("B", &q.b), ("C", &q.c), ("D", &q.d)] {
        r.check(format!("det_{name}"), m.det().is_one(), "");
    }
    r.check("C_is_TBT^-1", q.c == conjugate_by_t(&q.b), "");
    r.check("D_is_TAT^-1", q.d == conjugate_by_t(&q.a), "");
    let ab = q.a.commutator(&q.b)?;
    let dc = q.d.commutator(&q.c)?;
    r.check("[A,B]=[D,C]", ab == dc, ab.to_string());
    let relator = amalgam::parse_word("abABcdCD")?;
    let img = q.eval(&relator)?;
    r.check("[A,B][C,D]=I", img.is_identity(), img.to_string());
    Ok(r)
}

/// Top `y`-exponent `l` and coefficient `α` of the trace of the word's
/// image.
pub fn word_trace_leading(word: &GroupWord, q: &QuadrupleRep) -> Result<(i32, RationalFunction)> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let tr = q.eval(word)?.trace();
    match tr.leading() {
        Some((l, alpha)) => Ok((l, alpha.clone())),
        None => Err(Error::InvalidArgument(format!("trace of {word} vanishes"))),
    }
}

/// Smallest `n ≥ 0` such that `y ↦ xⁿ` makes the trace valuation negative.
pub fn hyperbolize(word: &GroupWord, q: &QuadrupleRep) -> Result<(u32, i64)> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let tr = q.eval(word)?.trace();
    let bound = hyperbolize_bound(&tr);
    for n in 0..=bound {
        if let Some(v) = val(&tr.substitute_power(n as i32)).0 {
            if v < 0 {
                return Ok((n, v));
            }
        }
    }
    Err(Error::NotHyperbolizable(bound))
}

/// A substitution exponent past which the top term dominates with negative
/// valuation: larger than the coefficient valuation spread and than
/// `v(α)/l`.
fn hyperbolize_bound(tr: &LaurentInY) -> u32 {
    let Some((l, alpha)) = tr.leading() else { return 0 };
    if l <= 0 {
        return 0;
    }
    let v_top = val(alpha).0.expect("stored coefficients are nonzero");
    let v_min = tr.terms().filter_map(|(_, c)| val(c).0).min().unwrap_or(v_top);
    let spread = v_top - v_min;
    let lift = v_top.div_euclid(l as i64) + 1;
    spread.saturating_add(1).max(lift).max(0) as u32
}

fn random_parameter<R: Rng>(f: PrimeField, rng: &mut R) -> RationalFunction {
    let p = f.modulus() as u64;
    let mut coeffs = |len: usize| -> Vec<u32> { (0..len).map(|_| rng.gen_range(0..p) as u32).collect() };
    if coeffs(1)[0] % 2 == 0 {
        return RationalFunction::from_poly(Polynomial::from_coeffs(f, coeffs(1)));
    }
    let num = Polynomial::from_coeffs(f, coeffs(3));
    let den = Polynomial::from_coeffs(f, coeffs(3));
    RationalFunction::new(num, den).unwrap_or_else(|_| RationalFunction::zero(f))
}

/// Draws `(c, d, δ, h)` from constants and degree-≤2 rational functions
/// until `samples` non-degenerate tuples are collected; every one must have
/// `[A, B] = diag(Y/X, X/Y)`. The standard parameters for `p` are checked as
/// an extra forced sample.
pub fn appendix_converse_check(p: u64, samples: usize, seed: u64) -> Result<Report> {
    let f = PrimeField::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_draws = samples.saturating_mul(100).max(100);
    let mut survivors = Vec::with_capacity(samples);
    let mut degenerate = 0usize;
    while survivors.len() < samples && survivors.len() + degenerate < max_draws {
        let [c, d, delta, h]: [RationalFunction; 4] = std::array::from_fn(|_| random_parameter(f, &mut rng));
        match SurfaceParams::new(c, d, delta, h) {
            Ok(params) => survivors.push(params),
            Err(_) => degenerate += 1,
        }
    }
    let outcome = |params: &SurfaceParams| -> Result<bool> {
        let (a, b) = build_ab(params)?;
        let diag = Matrix2::diagonal(params.y().div(params.x())?, params.x().div(params.y())?);
        Ok(a.det().is_one() && b.det().is_one() && a.commutator(&b)? == diag)
    };
    let failures = survivors.par_iter().filter(|s| !matches!(outcome(s), Ok(true))).count();

    let mut r = Report::new(format!("surface appendix --p {p} --samples {samples} --seed {seed}"));
    r.counter("checked", survivors.len() as i64);
    r.counter("degenerate_skipped", degenerate as i64);
    r.counter("failures", failures as i64);
    r.check(
        "sample_count",
        survivors.len() == samples,
        format!("{} of {samples} non-degenerate tuples drawn", survivors.len()),
    );
    r.check("commutator_diagonal", failures == 0, format!("{failures} failures"));
    let forced = standard_params(p).and_then(|s| outcome(&s));
    r.check("standard_parameters", matches!(forced, Ok(true)), "");
    Ok(r)
}

/// Polynomial matrix over a common scalar denominator.
#[derive(Clone)]
struct ScaledMat {
    n: [Polynomial; 4],
    den: Polynomial,
}

impl ScaledMat {
    fn from_rational(m: &RMat) -> Self {
        let entries = m.entries();
        let mut den = Polynomial::one(m.a.field());
        for e in entries {
            let g = den.gcd(e.denominator());
            den = den.mul(&e.denominator().div_rem(&g).0);
        }
        let n = entries.map(|e| e.numerator().mul(&den.div_rem(e.denominator()).0));
        ScaledMat { n, den }
    }

    /// Inverse of a determinant-one matrix.
    fn adjugate(&self) -> Self {
        let [a, b, c, d] = &self.n;
        ScaledMat { n: [d.clone(), b.neg(), c.neg(), a.clone()], den: self.den.clone() }
    }

    fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.n;
        let [e, f, g, h] = &o.n;
        ScaledMat {
            n: [
                a.mul(e).add(&b.mul(g)),
                a.mul(f).add(&b.mul(h)),
                c.mul(e).add(&d.mul(g)),
                c.mul(f).add(&d.mul(h)),
            ],
            den: self.den.mul(&o.den),
        }
    }

    fn is_plus_minus_identity(&self) -> bool {
        let [a, b, c, d] = &self.n;
        b.is_zero() && c.is_zero() && a == d && (*a == self.den || *a == self.den.neg())
    }
}

/// Exhaustive check over `{a, b}` and a seeded sample over `{a, b, c, d}`:
/// no nontrivial element of length `≤ maxlen` maps to `±I`.
pub fn no_short_relator_check(q: &QuadrupleRep, maxlen: usize) -> Result<Report> {
    no_short_relator_check_with(q, maxlen, 200, DEFAULT_SEED)
}

pub fn no_short_relator_check_with(
    q: &QuadrupleRep,
    maxlen: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    if maxlen > NO_RELATOR_MAX {
        return Err(Error::InvalidArgument(format!("maxlen {maxlen} exceeds {NO_RELATOR_MAX}")));
    }
    let a = ScaledMat::from_rational(&q.base_a);
    let b = ScaledMat::from_rational(&q.base_b);
    let gens: Vec<(Letter, ScaledMat)> = vec![
        (Letter::new('a', false), a.clone()),
        (Letter::new('a', true), a.adjugate()),
        (Letter::new('b', false), b.clone()),
        (Letter::new('b', true), b.adjugate()),
    ];

    fn dfs(
        gens: &[(Letter, ScaledMat)],
        maxlen: usize,
        word: &mut Vec<Letter>,
        m: &ScaledMat,
        words: &mut u64,
        bad: &mut Vec<String>,
    ) {
        *words += 1;
        if m.is_plus_minus_identity() {
            bad.push(GroupWord::new(word.clone()).to_string());
        }
        if word.len() == maxlen {
            return;
        }
        for (l, g) in gens {
            if word.last() == Some(&l.inv()) {
                continue;
            }
            word.push(*l);
            dfs(gens, maxlen, word, &m.mul(g), words, bad);
            word.pop();
        }
    }

    let parts: Vec<(u64, Vec<String>)> = if maxlen == 0 {
        Vec::new()
    } else {
        gens.par_iter()
            .map(|(l, g)| {
                let (mut words, mut bad) = (0, Vec::new());
                dfs(&gens, maxlen, &mut vec![*l], g, &mut words, &mut bad);
                (words, bad)
            })
            .collect()
    };
    let words: u64 = parts.iter().map(|p| p.0).sum();
    let bad: Vec<String> = parts.into_iter().flat_map(|p| p.1).collect();

    let mut r = Report::new(format!("surface no-short-relator --maxlen {maxlen}"));
    r.counter("free_factor_words", words as i64);
    r.check("free_factor_no_relator", bad.is_empty(), bad.join(", "));

    // sampled words in all four generators
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = amalgam::ALPHABET;
    let sampled: Vec<GroupWord> = (0..if maxlen == 0 { 0 } else { samples })
        .map(|_| {
            let len = rng.gen_range(1..=maxlen);
            random_reduced_word(&mut rng, &alphabet, len)
        })
        .collect();
    let ev = q.evaluator();
    let outcomes: Vec<Result<Option<bool>>> = sampled
        .par_iter()
        .map(|w| {
            if AmalgamNormalForm::of_word(w).is_identity() {
                return Ok(None);
            }
            Ok(Some(ev.eval(w)?.is_plus_minus_identity()))
        })
        .collect();
    let mut excluded = 0;
    let mut sample_bad = Vec::new();
    for (w, o) in sampled.iter().zip(outcomes) {
        match o? {
            None => excluded += 1,
            Some(true) => sample_bad.push(w.to_string()),
            Some(false) => {}
        }
    }
    r.counter("sampled_words", sampled.len() as i64);
    r.counter("sampled_relator_consequences", excluded);
    r.check("sampled_no_relator", sample_bad.is_empty(), sample_bad.join(", "));
    Ok(r)
}

pub fn random_reduced_word<R: Rng>(rng: &mut R, alphabet: &[char], len: usize) -> GroupWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::new(alphabet[rng.gen_range(0..alphabet.len())], rng.gen_bool(0.5));
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    GroupWord::new(letters)
}

/// `γ₁δ₁⋯γ_lδ_l` with each `γᵢ` a reduced word over `{a, b}` and each `δᵢ`
/// over `{c, d}`, none of them in the edge group, syllables of length
/// `1..=max_syllable`.
pub fn random_normal_form_word<R: Rng>(rng: &mut R, pairs: usize, max_syllable: usize) -> GroupWord {
    let mut letters = Vec::new();
    for _ in 0..pairs {
        for (alphabet, factor) in [(['a', 'b'], Factor::First), (['c', 'd'], Factor::Second)] {
            loop {
                let len = rng.gen_range(1..=max_syllable.max(1));
                let w = random_reduced_word(rng, &alphabet, len);
                if amalgam::edge_exponent(factor, w.letters()).is_none() {
                    letters.extend_from_slice(w.letters());
                    break;
                }
            }
        }
    }
    GroupWord::new(letters)
}

/// Number of nonempty reduced words over `{a, b}` visited by the exhaustive
/// part of [`no_short_relator_check`].
pub fn free_factor_word_count(maxlen: usize) -> u64 {
    let mut n = 0;
    visit_reduced_words(&['a', 'b'], maxlen, &mut |_| n += 1);
    n
}
