//! The minus-degree valuation on 𝔽_p(x) and the Bruhat–Tits tree of
//! `SL(2)` over its completion.
//!
//! `v(f/g) = deg g − deg f`. The name "valuation at zero" sometimes attached
//! to this map is a misnomer: it is the valuation at infinity of 𝔽_p(x), with
//! uniformizer `π = 1/x`. Working instead with the valuation at `x = 0`
//! amounts to substituting `1/x` for `x` in every input.
//!
//! Vertices are homothety classes of rank-2 lattices over the valuation ring
//! `O = {f : v(f) ≥ 0}`. Every class has a unique basis of the form
//!
//! ```text
//! [ π^n  c ]
//! [ 0    1 ]
//! ```
//!
//! with `c` reduced modulo `π^n·O`, i.e. `c = Σ c_j x^j` keeping only the
//! exponents `j > −n`. [`LatticeVertex`] stores `(n, c)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::algebra::{Polynomial, PrimeField, RationalFunction};
use crate::error::{Error, Result};
use crate::matrix2::Matrix2;

pub type Mat = Matrix2<RationalFunction>;

/// `v(f)`, with `None` standing for `+∞` at zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub struct Valuation(pub Option<i64>);

impl Valuation {
    pub const INFINITY: Valuation = Valuation(None);

    pub fn finite(self) -> Option<i64> {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_none()
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.0, other.0) {
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (Some(_), None) => std::cmp::Ordering::Less,
            (Some(a), Some(b)) => a.cmp(&b),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "inf"),
        }
    }
}

pub fn val(f: &RationalFunction) -> Valuation {
    match f.numerator().degree() {
        None => Valuation::INFINITY,
        Some(dn) => {
            let dd = f.denominator().degree().expect("nonzero denominator");
            Valuation(Some(dd as i64 - dn as i64))
        }
    }
}

fn finite_val(f: &RationalFunction) -> i64 {
    val(f).0.expect("nonzero element")
}

/// Residue in 𝔽_p of an element with `v(f) ≥ 0`: the ratio of leading
/// coefficients when `v(f) = 0`, zero when `v(f) > 0`.
pub fn residue(f: &RationalFunction) -> Option<u32> {
    match val(f).0 {
        None => Some(0),
        Some(v) if v > 0 => Some(0),
        Some(0) => {
            let field = f.field();
            let lc_den = f.denominator().leading_coeff();
            Some(field.mul(f.numerator().leading_coeff(), field.inv(lc_den)?))
        }
        Some(_) => None,
    }
}

/// Keeps the terms `c_j x^j` of the expansion at infinity with `j ≥ min_exp`.
/// The result is `f` modulo `π^{1−min_exp}·O`.
pub fn truncate_at_infinity(f: &RationalFunction, min_exp: i64) -> RationalFunction {
    let field = f.field();
    if f.is_zero() {
        return f.clone();
    }
    let shift = (-min_exp).max(0) as usize;
    let (q, _) = f.numerator().shift(shift).div_rem(f.denominator());
    let keep_from = (min_exp + shift as i64).max(0) as usize;
    let mut coeffs = q.coeffs().to_vec();
    for c in coeffs.iter_mut().take(keep_from) {
        *c = 0;
    }
    let kept = Polynomial::from_coeffs(field, coeffs);
    RationalFunction::new(kept, Polynomial::monomial(field, 1, shift)).expect("monomial denominator")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Classification {
    Elliptic,
    Hyperbolic { translation_length: u64 },
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Elliptic => write!(f, "Elliptic"),
            Classification::Hyperbolic { translation_length } => {
                write!(f, "Hyperbolic(translation_length={translation_length})")
            }
        }
    }
}

fn ensure_unimodular(m: &Mat) -> Result<()> {
    if m.det().is_one() {
        Ok(())
    } else {
        Err(Error::NotUnimodular)
    }
}

/// Hyperbolic with length `−2·v(tr)` when `v(tr) < 0`, elliptic otherwise.
pub fn classify(m: &Mat) -> Result<Classification> {
    ensure_unimodular(m)?;
    Ok(classify_trace(&m.trace()))
}

pub fn classify_trace(trace: &RationalFunction) -> Classification {
    match val(trace).0 {
        Some(v) if v < 0 => Classification::Hyperbolic { translation_length: (-2 * v) as u64 },
        _ => Classification::Elliptic,
    }
}

/// A vertex of the Bruhat–Tits tree in canonical form (see module docs).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeVertex {
    level: i64,
    offset: RationalFunction,
}

impl LatticeVertex {
    /// The class of the standard lattice `O²`.
    pub fn base(field: PrimeField) -> Self {
        LatticeVertex { level: 0, offset: RationalFunction::zero(field) }
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn offset(&self) -> &RationalFunction {
        &self.offset
    }

    pub fn field(&self) -> PrimeField {
        self.offset.field()
    }

    /// The canonical basis `[[π^n, c], [0, 1]]`.
    pub fn basis(&self) -> Mat {
        let f = self.field();
        Matrix2::new(
            RationalFunction::x_pow(f, -self.level),
            self.offset.clone(),
            RationalFunction::zero(f),
            RationalFunction::one(f),
        )
    }
}

impl fmt::Display for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}, c={}]", self.level, self.offset)
    }
}

/// Canonical representative of the lattice spanned by the columns of `basis`.
pub fn canonicalize(basis: &Mat) -> Result<LatticeVertex> {
    if basis.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let (mut c1, mut c2) = ((basis.a.clone(), basis.c.clone()), (basis.b.clone(), basis.d.clone()));
    // put the bottom entry of smaller valuation in the second column
    if val(&c1.1) < val(&c2.1) {
        std::mem::swap(&mut c1, &mut c2);
    }
    let t = c1.1.div(&c2.1)?;
    let top_left = c1.0.sub(&t.mul(&c2.0));
    let scale = c2.1.inv()?;
    let top_left = top_left.mul(&scale);
    let offset = c2.0.mul(&scale);
    let level = finite_val(&top_left);
    Ok(LatticeVertex { level, offset: truncate_at_infinity(&offset, 1 - level) })
}

/// `g·v`; requires `det g = 1`.
pub fn act(g: &Mat, v: &LatticeVertex) -> Result<LatticeVertex> {
    ensure_unimodular(g)?;
    canonicalize(&g.mul(&v.basis()))
}

/// `|e1 − e2|` for the elementary-divisor valuations of `B1⁻¹·B2`.
pub fn distance(v1: &LatticeVertex, v2: &LatticeVertex) -> u64 {
    let m = v1.basis().inv().expect("canonical bases are invertible").mul(&v2.basis());
    let e1 = m.entries().into_iter().filter_map(|e| val(e).0).min().expect("nonzero matrix");
    let total = finite_val(&m.det());
    (total - 2 * e1) as u64
}

/// The `p + 1` vertices adjacent to `v`.
pub fn neighbors(v: &LatticeVertex) -> Vec<LatticeVertex> {
    let f = v.field();
    let pi = RationalFunction::x_pow(f, -1);
    let zero = RationalFunction::zero(f);
    let one = RationalFunction::one(f);
    let b = v.basis();
    let mut out = Vec::with_capacity(f.modulus() as usize + 1);
    for t in 0..f.modulus() {
        let step = Matrix2::new(pi.clone(), RationalFunction::constant(f, t as i64), zero.clone(), one.clone());
        out.push(canonicalize(&b.mul(&step)).expect("nonsingular"));
    }
    let step = Matrix2::new(one, zero.clone(), zero, pi);
    out.push(canonicalize(&b.mul(&step)).expect("nonsingular"));
    out
}

/// All vertices within `radius` of `center`, in breadth-first order.
pub fn ball(center: &LatticeVertex, radius: u32) -> Result<Vec<LatticeVertex>> {
    if radius > 8 {
        return Err(Error::RadiusTooLarge(radius));
    }
    let mut seen: HashSet<LatticeVertex> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(center.clone());
    queue.push_back((center.clone(), 0u32));
    while let Some((v, d)) = queue.pop_front() {
        if d < radius {
            for n in neighbors(&v) {
                if seen.insert(n.clone()) {
                    queue.push_back((n, d + 1));
                }
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// `min_{u ∈ ball} d(u, g·u)`.
pub fn min_displacement_on_ball(g: &Mat, center: &LatticeVertex, radius: u32) -> Result<u64> {
    use rayon::prelude::*;
    ensure_unimodular(g)?;
    let vertices = ball(center, radius)?;
    let min = vertices
        .par_iter()
        .map(|u| canonicalize(&g.mul(&u.basis())).map(|gu| distance(u, &gu)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("ball contains its center");
    Ok(min)
}
