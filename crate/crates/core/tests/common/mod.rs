#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use treecert::algebra::{Polynomial, PrimeField, RationalFunction};
use treecert::matrix2::{GroupWord, Letter, Matrix2};
use treecert::valuation_bt::Mat;

pub fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn poly(p: u64, max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0..p as i64, 0..=max_deg + 1).prop_map(move |c| Polynomial::from_i64(field(p), &c))
}

pub fn nonzero_poly(p: u64, max_deg: usize) -> impl Strategy<Value = Polynomial> {
    poly(p, max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn rational(p: u64, max_deg: usize) -> impl Strategy<Value = RationalFunction> {
    (poly(p, max_deg), nonzero_poly(p, max_deg)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn nonzero_rational(p: u64, max_deg: usize) -> impl Strategy<Value = RationalFunction> {
    rational(p, max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

fn upper(f: &RationalFunction) -> Mat {
    let one = RationalFunction::one(f.field());
    Matrix2::new(one.clone(), f.clone(), RationalFunction::zero(f.field()), one)
}

fn lower(f: &RationalFunction) -> Mat {
    let one = RationalFunction::one(f.field());
    Matrix2::new(one.clone(), RationalFunction::zero(f.field()), f.clone(), one)
}

/// Products of elementary matrices, so the determinant is 1 by construction.
pub fn sl2(p: u64, max_deg: usize, factors: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((rational(p, max_deg), any::<bool>()), 1..=factors).prop_map(move |fs| {
        let f = field(p);
        let id = Matrix2::identity_like(&RationalFunction::one(f));
        fs.iter().fold(id, |acc, (e, up)| acc.mul(&if *up { upper(e) } else { lower(e) }))
    })
}

/// A polynomial-entry SL₂ matrix with trace of degree `deg` (hyperbolic of
/// length `2·deg` when `deg ≥ 1`): `[[t, -1], [1, 0]]` conjugated by an
/// elementary product.
pub fn hyperbolic(p: u64, deg: usize) -> impl Strategy<Value = Mat> {
    (prop::collection::vec(0..p as i64, deg..=deg), 1..p as i64, sl2(p, 1, 2)).prop_map(move |(mut c, lead, h)| {
        let f = field(p);
        c.push(lead);
        let t = RationalFunction::from_poly(Polynomial::from_i64(f, &c));
        let one = RationalFunction::one(f);
        let g = Matrix2::new(t, one.neg(), one.clone(), RationalFunction::zero(f));
        h.mul(&g).mul(&h.inv().unwrap())
    })
}

pub fn word(alphabet: &'static [char], max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((0..alphabet.len(), any::<bool>()), 0..=max_len)
        .prop_map(move |ls| GroupWord::new(ls.into_iter().map(|(i, inv)| Letter::new(alphabet[i], inv)).collect()))
}

pub fn assignment(p: u64) -> impl Strategy<Value = BTreeMap<char, Mat>> {
    (sl2(p, 1, 3), sl2(p, 1, 3)).prop_map(|(a, b)| BTreeMap::from([('a', a), ('b', b)]))
}
