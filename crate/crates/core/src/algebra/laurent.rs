use std::collections::BTreeMap;
use std::fmt;

use super::prime::PrimeField;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

/// Laurent polynomial in `y` with coefficients in 𝔽_p(x).
///
/// Only nonzero coefficients are stored; the empty map is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentInY {
    field: PrimeField,
    terms: BTreeMap<i32, RationalFunction>,
}

/// Images of `y` supported by [`substitute_y`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YImage {
    /// `y ↦ x^n`, landing in 𝔽_p(x).
    Power(i32),
    /// `y ↦ y·x^n`, staying in the Laurent ring.
    Rescale(i32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substituted {
    Rational(RationalFunction),
    Laurent(LaurentInY),
}

impl LaurentInY {
    pub fn zero(field: PrimeField) -> Self {
        LaurentInY { field, terms: BTreeMap::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(RationalFunction::one(field))
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·y^j`.
    pub fn monomial(c: RationalFunction, j: i32) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(j, c);
        }
        LaurentInY { field, terms }
    }

    pub fn y(field: PrimeField) -> Self {
        Self::monomial(RationalFunction::one(field), 1)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &RationalFunction)> {
        self.terms.iter().map(|(&j, c)| (j, c))
    }

    pub fn coeff(&self, j: i32) -> RationalFunction {
        self.terms.get(&j).cloned().unwrap_or_else(|| RationalFunction::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The top exponent `l` and its coefficient `α`.
    pub fn leading(&self) -> Option<(i32, &RationalFunction)> {
        self.terms.iter().next_back().map(|(&j, c)| (j, c))
    }

    pub fn trailing_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// The coefficient when the value has no `y`-dependence.
    pub fn as_constant(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero(self.field)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn insert_add(terms: &mut BTreeMap<i32, RationalFunction>, j: i32, c: RationalFunction) {
        use std::collections::btree_map::Entry;
        match terms.entry(j) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&j, c) in &other.terms {
            Self::insert_add(&mut terms, j, c.clone());
        }
        LaurentInY { field: self.field, terms }
    }

    pub fn neg(&self) -> Self {
        LaurentInY {
            field: self.field,
            terms: self.terms.iter().map(|(&j, c)| (j, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                Self::insert_add(&mut terms, i + j, a.mul(b));
            }
        }
        LaurentInY { field: self.field, terms }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        LaurentInY {
            field: self.field,
            terms: self.terms.iter().map(|(&j, a)| (j, a.mul(c))).collect(),
        }
    }

    /// Inverse of a monomial unit `α·y^j`.
    pub fn inv(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotAUnit);
        }
        let (&j, c) = self.terms.iter().next().expect("one term");
        Ok(Self::monomial(c.inv()?, -j))
    }

    /// `y ↦ x^n`: the sum of `α_j·x^{nj}`.
    pub fn substitute_power(&self, n: i32) -> RationalFunction {
        self.terms.iter().fold(RationalFunction::zero(self.field), |acc, (&j, c)| {
            acc.add(&c.mul(&RationalFunction::x_pow(self.field, n as i64 * j as i64)))
        })
    }

    /// `y ↦ y·x^n`: the coefficient of `y^j` is multiplied by `x^{nj}`.
    pub fn rescale(&self, n: i32) -> Self {
        LaurentInY {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(&j, c)| (j, c.mul(&RationalFunction::x_pow(self.field, n as i64 * j as i64))))
                .collect(),
        }
    }
}

pub fn substitute_y(a: &LaurentInY, image: YImage) -> Substituted {
    match image {
        YImage::Power(n) => Substituted::Rational(a.substitute_power(n)),
        YImage::Rescale(n) => Substituted::Laurent(a.rescale(n)),
    }
}

impl fmt::Display for LaurentInY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&j, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            match j {
                0 => write!(f, "{c}")?,
                _ => {
                    let cs = c.to_string();
                    if !c.is_one() {
                        if cs.contains('+') || cs.contains('/') {
                            write!(f, "({cs})*")?;
                        } else {
                            write!(f, "{cs}*")?;
                        }
                    }
                    if j == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
