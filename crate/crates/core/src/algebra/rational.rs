use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::prime::PrimeField;
use crate::error::{Error, Result};

/// An element of 𝔽_p(x) in canonical form: `gcd(num, den) = 1`, `den` monic,
/// zero stored as `0/1`. Two values are equal iff their representations are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        let field = den.field();
        if num.is_zero() {
            return Self::zero(field);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff();
        if lc != 1 {
            let inv = field.inv(lc).expect("nonzero leading coefficient");
            num = num.scale(inv);
            den = den.scale(inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(num: Polynomial) -> Self {
        let den = Polynomial::one(num.field());
        RationalFunction { num, den }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::zero(field))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::one(field))
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::from_poly(Polynomial::constant(field, c))
    }

    pub fn x(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::x(field))
    }

    /// `x^k` for any integer `k`.
    pub fn x_pow(field: PrimeField, k: i64) -> Self {
        let m = Polynomial::monomial(field, 1, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RationalFunction { num: Polynomial::one(field), den: m }
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in 𝔽_p.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field());
        }
        // cross-cancel first to keep intermediate degrees low
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = (self.num.div_rem(&g1).0, other.den.div_rem(&g1).0);
        let (n2, d1) = (other.num.div_rem(&g2).0, self.den.div_rem(&g2).0);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading_coeff();
        let inv = self.field().inv(lc).expect("nonzero leading coefficient");
        RationalFunction { num: num.scale(inv), den: den.scale(inv) }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: u32) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }
}

impl fmt::Display for RationalFunction {
    /// Canonical printing: `num` alone when the denominator is 1, otherwise
    /// `(num)/(den)` with parentheses dropped around single terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let terms = p.coeffs().iter().filter(|&&c| c != 0).count();
            if terms > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                RationalFunction::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::neg(self)
    }
}
