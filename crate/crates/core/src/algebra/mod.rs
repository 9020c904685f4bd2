//! Exact arithmetic: 𝔽_p, 𝔽_p[x], 𝔽_p(x) and Laurent polynomials in `y`
//! over 𝔽_p(x).

mod laurent;
mod parse;
mod poly;
mod prime;
mod rational;

use std::fmt::Debug;

pub use laurent::{substitute_y, LaurentInY, Substituted, YImage};
pub use parse::parse_rational;
pub use poly::Polynomial;
pub use prime::{is_prime, PrimeField};
pub use rational::RationalFunction;

/// Commutative ring with identity, the coefficient interface for
/// [`crate::matrix2::Matrix2`].
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse if the element is a unit.
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero(self.field())
    }
    fn one_like(&self) -> Self {
        RationalFunction::one(self.field())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RationalFunction::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RationalFunction::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RationalFunction::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Ring for LaurentInY {
    fn zero_like(&self) -> Self {
        LaurentInY::zero(self.field())
    }
    fn one_like(&self) -> Self {
        LaurentInY::one(self.field())
    }
    fn is_zero(&self) -> bool {
        LaurentInY::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LaurentInY::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentInY::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LaurentInY::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentInY::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LaurentInY::neg(self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}
