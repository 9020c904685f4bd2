use std::fmt;

use super::prime::PrimeField;

/// Dense univariate polynomial over 𝔽_p, coefficients indexed by degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has an empty
/// coefficient vector and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn zero(field: PrimeField) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::from_coeffs(field, vec![field.reduce(c)])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(field: PrimeField, c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = field.reduce(c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    /// Builds from residues in ascending degree order. Values are reduced mod p.
    pub fn from_coeffs(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.modulus();
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        let mut out = Polynomial { field, coeffs };
        out.trim();
        out
    }

    /// Builds from signed integers in ascending degree order.
    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lowest degree with a nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "mixed characteristics");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::from_coeffs(f, coeffs)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Polynomial { field: f, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let p = self.field.modulus() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::from_coeffs(self.field, acc.into_iter().map(|c| c as u32).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { field: self.field, coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check(divisor);
        let f = self.field;
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = f.inv(divisor.leading_coeff()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(f, quot), Self::from_coeffs(f, rem))
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading_coeff()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, at: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, at), c))
    }
}

impl fmt::Display for Polynomial {
    /// Decreasing-degree order with coefficients in `[0, p)`, e.g. `3*x^2+x+4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gcd_with_zero_is_monic_copy() {
        let g = f(5);
        let a = Polynomial::from_i64(g, &[1, 0, 2]);
        assert_eq!(a.gcd(&Polynomial::zero(g)), a.monic());
        assert!(Polynomial::zero(g).gcd(&Polynomial::zero(g)).is_zero());
    }

    #[test]
    fn gcd_by_hand_over_f3() {
        // x^2 - 1 = (x-1)(x+1), (x+1)^2
        let g = f(3);
        let a = Polynomial::from_i64(g, &[-1, 0, 1]);
        let b = Polynomial::from_i64(g, &[1, 2, 1]);
        assert_eq!(a.gcd(&b), Polynomial::from_i64(g, &[1, 1]));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let g = f(7);
        let x = Polynomial::x(g);
        let x1 = Polynomial::from_i64(g, &[1, 1]);
        assert!(x.gcd(&x1).is_one());
    }

    #[test]
    fn div_rem_reconstructs() {
        let g = f(101);
        let a = Polynomial::from_i64(g, &[3, 0, 5, 7, 1, 9]);
        let b = Polynomial::from_i64(g, &[2, 4, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn display_decreasing_degree() {
        let g = f(5);
        let a = Polynomial::from_i64(g, &[-1, 1, 0, 2]);
        assert_eq!(a.to_string(), "2*x^3+x+4");
        assert_eq!(Polynomial::zero(g).to_string(), "0");
    }
}
