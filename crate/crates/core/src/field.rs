//! Exact scalar arithmetic for the coefficients of every group element.
//!
//! Scalars live in the real field Q(√2, √3, √5, σ) where σ = 2·sin(π/5), so
//! σ² = (5 − √5)/2. As a Q-vector space the field has the 16-element basis
//! {1, √2, √3, √5, √6, √10, √15, √30} × {1, σ}. Every value is kept as a
//! sparse list of (basis index, rational coefficient) pairs in canonical
//! form, so equality and hashing are structural.
//!
//! Basis indices are bit masks: bit 0 = √2, bit 1 = √3, bit 2 = √5,
//! bit 3 = σ. The radical part of a product is the xor of the masks times
//! an integer factor from the shared primes; σ·σ expands to (5 − √5)/2.

use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = Ratio<BigInt>;

pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(BigInt::from(n))
}

const SIGMA_BIT: u8 = 8;
const RAD_MASK: u8 = 7;
const DIM: usize = 16;

fn radical_value(mask: u8) -> f64 {
    let mut v = 1.0f64;
    if mask & 1 != 0 {
        v *= 2.0;
    }
    if mask & 2 != 0 {
        v *= 3.0;
    }
    if mask & 4 != 0 {
        v *= 5.0;
    }
    v.sqrt()
}

fn radicand(mask: u8) -> u32 {
    let mut v = 1u32;
    if mask & 1 != 0 {
        v *= 2;
    }
    if mask & 2 != 0 {
        v *= 3;
    }
    if mask & 4 != 0 {
        v *= 5;
    }
    v
}

/// Multiply the monomial `mask` by √5: either absorbs into an integer 5 or
/// adds the √5 bit.
fn times_sqrt5(mask: u8) -> (i64, u8) {
    if mask & 4 != 0 {
        (5, mask & !4)
    } else {
        (1, mask | 4)
    }
}

/// Product of two basis monomials as a short list of (coefficient, monomial).
fn basis_mul(i: u8, j: u8) -> Vec<(Rational, u8)> {
    let common = i & j & RAD_MASK;
    let mut factor = 1i64;
    if common & 1 != 0 {
        factor *= 2;
    }
    if common & 2 != 0 {
        factor *= 3;
    }
    if common & 4 != 0 {
        factor *= 5;
    }
    let rad = (i ^ j) & RAD_MASK;
    if i & SIGMA_BIT != 0 && j & SIGMA_BIT != 0 {
        // σ² = (5 − √5)/2
        let (f5, rad5) = times_sqrt5(rad);
        vec![
            (rat(5 * factor, 2), rad),
            (rat(-factor * f5, 2), rad5),
        ]
    } else {
        let sigma = (i ^ j) & SIGMA_BIT;
        vec![(int(factor), rad | sigma)]
    }
}

/// Exact element of Q(√2, √3, √5, 2·sin(π/5)).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    /// Sorted by basis index, no zero coefficients.
    terms: Vec<(u8, Rational)>,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem { terms: Vec::new() }
    }

    pub fn one() -> Self {
        FieldElem::from_rational(int(1))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            FieldElem::zero()
        } else {
            FieldElem { terms: vec![(0, r)] }
        }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::from_rational(int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldElem::from_rational(rat(n, d))
    }

    /// c times the basis monomial with the given mask.
    pub fn term(c: Rational, mask: u8) -> Self {
        let mut e = FieldElem::zero();
        e.add_term(mask, c);
        e
    }

    pub fn sqrt2() -> Self {
        FieldElem::term(int(1), 1)
    }

    pub fn sqrt3() -> Self {
        FieldElem::term(int(1), 2)
    }

    pub fn sqrt5() -> Self {
        FieldElem::term(int(1), 4)
    }

    /// σ = 2·sin(π/5).
    pub fn sigma() -> Self {
        FieldElem::term(int(1), 8)
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        FieldElem::from_rational(rat(1, 2)) + FieldElem::term(rat(1, 2), 4)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Coefficient of the basis monomial `mask`.
    pub fn coeff(&self, mask: u8) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| *m == mask)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// True when only the rational part is populated.
    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == 0)
    }

    fn add_term(&mut self, mask: u8, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&mask, |(m, _)| *m) {
            Ok(pos) => {
                let sum = self.terms[pos].1.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(pos);
                } else {
                    self.terms[pos].1 = sum;
                }
            }
            Err(pos) => self.terms.insert(pos, (mask, c)),
        }
    }

    pub fn neg(&self) -> Self {
        FieldElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = FieldElem::zero();
        for (mi, ci) in &self.terms {
            for (mj, cj) in &other.terms {
                let c = ci * cj;
                for (f, mask) in basis_mul(*mi, *mj) {
                    out.add_term(mask, &c * f);
                }
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return FieldElem::zero();
        }
        FieldElem {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }

    /// Multiplicative inverse by solving the 16x16 linear system over Q
    /// whose matrix is "multiply by self" in the monomial basis.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column j of m is self * e_j.
        let mut m = vec![vec![Rational::zero(); DIM]; DIM];
        for j in 0..DIM {
            for (mi, ci) in &self.terms {
                for (f, mask) in basis_mul(*mi, j as u8) {
                    m[mask as usize][j] += ci * f;
                }
            }
        }
        let mut rhs = vec![Rational::zero(); DIM];
        rhs[0] = Rational::one();
        let sol = solve_linear(m, rhs).ok_or(Error::DivisionByZero)?;
        let mut out = FieldElem::zero();
        for (idx, c) in sol.into_iter().enumerate() {
            out.add_term(idx as u8, c);
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Embedding into R with every radical sent to its positive root.
    pub fn to_f64(&self) -> f64 {
        let sigma = 2.0 * (std::f64::consts::PI / 5.0).sin();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = c.to_f64().unwrap_or(f64::NAN) * radical_value(m & RAD_MASK);
                if m & SIGMA_BIT != 0 {
                    v *= sigma;
                }
                v
            })
            .sum()
    }

    /// Terms as (mask, coefficient) pairs, canonical order.
    pub fn terms(&self) -> &[(u8, Rational)] {
        &self.terms
    }
}

/// Gaussian elimination over Q; returns None when the matrix is singular.
fn solve_linear(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for j in col..n {
            m[col][j] = &m[col][j] / &p;
        }
        rhs[col] = &rhs[col] / &p;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..n {
                    let v = &m[col][j] * &f;
                    m[r][j] -= v;
                }
                let v = &rhs[col] * &f;
                rhs[r] -= v;
            }
        }
    }
    Some(rhs)
}

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl std::ops::Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self + rhs.neg()
    }
}

impl std::ops::Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        FieldElem::mul(&self, &rhs)
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

impl<'a> std::ops::Add<&'a FieldElem> for FieldElem {
    type Output = FieldElem;
    fn add(mut self, rhs: &'a FieldElem) -> FieldElem {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

/// Token for the radical part of one basis monomial ("" for 1).
pub fn radical_token(mask: u8) -> String {
    let mut s = String::new();
    let r = radicand(mask & RAD_MASK);
    if r > 1 {
        s.push_str(&format!("r{r}"));
    }
    if mask & SIGMA_BIT != 0 {
        s.push_str("s5");
    }
    s
}

pub fn mask_for_radicand(r: u32) -> Option<u8> {
    match r {
        1 => Some(0),
        2 => Some(1),
        3 => Some(2),
        5 => Some(4),
        6 => Some(3),
        10 => Some(5),
        15 => Some(6),
        30 => Some(7),
        _ => None,
    }
}

/// One signed term rendered without a leading sign: e.g. "(1/2)r2", "r6s5",
/// "2". Used by the quaternion printer, which owns sign placement.
pub fn term_string(c: &Rational, mask: u8) -> String {
    let tok = radical_token(mask);
    let mag = c.abs();
    if tok.is_empty() {
        if mag.is_integer() {
            format!("{}", mag)
        } else {
            format!("({})", mag)
        }
    } else if mag.is_one() {
        tok
    } else if mag.is_integer() {
        format!("{}{}", mag, tok)
    } else {
        format!("({}){}", mag, tok)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", term_string(c, *m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let two = FieldElem::sqrt2() * FieldElem::sqrt2();
        assert_eq!(two, FieldElem::from_int(2));
        let fifteen = FieldElem::term(int(1), 6);
        // √6·√10 = 2√15
        let prod = FieldElem::term(int(1), 3) * FieldElem::term(int(1), 5);
        assert_eq!(prod, fifteen.scale(&int(2)));
    }

    #[test]
    fn sqrt6_sqrt10_float_oracle() {
        // independent numeric check of the radical reduction
        let exact = (FieldElem::term(int(1), 3) * FieldElem::term(int(1), 5)).to_f64();
        let float = 6.0f64.sqrt() * 10.0f64.sqrt();
        assert!((exact - float).abs() < 1e-12);
    }

    #[test]
    fn golden_ratio_inverse() {
        // φ·(φ−1) = 1
        let phi = FieldElem::phi();
        let prod = phi.clone() * (phi.clone() - FieldElem::one());
        assert!(prod.is_one());
        assert_eq!(phi.inv().unwrap(), phi - FieldElem::one());
    }

    #[test]
    fn sigma_square() {
        // σ² = (5 − √5)/2
        let s2 = FieldElem::sigma() * FieldElem::sigma();
        let want = FieldElem::ratio(5, 2) - FieldElem::term(rat(1, 2), 4);
        assert_eq!(s2, want);
        assert!((FieldElem::sigma().to_f64() - 2.0 * (std::f64::consts::PI / 5.0).sin()).abs() < 1e-14);
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = FieldElem::sqrt2() + FieldElem::phi() + FieldElem::sigma().scale(&rat(3, 7));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(FieldElem::one().div(&FieldElem::zero()).is_err());
    }

    #[test]
    fn display_tokens() {
        let x = FieldElem::term(rat(1, 2), 1);
        assert_eq!(x.to_string(), "(1/2)r2");
        let y = FieldElem::ratio(-1, 2) + FieldElem::term(rat(1, 2), 4);
        assert_eq!(y.to_string(), "-(1/2) + (1/2)r5");
    }
}
