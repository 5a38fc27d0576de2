//! Integer Laurent polynomials in `u` and polynomials in `q = u^2`.
//!
//! The bar involution substitutes `u -> u^-1`. The distinguished element
//! `abar = u^-1 - u` satisfies `bar(abar) = -abar`; the R-style polynomial
//! families of this crate are polynomials in `abar`, stored internally in
//! the `u`-basis with the `abar`-basis available as a view.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::CoxError;

/// A sparse integer Laurent polynomial in `u`. No zero coefficients are
/// stored; equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::u_pow(0)
    }

    /// The monomial `u^k`.
    pub fn u_pow(k: i64) -> LaurentPoly {
        let mut c = BTreeMap::new();
        c.insert(k, BigInt::one());
        LaurentPoly { coeffs: c }
    }

    /// `abar = u^-1 - u`.
    pub fn abar() -> LaurentPoly {
        let mut c = BTreeMap::new();
        c.insert(-1, BigInt::one());
        c.insert(1, -BigInt::one());
        LaurentPoly { coeffs: c }
    }

    /// `alpha = u - u^-1 = -abar`.
    pub fn alpha() -> LaurentPoly {
        -LaurentPoly::abar()
    }

    pub fn abar_pow(n: usize) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        let a = LaurentPoly::abar();
        for _ in 0..n {
            p = &p * &a;
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int(c: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(0, BigInt::from(c));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// The bar involution `u -> u^-1`.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// The part with strictly negative exponents.
    pub fn negative_part(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().filter(|(e, _)| **e < 0).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Value of the derivative (with respect to `u`) at `u = 1`:
    /// `sum e * c_e`.
    pub fn derivative_at_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            acc += BigInt::from(*e) * c;
        }
        acc
    }

    /// Value at `u = 1`: `sum c_e`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Coefficients in the `abar`-basis, ascending from `abar^0`. Errors if
    /// the polynomial does not lie in `Z[abar]`.
    pub fn abar_coeffs(&self) -> Result<Vec<BigInt>, CoxError> {
        let mut rem = self.clone();
        let mut out: Vec<BigInt> = Vec::new();
        while !rem.is_zero() {
            let lo = rem.min_exp().unwrap();
            if lo > 0 {
                return Err(CoxError::NotKlNormalForm);
            }
            let n = (-lo) as usize;
            let c = rem.coeff(lo);
            if out.len() <= n {
                out.resize(n + 1, BigInt::zero());
            }
            out[n] = c.clone();
            rem = &rem - &LaurentPoly::abar_pow(n).scale(&c);
            if let Some(new_lo) = rem.min_exp() {
                if new_lo <= lo {
                    return Err(CoxError::NotKlNormalForm);
                }
            }
        }
        if out.is_empty() {
            out.push(BigInt::zero());
        }
        Ok(out)
    }

    /// Degree in `abar`, or `None` for the zero polynomial.
    pub fn abar_degree(&self) -> Result<Option<usize>, CoxError> {
        if self.is_zero() {
            return Ok(None);
        }
        let coeffs = self.abar_coeffs()?;
        Ok(Some(coeffs.len() - 1))
    }

    /// Whether the polynomial is monic of the given degree in `abar`.
    pub fn is_abar_monic_of_degree(&self, deg: usize) -> bool {
        match self.abar_coeffs() {
            Ok(c) => c.len() == deg + 1 && c[deg].is_one(),
            Err(_) => false,
        }
    }

    pub fn from_abar_coeffs(coeffs: &[BigInt]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (n, c) in coeffs.iter().enumerate() {
            p = &p + &LaurentPoly::abar_pow(n).scale(c);
        }
        p
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body: String = match (*e, mag.is_one()) {
                (0, _) => alloc::format!("{mag}"),
                (1, true) => "u".into(),
                (1, false) => alloc::format!("{mag}*u"),
                (_, true) => alloc::format!("u^{e}"),
                (_, false) => alloc::format!("{mag}*u^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// A polynomial in `q` with nonnegative exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> QPoly {
        QPoly::from_terms([(0, BigInt::one())])
    }

    pub fn q_pow(k: u32) -> QPoly {
        QPoly::from_terms([(k, BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, BigInt)>>(terms: I) -> QPoly {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int(c: i64) -> QPoly {
        QPoly::from_terms([(0, BigInt::from(c))])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// The Laurent polynomial obtained by `q -> u^2`.
    pub fn subst_u_squared(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(e, c)| (2 * *e as i64, c.clone())))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body: String = match (*e, mag.is_one()) {
                (0, _) => alloc::format!("{mag}"),
                (1, true) => "q".into(),
                (1, false) => alloc::format!("{mag}*q"),
                (_, true) => alloc::format!("q^{e}"),
                (_, false) => alloc::format!("{mag}*q^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `Rtilde(u) = (-u)^{lx - ly} R(u^2)`: the u-normalized form of a
/// classical R-polynomial between elements of lengths `lx <= ly`.
pub fn r_tilde_from_q(rq: &QPoly, lx: i64, ly: i64) -> LaurentPoly {
    let shift = lx - ly;
    let sign = if shift.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
    rq.subst_u_squared().shift(shift).scale(&sign)
}

/// The `q`-form `P` with `u^{lhigh - llow} p = P(u^2)`. Errors if the
/// shifted polynomial has odd or negative exponents.
pub fn p_normalize(p: &LaurentPoly, llow: i64, lhigh: i64) -> Result<QPoly, CoxError> {
    let shifted = p.shift(lhigh - llow);
    let mut out = QPoly::zero();
    for (e, c) in shifted.terms() {
        if *e < 0 || e % 2 != 0 {
            return Err(CoxError::NotKlNormalForm);
        }
        out.add_term((*e / 2) as u32, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_basics() {
        let u = LaurentPoly::u_pow(1);
        assert_eq!(u.bar(), LaurentPoly::u_pow(-1));
        let alpha = LaurentPoly::alpha();
        assert_eq!(alpha.bar(), -alpha.clone());
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        assert_eq!(alpha.bar().bar(), alpha);
    }

    #[test]
    fn r_tilde_bridge() {
        // R = q - 1, lengths 0 and 1 -> abar
        let rq = QPoly::from_terms([(1, 1.into()), (0, (-1).into())]);
        assert_eq!(r_tilde_from_q(&rq, 0, 1), LaurentPoly::abar());
        // R = 1, equal lengths -> 1
        assert_eq!(r_tilde_from_q(&QPoly::one(), 3, 3), LaurentPoly::one());
        // R = (q-1)^3 + q(q-1), lengths 0 and 3 -> abar^3 + abar
        let qm1 = QPoly::from_terms([(1, 1.into()), (0, (-1).into())]);
        let rq = &(&(&qm1 * &qm1) * &qm1) + &(&QPoly::q_pow(1) * &qm1);
        let expect = &LaurentPoly::abar_pow(3) + &LaurentPoly::abar();
        assert_eq!(r_tilde_from_q(&rq, 0, 3), expect);
    }

    #[test]
    fn p_normalize_cases() {
        assert_eq!(p_normalize(&LaurentPoly::one(), 5, 5).unwrap(), QPoly::one());
        assert_eq!(p_normalize(&LaurentPoly::u_pow(-2), 0, 2).unwrap(), QPoly::one());
        // odd exponent after shift
        assert!(p_normalize(&LaurentPoly::u_pow(-1), 0, 2).is_err());
        // u^2 * (u^-2 + 1) = 1 + q is valid
        let p = &LaurentPoly::u_pow(-2) + &LaurentPoly::one();
        let expect = QPoly::from_terms([(0, 1.into()), (1, 1.into())]);
        assert_eq!(p_normalize(&p, 0, 2).unwrap(), expect);
    }

    #[test]
    fn abar_basis_roundtrip() {
        for n in 0..=12usize {
            let p = LaurentPoly::abar_pow(n);
            let coeffs = p.abar_coeffs().unwrap();
            assert_eq!(LaurentPoly::from_abar_coeffs(&coeffs), p);
            assert!(p.is_abar_monic_of_degree(n));
        }
        // u itself is not in Z[abar]
        assert!(LaurentPoly::u_pow(1).abar_coeffs().is_err());
    }
}
