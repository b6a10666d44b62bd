//! Sparse Laurent polynomials in `v` with integer coefficients.
//!
//! `q` is always `v^2`. Textual form: terms in ascending exponent, each
//! written `c*v^e` (or just `c` for `e = 0`), joined by `" + "`. The zero
//! polynomial prints as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Canonical form: no stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(1, 2)
    }

    /// `(-1)^s v^e`, the shape of every sign-and-power scalar in the formulas.
    pub fn signed_power(s: i64, exp: i64) -> Self {
        Self::monomial(sign(s), exp as i32)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// If the polynomial is `c * v^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(i64, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, &c)| (c, e))
        } else {
            None
        }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Substitutes `v -> v^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        if k == 0 {
            return Self::constant(self.terms.values().sum());
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e * k, c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True when the polynomial is invariant under `v -> v^{-1}`.
    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// Exact division. Returns `None` if `divisor` is zero or does not
    /// divide `self` in `Z[v, v^{-1}]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = divisor.min_exp()?;
        let d_hi = divisor.max_exp()?;
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the remainder must vanish before its
        // degree span drops below the divisor's.
        while let Some(r_hi) = rem.max_exp() {
            let r_lo = rem.min_exp().unwrap();
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let c = rem.coeff(r_hi);
            if c % lead != 0 {
                return None;
            }
            let term = Self::monomial(c / lead, r_hi - d_hi);
            rem -= &(&term * divisor);
            quot += &term;
        }
        Some(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    /// LaTeX rendering, e.g. `1 + v^{2} - 2v^{-1}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            match (mag, e) {
                (_, 0) => out.push_str(&mag.to_string()),
                (1, 1) => out.push('v'),
                (1, _) => out.push_str(&format!("v^{{{e}}}")),
                (_, 1) => out.push_str(&format!("{mag}v")),
                _ => out.push_str(&format!("{mag}v^{{{e}}}")),
            }
        }
        out
    }
}

fn parse_term(term: &str) -> Result<(i32, i64)> {
    let bad = || Error::Parse(format!("bad Laurent term {term:?}"));
    let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad());
    }
    let (coeff_part, var_part) = match t.find('v') {
        Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
        None => (t.as_str(), None),
    };
    let coeff_part = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
    let c: i64 = match coeff_part {
        "" | "+" if var_part.is_some() => 1,
        "-" if var_part.is_some() => -1,
        s => s.parse().map_err(|_| bad())?,
    };
    let e: i32 = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?,
    };
    Ok((e, c))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut p = LaurentPoly::zero();
        for term in s.split(" + ") {
            let (e, c) = parse_term(term)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn display_matches_documented_form() {
        let p = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        assert_eq!(p.to_string(), "1 + 1*v^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let p = LaurentPoly::from_terms([(-1, -2), (3, 1)]);
        assert_eq!(p.to_string(), "-2*v^-1 + 1*v^3");
    }

    #[test]
    fn parse_accepts_loose_forms() {
        let p: LaurentPoly = "v + -v^-1 + 3".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(1, 1), (-1, -1), (0, 3)]));
        assert!("1 + x".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn v_times_inverse_is_one() {
        let v = LaurentPoly::v();
        let vinv = LaurentPoly::monomial(1, -1);
        assert!((&v * &vinv).is_one());
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        let b = LaurentPoly::from_terms([(-3, 2), (0, -1), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let not_divisible = &prod + &LaurentPoly::one();
        assert_eq!(not_divisible.div_exact(&a), None);
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    proptest! {
        #[test]
        fn text_round_trip(p in poly()) {
            let s = p.to_string();
            prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        }

        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_form_has_no_zero_coefficients(a in poly(), b in poly()) {
            let p = &(&a * &b) - &b;
            prop_assert!(p.terms().all(|(_, c)| c != 0));
        }
    }
}
