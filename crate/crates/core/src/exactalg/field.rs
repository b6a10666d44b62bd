//! Specialization targets: the cyclotomic field `Q[x]/Φ_{2l}` and finite
//! fields `GF(p^k)`, each with `v` sent to a primitive `2l`-th root of unity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A field with `v` specialized to a chosen element.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, c: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of `v^e`.
    fn v_power(&self, e: i32) -> Self::Elem;
    fn characteristic(&self) -> u64;

    /// Ring homomorphism `Z[v, v^{-1}] -> F`.
    fn specialize(&self, p: &LaurentPoly) -> Self::Elem {
        let mut acc = self.zero();
        for (e, c) in p.terms() {
            let term = self.mul(&self.from_int(c), &self.v_power(e));
            acc = self.add(&acc, &term);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, lowest degree first, no trailing zeros.

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem: QPoly = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &c * y;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn integer_poly(coeffs: &[i64]) -> QPoly {
    let mut p: QPoly = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
    trim(&mut p);
    p
}

/// Coefficients of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut xn_minus_1 = vec![0i64; n + 1];
    xn_minus_1[0] = -1;
    xn_minus_1[n] = 1;
    let mut p = integer_poly(&xn_minus_1);
    for d in 1..n {
        if n % d == 0 {
            let phi_d: QPoly = cyclotomic_polynomial(d)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            p = qpoly_divrem(&p, &phi_d).0;
        }
    }
    p.into_iter().map(|c| c.to_integer()).collect()
}

/// An element of `Q[x]/Φ_{2l}`, stored as its reduced residue.
#[derive(Clone, PartialEq, Eq)]
pub struct CycScalar {
    pub residue: Vec<BigRational>,
    pub l: u32,
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .residue
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*x^{i}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Q[x]/Φ_{2l}` with `v -> x`, so `q = x^2` is a primitive `l`-th root of unity.
/// For odd `l`, [`CyclotomicField::with_v_order`] also allows `Q[x]/Φ_l`,
/// where `v^l = 1`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    l: u32,
    v_order: u32,
    modulus: QPoly,
    powers: Vec<CycScalar>,
}

impl CyclotomicField {
    pub fn new(l: u32) -> Result<Self> {
        Self::with_v_order(l, 2 * l)
    }

    /// `v` a primitive `v_order`-th root of unity; `v_order` is `2l`, or `l`
    /// when `l` is odd.
    pub fn with_v_order(l: u32, v_order: u32) -> Result<Self> {
        if l < 1 {
            return Err(Error::InvalidParameters("l must be positive".into()));
        }
        if v_order != 2 * l && !(v_order == l && l % 2 == 1) {
            return Err(Error::InvalidParameters(format!(
                "v of order {v_order} does not make q = v^2 a primitive {l}-th root of unity"
            )));
        }
        let modulus: QPoly = cyclotomic_polynomial(v_order as usize)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut field = Self {
            l,
            v_order,
            modulus,
            powers: Vec::new(),
        };
        let mut powers = Vec::with_capacity(v_order as usize);
        let mut x_pow: QPoly = integer_poly(&[1]);
        for _ in 0..v_order {
            powers.push(field.reduce(x_pow.clone()));
            x_pow.insert(0, BigRational::zero());
        }
        field.powers = powers;
        Ok(field)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn v_order(&self) -> u32 {
        self.v_order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: QPoly) -> CycScalar {
        let (_, mut rem) = qpoly_divrem(&p, &self.modulus);
        rem.resize(self.degree(), BigRational::zero());
        CycScalar { residue: rem, l: self.l }
    }

    fn trimmed(a: &CycScalar) -> QPoly {
        let mut p = a.residue.clone();
        trim(&mut p);
        p
    }
}

impl Field for CyclotomicField {
    type Elem = CycScalar;

    fn zero(&self) -> CycScalar {
        CycScalar {
            residue: vec![BigRational::zero(); self.degree()],
            l: self.l,
        }
    }

    fn one(&self) -> CycScalar {
        self.from_int(1)
    }

    fn from_int(&self, c: i64) -> CycScalar {
        let mut z = self.zero();
        z.residue[0] = BigRational::from_integer(c.into());
        z
    }

    fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        CycScalar {
            residue: a.residue.iter().zip(&b.residue).map(|(x, y)| x + y).collect(),
            l: self.l,
        }
    }

    fn sub(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        CycScalar {
            residue: a.residue.iter().zip(&b.residue).map(|(x, y)| x - y).collect(),
            l: self.l,
        }
    }

    fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        self.reduce(qpoly_mul(&Self::trimmed(a), &Self::trimmed(b)))
    }

    fn neg(&self, a: &CycScalar) -> CycScalar {
        CycScalar {
            residue: a.residue.iter().map(|x| -x).collect(),
            l: self.l,
        }
    }

    fn inv(&self, a: &CycScalar) -> Option<CycScalar> {
        // Extended Euclid: track s with s*a ≡ r (mod Φ).
        let mut r0 = self.modulus.clone();
        let mut r1 = Self::trimmed(a);
        if r1.is_empty() {
            return None;
        }
        let mut s0: QPoly = Vec::new();
        let mut s1: QPoly = integer_poly(&[1]);
        while r1.len() > 1 {
            let (quot, rem) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // The modulus is irreducible, so this cannot happen for a ≠ 0.
                return None;
            }
        }
        let c = r1[0].recip();
        let s: QPoly = s1.into_iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }

    fn is_zero(&self, a: &CycScalar) -> bool {
        a.residue.iter().all(|c| c.is_zero())
    }

    fn v_power(&self, e: i32) -> CycScalar {
        let n = self.v_order as i32;
        self.powers[e.rem_euclid(n) as usize].clone()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}

// ---------------------------------------------------------------------------
// Finite fields.

/// An element of `GF(p^k)` as coefficients of a polynomial of degree `< k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldScalar {
    pub value: Vec<u64>,
}

/// `GF(p^k) = F_p[x]/(f)` with `v` sent to a primitive `2l`-th root.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u64,
    k: usize,
    l: u32,
    modulus: Vec<u64>,
    powers: Vec<PrimeFieldScalar>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
fn fp_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let c = a.pop().unwrap();
        if c != 0 {
            let shift = a.len() - dm;
            for i in 0..dm {
                a[shift + i] = (a[shift + i] + (p - c) * m[i] % p) % p;
            }
        }
    }
    a
}

/// Monic polynomials of degree `d` over `F_p`, as coefficient vectors.
fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(idx % p);
            idx /= p;
        }
        coeffs.push(1);
        coeffs
    })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    (1..=d / 2).all(|dd| monic_polys(p, dd).all(|g| fp_rem(f.to_vec(), &g, p).iter().any(|&c| c != 0)))
}

impl PrimeField {
    /// Field sizes above this are refused; the irreducible-polynomial
    /// search is brute force.
    pub const MAX_ORDER: u64 = 1 << 20;

    pub fn new(p: u64, k: usize, l: u32) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(Error::InvalidParameters(format!("GF({p}^{k}) is not a field")));
        }
        if p == 2 {
            return Err(Error::UnsupportedSpecialization(
                "characteristic 2 is excluded".into(),
            ));
        }
        let order = p
            .checked_pow(k as u32)
            .filter(|&o| o <= Self::MAX_ORDER)
            .ok_or_else(|| Error::ResourceLimit {
                what: format!("field order {p}^{k}"),
                guard: Self::MAX_ORDER as usize,
            })?;
        let two_l = 2 * l as u64;
        if l == 0 || (order - 1) % two_l != 0 {
            return Err(Error::UnsupportedSpecialization(format!(
                "2l = {two_l} does not divide {p}^{k} - 1"
            )));
        }
        let modulus = monic_polys(p, k)
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");
        let mut field = Self {
            p,
            k,
            l,
            modulus,
            powers: Vec::new(),
        };
        let cofactor = (order - 1) / two_l;
        let primes = prime_factors(two_l);
        let root = (1..order)
            .map(|idx| field.element_from_index(idx))
            .map(|a| field.pow(&a, cofactor))
            .find(|b| primes.iter().all(|&pr| !field.is_one(&field.pow(b, two_l / pr))))
            .expect("the multiplicative group is cyclic");
        let mut powers = Vec::with_capacity(two_l as usize);
        let mut acc = field.one();
        for _ in 0..two_l {
            powers.push(acc.clone());
            acc = field.mul(&acc, &root);
        }
        field.powers = powers;
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    fn element_from_index(&self, mut idx: u64) -> PrimeFieldScalar {
        let mut value = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            value.push(idx % self.p);
            idx /= self.p;
        }
        PrimeFieldScalar { value }
    }

    fn is_one(&self, a: &PrimeFieldScalar) -> bool {
        a.value[0] == 1 && a.value[1..].iter().all(|&c| c == 0)
    }

    fn pow(&self, a: &PrimeFieldScalar, mut e: u64) -> PrimeFieldScalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldScalar;

    fn zero(&self) -> PrimeFieldScalar {
        PrimeFieldScalar { value: vec![0; self.k] }
    }

    fn one(&self) -> PrimeFieldScalar {
        self.from_int(1)
    }

    fn from_int(&self, c: i64) -> PrimeFieldScalar {
        let mut z = self.zero();
        z.value[0] = c.rem_euclid(self.p as i64) as u64;
        z
    }

    fn add(&self, a: &PrimeFieldScalar, b: &PrimeFieldScalar) -> PrimeFieldScalar {
        PrimeFieldScalar {
            value: a.value.iter().zip(&b.value).map(|(x, y)| (x + y) % self.p).collect(),
        }
    }

    fn sub(&self, a: &PrimeFieldScalar, b: &PrimeFieldScalar) -> PrimeFieldScalar {
        PrimeFieldScalar {
            value: a
                .value
                .iter()
                .zip(&b.value)
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect(),
        }
    }

    fn mul(&self, a: &PrimeFieldScalar, b: &PrimeFieldScalar) -> PrimeFieldScalar {
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, x) in a.value.iter().enumerate() {
            for (j, y) in b.value.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut value = fp_rem(prod, &self.modulus, self.p);
        value.resize(self.k, 0);
        PrimeFieldScalar { value }
    }

    fn neg(&self, a: &PrimeFieldScalar) -> PrimeFieldScalar {
        self.sub(&self.zero(), a)
    }

    fn inv(&self, a: &PrimeFieldScalar) -> Option<PrimeFieldScalar> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order() - 2))
        }
    }

    fn is_zero(&self, a: &PrimeFieldScalar) -> bool {
        a.value.iter().all(|&c| c == 0)
    }

    fn v_power(&self, e: i32) -> PrimeFieldScalar {
        let n = 2 * self.l as i32;
        self.powers[e.rem_euclid(n) as usize].clone()
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
}
