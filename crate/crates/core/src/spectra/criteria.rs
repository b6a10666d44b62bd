use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{balanced_gauss, CyclotomicField, Field, PrimeField};

/// Which semisimplicity criterion to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `S(m|n, r)` with `m, n >= 1`.
    Super,
    /// The q-Schur algebra `S(m, r)` (`n = 0`).
    Classical,
    /// The infinitesimal or little subalgebra, `m, n >= 1`.
    InfinitesimalLittle,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "super" => Ok(Variant::Super),
            "classical" => Ok(Variant::Classical),
            "infinitesimal" | "little" | "infinitesimal_little" => Ok(Variant::InfinitesimalLittle),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

/// Parameters of a specialization: `q` a primitive `l`-th root of unity
/// (`l = None` when `q` is not a root of unity) over a field of
/// characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecParams {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub l: Option<u32>,
    pub p: u64,
}

pub fn predict_semisimple(variant: Variant, s: SpecParams) -> Result<bool> {
    if s.p == 2 {
        return Err(Error::UnsupportedSpecialization("characteristic 2 is excluded".into()));
    }
    if s.l == Some(1) || s.l == Some(0) {
        return Err(Error::InvalidParameters("q must not be 1, so l >= 2".into()));
    }
    let below_l = s.l.is_none_or(|l| s.r < l as usize);
    let not_dividing = |l: Option<u32>| l.is_some_and(|l| s.r % l as usize != 0);
    match variant {
        Variant::Super | Variant::InfinitesimalLittle => {
            if s.m == 0 || s.n == 0 {
                return Err(Error::InvalidParameters(format!(
                    "{variant:?} needs m, n >= 1, got ({}, {})",
                    s.m, s.n
                )));
            }
            if variant == Variant::InfinitesimalLittle && s.l.is_none() {
                return Err(Error::InvalidParameters("the subalgebras need q a root of unity".into()));
            }
            Ok(below_l || (s.m == 1 && s.n == 1 && not_dividing(s.l)))
        }
        Variant::Classical => {
            if s.n != 0 {
                return Err(Error::InvalidParameters("the classical case has n = 0".into()));
            }
            if s.m <= 1 || below_l {
                return Ok(true);
            }
            let odd_l2 = s.m == 2 && s.l == Some(2) && s.r % 2 == 1;
            Ok(odd_l2 && (s.p == 0 || s.r < 2 * s.p as usize + 1))
        }
    }
}

/// Smallest `k` with `2l | p^k - 1`.
pub fn splitting_degree(p: u64, l: u32) -> Result<usize> {
    let two_l = 2 * l as u64;
    if two_l % p == 0 {
        return Err(Error::UnsupportedSpecialization(format!(
            "no primitive {two_l}-th root of unity in characteristic {p}"
        )));
    }
    let mut x = p % two_l;
    for k in 1..=two_l as usize {
        if x == 1 {
            return Ok(k);
        }
        x = x * p % two_l;
    }
    Err(Error::UnsupportedSpecialization(format!("2l = {two_l} and p = {p} are not coprime")))
}

/// Whether the Weyl module `Δ(λ)` of `S(2, λ1 + λ2)` is irreducible:
/// `Π_{a <= λ1 - λ2} [λ1 - λ2 over a]_v` is nonzero at `v` a primitive
/// `2l`-th root of unity in characteristic `p`.
pub fn weyl_irreducible_sl2(lambda1: usize, lambda2: usize, l: u32, p: u64) -> Result<bool> {
    if lambda1 < lambda2 {
        return Err(Error::InvalidWeight(format!("({lambda1}, {lambda2}) is not dominant")));
    }
    let d = (lambda1 - lambda2) as u32;
    let binoms = (0..=d).map(|a| balanced_gauss(d, a).expect("a <= d"));
    if p == 0 {
        let f = CyclotomicField::new(l)?;
        Ok(binoms.into_iter().all(|b| !f.is_zero(&f.specialize(&b))))
    } else {
        let f = PrimeField::new(p, splitting_degree(p, l)?, l)?;
        Ok(binoms.into_iter().all(|b| !f.is_zero(&f.specialize(&b))))
    }
}

/// `S(2, r)` is semisimple iff every Weyl module `Δ(λ)`, `λ ∈ Λ^+(2, r)`,
/// is irreducible.
pub fn weyl_semisimple_sl2(r: usize, l: u32, p: u64) -> Result<bool> {
    for lambda2 in 0..=r / 2 {
        if !weyl_irreducible_sl2(r - lambda2, lambda2, l, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: usize, n: usize, r: usize, l: u32, p: u64) -> SpecParams {
        SpecParams { m, n, r, l: Some(l), p }
    }

    #[test]
    fn super_table() {
        assert!(predict_semisimple(Variant::Super, params(1, 1, 5, 2, 0)).unwrap());
        assert!(!predict_semisimple(Variant::Super, params(1, 1, 4, 2, 0)).unwrap());
        assert!(!predict_semisimple(Variant::Super, params(2, 1, 2, 2, 0)).unwrap());
        assert!(predict_semisimple(Variant::Super, params(2, 1, 1, 2, 0)).unwrap());
        let generic = SpecParams { l: None, ..params(3, 2, 9, 2, 0) };
        assert!(predict_semisimple(Variant::Super, generic).unwrap());
        assert!(predict_semisimple(Variant::Super, params(0, 1, 1, 2, 0)).is_err());
    }

    #[test]
    fn classical_table() {
        assert!(predict_semisimple(Variant::Classical, params(2, 0, 3, 2, 0)).unwrap());
        assert!(!predict_semisimple(Variant::Classical, params(2, 0, 7, 2, 3)).unwrap());
        assert!(predict_semisimple(Variant::Classical, params(2, 0, 5, 2, 3)).unwrap());
        assert!(!predict_semisimple(Variant::Classical, params(3, 0, 3, 2, 0)).unwrap());
        assert!(predict_semisimple(Variant::Classical, params(1, 0, 7, 2, 0)).unwrap());
        assert!(predict_semisimple(Variant::Classical, params(2, 0, 3, 2, 2)).is_err());
    }

    #[test]
    fn subalgebra_table() {
        assert!(predict_semisimple(Variant::InfinitesimalLittle, params(1, 1, 3, 2, 0)).unwrap());
        assert!(!predict_semisimple(Variant::InfinitesimalLittle, params(1, 1, 4, 2, 0)).unwrap());
        assert!(predict_semisimple(Variant::InfinitesimalLittle, params(2, 1, 2, 3, 0)).unwrap());
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(3, 2).unwrap(), 2);
        assert_eq!(splitting_degree(5, 2).unwrap(), 1);
        assert_eq!(splitting_degree(7, 3).unwrap(), 1);
        assert!(splitting_degree(3, 3).is_err());
    }

    #[test]
    fn weyl_examples() {
        assert!(weyl_irreducible_sl2(4, 4, 2, 0).unwrap());
        for d in [1, 3, 5, 7, 9] {
            assert!(weyl_irreducible_sl2(d, 0, 2, 0).unwrap());
        }
        // λ1 - λ2 = 2p + 1 with p = 3, a = 3.
        assert!(!weyl_irreducible_sl2(7, 0, 2, 3).unwrap());
        assert!(weyl_irreducible_sl2(5, 0, 2, 3).unwrap());
        assert!(!weyl_irreducible_sl2(2, 0, 2, 0).unwrap());
    }
}
