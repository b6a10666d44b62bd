use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::symgroup::Permutation;

/// An element `Σ c_w T_w` of the Hecke algebra of `S_r` over `Z[v, v^{-1}]`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    terms: HashMap<Permutation, LaurentPoly>,
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sorted = self.sorted_terms();
        if sorted.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = sorted.iter().map(|(w, c)| format!("({c})T[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (0, -1)])
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: HashMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(Permutation::identity(r))
    }

    /// `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let mut e = Self::zero(w.degree());
        e.terms.insert(w, LaurentPoly::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, LaurentPoly)>>(r: usize, iter: I) -> Self {
        let mut e = Self::zero(r);
        for (w, c) in iter {
            e.add_term(w, &c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Terms ordered by one-line notation.
    pub fn sorted_terms(&self) -> Vec<(Permutation, LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = HeckeElement::zero(self.r);
        out.add_scaled(self, c);
        out
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        Ok(out)
    }

    fn check_degree(&self, other: &HeckeElement) -> Result<()> {
        if self.r != other.r {
            return Err(Error::DegreeMismatch(self.r, other.r));
        }
        Ok(())
    }

    /// `self · T_{s_k}`.
    pub fn mul_s_right(&self, k: usize) -> HeckeElement {
        let q = LaurentPoly::q();
        let qm1 = q_minus_one();
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.mul_s_right(k);
            if w.has_right_descent(k) {
                out.add_term(w.clone(), &(c * &qm1));
                out.add_term(ws, &(c * &q));
            } else {
                out.add_term(ws, c);
            }
        }
        out
    }

    /// `T_{s_k} · self`.
    pub fn mul_s_left(&self, k: usize) -> HeckeElement {
        let q = LaurentPoly::q();
        let qm1 = q_minus_one();
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &self.terms {
            let sw = w.mul_s_left(k);
            if w.has_left_descent(k) {
                out.add_term(w.clone(), &(c * &qm1));
                out.add_term(sw, &(c * &q));
            } else {
                out.add_term(sw, c);
            }
        }
        out
    }

    /// `self · T_w`, multiplying along a reduced word of `w`.
    pub fn mul_basis_right(&self, w: &Permutation) -> HeckeElement {
        let mut out = self.clone();
        for k in w.reduced_word() {
            out = out.mul_s_right(k);
        }
        out
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_degree(other)?;
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &other.terms {
            out.add_scaled(&self.mul_basis_right(w), c);
        }
        Ok(out)
    }

    /// The involution `T_s -> (q-1)T_1 - T_s`.
    pub fn varphi(&self) -> HeckeElement {
        let qm1 = q_minus_one();
        let mut out = HeckeElement::zero(self.r);
        for (w, c) in &self.terms {
            let mut image = HeckeElement::one(self.r).scale(c);
            for k in w.reduced_word() {
                let mut next = image.scale(&qm1);
                next.add_scaled(&image.mul_s_right(k), &LaurentPoly::constant(-1));
                image = next;
            }
            out.add_scaled(&image, &LaurentPoly::one());
        }
        out
    }

    /// `{"2,1,3": "1 + 1*v^2", ...}`.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.sorted_terms()
            .into_iter()
            .map(|(w, c)| (w.to_string(), c.to_string()))
            .collect()
    }

    pub fn from_string_map(map: &BTreeMap<String, String>) -> Result<HeckeElement> {
        let mut r = None;
        let mut terms = Vec::new();
        for (k, v) in map {
            let w = Permutation::parse_key(k)?;
            match r {
                None => r = Some(w.degree()),
                Some(r0) if r0 != w.degree() => return Err(Error::DegreeMismatch(r0, w.degree())),
                _ => {}
            }
            terms.push((w, v.parse::<LaurentPoly>()?));
        }
        let r = r.ok_or_else(|| Error::Parse("empty Hecke element has no degree".into()))?;
        Ok(HeckeElement::from_terms(r, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(images: &[usize]) -> HeckeElement {
        HeckeElement::basis(Permutation::from_images(images.to_vec()).unwrap())
    }

    fn element(r: usize) -> impl Strategy<Value = HeckeElement> {
        let perms = Permutation::all(r);
        proptest::collection::vec((0..perms.len(), -2i32..3, -2i64..3), 0..4).prop_map(move |v| {
            HeckeElement::from_terms(
                r,
                v.into_iter()
                    .map(|(i, e, c)| (perms[i].clone(), LaurentPoly::monomial(c, e))),
            )
        })
    }

    #[test]
    fn quadratic_relation() {
        for r in 2..=6 {
            for k in 1..r {
                let ts = HeckeElement::basis(Permutation::s(k, r));
                let sq = ts.mul(&ts).unwrap();
                let mut expect = ts.scale(&q_minus_one());
                expect.add_term(Permutation::identity(r), &LaurentPoly::q());
                assert_eq!(sq, expect);
            }
        }
    }

    #[test]
    fn braid_relation() {
        let r = 4;
        for i in 1..r - 1 {
            let a = HeckeElement::basis(Permutation::s(i, r));
            let b = HeckeElement::basis(Permutation::s(i + 1, r));
            let lhs = a.mul(&b).unwrap().mul(&a).unwrap();
            let rhs = b.mul(&a).unwrap().mul(&b).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.num_terms(), 1);
        }
    }

    #[test]
    fn reduced_products_are_basis_elements() {
        for u in Permutation::all(4) {
            for v in Permutation::all(4) {
                let w = u.compose(&v);
                if w.length() == u.length() + v.length() {
                    let p = HeckeElement::basis(u.clone()).mul(&HeckeElement::basis(v.clone())).unwrap();
                    assert_eq!(p, HeckeElement::basis(w));
                }
            }
        }
    }

    #[test]
    fn varphi_examples() {
        let ts = t(&[2, 1]);
        let mut expect = HeckeElement::one(2).scale(&q_minus_one());
        expect.add_term(Permutation::s(1, 2), &LaurentPoly::constant(-1));
        assert_eq!(ts.varphi(), expect);
        assert_eq!(HeckeElement::one(3).varphi(), HeckeElement::one(3));
        assert_eq!(ts.mul(&HeckeElement::zero(3)).unwrap_err(), Error::DegreeMismatch(2, 3));
    }

    #[test]
    fn string_map_round_trip() {
        let mut x = t(&[2, 1, 3]).scale(&LaurentPoly::q());
        x.add_term(Permutation::identity(3), &LaurentPoly::constant(-1));
        let map = x.to_string_map();
        assert_eq!(map.get("2,1,3").map(String::as_str), Some("1*v^2"));
        assert_eq!(HeckeElement::from_string_map(&map).unwrap(), x);
    }

    proptest! {
        #[test]
        fn associativity(a in element(3), b in element(3), c in element(3)) {
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn unit(a in element(4)) {
            prop_assert_eq!(HeckeElement::one(4).mul(&a).unwrap(), a.clone());
            prop_assert_eq!(a.mul(&HeckeElement::one(4)).unwrap(), a);
        }

        #[test]
        fn varphi_is_an_involutive_automorphism(a in element(4), b in element(4)) {
            prop_assert_eq!(a.mul(&b).unwrap().varphi(), a.varphi().mul(&b.varphi()).unwrap());
            prop_assert_eq!(a.varphi().varphi(), a);
        }

        #[test]
        fn left_and_right_generator_actions_agree(a in element(4), k in 1usize..4) {
            let ts = HeckeElement::basis(Permutation::s(k, 4));
            prop_assert_eq!(a.mul_s_right(k), a.mul(&ts).unwrap());
            prop_assert_eq!(a.mul_s_left(k), ts.mul(&a).unwrap());
        }
    }
}
