use serde::Serialize;

use super::element::{Basis, SchurElement};
use super::generators::{act_word, GeneratorSpec};
use super::stats::a_bar;
use crate::error::{Error, Result};
use crate::exactalg::{sign, LaurentPoly};
use crate::symgroup::CosetMatrix;

/// Generator word (left to right) whose product with `1_{co(A)}` is
/// `(-1)^Ā [A]` plus lower terms: first the `F` factors
/// `[a_{j,i} E_{h+1,h} + D]`, then the `E` factors `[a_{i,j} E_{h,h+1} + D]`,
/// over triples `i <= h < j`.
pub fn triangular_word(a: &CosetMatrix) -> Vec<GeneratorSpec> {
    let size = a.size();
    let mut word = Vec::new();
    // Lower part: columns i ascending, then rows j ascending, h descending.
    for i in 1..=size {
        for j in i + 1..=size {
            let p = a.get(j, i);
            if p == 0 {
                continue;
            }
            for h in (i..j).rev() {
                word.push(GeneratorSpec::F { h, p });
            }
        }
    }
    // Upper part: columns j descending, then rows i descending, h ascending.
    for j in (1..=size).rev() {
        for i in (1..j).rev() {
            let p = a.get(i, j);
            if p == 0 {
                continue;
            }
            for h in i..j {
                word.push(GeneratorSpec::E { h, p });
            }
        }
    }
    word
}

/// The ordered product of the triangular factors, in the `[ ]` basis.
pub fn triangular_product(a: &CosetMatrix) -> Result<SchurElement> {
    if !a.is_super_distinguished() {
        return Err(Error::InvalidRepresentative(a.to_string()));
    }
    let start = SchurElement::basis_element(&CosetMatrix::diag(&a.co()), Basis::Bracket);
    act_word(&triangular_word(a), &start)
}

/// `B ⪯ A`: equal row and column sums, and every upper hook sum
/// `Σ_{i<=s, j>=t}` (`s < t`) and lower hook sum `Σ_{i>=s, j<=t}` (`s > t`)
/// of `B` is at most that of `A`.
pub fn hook_le(b: &CosetMatrix, a: &CosetMatrix) -> bool {
    if b.ro() != a.ro() || b.co() != a.co() {
        return false;
    }
    let size = a.size();
    for s in 1..=size {
        for t in 1..=size {
            if s < t && b.block_sum(1..=s, t..=size) > a.block_sum(1..=s, t..=size) {
                return false;
            }
            if s > t && b.block_sum(s..=size, 1..=t) > a.block_sum(s..=size, 1..=t) {
                return false;
            }
        }
    }
    true
}

pub fn strictly_lower(b: &CosetMatrix, a: &CosetMatrix) -> bool {
    b != a && hook_le(b, a)
}

/// Outcome of the leading-term check for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularCheck {
    pub matrix: CosetMatrix,
    pub leading: LaurentPoly,
    /// `(-1)^Ā`.
    pub expected: i64,
    /// Support elements other than `A` that are not strictly lower.
    pub offenders: Vec<CosetMatrix>,
}

impl TriangularCheck {
    pub fn leading_is_unit(&self) -> bool {
        matches!(self.leading.as_monomial(), Some((c, 0)) if c.abs() == 1)
    }

    pub fn passed(&self) -> bool {
        self.leading_is_unit() && self.offenders.is_empty()
    }

    pub fn sign_matches(&self) -> bool {
        self.leading == LaurentPoly::constant(self.expected)
    }
}

pub fn check_triangular(a: &CosetMatrix) -> Result<TriangularCheck> {
    let x = triangular_product(a)?;
    let offenders = x
        .support()
        .filter(|b| *b != a && !strictly_lower(b, a))
        .cloned()
        .collect();
    Ok(TriangularCheck {
        matrix: a.clone(),
        leading: x.coeff(a),
        expected: sign(a_bar(a) as i64),
        offenders,
    })
}
