use super::element::{Basis, SchurElement};
use super::stats::{epsilon, f_minus, f_minus_q, f_plus, f_plus_q, v_exp};
use crate::error::{Error, Result};
use crate::exactalg::{gauss_binom, qint, sign, LaurentPoly};
use crate::symgroup::{Composition, CosetMatrix};

pub(crate) fn check_h(h: usize, m: usize, n: usize) -> Result<()> {
    if h == 0 || h >= m + n {
        return Err(Error::IndexOutOfRange(format!(
            "h = {h} needs 1 <= h < {}",
            m + n
        )));
    }
    Ok(())
}

/// `D^+_{h,p}`: `p E_{h,h+1}` plus the diagonal making the column sums `λ`.
pub fn d_plus(lambda: &Composition, h: usize, p: usize) -> Result<CosetMatrix> {
    shift_diag(lambda, h, p, true)
}

/// `D^-_{h,p}`: `p E_{h+1,h}` plus the diagonal making the column sums `λ`.
pub fn d_minus(lambda: &Composition, h: usize, p: usize) -> Result<CosetMatrix> {
    shift_diag(lambda, h, p, false)
}

fn shift_diag(lambda: &Composition, h: usize, p: usize, plus: bool) -> Result<CosetMatrix> {
    let (m, n) = (lambda.split, lambda.len() - lambda.split);
    check_h(h, m, n)?;
    let (row, col) = if plus { (h, h + 1) } else { (h + 1, h) };
    if lambda.part(col) < p {
        return Err(Error::InvalidWeight(format!(
            "part {col} of {lambda} is smaller than {p}"
        )));
    }
    let mut d = CosetMatrix::diag(lambda);
    d.set(col, col, lambda.part(col) - p);
    d.set(row, col, p);
    if !d.is_super_distinguished() {
        return Err(Error::InvalidGenerator(format!(
            "{d} is not in M({m}|{n},{})",
            lambda.degree()
        )));
    }
    Ok(d)
}

/// `A^+_{h,k} = A + E_{h,k} - E_{h+1,k}` (or `A^-_{h,k}`), if it is still in
/// `M(m|n, r)`.
pub(crate) fn shift(a: &CosetMatrix, h: usize, k: usize, plus: bool) -> Option<CosetMatrix> {
    let (gain, lose) = if plus { (h, h + 1) } else { (h + 1, h) };
    let b = a.add_entry(lose, k, -1)?.add_entry(gain, k, 1)?;
    b.is_super_distinguished().then_some(b)
}

/// `bar[[x]]_{v_h^2}`, the bar involution applied to `[[x]]_{v_h^2}`.
pub(crate) fn bar_qint(x: usize, h: usize, m: usize) -> LaurentPoly {
    qint(x as u32).substitute_power(-v_exp(h, m))
}

/// `bar[[s over t]]_{v_h^2}`.
pub(crate) fn bar_gauss(s: usize, t: usize, h: usize, m: usize) -> LaurentPoly {
    gauss_binom(s as u32, t as u32)
        .expect("t <= s")
        .substitute_power(-v_exp(h, m))
}

/// `[[x]]_{q_h}`.
fn qint_h(x: usize, h: usize, m: usize) -> LaurentPoly {
    qint(x as u32).substitute_power(v_exp(h, m))
}

/// `φ_{D^±_h} φ_A` in the `φ` basis by the closed formulas. Zero when the
/// source row of `A` is empty.
pub fn mul_phi_simple(plus: bool, h: usize, a: &CosetMatrix) -> Result<SchurElement> {
    check_h(h, a.m, a.n)?;
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Phi);
    for k in 1..=a.size() {
        let coeff = if plus {
            if a.get(h + 1, k) == 0 {
                continue;
            }
            &f_plus_q(a, h, k) * &qint_h(a.get(h, k) + 1, h, a.m)
        } else {
            if a.get(h, k) == 0 {
                continue;
            }
            &f_minus_q(a, h, k) * &qint_h(a.get(h + 1, k) + 1, h + 1, a.m)
        };
        if let Some(b) = shift(a, h, k, plus) {
            out.add_term(b, &coeff);
        }
    }
    Ok(out)
}

/// `[D^±_h][A]` in the `[ ]` basis by the normalized formulas.
pub fn mul_bracket_simple(plus: bool, h: usize, a: &CosetMatrix) -> Result<SchurElement> {
    check_h(h, a.m, a.n)?;
    let mut out = SchurElement::zero(a.m, a.n, a.degree(), Basis::Bracket);
    for k in 1..=a.size() {
        let (exp, qi) = if plus {
            if a.get(h + 1, k) == 0 {
                continue;
            }
            (v_exp(h, a.m) as i64 * f_plus(a, h, k), a.get(h, k) + 1)
        } else {
            if a.get(h, k) == 0 {
                continue;
            }
            (v_exp(h + 1, a.m) as i64 * f_minus(a, h, k), a.get(h + 1, k) + 1)
        };
        if let Some(b) = shift(a, h, k, plus) {
            let s = sign(epsilon(a, h, k) as i64);
            let gain = if plus { h } else { h + 1 };
            let coeff = &LaurentPoly::monomial(s, exp as i32) * &bar_qint(qi, gain, a.m);
            out.add_term(b, &coeff);
        }
    }
    Ok(out)
}
