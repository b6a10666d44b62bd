//! The reproduction suite: one check per reproduced result, shared by the
//! command-line `verify` subcommand and the acceptance tests.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dcoset::{check_decomposition, dcoset_stats, decompose_product, factor_word, shifted_matrix, standard_word_dm, verify_case1};
use crate::error::{Error, Result};
use crate::exactalg::CyclotomicField;
use crate::schur::{
    act_generator, bracket_product, check_triangular, classical_coefficients_check, d_minus, d_plus,
    ef_commutator_check, mul_bracket_simple, mul_phi_simple, phi_product, GeneratorSpec,
};
use crate::spectra::{
    build_specialized, predict_semisimple, s11_structure, semisimple_oracle, weyl_semisimple_sl2, SpecParams,
    StructureConstants, Variant, DEFAULT_GUARD,
};
use crate::subalg::{closure_check, default_field, subalgebra_basis, subalgebra_certificate, Kind};
use crate::symgroup::{enumerate_matrices, CosetMatrix, MatrixVariant};

pub const CRITERIA: u32 = 13;
const MAX_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    /// Smaller ranges, for a fast smoke run.
    pub quick: bool,
    /// Seed for the sampled part of criterion 4.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { quick: false, seed: 2024 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    /// Number of individual cases checked.
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failing cases.
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("[{status}] {:>2}. {} ({} cases, {:.2}s)", self.id, self.name, self.cases, self.seconds);
        if !self.passed {
            s.push_str(&format!(": {} failing, e.g. {}", self.failure_count, self.failures.join("; ")));
        }
        s
    }
}

/// Accumulates case outcomes.
struct Tally {
    cases: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn new() -> Self {
        Self { cases: 0, failures: Vec::new(), failure_count: 0 }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(label());
            }
        }
    }

    fn check_result(&mut self, ok: Result<bool>, label: impl FnOnce() -> String) {
        match ok {
            Ok(ok) => self.check(ok, label),
            Err(e) => self.check(false, || format!("{}: {e}", label())),
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        let room = MAX_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    fn finish(self, id: u32, start: Instant) -> CriterionResult {
        CriterionResult {
            id,
            name: name(id).to_string(),
            passed: self.failure_count == 0 && self.cases > 0,
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

fn merge_all(parts: Vec<Tally>) -> Tally {
    let mut t = Tally::new();
    for p in parts {
        t.merge(p);
    }
    t
}

pub fn name(id: u32) -> &'static str {
    match id {
        1 => "worked example of the standard word",
        2 => "double coset product decomposition",
        3 => "length shift formula",
        4 => "word identities for shifted matrices",
        5 => "closed formulas agree with Hecke products",
        6 => "classical coefficient patterns",
        7 => "commutator relation",
        8 => "dimension of S(1|1,r)",
        9 => "semisimplicity table",
        10 => "module structure of S(1|1,r)",
        11 => "Weyl modules of S(2,r)",
        12 => "infinitesimal and little subalgebras",
        13 => "triangular relation",
        _ => "unknown",
    }
}

fn classical(size: usize, r: usize) -> Vec<CosetMatrix> {
    enumerate_matrices(size, 0, r, MatrixVariant::All)
}

pub fn run_criterion(id: u32, opts: &VerifyOptions) -> Result<CriterionResult> {
    let start = Instant::now();
    let tally = match id {
        1 => worked_example(),
        2 => decomposition(opts),
        3 => length_shift(opts),
        4 => word_identities(opts),
        5 => oracle_equivalence(opts),
        6 => classical_patterns(opts),
        7 => commutators(opts),
        8 => dimensions(),
        9 => semisimplicity_table(opts),
        10 => s11_profile(opts),
        11 => weyl_boundary(),
        12 => subalgebras(opts),
        13 => triangular(),
        _ => return Err(Error::InvalidParameters(format!("no criterion {id}; expected 1..={CRITERIA}"))),
    };
    Ok(tally.finish(id, start))
}

/// Runs the given criteria in parallel; results come back ordered by id.
pub fn run(ids: &[u32], opts: &VerifyOptions) -> Result<Vec<CriterionResult>> {
    let mut out: Vec<CriterionResult> = ids.par_iter().map(|&id| run_criterion(id, opts)).collect::<Result<_>>()?;
    out.sort_by_key(|c| c.id);
    Ok(out)
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<CriterionResult>> {
    run(&(1..=CRITERIA).collect::<Vec<_>>(), opts)
}

fn worked_example() -> Tally {
    let mut t = Tally::new();
    let m = CosetMatrix::new(3, 0, vec![vec![1, 3, 2], vec![2, 1, 1], vec![1, 0, 2]]).expect("3x3");
    let s = dcoset_stats(&m);
    t.check(s.sigma == [[6, 9, 10], [10, 11, 11], [13, 13, 13]], || format!("σ table {:?}", s.sigma));
    t.check(s.tilde == [[1, 7, 10], [3, 8, 11], [4, 8, 13]], || format!("partial sums {:?}", s.tilde));
    let words: [(usize, usize, &[usize]); 4] =
        [(2, 1, &[6, 5, 4, 3, 2, 7, 6, 5, 4, 3]), (3, 1, &[10, 9, 8, 7, 6, 5, 4]), (2, 2, &[9, 8]), (3, 2, &[])];
    for (i, j, expect) in words {
        let w = factor_word(&m, i, j, false);
        t.check(w.as_deref() == Ok(expect), || format!("w_{{{i},{j}}} = {w:?}"));
    }
    let (d, word) = standard_word_dm(&m);
    t.check(d.images() == [1, 7, 8, 11, 2, 3, 4, 9, 5, 6, 10, 12, 13], || format!("d_M = {:?}", d.images()));
    t.check(word.len() == d.length(), || format!("word length {} vs ℓ(d_M) = {}", word.len(), d.length()));
    t
}

fn decomposition(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 3 } else { 4 };
    let cases: Vec<(CosetMatrix, usize, bool)> = (1..=3)
        .flat_map(|size| (0..=max_r).flat_map(move |r| classical(size, r)))
        .flat_map(|a| {
            let size = a.size();
            (1..size).flat_map(move |h| [true, false].map(|plus| (a.clone(), h, plus)))
        })
        .collect();
    merge_all(
        cases
            .par_iter()
            .map(|(a, h, plus)| {
                let mut t = Tally::new();
                match decompose_product(a, *h, *plus) {
                    Ok(_) => t.check_result(check_decomposition(a, *h, *plus), || format!("{a} h={h} plus={plus}")),
                    // The shifted composition does not exist: nothing to decompose.
                    Err(Error::InvalidWeight(_)) => {}
                    Err(e) => t.check(false, || format!("{a} h={h} plus={plus}: {e}")),
                }
                t
            })
            .collect(),
    )
}

fn length_shift(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 4 } else { 5 };
    let mut t = Tally::new();
    for size in 2..=3 {
        for r in 0..=max_r {
            for a in classical(size, r) {
                let base = standard_word_dm(&a).0.length() as i64;
                for h in 1..size {
                    for k in 1..=size {
                        for plus in [true, false] {
                            if let Ok((b, delta)) = shifted_matrix(&a, h, k, plus) {
                                let actual = standard_word_dm(&b).0.length() as i64;
                                t.check(actual == base + delta, || {
                                    format!("{a} h={h} k={k} plus={plus}: {actual} vs {}", base + delta)
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    t
}

/// Every valid `(M, h, k, p, sign)` at degree `r`.
fn word_identity_cases(r: usize) -> Vec<(CosetMatrix, usize, usize, usize, bool)> {
    let mut out = Vec::new();
    for size in 2..=3 {
        for a in classical(size, r) {
            for h in 1..size {
                for k in 1..=size {
                    out.extend((0..a.get(h + 1, k)).map(|p| (a.clone(), h, k, p, true)));
                    out.extend((1..=a.get(h, k)).map(|p| (a.clone(), h, k, p, false)));
                }
            }
        }
    }
    out
}

fn word_identities(opts: &VerifyOptions) -> Tally {
    let (exhaustive_r, samples) = if opts.quick { (4, 100) } else { (5, 500) };
    let mut cases: Vec<_> = (0..=exhaustive_r).flat_map(word_identity_cases).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let top = word_identity_cases(6);
    cases.extend(top.choose_multiple(&mut rng, samples).cloned());
    merge_all(
        cases
            .par_iter()
            .map(|(a, h, k, p, plus)| {
                let mut t = Tally::new();
                t.check_result(verify_case1(a, *h, *k, *p, *plus), || format!("{a} h={h} k={k} p={p} plus={plus}"));
                t
            })
            .collect(),
    )
}

const ORACLE_SHAPES: [(usize, usize); 5] = [(1, 1), (2, 1), (1, 2), (2, 0), (0, 2)];

fn generator_matrix(a: &CosetMatrix, h: usize, p: usize, plus: bool) -> Result<Option<CosetMatrix>> {
    let lam = a.ro();
    match if plus { d_plus(&lam, h, p) } else { d_minus(&lam, h, p) } {
        Ok(d) => Ok(Some(d)),
        Err(Error::InvalidWeight(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn oracle_case(a: &CosetMatrix) -> Result<Tally> {
    let mut t = Tally::new();
    let (m, n) = (a.m, a.n);
    for h in 1..m + n {
        for plus in [true, false] {
            let phi = mul_phi_simple(plus, h, a)?;
            let bracket = mul_bracket_simple(plus, h, a)?;
            let gen = act_generator(&if plus { GeneratorSpec::e(h) } else { GeneratorSpec::f(h) }, a)?;
            match generator_matrix(a, h, 1, plus)? {
                Some(d) => {
                    let oracle_phi = phi_product(&d, a)?;
                    let oracle_bracket = bracket_product(&d, a)?;
                    t.check(phi == oracle_phi, || format!("φ: {a} h={h} plus={plus}"));
                    t.check(bracket == oracle_bracket, || format!("[ ]: {a} h={h} plus={plus}"));
                    t.check(gen == oracle_bracket, || format!("generator: {a} h={h} plus={plus}"));
                }
                None => t.check(phi.is_zero() && bracket.is_zero() && gen.is_zero(), || {
                    format!("expected zero: {a} h={h} plus={plus}")
                }),
            }
            if h == m {
                continue;
            }
            for p in 2..=3 {
                let g = if plus { GeneratorSpec::E { h, p } } else { GeneratorSpec::F { h, p } };
                let formula = act_generator(&g, a)?;
                match generator_matrix(a, h, p, plus)? {
                    Some(d) => t.check(formula == bracket_product(&d, a)?, || format!("{g} on {a}")),
                    None => t.check(formula.is_zero(), || format!("{g} on {a} should vanish")),
                }
            }
        }
    }
    Ok(t)
}

fn oracle_equivalence(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 3 } else { 4 };
    let cases: Vec<CosetMatrix> = ORACLE_SHAPES
        .iter()
        .flat_map(|&(m, n)| (0..=max_r).flat_map(move |r| enumerate_matrices(m, n, r, MatrixVariant::All)))
        .collect();
    merge_all(
        cases
            .par_iter()
            .map(|a| {
                oracle_case(a).unwrap_or_else(|e| {
                    let mut t = Tally::new();
                    t.check(false, || format!("{a}: {e}"));
                    t
                })
            })
            .collect(),
    )
}

fn classical_patterns(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 3 } else { 4 };
    let mut t = Tally::new();
    for r in 0..=max_r {
        for a in enumerate_matrices(2, 0, r, MatrixVariant::All) {
            for plus in [true, false] {
                t.check_result(classical_coefficients_check(&a, 1, plus), || format!("{a} plus={plus}"));
            }
        }
    }
    t
}

fn commutators(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 2 } else { 3 };
    let mut t = Tally::new();
    for (m, n) in [(1, 1), (2, 1)] {
        for r in 0..=max_r {
            for h in 1..m + n {
                for k in 1..m + n {
                    t.check_result(ef_commutator_check(h, k, m, n, r), || format!("({m}|{n},{r}) h={h} k={k}"));
                }
            }
        }
    }
    t
}

fn dimensions() -> Tally {
    let mut t = Tally::new();
    for r in 2..=8 {
        let d = enumerate_matrices(1, 1, r, MatrixVariant::All).len();
        t.check(d == 4 * r, || format!("r={r}: {d}"));
    }
    t
}

/// `(m, n, r, l, semisimple)`.
pub const SEMISIMPLICITY_TABLE: [(usize, usize, usize, u32, bool); 6] =
    [(1, 1, 2, 2, false), (1, 1, 3, 2, true), (1, 1, 3, 3, false), (1, 1, 2, 3, true), (2, 1, 2, 2, false), (1, 2, 2, 2, false)];

fn semisimplicity_table(_opts: &VerifyOptions) -> Tally {
    merge_all(
        SEMISIMPLICITY_TABLE
            .par_iter()
            .map(|&(m, n, r, l, expected)| {
                let mut t = Tally::new();
                let label = || format!("({m}|{n},{r}) l={l}");
                let verdict = (|| -> Result<(bool, bool, bool)> {
                    let sc = StructureConstants::compute(m, n, r, DEFAULT_GUARD)?;
                    let alg = build_specialized(&sc, l, CyclotomicField::new(l)?);
                    let cert = semisimple_oracle(&alg)?;
                    let predicted = predict_semisimple(Variant::Super, SpecParams { m, n, r, l: Some(l), p: 0 })?;
                    let witness_ok = cert.semisimple || cert.radical_nilpotent == Some(true);
                    Ok((cert.semisimple, predicted, witness_ok))
                })();
                match verdict {
                    Ok((oracle, predicted, witness_ok)) => {
                        t.check(oracle == expected, || format!("{}: oracle says {oracle}", label()));
                        t.check(predicted == expected, || format!("{}: prediction says {predicted}", label()));
                        t.check(witness_ok, || format!("{}: radical witness is not nilpotent", label()));
                    }
                    Err(e) => t.check(false, || format!("{}: {e}", label())),
                }
                t
            })
            .collect(),
    )
}

fn s11_profile(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 4 } else { 6 };
    let cases: Vec<(usize, u32)> = (1..=max_r).flat_map(|r| [2, 3].map(|l| (r, l))).collect();
    merge_all(
        cases
            .par_iter()
            .map(|&(r, l)| {
                let mut t = Tally::new();
                match s11_structure(r, l) {
                    Ok(rep) => {
                        let expected = if r % l as usize == 0 { (r + 1, 1) } else { (r, 2) };
                        t.check(rep.passed, || format!("r={r} l={l}: {rep:?}"));
                        t.check((rep.simples, rep.simple_dim) == expected, || {
                            format!("r={r} l={l}: {} simples of dimension {}", rep.simples, rep.simple_dim)
                        });
                        t.check(rep.dimension == 4 * r, || format!("r={r}: dimension {}", rep.dimension));
                    }
                    Err(e) => t.check(false, || format!("r={r} l={l}: {e}")),
                }
                t
            })
            .collect(),
    )
}

fn weyl_boundary() -> Tally {
    let mut t = Tally::new();
    let mut case = |r: usize, p: u64, expected: bool| {
        let label = || format!("r={r} p={p}");
        t.check_result(weyl_semisimple_sl2(r, 2, p).map(|s| s == expected), label);
        let predicted = predict_semisimple(Variant::Classical, SpecParams { m: 2, n: 0, r, l: Some(2), p });
        t.check_result(predicted.map(|s| s == expected), || format!("prediction at r={r} p={p}"));
    };
    for r in (1..=19).step_by(2) {
        case(r, 0, true);
    }
    for r in [1, 3, 5] {
        case(r, 3, true);
    }
    case(7, 3, false);
    t
}

/// Label used for a failing subalgebra closure case.
pub fn closure_label(kind: Kind, m: usize, n: usize, r: usize, l: u32) -> String {
    format!("{kind} ({m}|{n},{r}) l={l}")
}

fn subalgebras(opts: &VerifyOptions) -> Tally {
    let max_r = if opts.quick { 3 } else { 4 };
    let shapes = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
    let mut cases = Vec::new();
    for (m, n) in shapes {
        for r in 1..=max_r {
            for l in [2u32, 3] {
                for kind in [Kind::Infinitesimal, Kind::Little] {
                    cases.push((kind, m, n, r, l, false));
                }
            }
        }
    }
    cases.push((Kind::Infinitesimal, 1, 1, 3, 2, true));
    cases.push((Kind::Little, 1, 1, 3, 2, true));
    let mut t = merge_all(
        cases
            .par_iter()
            .map(|&(kind, m, n, r, l, exhaustive)| {
                let mut t = Tally::new();
                let label = || closure_label(kind, m, n, r, l);
                let rep = subalgebra_basis(kind, m, n, r, l)
                    .and_then(|b| closure_check(&b, &default_field(l)?, exhaustive, DEFAULT_GUARD));
                match rep {
                    Ok(rep) => {
                        t.check(rep.closed, label);
                        if exhaustive {
                            t.check(rep.exhaustive == Some(true), || format!("all pairs: {}", label()));
                        }
                    }
                    Err(e) => t.check(false, || format!("{}: {e}", label())),
                }
                t
            })
            .collect(),
    );
    for r in 1..=4 {
        for l in [2u32, 3] {
            for kind in [Kind::Infinitesimal, Kind::Little] {
                let label = || format!("semisimplicity of {}", closure_label(kind, 1, 1, r, l));
                let agree = (|| -> Result<bool> {
                    let cert = subalgebra_certificate(&subalgebra_basis(kind, 1, 1, r, l)?, &default_field(l)?, DEFAULT_GUARD)?;
                    let predicted =
                        predict_semisimple(Variant::InfinitesimalLittle, SpecParams { m: 1, n: 1, r, l: Some(l), p: 0 })?;
                    Ok(cert.semisimple == predicted)
                })();
                t.check_result(agree, label);
            }
        }
    }
    t
}

fn triangular() -> Tally {
    let mut t = Tally::new();
    for (m, n) in [(1, 1), (2, 1)] {
        for a in enumerate_matrices(m, n, 3, MatrixVariant::All) {
            match check_triangular(&a) {
                Ok(c) => t.check(c.passed(), || format!("{a}: leading {}, {} offenders", c.leading, c.offenders.len())),
                Err(e) => t.check(false, || format!("{a}: {e}")),
            }
        }
    }
    t
}
