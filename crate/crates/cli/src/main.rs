use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qschur::dcoset::{decompose_product, factor_word_grid, standard_word_dm};
use qschur::exactalg::LaurentPoly;
use qschur::hecke::HeckeElement;
use qschur::schur::{bracket_product, element_ajr, phi_product, regular_rep_matrix, Basis, GeneratorSpec, SchurElement};
use qschur::spectra::{
    build_specialized, predict_semisimple, semisimple_oracle, SpecParams, StructureConstants, Variant, DEFAULT_GUARD,
};
use qschur::subalg::{closure_check, default_field, dimensions, subalgebra_basis, Kind};
use qschur::symgroup::{enumerate_matrices, CosetMatrix, MatrixVariant};
use qschur::verify::{self, VerifyOptions, CRITERIA};
use qschur::{Error, Result};

#[derive(Parser)]
#[command(name = "qschur", version, about = "Double cosets, Hecke products and q-Schur superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sign {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Refuse ambient algebras of larger dimension.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long)]
    r: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Factor words, reduced word and permutation of d_M.
    Dm {
        /// Rows separated by ';', entries by ','.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Double cosets in the product W_{λ[h±]} W_λ d_M W_μ.
    Decompose {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        h: usize,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Product of two Hecke algebra elements given as {"images": "coefficient"} JSON.
    Heckemul {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[command(flatten)]
        common: Common,
    },
    /// Product of two basis elements of S(m|n, r), computed in the Hecke algebra.
    Mul {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "bracket")]
        basis: String,
        #[command(flatten)]
        common: Common,
    },
    /// Matrix of a generator (E1, F2p3, K1, ...) on the [A] basis.
    Genmat {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        gen: String,
        #[command(flatten)]
        common: Common,
    },
    /// The element A(j, r) for an off-diagonal matrix A.
    Ajr {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        matrix: String,
        /// Comma-separated integers, one per index.
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        #[command(flatten)]
        common: Common,
    },
    /// Semisimplicity prediction, and the trace-form certificate with --oracle.
    Semisimple {
        #[command(flatten)]
        shape: Shape,
        /// q is a primitive l-th root of unity; omit for q not a root of unity.
        #[arg(long)]
        l: Option<u32>,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        oracle: bool,
        /// super, classical or infinitesimal; by default classical iff n = 0.
        #[arg(long)]
        variant: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Closure check for the infinitesimal or little subalgebra.
    Closure {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of S(m|n, r), and of its subalgebras when --l is given.
    Dims {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        l: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the reproduction suite and prints a pass/fail table.
    Verify {
        #[arg(long)]
        quick: bool,
        /// Only these criteria (repeatable).
        #[arg(long)]
        criterion: Vec<u32>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_matrix(key: &str, n: usize) -> Result<CosetMatrix> {
    let size = key.split(';').count();
    if n > size {
        return Err(Error::InvalidParameters(format!("n = {n} exceeds the matrix size {size}")));
    }
    CosetMatrix::parse_key(key, size - n, n)
}

fn coefficient_map(x: &SchurElement, format: Format) -> BTreeMap<String, String> {
    if format == Format::Latex {
        x.to_latex_map()
    } else {
        x.to_string_map()
    }
}

fn print_map(map: &BTreeMap<String, String>, format: Format) {
    match format {
        Format::Json => println!("{}", json!(map)),
        Format::Text | Format::Latex => {
            if map.is_empty() {
                println!("0");
            }
            for (k, v) in map {
                println!("{k}: {v}");
            }
        }
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Dm { matrix, n, common } => {
            let a = parse_matrix(&matrix, n)?;
            let grid = factor_word_grid(&a);
            let (d, word) = standard_word_dm(&a);
            match common.format {
                Format::Json => println!(
                    "{}",
                    json!({"matrix": to_json(&a), "grid": grid, "word": word, "permutation": to_json(&d), "length": d.length()})
                ),
                _ => {
                    for (i, row) in grid.iter().enumerate() {
                        let cells: Vec<String> = row.iter().map(|w| format!("{w:?}")).collect();
                        println!("w_{{{},·}}: {}", i + 2, cells.join("  "));
                    }
                    println!("word: {word:?}");
                    println!("d_M: {:?}", d.images());
                    println!("length: {}", d.length());
                }
            }
        }
        Command::Decompose { matrix, h, sign, n, common: _ } => {
            let a = parse_matrix(&matrix, n)?;
            let parts = decompose_product(&a, h, sign == Sign::Plus)?;
            println!("{}", to_json(&parts));
        }
        Command::Heckemul { left, right, common } => {
            let parse = |s: &str| -> Result<HeckeElement> {
                let map: BTreeMap<String, String> =
                    serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad Hecke element JSON: {e}")))?;
                HeckeElement::from_string_map(&map)
            };
            let product = parse(&left)?.mul(&parse(&right)?)?;
            let mut map = product.to_string_map();
            if common.format == Format::Latex {
                for v in map.values_mut() {
                    *v = v.parse::<LaurentPoly>()?.to_latex();
                }
            }
            print_map(&map, common.format);
        }
        Command::Mul { m, n, a, b, basis, common } => {
            let a = CosetMatrix::parse_key(&a, m, n)?;
            let b = CosetMatrix::parse_key(&b, m, n)?;
            let x = match basis.parse::<Basis>()? {
                Basis::Phi => phi_product(&a, &b)?,
                Basis::Bracket => bracket_product(&a, &b)?,
            };
            print_map(&coefficient_map(&x, common.format), common.format);
        }
        Command::Genmat { shape, gen, common } => {
            let g: GeneratorSpec = gen.parse()?;
            let dim = enumerate_matrices(shape.m, shape.n, shape.r, MatrixVariant::All).len();
            if dim > common.guard {
                return Err(Error::ResourceLimit { what: format!("dimension {dim}"), guard: common.guard });
            }
            let mat = regular_rep_matrix(&g, shape.m, shape.n, shape.r)?;
            let render = |c: &LaurentPoly| if common.format == Format::Latex { c.to_latex() } else { c.to_string() };
            let entries: Vec<Vec<String>> = mat.entries.iter().map(|row| row.iter().map(render).collect()).collect();
            let basis: Vec<String> = mat.basis.iter().map(CosetMatrix::key).collect();
            match common.format {
                Format::Json => println!("{}", json!({"generator": g.to_string(), "basis": basis, "entries": entries})),
                _ => {
                    println!("{g} on S({}|{},{}), basis order:", shape.m, shape.n, shape.r);
                    for (i, b) in basis.iter().enumerate() {
                        println!("  {i}: {b}");
                    }
                    for row in &entries {
                        println!("{}", row.join("\t"));
                    }
                }
            }
        }
        Command::Ajr { shape, matrix, j, common } => {
            let a = CosetMatrix::parse_key(&matrix, shape.m, shape.n)?;
            let j: Vec<i64> = j
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight entry {s:?}"))))
                .collect::<Result<_>>()?;
            let x = element_ajr(&a, &j, shape.r)?;
            print_map(&coefficient_map(&x, common.format), common.format);
        }
        Command::Semisimple { shape, l, characteristic, oracle, variant, common } => {
            let variant = match variant {
                Some(v) => v.parse()?,
                None if shape.n == 0 => Variant::Classical,
                None => Variant::Super,
            };
            let params = SpecParams { m: shape.m, n: shape.n, r: shape.r, l, p: characteristic };
            let predicted = predict_semisimple(variant, params)?;
            let certificate = if oracle {
                let l = l.ok_or_else(|| Error::InvalidParameters("--oracle needs --l".into()))?;
                if characteristic != 0 {
                    return Err(Error::Unsupported("the trace-form certificate needs characteristic 0".into()));
                }
                if variant == Variant::InfinitesimalLittle {
                    return Err(Error::Unsupported("use closure for the subalgebras".into()));
                }
                let sc = StructureConstants::compute(shape.m, shape.n, shape.r, common.guard)?;
                let alg = build_specialized(&sc, l, qschur::exactalg::CyclotomicField::new(l)?);
                Some(semisimple_oracle(&alg)?)
            } else {
                None
            };
            match common.format {
                Format::Json => println!("{}", json!({"prediction": predicted, "certificate": certificate.as_ref().map(to_json)})),
                _ => {
                    println!("prediction: {}", if predicted { "semisimple" } else { "not semisimple" });
                    if let Some(c) = &certificate {
                        println!("certificate: {}", to_json(c));
                    }
                }
            }
            return Ok(certificate.is_none_or(|c| c.semisimple == predicted));
        }
        Command::Closure { kind, shape, l, exhaustive, common } => {
            let kind: Kind = kind.parse()?;
            let basis = subalgebra_basis(kind, shape.m, shape.n, shape.r, l)?;
            let rep = closure_check(&basis, &default_field(l)?, exhaustive, common.guard)?;
            match common.format {
                Format::Json => println!("{}", to_json(&rep)),
                _ => {
                    println!("{} subalgebra of S({}|{},{}), l = {l}: dimension {}", kind, shape.m, shape.n, shape.r, rep.dimension);
                    println!("closed: {}", rep.closed);
                    if let Some(w) = &rep.witness {
                        println!("witness: {w}");
                    }
                }
            }
            return Ok(rep.closed);
        }
        Command::Dims { shape, l, common } => {
            let full = enumerate_matrices(shape.m, shape.n, shape.r, MatrixVariant::All).len();
            let dims = match l {
                Some(l) => dimensions(shape.m, shape.n, shape.r, l)?,
                None => BTreeMap::from([("full".to_string(), full)]),
            };
            match common.format {
                Format::Json => println!("{}", json!(dims)),
                _ if l.is_none() => println!("{full}"),
                _ => {
                    for (k, v) in &dims {
                        println!("{k}: {v}");
                    }
                }
            }
        }
        Command::Verify { quick, criterion, seed, common } => {
            let opts = VerifyOptions { quick, seed };
            let ids = if criterion.is_empty() { (1..=CRITERIA).collect() } else { criterion };
            let results = verify::run(&ids, &opts)?;
            match common.format {
                Format::Json => println!("{}", to_json(&results)),
                _ => {
                    for c in &results {
                        println!("{}", c.line());
                    }
                    let passed = results.iter().filter(|c| c.passed).count();
                    println!("{passed}/{} criteria pass", results.len());
                }
            }
            return Ok(results.iter().all(|c| c.passed));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
