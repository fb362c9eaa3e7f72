//! Command-line surface: parse indices and parameters, dispatch to the
//! generators and evaluators, emit LaTeX or JSON, and run batch sweeps.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};

use mzv::identities::IdentityError;
use mzv::index::{all_compositions, Index};
use mzv::word::{h0_words, h1_words, Word};
use mzv::zeta::SymbolKind;
use mzv::{
    derivation_finite_instance, derivation_instance, eval_fmzv, eval_mzv, gen_finite,
    gen_finite_algebraic, gen_height_one, gen_main, gen_main_algebraic, gen_ohno, gen_ohno_finite,
    verify_finite, verify_real, IdentityInstance, PrimeSet, VerificationReport, DEFAULT_TRUNC,
};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "mzv",
    about = "Generate and verify multiple zeta value identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print both sides of an identity instance.
    Gen {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        params: TheoremParams,
        #[arg(long, value_enum, default_value_t = Format::Latex)]
        format: Format,
    },
    /// Generate an instance and check it on a numeric backend.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        params: TheoremParams,
        /// Defaults to the backend matching the theorem's symbols.
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[command(flatten)]
        numeric: NumericOpts,
    },
    /// Evaluate one real symbol by truncated summation.
    Eval {
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = DEFAULT_TRUNC)]
        trunc: u64,
    },
    /// Evaluate one finite symbol mod a prime (or a prime sweep).
    EvalFinite {
        #[arg(long)]
        k: String,
        /// Single prime; when absent the --primes sweep is printed.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "11..1009")]
        primes: String,
    },
    /// Index-set utilities.
    Index {
        #[arg(value_enum)]
        op: IndexOp,
        index: String,
    },
    /// Verify every instance of a family up to a total weight; exits
    /// nonzero if any instance fails.
    Sweep {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[command(flatten)]
        numeric: NumericOpts,
    },
}

#[derive(clap::Args)]
struct TheoremParams {
    /// Index text such as `3,2` or `(3,2)`.
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Word over {x, y}, e.g. `xxy`; `1` is the empty word.
    #[arg(long)]
    word: Option<String>,
}

#[derive(clap::Args)]
struct NumericOpts {
    /// Cutoff for the real backend.
    #[arg(long, default_value_t = DEFAULT_TRUNC)]
    trunc: u64,
    /// Inclusive prime range `a..b` for the finite backend.
    #[arg(long, default_value = "11..1009")]
    primes: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    HeightOne,
    Main,
    MainAlgebraic,
    Finite,
    FiniteAlgebraic,
    Ohno,
    OhnoFinite,
    Derivation,
    DerivationFinite,
}

impl Theorem {
    fn kind(self) -> SymbolKind {
        match self {
            Theorem::HeightOne
            | Theorem::Main
            | Theorem::MainAlgebraic
            | Theorem::Ohno
            | Theorem::Derivation => SymbolKind::Real,
            Theorem::Finite
            | Theorem::FiniteAlgebraic
            | Theorem::OhnoFinite
            | Theorem::DerivationFinite => SymbolKind::Finite,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Real,
    Finite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexOp {
    Dual,
    Hdual,
    Refine,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(), // clap prints usage; exits 0 for --help, 2 otherwise
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, UsageError> {
    match cli.command {
        Command::Gen {
            theorem,
            params,
            format,
        } => {
            let inst = build_instance(theorem, &params)?;
            match format {
                Format::Latex => println!("{}", inst.to_latex()),
                Format::Json => println!("{}", inst.to_json()),
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            params,
            backend,
            numeric,
        } => {
            let inst = build_instance(theorem, &params)?;
            let report = run_backend(theorem, backend, &inst, &numeric)?;
            println!("{}", report.to_json());
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAIL
            })
        }
        Command::Eval { k, trunc } => {
            let index: Index = k.parse()?;
            let eval = eval_mzv(&index, trunc)?;
            println!(
                "zeta({index}) = {} (tail bound {}, N = {})",
                eval.value, eval.tail_bound, eval.trunc_n
            );
            Ok(EXIT_OK)
        }
        Command::EvalFinite { k, p, primes } => {
            let index: Index = k.parse()?;
            let set = match p {
                Some(p) => PrimeSet::from_vec(vec![p])?,
                None => parse_primes(&primes)?,
            };
            let eval = eval_fmzv(&index, &set)?;
            for (p, residue) in &eval.residues {
                println!("{p}: {residue}");
            }
            Ok(EXIT_OK)
        }
        Command::Index { op, index } => {
            let index: Index = index.parse()?;
            match op {
                IndexOp::Dual => println!("{}", index.dual()?),
                IndexOp::Hdual => println!("{}", index.hoffman_dual()?),
                IndexOp::Refine => {
                    for refined in index.refinements() {
                        println!("{refined}");
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            theorem,
            max_weight,
            backend,
            numeric,
        } => sweep(theorem, max_weight, backend, &numeric),
    }
}

fn required<T>(value: Option<T>, flag: &str, theorem: &str) -> Result<T, UsageError> {
    value.ok_or_else(|| UsageError(format!("--{flag} is required for --theorem {theorem}")))
}

fn build_instance(
    theorem: Theorem,
    params: &TheoremParams,
) -> Result<IdentityInstance, UsageError> {
    let parse_k = |s: &Option<String>, tag: &str| -> Result<Index, UsageError> {
        let text = required(s.as_ref(), "k", tag)?;
        Ok(text.parse::<Index>()?)
    };
    let inst = match theorem {
        Theorem::HeightOne => {
            let k = parse_k(&params.k, "height-one")?;
            if k.depth() != 1 {
                return Err(UsageError("height-one takes a depth-1 --k".into()));
            }
            let r = required(params.r, "r", "height-one")?;
            if r < 1 {
                return Err(UsageError("--r must be at least 1".into()));
            }
            gen_height_one(k.parts()[0], r)
        }
        Theorem::Main => gen_main(
            &parse_k(&params.k, "main")?,
            required(params.r, "r", "main")?,
        )?,
        Theorem::MainAlgebraic => gen_main_algebraic(
            &parse_k(&params.k, "main-algebraic")?,
            required(params.r, "r", "main-algebraic")?,
        )?,
        Theorem::Finite => gen_finite(
            &parse_k(&params.k, "finite")?,
            required(params.r, "r", "finite")?,
        )?,
        Theorem::FiniteAlgebraic => gen_finite_algebraic(
            &parse_k(&params.k, "finite-algebraic")?,
            required(params.r, "r", "finite-algebraic")?,
        )?,
        Theorem::Ohno => gen_ohno(
            &parse_k(&params.k, "ohno")?,
            required(params.m, "m", "ohno")?,
        )?,
        Theorem::OhnoFinite => gen_ohno_finite(
            &parse_k(&params.k, "ohno-finite")?,
            required(params.m, "m", "ohno-finite")?,
        )?,
        Theorem::Derivation => {
            let word: Word = required(params.word.as_ref(), "word", "derivation")?.parse()?;
            derivation_instance(required(params.l, "l", "derivation")?, &word)?
        }
        Theorem::DerivationFinite => {
            let word: Word =
                required(params.word.as_ref(), "word", "derivation-finite")?.parse()?;
            derivation_finite_instance(required(params.l, "l", "derivation-finite")?, &word)?
        }
    };
    Ok(inst)
}

fn run_backend(
    theorem: Theorem,
    backend: Option<Backend>,
    inst: &IdentityInstance,
    numeric: &NumericOpts,
) -> Result<VerificationReport, UsageError> {
    let natural = match theorem.kind() {
        SymbolKind::Real => Backend::Real,
        SymbolKind::Finite => Backend::Finite,
    };
    let backend = backend.unwrap_or(natural);
    if backend != natural {
        return Err(UsageError(
            "theorem and backend are incompatible (real symbols need --backend real, \
             finite symbols --backend finite)"
                .into(),
        ));
    }
    let report = match backend {
        Backend::Real => verify_real(inst, numeric.trunc)?,
        Backend::Finite => verify_finite(inst, &parse_primes(&numeric.primes)?)?,
    };
    Ok(report)
}

fn parse_primes(text: &str) -> Result<PrimeSet, UsageError> {
    let (lo, hi) = text.split_once("..").ok_or_else(|| {
        UsageError(format!(
            "--primes takes an inclusive range a..b, got `{text}`"
        ))
    })?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| UsageError(format!("bad prime bound `{lo}`")))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| UsageError(format!("bad prime bound `{hi}`")))?;
    if lo > hi {
        return Err(UsageError(format!("empty prime range {lo}..{hi}")));
    }
    Ok(PrimeSet::range(lo, hi))
}

/// Every instance of the family with total symbol weight at most
/// `max_weight`, in deterministic enumeration order.
fn sweep_instances(
    theorem: Theorem,
    max_weight: u32,
) -> Result<Vec<IdentityInstance>, IdentityError> {
    let mut out = Vec::new();
    match theorem {
        Theorem::HeightOne => {
            for k in 1..max_weight {
                for r in 1..=(max_weight - k) {
                    out.push(gen_height_one(k, r));
                }
            }
        }
        Theorem::Main | Theorem::MainAlgebraic | Theorem::Finite | Theorem::FiniteAlgebraic => {
            for wk in 1..max_weight {
                for k in all_compositions(wk) {
                    for r in k.depth()..=(max_weight - wk) {
                        out.push(match theorem {
                            Theorem::Main => gen_main(&k, r)?,
                            Theorem::MainAlgebraic => gen_main_algebraic(&k, r)?,
                            Theorem::Finite => gen_finite(&k, r)?,
                            _ => gen_finite_algebraic(&k, r)?,
                        });
                    }
                }
            }
        }
        Theorem::Ohno => {
            for wk in 2..=max_weight {
                for k in all_compositions(wk) {
                    if !k.is_admissible() {
                        continue;
                    }
                    for m in 0..=(max_weight - wk) {
                        out.push(gen_ohno(&k, m)?);
                    }
                }
            }
        }
        Theorem::OhnoFinite => {
            for wk in 1..=max_weight {
                for k in all_compositions(wk) {
                    for m in 0..=(max_weight - wk) {
                        out.push(gen_ohno_finite(&k, m)?);
                    }
                }
            }
        }
        Theorem::Derivation => {
            for deg in 2..max_weight {
                for w in h0_words(deg) {
                    for l in 1..=(max_weight - deg) {
                        out.push(derivation_instance(l, &w)?);
                    }
                }
            }
        }
        Theorem::DerivationFinite => {
            for deg in 0..max_weight {
                for w in h1_words(deg) {
                    for l in 1..=(max_weight - deg) {
                        out.push(derivation_finite_instance(l, &w)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sweep(
    theorem: Theorem,
    max_weight: u32,
    backend: Option<Backend>,
    numeric: &NumericOpts,
) -> Result<i32, UsageError> {
    let instances = sweep_instances(theorem, max_weight)?;
    if instances.is_empty() {
        return Err(UsageError(format!(
            "no instances with total weight <= {max_weight}"
        )));
    }
    let mut all_pass = true;
    for inst in &instances {
        let report = run_backend(theorem, backend, inst, numeric)?;
        all_pass &= report.passed();
        println!(
            "{} {} {}",
            report.status.tag(),
            inst.provenance.theorem_tag(),
            inst.provenance.params_json()
        );
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY_FAIL })
}
