use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mzv_shuffle::morphisms::{dual_index, sigma_m, smap, star_expand, IndexCombination};
use mzv_shuffle::numerics::{mzv, mzv_star, ApproxValue, Precision};
use mzv_shuffle::series::{eval_zeta_poly, height_one_gf, star_difference_certificate, ZetaPoly};
use mzv_shuffle::verify::{parse_check_list, render_json, render_text, run_suite};
use mzv_shuffle::wordalg::{shuffle_poly, Index, Poly, Word};
use mzv_shuffle::{Error, Execution};

const GRAMMAR: &str = "\
Operands:
  index  '(' [int (',' int)*] ')' with parts >= 1, e.g. \"(3,1,1)\"; whitespace allowed
  word   a string over x and y, e.g. \"xxyy\"; \"1\" is the empty word
Where an operand may be either, a leading '(' selects the index form.";

#[derive(Parser)]
#[command(name = "mzv-shuffle", version, about = "Shuffle algebra and multiple zeta value workbench", after_help = GRAMMAR)]
struct Cli {
    /// Absolute error target for numeric results.
    #[arg(long, global = true, default_value_t = 1e-6, value_parser = parse_eps)]
    eps: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product of two indices or two words.
    Shuffle {
        #[arg(value_parser = parse_operand)]
        left: Operand,
        #[arg(value_parser = parse_operand)]
        right: Operand,
    },
    /// Dual of an admissible index.
    Dual {
        #[arg(value_parser = parse_index)]
        index: Index,
    },
    /// Expansion of a zeta-star index into ordinary indices.
    StarExpand {
        #[arg(value_parser = parse_index)]
        index: Index,
    },
    /// The map S(wa) = σ(w)a on an index or a word.
    Smap {
        #[arg(value_parser = parse_operand)]
        operand: Operand,
    },
    /// Distribute m extra weight over the parts of an index in all ways.
    SigmaM {
        m: u32,
        #[arg(value_parser = parse_index)]
        index: Index,
    },
    /// Multiple zeta value with a rigorous error bound.
    Eval {
        #[arg(value_parser = parse_index)]
        index: Index,
    },
    /// Multiple zeta-star value with a rigorous error bound.
    EvalStar {
        #[arg(value_parser = parse_index)]
        index: Index,
    },
    /// Height-one generating function truncated at total degree ORDER.
    Gf {
        #[arg(long, default_value_t = 6)]
        order: u32,
    },
    /// Zeta polynomial for (-1)^k ζ*(k+1,1^n) - (-1)^n ζ*(n+1,1^k), with its value.
    Certificate {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Run the identity suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, default_value_t = 4)]
        nmax: u32,
        /// Comma-separated check names, or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        /// Run checks on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone)]
enum Operand {
    Index(Index),
    Word(Word),
}

impl Operand {
    fn to_poly(&self) -> Poly {
        match self {
            Operand::Index(k) => Poly::from(k.to_word()),
            Operand::Word(w) => Poly::from(*w),
        }
    }
}

fn parse_eps(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Precision::new(v).map(Precision::eps).map_err(|e| e.to_string())
}

fn parse_index(s: &str) -> Result<Index, String> {
    s.parse::<Index>().map_err(|e| format!("{e}\n\n{GRAMMAR}"))
}

fn parse_operand(s: &str) -> Result<Operand, String> {
    if s.trim_start().starts_with('(') {
        parse_index(s).map(Operand::Index)
    } else {
        s.parse::<Word>().map(Operand::Word).map_err(|e| format!("{e}\n\n{GRAMMAR}"))
    }
}

/// Failure after argument parsing.
enum Failure {
    Usage(Error),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::PrecisionUnreachable { .. } => Failure::Runtime(e),
            other => Failure::Usage(other),
        }
    }
}

fn combination_json(c: &IndexCombination) -> Value {
    Value::Array(c.terms().map(|(k, q)| json!({"index": k.to_string(), "coeff": q.to_string()})).collect())
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.terms().map(|(w, q)| json!({"word": w.to_string(), "coeff": q.to_string()})).collect())
}

fn zeta_poly_json(p: &ZetaPoly) -> Value {
    serde_json::to_value(p).expect("zeta polynomial serializes")
}

fn approx_json(v: &ApproxValue) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

/// Poly rendered over indices when it lies in `h¹`, else over words.
fn render_poly(p: &Poly, format: Format) -> String {
    match (IndexCombination::from_poly(p), format) {
        (Ok(c), Format::Text) => c.to_string(),
        (Err(_), Format::Text) => p.to_string(),
        (Ok(c), Format::Json) => json!({ "terms": combination_json(&c) }).to_string(),
        (Err(_), Format::Json) => json!({ "terms": poly_json(p) }).to_string(),
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let prec = Precision::new(cli.eps)?;
    let text = cli.format == Format::Text;
    let out = match cli.command {
        Command::Shuffle { left, right } => {
            let p = shuffle_poly(&left.to_poly(), &right.to_poly());
            match (&left, &right) {
                (Operand::Index(_), Operand::Index(_)) => render_poly(&p, cli.format),
                _ if text => p.to_string(),
                _ => json!({ "terms": poly_json(&p) }).to_string(),
            }
        }
        Command::Dual { index } => {
            let d = dual_index(&index)?;
            if text {
                d.to_string()
            } else {
                json!({"index": index.to_string(), "dual": d.to_string()}).to_string()
            }
        }
        Command::StarExpand { index } => {
            let c = star_expand(&index)?;
            if text {
                c.to_string()
            } else {
                json!({"index": index.to_string(), "terms": combination_json(&c)}).to_string()
            }
        }
        Command::Smap { operand } => {
            let p = smap(&operand.to_poly());
            match operand {
                Operand::Index(_) => render_poly(&p, cli.format),
                Operand::Word(_) if text => p.to_string(),
                Operand::Word(_) => json!({ "terms": poly_json(&p) }).to_string(),
            }
        }
        Command::SigmaM { m, index } => {
            let c = sigma_m(m, &index);
            if text {
                c.to_string()
            } else {
                json!({"m": m, "index": index.to_string(), "terms": combination_json(&c)}).to_string()
            }
        }
        Command::Eval { index } => {
            let v = mzv(&index, prec)?;
            if text {
                v.to_string()
            } else {
                json!({"index": index.to_string(), "value": approx_json(&v)}).to_string()
            }
        }
        Command::EvalStar { index } => {
            let v = mzv_star(&index, prec)?;
            if text {
                v.to_string()
            } else {
                json!({"index": index.to_string(), "value": approx_json(&v)}).to_string()
            }
        }
        Command::Gf { order } => {
            let g = height_one_gf(order);
            if text {
                g.to_string()
            } else {
                serde_json::to_string(&g).expect("series serializes")
            }
        }
        Command::Certificate { k, n } => {
            let p = star_difference_certificate(k, n);
            let v = eval_zeta_poly(&p, prec)?;
            if text {
                format!("{p}\n{v}")
            } else {
                json!({"k": k, "n": n, "certificate": zeta_poly_json(&p), "value": approx_json(&v)}).to_string()
            }
        }
        Command::Verify { kmax, nmax, checks, sequential } => {
            let which = parse_check_list(&checks)?;
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let results = run_suite(kmax, nmax, prec, &which, exec)?;
            let all_passed = results.iter().all(|r| r.passed);
            let body = if text { render_text(&results) } else { render_json(&results) };
            return Ok((body.trim_end().to_string(), all_passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}\n\n{GRAMMAR}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
