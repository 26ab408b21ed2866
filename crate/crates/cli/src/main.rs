//! `skein-homfly` command-line front end.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skein_homfly::arith::{LaurentQT, Limit, RationalQT, UniLaurent};
use skein_homfly::characters::character_table;
use skein_homfly::hecke::{framed_homfly_of_closure, homfly_of_closure, BraidLimits, BraidWord};
use skein_homfly::partition::{Partition, PartitionVector};
use skein_homfly::schur::{plethysm_coefficients, unknot_value};
use skein_homfly::special::{delta_basis, special_delta, special_h, SpecialPolynomial};
use skein_homfly::torus::{colored_homfly, Link};
use skein_homfly::verify::{self, Grid, Theorem};
use skein_homfly::Error;

#[derive(Parser)]
#[command(name = "skein-homfly", version, about = "Colored HOMFLY invariants of torus links in exact arithmetic")]
struct Cli {
    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TorusArgs {
    /// Strands per component.
    #[arg(long)]
    m: u32,
    /// Twists per component; negative for the mirror.
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Number of components L; the link is T(mL, nL).
    #[arg(long, default_value_t = 1)]
    components: u32,
    /// One partition per component, e.g. "(2);(1,1)".
    #[arg(long, alias = "color")]
    colors: String,
}

impl TorusArgs {
    fn link(&self) -> Result<Link, Error> {
        let colors: PartitionVector = self.colors.parse()?;
        Link::torus(self.m, self.n, self.components, colors)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "delta", alias = "Delta")]
    Delta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Delta,
}

#[derive(Subcommand)]
enum Command {
    /// Colored HOMFLY invariant W of a torus link.
    #[command(alias = "compute")]
    Torus {
        #[command(flatten)]
        link: TorusArgs,
        /// Also print a floating-point evaluation at `q,t`, as a numerical sanity check.
        #[arg(long, value_name = "Q,T")]
        sanity_eval: Option<String>,
    },
    /// Quantum dimension s*_A of the unknot colored by A.
    Unknot {
        #[arg(long)]
        color: String,
    },
    /// Character table of S_n as CSV.
    Characters {
        #[arg(long)]
        n: u32,
    },
    /// Schur expansion of the Adams-operated product of Schur functions.
    Plethysm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        colors: String,
    },
    /// Special polynomial H (q -> 1) or Delta (t -> 1).
    Special {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        link: TorusArgs,
        #[arg(long, value_enum, default_value_t = Basis::Monomial)]
        basis: Basis,
    },
    /// Framed bracket, writhe and HOMFLY polynomial of a braid closure.
    HomflyBraid {
        #[arg(long)]
        strands: usize,
        /// "s1 s2 s1^-1" or "1 2 -1".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        max_strands: Option<usize>,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Exhaustive check of a theorem over a grid; exit status 1 on any failure.
    Verify {
        /// thm62, thm64, thm71, thm72, lemma65, lemma73, thm22 or all.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// TOML or JSON grid overriding the defaults.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Include wall-clock timings (output is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// JSON record of W and the special polynomials of a torus link.
    Export {
        #[command(flatten)]
        link: TorusArgs,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Math(Error),
    Verification,
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.unwrap_or(0);
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: cannot start thread pool: {e}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            // malformed partition or braid text is a usage error
            ExitCode::from(if matches!(e, Error::Parse(_)) { 2 } else { 1 })
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn rational_text(r: &RationalQT) -> String {
    match r.as_laurent() {
        Some(p) => p.to_string(),
        None => r.to_string(),
    }
}

fn rational_json(r: &RationalQT) -> Value {
    match r.as_laurent() {
        Some(p) => json!({ "numerator": p, "denominator": LaurentQT::one() }),
        None => json!({ "numerator": r.numer(), "denominator": r.denom() }),
    }
}

fn uni_json(p: &UniLaurent) -> Value {
    json!(LaurentQT::from_uni(p))
}

fn limit_json(l: &Limit) -> Value {
    match l {
        Limit::Polynomial(p) => json!({ "numerator": uni_json(p), "denominator": LaurentQT::one() }),
        Limit::Fraction(f) => json!({ "numerator": uni_json(f.numer()), "denominator": uni_json(f.denom()) }),
    }
}

fn lines(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialize"))
}

fn special_text(sp: &SpecialPolynomial, basis: Basis) -> Result<String, Error> {
    match (basis, sp.as_polynomial()) {
        (Basis::Monomial, _) => Ok(sp.to_string()),
        (Basis::Delta, Some(p)) => Ok(delta_basis(p)?.to_string()),
        (Basis::Delta, None) => Err(Error::InvalidInput(format!("{} is not a Laurent polynomial", sp.value))),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Torus { link, sanity_eval } => {
            let link = link.link()?;
            let w = colored_homfly(&link)?.value;
            let numeric = match sanity_eval {
                None => None,
                Some(s) => {
                    let (q, t) = s
                        .split_once(',')
                        .and_then(|(a, b)| Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?)))
                        .ok_or_else(|| Error::Parse(format!("expected Q,T, got {s:?}")))?;
                    Some(w.eval_f64(q, t))
                }
            };
            if cli.json {
                let mut v = json!({ "link": link.to_string(), "W": rational_json(&w) });
                if let Some(x) = numeric {
                    v["sanity_eval"] = json!(x);
                }
                Ok(lines(&v))
            } else {
                let mut out = format!("{}\n", rational_text(&w));
                if let Some(x) = numeric {
                    out.push_str(&format!("sanity-eval: {x:e}\n"));
                }
                Ok(out)
            }
        }
        Command::Unknot { color } => {
            let a: Partition = color.parse()?;
            let s = unknot_value(&a);
            if cli.json {
                Ok(lines(&json!({ "color": a.to_string(), "value": rational_json(&s) })))
            } else {
                Ok(format!("{}\n", rational_text(&s)))
            }
        }
        Command::Characters { n } => {
            let table = character_table(*n)?;
            if cli.json {
                let rows: Vec<Value> = table
                    .partitions()
                    .iter()
                    .zip(table.rows())
                    .map(|(p, r)| json!({ "lambda": p.to_string(), "values": r }))
                    .collect();
                let cols: Vec<String> = table.partitions().iter().map(|p| p.to_string()).collect();
                Ok(lines(&json!({ "n": n, "classes": cols, "rows": rows })))
            } else {
                Ok(table.to_csv())
            }
        }
        Command::Plethysm { m, colors } => {
            let colors: PartitionVector = colors.parse()?;
            let e = plethysm_coefficients(*m, &colors)?;
            if cli.json {
                let terms: Vec<Value> = e.terms().map(|(p, c)| json!([p.to_string(), c])).collect();
                Ok(lines(&json!({ "m": m, "colors": colors.to_string(), "terms": terms })))
            } else {
                Ok(e.to_string())
            }
        }
        Command::Special { kind, link, basis } => {
            let link = link.link()?;
            let sp = match kind {
                KindArg::H => special_h(&link)?,
                KindArg::Delta => special_delta(&link)?,
            };
            if cli.json {
                let mut v = json!({
                    "link": link.to_string(),
                    "kind": sp.kind.to_string(),
                    "variable": sp.variable.to_string(),
                    "value": limit_json(&sp.value),
                });
                if *basis == Basis::Delta {
                    v["delta_basis"] = json!(special_text(&sp, *basis)?);
                }
                Ok(lines(&v))
            } else {
                Ok(format!("{}\n", special_text(&sp, *basis)?))
            }
        }
        Command::HomflyBraid { strands, word, max_strands, max_length } => {
            let defaults = BraidLimits::default();
            let limits = BraidLimits {
                max_strands: max_strands.unwrap_or(defaults.max_strands),
                max_length: max_length.unwrap_or(defaults.max_length),
            };
            let w = BraidWord::parse_with_limits(*strands, word, limits)?;
            let framed = framed_homfly_of_closure(&w);
            let p = homfly_of_closure(&w);
            if cli.json {
                Ok(lines(&json!({
                    "word": w.to_string(),
                    "strands": w.strands(),
                    "components": w.components(),
                    "writhe": w.writhe(),
                    "framed": rational_json(&framed),
                    "homfly": rational_json(&p),
                })))
            } else {
                Ok(format!(
                    "braid: {w}\ncomponents: {}\nwrithe: {}\nframed: {}\nhomfly: {}\n",
                    w.components(),
                    w.writhe(),
                    rational_text(&framed),
                    rational_text(&p)
                ))
            }
        }
        Command::Verify { theorem, grid, timing } => {
            let grid = match grid {
                Some(path) => Grid::from_file(path)?,
                None => Grid::default(),
            };
            let theorems: Vec<Theorem> =
                if theorem == "all" { Theorem::ALL.to_vec() } else { vec![theorem.parse()?] };
            let mut reports = Vec::new();
            for t in theorems {
                let r = verify::verify(t, &grid)?;
                reports.push(if *timing { r } else { r.without_timing() });
            }
            let passed = reports.iter().all(|r| r.passed());
            let out = if cli.json {
                lines(&serde_json::to_value(&reports).expect("reports serialize"))
            } else {
                let mut s: String = reports.iter().map(|r| r.to_string()).collect();
                s.push_str(if passed { "PASS\n" } else { "FAIL\n" });
                s
            };
            if passed {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Verification)
            }
        }
        Command::Export { link, out } => {
            let link = link.link()?;
            let w = colored_homfly(&link)?.value;
            let h = special_h(&link)?;
            let delta = match special_delta(&link) {
                Ok(d) => limit_json(&d.value),
                Err(e @ Error::LimitDoesNotExist { .. }) => json!({ "error": e.kind() }),
                Err(e) => return Err(e.into()),
            };
            let doc = lines(&json!({
                "link": link.to_string(),
                "components": link.components(),
                "colors": link.colors().to_string(),
                "W": rational_json(&w),
                "H": limit_json(&h.value),
                "Delta": delta,
            }));
            match out {
                Some(path) => {
                    fs::write(path, doc).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(doc),
            }
        }
    }
}
