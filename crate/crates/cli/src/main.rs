use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hecke_skein::grammar::{parse_braid_word, parse_elem};
use hecke_skein::repn::{character_table, closure};
use hecke_skein::symfun::Basis;
use hecke_skein::trace::{ev_sym, homfly, writhe};
use hecke_skein::verify::{self, Theorem, VerifyReport};
use hecke_skein::{psi, HeckeElt, Scalar};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hecke-skein", version, about = "Exact computations in the Hecke algebra skein")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the exact checks for one identity, or `all`.
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
    /// HOMFLY polynomial of a closed braid.
    Homfly {
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Closure of a braid in the Schur basis.
    Closure {
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Character table of the Hecke algebra on the permutation basis.
    Characters {
        #[arg(long)]
        n: usize,
    },
    /// Central element of H_n attached to a symmetric function.
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
    /// Plane evaluation of a symmetric function.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<hecke_skein::Error> for Failure {
    fn from(e: hecke_skein::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
    passed: bool,
}

fn strands_for(strands: Option<usize>, word: &[i32]) -> usize {
    strands.unwrap_or_else(|| word.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1))
}

fn to_json(x: &impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("values serialize")
}

fn render_report(r: &VerifyReport) -> String {
    let mut out = String::new();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(out, "{} [{}] {status} ({} ms)", r.theorem, params.join(", "), r.elapsed_ms);
    for c in &r.details {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        match &c.value {
            Some(v) => {
                let shown = serde_json::from_value::<Scalar>(v.clone())
                    .map(|x| x.to_string())
                    .unwrap_or_else(|_| v.to_string());
                let _ = writeln!(out, "  {mark} {} = {shown}", c.name);
            }
            None => {
                let _ = writeln!(out, "  {mark} {}", c.name);
            }
        }
    }
    out
}

fn run(command: Command) -> Result<Output, Failure> {
    let out = match command {
        Command::Verify { theorem, n, degree } => {
            let t: Theorem = theorem.parse()?;
            let report = verify::run(t, n, degree)?;
            Output {
                json: to_json(&report),
                text: render_report(&report),
                passed: report.passed(),
            }
        }
        Command::Homfly { strands, word } => {
            let w = parse_braid_word(&word)?;
            let p = homfly(strands_for(strands, &w), &w)?;
            Output {
                json: json!({ "polynomial": to_json(&p), "writhe": writhe(&w) }),
                text: format!("{p}\n"),
                passed: true,
            }
        }
        Command::Closure { strands, word } => {
            let w = parse_braid_word(&word)?;
            let x = HeckeElt::word_elt(strands_for(strands, &w), &w)?;
            let e = closure(&x)?.expand(Basis::Schur);
            let mut text = String::new();
            for (lambda, c) in &e.terms {
                let _ = writeln!(text, "s{lambda}: {c}");
            }
            Output {
                json: to_json(&e),
                text,
                passed: true,
            }
        }
        Command::Characters { n } => {
            let rows = character_table(n)?;
            let mut text = String::new();
            for row in &rows {
                let _ = writeln!(text, "{}", row.lambda);
                for (p, c) in &row.values {
                    let _ = writeln!(text, "  {p}: {c}");
                }
            }
            Output {
                json: to_json(&rows),
                text,
                passed: true,
            }
        }
        Command::Psi { n, elem } => {
            let f = parse_elem(&elem)?;
            let x = psi::psi(n, &f)?;
            Output {
                text: format!("{x}\n"),
                json: to_json(&x),
                passed: true,
            }
        }
        Command::Eval { elem } => {
            let f = parse_elem(&elem)?;
            let value = ev_sym(&f)?;
            Output {
                text: format!("{value}\n"),
                json: to_json(&value),
                passed: true,
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|o| {
        let body = if cli.pretty {
            o.text
        } else {
            let mut s = serde_json::to_string(&o.json).expect("json output");
            s.push('\n');
            s
        };
        match &cli.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{body}"),
        }
        Ok(o.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
