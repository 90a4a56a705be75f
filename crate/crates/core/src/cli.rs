//! Command-line surface. Every subcommand prints JSON by default; `text`
//! gives a short human-readable summary and `dot` is available for the
//! exchange graph.
//!
//! Exit codes: 0 success, 1 invalid input, 2 non-generic path, 3 internal
//! invariant violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::charges::CentralCharge;
use crate::constellations::{find_semistable, is_semistable, Weight};
use crate::cover::{
    coxeter_monodromy, exchange_bfs, initial_state, lift_path, monodromy, normalize, replay,
    rotate_loop,
};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::gauss::{format_rational, parse_rational};
use crate::io::{parse_charge_file, parse_path_file, parse_state_file, StateJson};
use crate::rootsys::{enumerate_roots, is_regular};
use crate::weylbraid::{verify_relations, BraidWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "dynkin-stab",
    version,
    about = "Exact wall-crossing and braid monodromy for (affine) ADE diagrams"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler matrix and marks of a diagram.
    Diagram {
        #[arg(long)]
        diagram: String,
    },
    /// All roots of a finite diagram.
    Roots {
        #[arg(long)]
        diagram: String,
    },
    /// Whether a charge vanishes on no root.
    Regular {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        charge: PathBuf,
    },
    /// Lift a charge path, from a state file or from the chamber state at its start.
    Lift {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        path: PathBuf,
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Deck transformation of the loop of a braid word, e.g. "1,2,-1".
    Monodromy {
        #[arg(long)]
        diagram: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Scalar and braid word taking a charge into the fundamental chamber.
    Normalize {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        charge: PathBuf,
    },
    /// Lift full turns of the scalar loop (negative for counter-clockwise).
    Rotate {
        #[arg(long)]
        diagram: String,
        /// Chamber charge to start from; defaults to (i, …, i).
        #[arg(long)]
        charge: Option<PathBuf>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        turns: i64,
    },
    /// Monodromy of the h-th power of the Coxeter word.
    CoxeterCheck {
        #[arg(long)]
        diagram: String,
    },
    /// Breadth-first exchange graph of hearts.
    Exchange {
        #[arg(long)]
        diagram: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// A θ-semistable nilpotent representation of dimension δ.
    Constellation {
        #[arg(long)]
        diagram: String,
        /// Comma-separated rationals, e.g. "1,-1".
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Matrix-level check of the braid relations.
    VerifyRelations {
        #[arg(long)]
        diagram: String,
    },
}

/// A command's result: JSON, with optional text and DOT renderings.
struct Output {
    json: serde_json::Value,
    text: String,
    dot: Option<String>,
}

impl Output {
    fn new(json: impl Serialize, text: String) -> Self {
        Output {
            json: serde_json::to_value(json).expect("outputs serialize"),
            text,
            dot: None,
        }
    }
}

fn diagram(s: &str) -> Result<Diagram> {
    s.parse()
}

fn rationals(s: &str) -> Result<Vec<crate::gauss::Rational>> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            parse_rational(t.trim()).map_err(|e| Error::invalid(format!("entry {i} of {s:?}: {e}")))
        })
        .collect()
}

fn charge_text(z: &CentralCharge) -> String {
    z.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Diagram { diagram: name } => {
            let d = diagram(name)?;
            let j = d.to_json();
            let rows: Vec<String> = d.euler_matrix().iter().map(|r| format!("{r:?}")).collect();
            let mut text = format!("{d}\n{}", rows.join("\n"));
            if let Some(m) = &j.marks {
                text.push_str(&format!("\nmarks {m:?}"));
            }
            Ok(Output::new(j, text))
        }
        Command::Roots { diagram: name } => {
            let roots = enumerate_roots(&diagram(name)?)?;
            let text = format!(
                "{} roots\n{}",
                roots.len(),
                roots
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            Ok(Output::new(roots, text))
        }
        Command::Regular {
            diagram: name,
            charge,
        } => {
            let d = diagram(name)?;
            let z = parse_charge_file(charge, Some(&d))?;
            let r = is_regular(&d, &z)?;
            let text = match &r.witness {
                None => "regular".to_string(),
                Some(w) => format!("not regular: vanishes on {w}"),
            };
            Ok(Output::new(r, text))
        }
        Command::Lift {
            diagram: name,
            path,
            state,
        } => {
            let d = diagram(name)?;
            let p = parse_path_file(path, Some(&d))?;
            let start = match state {
                Some(f) => {
                    let s = parse_state_file(f)?;
                    if s.diagram() != &d {
                        return Err(Error::invalid("state file belongs to another diagram"));
                    }
                    s
                }
                None => initial_state(&d, p.start())?,
            };
            let (end, events) = lift_path(&start, &p)?;
            let mut text = format!("{} events\n", events.len());
            for e in &events {
                let slot = match e.slot {
                    crate::cover::Crossed::Slot(i) => d.label_of(i).to_string(),
                    crate::cover::Crossed::All => "all".into(),
                };
                text.push_str(&format!(
                    "  segment {} t = {} slot {slot} {:?}\n",
                    e.segment,
                    format_rational(&e.time),
                    e.direction
                ));
            }
            text.push_str(&end.to_string());
            Ok(Output::new(
                json!({ "state": StateJson::from_state(&end), "events": events }),
                text,
            ))
        }
        Command::Monodromy {
            diagram: name,
            word,
        } => {
            let d = diagram(name)?;
            let w = BraidWord::parse_str(&d, word)?;
            let m = monodromy(&d, &w)?;
            let text = format!(
                "word {}\nK = {:?}\nledger change {:?}\npure shift: {}",
                m.word, m.k_matrix, m.ledger_delta, m.pure_shift
            );
            Ok(Output::new(m, text))
        }
        Command::Normalize {
            diagram: name,
            charge,
        } => {
            let d = diagram(name)?;
            let z = parse_charge_file(charge, Some(&d))?;
            let (n, home) = normalize(&d, &z)?;
            let landed = replay(&d, &z, &n)?;
            let text = format!(
                "scalar {}\nword {}\nreplayed charge [{}]\ntarget [{}]",
                n.scalar,
                n.word,
                charge_text(&landed),
                charge_text(&n.target)
            );
            Ok(Output::new(
                json!({
                    "scalar": n.scalar,
                    "word": n.word,
                    "target": n.target,
                    "replayed": landed,
                    "state": StateJson::from_state(&home),
                }),
                text,
            ))
        }
        Command::Rotate {
            diagram: name,
            charge,
            turns,
        } => {
            let d = diagram(name)?;
            let z = match charge {
                Some(f) => parse_charge_file(f, Some(&d))?,
                None => CentralCharge::standard(d.size()),
            };
            let start = initial_state(&d, &z)?;
            let end = rotate_loop(&start, *turns)?;
            let text = end.to_string();
            Ok(Output::new(StateJson::from_state(&end), text))
        }
        Command::CoxeterCheck { diagram: name } => {
            let d = diagram(name)?;
            let (h, m) = coxeter_monodromy(&d)?;
            let ledger = m.shift();
            let text = match ledger {
                Some(k) => format!("(Coxeter word)^{h} acts as the shift [{k}]"),
                None => format!(
                    "(Coxeter word)^{h} is not a pure shift; ledger change {:?}",
                    m.ledger_delta
                ),
            };
            Ok(Output::new(
                json!({ "pure_shift": m.pure_shift, "ledger": ledger, "coxeter_number": h }),
                text,
            ))
        }
        Command::Exchange {
            diagram: name,
            depth,
        } => {
            let d = diagram(name)?;
            let g = exchange_bfs(&d, *depth)?;
            let text = format!(
                "{}: {} hearts, {} edges up to depth {}{}",
                g.diagram,
                g.nodes.len(),
                g.edges.len(),
                g.depth,
                if g.closed { " (closed)" } else { "" }
            );
            let dot = g.to_dot();
            let mut out = Output::new(g, text);
            out.dot = Some(dot);
            Ok(out)
        }
        Command::Constellation {
            diagram: name,
            theta,
        } => {
            let d = diagram(name)?;
            let w = Weight::for_diagram(&d, rationals(theta)?)?;
            let rep = find_semistable(&w)?;
            let check = is_semistable(&rep, &w)?;
            let text = format!(
                "x = [{}]\ny = [{}]\nsemistable: {}",
                rep.x
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", "),
                rep.y
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", "),
                check.semistable
            );
            Ok(Output::new(
                json!({
                    "dimension": rep.dimension(),
                    "rep": rep,
                    "semistable": check.semistable,
                    "certificate": check.certificate,
                }),
                text,
            ))
        }
        Command::VerifyRelations { diagram: name } => {
            let r = verify_relations(&diagram(name)?);
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            let text = format!(
                "{}: {} relations checked, {failed} failed",
                r.diagram,
                r.checks.len()
            );
            Ok(Output::new(
                json!({ "all_passed": r.all_passed(), "report": r }),
                text,
            ))
        }
    }
}

fn render(out: &Output, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&out.json).expect("values print")),
        Format::Text => Ok(out.text.clone()),
        Format::Dot => out
            .dot
            .clone()
            .ok_or_else(|| Error::invalid("dot output is only available for exchange")),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(&cli.command).and_then(|o| render(&o, cli.format)) {
        Ok(s) => {
            let _ = writeln!(out, "{s}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["dynkin-stab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn roots_of_a2() {
        let (code, out, _) = call(&["roots", "--diagram", "A2"]);
        assert_eq!(code, 0);
        let v: Vec<Vec<i64>> = serde_json::from_str(&out).unwrap();
        assert_eq!(v.len(), 6);
    }

    #[test]
    fn coxeter_check_a2() {
        let (code, out, _) = call(&["coxeter-check", "--diagram", "A2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pure_shift"], json!(true));
        assert_eq!(v["ledger"], json!(-2));
    }

    #[test]
    fn bad_arguments_exit_one() {
        assert_eq!(call(&["roots", "--diagram", "F4"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["roots", "--diagram", "A2", "--format", "dot"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
