//! Command-line surface. Exit conventions: 0 for success (and for
//! relations that hold), 2 for refuted relations and mismatched
//! replication reports, 1 for usage and input errors.

use crate::analysis::{count_satisfying, replicate_report};
use crate::catalog;
use crate::family::{decode, lp_logic, LogicId, LogicSpec};
use crate::formula::Formula;
use crate::laws::{self, builtin_law, LawSchema};
use crate::parser::{parse_formula, parse_law_file};
use crate::render::render_truth_table;
use crate::semantics::{entails, equivalent, eval, EntailmentResult, Valuation};
use crate::truth::TruthValue;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trilogic",
    version,
    about = "Workbench for three-valued paraconsistent propositional logics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula under an atom assignment
    Eval {
        /// Logic to use: `lp` or an id in 0..8192
        #[arg(long, default_value = "lp")]
        logic: String,
        /// Comma-separated atom assignment, e.g. `p=t,q=b`
        #[arg(long, default_value = "")]
        assign: String,
        formula: String,
    },
    /// Decide semantic consequence; exits 2 with a witness when refuted
    Entails {
        #[arg(long, default_value = "lp")]
        logic: String,
        /// Premises separated by `;`
        #[arg(long, default_value = "")]
        premises: String,
        conclusion: String,
    },
    /// Decide logical equivalence; exits 2 with a witness when refuted
    Equiv {
        #[arg(long, default_value = "lp")]
        logic: String,
        lhs: String,
        rhs: String,
    },
    /// Check built-in or user-supplied equivalence laws
    #[command(group(ArgGroup::new("source").required(true).args(["law", "law_file"])))]
    CheckLaw {
        #[arg(long, default_value = "lp")]
        logic: String,
        /// Built-in law number in 1..=23
        #[arg(long)]
        law: Option<u8>,
        /// File of laws, one `NAME: LHS == RHS` per line
        #[arg(long)]
        law_file: Option<PathBuf>,
    },
    /// List the family members satisfying a set of built-in laws
    Enumerate {
        /// Law numbers, e.g. `1-8,10-12`; empty means every member
        #[arg(long, default_value = "")]
        satisfying: String,
    },
    /// Catalog persistence
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Recompute the family's quantitative structure against the
    /// expected values; exits 0 only when every claim matches
    Replicate {
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Render a truth table (at most four atoms)
    Tt {
        #[arg(long, default_value = "lp")]
        logic: String,
        formula: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Write all 8192 records
    Export {
        #[arg(long)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Jsonl,
    Csv,
}

fn parse_logic(text: &str) -> Result<LogicSpec, String> {
    if text == "lp" {
        return Ok(lp_logic());
    }
    let raw: u16 = text
        .parse()
        .map_err(|_| format!("unknown logic '{text}': use 'lp' or an id in 0..8192"))?;
    let id = LogicId::new(raw).map_err(|e| e.to_string())?;
    Ok(decode(id))
}

/// Parses a comma-separated atom assignment such as `p=t,q=b`.
pub fn parse_assignment(text: &str) -> Result<Valuation, String> {
    let mut valuation = Valuation::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (atom, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad assignment '{part}': expected atom=value"))?;
        let atom = atom.trim();
        let mut chars = atom.chars();
        let valid = matches!(chars.next(), Some('a'..='z'))
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(format!("bad atom name '{atom}'"));
        }
        let value = value.trim();
        let value = match value.len() {
            1 => TruthValue::from_char(value.chars().next().unwrap()),
            _ => None,
        }
        .ok_or_else(|| format!("bad truth value '{value}': use t, f, or b"))?;
        valuation.assign(atom, value);
    }
    Ok(valuation)
}

fn parse_law_set(text: &str) -> Result<BTreeSet<u8>, String> {
    let mut numbers = BTreeSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let parse_one = |s: &str| -> Result<u8, String> {
            s.trim()
                .parse::<u8>()
                .map_err(|_| format!("bad law number '{s}'"))
        };
        match part.split_once('-') {
            Some((from, to)) => {
                let (from, to) = (parse_one(from)?, parse_one(to)?);
                if from > to {
                    return Err(format!("empty law range '{part}'"));
                }
                numbers.extend(from..=to);
            }
            None => {
                numbers.insert(parse_one(part)?);
            }
        }
    }
    Ok(numbers)
}

fn parse_premises(text: &str) -> Result<Vec<Formula>, String> {
    text.split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| parse_formula(part).map_err(|e| format!("premise '{part}': {e}")))
        .collect()
}

fn print_law_verdict(law: &LawSchema, logic: &LogicSpec) {
    match laws::counterexample(law, logic) {
        None => println!("{} ({} == {}): holds", law.name, law.lhs, law.rhs),
        Some(ce) => println!("{} ({} == {}): fails at {}", law.name, law.lhs, law.rhs, ce),
    }
}

/// Executes a parsed command, returning the process exit code.
pub fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Eval {
            logic,
            assign,
            formula,
        } => {
            let logic = parse_logic(&logic)?;
            let formula = parse_formula(&formula).map_err(|e| e.to_string())?;
            let valuation = parse_assignment(&assign)?;
            let value = eval(&formula, &valuation, &logic).map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(EXIT_OK)
        }
        Command::Entails {
            logic,
            premises,
            conclusion,
        } => {
            let logic = parse_logic(&logic)?;
            let premises = parse_premises(&premises)?;
            let conclusion = parse_formula(&conclusion).map_err(|e| e.to_string())?;
            match entails(&premises, &conclusion, &logic) {
                EntailmentResult::Holds => {
                    println!("holds");
                    Ok(EXIT_OK)
                }
                EntailmentResult::Refuted(witness) => {
                    println!("refuted");
                    println!("witness: {witness}");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Equiv { logic, lhs, rhs } => {
            let logic = parse_logic(&logic)?;
            let lhs = parse_formula(&lhs).map_err(|e| e.to_string())?;
            let rhs = parse_formula(&rhs).map_err(|e| e.to_string())?;
            match equivalent(&lhs, &rhs, &logic) {
                EntailmentResult::Holds => {
                    println!("equivalent");
                    Ok(EXIT_OK)
                }
                EntailmentResult::Refuted(witness) => {
                    let lv = eval(&lhs, &witness, &logic).expect("witness covers the atoms");
                    let rv = eval(&rhs, &witness, &logic).expect("witness covers the atoms");
                    println!("not equivalent");
                    println!("witness: {witness} (lhs={lv}, rhs={rv})");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::CheckLaw {
            logic,
            law,
            law_file,
        } => {
            let logic = parse_logic(&logic)?;
            let laws: Vec<LawSchema> = match (law, law_file) {
                (Some(number), None) => {
                    let law = builtin_law(number).ok_or_else(|| {
                        format!("no built-in law {number}: valid numbers are 1..=23")
                    })?;
                    vec![law]
                }
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    parse_law_file(&text).map_err(|e| e.to_string())?
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            for law in &laws {
                print_law_verdict(law, &logic);
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { satisfying } => {
            let numbers = parse_law_set(&satisfying)?;
            let ids = count_satisfying(&numbers).map_err(|e| e.to_string())?;
            for id in &ids {
                println!("{id}");
            }
            println!("count: {}", ids.len());
            Ok(EXIT_OK)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::Export { format, out } => {
                let file = fs::File::create(&out).map_err(|e| format!("{}: {e}", out.display()))?;
                let mut writer = std::io::BufWriter::new(file);
                match format {
                    ExportFormat::Jsonl => {
                        catalog::export_jsonl(&mut writer).map_err(|e| e.to_string())?
                    }
                    ExportFormat::Csv => {
                        catalog::export_csv(&mut writer).map_err(|e| e.to_string())?
                    }
                }
                writer.flush().map_err(|e| e.to_string())?;
                println!(
                    "wrote {} records to {}",
                    crate::family::FAMILY_SIZE,
                    out.display()
                );
                Ok(EXIT_OK)
            }
        },
        Command::Replicate { json } => {
            let report = replicate_report();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                for claim in &report.claims {
                    if claim.matched {
                        println!("[ ok ] {}: {}", claim.label, claim.computed);
                    } else {
                        println!(
                            "[FAIL] {}: expected {}, computed {}",
                            claim.label, claim.expected, claim.computed
                        );
                    }
                    for witness in &claim.witnesses {
                        println!("       {witness}");
                    }
                }
                let mismatched = report.claims.iter().filter(|c| !c.matched).count();
                if mismatched == 0 {
                    println!("all {} claims matched", report.claims.len());
                } else {
                    println!("{mismatched} of {} claims mismatched", report.claims.len());
                }
            }
            if report.all_matched() {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_REFUTED)
            }
        }
        Command::Tt { logic, formula } => {
            let logic = parse_logic(&logic)?;
            let formula = parse_formula(&formula).map_err(|e| e.to_string())?;
            let table = render_truth_table(&formula, &logic).map_err(|e| e.to_string())?;
            print!("{table}");
            Ok(EXIT_OK)
        }
    }
}
