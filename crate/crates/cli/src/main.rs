//! Batch front end. Exit codes: 0 success/holds, 1 property fails or
//! counter-model found, 2 input error, 3 resource bound exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use jstit::countermodels::{
    build_jstit_countermodel, build_stit_countermodel, build_temporal_countermodel,
};
use jstit::frames::{mixsucc_witness, regular_witness, FrameError, MixsuccWitness, RegWitness};
use jstit::json::{self as doc, DocError};
use jstit::semantics::Evaluator;
use jstit::{
    classify, find_countermodel, parse_formula_for, validate_model, verify_proof, Bits, Bounds,
    Built, EvidenceMode, Formula, JstitFrame, SearchError,
};

/// `println!` that tolerates a closed stdout (for example `| head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "jstit",
    version,
    about = "Frames, models and proofs for the stit logic of justification announcements"
)]
struct Cli {
    /// Number of agents for documents and formulas that do not fix it
    #[arg(long = "ag", global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=8))]
    agents: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the core AST of a formula
    Parse { formula: String },
    /// Validate a frame document
    CheckFrame { file: PathBuf },
    /// Report mixsucc, regularity, unirelationality and Θ sizes
    Classify { file: PathBuf },
    /// Validate a model document, optionally against a constant specification
    CheckModel {
        file: PathBuf,
        #[arg(long)]
        cs: Option<PathBuf>,
    },
    /// Evaluate a formula at a moment-history pair
    Eval {
        file: PathBuf,
        /// moment,history (for example m0,h2)
        #[arg(long)]
        at: String,
        #[arg(long)]
        formula: String,
        /// Add the formula's polynomials and subformulas to the universe
        #[arg(long)]
        extend_universe: bool,
    },
    /// Build the explicit falsifying model from a frame and a witness
    Countermodel {
        file: PathBuf,
        /// m0,m1,h0,h1 for a mixsucc failure; m0,m1,h',S1,S2,... for a reg failure.
        /// Found automatically when omitted.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, value_enum, default_value_t = Kind::Auto)]
        kind: Kind,
    },
    /// Check a Hilbert proof line by line
    VerifyProof {
        file: PathBuf,
        /// Recognize A0 through the ten-scheme propositional basis only
        #[arg(long)]
        strict_a0: bool,
        /// Accept necessitation for Box and [j]
        #[arg(long)]
        box_nec: bool,
    },
    /// Search small frames for a model falsifying a formula
    Search {
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 3)]
        max_moments: usize,
        #[arg(long, default_value_t = 3)]
        max_histories: usize,
        #[arg(long, value_enum, default_value_t = Evidence::Everything)]
        evidence: Evidence,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Also try density annotations on cover edges
        #[arg(long)]
        density: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// stit build for a 4-field witness, jstit otherwise
    Auto,
    /// choice frame from the document, mixsucc witness
    Stit,
    /// temporal frame with trivial choices, mixsucc witness
    Temporal,
    /// jstit frame, reg witness
    Jstit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Evidence {
    Everything,
    Enumerate,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Frame(FrameError::ThetaTooLarge { .. }) => CliError::Resource(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FrameError> for CliError {
    fn from(e: FrameError) -> Self {
        DocError::from(e).into()
    }
}

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

enum Outcome {
    Holds,
    Fails,
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    doc::parse_document(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    out!("{}", doc::to_canonical_string(v));
}

fn formula(text: &str, agents: usize) -> Result<Formula, CliError> {
    parse_formula_for(text, agents).map_err(input)
}

fn valid_frame(v: &Value, agents: usize) -> Result<JstitFrame, CliError> {
    let f = doc::frame_from_json(v, agents)?;
    let d = f.validate();
    if !d.is_ok() {
        return Err(input(format!("invalid frame:\n{d}")));
    }
    Ok(f)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let agents = cli.agents as usize;
    match cli.command {
        Command::Parse { formula: text } => {
            let f = formula(&text, agents)?;
            out!("{}", f.to_sexpr());
            Ok(Outcome::Holds)
        }
        Command::CheckFrame { file } => {
            let f = doc::frame_from_json(&read_json(&file)?, agents)?;
            let d = f.validate();
            print_json(&d.to_json());
            Ok(if d.is_ok() {
                Outcome::Holds
            } else {
                Outcome::Fails
            })
        }
        Command::Classify { file } => {
            let f = valid_frame(&read_json(&file)?, agents)?;
            let c = classify(&f)?;
            print_json(&doc::classification_to_json(&f, &c));
            Ok(Outcome::Holds)
        }
        Command::CheckModel { file, cs } => {
            let model = doc::model_from_json(&read_json(&file)?, agents)?;
            let cs = cs
                .map(|p| read_json(&p).and_then(|v| Ok(doc::cs_from_json(&v)?)))
                .transpose()?;
            let mut d = model.frame().validate();
            d.extend(validate_model(&model, cs.as_ref()));
            if let Some(cs) = &cs {
                d.extend(jstit::calculus::check_cs(cs));
            }
            print_json(&d.to_json());
            Ok(if d.is_ok() {
                Outcome::Holds
            } else {
                Outcome::Fails
            })
        }
        Command::Eval {
            file,
            at,
            formula: text,
            extend_universe,
        } => {
            let mut model = doc::model_from_json(&read_json(&file)?, agents)?;
            let f = formula(&text, model.frame().agents())?;
            let (m, h) = at
                .split_once(',')
                .ok_or_else(|| input(format!("--at {at:?} must be moment,history")))?;
            let m = doc::moment_index(model.frame(), m.trim())?;
            let h = doc::parse_history(h.trim())?;
            if extend_universe {
                model.extend_universe(&f).map_err(input)?;
            }
            let d = validate_model(&model, None);
            if !d.is_ok() {
                eprintln!("warning: the model violates its constraints:\n{d}");
            }
            let value = Evaluator::new(&model)
                .satisfies((m, h), &f)
                .map_err(input)?;
            out!("{value}");
            Ok(if value {
                Outcome::Holds
            } else {
                Outcome::Fails
            })
        }
        Command::Countermodel {
            file,
            witness,
            kind,
        } => countermodel(&read_json(&file)?, agents, witness, kind),
        Command::VerifyProof {
            file,
            strict_a0,
            box_nec,
        } => {
            let (proof, cs, mut options) = doc::proof_from_json(&read_json(&file)?)?;
            options.strict_a0 |= strict_a0;
            options.box_necessitation |= box_nec;
            let cs_diag = jstit::calculus::check_cs(&cs);
            for v in &cs_diag.violations {
                out!("cs: {v}");
            }
            for w in &cs_diag.warnings {
                eprintln!("warning: {w}");
            }
            let verdict = verify_proof(&proof, &cs, options);
            for v in &verdict.lines {
                match &v.result {
                    Ok(Some(m)) if m.variant.is_empty() => out!("{}: ok {}", v.line, m.scheme),
                    Ok(Some(m)) => out!("{}: ok {} ({})", v.line, m.scheme, m.variant),
                    Ok(None) => out!(
                        "{}: ok {}",
                        v.line,
                        rule_name(&proof.lines[v.line - 1].just)
                    ),
                    Err(e) => out!("{}: error: {e}", v.line),
                }
            }
            let accepted = verdict.accepted() && cs_diag.is_ok();
            out!("{}", if accepted { "accepted" } else { "rejected" });
            Ok(if accepted {
                Outcome::Holds
            } else {
                Outcome::Fails
            })
        }
        Command::Search {
            formula: text,
            max_moments,
            max_histories,
            evidence,
            budget,
            density,
        } => {
            let f = formula(&text, agents)?;
            let bounds = Bounds {
                max_moments,
                max_histories,
                agents,
                evidence_mode: match evidence {
                    Evidence::Everything => EvidenceMode::Everything,
                    Evidence::Enumerate => EvidenceMode::Enumerate,
                },
                budget,
                density,
            };
            match find_countermodel(&f, bounds) {
                Ok(Some(c)) => {
                    let mut out = doc::model_to_json(&c.model);
                    let frame = c.model.frame();
                    out["countermodel"] = json!({
                        "formula": f.to_string(),
                        "index": [frame.name(c.index.0), format!("h{}", c.index.1)],
                        "steps": c.steps,
                    });
                    print_json(&out);
                    Ok(Outcome::Fails)
                }
                Ok(None) => {
                    out!("none within bounds");
                    Ok(Outcome::Holds)
                }
                Err(e @ SearchError::Resource { .. }) => Err(CliError::Resource(e.to_string())),
                Err(e) => Err(input(e)),
            }
        }
    }
}

fn rule_name(j: &jstit::Justification) -> &'static str {
    use jstit::Justification::*;
    match j {
        Axiom(_) => "axiom",
        Mp(..) => "MP",
        KNec(_) => "K-necessitation",
        Rd(_) => "R_D",
        Rcs => "R_CS",
        Nec(..) => "necessitation",
    }
}

fn countermodel(
    v: &Value,
    agents: usize,
    witness: Option<String>,
    kind: Kind,
) -> Result<Outcome, CliError> {
    let f = valid_frame(v, agents)?;
    let fields: Option<Vec<String>> =
        witness.map(|w| w.split(',').map(|s| s.trim().to_string()).collect());
    let kind = match (kind, &fields) {
        (Kind::Auto, Some(fs)) if fs.len() == 4 => Kind::Stit,
        (Kind::Auto, Some(_)) => Kind::Jstit,
        (k, _) => k,
    };
    let moment = |s: &str| doc::moment_index(&f, s).map_err(CliError::from);
    let history = |s: &str| doc::parse_history(s).map_err(CliError::from);
    let mixsucc = |fields: &Option<Vec<String>>| -> Result<Option<MixsuccWitness>, CliError> {
        match fields {
            None => Ok(mixsucc_witness(&f)),
            Some(fs) if fs.len() == 4 => Ok(Some(MixsuccWitness {
                m0: moment(&fs[0])?,
                m1: moment(&fs[1])?,
                h0: history(&fs[2])?,
                h1: history(&fs[3])?,
            })),
            Some(_) => Err(input("a mixsucc witness is m0,m1,h0,h1")),
        }
    };
    let built: Option<(Built, &str, Value)> = match kind {
        Kind::Stit | Kind::Temporal => match mixsucc(&fields)? {
            None => None,
            Some(w) => {
                let b = if kind == Kind::Stit {
                    build_stit_countermodel(f.stit(), &w)
                } else {
                    build_temporal_countermodel(&f, agents, &w)
                }
                .map_err(input)?;
                let kind = if kind == Kind::Stit {
                    "stit"
                } else {
                    "temporal"
                };
                Some((b, kind, doc::mixsucc_witness_to_json(&f, &w)))
            }
        },
        Kind::Jstit => {
            let w = match &fields {
                None => regular_witness(&f)?,
                Some(fs) if fs.len() >= 4 => Some(RegWitness {
                    m0: moment(&fs[0])?,
                    m1: moment(&fs[1])?,
                    h_prime: history(&fs[2])?,
                    s: fs[3..]
                        .iter()
                        .map(|s| moment(s))
                        .collect::<Result<Bits, _>>()?,
                }),
                Some(_) => return Err(input("a reg witness is m0,m1,h',S1,S2,...")),
            };
            match w {
                None => None,
                Some(w) => {
                    let b = build_jstit_countermodel(&f, &w).map_err(input)?;
                    Some((b, "jstit", doc::reg_witness_to_json(&f, &w)))
                }
            }
        }
        Kind::Auto => match mixsucc_witness(&f) {
            Some(w) => {
                let b = build_stit_countermodel(f.stit(), &w).map_err(input)?;
                Some((b, "stit", doc::mixsucc_witness_to_json(&f, &w)))
            }
            None => match regular_witness(&f)? {
                Some(w) => {
                    let b = build_jstit_countermodel(&f, &w).map_err(input)?;
                    Some((b, "jstit", doc::reg_witness_to_json(&f, &w)))
                }
                None => None,
            },
        },
    };
    match built {
        Some((b, kind, w)) => {
            print_json(&doc::built_to_json(&b, kind, w));
            Ok(Outcome::Fails)
        }
        None => {
            out!("no witness: the frame is in the class");
            Ok(Outcome::Holds)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(1),
        Err(e @ CliError::Input(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e @ CliError::Resource(_)) => {
            eprintln!("resource bound exceeded: {e}");
            ExitCode::from(3)
        }
    }
}
