use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pomset::coherence::{calibrate, semantic_correct, CoherenceSpace};
use pomset::grammar::{example_lexicon, load_lexicon, parse};
use pomset::proofnet::{cuts, find_chordless_ae_circuit, normalize, search_counterexample, sequentialize, ProofStructure};
use pomset::rewrite::{derive_dicograph, derive_gmll, includes, Derivation};
use pomset::sequent::{check, proof_to_net, Calculus, ProofTree};
use pomset::parse_term;

#[derive(Parser)]
#[command(name = "pomset", about = "Pomset logic: dicograph terms, proof nets, sequents, grammars")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Gmll,
    GmllMix,
    Dicograph,
}

#[derive(Clone, Copy, ValueEnum)]
enum CalculusArg {
    Sp,
    Dicograph,
}

#[derive(Subcommand)]
enum Command {
    /// Correctness of a net: no chordless alternating elementary circuit.
    Check {
        net: PathBuf,
        /// Also test the interpretation for being a clique.
        #[arg(long)]
        semantic: bool,
        /// Coherence space file; defaults to $POMSET_SPACE, then calibration.
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// Derivation of `small` from `big` with the inclusion rules.
    Include { big: String, small: String },
    /// Derivation of a term from an axiom term.
    Derive {
        #[arg(long, value_enum)]
        system: System,
        target: String,
    },
    /// Cut-free form of a net.
    Normalize { net: PathBuf },
    /// Checks a sequent proof.
    ProveCheck {
        #[arg(long, value_enum)]
        calculus: CalculusArg,
        proof: PathBuf,
    },
    /// Sequent proof of a correct net.
    Sequentialize { net: PathBuf },
    /// Parses a sentence with a lexicon of partial nets.
    Parse {
        /// Lexicon file; the shipped French lexicon when absent.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long, default_value = "S")]
        target: String,
        /// Print every analysis of the words, whatever their order.
        #[arg(long)]
        any_order: bool,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Correct net with no sequent proof.
    SearchCounterexample {
        #[arg(long, default_value_t = 6)]
        axioms: usize,
    },
    /// Four-token space on which the semantics matches the criterion.
    CalibrateSpace {
        #[arg(long, default_value_t = 2)]
        max_axioms: usize,
        /// Also write the space to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type Outcome = Result<bool, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_net(path: &Path) -> Result<ProofStructure, String> {
    ProofStructure::from_json(&read(path)?).map_err(|e| e.to_string())
}

fn term(src: &str) -> Result<pomset::Term, String> {
    parse_term(src).map_err(|e| e.to_string())
}

fn load_space(flag: Option<PathBuf>) -> Result<CoherenceSpace, String> {
    match flag.or_else(|| std::env::var_os("POMSET_SPACE").map(PathBuf::from)) {
        Some(p) => CoherenceSpace::from_json(&read(&p)?).map_err(|e| e.to_string()),
        None => calibrate(2).map(|c| c.space).ok_or_else(|| "no four-token space calibrates".to_string()),
    }
}

fn print_derivation(d: &Derivation) -> Result<(), String> {
    print!("{}", d.log().map_err(|e| e.to_string())?);
    println!("{} steps", d.steps.len());
    Ok(())
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Check { net, semantic, space } => {
            let ps = read_net(&net)?;
            let circuit = find_chordless_ae_circuit(&ps);
            match &circuit {
                None => println!("correct"),
                Some(c) => println!("incorrect: {c}"),
            }
            if semantic {
                if cuts(&ps).is_empty() {
                    let s = load_space(space)?;
                    let clique = semantic_correct(&ps, &s).map_err(|e| e.to_string())?;
                    println!("semantic: {}", if clique { "clique" } else { "not a clique" });
                } else {
                    println!("semantic: skipped, net has cuts");
                }
            }
            Ok(circuit.is_none())
        }
        Command::Include { big, small } => match includes(&term(&big)?, &term(&small)?).map_err(|e| e.to_string())? {
            Some(d) => print_derivation(&d).map(|_| true),
            None => {
                println!("NOT-INCLUDED");
                Ok(false)
            }
        },
        Command::Derive { system, target } => {
            let t = term(&target)?;
            let d = match system {
                System::Gmll => derive_gmll(&t, false),
                System::GmllMix => derive_gmll(&t, true),
                System::Dicograph => derive_dicograph(&t),
            }
            .map_err(|e| e.to_string())?;
            match d {
                Some(d) => print_derivation(&d).map(|_| true),
                None => {
                    println!("NOT-DERIVABLE");
                    Ok(false)
                }
            }
        }
        Command::Normalize { net } => {
            let ps = read_net(&net)?;
            let (n, loops) = normalize(&ps).map_err(|e| e.to_string())?;
            println!("{}", n.to_json());
            println!("loops: {loops}");
            Ok(n.is_correct())
        }
        Command::ProveCheck { calculus, proof } => {
            let p = ProofTree::from_json(&read(&proof)?).map_err(|e| e.to_string())?;
            let c = match calculus {
                CalculusArg::Sp => Calculus::SpPomset,
                CalculusArg::Dicograph => Calculus::Dicograph,
            };
            match check(&p, c) {
                Ok(()) => {
                    let net = proof_to_net(&p, c).map_err(|e| e.to_string())?;
                    println!("ok");
                    println!("{}", net.to_json());
                    Ok(true)
                }
                Err(e) => {
                    println!("rejected: {e}");
                    Ok(false)
                }
            }
        }
        Command::Sequentialize { net } => {
            let ps = read_net(&net)?;
            if !ps.is_correct() {
                println!("NOT-CORRECT");
                return Ok(false);
            }
            match sequentialize(&ps).map_err(|e| e.to_string())? {
                Some(p) => {
                    println!("{}", p.to_json_pretty());
                    Ok(true)
                }
                None => {
                    println!("NO-PROOF");
                    Ok(false)
                }
            }
        }
        Command::Parse { lexicon, target, any_order, words } => {
            let lex = match lexicon {
                Some(p) => load_lexicon(&read(&p)?).map_err(|e| e.to_string())?,
                None => example_lexicon(),
            };
            let ws: Vec<&str> = words.iter().map(String::as_str).collect();
            let parses = parse(&lex, &ws, &target).map_err(|e| e.to_string())?;
            let mut any = false;
            for p in parses.iter().filter(|p| any_order || p.accepts(&ws)) {
                println!("{}", p.order.plain());
                any = true;
            }
            if !any {
                println!("NO-PARSE");
            }
            Ok(any)
        }
        Command::SearchCounterexample { axioms } => {
            if axioms != 6 {
                return Err("the search is defined for 6 axioms".into());
            }
            match search_counterexample() {
                Some(c) => {
                    println!("{}", c.net.to_json());
                    println!("tested: {}", c.tested);
                    Ok(true)
                }
                None => {
                    println!("NONE");
                    Ok(false)
                }
            }
        }
        Command::CalibrateSpace { max_axioms, out } => {
            if max_axioms == 0 || max_axioms > 3 {
                return Err("--max-axioms must be between 1 and 3".into());
            }
            match calibrate(max_axioms) {
                Some(c) => {
                    let json = c.space.to_json();
                    println!("{json}");
                    eprintln!("rejected {} spaces, checked {} structures", c.rejected, c.checked);
                    if let Some(p) = out {
                        fs::write(&p, json + "\n").map_err(|e| format!("{}: {e}", p.display()))?;
                    }
                    Ok(true)
                }
                None => {
                    println!("NONE");
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
