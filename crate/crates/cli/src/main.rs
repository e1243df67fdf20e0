use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pasep_core::analysis::{
    format, partition_function, pasep_system, perm_system, pt_system, simulate, stationary_exact, ChainKind,
    ChainState, TransitionSystem,
};
use pasep_core::involution::{invol_perm, invol_tableau};
use pasep_core::pasep::PasepParams;
use pasep_core::perm::{phi, phi_inverse, Permutation};
use pasep_core::pt_chain::pt_transitions;
use pasep_core::tableaux::{enumerate_tableaux, f_lambda, shape_from_state, PasepState, PermutationTableau};
use pasep_core::verify::Suite;
use pasep_core::Rational;

#[derive(Parser)]
#[command(name = "pasep")]
#[command(about = "Exact PASEP, PT chain and permutation tableaux toolkit")]
#[command(version)]
struct Cli {
    /// Write output here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(clap::Args)]
struct Params {
    /// q as an exact rational, e.g. 1/2
    #[arg(long, default_value = "1")]
    q: Rational,

    /// α as an exact rational
    #[arg(long, default_value = "1")]
    alpha: Rational,

    /// β as an exact rational
    #[arg(long, default_value = "1")]
    beta: Rational,
}

impl Params {
    fn point(&self) -> Result<PasepParams, pasep_core::Error> {
        let p = PasepParams::new(self.q.clone(), self.alpha.clone(), self.beta.clone());
        p.validate()?;
        Ok(p)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the tableaux of half-perimeter N+1 with their PASEP word and weight
    Enumerate {
        /// Number of sites N
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },

    /// The partition function Z_N
    Zn {
        #[arg(long)]
        n: usize,
    },

    /// The generating function F_λ of the shape of a PASEP word
    Flambda {
        /// Word over 0/1 or ./*
        #[arg(long)]
        state: PasepState,
    },

    /// Exact stationary distribution
    Stationary {
        #[arg(long, default_value = "pasep")]
        chain: ChainKind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },

    /// Empirical occupancy frequencies of a seeded walk
    Simulate {
        #[arg(long, default_value = "pasep")]
        chain: ChainKind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },

    /// State diagram as Graphviz DOT or a JSON move list
    Diagram {
        #[arg(long, default_value = "pasep")]
        chain: ChainKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },

    /// Φ of a tableau given as JSON, or Φ⁻¹ of a permutation
    Phi {
        /// Tableau file, e.g. {"shape":[1],"rows":[[1]]}
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        tableau: Option<PathBuf>,
        /// Permutation such as 7,4,8,3,6,2,1,5
        #[arg(long)]
        perm: Option<Permutation>,
    },

    /// The involution of a permutation or of a tableau given as JSON
    Invol {
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        perm: Option<Permutation>,
        #[arg(long)]
        tableau: Option<PathBuf>,
    },

    /// Run a verification suite; exits 1 on any violation
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// What a command produced, and whether it counts as a failure.
struct Output {
    text: String,
    violations: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, violations: false }
    }
}

fn read_tableau(path: &PathBuf) -> Result<PermutationTableau, Box<dyn Error>> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn unsupported(command: &str, format: Format) -> Box<dyn Error> {
    format!("{command} does not support --format {format:?}").to_lowercase().into()
}

fn stationary_output<S: ChainState>(sys: &TransitionSystem<S>, params: &PasepParams, fmt: Format) -> Result<String, Box<dyn Error>> {
    let law = stationary_exact(sys, params)?;
    match fmt {
        Format::Csv => Ok(format::distribution_csv(sys, &law)),
        Format::Json => Ok(pretty(&format::distribution_json(sys, &law))),
        other => Err(unsupported("stationary", other)),
    }
}

fn simulate_output<S: ChainState>(
    sys: &TransitionSystem<S>,
    params: &PasepParams,
    seed: u64,
    steps: u64,
    fmt: Format,
) -> Result<String, Box<dyn Error>> {
    let freq = simulate(sys, params, seed, steps)?;
    match fmt {
        Format::Csv => {
            let mut out = String::from("state,frequency\n");
            for (s, f) in sys.states().iter().zip(freq.probs()) {
                let name = s.to_string();
                let name = if name.contains(',') { format!("\"{name}\"") } else { name };
                out.push_str(&format!("{name},{f}\n"));
            }
            Ok(out)
        }
        Format::Json => Ok(pretty(&format::frequencies_json(sys, &freq))),
        other => Err(unsupported("simulate", other)),
    }
}

fn diagram_output<S: ChainState>(sys: &TransitionSystem<S>, name: &str, fmt: Format) -> Result<String, Box<dyn Error>> {
    match fmt {
        Format::Dot => Ok(format::to_dot(sys, name)),
        Format::Json => {
            let states: Vec<Value> = sys
                .states()
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let moves: Vec<Value> = sys
                        .edges(i)
                        .iter()
                        .map(|e| json!({"target": sys.states()[e.to].to_string(), "rate": e.kind.label()}))
                        .collect();
                    json!({"state": s.to_string(), "projection": s.word().to_string(), "moves": moves})
                })
                .collect();
            Ok(pretty(&Value::Array(states)))
        }
        other => Err(unsupported("diagram", other)),
    }
}

fn pt_move_list(n: usize) -> Result<String, Box<dyn Error>> {
    let states: Vec<Value> = enumerate_tableaux(n + 1)
        .iter()
        .map(|t| {
            Ok(json!({
                "state": t,
                "projection": t.project()?.to_string(),
                "moves": pt_transitions(t),
            }))
        })
        .collect::<Result<_, pasep_core::Error>>()?;
    Ok(pretty(&Value::Array(states)))
}

fn run(cli: &Cli) -> Result<Output, Box<dyn Error>> {
    let need_sites = |n: usize| -> Result<(), Box<dyn Error>> {
        if n == 0 {
            Err("--n must be at least 1".into())
        } else {
            Ok(())
        }
    };
    let text = match &cli.command {
        Command::Enumerate { n, format } => {
            need_sites(*n)?;
            let tableaux = enumerate_tableaux(n + 1);
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for t in &tableaux {
                        out.push_str(&format!("{}\t{}\t{}\n", t, t.project()?, t.weight().to_poly()));
                    }
                    out
                }
                Format::Json => {
                    let items: Vec<Value> = tableaux
                        .iter()
                        .map(|t| {
                            let stats = t.stats();
                            Ok(json!({
                                "tableau": t,
                                "state": t.project()?.to_string(),
                                "rank": stats.rank,
                                "f": stats.f,
                                "u": stats.u,
                                "weight": t.weight().to_poly().to_string(),
                            }))
                        })
                        .collect::<Result<_, pasep_core::Error>>()?;
                    pretty(&Value::Array(items))
                }
                other => return Err(unsupported("enumerate", *other)),
            }
        }
        Command::Zn { n } => format!("{}\n", partition_function(*n)?),
        Command::Flambda { state } => format!("{}\n", f_lambda(&shape_from_state(state))),
        Command::Stationary { chain, n, params, format } => {
            need_sites(*n)?;
            let p = params.point()?;
            match chain {
                ChainKind::Pasep => stationary_output(&pasep_system(*n)?, &p, *format)?,
                ChainKind::Pt => stationary_output(&pt_system(*n)?, &p, *format)?,
                ChainKind::Perm => stationary_output(&perm_system(*n)?, &p, *format)?,
            }
        }
        Command::Simulate { chain, n, params, steps, seed, format } => {
            need_sites(*n)?;
            let p = params.point()?;
            match chain {
                ChainKind::Pasep => simulate_output(&pasep_system(*n)?, &p, *seed, *steps, *format)?,
                ChainKind::Pt => simulate_output(&pt_system(*n)?, &p, *seed, *steps, *format)?,
                ChainKind::Perm => simulate_output(&perm_system(*n)?, &p, *seed, *steps, *format)?,
            }
        }
        Command::Diagram { chain, n, format } => {
            need_sites(*n)?;
            let name = format!("{chain} N={n}");
            match (chain, format) {
                (ChainKind::Pt, Format::Json) => pt_move_list(*n)?,
                (ChainKind::Pasep, _) => diagram_output(&pasep_system(*n)?, &name, *format)?,
                (ChainKind::Pt, _) => diagram_output(&pt_system(*n)?, &name, *format)?,
                (ChainKind::Perm, _) => diagram_output(&perm_system(*n)?, &name, *format)?,
            }
        }
        Command::Phi { tableau, perm } => match (tableau, perm) {
            (Some(path), _) => format!("{}\n", phi(&read_tableau(path)?)),
            (None, Some(p)) => format!("{}\n", serde_json::to_string(&phi_inverse(p))?),
            (None, None) => unreachable!("clap requires one of the two"),
        },
        Command::Invol { perm, tableau } => match (perm, tableau) {
            (Some(p), _) => format!("{}\n", invol_perm(p)),
            (None, Some(path)) => format!("{}\n", serde_json::to_string(&invol_tableau(&read_tableau(path)?))?),
            (None, None) => unreachable!("clap requires one of the two"),
        },
        Command::Verify { suite, n_max } => {
            if *n_max == 0 {
                return Err("--n-max must be at least 1".into());
            }
            let report = suite.run(*n_max)?;
            return Ok(Output { text: serde_json::to_string_pretty(&report)? + "\n", violations: !report.passed() });
        }
    };
    Ok(text.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", out.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if out.violations {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
