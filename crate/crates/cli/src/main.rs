use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qutrit_synth::catalytic;
use qutrit_synth::circuit::{Base, Circuit};
use qutrit_synth::cyclotomic::RingTag;
use qutrit_synth::io::{circuit_from_json, circuit_to_json, matrix_from_json, matrix_to_json};
use qutrit_synth::linalg::AnyMatrix;
use qutrit_synth::pipeline::{synth_any, verify_catalytic, verify_direct, Verdict};
use qutrit_synth::random::random_unitary;
use qutrit_synth::Error;

#[derive(Parser)]
#[command(author, version, about = "Exact synthesis of qutrit unitaries into multiply-controlled gates")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    Omega,
    Zeta,
}

impl From<Ring> for RingTag {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Omega => RingTag::Omega,
            Ring::Zeta => RingTag::Zeta,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a unitary into a circuit.
    Synth {
        #[arg(long, value_enum)]
        ring: Ring,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a circuit against a matrix exactly.
    Verify {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        /// Check the catalyst equation against a zeta-ring matrix.
        #[arg(long)]
        catalytic: bool,
    },
    /// Write the catalytic embedding of a zeta-ring unitary.
    Embed {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a random unitary built from generator words.
    Random {
        #[arg(long, value_enum)]
        ring: Ring,
        #[arg(long)]
        wires: usize,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print gate counts for a circuit.
    Stats {
        #[arg(long)]
        circuit: PathBuf,
        /// Also print one gate per line.
        #[arg(long)]
        text: bool,
    },
}

enum Failure {
    Mismatch(String),
    Io(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Io(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(s) | Failure::Io(s) | Failure::Precondition(s) => s,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Io(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_err(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse(msg) => Failure::Io(format!("{}: {msg}", path.display())),
        other => Failure::from(other),
    }
}

fn load_matrix(path: &Path) -> Result<AnyMatrix, Failure> {
    matrix_from_json(&read(path)?).map_err(|e| parse_err(path, e))
}

fn load_circuit(path: &Path) -> Result<Circuit, Failure> {
    circuit_from_json(&read(path)?).map_err(|e| parse_err(path, e))
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Synth {
            ring,
            input,
            out,
            report,
        } => {
            let m = load_matrix(&input)?;
            if m.ring() != RingTag::from(ring) {
                return Err(Failure::Precondition(format!(
                    "{} holds a {} matrix, not {}",
                    input.display(),
                    m.ring(),
                    RingTag::from(ring)
                )));
            }
            let (circuit, rep) = synth_any(&m)?;
            write(&out, &circuit_to_json(&circuit))?;
            let json = serde_json::to_string_pretty(&rep).expect("serializable");
            match report {
                Some(path) => write(&path, &json)?,
                None => println!("{json}"),
            }
        }
        Command::Verify {
            circuit,
            matrix,
            catalytic,
        } => {
            let c = load_circuit(&circuit)?;
            let m = load_matrix(&matrix)?;
            let verdict = if catalytic {
                verify_catalytic(&c, m.as_zeta()?)?
            } else {
                verify_direct(&c, &m)?
            };
            match verdict {
                Verdict::Match => println!("ok"),
                Verdict::Mismatch(detail) => return Err(Failure::Mismatch(detail)),
            }
        }
        Command::Embed { input, out } => {
            let m = load_matrix(&input)?;
            let emb = catalytic::embed(m.as_zeta()?)?;
            write(&out, &matrix_to_json(&AnyMatrix::Omega(emb.phi)))?;
        }
        Command::Random {
            ring,
            wires,
            length,
            seed,
            out,
        } => {
            if wires == 0 {
                return Err(Failure::Precondition("need at least one wire".into()));
            }
            write(&out, &matrix_to_json(&random_unitary(ring.into(), wires, length, seed)))?;
        }
        Command::Stats { circuit, text } => {
            let c = load_circuit(&circuit)?;
            print_stats(&c);
            if text {
                print!("{}", c.to_text());
            }
        }
    }
    Ok(())
}

fn print_stats(c: &Circuit) {
    let mut by_controls: BTreeMap<usize, usize> = BTreeMap::new();
    let mut by_base: BTreeMap<String, usize> = BTreeMap::new();
    for g in &c.gates {
        *by_controls.entry(g.controls().len()).or_default() += 1;
        let name = match g.base() {
            Base::Word(w) => w.to_string(),
            Base::Omega(_) | Base::Zeta(_) => "<matrix>".to_string(),
        };
        *by_base.entry(name).or_default() += 1;
    }
    println!("wires            {}", c.wires);
    println!("ancillas         {}", c.ancillas);
    println!("ring             {}", c.ring());
    println!("gates            {}", c.gates.len());
    println!("controlled gates {}", c.controlled_gate_count());
    println!("all |2> controls {}", c.gates.iter().all(|g| g.all_controls_two()));
    for (k, n) in &by_controls {
        println!("  {k} controls: {n}");
    }
    for (b, n) in &by_base {
        println!("  {b}: {n}");
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Mismatch(d) => eprintln!("mismatch: {d}"),
                _ => eprintln!("error: {}", f.message()),
            }
            ExitCode::from(f.code())
        }
    }
}
