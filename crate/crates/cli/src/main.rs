//! `gaugestab` command-line front end. Every subcommand except `parse`
//! writes one pretty-printed JSON report to standard output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gaugestab::chsh::winning_probability;
use gaugestab::report::{ChshInfo, OptimizerInfo, TraceReport};
use gaugestab::stabilizer::greedy_select_logged;
use gaugestab::{
    classical_bias, game_to_hamiltonian, gauged_energy, optimize, parse_hamiltonian,
    quantum_bias, serialize_hamiltonian, sweep, Error, ExactOracle, GaugeAngles, Method,
    ModelSpec, OptimizerConfig, PauliSum, QuantumStrategy, Report, SweepMode, XorGameRule,
};

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  usage error (unknown flag, missing argument)
  3  input file could not be read
  4  malformed Hamiltonian file or Pauli string
  5  problem too large for the exact oracle (see --max-qubits)
  6  invalid input (bad model parameters, angles, order, rule, ...)";

#[derive(Parser, Debug)]
#[command(name = "gaugestab", version, about = "Gauged stabilizer ground-state approximation", after_help = EXIT_CODES)]
struct Cli {
    /// Largest problem the exact oracle will diagonalize.
    #[arg(long, global = true, default_value_t = gaugestab::exact::DEFAULT_MAX_QUBITS)]
    max_qubits: usize,

    /// Skip the exact reference energy in reports.
    #[arg(long, global = true)]
    no_exact: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Hamiltonian in canonical text form.
    Parse(Input),
    /// Exact ground energy.
    Exact(Input),
    /// Plain greedy stabilizer energy.
    Stab(Input),
    /// Stabilizer energy after rotating each qubit frame by fixed angles.
    Gauge {
        #[command(flatten)]
        input: Input,
        /// Comma-separated angles, e.g. `0,pi/4` or `0.3,1.2`.
        #[arg(long, allow_hyphen_values = true)]
        angles: String,
    },
    /// Qubit-by-qubit gauging with a fixed single-qubit stabilizer per step.
    Sweep {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "fixed_pi4", value_parser = ["fixed_pi4", "analytic"])]
        mode: String,
        /// Comma-separated 1-based qubit order; defaults to ascending.
        #[arg(long)]
        order: Option<String>,
    },
    /// Search the gauge angles by coordinate descent.
    Optimize {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum descent sweeps per restart.
        #[arg(long, default_value_t = 200)]
        sweeps: usize,
        /// Stop once a sweep improves the energy by less than this.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Classical and quantum values of a two-player XOR game.
    Chsh {
        /// Rule table `f(0,0) f(0,1) f(1,0) f(1,1)`.
        #[arg(long, default_value = "0001")]
        rule: String,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Built-in model: ising, chsh, h2_bound, h2_asym, h2_mid.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    model: Option<String>,
    /// Hamiltonian text file (`coeff PAULIS` per line, `#` comments).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Ising: number of qubits.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Ising: ZZ coupling.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    j: f64,
    /// Ising: X field.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    gx: f64,
    /// Ising: Z field.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    gz: f64,
    /// Ising: 1-based edges such as `1-2,2-3`; defaults to the open chain.
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(..) => 3,
            CliError::Core(Error::Parse { .. } | Error::IllegalChar { .. } | Error::EmptyPauli) => 4,
            CliError::Core(Error::TooManyQubits { .. }) => 5,
            CliError::Core(_) => 6,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_edges(text: &str) -> CliResult<Vec<(usize, usize)>> {
    let bad = || Error::InvalidInput(format!("malformed edge list {text:?}"));
    text.split(',')
        .map(|pair| {
            let (a, b) = pair.trim().split_once('-').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok((a, b))
        })
        .collect()
}

fn parse_order(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|q| {
            q.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("malformed qubit order {text:?}")).into())
        })
        .collect()
}

impl Input {
    fn load(&self) -> CliResult<PauliSum> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
            return Ok(parse_hamiltonian(&text)?);
        }
        let kind = self.model.as_deref().unwrap_or_default();
        let spec = match kind {
            "ising" => ModelSpec::Ising {
                n: self.n,
                edges: match &self.edges {
                    Some(e) => parse_edges(e)?,
                    None => (1..self.n).map(|i| (i, i + 1)).collect(),
                },
                j: self.j,
                g_x: self.gx,
                g_z: self.gz,
            },
            other => other.parse()?,
        };
        Ok(spec.build()?)
    }

    fn echo(&self, report: Report) -> Report {
        let mut report = match (&self.file, &self.model) {
            (Some(path), _) => report.with_config("file", path.display()),
            (None, Some(m)) => report.with_config("model", m),
            (None, None) => report,
        };
        if self.model.as_deref() == Some("ising") {
            report = report
                .with_config("n", self.n)
                .with_config("j", self.j)
                .with_config("gx", self.gx)
                .with_config("gz", self.gz);
            if let Some(e) = &self.edges {
                report = report.with_config("edges", e);
            }
        }
        report
    }
}

struct Context {
    oracle: ExactOracle,
    no_exact: bool,
}

impl Context {
    /// Attach the exact energy when requested and affordable.
    fn finish(&self, h: &PauliSum, report: Report) -> CliResult<Report> {
        let report = report
            .with_config("max_qubits", self.oracle.max_qubits)
            .with_config("no_exact", self.no_exact);
        if self.no_exact || h.num_qubits() > self.oracle.max_qubits {
            return Ok(report);
        }
        let exact = self.oracle.ground_energy(h)?;
        Ok(report.with_exact(exact))
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let ctx = Context {
        oracle: ExactOracle::new(cli.max_qubits),
        no_exact: cli.no_exact,
    };
    let report = match cli.command {
        Command::Parse(input) => return Ok(serialize_hamiltonian(&input.load()?)),
        Command::Exact(input) => {
            let h = input.load()?;
            let energy = ctx.oracle.ground_energy(&h)?;
            let r = Report::new(Method::Exact, h.num_qubits(), energy)
                .with_config("max_qubits", ctx.oracle.max_qubits);
            input.echo(r)
        }
        Command::Stab(input) => {
            let h = input.load()?;
            let sel = greedy_select_logged(&h, h.num_qubits());
            let energy = sel.set.energy(&h)?;
            let r = Report::new(Method::Stab, h.num_qubits(), energy)
                .with_stabilizers(&sel.set)
                .with_conflicts(&sel.conflicts);
            ctx.finish(&h, input.echo(r))?
        }
        Command::Gauge { input, angles } => {
            let h = input.load()?;
            let g = GaugeAngles::parse_list(&angles)?;
            let ge = gauged_energy(&h, &g, h.num_qubits())?;
            let r = Report::new(Method::GaugeFixed, h.num_qubits(), ge.energy)
                .with_angles(&g)
                .with_stabilizers(&ge.stabilizers)
                .with_conflicts(&ge.conflicts)
                .with_config("angles", &angles);
            ctx.finish(&h, input.echo(r))?
        }
        Command::Sweep { input, mode, order } => {
            let h = input.load()?;
            let sweep_mode: SweepMode = mode.parse()?;
            let order_list = match &order {
                Some(o) => parse_order(o)?,
                None => (1..=h.num_qubits()).collect(),
            };
            let trace = sweep(&h, sweep_mode, &order_list)?;
            let method = match sweep_mode {
                SweepMode::FixedPi4 => Method::SweepPi4,
                SweepMode::Analytic => Method::SweepAnalytic,
            };
            let mut r = Report::new(method, h.num_qubits(), trace.final_energy)
                .with_angles(&trace.angles())
                .with_stabilizers(&trace.stabilizers())
                .with_config("mode", &mode);
            if let Some(o) = &order {
                r = r.with_config("order", o);
            }
            r.trace = Some(TraceReport::from(&trace));
            ctx.finish(&h, input.echo(r))?
        }
        Command::Optimize {
            input,
            restarts,
            seed,
            sweeps,
            tol,
        } => {
            let h = input.load()?;
            let cfg = OptimizerConfig {
                restarts,
                seed,
                max_sweeps: sweeps,
                energy_tol: tol,
                ..OptimizerConfig::default()
            };
            let res = optimize(&h, &cfg)?;
            let mut r = Report::new(Method::Optimize, h.num_qubits(), res.energy)
                .with_angles(&res.angles)
                .with_stabilizers(&res.stabilizers)
                .with_config("restarts", restarts)
                .with_config("seed", seed)
                .with_config("sweeps", sweeps)
                .with_config("tol", tol);
            r.optimizer = Some(OptimizerInfo {
                converged: res.converged,
                restart_index: res.restart_index,
                sweeps: res.sweeps,
            });
            ctx.finish(&h, input.echo(r))?
        }
        Command::Chsh { rule } => {
            let game: XorGameRule = rule.parse()?;
            let h = game_to_hamiltonian(&game);
            let beta_c = classical_bias(&game);
            let beta_c_value = *beta_c.numer() as f64 / *beta_c.denom() as f64;
            let beta_q = quantum_bias(&game, &QuantumStrategy::chsh_optimal())?;
            let energy = ctx.oracle.ground_energy(&h)?;
            let mut r = Report::new(Method::Chsh, h.num_qubits(), energy).with_config("rule", &rule);
            r.chsh = Some(ChshInfo {
                rule: game.to_string(),
                classical_bias: beta_c.to_string(),
                classical_bias_value: beta_c_value,
                classical_win_probability: winning_probability(beta_c_value)?,
                quantum_bias: beta_q,
                quantum_win_probability: winning_probability(beta_q)?,
                hamiltonian: serialize_hamiltonian(&h).lines().map(str::to_owned).collect(),
            });
            r.with_config("max_qubits", ctx.oracle.max_qubits)
        }
    };
    let mut json = serde_json::to_string_pretty(&report).expect("reports serialize");
    json.push('\n');
    Ok(json)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
