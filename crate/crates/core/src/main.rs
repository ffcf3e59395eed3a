use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcorr::dynamics::{self, DEFAULT_SAMPLES};
use qcorr::report;
use qcorr::states::density_to_bd;
use qcorr::verify::{self, VerifyConfig};
use qcorr::{ChannelKind, ChannelSpec, CorrelationVector, Error, Norm, XState};

#[derive(Parser)]
#[command(name = "qcorr", version, about = "Geometric discord and entanglement under local noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a trajectory and write the CSV plus an events sidecar
    Simulate(RunArgs),
    /// Discord against entanglement, with the value recovered by the relations
    Relate(RunArgs),
    /// Closed forms against the numerical oracles
    Verify(VerifyArgs),
    /// Discord-versus-entanglement curve data
    Curve(RunArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormChoice {
    Hs,
    Trace,
    Both,
}

impl NormChoice {
    fn norms(self) -> Vec<Norm> {
        match self {
            NormChoice::Hs => vec![Norm::HilbertSchmidt],
            NormChoice::Trace => vec![Norm::Trace],
            NormChoice::Both => vec![Norm::HilbertSchmidt, Norm::Trace],
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// pd, bf, bpf, pf or depol; `pd:0.3` also sets the end of the grid
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelSpec,
    /// Correlation triple r1,r2,r3
    #[arg(long, allow_hyphen_values = true, conflicts_with = "xstate", required_unless_present = "xstate")]
    state: Option<String>,
    /// X state as {"diag":[a,b,c,d],"e":[re,im],"f":[re,im]}
    #[arg(long)]
    xstate: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "both")]
    norm: NormChoice,
    #[arg(long, default_value_t = 1.0)]
    pmax: f64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = qcorr::sampling::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 9)]
    grid: usize,
    /// Number of entangled X states in the trace-entanglement checks
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Extra X state to include in the trace-entanglement checks
    #[arg(long)]
    xstate: Option<PathBuf>,
    /// Write the report here as well as to standard output
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    mutate: bool,
}

enum Failure {
    Lib(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonPhysical { .. } | Error::InvalidState(_) => 3,
        Error::EmptyWindow | Error::NotEntangled => 4,
        Error::Io(_) | Error::NumericalFailure(_) => 1,
        _ => 2,
    }
}

fn parse_channel(s: &str) -> Result<ChannelSpec, String> {
    s.parse::<ChannelSpec>().map_err(|e| match e {
        Error::Config(msg) => msg,
        other => other.to_string(),
    })
}

fn parse_triple(s: &str) -> Result<CorrelationVector, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::Config(format!("--state needs three comma-separated numbers, got {s:?}")));
    }
    let mut r = [0.0; 3];
    for (slot, part) in r.iter_mut().zip(&parts) {
        *slot = part.parse().map_err(|_| Error::Config(format!("--state: {part:?} is not a number")))?;
    }
    CorrelationVector::from_array(r)
}

fn read_xstate(path: &Path) -> Result<XState, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("--xstate {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let msg = e.to_string();
        if msg.starts_with("NonPhysical") {
            Error::InvalidState(msg.trim_start_matches("NonPhysical: ").to_string())
        } else {
            Error::Config(format!("--xstate {}: {msg}", path.display()))
        }
    })
}

enum Input {
    Bell(CorrelationVector),
    X(XState),
}

fn read_input(args: &RunArgs) -> Result<Input, Error> {
    match (&args.state, &args.xstate) {
        (Some(s), _) => Ok(Input::Bell(parse_triple(s)?)),
        (None, Some(path)) => {
            let x = read_xstate(path)?;
            // Bell-diagonal X states take the analytic route
            if x.is_bell_diagonal() {
                Ok(Input::Bell(density_to_bd(&x.to_density())?))
            } else {
                Ok(Input::X(x))
            }
        }
        (None, None) => Err(Error::Config("one of --state or --xstate is required".into())),
    }
}

impl RunArgs {
    fn kind(&self) -> ChannelKind {
        self.channel.kind
    }

    fn p_max(&self) -> f64 {
        self.channel.p.unwrap_or(self.pmax)
    }
}

fn check_run_args(args: &RunArgs) -> Result<(), Error> {
    if !(args.p_max() > 0.0 && args.p_max() <= 1.0) {
        return Err(Error::Config(format!("end of the parameter grid must lie in (0, 1], got {}", args.p_max())));
    }
    if args.samples < 2 {
        return Err(Error::Config(format!("--samples must be at least 2, got {}", args.samples)));
    }
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    File::create(path).map(BufWriter::new).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn events_path(out: &Path) -> PathBuf {
    out.with_extension("events.json")
}

fn fmt_list(ps: &[f64]) -> String {
    ps.iter().map(|p| format!("{p:.6}")).collect::<Vec<_>>().join(" ")
}

fn simulate(args: &RunArgs) -> Result<(), Failure> {
    check_run_args(args)?;
    let input = read_input(args)?;
    let out = args.out.clone().unwrap_or_else(|| PathBuf::from("trajectory.csv"));
    let mut stdout = io::stdout().lock();
    match input {
        Input::Bell(r0) => {
            let traj = dynamics::run_trajectory(args.kind(), &r0, args.p_max(), args.samples)?;
            report::write_trajectory_csv(&traj, create(&out)?)?;
            let events = events_path(&out);
            report::write_events_json(&traj, create(&events)?)?;
            for norm in args.norm.norms() {
                writeln!(stdout, "{norm} sudden_changes: {}", fmt_list(&traj.sudden_changes(norm)))?;
                let death = traj.sudden_death(norm).map_or_else(|| "none".to_string(), |p| format!("{p:.6}"));
                writeln!(stdout, "{norm} sudden_death: {death}")?;
            }
            writeln!(stdout, "wrote {} and {}", out.display(), events.display())?;
        }
        Input::X(x0) => {
            let traj = dynamics::run_x_trajectory(args.kind(), &x0, args.p_max(), args.samples)?;
            report::write_x_trajectory_csv(&traj, create(&out)?)?;
            let death = traj.sudden_death.map_or_else(|| "none".to_string(), |p| format!("{p:.6}"));
            writeln!(stdout, "trace sudden_death: {death}")?;
            writeln!(stdout, "wrote {}", out.display())?;
        }
    }
    Ok(())
}

fn bell_input(args: &RunArgs, command: &str) -> Result<CorrelationVector, Error> {
    match read_input(args)? {
        Input::Bell(r) => Ok(r),
        Input::X(_) => Err(Error::Config(format!("{command} needs a Bell-diagonal state"))),
    }
}

fn relate(args: &RunArgs) -> Result<(), Failure> {
    check_run_args(args)?;
    let r0 = bell_input(args, "relate")?;
    let traj = dynamics::run_trajectory(args.kind(), &r0, args.p_max(), args.samples)?;
    let mut rows = Vec::new();
    let mut stdout = io::stdout().lock();
    for norm in args.norm.norms() {
        let curve = dynamics::d_vs_e_curve(&traj, norm)?;
        writeln!(stdout, "{norm} kinks: {}", fmt_list(&curve.kinks))?;
        rows.extend(report::relation_rows(&traj, norm)?);
    }
    let out = args.out.clone().unwrap_or_else(|| PathBuf::from("relation.csv"));
    report::write_relation_csv(&rows, create(&out)?)?;
    writeln!(stdout, "wrote {}", out.display())?;
    Ok(())
}

fn curve(args: &RunArgs) -> Result<(), Failure> {
    check_run_args(args)?;
    let r0 = bell_input(args, "curve")?;
    let traj = dynamics::run_trajectory(args.kind(), &r0, args.p_max(), args.samples)?;
    let curves =
        args.norm.norms().into_iter().map(|norm| dynamics::d_vs_e_curve(&traj, norm)).collect::<Result<Vec<_>, _>>()?;
    let mut stdout = io::stdout().lock();
    for c in &curves {
        writeln!(stdout, "{} kinks: {}", c.norm, fmt_list(&c.kinks))?;
    }
    let out = args.out.clone().unwrap_or_else(|| PathBuf::from("curve.csv"));
    report::write_curve_csv(&curves, create(&out)?)?;
    writeln!(stdout, "wrote {}", out.display())?;
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.grid < 2 {
        return Err(Error::Config(format!("--grid must be at least 2, got {}", args.grid)).into());
    }
    let config = VerifyConfig {
        seed: args.seed,
        grid: args.grid,
        x_states: args.samples,
        extra_x_state: args.xstate.as_deref().map(read_xstate).transpose()?,
        mutate: args.mutate,
    };
    let report = verify::run(&config)?;
    let text = serde_json::to_string_pretty(&report).map_err(Error::from)?;
    if let Some(path) = &args.out {
        let mut f = create(path)?;
        writeln!(f, "{text}")?;
        f.flush()?;
    }
    writeln!(io::stdout().lock(), "{text}")?;
    if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
        let state = serde_json::to_string(&bad.worst_case_state).map_err(Error::from)?;
        return Err(Failure::Verify(format!(
            "VerifyFailed: {} deviation {:e} exceeds {:e} at {state}",
            bad.measure, bad.max_abs_deviation, bad.tolerance
        )));
    }
    Ok(())
}

fn configure_threads() -> Result<(), Error> {
    if let Ok(value) = std::env::var("QCORR_THREADS") {
        let n: usize = value
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Config(format!("QCORR_THREADS must be a positive integer, got {value:?}")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap spreads some messages over several lines; keep one
            let rendered = e.render().to_string();
            let message: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("ConfigError: {}", message.join(" ").trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let result = configure_threads().map_err(Failure::from).and_then(|()| match &cli.command {
        Command::Simulate(args) => simulate(args),
        Command::Relate(args) => relate(args),
        Command::Verify(args) => run_verify(args),
        Command::Curve(args) => curve(args),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("{e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(5)
        }
    }
}
