use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dihedral_walk::cli::{self, exit, parse_key_values, OutputFormat, RunConfig, RunRecord, Scale};
use dihedral_walk::WalkError;

/// Three-state quantum walk on dihedral Cayley graphs.
#[derive(Parser)]
#[command(name = "dqw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Position distribution after `steps` steps.
    Distribution(RunArgs),
    /// Running time average at one vertex, plus both long-time limits.
    TimeAverage(RunArgs),
    /// Eigenvalues of every Fourier block.
    Spectrum(RunArgs),
    /// Oracle-equivalence and invariant checks.
    Verify {
        #[arg(long, value_enum, default_value_t = ScaleArg::Quick)]
        scale: ScaleArg,
    },
    /// Run a named figure preset.
    Preset {
        /// Preset name; `--list` shows all.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

/// Every flag mirrors a config-file key; flags override the file.
#[derive(Args)]
struct RunArgs {
    /// Flat `key = value` config file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<String>,
    /// grover | dft | custom
    #[arg(long)]
    coin: Option<String>,
    /// Nine comma-separated complex entries, row-major.
    #[arg(long)]
    coin_matrix: Option<String>,
    /// Three comma-separated complex amplitudes, e.g. `0.6,0+0.8i,0`.
    #[arg(long)]
    initial_coin: Option<String>,
    /// `s:t:amp` terms separated by `;`.
    #[arg(long)]
    initial_position: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    #[arg(long)]
    horizon: Option<String>,
    #[arg(long)]
    vertex: Option<String>,
    /// direct | fourier | oracle
    #[arg(long)]
    backend: Option<String>,
    #[arg(long)]
    output: Option<String>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
}

impl RunArgs {
    fn resolve(&self) -> Result<RunConfig, WalkError> {
        let mut map = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| WalkError::Config(format!("cannot read {}: {e}", path.display())))?;
                parse_key_values(&text)?
            }
            None => BTreeMap::new(),
        };
        let flags = [
            ("n", &self.n),
            ("coin", &self.coin),
            ("coin_matrix", &self.coin_matrix),
            ("initial_coin", &self.initial_coin),
            ("initial_position", &self.initial_position),
            ("steps", &self.steps),
            ("horizon", &self.horizon),
            ("vertex", &self.vertex),
            ("backend", &self.backend),
            ("output", &self.output),
            ("format", &self.format),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                map.insert(key.to_string(), v.clone());
            }
        }
        if self.coin.as_deref().is_some_and(|c| c != "custom") && self.coin_matrix.is_none() {
            map.remove("coin_matrix");
        }
        RunConfig::from_map(&map)
    }
}

fn emit(record: &RunRecord, cfg: &RunConfig) -> Result<(), WalkError> {
    match &cfg.output {
        Some(path) => {
            for f in record.write_to(path, cfg.format)? {
                eprintln!("wrote {}", f.display());
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            match cfg.format {
                OutputFormat::Csv => record.write_csv(&mut out)?,
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(record)?)?,
            }
            if let (Some(l), OutputFormat::Csv) = (record.limits(), cfg.format) {
                eprintln!("{}", serde_json::to_string(&l)?);
            }
        }
    }
    Ok(())
}

fn run_with(args: &RunArgs, command: fn(&RunConfig) -> dihedral_walk::Result<RunRecord>) -> Result<(), WalkError> {
    let cfg = args.resolve()?;
    emit(&command(&cfg)?, &cfg)
}

fn exit_code(e: &WalkError) -> u8 {
    match e {
        WalkError::Io(_) | WalkError::Json(_) | WalkError::Eigensolver { .. } => 1,
        _ => exit::CONFIG_ERROR as u8,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Distribution(a) => run_with(a, cli::cmd_distribution),
        Command::TimeAverage(a) => run_with(a, cli::cmd_time_average),
        Command::Spectrum(a) => run_with(a, cli::cmd_spectrum),
        Command::Verify { scale } => {
            let scale = match scale {
                ScaleArg::Quick => Scale::Quick,
                ScaleArg::Full => Scale::Full,
            };
            let report = cli::cmd_verify(scale);
            print!("{}", report.render());
            return if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(exit::VERIFICATION_FAILURE as u8)
            };
        }
        Command::Preset { list: true, .. } => {
            cli::PRESETS.iter().for_each(|p| println!("{p}"));
            Ok(())
        }
        Command::Preset { name, out_dir, .. } => {
            let name = name.as_deref().expect("clap enforces a name without --list");
            cli::run_preset(name, out_dir).map(|files| files.iter().for_each(|f| println!("{}", f.display())))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dqw: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
