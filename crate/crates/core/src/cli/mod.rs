//! Experiment runner: configs, commands, presets and the verify suite.

pub mod commands;
pub mod config;
pub mod presets;
pub mod record;
pub mod verify;

pub use commands::{cmd_distribution, cmd_spectrum, cmd_time_average, VERSION};
pub use config::{parse_key_values, Backend, CoinChoice, OutputFormat, RunConfig};
pub use presets::{compute_preset, preset_runs, run_preset, PresetRun, RunKind, PRESETS};
pub use record::{LimitSummary, RunRecord, RunResults};
pub use verify::{cmd_verify, verify_with_step, Scale, VerifyReport};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const CONFIG_ERROR: i32 = 2;
    pub const VERIFICATION_FAILURE: i32 = 3;
}
