//! Run an experiment from an archived key=value config and write CSV.

use dihedral_walk::cli::{cmd_time_average, parse_key_values, RunConfig};

/// Grover coin with an extra phase `i` on the `|1⟩` row.
const CONFIG: &str = "
n = 12
coin = custom
coin_matrix = -0.3333333333333333, 0.6666666666666666, 0.6666666666666666, \
  0.6666666666666666i, -0.3333333333333333i, 0.6666666666666666i, \
  0.6666666666666666, 0.6666666666666666, -0.3333333333333333
initial_coin = 0.6, 0+0.8i, 0
initial_position = 1:0:1
horizon = 2000
backend = fourier
";

fn main() -> dihedral_walk::Result<()> {
    let cfg = RunConfig::from_map(&parse_key_values(CONFIG)?)?;
    let record = cmd_time_average(&cfg)?;
    let path = std::env::temp_dir().join("dqw_config_run.csv");
    for f in record.write_to(&path, cfg.format)? {
        println!("wrote {}", f.display());
    }
    println!("{:?}", record.limits().expect("time series"));
    Ok(())
}
