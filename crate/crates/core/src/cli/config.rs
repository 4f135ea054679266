//! Run configuration: flat `key=value` files merged with command-line
//! overrides.
//!
//! Recognised keys:
//!
//! | key                | value                                                 |
//! |--------------------|-------------------------------------------------------|
//! | `n`                | polygon order, `>= 3`                                 |
//! | `coin`             | `grover`, `dft` or `custom`                           |
//! | `coin_matrix`      | nine comma-separated complex entries, row-major       |
//! | `initial_coin`     | three comma-separated complex amplitudes              |
//! | `initial_position` | `;`-separated `s:t:amplitude` terms (default `0:0:1`) |
//! | `steps`            | number of steps `t`                                   |
//! | `horizon`          | averaging horizon `T`                                 |
//! | `vertex`           | designated vertex for time series (default: first start vertex) |
//! | `backend`          | `direct`, `fourier` or `oracle`                       |
//! | `output`           | output path                                           |
//! | `format`           | `csv` or `json`                                       |
//!
//! Complex numbers are written `re+imi`, e.g. `0.5-0.25i`, `1`, `-2i`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Result, WalkError};
use crate::group::{DihedralParams, GroupElement, VertexIndex};
use crate::oracle::MAX_ORACLE_N;
use crate::walk::coin::{CoinOperator, InitialCoinState};
use crate::walk::state::{WalkerState, STATE_NORM_TOL};

pub const KEYS: [&str; 11] = [
    "n",
    "coin",
    "coin_matrix",
    "initial_coin",
    "initial_position",
    "steps",
    "horizon",
    "vertex",
    "backend",
    "output",
    "format",
];

fn config_err(msg: impl Into<String>) -> WalkError {
    WalkError::Config(msg.into())
}

/// Parses `re`, `re+imi`, `re-imi`, `imi` or `i`; whitespace is ignored.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    s.parse::<Complex64>()
        .map_err(|_| config_err(format!("cannot parse complex number {text:?} (expected re+imi)")))
}

/// Shortest round-trip rendering in the `re+imi` syntax.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 && z.im.is_sign_positive() {
        format!("{}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn parse_complex_list(text: &str, expected: usize, key: &str) -> Result<Vec<Complex64>> {
    let items: Vec<Complex64> = text.split(',').map(parse_complex).collect::<Result<_>>()?;
    if items.len() != expected {
        return Err(config_err(format!(
            "{key} needs {expected} entries, got {}",
            items.len()
        )));
    }
    Ok(items)
}

/// Reads a flat `key=value` file. `#` starts a comment.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| config_err(format!("line {}: expected key=value, got {raw:?}", lineno + 1)))?;
        let key = k.trim().to_ascii_lowercase();
        if !KEYS.contains(&key.as_str()) {
            return Err(config_err(format!("line {}: unknown key {key:?}", lineno + 1)));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoinChoice {
    Grover,
    Dft,
    Custom(Box<[Complex64; 9]>),
}

impl CoinChoice {
    pub fn operator(&self) -> Result<CoinOperator> {
        match self {
            CoinChoice::Grover => Ok(CoinOperator::grover()),
            CoinChoice::Dft => Ok(CoinOperator::dft()),
            CoinChoice::Custom(e) => {
                CoinOperator::from_row_major(e).map_err(|e| config_err(format!("coin_matrix: {e}")))
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            CoinChoice::Grover => "grover",
            CoinChoice::Dft => "dft",
            CoinChoice::Custom(_) => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Direct,
    Fourier,
    Oracle,
}

impl FromStr for Backend {
    type Err = WalkError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Backend::Direct),
            "fourier" => Ok(Backend::Fourier),
            "oracle" => Ok(Backend::Oracle),
            _ => Err(config_err(format!("unknown backend {s:?} (direct|fourier|oracle)"))),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Direct => "direct",
            Backend::Fourier => "fourier",
            Backend::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = WalkError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(config_err(format!("unknown format {s:?} (csv|json)"))),
        }
    }
}

/// One experiment. Build with [`RunConfig::from_map`] or directly.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub coin: CoinChoice,
    pub initial_coin: [Complex64; 3],
    /// `(s, t, amplitude)` terms of the initial position superposition.
    pub initial_position: Vec<(u8, usize, Complex64)>,
    pub steps: usize,
    pub horizon: usize,
    pub vertex: Option<usize>,
    pub backend: Backend,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 5,
            coin: CoinChoice::Grover,
            initial_coin: [
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            initial_position: vec![(0, 0, Complex64::new(1.0, 0.0))],
            steps: 0,
            horizon: 1,
            vertex: None,
            backend: Backend::Direct,
            output: None,
            format: OutputFormat::Csv,
        }
    }
}

impl RunConfig {
    /// Builds a config from merged key/value settings; missing keys keep
    /// their defaults.
    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (key, value) in map {
            let v = value.trim();
            let int = |what: &str| -> Result<usize> {
                v.parse::<usize>()
                    .map_err(|_| config_err(format!("{what} must be a non-negative integer, got {v:?}")))
            };
            match key.as_str() {
                "n" => cfg.n = int("n")?,
                "coin" | "coin_matrix" => {}
                "initial_coin" => {
                    let items = parse_complex_list(v, 3, "initial_coin")?;
                    cfg.initial_coin = [items[0], items[1], items[2]];
                }
                "initial_position" => cfg.initial_position = parse_positions(v)?,
                "steps" => cfg.steps = int("steps")?,
                "horizon" => cfg.horizon = int("horizon")?,
                "vertex" => cfg.vertex = Some(int("vertex")?),
                "backend" => cfg.backend = v.parse()?,
                "output" => cfg.output = Some(PathBuf::from(v)),
                "format" => cfg.format = v.parse()?,
                other => return Err(config_err(format!("unknown key {other:?}"))),
            }
        }
        let matrix = map.get("coin_matrix");
        let kind = map.get("coin").map(|c| c.trim()).unwrap_or("grover");
        cfg.coin = match (kind, matrix) {
            ("grover", None) => CoinChoice::Grover,
            ("dft", None) => CoinChoice::Dft,
            ("custom", Some(m)) => {
                let items = parse_complex_list(m, 9, "coin_matrix")?;
                CoinChoice::Custom(Box::new(items.try_into().expect("nine entries")))
            }
            ("custom", None) => return Err(config_err("coin=custom requires coin_matrix")),
            ("grover" | "dft", Some(_)) => {
                return Err(config_err(format!(
                    "coin_matrix given but coin is {kind:?}, not \"custom\""
                )))
            }
            (other, _) => return Err(config_err(format!("unknown coin {other:?} (grover|dft|custom)"))),
        };
        Ok(cfg)
    }

    pub fn params(&self) -> Result<DihedralParams> {
        DihedralParams::new(self.n).map_err(|e| config_err(e.to_string()))
    }

    pub fn coin_operator(&self) -> Result<CoinOperator> {
        self.coin.operator()
    }

    pub fn initial_coin_state(&self) -> Result<InitialCoinState> {
        let [a, b, c] = self.initial_coin;
        InitialCoinState::new(a, b, c).map_err(|e| config_err(format!("initial_coin: {e}")))
    }

    pub fn initial_state(&self) -> Result<WalkerState> {
        let p = self.params()?;
        let coin = self.initial_coin_state()?;
        if self.initial_position.is_empty() {
            return Err(config_err("initial_position is empty"));
        }
        let terms = self
            .initial_position
            .iter()
            .map(|&(s, t, a)| {
                GroupElement::new(s, t, &p)
                    .map(|g| (g, a))
                    .map_err(|e| config_err(format!("initial_position: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        WalkerState::from_position_superposition(&coin, &terms, p).map_err(|e| {
            config_err(format!(
                "initial state must be normalized within {STATE_NORM_TOL:e}: {e}"
            ))
        })
    }

    /// The designated vertex, defaulting to the first start vertex.
    pub fn designated_vertex(&self) -> Result<VertexIndex> {
        let p = self.params()?;
        let v = match self.vertex {
            Some(v) => VertexIndex(v),
            None => {
                let &(s, t, _) = self
                    .initial_position
                    .first()
                    .ok_or_else(|| config_err("initial_position is empty"))?;
                p.encode_vertex(GroupElement::new(s, t, &p)?)
            }
        };
        p.decode_vertex(v).map_err(|e| config_err(format!("vertex: {e}")))?;
        Ok(v)
    }

    /// Checks every invariant that does not depend on the command.
    pub fn validate(&self) -> Result<()> {
        self.params()?;
        self.coin_operator()?;
        self.initial_state()?;
        if self.backend == Backend::Oracle && self.n > MAX_ORACLE_N {
            return Err(config_err(format!(
                "backend=oracle needs n <= {MAX_ORACLE_N}, got {}",
                self.n
            )));
        }
        if let Some(v) = self.vertex {
            if v >= 2 * self.n {
                return Err(config_err(format!("vertex {v} out of range [0, {})", 2 * self.n)));
            }
        }
        Ok(())
    }

    /// Key/value echo of the config, in the same syntax it is read from.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        let join = |zs: &[Complex64]| zs.iter().map(|&z| format_complex(z)).collect::<Vec<_>>().join(",");
        let mut m = BTreeMap::new();
        m.insert("n".into(), self.n.to_string());
        m.insert("coin".into(), self.coin.name().into());
        if let CoinChoice::Custom(e) = &self.coin {
            m.insert("coin_matrix".into(), join(&e[..]));
        }
        m.insert("initial_coin".into(), join(&self.initial_coin));
        let pos = self
            .initial_position
            .iter()
            .map(|&(s, t, a)| format!("{s}:{t}:{}", format_complex(a)))
            .collect::<Vec<_>>()
            .join(";");
        m.insert("initial_position".into(), pos);
        m.insert("steps".into(), self.steps.to_string());
        m.insert("horizon".into(), self.horizon.to_string());
        if let Some(v) = self.vertex {
            m.insert("vertex".into(), v.to_string());
        }
        m.insert("backend".into(), self.backend.to_string());
        if let Some(o) = &self.output {
            m.insert("output".into(), o.display().to_string());
        }
        m.insert(
            "format".into(),
            match self.format {
                OutputFormat::Csv => "csv",
                OutputFormat::Json => "json",
            }
            .into(),
        );
        m
    }
}

fn parse_positions(text: &str) -> Result<Vec<(u8, usize, Complex64)>> {
    text.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|term| {
            let parts: Vec<&str> = term.trim().splitn(3, ':').collect();
            let bad = || config_err(format!("initial_position term {term:?} must be s:t or s:t:amplitude"));
            let (s, t) = match parts.as_slice() {
                [s, t] | [s, t, _] => (
                    s.parse::<u8>().map_err(|_| bad())?,
                    t.parse::<usize>().map_err(|_| bad())?,
                ),
                _ => return Err(bad()),
            };
            let amp = match parts.get(2) {
                Some(a) => parse_complex(a)?,
                None => Complex64::new(1.0, 0.0),
            };
            Ok((s, t, amp))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("0.5+0.25i").unwrap(), c(0.5, 0.25));
        assert_eq!(parse_complex("-0.5-0.25i").unwrap(), c(-0.5, -0.25));
        assert_eq!(parse_complex("-2i").unwrap(), c(0.0, -2.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("1e-3+2E+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex(" 3 - i ").unwrap(), c(3.0, -1.0));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+xi").is_err());
        assert!(parse_complex("1,2").is_err());
    }

    #[test]
    fn complex_round_trip() {
        for z in [c(0.1, 0.2), c(-1.0 / 3.0, 0.0), c(0.0, -1e-300), c(2.5e10, -7.0)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }

    #[test]
    fn key_value_file() {
        let text = "# fig\nn = 50\ncoin=grover  # comment\n\ninitial_position=1:0\nsteps=200\n";
        let m = parse_key_values(text).unwrap();
        let cfg = RunConfig::from_map(&m).unwrap();
        assert_eq!(cfg.n, 50);
        assert_eq!(cfg.steps, 200);
        assert_eq!(cfg.initial_position, vec![(1, 0, c(1.0, 0.0))]);
        assert_eq!(cfg.designated_vertex().unwrap(), VertexIndex(50));
        cfg.validate().unwrap();
        assert!(parse_key_values("n50").is_err());
        assert!(parse_key_values("bogus=1").is_err());
    }

    #[test]
    fn echo_round_trips() {
        let mut m = BTreeMap::new();
        m.insert("n".to_string(), "8".to_string());
        m.insert("coin".to_string(), "custom".to_string());
        m.insert("coin_matrix".to_string(), "0,1,0,1,0,0,0,0,i".to_string());
        m.insert("initial_coin".to_string(), "0.6,0.8i,0".to_string());
        m.insert("initial_position".to_string(), "0:0:0.6;1:0:0.8".to_string());
        let cfg = RunConfig::from_map(&m).unwrap();
        cfg.validate().unwrap();
        assert_eq!(RunConfig::from_map(&cfg.to_map()).unwrap(), cfg);
    }

    #[test]
    fn validation_errors_are_actionable() {
        let cfg = RunConfig {
            n: 2,
            ..RunConfig::default()
        };
        assert!(cfg.validate().unwrap_err().to_string().contains("at least 3"));

        let cfg = RunConfig {
            initial_coin: [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            ..RunConfig::default()
        };
        assert!(cfg.validate().unwrap_err().to_string().contains("initial_coin"));

        let cfg = RunConfig {
            initial_position: vec![(0, 0, c(1.0, 0.0)), (1, 0, c(1.0, 0.0))],
            ..RunConfig::default()
        };
        assert!(cfg.validate().unwrap_err().to_string().contains("normalized"));

        let cfg = RunConfig {
            n: 300,
            backend: Backend::Oracle,
            ..RunConfig::default()
        };
        assert!(cfg.validate().unwrap_err().to_string().contains("oracle"));

        let mut m = BTreeMap::new();
        m.insert("coin".to_string(), "custom".to_string());
        assert!(RunConfig::from_map(&m).is_err());
        m.insert("coin_matrix".to_string(), "1,0,0,0,1,0,0,0,2".to_string());
        let cfg = RunConfig::from_map(&m).unwrap();
        assert!(cfg.validate().unwrap_err().to_string().contains("unitary"));

        let mut m = BTreeMap::new();
        m.insert("backend".to_string(), "gpu".to_string());
        assert!(RunConfig::from_map(&m).is_err());
    }
}
