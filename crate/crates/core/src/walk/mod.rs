//! Direct simulation of the walk in position space.

pub mod coin;
pub mod engine;
pub mod state;

pub use coin::{CoinOperator, InitialCoinState};
pub use engine::{
    evolve, position_distribution, running_average_at, step, step_into, time_averaged_distribution, Trajectory,
};
pub use state::{slot, Distribution, WalkerState, INTERNAL_DIM};
