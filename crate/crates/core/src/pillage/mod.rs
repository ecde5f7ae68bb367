//! Pillage games: allocations of a unit of wealth, coalition power functions,
//! domination, and stability checks.

mod game;
mod json;
mod stable;

pub use game::{
    check_axioms, direction_pair_count, dominates, external_stability_sample, internal_stability, max_share,
    no_length4_check, stable_size_bound, winners_losers, Allocation, AxiomReport, Coalition, ExternalSample,
    InternalStability, Length4Check, PowerFn, PowerFunction, StableBound, StableCandidate, TablePower, MAX_PLAYERS,
};
pub use json::{Game, GamePower};
pub use stable::{build_internally_stable, chain_depth, ChainPower, InternallyStableSet};
