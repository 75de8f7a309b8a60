//! Guessing numbers, information defects, protocols, bounds and code sizes.

mod alphabet;
mod bounds;
mod codes;
mod protocol;
mod solve;

pub use alphabet::{
    alphabet_composition_bounds, power_alphabet_bounds, split_configuration, Interval,
};
pub use bounds::{
    bounds_report, Bound, BoundsReport, ComponentBound, Omitted, Side, Target, BOUND_TOLERANCE,
};
pub use codes::{
    a_s_exact, ball_volume, code_bounds, is_prime_power, CodeSize, CODE_BUDGET, CODE_GUARD,
};
pub use protocol::{fixed_configurations, protocol_from_independent_set, Protocol};
pub use solve::{
    chromatic_number, exact_power, guessing_number, information_defect, log_base,
    max_independent_set, ComponentSolution, ConfigColoring, GuessingNumber, IndependentConfigs,
    InformationDefect, SolveOptions,
};
