//! Time-constructibility, gap languages and delayed diagonalization.

mod costed;
mod diag;
mod gaplang;
mod ladner;

pub use costed::{
    eval_counted, time_construct_wrap, Affine, Costed, CostedFunction, MaxOf, Meter, SharedCosted, TimeConstructed,
};
pub use diag::{
    build_r, diagonalize, find_contradiction, find_contradiction_metered, limits, BuiltR, DiagInstance, DiagResult,
    Mode, RRow, Side, Witness, WitnessSide,
};
pub use gaplang::{gap_member, interval_index, interval_limits, interval_reference};
pub use ladner::{ladner, no_instance, NO_INSTANCE_CAP};
