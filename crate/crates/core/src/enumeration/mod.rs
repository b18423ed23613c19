//! Computable series behind recursive presentations: pairing, polynomial
//! enumeration, clocked machine series and reduction-based presentations.

mod pairing;
mod poly;
mod series;

pub use pairing::{pair, triple, unpair, untriple};
pub use poly::{poly_series, Polynomial};
pub use series::{
    class_presentation, harder_index, harder_set, machine_at, np_machine, p_machine, polyfunc_series,
    polyset_series, reduction_closure, Enumeration, Family, HarderMode, OracleSeries, PolySet, ReductionSeries,
    HARDER_CHECK_CAP, INDEX_CAP, NP_WITNESS_CAP,
};
