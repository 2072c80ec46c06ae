//! Irreducible decompositions of character series and empirical
//! representation-stability diagnostics.

mod decompose;
mod mn;
mod stability;

pub use decompose::{bm_series, decompose, degree_character, format_core, PaddedPartition};
pub use mn::{irrep_dimension, mn_character};
pub use stability::{
    betti_bm_bf, bf_constancy, bm_stratum_series, detect_polynomiality, stability_report, BfConstancy,
    MultiplicityTable, Polynomiality, StabilityReport,
};
