//! Minimum-degree neighbourhood profiles, well-behavedness and Monte-Carlo
//! checks of the random-graph structure lemmas.

mod chernoff;
mod dense;
mod monte_carlo;
mod profile;
mod well_behaved;

pub use chernoff::{chernoff_large, chernoff_tail, Side};
pub use dense::{dense_subset_edge_check, DenseSubsetReport, SubsetMode};
pub use monte_carlo::{monte_carlo, wilson_interval, EstimateReport, Property};
pub use profile::{neighbourhood_profile, NeighbourhoodProfile};
pub use well_behaved::{
    well_behaved, CutWitness, Verdict, WellBehavedConfig, WellBehavedReport, W1, W2, W3, W4,
    W4_EXHAUSTIVE_LIMIT,
};

pub(crate) use well_behaved::{binomial_saturating, next_combination};
