//! Combinatorics of simplices on the moment curve `γ_d`.
//!
//! A simplex is a vertex subset of `[n]`; only the order of the points along
//! the curve matters, so no coordinates appear here. Overlap, the height
//! relation `<_{d+1}` and the four-way pair classification are all read off
//! alternating ("interlacing") subsequences of `σ ∪ τ`.

mod gale;
mod interlace;
mod order;
pub(crate) mod simplex;

pub use gale::{adjacent_pairs, gale_facets, gale_facets_on, satisfies_gale_evenness, GaleFacets};
pub use interlace::{
    classify_pair, height_less, interlace_report, overlaps, InterlaceReport, PairClass,
};
pub(crate) use interlace::{classify_unchecked, overlaps_unchecked};
pub use order::order_simplices;
pub use simplex::{Simplex, MAX_VERTEX};
