//! Families of non-overlapping simplices that admit no triangulation of the
//! cyclic polytope without new vertices, and certificates for that.

mod certify;
mod families;
mod gale;
mod random;

use serde::{Deserialize, Serialize};

use crate::triangulation::{SearchStats, Triangulation};

pub use certify::{maximal_nonoverlap_check, verify_nonextendable, DEFAULT_CERTIFY_BUDGET};
pub use families::{lift_d, lift_n, rambau_example};
pub use gale::{gale_configuration, gale_dual_check, GaleConfiguration, GaleVector};
pub use random::{random_complex, random_maximal_family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Extendable,
    NonExtendable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Search,
    Gale,
}

/// Outcome of an extendability check together with its evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub method: Method,
    /// A triangulation containing every input simplex, when one was found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Triangulation>,
    /// Search statistics; `complete` marks an exhausted search space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gale: Option<GaleConfiguration>,
}
