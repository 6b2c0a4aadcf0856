//! General Tutte polynomial algorithms. They serve as mutual cross-checks
//! for the closed forms in [`crate::families`].

mod activities;
mod canon;
mod coboundary;
mod colouring;
mod dc;
mod subset;
mod transfer;

use std::fmt;
use std::str::FromStr;

pub use activities::{tutte_activities, tutte_activities_natural, BASIS_LIMIT};
pub use coboundary::{
    char_poly, char_poly_from_coboundary, coboundary, coboundary_from_tutte, tutte_coboundary, tutte_from_coboundary,
};
pub use colouring::{bad_colouring, COLOURING_VERTEX_LIMIT};
pub use dc::{tutte_dc, tutte_dc_graph, tutte_dc_with, DcOptions, DEFAULT_BUDGET_NODES};
pub use subset::{corank_nullity_counts, tutte_subset};
pub use transfer::{grid_transfer_matrix, transfer_grid, transfer_wheel, wheel_matrix};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// Engines that accept an arbitrary matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Subset,
    Dc,
    Activities,
    Coboundary,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Subset, Engine::Dc, Engine::Activities, Engine::Coboundary];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Subset => "subset",
            Engine::Dc => "dc",
            Engine::Activities => "activities",
            Engine::Coboundary => "coboundary",
        }
    }

    pub fn run(self, m: &Matroid, opts: &DcOptions) -> Result<BiPoly> {
        match self {
            Engine::Subset => tutte_subset(m),
            Engine::Dc => tutte_dc_with(m, opts),
            Engine::Activities => tutte_activities_natural(m),
            Engine::Coboundary => tutte_coboundary(m),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Engine> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown engine {s:?}")))
    }
}
