//! Alexander polynomial certificates: reduced Burau on braids, crossing
//! matrices on planar diagrams, and the closed-form torus knot oracle.

mod alexander;
mod burau;
mod diagram;
pub(crate) mod matrix;

pub use alexander::{alexander_from_braid, alexander_torus_oracle, normalize_alexander};
pub use burau::reduced_burau;
pub use diagram::{alexander_from_diagram, Crossing, PlanarDiagram};
