//! Exact local delta invariants of weak del Pezzo surfaces of degree at least 5.

#![allow(clippy::result_large_err)]

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod delta;
pub mod json;
pub mod picard;
pub mod piecewise;
pub mod zariski;

pub use arith::{Rat, RatMatrix};
pub use catalog::{get_surface, list_surfaces, CatalogEntry};
pub use delta::{DeltaReport, Evaluator, Extraction, Plan, Point, StratumResult};
pub use picard::{DivisorClass, SurfaceModel};
pub use piecewise::{PiecewisePoly, Poly};
pub use zariski::{decompose_at, walk_ray, Decomposition, RayDecomposition};
