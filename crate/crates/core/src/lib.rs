//! svgstep: the non-neural machinery for step-wise SVG drawing pipelines.
//!
//! The crate covers three stages of the pipeline:
//!
//! 1. **Decomposition** ([`decompose`]): split multi-subpath `<path>`
//!    elements into visually atomic elements while preserving rendering
//!    semantics (holes and translucent overlaps stay together, disjoint
//!    shapes come apart).
//! 2. **Trajectory construction** ([`trajectory`]): turn a decomposed
//!    document plus a prompt into an interleaved code/canvas sequence with
//!    per-segment loss-mask roles, emitted as JSONL + PNG sidecars.
//! 3. **Render-and-verify sessions** ([`rav`]): wrap any fragment generator
//!    in a gate that rejects visually stagnant or repetitive steps, with
//!    adaptive resampling and forced termination.
//!
//! Supporting modules: [`svg`] parses and canonically re-serializes a
//! restricted SVG subset, [`raster`] renders documents deterministically at a
//! fixed resolution and carries the pixel metrics, and [`synth`] generates
//! the synthetic fixture corpus used by the test suite and demos.

pub mod decompose;
pub mod raster;
pub mod rav;
pub mod svg;
pub mod synth;
pub mod trajectory;

pub use raster::Raster;
pub use svg::{PathCommand, PathElement, Subpath, SvgDocument};
