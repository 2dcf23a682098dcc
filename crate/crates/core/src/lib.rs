//! Double-null characteristic evolution of the Maxwell-Klein-Gordon system
//! from scattering data prescribed on future null infinity.
//!
//! The pipeline: ingest radiation-field data on scri (`scri`), compactify a
//! neighbourhood of null/timelike infinity onto a finite cone (`conformal`),
//! build Lorenz-gauge characteristic data by radial transport (`conedata`),
//! march the reduced semilinear wave system on null diamonds (`evolve`), and
//! verify the structural identities of the system — gauge propagation, charge
//! conservation, energy identities, null transport, radiation-field
//! consistency — in `diagnostics`.

pub mod conedata;
pub mod conformal;
pub mod diagnostics;
pub mod evolve;
pub mod grid;
pub mod io;
pub mod nullframe;
pub mod scalar;
pub mod scri;
pub mod sphere;

pub use scalar::Real;

/// Default concrete scalar for the pipeline layer. The math core is generic
/// over [`Real`]; everything the CLI touches is instantiated at `f64`.
pub type R = f64;
/// Complex number over the default scalar.
pub type C = num_complex::Complex<f64>;

pub type SphereGrid = sphere::SphereGrid<R>;
pub type ScalarField = sphere::ScalarField<R>;
pub type OneForm = sphere::OneForm<R>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("operator/field rank mismatch: {0}")]
    RankMismatch(&'static str),
    #[error("point outside chart or grid domain: {0}")]
    OutOfDomain(String),
    #[error("null frame degenerate (r = 0)")]
    DegenerateFrame,
    #[error("unsupported vector-field pair: [{0}, {1}]")]
    UnsupportedPair(String, String),
    #[error("cell fixed point failed to converge at level {iu}, node {iv} (residual {residual:.3e})")]
    FixedPointDiverged { iu: usize, iv: usize, residual: f64 },
    #[error("Picard iteration not contracting: gap ratio {ratio:.3} at iterate {iter}; shrink the slab")]
    PicardNotContracting { iter: usize, ratio: f64 },
    #[error("scattering data incompatible: {0}")]
    IncompatibleData(String),
    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("insufficient decay: {0}")]
    InsufficientDecay(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
