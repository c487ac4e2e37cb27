//! Braid group representations induced by the `d`-fold cyclic branched
//! cover of the disk with `n` branch points.
//!
//! Each standard generator `sigma_i` of `B_n` lifts to a self-functor of a
//! combinatorial model of the cover (the covering groupoid), and from there
//! to an automorphism `beta_i` of the free group `F_{(d-1)(n-1)}`. The crate
//! builds `beta_i` three independent ways and checks, exactly and
//! symbolically, that they agree, that they satisfy the braid relations, and
//! that `beta_i` factors as a product of `d - 1` Dehn twists.
//!
//! Module map:
//!
//! - [`words`]: reduced words and free group automorphisms
//! - [`groupoid`]: the covering groupoid, paths, functors, lifted twists
//! - [`pi1`]: basepoint loops and the free basis `x[i,j]`
//! - [`braid`]: braid words and the representation
//! - [`verify`]: verification sweeps with structured reports
//! - [`surface`]: genus and boundary count of the cover
//!
//! All products are read left to right, left factor first.

pub mod braid;
pub mod error;
pub mod groupoid;
pub mod matrix;
pub mod params;
pub mod pi1;
pub mod surface;
pub mod verify;
pub mod words;

pub use braid::{BraidLetter, BraidWord, Representation};
pub use error::{Error, Result};
pub use groupoid::{Edge, EdgePath, GroupoidFunctor, Vertex};
pub use matrix::IntMatrix;
pub use params::Params;
pub use pi1::BasepointLoop;
pub use surface::SurfaceData;
pub use verify::{Check, Report, Suite};
pub use words::{FreeAutomorphism, GeneratorSymbol, Letter, Word};
