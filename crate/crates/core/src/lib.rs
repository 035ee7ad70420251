//! Concept classes in the binary n-cube.
//!
//! A concept class is a set of vertices of {0,1}^n. This crate analyzes such
//! classes through their cubical structure: VC dimension and the Sauer bound,
//! deficiency, maximum and maximal classes, complete cube collections in
//! complements, iterated reductions and face graphs, shifting and lifting,
//! enumeration of all maximum classes of a given dimension, and search for
//! maximum classes of prescribed dimension containing a given class.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the command
//! line live in the companion `cubevc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod util;

pub mod construct;
pub mod cube;
pub mod embed;
pub mod error;
pub mod lift;
pub mod reductions;
pub mod rng;
pub mod symmetry;
pub mod text;
pub mod vc;

pub use cube::{enumerate_k_cubes, ConceptClass, CubeCollection, Subcube, Vertex, MAX_DIM};
pub use error::{Error, Result};
pub use lift::{closed_below_maximum, enumerate_maximum_classes, shift_down, shift_to_closed_below};
pub use symmetry::{canonical_form, CubeSymmetry};
pub use vc::{deficiency, is_maximal, is_maximum, sauer_bound, vc_dim_via_complement, vc_dimension};
