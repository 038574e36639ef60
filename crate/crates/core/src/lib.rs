//! Mesh-category hom dimensions, degenerations, defect functions and
//! tangent spaces of orbit closures for representations of Dynkin quivers.

pub mod config;
pub mod degeneration;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod mesh;
pub mod reps;
pub mod tangent;

pub use degeneration::{DegenerationPoset, Orbit};
pub use dynkin::{DimVector, DynkinGraph, DynkinQuiver, DynkinType};
pub use error::{Error, Result};
pub use linalg::{Matrix, PrimeField};
pub use mesh::{Mesh, MeshCategory, MeshFunction, ObjectMultiset, ZDelta, ZVertex};
pub use reps::{Cocycle, MatrixRep, Morphism, RepContext};

/// Version of every JSON document written by the library.
pub const SCHEMA_VERSION: u32 = 1;
