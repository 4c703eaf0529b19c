//! Exact analysis of toral automorphisms in GL(2,Z): classification,
//! symmetry and reversing symmetry groups with explicit generator matrices,
//! k-symmetries, affine extensions, periodic points and zeta series, the
//! projective PGL(2,Z) variant, and the induced trace maps on 3-space.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere in the crate.

pub mod classify;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod group;
pub mod mat;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod projective;
pub mod qform;
pub mod reversing;
pub mod symmetry;
pub mod tracemap;

pub use classify::{classify, MatClass, MatKind, QuadSurd};
pub use error::Error;
pub use group::GroupStructure;
pub use mat::{smith_normal_form, Int, Mat2, SnfResult};
pub use qform::{pell4, reduce_cycle, represents_unit, BQForm, PellSolution, Unit};
pub use reversing::{find_reversor, reversing_group, reversing_lattice, ReversingReport};
pub use symmetry::{commutant_basis, fundamental_symmetry, symmetry_group, SymmetryReport};
