//! Brute-force module categories of small bound quivers over `F_p`.

pub mod linalg;
pub mod preset;
pub mod rep;
pub mod subcat;
pub mod tables;
pub mod universe;
pub mod verify;

pub use linalg::{Field, Matrix, Subspace};
pub use preset::{IndecSpec, Preset, PRESET_NAMES};
pub use rep::{are_isomorphic, HomSpace, Morphism, Quiver, Rep};
pub use subcat::{ClosureFlags, SubcatSet};
pub use universe::{ClassId, MapProfile, MapTriple, ModClass, Universe, UniverseConfig, ZERO};
pub use verify::{run_suite, Check, Suite, SuiteReport};
