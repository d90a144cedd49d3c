//! Monobricks and semibricks over Nakayama algebras via arc diagrams, with a
//! brute-force quiver-representation oracle for cross-checking.

pub mod arc;
pub mod cli;
pub mod counting;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod ncl;
pub mod oracle;
pub mod poset;
pub mod render;

pub use arc::{
    arc_label, crossing_kind, cyclic, hom_kind, socle_series, submodule_arcs, AlgebraSpec, Arc, CrossKind,
    MorphismKind, SocleSeries,
};
pub use counting::{b_count, catalan, central_binomial, recurrence_check, schroder_count, CountReport};
pub use diagram::{is_monobrick_diagram, ArcDiagram, DiagramRecord};
pub use enumerate::{count, enumerate, enumerate_parallel, Budget, DiagramKind};
pub use error::{Error, Result};
pub use ncl::{enumerate_ncl, NclPartition, NclViolation};
pub use poset::{Cover, MonobrickPoset};
pub use render::render_ascii;
