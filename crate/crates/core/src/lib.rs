//! Formal concept analysis engine: contexts and their concept lattices,
//! relational-algebra style operators, attribute generalization, and the
//! approximation of presumed concepts — plus file formats, a query language,
//! and diagram export.

pub mod algebra;
pub mod approximation;
pub mod bits;
pub mod context;
pub mod error;
pub mod export;
pub mod generalization;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod query;
pub mod relation;
pub mod scaling;

pub use bits::{AttributeSet, ObjectSet};
pub use context::FormalContext;
pub use error::{LatqlError, Result};
pub use lattice::{build_lattice, Concept, ConceptLattice, ConceptRegion, RegionShape};
pub use relation::Relation;
