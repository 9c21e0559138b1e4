//! Exact computations with evolution algebras: annihilating series, types,
//! decomposability, and the classification of nilpotent evolution algebras of
//! dimension at most five.

pub mod error;
pub mod exactfield;
pub mod linalg;
pub mod evolution;
pub mod families;
pub mod oracle;
pub mod classify;
pub mod cli;

pub use error::{Error, Result};
pub use exactfield::{arith, parse_element, total_order, ArithOp, FieldDescriptor, FieldElement, FieldKind};
pub use linalg::{Matrix, Subspace, Vector};
pub use evolution::{AnnSeries, EvolutionAlgebra, InvariantProfile, PowerKind, Rule, Verdict, WeightedGraph};
pub use families::{FamilyKind, FamilySpec};
pub use oracle::{SearchBudget, SearchMode};
pub use classify::{CanonicalLabel, ClassEntry, Classification, NormalForm};
