//! Shellability, weak shellability and the strong gcd-condition for finite
//! simplicial complexes, together with Alexander duality and homological
//! (sequential) Cohen-Macaulay checks.
//!
//! Complexes live on a labelled vertex universe of at most 64 vertices and
//! are stored as an antichain of facets encoded as bit masks. The crate
//! validates given orders, decides whether orders exist, and assembles the
//! four-way fact table linking dual shellability, the strong gcd-condition,
//! sequential Cohen-Macaulayness of the dual and the Golod property.

pub mod complex;
pub mod error;
pub mod face;
pub mod facts;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod hunt;
pub mod linalg;
pub mod order;
pub mod random;
pub mod verify;

pub use complex::Complex;
pub use error::{Error, Result};
pub use face::{Face, Label, VertexSet};
pub use facts::{build_fact_table, FactTable, Slot, Truth};
pub use homology::{
    is_cohen_macaulay, is_sequentially_cm, reduced_homology, CmReport, CmWitness, FieldSpec, HomologyProfile,
};
pub use order::{
    check_shelling_order, check_strong_gcd_order, check_weak_shelling_order, find_shelling_order,
    find_strong_gcd_order, find_weak_shelling_order, trivial_weak_shellability, CheckReport, OrderCertificate,
    OrderKind, SearchConfig, SearchOutcome, TrivialWeak, Violation,
};
