//! NF-complexes of simplicial complexes.
//!
//! A simplicial complex on `[n]` is stored as its antichain of facets. The
//! NF-step sends a complex to the Stanley–Reisner complex of its facet
//! ideal: combinatorially, the complex whose facets are the complements of
//! its minimal vertex covers. Iterating that step is a permutation of the
//! finite set of complexes on `[n]`, so every orbit is a cycle. This crate
//! computes the step, its orbits, the NF-number (first return up to
//! isomorphism), closed forms for `K_n ⊔ K_m`, and exhaustive censuses over
//! small ground sets.
//!
//! ```
//! use nf_core::{families, orbit};
//!
//! let p4 = families::path(4).unwrap();
//! assert_eq!(orbit::nf_number(&p4).unwrap(), 1);
//! assert_eq!(orbit::nf_period(&p4).unwrap(), 2);
//! ```

pub mod canon;
pub mod census;
pub mod complex;
pub mod dualize;
pub mod error;
pub mod families;
pub mod format;
pub mod literal;
pub mod orbit;
pub mod vertex_set;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use complex::{Permutation, SimplicialComplex};
pub use dualize::{minimal_vertex_covers, nf_step, CoverFamily};
pub use error::{Error, Result};
pub use orbit::{nf_iterate, nf_number, nf_period, orbit_trace, OrbitTrace};
pub use vertex_set::{VertexSet, MAX_VERTICES};
