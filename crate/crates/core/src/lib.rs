//! Exact enumeration of circulant graphs and digraphs of prime, twice-prime
//! and prime-squared order, a registry of identities between the counts, and
//! a brute-force isomorphism oracle for small orders.

pub mod algebra;
pub mod decimal;
pub mod enumerators;
pub mod error;
pub mod identities;
pub mod number_theory;
pub mod oracle;

pub use algebra::{cycle_index, substitute, CycleIndex, SubstitutionRule, SymPoly, UniPoly};
pub use enumerators::{count, CirculantClass, CountResult, Provenance};
pub use error::{Error, Result};
