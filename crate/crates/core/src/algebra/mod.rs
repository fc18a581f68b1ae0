//! Exact polynomial machinery: univariate integer polynomials, cycle indices
//! of cyclic groups with their substitution rules, and formal multivariate
//! polynomials for identities between cycle indices.

mod cycle_index;
mod sympoly;
mod unipoly;

pub use cycle_index::{
    cycle_index, substitute, Arg, CycleIndex, CycleTerm, Selector, SubstitutionRule, Target,
};
pub use sympoly::{sym_arith, Family, Monomial, SymOp, SymPoly, Var};
pub use unipoly::{eval_poly, EvalPoint, UniPoly};
