//! Weight vectors, the value group, relation lattices and divisorial
//! approximation.
//!
//! A weight vector assigns each variable a positive real weight expressed
//! as a rational combination of declared basis symbols. The symbols are
//! asserted to be linearly independent over the rationals (a documented
//! trust boundary) and carry rational interval enclosures, refinable by
//! bisection when a defining polynomial is supplied. Grade values are
//! rational coordinate vectors over that basis; their total order is
//! decided exactly on equal coordinates and by enclosure refinement
//! otherwise.

mod relations;
mod weights;

pub use relations::{
    homogeneity_transfer_check, kernel_relations, rel_approx, RelApproxOutcome, RelationLattice,
    TransferBounds, DEFAULT_SEARCH_BUDGET,
};
pub use weights::{BasisSym, GradeValue, Weights};
