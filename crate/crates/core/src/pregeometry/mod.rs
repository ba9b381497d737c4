//! Vector spaces over prime fields as pregeometries: span closure, dimension,
//! the induced independence relation, and atoms evaluated on variable images.

mod audit;
mod field;
mod semantics;
mod space;

pub use audit::{audit_axioms, AuditReport, Check};
pub use field::{Field, MAX_PRIME};
pub use semantics::{
    evaluate_pregeo, image_dim, sat_absind_pregeo, sat_condind_pregeo, sat_dep_closure, sat_ind_pregeo, Geometry,
};
pub use space::{cl_dep, dedup, dim, dim_over, indep_rel, is_independent_set, span_member, Vector, VectorSpace};
