//! Instance generators built from the hardness constructions, each with an
//! independent property it certifies, plus seeded random inputs for them.

pub mod dag;
pub mod intersection;
pub mod oracle;
pub mod petri;
pub mod random;

pub use dag::{gen_dag_nfa, Dag};
pub use intersection::{gen_dfa_intersection, gen_unary_intersection, IntersectionVariant};
pub use petri::{gen_marking_inclusion, gen_reachability_petri, InclusionCritical, MarkingInclusion};

/// `base`, or `base` followed by primes, whichever is first not in `taken`.
pub(crate) fn fresh<S: AsRef<str>>(taken: &[S], base: &str) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|t| t.as_ref() == name) {
        name.push('\'');
    }
    name
}
