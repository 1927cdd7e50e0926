//! Graded symbolic derivation engine.
//!
//! Fields are jet symbols (a generator with a symmetrized derivative
//! multi-index), charges act by linear rules, and graded commutators are
//! evaluated recursively. Internally every jet space is stored in reduced
//! coordinates: derivative slots are compressed to multisets and constrained
//! generators (antisymmetric forms, self-dual forms) to an exact basis of
//! their independent components, so symmetry projections hold by
//! construction and expression equality is plain coefficient equality.

mod catalog;
mod charge;
mod checks;
mod expression;
mod generator;
mod model;
mod superfield;

pub use charge::{Charge, ChargeKind, CompositeCharge};
pub use checks::{
    check_closure, check_relation, gauge_tower, gauge_tower_raw, pseudo_majorana_check,
    tower_checks, RelationId, RELATIONS_ALL,
};

/// Strength-one antisymmetrization over free slots (re-exported for tests
/// and drivers building field-strength expressions).
pub use catalog::brace_free as brace_free_pub;
pub use expression::Expression;
pub use generator::{Constraint, FieldGenerator, Parity};
pub use model::{
    act, act_on_expression, graded_bracket_on, render_expression, ClosureForm, JetField, Model,
};
pub use superfield::{
    order9_vanishes, printed_terms_through_quartic, superfield_expand, GrassmannPolynomial,
};

use crate::error::{Error, Result};

/// The five-model catalog; names are stable public strings.
pub const MODEL_NAMES: [&str; 5] = [
    "6d-tensor-offshell",
    "6d-tensor-onshell",
    "6d-toy-rigid",
    "4d-maxwell-onshell",
    "4d-toy-rigid",
];

/// Loads a model by catalog name. `n` sizes the symplectic structure and is
/// only free for `6d-toy-rigid`; every other model is fixed at N = 1.
pub fn load_model(name: &str, n: u8) -> Result<Model> {
    load_model_with(name, n, 4)
}

/// Like [`load_model`], with an explicit jet truncation (default 4; every
/// check in scope needs derivative order at most 3, so 4 leaves headroom).
pub fn load_model_with(name: &str, n: u8, jet_max: usize) -> Result<Model> {
    if n == 0 {
        return Err(Error::Config("N must be >= 1".into()));
    }
    if !(4..=6).contains(&jet_max) {
        return Err(Error::Config(format!(
            "jet truncation {jet_max} out of the supported range 4..=6"
        )));
    }
    match name {
        "6d-tensor-offshell" | "6d-tensor-onshell" | "4d-maxwell-onshell" | "4d-toy-rigid" => {
            if n != 1 {
                return Err(Error::Config(format!(
                    "model {name} is fixed at N = 1, got N = {n}"
                )));
            }
        }
        "6d-toy-rigid" => {}
        _ => return Err(Error::Catalog(format!("unknown model {name}"))),
    }
    catalog::build(name, n, jet_max)
}
