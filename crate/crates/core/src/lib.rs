//! Case models over the four-valued logic BD with Delta, the arguments they
//! support, and their two-layered representation over bi-Goedel algebra.

pub mod argument;
pub mod case_model;
pub mod classical;
pub mod entail;
pub mod error;
pub mod formula;
pub mod four;
pub mod godel;
pub mod model_file;
pub mod parse;
pub mod random;
pub mod semantics;
pub mod two_layered;

pub use argument::{
    classify, classify_classical, coherent, conclusive, presumptively_valid, target, Argument, ArgumentStatus, ByKind,
    ByPolarity, ClassicalStatus, Polarity, StatusKind,
};
pub use case_model::{Case, CaseModel, ClassicalCaseModel, ValidationReport, Violation, ViolationKind};
pub use classical::{entails_classical, eval2, ClassicalValuation};
pub use entail::{entails, jointly_exclusive, nontrivial, Bd};
pub use error::{Error, Result};
pub use formula::{
    make_bot, make_internal_entailment, make_probe, make_top, InnerFormula, OuterFormula, Probe, Signature,
};
pub use four::{FourValue, Valuation};
pub use godel::{godel, GValue, GodelOp};
pub use model_file::{parse_model_file, ModelFile};
pub use parse::{parse_inner, parse_outer, ParseError};
pub use semantics::{eval4, extension, sat, sequent_holds, Extension, PointModel, PointSet};
pub use two_layered::{
    canonical_valuation, eval_outer, mu_counterpart, representation_formula, verify_on, verify_representation, Capacity,
    Instance, MuCounterpart, QGModel, RepresentationReport,
};
