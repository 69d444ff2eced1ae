//! Exact symbolic verification of the Chevalley and equitable presentations
//! of the quantized enveloping algebra `U_q(g)` of a symmetrizable Kac-Moody
//! algebra.
//!
//! The layers, bottom up:
//!
//! * [`scalar`]: the coefficient field ℚ(q) in canonical form.
//! * [`qcomb`]: q-integers and Gaussian binomials.
//! * [`cartan`]: generalized Cartan matrices and their symmetrizers.
//! * [`algebra`]: the free algebra, tensor powers and substitutions.
//! * [`presentation`]: rewriting to normal form and Serre-ideal membership.
//! * [`hopf`]: coproduct, counit, antipode and the primitive-element checks.
//! * [`iso`]: the isomorphism maps and the certification driver.
//! * [`report`]: check results and their serialization.
//! * [`expr`]: the expression grammar.

pub mod algebra;
pub mod cartan;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod iso;
pub mod linalg;
pub mod presentation;
pub mod qcomb;
pub mod report;
pub mod scalar;

#[cfg(test)]
mod testutil;

pub use algebra::{
    apply_antihom, apply_hom, tensor_mul, Flavor, Generator, GeneratorAssignment, Kind, NCPoly, TensorPoly, Word,
};
pub use cartan::{compute_symmetrizer, parse_cartan_file, validate_gcm, Gcm, SymmetrizedCartan};
pub use error::{Error, Result};
pub use presentation::{chevalley_presentation, equitable_presentation, PresentationSpec};
pub use expr::{parse_expression, ParsedExpression};
pub use hopf::{equitable_hopf_formula_check, HopfData, PrimitiveKind};
pub use iso::{verify_presentation_iso, IsoMaps};
pub use qcomb::QIndex;
pub use report::{emit_report, CheckEntry, CheckStatus, ReportFormat, VerificationReport, Witness};
pub use scalar::{BigRational, Field, LaurentPoly, RationalFunction};
