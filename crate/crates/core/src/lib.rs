//! Reflexive stabilizer codes over qudit systems labeled by `F_{p^m}`.
//!
//! This crate builds quantum stabilizer codes whose stabilizers are generated
//! by diagonal-parameter operators `D_{a,a}` for `a` in `C^⊥` and flip
//! operators `D_{b,0}` for `b` in a subspace `C1 ⊆ C`. Error sets and codes
//! are both represented as graphs on the vertex set `F_d^n`:
//!
//! - the *error avoidance graph* of an error set connects the flip/phase
//!   parameter pairs of its conjugate errors `E1⁻¹E2`;
//! - the *LUC graph* of a connecting subspace `C` joins vertices whose
//!   difference lies in `C`, with loops kept on `C1^⊥`.
//!
//! Correctability of a code against an error set reduces to edge-avoidance
//! conditions between the two graphs. The [`verify`] module implements those
//! symbolic checks alongside an independent dense Knill-Laflamme verifier,
//! [`search`] synthesizes `(C, C1)` pairs for a given error set, and [`css`]
//! maps qubit reflexive stabilizers to CSS form.
//!
//! Scalar and vector arithmetic live in [`galois`]; the error-group algebra
//! with exact phase tracking lives in [`pauli`].

pub mod css;
pub mod error;
pub mod galois;
pub mod graph;
pub mod io;
pub mod pauli;
pub mod reflexive;
pub mod search;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
pub use galois::{FieldElement, FieldSpec, FieldVector, LinearSubspace};
pub use graph::{LucSpec, QeccGraph};
pub use pauli::{ErrorOp, ErrorSet};
pub use reflexive::{ReflexiveCode, ReflexiveStabilizer, StateVector};
pub use verify::{Rule, Verdict, Witness};
