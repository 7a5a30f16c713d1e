//! Exact arithmetic in `F_{p^m}`, vectors over `F_d^n`, the two bilinear
//! forms, and linear-subspace machinery.
//!
//! Two inner products coexist. The `F_d`-valued form `⟨a,b⟩ = Σ aᵢbᵢ`
//! ([`FieldSpec::inner_fd`]) defines orthogonal complements of subspaces.
//! The `F_p`-valued form `χ(a,b) = Σ aᵢ*bᵢ` ([`FieldSpec::chi`]), built from
//! the coefficient dot product `*`, drives every phase exponent in the error
//! group. A field spec is only accepted when the two are linked by an
//! `F_p`-linear functional `L` with `a*b = L(ab)`; that link makes
//! `F_d`-orthogonality and `χ`-orthogonality interchangeable on
//! `F_d`-subspaces, which the stabilizer theory relies on throughout.

mod field;
mod subspace;
mod vector;

pub use field::{FieldElement, FieldSpec};
pub use subspace::LinearSubspace;
pub use vector::FieldVector;

/// Cap on `d^dim` for exhaustive subspace enumeration (weights, cosets).
pub const ENUM_CAP: u64 = 1 << 20;
