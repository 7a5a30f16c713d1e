//! Basis-change isomorphism from qubit reflexive stabilizers to CSS form,
//! the single-qubit correction bound, and the asymptotic-rate formula.
//!
//! On `F_2^{2n}` the map `φ(x, y) = (y, x + y)` is the unique linear
//! extension of `(a,a) ↦ (a,0)` and `(b,0) ↦ (0,b)`. It preserves vanishing
//! of the symplectic form, so it carries a reflexive stabilizer to a
//! stabilizer whose generators split into pure-X and pure-Z parameter
//! types.

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldVector};
use crate::reflexive::ReflexiveStabilizer;

fn require_qubits(f: &FieldSpec) -> Result<()> {
    if f.order() != 2 {
        return Err(Error::UnsupportedField(
            "the CSS correspondence is defined for qubits (d = 2)".into(),
        ));
    }
    Ok(())
}

/// `φ(x, y) = (y, x + y)`; cubes to the identity, hence bijective.
pub fn phi_map(
    f: &FieldSpec,
    x: &FieldVector,
    y: &FieldVector,
) -> Result<(FieldVector, FieldVector)> {
    require_qubits(f)?;
    Ok((y.clone(), f.vadd(x, y)?))
}

/// Image of every stabilizer generator's parameter pair under φ: diagonal
/// generators map to X-type pairs `(a, 0)`, flip generators to Z-type pairs
/// `(0, b)`.
pub fn phi_on_stabilizer(
    f: &FieldSpec,
    stab: &ReflexiveStabilizer,
) -> Result<Vec<(FieldVector, FieldVector)>> {
    require_qubits(f)?;
    let n = stab.luc().n();
    let mut out = Vec::new();
    for v in stab.gen_diag() {
        out.push(phi_map(f, v, v)?);
    }
    for w in stab.gen_flip() {
        out.push(phi_map(f, w, &FieldVector::zero(n))?);
    }
    for (a, b) in &out {
        if !a.is_zero() && !b.is_zero() {
            return Err(Error::StructureMismatch(
                "φ image of a reflexive generator is not CSS-split".into(),
            ));
        }
    }
    Ok(out)
}

/// Does `⋆(u, v) = 0 ⟺ ⋆(φu, φv) = 0` hold for this pair? (It always
/// does; exposed as a testable predicate.)
pub fn symplectic_preserved(
    f: &FieldSpec,
    u: (&FieldVector, &FieldVector),
    v: (&FieldVector, &FieldVector),
) -> Result<bool> {
    require_qubits(f)?;
    let before = f.symplectic_star(u, v)? == 0;
    let pu = phi_map(f, u.0, u.1)?;
    let pv = phi_map(f, v.0, v.1)?;
    let after = f.symplectic_star((&pu.0, &pu.1), (&pv.0, &pv.1))? == 0;
    Ok(before == after)
}

/// `t = min{⌊(wt(C1)−1)/2⌋, ⌊(wt(C2^⊥∖C1)−1)/2⌋}`: the number of
/// single-qubit errors correctable per the weight bound. Callers compute
/// the set-difference weight by enumeration.
pub fn t_bound(wt_c1: usize, wt_c2perp_minus_c1: usize) -> usize {
    debug_assert!(wt_c1 >= 1 && wt_c2perp_minus_c1 >= 1);
    ((wt_c1.saturating_sub(1)) / 2).min(wt_c2perp_minus_c1.saturating_sub(1) / 2)
}

/// Asymptotic rate `R = 1 − 2δ log₂3 − H₂(2δ)` for decoherence fraction
/// `δ ∈ [0, 1/2)`. Reported as-is, including negative values.
pub fn asymptotic_rate(delta: f64) -> Result<f64> {
    if !(0.0..0.5).contains(&delta) {
        return Err(Error::DomainError(format!(
            "delta = {delta} outside [0, 0.5)"
        )));
    }
    let h2 = |x: f64| -> f64 {
        if x == 0.0 || x == 1.0 {
            0.0
        } else {
            -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
        }
    };
    Ok(1.0 - 2.0 * delta * 3.0f64.log2() - h2(2.0 * delta))
}
