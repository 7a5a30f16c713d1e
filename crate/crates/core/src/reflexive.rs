//! Reflexive stabilizer generators, membership tests for the stabilizer and
//! its centralizer, and the constructive codeword builder.
//!
//! The stabilizer of `R_C^{C1}` is generated by `D_{a,a}` for `a` in `C^⊥`
//! and `D_{b,0}` for `b` in `C1`. Its elements therefore carry parameter
//! pairs `(x+y, x)` with `x ∈ C^⊥`, `y ∈ C1`, and an operator `D_{a,b}`
//! commutes with every generator exactly when `a − b ∈ C` and `b ∈ C1^⊥`
//! (the phase part decides, via `(y,0) ⋆ (a,b) = −χ(y,b)`).
//!
//! Codewords are built per coset of `C1` in `C`: the label state `|Ψ_c⟩` is
//! a site-wise tensor of eigenstates of `X(1)Z(1)`, and
//! `|Φ_c⟩ = |C1|^{−1/2} Σ_{c1∈C1} D_{c1,0}|Ψ_c⟩`. Every codeword is a fixed
//! point (eigenvalue exactly 1) of each flip generator and a joint
//! eigenvector of each diagonal generator, with the same eigenvalue across
//! codewords.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec, FieldVector, LinearSubspace};
use crate::graph::LucSpec;
use crate::pauli::{checked_dim, phase_order, root_of_unity, ErrorOp};
use crate::tol;

/// State-vector dimension cap (`d^n`).
pub const STATE_DIM_CAP: u64 = 1 << 14;
/// Cap on total amplitudes held by one code (`d^n · d^k`).
pub const CODE_AMPLITUDE_CAP: u64 = 1 << 22;

/// Dense complex unit vector over the computational basis of `(C^d)^{⊗n}`,
/// basis ordered by canonical string encoding.
#[derive(Debug, Clone)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amps: Vec<Complex64>) -> StateVector {
        StateVector { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(x, y)| x.conj() * y)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn scaled(&self, s: Complex64) -> StateVector {
        StateVector {
            amps: self.amps.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add(&self, other: &StateVector) -> StateVector {
        StateVector {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &StateVector) -> StateVector {
        StateVector {
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn normalized(&self) -> StateVector {
        self.scaled(Complex64::new(1.0 / self.norm(), 0.0))
    }

    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for x in &self.amps {
            for y in &other.amps {
                amps.push(x * y);
            }
        }
        StateVector { amps }
    }

    /// Apply `ω^κ D_{a,b}`: sends amplitude at `x` to row `x + a` with phase
    /// `ω^{⟨b,x⟩}`.
    pub fn apply(&self, f: &FieldSpec, op: &ErrorOp) -> Result<StateVector> {
        let n = op.n();
        let dim = checked_dim(f, n, STATE_DIM_CAP)?;
        if dim != self.amps.len() {
            return Err(Error::SpecMismatch(format!(
                "state dimension {} does not match operator dimension {dim}",
                self.amps.len()
            )));
        }
        let r = phase_order(f);
        let s = r / f.p();
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for ix in 0..dim as u64 {
            let amp = self.amps[ix as usize];
            if amp.norm_sqr() == 0.0 {
                continue;
            }
            let x = f.vector_from_index(ix, n);
            let target = f.vindex(&f.vadd(&x, op.flip())?);
            let t = (op.kappa() + s * f.chi(op.phase(), &x)?) % r;
            out[target as usize] += root_of_unity(r, t) * amp;
        }
        Ok(StateVector { amps: out })
    }
}

/// Eigenvalue structure of the single-coordinate operator `X(1)Z(1)` on
/// `C^p`: eigenvalues `ω^κ` for odd `p`, `±i` for `p = 2`.
fn coordinate_eigenvalue(p: u32, kappa: u32) -> Complex64 {
    if p == 2 {
        if kappa == 0 {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    } else {
        root_of_unity(p, kappa)
    }
}

/// Closed-form eigenstate of `X(1)Z(1)` on `C^p` with eigenvalue
/// `coordinate_eigenvalue(p, κ)`.
fn coordinate_eigenstate(p: u32, kappa: u32) -> StateVector {
    let norm = 1.0 / (p as f64).sqrt();
    if p == 2 {
        let i = Complex64::new(0.0, 1.0);
        let sign = if kappa == 0 { i } else { -i };
        return StateVector::new(vec![sign * norm, Complex64::new(norm, 0.0)]);
    }
    // amplitude at i is ω^{T_i^κ} with T_i^κ = i(i−1−2κ)/2, an integer.
    let amps = (0..p as i64)
        .map(|i| {
            let t = i * (i - 1 - 2 * kappa as i64) / 2;
            let t = t.rem_euclid(p as i64) as u32;
            root_of_unity(p, t) * norm
        })
        .collect();
    StateVector::new(amps)
}

/// Fourier-projection fallback: extracts the eigenvector of `X(1)Z(1)` on
/// `C^p` for the expected eigenvalue by averaging powers of the operator.
/// Independent of the closed-form amplitudes.
fn coordinate_eigenstate_projected(f_p: &FieldSpec, kappa: u32) -> Result<StateVector> {
    let p = f_p.p();
    let lambda = coordinate_eigenvalue(p, kappa);
    let order: u32 = if p == 2 { 4 } else { p };
    let xz = ErrorOp::new(
        f_p,
        0,
        FieldVector::unit(1, 0, f_p.one()),
        FieldVector::unit(1, 0, f_p.one()),
    )?;
    for seed in 0..p as usize {
        let mut basis = vec![Complex64::new(0.0, 0.0); p as usize];
        basis[seed] = Complex64::new(1.0, 0.0);
        let mut acc = vec![Complex64::new(0.0, 0.0); p as usize];
        let mut cur = StateVector::new(basis);
        let mut phase = Complex64::new(1.0, 0.0);
        for _ in 0..order {
            for (a, c) in acc.iter_mut().zip(cur.amps()) {
                *a += phase * c;
            }
            cur = cur.apply(f_p, &xz)?;
            phase /= lambda;
        }
        let candidate = StateVector::new(acc);
        if candidate.norm() > 1e-6 {
            return Ok(candidate.normalized());
        }
    }
    Err(Error::EigenResidual {
        residual: f64::INFINITY,
        tol: tol::EIGEN_RESIDUAL,
    })
}

/// Eigenstate of the single-site `X(1)Z(1)` on `C^d` for a label in `F_d`:
/// the tensor over `F_p`-coordinates of coordinate eigenstates. Verified to
/// residual below [`tol::EIGEN_RESIDUAL`], with the projection fallback on
/// failure.
pub fn single_site_eigenstate(f: &FieldSpec, label: FieldElement) -> Result<StateVector> {
    let coords = f.coeffs(label);
    let state = site_state_from_coords(f, &coords, false)?;
    let residual = site_eigen_residual(f, &state)?;
    if residual < tol::EIGEN_RESIDUAL {
        return Ok(state);
    }
    let state = site_state_from_coords(f, &coords, true)?;
    let residual = site_eigen_residual(f, &state)?;
    if residual < tol::EIGEN_RESIDUAL {
        Ok(state)
    } else {
        Err(Error::EigenResidual {
            residual,
            tol: tol::EIGEN_RESIDUAL,
        })
    }
}

fn site_state_from_coords(f: &FieldSpec, coords: &[u32], projected: bool) -> Result<StateVector> {
    let p = f.p();
    let f_p = if f.m() == 1 {
        f.clone()
    } else {
        FieldSpec::prime(p)?
    };
    // Amplitude at basis label y is the product over coordinates of the
    // coordinate-state amplitudes at y's base-p digits.
    let d = f.order() as usize;
    let coord_states: Vec<StateVector> = coords
        .iter()
        .map(|&k| {
            if projected {
                coordinate_eigenstate_projected(&f_p, k)
            } else {
                Ok(coordinate_eigenstate(p, k))
            }
        })
        .collect::<Result<_>>()?;
    let mut amps = Vec::with_capacity(d);
    for y in 0..d {
        let mut digits = y;
        let mut a = Complex64::new(1.0, 0.0);
        for cs in &coord_states {
            a *= cs.amps()[digits % p as usize];
            digits /= p as usize;
        }
        amps.push(a);
    }
    Ok(StateVector::new(amps))
}

fn site_eigen_residual(f: &FieldSpec, state: &StateVector) -> Result<f64> {
    let one = f.one();
    let xz = ErrorOp::new(
        f,
        0,
        FieldVector::unit(1, 0, one),
        FieldVector::unit(1, 0, one),
    )?;
    let image = state.apply(f, &xz)?;
    let lambda = state.inner(&image);
    Ok(image.sub(&state.scaled(lambda)).norm())
}

/// The reflexive stabilizer of `C` with respect to `C1`: generators
/// `D_{a,a}` for `a` in a basis of `C^⊥` and `D_{b,0}` for `b` in a basis
/// of `C1`, all mutually commuting.
#[derive(Debug, Clone)]
pub struct ReflexiveStabilizer {
    luc: LucSpec,
    c_perp: LinearSubspace,
    c1_perp: LinearSubspace,
    /// Span of the generator parameter pairs inside `F_d^{2n}`.
    param_span: LinearSubspace,
}

impl ReflexiveStabilizer {
    pub fn new(f: &FieldSpec, luc: LucSpec) -> Result<ReflexiveStabilizer> {
        let n = luc.n();
        let c_perp = luc.c().orthogonal_complement(f)?;
        let c1_perp = luc.c1().orthogonal_complement(f)?;
        let mut pairs: Vec<(FieldVector, FieldVector)> = Vec::new();
        for v in c_perp.basis() {
            pairs.push((v.clone(), v.clone()));
        }
        for w in luc.c1().basis() {
            pairs.push((w.clone(), FieldVector::zero(n)));
        }
        for (i, (a1, b1)) in pairs.iter().enumerate() {
            for (a2, b2) in pairs.iter().skip(i + 1) {
                if f.symplectic_star((a1, b1), (a2, b2))? != 0 {
                    return Err(Error::ConsistencyError(
                        "stabilizer generators do not commute".into(),
                    ));
                }
            }
        }
        let rows: Vec<FieldVector> = pairs.iter().map(|(a, b)| f.vconcat(a, b)).collect();
        let param_span = LinearSubspace::from_generators(f, 2 * n, &rows)?;
        Ok(ReflexiveStabilizer {
            luc,
            c_perp,
            c1_perp,
            param_span,
        })
    }

    pub fn luc(&self) -> &LucSpec {
        &self.luc
    }
    pub fn c_perp(&self) -> &LinearSubspace {
        &self.c_perp
    }
    pub fn c1_perp(&self) -> &LinearSubspace {
        &self.c1_perp
    }
    /// Diagonal-generator parameters: a basis of `C^⊥`.
    pub fn gen_diag(&self) -> &[FieldVector] {
        self.c_perp.basis()
    }
    /// Flip-generator parameters: a basis of `C1`.
    pub fn gen_flip(&self) -> &[FieldVector] {
        self.luc.c1().basis()
    }

    /// All generators as error operators (`D_{a,a}` then `D_{b,0}`).
    pub fn generator_ops(&self, f: &FieldSpec) -> Result<Vec<ErrorOp>> {
        let n = self.luc.n();
        let mut out = Vec::new();
        for v in self.gen_diag() {
            out.push(ErrorOp::new(f, 0, v.clone(), v.clone())?);
        }
        for w in self.gen_flip() {
            out.push(ErrorOp::new(f, 0, w.clone(), FieldVector::zero(n))?);
        }
        Ok(out)
    }

    /// Stabilizer membership by parameters (phase ignored): `(a,b)` lies in
    /// the span of the generator parameter pairs.
    pub fn contains_params(&self, f: &FieldSpec, a: &FieldVector, b: &FieldVector) -> Result<bool> {
        self.param_span.contains(f, &f.vconcat(a, b))
    }

    pub fn contains(&self, f: &FieldSpec, op: &ErrorOp) -> Result<bool> {
        self.contains_params(f, op.flip(), op.phase())
    }

    /// Centralizer membership by parameters: `a − b ∈ C` and `b ∈ C1^⊥`.
    /// Agrees with commuting against every generator.
    pub fn centralizer_contains_params(
        &self,
        f: &FieldSpec,
        a: &FieldVector,
        b: &FieldVector,
    ) -> Result<bool> {
        Ok(self.luc.c().contains(f, &f.vsub(a, b)?)? && self.c1_perp.contains(f, b)?)
    }

    pub fn centralizer_contains(&self, f: &FieldSpec, op: &ErrorOp) -> Result<bool> {
        self.centralizer_contains_params(f, op.flip(), op.phase())
    }
}

/// A built reflexive code: orthonormal codewords labeled by the
/// lexicographically minimal representatives of the cosets of `C1` in `C`,
/// plus the shared diagonal-generator eigenvalues.
#[derive(Debug, Clone)]
pub struct ReflexiveCode {
    stabilizer: ReflexiveStabilizer,
    labels: Vec<FieldVector>,
    codewords: Vec<StateVector>,
    diag_eigenvalues: Vec<Complex64>,
}

impl ReflexiveCode {
    pub fn stabilizer(&self) -> &ReflexiveStabilizer {
        &self.stabilizer
    }
    pub fn labels(&self) -> &[FieldVector] {
        &self.labels
    }
    pub fn codewords(&self) -> &[StateVector] {
        &self.codewords
    }
    /// Joint eigenvalue of each diagonal generator on the code space.
    pub fn diag_eigenvalues(&self) -> &[Complex64] {
        &self.diag_eigenvalues
    }
    pub fn logical_dimension(&self) -> usize {
        self.stabilizer.luc().logical_dimension()
    }
}

/// Build the codewords of `R_C^{C1}` and verify orthonormality and the
/// eigenvector structure.
pub fn build_codewords(f: &FieldSpec, luc: &LucSpec) -> Result<ReflexiveCode> {
    let n = luc.n();
    let dim = checked_dim(f, n, STATE_DIM_CAP)? as u64;
    let k = luc.logical_dimension();
    let codeword_count = f.order().pow(k as u32);
    if dim.saturating_mul(codeword_count) > CODE_AMPLITUDE_CAP {
        return Err(Error::DimensionCap {
            what: "code amplitudes d^n · d^k",
            needed: dim.saturating_mul(codeword_count),
            cap: CODE_AMPLITUDE_CAP,
        });
    }
    let stabilizer = ReflexiveStabilizer::new(f, luc.clone())?;

    let site_states: Vec<StateVector> = f
        .elements()
        .map(|e| single_site_eigenstate(f, e))
        .collect::<Result<_>>()?;

    // Lexicographically minimal representative per coset of C1 in C.
    let c1_elems = luc.c1().elements(f)?;
    let mut reps: Vec<FieldVector> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in luc.c().elements(f)? {
        let rep_ix = c1_elems
            .iter()
            .map(|c1| f.vindex(&f.vadd(&v, c1).unwrap()))
            .min()
            .unwrap();
        if seen.insert(rep_ix) {
            reps.push(f.vector_from_index(rep_ix, n));
        }
    }
    reps.sort();
    if reps.len() as u64 != codeword_count {
        return Err(Error::ConsistencyError(format!(
            "expected {codeword_count} cosets, found {}",
            reps.len()
        )));
    }

    let mut codewords = Vec::with_capacity(reps.len());
    for rep in &reps {
        let mut psi = StateVector::new(vec![Complex64::new(1.0, 0.0)]);
        for i in 0..n {
            psi = psi.tensor(&site_states[rep.get(i).encoding() as usize]);
        }
        let mut phi = StateVector::new(vec![Complex64::new(0.0, 0.0); dim as usize]);
        for c1 in &c1_elems {
            let flip = ErrorOp::new(f, 0, c1.clone(), FieldVector::zero(n))?;
            phi = phi.add(&psi.apply(f, &flip)?);
        }
        codewords.push(phi.normalized());
    }

    // Gram matrix must be the identity.
    let mut deviation = 0.0f64;
    for (i, ci) in codewords.iter().enumerate() {
        for (j, cj) in codewords.iter().enumerate() {
            let g = ci.inner(cj);
            let target = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            deviation = deviation.max((g - target).norm());
        }
    }
    if deviation >= tol::ORTHONORMALITY {
        return Err(Error::NonOrthogonal { deviation });
    }

    // Flip generators: fixed points with eigenvalue exactly 1.
    for w in stabilizer.gen_flip() {
        let op = ErrorOp::new(f, 0, w.clone(), FieldVector::zero(n))?;
        for cw in &codewords {
            let residual = cw.apply(f, &op)?.sub(cw).norm();
            if residual >= tol::EIGEN_RESIDUAL {
                return Err(Error::EigenResidual {
                    residual,
                    tol: tol::EIGEN_RESIDUAL,
                });
            }
        }
    }

    // Diagonal generators: joint eigenvectors with one shared eigenvalue.
    let mut diag_eigenvalues = Vec::new();
    for v in stabilizer.gen_diag() {
        let op = ErrorOp::new(f, 0, v.clone(), v.clone())?;
        let lambda = codewords[0].inner(&codewords[0].apply(f, &op)?);
        for cw in &codewords {
            let residual = cw.apply(f, &op)?.sub(&cw.scaled(lambda)).norm();
            if residual >= tol::EIGEN_RESIDUAL {
                return Err(Error::EigenResidual {
                    residual,
                    tol: tol::EIGEN_RESIDUAL,
                });
            }
        }
        diag_eigenvalues.push(lambda);
    }

    Ok(ReflexiveCode {
        stabilizer,
        labels: reps,
        codewords,
        diag_eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(f: &FieldSpec, vals: &[u64]) -> FieldVector {
        FieldVector::new(vals.iter().map(|&v| f.element(v).unwrap()).collect())
    }

    fn subspace(f: &FieldSpec, n: usize, gens: &[&[u64]]) -> LinearSubspace {
        let gens: Vec<FieldVector> = gens.iter().map(|g| fv(f, g)).collect();
        LinearSubspace::from_generators(f, n, &gens).unwrap()
    }

    #[test]
    fn qubit_site_eigenstates_match_hadamard_conjugates() {
        let f2 = FieldSpec::prime(2).unwrap();
        let s0 = single_site_eigenstate(&f2, f2.zero()).unwrap();
        let s1 = single_site_eigenstate(&f2, f2.one()).unwrap();
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((s0.amps()[0] - Complex64::new(0.0, inv_sqrt2)).norm() < 1e-12);
        assert!((s0.amps()[1] - Complex64::new(inv_sqrt2, 0.0)).norm() < 1e-12);
        assert!((s1.amps()[0] - Complex64::new(0.0, -inv_sqrt2)).norm() < 1e-12);
        assert!((s1.amps()[1] - Complex64::new(inv_sqrt2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn qutrit_site_eigenstate_closed_form() {
        let f3 = FieldSpec::prime(3).unwrap();
        let s0 = single_site_eigenstate(&f3, f3.zero()).unwrap();
        let w = root_of_unity(3, 1);
        let inv_sqrt3 = 1.0 / 3.0f64.sqrt();
        assert!((s0.amps()[0] - Complex64::new(inv_sqrt3, 0.0)).norm() < 1e-12);
        assert!((s0.amps()[1] - Complex64::new(inv_sqrt3, 0.0)).norm() < 1e-12);
        assert!((s0.amps()[2] - w * inv_sqrt3).norm() < 1e-12);
    }

    #[test]
    fn site_eigenstates_agree_with_projection_fallback() {
        // The closed form and the Fourier projector must produce the same
        // one-dimensional eigenspaces.
        for f in [
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(3).unwrap(),
            FieldSpec::prime(5).unwrap(),
        ] {
            for kappa in 0..f.p() {
                let closed = coordinate_eigenstate(f.p(), kappa);
                let projected = coordinate_eigenstate_projected(&f, kappa).unwrap();
                let overlap = closed.inner(&projected).norm();
                assert!((overlap - 1.0).abs() < 1e-9, "κ={kappa} p={}", f.p());
            }
        }
    }

    #[test]
    fn f4_site_eigenstates_are_orthonormal_eigenvectors() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let states: Vec<StateVector> = f4
            .elements()
            .map(|e| single_site_eigenstate(&f4, e).unwrap())
            .collect();
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let g = a.inner(b).norm();
                if i == j {
                    assert!((g - 1.0).abs() < 1e-10);
                } else {
                    assert!(g < 1e-10);
                }
            }
        }
    }

    fn correlated_spec(f: &FieldSpec) -> LucSpec {
        let c = subspace(f, 3, &[&[1, 0, 0], &[0, 0, 1]]);
        let c1 = subspace(f, 3, &[&[1, 0, 1]]);
        LucSpec::new(f, c, c1).unwrap()
    }

    #[test]
    fn stabilizer_membership_for_the_correlated_example() {
        let f2 = FieldSpec::prime(2).unwrap();
        let stab = ReflexiveStabilizer::new(&f2, correlated_spec(&f2)).unwrap();
        assert!(stab.contains(&f2, &ErrorOp::identity(3)).unwrap());
        assert!(stab
            .contains_params(&f2, &fv(&f2, &[1, 0, 1]), &FieldVector::zero(3))
            .unwrap());
        assert!(!stab
            .contains_params(&f2, &fv(&f2, &[1, 0, 0]), &fv(&f2, &[0, 1, 0]))
            .unwrap());
    }

    #[test]
    fn centralizer_agrees_with_generator_commutation() {
        let f2 = FieldSpec::prime(2).unwrap();
        let specs = vec![
            correlated_spec(&f2),
            LucSpec::new(
                &f2,
                LinearSubspace::full(&f2, 3),
                subspace(&f2, 3, &[&[0, 0, 1]]),
            )
            .unwrap(),
            LucSpec::new(&f2, subspace(&f2, 2, &[&[1, 1]]), LinearSubspace::zero(2)).unwrap(),
        ];
        for luc in specs {
            let n = luc.n();
            let stab = ReflexiveStabilizer::new(&f2, luc).unwrap();
            let gens = stab.generator_ops(&f2).unwrap();
            let count = 2u64.pow(n as u32);
            for ai in 0..count {
                for bi in 0..count {
                    let a = f2.vector_from_index(ai, n);
                    let b = f2.vector_from_index(bi, n);
                    let op = ErrorOp::new(&f2, 0, a.clone(), b.clone()).unwrap();
                    let via_params = stab.centralizer_contains_params(&f2, &a, &b).unwrap();
                    let via_comm = gens.iter().all(|g| op.commutes(&f2, g).unwrap());
                    assert_eq!(via_params, via_comm, "params ({ai},{bi})");
                    // Stabilizer membership implies centralizer membership.
                    if stab.contains_params(&f2, &a, &b).unwrap() {
                        assert!(via_params);
                    }
                }
            }
        }
    }

    #[test]
    fn centralizer_examples_on_the_full_cube() {
        let f2 = FieldSpec::prime(2).unwrap();
        let luc = LucSpec::new(
            &f2,
            LinearSubspace::full(&f2, 3),
            subspace(&f2, 3, &[&[0, 0, 1]]),
        )
        .unwrap();
        let stab = ReflexiveStabilizer::new(&f2, luc).unwrap();
        let ones = fv(&f2, &[1, 1, 1]);
        let zero = FieldVector::zero(3);
        // Y^⊗3 fails the phase-side condition: 111 ∉ C1^⊥.
        assert!(!stab.centralizer_contains_params(&f2, &ones, &ones).unwrap());
        // X^⊗3 commutes with the single flip generator X_3.
        assert!(stab.centralizer_contains_params(&f2, &ones, &zero).unwrap());
        // ... but lies outside the stabilizer.
        assert!(!stab.contains_params(&f2, &ones, &zero).unwrap());
    }

    #[test]
    fn correlated_example_codewords_are_orthonormal_joint_eigenvectors() {
        let f2 = FieldSpec::prime(2).unwrap();
        let code = build_codewords(&f2, &correlated_spec(&f2)).unwrap();
        assert_eq!(code.codewords().len(), 2);
        assert_eq!(code.logical_dimension(), 1);
        assert_eq!(code.codewords()[0].dim(), 8);
        // Flip by any C1 element leaves each codeword unchanged.
        let flip = ErrorOp::new(&f2, 0, fv(&f2, &[1, 0, 1]), FieldVector::zero(3)).unwrap();
        for cw in code.codewords() {
            let moved = cw.apply(&f2, &flip).unwrap();
            assert!(moved.sub(cw).norm() < 1e-10);
        }
    }

    #[test]
    fn trivial_code_with_c1_equal_c_has_one_codeword() {
        let f2 = FieldSpec::prime(2).unwrap();
        let c = subspace(&f2, 2, &[&[1, 1]]);
        let luc = LucSpec::new(&f2, c.clone(), c).unwrap();
        let code = build_codewords(&f2, &luc).unwrap();
        assert_eq!(code.codewords().len(), 1);
        assert_eq!(code.logical_dimension(), 0);
    }

    #[test]
    fn four_state_code_has_four_codewords_in_dim_256() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let c = subspace(&f4, 4, &[&[1, 2, 1, 0], &[2, 1, 1, 1]]);
        assert_eq!(c.dim(), 2);
        let c1 = subspace(&f4, 4, &[&[2, 1, 1, 1]]);
        let luc = LucSpec::new(&f4, c, c1).unwrap();
        assert_eq!(luc.logical_dimension(), 1);
        let code = build_codewords(&f4, &luc).unwrap();
        assert_eq!(code.codewords().len(), 4);
        assert_eq!(code.codewords()[0].dim(), 256);
    }
}
