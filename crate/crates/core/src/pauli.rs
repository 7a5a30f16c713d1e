//! Symbolic error-group algebra with exact phase tracking, dense matrix
//! realization, conjugate-error sets, and the named error families.
//!
//! An [`ErrorOp`] is `ω^κ D_{a,b}` with `D_{a,b} = X(a₁)Z(b₁) ⊗ … ⊗
//! X(aₙ)Z(bₙ)`, where `X(a)|x⟩ = |x+a⟩` and `Z(b)|x⟩ = ω^{b*x}|x⟩` for the
//! primitive p-th root of unity `ω`. Phases are tracked modulo `r`, where
//! `r = p` for odd `p` and `r = 4` for `p = 2`: the product `(XZ)² = −1`
//! escapes the powers of `ω = −1` alone, so qubit phases live in powers of
//! `i`. With that bookkeeping, products and inverses are exact:
//!
//! ```text
//! D_{a,b} · D_{c,d} = ω^{⟨b,c⟩} D_{a+c,b+d}
//! (ω^κ D_{a,b})⁻¹  = ω^{−κ} ω^{⟨a,b⟩} D_{−a,−b}
//! ```
//!
//! both verified entrywise against dense matrices in the test suite.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldVector};

/// Materialization cap for dense operator matrices (`d^n`).
pub const MATRIX_CAP: u64 = 1 << 14;

/// Phase order: `p` for odd `p`, `4` (powers of `i`) for `p = 2`.
pub fn phase_order(f: &FieldSpec) -> u32 {
    if f.p() == 2 {
        4
    } else {
        f.p()
    }
}

/// Scale factor from `F_p` phase exponents to `r`-units.
fn phase_scale(f: &FieldSpec) -> u32 {
    phase_order(f) / f.p()
}

/// A group element `ω_r^κ D_{a,b}` of the n-qudit error group: `a` is the
/// flip parameter, `b` the phase parameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ErrorOp {
    kappa: u32,
    a: FieldVector,
    b: FieldVector,
}

impl ErrorOp {
    pub fn new(f: &FieldSpec, kappa: u32, a: FieldVector, b: FieldVector) -> Result<ErrorOp> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        Ok(ErrorOp {
            kappa: kappa % phase_order(f),
            a,
            b,
        })
    }

    pub fn identity(n: usize) -> ErrorOp {
        ErrorOp {
            kappa: 0,
            a: FieldVector::zero(n),
            b: FieldVector::zero(n),
        }
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }
    pub fn flip(&self) -> &FieldVector {
        &self.a
    }
    pub fn phase(&self) -> &FieldVector {
        &self.b
    }
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn is_identity(&self) -> bool {
        self.kappa == 0 && self.a.is_zero() && self.b.is_zero()
    }

    fn check_same_n(&self, other: &ErrorOp) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SpecMismatch(format!(
                "operators act on {} and {} qudits",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    /// Group product; dense matrices satisfy
    /// `mat(self) · mat(other) = mat(result)` exactly.
    pub fn multiply(&self, f: &FieldSpec, other: &ErrorOp) -> Result<ErrorOp> {
        self.check_same_n(other)?;
        let r = phase_order(f);
        let s = phase_scale(f);
        let kappa = (self.kappa + other.kappa + s * f.chi(&self.b, &other.a)?) % r;
        Ok(ErrorOp {
            kappa,
            a: f.vadd(&self.a, &other.a)?,
            b: f.vadd(&self.b, &other.b)?,
        })
    }

    /// Exact group inverse, phase included.
    pub fn inverse(&self, f: &FieldSpec) -> ErrorOp {
        let r = phase_order(f);
        let s = phase_scale(f);
        let chi_ab = f.chi(&self.a, &self.b).expect("equal lengths");
        ErrorOp {
            kappa: (r - self.kappa + s * chi_ab) % r,
            a: f.vneg(&self.a),
            b: f.vneg(&self.b),
        }
    }

    /// Commutation test via the symplectic form: true iff
    /// `(a,b) ⋆ (c,d) = 0`.
    pub fn commutes(&self, f: &FieldSpec, other: &ErrorOp) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(f.symplectic_star((&self.a, &self.b), (&other.a, &other.b))? == 0)
    }

    /// Dense matrix, columns indexed by canonical basis-string encodings.
    /// A generalized permutation matrix: column `x` has its only entry at
    /// row `x + a`, with value `ω_r^κ ω^{⟨b,x⟩}`.
    pub fn matrix(&self, f: &FieldSpec) -> Result<DenseMatrix> {
        let n = self.n();
        let dim = checked_dim(f, n, MATRIX_CAP)?;
        let r = phase_order(f);
        let s = phase_scale(f);
        let mut m = DenseMatrix::zeros(dim);
        for col in 0..dim as u64 {
            let x = f.vector_from_index(col, n);
            let row = f.vindex(&f.vadd(&x, &self.a)?);
            let t = (self.kappa + s * f.chi(&self.b, &x)?) % r;
            m.set(row as usize, col as usize, root_of_unity(r, t));
        }
        Ok(m)
    }
}

/// `d^n` with a cap, as a usize dimension.
pub fn checked_dim(f: &FieldSpec, n: usize, cap: u64) -> Result<usize> {
    let dim = (f.order() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if dim > cap as u128 {
        return Err(Error::DimensionCap {
            what: "d^n",
            needed: if dim > u64::MAX as u128 {
                u64::MAX
            } else {
                dim as u64
            },
            cap,
        });
    }
    Ok(dim as usize)
}

pub fn root_of_unity(order: u32, k: u32) -> Complex64 {
    Complex64::from_polar(
        1.0,
        2.0 * std::f64::consts::PI * f64::from(k % order) / f64::from(order),
    )
}

/// An ordered, deduplicated error set. Always contains the identity.
#[derive(Debug, Clone)]
pub struct ErrorSet {
    n: usize,
    ops: Vec<ErrorOp>,
    identity_inserted: bool,
}

impl ErrorSet {
    /// Deduplicates under exact `(κ, a, b)` equality, preserving first
    /// occurrence, and inserts the identity in front when absent.
    pub fn new(f: &FieldSpec, n: usize, ops: Vec<ErrorOp>) -> Result<ErrorSet> {
        let mut seen = std::collections::HashSet::new();
        let mut out: Vec<ErrorOp> = Vec::new();
        for op in ops {
            if op.n() != n {
                return Err(Error::SpecMismatch(format!(
                    "operator on {} qudits in a set on {n}",
                    op.n()
                )));
            }
            if op.kappa() >= phase_order(f)
                || op
                    .flip()
                    .entries()
                    .iter()
                    .any(|e| e.encoding() >= f.order())
            {
                return Err(Error::SpecMismatch(
                    "operator parameters out of range for this field".into(),
                ));
            }
            if seen.insert(op.clone()) {
                out.push(op);
            }
        }
        let id = ErrorOp::identity(n);
        let identity_inserted = !out.contains(&id);
        if identity_inserted {
            out.insert(0, id);
        }
        Ok(ErrorSet {
            n,
            ops: out,
            identity_inserted,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn ops(&self) -> &[ErrorOp] {
        &self.ops
    }
    pub fn len(&self) -> usize {
        self.ops.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
    /// True when the constructor had to add the missing identity.
    pub fn identity_inserted(&self) -> bool {
        self.identity_inserted
    }

    /// The conjugate errors `{E₁⁻¹E₂}`, deduplicated exactly, in pair order.
    pub fn conjugate_set(&self, f: &FieldSpec) -> Result<ErrorSet> {
        let mut out = Vec::with_capacity(self.ops.len() * self.ops.len());
        for e1 in &self.ops {
            let inv = e1.inverse(f);
            for e2 in &self.ops {
                out.push(inv.multiply(f, e2)?);
            }
        }
        ErrorSet::new(f, self.n, out)
    }

    /// Fully correlated qubit noise `{𝟙, X^⊗n, (XZ)^⊗n, Z^⊗n}`.
    pub fn fully_correlated(f: &FieldSpec, n: usize) -> Result<ErrorSet> {
        if f.order() != 2 {
            return Err(Error::UnsupportedField(
                "fully correlated noise is defined for qubits (d = 2)".into(),
            ));
        }
        let ones = FieldVector::ones(n);
        let zero = FieldVector::zero(n);
        ErrorSet::new(
            f,
            n,
            vec![
                ErrorOp::identity(n),
                ErrorOp::new(f, 0, ones.clone(), zero.clone())?,
                ErrorOp::new(f, 0, ones.clone(), ones.clone())?,
                ErrorOp::new(f, 0, zero, ones)?,
            ],
        )
    }

    /// All single-qudit flip and phase errors
    /// `{𝟙} ∪ {D_{αeᵢ,0}} ∪ {D_{0,αeᵢ}}`, of size `2(d−1)n + 1`.
    pub fn single_qudit(f: &FieldSpec, n: usize) -> Result<ErrorSet> {
        let mut ops = vec![ErrorOp::identity(n)];
        for i in 0..n {
            for alpha in f.elements().skip(1) {
                ops.push(ErrorOp::new(
                    f,
                    0,
                    FieldVector::unit(n, i, alpha),
                    FieldVector::zero(n),
                )?);
            }
        }
        for i in 0..n {
            for alpha in f.elements().skip(1) {
                ops.push(ErrorOp::new(
                    f,
                    0,
                    FieldVector::zero(n),
                    FieldVector::unit(n, i, alpha),
                )?);
            }
        }
        ErrorSet::new(f, n, ops)
    }
}

/// Minimal dense complex matrix, row-major. Used for the matrix oracle and
/// figure-scale checks, not for bulk simulation.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> DenseMatrix {
        DenseMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex64) {
        self.data[row * self.dim + col] = v;
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = DenseMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Entrywise max |self − other|.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm of the commutator `AB − BA`.
    pub fn commutator_norm(&self, other: &DenseMatrix) -> f64 {
        self.mul(other).max_abs_diff(&other.mul(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    fn fv(f: &FieldSpec, vals: &[u64]) -> FieldVector {
        FieldVector::new(vals.iter().map(|&v| f.element(v).unwrap()).collect())
    }

    fn op(f: &FieldSpec, k: u32, a: &[u64], b: &[u64]) -> ErrorOp {
        ErrorOp::new(f, k, fv(f, a), fv(f, b)).unwrap()
    }

    #[test]
    fn qubit_pauli_matrices() {
        let f2 = FieldSpec::prime(2).unwrap();
        let x = op(&f2, 0, &[1], &[0]).matrix(&f2).unwrap();
        let z = op(&f2, 0, &[0], &[1]).matrix(&f2).unwrap();
        let one = Complex64::new(1.0, 0.0);
        assert!((x.get(0, 1) - one).norm() < tol::MATRIX_ORACLE);
        assert!((x.get(1, 0) - one).norm() < tol::MATRIX_ORACLE);
        assert!((z.get(0, 0) - one).norm() < tol::MATRIX_ORACLE);
        assert!((z.get(1, 1) + one).norm() < tol::MATRIX_ORACLE);
        // Y = iXZ.
        let y = op(&f2, 1, &[1], &[1]).matrix(&f2).unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert!((y.get(0, 1) + i).norm() < tol::MATRIX_ORACLE);
        assert!((y.get(1, 0) - i).norm() < tol::MATRIX_ORACLE);
        // Identity op → identity matrix.
        let id = ErrorOp::identity(1).matrix(&f2).unwrap();
        assert!(id.max_abs_diff(&DenseMatrix::identity(2)) < tol::MATRIX_ORACLE);
    }

    #[test]
    fn qutrit_z_is_omega_diagonal() {
        let f3 = FieldSpec::prime(3).unwrap();
        let z = op(&f3, 0, &[0], &[1]).matrix(&f3).unwrap();
        for x in 0..3u32 {
            let expect = root_of_unity(3, x);
            assert!((z.get(x as usize, x as usize) - expect).norm() < tol::MATRIX_ORACLE);
        }
    }

    #[test]
    fn zx_equals_minus_xz_on_qubits() {
        let f2 = FieldSpec::prime(2).unwrap();
        let z = op(&f2, 0, &[0], &[1]);
        let x = op(&f2, 0, &[1], &[0]);
        let zx = z.multiply(&f2, &x).unwrap();
        // ZX = −XZ: phase κ = 2 in powers of i.
        assert_eq!(zx.kappa(), 2);
        assert_eq!(zx.flip(), &fv(&f2, &[1]));
        assert_eq!(zx.phase(), &fv(&f2, &[1]));
        let oracle = z.matrix(&f2).unwrap().mul(&x.matrix(&f2).unwrap());
        assert!(zx.matrix(&f2).unwrap().max_abs_diff(&oracle) < tol::MATRIX_ORACLE);
        // e · identity = e.
        let e = zx.multiply(&f2, &ErrorOp::identity(1)).unwrap();
        assert_eq!(e, zx);
    }

    #[test]
    fn qutrit_shift_squares_without_phase() {
        let f3 = FieldSpec::prime(3).unwrap();
        let xop = op(&f3, 0, &[1], &[0]);
        let sq = xop.multiply(&f3, &xop).unwrap();
        assert_eq!(sq, op(&f3, 0, &[2], &[0]));
        let oracle = xop.matrix(&f3).unwrap().mul(&xop.matrix(&f3).unwrap());
        assert!(sq.matrix(&f3).unwrap().max_abs_diff(&oracle) < tol::MATRIX_ORACLE);
    }

    #[test]
    fn inverses_are_exact() {
        let f2 = FieldSpec::prime(2).unwrap();
        let y_like = op(&f2, 0, &[1], &[1]);
        let inv = y_like.inverse(&f2);
        // (XZ)² = −1, so the inverse carries phase −1.
        assert_eq!(inv.kappa(), 2);
        assert!(y_like.multiply(&f2, &inv).unwrap().is_identity());
        assert!(inv.multiply(&f2, &y_like).unwrap().is_identity());
        assert!(ErrorOp::identity(3).inverse(&f2).is_identity());

        let f3 = FieldSpec::prime(3).unwrap();
        let e = op(&f3, 0, &[1], &[2]);
        let inv = e.inverse(&f3);
        assert_eq!(inv.kappa(), 2); // ω² D_{2,1}
        assert_eq!(inv.flip(), &fv(&f3, &[2]));
        assert_eq!(inv.phase(), &fv(&f3, &[1]));
        let prod = inv.matrix(&f3).unwrap().mul(&e.matrix(&f3).unwrap());
        assert!(prod.max_abs_diff(&DenseMatrix::identity(3)) < tol::MATRIX_ORACLE);
    }

    #[test]
    fn commutation_matches_matrix_commutators() {
        let f2 = FieldSpec::prime(2).unwrap();
        let xx = op(&f2, 0, &[1, 1], &[0, 0]);
        let zz = op(&f2, 0, &[0, 0], &[1, 1]);
        assert!(xx.commutes(&f2, &zz).unwrap());
        assert!(
            xx.matrix(&f2)
                .unwrap()
                .commutator_norm(&zz.matrix(&f2).unwrap())
                < tol::MATRIX_ORACLE
        );
        let x = op(&f2, 0, &[1], &[0]);
        let z = op(&f2, 0, &[0], &[1]);
        assert!(!x.commutes(&f2, &z).unwrap());
        assert!(x.commutes(&f2, &x).unwrap());
    }

    #[test]
    fn multiply_agrees_with_matrices_exhaustively_small() {
        // All operator pairs at d = 2, n = 1, all 16 phase pairs; and d = 3,
        // n = 1. The full exhaustive run lives in the acceptance suite.
        for f in [FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
            let r = phase_order(&f);
            let d = f.order();
            let mut all = Vec::new();
            for k in 0..r {
                for ai in 0..d {
                    for bi in 0..d {
                        all.push(
                            ErrorOp::new(
                                &f,
                                k,
                                f.vector_from_index(ai, 1),
                                f.vector_from_index(bi, 1),
                            )
                            .unwrap(),
                        );
                    }
                }
            }
            for e1 in &all {
                for e2 in &all {
                    let sym = e1.multiply(&f, e2).unwrap().matrix(&f).unwrap();
                    let oracle = e1.matrix(&f).unwrap().mul(&e2.matrix(&f).unwrap());
                    assert!(sym.max_abs_diff(&oracle) < tol::MATRIX_ORACLE);
                }
            }
        }
    }

    #[test]
    fn fully_correlated_shape() {
        let f2 = FieldSpec::prime(2).unwrap();
        for n in [1usize, 3, 4] {
            let e = ErrorSet::fully_correlated(&f2, n).unwrap();
            assert_eq!(e.len(), 4);
            assert!(e.ops()[0].is_identity());
            assert_eq!(e.ops()[1].flip().weight(), n);
            assert_eq!(e.ops()[3].phase().weight(), n);
        }
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(matches!(
            ErrorSet::fully_correlated(&f3, 2),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn single_qudit_set_sizes() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(ErrorSet::single_qudit(&f4, 4).unwrap().len(), 25);
        let f2 = FieldSpec::prime(2).unwrap();
        let s = ErrorSet::single_qudit(&f2, 1).unwrap();
        assert_eq!(s.len(), 3);
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(ErrorSet::single_qudit(&f3, 2).unwrap().len(), 9);
    }

    #[test]
    fn conjugate_set_of_identity_is_identity() {
        let f2 = FieldSpec::prime(2).unwrap();
        let e = ErrorSet::new(&f2, 2, vec![ErrorOp::identity(2)]).unwrap();
        let c = e.conjugate_set(&f2).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.ops()[0].is_identity());
    }

    #[test]
    fn conjugate_set_params_for_correlated_example() {
        let f2 = FieldSpec::prime(2).unwrap();
        // {𝟙, D_{e1,e2}, D_{e3,e3}, D_{e2,e1}} on three qubits.
        let e = ErrorSet::new(
            &f2,
            3,
            vec![
                ErrorOp::identity(3),
                op(&f2, 0, &[1, 0, 0], &[0, 1, 0]),
                op(&f2, 0, &[0, 0, 1], &[0, 0, 1]),
                op(&f2, 0, &[0, 1, 0], &[1, 0, 0]),
            ],
        )
        .unwrap();
        let c = e.conjugate_set(&f2).unwrap();
        let params: std::collections::HashSet<(u64, u64)> = c
            .ops()
            .iter()
            .map(|o| (f2.vindex(o.flip()), f2.vindex(o.phase())))
            .collect();
        assert!(params.contains(&(0b110, 0b110)));
        assert!(params.contains(&(0b001, 0b001)));
        assert!(params.contains(&(0b100, 0b010)));
        assert!(params.contains(&(0b010, 0b100)));
        // The set is inverse-closed, exactly.
        for o in c.ops() {
            let inv = o.inverse(&f2);
            assert!(c.ops().contains(&inv));
        }
        // Fully correlated conjugates reproduce the input parameters.
        let fc = ErrorSet::fully_correlated(&f2, 3).unwrap();
        let fc2 = fc.conjugate_set(&f2).unwrap();
        let p1: std::collections::HashSet<(u64, u64)> = fc
            .ops()
            .iter()
            .map(|o| (f2.vindex(o.flip()), f2.vindex(o.phase())))
            .collect();
        let p2: std::collections::HashSet<(u64, u64)> = fc2
            .ops()
            .iter()
            .map(|o| (f2.vindex(o.flip()), f2.vindex(o.phase())))
            .collect();
        assert_eq!(p1, p2);
    }

    #[test]
    fn error_sets_always_contain_identity() {
        let f2 = FieldSpec::prime(2).unwrap();
        let s = ErrorSet::new(&f2, 2, vec![op(&f2, 0, &[1, 0], &[0, 0])]).unwrap();
        assert!(s.ops()[0].is_identity());
        assert!(s.identity_inserted());
        let s2 = ErrorSet::new(&f2, 2, vec![ErrorOp::identity(2)]).unwrap();
        assert!(!s2.identity_inserted());
    }
}
