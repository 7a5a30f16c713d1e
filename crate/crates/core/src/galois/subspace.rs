use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec, FieldVector, ENUM_CAP};

/// An `F_d`-linear subspace of `F_d^n`, held as a basis in reduced row
/// echelon form: pivot columns strictly increasing, pivots equal to 1,
/// zeros above and below each pivot. The zero subspace has an empty basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    n: usize,
    basis: Vec<FieldVector>,
}

impl LinearSubspace {
    /// Span of the given generators, canonicalized by Gaussian elimination.
    pub fn from_generators(
        f: &FieldSpec,
        n: usize,
        gens: &[FieldVector],
    ) -> Result<LinearSubspace> {
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
        }
        let mut rows: Vec<FieldVector> = gens.to_vec();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(r) = (rank..rows.len()).find(|&r| !rows[r].get(col).is_zero()) else {
                continue;
            };
            rows.swap(rank, r);
            let inv = f.inv(rows[rank].get(col))?;
            rows[rank] = f.vscale(inv, &rows[rank]);
            for r2 in 0..rows.len() {
                if r2 != rank && !rows[r2].get(col).is_zero() {
                    let factor = rows[r2].get(col);
                    let scaled = f.vscale(factor, &rows[rank]);
                    rows[r2] = f.vsub(&rows[r2], &scaled)?;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        Ok(LinearSubspace { n, basis: rows })
    }

    pub fn zero(n: usize) -> LinearSubspace {
        LinearSubspace {
            n,
            basis: Vec::new(),
        }
    }

    pub fn full(f: &FieldSpec, n: usize) -> LinearSubspace {
        let basis = (0..n).map(|i| FieldVector::unit(n, i, f.one())).collect();
        LinearSubspace { n, basis }
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FieldVector] {
        &self.basis
    }

    /// Number of elements, `d^dim`.
    pub fn element_count(&self, f: &FieldSpec) -> u64 {
        f.order().pow(self.dim() as u32)
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, f: &FieldSpec, v: &FieldVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        let mut rem = v.clone();
        for b in &self.basis {
            let pivot = b.entries().iter().position(|e| !e.is_zero()).unwrap();
            let c = rem.get(pivot);
            if !c.is_zero() {
                rem = f.vsub(&rem, &f.vscale(c, b))?;
            }
        }
        Ok(rem.is_zero())
    }

    pub fn is_subspace_of(&self, f: &FieldSpec, other: &LinearSubspace) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(f, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All `d^dim` elements in lexicographic coefficient order. Errors above
    /// the enumeration cap.
    pub fn elements(&self, f: &FieldSpec) -> Result<Vec<FieldVector>> {
        let count = self.element_count(f);
        if count > ENUM_CAP {
            return Err(Error::DimensionCap {
                what: "subspace enumeration",
                needed: count,
                cap: ENUM_CAP,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let d = f.order();
        for mut code in 0..count {
            let mut v = FieldVector::zero(self.n);
            for b in self.basis.iter().rev() {
                let coef = FieldElement((code % d) as u32);
                code /= d;
                if !coef.is_zero() {
                    v = f.vadd(&v, &f.vscale(coef, b))?;
                }
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Orthogonal complement with respect to the `F_d` inner product:
    /// the null space of the basis matrix.
    pub fn orthogonal_complement(&self, f: &FieldSpec) -> Result<LinearSubspace> {
        let n = self.n;
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|b| b.entries().iter().position(|e| !e.is_zero()).unwrap())
            .collect();
        let mut gens = Vec::new();
        for j in 0..n {
            if pivots.contains(&j) {
                continue;
            }
            // Free column j: set v_j = 1, solve pivot coordinates.
            let mut v = FieldVector::unit(n, j, f.one());
            for (row, &pc) in self.basis.iter().zip(&pivots) {
                let mut entries: Vec<FieldElement> = v.entries().to_vec();
                entries[pc] = f.neg(row.get(j));
                v = FieldVector::new(entries);
            }
            gens.push(v);
        }
        LinearSubspace::from_generators(f, n, &gens)
    }

    /// Minimum Hamming weight over nonzero elements, by full enumeration.
    pub fn weight(&self, f: &FieldSpec) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::EmptyWeight);
        }
        let mut best = self.n + 1;
        for v in self.elements(f)? {
            if !v.is_zero() {
                best = best.min(v.weight());
            }
        }
        Ok(best)
    }

    /// Minimum Hamming weight over elements of `self` that lie outside
    /// `other`; `None` when the set difference is empty.
    pub fn weight_outside(&self, f: &FieldSpec, other: &LinearSubspace) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        for v in self.elements(f)? {
            if !other.contains(f, &v)? {
                best = Some(best.map_or(v.weight(), |b| b.min(v.weight())));
            }
        }
        Ok(best)
    }
}
