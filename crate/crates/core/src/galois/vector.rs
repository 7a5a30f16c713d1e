use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};

/// An element of `F_d^n`. Serves as vertex label, error parameter, and
/// codeword label alike.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldVector(Vec<FieldElement>);

impl FieldVector {
    pub fn new(entries: Vec<FieldElement>) -> FieldVector {
        FieldVector(entries)
    }

    pub fn zero(n: usize) -> FieldVector {
        FieldVector(vec![FieldElement::ZERO; n])
    }

    /// `α·e_i`: zero everywhere except `alpha` at position `i`.
    pub fn unit(n: usize, i: usize, alpha: FieldElement) -> FieldVector {
        let mut v = FieldVector::zero(n);
        v.0[i] = alpha;
        v
    }

    /// All-ones vector.
    pub fn ones(n: usize) -> FieldVector {
        FieldVector(vec![FieldElement::ONE; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.0[i]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    /// Hamming weight: the number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }
}

impl FieldSpec {
    fn check_len(&self, a: &FieldVector, b: &FieldVector) -> Result<()> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        Ok(())
    }

    pub fn vadd(&self, a: &FieldVector, b: &FieldVector) -> Result<FieldVector> {
        self.check_len(a, b)?;
        Ok(FieldVector(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.add(x, y))
                .collect(),
        ))
    }

    pub fn vsub(&self, a: &FieldVector, b: &FieldVector) -> Result<FieldVector> {
        self.check_len(a, b)?;
        Ok(FieldVector(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.sub(x, y))
                .collect(),
        ))
    }

    pub fn vneg(&self, a: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().map(|&x| self.neg(x)).collect())
    }

    pub fn vscale(&self, y: FieldElement, a: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().map(|&x| self.mul(y, x)).collect())
    }

    /// `F_d`-valued inner product `⟨a,b⟩ = Σ aᵢbᵢ`.
    pub fn inner_fd(&self, a: &FieldVector, b: &FieldVector) -> Result<FieldElement> {
        self.check_len(a, b)?;
        Ok(a.0
            .iter()
            .zip(&b.0)
            .fold(self.zero(), |acc, (&x, &y)| self.add(acc, self.mul(x, y))))
    }

    /// `F_p`-valued form `χ(a,b) = Σ aᵢ*bᵢ mod p`; coincides with
    /// [`FieldSpec::inner_fd`] on prime fields.
    pub fn chi(&self, a: &FieldVector, b: &FieldVector) -> Result<u32> {
        self.check_len(a, b)?;
        Ok(a.0
            .iter()
            .zip(&b.0)
            .map(|(&x, &y)| self.star(x, y))
            .sum::<u32>()
            % self.p())
    }

    /// Symplectic product `(a,b) ⋆ (c,d) = χ(b,c) − χ(a,d) mod p`.
    pub fn symplectic_star(
        &self,
        ab: (&FieldVector, &FieldVector),
        cd: (&FieldVector, &FieldVector),
    ) -> Result<u32> {
        let (a, b) = ab;
        let (c, d) = cd;
        Ok((self.chi(b, c)? + self.p() - self.chi(a, d)?) % self.p())
    }

    /// Canonical index of `v` in `{0, …, d^n − 1}`: the base-`d` numeral read
    /// left to right. Lexicographic vector order equals numeric index order.
    pub fn vindex(&self, v: &FieldVector) -> u64 {
        v.0.iter()
            .fold(0u64, |acc, e| acc * self.order() + e.encoding())
    }

    /// Inverse of [`FieldSpec::vindex`].
    pub fn vector_from_index(&self, mut index: u64, n: usize) -> FieldVector {
        let mut entries = vec![FieldElement::ZERO; n];
        for e in entries.iter_mut().rev() {
            *e = FieldElement((index % self.order()) as u32);
            index /= self.order();
        }
        FieldVector(entries)
    }

    /// Concatenation `(a | b)`, used for span checks in `F_d^{2n}`.
    pub fn vconcat(&self, a: &FieldVector, b: &FieldVector) -> FieldVector {
        FieldVector(a.0.iter().chain(&b.0).copied().collect())
    }
}
