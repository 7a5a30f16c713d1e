use crate::error::{Error, Result};

/// Largest supported field order. Keeps the internal operation tables small;
/// every practical instance here has `d ≤ 49`.
pub const MAX_FIELD_ORDER: u64 = 256;

/// An element of `F_{p^m}`, stored as its canonical integer encoding
/// `Σ αᵢ pⁱ` of the coefficient vector `(α₀, …, α_{m−1})` in the polynomial
/// basis `{1, x, …, x^{m−1}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Canonical integer encoding, a bijection onto `{0, …, d−1}`.
    pub fn encoding(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A concrete field `F_{p^m}` with its irreducible polynomial, the
/// compatibility functional linking the two inner products, and dense
/// operation tables.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    m: usize,
    d: u64,
    /// Monic irreducible, little-endian coefficients, length `m + 1`.
    irreducible: Vec<u32>,
    /// Coefficients of the functional `L` with `a*b = L(ab)`.
    compat: Vec<u32>,
    add_t: Vec<u32>,
    mul_t: Vec<u32>,
    neg_t: Vec<u32>,
    inv_t: Vec<u32>,
    star_t: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.irreducible == other.irreducible
    }
}
impl Eq for FieldSpec {}

/// Built-in degree-2 polynomials. Each has constant term `−1`, the condition
/// for the compatibility functional to exist at `m = 2`.
fn builtin_poly(p: u32, m: usize) -> Option<Vec<u32>> {
    match (p, m) {
        (2, 2) => Some(vec![1, 1, 1]), // x² + x + 1
        (3, 2) => Some(vec![2, 1, 1]), // x² + x + 2
        (5, 2) => Some(vec![4, 2, 1]), // x² + 2x + 4
        (7, 2) => Some(vec![6, 1, 1]), // x² + x + 6
        _ => None,
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FieldSpec {
    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, None)
    }

    /// `F_{p^m}` with an explicit little-endian monic irreducible polynomial
    /// of degree `m` over `F_p`, or the built-in table entry when `poly` is
    /// `None`.
    pub fn new(p: u32, m: usize, poly: Option<&[u32]>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::ConfigError(format!("p = {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::ConfigError("extension degree m must be ≥ 1".into()));
        }
        let d = (p as u64)
            .checked_pow(m as u32)
            .filter(|&d| d <= MAX_FIELD_ORDER)
            .ok_or(Error::DimensionCap {
                what: "field order d = p^m",
                needed: u64::MAX,
                cap: MAX_FIELD_ORDER,
            })?;

        let irreducible: Vec<u32> = match poly {
            Some(c) => c.to_vec(),
            None if m == 1 => vec![0, 1], // F_p[x]/(x)
            None => builtin_poly(p, m).ok_or_else(|| {
                Error::ConfigError(format!(
                    "no built-in irreducible polynomial for p = {p}, m = {m}; supply one"
                ))
            })?,
        };
        if irreducible.len() != m + 1 || irreducible[m] != 1 {
            return Err(Error::ConfigError(format!(
                "irreducible polynomial must be monic of degree exactly {m}"
            )));
        }
        if irreducible.iter().any(|&c| c >= p) {
            return Err(Error::ConfigError(
                "polynomial coefficients must lie in {0, …, p−1}".into(),
            ));
        }
        if m > 1 && !poly_is_irreducible(p, &irreducible) {
            return Err(Error::ConfigError(format!(
                "polynomial {irreducible:?} is reducible over F_{p}"
            )));
        }

        // Powers of x reduced mod the irreducible, up to x^(2m−2).
        let pow_red: Vec<Vec<u32>> = (0..=(2 * m).saturating_sub(2))
            .map(|s| {
                let mut xs = vec![0u32; s + 1];
                xs[s] = 1;
                poly_rem(p, &xs, &irreducible, m)
            })
            .collect();

        let compat = solve_compat(p, m, &pow_red).ok_or_else(|| {
            Error::ConfigError(format!(
                "no compatibility functional exists for F_{{{p}^{m}}} with polynomial \
                 {irreducible:?}: the coefficient form a*b is not expressible as L(ab)"
            ))
        })?;

        let dd = d as usize;
        let mut f = FieldSpec {
            p,
            m,
            d,
            irreducible,
            compat,
            add_t: vec![0; dd * dd],
            mul_t: vec![0; dd * dd],
            neg_t: vec![0; dd],
            inv_t: vec![0; dd],
            star_t: vec![0; dd * dd],
        };
        f.build_tables();
        Ok(f)
    }

    fn build_tables(&mut self) {
        let d = self.d as usize;
        let p = self.p;
        for u in 0..d {
            let cu = self.coeffs_of(u as u32);
            let neg: Vec<u32> = cu.iter().map(|&c| (p - c) % p).collect();
            self.neg_t[u] = self.encode(&neg);
            for v in 0..d {
                let cv = self.coeffs_of(v as u32);
                let sum: Vec<u32> = cu.iter().zip(&cv).map(|(&a, &b)| (a + b) % p).collect();
                self.add_t[u * d + v] = self.encode(&sum);
                let prod = poly_rem(p, &poly_mul(p, &cu, &cv), &self.irreducible, self.m);
                self.mul_t[u * d + v] = self.encode(&prod);
                self.star_t[u * d + v] =
                    cu.iter().zip(&cv).map(|(&a, &b)| a * b % p).sum::<u32>() % p;
            }
        }
        for u in 1..d {
            for v in 1..d {
                if self.mul_t[u * d + v] == 1 {
                    self.inv_t[u] = v as u32;
                }
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> usize {
        self.m
    }
    /// Field order `d = p^m`.
    pub fn order(&self) -> u64 {
        self.d
    }
    pub fn irreducible(&self) -> &[u32] {
        &self.irreducible
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Element from its canonical encoding.
    pub fn element(&self, enc: u64) -> Result<FieldElement> {
        if enc < self.d {
            Ok(FieldElement(enc as u32))
        } else {
            Err(Error::SpecMismatch(format!(
                "encoding {enc} out of range for field of order {}",
                self.d
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.d as u32).map(FieldElement)
    }

    /// Little-endian coefficient vector of `e` in the basis `{1, x, …}`.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        self.coeffs_of(e.0)
    }

    fn coeffs_of(&self, mut enc: u32) -> Vec<u32> {
        let mut out = vec![0u32; self.m];
        for c in out.iter_mut() {
            *c = enc % self.p;
            enc /= self.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        let mut enc = 0u32;
        for &c in coeffs.iter().rev() {
            enc = enc * self.p + c;
        }
        enc
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_t[a.0 as usize * self.d as usize + b.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_t[a.0 as usize * self.d as usize + b.0 as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_t[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero { d: self.d });
        }
        Ok(FieldElement(self.inv_t[a.0 as usize]))
    }

    /// Coefficient inner product `a*b = Σ αᵢβᵢ mod p`.
    pub fn star(&self, a: FieldElement, b: FieldElement) -> u32 {
        self.star_t[a.0 as usize * self.d as usize + b.0 as usize]
    }

    /// The functional `L` with `a*b = L(ab)`, applied to `e`.
    pub fn compat_apply(&self, e: FieldElement) -> u32 {
        self.coeffs_of(e.0)
            .iter()
            .zip(&self.compat)
            .map(|(&c, &u)| c * u % self.p)
            .sum::<u32>()
            % self.p
    }
}

fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `f`, padded to length `m`.
fn poly_rem(p: u32, a: &[u32], f: &[u32], m: usize) -> Vec<u32> {
    let mut r: Vec<u32> = a.iter().map(|&c| c % p).collect();
    let deg_f = f.len() - 1;
    while r.len() > deg_f {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - deg_f;
        if lead != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + p - lead * fc % p) % p;
            }
        }
        r.pop();
    }
    r.resize(m, 0);
    r
}

fn poly_is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Exhaustive divisor check: `f` (monic, degree m ≥ 2) is irreducible iff no
/// monic polynomial of degree `1..=m/2` divides it.
fn poly_is_irreducible(p: u32, f: &[u32]) -> bool {
    let m = f.len() - 1;
    for k in 1..=(m / 2) {
        let count = (p as u64).pow(k as u32);
        for enc in 0..count {
            let mut g = vec![0u32; k + 1];
            let mut e = enc;
            for gc in g.iter_mut().take(k) {
                *gc = (e % p as u64) as u32;
                e /= p as u64;
            }
            g[k] = 1;
            if poly_is_zero(&poly_rem(p, f, &g, k)) {
                return false;
            }
        }
    }
    true
}

/// Solve for `L` with `L(x^{i+j} mod f) = δᵢⱼ` over `F_p`; `None` when the
/// system is inconsistent (always the case for `m ≥ 3`).
fn solve_compat(p: u32, m: usize, pow_red: &[Vec<u32>]) -> Option<Vec<u32>> {
    // Rows: one equation per (i, j) with i ≤ j. Columns: u_0 … u_{m−1} | rhs.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut row = pow_red[i + j].clone();
            row.push(u32::from(i == j));
            rows.push(row);
        }
    }
    // Gaussian elimination mod p.
    let inv_mod = |a: u32| -> u32 { (1..p).find(|&b| a * b % p == 1).unwrap() };
    let mut piv_of_col: Vec<Option<usize>> = vec![None; m];
    let mut pivot_row = 0usize;
    for col in 0..m {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = inv_mod(rows[pivot_row][col]);
        for entry in rows[pivot_row].iter_mut() {
            *entry = *entry * inv % p;
        }
        let pivot = rows[pivot_row].clone();
        for (r2, row) in rows.iter_mut().enumerate() {
            if r2 != pivot_row && row[col] != 0 {
                let factor = row[col];
                for (entry, &pe) in row.iter_mut().zip(&pivot) {
                    *entry = (*entry + (p - factor) * pe) % p;
                }
            }
        }
        piv_of_col[col] = Some(pivot_row);
        pivot_row += 1;
    }
    // Inconsistent if any zero row has nonzero rhs.
    for row in &rows {
        if row[..m].iter().all(|&c| c == 0) && row[m] != 0 {
            return None;
        }
    }
    let mut u = vec![0u32; m];
    for col in 0..m {
        if let Some(r) = piv_of_col[col] {
            u[col] = rows[r][m];
        }
    }
    Some(u)
}
