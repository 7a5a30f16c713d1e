//! Symbolic correctability checks and the independent numeric
//! Knill-Laflamme verifier.
//!
//! Every check quantifies over the ordered parameter pairs `(a, b)` of the
//! conjugate errors `E₁⁻¹E₂` (flip part first, phase part second; phases
//! quotiented away). A conjugate error is harmless when it lies in the
//! stabilizer or escapes the centralizer, which in parameters reads
//!
//! ```text
//! (b ∈ C^⊥ ∧ a−b ∈ C1)  ∨  a−b ∉ C  ∨  b ∉ C1^⊥
//! ```
//!
//! The rule ladder tightens from there:
//!
//! * `corollary` — the LUC and avoidance graphs share only the loop at `0`:
//!   every simple-edge conjugate has `a−b ∉ C` and every loop `a ∉ C1^⊥`;
//! * `main` — the non-degenerate escape alone: `a−b ∉ C ∨ b ∉ C1^⊥`;
//! * `general` — escape or stabilizer membership (the full condition);
//! * `symbolic` — the same condition computed from stabilizer/centralizer
//!   membership tests, asserted equal to `general`;
//! * `numeric` — dense inner products of perturbed codewords.
//!
//! `corollary ⟹ main ⟹ general ⟺ symbolic ⟹ numeric`: a certified spec
//! always passes the dense check. The symbolic checks are sufficiency
//! tests; a false verdict means "not certified", with the numeric check as
//! the decisive oracle within its caps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldVector};
use crate::graph::{build_avoidance_graph, LucSpec, QeccGraph};
use crate::pauli::{ErrorOp, ErrorSet};
use crate::reflexive::{ReflexiveCode, ReflexiveStabilizer};
use crate::tol;

/// Default operation budget for the numeric check.
pub const WORK_CAP: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Corollary,
    MainTheorem,
    GeneralTheorem,
    KnillSymbolic,
    KlNumeric,
    SingleQudit,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Corollary => "corollary",
            Rule::MainTheorem => "main",
            Rule::GeneralTheorem => "general",
            Rule::KnillSymbolic => "symbolic",
            Rule::KlNumeric => "numeric",
            Rule::SingleQudit => "single-qudit",
        }
    }
}

/// Evidence attached to a failing verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A conjugate error `D_{a,b}`, `a ≠ b`, violating the rule.
    ConjugateEdge { a: FieldVector, b: FieldVector },
    /// A conjugate error `D_{v,v}` violating the rule.
    ConjugateLoop { v: FieldVector },
    /// A subspace weight below the rule's requirement.
    WeightShortfall {
        subspace: &'static str,
        weight: usize,
        required: usize,
    },
    /// `|⟨Φ_row|E₁⁻¹E₂|Φ_col⟩|` above tolerance for distinct codewords.
    KlOffDiagonal {
        e1: usize,
        e2: usize,
        row: usize,
        col: usize,
        magnitude: f64,
    },
    /// A diagonal value straying from the mean diagonal.
    KlDiagonalSpread {
        e1: usize,
        e2: usize,
        row: usize,
        deviation: f64,
    },
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub rule: Rule,
    pub correctable: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    fn pass(rule: Rule) -> Verdict {
        Verdict {
            rule,
            correctable: true,
            witnesses: Vec::new(),
        }
    }

    fn fail(rule: Rule, witnesses: Vec<Witness>) -> Verdict {
        Verdict {
            rule,
            correctable: false,
            witnesses,
        }
    }
}

/// Ordered conjugate parameter pairs of `E`, deduplicated with phases
/// dropped, lexicographic in `(a, b)`.
fn conjugate_params(f: &FieldSpec, errors: &ErrorSet) -> Result<Vec<(FieldVector, FieldVector)>> {
    let n = errors.n();
    let mut seen = std::collections::BTreeSet::new();
    for conj in errors.conjugate_set(f)?.ops() {
        seen.insert((f.vindex(conj.flip()), f.vindex(conj.phase())));
    }
    Ok(seen
        .into_iter()
        .map(|(a, b)| (f.vector_from_index(a, n), f.vector_from_index(b, n)))
        .collect())
}

fn check_input(luc: &LucSpec, errors: &ErrorSet) -> Result<()> {
    if luc.n() != errors.n() {
        return Err(Error::SpecMismatch(format!(
            "code on {} qudits, errors on {}",
            luc.n(),
            errors.n()
        )));
    }
    Ok(())
}

fn witness_for(a: &FieldVector, b: &FieldVector) -> Witness {
    if a == b {
        Witness::ConjugateLoop { v: a.clone() }
    } else {
        Witness::ConjugateEdge {
            a: a.clone(),
            b: b.clone(),
        }
    }
}

/// Strictest rule: the LUC graph and the avoidance graph intersect exactly
/// in the loop at `0`.
pub fn check_corollary(f: &FieldSpec, luc: &LucSpec, errors: &ErrorSet) -> Result<Verdict> {
    check_input(luc, errors)?;
    let c1_perp = luc.c1().orthogonal_complement(f)?;
    let mut witnesses = Vec::new();
    for (a, b) in conjugate_params(f, errors)? {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let ok = if a == b {
            !c1_perp.contains(f, &a)?
        } else {
            !luc.c().contains(f, &f.vsub(&a, &b)?)?
        };
        if !ok {
            witnesses.push(witness_for(&a, &b));
        }
    }
    Ok(if witnesses.is_empty() {
        Verdict::pass(Rule::Corollary)
    } else {
        Verdict::fail(Rule::Corollary, witnesses)
    })
}

/// Edge-avoidance rule without degeneracy: every non-identity conjugate
/// escapes the centralizer outright (`a−b ∉ C` or `b ∉ C1^⊥`).
pub fn check_main_theorem(f: &FieldSpec, luc: &LucSpec, errors: &ErrorSet) -> Result<Verdict> {
    check_input(luc, errors)?;
    let c1_perp = luc.c1().orthogonal_complement(f)?;
    let mut witnesses = Vec::new();
    for (a, b) in conjugate_params(f, errors)? {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let escapes = !luc.c().contains(f, &f.vsub(&a, &b)?)? || !c1_perp.contains(f, &b)?;
        if !escapes {
            witnesses.push(witness_for(&a, &b));
        }
    }
    Ok(if witnesses.is_empty() {
        Verdict::pass(Rule::MainTheorem)
    } else {
        Verdict::fail(Rule::MainTheorem, witnesses)
    })
}

/// Full condition: every conjugate escapes the centralizer or sits inside
/// the stabilizer (`b ∈ C^⊥ ∧ a−b ∈ C1`). Exactly equivalent to
/// [`check_knill_symbolic`].
pub fn check_general_theorem(f: &FieldSpec, luc: &LucSpec, errors: &ErrorSet) -> Result<Verdict> {
    check_input(luc, errors)?;
    let c_perp = luc.c().orthogonal_complement(f)?;
    let c1_perp = luc.c1().orthogonal_complement(f)?;
    let mut witnesses = Vec::new();
    for (a, b) in conjugate_params(f, errors)? {
        let diff = f.vsub(&a, &b)?;
        let escapes = !luc.c().contains(f, &diff)? || !c1_perp.contains(f, &b)?;
        let in_stabilizer = c_perp.contains(f, &b)? && luc.c1().contains(f, &diff)?;
        if !(escapes || in_stabilizer) {
            witnesses.push(witness_for(&a, &b));
        }
    }
    Ok(if witnesses.is_empty() {
        Verdict::pass(Rule::GeneralTheorem)
    } else {
        Verdict::fail(Rule::GeneralTheorem, witnesses)
    })
}

/// Stabilizer-or-escape, computed through [`ReflexiveStabilizer`] membership
/// tests rather than subspace formulas.
pub fn check_knill_symbolic(f: &FieldSpec, luc: &LucSpec, errors: &ErrorSet) -> Result<Verdict> {
    check_input(luc, errors)?;
    let stab = ReflexiveStabilizer::new(f, luc.clone())?;
    let mut witnesses = Vec::new();
    for (a, b) in conjugate_params(f, errors)? {
        let ok =
            stab.contains_params(f, &a, &b)? || !stab.centralizer_contains_params(f, &a, &b)?;
        if !ok {
            witnesses.push(witness_for(&a, &b));
        }
    }
    Ok(if witnesses.is_empty() {
        Verdict::pass(Rule::KnillSymbolic)
    } else {
        Verdict::fail(Rule::KnillSymbolic, witnesses)
    })
}

/// Weight rule for arbitrary single-qudit noise: `wt(C) ≥ 3` and
/// `wt(C1^⊥) ≥ 2` guarantee correction of every single-qudit flip and
/// phase error.
pub fn check_single_qudit_corollary(f: &FieldSpec, luc: &LucSpec) -> Result<Verdict> {
    let mut witnesses = Vec::new();
    let wt_c = luc.c().weight(f)?;
    if wt_c < 3 {
        witnesses.push(Witness::WeightShortfall {
            subspace: "C",
            weight: wt_c,
            required: 3,
        });
    }
    let wt_c1_perp = luc.c1().orthogonal_complement(f)?.weight(f)?;
    if wt_c1_perp < 2 {
        witnesses.push(Witness::WeightShortfall {
            subspace: "C1^perp",
            weight: wt_c1_perp,
            required: 2,
        });
    }
    Ok(if witnesses.is_empty() {
        Verdict::pass(Rule::SingleQudit)
    } else {
        Verdict::fail(Rule::SingleQudit, witnesses)
    })
}

/// Build the single-qudit avoidance graph by brute conjugate enumeration and
/// assert it matches the closed form: loops at `0` and all weight-1
/// vertices; simple edges between distinct weight-1 vertices and from `0`
/// to every vertex of weight 1 or 2.
pub fn check_single_graph_structure(f: &FieldSpec, n: usize) -> Result<QeccGraph> {
    let brute = build_avoidance_graph(f, &ErrorSet::single_qudit(f, n)?)?;
    let count = brute.vertex_count();
    let mut simple = std::collections::BTreeSet::new();
    let mut loops = std::collections::BTreeSet::new();
    for ix in 0..count {
        let w = f.vector_from_index(ix, n).weight();
        if w <= 1 {
            loops.insert(ix);
        }
        if (1..=2).contains(&w) {
            simple.insert((0, ix));
        }
    }
    let weight_one: Vec<u64> = (0..count)
        .filter(|&ix| f.vector_from_index(ix, n).weight() == 1)
        .collect();
    for (i, &ia) in weight_one.iter().enumerate() {
        for &ib in weight_one.iter().skip(i + 1) {
            simple.insert((ia, ib));
        }
    }
    let closed = QeccGraph::from_parts(f.order(), n, simple, loops);
    if closed != brute {
        return Err(Error::StructureMismatch(format!(
            "closed form: {} edges / {} loops, brute force: {} edges / {} loops",
            closed.simple_edges().len(),
            closed.loops().len(),
            brute.simple_edges().len(),
            brute.loops().len()
        )));
    }
    Ok(brute)
}

fn thread_count() -> usize {
    std::env::var("REFLEXQEC_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
        .min(64)
}

/// Dense Knill-Laflamme check: for every ordered pair `(E₁, E₂)` from `E`,
/// off-diagonal codeword inner products of `E₁⁻¹E₂` stay below
/// [`tol::KL`] and diagonal values agree with their mean to the same
/// tolerance. Witnesses report the lexicographically first violating pair.
pub fn kl_numeric(
    f: &FieldSpec,
    code: &ReflexiveCode,
    errors: &ErrorSet,
    work_cap: Option<u64>,
) -> Result<Verdict> {
    let n = errors.n();
    if code.stabilizer().luc().n() != n {
        return Err(Error::SpecMismatch(format!(
            "code on {} qudits, errors on {n}",
            code.stabilizer().luc().n()
        )));
    }
    let dim = code.codewords()[0].dim() as u64;
    let kcount = code.codewords().len() as u64;
    let pair_count = (errors.len() * errors.len()) as u64;
    let estimated = pair_count
        .saturating_mul(kcount)
        .saturating_mul(kcount + 1)
        .saturating_mul(dim);
    let cap = work_cap.unwrap_or(WORK_CAP);
    if estimated > cap {
        return Err(Error::WorkCap { estimated, cap });
    }

    let ops = errors.ops();
    let pairs: Vec<(usize, usize)> = (0..ops.len())
        .flat_map(|i| (0..ops.len()).map(move |j| (i, j)))
        .collect();

    // Scan pairs in order; the reported witness set is the one of the
    // lexicographically first violating pair regardless of threading.
    let threads = thread_count().min(pairs.len().max(1));
    let chunk = pairs.len().div_ceil(threads);
    let mut first_violation: Option<(usize, Vec<Witness>)> = None;
    std::thread::scope(|scope| -> Result<()> {
        let mut handles = Vec::new();
        for (chunk_ix, part) in pairs.chunks(chunk).enumerate() {
            let offset = chunk_ix * chunk;
            handles.push(
                scope.spawn(move || -> Result<Option<(usize, Vec<Witness>)>> {
                    for (local, &(i, j)) in part.iter().enumerate() {
                        let witnesses = kl_check_pair(f, code, &ops[i], &ops[j], i, j)?;
                        if !witnesses.is_empty() {
                            return Ok(Some((offset + local, witnesses)));
                        }
                    }
                    Ok(None)
                }),
            );
        }
        for h in handles {
            if let Some((pair_ix, w)) = h.join().expect("kl worker panicked")? {
                if first_violation
                    .as_ref()
                    .is_none_or(|(best, _)| pair_ix < *best)
                {
                    first_violation = Some((pair_ix, w));
                }
            }
        }
        Ok(())
    })?;

    Ok(match first_violation {
        None => Verdict::pass(Rule::KlNumeric),
        Some((_, witnesses)) => Verdict::fail(Rule::KlNumeric, witnesses),
    })
}

fn kl_check_pair(
    f: &FieldSpec,
    code: &ReflexiveCode,
    e1: &ErrorOp,
    e2: &ErrorOp,
    i: usize,
    j: usize,
) -> Result<Vec<Witness>> {
    let conj = e1.inverse(f).multiply(f, e2)?;
    let images: Vec<_> = code
        .codewords()
        .iter()
        .map(|cw| cw.apply(f, &conj))
        .collect::<Result<Vec<_>>>()?;
    let kcount = code.codewords().len();
    let mut witnesses = Vec::new();
    let mut diag = Vec::with_capacity(kcount);
    for (row, cw) in code.codewords().iter().enumerate() {
        for (col, im) in images.iter().enumerate() {
            let value = cw.inner(im);
            if row == col {
                diag.push(value);
            } else if value.norm() >= tol::KL {
                witnesses.push(Witness::KlOffDiagonal {
                    e1: i,
                    e2: j,
                    row,
                    col,
                    magnitude: value.norm(),
                });
            }
        }
    }
    let mean = diag.iter().sum::<Complex64>() / diag.len() as f64;
    for (row, v) in diag.iter().enumerate() {
        let deviation = (v - mean).norm();
        if deviation >= tol::KL {
            witnesses.push(Witness::KlDiagonalSpread {
                e1: i,
                e2: j,
                row,
                deviation,
            });
        }
    }
    Ok(witnesses)
}
