//! Heuristic synthesis of `(C, C1)` pairs that correct a given error set,
//! plus the minimal-physical-qudit counting bound.
//!
//! The heuristic follows the avoidance-graph recipe: (S1) build the graph
//! of conjugate errors; (S2) greedily grow a connecting set `C0` whose LUC
//! graph avoids the simple edges, scanning candidate generators in
//! lexicographic order with one restart from each weight-1 vector; (S3)
//! enumerate extensions `C ⊇ C0` and loop selectors `C1 ⊆ C` within a
//! fixed budget, certify each pair under the configured rule, and keep the
//! best by encoding rate. Candidate evaluation is gather-then-select, so
//! results are deterministic regardless of scan interleaving.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldVector, LinearSubspace};
use crate::graph::LucSpec;
use crate::pauli::ErrorSet;
use crate::verify::{check_corollary, check_general_theorem, check_main_theorem, Verdict};

/// Cap on `d^n` for any search.
pub const SEARCH_DIM_CAP: u64 = 1 << 16;
/// Cap on `d^n` for exhaustive subspace enumeration.
pub const EXHAUSTIVE_DIM_CAP: u64 = 1 << 12;
/// Budget of `(C, C1)` certifications before the search gives up.
pub const CANDIDATE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Greedy,
    Exhaustive,
}

/// Which certification rule a search result must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RequireRule {
    Corollary,
    MainTheorem,
    GeneralTheorem,
}

impl RequireRule {
    pub fn name(self) -> &'static str {
        match self {
            RequireRule::Corollary => "corollary",
            RequireRule::MainTheorem => "main",
            RequireRule::GeneralTheorem => "general",
        }
    }

    pub fn run(self, f: &FieldSpec, luc: &LucSpec, errors: &ErrorSet) -> Result<Verdict> {
        match self {
            RequireRule::Corollary => check_corollary(f, luc, errors),
            RequireRule::MainTheorem => check_main_theorem(f, luc, errors),
            RequireRule::GeneralTheorem => check_general_theorem(f, luc, errors),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub max_n_for_exhaustive: usize,
    pub require: RequireRule,
    pub seed_generators: Vec<FieldVector>,
}

impl SearchConfig {
    pub fn greedy(require: RequireRule) -> SearchConfig {
        SearchConfig {
            strategy: Strategy::Greedy,
            max_n_for_exhaustive: 12,
            require,
            seed_generators: Vec::new(),
        }
    }

    pub fn exhaustive(require: RequireRule) -> SearchConfig {
        SearchConfig {
            strategy: Strategy::Exhaustive,
            ..SearchConfig::greedy(require)
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub luc: LucSpec,
    pub k: usize,
    pub certification: Verdict,
    pub trace: Vec<String>,
}

struct Candidate {
    k: usize,
    c1_dim: usize,
    c_key: Vec<u64>,
    c1_key: Vec<u64>,
    luc: LucSpec,
    verdict: Verdict,
}

impl Candidate {
    fn rank(&self) -> (std::cmp::Reverse<usize>, usize, Vec<u64>, Vec<u64>) {
        (
            std::cmp::Reverse(self.k),
            self.c1_dim,
            self.c_key.clone(),
            self.c1_key.clone(),
        )
    }
}

fn basis_key(f: &FieldSpec, s: &LinearSubspace) -> Vec<u64> {
    s.basis().iter().map(|v| f.vindex(v)).collect()
}

fn literal(_f: &FieldSpec, v: &FieldVector) -> String {
    v.entries()
        .iter()
        .map(|e| e.encoding().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Find a certified `(C, C1)` for the error set, or [`Error::NotFound`].
pub fn heuristic_search(
    f: &FieldSpec,
    errors: &ErrorSet,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    let n = errors.n();
    let dim = (f.order() as u128).pow(n as u32);
    if dim > SEARCH_DIM_CAP as u128 {
        return Err(Error::DimensionCap {
            what: "search space d^n",
            needed: u64::MAX,
            cap: SEARCH_DIM_CAP,
        });
    }
    let mut trace = vec![format!(
        "S0 error set: {} operators on n={n}, d={}",
        errors.len(),
        f.order()
    )];

    // S1: simple-edge differences and loop vertices of the avoidance graph.
    let mut diffs: BTreeSet<u64> = BTreeSet::new();
    let mut loops: BTreeSet<u64> = BTreeSet::new();
    let mut edge_seen: BTreeSet<(u64, u64)> = BTreeSet::new();
    for conj in errors.conjugate_set(f)?.ops() {
        let (a, b) = (conj.flip(), conj.phase());
        let (ia, ib) = (f.vindex(a), f.vindex(b));
        if ia == ib {
            loops.insert(ia);
        } else if edge_seen.insert((ia.min(ib), ia.max(ib))) {
            diffs.insert(f.vindex(&f.vsub(a, b)?));
            diffs.insert(f.vindex(&f.vsub(b, a)?));
        }
    }
    trace.push(format!(
        "S1 avoidance graph: {} simple edges, {} loops",
        edge_seen.len(),
        loops.len()
    ));

    let mut budget = CANDIDATE_BUDGET;
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut seen_pairs: HashSet<(Vec<u64>, Vec<u64>)> = HashSet::new();

    match cfg.strategy {
        Strategy::Greedy => {
            // One pass with the configured seeds, plus a restart seeded from
            // each weight-1 vector.
            let mut passes: Vec<Vec<FieldVector>> = vec![cfg.seed_generators.clone()];
            for i in 0..n {
                for alpha in f.elements().skip(1) {
                    let mut seeds = cfg.seed_generators.clone();
                    seeds.push(FieldVector::unit(n, i, alpha));
                    passes.push(seeds);
                }
            }
            for (pass_ix, seeds) in passes.iter().enumerate() {
                let c0 = greedy_connecting_set(f, n, &diffs, seeds, pass_ix, &mut trace)?;
                extend_and_certify(
                    f,
                    errors,
                    cfg,
                    &c0,
                    &mut candidates,
                    &mut seen_pairs,
                    &mut budget,
                )?;
            }
        }
        Strategy::Exhaustive => {
            if dim > EXHAUSTIVE_DIM_CAP as u128 || n > cfg.max_n_for_exhaustive {
                return Err(Error::DimensionCap {
                    what: "exhaustive search d^n",
                    needed: if dim > u64::MAX as u128 {
                        u64::MAX
                    } else {
                        dim as u64
                    },
                    cap: EXHAUSTIVE_DIM_CAP,
                });
            }
            trace.push("S2/S3 exhaustive subspace enumeration".to_string());
            let all_c = enumerate_subspaces(f, n, &mut budget)?;
            for c in all_c {
                certify_with_selectors(
                    f,
                    errors,
                    cfg,
                    &c,
                    usize::MAX,
                    &mut candidates,
                    &mut seen_pairs,
                    &mut budget,
                )?;
            }
        }
    }

    trace.push(format!(
        "S3 certified {} candidate pairs under rule {}",
        candidates.len(),
        cfg.require.name()
    ));
    let best = candidates
        .into_iter()
        .min_by_key(Candidate::rank)
        .ok_or(Error::NotFound)?;
    trace.push(format!(
        "S3 selected C={{{}}} C1={{{}}} k={} rule={}",
        best.luc
            .c()
            .basis()
            .iter()
            .map(|v| literal(f, v))
            .collect::<Vec<_>>()
            .join("; "),
        best.luc
            .c1()
            .basis()
            .iter()
            .map(|v| literal(f, v))
            .collect::<Vec<_>>()
            .join("; "),
        best.k,
        cfg.require.name()
    ));
    Ok(SearchResult {
        k: best.k,
        luc: best.luc,
        certification: best.verdict,
        trace,
    })
}

/// S2: greedily admit lexicographic candidates whose span stays clear of the
/// avoidance-edge differences.
fn greedy_connecting_set(
    f: &FieldSpec,
    n: usize,
    diffs: &BTreeSet<u64>,
    seeds: &[FieldVector],
    pass_ix: usize,
    trace: &mut Vec<String>,
) -> Result<LinearSubspace> {
    let total = f.order().pow(n as u32);
    let mut span: HashSet<u64> = HashSet::from([0]);
    let mut basis: Vec<FieldVector> = Vec::new();
    let mut admitted: Vec<String> = Vec::new();
    let mut rejected = 0usize;

    let try_admit =
        |v: &FieldVector, span: &mut HashSet<u64>, basis: &mut Vec<FieldVector>| -> Result<bool> {
            if span.contains(&f.vindex(v)) {
                return Ok(false);
            }
            let mut fresh: Vec<u64> = Vec::new();
            for &s_ix in span.iter() {
                let s = f.vector_from_index(s_ix, n);
                for y in f.elements().skip(1) {
                    let w_ix = f.vindex(&f.vadd(&s, &f.vscale(y, v))?);
                    if diffs.contains(&w_ix) {
                        return Ok(false);
                    }
                    fresh.push(w_ix);
                }
            }
            span.extend(fresh);
            basis.push(v.clone());
            Ok(true)
        };

    for seed in seeds {
        if try_admit(seed, &mut span, &mut basis)? {
            admitted.push(literal(f, seed));
        } else {
            rejected += 1;
        }
    }
    for ix in 1..total {
        let v = f.vector_from_index(ix, n);
        if try_admit(&v, &mut span, &mut basis)? {
            admitted.push(literal(f, &v));
        } else if !span.contains(&ix) {
            rejected += 1;
        }
    }
    let c0 = LinearSubspace::from_generators(f, n, &basis)?;
    trace.push(format!(
        "S2 pass {pass_ix}: admitted [{}], C0 dim {} ({rejected} candidates rejected)",
        admitted.join(" "),
        c0.dim(),
    ));
    Ok(c0)
}

/// S3: extensions of `C0` by at most two dimensions, each paired with loop
/// selectors of dimension at most two.
fn extend_and_certify(
    f: &FieldSpec,
    errors: &ErrorSet,
    cfg: &SearchConfig,
    c0: &LinearSubspace,
    candidates: &mut Vec<Candidate>,
    seen_pairs: &mut HashSet<(Vec<u64>, Vec<u64>)>,
    budget: &mut u64,
) -> Result<()> {
    let n = errors.n();
    let total = f.order().pow(n as u32);
    let mut extensions: Vec<LinearSubspace> = vec![c0.clone()];
    let mut seen_ext: HashSet<Vec<u64>> = HashSet::from([basis_key(f, c0)]);

    let mut level: Vec<LinearSubspace> = vec![c0.clone()];
    for _ in 0..2 {
        let mut next = Vec::new();
        for base in &level {
            for ix in 1..total {
                let v = f.vector_from_index(ix, n);
                if base.contains(f, &v)? {
                    continue;
                }
                let mut gens = base.basis().to_vec();
                gens.push(v);
                let ext = LinearSubspace::from_generators(f, n, &gens)?;
                if seen_ext.insert(basis_key(f, &ext)) {
                    extensions.push(ext.clone());
                    next.push(ext);
                }
            }
        }
        level = next;
    }

    for c in &extensions {
        certify_with_selectors(f, errors, cfg, c, 2, candidates, seen_pairs, budget)?;
    }
    Ok(())
}

/// Certify `(C, C1)` for every `C1 ⊆ C` up to the given dimension bound.
#[allow(clippy::too_many_arguments)]
fn certify_with_selectors(
    f: &FieldSpec,
    errors: &ErrorSet,
    cfg: &SearchConfig,
    c: &LinearSubspace,
    max_c1_dim: usize,
    candidates: &mut Vec<Candidate>,
    seen_pairs: &mut HashSet<(Vec<u64>, Vec<u64>)>,
    budget: &mut u64,
) -> Result<()> {
    let selectors = subspaces_of(f, c, max_c1_dim.min(c.dim()), budget)?;
    for c1 in selectors {
        let key = (basis_key(f, c), basis_key(f, &c1));
        if !seen_pairs.insert(key) {
            continue;
        }
        if *budget == 0 {
            return Err(Error::WorkCap {
                estimated: CANDIDATE_BUDGET + 1,
                cap: CANDIDATE_BUDGET,
            });
        }
        *budget -= 1;
        let luc = LucSpec::new(f, c.clone(), c1.clone())?;
        let verdict = cfg.require.run(f, &luc, errors)?;
        if verdict.correctable {
            candidates.push(Candidate {
                k: luc.logical_dimension(),
                c1_dim: c1.dim(),
                c_key: basis_key(f, c),
                c1_key: basis_key(f, &c1),
                luc,
                verdict,
            });
        }
    }
    Ok(())
}

/// All subspaces of `c` with dimension at most `max_dim`, deduplicated by
/// canonical basis, sorted by dimension then basis key.
fn subspaces_of(
    f: &FieldSpec,
    c: &LinearSubspace,
    max_dim: usize,
    budget: &mut u64,
) -> Result<Vec<LinearSubspace>> {
    let elems = c.elements(f)?;
    let mut out: Vec<LinearSubspace> = vec![LinearSubspace::zero(c.ambient_n())];
    let mut seen: HashSet<Vec<u64>> = HashSet::from([Vec::new()]);
    let mut level: Vec<LinearSubspace> = out.clone();
    for _ in 0..max_dim {
        let mut next = Vec::new();
        for base in &level {
            for v in &elems {
                if v.is_zero() || base.contains(f, v)? {
                    continue;
                }
                if *budget == 0 {
                    return Err(Error::WorkCap {
                        estimated: CANDIDATE_BUDGET + 1,
                        cap: CANDIDATE_BUDGET,
                    });
                }
                *budget = budget.saturating_sub(1);
                let mut gens = base.basis().to_vec();
                gens.push(v.clone());
                let sub = LinearSubspace::from_generators(f, c.ambient_n(), &gens)?;
                if seen.insert(basis_key(f, &sub)) {
                    out.push(sub.clone());
                    next.push(sub);
                }
            }
        }
        level = next;
    }
    out.sort_by_key(|s| (s.dim(), basis_key(f, s)));
    Ok(out)
}

/// All subspaces of `F_d^n`.
fn enumerate_subspaces(f: &FieldSpec, n: usize, budget: &mut u64) -> Result<Vec<LinearSubspace>> {
    subspaces_of(f, &LinearSubspace::full(f, n), n, budget)
}

/// Least `n` with `d·(2(d−1)n + 1) ≤ d^n`: enough orthogonal room for every
/// single-qudit flip/phase error image of `d` embedded states. This is the
/// exact counting bound for `d = 4`; other `d` extrapolate the same
/// argument.
pub fn minimal_physical_qudits(d: u64) -> u64 {
    assert!(d >= 2);
    let mut n: u64 = 1;
    loop {
        let lhs = (d as u128) * (2 * (d as u128 - 1) * n as u128 + 1);
        let rhs = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if lhs <= rhs {
            return n;
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::ErrorOp;
    use crate::verify::kl_numeric;

    fn fv(f: &FieldSpec, vals: &[u64]) -> FieldVector {
        FieldVector::new(vals.iter().map(|&v| f.element(v).unwrap()).collect())
    }

    fn correlated_errors(f: &FieldSpec) -> ErrorSet {
        ErrorSet::new(
            f,
            3,
            vec![
                ErrorOp::identity(3),
                ErrorOp::new(f, 0, fv(f, &[1, 0, 0]), fv(f, &[0, 1, 0])).unwrap(),
                ErrorOp::new(f, 0, fv(f, &[0, 0, 1]), fv(f, &[0, 0, 1])).unwrap(),
                ErrorOp::new(f, 0, fv(f, &[0, 1, 0]), fv(f, &[1, 0, 0])).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn correlated_search_finds_a_rate_one_code() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = correlated_errors(&f2);
        let result =
            heuristic_search(&f2, &errors, &SearchConfig::greedy(RequireRule::Corollary)).unwrap();
        assert!(result.k >= 1);
        assert!(result.certification.correctable);
        // The result re-verifies under its rule and numerically.
        let again = RequireRule::Corollary
            .run(&f2, &result.luc, &errors)
            .unwrap();
        assert!(again.correctable);
        let code = crate::reflexive::build_codewords(&f2, &result.luc).unwrap();
        assert!(kl_numeric(&f2, &code, &errors, None).unwrap().correctable);
    }

    #[test]
    fn identity_only_error_set_yields_full_rate() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = ErrorSet::new(&f2, 3, vec![ErrorOp::identity(3)]).unwrap();
        let result =
            heuristic_search(&f2, &errors, &SearchConfig::greedy(RequireRule::Corollary)).unwrap();
        assert_eq!(result.k, 3);
        assert_eq!(result.luc.c1().dim(), 0);
    }

    #[test]
    fn fully_correlated_rates_by_rule() {
        let f2 = FieldSpec::prime(2).unwrap();
        // The all-ones flip conjugate forces stabilizer degeneracy, so the
        // non-degenerate main rule tops out one logical qubit below the
        // general rule on odd n.
        for (n, rule, expect_k) in [
            (3usize, RequireRule::GeneralTheorem, 2usize),
            (3, RequireRule::MainTheorem, 1),
            (4, RequireRule::GeneralTheorem, 2),
            (4, RequireRule::MainTheorem, 2),
            (5, RequireRule::GeneralTheorem, 4),
        ] {
            let errors = ErrorSet::fully_correlated(&f2, n).unwrap();
            let result = heuristic_search(&f2, &errors, &SearchConfig::greedy(rule)).unwrap();
            assert_eq!(result.k, expect_k, "n={n} rule={}", rule.name());
            let code = crate::reflexive::build_codewords(&f2, &result.luc).unwrap();
            assert!(kl_numeric(&f2, &code, &errors, None).unwrap().correctable);
        }
    }

    #[test]
    fn search_is_deterministic() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = correlated_errors(&f2);
        let cfg = SearchConfig::greedy(RequireRule::MainTheorem);
        let r1 = heuristic_search(&f2, &errors, &cfg).unwrap();
        let r2 = heuristic_search(&f2, &errors, &cfg).unwrap();
        assert_eq!(r1.luc, r2.luc);
        assert_eq!(r1.trace, r2.trace);
    }

    #[test]
    fn greedy_connecting_set_is_maximal() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = correlated_errors(&f2);
        let result =
            heuristic_search(&f2, &errors, &SearchConfig::greedy(RequireRule::Corollary)).unwrap();
        // Any lexicographic candidate added to the winning C would pull the
        // obstruction difference 110 into the span.
        let c = result.luc.c();
        let bad = fv(&f2, &[1, 1, 0]);
        for ix in 1..8u64 {
            let v = f2.vector_from_index(ix, 3);
            if c.contains(&f2, &v).unwrap() {
                continue;
            }
            let mut gens = c.basis().to_vec();
            gens.push(v);
            let bigger = LinearSubspace::from_generators(&f2, 3, &gens).unwrap();
            assert!(bigger.contains(&f2, &bad).unwrap());
        }
    }

    #[test]
    fn exhaustive_matches_greedy_on_small_instances() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = ErrorSet::fully_correlated(&f2, 3).unwrap();
        let greedy = heuristic_search(
            &f2,
            &errors,
            &SearchConfig::greedy(RequireRule::GeneralTheorem),
        )
        .unwrap();
        let exhaustive = heuristic_search(
            &f2,
            &errors,
            &SearchConfig::exhaustive(RequireRule::GeneralTheorem),
        )
        .unwrap();
        assert_eq!(exhaustive.k, 2);
        assert!(exhaustive.k >= greedy.k);
    }

    #[test]
    fn seeded_search_honors_the_given_generators() {
        let f2 = FieldSpec::prime(2).unwrap();
        let errors = correlated_errors(&f2);
        let mut cfg = SearchConfig::greedy(RequireRule::Corollary);
        cfg.seed_generators = vec![fv(&f2, &[1, 0, 0]), fv(&f2, &[0, 0, 1])];
        let result = heuristic_search(&f2, &errors, &cfg).unwrap();
        assert!(result.certification.correctable);
        assert!(result.k >= 1);
    }

    #[test]
    fn minimal_qudit_bound() {
        assert_eq!(minimal_physical_qudits(4), 4);
        assert_eq!(minimal_physical_qudits(2), 5);
        for d in 2..=9 {
            assert!(minimal_physical_qudits(d) >= 2);
        }
    }
}
