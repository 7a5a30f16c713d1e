//! Error avoidance graphs and LUC graphs on the vertex set `F_d^n`,
//! component analysis, edge-set algebra, and DOT export.
//!
//! Both graph kinds share one representation: a set of unordered simple
//! edges plus a set of looped vertices, with vertices named by their
//! canonical indices. The vertex universe is always all of `F_d^n` and is
//! never materialized.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, FieldVector, LinearSubspace};
use crate::pauli::ErrorSet;

/// Vertex-count cap for materialized graphs.
pub const VERTEX_CAP: u64 = 1 << 20;
/// Cap on materialized simple-edge count for LUC graphs. Admits the complete
/// graph on 4096 vertices, the largest instance the traversal oracle checks.
pub const EDGE_CAP: u64 = 1 << 24;
/// Vertex-count cap for DOT export.
pub const DOT_CAP: u64 = 1 << 12;

/// A connecting subspace `C` together with the loop-selecting subspace
/// `C1 ⊆ C`. Defines both the LUC graph `G_C^{C1}` and the reflexive
/// stabilizer code `R_C^{C1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucSpec {
    c: LinearSubspace,
    c1: LinearSubspace,
}

impl LucSpec {
    pub fn new(f: &FieldSpec, c: LinearSubspace, c1: LinearSubspace) -> Result<LucSpec> {
        if c.ambient_n() != c1.ambient_n() {
            return Err(Error::LengthMismatch {
                expected: c.ambient_n(),
                got: c1.ambient_n(),
            });
        }
        if !c1.is_subspace_of(f, &c)? {
            return Err(Error::ConsistencyError("C1 is not a subspace of C".into()));
        }
        Ok(LucSpec { c, c1 })
    }

    pub fn n(&self) -> usize {
        self.c.ambient_n()
    }
    pub fn c(&self) -> &LinearSubspace {
        &self.c
    }
    pub fn c1(&self) -> &LinearSubspace {
        &self.c1
    }

    /// Logical qudit count `k = dim C − dim C1`.
    pub fn logical_dimension(&self) -> usize {
        self.c.dim() - self.c1.dim()
    }
}

/// A graph on `F_d^n`: simple edges stored with the smaller canonical index
/// first, loops stored as looped vertices. Simple edges and loops are
/// disjoint by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QeccGraph {
    d: u64,
    n: usize,
    simple: BTreeSet<(u64, u64)>,
    loops: BTreeSet<u64>,
}

impl QeccGraph {
    pub fn empty(f: &FieldSpec, n: usize) -> QeccGraph {
        QeccGraph {
            d: f.order(),
            n,
            simple: BTreeSet::new(),
            loops: BTreeSet::new(),
        }
    }

    /// Assemble a graph from explicit edge and loop sets. Simple-edge pairs
    /// are canonicalized to (min, max); degenerate pairs become loops.
    pub fn from_parts(
        d: u64,
        n: usize,
        simple: BTreeSet<(u64, u64)>,
        loops: BTreeSet<u64>,
    ) -> QeccGraph {
        let mut g = QeccGraph {
            d,
            n,
            simple: BTreeSet::new(),
            loops,
        };
        for (u, v) in simple {
            g.insert_pair(u, v);
        }
        g
    }

    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn vertex_count(&self) -> u64 {
        self.d.pow(self.n as u32)
    }
    pub fn simple_edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.simple
    }
    pub fn loops(&self) -> &BTreeSet<u64> {
        &self.loops
    }

    fn insert_pair(&mut self, u: u64, v: u64) {
        if u == v {
            self.loops.insert(u);
        } else {
            self.simple.insert((u.min(v), u.max(v)));
        }
    }

    pub fn has_simple_edge(&self, u: u64, v: u64) -> bool {
        self.simple.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_loop(&self, v: u64) -> bool {
        self.loops.contains(&v)
    }

    fn check_compatible(&self, other: &QeccGraph) -> Result<()> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::SpecMismatch(format!(
                "graphs on d={} n={} and d={} n={}",
                self.d, self.n, other.d, other.n
            )));
        }
        Ok(())
    }

    /// Intersection of simple-edge sets and of loop sets.
    pub fn edge_intersection(&self, other: &QeccGraph) -> Result<QeccGraph> {
        self.check_compatible(other)?;
        Ok(QeccGraph {
            d: self.d,
            n: self.n,
            simple: self.simple.intersection(&other.simple).copied().collect(),
            loops: self.loops.intersection(&other.loops).copied().collect(),
        })
    }

    fn label(&self, mut ix: u64) -> String {
        let mut digits = vec![0u64; self.n];
        for d in digits.iter_mut().rev() {
            *d = ix % self.d;
            ix /= self.d;
        }
        digits
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Connected component of `v` under simple edges, lexicographically
    /// sorted.
    pub fn component_of(&self, f: &FieldSpec, v: &FieldVector) -> Vec<FieldVector> {
        let start = f.vindex(v);
        let mut adj: HashMap<u64, Vec<u64>> = HashMap::new();
        for &(a, b) in &self.simple {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            if let Some(nbrs) = adj.get(&u) {
                for &w in nbrs {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.iter()
            .map(|&ix| f.vector_from_index(ix, self.n))
            .collect()
    }

    /// DOT rendering with loops drawn as double-periphery nodes and the
    /// optional highlight graph's edges colored. Output is deterministic.
    pub fn export_dot(&self, highlight: Option<&QeccGraph>) -> Result<String> {
        if self.vertex_count() > DOT_CAP {
            return Err(Error::DimensionCap {
                what: "DOT export vertices",
                needed: self.vertex_count(),
                cap: DOT_CAP,
            });
        }
        if let Some(h) = highlight {
            self.check_compatible(h)?;
        }
        let mut out = String::from("graph qecc {\n  node [shape=circle];\n");
        for ix in 0..self.vertex_count() {
            let mut attrs: Vec<String> = Vec::new();
            if self.loops.contains(&ix) {
                attrs.push("peripheries=2".into());
                // Loops shared with the highlight graph stand out.
                if highlight.is_some_and(|h| h.loops.contains(&ix)) {
                    attrs.push("color=red".into());
                }
            }
            let attr_str = if attrs.is_empty() {
                String::new()
            } else {
                format!(" [{}]", attrs.join(", "))
            };
            out.push_str(&format!("  \"{}\"{};\n", self.label(ix), attr_str));
        }
        for &(u, v) in &self.simple {
            let colored = highlight.is_some_and(|h| h.has_simple_edge(u, v));
            let attr = if colored { " [color=red]" } else { "" };
            out.push_str(&format!(
                "  \"{}\" -- \"{}\"{};\n",
                self.label(u),
                self.label(v),
                attr
            ));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// Graph of the conjugate errors of `E`: each conjugate `ω^κ D_{a,b}` adds
/// the edge `(a, b)` (a loop when `a = b`), phases ignored.
pub fn build_avoidance_graph(f: &FieldSpec, errors: &ErrorSet) -> Result<QeccGraph> {
    let mut g = QeccGraph::empty(f, errors.n());
    for conj in errors.conjugate_set(f)?.ops() {
        g.insert_pair(f.vindex(conj.flip()), f.vindex(conj.phase()));
    }
    Ok(g)
}

/// LUC graph `G_C^{C1}`: simple edges `{a, a+c}` for `c ∈ C \ {0}`, loops on
/// `C1^⊥`.
pub fn build_luc_graph(f: &FieldSpec, luc: &LucSpec) -> Result<QeccGraph> {
    let n = luc.n();
    let vertices = (f.order() as u128).pow(n as u32);
    if vertices > VERTEX_CAP as u128 {
        return Err(Error::DimensionCap {
            what: "LUC graph vertices",
            needed: u64::MAX,
            cap: VERTEX_CAP,
        });
    }
    let vertices = vertices as u64;
    let connect = luc.c().elements(f)?;
    let edge_estimate = vertices.saturating_mul(connect.len() as u64 - 1) / 2;
    if edge_estimate > EDGE_CAP {
        return Err(Error::DimensionCap {
            what: "LUC graph edges",
            needed: edge_estimate,
            cap: EDGE_CAP,
        });
    }
    // The simple edges are exactly all pairs within each coset of C, so
    // walk cosets and emit every edge once.
    let mut pairs: Vec<(u64, u64)> = Vec::with_capacity(edge_estimate as usize);
    let mut assigned = vec![false; vertices as usize];
    for start in 0..vertices {
        if assigned[start as usize] {
            continue;
        }
        let rep = f.vector_from_index(start, n);
        let mut coset: Vec<u64> = connect
            .iter()
            .map(|c| Ok(f.vindex(&f.vadd(&rep, c)?)))
            .collect::<Result<_>>()?;
        coset.sort_unstable();
        for &v in &coset {
            assigned[v as usize] = true;
        }
        for (i, &u) in coset.iter().enumerate() {
            for &v in coset.iter().skip(i + 1) {
                pairs.push((u, v));
            }
        }
    }
    pairs.sort_unstable();
    let mut g = QeccGraph::empty(f, n);
    g.simple = pairs.into_iter().collect();
    for v in luc.c1().orthogonal_complement(f)?.elements(f)? {
        g.loops.insert(f.vindex(&v));
    }
    Ok(g)
}

/// Component count of the LUC graph: `d^{n − dim C}`, cross-validated by
/// traversal (with a completeness check per component) on small instances.
pub fn count_components(f: &FieldSpec, luc: &LucSpec) -> Result<u64> {
    let n = luc.n();
    let formula = f.order().pow((n - luc.c().dim()) as u32);
    if (f.order() as u128).pow(n as u32) <= 4096 {
        let g = build_luc_graph(f, luc)?;
        let traversed = traverse_and_verify_complete(f, &g)?;
        if traversed != formula {
            return Err(Error::StructureMismatch(format!(
                "component formula gives {formula}, traversal found {traversed}"
            )));
        }
    }
    Ok(formula)
}

/// BFS component count over simple edges; errors unless every component is
/// complete.
pub fn traverse_and_verify_complete(f: &FieldSpec, g: &QeccGraph) -> Result<u64> {
    let _ = f;
    let vertices = g.vertex_count() as usize;
    let mut adj: Vec<Vec<u64>> = vec![Vec::new(); vertices];
    for &(a, b) in &g.simple {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    let mut seen = vec![false; vertices];
    let mut components = 0u64;
    for start in 0..vertices as u64 {
        if seen[start as usize] {
            continue;
        }
        components += 1;
        let mut comp = vec![start];
        seen[start as usize] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        // Complete means every member's degree covers the whole component.
        for &u in &comp {
            let deg = adj[u as usize].len();
            if deg != comp.len() - 1 {
                return Err(Error::StructureMismatch(format!(
                    "component of {start} has size {} but vertex {u} has degree {deg}",
                    comp.len()
                )));
            }
        }
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::ErrorOp;

    fn fv(f: &FieldSpec, vals: &[u64]) -> FieldVector {
        FieldVector::new(vals.iter().map(|&v| f.element(v).unwrap()).collect())
    }

    fn subspace(f: &FieldSpec, n: usize, gens: &[&[u64]]) -> LinearSubspace {
        let gens: Vec<FieldVector> = gens.iter().map(|g| fv(f, g)).collect();
        LinearSubspace::from_generators(f, n, &gens).unwrap()
    }

    fn correlated_error_set(f: &FieldSpec) -> ErrorSet {
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
    fn avoidance_graph_of_correlated_example() {
        let f2 = FieldSpec::prime(2).unwrap();
        let g = build_avoidance_graph(&f2, &correlated_error_set(&f2)).unwrap();
        let edges: Vec<(u64, u64)> = g.simple_edges().iter().copied().collect();
        assert_eq!(edges, vec![(0b010, 0b100), (0b011, 0b101)]);
        let loops: Vec<u64> = g.loops().iter().copied().collect();
        assert_eq!(loops, vec![0b000, 0b001, 0b110]);
    }

    #[test]
    fn avoidance_graph_of_identity_only() {
        let f2 = FieldSpec::prime(2).unwrap();
        let e = ErrorSet::new(&f2, 2, vec![ErrorOp::identity(2)]).unwrap();
        let g = build_avoidance_graph(&f2, &e).unwrap();
        assert!(g.simple_edges().is_empty());
        assert_eq!(g.loops().iter().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn avoidance_graph_of_fully_correlated_noise() {
        let f2 = FieldSpec::prime(2).unwrap();
        for n in [3usize, 4] {
            let e = ErrorSet::fully_correlated(&f2, n).unwrap();
            let g = build_avoidance_graph(&f2, &e).unwrap();
            let all_ones = (1 << n) - 1;
            assert_eq!(
                g.simple_edges().iter().copied().collect::<Vec<_>>(),
                vec![(0, all_ones)]
            );
            assert_eq!(
                g.loops().iter().copied().collect::<Vec<_>>(),
                vec![0, all_ones]
            );
        }
    }

    #[test]
    fn luc_graph_of_diagonal_line_in_f3() {
        let f3 = FieldSpec::prime(3).unwrap();
        let c = subspace(&f3, 2, &[&[1, 1]]);
        let luc = LucSpec::new(&f3, c, LinearSubspace::zero(2)).unwrap();
        let g = build_luc_graph(&f3, &luc).unwrap();
        // Three complete triangles; loops everywhere.
        assert_eq!(g.simple_edges().len(), 9);
        assert_eq!(g.loops().len(), 9);
        assert_eq!(count_components(&f3, &luc).unwrap(), 3);
        let comp = g.component_of(&f3, &fv(&f3, &[0, 0]));
        let idxs: Vec<u64> = comp.iter().map(|v| f3.vindex(v)).collect();
        assert_eq!(idxs, vec![0, 4, 8]); // 00, 11, 22
                                         // DOT: 9 nodes, 9 edges, loops rendered as double peripheries.
        let dot = g.export_dot(None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert_eq!(dot.matches("peripheries=2").count(), 9);
    }

    #[test]
    fn luc_graph_connecting_zero_subspace_has_no_edges() {
        let f2 = FieldSpec::prime(2).unwrap();
        let luc = LucSpec::new(&f2, LinearSubspace::zero(2), LinearSubspace::zero(2)).unwrap();
        let g = build_luc_graph(&f2, &luc).unwrap();
        assert!(g.simple_edges().is_empty());
        assert_eq!(g.loops().len(), 4);
        assert_eq!(count_components(&f2, &luc).unwrap(), 4);
        let comp = g.component_of(&f2, &fv(&f2, &[1, 0]));
        assert_eq!(comp.len(), 1);
    }

    #[test]
    fn correlated_luc_graph_and_intersection() {
        let f2 = FieldSpec::prime(2).unwrap();
        let c = subspace(&f2, 3, &[&[1, 0, 0], &[0, 0, 1]]);
        let c1 = subspace(&f2, 3, &[&[1, 0, 1]]);
        let luc = LucSpec::new(&f2, c, c1).unwrap();
        assert_eq!(luc.logical_dimension(), 1);
        let g = build_luc_graph(&f2, &luc).unwrap();
        assert_eq!(
            g.loops().iter().copied().collect::<Vec<_>>(),
            vec![0b000, 0b010, 0b101, 0b111]
        );
        assert_eq!(count_components(&f2, &luc).unwrap(), 2);
        let comp = g.component_of(&f2, &fv(&f2, &[0, 1, 0]));
        let idxs: Vec<u64> = comp.iter().map(|v| f2.vindex(v)).collect();
        assert_eq!(idxs, vec![0b010, 0b011, 0b110, 0b111]);

        // Against the avoidance graph the only common edge is the loop at 0.
        let avoid = build_avoidance_graph(&f2, &correlated_error_set(&f2)).unwrap();
        let common = g.edge_intersection(&avoid).unwrap();
        assert!(common.simple_edges().is_empty());
        assert_eq!(common.loops().iter().copied().collect::<Vec<_>>(), vec![0]);
        // Intersection is idempotent.
        assert_eq!(g.edge_intersection(&g).unwrap(), g);

        // DOT for the avoidance graph: 8 vertices, 2 edges, 3 looped nodes.
        let dot = avoid.export_dot(None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert_eq!(dot.matches("peripheries=2").count(), 3);
        assert_eq!(dot.matches("\"0,1,0\"").count(), 2); // node line + edge line
    }

    #[test]
    fn full_space_common_edges_for_fully_correlated() {
        let f2 = FieldSpec::prime(2).unwrap();
        let c = LinearSubspace::full(&f2, 3);
        let c1 = subspace(&f2, 3, &[&[0, 0, 1]]);
        let luc = LucSpec::new(&f2, c, c1).unwrap();
        assert_eq!(count_components(&f2, &luc).unwrap(), 1);
        let g = build_luc_graph(&f2, &luc).unwrap();
        let avoid =
            build_avoidance_graph(&f2, &ErrorSet::fully_correlated(&f2, 3).unwrap()).unwrap();
        let common = g.edge_intersection(&avoid).unwrap();
        assert_eq!(
            common.simple_edges().iter().copied().collect::<Vec<_>>(),
            vec![(0b000, 0b111)]
        );
        // Loop at all-ones is excluded: 111 is not in C1^⊥.
        assert_eq!(common.loops().iter().copied().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn avoidance_graph_ignores_phases() {
        let f2 = FieldSpec::prime(2).unwrap();
        let base = correlated_error_set(&f2);
        let rephased: Vec<ErrorOp> = base
            .ops()
            .iter()
            .enumerate()
            .map(|(i, op)| {
                ErrorOp::new(
                    &f2,
                    (op.kappa() + i as u32) % 4,
                    op.flip().clone(),
                    op.phase().clone(),
                )
                .unwrap()
            })
            .collect();
        let rephased = ErrorSet::new(&f2, 3, rephased).unwrap();
        assert_eq!(
            build_avoidance_graph(&f2, &base).unwrap(),
            build_avoidance_graph(&f2, &rephased).unwrap()
        );
    }

    #[test]
    fn intersection_is_commutative_and_associative() {
        let f2 = FieldSpec::prime(2).unwrap();
        let avoid = build_avoidance_graph(&f2, &correlated_error_set(&f2)).unwrap();
        let luc_a = build_luc_graph(
            &f2,
            &LucSpec::new(
                &f2,
                subspace(&f2, 3, &[&[1, 0, 0], &[0, 0, 1]]),
                subspace(&f2, 3, &[&[1, 0, 1]]),
            )
            .unwrap(),
        )
        .unwrap();
        let luc_b = build_luc_graph(
            &f2,
            &LucSpec::new(&f2, LinearSubspace::full(&f2, 3), LinearSubspace::zero(3)).unwrap(),
        )
        .unwrap();
        let ab = avoid.edge_intersection(&luc_a).unwrap();
        let ba = luc_a.edge_intersection(&avoid).unwrap();
        assert_eq!(ab, ba);
        let abc1 = ab.edge_intersection(&luc_b).unwrap();
        let abc2 = avoid
            .edge_intersection(&luc_a.edge_intersection(&luc_b).unwrap())
            .unwrap();
        assert_eq!(abc1, abc2);
    }

    #[test]
    fn intersection_rejects_mismatched_graphs() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let g2 = QeccGraph::empty(&f2, 2);
        let g3 = QeccGraph::empty(&f3, 2);
        assert!(matches!(
            g2.edge_intersection(&g3),
            Err(Error::SpecMismatch(_))
        ));
    }
}
