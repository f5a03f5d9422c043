//! Mixed graphs: undirected edges plus directed arcs on `{0, .., n-1}`.
//!
//! The graph object is the single source of truth for adjacency; matrices
//! are derived from it. A digon (arcs both ways between the same pair) is
//! not a valid configuration in a simple mixed graph: it must be modelled
//! as an edge. Parallel adjacency (duplicate arcs, or an edge alongside an
//! arc on the same pair) is representable only behind an explicit flag.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::matrix::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("digon {0} <-> {1}: opposite arcs must be modelled as an edge")]
    Digon(usize, usize),
    #[error("edge {{{0}, {1}}} and an arc on the same pair may not coexist")]
    EdgeArcClash(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MgfError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing header line \"n <N>\"")]
    MissingHeader,
}

/// Options for [`MixedGraph::parse_mgf_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Replace each pair of opposite arcs by one edge instead of rejecting.
    pub promote_digons: bool,
    /// Accept duplicate arcs and edge/arc coexistence (multigraph input).
    pub allow_parallel_arcs: bool,
}

/// A mixed graph: edges are unordered pairs, arcs ordered pairs with
/// multiplicity (multiplicity > 1 only when `allow_parallel_arcs`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeMap<(usize, usize), usize>,
    allow_parallel_arcs: bool,
    // adjacency caches, built once at construction
    und_adj: Vec<Vec<usize>>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl MixedGraph {
    /// Simple mixed graph; enforces the digon and coexistence rules.
    pub fn simple(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, arcs, false)
    }

    /// Mixed graph with parallel arcs permitted: duplicate arcs, digons kept
    /// as arc pairs, and edge/arc coexistence are all accepted.
    pub fn with_parallel_arcs(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, arcs, true)
    }

    fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        allow_parallel_arcs: bool,
    ) -> Result<Self, GraphError> {
        let mut g = MixedGraph {
            n,
            edges: BTreeSet::new(),
            arcs: BTreeMap::new(),
            allow_parallel_arcs,
            und_adj: Vec::new(),
            out_adj: Vec::new(),
            in_adj: Vec::new(),
        };
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        for (u, v) in arcs {
            g.insert_arc(u, v)?;
        }
        g.rebuild_adjacency();
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        let key = (u.min(v), u.max(v));
        if self.edges.contains(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        if !self.allow_parallel_arcs
            && (self.arcs.contains_key(&(u, v)) || self.arcs.contains_key(&(v, u)))
        {
            return Err(GraphError::EdgeArcClash(key.0, key.1));
        }
        self.edges.insert(key);
        Ok(())
    }

    fn insert_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.allow_parallel_arcs {
            if self.arcs.contains_key(&(u, v)) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            if self.arcs.contains_key(&(v, u)) {
                return Err(GraphError::Digon(u, v));
            }
            if self.edges.contains(&(u.min(v), u.max(v))) {
                return Err(GraphError::EdgeArcClash(u.min(v), u.max(v)));
            }
        }
        *self.arcs.entry((u, v)).or_insert(0) += 1;
        Ok(())
    }

    fn rebuild_adjacency(&mut self) {
        self.und_adj = vec![Vec::new(); self.n];
        self.out_adj = vec![Vec::new(); self.n];
        self.in_adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            self.und_adj[u].push(v);
            self.und_adj[v].push(u);
        }
        for (&(u, v), &mult) in &self.arcs {
            for _ in 0..mult {
                self.out_adj[u].push(v);
                self.in_adj[v].push(u);
            }
        }
        for list in self
            .und_adj
            .iter_mut()
            .chain(self.out_adj.iter_mut())
            .chain(self.in_adj.iter_mut())
        {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn allows_parallel_arcs(&self) -> bool {
        self.allow_parallel_arcs
    }

    /// True when no arc has multiplicity above one (edge/arc coexistence and
    /// arc digons also count as non-simple; they can only arise with the
    /// parallel flag).
    pub fn is_simple(&self) -> bool {
        self.arcs.iter().all(|(&(u, v), &m)| {
            m == 1
                && !self.arcs.contains_key(&(v, u))
                && !self.edges.contains(&(u.min(v), u.max(v)))
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Arcs with multiplicity expanded.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs
            .iter()
            .flat_map(|(&a, &m)| std::iter::repeat(a).take(m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().sum()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn arc_multiplicity(&self, u: usize, v: usize) -> usize {
        self.arcs.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn und_neighbors(&self, v: usize) -> &[usize] {
        &self.und_adj[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn degree_report(&self) -> DegreeReport {
        let und: Vec<usize> = (0..self.n).map(|v| self.und_adj[v].len()).collect();
        let out: Vec<usize> = (0..self.n).map(|v| self.out_adj[v].len()).collect();
        let ind: Vec<usize> = (0..self.n).map(|v| self.in_adj[v].len()).collect();
        let totally_regular = if self.n == 0 {
            None
        } else {
            let (r, z) = (und[0], out[0]);
            let ok = und.iter().all(|&d| d == r)
                && out.iter().all(|&d| d == z)
                && ind.iter().all(|&d| d == z);
            ok.then_some((r, z))
        };
        DegreeReport {
            undirected: und,
            out: out,
            in_: ind,
            totally_regular,
        }
    }

    /// `(R, Z, A)`: symmetric edge matrix, arc matrix (with multiplicities),
    /// and their sum `A = R + Z`.
    pub fn adjacency_split(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut r = IntMatrix::zero(self.n);
        for &(u, v) in &self.edges {
            r.set(u, v, BigInt::from(1));
            r.set(v, u, BigInt::from(1));
        }
        let mut z = IntMatrix::zero(self.n);
        for (&(u, v), &m) in &self.arcs {
            z.set(u, v, BigInt::from(m));
        }
        let a = &r + &z;
        (r, z, a)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        self.adjacency_split().2
    }

    /// Adjacency matrix of the underlying undirected multigraph:
    /// `R + Z + Z^T`.
    pub fn underlying_matrix(&self) -> IntMatrix {
        let (r, z, _) = self.adjacency_split();
        &(&r + &z) + &z.transpose()
    }

    /// Reverse every arc, keep edges.
    pub fn converse(&self) -> MixedGraph {
        let mut g = self.clone();
        g.arcs = self.arcs.iter().map(|(&(u, v), &m)| ((v, u), m)).collect();
        g.rebuild_adjacency();
        g
    }

    /// Relabel vertices: vertex `v` becomes `p(v)`.
    pub fn relabel(&self, p: &crate::perm::Permutation) -> MixedGraph {
        assert_eq!(p.n(), self.n, "relabel size mismatch");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (p.apply(u), p.apply(v))).collect();
        let arcs: Vec<_> = self
            .arcs()
            .map(|(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        Self::build(self.n, edges, arcs, self.allow_parallel_arcs)
            .expect("relabelling preserves validity")
    }

    /// BFS distances honouring edges in both directions and arcs forward.
    pub fn distances(&self) -> DistanceData {
        let n = self.n;
        let mut dist = vec![INFINITE_DISTANCE; n * n];
        let mut queue = std::collections::VecDeque::new();
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            queue.clear();
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                let d = row[v];
                for &w in self.und_adj[v].iter().chain(&self.out_adj[v]) {
                    if row[w] == INFINITE_DISTANCE {
                        row[w] = d + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let disconnected = dist.iter().any(|&d| d == INFINITE_DISTANCE);
        let diameter = if disconnected {
            None
        } else {
            Some(dist.iter().copied().max().unwrap_or(0))
        };
        let sum: u64 = dist
            .iter()
            .filter(|&&d| d != INFINITE_DISTANCE)
            .map(|&d| d as u64)
            .sum();
        DistanceData {
            n,
            dist,
            diameter,
            disconnected,
            finite_sum: sum,
        }
    }

    /// Parse the MGF text format with default (strict) options.
    pub fn parse_mgf(text: &str) -> Result<MixedGraph, MgfError> {
        Self::parse_mgf_with(text, ParseOptions::default())
    }

    pub fn parse_mgf_with(text: &str, opts: ParseOptions) -> Result<MixedGraph, MgfError> {
        let mut graph: Option<MixedGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut fields = line.split_whitespace();
            let Some(tag) = fields.next() else { continue };
            let malformed = |message: String| MgfError::Malformed {
                line: line_no,
                message,
            };
            match (tag, &mut graph) {
                ("n", g @ None) => {
                    let count: usize = fields
                        .next()
                        .ok_or_else(|| malformed("expected \"n <N>\"".into()))?
                        .parse()
                        .map_err(|_| malformed("vertex count is not a number".into()))?;
                    if fields.next().is_some() {
                        return Err(malformed("trailing fields after header".into()));
                    }
                    *g = Some(MixedGraph {
                        n: count,
                        edges: BTreeSet::new(),
                        arcs: BTreeMap::new(),
                        allow_parallel_arcs: opts.allow_parallel_arcs,
                        und_adj: Vec::new(),
                        out_adj: Vec::new(),
                        in_adj: Vec::new(),
                    });
                }
                ("n", Some(_)) => {
                    return Err(malformed("second header line".into()));
                }
                ("E" | "A", None) => return Err(MgfError::MissingHeader),
                (kind @ ("E" | "A"), Some(g)) => {
                    let mut next_vertex = || -> Result<usize, MgfError> {
                        fields
                            .next()
                            .ok_or_else(|| MgfError::Malformed {
                                line: line_no,
                                message: format!("expected \"{kind} <u> <v>\""),
                            })?
                            .parse()
                            .map_err(|_| MgfError::Malformed {
                                line: line_no,
                                message: "vertex is not a number".into(),
                            })
                    };
                    let u = next_vertex()?;
                    let v = next_vertex()?;
                    if fields.next().is_some() {
                        return Err(malformed(format!("trailing fields after {kind} line")));
                    }
                    let result = if kind == "E" {
                        g.insert_edge(u, v)
                    } else if opts.promote_digons
                        && !opts.allow_parallel_arcs
                        && g.arcs.contains_key(&(v, u))
                    {
                        g.arcs.remove(&(v, u));
                        g.insert_edge(u, v)
                    } else {
                        g.insert_arc(u, v)
                    };
                    result.map_err(|source| MgfError::Graph {
                        line: line_no,
                        source,
                    })?;
                }
                _ => {
                    return Err(malformed(format!("unknown line tag {tag:?}")));
                }
            }
        }
        let mut g = graph.ok_or(MgfError::MissingHeader)?;
        g.rebuild_adjacency();
        Ok(g)
    }

    /// Serialize to MGF; parsing the output reproduces the graph exactly.
    pub fn to_mgf(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "E {u} {v}");
        }
        for (&(u, v), &m) in &self.arcs {
            for _ in 0..m {
                let _ = writeln!(out, "A {u} {v}");
            }
        }
        out
    }

    /// DOT output: undirected lines for edges, directed lines for arcs.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -> {v} [dir=none];");
        }
        for (&(u, v), &m) in &self.arcs {
            for _ in 0..m {
                let _ = writeln!(out, "  {u} -> {v};");
            }
        }
        let _ = writeln!(out, "}}");
        out
    }
}

pub const INFINITE_DISTANCE: u32 = u32::MAX;

/// Per-vertex degrees plus the totally-regular verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub undirected: Vec<usize>,
    pub out: Vec<usize>,
    pub in_: Vec<usize>,
    /// `Some((r, z))` iff every vertex has undirected degree `r`, out-degree
    /// `z`, and in-degree `z`.
    pub totally_regular: Option<(usize, usize)>,
}

/// All-pairs shortest-path data for a mixed graph.
#[derive(Debug, Clone)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    /// `None` when some ordered pair is unreachable.
    pub diameter: Option<u32>,
    pub disconnected: bool,
    finite_sum: u64,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance from `u` to `v`; `INFINITE_DISTANCE` when unreachable.
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Sum of all finite pairwise distances (including the zero diagonal).
    pub fn finite_sum(&self) -> u64 {
        self.finite_sum
    }

    /// Average distance over all n^2 ordered pairs; `None` if disconnected.
    pub fn average(&self) -> Option<f64> {
        if self.disconnected || self.n == 0 {
            None
        } else {
            Some(self.finite_sum as f64 / (self.n as f64 * self.n as f64))
        }
    }

    /// The i-distance 0/1 matrix `A_i`.
    pub fn distance_matrix(&self, i: u32) -> IntMatrix {
        IntMatrix::from_fn(self.n, |u, v| {
            if self.dist(u, v) == i && (i != INFINITE_DISTANCE) {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }

    /// 0/1 matrix marking pairs with distance at most `k`.
    pub fn reachable_within(&self, k: u32) -> IntMatrix {
        IntMatrix::from_fn(self.n, |u, v| {
            if self.dist(u, v) <= k {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_edge_graph() {
        let g = MixedGraph::parse_mgf("n 2\nE 0 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn digon_rejected_strict() {
        let err = MixedGraph::parse_mgf("n 2\nA 0 1\nA 1 0\n").unwrap_err();
        assert!(matches!(
            err,
            MgfError::Graph {
                line: 3,
                source: GraphError::Digon(1, 0)
            }
        ));
    }

    #[test]
    fn digon_promoted() {
        let opts = ParseOptions {
            promote_digons: true,
            ..Default::default()
        };
        let g = MixedGraph::parse_mgf_with("n 2\nA 0 1\nA 1 0\n", opts).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.arc_count(), 0);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            MixedGraph::parse_mgf("E 0 1\n"),
            Err(MgfError::MissingHeader)
        ));
        assert!(matches!(
            MixedGraph::parse_mgf("n 2\nE 0 2\n"),
            Err(MgfError::Graph {
                source: GraphError::VertexOutOfRange { v: 2, n: 2 },
                ..
            })
        ));
        assert!(matches!(
            MixedGraph::parse_mgf("n 2\nA 1 1\n"),
            Err(MgfError::Graph {
                source: GraphError::SelfLoop(1),
                ..
            })
        ));
        assert!(matches!(
            MixedGraph::parse_mgf("n 2\nE 0 1\nE 1 0\n"),
            Err(MgfError::Graph {
                source: GraphError::DuplicateEdge(0, 1),
                ..
            })
        ));
        assert!(matches!(
            MixedGraph::parse_mgf("n 2\nE 0 1\nA 0 1\n"),
            Err(MgfError::Graph {
                source: GraphError::EdgeArcClash(0, 1),
                ..
            })
        ));
        assert!(MixedGraph::parse_mgf("n 2\nE 0 1 junk\n").is_err());
        assert!(MixedGraph::parse_mgf("n 2\nQ 0 1\n").is_err());
    }

    #[test]
    fn comments_and_whitespace() {
        let g = MixedGraph::parse_mgf("# leading comment\n\nn 3 # order\n  E 0 1\nA 1 2 # arc\n")
            .unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn mgf_round_trip() {
        let g = MixedGraph::simple(4, [(0, 1), (2, 3)], [(0, 2), (3, 1)]).unwrap();
        let back = MixedGraph::parse_mgf(&g.to_mgf()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn directed_three_cycle_distances() {
        let g = MixedGraph::simple(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        let d = g.distances();
        assert_eq!(d.diameter, Some(2));
        // mean over the 9 ordered pairs: (0 + 1 + 2) * 3 / 9 = 1
        assert_eq!(d.average(), Some(1.0));
        let (r, z, a) = g.adjacency_split();
        assert!(r.is_zero());
        assert_eq!(z, a);
    }

    #[test]
    fn adjacency_split_single_edge() {
        let g = MixedGraph::simple(2, [(0, 1)], []).unwrap();
        let (r, z, a) = g.adjacency_split();
        assert_eq!(r, IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]));
        assert!(z.is_zero());
        assert_eq!(a, r);
        assert!(r.is_symmetric());
    }

    #[test]
    fn converse_is_involution() {
        let g = MixedGraph::simple(4, [(0, 1)], [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g.converse().converse(), g);
        let d = g.distances();
        let dc = g.converse().distances();
        assert_eq!(d.diameter, dc.diameter);
    }

    #[test]
    fn disconnected_graphs_are_flagged() {
        let g = MixedGraph::simple(3, [(0, 1)], []).unwrap();
        let d = g.distances();
        assert!(d.disconnected);
        assert_eq!(d.diameter, None);
        assert_eq!(d.dist(0, 2), INFINITE_DISTANCE);
    }

    #[test]
    fn distance_matrices_partition_reachability() {
        let g = MixedGraph::simple(5, [(0, 1), (2, 3)], [(1, 2), (3, 4), (4, 0)]).unwrap();
        let d = g.distances();
        let k = d.diameter.unwrap();
        let mut sum = IntMatrix::zero(5);
        for i in 0..=k {
            sum = &sum + &d.distance_matrix(i);
        }
        assert_eq!(sum, d.reachable_within(k));
        assert_eq!(sum, IntMatrix::ones(5));
    }

    #[test]
    fn parallel_arcs_behind_flag() {
        assert!(MixedGraph::simple(2, [], [(0, 1), (0, 1)]).is_err());
        let g = MixedGraph::with_parallel_arcs(2, [(0, 1)], [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.arc_multiplicity(0, 1), 2);
        assert!(!g.is_simple());
        let a = g.adjacency_matrix();
        assert_eq!(a.get(0, 1), &BigInt::from(3));
        assert_eq!(a.get(1, 0), &BigInt::from(1));
    }

    #[test]
    fn underlying_matrix_symmetrizes_arcs() {
        let g = MixedGraph::simple(3, [(0, 1)], [(1, 2)]).unwrap();
        let u = g.underlying_matrix();
        assert!(u.is_symmetric());
        assert_eq!(u.get(1, 2), &BigInt::from(1));
        assert_eq!(u.get(2, 1), &BigInt::from(1));
    }
}
