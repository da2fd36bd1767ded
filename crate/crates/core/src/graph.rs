//! Signed-graph data model: vertices with dense ids, undirected edges each
//! carrying one sign, plus bipartition handling and edge-coloured pattern
//! graphs whose unspecified (black) edges expand to whole families.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Sign attached to an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph contains an odd cycle (not bipartite)")]
    OddCycle,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn bit_get(words: &[u64], i: usize) -> bool {
    words[i >> 6] >> (i & 63) & 1 != 0
}

#[inline]
pub(crate) fn bit_set(words: &mut [u64], i: usize) {
    words[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub(crate) fn bit_clear(words: &mut [u64], i: usize) {
    words[i >> 6] &= !(1 << (i & 63));
}

pub(crate) fn iter_bits<'a>(words: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors((w != 0).then_some(w), |&w| {
            let rest = w & (w - 1);
            (rest != 0).then_some(rest)
        })
        .map(move |w| (wi << 6) + w.trailing_zeros() as usize)
    })
}

pub(crate) fn count_bits(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Signed graph over dense vertex ids `0..n`. Immutable after construction;
/// adjacency and signs live in per-vertex bitset rows so sign lookup is O(1)
/// and neighbourhood tests cost O(n/64).
#[derive(Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    w: usize,
    m: usize,
    adj: Box<[u64]>,
    /// Bit set iff the corresponding adjacency bit is set and the edge is positive.
    pos: Box<[u64]>,
    labels: BTreeMap<usize, String>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}, edges=[", self.n)?;
        for (i, (u, v, s)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", u, s.as_char(), v)?;
        }
        write!(f, "])")
    }
}

impl SignedGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> SignedGraph {
        let w = words_for(n);
        SignedGraph {
            n,
            w,
            m: 0,
            adj: vec![0u64; n * w].into_boxed_slice(),
            pos: vec![0u64; n * w].into_boxed_slice(),
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from an explicit signed edge list. Loops, duplicate
    /// pairs (even with equal signs) and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize, Sign)]) -> Result<SignedGraph, GraphError> {
        let mut g = SignedGraph::empty(n);
        for &(u, v, s) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v, s);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize, s: Sign) {
        debug_assert!(u != v && u < self.n && v < self.n && !self.has_edge(u, v));
        let w = self.w;
        bit_set(&mut self.adj[u * w..(u + 1) * w], v);
        bit_set(&mut self.adj[v * w..(v + 1) * w], u);
        if s == Sign::Positive {
            bit_set(&mut self.pos[u * w..(u + 1) * w], v);
            bit_set(&mut self.pos[v * w..(v + 1) * w], u);
        }
        self.m += 1;
    }

    pub(crate) fn delete_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        let w = self.w;
        bit_clear(&mut self.adj[u * w..(u + 1) * w], v);
        bit_clear(&mut self.adj[v * w..(v + 1) * w], u);
        bit_clear(&mut self.pos[u * w..(u + 1) * w], v);
        bit_clear(&mut self.pos[v * w..(v + 1) * w], u);
        self.m -= 1;
    }

    /// Deletes every edge incident to `v`; the vertex itself stays.
    pub(crate) fn isolate_vertex_mut(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for u in nbrs {
            self.delete_edge_mut(u, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub(crate) fn adj_row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub(crate) fn pos_row(&self, v: usize) -> &[u64] {
        &self.pos[v * self.w..(v + 1) * self.w]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.w
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bit_get(self.adj_row(u), v)
    }

    /// Sign of edge `uv`, or `None` if not an edge.
    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if !self.has_edge(u, v) {
            None
        } else if bit_get(self.pos_row(u), v) {
            Some(Sign::Positive)
        } else {
            Some(Sign::Negative)
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.adj_row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        count_bits(self.adj_row(v))
    }

    pub fn positive_degree(&self, v: usize) -> usize {
        count_bits(self.pos_row(v))
    }

    pub fn negative_degree(&self, v: usize) -> usize {
        self.degree(v) - self.positive_degree(v)
    }

    /// All edges as `(u, v, sign)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in iter_bits(self.adj_row(u)) {
                if v > u {
                    out.push((u, v, self.sign(u, v).unwrap()));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    /// Copy of the graph with all signs set positive.
    pub fn all_positive(&self) -> SignedGraph {
        let mut g = self.clone();
        g.pos.copy_from_slice(&g.adj);
        g
    }

    /// Subgraph induced by `keep` (deduplicated, sorted ascending). Vertices
    /// are relabelled densely; the returned map sends new ids to old ids.
    pub fn induced(&self, keep: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = SignedGraph::empty(keep.len());
        for (new_u, &u) in keep.iter().enumerate() {
            for (new_v, &v) in keep.iter().enumerate().skip(new_u + 1) {
                if let Some(s) = self.sign(u, v) {
                    g.insert_edge(new_u, new_v, s);
                }
            }
            if let Some(l) = self.labels.get(&u) {
                g.labels.insert(new_u, l.clone());
            }
        }
        Ok(InducedSubgraph { graph: g, vertex_map: keep })
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Deterministic bipartition: the lowest-id vertex of every connected
    /// component (isolated vertices included) lands on side X.
    pub fn bipartition(&self) -> Result<Bipartition, GraphError> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if side[v] == side[u] {
                        return Err(GraphError::OddCycle);
                    }
                }
            }
        }
        Ok(Bipartition::from_sides(self.n, &side))
    }

    /// True iff every pair of opposite-side vertices of `s` is joined by a
    /// positive edge. Vacuous for one-sided or empty `s`.
    pub fn is_positive_biclique(&self, s: &[usize]) -> Result<bool, GraphError> {
        let bip = self.bipartition()?;
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(self.is_positive_biclique_with(&bip, s))
    }

    pub(crate) fn is_positive_biclique_with(&self, bip: &Bipartition, s: &[usize]) -> bool {
        for &u in s {
            if bip.side_of(u) != Side::X {
                continue;
            }
            for &v in s {
                if bip.side_of(v) == Side::Y && self.sign(u, v) != Some(Sign::Positive) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every pair of distinct vertices of `s` is joined by a positive
    /// edge (the non-bipartite sibling of [`SignedGraph::is_positive_biclique`]).
    pub fn is_positive_clique(&self, s: &[usize]) -> bool {
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                if u != v && self.sign(u, v) != Some(Sign::Positive) {
                    return false;
                }
            }
        }
        true
    }

    /// Degree-based fingerprint used to prune isomorphism tests and to bucket
    /// graphs during deduplication. Graphs with different fingerprints are
    /// never sign-isomorphic.
    pub(crate) fn invariant_key(&self) -> u64 {
        let mut degs: Vec<(usize, usize)> = (0..self.n)
            .map(|v| (self.positive_degree(v), self.negative_degree(v)))
            .collect();
        degs.sort_unstable();
        let mut h: u64 = 0xcbf29ce484222325;
        let mut mix = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.n as u64);
        mix(self.m as u64);
        for (p, q) in degs {
            mix((p as u64) << 32 | q as u64);
        }
        h
    }
}

/// Result of an induced-subgraph restriction: the relabelled graph plus the
/// map from new ids back to the originals.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: SignedGraph,
    /// `vertex_map[new_id] = old_id`, sorted ascending.
    pub vertex_map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// A two-sided split of the vertex set with every edge crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side_x: Vec<usize>,
    side_y: Vec<usize>,
    y_mask: Box<[u64]>,
    n: usize,
}

impl Bipartition {
    fn from_sides(n: usize, side: &[u8]) -> Bipartition {
        let mut y_mask = vec![0u64; words_for(n)];
        let mut side_x = Vec::new();
        let mut side_y = Vec::new();
        for (v, &s) in side.iter().enumerate() {
            if s == 1 {
                bit_set(&mut y_mask, v);
                side_y.push(v);
            } else {
                side_x.push(v);
            }
        }
        Bipartition { side_x, side_y, y_mask: y_mask.into_boxed_slice(), n }
    }

    pub fn side_x(&self) -> &[usize] {
        &self.side_x
    }

    pub fn side_y(&self) -> &[usize] {
        &self.side_y
    }

    #[inline]
    pub fn side_of(&self, v: usize) -> Side {
        if bit_get(&self.y_mask, v) {
            Side::Y
        } else {
            Side::X
        }
    }

    #[inline]
    pub(crate) fn y_mask(&self) -> &[u64] {
        &self.y_mask
    }

    /// Checks the defining invariants against `g`; used by tests and
    /// debug assertions after every construction path.
    pub fn is_valid_for(&self, g: &SignedGraph) -> bool {
        if self.n != g.n() || self.side_x.len() + self.side_y.len() != g.n() {
            return false;
        }
        for &u in &self.side_x {
            if self.side_y.contains(&u) {
                return false;
            }
        }
        g.edges()
            .iter()
            .all(|&(u, v, _)| self.side_of(u) != self.side_of(v))
    }
}

/// Edge-coloured template: blue and red edges carry fixed signs, black edges
/// stand for both choices, so a pattern with `b` black edges denotes a family
/// of `2^b` signed graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    blue: Vec<(usize, usize)>,
    red: Vec<(usize, usize)>,
    black: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn new(
        n: usize,
        blue: &[(usize, usize)],
        red: &[(usize, usize)],
        black: &[(usize, usize)],
    ) -> Result<PatternGraph, GraphError> {
        let norm = |list: &[(usize, usize)]| -> Result<Vec<(usize, usize)>, GraphError> {
            let mut out = Vec::with_capacity(list.len());
            for &(u, v) in list {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: u, n });
                }
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if u == v {
                    return Err(GraphError::LoopEdge(u));
                }
                out.push((u.min(v), u.max(v)));
            }
            out.sort_unstable();
            Ok(out)
        };
        let blue = norm(blue)?;
        let red = norm(red)?;
        let black = norm(black)?;
        let mut all: Vec<(usize, usize)> =
            blue.iter().chain(&red).chain(&black).copied().collect();
        all.sort_unstable();
        for pair in all.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateEdge(pair[0].0, pair[0].1));
            }
        }
        Ok(PatternGraph { n, blue, red, black })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blue_edges(&self) -> &[(usize, usize)] {
        &self.blue
    }

    pub fn red_edges(&self) -> &[(usize, usize)] {
        &self.red
    }

    pub fn black_edges(&self) -> &[(usize, usize)] {
        &self.black
    }

    pub fn edge_count(&self) -> usize {
        self.blue.len() + self.red.len() + self.black.len()
    }

    /// Number of sign assignments before isomorphism deduplication.
    pub fn raw_expansion_count(&self) -> usize {
        1usize << self.black.len()
    }

    /// One signed graph per sign assignment of the black edges. Assignments
    /// run in lexicographic order (positive before negative, black edges
    /// sorted); only the first representative of each sign-isomorphism class
    /// is kept.
    pub fn expand(&self) -> Vec<SignedGraph> {
        let b = self.black.len();
        let mut reps: Vec<(u64, SignedGraph)> = Vec::new();
        for assign in 0..(1usize << b) {
            let mut edges: Vec<(usize, usize, Sign)> = Vec::with_capacity(self.edge_count());
            for &(u, v) in &self.blue {
                edges.push((u, v, Sign::Positive));
            }
            for &(u, v) in &self.red {
                edges.push((u, v, Sign::Negative));
            }
            for (i, &(u, v)) in self.black.iter().enumerate() {
                // Bit 0 means the lexicographically earlier choice: positive.
                let s = if assign >> i & 1 == 0 { Sign::Positive } else { Sign::Negative };
                edges.push((u, v, s));
            }
            let g = SignedGraph::build(self.n, &edges).expect("pattern edges are validated");
            let key = g.invariant_key();
            let dup = reps
                .iter()
                .any(|(k, r)| *k == key && crate::iso::sign_isomorphism(r, &g).is_some());
            if !dup {
                reps.push((key, g));
            }
        }
        reps.into_iter().map(|(_, g)| g).collect()
    }

    /// The unique expansion of a pattern without black edges.
    pub fn to_signed_graph(&self) -> Option<SignedGraph> {
        if self.black.is_empty() {
            self.expand().into_iter().next()
        } else {
            None
        }
    }
}

/// Directed graph used as the front end of the arc-to-sign translation:
/// a symmetric arc pair becomes a positive edge, a lone arc a negative one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn build(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph, GraphError> {
        let mut list = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Digraph { n, arcs: list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn negative_c4() -> SignedGraph {
        SignedGraph::build(
            4,
            &[
                (0, 1, Sign::Negative),
                (1, 2, Sign::Negative),
                (2, 3, Sign::Negative),
                (3, 0, Sign::Negative),
            ],
        )
        .unwrap()
    }

    #[test]
    fn build_smallest() {
        let g = SignedGraph::build(2, &[(0, 1, Sign::Positive)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.sign(1, 0), Some(Sign::Positive));
    }

    #[test]
    fn build_rejects_loop() {
        assert_eq!(
            SignedGraph::build(3, &[(0, 0, Sign::Positive)]),
            Err(GraphError::LoopEdge(0))
        );
    }

    #[test]
    fn build_rejects_duplicates_even_with_same_sign() {
        assert_eq!(
            SignedGraph::build(3, &[(0, 1, Sign::Positive), (1, 0, Sign::Positive)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SignedGraph::build(3, &[(0, 1, Sign::Positive), (0, 1, Sign::Negative)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            SignedGraph::build(2, &[(0, 2, Sign::Positive)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn negative_c4_shape() {
        let g = negative_c4();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.edges().iter().all(|&(_, _, s)| s == Sign::Negative));
    }

    #[test]
    fn induced_restricts_and_relabels() {
        let g = negative_c4();
        let sub = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph.n(), 3);
        assert_eq!(sub.graph.m(), 2);
        assert_eq!(sub.vertex_map, vec![0, 1, 2]);
        // Two negative edges of a path.
        assert_eq!(sub.graph.sign(0, 1), Some(Sign::Negative));
        assert_eq!(sub.graph.sign(1, 2), Some(Sign::Negative));
        assert_eq!(sub.graph.sign(0, 2), None);
    }

    #[test]
    fn induced_identity() {
        let g = negative_c4();
        let sub = g.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.vertex_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_out_of_range() {
        let g = negative_c4();
        assert!(matches!(
            g.induced(&[0, 9]),
            Err(GraphError::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let g = negative_c4();
        let bip = g.bipartition().unwrap();
        assert_eq!(bip.side_x(), &[0, 2]);
        assert_eq!(bip.side_y(), &[1, 3]);
        assert!(bip.is_valid_for(&g));
    }

    #[test]
    fn bipartition_rejects_triangle() {
        let g = SignedGraph::build(
            3,
            &[(0, 1, Sign::Positive), (1, 2, Sign::Negative), (0, 2, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(g.bipartition().unwrap_err(), GraphError::OddCycle);
    }

    #[test]
    fn bipartition_isolated_vertices_go_left() {
        let g = SignedGraph::empty(3);
        let bip = g.bipartition().unwrap();
        assert_eq!(bip.side_x(), &[0, 1, 2]);
        assert!(bip.side_y().is_empty());
    }

    #[test]
    fn positive_biclique_cases() {
        let k22 = SignedGraph::build(
            4,
            &[
                (0, 1, Sign::Positive),
                (1, 2, Sign::Positive),
                (2, 3, Sign::Positive),
                (3, 0, Sign::Positive),
            ],
        )
        .unwrap();
        assert!(k22.is_positive_biclique(&[0, 1, 2, 3]).unwrap());
        assert!(!negative_c4().is_positive_biclique(&[0, 1, 2, 3]).unwrap());
        assert!(negative_c4().is_positive_biclique(&[1]).unwrap());
        assert!(negative_c4().is_positive_biclique(&[]).unwrap());
        // One-sided sets are vacuously positive bicliques.
        assert!(negative_c4().is_positive_biclique(&[0, 2]).unwrap());
    }

    #[test]
    fn positive_clique_cases() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v, Sign::Positive));
            }
        }
        let k4 = SignedGraph::build(4, &edges).unwrap();
        assert!(k4.is_positive_clique(&[0, 1, 2, 3]));
        let mut edges2 = edges.clone();
        edges2[0].2 = Sign::Negative;
        let k4n = SignedGraph::build(4, &edges2).unwrap();
        assert!(!k4n.is_positive_clique(&[0, 1, 2, 3]));
        assert!(k4n.is_positive_clique(&[2, 3]));
    }

    #[test]
    fn pattern_rejects_overlapping_colour_classes() {
        assert!(PatternGraph::new(3, &[(0, 1)], &[(1, 0)], &[]).is_err());
    }

    #[test]
    fn pattern_with_no_edges_expands_to_single_graph() {
        let p = PatternGraph::new(3, &[], &[], &[]).unwrap();
        let out = p.expand();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].m(), 0);
    }

    #[test]
    fn labels_survive_induction() {
        let mut g = negative_c4();
        g.set_label(2, "c").unwrap();
        let sub = g.induced(&[1, 2]).unwrap();
        assert_eq!(sub.graph.labels().get(&1), Some(&"c".to_string()));
    }
}
