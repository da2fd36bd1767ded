//! Simplicial tests and greedy elimination recognizers.
//!
//! A vertex is signed simplicial when its neighbourhood induces a positive
//! clique; an edge `uv` of a bigraph is signed simplicial when the vertices of
//! `(N(u) ∪ N(v)) − {u,v}` induce a positive biclique (edges incident to `u`
//! or `v` themselves are unconstrained). Chordality of the signed structures
//! is witnessed by orderings that stay simplicial step by step, and greedy
//! deletion finds such an ordering whenever one exists because both classes
//! are closed under the corresponding deletions.

use crate::graph::{bit_get, iter_bits, Digraph, GraphError, Sign, SignedGraph};

/// Replayable witness of chordality: either a vertex deletion order or an
/// edge deletion order (vertices retained).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EliminationCertificate {
    VertexOrdering(Vec<usize>),
    EdgeOrdering(Vec<(usize, usize)>),
}

impl EliminationCertificate {
    pub fn len(&self) -> usize {
        match self {
            EliminationCertificate::VertexOrdering(v) => v.len(),
            EliminationCertificate::EdgeOrdering(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// True iff every pair of neighbours of `v` is joined by a positive edge.
pub fn is_signed_simplicial_vertex(g: &SignedGraph, v: usize) -> Result<bool, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(ssv_unchecked(g, v))
}

pub(crate) fn ssv_unchecked(g: &SignedGraph, v: usize) -> bool {
    let w = g.words();
    if w == 1 {
        let nb = g.adj_row(v)[0];
        let mut rest = nb;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nb & !(1u64 << x) & !g.pos_row(x)[0] != 0 {
                return false;
            }
        }
        true
    } else {
        let nb = g.adj_row(v);
        for x in iter_bits(nb) {
            let px = g.pos_row(x);
            for wi in 0..w {
                let mut need = nb[wi];
                if x >> 6 == wi {
                    need &= !(1u64 << (x & 63));
                }
                if need & !px[wi] != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff `uv` is a signed simplicial edge of the bigraph `g`.
pub fn is_signed_simplicial_edge(g: &SignedGraph, u: usize, v: usize) -> Result<bool, GraphError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let bip = g.bipartition()?;
    Ok(sse_masked(g, bip.y_mask(), u, v))
}

/// Simplicial-edge test with the host bipartition already fixed. Edge
/// deletions never flip vertex sides, so recognizers compute the mask once.
pub(crate) fn sse_masked(g: &SignedGraph, y_mask: &[u64], u: usize, v: usize) -> bool {
    let w = g.words();
    if w == 1 {
        let nb = (g.adj_row(u)[0] | g.adj_row(v)[0]) & !(1u64 << u) & !(1u64 << v);
        let nby = nb & y_mask[0];
        let mut rest = nb & !y_mask[0];
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nby & !g.pos_row(x)[0] != 0 {
                return false;
            }
        }
        true
    } else {
        let au = g.adj_row(u);
        let av = g.adj_row(v);
        let mut ok = true;
        for wi in 0..w {
            let mut nbx = (au[wi] | av[wi]) & !y_mask[wi];
            if u >> 6 == wi {
                nbx &= !(1u64 << (u & 63));
            }
            if v >> 6 == wi {
                nbx &= !(1u64 << (v & 63));
            }
            let mut rest = nbx;
            while rest != 0 {
                let x = (wi << 6) + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let px = g.pos_row(x);
                for wj in 0..w {
                    let mut nby = (au[wj] | av[wj]) & y_mask[wj];
                    if u >> 6 == wj {
                        nby &= !(1u64 << (u & 63));
                    }
                    if v >> 6 == wj {
                        nby &= !(1u64 << (v & 63));
                    }
                    if nby & !px[wj] != 0 {
                        ok = false;
                    }
                }
                if !ok {
                    return false;
                }
            }
        }
        ok
    }
}

/// Greedy recognizer for chordal signed graphs: repeatedly deletes the
/// lowest-id signed simplicial vertex. Returns the full vertex ordering when
/// the graph empties, `None` when the loop stalls. Deleting a signed
/// simplicial vertex keeps the class, so the greedy choice is complete.
pub fn recognize_chordal_signed_graph(g: &SignedGraph) -> Option<EliminationCertificate> {
    let n = g.n();
    let mut h = g.clone();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).find(|&v| alive[v] && ssv_unchecked(&h, v))?;
        order.push(v);
        alive[v] = false;
        h.isolate_vertex_mut(v);
    }
    Some(EliminationCertificate::VertexOrdering(order))
}

/// Greedy recognizer for chordal signed bigraphs: repeatedly deletes the
/// lexicographically least signed simplicial edge, vertices retained.
/// Returns the full edge ordering or `None` when edges remain but none is
/// signed simplicial. Fails with `OddCycle` on non-bipartite input.
pub fn recognize_chordal_signed_bigraph(
    g: &SignedGraph,
) -> Result<Option<EliminationCertificate>, GraphError> {
    let bip = g.bipartition()?;
    let y_mask = bip.y_mask().to_vec();
    let mut h = g.clone();
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    let mut alive = vec![true; edges.len()];
    let mut status: Vec<bool> = edges
        .iter()
        .map(|&(u, v)| sse_masked(&h, &y_mask, u, v))
        .collect();
    let mut order = Vec::with_capacity(edges.len());
    for _ in 0..edges.len() {
        let Some(i) = (0..edges.len()).find(|&i| alive[i] && status[i]) else {
            return Ok(None);
        };
        let (u, v) = edges[i];
        alive[i] = false;
        // Only edges whose closed neighbourhood met the deleted endpoints can
        // change status; collect them against the pre-deletion adjacency.
        let dirty: Vec<usize> = (0..edges.len())
            .filter(|&j| {
                if !alive[j] {
                    return false;
                }
                let (a, b) = edges[j];
                a == u
                    || a == v
                    || b == u
                    || b == v
                    || bit_get(h.adj_row(a), u)
                    || bit_get(h.adj_row(a), v)
                    || bit_get(h.adj_row(b), u)
                    || bit_get(h.adj_row(b), v)
            })
            .collect();
        h.delete_edge_mut(u, v);
        order.push((u, v));
        for j in dirty {
            let (a, b) = edges[j];
            status[j] = sse_masked(&h, &y_mask, a, b);
        }
    }
    Ok(Some(EliminationCertificate::EdgeOrdering(order)))
}

/// Replays a certificate against `g`: checks the signed-simplicial condition
/// at every step plus completeness (all vertices, or every edge exactly once).
pub fn verify_certificate(g: &SignedGraph, cert: &EliminationCertificate) -> bool {
    match cert {
        EliminationCertificate::VertexOrdering(seq) => {
            if seq.len() != g.n() {
                return false;
            }
            let mut seen = vec![false; g.n()];
            for &v in seq {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            let mut h = g.clone();
            for &v in seq {
                if !ssv_unchecked(&h, v) {
                    return false;
                }
                h.isolate_vertex_mut(v);
            }
            true
        }
        EliminationCertificate::EdgeOrdering(seq) => {
            let Ok(bip) = g.bipartition() else {
                return false;
            };
            let mut expected: Vec<(usize, usize)> =
                g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
            let mut claimed: Vec<(usize, usize)> =
                seq.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            expected.sort_unstable();
            claimed.sort_unstable();
            if expected != claimed {
                return false;
            }
            let mut h = g.clone();
            for &(u, v) in seq {
                if !h.has_edge(u, v) || !sse_masked(&h, bip.y_mask(), u, v) {
                    return false;
                }
                h.delete_edge_mut(u, v);
            }
            true
        }
    }
}

/// Classic chordality of the underlying unsigned graph: greedy simplicial
/// vertex elimination with signs ignored.
pub fn is_chordal_graph(g: &SignedGraph) -> bool {
    recognize_chordal_signed_graph(&g.all_positive()).is_some()
}

/// Classic chordality of the underlying unsigned bigraph (no induced cycles
/// of length six or more): greedy simplicial edge elimination, signs ignored.
pub fn is_chordal_bigraph(g: &SignedGraph) -> Result<bool, GraphError> {
    Ok(recognize_chordal_signed_bigraph(&g.all_positive())?.is_some())
}

/// Direct search for an induced cycle with at least `min_len` vertices.
/// Exponential subset scan; intended for cross-checks on small graphs.
pub fn has_induced_cycle_at_least(g: &SignedGraph, min_len: usize) -> bool {
    assert!(g.n() <= 24, "induced-cycle scan is for small graphs");
    let n = g.n();
    for mask in 0u64..(1u64 << n) {
        if (mask.count_ones() as usize) < min_len {
            continue;
        }
        if induced_is_cycle(g, mask) {
            return true;
        }
    }
    false
}

pub(crate) fn induced_is_cycle(g: &SignedGraph, mask: u64) -> bool {
    debug_assert!(g.words() == 1);
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (g.adj_row(v)[0] & mask).count_ones() != 2 {
            return false;
        }
    }
    // 2-regular and connected means a single cycle.
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.adj_row(v)[0] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// Signed graph associated with a digraph: a symmetric arc pair becomes a
/// positive edge, a lone arc a negative one.
pub fn digraph_to_signed_graph(d: &Digraph) -> SignedGraph {
    let mut edges = Vec::new();
    for &(u, v) in d.arcs() {
        if u < v || !d.has_arc(v, u) {
            let sign = if d.has_arc(v, u) { Sign::Positive } else { Sign::Negative };
            edges.push((u, v, sign));
        }
    }
    SignedGraph::build(d.n(), &edges).expect("digraph arcs are validated")
}

/// A digraph is strict chordal when its associated signed graph is a chordal
/// signed graph.
pub fn is_strict_chordal_digraph(d: &Digraph) -> bool {
    recognize_chordal_signed_graph(&digraph_to_signed_graph(d)).is_some()
}

/// All signed simplicial edges of `g` under a fixed bipartition mask.
pub(crate) fn signed_simplicial_edges(g: &SignedGraph, y_mask: &[u64]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v, _)| sse_masked(g, y_mask, u, v))
        .map(|(u, v, _)| (u, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn negative_c4() -> SignedGraph {
        SignedGraph::build(4, &[(0, 1, N), (1, 2, N), (2, 3, N), (3, 0, N)]).unwrap()
    }

    fn all_positive_complete(n: usize) -> SignedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, P));
            }
        }
        SignedGraph::build(n, &edges).unwrap()
    }

    fn complete_bigraph(a: usize, b: usize, sign: Sign) -> SignedGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v, sign));
            }
        }
        SignedGraph::build(a + b, &edges).unwrap()
    }

    #[test]
    fn simplicial_vertex_basics() {
        let g = SignedGraph::build(4, &[(0, 1, N), (1, 2, N)]).unwrap();
        assert!(is_signed_simplicial_vertex(&g, 3).unwrap()); // isolated
        assert!(is_signed_simplicial_vertex(&g, 0).unwrap()); // degree one
        assert!(!is_signed_simplicial_vertex(&g, 1).unwrap()); // path centre
        assert!(is_signed_simplicial_vertex(&g, 2).unwrap());
        assert!(is_signed_simplicial_vertex(&g, 9).is_err());
    }

    #[test]
    fn simplicial_vertex_needs_positive_edges() {
        let g = SignedGraph::build(3, &[(0, 1, P), (0, 2, P), (1, 2, N)]).unwrap();
        assert!(!is_signed_simplicial_vertex(&g, 0).unwrap());
        assert!(is_signed_simplicial_vertex(&g, 1).unwrap());
    }

    #[test]
    fn pendant_edge_is_simplicial() {
        // Star with centre 0; edge 0-1 has a degree-one endpoint.
        let g = SignedGraph::build(4, &[(0, 1, N), (0, 2, N), (0, 3, P)]).unwrap();
        assert!(is_signed_simplicial_edge(&g, 0, 1).unwrap());
    }

    #[test]
    fn negative_c4_has_no_simplicial_edge() {
        let g = negative_c4();
        for (u, v, _) in g.edges() {
            assert!(!is_signed_simplicial_edge(&g, u, v).unwrap());
        }
    }

    #[test]
    fn k22_with_positive_opposite_edge() {
        // Edge 0-1 where the opposite edge 2-3 is positive and the edges at
        // the endpoints are negative: still signed simplicial.
        let g = SignedGraph::build(4, &[(0, 1, N), (1, 2, N), (2, 3, P), (3, 0, N)]).unwrap();
        assert!(is_signed_simplicial_edge(&g, 0, 1).unwrap());
        assert!(!is_signed_simplicial_edge(&g, 1, 2).unwrap());
    }

    #[test]
    fn simplicial_edge_errors() {
        let g = negative_c4();
        assert_eq!(
            is_signed_simplicial_edge(&g, 0, 2),
            Err(GraphError::NotAnEdge(0, 2))
        );
        let tri =
            SignedGraph::build(3, &[(0, 1, P), (1, 2, P), (0, 2, P)]).unwrap();
        assert_eq!(is_signed_simplicial_edge(&tri, 0, 1), Err(GraphError::OddCycle));
    }

    #[test]
    fn vertex_recognizer_on_positive_complete() {
        let cert = recognize_chordal_signed_graph(&all_positive_complete(4)).unwrap();
        assert_eq!(cert, EliminationCertificate::VertexOrdering(vec![0, 1, 2, 3]));
    }

    #[test]
    fn vertex_recognizer_rejects_negative_c4() {
        assert!(recognize_chordal_signed_graph(&negative_c4()).is_none());
    }

    #[test]
    fn vertex_recognizer_on_edgeless() {
        let cert = recognize_chordal_signed_graph(&SignedGraph::empty(3)).unwrap();
        assert_eq!(cert.len(), 3);
    }

    #[test]
    fn edge_recognizer_on_trees_and_cycles() {
        // Any signed tree works.
        let tree = SignedGraph::build(5, &[(0, 1, N), (1, 2, P), (1, 3, N), (3, 4, N)]).unwrap();
        let cert = recognize_chordal_signed_bigraph(&tree).unwrap().unwrap();
        assert!(verify_certificate(&tree, &cert));

        assert!(recognize_chordal_signed_bigraph(&negative_c4()).unwrap().is_none());

        let k33 = complete_bigraph(3, 3, P);
        let cert = recognize_chordal_signed_bigraph(&k33).unwrap().unwrap();
        assert_eq!(cert.len(), 9);
        assert!(verify_certificate(&k33, &cert));
    }

    #[test]
    fn every_signing_of_c6_is_rejected() {
        for code in 0u32..64 {
            let signs: Vec<Sign> = (0..6)
                .map(|i| if code >> i & 1 == 0 { P } else { N })
                .collect();
            let g = SignedGraph::build(
                6,
                &[
                    (0, 1, signs[0]),
                    (1, 2, signs[1]),
                    (2, 3, signs[2]),
                    (3, 4, signs[3]),
                    (4, 5, signs[4]),
                    (5, 0, signs[5]),
                ],
            )
            .unwrap();
            assert!(recognize_chordal_signed_bigraph(&g).unwrap().is_none(), "code {code}");
        }
    }

    #[test]
    fn certificate_replay_catches_bad_orders() {
        let path = SignedGraph::build(4, &[(0, 1, P), (1, 2, N), (2, 3, P)]).unwrap();
        let good = recognize_chordal_signed_bigraph(&path).unwrap().unwrap();
        assert!(verify_certificate(&path, &good));

        // Middle edge first: its neighbourhood {0, 3} is not a biclique.
        let bad = EliminationCertificate::EdgeOrdering(vec![(1, 2), (0, 1), (2, 3)]);
        assert!(!verify_certificate(&path, &bad));

        // Listing an edge twice violates completeness.
        let doubled = EliminationCertificate::EdgeOrdering(vec![(0, 1), (0, 1), (2, 3)]);
        assert!(!verify_certificate(&path, &doubled));
    }

    #[test]
    fn unsigned_chordality() {
        let c4 = negative_c4();
        assert!(!is_chordal_graph(&c4));
        let mut chorded = c4.clone();
        chorded.insert_edge(0, 2, P);
        assert!(is_chordal_graph(&chorded));
        let tree = SignedGraph::build(4, &[(0, 1, N), (1, 2, N), (1, 3, N)]).unwrap();
        assert!(is_chordal_graph(&tree));
    }

    #[test]
    fn unsigned_bigraph_chordality() {
        let c6 = SignedGraph::build(
            6,
            &[(0, 1, P), (1, 2, P), (2, 3, P), (3, 4, P), (4, 5, P), (5, 0, P)],
        )
        .unwrap();
        assert!(!is_chordal_bigraph(&c6).unwrap());
        assert!(has_induced_cycle_at_least(&c6, 6));

        assert!(is_chordal_bigraph(&negative_c4()).unwrap());
        assert!(!has_induced_cycle_at_least(&negative_c4(), 6));

        let k33 = complete_bigraph(3, 3, N);
        assert!(is_chordal_bigraph(&k33).unwrap());
        assert!(!has_induced_cycle_at_least(&k33, 6));
    }

    #[test]
    fn multiword_rows_behave_like_small_ones() {
        // A 100-vertex path exercises the multi-word adjacency code paths.
        let n = 100;
        let edges: Vec<(usize, usize, Sign)> =
            (0..n - 1).map(|i| (i, i + 1, if i % 3 == 0 { N } else { P })).collect();
        let path = SignedGraph::build(n, &edges).unwrap();
        let cert = recognize_chordal_signed_bigraph(&path).unwrap().unwrap();
        assert_eq!(cert.len(), n - 1);
        assert!(verify_certificate(&path, &cert));

        // The same length closed into a cycle is rejected under any signing.
        let mut cycle_edges = edges.clone();
        cycle_edges.push((n - 1, 0, N));
        let cycle = SignedGraph::build(n, &cycle_edges).unwrap();
        assert!(recognize_chordal_signed_bigraph(&cycle).unwrap().is_none());

        // Vertex recognizer across word boundaries: a star with mixed signs.
        let star_edges: Vec<(usize, usize, Sign)> =
            (1..80).map(|i| (0, i, if i % 2 == 0 { P } else { N })).collect();
        let star = SignedGraph::build(80, &star_edges).unwrap();
        let cert = recognize_chordal_signed_graph(&star).unwrap();
        assert!(verify_certificate(&star, &cert));
    }

    #[test]
    fn digraph_translation() {
        let d = Digraph::build(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(digraph_to_signed_graph(&d).sign(0, 1), Some(P));

        let d = Digraph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(digraph_to_signed_graph(&d).sign(0, 1), Some(N));
        assert!(is_strict_chordal_digraph(&d));

        let cycle = Digraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let g = digraph_to_signed_graph(&cycle);
        assert_eq!(g, negative_c4());
        assert!(!is_strict_chordal_digraph(&cycle));

        let mut arcs = Vec::new();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let complete = Digraph::build(3, &arcs).unwrap();
        assert!(is_strict_chordal_digraph(&complete));
    }
}
