//! Structure of signed bigraphs: separability witnesses, canonical orderings
//! of non-separable bigraphs, minimal separations, and tadpole detection.

use thiserror::Error;

use crate::elimination::sse_masked;
use crate::graph::{Bipartition, GraphError, Side, Sign, SignedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("input is separable (contains an induced pair of independent edges)")]
    SeparableInput,
    #[error("input has an isolated vertex")]
    IsolatedVertex,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Orders each side of a non-separable bigraph so neighbourhoods nest:
/// along `x_order` they shrink, along `y_order` they grow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

impl CanonicalOrdering {
    /// Independent revalidation of the nestedness invariant.
    pub fn is_nested_in(&self, g: &SignedGraph) -> bool {
        let nb = |v: usize| -> Vec<usize> { g.neighbors(v).collect() };
        let superset = |a: &[usize], b: &[usize]| b.iter().all(|x| a.contains(x));
        self.x_order
            .windows(2)
            .all(|p| superset(&nb(p[0]), &nb(p[1])))
            && self
                .y_order
                .windows(2)
                .all(|p| superset(&nb(p[1]), &nb(p[0])))
    }
}

/// A separator together with two non-trivial components of the remainder in
/// which every separator vertex has neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub separator: Vec<usize>,
    pub component_h1: Vec<usize>,
    pub component_h2: Vec<usize>,
}

impl SeparationCertificate {
    /// Replays the defining conditions against `g`.
    pub fn is_valid_for(&self, g: &SignedGraph) -> bool {
        let mut removed: Vec<usize> = self.separator.clone();
        removed.sort_unstable();
        let keep: Vec<usize> =
            (0..g.n()).filter(|v| removed.binary_search(v).is_err()).collect();
        let Ok(sub) = g.induced(&keep) else { return false };
        let comps = sub.graph.components();
        let non_trivial: Vec<Vec<usize>> = comps
            .iter()
            .filter(|c| c.iter().any(|&v| sub.graph.degree(v) > 0))
            .map(|c| c.iter().map(|&v| sub.vertex_map[v]).collect())
            .collect();
        if self.component_h1 == self.component_h2
            || !non_trivial.contains(&self.component_h1)
            || !non_trivial.contains(&self.component_h2)
        {
            return false;
        }
        self.separator.iter().all(|&s| {
            self.component_h1.iter().any(|&v| g.has_edge(s, v))
                && self.component_h2.iter().any(|&v| g.has_edge(s, v))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TadpoleKind {
    Type1,
    Type2,
}

/// A tadpole inside a host bigraph. `tail[0]` is the end; the last tail
/// vertex meets the heads `y` and `z` by negative edges, `w` closes the head
/// off the tail, and type 2 adds a negative edge from `w` to the
/// second-to-last tail vertex. No other edges are induced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TadpoleDescriptor {
    pub kind: TadpoleKind,
    pub tail: Vec<usize>,
    pub w: usize,
    pub y: usize,
    pub z: usize,
}

impl TadpoleDescriptor {
    pub fn end(&self) -> usize {
        self.tail[0]
    }

    pub fn k(&self) -> usize {
        self.tail.len()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out = self.tail.clone();
        out.extend([self.w, self.y, self.z]);
        out
    }

    /// Checks that the descriptor's vertex set induces exactly the tadpole
    /// edge set in `g`, with the mandatory negative signs in place.
    pub fn matches(&self, g: &SignedGraph) -> bool {
        let verts = self.vertices();
        let k = self.k();
        if k == 0 || (self.kind == TadpoleKind::Type2 && k < 2) {
            return false;
        }
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != verts.len() || sorted.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let xk = self.tail[k - 1];
        let mut expected: Vec<((usize, usize), Option<Sign>)> = Vec::new();
        for t in self.tail.windows(2) {
            expected.push(((t[0].min(t[1]), t[0].max(t[1])), None));
        }
        for h in [self.y, self.z] {
            expected.push(((xk.min(h), xk.max(h)), Some(Sign::Negative)));
            expected.push(((self.w.min(h), self.w.max(h)), None));
        }
        if self.kind == TadpoleKind::Type2 {
            let xkm1 = self.tail[k - 2];
            expected.push(((self.w.min(xkm1), self.w.max(xkm1)), Some(Sign::Negative)));
        }
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                let key = (u.min(v), u.max(v));
                match expected.iter().find(|(e, _)| *e == key) {
                    Some((_, Some(sign))) => {
                        if g.sign(u, v) != Some(*sign) {
                            return false;
                        }
                    }
                    Some((_, None)) => {
                        if !g.has_edge(u, v) {
                            return false;
                        }
                    }
                    None => {
                        if g.has_edge(u, v) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// A pair of independent edges whose four endpoints induce no other edges.
pub type IndependentEdgePair = ((usize, usize), (usize, usize));

/// Returns two independent edges with no cross adjacencies (an induced 2K₂
/// witness), or `None` when the bigraph is non-separable.
pub fn is_separable(g: &SignedGraph) -> Result<Option<IndependentEdgePair>, GraphError> {
    g.bipartition()?;
    Ok(separability_witness(g))
}

pub(crate) fn separability_witness(g: &SignedGraph) -> Option<IndependentEdgePair> {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v, _)| (u, v)).collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)
            {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

/// Canonical ordering of a non-separable bigraph without isolated vertices.
/// Ties in the neighbourhood-inclusion order break by vertex id.
pub fn canonical_ordering(g: &SignedGraph) -> Result<CanonicalOrdering, StructureError> {
    let bip = g.bipartition().map_err(StructureError::Graph)?;
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Err(StructureError::IsolatedVertex);
    }
    let mut x_order: Vec<usize> = bip.side_x().to_vec();
    let mut y_order: Vec<usize> = bip.side_y().to_vec();
    x_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    y_order.sort_by_key(|&v| (g.degree(v), v));
    let ord = CanonicalOrdering { x_order, y_order };
    if !ord.is_nested_in(g) {
        return Err(StructureError::SeparableInput);
    }
    Ok(ord)
}

/// Outcome of mechanically checking the five structural facts a canonical
/// ordering of a non-separable bigraph satisfies. A violation indicates an
/// implementation bug, not a property of the input.
#[derive(Clone, Debug, Default)]
pub struct NonSepReport {
    pub violations: Vec<String>,
}

impl NonSepReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_nonsep_properties(g: &SignedGraph, ord: &CanonicalOrdering) -> NonSepReport {
    let mut report = NonSepReport::default();
    let unsigned = g.all_positive();
    let Ok(bip) = g.bipartition() else {
        report.violations.push("input is not bipartite".into());
        return report;
    };
    let y_mask = bip.y_mask().to_vec();
    if ord.y_order.is_empty() || ord.x_order.is_empty() {
        return report;
    }
    let x1 = ord.x_order[0];
    let y1 = ord.y_order[0];

    // (1) The first x is adjacent to the whole opposite side.
    if !ord.y_order.iter().all(|&y| g.has_edge(x1, y)) {
        report
            .violations
            .push(format!("clause 1: vertex {x1} misses part of the far side"));
    }
    // (2) Every neighbour of the first y is adjacent to the whole far side.
    for xi in g.neighbors(y1) {
        if !ord.y_order.iter().all(|&y| g.has_edge(xi, y)) {
            report
                .violations
                .push(format!("clause 2: vertex {xi} in N({y1}) misses part of the far side"));
        }
    }
    // (3) Edges from N(y1) into y1 are simplicial in the underlying graph.
    for xi in g.neighbors(y1) {
        if !sse_masked(&unsigned, &y_mask, xi, y1) {
            report.violations.push(format!("clause 3: edge {xi}-{y1} is not simplicial"));
        }
    }
    // (4) Removing a simplicial edge keeps the graph non-separable.
    for (u, v, _) in g.edges() {
        if sse_masked(&unsigned, &y_mask, u, v) {
            let mut h = g.clone();
            h.delete_edge_mut(u, v);
            if separability_witness(&h).is_some() {
                report
                    .violations
                    .push(format!("clause 4: deleting simplicial edge {u}-{v} separates"));
            }
        }
    }
    // (5) Every non-simplicial edge has a later/earlier non-adjacent pair.
    let mut xpos = vec![usize::MAX; g.n()];
    for (i, &x) in ord.x_order.iter().enumerate() {
        xpos[x] = i;
    }
    let mut ypos = vec![usize::MAX; g.n()];
    for (j, &y) in ord.y_order.iter().enumerate() {
        ypos[y] = j;
    }
    for (a, b, _) in g.edges() {
        let (xi, yj) = if bip.side_of(a) == Side::X { (a, b) } else { (b, a) };
        if sse_masked(&unsigned, &y_mask, xi, yj) {
            continue;
        }
        let found = g.neighbors(yj).any(|xk| {
            xpos[xk] > xpos[xi]
                && g.neighbors(xi).any(|yl| ypos[yl] < ypos[yj] && !g.has_edge(xk, yl))
        });
        if !found {
            report
                .violations
                .push(format!("clause 5: no witness pair for non-simplicial edge {xi}-{yj}"));
        }
    }
    report
}

fn non_trivial_components_after_removal(
    g: &SignedGraph,
    removed: &[usize],
) -> (Vec<Vec<usize>>, usize) {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let sub = g.induced(&keep).expect("removal keeps vertices in range");
    let comps = sub.graph.components();
    let mut out = Vec::new();
    let mut non_trivial = 0;
    for comp in comps {
        if comp.iter().any(|&v| sub.graph.degree(v) > 0) {
            non_trivial += 1;
        }
        out.push(comp.iter().map(|&v| sub.vertex_map[v]).collect());
    }
    (out, non_trivial)
}

fn is_separating(g: &SignedGraph, removed: &[usize]) -> bool {
    non_trivial_components_after_removal(g, removed).1 >= 2
}

/// Finds a separator that minimally separates two non-trivial components:
/// start from the complement of a 2K₂ witness and greedily drop the lowest
/// removable vertex while the remainder still splits. Once no single vertex
/// can go, every surviving separator vertex has neighbours in each
/// non-trivial component of the remainder.
pub fn find_minimal_separation(
    g: &SignedGraph,
) -> Result<Option<SeparationCertificate>, GraphError> {
    g.bipartition()?;
    let Some(((a, b), (c, d))) = separability_witness(g) else {
        return Ok(None);
    };
    let mut sep: Vec<usize> =
        (0..g.n()).filter(|&v| v != a && v != b && v != c && v != d).collect();
    debug_assert!(is_separating(g, &sep));
    loop {
        let mut shrunk = false;
        for i in 0..sep.len() {
            let mut candidate = sep.clone();
            candidate.remove(i);
            if is_separating(g, &candidate) {
                sep = candidate;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            break;
        }
    }
    let (comps, _) = non_trivial_components_after_removal(g, &sep);
    let mut non_trivial = comps
        .into_iter()
        .filter(|c| c.iter().any(|&u| c.iter().any(|&v| u != v && g.has_edge(u, v))));
    let h1 = non_trivial.next().expect("separating remainder has two edge components");
    let h2 = non_trivial.next().expect("separating remainder has two edge components");
    let cert = SeparationCertificate { separator: sep, component_h1: h1, component_h2: h2 };
    debug_assert!(cert.is_valid_for(g));
    Ok(Some(cert))
}

/// All tadpoles with end `v` and exact tail length `k`, in deterministic
/// order: tail paths lexicographic, then heads `y < z`, then `w`, with type 1
/// listed before type 2 for the same vertices.
pub(crate) fn tadpoles_at_exact(g: &SignedGraph, v: usize, k: usize) -> Vec<TadpoleDescriptor> {
    let mut out = Vec::new();
    let mut path = vec![v];
    extend_tail(g, &mut path, k, &mut out);
    out
}

fn extend_tail(
    g: &SignedGraph,
    path: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<TadpoleDescriptor>,
) {
    if path.len() == k {
        complete_heads(g, path, out);
        return;
    }
    let last = *path.last().unwrap();
    let candidates: Vec<usize> = g.neighbors(last).collect();
    for u in candidates {
        // Tail must stay an induced path.
        if path.contains(&u) || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, u)) {
            continue;
        }
        path.push(u);
        extend_tail(g, path, k, out);
        path.pop();
    }
}

fn complete_heads(g: &SignedGraph, path: &[usize], out: &mut Vec<TadpoleDescriptor>) {
    let k = path.len();
    let xk = path[k - 1];
    let heads: Vec<usize> = g
        .neighbors(xk)
        .filter(|&y| {
            g.sign(xk, y) == Some(Sign::Negative)
                && !path.contains(&y)
                && !path[..k - 1].iter().any(|&p| g.has_edge(p, y))
        })
        .collect();
    for (i, &y) in heads.iter().enumerate() {
        for &z in &heads[i + 1..] {
            if g.has_edge(y, z) {
                continue;
            }
            for w in 0..g.n() {
                if w == y || w == z || path.contains(&w) {
                    continue;
                }
                if !g.has_edge(w, y) || !g.has_edge(w, z) {
                    continue;
                }
                // Type 1: w sees nothing of the tail.
                if !path.iter().any(|&p| g.has_edge(p, w)) {
                    out.push(TadpoleDescriptor {
                        kind: TadpoleKind::Type1,
                        tail: path.to_vec(),
                        w,
                        y,
                        z,
                    });
                }
                // Type 2: w sees exactly the second-to-last tail vertex, negatively.
                if k >= 2
                    && g.sign(w, path[k - 2]) == Some(Sign::Negative)
                    && !path[..k - 2].iter().any(|&p| g.has_edge(p, w))
                    && !g.has_edge(w, xk)
                {
                    out.push(TadpoleDescriptor {
                        kind: TadpoleKind::Type2,
                        tail: path.to_vec(),
                        w,
                        y,
                        z,
                    });
                }
            }
        }
    }
}

/// Finds an induced tadpole of `g` whose end is `v`, shortest tail first,
/// tail length bounded by `cap_k`.
pub fn find_tadpole_at(g: &SignedGraph, v: usize, cap_k: usize) -> Option<TadpoleDescriptor> {
    if v >= g.n() || g.bipartition().is_err() {
        return None;
    }
    for k in 1..=cap_k.min(g.n()) {
        if let Some(t) = tadpoles_at_exact(g, v, k).into_iter().next() {
            debug_assert!(t.matches(g));
            return Some(t);
        }
    }
    None
}

/// Default tail-length bound for tadpole searches.
pub const DEFAULT_TADPOLE_CAP: usize = 16;

/// How a vertex outside a tadpole relates to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdjacencyClass {
    NotCompletelyAdjacent,
    CompletelyAdjacentAllPositive,
    /// Completely adjacent, with the listed cross edges negative.
    CompletelyAdjacentWithExceptions(Vec<(usize, usize)>),
}

/// Classifies `u` against tadpole `t`: completely adjacent means adjacent to
/// every tadpole vertex on the opposite side of the host bipartition.
pub fn check_complete_adjacency(
    g: &SignedGraph,
    u: usize,
    t: &TadpoleDescriptor,
) -> Result<AdjacencyClass, GraphError> {
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let bip = g.bipartition()?;
    Ok(classify_complete_adjacency(g, &bip, u, t))
}

pub(crate) fn classify_complete_adjacency(
    g: &SignedGraph,
    bip: &Bipartition,
    u: usize,
    t: &TadpoleDescriptor,
) -> AdjacencyClass {
    let side = bip.side_of(u);
    let mut exceptions = Vec::new();
    for v in t.vertices() {
        if bip.side_of(v) == side {
            continue;
        }
        match g.sign(u, v) {
            None => return AdjacencyClass::NotCompletelyAdjacent,
            Some(Sign::Negative) => exceptions.push((u.min(v), u.max(v))),
            Some(Sign::Positive) => {}
        }
    }
    if exceptions.is_empty() {
        AdjacencyClass::CompletelyAdjacentAllPositive
    } else {
        AdjacencyClass::CompletelyAdjacentWithExceptions(exceptions)
    }
}
