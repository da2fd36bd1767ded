//! Generators, membership tests, and witness extraction for the forbidden
//! family: the finite templates F1..F6 and D, the five minimal signed
//! complete-bigraph obstructions, all signings of even cycles of length at
//! least six, and the two infinite tadpole constructions (sums identify the
//! ends, joins add controlled positive complete adjacencies).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::elimination::{recognize_chordal_signed_bigraph, sse_masked};
use crate::graph::{GraphError, PatternGraph, Sign, SignedGraph};
use crate::iso;
use crate::structure::{tadpoles_at_exact, TadpoleDescriptor, TadpoleKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("parameter out of bounds: {0}")]
    ParamOutOfBounds(String),
    #[error("input is chordal; no forbidden witness exists")]
    InputIsChordal,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("join options incompatible with the tadpole shapes: {0}")]
    IncompatibleParities(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---------------------------------------------------------------------------
// Figure templates

pub(crate) struct Figure {
    pub pattern: PatternGraph,
    pub marks: BTreeMap<String, usize>,
}

fn parse_figures(text: &str) -> BTreeMap<String, Figure> {
    let mut out = BTreeMap::new();
    let mut name: Option<String> = None;
    let mut n = 0usize;
    let mut blue = Vec::new();
    let mut red = Vec::new();
    let mut black = Vec::new();
    let mut marks = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next().unwrap() {
            "pattern" => name = Some(it.next().expect("pattern name").to_string()),
            "n" => n = it.next().unwrap().parse().expect("vertex count"),
            "blue" | "red" | "black" => {
                let u: usize = it.next().unwrap().parse().unwrap();
                let v: usize = it.next().unwrap().parse().unwrap();
                match line.split_whitespace().next().unwrap() {
                    "blue" => blue.push((u, v)),
                    "red" => red.push((u, v)),
                    _ => black.push((u, v)),
                }
            }
            "mark" => {
                let key = it.next().unwrap().to_string();
                let v: usize = it.next().unwrap().parse().unwrap();
                marks.insert(key, v);
            }
            "end" => {
                let pattern = PatternGraph::new(n, &blue, &red, &black)
                    .expect("checked-in figure data is well formed");
                out.insert(
                    name.take().expect("pattern name before end"),
                    Figure { pattern, marks: std::mem::take(&mut marks) },
                );
                blue.clear();
                red.clear();
                black.clear();
            }
            other => panic!("unknown figure directive {other:?}"),
        }
    }
    out
}

static FIGURES: OnceLock<BTreeMap<String, Figure>> = OnceLock::new();

pub(crate) fn figures() -> &'static BTreeMap<String, Figure> {
    FIGURES.get_or_init(|| parse_figures(include_str!("../data/figures.txt")))
}

pub(crate) fn figure(name: &str) -> &'static Figure {
    figures().get(name).unwrap_or_else(|| panic!("no figure named {name}"))
}

/// The checked-in template for a named figure family (F1..F6, M1..M5, D,
/// W1..W6, Z1, Z2).
pub fn figure_pattern(name: &str) -> &'static PatternGraph {
    &figure(name).pattern
}

// ---------------------------------------------------------------------------
// Tags

/// Shape of a tadpole: its kind and tail length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TadpoleShape {
    pub kind: TadpoleKind,
    pub tail: usize,
}

impl TadpoleShape {
    pub fn new(kind: TadpoleKind, tail: usize) -> TadpoleShape {
        TadpoleShape { kind, tail }
    }

    pub fn vertex_count(&self) -> usize {
        self.tail + 3
    }

    /// A single-vertex tail of type 1 is the smallest tadpole, whose joins
    /// carry the optional-sign exception edge.
    pub fn is_w1(&self) -> bool {
        self.kind == TadpoleKind::Type1 && self.tail == 1
    }
}

impl fmt::Display for TadpoleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.kind {
            TadpoleKind::Type1 => 1,
            TadpoleKind::Type2 => 2,
        };
        write!(f, "T{} k={}", t, self.tail)
    }
}

/// Identifies which forbidden family (or auxiliary template family) a graph
/// belongs to, together with the family parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    /// Every signing of the cycle on `2k` vertices, `k >= 3`.
    C2k(usize),
    D,
    /// The five minimal non-chordal signed complete bigraphs, 1-based.
    MinimalComplete(usize),
    W(usize),
    Z(usize),
    Sum(TadpoleShape, TadpoleShape),
    Join {
        left: TadpoleShape,
        right: TadpoleShape,
        ends_adjacent: bool,
        /// Sign of the exception edge into the left tadpole's `w`; only
        /// present when the left constituent is the smallest tadpole.
        left_w_sign: Option<Sign>,
        right_w_sign: Option<Sign>,
    },
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::F1 => write!(f, "F1"),
            FamilyTag::F2 => write!(f, "F2"),
            FamilyTag::F3 => write!(f, "F3"),
            FamilyTag::F4 => write!(f, "F4"),
            FamilyTag::F5 => write!(f, "F5"),
            FamilyTag::F6 => write!(f, "F6"),
            FamilyTag::C2k(k) => write!(f, "C2k k={k}"),
            FamilyTag::D => write!(f, "D"),
            FamilyTag::MinimalComplete(i) => write!(f, "M{i}"),
            FamilyTag::W(i) => write!(f, "W{i}"),
            FamilyTag::Z(i) => write!(f, "Z{i}"),
            FamilyTag::Sum(a, b) => write!(f, "Sum({a}, {b})"),
            FamilyTag::Join { left, right, ends_adjacent, left_w_sign, right_w_sign } => {
                write!(
                    f,
                    "Join({left}, {right}, {})",
                    if *ends_adjacent { "adjacent" } else { "nonadjacent" }
                )?;
                if let Some(s) = left_w_sign {
                    write!(f, " lw={s}")?;
                }
                if let Some(s) = right_w_sign {
                    write!(f, " rw={s}")?;
                }
                Ok(())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Concrete tadpoles

/// A concrete signed tadpole graph together with its role labelling.
#[derive(Clone, Debug)]
pub struct Tadpole {
    pub graph: SignedGraph,
    pub desc: TadpoleDescriptor,
}

impl Tadpole {
    pub fn new(graph: SignedGraph, desc: TadpoleDescriptor) -> Result<Tadpole, CatalogError> {
        if desc.vertices().len() != graph.n() || !desc.matches(&graph) {
            return Err(CatalogError::InternalInconsistency(
                "descriptor does not cover the graph".into(),
            ));
        }
        Ok(Tadpole { graph, desc })
    }

    pub fn shape(&self) -> TadpoleShape {
        TadpoleShape::new(self.desc.kind, self.desc.k())
    }

    /// Bipartition side of a vertex relative to the end (the end is side 0).
    pub(crate) fn side_of(&self, v: usize) -> u8 {
        if let Some(i) = self.desc.tail.iter().position(|&t| t == v) {
            (i % 2) as u8
        } else if v == self.desc.w {
            ((self.desc.k() - 1) % 2) as u8
        } else {
            (self.desc.k() % 2) as u8
        }
    }
}

/// Template for a tadpole in canonical layout: tail `0..k`, then `w`, `y`,
/// `z`. Tail edges and the two head edges at `w` are black; the edges from
/// the tail's far end to `y` and `z` are red, as is the type-2 edge from `w`
/// back to the second-to-last tail vertex.
pub fn tadpole_pattern(kind: TadpoleKind, k: usize) -> Result<PatternGraph, CatalogError> {
    if k == 0 || (kind == TadpoleKind::Type2 && k < 2) {
        return Err(CatalogError::ParamOutOfBounds(format!(
            "tadpole of kind {kind:?} needs a longer tail than {k}"
        )));
    }
    let n = k + 3;
    let (w, y, z) = (k, k + 1, k + 2);
    let mut black: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    black.push((w, y));
    black.push((w, z));
    let mut red = vec![(k - 1, y), (k - 1, z)];
    if kind == TadpoleKind::Type2 {
        red.push((w, k - 2));
    }
    Ok(PatternGraph::new(n, &[], &red, &black).expect("tadpole layout is simple"))
}

pub fn canonical_tadpole_descriptor(kind: TadpoleKind, k: usize) -> TadpoleDescriptor {
    TadpoleDescriptor { kind, tail: (0..k).collect(), w: k, y: k + 1, z: k + 2 }
}

/// Every sign assignment of the black edges of the `shape` template, without
/// isomorphism reduction (the combiners deduplicate their final output).
pub fn tadpole_expansions(shape: TadpoleShape) -> Result<Vec<Tadpole>, CatalogError> {
    let pattern = tadpole_pattern(shape.kind, shape.tail)?;
    let desc = canonical_tadpole_descriptor(shape.kind, shape.tail);
    let blacks = pattern.black_edges().to_vec();
    let mut out = Vec::with_capacity(1 << blacks.len());
    for assign in 0..(1usize << blacks.len()) {
        let mut edges: Vec<(usize, usize, Sign)> = pattern
            .red_edges()
            .iter()
            .map(|&(u, v)| (u, v, Sign::Negative))
            .collect();
        for (i, &(u, v)) in blacks.iter().enumerate() {
            let s = if assign >> i & 1 == 0 { Sign::Positive } else { Sign::Negative };
            edges.push((u, v, s));
        }
        let graph = SignedGraph::build(pattern.n(), &edges).expect("template is simple");
        out.push(Tadpole::new(graph, desc.clone())?);
    }
    Ok(out)
}

/// Disjoint union of two tadpoles with their end vertices identified.
/// No other edges are added.
pub fn sum_of_tadpoles(t1: &Tadpole, t2: &Tadpole) -> SignedGraph {
    let n1 = t1.graph.n();
    let n2 = t2.graph.n();
    let end1 = t1.desc.end();
    let end2 = t2.desc.end();
    // Right-hand vertices keep their relative order, skipping the merged end.
    let mut map2 = vec![usize::MAX; n2];
    let mut next = n1;
    for (v, slot) in map2.iter_mut().enumerate() {
        if v == end2 {
            *slot = end1;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize, Sign)> = t1.graph.edges();
    for (u, v, s) in t2.graph.edges() {
        edges.push((map2[u], map2[v], s));
    }
    SignedGraph::build(n1 + n2 - 1, &edges).expect("ends merge distinct vertex sets")
}

/// Option bits for joins. `None` entries enumerate every legal choice.
#[derive(Clone, Copy, Debug, Default)]
pub struct JoinOptions {
    /// Whether the two ends land on opposite sides (making them adjacent).
    pub ends_adjacent: Option<bool>,
    /// Sign of the exception edge into the left tadpole's `w`, applicable
    /// only when the left constituent is the smallest tadpole.
    pub left_w_sign: Option<Sign>,
    pub right_w_sign: Option<Sign>,
}

/// All joins of two tadpoles consistent with `options`: each end becomes
/// completely adjacent to the other tadpole by positive edges, except that a
/// smallest-tadpole constituent forces the ends adjacent and leaves the sign
/// of the edge into its `w` free.
pub fn join_of_tadpoles(
    t1: &Tadpole,
    t2: &Tadpole,
    options: &JoinOptions,
) -> Result<Vec<SignedGraph>, CatalogError> {
    let w1_left = t1.shape().is_w1();
    let w1_right = t2.shape().is_w1();
    if options.left_w_sign.is_some() && !w1_left {
        return Err(CatalogError::IncompatibleParities(
            "left exception sign given but the left tadpole is not the smallest".into(),
        ));
    }
    if options.right_w_sign.is_some() && !w1_right {
        return Err(CatalogError::IncompatibleParities(
            "right exception sign given but the right tadpole is not the smallest".into(),
        ));
    }
    let adjacency_choices: Vec<bool> = match options.ends_adjacent {
        Some(false) if w1_left || w1_right => {
            return Err(CatalogError::IncompatibleParities(
                "a smallest-tadpole constituent forces the ends adjacent".into(),
            ));
        }
        Some(b) => vec![b],
        None if w1_left || w1_right => vec![true],
        None => vec![false, true],
    };
    let sign_choices = |pin: Option<Sign>, applicable: bool| -> Vec<Option<Sign>> {
        if !applicable {
            vec![None]
        } else if let Some(s) = pin {
            vec![Some(s)]
        } else {
            vec![Some(Sign::Positive), Some(Sign::Negative)]
        }
    };

    let n1 = t1.graph.n();
    let n2 = t2.graph.n();
    let offset = |v: usize| v + n1;
    let mut out = Vec::new();
    for &adjacent in &adjacency_choices {
        for &lw in &sign_choices(options.left_w_sign, w1_left) {
            for &rw in &sign_choices(options.right_w_sign, w1_right) {
                let mut edges: Vec<(usize, usize, Sign)> = t1.graph.edges();
                for (u, v, s) in t2.graph.edges() {
                    edges.push((offset(u), offset(v), s));
                }
                // Side of a right vertex in the union: flipped when the ends
                // are on opposite sides.
                let right_side = |v: usize| -> u8 {
                    if adjacent {
                        1 - t2.side_of(v)
                    } else {
                        t2.side_of(v)
                    }
                };
                let x = t1.desc.end();
                let xp = t2.desc.end();
                for v in 0..n2 {
                    if right_side(v) != 0 {
                        let sign = if w1_right && v == t2.desc.w {
                            rw.unwrap()
                        } else {
                            Sign::Positive
                        };
                        edges.push((x, offset(v), sign));
                    }
                }
                let xp_side = if adjacent { 1 } else { 0 };
                for u in 0..n1 {
                    if u != x && t1.side_of(u) != xp_side {
                        let sign = if w1_left && u == t1.desc.w {
                            lw.unwrap()
                        } else {
                            Sign::Positive
                        };
                        edges.push((u, offset(xp), sign));
                    }
                }
                out.push(
                    SignedGraph::build(n1 + n2, &edges).expect("join layout is simple"),
                );
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Generation

/// Upper bounds for the parametric families.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorCaps {
    pub max_cycle_half_length: usize,
    pub max_tail: usize,
}

impl Default for GeneratorCaps {
    fn default() -> Self {
        GeneratorCaps { max_cycle_half_length: 8, max_tail: 8 }
    }
}

fn dedup_by_sign_iso(graphs: Vec<SignedGraph>) -> Vec<SignedGraph> {
    let mut reps: Vec<(u64, SignedGraph)> = Vec::new();
    for g in graphs {
        let key = g.invariant_key();
        if !reps.iter().any(|(k, r)| *k == key && iso::sign_isomorphism(r, &g).is_some()) {
            reps.push((key, g));
        }
    }
    reps.into_iter().map(|(_, g)| g).collect()
}

/// All members of the tagged family, deduplicated up to sign isomorphism.
pub fn generate(tag: &FamilyTag) -> Result<Vec<SignedGraph>, CatalogError> {
    generate_with_caps(tag, &GeneratorCaps::default())
}

pub fn generate_with_caps(
    tag: &FamilyTag,
    caps: &GeneratorCaps,
) -> Result<Vec<SignedGraph>, CatalogError> {
    match tag {
        FamilyTag::F1 => Ok(figure_pattern("F1").expand()),
        FamilyTag::F2 => Ok(figure_pattern("F2").expand()),
        FamilyTag::F3 => Ok(figure_pattern("F3").expand()),
        FamilyTag::F4 => Ok(figure_pattern("F4").expand()),
        FamilyTag::F5 => Ok(figure_pattern("F5").expand()),
        FamilyTag::F6 => Ok(figure_pattern("F6").expand()),
        FamilyTag::D => Ok(figure_pattern("D").expand()),
        FamilyTag::MinimalComplete(i) => {
            if !(1..=5).contains(i) {
                return Err(CatalogError::ParamOutOfBounds(format!(
                    "minimal complete index {i} not in 1..=5"
                )));
            }
            Ok(figure_pattern(&format!("M{i}")).expand())
        }
        FamilyTag::W(i) => {
            if !(1..=6).contains(i) {
                return Err(CatalogError::ParamOutOfBounds(format!("W index {i} not in 1..=6")));
            }
            Ok(figure_pattern(&format!("W{i}")).expand())
        }
        FamilyTag::Z(i) => {
            if !(1..=2).contains(i) {
                return Err(CatalogError::ParamOutOfBounds(format!("Z index {i} not in 1..=2")));
            }
            Ok(figure_pattern(&format!("Z{i}")).expand())
        }
        FamilyTag::C2k(k) => {
            if *k < 3 || *k > caps.max_cycle_half_length {
                return Err(CatalogError::ParamOutOfBounds(format!(
                    "cycle half-length {k} outside 3..={}",
                    caps.max_cycle_half_length
                )));
            }
            let len = 2 * k;
            let mut raw = Vec::with_capacity(1 << len);
            for assign in 0u64..(1u64 << len) {
                let edges: Vec<(usize, usize, Sign)> = (0..len)
                    .map(|i| {
                        let s = if assign >> i & 1 == 0 { Sign::Positive } else { Sign::Negative };
                        (i, (i + 1) % len, s)
                    })
                    .collect();
                raw.push(SignedGraph::build(len, &edges).expect("cycle is simple"));
            }
            Ok(dedup_by_sign_iso(raw))
        }
        FamilyTag::Sum(a, b) => {
            check_tail(a, caps)?;
            check_tail(b, caps)?;
            let mut raw = Vec::new();
            for t1 in tadpole_expansions(*a)? {
                for t2 in tadpole_expansions(*b)? {
                    raw.push(sum_of_tadpoles(&t1, &t2));
                }
            }
            Ok(dedup_by_sign_iso(raw))
        }
        FamilyTag::Join { left, right, ends_adjacent, left_w_sign, right_w_sign } => {
            check_tail(left, caps)?;
            check_tail(right, caps)?;
            let options = JoinOptions {
                ends_adjacent: Some(*ends_adjacent),
                left_w_sign: *left_w_sign,
                right_w_sign: *right_w_sign,
            };
            let mut raw = Vec::new();
            for t1 in tadpole_expansions(*left)? {
                for t2 in tadpole_expansions(*right)? {
                    raw.extend(join_of_tadpoles(&t1, &t2, &options)?);
                }
            }
            Ok(dedup_by_sign_iso(raw))
        }
    }
}

fn check_tail(shape: &TadpoleShape, caps: &GeneratorCaps) -> Result<(), CatalogError> {
    let min = match shape.kind {
        TadpoleKind::Type1 => 1,
        TadpoleKind::Type2 => 2,
    };
    if shape.tail < min || shape.tail > caps.max_tail {
        return Err(CatalogError::ParamOutOfBounds(format!(
            "tail length {} outside {}..={}",
            shape.tail, min, caps.max_tail
        )));
    }
    Ok(())
}

/// All tadpole shapes with tails up to `max_tail`.
pub fn tadpole_shapes(max_tail: usize) -> Vec<TadpoleShape> {
    let mut out = Vec::new();
    for k in 1..=max_tail {
        out.push(TadpoleShape::new(TadpoleKind::Type1, k));
        if k >= 2 {
            out.push(TadpoleShape::new(TadpoleKind::Type2, k));
        }
    }
    out
}

/// All sum tags with tails up to `max_tail` (unordered shape pairs).
pub fn sum_tags(max_tail: usize) -> Vec<FamilyTag> {
    let shapes = tadpole_shapes(max_tail);
    let mut out = Vec::new();
    for (i, &a) in shapes.iter().enumerate() {
        for &b in &shapes[i..] {
            out.push(FamilyTag::Sum(a, b));
        }
    }
    out
}

/// All join tags with tails up to `max_tail`, covering both end parities and
/// every exception-sign choice of smallest-tadpole constituents.
pub fn join_tags(max_tail: usize) -> Vec<FamilyTag> {
    let shapes = tadpole_shapes(max_tail);
    let mut out = Vec::new();
    for (i, &left) in shapes.iter().enumerate() {
        for &right in &shapes[i..] {
            let adjacency: &[bool] =
                if left.is_w1() || right.is_w1() { &[true] } else { &[false, true] };
            let lsigns: Vec<Option<Sign>> = if left.is_w1() {
                vec![Some(Sign::Positive), Some(Sign::Negative)]
            } else {
                vec![None]
            };
            let rsigns: Vec<Option<Sign>> = if right.is_w1() {
                vec![Some(Sign::Positive), Some(Sign::Negative)]
            } else {
                vec![None]
            };
            for &ends_adjacent in adjacency {
                for &lw in &lsigns {
                    for &rw in &rsigns {
                        out.push(FamilyTag::Join {
                            left,
                            right,
                            ends_adjacent,
                            left_w_sign: lw,
                            right_w_sign: rw,
                        });
                    }
                }
            }
        }
    }
    out
}

/// A generated member together with its tag; the unit the catalog command
/// writes out and the soundness suite consumes.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub tag: FamilyTag,
    pub graph: SignedGraph,
}

/// The whole forbidden catalog at the given caps: full expansions of F1..F6
/// and D, the five minimal complete-bigraph graphs, every cycle family up to
/// the cycle cap, and all sums and joins up to the tail cap.
pub fn standard_catalog(caps: &GeneratorCaps) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut tags: Vec<FamilyTag> = vec![
        FamilyTag::F1,
        FamilyTag::F2,
        FamilyTag::F3,
        FamilyTag::F4,
        FamilyTag::F5,
        FamilyTag::F6,
        FamilyTag::D,
    ];
    tags.extend((1..=5).map(FamilyTag::MinimalComplete));
    tags.extend((3..=caps.max_cycle_half_length).map(FamilyTag::C2k));
    tags.extend(sum_tags(caps.max_tail));
    tags.extend(join_tags(caps.max_tail));
    let mut out = Vec::new();
    for tag in tags {
        for graph in generate_with_caps(&tag, caps)? {
            out.push(CatalogEntry { tag: tag.clone(), graph });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Membership

/// Family classes usable as search filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyClass {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    Cycles,
    D,
    /// The five minimal complete-bigraph obstructions.
    Minimal,
    Sum,
    Join,
}

/// Every class making up the forbidden family.
pub const FORBIDDEN_CLASSES: [FamilyClass; 10] = [
    FamilyClass::F1,
    FamilyClass::F2,
    FamilyClass::F3,
    FamilyClass::F4,
    FamilyClass::F5,
    FamilyClass::F6,
    FamilyClass::Cycles,
    FamilyClass::D,
    FamilyClass::Sum,
    FamilyClass::Join,
];

/// Classes sufficient for signed complete bigraphs.
pub const COMPLETE_CLASSES: [FamilyClass; 4] =
    [FamilyClass::F1, FamilyClass::F2, FamilyClass::F3, FamilyClass::F4];

/// Classes sufficient for non-separable signed bigraphs.
pub const NON_SEPARABLE_CLASSES: [FamilyClass; 6] = [
    FamilyClass::F1,
    FamilyClass::F2,
    FamilyClass::F3,
    FamilyClass::F4,
    FamilyClass::F5,
    FamilyClass::F6,
];

/// Tag for `g` when the whole graph is a member of one of the forbidden
/// families, `None` otherwise. Finite families match against their templates,
/// cycles and the two tadpole constructions by structural decomposition.
pub fn membership(g: &SignedGraph) -> Option<FamilyTag> {
    membership_in(g, &FORBIDDEN_CLASSES)
}

pub fn membership_in(g: &SignedGraph, classes: &[FamilyClass]) -> Option<FamilyTag> {
    for class in classes {
        let hit = match class {
            FamilyClass::F1 => template_member(g, "F1", FamilyTag::F1),
            FamilyClass::F2 => template_member(g, "F2", FamilyTag::F2),
            FamilyClass::F3 => template_member(g, "F3", FamilyTag::F3),
            FamilyClass::F4 => template_member(g, "F4", FamilyTag::F4),
            FamilyClass::F5 => template_member(g, "F5", FamilyTag::F5),
            FamilyClass::F6 => template_member(g, "F6", FamilyTag::F6),
            FamilyClass::D => template_member(g, "D", FamilyTag::D),
            FamilyClass::Minimal => (1..=5).find_map(|i| {
                template_member(g, &format!("M{i}"), FamilyTag::MinimalComplete(i))
            }),
            FamilyClass::Cycles => cycle_member(g),
            FamilyClass::Sum => sum_member(g),
            FamilyClass::Join => join_member(g),
        };
        if hit.is_some() {
            return hit;
        }
    }
    None
}

fn template_member(g: &SignedGraph, name: &str, tag: FamilyTag) -> Option<FamilyTag> {
    let p = figure_pattern(name);
    iso::pattern_embedding(p, g, &[]).map(|_| tag)
}

fn cycle_member(g: &SignedGraph) -> Option<FamilyTag> {
    let n = g.n();
    if n < 6 || !n.is_multiple_of(2) || g.m() != n {
        return None;
    }
    if (0..n).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return None;
    }
    Some(FamilyTag::C2k(n / 2))
}

/// Tadpoles covering all of `h` whose end is `end`.
fn covering_tadpoles(h: &SignedGraph, end: usize) -> Vec<TadpoleDescriptor> {
    if h.n() < 4 {
        return Vec::new();
    }
    tadpoles_at_exact(h, end, h.n() - 3)
}

fn sum_member(g: &SignedGraph) -> Option<FamilyTag> {
    if g.n() < 7 || g.bipartition().is_err() {
        return None;
    }
    for x in 0..g.n() {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
        let sub = g.induced(&keep).expect("x in range");
        let comps = sub.graph.components();
        if comps.len() != 2 {
            continue;
        }
        let sides: Vec<Vec<usize>> = comps
            .iter()
            .map(|c| {
                let mut own: Vec<usize> = c.iter().map(|&v| sub.vertex_map[v]).collect();
                own.push(x);
                own
            })
            .collect();
        let halves: Vec<Option<TadpoleShape>> = sides
            .iter()
            .map(|verts| {
                let part = g.induced(verts).expect("vertices in range");
                let end_local = part.vertex_map.iter().position(|&v| v == x).unwrap();
                covering_tadpoles(&part.graph, end_local)
                    .first()
                    .map(|d| TadpoleShape::new(d.kind, d.k()))
            })
            .collect();
        if let (Some(a), Some(b)) = (halves[0], halves[1]) {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            return Some(FamilyTag::Sum(a, b));
        }
    }
    None
}

fn join_member(g: &SignedGraph) -> Option<FamilyTag> {
    if g.n() < 8 {
        return None;
    }
    let Ok(bip) = g.bipartition() else { return None };
    for x in 0..g.n() {
        for xp in 0..g.n() {
            if x == xp {
                continue;
            }
            let keep: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != xp).collect();
            let sub = g.induced(&keep).expect("in range");
            let comps = sub.graph.components();
            if comps.len() != 2 {
                continue;
            }
            let backmap = |c: &Vec<usize>| -> Vec<usize> {
                c.iter().map(|&v| sub.vertex_map[v]).collect()
            };
            let c1 = backmap(&comps[0]);
            let c2 = backmap(&comps[1]);
            if let Some(tag) = try_join_split(g, &bip, x, xp, &c1, &c2) {
                return Some(tag);
            }
        }
    }
    None
}

fn try_join_split(
    g: &SignedGraph,
    bip: &crate::graph::Bipartition,
    x: usize,
    xp: usize,
    c1: &[usize],
    c2: &[usize],
) -> Option<FamilyTag> {
    let mut left_vertices = c1.to_vec();
    left_vertices.push(x);
    let mut right_vertices = c2.to_vec();
    right_vertices.push(xp);
    let left = g.induced(&left_vertices).expect("in range");
    let right = g.induced(&right_vertices).expect("in range");
    let left_end = left.vertex_map.iter().position(|&v| v == x).unwrap();
    let right_end = right.vertex_map.iter().position(|&v| v == xp).unwrap();
    for lt in covering_tadpoles(&left.graph, left_end) {
        for rt in covering_tadpoles(&right.graph, right_end) {
            if let Some(tag) = verify_join_cross_edges(
                g,
                bip,
                x,
                xp,
                &lt,
                &left.vertex_map,
                &rt,
                &right.vertex_map,
            ) {
                return Some(tag);
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn verify_join_cross_edges(
    g: &SignedGraph,
    bip: &crate::graph::Bipartition,
    x: usize,
    xp: usize,
    lt: &TadpoleDescriptor,
    left_map: &[usize],
    rt: &TadpoleDescriptor,
    right_map: &[usize],
) -> Option<FamilyTag> {
    let left_shape = TadpoleShape::new(lt.kind, lt.k());
    let right_shape = TadpoleShape::new(rt.kind, rt.k());
    let ends_adjacent = bip.side_of(x) != bip.side_of(xp);
    if (left_shape.is_w1() || right_shape.is_w1()) && !ends_adjacent {
        return None;
    }
    let left_w = left_map[lt.w];
    let right_w = right_map[rt.w];
    let left_all: Vec<usize> = lt.vertices().iter().map(|&v| left_map[v]).collect();
    let right_all: Vec<usize> = rt.vertices().iter().map(|&v| right_map[v]).collect();

    // Expected cross edges from each end, with the sign each must carry
    // (None = free, recorded as the exception sign).
    let mut expected: BTreeMap<(usize, usize), Option<Sign>> = BTreeMap::new();
    let from_end = |end: usize,
                        far: &[usize],
                        far_is_w1: bool,
                        far_w: usize,
                        expected: &mut BTreeMap<(usize, usize), Option<Sign>>| {
        for &v in far {
            if bip.side_of(v) == bip.side_of(end) {
                continue;
            }
            let key = (end.min(v), end.max(v));
            let want = if far_is_w1 && v == far_w { None } else { Some(Sign::Positive) };
            // Both ends demand the shared end-to-end edge positively.
            let entry = expected.entry(key).or_insert(want);
            if want.is_some() {
                *entry = want;
            }
        }
    };
    from_end(x, &right_all, right_shape.is_w1(), right_w, &mut expected);
    from_end(xp, &left_all, left_shape.is_w1(), left_w, &mut expected);

    // Collect the actual cross edges.
    let mut actual: BTreeMap<(usize, usize), Sign> = BTreeMap::new();
    for &u in left_all.iter().chain(right_all.iter()) {
        for end in [x, xp] {
            if u == x || u == xp {
                continue;
            }
            let in_left = left_all.contains(&u);
            let end_in_left = end == x;
            if in_left == end_in_left {
                continue;
            }
            if let Some(s) = g.sign(end, u) {
                actual.insert((end.min(u), end.max(u)), s);
            }
        }
    }
    if let Some(s) = g.sign(x, xp) {
        actual.insert((x.min(xp), x.max(xp)), s);
    }

    if expected.len() != actual.len() {
        return None;
    }
    let mut left_w_sign = None;
    let mut right_w_sign = None;
    for (key, want) in &expected {
        let &got = actual.get(key)?;
        match want {
            Some(s) => {
                if got != *s {
                    return None;
                }
            }
            None => {
                // The free exception edge; remember its sign.
                if key.0 == left_w || key.1 == left_w {
                    left_w_sign = Some(got);
                } else {
                    right_w_sign = Some(got);
                }
            }
        }
    }
    if ends_adjacent != g.has_edge(x, xp) {
        return None;
    }
    // Normalize so the lexicographically smaller shape sits on the left.
    let (left_shape, right_shape, left_w_sign, right_w_sign) = if left_shape <= right_shape {
        (left_shape, right_shape, left_w_sign, right_w_sign)
    } else {
        (right_shape, left_shape, right_w_sign, left_w_sign)
    };
    Some(FamilyTag::Join {
        left: left_shape,
        right: right_shape,
        ends_adjacent,
        left_w_sign,
        right_w_sign,
    })
}

// ---------------------------------------------------------------------------
// Witnesses

/// A forbidden family member embedded inside a host graph, witnessing that
/// the host is not a chordal signed bigraph.
#[derive(Clone, Debug)]
pub struct ForbiddenWitness {
    pub tag: FamilyTag,
    /// The member graph itself (an induced subgraph of the host, relabelled).
    pub member: SignedGraph,
    /// `embedding[member_vertex] = host_vertex`.
    pub embedding: Vec<usize>,
}

impl ForbiddenWitness {
    /// Replays the embedding: injective, and the host induces exactly the
    /// member (edges, non-edges, and signs) on its image.
    pub fn is_valid_for(&self, host: &SignedGraph) -> bool {
        if self.embedding.len() != self.member.n() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.embedding {
            if v >= host.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for u in 0..self.member.n() {
            for v in u + 1..self.member.n() {
                if self.member.sign(u, v) != host.sign(self.embedding[u], self.embedding[v]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Peels vertices while the remainder stays non-chordal (lowest removable id
/// first); the fixpoint is vertex-minimal non-chordal and must classify into
/// the forbidden family.
pub fn minimal_non_chordal_witness(g: &SignedGraph) -> Result<ForbiddenWitness, CatalogError> {
    if recognize_chordal_signed_bigraph(g)?.is_some() {
        return Err(CatalogError::InputIsChordal);
    }
    let mut member = g.clone();
    let mut embedding: Vec<usize> = (0..g.n()).collect();
    'outer: loop {
        for v in 0..member.n() {
            let keep: Vec<usize> = (0..member.n()).filter(|&u| u != v).collect();
            let sub = member.induced(&keep).expect("in range");
            if recognize_chordal_signed_bigraph(&sub.graph)?.is_none() {
                embedding = sub.vertex_map.iter().map(|&u| embedding[u]).collect();
                member = sub.graph;
                continue 'outer;
            }
        }
        break;
    }
    let Some(tag) = membership(&member) else {
        return Err(CatalogError::InternalInconsistency(format!(
            "vertex-minimal non-chordal graph escaped the family: {member:?}"
        )));
    };
    Ok(ForbiddenWitness { tag, member, embedding })
}

/// Advances `c` to the next lexicographic `|c|`-combination of `0..n`;
/// false once exhausted.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] != i + n - k {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Scans vertex subsets of `g` (size ascending, then lexicographic) for an
/// induced member of the filtered families; the direct membership route used
/// by the verification suites.
pub fn find_induced_member(g: &SignedGraph, size_cap: usize) -> Option<ForbiddenWitness> {
    find_induced_member_in(g, size_cap, &FORBIDDEN_CLASSES)
}

pub fn find_induced_member_in(
    g: &SignedGraph,
    size_cap: usize,
    classes: &[FamilyClass],
) -> Option<ForbiddenWitness> {
    let n = g.n();
    let y_mask = g.bipartition().ok().map(|b| b.y_mask().to_vec());
    for size in 4..=size_cap.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if let Some(w) = witness_on_subset(g, &subset, classes, y_mask.as_deref()) {
                return Some(w);
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    None
}

fn witness_on_subset(
    g: &SignedGraph,
    subset: &[usize],
    classes: &[FamilyClass],
    y_mask: Option<&[u64]>,
) -> Option<ForbiddenWitness> {
    // No forbidden member has a signed simplicial edge; cheap necessary test.
    if let Some(mask) = y_mask {
        let sub = g.induced(subset).expect("subset in range");
        if sub.graph.m() == 0 {
            return None;
        }
        let has_sse = sub
            .graph
            .edges()
            .iter()
            .any(|&(u, v, _)| {
                sse_masked(&sub.graph, &subgraph_mask(mask, &sub.vertex_map), u, v)
            });
        if has_sse {
            return None;
        }
        let tag = membership_in(&sub.graph, classes)?;
        return Some(ForbiddenWitness { tag, member: sub.graph, embedding: sub.vertex_map });
    }
    let sub = g.induced(subset).expect("subset in range");
    let tag = membership_in(&sub.graph, classes)?;
    Some(ForbiddenWitness { tag, member: sub.graph, embedding: sub.vertex_map })
}

fn subgraph_mask(host_y_mask: &[u64], vertex_map: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; crate::graph::words_for(vertex_map.len())];
    for (new, &old) in vertex_map.iter().enumerate() {
        if crate::graph::bit_get(host_y_mask, old) {
            crate::graph::bit_set(&mut out, new);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::recognize_chordal_signed_bigraph;
    use crate::graph::Sign::{Negative as N, Positive as P};

    #[test]
    fn figure_transcription_tallies() {
        // (name, vertices, blue, red, black)
        let expect = [
            ("F1", 4, 0, 4, 0),
            ("F2", 5, 0, 4, 2),
            ("F3", 6, 0, 4, 4),
            ("F4", 6, 0, 3, 6),
            ("F5", 6, 0, 2, 6),
            ("F6", 8, 0, 5, 7),
            ("M1", 4, 0, 4, 0),
            ("M2", 5, 2, 4, 0),
            ("M3", 6, 4, 4, 0),
            ("M4", 6, 6, 3, 0),
            ("M5", 6, 5, 4, 0),
            ("D", 6, 0, 1, 6),
            ("W1", 4, 0, 2, 2),
            ("W2", 5, 0, 2, 3),
            ("W3", 5, 0, 3, 3),
            ("W4", 6, 0, 3, 4),
            ("W5", 5, 0, 2, 4),
            ("W6", 5, 0, 1, 4),
            ("Z1", 5, 0, 2, 3),
            ("Z2", 6, 0, 3, 4),
        ];
        for (name, n, blue, red, black) in expect {
            let p = figure_pattern(name);
            assert_eq!(p.n(), n, "{name} vertex count");
            assert_eq!(p.blue_edges().len(), blue, "{name} blue tally");
            assert_eq!(p.red_edges().len(), red, "{name} red tally");
            assert_eq!(p.black_edges().len(), black, "{name} black tally");
        }
        assert_eq!(figures().len(), 20);
    }

    #[test]
    fn f_patterns_expand_to_expected_counts() {
        assert_eq!(generate(&FamilyTag::F1).unwrap().len(), 1);
        let f2 = figure_pattern("F2");
        assert_eq!(f2.raw_expansion_count(), 4);
        assert_eq!(generate(&FamilyTag::F2).unwrap().len(), 3);
    }

    #[test]
    fn f1_is_the_negative_four_cycle() {
        let f1 = generate(&FamilyTag::F1).unwrap().remove(0);
        let neg_c4 =
            SignedGraph::build(4, &[(0, 1, N), (1, 2, N), (2, 3, N), (3, 0, N)]).unwrap();
        assert!(iso::sign_isomorphism(&f1, &neg_c4).is_some());
    }

    #[test]
    fn minimal_complete_two_is_the_blue_black_expansion() {
        // Both black edges of the five-vertex template made positive.
        let m2 = generate(&FamilyTag::MinimalComplete(2)).unwrap().remove(0);
        let f2_all_blue = SignedGraph::build(
            5,
            &[(0, 2, N), (0, 3, N), (1, 3, N), (1, 4, N), (1, 2, P), (0, 4, P)],
        )
        .unwrap();
        assert!(iso::sign_isomorphism(&m2, &f2_all_blue).is_some());
    }

    #[test]
    fn dropping_the_outside_vertex_of_a_half_negative_expansion_gives_f1() {
        // The five-vertex template with one black edge negative contains the
        // all-negative four-cycle after deleting the right vertex.
        let g = SignedGraph::build(
            5,
            &[(0, 2, N), (0, 3, N), (1, 3, N), (1, 4, N), (1, 2, N), (0, 4, P)],
        )
        .unwrap();
        let sub = g.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(membership(&sub.graph), Some(FamilyTag::F1));
    }

    #[test]
    fn cycle_family_counts_and_membership() {
        let c6 = generate(&FamilyTag::C2k(3)).unwrap();
        // 64 signings before deduplication.
        assert!(c6.len() <= 64 && !c6.is_empty());
        for g in &c6 {
            assert_eq!(membership(g), Some(FamilyTag::C2k(3)));
        }
        assert!(matches!(
            generate(&FamilyTag::C2k(2)),
            Err(CatalogError::ParamOutOfBounds(_))
        ));
        let c8 = SignedGraph::build(
            8,
            &(0..8).map(|i| (i, (i + 1) % 8, if i % 3 == 0 { P } else { N })).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(membership(&c8), Some(FamilyTag::C2k(4)));
    }

    #[test]
    fn all_positive_c4_is_not_a_member() {
        let c4 = SignedGraph::build(4, &[(0, 1, P), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        assert_eq!(membership(&c4), None);
    }

    #[test]
    fn smallest_sum_has_seven_vertices_and_no_simplicial_edge() {
        let shape = TadpoleShape::new(TadpoleKind::Type1, 1);
        let members = generate(&FamilyTag::Sum(shape, shape)).unwrap();
        assert!(!members.is_empty());
        for m in &members {
            assert_eq!(m.n(), 7);
            assert!(recognize_chordal_signed_bigraph(m).unwrap().is_none());
            assert_eq!(membership(m), Some(FamilyTag::Sum(shape, shape)));
        }
    }

    #[test]
    fn sum_vertex_count_is_additive_minus_shared_end() {
        for (a, b) in [
            (TadpoleShape::new(TadpoleKind::Type1, 1), TadpoleShape::new(TadpoleKind::Type1, 2)),
            (TadpoleShape::new(TadpoleKind::Type1, 2), TadpoleShape::new(TadpoleKind::Type2, 3)),
            (TadpoleShape::new(TadpoleKind::Type2, 2), TadpoleShape::new(TadpoleKind::Type2, 2)),
        ] {
            let t1 = &tadpole_expansions(a).unwrap()[0];
            let t2 = &tadpole_expansions(b).unwrap()[0];
            let s = sum_of_tadpoles(t1, t2);
            assert_eq!(s.n(), a.vertex_count() + b.vertex_count() - 1);
        }
    }

    #[test]
    fn join_option_validation() {
        let w1 = &tadpole_expansions(TadpoleShape::new(TadpoleKind::Type1, 1)).unwrap()[0];
        let t2 = &tadpole_expansions(TadpoleShape::new(TadpoleKind::Type1, 2)).unwrap()[0];
        // A smallest-tadpole constituent cannot sit on the same side.
        let bad = JoinOptions { ends_adjacent: Some(false), ..Default::default() };
        assert!(matches!(
            join_of_tadpoles(w1, t2, &bad),
            Err(CatalogError::IncompatibleParities(_))
        ));
        // An exception sign for a non-smallest constituent is meaningless.
        let bad = JoinOptions { left_w_sign: Some(P), ..Default::default() };
        assert!(matches!(
            join_of_tadpoles(t2, w1, &bad),
            Err(CatalogError::IncompatibleParities(_))
        ));
        // Unpinned options enumerate: adjacency forced, two signs for the W1 side.
        let all = join_of_tadpoles(w1, t2, &JoinOptions::default()).unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn join_panel_two_w1_with_negative_exception() {
        // Two smallest tadpoles, ends adjacent, the exception edge from the
        // right end into the left head negative, the other positive.
        let left = Tadpole::new(
            SignedGraph::build(4, &[(1, 2, N), (1, 3, N), (0, 2, P), (0, 3, P)]).unwrap(),
            TadpoleDescriptor { kind: TadpoleKind::Type1, tail: vec![1], w: 0, y: 2, z: 3 },
        )
        .unwrap();
        let right = left.clone();
        let opts = JoinOptions {
            ends_adjacent: Some(true),
            left_w_sign: Some(N),
            right_w_sign: Some(P),
        };
        let joined = join_of_tadpoles(&left, &right, &opts).unwrap();
        assert_eq!(joined.len(), 1);
        // Hand-built from the drawing: T = {x=4,w=1,y=2,z=3} style layout.
        let expected = SignedGraph::build(
            8,
            &[
                // left tadpole: x=0, w=1, y=2, z=3
                (0, 2, N),
                (0, 3, N),
                (1, 2, P),
                (1, 3, P),
                // right tadpole: x'=4, w'=5, y'=6, z'=7
                (4, 6, N),
                (4, 7, N),
                (5, 6, P),
                (5, 7, P),
                // cross: ends adjacent, left exception negative, right positive
                (0, 4, P),
                (1, 4, N),
                (0, 5, P),
            ],
        )
        .unwrap();
        assert!(iso::sign_isomorphism(&joined[0], &expected).is_some());
        let tag = membership(&expected).unwrap();
        match tag {
            FamilyTag::Join { left, right, ends_adjacent, left_w_sign, right_w_sign } => {
                assert!(left.is_w1() && right.is_w1() && ends_adjacent);
                // One exception negative, one positive, in either slot.
                let signs = [left_w_sign.unwrap(), right_w_sign.unwrap()];
                assert!(signs.contains(&N) && signs.contains(&P));
            }
            other => panic!("expected a join tag, got {other}"),
        }
    }

    #[test]
    fn join_nonadjacent_panel_matches_hand_layout() {
        // Type-1 tails of length 3 and 2, ends on the same side.
        let t1 = Tadpole::new(
            SignedGraph::build(
                6,
                &[(0, 1, P), (1, 2, P), (2, 4, N), (2, 5, N), (3, 4, P), (3, 5, P)],
            )
            .unwrap(),
            TadpoleDescriptor { kind: TadpoleKind::Type1, tail: vec![0, 1, 2], w: 3, y: 4, z: 5 },
        )
        .unwrap();
        let t2 = Tadpole::new(
            SignedGraph::build(5, &[(0, 1, P), (1, 3, N), (1, 4, N), (2, 3, P), (2, 4, P)])
                .unwrap(),
            TadpoleDescriptor { kind: TadpoleKind::Type1, tail: vec![0, 1], w: 2, y: 3, z: 4 },
        )
        .unwrap();
        let opts = JoinOptions { ends_adjacent: Some(false), ..Default::default() };
        let joined = join_of_tadpoles(&t1, &t2, &opts).unwrap();
        assert_eq!(joined.len(), 1);
        let g = &joined[0];
        assert_eq!(g.n(), 11);
        // x = 0 gains positive edges to the odd-side of the second tadpole:
        // its second tail vertex (6+1) and its w (6+2).
        assert_eq!(g.sign(0, 7), Some(P));
        assert_eq!(g.sign(0, 8), Some(P));
        assert_eq!(g.sign(0, 6), None);
        // x' = 6 gains positive edges to x2, y, z of the first tadpole.
        assert_eq!(g.sign(6, 1), Some(P));
        assert_eq!(g.sign(6, 4), Some(P));
        assert_eq!(g.sign(6, 5), Some(P));
        assert_eq!(g.sign(6, 0), None);
        assert!(recognize_chordal_signed_bigraph(g).unwrap().is_none());
        assert!(matches!(membership(g), Some(FamilyTag::Join { .. })));
    }

    #[test]
    fn minimal_witness_descends_to_the_core() {
        // Negative four-cycle plus a pendant positive edge.
        let g = SignedGraph::build(
            5,
            &[(0, 1, N), (1, 2, N), (2, 3, N), (3, 0, N), (0, 4, P)],
        )
        .unwrap();
        let w = minimal_non_chordal_witness(&g).unwrap();
        assert_eq!(w.tag, FamilyTag::F1);
        assert_eq!(w.embedding, vec![0, 1, 2, 3]);
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn minimal_witness_on_long_cycles_is_the_whole_graph() {
        let c10 = SignedGraph::build(
            10,
            &(0..10).map(|i| (i, (i + 1) % 10, if i % 2 == 0 { P } else { N })).collect::<Vec<_>>(),
        )
        .unwrap();
        let w = minimal_non_chordal_witness(&c10).unwrap();
        assert_eq!(w.tag, FamilyTag::C2k(5));
        assert_eq!(w.member.n(), 10);
    }

    #[test]
    fn minimal_witness_rejects_chordal_input() {
        let tree = SignedGraph::build(3, &[(0, 1, N), (1, 2, N)]).unwrap();
        assert!(matches!(
            minimal_non_chordal_witness(&tree),
            Err(CatalogError::InputIsChordal)
        ));
    }

    #[test]
    fn find_induced_member_skips_isolated_padding() {
        let mut edges = vec![(0, 2, N), (0, 3, N), (1, 3, N), (1, 4, N), (1, 2, P), (0, 4, P)];
        edges.sort();
        let g = SignedGraph::build(7, &edges).unwrap();
        let w = find_induced_member(&g, 5).unwrap();
        assert_eq!(w.tag, FamilyTag::F2);
        assert_eq!(w.embedding, vec![0, 1, 2, 3, 4]);
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn find_induced_member_absent_on_chordal() {
        let tree =
            SignedGraph::build(5, &[(0, 1, N), (1, 2, P), (2, 3, N), (3, 4, N)]).unwrap();
        assert!(find_induced_member(&tree, 5).is_none());
    }

    #[test]
    fn w_and_z_templates_expand() {
        assert_eq!(generate(&FamilyTag::W(1)).unwrap().len(), 3);
        assert!(generate(&FamilyTag::Z(1)).unwrap().len() >= 4);
        assert!(matches!(
            generate(&FamilyTag::W(7)),
            Err(CatalogError::ParamOutOfBounds(_))
        ));
    }

    #[test]
    fn w_patterns_are_tadpoles_where_claimed() {
        // W1 is the smallest tadpole; W4 is a type-2 tadpole of tail three.
        let w1 = figure("W1");
        let x = w1.marks["x"];
        for g in w1.pattern.expand() {
            assert!(!covering_tadpoles(&g, x).is_empty());
        }
        let w4 = figure("W4");
        let x = w4.marks["x"];
        for g in w4.pattern.expand() {
            let descs = covering_tadpoles(&g, x);
            assert!(descs.iter().any(|d| d.kind == TadpoleKind::Type2 && d.k() == 3));
        }
    }
}
