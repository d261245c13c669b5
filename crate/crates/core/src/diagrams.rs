//! Chord diagrams, folded diagrams and planar duals of factorizations.
//!
//! Everything here is combinatorial. The planar dual of a factorization `f`
//! is read off from `Δ'(f)`: its `k`-th edge joins the points moved by `r_k'`.
//! Geometry only appears in the DOT and TikZ exporters.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::MinimalFactorization;
use crate::group::{Family, GroupElement, RootSystem};

/// Edge color for a position: `2` for one-way, `1` for two-way.
pub fn color_for(one_way: bool) -> u8 {
    if one_way {
        2
    } else {
        1
    }
}

fn colors_from(flags: &[bool], expected: usize) -> Result<Vec<u8>> {
    if flags.len() != expected {
        return Err(Error::Precondition(format!(
            "profile has {} flags, diagram has {expected} factors",
            flags.len()
        )));
    }
    Ok(flags.iter().map(|&b| color_for(b)).collect())
}

/// An edge `{a, b}` carrying a factor index (1-based). `a == b` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

impl LabeledEdge {
    pub fn new(a: usize, b: usize, label: usize) -> Self {
        LabeledEdge {
            a: a.min(b),
            b: a.max(b),
            label,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// Edge-labeled multigraph on `1..=vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LabeledMultigraph {
    vertex_count: usize,
    edges: Vec<LabeledEdge>,
}

impl LabeledMultigraph {
    pub fn new(vertex_count: usize, edges: Vec<LabeledEdge>) -> Result<Self> {
        for e in &edges {
            if e.a == 0 || e.b > vertex_count {
                return Err(Error::MalformedGraph(format!(
                    "edge {{{},{}}} outside 1..={vertex_count}",
                    e.a, e.b
                )));
            }
        }
        Ok(LabeledMultigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn edge(&self, label: usize) -> Option<&LabeledEdge> {
        self.edges.iter().find(|e| e.label == label)
    }

    pub fn loops(&self) -> Vec<&LabeledEdge> {
        self.edges.iter().filter(|e| e.is_loop()).collect()
    }

    /// Sorted `(a, b)` pairs, labels dropped.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        v.sort_unstable();
        v
    }

    /// Vertex sets of connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut adj = vec![Vec::new(); n + 1];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
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

    /// Loop-free, connected, `|E| = |V| - 1`.
    pub fn is_spanning_tree(&self) -> bool {
        self.loops().is_empty() && self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// Exactly one loop, and the remaining edges form a spanning tree.
    pub fn is_tree_plus_loop(&self) -> bool {
        self.loops().len() == 1 && self.without_loops().is_spanning_tree()
    }

    pub fn without_loops(&self) -> LabeledMultigraph {
        LabeledMultigraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.is_loop())
                .collect(),
        }
    }

    /// The cycle of a loop-free connected graph with `|E| = |V|`, or `None`
    /// when the graph is not of that shape. A double edge is a 2-cycle.
    pub fn unique_cycle(&self) -> Option<Vec<usize>> {
        if !self.loops().is_empty() || self.edges.len() != self.vertex_count || !self.is_connected()
        {
            return None;
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        Some(crate::trees::cycle_vertices(self.vertex_count, &pairs))
    }

    /// Unicyclic with a cycle of length at least 2 through `v`.
    pub fn is_unicyclic_through(&self, v: usize) -> bool {
        self.unique_cycle()
            .is_some_and(|c| c.len() >= 2 && c.contains(&v))
    }

    pub fn to_dot(&self, name: &str, colors: Option<&[u8]>) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        writeln!(s, "  edge [colorscheme=set13];").unwrap();
        for v in 1..=self.vertex_count {
            writeln!(s, "  {v};").unwrap();
        }
        for e in &self.edges {
            write!(s, "  {} -- {} [label=\"{}\"", e.a, e.b, e.label).unwrap();
            if let Some(c) = colors {
                write!(s, ", color=\"{}\"", c[e.label - 1]).unwrap();
            }
            writeln!(s, "];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Vertices equally spaced clockwise from the top of a circle.
    pub fn to_tikz(&self, colors: Option<&[u8]>) -> String {
        let n = self.vertex_count;
        let mut s = String::from("\\begin{tikzpicture}\n");
        for v in 1..=n {
            let angle = 90.0 - 360.0 * (v - 1) as f64 / n as f64;
            writeln!(
                s,
                "  \\node[circle,draw,inner sep=1pt] (v{v}) at ({angle:.2}:2cm) {{{v}}};"
            )
            .unwrap();
        }
        for e in &self.edges {
            let style = tikz_color(colors, e.label);
            if e.is_loop() {
                writeln!(
                    s,
                    "  \\draw[{style}] (v{}) to[out=60,in=120,loop] node[above] {{{}}} (v{});",
                    e.a, e.label, e.a
                )
                .unwrap();
            } else {
                writeln!(
                    s,
                    "  \\draw[{style}] (v{}) -- node[midway,fill=white,inner sep=1pt] {{{}}} (v{});",
                    e.a, e.label, e.b
                )
                .unwrap();
            }
        }
        s.push_str("\\end{tikzpicture}\n");
        s
    }
}

fn tikz_color(colors: Option<&[u8]>, label: usize) -> &'static str {
    match colors.map(|c| c[label - 1]) {
        Some(2) => "blue",
        Some(_) => "red",
        None => "black",
    }
}

/// A chord `{a, b}` between two circle points, drawn for factor `factor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chord {
    pub a: i32,
    pub b: i32,
    pub factor: usize,
}

/// Circles carrying the cycles of `c` and one chord per pair of points
/// swapped by a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChordDiagram {
    /// `circles[0]` is the outer circle; type D has the inner circle `(1, -1)`.
    circles: Vec<Vec<i32>>,
    chords: Vec<Chord>,
    factor_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<u8>>,
}

impl ChordDiagram {
    pub fn circles(&self) -> &[Vec<i32>] {
        &self.circles
    }

    pub fn outer(&self) -> &[i32] {
        &self.circles[0]
    }

    pub fn inner(&self) -> Option<&[i32]> {
        self.circles.get(1).map(Vec::as_slice)
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chords_of(&self, factor: usize) -> Vec<&Chord> {
        self.chords.iter().filter(|c| c.factor == factor).collect()
    }

    pub fn colors(&self) -> Option<&[u8]> {
        self.colors.as_deref()
    }

    pub fn color_of(&self, factor: usize) -> Option<u8> {
        self.colors.as_ref().map(|c| c[factor - 1])
    }

    /// Colors each chord by the flag of its factor.
    pub fn colored(mut self, flags: &[bool]) -> Result<Self> {
        self.colors = Some(colors_from(flags, self.factor_count)?);
        Ok(self)
    }

    fn position(&self, x: i32) -> Option<(usize, usize)> {
        self.circles
            .iter()
            .enumerate()
            .find_map(|(ci, c)| c.iter().position(|&p| p == x).map(|pos| (ci, pos)))
    }

    /// Whether two chords interleave on the outer circle. Chords touching the
    /// inner circle, or sharing an endpoint, never cross.
    pub fn chords_cross(&self, a: &Chord, b: &Chord) -> bool {
        let ends = [a.a, a.b, b.a, b.b];
        let mut pos = [0usize; 4];
        for (slot, &x) in pos.iter_mut().zip(&ends) {
            match self.position(x) {
                Some((0, p)) => *slot = p,
                _ => return false,
            }
        }
        let (lo, hi) = (pos[0].min(pos[1]), pos[0].max(pos[1]));
        if pos[2] == lo || pos[2] == hi || pos[3] == lo || pos[3] == hi {
            return false;
        }
        let inside = |p: usize| lo < p && p < hi;
        inside(pos[2]) != inside(pos[3])
    }

    pub fn has_crossing(&self) -> bool {
        self.chords
            .iter()
            .enumerate()
            .any(|(i, a)| self.chords[i + 1..].iter().any(|b| self.chords_cross(a, b)))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "graph {name} {{").unwrap();
        writeln!(s, "  edge [colorscheme=set13];").unwrap();
        for circle in &self.circles {
            for &p in circle {
                writeln!(s, "  \"{p}\";").unwrap();
            }
            for (i, &p) in circle.iter().enumerate() {
                let q = circle[(i + 1) % circle.len()];
                if circle.len() > 1 && (circle.len() > 2 || i == 0) {
                    writeln!(s, "  \"{p}\" -- \"{q}\" [style=dotted];").unwrap();
                }
            }
        }
        for c in &self.chords {
            write!(s, "  \"{}\" -- \"{}\" [label=\"{}\"", c.a, c.b, c.factor).unwrap();
            if let Some(col) = self.color_of(c.factor) {
                write!(s, ", color=\"{col}\"").unwrap();
            }
            writeln!(s, "];").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Points equally spaced clockwise, starting at the top.
    pub fn to_tikz(&self) -> String {
        let mut s = String::from("\\begin{tikzpicture}\n");
        for (ci, circle) in self.circles.iter().enumerate() {
            let radius = if ci == 0 { 2.0 } else { 0.8 };
            writeln!(s, "  \\draw ({radius:.1},0) arc (0:360:{radius:.1}cm);").unwrap();
            for (i, &p) in circle.iter().enumerate() {
                let angle = 90.0 - 360.0 * i as f64 / circle.len() as f64;
                let name = point_name(p);
                writeln!(
                    s,
                    "  \\coordinate ({name}) at ({angle:.2}:{radius:.1}cm); \\node at ({angle:.2}:{:.2}cm) {{${p}$}};",
                    radius + 0.35
                )
                .unwrap();
            }
        }
        for c in &self.chords {
            let style = tikz_color(self.colors.as_deref(), c.factor);
            writeln!(
                s,
                "  \\draw[{style}] ({}) -- node[midway,fill=white,inner sep=1pt] {{{}}} ({});",
                point_name(c.a),
                c.factor,
                point_name(c.b)
            )
            .unwrap();
        }
        s.push_str("\\end{tikzpicture}\n");
        s
    }
}

fn point_name(p: i32) -> String {
    if p < 0 {
        format!("m{}", -p)
    } else {
        format!("p{p}")
    }
}

/// Circles from the nontrivial cycles of `c`, longest first.
fn circles_of(c: &GroupElement) -> Vec<Vec<i32>> {
    let mut cycles: Vec<Vec<i32>> = c.cycles().into_iter().filter(|x| x.len() > 1).collect();
    cycles.sort_by_key(|x| std::cmp::Reverse(x.len()));
    cycles
}

pub fn chord_diagram(f: &MinimalFactorization) -> ChordDiagram {
    let circles = circles_of(f.coxeter());
    let points: Vec<i32> = circles.iter().flatten().copied().collect();
    let mut chords = Vec::new();
    for (k, r) in f.factors().iter().enumerate() {
        let mut seen = Vec::new();
        for &x in &points {
            let y = r.action().apply(x);
            if y != x && !seen.contains(&x) {
                seen.push(x);
                seen.push(y);
                chords.push(Chord {
                    a: x,
                    b: y,
                    factor: k + 1,
                });
            }
        }
    }
    ChordDiagram {
        circles,
        chords,
        factor_count: f.len(),
        colors: None,
    }
}

/// A factorization drawn on the absolute values `1..=n`: long reflections
/// become edges, short ones loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedDiagram {
    family: Family,
    graph: LabeledMultigraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<u8>>,
}

impl FoldedDiagram {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn graph(&self) -> &LabeledMultigraph {
        &self.graph
    }

    pub fn colors(&self) -> Option<&[u8]> {
        self.colors.as_deref()
    }

    pub fn colored(mut self, flags: &[bool]) -> Result<Self> {
        self.colors = Some(colors_from(flags, self.graph.edges.len())?);
        Ok(self)
    }

    /// Labeled edges sorted by label; the grouping key for fibers.
    pub fn key(&self) -> Vec<LabeledEdge> {
        let mut e = self.graph.edges.clone();
        e.sort_by_key(|e| e.label);
        e
    }
}

/// Edge `k` is the support of the root of `r_k`.
fn support_graph(f: &MinimalFactorization, vertex_count: usize) -> LabeledMultigraph {
    let edges = f
        .factors()
        .iter()
        .enumerate()
        .map(|(k, r)| match r.root().support()[..] {
            [a] => LabeledEdge::new(a, a, k + 1),
            [a, b] => LabeledEdge::new(a, b, k + 1),
            _ => unreachable!("roots of A, B, D have support of size 1 or 2"),
        })
        .collect();
    LabeledMultigraph {
        vertex_count,
        edges,
    }
}

pub fn folded_diagram(f: &MinimalFactorization) -> Result<FoldedDiagram> {
    let family = f.coxeter().family();
    if family == Family::A {
        return Err(Error::WrongFamily {
            expected: "B or D",
            found: family,
        });
    }
    Ok(FoldedDiagram {
        family,
        graph: support_graph(f, f.coxeter().ambient_dim()),
        colors: None,
    })
}

/// Planar dual of a chord diagram: edge `k` joins the (absolute values of
/// the) points moved by `r_k'` in `Δ'(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    family: Family,
    graph: LabeledMultigraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<u8>>,
}

impl DualGraph {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn graph(&self) -> &LabeledMultigraph {
        &self.graph
    }

    pub fn colors(&self) -> Option<&[u8]> {
        self.colors.as_deref()
    }

    pub fn colored(mut self, flags: &[bool]) -> Result<Self> {
        self.colors = Some(colors_from(flags, self.graph.edges.len())?);
        Ok(self)
    }
}

pub fn dual_graph(sys: &RootSystem, f: &MinimalFactorization) -> DualGraph {
    let dual = f.reverse_garside(sys);
    DualGraph {
        family: sys.family(),
        graph: support_graph(&dual, sys.ambient_dim()),
        colors: None,
    }
}

/// The dual graph colored by the one-way flags of `Δ'(f)`.
pub fn colored_dual_graph(sys: &RootSystem, f: &MinimalFactorization) -> DualGraph {
    let flags = f.reverse_garside(sys).one_way_flags(sys);
    dual_graph(sys, f)
        .colored(&flags)
        .expect("one flag per factor")
}

/// Groups labeled edge lists by multiplicity, for fiber counting.
pub fn group_by_key<K: Ord, T>(items: impl IntoIterator<Item = (K, T)>) -> BTreeMap<K, Vec<T>> {
    let mut map: BTreeMap<K, Vec<T>> = BTreeMap::new();
    for (k, v) in items {
        map.entry(k).or_default().push(v);
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Root;

    fn fact(sys: &RootSystem, roots: &[Vec<i32>]) -> MinimalFactorization {
        let roots: Vec<Root> = roots.iter().cloned().map(Root::new).collect();
        MinimalFactorization::from_roots(sys, sys.standard_coxeter_element(), &roots).unwrap()
    }

    fn chord_pairs(d: &ChordDiagram) -> Vec<(i32, i32, usize)> {
        d.chords().iter().map(|c| (c.a, c.b, c.factor)).collect()
    }

    fn unordered(d: &ChordDiagram) -> Vec<(i32, i32, usize)> {
        let mut v: Vec<_> = d
            .chords()
            .iter()
            .map(|c| (c.a.min(c.b), c.a.max(c.b), c.factor))
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn chord_diagram_type_a() {
        let sys = RootSystem::new(Family::A, 3).unwrap();
        let f = fact(
            &sys,
            &[vec![-1, 1, 0, 0], vec![0, -1, 0, 1], vec![0, -1, 1, 0]],
        );
        let d = chord_diagram(&f);
        assert_eq!(d.outer(), &[1, 2, 3, 4]);
        assert!(d.inner().is_none());
        assert_eq!(chord_pairs(&d), vec![(1, 2, 1), (2, 4, 2), (2, 3, 3)]);
        assert!(!d.has_crossing());
        let colored = d.colored(&f.one_way_flags(&sys)).unwrap();
        assert_eq!(colored.colors(), Some(&[2u8, 2, 1][..]));
    }

    #[test]
    fn chord_diagram_type_b() {
        // With right-to-left products the chords e2, e2-e1 come in the order
        // (e2-e1, e2) for c = (1,2,-1,-2).
        let sys = RootSystem::new(Family::B, 2).unwrap();
        let f = fact(&sys, &[vec![-1, 1], vec![0, 1]]);
        let d = chord_diagram(&f);
        assert_eq!(d.outer(), &[1, 2, -1, -2]);
        assert_eq!(unordered(&d), vec![(-2, -1, 1), (-2, 2, 2), (1, 2, 1)]);
        assert!(!d.has_crossing());
    }

    #[test]
    fn chord_diagram_type_d() {
        let sys = RootSystem::new(Family::D, 4).unwrap();
        let f = fact(
            &sys,
            &[
                vec![1, 1, 0, 0],
                vec![-1, 1, 0, 0],
                vec![0, -1, 1, 0],
                vec![0, 0, -1, 1],
            ],
        );
        let d = chord_diagram(&f);
        assert_eq!(d.outer(), &[2, 3, 4, -2, -3, -4]);
        assert_eq!(d.inner(), Some(&[1, -1][..]));
        assert_eq!(d.chords().len(), 8);
        let pairs = unordered(&d);
        assert!(pairs.contains(&(-2, 1, 1)));
        assert!(pairs.contains(&(-1, 2, 1)));
        assert_eq!(d.chords_of(1).len(), 2);
    }

    #[test]
    fn crossing_predicate() {
        let d = ChordDiagram {
            circles: vec![vec![1, 2, 3, 4], vec![5, 6]],
            chords: vec![],
            factor_count: 0,
            colors: None,
        };
        let ch = |a, b| Chord { a, b, factor: 1 };
        assert!(!d.chords_cross(&ch(1, 2), &ch(2, 4)));
        assert!(d.chords_cross(&ch(1, 3), &ch(2, 4)));
        assert!(!d.chords_cross(&ch(1, 3), &ch(5, 6)));
        assert!(!d.chords_cross(&ch(1, 2), &ch(3, 4)));
    }

    #[test]
    fn folded_diagrams() {
        let b3 = RootSystem::new(Family::B, 3).unwrap();
        let f = fact(&b3, &[vec![1, 0, 0], vec![1, 0, -1], vec![1, -1, 0]]);
        let g = folded_diagram(&f).unwrap();
        assert_eq!(
            g.graph().edges(),
            &[
                LabeledEdge::new(1, 1, 1),
                LabeledEdge::new(1, 3, 2),
                LabeledEdge::new(1, 2, 3)
            ]
        );
        assert!(g.graph().is_tree_plus_loop());

        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let f = fact(
            &d4,
            &[
                vec![1, 1, 0, 0],
                vec![0, 1, -1, 0],
                vec![1, 0, -1, 0],
                vec![0, 0, 1, -1],
            ],
        );
        let g = folded_diagram(&f).unwrap();
        assert_eq!(g.graph().unique_cycle(), Some(vec![1, 2, 3]));
        assert!(g.graph().is_unicyclic_through(1));

        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let f = fact(&a2, &[vec![-1, 1, 0], vec![0, -1, 1]]);
        assert!(matches!(folded_diagram(&f), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn dual_graph_examples() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        let f = fact(
            &a3,
            &[vec![-1, 1, 0, 0], vec![0, -1, 0, 1], vec![0, -1, 1, 0]],
        );
        let d = dual_graph(&a3, &f);
        assert_eq!(
            d.graph().edges(),
            &[
                LabeledEdge::new(1, 2, 1),
                LabeledEdge::new(1, 4, 2),
                LabeledEdge::new(3, 4, 3)
            ]
        );
        assert!(d.graph().is_spanning_tree());

        let b3 = RootSystem::new(Family::B, 3).unwrap();
        let f = fact(&b3, &[vec![1, 0, 1], vec![1, 0, 0], vec![1, -1, 0]]);
        let d = dual_graph(&b3, &f);
        assert_eq!(
            d.graph().edges(),
            &[
                LabeledEdge::new(1, 3, 1),
                LabeledEdge::new(3, 3, 2),
                LabeledEdge::new(2, 3, 3)
            ]
        );

        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let f = fact(
            &d4,
            &[
                vec![1, 1, 0, 0],
                vec![0, 1, -1, 0],
                vec![1, 0, -1, 0],
                vec![0, 0, 1, -1],
            ],
        );
        let d = dual_graph(&d4, &f);
        assert_eq!(
            d.graph().edges(),
            &[
                LabeledEdge::new(1, 2, 1),
                LabeledEdge::new(1, 3, 2),
                LabeledEdge::new(1, 2, 3),
                LabeledEdge::new(2, 4, 4)
            ]
        );
        assert_eq!(d.graph().unique_cycle(), Some(vec![1, 2]));
    }

    #[test]
    fn dot_and_tikz() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        let f = fact(&a2, &[vec![-1, 1, 0], vec![0, -1, 1]]);
        let d = colored_dual_graph(&a2, &f);
        let dot = d.graph().to_dot("dual", d.colors());
        assert!(dot.starts_with("graph dual {"));
        assert!(dot.contains("1 -- 2 [label=\"1\", color=\"2\"];"));
        let tikz = chord_diagram(&f).to_tikz();
        assert!(tikz.contains("\\draw[black] (p1) --"));
        assert!(d.graph().to_tikz(d.colors()).contains("blue"));
    }
}
