//! Goulden-Yong duals: labeled trees (type A), looped rooted trees (type B)
//! and rooted unicyclic graphs (type D) from minimal factorizations of the
//! standard Coxeter element, with inverses.
//!
//! The forward maps relabel the vertices of the planar dual by edge labels.
//! The inverses slide vertex labels back onto edges, recover the region of
//! each abstract vertex from the cycle structure of the product of the
//! edge transpositions, then lift the folded edges to reflections and apply
//! `Δ'`.

use std::collections::{BTreeMap, VecDeque};

use crate::diagrams::{self, LabeledEdge, LabeledMultigraph};
use crate::error::{Error, Result};
use crate::factorization::{self, MinimalFactorization};
use crate::group::{Family, GroupElement, Reflection, Root, RootSystem};

pub use crate::trees::{LoopedTree, RootedLabeledTree, UnicyclicRootedGraph};

fn require(sys: &RootSystem, f: &MinimalFactorization, family: Family) -> Result<()> {
    if sys.family() != family {
        return Err(Error::WrongFamily {
            expected: match family {
                Family::A => "A",
                Family::B => "B",
                Family::D => "D",
            },
            found: sys.family(),
        });
    }
    sys.check_owns(f.coxeter())?;
    if *f.coxeter() != sys.standard_coxeter_element() {
        return Err(Error::NonStandardCoxeter);
    }
    Ok(())
}

fn require_family(sys: &RootSystem, family: Family, expected: &'static str) -> Result<()> {
    if sys.family() != family {
        return Err(Error::WrongFamily {
            expected,
            found: sys.family(),
        });
    }
    Ok(())
}

/// BFS from `sources` over `edges`; returns, for each reached vertex outside
/// `sources`, the edge used to reach it.
fn toward(
    vertex_count: usize,
    edges: &[LabeledEdge],
    sources: &[usize],
) -> Vec<Option<LabeledEdge>> {
    let mut adj = vec![Vec::new(); vertex_count + 1];
    for e in edges.iter().filter(|e| !e.is_loop()) {
        adj[e.a].push(*e);
        adj[e.b].push(*e);
    }
    let mut via = vec![None; vertex_count + 1];
    let mut seen = vec![false; vertex_count + 1];
    let mut queue = VecDeque::new();
    for &s in sources {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for e in &adj[u] {
            let v = e.other(u);
            if !seen[v] {
                seen[v] = true;
                via[v] = Some(*e);
                queue.push_back(v);
            }
        }
    }
    via
}

fn relabel_edges(graph: &LabeledMultigraph, label: &[usize]) -> Vec<(usize, usize)> {
    graph
        .edges()
        .iter()
        .map(|e| (label[e.a], label[e.b]))
        .collect()
}

/// Type A: root the dual tree at region 1, relabel it `n + 1`, and give
/// every other vertex the label of its edge toward the root.
pub fn gy_dual_a(sys: &RootSystem, f: &MinimalFactorization) -> Result<RootedLabeledTree> {
    require(sys, f, Family::A)?;
    let dual = diagrams::dual_graph(sys, f);
    let g = dual.graph();
    if !g.is_spanning_tree() {
        return Err(Error::Internal("type A dual is not a spanning tree".into()));
    }
    let size = g.vertex_count();
    let via = toward(size, g.edges(), &[1]);
    let mut label = vec![0; size + 1];
    label[1] = size;
    for v in 2..=size {
        label[v] = via[v].expect("tree is connected").label;
    }
    RootedLabeledTree::from_edges(size, size, &relabel_edges(g, &label))
}

/// Type B: the loop vertex `v*` of the folded dual takes the loop's label,
/// every other vertex the label of its edge toward `v*`; the root is the
/// vertex that was region 1.
pub fn gy_dual_b(sys: &RootSystem, f: &MinimalFactorization) -> Result<LoopedTree> {
    require(sys, f, Family::B)?;
    let dual = diagrams::dual_graph(sys, f);
    let g = dual.graph();
    if !g.is_tree_plus_loop() {
        return Err(Error::MalformedGraph(
            "type B folded dual is not a tree with one loop".into(),
        ));
    }
    let n = g.vertex_count();
    let lp = *g.loops()[0];
    let star = lp.a;
    let via = toward(n, g.edges(), &[star]);
    let mut label = vec![0; n + 1];
    label[star] = lp.label;
    for v in (1..=n).filter(|&v| v != star) {
        label[v] = via[v].expect("tree is connected").label;
    }
    let tree_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| (label[e.a], label[e.b]))
        .collect();
    let tree = RootedLabeledTree::from_edges(n, label[1], &tree_edges)?;
    LoopedTree::new(tree, label[star])
}

/// Type D: cycle vertices of the folded dual take the larger of their two
/// cycle-edge labels, except region 1 which takes the smaller; off-cycle
/// vertices take the label of their edge toward the cycle. The root is the
/// vertex that was region 2.
pub fn gy_dual_d(sys: &RootSystem, f: &MinimalFactorization) -> Result<UnicyclicRootedGraph> {
    require(sys, f, Family::D)?;
    let dual = diagrams::dual_graph(sys, f);
    let g = dual.graph();
    let cycle = g.unique_cycle().filter(|c| c.contains(&1)).ok_or_else(|| {
        Error::MalformedGraph("type D folded dual is not unicyclic through 1".into())
    })?;
    let n = g.vertex_count();
    let mut label = vec![0; n + 1];
    for &v in &cycle {
        let incident: Vec<usize> = g
            .edges()
            .iter()
            .filter(|e| (e.a == v || e.b == v) && cycle.contains(&e.a) && cycle.contains(&e.b))
            .map(|e| e.label)
            .collect();
        if incident.len() != 2 {
            return Err(Error::Internal(format!(
                "cycle vertex {v} has {} cycle edges",
                incident.len()
            )));
        }
        label[v] = if v == 1 {
            incident[0].min(incident[1])
        } else {
            incident[0].max(incident[1])
        };
    }
    let via = toward(n, g.edges(), &cycle);
    for v in (1..=n).filter(|v| !cycle.contains(v)) {
        label[v] = via[v].expect("graph is connected").label;
    }
    UnicyclicRootedGraph::new(label[2], relabel_edges(g, &label))
}

/// `t_1 t_2 ⋯ t_n` on `1..=size` with `t_k` the transposition of edge `k`
/// (identity for a loop). `edges[k - 1]` is edge `k`. Images are 1-based,
/// index 0 unused.
fn edge_product(size: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=size).collect();
    for &(a, b) in edges.iter().rev() {
        for x in p.iter_mut().skip(1) {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }
    p
}

/// Sends the orbit of `start` under `p` to the orbit of `base` under `q`,
/// matching `p^k(start) ↦ q^k(base)`.
fn match_orbits(
    p: &[usize],
    start: usize,
    q: impl Fn(usize) -> usize,
    base: usize,
    phi: &mut [usize],
) {
    let (mut x, mut y) = (start, base);
    loop {
        phi[x] = y;
        x = p[x];
        y = q(y);
        if x == start {
            break;
        }
    }
}

fn check_bijection(phi: &[usize]) -> Result<()> {
    let mut seen = vec![false; phi.len()];
    for &y in &phi[1..] {
        if y == 0 || y >= phi.len() || seen[y] {
            return Err(Error::Precondition(
                "edge product does not have the cycle type of the Coxeter element".into(),
            ));
        }
        seen[y] = true;
    }
    Ok(())
}

/// All ways to pick a reflection on each folded edge so that the sequence is
/// a factorization of `target`. `(a, a)` is the short root `e_a`.
fn lift(
    sys: &RootSystem,
    target: &GroupElement,
    edges: &[(usize, usize)],
) -> Result<Vec<Vec<Reflection>>> {
    let m = sys.ambient_dim();
    let mut options = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let (lo, hi) = (a.min(b), a.max(b));
        let roots = if lo == hi {
            vec![Root::unit(m, lo)]
        } else {
            vec![Root::difference(m, hi, lo), Root::sum(m, hi, lo)]
        };
        let refl: Vec<Reflection> = roots
            .iter()
            .filter_map(|r| sys.reflection_for_root(r).ok().cloned())
            .collect();
        if refl.is_empty() {
            return Err(Error::Precondition(format!(
                "edge {{{a},{b}}} has no reflection"
            )));
        }
        options.push(refl);
    }
    fn go(
        sys: &RootSystem,
        options: &[Vec<Reflection>],
        remaining: &GroupElement,
        chosen: &mut Vec<Reflection>,
        out: &mut Vec<Vec<Reflection>>,
    ) {
        let k = chosen.len();
        if k == options.len() {
            if remaining.is_identity() {
                out.push(chosen.clone());
            }
            return;
        }
        let len = sys.absolute_length(remaining);
        for r in &options[k] {
            let next = r.action() * remaining;
            if sys.absolute_length(&next) + 1 == len {
                chosen.push(r.clone());
                go(sys, options, &next, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(sys, &options, target, &mut Vec::new(), &mut out);
    Ok(out)
}

fn from_dual_factors(sys: &RootSystem, factors: Vec<Reflection>) -> Result<MinimalFactorization> {
    let c_inv = sys.standard_coxeter_element().inverse();
    let dual = MinimalFactorization::new(sys, c_inv, factors)?;
    Ok(dual.reverse_garside(sys))
}

/// Inverse of [`gy_dual_a`]. The tree's root is ignored: labeled trees on
/// `1..=n+1` are read as rooted at `n + 1`.
pub fn gy_inverse_a(sys: &RootSystem, t: &RootedLabeledTree) -> Result<MinimalFactorization> {
    require_family(sys, Family::A, "A")?;
    let size = sys.rank() + 1;
    if t.size() != size {
        return Err(Error::Precondition(format!(
            "A{} needs a tree on {size} vertices",
            sys.rank()
        )));
    }
    let t = t.rerooted(size);
    // Edge k joins vertex k to its parent.
    let edges: Vec<(usize, usize)> = (1..size).map(|k| (k, t.parent(k).unwrap())).collect();
    let p = edge_product(size, &edges);
    let mut phi = vec![0; size + 1];
    // Regions follow c⁻¹: j ↦ j - 1, 1 ↦ n + 1.
    let q = |j: usize| if j == 1 { size } else { j - 1 };
    match_orbits(&p, size, q, 1, &mut phi);
    check_bijection(&phi)?;
    let factors = edges
        .iter()
        .map(|&(a, b)| {
            let (lo, hi) = (phi[a].min(phi[b]), phi[a].max(phi[b]));
            sys.reflection_for_root(&Root::difference(size, hi, lo))
                .cloned()
        })
        .collect::<Result<Vec<_>>>()?;
    from_dual_factors(sys, factors)
}

/// Inverse of [`gy_dual_b`].
pub fn gy_inverse_b(sys: &RootSystem, t: &LoopedTree) -> Result<MinimalFactorization> {
    require_family(sys, Family::B, "B")?;
    let n = sys.rank();
    if t.size() != n {
        return Err(Error::Precondition(format!(
            "B{n} needs a looped tree on {n} vertices"
        )));
    }
    let star = t.loop_vertex();
    let toward_star = t.tree().rerooted(star);
    let edges: Vec<(usize, usize)> = (1..=n)
        .map(|k| match toward_star.parent(k) {
            Some(p) => (k, p),
            None => (k, k),
        })
        .collect();
    let p = edge_product(n, &edges);
    let mut phi = vec![0; n + 1];
    // |c⁻¹| on absolute values: j ↦ j - 1, 1 ↦ n.
    let q = |j: usize| if j == 1 { n } else { j - 1 };
    match_orbits(&p, t.root(), q, 1, &mut phi);
    check_bijection(&phi)?;
    let regions: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (phi[a], phi[b])).collect();
    let c_inv = sys.standard_coxeter_element().inverse();
    let mut lifts = lift(sys, &c_inv, &regions)?;
    match lifts.len() {
        1 => from_dual_factors(sys, lifts.pop().unwrap()),
        k => Err(Error::Internal(format!(
            "type B looped tree lifts to {k} factorizations"
        ))),
    }
}

/// The least element of `cycle` greater than `v`, wrapping to the minimum.
pub fn cyclic_successor(cycle: &[usize], v: usize) -> usize {
    cycle
        .iter()
        .copied()
        .filter(|&c| c > v)
        .min()
        .unwrap_or_else(|| *cycle.iter().min().expect("nonempty cycle"))
}

fn cycle_is_increasing(g: &UnicyclicRootedGraph) -> bool {
    let cyc = g.cycle_vertices();
    let k = cyc.len();
    let mut expected: Vec<(usize, usize)> = (0..k)
        .map(|i| {
            let (a, b) = (cyc[i], cyc[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    expected.sort_unstable();
    g.cycle_edges() == expected
}

/// Off-cycle neighbours of cycle vertices, as `(v, u)` with `u` on the cycle.
fn cycle_attachments(g: &UnicyclicRootedGraph) -> Vec<(usize, usize)> {
    let cyc = g.cycle_vertices();
    g.edges()
        .iter()
        .filter_map(|&(a, b)| match (cyc.contains(&a), cyc.contains(&b)) {
            (true, false) => Some((b, a)),
            (false, true) => Some((a, b)),
            _ => None,
        })
        .collect()
}

/// Whether `g` is a type D dual: its cycle runs through its vertices in
/// increasing cyclic order and no vertex hangs off its cyclic successor.
pub fn is_dt_member(g: &UnicyclicRootedGraph) -> bool {
    let cyc = g.cycle_vertices();
    cycle_is_increasing(g)
        && cycle_attachments(g)
            .iter()
            .all(|&(v, u)| cyclic_successor(&cyc, v) != u)
}

/// Inverse of [`gy_dual_d`]: both factorizations mapping to `g`.
pub fn gy_inverse_d(
    sys: &RootSystem,
    g: &UnicyclicRootedGraph,
) -> Result<Vec<MinimalFactorization>> {
    require_family(sys, Family::D, "D")?;
    let n = sys.rank();
    if g.size() != n {
        return Err(Error::Precondition(format!(
            "D{n} needs a graph on {n} vertices"
        )));
    }
    if !is_dt_member(g) {
        return Err(Error::Precondition(format!("{g} is not a type D dual")));
    }
    let cyc = g.cycle_vertices();
    let k = cyc.len();
    let mut edges = vec![(0, 0); n];
    for i in 0..k {
        edges[cyc[i] - 1] = (cyc[i], cyc[(i + 1) % k]);
    }
    let labeled: Vec<LabeledEdge> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| LabeledEdge::new(a, b, i + 1))
        .collect();
    let via = toward(n, &labeled, &cyc);
    for v in (1..=n).filter(|v| !cyc.contains(v)) {
        let e = via[v].ok_or_else(|| Error::MalformedGraph("disconnected".into()))?;
        edges[v - 1] = (v, e.other(v));
    }
    let p = edge_product(n, &edges);
    let mut phi = vec![0; n + 1];
    let m = cyc[0];
    if p[m] != m {
        return Err(Error::Internal("smallest cycle vertex is not fixed".into()));
    }
    phi[m] = 1;
    // |c⁻¹| on 2..=n: j ↦ j - 1, 2 ↦ n.
    let q = |j: usize| if j == 2 { n } else { j - 1 };
    match_orbits(&p, g.root(), q, 2, &mut phi);
    check_bijection(&phi)?;
    let regions: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (phi[a], phi[b])).collect();
    let c_inv = sys.standard_coxeter_element().inverse();
    let lifts = lift(sys, &c_inv, &regions)?;
    if lifts.len() != 2 {
        return Err(Error::Internal(format!(
            "type D graph lifts to {} factorizations",
            lifts.len()
        )));
    }
    let mut out = lifts
        .into_iter()
        .map(|fs| from_dual_factors(sys, fs))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Groups the factorizations of `c` by their labeled folded diagram.
pub fn fold_fibers(
    sys: &RootSystem,
    c: &GroupElement,
) -> Result<BTreeMap<Vec<LabeledEdge>, Vec<MinimalFactorization>>> {
    require_family(sys, Family::D, "D")?;
    let all = factorization::enumerate_par(sys, c)?;
    let keyed = all
        .into_iter()
        .map(|f| Ok((diagrams::folded_diagram(&f)?.key(), f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(diagrams::group_by_key(keyed))
}

/// Collapses the cycle of a type D dual into a star at its smallest vertex
/// `m`, giving a tree rooted at `m` that is smaller than all its children.
/// A vertex hanging off `m` is moved to its cyclic successor on the cycle so
/// that the map stays injective.
pub fn dt_to_s(g: &UnicyclicRootedGraph) -> Result<RootedLabeledTree> {
    if !is_dt_member(g) {
        return Err(Error::Precondition(format!("{g} is not a type D dual")));
    }
    Ok(star_cycle(g, true))
}

/// The plain cycle collapse: cycle vertices become children of `m`, all
/// other edges are kept. Not injective on type D duals.
pub fn collapse_cycle(g: &UnicyclicRootedGraph) -> RootedLabeledTree {
    star_cycle(g, false)
}

fn star_cycle(g: &UnicyclicRootedGraph, rehang: bool) -> RootedLabeledTree {
    let n = g.size();
    let cyc = g.cycle_vertices();
    let m = cyc[0];
    let mut parent = vec![0; n];
    for &c in &cyc[1..] {
        parent[c - 1] = m;
    }
    let labeled: Vec<LabeledEdge> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| LabeledEdge::new(a, b, i + 1))
        .collect();
    let via = toward(n, &labeled, &cyc);
    for v in (1..=n).filter(|v| !cyc.contains(v)) {
        let u = via[v].expect("graph is connected").other(v);
        parent[v - 1] = if rehang && u == m {
            cyclic_successor(&cyc, v)
        } else {
            u
        };
    }
    RootedLabeledTree::from_parents(parent).expect("collapsed cycle is a tree")
}

/// Inverse of [`dt_to_s`]: unrooted edges of the type D dual.
pub fn s_to_dt(s: &RootedLabeledTree) -> Result<Vec<(usize, usize)>> {
    let m = s.root();
    let children = s.children(m);
    if children.is_empty() || children.iter().any(|&c| c < m) {
        return Err(Error::Precondition(
            "root must be smaller than its children, and have one".into(),
        ));
    }
    let mut cyc = vec![m];
    cyc.extend(&children);
    let k = cyc.len();
    let mut edges = Vec::with_capacity(s.size());
    if k == 2 {
        edges.push((cyc[0], cyc[1]));
        edges.push((cyc[0], cyc[1]));
    } else {
        for i in 0..k {
            edges.push((cyc[i], cyc[(i + 1) % k]));
        }
    }
    for v in (1..=s.size()).filter(|v| !cyc.contains(v)) {
        let u = s.parent(v).expect("non-root vertex");
        let attach = if cyc.contains(&u) && cyclic_successor(&cyc, v) == u {
            m
        } else {
            u
        };
        edges.push((v, attach));
    }
    Ok(edges)
}
