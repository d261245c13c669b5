//! Labeled trees and unicyclic graphs on `{1, …, n}`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rooted tree on the labels `1..=size`, stored as a parent array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct RootedLabeledTree {
    root: usize,
    // parent[v - 1], with 0 at the root
    parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    root: usize,
    /// `[child, parent]` pairs.
    edges: Vec<[usize; 2]>,
    #[serde(rename = "loop", skip_serializing_if = "Option::is_none", default)]
    loop_vertex: Option<usize>,
}

impl TryFrom<TreeRepr> for RootedLabeledTree {
    type Error = Error;

    fn try_from(r: TreeRepr) -> Result<Self> {
        if r.loop_vertex.is_some() {
            return Err(Error::MalformedGraph("plain tree with a loop".into()));
        }
        let size = r.edges.len() + 1;
        let edges: Vec<(usize, usize)> = r.edges.iter().map(|e| (e[0], e[1])).collect();
        RootedLabeledTree::from_edges(size, r.root, &edges)
    }
}

impl From<RootedLabeledTree> for TreeRepr {
    fn from(t: RootedLabeledTree) -> Self {
        TreeRepr {
            root: t.root,
            edges: t.edges().into_iter().map(|(c, p)| [c, p]).collect(),
            loop_vertex: None,
        }
    }
}

impl RootedLabeledTree {
    /// `parent[v - 1]` is the parent of `v`, and `0` marks the root.
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let size = parent.len();
        if size == 0 {
            return Err(Error::MalformedGraph("empty tree".into()));
        }
        let roots: Vec<usize> = (1..=size).filter(|&v| parent[v - 1] == 0).collect();
        let [root] = roots[..] else {
            return Err(Error::MalformedGraph(format!(
                "expected exactly one root, found {}",
                roots.len()
            )));
        };
        if let Some(&bad) = parent.iter().find(|&&p| p > size) {
            return Err(Error::MalformedGraph(format!("label {bad} out of range")));
        }
        let tree = RootedLabeledTree { root, parent };
        for v in 1..=size {
            let mut x = v;
            for _ in 0..=size {
                if x == root {
                    break;
                }
                x = tree.parent[x - 1];
            }
            if x != root {
                return Err(Error::MalformedGraph(format!("vertex {v} lies on a cycle")));
            }
        }
        Ok(tree)
    }

    /// Orients an undirected edge list away from `root`.
    pub fn from_edges(size: usize, root: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if size == 0 || root == 0 || root > size {
            return Err(Error::MalformedGraph(format!(
                "root {root} outside 1..={size}"
            )));
        }
        if edges.len() + 1 != size {
            return Err(Error::MalformedGraph(format!(
                "a tree on {size} vertices needs {} edges, got {}",
                size - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); size + 1];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > size || b > size || a == b {
                return Err(Error::MalformedGraph(format!("bad edge {{{a},{b}}}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![usize::MAX; size];
        parent[root - 1] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if parent[v - 1] == usize::MAX {
                    parent[v - 1] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent.contains(&usize::MAX) {
            return Err(Error::MalformedGraph("graph is disconnected".into()));
        }
        Ok(RootedLabeledTree { root, parent })
    }

    pub fn singleton() -> Self {
        RootedLabeledTree {
            root: 1,
            parent: vec![0],
        }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent.get(v.wrapping_sub(1)) {
            Some(0) | None => None,
            Some(&p) => Some(p),
        }
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Children of `v` in increasing order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.size())
            .filter(|&c| self.parent[c - 1] == v)
            .collect()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        !self.parent.contains(&v)
    }

    /// `(child, parent)` pairs sorted by child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .filter(|&v| v != self.root)
            .map(|v| (v, self.parent[v - 1]))
            .collect()
    }

    /// Sorted `(min, max)` pairs.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Path `v, parent(v), …, root`.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut x = v;
        while x != self.root {
            x = self.parent[x - 1];
            path.push(x);
        }
        path
    }

    pub fn rerooted(&self, new_root: usize) -> Self {
        let path = self.path_to_root(new_root);
        let mut parent = self.parent.clone();
        parent[new_root - 1] = 0;
        for w in path.windows(2) {
            parent[w[1] - 1] = w[0];
        }
        RootedLabeledTree {
            root: new_root,
            parent,
        }
    }

    /// Applies a relabeling `v ↦ map[v - 1]` (a permutation of `1..=size`).
    pub fn relabeled(&self, map: &[usize]) -> Result<Self> {
        let mut parent = vec![0; self.size()];
        for v in 1..=self.size() {
            if let Some(p) = self.parent(v) {
                parent[map[v - 1] - 1] = map[p - 1];
            }
        }
        Self::from_parents(parent)
    }
}

impl fmt::Display for RootedLabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root {}", self.root)?;
        for (c, p) in self.edges() {
            write!(f, " {c}->{p}")?;
        }
        Ok(())
    }
}

/// A rooted tree on `1..=n` with one loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct LoopedTree {
    tree: RootedLabeledTree,
    loop_vertex: usize,
}

impl TryFrom<TreeRepr> for LoopedTree {
    type Error = Error;

    fn try_from(r: TreeRepr) -> Result<Self> {
        let lv = r
            .loop_vertex
            .ok_or_else(|| Error::MalformedGraph("missing loop".into()))?;
        let tree = RootedLabeledTree::try_from(TreeRepr {
            loop_vertex: None,
            ..r
        })?;
        LoopedTree::new(tree, lv)
    }
}

impl From<LoopedTree> for TreeRepr {
    fn from(t: LoopedTree) -> Self {
        let mut r = TreeRepr::from(t.tree);
        r.loop_vertex = Some(t.loop_vertex);
        r
    }
}

impl LoopedTree {
    pub fn new(tree: RootedLabeledTree, loop_vertex: usize) -> Result<Self> {
        if loop_vertex == 0 || loop_vertex > tree.size() {
            return Err(Error::MalformedGraph(format!(
                "loop vertex {loop_vertex} outside 1..={}",
                tree.size()
            )));
        }
        Ok(LoopedTree { tree, loop_vertex })
    }

    pub fn tree(&self) -> &RootedLabeledTree {
        &self.tree
    }

    pub fn loop_vertex(&self) -> usize {
        self.loop_vertex
    }

    pub fn root(&self) -> usize {
        self.tree.root()
    }

    pub fn size(&self) -> usize {
        self.tree.size()
    }
}

impl fmt::Display for LoopedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} loop@{}", self.tree, self.loop_vertex)
    }
}

/// A connected graph on `1..=n` with `n` edges and no loops (so exactly one
/// cycle, possibly a double edge), with a root that is not the smallest
/// cycle vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct UnicyclicRootedGraph {
    root: usize,
    // sorted (min, max) pairs
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    root: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for UnicyclicRootedGraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let edges: Vec<_> = r.edges.iter().map(|e| (e[0], e[1])).collect();
        UnicyclicRootedGraph::new(r.root, edges)
    }
}

impl From<UnicyclicRootedGraph> for GraphRepr {
    fn from(g: UnicyclicRootedGraph) -> Self {
        GraphRepr {
            root: g.root,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Vertices on the cycle of a connected graph with as many edges as
/// vertices, found by stripping leaves. Vertices are `1..=n`.
pub(crate) fn cycle_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut degree = vec![0usize; n + 1];
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        degree[a] += 1;
        degree[b] += 1;
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut removed = vec![false; n + 1];
    let mut stack: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &u in &adj[v] {
            if !removed[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    (1..=n).filter(|&v| !removed[v]).collect()
}

impl UnicyclicRootedGraph {
    pub fn new(root: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = edges.len();
        if n < 2 {
            return Err(Error::MalformedGraph("need at least two edges".into()));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(n);
        for &(a, b) in &edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::MalformedGraph(format!(
                    "edge {{{a},{b}}} outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::MalformedGraph(format!("loop at {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        // Connectivity via union-find.
        let mut uf: Vec<usize> = (0..=n).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            let mut y = x;
            while uf[y] != r {
                let next = uf[y];
                uf[y] = r;
                y = next;
            }
            r
        }
        for &(a, b) in &norm {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            uf[ra] = rb;
        }
        let r1 = find(&mut uf, 1);
        if (2..=n).any(|v| find(&mut uf, v) != r1) {
            return Err(Error::MalformedGraph("graph is disconnected".into()));
        }
        if root == 0 || root > n {
            return Err(Error::MalformedGraph(format!(
                "root {root} outside 1..={n}"
            )));
        }
        let cycle = cycle_vertices(n, &norm);
        if cycle.first() == Some(&root) {
            return Err(Error::MalformedGraph(
                "root is the smallest cycle vertex".into(),
            ));
        }
        Ok(UnicyclicRootedGraph { root, edges: norm })
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Cycle vertices in increasing order.
    pub fn cycle_vertices(&self) -> Vec<usize> {
        cycle_vertices(self.size(), &self.edges)
    }

    /// Edges with both ends on the cycle. For a double edge both copies
    /// are returned.
    pub fn cycle_edges(&self) -> Vec<(usize, usize)> {
        let cyc = self.cycle_vertices();
        self.edges
            .iter()
            .copied()
            .filter(|(a, b)| cyc.contains(a) && cyc.contains(b))
            .collect()
    }
}

impl fmt::Display for UnicyclicRootedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root {}", self.root)?;
        for (a, b) in &self.edges {
            write!(f, " {a}-{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_construction() {
        let t = RootedLabeledTree::from_edges(4, 4, &[(4, 1), (4, 3), (3, 2)]).unwrap();
        assert_eq!(t.parents(), &[4, 3, 4, 0]);
        assert_eq!(t.children(4), vec![1, 3]);
        assert_eq!(t.path_to_root(2), vec![2, 3, 4]);
        let r = t.rerooted(2);
        assert_eq!(r.root(), 2);
        assert_eq!(r.undirected_edges(), t.undirected_edges());
        assert_eq!(r.parent(3), Some(2));
        assert!(RootedLabeledTree::from_edges(4, 4, &[(4, 1), (1, 4), (3, 2)]).is_err());
        assert!(RootedLabeledTree::from_parents(vec![2, 1, 0]).is_err());
        assert!(RootedLabeledTree::from_parents(vec![0, 0]).is_err());
    }

    #[test]
    fn tree_json() {
        let t = RootedLabeledTree::from_edges(3, 3, &[(1, 3), (2, 1)]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"root":3,"edges":[[1,3],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<RootedLabeledTree>(&s).unwrap(), t);
        let lt = LoopedTree::new(t, 2).unwrap();
        let s = serde_json::to_string(&lt).unwrap();
        assert_eq!(s, r#"{"root":3,"edges":[[1,3],[2,1]],"loop":2}"#);
        assert_eq!(serde_json::from_str::<LoopedTree>(&s).unwrap(), lt);
    }

    #[test]
    fn unicyclic_graphs() {
        let g = UnicyclicRootedGraph::new(3, vec![(3, 1), (1, 3), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.cycle_vertices(), vec![1, 3]);
        assert_eq!(g.cycle_edges(), vec![(1, 3), (1, 3)]);
        assert!(UnicyclicRootedGraph::new(1, vec![(3, 1), (1, 3), (1, 2), (3, 4)]).is_err());
        assert!(UnicyclicRootedGraph::new(2, vec![(1, 2), (1, 2), (3, 4), (3, 4)]).is_err());
        assert!(UnicyclicRootedGraph::new(2, vec![(1, 1), (1, 2), (2, 3)]).is_err());
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<UnicyclicRootedGraph>(&s).unwrap(), g);
    }
}
