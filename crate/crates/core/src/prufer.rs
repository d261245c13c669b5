//! Prüfer codes: classic, rooted, looped (type B) and unicyclic (type D),
//! plus Bernardi's bijection between trees whose root is smaller than its
//! children and trees in which the largest label is a leaf.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::goulden_yong::{dt_to_s, is_dt_member, s_to_dt};
use crate::trees::{LoopedTree, RootedLabeledTree, UnicyclicRootedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PruferVariant {
    Classic,
    Rooted,
    #[serde(rename = "b")]
    TypeB,
    #[serde(rename = "d")]
    TypeD,
}

/// How the root of a type D graph is recorded in the first entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootEncoding {
    /// The root label itself, in `1..=n`.
    Raw,
    /// The root label with the smallest cycle vertex skipped, in `1..=n-1`.
    #[default]
    Normalized,
}

/// A code together with the size of the object it encodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PruferCode {
    pub variant: PruferVariant,
    /// Tree size for classic and rooted codes (`n + 1` and `n`), rank `n`
    /// for the type B and D codes.
    pub n: usize,
    pub entries: Vec<usize>,
}

impl PruferCode {
    /// Checks length and entry range for the variant.
    pub fn new(variant: PruferVariant, n: usize, entries: Vec<usize>) -> Result<Self> {
        let (len, max) = match variant {
            PruferVariant::Classic => (n.checked_sub(2), n),
            PruferVariant::Rooted => (n.checked_sub(1), n),
            PruferVariant::TypeB => (Some(n), n),
            PruferVariant::TypeD => (Some(n), n.saturating_sub(1)),
        };
        if len != Some(entries.len()) {
            return Err(Error::InvalidCode(format!(
                "{variant:?} code for n = {n} must have length {}",
                len.map_or("-".into(), |l| l.to_string())
            )));
        }
        check_range(&entries, max)?;
        Ok(PruferCode {
            variant,
            n,
            entries,
        })
    }
}

fn check_range(code: &[usize], max: usize) -> Result<()> {
    if let Some(&bad) = code.iter().find(|&&x| x == 0 || x > max) {
        return Err(Error::InvalidCode(format!("entry {bad} outside 1..={max}")));
    }
    Ok(())
}

/// Repeatedly deletes the smallest leaf (never the root) and records its
/// parent, until one vertex is left. The last entry is the root.
pub fn rooted_encode(t: &RootedLabeledTree) -> Vec<usize> {
    let n = t.size();
    let mut children = vec![0usize; n + 1];
    for v in 1..=n {
        if let Some(p) = t.parent(v) {
            children[p] += 1;
        }
    }
    let mut alive = vec![true; n + 1];
    let mut code = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let leaf = (1..=n)
            .find(|&v| alive[v] && v != t.root() && children[v] == 0)
            .expect("a tree with two or more vertices has a leaf");
        let p = t.parent(leaf).unwrap();
        code.push(p);
        alive[leaf] = false;
        children[p] -= 1;
    }
    code
}

/// Inverse of [`rooted_encode`] for trees on `1..=n`.
pub fn rooted_decode(code: &[usize], n: usize) -> Result<RootedLabeledTree> {
    if n == 0 || code.len() + 1 != n {
        return Err(Error::InvalidCode(format!(
            "a rooted code for {n} vertices has length {}",
            n.saturating_sub(1)
        )));
    }
    check_range(code, n)?;
    let mut remaining = vec![0usize; n + 1];
    for &x in code {
        remaining[x] += 1;
    }
    let mut alive = vec![true; n + 1];
    let mut parent = vec![0; n];
    for &x in code {
        let leaf = (1..=n)
            .find(|&v| alive[v] && remaining[v] == 0)
            .ok_or_else(|| Error::InvalidCode("no leaf available".into()))?;
        parent[leaf - 1] = x;
        alive[leaf] = false;
        remaining[x] -= 1;
    }
    RootedLabeledTree::from_parents(parent)
}

/// Classic code of a tree on `1..=N`: rooted at `N`, delete leaves until two
/// vertices remain. The tree's own root is ignored.
pub fn prufer_encode(t: &RootedLabeledTree) -> Result<Vec<usize>> {
    let size = t.size();
    if size < 2 {
        return Err(Error::Precondition(
            "classic codes need two or more vertices".into(),
        ));
    }
    let mut code = rooted_encode(&t.rerooted(size));
    code.pop();
    Ok(code)
}

/// Inverse of [`prufer_encode`]; the result is rooted at `N = len + 2`.
pub fn prufer_decode(code: &[usize]) -> Result<RootedLabeledTree> {
    let size = code.len() + 2;
    check_range(code, size)?;
    let mut full = code.to_vec();
    full.push(size);
    rooted_decode(&full, size)
}

/// `b_1` is the root; `b_2 … b_n` is the rooted code of the tree re-rooted
/// at the loop vertex.
pub fn type_b_encode(t: &LoopedTree) -> Vec<usize> {
    let mut code = vec![t.root()];
    code.extend(rooted_encode(&t.tree().rerooted(t.loop_vertex())));
    code
}

pub fn type_b_decode(code: &[usize]) -> Result<LoopedTree> {
    let n = code.len();
    if n == 0 {
        return Err(Error::InvalidCode("empty type B code".into()));
    }
    check_range(code, n)?;
    let tree = rooted_decode(&code[1..], n)?;
    let loop_vertex = tree.root();
    LoopedTree::new(tree.rerooted(code[0]), loop_vertex)
}

fn check_root_below_children(s: &RootedLabeledTree) -> Result<()> {
    if s.children(s.root()).iter().any(|&c| c < s.root()) {
        return Err(Error::Precondition(
            "root must be smaller than all of its children".into(),
        ));
    }
    Ok(())
}

/// Bernardi's map from trees whose root is smaller than its children to
/// trees in which `n` is a leaf.
///
/// The children of `n` move under the old root `k`. The children of `k` off
/// the path to `n`, in decreasing order `c_1 > … > c_j`, form a chain
/// `c_1 → c_2 → … → c_j → k` and `c_1` becomes the root.
pub fn bernardi_g(s: &RootedLabeledTree) -> Result<RootedLabeledTree> {
    check_root_below_children(s)?;
    let n = s.size();
    if n == 1 {
        return Ok(s.clone());
    }
    let k = s.root();
    let mut path = s.path_to_root(n);
    path.reverse();
    let mut off: Vec<usize> = s
        .children(k)
        .into_iter()
        .filter(|&c| c != path[1])
        .collect();
    off.sort_unstable_by(|a, b| b.cmp(a));
    let mut parent = s.parents().to_vec();
    for c in s.children(n) {
        parent[c - 1] = k;
    }
    for w in off.windows(2) {
        parent[w[1] - 1] = w[0];
    }
    if let (Some(&first), Some(&last)) = (off.first(), off.last()) {
        parent[k - 1] = last;
        parent[first - 1] = 0;
    }
    RootedLabeledTree::from_parents(parent)
}

/// Inverse of [`bernardi_g`].
pub fn bernardi_g_inv(t: &RootedLabeledTree) -> Result<RootedLabeledTree> {
    let n = t.size();
    if n == 1 {
        return Ok(t.clone());
    }
    if !t.is_leaf(n) || t.root() == n {
        return Err(Error::Precondition(format!("{n} is not a leaf")));
    }
    let mut path = t.path_to_root(n);
    path.reverse();
    let mut l = 0;
    while l + 1 < path.len() && path[l] > path[l + 1] {
        l += 1;
    }
    let v = path[l];
    let mut parent = t.parents().to_vec();
    for c in t.children(v) {
        if c != path[l + 1] {
            parent[c - 1] = n;
        }
    }
    for &u in &path[..l] {
        parent[u - 1] = v;
    }
    parent[v - 1] = 0;
    RootedLabeledTree::from_parents(parent)
}

/// Type D code of a rooted unicyclic graph on `1..=n`: `d_1` records the
/// root, `d_2` is the parent of `n` after collapsing the cycle and applying
/// [`bernardi_g`], and `d_3 … d_n` is the rooted code of what is left once
/// `n` is deleted.
pub fn type_d_encode(g: &UnicyclicRootedGraph, enc: RootEncoding) -> Result<Vec<usize>> {
    if !is_dt_member(g) {
        return Err(Error::Precondition(format!("{g} is not a type D dual")));
    }
    let n = g.size();
    let s = dt_to_s(g)?;
    let m = s.root();
    let t = bernardi_g(&s)?;
    let d2 = t.parent(n).expect("n is not the root");
    let rest = RootedLabeledTree::from_parents(t.parents()[..n - 1].to_vec())?;
    let d1 = match enc {
        RootEncoding::Raw => g.root(),
        RootEncoding::Normalized if g.root() < m => g.root(),
        RootEncoding::Normalized => g.root() - 1,
    };
    let mut code = vec![d1, d2];
    code.extend(rooted_encode(&rest));
    Ok(code)
}

pub fn type_d_decode(code: &[usize], enc: RootEncoding) -> Result<UnicyclicRootedGraph> {
    let n = code.len();
    if n < 2 {
        return Err(Error::InvalidCode(
            "type D codes have length two or more".into(),
        ));
    }
    let d1_max = match enc {
        RootEncoding::Raw => n,
        RootEncoding::Normalized => n - 1,
    };
    check_range(&code[..1], d1_max)?;
    check_range(&code[1..], n - 1)?;
    let rest = rooted_decode(&code[2..], n - 1)?;
    let mut parent = rest.parents().to_vec();
    parent.push(code[1]);
    let t = RootedLabeledTree::from_parents(parent)?;
    let s = bernardi_g_inv(&t)?;
    let m = s.root();
    let root = match enc {
        RootEncoding::Raw if code[0] == m => {
            return Err(Error::InvalidCode(format!(
                "root {m} is the smallest cycle vertex"
            )))
        }
        RootEncoding::Raw => code[0],
        RootEncoding::Normalized if code[0] < m => code[0],
        RootEncoding::Normalized => code[0] + 1,
    };
    UnicyclicRootedGraph::new(root, s_to_dt(&s)?)
}
