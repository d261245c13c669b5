//! Slow, independent reference computations for cross-checking coxfactor.
//!
//! Nothing here depends on the main crate. Group elements are plain image
//! vectors `w[i - 1] = w(i)` with negative entries for sign changes, and
//! reflections are written down directly as signed transpositions rather
//! than derived from root vectors.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub type Perm = Vec<i32>;

pub fn identity(m: usize) -> Perm {
    (1..=m as i32).collect()
}

fn apply(w: &[i32], x: i32) -> i32 {
    if x > 0 {
        w[x as usize - 1]
    } else {
        -w[(-x) as usize - 1]
    }
}

/// `u ∘ v`, with `v` acting first.
pub fn compose(u: &[i32], v: &[i32]) -> Perm {
    v.iter().map(|&x| apply(u, x)).collect()
}

pub fn product(factors: &[&Perm], m: usize) -> Perm {
    factors.iter().fold(identity(m), |acc, f| compose(&acc, f))
}

/// Swaps `a ↔ b` and `-a ↔ -b` (signed points, `|a| != |b|`).
pub fn signed_swap(m: usize, a: i32, b: i32) -> Perm {
    (1..=m as i32)
        .map(|x| {
            if x == a.abs() {
                b * a.signum()
            } else if x == b.abs() {
                a * b.signum()
            } else {
                x
            }
        })
        .collect()
}

pub fn sign_flip(m: usize, a: i32) -> Perm {
    (1..=m as i32)
        .map(|x| if x == a { -x } else { x })
        .collect()
}

/// All reflections of `A_n` (`family = 'A'`), `B_n` or `D_n`.
pub fn reflections(family: char, n: usize) -> Vec<Perm> {
    let m = if family == 'A' { n + 1 } else { n };
    let mut out = Vec::new();
    for i in 1..=m as i32 {
        for j in i + 1..=m as i32 {
            out.push(signed_swap(m, i, j));
            if family != 'A' {
                out.push(signed_swap(m, i, -j));
            }
        }
        if family == 'B' {
            out.push(sign_flip(m, i));
        }
    }
    out
}

/// Coxeter generators: adjacent swaps, plus `s_{e_1}` for B or the swap
/// `1 ↔ -2` for D.
pub fn simple_reflections(family: char, n: usize) -> Vec<Perm> {
    let m = if family == 'A' { n + 1 } else { n };
    let mut out: Vec<Perm> = (1..m as i32).map(|i| signed_swap(m, i, i + 1)).collect();
    match family {
        'B' => out.push(sign_flip(m, 1)),
        'D' => out.push(signed_swap(m, 1, -2)),
        _ => {}
    }
    out
}

/// Word length of every element with respect to `generators`, by BFS in
/// the Cayley graph. The map's size is the order of the generated group.
pub fn word_lengths(generators: &[Perm]) -> HashMap<Perm, usize> {
    let m = generators.first().map_or(0, Vec::len);
    let mut dist = HashMap::from([(identity(m), 0usize)]);
    let mut queue = VecDeque::from([identity(m)]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for g in generators {
            let x = compose(g, &w);
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Every `k`-tuple of `reflections` whose product is `target`, as index
/// tuples in lexicographic order.
pub fn brute_force_factorizations(
    reflections: &[Perm],
    target: &[i32],
    k: usize,
) -> Vec<Vec<usize>> {
    let m = target.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    let total = reflections.len().pow(k as u32);
    for _ in 0..total {
        let factors: Vec<&Perm> = idx.iter().map(|&i| &reflections[i]).collect();
        if product(&factors, m) == target {
            out.push(idx.clone());
        }
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < reflections.len() {
                break;
            }
            *slot = 0;
        }
    }
    out
}

/// Weighted number of spanning trees of a directed multigraph on `1..=m`
/// in which every vertex other than `root` has one chosen outgoing edge and
/// following them always reaches `root`. Brute force over all choices.
pub fn arborescence_weight(m: usize, edges: &[(usize, usize, u64)], root: usize) -> BigUint {
    let others: Vec<usize> = (1..=m).filter(|&v| v != root).collect();
    let out_edges: Vec<Vec<(usize, u64)>> = others
        .iter()
        .map(|&v| {
            edges
                .iter()
                .filter(|&&(a, b, _)| a == v && b != v)
                .map(|&(_, b, w)| (b, w))
                .collect()
        })
        .collect();
    if out_edges.iter().any(Vec::is_empty) {
        return if others.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let mut total = BigUint::zero();
    let mut choice = vec![0usize; others.len()];
    loop {
        let mut next = vec![0usize; m + 1];
        let mut weight = BigUint::one();
        for (i, &v) in others.iter().enumerate() {
            let (to, w) = out_edges[i][choice[i]];
            next[v] = to;
            weight *= w;
        }
        let reaches_root = others.iter().all(|&v| {
            let mut x = v;
            for _ in 0..m {
                if x == root {
                    break;
                }
                x = next[x];
            }
            x == root
        });
        if reaches_root {
            total += weight;
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return total;
            }
            choice[i] += 1;
            if choice[i] < out_edges[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// All rooted trees on `1..=n` as parent vectors (`0` at the root), found by
/// filtering every function `[n] → [0, n]`.
pub fn rooted_trees(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    let total = (n + 1).pow(n as u32);
    for _ in 0..total {
        let roots = parent.iter().filter(|&&p| p == 0).count();
        if roots == 1 && parent.iter().enumerate().all(|(i, &p)| p != i + 1) {
            let acyclic = (1..=n).all(|v| {
                let mut x = v;
                for _ in 0..n {
                    if parent[x - 1] == 0 {
                        return true;
                    }
                    x = parent[x - 1];
                }
                false
            });
            if acyclic {
                out.push(parent.clone());
            }
        }
        for slot in parent.iter_mut() {
            *slot += 1;
            if *slot <= n {
                break;
            }
            *slot = 0;
        }
    }
    out.sort();
    out
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan_table(k: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for i in 1..=k {
        let next = (0..i).map(|j| &c[j] * &c[i - 1 - j]).sum();
        c.push(next);
    }
    c
}
