//! Laplacians of directed multigraphs and exact determinants.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trees::RootedLabeledTree;

/// Directed graph on `1..=m` with positive integer edge weights. Parallel
/// edges add up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct DirectedMultigraph {
    m: usize,
    edges: Vec<(usize, usize, u64)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    m: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl TryFrom<GraphRepr> for DirectedMultigraph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        DirectedMultigraph::new(r.m, r.edges)
    }
}

impl From<DirectedMultigraph> for GraphRepr {
    fn from(g: DirectedMultigraph) -> Self {
        GraphRepr {
            m: g.m,
            edges: g.edges,
        }
    }
}

impl DirectedMultigraph {
    pub fn new(m: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self> {
        for &(a, b, w) in &edges {
            if a == 0 || b == 0 || a > m || b > m {
                return Err(Error::MalformedGraph(format!(
                    "edge {a}->{b} outside 1..={m}"
                )));
            }
            if w == 0 {
                return Err(Error::MalformedGraph(format!("edge {a}->{b} has weight 0")));
            }
        }
        Ok(DirectedMultigraph { m, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }
}

/// Square matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        Ok(IntegerMatrix { rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        IntegerMatrix {
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i - 1][j - 1]
    }

    /// Deletes row and column `i` (1-based).
    pub fn minor(&self, i: usize) -> Result<IntegerMatrix> {
        let n = self.size();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i - 1)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != i - 1)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix { rows })
    }

    /// Determinant by fraction-free Gaussian elimination. The empty matrix
    /// has determinant 1.
    pub fn det(&self) -> BigInt {
        let n = self.size();
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

impl std::fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Out-degree Laplacian: `L[i][i]` is the total weight leaving `i` (loops
/// ignored) and `L[i][j] = -w(i → j)`.
pub fn laplacian(g: &DirectedMultigraph) -> IntegerMatrix {
    let mut l = IntegerMatrix::zeros(g.m);
    for &(a, b, w) in &g.edges {
        if a == b {
            continue;
        }
        let w = BigInt::from(w);
        l.rows[a - 1][a - 1] += &w;
        l.rows[a - 1][b - 1] -= &w;
    }
    l
}

/// Determinant of `m` with row and column `i` deleted (1-based). For a
/// Laplacian this is the weighted number of spanning trees oriented toward
/// `i`.
pub fn minor_det(m: &IntegerMatrix, i: usize) -> Result<BigInt> {
    Ok(m.minor(i)?.det())
}

/// `v_i → v_j` for distinct `i, j ≤ n`, plus `v_i → v_{n+1}`.
pub fn build_g_an(n: usize) -> Result<DirectedMultigraph> {
    build(n, |_, _| 1)
}

/// As [`build_g_an`] with weight 2 on `i → j` for `i < j` (including
/// `j = n + 1`) and weight 1 for `i > j`.
pub fn build_g_an_weighted(n: usize) -> Result<DirectedMultigraph> {
    build(n, |i, j| if i < j { 2 } else { 1 })
}

fn build(n: usize, weight: impl Fn(usize, usize) -> u64) -> Result<DirectedMultigraph> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in 1..=n + 1 {
            if i != j {
                edges.push((i, j, weight(i, j)));
            }
        }
    }
    DirectedMultigraph::new(n + 1, edges)
}

/// For a tree on `1..=n+1` rooted at `n + 1`, flags vertex `i ≤ n` when it is
/// a child of the root or smaller than its parent.
pub fn descent_classify(t: &RootedLabeledTree) -> Result<Vec<bool>> {
    let size = t.size();
    if t.root() != size {
        return Err(Error::Precondition(format!(
            "tree must be rooted at {size}"
        )));
    }
    Ok((1..size)
        .map(|i| {
            let p = t.parent(i).expect("non-root vertex");
            p == size || i < p
        })
        .collect())
}

pub fn catalan(k: u64) -> BigUint {
    // C_k = binom(2k, k) / (k + 1), accumulated as a running binomial.
    let mut binom = BigUint::one();
    for i in 0..k {
        binom = binom * (2 * k - i) / (i + 1);
    }
    binom / (k + 1)
}

pub fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `|det|` as an unsigned integer, for counts.
pub fn count_of(det: &BigInt) -> BigUint {
    det.abs()
        .to_biguint()
        .expect("absolute value is nonnegative")
}
