//! Exact arithmetic in the finite reflection groups of types A, B and D.
//!
//! Elements are signed permutations of `{±1, …, ±m}` where `m` is the ambient
//! dimension: `n + 1` for `A_n` (which never uses signs) and `n` for `B_n` and
//! `D_n`. Products compose as functions, so in `r_1 r_2 ⋯ r_k` the rightmost
//! factor acts first.
//!
//! Positive roots are the roots whose highest-index nonzero coordinate is
//! positive. With that convention the simple roots are
//!
//! * `A_n`: `e_{i+1} - e_i`
//! * `B_n`: `e_1`, `e_{i+1} - e_i`
//! * `D_n`: `e_2 + e_1`, `e_{i+1} - e_i`
//!
//! and the standard Coxeter elements below are products of the simple
//! reflections taken in that order.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl Family {
    /// Dimension of the space the group acts on.
    pub fn ambient_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B | Family::D => rank,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            Family::D => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(format!("unknown family {other:?}, expected A, B or D")),
        }
    }
}

/// A signed permutation, stored by the images of `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GroupElementRepr", into = "GroupElementRepr")]
pub struct GroupElement {
    family: Family,
    rank: usize,
    images: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct GroupElementRepr {
    family: Family,
    rank: usize,
    images: Vec<i32>,
}

impl TryFrom<GroupElementRepr> for GroupElement {
    type Error = Error;

    fn try_from(r: GroupElementRepr) -> Result<Self> {
        GroupElement::from_images(r.family, r.rank, r.images)
    }
}

impl From<GroupElement> for GroupElementRepr {
    fn from(w: GroupElement) -> Self {
        GroupElementRepr {
            family: w.family,
            rank: w.rank,
            images: w.images,
        }
    }
}

impl GroupElement {
    pub fn identity(family: Family, rank: usize) -> Self {
        let m = family.ambient_dim(rank) as i32;
        GroupElement {
            family,
            rank,
            images: (1..=m).collect(),
        }
    }

    /// Builds an element from `images[i - 1] = w(i)`.
    pub fn from_images(family: Family, rank: usize, images: Vec<i32>) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::UnsupportedRank { family, rank });
        }
        let m = family.ambient_dim(rank);
        if images.len() != m {
            return Err(Error::InvalidElement(format!(
                "expected {m} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > m || seen[a - 1] {
                return Err(Error::InvalidElement(format!(
                    "{images:?} is not a signed permutation of 1..={m}"
                )));
            }
            seen[a - 1] = true;
        }
        let negatives = images.iter().filter(|&&x| x < 0).count();
        match family {
            Family::A if negatives > 0 => {
                return Err(Error::InvalidElement(
                    "type A elements carry no signs".into(),
                ))
            }
            Family::D if negatives % 2 == 1 => {
                return Err(Error::InvalidElement(
                    "type D elements need an even number of sign changes".into(),
                ))
            }
            _ => {}
        }
        Ok(GroupElement {
            family,
            rank,
            images,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn ambient_dim(&self) -> usize {
        self.images.len()
    }

    /// `w(x)` for `x ∈ {±1, …, ±m}`.
    #[inline]
    pub fn apply(&self, x: i32) -> i32 {
        if x > 0 {
            self.images[x as usize - 1]
        } else {
            -self.images[(-x) as usize - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    fn check_same_group(&self, other: &GroupElement) -> Result<()> {
        if self.family != other.family || self.rank != other.rank {
            return Err(Error::GroupMismatch {
                left_family: self.family,
                left_rank: self.rank,
                right_family: other.family,
                right_rank: other.rank,
            });
        }
        Ok(())
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check_same_group(other)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            family: self.family,
            rank: self.rank,
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = i as i32 + 1;
            if x > 0 {
                images[x as usize - 1] = v;
            } else {
                images[(-x) as usize - 1] = -v;
            }
        }
        GroupElement {
            family: self.family,
            rank: self.rank,
            images,
        }
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check_same_group(x)?;
        Ok(self.compose_unchecked(x).compose_unchecked(&self.inverse()))
    }

    /// Matrix of the element acting on the ambient space (columns are images
    /// of the basis vectors).
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let m = self.images.len();
        let mut mat = vec![vec![0i64; m]; m];
        for (i, &x) in self.images.iter().enumerate() {
            mat[x.unsigned_abs() as usize - 1][i] = x.signum() as i64;
        }
        mat
    }

    /// Acts on a coordinate vector: `e_i ↦ sign(w(i)) e_{|w(i)|}`.
    pub fn act(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            let x = self.images[i];
            out[x.unsigned_abs() as usize - 1] += x.signum() * c;
        }
        out
    }

    /// Points of `{±1, …, ±m}` (only positive ones in type A) moved by the element.
    pub fn moved_points(&self) -> Vec<i32> {
        let m = self.images.len() as i32;
        let points: Box<dyn Iterator<Item = i32>> = match self.family {
            Family::A => Box::new(1..=m),
            _ => Box::new((1..=m).chain((1..=m).map(|x| -x))),
        };
        points.filter(|&x| self.apply(x) != x).collect()
    }

    /// Cycles of the element on its point set, each starting at its
    /// smallest-magnitude positive point when it has one.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let m = self.images.len() as i32;
        let points: Vec<i32> = match self.family {
            Family::A => (1..=m).collect(),
            _ => (1..=m).chain((1..=m).map(|x| -x)).collect(),
        };
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for &start in &points {
            if seen.contains_key(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start, ());
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x, ());
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    /// Panics if the operands live in different groups; use
    /// [`GroupElement::compose`] for a fallible product.
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.compose(rhs)
            .expect("product of elements from different groups")
    }
}

impl fmt::Display for GroupElement {
    /// Cycle notation, omitting fixed points; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// A root vector with integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    /// `e_j - e_i` in dimension `m` (1-based indices).
    pub fn difference(m: usize, j: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[j - 1] += 1;
        v[i - 1] -= 1;
        Root(v)
    }

    /// `e_j + e_i` in dimension `m`.
    pub fn sum(m: usize, j: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[j - 1] += 1;
        v[i - 1] += 1;
        Root(v)
    }

    /// `e_i` in dimension `m`.
    pub fn unit(m: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn dot(&self, other: &Root) -> i32 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> i32 {
        self.dot(self)
    }

    pub fn is_positive(&self) -> bool {
        self.0
            .iter()
            .rev()
            .find(|&&x| x != 0)
            .is_some_and(|&x| x > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    /// 1-based indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    /// Written highest index first, e.g. `e3-e1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let coeff = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{coeff}e{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A reflection `s_α` together with its positive root and its position in
/// the root system's canonical ordering of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    index: usize,
    root: Root,
    action: GroupElement,
}

impl Reflection {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn root(&self) -> &Root {
        &self.root
    }

    pub fn action(&self) -> &GroupElement {
        &self.action
    }

    pub fn is_short(&self) -> bool {
        self.root.norm_sq() == 1
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{}]", self.root)
    }
}

/// The action of `s_α(v) = v - 2 (v·α)/(α·α) α` as a signed permutation.
fn reflection_images(root: &Root) -> Result<Vec<i32>> {
    let a = root.coords();
    let m = a.len();
    let norm = root.norm_sq();
    if norm == 0 {
        return Err(Error::UnknownRoot(a.to_vec()));
    }
    let mut images = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = vec![0i32; m];
        v[i] = 1;
        // v·α = a[i]
        for (k, vk) in v.iter_mut().enumerate() {
            let num = 2 * a[i] * a[k];
            if num % norm != 0 {
                return Err(Error::UnknownRoot(a.to_vec()));
            }
            *vk -= num / norm;
        }
        let nonzero: Vec<(usize, i32)> = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, &x)| (k, x))
            .collect();
        match nonzero.as_slice() {
            [(k, x)] if x.abs() == 1 => images.push(x * (*k as i32 + 1)),
            _ => return Err(Error::UnknownRoot(a.to_vec())),
        }
    }
    Ok(images)
}

/// Root data and reflections for `A_n`, `B_n` or `D_n`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    positive_roots: Vec<Root>,
    simple_roots: Vec<usize>,
    reflections: Vec<Reflection>,
    exponents: Vec<usize>,
    coxeter_number: usize,
    group_order: BigUint,
    by_action: HashMap<Vec<i32>, usize>,
    by_root: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::UnsupportedRank { family, rank });
        }
        let m = family.ambient_dim(rank);

        // Canonical order of T: by highest index j, then short root e_j,
        // then e_j - e_i and e_j + e_i for increasing i.
        let mut positive_roots = Vec::new();
        for j in 1..=m {
            if family == Family::B {
                positive_roots.push(Root::unit(m, j));
            }
            for i in 1..j {
                positive_roots.push(Root::difference(m, j, i));
                if family != Family::A {
                    positive_roots.push(Root::sum(m, j, i));
                }
            }
        }

        let mut simple = Vec::new();
        match family {
            Family::A => {}
            Family::B => simple.push(Root::unit(m, 1)),
            Family::D => simple.push(Root::sum(m, 2, 1)),
        }
        for i in 1..m {
            simple.push(Root::difference(m, i + 1, i));
        }

        let by_root: HashMap<Root, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let simple_roots = simple.iter().map(|r| by_root[r]).collect();

        let mut reflections = Vec::with_capacity(positive_roots.len());
        let mut by_action = HashMap::new();
        for (index, root) in positive_roots.iter().enumerate() {
            let images = reflection_images(root)?;
            by_action.insert(images.clone(), index);
            let action = GroupElement::from_images(family, rank, images)?;
            reflections.push(Reflection {
                index,
                root: root.clone(),
                action,
            });
        }

        let n = rank;
        let (exponents, coxeter_number): (Vec<usize>, usize) = match family {
            Family::A => ((1..=n).collect(), n + 1),
            Family::B => ((1..=n).map(|i| 2 * i - 1).collect(), 2 * n),
            Family::D => {
                let mut e: Vec<usize> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                (e, 2 * n - 2)
            }
        };

        let factorial = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
        let group_order = match family {
            Family::A => factorial(n + 1),
            Family::B => factorial(n) << n,
            Family::D => factorial(n) << (n - 1),
        };

        Ok(RootSystem {
            family,
            rank,
            positive_roots,
            simple_roots,
            reflections,
            exponents,
            coxeter_number,
            group_order,
            by_action,
            by_root,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.family.ambient_dim(self.rank)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        self.simple_roots.iter().map(|&i| &self.positive_roots[i])
    }

    /// Reflections in simple-root order.
    pub fn simple_reflections(&self) -> impl Iterator<Item = &Reflection> + '_ {
        self.simple_roots.iter().map(|&i| &self.reflections[i])
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    pub fn reflection(&self, index: usize) -> Option<&Reflection> {
        self.reflections.get(index)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> usize {
        self.coxeter_number
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.family, self.rank)
    }

    /// The reflection whose action is `w`, if `w` is a reflection.
    pub fn reflection_of(&self, w: &GroupElement) -> Option<&Reflection> {
        if !self.owns(w) {
            return None;
        }
        self.by_action
            .get(w.images())
            .map(|&i| &self.reflections[i])
    }

    /// The reflection `s_α` for `α` or `-α` a root.
    pub fn reflection_for_root(&self, root: &Root) -> Result<&Reflection> {
        let positive = if root.is_positive() {
            root.clone()
        } else {
            root.negated()
        };
        self.by_root
            .get(&positive)
            .map(|&i| &self.reflections[i])
            .ok_or_else(|| Error::UnknownRoot(root.coords().to_vec()))
    }

    pub fn owns(&self, w: &GroupElement) -> bool {
        w.family() == self.family && w.rank() == self.rank
    }

    pub(crate) fn check_owns(&self, w: &GroupElement) -> Result<()> {
        if self.owns(w) {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left_family: self.family,
                left_rank: self.rank,
                right_family: w.family(),
                right_rank: w.rank(),
            })
        }
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn coxeter_length(&self, w: &GroupElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| !Root::new(w.act(r.coords())).is_positive())
            .count()
    }

    /// Absolute length: `rank(I - M_w)` over the rationals.
    pub fn absolute_length(&self, w: &GroupElement) -> usize {
        linalg::rank(&moved_space_rows(w))
    }

    /// Whether `α` lies in the image of `I - M_w`.
    pub fn in_moved_space(&self, w: &GroupElement, root: &Root) -> bool {
        let rows = moved_space_rows(w);
        let base = linalg::rank(&rows);
        let augmented: Vec<Vec<i64>> = rows
            .into_iter()
            .zip(root.coords())
            .map(|(mut row, &a)| {
                row.push(a as i64);
                row
            })
            .collect();
        linalg::rank(&augmented) == base
    }

    /// Simple roots of the parabolic subgroup `W_w`: positive roots in the
    /// moved space of `w` that are not a sum of two such roots.
    pub fn parabolic_simple_roots(&self, w: &GroupElement) -> Vec<Root> {
        let moved: Vec<&Root> = self
            .positive_roots
            .iter()
            .filter(|r| self.in_moved_space(w, r))
            .collect();
        let decomposable: std::collections::HashSet<Root> = moved
            .iter()
            .enumerate()
            .flat_map(|(i, a)| moved[i + 1..].iter().map(move |b| a.add(b)))
            .collect();
        moved
            .into_iter()
            .filter(|r| !decomposable.contains(*r))
            .cloned()
            .collect()
    }

    /// Reflection indices whose product (left to right) is the standard
    /// Coxeter element.
    pub fn standard_coxeter_word(&self) -> Vec<usize> {
        self.simple_roots.clone()
    }

    /// Type A: `1→2→…→n+1→1`; type B: `i→i+1`, `n→-1`; type D: `1→-1` and
    /// `2→3→…→n→-2`.
    pub fn standard_coxeter_element(&self) -> GroupElement {
        let n = self.rank as i32;
        let images: Vec<i32> = match self.family {
            Family::A => (2..=n + 1).chain(std::iter::once(1)).collect(),
            Family::B => (2..=n).chain(std::iter::once(-1)).collect(),
            Family::D => std::iter::once(-1)
                .chain(3..=n)
                .chain(std::iter::once(-2))
                .collect(),
        };
        GroupElement::from_images(self.family, self.rank, images)
            .expect("standard Coxeter element is a valid group element")
    }

    /// Product of the reflections with the given indices, left to right.
    pub fn product<'a, I>(&self, factors: I) -> GroupElement
    where
        I: IntoIterator<Item = &'a Reflection>,
    {
        factors
            .into_iter()
            .fold(self.identity(), |acc, r| &acc * r.action())
    }

    /// `(∏ (e_i + h + 1)) · n! / |W|`.
    pub fn ordered_w_catalan(&self) -> Result<BigUint> {
        let h = self.coxeter_number;
        let numerator = self
            .exponents
            .iter()
            .fold(BigUint::one(), |acc, &e| acc * (e + h + 1))
            * (1..=self.rank).fold(BigUint::one(), |acc, i| acc * i);
        let q = &numerator / &self.group_order;
        if !(&numerator % &self.group_order).is_zero() {
            return Err(Error::Internal(format!(
                "ordered W-Catalan number for {}{} is not integral",
                self.family, self.rank
            )));
        }
        Ok(q)
    }
}

fn moved_space_rows(w: &GroupElement) -> Vec<Vec<i64>> {
    let mut rows = w.matrix();
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = i64::from(i == j) - *x;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(rank: usize, images: &[i32]) -> GroupElement {
        GroupElement::from_images(Family::A, rank, images.to_vec()).unwrap()
    }

    #[test]
    fn composition_is_rightmost_first() {
        let sys = RootSystem::new(Family::A, 3).unwrap();
        let t = |j, i| {
            sys.reflection_for_root(&Root::difference(4, j, i))
                .unwrap()
                .action()
                .clone()
        };
        // (12)(24)(23) = 1→2→3→4→1
        let w = &(&t(2, 1) * &t(4, 2)) * &t(3, 2);
        assert_eq!(w.images(), &[2, 3, 4, 1]);
        assert_eq!(w, sys.standard_coxeter_element());
    }

    #[test]
    fn compose_with_identity_and_involution() {
        let sys = RootSystem::new(Family::B, 3).unwrap();
        let c = sys.standard_coxeter_element();
        assert_eq!(c.compose(&sys.identity()).unwrap(), c);
        for r in sys.reflections() {
            assert!(r.action().compose(r.action()).unwrap().is_identity());
        }
    }

    #[test]
    fn compose_rejects_mismatch() {
        let x = GroupElement::identity(Family::A, 2);
        let y = GroupElement::identity(Family::B, 2);
        assert!(matches!(x.compose(&y), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn element_validation() {
        assert!(GroupElement::from_images(Family::A, 2, vec![1, -2, 3]).is_err());
        assert!(GroupElement::from_images(Family::D, 2, vec![-1, 2]).is_err());
        assert!(GroupElement::from_images(Family::D, 2, vec![-1, -2]).is_ok());
        assert!(GroupElement::from_images(Family::B, 2, vec![1, 1]).is_err());
        assert!(GroupElement::from_images(Family::B, 2, vec![1]).is_err());
    }

    #[test]
    fn root_counts_and_tables() {
        for n in 1..=5 {
            let sys = RootSystem::new(Family::A, n).unwrap();
            assert_eq!(sys.reflections().len(), n * (n + 1) / 2);
            assert_eq!(sys.exponents().iter().sum::<usize>(), n * (n + 1) / 2);
            assert_eq!(sys.coxeter_number(), n + 1);
            let sys = RootSystem::new(Family::B, n).unwrap();
            assert_eq!(sys.reflections().len(), n * n);
            assert_eq!(sys.exponents().iter().sum::<usize>(), n * n);
            assert_eq!(sys.coxeter_number(), 2 * n);
        }
        for n in 2..=5 {
            let sys = RootSystem::new(Family::D, n).unwrap();
            assert_eq!(sys.reflections().len(), n * n - n);
            assert_eq!(sys.exponents().iter().sum::<usize>(), n * n - n);
            assert_eq!(sys.coxeter_number(), 2 * n - 2);
        }
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        assert_eq!(d4.exponents(), &[1, 3, 3, 5]);
        assert_eq!(d4.group_order(), &BigUint::from(192u32));
    }

    #[test]
    fn reflections_negate_their_root() {
        for (fam, n) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
            let sys = RootSystem::new(fam, n).unwrap();
            for r in sys.reflections() {
                assert_eq!(
                    Root::new(r.action().act(r.root().coords())),
                    r.root().negated()
                );
                // Fixes the hyperplane: rank(I - s) = 1.
                assert_eq!(sys.absolute_length(r.action()), 1);
                let moved = r.action().moved_points().len();
                if r.is_short() {
                    assert_eq!(moved, 2);
                } else {
                    assert_eq!(moved, if fam == Family::A { 2 } else { 4 });
                }
            }
        }
    }

    #[test]
    fn lengths_in_a2() {
        let sys = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(sys.coxeter_length(&sys.identity()), 0);
        assert_eq!(sys.absolute_length(&sys.identity()), 0);
        assert_eq!(sys.coxeter_length(&a(2, &[3, 2, 1])), 3);
        assert_eq!(sys.coxeter_length(&a(2, &[2, 3, 1])), 2);
        assert_eq!(sys.absolute_length(&a(2, &[2, 3, 1])), 2);
    }

    #[test]
    fn standard_coxeter_elements() {
        let a3 = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(a3.standard_coxeter_element().to_string(), "(1,2,3,4)");
        let b2 = RootSystem::new(Family::B, 2).unwrap();
        assert_eq!(b2.standard_coxeter_element().to_string(), "(1,2,-1,-2)");
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        assert_eq!(
            d4.standard_coxeter_element().to_string(),
            "(1,-1)(2,3,4,-2,-3,-4)"
        );
        for (fam, lo) in [(Family::A, 1), (Family::B, 1), (Family::D, 2)] {
            for n in lo..=5 {
                let sys = RootSystem::new(fam, n).unwrap();
                let c = sys.standard_coxeter_element();
                let word: Vec<&Reflection> = sys
                    .standard_coxeter_word()
                    .iter()
                    .map(|&i| sys.reflection(i).unwrap())
                    .collect();
                assert_eq!(sys.product(word), c, "{fam}{n}");
                assert_eq!(sys.absolute_length(&c), n);
            }
        }
    }

    #[test]
    fn ordered_w_catalan_values() {
        let v = |f, n| RootSystem::new(f, n).unwrap().ordered_w_catalan().unwrap();
        assert_eq!(v(Family::A, 2), BigUint::from(10u32));
        assert_eq!(v(Family::A, 3), BigUint::from(84u32));
        assert_eq!(v(Family::B, 2), BigUint::from(12u32));
        assert_eq!(v(Family::B, 3), BigUint::from(120u32));
        assert_eq!(v(Family::D, 4), BigUint::from(1200u32));
    }

    #[test]
    fn root_display() {
        assert_eq!(Root::difference(3, 2, 1).to_string(), "e2-e1");
        assert_eq!(Root::sum(3, 3, 1).to_string(), "e3+e1");
        assert_eq!(Root::unit(3, 2).to_string(), "e2");
    }

    #[test]
    fn element_json_round_trip() {
        let sys = RootSystem::new(Family::B, 2).unwrap();
        let c = sys.standard_coxeter_element();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"family":"B","rank":2,"images":[2,-1]}"#);
        let back: GroupElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(
            serde_json::from_str::<GroupElement>(r#"{"family":"A","rank":1,"images":[1,1]}"#)
                .is_err()
        );
    }
}
