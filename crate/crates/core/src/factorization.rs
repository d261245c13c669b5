//! Minimal reflection factorizations, one-way flags and the braid action.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, Reflection, Root, RootSystem};

/// An ordered list of `rank` reflections whose product is `coxeter`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalFactorization {
    coxeter: GroupElement,
    factors: Vec<Reflection>,
}

impl MinimalFactorization {
    /// Validates that `factors` multiply to `coxeter` and that `coxeter` has
    /// full absolute length.
    pub fn new(sys: &RootSystem, coxeter: GroupElement, factors: Vec<Reflection>) -> Result<Self> {
        sys.check_owns(&coxeter)?;
        let found = sys.absolute_length(&coxeter);
        if found != sys.rank() {
            return Err(Error::NotFullAbsoluteLength {
                expected: sys.rank(),
                found,
            });
        }
        if factors.len() != sys.rank() {
            return Err(Error::InvalidFactorization(format!(
                "expected {} factors, got {}",
                sys.rank(),
                factors.len()
            )));
        }
        for r in &factors {
            if sys.reflection(r.index()) != Some(r) {
                return Err(Error::NotAReflection);
            }
        }
        let product = sys.product(&factors);
        if product != coxeter {
            return Err(Error::InvalidFactorization(format!(
                "factors multiply to {product}, not {coxeter}"
            )));
        }
        Ok(MinimalFactorization { coxeter, factors })
    }

    pub fn from_indices(
        sys: &RootSystem,
        coxeter: GroupElement,
        indices: &[usize],
    ) -> Result<Self> {
        let factors = indices
            .iter()
            .map(|&i| {
                sys.reflection(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    max: sys.reflections().len().saturating_sub(1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sys, coxeter, factors)
    }

    /// Builds a factorization from root vectors; a root and its negative
    /// name the same reflection.
    pub fn from_roots(sys: &RootSystem, coxeter: GroupElement, roots: &[Root]) -> Result<Self> {
        let factors = roots
            .iter()
            .map(|r| sys.reflection_for_root(r).cloned())
            .collect::<Result<Vec<_>>>()?;
        Self::new(sys, coxeter, factors)
    }

    fn from_parts(coxeter: GroupElement, factors: Vec<Reflection>) -> Self {
        MinimalFactorization { coxeter, factors }
    }

    pub fn coxeter(&self) -> &GroupElement {
        &self.coxeter
    }

    pub fn factors(&self) -> &[Reflection] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.factors.iter().map(Reflection::index).collect()
    }

    pub fn roots(&self) -> Vec<Root> {
        self.factors.iter().map(|r| r.root().clone()).collect()
    }

    /// `π_0 = e, π_i = r_1 ⋯ r_i`.
    pub fn prefixes(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.factors.len() + 1);
        let mut pi = GroupElement::identity(self.coxeter.family(), self.coxeter.rank());
        out.push(pi.clone());
        for r in &self.factors {
            pi = &pi * r.action();
            out.push(pi.clone());
        }
        out
    }

    /// `flag_i` is set when `l(π_{i-1}) < l(π_i)`.
    pub fn one_way_flags(&self, sys: &RootSystem) -> Vec<bool> {
        let lengths: Vec<usize> = self
            .prefixes()
            .iter()
            .map(|p| sys.coxeter_length(p))
            .collect();
        lengths.windows(2).map(|w| w[0] < w[1]).collect()
    }

    /// `flag_i` is set when the simple roots of `W_{π_{i-1}}` are among the
    /// simple roots of `W_{π_i}`.
    pub fn interval_refinement_flags(&self, sys: &RootSystem) -> Vec<bool> {
        let simple: Vec<Vec<Root>> = self
            .prefixes()
            .iter()
            .map(|p| sys.parabolic_simple_roots(p))
            .collect();
        simple
            .windows(2)
            .map(|w| w[0].iter().all(|r| w[1].contains(r)))
            .collect()
    }

    /// One-way flags of the Kreweras chain `K(π_k) = π_k⁻¹ c`: `flag_k` is set
    /// when `l(K(π_k)) < l(K(π_{k-1}))`.
    pub fn kreweras_one_way_flags(&self, sys: &RootSystem) -> Result<Vec<bool>> {
        let kreweras: Vec<GroupElement> = self
            .prefixes()
            .iter()
            .map(|p| &p.inverse() * &self.coxeter)
            .collect();
        let mut flags = Vec::with_capacity(self.factors.len());
        for w in kreweras.windows(2) {
            let (upper, lower) = (&w[0], &w[1]);
            let quotient = &lower.inverse() * upper;
            if sys.absolute_length(upper) != sys.absolute_length(lower) + 1
                || sys.reflection_of(&quotient).is_none()
            {
                return Err(Error::Internal(format!(
                    "Kreweras chain step {lower} -> {upper} is not an absolute-order cover"
                )));
            }
            flags.push(sys.coxeter_length(lower) < sys.coxeter_length(upper));
        }
        Ok(flags)
    }

    pub fn profile(&self, sys: &RootSystem) -> Result<OneWayProfile> {
        Ok(OneWayProfile {
            flags: self.one_way_flags(sys),
            kreweras_flags: self.kreweras_one_way_flags(sys)?,
        })
    }

    fn check_braid_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.factors.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.factors.len().saturating_sub(1),
            });
        }
        Ok(())
    }

    fn conjugate_reflection(sys: &RootSystem, by: &GroupElement, r: &Reflection) -> Reflection {
        let action = &(by * r.action()) * &by.inverse();
        sys.reflection_of(&action)
            .expect("conjugate of a reflection is a reflection")
            .clone()
    }

    /// `σ_i`: replaces `(r_i, r_{i+1})` by `(r_i r_{i+1} r_i, r_i)`; `i` is 1-based.
    pub fn braid_sigma(&self, sys: &RootSystem, i: usize) -> Result<Self> {
        self.check_braid_index(i)?;
        let mut factors = self.factors.clone();
        let (a, b) = (&self.factors[i - 1], &self.factors[i]);
        factors[i - 1] = Self::conjugate_reflection(sys, a.action(), b);
        factors[i] = a.clone();
        Ok(Self::from_parts(self.coxeter.clone(), factors))
    }

    /// `σ_i⁻¹`: replaces `(r_i, r_{i+1})` by `(r_{i+1}, r_{i+1} r_i r_{i+1})`.
    pub fn braid_sigma_inv(&self, sys: &RootSystem, i: usize) -> Result<Self> {
        self.check_braid_index(i)?;
        let mut factors = self.factors.clone();
        let (a, b) = (&self.factors[i - 1], &self.factors[i]);
        factors[i - 1] = b.clone();
        factors[i] = Self::conjugate_reflection(sys, b.action(), a);
        Ok(Self::from_parts(self.coxeter.clone(), factors))
    }

    /// `R`: the reversed sequence, a factorization of `c⁻¹`.
    pub fn reverse(&self) -> Self {
        let factors = self.factors.iter().rev().cloned().collect();
        Self::from_parts(self.coxeter.inverse(), factors)
    }

    /// `Δ'`: `r_i' = π_{i-1} r_i π_{i-1}⁻¹`, a factorization of `c⁻¹`.
    pub fn reverse_garside(&self, sys: &RootSystem) -> Self {
        let prefixes = self.prefixes();
        let factors = self
            .factors
            .iter()
            .zip(&prefixes)
            .map(|(r, p)| Self::conjugate_reflection(sys, p, r))
            .collect();
        Self::from_parts(self.coxeter.inverse(), factors)
    }

    /// Garside braid `Δ = δ_n ⋯ δ_2` with `δ_k = σ_1 ⋯ σ_{k-1}`, applied as a
    /// left action (rightmost generator first).
    pub fn garside(&self, sys: &RootSystem) -> Self {
        let n = self.factors.len();
        let mut word = Vec::new();
        for k in (2..=n).rev() {
            word.extend(1..k);
        }
        word.iter().rev().fold(self.clone(), |f, &i| {
            f.braid_sigma(sys, i).expect("index within range")
        })
    }

    /// `R ∘ Δ`, computed through the braid action.
    pub fn reverse_garside_via_braids(&self, sys: &RootSystem) -> Self {
        self.garside(sys).reverse()
    }

    /// Positions `j ≤ i` (1-based) whose conjugation moves `r_i` on its way
    /// to `r_i'`.
    pub fn trail(&self, i: usize) -> Result<Vec<usize>> {
        let n = self.factors.len();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let target = self.factors[i - 1].action();
        let mut out = Vec::new();
        // conj holds (r_{j+1} ⋯ r_{i-1}) r_i (r_{j+1} ⋯ r_{i-1})⁻¹.
        let mut conj = target.clone();
        for j in (1..i).rev() {
            let r = self.factors[j - 1].action();
            let next = &(r * &conj) * r;
            if next != conj {
                out.push(j);
            }
            conj = next;
        }
        out.reverse();
        out.push(i);
        Ok(out)
    }

    pub fn to_record(&self, sys: &RootSystem) -> FactorizationRecord {
        FactorizationRecord {
            coxeter: self.coxeter.clone(),
            factors: self.roots(),
            one_way: self.one_way_flags(sys),
            signs: None,
        }
    }
}

impl std::fmt::Display for MinimalFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|r| r.root().to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Per-position flags of a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneWayProfile {
    pub flags: Vec<bool>,
    pub kreweras_flags: Vec<bool>,
}

impl OneWayProfile {
    pub fn one_way_count(&self) -> usize {
        self.flags.iter().filter(|&&b| b).count()
    }
}

/// A minimal factorization with a sign at every position; `-1` is only
/// allowed where the reflection is one-way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedFactorization {
    base: MinimalFactorization,
    signs: Vec<i8>,
}

impl SignedFactorization {
    pub fn new(sys: &RootSystem, base: MinimalFactorization, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != base.len() {
            return Err(Error::InvalidFactorization(format!(
                "expected {} signs, got {}",
                base.len(),
                signs.len()
            )));
        }
        let flags = base.one_way_flags(sys);
        for (i, (&s, &one_way)) in signs.iter().zip(&flags).enumerate() {
            match s {
                1 => {}
                -1 if one_way => {}
                -1 => {
                    return Err(Error::InvalidFactorization(format!(
                        "negative sign at two-way position {}",
                        i + 1
                    )))
                }
                other => {
                    return Err(Error::InvalidFactorization(format!(
                        "sign {other} is not ±1"
                    )))
                }
            }
        }
        Ok(SignedFactorization { base, signs })
    }

    pub fn base(&self) -> &MinimalFactorization {
        &self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Every signing of `base`.
    pub fn all_signings(sys: &RootSystem, base: &MinimalFactorization) -> Vec<SignedFactorization> {
        let flags = base.one_way_flags(sys);
        let free: Vec<usize> = (0..flags.len()).filter(|&i| flags[i]).collect();
        (0u64..1 << free.len())
            .map(|mask| {
                let mut signs = vec![1i8; flags.len()];
                for (bit, &pos) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        signs[pos] = -1;
                    }
                }
                SignedFactorization {
                    base: base.clone(),
                    signs,
                }
            })
            .collect()
    }

    pub fn to_record(&self, sys: &RootSystem) -> FactorizationRecord {
        let mut rec = self.base.to_record(sys);
        rec.signs = Some(self.signs.clone());
        rec
    }
}

/// Serialized form of a (signed) factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub coxeter: GroupElement,
    pub factors: Vec<Root>,
    pub one_way: Vec<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub signs: Option<Vec<i8>>,
}

impl FactorizationRecord {
    /// Rebuilds the factorization; the stored flags are checked against the
    /// recomputed ones.
    pub fn to_factorization(&self, sys: &RootSystem) -> Result<MinimalFactorization> {
        let f = MinimalFactorization::from_roots(sys, self.coxeter.clone(), &self.factors)?;
        if f.one_way_flags(sys) != self.one_way {
            return Err(Error::InvalidFactorization(
                "stored one-way flags disagree with the factors".into(),
            ));
        }
        Ok(f)
    }
}

fn check_target(sys: &RootSystem, c: &GroupElement) -> Result<()> {
    sys.check_owns(c)?;
    let found = sys.absolute_length(c);
    if found != sys.rank() {
        return Err(Error::NotFullAbsoluteLength {
            expected: sys.rank(),
            found,
        });
    }
    Ok(())
}

fn extend(
    sys: &RootSystem,
    remaining: &GroupElement,
    remaining_len: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining_len == 0 {
        out.push(prefix.clone());
        return;
    }
    for t in sys.reflections() {
        let next = t.action() * remaining;
        if sys.absolute_length(&next) + 1 == remaining_len {
            prefix.push(t.index());
            extend(sys, &next, remaining_len - 1, prefix, out);
            prefix.pop();
        }
    }
}

fn materialize(
    sys: &RootSystem,
    c: &GroupElement,
    words: Vec<Vec<usize>>,
) -> Vec<MinimalFactorization> {
    words
        .into_iter()
        .map(|w| {
            let factors = w.iter().map(|&i| sys.reflections()[i].clone()).collect();
            MinimalFactorization::from_parts(c.clone(), factors)
        })
        .collect()
}

/// All minimal factorizations of `c`, in lexicographic order of reflection
/// indices.
pub fn enumerate(sys: &RootSystem, c: &GroupElement) -> Result<Vec<MinimalFactorization>> {
    check_target(sys, c)?;
    let mut out = Vec::new();
    extend(sys, c, sys.rank(), &mut Vec::new(), &mut out);
    Ok(materialize(sys, c, out))
}

/// Same output as [`enumerate`], with the first position fanned out over the
/// rayon pool.
pub fn enumerate_par(sys: &RootSystem, c: &GroupElement) -> Result<Vec<MinimalFactorization>> {
    check_target(sys, c)?;
    let n = sys.rank();
    let words: Vec<Vec<usize>> = sys
        .reflections()
        .par_iter()
        .flat_map_iter(|t| {
            let next = t.action() * c;
            let mut out = Vec::new();
            if sys.absolute_length(&next) + 1 == n {
                extend(sys, &next, n - 1, &mut vec![t.index()], &mut out);
            }
            out
        })
        .collect();
    Ok(materialize(sys, c, words))
}

/// Number of signed minimal factorizations: `Σ_f 2^{#one-way positions of f}`.
pub fn signed_count(sys: &RootSystem, c: &GroupElement) -> Result<BigUint> {
    let all = enumerate_par(sys, c)?;
    Ok(signed_count_of(sys, &all))
}

pub fn signed_count_of(sys: &RootSystem, factorizations: &[MinimalFactorization]) -> BigUint {
    factorizations
        .par_iter()
        .map(|f| BigUint::one() << f.one_way_flags(sys).iter().filter(|&&b| b).count())
        .reduce(BigUint::zero, |a, b| a + b)
}
