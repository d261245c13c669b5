//! Cross-checks against the slow reference implementations in
//! `coxfactor-oracle` and against exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};

use coxfactor::diagrams::{chord_diagram, colored_dual_graph, dual_graph, folded_diagram};
use coxfactor::factorization::{enumerate, enumerate_par};
use coxfactor::goulden_yong::{collapse_cycle, dt_to_s, fold_fibers, gy_dual_d, is_dt_member};
use coxfactor::matrix_tree::catalan;
use coxfactor::{Family, GroupElement, MinimalFactorization, RootSystem, UnicyclicRootedGraph};
use coxfactor_oracle as oracle;
use num_bigint::BigUint;

const SMALL: &[(Family, char, usize)] = &[
    (Family::A, 'A', 1),
    (Family::A, 'A', 2),
    (Family::A, 'A', 3),
    (Family::B, 'B', 2),
    (Family::B, 'B', 3),
    (Family::D, 'D', 3),
    (Family::D, 'D', 4),
];

fn all_of(family: Family, n: usize) -> (RootSystem, Vec<MinimalFactorization>) {
    let sys = RootSystem::new(family, n).unwrap();
    let c = sys.standard_coxeter_element();
    let all = enumerate(&sys, &c).unwrap();
    (sys, all)
}

#[test]
fn lengths_match_breadth_first_search() {
    for &(family, letter, n) in SMALL {
        let sys = RootSystem::new(family, n).unwrap();
        let coxeter = oracle::word_lengths(&oracle::simple_reflections(letter, n));
        let absolute = oracle::word_lengths(&oracle::reflections(letter, n));
        assert_eq!(
            BigUint::from(coxeter.len()),
            *sys.group_order(),
            "{letter}{n} order"
        );
        assert_eq!(coxeter.len(), absolute.len());
        for (perm, &len) in &coxeter {
            let w = GroupElement::from_images(family, n, perm.clone()).unwrap();
            assert_eq!(sys.coxeter_length(&w), len, "{letter}{n} {w}");
            assert_eq!(sys.absolute_length(&w), absolute[perm], "{letter}{n} {w}");
        }
    }
}

#[test]
fn reflections_match_signed_transpositions() {
    for &(family, letter, n) in SMALL {
        let sys = RootSystem::new(family, n).unwrap();
        let ours: BTreeSet<Vec<i32>> = sys
            .reflections()
            .iter()
            .map(|r| r.action().images().to_vec())
            .collect();
        let theirs: BTreeSet<Vec<i32>> = oracle::reflections(letter, n).into_iter().collect();
        assert_eq!(ours, theirs, "{letter}{n}");
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for &(family, letter, n) in SMALL {
        let (sys, all) = all_of(family, n);
        let refl = oracle::reflections(letter, n);
        let target = sys.standard_coxeter_element().images().to_vec();
        let brute: BTreeSet<Vec<Vec<i32>>> = oracle::brute_force_factorizations(&refl, &target, n)
            .into_iter()
            .map(|idx| idx.into_iter().map(|i| refl[i].clone()).collect())
            .collect();
        let ours: BTreeSet<Vec<Vec<i32>>> = all
            .iter()
            .map(|f| {
                f.factors()
                    .iter()
                    .map(|r| r.action().images().to_vec())
                    .collect()
            })
            .collect();
        assert_eq!(ours.len(), all.len());
        assert_eq!(ours, brute, "{letter}{n}");
        assert_eq!(
            enumerate_par(&sys, &sys.standard_coxeter_element()).unwrap(),
            all
        );
    }
}

#[test]
fn non_coxeter_targets() {
    // Enumeration is not tied to the standard Coxeter element.
    let sys = RootSystem::new(Family::D, 4).unwrap();
    let w = GroupElement::from_images(Family::D, 4, vec![-2, 1, -4, 3]).unwrap();
    let k = sys.absolute_length(&w);
    let ours = enumerate(&sys, &w).unwrap();
    let brute = oracle::brute_force_factorizations(&oracle::reflections('D', 4), w.images(), k);
    assert_eq!(ours.len(), brute.len());
}

#[test]
fn catalan_matches_recurrence() {
    let table = oracle::catalan_table(20);
    for (k, c) in table.iter().enumerate() {
        assert_eq!(catalan(k as u64), *c);
    }
}

fn oracle_trail(f: &MinimalFactorization, i: usize) -> Vec<usize> {
    let perms: Vec<Vec<i32>> = f
        .factors()
        .iter()
        .map(|r| r.action().images().to_vec())
        .collect();
    let conj_through = |from: usize| {
        // (r_from ⋯ r_{i-1}) r_i (r_from ⋯ r_{i-1})⁻¹, 1-based.
        let mut x = perms[i - 1].clone();
        for j in (from..i).rev() {
            let r = &perms[j - 1];
            x = oracle::compose(&oracle::compose(r, &x), r);
        }
        x
    };
    let mut out: Vec<usize> = (1..i)
        .filter(|&j| conj_through(j) != conj_through(j + 1))
        .collect();
    out.push(i);
    out
}

#[test]
fn trails_match_direct_conjugation() {
    for &(family, _, n) in SMALL {
        let (_, all) = all_of(family, n);
        for f in &all {
            for i in 1..=n {
                assert_eq!(f.trail(i).unwrap(), oracle_trail(f, i), "{f} at {i}");
            }
        }
    }
}

#[test]
fn braid_relations() {
    let (sys, all) = all_of(Family::A, 3);
    for f in &all {
        let lhs = f
            .braid_sigma(&sys, 1)
            .and_then(|g| g.braid_sigma(&sys, 2))
            .and_then(|g| g.braid_sigma(&sys, 1))
            .unwrap();
        let rhs = f
            .braid_sigma(&sys, 2)
            .and_then(|g| g.braid_sigma(&sys, 1))
            .and_then(|g| g.braid_sigma(&sys, 2))
            .unwrap();
        assert_eq!(lhs, rhs, "{f}");
        for i in 1..3 {
            let g = f.braid_sigma(&sys, i).unwrap();
            assert_eq!(g.coxeter(), f.coxeter());
            assert_eq!(g.braid_sigma_inv(&sys, i).unwrap(), *f);
        }
    }
    let (sys, all) = all_of(Family::B, 4);
    for f in &all {
        // Far-apart generators commute.
        let a = f
            .braid_sigma(&sys, 1)
            .and_then(|g| g.braid_sigma(&sys, 3))
            .unwrap();
        let b = f
            .braid_sigma(&sys, 3)
            .and_then(|g| g.braid_sigma(&sys, 1))
            .unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn chord_diagrams_are_noncrossing() {
    for (family, ranks) in [(Family::A, 1..=4), (Family::B, 2..=4)] {
        for n in ranks {
            let (sys, all) = all_of(family, n);
            for f in &all {
                let flags = f.one_way_flags(&sys);
                let chords = chord_diagram(f).colored(&flags).unwrap();
                assert!(!chords.has_crossing(), "{f}");
                let dual = colored_dual_graph(&sys, f);
                assert_eq!(chords.colors(), dual.colors(), "{f}");
            }
        }
    }
}

#[test]
fn dual_of_dual_is_the_folded_diagram() {
    for (family, n) in [(Family::B, 3), (Family::B, 4), (Family::D, 4)] {
        let (sys, all) = all_of(family, n);
        for f in &all {
            let d = f.reverse_garside(&sys);
            let twice = dual_graph(&sys, &d);
            assert_eq!(twice.graph(), folded_diagram(f).unwrap().graph(), "{f}");
        }
    }
}

#[test]
fn kreweras_complements_are_covers() {
    for &(family, _, n) in SMALL {
        let (sys, all) = all_of(family, n);
        for f in &all {
            let profile = f.profile(&sys).unwrap();
            assert_eq!(profile.flags, f.one_way_flags(&sys));
            assert_eq!(profile.kreweras_flags.len(), n);
        }
    }
}

fn flip_first(coords: &[i32]) -> Vec<i32> {
    let mut v = coords.to_vec();
    v[0] = -v[0];
    v
}

#[test]
fn folded_fibers_pair_up_by_sign() {
    for (n, fibers_expected) in [(3, 8), (4, 81)] {
        let sys = RootSystem::new(Family::D, n).unwrap();
        let fibers = fold_fibers(&sys, &sys.standard_coxeter_element()).unwrap();
        assert_eq!(fibers.len(), fibers_expected);
        for fiber in fibers.values() {
            assert_eq!(fiber.len(), 2);
            let (a, b) = (fiber[0].roots(), fiber[1].roots());
            for (x, y) in a.iter().zip(&b) {
                if x.coords()[0] == 0 {
                    assert_eq!(x, y);
                } else {
                    assert_eq!(flip_first(x.coords()), y.coords());
                }
            }
            let duals: BTreeSet<_> = fiber.iter().map(|f| gy_dual_d(&sys, f).unwrap()).collect();
            assert_eq!(duals.len(), 1);
        }
    }
}

/// Every rooted connected loopless graph on `1..=n` with `n` edges.
fn unicyclic_graphs(n: usize) -> Vec<UnicyclicRootedGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut multisets: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        multisets = multisets
            .into_iter()
            .flat_map(|m| {
                let start = m.last().copied().unwrap_or(0);
                (start..pairs.len()).map(move |p| {
                    let mut m = m.clone();
                    m.push(p);
                    m
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for m in multisets {
        let edges: Vec<(usize, usize)> = m.iter().map(|&p| pairs[p]).collect();
        for root in 1..=n {
            if let Ok(g) = UnicyclicRootedGraph::new(root, edges.clone()) {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn dt_membership_is_the_gy_image() {
    for n in 3..=5 {
        let (sys, all) = all_of(Family::D, n);
        let image: BTreeSet<UnicyclicRootedGraph> =
            all.iter().map(|f| gy_dual_d(&sys, f).unwrap()).collect();
        let members: BTreeSet<UnicyclicRootedGraph> = unicyclic_graphs(n)
            .into_iter()
            .filter(is_dt_member)
            .collect();
        assert_eq!(image, members, "n = {n}");
    }
}

#[test]
fn literal_collapse_is_not_injective() {
    let (sys, all) = all_of(Family::D, 3);
    let unrooted: BTreeSet<Vec<(usize, usize)>> = all
        .iter()
        .map(|f| gy_dual_d(&sys, f).unwrap().edges().to_vec())
        .collect();
    assert_eq!(unrooted.len(), 4);
    let rooted: BTreeMap<Vec<(usize, usize)>, UnicyclicRootedGraph> = all
        .iter()
        .map(|f| {
            let g = gy_dual_d(&sys, f).unwrap();
            (g.edges().to_vec(), g)
        })
        .collect();
    let collapsed: BTreeSet<_> = rooted.values().map(collapse_cycle).collect();
    let fixed: BTreeSet<_> = rooted.values().map(|g| dt_to_s(g).unwrap()).collect();
    assert_eq!(collapsed.len(), 3);
    assert_eq!(fixed.len(), 4);
}
