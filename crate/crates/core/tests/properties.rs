use std::sync::OnceLock;

use coxfactor::factorization::enumerate;
use coxfactor::matrix_tree::{laplacian, minor_det, DirectedMultigraph, IntegerMatrix};
use coxfactor::prufer::{
    bernardi_g, bernardi_g_inv, prufer_decode, prufer_encode, rooted_decode, rooted_encode,
    type_b_decode, type_b_encode, type_d_decode, type_d_encode, RootEncoding,
};
use coxfactor::{Family, GroupElement, MinimalFactorization, RootSystem};
use coxfactor_oracle as oracle;
use num_bigint::BigInt;
use proptest::prelude::*;

fn code(len: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=max, len)
}

fn sized_code(
    sizes: std::ops::RangeInclusive<usize>,
    len: fn(usize) -> usize,
    max: fn(usize) -> usize,
) -> impl Strategy<Value = Vec<usize>> {
    sizes.prop_flat_map(move |n| code(len(n), max(n)))
}

struct Pool {
    sys: RootSystem,
    all: Vec<MinimalFactorization>,
}

fn pools() -> &'static [Pool] {
    static POOLS: OnceLock<Vec<Pool>> = OnceLock::new();
    POOLS.get_or_init(|| {
        [(Family::A, 4), (Family::B, 3), (Family::D, 4)]
            .into_iter()
            .map(|(f, n)| {
                let sys = RootSystem::new(f, n).unwrap();
                let all = enumerate(&sys, &sys.standard_coxeter_element()).unwrap();
                Pool { sys, all }
            })
            .collect()
    })
}

/// Leibniz expansion, for small matrices.
fn leibniz(m: &[Vec<i64>]) -> i128 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i128) -> i128 {
        if row == m.len() {
            return sign;
        }
        let mut total = 0;
        let mut inversions = 0;
        for col in 0..m.len() {
            if used[col] {
                continue;
            }
            used[col] = true;
            let s = if inversions % 2 == 0 { sign } else { -sign };
            total += i128::from(m[row][col]) * go(m, row + 1, used, s);
            used[col] = false;
            inversions += 1;
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classic_codes_round_trip(c in sized_code(2..=9, |n| n - 2, |n| n)) {
        let t = prufer_decode(&c).unwrap();
        prop_assert_eq!(prufer_encode(&t).unwrap(), c);
    }

    #[test]
    fn rooted_codes_round_trip(c in sized_code(1..=9, |n| n - 1, |n| n)) {
        let n = c.len() + 1;
        let t = rooted_decode(&c, n).unwrap();
        prop_assert_eq!(t.root(), *c.last().unwrap_or(&1));
        prop_assert_eq!(rooted_encode(&t), c);
    }

    #[test]
    fn type_b_codes_round_trip(c in sized_code(1..=9, |n| n, |n| n)) {
        let t = type_b_decode(&c).unwrap();
        prop_assert_eq!(t.root(), c[0]);
        prop_assert_eq!(type_b_encode(&t), c);
    }

    #[test]
    fn type_d_codes_round_trip(c in sized_code(3..=8, |n| n, |n| n - 1)) {
        let g = type_d_decode(&c, RootEncoding::Normalized).unwrap();
        prop_assert_eq!(g.size(), c.len());
        prop_assert_eq!(type_d_encode(&g, RootEncoding::Normalized).unwrap(), c.clone());
        let raw = type_d_encode(&g, RootEncoding::Raw).unwrap();
        prop_assert_eq!(raw[0], g.root());
        prop_assert_eq!(type_d_decode(&raw, RootEncoding::Raw).unwrap(), g);
    }

    #[test]
    fn bernardi_round_trip(c in sized_code(2..=9, |n| n - 1, |n| n)) {
        let n = c.len() + 1;
        let s = rooted_decode(&c, n).unwrap();
        prop_assume!(s.children(s.root()).iter().all(|&x| x > s.root()));
        let t = bernardi_g(&s).unwrap();
        prop_assert!(t.is_leaf(n) && t.root() != n);
        prop_assert_eq!(bernardi_g_inv(&t).unwrap(), s);
    }

    #[test]
    fn reverse_garside_is_an_involution(pool in 0..3usize, pick in any::<prop::sample::Index>()) {
        let Pool { sys, all } = &pools()[pool];
        let f = pick.get(all);
        let d = f.reverse_garside(sys);
        prop_assert_eq!(d.coxeter(), &f.coxeter().inverse());
        prop_assert_eq!(&d.reverse_garside(sys), f);
        prop_assert_eq!(&f.reverse_garside_via_braids(sys), &d);
    }

    #[test]
    fn braid_moves_stay_minimal(pool in 0..3usize, pick in any::<prop::sample::Index>(), at in any::<prop::sample::Index>()) {
        let Pool { sys, all } = &pools()[pool];
        let f = pick.get(all);
        let i = 1 + at.index(f.len() - 1);
        let g = f.braid_sigma(sys, i).unwrap();
        prop_assert_eq!(sys.product(g.factors()), f.coxeter().clone());
        prop_assert!(all.contains(&g));
        prop_assert_eq!(&g.braid_sigma_inv(sys, i).unwrap(), f);
    }

    #[test]
    fn determinant_matches_leibniz(rows in (1..=5usize).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, n), n)
    })) {
        let m = IntegerMatrix::from_i64(&rows).unwrap();
        prop_assert_eq!(m.det(), BigInt::from(leibniz(&rows)));
    }

    #[test]
    fn minor_determinant_counts_arborescences(
        (m, edges, root) in (1..=5usize).prop_flat_map(|m| (
            Just(m),
            prop::collection::vec((1..=m, 1..=m, 1..=3u64), 0..=3 * m),
            1..=m,
        ))
    ) {
        let g = DirectedMultigraph::new(m, edges.clone()).unwrap();
        let det = minor_det(&laplacian(&g), root).unwrap();
        prop_assert_eq!(det, BigInt::from(oracle::arborescence_weight(m, &edges, root)));
    }

    #[test]
    fn group_element_json_round_trip(pool in 0..3usize, pick in any::<prop::sample::Index>()) {
        let Pool { sys, all } = &pools()[pool];
        let f = pick.get(all);
        let w = sys.product(&f.factors()[..2]);
        let s = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<GroupElement>(&s).unwrap(), w);
        let record = f.to_record(sys);
        let back = serde_json::from_str::<coxfactor::factorization::FactorizationRecord>(
            &serde_json::to_string(&record).unwrap(),
        ).unwrap();
        prop_assert_eq!(&back.to_factorization(sys).unwrap(), f);
    }
}
