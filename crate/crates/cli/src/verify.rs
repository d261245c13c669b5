//! Named verification suites with a machine-readable report.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use clap::ValueEnum;
use coxfactor::diagrams::{dual_graph, folded_diagram};
use coxfactor::factorization::{enumerate, enumerate_par, signed_count_of};
use coxfactor::goulden_yong::{
    gy_dual_a, gy_dual_b, gy_dual_d, gy_inverse_a, gy_inverse_b, gy_inverse_d,
};
use coxfactor::matrix_tree::{
    build_g_an, build_g_an_weighted, catalan, descent_classify, factorial, laplacian, minor_det,
    DirectedMultigraph,
};
use coxfactor::prufer::{
    bernardi_g, bernardi_g_inv, prufer_decode, prufer_encode, rooted_decode, rooted_encode,
    type_b_decode, type_b_encode, type_d_decode, type_d_encode, RootEncoding,
};
use coxfactor::{
    Family, LoopedTree, MinimalFactorization, RootSystem, RootedLabeledTree, UnicyclicRootedGraph,
};
use coxfactor_oracle as oracle;
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Counts,
    MatrixTree,
    Signed,
    Garside,
    OneWay,
    Bijections,
    Prufer,
    Structure,
    Determinants,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Counts,
        Suite::MatrixTree,
        Suite::Signed,
        Suite::Garside,
        Suite::OneWay,
        Suite::Bijections,
        Suite::Prufer,
        Suite::Structure,
        Suite::Determinants,
    ];

    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

pub struct Options {
    pub max_rank: usize,
    pub seed: u64,
    pub trials: usize,
    pub parallel: bool,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: Suite,
    pub max_rank: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Check>,
    pub results: Vec<Check>,
}

/// Brute-force searches over more tuples than this are skipped.
const BRUTE_FORCE_LIMIT: usize = 2_000_000;

struct Ctx<'a> {
    opts: &'a Options,
    suite: Suite,
    cache: HashMap<(Family, usize), (RootSystem, Vec<MinimalFactorization>)>,
    results: Vec<Check>,
}

type Step = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

impl<'a> Ctx<'a> {
    fn system(&mut self, family: Family, n: usize) -> &(RootSystem, Vec<MinimalFactorization>) {
        let parallel = self.opts.parallel;
        self.cache.entry((family, n)).or_insert_with(|| {
            let sys = RootSystem::new(family, n).expect("rank validated");
            let c = sys.standard_coxeter_element();
            let all = if parallel {
                enumerate_par(&sys, &c)
            } else {
                enumerate(&sys, &c)
            }
            .expect("standard Coxeter element");
            (sys, all)
        })
    }

    fn record(&mut self, name: impl Into<String>, step: Step) {
        let (passed, detail) = match step {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.results.push(Check {
            suite: self.suite.name(),
            name: name.into(),
            passed,
            detail,
        });
    }

    /// Ranks of `family` from its smallest supported rank (or `from`) up to
    /// the cap.
    fn ranks(&self, family: Family, from: usize) -> Vec<usize> {
        (from.max(family.min_rank())..=self.opts.max_rank).collect()
    }

    fn each_system(&self, d_from: usize) -> Vec<(Family, usize)> {
        let mut out = Vec::new();
        for (family, from) in [(Family::A, 1), (Family::B, 1), (Family::D, d_from)] {
            for n in self.ranks(family, from) {
                out.push((family, n));
            }
        }
        out
    }
}

fn label(family: Family, n: usize) -> String {
    format!("{family}{n}")
}

fn e(x: coxfactor::Error) -> String {
    x.to_string()
}

pub fn run(suite: Suite, opts: &Options) -> Report {
    let mut ctx = Ctx {
        opts,
        suite,
        cache: HashMap::new(),
        results: Vec::new(),
    };
    let chosen: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in chosen {
        ctx.suite = s;
        match s {
            Suite::Counts => counts(&mut ctx),
            Suite::MatrixTree => matrix_tree(&mut ctx),
            Suite::Signed => signed(&mut ctx),
            Suite::Garside => garside(&mut ctx),
            Suite::OneWay => one_way(&mut ctx),
            Suite::Bijections => bijections(&mut ctx),
            Suite::Prufer => prufer(&mut ctx),
            Suite::Structure => structure(&mut ctx),
            Suite::Determinants => determinants(&mut ctx),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let failures: Vec<Check> = ctx
        .results
        .iter()
        .filter(|c| !c.passed)
        .map(|c| Check {
            suite: c.suite.clone(),
            name: c.name.clone(),
            passed: false,
            detail: c.detail.clone(),
        })
        .collect();
    Report {
        schema_version: SCHEMA_VERSION,
        suite,
        max_rank: opts.max_rank,
        seed: opts.seed,
        passed: failures.is_empty(),
        checks: ctx.results.len(),
        failures,
        results: ctx.results,
    }
}

/// Closed-form number of minimal factorizations of the standard Coxeter
/// element.
pub fn formula_count(family: Family, n: usize) -> BigUint {
    let n32 = n as u32;
    match family {
        Family::A => BigUint::from(n + 1).pow(n32.saturating_sub(1)),
        Family::B => BigUint::from(n).pow(n32),
        Family::D => BigUint::from(2u8) * BigUint::from(n - 1).pow(n32),
    }
}

fn oracle_letter(family: Family) -> char {
    match family {
        Family::A => 'A',
        Family::B => 'B',
        Family::D => 'D',
    }
}

fn counts(ctx: &mut Ctx) {
    for (family, n) in ctx.each_system(2) {
        let (sys, all) = ctx.system(family, n);
        let got = all.len();
        let target = sys.standard_coxeter_element().images().to_vec();
        let step = (|| {
            let formula = formula_count(family, n);
            ensure!(
                BigUint::from(got) == formula,
                "enumerated {got}, closed form {formula}"
            );
            let refl = oracle::reflections(oracle_letter(family), n);
            if refl
                .len()
                .checked_pow(n as u32)
                .is_some_and(|t| t <= BRUTE_FORCE_LIMIT)
            {
                let brute = oracle::brute_force_factorizations(&refl, &target, n).len();
                ensure!(brute == got, "enumerated {got}, brute force {brute}");
                Ok(format!("{got} (closed form and brute force)"))
            } else {
                Ok(format!("{got} (closed form)"))
            }
        })();
        ctx.record(label(family, n), step);
    }
}

fn matrix_tree(ctx: &mut Ctx) {
    for n in ctx.ranks(Family::A, 1) {
        let (sys, all) = ctx.system(Family::A, n);
        let count = all.len();
        let signed = signed_count_of(sys, all);
        let step = (|| {
            let l = laplacian(&build_g_an(n).map_err(e)?);
            let lw = laplacian(&build_g_an_weighted(n).map_err(e)?);
            ensure!(
                l.row_sums()
                    .iter()
                    .chain(lw.row_sums().iter())
                    .all(|s| *s == BigInt::from(0)),
                "Laplacian rows do not sum to zero"
            );
            let d = minor_det(&l, n + 1).map_err(e)?;
            let dw = minor_det(&lw, n + 1).map_err(e)?;
            ensure!(d == BigInt::from(count), "det(L) = {d}, enumerated {count}");
            ensure!(
                dw == BigInt::from(signed.clone()),
                "det(L') = {dw}, signed count {signed}"
            );
            Ok(format!("det(L)={d} det(L')={dw}"))
        })();
        ctx.record(label(Family::A, n), step);
    }
}

fn signed(ctx: &mut Ctx) {
    for (family, n) in ctx.each_system(2) {
        let (sys, all) = ctx.system(family, n);
        let got = signed_count_of(sys, all);
        let step = (|| {
            let cat = sys.ordered_w_catalan().map_err(e)?;
            ensure!(got == cat, "signed count {got}, W-Catalan {cat}");
            if family == Family::A {
                let formula = factorial(n as u64) * catalan(n as u64 + 1);
                ensure!(got == formula, "signed count {got}, n!C(n+1) = {formula}");
            }
            Ok(got.to_string())
        })();
        ctx.record(label(family, n), step);
    }
}

fn garside(ctx: &mut Ctx) {
    for (family, n) in ctx.each_system(2) {
        let (sys, all) = ctx.system(family, n);
        let c_inv = sys.standard_coxeter_element().inverse();
        let step = (|| {
            for f in all {
                let d = f.reverse_garside(sys);
                ensure!(d.reverse_garside(sys) == *f, "{f}: not an involution");
                ensure!(
                    sys.product(d.factors()) == c_inv,
                    "{f}: image does not multiply to c^-1"
                );
                ensure!(
                    f.reverse_garside_via_braids(sys) == d,
                    "{f}: braid construction differs"
                );
            }
            Ok(format!("{} factorizations", all.len()))
        })();
        ctx.record(label(family, n), step);
    }
}

fn one_way(ctx: &mut Ctx) {
    for (family, n) in ctx.each_system(2) {
        let (sys, all) = ctx.system(family, n);
        let step = (|| {
            let mut one_way = 0;
            for f in all {
                let flags = f.one_way_flags(sys);
                ensure!(
                    flags == f.interval_refinement_flags(sys),
                    "{f}: interval flags differ"
                );
                ensure!(
                    flags == f.reverse_garside(sys).one_way_flags(sys),
                    "{f}: Δ' changes flags"
                );
                f.kreweras_one_way_flags(sys).map_err(e)?;
                if family == Family::A {
                    let t = gy_dual_a(sys, f).map_err(e)?;
                    ensure!(
                        descent_classify(&t).map_err(e)? == flags,
                        "{f}: descents differ from flags"
                    );
                }
                one_way += flags.iter().filter(|&&b| b).count();
            }
            Ok(format!(
                "{} factorizations, {one_way} one-way positions",
                all.len()
            ))
        })();
        ctx.record(label(family, n), step);
    }
}

fn oracle_trees(n: usize) -> Vec<RootedLabeledTree> {
    oracle::rooted_trees(n)
        .into_iter()
        .map(|p| RootedLabeledTree::from_parents(p).expect("oracle tree"))
        .collect()
}

fn looped_trees(n: usize) -> Vec<LoopedTree> {
    oracle_trees(n)
        .into_iter()
        .flat_map(|t| (1..=n).map(move |v| LoopedTree::new(t.clone(), v).expect("loop in range")))
        .collect()
}

fn bijections(ctx: &mut Ctx) {
    for n in ctx.ranks(Family::A, 1) {
        let (sys, all) = ctx.system(Family::A, n);
        let step = (|| {
            for f in all {
                let t = gy_dual_a(sys, f).map_err(e)?;
                ensure!(
                    gy_inverse_a(sys, &t).map_err(e)? == *f,
                    "{f} does not round trip"
                );
            }
            let domain: Vec<_> = oracle_trees(n + 1)
                .into_iter()
                .filter(|t| t.root() == n + 1)
                .collect();
            ensure!(
                domain.len() == all.len(),
                "{} trees, {} factorizations",
                domain.len(),
                all.len()
            );
            for t in &domain {
                let f = gy_inverse_a(sys, t).map_err(e)?;
                ensure!(
                    gy_dual_a(sys, &f).map_err(e)? == *t,
                    "tree {t} does not round trip"
                );
            }
            Ok(format!("{} trees", domain.len()))
        })();
        ctx.record(format!("gy-{}", label(Family::A, n)), step);
    }
    for n in ctx.ranks(Family::B, 1) {
        let (sys, all) = ctx.system(Family::B, n);
        let step = (|| {
            for f in all {
                let t = gy_dual_b(sys, f).map_err(e)?;
                ensure!(
                    gy_inverse_b(sys, &t).map_err(e)? == *f,
                    "{f} does not round trip"
                );
            }
            let domain = looped_trees(n);
            ensure!(
                domain.len() == all.len(),
                "{} looped trees, {} factorizations",
                domain.len(),
                all.len()
            );
            for t in &domain {
                let f = gy_inverse_b(sys, t).map_err(e)?;
                ensure!(
                    gy_dual_b(sys, &f).map_err(e)? == *t,
                    "looped tree {t} does not round trip"
                );
            }
            Ok(format!("{} looped trees", domain.len()))
        })();
        ctx.record(format!("gy-{}", label(Family::B, n)), step);
    }
    for n in ctx.ranks(Family::D, 3) {
        let (sys, all) = ctx.system(Family::D, n);
        let step = (|| {
            let mut fibers: BTreeMap<UnicyclicRootedGraph, Vec<MinimalFactorization>> =
                BTreeMap::new();
            for f in all {
                fibers
                    .entry(gy_dual_d(sys, f).map_err(e)?)
                    .or_default()
                    .push(f.clone());
            }
            let want = (n - 1).pow(n as u32);
            ensure!(
                fibers.len() == want,
                "image has {} graphs, expected {want}",
                fibers.len()
            );
            for (g, mut fiber) in fibers {
                ensure!(
                    fiber.len() == 2,
                    "fiber over {g} has {} elements",
                    fiber.len()
                );
                fiber.sort();
                ensure!(
                    gy_inverse_d(sys, &g).map_err(e)? == fiber,
                    "inverse over {g} differs"
                );
            }
            Ok(format!("{} -> {want}, 2-to-1", all.len()))
        })();
        ctx.record(format!("gy-{}", label(Family::D, n)), step);
    }
}

fn all_words(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=max).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn prufer(ctx: &mut Ctx) {
    let r = ctx.opts.max_rank;
    for size in 2..=(r + 2).min(7) {
        let step = (|| {
            let trees: Vec<_> = oracle_trees(size)
                .into_iter()
                .filter(|t| t.root() == size)
                .collect();
            let mut codes = BTreeSet::new();
            for t in &trees {
                let c = prufer_encode(t).map_err(e)?;
                ensure!(
                    prufer_decode(&c).map_err(e)? == *t,
                    "{t} does not round trip"
                );
                codes.insert(c);
            }
            ensure!(
                codes.len() == size.pow(size as u32 - 2),
                "{} distinct codes",
                codes.len()
            );
            Ok(format!("{} trees", trees.len()))
        })();
        ctx.record(format!("classic-{size}"), step);
    }
    for n in 1..=(r + 1).min(6) {
        let step = (|| {
            let trees = oracle_trees(n);
            for t in &trees {
                ensure!(
                    rooted_decode(&rooted_encode(t), n).map_err(e)? == *t,
                    "{t} does not round trip"
                );
            }
            let looped = looped_trees(n);
            for t in &looped {
                ensure!(
                    type_b_decode(&type_b_encode(t)).map_err(e)? == *t,
                    "{t} does not round trip"
                );
            }
            Ok(format!("{} rooted, {} looped", trees.len(), looped.len()))
        })();
        ctx.record(format!("rooted-and-b-{n}"), step);
    }
    for n in ctx.ranks(Family::D, 3) {
        let (sys, all) = ctx.system(Family::D, n);
        let step = (|| {
            let images: BTreeSet<UnicyclicRootedGraph> = all
                .iter()
                .map(|f| gy_dual_d(sys, f))
                .collect::<Result<_, _>>()
                .map_err(e)?;
            for g in &images {
                for enc in [RootEncoding::Raw, RootEncoding::Normalized] {
                    let c = type_d_encode(g, enc).map_err(e)?;
                    ensure!(
                        type_d_decode(&c, enc).map_err(e)? == *g,
                        "{g} does not round trip"
                    );
                }
            }
            let words = all_words(n, n - 1);
            ensure!(
                words.len() == images.len(),
                "{} codes for {} graphs",
                words.len(),
                images.len()
            );
            for c in &words {
                let g = type_d_decode(c, RootEncoding::Normalized).map_err(e)?;
                ensure!(images.contains(&g), "{c:?} decodes outside the image");
                ensure!(
                    type_d_encode(&g, RootEncoding::Normalized).map_err(e)? == *c,
                    "{c:?} does not round trip"
                );
            }
            Ok(format!("{} graphs", images.len()))
        })();
        ctx.record(format!("d-{n}"), step);
    }
    for n in 2..=(r + 2).min(7) {
        let step = (|| {
            let all = oracle_trees(n);
            let s: Vec<_> = all
                .iter()
                .filter(|t| t.children(t.root()).iter().all(|&c| c > t.root()))
                .collect();
            let t_set: BTreeSet<_> = all
                .iter()
                .filter(|t| t.root() != n && t.is_leaf(n))
                .collect();
            let want = (n - 1).pow(n as u32 - 1);
            ensure!(
                s.len() == want && t_set.len() == want,
                "|S| = {}, |T| = {}",
                s.len(),
                t_set.len()
            );
            let mut image = BTreeSet::new();
            for x in s {
                let y = bernardi_g(x).map_err(e)?;
                ensure!(t_set.contains(&y), "g({x}) = {y} is outside T");
                ensure!(bernardi_g_inv(&y).map_err(e)? == *x, "g^-1(g({x})) differs");
                image.insert(y);
            }
            ensure!(image.len() == want, "g is not injective");
            Ok(format!("|S| = |T| = {want}"))
        })();
        ctx.record(format!("bernardi-{n}"), step);
    }
}

fn structure(ctx: &mut Ctx) {
    for (family, n) in ctx.each_system(3) {
        let (sys, all) = ctx.system(family, n);
        let step = (|| {
            for f in all {
                let dual = dual_graph(sys, f);
                let g = dual.graph();
                match family {
                    Family::A => {
                        ensure!(g.is_spanning_tree(), "dual of {f} is not a spanning tree")
                    }
                    Family::B => {
                        let folded = folded_diagram(f).map_err(e)?;
                        ensure!(
                            folded.graph().is_tree_plus_loop(),
                            "folded diagram of {f} is not tree+loop"
                        );
                        ensure!(g.is_tree_plus_loop(), "dual of {f} is not tree+loop");
                    }
                    Family::D => {
                        let folded = folded_diagram(f).map_err(e)?;
                        ensure!(
                            folded.graph().is_unicyclic_through(1),
                            "folded diagram of {f} is not unicyclic through 1"
                        );
                        ensure!(
                            g.is_unicyclic_through(1),
                            "dual of {f} is not unicyclic through 1"
                        );
                    }
                }
            }
            Ok(format!("{} factorizations", all.len()))
        })();
        ctx.record(label(family, n), step);
    }
}

fn determinants(ctx: &mut Ctx) {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
    let trials = ctx.opts.trials;
    let step = (|| {
        for trial in 0..trials {
            let m = rng.gen_range(1..=5usize);
            let k = rng.gen_range(0..=3 * m);
            let edges: Vec<(usize, usize, u64)> = (0..k)
                .map(|_| {
                    (
                        rng.gen_range(1..=m),
                        rng.gen_range(1..=m),
                        rng.gen_range(1..=3u64),
                    )
                })
                .collect();
            let root = rng.gen_range(1..=m);
            let g = DirectedMultigraph::new(m, edges.clone()).map_err(e)?;
            let det = minor_det(&laplacian(&g), root).map_err(e)?;
            let want = oracle::arborescence_weight(m, &edges, root);
            ensure!(
                det == BigInt::from(want.clone()),
                "trial {trial}: m={m} root={root} edges={edges:?}: {det} != {want}"
            );
        }
        Ok(format!("{trials} random graphs"))
    })();
    ctx.record("random-multigraphs", step);
}
