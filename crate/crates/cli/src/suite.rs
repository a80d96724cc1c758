//! Named verification suites.
//!
//! A suite runs a family of assertions over a stream of instances: seeded
//! random tables, exhaustively enumerated tables, generated graphs and trees,
//! or fixed golden structures. Results are identical for identical
//! parameters regardless of thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use rankdual_core::census::{connected_rooted_graphs, free_trees};
use rankdual_core::fixtures::{bundled_tree, unnormalized_pair, three_edge_tree, three_edge_greedoid};
use rankdual_core::ground::subsets_by_size;
use rankdual_core::ops::{contract_direct, contract_via_dual};
use rankdual_core::tutte::corank_nullity;
use rankdual_core::{
    branching_greedoid, check_antimatroid, check_demimatroid_characterization,
    check_demimatroid_triple, check_dual_greedoid, check_greedoid, check_matroid, contract, delete,
    direct_sum, dual, enumerate_tables, greedoid_minor_feasible, minor, pruning_antimatroid,
    root_adjacency_test, swap_vars, tutte_recursive, tutte_subset, Axiom, AxiomReport,
    Constraint, DemiTriple, EnumSpec, Error, FullAntimatroid, GroundSet, LaurentPoly2, MinorKind,
    MinorSpec, Pivot, RankTable, Subset, Tree,
};

use crate::sample;

/// Failures kept in a result; later ones are only counted.
pub const MAX_FAILURES: usize = 100;

/// Environment variable naming the worker thread count.
pub const THREADS_ENV: &str = "RANKDUAL_THREADS";

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteError {
    UnknownSuite(String),
    UnknownParam { suite: String, key: String },
    BadParam { key: String, value: String, reason: String },
    MissingSeed(String),
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::UnknownSuite(s) => {
                write!(f, "unknown suite {s:?}; known suites: {}", suite_names().join(", "))
            }
            SuiteError::UnknownParam { suite, key } => {
                let allowed = find(suite).map(|s| s.keys.join(", ")).unwrap_or_default();
                write!(f, "suite {suite} takes no parameter {key:?} (accepted: {allowed})")
            }
            SuiteError::BadParam { key, value, reason } => {
                write!(f, "bad value {value:?} for {key}: {reason}")
            }
            SuiteError::MissingSeed(s) => write!(f, "suite {s} is randomized and needs a seed"),
        }
    }
}

impl std::error::Error for SuiteError {}

/// `key=value` parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    /// Parses items of the form `k=v`, each possibly a comma-separated list.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self, SuiteError> {
        let mut p = Params::new();
        for item in items {
            for part in item.as_ref().split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (k, v) = part.split_once('=').ok_or_else(|| SuiteError::BadParam {
                    key: part.into(),
                    value: String::new(),
                    reason: "expected key=value".into(),
                })?;
                p.set(k.trim(), v.trim());
            }
        }
        Ok(p)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.values.insert(key.into(), value.to_string());
        self
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.set(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// Parameters after defaults, as the suite saw them.
struct Args<'a> {
    suite: &'static str,
    given: &'a Params,
    effective: BTreeMap<&'static str, String>,
}

impl<'a> Args<'a> {
    fn num<T>(&mut self, key: &'static str, default: T, range: (T, T)) -> Result<T, SuiteError>
    where
        T: FromStr + PartialOrd + fmt::Display + Copy,
    {
        let v = match self.given.get(key) {
            None => default,
            Some(s) => s.parse::<T>().map_err(|_| SuiteError::BadParam {
                key: key.into(),
                value: s.into(),
                reason: "not a number".into(),
            })?,
        };
        if v < range.0 || v > range.1 {
            return Err(SuiteError::BadParam {
                key: key.into(),
                value: v.to_string(),
                reason: format!("must lie in {}..={}", range.0, range.1),
            });
        }
        self.effective.insert(key, v.to_string());
        Ok(v)
    }

    fn seed(&mut self) -> Result<u64, SuiteError> {
        match self.given.get("seed") {
            None => Err(SuiteError::MissingSeed(self.suite.into())),
            Some(_) => self.num("seed", 0, (0, u64::MAX)),
        }
    }

    fn flag(&mut self, key: &'static str) -> Result<bool, SuiteError> {
        let v = match self.given.get(key) {
            None => false,
            Some("true" | "1" | "yes") => true,
            Some("false" | "0" | "no") => false,
            Some(s) => {
                return Err(SuiteError::BadParam {
                    key: key.into(),
                    value: s.into(),
                    reason: "expected true or false".into(),
                })
            }
        };
        if v {
            self.effective.insert(key, "true".into());
        }
        Ok(v)
    }

    fn render(&self) -> String {
        self.effective
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// One violated assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub assertion: String,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub suite: &'static str,
    /// Effective parameters, defaults included.
    pub params: String,
    pub instances_checked: u64,
    /// The first [`MAX_FAILURES`] failures in instance order.
    pub failures: Vec<Failure>,
    pub total_failures: u64,
    /// Deterministic counts gathered along the way.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Line-oriented report; elapsed time is left out so reports compare
    /// byte for byte.
    pub fn report(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        out.push_str(&format!("params: {}\n", self.params));
        out.push_str(&format!("instances: {}\n", self.instances_checked));
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for f in &self.failures {
            out.push_str(&format!(
                "failure: {} | {} | {}\n",
                f.instance, f.assertion, f.witness
            ));
        }
        if self.total_failures as usize > self.failures.len() {
            out.push_str(&format!(
                "failures: {} ({} shown)\n",
                self.total_failures,
                self.failures.len()
            ));
        } else {
            out.push_str(&format!("failures: {}\n", self.total_failures));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// Assertions collected for one instance.
#[derive(Debug, Default)]
pub struct Findings(Vec<(String, String)>);

impl Findings {
    fn expect(&mut self, ok: bool, assertion: &str, witness: impl FnOnce() -> String) {
        if !ok {
            self.0.push((assertion.into(), witness()));
        }
    }

    fn fail(&mut self, assertion: &str, witness: impl fmt::Display) {
        self.0.push((assertion.into(), witness.to_string()));
    }

    /// Unwraps an operation result, recording an error as a failure.
    fn ok<T>(&mut self, assertion: &str, r: rankdual_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(assertion, format!("error: {e}"));
                None
            }
        }
    }

    fn same_table(&mut self, assertion: &str, got: &RankTable, expected: &RankTable) {
        if let Some(w) = table_diff(got, expected) {
            self.fail(assertion, w);
        }
    }

    fn same_poly(&mut self, assertion: &str, got: &LaurentPoly2, expected: &LaurentPoly2) {
        self.expect(got == expected, assertion, || {
            format!("got {got}, expected {expected}")
        });
    }
}

fn table_diff(got: &RankTable, expected: &RankTable) -> Option<String> {
    if got.ground() != expected.ground() {
        return Some(format!(
            "ground {} vs {}",
            got.ground().show(got.ground().full()),
            expected.ground().show(expected.ground().full())
        ));
    }
    subsets_by_size(got.n())
        .into_iter()
        .find(|&a| got.rank(a) != expected.rank(a))
        .map(|a| {
            format!(
                "A={}: got {}, expected {}",
                got.ground().show(a),
                got.rank(a),
                expected.rank(a)
            )
        })
}

fn first_failure(rep: &AxiomReport, ground: &GroundSet) -> String {
    rep.verdicts
        .iter()
        .find(|v| v.required && !v.passed())
        .map(|v| format!("{} {}", v.axiom.name(), v.witness.map(|w| w.show(ground)).unwrap_or_default()))
        .unwrap_or_else(|| "all axioms pass".into())
}

/// `{a,b} r=[0,1,0,2]`, ranks in mask order.
pub fn describe_table(t: &RankTable) -> String {
    let vals: Vec<String> = t.values().iter().map(i64::to_string).collect();
    format!("{} r=[{}]", t.ground().show(t.ground().full()), vals.join(","))
}

fn describe_tree(t: &Tree) -> String {
    let names = t.vertices();
    let edges: Vec<String> = t
        .edges()
        .iter()
        .map(|e| format!("{}={}-{}", e.label, names[e.ends.0], names[e.ends.1]))
        .collect();
    format!("tree {}", edges.join(" "))
}

/// Drives instances through a check in parallel chunks.
struct Sink {
    fail_fast: bool,
    checked: u64,
    failures: Vec<Failure>,
    total: u64,
}

impl Sink {
    fn new(fail_fast: bool) -> Self {
        Sink {
            fail_fast,
            checked: 0,
            failures: Vec::new(),
            total: 0,
        }
    }

    fn stopped(&self) -> bool {
        self.fail_fast && self.total > 0
    }

    fn run<T, I, D, C>(&mut self, source: &str, items: I, describe: D, check: C)
    where
        T: Send + Sync,
        I: IntoIterator<Item = T>,
        D: Fn(&T) -> String + Sync,
        C: Fn(&T, &mut Findings) + Sync,
    {
        let mut items = items.into_iter();
        let mut offset = 0usize;
        while !self.stopped() {
            let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                return;
            }
            let found: Vec<(usize, String, Findings)> = chunk
                .par_iter()
                .enumerate()
                .filter_map(|(i, t)| {
                    let mut f = Findings::default();
                    check(t, &mut f);
                    (!f.0.is_empty()).then(|| (i, describe(t), f))
                })
                .collect();
            let mut count = chunk.len();
            for (i, desc, f) in found {
                for (assertion, witness) in f.0 {
                    self.total += 1;
                    if self.failures.len() < MAX_FAILURES {
                        self.failures.push(Failure {
                            instance: format!("{source} #{} {desc}", offset + i),
                            assertion,
                            witness,
                        });
                    }
                }
                if self.fail_fast {
                    count = i + 1;
                    break;
                }
            }
            self.checked += count as u64;
            offset += chunk.len();
        }
    }
}

type Runner = fn(&mut Args<'_>, &mut Sink, &mut Vec<String>) -> Result<(), SuiteError>;

pub struct SuiteInfo {
    pub name: &'static str,
    pub keys: &'static [&'static str],
    pub about: &'static str,
    run: Runner,
}

const RANDOM: &[&str] = &["seed", "count", "max_n", "lo", "hi", "fail_fast"];

pub static SUITES: &[SuiteInfo] = &[
    SuiteInfo { name: "involution", keys: RANDOM, about: "dual(dual(g)) = g", run: involution },
    SuiteInfo { name: "exchange", keys: RANDOM, about: "(G-p)* = G*/p and (G/p)* = G*-p", run: exchange },
    SuiteInfo { name: "contract_formula", keys: RANDOM, about: "contraction formula equals dual-delete-dual; minor formula", run: contract_formula },
    SuiteInfo { name: "direct_sum_dual", keys: RANDOM, about: "dual commutes with direct sum; Tutte function multiplies", run: direct_sum_dual },
    SuiteInfo { name: "recursion_oracle", keys: RANDOM, about: "deletion-contraction recursion equals subset expansion for three pivot rules", run: recursion_oracle },
    SuiteInfo { name: "duality_swap", keys: RANDOM, about: "f(G*; t, z) = f(G; z, t), subset by subset", run: duality_swap },
    SuiteInfo { name: "polynomiality", keys: &["seed", "count", "max_n", "lo", "hi", "n", "fail_fast"], about: "no negative exponent iff subcardinal and r(S) maximal", run: polynomiality },
    SuiteInfo { name: "prop_4_1", keys: &["n", "fail_fast"], about: "greedoid contraction at p is a greedoid iff {p} is feasible", run: prop_4_1 },
    SuiteInfo { name: "prop_4_2", keys: &["n", "fail_fast"], about: "feasible-set minors induce the rank-table minors", run: prop_4_2 },
    SuiteInfo { name: "thm_4_3", keys: &["n", "fail_fast"], about: "duals of greedoids satisfy Gr0*-Gr3*", run: thm_4_3 },
    SuiteInfo { name: "thm_4_4", keys: &["n", "fail_fast"], about: "greedoids whose dual is a greedoid are exactly the matroids", run: thm_4_4 },
    SuiteInfo { name: "prop_4_5", keys: &["edges", "fail_fast"], about: "branching greedoid dual is nonnegative iff every vertex is adjacent to the root", run: prop_4_5 },
    SuiteInfo { name: "prop_5_1", keys: &["n", "edges", "fail_fast"], about: "full greedoids have nonpositive dual rank", run: prop_5_1 },
    SuiteInfo { name: "thm_5_2", keys: &["n", "edges", "fail_fast"], about: "full antimatroids: r*(A) = -|closure(A) - A|", run: thm_5_2 },
    SuiteInfo { name: "cor_5_3", keys: &["n", "edges", "fail_fast"], about: "full antimatroids: C convex iff r*(C) = 0", run: cor_5_3 },
    SuiteInfo { name: "lemma_5_4", keys: &["n", "seed", "count", "max_n", "fail_fast"], about: "monotone tables: R1 iff monotone nullity", run: lemma_5_4 },
    SuiteInfo { name: "thm_5_5", keys: RANDOM_AND_N, about: "(S, r, r*) is a demi-matroid iff (a), (b), (c) hold", run: thm_5_5 },
    SuiteInfo { name: "r2_equivalence", keys: &["n", "fail_fast"], about: "under R0 and R1, R2 holds iff R2' holds", run: r2_equivalence },
    SuiteInfo { name: "fig1_goldens", keys: &["fail_fast"], about: "worked values for the three-edge rooted tree", run: fig1_goldens },
    SuiteInfo { name: "fig2_goldens", keys: &["fail_fast"], about: "worked values for the bundled ten-edge tree", run: fig2_goldens },
];

const RANDOM_AND_N: &[&str] = &["seed", "count", "max_n", "lo", "hi", "n", "fail_fast"];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

fn find(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

fn pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

pub fn run_suite(name: &str, params: &Params) -> Result<SuiteResult, SuiteError> {
    let info = find(name).ok_or_else(|| SuiteError::UnknownSuite(name.into()))?;
    // a seed is accepted everywhere so one command line can drive every suite
    let accepted = |k: &str| k == "seed" || info.keys.contains(&k);
    if let Some(key) = params.values.keys().find(|k| !accepted(k)) {
        return Err(SuiteError::UnknownParam {
            suite: name.into(),
            key: key.clone(),
        });
    }
    let mut args = Args {
        suite: info.name,
        given: params,
        effective: BTreeMap::new(),
    };
    let fail_fast = args.flag("fail_fast")?;
    let mut sink = Sink::new(fail_fast);
    let mut notes = Vec::new();
    let start = Instant::now();
    pool().install(|| (info.run)(&mut args, &mut sink, &mut notes))?;
    Ok(SuiteResult {
        suite: info.name,
        params: args.render(),
        instances_checked: sink.checked,
        failures: sink.failures,
        total_failures: sink.total,
        notes,
        elapsed: start.elapsed(),
    })
}

// ---------------------------------------------------------------------------
// instance sources

struct Random {
    seed: u64,
    count: usize,
    max_n: usize,
    window: (i64, i64),
}

fn random_args(args: &mut Args<'_>, max_n_cap: usize) -> Result<Random, SuiteError> {
    let seed = args.seed()?;
    let count = args.num("count", 1000usize, (0, 10_000_000))?;
    let max_n = args.num("max_n", 6usize, (0, max_n_cap))?;
    let lo = args.num("lo", sample::DEFAULT_WINDOW.0, (-1_000_000, 1_000_000))?;
    let hi = args.num("hi", sample::DEFAULT_WINDOW.1, (lo, 1_000_000))?;
    Ok(Random {
        seed,
        count,
        max_n,
        window: (lo, hi),
    })
}

impl Random {
    fn tables(&self) -> Vec<RankTable> {
        sample::random_tables(self.seed, self.count, self.max_n, self.window)
    }
}

fn enumerated(c: Constraint, max_n: usize) -> impl Iterator<Item = RankTable> {
    (0..=max_n).flat_map(move |n| {
        enumerate_tables(EnumSpec::new(n, c).expect("n bounded by the parameter range"))
            .expect("n bounded by the parameter range")
    })
}

fn enum_n(args: &mut Args<'_>, default: usize) -> Result<usize, SuiteError> {
    args.num("n", default, (0, rankdual_core::enumerate::MAX_ENUM_ELEMENTS))
}

fn count_note(notes: &mut Vec<String>, label: &str, c: &AtomicU64) {
    notes.push(format!("{label}: {}", c.load(Ordering::Relaxed)));
}

// ---------------------------------------------------------------------------
// duality and minors

fn involution(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 12)?;
    sink.run("random", rnd.tables(), describe_table, |g, f| {
        let Some(d) = f.ok("dual", dual(g)) else { return };
        let Some(dd) = f.ok("dual", dual(&d)) else { return };
        f.same_table("dual(dual(g)) = g", &dd, g);
    });
    Ok(())
}

fn exchange(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 12)?;
    sink.run("random", rnd.tables(), describe_table, |g, f| {
        let Some(gd) = f.ok("dual", dual(g)) else { return };
        for p in 0..g.n() {
            let label = g.ground().label(p);
            let lhs = delete(g, p).and_then(|x| dual(&x));
            let rhs = contract(&gd, p);
            if let (Some(l), Some(r)) = (f.ok("dual(G-p)", lhs), f.ok("G*/p", rhs)) {
                f.same_table(&format!("(G-{label})* = G*/{label}"), &l, &r);
            }
            let lhs = contract(g, p).and_then(|x| dual(&x));
            let rhs = delete(&gd, p);
            if let (Some(l), Some(r)) = (f.ok("dual(G/p)", lhs), f.ok("G*-p", rhs)) {
                f.same_table(&format!("(G/{label})* = G*-{label}"), &l, &r);
            }
        }
    });
    Ok(())
}

fn contract_formula(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 10)?;
    sink.run("random", rnd.tables(), describe_table, |g, f| {
        let n = g.n();
        for p in 0..n {
            let keep = g.ground().full().without(p);
            let oracle = RankTable::from_fn(g.ground().restrict(keep), |a| {
                g.rank(a.expand(keep).with(p)) - g.rank(Subset::singleton(p))
            });
            let label = g.ground().label(p);
            if let Some(d) = f.ok("contract_direct", contract_direct(g, p)) {
                f.same_table(&format!("r_G/{label}(A) = r(A+{label}) - r({label})"), &d, &oracle);
            }
            if let Some(v) = f.ok("contract_via_dual", contract_via_dual(g, p)) {
                f.same_table(&format!("(G*-{label})* = r(A+{label}) - r({label})"), &v, &oracle);
            }
        }
        for c in g.ground().subsets() {
            let keep = g.ground().complement(c);
            let oracle = RankTable::from_fn(g.ground().restrict(keep), |a| {
                g.rank(a.expand(keep).union(c)) - g.rank(c)
            });
            let spec = MinorSpec::new(c, Subset::EMPTY).expect("disjoint");
            if let Some(m) = f.ok("minor", minor(g, &spec)) {
                f.same_table(
                    &format!("r_G/C(A) = r(A+C) - r(C), C={}", g.ground().show(c)),
                    &m,
                    &oracle,
                );
            }
        }
    });
    Ok(())
}

fn relabel(g: &RankTable, prefix: &str) -> RankTable {
    let ground = GroundSet::new((0..g.n()).map(|i| format!("{prefix}{i}"))).expect("distinct");
    RankTable::from_values(ground, g.values().to_vec()).expect("same size")
}

fn direct_sum_dual(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 10)?;
    let mut rng = sample::rng(rnd.seed);
    let pairs: Vec<(RankTable, RankTable)> = (0..rnd.count)
        .map(|_| {
            let g1 = sample::random_table(&mut rng, rnd.max_n, rnd.window);
            let g2 = sample::random_table(&mut rng, rnd.max_n - g1.n(), rnd.window);
            (g1, relabel(&g2, "x"))
        })
        .collect();
    sink.run(
        "random-pair",
        pairs,
        |(a, b)| format!("{} + {}", describe_table(a), describe_table(b)),
        |(g1, g2), f| {
            let Some(sum) = f.ok("direct_sum", direct_sum(g1, g2)) else { return };
            let lhs = dual(&sum);
            let rhs = dual(g1).and_then(|d1| direct_sum(&d1, &dual(g2)?));
            if let (Some(l), Some(r)) = (f.ok("dual(G1+G2)", lhs), f.ok("G1*+G2*", rhs)) {
                f.same_table("(G1+G2)* = G1* + G2*", &l, &r);
            }
            let product = tutte_subset(g1).and_then(|p1| Ok(&p1 * &tutte_subset(g2)?));
            if let (Some(ps), Some(pp)) = (f.ok("tutte", tutte_subset(&sum)), f.ok("tutte", product)) {
                f.same_poly("f(G1+G2) = f(G1) f(G2)", &ps, &pp);
            }
        },
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// Tutte function

fn middle(rem: Subset) -> usize {
    rem.elements().nth(rem.len() / 2).expect("nonempty")
}

fn recursion_oracle(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 10)?;
    sink.run("random", rnd.tables(), describe_table, |g, f| {
        let Some(expected) = f.ok("tutte_subset", tutte_subset(g)) else { return };
        let runs = [
            ("lowest", tutte_recursive(g, &Pivot::Lowest)),
            ("highest", tutte_recursive(g, &Pivot::Highest)),
            ("middle", tutte_recursive(g, &middle)),
        ];
        for (name, got) in runs {
            if let Some(p) = f.ok("tutte_recursive", got) {
                f.same_poly(&format!("recursion ({name} pivot) = subset expansion"), &p, &expected);
            }
        }
    });
    Ok(())
}

fn duality_swap(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 12)?;
    sink.run("random", rnd.tables(), describe_table, |g, f| {
        let Some(gd) = f.ok("dual", dual(g)) else { return };
        if let (Some(fd), Some(fg)) = (f.ok("tutte", tutte_subset(&gd)), f.ok("tutte", tutte_subset(g))) {
            f.same_poly("f(G*; t, z) = f(G; z, t)", &fd, &swap_vars(&fg));
        }
        let full = g.ground().full();
        for a in g.ground().subsets() {
            let (Ok(x), Ok(y)) = (corank_nullity(g, a), corank_nullity(&gd, full.difference(a))) else {
                f.fail("corank/nullity", "overflow");
                return;
            };
            if x != (y.1, y.0) {
                f.fail(
                    "term of A in f(G) = swapped term of S-A in f(G*)",
                    format!("A={}: {x:?} vs {y:?}", g.ground().show(a)),
                );
                return;
            }
        }
    });
    Ok(())
}

fn polynomiality(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 12)?;
    let n = enum_n(args, 3)?;
    let check = |g: &RankTable, f: &mut Findings| {
        let Some(p) = f.ok("tutte", tutte_subset(g)) else { return };
        let v = g.validate();
        f.expect(
            p.is_polynomial() == v.is_polynomial(),
            "no negative exponent iff subcardinal and r(S) maximal",
            || format!("polynomial={}, subcardinal={}, rank-S-maximum={}", p.is_polynomial(), v.subcardinal.holds(), v.rank_s_maximum.holds()),
        );
    };
    sink.run("random", rnd.tables(), describe_table, check);
    // a narrow window puts both outcomes in reach
    let mut rng = sample::rng(rnd.seed ^ 0x9e37_79b9_7f4a_7c15);
    let narrow: Vec<RankTable> = (0..rnd.count)
        .map(|_| {
            let n = rng.gen_range(0..=rnd.max_n);
            let ground = GroundSet::alphabetic(n).expect("bounded");
            sample::random_table_on(&mut rng, ground, (0, n as i64))
        })
        .collect();
    sink.run("narrow", narrow, describe_table, check);
    sink.run("enumerated", enumerated(Constraint::NormalizedSubcardinalMonotone, n), describe_table, check);
    Ok(())
}

// ---------------------------------------------------------------------------
// greedoids

fn prop_4_1(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    sink.run("greedoid", enumerated(Constraint::Greedoid, n), describe_table, |g, f| {
        let feasible_sets: Vec<Subset> = g.entries().filter(|&(a, r)| r == a.len() as i64).map(|(a, _)| a).collect();
        for p in 0..g.n() {
            if !feasible_sets.iter().any(|s| s.contains(p)) {
                continue;
            }
            let label = g.ground().label(p);
            let singleton = g.rank(Subset::singleton(p)) == 1;
            let Some(c) = f.ok("contract", contract(g, p)) else { continue };
            let is_greedoid = check_greedoid(&c).passed();
            f.expect(
                is_greedoid == singleton,
                &format!("G/{label} greedoid iff {{{label}}} feasible"),
                || format!("G/{label} greedoid={is_greedoid}, {{{label}}} feasible={singleton}"),
            );
            let family = greedoid_minor_feasible(g, p, MinorKind::Contract);
            let expected_err = matches!(&family, Err(Error::NotAGreedoid(l)) if l == label);
            f.expect(
                family.is_ok() == singleton && (singleton || expected_err),
                &format!("feasible-set contraction at {label} reports not-a-greedoid exactly when {{{label}}} is infeasible"),
                || format!("{family:?}"),
            );
        }
    });
    Ok(())
}

fn prop_4_2(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    sink.run("greedoid", enumerated(Constraint::Greedoid, n), describe_table, |g, f| {
        for p in 0..g.n() {
            let label = g.ground().label(p);
            if let Some(fam) = f.ok("feasible deletion", greedoid_minor_feasible(g, p, MinorKind::Delete)) {
                let induced = fam.induced_rank();
                if let Some(d) = f.ok("delete", delete(g, p)) {
                    f.same_table(&format!("feasible-set G-{label} induces r restricted"), &induced, &d);
                }
                f.expect(check_greedoid(&induced).passed(), &format!("G-{label} is a greedoid"), || {
                    first_failure(&check_greedoid(&induced), induced.ground())
                });
            }
            match greedoid_minor_feasible(g, p, MinorKind::Contract) {
                Ok(fam) => {
                    if let Some(c) = f.ok("contract", contract(g, p)) {
                        f.same_table(
                            &format!("feasible-set G/{label} induces r(A+{label}) - r({label})"),
                            &fam.induced_rank(),
                            &c,
                        );
                    }
                }
                Err(Error::NotAGreedoid(_)) => {}
                Err(e) => f.fail("feasible contraction", e),
            }
        }
    });
    Ok(())
}

fn thm_4_3(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    sink.run("greedoid", enumerated(Constraint::Greedoid, n), describe_table, |g, f| {
        let Some(d) = f.ok("dual", dual(g)) else { return };
        let rep = check_dual_greedoid(&d);
        f.expect(rep.passed(), "dual of a greedoid satisfies Gr0*-Gr3*", || {
            first_failure(&rep, d.ground())
        });
    });
    Ok(())
}

fn thm_4_4(args: &mut Args<'_>, sink: &mut Sink, notes: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    let (matroids, both, greedoids) = (AtomicU64::new(0), AtomicU64::new(0), AtomicU64::new(0));
    sink.run(
        "monotone",
        enumerated(Constraint::NormalizedSubcardinalMonotone, n),
        describe_table,
        |g, f| {
            let Some(d) = f.ok("dual", dual(g)) else { return };
            let m = check_matroid(g);
            let is_m = m.passed();
            let gr = check_greedoid(g).passed();
            let gd = check_greedoid(&d).passed();
            let gstar = check_dual_greedoid(g).passed();
            for (c, hit) in [(&matroids, is_m), (&greedoids, gr), (&both, gr && gd)] {
                if hit {
                    c.fetch_add(1, Ordering::Relaxed);
                }
            }
            f.expect((gr && gd) == is_m, "greedoid(r) and greedoid(r*) iff matroid(r)", || {
                format!("greedoid(r)={gr}, greedoid(r*)={gd}, matroid(r)={is_m}")
            });
            f.expect((gr && gstar) == is_m, "greedoid(r) and Gr0*-Gr3*(r) iff matroid(r)", || {
                format!("greedoid(r)={gr}, Gr0*-Gr3*(r)={gstar}, matroid(r)={is_m}")
            });
            f.expect(
                m.remark("R2 agrees with R2' under R0+R1") != Some(false),
                "under R0 and R1, R2 iff R2'",
                || format!("R2={:?}, R2'={:?}", m.holds(Axiom::R2), m.holds(Axiom::R2Local)),
            );
        },
    );
    count_note(notes, "greedoids", &greedoids);
    count_note(notes, "greedoids with greedoid dual", &both);
    count_note(notes, "matroids", &matroids);
    Ok(())
}

fn prop_4_5(args: &mut Args<'_>, sink: &mut Sink, notes: &mut Vec<String>) -> Result<(), SuiteError> {
    let edges = args.num("edges", 6usize, (0, 7))?;
    let adjacent = AtomicU64::new(0);
    sink.run(
        "rooted-graph",
        connected_rooted_graphs(edges),
        |rg| {
            let names = rg.vertices();
            let es: Vec<String> = rg
                .edges()
                .iter()
                .map(|e| format!("{}={}-{}", e.label, names[e.ends.0], names[e.ends.1]))
                .collect();
            format!("root {} edges {}", rg.root(), es.join(" "))
        },
        |rg, f| {
            let t = branching_greedoid(rg);
            let rep = check_greedoid(&t);
            f.expect(rep.passed(), "branching greedoid passes Gr0-Gr3", || first_failure(&rep, t.ground()));
            let Some(d) = f.ok("dual", dual(&t)) else { return };
            let low = d.entries().min_by_key(|&(_, r)| r).expect("at least the empty set");
            let test = root_adjacency_test(rg);
            if test {
                adjacent.fetch_add(1, Ordering::Relaxed);
            }
            f.expect(
                (low.1 >= 0) == test,
                "dual rank nonnegative iff every vertex adjacent to the root",
                || format!("min r* = {} at {}, root-adjacent={test}", low.1, d.ground().show(low.0)),
            );
        },
    );
    count_note(notes, "root-adjacent graphs", &adjacent);
    Ok(())
}

fn nonpositive_dual(g: &RankTable, f: &mut Findings) {
    f.expect(g.total_rank() == g.n() as i64, "greedoid is full", || format!("r(S) = {}", g.total_rank()));
    let Some(d) = f.ok("dual", dual(g)) else { return };
    let positive = d.entries().find(|&(_, r)| r > 0);
    if let Some((a, r)) = positive {
        f.fail("r*(A) <= 0", format!("A={}: r*(A) = {r}", d.ground().show(a)));
    }
}

fn prop_5_1(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    let edges = args.num("edges", 6usize, (0, 7))?;
    let full = enumerated(Constraint::Greedoid, n).filter(|g| g.total_rank() == g.n() as i64);
    sink.run("full-greedoid", full, describe_table, nonpositive_dual);
    let trees = connected_rooted_graphs(edges)
        .into_iter()
        .filter(|rg| rg.edges().len() + 1 == rg.vertices().len())
        .map(|rg| branching_greedoid(&rg));
    sink.run("rooted-tree", trees, describe_table, nonpositive_dual);
    Ok(())
}

// ---------------------------------------------------------------------------
// antimatroids

enum Anti {
    Table(FullAntimatroid),
    Tree(Tree, FullAntimatroid),
}

impl Anti {
    fn anti(&self) -> &FullAntimatroid {
        match self {
            Anti::Table(a) | Anti::Tree(_, a) => a,
        }
    }

    fn describe(&self) -> String {
        match self {
            Anti::Table(a) => describe_table(a.table()),
            Anti::Tree(t, _) => describe_tree(t),
        }
    }
}

fn antimatroid_sources(
    args: &mut Args<'_>,
    sink: &mut Sink,
    check: impl Fn(&Anti, &mut Findings) + Sync,
) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    let edges = args.num("edges", 8usize, (0, 12))?;
    let tables = enumerated(Constraint::FullAntimatroid, n)
        .map(|t| Anti::Table(FullAntimatroid::new(t).expect("enumerated full antimatroid")));
    sink.run("full-antimatroid", tables, Anti::describe, &check);
    let mut trees = free_trees(edges);
    trees.push(bundled_tree());
    let trees = trees.into_iter().map(|t| {
        let a = FullAntimatroid::new(pruning_antimatroid(&t)).expect("pruning antimatroids are full");
        Anti::Tree(t, a)
    });
    sink.run("pruning", trees, Anti::describe, &check);
    Ok(())
}

fn thm_5_2(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    antimatroid_sources(args, sink, |inst, f| {
        let a = inst.anti();
        let g = a.table();
        let Some(d) = f.ok("dual", dual(g)) else { return };
        for s in g.ground().subsets() {
            let Some(c) = f.ok("closure", a.closure(s)) else { return };
            let expected = -(c.difference(s).len() as i64);
            if d.rank(s) != expected {
                f.fail(
                    "r*(A) = -|closure(A) - A|",
                    format!("A={}: r*(A) = {}, closure = {}", g.ground().show(s), d.rank(s), g.ground().show(c)),
                );
                return;
            }
        }
    })
}

fn cor_5_3(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    antimatroid_sources(args, sink, |inst, f| {
        let a = inst.anti();
        let g = a.table();
        let Some(d) = f.ok("dual", dual(g)) else { return };
        for c in g.ground().subsets() {
            let convex = a.is_convex(c);
            if convex != (d.rank(c) == 0) {
                f.fail(
                    "C convex iff r*(C) = 0",
                    format!("C={}: convex={convex}, r*(C) = {}", g.ground().show(c), d.rank(c)),
                );
                return;
            }
            if let Anti::Tree(t, _) = inst {
                if convex != t.is_subtree(c) {
                    f.fail(
                        "C convex iff the edges of C form a subtree",
                        format!("C={}: convex={convex}", g.ground().show(c)),
                    );
                    return;
                }
            }
        }
    })
}

// ---------------------------------------------------------------------------
// demi-matroids

fn lemma_5_4(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = args.num("n", 3usize, (0, rankdual_core::enumerate::MAX_ENUM_ELEMENTS))?;
    let seed = args.seed()?;
    let count = args.num("count", 1000usize, (0, 10_000_000))?;
    let max_n = args.num("max_n", 6usize, (0, 12))?;
    let check = |g: &RankTable, f: &mut Findings| {
        let r1 = check_matroid(g).holds(Axiom::R1);
        let ch = check_demimatroid_characterization(g);
        let mn = ch.holds(Axiom::MonotoneNullity);
        let unit = ch.holds(Axiom::CharUnitIncrease);
        f.expect(r1 == mn, "R1 iff monotone nullity", || format!("R1={r1:?}, MN={mn:?}"));
        f.expect(unit == mn, "unit rank increase iff monotone nullity", || {
            format!("(c)={unit:?}, MN={mn:?}")
        });
    };
    sink.run("enumerated", enumerated(Constraint::NormalizedSubcardinalMonotone, n), describe_table, check);
    sink.run("random-monotone", sample::random_monotone_tables(seed, count, max_n), describe_table, check);
    Ok(())
}

fn thm_5_5(args: &mut Args<'_>, sink: &mut Sink, notes: &mut Vec<String>) -> Result<(), SuiteError> {
    let rnd = random_args(args, 12)?;
    let n = enum_n(args, 3)?;
    let demi = AtomicU64::new(0);
    let check = |g: &RankTable, f: &mut Findings| {
        let Some(d) = f.ok("dual", dual(g)) else { return };
        let triple = check_demimatroid_triple(&DemiTriple::new(g.clone(), d).expect("same ground"));
        let ch = check_demimatroid_characterization(g);
        if triple.passed() {
            demi.fetch_add(1, Ordering::Relaxed);
        }
        f.expect(
            triple.passed() == ch.passed(),
            "(S, r, r*) demi-matroid iff (a), (b), (c)",
            || {
                format!(
                    "triple: {}; characterization: {}",
                    first_failure(&triple, g.ground()),
                    first_failure(&ch, g.ground())
                )
            },
        );
    };
    sink.run("enumerated", enumerated(Constraint::NormalizedSubcardinalMonotone, n), describe_table, check);
    sink.run(
        "random-monotone",
        sample::random_monotone_tables(rnd.seed, rnd.count, rnd.max_n),
        describe_table,
        check,
    );
    sink.run("random", rnd.tables(), describe_table, check);
    count_note(notes, "demi-matroids", &demi);
    Ok(())
}

fn r2_equivalence(args: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    let n = enum_n(args, 4)?;
    sink.run(
        "monotone",
        enumerated(Constraint::NormalizedSubcardinalMonotone, n),
        describe_table,
        |g, f| {
            let m = check_matroid(g);
            if m.holds(Axiom::R0) == Some(true) && m.holds(Axiom::R1) == Some(true) {
                let (r2, r2l) = (m.holds(Axiom::R2), m.holds(Axiom::R2Local));
                f.expect(r2 == r2l, "under R0 and R1, R2 iff R2'", || {
                    format!(
                        "R2 {}, R2' {}",
                        m.witness(Axiom::R2).map_or("pass".into(), |w| w.show(g.ground())),
                        m.witness(Axiom::R2Local).map_or("pass".into(), |w| w.show(g.ground()))
                    )
                });
            }
        },
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// goldens

type Golden = (&'static str, fn(&mut Findings));

fn run_goldens(sink: &mut Sink, source: &str, goldens: &'static [Golden]) {
    sink.run(source, goldens.iter(), |g| g.0.to_string(), |g, f| (g.1)(f));
}

/// Table with ranks listed by cardinality, then position.
fn by_size(labels: &[&str], ranks: &[i64]) -> RankTable {
    let ground = GroundSet::new(labels.iter().copied()).expect("distinct");
    let order = subsets_by_size(ground.len());
    RankTable::from_entries(ground, order.into_iter().zip(ranks.iter().copied()))
        .expect("one rank per subset")
}

fn poly_is(f: &mut Findings, what: &str, got: rankdual_core::Result<LaurentPoly2>, expected: &str) {
    if let Some(p) = f.ok(what, got) {
        let s = p.to_canonical_string();
        f.expect(s == expected, what, || format!("got {s}, expected {expected}"));
    }
}

fn three_edge_table(f: &mut Findings) -> RankTable {
    let t = branching_greedoid(&three_edge_tree());
    f.same_table("branching greedoid of the three-edge tree", &t, &three_edge_greedoid());
    t
}

static THREE_EDGE: &[Golden] = &[
    ("three-edge greedoid rank row", |f| {
        let t = three_edge_table(f);
        f.same_table("r by size", &t, &by_size(&["a", "b", "c"], &[0, 1, 0, 1, 2, 2, 1, 3]));
    }),
    ("three-edge greedoid dual row", |f| {
        let t = three_edge_table(f);
        if let Some(d) = f.ok("dual", dual(&t)) {
            f.same_table("r* by size", &d, &by_size(&["a", "b", "c"], &[0, -1, 0, 0, 0, -1, 0, 0]));
            let v = d.validate();
            f.expect(v.nonnegative.witness() == Some(Subset(0b001)), "r* negative first at {a}", || {
                format!("{:?}", v.nonnegative.witness())
            });
        }
        f.expect(!root_adjacency_test(&three_edge_tree()), "v2 is not adjacent to the root", String::new);
    }),
    ("three-edge greedoid minors", |f| {
        let t = three_edge_table(f);
        if let Some(d) = f.ok("delete a", delete(&t, 0)) {
            f.same_table("G-a", &d, &by_size(&["b", "c"], &[0, 0, 1, 1]));
        }
        if let Some(c) = f.ok("contract a", contract(&t, 0)) {
            f.same_table("G/a", &c, &by_size(&["b", "c"], &[0, 1, 1, 2]));
        }
        if let Some(c) = f.ok("contract b", contract(&t, 1)) {
            f.same_table("G/b", &c, &by_size(&["a", "c"], &[0, 2, 1, 3]));
        }
        let spec = MinorSpec::new(Subset(0b001), Subset(0b010)).expect("disjoint");
        if let Some(m) = f.ok("minor", minor(&t, &spec)) {
            f.same_table("(G/a)-b", &m, &by_size(&["c"], &[0, 1]));
        }
    }),
    ("tutte polynomials of the minors", |f| {
        let t = three_edge_table(f);
        let cases: [(&str, rankdual_core::Result<RankTable>, &str); 5] = [
            ("f(G)", Ok(t.clone()), "t^3*z + t^3 + t^2*z + 2*t^2 + 2*t + 1"),
            ("f(G-a)", delete(&t, 0), "t*z + t + z + 1"),
            ("f(G/a)", contract(&t, 0), "t^2 + 2*t + 1"),
            ("f(G-b)", delete(&t, 1), "t^2 + 2*t + 1"),
            ("f(G/b)", contract(&t, 1), "t^3 + t^2 + t*z^-1 + z^-1"),
        ];
        for (name, g, expected) in cases {
            let Some(g) = f.ok(name, g) else { continue };
            poly_is(f, &format!("{name} by subsets"), tutte_subset(&g), expected);
            poly_is(f, &format!("{name} by recursion"), tutte_recursive(&g, &Pivot::Lowest), expected);
        }
    }),
    ("pivot identities", |f| {
        let t = three_edge_table(f);
        let fg = tutte_subset(&t).expect("small");
        for (p, t_exp, z_exp) in [(0usize, 2i64, 0i64), (1, 1, 1)] {
            let label = t.ground().label(p);
            let rs = t.total_rank();
            let del = delete(&t, p).expect("in range");
            let con = contract(&t, p).expect("normalized");
            f.expect(rs - del.total_rank() == t_exp, &format!("r(G) - r(G-{label})"), || {
                format!("{}", rs - del.total_rank())
            });
            f.expect(1 - t.rank(Subset::singleton(p)) == z_exp, &format!("1 - r({label})"), || {
                format!("{}", 1 - t.rank(Subset::singleton(p)))
            });
            let rhs = &tutte_subset(&del).expect("small").shift(t_exp, 0)
                + &tutte_subset(&con).expect("small").shift(0, z_exp);
            f.same_poly(&format!("f(G) = t^{t_exp} f(G-{label}) + z^{z_exp} f(G/{label})"), &rhs, &fg);
        }
    }),
    ("dual polynomial", |f| {
        let t = three_edge_table(f);
        if let Some(d) = f.ok("dual", dual(&t)) {
            poly_is(f, "f(G*)", tutte_subset(&d), "t*z^3 + t*z^2 + z^3 + 2*z^2 + 2*z + 1");
        }
    }),
    ("matroid check witness", |f| {
        let t = three_edge_table(f);
        let rep = check_matroid(&t);
        f.expect(!rep.passed(), "three-edge greedoid is not a matroid", String::new);
        let w = rep.witness(Axiom::R1).map(|w| w.show(t.ground()));
        f.expect(w.as_deref() == Some("A={b}, p=a"), "R1 witness A={b}, p=a", || format!("{w:?}"));
        f.expect(check_greedoid(&t).passed(), "three-edge greedoid is a greedoid", String::new);
    }),
    ("non-normalized two-element table", |f| {
        let g = unnormalized_pair();
        poly_is(f, "f(G)", tutte_subset(&g), "t^3*z^2 + 1 + t^-1*z^-3 + t^-5*z^-6");
        f.expect(
            matches!(tutte_recursive(&g, &Pivot::Lowest), Err(Error::NotNormalized { empty_rank: 3 })),
            "recursion rejects r(empty) = 3",
            String::new,
        );
    }),
];

fn bundled() -> (Tree, RankTable) {
    let t = bundled_tree();
    let g = pruning_antimatroid(&t);
    (t, g)
}

fn set(g: &RankTable, labels: &str) -> Subset {
    g.ground().subset(labels.chars().map(|c| c.to_string())).expect("bundled labels")
}

static BUNDLED: &[Golden] = &[
    ("pruning antimatroid is a full antimatroid", |f| {
        let (_, g) = bundled();
        let rep = check_antimatroid(&g);
        f.expect(rep.passed(), "antimatroid axioms", || first_failure(&rep, g.ground()));
        f.expect(g.total_rank() == 10, "r(S) = 10", || g.total_rank().to_string());
    }),
    ("feasible set adef", |f| {
        let (t, g) = bundled();
        let a = set(&g, "adef");
        f.expect(t.is_subtree(set(&g, "bcghij")), "bcghij is a subtree", String::new);
        f.expect(g.rank(a) == 4, "r({a,d,e,f}) = 4", || g.rank(a).to_string());
        if let Some(d) = f.ok("dual", dual(&g)) {
            let c = g.ground().complement(a);
            f.expect(d.rank(c) == 0, "r*(S - {a,d,e,f}) = 0", || d.rank(c).to_string());
        }
    }),
    ("closure of beh", |f| {
        let (_, g) = bundled();
        let a = set(&g, "beh");
        f.expect(g.rank(a) == 2, "r({b,e,h}) = 2", || g.rank(a).to_string());
        f.expect(g.rank(set(&g, "eh")) == 2, "{e,h} feasible", String::new);
        if let Some(c) = f.ok("closure", FullAntimatroid::new(g.clone()).and_then(|x| x.closure(a))) {
            f.expect(c == set(&g, "bcdeh"), "closure({b,e,h}) = {b,c,d,e,h}", || g.ground().show(c));
        }
    }),
    ("closure of adf", |f| {
        let (_, g) = bundled();
        let a = set(&g, "adf");
        if let Some(c) = f.ok("closure", FullAntimatroid::new(g.clone()).and_then(|x| x.closure(a))) {
            f.expect(c == set(&g, "abcdfg"), "closure({a,d,f}) = {a,b,c,d,f,g}", || g.ground().show(c));
            f.expect(c.difference(a).len() == 3, "|closure - A| = 3", String::new);
        }
        let rest = g.ground().complement(a);
        f.expect(g.rank(rest) == 4, "r(S - {a,d,f}) = 4", || g.rank(rest).to_string());
        f.expect(g.rank(set(&g, "ehij")) == 4, "{e,h,i,j} feasible", String::new);
        if let Some(d) = f.ok("dual", dual(&g)) {
            f.expect(d.rank(a) == -3, "r*({a,d,f}) = 3 + 4 - 10 = -3", || d.rank(a).to_string());
        }
    }),
];

fn fig1_goldens(_: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    run_goldens(sink, "golden", THREE_EDGE);
    Ok(())
}

fn fig2_goldens(_: &mut Args<'_>, sink: &mut Sink, _: &mut Vec<String>) -> Result<(), SuiteError> {
    run_goldens(sink, "golden", BUNDLED);
    Ok(())
}
