//! Oracle-agreement suites. Each suite scans a whole group and stops at the first
//! disagreement, which it reports as a witness in canonical element notation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chains::{alpha, gamma_graph, generic_moves, is_connected, maximal_chains, count_maximal_chains};
use crate::error::{Error, Result};
use crate::genfun::{
    bivariate_closed_form, bivariate_genfun, finv_genfun, prod_q_int, wdes_closed_form, wdes_genfun,
};
use crate::group::{ColoredPermutation, GroupContext};
use crate::lattice::{classify_homotopy, join, join_set, meet, mobius, HomotopyClass};
use crate::oracle::BruteForceOrder;
use crate::order::{build_hasse, build_interval, down_covers, leq, rank_genfun, up_covers, wdes};
use crate::presentation::{
    a_generators, closure_order, standard_generators, verify_a_as_reflections,
    verify_alternating_generators, verify_relations_a, verify_relations_b,
    verify_remark_derivation, DEFAULT_CLOSURE_CAP,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Suite {
    Order,
    Lattice,
    Mobius,
    Tits,
    Genfun,
    Present,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Order,
        Suite::Lattice,
        Suite::Mobius,
        Suite::Tits,
        Suite::Genfun,
        Suite::Present,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Order => "order",
            Suite::Lattice => "lattice",
            Suite::Mobius => "mobius",
            Suite::Tits => "tits",
            Suite::Genfun => "genfun",
            Suite::Present => "present",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                input: s.into(),
                reason: "unknown suite".into(),
            })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Intervals with more maximal chains than this are skipped by the tits suite.
    pub interval_chain_cap: u128,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            interval_chain_cap: 20_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub context: GroupContext,
    /// Number of individual comparisons made.
    pub checked: u64,
    /// First disagreement found.
    pub failure: Option<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {} checked={}", self.suite, self.context, self.checked)?;
        for note in &self.notes {
            write!(f, " [{note}]")?;
        }
        if let Some(w) = &self.failure {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

struct Run {
    checked: u64,
    failure: Option<String>,
    notes: Vec<String>,
}

impl Run {
    fn new() -> Self {
        Run {
            checked: 0,
            failure: None,
            notes: Vec::new(),
        }
    }

    /// Records one comparison; keeps only the first failure.
    fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
        ok
    }

    /// Folds in a parallel scan that returned its first failure, if any.
    fn scan(&mut self, count: u64, failure: Option<String>) {
        self.checked += count;
        if self.failure.is_none() {
            self.failure = failure;
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }
}

fn s(g: &ColoredPermutation) -> String {
    g.format(true)
}

fn opt(g: &Option<ColoredPermutation>) -> String {
    g.as_ref().map_or("none".into(), s)
}

pub fn run_suite(suite: Suite, ctx: GroupContext, opts: &CheckOptions) -> SuiteReport {
    let mut run = Run::new();
    match suite {
        Suite::Order => check_order(ctx, &mut run),
        Suite::Lattice => check_lattice(ctx, &mut run),
        Suite::Mobius => check_mobius(ctx, &mut run),
        Suite::Tits => check_tits(ctx, opts, &mut run),
        Suite::Genfun => check_genfun(ctx, &mut run),
        Suite::Present => check_present(ctx, &mut run),
    }
    SuiteReport {
        suite,
        context: ctx,
        checked: run.checked,
        failure: run.failure,
        notes: run.notes,
    }
}

pub fn run_all(ctx: GroupContext, opts: &CheckOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, ctx, opts)).collect()
}

/// Scans all ordered pairs in enumeration order, returning the first witness.
fn scan_pairs<F>(elements: &[ColoredPermutation], f: F) -> (u64, Option<String>)
where
    F: Fn(&ColoredPermutation, &ColoredPermutation) -> Option<String> + Sync,
{
    let failure = elements.par_iter().find_map_first(|g| {
        elements.iter().find_map(|h| f(g, h))
    });
    ((elements.len() * elements.len()) as u64, failure)
}

fn check_order(ctx: GroupContext, run: &mut Run) {
    let hasse = build_hasse(ctx);
    let reach = BruteForceOrder::from_hasse(&hasse);
    let definition = BruteForceOrder::new(ctx);
    let elements = hasse.elements();

    let (count, failure) = scan_pairs(elements, |g, h| {
        let criterion = leq(g, h).expect("same context");
        let by_covers = reach.leq(g, h);
        let by_steps = definition.leq(g, h);
        if criterion != by_covers || criterion != by_steps {
            return Some(format!(
                "leq({}, {}) = {criterion}, cover reachability = {by_covers}, generator steps = {by_steps}",
                s(g),
                s(h)
            ));
        }
        let dual = leq(&h.dual(), &g.dual()).expect("same context");
        (criterion != dual).then(|| {
            format!("leq({}, {}) = {criterion} but dual comparison = {dual}", s(g), s(h))
        })
    });
    run.scan(count, failure);

    let hasse_covers: BTreeSet<(ColoredPermutation, ColoredPermutation)> = hasse
        .edges()
        .iter()
        .map(|e| (hasse.element(e.from).clone(), hasse.element(e.to).clone()))
        .collect();
    let oracle_covers: BTreeSet<_> = definition.cover_pairs().into_iter().collect();
    run.expect(hasse_covers == oracle_covers, || {
        let diff: Vec<_> = hasse_covers.symmetric_difference(&oracle_covers).take(1).collect();
        format!("cover sets differ at {} -> {}", s(&diff[0].0), s(&diff[0].1))
    });

    let top = ctx.max_finv();
    for (id, g) in elements.iter().enumerate() {
        if run.done() {
            break;
        }
        let mut below: Vec<String> = down_covers(g).iter().map(|(_, x)| s(x)).collect();
        let mut from_edges: Vec<String> =
            hasse.down_edges(id).map(|e| s(hasse.element(e.from))).collect();
        below.sort();
        from_edges.sort();
        run.expect(below == from_edges, || {
            format!("down_covers({}) = {below:?} but covered elements are {from_edges:?}", s(g))
        });
        run.expect(g.finv() + g.dual().finv() == top, || {
            format!("finv({}) + finv(dual) != {top}", s(g))
        });
    }
    let dual_images: HashSet<ColoredPermutation> = elements.iter().map(|g| g.dual()).collect();
    run.expect(dual_images.len() == elements.len(), || "dual is not injective".into());

    let ranks = rank_genfun(&hasse);
    run.expect(ranks == prod_q_int(ctx.r(), ctx.n()), || {
        format!("rank sizes {ranks} differ from the q-integer product")
    });
    run.expect(ranks.is_symmetric() && ranks.is_unimodal(), || {
        format!("rank sizes {ranks} are not symmetric and unimodal")
    });
    run.expect(hasse.bottom() == &ctx.identity() && hasse.top() == &ctx.mu0(), || {
        "diagram bounds are not identity and mu0".into()
    });
}

fn check_lattice(ctx: GroupContext, run: &mut Run) {
    let hasse = build_hasse(ctx);
    let oracle = BruteForceOrder::from_hasse(&hasse);
    let (count, failure) = scan_pairs(hasse.elements(), |g, h| {
        let m = meet(g, h).expect("same context");
        let j = join(g, h).expect("same context");
        let (om, oj) = (oracle.meet(g, h), oracle.join(g, h));
        if om.as_ref() != Some(&m) {
            return Some(format!("meet({}, {}) = {} but oracle gives {}", s(g), s(h), s(&m), opt(&om)));
        }
        if oj.as_ref() != Some(&j) {
            return Some(format!("join({}, {}) = {} but oracle gives {}", s(g), s(h), s(&j), opt(&oj)));
        }
        let dual = meet(&g.dual(), &h.dual()).expect("same context").dual();
        if dual != j {
            return Some(format!("join({}, {}) = {} but dual(meet(dual, dual)) = {}", s(g), s(h), s(&j), s(&dual)));
        }
        if meet(g, &j).expect("same context") != *g || join(g, &m).expect("same context") != *g {
            return Some(format!("absorption fails for {}, {}", s(g), s(h)));
        }
        None
    });
    run.scan(count, failure);
    run.expect(join_set(ctx, &[]).unwrap() == ctx.identity(), || "empty join is not the identity".into());
}

/// Atoms of `[g, h]`: covers of `g` lying below `h`.
fn interval_atoms(g: &ColoredPermutation, h: &ColoredPermutation) -> Vec<ColoredPermutation> {
    up_covers(g)
        .into_iter()
        .map(|(_, a)| a)
        .filter(|a| leq(a, h).expect("same context"))
        .collect()
}

/// First pair of distinct atom subsets of `[g, h]` with the same join.
pub fn atom_join_collision(g: &ColoredPermutation, h: &ColoredPermutation) -> Option<String> {
    let atoms = interval_atoms(g, h);
    let mut seen: std::collections::HashMap<ColoredPermutation, u32> = Default::default();
    for mask in 0u32..(1 << atoms.len()) {
        let subset: Vec<ColoredPermutation> = (0..atoms.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| atoms[i].clone())
            .collect();
        let joined = if subset.is_empty() {
            g.clone()
        } else {
            join_set(g.context(), &subset).expect("same context")
        };
        if let Some(prev) = seen.insert(joined.clone(), mask) {
            let names = |m: u32| -> Vec<String> {
                (0..atoms.len()).filter(|&i| m >> i & 1 == 1).map(|i| s(&atoms[i])).collect()
            };
            return Some(format!(
                "in [{}, {}] atom sets {:?} and {:?} both join to {}",
                s(g),
                s(h),
                names(prev),
                names(mask),
                s(&joined)
            ));
        }
    }
    None
}

fn check_mobius(ctx: GroupContext, run: &mut Run) {
    let hasse = build_hasse(ctx);
    let oracle = BruteForceOrder::from_hasse(&hasse);
    let elements = hasse.elements();
    let results: Vec<(u64, Option<String>)> = elements
        .par_iter()
        .map(|g| {
            let mu = oracle.mobius_from(g);
            let mut count = 0;
            for h in elements {
                let Some(&expected) = mu.get(h) else { continue };
                count += 1;
                let closed = mobius(g, h).expect("comparable");
                if closed != expected {
                    return (count, Some(format!("mobius({}, {}) = {closed} but recursion gives {expected}", s(g), s(h))));
                }
                let class = classify_homotopy(g, h).expect("comparable");
                let consistent = match class {
                    HomotopyClass::NotApplicable => h.finv() - g.finv() < 2,
                    HomotopyClass::Contractible => expected == 0,
                    HomotopyClass::Sphere { atoms } => {
                        atoms >= 1 && expected == if atoms % 2 == 0 { 1 } else { -1 }
                    }
                };
                if !consistent {
                    return (count, Some(format!("[{}, {}] classified {class} but mobius = {expected}", s(g), s(h))));
                }
                if let Some(w) = atom_join_collision(g, h) {
                    return (count, Some(w));
                }
            }
            (count, None)
        })
        .collect();
    for (count, failure) in results {
        run.scan(count, failure);
    }
}

fn check_tits(ctx: GroupContext, opts: &CheckOptions, run: &mut Run) {
    let elements = ctx.enumerate();
    let r2 = ctx.r() == 2;
    if !r2 {
        run.notes.push("generic moves, empirical".into());
    }
    let results: Vec<(u64, u64, Option<String>)> = elements
        .par_iter()
        .map(|g| {
            let (mut count, mut skipped) = (0, 0);
            for h in &elements {
                if !leq(g, h).expect("same context") {
                    continue;
                }
                let interval = build_interval(g, h).expect("comparable");
                if count_maximal_chains(&interval) > opts.interval_chain_cap {
                    skipped += 1;
                    continue;
                }
                count += 1;
                let gamma = gamma_graph(&interval, opts.interval_chain_cap).expect("under cap");
                if !is_connected(&gamma) {
                    return (count, skipped, Some(format!("chain graph of [{}, {}] is disconnected", s(g), s(h))));
                }
                if r2 {
                    let tits: BTreeSet<(String, String)> = gamma
                        .edges()
                        .iter()
                        .map(|&(u, v, _)| ordered(&gamma.vertices()[u].to_string(), &gamma.vertices()[v].to_string()))
                        .collect();
                    let generic: BTreeSet<(String, String)> = gamma
                        .vertices()
                        .iter()
                        .flat_map(|w| {
                            generic_moves(w)
                                .into_iter()
                                .map(move |m| ordered(&w.to_string(), &m.word.to_string()))
                        })
                        .collect();
                    if tits != generic {
                        return (count, skipped, Some(format!("[{}, {}]: generic moves differ from T1-T5", s(g), s(h))));
                    }
                }
            }
            if r2 {
                count += 1;
                if let Some(w) = two_atom_witness(g) {
                    return (count, skipped, Some(w));
                }
            }
            (count, skipped, None)
        })
        .collect();
    let mut skipped_total = 0;
    for (count, skipped, failure) in results {
        skipped_total += skipped;
        run.scan(count, failure);
    }
    if skipped_total > 0 {
        run.notes.push(format!(
            "{skipped_total} intervals above {} chains skipped",
            opts.interval_chain_cap
        ));
    }
}

fn ordered(x: &str, y: &str) -> (String, String) {
    if x < y {
        (x.into(), y.into())
    } else {
        (y.into(), x.into())
    }
}

/// Checks that every two-atom interval `[g, g·s ∨ g·s']` has exactly the chains `α(s, s')`, `α(s', s)`.
pub fn two_atom_witness(g: &ColoredPermutation) -> Option<String> {
    let covers = up_covers(g);
    for (s1, g1) in &covers {
        for (s2, g2) in &covers {
            if s1 == s2 {
                continue;
            }
            let top = join(g1, g2).expect("same context");
            let interval = build_interval(g, &top).expect("join lies above g");
            let chains: Vec<String> = maximal_chains(&interval, 16)
                .map(|v| v.iter().map(|w| w.to_string()).collect())
                .unwrap_or_default();
            let word = |x, y| match alpha(x, y, g) {
                Ok(Some(w)) => w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("·"),
                _ => "?".into(),
            };
            let mut expected = vec![word(*s1, *s2), word(*s2, *s1)];
            expected.sort();
            if chains != expected {
                return Some(format!(
                    "[{}, {}] from {s1}, {s2} has chains {chains:?}, expected {expected:?}",
                    s(g),
                    s(&top)
                ));
            }
        }
    }
    None
}

/// `#(D(|π|) ∪ Neg(π))`, the down-cover count of `π ∈ B_n`.
pub fn wdes_by_sets(g: &ColoredPermutation) -> usize {
    let mut set: BTreeSet<usize> = g.abs().descents().into_iter().collect();
    set.extend(g.negative_positions().iter());
    set.len()
}

fn check_genfun(ctx: GroupContext, run: &mut Run) {
    let (r, n) = (ctx.r(), ctx.n());
    let finv = finv_genfun(ctx);
    let expected = prod_q_int(r, n);
    run.expect(finv == expected, || format!("finv distribution {finv} != {expected}"));
    run.expect(finv.is_symmetric(), || format!("finv distribution {finv} is not symmetric"));

    let wdes_lhs = wdes_genfun(ctx);
    let wdes_rhs = wdes_closed_form(r, n);
    run.expect(wdes_lhs == wdes_rhs, || format!("wdes distribution {wdes_lhs} != closed form {wdes_rhs}"));
    run.expect(wdes_lhs.eval(1) == ctx.order() as i64, || {
        format!("wdes distribution at t = 1 is {}, group order {}", wdes_lhs.eval(1), ctx.order())
    });

    let bi_lhs = bivariate_genfun(ctx);
    let bi_rhs = bivariate_closed_form(r, n);
    run.expect(bi_lhs == bi_rhs, || format!("bivariate distribution {bi_lhs} != closed form {bi_rhs}"));
    run.expect(bi_lhs.at_q_one() == wdes_lhs, || "q = 1 marginal differs from wdes distribution".into());

    if r == 2 {
        for g in ctx.enumerate() {
            let (covered, sets) = (wdes(&g), wdes_by_sets(&g));
            if !run.expect(covered == sets, || {
                format!("{} covers {covered} elements but #(D ∪ Neg) = {sets}", s(&g))
            }) {
                break;
            }
        }
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn check_present(ctx: GroupContext, run: &mut Run) {
    let (r, n) = (ctx.r(), ctx.n());
    let report = verify_relations_b(ctx);
    run.scan(
        report.instances() as u64,
        report.failures.first().map(|f| {
            format!("{} at {:?}: {} != {}", f.relation, f.indices, f.lhs, f.rhs)
        }),
    );
    let order = closure_order(ctx, &standard_generators(ctx), DEFAULT_CLOSURE_CAP);
    let expected = (r as u64).pow(n as u32) * factorial(n);
    run.expect(matches!(order, Ok(k) if k == expected), || {
        format!("generated subgroup has order {order:?}, expected {expected}")
    });
    if r != 2 || n < 2 {
        return;
    }
    match verify_relations_a(n) {
        Ok(report) => run.scan(
            report.instances() as u64,
            report.failures.first().map(|f| {
                format!("{} at {:?}: {} != {}", f.relation, f.indices, f.lhs, f.rhs)
            }),
        ),
        Err(e) => run.scan(1, Some(e.to_string())),
    }
    run.expect(verify_a_as_reflections(n).unwrap_or(false), || {
        "some a_i is not (i, i+1) followed by (i, -i)".into()
    });
    run.expect(verify_alternating_generators(n).unwrap_or(false), || {
        "a_i a_{i-1}^2 ... a_1^2 != (i, i+1)(1, -1)".into()
    });
    let alt = closure_order(ctx, &a_generators(ctx), DEFAULT_CLOSURE_CAP);
    let alt_expected = (1u64 << (n - 1)) * factorial(n);
    run.expect(matches!(alt, Ok(k) if k == alt_expected), || {
        format!("a-generated subgroup has order {alt:?}, expected {alt_expected}")
    });
    if n >= 3 {
        run.expect(verify_remark_derivation(n).unwrap_or(false), || {
            "the derivation of (a_i a_{i+1})^3 = 1 does not replay to the identity".into()
        });
    }
}
