//! Maximal chains as generator words, pseudo-Coxeter moves and the chain graph Γ.
//!
//! A maximal chain of `[g, h]` is the word `s_1 ⋯ s_d` with `g·s_1⋯s_k` covering
//! `g·s_1⋯s_{k-1}` for every `k`. In `B_n` any two such words are connected by the
//! moves
//!
//! ```text
//! T1  b_i b_j            ↔  b_j b_i
//! T2  a_i b_j            ↔  b_j a_i                 (j ∉ {i, i+1})
//! T3  a_i b_{i+1}        ↔  b_i a_i
//! T4  a_i a_j            ↔  a_j a_i                 (|i-j| > 1)
//! T5  a_i a_{i+1} b_{i+1} a_i  ↔  a_{i+1} b_{i+1} a_i a_{i+1}
//! ```
//!
//! For other `r` no move list is known. There [`generic_moves`] reroutes a chain
//! through the other side of a two-atom sub-interval `[x, x·s ∨ x·s']`, and the
//! resulting graphs are flagged as empirical.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GenKind, GeneratorLabel};
use crate::lattice::join;
use crate::order::{build_interval, up_covers, Interval};

pub const DEFAULT_CHAIN_CAP: u128 = 1_000_000;

/// Largest vertex count for which [`diameter`] runs a BFS from every vertex.
pub const EXACT_DIAMETER_LIMIT: usize = 100_000;

/// A word `s_1 ⋯ s_d` read from `base`, valid when every prefix raises finv by one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorWord {
    base: ColoredPermutation,
    letters: Vec<GeneratorLabel>,
}

impl GeneratorWord {
    /// Checks that each letter fits the context and each prefix is a cover.
    pub fn new(base: ColoredPermutation, letters: Vec<GeneratorLabel>) -> Result<Self> {
        let n = base.context().n();
        let mut cur = base.clone();
        for (k, &s) in letters.iter().enumerate() {
            if !s.fits(n) {
                return Err(Error::GeneratorOutOfRange {
                    label: s.to_string(),
                    n,
                });
            }
            let next = cur.right_multiply(s);
            if next.finv() != cur.finv() + 1 {
                return Err(Error::Precondition(format!(
                    "letter {} of {} is not a cover step",
                    k + 1,
                    fmt_letters(&letters)
                )));
            }
            cur = next;
        }
        Ok(GeneratorWord { base, letters })
    }

    fn new_unchecked(base: ColoredPermutation, letters: Vec<GeneratorLabel>) -> Self {
        GeneratorWord { base, letters }
    }

    pub fn base(&self) -> &ColoredPermutation {
        &self.base
    }

    pub fn letters(&self) -> &[GeneratorLabel] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `base·s_1⋯s_k` for `k = 0..=len`.
    pub fn path(&self) -> Vec<ColoredPermutation> {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(self.base.clone());
        for &s in &self.letters {
            let next = out.last().unwrap().right_multiply(s);
            out.push(next);
        }
        out
    }

    pub fn end(&self) -> ColoredPermutation {
        self.path().pop().unwrap()
    }

    pub fn is_valid(&self) -> bool {
        GeneratorWord::new(self.base.clone(), self.letters.clone()).is_ok()
    }
}

fn fmt_letters(letters: &[GeneratorLabel]) -> String {
    if letters.is_empty() {
        return "ε".into();
    }
    letters
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("·")
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_letters(&self.letters))
    }
}

/// Number of maximal chains of the interval, counted without listing them.
pub fn count_maximal_chains(interval: &Interval) -> u128 {
    let mut paths = vec![0u128; interval.len()];
    paths[0] = 1;
    for id in 0..interval.len() {
        let here = paths[id];
        for e in interval.up_edges(id) {
            paths[e.to] = paths[e.to].saturating_add(here);
        }
    }
    paths[interval.len() - 1]
}

/// Every maximal chain of the interval as a word, sorted by letters.
pub fn maximal_chains(interval: &Interval, cap: u128) -> Result<Vec<GeneratorWord>> {
    let count = count_maximal_chains(interval);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "maximal chains",
            count,
            cap,
        });
    }
    let top = interval.len() - 1;
    let mut out = Vec::with_capacity(count as usize);
    let mut stack: Vec<(usize, Vec<GeneratorLabel>)> = vec![(0, Vec::new())];
    while let Some((id, word)) = stack.pop() {
        if id == top {
            out.push(GeneratorWord::new_unchecked(interval.bottom().clone(), word));
            continue;
        }
        for e in interval.up_edges(id) {
            let mut longer = word.clone();
            longer.push(e.label);
            stack.push((e.to, longer));
        }
    }
    out.sort_by(|x, y| x.letters.cmp(&y.letters));
    Ok(out)
}

/// The chain of `[g, g·s ∨ g·s']` that starts with `s`, for `B_n`.
///
/// Both `g·s` and `g·s'` must cover `g`. The pairs `(a_i, b_{i+1})` and
/// `(b_{i+1}, a_i)` never cover together and give `None`.
pub fn alpha(
    s: GeneratorLabel,
    t: GeneratorLabel,
    g: &ColoredPermutation,
) -> Result<Option<Vec<GeneratorLabel>>> {
    use GenKind::{A, B};
    let (i, j) = (s.index, t.index);
    let excluded = match (s.kind, t.kind) {
        (A, B) => j == i + 1,
        (B, A) => i == j + 1,
        _ => false,
    };
    if excluded {
        return Ok(None);
    }
    if g.context().r() != 2 {
        return Err(Error::Precondition("alpha is defined for r = 2".into()));
    }
    if s == t {
        return Err(Error::Precondition(format!("alpha needs distinct letters, got {s} twice")));
    }
    let covers = up_covers(g);
    for x in [s, t] {
        if !covers.iter().any(|(l, _)| *l == x) {
            return Err(Error::Precondition(format!("{g}·{x} does not cover {g}")));
        }
    }
    let b = GeneratorLabel::b;
    Ok(Some(match (s.kind, t.kind) {
        (A, B) if j == i => vec![s, b(i + 1)],
        (A, A) if j == i + 1 => vec![s, t, b(i + 1), s],
        (A, A) if i == j + 1 => vec![s, b(i), t, s],
        _ => vec![s, t],
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum MoveKind {
    T1,
    T2,
    T3,
    T4,
    T5,
    /// Reroute through the other side of a two-atom sub-interval.
    Reroute,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MoveKind::T1 => "T1",
            MoveKind::T2 => "T2",
            MoveKind::T3 => "T3",
            MoveKind::T4 => "T4",
            MoveKind::T5 => "T5",
            MoveKind::Reroute => "reroute",
        };
        f.write_str(s)
    }
}

/// One rewrite of a chain word: the factor starting at `position` (1-based) is replaced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Move {
    pub position: usize,
    pub kind: MoveKind,
    pub word: GeneratorWord,
}

fn two_letter_move(x: GeneratorLabel, y: GeneratorLabel) -> Option<(MoveKind, [GeneratorLabel; 2])> {
    use GenKind::{A, B};
    let (i, j) = (x.index, y.index);
    let kind = match (x.kind, y.kind) {
        (B, B) if i != j => MoveKind::T1,
        (A, B) if j == i + 1 => return Some((MoveKind::T3, [GeneratorLabel::b(i), x])),
        (B, A) if i == j => return Some((MoveKind::T3, [y, GeneratorLabel::b(j + 1)])),
        (A, B) if j != i => MoveKind::T2,
        (B, A) if i != j + 1 => MoveKind::T2,
        (A, A) if i.abs_diff(j) > 1 => MoveKind::T4,
        _ => return None,
    };
    Some((kind, [y, x]))
}

fn t5_move(w: &[GeneratorLabel]) -> Option<[GeneratorLabel; 4]> {
    let (a, b) = (GeneratorLabel::a, GeneratorLabel::b);
    let i = w[0].index;
    if w == [a(i), a(i + 1), b(i + 1), a(i)] {
        return Some([a(i + 1), b(i + 1), a(i), a(i + 1)]);
    }
    if i >= 2 && w == [a(i), b(i), a(i - 1), a(i)] {
        return Some([a(i - 1), a(i), b(i), a(i - 1)]);
    }
    None
}

/// All words one T1–T5 move away from `word`. Needs `r = 2`; other `r` use [`generic_moves`].
///
/// Panics if a move produces an invalid chain, which would contradict the move list.
pub fn tits_moves(word: &GeneratorWord) -> Result<Vec<Move>> {
    if word.base.context().r() != 2 {
        return Err(Error::Precondition(
            "T1-T5 are defined for r = 2; use generic moves".into(),
        ));
    }
    let letters = &word.letters;
    let mut out = Vec::new();
    let mut push = |start: usize, kind: MoveKind, replacement: &[GeneratorLabel]| {
        let mut next = letters.clone();
        next[start..start + replacement.len()].copy_from_slice(replacement);
        let moved = GeneratorWord::new(word.base.clone(), next)
            .unwrap_or_else(|e| panic!("{kind} at {} of {word}: {e}", start + 1));
        out.push(Move {
            position: start + 1,
            kind,
            word: moved,
        });
    };
    for p in 0..letters.len().saturating_sub(1) {
        if let Some((kind, pair)) = two_letter_move(letters[p], letters[p + 1]) {
            push(p, kind, &pair);
        }
    }
    for p in 0..letters.len().saturating_sub(3) {
        if let Some(quad) = t5_move(&letters[p..p + 4]) {
            push(p, MoveKind::T5, &quad);
        }
    }
    Ok(out)
}

type ChainCache = HashMap<(ColoredPermutation, ColoredPermutation), Vec<Vec<GeneratorLabel>>>;

fn sub_chains<'c>(
    cache: &'c mut ChainCache,
    x: &ColoredPermutation,
    j: &ColoredPermutation,
) -> &'c [Vec<GeneratorLabel>] {
    cache.entry((x.clone(), j.clone())).or_insert_with(|| {
        let interval = build_interval(x, j).expect("join lies above x");
        maximal_chains(&interval, u128::MAX)
            .expect("no cap")
            .into_iter()
            .map(|w| w.letters)
            .collect()
    })
}

fn generic_moves_cached(word: &GeneratorWord, cache: &mut ChainCache) -> Vec<Move> {
    let path = word.path();
    let mut out = Vec::new();
    for (p, &s) in word.letters.iter().enumerate() {
        let x = &path[p];
        let xs = &path[p + 1];
        for (t, xt) in up_covers(x) {
            if t == s {
                continue;
            }
            let j = join(xs, &xt).expect("same context");
            let d = j.finv() - x.finv();
            if p + d > word.len() || path[p + d] != j {
                continue;
            }
            for chain in sub_chains(cache, x, &j) {
                if chain[0] != t {
                    continue;
                }
                let mut next = word.letters.clone();
                next[p..p + d].copy_from_slice(chain);
                out.push(Move {
                    position: p + 1,
                    kind: MoveKind::Reroute,
                    word: GeneratorWord::new_unchecked(word.base.clone(), next),
                });
            }
        }
    }
    out
}

/// Reroutes through two-atom sub-intervals, for any `r`.
///
/// At a prefix `x` followed by `s`, take another atom `x·s'` and `j = x·s ∨ x·s'`.
/// If the word passes through `j`, its segment from `x` to `j` is replaced by each
/// maximal chain of `[x, j]` that starts with `s'`.
pub fn generic_moves(word: &GeneratorWord) -> Vec<Move> {
    generic_moves_cached(word, &mut HashMap::new())
}

/// The graph Γ on the maximal chains of an interval, joined by single moves.
#[derive(Clone, Debug)]
pub struct ChainGraph {
    bottom: ColoredPermutation,
    top: ColoredPermutation,
    vertices: Vec<GeneratorWord>,
    edges: Vec<(usize, usize, MoveKind)>,
    adjacency: Vec<Vec<usize>>,
    empirical: bool,
}

impl ChainGraph {
    pub fn bottom(&self) -> &ColoredPermutation {
        &self.bottom
    }

    pub fn top(&self) -> &ColoredPermutation {
        &self.top
    }

    pub fn vertices(&self) -> &[GeneratorWord] {
        &self.vertices
    }

    /// Undirected edges `(u, v, kind)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize, MoveKind)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// True when the moves are the generic surrogate rather than T1–T5.
    pub fn is_empirical(&self) -> bool {
        self.empirical
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Farthest vertex from `source` and its distance, or `None` if some vertex is unreachable.
    fn eccentricity(&self, source: usize) -> Option<(usize, usize)> {
        let dist = self.bfs(source);
        let mut best = (source, 0);
        for (v, d) in dist.into_iter().enumerate() {
            let d = d?;
            if d > best.1 {
                best = (v, d);
            }
        }
        Some(best)
    }
}

/// Γ of the interval, using T1–T5 when `r = 2` and [`generic_moves`] otherwise.
pub fn gamma_graph(interval: &Interval, cap: u128) -> Result<ChainGraph> {
    let vertices = maximal_chains(interval, cap)?;
    let empirical = interval.context().r() != 2;
    let index: HashMap<&[GeneratorLabel], usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, w)| (w.letters(), i))
        .collect();
    let mut cache = ChainCache::new();
    let mut seen: HashMap<(usize, usize), MoveKind> = HashMap::new();
    for (u, w) in vertices.iter().enumerate() {
        let moves = if empirical {
            generic_moves_cached(w, &mut cache)
        } else {
            tits_moves(w)?
        };
        for m in moves {
            let v = *index
                .get(m.word.letters())
                .unwrap_or_else(|| panic!("move {} of {w} left the interval", m.kind));
            if u != v {
                seen.entry((u.min(v), u.max(v))).or_insert(m.kind);
            }
        }
    }
    let mut edges: Vec<(usize, usize, MoveKind)> =
        seen.into_iter().map(|((u, v), k)| (u, v, k)).collect();
    edges.sort();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for &(u, v, _) in &edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    Ok(ChainGraph {
        bottom: interval.bottom().clone(),
        top: interval.top().clone(),
        vertices,
        edges,
        adjacency,
        empirical,
    })
}

pub fn is_connected(graph: &ChainGraph) -> bool {
    graph.vertices.is_empty() || graph.bfs(0).iter().all(Option::is_some)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Diameter {
    Exact(usize),
    /// Double-sweep bound for graphs above [`EXACT_DIAMETER_LIMIT`].
    LowerBound(usize),
    Disconnected,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Exact(d) => write!(f, "{d} (exact)"),
            Diameter::LowerBound(d) => write!(f, ">= {d} (lower bound)"),
            Diameter::Disconnected => f.write_str("infinite (disconnected)"),
        }
    }
}

/// Exact diameter by BFS from every vertex, or a double-sweep lower bound on large graphs.
pub fn diameter(graph: &ChainGraph) -> Diameter {
    diameter_with_limit(graph, EXACT_DIAMETER_LIMIT)
}

pub fn diameter_with_limit(graph: &ChainGraph, exact_limit: usize) -> Diameter {
    let n = graph.vertices.len();
    if n == 0 {
        return Diameter::Exact(0);
    }
    if n > exact_limit {
        return match graph.eccentricity(0) {
            None => Diameter::Disconnected,
            Some((far, _)) => {
                let (_, d) = graph.eccentricity(far).expect("connected");
                Diameter::LowerBound(d)
            }
        };
    }
    let ecc: Option<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|v| graph.eccentricity(v).map(|(_, d)| d))
        .collect();
    match ecc {
        Some(e) => Diameter::Exact(e.into_iter().max().unwrap_or(0)),
        None => Diameter::Disconnected,
    }
}
