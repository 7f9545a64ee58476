//! The flag weak order: covers, the comparison criterion, Hasse diagrams and intervals.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::genfun::{UniPoly, Var};
use crate::group::{ColoredPermutation, GeneratorLabel, GroupContext};
use crate::perm::{m_of_mask, Perm, ValueSet};

pub use crate::perm::m_set;

/// Elements covering `g`, each with the generator that reaches it.
///
/// `g·b_i` covers `g` iff `c_i ≠ r-1`; `g·a_i` covers `g` iff `c_{i+1} = r-1`
/// and `|g(i)| < |g(i+1)|`.
pub fn up_covers(g: &ColoredPermutation) -> Vec<(GeneratorLabel, ColoredPermutation)> {
    let top = (g.context().r() - 1) as u8;
    let abs = g.abs().as_slice();
    let colors = g.colors();
    let n = colors.len();
    let mut out = Vec::new();
    for i in 1..n {
        if colors[i] == top && abs[i - 1] < abs[i] {
            let s = GeneratorLabel::a(i);
            out.push((s, g.right_multiply(s)));
        }
    }
    for i in 1..=n {
        if colors[i - 1] != top {
            let s = GeneratorLabel::b(i);
            out.push((s, g.right_multiply(s)));
        }
    }
    out
}

/// Elements covered by `g`, each with the generator `s` such that `x · s = g`.
pub fn down_covers(g: &ColoredPermutation) -> Vec<(GeneratorLabel, ColoredPermutation)> {
    let ctx = g.context();
    let r = ctx.r() as u8;
    let abs = g.abs().as_slice();
    let colors = g.colors();
    let n = colors.len();
    let mut out = Vec::new();
    for i in 1..n {
        if colors[i - 1] == 0 && abs[i - 1] > abs[i] {
            // undo x·a_i: x(i) = (|g(i+1)|, c_{i+1}), x(i+1) = (|g(i)|, r-1)
            let mut c = colors.to_vec();
            c[i - 1] = colors[i];
            c[i] = r - 1;
            let x = ColoredPermutation::from_parts(ctx, g.abs().swap_adjacent(i), c)
                .expect("valid window");
            out.push((GeneratorLabel::a(i), x));
        }
    }
    for i in 1..=n {
        if colors[i - 1] != 0 {
            let mut c = colors.to_vec();
            c[i - 1] -= 1;
            let x = ColoredPermutation::from_parts(ctx, g.abs().clone(), c).expect("valid window");
            out.push((GeneratorLabel::b(i), x));
        }
    }
    out
}

/// The number of elements covered by `g`.
pub fn wdes(g: &ColoredPermutation) -> usize {
    down_covers(g).len()
}

/// `M(|u|, |v|) = M[Inv(|v|⁻¹) \ Inv(|u|⁻¹)]`.
pub fn m_between(u: &Perm, v: &Perm) -> BTreeSet<usize> {
    crate::perm::m_between(u, v).iter().collect()
}

/// Decides `g ⪯ h` directly from the windows, without building the poset:
/// `Inv(|g⁻¹|) ⊆ Inv(|h⁻¹|)` and every value whose color drops from `g` to `h`
/// lies in `M(|g|, |h|)`.
pub fn leq(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<bool> {
    if g.context() != h.context() {
        let (a, b) = (g.context(), h.context());
        return Err(Error::ContextMismatch(a.r(), a.n(), b.r(), b.n()));
    }
    Ok(leq_unchecked(g, h))
}

pub(crate) fn leq_unchecked(g: &ColoredPermutation, h: &ColoredPermutation) -> bool {
    let gi = g.abs().value_inversions();
    let hi = h.abs().value_inversions();
    if gi & !hi != 0 {
        return false;
    }
    let gained = m_of_mask(hi & !gi, g.context().n());
    let (gc, hc) = (g.value_colors(), h.value_colors());
    let dropped: ValueSet = (1..=gc.len()).filter(|&j| gc[j - 1] > hc[j - 1]).collect();
    dropped.is_subset(gained)
}

/// A cover edge between element ids of a [`HasseDiagram`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct CoverEdge {
    pub from: usize,
    pub to: usize,
    pub label: GeneratorLabel,
}

/// A rank-layered interval `[bottom, top]` of the flag weak order with its cover edges.
///
/// Ids follow rank, and the element order within a rank. The whole poset is the
/// interval `[identity, μ0]`.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    ctx: GroupContext,
    elements: Vec<ColoredPermutation>,
    ranks: Vec<usize>,
    index: HashMap<ColoredPermutation, usize>,
    edges: Vec<CoverEdge>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// An interval has the same shape as a full diagram.
pub type Interval = HasseDiagram;

impl HasseDiagram {
    /// Grows the diagram rank by rank from `bottom`, keeping covers accepted by `keep`.
    fn grow<F>(bottom: &ColoredPermutation, cap: usize, keep: F) -> Result<Self>
    where
        F: Fn(&ColoredPermutation) -> bool,
    {
        let ctx = bottom.context();
        let mut elements = Vec::new();
        let mut layer = vec![bottom.clone()];
        while !layer.is_empty() {
            if elements.len() + layer.len() > cap {
                return Err(Error::CapExceeded {
                    what: "Hasse diagram",
                    count: (elements.len() + layer.len()) as u128,
                    cap: cap as u128,
                });
            }
            let next: BTreeSet<ColoredPermutation> = layer
                .iter()
                .flat_map(up_covers)
                .map(|(_, y)| y)
                .filter(|y| keep(y))
                .collect();
            elements.append(&mut layer);
            layer = next.into_iter().collect();
        }
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let ranks = elements.iter().map(|e| e.finv()).collect();
        let mut edges = Vec::new();
        let mut up = vec![Vec::new(); elements.len()];
        let mut down = vec![Vec::new(); elements.len()];
        for (from, e) in elements.iter().enumerate() {
            for (label, y) in up_covers(e) {
                if let Some(&to) = index.get(&y) {
                    up[from].push(edges.len());
                    down[to].push(edges.len());
                    edges.push(CoverEdge { from, to, label });
                }
            }
        }
        Ok(HasseDiagram {
            ctx,
            elements,
            ranks,
            index,
            edges,
            up,
            down,
        })
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ColoredPermutation] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &ColoredPermutation {
        &self.elements[id]
    }

    pub fn id_of(&self, g: &ColoredPermutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &ColoredPermutation) -> bool {
        self.index.contains_key(g)
    }

    /// `finv` of element `id`.
    pub fn rank(&self, id: usize) -> usize {
        self.ranks[id]
    }

    pub fn edges(&self) -> &[CoverEdge] {
        &self.edges
    }

    /// Cover edges leaving `id` upward.
    pub fn up_edges(&self, id: usize) -> impl Iterator<Item = &CoverEdge> {
        self.up[id].iter().map(|&e| &self.edges[e])
    }

    /// Cover edges entering `id` from below.
    pub fn down_edges(&self, id: usize) -> impl Iterator<Item = &CoverEdge> {
        self.down[id].iter().map(|&e| &self.edges[e])
    }

    pub fn bottom(&self) -> &ColoredPermutation {
        &self.elements[0]
    }

    pub fn top(&self) -> &ColoredPermutation {
        self.elements.last().expect("nonempty diagram")
    }

    pub fn length(&self) -> usize {
        self.ranks[self.len() - 1] - self.ranks[0]
    }

    /// Number of elements at each rank above the bottom.
    pub fn rank_sizes(&self) -> Vec<u64> {
        let base = self.ranks[0];
        let mut sizes = vec![0u64; self.length() + 1];
        for &r in &self.ranks {
            sizes[r - base] += 1;
        }
        sizes
    }

    /// The interval `[g, h]` cut out of this diagram by an upward search from `g`
    /// and a downward search from `h`, intersected.
    pub fn sub_interval(&self, g: &ColoredPermutation, h: &ColoredPermutation) -> Result<Interval> {
        let (gi, hi) = match (self.id_of(g), self.id_of(h)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Precondition("endpoint outside the diagram".into())),
        };
        let above = self.reachable(gi, true);
        let below = self.reachable(hi, false);
        if !above[hi] {
            return Err(not_comparable(g, h));
        }
        let inside: Vec<bool> = above.iter().zip(&below).map(|(a, b)| *a && *b).collect();
        let keep = |y: &ColoredPermutation| self.id_of(y).is_some_and(|id| inside[id]);
        HasseDiagram::grow(g, usize::MAX, keep)
    }

    /// Ids reachable from `id` along cover edges, going up (`upward`) or down.
    pub fn reachable(&self, start: usize, upward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let next: Vec<usize> = if upward {
                self.up_edges(x).map(|e| e.to).collect()
            } else {
                self.down_edges(x).map(|e| e.from).collect()
            };
            for y in next {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

fn not_comparable(g: &ColoredPermutation, h: &ColoredPermutation) -> Error {
    Error::NotComparable {
        lower: g.format(true),
        upper: h.format(true),
    }
}

/// The whole poset `(G(r, n), ⪯)`.
pub fn build_hasse(ctx: GroupContext) -> HasseDiagram {
    HasseDiagram::grow(&ctx.identity(), usize::MAX, |_| true).expect("no cap")
}

/// The interval `[g, h]`, enumerated upward from `g` and filtered by `leq(·, h)`.
pub fn build_interval(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<Interval> {
    build_interval_capped(g, h, usize::MAX)
}

pub fn build_interval_capped(
    g: &ColoredPermutation,
    h: &ColoredPermutation,
    cap: usize,
) -> Result<Interval> {
    if !leq(g, h)? {
        return Err(not_comparable(g, h));
    }
    HasseDiagram::grow(g, cap, |y| leq_unchecked(y, h))
}

/// Whether `h` is reachable from `g` along the cover edges of `hasse`.
///
/// This reads the order off its definition and serves as the oracle for [`leq`].
pub fn leq_oracle(g: &ColoredPermutation, h: &ColoredPermutation, hasse: &HasseDiagram) -> bool {
    match (hasse.id_of(g), hasse.id_of(h)) {
        (Some(gi), Some(hi)) => hasse.reachable(gi, true)[hi],
        _ => false,
    }
}

/// `Σ q^{finv}` over the diagram, shifted so the bottom has degree 0.
pub fn rank_genfun(hasse: &HasseDiagram) -> UniPoly {
    UniPoly::from_coeffs(
        Var::Q,
        hasse.rank_sizes().into_iter().map(|c| c as i64).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(r: u32, n: usize) -> GroupContext {
        GroupContext::new(r, n).unwrap()
    }

    fn set(v: Vec<(GeneratorLabel, ColoredPermutation)>) -> BTreeSet<(GeneratorLabel, String)> {
        v.into_iter().map(|(s, x)| (s, x.format(true))).collect()
    }

    fn expect(pairs: &[(GeneratorLabel, &str)], c: GroupContext) -> BTreeSet<(GeneratorLabel, String)> {
        pairs
            .iter()
            .map(|(s, x)| (*s, c.parse(x).unwrap().format(true)))
            .collect()
    }

    #[test]
    fn up_cover_examples() {
        let c = ctx(2, 2);
        let (a1, b1, b2) = (GeneratorLabel::a(1), GeneratorLabel::b(1), GeneratorLabel::b(2));
        assert_eq!(
            set(up_covers(&c.identity())),
            expect(&[(b1, "1̄2"), (b2, "12̄")], c)
        );
        assert_eq!(
            set(up_covers(&c.parse("12̄").unwrap())),
            expect(&[(b1, "1̄2̄"), (a1, "21")], c)
        );
        assert!(up_covers(&c.mu0()).is_empty());
    }

    #[test]
    fn down_cover_examples() {
        let c = ctx(2, 2);
        let got: BTreeSet<String> = down_covers(&c.mu0()).into_iter().map(|(_, x)| x.format(true)).collect();
        let want: BTreeSet<String> = ["2̄1", "21̄"].iter().map(|s| c.parse(s).unwrap().format(true)).collect();
        assert_eq!(got, want);
        assert!(down_covers(&c.identity()).is_empty());
        assert_eq!(
            set(down_covers(&c.parse("21").unwrap())),
            expect(&[(GeneratorLabel::a(1), "12̄")], c)
        );
    }

    #[test]
    fn down_covers_invert_up_covers() {
        for (r, n) in [(1, 3), (2, 3), (3, 2), (4, 2), (3, 3)] {
            let c = ctx(r, n);
            for g in c.enumerate() {
                for (s, x) in down_covers(&g) {
                    assert_eq!(x.right_multiply(s), g);
                    assert!(up_covers(&x).contains(&(s, g.clone())));
                }
                for (s, y) in up_covers(&g) {
                    assert!(down_covers(&y).contains(&(s, g.clone())));
                }
            }
        }
    }

    #[test]
    fn leq_examples() {
        let c = ctx(2, 2);
        let p = |s| c.parse(s).unwrap();
        assert!(leq(&p("1̄2"), &p("2̄1̄")).unwrap());
        assert!(!leq(&p("1̄2"), &p("12̄")).unwrap());
        assert!(!leq(&p("12̄"), &p("1̄2")).unwrap());
        for g in c.enumerate() {
            assert!(leq(&g, &g).unwrap());
        }
        assert!(leq(&c.identity(), &ctx(2, 3).identity()).is_err());
    }

    #[test]
    fn leq_matches_reachability_small() {
        for (r, n) in [(2, 2), (2, 3), (3, 2), (1, 3)] {
            let hasse = build_hasse(ctx(r, n));
            for g in hasse.elements() {
                for h in hasse.elements() {
                    assert_eq!(leq(g, h).unwrap(), leq_oracle(g, h, &hasse), "{g} {h}");
                }
            }
        }
    }

    #[test]
    fn hasse_shapes() {
        let h = build_hasse(ctx(2, 2));
        assert_eq!(h.len(), 8);
        assert_eq!(h.edges().len(), 10);
        assert_eq!(h.rank_sizes(), vec![1, 2, 2, 2, 1]);
        assert_eq!(h.bottom(), &ctx(2, 2).identity());
        assert_eq!(h.top(), &ctx(2, 2).mu0());

        let h = build_hasse(ctx(2, 3));
        assert_eq!(h.len(), 48);
        assert_eq!(h.rank_sizes(), vec![1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);

        let h = build_hasse(ctx(2, 1));
        assert_eq!((h.len(), h.edges().len()), (2, 1));
    }

    #[test]
    fn every_cover_raises_rank_by_one() {
        for (r, n) in [(1, 4), (2, 3), (3, 3), (4, 2)] {
            let h = build_hasse(ctx(r, n));
            assert_eq!(h.len() as u64, ctx(r, n).order());
            for e in h.edges() {
                assert_eq!(h.rank(e.to), h.rank(e.from) + 1);
                assert_eq!(&h.element(e.from).right_multiply(e.label), h.element(e.to));
            }
        }
    }

    #[test]
    fn trivial_interval() {
        let c = ctx(2, 3);
        let g = c.parse("-2,1,3").unwrap();
        let i = build_interval(&g, &g).unwrap();
        assert_eq!(i.len(), 1);
        assert!(i.edges().is_empty());
        assert!(build_interval(&c.mu0(), &c.identity()).is_err());
    }

    #[test]
    fn interval_constructions_agree() {
        let c = ctx(2, 3);
        let full = build_hasse(c);
        let all = c.enumerate();
        for g in &all {
            for h in &all {
                if !leq(g, h).unwrap() {
                    assert!(full.sub_interval(g, h).is_err());
                    continue;
                }
                let a = build_interval(g, h).unwrap();
                let b = full.sub_interval(g, h).unwrap();
                assert_eq!(a.elements(), b.elements());
                assert_eq!(a.edges(), b.edges());
                assert_eq!(a.bottom(), g);
                assert_eq!(a.top(), h);
            }
        }
    }

    #[test]
    fn rank_genfun_examples() {
        assert_eq!(rank_genfun(&build_hasse(ctx(2, 2))).coeffs(), &[1, 2, 2, 2, 1]);
        assert_eq!(rank_genfun(&build_hasse(ctx(1, 1))).coeffs(), &[1]);
        assert_eq!(rank_genfun(&build_hasse(ctx(3, 1))).coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn a_and_b_next_covers_exclude_each_other() {
        for (r, n) in [(2, 4), (3, 3)] {
            for g in ctx(r, n).enumerate() {
                let labels: Vec<GeneratorLabel> = up_covers(&g).into_iter().map(|(s, _)| s).collect();
                for i in 1..n {
                    assert!(!(labels.contains(&GeneratorLabel::a(i))
                        && labels.contains(&GeneratorLabel::b(i + 1))));
                }
            }
        }
    }
}
