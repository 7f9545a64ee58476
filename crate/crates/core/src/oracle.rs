//! Brute-force order, meet, join and Möbius function.
//!
//! [`BruteForceOrder::new`] starts from the definition of the order: `π < π·s`
//! whenever `s ∈ S_{r,n}` and `finv(π·s) > finv(π)`, closed reflexively and
//! transitively. Steps are formed with the group product and no cover
//! characterization or closed form is consulted. [`BruteForceOrder::from_hasse`]
//! closes the cover edges of a Hasse diagram instead.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::group::{ColoredPermutation, GroupContext};
use crate::order::HasseDiagram;

fn index_of(elements: &[ColoredPermutation]) -> HashMap<ColoredPermutation, usize> {
    elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect()
}

/// The flag weak order of one group, materialized as up-sets and down-sets.
pub struct BruteForceOrder {
    ctx: GroupContext,
    elements: Vec<ColoredPermutation>,
    finv: Vec<usize>,
    index: HashMap<ColoredPermutation, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl BruteForceOrder {
    /// Built from finv-increasing generator steps, formed with the group product.
    pub fn new(ctx: GroupContext) -> Self {
        let elements = ctx.enumerate();
        let index = index_of(&elements);
        let gens: Vec<ColoredPermutation> = ctx
            .labels()
            .into_iter()
            .map(|s| ctx.generator(s).expect("label in range"))
            .collect();
        let steps: Vec<Vec<usize>> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                gens.iter()
                    .map(|s| index[&(e * s)])
                    .filter(|&j| elements[j].finv() > elements[i].finv())
                    .collect()
            })
            .collect();
        Self::close(ctx, elements, index, steps)
    }

    /// Built from the cover edges of a Hasse diagram.
    pub fn from_hasse(hasse: &HasseDiagram) -> Self {
        let elements = hasse.elements().to_vec();
        let index = index_of(&elements);
        let steps = (0..elements.len())
            .map(|i| hasse.up_edges(i).map(|e| e.to).collect())
            .collect();
        Self::close(hasse.context(), elements, index, steps)
    }

    /// Reflexive-transitive closure of `steps`, each step raising finv.
    fn close(
        ctx: GroupContext,
        elements: Vec<ColoredPermutation>,
        index: HashMap<ColoredPermutation, usize>,
        steps: Vec<Vec<usize>>,
    ) -> Self {
        let len = elements.len();
        let finv: Vec<usize> = elements.iter().map(|e| e.finv()).collect();
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(finv[i]));
        let mut up = vec![FixedBitSet::with_capacity(len); len];
        for &i in &order {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(i);
            for &j in &steps[i] {
                assert!(finv[j] > finv[i], "step must raise finv");
                set.union_with(&up[j]);
            }
            up[i] = set;
        }
        let mut down = vec![FixedBitSet::with_capacity(len); len];
        for (i, set) in up.iter().enumerate() {
            for j in set.ones() {
                down[j].insert(i);
            }
        }
        BruteForceOrder {
            ctx,
            elements,
            finv,
            index,
            up,
            down,
        }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn elements(&self) -> &[ColoredPermutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn id(&self, g: &ColoredPermutation) -> usize {
        self.index[g]
    }

    /// Reachability along finv-increasing generator steps.
    pub fn leq(&self, g: &ColoredPermutation, h: &ColoredPermutation) -> bool {
        self.up[self.id(g)].contains(self.id(h))
    }

    pub fn leq_ids(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Pairs `(x, y)` with `y` covering `x`: `x < y` with nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(ColoredPermutation, ColoredPermutation)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let above: Vec<usize> = self.up[x].ones().filter(|&y| y != x).collect();
            for &y in &above {
                let between = above
                    .iter()
                    .any(|&z| z != y && self.up[z].contains(y));
                if !between {
                    out.push((self.elements[x].clone(), self.elements[y].clone()));
                }
            }
        }
        out
    }

    fn extremum(&self, set: &FixedBitSet, greatest: bool) -> Option<ColoredPermutation> {
        let members: Vec<usize> = set.ones().collect();
        let best = if greatest {
            members.iter().map(|&i| self.finv[i]).max()?
        } else {
            members.iter().map(|&i| self.finv[i]).min()?
        };
        let at_best: Vec<usize> = members.iter().copied().filter(|&i| self.finv[i] == best).collect();
        if at_best.len() != 1 {
            return None;
        }
        let m = at_best[0];
        let bound = if greatest { &self.down[m] } else { &self.up[m] };
        set.is_subset(bound).then(|| self.elements[m].clone())
    }

    /// Greatest common lower bound, or `None` when it does not exist.
    pub fn meet(&self, g: &ColoredPermutation, h: &ColoredPermutation) -> Option<ColoredPermutation> {
        let mut lower = self.down[self.id(g)].clone();
        lower.intersect_with(&self.down[self.id(h)]);
        self.extremum(&lower, true)
    }

    /// Least common upper bound, or `None` when it does not exist.
    pub fn join(&self, g: &ColoredPermutation, h: &ColoredPermutation) -> Option<ColoredPermutation> {
        let mut upper = self.up[self.id(g)].clone();
        upper.intersect_with(&self.up[self.id(h)]);
        self.extremum(&upper, false)
    }

    /// `μ(g, x)` for every `x ⪰ g`, from `μ(g, g) = 1` and
    /// `μ(g, x) = -Σ_{g ⪯ y ≺ x} μ(g, y)`.
    pub fn mobius_from(&self, g: &ColoredPermutation) -> HashMap<ColoredPermutation, i64> {
        let gi = self.id(g);
        let mut above: Vec<usize> = self.up[gi].ones().collect();
        above.sort_by_key(|&i| self.finv[i]);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &x in &above {
            let value = if x == gi {
                1
            } else {
                -above
                    .iter()
                    .filter(|&&y| y != x && self.up[y].contains(x))
                    .map(|y| mu[y])
                    .sum::<i64>()
            };
            mu.insert(x, value);
        }
        mu.into_iter()
            .map(|(i, v)| (self.elements[i].clone(), v))
            .collect()
    }

    /// `μ(g, h)`, or `None` when `g ⋠ h`.
    pub fn mobius(&self, g: &ColoredPermutation, h: &ColoredPermutation) -> Option<i64> {
        if !self.leq(g, h) {
            return None;
        }
        self.mobius_from(g).get(h).copied()
    }
}
