//! One-line permutations of `{1, …, n}` and the classical right weak order on `S_n`.
//!
//! Pair sets are packed into a `u128` (pairs of values up to 16), value sets into
//! a `u32`. Both are cheap enough to compare in the inner loops of exhaustive checks.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest supported number of letters.
pub const MAX_N: usize = 16;

/// A set of pairs `(p, q)` with `1 <= p < q <= MAX_N`, one bit per pair.
pub type PairMask = u128;

#[inline]
pub fn pair_bit(p: usize, q: usize) -> PairMask {
    debug_assert!(1 <= p && p < q && q <= MAX_N);
    1u128 << ((q - 1) * (q - 2) / 2 + (p - 1))
}

/// Decodes a pair mask into sorted `(p, q)` pairs.
pub fn pairs_of(mask: PairMask, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for q in 2..=n {
        for p in 1..q {
            if mask & pair_bit(p, q) != 0 {
                out.push((p, q));
            }
        }
    }
    out
}

/// A subset of `{1, …, MAX_N}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueSet(u32);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ValueSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, j: usize) -> bool {
        (1..=MAX_N).contains(&j) && self.0 & (1 << (j - 1)) != 0
    }

    pub fn insert(&mut self, j: usize) {
        assert!((1..=MAX_N).contains(&j));
        self.0 |= 1 << (j - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & other.0)
    }

    pub fn difference(self, other: ValueSet) -> ValueSet {
        ValueSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_N).filter(move |&j| self.contains(j))
    }
}

impl FromIterator<usize> for ValueSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ValueSet::EMPTY;
        for j in iter {
            s.insert(j);
        }
        s
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `M(A)`: the set of second coordinates of the pairs in `A`.
pub fn m_set<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> BTreeSet<usize> {
    pairs.into_iter().map(|(_, j)| j).collect()
}

/// `M` of a packed pair set.
pub fn m_of_mask(mask: PairMask, n: usize) -> ValueSet {
    let mut out = ValueSet::EMPTY;
    for q in 2..=n {
        for p in 1..q {
            if mask & pair_bit(p, q) != 0 {
                out.insert(q);
                break;
            }
        }
    }
    out
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    /// The longest element `[n, n-1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        Perm((1..=n as u8).rev().collect())
    }

    pub fn from_one_line(values: Vec<u8>) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > MAX_N {
            return Err(Error::Parse {
                input: format!("{values:?}"),
                reason: format!("length must be in 1..={MAX_N}"),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse {
                    input: format!("{values:?}"),
                    reason: "not a permutation".into(),
                });
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        (1..=n as u8)
            .permutations(n)
            .map(Perm)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (pos + 1) as u8;
        }
        Perm(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "permutations of different degree");
        Perm(other.0.iter().map(|&t| self.0[t as usize - 1]).collect())
    }

    /// `σ · s_i`: swaps the entries at positions `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// `Inv(σ)`: position pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .tuple_combinations()
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .map(|(i, j)| (i + 1, j + 1))
            .collect()
    }

    pub fn inv(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `D(σ)`: positions `i` with `σ(i) > σ(i + 1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// `Inv(σ⁻¹)` read as value pairs: `(p, q)` with `p < q` and `q` placed before `p`.
    pub fn value_inversions(&self) -> PairMask {
        let mut mask = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                let (a, b) = (self.0[i] as usize, self.0[j] as usize);
                if a > b {
                    mask |= pair_bit(b, a);
                }
            }
        }
        mask
    }

    /// Right weak order: `Inv(u⁻¹) ⊆ Inv(v⁻¹)`.
    pub fn weak_le(&self, other: &Perm) -> bool {
        let a = self.value_inversions();
        a & !other.value_inversions() == 0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// `M(u, v) := M[Inv(v⁻¹) \ Inv(u⁻¹)]`, with the difference taken literally.
pub fn m_between(u: &Perm, v: &Perm) -> ValueSet {
    m_of_mask(v.value_inversions() & !u.value_inversions(), u.len())
}

/// Explores the order ideal `{w : Inv(w⁻¹) ⊆ allowed}` upward from the identity
/// and returns its unique maximum.
fn ideal_maximum(n: usize, allowed: PairMask) -> Perm {
    let start = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut union = 0;
    let mut best: Option<(usize, Perm)> = None;
    let mut ties = 0;
    while let Some(w) = queue.pop_front() {
        let inv = w.value_inversions();
        union |= inv;
        let len = inv.count_ones() as usize;
        match &best {
            Some((l, _)) if *l > len => {}
            Some((l, _)) if *l == len => ties += 1,
            _ => {
                best = Some((len, w.clone()));
                ties = 0;
            }
        }
        for i in 1..n {
            let (a, b) = (w.at(i), w.at(i + 1));
            if a < b && allowed & pair_bit(a, b) != 0 {
                let next = w.swap_adjacent(i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let (_, top) = best.expect("ideal contains the identity");
    assert_eq!(ties, 0, "weak-order ideal has several maximal elements");
    assert_eq!(top.value_inversions(), union, "weak-order ideal is not principal");
    top
}

/// Explores the filter `{w : Inv(w⁻¹) ⊇ required}` downward from the longest element
/// and returns its unique minimum.
fn filter_minimum(n: usize, required: PairMask) -> Perm {
    let start = Perm::longest(n);
    let mut seen: HashSet<Perm> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut intersection = PairMask::MAX;
    let mut best: Option<(usize, Perm)> = None;
    let mut ties = 0;
    while let Some(w) = queue.pop_front() {
        let inv = w.value_inversions();
        intersection &= inv;
        let len = inv.count_ones() as usize;
        match &best {
            Some((l, _)) if *l < len => {}
            Some((l, _)) if *l == len => ties += 1,
            _ => {
                best = Some((len, w.clone()));
                ties = 0;
            }
        }
        for i in 1..n {
            let (a, b) = (w.at(i), w.at(i + 1));
            if a > b && required & pair_bit(b, a) == 0 {
                let next = w.swap_adjacent(i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let (_, bottom) = best.expect("filter contains the longest element");
    assert_eq!(ties, 0, "weak-order filter has several minimal elements");
    assert_eq!(bottom.value_inversions(), intersection, "weak-order filter is not principal");
    bottom
}

/// Greatest lower bound in the right weak order on `S_n`.
pub fn sn_weak_meet(u: &Perm, v: &Perm) -> Perm {
    assert_eq!(u.len(), v.len(), "permutations of different degree");
    ideal_maximum(u.len(), u.value_inversions() & v.value_inversions())
}

/// Least upper bound in the right weak order on `S_n`.
pub fn sn_weak_join(u: &Perm, v: &Perm) -> Perm {
    assert_eq!(u.len(), v.len(), "permutations of different degree");
    filter_minimum(u.len(), u.value_inversions() | v.value_inversions())
}

/// Meet of a family; the empty meet is the longest element.
pub fn sn_weak_meet_all<'a, I: IntoIterator<Item = &'a Perm>>(n: usize, perms: I) -> Perm {
    let allowed = perms
        .into_iter()
        .fold(PairMask::MAX, |acc, p| acc & p.value_inversions());
    ideal_maximum(n, allowed)
}

/// Join of a family; the empty join is the identity.
pub fn sn_weak_join_all<'a, I: IntoIterator<Item = &'a Perm>>(n: usize, perms: I) -> Perm {
    let required = perms.into_iter().fold(0, |acc, p| acc | p.value_inversions());
    filter_minimum(n, required)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u8]) -> Perm {
        Perm::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn statistics_of_small_permutations() {
        let w = p(&[3, 1, 2]);
        assert_eq!(w.inversions(), vec![(1, 2), (1, 3)]);
        assert_eq!(w.inv(), 2);
        assert_eq!(w.descents(), vec![1]);
        assert_eq!(w.inverse(), p(&[2, 3, 1]));
        assert_eq!(w.compose(&w.inverse()), Perm::identity(3));
        assert_eq!(pairs_of(w.value_inversions(), 3), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::from_one_line(vec![1, 1]).is_err());
        assert!(Perm::from_one_line(vec![0, 1]).is_err());
        assert!(Perm::from_one_line(vec![]).is_err());
    }

    #[test]
    fn m_set_example() {
        let got = m_set([(1, 6), (1, 4), (2, 3), (4, 6)]);
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![3, 4, 6]);
        assert!(m_set(std::iter::empty()).is_empty());
        assert_eq!(m_between(&p(&[1, 2]), &p(&[2, 1])).iter().collect::<Vec<_>>(), vec![2]);
    }

    // Brute force over S_3 and S_4: the meet is the unique common lower bound
    // lying above every other common lower bound.
    #[test]
    fn weak_meet_and_join_match_exhaustive_search() {
        for n in 1..=4 {
            let all = Perm::all(n);
            for u in &all {
                for v in &all {
                    let lower: Vec<&Perm> =
                        all.iter().filter(|w| w.weak_le(u) && w.weak_le(v)).collect();
                    let glb: Vec<&&Perm> =
                        lower.iter().filter(|m| lower.iter().all(|w| w.weak_le(m))).collect();
                    assert_eq!(glb.len(), 1);
                    assert_eq!(&sn_weak_meet(u, v), *glb[0]);

                    let upper: Vec<&Perm> =
                        all.iter().filter(|w| u.weak_le(w) && v.weak_le(w)).collect();
                    let lub: Vec<&&Perm> =
                        upper.iter().filter(|m| upper.iter().all(|w| m.weak_le(w))).collect();
                    assert_eq!(lub.len(), 1);
                    assert_eq!(&sn_weak_join(u, v), *lub[0]);
                }
            }
        }
    }

    #[test]
    fn weak_meet_examples() {
        assert_eq!(sn_weak_meet(&p(&[2, 1, 3]), &p(&[2, 3, 1])), p(&[2, 1, 3]));
        let u = p(&[3, 1, 2]);
        assert_eq!(sn_weak_meet(&u, &Perm::identity(3)), Perm::identity(3));
        assert_eq!(sn_weak_join(&u, &Perm::longest(3)), Perm::longest(3));
        assert_eq!(sn_weak_meet_all(3, []), Perm::longest(3));
        assert_eq!(sn_weak_join_all(3, []), Perm::identity(3));
    }
}
