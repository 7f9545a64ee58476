//! Relation checks for the presentations of `G(r, n)` and of the alternating subgroup of `B_n`.
//!
//! Generators of `G(r, n)`:
//!
//! ```text
//! (B1_r) b_i^r = 1                 (B5) a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}
//! (B2)   b_i b_j = b_j b_i         (B6) a_i b_j = b_j a_i        (j ≠ i, i+1)
//! (B3)   a_i^2 = b_i b_{i+1}       (B7) a_i b_i = b_{i+1} a_i
//! (B4)   a_i a_j = a_j a_i  (|i-j| > 1)   (B8) a_i b_{i+1} = b_i a_i
//! ```
//!
//! Alternating subgroup of `B_n`, generated by the `a_i` alone:
//!
//! ```text
//! (A1) a_i^4 = 1      (A2) a_i a_j = a_j a_i  (|i-j| > 1)
//! (A3) a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}      (A4) (a_i a_{i+1})^3 = 1
//! ```

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GeneratorLabel, GroupContext};
use crate::perm::Perm;

pub const DEFAULT_CLOSURE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum RelationId {
    A1,
    A2,
    A3,
    A4,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A relation instance whose two sides differ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationFailure {
    pub relation: RelationId,
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyResult {
    pub relation: RelationId,
    pub instances: usize,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub context: GroupContext,
    pub families: Vec<FamilyResult>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }
}

/// Left-to-right product; the empty product is the identity.
pub fn product(ctx: GroupContext, factors: &[&ColoredPermutation]) -> ColoredPermutation {
    factors
        .iter()
        .fold(ctx.identity(), |acc, g| &acc * *g)
}

struct Checker {
    ctx: GroupContext,
    families: Vec<FamilyResult>,
    failures: Vec<RelationFailure>,
}

impl Checker {
    fn new(ctx: GroupContext) -> Self {
        Checker {
            ctx,
            families: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn family(&mut self, relation: RelationId) {
        self.families.push(FamilyResult {
            relation,
            instances: 0,
            failures: 0,
        });
    }

    fn check(&mut self, indices: &[usize], lhs: &[&ColoredPermutation], rhs: &[&ColoredPermutation]) {
        let fam = self.families.last_mut().expect("family opened");
        fam.instances += 1;
        let (l, r) = (product(self.ctx, lhs), product(self.ctx, rhs));
        if l != r {
            fam.failures += 1;
            self.failures.push(RelationFailure {
                relation: fam.relation,
                indices: indices.to_vec(),
                lhs: l.format(true),
                rhs: r.format(true),
            });
        }
    }

    fn finish(self) -> RelationReport {
        RelationReport {
            context: self.ctx,
            families: self.families,
            failures: self.failures,
        }
    }
}

fn gens(ctx: GroupContext) -> (Vec<ColoredPermutation>, Vec<ColoredPermutation>) {
    let n = ctx.n();
    let a = (1..n)
        .map(|i| ctx.generator(GeneratorLabel::a(i)).unwrap())
        .collect();
    let b = (1..=n)
        .map(|i| ctx.generator(GeneratorLabel::b(i)).unwrap())
        .collect();
    (a, b)
}

/// Every instance of `(B1_r)` to `(B8)` for the generators of `ctx`.
pub fn verify_relations_b(ctx: GroupContext) -> RelationReport {
    let n = ctx.n();
    let (a, b) = gens(ctx);
    // 1-based accessors
    let a = |i: usize| &a[i - 1];
    let b = |i: usize| &b[i - 1];
    let id = ctx.identity();
    let mut c = Checker::new(ctx);

    c.family(RelationId::B1);
    for i in 1..=n {
        let power = vec![b(i); ctx.r() as usize];
        c.check(&[i], &power, &[&id]);
    }
    c.family(RelationId::B2);
    for i in 1..=n {
        for j in i + 1..=n {
            c.check(&[i, j], &[b(i), b(j)], &[b(j), b(i)]);
        }
    }
    c.family(RelationId::B3);
    for i in 1..n {
        c.check(&[i], &[a(i), a(i)], &[b(i), b(i + 1)]);
    }
    c.family(RelationId::B4);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                c.check(&[i, j], &[a(i), a(j)], &[a(j), a(i)]);
            }
        }
    }
    c.family(RelationId::B5);
    for i in 1..n.saturating_sub(1) {
        c.check(&[i], &[a(i), a(i + 1), a(i)], &[a(i + 1), a(i), a(i + 1)]);
    }
    c.family(RelationId::B6);
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                c.check(&[i, j], &[a(i), b(j)], &[b(j), a(i)]);
            }
        }
    }
    c.family(RelationId::B7);
    for i in 1..n {
        c.check(&[i], &[a(i), b(i)], &[b(i + 1), a(i)]);
    }
    c.family(RelationId::B8);
    for i in 1..n {
        c.check(&[i], &[a(i), b(i + 1)], &[b(i), a(i)]);
    }
    c.finish()
}

/// Every instance of `(A1)` to `(A4)` for the elements `a_i` of `B_n`.
pub fn verify_relations_a(n: usize) -> Result<RelationReport> {
    if n < 2 {
        return Err(Error::Precondition("relations A1-A4 need n >= 2".into()));
    }
    let ctx = GroupContext::new(2, n)?;
    let (a, _) = gens(ctx);
    let a = |i: usize| &a[i - 1];
    let id = ctx.identity();
    let mut c = Checker::new(ctx);

    c.family(RelationId::A1);
    for i in 1..n {
        c.check(&[i], &[a(i); 4], &[&id]);
    }
    c.family(RelationId::A2);
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                c.check(&[i, j], &[a(i), a(j)], &[a(j), a(i)]);
            }
        }
    }
    c.family(RelationId::A3);
    for i in 1..n - 1 {
        c.check(&[i], &[a(i), a(i + 1), a(i)], &[a(i + 1), a(i), a(i + 1)]);
    }
    c.family(RelationId::A4);
    for i in 1..n - 1 {
        let (x, y) = (a(i), a(i + 1));
        c.check(&[i], &[x, y, x, y, x, y], &[&id]);
    }
    Ok(c.finish())
}

fn transposition(ctx: GroupContext, i: usize) -> ColoredPermutation {
    let abs = Perm::identity(ctx.n()).swap_adjacent(i);
    ColoredPermutation::from_parts(ctx, abs, vec![0; ctx.n()]).expect("valid parts")
}

/// Whether each `a_i` of `B_n` is the transposition `(i, i+1)` followed by the sign change `(i, -i)`.
pub fn verify_a_as_reflections(n: usize) -> Result<bool> {
    let ctx = GroupContext::new(2, n)?;
    Ok((1..n).all(|i| {
        let b_i = ctx.generator(GeneratorLabel::b(i)).unwrap();
        &transposition(ctx, i) * &b_i == ctx.generator(GeneratorLabel::a(i)).unwrap()
    }))
}

/// Whether `a_i a_{i-1}^2 ⋯ a_1^2 = (i, i+1)(1, -1)` in `B_n` for every `i`.
pub fn verify_alternating_generators(n: usize) -> Result<bool> {
    let ctx = GroupContext::new(2, n)?;
    let (a, _) = gens(ctx);
    let b1 = ctx.generator(GeneratorLabel::b(1))?;
    Ok((1..n).all(|i| {
        let mut factors = vec![&a[i - 1]];
        for k in (1..i).rev() {
            factors.push(&a[k - 1]);
            factors.push(&a[k - 1]);
        }
        product(ctx, &factors) == &transposition(ctx, i) * &b1
    }))
}

/// The expressions of the derivation of `(A4)` from `(B1)`-`(B8)`, evaluated in `B_n`.
///
/// All of them should equal the identity.
pub fn replay_remark(n: usize, i: usize) -> Result<Vec<ColoredPermutation>> {
    if n < 3 || i == 0 || i + 2 > n {
        return Err(Error::Precondition(format!(
            "the derivation needs n >= 3 and 1 <= i <= n-2, got n = {n}, i = {i}"
        )));
    }
    let ctx = GroupContext::new(2, n)?;
    let (a, b) = gens(ctx);
    let a = |k: usize| &a[k - 1];
    let b = |k: usize| &b[k - 1];
    let (x, y) = (a(i), a(i + 1));
    let (b0, b1, b2) = (b(i), b(i + 1), b(i + 2));
    let steps: [Vec<&ColoredPermutation>; 8] = [
        vec![x, y, x, y, x, y],
        vec![x, y, x, y, x, y],
        vec![x, y, x, x, y, x],
        vec![x, y, b0, b1, y, x],
        vec![b1, x, y, y, x, b2],
        vec![b1, x, b1, b2, x, b2],
        vec![b1, b0, x, x, b2, b2],
        vec![b1, b0, b0, b1, b2, b2],
    ];
    Ok(steps.iter().map(|w| product(ctx, w)).collect())
}

/// Replays the derivation at every admissible `i` and checks each step equals the identity.
pub fn verify_remark_derivation(n: usize) -> Result<bool> {
    let id = GroupContext::new(2, n)?.identity();
    for i in 1..=n.saturating_sub(2) {
        if !replay_remark(n, i)?.iter().all(|g| *g == id) {
            return Ok(false);
        }
    }
    Ok(n >= 3)
}

/// Order of the subgroup generated by `gens`, by breadth-first closure under right multiplication.
pub fn closure_order(ctx: GroupContext, gens: &[ColoredPermutation], cap: u64) -> Result<u64> {
    if let Some(g) = gens.iter().find(|g| g.context() != ctx) {
        return Err(Error::ContextMismatch(ctx.r(), ctx.n(), g.context().r(), g.context().n()));
    }
    let mut seen: HashSet<ColoredPermutation> = HashSet::from([ctx.identity()]);
    let mut queue = VecDeque::from([ctx.identity()]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = &x * s;
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        what: "subgroup closure",
                        count: seen.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// The generators `a_1, …, a_{n-1}, b_1, …, b_n` of `ctx`.
pub fn standard_generators(ctx: GroupContext) -> Vec<ColoredPermutation> {
    let (mut a, b) = gens(ctx);
    a.extend(b);
    a
}

/// The generators `a_1, …, a_{n-1}` of the alternating subgroup.
pub fn a_generators(ctx: GroupContext) -> Vec<ColoredPermutation> {
    gens(ctx).0
}
