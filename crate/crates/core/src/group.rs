//! The wreath product `G(r, n) = Z_r ≀ S_n` as colored permutations.
//!
//! An element is stored by its window: position `i` carries the absolute value
//! `|π(i)|` and the color `c_i ∈ {0, …, r-1}`. The product is
//!
//! ```text
//! ((c_1..c_n), σ) · ((d_1..d_n), τ) = ((c_{τ(1)} + d_1, …, c_{τ(n)} + d_n), στ)
//! ```
//!
//! so colors are attached before the permutation is applied. For `r = 2` this is
//! composition of signed permutations, with color 1 displayed as a minus sign.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Perm, ValueSet, MAX_N};

pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;
pub const MAX_R: u32 = 255;

/// The parameters `(r, n)` of `G(r, n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct GroupContext {
    r: u32,
    n: usize,
}

impl GroupContext {
    /// Validates `(r, n)` against the default element cap.
    pub fn new(r: u32, n: usize) -> Result<Self> {
        Self::with_cap(r, n, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(r: u32, n: usize, cap: u64) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidContext {
            r: r as u64,
            n: n as u64,
            reason: reason.to_string(),
        };
        if r == 0 || r > MAX_R {
            return Err(invalid(&format!("r must lie in 1..={MAX_R}")));
        }
        if n == 0 || n > MAX_N {
            return Err(invalid(&format!("n must lie in 1..={MAX_N}")));
        }
        let order = group_order(r, n);
        if order > cap as u128 {
            return Err(Error::CapExceeded {
                what: "group",
                count: order,
                cap: cap as u128,
            });
        }
        Ok(GroupContext { r, n })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r^n · n!`.
    pub fn order(&self) -> u64 {
        group_order(self.r, self.n) as u64
    }

    /// `finv(μ0) = r·C(n,2) + (r-1)·n`.
    pub fn max_finv(&self) -> usize {
        let n = self.n;
        self.r as usize * n * (n - 1) / 2 + (self.r as usize - 1) * n
    }

    pub fn identity(&self) -> ColoredPermutation {
        ColoredPermutation {
            ctx: *self,
            abs: Perm::identity(self.n),
            colors: vec![0; self.n],
        }
    }

    /// The maximum of the flag weak order: colors all `r-1`, permutation `[n, …, 1]`.
    pub fn mu0(&self) -> ColoredPermutation {
        ColoredPermutation {
            ctx: *self,
            abs: Perm::longest(self.n),
            colors: vec![(self.r - 1) as u8; self.n],
        }
    }

    /// `a_i = (d_i, s_i)` and `b_i = (d_i, id)`.
    pub fn generator(&self, label: GeneratorLabel) -> Result<ColoredPermutation> {
        if !label.fits(self.n) {
            return Err(Error::GeneratorOutOfRange {
                label: label.to_string(),
                n: self.n,
            });
        }
        let mut colors = vec![0u8; self.n];
        let i = label.index;
        colors[i - 1] = 1 % self.r as u8;
        let abs = match label.kind {
            GenKind::A => Perm::identity(self.n).swap_adjacent(i),
            GenKind::B => Perm::identity(self.n),
        };
        Ok(ColoredPermutation {
            ctx: *self,
            abs,
            colors,
        })
    }

    /// `S_{r,n}` in label order: `a_1, …, a_{n-1}, b_1, …, b_n`.
    pub fn labels(&self) -> Vec<GeneratorLabel> {
        (1..self.n)
            .map(GeneratorLabel::a)
            .chain((1..=self.n).map(GeneratorLabel::b))
            .collect()
    }

    /// All elements, ordered lexicographically by absolute values and then by colors.
    pub fn enumerate(&self) -> Vec<ColoredPermutation> {
        let perms = Perm::all(self.n);
        let colorings: Vec<Vec<u8>> = (0..self.n)
            .map(|_| 0..self.r as u8)
            .multi_cartesian_product()
            .collect();
        let mut out = Vec::with_capacity(self.order() as usize);
        for p in &perms {
            for c in &colorings {
                out.push(ColoredPermutation {
                    ctx: *self,
                    abs: p.clone(),
                    colors: c.clone(),
                });
            }
        }
        out
    }

    /// Parses an element string; see [`ColoredPermutation::parse`].
    pub fn parse(&self, s: &str) -> Result<ColoredPermutation> {
        ColoredPermutation::parse(*self, s)
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.r, self.n)
    }
}

fn group_order(r: u32, n: usize) -> u128 {
    let mut order: u128 = 1;
    for i in 1..=n as u128 {
        order = order.saturating_mul(i).saturating_mul(r as u128);
    }
    order
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum GenKind {
    A,
    B,
}

/// A generator `a_i` (`1 <= i < n`) or `b_i` (`1 <= i <= n`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GeneratorLabel {
    pub kind: GenKind,
    pub index: usize,
}

impl GeneratorLabel {
    pub const fn a(index: usize) -> Self {
        GeneratorLabel {
            kind: GenKind::A,
            index,
        }
    }

    pub const fn b(index: usize) -> Self {
        GeneratorLabel {
            kind: GenKind::B,
            index,
        }
    }

    pub fn fits(&self, n: usize) -> bool {
        match self.kind {
            GenKind::A => self.index >= 1 && self.index < n,
            GenKind::B => self.index >= 1 && self.index <= n,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::A => 'a',
            GenKind::B => 'b',
        };
        write!(f, "{k}{}", self.index)
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            input: s.to_string(),
            reason: "expected a generator like a1 or b2".into(),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('a') => GenKind::A,
            Some('b') => GenKind::B,
            _ => return Err(err()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| err())?;
        Ok(GeneratorLabel { kind, index })
    }
}

impl Serialize for GeneratorLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Per-element statistics.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PermStats {
    /// `Inv(|π|)` as position pairs.
    pub inv_set: Vec<(usize, usize)>,
    pub inv: usize,
    /// `D(|π|)`.
    pub descent_set: Vec<usize>,
    /// `Σ c_i` with colors read in `{0, …, r-1}`.
    pub color_sum: usize,
    /// `r · inv + color_sum`.
    pub finv: usize,
}

/// An element of `G(r, n)`.
///
/// The derived ordering compares absolute values first and colors second, which
/// is the enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPermutation {
    ctx: GroupContext,
    abs: Perm,
    colors: Vec<u8>,
}

impl ColoredPermutation {
    /// Builds an element from its window of `(|π(i)|, c_i)` pairs.
    pub fn from_window(ctx: GroupContext, window: &[(usize, u32)]) -> Result<Self> {
        let bad = |reason: String| Error::Parse {
            input: format!("{window:?}"),
            reason,
        };
        if window.len() != ctx.n {
            return Err(bad(format!("expected {} entries", ctx.n)));
        }
        if let Some(&(_, c)) = window.iter().find(|(_, c)| *c >= ctx.r) {
            return Err(bad(format!("color {c} is not below r={}", ctx.r)));
        }
        if window.iter().any(|&(v, _)| v == 0 || v > ctx.n) {
            return Err(bad("absolute values must lie in 1..=n".into()));
        }
        let abs = Perm::from_one_line(window.iter().map(|&(v, _)| v as u8).collect())
            .map_err(|_| bad("absolute values do not form a permutation".into()))?;
        Ok(ColoredPermutation {
            ctx,
            abs,
            colors: window.iter().map(|&(_, c)| c as u8).collect(),
        })
    }

    /// Builds an element from `|π|` and the colors `c_1, …, c_n`.
    pub fn from_parts(ctx: GroupContext, abs: Perm, colors: Vec<u8>) -> Result<Self> {
        if abs.len() != ctx.n || colors.len() != ctx.n {
            return Err(Error::Precondition(format!("expected {} letters", ctx.n)));
        }
        if colors.iter().any(|&c| c as u32 >= ctx.r) {
            return Err(Error::Precondition(format!("colors must be below r={}", ctx.r)));
        }
        Ok(ColoredPermutation { ctx, abs, colors })
    }

    /// Builds an element from `|π|` and the color attached to each *value*
    /// (`value_colors[j-1] = c_{|π|⁻¹(j)}`), the inverse of [`Self::value_colors`].
    pub fn from_value_colors(ctx: GroupContext, abs: Perm, value_colors: &[u8]) -> Self {
        let colors = abs.as_slice().iter().map(|&v| value_colors[v as usize - 1]).collect();
        ColoredPermutation { ctx, abs, colors }
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    /// `|π|`.
    pub fn abs(&self) -> &Perm {
        &self.abs
    }

    /// `c_1, …, c_n`.
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn window(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.abs
            .as_slice()
            .iter()
            .zip(&self.colors)
            .map(|(&v, &c)| (v as usize, c as u32))
    }

    /// Color carried by each value `j`, i.e. `-c_j(π⁻¹)` read in `{0, …, r-1}`.
    pub fn value_colors(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.ctx.n];
        for (&v, &c) in self.abs.as_slice().iter().zip(&self.colors) {
            out[v as usize - 1] = c;
        }
        out
    }

    /// Positions with nonzero color; this is `Neg(π)` when `r = 2`.
    pub fn negative_positions(&self) -> ValueSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                self.ctx.r, self.ctx.n, other.ctx.r, other.ctx.n,
            ));
        }
        Ok(())
    }

    /// The group product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let r = self.ctx.r;
        let tau = other.abs.as_slice();
        let colors = tau
            .iter()
            .zip(&other.colors)
            .map(|(&t, &d)| ((self.colors[t as usize - 1] as u32 + d as u32) % r) as u8)
            .collect();
        Ok(ColoredPermutation {
            ctx: self.ctx,
            abs: self.abs.compose(&other.abs),
            colors,
        })
    }

    pub fn inverse(&self) -> Self {
        let r = self.ctx.r;
        let inv = self.abs.inverse();
        let colors = inv
            .as_slice()
            .iter()
            .map(|&p| ((r - self.colors[p as usize - 1] as u32) % r) as u8)
            .collect();
        ColoredPermutation {
            ctx: self.ctx,
            abs: inv,
            colors,
        }
    }

    /// `self · s` computed in place on the window.
    ///
    /// Panics if `label` is out of range for this group.
    pub fn right_multiply(&self, label: GeneratorLabel) -> Self {
        assert!(label.fits(self.ctx.n), "generator {label} out of range");
        let r = self.ctx.r as u8;
        let i = label.index - 1;
        let mut out = self.clone();
        match label.kind {
            GenKind::B => out.colors[i] = (out.colors[i] + 1) % r,
            GenKind::A => {
                out.abs = self.abs.swap_adjacent(label.index);
                out.colors[i] = (self.colors[i + 1] + 1) % r;
                out.colors[i + 1] = self.colors[i];
            }
        }
        out
    }

    pub fn inv(&self) -> usize {
        self.abs.inv()
    }

    pub fn color_sum(&self) -> usize {
        self.colors.iter().map(|&c| c as usize).sum()
    }

    /// Flag inversion number `r · inv(|π|) + Σ c_i`.
    pub fn finv(&self) -> usize {
        self.ctx.r as usize * self.inv() + self.color_sum()
    }

    pub fn stats(&self) -> PermStats {
        let inv_set = self.abs.inversions();
        let inv = inv_set.len();
        let color_sum = self.color_sum();
        PermStats {
            inv,
            descent_set: self.abs.descents(),
            color_sum,
            finv: self.ctx.r as usize * inv + color_sum,
            inv_set,
        }
    }

    /// Negates every color modulo `r`.
    pub fn bar(&self) -> Self {
        let r = self.ctx.r;
        ColoredPermutation {
            ctx: self.ctx,
            abs: self.abs.clone(),
            colors: self.colors.iter().map(|&c| ((r - c as u32) % r) as u8).collect(),
        }
    }

    /// The order-reversing involution `π ↦ π̄ · μ0`.
    pub fn dual(&self) -> Self {
        self.bar()
            .compose(&self.ctx.mu0())
            .expect("same context")
    }

    /// Parses an element of `ctx`.
    ///
    /// Accepted forms:
    /// * general: `2^1,1^0,3^2` (value `^` color, comma separated; a bare value has color 0);
    /// * signed, for `r <= 2`: `-2,1,3`;
    /// * compact, for `n <= 9`: `-213` or `2̄13` (a combining macron marks color 1).
    pub fn parse(ctx: GroupContext, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let entries: Vec<(usize, u32)> = if s.contains(',') || s.contains('^') {
            s.split(',')
                .map(|tok| parse_entry(tok.trim(), ctx.r).ok_or_else(|| bad("malformed entry")))
                .collect::<Result<_>>()?
        } else {
            parse_compact(s, ctx.r).ok_or_else(|| bad("malformed compact element"))?
        };
        if entries.len() != ctx.n {
            return Err(bad(&format!("expected {} entries, found {}", ctx.n, entries.len())));
        }
        Self::from_window(ctx, &entries).map_err(|e| match e {
            Error::Parse { reason, .. } => bad(&reason),
            other => other,
        })
    }

    /// Signed one-line notation (`-2,1,3`), available when `r <= 2`.
    pub fn to_signed_string(&self) -> Option<String> {
        (self.ctx.r <= 2).then(|| {
            self.window()
                .map(|(v, c)| if c == 1 { format!("-{v}") } else { v.to_string() })
                .join(",")
        })
    }

    /// Signed notation when requested and available, general notation otherwise.
    pub fn format(&self, signed: bool) -> String {
        if signed {
            if let Some(s) = self.to_signed_string() {
                return s;
            }
        }
        self.to_string()
    }
}

fn parse_entry(tok: &str, r: u32) -> Option<(usize, u32)> {
    if let Some((v, c)) = tok.split_once('^') {
        return Some((v.trim().parse().ok()?, c.trim().parse().ok()?));
    }
    let v: i64 = tok.parse().ok()?;
    if v < 0 {
        if r > 2 {
            return None;
        }
        Some(((-v) as usize, 1))
    } else {
        Some((v as usize, 0))
    }
}

fn parse_compact(s: &str, r: u32) -> Option<Vec<(usize, u32)>> {
    let mut out: Vec<(usize, u32)> = Vec::new();
    let mut minus = false;
    for ch in s.chars() {
        match ch {
            '-' if !minus => minus = true,
            '\u{0304}' | '\u{0305}' => {
                let last = out.last_mut()?;
                if last.1 != 0 || r > 2 {
                    return None;
                }
                last.1 = 1;
            }
            d if d.is_ascii_digit() && d != '0' => {
                if minus && r > 2 {
                    return None;
                }
                out.push((d.to_digit(10)? as usize, minus as u32));
                minus = false;
            }
            _ => return None,
        }
    }
    (!minus && !out.is_empty()).then_some(out)
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.window().map(|(v, c)| format!("{v}^{c}")).join(",");
        f.write_str(&s)
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ctx, self.format(true))
    }
}

/// Group product. Panics if the operands come from different groups.
impl Mul for &ColoredPermutation {
    type Output = ColoredPermutation;

    fn mul(self, rhs: &ColoredPermutation) -> ColoredPermutation {
        self.compose(rhs).expect("product of elements from different groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize) -> GroupContext {
        GroupContext::new(2, n).unwrap()
    }

    #[test]
    fn identity_windows() {
        assert_eq!(b(2).identity().to_signed_string().unwrap(), "1,2");
        let g31 = GroupContext::new(3, 1).unwrap();
        assert_eq!(g31.identity().window().collect::<Vec<_>>(), vec![(1, 0)]);
        assert_eq!(GroupContext::new(1, 3).unwrap().identity().to_string(), "1^0,2^0,3^0");
        assert_eq!(b(4).identity().finv(), 0);
    }

    #[test]
    fn context_validation() {
        assert!(GroupContext::new(0, 2).is_err());
        assert!(GroupContext::new(2, 0).is_err());
        assert!(matches!(
            GroupContext::new(2, 10),
            Err(Error::CapExceeded { .. })
        ));
        assert!(GroupContext::with_cap(2, 10, u64::MAX).is_ok());
        assert_eq!(GroupContext::new(3, 4).unwrap().order(), 81 * 24);
    }

    #[test]
    fn compose_examples() {
        let ctx = b(2);
        let a1 = ctx.generator(GeneratorLabel::a(1)).unwrap();
        let b1 = ctx.generator(GeneratorLabel::b(1)).unwrap();
        let b2 = ctx.generator(GeneratorLabel::b(2)).unwrap();
        assert_eq!(&a1 * &a1, &b1 * &b2);
        assert_eq!((&a1 * &a1).to_signed_string().unwrap(), "-1,-2");
        let x = ctx.parse("2̄1").unwrap();
        let y = ctx.parse("21̄").unwrap();
        assert_eq!(&x * &y, ctx.identity());
        assert_eq!(&ctx.identity() * &x, x);
        assert!(x.compose(&b(3).identity()).is_err());
    }

    #[test]
    fn inverse_examples() {
        let ctx = b(2);
        assert_eq!(ctx.parse("2̄1").unwrap().inverse(), ctx.parse("21̄").unwrap());
        assert_eq!(ctx.identity().inverse(), ctx.identity());
        for i in 1..=2 {
            let bi = ctx.generator(GeneratorLabel::b(i)).unwrap();
            assert_eq!(bi.inverse(), bi);
        }
    }

    #[test]
    fn stats_examples() {
        let ctx = b(2);
        let s = ctx.parse("2̄1").unwrap().stats();
        assert_eq!((s.inv, s.color_sum, s.finv), (1, 1, 3));
        let s = ctx.identity().stats();
        assert_eq!((s.inv, s.color_sum, s.finv), (0, 0, 0));
        assert!(s.inv_set.is_empty() && s.descent_set.is_empty());
        for n in 1..=5 {
            assert_eq!(b(n).mu0().finv(), n * n);
            assert_eq!(b(n).max_finv(), n * n);
        }
    }

    #[test]
    fn generator_examples() {
        let ctx = b(3);
        assert_eq!(ctx.generator(GeneratorLabel::a(1)).unwrap(), ctx.parse("2̄13").unwrap());
        assert_eq!(ctx.generator(GeneratorLabel::b(2)).unwrap(), ctx.parse("12̄3").unwrap());
        assert!(ctx.generator(GeneratorLabel::a(3)).is_err());
        assert!(ctx.generator(GeneratorLabel::b(0)).is_err());

        let g32 = GroupContext::new(3, 2).unwrap();
        let b1 = g32.generator(GeneratorLabel::b(1)).unwrap();
        let b1_2 = &b1 * &b1;
        assert_ne!(b1_2, g32.identity());
        assert_eq!(&b1_2 * &b1, g32.identity());
    }

    #[test]
    fn right_multiply_examples() {
        let ctx = b(2);
        let x = ctx.parse("12̄").unwrap();
        assert_eq!(x.right_multiply(GeneratorLabel::a(1)), ctx.parse("21").unwrap());
        assert_eq!(
            ctx.identity().right_multiply(GeneratorLabel::b(1)),
            ctx.parse("1̄2").unwrap()
        );
        let g31 = GroupContext::new(3, 1).unwrap();
        let twice = g31
            .identity()
            .right_multiply(GeneratorLabel::b(1))
            .right_multiply(GeneratorLabel::b(1));
        assert_eq!(twice.colors(), &[2]);
    }

    #[test]
    fn right_multiply_matches_compose_on_b3() {
        let ctx = b(3);
        for g in ctx.enumerate() {
            for s in ctx.labels() {
                assert_eq!(g.right_multiply(s), &g * &ctx.generator(s).unwrap());
            }
        }
    }

    #[test]
    fn dual_examples() {
        let ctx = b(2);
        assert_eq!(ctx.identity().dual(), ctx.mu0());
        assert_eq!(ctx.mu0(), ctx.parse("2̄1̄").unwrap());
        let d = ctx.parse("1̄2").unwrap().dual();
        assert_eq!(d, ctx.parse("2̄1").unwrap());
        assert_eq!(d.finv(), 3);
        let g32 = GroupContext::new(3, 2).unwrap();
        for g in g32.enumerate() {
            assert_eq!(g.dual().dual(), g);
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(b(2).enumerate().len(), 8);
        assert_eq!(GroupContext::new(1, 3).unwrap().enumerate().len(), 6);
        let all = GroupContext::new(3, 2).unwrap().enumerate();
        assert_eq!(all.len(), 18);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].to_string(), "1^0,2^0");
        assert_eq!(all[1].to_string(), "1^0,2^1");
    }

    #[test]
    fn signed_inverse_is_functional_inverse() {
        let ctx = b(3);
        let eval = |g: &ColoredPermutation, x: i64| -> i64 {
            let (v, c) = g.window().nth(x.unsigned_abs() as usize - 1).unwrap();
            let y = if c == 1 { -(v as i64) } else { v as i64 };
            if x < 0 { -y } else { y }
        };
        for g in ctx.enumerate() {
            let h = g.inverse();
            for x in [-3i64, -2, -1, 1, 2, 3] {
                assert_eq!(eval(&h, eval(&g, x)), x);
                // composition of functions agrees with the product law
                let gh = &g * &h;
                assert_eq!(eval(&gh, x), eval(&g, eval(&h, x)));
            }
        }
    }

    #[test]
    fn parsing_forms() {
        let ctx = b(3);
        let x = ctx.parse("-2,1,3").unwrap();
        assert_eq!(x, ctx.parse("2^1,1^0,3^0").unwrap());
        assert_eq!(x, ctx.parse("-213").unwrap());
        assert_eq!(x, ctx.parse("2̄13").unwrap());
        assert_eq!(x.format(true), "-2,1,3");
        assert_eq!(x.format(false), "2^1,1^0,3^0");

        let g3 = GroupContext::new(3, 3).unwrap();
        assert!(g3.parse("2^3,1^0,3^0").is_err());
        assert!(g3.parse("-2,1,3").is_err());
        assert!(g3.parse("2^1,2^0,3^0").is_err());
        assert!(ctx.parse("1,2").is_err());
        assert!(ctx.parse("1,2,4").is_err());
        assert!(ctx.parse("").is_err());
        assert_eq!(g3.parse("2^2,1^0,3^1").unwrap().to_string(), "2^2,1^0,3^1");
    }

    #[test]
    fn label_parsing() {
        assert_eq!("a3".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::a(3));
        assert_eq!(GeneratorLabel::b(12).to_string(), "b12");
        assert!("c1".parse::<GeneratorLabel>().is_err());
    }
}
