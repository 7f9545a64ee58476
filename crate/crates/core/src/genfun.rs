//! Exact polynomials in `q` and `t`, and the distribution identities for `finv` and `wdes`.
//!
//! Coefficients are `i64` with checked arithmetic; an overflow aborts with a panic.
//! The closed-form sides substitute rational expressions into `E_n` and `S_n`.
//! Since both have `t`-degree at most `n - 1`, each summand
//! `e_k · x^k · (1 + y)^{n-k}` is already a polynomial, so no rational type is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use rayon::prelude::*;
use serde::Serialize;

use crate::group::GroupContext;
use crate::order::wdes;
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Var {
    Q,
    T,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
        }
    }
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// A univariate polynomial with dense coefficients, index = degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn from_coeffs(var: Var, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: vec![] }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Var, coeff: i64, degree: usize) -> Self {
        let mut c = vec![0; degree + 1];
        c[degree] = coeff;
        Self::from_coeffs(var, c)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| checked_add(checked_mul(acc, x), c))
    }

    /// Reinterprets the polynomial in another variable.
    pub fn rename(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Whether the coefficient sequence is palindromic.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Whether the coefficient sequence rises weakly and then falls weakly.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let peak = (1..c.len()).find(|&i| c[i] < c[i - 1]).unwrap_or(c.len());
        c[peak.saturating_sub(1)..].windows(2).all(|w| w[0] >= w[1])
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..len).map(|i| checked_add(self.coeff(i), rhs.coeff(i))).collect();
        UniPoly::from_coeffs(self.var, c)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut c = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = checked_add(c[i + j], checked_mul(a, b));
            }
        }
        UniPoly::from_coeffs(self.var, c)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: i64, factors: &[(Var, usize)]) -> fmt::Result {
    let sign = if coeff < 0 { "-" } else { "+" };
    if first {
        if coeff < 0 {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let mag = coeff.unsigned_abs();
    let vars: Vec<String> = factors
        .iter()
        .filter(|(_, d)| *d > 0)
        .map(|(v, d)| if *d == 1 { v.name().to_string() } else { format!("{}^{d}", v.name()) })
        .collect();
    if vars.is_empty() {
        write!(f, "{mag}")
    } else if mag == 1 {
        f.write_str(&vars.join("*"))
    } else {
        write!(f, "{mag}*{}", vars.join("*"))
    }
}

/// Ascending-degree form, e.g. `1 + 4*t + 3*t^2`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                write_term(f, first, c, &[(self.var, d)])?;
                first = false;
            }
        }
        Ok(())
    }
}

/// A polynomial in `q` and `t`, keyed by `(deg_q, deg_t)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), i64>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, deg_q: usize, deg_t: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, deg_q, deg_t);
        p
    }

    /// Lifts a polynomial in `q` or `t`.
    pub fn from_uni(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (d, &c) in p.coeffs().iter().enumerate() {
            match p.var() {
                Var::Q => out.add_term(c, d, 0),
                Var::T => out.add_term(c, 0, d),
            }
        }
        out
    }

    pub fn add_term(&mut self, coeff: i64, deg_q: usize, deg_t: usize) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((deg_q, deg_t)).or_insert(0);
        *e = checked_add(*e, coeff);
        if *e == 0 {
            self.terms.remove(&(deg_q, deg_t));
        }
    }

    pub fn coeff(&self, deg_q: usize, deg_t: usize) -> i64 {
        self.terms.get(&(deg_q, deg_t)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q := 1`.
    pub fn at_q_one(&self) -> UniPoly {
        let deg = self.terms.keys().map(|&(_, t)| t).max().map_or(0, |d| d + 1);
        let mut c = vec![0i64; deg];
        for (&(_, t), &v) in &self.terms {
            c[t] = checked_add(c[t], v);
        }
        UniPoly::from_coeffs(Var::T, c)
    }

    /// Substitutes `t := 1`.
    pub fn at_t_one(&self) -> UniPoly {
        let deg = self.terms.keys().map(|&(q, _)| q).max().map_or(0, |d| d + 1);
        let mut c = vec![0i64; deg];
        for (&(q, _), &v) in &self.terms {
            c[q] = checked_add(c[q], v);
        }
        UniPoly::from_coeffs(Var::Q, c)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((q, t), c) in rhs.terms() {
            out.add_term(c, q, t);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((q1, t1), a) in self.terms() {
            for ((q2, t2), b) in rhs.terms() {
                out.add_term(checked_mul(a, b), q1 + q2, t1 + t2);
            }
        }
        out
    }
}

/// Terms sorted by `(deg_q, deg_t)`, e.g. `1 + q*t + 2*q^2*t`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((q, t), c)) in self.terms().enumerate() {
            write_term(f, i == 0, c, &[(Var::Q, q), (Var::T, t)])?;
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 3]> = self
            .terms()
            .map(|((q, t), c)| [q as i64, t as i64, c])
            .collect();
        rows.serialize(s)
    }
}

/// `[m]_q = 1 + q + … + q^{m-1}`; `[0]_q = 0`.
pub fn q_int(m: usize) -> UniPoly {
    UniPoly::from_coeffs(Var::Q, vec![1; m])
}

/// `∏_{i=1}^n [r·i]_q`.
pub fn prod_q_int(r: u32, n: usize) -> UniPoly {
    (1..=n).fold(UniPoly::one(Var::Q), |acc, i| &acc * &q_int(r as usize * i))
}

/// `Σ_{π ∈ G(r,n)} q^{finv(π)}` by enumeration.
pub fn finv_genfun(ctx: GroupContext) -> UniPoly {
    let mut c = vec![0i64; ctx.max_finv() + 1];
    for g in ctx.enumerate() {
        c[g.finv()] += 1;
    }
    UniPoly::from_coeffs(Var::Q, c)
}

/// Eulerian polynomial `E_n(t) = Σ_{v ∈ S_n} t^{des(v)}`.
pub fn eulerian(n: usize) -> UniPoly {
    let mut c = vec![0i64; n.max(1)];
    for v in Perm::all(n) {
        c[v.des()] += 1;
    }
    UniPoly::from_coeffs(Var::T, c)
}

/// `S_n(q, t) = Σ_{v ∈ S_n} q^{inv(v)} t^{des(v)}`.
pub fn sn_qt(n: usize) -> BiPoly {
    let mut out = BiPoly::zero();
    for v in Perm::all(n) {
        out.add_term(1, v.inv(), v.des());
    }
    out
}

/// `Σ_{π ∈ G(r,n)} t^{wdes(π)}` by enumeration, with `wdes` counted as down-covers.
pub fn wdes_genfun(ctx: GroupContext) -> UniPoly {
    let counts = ctx
        .enumerate()
        .par_iter()
        .map(|g| {
            let mut c = vec![0i64; ctx.n() + 1];
            c[wdes(g)] += 1;
            c
        })
        .reduce(
            || vec![0i64; ctx.n() + 1],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    UniPoly::from_coeffs(Var::T, counts)
}

/// `(1 + (r-1)t)^n · E_n(rt / (1 + (r-1)t))`, expanded.
pub fn wdes_closed_form(r: u32, n: usize) -> UniPoly {
    let r = r as i64;
    let rt = UniPoly::monomial(Var::T, r, 1);
    let base = UniPoly::from_coeffs(Var::T, vec![1, r - 1]);
    let mut out = UniPoly::zero(Var::T);
    for (k, &e) in eulerian(n).coeffs().iter().enumerate() {
        let term = &(&UniPoly::monomial(Var::T, e, 0) * &rt.pow(k)) * &base.pow(n - k);
        out = &out + &term;
    }
    out
}

pub fn check_wdes_identity(ctx: GroupContext) -> bool {
    wdes_genfun(ctx) == wdes_closed_form(ctx.r(), ctx.n())
}

/// `Σ_{π ∈ G(r,n)} q^{finv(π)} t^{wdes(π)}` by enumeration.
pub fn bivariate_genfun(ctx: GroupContext) -> BiPoly {
    ctx.enumerate()
        .par_iter()
        .map(|g| BiPoly::monomial(1, g.finv(), wdes(g)))
        .reduce(BiPoly::zero, |a, b| &a + &b)
}

/// `(1 + [r-1]_q q t)^n · S_n(q^r, [r]_q t / (1 + [r-1]_q q t))`, expanded.
pub fn bivariate_closed_form(r: u32, n: usize) -> BiPoly {
    let r = r as usize;
    let t = BiPoly::monomial(1, 0, 1);
    let q = BiPoly::monomial(1, 1, 0);
    let numer = &BiPoly::from_uni(&q_int(r)) * &t;
    let base = &BiPoly::one() + &(&(&BiPoly::from_uni(&q_int(r - 1)) * &q) * &t);
    let mut out = BiPoly::zero();
    for ((i, k), s) in sn_qt(n).terms() {
        let term = &(&BiPoly::monomial(s, r * i, 0) * &numer.pow(k)) * &base.pow(n - k);
        out = &out + &term;
    }
    out
}

pub fn check_bivariate_identity(ctx: GroupContext) -> bool {
    bivariate_genfun(ctx) == bivariate_closed_form(ctx.r(), ctx.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(r: u32, n: usize) -> GroupContext {
        GroupContext::new(r, n).unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1).coeffs(), &[1]);
        assert!(q_int(0).is_zero());
        assert_eq!(prod_q_int(2, 2).coeffs(), &[1, 2, 2, 2, 1]);
        assert_eq!(prod_q_int(3, 1).coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn finv_distribution_examples() {
        assert_eq!(finv_genfun(ctx(2, 2)).coeffs(), &[1, 2, 2, 2, 1]);
        assert_eq!(finv_genfun(ctx(1, 2)).coeffs(), &[1, 1]);
        assert_eq!(finv_genfun(ctx(2, 3)).coeffs(), &[1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(1).coeffs(), &[1]);
        assert_eq!(eulerian(2).coeffs(), &[1, 1]);
        assert_eq!(eulerian(3).coeffs(), &[1, 4, 1]);
        assert_eq!(eulerian(4).coeffs(), &[1, 11, 11, 1]);
        assert_eq!(sn_qt(3).at_q_one(), eulerian(3));
    }

    #[test]
    fn wdes_examples() {
        assert_eq!(wdes_genfun(ctx(2, 2)).coeffs(), &[1, 4, 3]);
        assert_eq!(wdes_closed_form(2, 2).coeffs(), &[1, 4, 3]);
        for n in 1..=4 {
            assert_eq!(wdes_genfun(ctx(1, n)), eulerian(n));
        }
        assert!(check_wdes_identity(ctx(3, 2)));
    }

    #[test]
    fn bivariate_examples() {
        let b1 = bivariate_genfun(ctx(2, 1));
        assert_eq!(b1, &BiPoly::one() + &BiPoly::monomial(1, 1, 1));
        assert_eq!(bivariate_closed_form(2, 1), b1);
        assert_eq!(bivariate_genfun(ctx(1, 3)), sn_qt(3));
        assert!(check_bivariate_identity(ctx(2, 3)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(prod_q_int(2, 2).to_string(), "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
        assert_eq!(wdes_genfun(ctx(2, 2)).to_string(), "1 + 4*t + 3*t^2");
        assert_eq!(UniPoly::from_coeffs(Var::Q, vec![0, -1, 2]).to_string(), "-q + 2*q^2");
        assert_eq!(bivariate_genfun(ctx(2, 1)).to_string(), "1 + q*t");
        assert_eq!(BiPoly::monomial(3, 2, 1).to_string(), "3*q^2*t");
        assert_eq!(UniPoly::zero(Var::T).to_string(), "0");
    }

    #[test]
    fn marginals() {
        let c = ctx(3, 2);
        let biv = bivariate_genfun(c);
        assert_eq!(biv.at_q_one(), wdes_genfun(c));
        assert_eq!(biv.at_t_one(), finv_genfun(c));
        assert_eq!(wdes_genfun(c).eval(1), c.order() as i64);
    }

    #[test]
    fn shape_predicates() {
        assert!(prod_q_int(2, 3).is_symmetric());
        assert!(prod_q_int(2, 3).is_unimodal());
        assert!(!UniPoly::from_coeffs(Var::Q, vec![1, 0, 1]).is_unimodal());
        assert!(!UniPoly::from_coeffs(Var::Q, vec![1, 2]).is_symmetric());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let big = UniPoly::monomial(Var::Q, i64::MAX / 2 + 1, 0);
        let _ = &big + &big;
    }
}
