//! Closed-form meets and joins, the Möbius function and the homotopy type of intervals.
//!
//! Meets and joins split into an `S_n` part and a color part. The `S_n` part is the
//! meet (join) of the absolute values in the right weak order. For the color part,
//! write `vc_σ(j)` for the color carried by value `j` in `σ`. Then
//!
//! ```text
//! vc_meet(j) = min { vc_σ(j) : σ ∈ A, j ∉ M(|meet|, |σ|) }   (min ∅ = r-1)
//! vc_join(j) = max { vc_σ(j) : σ ∈ A, j ∉ M(|σ|, |join|) }   (max ∅ = 0)
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ColoredPermutation, GroupContext};
use crate::oracle::BruteForceOrder;
use crate::order::{leq, up_covers, HasseDiagram, Interval};
use crate::perm::{m_between, sn_weak_join_all, sn_weak_meet_all};

pub use crate::perm::{sn_weak_join, sn_weak_meet};

fn same_context(ctx: GroupContext, set: &[ColoredPermutation]) -> Result<()> {
    match set.iter().find(|g| g.context() != ctx) {
        Some(g) => Err(Error::ContextMismatch(
            ctx.r(),
            ctx.n(),
            g.context().r(),
            g.context().n(),
        )),
        None => Ok(()),
    }
}

/// Meet of an arbitrary family; the empty meet is `μ0`.
pub fn meet_set(ctx: GroupContext, set: &[ColoredPermutation]) -> Result<ColoredPermutation> {
    same_context(ctx, set)?;
    let n = ctx.n();
    let abs = sn_weak_meet_all(n, set.iter().map(|g| g.abs()));
    let mut vc = vec![(ctx.r() - 1) as u8; n];
    for g in set {
        let gained = m_between(&abs, g.abs());
        for (j, c) in g.value_colors().into_iter().enumerate() {
            if !gained.contains(j + 1) {
                vc[j] = vc[j].min(c);
            }
        }
    }
    Ok(ColoredPermutation::from_value_colors(ctx, abs, &vc))
}

/// Join of an arbitrary family; the empty join is the identity.
pub fn join_set(ctx: GroupContext, set: &[ColoredPermutation]) -> Result<ColoredPermutation> {
    same_context(ctx, set)?;
    let n = ctx.n();
    let abs = sn_weak_join_all(n, set.iter().map(|g| g.abs()));
    let mut vc = vec![0u8; n];
    for g in set {
        let gained = m_between(g.abs(), &abs);
        for (j, c) in g.value_colors().into_iter().enumerate() {
            if !gained.contains(j + 1) {
                vc[j] = vc[j].max(c);
            }
        }
    }
    Ok(ColoredPermutation::from_value_colors(ctx, abs, &vc))
}

pub fn meet(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<ColoredPermutation> {
    meet_set(g.context(), &[g.clone(), h.clone()])
}

pub fn join(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<ColoredPermutation> {
    join_set(g.context(), &[g.clone(), h.clone()])
}

/// Elements of the interval covering its bottom.
pub fn atoms(interval: &Interval) -> Vec<ColoredPermutation> {
    interval
        .up_edges(0)
        .map(|e| interval.element(e.to).clone())
        .collect()
}

/// If `h` is the join of a set of atoms of `[g, μ0]`, returns the size of that set.
///
/// Only the atoms lying below `h` can take part, and atom joins are injective, so
/// it is enough to test whether those atoms join to `h`. The empty join is `g`.
pub fn atom_join_size(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<Option<usize>> {
    if !leq(g, h)? {
        return Err(Error::NotComparable {
            lower: g.format(true),
            upper: h.format(true),
        });
    }
    let below: Vec<ColoredPermutation> = up_covers(g)
        .into_iter()
        .map(|(_, a)| a)
        .filter(|a| leq(a, h).expect("same context"))
        .collect();
    let joined = if below.is_empty() {
        g.clone()
    } else {
        join_set(g.context(), &below)?
    };
    Ok((&joined == h).then_some(below.len()))
}

/// `μ(g, h) = (-1)^k` when `h` is the join of `k` atoms of `[g, μ0]`, else 0.
/// Fails with [`Error::NotComparable`] unless `g ⪯ h`.
pub fn mobius(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<i64> {
    Ok(match atom_join_size(g, h)? {
        Some(k) if k % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    })
}

/// Homotopy type of the order complex of an open interval `(g, h)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum HomotopyClass {
    /// The sphere `S^{k-2}`, where `h` is the join of `k` atoms.
    Sphere { atoms: usize },
    Contractible,
    /// The interval has length below 2.
    NotApplicable,
}

impl HomotopyClass {
    /// Sphere dimension `k - 2`.
    pub fn sphere_dimension(self) -> Option<i64> {
        match self {
            HomotopyClass::Sphere { atoms } => Some(atoms as i64 - 2),
            _ => None,
        }
    }
}

impl std::fmt::Display for HomotopyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomotopyClass::Sphere { atoms } => write!(f, "sphere({})", *atoms as i64 - 2),
            HomotopyClass::Contractible => f.write_str("contractible"),
            HomotopyClass::NotApplicable => f.write_str("n/a"),
        }
    }
}

pub fn classify_homotopy(g: &ColoredPermutation, h: &ColoredPermutation) -> Result<HomotopyClass> {
    let k = atom_join_size(g, h)?;
    if h.finv() - g.finv() < 2 {
        return Ok(HomotopyClass::NotApplicable);
    }
    Ok(match k {
        Some(atoms) => HomotopyClass::Sphere { atoms },
        None => HomotopyClass::Contractible,
    })
}

/// Greatest common lower bound by reachability in `hasse`; `None` if it does not exist.
pub fn meet_oracle(
    g: &ColoredPermutation,
    h: &ColoredPermutation,
    hasse: &HasseDiagram,
) -> Option<ColoredPermutation> {
    BruteForceOrder::from_hasse(hasse).meet(g, h)
}

/// Least common upper bound by reachability in `hasse`; `None` if it does not exist.
pub fn join_oracle(
    g: &ColoredPermutation,
    h: &ColoredPermutation,
    hasse: &HasseDiagram,
) -> Option<ColoredPermutation> {
    BruteForceOrder::from_hasse(hasse).join(g, h)
}

/// Möbius function from the zeta recursion over `hasse`.
pub fn mobius_oracle(g: &ColoredPermutation, h: &ColoredPermutation, hasse: &HasseDiagram) -> Result<i64> {
    BruteForceOrder::from_hasse(hasse)
        .mobius(g, h)
        .ok_or_else(|| Error::NotComparable {
            lower: g.format(true),
            upper: h.format(true),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::build_interval;

    fn ctx(r: u32, n: usize) -> GroupContext {
        GroupContext::new(r, n).unwrap()
    }

    #[test]
    fn meet_join_examples_b3() {
        let c = ctx(2, 3);
        let p = |s| c.parse(s).unwrap();
        let (x, y) = (p("21̄3̄"), p("1̄32̄"));
        assert_eq!(meet(&x, &y).unwrap(), p("1̄2̄3̄"));
        assert_eq!(join(&x, &y).unwrap(), p("321̄"));
        assert_eq!(meet(&x, &x).unwrap(), x);
        assert_eq!(join(&x, &c.identity()).unwrap(), x);
    }

    #[test]
    fn meet_join_examples_b2() {
        let c = ctx(2, 2);
        let p = |s| c.parse(s).unwrap();
        assert_eq!(meet(&p("1̄2"), &p("12̄")).unwrap(), c.identity());
        assert_eq!(join_set(c, &[p("1̄2"), p("12̄")]).unwrap(), p("1̄2̄"));
        assert_eq!(meet_set(c, &[]).unwrap(), c.mu0());
        assert_eq!(join_set(c, &[]).unwrap(), c.identity());
        assert!(meet(&c.identity(), &ctx(2, 3).identity()).is_err());
    }

    #[test]
    fn atoms_examples() {
        let c = ctx(2, 2);
        let p = |s| c.parse(s).unwrap();
        let names = |v: Vec<ColoredPermutation>| {
            let mut v: Vec<String> = v.iter().map(|g| g.format(true)).collect();
            v.sort();
            v
        };
        let full = build_interval(&c.identity(), &c.mu0()).unwrap();
        assert_eq!(names(atoms(&full)), names(vec![p("1̄2"), p("12̄")]));
        let single = build_interval(&p("21"), &p("21")).unwrap();
        assert!(atoms(&single).is_empty());
        let upper = build_interval(&p("12̄"), &c.mu0()).unwrap();
        assert_eq!(names(atoms(&upper)), names(vec![p("1̄2̄"), p("21")]));
    }

    #[test]
    fn mobius_examples() {
        let c = ctx(2, 2);
        let p = |s| c.parse(s).unwrap();
        for g in c.enumerate() {
            assert_eq!(mobius(&g, &g).unwrap(), 1);
        }
        assert_eq!(mobius(&c.identity(), &p("1̄2̄")).unwrap(), 1);
        assert_eq!(mobius(&c.identity(), &c.mu0()).unwrap(), 0);
        assert_eq!(mobius(&c.identity(), &p("1̄2")).unwrap(), -1);
        assert!(matches!(
            mobius(&p("1̄2"), &p("12̄")),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(2, 2);
        let hasse = crate::order::build_hasse(c);
        let p = |s| c.parse(s).unwrap();
        assert_eq!(meet_oracle(&c.identity(), &p("21"), &hasse), Some(c.identity()));
        assert_eq!(join_oracle(&p("1̄2"), &p("12̄"), &hasse), Some(p("1̄2̄")));
        assert_eq!(mobius_oracle(&c.identity(), &c.mu0(), &hasse).unwrap(), 0);
        assert_eq!(mobius_oracle(&c.identity(), &p("1̄2"), &hasse).unwrap(), -1);
        assert!(mobius_oracle(&c.mu0(), &c.identity(), &hasse).is_err());
    }

    #[test]
    fn closed_forms_match_oracle() {
        for (r, n) in [(2, 3), (3, 2)] {
            let c = ctx(r, n);
            let o = BruteForceOrder::new(c);
            for g in o.elements() {
                let mu = o.mobius_from(g);
                for h in o.elements() {
                    assert_eq!(Some(meet(g, h).unwrap()), o.meet(g, h), "meet {g} {h}");
                    assert_eq!(Some(join(g, h).unwrap()), o.join(g, h), "join {g} {h}");
                    if let Some(&m) = mu.get(h) {
                        assert_eq!(mobius(g, h).unwrap(), m, "mobius {g} {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn no_complement_in_b2() {
        let c = ctx(2, 2);
        let x = c.parse("12̄").unwrap();
        assert!(!c.enumerate().iter().any(|y| {
            meet(&x, y).unwrap() == c.identity() && join(&x, y).unwrap() == c.mu0()
        }));
    }

    #[test]
    fn sn_weak_examples() {
        let p = |v: &[u8]| crate::perm::Perm::from_one_line(v.to_vec()).unwrap();
        assert_eq!(sn_weak_meet(&p(&[2, 1, 3]), &p(&[2, 3, 1])), p(&[2, 1, 3]));
        assert_eq!(sn_weak_join(&p(&[2, 1, 3]), &p(&[3, 2, 1])), p(&[3, 2, 1]));
    }

    #[test]
    fn homotopy_examples() {
        let c = ctx(2, 2);
        let p = |s| c.parse(s).unwrap();
        let sphere = classify_homotopy(&c.identity(), &p("1̄2̄")).unwrap();
        assert_eq!(sphere, HomotopyClass::Sphere { atoms: 2 });
        assert_eq!(sphere.sphere_dimension(), Some(0));
        assert_eq!(
            classify_homotopy(&c.identity(), &c.mu0()).unwrap(),
            HomotopyClass::Contractible
        );
        assert_eq!(
            classify_homotopy(&c.identity(), &p("1̄2")).unwrap(),
            HomotopyClass::NotApplicable
        );
        assert!(classify_homotopy(&c.mu0(), &c.identity()).is_err());
    }
}
