use proptest::prelude::*;

use flagweak::chains::{tits_moves, GeneratorWord};
use flagweak::checks::wdes_by_sets;
use flagweak::lattice::{join, meet};
use flagweak::order::{down_covers, leq, up_covers, wdes};
use flagweak::{ColoredPermutation, GroupContext};

fn element(ctx: GroupContext) -> impl Strategy<Value = ColoredPermutation> {
    let n = ctx.n();
    let values: Vec<usize> = (1..=n).collect();
    (Just(values).prop_shuffle(), prop::collection::vec(0..ctx.r(), n)).prop_map(move |(v, c)| {
        let window: Vec<(usize, u32)> = v.into_iter().zip(c).collect();
        ColoredPermutation::from_window(ctx, &window).unwrap()
    })
}

fn context() -> impl Strategy<Value = GroupContext> {
    (1u32..=4, 1usize..=6).prop_map(|(r, n)| GroupContext::new(r, n).unwrap())
}

fn triple() -> impl Strategy<Value = (ColoredPermutation, ColoredPermutation, ColoredPermutation)> {
    context().prop_flat_map(|c| (element(c), element(c), element(c)))
}

fn pair() -> impl Strategy<Value = (ColoredPermutation, ColoredPermutation)> {
    context().prop_flat_map(|c| (element(c), element(c)))
}

/// A maximal chain of `[g, μ0]` chosen by the given cover indices.
fn chain_word(g: &ColoredPermutation, picks: &[usize]) -> GeneratorWord {
    let mut cur = g.clone();
    let mut letters = Vec::new();
    let mut k = 0;
    loop {
        let covers = up_covers(&cur);
        if covers.is_empty() {
            break;
        }
        let (label, next) = covers[picks[k % picks.len()] % covers.len()].clone();
        letters.push(label);
        cur = next;
        k += 1;
    }
    GeneratorWord::new(g.clone(), letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_axioms((x, y, z) in triple()) {
        let c = x.context();
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &c.identity(), x.clone());
        prop_assert_eq!(&c.identity() * &x, x.clone());
        prop_assert_eq!(&x * &x.inverse(), c.identity());
        prop_assert_eq!(&x.inverse() * &x, c.identity());
    }

    #[test]
    fn generators_act_by_right_multiplication(x in context().prop_flat_map(element)) {
        let c = x.context();
        for label in c.labels() {
            prop_assert_eq!(x.right_multiply(label), &x * &c.generator(label).unwrap());
        }
    }

    #[test]
    fn notation_round_trips(x in context().prop_flat_map(element)) {
        let c = x.context();
        prop_assert_eq!(c.parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(c.parse(&x.format(true)).unwrap(), x);
    }

    #[test]
    fn duality((x, y) in pair()) {
        let c = x.context();
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.finv() + x.dual().finv(), c.mu0().finv());
        prop_assert_eq!(leq(&x, &y).unwrap(), leq(&y.dual(), &x.dual()).unwrap());
    }

    #[test]
    fn covers_are_rank_steps(x in context().prop_flat_map(element)) {
        for (_, y) in up_covers(&x) {
            prop_assert_eq!(y.finv(), x.finv() + 1);
            prop_assert!(leq(&x, &y).unwrap());
            prop_assert!(down_covers(&y).iter().any(|(_, z)| *z == x));
        }
        for (_, y) in down_covers(&x) {
            prop_assert!(up_covers(&y).iter().any(|(_, z)| *z == x));
        }
        prop_assert_eq!(wdes(&x), down_covers(&x).len());
    }

    #[test]
    fn order_axioms((x, y, z) in triple()) {
        prop_assert!(leq(&x, &x).unwrap());
        if leq(&x, &y).unwrap() && leq(&y, &x).unwrap() {
            prop_assert_eq!(&x, &y);
        }
        if leq(&x, &y).unwrap() && leq(&y, &z).unwrap() {
            prop_assert!(leq(&x, &z).unwrap());
        }
        if leq(&x, &y).unwrap() && x != y {
            prop_assert!(x.finv() < y.finv());
        }
    }

    #[test]
    fn lattice_laws((x, y, z) in triple()) {
        let m = meet(&x, &y).unwrap();
        let j = join(&x, &y).unwrap();
        prop_assert!(leq(&m, &x).unwrap() && leq(&m, &y).unwrap());
        prop_assert!(leq(&x, &j).unwrap() && leq(&y, &j).unwrap());
        prop_assert_eq!(&m, &meet(&y, &x).unwrap());
        prop_assert_eq!(&j, &join(&y, &x).unwrap());
        prop_assert_eq!(meet(&x, &j).unwrap(), x.clone());
        prop_assert_eq!(join(&x, &m).unwrap(), x.clone());
        prop_assert_eq!(meet(&m, &z).unwrap(), meet(&x, &meet(&y, &z).unwrap()).unwrap());
        prop_assert_eq!(join(&j, &z).unwrap(), join(&x, &join(&y, &z).unwrap()).unwrap());
        prop_assert_eq!(j, meet(&x.dual(), &y.dual()).unwrap().dual());
        if leq(&z, &x).unwrap() && leq(&z, &y).unwrap() {
            prop_assert!(leq(&z, &m).unwrap());
        }
        prop_assert_eq!(m == x, leq(&x, &y).unwrap());
    }

    #[test]
    fn wdes_counts_descents_and_negatives(
        x in (1usize..=7).prop_flat_map(|n| element(GroupContext::new(2, n).unwrap()))
    ) {
        prop_assert_eq!(wdes(&x), wdes_by_sets(&x));
    }

    #[test]
    fn tits_moves_keep_endpoints(
        (x, picks) in (2usize..=5)
            .prop_flat_map(|n| element(GroupContext::new(2, n).unwrap()))
            .prop_flat_map(|x| (Just(x), prop::collection::vec(0usize..8, 1..16)))
    ) {
        let word = chain_word(&x, &picks);
        let end = word.end();
        for m in tits_moves(&word).unwrap() {
            prop_assert!(m.word.is_valid());
            prop_assert_eq!(m.word.end(), end.clone());
            prop_assert_eq!(m.word.len(), word.len());
            prop_assert!(m.word.letters() != word.letters());
        }
    }
}
