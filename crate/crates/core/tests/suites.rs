use flagweak::chains::{gamma_graph, is_connected, maximal_chains, DEFAULT_CHAIN_CAP};
use flagweak::checks::{run_all, run_suite, CheckOptions, Suite};
use flagweak::order::{build_hasse, build_interval};
use flagweak::GroupContext;

fn ctx(r: u32, n: usize) -> GroupContext {
    GroupContext::new(r, n).unwrap()
}

#[test]
fn every_suite_passes_on_desk_scale_groups() {
    for (r, n) in [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 2)] {
        for report in run_all(ctx(r, n), &CheckOptions::default()) {
            assert!(report.passed(), "{report}");
        }
    }
}

#[test]
fn order_lattice_and_mobius_suites_on_larger_groups() {
    for (r, n) in [(1, 4), (2, 4), (3, 3)] {
        for suite in [Suite::Order, Suite::Lattice, Suite::Mobius] {
            let report = run_suite(suite, ctx(r, n), &CheckOptions::default());
            assert!(report.passed(), "{report}");
        }
    }
}

#[test]
fn generic_chain_graphs_for_three_colors() {
    let c = ctx(3, 2);
    let hasse = build_hasse(c);
    let full = build_interval(&c.identity(), &c.mu0()).unwrap();
    let gamma = gamma_graph(&full, DEFAULT_CHAIN_CAP).unwrap();
    assert!(gamma.is_empirical());
    assert!(is_connected(&gamma));
    assert_eq!(
        gamma.vertices().len(),
        maximal_chains(&hasse, DEFAULT_CHAIN_CAP).unwrap().len()
    );
}

#[test]
fn full_b4_chain_count() {
    let hasse = build_hasse(ctx(2, 4));
    assert_eq!(flagweak::chains::count_maximal_chains(&hasse), 988_032);
    assert!(maximal_chains(&hasse, 1000).is_err());
}
