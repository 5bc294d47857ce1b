use std::collections::BTreeSet;

use maxsemi::catalog;
use maxsemi::maximal::{max_subsemigroups_with, SearchOptions};
use maxsemi::oracle::verify_maximal;
use maxsemi::semigroup::Enumerated;
use maxsemi::{Bounds, FiniteSemigroup, GreensStructure, Transformation};
use proptest::prelude::*;

const LIMIT: usize = 2000;

/// Results as sets of concrete transformations, so that runs with
/// differently ordered generators can be compared.
fn concrete_results(e: &Enumerated<Transformation>, seed: Option<u64>) -> BTreeSet<BTreeSet<Transformation>> {
    let s = &e.semigroup;
    let gs = GreensStructure::new(s);
    let opts = SearchOptions {
        seed,
        ..SearchOptions::default()
    };
    let report = max_subsemigroups_with(s, &gs, &opts).unwrap();
    assert!(report.diagnostics.is_empty(), "{:?}", report.diagnostics);
    report
        .results
        .iter()
        .map(|m| m.removed.iter().map(|&x| e.elements[x].clone()).collect())
        .collect()
}

fn check_invariants(e: &Enumerated<Transformation>) {
    let s = &e.semigroup;
    let gs = GreensStructure::new(s);
    let report = max_subsemigroups_with(s, &gs, &SearchOptions::default()).unwrap();
    let mut seen = BTreeSet::new();
    for m in &report.results {
        let elements = m.elements(s.size());
        assert_eq!(verify_maximal(s, &elements), Ok(()), "{} in J-class {}", m.kind, m.j_class);
        assert!(m.removed.iter().all(|&x| gs.j_class[x] == m.j_class));
        assert_eq!(s.closure_of(&m.generators), elements);
        assert!(seen.insert(m.removed.clone()), "duplicate result");
    }
}

fn enumerate(gens: &[Transformation]) -> Option<Enumerated<Transformation>> {
    let bounds = Bounds {
        semigroup_elements: LIMIT,
        ..Bounds::default()
    };
    FiniteSemigroup::from_transformations(gens, &bounds).ok()
}

fn transformation(degree: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(0..degree, degree).prop_map(|v| Transformation::new(v).unwrap())
}

fn generators() -> impl Strategy<Value = Vec<Transformation>> {
    (3usize..=5).prop_flat_map(|d| prop::collection::vec(transformation(d), 1..=4))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn results_are_maximal_and_well_formed(gens in generators()) {
        if let Some(e) = enumerate(&gens) {
            check_invariants(&e);
        }
    }

    #[test]
    fn invariant_under_generator_order(gens in generators(), rotate in 0usize..4) {
        if let Some(e) = enumerate(&gens) {
            let mut other = gens.clone();
            other.reverse();
            let k = rotate % other.len();
            other.rotate_left(k);
            let f = enumerate(&other).unwrap();
            prop_assert_eq!(concrete_results(&e, None), concrete_results(&f, None));
        }
    }

    #[test]
    fn invariant_under_transversal_choice(gens in generators(), seed in any::<u64>()) {
        if let Some(e) = enumerate(&gens) {
            prop_assert_eq!(concrete_results(&e, None), concrete_results(&e, Some(seed)));
        }
    }
}

#[test]
fn full_transformation_monoids() {
    for n in 1..=4 {
        let e = catalog::full_transformation_monoid(n, &Bounds::default()).unwrap();
        check_invariants(&e);
    }
}

#[test]
fn symmetric_groups() {
    // Maximal subsemigroups of a finite group are its maximal subgroups.
    let e = catalog::symmetric_group(4, &Bounds::default()).unwrap();
    check_invariants(&e);
    let gs = GreensStructure::new(&e.semigroup);
    let r = max_subsemigroups_with(&e.semigroup, &gs, &SearchOptions::default()).unwrap();
    // A4, three D8, four S3.
    assert_eq!(r.results.len(), 8);
}

#[test]
fn seeded_mid_size_semigroups() {
    let mut sizes = Vec::new();
    let mut seed = 0;
    while sizes.len() < 30 {
        let degree = 4 + (seed % 2) as usize;
        let gens = catalog::random_transformations(degree, 2 + (seed % 2) as usize, seed);
        if let Some(e) = enumerate(&gens) {
            if e.semigroup.size() > 50 {
                check_invariants(&e);
                assert_eq!(concrete_results(&e, None), concrete_results(&e, Some(seed)));
                let mut reversed = gens.clone();
                reversed.reverse();
                assert_eq!(concrete_results(&e, None), concrete_results(&enumerate(&reversed).unwrap(), None));
                sizes.push(e.semigroup.size());
            }
        }
        seed += 1;
    }
    assert!(sizes.iter().any(|&n| n > 500), "{sizes:?}");
}
