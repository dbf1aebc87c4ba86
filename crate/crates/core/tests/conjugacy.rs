use std::collections::BTreeSet;

use garside::{
    are_conjugate, ascend_infimum, ascend_summit, conjugate_class_ge, elrifai_morton_class_ge,
    elrifai_morton_summit_class, enumerate_simples, lcm_with_positive, minimal_conjugator_ge, minimal_conjugator_sum,
    minimal_simple_set_ge, minimal_simple_set_sum, parse_element, summit_class, ArtinMonoid, BklMonoid, Error,
    Garside, GroupElement, GroupOps, PositiveElement, SearchOptions,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element<G: Garside>(
    g: &G,
    rng: &mut ChaCha8Rng,
    len: impl rand::distributions::uniform::SampleRange<usize>,
    mixed: bool,
) -> GroupElement<G::Simple> {
    let len = rng.gen_range(len);
    let mut acc = GroupElement::identity();
    for _ in 0..len {
        let x = g.simple_element(&g.atom(rng.gen_range(0..g.atom_count())));
        let step = if mixed && rng.gen_bool(0.5) { g.invert(&x) } else { x };
        acc = g.multiply(&acc, &step);
    }
    acc
}

/// The unique minimal element of `set` under left divisibility.
fn minimum<G: Garside>(g: &G, set: &[G::Simple]) -> G::Simple {
    let mins: Vec<_> = set
        .iter()
        .filter(|s| set.iter().all(|t| g.left_divides(s, t)))
        .collect();
    assert_eq!(mins.len(), 1, "no unique minimum");
    *mins[0]
}

fn minimal_elements<G: Garside>(g: &G, set: &[G::Simple]) -> BTreeSet<G::Simple> {
    set.iter()
        .filter(|s| set.iter().all(|t| t == *s || !g.left_divides(t, s)))
        .copied()
        .collect()
}

fn satisfies_ge<G: Garside>(g: &G, v: &GroupElement<G::Simple>, m: i64, s: &G::Simple) -> bool {
    g.conjugate_by_simple(v, s).inf() >= m
}

fn satisfies_sum<G: Garside>(g: &G, v: &GroupElement<G::Simple>, s: &G::Simple) -> bool {
    let w = g.conjugate_by_simple(v, s);
    w.inf() == v.inf() && w.sup() == v.sup()
}

#[test]
fn lcm_with_positive_examples() {
    let g = ArtinMonoid::new(3).unwrap();
    let (s1, s2) = (g.sigma(1), g.sigma(2));
    let v = PositiveElement::new(vec![s1, s1, s2, s2]);
    assert_eq!(lcm_with_positive(&g, &s2, &v), g.mul(&s1, &s2));
    assert_eq!(lcm_with_positive(&g, &g.identity(), &v), g.identity());
    assert_eq!(lcm_with_positive(&g, &s1, &v), g.identity());
    let nf = g.left_normal_form(&v);
    assert_eq!(lcm_with_positive(&g, &s2, &g.to_positive(&nf).unwrap()), g.mul(&s1, &s2));
}

fn lcm_brute_force<G: Garside>(g: &G, seed: u64, trials: usize) {
    let simples = enumerate_simples(g, 10_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let v = random_element(g, &mut rng, 0..10, false);
        let s = simples[rng.gen_range(0..simples.len())];
        let vp = g.to_positive(&v).unwrap();
        // t with s ≺ v·t, i.e. s⁻¹·v·t positive
        let sinv = g.invert(&g.simple_element(&s));
        let ok: Vec<_> = simples
            .iter()
            .copied()
            .filter(|t| g.multiply(&g.multiply(&sinv, &v), &g.simple_element(t)).inf() >= 0)
            .collect();
        assert_eq!(lcm_with_positive(g, &s, &vp), minimum(g, &ok));
    }
}

#[test]
fn lcm_with_positive_matches_brute_force() {
    lcm_brute_force(&ArtinMonoid::new(4).unwrap(), 1, 300);
    lcm_brute_force(&BklMonoid::new(4).unwrap(), 2, 300);
}

#[test]
fn minimal_conjugator_examples() {
    let g = ArtinMonoid::new(3).unwrap();
    let v = parse_element(&g, "s1 s1 s2").unwrap();
    assert_eq!(minimal_conjugator_ge(&g, &v, 0, 0), g.sigma(1));
    assert_eq!(minimal_conjugator_ge(&g, &v, 0, 1), g.delta());
    let set = minimal_simple_set_ge(&g, &v, 0, false);
    assert_eq!(set.elements, vec![g.sigma(1)]);
    // inf(v) > m returns the atom itself
    let v2 = parse_element(&g, "D^2 s1").unwrap();
    assert_eq!(minimal_conjugator_ge(&g, &v2, 1, 1), g.sigma(2));

    // conjugating Δ by an atom drops the infimum to 0, so only Δ keeps it at 1
    let d = GroupElement::delta_power(1);
    let set = minimal_simple_set_ge(&g, &d, 1, false);
    assert_eq!(set.elements, vec![g.delta()]);
    assert_eq!(minimal_conjugator_sum(&g, &d, 0), g.delta());
    assert_eq!(minimal_conjugator_sum(&g, &d, 1), g.delta());
    assert_eq!(minimal_simple_set_sum(&g, &d, false).elements, vec![g.delta()]);
}

/// `r_x`, `ρ_x` and the minimal sets against exhaustive search over all
/// simples; also closure of both properties under meets.
fn minimal_sets_brute_force<G: Garside>(g: &G, seed: u64, trials: usize) {
    let simples = enumerate_simples(g, 10_000).unwrap();
    let nontrivial: Vec<_> = simples.iter().copied().filter(|s| !g.is_identity(s)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = random_element(g, &mut rng, 1..10, true);
        let top = ascend_summit(g, &a).element;
        let m = top.inf() - rng.gen_range(0..2);
        let v = ascend_infimum(g, &a, m).unwrap().element;

        let ge: Vec<_> = nontrivial.iter().copied().filter(|s| satisfies_ge(g, &v, m, s)).collect();
        for x in 0..g.atom_count() {
            let cands: Vec<_> = ge.iter().copied().filter(|s| g.atom_divides_left(x, s)).collect();
            assert_eq!(minimal_conjugator_ge(g, &v, m, x), minimum(g, &cands));
        }
        let set = minimal_simple_set_ge(g, &v, m, false);
        assert_eq!(set.elements.iter().copied().collect::<BTreeSet<_>>(), minimal_elements(g, &ge));
        assert_eq!(set.elements.len(), minimal_elements(g, &ge).len());
        assert!(set.len() <= g.atom_count());
        assert_eq!(minimal_simple_set_ge(g, &v, m, true), set);
        for s in &ge {
            for t in &ge {
                let meet = g.meet(s, t);
                assert!(g.is_identity(&meet) || satisfies_ge(g, &v, m, &meet));
            }
        }

        let sum: Vec<_> = nontrivial.iter().copied().filter(|s| satisfies_sum(g, &top, s)).collect();
        for x in 0..g.atom_count() {
            let cands: Vec<_> = sum.iter().copied().filter(|s| g.atom_divides_left(x, s)).collect();
            assert_eq!(minimal_conjugator_sum(g, &top, x), minimum(g, &cands));
        }
        let set = minimal_simple_set_sum(g, &top, false);
        assert_eq!(set.elements.iter().copied().collect::<BTreeSet<_>>(), minimal_elements(g, &sum));
        assert!(set.len() <= g.atom_count());
        assert_eq!(minimal_simple_set_sum(g, &top, true), set);
        for s in &sum {
            for t in &sum {
                let meet = g.meet(s, t);
                assert!(g.is_identity(&meet) || satisfies_sum(g, &top, &meet));
            }
        }
    }
}

#[test]
fn minimal_sets_match_brute_force_artin() {
    minimal_sets_brute_force(&ArtinMonoid::new(3).unwrap(), 7, 200);
    minimal_sets_brute_force(&ArtinMonoid::new(4).unwrap(), 8, 200);
}

#[test]
fn minimal_sets_match_brute_force_bkl() {
    minimal_sets_brute_force(&BklMonoid::new(3).unwrap(), 9, 100);
    minimal_sets_brute_force(&BklMonoid::new(4).unwrap(), 10, 200);
}

#[test]
fn ascent_examples() {
    let g = ArtinMonoid::new(3).unwrap();
    let a = parse_element(&g, "s1 s1 s2").unwrap();
    let up = ascend_infimum(&g, &a, 1).unwrap();
    assert_eq!(up.element, GroupElement::delta_power(1));
    assert_eq!(g.conjugate(&a, &up.conjugator), up.element);
    assert_eq!(ascend_infimum(&g, &a, 0).unwrap().element, a);
    let s1 = parse_element(&g, "s1").unwrap();
    assert!(ascend_infimum(&g, &s1, 1).is_none());
    assert_eq!(ascend_summit(&g, &a).element, GroupElement::delta_power(1));
    let d = GroupElement::delta_power(-2);
    assert_eq!(ascend_summit(&g, &d).element, d);
}

#[test]
fn class_examples() {
    let g = ArtinMonoid::new(3).unwrap();
    let opts = SearchOptions::default();
    let a = parse_element(&g, "s1 s1 s2").unwrap();
    let pos = conjugate_class_ge(&g, &a, 0, &opts).unwrap();
    assert!(pos.contains(&GroupElement::delta_power(1)));
    assert!(pos.contains(&a));
    let s1 = parse_element(&g, "s1").unwrap();
    assert!(conjugate_class_ge(&g, &s1, 1, &opts).unwrap().is_empty());

    let size = |w: &str| summit_class(&g, &parse_element(&g, w).unwrap(), &opts).unwrap().len();
    assert_eq!(size("s1^3 s2"), 2);
    assert_eq!(size("s1^3 s2^2"), 6);
    assert_eq!(size("D^3"), 1);
}

#[test]
fn are_conjugate_examples() {
    let g = ArtinMonoid::new(3).unwrap();
    let opts = SearchOptions::default();
    let e = |w: &str| parse_element(&g, w).unwrap();
    let same = are_conjugate(&g, &e("s1 s2^-1"), &e("s1 s2^-1"), &opts).unwrap();
    assert!(same.witness.unwrap().is_identity());
    let r = are_conjugate(&g, &e("s1"), &e("s2"), &opts).unwrap();
    let c = r.witness.unwrap();
    assert_eq!(g.conjugate(&e("s1"), &c), e("s2"));
    assert!(!are_conjugate(&g, &e("s1 s1"), &e("s1 s2"), &opts).unwrap().is_conjugate());
    assert!(!are_conjugate(&g, &e("s1"), &e("s1^-1"), &opts).unwrap().is_conjugate());
}

#[test]
fn graph_witnesses_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let g = ArtinMonoid::new(4).unwrap();
    let opts = SearchOptions {
        verify_witnesses: false,
        ..SearchOptions::default()
    };
    for _ in 0..60 {
        let a = random_element(&g, &mut rng, 10..=10, true);
        let graph = summit_class(&g, &a, &opts).unwrap();
        let root = graph.root().unwrap();
        assert_eq!(&g.conjugate(&a, graph.prefix()), root);
        for (i, node) in graph.nodes().iter().enumerate() {
            assert_eq!(&g.conjugate(root, &graph.witness(&g, i)), node);
            assert_eq!(&g.conjugate(&a, &graph.witness_from_input(&g, i)), node);
            assert_eq!((node.inf(), node.sup()), (root.inf(), root.sup()));
        }
    }
}

fn same_classes_as_baseline<G: Garside>(g: &G, seed: u64, trials: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = SearchOptions::default();
    for _ in 0..trials {
        let a = random_element(g, &mut rng, 1..9, true);
        let ours = summit_class(g, &a, &opts).unwrap();
        let base = elrifai_morton_summit_class(g, &a, 100_000).unwrap();
        let set = |x: &[GroupElement<G::Simple>]| x.iter().cloned().collect::<BTreeSet<_>>();
        assert_eq!(set(ours.nodes()), set(base.nodes()));
        // below the summit infimum these classes grow quickly; compare the small ones
        let m = ascend_summit(g, &a).element.inf() - rng.gen_range(0..2);
        let capped = SearchOptions { budget: 3000, ..opts };
        let Ok(ours) = conjugate_class_ge(g, &a, m, &capped) else { continue };
        let base = elrifai_morton_class_ge(g, &a, m, 100_000).unwrap();
        assert_eq!(set(ours.nodes()), set(base.nodes()));
    }
}

#[test]
fn classes_match_baseline() {
    same_classes_as_baseline(&ArtinMonoid::new(4).unwrap(), 41, 150);
    same_classes_as_baseline(&ArtinMonoid::new(5).unwrap(), 42, 40);
    same_classes_as_baseline(&BklMonoid::new(4).unwrap(), 43, 150);
    same_classes_as_baseline(&BklMonoid::new(5).unwrap(), 44, 40);
}

#[test]
fn budget_is_enforced() {
    let g = ArtinMonoid::new(3).unwrap();
    let a = parse_element(&g, "s1 s1 s2").unwrap();
    let opts = SearchOptions {
        budget: 2,
        ..SearchOptions::default()
    };
    assert!(matches!(
        conjugate_class_ge(&g, &a, 0, &opts),
        Err(Error::BudgetExceeded { budget: 2 })
    ));
    let big = ArtinMonoid::new(7).unwrap();
    let b = parse_element(&big, "s1").unwrap();
    assert!(matches!(
        elrifai_morton_summit_class(&big, &b, 10),
        Err(Error::CapExceeded { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugacy_is_symmetric(seed in any::<u64>(), n in 3usize..6, la in 1usize..9, lb in 1usize..9) {
        let g = ArtinMonoid::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&g, &mut rng, la..=la, true);
        let b = if rng.gen_bool(0.5) {
            let c = random_element(&g, &mut rng, lb..=lb, true);
            g.conjugate(&a, &c)
        } else {
            random_element(&g, &mut rng, la..=la, true)
        };
        let opts = SearchOptions::default();
        let ab = are_conjugate(&g, &a, &b, &opts).unwrap();
        let ba = are_conjugate(&g, &b, &a, &opts).unwrap();
        prop_assert_eq!(ab.is_conjugate(), ba.is_conjugate());
        if let Some(c) = ab.witness {
            prop_assert_eq!(g.conjugate(&a, &c), b.clone());
        }
        if let Some(c) = ba.witness {
            prop_assert_eq!(g.conjugate(&b, &c), a.clone());
        }
    }

    #[test]
    fn summit_invariants_are_shared(seed in any::<u64>(), len in 1usize..12) {
        let g = BklMonoid::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(&g, &mut rng, len..=len, true);
        let top = ascend_summit(&g, &a);
        prop_assert_eq!(g.conjugate(&a, &top.conjugator), top.element.clone());
        let class = summit_class(&g, &a, &SearchOptions::default()).unwrap();
        for v in class.nodes() {
            prop_assert_eq!((v.inf(), v.sup()), (top.element.inf(), top.element.sup()));
            // every conjugate reachable by cycling stays in the class
            prop_assert!(class.contains(&g.cycling(v).0) || g.cycling(v).0.sup() < v.sup() || g.cycling(v).0.inf() > v.inf());
        }
        prop_assert!(class.stats.max_minimal_set <= g.atom_count());
    }
}
