use proptest::prelude::*;

use super::*;
use crate::catalog::construct;
use crate::group::{product_set, subgroup_generated};

fn lattice(name: &str) -> SubgroupLattice {
    SubgroupLattice::enumerate(&construct(name).unwrap())
}

fn orders(lat: &SubgroupLattice, ids: &[SubgroupId]) -> Vec<usize> {
    ids.iter().map(|&i| lat.order_of(i)).collect()
}

fn flagged(lat: &SubgroupLattice, flags: &[bool]) -> Vec<usize> {
    (0..lat.len()).filter(|&i| flags[i]).map(|i| lat.order_of(i)).collect()
}

#[test]
fn subgroup_counts() {
    for (name, count) in [("1", 1), ("C5", 2), ("C7", 2), ("Q8", 6), ("S3", 6), ("A4", 10), ("S4", 30), ("D8", 10), ("A5", 59)] {
        assert_eq!(lattice(name).len(), count, "{name}");
    }
}

#[test]
fn canonical_order() {
    let lat = lattice("S4");
    assert!(lat.subgroup(lat.trivial()).is_trivial());
    assert_eq!(lat.order_of(lat.top()), 24);
    assert!(lat.subgroups().windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn maximal_subgroups() {
    let a4 = lattice("A4");
    assert_eq!(orders(&a4, a4.maximal_subgroups(a4.top())), vec![3, 3, 3, 3, 4]);
    let s3 = lattice("S3");
    assert_eq!(orders(&s3, s3.maximal_subgroups(s3.top())), vec![2, 2, 2, 3]);
}

#[test]
fn n_maximal_sets() {
    let a4 = lattice("A4");
    assert_eq!(orders(&a4, &a4.n_maximal_set(3).unwrap()), vec![1]);
    assert_eq!(orders(&a4, &a4.n_maximal_set(2).unwrap()), vec![1, 2, 2, 2]);
    let s3 = lattice("S3");
    assert_eq!(orders(&s3, &s3.n_maximal_set(2).unwrap()), vec![1]);
    assert!(s3.n_maximal_set(3).unwrap().is_empty());
    assert!(matches!(s3.n_maximal_set(0), Err(Error::BadDepth(0))));
    assert!(matches!(s3.is_n_maximal(0, 0), Err(Error::BadDepth(0))));
    assert_eq!(lattice("S4").longest_chain(), 4);
    assert_eq!(lattice("1").longest_chain(), 0);
}

#[test]
fn chains_are_maximal_chains() {
    let lat = lattice("S4");
    for h in 0..lat.len() {
        for n in 1..=lat.longest_chain() {
            match lat.chain_to(h, n) {
                Some(chain) => {
                    assert!(lat.is_n_maximal(h, n).unwrap());
                    assert_eq!(chain.len(), n);
                    assert_eq!(chain.0[0], lat.top());
                    assert_eq!(chain.end(), h);
                    for w in chain.0.windows(2) {
                        assert!(lat.maximal_subgroups(w[0]).contains(&w[1]));
                    }
                }
                None => assert!(!lat.is_n_maximal(h, n).unwrap()),
            }
        }
    }
}

#[test]
fn frattini() {
    for (name, order) in [("S3", 1), ("C4", 2), ("Q8", 2), ("C6", 1), ("D8", 2), ("SL23", 2)] {
        let lat = lattice(name);
        assert_eq!(lat.order_of(lat.frattini()), order, "{name}");
    }
}

#[test]
fn modular_and_s_quasinormal_flags() {
    // Expected order lists come from an independent brute-force enumeration.
    let cases: &[(&str, &[usize], &[usize])] = &[
        ("S3", &[1, 2, 2, 2, 3, 6], &[1, 3, 6]),
        ("A4", &[1, 4, 12], &[1, 4, 12]),
        ("S4", &[1, 4, 8, 8, 8, 12, 24], &[1, 4, 12, 24]),
        ("Q8", &[1, 2, 4, 4, 4, 8], &[1, 2, 4, 4, 4, 8]),
        ("D8", &[1, 2, 4, 4, 4, 8], &[1, 2, 2, 2, 2, 2, 4, 4, 4, 8]),
        ("C3:C4", &[1, 2, 3, 4, 4, 4, 6, 12], &[1, 2, 3, 6, 12]),
        ("A4xC2", &[1, 2, 4, 8, 12, 24], &[1, 2, 4, 8, 12, 24]),
    ];
    for &(name, modular, sqn) in cases {
        let lat = lattice(name);
        assert_eq!(flagged(&lat, lat.modular_flags()), modular, "{name} modular");
        assert_eq!(flagged(&lat, lat.s_quasinormal_flags()), sqn, "{name} S-quasinormal");
    }
}

#[test]
fn quasinormal_in_d8() {
    let lat = lattice("D8");
    let qn: Vec<bool> = (0..lat.len()).map(|i| lat.is_quasinormal(i)).collect();
    assert_eq!(flagged(&lat, &qn), vec![1, 2, 4, 4, 4, 8]);
}

#[test]
fn subnormal() {
    let d8 = lattice("D8");
    assert!((0..d8.len()).all(|i| d8.is_subnormal(i)));
    let s3 = lattice("S3");
    let sub: Vec<bool> = (0..s3.len()).map(|i| s3.is_subnormal(i)).collect();
    assert_eq!(flagged(&s3, &sub), vec![1, 3, 6]);
}

#[test]
fn s_quasinormal_implies_subnormal() {
    for name in ["S4", "SL23", "A4xC2", "C3:C4"] {
        let lat = lattice(name);
        for h in 0..lat.len() {
            if lat.is_s_quasinormal(h) {
                assert!(lat.is_subnormal(h), "{name} {h}");
            }
            if lat.is_quasinormal(h) {
                assert!(lat.is_s_quasinormal(h) && lat.is_modular(h), "{name} {h}");
            }
        }
    }
}

#[test]
fn permutes_matches_product_set() {
    let lat = lattice("S4");
    let g = lat.group();
    for a in 0..lat.len() {
        for b in 0..lat.len() {
            let set = product_set(g, lat.subgroup(a), lat.subgroup(b));
            let is_subgroup = lat.id_of_bits(&set).is_some();
            assert_eq!(lat.permutes(a, b), is_subgroup, "{a} {b}");
        }
    }
}

#[test]
fn sublattice_modularity() {
    let lat = lattice("S4");
    // Inside S3, every subgroup is modular.
    let s3 = lat.subgroups_of_order(lat.top(), 6)[0];
    assert!(lat.below(s3).iter().all(|m| lat.is_modular_in(m, s3)));
    assert!(lat.is_modular_in(s3, lat.top()) == lat.is_modular(s3));
}

#[test]
fn sylow_and_hall() {
    let lat = lattice("S4");
    assert_eq!(orders(&lat, &lat.sylow_subgroups_of(lat.top())), vec![8, 8, 8, 3, 3, 3, 3]);
    let pi = crate::group::PrimeSet::new(vec![2]).unwrap();
    assert_eq!(lat.order_of(lat.hall_subgroup(&pi).unwrap()), 8);
    let a5 = construct("A5").unwrap();
    let pi = crate::group::PrimeSet::new(vec![3, 5]).unwrap();
    assert!(hall_subgroup(&a5, &pi).is_none());
}

#[test]
fn dot_output() {
    let lat = lattice("S3");
    let dot = to_dot(&lat);
    assert!(dot.starts_with("digraph \"S3\""));
    assert_eq!(dot.matches("->").count(), 8);
    assert_eq!(dot.matches("shape=box").count(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_is_generated_subgroup(a in 0usize..30, b in 0usize..30) {
        let lat = lattice("S4");
        let j = lat.join(a, b);
        let mut seed = lat.fresh_generators(a);
        seed.extend(lat.fresh_generators(b));
        let closure = subgroup_generated(lat.group(), &seed);
        prop_assert_eq!(lat.subgroup(j), &closure);
        prop_assert_eq!(lat.join_by_closure(a, b), j);
        let m = lat.meet(a, b);
        prop_assert_eq!(lat.subgroup(m), &lat.subgroup(a).meet(lat.subgroup(b)));
    }

    #[test]
    fn normal_subgroups_are_modular(i in 0usize..30) {
        let lat = lattice("S4");
        if lat.is_normal(i) {
            prop_assert!(lat.is_modular(i));
        }
    }
}
