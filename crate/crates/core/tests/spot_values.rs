use std::collections::BTreeMap;

use ncm_core::chains::{euler_closed_form_pipeline, euler_reduced, f_vector};
use ncm_core::groups::build_group;
use ncm_core::homology::poset_homology;
use ncm_core::ncposet::build_poset;
use ncm_core::{DegreeTable, GroupSpec, DEFAULT_MAX_SIMPLICES};
use num_bigint::BigInt;

fn spec(label: &str) -> GroupSpec {
    label.parse().unwrap()
}

#[test]
fn cardinalities() {
    for (label, m, expected) in [
        ("A2", 1, 5u64),
        ("A2", 2, 12),
        ("A3", 2, 55),
        ("B2", 2, 15),
        ("D4", 1, 50),
        ("H3", 1, 32),
    ] {
        let g = build_group(spec(label)).unwrap();
        let p = build_poset(&g, m).unwrap();
        assert_eq!(p.len() as u64, expected, "{label} m={m}");
        p.verify().unwrap();
    }
}

#[test]
fn reduced_euler_characteristics() {
    for (label, m, expected) in [
        ("A2", 1, 2i64),
        ("A2", 2, 5),
        ("A2", 3, 8),
        ("A3", 1, -5),
        ("A3", 2, -25),
        ("B2", 1, 3),
        ("B2", 2, 7),
        ("B3", 1, -10),
        ("I2(6)", 1, 5),
        ("D4", 1, 20),
        ("H3", 1, -21),
    ] {
        let s = spec(label);
        let g = build_group(s).unwrap();
        let tp = build_poset(&g, m).unwrap().truncate();
        let expected = BigInt::from(expected);
        assert_eq!(euler_reduced(&tp), expected, "{label} m={m}");
        let table = DegreeTable::from_spec(&s);
        assert_eq!(euler_closed_form_pipeline(&table, m as i64).unwrap(), expected, "{label} m={m}");
    }
}

#[test]
fn homology_is_concentrated() {
    for (label, m) in [("A2", 2), ("A3", 1), ("B2", 2), ("I2(5)", 2)] {
        let g = build_group(spec(label)).unwrap();
        let tp = build_poset(&g, m).unwrap().truncate();
        let h = poset_homology(&tp, DEFAULT_MAX_SIMPLICES).unwrap();
        let chi = euler_reduced(&tp);
        let top = g.rank() as i64 - 2;
        let rank = usize::try_from(chi.magnitude()).unwrap();
        assert_eq!(h.betti, BTreeMap::from([(top, rank)]), "{label} m={m}");
        assert!(h.is_torsion_free());
        assert_eq!(h.euler(), chi);
    }
}

#[test]
fn conjugate_coxeter_elements_agree() {
    for label in ["A3", "B3"] {
        let g = build_group(spec(label)).unwrap();
        let c = g.coxeter_element();
        let c2 = g.reversed_coxeter_element();
        assert_ne!(c, c2);
        assert!(g.conjugator(c, c2).is_some());
        for m in 1..=2 {
            let p = ncm_core::DivisiblePoset::build(&g, c, m, 200_000).unwrap();
            let q = ncm_core::DivisiblePoset::build(&g, c2, m, 200_000).unwrap();
            assert_eq!(p.rank_sizes(), q.rank_sizes());
            assert_eq!(f_vector(&p.truncate()), f_vector(&q.truncate()));
        }
    }
}
