use ncm_core::chains::{compositions, min_rooted_multichain_count, multichain_count, rank_selected_count};
use ncm_core::formulas::{binomial, verify_identities};
use ncm_core::groups::build_group;
use ncm_core::ncposet::{build_poset, le};
use ncm_core::{DegreeTable, GroupSpec};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn small_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1u32..=3).prop_map(GroupSpec::a),
        (2u32..=3).prop_map(GroupSpec::b),
        (3u32..=8).prop_map(GroupSpec::i2),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_axioms(spec in small_spec(), seed in any::<u64>()) {
        let g = build_group(spec).unwrap();
        let n = g.order() as u64;
        let pick = |k: u64| ncm_core::ElemId(((seed.wrapping_mul(k + 0x9e37)) % n) as u32);
        let (a, b, c) = (pick(1), pick(2), pick(3));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.absolute_length_table()[a.index()] as usize, g.fixed_space_codim(a));
        let conj = g.conjugate(a, b);
        prop_assert_eq!(g.length(conj), g.length(a));
    }

    #[test]
    fn order_is_ranked_and_consistent(spec in small_spec(), m in 1usize..=2, i in any::<usize>(), j in any::<usize>()) {
        let g = build_group(spec).unwrap();
        let p = build_poset(&g, m).unwrap();
        let (i, j) = (i % p.len(), j % p.len());
        let direct = le(&g, p.tuple(i), p.tuple(j)).unwrap();
        prop_assert_eq!(direct, p.leq(i, j));
        if direct && i != j {
            prop_assert!(p.rank(i) < p.rank(j));
        }
        prop_assert!(p.leq(i, p.max_index()));
    }

    #[test]
    fn zero_insertion_is_invisible(spec in small_spec(), m in 1usize..=2, pick in any::<usize>(), pos in any::<usize>()) {
        let g = build_group(spec).unwrap();
        let p = build_poset(&g, m).unwrap();
        let n = g.rank();
        let all = compositions(n, 3);
        let s = &all[pick % all.len()];
        let at = 1 + pos % s.len();
        let mut padded = s.clone();
        padded.insert(at, 0);
        prop_assert_eq!(rank_selected_count(&p, s).unwrap(), rank_selected_count(&p, &padded).unwrap());
    }

    #[test]
    fn identities_hold_for_real_tables(spec in small_spec(), m_max in 1i64..=4) {
        let report = verify_identities(&DegreeTable::from_spec(&spec), m_max);
        prop_assert!(report.all_passed());
    }

    #[test]
    fn pascal_rule(n in -30i64..30, k in 1i64..12) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
}

#[test]
fn multichains_match_fuss_catalan() {
    for label in ["A2", "B2", "I2(5)", "A3"] {
        let spec: GroupSpec = label.parse().unwrap();
        let g = build_group(spec).unwrap();
        let table = DegreeTable::from_spec(&spec);
        for m in 1..=2usize {
            let p = build_poset(&g, m).unwrap();
            for l in 1..=3usize {
                let ml = (m * l) as i64;
                assert_eq!(BigInt::from(multichain_count(&p, l)), table.cat_integer(ml).unwrap());
                assert_eq!(
                    BigInt::from(min_rooted_multichain_count(&p, l)),
                    table.cat_integer(ml - 1).unwrap()
                );
            }
            assert_eq!(multichain_count(&p, 0), BigUint::from(1u8));
        }
    }
}

fn random_poset(n: usize, edges: &[(usize, usize)]) -> ncm_core::TruncatedPoset {
    use ncm_core::bitmatrix::BitMatrix;
    // edges i -> j with i < j, then transitive closure; rank = longest chain below
    let mut up = BitMatrix::new(n);
    for i in 0..n {
        up.set(i, i);
    }
    for &(a, b) in edges {
        let (i, j) = (a.min(b) % n, a.max(b) % n);
        if i != j {
            up.set(i, j);
        }
    }
    for i in (0..n).rev() {
        let above: Vec<usize> = up.ones(i).filter(|&j| j != i).collect();
        for j in above {
            up.union_rows(i, j);
        }
    }
    let mut ranks = vec![0u32; n];
    for j in 0..n {
        for i in 0..j {
            if up.get(i, j) {
                ranks[j] = ranks[j].max(ranks[i] + 1);
            }
        }
    }
    ncm_core::TruncatedPoset::from_parts(3, ranks, up)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homology_euler_matches_f_vector(n in 0usize..9, edges in proptest::collection::vec((0usize..9, 0usize..9), 0..20)) {
        let n = n.max(edges.iter().map(|e| e.0.max(e.1) + 1).max().unwrap_or(0)).min(9);
        let tp = random_poset(n, &edges);
        let h = ncm_core::homology::poset_homology(&tp, 100_000).unwrap();
        prop_assert_eq!(h.euler(), ncm_core::chains::euler_reduced(&tp));
        let k = ncm_core::homology::order_complex(&tp, 100_000).unwrap();
        let f: Vec<usize> = ncm_core::chains::f_vector(&tp).iter().map(|x| usize::try_from(x).unwrap()).collect();
        prop_assert_eq!(k.f_vector(), f);
    }
}
