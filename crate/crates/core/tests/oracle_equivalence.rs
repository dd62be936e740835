use nakayama_core::crosscheck::compare;
use nakayama_core::oracle::Oracle;
use nakayama_core::sweep::{enumerate, Shapes};
use nakayama_core::{ExtendedNat, KupischSeries};
use proptest::prelude::*;
use proptest::sample::select;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formulas_match_the_oracle(a in select(enumerate(5, 6, Shapes::Both))) {
        let cmp = compare(&a, 2).unwrap();
        prop_assert!(cmp.agrees(), "{:#?}", cmp.mismatches);
    }
}

#[test]
fn oracle_does_not_depend_on_the_field() {
    for a in [
        KupischSeries::cyclic(&[3, 3, 4]).unwrap(),
        KupischSeries::linear(&[3, 3, 3, 3, 2, 1]).unwrap(),
        KupischSeries::cyclic(&[3, 3, 4, 4]).unwrap(),
    ] {
        let o2 = Oracle::new(&a, 2).unwrap();
        let o3 = Oracle::new(&a, 3).unwrap();
        let o7 = Oracle::new(&a, 7).unwrap();
        for x in a.indecomposables() {
            assert_eq!(o2.tau(&x).unwrap(), o3.tau(&x).unwrap());
            for y in a.indecomposables() {
                let h = o2.hom_dim(&x, &y).unwrap();
                assert_eq!(h, o3.hom_dim(&x, &y).unwrap());
                assert_eq!(h, o7.hom_dim(&x, &y).unwrap());
                assert_eq!(o2.ext1_dim(&x, &y).unwrap(), o3.ext1_dim(&x, &y).unwrap());
            }
        }
        assert!(compare(&a, 3).unwrap().agrees());
    }
}

#[test]
fn oracle_rejects_non_primes() {
    let a = KupischSeries::cyclic(&[2, 2]).unwrap();
    assert!(Oracle::new(&a, 4).is_err());
    assert!(Oracle::new(&a, 1).is_err());
}

#[test]
fn higher_ext_matches_up_to_one_past_the_gorenstein_degree() {
    for a in enumerate(4, 5, Shapes::Both) {
        let top = match a.gorenstein_degree().unwrap() {
            ExtendedNat::Finite(g) => g as usize + 1,
            ExtendedNat::Infinity => 3,
        };
        let o = Oracle::new(&a, 2).unwrap();
        let inds = a.indecomposables();
        for x in &inds {
            assert_eq!(o.syzygy(x).unwrap(), a.syzygy_of(x), "{a} {x}");
            for y in &inds {
                for k in 1..=top {
                    let formula = a.ext_dim(&(*x).into(), &(*y).into(), k);
                    assert_eq!(o.ext_dim(x, y, k).unwrap(), formula, "{a}: Ext^{k}({x}, {y})");
                }
            }
        }
    }
}
