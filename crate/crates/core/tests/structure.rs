use fg4::structure::{br_iota1, br_iota2, br_tau, builtin, parse_structure, verify_all, write_structure, BUILTINS};
use proptest::prelude::*;

#[test]
fn builtins_round_trip_through_text() {
    for spec in ["trivial:2,3", "br-tau:3,2", "br-iota1:2,3", "br-iota2:3,1"] {
        let s = builtin(spec).unwrap();
        assert_eq!(parse_structure(&write_structure(&s)).unwrap(), s, "{spec}");
    }
    assert!(BUILTINS.len() >= 4);
}

#[test]
fn inadmissible_parameters_are_rejected() {
    assert!(br_tau(3, 3).is_err());
    assert!(br_tau(3, 0).is_err());
    assert!(br_iota1(2, 4).is_err());
    assert!(br_iota2(1, 1).is_err());
    assert!(builtin("br-tau:3").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn families_are_coherent(n in 2u64..5, k in 1u64..25) {
        if k < n {
            prop_assert!(verify_all(&br_tau(n, k).unwrap()).all_passed());
        }
        if k < n * n {
            let s = br_iota1(n, k).unwrap();
            prop_assert!(verify_all(&s).all_passed());
            prop_assert_eq!(parse_structure(&write_structure(&s)).unwrap(), s);
        }
    }
}
