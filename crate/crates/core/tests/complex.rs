use fg4::complex::{
    boundary_of_5simplex, cross_polytope_boundary, homology, kuhnel_cp2, parse_triangulation, s3_times_circle,
    write_triangulation, HomologyGroup,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn closed_manifolds_have_expected_homology() {
    let z = HomologyGroup::integers(1);
    let s4 = homology(&boundary_of_5simplex(), 0);
    assert_eq!(s4[4], z);
    assert_eq!(s4[1], HomologyGroup::zero());
    let cp2 = homology(&kuhnel_cp2(), 0);
    assert_eq!(cp2[2], z);
    assert_eq!(cp2[1], HomologyGroup::zero());
    let s3s1 = homology(&s3_times_circle(3).unwrap(), 0);
    assert_eq!(s3s1[1], z);
    assert_eq!(s3s1[3], z);
    assert_eq!(cross_polytope_boundary(4).euler_characteristic(), 2);
}

#[test]
fn text_round_trip() {
    let t = kuhnel_cp2();
    let back = parse_triangulation(&write_triangulation(&t)).unwrap();
    assert_eq!(back.f_vector(), t.f_vector());
    assert_eq!(write_triangulation(&back), write_triangulation(&t));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabelling_preserves_topology(seed in any::<u64>()) {
        let t = kuhnel_cp2();
        let mut perm: Vec<usize> = (0..t.v0()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let r = t.relabel_vertices(&perm).unwrap();
        prop_assert_eq!(r.f_vector(), t.f_vector());
        prop_assert_eq!(homology(&r, 0), homology(&t, 0));
        let back = r.reverse_orientation().reverse_orientation();
        prop_assert_eq!(write_triangulation(&back), write_triangulation(&r));
    }
}
