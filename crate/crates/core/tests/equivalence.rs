use fg4::complex::{boundary_of_5simplex, s3_times_circle, OrderedTriangulation};
use fg4::equivalence::{search_equivalence, twist, verify_equivalence, EquivMap, EquivalenceData, SearchOptions};
use fg4::statesum::{z_total, Method};
use fg4::structure::{br_iota1, br_tau, verify_all, MapName, SemiWeakStructure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 1 << 24;

fn random_data(s: &SemiWeakStructure, rng: &mut ChaCha8Rng) -> EquivalenceData {
    let (n, m) = (s.g().order(), s.m() as i64);
    let nh = s.h().order() as i64;
    let mut e = EquivalenceData::identity(s.g(), s.h(), s.m());
    for map in [EquivMap::BigPhi, EquivMap::Phi, EquivMap::Mu] {
        for a in e.domain(map) {
            if a.iter().all(|&x| x != 0) {
                let v = if map == EquivMap::BigPhi { rng.gen_range(0..nh) } else { rng.gen_range(0..m) };
                e.set(map, &a, v).unwrap();
            }
        }
    }
    // psi and chi are characters in their H argument (H cyclic here)
    let step = m / num_integer::gcd(m, nh);
    for g in 1..n {
        let (cp, cc) = (rng.gen_range(0..m / step) * step, rng.gen_range(0..m / step) * step);
        for x in 1..nh as usize {
            e.set(EquivMap::Psi, &[x, g], cp * x as i64).unwrap();
            e.set(EquivMap::Chi, &[g, x], cc * x as i64).unwrap();
        }
    }
    e
}

fn z(t: &OrderedTriangulation, s: &SemiWeakStructure) -> fg4::algebra::Cyclotomic {
    z_total(t, s, Method::Auto, BUDGET).unwrap().value
}

#[test]
fn twisted_structures_have_equal_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let sphere = boundary_of_5simplex();
    let s3s1 = s3_times_circle(3).unwrap();
    let s = br_iota1(2, 1).unwrap();
    let mut nontrivial = 0;
    for _ in 0..6 {
        let mut e = random_data(&s, &mut rng);
        let t = twist(&s, &e).unwrap();
        assert!(verify_all(&t).all_passed());
        assert!(verify_equivalence(&s, &t, &e).all_passed());
        if t != s {
            nontrivial += 1;
        }
        assert_eq!(z(&sphere, &s), z(&sphere, &t));
        assert_eq!(z(&s3s1, &s), z(&s3s1, &t));
        e.aut_r = 3;
        let t = twist(&s, &e).unwrap();
        assert!(verify_all(&t).all_passed());
        assert_eq!(z(&s3s1, &t), z(&s3s1, &s).galois(3));
    }
    assert!(nontrivial > 0);
}

#[test]
fn mu_twist_keeps_sphere_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let sphere = boundary_of_5simplex();
    let s = br_tau(3, 1).unwrap();
    let t = loop {
        let t = twist(&s, &random_data(&s, &mut rng)).unwrap();
        if !t.is_trivial_map(MapName::Alpha1) {
            break t;
        }
    };
    assert!(verify_all(&t).all_passed());
    let a = z_total(&sphere, &s, Method::Gray, BUDGET).unwrap().value;
    let b = z_total(&sphere, &t, Method::Gray, BUDGET).unwrap().value;
    assert_eq!(a, b);
}

#[test]
fn search_recovers_twists() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in [br_iota1(2, 1).unwrap(), br_tau(2, 1).unwrap()] {
        let e = random_data(&s, &mut rng);
        let t = twist(&s, &e).unwrap();
        let w = search_equivalence(&s, &t, SearchOptions::default()).unwrap().expect("a witness exists");
        assert!(verify_equivalence(&s, &t, &w).all_passed());
    }
}
