#![allow(dead_code)]

use fg4::algebra::{Cyclotomic, FiniteAbelianGroup, FiniteGroup};
use fg4::matrix2cat::{
    compose_1, dual_2, hcompose_2, vcompose_2, CMatrix, Object, OneMorphismMatrix, RigElement, TwoMorphismMatrix,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const M: u32 = 4;

struct Gen {
    rng: ChaCha8Rng,
    g: FiniteGroup,
    h: FiniteAbelianGroup,
    max_degree: usize,
}

impl Gen {
    fn object(&mut self) -> Object {
        let n = self.rng.gen_range(1..=2);
        Object::new((0..n).map(|_| self.rng.gen_range(0..self.g.order())).collect())
    }

    fn rig(&mut self) -> RigElement {
        let d = self.rng.gen_range(0..=self.max_degree);
        let mut counts = vec![0u64; self.h.order()];
        for _ in 0..d {
            counts[self.rng.gen_range(0..self.h.order())] += 1;
        }
        RigElement::from_counts(counts)
    }

    fn one(&mut self, x: &Object, y: &Object) -> OneMorphismMatrix {
        let rows = x
            .labels
            .iter()
            .map(|a| y.labels.iter().map(|b| if a == b { self.rig() } else { RigElement::zero(&self.h) }).collect())
            .collect();
        OneMorphismMatrix::new(x.clone(), y.clone(), rows).unwrap()
    }

    fn scalar(&mut self) -> Cyclotomic {
        let c = self.rng.gen_range(-2..=2);
        Cyclotomic::root_of_unity(M, self.rng.gen_range(0..M as i64)) * Cyclotomic::from_integer(M, c)
    }
}

/// `from_rows` cannot express `r x 0` for `r > 0`.
fn shaped(m: CMatrix, r: usize, c: usize) -> CMatrix {
    if m.rows() == r && m.cols() == c {
        m
    } else {
        CMatrix::zeros(M, r, c)
    }
}

/// Checks the compositional laws on one seeded random configuration:
/// associativity of all three composites, the interchange law and the
/// behavior of the dual.
pub fn check_laws(seed: u64, max_degree: usize) -> Result<(), String> {
    let mut gen = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        g: FiniteGroup::cyclic(2).unwrap(),
        h: FiniteAbelianGroup::cyclic(2).unwrap(),
        max_degree,
    };
    let h = gen.h.clone();
    let (x, y, z, w) = (gen.object(), gen.object(), gen.object(), gen.object());
    let f: Vec<_> = (0..4).map(|_| gen.one(&x, &y)).collect();
    let g: Vec<_> = (0..3).map(|_| gen.one(&y, &z)).collect();
    let k: Vec<_> = (0..2).map(|_| gen.one(&z, &w)).collect();
    let err = |what: &str| Err(format!("seed {seed}: {what}"));

    let c = |a: &OneMorphismMatrix, b: &OneMorphismMatrix| compose_1(a, b, &h).unwrap();
    if c(&c(&f[0], &g[0]), &k[0]) != c(&f[0], &c(&g[0], &k[0])) {
        return err("1-morphism composition is not associative");
    }

    let alpha: Vec<_> = (0..3).map(|i| two(&mut gen, &f[i], &f[i + 1])).collect();
    let beta: Vec<_> = (0..2).map(|i| two(&mut gen, &g[i], &g[i + 1])).collect();
    let gamma = two(&mut gen, &k[0], &k[1]);
    let v = |a: &TwoMorphismMatrix, b: &TwoMorphismMatrix| vcompose_2(a, b).unwrap();
    let hc = |a: &TwoMorphismMatrix, b: &TwoMorphismMatrix| hcompose_2(a, b, &h).unwrap();

    if hc(&v(&alpha[0], &alpha[1]), &v(&beta[0], &beta[1])) != v(&hc(&alpha[0], &beta[0]), &hc(&alpha[1], &beta[1])) {
        return err("interchange law fails");
    }
    if hc(&hc(&alpha[0], &beta[0]), &gamma) != hc(&alpha[0], &hc(&beta[0], &gamma)) {
        return err("horizontal composition is not associative");
    }
    if v(&v(&alpha[0], &alpha[1]), &alpha[2]) != v(&alpha[0], &v(&alpha[1], &alpha[2])) {
        return err("vertical composition is not associative");
    }
    let unit = TwoMorphismMatrix::identity(&OneMorphismMatrix::identity(&x, &h), M);
    if hc(&unit, &alpha[0]) != alpha[0] || v(&TwoMorphismMatrix::identity(&f[0], M), &alpha[0]) != alpha[0] {
        return err("identities are not units");
    }
    if dual_2(&dual_2(&alpha[0])) != alpha[0] {
        return err("dual is not an involution");
    }
    if dual_2(&v(&alpha[0], &alpha[1])) != v(&dual_2(&alpha[1]), &dual_2(&alpha[0])) {
        return err("dual does not reverse vertical composites");
    }
    if dual_2(&hc(&alpha[0], &beta[0])) != hc(&dual_2(&alpha[0]), &dual_2(&beta[0])) {
        return err("dual does not commute with horizontal composites");
    }
    Ok(())
}

fn two(gen: &mut Gen, f: &OneMorphismMatrix, g: &OneMorphismMatrix) -> TwoMorphismMatrix {
    let entries = (0..f.rows())
        .map(|i| {
            (0..f.cols())
                .map(|j| {
                    let (r, c) = (f.degree(i, j), g.degree(i, j));
                    let rows = (0..r).map(|_| (0..c).map(|_| gen.scalar()).collect()).collect();
                    shaped(CMatrix::from_rows(M, rows).unwrap(), r, c)
                })
                .collect()
        })
        .collect();
    TwoMorphismMatrix::new(f.clone(), g.clone(), entries).unwrap()
}
