//! The weight of a single labelled 4-simplex `(ijklm)`.
//!
//! The weight is the value of a loop of moves on words of simple
//! 1-morphisms starting and ending at `[h_ilm, h_ikl, h_ijk]`. Tetrahedron
//! flips are identities; the structural cells are `iota3^-1`, `tau`,
//! `iota1^-1`, `pi` and `iota2`. With trivial `G` the loop is the 15j
//! expansion, with trivial `H` it is `pi`.

use super::brackets::Chain;
use crate::complex::OrderedTriangulation;
use crate::error::{Error, Result};
use crate::labelling::Labelling;
use crate::structure::{MapName, SemiWeakStructure};

/// Position of edge `(a, b)`, `a < b < 5`, in lexicographic order.
pub const fn edge5(a: usize, b: usize) -> usize {
    // rows start at 0, 4, 7, 9
    [0, 4, 7, 9][a] + (b - a - 1)
}

/// Position of triangle `(a, b, c)`, `a < b < c < 5`, in lexicographic order.
pub const fn tri5(a: usize, b: usize, c: usize) -> usize {
    const IDX: [[usize; 5]; 5] = [[0, 0, 0, 0, 0], [0, 0, 0, 1, 2], [0, 0, 0, 3, 4], [0, 0, 0, 0, 5], [0; 5]];
    const IDX1: [[usize; 5]; 5] = [[0; 5], [0; 5], [0, 0, 0, 6, 7], [0, 0, 0, 0, 8], [0; 5]];
    match a {
        0 => IDX[b][c],
        1 => IDX1[b][c],
        _ => 9,
    }
}

/// The arguments entering the weight, read off local labels
/// (`g` in `edge5` order, `h` in `tri5` order).
#[derive(Clone, Copy, Debug)]
struct Args {
    a: usize,
    b: usize,
    c: usize,
    d: usize,
}

fn args(g: &[usize]) -> Args {
    Args { a: g[edge5(3, 4)], b: g[edge5(2, 3)], c: g[edge5(1, 2)], d: g[edge5(0, 1)] }
}

/// Weight exponent when the 1-associator is trivial.
#[inline]
pub fn z_simplex_plain(s: &SemiWeakStructure, g: &[usize], h: &[usize]) -> i64 {
    let Args { a, b, c, d } = args(g);
    let (ijk, jkl, klm) = (h[tri5(0, 1, 2)], h[tri5(1, 2, 3)], h[tri5(2, 3, 4)]);
    -(s.iota3(a, b, ijk) as i64) + s.tau(klm, ijk) as i64 - s.iota1(klm, c, d) as i64
        + s.iota2(a, jkl, d) as i64
        + s.pi(a, b, c, d) as i64
}

/// Weight exponent (not reduced) of a 4-simplex with local labels.
pub fn z_simplex_local(s: &SemiWeakStructure, g: &[usize], h: &[usize]) -> i64 {
    if s.is_trivial_map(MapName::Alpha1) {
        return z_simplex_plain(s, g, h);
    }
    let a1 = |x: usize, y: usize, z: usize| s.alpha1(x, y, z) as i64;
    z_simplex_chain(s, g, h, &a1)
}

fn z_simplex_chain(s: &SemiWeakStructure, g: &[usize], h: &[usize], a1: &dyn Fn(usize, usize, usize) -> i64) -> i64 {
    let grp = s.g();
    let hg = s.h();
    let Args { a, b, c, d } = args(g);
    let ab = grp.mul(a, b);
    let bc = grp.mul(b, c);
    let cd = grp.mul(c, d);
    let letter = |x, y, z| hg.neg(s.alpha0(x, y, z));
    let t = |p, q, r| h[tri5(p, q, r)];
    let (ijk, ijl, ijm, ikl, ikm, ilm) = (t(0, 1, 2), t(0, 1, 3), t(0, 1, 4), t(0, 2, 3), t(0, 2, 4), t(0, 3, 4));
    let (jkl, jkm, jlm, klm) = (t(1, 2, 3), t(1, 2, 4), t(1, 3, 4), t(2, 3, 4));
    let l1 = letter(a, b, cd);
    let l2 = letter(ab, c, d);
    let l3 = letter(a, b, c);
    let l4 = letter(a, bc, d);
    let l5 = letter(b, c, d);

    let mut ch = Chain::new(hg, Some(a1), vec![ilm, ikl, ijk]);
    ch.apply_words(0, &[ilm, ikl], &[ikm, klm, l1], 0);
    ch.apply_words(2, &[l1, ijk], &[ijk, l1], -(s.iota3(a, b, ijk) as i64));
    ch.apply_words(1, &[klm, ijk], &[ijk, klm], s.tau(klm, ijk) as i64);
    ch.apply_words(0, &[ikm, ijk], &[ijm, jkm, l2], 0);
    ch.apply_words(2, &[l2, klm], &[klm, l2], -(s.iota1(klm, c, d) as i64));
    ch.apply_words(3, &[l2, l1], &[l3, l4, l5], s.pi(a, b, c, d) as i64);
    ch.apply_words(1, &[jkm, klm, l3], &[jlm, jkl], 0);
    ch.apply_words(2, &[jkl, l4], &[l4, jkl], s.iota2(a, jkl, d) as i64);
    ch.apply_words(0, &[ijm, jlm, l4], &[ilm, ijl], 0);
    ch.apply_words(1, &[ijl, jkl, l5], &[ikl, ijk], 0);
    debug_assert_eq!(ch.word(), &[ilm, ikl, ijk]);
    ch.total()
}

/// Whether local labels satisfy flatness and semi-flatness on the simplex.
pub fn locally_admissible(s: &SemiWeakStructure, g: &[usize], h: &[usize]) -> bool {
    let grp = s.g();
    let hg = s.h();
    for p in 0..5 {
        for q in p + 1..5 {
            for r in q + 1..5 {
                if g[edge5(p, r)] != grp.mul(g[edge5(q, r)], g[edge5(p, q)]) {
                    return false;
                }
            }
        }
    }
    for omit in 0..5 {
        let v: Vec<usize> = (0..5).filter(|&x| x != omit).collect();
        let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
        let lhs = hg.add(hg.sub(h[tri5(j, k, l)], h[tri5(i, k, l)]), hg.sub(h[tri5(i, j, l)], h[tri5(i, j, k)]));
        if lhs != s.alpha0(g[edge5(k, l)], g[edge5(j, k)], g[edge5(i, j)]) {
            return false;
        }
    }
    true
}

/// Weight exponent of facet `facet` of `t` under a global labelling,
/// reduced mod `m`.
pub fn z_simplex(s: &SemiWeakStructure, t: &OrderedTriangulation, lab: &Labelling, facet: usize) -> Result<u32> {
    let g: Vec<usize> = t.facet_faces(1, facet).iter().map(|&e| lab.g[e]).collect();
    let h: Vec<usize> = t.facet_faces(2, facet).iter().map(|&x| lab.h[x]).collect();
    if !locally_admissible(s, &g, &h) {
        return Err(Error::Inadmissible(format!("labels on facet {:?} are not semi-flat", t.facets()[facet])));
    }
    Ok(z_simplex_local(s, &g, &h).rem_euclid(s.m() as i64) as u32)
}
