//! Structures whose weight is affine in the `H`-labels.
//!
//! With `alpha1` and `tau` trivial the weight of a facet is
//! `pi - iota3(A,B,h_ijk) - iota1(h_klm,C,D) + iota2(A,h_jkl,D)`. When each
//! `iota` is a character in its `H` argument, the total exponent over the
//! coset `p + K` is `E(p) + sum_j x_j c_j`, so the coset contributes
//! `|K| zeta^E(p)` if every `c_j` vanishes and zero otherwise.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use super::simplex::edge5;
use super::{from_histogram, Facets};
use crate::algebra::Cyclotomic;
use crate::complex::OrderedTriangulation;
use crate::error::{Error, Result};
use crate::labelling::{FlatSearch, HSystem};
use crate::structure::{MapName, SemiWeakStructure};

/// Largest coefficient table (entries) built; beyond it coefficients are
/// recomputed per edge labelling.
const TABLE_LIMIT: usize = 1 << 27;

pub(super) fn applicable(s: &SemiWeakStructure) -> std::result::Result<(), String> {
    for map in [MapName::Alpha1, MapName::Tau] {
        if !s.is_trivial_map(map) {
            return Err(format!("{} is not trivial", map.as_str()));
        }
    }
    let (ng, h, m) = (s.g().order(), s.h(), s.m());
    let add = |a: u32, b: u32| (a + b) % m;
    for x in 0..ng {
        for y in 0..ng {
            for h1 in 0..h.order() {
                for h2 in 0..h.order() {
                    let h12 = h.add(h1, h2);
                    if s.iota1(h12, x, y) != add(s.iota1(h1, x, y), s.iota1(h2, x, y)) {
                        return Err("iota1 is not a character in h".into());
                    }
                    if s.iota2(x, h12, y) != add(s.iota2(x, h1, y), s.iota2(x, h2, y)) {
                        return Err("iota2 is not a character in h".into());
                    }
                    if s.iota3(x, y, h12) != add(s.iota3(x, y, h1), s.iota3(x, y, h2)) {
                        return Err("iota3 is not a character in h".into());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Index of the arguments `(A, B, C, D) = (g_lm, g_kl, g_jk, g_ij)`.
#[inline]
fn code(n: usize, g: &[usize], edges: &[usize; 10]) -> usize {
    let a = g[edges[edge5(3, 4)]];
    let b = g[edges[edge5(2, 3)]];
    let c = g[edges[edge5(1, 2)]];
    let d = g[edges[edge5(0, 1)]];
    ((a * n + b) * n + c) * n + d
}

pub(super) fn evaluate(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    facets: &Facets,
    budget: u64,
    gauge_fix: bool,
) -> Result<(Cyclotomic, BigUint)> {
    let n = s.g().order();
    let m = s.m();
    let (search, orbit) =
        if gauge_fix { FlatSearch::gauge_fixed(t, s.g()) } else { (FlatSearch::new(t, s.g()), BigUint::from(1u8)) };
    let mut flat = 0u64;
    search.for_each(|_| {
        flat += 1;
        if flat > budget {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    if flat > budget {
        return Err(Error::BudgetExceeded { needed: format!("more than {budget} flat edge labellings"), budget });
    }

    let inhomogeneous = !s.is_trivial_map(MapName::Alpha0);
    let sys = HSystem::new(t, s.h(), inhomogeneous)?;
    let kernel = sys.kernel();
    let d = kernel.len();
    let codes = n.pow(4);
    let nf = facets.len();
    // per (facet, code): eps pi, then character values on the kernel generators
    let local = |tri: &[usize; 10], p: usize, q: usize, r: usize| tri[super::simplex::tri5(p, q, r)];
    let coefficients = |f: usize, cd: usize, out: &mut [u32]| {
        let eps = facets.eps[f];
        let tri = &facets.tris[f];
        let (ijk, jkl, klm) = (local(tri, 0, 1, 2), local(tri, 1, 2, 3), local(tri, 2, 3, 4));
        let (a, b, c, dd) = (cd / (n * n * n), (cd / (n * n)) % n, (cd / n) % n, cd % n);
        let signed = |v: i64| (eps * v).rem_euclid(m as i64) as u32;
        out[0] = signed(s.pi(a, b, c, dd) as i64);
        for (j, (k, _)) in kernel.iter().enumerate() {
            let v = -(s.iota3(a, b, k[ijk]) as i64) - s.iota1(k[klm], c, dd) as i64 + s.iota2(a, k[jkl], dd) as i64;
            out[1 + j] = signed(v);
        }
    };
    // large complexes with few edge labellings skip the table
    let direct = nf.saturating_mul(codes).saturating_mul(d + 1) > TABLE_LIMIT;
    let mut table: Vec<u32> = Vec::new();
    if !direct {
        table = vec![0; nf * codes * (d + 1)];
        for f in 0..nf {
            for cd in 0..codes {
                coefficients(f, cd, &mut table[(f * codes + cd) * (d + 1)..][..d + 1]);
            }
        }
    }
    let mut scratch = vec![0u32; d + 1];

    let mut current = vec![usize::MAX; nf];
    let mut acc = vec![0u32; d + 1];
    let mut counts = vec![0u64; m as usize];
    let mut solvable = 0u64;
    let mut err = None;
    search.for_each(|g| {
        if direct {
            acc.iter_mut().for_each(|a| *a = 0);
            for f in 0..nf {
                coefficients(f, code(n, g, &facets.edges[f]), &mut scratch);
                acc.iter_mut().zip(&scratch).for_each(|(a, &v)| *a = (*a + v) % m);
            }
        }
        for f in (0..nf).filter(|_| !direct) {
            let cd = code(n, g, &facets.edges[f]);
            if cd != current[f] {
                if current[f] != usize::MAX {
                    let old = &table[(f * codes + current[f]) * (d + 1)..][..d + 1];
                    acc.iter_mut().zip(old).for_each(|(a, &o)| *a -= o);
                }
                let new = &table[(f * codes + cd) * (d + 1)..][..d + 1];
                acc.iter_mut().zip(new).for_each(|(a, &v)| *a += v);
                current[f] = cd;
            }
        }
        let e = if inhomogeneous {
            match sys.particular(&sys.rhs(|a, b, c| s.alpha0(a, b, c), g)) {
                Ok(Some(p)) => (0..nf).map(|f| facets.weight(s, f, g, &p)).sum::<i64>().rem_euclid(m as i64) as usize,
                Ok(None) => return ControlFlow::Continue(()),
                Err(e) => {
                    err = Some(e);
                    return ControlFlow::Break(());
                }
            }
        } else {
            (acc[0] % m) as usize
        };
        solvable += 1;
        if acc[1..].iter().all(|&c| c % m == 0) {
            counts[e] += 1;
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }
    let k = sys.kernel_order() * &orbit;
    let hist = from_histogram(m, &counts);
    let scale = num_rational::BigRational::from_integer(num_bigint::BigInt::from(k.clone()));
    Ok((hist.scale(&scale), BigUint::from(solvable) * k))
}
