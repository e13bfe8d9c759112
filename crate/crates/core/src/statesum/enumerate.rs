//! Enumerative evaluation: every admissible labelling is visited.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;

use super::{from_histogram, Facets};
use crate::algebra::Cyclotomic;
use crate::complex::OrderedTriangulation;
use crate::error::{Error, Result};
use crate::labelling::{count_labellings, enumerate_labellings, FlatSearch, HSystem};
use crate::structure::{MapName, SemiWeakStructure};

pub(super) fn check_budget(total: &BigUint, budget: u64) -> Result<()> {
    if *total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed: total.to_string(), budget });
    }
    Ok(())
}

pub(super) fn brute(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    facets: &Facets,
    budget: u64,
) -> Result<(Cyclotomic, BigUint)> {
    let m = s.m() as i64;
    let mut counts = vec![0u64; m as usize];
    let n = enumerate_labellings(t, s, budget, |lab| {
        let e: i64 = (0..facets.len()).map(|f| facets.weight(s, f, &lab.g, &lab.h)).sum();
        counts[e.rem_euclid(m) as usize] += 1;
    })?;
    Ok((from_histogram(s.m(), &counts), BigUint::from(n)))
}

/// Visits the reflected mixed-radix Gray code on `radices`, calling
/// `step(j, +1 | -1)` for every digit change after the initial tuple.
pub(crate) fn gray_walk(radices: &[u64], mut step: impl FnMut(usize, i64)) {
    let mut digits = vec![0u64; radices.len()];
    let mut dirs = vec![1i64; radices.len()];
    loop {
        let mut j = 0;
        loop {
            if j == radices.len() {
                return;
            }
            let next = digits[j] as i64 + dirs[j];
            if next >= 0 && next < radices[j] as i64 {
                digits[j] = next as u64;
                step(j, dirs[j]);
                break;
            }
            dirs[j] = -dirs[j];
            j += 1;
        }
    }
}

pub(super) fn gray(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    facets: &Facets,
    budget: u64,
    gauge_fix: bool,
    threads: usize,
) -> Result<(Cyclotomic, BigUint)> {
    let total = count_labellings(t, s)?;
    let (search, orbit) =
        if gauge_fix { FlatSearch::gauge_fixed(t, s.g()) } else { (FlatSearch::new(t, s.g()), BigUint::from(1u8)) };
    check_budget(&(&total / &orbit), budget)?;
    let hg = s.h();
    let m = s.m() as i64;
    let sys = HSystem::new(t, hg, !s.is_trivial_map(MapName::Alpha0))?;
    let kernel = sys.kernel();
    let radices: Vec<u64> = kernel.iter().map(|k| k.1).collect();

    let mut tri_facets = vec![Vec::new(); t.faces(2).len()];
    for f in 0..facets.len() {
        for &x in &facets.tris[f] {
            tri_facets[x].push(f);
        }
    }
    let support: Vec<(Vec<usize>, Vec<usize>)> = kernel
        .iter()
        .map(|(k, _)| {
            let tris: Vec<usize> = (0..k.len()).filter(|&x| k[x] != 0).collect();
            let mut fs: Vec<usize> = tris.iter().flat_map(|&x| tri_facets[x].iter().copied()).collect();
            fs.sort_unstable();
            fs.dedup();
            (tris, fs)
        })
        .collect();

    // the highest digits are split off into independent sub-walks
    let threads = threads.max(1);
    let mut low = radices.len();
    let mut chunks = 1u64;
    while threads > 1 && low > 0 && chunks < 8 * threads as u64 {
        low -= 1;
        chunks *= radices[low];
    }
    let walk = |g: &[usize], h0: &[usize], chunk: u64, counts: &mut [u64]| {
        let mut h = h0.to_vec();
        let mut c = chunk;
        for j in low..radices.len() {
            let digit = c % radices[j];
            c /= radices[j];
            for &x in &support[j].0 {
                for _ in 0..digit {
                    h[x] = hg.add(h[x], kernel[j].0[x]);
                }
            }
        }
        let mut w: Vec<i64> = (0..facets.len()).map(|f| facets.weight(s, f, g, &h)).collect();
        let mut e: i64 = w.iter().sum();
        counts[e.rem_euclid(m) as usize] += 1;
        gray_walk(&radices[..low], |j, dir| {
            let (k, _) = &kernel[j];
            for &x in &support[j].0 {
                h[x] = if dir > 0 { hg.add(h[x], k[x]) } else { hg.sub(h[x], k[x]) };
            }
            for &f in &support[j].1 {
                let nw = facets.weight(s, f, g, &h);
                e += nw - w[f];
                w[f] = nw;
            }
            counts[e.rem_euclid(m) as usize] += 1;
        });
    };

    let mut counts = vec![0u64; m as usize];
    let mut err = None;
    search.for_each(|g| {
        let h0 = match sys.particular(&sys.rhs(|a, b, c| s.alpha0(a, b, c), g)) {
            Ok(Some(p)) => p,
            Ok(None) => return ControlFlow::Continue(()),
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        };
        if chunks == 1 {
            walk(g, &h0, 0, &mut counts);
            return ControlFlow::Continue(());
        }
        let next = AtomicU64::new(0);
        let parts: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|_| {
                    scope.spawn(|| {
                        let mut local = vec![0u64; m as usize];
                        loop {
                            let c = next.fetch_add(1, Ordering::Relaxed);
                            if c >= chunks {
                                break local;
                            }
                            walk(g, &h0, c, &mut local);
                        }
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for part in parts {
            counts.iter_mut().zip(part).for_each(|(a, b)| *a += b);
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }
    let hist = from_histogram(s.m(), &counts);
    let scale = num_rational::BigRational::from_integer(num_bigint::BigInt::from(orbit));
    Ok((hist.scale(&scale), total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gray_walk_visits_everything_once() {
        let radices = [3u64, 2, 4];
        let mut cur = vec![0i64; 3];
        let mut seen = std::collections::HashSet::new();
        seen.insert(cur.clone());
        gray_walk(&radices, |j, d| {
            cur[j] += d;
            assert!(cur[j] >= 0 && cur[j] < radices[j] as i64);
            assert!(seen.insert(cur.clone()), "repeat {cur:?}");
        });
        assert_eq!(seen.len(), 24);
    }
}
