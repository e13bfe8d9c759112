//! Exhaustive search for an equivalence between two structures.
//!
//! Conditions are peeled off in dependency order: automorphisms against
//! condition 5, `mu` against 2 and 3, `Phi` against 1, characters `psi` and
//! `chi` against 4 and 6 for each `Phi`, and finally `phi` is solved from
//! condition 9 as a linear system mod `m`.

use std::ops::ControlFlow;

use super::{check_condition, EquivMap, EquivalenceData, Sides};
use crate::algebra::{solve_mod, FiniteAbelianGroup};
use crate::error::{Error, Result};
use crate::structure::{tuples, SemiWeakStructure};

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Candidate combinations examined before giving up with
    /// `BudgetExceeded`.
    pub budget: u64,
    /// Also try every automorphism of `G`, `H` and every Galois exponent.
    pub widen: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 1 << 20, widen: false }
    }
}

struct Counter {
    used: u64,
    budget: u64,
}

impl Counter {
    fn take(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.budget {
            return Err(Error::BudgetExceeded { needed: format!("more than {} candidates", self.budget), budget: self.budget });
        }
        Ok(())
    }
}

/// Homomorphisms `H -> Z/m` as value tables.
fn characters(h: &FiniteAbelianGroup, m: u32) -> Vec<Vec<u32>> {
    let steps: Vec<u64> = h.cyclic_orders().iter().map(|&n| m as u64 / num_integer::gcd(n, m as u64)).collect();
    let choices: Vec<usize> = steps.iter().map(|&st| (m as u64 / st) as usize).collect();
    tuples(&choices)
        .into_iter()
        .map(|c| {
            (0..h.order())
                .map(|x| {
                    let comps = h.components(x);
                    let v: u64 = comps.iter().zip(&c).zip(&steps).map(|((a, &k), st)| a * k as u64 * st).sum();
                    (v % m as u64) as u32
                })
                .collect()
        })
        .collect()
}

/// All normalized tables over `free` positions with values below `radix`,
/// visited in turn.
fn for_each_normalized(
    positions: &[Vec<usize>],
    radix: usize,
    counter: &mut Counter,
    mut f: impl FnMut(&[Vec<usize>], &[usize]) -> Result<ControlFlow<()>>,
) -> Result<()> {
    let free: Vec<Vec<usize>> = positions.iter().filter(|a| a.iter().all(|&x| x != 0)).cloned().collect();
    let total = (radix as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
    counter.take(total.min(u64::MAX as u128) as u64)?;
    for values in tuples(&vec![radix; free.len()]) {
        if f(&free, &values)?.is_break() {
            break;
        }
    }
    Ok(())
}

fn passes(s: &SemiWeakStructure, t: &SemiWeakStructure, e: &EquivalenceData, conds: &[usize]) -> bool {
    conds.iter().all(|&c| check_condition(s, t, e, c).failure.is_none())
}

/// Finds an equivalence from `s` to `t`, or `None` if there is none with
/// the automorphisms tried.
pub fn search_equivalence(
    s: &SemiWeakStructure,
    t: &SemiWeakStructure,
    opts: SearchOptions,
) -> Result<Option<EquivalenceData>> {
    if s.g() != t.g() || s.h() != t.h() || s.m() != t.m() {
        return Err(Error::InvalidEquivalence("the structures live on different (G, H, m)".into()));
    }
    let (g, h, m) = (s.g(), s.h(), s.m());
    let mut counter = Counter { used: 0, budget: opts.budget };
    let identity = EquivalenceData::identity(g, h, m);
    let (auts_g, auts_h, galois) = if opts.widen {
        let r: Vec<u32> = (1..m.max(2)).filter(|&r| num_integer::gcd(r, m) == 1).collect();
        (g.automorphisms(), h.automorphisms(), r)
    } else {
        (vec![identity.aut_g.clone()], vec![identity.aut_h.clone()], vec![1])
    };
    let homs = characters(h, m);
    for ag in &auts_g {
        for ah in &auts_h {
            for &r in &galois {
                counter.take(1)?;
                let mut base = identity.clone();
                base.aut_g = ag.clone();
                base.aut_h = ah.clone();
                base.aut_r = r;
                if !passes(s, t, &base, &[5]) {
                    continue;
                }
                if let Some(found) = search_with_automorphisms(s, t, base, &homs, &mut counter)? {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

fn search_with_automorphisms(
    s: &SemiWeakStructure,
    t: &SemiWeakStructure,
    mut e: EquivalenceData,
    homs: &[Vec<u32>],
    counter: &mut Counter,
) -> Result<Option<EquivalenceData>> {
    let (ng, nh, m) = (s.g().order(), s.h().order(), s.m());
    // mu: conditions 2 and 3 involve nothing else
    let mut mu_found = false;
    for_each_normalized(&e.domain(EquivMap::Mu), m as usize, counter, |free, vals| {
        for (a, &v) in free.iter().zip(vals) {
            e.set(EquivMap::Mu, a, v as i64)?;
        }
        mu_found = passes(s, t, &e, &[2, 3]);
        Ok(if mu_found { ControlFlow::Break(()) } else { ControlFlow::Continue(()) })
    })?;
    if !mu_found {
        return Ok(None);
    }
    let mut big_phis = Vec::new();
    for_each_normalized(&e.domain(EquivMap::BigPhi), nh, counter, |free, vals| {
        for (a, &v) in free.iter().zip(vals) {
            e.set(EquivMap::BigPhi, a, v as i64)?;
        }
        if passes(s, t, &e, &[1]) {
            big_phis.push(e.big_phi.clone());
        }
        Ok(ControlFlow::Continue(()))
    })?;
    let per_g = tuples(&vec![homs.len(); ng - 1]);
    for bp in big_phis {
        e.big_phi = bp;
        let mut psis = Vec::new();
        let mut chis = Vec::new();
        for choice in &per_g {
            counter.take(2)?;
            for (gi, &c) in choice.iter().enumerate() {
                for x in 0..nh {
                    e.psi[x * ng + gi + 1] = homs[c][x];
                    e.chi[(gi + 1) * nh + x] = homs[c][x];
                }
            }
            if passes(s, t, &e, &[4]) {
                psis.push(e.psi.clone());
            }
            if passes(s, t, &e, &[6]) {
                chis.push(e.chi.clone());
            }
        }
        for psi in &psis {
            for chi in &chis {
                counter.take(1)?;
                e.psi = psi.clone();
                e.chi = chi.clone();
                if let Some(phi) = solve_phi(s, t, &e)? {
                    e.phi = phi;
                    debug_assert!(super::verify_equivalence(s, t, &e).all_passed());
                    return Ok(Some(e));
                }
            }
        }
    }
    Ok(None)
}

/// Solves condition 9 for `phi` with everything else fixed.
fn solve_phi(s: &SemiWeakStructure, t: &SemiWeakStructure, e: &EquivalenceData) -> Result<Option<Vec<u32>>> {
    let g = s.g();
    let n = g.order();
    let m = s.m() as i64;
    let k = n - 1;
    let cols = k * k * k;
    let var = |a: usize, b: usize, c: usize| -> Option<usize> {
        (a != 0 && b != 0 && c != 0).then(|| ((a - 1) * k + (b - 1)) * k + (c - 1))
    };
    let sides = Sides { s, t, e };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in tuples(&[n; 4]) {
        let (g1, g2, g3, g4) = (a[0], a[1], a[2], a[3]);
        let mut row = vec![0i64; cols];
        let terms = [
            (var(g1, g2, g3), 1),
            (var(g1, g.mul(g2, g3), g4), 1),
            (var(g2, g3, g4), 1),
            (var(g.mul(g1, g2), g3, g4), -1),
            (var(g1, g2, g.mul(g3, g4)), -1),
        ];
        for (v, c) in terms {
            if let Some(v) = v {
                row[v] += c;
            }
        }
        let (l, r) = sides.pentagonator_sides_without_phi(g1, g2, g3, g4);
        let b = (r - l).rem_euclid(m);
        if row.iter().all(|&x| x == 0) {
            if b != 0 {
                return Ok(None);
            }
            continue;
        }
        rows.push(row.iter().map(|x| x.rem_euclid(m)).collect::<Vec<_>>());
        rhs.push(b);
    }
    if cols == 0 || rows.is_empty() {
        return Ok(Some(vec![0; n * n * n]));
    }
    let Some(sol) = solve_mod(&rows, &rhs, cols, m as u64)? else {
        return Ok(None);
    };
    let mut phi = vec![0u32; n * n * n];
    for a in tuples(&[n; 3]) {
        if let Some(v) = var(a[0], a[1], a[2]) {
            phi[(a[0] * n + a[1]) * n + a[2]] = sol.particular[v] as u32;
        }
    }
    Ok(Some(phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{twist, verify_equivalence};
    use crate::structure::{br_iota1, br_tau};

    #[test]
    fn characters_of_cyclic_groups() {
        let h = FiniteAbelianGroup::cyclic(2).unwrap();
        assert_eq!(characters(&h, 4), vec![vec![0, 0], vec![0, 2]]);
        assert_eq!(characters(&h, 3).len(), 1);
        let h = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        assert_eq!(characters(&h, 2).len(), 4);
    }

    #[test]
    fn finds_itself() {
        let s = br_iota1(2, 1).unwrap();
        let e = search_equivalence(&s, &s, SearchOptions::default()).unwrap().unwrap();
        assert!(verify_equivalence(&s, &s, &e).all_passed());
    }

    #[test]
    fn finds_a_twist_back() {
        let s = br_iota1(2, 1).unwrap();
        let mut e = EquivalenceData::identity(s.g(), s.h(), s.m());
        e.set(EquivMap::Phi, &[1, 1, 1], 1).unwrap();
        e.set(EquivMap::Psi, &[1, 1], 2).unwrap();
        let t = twist(&s, &e).unwrap();
        assert_ne!(t, s);
        let w = search_equivalence(&s, &t, SearchOptions::default()).unwrap().unwrap();
        assert!(verify_equivalence(&s, &t, &w).all_passed());
        let back = search_equivalence(&t, &s, SearchOptions::default()).unwrap().unwrap();
        assert!(verify_equivalence(&t, &s, &back).all_passed());
    }

    #[test]
    fn distinct_braidings_are_not_equivalent_without_widening() {
        let a = br_tau(3, 1).unwrap();
        let b = br_tau(3, 2).unwrap();
        assert!(search_equivalence(&a, &b, SearchOptions::default()).unwrap().is_none());
        // the Galois automorphism zeta -> zeta^2 maps one to the other
        let w = search_equivalence(&a, &b, SearchOptions { widen: true, ..Default::default() }).unwrap().unwrap();
        assert!(verify_equivalence(&a, &b, &w).all_passed());
    }

    #[test]
    fn budget_is_reported() {
        let s = br_iota1(3, 1).unwrap();
        let r = search_equivalence(&s, &s, SearchOptions { budget: 2, widen: false });
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }
}
