//! Exhaustive local Pachner-move checks on the six facets of a 5-simplex.
//!
//! Labels on `Delta^5` are determined by `g` on the edges `01, 12, 23, 34, 45`
//! and `h` on the ten triangles through vertex `0`. The facet omitting vertex
//! `i` carries sign `(-1)^i`. A move exchanges a set `A` of facets for the
//! complementary set `B`; labels interior to `B` are summed over and the
//! change in `v0`, `v1` is absorbed by the normalization.

use std::fmt;

use super::simplex::{edge5, tri5, z_simplex_local};
use crate::structure::SemiWeakStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PachnerMove {
    ThreeThree,
    TwoFour,
    OneFive,
}

impl PachnerMove {
    pub const ALL: [PachnerMove; 3] = [PachnerMove::ThreeThree, PachnerMove::TwoFour, PachnerMove::OneFive];

    pub fn as_str(self) -> &'static str {
        match self {
            PachnerMove::ThreeThree => "3-3",
            PachnerMove::TwoFour => "2-4",
            PachnerMove::OneFive => "1-5",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        PachnerMove::ALL.into_iter().find(|m| m.as_str() == s)
    }

    /// Facets (by omitted vertex) on the `A` side.
    fn a_side(self) -> &'static [usize] {
        match self {
            PachnerMove::ThreeThree => &[0, 2, 4],
            PachnerMove::TwoFour => &[1, 4],
            PachnerMove::OneFive => &[5],
        }
    }

    /// Positions among the fifteen determining labels (`g1..g5`, then
    /// `h1..h10`) that are interior to the `B` side.
    fn free(self) -> &'static [usize] {
        match self {
            PachnerMove::ThreeThree => &[],
            // triangle 014
            PachnerMove::TwoFour => &[7],
            // g on 45; h on 015, 025, 035, 045
            PachnerMove::OneFive => &[4, 8, 11, 13, 14],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PachnerCounterexample {
    /// `g` on `01, 12, 23, 34, 45`.
    pub g: Vec<usize>,
    /// `h` on `012, 013, 014, 015, 023, 024, 025, 034, 035, 045`.
    pub h: Vec<usize>,
    /// Exponent histogram of the `B` side over the interior labels.
    pub b_side: Vec<u64>,
    /// Exponent of the `A` side.
    pub a_side: u32,
}

impl fmt::Display for PachnerCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g = {:?}, h = {:?}: A side zeta^{}, B side exponent counts {:?}", self.g, self.h, self.a_side, self.b_side)
    }
}

#[derive(Clone, Debug)]
pub struct PachnerReport {
    pub mv: PachnerMove,
    /// Number of boundary labellings checked.
    pub checked: u64,
    pub counterexample: Option<PachnerCounterexample>,
}

impl PachnerReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Full labels of `Delta^5` from the fifteen determining labels, as
/// `(g[a][b], h[a][b][c])` tables.
#[allow(clippy::type_complexity)]
fn extend(s: &SemiWeakStructure, det: &[usize]) -> ([[usize; 6]; 6], [[[usize; 6]; 6]; 6]) {
    let (grp, hg) = (s.g(), s.h());
    let mut g = [[0usize; 6]; 6];
    for a in 0..6 {
        for b in a + 1..6 {
            g[a][b] = if b == a + 1 { det[a] } else { grp.mul(det[b - 1], g[a][b - 1]) };
        }
    }
    let mut h = [[[0usize; 6]; 6]; 6];
    let mut k = 5;
    for b in 1..6 {
        for c in b + 1..6 {
            h[0][b][c] = det[k];
            k += 1;
        }
    }
    for a in 1..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                let x = hg.add(s.alpha0(g[b][c], g[a][b], g[0][a]), h[0][b][c]);
                h[a][b][c] = hg.add(hg.sub(x, h[0][a][c]), h[0][a][b]);
            }
        }
    }
    (g, h)
}

/// Signed exponent `(-1)^i Z_i` of the facet omitting `omit`.
fn facet_exponent(s: &SemiWeakStructure, g: &[[usize; 6]; 6], h: &[[[usize; 6]; 6]; 6], omit: usize) -> i64 {
    let v: Vec<usize> = (0..6).filter(|&x| x != omit).collect();
    let mut lg = [0usize; 10];
    let mut lh = [0usize; 10];
    for p in 0..5 {
        for q in p + 1..5 {
            lg[edge5(p, q)] = g[v[p]][v[q]];
            for r in q + 1..5 {
                lh[tri5(p, q, r)] = h[v[p]][v[q]][v[r]];
            }
        }
    }
    let z = z_simplex_local(s, &lg, &lh);
    if omit.is_multiple_of(2) {
        z
    } else {
        -z
    }
}

/// Checks one move over every boundary labelling.
pub fn check_move(s: &SemiWeakStructure, mv: PachnerMove) -> PachnerReport {
    let (ng, nh, m) = (s.g().order(), s.h().order(), s.m() as i64);
    let radix = |i: usize| if i < 5 { ng } else { nh };
    let free = mv.free();
    let outer: Vec<usize> = (0..15).filter(|i| !free.contains(i)).collect();
    let a_side = mv.a_side();
    let b_side: Vec<usize> = (0..6).filter(|i| !a_side.contains(i)).collect();
    let mut det = [0usize; 15];
    let mut checked = 0u64;
    let mut hist = vec![0u64; m as usize];
    loop {
        hist.iter_mut().for_each(|x| *x = 0);
        for x in free {
            det[*x] = 0;
        }
        let mut a_exp = None;
        loop {
            let (g, h) = extend(s, &det);
            let a: i64 = a_side.iter().map(|&i| facet_exponent(s, &g, &h, i)).sum();
            let a = a.rem_euclid(m) as u32;
            match a_exp {
                None => a_exp = Some(a),
                // the A side must not see interior labels
                Some(prev) if prev != a => {
                    hist[0] = u64::MAX;
                }
                _ => {}
            }
            let b: i64 = b_side.iter().map(|&i| -facet_exponent(s, &g, &h, i)).sum();
            let idx = b.rem_euclid(m) as usize;
            hist[idx] = hist[idx].saturating_add(1);
            if !odometer(&mut det, free, &radix) {
                break;
            }
        }
        checked += 1;
        let a = a_exp.expect("at least one interior labelling");
        let total: u64 = free.iter().map(|&i| radix(i) as u64).product();
        if hist[a as usize] != total {
            let counterexample = PachnerCounterexample {
                g: det[..5].to_vec(),
                h: det[5..].to_vec(),
                b_side: hist,
                a_side: a,
            };
            return PachnerReport { mv, checked, counterexample: Some(counterexample) };
        }
        if !odometer(&mut det, &outer, &radix) {
            break;
        }
    }
    PachnerReport { mv, checked, counterexample: None }
}

/// Advances the digits at `positions`; false once they wrap around.
fn odometer(det: &mut [usize; 15], positions: &[usize], radix: &impl Fn(usize) -> usize) -> bool {
    for &i in positions {
        det[i] += 1;
        if det[i] < radix(i) {
            return true;
        }
        det[i] = 0;
    }
    false
}

/// All three moves.
pub fn check_all(s: &SemiWeakStructure) -> Vec<PachnerReport> {
    PachnerMove::ALL.into_iter().map(|mv| check_move(s, mv)).collect()
}
