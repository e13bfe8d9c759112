use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{combinations, OrderedTriangulation};
use crate::algebra::snf::smith_invariants;

/// A finitely generated abelian group as a list of cyclic orders, with
/// `0` standing for a copy of `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub cyclic: Vec<u64>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        HomologyGroup { cyclic: Vec::new() }
    }

    pub fn integers(rank: usize) -> Self {
        HomologyGroup { cyclic: vec![0; rank] }
    }

    pub fn free_rank(&self) -> usize {
        self.cyclic.iter().filter(|&&c| c == 0).count()
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        self.cyclic.iter().try_fold(BigUint::one(), |acc, &c| (c != 0).then(|| acc * c))
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.cyclic.iter().map(|&c| if c == 0 { "Z".to_string() } else { format!("Z/{c}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Boundary matrix `C_k -> C_{k-1}` (rows: (k-1)-faces, columns: k-faces).
fn boundary_matrix(t: &OrderedTriangulation, k: usize) -> Vec<Vec<i64>> {
    let rows = t.faces(k - 1).len();
    let mut m = vec![vec![0i64; t.faces(k).len()]; rows];
    let combos = combinations(k + 1, k);
    for (j, s) in t.faces(k).iter().enumerate() {
        for c in &combos {
            let omitted = (0..=k).find(|i| !c.contains(i)).unwrap();
            let face: Vec<usize> = c.iter().map(|&i| s[i]).collect();
            let i = t.face_index(&face).expect("face of a face is present");
            m[i][j] = if omitted % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Simplicial homology with coefficients in `Z` (`n = 0`) or `Z/n`.
pub fn homology(t: &OrderedTriangulation, n: u64) -> Vec<HomologyGroup> {
    let d = t.dim();
    // invariant factors of each boundary map, index k for C_k -> C_{k-1}
    let mut inv: Vec<Vec<u64>> = vec![Vec::new(); d + 2];
    for k in 1..=d {
        inv[k] = smith_invariants(&boundary_matrix(t, k))
            .into_iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
            .collect();
    }
    let integral: Vec<HomologyGroup> = (0..=d)
        .map(|k| {
            let ck = t.faces(k).len();
            let free = ck - inv[k].len() - inv[k + 1].len();
            let mut cyclic = vec![0; free];
            cyclic.extend(inv[k + 1].iter().copied().filter(|&x| x > 1));
            HomologyGroup { cyclic }
        })
        .collect();
    if n == 0 {
        return integral;
    }
    (0..=d)
        .map(|k| {
            let mut cyclic = Vec::new();
            for &c in &integral[k].cyclic {
                let g = if c == 0 { n } else { c.gcd(&n) };
                if g > 1 {
                    cyclic.push(g);
                }
            }
            if k > 0 {
                for &c in &integral[k - 1].cyclic {
                    if c != 0 && c.gcd(&n) > 1 {
                        cyclic.push(c.gcd(&n));
                    }
                }
            }
            HomologyGroup { cyclic }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary_of_5simplex;

    #[test]
    fn sphere_homology() {
        let h = homology(&boundary_of_5simplex(), 0);
        assert_eq!(h.iter().map(|g| g.to_string()).collect::<Vec<_>>(), vec!["Z", "0", "0", "0", "Z"]);
        let h2 = homology(&boundary_of_5simplex(), 2);
        assert_eq!(h2[0].to_string(), "Z/2");
        assert_eq!(h2[4].order(), Some(BigUint::from(2u32)));
    }
}
