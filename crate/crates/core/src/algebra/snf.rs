//! Smith normal form over the integers and linear systems over `Z/n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    /// Diagonal entries `d_0, ..., d_{min(r,c)-1}` (trailing zeros included).
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix `D` as a dense `rows x cols` matrix.
    pub fn d_matrix(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (i, di) in self.diagonal.iter().enumerate() {
            d[i][i] = di.clone();
        }
        d
    }
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

struct Snf {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl Snf {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        fn go(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                if !s.is_zero() {
                    *x += q * s;
                }
            }
        }
        go(&mut self.a, i, j, q);
        if let Some(u) = &mut self.u {
            go(u, i, j, q);
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        fn go(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
            for row in m.iter_mut() {
                if !row[j].is_zero() {
                    let t = q * &row[j];
                    row[i] += t;
                }
            }
        }
        go(&mut self.a, i, j, q);
        if let Some(v) = &mut self.v {
            go(v, i, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn run(&mut self) -> Vec<BigInt> {
        let rows = self.a.len();
        let cols = self.a.first().map_or(0, |r| r.len());
        let mut diag = Vec::new();
        for t in 0..rows.min(cols) {
            // smallest nonzero entry of the remaining block
            let mut best: Option<(usize, usize)> = None;
            'scan: for i in t..rows {
                for j in t..cols {
                    let x = &self.a[i][j];
                    if !x.is_zero()
                        && best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs())
                    {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.add_row(i, t, &-q);
                    if !self.a[i][t].is_zero() {
                        self.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.add_col(j, t, &-q);
                    if !self.a[t][j].is_zero() {
                        self.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility of the remaining block by the pivot
                let p = self.a[t][t].clone();
                if p.abs().is_one() {
                    break;
                }
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
        }
        diag
    }
}

fn to_big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Smith normal form with transformation matrices.
pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithDecomposition {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut s = Snf { a: to_big(a), u: Some(identity(rows)), v: Some(identity(cols)) };
    let diagonal = s.run();
    SmithDecomposition { u: s.u.unwrap(), v: s.v.unwrap(), diagonal, rows, cols }
}

/// Invariant factors only (no transformation tracking).
pub fn smith_invariants(a: &[Vec<i64>]) -> Vec<BigInt> {
    let mut s = Snf { a: to_big(a), u: None, v: None };
    s.run()
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Coefficients `(s, t, b', a')` of the unimodular operation that replaces
/// a pivot `p` by `gcd(p, e)` and clears `e`. A pivot dividing `e` is kept.
fn elimination_coeffs(p: u64, e: u64) -> (i128, i128, i128, i128) {
    let (p, e) = (p as i128, e as i128);
    if e % p == 0 {
        return (1, 0, e / p, 1);
    }
    let (g, s, t) = ext_gcd(p, e);
    (s, t, e / g, p / g)
}

fn mod_inverse(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let (g, x, _) = ext_gcd(a as i128, n as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(n as i128) as u64
}

/// A matrix over `Z/n` brought to diagonal form `U A V = D` by invertible
/// row and column operations. Reusable for many right-hand sides.
#[derive(Clone, Debug)]
pub struct ModDiagonalization {
    n: u64,
    rows: usize,
    cols: usize,
    original: Vec<Vec<(usize, u64)>>,
    /// First `rank` rows of `U`; empty when row tracking was disabled.
    u_top: Vec<Vec<u64>>,
    tracked: bool,
    v: Vec<Vec<u64>>,
    diag: Vec<u64>,
}

impl ModDiagonalization {
    /// Diagonalizes `a` modulo `n`. With `track_rows = false` only
    /// homogeneous systems can be solved.
    pub fn new(a: &[Vec<i64>], cols: usize, n: u64, track_rows: bool) -> Result<Self> {
        if n == 0 || n > u32::MAX as u64 {
            return Err(Error::DimensionMismatch(format!("modulus {n} out of range")));
        }
        if let Some(r) = a.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        let rows = a.len();
        let red = |x: i64| x.rem_euclid(n as i64) as u64;
        let mut m: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| red(x)).collect()).collect();
        let original = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect())
            .collect();
        let mut u: Vec<Vec<u64>> = if track_rows {
            (0..rows).map(|i| (0..rows).map(|j| u64::from(i == j)).collect()).collect()
        } else {
            Vec::new()
        };
        let mut v: Vec<Vec<u64>> =
            (0..cols).map(|i| (0..cols).map(|j| u64::from(i == j)).collect()).collect();
        let mut diag = Vec::new();

        // combine two rows (or columns) x, y by the unimodular matrix
        // [[s, t], [-b', a']]
        fn combine(x: &mut [u64], y: &mut [u64], s: i128, t: i128, bq: i128, aq: i128, n: u64) {
            let nn = n as i128;
            let (s, t, bq, aq) = (s.rem_euclid(nn), t.rem_euclid(nn), bq.rem_euclid(nn), aq.rem_euclid(nn));
            for (xi, yi) in x.iter_mut().zip(y.iter_mut()) {
                let (a, b) = (*xi as i128, *yi as i128);
                if a == 0 && b == 0 {
                    continue;
                }
                *xi = ((s * a + t * b) % nn) as u64;
                *yi = ((aq * b - bq * a).rem_euclid(nn)) as u64;
            }
        }
        fn two_rows(m: &mut [Vec<u64>], i: usize, j: usize) -> (&mut [u64], &mut [u64]) {
            debug_assert!(i < j);
            let (lo, hi) = m.split_at_mut(j);
            (&mut lo[i], &mut hi[0])
        }

        for t in 0..rows.min(cols) {
            // prefer a unit pivot, otherwise the smallest gcd with n
            let mut best: Option<(usize, usize, u64)> = None;
            'scan: for i in t..rows {
                for j in t..cols {
                    let x = m[i][j];
                    if x == 0 {
                        continue;
                    }
                    let g = x.gcd(&n);
                    if best.is_none_or(|(_, _, bg)| g < bg) {
                        best = Some((i, j, g));
                        if g == 1 {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            m.swap(t, pi);
            if track_rows {
                u.swap(t, pi);
            }
            if pj != t {
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
            }
            loop {
                for i in t + 1..rows {
                    if m[i][t] == 0 {
                        continue;
                    }
                    let (s, tt, bq, aq) = elimination_coeffs(m[t][t], m[i][t]);
                    let (x, y) = two_rows(&mut m, t, i);
                    combine(x, y, s, tt, bq, aq, n);
                    if track_rows {
                        let (x, y) = two_rows(&mut u, t, i);
                        combine(x, y, s, tt, bq, aq, n);
                    }
                }
                let mut col_dirty = false;
                for j in t + 1..cols {
                    if m[t][j] == 0 {
                        continue;
                    }
                    let (s, tt, bq, aq) = elimination_coeffs(m[t][t], m[t][j]);
                    if (s, tt) != (1, 0) {
                        col_dirty = true;
                    }
                    // columns t and j of m and v
                    let nn = n as i128;
                    let (s, tt, bq, aq) =
                        (s.rem_euclid(nn), tt.rem_euclid(nn), bq.rem_euclid(nn), aq.rem_euclid(nn));
                    for row in m.iter_mut().chain(v.iter_mut()) {
                        let (a, b) = (row[t] as i128, row[j] as i128);
                        if a == 0 && b == 0 {
                            continue;
                        }
                        row[t] = ((s * a + tt * b) % nn) as u64;
                        row[j] = ((aq * b - bq * a).rem_euclid(nn)) as u64;
                    }
                }
                if !col_dirty || (t + 1..rows).all(|i| m[i][t] == 0) {
                    break;
                }
            }
            diag.push(m[t][t]);
        }
        let rank = diag.len();
        if track_rows {
            u.truncate(rank);
        }
        Ok(ModDiagonalization { n, rows, cols, original, u_top: u, tracked: track_rows, v, diag })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `A x mod n` using the original matrix.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        self.original
            .iter()
            .map(|row| {
                row.iter().fold(0u64, |acc, &(j, a)| ((acc as u128 + a as u128 * x[j] as u128) % self.n as u128) as u64)
            })
            .collect()
    }

    /// A particular solution of `A x = b (mod n)`, or `None` if unsolvable.
    pub fn solve(&self, b: &[u64]) -> Result<Option<Vec<u64>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                b.len(),
                self.rows
            )));
        }
        let n = self.n;
        if b.iter().all(|&x| x % n == 0) {
            return Ok(Some(vec![0; self.cols]));
        }
        if !self.tracked {
            return Err(Error::DimensionMismatch(
                "inhomogeneous system on a diagonalization without row tracking".into(),
            ));
        }
        let mut y = vec![0u64; self.cols];
        for (t, urow) in self.u_top.iter().enumerate() {
            let c = urow
                .iter()
                .zip(b)
                .fold(0u128, |acc, (&u, &bi)| (acc + u as u128 * (bi % n) as u128) % n as u128)
                as u64;
            let d = self.diag[t];
            let g = d.gcd(&n);
            if !c.is_multiple_of(g) {
                return Ok(None);
            }
            let ng = n / g;
            y[t] = ((c / g) as u128 * mod_inverse((d / g) % ng, ng) as u128 % ng as u128) as u64;
        }
        let x: Vec<u64> = self
            .v
            .iter()
            .map(|row| {
                row.iter().zip(&y).fold(0u128, |acc, (&a, &yy)| (acc + a as u128 * yy as u128) % n as u128)
                    as u64
            })
            .collect();
        let ok = self.apply(&x).iter().zip(b).all(|(&l, &r)| l == r % n);
        Ok(ok.then_some(x))
    }

    /// Generators of the kernel subgroup with their orders; the kernel is
    /// the direct sum of the cyclic groups they generate.
    pub fn kernel(&self) -> Vec<(Vec<u64>, u64)> {
        let n = self.n;
        let mut gens = Vec::new();
        let column = |t: usize, scale: u64| -> Vec<u64> {
            self.v.iter().map(|row| ((row[t] as u128 * scale as u128) % n as u128) as u64).collect()
        };
        for (t, &d) in self.diag.iter().enumerate() {
            let g = d.gcd(&n);
            if g > 1 {
                gens.push((column(t, n / g), g));
            }
        }
        if n > 1 {
            for t in self.rank()..self.cols {
                gens.push((column(t, 1), n));
            }
        }
        gens
    }

    pub fn kernel_order(&self) -> BigUint {
        self.kernel().iter().fold(BigUint::one(), |acc, (_, o)| acc * BigUint::from(*o))
    }
}

/// Solution set of a linear system modulo `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSolution {
    pub particular: Vec<u64>,
    /// Kernel generators with their additive orders.
    pub kernel: Vec<(Vec<u64>, u64)>,
    pub kernel_order: BigUint,
}

/// Solves `A x = b (mod n)`. Returns `Ok(None)` when no solution exists.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], cols: usize, n: u64) -> Result<Option<ModSolution>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!("{} equations but {} right-hand sides", a.len(), b.len())));
    }
    let diag = ModDiagonalization::new(a, cols, n, true)?;
    let rhs: Vec<u64> = b.iter().map(|&x| x.rem_euclid(n as i64) as u64).collect();
    Ok(diag.solve(&rhs)?.map(|particular| ModSolution {
        particular,
        kernel: diag.kernel(),
        kernel_order: diag.kernel_order(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        to_big(a)
    }

    fn check_snf(a: &[Vec<i64>]) {
        let s = smith_normal_form(a);
        assert_eq!(mat_mul(&mat_mul(&s.u, &big(a)), &s.v), s.d_matrix());
        assert_eq!(determinant(&s.u).abs(), BigInt::one());
        assert_eq!(determinant(&s.v).abs(), BigInt::one());
        for w in s.diagonal.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "{:?}", s.diagonal);
            } else if w[0].is_zero() {
                assert!(w[1].is_zero());
            }
        }
        assert!(s.diagonal.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(1)]);
        let s = smith_normal_form(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        check_snf(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&[vec![0, 0, 0], vec![0, 0, 0]]);
        assert!(s.diagonal.iter().all(|d| d.is_zero()));
        check_snf(&[vec![0, 0, 0], vec![0, 0, 0]]);
        check_snf(&[vec![4, 6], vec![6, 9], vec![2, 2]]);
    }

    #[test]
    fn solve_mod_examples() {
        let s = solve_mod(&[vec![0, 0, 0]], &[0], 3, 2).unwrap().unwrap();
        assert_eq!(s.particular, vec![0, 0, 0]);
        assert_eq!(s.kernel_order, BigUint::from(8u32));
        assert!(solve_mod(&[vec![2]], &[1], 1, 4).unwrap().is_none());
        let s = solve_mod(&[vec![2]], &[2], 1, 4).unwrap().unwrap();
        assert_eq!((2 * s.particular[0]) % 4, 2);
        assert_eq!(s.kernel_order, BigUint::from(2u32));
        assert_eq!(s.kernel, vec![(vec![2], 2)]);
        assert!(solve_mod(&[vec![1, 2]], &[1, 2], 2, 5).is_err());
    }

    fn enumerate_kernel(sol: &ModSolution, n: u64) -> HashSet<Vec<u64>> {
        let mut set = HashSet::new();
        let cols = sol.particular.len();
        set.insert(vec![0; cols]);
        for (g, _) in &sol.kernel {
            let mut next = HashSet::new();
            for v in &set {
                let mut w = v.clone();
                for _ in 0..n {
                    next.insert(w.clone());
                    for (wi, gi) in w.iter_mut().zip(g) {
                        *wi = (*wi + gi) % n;
                    }
                }
            }
            set = next;
        }
        set
    }

    proptest! {
        #[test]
        fn snf_random(a in proptest::collection::vec(proptest::collection::vec(-6i64..7, 3), 1..4)) {
            check_snf(&a);
        }

        #[test]
        fn solve_mod_random(
            n in 2u64..9,
            a in proptest::collection::vec(proptest::collection::vec(-8i64..9, 3), 1..4),
            x0 in proptest::collection::vec(0u64..9, 3),
            noise in any::<bool>(),
        ) {
            let cols = 3;
            let x0: Vec<u64> = x0.iter().map(|x| x % n).collect();
            let mut b: Vec<i64> = a.iter().map(|r| r.iter().zip(&x0).map(|(&ai, &xi)| ai * xi as i64).sum()).collect();
            if noise { b[0] += 1; }
            let sol = solve_mod(&a, &b, cols, n).unwrap();
            // brute force the full solution set
            let mut brute = HashSet::new();
            for x in 0..n.pow(3) {
                let v = vec![x % n, (x / n) % n, x / (n * n)];
                let ok = a.iter().zip(&b).all(|(r, &bi)| {
                    (r.iter().zip(&v).map(|(&ai, &vi)| ai * vi as i64).sum::<i64>() - bi).rem_euclid(n as i64) == 0
                });
                if ok { brute.insert(v); }
            }
            match sol {
                None => prop_assert!(brute.is_empty()),
                Some(s) => {
                    prop_assert!(brute.contains(&s.particular));
                    let ker = enumerate_kernel(&s, n);
                    prop_assert_eq!(BigUint::from(ker.len()), s.kernel_order.clone());
                    prop_assert_eq!(ker.len(), brute.len());
                    for k in &ker {
                        let shifted: Vec<u64> = k.iter().zip(&s.particular).map(|(a, b)| (a + b) % n).collect();
                        prop_assert!(brute.contains(&shifted));
                    }
                }
            }
        }
    }
}
