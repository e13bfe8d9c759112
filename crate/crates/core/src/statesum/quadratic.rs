//! Trivial `G`, trivial `alpha1` and bilinear `tau` on `H = Z/p`.
//!
//! The total exponent is the quadratic form `Q(x) = sum_f eps_f c (u_f.x)(v_f.x)`
//! on kernel coordinates, where `u_f`, `v_f` read the generators on the
//! triangles `klm` and `ijk` of facet `f`. For `p = 2` the sum of `(-1)^Q`
//! is walked in Gray-code order when within budget and otherwise reduced
//! by eliminating hyperbolic pairs; for odd `p` the form is diagonalized
//! and the sum is a product of one-dimensional Gauss sums.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::simplex::tri5;
use super::Facets;
use crate::algebra::Cyclotomic;
use crate::complex::OrderedTriangulation;
use crate::error::Result;
use crate::labelling::HSystem;
use crate::structure::{MapName, SemiWeakStructure};

/// Largest dimension walked in Gray-code order for `p = 2`.
const GRAY_MAX_DIM: usize = 40;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `(p, c)` with `tau(a, b) = (m/p) c a b mod m`.
fn form(s: &SemiWeakStructure) -> std::result::Result<(u64, u64), String> {
    if s.g().order() != 1 {
        return Err("G is not trivial".into());
    }
    if !s.is_trivial_map(MapName::Alpha1) {
        return Err("alpha1 is not trivial".into());
    }
    let orders = s.h().cyclic_orders();
    if orders.len() != 1 || !is_prime(orders[0]) {
        return Err("H is not cyclic of prime order".into());
    }
    let p = orders[0];
    let m = s.m() as u64;
    if !m.is_multiple_of(p) {
        return Err(format!("m = {m} is not a multiple of |H| = {p}"));
    }
    let r = m / p;
    let t11 = s.tau(1, 1) as u64;
    if !t11.is_multiple_of(r) {
        return Err("tau is not bilinear".into());
    }
    let c = t11 / r;
    for a in 0..p {
        for b in 0..p {
            if s.tau(a as usize, b as usize) as u64 != (r * c * a * b) % m {
                return Err("tau is not bilinear".into());
            }
        }
    }
    Ok((p, c))
}

pub(super) fn applicable(s: &SemiWeakStructure) -> std::result::Result<(), String> {
    form(s).map(|_| ())
}

pub(super) fn evaluate(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    facets: &Facets,
    budget: u64,
) -> Result<(Cyclotomic, BigUint)> {
    let (p, c) = form(s).expect("checked by caller");
    let sys = HSystem::new(t, s.h(), false)?;
    let kernel = sys.kernel();
    let d = kernel.len();
    debug_assert!(kernel.iter().all(|k| k.1 == p));
    let mut mat = vec![vec![0u64; d]; d];
    for f in 0..facets.len() {
        let tri = &facets.tris[f];
        let (ijk, klm) = (tri[tri5(0, 1, 2)], tri[tri5(2, 3, 4)]);
        let coeff = (facets.eps[f] * c as i64).rem_euclid(p as i64) as u64;
        if coeff == 0 {
            continue;
        }
        for (i, (ki, _)) in kernel.iter().enumerate() {
            let u = ki[klm] as u64;
            if u == 0 {
                continue;
            }
            for (j, (kj, _)) in kernel.iter().enumerate() {
                let v = kj[ijk] as u64;
                mat[i][j] = (mat[i][j] + coeff * u * v) % p;
            }
        }
    }
    let value = if p == 2 {
        let sum = if d <= GRAY_MAX_DIM && (d as u32) < 64 && (1u64 << d) <= budget {
            BigInt::from(gray_sign_sum(&mat))
        } else {
            eliminate_sign_sum(&mat)
        };
        Cyclotomic::from_rational(s.m(), BigRational::from_integer(sum))
    } else {
        gauss_product(&mat, p).embed(s.m())
    };
    Ok((value, sys.kernel_order().clone()))
}

/// `(B, l)` with `Q(x) = x^T M x = sum_{i<j} B_ij x_i x_j + sum_i l_i x_i` over F2.
fn f2_split(mat: &[Vec<u64>]) -> (Vec<Vec<bool>>, Vec<bool>) {
    let d = mat.len();
    let b = (0..d).map(|i| (0..d).map(|j| i != j && (mat[i][j] + mat[j][i]) % 2 == 1).collect()).collect();
    let l = (0..d).map(|i| mat[i][i] % 2 == 1).collect();
    (b, l)
}

/// `sum_x (-1)^Q(x)` by a Gray-code walk; needs `d < 64`.
fn gray_sign_sum(mat: &[Vec<u64>]) -> i64 {
    let d = mat.len();
    let (b, l) = f2_split(mat);
    let rows: Vec<u64> = b.iter().map(|r| r.iter().enumerate().fold(0u64, |acc, (j, &x)| acc | ((x as u64) << j))).collect();
    let lin: Vec<u64> = l.iter().map(|&x| x as u64).collect();
    let mut q = 0u64;
    let mut bx = 0u64;
    let mut sum = 1i64;
    for step in 1u64..(1u64 << d) {
        let j = step.trailing_zeros() as usize;
        q ^= lin[j] ^ ((bx >> j) & 1);
        bx ^= rows[j];
        sum += 1 - 2 * q as i64;
    }
    sum
}

/// `sum_x (-1)^Q(x)` by splitting off hyperbolic pairs and linear terms.
fn eliminate_sign_sum(mat: &[Vec<u64>]) -> BigInt {
    let d = mat.len();
    let (mut b, mut l) = f2_split(mat);
    let mut alive = vec![true; d];
    let mut constant = false;
    let mut twos = 0usize;
    for i in 0..d {
        if !alive[i] {
            continue;
        }
        let partner = (0..d).find(|&j| alive[j] && b[i][j]);
        let Some(j) = partner else {
            if l[i] {
                return BigInt::zero();
            }
            alive[i] = false;
            twos += 1;
            continue;
        };
        alive[i] = false;
        alive[j] = false;
        let li: Vec<usize> = (0..d).filter(|&a| alive[a] && b[i][a]).collect();
        let lj: Vec<usize> = (0..d).filter(|&a| alive[a] && b[j][a]).collect();
        // (L_i + l_i)(L_j + l_j)
        for &a in &li {
            for &bb in &lj {
                if a == bb {
                    l[a] ^= true;
                } else {
                    b[a][bb] ^= true;
                    b[bb][a] ^= true;
                }
            }
        }
        if l[j] {
            li.iter().for_each(|&a| l[a] ^= true);
        }
        if l[i] {
            lj.iter().for_each(|&a| l[a] ^= true);
        }
        constant ^= l[i] && l[j];
        twos += 1;
        for a in 0..d {
            b[a][i] = false;
            b[a][j] = false;
        }
    }
    let v = BigInt::one() << twos;
    if constant {
        -v
    } else {
        v
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

/// Diagonal of a congruence-diagonalization of a symmetric matrix over F_p.
fn diagonalize(mut s: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let d = s.len();
    let mut diag = Vec::with_capacity(d);
    for k in 0..d {
        if let Some(i) = (k..d).find(|&i| s[i][i] != 0) {
            s.swap(i, k);
            s.iter_mut().for_each(|row| row.swap(i, k));
        } else if let Some((i, j)) = (k..d).flat_map(|i| (k..d).map(move |j| (i, j))).find(|&(i, j)| s[i][j] != 0) {
            // x_i -> x_i + x_j makes the (i, i) entry 2 s_ij
            for c in 0..d {
                s[i][c] = (s[i][c] + s[j][c]) % p;
            }
            for r in 0..d {
                s[r][i] = (s[r][i] + s[r][j]) % p;
            }
            s.swap(i, k);
            s.iter_mut().for_each(|row| row.swap(i, k));
        } else {
            diag.extend(std::iter::repeat_n(0, d - k));
            return diag;
        }
        let inv = inv_mod(s[k][k], p);
        for i in k + 1..d {
            let f = s[i][k] * inv % p;
            if f == 0 {
                continue;
            }
            for c in 0..d {
                s[i][c] = (s[i][c] + p - f * s[k][c] % p) % p;
            }
            for r in 0..d {
                s[r][i] = (s[r][i] + p - f * s[r][k] % p) % p;
            }
        }
        diag.push(s[k][k]);
    }
    diag
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % p, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// `sum_x zeta_p^(x^T M x)` for odd prime `p`.
fn gauss_product(mat: &[Vec<u64>], p: u64) -> Cyclotomic {
    let d = mat.len();
    let half = p.div_ceil(2);
    let sym: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| (mat[i][j] + mat[j][i]) % p * half % p).collect()).collect();
    let diag = diagonalize(sym, p);
    let zeros = diag.iter().filter(|&&x| x == 0).count();
    let nonzero: Vec<u64> = diag.into_iter().filter(|&x| x != 0).collect();
    let sign: i64 = nonzero.iter().map(|&a| legendre(a, p)).product();
    let pm = p as u32;
    // g(1) = sum_y zeta^(y^2); g(1)^2 = (-1/p) p
    let mut counts = vec![0i128; p as usize];
    for y in 0..p {
        counts[(y * y % p) as usize] += 1;
    }
    let g1 = Cyclotomic::from_small_counts(pm, &counts);
    let k = nonzero.len();
    let mut scalar = BigInt::from(sign) * num_traits::pow(BigInt::from(p), zeros + k / 2);
    if k / 2 % 2 == 1 && legendre(p - 1, p) == -1 {
        scalar = -scalar;
    }
    let base = Cyclotomic::from_rational(pm, BigRational::from_integer(scalar));
    if k % 2 == 1 {
        base * g1
    } else {
        base
    }
}
