//! Exact arithmetic in the cyclotomic field `Q(z_m)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(m)-1)` with
//! arbitrary-precision rational coefficients, always reduced modulo the
//! m-th cyclotomic polynomial, so equality is coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Per-modulus reduction data: `x^j mod Phi_m` for every `0 <= j < m`.
#[derive(Debug)]
struct FieldData {
    degree: usize,
    powers: Vec<Vec<i64>>,
}

fn field(m: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(build_field(m)))
        .clone()
}

/// Coefficients (lowest degree first) of the m-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "monic divisor expected");
    let qlen = rem.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

fn build_field(m: u32) -> FieldData {
    let phi = cyclotomic_polynomial(m);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    // x^0 .. x^(m-1) reduced by repeated multiplication by x.
    let mut cur = vec![0i64; degree];
    if degree > 0 {
        cur[0] = 1;
    }
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x
        let top = if degree > 0 { cur[degree - 1] } else { 0 };
        let mut next = vec![0i64; degree];
        for i in (1..degree).rev() {
            next[i] = cur[i - 1];
        }
        // x^degree = -sum phi_i x^i
        for i in 0..degree {
            next[i] -= top * phi[i];
        }
        cur = next;
    }
    FieldData { degree, powers }
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count()
}

/// An exact element of `Q(z_m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    m: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        assert!(m >= 1, "root order must be positive");
        let d = field(m).degree;
        Cyclotomic { m, coeffs: vec![BigRational::zero(); d] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: u32, n: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(m: u32, r: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = r;
        z
    }

    /// `z_m^j` for any integer `j`.
    pub fn root_of_unity(m: u32, j: i64) -> Self {
        let mut counts = vec![BigInt::zero(); m as usize];
        counts[j.rem_euclid(m as i64) as usize] = BigInt::one();
        Self::from_exponent_counts(m, &counts)
    }

    /// `sum_j counts[j] * z_m^j`.
    pub fn from_exponent_counts(m: u32, counts: &[BigInt]) -> Self {
        assert_eq!(counts.len(), m as usize);
        let f = field(m);
        let mut acc = vec![BigInt::zero(); f.degree];
        for (j, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&f.powers[j]) {
                if *p != 0 {
                    *a += c * p;
                }
            }
        }
        Cyclotomic {
            m,
            coeffs: acc.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Same as [`from_exponent_counts`](Self::from_exponent_counts) for
    /// machine-word counts.
    pub fn from_small_counts(m: u32, counts: &[i128]) -> Self {
        let big: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_exponent_counts(m, &big)
    }

    pub fn root_order(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Reduces a polynomial in `z` of arbitrary degree.
    fn reduce_poly(m: u32, poly: Vec<BigRational>) -> Self {
        let f = field(m);
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in poly.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &f.powers[k % m as usize];
            for (o, &pi) in out.iter_mut().zip(p) {
                if pi != 0 {
                    *o += &c * BigRational::from_integer(BigInt::from(pi));
                }
            }
        }
        Cyclotomic { m, coeffs: out }
    }

    /// The involution `z -> z^{-1}` (complex conjugation).
    pub fn conj(&self) -> Self {
        let m = self.m as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[(m - j) % m] += c;
        }
        Self::reduce_poly(self.m, poly)
    }

    /// Applies the Galois automorphism `z -> z^t` (`gcd(t, m) = 1`).
    pub fn galois(&self, t: u32) -> Self {
        assert_eq!(num_integer::gcd(t, self.m), 1, "not a Galois automorphism");
        let m = self.m as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[(j * t as usize) % m] += c;
        }
        Self::reduce_poly(self.m, poly)
    }

    /// Embeds into `Q(z_target)`; `m` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        assert_eq!(target % self.m, 0, "cannot embed Q(z_{}) into Q(z_{target})", self.m);
        let step = (target / self.m) as usize;
        let mut poly = vec![BigRational::zero(); target as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * step] += c;
        }
        Self::reduce_poly(target, poly)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.m as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = theta * j as f64;
            (re + v * a.cos(), im + v * a.sin())
        })
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(self.m, other.m, "mixing Q(z_{}) and Q(z_{})", self.m, other.m);
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let d = self.coeffs.len();
        let mut poly = vec![BigRational::zero(); (2 * d).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce_poly(self.m, poly)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { m: self.m, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders e.g. `3 + 6*z3`, where `z3 = exp(2*pi*i/3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let zpart = match j {
                0 => String::new(),
                1 => format!("z{}", self.m),
                _ => format!("z{}^{}", self.m, j),
            };
            if zpart.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{zpart}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), zpart)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self} in Q(z{}))", self.m)
    }
}
