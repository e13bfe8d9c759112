//! Table-backed finite groups.
//!
//! `FiniteGroup` is used for the edge-label group and stores a full
//! multiplication table. `FiniteAbelianGroup` is a product of cyclic groups
//! used for triangle labels; its elements are encoded as mixed-radix indices
//! so that every structural map can be a dense table.

use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Element `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, checking the
    /// group axioms exhaustively.
    pub fn from_table(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("order must be positive".into()));
        }
        if mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("table has wrong shape".into()));
        }
        for x in 0..order {
            if mul[x] != x || mul[x * order] != x {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if mul[x * order + y] == 0 {
                    if mul[y * order + x] != 0 {
                        return Err(Error::InvalidGroup(format!(
                            "inverse of {x} is one-sided"
                        )));
                    }
                    inv[x] = y;
                    break;
                }
            }
            if inv[x] == usize::MAX {
                return Err(Error::InvalidGroup(format!("{x} has no inverse")));
            }
        }
        let g = FiniteGroup { order, mul, inv };
        if let Some((a, b, c)) = g.associativity_violation() {
            return Err(Error::InvalidGroup(format!(
                "associativity fails at ({a},{b},{c})"
            )));
        }
        Ok(g)
    }

    /// The cyclic group of order `n`, element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let mul = (0..n * n).map(|t| (t / n + t % n) % n).collect();
        let inv = (0..n).map(|i| (n - i) % n).collect();
        Ok(FiniteGroup { order: n, mul, inv })
    }

    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mul: vec![0], inv: vec![0] }
    }

    /// Direct product; the pair `(a, b)` is encoded as `a * |G2| + b`.
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Self {
        let (n1, n2) = (g1.order, g2.order);
        let order = n1 * n2;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let a = g1.mul(x / n2, y / n2);
                let b = g2.mul(x % n2, y % n2);
                mul[x * order + y] = a * n2 + b;
            }
        }
        let inv = (0..order)
            .map(|x| g1.inv(x / n2) * n2 + g2.inv(x % n2))
            .collect();
        FiniteGroup { order, mul, inv }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// First triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// All automorphisms, by brute force over bijections fixing 0.
    /// Only intended for the tiny groups used by the equivalence searcher.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 1, &mut |p| {
            let hom = (0..n).all(|a| (0..n).all(|b| p[self.mul(a, b)] == self.mul(p[a], p[b])));
            if hom {
                out.push(p.to_vec());
            }
        });
        out
    }
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k >= v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// A finite abelian group `Z/n_1 x ... x Z/n_r`.
///
/// Elements are indices in `0..order()`, with component `i` stored in
/// mixed radix (the first component is the most significant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    cyclic_orders: Vec<u64>,
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
}

impl FiniteAbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if cyclic_orders.contains(&0) {
            return Err(Error::InvalidGroup("cyclic factor of order 0".into()));
        }
        let order = cyclic_orders.iter().product::<u64>() as usize;
        let mut g = FiniteAbelianGroup {
            cyclic_orders,
            order,
            add: Vec::new(),
            neg: Vec::new(),
        };
        let mut add = vec![0; order * order];
        for a in 0..order {
            let ca = g.components(a);
            for b in 0..order {
                let cb = g.components(b);
                let sum: Vec<u64> = ca
                    .iter()
                    .zip(&cb)
                    .zip(&g.cyclic_orders)
                    .map(|((x, y), n)| (x + y) % n)
                    .collect();
                add[a * order + b] = g.encode(&sum);
            }
        }
        let neg = (0..order)
            .map(|a| {
                let c: Vec<u64> = g
                    .components(a)
                    .iter()
                    .zip(&g.cyclic_orders)
                    .map(|(x, n)| (n - x) % n)
                    .collect();
                g.encode(&c)
            })
            .collect();
        g.add = add;
        g.neg = neg;
        Ok(g)
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).expect("empty product is valid")
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn components(&self, mut a: usize) -> Vec<u64> {
        let mut out = vec![0; self.cyclic_orders.len()];
        for (i, n) in self.cyclic_orders.iter().enumerate().rev() {
            out[i] = a as u64 % n;
            a /= *n as usize;
        }
        out
    }

    /// Encodes a component vector, reducing each entry modulo its factor.
    pub fn encode(&self, comps: &[u64]) -> usize {
        assert_eq!(comps.len(), self.cyclic_orders.len());
        comps
            .iter()
            .zip(&self.cyclic_orders)
            .fold(0usize, |acc, (c, n)| acc * *n as usize + (c % n) as usize)
    }

    /// Exponent of the group (lcm of the cyclic orders).
    pub fn exponent(&self) -> u64 {
        self.cyclic_orders
            .iter()
            .fold(1u64, |acc, &n| num_integer::lcm(acc, n))
    }

    /// `k * a`.
    pub fn scale(&self, a: usize, k: i64) -> usize {
        let c: Vec<u64> = self
            .components(a)
            .iter()
            .zip(&self.cyclic_orders)
            .map(|(x, n)| (*x as i64 * k).rem_euclid(*n as i64) as u64)
            .collect();
        self.encode(&c)
    }

    /// The generator `e_i` of the i-th cyclic factor.
    pub fn generator(&self, i: usize) -> usize {
        let mut c = vec![0; self.cyclic_orders.len()];
        c[i] = 1;
        self.encode(&c)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.components(a)
            .iter()
            .zip(&self.cyclic_orders)
            .fold(1, |acc, (x, n)| {
                let o = n / num_integer::gcd(*x, *n);
                num_integer::lcm(acc, o)
            })
    }

    /// View as a table-backed group (used where only `FiniteGroup` is accepted).
    pub fn as_group(&self) -> FiniteGroup {
        let n = self.order;
        FiniteGroup {
            order: n,
            mul: self.add.clone(),
            inv: self.neg.clone(),
        }
    }

    /// Automorphisms, by brute force (tiny groups only).
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.as_group().automorphisms()
    }
}
