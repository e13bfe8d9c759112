//! Semi-weak monoidal 2-category structures on the 2-category with objects
//! `G`, simple 1-morphisms `H` and scalars in `Q(zeta_m)`.
//!
//! Every map with values in the roots of unity is stored as a dense table
//! of exponents of `zeta_m`; `alpha0` is stored as a table of `H` elements.

mod identities;
mod io;

use num_integer::Integer;

pub use identities::{verify_all, verify_identity, Counterexample, IdentityName, IdentityReport, VerifyReport};
pub use io::{parse_structure, write_structure};

use crate::algebra::{FiniteAbelianGroup, FiniteGroup};
use crate::error::{Error, Result};

/// Which structural table an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    Alpha0,
    Pi,
    Alpha1,
    Tau,
    Iota1,
    Iota2,
    Iota3,
}

impl MapName {
    pub const ALL: [MapName; 7] = [
        MapName::Alpha0,
        MapName::Pi,
        MapName::Alpha1,
        MapName::Tau,
        MapName::Iota1,
        MapName::Iota2,
        MapName::Iota3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Alpha0 => "alpha0",
            MapName::Pi => "pi",
            MapName::Alpha1 => "alpha1",
            MapName::Tau => "tau",
            MapName::Iota1 => "iota1",
            MapName::Iota2 => "iota2",
            MapName::Iota3 => "iota3",
        }
    }

    pub fn parse(s: &str) -> Option<MapName> {
        MapName::ALL.into_iter().find(|m| m.as_str() == s)
    }

    /// For each argument, whether it ranges over `G` (true) or `H` (false).
    pub fn signature(self) -> &'static [bool] {
        match self {
            MapName::Alpha0 => &[true, true, true],
            MapName::Pi => &[true, true, true, true],
            MapName::Alpha1 => &[false, false, false],
            MapName::Tau => &[false, false],
            MapName::Iota1 => &[false, true, true],
            MapName::Iota2 => &[true, false, true],
            MapName::Iota3 => &[true, true, false],
        }
    }
}

/// Structural data `(alpha0, pi, alpha1, tau, iota1, iota2, iota3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiWeakStructure {
    g: FiniteGroup,
    h: FiniteAbelianGroup,
    m: u32,
    alpha0: Vec<usize>,
    pi: Vec<u32>,
    alpha1: Vec<u32>,
    tau: Vec<u32>,
    iota1: Vec<u32>,
    iota2: Vec<u32>,
    iota3: Vec<u32>,
}

impl SemiWeakStructure {
    /// All maps neutral.
    pub fn trivial(g: FiniteGroup, h: FiniteAbelianGroup, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidStructure("root order must be positive".into()));
        }
        let (ng, nh) = (g.order(), h.order());
        Ok(SemiWeakStructure {
            alpha0: vec![0; ng * ng * ng],
            pi: vec![0; ng.pow(4)],
            alpha1: vec![0; nh * nh * nh],
            tau: vec![0; nh * nh],
            iota1: vec![0; nh * ng * ng],
            iota2: vec![0; ng * nh * ng],
            iota3: vec![0; ng * ng * nh],
            g,
            h,
            m,
        })
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteAbelianGroup {
        &self.h
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    fn index(&self, map: MapName, args: &[usize]) -> usize {
        let sig = map.signature();
        debug_assert_eq!(sig.len(), args.len());
        let mut idx = 0;
        for (&is_g, &a) in sig.iter().zip(args) {
            let n = if is_g { self.g.order() } else { self.h.order() };
            debug_assert!(a < n);
            idx = idx * n + a;
        }
        idx
    }

    fn table(&self, map: MapName) -> &[u32] {
        match map {
            MapName::Alpha0 => panic!("alpha0 is H-valued"),
            MapName::Pi => &self.pi,
            MapName::Alpha1 => &self.alpha1,
            MapName::Tau => &self.tau,
            MapName::Iota1 => &self.iota1,
            MapName::Iota2 => &self.iota2,
            MapName::Iota3 => &self.iota3,
        }
    }

    fn table_mut(&mut self, map: MapName) -> &mut Vec<u32> {
        match map {
            MapName::Alpha0 => panic!("alpha0 is H-valued"),
            MapName::Pi => &mut self.pi,
            MapName::Alpha1 => &mut self.alpha1,
            MapName::Tau => &mut self.tau,
            MapName::Iota1 => &mut self.iota1,
            MapName::Iota2 => &mut self.iota2,
            MapName::Iota3 => &mut self.iota3,
        }
    }

    /// Generic read: an `H` element for `alpha0`, an exponent otherwise.
    pub fn get(&self, map: MapName, args: &[usize]) -> usize {
        let i = self.index(map, args);
        match map {
            MapName::Alpha0 => self.alpha0[i],
            _ => self.table(map)[i] as usize,
        }
    }

    /// Generic write; exponents are reduced mod `m`.
    pub fn set(&mut self, map: MapName, args: &[usize], value: i64) -> Result<()> {
        let sig = map.signature();
        if args.len() != sig.len() {
            return Err(Error::InvalidStructure(format!(
                "{} takes {} arguments, got {}",
                map.as_str(),
                sig.len(),
                args.len()
            )));
        }
        for (&is_g, &a) in sig.iter().zip(args) {
            let n = if is_g { self.g.order() } else { self.h.order() };
            if a >= n {
                return Err(Error::InvalidStructure(format!("argument {a} out of range for {}", map.as_str())));
            }
        }
        let i = self.index(map, args);
        match map {
            MapName::Alpha0 => {
                if value < 0 || value as usize >= self.h.order() {
                    return Err(Error::InvalidStructure(format!("alpha0 value {value} is not an element of H")));
                }
                self.alpha0[i] = value as usize;
            }
            _ => {
                let m = self.m as i64;
                self.table_mut(map)[i] = value.rem_euclid(m) as u32;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn alpha0(&self, g1: usize, g2: usize, g3: usize) -> usize {
        let n = self.g.order();
        self.alpha0[(g1 * n + g2) * n + g3]
    }

    #[inline]
    pub fn pi(&self, g1: usize, g2: usize, g3: usize, g4: usize) -> u32 {
        let n = self.g.order();
        self.pi[((g1 * n + g2) * n + g3) * n + g4]
    }

    #[inline]
    pub fn alpha1(&self, h1: usize, h2: usize, h3: usize) -> u32 {
        let n = self.h.order();
        self.alpha1[(h1 * n + h2) * n + h3]
    }

    #[inline]
    pub fn tau(&self, h1: usize, h2: usize) -> u32 {
        self.tau[h1 * self.h.order() + h2]
    }

    #[inline]
    pub fn iota1(&self, h: usize, g2: usize, g3: usize) -> u32 {
        let n = self.g.order();
        self.iota1[(h * n + g2) * n + g3]
    }

    #[inline]
    pub fn iota2(&self, g1: usize, h: usize, g3: usize) -> u32 {
        let (ng, nh) = (self.g.order(), self.h.order());
        self.iota2[(g1 * nh + h) * ng + g3]
    }

    #[inline]
    pub fn iota3(&self, g1: usize, g2: usize, h: usize) -> u32 {
        let (ng, nh) = (self.g.order(), self.h.order());
        self.iota3[(g1 * ng + g2) * nh + h]
    }

    pub fn is_trivial_map(&self, map: MapName) -> bool {
        match map {
            MapName::Alpha0 => self.alpha0.iter().all(|&x| x == 0),
            _ => self.table(map).iter().all(|&x| x == 0),
        }
    }

    /// Argument tuples of a map, in table order.
    pub fn domain(&self, map: MapName) -> Vec<Vec<usize>> {
        let sizes: Vec<usize> = map
            .signature()
            .iter()
            .map(|&is_g| if is_g { self.g.order() } else { self.h.order() })
            .collect();
        tuples(&sizes)
    }

    /// Re-expresses all exponents over `zeta_{m'}` for a multiple `m'` of `m`.
    pub fn lift(&self, new_m: u32) -> Result<Self> {
        if new_m == 0 || !new_m.is_multiple_of(self.m) {
            return Err(Error::InvalidStructure(format!("{new_m} is not a multiple of {}", self.m)));
        }
        let f = new_m / self.m;
        let scale = |t: &Vec<u32>| t.iter().map(|&x| x * f).collect();
        Ok(SemiWeakStructure {
            g: self.g.clone(),
            h: self.h.clone(),
            m: new_m,
            alpha0: self.alpha0.clone(),
            pi: scale(&self.pi),
            alpha1: scale(&self.alpha1),
            tau: scale(&self.tau),
            iota1: scale(&self.iota1),
            iota2: scale(&self.iota2),
            iota3: scale(&self.iota3),
        })
    }
}

/// All tuples with `t[i] < sizes[i]`, last coordinate fastest.
pub(crate) fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0; sizes.len()];
    if sizes.contains(&0) {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < sizes[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn check_k(name: &str, k: u64, bound: u64) -> Result<()> {
    if k == 0 || k >= bound {
        return Err(Error::InvalidStructure(format!("{name}: k = {k} must satisfy 0 < k < {bound}")));
    }
    Ok(())
}

fn check_n(name: &str, n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidStructure(format!("{name}: n = {n} must be at least 2")));
    }
    Ok(())
}

/// `G` trivial, `H = Z/n`, `tau(h1, h2) = zeta_n^(k h1 h2)`.
pub fn br_tau(n: u64, k: u64) -> Result<SemiWeakStructure> {
    check_n("br-tau", n)?;
    check_k("br-tau", k, n)?;
    let h = FiniteAbelianGroup::cyclic(n)?;
    let mut s = SemiWeakStructure::trivial(FiniteGroup::trivial(), h, n as u32)?;
    for a in 0..n as usize {
        for b in 0..n as usize {
            s.set(MapName::Tau, &[a, b], (k as i64) * (a * b) as i64)?;
        }
    }
    Ok(s)
}

/// `G = H = Z/n`, `iota1(h, g1, g2) = zeta_{n^2}^(k h (g1 + g2 - [g1 + g2]))`.
pub fn br_iota1(n: u64, k: u64) -> Result<SemiWeakStructure> {
    check_n("br-iota1", n)?;
    check_k("br-iota1", k, n * n)?;
    let nn = n as usize;
    let mut s = SemiWeakStructure::trivial(
        FiniteGroup::cyclic(nn)?,
        FiniteAbelianGroup::cyclic(n)?,
        (n * n) as u32,
    )?;
    for h in 0..nn {
        for g1 in 0..nn {
            for g2 in 0..nn {
                let carry = g1 + g2 - (g1 + g2) % nn;
                s.set(MapName::Iota1, &[h, g1, g2], (k as usize * h * carry) as i64)?;
            }
        }
    }
    Ok(s)
}

/// `G = H = Z/n`, `iota2(g1, h, g3) = zeta_n^(k g1 h g3)`.
pub fn br_iota2(n: u64, k: u64) -> Result<SemiWeakStructure> {
    check_n("br-iota2", n)?;
    check_k("br-iota2", k, n)?;
    let nn = n as usize;
    let mut s =
        SemiWeakStructure::trivial(FiniteGroup::cyclic(nn)?, FiniteAbelianGroup::cyclic(n)?, n as u32)?;
    for g1 in 0..nn {
        for h in 0..nn {
            for g3 in 0..nn {
                s.set(MapName::Iota2, &[g1, h, g3], (k as usize * g1 * h * g3) as i64)?;
            }
        }
    }
    Ok(s)
}

/// `H` trivial and `pi = omega`, given as exponents of `zeta_m` indexed by
/// `((g1 |G| + g2) |G| + g3) |G| + g4`.
pub fn pentagonator_structure(g: FiniteGroup, omega: &[i64], m: u32) -> Result<SemiWeakStructure> {
    let n = g.order();
    if omega.len() != n.pow(4) {
        return Err(Error::InvalidStructure(format!(
            "pentagonator table has {} entries, expected {}",
            omega.len(),
            n.pow(4)
        )));
    }
    let mut s = SemiWeakStructure::trivial(g, FiniteAbelianGroup::trivial(), m)?;
    for (i, &w) in omega.iter().enumerate() {
        s.pi[i] = w.rem_euclid(m as i64) as u32;
    }
    Ok(s)
}

/// Pointwise product of two structures over the same groups, expressed over
/// `zeta_lcm(m1, m2)`. The `alpha0` tables must agree.
pub fn combine(s1: &SemiWeakStructure, s2: &SemiWeakStructure) -> Result<SemiWeakStructure> {
    if s1.g != s2.g || s1.h != s2.h {
        return Err(Error::InvalidStructure("cannot combine structures over different groups".into()));
    }
    if s1.alpha0 != s2.alpha0 {
        return Err(Error::InvalidStructure("cannot combine structures with different alpha0".into()));
    }
    let m = s1.m.lcm(&s2.m);
    let a = s1.lift(m)?;
    let b = s2.lift(m)?;
    let add = |x: &Vec<u32>, y: &Vec<u32>| x.iter().zip(y).map(|(&p, &q)| (p + q) % m).collect();
    Ok(SemiWeakStructure {
        g: a.g.clone(),
        h: a.h.clone(),
        m,
        alpha0: a.alpha0.clone(),
        pi: add(&a.pi, &b.pi),
        alpha1: add(&a.alpha1, &b.alpha1),
        tau: add(&a.tau, &b.tau),
        iota1: add(&a.iota1, &b.iota1),
        iota2: add(&a.iota2, &b.iota2),
        iota3: add(&a.iota3, &b.iota3),
    })
}

/// Builds a structure from `name:params`, e.g. `br-tau:3,1` or `trivial:2,2`
/// (`trivial:|G|,|H|[,m]` with cyclic groups).
pub fn builtin(spec: &str) -> Result<SemiWeakStructure> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<u64> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidStructure(format!("bad parameter `{p}` in `{spec}`")))
            })
            .collect::<Result<_>>()?
    };
    let want = |k: usize| -> Result<()> {
        if nums.len() != k {
            return Err(Error::InvalidStructure(format!("`{name}` takes {k} parameters, got {}", nums.len())));
        }
        Ok(())
    };
    match name {
        "trivial" => {
            if !(2..=3).contains(&nums.len()) {
                return Err(Error::InvalidStructure("`trivial` takes |G|,|H|[,m]".into()));
            }
            let m = nums.get(2).copied().unwrap_or(1) as u32;
            SemiWeakStructure::trivial(
                FiniteGroup::cyclic(nums[0] as usize)?,
                FiniteAbelianGroup::cyclic(nums[1])?,
                m,
            )
        }
        "br-tau" => {
            want(2)?;
            br_tau(nums[0], nums[1])
        }
        "br-iota1" => {
            want(2)?;
            br_iota1(nums[0], nums[1])
        }
        "br-iota2" => {
            want(2)?;
            br_iota2(nums[0], nums[1])
        }
        _ => Err(Error::InvalidStructure(format!("unknown builtin structure `{name}`"))),
    }
}

/// Names accepted by [`builtin`].
pub const BUILTINS: &[(&str, &str)] = &[
    ("trivial:<|G|>,<|H|>[,<m>]", "all maps neutral, cyclic G and H"),
    ("br-tau:<n>,<k>", "G trivial, H = Z/n, tau(h1,h2) = zeta_n^(k h1 h2)"),
    ("br-iota1:<n>,<k>", "G = H = Z/n, iota1 from the carry cocycle, m = n^2"),
    ("br-iota2:<n>,<k>", "G = H = Z/n, iota2(g1,h,g3) = zeta_n^(k g1 h g3)"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn br_tau_values() {
        let s = br_tau(3, 1).unwrap();
        assert_eq!(s.tau(1, 1), 1);
        assert_eq!(s.tau(2, 2), 1);
        assert!((0..3).all(|h| s.tau(0, h) == 0));
        let s2 = br_tau(2, 1).unwrap();
        assert_eq!(s2.tau(1, 1), 1);
        assert_eq!(s2.m(), 2);
        assert!(br_tau(3, 3).is_err());
        assert!(br_tau(3, 0).is_err());
    }

    #[test]
    fn br_iota1_values() {
        let s = br_iota1(2, 1).unwrap();
        assert_eq!(s.m(), 4);
        // h (g1 + g2 - [g1 + g2]) = 1 * (2 - 0), so the value is zeta_4^2 = -1
        assert_eq!(s.iota1(1, 1, 1), 2);
        let t = br_iota1(3, 1).unwrap();
        assert!((0..3).all(|h| (0..3).all(|g| t.iota1(h, 0, g) == 0)));
        // h = 2, carry 3: zeta_9^6 = zeta_3^2
        assert_eq!(t.iota1(2, 2, 2), 6);
    }

    #[test]
    fn br_iota2_values() {
        let s = br_iota2(3, 1).unwrap();
        assert_eq!(s.iota2(1, 1, 1), 1);
        assert!((0..3).all(|h| (0..3).all(|g| s.iota2(0, h, g) == 0)));
        assert_eq!(br_iota2(2, 1).unwrap().iota2(1, 1, 1), 1);
    }

    #[test]
    fn combine_adds_exponents() {
        let a = br_tau(3, 1).unwrap();
        let c = combine(&a, &a).unwrap();
        assert_eq!(c, br_tau(3, 2).unwrap());
        let t = SemiWeakStructure::trivial(a.g().clone(), a.h().clone(), 1).unwrap();
        assert_eq!(combine(&t, &a).unwrap(), a);
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(builtin("br-tau:3,1").unwrap(), br_tau(3, 1).unwrap());
        assert_eq!(builtin("trivial:2,2").unwrap().m(), 1);
        assert!(builtin("nope:1").is_err());
        assert!(builtin("br-tau:3").is_err());
    }
}
