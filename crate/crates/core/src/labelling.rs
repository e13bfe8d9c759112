//! Admissible labellings: flat `G`-labels on edges and semi-flat `H`-labels
//! on triangles.
//!
//! Edge labels satisfy `g_ik = g_jk g_ij` on every triangle `(ijk)`; triangle
//! labels satisfy `h_jkl - h_ikl + h_ijl - h_ijk = alpha0(g_kl, g_jk, g_ij)`
//! on every tetrahedron `(ijkl)`.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::snf::ModDiagonalization;
use crate::algebra::{FiniteAbelianGroup, FiniteGroup};
use crate::complex::OrderedTriangulation;
use crate::error::{Error, Result};
use crate::structure::SemiWeakStructure;

/// Default enumeration budget, overridable through `FG4_BUDGET`.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// The enumeration budget in effect.
pub fn budget() -> u64 {
    std::env::var("FG4_BUDGET").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

/// Labels indexed like `faces(1)` and `faces(2)` of the triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labelling {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
}

/// Constraint determining one edge of a triangle `(a<b<c)` from the other two.
#[derive(Clone, Copy, Debug)]
enum Role {
    /// `g_ab = g_bc^-1 g_ac`
    First { ac: usize, bc: usize },
    /// `g_ac = g_bc g_ab`
    Second { ab: usize, bc: usize },
    /// `g_bc = g_ac g_ab^-1`
    Third { ab: usize, ac: usize },
}

/// Depth-first search over flat edge labellings. Edges are visited in a
/// greedy order that closes triangles as early as possible, so only
/// spanning-tree and holonomy edges branch.
pub struct FlatSearch<'a> {
    group: &'a FiniteGroup,
    /// Edge assigned at each level.
    order: Vec<usize>,
    /// Per level: triangles completed when that level is assigned.
    completes: Vec<Vec<Role>>,
    /// Per level: the edge is pinned to the identity.
    pinned: Vec<bool>,
}

impl<'a> FlatSearch<'a> {
    pub fn new(t: &OrderedTriangulation, group: &'a FiniteGroup) -> Self {
        let ne = t.v1();
        let tris: Vec<[usize; 3]> = t
            .faces(2)
            .iter()
            .map(|tri| {
                let e = |a: usize, b: usize| t.face_index(&[tri[a], tri[b]]).expect("edge of triangle");
                [e(0, 1), e(0, 2), e(1, 2)]
            })
            .collect();
        let mut edge_tris = vec![Vec::new(); ne];
        for (i, tri) in tris.iter().enumerate() {
            for &e in tri {
                edge_tris[e].push(i);
            }
        }
        // known[i]: assigned edges of triangle i
        let mut known = vec![0u8; tris.len()];
        let mut pos = vec![usize::MAX; ne];
        let mut order = Vec::with_capacity(ne);
        while order.len() < ne {
            let best = (0..ne)
                .filter(|&e| pos[e] == usize::MAX)
                .max_by_key(|&e| {
                    let closes = edge_tris[e].iter().filter(|&&i| known[i] == 2).count();
                    let touches = edge_tris[e].iter().filter(|&&i| known[i] == 1).count();
                    (closes, touches, std::cmp::Reverse(e))
                })
                .expect("an unassigned edge");
            pos[best] = order.len();
            order.push(best);
            for &i in &edge_tris[best] {
                known[i] += 1;
            }
        }
        let mut completes = vec![Vec::new(); ne];
        for &[ab, ac, bc] in &tris {
            let last = [ab, ac, bc].into_iter().max_by_key(|&e| pos[e]).expect("three edges");
            let role = if last == ab {
                Role::First { ac, bc }
            } else if last == ac {
                Role::Second { ab, bc }
            } else {
                Role::Third { ab, ac }
            };
            completes[pos[last]].push(role);
        }
        let pinned = vec![false; ne];
        FlatSearch { group, order, completes, pinned }
    }

    /// Search restricted to labellings that are the identity on a spanning
    /// forest. A vertex gauge transformation trivial at one root per
    /// component carries each of these to a unique flat labelling; the
    /// returned factor counts those transformations, `|G|^(v0 - components)`.
    pub fn gauge_fixed(t: &OrderedTriangulation, group: &'a FiniteGroup) -> (Self, BigUint) {
        let mut search = FlatSearch::new(t, group);
        let mut adj = vec![Vec::new(); t.v0()];
        for (i, e) in t.faces(1).iter().enumerate() {
            adj[e[0]].push((e[1], i));
            adj[e[1]].push((e[0], i));
        }
        let mut seen = vec![false; t.v0()];
        let mut tree = vec![false; t.v1()];
        let mut tree_edges = 0u32;
        for root in 0..t.v0() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        tree[e] = true;
                        tree_edges += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        search.pinned = search.order.iter().map(|&e| tree[e]).collect();
        (search, num_traits::pow(BigUint::from(group.order()), tree_edges as usize))
    }

    fn forced(&self, role: Role, g: &[usize]) -> usize {
        let grp = self.group;
        match role {
            Role::First { ac, bc } => grp.mul(grp.inv(g[bc]), g[ac]),
            Role::Second { ab, bc } => grp.mul(g[bc], g[ab]),
            Role::Third { ab, ac } => grp.mul(g[ac], grp.inv(g[ab])),
        }
    }

    /// Calls `f` on every flat labelling; stops early on `Break`.
    pub fn for_each(&self, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
        let ne = self.completes.len();
        let mut g = vec![0usize; ne];
        if ne == 0 {
            let _ = f(&g);
            return;
        }
        let n = self.group.order();
        // next candidate per level; usize::MAX marks a forced level already tried
        let mut next = vec![0usize; ne];
        let mut level = 0usize;
        loop {
            let mut advanced = false;
            let edge = self.order[level];
            if let Some((&first, rest)) = self.completes[level].split_first() {
                if next[level] == 0 {
                    next[level] = usize::MAX;
                    let v = self.forced(first, &g);
                    g[edge] = v;
                    advanced = (!self.pinned[level] || v == 0) && rest.iter().all(|&r| self.forced(r, &g) == v);
                }
            } else if self.pinned[level] {
                if next[level] == 0 {
                    next[level] = usize::MAX;
                    g[edge] = 0;
                    advanced = true;
                }
            } else if next[level] < n {
                g[edge] = next[level];
                next[level] += 1;
                advanced = true;
            }
            if advanced {
                if level + 1 == ne {
                    if f(&g).is_break() {
                        return;
                    }
                    continue;
                }
                level += 1;
                next[level] = 0;
                continue;
            }
            // exhausted this level
            if level == 0 {
                return;
            }
            level -= 1;
        }
    }
}

/// All flat edge labellings (collected; use [`FlatSearch`] to stream).
pub fn enumerate_flat_g(t: &OrderedTriangulation, group: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    FlatSearch::new(t, group).for_each(|g| {
        out.push(g.to_vec());
        ControlFlow::Continue(())
    });
    out
}

pub fn count_flat_g(t: &OrderedTriangulation, group: &FiniteGroup) -> u64 {
    let mut c = 0u64;
    FlatSearch::new(t, group).for_each(|_| {
        c += 1;
        ControlFlow::Continue(())
    });
    c
}

/// Triangle labels for one flat edge labelling: a particular solution plus
/// kernel generators (as `H` elements per triangle) with their orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSolutionSpace {
    pub particular: Vec<usize>,
    pub kernel: Vec<(Vec<usize>, u64)>,
    pub kernel_order: BigUint,
}

/// The semi-flatness system of a triangulation, diagonalized once per
/// cyclic factor of `H` and reused for every edge labelling.
pub struct HSystem {
    h: FiniteAbelianGroup,
    /// Per tetrahedron: triangles `(jkl, ikl, ijl, ijk)`.
    tets: Vec<[usize; 4]>,
    /// Per tetrahedron: edges `(kl, jk, ij)`.
    tet_edges: Vec<[usize; 3]>,
    factors: Vec<ModDiagonalization>,
    kernel: Vec<(Vec<usize>, u64)>,
    kernel_order: BigUint,
    triangles: usize,
}

impl HSystem {
    /// `inhomogeneous` requests row tracking, needed when `alpha0` is
    /// nontrivial.
    pub fn new(t: &OrderedTriangulation, h: &FiniteAbelianGroup, inhomogeneous: bool) -> Result<Self> {
        let nt = t.faces(2).len();
        let mut tets = Vec::with_capacity(t.faces(3).len());
        let mut tet_edges = Vec::with_capacity(t.faces(3).len());
        let idx = |s: &[usize]| t.face_index(s).expect("face of a face is present");
        for tet in t.faces(3) {
            let (i, j, k, l) = (tet[0], tet[1], tet[2], tet[3]);
            tets.push([idx(&[j, k, l]), idx(&[i, k, l]), idx(&[i, j, l]), idx(&[i, j, k])]);
            tet_edges.push([idx(&[k, l]), idx(&[j, k]), idx(&[i, j])]);
        }
        let rows: Vec<Vec<i64>> = tets
            .iter()
            .map(|tri| {
                let mut r = vec![0i64; nt];
                for (s, &x) in [1i64, -1, 1, -1].iter().zip(tri) {
                    r[x] += s;
                }
                r
            })
            .collect();
        let mut factors = Vec::new();
        let mut kernel = Vec::new();
        for (c, &n) in h.cyclic_orders().iter().enumerate() {
            let d = ModDiagonalization::new(&rows, nt, n, inhomogeneous)?;
            for (v, order) in d.kernel() {
                let gen = v
                    .iter()
                    .map(|&x| {
                        let mut comps = vec![0u64; h.cyclic_orders().len()];
                        comps[c] = x;
                        h.encode(&comps)
                    })
                    .collect();
                kernel.push((gen, order));
            }
            factors.push(d);
        }
        let kernel_order = kernel.iter().fold(BigUint::one(), |acc, (_, o)| acc * BigUint::from(*o));
        Ok(HSystem { h: h.clone(), tets, tet_edges, factors, kernel, kernel_order, triangles: nt })
    }

    pub fn kernel(&self) -> &[(Vec<usize>, u64)] {
        &self.kernel
    }

    pub fn kernel_order(&self) -> &BigUint {
        &self.kernel_order
    }

    pub fn tets(&self) -> &[[usize; 4]] {
        &self.tets
    }

    pub fn tet_edges(&self) -> &[[usize; 3]] {
        &self.tet_edges
    }

    /// Right-hand side `alpha0(g_kl, g_jk, g_ij)` per tetrahedron.
    pub fn rhs(&self, alpha0: impl Fn(usize, usize, usize) -> usize, g: &[usize]) -> Vec<usize> {
        self.tet_edges.iter().map(|e| alpha0(g[e[0]], g[e[1]], g[e[2]])).collect()
    }

    /// A particular solution for the given right-hand side, if any.
    pub fn particular(&self, rhs: &[usize]) -> Result<Option<Vec<usize>>> {
        if rhs.iter().all(|&x| x == 0) {
            return Ok(Some(vec![0; self.triangles]));
        }
        let comps: Vec<Vec<u64>> = rhs.iter().map(|&x| self.h.components(x)).collect();
        let mut per_factor = Vec::with_capacity(self.factors.len());
        for (c, d) in self.factors.iter().enumerate() {
            let b: Vec<u64> = comps.iter().map(|v| v[c]).collect();
            match d.solve(&b)? {
                Some(x) => per_factor.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(
            (0..self.triangles)
                .map(|i| self.h.encode(&per_factor.iter().map(|x| x[i]).collect::<Vec<_>>()))
                .collect(),
        ))
    }

    /// Full solution space for a flat labelling.
    pub fn solve(&self, alpha0: impl Fn(usize, usize, usize) -> usize, g: &[usize]) -> Result<Option<HSolutionSpace>> {
        Ok(self.particular(&self.rhs(alpha0, g))?.map(|particular| HSolutionSpace {
            particular,
            kernel: self.kernel.clone(),
            kernel_order: self.kernel_order.clone(),
        }))
    }

    /// Whether `h` satisfies semi-flatness for `g`.
    pub fn is_semi_flat(&self, alpha0: impl Fn(usize, usize, usize) -> usize, g: &[usize], h: &[usize]) -> bool {
        let hg = &self.h;
        self.tets.iter().zip(&self.tet_edges).all(|(tri, e)| {
            let lhs = hg.add(hg.sub(h[tri[0]], h[tri[1]]), hg.sub(h[tri[2]], h[tri[3]]));
            lhs == alpha0(g[e[0]], g[e[1]], g[e[2]])
        })
    }
}

/// Solves the triangle system for one flat edge labelling.
pub fn solve_h(
    t: &OrderedTriangulation,
    h: &FiniteAbelianGroup,
    alpha0: impl Fn(usize, usize, usize) -> usize,
    g: &[usize],
) -> Result<Option<HSolutionSpace>> {
    HSystem::new(t, h, true)?.solve(alpha0, g)
}

/// Walks the coset `particular + kernel`, calling `f` on every element.
/// Consecutive elements differ by one generator.
pub fn for_each_in_coset(
    h: &FiniteAbelianGroup,
    particular: &[usize],
    kernel: &[(Vec<usize>, u64)],
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut cur = particular.to_vec();
    let mut digits = vec![0u64; kernel.len()];
    loop {
        f(&cur)?;
        let mut i = 0;
        loop {
            if i == kernel.len() {
                return ControlFlow::Continue(());
            }
            for (x, &k) in cur.iter_mut().zip(&kernel[i].0) {
                *x = h.add(*x, k);
            }
            digits[i] += 1;
            if digits[i] < kernel[i].1 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Number of admissible labellings.
pub fn count_labellings(t: &OrderedTriangulation, s: &SemiWeakStructure) -> Result<BigUint> {
    let trivial = s.is_trivial_map(crate::structure::MapName::Alpha0);
    let sys = HSystem::new(t, s.h(), !trivial)?;
    if trivial {
        return Ok(BigUint::from(count_flat_g(t, s.g())) * sys.kernel_order());
    }
    let mut solvable = 0u64;
    let mut err = None;
    FlatSearch::new(t, s.g()).for_each(|g| match sys.particular(&sys.rhs(|a, b, c| s.alpha0(a, b, c), g)) {
        Ok(Some(_)) => {
            solvable += 1;
            ControlFlow::Continue(())
        }
        Ok(None) => ControlFlow::Continue(()),
        Err(e) => {
            err = Some(e);
            ControlFlow::Break(())
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(BigUint::from(solvable) * sys.kernel_order())
}

/// Streams every admissible labelling (flat `g` outer, kernel coset inner).
/// Declines with `BudgetExceeded` when the total exceeds `budget`.
pub fn enumerate_labellings(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    budget: u64,
    mut f: impl FnMut(&Labelling),
) -> Result<u64> {
    let total = count_labellings(t, s)?;
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed: total.to_string(), budget });
    }
    let trivial = s.is_trivial_map(crate::structure::MapName::Alpha0);
    let sys = HSystem::new(t, s.h(), !trivial)?;
    let mut count = 0u64;
    let mut err = None;
    let mut lab = Labelling { g: Vec::new(), h: Vec::new() };
    FlatSearch::new(t, s.g()).for_each(|g| {
        let p = match sys.particular(&sys.rhs(|a, b, c| s.alpha0(a, b, c), g)) {
            Ok(Some(p)) => p,
            Ok(None) => return ControlFlow::Continue(()),
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        };
        lab.g.clear();
        lab.g.extend_from_slice(g);
        let _ = for_each_in_coset(s.h(), &p, sys.kernel(), |h| {
            lab.h.clear();
            lab.h.extend_from_slice(h);
            debug_assert!(sys.is_semi_flat(|a, b, c| s.alpha0(a, b, c), &lab.g, &lab.h));
            count += 1;
            f(&lab);
            ControlFlow::Continue(())
        });
        ControlFlow::Continue(())
    });
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// `|total|` as `u64` when it fits.
pub fn small(total: &BigUint) -> Option<u64> {
    if total.is_zero() {
        return Some(0);
    }
    total.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_of_5simplex, kuhnel_cp2, s3_times_circle};
    use crate::structure::{br_tau, MapName};

    fn brute_flat(t: &OrderedTriangulation, grp: &FiniteGroup) -> u64 {
        let ne = t.v1();
        let n = grp.order();
        let mut count = 0;
        let total = n.pow(ne as u32);
        for code in 0..total {
            let mut c = code;
            let g: Vec<usize> = (0..ne)
                .map(|_| {
                    let x = c % n;
                    c /= n;
                    x
                })
                .collect();
            let ok = t.faces(2).iter().all(|tri| {
                let e = |a, b| g[t.face_index(&[a, b]).unwrap()];
                e(tri[0], tri[2]) == grp.mul(e(tri[1], tri[2]), e(tri[0], tri[1]))
            });
            count += ok as u64;
        }
        count
    }

    #[test]
    fn flat_counts() {
        let s4 = boundary_of_5simplex();
        assert_eq!(count_flat_g(&s4, &FiniteGroup::trivial()), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(count_flat_g(&s4, &z2), 32);
        assert_eq!(brute_flat(&s4, &z2), 32);
        let s3s1 = s3_times_circle(3).unwrap();
        // |G|^(v0 - 1) |Hom(Z, G)|
        assert_eq!(count_flat_g(&s3s1, &z2), (1 << 14) * 2);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(count_flat_g(&s4, &z3), 3u64.pow(5));
        for g in enumerate_flat_g(&s4, &z3) {
            assert!(t_flat(&s4, &z3, &g));
        }
    }

    fn t_flat(t: &OrderedTriangulation, grp: &FiniteGroup, g: &[usize]) -> bool {
        t.faces(2).iter().all(|tri| {
            let e = |a, b| g[t.face_index(&[a, b]).unwrap()];
            e(tri[0], tri[2]) == grp.mul(e(tri[1], tri[2]), e(tri[0], tri[1]))
        })
    }

    #[test]
    fn nonabelian_flat_count() {
        // S3 as permutations of {0,1,2}
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = Vec::new();
        for a in &perms {
            for b in &perms {
                table.push(idx([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        let s3 = FiniteGroup::from_table(6, table).unwrap();
        assert_eq!(count_flat_g(&boundary_of_5simplex(), &s3), 6u64.pow(5));
    }

    #[test]
    fn kernel_orders() {
        let s4 = boundary_of_5simplex();
        for n in 2..=4u64 {
            let sys = HSystem::new(&s4, &FiniteAbelianGroup::cyclic(n).unwrap(), false).unwrap();
            assert_eq!(*sys.kernel_order(), BigUint::from(n).pow(10));
        }
        let cp2 = kuhnel_cp2();
        let sys = HSystem::new(&cp2, &FiniteAbelianGroup::cyclic(3).unwrap(), false).unwrap();
        assert_eq!(*sys.kernel_order(), BigUint::from(3u32).pow(29));
        let two = HSystem::new(&s4, &FiniteAbelianGroup::new(vec![2, 3]).unwrap(), false).unwrap();
        assert_eq!(*two.kernel_order(), BigUint::from(6u32).pow(10));
    }

    #[test]
    fn trivial_h() {
        let s4 = boundary_of_5simplex();
        let sol = solve_h(&s4, &FiniteAbelianGroup::trivial(), |_, _, _| 0, &[0; 15]).unwrap().unwrap();
        assert_eq!(sol.kernel_order, BigUint::one());
    }

    #[test]
    fn labelling_counts() {
        let s4 = boundary_of_5simplex();
        let s = br_tau(2, 1).unwrap();
        assert_eq!(count_labellings(&s4, &s).unwrap(), BigUint::from(1024u32));
        let mut seen = std::collections::HashSet::new();
        let n = enumerate_labellings(&s4, &s, 1 << 20, |l| {
            seen.insert(l.h.clone());
        })
        .unwrap();
        assert_eq!(n, 1024);
        assert_eq!(seen.len(), 1024);
        let cp2 = kuhnel_cp2();
        let s3 = br_tau(3, 1).unwrap();
        assert_eq!(count_labellings(&cp2, &s3).unwrap(), BigUint::from(3u32).pow(29));
        assert!(matches!(enumerate_labellings(&cp2, &s3, 1 << 20, |_| {}), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn inhomogeneous_system() {
        // alpha0 a coboundary on Z/2 with values in Z/2: every flat g is solvable
        let n = 2usize;
        let mut s = crate::structure::SemiWeakStructure::trivial(
            FiniteGroup::cyclic(n).unwrap(),
            FiniteAbelianGroup::cyclic(2).unwrap(),
            1,
        )
        .unwrap();
        let beta = |a: usize, b: usize| a * b;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = (beta(b, c) + beta(a, (b + c) % n) + beta(a, b) + beta((a + b) % n, c)) % 2;
                    s.set(MapName::Alpha0, &[a, b, c], v as i64).unwrap();
                }
            }
        }
        let s4 = boundary_of_5simplex();
        assert_eq!(count_labellings(&s4, &s).unwrap(), BigUint::from(32u32 * 1024));
        let mut checked = 0;
        let sys = HSystem::new(&s4, s.h(), false).unwrap();
        enumerate_labellings(&s4, &s, 1 << 20, |l| {
            if checked % 97 == 0 {
                assert!(sys.is_semi_flat(|a, b, c| s.alpha0(a, b, c), &l.g, &l.h));
            }
            checked += 1;
        })
        .unwrap();
        assert_eq!(checked, 32 * 1024);
    }
}
