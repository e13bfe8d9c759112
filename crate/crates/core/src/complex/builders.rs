use std::collections::HashMap;

use super::{combinations, parse_triangulation, OrderedTriangulation};
use crate::error::{Error, Result};

/// The boundary of the (d+1)-simplex, a d-sphere on d+2 vertices.
pub fn boundary_of_simplex(d: usize) -> OrderedTriangulation {
    let facets = combinations(d + 2, d + 1);
    OrderedTriangulation::validate(d, d + 2, facets).expect("simplex boundary is valid")
}

/// The six 4-faces of (012345), the standard 4-sphere.
pub fn boundary_of_5simplex() -> OrderedTriangulation {
    boundary_of_simplex(4)
}

/// Boundary of the (d+1)-dimensional cross-polytope: vertex `2i` is `+e_i`,
/// vertex `2i+1` is `-e_i`.
pub fn cross_polytope_boundary(d: usize) -> OrderedTriangulation {
    let k = d + 1;
    let facets = (0..1usize << k)
        .map(|mask| (0..k).map(|i| 2 * i + ((mask >> i) & 1)).collect())
        .collect();
    OrderedTriangulation::validate(d, 2 * k, facets).expect("cross-polytope boundary is valid")
}

const CP2_DATA: &str = include_str!("../../data/cp2_9.txt");

/// Kühnel's 9-vertex triangulation of the complex projective plane.
pub fn kuhnel_cp2() -> OrderedTriangulation {
    parse_triangulation(CP2_DATA).expect("bundled CP2 data is valid")
}

/// `T x S^1` built from `layers` copies of `T`, consecutive copies joined
/// by staircase-triangulated prisms. Vertex `(layer, v)` gets index
/// `layer * v0 + v`.
pub fn product_with_circle(base: &OrderedTriangulation, layers: usize) -> Result<OrderedTriangulation> {
    if layers < 3 {
        return Err(Error::InvalidComplex(format!(
            "at least 3 layers are needed for a simplicial product, got {layers}"
        )));
    }
    let n = base.v0();
    let d = base.dim();
    let mut facets = Vec::with_capacity(base.facets().len() * (d + 1) * layers);
    for layer in 0..layers {
        let next = (layer + 1) % layers;
        for f in base.facets() {
            for k in 0..=d {
                let mut s: Vec<usize> = f[..=k].iter().map(|&v| layer * n + v).collect();
                s.extend(f[k..].iter().map(|&v| next * n + v));
                s.sort_unstable();
                facets.push(s);
            }
        }
    }
    facets.sort();
    OrderedTriangulation::validate(d + 1, n * layers, facets)
}

/// The boundary of the 4-simplex times a circle.
pub fn s3_times_circle(layers: usize) -> Result<OrderedTriangulation> {
    product_with_circle(&boundary_of_simplex(3), layers)
}

/// Real projective 3-space as the antipodal quotient of the barycentric
/// subdivision of the boundary of the 4-dimensional cross-polytope.
///
/// Vertices of the subdivision are faces of the cross-polytope, encoded as
/// sign vectors in `{-1, 0, 1}^4`; antipodal faces are identified.
pub fn rp3() -> OrderedTriangulation {
    // faces: nonzero sign vectors
    let mut faces: Vec<[i8; 4]> = Vec::new();
    for code in 0..81u32 {
        let mut v = [0i8; 4];
        let mut c = code;
        for x in &mut v {
            *x = (c % 3) as i8 - 1;
            c /= 3;
        }
        if v.iter().any(|&x| x != 0) {
            faces.push(v);
        }
    }
    let canonical = |v: [i8; 4]| -> [i8; 4] {
        // representative: first nonzero coordinate positive
        let first = v.iter().find(|&&x| x != 0).copied().unwrap_or(1);
        if first < 0 {
            v.map(|x| -x)
        } else {
            v
        }
    };
    let mut reps: Vec<[i8; 4]> = faces.iter().map(|&v| canonical(v)).collect();
    reps.sort_by_key(|v| (v.iter().filter(|&&x| x != 0).count(), *v));
    reps.dedup();
    let id: HashMap<[i8; 4], usize> = reps.iter().enumerate().map(|(i, v)| (*v, i)).collect();

    // complete flags of faces: choose a facet (all coordinates nonzero)
    // and an ordering of its coordinates
    let mut facets = Vec::new();
    let perms = permutations(4);
    for signs in 0..16u32 {
        let top: [i8; 4] = std::array::from_fn(|i| if (signs >> i) & 1 == 1 { -1 } else { 1 });
        for p in &perms {
            let mut flag = Vec::with_capacity(4);
            let mut cur = [0i8; 4];
            for &axis in p {
                cur[axis] = top[axis];
                flag.push(id[&canonical(cur)]);
            }
            flag.sort_unstable();
            facets.push(flag);
        }
    }
    facets.sort();
    facets.dedup();
    OrderedTriangulation::validate(3, reps.len(), facets).expect("projective space quotient is valid")
}

/// Real projective 3-space times a circle.
pub fn rp3_times_circle(layers: usize) -> Result<OrderedTriangulation> {
    product_with_circle(&rp3(), layers)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{homology, HomologyGroup};

    #[test]
    fn cross_polytope_sphere() {
        let c = cross_polytope_boundary(4);
        assert_eq!(c.v0(), 10);
        assert_eq!(c.facets().len(), 32);
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn cp2_counts() {
        let c = kuhnel_cp2();
        assert_eq!(c.f_vector(), vec![9, 36, 84, 90, 36]);
        assert_eq!(c.euler_characteristic(), 3);
        assert!(c.boundary_of_fundamental_chain().is_empty());
        let h = homology(&c, 0);
        assert_eq!(h, vec![
            HomologyGroup::integers(1), HomologyGroup::zero(), HomologyGroup::integers(1),
            HomologyGroup::zero(), HomologyGroup::integers(1)
        ]);
        let h3 = homology(&c, 3);
        assert_eq!(h3[2].order().unwrap(), 3u32.into());
    }

    #[test]
    fn circle_products() {
        let s = s3_times_circle(3).unwrap();
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(s.v0(), 15);
        let h = homology(&s, 0);
        assert_eq!(h[1], HomologyGroup::integers(1));
        let h2: Vec<usize> = homology(&s, 2).iter().map(|g| g.cyclic.len()).collect();
        assert_eq!(h2, vec![1, 1, 0, 1, 1]);
        let low = product_with_circle(&boundary_of_simplex(2), 3).unwrap();
        assert_eq!(low.dim(), 3);
        assert_eq!(low.euler_characteristic(), 0);
        assert!(product_with_circle(&boundary_of_simplex(3), 2).is_err());
    }

    #[test]
    fn projective_space() {
        let p = rp3();
        assert_eq!(p.v0(), 40);
        assert_eq!(p.facets().len(), 192);
        let h = homology(&p, 0);
        assert_eq!(h[1], HomologyGroup { cyclic: vec![2] });
        assert_eq!(h[3], HomologyGroup::integers(1));
    }
}
