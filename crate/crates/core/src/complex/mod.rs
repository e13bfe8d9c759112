//! Ordered, oriented closed simplicial pseudo-manifolds.

mod builders;
mod homology;
mod io;

use std::collections::HashMap;

pub use builders::{
    boundary_of_5simplex, boundary_of_simplex, cross_polytope_boundary, kuhnel_cp2,
    product_with_circle, rp3, rp3_times_circle, s3_times_circle,
};
pub use homology::{homology, HomologyGroup};
pub use io::{parse_triangulation, write_triangulation};

use crate::error::{Error, Result};

/// Lexicographically ordered `k`-element subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Sign of the permutation sorting `v` ascending (entries distinct).
pub fn sorting_sign(v: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A closed oriented simplicial complex of dimension `dim` whose vertices
/// carry a total order. Every face is stored as an ascending vertex list.
#[derive(Clone, Debug)]
pub struct OrderedTriangulation {
    dim: usize,
    facets: Vec<Vec<usize>>,
    eps: Vec<i8>,
    /// `faces[k]` lists the k-simplices in lexicographic order.
    faces: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    /// `facet_faces[k][f]` holds the indices of the k-faces of facet `f`,
    /// in the order of `combinations(dim + 1, k + 1)`.
    facet_faces: Vec<Vec<Vec<usize>>>,
}

impl OrderedTriangulation {
    /// Validates a facet list and fixes a coherent orientation with the
    /// first facet of every connected component positive.
    pub fn validate(dim: usize, vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let mut t = Self::build(dim, vertices, facets)?;
        t.eps = t.propagate_orientation(None)?;
        Ok(t)
    }

    /// Validates a facet list together with prescribed signs, which must
    /// form a coherent orientation.
    pub fn with_orientation(
        dim: usize,
        vertices: usize,
        facets: Vec<Vec<usize>>,
        eps: Vec<i8>,
    ) -> Result<Self> {
        if eps.len() != facets.len() || eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidComplex("orientation signs must be +1/-1 per facet".into()));
        }
        let mut t = Self::build(dim, vertices, facets)?;
        t.eps = t.propagate_orientation(Some(&eps))?;
        Ok(t)
    }

    fn build(dim: usize, vertices: usize, mut facets: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidComplex("dimension must be positive".into()));
        }
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets".into()));
        }
        let mut used = vec![false; vertices];
        for f in &mut facets {
            if f.len() != dim + 1 {
                return Err(Error::InvalidComplex(format!("facet {f:?} does not have {} vertices", dim + 1)));
            }
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() || s.iter().any(|&v| v >= vertices) {
                return Err(Error::InvalidComplex(format!("facet {f:?} has repeated or out-of-range vertices")));
            }
            if s != *f {
                return Err(Error::InvalidComplex(format!("facet {f:?} is not listed in ascending order")));
            }
            for &v in f.iter() {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidComplex(format!("vertex {v} lies in no facet")));
        }
        let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
        let mut index: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new(); dim + 1];
        for k in 0..=dim {
            let combos = combinations(dim + 1, k + 1);
            let mut set: Vec<Vec<usize>> = facets
                .iter()
                .flat_map(|f| combos.iter().map(move |c| c.iter().map(|&i| f[i]).collect::<Vec<_>>()))
                .collect();
            set.sort();
            set.dedup();
            for (i, s) in set.iter().enumerate() {
                index[k].insert(s.clone(), i);
            }
            faces[k] = set;
        }
        if faces[dim].len() != facets.len() {
            return Err(Error::InvalidComplex("repeated facet".into()));
        }
        let facet_faces = (0..=dim)
            .map(|k| {
                let combos = combinations(dim + 1, k + 1);
                facets
                    .iter()
                    .map(|f| {
                        combos
                            .iter()
                            .map(|c| {
                                let s: Vec<usize> = c.iter().map(|&i| f[i]).collect();
                                index[k][&s]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(OrderedTriangulation { dim, facets, eps: Vec::new(), faces, index, facet_faces })
    }

    /// Walks across codimension-one faces assigning signs so that every
    /// shared face cancels. Returns the sign vector, checking it against
    /// `prescribed` when given.
    fn propagate_orientation(&self, prescribed: Option<&[i8]>) -> Result<Vec<i8>> {
        let d = self.dim;
        let nf = self.facets.len();
        // ridge -> [(facet, position of omitted vertex)]
        let mut ridges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.faces[d - 1].len()];
        let combos = combinations(d + 1, d);
        for f in 0..nf {
            for (ci, c) in combos.iter().enumerate() {
                let omitted = (0..=d).find(|i| !c.contains(i)).unwrap();
                ridges[self.facet_faces[d - 1][f][ci]].push((f, omitted));
            }
        }
        for (r, inc) in ridges.iter().enumerate() {
            if inc.len() != 2 {
                return Err(Error::InvalidComplex(format!(
                    "face {:?} lies in {} facets instead of 2",
                    self.faces[d - 1][r],
                    inc.len()
                )));
            }
        }
        let mut eps = vec![0i8; nf];
        let mut stack = Vec::new();
        for start in 0..nf {
            if eps[start] != 0 {
                continue;
            }
            eps[start] = prescribed.map_or(1, |p| p[start]);
            stack.push(start);
            while let Some(f) = stack.pop() {
                for (ci, _) in combos.iter().enumerate() {
                    let r = self.facet_faces[d - 1][f][ci];
                    let (a, b) = (ridges[r][0], ridges[r][1]);
                    let ((_, i), (g, j)) = if a.0 == f { (a, b) } else { (b, a) };
                    let parity: i8 = if (i + j) % 2 == 0 { 1 } else { -1 };
                    let want = -eps[f] * parity;
                    if eps[g] == 0 {
                        eps[g] = want;
                        stack.push(g);
                    } else if eps[g] != want {
                        return Err(Error::InvalidComplex(
                            "orientation propagation inconsistency (non-orientable)".into(),
                        ));
                    }
                }
            }
        }
        if let Some(p) = prescribed {
            if p != eps.as_slice() {
                return Err(Error::InvalidComplex("prescribed orientation is not coherent".into()));
            }
        }
        Ok(eps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices.
    pub fn v0(&self) -> usize {
        self.faces[0].len()
    }

    /// Number of edges.
    pub fn v1(&self) -> usize {
        self.faces[1].len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        &self.faces[k]
    }

    pub fn face_index(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex.len().wrapping_sub(1))?.get(simplex).copied()
    }

    /// Indices of the k-faces of facet `f`, ordered like
    /// `combinations(dim + 1, k + 1)`.
    pub fn facet_faces(&self, k: usize, f: usize) -> &[usize] {
        &self.facet_faces[k][f]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(k, f)| if k % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) })
            .sum()
    }

    /// The same complex with every sign flipped.
    pub fn reverse_orientation(&self) -> Self {
        let mut t = self.clone();
        for e in &mut t.eps {
            *e = -*e;
        }
        t
    }

    /// Renames vertex `v` to `perm[v]`, carrying the orientation along.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Self> {
        let n = self.v0();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidComplex("relabelling is not a permutation".into()));
        }
        let mut pairs: Vec<(Vec<usize>, i8)> = self
            .facets
            .iter()
            .zip(&self.eps)
            .map(|(f, &e)| {
                let img: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
                let s = sorting_sign(&img);
                let mut sorted = img;
                sorted.sort_unstable();
                (sorted, e * s)
            })
            .collect();
        pairs.sort();
        let (facets, eps) = pairs.into_iter().unzip();
        Self::with_orientation(self.dim, n, facets, eps)
    }

    /// Boundary of the signed facet chain as a map from ridges to
    /// coefficients; zero for a closed oriented complex.
    pub fn boundary_of_fundamental_chain(&self) -> HashMap<usize, i64> {
        let d = self.dim;
        let combos = combinations(d + 1, d);
        let mut out: HashMap<usize, i64> = HashMap::new();
        for (f, &e) in self.eps.iter().enumerate() {
            for (ci, c) in combos.iter().enumerate() {
                let omitted = (0..=d).find(|i| !c.contains(i)).unwrap();
                let sign = if omitted % 2 == 0 { 1 } else { -1 };
                *out.entry(self.facet_faces[d - 1][f][ci]).or_default() += sign * e as i64;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}
