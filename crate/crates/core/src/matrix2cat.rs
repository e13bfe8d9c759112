//! Block matrices over the group rig `N(H)` and over cyclotomic numbers,
//! realizing the strict 2-category whose simple objects are the elements of
//! `G` and whose endomorphisms of each simple object form `N(H)`.
//!
//! Objects are ordered lists of simple objects (a basis of a formal sum).
//! A 1-morphism is a matrix of rig elements that vanishes between rows and
//! columns carrying different labels, which is block diagonal up to the
//! ordering of the basis. A 2-morphism `f => g` has, at entry `(i, j)`, a
//! `deg(f_ij) x deg(g_ij)` matrix of cyclotomic numbers.

use crate::algebra::{Cyclotomic, FiniteAbelianGroup, FiniteGroup};
use crate::error::{Error, Result};

/// A formal sum of elements of `H` with non-negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RigElement {
    counts: Vec<u64>,
}

impl RigElement {
    pub fn zero(h: &FiniteAbelianGroup) -> Self {
        RigElement { counts: vec![0; h.order()] }
    }

    /// The unit: one copy of the identity of `H`.
    pub fn one(h: &FiniteAbelianGroup) -> Self {
        Self::element(h, 0)
    }

    pub fn element(h: &FiniteAbelianGroup, x: usize) -> Self {
        let mut r = Self::zero(h);
        r.counts[x] = 1;
        r
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        RigElement { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn degree(&self) -> usize {
        self.counts.iter().sum::<u64>() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        RigElement { counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect() }
    }

    pub fn mul(&self, other: &Self, h: &FiniteAbelianGroup) -> Self {
        let mut counts = vec![0; self.counts.len()];
        for (x, &a) in self.counts.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (y, &b) in other.counts.iter().enumerate().filter(|(_, &b)| b != 0) {
                counts[h.add(x, y)] += a * b;
            }
        }
        RigElement { counts }
    }

    /// `sum n_h h^-1`.
    pub fn dual(&self, h: &FiniteAbelianGroup) -> Self {
        let mut counts = vec![0; self.counts.len()];
        for (x, &a) in self.counts.iter().enumerate() {
            counts[h.neg(x)] += a;
        }
        RigElement { counts }
    }
}

/// A dense matrix of cyclotomic numbers in a fixed `Q(zeta_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    m: u32,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl CMatrix {
    pub fn zeros(m: u32, rows: usize, cols: usize) -> Self {
        CMatrix { m, rows, cols, data: vec![Cyclotomic::zero(m); rows * cols] }
    }

    pub fn identity(m: u32, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a.data[i * n + i] = Cyclotomic::one(m);
        }
        a
    }

    pub fn from_rows(m: u32, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(CMatrix { m, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `(x (x) y)[(i, j), (k, l)] = x[i, k] y[j, l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(self.m, r, c);
        for i in 0..self.rows {
            for k in 0..self.cols {
                for j in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + j, k * other.cols + l, self.get(i, k).clone() * other.get(j, l).clone());
                    }
                }
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.m, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = Self::zeros(self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }
}

/// An ordered list of simple objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Object {
    pub labels: Vec<usize>,
}

impl Object {
    pub fn new(labels: Vec<usize>) -> Self {
        Object { labels }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    /// Basis of `XY` ordered lexicographically by pairs.
    pub fn tensor(&self, other: &Self, g: &FiniteGroup) -> Self {
        let labels = self.labels.iter().flat_map(|&a| other.labels.iter().map(move |&b| g.mul(a, b))).collect();
        Object { labels }
    }

    pub fn dual(&self, g: &FiniteGroup) -> Self {
        Object { labels: self.labels.iter().map(|&a| g.inv(a)).collect() }
    }
}

/// A word naming one basis vector of an entry: atomic entries use `[r]`,
/// a composite `f g` uses `a ++ [k] ++ b`, so both bracketings of a triple
/// composite produce the same words.
pub type BasisWord = Vec<u32>;

#[derive(Clone, Debug)]
pub struct OneMorphismMatrix {
    pub source: Object,
    pub target: Object,
    entries: Vec<RigElement>,
    /// Sorted basis words of each entry; their order fixes the rows and
    /// columns of 2-morphism entries.
    bases: Vec<Vec<BasisWord>>,
}

/// Equality of matrices; basis words only order the entries and are not
/// compared, so the unit laws hold exactly.
impl PartialEq for OneMorphismMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.entries == other.entries
    }
}

impl Eq for OneMorphismMatrix {}

fn atomic_basis(x: &RigElement) -> Vec<BasisWord> {
    (0..x.degree() as u32).map(|r| vec![r]).collect()
}

impl OneMorphismMatrix {
    pub fn new(source: Object, target: Object, rows: Vec<Vec<RigElement>>) -> Result<Self> {
        if rows.len() != source.degree() || rows.iter().any(|r| r.len() != target.degree()) {
            return Err(Error::Shape(format!(
                "a 1-morphism {} -> {} needs a {}x{} matrix",
                source.degree(),
                target.degree(),
                source.degree(),
                target.degree()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if source.labels[i] != target.labels[j] && !x.is_zero() {
                    return Err(Error::Shape(format!("entry ({i}, {j}) joins different simple objects")));
                }
            }
        }
        let entries: Vec<RigElement> = rows.into_iter().flatten().collect();
        let bases = entries.iter().map(atomic_basis).collect();
        Ok(OneMorphismMatrix { source, target, entries, bases })
    }

    pub fn identity(x: &Object, h: &FiniteAbelianGroup) -> Self {
        let n = x.degree();
        let entries: Vec<RigElement> = (0..n * n)
            .map(|k| if k / n == k % n { RigElement::one(h) } else { RigElement::zero(h) })
            .collect();
        let bases = entries.iter().map(atomic_basis).collect();
        OneMorphismMatrix { source: x.clone(), target: x.clone(), entries, bases }
    }

    pub fn rows(&self) -> usize {
        self.source.degree()
    }

    pub fn cols(&self) -> usize {
        self.target.degree()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RigElement {
        &self.entries[i * self.cols() + j]
    }

    pub fn basis(&self, i: usize, j: usize) -> &[BasisWord] {
        &self.bases[i * self.cols() + j]
    }

    pub fn degree(&self, i: usize, j: usize) -> usize {
        self.entry(i, j).degree()
    }
}

/// Basis of `(f g)_ij` as `(word, a, k, b)`: basis vector `a` of `f_ik`
/// and `b` of `g_kj`, sorted by word.
fn composite_basis(f: &OneMorphismMatrix, g: &OneMorphismMatrix, i: usize, j: usize) -> Vec<(BasisWord, usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 0..f.cols() {
        for (a, wa) in f.basis(i, k).iter().enumerate() {
            for (b, wb) in g.basis(k, j).iter().enumerate() {
                let mut w = wa.clone();
                w.push(k as u32);
                w.extend_from_slice(wb);
                out.push((w, a, k, b));
            }
        }
    }
    out.sort();
    out
}

/// `f` then `g`, by matrix multiplication over `N(H)`.
pub fn compose_1(f: &OneMorphismMatrix, g: &OneMorphismMatrix, h: &FiniteAbelianGroup) -> Result<OneMorphismMatrix> {
    if f.target != g.source {
        return Err(Error::Shape("target of the first 1-morphism is not the source of the second".into()));
    }
    let (r, k, c) = (f.rows(), f.cols(), g.cols());
    let mut entries = Vec::with_capacity(r * c);
    let mut bases = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            let mut acc = RigElement::zero(h);
            for x in 0..k {
                acc = acc.add(&f.entry(i, x).mul(g.entry(x, j), h));
            }
            entries.push(acc);
            bases.push(composite_basis(f, g, i, j).into_iter().map(|t| t.0).collect());
        }
    }
    Ok(OneMorphismMatrix { source: f.source.clone(), target: g.target.clone(), entries, bases })
}

/// `(f (x) g)[(i, j), (k, l)] = f[i, k] g[j, l]`.
pub fn tensor_1(
    f: &OneMorphismMatrix,
    g: &OneMorphismMatrix,
    grp: &FiniteGroup,
    h: &FiniteAbelianGroup,
) -> OneMorphismMatrix {
    let mut entries = Vec::with_capacity(f.entries.len() * g.entries.len());
    let mut bases = Vec::with_capacity(f.entries.len() * g.entries.len());
    for i in 0..f.rows() {
        for j in 0..g.rows() {
            for k in 0..f.cols() {
                for l in 0..g.cols() {
                    entries.push(f.entry(i, k).mul(g.entry(j, l), h));
                    let words = f.basis(i, k).iter().flat_map(|wa| g.basis(j, l).iter().map(move |wb| [&wa[..], &wb[..]].concat()));
                    bases.push(words.collect());
                }
            }
        }
    }
    OneMorphismMatrix {
        source: f.source.tensor(&g.source, grp),
        target: f.target.tensor(&g.target, grp),
        entries,
        bases,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMorphismMatrix {
    pub source: OneMorphismMatrix,
    pub target: OneMorphismMatrix,
    entries: Vec<CMatrix>,
}

impl TwoMorphismMatrix {
    pub fn new(source: OneMorphismMatrix, target: OneMorphismMatrix, entries: Vec<Vec<CMatrix>>) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(Error::Shape("a 2-morphism needs parallel 1-morphisms".into()));
        }
        if entries.len() != source.rows() || entries.iter().any(|r| r.len() != source.cols()) {
            return Err(Error::Shape("entry grid does not match the 1-morphisms".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.rows() != source.degree(i, j) || a.cols() != target.degree(i, j) {
                    return Err(Error::Shape(format!(
                        "entry ({i}, {j}) is {}x{}, expected {}x{}",
                        a.rows(),
                        a.cols(),
                        source.degree(i, j),
                        target.degree(i, j)
                    )));
                }
            }
        }
        Ok(TwoMorphismMatrix { source, target, entries: entries.into_iter().flatten().collect() })
    }

    pub fn identity(f: &OneMorphismMatrix, m: u32) -> Self {
        let entries = f.entries.iter().map(|x| CMatrix::identity(m, x.degree())).collect();
        TwoMorphismMatrix { source: f.clone(), target: f.clone(), entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> &CMatrix {
        &self.entries[i * self.source.cols() + j]
    }
}

/// `(a . b)_ij = a_ij b_ij` for `a: f => g`, `b: g => k`.
pub fn vcompose_2(a: &TwoMorphismMatrix, b: &TwoMorphismMatrix) -> Result<TwoMorphismMatrix> {
    if a.target != b.source {
        return Err(Error::Shape("vertical composite of non-composable 2-morphisms".into()));
    }
    let entries = a.entries.iter().zip(&b.entries).map(|(x, y)| x.mul(y)).collect::<Result<_>>()?;
    Ok(TwoMorphismMatrix { source: a.source.clone(), target: b.target.clone(), entries })
}

/// `(a o b)_ij = (+)_k a_ik (x) b_kj`, with rows and columns in the order
/// of the basis words of the composite 1-morphisms. This differs from the
/// block layout of the direct sum by a fixed permutation and makes the
/// composite strictly associative.
pub fn hcompose_2(a: &TwoMorphismMatrix, b: &TwoMorphismMatrix, h: &FiniteAbelianGroup) -> Result<TwoMorphismMatrix> {
    let source = compose_1(&a.source, &b.source, h)?;
    let target = compose_1(&a.target, &b.target, h)?;
    let (r, c) = (a.source.rows(), b.source.cols());
    let m = a.entries.first().or(b.entries.first()).map_or(1, |x| x.m);
    let mut entries = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            let rows = composite_basis(&a.source, &b.source, i, j);
            let cols = composite_basis(&a.target, &b.target, i, j);
            let mut e = CMatrix::zeros(m, rows.len(), cols.len());
            for (x, &(_, p, k, q)) in rows.iter().enumerate() {
                for (y, &(_, p2, k2, q2)) in cols.iter().enumerate() {
                    if k == k2 {
                        e.set(x, y, a.entry(i, k).get(p, p2).clone() * b.entry(k, j).get(q, q2).clone());
                    }
                }
            }
            entries.push(e);
        }
    }
    Ok(TwoMorphismMatrix { source, target, entries })
}

/// Entrywise conjugate transpose, a 2-morphism `g => f` from `f => g`.
pub fn dual_2(a: &TwoMorphismMatrix) -> TwoMorphismMatrix {
    TwoMorphismMatrix {
        source: a.target.clone(),
        target: a.source.clone(),
        entries: a.entries.iter().map(CMatrix::conj_transpose).collect(),
    }
}

/// The swap `P` with `P[(p, q), (r, s)] = [p = s][q = r]`, of size
/// `ab x ba`.
pub fn swap_matrix(m: u32, a: usize, b: usize) -> CMatrix {
    let mut p = CMatrix::zeros(m, a * b, b * a);
    for x in 0..a {
        for y in 0..b {
            p.set(x * b + y, y * a + x, Cyclotomic::one(m));
        }
    }
    p
}

/// The tensorator of `f` and `g`: entry `[(i, j), (k, l)]` swaps the two
/// tensor factors of `f_ik g_jl`. Source and target are both `f (x) g`, the
/// rig being commutative; only the order of the factors differs.
pub fn tensorator_matrix(
    f: &OneMorphismMatrix,
    g: &OneMorphismMatrix,
    grp: &FiniteGroup,
    h: &FiniteAbelianGroup,
    m: u32,
) -> TwoMorphismMatrix {
    let fg = tensor_1(f, g, grp, h);
    let mut entries = Vec::with_capacity(fg.entries.len());
    for i in 0..f.rows() {
        for j in 0..g.rows() {
            for k in 0..f.cols() {
                for l in 0..g.cols() {
                    entries.push(swap_matrix(m, f.degree(i, k), g.degree(j, l)));
                }
            }
        }
    }
    TwoMorphismMatrix { source: fg.clone(), target: fg, entries }
}
