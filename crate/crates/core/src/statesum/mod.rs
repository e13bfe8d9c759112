//! State-sum evaluation.
//!
//! `Z(M) = (#G)^-v0 (#H)^(v0-v1) sum over admissible labellings of the
//! product over 4-simplices of the simplex weight raised to the orientation
//! sign`. Weights are roots of unity, so the raw sum is accumulated as a
//! histogram of exponents mod `m`.

pub mod brackets;
mod enumerate;
mod linear;
pub mod pachner;
mod quadratic;
pub mod simplex;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::Cyclotomic;
use crate::complex::OrderedTriangulation;
use crate::error::{Error, Result};
use crate::structure::SemiWeakStructure;

pub use simplex::{z_simplex, z_simplex_local};

/// Evaluation strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Pick the cheapest applicable method within budget.
    Auto,
    /// Every labelling, every facet.
    Brute,
    /// Walk each kernel coset in Gray-code order, updating only the facets
    /// touched by the changed generator.
    Gray,
    /// Trivial `alpha1` and `tau`, `iota` maps characters in `h`: the
    /// coset sum factorizes over kernel generators.
    Linear,
    /// Trivial `G` and `alpha1`, bilinear `tau` on `H = Z/p`, `p` prime:
    /// a quadratic Gauss sum.
    Quadratic,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Auto, Method::Brute, Method::Gray, Method::Linear, Method::Quadratic];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Brute => "brute",
            Method::Gray => "gray",
            Method::Linear => "linear",
            Method::Quadratic => "quadratic",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.as_str() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct StateSumResult {
    /// The normalized invariant.
    pub value: Cyclotomic,
    /// The unnormalized sum over labellings.
    pub raw: Cyclotomic,
    /// `(#G)^-v0 (#H)^(v0-v1)`.
    pub normalization: BigRational,
    /// The method that actually ran.
    pub method: Method,
    /// Number of admissible labellings summed over (possibly implicitly).
    pub labellings: BigUint,
    pub elapsed: Duration,
}

/// `(#G)^-v0 (#H)^(v0-v1)`.
pub fn normalization(t: &OrderedTriangulation, s: &SemiWeakStructure) -> BigRational {
    let g = BigInt::from(s.g().order());
    let h = BigInt::from(s.h().order());
    let v0 = t.v0() as i32;
    let v1 = t.v1() as i32;
    let pow = |b: &BigInt, e: i32| -> BigRational {
        let p = num_traits::pow(b.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            BigRational::from_integer(p)
        } else {
            BigRational::new(BigInt::one(), p)
        }
    };
    pow(&g, -v0) * pow(&h, v0 - v1)
}

/// Per-facet local data: edges and triangles in lexicographic local order.
pub(crate) struct Facets {
    pub edges: Vec<[usize; 10]>,
    pub tris: Vec<[usize; 10]>,
    pub eps: Vec<i64>,
}

impl Facets {
    pub fn new(t: &OrderedTriangulation) -> Result<Self> {
        if t.dim() != 4 {
            return Err(Error::InvalidComplex(format!("state sums need a 4-dimensional complex, got dimension {}", t.dim())));
        }
        let n = t.facets().len();
        let mut edges = Vec::with_capacity(n);
        let mut tris = Vec::with_capacity(n);
        for f in 0..n {
            edges.push(<[usize; 10]>::try_from(t.facet_faces(1, f)).expect("4-simplex has 10 edges"));
            tris.push(<[usize; 10]>::try_from(t.facet_faces(2, f)).expect("4-simplex has 10 triangles"));
        }
        Ok(Facets { edges, tris, eps: t.eps().iter().map(|&e| e as i64).collect() })
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    /// Signed weight exponent of facet `f`.
    #[inline]
    pub fn weight(&self, s: &SemiWeakStructure, f: usize, g: &[usize], h: &[usize]) -> i64 {
        let lg = self.edges[f].map(|e| g[e]);
        let lh = self.tris[f].map(|x| h[x]);
        self.eps[f] * z_simplex_local(s, &lg, &lh)
    }
}

/// Histogram of exponents mod `m`, turned into a cyclotomic sum.
pub(crate) fn from_histogram(m: u32, counts: &[u64]) -> Cyclotomic {
    let c: Vec<i128> = counts.iter().map(|&x| x as i128).collect();
    Cyclotomic::from_small_counts(m, &c)
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub method: Method,
    pub budget: u64,
    /// Sum only over edge labellings trivial on a spanning forest and scale
    /// by the gauge orbit size. Correct only if the coset sums are gauge
    /// invariant, which is checked case by case rather than assumed.
    pub gauge_fix: bool,
    /// Worker threads for the Gray walk; the result does not depend on it.
    pub threads: usize,
}

impl Options {
    pub fn new(method: Method, budget: u64) -> Self {
        Options { method, budget, gauge_fix: false, threads: 1 }
    }
}

/// Evaluates `Z(M)` with the given method and labelling budget.
pub fn z_total(t: &OrderedTriangulation, s: &SemiWeakStructure, method: Method, budget: u64) -> Result<StateSumResult> {
    z_total_with(t, s, Options::new(method, budget))
}

pub fn z_total_with(t: &OrderedTriangulation, s: &SemiWeakStructure, opts: Options) -> Result<StateSumResult> {
    let Options { method, budget, gauge_fix, threads } = opts;
    let start = Instant::now();
    let facets = Facets::new(t)?;
    let (raw, labellings, used) = match method {
        Method::Brute => {
            let (r, n) = enumerate::brute(t, s, &facets, budget)?;
            (r, n, Method::Brute)
        }
        Method::Gray => {
            let (r, n) = enumerate::gray(t, s, &facets, budget, gauge_fix, threads)?;
            (r, n, Method::Gray)
        }
        Method::Linear => {
            linear::applicable(s).map_err(|reason| Error::MethodNotApplicable { method: "linear".into(), reason })?;
            let (r, n) = linear::evaluate(t, s, &facets, budget, gauge_fix)?;
            (r, n, Method::Linear)
        }
        Method::Quadratic => {
            quadratic::applicable(s)
                .map_err(|reason| Error::MethodNotApplicable { method: "quadratic".into(), reason })?;
            let (r, n) = quadratic::evaluate(t, s, &facets, budget)?;
            (r, n, Method::Quadratic)
        }
        Method::Auto => auto(t, s, &facets, budget, gauge_fix, threads)?,
    };
    let norm = normalization(t, s);
    Ok(StateSumResult {
        value: raw.scale(&norm),
        raw,
        normalization: norm,
        method: used,
        labellings,
        elapsed: start.elapsed(),
    })
}

fn auto(
    t: &OrderedTriangulation,
    s: &SemiWeakStructure,
    facets: &Facets,
    budget: u64,
    gauge_fix: bool,
    threads: usize,
) -> Result<(Cyclotomic, BigUint, Method)> {
    if linear::applicable(s).is_ok() {
        match linear::evaluate(t, s, facets, budget, gauge_fix) {
            Ok((r, n)) => return Ok((r, n, Method::Linear)),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if quadratic::applicable(s).is_ok() {
        let (r, n) = quadratic::evaluate(t, s, facets, budget)?;
        return Ok((r, n, Method::Quadratic));
    }
    let (r, n) = enumerate::gray(t, s, facets, budget, gauge_fix, threads)?;
    Ok((r, n, Method::Gray))
}

/// `Z` with automatic method choice and the environment budget.
pub fn evaluate(t: &OrderedTriangulation, s: &SemiWeakStructure) -> Result<StateSumResult> {
    z_total(t, s, Method::Auto, crate::labelling::budget())
}
