//! Resolution of `--complex` and `--structure` arguments.

use fg4::complex::{
    boundary_of_5simplex, cross_polytope_boundary, kuhnel_cp2, parse_triangulation, rp3_times_circle, s3_times_circle,
    OrderedTriangulation,
};
use fg4::structure::{builtin, parse_structure, SemiWeakStructure};
use fg4::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const COMPLEXES: &[(&str, &str)] = &[
    ("s4", "boundary of the 5-simplex, 6 vertices"),
    ("s4-cross", "boundary of the 4-dimensional cross-polytope, 10 vertices"),
    ("cp2", "the 9-vertex complex projective plane"),
    ("s3xs1:<layers>", "boundary of the 4-simplex times a circle of <layers> layers"),
    ("rp3xs1:<layers>", "the 40-vertex real projective 3-space times a circle"),
    ("file:<path>", "a triangulation file"),
];

pub const MODIFIERS: &[(&str, &str)] = &[
    ("+reversed", "reverse the orientation"),
    ("+relabel:<seed>", "permute the vertex labels with a seeded shuffle"),
];

fn layers(name: &str, arg: &str) -> Result<usize> {
    arg.parse().map_err(|_| Error::InvalidComplex(format!("`{name}` needs a layer count, got `{arg}`")))
}

/// Seeded vertex permutation.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

/// Parses `base[+modifier...]`.
pub fn complex(spec: &str) -> Result<OrderedTriangulation> {
    let mut parts = spec.split('+');
    let base = parts.next().unwrap_or("");
    let (name, arg) = base.split_once(':').unwrap_or((base, ""));
    let mut t = match name {
        "s4" => boundary_of_5simplex(),
        "s4-cross" => cross_polytope_boundary(4),
        "cp2" => kuhnel_cp2(),
        "s3xs1" => s3_times_circle(layers(name, arg)?)?,
        "rp3xs1" => rp3_times_circle(layers(name, arg)?)?,
        "file" => parse_triangulation(&std::fs::read_to_string(arg)?)?,
        _ => return Err(Error::InvalidComplex(format!("unknown complex `{base}`"))),
    };
    for m in parts {
        let (mname, marg) = m.split_once(':').unwrap_or((m, ""));
        t = match mname {
            "reversed" => t.reverse_orientation(),
            "relabel" => {
                let seed = marg.parse().map_err(|_| Error::InvalidComplex(format!("bad relabel seed `{marg}`")))?;
                t.relabel_vertices(&permutation(t.v0(), seed))?
            }
            _ => return Err(Error::InvalidComplex(format!("unknown modifier `{m}`"))),
        };
    }
    Ok(t)
}

/// A builtin `name:params` or `file:<path>`.
pub fn structure(spec: &str) -> Result<SemiWeakStructure> {
    match spec.strip_prefix("file:") {
        Some(path) => parse_structure(&std::fs::read_to_string(path)?),
        None => builtin(spec),
    }
}
