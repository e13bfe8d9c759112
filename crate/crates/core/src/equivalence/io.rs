use std::fmt::Write as _;

use super::{EquivMap, EquivalenceData};
use crate::algebra::{FiniteAbelianGroup, FiniteGroup};
use crate::error::{Error, Result};

/// Parses equivalence data for structures on `(g, h, m)`:
///
/// ```text
/// aut_g 0 1         # optional, images of the elements of G
/// aut_h 0 1         # optional
/// aut_r 1           # optional Galois exponent
/// Phi
/// 1 1 -> 1
/// psi
/// 1 1 -> 2
/// ```
///
/// Sections are `mu`, `Phi`, `phi`, `psi` and `chi`; omitted entries are
/// zero.
pub fn parse_equivalence(text: &str, g: &FiniteGroup, h: &FiniteAbelianGroup, m: u32) -> Result<EquivalenceData> {
    let mut e = EquivalenceData::identity(g, h, m);
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut section: Option<EquivMap> = None;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let nums = |ws: &[&str]| -> Result<Vec<usize>> {
            ws.iter().map(|w| w.parse::<usize>().map_err(|_| err(no, format!("expected an integer, found `{w}`")))).collect()
        };
        let words: Vec<&str> = l.split_whitespace().collect();
        match words[0] {
            "aut_g" => e.aut_g = nums(&words[1..])?,
            "aut_h" => e.aut_h = nums(&words[1..])?,
            "aut_r" if words.len() == 2 => e.aut_r = nums(&words[1..])?[0] as u32,
            w if EquivMap::parse(w).is_some() && words.len() == 1 => section = EquivMap::parse(w),
            _ => {
                let map = section.ok_or_else(|| err(no, "entry outside a section".into()))?;
                let (args, value) =
                    l.split_once("->").ok_or_else(|| err(no, "expected `args -> value`".into()))?;
                let args = nums(&args.split_whitespace().collect::<Vec<_>>())?;
                let value: i64 =
                    value.trim().parse().map_err(|_| err(no, format!("bad value `{}`", value.trim())))?;
                e.set(map, &args, value).map_err(|x| err(no, x.to_string()))?;
            }
        }
    }
    e.validate()?;
    Ok(e)
}

/// Writes the nonzero entries in the format read by [`parse_equivalence`].
pub fn write_equivalence(e: &EquivalenceData) -> String {
    let mut out = String::new();
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    if !e.has_identity_automorphisms() {
        let _ = writeln!(out, "aut_g {}", join(&e.aut_g));
        let _ = writeln!(out, "aut_h {}", join(&e.aut_h));
        let _ = writeln!(out, "aut_r {}", e.aut_r);
    }
    for map in EquivMap::ALL {
        let entries: Vec<_> = e.domain(map).into_iter().filter(|a| e.get(map, a) != 0).collect();
        if entries.is_empty() {
            continue;
        }
        let _ = writeln!(out, "{}", map.as_str());
        for a in entries {
            let _ = writeln!(out, "{} -> {}", join(&a), e.get(map, &a));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let h = FiniteAbelianGroup::cyclic(2).unwrap();
        let text = "Phi\n1 1 -> 1\nphi\n1 1 1 -> 3\npsi\n1 1 -> 2\n";
        let e = parse_equivalence(text, &g, &h, 4).unwrap();
        assert_eq!(e.big_phi(1, 1), 1);
        assert_eq!(e.phi(1, 1, 1), 3);
        assert_eq!(write_equivalence(&e), text);
        assert_eq!(parse_equivalence(&write_equivalence(&e), &g, &h, 4).unwrap(), e);
    }

    #[test]
    fn rejects_bad_input() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let h = FiniteAbelianGroup::cyclic(2).unwrap();
        assert!(parse_equivalence("1 1 -> 1", &g, &h, 4).is_err());
        assert!(parse_equivalence("Phi\n1 1 -> 5", &g, &h, 4).is_err());
        assert!(parse_equivalence("psi\n0 1 -> 1", &g, &h, 4).is_err());
        assert!(parse_equivalence("aut_g 1 1", &g, &h, 4).is_err());
    }
}
