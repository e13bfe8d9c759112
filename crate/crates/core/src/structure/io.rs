use std::fmt::Write as _;

use super::{MapName, SemiWeakStructure};
use crate::algebra::{FiniteAbelianGroup, FiniteGroup};
use crate::error::{Error, Result};

/// Parses the structure text format:
///
/// ```text
/// G cyclic 2            # or `G trivial`, or `G table <n>` followed by n rows
/// H cyclic 2 2          # cyclic factor orders; `H trivial` for the trivial group
/// m 4
/// iota1
/// 1 1 1 -> 2
/// ```
///
/// A line naming a map opens its section; entries are `args -> value`, with
/// `H` elements for `alpha0` and exponents of `zeta_m` otherwise. Omitted
/// entries are neutral.
pub fn parse_structure(text: &str) -> Result<SemiWeakStructure> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut g = None;
    let mut h = None;
    let mut m = None;
    let mut i = 0;
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let num = |line: usize, w: &str| -> Result<u64> {
        w.parse::<u64>().map_err(|_| err(line, format!("expected a non-negative integer, found `{w}`")))
    };
    // header
    while i < lines.len() {
        let (no, l) = lines[i];
        let words: Vec<&str> = l.split_whitespace().collect();
        match words[0] {
            "G" => {
                match words.get(1).copied() {
                    Some("trivial") => g = Some(FiniteGroup::trivial()),
                    Some("cyclic") if words.len() == 3 => {
                        g = Some(FiniteGroup::cyclic(num(no, words[2])? as usize)?);
                    }
                    Some("table") if words.len() == 3 => {
                        let n = num(no, words[2])? as usize;
                        let mut table = Vec::with_capacity(n * n);
                        for r in 0..n {
                            let (rno, row) = *lines.get(i + 1 + r).ok_or_else(|| err(no, "table truncated".into()))?;
                            for w in row.split_whitespace() {
                                table.push(num(rno, w)? as usize);
                            }
                        }
                        i += n;
                        g = Some(FiniteGroup::from_table(n, table)?);
                    }
                    _ => return Err(err(no, "expected `G trivial`, `G cyclic <n>` or `G table <n>`".into())),
                }
            }
            "H" => match words.get(1).copied() {
                Some("trivial") => h = Some(FiniteAbelianGroup::trivial()),
                Some("cyclic") => {
                    let orders = words[2..].iter().map(|w| num(no, w)).collect::<Result<Vec<_>>>()?;
                    h = Some(FiniteAbelianGroup::new(orders)?);
                }
                _ => return Err(err(no, "expected `H trivial` or `H cyclic <n1> <n2> ...`".into())),
            },
            "m" if words.len() == 2 => m = Some(num(no, words[1])? as u32),
            _ => break,
        }
        i += 1;
    }
    let g = g.ok_or_else(|| err(0, "missing `G` header".into()))?;
    let h = h.ok_or_else(|| err(0, "missing `H` header".into()))?;
    let m = m.ok_or_else(|| err(0, "missing `m` header".into()))?;
    let mut s = SemiWeakStructure::trivial(g, h, m)?;
    let mut section: Option<MapName> = None;
    for &(no, l) in &lines[i..] {
        if let Some(map) = MapName::parse(l) {
            section = Some(map);
            continue;
        }
        let map = section.ok_or_else(|| err(no, format!("entry `{l}` outside a map section")))?;
        let (lhs, rhs) = l.split_once("->").ok_or_else(|| err(no, format!("expected `args -> value`, found `{l}`")))?;
        let args = lhs.split_whitespace().map(|w| num(no, w).map(|x| x as usize)).collect::<Result<Vec<_>>>()?;
        let value: i64 =
            rhs.trim().parse().map_err(|_| err(no, format!("bad value `{}`", rhs.trim())))?;
        s.set(map, &args, value).map_err(|e| err(no, e.to_string()))?;
    }
    Ok(s)
}

/// Writes a structure in the format read by [`parse_structure`], listing
/// only non-neutral entries. Cyclic `G` is written as a table.
pub fn write_structure(s: &SemiWeakStructure) -> String {
    let mut out = String::new();
    let n = s.g().order();
    if n == 1 {
        out.push_str("G trivial\n");
    } else {
        writeln!(out, "G table {n}").unwrap();
        for row in s.g().table().chunks(n) {
            let words: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", words.join(" ")).unwrap();
        }
    }
    if s.h().is_trivial() {
        out.push_str("H trivial\n");
    } else {
        let orders: Vec<String> = s.h().cyclic_orders().iter().map(|x| x.to_string()).collect();
        writeln!(out, "H cyclic {}", orders.join(" ")).unwrap();
    }
    writeln!(out, "m {}", s.m()).unwrap();
    for map in MapName::ALL {
        if s.is_trivial_map(map) {
            continue;
        }
        writeln!(out, "{}", map.as_str()).unwrap();
        for args in s.domain(map) {
            let v = s.get(map, &args);
            if v != 0 {
                let a: Vec<String> = args.iter().map(|x| x.to_string()).collect();
                writeln!(out, "{} -> {v}", a.join(" ")).unwrap();
            }
        }
    }
    out
}
