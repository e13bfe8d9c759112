//! Bracket expansion: strings of 1-associators that make structural
//! 2-morphisms composable when every word is read left-parenthesized.
//!
//! A word is a sequence of simple 1-morphisms (elements of `H`). A move
//! replaces a contiguous subword, parenthesized by an explicit tree, with
//! another tree. Its bracketed cost is
//! `path(source -> left normal)^-1 * value * path(target -> left normal)`,
//! where paths are products of `alpha1(a, b, c)` for rewrites
//! `a(bc) => (ab)c`.

use std::fmt;

use crate::algebra::FiniteAbelianGroup;
use crate::error::{Error, Result};

/// A parenthesized word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(h: usize) -> Self {
        Tree::Leaf(h)
    }

    pub fn node(a: Tree, b: Tree) -> Self {
        Tree::Node(Box::new(a), Box::new(b))
    }

    /// `((w0 w1) w2) ...`; panics on an empty word.
    pub fn left_normal(word: &[usize]) -> Self {
        let mut it = word.iter();
        let mut t = Tree::Leaf(*it.next().expect("empty word"));
        for &w in it {
            t = Tree::node(t, Tree::Leaf(w));
        }
        t
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(h) => out.push(*h),
            Tree::Node(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(a, b) => a.len() + b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, h: &FiniteAbelianGroup) -> usize {
        match self {
            Tree::Leaf(x) => *x,
            Tree::Node(a, b) => h.add(a.value(h), b.value(h)),
        }
    }

    pub fn is_left_normal(&self) -> bool {
        match self {
            Tree::Leaf(_) => true,
            Tree::Node(a, b) => matches!(**b, Tree::Leaf(_)) && a.is_left_normal(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(h) => write!(f, "{h}"),
            Tree::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// Rewrites taking `X (y_0 ... y_k)` (both sides left normal, `X` of value
/// `x`) to left normal form.
fn merge(h: &FiniteAbelianGroup, x: usize, ys: &[usize], out: &mut Vec<[usize; 3]>) {
    if ys.len() <= 1 {
        return;
    }
    let (init, last) = ys.split_at(ys.len() - 1);
    let mid = init.iter().fold(0, |acc, &y| h.add(acc, y));
    out.push([x, mid, last[0]]);
    merge(h, x, init, out);
}

fn normalize(t: &Tree, h: &FiniteAbelianGroup, out: &mut Vec<[usize; 3]>) -> Vec<usize> {
    match t {
        Tree::Leaf(x) => vec![*x],
        Tree::Node(a, b) => {
            let mut la = normalize(a, h, out);
            let lb = normalize(b, h, out);
            let x = la.iter().fold(0, |acc, &y| h.add(acc, y));
            merge(h, x, &lb, out);
            la.extend(lb);
            la
        }
    }
}

/// The associator triples `(a, b, c)` of a rewriting path from `t` to its
/// left normal form.
pub fn normalization_path(t: &Tree, h: &FiniteAbelianGroup) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    normalize(t, h, &mut out);
    out
}

/// Structural map symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Pi,
    Alpha1,
    Tau,
    Iota1,
    Iota2,
    Iota3,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symbol::Pi => "pi",
            Symbol::Alpha1 => "alpha1",
            Symbol::Tau => "tau",
            Symbol::Iota1 => "iota1",
            Symbol::Iota2 => "iota2",
            Symbol::Iota3 => "iota3",
        };
        f.write_str(s)
    }
}

/// A structural 2-morphism value raised to `power`, with arguments as
/// element indices (G or H according to the symbol's signature).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub symbol: Symbol,
    pub args: Vec<usize>,
    pub power: i32,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
        write!(f, "{}({})", self.symbol, args.join(","))?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// A factor acting on the subword between `prefix` and `suffix`.
#[derive(Clone, Debug)]
pub struct BracketedFactor {
    pub factor: Factor,
    pub prefix: Vec<usize>,
    pub source: Tree,
    pub target: Tree,
    pub suffix: Vec<usize>,
}

fn context_path(h: &FiniteAbelianGroup, prefix: &[usize], sub: &Tree) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let leaves = normalize(sub, h, &mut out);
    if !prefix.is_empty() {
        let x = prefix.iter().fold(0, |acc, &y| h.add(acc, y));
        merge(h, x, &leaves, &mut out);
    }
    out
}

/// Expands a bracketed factor into the factor itself surrounded by the
/// associators of its context. Fails when source and target do not
/// compose to the same element of `H`.
pub fn expand_brackets(bf: &BracketedFactor, h: &FiniteAbelianGroup) -> Result<Vec<Factor>> {
    if bf.source.value(h) != bf.target.value(h) {
        return Err(Error::InvalidStructure(format!(
            "source {} and target {} of {} are not composable",
            bf.source, bf.target, bf.factor
        )));
    }
    let mut out: Vec<Factor> = context_path(h, &bf.prefix, &bf.source)
        .into_iter()
        .rev()
        .map(|t| Factor { symbol: Symbol::Alpha1, args: t.to_vec(), power: -1 })
        .collect();
    out.push(bf.factor.clone());
    out.extend(
        context_path(h, &bf.prefix, &bf.target)
            .into_iter()
            .map(|t| Factor { symbol: Symbol::Alpha1, args: t.to_vec(), power: 1 }),
    );
    Ok(out)
}

/// Accumulates the bracketed exponent of a sequence of moves on a word.
pub struct Chain<'a> {
    h: &'a FiniteAbelianGroup,
    alpha1: Option<&'a dyn Fn(usize, usize, usize) -> i64>,
    word: Vec<usize>,
    total: i64,
}

impl<'a> Chain<'a> {
    /// `alpha1 = None` declares the 1-associator trivial, so contexts are
    /// skipped.
    pub fn new(
        h: &'a FiniteAbelianGroup,
        alpha1: Option<&'a dyn Fn(usize, usize, usize) -> i64>,
        word: Vec<usize>,
    ) -> Self {
        Chain { h, alpha1, word, total: 0 }
    }

    fn path_exponent(&self, prefix: &[usize], sub: &Tree) -> i64 {
        let a = self.alpha1.expect("only called with a nontrivial associator");
        context_path(self.h, prefix, sub).iter().map(|t| a(t[0], t[1], t[2])).sum()
    }

    /// Replaces the subword at `pos` read as `source` by `target`, adding
    /// `value` and the associators of the context. Composites are not
    /// checked here, so chains over data violating the object cocycle
    /// condition still evaluate.
    pub fn apply(&mut self, pos: usize, source: &Tree, target: &Tree, value: i64) -> &mut Self {
        let len = source.len();
        debug_assert_eq!(&self.word[pos..pos + len], source.leaves().as_slice(), "move does not match word");
        if self.alpha1.is_some() {
            let prefix = &self.word[..pos];
            self.total += self.path_exponent(prefix, target) - self.path_exponent(prefix, source);
        }
        self.total += value;
        self.word.splice(pos..pos + len, target.leaves());
        self
    }

    /// Shorthand for moves between left-normal subwords.
    pub fn apply_words(&mut self, pos: usize, source: &[usize], target: &[usize], value: i64) -> &mut Self {
        self.apply(pos, &Tree::left_normal(source), &Tree::left_normal(target), value)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn total(&self) -> i64 {
        self.total
    }
}
