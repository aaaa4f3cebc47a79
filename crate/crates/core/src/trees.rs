//! Planar rooted trees whose internal vertices all have at least two children.
//!
//! `T_n` is the set of such trees with `n + 1` leaves; leaves are numbered
//! `0..=n` from left to right. These sets carry face maps (delete a leaf) and
//! degeneracy maps (double a leaf) that make them a simplicial set, and they
//! index the basis of the (co)chain modules.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    /// Grafting of two or more subtrees at a new lowest vertex.
    Node(Vec<PlanarTree>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafOrientation {
    Left,
    Right,
    Middle,
}

impl Ord for PlanarTree {
    /// Leaf first; otherwise by number of root children, then children
    /// left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PlanarTree::Leaf, PlanarTree::Leaf) => Ordering::Equal,
            (PlanarTree::Leaf, PlanarTree::Node(_)) => Ordering::Less,
            (PlanarTree::Node(_), PlanarTree::Leaf) => Ordering::Greater,
            (PlanarTree::Node(a), PlanarTree::Node(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PlanarTree {
    /// The corolla with `leaves` leaves (a single vertex).
    pub fn corolla(leaves: usize) -> Self {
        assert!(leaves >= 2, "a corolla needs at least two leaves");
        PlanarTree::Node(vec![PlanarTree::Leaf; leaves])
    }

    /// Grafts `children` onto a new root vertex.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::Validation(format!("grafting needs at least 2 trees, got {}", children.len())));
        }
        Ok(PlanarTree::Node(children))
    }

    /// The unique decomposition `ψ = ψ_0 ∨ ⋯ ∨ ψ_k`; empty for the leaf.
    pub fn decompose(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(ch) => ch,
        }
    }

    pub fn degree(&self) -> usize {
        self.leaves() - 1
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(ch) => ch.iter().map(PlanarTree::leaves).sum(),
        }
    }

    pub fn internal_vertices(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(c) => 1 + c.iter().map(PlanarTree::internal_vertices).sum::<usize>(),
        }
    }

    /// Binary trees that contract to this one.
    pub fn binary_refinements(&self) -> Vec<PlanarTree> {
        match self {
            PlanarTree::Leaf => vec![PlanarTree::Leaf],
            PlanarTree::Node(children) => {
                let mut choices: Vec<Vec<PlanarTree>> = vec![Vec::new()];
                for c in children {
                    let refs = c.binary_refinements();
                    choices = choices
                        .into_iter()
                        .flat_map(|prefix| {
                            refs.iter().map(move |r| {
                                let mut v = prefix.clone();
                                v.push(r.clone());
                                v
                            })
                        })
                        .collect();
                }
                let shapes = binary_shapes(0, children.len());
                choices.iter().flat_map(|parts| shapes.iter().map(move |s| s.fill(parts))).collect()
            }
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    fn check_leaf(&self, i: usize) -> Result<()> {
        let max = self.degree();
        if i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(())
    }

    /// Finds the child holding leaf `i`: `(child position, leaf index inside it)`.
    fn locate(children: &[PlanarTree], mut i: usize) -> (usize, usize) {
        for (pos, ch) in children.iter().enumerate() {
            let n = ch.leaves();
            if i < n {
                return (pos, i);
            }
            i -= n;
        }
        unreachable!("leaf index checked by caller")
    }

    /// Face map `d_i`: delete leaf `i`. A vertex left with one child is
    /// contracted, its remaining subtree taking its place.
    pub fn face(&self, i: usize) -> Result<PlanarTree> {
        if self.degree() == 0 {
            return Err(Error::IndexOutOfRange { index: i, max: 0 });
        }
        self.check_leaf(i)?;
        Ok(self.face_unchecked(i))
    }

    fn face_unchecked(&self, i: usize) -> PlanarTree {
        let PlanarTree::Node(children) = self else { unreachable!() };
        let (pos, inner) = Self::locate(children, i);
        let mut out = children.clone();
        if children[pos].is_leaf() {
            out.remove(pos);
            if out.len() == 1 {
                return out.pop().unwrap();
            }
        } else {
            out[pos] = children[pos].face_unchecked(inner);
        }
        PlanarTree::Node(out)
    }

    /// Degeneracy map `s_i`: add a leaf immediately left of leaf `i`, at the
    /// vertex leaf `i` hangs from.
    pub fn degeneracy(&self, i: usize) -> Result<PlanarTree> {
        self.check_leaf(i)?;
        Ok(match self {
            PlanarTree::Leaf => PlanarTree::corolla(2),
            PlanarTree::Node(_) => self.degeneracy_unchecked(i),
        })
    }

    fn degeneracy_unchecked(&self, i: usize) -> PlanarTree {
        let PlanarTree::Node(children) = self else { unreachable!() };
        let (pos, inner) = Self::locate(children, i);
        let mut out = children.clone();
        if children[pos].is_leaf() {
            out.insert(pos, PlanarTree::Leaf);
        } else {
            out[pos] = children[pos].degeneracy_unchecked(inner);
        }
        PlanarTree::Node(out)
    }

    /// Position of leaf `i` among the children of its vertex.
    pub fn leaf_orientation(&self, i: usize) -> Result<LeafOrientation> {
        self.check_leaf(i)?;
        let PlanarTree::Node(children) = self else {
            return Err(Error::Validation("the trivial tree has no vertex".into()));
        };
        let (pos, inner) = Self::locate(children, i);
        if children[pos].is_leaf() {
            Ok(if pos == 0 {
                LeafOrientation::Left
            } else if pos + 1 == children.len() {
                LeafOrientation::Right
            } else {
                LeafOrientation::Middle
            })
        } else {
            children[pos].leaf_orientation(inner)
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => write!(f, "*"),
            PlanarTree::Node(ch) => {
                write!(f, "(")?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (tree, used) = parse_tree(&tokens, 0)?;
        if used != tokens.len() {
            return Err(Error::Parse { line: 0, message: format!("trailing input in tree `{s}`") });
        }
        Ok(tree)
    }
}

fn parse_tree(tokens: &[char], at: usize) -> Result<(PlanarTree, usize)> {
    let bad = |m: &str| Error::Parse { line: 0, message: m.to_string() };
    match tokens.get(at) {
        Some('*') => Ok((PlanarTree::Leaf, at + 1)),
        Some('(') => {
            let mut children = Vec::new();
            let mut pos = at + 1;
            loop {
                match tokens.get(pos) {
                    Some(')') => break,
                    Some(_) => {
                        let (child, next) = parse_tree(tokens, pos)?;
                        children.push(child);
                        pos = next;
                    }
                    None => return Err(bad("unbalanced parenthesis")),
                }
            }
            if children.len() < 2 {
                return Err(bad("every vertex needs at least two children"));
            }
            Ok((PlanarTree::Node(children), pos + 1))
        }
        _ => Err(bad("expected `*` or `(`")),
    }
}

/// All trees of degree `n` in canonical order.
pub fn enumerate(n: usize) -> Vec<PlanarTree> {
    let mut cache: Vec<Vec<PlanarTree>> = Vec::new();
    for m in 0..=n {
        let next = enumerate_next(&cache, m);
        cache.push(next);
    }
    cache.pop().unwrap()
}

fn enumerate_next(smaller: &[Vec<PlanarTree>], n: usize) -> Vec<PlanarTree> {
    if n == 0 {
        return vec![PlanarTree::Leaf];
    }
    // Children sizes (leaf counts) form a composition of n + 1 into >= 2 parts.
    let mut out = Vec::new();
    let mut parts = Vec::new();
    compositions(n + 1, &mut parts, &mut |parts| {
        if parts.len() < 2 {
            return;
        }
        let mut acc: Vec<Vec<PlanarTree>> = vec![Vec::new()];
        for &p in parts {
            let options = &smaller[p - 1];
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |t| {
                        let mut v = prefix.clone();
                        v.push(t.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(PlanarTree::Node));
    });
    canonical_sort(&mut out, n);
    out
}

/// Trees with more internal vertices come first. Binary trees keep the
/// structural order; other trees are compared by the sorted positions of
/// their binary refinements (the vertices of the matching associahedron
/// face), which reproduces the familiar listings of `T_2` and `T_3`.
fn canonical_sort(trees: &mut Vec<PlanarTree>, n: usize) {
    let mut binary: Vec<PlanarTree> = trees.iter().filter(|t| t.internal_vertices() == n).cloned().collect();
    binary.sort();
    let pos: HashMap<&PlanarTree, usize> = binary.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut keyed: Vec<(usize, Vec<usize>, PlanarTree)> = trees
        .drain(..)
        .map(|t| {
            let mut refs: Vec<usize> = t.binary_refinements().iter().map(|b| pos[b]).collect();
            refs.sort_unstable();
            (n - t.internal_vertices(), refs, t)
        })
        .collect();
    keyed.sort();
    trees.extend(keyed.into_iter().map(|(_, _, t)| t));
}

/// All binary trees with `k` leaves whose leaves are labelled `0..k` in order.
fn binary_shapes(lo: usize, hi: usize) -> Vec<Shape> {
    if hi - lo == 1 {
        return vec![Shape::Slot(lo)];
    }
    let mut out = Vec::new();
    for mid in lo + 1..hi {
        for l in binary_shapes(lo, mid) {
            for r in binary_shapes(mid, hi) {
                out.push(Shape::Pair(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

#[derive(Clone)]
enum Shape {
    Slot(usize),
    Pair(Box<Shape>, Box<Shape>),
}

impl Shape {
    fn fill(&self, parts: &[PlanarTree]) -> PlanarTree {
        match self {
            Shape::Slot(i) => parts[*i].clone(),
            Shape::Pair(l, r) => PlanarTree::Node(vec![l.fill(parts), r.fill(parts)]),
        }
    }
}

fn compositions(total: usize, parts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if total == 0 {
        visit(parts);
        return;
    }
    for first in 1..=total {
        parts.push(first);
        compositions(total - first, parts, visit);
        parts.pop();
    }
}

/// `T_0, …, T_max` with index lookup, built once per computation.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    levels: Vec<Vec<PlanarTree>>,
    index: Vec<HashMap<PlanarTree, usize>>,
}

impl TreeCatalog {
    pub fn up_to(max_degree: usize) -> Self {
        let mut levels: Vec<Vec<PlanarTree>> = Vec::new();
        for m in 0..=max_degree {
            let next = enumerate_next(&levels, m);
            levels.push(next);
        }
        let index = levels
            .iter()
            .map(|lv| lv.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect())
            .collect();
        Self { levels, index }
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn trees(&self, n: usize) -> &[PlanarTree] {
        &self.levels[n]
    }

    pub fn count(&self, n: usize) -> usize {
        self.levels[n].len()
    }

    /// `(degree, position)` of a tree in canonical order.
    pub fn index_of(&self, t: &PlanarTree) -> Option<(usize, usize)> {
        let n = t.degree();
        self.index.get(n)?.get(t).map(|&i| (n, i))
    }
}

/// `(degree, position in canonical order)`.
pub fn index_of(t: &PlanarTree) -> (usize, usize) {
    let n = t.degree();
    let pos = enumerate(n).iter().position(|s| s == t).expect("every tree appears in its level");
    (n, pos)
}
