use std::collections::HashMap;

use super::{circ_product, TreeFaces};
use crate::algebra::{GradedFreeAlgebra, TriasAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{rank, ExactMatrix, Field};
use crate::trees::TreeCatalog;

/// Words of length `n` whose letter weights sum to `w`, in lexicographic order.
fn weighted_words(weights: &[usize], n: usize, w: usize) -> Vec<Vec<usize>> {
    fn go(weights: &[usize], left: usize, w: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if w == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for (b, &wt) in weights.iter().enumerate() {
            // Every remaining letter has weight at least one.
            if wt + (left - 1) <= w {
                cur.push(b);
                go(weights, left - 1, w - wt, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(weights, n, w, &mut Vec::new(), &mut out);
    out
}

struct WeightSpace {
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    trees: usize,
}

impl WeightSpace {
    fn new(catalog: &TreeCatalog, weights: &[usize], n: usize, w: usize) -> Self {
        let words = weighted_words(weights, n, w);
        let index = words.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let trees = if n == 0 && w != 0 { 0 } else { catalog.count(n) };
        Self { words, index, trees }
    }

    fn dim(&self) -> usize {
        self.trees * self.words.len()
    }
}

/// Trivial-coefficient differential restricted to weight `w`: only the
/// interior faces survive.
fn weighted_differential<K: Field>(
    alg: &TriasAlgebra<K>,
    catalog: &TreeCatalog,
    weights: &[usize],
    n: usize,
    w: usize,
) -> ExactMatrix<K> {
    let f = alg.field();
    let target = WeightSpace::new(catalog, weights, n - 1, w);
    let source = WeightSpace::new(catalog, weights, n, w);
    if n < 2 {
        return ExactMatrix::zeros(f.clone(), target.dim(), source.dim());
    }
    let tf = TreeFaces::new(catalog, n);
    let nw = target.words.len();
    let mut images = Vec::with_capacity(source.dim());
    for t in 0..source.trees {
        for word in &source.words {
            let mut img = Vec::new();
            for i in 1..n {
                let sign = if i % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let op = tf.circ[t][i];
                debug_assert_eq!(op, circ_product(&catalog.trees(n)[t], i).unwrap());
                let face = tf.faces[t][i];
                let mut merged = Vec::with_capacity(n - 1);
                merged.extend_from_slice(&word[..i - 1]);
                merged.push(0);
                merged.extend_from_slice(&word[i + 1..]);
                for (c, coef) in alg.mul_basis(op, word[i - 1], word[i]).iter().enumerate() {
                    if !f.is_zero(coef) {
                        merged[i - 1] = c;
                        let pos = target.index[&merged];
                        img.push((face * nw + pos, f.mul(&sign, coef)));
                    }
                }
            }
            images.push(img);
        }
    }
    ExactMatrix::from_row_entries(f.clone(), source.dim(), target.dim(), images).transpose()
}

/// Dimension of the weight-`w` part of `H_n(F, K)`.
pub fn graded_homology_slice<K: Field>(free: &GradedFreeAlgebra<K>, n: usize, w: usize, limits: &Limits) -> Result<usize> {
    limits.check_degree(n)?;
    if w > free.max_degree() {
        return Err(Error::Validation(format!("weight {w} exceeds the truncation degree {}", free.max_degree())));
    }
    let alg = free.to_algebra()?;
    let weights = free.weights();
    let catalog = TreeCatalog::up_to(n + 1);
    let here = WeightSpace::new(&catalog, &weights, n, w);
    let above = WeightSpace::new(&catalog, &weights, n + 1, w);
    limits.check_size("weighted chain space", above.dim())?;
    let dim = if n == 0 { usize::from(w == 0) } else { here.dim() };
    let out_rank = if n == 0 { 0 } else { rank(&weighted_differential(&alg, &catalog, &weights, n, w)) };
    let in_map = weighted_differential(&alg, &catalog, &weights, n + 1, w);
    let in_rank = if n == 0 { 0 } else { rank(&in_map) };
    Ok(dim - out_rank - in_rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_word_counts() {
        let weights = [1, 2, 2, 2];
        assert_eq!(weighted_words(&weights, 2, 3).len(), 6);
        assert_eq!(weighted_words(&weights, 1, 2).len(), 3);
        assert_eq!(weighted_words(&weights, 0, 0).len(), 1);
    }
}
