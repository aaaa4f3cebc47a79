//! Free triassociative algebras truncated at a maximal degree.
//!
//! The degree-`n` slice is built from the lower ones: formal products
//! `F_p op F_q` with `p + q = n`, modulo every axiom instance whose outermost
//! product lands in degree `n`. Inner products are already reduced in the
//! lower slices, so this is the quotient of all 3-operation monomials by the
//! relation span, computed one degree at a time.

use super::tensor::Tensor3;
use super::trias::{Op, TriasAlgebra, AXIOMS};
use crate::error::{Error, Result};
use crate::linalg::{densify, Echelon, Field, SparseVec};

#[derive(Clone, Debug)]
struct Slice<K: Field> {
    dim: usize,
    /// `(p, op, offset)` for each block `F_p op F_{n-p}` of the formal space.
    blocks: Vec<(usize, Op, usize)>,
    relations: Echelon<K>,
    /// Basis index for each free column of the formal space.
    basis_of_col: Vec<Option<usize>>,
}

#[derive(Clone, Debug)]
pub struct GradedFreeAlgebra<K: Field> {
    field: K,
    generators: usize,
    max_degree: usize,
    slices: Vec<Slice<K>>,
}

impl<K: Field> GradedFreeAlgebra<K> {
    /// Builds slices `1..=max_degree`. `budget` bounds the number of formal
    /// products in any one slice.
    pub fn new(field: K, generators: usize, max_degree: usize, budget: usize) -> Result<Self> {
        if generators == 0 || max_degree == 0 {
            return Err(Error::Validation("free algebra needs at least one generator and degree".into()));
        }
        let mut alg = Self { field: field.clone(), generators, max_degree, slices: Vec::new() };
        alg.slices.push(Slice { dim: 0, blocks: Vec::new(), relations: Echelon::new(field.clone(), 0), basis_of_col: Vec::new() });
        alg.slices.push(Slice {
            dim: generators,
            blocks: Vec::new(),
            relations: Echelon::new(field, 0),
            basis_of_col: Vec::new(),
        });
        for n in 2..=max_degree {
            let slice = alg.build_slice(n, budget)?;
            alg.slices.push(slice);
        }
        Ok(alg)
    }

    fn build_slice(&self, n: usize, budget: usize) -> Result<Slice<K>> {
        let f = &self.field;
        let mut blocks = Vec::new();
        let mut width = 0usize;
        for p in 1..n {
            for op in Op::ALL {
                blocks.push((p, op, width));
                width += self.slices[p].dim * self.slices[n - p].dim;
            }
        }
        if width > budget {
            return Err(Error::ResourceLimit(format!("degree {n} has {width} formal products, budget is {budget}")));
        }
        let offset = |p: usize, op: Op| blocks.iter().find(|b| b.0 == p && b.1 == op).unwrap().2;
        let mut relations = Echelon::new(f.clone(), width);
        for axiom in &AXIOMS {
            for p in 1..n {
                for q in 1..n - p {
                    let r = n - p - q;
                    let (dp, dq, dr) = (self.slices[p].dim, self.slices[q].dim, self.slices[r].dim);
                    let left_off = offset(p + q, axiom.outer_left);
                    let right_off = offset(p, axiom.outer_right);
                    let dqr = self.slices[q + r].dim;
                    for i in 0..dp {
                        for j in 0..dq {
                            let inner_l = self.product_basis(axiom.inner_left, (p, i), (q, j));
                            for k in 0..dr {
                                let inner_r = self.product_basis(axiom.inner_right, (q, j), (r, k));
                                let mut row: Vec<(usize, K::Elem)> = Vec::new();
                                for (c, v) in &inner_l {
                                    row.push((left_off + c * dr + k, v.clone()));
                                }
                                for (c, v) in &inner_r {
                                    row.push((right_off + i * dqr + c, f.neg(v)));
                                }
                                row.sort_by_key(|e| e.0);
                                let row = merge_sorted(f, row);
                                relations.insert(&row);
                            }
                        }
                    }
                }
            }
        }
        relations.make_reduced();
        let mut basis_of_col = vec![None; width];
        let mut dim = 0;
        for c in relations.free_columns() {
            basis_of_col[c] = Some(dim);
            dim += 1;
        }
        Ok(Slice { dim, blocks, relations, basis_of_col })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Dimension of the degree-`n` slice (0 above the truncation).
    pub fn slice_dim(&self, n: usize) -> usize {
        self.slices.get(n).map_or(0, |s| s.dim)
    }

    pub fn slice_dims(&self) -> Vec<usize> {
        (1..=self.max_degree).map(|n| self.slice_dim(n)).collect()
    }

    /// Product of two basis elements `(degree, index)` as a sparse vector in
    /// the slice of the summed degree; empty above the truncation.
    pub fn product_basis(&self, op: Op, (p, i): (usize, usize), (q, j): (usize, usize)) -> SparseVec<K::Elem> {
        let n = p + q;
        if n > self.max_degree {
            return Vec::new();
        }
        let slice = &self.slices[n];
        let off = slice.blocks.iter().find(|b| b.0 == p && b.1 == op).expect("block exists").2;
        let col = off + i * self.slices[q].dim + j;
        let reduced = slice.relations.reduce(&[(col, self.field.one())]);
        reduced
            .into_iter()
            .map(|(c, v)| (slice.basis_of_col[c].expect("reduced vectors live on free columns"), v))
            .collect()
    }

    /// Degree of each basis element of [`Self::to_algebra`].
    pub fn weights(&self) -> Vec<usize> {
        (1..=self.max_degree).flat_map(|n| std::iter::repeat_n(n, self.slice_dim(n))).collect()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree + 2];
        for n in 1..=self.max_degree {
            out[n + 1] = out[n] + self.slice_dim(n);
        }
        out
    }

    /// The finite-dimensional algebra `F / F_{> max_degree}`.
    pub fn to_algebra(&self) -> Result<TriasAlgebra<K>> {
        let off = self.offsets();
        let total = off[self.max_degree + 1];
        let f = &self.field;
        let mut products = Op::ALL.map(|_| Tensor3::zeros(f, [total, total, total]));
        for (t, op) in products.iter_mut().zip(Op::ALL) {
            for p in 1..=self.max_degree {
                for q in 1..=self.max_degree - p {
                    for i in 0..self.slice_dim(p) {
                        for j in 0..self.slice_dim(q) {
                            for (c, v) in self.product_basis(op, (p, i), (q, j)) {
                                t.set(off[p] + i, off[q] + j, off[p + q] + c, v);
                            }
                        }
                    }
                }
            }
        }
        TriasAlgebra::new(f.clone(), total, products)
    }

    /// Dense coordinates of a basis product, for display.
    pub fn product_dense(&self, op: Op, a: (usize, usize), b: (usize, usize)) -> Vec<K::Elem> {
        let v = self.product_basis(op, a, b);
        densify(&self.field, &v, self.slice_dim(a.0 + b.0))
    }
}

fn merge_sorted<K: Field>(f: &K, row: Vec<(usize, K::Elem)>) -> SparseVec<K::Elem> {
    let mut out: SparseVec<K::Elem> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => f.add_assign(lv, &v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !f.is_zero(v));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    #[test]
    fn one_generator_slices() {
        let fa = GradedFreeAlgebra::new(Rationals, 1, 4, 1 << 20).unwrap();
        assert_eq!(fa.slice_dims(), vec![1, 3, 7, 15]);
    }

    #[test]
    fn truncation_is_triassociative() {
        let fa = GradedFreeAlgebra::new(Rationals, 1, 4, 1 << 20).unwrap();
        let a = fa.to_algebra().unwrap();
        assert_eq!(a.dim(), 26);
        assert!(a.check_axioms().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(GradedFreeAlgebra::new(Rationals, 2, 4, 10), Err(Error::ResourceLimit(_))));
    }
}
