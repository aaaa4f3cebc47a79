//! Independent oracles shared by the integration tests. Each builds its
//! linear system straight from the defining equations, without going
//! through the complexes.

#![allow(dead_code)]

use std::collections::HashMap;

use triassoc::algebra::{Corepresentation, Gen, Op, Representation, TriasAlgebra, AXIOMS};
use triassoc::linalg::{rank, ExactMatrix, Field, SparseVec};

fn matrix<K: Field>(field: &K, cols: usize, rows: Vec<Vec<(usize, K::Elem)>>) -> ExactMatrix<K> {
    let rows: Vec<Vec<(usize, K::Elem)>> = rows.into_iter().map(|r| merge(field, r)).collect();
    ExactMatrix::from_row_entries(field.clone(), rows.len(), cols, rows)
}

/// Sums duplicate columns and drops zeros.
fn merge<K: Field>(field: &K, row: Vec<(usize, K::Elem)>) -> Vec<(usize, K::Elem)> {
    let mut acc: HashMap<usize, K::Elem> = HashMap::new();
    for (c, v) in row {
        let e = acc.entry(c).or_insert_with(|| field.zero());
        *e = field.add(e, &v);
    }
    let mut out: Vec<_> = acc.into_iter().filter(|(_, v)| !field.is_zero(v)).collect();
    out.sort_by_key(|(c, _)| *c);
    out
}

/// `dim {m : a ⊣ m = m ⊢ a for all a}`.
pub fn invariants_dim<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> usize {
    let f = alg.field();
    let (d, m) = (alg.dim(), rep.dim());
    let mut rows = Vec::new();
    for a in 0..d {
        for k in 0..m {
            let mut row = Vec::new();
            for x in 0..m {
                row.push((x, rep.left(Op::Left).get(a, x, k).clone()));
                row.push((x, f.neg(rep.right(Op::Right).get(x, a, k))));
            }
            rows.push(row);
        }
    }
    m - rank(&matrix(f, m, rows))
}

/// Dimension of the space of linear `f: A → M` with
/// `f(a * b) = a * f(b) + f(a) * b` for all three products.
pub fn derivations_dim<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> usize {
    let f = alg.field();
    let (d, m) = (alg.dim(), rep.dim());
    // Unknown f(e_a)_k sits in column a·m + k.
    let mut rows = Vec::new();
    for op in Op::ALL {
        for a in 0..d {
            for b in 0..d {
                for k in 0..m {
                    let mut row = Vec::new();
                    for c in 0..d {
                        row.push((c * m + k, alg.product(op).get(a, b, c).clone()));
                    }
                    for x in 0..m {
                        row.push((b * m + x, f.neg(rep.left(op).get(a, x, k))));
                        row.push((a * m + x, f.neg(rep.right(op).get(x, b, k))));
                    }
                    rows.push(row);
                }
            }
        }
    }
    d * m - rank(&matrix(f, d * m, rows))
}

/// Dimension of the span of `a ↦ a ⊣ x − x ⊢ a` over `x ∈ M`.
pub fn inner_derivations_dim<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> usize {
    let f = alg.field();
    let (d, m) = (alg.dim(), rep.dim());
    let mut rows = Vec::new();
    for x in 0..m {
        let mut row = Vec::new();
        for a in 0..d {
            for k in 0..m {
                row.push((a * m + k, f.sub(rep.left(Op::Left).get(a, x, k), rep.right(Op::Right).get(x, a, k))));
            }
        }
        rows.push(row);
    }
    rank(&matrix(f, d * m, rows))
}

/// `dim N / span{x·α_l(a) − x·β_r(a)}`.
pub fn coinvariants_dim<K: Field>(alg: &TriasAlgebra<K>, corep: &Corepresentation<K>) -> usize {
    let f = alg.field();
    let (d, m) = (alg.dim(), corep.dim());
    let mut rows = Vec::new();
    for x in 0..m {
        for a in 0..d {
            let mut row = Vec::new();
            for k in 0..m {
                row.push((k, corep.action(Gen::AlphaL).get(x, a, k).clone()));
                row.push((k, f.neg(corep.action(Gen::BetaR).get(x, a, k))));
            }
            rows.push(row);
        }
    }
    m - rank(&matrix(f, m, rows))
}

/// `dim A / (A ⊣ A + A ⊢ A + A ⊥ A)`.
pub fn abelianization_dim<K: Field>(alg: &TriasAlgebra<K>) -> usize {
    let d = alg.dim();
    let mut rows = Vec::new();
    for op in Op::ALL {
        for a in 0..d {
            for b in 0..d {
                rows.push(alg.mul_basis(op, a, b).iter().cloned().enumerate().collect());
            }
        }
    }
    d - rank(&matrix(alg.field(), d, rows))
}

/// Monomials in `g` generators built from the three products.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Gen(usize),
    Prod(Op, Box<Monomial>, Box<Monomial>),
}

fn prod(op: Op, a: &Monomial, b: &Monomial) -> Monomial {
    Monomial::Prod(op, Box::new(a.clone()), Box::new(b.clone()))
}

/// Dimensions of the weight 1..=max slices of the free triassociative
/// algebra on `g` generators: all monomials modulo the two-sided ideal
/// generated by the axioms, computed weight by weight.
pub fn free_algebra_dims<K: Field>(field: &K, g: usize, max: usize) -> Vec<usize> {
    let mut monos: Vec<Vec<Monomial>> = vec![Vec::new(), (0..g).map(Monomial::Gen).collect()];
    for w in 2..=max {
        let mut level = Vec::new();
        for wl in 1..w {
            for l in &monos[wl] {
                for r in &monos[w - wl] {
                    for op in Op::ALL {
                        level.push(prod(op, l, r));
                    }
                }
            }
        }
        monos.push(level);
    }
    let index: Vec<HashMap<Monomial, usize>> = monos.iter().map(|lv| lv.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let one = field.one();
    let minus = field.neg(&one);
    // Relation bases per weight, as monomial-coordinate vectors.
    let mut relations: Vec<Vec<SparseVec<K::Elem>>> = vec![Vec::new(); max + 1];
    let mut dims = Vec::new();
    for w in 1..=max {
        let mut rows = Vec::new();
        for wx in 1..w {
            for wy in 1..w - wx {
                let wz = w - wx - wy;
                if wz == 0 {
                    continue;
                }
                for x in &monos[wx] {
                    for y in &monos[wy] {
                        for z in &monos[wz] {
                            for ax in &AXIOMS {
                                let lhs = prod(ax.outer_left, &prod(ax.inner_left, x, y), z);
                                let rhs = prod(ax.outer_right, x, &prod(ax.inner_right, y, z));
                                rows.push(vec![(index[w][&lhs], one.clone()), (index[w][&rhs], minus.clone())]);
                            }
                        }
                    }
                }
            }
        }
        for wr in 1..w {
            for r in &relations[wr] {
                for m in &monos[w - wr] {
                    for op in Op::ALL {
                        let left: Vec<_> = r.iter().map(|(i, c)| (index[w][&prod(op, m, &monos[wr][*i])], c.clone())).collect();
                        let right: Vec<_> = r.iter().map(|(i, c)| (index[w][&prod(op, &monos[wr][*i], m)], c.clone())).collect();
                        rows.push(left);
                        rows.push(right);
                    }
                }
            }
        }
        let mat = matrix(field, monos[w].len(), rows);
        let mut echelon = triassoc::linalg::Echelon::new(field.clone(), monos[w].len());
        for r in 0..mat.rows() {
            echelon.insert(mat.row(r));
        }
        relations[w] = echelon.rows().to_vec();
        dims.push(monos[w].len() - echelon.dim());
    }
    dims
}

/// Number of planar trees with `leaves` leaves and no unary vertices,
/// counted by splitting off the leftmost subtree at the root.
pub fn tree_count(leaves: usize) -> u64 {
    // f[n] = trees with n leaves; g[n] = ordered forests of >= 1 trees with n leaves.
    let mut f = vec![0u64; leaves + 1];
    let mut g = vec![0u64; leaves + 1];
    f[1] = 1;
    g[1] = 1;
    for n in 2..=leaves {
        // A tree is a root with a forest of >= 2 trees.
        let mut forests2 = 0;
        for first in 1..n {
            forests2 += f[first] * g[n - first];
        }
        f[n] = forests2;
        g[n] = f[n] + forests2;
    }
    f[leaves]
}
