use super::{alternating_sum, digits, records_from, space_dim, word_index, DegreeRecord, TreeFaces};
use crate::algebra::{Representation, TriasAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{homology_dim as linalg_homology_dim, ExactMatrix, Field};
use crate::trees::TreeCatalog;

fn check_rep<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> Result<()> {
    if rep.alg_dim() != alg.dim() {
        return Err(Error::DimensionMismatch(format!("representation built for dimension {}, algebra has {}", rep.alg_dim(), alg.dim())));
    }
    Ok(())
}

/// The `n + 2` coface matrices `δ^n_i: C^n → C^{n+1}`.
pub fn coboundary_faces<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    n: usize,
    limits: &Limits,
) -> Result<Vec<ExactMatrix<K>>> {
    check_rep(alg, rep)?;
    let catalog = TreeCatalog::up_to(n + 1);
    let (d, m) = (alg.dim(), rep.dim());
    let rows = space_dim(&catalog, n + 1, d, m);
    let cols = space_dim(&catalog, n, d, m);
    limits.check_size("cochain space", rows)?;
    let f = alg.field();
    let tf = TreeFaces::new(&catalog, n + 1);
    let dn = d.pow(n as u32);
    let col = |t: usize, w: usize, k: usize| (t * dn + w) * m + k;
    let words = d.pow(n as u32 + 1);

    let mut faces = Vec::with_capacity(n + 2);
    for i in 0..=n + 1 {
        let mut entries: Vec<Vec<(usize, K::Elem)>> = Vec::with_capacity(rows);
        for t in 0..catalog.count(n + 1) {
            let op = tf.circ[t][i];
            let target = tf.faces[t][i];
            for w in 0..words {
                let a = digits(w, d, n + 1);
                for k in 0..m {
                    let mut row = Vec::new();
                    if i == 0 {
                        let w2 = word_index(&a[1..], d);
                        for x in 0..m {
                            let c = rep.left(op).get(a[0], x, k);
                            if !f.is_zero(c) {
                                row.push((col(target, w2, x), c.clone()));
                            }
                        }
                    } else if i == n + 1 {
                        let w2 = word_index(&a[..n], d);
                        for x in 0..m {
                            let c = rep.right(op).get(x, a[n], k);
                            if !f.is_zero(c) {
                                row.push((col(target, w2, x), c.clone()));
                            }
                        }
                    } else {
                        let mut merged = Vec::with_capacity(n);
                        merged.extend_from_slice(&a[..i - 1]);
                        merged.push(0);
                        merged.extend_from_slice(&a[i + 1..]);
                        for (c, coef) in alg.mul_basis(op, a[i - 1], a[i]).iter().enumerate() {
                            if !f.is_zero(coef) {
                                merged[i - 1] = c;
                                row.push((col(target, word_index(&merged, d), k), coef.clone()));
                            }
                        }
                    }
                    entries.push(row);
                }
            }
        }
        faces.push(ExactMatrix::from_row_entries(f.clone(), rows, cols, entries));
    }
    Ok(faces)
}

/// `δ^n = Σ (−1)^i δ^n_i`.
pub fn coboundary_matrix<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    n: usize,
    limits: &Limits,
) -> Result<ExactMatrix<K>> {
    alternating_sum(&coboundary_faces(alg, rep, n, limits)?)
}

fn incoming<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>, n: usize, limits: &Limits) -> Result<ExactMatrix<K>> {
    if n == 0 {
        Ok(ExactMatrix::zeros(alg.field().clone(), rep.dim(), 0))
    } else {
        coboundary_matrix(alg, rep, n - 1, limits)
    }
}

pub fn cohomology_dim<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>, n: usize, limits: &Limits) -> Result<usize> {
    limits.check_degree(n)?;
    let out = coboundary_matrix(alg, rep, n, limits)?;
    let inc = incoming(alg, rep, n, limits)?;
    linalg_homology_dim(&out, &inc)
}

/// Records for degrees `0..=n_top`.
pub fn cohomology_records<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    n_top: usize,
    limits: &Limits,
) -> Result<Vec<DegreeRecord>> {
    limits.check_degree(n_top)?;
    let catalog = TreeCatalog::up_to(n_top);
    let dims: Vec<usize> = (0..=n_top).map(|n| space_dim(&catalog, n, alg.dim(), rep.dim())).collect();
    let outgoing: Vec<ExactMatrix<K>> = (0..=n_top).map(|n| coboundary_matrix(alg, rep, n, limits)).collect::<Result<_>>()?;
    let mut inc = vec![ExactMatrix::zeros(alg.field().clone(), rep.dim(), 0)];
    inc.extend(outgoing[..n_top].iter().cloned());
    records_from(&dims, &outgoing, &inc)
}
