use super::{alternating_sum, digits, records_from, space_dim, word_index, DegreeRecord, TreeFaces};
use crate::algebra::{Corepresentation, Gen, TriasAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{homology_dim as linalg_homology_dim, ExactMatrix, Field};
use crate::trees::TreeCatalog;

fn check_corep<K: Field>(alg: &TriasAlgebra<K>, corep: &Corepresentation<K>) -> Result<()> {
    if corep.alg_dim() != alg.dim() {
        return Err(Error::DimensionMismatch(format!("corepresentation built for dimension {}, algebra has {}", corep.alg_dim(), alg.dim())));
    }
    Ok(())
}

/// The `n + 1` face matrices `d_i: C_n → C_{n−1}` for `n ≥ 1`.
pub fn chain_faces<K: Field>(
    alg: &TriasAlgebra<K>,
    corep: &Corepresentation<K>,
    n: usize,
    limits: &Limits,
) -> Result<Vec<ExactMatrix<K>>> {
    check_corep(alg, corep)?;
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let catalog = TreeCatalog::up_to(n);
    let (d, m) = (alg.dim(), corep.dim());
    let src = space_dim(&catalog, n, d, m);
    let dst = space_dim(&catalog, n - 1, d, m);
    limits.check_size("chain space", src)?;
    let f = alg.field();
    let tf = TreeFaces::new(&catalog, n);
    let dn1 = d.pow(n as u32 - 1);
    let idx = |t: usize, w: usize, y: usize| (t * dn1 + w) * m + y;
    let words = d.pow(n as u32);

    let mut faces = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // Rows of the transpose: one per source basis element.
        let mut images: Vec<Vec<(usize, K::Elem)>> = Vec::with_capacity(src);
        for t in 0..catalog.count(n) {
            let op = tf.circ[t][i];
            let target = tf.faces[t][i];
            for w in 0..words {
                let a = digits(w, d, n);
                for x in 0..m {
                    let mut img = Vec::new();
                    if i == 0 || i == n {
                        let (g, letter, rest) = if i == 0 {
                            (Gen::alpha(op), a[0], word_index(&a[1..], d))
                        } else {
                            (Gen::beta(op), a[n - 1], word_index(&a[..n - 1], d))
                        };
                        for (y, c) in corep.act_basis(g, x, letter).iter().enumerate() {
                            if !f.is_zero(c) {
                                img.push((idx(target, rest, y), c.clone()));
                            }
                        }
                    } else {
                        let mut merged = Vec::with_capacity(n - 1);
                        merged.extend_from_slice(&a[..i - 1]);
                        merged.push(0);
                        merged.extend_from_slice(&a[i + 1..]);
                        for (c, coef) in alg.mul_basis(op, a[i - 1], a[i]).iter().enumerate() {
                            if !f.is_zero(coef) {
                                merged[i - 1] = c;
                                img.push((idx(target, word_index(&merged, d), x), coef.clone()));
                            }
                        }
                    }
                    images.push(img);
                }
            }
        }
        faces.push(ExactMatrix::from_row_entries(f.clone(), src, dst, images).transpose());
    }
    Ok(faces)
}

/// `d = Σ (−1)^i d_i: C_n → C_{n−1}`; the zero map out of `C_0`.
pub fn chain_differential_matrix<K: Field>(
    alg: &TriasAlgebra<K>,
    corep: &Corepresentation<K>,
    n: usize,
    limits: &Limits,
) -> Result<ExactMatrix<K>> {
    if n == 0 {
        check_corep(alg, corep)?;
        return Ok(ExactMatrix::zeros(alg.field().clone(), 0, corep.dim()));
    }
    alternating_sum(&chain_faces(alg, corep, n, limits)?)
}

pub fn homology_dim<K: Field>(alg: &TriasAlgebra<K>, corep: &Corepresentation<K>, n: usize, limits: &Limits) -> Result<usize> {
    limits.check_degree(n)?;
    let out = chain_differential_matrix(alg, corep, n, limits)?;
    let inc = chain_differential_matrix(alg, corep, n + 1, limits)?;
    linalg_homology_dim(&out, &inc)
}

/// Records for degrees `0..=n_top`; `rank_out` is the rank of `d` leaving the degree.
pub fn homology_records<K: Field>(
    alg: &TriasAlgebra<K>,
    corep: &Corepresentation<K>,
    n_top: usize,
    limits: &Limits,
) -> Result<Vec<DegreeRecord>> {
    limits.check_degree(n_top)?;
    let catalog = TreeCatalog::up_to(n_top);
    let dims: Vec<usize> = (0..=n_top).map(|n| space_dim(&catalog, n, alg.dim(), corep.dim())).collect();
    let diffs: Vec<ExactMatrix<K>> = (0..=n_top + 1).map(|n| chain_differential_matrix(alg, corep, n, limits)).collect::<Result<_>>()?;
    records_from(&dims, &diffs[..=n_top], &diffs[1..])
}
