//! Cochains as `UA`-linear maps out of the cotangent complex `C_*(A, UA)`.
//!
//! A cochain `f` corresponds to `f̄(ψ ⊗ x ⊗ a) = x·f(ψ; a)`, where `x ∈ UA`
//! acts on `M` through the generator dictionary. Pulling `f̄` back along a
//! chain face `d_i` of `C_{n+1}(A, UA)` and restricting to `x = 1` must give
//! the coface `δ^n_i f`.

use super::{chain_faces, coboundary_faces, space_dim};
use crate::algebra::{Representation, TriasAlgebra};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{ExactMatrix, Field};
use crate::trees::TreeCatalog;
use crate::uea::Uea;

/// The enveloping algebra of `A` and the faces `d_i: C_{n+1}(A, UA) → C_n(A, UA)`.
pub fn cotangent_pairing_faces<K: Field>(alg: &TriasAlgebra<K>, n: usize, limits: &Limits) -> Result<(Uea<K>, Vec<ExactMatrix<K>>)> {
    limits.check_degree(n)?;
    let ua = Uea::new(alg)?;
    let corep = ua.as_corepresentation()?;
    let faces = chain_faces(alg, &corep, n + 1, limits)?;
    Ok((ua, faces))
}

/// The map `C^n(A, M) → C^{n+1}(A, M)` induced by one chain face.
pub fn pairing_from_chain_face<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    ua: &Uea<K>,
    n: usize,
    chain_face: &ExactMatrix<K>,
) -> Result<ExactMatrix<K>> {
    let catalog = TreeCatalog::up_to(n + 1);
    let (d, m, q) = (alg.dim(), rep.dim(), ua.dim());
    if chain_face.cols() != space_dim(&catalog, n + 1, d, q) || chain_face.rows() != space_dim(&catalog, n, d, q) {
        return Err(Error::DimensionMismatch("chain face does not match the cotangent complex".into()));
    }
    let f = alg.field();
    let operators: Vec<ExactMatrix<K>> = (0..q).map(|u| ua.monomial_operator(u, rep)).collect();
    let one = ua.unit_position();
    let columns = chain_face.transpose();
    let words_hi = d.pow(n as u32 + 1);
    let rows = space_dim(&catalog, n + 1, d, m);
    let cols = space_dim(&catalog, n, d, m);
    let mut entries = Vec::with_capacity(rows);
    for t in 0..catalog.count(n + 1) {
        for w in 0..words_hi {
            let image = columns.row((t * words_hi + w) * q + one);
            for k in 0..m {
                let mut row = Vec::new();
                for (target, c) in image {
                    let (base, u) = (target / q, target % q);
                    for (x, v) in operators[u].row(k) {
                        row.push((base * m + x, f.mul(c, v)));
                    }
                }
                entries.push(row);
            }
        }
    }
    Ok(ExactMatrix::from_row_entries(f.clone(), rows, cols, entries))
}

/// Compares every coface with the pullback of the matching chain face.
pub fn cotangent_pairing_check_with<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    ua: &Uea<K>,
    chain_faces: &[ExactMatrix<K>],
    n: usize,
    limits: &Limits,
) -> Result<bool> {
    let cofaces = coboundary_faces(alg, rep, n, limits)?;
    if cofaces.len() != chain_faces.len() {
        return Err(Error::DimensionMismatch("face counts differ".into()));
    }
    for (coface, face) in cofaces.iter().zip(chain_faces) {
        if pairing_from_chain_face(alg, rep, ua, n, face)? != *coface {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cotangent_pairing_check<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>, n: usize, limits: &Limits) -> Result<bool> {
    let (ua, faces) = cotangent_pairing_faces(alg, n, limits)?;
    cotangent_pairing_check_with(alg, rep, &ua, &faces, n, limits)
}
