//! Cochain and chain complexes over the planar-tree basis.
//!
//! Both complexes use the basis ordering (tree, word, coefficient): the
//! coordinate of `(ψ, a_1 … a_n, k)` is `(t·dⁿ + w)·m + k` where `t` is the
//! canonical index of `ψ`, `w` reads the word in base `d` with `a_1` most
//! significant, and `m` is the coefficient dimension.

mod chain;
mod cochain;
mod cotangent;
mod graded;

pub use chain::{chain_differential_matrix, chain_faces, homology_dim, homology_records};
pub use cochain::{coboundary_faces, coboundary_matrix, cohomology_dim, cohomology_records};
pub use cotangent::{cotangent_pairing_check, cotangent_pairing_check_with, cotangent_pairing_faces, pairing_from_chain_face};
pub use graded::graded_homology_slice;

use crate::algebra::Op;
use crate::error::{Error, Result};
use crate::linalg::{rank, ExactMatrix, Field};
use crate::trees::{LeafOrientation, PlanarTree, TreeCatalog};

/// The product `∘_i` attached to position `i` of a tree of degree ≥ 1.
pub fn circ_product(psi: &PlanarTree, i: usize) -> Result<Op> {
    let n = psi.degree();
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let parts = psi.decompose();
    let k = parts.len() - 1;
    if i == 0 {
        return Ok(match (parts[0].is_leaf(), k) {
            (false, _) => Op::Right,
            (true, 1) => Op::Left,
            (true, _) => Op::Middle,
        });
    }
    if i == n {
        return Ok(match (parts[k].is_leaf(), k) {
            (false, _) => Op::Left,
            (true, 1) => Op::Right,
            (true, _) => Op::Middle,
        });
    }
    Ok(match psi.leaf_orientation(i)? {
        LeafOrientation::Left => Op::Left,
        LeafOrientation::Right => Op::Right,
        LeafOrientation::Middle => Op::Middle,
    })
}

/// `|T_n| · dⁿ · m`
pub fn space_dim(catalog: &TreeCatalog, n: usize, d: usize, m: usize) -> usize {
    catalog.count(n) * d.pow(n as u32) * m
}

/// Dimension, outgoing rank and homology dimension in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRecord {
    pub n: usize,
    pub dim: usize,
    /// Rank of the differential leaving this degree.
    pub rank_out: usize,
    pub dim_h: usize,
}

/// Per-tree data reused by every face matrix of one degree.
pub(crate) struct TreeFaces {
    /// `faces[t][i]` is the canonical index of `d_i ψ_t` in the level below.
    pub faces: Vec<Vec<usize>>,
    /// `circ[t][i]` is `∘_i` of `ψ_t`.
    pub circ: Vec<Vec<Op>>,
}

impl TreeFaces {
    pub fn new(catalog: &TreeCatalog, n: usize) -> Self {
        let mut faces = Vec::new();
        let mut circ = Vec::new();
        for psi in catalog.trees(n) {
            faces.push((0..=n).map(|i| catalog.index_of(&psi.face(i).expect("valid face")).expect("catalogued").1).collect());
            circ.push((0..=n).map(|i| circ_product(psi, i).expect("valid position")).collect());
        }
        Self { faces, circ }
    }
}

pub(crate) fn digits(mut w: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = w % d;
        w /= d;
    }
    out
}

pub(crate) fn word_index(a: &[usize], d: usize) -> usize {
    a.iter().fold(0, |acc, &x| acc * d + x)
}

pub(crate) fn alternating_sum<K: Field>(faces: &[ExactMatrix<K>]) -> Result<ExactMatrix<K>> {
    let f = faces[0].field().clone();
    let minus = f.neg(&f.one());
    let mut acc = ExactMatrix::zeros(f.clone(), faces[0].rows(), faces[0].cols());
    for (i, face) in faces.iter().enumerate() {
        let c = if i % 2 == 0 { f.one() } else { minus.clone() };
        acc = acc.combine(face, &c)?;
    }
    Ok(acc)
}

/// Records for a sequence of differentials `maps[k]: C_k → C_{k±1}` where
/// `maps[k]` leaves degree `k` and `incoming[k]` arrives in degree `k`.
pub(crate) fn records_from<K: Field>(
    dims: &[usize],
    outgoing: &[ExactMatrix<K>],
    incoming: &[ExactMatrix<K>],
) -> Result<Vec<DegreeRecord>> {
    let mut out = Vec::new();
    let ranks_out: Vec<usize> = outgoing.iter().map(rank).collect();
    for (n, &dim) in dims.iter().enumerate() {
        let comp = outgoing[n].mul(&incoming[n])?;
        if !comp.is_zero() {
            return Err(Error::CompositionNotZero { nonzero: comp.nnz() });
        }
        let rank_in = rank(&incoming[n]);
        out.push(DegreeRecord { n, dim, rank_out: ranks_out[n], dim_h: dim - ranks_out[n] - rank_in });
    }
    Ok(out)
}
