use std::collections::BTreeMap;

use super::field::Field;
use crate::error::{Error, Result};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a + c * b` for sparse vectors.
pub fn axpy<K: Field>(field: &K, a: &[(usize, K::Elem)], c: &K::Elem, b: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = field.mul(c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Converts a dense vector to sparse form, dropping zeros.
pub fn sparsify<K: Field>(field: &K, dense: &[K::Elem]) -> SparseVec<K::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !field.is_zero(v))
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn densify<K: Field>(field: &K, sparse: &[(usize, K::Elem)], len: usize) -> Vec<K::Elem> {
    let mut out = vec![field.zero(); len];
    for (i, v) in sparse {
        out[*i] = v.clone();
    }
    out
}

/// Accumulator for building sparse rows out of order.
pub(crate) fn collect_sparse<K: Field>(field: &K, acc: BTreeMap<usize, K::Elem>) -> SparseVec<K::Elem> {
    acc.into_iter().filter(|(_, v)| !field.is_zero(v)).collect()
}

/// A matrix over an exact field, stored as sparse rows.
///
/// Dimensions are fixed at construction. Column `j` is the image of the
/// `j`-th domain basis vector, so `m * v` applies the linear map to `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<SparseVec<K::Elem>>,
}

impl<K: Field> ExactMatrix<K> {
    pub fn zeros(field: K, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let one = field.one();
        let data = (0..n).map(|i| vec![(i, one.clone())]).collect();
        Self { field, rows: n, cols: n, data }
    }

    pub fn from_dense(field: K, rows: usize, cols: usize, entries: Vec<Vec<K::Elem>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!("expected {rows}x{cols} entries")));
        }
        let data = entries.iter().map(|r| sparsify(&field, r)).collect();
        Ok(Self { field, rows, cols, data })
    }

    pub fn from_i64(field: K, rows: usize, cols: usize, entries: &[&[i64]]) -> Result<Self> {
        let dense = entries.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_dense(field, rows, cols, dense)
    }

    /// Builds a matrix from sparse rows; entries in each row may come unsorted
    /// and repeated, they are summed.
    pub fn from_row_entries(field: K, rows: usize, cols: usize, row_entries: Vec<Vec<(usize, K::Elem)>>) -> Self {
        let data = row_entries
            .into_iter()
            .map(|entries| {
                let mut acc: BTreeMap<usize, K::Elem> = BTreeMap::new();
                for (c, v) in entries {
                    debug_assert!(c < cols);
                    match acc.get_mut(&c) {
                        Some(slot) => field.add_assign(slot, &v),
                        None => {
                            acc.insert(c, v);
                        }
                    }
                }
                collect_sparse(&field, acc)
            })
            .collect();
        Self { field, rows, cols, data }
    }

    /// Builds a matrix from its columns (images of basis vectors).
    pub fn from_columns(field: K, rows: usize, columns: Vec<SparseVec<K::Elem>>) -> Self {
        let cols = columns.len();
        let mut data: Vec<SparseVec<K::Elem>> = vec![Vec::new(); rows];
        for (c, col) in columns.into_iter().enumerate() {
            for (r, v) in col {
                if !field.is_zero(&v) {
                    data[r].push((c, v));
                }
            }
        }
        Self { field, rows, cols, data }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, K::Elem)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> K::Elem {
        match self.data[r].binary_search_by_key(&c, |(i, _)| *i) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |(i, _)| *i) {
            Ok(pos) => {
                if self.field.is_zero(&v) {
                    row.remove(pos);
                } else {
                    row[pos].1 = v;
                }
            }
            Err(pos) => {
                if !self.field.is_zero(&v) {
                    row.insert(pos, (c, v));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<K::Elem>> {
        self.data.iter().map(|r| densify(&self.field, r, self.cols)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseVec<K::Elem>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Self { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVec<K::Elem> {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            if let Ok(pos) = row.binary_search_by_key(&c, |(i, _)| *i) {
                out.push((r, row[pos].1.clone()));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, K::Elem> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.data[*k] {
                        let prod = f.mul(a, b);
                        match acc.get_mut(c) {
                            Some(slot) => f.add_assign(slot, &prod),
                            None => {
                                acc.insert(*c, prod);
                            }
                        }
                    }
                }
                collect_sparse(f, acc)
            })
            .collect();
        Ok(Self { field: f.clone(), rows: self.rows, cols: other.cols, data })
    }

    pub fn apply(&self, v: &[(usize, K::Elem)]) -> Result<SparseVec<K::Elem>> {
        if let Some((i, _)) = v.last() {
            if *i >= self.cols {
                return Err(Error::DimensionMismatch(format!("vector index {i} >= {}", self.cols)));
            }
        }
        let f = &self.field;
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc = f.zero();
            let (mut i, mut j) = (0, 0);
            while i < row.len() && j < v.len() {
                if row[i].0 < v[j].0 {
                    i += 1;
                } else if v[j].0 < row[i].0 {
                    j += 1;
                } else {
                    f.add_mul_assign(&mut acc, &row[i].1, &v[j].1);
                    i += 1;
                    j += 1;
                }
            }
            if !f.is_zero(&acc) {
                out.push((r, acc));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &self.field.one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &self.field.neg(&self.field.one()))
    }

    /// `self + c * other`
    pub fn combine(&self, other: &Self, c: &K::Elem) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(&self.field, a, c, b))
            .collect();
        Ok(Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = &self.field;
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(i, v)| (*i, f.mul(c, v))).filter(|(_, v)| !f.is_zero(v)).collect())
            .collect();
        Self { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// Row-echelon basis of a subspace of `K^width`.
///
/// Vectors are inserted in order; each stored row is monic with a distinct
/// leading column (the leftmost nonzero entry after reduction), so the result
/// is deterministic for a fixed insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<K: Field> {
    field: K,
    width: usize,
    rows: Vec<SparseVec<K::Elem>>,
    pivot_row: Vec<Option<usize>>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: K, width: usize) -> Self {
        Self { field, width, rows: Vec::new(), pivot_row: vec![None; width] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K::Elem>] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| self.pivot_row[*c].is_none()).collect()
    }

    /// Reduces `v` against every pivot; the result has no entry in a pivot column.
    pub fn reduce(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let f = &self.field;
        let mut cur: SparseVec<K::Elem> = v.to_vec();
        let mut cursor = 0usize;
        loop {
            let next = cur.iter().find(|(c, _)| *c >= cursor && self.pivot_row[*c].is_some()).cloned();
            let Some((col, coef)) = next else { break };
            let row = &self.rows[self.pivot_row[col].unwrap()];
            cur = axpy(f, &cur, &f.neg(&coef), row);
            cursor = col + 1;
        }
        cur
    }

    pub fn contains(&self, v: &[(usize, K::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[(usize, K::Elem)]) -> bool {
        self.insert_reduced(self.reduce(v))
    }

    fn insert_reduced(&mut self, r: SparseVec<K::Elem>) -> bool {
        if r.is_empty() {
            return false;
        }
        let f = &self.field;
        let inv = f.inv(&r[0].1).expect("leading entry is nonzero");
        let row: SparseVec<K::Elem> = r.iter().map(|(c, v)| (*c, f.mul(&inv, v))).collect();
        let lead = row[0].0;
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Brings the basis to reduced row-echelon form (every pivot column is
    /// zero outside its own row).
    pub fn make_reduced(&mut self) {
        let f = self.field.clone();
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i][0].0));
        for &i in &order {
            let lead = self.rows[i][0].0;
            let pivot = self.rows[i].clone();
            for j in 0..self.rows.len() {
                if j == i {
                    continue;
                }
                if let Ok(pos) = self.rows[j].binary_search_by_key(&lead, |(c, _)| *c) {
                    let coef = f.neg(&self.rows[j][pos].1);
                    self.rows[j] = axpy(&f, &self.rows[j], &coef, &pivot);
                }
            }
        }
    }
}

pub fn rank<K: Field>(m: &ExactMatrix<K>) -> usize {
    let mut ech = Echelon::new(m.field.clone(), m.cols);
    for row in &m.data {
        ech.insert(row);
    }
    ech.dim()
}

/// Basis of `{v : m v = 0}`, one vector per free column of the reduced row
/// echelon form; its length is `cols - rank`.
pub fn kernel_basis<K: Field>(m: &ExactMatrix<K>) -> Vec<SparseVec<K::Elem>> {
    let f = &m.field;
    let mut ech = Echelon::new(f.clone(), m.cols);
    for row in &m.data {
        ech.insert(row);
    }
    ech.make_reduced();
    let one = f.one();
    let mut out = Vec::new();
    for free in ech.free_columns() {
        let mut v: SparseVec<K::Elem> = vec![(free, one.clone())];
        for row in ech.rows() {
            if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                v.push((row[0].0, f.neg(&row[pos].1)));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        out.push(v);
    }
    out
}

/// Dimension of `ker(d_out) / im(d_in)` for a composable pair
/// `d_in: X -> Y`, `d_out: Y -> Z`.
pub fn homology_dim<K: Field>(d_out: &ExactMatrix<K>, d_in: &ExactMatrix<K>) -> Result<usize> {
    if d_out.cols != d_in.rows {
        return Err(Error::DimensionMismatch(format!(
            "outgoing map has {} columns but incoming map has {} rows",
            d_out.cols, d_in.rows
        )));
    }
    let comp = d_out.mul(d_in)?;
    if !comp.is_zero() {
        return Err(Error::CompositionNotZero { nonzero: comp.nnz() });
    }
    Ok(d_out.cols - rank(d_out) - rank(d_in))
}

/// Some solution of `m x = b`, or `None` when `b` is outside the column space.
pub fn solve<K: Field>(m: &ExactMatrix<K>, b: &[(usize, K::Elem)]) -> Result<Option<SparseVec<K::Elem>>> {
    if let Some((i, _)) = b.last() {
        if *i >= m.rows {
            return Err(Error::DimensionMismatch(format!("right-hand side index {i} >= {}", m.rows)));
        }
    }
    let f = &m.field;
    let n = m.cols;
    let mut rhs = vec![f.zero(); m.rows];
    for (i, v) in b {
        rhs[*i] = v.clone();
    }
    let mut ech = Echelon::new(f.clone(), n + 1);
    for (r, row) in m.data.iter().enumerate() {
        let mut aug = row.clone();
        if !f.is_zero(&rhs[r]) {
            aug.push((n, rhs[r].clone()));
        }
        ech.insert(&aug);
    }
    if ech.is_pivot(n) {
        return Ok(None);
    }
    ech.make_reduced();
    let mut x = Vec::new();
    for row in ech.rows() {
        let lead = row[0].0;
        if let Some((c, v)) = row.last() {
            if *c == n {
                x.push((lead, v.clone()));
            }
        }
    }
    x.sort_by_key(|(c, _)| *c);
    Ok(Some(x))
}

/// Echelon basis of the column space of `m`.
pub fn column_space<K: Field>(m: &ExactMatrix<K>) -> Echelon<K> {
    let t = m.transpose();
    let mut ech = Echelon::new(m.field.clone(), m.rows);
    for row in &t.data {
        ech.insert(row);
    }
    ech
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};

    fn q(rows: usize, cols: usize, e: &[&[i64]]) -> ExactMatrix<Rationals> {
        ExactMatrix::from_i64(Rationals, rows, cols, e).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(Rationals, 3).rank(), 3);
        assert_eq!(ExactMatrix::zeros(Rationals, 2, 2).rank(), 0);
        assert_eq!(q(2, 2, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&ExactMatrix::zeros(Rationals, 2, 2)).len(), 2);
        assert!(kernel_basis(&ExactMatrix::identity(Rationals, 3)).is_empty());
        let k = kernel_basis(&q(1, 2, &[&[1, 1]]));
        assert_eq!(k.len(), 1);
        let v = densify(&Rationals, &k[0], 2);
        assert_eq!(v[0], -v[1].clone());
        assert!(!Rationals.is_zero(&v[0]));
    }

    #[test]
    fn homology_dim_examples() {
        let zero_out = ExactMatrix::zeros(Rationals, 1, 3);
        let zero_in = ExactMatrix::zeros(Rationals, 3, 1);
        assert_eq!(homology_dim(&zero_out, &zero_in).unwrap(), 3);

        let inj = ExactMatrix::identity(Rationals, 2);
        assert_eq!(homology_dim(&inj, &ExactMatrix::zeros(Rationals, 2, 1)).unwrap(), 0);

        let d_out = q(1, 2, &[&[1, 1]]);
        let d_in = q(2, 1, &[&[1], &[-1]]);
        assert_eq!(homology_dim(&d_out, &d_in).unwrap(), 0);
    }

    #[test]
    fn homology_dim_errors() {
        let d_out = q(1, 2, &[&[1, 1]]);
        let bad = q(2, 1, &[&[1], &[1]]);
        assert_eq!(homology_dim(&d_out, &bad), Err(Error::CompositionNotZero { nonzero: 1 }));
        let wrong = ExactMatrix::zeros(Rationals, 3, 1);
        assert!(matches!(homology_dim(&d_out, &wrong), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn solve_finds_preimage_or_reports_none() {
        let m = q(3, 2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let f = Rationals;
        let b = vec![(0, f.from_i64(2)), (1, f.from_i64(3)), (2, f.from_i64(5))];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.apply(&x).unwrap(), b);
        let bad = vec![(0, f.from_i64(1))];
        assert_eq!(solve(&m, &bad).unwrap(), None);
    }

    #[test]
    fn prime_field_rank_matches() {
        let f = PrimeField::new(1009).unwrap();
        let m = ExactMatrix::from_i64(f, 2, 2, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn set_and_get_roundtrip() {
        let f = Rationals;
        let mut m = ExactMatrix::zeros(f, 2, 3);
        m.set(1, 2, f.from_i64(7));
        m.set(1, 0, f.from_i64(1));
        assert_eq!(m.get(1, 2), f.from_i64(7));
        m.set(1, 2, f.zero());
        assert_eq!(m.nnz(), 1);
    }
}
