use crate::error::{Error, Result};
use crate::linalg::Field;

/// Dense three-index array `t[i][j][k]`, with `k` varying fastest.
///
/// Structure constants use the convention `e_i * e_j = Σ_k t[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3<E> {
    dims: [usize; 3],
    data: Vec<E>,
}

impl<E: Clone> Tensor3<E> {
    pub fn filled(dims: [usize; 3], value: E) -> Self {
        Self { dims, data: vec![value; dims[0] * dims[1] * dims[2]] }
    }

    pub fn zeros<K: Field<Elem = E>>(field: &K, dims: [usize; 3]) -> Self {
        Self::filled(dims, field.zero())
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { dims, data }
    }

    pub fn from_vec(dims: [usize; 3], data: Vec<E>) -> Result<Self> {
        if data.len() != dims[0] * dims[1] * dims[2] {
            return Err(Error::DimensionMismatch(format!("{} entries for shape {dims:?}", data.len())));
        }
        Ok(Self { dims, data })
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &E {
        &self.data[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: E) {
        let o = self.offset(i, j);
        self.data[o + k] = v;
    }

    /// The vector `t[i][j][..]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[E] {
        let o = self.offset(i, j);
        &self.data[o..o + self.dims[2]]
    }

    pub fn as_slice(&self) -> &[E] {
        &self.data
    }

    pub fn map<F>(&self, f: impl FnMut(&E) -> F) -> Tensor3<F> {
        Tensor3 { dims: self.dims, data: self.data.iter().map(f).collect() }
    }
}

impl<E: Clone> Tensor3<E> {
    /// `Σ x_i y_j t[i][j][..]` for dense coordinate vectors.
    pub fn bilinear<K: Field<Elem = E>>(&self, field: &K, x: &[E], y: &[E]) -> Vec<E> {
        let mut out = vec![field.zero(); self.dims[2]];
        for (i, xi) in x.iter().enumerate() {
            if field.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if field.is_zero(yj) {
                    continue;
                }
                let c = field.mul(xi, yj);
                for (k, t) in self.fiber(i, j).iter().enumerate() {
                    if !field.is_zero(t) {
                        field.add_mul_assign(&mut out[k], &c, t);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero<K: Field<Elem = E>>(&self, field: &K) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }
}

/// `e_i` in `K^n` as a dense vector.
pub fn unit<K: Field>(field: &K, n: usize, i: usize) -> Vec<K::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub(crate) fn vec_sub<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> Vec<K::Elem> {
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub(crate) fn vec_add_assign<K: Field>(field: &K, a: &mut [K::Elem], b: &[K::Elem]) {
    for (x, y) in a.iter_mut().zip(b) {
        field.add_assign(x, y);
    }
}

pub(crate) fn vec_is_zero<K: Field>(field: &K, a: &[K::Elem]) -> bool {
    a.iter().all(|v| field.is_zero(v))
}
