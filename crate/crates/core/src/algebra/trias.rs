use std::fmt;

use super::tensor::{vec_is_zero, Tensor3};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// One of the three products: `⊣` (left), `⊢` (right), `⊥` (middle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Left,
    Right,
    Middle,
}

impl Op {
    pub const ALL: [Op; 3] = [Op::Left, Op::Right, Op::Middle];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Left => "⊣",
            Op::Right => "⊢",
            Op::Middle => "⊥",
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Op::Left => "left",
            Op::Right => "right",
            Op::Middle => "middle",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The identity `(x O2 y) O1 z = x O3 (y O4 z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub inner_left: Op,
    pub outer_left: Op,
    pub outer_right: Op,
    pub inner_right: Op,
}

const fn ax(inner_left: Op, outer_left: Op, outer_right: Op, inner_right: Op) -> Axiom {
    Axiom { inner_left, outer_left, outer_right, inner_right }
}

use Op::{Left as L, Middle as M, Right as R};

/// The eleven triassociative axioms, numbered 1..=11 by position.
pub const AXIOMS: [Axiom; 11] = [
    ax(L, L, L, L),
    ax(L, L, L, R),
    ax(R, L, R, L),
    ax(L, R, R, R),
    ax(R, R, R, R),
    ax(L, L, L, M),
    ax(M, L, M, L),
    ax(L, M, M, R),
    ax(R, M, R, M),
    ax(M, R, R, R),
    ax(M, M, M, M),
];

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x{}y){}z = x{}(y{}z)", self.inner_left, self.outer_left, self.outer_right, self.inner_right)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomViolation<E> {
    /// 1-based axiom number.
    pub axiom: usize,
    pub triple: [usize; 3],
    /// Left side minus right side, in basis coordinates.
    pub residual: Vec<E>,
}

/// A finite-dimensional algebra with three products given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct TriasAlgebra<K: Field> {
    field: K,
    dim: usize,
    products: [Tensor3<K::Elem>; 3],
}

impl<K: Field> TriasAlgebra<K> {
    /// Products are indexed by [`Op::index`]; each must be `d × d × d`.
    pub fn new(field: K, dim: usize, products: [Tensor3<K::Elem>; 3]) -> Result<Self> {
        for (p, op) in products.iter().zip(Op::ALL) {
            if p.dims() != [dim, dim, dim] {
                return Err(Error::DimensionMismatch(format!("{} product has shape {:?}, expected {dim}^3", op.keyword(), p.dims())));
            }
        }
        Ok(Self { field, dim, products })
    }

    pub fn abelian(field: K, dim: usize) -> Self {
        let z = Tensor3::zeros(&field, [dim, dim, dim]);
        Self { field, dim, products: [z.clone(), z.clone(), z] }
    }

    /// An associative algebra viewed with all three products equal.
    pub fn from_associative(field: K, dim: usize, mult: Tensor3<K::Elem>) -> Result<Self> {
        Self::new(field, dim, [mult.clone(), mult.clone(), mult])
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, op: Op) -> &Tensor3<K::Elem> {
        &self.products[op.index()]
    }

    pub fn products(&self) -> &[Tensor3<K::Elem>; 3] {
        &self.products
    }

    /// `e_i op e_j` in coordinates.
    pub fn mul_basis(&self, op: Op, i: usize, j: usize) -> &[K::Elem] {
        self.products[op.index()].fiber(i, j)
    }

    pub fn mul(&self, op: Op, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        self.products[op.index()].bilinear(&self.field, x, y)
    }

    pub fn is_abelian(&self) -> bool {
        self.products.iter().all(|p| p.is_zero(&self.field))
    }

    /// Evaluates all eleven axioms on every basis triple.
    pub fn check_axioms(&self) -> Vec<AxiomViolation<K::Elem>> {
        let n = self.dim;
        let mut out = Vec::new();
        for (idx, axiom) in AXIOMS.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let residual = self.axiom_residual(axiom, [i, j, k]);
                        if !vec_is_zero(&self.field, &residual) {
                            out.push(AxiomViolation { axiom: idx + 1, triple: [i, j, k], residual });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_triassociative(&self) -> bool {
        self.check_axioms().is_empty()
    }

    pub(crate) fn axiom_residual(&self, axiom: &Axiom, [i, j, k]: [usize; 3]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        let (outer_l, outer_r) = (self.product(axiom.outer_left), self.product(axiom.outer_right));
        for (c, v) in self.mul_basis(axiom.inner_left, i, j).iter().enumerate() {
            if !f.is_zero(v) {
                for (t, w) in outer_l.fiber(c, k).iter().enumerate() {
                    if !f.is_zero(w) {
                        f.add_mul_assign(&mut out[t], v, w);
                    }
                }
            }
        }
        for (c, v) in self.mul_basis(axiom.inner_right, j, k).iter().enumerate() {
            if !f.is_zero(v) {
                let v = f.neg(v);
                for (t, w) in outer_r.fiber(i, c).iter().enumerate() {
                    if !f.is_zero(w) {
                        f.add_mul_assign(&mut out[t], &v, w);
                    }
                }
            }
        }
        out
    }

    /// Direct sum `self ⊕ other` (other's basis after self's).
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::InvalidField("direct sum of algebras over different fields".into()));
        }
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let f = &self.field;
        let products = Op::ALL.map(|op| {
            Tensor3::from_fn([n, n, n], |i, j, k| {
                if i < a && j < a && k < a {
                    self.product(op).get(i, j, k).clone()
                } else if i >= a && j >= a && k >= a {
                    other.product(op).get(i - a, j - a, k - a).clone()
                } else {
                    f.zero()
                }
            })
        });
        Self::new(f.clone(), n, products)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn one_dim(l: i64, r: i64, m: i64) -> TriasAlgebra<Rationals> {
        let f = Rationals;
        let t = |c: i64| Tensor3::filled([1, 1, 1], f.from_i64(c));
        TriasAlgebra::new(f, 1, [t(l), t(r), t(m)]).unwrap()
    }

    #[test]
    fn abelian_and_scalar_algebras_pass() {
        for d in 1..=3 {
            assert!(TriasAlgebra::abelian(Rationals, d).check_axioms().is_empty());
        }
        assert!(one_dim(1, 1, 1).check_axioms().is_empty());
    }

    #[test]
    fn single_nonzero_product_violations() {
        let axioms = |a: TriasAlgebra<Rationals>| {
            let mut v: Vec<usize> = a.check_axioms().iter().map(|v| v.axiom).collect();
            v.dedup();
            v
        };
        assert_eq!(axioms(one_dim(1, 0, 0)), vec![2, 6]);
        assert!(axioms(one_dim(0, 1, 0)).contains(&4));
    }

    #[test]
    fn shape_is_validated() {
        let f = Rationals;
        let bad = Tensor3::zeros(&f, [2, 2, 1]);
        let ok = Tensor3::zeros(&f, [2, 2, 2]);
        assert!(TriasAlgebra::new(f, 2, [ok.clone(), ok, bad]).is_err());
    }

    #[test]
    fn axiom_display() {
        assert_eq!(AXIOMS[3].to_string(), "(x⊣y)⊢z = x⊢(y⊢z)");
    }
}
