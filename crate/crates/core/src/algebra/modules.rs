use super::relations::{Arg, Gen, UaExpr, UA_RELATIONS};
use super::tensor::{unit, vec_add_assign, vec_is_zero, vec_sub, Tensor3};
use super::trias::{Op, TriasAlgebra, AXIOMS};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon, ExactMatrix, Field, SparseVec};

/// Two-sided module data: `a * x` and `x * a` for each of the three products.
///
/// `left[op]` has shape `d × m × m` (`e_a * x_i = Σ_k t[a][i][k] x_k`),
/// `right[op]` has shape `m × d × m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<K: Field> {
    field: K,
    alg_dim: usize,
    dim: usize,
    left: [Tensor3<K::Elem>; 3],
    right: [Tensor3<K::Elem>; 3],
}

/// Right module over the enveloping algebra: `x · g(a)` for the six
/// generator families, each of shape `m × d × m`, indexed by [`Gen::index`].
#[derive(Clone, Debug, PartialEq)]
pub struct Corepresentation<K: Field> {
    field: K,
    alg_dim: usize,
    dim: usize,
    actions: [Tensor3<K::Elem>; 6],
}

#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationViolation<E> {
    pub axiom: usize,
    /// Position (0, 1, 2) of the module element in the triple.
    pub slot: usize,
    pub triple: [usize; 3],
    pub residual: Vec<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationViolation<E> {
    pub relation: usize,
    pub x: usize,
    pub a: usize,
    pub b: usize,
    pub residual: Vec<E>,
}

impl<K: Field> Representation<K> {
    pub fn new(field: K, alg_dim: usize, dim: usize, left: [Tensor3<K::Elem>; 3], right: [Tensor3<K::Elem>; 3]) -> Result<Self> {
        if left.iter().any(|t| t.dims() != [alg_dim, dim, dim]) {
            return Err(Error::DimensionMismatch(format!("left actions must be {alg_dim}x{dim}x{dim}")));
        }
        if right.iter().any(|t| t.dims() != [dim, alg_dim, dim]) {
            return Err(Error::DimensionMismatch(format!("right actions must be {dim}x{alg_dim}x{dim}")));
        }
        Ok(Self { field, alg_dim, dim, left, right })
    }

    /// `A` acting on itself through its products.
    pub fn adjoint(alg: &TriasAlgebra<K>) -> Self {
        let p = alg.products().clone();
        Self { field: alg.field().clone(), alg_dim: alg.dim(), dim: alg.dim(), left: p.clone(), right: p }
    }

    /// All six actions zero.
    pub fn zero(field: K, alg_dim: usize, dim: usize) -> Self {
        let l = Tensor3::zeros(&field, [alg_dim, dim, dim]);
        let r = Tensor3::zeros(&field, [dim, alg_dim, dim]);
        Self { field, alg_dim, dim, left: [l.clone(), l.clone(), l], right: [r.clone(), r.clone(), r] }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn left(&self, op: Op) -> &Tensor3<K::Elem> {
        &self.left[op.index()]
    }

    pub fn right(&self, op: Op) -> &Tensor3<K::Elem> {
        &self.right[op.index()]
    }

    pub fn left_mut(&mut self, op: Op) -> &mut Tensor3<K::Elem> {
        &mut self.left[op.index()]
    }

    pub fn right_mut(&mut self, op: Op) -> &mut Tensor3<K::Elem> {
        &mut self.right[op.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.left.iter().chain(&self.right).all(|t| t.is_zero(&self.field))
    }

    pub fn act_left(&self, op: Op, a: &[K::Elem], x: &[K::Elem]) -> Vec<K::Elem> {
        self.left[op.index()].bilinear(&self.field, a, x)
    }

    pub fn act_right(&self, op: Op, x: &[K::Elem], a: &[K::Elem]) -> Vec<K::Elem> {
        self.right[op.index()].bilinear(&self.field, x, a)
    }

    /// Operator of `g(e_a)` on `M` under `α_l(a)x = a⊣x, …, β_m(a)x = x⊥a`,
    /// as an `m × m` matrix (column `x` is the image of `x`).
    pub fn generator_operator(&self, g: Gen, a: usize) -> ExactMatrix<K> {
        let m = self.dim;
        let cols = (0..m)
            .map(|x| {
                let v = match g {
                    Gen::AlphaL => self.left[0].fiber(a, x),
                    Gen::AlphaR => self.left[1].fiber(a, x),
                    Gen::AlphaM => self.left[2].fiber(a, x),
                    Gen::BetaL => self.right[0].fiber(x, a),
                    Gen::BetaR => self.right[1].fiber(x, a),
                    Gen::BetaM => self.right[2].fiber(x, a),
                };
                crate::linalg::sparsify(&self.field, v)
            })
            .collect();
        ExactMatrix::from_columns(self.field.clone(), m, cols)
    }

    fn check_dims(&self, alg: &TriasAlgebra<K>) -> Result<()> {
        if self.alg_dim != alg.dim() {
            return Err(Error::DimensionMismatch(format!("module built for dimension {}, algebra has {}", self.alg_dim, alg.dim())));
        }
        Ok(())
    }

    /// `M ⊕ A` with `M * M = 0`; basis of `M` first.
    pub fn semidirect(&self, alg: &TriasAlgebra<K>) -> Result<TriasAlgebra<K>> {
        self.check_dims(alg)?;
        let (m, d) = (self.dim, alg.dim());
        let n = m + d;
        let f = &self.field;
        let products = Op::ALL.map(|op| {
            Tensor3::from_fn([n, n, n], |i, j, k| match (i < m, j < m, k < m) {
                (false, false, false) => alg.product(op).get(i - m, j - m, k - m).clone(),
                (false, true, true) => self.left(op).get(i - m, j, k).clone(),
                (true, false, true) => self.right(op).get(i, j - m, k).clone(),
                _ => f.zero(),
            })
        });
        TriasAlgebra::new(f.clone(), n, products)
    }

    /// The 33 mixed identities: each axiom with exactly one argument in `M`.
    pub fn check(&self, alg: &TriasAlgebra<K>) -> Result<Vec<RepresentationViolation<K::Elem>>> {
        let e = self.semidirect(alg)?;
        let (m, d) = (self.dim, alg.dim());
        let mut out = Vec::new();
        for (idx, axiom) in AXIOMS.iter().enumerate() {
            for slot in 0..3 {
                let ranges: [usize; 3] = std::array::from_fn(|s| if s == slot { m } else { d });
                for i in 0..ranges[0] {
                    for j in 0..ranges[1] {
                        for k in 0..ranges[2] {
                            let local = [i, j, k];
                            let global: [usize; 3] = std::array::from_fn(|s| if s == slot { local[s] } else { local[s] + m });
                            let residual = e.axiom_residual(axiom, global);
                            if !vec_is_zero(&self.field, &residual) {
                                out.push(RepresentationViolation {
                                    axiom: idx + 1,
                                    slot,
                                    triple: local,
                                    residual: residual[..m].to_vec(),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks that the generator dictionary turns the 33 enveloping-algebra
    /// relations into operator identities on `M`.
    pub fn left_module_violations(&self, alg: &TriasAlgebra<K>) -> Result<Vec<RelationViolation<K::Elem>>> {
        self.check_dims(alg)?;
        let d = alg.dim();
        let ops: Vec<Vec<ExactMatrix<K>>> = Gen::ALL.iter().map(|&g| (0..d).map(|a| self.generator_operator(g, a)).collect()).collect();
        let f = &self.field;
        let m = self.dim;
        let eval = |expr: &UaExpr, a: usize, b: usize| -> ExactMatrix<K> {
            let pick = |arg: Arg| if arg == Arg::A { a } else { b };
            match *expr {
                UaExpr::Word(g1, p, g2, q) => ops[g1.index()][pick(p)].mul(&ops[g2.index()][pick(q)]).expect("square operators"),
                UaExpr::Single(g, op, p, q) => {
                    let prod = alg.mul_basis(op, pick(p), pick(q));
                    let mut acc = ExactMatrix::zeros(f.clone(), m, m);
                    for (c, coef) in prod.iter().enumerate() {
                        if !f.is_zero(coef) {
                            acc = acc.combine(&ops[g.index()][c], coef).expect("same shape");
                        }
                    }
                    acc
                }
            }
        };
        let mut out = Vec::new();
        for rel in &UA_RELATIONS {
            for a in 0..d {
                for b in 0..d {
                    let diff = eval(&rel.lhs, a, b).sub(&eval(&rel.rhs, a, b)).expect("same shape");
                    if !diff.is_zero() {
                        for x in 0..m {
                            let col = diff.column(x);
                            if !col.is_empty() {
                                out.push(RelationViolation {
                                    relation: rel.number,
                                    x,
                                    a,
                                    b,
                                    residual: crate::linalg::densify(f, &col, m),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

impl<K: Field> Corepresentation<K> {
    pub fn new(field: K, alg_dim: usize, dim: usize, actions: [Tensor3<K::Elem>; 6]) -> Result<Self> {
        if actions.iter().any(|t| t.dims() != [dim, alg_dim, dim]) {
            return Err(Error::DimensionMismatch(format!("corepresentation actions must be {dim}x{alg_dim}x{dim}")));
        }
        Ok(Self { field, alg_dim, dim, actions })
    }

    pub fn zero(field: K, alg_dim: usize, dim: usize) -> Self {
        let t = Tensor3::zeros(&field, [dim, alg_dim, dim]);
        Self { field, alg_dim, dim, actions: std::array::from_fn(|_| t.clone()) }
    }

    /// The ground field with all actions zero.
    pub fn trivial(field: K, alg_dim: usize) -> Self {
        Self::zero(field, alg_dim, 1)
    }

    /// `x·β_l(a) = a⊢x`, `x·α_r(a) = x⊣a`, `x·β_m(a) = a⊥x`,
    /// `x·α_m(a) = x⊥a`, and `β_r`, `α_l` act by zero.
    pub fn opposite(rep: &Representation<K>) -> Self {
        let (d, m) = (rep.alg_dim, rep.dim);
        let f = rep.field.clone();
        let zero = Tensor3::zeros(&f, [m, d, m]);
        let swap = |t: &Tensor3<K::Elem>| Tensor3::from_fn([m, d, m], |x, a, k| t.get(a, x, k).clone());
        let mut actions: [Tensor3<K::Elem>; 6] = std::array::from_fn(|_| zero.clone());
        actions[Gen::BetaL.index()] = swap(rep.left(Op::Right));
        actions[Gen::AlphaR.index()] = rep.right(Op::Left).clone();
        actions[Gen::BetaM.index()] = swap(rep.left(Op::Middle));
        actions[Gen::AlphaM.index()] = rep.right(Op::Middle).clone();
        Self { field: f, alg_dim: d, dim: m, actions }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn action(&self, g: Gen) -> &Tensor3<K::Elem> {
        &self.actions[g.index()]
    }

    pub fn action_mut(&mut self, g: Gen) -> &mut Tensor3<K::Elem> {
        &mut self.actions[g.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.actions.iter().all(|t| t.is_zero(&self.field))
    }

    /// `x · g(a)` for coordinate vectors.
    pub fn act(&self, g: Gen, x: &[K::Elem], a: &[K::Elem]) -> Vec<K::Elem> {
        self.actions[g.index()].bilinear(&self.field, x, a)
    }

    /// `x · g(e_a)` for a basis vector `x`.
    pub fn act_basis(&self, g: Gen, x: usize, a: usize) -> &[K::Elem] {
        self.actions[g.index()].fiber(x, a)
    }

    /// The 33 right-module axioms, one per enveloping-algebra relation.
    pub fn check(&self, alg: &TriasAlgebra<K>) -> Result<Vec<RelationViolation<K::Elem>>> {
        if self.alg_dim != alg.dim() {
            return Err(Error::DimensionMismatch(format!("corepresentation built for dimension {}, algebra has {}", self.alg_dim, alg.dim())));
        }
        let (d, m) = (alg.dim(), self.dim);
        let f = &self.field;
        let eval = |expr: &UaExpr, x: usize, a: usize, b: usize| -> Vec<K::Elem> {
            let pick = |arg: Arg| unit(f, d, if arg == Arg::A { a } else { b });
            let xv = unit(f, m, x);
            match *expr {
                UaExpr::Word(g1, p, g2, q) => {
                    let first = self.act(g1, &xv, &pick(p));
                    self.act(g2, &first, &pick(q))
                }
                UaExpr::Single(g, op, p, q) => {
                    let prod = alg.mul(op, &pick(p), &pick(q));
                    self.act(g, &xv, &prod)
                }
            }
        };
        let mut out = Vec::new();
        for rel in &UA_RELATIONS {
            for x in 0..m {
                for a in 0..d {
                    for b in 0..d {
                        let residual = vec_sub(f, &eval(&rel.lhs, x, a, b), &eval(&rel.rhs, x, a, b));
                        if !vec_is_zero(f, &residual) {
                            out.push(RelationViolation { relation: rel.number, x, a, b, residual });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Linear maps `A → M` satisfying `φ(a*b) = φ(a)*b + a*φ(b)` for all three
/// products. Coordinates: `φ(e_a) = Σ_k v[a·m + k] x_k`.
pub fn derivations<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> Result<Vec<SparseVec<K::Elem>>> {
    rep.check_dims(alg)?;
    let (d, m) = (alg.dim(), rep.dim());
    let f = alg.field();
    let mut rows = Vec::new();
    for op in Op::ALL {
        for a in 0..d {
            for b in 0..d {
                for k in 0..m {
                    let mut row = Vec::new();
                    for (c, coef) in alg.mul_basis(op, a, b).iter().enumerate() {
                        if !f.is_zero(coef) {
                            row.push((c * m + k, coef.clone()));
                        }
                    }
                    for x in 0..m {
                        let r = rep.right(op).get(x, b, k);
                        if !f.is_zero(r) {
                            row.push((a * m + x, f.neg(r)));
                        }
                        let l = rep.left(op).get(a, x, k);
                        if !f.is_zero(l) {
                            row.push((b * m + x, f.neg(l)));
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    let sys = ExactMatrix::from_row_entries(f.clone(), rows.len(), d * m, rows);
    Ok(kernel_basis(&sys))
}

/// `ad_x(a) = a⊣x − x⊢a` in the coordinates of [`derivations`].
pub fn inner_derivation<K: Field>(rep: &Representation<K>, x: &[K::Elem]) -> SparseVec<K::Elem> {
    let (d, m) = (rep.alg_dim(), rep.dim());
    let f = rep.field();
    let mut dense = vec![f.zero(); d * m];
    for a in 0..d {
        let ea = unit(f, d, a);
        let mut v = rep.act_left(Op::Left, &ea, x);
        let w = rep.act_right(Op::Right, x, &ea);
        vec_add_assign(f, &mut v, &w.iter().map(|c| f.neg(c)).collect::<Vec<_>>());
        dense[a * m..(a + 1) * m].clone_from_slice(&v);
    }
    crate::linalg::sparsify(f, &dense)
}

/// Echelon basis of the span of all `ad_x`.
pub fn inner_derivations<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> Result<Echelon<K>> {
    rep.check_dims(alg)?;
    let m = rep.dim();
    let mut ech = Echelon::new(alg.field().clone(), alg.dim() * m);
    for x in 0..m {
        ech.insert(&inner_derivation(rep, &unit(alg.field(), m, x)));
    }
    Ok(ech)
}
