//! Formal deformations, their infinitesimals and obstructions, rigidity
//! probes, and abelian extensions classified by the second cohomology.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{unit, Op, Representation, Tensor3, TriasAlgebra, AXIOMS};
use crate::complexes::{circ_product, coboundary_matrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{column_space, densify, kernel_basis, solve, sparsify, ExactMatrix, Field, SparseVec};
use crate::trees::enumerate;

/// Three bilinear maps `A × A → T`, one per product (`λ` for `⊣`, `ρ` for
/// `⊢`, `μ` for `⊥`). As a 2-cochain its coordinates are the three tensors
/// concatenated, which is exactly the degree-2 cochain layout.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCochainTriple<K: Field> {
    field: K,
    dim: usize,
    target: usize,
    parts: [Tensor3<K::Elem>; 3],
}

impl<K: Field> TwoCochainTriple<K> {
    pub fn zeros(field: K, dim: usize, target: usize) -> Self {
        let t = Tensor3::zeros(&field, [dim, dim, target]);
        Self { field, dim, target, parts: [t.clone(), t.clone(), t] }
    }

    pub fn new(field: K, dim: usize, target: usize, parts: [Tensor3<K::Elem>; 3]) -> Result<Self> {
        if parts.iter().any(|p| p.dims() != [dim, dim, target]) {
            return Err(Error::DimensionMismatch(format!("cochain parts must be {dim}x{dim}x{target}")));
        }
        Ok(Self { field, dim, target, parts })
    }

    /// The algebra's own products.
    pub fn from_algebra(alg: &TriasAlgebra<K>) -> Self {
        Self { field: alg.field().clone(), dim: alg.dim(), target: alg.dim(), parts: alg.products().clone() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn part(&self, op: Op) -> &Tensor3<K::Elem> {
        &self.parts[op.index()]
    }

    pub fn part_mut(&mut self, op: Op) -> &mut Tensor3<K::Elem> {
        &mut self.parts[op.index()]
    }

    pub fn lambda(&self) -> &Tensor3<K::Elem> {
        self.part(Op::Left)
    }

    pub fn rho(&self) -> &Tensor3<K::Elem> {
        self.part(Op::Right)
    }

    pub fn mu(&self) -> &Tensor3<K::Elem> {
        self.part(Op::Middle)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero(&self.field))
    }

    pub fn apply(&self, op: Op, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        self.parts[op.index()].bilinear(&self.field, x, y)
    }

    pub fn to_cochain(&self) -> SparseVec<K::Elem> {
        let dense: Vec<K::Elem> = self.parts.iter().flat_map(|p| p.as_slice().iter().cloned()).collect();
        sparsify(&self.field, &dense)
    }

    pub fn from_cochain(field: K, dim: usize, target: usize, coords: &[(usize, K::Elem)]) -> Result<Self> {
        let block = dim * dim * target;
        let dense = densify(&field, coords, 3 * block);
        let parts = [0, 1, 2].map(|i| Tensor3::from_vec([dim, dim, target], dense[i * block..(i + 1) * block].to_vec()).expect("block size"));
        Self::new(field, dim, target, parts)
    }

    fn combine(&self, other: &Self, c: &K::Elem) -> Self {
        let f = &self.field;
        let parts = [0, 1, 2].map(|i| {
            let data: Vec<K::Elem> = self.parts[i].as_slice().iter().zip(other.parts[i].as_slice()).map(|(a, b)| f.add(a, &f.mul(c, b))).collect();
            Tensor3::from_vec(self.parts[i].dims(), data).expect("same shape")
        });
        Self { field: f.clone(), dim: self.dim, target: self.target, parts }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &self.field.one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &self.field.neg(&self.field.one()))
    }
}

/// `Θ_t = θ_0 + θ_1 t + … + θ_N t^N` with `θ_0` the algebra's products.
#[derive(Clone, Debug, PartialEq)]
pub struct Deformation<K: Field> {
    alg: TriasAlgebra<K>,
    thetas: Vec<TwoCochainTriple<K>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrderViolation<E> {
    /// Power of `t` whose coefficient fails.
    pub order: usize,
    pub axiom: usize,
    pub triple: [usize; 3],
    pub residual: Vec<E>,
}

impl<K: Field> Deformation<K> {
    /// `thetas[j - 1]` is `θ_j`; the order is the number of terms given.
    pub fn new(alg: &TriasAlgebra<K>, thetas: Vec<TwoCochainTriple<K>>) -> Result<Self> {
        let d = alg.dim();
        if thetas.iter().any(|t| t.dim != d || t.target != d) {
            return Err(Error::DimensionMismatch(format!("deformation terms must be {d}x{d}x{d}")));
        }
        Ok(Self { alg: alg.clone(), thetas })
    }

    pub fn trivial(alg: &TriasAlgebra<K>, order: usize) -> Self {
        let z = TwoCochainTriple::zeros(alg.field().clone(), alg.dim(), alg.dim());
        Self { alg: alg.clone(), thetas: vec![z; order] }
    }

    pub fn algebra(&self) -> &TriasAlgebra<K> {
        &self.alg
    }

    pub fn order(&self) -> usize {
        self.thetas.len()
    }

    /// `θ_j`, with `θ_0` the products and zero beyond the order.
    pub fn theta(&self, j: usize) -> TwoCochainTriple<K> {
        match j {
            0 => TwoCochainTriple::from_algebra(&self.alg),
            j if j <= self.thetas.len() => self.thetas[j - 1].clone(),
            _ => TwoCochainTriple::zeros(self.alg.field().clone(), self.alg.dim(), self.alg.dim()),
        }
    }

    pub fn thetas(&self) -> &[TwoCochainTriple<K>] {
        &self.thetas
    }

    /// `Θ + θ t^{N+1}`.
    pub fn extended(&self, next: TwoCochainTriple<K>) -> Result<Self> {
        let mut thetas = self.thetas.clone();
        thetas.push(next);
        Self::new(&self.alg, thetas)
    }

    /// Coefficient of `t^s` in (left side − right side) of one axiom.
    fn residual(&self, s: usize, axiom: usize, [x, y, z]: [usize; 3], terms: &[TwoCochainTriple<K>]) -> Vec<K::Elem> {
        let f = self.alg.field();
        let d = self.alg.dim();
        let ax = &AXIOMS[axiom];
        let (ex, ey, ez) = (unit(f, d, x), unit(f, d, y), unit(f, d, z));
        let mut out = vec![f.zero(); d];
        for i in 0..=s {
            let j = s - i;
            let inner = terms[j].apply(ax.inner_left, &ex, &ey);
            let l = terms[i].apply(ax.outer_left, &inner, &ez);
            let inner = terms[j].apply(ax.inner_right, &ey, &ez);
            let r = terms[i].apply(ax.outer_right, &ex, &inner);
            for k in 0..d {
                f.add_assign(&mut out[k], &f.sub(&l[k], &r[k]));
            }
        }
        out
    }

    /// All failing coefficients of `t^0 … t^N`.
    pub fn check_order(&self, n: usize) -> Vec<OrderViolation<K::Elem>> {
        let f = self.alg.field();
        let d = self.alg.dim();
        let terms: Vec<TwoCochainTriple<K>> = (0..=n).map(|j| self.theta(j)).collect();
        let mut out = Vec::new();
        for s in 0..=n {
            for axiom in 0..AXIOMS.len() {
                for x in 0..d {
                    for y in 0..d {
                        for z in 0..d {
                            let residual = self.residual(s, axiom, [x, y, z], &terms);
                            if residual.iter().any(|v| !f.is_zero(v)) {
                                out.push(OrderViolation { order: s, axiom: axiom + 1, triple: [x, y, z], residual });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The coefficient of `t^s` as a degree-3 cochain (trees of degree 3 in
    /// canonical order, each carrying its axiom's residual).
    pub fn residual_cochain(&self, s: usize) -> SparseVec<K::Elem> {
        let terms: Vec<TwoCochainTriple<K>> = (0..=s).map(|j| self.theta(j)).collect();
        self.cochain_from(|axiom, triple| self.residual(s, axiom, triple, &terms))
    }

    fn cochain_from(&self, mut value: impl FnMut(usize, [usize; 3]) -> Vec<K::Elem>) -> SparseVec<K::Elem> {
        let d = self.alg.dim();
        let f = self.alg.field();
        let mut dense = Vec::with_capacity(11 * d * d * d * d);
        for axiom in tree_axioms() {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        dense.extend(value(axiom, [x, y, z]));
                    }
                }
            }
        }
        sparsify(f, &dense)
    }

    fn require_valid(&self) -> Result<()> {
        let v = self.check_order(self.order());
        if let Some(first) = v.first() {
            return Err(Error::NotADeformation(format!(
                "axiom ({}) fails at order {} on basis triple {:?}",
                first.axiom, first.order, first.triple
            )));
        }
        Ok(())
    }

    /// `Ob_Θ`: the sum over `1 ≤ j ≤ N` of the order-`N+1` terms, as a 3-cochain.
    pub fn obstruction(&self) -> Result<SparseVec<K::Elem>> {
        self.require_valid()?;
        let n = self.order();
        let f = self.alg.field().clone();
        let d = self.alg.dim();
        let terms: Vec<TwoCochainTriple<K>> = (0..=n + 1).map(|j| self.theta(j)).collect();
        Ok(self.cochain_from(|axiom, [x, y, z]| {
            let ax = &AXIOMS[axiom];
            let (ex, ey, ez) = (unit(&f, d, x), unit(&f, d, y), unit(&f, d, z));
            let mut out = vec![f.zero(); d];
            for j in 1..=n {
                let inner = terms[n + 1 - j].apply(ax.inner_left, &ex, &ey);
                let l = terms[j].apply(ax.outer_left, &inner, &ez);
                let inner = terms[n + 1 - j].apply(ax.inner_right, &ey, &ez);
                let r = terms[j].apply(ax.outer_right, &ex, &inner);
                for k in 0..d {
                    f.add_assign(&mut out[k], &f.sub(&l[k], &r[k]));
                }
            }
            out
        }))
    }
}

/// For each tree of degree 3 (canonical order), the 0-based index of the
/// axiom `(x O2 y) O1 z = x O3 (y O4 z)` with `O3, O2, O4, O1 = ∘_0, ∘_1, ∘_2, ∘_3`.
pub fn tree_axioms() -> Vec<usize> {
    enumerate(3)
        .iter()
        .map(|psi| {
            let c: Vec<Op> = (0..=3).map(|i| circ_product(psi, i).expect("degree 3")).collect();
            AXIOMS
                .iter()
                .position(|a| a.outer_right == c[0] && a.inner_left == c[1] && a.inner_right == c[2] && a.outer_left == c[3])
                .expect("every tree of degree 3 carries an axiom")
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Infinitesimal<K: Field> {
    /// Index of the first nonzero term, or 0 for the trivial deformation.
    pub order: usize,
    pub cochain: TwoCochainTriple<K>,
    pub is_cocycle: bool,
}

fn delta2<K: Field>(alg: &TriasAlgebra<K>, limits: &Limits) -> Result<ExactMatrix<K>> {
    coboundary_matrix(alg, &Representation::adjoint(alg), 2, limits)
}

fn delta1<K: Field>(alg: &TriasAlgebra<K>, limits: &Limits) -> Result<ExactMatrix<K>> {
    coboundary_matrix(alg, &Representation::adjoint(alg), 1, limits)
}

/// The first nonzero `θ_l` and whether it is a 2-cocycle.
pub fn infinitesimal<K: Field>(def: &Deformation<K>, limits: &Limits) -> Result<Infinitesimal<K>> {
    def.require_valid()?;
    let alg = def.algebra();
    let found = def.thetas.iter().position(|t| !t.is_zero());
    let (order, cochain) = match found {
        Some(i) => (i + 1, def.thetas[i].clone()),
        None => (0, TwoCochainTriple::zeros(alg.field().clone(), alg.dim(), alg.dim())),
    };
    let is_cocycle = delta2(alg, limits)?.apply(&cochain.to_cochain())?.is_empty();
    Ok(Infinitesimal { order, cochain, is_cocycle })
}

/// `Φ_t = φ_0 + φ_1 t + … + φ_N t^N`, each `φ_i` a `d × d` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalIso<K: Field> {
    phis: Vec<ExactMatrix<K>>,
}

impl<K: Field> FormalIso<K> {
    pub fn new(phis: Vec<ExactMatrix<K>>) -> Result<Self> {
        let Some(first) = phis.first() else {
            return Err(Error::Validation("a formal isomorphism needs at least φ_0".into()));
        };
        let d = first.rows();
        if phis.iter().any(|p| p.rows() != d || p.cols() != d) {
            return Err(Error::DimensionMismatch("all terms must be square of the same size".into()));
        }
        Ok(Self { phis })
    }

    pub fn identity(field: K, dim: usize) -> Self {
        Self { phis: vec![ExactMatrix::identity(field, dim)] }
    }

    /// `Id + φ t^l`.
    pub fn unipotent(phi: ExactMatrix<K>, l: usize) -> Result<Self> {
        let f = phi.field().clone();
        let d = phi.rows();
        let mut phis = vec![ExactMatrix::identity(f.clone(), d)];
        for _ in 1..l {
            phis.push(ExactMatrix::zeros(f.clone(), d, d));
        }
        phis.push(phi);
        Self::new(phis)
    }

    pub fn term(&self, i: usize) -> ExactMatrix<K> {
        self.phis.get(i).cloned().unwrap_or_else(|| {
            let p = &self.phis[0];
            ExactMatrix::zeros(p.field().clone(), p.rows(), p.cols())
        })
    }

    /// Terms `ψ_0 … ψ_n` of `Φ_t^{-1}` modulo `t^{n+1}`.
    pub fn inverse_terms(&self, n: usize) -> Result<Vec<ExactMatrix<K>>> {
        let phi0 = &self.phis[0];
        let f = phi0.field().clone();
        let d = phi0.rows();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let col = solve(phi0, &[(j, f.one())])?.ok_or(Error::NotInvertible)?;
            cols.push(col);
        }
        let psi0 = ExactMatrix::from_columns(f.clone(), d, cols);
        let mut psis = vec![psi0.clone()];
        for s in 1..=n {
            let mut acc = ExactMatrix::zeros(f.clone(), d, d);
            for i in 1..=s {
                acc = acc.add(&self.term(i).mul(&psis[s - i])?)?;
            }
            psis.push(psi0.mul(&acc)?.scale(&f.neg(&f.one())));
        }
        Ok(psis)
    }
}

/// `Φ_t Θ_t Φ_t^{-1}` truncated at `t^n`.
pub fn conjugate<K: Field>(def: &Deformation<K>, iso: &FormalIso<K>, n: usize) -> Result<Deformation<K>> {
    let alg = def.algebra();
    let f = alg.field().clone();
    let d = alg.dim();
    if iso.phis[0].rows() != d {
        return Err(Error::DimensionMismatch("isomorphism and algebra dimensions differ".into()));
    }
    let psis = iso.inverse_terms(n)?;
    let phis: Vec<ExactMatrix<K>> = (0..=n).map(|i| iso.term(i)).collect();
    let terms: Vec<TwoCochainTriple<K>> = (0..=n).map(|j| def.theta(j)).collect();
    // Columns of ψ_c, i.e. ψ_c(e_x).
    let psi_cols: Vec<Vec<Vec<K::Elem>>> = psis.iter().map(|p| (0..d).map(|x| densify(&f, &p.column(x), d)).collect()).collect();
    let mut out = Vec::with_capacity(n + 1);
    for s in 0..=n {
        let parts = Op::ALL.map(|op| {
            let mut t = Tensor3::zeros(&f, [d, d, d]);
            for x in 0..d {
                for y in 0..d {
                    let mut acc = vec![f.zero(); d];
                    for (b, term) in terms.iter().enumerate().take(s + 1) {
                        for c in 0..=s - b {
                            for e in 0..=s - b - c {
                                let a = s - b - c - e;
                                let v = term.apply(op, &psi_cols[c][x], &psi_cols[e][y]);
                                let w = phis[a].apply(&sparsify(&f, &v)).expect("square");
                                for (k, val) in w {
                                    f.add_assign(&mut acc[k], &val);
                                }
                            }
                        }
                    }
                    for (k, val) in acc.into_iter().enumerate() {
                        t.set(x, y, k, val);
                    }
                }
            }
            t
        });
        out.push(TwoCochainTriple::new(f.clone(), d, d, parts)?);
    }
    let base = TriasAlgebra::new(f, d, out[0].parts.clone())?;
    Deformation::new(&base, out.split_off(1))
}

/// A formal isomorphism `Id + φ t^l` with `δ¹φ = θ_l`, for a deformation whose
/// terms below `l` vanish and whose `θ_l` is a coboundary.
pub fn rigidifying_iso<K: Field>(def: &Deformation<K>, l: usize, limits: &Limits) -> Result<FormalIso<K>> {
    if l == 0 || l > def.order() {
        return Err(Error::IndexOutOfRange { index: l, max: def.order() });
    }
    if def.thetas[..l - 1].iter().any(|t| !t.is_zero()) {
        return Err(Error::Validation(format!("terms below order {l} must vanish")));
    }
    let alg = def.algebra();
    let d = alg.dim();
    let phi = solve(&delta1(alg, limits)?, &def.thetas[l - 1].to_cochain())?
        .ok_or_else(|| Error::Validation(format!("θ_{l} is not a coboundary")))?;
    let dense = densify(alg.field(), &phi, d * d);
    let m = ExactMatrix::from_dense(alg.field().clone(), d, d, (0..d).map(|k| (0..d).map(|a| dense[a * d + k].clone()).collect()).collect())?;
    FormalIso::unipotent(m, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendReport {
    /// `Θ + θ t^{N+1}` satisfies the axioms through `t^{N+1}`.
    pub direct: bool,
    /// `Ob_Θ = δ²θ`.
    pub via_obstruction: bool,
}

pub fn extend<K: Field>(def: &Deformation<K>, next: &TwoCochainTriple<K>, limits: &Limits) -> Result<ExtendReport> {
    def.require_valid()?;
    let ob = def.obstruction()?;
    let ext = def.extended(next.clone())?;
    let direct = ext.check_order(ext.order()).is_empty();
    let image = delta2(def.algebra(), limits)?.apply(&next.to_cochain())?;
    Ok(ExtendReport { direct, via_obstruction: ob == image })
}

/// Some `θ` with `δ²θ = Ob_Θ`, if one exists.
pub fn solve_extension<K: Field>(def: &Deformation<K>, limits: &Limits) -> Result<Option<TwoCochainTriple<K>>> {
    let ob = def.obstruction()?;
    let alg = def.algebra();
    match solve(&delta2(alg, limits)?, &ob)? {
        Some(v) => Ok(Some(TwoCochainTriple::from_cochain(alg.field().clone(), alg.dim(), alg.dim(), &v)?)),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    /// Highest order reached.
    pub reached: usize,
    /// First order at which no extension exists.
    pub obstructed_at: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub h2: usize,
    pub h3: usize,
    pub rigid: bool,
    /// One ladder per basis class of `H²(A, A)`.
    pub ladders: Vec<Ladder>,
}

/// Lifts `θ_1` order by order, choosing the solution found by elimination.
pub fn lift<K: Field>(alg: &TriasAlgebra<K>, first: TwoCochainTriple<K>, max_order: usize, limits: &Limits) -> Result<(Deformation<K>, Ladder)> {
    let mut def = Deformation::new(alg, vec![first])?;
    if !def.check_order(1).is_empty() {
        return Err(Error::NotACocycle);
    }
    while def.order() < max_order {
        match solve_extension(&def, limits)? {
            Some(next) => def = def.extended(next)?,
            None => {
                let at = def.order() + 1;
                let reached = def.order();
                return Ok((def, Ladder { reached, obstructed_at: Some(at) }));
            }
        }
    }
    let reached = def.order();
    Ok((def, Ladder { reached, obstructed_at: None }))
}

/// Representatives of a basis of `H²(A, A)`.
pub fn h2_representatives<K: Field>(alg: &TriasAlgebra<K>, limits: &Limits) -> Result<Vec<TwoCochainTriple<K>>> {
    let d2 = delta2(alg, limits)?;
    let mut image = column_space(&delta1(alg, limits)?);
    let mut out = Vec::new();
    for z in kernel_basis(&d2) {
        if image.insert(&z) {
            out.push(TwoCochainTriple::from_cochain(alg.field().clone(), alg.dim(), alg.dim(), &z)?);
        }
    }
    Ok(out)
}

pub fn rigidity_probe<K: Field>(alg: &TriasAlgebra<K>, max_order: usize, limits: &Limits) -> Result<RigidityReport> {
    let adj = Representation::adjoint(alg);
    let h2 = crate::complexes::cohomology_dim(alg, &adj, 2, limits)?;
    let h3 = crate::complexes::cohomology_dim(alg, &adj, 3, limits)?;
    let mut ladders = Vec::new();
    for rep in h2_representatives(alg, limits)? {
        ladders.push(lift(alg, rep, max_order, limits)?.1);
    }
    Ok(RigidityReport { h2, h3, rigid: h2 == 0, ladders })
}

/// A deformation built constructively: a random 2-cocycle with small integer
/// coefficients, lifted while obstructions are solvable. The result's order
/// may be lower than requested when a lift is obstructed.
pub fn random_deformation<K: Field>(alg: &TriasAlgebra<K>, order: usize, seed: u64, limits: &Limits) -> Result<Deformation<K>> {
    let f = alg.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cocycles = kernel_basis(&delta2(alg, limits)?);
    let mut acc: SparseVec<K::Elem> = Vec::new();
    for z in &cocycles {
        let c = f.from_i64(rng.gen_range(-2..=2));
        acc = crate::linalg::axpy(f, &acc, &c, z);
    }
    let first = TwoCochainTriple::from_cochain(f.clone(), alg.dim(), alg.dim(), &acc)?;
    Ok(lift(alg, first, order.max(1), limits)?.0)
}

/// `E = M ⊕ A` with `(m, a) * (n, b) = (m*b + a*n + g(a, b), a*b)`; the
/// basis of `M` comes first.
#[derive(Clone, Debug, PartialEq)]
pub struct AbelianExtension<K: Field> {
    base: TriasAlgebra<K>,
    fiber: Representation<K>,
    total: TriasAlgebra<K>,
}

impl<K: Field> AbelianExtension<K> {
    /// Wraps an algebra `total` on `M ⊕ A`, checking that it is
    /// triassociative, that `M` is an abelian ideal and that the projection
    /// to `A` is a morphism.
    pub fn from_total(base: &TriasAlgebra<K>, fiber: &Representation<K>, total: TriasAlgebra<K>) -> Result<Self> {
        let (m, d) = (fiber.dim(), base.dim());
        if total.dim() != m + d {
            return Err(Error::DimensionMismatch(format!("extension has dimension {}, expected {}", total.dim(), m + d)));
        }
        if let Some(v) = total.check_axioms().first() {
            return Err(Error::Validation(format!("extension violates axiom ({}) on {:?}", v.axiom, v.triple)));
        }
        let f = base.field();
        for op in Op::ALL {
            let p = total.product(op);
            for i in 0..m + d {
                for j in 0..m + d {
                    for k in 0..m + d {
                        let v = p.get(i, j, k);
                        let ok = match (i < m, j < m, k < m) {
                            (true, true, _) => f.is_zero(v),
                            (_, _, false) if i < m || j < m => f.is_zero(v),
                            (false, false, false) => v == base.product(op).get(i - m, j - m, k - m),
                            _ => true,
                        };
                        if !ok {
                            return Err(Error::Validation("total space is not an abelian extension of the base".into()));
                        }
                    }
                }
            }
        }
        Ok(Self { base: base.clone(), fiber: fiber.clone(), total })
    }

    pub fn base(&self) -> &TriasAlgebra<K> {
        &self.base
    }

    pub fn fiber(&self) -> &Representation<K> {
        &self.fiber
    }

    pub fn total(&self) -> &TriasAlgebra<K> {
        &self.total
    }

    /// The module structure that `A` induces on `M` inside `E`.
    pub fn induced_representation(&self) -> Result<Representation<K>> {
        let (m, d) = (self.fiber.dim(), self.base.dim());
        let left = Op::ALL.map(|op| Tensor3::from_fn([d, m, m], |a, x, k| self.total.product(op).get(m + a, x, k).clone()));
        let right = Op::ALL.map(|op| Tensor3::from_fn([m, d, m], |x, a, k| self.total.product(op).get(x, m + a, k).clone()));
        Representation::new(self.base.field().clone(), d, m, left, right)
    }

    /// The splitting `a ↦ (0, a)`.
    pub fn canonical_splitting(&self) -> ExactMatrix<K> {
        let (m, d) = (self.fiber.dim(), self.base.dim());
        let f = self.base.field().clone();
        let cols = (0..d).map(|a| vec![(m + a, f.one())]).collect();
        ExactMatrix::from_columns(f, m + d, cols)
    }
}

/// Builds the extension of `A` by `M` twisted by the 2-cocycle `g`.
pub fn extension_from_cocycle<K: Field>(
    alg: &TriasAlgebra<K>,
    rep: &Representation<K>,
    g: &TwoCochainTriple<K>,
    limits: &Limits,
) -> Result<AbelianExtension<K>> {
    let (m, d) = (rep.dim(), alg.dim());
    if g.dim() != d || g.target() != m {
        return Err(Error::DimensionMismatch(format!("cocycle must be {d}x{d}x{m}")));
    }
    let delta = coboundary_matrix(alg, rep, 2, limits)?;
    if !delta.apply(&g.to_cochain())?.is_empty() {
        return Err(Error::NotACocycle);
    }
    let semi = rep.semidirect(alg)?;
    let f = alg.field();
    let products = Op::ALL.map(|op| {
        let mut t = semi.product(op).clone();
        for a in 0..d {
            for b in 0..d {
                for k in 0..m {
                    t.set(m + a, m + b, k, g.part(op).get(a, b, k).clone());
                }
            }
        }
        t
    });
    let total = TriasAlgebra::new(f.clone(), m + d, products)?;
    AbelianExtension::from_total(alg, rep, total)
}

/// `f(a, b) = σ(a)*σ(b) − σ(a*b)`, read in `M`, for a linear splitting `σ`
/// given as an `(m + d) × d` matrix.
pub fn cocycle_from_extension<K: Field>(ext: &AbelianExtension<K>, sigma: &ExactMatrix<K>) -> Result<TwoCochainTriple<K>> {
    let (m, d) = (ext.fiber.dim(), ext.base.dim());
    let f = ext.base.field();
    if sigma.rows() != m + d || sigma.cols() != d {
        return Err(Error::DimensionMismatch(format!("splitting must be {}x{d}", m + d)));
    }
    for r in 0..d {
        for c in 0..d {
            let expect = if r == c { f.one() } else { f.zero() };
            if sigma.get(m + r, c) != expect {
                return Err(Error::NotASplitting);
            }
        }
    }
    let cols: Vec<Vec<K::Elem>> = (0..d).map(|a| densify(f, &sigma.column(a), m + d)).collect();
    let parts = Op::ALL.map(|op| {
        let mut t = Tensor3::zeros(f, [d, d, m]);
        for a in 0..d {
            for b in 0..d {
                let lhs = ext.total.mul(op, &cols[a], &cols[b]);
                let prod = ext.base.mul_basis(op, a, b);
                let mut rhs = vec![f.zero(); m + d];
                for (c, coef) in prod.iter().enumerate() {
                    for (k, v) in cols[c].iter().enumerate() {
                        f.add_mul_assign(&mut rhs[k], coef, v);
                    }
                }
                for k in 0..m {
                    t.set(a, b, k, f.sub(&lhs[k], &rhs[k]));
                }
            }
        }
        t
    });
    TwoCochainTriple::new(f.clone(), d, m, parts)
}

/// A map `h: A → M` making `(m, a) ↦ (m + h(a), a)` an isomorphism from
/// `first` to `second`, if the two extensions are equivalent. Returned as an
/// `m × d` matrix.
pub fn extensions_equivalent<K: Field>(
    first: &AbelianExtension<K>,
    second: &AbelianExtension<K>,
    limits: &Limits,
) -> Result<Option<ExactMatrix<K>>> {
    if first.base != second.base || first.fiber != second.fiber {
        return Err(Error::Validation("extensions of different base or fiber".into()));
    }
    let (m, d) = (first.fiber.dim(), first.base.dim());
    let g1 = cocycle_from_extension(first, &first.canonical_splitting())?;
    let g2 = cocycle_from_extension(second, &second.canonical_splitting())?;
    let delta1 = coboundary_matrix(&first.base, &first.fiber, 1, limits)?;
    let f = first.base.field();
    Ok(solve(&delta1, &g1.sub(&g2).to_cochain())?.map(|h| {
        let dense = densify(f, &h, d * m);
        ExactMatrix::from_dense(f.clone(), m, d, (0..m).map(|k| (0..d).map(|a| dense[a * m + k].clone()).collect()).collect())
            .expect("shape is fixed")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::Rationals;

    #[test]
    fn trees_of_degree_three_carry_distinct_axioms() {
        let mut ax = tree_axioms();
        ax.sort_unstable();
        assert_eq!(ax, (0..11).collect::<Vec<_>>());
    }

    #[test]
    fn trivial_deformation_passes_and_has_no_obstruction() {
        let a = fixtures::phi2(Rationals);
        let def = Deformation::trivial(&a, 2);
        assert!(def.check_order(2).is_empty());
        assert!(def.obstruction().unwrap().is_empty());
        let inf = infinitesimal(&def, &Limits::default()).unwrap();
        assert_eq!(inf.order, 0);
        assert!(inf.is_cocycle);
    }

    #[test]
    fn identity_conjugation_is_a_no_op() {
        let a = fixtures::dual_numbers(Rationals);
        let def = random_deformation(&a, 2, 7, &Limits::default()).unwrap();
        let same = conjugate(&def, &FormalIso::identity(Rationals, 2), def.order()).unwrap();
        assert_eq!(same, def);
    }
}
