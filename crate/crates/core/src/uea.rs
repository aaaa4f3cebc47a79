//! The universal enveloping algebra `UA`.
//!
//! Words in the letters `g(e_a)` are reduced by a rewrite system oriented
//! from the 33 relations: same-side pairs merge into one letter, `βα` pairs
//! are reordered to `αβ`, and `α_lβ_m`, `α_lβ_r` become `α_lβ_l`. Every word of
//! length three or more has a reducible adjacent pair, so normal words span
//! `V₀ = K ⊕ 6·A ⊕ 7·(A⊗A)`. The relations, their two-sided translates and
//! all overlap ambiguities generate a subspace `J` of `V₀`, closed under
//! multiplication by letters, and `UA = V₀ / J`. The quotient is certified
//! afterwards: associativity on letter-first triples and every relation.

use std::collections::BTreeMap;

use crate::algebra::{Arg, Corepresentation, Gen, Op, Representation, Tensor3, TriasAlgebra, UaExpr, UA_RELATIONS};
use crate::error::{Error, Result};
use crate::linalg::matrix::collect_sparse;
use crate::linalg::{Echelon, ExactMatrix, Field, SparseVec};

/// The seven normal quadratic shapes, in coordinate order.
pub const QUADRATIC_SHAPES: [(Gen, Gen); 7] = [
    (Gen::AlphaL, Gen::BetaL),
    (Gen::AlphaR, Gen::BetaR),
    (Gen::AlphaR, Gen::BetaL),
    (Gen::AlphaM, Gen::BetaL),
    (Gen::AlphaM, Gen::BetaR),
    (Gen::AlphaR, Gen::BetaM),
    (Gen::AlphaM, Gen::BetaM),
];

/// What to do with an adjacent pair `g1(x) g2(y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleAction {
    /// `g(x op y)`, or `g(y op x)` when `flip`.
    Merge { gen: Gen, op: Op, flip: bool },
    /// `first(y) second(x)`
    Reorder { first: Gen, second: Gen },
    /// `first(x) second(y)`
    Rename { first: Gen, second: Gen },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: [[Option<RuleAction>; 6]; 6],
}

impl RewriteSystem {
    /// The 29 rules read off the relations.
    pub fn standard() -> Self {
        use Gen::*;
        use RuleAction::*;
        let mut s = Self { rules: [[None; 6]; 6] };
        let merge = |gen, op| Merge { gen, op, flip: false };
        let merge_flip = |gen, op| Merge { gen, op, flip: true };
        for (l, r, a) in [
            (AlphaL, AlphaL, merge(AlphaL, Op::Left)),
            (AlphaL, AlphaM, merge(AlphaL, Op::Left)),
            (AlphaL, AlphaR, merge(AlphaL, Op::Left)),
            (AlphaR, AlphaR, merge(AlphaR, Op::Right)),
            (AlphaR, AlphaL, merge(AlphaL, Op::Right)),
            (AlphaR, AlphaM, merge(AlphaM, Op::Right)),
            (AlphaM, AlphaL, merge(AlphaL, Op::Middle)),
            (AlphaM, AlphaR, merge(AlphaM, Op::Left)),
            (AlphaM, AlphaM, merge(AlphaM, Op::Middle)),
            (BetaL, BetaL, merge_flip(BetaL, Op::Left)),
            (BetaR, BetaR, merge_flip(BetaR, Op::Right)),
            (BetaR, BetaL, merge_flip(BetaR, Op::Right)),
            (BetaR, BetaM, merge_flip(BetaR, Op::Right)),
            (BetaL, BetaR, merge_flip(BetaR, Op::Left)),
            (BetaL, BetaM, merge_flip(BetaM, Op::Left)),
            (BetaM, BetaL, merge_flip(BetaM, Op::Right)),
            (BetaM, BetaR, merge_flip(BetaR, Op::Middle)),
            (BetaM, BetaM, merge_flip(BetaM, Op::Middle)),
            (BetaL, AlphaL, Reorder { first: AlphaL, second: BetaL }),
            (BetaL, AlphaR, Reorder { first: AlphaR, second: BetaL }),
            (BetaL, AlphaM, Reorder { first: AlphaM, second: BetaL }),
            (BetaR, AlphaR, Reorder { first: AlphaR, second: BetaR }),
            (BetaR, AlphaL, Reorder { first: AlphaR, second: BetaR }),
            (BetaR, AlphaM, Reorder { first: AlphaR, second: BetaR }),
            (BetaM, AlphaL, Reorder { first: AlphaM, second: BetaR }),
            (BetaM, AlphaR, Reorder { first: AlphaR, second: BetaM }),
            (BetaM, AlphaM, Reorder { first: AlphaM, second: BetaM }),
            (AlphaL, BetaM, Rename { first: AlphaL, second: BetaL }),
            (AlphaL, BetaR, Rename { first: AlphaL, second: BetaL }),
        ] {
            s.rules[l.index()][r.index()] = Some(a);
        }
        s
    }

    pub fn rule(&self, left: Gen, right: Gen) -> Option<RuleAction> {
        self.rules[left.index()][right.index()]
    }

    /// Replaces one rule; used to test that corrupted systems are caught.
    pub fn set_rule(&mut self, left: Gen, right: Gen, action: Option<RuleAction>) {
        self.rules[left.index()][right.index()] = action;
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().flatten().filter(|r| r.is_some()).count()
    }
}

type Letter = (Gen, usize);

/// An element of `UA` in `V₀` coordinates, reduced modulo `J`.
#[derive(Clone, Debug, PartialEq)]
pub struct UaElement<K: Field> {
    coords: SparseVec<K::Elem>,
}

impl<K: Field> UaElement<K> {
    pub fn coords(&self) -> &[(usize, K::Elem)] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Uea<K: Field> {
    alg: TriasAlgebra<K>,
    system: RewriteSystem,
    dimv: usize,
    /// Span of `J`, stored in reversed coordinates so pivots sit on the
    /// longest words and the surviving basis respects the filtration.
    ideal: Echelon<K>,
    basis: Vec<usize>,
    basis_pos: Vec<Option<usize>>,
    /// `table[i][j]` = product of basis elements `i`, `j` in basis coordinates.
    table: Vec<Vec<SparseVec<K::Elem>>>,
}

const MAX_REWRITE_DEPTH: usize = 64;

impl<K: Field> Uea<K> {
    pub fn new(alg: &TriasAlgebra<K>) -> Result<Self> {
        Self::with_system(alg, RewriteSystem::standard())
    }

    /// Builds and certifies the quotient for a given rewrite system.
    pub fn with_system(alg: &TriasAlgebra<K>, system: RewriteSystem) -> Result<Self> {
        let d = alg.dim();
        let dimv = 1 + 6 * d + 7 * d * d;
        let mut ua = Self {
            alg: alg.clone(),
            system,
            dimv,
            ideal: Echelon::new(alg.field().clone(), dimv),
            basis: Vec::new(),
            basis_pos: Vec::new(),
            table: Vec::new(),
        };
        ua.build_ideal()?;
        ua.build_table()?;
        ua.certify()?;
        Ok(ua)
    }

    pub fn algebra(&self) -> &TriasAlgebra<K> {
        &self.alg
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// `1 + 6d + 7d²`
    pub fn ambient_dim(&self) -> usize {
        self.dimv
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `V₀` indices of the basis monomials, ascending.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    fn field(&self) -> &K {
        self.alg.field()
    }

    fn letters(&self) -> Vec<Letter> {
        Gen::ALL.iter().flat_map(|&g| (0..self.alg.dim()).map(move |a| (g, a))).collect()
    }

    /// Coordinate of a normal word, or `None` if the word is not normal.
    fn normal_index(&self, word: &[Letter]) -> Option<usize> {
        let d = self.alg.dim();
        match word {
            [] => Some(0),
            [(g, a)] => Some(1 + g.index() * d + a),
            [(g1, a), (g2, b)] => {
                let s = QUADRATIC_SHAPES.iter().position(|&(x, y)| x == *g1 && y == *g2)?;
                Some(1 + 6 * d + s * d * d + a * d + b)
            }
            _ => None,
        }
    }

    /// The normal word with coordinate `idx`.
    pub fn word_of(&self, idx: usize) -> Vec<(Gen, usize)> {
        let d = self.alg.dim();
        if idx == 0 {
            Vec::new()
        } else if idx <= 6 * d {
            let i = idx - 1;
            vec![(Gen::from_index(i / d), i % d)]
        } else {
            let i = idx - 1 - 6 * d;
            let (s, r) = (i / (d * d), i % (d * d));
            let (g1, g2) = QUADRATIC_SHAPES[s];
            vec![(g1, r / d), (g2, r % d)]
        }
    }

    /// Filtration length of a `V₀` coordinate.
    pub fn length_of(&self, idx: usize) -> usize {
        self.word_of(idx).len()
    }

    fn reduce_into(&self, word: &[Letter], coef: &K::Elem, acc: &mut BTreeMap<usize, K::Elem>, depth: usize) -> Result<()> {
        let f = self.field();
        if f.is_zero(coef) {
            return Ok(());
        }
        if depth > MAX_REWRITE_DEPTH {
            return Err(Error::Certification("rewriting does not terminate".into()));
        }
        let hit = (0..word.len().saturating_sub(1)).find_map(|i| self.system.rule(word[i].0, word[i + 1].0).map(|r| (i, r)));
        let Some((i, action)) = hit else {
            let idx = self
                .normal_index(word)
                .ok_or_else(|| Error::Certification(format!("irreducible word of length {} is not a normal shape", word.len())))?;
            match acc.get_mut(&idx) {
                Some(v) => f.add_assign(v, coef),
                None => {
                    acc.insert(idx, coef.clone());
                }
            }
            return Ok(());
        };
        let (x, y) = (word[i].1, word[i + 1].1);
        let splice = |mid: &[Letter]| -> Vec<Letter> {
            let mut w = word[..i].to_vec();
            w.extend_from_slice(mid);
            w.extend_from_slice(&word[i + 2..]);
            w
        };
        match action {
            RuleAction::Merge { gen, op, flip } => {
                let (p, q) = if flip { (y, x) } else { (x, y) };
                for (c, v) in self.alg.mul_basis(op, p, q).iter().enumerate() {
                    if !f.is_zero(v) {
                        self.reduce_into(&splice(&[(gen, c)]), &f.mul(coef, v), acc, depth + 1)?;
                    }
                }
            }
            RuleAction::Reorder { first, second } => self.reduce_into(&splice(&[(first, y), (second, x)]), coef, acc, depth + 1)?,
            RuleAction::Rename { first, second } => self.reduce_into(&splice(&[(first, x), (second, y)]), coef, acc, depth + 1)?,
        }
        Ok(())
    }

    /// Rewrites a combination of words to `V₀` coordinates (not reduced mod `J`).
    fn reduce_words(&self, words: &[(Vec<Letter>, K::Elem)]) -> Result<SparseVec<K::Elem>> {
        let mut acc = BTreeMap::new();
        for (w, c) in words {
            self.reduce_into(w, c, &mut acc, 0)?;
        }
        Ok(collect_sparse(self.field(), acc))
    }

    /// Rewritten product of two `V₀` vectors (before reduction mod `J`).
    fn raw_product(&self, u: &[(usize, K::Elem)], v: &[(usize, K::Elem)]) -> Result<SparseVec<K::Elem>> {
        let f = self.field();
        let mut words = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                let mut w = self.word_of(*i);
                w.extend(self.word_of(*j));
                words.push((w, f.mul(a, b)));
            }
        }
        self.reduce_words(&words)
    }

    /// The words of one side of a relation, with coefficients.
    fn expr_words(&self, expr: &UaExpr, a: usize, b: usize) -> Vec<(Vec<Letter>, K::Elem)> {
        let f = self.field();
        let pick = |arg: Arg| if arg == Arg::A { a } else { b };
        match *expr {
            UaExpr::Word(g1, p, g2, q) => vec![(vec![(g1, pick(p)), (g2, pick(q))], f.one())],
            UaExpr::Single(g, op, p, q) => self
                .alg
                .mul_basis(op, pick(p), pick(q))
                .iter()
                .enumerate()
                .filter(|(_, v)| !f.is_zero(v))
                .map(|(c, v)| (vec![(g, c)], v.clone()))
                .collect(),
        }
    }

    fn reversed(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let mut r: SparseVec<K::Elem> = v.iter().map(|(i, c)| (self.dimv - 1 - i, c.clone())).collect();
        r.reverse();
        r
    }

    fn build_ideal(&mut self) -> Result<()> {
        let f = self.field().clone();
        let d = self.alg.dim();
        let letters = self.letters();
        let mut contexts: Vec<Option<Letter>> = vec![None];
        contexts.extend(letters.iter().copied().map(Some));
        let mut pending: Vec<SparseVec<K::Elem>> = Vec::new();

        for rel in &UA_RELATIONS {
            for a in 0..d {
                for b in 0..d {
                    let lhs = self.expr_words(&rel.lhs, a, b);
                    let rhs = self.expr_words(&rel.rhs, a, b);
                    for u in &contexts {
                        for v in &contexts {
                            let wrap = |side: &[(Vec<Letter>, K::Elem)], sign: &K::Elem| -> Vec<(Vec<Letter>, K::Elem)> {
                                side.iter()
                                    .map(|(w, c)| {
                                        let mut full: Vec<Letter> = u.iter().copied().collect();
                                        full.extend_from_slice(w);
                                        full.extend(v.iter().copied());
                                        (full, f.mul(sign, c))
                                    })
                                    .collect()
                            };
                            let mut words = wrap(&lhs, &f.one());
                            words.extend(wrap(&rhs, &f.neg(&f.one())));
                            pending.push(self.reduce_words(&words)?);
                        }
                    }
                }
            }
        }

        for &x in &letters {
            for &y in &letters {
                let xy = self.reduce_words(&[(vec![x, y], f.one())])?;
                for &z in &letters {
                    let yz = self.reduce_words(&[(vec![y, z], f.one())])?;
                    let zl = [(self.normal_index(&[z]).unwrap(), f.one())];
                    let xl = [(self.normal_index(&[x]).unwrap(), f.one())];
                    let left = self.raw_product(&xy, &zl)?;
                    let right = self.raw_product(&xl, &yz)?;
                    pending.push(crate::linalg::axpy(&f, &left, &f.neg(&f.one()), &right));
                }
            }
        }

        let letter_vecs: Vec<SparseVec<K::Elem>> = letters.iter().map(|l| vec![(self.normal_index(&[*l]).unwrap(), f.one())]).collect();
        while let Some(v) = pending.pop() {
            let r = self.reversed(&v);
            let reduced = self.ideal.reduce(&r);
            if reduced.is_empty() {
                continue;
            }
            self.ideal.insert(&reduced);
            let fresh = self.reversed(&reduced);
            for l in &letter_vecs {
                pending.push(self.raw_product(l, &fresh)?);
                pending.push(self.raw_product(&fresh, l)?);
            }
        }
        self.ideal.make_reduced();
        let mut basis: Vec<usize> = self.ideal.free_columns().into_iter().map(|c| self.dimv - 1 - c).collect();
        basis.sort_unstable();
        let mut pos = vec![None; self.dimv];
        for (i, &b) in basis.iter().enumerate() {
            pos[b] = Some(i);
        }
        if pos[0].is_none() {
            return Err(Error::Certification("the unit lies in the ideal".into()));
        }
        self.basis = basis;
        self.basis_pos = pos;
        Ok(())
    }

    /// Reduces a `V₀` vector modulo `J`; the result is supported on basis monomials.
    pub fn normal_form(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let r = self.ideal.reduce(&self.reversed(v));
        self.reversed(&r)
    }

    /// Basis coordinates of a `V₀` vector.
    pub fn to_basis_coords(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        self.normal_form(v).into_iter().map(|(i, c)| (self.basis_pos[i].expect("normal forms live on the basis"), c)).collect()
    }

    fn build_table(&mut self) -> Result<()> {
        let f = self.field().clone();
        let mut table = Vec::with_capacity(self.basis.len());
        for &i in &self.basis {
            let mut row = Vec::with_capacity(self.basis.len());
            for &j in &self.basis {
                let raw = self.raw_product(&[(i, f.one())], &[(j, f.one())])?;
                row.push(self.to_basis_coords(&raw));
            }
            table.push(row);
        }
        self.table = table;
        Ok(())
    }

    /// Product in basis coordinates.
    fn mul_coords(&self, u: &[(usize, K::Elem)], v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        let f = self.field();
        let mut acc: BTreeMap<usize, K::Elem> = BTreeMap::new();
        for (i, a) in u {
            for (j, b) in v {
                let c = f.mul(a, b);
                for (k, t) in &self.table[*i][*j] {
                    let add = f.mul(&c, t);
                    match acc.get_mut(k) {
                        Some(s) => f.add_assign(s, &add),
                        None => {
                            acc.insert(*k, add);
                        }
                    }
                }
            }
        }
        collect_sparse(f, acc)
    }

    fn certify(&self) -> Result<()> {
        let f = self.field();
        let q = self.basis.len();
        let letter_positions: Vec<usize> = (0..q).filter(|&i| self.length_of(self.basis[i]) == 1).collect();
        for &x in &letter_positions {
            for y in 0..q {
                let xy = self.mul_coords(&[(x, f.one())], &[(y, f.one())]);
                for z in 0..q {
                    let left = self.mul_coords(&xy, &[(z, f.one())]);
                    let yz = &self.table[y][z];
                    let right = self.mul_coords(&[(x, f.one())], yz);
                    if left != right {
                        return Err(Error::Certification(format!("associativity fails on basis triple ({x}, {y}, {z})")));
                    }
                }
            }
        }
        if let Some(rel) = self.relation_failures().first() {
            return Err(Error::Certification(format!("relation ({rel}) does not hold in the quotient")));
        }
        Ok(())
    }

    /// Relations (by number) that fail in the quotient.
    pub fn relation_failures(&self) -> Vec<usize> {
        let d = self.alg.dim();
        let f = self.field();
        let mut out = Vec::new();
        for rel in &UA_RELATIONS {
            let fails = (0..d).any(|a| {
                (0..d).any(|b| {
                    let mut words = self.expr_words(&rel.lhs, a, b);
                    words.extend(self.expr_words(&rel.rhs, a, b).into_iter().map(|(w, c)| (w, f.neg(&c))));
                    match self.reduce_words(&words) {
                        Ok(v) => !self.normal_form(&v).is_empty(),
                        Err(_) => true,
                    }
                })
            });
            if fails {
                out.push(rel.number);
            }
        }
        out
    }

    pub fn one(&self) -> UaElement<K> {
        UaElement { coords: vec![(0, self.field().one())] }
    }

    /// `g(a)` for a coordinate vector `a ∈ A`.
    pub fn embed(&self, g: Gen, a: &[K::Elem]) -> UaElement<K> {
        let d = self.alg.dim();
        let v: SparseVec<K::Elem> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field().is_zero(c))
            .map(|(i, c)| (1 + g.index() * d + i, c.clone()))
            .collect();
        UaElement { coords: self.normal_form(&v) }
    }

    /// The element with the given `V₀` coordinates, reduced modulo `J`.
    pub fn element(&self, coords: &[(usize, K::Elem)]) -> UaElement<K> {
        UaElement { coords: self.normal_form(coords) }
    }

    pub fn multiply(&self, u: &UaElement<K>, v: &UaElement<K>) -> UaElement<K> {
        let cu = self.to_basis_coords(&u.coords);
        let cv = self.to_basis_coords(&v.coords);
        let prod = self.mul_coords(&cu, &cv);
        UaElement { coords: prod.into_iter().map(|(k, c)| (self.basis[k], c)).collect() }
    }

    pub fn constant(&self, u: &UaElement<K>) -> K::Elem {
        u.coords.iter().find(|(i, _)| *i == 0).map_or(self.field().zero(), |(_, c)| c.clone())
    }

    /// The `d` coordinates of the linear block of `g`.
    pub fn linear_block(&self, u: &UaElement<K>, g: Gen) -> Vec<K::Elem> {
        let d = self.alg.dim();
        let start = 1 + g.index() * d;
        self.block(u, start, d)
    }

    /// The `d²` coordinates of quadratic shape `s` (see [`QUADRATIC_SHAPES`]).
    pub fn quadratic_block(&self, u: &UaElement<K>, s: usize) -> Vec<K::Elem> {
        let d = self.alg.dim();
        self.block(u, 1 + 6 * d + s * d * d, d * d)
    }

    fn block(&self, u: &UaElement<K>, start: usize, len: usize) -> Vec<K::Elem> {
        let mut out = vec![self.field().zero(); len];
        for (i, c) in &u.coords {
            if *i >= start && *i < start + len {
                out[i - start] = c.clone();
            }
        }
        out
    }

    /// Largest word length in the support (0 for zero).
    pub fn length(&self, u: &UaElement<K>) -> usize {
        u.coords.iter().map(|(i, _)| self.length_of(*i)).max().unwrap_or(0)
    }

    /// `dim Gr_k` for `k = 0, 1, 2`.
    pub fn gr_dims(&self) -> Vec<usize> {
        let f = self.field();
        let mut ech = self.ideal.clone();
        let mut dims = vec![0; 3];
        for idx in 0..self.dimv {
            if ech.insert(&self.reversed(&[(idx, f.one())])) {
                dims[self.length_of(idx)] += 1;
            }
        }
        dims
    }

    /// `F_k + J` as an echelon basis in reversed coordinates.
    fn filtration_span(&self, k: usize) -> Echelon<K> {
        let f = self.field();
        let mut ech = self.ideal.clone();
        for idx in 0..self.dimv {
            if self.length_of(idx) <= k {
                ech.insert(&self.reversed(&[(idx, f.one())]));
            }
        }
        ech
    }

    /// `UA` acting on itself from the right, as a corepresentation of `A`.
    pub fn as_corepresentation(&self) -> Result<Corepresentation<K>> {
        let f = self.field();
        let (q, d) = (self.dim(), self.alg.dim());
        let mut actions: [Tensor3<K::Elem>; 6] = std::array::from_fn(|_| Tensor3::zeros(f, [q, d, q]));
        for g in Gen::ALL {
            for a in 0..d {
                let letter = self.to_basis_coords(&[(1 + g.index() * d + a, f.one())]);
                for x in 0..q {
                    for (k, c) in self.mul_coords(&[(x, f.one())], &letter) {
                        actions[g.index()].set(x, a, k, c);
                    }
                }
            }
        }
        Corepresentation::new(f.clone(), d, q, actions)
    }

    /// Position of the unit in the basis of [`Self::as_corepresentation`].
    pub fn unit_position(&self) -> usize {
        self.basis_pos[0].expect("certified quotients contain the unit")
    }

    /// Operator of a basis monomial on a representation via
    /// `α_l(a)x = a⊣x, …, β_m(a)x = x⊥a`; words act left to right as composition.
    pub fn monomial_operator(&self, basis_position: usize, rep: &Representation<K>) -> ExactMatrix<K> {
        let f = self.field();
        let mut op = ExactMatrix::identity(f.clone(), rep.dim());
        for (g, a) in self.word_of(self.basis[basis_position]) {
            op = op.mul(&rep.generator_operator(g, a)).expect("square operators");
        }
        op
    }
}

/// `A` with all products set to zero.
pub fn abelianized<K: Field>(alg: &TriasAlgebra<K>) -> TriasAlgebra<K> {
    TriasAlgebra::abelian(alg.field().clone(), alg.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwReport {
    pub gr: Vec<usize>,
    pub gr_abelian: Vec<usize>,
    pub leading_terms_agree: bool,
    pub holds: bool,
}

/// Compares `Gr UA` with the enveloping algebra of the abelianized space.
pub fn pbw_check<K: Field>(alg: &TriasAlgebra<K>) -> Result<PbwReport> {
    pbw_check_with(alg, RewriteSystem::standard())
}

/// As [`pbw_check`], building `UA` with `system` and the reference side
/// with the standard rules. A system that fails certification yields `false`.
pub fn pbw_check_with<K: Field>(alg: &TriasAlgebra<K>, system: RewriteSystem) -> Result<PbwReport> {
    let reference = Uea::new(&abelianized(alg))?;
    let gr_abelian = reference.gr_dims();
    let ua = match Uea::with_system(alg, system) {
        Ok(ua) => ua,
        Err(Error::Certification(_)) => {
            return Ok(PbwReport { gr: Vec::new(), gr_abelian, leading_terms_agree: false, holds: false });
        }
        Err(e) => return Err(e),
    };
    let gr = ua.gr_dims();
    let f = alg.field();
    let span = ua.filtration_span(1);
    let letters = ua.letters();
    let mut agree = true;
    'outer: for &x in &letters {
        for &y in &letters {
            let a = ua.reduce_words(&[(vec![x, y], f.one())])?;
            let b = reference.reduce_words(&[(vec![x, y], f.one())])?;
            let diff = crate::linalg::axpy(f, &a, &f.neg(&f.one()), &b);
            if !span.contains(&ua.reversed(&diff)) {
                agree = false;
                break 'outer;
            }
        }
    }
    let holds = agree && gr == gr_abelian;
    Ok(PbwReport { gr, gr_abelian, leading_terms_agree: agree, holds })
}

/// Checks a representation against the relations through the generator dictionary.
pub fn representation_to_left_module_check<K: Field>(alg: &TriasAlgebra<K>, rep: &Representation<K>) -> Result<bool> {
    Ok(rep.left_module_violations(alg)?.is_empty())
}
