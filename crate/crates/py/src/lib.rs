//! Python bindings: an `Algebra` class over ℚ or 𝔽_p plus a few free functions.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use triassoc::algebra::{GradedFreeAlgebra, Op, Tensor3, TriasAlgebra};
use triassoc::complexes::{circ_product, cohomology_dim, graded_homology_slice, homology_dim};
use triassoc::deform::{infinitesimal, rigidity_probe};
use triassoc::io::{header_field, parse_document, write_algebra, Document, FieldSpec};
use triassoc::linalg::{Field, PrimeField, Rationals};
use triassoc::trees::enumerate;
use triassoc::uea::{pbw_check, Uea};
use triassoc::{Error, Limits};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

enum Inner {
    Q(Document<Rationals>),
    P(Document<PrimeField>),
}

/// Runs the body with `$d` bound to the document, whichever the field.
macro_rules! with_doc {
    ($self:expr, |$d:ident| $body:expr) => {
        match &$self.inner {
            Inner::Q($d) => $body,
            Inner::P($d) => $body,
        }
    };
}

fn document_from<K: Field>(alg: TriasAlgebra<K>) -> Document<K> {
    Document { algebra: alg, reps: Vec::new(), coreps: Vec::new(), deformations: Vec::new() }
}

fn products_from<K: Field>(field: K, dim: usize, tables: [Vec<(usize, usize, usize, i64)>; 3]) -> PyResult<TriasAlgebra<K>> {
    let mut products: [Tensor3<K::Elem>; 3] = std::array::from_fn(|_| Tensor3::zeros(&field, [dim, dim, dim]));
    for (op, table) in Op::ALL.into_iter().zip(tables) {
        for (i, j, k, c) in table {
            if i >= dim || j >= dim || k >= dim {
                return Err(PyValueError::new_err(format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            products[op.index()].set(i, j, k, field.from_i64(c));
        }
    }
    TriasAlgebra::new(field, dim, products).map_err(to_py)
}

/// A finite-dimensional triassociative algebra together with any named
/// representations, corepresentations and deformations read from a file.
#[pyclass(module = "pytriassoc")]
struct Algebra {
    inner: Inner,
    limits: Limits,
}

#[pyclass(module = "pytriassoc", get_all, skip_from_py_object)]
#[derive(Clone)]
struct Rigidity {
    h2: usize,
    h3: usize,
    rigid: bool,
    /// `(reached, obstructed_at)` per basis class of H².
    ladders: Vec<(usize, Option<usize>)>,
}

#[pymethods]
impl Rigidity {
    fn __repr__(&self) -> String {
        let ladders: Vec<String> = self
            .ladders
            .iter()
            .map(|(reached, at)| format!("({reached}, {})", at.map_or("None".to_string(), |n| n.to_string())))
            .collect();
        let rigid = if self.rigid { "True" } else { "False" };
        format!("Rigidity(h2={}, h3={}, rigid={rigid}, ladders=[{}])", self.h2, self.h3, ladders.join(", "))
    }
}

impl Algebra {
    fn wrap(inner: Inner) -> Self {
        Self { inner, limits: Limits::default() }
    }
}

#[pymethods]
impl Algebra {
    /// Parses the text format; `field` (`"q"` or `"p:<prime>"`) overrides the header.
    #[staticmethod]
    #[pyo3(signature = (text, field=None))]
    fn from_text(text: &str, field: Option<&str>) -> PyResult<Self> {
        let spec = match field {
            Some(f) => FieldSpec::parse_flag(f),
            None => header_field(text),
        }
        .map_err(to_py)?;
        let inner = match spec {
            FieldSpec::Rationals => Inner::Q(parse_document(text, &Rationals).map_err(to_py)?),
            FieldSpec::Prime(p) => Inner::P(parse_document(text, &PrimeField::new(p).map_err(to_py)?).map_err(to_py)?),
        };
        Ok(Self::wrap(inner))
    }

    /// Builds an algebra from sparse integer structure constants
    /// `(i, j, k, c)`, meaning `e_i * e_j` has coefficient `c` on `e_k`.
    #[staticmethod]
    #[pyo3(signature = (dim, left, right, middle, field="q"))]
    fn from_products(
        dim: usize,
        left: Vec<(usize, usize, usize, i64)>,
        right: Vec<(usize, usize, usize, i64)>,
        middle: Vec<(usize, usize, usize, i64)>,
        field: &str,
    ) -> PyResult<Self> {
        let tables = [left, right, middle];
        let inner = match FieldSpec::parse_flag(field).map_err(to_py)? {
            FieldSpec::Rationals => Inner::Q(document_from(products_from(Rationals, dim, tables)?)),
            FieldSpec::Prime(p) => Inner::P(document_from(products_from(PrimeField::new(p).map_err(to_py)?, dim, tables)?)),
        };
        Ok(Self::wrap(inner))
    }

    /// The algebra of dimension `dim` with all products zero.
    #[staticmethod]
    #[pyo3(signature = (dim, field="q"))]
    fn abelian(dim: usize, field: &str) -> PyResult<Self> {
        let inner = match FieldSpec::parse_flag(field).map_err(to_py)? {
            FieldSpec::Rationals => Inner::Q(document_from(TriasAlgebra::abelian(Rationals, dim))),
            FieldSpec::Prime(p) => Inner::P(document_from(TriasAlgebra::abelian(PrimeField::new(p).map_err(to_py)?, dim))),
        };
        Ok(Self::wrap(inner))
    }

    /// Caps the degree and the size of any one space.
    fn set_limits(&mut self, n_max: usize, budget: usize) -> PyResult<()> {
        self.limits = Limits::new(n_max, budget).map_err(to_py)?;
        Ok(())
    }

    #[getter]
    fn dim(&self) -> usize {
        with_doc!(self, |d| d.algebra.dim())
    }

    #[getter]
    fn field(&self) -> String {
        with_doc!(self, |d| d.algebra.field().tag())
    }

    fn to_text(&self) -> String {
        with_doc!(self, |d| write_algebra(&d.algebra))
    }

    /// Numbers of the axioms that fail on some basis triple.
    fn axiom_failures(&self) -> Vec<usize> {
        let mut out: Vec<usize> = with_doc!(self, |d| d.algebra.check_axioms().iter().map(|v| v.axiom).collect());
        out.dedup();
        out
    }

    fn is_triassociative(&self) -> bool {
        with_doc!(self, |d| d.algebra.is_triassociative())
    }

    /// `dim H^n(A, M)` for a named representation (`adjoint`, `zero:<m>`, or from the file).
    #[pyo3(signature = (n, rep="adjoint"))]
    fn cohomology(&self, n: usize, rep: &str) -> PyResult<usize> {
        with_doc!(self, |d| {
            let m = d.resolve_rep(rep).map_err(to_py)?;
            cohomology_dim(&d.algebra, &m, n, &self.limits).map_err(to_py)
        })
    }

    /// `dim H_n(A, N)` for a named corepresentation (`trivial`, `ua`, `zero:<m>`, `op:<rep>`, or from the file).
    #[pyo3(signature = (n, corep="trivial"))]
    fn homology(&self, n: usize, corep: &str) -> PyResult<usize> {
        with_doc!(self, |d| {
            let c = d.resolve_corep(corep).map_err(to_py)?;
            homology_dim(&d.algebra, &c, n, &self.limits).map_err(to_py)
        })
    }

    /// Dimensions of the associated graded pieces of the enveloping algebra.
    fn uea_gr_dims(&self) -> PyResult<Vec<usize>> {
        with_doc!(self, |d| Ok(Uea::new(&d.algebra).map_err(to_py)?.gr_dims()))
    }

    fn pbw_holds(&self) -> PyResult<bool> {
        with_doc!(self, |d| Ok(pbw_check(&d.algebra).map_err(to_py)?.holds))
    }

    #[pyo3(signature = (max_order=3))]
    fn rigidity(&self, max_order: usize) -> PyResult<Rigidity> {
        with_doc!(self, |d| {
            let r = rigidity_probe(&d.algebra, max_order, &self.limits).map_err(to_py)?;
            Ok(Rigidity { h2: r.h2, h3: r.h3, rigid: r.rigid, ladders: r.ladders.iter().map(|l| (l.reached, l.obstructed_at)).collect() })
        })
    }

    /// Names of the deformations read from the file.
    fn deformations(&self) -> Vec<String> {
        with_doc!(self, |d| d.deformations.iter().map(|(n, _)| n.clone()).collect())
    }

    /// `(order, axiom)` pairs where the named deformation fails, up to its order.
    fn deformation_failures(&self, name: &str) -> PyResult<Vec<(usize, usize)>> {
        with_doc!(self, |d| {
            let def = d.deformation(name).ok_or_else(|| PyValueError::new_err(format!("no deformation named `{name}`")))?;
            let mut out: Vec<(usize, usize)> = (1..=def.order()).flat_map(|n| def.check_order(n)).map(|v| (v.order, v.axiom)).collect();
            out.dedup();
            Ok(out)
        })
    }

    /// Whether the named deformation's obstruction to extending vanishes.
    fn obstruction_vanishes(&self, name: &str) -> PyResult<bool> {
        with_doc!(self, |d| {
            let def = d.deformation(name).ok_or_else(|| PyValueError::new_err(format!("no deformation named `{name}`")))?;
            Ok(def.obstruction().map_err(to_py)?.is_empty())
        })
    }

    /// `(order, is_cocycle)` of the named deformation's infinitesimal.
    fn infinitesimal(&self, name: &str) -> PyResult<(usize, bool)> {
        with_doc!(self, |d| {
            let def = d.deformation(name).ok_or_else(|| PyValueError::new_err(format!("no deformation named `{name}`")))?;
            let inf = infinitesimal(def, &self.limits).map_err(to_py)?;
            Ok((inf.order, inf.is_cocycle))
        })
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, field={})", self.dim(), self.field())
    }
}

/// The planar trees of degree `n` in canonical order.
#[pyfunction]
fn trees(n: usize) -> PyResult<Vec<String>> {
    if n > triassoc::limits::MAX_DEGREE_CAP {
        return Err(PyRuntimeError::new_err(format!("degree {n} exceeds the cap")));
    }
    Ok(enumerate(n).iter().map(ToString::to_string).collect())
}

/// The product symbol `∘_i` for each tree of degree `n`.
#[pyfunction]
fn circ_row(n: usize, i: usize) -> PyResult<Vec<String>> {
    enumerate(n).iter().map(|t| circ_product(t, i).map(|op| op.symbol().to_string()).map_err(to_py)).collect()
}

fn free_algebra<K: Field>(field: K, generators: usize, degree: usize) -> PyResult<GradedFreeAlgebra<K>> {
    GradedFreeAlgebra::new(field, generators, degree, Limits::default().budget).map_err(to_py)
}

/// Slice dimensions of the free algebra on `generators` generators, degrees 1..=degree.
#[pyfunction]
#[pyo3(signature = (generators, degree, field="q"))]
fn free_slice_dims(generators: usize, degree: usize, field: &str) -> PyResult<Vec<usize>> {
    match FieldSpec::parse_flag(field).map_err(to_py)? {
        FieldSpec::Rationals => Ok(free_algebra(Rationals, generators, degree)?.slice_dims()),
        FieldSpec::Prime(p) => Ok(free_algebra(PrimeField::new(p).map_err(to_py)?, generators, degree)?.slice_dims()),
    }
}

/// Weight-`w` part of `H_n` with trivial coefficients of the truncated free algebra.
#[pyfunction]
#[pyo3(signature = (generators, degree, n, w, field="q"))]
fn free_homology(generators: usize, degree: usize, n: usize, w: usize, field: &str) -> PyResult<usize> {
    let limits = Limits::default();
    match FieldSpec::parse_flag(field).map_err(to_py)? {
        FieldSpec::Rationals => graded_homology_slice(&free_algebra(Rationals, generators, degree)?, n, w, &limits).map_err(to_py),
        FieldSpec::Prime(p) => graded_homology_slice(&free_algebra(PrimeField::new(p).map_err(to_py)?, generators, degree)?, n, w, &limits).map_err(to_py),
    }
}

#[pymodule]
fn pytriassoc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Rigidity>()?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(circ_row, m)?)?;
    m.add_function(wrap_pyfunction!(free_slice_dims, m)?)?;
    m.add_function(wrap_pyfunction!(free_homology, m)?)?;
    Ok(())
}
