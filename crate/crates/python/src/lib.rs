//! Python bindings: root systems and cells, Tate motives, and loop-group
//! matrices with their lattice, Cartan, Birkhoff and chart operations.
//!
//! Matrix entries cross the boundary as strings in the Laurent grammar
//! (`"2*t^-1 + 3"`), coweights as lists of ints.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use loopgrass::algebra::{Field, LaurentMatrix, LaurentPoly};
use loopgrass::cells;
use loopgrass::lattice_model::{self, BirkhoffOutcome, WindowLattice};
use loopgrass::matrix_file;
use loopgrass::motive;
use loopgrass::rootdata::{Coweight, RootSystem};
use loopgrass::Error;

fn err(e: Error) -> PyErr {
    match e {
        Error::InternalInconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A Weyl group element as `(source, signs)`.
type Signed = (Vec<usize>, Vec<i64>);

fn field_from(name: &str) -> PyResult<Field> {
    Field::parse(name).map_err(err)
}

fn field_from_char(char: u64) -> PyResult<Field> {
    if char == 0 {
        Ok(Field::Rational)
    } else {
        Field::prime(char).map_err(err)
    }
}

#[pyclass(name = "RootSystem", module = "loopgrass", frozen)]
struct PyRootSystem {
    inner: RootSystem,
}

impl PyRootSystem {
    fn coweight(&self, mu: Vec<i64>) -> PyResult<Coweight> {
        self.inner.coweight(mu).map_err(err)
    }
}

#[pymethods]
impl PyRootSystem {
    /// `RootSystem("A2sl")`, `"A3gl"`, `"B2"`, `"C3"`, `"D4"`.
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyRootSystem {
            inner: name.parse().map_err(err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    #[getter]
    fn simply_connected(&self) -> bool {
        self.inner.is_simply_connected()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().to_vec()
    }

    fn exponents(&self) -> Vec<u32> {
        self.inner.exponents()
    }

    fn weyl_group_order(&self) -> PyResult<usize> {
        Ok(self.inner.weyl_group().map_err(err)?.len())
    }

    /// `(mu_plus, (source, signs))` with `w · mu = mu_plus`.
    fn dominant_rep(&self, mu: Vec<i64>) -> PyResult<(Vec<i64>, Signed)> {
        let (dom, w) = self.inner.dominant_rep(&self.coweight(mu)?);
        Ok((dom.into_coords(), (w.source().to_vec(), w.signs().to_vec())))
    }

    fn cell_dim(&self, mu: Vec<i64>) -> PyResult<u64> {
        Ok(cells::cell_dim(&self.inner, &self.coweight(mu)?))
    }

    fn min_coset_length(&self, mu: Vec<i64>) -> PyResult<u64> {
        cells::min_coset_length_oracle(&self.inner, &self.coweight(mu)?).map_err(err)
    }

    /// `[(mu, dim, component), ...]`; `components` is an inclusive pair and
    /// only matters for `A<r>gl`.
    #[pyo3(signature = (max_dim, components = (0, 0)))]
    fn cells(&self, max_dim: u64, components: (i64, i64)) -> Vec<(Vec<i64>, u64, i64)> {
        cells::enumerate_cells_in_components(&self.inner, max_dim, components.0..=components.1)
            .into_iter()
            .map(|c| (c.mu.into_coords(), c.dim, c.component))
            .collect()
    }

    fn cell_series(&self, max_dim: u64) -> Vec<u64> {
        cells::cell_series(&self.inner, max_dim).coeffs().to_vec()
    }

    fn product_formula(&self, max_dim: u64) -> PyResult<Vec<u64>> {
        Ok(cells::product_formula_series(&self.inner, max_dim)
            .map_err(err)?
            .coeffs()
            .to_vec())
    }

    #[pyo3(signature = (max_twist, char = 0))]
    fn motive(&self, max_twist: u64, char: u64) -> PyResult<PyTateSum> {
        Ok(PyTateSum {
            inner: motive::motive_of_gr(&self.inner, max_twist, field_from_char(char)?),
        })
    }

    #[pyo3(signature = (stage, char = 0))]
    fn stage_motive(&self, stage: i64, char: u64) -> PyResult<PyTateSum> {
        Ok(PyTateSum {
            inner: motive::motive_of_stage(&self.inner, stage, field_from_char(char)?)
                .map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.label())
    }
}

#[pyclass(name = "TateSum", module = "loopgrass", frozen)]
struct PyTateSum {
    inner: motive::TateSum,
}

#[pymethods]
impl PyTateSum {
    #[getter]
    fn coefficients(&self) -> String {
        self.inner.coefficient_tag()
    }

    #[getter]
    fn truncated_at(&self) -> Option<u64> {
        self.inner.truncated_at()
    }

    /// `{twist: multiplicity}` for the nonzero summands.
    fn multiplicities(&self) -> std::collections::BTreeMap<u64, u64> {
        self.inner.multiplicities().clone()
    }

    fn poincare(&self) -> Vec<u64> {
        self.inner.poincare().coeffs().to_vec()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(
    name = "LaurentMatrix",
    module = "loopgrass",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyLaurentMatrix {
    inner: LaurentMatrix,
}

fn wrap(inner: LaurentMatrix) -> PyLaurentMatrix {
    PyLaurentMatrix { inner }
}

#[pymethods]
impl PyLaurentMatrix {
    /// Square matrix from rows of Laurent strings over `field` (`"Q"`,
    /// `"F5"`, ...). The determinant must be a unit `c·t^k`.
    #[new]
    #[pyo3(signature = (rows, field = "Q"))]
    fn new(rows: Vec<Vec<String>>, field: &str) -> PyResult<Self> {
        let field = field_from(field)?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| LaurentPoly::parse(field, s))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        Ok(wrap(LaurentMatrix::invertible(field, parsed).map_err(err)?))
    }

    /// Parses the JSON matrix-file format.
    #[staticmethod]
    #[pyo3(signature = (text, field = None))]
    fn from_json(text: &str, field: Option<&str>) -> PyResult<Self> {
        let field = field.map(field_from).transpose()?;
        Ok(wrap(
            matrix_file::parse_matrix_json(text, field).map_err(err)?,
        ))
    }

    #[staticmethod]
    #[pyo3(signature = (mu, field = "Q"))]
    fn torus_point(mu: Vec<i64>, field: &str) -> PyResult<Self> {
        Ok(wrap(lattice_model::torus_point(
            field_from(field)?,
            &Coweight::new(mu),
        )))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    fn entries(&self) -> Vec<Vec<String>> {
        self.inner
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect()
    }

    fn to_json(&self) -> String {
        matrix_file::matrix_to_json(&self.inner)
    }

    fn det(&self) -> String {
        self.inner.det().to_string()
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(wrap(self.inner.inverse().map_err(err)?))
    }

    fn __matmul__(&self, other: &PyLaurentMatrix) -> PyResult<Self> {
        Ok(wrap(self.inner.mul(&other.inner).map_err(err)?))
    }

    fn __eq__(&self, other: &PyLaurentMatrix) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "LaurentMatrix({:?}, field='{}')",
            self.entries(),
            self.inner.field()
        )
    }
}

#[pyclass(name = "WindowLattice", module = "loopgrass", frozen)]
struct PyWindowLattice {
    inner: WindowLattice,
}

#[pymethods]
impl PyWindowLattice {
    #[getter]
    fn window(&self) -> i64 {
        self.inner.window()
    }

    #[getter]
    fn component(&self) -> i64 {
        self.inner.component()
    }

    /// Basis of `t^N L` as a polynomial matrix.
    fn basis(&self) -> PyLaurentMatrix {
        wrap(self.inner.basis())
    }

    /// `t^-N` times the basis: a loop representing the lattice.
    fn generator(&self) -> PyLaurentMatrix {
        wrap(self.inner.generator())
    }

    fn pivot_valuations(&self) -> Vec<i64> {
        self.inner.pivot_valuations()
    }

    fn to_json(&self) -> String {
        matrix_file::lattice_to_json(&self.inner)
    }

    fn __eq__(&self, other: &PyWindowLattice) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn lattice_of(m: &PyLaurentMatrix) -> PyResult<PyWindowLattice> {
    Ok(PyWindowLattice {
        inner: lattice_model::lattice_of(&m.inner).map_err(err)?,
    })
}

#[pyfunction]
fn equal_in_gr(a: &PyLaurentMatrix, b: &PyLaurentMatrix) -> PyResult<bool> {
    lattice_model::equal_in_gr(&a.inner, &b.inner).map_err(err)
}

#[pyfunction]
fn cartan_coweight(m: &PyLaurentMatrix) -> PyResult<Vec<i64>> {
    Ok(lattice_model::cartan_coweight(&m.inner)
        .map_err(err)?
        .into_coords())
}

#[pyfunction]
fn beta_based_loop(m: &PyLaurentMatrix) -> PyResult<PyLaurentMatrix> {
    Ok(wrap(lattice_model::beta_based_loop(&m.inner).map_err(err)?))
}

/// `(A, B)` with `M = A·B`, or `None` outside the big cell.
#[pyfunction]
fn birkhoff(m: &PyLaurentMatrix) -> PyResult<Option<(PyLaurentMatrix, PyLaurentMatrix)>> {
    Ok(
        match lattice_model::birkhoff_factorize(&m.inner).map_err(err)? {
            BirkhoffOutcome::Factored(w) => Some((wrap(w.negative), wrap(w.positive))),
            BirkhoffOutcome::NotInBigCell => None,
        },
    )
}

/// `(nu, (source, signs), A, B)` with `M = t^nu · w · A · B`.
#[pyfunction]
#[pyo3(signature = (m, bound = 6))]
fn chart_translate(
    m: &PyLaurentMatrix,
    bound: i64,
) -> PyResult<(Vec<i64>, Signed, PyLaurentMatrix, PyLaurentMatrix)> {
    let c = lattice_model::find_chart_translate(&m.inner, bound).map_err(err)?;
    Ok((
        c.nu.into_coords(),
        (c.w.source().to_vec(), c.w.signs().to_vec()),
        wrap(c.witness.negative),
        wrap(c.witness.positive),
    ))
}

/// Exhaustive count of lattices in the window `t^N Λ₀ ⊆ L ⊆ t^-N Λ₀` over `F_q`.
#[pyfunction]
fn count_lattices(n: usize, q: u32, window: usize, component: i64) -> PyResult<u64> {
    lattice_model::count_lattices_in_window(n, q, window, component).map_err(err)
}

/// `[(suite, passed, detail), ...]` using the built-in golden files.
#[pyfunction]
fn selftest() -> Vec<(String, bool, String)> {
    loopgrass::selftest::run_suites(None)
        .into_iter()
        .map(|r| (r.name.to_string(), r.passed, r.detail))
        .collect()
}

#[pymodule]
#[pyo3(name = "loopgrass")]
fn loopgrass_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<PyTateSum>()?;
    m.add_class::<PyLaurentMatrix>()?;
    m.add_class::<PyWindowLattice>()?;
    m.add_function(wrap_pyfunction!(lattice_of, m)?)?;
    m.add_function(wrap_pyfunction!(equal_in_gr, m)?)?;
    m.add_function(wrap_pyfunction!(cartan_coweight, m)?)?;
    m.add_function(wrap_pyfunction!(beta_based_loop, m)?)?;
    m.add_function(wrap_pyfunction!(birkhoff, m)?)?;
    m.add_function(wrap_pyfunction!(chart_translate, m)?)?;
    m.add_function(wrap_pyfunction!(count_lattices, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
