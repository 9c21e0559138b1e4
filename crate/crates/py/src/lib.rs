//! Python bindings. Field elements cross the boundary as strings in the
//! library's literal grammar ("3/4", "1+2i", residues for GF(p)); Python ints
//! are accepted on input too.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use evoalg_core::classify::{self, Classification};
use evoalg_core::cli;
use evoalg_core::families::{self, FamilySpec};
use evoalg_core::oracle::{self, SearchBudget};
use evoalg_core::{Error, EvolutionAlgebra, FieldDescriptor, FieldElement, Matrix, Verdict};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn element(x: &Bound<'_, PyAny>, field: FieldDescriptor) -> PyResult<FieldElement> {
    FieldElement::parse(&x.str()?.to_string(), field).map_err(err)
}

fn elements(xs: &[Bound<'_, PyAny>], field: FieldDescriptor) -> PyResult<Vec<FieldElement>> {
    xs.iter().map(|x| element(x, field)).collect()
}

fn strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn field(text: &str) -> PyResult<FieldDescriptor> {
    cli::parse_field(text).map_err(err)
}

/// An evolution algebra in a natural basis; row i holds the coordinates of eᵢ².
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: EvolutionAlgebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(field_name: &str, rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let f = field(field_name)?;
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(PyValueError::new_err("the structure matrix must be square"));
            }
            data.extend(elements(row, f)?);
        }
        let m = Matrix::new(f, n, n, data).map_err(err)?;
        Ok(PyAlgebra {
            inner: EvolutionAlgebra::from_matrix(m).map_err(err)?,
        })
    }

    /// Parses the algebra file format used by the command line tool.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: cli::parse_algebra(text).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        cli::write_algebra(&self.inner)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    fn structure(&self) -> Vec<Vec<String>> {
        strings(self.inner.structure())
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.upper_series().nilpotent
    }

    /// The type vector, or None when the algebra is not nilpotent.
    fn type_vector(&self) -> Option<Vec<usize>> {
        let s = self.inner.upper_series();
        s.nilpotent.then_some(s.type_vector)
    }

    /// Basis indices of U₁, U₂, … in order.
    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.upper_series().blocks
    }

    /// The canonical label, or the labels of the summands joined by " + "
    /// after "decomposed ".
    fn classify(&self) -> PyResult<String> {
        Ok(classify::classify(&self.inner).map_err(err)?.to_string())
    }

    /// Labels of the indecomposable summands, sorted.
    fn summands(&self) -> PyResult<Vec<String>> {
        let c = classify::classify(&self.inner).map_err(err)?;
        Ok(c.labels().iter().map(ToString::to_string).collect())
    }

    /// Whether the classifier could also build a basis change to the template.
    fn witness_available(&self) -> PyResult<bool> {
        Ok(match classify::classify(&self.inner).map_err(err)? {
            Classification::Indecomposable { witness_available, .. } => witness_available,
            Classification::Decomposed(_) => classify::normal_form(&self.inner).map_err(err)?.map.is_some(),
        })
    }

    /// ("decomposable" | "indecomposable" | "unknown", rule, witness ideals as
    /// basis lists or None).
    #[allow(clippy::type_complexity)]
    fn decompose(&self) -> (String, Option<String>, Option<(Vec<Vec<String>>, Vec<Vec<String>>)>) {
        let basis = |s: &evoalg_core::Subspace| -> Vec<Vec<String>> {
            s.basis_vectors().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
        };
        match self.inner.decomposability_check() {
            Verdict::Decomposable { rule, witness } => (
                "decomposable".into(),
                Some(format!("{rule:?}")),
                witness.map(|(i, j)| (basis(&i), basis(&j))),
            ),
            Verdict::Indecomposable(rule) => ("indecomposable".into(), Some(format!("{rule:?}")), None),
            Verdict::Unknown => ("unknown".into(), None, None),
        }
    }

    fn dot(&self) -> String {
        cli::emit_dot(&self.inner.graph())
    }

    fn __repr__(&self) -> String {
        format!("Algebra(field={}, dim={})", self.inner.field(), self.inner.dim())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// A basis change from `a` to `b` built by the classifier (columns are the
/// images of a's basis), or None when the labels differ.
#[pyfunction]
fn isomorphism(a: &PyAlgebra, b: &PyAlgebra) -> PyResult<Option<Vec<Vec<String>>>> {
    let w = classify::witness_isomorphism(&a.inner, &b.inner).map_err(err)?;
    Ok(w.as_ref().map(strings))
}

/// Brute-force search over GF(p). With mode "randomized", None is not a proof
/// of non-isomorphism.
#[pyfunction]
#[pyo3(signature = (a, b, mode = "exhaustive", trials = 10_000, seed = 0))]
fn search_isomorphism(
    a: &PyAlgebra,
    b: &PyAlgebra,
    mode: &str,
    trials: u64,
    seed: u64,
) -> PyResult<Option<Vec<Vec<String>>>> {
    let budget = match mode {
        "exhaustive" => SearchBudget::exhaustive(),
        "randomized" => SearchBudget::randomized(trials, seed),
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let w = oracle::search_iso(&a.inner, &b.inner, budget).map_err(err)?;
    Ok(w.as_ref().map(strings))
}

/// Entries of the classification in one dimension as (type vector, variant, arity).
#[pyfunction]
#[pyo3(signature = (dim, field_name = "Qi"))]
fn canonical_table(dim: usize, field_name: &str) -> PyResult<Vec<(Vec<usize>, usize, usize)>> {
    let t = classify::canonical_table(dim, field(field_name)?).map_err(err)?;
    Ok(t.iter().map(|e| (e.type_vector(), e.variant(), e.arity())).collect())
}

/// The canonical algebra of a table entry.
#[pyfunction]
#[pyo3(signature = (type_vector, variant, params = Vec::new(), field_name = "Qi"))]
fn template(
    type_vector: Vec<usize>,
    variant: usize,
    params: Vec<Bound<'_, PyAny>>,
    field_name: &str,
) -> PyResult<PyAlgebra> {
    let f = field(field_name)?;
    let dim = type_vector.iter().sum();
    let entry = classify::canonical_table(dim, f)
        .map_err(err)?
        .into_iter()
        .find(|e| e.type_vector() == type_vector && e.variant() == variant)
        .ok_or_else(|| PyValueError::new_err("no such table entry"))?;
    let p = elements(&params, f)?;
    Ok(PyAlgebra {
        inner: entry.structure_template(&p).map_err(err)?,
    })
}

/// One of the parametric families E(U,b), E(U,b,g), E(U,b,f,g), E(U,b,u),
/// given by the Gram diagonal `b` and eigenvalue or coordinate lists.
#[pyfunction]
#[pyo3(signature = (kind, b, f = None, g = None, u = None, field_name = "Q"))]
fn family(
    kind: &str,
    b: Vec<Bound<'_, PyAny>>,
    f: Option<Vec<Bound<'_, PyAny>>>,
    g: Option<Vec<Bound<'_, PyAny>>>,
    u: Option<Vec<Bound<'_, PyAny>>>,
    field_name: &str,
) -> PyResult<PyAlgebra> {
    let fd = field(field_name)?;
    let need = |name: &str, xs: Option<Vec<Bound<'_, PyAny>>>| -> PyResult<Vec<FieldElement>> {
        let xs = xs.ok_or_else(|| PyValueError::new_err(format!("this family needs {name}")))?;
        elements(&xs, fd)
    };
    let b = elements(&b, fd)?;
    let spec = match kind {
        "ub" => FamilySpec::ub(b),
        "ubg" => FamilySpec::ubg(b, need("g", g)?),
        "ubfg" => FamilySpec::ubfg(b, need("f", f)?, need("g", g)?),
        "ubu" => FamilySpec::ubu(b, need("u", u)?),
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    }
    .map_err(err)?;
    Ok(PyAlgebra {
        inner: families::build(&spec).map_err(err)?,
    })
}

#[pymodule]
#[pyo3(name = "evoalg")]
fn evoalg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(search_isomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_table, m)?)?;
    m.add_function(wrap_pyfunction!(template, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    Ok(())
}
