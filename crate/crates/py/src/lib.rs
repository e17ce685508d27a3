//! Python module `rrca`: groups, parameters, Verma modules and Gordon records.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rrca::cherednik::{euler_families, CherednikParameter};
use rrca::exactalg::Scalar;
use rrca::lift::poincare_series;
use rrca::refgroup::{load_group, ReflectionGroup};
use rrca::restricted::bad_primes;
use rrca::verma::{check_module_relations, verma_module, GradedModule};
use rrca_cli::commands::{gordon_record, run_compare, GordonArgs};
use rrca_cli::{parse_irrep, resolve_parameter, CliError, GordonRecord, ParameterInput, ResolvedParameter};

fn py_err(e: CliError) -> PyErr {
    if e.exit_code() == 2 {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

/// A complex reflection group from the shipped database (or `RRCA_GROUP_DIR`).
#[pyclass(frozen, module = "rrca")]
pub struct Group {
    inner: Arc<ReflectionGroup>,
    id: String,
}

/// Cherednik parameter `c` at `t = 0`, one value per reflection class.
#[pyclass(frozen, module = "rrca")]
pub struct Parameter {
    c: Vec<Scalar>,
    description: String,
}

#[pyclass(frozen, module = "rrca")]
pub struct VermaModule {
    group: Arc<ReflectionGroup>,
    param: CherednikParameter,
    module: GradedModule,
}

/// Result of a Gordon run, in the same form as the command-line record files.
#[pyclass(frozen, module = "rrca")]
pub struct Record {
    inner: GordonRecord,
}

impl Group {
    fn resolve(&self, input: ParameterInput) -> PyResult<Parameter> {
        let ResolvedParameter { c, description } = resolve_parameter(&self.inner, &input).map_err(py_err)?;
        Ok(Parameter { c, description })
    }

    fn irrep(&self, irrep: &Bound<'_, PyAny>) -> PyResult<usize> {
        let text = match irrep.extract::<usize>() {
            Ok(i) => i.to_string(),
            Err(_) => irrep.extract::<String>()?,
        };
        parse_irrep(&self.inner, &text).map_err(py_err)
    }
}

#[pymethods]
impl Group {
    #[new]
    pub fn new(id: &str) -> PyResult<Self> {
        let g = load_group(id).map_err(|e| py_err(e.into()))?;
        Ok(Group { inner: Arc::new(g), id: id.to_string() })
    }

    #[getter]
    pub fn name(&self) -> String {
        self.id.clone()
    }

    #[getter]
    pub fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    pub fn rank(&self) -> usize {
        self.inner.dim()
    }

    /// Irrep labels such as `phi_{1,4}`, in irrep order.
    #[getter]
    pub fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(|l| l.to_string()).collect()
    }

    #[getter]
    pub fn irrep_dims(&self) -> Vec<usize> {
        self.inner.irreps().iter().map(|r| r.dim).collect()
    }

    #[getter]
    pub fn reflection_classes(&self) -> usize {
        self.inner.num_reflection_classes()
    }

    pub fn bad_primes(&self) -> Vec<u64> {
        bad_primes(&self.inner).into_iter().collect()
    }

    /// Generic point of a hyperplane given as a linear form in GGOR parameters.
    pub fn hyperplane(&self, form: &str) -> PyResult<Parameter> {
        self.resolve(ParameterInput::Hyperplane(form.into()))
    }

    /// Explicit values, e.g. `"c1=1,c2=-1/2"` or `"k1_1=k,k1_2=2*k"`.
    pub fn parameter(&self, values: &str) -> PyResult<Parameter> {
        self.resolve(ParameterInput::Values(values.into()))
    }

    pub fn named_parameter(&self, name: &str) -> PyResult<Parameter> {
        self.resolve(ParameterInput::Named(name.into()))
    }

    /// Each `c_i` an independent indeterminate.
    pub fn generic_parameter(&self) -> PyResult<Parameter> {
        self.resolve(ParameterInput::Generic)
    }

    /// Euler families as `(members, scalar)`, members numbered from 1.
    pub fn euler_families(&self, param: &Parameter) -> Vec<(Vec<usize>, String)> {
        euler_families(&self.inner, &param.c)
            .into_iter()
            .map(|(m, s)| (m.into_iter().map(|i| i + 1).collect(), s.to_string()))
            .collect()
    }

    /// Verma module of an irrep given by number (from 1) or label.
    pub fn verma(&self, irrep: &Bound<'_, PyAny>, param: &Parameter) -> PyResult<VermaModule> {
        let i = self.irrep(irrep)?;
        let p = CherednikParameter::at_t_zero(&self.inner, param.c.clone())
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        let module = verma_module(&self.inner, &p, i).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok(VermaModule { group: self.inner.clone(), param: p, module })
    }

    /// Heads and decomposition of Verma modules. `families` are lists of irrep numbers from 1,
    /// `gset` generator names such as `["y1", "y2", "g2"]`.
    #[pyo3(signature = (param, families=None, gset=None, exclude_primes=None, seed=0))]
    pub fn gordon(
        &self,
        param: &Parameter,
        families: Option<Vec<Vec<usize>>>,
        gset: Option<Vec<String>>,
        exclude_primes: Option<Vec<u64>>,
        seed: u64,
    ) -> PyResult<Record> {
        let args = GordonArgs {
            families: families
                .unwrap_or_default()
                .iter()
                .map(|f| f.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
                .collect(),
            gset: gset.map(|g| g.join(",")),
            p_exclude: exclude_primes.unwrap_or_default(),
            seed,
        };
        let resolved = ResolvedParameter { c: param.c.clone(), description: param.description.clone() };
        let inner = gordon_record(&self.inner, resolved, &args).map_err(py_err)?;
        Ok(Record { inner })
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.id)
    }
}

#[pymethods]
impl Parameter {
    #[getter]
    pub fn values(&self) -> Vec<String> {
        self.c.iter().map(|s| s.to_string()).collect()
    }

    #[getter]
    pub fn description(&self) -> String {
        self.description.clone()
    }

    fn __repr__(&self) -> String {
        format!("Parameter('{}')", self.description)
    }
}

#[pymethods]
impl VermaModule {
    #[getter]
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    #[getter]
    pub fn generator_degrees(&self) -> Vec<i32> {
        self.module.generator_degrees().to_vec()
    }

    #[getter]
    pub fn generator_names(&self) -> Vec<String> {
        self.module.generator_names().to_vec()
    }

    /// Degree of each basis vector.
    #[getter]
    pub fn degrees(&self) -> Vec<i32> {
        self.module.degrees().to_vec()
    }

    pub fn poincare_series(&self) -> String {
        poincare_series(&self.module).to_string()
    }

    /// All defining relations of the restricted algebra hold on this module.
    pub fn check_relations(&self) -> bool {
        check_module_relations(&self.group, &self.param, &self.module)
    }

    pub fn to_text(&self) -> String {
        self.module.to_text()
    }

    fn __repr__(&self) -> String {
        format!("VermaModule(dim={})", self.module.dim())
    }
}

#[pymethods]
impl Record {
    #[staticmethod]
    pub fn from_toml(text: &str) -> PyResult<Self> {
        Ok(Record { inner: GordonRecord::from_toml(text).map_err(py_err)? })
    }

    pub fn to_toml(&self) -> PyResult<String> {
        self.inner.to_toml().map_err(py_err)
    }

    #[getter]
    pub fn irreps(&self) -> Vec<usize> {
        self.inner.irreps.clone()
    }

    #[getter]
    pub fn labels(&self) -> Vec<String> {
        self.inner.labels.clone()
    }

    #[getter]
    pub fn simple_dims(&self) -> Vec<usize> {
        self.inner.simple_dims.clone()
    }

    #[getter]
    pub fn simple_pseries(&self) -> Vec<String> {
        self.inner.simple_pseries.clone()
    }

    #[getter]
    pub fn verma_decomposition(&self) -> Vec<Vec<usize>> {
        self.inner.verma_decomposition.clone()
    }

    #[getter]
    pub fn cm_families(&self) -> Vec<Vec<usize>> {
        self.inner.cm_families.clone()
    }

    /// Differences against another record, or against the shipped expected record.
    #[pyo3(signature = (other=None))]
    pub fn compare(&self, other: Option<&Record>) -> PyResult<Vec<String>> {
        run_compare(&self.inner, other.map(|o| &o.inner)).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Record(group='{}', hyperplane='{}')", self.inner.group, self.inner.hyperplane)
    }
}

#[pymodule]
#[pyo3(name = "rrca")]
fn rrca_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Parameter>()?;
    m.add_class::<VermaModule>()?;
    m.add_class::<Record>()?;
    Ok(())
}
