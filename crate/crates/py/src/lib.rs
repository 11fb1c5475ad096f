//! Python bindings: `LaurentPoly`, `GroupRingPoly`, `RationalFunction`,
//! `ChainComplex` and the decision procedures on them.

use eqribbon_core::conditions::{self, TwoEquivariant, Verdict};
use eqribbon_core::construct::{self, CrossingList};
use eqribbon_core::factor;
use eqribbon_core::notation::{parse_poly, parse_poly2};
use eqribbon_core::torsion::{dual_complex, BasedChainComplex, RfMatrix};
use eqribbon_core::{Error, GroupRingPoly, RationalFunction, ZPoly};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero | Error::ZeroPolynomial => PyZeroDivisionError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "LaurentPoly", module = "eqribbon", frozen)]
pub struct PyLaurent(ZPoly);

#[pymethods]
impl PyLaurent {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        parse_poly(s).map(Self).map_err(err)
    }

    /// Coefficients keyed by exponent.
    #[staticmethod]
    fn from_coeffs(coeffs: Vec<(i64, BigInt)>) -> Self {
        Self(ZPoly::from_terms(coeffs))
    }

    fn coeffs(&self) -> Vec<(i64, BigInt)> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    fn canonical(&self) -> Self {
        Self(self.0.canonical())
    }

    fn augment(&self) -> BigInt {
        self.0.augment()
    }

    fn unit_equal(&self, other: &Self) -> bool {
        self.0.unit_equal(&other.0)
    }

    fn is_self_reciprocal(&self) -> bool {
        self.0.is_self_reciprocal()
    }

    fn mod2(&self) -> String {
        self.0.mod2().to_string()
    }

    fn pow(&self, n: u32) -> Self {
        Self(self.0.pow(n))
    }

    /// `self / other` if the division is exact in `Z[t, t^-1]`, else `None`.
    fn exact_div(&self, other: &Self) -> PyResult<Option<Self>> {
        if other.0.is_zero() {
            return Err(err(Error::DivisionByZero));
        }
        Ok(self.0.exact_div(&other.0).map(Self))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }
}

#[pyclass(name = "GroupRingPoly", module = "eqribbon", frozen)]
pub struct PyGroupRing(GroupRingPoly);

#[pymethods]
impl PyGroupRing {
    #[new]
    fn new(s: &str, q: u32) -> PyResult<Self> {
        parse_poly2(s, q).map(Self).map_err(err)
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.period()
    }

    /// Terms as `(g exponent, t exponent, coefficient)`.
    fn terms(&self) -> Vec<(u32, i64, BigInt)> {
        self.0.terms().map(|(i, j, c)| (i, j, c.clone())).collect()
    }

    fn involute(&self) -> Self {
        Self(self.0.involute())
    }

    fn canonical(&self) -> Self {
        Self(self.0.canonical())
    }

    fn unit_equal(&self, other: &Self) -> bool {
        self.0.unit_equal(&other.0)
    }

    /// Image under `g ↦ 1`.
    fn augment_g(&self) -> PyLaurent {
        PyLaurent(self.0.augment_g())
    }

    /// Image under `t ↦ 1`, as coefficients of `1, g, ..., g^{q-1}`.
    fn augment_t(&self) -> Vec<BigInt> {
        self.0.augment_t()
    }

    fn norm_product(&self) -> PyLaurent {
        PyLaurent(self.0.norm_product())
    }

    /// The `g = 1` and `g = -1` parts for `q = 2`.
    fn plus_minus(&self) -> PyResult<(PyLaurent, PyLaurent)> {
        let pm = self.0.plus_minus().map_err(err)?;
        Ok((PyLaurent(pm.plus), PyLaurent(pm.minus)))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GroupRingPoly('{}', {})", self.0, self.0.period())
    }
}

#[pyclass(name = "RationalFunction", module = "eqribbon", frozen)]
pub struct PyRational(RationalFunction);

#[pymethods]
impl PyRational {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        RationalFunction::parse(s).map(Self).map_err(err)
    }

    /// Numerator and denominator as integer polynomials.
    fn fraction(&self) -> (PyLaurent, PyLaurent) {
        let (n, d) = self.0.to_integer_fraction();
        (PyLaurent(n), PyLaurent(d))
    }

    fn inv(&self) -> PyResult<Self> {
        self.0.inv().map(Self).map_err(err)
    }

    fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    fn is_local(&self) -> bool {
        self.0.is_local()
    }

    fn eq_up_to_sign(&self, other: &Self) -> bool {
        self.0.eq_up_to_sign(&other.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(&self.0 * &other.0.inv().map_err(err)?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("RationalFunction('{}')", self.0)
    }
}

#[pyclass(name = "ChainComplex", module = "eqribbon", frozen)]
pub struct PyComplex(BasedChainComplex);

#[pymethods]
impl PyComplex {
    /// `matrices[i-1]` is the boundary `C_i → C_{i-1}` as `ranks[i]` rows of
    /// rational-function strings.
    #[new]
    fn new(ranks: Vec<usize>, matrices: Vec<Vec<Vec<String>>>) -> PyResult<Self> {
        if ranks.len() != matrices.len() + 1 {
            return Err(PyValueError::new_err("need exactly one matrix per consecutive pair of ranks"));
        }
        let mats = matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let rows = m
                    .iter()
                    .map(|r| r.iter().map(|s| RationalFunction::parse(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                RfMatrix::with_shape(ranks[k + 1], ranks[k], rows)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        BasedChainComplex::new(ranks, mats).map(Self).map_err(err)
    }

    #[getter]
    fn ranks(&self) -> Vec<usize> {
        self.0.ranks().to_vec()
    }

    fn torsion(&self) -> PyResult<PyRational> {
        self.0.torsion().map(PyRational).map_err(err)
    }

    fn dual(&self) -> Self {
        Self(dual_complex(&self.0, true))
    }

    fn direct_sum(&self, other: &Self) -> Self {
        Self(self.0.direct_sum(&other.0))
    }
}

#[pyfunction]
fn is_abstract_alexander(delta: &PyLaurent) -> bool {
    conditions::is_abstract_alexander(&delta.0)
}

/// A Fox witness `p` with `Δ = p·p̄` up to units, or `None`.
#[pyfunction]
fn check_fox_slice(delta: &PyLaurent) -> PyResult<Option<PyLaurent>> {
    Ok(conditions::check_fox_slice(&delta.0).map_err(err)?.witness().map(|w| PyLaurent(w.p.clone())))
}

#[pyfunction]
fn fox_witnesses(delta: &PyLaurent) -> PyResult<Vec<PyLaurent>> {
    Ok(factor::fox_witnesses(&delta.0).map_err(err)?.into_iter().map(PyLaurent).collect())
}

#[pyfunction]
fn symmetric_divisors(delta: &PyLaurent) -> PyResult<Vec<PyLaurent>> {
    Ok(factor::symmetric_divisors(&delta.0).map_err(err)?.into_iter().map(PyLaurent).collect())
}

/// Irreducible factors with multiplicities; the sign and content are dropped.
#[pyfunction]
fn factor_z(p: &PyLaurent) -> PyResult<Vec<(PyLaurent, u32)>> {
    Ok(factor::factor_z(&p.0).map_err(err)?.factors.into_iter().map(|(f, m)| (PyLaurent(f), m)).collect())
}

#[pyfunction]
fn lemma_factor_extract(f: &PyLaurent, a: &PyLaurent, b: &PyLaurent) -> PyResult<PyLaurent> {
    factor::lemma_factor_extract(&f.0, &a.0, &b.0).map(PyLaurent).map_err(err)
}

#[pyfunction]
fn check_murasugi<'py>(py: Python<'py>, delta_zq: &PyGroupRing) -> PyResult<Bound<'py, PyDict>> {
    let r = conditions::check_murasugi(&delta_zq.0);
    let d = PyDict::new(py);
    d.set_item("holds", r.holds())?;
    d.set_item("symmetric", r.symmetric)?;
    d.set_item("augments", r.augments)?;
    d.set_item("knot_poly", PyLaurent(r.knot_poly))?;
    d.set_item("quotient_poly", PyLaurent(r.quotient_poly))?;
    d.set_item("quotient_divides", r.quotient_divides)?;
    Ok(d)
}

fn verdict_dict<'py, W>(
    py: Python<'py>,
    v: Verdict<TwoEquivariant<W>>,
    fill: impl Fn(&Bound<'py, PyDict>, W) -> PyResult<()>,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match v {
        Verdict::Yes(t) => {
            d.set_item("verdict", true)?;
            d.set_item("p", PyLaurent(t.p))?;
            d.set_item("q", PyLaurent(t.q))?;
            fill(&d, t.witness)?;
        }
        Verdict::No(c) => {
            d.set_item("verdict", false)?;
            d.set_item("candidates", c.candidates)?;
            d.set_item("reason", c.reason)?;
        }
    }
    Ok(d)
}

/// Period-2 equivariant slice criterion; on success the dict carries `delta_zq`, `a`, `b`.
#[pyfunction]
fn check_2eq_slice<'py>(py: Python<'py>, delta: &PyLaurent, delta_quot: &PyLaurent) -> PyResult<Bound<'py, PyDict>> {
    let v = conditions::check_2eq_slice(&delta.0, &delta_quot.0).map_err(err)?;
    verdict_dict(py, v, |d, w| {
        d.set_item("delta_zq", PyGroupRing(w.delta_zq))?;
        d.set_item("a", PyGroupRing(w.a))?;
        d.set_item("b", PyGroupRing(w.b))
    })
}

/// Period-2 equivariant ribbon criterion; on success the dict carries `a`.
#[pyfunction]
fn check_2eq_ribbon<'py>(py: Python<'py>, delta: &PyLaurent, delta_quot: &PyLaurent) -> PyResult<Bound<'py, PyDict>> {
    let v = conditions::check_2eq_ribbon(&delta.0, &delta_quot.0).map_err(err)?;
    verdict_dict(py, v, |d, w| d.set_item("a", PyGroupRing(w.a)))
}

#[pyfunction]
fn modq_witness(p: &PyLaurent, q: u32) -> PyResult<PyGroupRing> {
    conditions::modq_witness(&p.0, q).map(|w| PyGroupRing(w.a)).map_err(err)
}

/// `(Δ_{Z/2}, a, b)` from Fox witnesses `p` of `Δ` and `q` of `Δ_quot`.
#[pyfunction]
fn build_2eq_slice_witness(p: &PyLaurent, q: &PyLaurent) -> PyResult<(PyGroupRing, PyGroupRing, PyGroupRing)> {
    let w = conditions::build_2eq_slice_witness(&p.0, &q.0).map_err(err)?;
    Ok((PyGroupRing(w.delta_zq), PyGroupRing(w.a), PyGroupRing(w.b)))
}

#[pyfunction]
fn verify_eqribbon(a: &PyGroupRing, delta_zq: &PyGroupRing) -> bool {
    conditions::verify_eqribbon(&conditions::EqRibbonWitness { q: a.0.period(), a: a.0.clone() }, &delta_zq.0)
}

/// Boxes, crossings and the Murasugi polynomial `a·ā` of a ribbon witness.
#[pyfunction]
fn realize<'py>(py: Python<'py>, a: &PyGroupRing) -> PyResult<Bound<'py, PyDict>> {
    let r = construct::realize(&a.0).map_err(err)?;
    let d = PyDict::new(py);
    let boxes: Vec<Vec<(i64, BigInt)>> = r.boxes.boxes.clone();
    let crossings: Vec<(i8, u32, i64)> = r.crossings.records.iter().map(|c| (c.sign, c.g, c.t)).collect();
    d.set_item("boxes", boxes)?;
    d.set_item("crossings", crossings)?;
    d.set_item("murasugi", PyGroupRing(r.murasugi))?;
    d.set_item("knot_poly", PyLaurent(r.knot_poly))?;
    d.set_item("quotient_poly", PyLaurent(r.quotient_poly))?;
    Ok(d)
}

/// Equivariant linking of `(sign, g, t)` crossing records.
#[pyfunction]
fn equivariant_linking(q: u32, crossings: Vec<(i8, i64, i64)>) -> PyResult<PyGroupRing> {
    let c = CrossingList::new(q, crossings).map_err(err)?;
    Ok(PyGroupRing(construct::equivariant_linking(&c)))
}

#[pymodule]
fn eqribbon(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyGroupRing>()?;
    m.add_class::<PyRational>()?;
    m.add_class::<PyComplex>()?;
    m.add_function(wrap_pyfunction!(is_abstract_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(check_fox_slice, m)?)?;
    m.add_function(wrap_pyfunction!(fox_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_divisors, m)?)?;
    m.add_function(wrap_pyfunction!(factor_z, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_factor_extract, m)?)?;
    m.add_function(wrap_pyfunction!(check_murasugi, m)?)?;
    m.add_function(wrap_pyfunction!(check_2eq_slice, m)?)?;
    m.add_function(wrap_pyfunction!(check_2eq_ribbon, m)?)?;
    m.add_function(wrap_pyfunction!(modq_witness, m)?)?;
    m.add_function(wrap_pyfunction!(build_2eq_slice_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify_eqribbon, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(equivariant_linking, m)?)?;
    Ok(())
}
