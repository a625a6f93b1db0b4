//! Python bindings, importable as `rexlab`.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyTuple;
use rexlab_core::canon::canonical_form as core_canonical_form;
use rexlab_core::constructions::{self as cons, ConstructionError, ConstructionRecipe, DeficiencyPattern};
use rexlab_core::io::{graph6_decode, graph6_encode};
use rexlab_core::oracle::{self, OracleError, OracleOptions};
use rexlab_core::patterns;

create_exception!(rexlab, InfeasibleError, PyException, "The construction does not exist or its search ran out.");
create_exception!(rexlab, BudgetError, PyException, "The oracle hit its node budget.");

fn construction_err(e: ConstructionError) -> PyErr {
    use ConstructionError::*;
    match e {
        Infeasible(_) | InfeasibleDegrees(_) | SearchExhausted(_) | DichotomyViolated | UnsupportedResidue(_)
        | NoPartition(_) => InfeasibleError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn oracle_err(e: OracleError) -> PyErr {
    match e {
        OracleError::Budget(_) => BudgetError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(value_err)?;
    py.import("json")?.call_method1("loads", (s,))
}

/// A simple undirected graph on vertices `0..order`.
#[pyclass(module = "rexlab", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Graph {
    inner: rexlab_core::Graph,
}

impl From<rexlab_core::Graph> for Graph {
    fn from(inner: rexlab_core::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        rexlab_core::Graph::from_edges(order, &edges).map(Graph::from).map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        graph6_decode(s).map(Graph::from).map_err(value_err)
    }

    /// Shorthand such as `K5`, `P7`, `C6`, `K3,3`.
    #[staticmethod]
    fn pattern(s: &str) -> PyResult<Self> {
        patterns::parse_pattern(s).map(Graph::from).map_err(value_err)
    }

    fn graph6(&self) -> String {
        graph6_encode(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().pairs().to_vec()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.order() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    /// The common degree, or None.
    fn regularity(&self) -> Option<usize> {
        self.inner.is_regular()
    }

    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn complement(&self) -> Graph {
        self.inner.complement().into()
    }

    #[staticmethod]
    #[pyo3(signature = (*graphs))]
    fn disjoint_union(graphs: &Bound<'_, PyTuple>) -> PyResult<Graph> {
        let gs: Vec<rexlab_core::Graph> = graphs
            .iter()
            .map(|g| Ok(g.cast::<Graph>()?.get().inner.clone()))
            .collect::<PyResult<_>>()?;
        Ok(rexlab_core::Graph::disjoint_union(&gs).into())
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={}, graph6={:?})", self.inner.order(), self.inner.edge_count(), self.graph6())
    }
}

/// Unlabeled copies of `h` in `g`.
#[pyfunction]
fn count_copies(h: &Graph, g: &Graph) -> BigUint {
    patterns::count_copies(&h.inner, &g.inner).copies
}

/// Full count report as a dict.
#[pyfunction]
fn count_report<'py>(py: Python<'py>, h: &Graph, g: &Graph) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &patterns::count_copies(&h.inner, &g.inner))
}

#[pyfunction]
fn contains(f: &Graph, g: &Graph) -> bool {
    patterns::contains(&f.inner, &g.inner)
}

#[pyfunction]
fn exists_homomorphism(f: &Graph, h: &Graph) -> bool {
    patterns::exists_homomorphism(&f.inner, &h.inner)
}

#[pyfunction]
fn is_extended_friendship(f: &Graph) -> bool {
    patterns::is_extended_friendship(&f.inner)
}

#[pyfunction]
fn automorphism_count(g: &Graph) -> BigUint {
    patterns::automorphism_count(&g.inner)
}

/// Dict with `canon_graph6`, `order` and `automorphism_count`.
#[pyfunction]
fn canonical_form<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &core_canonical_form(&g.inner).map_err(value_err)?)
}

/// One graph per isomorphism class of `r`-regular graphs on `n` vertices.
#[pyfunction]
fn enumerate_regular(n: usize, r: usize) -> PyResult<Vec<Graph>> {
    oracle::enumerate_regular(n, r)
        .map(|gs| gs.into_iter().map(Graph::from).collect())
        .map_err(oracle_err)
}

fn oracle_opts(budget: Option<u64>) -> OracleOptions {
    let mut o = OracleOptions::default();
    if let Some(b) = budget {
        o.budget = b;
    }
    o
}

/// Exhaustive `rex(n, h, f)` record as a dict.
#[pyfunction]
#[pyo3(signature = (n, h, f, r = None, budget = None))]
fn rex_brute<'py>(
    py: Python<'py>,
    n: usize,
    h: &Graph,
    f: &Graph,
    r: Option<usize>,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let rec = py
        .detach(|| oracle::rex_brute(n, &h.inner, &f.inner, r, &oracle_opts(budget)))
        .map_err(oracle_err)?;
    json_to_py(py, &rec)
}

#[pyfunction]
#[pyo3(signature = (n, f, budget = None))]
fn regex_brute<'py>(py: Python<'py>, n: usize, f: &Graph, budget: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let rec = py
        .detach(|| oracle::regex_brute(n, &f.inner, &oracle_opts(budget)))
        .map_err(oracle_err)?;
    json_to_py(py, &rec)
}

#[pyfunction]
fn turan_graph(n: usize, k: usize) -> PyResult<Graph> {
    cons::turan_graph(n, k).map(Graph::from).map_err(construction_err)
}

#[pyfunction]
fn clique_minus_matching(m: usize) -> PyResult<Graph> {
    cons::clique_minus_matching(m).map(Graph::from).map_err(construction_err)
}

/// List of `(partition, graph)` pairs.
#[pyfunction]
fn g_family(k: usize) -> PyResult<Vec<(Vec<usize>, Graph)>> {
    cons::g_family(k)
        .map(|v| v.into_iter().map(|(p, g)| (p.parts().to_vec(), g.into())).collect())
        .map_err(construction_err)
}

#[pyfunction]
fn theorem6_extremal(n: usize, k: usize) -> PyResult<Graph> {
    cons::theorem6_extremal(n, k).map(Graph::from).map_err(construction_err)
}

#[pyfunction]
fn rex_paths_closed_form(n: usize, k: usize) -> PyResult<BigUint> {
    cons::rex_paths_closed_form(n, k).map_err(construction_err)
}

#[pyfunction]
fn regex_tree_closed_form(tree: &Graph, n: usize) -> PyResult<usize> {
    cons::regex_tree_closed_form(&tree.inner, n).map_err(construction_err)
}

#[pyfunction]
fn k_regular_bipartite(n: usize, k: usize) -> PyResult<Graph> {
    cons::k_regular_bipartite(n, k).map(Graph::from).map_err(construction_err)
}

#[pyfunction]
fn biregular_bipartite(a: usize, da: usize, b: usize, db: usize) -> PyResult<Graph> {
    cons::biregular_bipartite(a, da, b, db).map(Graph::from).map_err(construction_err)
}

#[pyfunction]
#[pyo3(signature = (n, r, g, seed = 0))]
fn high_girth_regular(py: Python<'_>, n: usize, r: usize, g: usize, seed: u64) -> PyResult<Graph> {
    py.detach(|| cons::high_girth_regular(n, r, g, seed)).map(Graph::from).map_err(construction_err)
}

/// Returns `(graph, deficient_vertices)`.
#[pyfunction]
#[pyo3(signature = (n, r, g, count, min_pairwise_distance, seed = 0))]
fn deficient_high_girth(
    py: Python<'_>,
    n: usize,
    r: usize,
    g: usize,
    count: usize,
    min_pairwise_distance: usize,
    seed: u64,
) -> PyResult<(Graph, Vec<usize>)> {
    let pat = DeficiencyPattern { count, min_pairwise_distance };
    py.detach(|| cons::deficient_high_girth(n, r, g, pat, seed))
        .map(|d| (d.graph.into(), d.deficient))
        .map_err(construction_err)
}

#[pyfunction]
#[pyo3(signature = (n, d, seed = 0))]
fn c5_blowup_regular(n: usize, d: usize, seed: u64) -> PyResult<Graph> {
    cons::c5_blowup_regular(n, d, seed).map(|b| b.graph.into()).map_err(construction_err)
}

#[pyfunction]
#[pyo3(signature = (h, f, g, seed = 0))]
fn blowup_cover(py: Python<'_>, h: &Graph, f: &Graph, g: usize, seed: u64) -> PyResult<Graph> {
    py.detach(|| cons::blowup_cover(&h.inner, &f.inner, g, seed))
        .map(|c| c.graph.into())
        .map_err(construction_err)
}

#[pyfunction]
fn cycle_rich(m: usize, ell: usize, k: usize) -> PyResult<Graph> {
    cons::cycle_rich(m, ell, k).map(|c| c.graph.into()).map_err(construction_err)
}

#[pyfunction]
fn apex_witness(n: usize) -> PyResult<Graph> {
    cons::apex_witness(n).map(Graph::from).map_err(construction_err)
}

/// Builds a recipe given as a JSON string; returns `(label, graph)` pairs.
#[pyfunction]
fn construct(py: Python<'_>, recipe: &str) -> PyResult<Vec<(String, Graph)>> {
    let r = ConstructionRecipe::from_json(recipe).map_err(value_err)?;
    py.detach(|| r.build())
        .map(|arts| arts.into_iter().map(|a| (a.label, a.graph.into())).collect())
        .map_err(construction_err)
}

#[pymodule]
#[pyo3(name = "rexlab")]
fn rexlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Graph>()?;
    m.add("InfeasibleError", py.get_type::<InfeasibleError>())?;
    m.add("BudgetError", py.get_type::<BudgetError>())?;
    m.add_function(wrap_pyfunction!(count_copies, m)?)?;
    m.add_function(wrap_pyfunction!(count_report, m)?)?;
    m.add_function(wrap_pyfunction!(contains, m)?)?;
    m.add_function(wrap_pyfunction!(exists_homomorphism, m)?)?;
    m.add_function(wrap_pyfunction!(is_extended_friendship, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism_count, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_regular, m)?)?;
    m.add_function(wrap_pyfunction!(rex_brute, m)?)?;
    m.add_function(wrap_pyfunction!(regex_brute, m)?)?;
    m.add_function(wrap_pyfunction!(turan_graph, m)?)?;
    m.add_function(wrap_pyfunction!(clique_minus_matching, m)?)?;
    m.add_function(wrap_pyfunction!(g_family, m)?)?;
    m.add_function(wrap_pyfunction!(theorem6_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(rex_paths_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(regex_tree_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(k_regular_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(biregular_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(high_girth_regular, m)?)?;
    m.add_function(wrap_pyfunction!(deficient_high_girth, m)?)?;
    m.add_function(wrap_pyfunction!(c5_blowup_regular, m)?)?;
    m.add_function(wrap_pyfunction!(blowup_cover, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_rich, m)?)?;
    m.add_function(wrap_pyfunction!(apex_witness, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    Ok(())
}
