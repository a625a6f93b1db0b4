//! Turán graphs, cliques minus matchings, cycle complements, the path-free
//! extremal graphs and the closed forms that go with them.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::ConstructionError;
use crate::graph::Graph;
use crate::named;

type Result<T> = std::result::Result<T, ConstructionError>;

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Complete `k`-partite graph on `n` vertices with part sizes differing by at
/// most one; the larger parts come first.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(ConstructionError::BadParams(format!(
            "Turán graph needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let sizes: Vec<usize> = (0..k).map(|i| n / k + usize::from(i < n % k)).collect();
    Ok(named::complete_multipartite(&sizes))
}

/// `K_m` minus the perfect matching `{0,1}, {2,3}, ...`.
pub fn clique_minus_matching(m: usize) -> Result<Graph> {
    if m % 2 == 1 {
        return Err(ConstructionError::OddOrder(m));
    }
    if m < 2 {
        return Err(ConstructionError::BadParams("order must be at least 2".into()));
    }
    let mut g = named::complete(m);
    for i in (0..m).step_by(2) {
        g.remove_edge(i, i + 1);
    }
    Ok(g)
}

/// Multiset of cycle lengths, each at least 4, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclePartition {
    parts: Vec<usize>,
}

impl CyclePartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p < 4) {
            return Err(ConstructionError::BadParams(format!(
                "cycle lengths must be at least 4, got {parts:?}"
            )));
        }
        parts.sort_unstable();
        Ok(CyclePartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `total` into parts of size at least 4, fewest parts
    /// first, then lexicographic.
    pub fn all(total: usize) -> Vec<CyclePartition> {
        fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for p in min..=rest {
                if rest - p != 0 && rest - p < p {
                    continue;
                }
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if total >= 4 {
            rec(total, 4, &mut Vec::new(), &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.into_iter().map(|parts| CyclePartition { parts }).collect()
    }
}

/// Complete graph minus vertex-disjoint cycles on consecutive blocks.
pub fn cycle_complement(p: &CyclePartition) -> Graph {
    let mut g = named::complete(p.total());
    let mut start = 0;
    for &len in &p.parts {
        for i in 0..len {
            g.remove_edge(start + i, start + (i + 1) % len);
        }
        start += len;
    }
    g
}

/// One member per cycle partition of `k - 1` into parts of size at least 4.
pub fn g_family(k: usize) -> Result<Vec<(CyclePartition, Graph)>> {
    if k % 2 == 1 {
        return Err(ConstructionError::BadParams(format!("k must be even, got {k}")));
    }
    let total = k.saturating_sub(1);
    let parts = CyclePartition::all(total);
    if parts.is_empty() {
        return Err(ConstructionError::NoPartition(total));
    }
    Ok(parts
        .into_iter()
        .map(|p| {
            let g = cycle_complement(&p);
            (p, g)
        })
        .collect())
}

/// Connected building blocks of the path-free extremal graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    Clique(usize),
    CliqueMinusMatching(usize),
    CycleComplement(CyclePartition),
}

impl Component {
    pub fn graph(&self) -> Graph {
        match self {
            Component::Clique(m) => named::complete(*m),
            Component::CliqueMinusMatching(m) => {
                clique_minus_matching(*m).expect("even order checked by the plan")
            }
            Component::CycleComplement(p) => cycle_complement(p),
        }
    }
}

/// Case split and multiplicities for the `P_k`-free extremal graph on `n`
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathsPlan {
    pub n: usize,
    pub k: usize,
    pub case: u8,
    pub a: usize,
    pub b: usize,
    pub components: Vec<(Component, usize)>,
}

impl PathsPlan {
    pub fn regularity(&self) -> usize {
        match self.case {
            1 => self.k - 2,
            2 => self.k - 3,
            _ => self.k - 4,
        }
    }
}

fn paths_case(n: usize, k: usize) -> Result<(u8, usize, usize)> {
    if k < 7 {
        return Err(ConstructionError::BadParams(format!("k must be at least 7, got {k}")));
    }
    if n == 0 {
        return Err(ConstructionError::BadParams("n must be positive".into()));
    }
    let too_small = |case| {
        ConstructionError::BadParams(format!(
            "n={n} is below the construction threshold for k={k} (case {case})"
        ))
    };
    if n.is_multiple_of(k - 1) {
        return Ok((1, n / (k - 1), 0));
    }
    if k % 2 == 1 || n.is_multiple_of(k - 2) {
        let (a, b) = (n / (k - 2), n % (k - 2));
        if a < b {
            return Err(too_small(2));
        }
        return Ok((2, a, b));
    }
    let (a, b) = (n / (k - 3), n % (k - 3));
    if a < b % 2 + b / 2 {
        return Err(too_small(3));
    }
    Ok((3, a, b))
}

pub fn theorem6_plan(n: usize, k: usize) -> Result<PathsPlan> {
    theorem6_plan_with(n, k, None)
}

fn theorem6_plan_with(n: usize, k: usize, member: Option<CyclePartition>) -> Result<PathsPlan> {
    let (case, a, b) = paths_case(n, k)?;
    let components = match case {
        1 => vec![(Component::Clique(k - 1), a)],
        2 => vec![
            (Component::Clique(k - 2), a - b),
            (Component::CliqueMinusMatching(k - 1), b),
        ],
        _ => {
            let (ell, half) = (b % 2, b / 2);
            let p = match member {
                Some(p) if p.total() == k - 1 => p,
                Some(p) => {
                    return Err(ConstructionError::BadParams(format!(
                        "cycle partition {:?} does not sum to {}",
                        p.parts(),
                        k - 1
                    )))
                }
                None => CyclePartition::new(vec![k - 1])?,
            };
            vec![
                (Component::Clique(k - 3), a - ell - half),
                (Component::CliqueMinusMatching(k - 2), ell),
                (Component::CycleComplement(p), half),
            ]
        }
    };
    let components = components.into_iter().filter(|(_, c)| *c > 0).collect();
    Ok(PathsPlan {
        n,
        k,
        case,
        a,
        b,
        components,
    })
}

/// The `P_k`-free regular graph on `n` vertices with the most triangles; case
/// three uses the single-cycle member of the cycle-complement family.
pub fn theorem6_extremal(n: usize, k: usize) -> Result<Graph> {
    theorem6_extremal_with(n, k, None)
}

/// As [`theorem6_extremal`], choosing the cycle-complement member in case three.
pub fn theorem6_extremal_with(
    n: usize,
    k: usize,
    member: Option<CyclePartition>,
) -> Result<Graph> {
    let plan = theorem6_plan_with(n, k, member)?;
    let mut parts = Vec::new();
    for (c, mult) in &plan.components {
        let g = c.graph();
        parts.extend(std::iter::repeat_n(g, *mult));
    }
    Ok(Graph::disjoint_union(&parts))
}

/// Maximum triangle count over `P_k`-free regular graphs on `n` vertices.
pub fn rex_paths_closed_form(n: usize, k: usize) -> Result<BigUint> {
    let (case, a, b) = paths_case(n, k)?;
    let (n, k, a, b) = (n as i128, k as i128, a as i128, b as i128);
    let value = match case {
        1 => n / (k - 1) * binom(k - 1, 3),
        2 => (a - b) * binom(k - 2, 3) + 8 * b * binom((k - 1) / 2, 3),
        _ => {
            let (ell, half) = (b % 2, b / 2);
            let g_km2 = 8 * binom(k / 2 - 1, 3);
            let g_km1 = 8 * binom(k / 2 - 1, 3) + 3 - k / 2;
            (a - ell - half) * binom(k - 3, 3) + ell * g_km2 + half * g_km1
        }
    };
    Ok(BigUint::from(u128::try_from(value).expect("non-negative count")))
}

pub fn is_star(t: &Graph) -> bool {
    let n = t.order();
    n <= 2 || (t.is_tree() && t.max_degree() == n - 1)
}

/// A tree one of whose colour classes has at most two vertices.
pub fn is_almost_star(t: &Graph) -> bool {
    if !t.is_tree() {
        return false;
    }
    let Some(col) = t.two_coloring() else {
        return false;
    };
    let ones = col.iter().filter(|&&c| c).count();
    ones.min(col.len() - ones) <= 2
}

/// Orders from which the tree closed form is treated as established.
pub fn regex_threshold(t: usize) -> usize {
    3 * t
}

/// Largest `d` admitting a `T`-free `d`-regular graph on `n` vertices, for
/// `n` large.
pub fn regex_tree_closed_form(tree: &Graph, n: usize) -> Result<usize> {
    if !tree.is_tree() {
        return Err(ConstructionError::NotATree);
    }
    let t = tree.order();
    if t < 2 {
        return Err(ConstructionError::BadParams("tree needs at least 2 vertices".into()));
    }
    if n == 0 {
        return Err(ConstructionError::BadParams("n must be positive".into()));
    }
    let star = is_star(tree);
    if n.is_multiple_of(t - 1) || (star && (t.is_multiple_of(2) || n.is_multiple_of(2))) {
        return Ok(t - 2);
    }
    if t % 2 == 1 || n.is_multiple_of(t - 2) || (is_almost_star(tree) && n.is_multiple_of(2)) {
        return Ok(t - 3);
    }
    Ok(t - 4)
}
