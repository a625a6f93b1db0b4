//! Regular graphs of large girth, with and without deficient vertices.
//!
//! Graphs come from a library (named cages, complete and complete bipartite
//! graphs, incidence graphs of projective planes and symplectic quadrangles),
//! disjoint unions of library members, the one- or two-hub gluing of copies
//! with an edge removed, and a seeded swap search that only ever adds edges
//! closing long cycles.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::Field;
use super::ConstructionError;
use crate::graph::{Graph, ORDER_CAP};
use crate::named;

type Result<T> = std::result::Result<T, ConstructionError>;

pub const DEFAULT_SWAP_BUDGET: u64 = 1_000_000;

const SWAP_TRIES_PER_EDGE: usize = 24;
const DEFICIENT_RETRIES: u64 = 8;

/// Smallest order of an `r`-regular graph whose girth is at least `g`.
pub fn moore_bound(r: usize, g: usize) -> usize {
    match r {
        0 => 1,
        1 => 2,
        2 => g.max(3),
        _ if g <= 3 => r + 1,
        _ => {
            let s = (g - 1) / 2;
            let mut pow = 1usize;
            let mut sum = 0usize;
            for _ in 0..s {
                sum = sum.saturating_add(pow);
                pow = pow.saturating_mul(r - 1);
            }
            if g % 2 == 1 {
                1usize.saturating_add(r.saturating_mul(sum))
            } else {
                // 2 * (1 + (r-1) + ... + (r-1)^(s-1)) with s = g/2
                let mut pow = 1usize;
                let mut sum = 0usize;
                for _ in 0..g / 2 {
                    sum = sum.saturating_add(pow);
                    pow = pow.saturating_mul(r - 1);
                }
                sum.saturating_mul(2)
            }
        }
    }
}

fn girth_ok(gr: &Graph, g: usize) -> bool {
    gr.girth().is_none_or(|x| x >= g)
}

/// Incidence graph of the projective plane over `GF(q)`: points first, then
/// lines. `(q+1)`-regular with girth 6.
pub fn projective_plane_incidence(q: usize) -> Option<Graph> {
    let f = Field::new(q)?;
    let pts = f.projective_points(3);
    let m = pts.len();
    let mut g = Graph::empty(2 * m);
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if f.dot(p, l) == 0 {
                g.add_edge(i, m + j);
            }
        }
    }
    Some(g)
}

/// Incidence graph of the symplectic generalized quadrangle `W(q)`: points of
/// projective 3-space against totally isotropic lines. `(q+1)`-regular with
/// girth 8.
pub fn symplectic_quadrangle_incidence(q: usize) -> Option<Graph> {
    let f = Field::new(q)?;
    let pts = f.projective_points(4);
    let index: HashMap<Vec<usize>, usize> =
        pts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let form = |x: &[usize], y: &[usize]| {
        let t1 = f.add(f.mul(x[0], y[1]), f.neg(f.mul(x[1], y[0])));
        let t2 = f.add(f.mul(x[2], y[3]), f.neg(f.mul(x[3], y[2])));
        f.add(t1, t2)
    };
    let line_coeffs = f.projective_points(2);
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if form(&pts[i], &pts[j]) != 0 {
                continue;
            }
            let mut line: Vec<usize> = line_coeffs
                .iter()
                .map(|c| {
                    let v: Vec<usize> = (0..4)
                        .map(|t| f.add(f.mul(c[0], pts[i][t]), f.mul(c[1], pts[j][t])))
                        .collect();
                    index[&f.normalize(&v)]
                })
                .collect();
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let np = pts.len();
    let mut g = Graph::empty(np + lines.len());
    for (li, line) in lines.iter().enumerate() {
        for &p in line {
            g.add_edge(p, np + li);
        }
    }
    Some(g)
}

/// Known `r`-regular graphs with girth at least `g`, by increasing order.
pub fn high_girth_library(r: usize, g: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, usize, Graph)> = Vec::new();
    let mut push = |name: String, girth: usize, gr: Graph| {
        if girth >= g && gr.order() <= ORDER_CAP {
            out.push((name, girth, gr));
        }
    };
    match r {
        0 => push("K1".into(), usize::MAX, Graph::empty(1)),
        1 => push("K2".into(), usize::MAX, named::complete(2)),
        _ => {
            push(format!("K{}", r + 1), 3, named::complete(r + 1));
            push(format!("K{r},{r}"), 4, named::complete_bipartite(r, r));
        }
    }
    if r == 3 {
        push("Petersen".into(), 5, named::petersen());
        push("Heawood".into(), 6, named::heawood());
        push("Moebius-Kantor".into(), 6, named::mobius_kantor());
        push("McGee".into(), 7, named::mcgee());
        push("Tutte-Coxeter".into(), 8, named::tutte_coxeter());
    }
    if r == 4 {
        push("Robertson".into(), 5, named::robertson());
    }
    if r >= 3 && g > 4 {
        let q = r - 1;
        if g <= 6 {
            if let Some(gr) = projective_plane_incidence(q) {
                push(format!("PG(2,{q})"), 6, gr);
            }
        }
        if 2 * (q + 1) * (q * q + 1) <= ORDER_CAP {
            if let Some(gr) = symplectic_quadrangle_incidence(q) {
                push(format!("W({q})"), 8, gr);
            }
        }
    }
    out.sort_by_key(|(_, girth, gr)| (gr.order(), *girth));
    out.into_iter().map(|(n, _, gr)| (n, gr)).collect()
}

/// Disjoint union of library members with total order exactly `n`, using as
/// few members as possible.
fn library_union(n: usize, lib: &[(String, Graph)]) -> Option<Graph> {
    let orders: Vec<usize> = lib.iter().map(|(_, g)| g.order()).collect();
    let mut best: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    best[0] = Some((0, usize::MAX));
    for total in 1..=n {
        for (i, &o) in orders.iter().enumerate() {
            if o <= total {
                if let Some((cnt, _)) = best[total - o] {
                    if best[total].is_none_or(|(c, _)| cnt + 1 < c) {
                        best[total] = Some((cnt + 1, i));
                    }
                }
            }
        }
    }
    best[n]?;
    let mut parts = Vec::new();
    let mut t = n;
    while t > 0 {
        let (_, i) = best[t].unwrap();
        parts.push(lib[i].1.clone());
        t -= orders[i];
    }
    parts.sort_by_key(|g| std::cmp::Reverse(g.order()));
    Some(Graph::disjoint_union(&parts))
}

/// Removes one edge from each copy and reconnects the freed endpoints through
/// one hub (`r` even, `r/2` copies) or two hubs (`r` odd, `r` copies).
fn glue(copies: &[Graph], r: usize) -> Graph {
    let base = Graph::disjoint_union(copies);
    let hubs = if r.is_multiple_of(2) { 1 } else { 2 };
    let mut g = base.with_extra_vertices(hubs);
    let (h1, h2) = (base.order(), base.order() + hubs - 1);
    let mut off = 0;
    for c in copies {
        let (a, b) = c.edges().pairs()[0];
        g.remove_edge(off + a, off + b);
        g.add_edge(h1, off + a);
        g.add_edge(h2, off + b);
        off += c.order();
    }
    g
}

fn glue_base_order(n: usize, r: usize) -> Option<usize> {
    if r < 3 {
        return None;
    }
    if r.is_multiple_of(2) {
        let k = r / 2;
        (n > 1 && (n - 1).is_multiple_of(k)).then(|| (n - 1) / k)
    } else {
        (n > 2 && (n - 2).is_multiple_of(r)).then(|| (n - 2) / r)
    }
}

/// Library unions, then gluing over library unions.
fn constructive(n: usize, r: usize, lib: &[(String, Graph)], depth: usize) -> Option<Graph> {
    if let Some(u) = library_union(n, lib) {
        return Some(u);
    }
    if depth == 0 {
        return None;
    }
    let m = glue_base_order(n, r)?;
    let base = constructive(m, r, lib, depth - 1)?;
    let copies = if r.is_multiple_of(2) { r / 2 } else { r };
    Some(glue(&vec![base; copies], r))
}

/// Whether `b` lies at distance less than `limit` from `a`.
fn within(g: &Graph, a: usize, targets: &[bool], limit: usize, scratch: &mut Vec<usize>) -> bool {
    if limit == 0 {
        return false;
    }
    scratch.clear();
    scratch.resize(g.order(), usize::MAX);
    let mut q = VecDeque::new();
    scratch[a] = 0;
    q.push_back(a);
    while let Some(x) = q.pop_front() {
        if targets[x] {
            return true;
        }
        if scratch[x] + 1 >= limit {
            continue;
        }
        for y in g.neighbors(x) {
            if scratch[y] == usize::MAX {
                scratch[y] = scratch[x] + 1;
                q.push_back(y);
            }
        }
    }
    false
}

fn near(g: &Graph, a: usize, b: usize, limit: usize, scratch: &mut Vec<usize>) -> bool {
    let mut t = vec![false; g.order()];
    t[b] = true;
    within(g, a, &t, limit, scratch)
}

struct Swapper<'a> {
    rng: &'a mut ChaCha8Rng,
    attempts: u64,
    budget: u64,
    scratch: Vec<usize>,
}

impl Swapper<'_> {
    fn random_edge(&mut self, g: &Graph) -> (usize, usize) {
        loop {
            let x = self.rng.random_range(0..g.order());
            let nb: Vec<usize> = g.neighbors(x).collect();
            if let Some(&y) = nb.choose(self.rng) {
                return (x, y);
            }
        }
    }

    /// Plain double-edge swap preserving degrees.
    fn shake(&mut self, g: &mut Graph) {
        let (a, b) = self.random_edge(g);
        let (c, d) = self.random_edge(g);
        if a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(b, d) {
            return;
        }
        g.remove_edge(a, b);
        g.remove_edge(c, d);
        g.add_edge(a, c);
        g.add_edge(b, d);
    }

    fn bad_edges(&mut self, g: &Graph, girth: usize) -> Vec<(usize, usize)> {
        let mut h = g.clone();
        let mut bad = Vec::new();
        for &(u, v) in g.edges().pairs() {
            h.remove_edge(u, v);
            if near(&h, u, v, girth - 1, &mut self.scratch) {
                bad.push((u, v));
            }
            h.add_edge(u, v);
        }
        bad
    }

    /// Replaces `uv` and a random `xy` by `ux` and `vy` when both new edges
    /// close only cycles of length at least `girth`.
    fn repair(&mut self, g: &mut Graph, u: usize, v: usize, girth: usize) -> Option<bool> {
        for _ in 0..SWAP_TRIES_PER_EDGE {
            self.attempts += 1;
            if self.attempts > self.budget {
                return None;
            }
            let (x, y) = self.random_edge(g);
            if x == u || x == v || y == u || y == v || g.has_edge(u, x) || g.has_edge(v, y) {
                continue;
            }
            g.remove_edge(u, v);
            g.remove_edge(x, y);
            if !near(g, u, x, girth - 1, &mut self.scratch) {
                g.add_edge(u, x);
                if !near(g, v, y, girth - 1, &mut self.scratch) {
                    g.add_edge(v, y);
                    return Some(true);
                }
                g.remove_edge(u, x);
            }
            g.add_edge(u, v);
            g.add_edge(x, y);
        }
        Some(false)
    }
}

fn circulant(n: usize, r: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in 1..=r / 2 {
            g.add_edge(i, (i + j) % n);
        }
        if r % 2 == 1 && i < n / 2 {
            g.add_edge(i, i + n / 2);
        }
    }
    g
}

fn swap_search(n: usize, r: usize, girth: usize, rng: &mut ChaCha8Rng, budget: u64) -> Option<Graph> {
    let mut g = circulant(n, r);
    let mut s = Swapper {
        rng,
        attempts: 0,
        budget,
        scratch: Vec::new(),
    };
    for _ in 0..4 * n * r {
        s.shake(&mut g);
    }
    loop {
        let mut bad = s.bad_edges(&g, girth);
        if bad.is_empty() {
            return Some(g);
        }
        bad.shuffle(s.rng);
        let mut progress = false;
        for (u, v) in bad {
            if !g.has_edge(u, v) {
                continue;
            }
            g.remove_edge(u, v);
            let still_bad = near(&g, u, v, girth - 1, &mut s.scratch);
            g.add_edge(u, v);
            if still_bad {
                progress |= s.repair(&mut g, u, v, girth)?;
            }
        }
        if !progress {
            for _ in 0..n.max(8) / 4 {
                s.shake(&mut g);
            }
        }
    }
}

fn check_regular_params(n: usize, r: usize, g: usize) -> Result<()> {
    if n > ORDER_CAP {
        return Err(ConstructionError::BadParams(format!("order {n} exceeds {ORDER_CAP}")));
    }
    if n == 0 || r >= n {
        return Err(ConstructionError::Infeasible(format!(
            "no {r}-regular graph on {n} vertices"
        )));
    }
    if n * r % 2 == 1 {
        return Err(ConstructionError::Infeasible(format!("n*r = {} is odd", n * r)));
    }
    if n < moore_bound(r, g) {
        return Err(ConstructionError::Infeasible(format!(
            "{n} is below the Moore bound {} for degree {r} and girth {g}",
            moore_bound(r, g)
        )));
    }
    Ok(())
}

pub fn high_girth_regular(n: usize, r: usize, g: usize, seed: u64) -> Result<Graph> {
    high_girth_regular_with(n, r, g, seed, DEFAULT_SWAP_BUDGET)
}

/// `r`-regular graph on `n` vertices with girth at least `g`, deterministic
/// in `seed`. `budget` bounds the swap attempts of the randomized search.
pub fn high_girth_regular_with(n: usize, r: usize, g: usize, seed: u64, budget: u64) -> Result<Graph> {
    check_regular_params(n, r, g)?;
    match r {
        0 => return Ok(Graph::empty(n)),
        1 => {
            return Ok(Graph::from_edges(n, &(0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>())?)
        }
        2 => return Ok(named::cycle(n)),
        _ => {}
    }
    let lib = high_girth_library(r, g);
    if let Some(gr) = constructive(n, r, &lib, 3) {
        return Ok(gr);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let Some(gr) = swap_search(n, r, g.max(3), &mut rng, budget) {
        return Ok(gr);
    }
    if let Some(m) = glue_base_order(n, r) {
        if (m * r).is_multiple_of(2) && m > r && m >= moore_bound(r, g) {
            if let Some(base) = swap_search(m, r, g.max(3), &mut rng, budget) {
                let copies = if r.is_multiple_of(2) { r / 2 } else { r };
                return Ok(glue(&vec![base; copies], r));
            }
        }
    }
    Err(ConstructionError::SearchExhausted(budget))
}

/// How many vertices lose one degree, and how far apart they must be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyPattern {
    pub count: usize,
    pub min_pairwise_distance: usize,
}

/// A graph with its degree-deficient vertices.
#[derive(Clone, Debug)]
pub struct Deficient {
    pub graph: Graph,
    pub deficient: Vec<usize>,
}

impl Deficient {
    /// Degrees, girth and pairwise distances of the deficient vertices.
    pub fn check(&self, r: usize, girth: usize, dist: usize) -> std::result::Result<(), String> {
        let g = &self.graph;
        let mut is_def = vec![false; g.order()];
        for &v in &self.deficient {
            is_def[v] = true;
        }
        for v in 0..g.order() {
            let want = if is_def[v] { r - 1 } else { r };
            if g.degree(v) != want {
                return Err(format!("vertex {v} has degree {} instead of {want}", g.degree(v)));
            }
        }
        if !girth_ok(g, girth) {
            return Err(format!("girth {:?} below {girth}", g.girth()));
        }
        let mut scratch = Vec::new();
        for (i, &v) in self.deficient.iter().enumerate() {
            let mut t = vec![false; g.order()];
            for &w in &self.deficient[i + 1..] {
                t[w] = true;
            }
            if within(g, v, &t, dist, &mut scratch) {
                return Err(format!("deficient vertex {v} has another within distance {dist}"));
            }
        }
        Ok(())
    }
}

/// Removes `count` edges whose endpoints are pairwise at distance at least
/// `dist` (measured after removal), choosing edges in seeded random order.
/// The first `strict.0` edges must moreover be pairwise `strict.1` apart.
fn remove_far_edges(
    g: &Graph,
    count: usize,
    dist: usize,
    strict: (usize, usize),
    rng: &mut ChaCha8Rng,
) -> Option<(Graph, Vec<(usize, usize)>)> {
    let mut h = g.clone();
    let mut edges = g.edges().pairs().to_vec();
    edges.shuffle(rng);
    let mut chosen = Vec::new();
    let mut marked = vec![false; g.order()];
    let mut marked_strict = vec![false; g.order()];
    let mut scratch = Vec::new();
    for (u, v) in edges {
        if chosen.len() == count {
            break;
        }
        if marked[u] || marked[v] {
            continue;
        }
        let is_strict = chosen.len() < strict.0;
        h.remove_edge(u, v);
        let mut near = false;
        for (a, b) in [(u, v), (v, u)] {
            marked[b] = true;
            near = within(&h, a, &marked, dist, &mut scratch);
            if !near && is_strict {
                marked_strict[b] = true;
                near = within(&h, a, &marked_strict, strict.1, &mut scratch);
                marked_strict[b] = false;
            }
            marked[b] = false;
            if near {
                break;
            }
        }
        if near {
            h.add_edge(u, v);
            continue;
        }
        marked[u] = true;
        marked[v] = true;
        if is_strict {
            marked_strict[u] = true;
            marked_strict[v] = true;
        }
        chosen.push((u, v));
    }
    (chosen.len() == count).then_some((h, chosen))
}

/// Joins a new vertex to `r` freed endpoints: both ends of the first `r/2`
/// removed edges and one end of the next. Returns the graph and the vertices
/// left deficient.
fn attach_apex(h: &Graph, removed: &[(usize, usize)], r: usize) -> (Graph, Vec<usize>) {
    let mut g = h.with_extra_vertices(1);
    let apex = h.order();
    let mut left = Vec::new();
    for (j, &(a, b)) in removed.iter().enumerate() {
        if j < r / 2 {
            g.add_edge(apex, a);
            g.add_edge(apex, b);
        } else if j == r / 2 {
            g.add_edge(apex, a);
            left.push(b);
        } else {
            left.extend([a, b]);
        }
    }
    (g, left)
}

fn deficient_from_base(
    base: &Graph,
    r: usize,
    girth: usize,
    pat: DeficiencyPattern,
    rng: &mut ChaCha8Rng,
) -> Option<Deficient> {
    let i = pat.count;
    let dist = pat.min_pairwise_distance.max(1);
    let out = if i.is_multiple_of(2) {
        let (h, removed) = remove_far_edges(base, i / 2, dist, (0, 0), rng)?;
        let mut deficient: Vec<usize> = removed.iter().flat_map(|&(a, b)| [a, b]).collect();
        deficient.sort_unstable();
        Deficient { graph: h, deficient }
    } else {
        // cycles through the apex stay long when its neighbours are far apart
        let apex_edges = r / 2 + 1;
        let strict = (apex_edges, dist.max(girth.saturating_sub(2)));
        let (h, removed) = remove_far_edges(base, (i + r) / 2, dist, strict, rng)?;
        let (graph, mut deficient) = attach_apex(&h, &removed, r);
        deficient.sort_unstable();
        Deficient { graph, deficient }
    };
    out.check(r, girth, dist).ok()?;
    Some(out)
}

fn check_deficiency(n: usize, r: usize, pat: DeficiencyPattern) -> Result<()> {
    let i = pat.count;
    if i > 0 && r == 0 {
        return Err(ConstructionError::Infeasible("degree 0 cannot drop".into()));
    }
    if i > n {
        return Err(ConstructionError::Infeasible(format!("{i} deficient vertices among {n}")));
    }
    if (n * r - i) % 2 == 1 {
        return Err(ConstructionError::Infeasible(format!(
            "degree sum n*r - i = {} is odd",
            n * r - i
        )));
    }
    if i % 2 == 1 && r.is_multiple_of(2) {
        return Err(ConstructionError::Infeasible("odd deficiency needs odd degree".into()));
    }
    Ok(())
}

pub fn deficient_high_girth(
    n: usize,
    r: usize,
    g: usize,
    pattern: DeficiencyPattern,
    seed: u64,
) -> Result<Deficient> {
    deficient_high_girth_with(n, r, g, pattern, seed, DEFAULT_SWAP_BUDGET)
}

/// `n`-vertex graph of girth at least `g` with `pattern.count` vertices of
/// degree `r - 1`, pairwise at least `pattern.min_pairwise_distance` apart,
/// and all other vertices of degree `r`.
///
/// Even counts remove far-apart edges from an `r`-regular graph. Odd counts
/// start from an `r`-regular graph on `n - 1` vertices, remove `(i + r) / 2`
/// far-apart edges and add one vertex adjacent to `r` of the freed endpoints.
pub fn deficient_high_girth_with(
    n: usize,
    r: usize,
    g: usize,
    pattern: DeficiencyPattern,
    seed: u64,
    budget: u64,
) -> Result<Deficient> {
    check_deficiency(n, r, pattern)?;
    let i = pattern.count;
    if i == 0 {
        return Ok(Deficient {
            graph: high_girth_regular_with(n, r, g, seed, budget)?,
            deficient: Vec::new(),
        });
    }
    let base_order = if i.is_multiple_of(2) { n } else { n - 1 };
    let mut last = ConstructionError::SearchExhausted(budget);
    for attempt in 0..DEFICIENT_RETRIES {
        let s = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let base = match high_girth_regular_with(base_order, r, g, s, budget) {
            Ok(b) => b,
            Err(e @ ConstructionError::Infeasible(_)) => return Err(e),
            Err(e) => {
                last = e;
                continue;
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        if let Some(d) = deficient_from_base(&base, r, g, pattern, &mut rng) {
            return Ok(d);
        }
    }
    Err(last)
}

/// Smallest available `r`-regular graph of girth at least `g`.
pub(crate) fn smallest_high_girth(r: usize, g: usize, seed: u64, budget: u64) -> Result<Graph> {
    if let Some((_, gr)) = high_girth_library(r, g).into_iter().next() {
        return Ok(gr);
    }
    if r == 2 {
        return Ok(named::cycle(g.max(3)));
    }
    let mut n = moore_bound(r, g).max(r + 1);
    let mut last = ConstructionError::SearchExhausted(budget);
    for _ in 0..8 {
        if n * r % 2 == 1 {
            n += 1;
        }
        if n > ORDER_CAP {
            break;
        }
        match high_girth_regular_with(n, r, g, seed, budget / 8) {
            Ok(gr) => return Ok(gr),
            Err(e) => last = e,
        }
        n += n / 3 + 1;
    }
    Err(last)
}

/// Gadget with `count` deficient vertices built from as few disjoint copies
/// of a small high-girth base as the distance constraints allow.
pub(crate) fn deficient_gadget(
    r: usize,
    g: usize,
    pattern: DeficiencyPattern,
    seed: u64,
    budget: u64,
) -> Result<Deficient> {
    if pattern.count % 2 == 1 && r.is_multiple_of(2) {
        return Err(ConstructionError::Infeasible("odd deficiency needs odd degree".into()));
    }
    let base = smallest_high_girth(r, g, seed, budget)?;
    let max_copies = pattern.count + r + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for c in 1..=max_copies {
        if c * base.order() + 1 > ORDER_CAP {
            break;
        }
        let union = Graph::disjoint_union(&vec![base.clone(); c]);
        if let Some(d) = deficient_from_base(&union, r, g, pattern, &mut rng) {
            return Ok(d);
        }
    }
    Err(ConstructionError::SearchExhausted(budget))
}
