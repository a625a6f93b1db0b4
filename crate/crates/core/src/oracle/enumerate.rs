//! Isomorph-free generation of regular graphs.
//!
//! Connected graphs grow one vertex at a time. A child is kept only when its
//! new vertex lies in the automorphism orbit of the child's canonical
//! deletion vertex: the non-cut vertex of least degree with the largest
//! canonical position. Children of one parent are deduplicated by canonical
//! form. Every intermediate graph is an induced subgraph of its
//! descendants, so a forbidden subgraph prunes the whole subtree.
//! Disconnected graphs are multisets of connected ones.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::OracleError;
use crate::canon::{canonical_labeling, CANON_ORDER_CAP};
use crate::graph::Graph;
use crate::patterns::contains;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Largest order the generator accepts.
pub const ENUM_ORDER_CAP: usize = 32;

/// Frontier size at which generation switches to parallel subtrees.
const PAR_FRONTIER: usize = 32;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Graphs containing this one are skipped, with their subtrees.
    pub forbid: Option<Graph>,
    pub connected_only: bool,
    /// Augmentation nodes allowed before generation gives up.
    pub budget: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            forbid: None,
            connected_only: false,
            budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub graphs: u64,
    pub nodes: u64,
    /// False when the budget ran out or the sink stopped early.
    pub complete: bool,
}

pub(crate) struct Ctx {
    budget: u64,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
}

impl Ctx {
    pub(crate) fn new(budget: u64) -> Self {
        Ctx {
            budget,
            nodes: AtomicU64::new(0),
            out_of_budget: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> bool {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.out_of_budget.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.budget)
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.out_of_budget.load(Ordering::Relaxed)
    }
}

/// Whether the remaining `m - k` vertices can still raise every degree to `r`.
fn completable(g: &Graph, m: usize, r: usize) -> bool {
    let t = m - g.order();
    let mut sum = 0;
    for v in 0..g.order() {
        let d = g.degree(v);
        if d > r || r - d > t {
            return false;
        }
        sum += r - d;
    }
    if t == 0 {
        return sum == 0;
    }
    sum <= t * r && sum + t * (t - 1) >= t * r && (t * r - sum).is_multiple_of(2)
}

fn is_cut_vertex(g: &Graph, u: usize) -> bool {
    let n = g.order();
    if n <= 2 {
        return false;
    }
    let start = if u == 0 { 1 } else { 0 };
    let mut seen = vec![false; n];
    seen[u] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count < n - 1
}

struct Gen<'a> {
    m: usize,
    r: usize,
    forbid: Option<&'a Graph>,
    ctx: &'a Ctx,
}

impl Gen<'_> {
    fn children(&self, parent: &Graph) -> Vec<Graph> {
        let k = parent.order();
        let open: Vec<usize> = (0..k).filter(|&v| parent.degree(v) < self.r).collect();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let base = parent.with_extra_vertices(1);
        for mask in 1u64..(1u64 << open.len()) {
            let size = mask.count_ones() as usize;
            if size > self.r {
                continue;
            }
            let mut child = base.clone();
            for (i, &u) in open.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    child.add_edge(k, u);
                }
            }
            if !completable(&child, self.m, self.r) {
                continue;
            }
            // the new vertex is never a cut vertex, so it must have the least
            // degree among non-cut vertices
            let mut min_deg = size;
            for u in 0..k {
                let d = child.degree(u);
                if d < min_deg && !is_cut_vertex(&child, u) {
                    min_deg = d;
                }
            }
            if min_deg < size {
                continue;
            }
            if !self.ctx.tick() {
                return out;
            }
            let lab = canonical_labeling(&child).expect("order within the canonical cap");
            let chosen = (0..=k)
                .filter(|&u| child.degree(u) == size && (u == k || !is_cut_vertex(&child, u)))
                .max_by_key(|&u| lab.lab[u])
                .expect("new vertex qualifies");
            if !lab.same_orbit(k, chosen) {
                continue;
            }
            if !seen.insert(lab.graph6) {
                continue;
            }
            if self.forbid.is_some_and(|f| contains(f, &child)) {
                continue;
            }
            out.push(child);
        }
        out
    }

    fn dfs(&self, g: Graph, out: &mut Vec<Graph>) {
        if g.order() == self.m {
            out.push(g);
            return;
        }
        for c in self.children(&g) {
            if self.ctx.exhausted() {
                return;
            }
            self.dfs(c, out);
        }
    }
}

/// Connected `r`-regular graphs on `m` vertices, one per isomorphism class,
/// sorted by canonical graph6.
pub(crate) fn connected_regular(m: usize, r: usize, forbid: Option<&Graph>, ctx: &Ctx) -> Vec<Graph> {
    if m == 1 && r == 0 {
        let k1 = Graph::empty(1);
        return if forbid.is_some_and(|f| contains(f, &k1)) { Vec::new() } else { vec![k1] };
    }
    if m <= 1 || r == 0 || r >= m || m * r % 2 == 1 {
        return Vec::new();
    }
    let gen = Gen { m, r, forbid, ctx };
    let mut frontier = vec![Graph::empty(1)];
    if forbid.is_some_and(|f| contains(f, &frontier[0])) {
        return Vec::new();
    }
    while !frontier.is_empty() && frontier[0].order() < m && frontier.len() < PAR_FRONTIER {
        frontier = frontier.iter().flat_map(|g| gen.children(g)).collect();
    }
    let mut found: Vec<Graph> = frontier
        .into_par_iter()
        .map(|g| {
            let mut out = Vec::new();
            gen.dfs(g, &mut out);
            out
        })
        .flatten()
        .collect();
    let mut keyed: Vec<(String, Graph)> = found
        .drain(..)
        .map(|g| (canonical_labeling(&g).expect("small").graph6, g))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

fn check_params(n: usize, r: usize) -> Result<(), OracleError> {
    if n > ENUM_ORDER_CAP.min(CANON_ORDER_CAP) {
        return Err(OracleError::OrderCap(n));
    }
    if n == 0 || r >= n {
        return Err(OracleError::DegreeTooLarge { n, r });
    }
    if n * r % 2 == 1 {
        return Err(OracleError::ParityInfeasible { n, r });
    }
    Ok(())
}

/// Streams one representative of every isomorphism class of `r`-regular
/// graphs on `n` vertices to `sink`, in a fixed order. The sink may stop
/// the stream by returning `ControlFlow::Break`.
pub fn enumerate_regular_with(
    n: usize,
    r: usize,
    opts: &EnumOptions,
    sink: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> Result<EnumStats, OracleError> {
    let ctx = Ctx::new(opts.budget);
    let (graphs, stopped) = enumerate_in(n, r, opts, &ctx, sink)?;
    Ok(EnumStats {
        graphs,
        nodes: ctx.nodes(),
        complete: !stopped && !ctx.exhausted(),
    })
}

pub(crate) fn enumerate_in(
    n: usize,
    r: usize,
    opts: &EnumOptions,
    ctx: &Ctx,
    sink: &mut dyn FnMut(&Graph) -> ControlFlow<()>,
) -> Result<(u64, bool), OracleError> {
    check_params(n, r)?;
    let forbid = opts.forbid.as_ref();
    let mut emitted = 0u64;
    let mut emit = |g: &Graph| -> ControlFlow<()> {
        if forbid.is_some_and(|f| contains(f, g)) {
            return ControlFlow::Continue(());
        }
        emitted += 1;
        sink(g)
    };
    // dense regularities: complements of sparse ones
    let s = n - 1 - r;
    if !opts.connected_only && r + 4 >= n && s < r {
        let sparse = EnumOptions {
            forbid: None,
            connected_only: false,
            budget: opts.budget,
        };
        let mut stopped = false;
        enumerate_in(n, s, &sparse, ctx, &mut |g| {
            let c = g.complement();
            let flow = emit(&c);
            stopped = flow.is_break();
            flow
        })?;
        return Ok((emitted, stopped));
    }
    if opts.connected_only {
        for g in connected_regular(n, r, forbid, ctx) {
            if emit(&g).is_break() {
                return Ok((emitted, true));
            }
        }
        return Ok((emitted, false));
    }
    let comps: Vec<Vec<Graph>> = (0..=n)
        .map(|m| if m == 0 { Vec::new() } else { connected_regular(m, r, forbid, ctx) })
        .collect();
    // multisets of components by non-decreasing (order, index)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let stopped = combine(n, (1, 0), &comps, &mut stack, &mut |parts| {
        let gs: Vec<Graph> = parts.iter().map(|&(m, i)| comps[m][i].clone()).collect();
        emit(&Graph::disjoint_union(&gs))
    });
    Ok((emitted, stopped))
}

fn combine(
    left: usize,
    from: (usize, usize),
    comps: &[Vec<Graph>],
    stack: &mut Vec<(usize, usize)>,
    f: &mut dyn FnMut(&[(usize, usize)]) -> ControlFlow<()>,
) -> bool {
    if left == 0 {
        return f(stack).is_break();
    }
    for m in from.0..=left {
        let start = if m == from.0 { from.1 } else { 0 };
        for i in start..comps[m].len() {
            stack.push((m, i));
            let stop = combine(left - m, (m, i), comps, stack, f);
            stack.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

/// All `r`-regular graphs on `n` vertices up to isomorphism.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Vec<Graph>, OracleError> {
    let mut out = Vec::new();
    let stats = enumerate_regular_with(n, r, &EnumOptions::default(), &mut |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    if !stats.complete {
        return Err(OracleError::Budget(stats.nodes));
    }
    Ok(out)
}
