//! Simple undirected graphs on dense vertex indices `0..order`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::bitset;

/// Largest order a [`Graph`] may have.
///
/// Theorem-scale gadgets (girth-7 padding for 5-regular covers) need a few
/// thousand vertices, so the cap sits well above the enumeration range.
pub const ORDER_CAP: usize = 8192;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("order {0} exceeds the cap of {ORDER_CAP}")]
    OrderCap(usize),
    #[error("blow-up sizes: {0}")]
    BadBlowup(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

/// Simple graph with one adjacency bitset per vertex.
///
/// Adjacency is symmetric and loop-free; every set bit indexes a vertex below
/// `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
}

/// Normalized edge list: pairs `(u, v)` with `u < v`, sorted and distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList(Vec<(usize, usize)>);

impl EdgeList {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self, GraphError> {
        let mut v = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            v.push((a.min(b), a.max(b)));
        }
        v.sort_unstable();
        v.dedup();
        Ok(EdgeList(v))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    ///
    /// Panics if `order` exceeds [`ORDER_CAP`]; use [`Graph::try_empty`] to
    /// get an error instead.
    pub fn empty(order: usize) -> Self {
        Self::try_empty(order).expect("graph order")
    }

    pub fn try_empty(order: usize) -> Result<Self, GraphError> {
        if order > ORDER_CAP {
            return Err(GraphError::OrderCap(order));
        }
        let words = bitset::words_for(order).max(1);
        Ok(Graph {
            order,
            words,
            adj: vec![0; words * order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(order)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> bitset::Ones<'_> {
        bitset::ones(self.neighbor_bits(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test(self.neighbor_bits(u), v)
    }

    /// Adds `uv`. Both endpoints must be in range and distinct.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order && u != v, "bad edge {u}-{v}");
        let w = self.words;
        bitset::insert(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::insert(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::remove(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::remove(&mut self.adj[v * w..(v + 1) * w], u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.neighbor_bits(v))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sequence().iter().sum::<usize>() / 2
    }

    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        EdgeList(out)
    }

    /// Common degree if the graph is regular. The graph on zero vertices is
    /// 0-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let d = if self.order == 0 { 0 } else { self.degree(0) };
        (1..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v])
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                // a cycle found deeper than this cannot beat `best`
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Length of a shortest odd cycle, `None` iff bipartite.
    pub fn shortest_odd_cycle(&self) -> Option<usize> {
        self.shortest_odd_cycle_vertices().map(|c| c.len())
    }

    /// Vertices of a shortest odd cycle in cyclic order.
    ///
    /// Ties break towards the lowest BFS root, then the first closing edge in
    /// BFS order, so the result is deterministic.
    pub fn shortest_odd_cycle_vertices(&self) -> Option<Vec<usize>> {
        let n = self.order;
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, u, w)
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some((len, ..)) = best {
                    if 2 * dist[u] + 1 >= len {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    } else if dist[w] == dist[u] {
                        best = Some((2 * dist[u] + 1, s, u, w));
                        break 'bfs;
                    }
                }
            }
        }
        let (_, s, u, w) = best?;
        // Rebuild BFS parents from the winning root.
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let walk = |mut x: usize| {
            let mut p = vec![x];
            while x != s {
                x = parent[x];
                p.push(x);
            }
            p.reverse();
            p
        };
        let mut cycle = walk(u);
        let back = walk(w);
        cycle.extend(back.into_iter().skip(1).rev());
        Some(cycle)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// Proper 2-coloring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.order
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.is_connected() && self.edge_count() + 1 == self.order
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn disjoint_union(gs: &[Graph]) -> Graph {
        let n = gs.iter().map(Graph::order).sum();
        let mut g = Graph::empty(n);
        let mut off = 0;
        for h in gs {
            for (u, v) in h.edges().pairs() {
                g.add_edge(off + u, off + v);
            }
            off += h.order;
        }
        g
    }

    /// Removes exactly the listed edges; each must be present.
    pub fn delete_edges(&self, es: &EdgeList) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in es.pairs() {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            g.remove_edge(u, v);
        }
        Ok(g)
    }

    /// Subgraph induced on `vs`; vertex `vs[i]` becomes `i`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edges().pairs() {
            g.add_edge(perm[*u], perm[*v]);
        }
        g
    }

    /// Copy of `self` with `extra` isolated vertices appended.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        let mut g = Graph::empty(self.order + extra);
        for (u, v) in self.edges().pairs() {
            g.add_edge(*u, *v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges().pairs())
    }
}

/// Per-vertex blow-up sizes over a base graph.
#[derive(Clone, Debug)]
pub struct BlowupSpec {
    base: Graph,
    sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self, GraphError> {
        if sizes.len() != base.order() {
            return Err(GraphError::BadBlowup(format!(
                "{} sizes for {} base vertices",
                sizes.len(),
                base.order()
            )));
        }
        if sizes.contains(&0) {
            return Err(GraphError::BadBlowup("sizes must be positive".into()));
        }
        Ok(BlowupSpec { base, sizes })
    }

    pub fn uniform(base: Graph, size: usize) -> Result<Self, GraphError> {
        let n = base.order();
        Self::new(base, vec![size; n])
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// A blown-up graph together with its part boundaries.
#[derive(Clone, Debug)]
pub struct Blowup {
    pub graph: Graph,
    /// `parts[i]` holds the copies of base vertex `i`.
    pub parts: Vec<Range<usize>>,
}

impl Blowup {
    /// Base vertex whose part contains `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.parts.partition_point(|r| r.end <= v)
    }
}

/// Replaces base vertex `i` by an independent set of `sizes[i]` vertices and
/// every base edge by a complete bipartite join.
pub fn blowup(spec: &BlowupSpec) -> Result<Blowup, GraphError> {
    let mut parts = Vec::with_capacity(spec.sizes.len());
    let mut off = 0;
    for &s in &spec.sizes {
        parts.push(off..off + s);
        off += s;
    }
    let mut g = Graph::try_empty(off)?;
    for &(a, b) in spec.base.edges().pairs() {
        for u in parts[a].clone() {
            for v in parts[b].clone() {
                g.add_edge(u, v);
            }
        }
    }
    Ok(Blowup { graph: g, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn degree_sequences() {
        assert_eq!(named::complete(4).degree_sequence(), vec![3; 4]);
        assert_eq!(named::cycle(5).degree_sequence(), vec![2; 5]);
        let m = EdgeList::new([(0, 1), (2, 3), (4, 5)]).unwrap();
        let g = named::complete(6).delete_edges(&m).unwrap();
        assert_eq!(g.degree_sequence(), vec![4; 6]);
    }

    #[test]
    fn regularity() {
        assert_eq!(named::cycle(5).is_regular(), Some(2));
        assert_eq!(named::path(3).is_regular(), None);
        assert_eq!(named::complete_multipartite(&[3, 3, 3]).is_regular(), Some(6));
        assert_eq!(Graph::empty(4).is_regular(), Some(0));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(named::cycle(5).girth(), Some(5));
        assert_eq!(named::petersen().girth(), Some(5));
        assert_eq!(named::path(6).girth(), None);
        let b = blowup(&BlowupSpec::uniform(named::cycle(7), 3).unwrap()).unwrap();
        assert_eq!(b.graph.girth(), Some(4));
        assert_eq!(named::complete(4).girth(), Some(3));
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(named::complete(4).shortest_odd_cycle(), Some(3));
        assert_eq!(named::complete_bipartite(3, 3).shortest_odd_cycle(), None);
        assert_eq!(named::petersen().shortest_odd_cycle(), Some(5));
        for m in 1..=4 {
            let b = blowup(&BlowupSpec::uniform(named::cycle(7), m).unwrap()).unwrap();
            assert_eq!(b.graph.shortest_odd_cycle(), Some(7));
            assert_eq!(b.graph.is_regular(), Some(2 * m));
        }
        let c = named::petersen().shortest_odd_cycle_vertices().unwrap();
        let p = named::petersen();
        for i in 0..c.len() {
            assert!(p.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn distances() {
        let c6 = named::cycle(6);
        assert_eq!(c6.distance(0, 3).unwrap(), Some(3));
        assert_eq!(c6.distance(2, 2).unwrap(), Some(0));
        let two = Graph::disjoint_union(&[named::cycle(3), named::cycle(3)]);
        assert_eq!(two.distance(0, 4).unwrap(), None);
        assert!(matches!(
            c6.distance(0, 6),
            Err(GraphError::VertexOutOfRange { vertex: 6, order: 6 })
        ));
    }

    #[test]
    fn blowup_examples() {
        let b = blowup(&BlowupSpec::uniform(named::cycle(5), 2).unwrap()).unwrap();
        assert_eq!(b.graph.order(), 10);
        assert_eq!(b.graph.is_regular(), Some(4));
        assert_eq!(b.graph.edge_count(), 20);
        assert_eq!(b.graph.girth(), Some(4));
        assert_eq!(b.part_of(0), 0);
        assert_eq!(b.part_of(9), 4);
        let k = blowup(&BlowupSpec::new(named::complete(2), vec![2, 3]).unwrap()).unwrap();
        assert_eq!(k.graph, named::complete_bipartite(2, 3));
        assert!(BlowupSpec::new(named::complete(2), vec![1]).is_err());
        assert!(BlowupSpec::new(named::complete(2), vec![1, 0]).is_err());
    }

    #[test]
    fn algebra() {
        assert_eq!(named::complete(5).complement(), Graph::empty(5));
        let g = named::petersen();
        assert_eq!(g.complement().complement(), g);
        let u = Graph::disjoint_union(&[named::complete(6), named::complete(6)]);
        assert_eq!(u.order(), 12);
        assert_eq!(u.is_regular(), Some(5));
        assert_eq!(Graph::disjoint_union(&[]).order(), 0);
        let k5 = named::complete(5);
        let c5 = named::cycle(5);
        let d = k5.delete_edges(&c5.edges()).unwrap();
        assert_eq!(d.is_regular(), Some(2));
        assert_eq!(d.girth(), Some(5));
        assert_eq!(k5.delete_edges(&EdgeList::default()).unwrap(), k5);
        assert_eq!(
            c5.delete_edges(&EdgeList::new([(0, 2)]).unwrap()),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::try_empty(ORDER_CAP + 1).is_err());
    }
}
