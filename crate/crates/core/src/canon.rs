//! Canonical labeling by partition refinement with automorphism pruning.
//!
//! The search individualizes vertices of the first non-singleton cell of an
//! equitable ordered partition, refines, and keeps the leaf whose relabeled
//! adjacency string (graph6 bit order) is lexicographically smallest. Leaves
//! that reproduce the first or the best certificate yield automorphisms; those
//! prune sibling subtrees and give the group order as a product of first-path
//! stabilizer orbit lengths.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset;
use crate::graph::Graph;

/// Largest order accepted by [`canonical_labeling`].
pub const CANON_ORDER_CAP: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("order {0} exceeds the canonical-form cap of {CANON_ORDER_CAP}")]
    OrderCap(usize),
}

/// Isomorphism-invariant summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub canon_graph6: String,
    pub order: usize,
    #[serde(with = "crate::bigstr")]
    pub automorphism_count: BigUint,
}

/// Full output of the canonical labeling search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `lab[v]` is the canonical position of vertex `v`.
    pub lab: Vec<usize>,
    pub graph6: String,
    /// Smallest vertex in the automorphism orbit of each vertex.
    pub orbits: Vec<usize>,
    pub aut_order: BigUint,
    pub generators: Vec<Vec<usize>>,
    pub nodes: u64,
}

impl Labeling {
    pub fn form(&self) -> CanonicalForm {
        CanonicalForm {
            canon_graph6: self.graph6.clone(),
            order: self.lab.len(),
            automorphism_count: self.aut_order.clone(),
        }
    }

    /// The canonically relabeled graph.
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.lab)
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_labeling(g).map(|l| l.form())
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling, CanonError> {
    let n = g.order();
    if n > CANON_ORDER_CAP {
        return Err(CanonError::OrderCap(n));
    }
    let mut s = Search {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
        level_orbits: Vec::new(),
        nodes: 0,
    };
    let root = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    let mut path = Vec::new();
    s.dfs(root, &mut path, true);
    let best = s.best.take().expect("search reaches a leaf");
    let mut uf = UnionFind::new(n);
    for gen in &s.gens {
        for (v, &w) in gen.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let mut orbits = vec![0; n];
    let mut smallest = vec![usize::MAX; n];
    for v in 0..n {
        let r = uf.find(v);
        smallest[r] = smallest[r].min(v);
    }
    for (v, o) in orbits.iter_mut().enumerate() {
        *o = smallest[uf.find(v)];
    }
    let aut_order = s
        .level_orbits
        .iter()
        .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k));
    Ok(Labeling {
        lab: best.lab,
        graph6: best.cert,
        orbits,
        aut_order,
        generators: s.gens,
        nodes: s.nodes,
    })
}

struct Leaf {
    lab: Vec<usize>,
    cert: String,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    level_orbits: Vec<usize>,
    nodes: u64,
}

type Cells = Vec<Vec<usize>>;

impl Search<'_> {
    /// Returns `Some(d)` to resume the child loop of the path node at depth `d`.
    fn dfs(&mut self, cells: Cells, path: &mut Vec<usize>, on_first: bool) -> Option<usize> {
        self.nodes += 1;
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let d = path.len();
        let cell = cells[target].clone();
        let mut done: Vec<usize> = Vec::new();
        for &w in &cell {
            if !done.is_empty() {
                let mut uf = self.stabilizer(path);
                if done.iter().any(|&u| uf.find(u) == uf.find(w)) {
                    continue;
                }
            }
            let first_child = done.is_empty();
            done.push(w);
            let child = individualize(&cells, target, w);
            path.push(w);
            let r = self.dfs(child, path, on_first && first_child);
            path.pop();
            if let Some(l) = r {
                if l < d {
                    return Some(l);
                }
            }
        }
        if on_first {
            let mut uf = self.stabilizer(path);
            let root = uf.find(cell[0]);
            let size = cell.iter().filter(|&&v| uf.find(v) == root).count();
            self.level_orbits.push(size);
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let mut lab = vec![0; self.n];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let cert = relabeled_graph6(self.g, cells);
        let leaf = Leaf {
            lab,
            cert,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let aut = automorphism(&leaf.lab, &first.lab);
            let l = common_prefix(&leaf.path, &first.path);
            self.gens.push(aut);
            return Some(l);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let aut = automorphism(&leaf.lab, &best.lab);
                let l = common_prefix(&leaf.path, &best.path);
                self.gens.push(aut);
                Some(l)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Orbits of the group generated by known automorphisms fixing `path`.
    fn stabilizer(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for gen in &self.gens {
            if path.iter().all(|&p| gen[p] == p) {
                for (v, &w) in gen.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

/// Maps the vertex at each position of leaf `a` to the vertex at the same
/// position of leaf `b`.
fn automorphism(lab_a: &[usize], lab_b: &[usize]) -> Vec<usize> {
    let n = lab_a.len();
    let mut inv_b = vec![0; n];
    for (v, &p) in lab_b.iter().enumerate() {
        inv_b[p] = v;
    }
    (0..n).map(|v| inv_b[lab_a[v]]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(vec![v]);
    out.push(cells[target].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[target + 1..]);
    out
}

/// Coarsest equitable refinement of an ordered partition. Split pieces keep
/// the position of their parent cell, ordered by ascending neighbor count.
pub(crate) fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let words = g.words();
    let mut mask = vec![0u64; words];
    let mut counts: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < cells.len() {
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &cells[i] {
                bitset::insert(&mut mask, v);
            }
            let mut j = 0;
            while j < cells.len() {
                if cells[j].len() == 1 {
                    j += 1;
                    continue;
                }
                counts.clear();
                for &x in &cells[j] {
                    let c = g
                        .neighbor_bits(x)
                        .iter()
                        .zip(&mask)
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum();
                    counts.push((c, x));
                }
                let c0 = counts[0].0;
                if counts.iter().all(|&(c, _)| c == c0) {
                    j += 1;
                    continue;
                }
                counts.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for &(c, x) in &counts {
                    if c != last {
                        pieces.push(Vec::new());
                        last = c;
                    }
                    pieces.last_mut().unwrap().push(x);
                }
                let k = pieces.len();
                cells.splice(j..j + 1, pieces);
                j += k;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn relabeled_graph6(g: &Graph, cells: &Cells) -> String {
    let n = cells.len();
    let inv: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let mut h = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(inv[i], inv[j]) {
                h.add_edge(i, j);
            }
        }
    }
    crate::io::graph6_encode(&h)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        g.relabel(&perm)
    }

    #[test]
    fn group_orders() {
        let cases: Vec<(Graph, u64)> = vec![
            (named::cycle(5), 10),
            (named::complete(3), 6),
            (named::path(4), 2),
            (named::petersen(), 120),
            (named::complete(6), 720),
            (named::complete_bipartite(4, 4), 1152),
            (Graph::disjoint_union(&[named::complete(6), named::complete(6)]), 1_036_800),
            (Graph::empty(5), 120),
            (named::heawood(), 336),
            (named::complete_multipartite(&[3, 3, 3]), 1296),
        ];
        for (g, order) in cases {
            let l = canonical_labeling(&g).unwrap();
            assert_eq!(l.aut_order, BigUint::from(order), "{g:?}");
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [named::petersen(), named::mcgee(), named::robertson(), named::path(7)] {
            let c = canonical_form(&g).unwrap();
            for seed in 0..5 {
                assert_eq!(canonical_form(&shuffled(&g, seed)).unwrap(), c);
            }
        }
    }

    #[test]
    fn kneser_matches_petersen() {
        assert_eq!(
            canonical_form(&named::kneser(5, 2)).unwrap(),
            canonical_form(&named::petersen()).unwrap()
        );
        assert_ne!(
            canonical_form(&named::petersen()).unwrap(),
            canonical_form(&named::mobius_kantor().induced_subgraph(&(0..10).collect::<Vec<_>>()))
                .unwrap()
        );
    }

    #[test]
    fn tiny_graphs() {
        let e = canonical_labeling(&Graph::empty(0)).unwrap();
        assert_eq!(e.graph6, "?");
        assert_eq!(e.aut_order, BigUint::from(1u32));
        let one = canonical_labeling(&Graph::empty(1)).unwrap();
        assert_eq!(one.graph6, "@");
    }

    #[test]
    fn orbits_of_path() {
        let l = canonical_labeling(&named::path(5)).unwrap();
        assert!(l.same_orbit(0, 4));
        assert!(l.same_orbit(1, 3));
        assert!(!l.same_orbit(0, 2));
    }

    #[test]
    fn rejects_huge_orders() {
        assert_eq!(
            canonical_form(&Graph::empty(CANON_ORDER_CAP + 1)),
            Err(CanonError::OrderCap(CANON_ORDER_CAP + 1))
        );
    }
}
