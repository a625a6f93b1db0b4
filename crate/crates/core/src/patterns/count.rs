//! Injective homomorphism counting by backtracking over bitset candidates.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bitset;
use crate::graph::Graph;

/// Host orders from which the root level is split across threads.
const PARALLEL_HOST_ORDER: usize = 48;

/// Visiting order over the non-isolated vertices of a pattern.
pub(crate) struct Plan {
    pub(crate) vertices: Vec<usize>,
    /// Earlier positions adjacent to each position.
    pub(crate) back: Vec<Vec<usize>>,
    pub(crate) degree: Vec<usize>,
    pub(crate) isolated: usize,
}

impl Plan {
    /// Starts at a vertex of maximum degree; each next vertex has the most
    /// already-placed neighbours, ties broken by degree then index.
    pub(crate) fn new(h: &Graph, include_isolated: bool) -> Plan {
        let n = h.order();
        let mut todo: Vec<usize> = (0..n)
            .filter(|&v| include_isolated || h.degree(v) > 0)
            .collect();
        let isolated = n - todo.len();
        let mut pos = vec![usize::MAX; n];
        let mut vertices = Vec::with_capacity(todo.len());
        let mut back = Vec::with_capacity(todo.len());
        while !todo.is_empty() {
            let key = |v: usize| {
                let placed = h.neighbors(v).filter(|&w| pos[w] != usize::MAX).count();
                (placed, h.degree(v), std::cmp::Reverse(v))
            };
            let (i, &v) = todo
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| key(v))
                .unwrap();
            todo.swap_remove(i);
            let mut b: Vec<usize> = h
                .neighbors(v)
                .filter(|&w| pos[w] != usize::MAX)
                .map(|w| pos[w])
                .collect();
            b.sort_unstable();
            pos[v] = vertices.len();
            vertices.push(v);
            back.push(b);
        }
        let degree = vertices.iter().map(|&v| h.degree(v)).collect();
        Plan {
            vertices,
            back,
            degree,
            isolated,
        }
    }
}

struct Engine<'a> {
    g: &'a Graph,
    plan: &'a Plan,
    /// Host vertices of degree at least the pattern degree, per position.
    masks: Vec<Vec<u64>>,
}

struct Scratch {
    img: Vec<usize>,
    used: Vec<u64>,
    cand: Vec<Vec<u64>>,
    nodes: u64,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, plan: &'a Plan) -> Self {
        let w = g.words();
        let masks = plan
            .degree
            .iter()
            .map(|&d| {
                let mut m = vec![0u64; w];
                for v in 0..g.order() {
                    if g.degree(v) >= d {
                        bitset::insert(&mut m, v);
                    }
                }
                m
            })
            .collect();
        Engine { g, plan, masks }
    }

    fn scratch(&self) -> Scratch {
        let k = self.plan.vertices.len();
        Scratch {
            img: vec![0; k],
            used: vec![0; self.g.words()],
            cand: vec![vec![0; self.g.words()]; k],
            nodes: 0,
        }
    }

    fn fill_candidates(&self, pos: usize, s: &mut Scratch) {
        let c = &mut s.cand[pos];
        c.copy_from_slice(&self.masks[pos]);
        for &b in &self.plan.back[pos] {
            bitset::intersect_with(c, self.g.neighbor_bits(s.img[b]));
        }
        bitset::difference_with(c, &s.used);
    }

    fn count(&self, pos: usize, s: &mut Scratch) -> u128 {
        s.nodes += 1;
        self.fill_candidates(pos, s);
        if pos + 1 == self.plan.vertices.len() {
            return bitset::count(&s.cand[pos]) as u128;
        }
        let cand = std::mem::take(&mut s.cand[pos]);
        let mut total = 0u128;
        for v in bitset::ones(&cand) {
            s.img[pos] = v;
            bitset::insert(&mut s.used, v);
            total += self.count(pos + 1, s);
            bitset::remove(&mut s.used, v);
        }
        s.cand[pos] = cand;
        total
    }

    fn exists(&self, pos: usize, s: &mut Scratch) -> bool {
        s.nodes += 1;
        self.fill_candidates(pos, s);
        if pos + 1 == self.plan.vertices.len() {
            return !bitset::is_empty(&s.cand[pos]);
        }
        let cand = std::mem::take(&mut s.cand[pos]);
        let mut found = false;
        for v in bitset::ones(&cand) {
            s.img[pos] = v;
            bitset::insert(&mut s.used, v);
            found = self.exists(pos + 1, s);
            bitset::remove(&mut s.used, v);
            if found {
                break;
            }
        }
        s.cand[pos] = cand;
        found
    }

    fn roots(&self) -> Vec<usize> {
        bitset::ones(&self.masks[0]).collect()
    }

    fn with_root<T>(&self, r: usize, f: impl FnOnce(&Self, &mut Scratch) -> T) -> (T, u64) {
        let mut s = self.scratch();
        s.img[0] = r;
        bitset::insert(&mut s.used, r);
        s.nodes = 1;
        let out = f(self, &mut s);
        (out, s.nodes)
    }
}

fn falling(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    (n - k + 1..=n).fold(BigUint::from(1u32), |acc, x| acc * BigUint::from(x))
}

/// Injective edge-preserving maps `h -> g`, with the search node count.
pub(crate) fn injective_homs(h: &Graph, g: &Graph) -> (BigUint, u64) {
    let plan = Plan::new(h, false);
    let k = plan.vertices.len();
    if k + plan.isolated > g.order() {
        return (BigUint::ZERO, 0);
    }
    let iso = falling(g.order() - k, plan.isolated);
    if k == 0 {
        return (iso, 0);
    }
    let engine = Engine::new(g, &plan);
    let per_root = |r: usize| {
        engine.with_root(r, |e, s| {
            if k == 1 {
                1
            } else {
                e.count(1, s)
            }
        })
    };
    let roots = engine.roots();
    let parts: Vec<(u128, u64)> = if g.order() >= PARALLEL_HOST_ORDER {
        roots.par_iter().map(|&r| per_root(r)).collect()
    } else {
        roots.iter().map(|&r| per_root(r)).collect()
    };
    let mut total = BigUint::ZERO;
    let mut nodes = 0;
    for (c, w) in parts {
        total += BigUint::from(c);
        nodes += w;
    }
    (total * iso, nodes)
}

/// Whether some injective edge-preserving map `h -> g` exists.
pub(crate) fn has_injective_hom(h: &Graph, g: &Graph) -> bool {
    let plan = Plan::new(h, false);
    let k = plan.vertices.len();
    if k + plan.isolated > g.order() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let engine = Engine::new(g, &plan);
    let per_root = |r: usize| engine.with_root(r, |e, s| k == 1 || e.exists(1, s)).0;
    let roots = engine.roots();
    if g.order() >= PARALLEL_HOST_ORDER {
        roots.par_iter().any(|&r| per_root(r))
    } else {
        roots.iter().any(|&r| per_root(r))
    }
}
