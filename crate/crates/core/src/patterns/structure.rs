use crate::bitset;
use crate::graph::Graph;
use crate::named;

use super::contains;
use super::count::Plan;

/// Whether an edge-preserving map `f -> h` exists (not necessarily injective),
/// i.e. whether `f` lies in some blow-up of `h`.
pub fn exists_homomorphism(f: &Graph, h: &Graph) -> bool {
    if f.order() == 0 {
        return true;
    }
    if h.order() == 0 {
        return false;
    }
    let plan = Plan::new(f, true);
    let mut all = vec![0u64; h.words()];
    bitset::fill(&mut all, h.order());
    let mut img = vec![0usize; plan.vertices.len()];
    hom_search(&plan, h, &all, 0, &mut img)
}

fn hom_search(plan: &Plan, h: &Graph, all: &[u64], pos: usize, img: &mut [usize]) -> bool {
    if pos == plan.vertices.len() {
        return true;
    }
    let mut cand = all.to_vec();
    for &b in &plan.back[pos] {
        bitset::intersect_with(&mut cand, h.neighbor_bits(img[b]));
    }
    for v in bitset::ones(&cand) {
        img[pos] = v;
        if hom_search(plan, h, all, pos + 1, img) {
            return true;
        }
    }
    false
}

/// Edge sets of the blocks (maximal 2-connected pieces and bridges).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut St, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let nbrs: Vec<usize> = s.g.neighbors(u).collect();
        for w in nbrs {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = g.order();
    let mut s = St {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// Every block is an edge or a triangle, and all triangles share a vertex.
pub fn is_extended_friendship(f: &Graph) -> bool {
    let mut common: Option<Vec<usize>> = None;
    for block in blocks(f) {
        if block.len() == 1 {
            continue;
        }
        let mut vs: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        if block.len() != 3 || vs.len() != 3 {
            return false;
        }
        common = Some(match common {
            None => vs,
            Some(c) => c.into_iter().filter(|v| vs.contains(v)).collect(),
        });
        if common.as_ref().is_some_and(|c| c.is_empty()) {
            return false;
        }
    }
    true
}

/// `false` only on a counterexample to: a connected graph with at least `k`
/// vertices and minimum degree at least `k/2` contains `P_k`.
pub fn erdos_gallai_path_check(g: &Graph, k: usize) -> bool {
    let premise = g.is_connected() && g.order() >= k && g.min_degree() >= k / 2;
    !premise || contains(&named::path(k), g)
}
