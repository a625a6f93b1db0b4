//! Regular blow-ups of the 5-cycle, the apex witness, and the padded
//! blow-up cover of a core graph.

use std::collections::HashMap;
use std::ops::Range;

use super::bipartite::biregular_bipartite;
use super::girth::{deficient_gadget, DeficiencyPattern, DEFAULT_SWAP_BUDGET};
use super::ConstructionError;
use crate::graph::{Graph, ORDER_CAP};
use crate::patterns::{contains, exists_homomorphism};

type Result<T> = std::result::Result<T, ConstructionError>;

const SPLIT_BUDGET: u64 = 5_000_000;

/// A regular graph whose vertices split into five independent classes with
/// edges only between cyclically consecutive classes.
#[derive(Clone, Debug)]
pub struct C5Blowup {
    pub graph: Graph,
    pub classes: Vec<Range<usize>>,
}

/// Out-degrees `d_i^+` from class `i` to class `i+1`, or `None`.
fn solve_splits(sizes: &[usize; 5], d: usize, work: &mut u64) -> Option<([usize; 5], bool)> {
    let mut order = Vec::with_capacity(d + 1);
    let mid = d / 2;
    order.push(mid);
    for s in 1..=d {
        if mid + s <= d {
            order.push(mid + s);
        }
        if s <= mid {
            order.push(mid - s);
        }
    }
    'outer: for t in order {
        *work += 1;
        let mut plus = [0usize; 5];
        let mut minus = [0usize; 5];
        plus[0] = t;
        for i in 0..5 {
            let j = (i + 1) % 5;
            if plus[i] > sizes[j] {
                continue 'outer;
            }
            let e = sizes[i] * plus[i];
            if !e.is_multiple_of(sizes[j]) {
                continue 'outer;
            }
            let m = e / sizes[j];
            if m > sizes[i] || m > d {
                continue 'outer;
            }
            minus[j] = m;
            if j == 0 {
                if m != d - plus[0] {
                    continue 'outer;
                }
            } else {
                plus[j] = d - m;
            }
        }
        let positive = plus.iter().chain(&minus).all(|&x| x > 0);
        return Some((plus, positive));
    }
    None
}

/// Compositions of `n` into five positive parts whose parts lie in
/// `lo..=hi` with at least one outside `plo..=phi`.
fn compositions(n: usize, lo: usize, hi: usize, plo: usize, phi: usize, f: &mut dyn FnMut(&[usize; 5]) -> bool) -> bool {
    fn rec(
        idx: usize,
        left: usize,
        cur: &mut [usize; 5],
        b: (usize, usize, usize, usize),
        fresh: bool,
        f: &mut dyn FnMut(&[usize; 5]) -> bool,
    ) -> bool {
        let (lo, hi, plo, phi) = b;
        if idx == 4 {
            if left < lo || left > hi {
                return false;
            }
            cur[4] = left;
            let fresh = fresh || left < plo || left > phi;
            return fresh && f(cur);
        }
        let rest = 4 - idx;
        for x in lo..=hi.min(left) {
            if left - x < rest * lo || left - x > rest * hi {
                continue;
            }
            cur[idx] = x;
            if rec(idx + 1, left - x, cur, b, fresh || x < plo || x > phi, f) {
                return true;
            }
        }
        false
    }
    let mut cur = [0; 5];
    rec(0, n, &mut cur, (lo, hi, plo, phi), false, f)
}

/// `d`-regular blow-up of `C5` on `n` vertices, obtained by choosing class
/// sizes and degree splits with `n_i d_i^+ = n_{i+1} d_{i+1}^-` and realizing
/// each consecutive pair as a biregular bipartite graph. Class sizes are
/// tried from most to least balanced; solutions with every split positive
/// (hence non-bipartite output) are preferred.
pub fn c5_blowup_regular(n: usize, d: usize, _seed: u64) -> Result<C5Blowup> {
    if n < 5 {
        return Err(ConstructionError::Infeasible(format!("{n} vertices cannot fill five classes")));
    }
    if n > ORDER_CAP {
        return Err(ConstructionError::BadParams(format!("order {n} exceeds {ORDER_CAP}")));
    }
    if 5 * d > 2 * n {
        return Err(ConstructionError::Infeasible(format!("degree {d} exceeds 2n/5")));
    }
    if n * d % 2 == 1 {
        return Err(ConstructionError::Infeasible(format!("n*d = {} is odd", n * d)));
    }
    let base = n / 5;
    let ceil = n.div_ceil(5);
    let mut work = 0u64;
    let mut fallback: Option<([usize; 5], [usize; 5])> = None;
    let mut found: Option<([usize; 5], [usize; 5])> = None;
    let mut exhausted = false;
    let (mut plo, mut phi) = (usize::MAX, 0usize);
    for s in 0.. {
        let lo = base.saturating_sub(s).max(1);
        let hi = (ceil + s).min(n - 4);
        let done = compositions(n, lo, hi, plo, phi, &mut |sizes| {
            if work > SPLIT_BUDGET {
                exhausted = true;
                return true;
            }
            match solve_splits(sizes, d, &mut work) {
                Some((plus, true)) => {
                    found = Some((*sizes, plus));
                    true
                }
                Some((plus, false)) => {
                    fallback.get_or_insert((*sizes, plus));
                    false
                }
                None => false,
            }
        });
        if done || (lo == 1 && hi == n - 4) {
            break;
        }
        (plo, phi) = (lo, hi);
    }
    let (sizes, plus) = match found.or(fallback) {
        Some(x) => x,
        None if exhausted => return Err(ConstructionError::SearchExhausted(SPLIT_BUDGET)),
        None => {
            return Err(ConstructionError::Infeasible(format!(
                "no class sizes and degree splits realize a {d}-regular blow-up of C5 on {n} vertices"
            )))
        }
    };
    let mut offs = [0usize; 6];
    for i in 0..5 {
        offs[i + 1] = offs[i] + sizes[i];
    }
    let mut g = Graph::empty(n);
    for i in 0..5 {
        let j = (i + 1) % 5;
        let bip = biregular_bipartite(sizes[i], plus[i], sizes[j], sizes[i] * plus[i] / sizes[j])?;
        for &(x, y) in bip.edges().pairs() {
            g.add_edge(offs[i] + x, offs[j] + y - sizes[i]);
        }
    }
    Ok(C5Blowup {
        graph: g,
        classes: (0..5).map(|i| offs[i]..offs[i + 1]).collect(),
    })
}

/// Balanced complete blow-up of `C5` on `n - 1` vertices with a perfect
/// matching removed between the first two classes, plus an apex joined to
/// both of those classes. The apex is the last vertex. Regular of degree
/// `r = 2(n-1)/5`, and every one of its `r^2/4 - r/2` triangles contains the
/// apex.
pub fn apex_witness(n: usize) -> Result<Graph> {
    if n < 11 || n % 5 != 1 {
        return Err(ConstructionError::UnsupportedResidue(n));
    }
    if n > ORDER_CAP {
        return Err(ConstructionError::BadParams(format!("order {n} exceeds {ORDER_CAP}")));
    }
    let m = (n - 1) / 5;
    let mut g = Graph::empty(n);
    for i in 0..5 {
        let j = (i + 1) % 5;
        for x in 0..m {
            for y in 0..m {
                if i == 0 && x == y {
                    continue;
                }
                g.add_edge(i * m + x, j * m + y);
            }
        }
    }
    let apex = n - 1;
    for v in 0..2 * m {
        g.add_edge(apex, v);
    }
    Ok(g)
}

/// A regular graph containing a core graph, padded by high-girth gadgets.
#[derive(Clone, Debug)]
pub struct BlowupCover {
    pub graph: Graph,
    pub core: Range<usize>,
    pub gadgets: Vec<Range<usize>>,
    pub degree: usize,
    pub girth: usize,
    pub min_pairwise_distance: usize,
}

/// `(2Δ+1)`-regular graph containing `h` on its first vertices. Each core
/// vertex of degree `i` is joined to the `2Δ+1-i` deficient vertices of its
/// own gadget, a girth-`g` graph whose deficient vertices are pairwise at
/// distance at least `min(|V(f)|, g-1)`. The result is checked to be
/// `f`-free before it is returned.
pub fn blowup_cover(h: &Graph, f: &Graph, g: usize, seed: u64) -> Result<BlowupCover> {
    if g < 3 {
        return Err(ConstructionError::BadParams(format!("girth {g} below 3")));
    }
    if exists_homomorphism(f, h) {
        return Err(ConstructionError::DichotomyViolated);
    }
    let r = 2 * h.max_degree() + 1;
    let dist = f.order().clamp(1, g - 1);
    let mut cache: HashMap<usize, super::girth::Deficient> = HashMap::new();
    let mut parts = vec![h.clone()];
    let mut joins = Vec::new();
    let mut gadgets = Vec::new();
    let mut off = h.order();
    for v in 0..h.order() {
        let need = r - h.degree(v);
        let gadget = match cache.get(&need) {
            Some(d) => d.clone(),
            None => {
                let pat = DeficiencyPattern { count: need, min_pairwise_distance: dist };
                let d = deficient_gadget(r, g, pat, seed, DEFAULT_SWAP_BUDGET)?;
                cache.insert(need, d.clone());
                d
            }
        };
        if off + gadget.graph.order() > ORDER_CAP {
            return Err(ConstructionError::BadParams(format!("cover exceeds order {ORDER_CAP}")));
        }
        for &w in &gadget.deficient {
            joins.push((v, off + w));
        }
        gadgets.push(off..off + gadget.graph.order());
        off += gadget.graph.order();
        parts.push(gadget.graph);
    }
    let mut graph = Graph::disjoint_union(&parts);
    for (a, b) in joins {
        graph.add_edge(a, b);
    }
    if graph.is_regular() != Some(r) {
        return Err(ConstructionError::Infeasible("padding did not produce a regular graph".into()));
    }
    if contains(f, &graph) {
        return Err(ConstructionError::Infeasible(format!(
            "padded graph contains the forbidden graph at girth {g}"
        )));
    }
    Ok(BlowupCover {
        graph,
        core: 0..h.order(),
        gadgets,
        degree: r,
        girth: g,
        min_pairwise_distance: dist,
    })
}
