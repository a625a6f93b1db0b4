//! Regular graphs with many copies of a short odd cycle and no copy of a
//! longer one.

use super::bipartite::k_regular_bipartite;
use super::ConstructionError;
use crate::graph::{Graph, ORDER_CAP};

#[derive(Clone, Debug)]
pub struct CycleRich {
    pub graph: Graph,
    /// The blow-up of `C_ell` occupies vertices `0..core_order`.
    pub core_order: usize,
    pub bridges: usize,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
}

impl Builder {
    fn layer(&mut self, size: usize) -> Vec<usize> {
        let v: Vec<usize> = (self.next..self.next + size).collect();
        self.next += size;
        v
    }

    fn complete(&mut self, a: &[usize], b: &[usize]) {
        for &x in a {
            for &y in b {
                self.edges.push((x, y));
            }
        }
    }

    fn regular(&mut self, a: &[usize], b: &[usize], k: usize) {
        let bip = k_regular_bipartite(a.len(), k).expect("degree fits the layer");
        let n = a.len();
        for &(x, y) in bip.edges().pairs() {
            self.edges.push((a[x], b[y - n]));
        }
    }

    /// Path-like bipartite gadget from `x` to `y` absorbing `m - 1` degree
    /// at each end. Layers have sizes `m-1, 2m-1, ..., 2m-1, m-1` with
    /// `2k` middle layers; every `x`-`y` path through it has length at least
    /// `2k + 3`.
    fn bridge(&mut self, x: usize, y: usize, m: usize, k: usize) {
        let b = self.layer(m - 1);
        let mids: Vec<Vec<usize>> = (0..2 * k).map(|_| self.layer(2 * m - 1)).collect();
        let b2 = self.layer(m - 1);
        self.complete(&[x], &b);
        self.complete(&b, &mids[0]);
        for i in 0..2 * k - 1 {
            let deg = if i % 2 == 0 { m + 1 } else { m - 1 };
            let (a, c) = (mids[i].clone(), mids[i + 1].clone());
            self.regular(&a, &c, deg);
        }
        self.complete(&mids[2 * k - 1], &b2);
        self.complete(&b2, &[y]);
    }
}

/// `2m`-regular graph containing the blow-up of `C_ell` in which every
/// other vertex of an `(ell-1)`-independent set is replaced by an `m`-set,
/// with no `C_{2k+1}`.
///
/// Degree deficits of the core are split into units of `m - 1` (two per
/// blown-up vertex, one for each of the two adjacent unblown vertices) and
/// units are paired up through bipartite bridges long enough that any cycle
/// using one is even or has length at least `2k + 4`.
pub fn cycle_rich(m: usize, ell: usize, k: usize) -> Result<CycleRich, ConstructionError> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(ConstructionError::BadParams(format!("m = {m} must be odd and at least 3")));
    }
    if ell.is_multiple_of(2) || ell <= 3 || ell > 2 * k {
        return Err(ConstructionError::BadParams(format!(
            "need odd ell with 3 < ell < 2k+1, got ell = {ell}, k = {k}"
        )));
    }
    let blown = (ell - 1) / 2;
    let core_order = blown * m + (ell - blown);
    let t = blown * m;
    let bridge_order = 2 * (m - 1) + 2 * k * (2 * m - 1);
    let total = core_order + (t + 1) * bridge_order;
    if total > ORDER_CAP {
        return Err(ConstructionError::BadParams(format!("order {total} exceeds {ORDER_CAP}")));
    }
    let mut b = Builder { edges: Vec::new(), next: 0 };
    // cycle positions 0, 2, ..., ell-3 are blown up; the rest are single vertices
    let mut pos: Vec<Vec<usize>> = Vec::with_capacity(ell);
    for i in 0..ell {
        let size = if i % 2 == 0 && i + 3 <= ell { m } else { 1 };
        pos.push(b.layer(size));
    }
    for i in 0..ell {
        let (a, c) = (pos[i].clone(), pos[(i + 1) % ell].clone());
        b.complete(&a, &c);
    }
    let (u, v) = (pos[ell - 2][0], pos[ell - 1][0]);
    let mut units: Vec<usize> = Vec::with_capacity(2 * t + 2);
    for i in (0..ell - 2).step_by(2) {
        for &x in &pos[i] {
            units.extend([x, x]);
        }
    }
    units.extend([u, v]);
    for i in 0..=t {
        b.bridge(units[i], units[i + t + 1], m, k);
    }
    debug_assert_eq!(b.next, total);
    let graph = Graph::from_edges(total, &b.edges)?;
    Ok(CycleRich {
        graph,
        core_order,
        bridges: t + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::patterns::{contains, count_copies};
    use num_bigint::BigUint;

    #[test]
    fn small_instance() {
        let c = cycle_rich(3, 5, 3).unwrap();
        assert_eq!(c.graph.order(), 247);
        assert_eq!(c.graph.is_regular(), Some(6));
        assert!(!contains(&named::cycle(7), &c.graph));
        assert!(count_copies(&named::cycle(5), &c.graph).copies >= BigUint::from(9u32));
        assert_eq!(c.graph.shortest_odd_cycle(), Some(5));
    }

    #[test]
    fn odd_cycles_through_bridges_are_long() {
        let c = cycle_rich(3, 7, 4).unwrap();
        assert_eq!(c.graph.is_regular(), Some(6));
        let core: Vec<usize> = (0..c.core_order).collect();
        assert_eq!(c.graph.induced_subgraph(&core).shortest_odd_cycle(), Some(7));
        assert!(!contains(&named::cycle(9), &c.graph));
    }

    #[test]
    fn params() {
        assert!(cycle_rich(2, 5, 3).is_err());
        assert!(cycle_rich(3, 7, 3).is_err());
        assert!(cycle_rich(3, 3, 3).is_err());
        assert!(cycle_rich(3, 6, 4).is_err());
    }
}
