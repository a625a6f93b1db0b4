//! Five-class structure of dense triangle-free regular graphs.

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::Graph;
use crate::named;

use super::contains;

/// Slack below the `2n/5` degree threshold.
pub const DEFAULT_EPS: (i64, i64) = (1, 20);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum C5Error {
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {degree} is below (2/5 - eps) * {order}")]
    DegreeBelowThreshold { degree: usize, order: usize },
    #[error("shortest odd cycle has length {0}")]
    ShortestOddCycleTooLong(usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

/// Classes `V_0..V_4` around a shortest odd cycle `v_0..v_4`, with `v_i` in
/// `V_i`, and the leftover set `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C5Partition {
    pub classes: [Vec<usize>; 5],
    pub leftover: Vec<usize>,
    pub cycle: [usize; 5],
}

impl C5Partition {
    /// Checks disjointness, coverage, independence of the classes and the
    /// absence of edges between non-consecutive classes.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        let mut owner = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                if v >= n || owner[v] != usize::MAX {
                    return Err(format!("vertex {v} assigned twice or out of range"));
                }
                owner[v] = i;
            }
        }
        for &v in &self.leftover {
            if v >= n || owner[v] != usize::MAX {
                return Err(format!("vertex {v} assigned twice or out of range"));
            }
            owner[v] = 5;
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("vertex {v} unassigned"));
        }
        for (i, &a) in self.cycle.iter().enumerate() {
            if owner[a] != i {
                return Err(format!("anchor {a} not in class {i}"));
            }
        }
        for (u, v) in g.edges().pairs() {
            let (a, b) = (owner[*u], owner[*v]);
            if a == 5 || b == 5 {
                continue;
            }
            let gap = (a + 5 - b) % 5;
            if gap != 1 && gap != 4 {
                return Err(format!("edge {u}-{v} joins classes {a} and {b}"));
            }
        }
        Ok(())
    }
}

pub fn c5_partition_default(g: &Graph) -> Result<C5Partition, C5Error> {
    c5_partition(g, Ratio::new(DEFAULT_EPS.0, DEFAULT_EPS.1))
}

/// An outside vertex adjacent to `v_i` and `v_{i+2}` joins `V_{i+1}`; every
/// other outside vertex goes to `U`.
pub fn c5_partition(g: &Graph, eps: Ratio<i64>) -> Result<C5Partition, C5Error> {
    if contains(&named::complete(3), g) {
        return Err(C5Error::NotTriangleFree);
    }
    let cycle = g.shortest_odd_cycle_vertices().ok_or(C5Error::Bipartite)?;
    let d = g.is_regular().ok_or(C5Error::NotRegular)?;
    let n = g.order();
    let threshold = (Ratio::new(2, 5) - eps) * Ratio::from_integer(n as i64);
    if Ratio::from_integer(d as i64) < threshold {
        return Err(C5Error::DegreeBelowThreshold {
            degree: d,
            order: n,
        });
    }
    if cycle.len() != 5 {
        return Err(C5Error::ShortestOddCycleTooLong(cycle.len()));
    }
    let anchors: [usize; 5] = cycle.try_into().unwrap();
    let mut classes: [Vec<usize>; 5] = Default::default();
    let mut leftover = Vec::new();
    for x in 0..n {
        if let Some(i) = anchors.iter().position(|&a| a == x) {
            classes[i].push(x);
            continue;
        }
        let hits: Vec<usize> = (0..5).filter(|&i| g.has_edge(x, anchors[i])).collect();
        match hits[..] {
            [a, b] if b - a == 2 => classes[a + 1].push(x),
            [a, b] if b - a == 3 => classes[(b + 1) % 5].push(x),
            _ => leftover.push(x),
        }
    }
    let p = C5Partition {
        classes,
        leftover,
        cycle: anchors,
    };
    p.check(g).map_err(C5Error::StructureViolation)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blowup, BlowupSpec};

    #[test]
    fn cycle_gives_singletons() {
        let p = c5_partition_default(&named::cycle(5)).unwrap();
        assert!(p.classes.iter().all(|c| c.len() == 1));
        assert!(p.leftover.is_empty());
    }

    #[test]
    fn blowup_recovers_parts() {
        let b = blowup(&BlowupSpec::uniform(named::cycle(5), 2).unwrap()).unwrap();
        let p = c5_partition_default(&b.graph).unwrap();
        assert!(p.leftover.is_empty());
        for class in &p.classes {
            assert_eq!(class.len(), 2);
            assert_eq!(b.part_of(class[0]), b.part_of(class[1]));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            c5_partition_default(&named::complete_bipartite(4, 4)),
            Err(C5Error::Bipartite)
        );
        assert_eq!(
            c5_partition_default(&named::complete(4)),
            Err(C5Error::NotTriangleFree)
        );
        assert!(matches!(
            c5_partition_default(&named::cycle(7)),
            Err(C5Error::DegreeBelowThreshold { .. })
        ));
        assert_eq!(
            c5_partition(&named::cycle(7), Ratio::from_integer(1)),
            Err(C5Error::ShortestOddCycleTooLong(7))
        );
        let p = c5_partition(&named::petersen(), Ratio::from_integer(1)).unwrap();
        assert_eq!(p.leftover.len(), 5);
    }
}
