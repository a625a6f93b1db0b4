//! Small named graphs and standard families.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// Star with `leaves` leaves; the center is vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for i in 1..=leaves {
        g.add_edge(0, i);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph with consecutive parts of the given sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Kneser graph K(n, k): k-subsets of an n-set, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Graph {
    let subsets: Vec<u64> = (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    let mut g = Graph::empty(subsets.len());
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Hamiltonian cycle on `jumps.len() * repeats` vertices plus the chords given
/// by the LCF code.
pub fn lcf(jumps: &[isize], repeats: usize) -> Graph {
    let n = jumps.len() * repeats;
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    for i in 0..n {
        let j = (i as isize + jumps[i % jumps.len()]).rem_euclid(n as isize) as usize;
        if !g.has_edge(i, j) {
            g.add_edge(i, j);
        }
    }
    g
}

/// (3,6)-cage on 14 vertices.
pub fn heawood() -> Graph {
    lcf(&[5, -5], 7)
}

/// 3-regular girth-6 graph on 16 vertices.
pub fn mobius_kantor() -> Graph {
    lcf(&[5, -5], 8)
}

/// (3,7)-cage on 24 vertices.
pub fn mcgee() -> Graph {
    lcf(&[12, 7, -7], 8)
}

/// (3,8)-cage on 30 vertices.
pub fn tutte_coxeter() -> Graph {
    lcf(&[-13, -9, 7, -7, 9, 13], 5)
}

/// (4,5)-cage on 19 vertices.
pub fn robertson() -> Graph {
    let chords = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
    let mut g = cycle(19);
    for (i, j) in chords.iter().enumerate() {
        g.add_edge(i, (i + j) % 19);
    }
    g
}

/// `k` triangles sharing vertex 0.
pub fn friendship(k: usize) -> Graph {
    let mut g = Graph::empty(2 * k + 1);
    for i in 0..k {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cages_have_expected_parameters() {
        for (g, n, r, girth) in [
            (petersen(), 10, 3, 5),
            (heawood(), 14, 3, 6),
            (mobius_kantor(), 16, 3, 6),
            (mcgee(), 24, 3, 7),
            (tutte_coxeter(), 30, 3, 8),
            (robertson(), 19, 4, 5),
        ] {
            assert_eq!(g.order(), n);
            assert_eq!(g.is_regular(), Some(r));
            assert_eq!(g.girth(), Some(girth));
        }
    }

    #[test]
    fn kneser_5_2_is_petersen_shaped() {
        let k = kneser(5, 2);
        assert_eq!(k.order(), 10);
        assert_eq!(k.is_regular(), Some(3));
        assert_eq!(k.girth(), Some(5));
    }

    #[test]
    fn small_families() {
        assert_eq!(star(4).degree_sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(friendship(2).edge_count(), 6);
        assert_eq!(complete_multipartite(&[2, 2, 2]).edge_count(), 12);
    }
}
