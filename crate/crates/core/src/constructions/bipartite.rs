//! Regular and biregular bipartite graphs.

use super::ConstructionError;
use crate::graph::Graph;

/// Circulant `k`-regular bipartite graph: side A is `0..n`, side B is
/// `n..2n`, and `i` in A sees `n + (i + j) mod n` for `j < k`.
pub fn k_regular_bipartite(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    if k > n {
        return Err(ConstructionError::BadParams(format!(
            "degree {k} exceeds side order {n}"
        )));
    }
    let mut g = Graph::try_empty(2 * n)?;
    for i in 0..n {
        for j in 0..k {
            g.add_edge(i, n + (i + j) % n);
        }
    }
    Ok(g)
}

/// Bipartite graph with sides `0..a` and `a..a+b`, A-degrees `da` and
/// B-degrees `db`. Vertex `i` of A sees the B-vertices `(i*da + j) mod b`.
pub fn biregular_bipartite(
    a: usize,
    da: usize,
    b: usize,
    db: usize,
) -> Result<Graph, ConstructionError> {
    if a * da != b * db || da > b || db > a {
        return Err(ConstructionError::InfeasibleDegrees(format!(
            "sides {a},{b} with degrees {da},{db}"
        )));
    }
    let mut g = Graph::try_empty(a + b)?;
    for i in 0..a {
        for j in 0..da {
            g.add_edge(i, a + (i * da + j) % b);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn regular_examples() {
        let g = k_regular_bipartite(5, 3).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.is_regular(), Some(3));
        assert!(g.is_bipartite());
        assert_eq!(k_regular_bipartite(4, 4).unwrap(), crate::named::complete_bipartite(4, 4));
        assert_eq!(k_regular_bipartite(4, 1).unwrap().edge_count(), 4);
        assert!(k_regular_bipartite(3, 4).is_err());
    }

    #[test]
    fn biregular_examples() {
        let g = biregular_bipartite(4, 1, 2, 2).unwrap();
        assert_eq!(g.components().len(), 2);
        let g = biregular_bipartite(6, 2, 4, 3).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2, 2, 2, 3, 3, 3, 3]);
        let g = biregular_bipartite(3, 2, 2, 3).unwrap();
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 3, 3]);
        assert!(biregular_bipartite(3, 2, 2, 2).is_err());
        assert!(biregular_bipartite(2, 3, 2, 3).is_err());
    }

    proptest! {
        #[test]
        fn biregular_degrees(a in 1usize..12, b in 1usize..12, da in 0usize..12) {
            prop_assume!(da <= b && (a * da) % b == 0 && a * da / b <= a);
            let db = a * da / b;
            let g = biregular_bipartite(a, da, b, db).unwrap();
            for v in 0..a {
                prop_assert_eq!(g.degree(v), da);
            }
            for v in a..a + b {
                prop_assert_eq!(g.degree(v), db);
            }
        }
    }
}
