//! Exhaustive ground truth for `rex(n, H, F)` and `regex(n, F)` over all
//! regular graphs of a given order.

mod cache;
mod enumerate;

use std::ops::ControlFlow;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonError, CanonicalForm};
use crate::graph::Graph;
use crate::named;
use crate::patterns::count_copies;

pub use cache::{default_cache_path, CacheStatus, RexCache, CACHE_ENV};
pub use enumerate::{
    enumerate_regular, enumerate_regular_with, EnumOptions, EnumStats, DEFAULT_NODE_BUDGET,
    ENUM_ORDER_CAP,
};
use enumerate::{enumerate_in, Ctx};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("no {r}-regular graph on {n} vertices: n*r is odd")]
    ParityInfeasible { n: usize, r: usize },
    #[error("degree {r} is not below the order {n}")]
    DegreeTooLarge { n: usize, r: usize },
    #[error("order {0} is above the enumeration cap")]
    OrderCap(usize),
    #[error("node budget exhausted after {0} nodes")]
    Budget(u64),
    #[error("record is not exhaustive")]
    NotExhaustive,
    #[error("recomputed record differs from the cached one")]
    CacheMismatch,
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

/// Best value of `N(h, G)` over the `f`-free regular graphs `G` on `n`
/// vertices, with every graph attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RexRecord {
    pub n: usize,
    pub pattern: CanonicalForm,
    pub forbidden: CanonicalForm,
    #[serde(default)]
    pub r_filter: Option<usize>,
    #[serde(with = "crate::bigstr")]
    pub best_value: BigUint,
    pub best_regularity: Option<usize>,
    pub certificates: Vec<CanonicalForm>,
    pub regularities_scanned: Vec<usize>,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegexRecord {
    pub n: usize,
    pub forbidden: CanonicalForm,
    /// Largest regularity with an `f`-free graph; `None` only if even the
    /// empty graph contains `f`.
    pub degree: Option<usize>,
    pub certificate: Option<CanonicalForm>,
    pub exhaustive: bool,
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub budget: u64,
    /// Skip regularities whose triangle bound `n/3 * C(r,2)` is already
    /// beaten. Only used when the pattern is a triangle.
    pub degree_prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: DEFAULT_NODE_BUDGET,
            degree_prune: true,
        }
    }
}

/// Work counters from one oracle call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub nodes: u64,
    pub graphs: u64,
}

fn valid_regularities(n: usize, r_filter: Option<usize>) -> Vec<usize> {
    (0..n)
        .filter(|&r| (n * r).is_multiple_of(2))
        .filter(|&r| r_filter.is_none_or(|x| x == r))
        .collect()
}

pub fn rex_brute(
    n: usize,
    h: &Graph,
    f: &Graph,
    r_filter: Option<usize>,
    opts: &OracleOptions,
) -> Result<RexRecord, OracleError> {
    rex_brute_stats(n, h, f, r_filter, opts).map(|(r, _)| r)
}

/// [`rex_brute`] with work counters.
pub fn rex_brute_stats(
    n: usize,
    h: &Graph,
    f: &Graph,
    r_filter: Option<usize>,
    opts: &OracleOptions,
) -> Result<(RexRecord, OracleStats), OracleError> {
    if n == 0 || n > ENUM_ORDER_CAP {
        return Err(OracleError::OrderCap(n));
    }
    let pattern = canonical_form(h)?;
    let forbidden = canonical_form(f)?;
    let triangle = pattern == canonical_form(&named::complete(3))?;
    let ctx = Ctx::new(opts.budget);
    let mut best = BigUint::ZERO;
    let mut found_any = false;
    let mut certs: Vec<(usize, CanonicalForm)> = Vec::new();
    let mut scanned = Vec::new();
    let mut graphs = 0u64;
    let eopts = EnumOptions {
        forbid: Some(f.clone()),
        connected_only: false,
        budget: opts.budget,
    };
    let mut regs = valid_regularities(n, r_filter);
    regs.reverse();
    for r in regs {
        scanned.push(r);
        if opts.degree_prune && triangle && found_any {
            let bound_times_6 = BigUint::from(n * r * r.saturating_sub(1));
            if bound_times_6 < &best * 6u32 {
                continue;
            }
        }
        let mut err = None;
        enumerate_in(n, r, &eopts, &ctx, &mut |g| {
            graphs += 1;
            let value = count_copies(h, g).copies;
            if !found_any || value > best {
                best = value;
                found_any = true;
                certs.clear();
            } else if value < best {
                return ControlFlow::Continue(());
            }
            match canonical_form(g) {
                Ok(c) => certs.push((r, c)),
                Err(e) => {
                    err = Some(e);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    scanned.sort_unstable();
    certs.sort_by(|a, b| a.1.cmp(&b.1));
    let record = RexRecord {
        n,
        pattern,
        forbidden,
        r_filter,
        best_value: best,
        best_regularity: certs.iter().map(|(r, _)| *r).min(),
        certificates: certs.into_iter().map(|(_, c)| c).collect(),
        regularities_scanned: scanned,
        exhaustive: !ctx.exhausted(),
    };
    Ok((record, OracleStats { nodes: ctx.nodes(), graphs }))
}

/// Largest `d` such that some `d`-regular graph on `n` vertices avoids `f`.
pub fn regex_brute(n: usize, f: &Graph, opts: &OracleOptions) -> Result<RegexRecord, OracleError> {
    if n == 0 || n > ENUM_ORDER_CAP {
        return Err(OracleError::OrderCap(n));
    }
    let forbidden = canonical_form(f)?;
    let ctx = Ctx::new(opts.budget);
    let eopts = EnumOptions {
        forbid: Some(f.clone()),
        connected_only: false,
        budget: opts.budget,
    };
    let mut regs = valid_regularities(n, None);
    regs.reverse();
    for r in regs {
        let mut witness = None;
        enumerate_in(n, r, &eopts, &ctx, &mut |g| {
            witness = Some(g.clone());
            ControlFlow::Break(())
        })?;
        if let Some(g) = witness {
            return Ok(RegexRecord {
                n,
                forbidden,
                degree: Some(r),
                certificate: Some(canonical_form(&g)?),
                exhaustive: !ctx.exhausted(),
            });
        }
    }
    Ok(RegexRecord {
        n,
        forbidden,
        degree: None,
        certificate: None,
        exhaustive: !ctx.exhausted(),
    })
}

/// Whether `expected` is the only extremal graph in an exhaustive record.
pub fn verify_uniqueness(record: &RexRecord, expected: &Graph) -> Result<bool, OracleError> {
    if !record.exhaustive {
        return Err(OracleError::NotExhaustive);
    }
    let form = canonical_form(expected)?;
    Ok(record.certificates.len() == 1 && record.certificates[0] == form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::graph6_decode;
    use crate::patterns::contains;

    fn opts() -> OracleOptions {
        OracleOptions::default()
    }

    #[test]
    fn small_rex_values() {
        let k3 = named::complete(3);
        let rec = rex_brute(6, &k3, &named::path(4), None, &opts()).unwrap();
        assert_eq!(rec.best_value, BigUint::from(2u32));
        assert!(rec.exhaustive);
        let two_k3 = Graph::disjoint_union(&[k3.clone(), k3.clone()]);
        assert!(verify_uniqueness(&rec, &two_k3).unwrap());
        assert!(!verify_uniqueness(&rec, &named::cycle(6)).unwrap());

        let rec = rex_brute(9, &k3, &named::complete(4), None, &opts()).unwrap();
        assert_eq!(rec.best_value, BigUint::from(27u32));
        assert_eq!(rec.best_regularity, Some(6));
        let t = named::complete_multipartite(&[3, 3, 3]);
        assert!(verify_uniqueness(&rec, &t).unwrap());
    }

    #[test]
    fn prune_does_not_change_records() {
        let k3 = named::complete(3);
        for (n, f) in [(8, named::complete(4)), (9, named::path(5)), (10, named::cycle(4))] {
            let on = rex_brute(n, &k3, &f, None, &opts()).unwrap();
            let off = rex_brute(n, &k3, &f, None, &OracleOptions { degree_prune: false, ..opts() }).unwrap();
            assert_eq!(on, off);
        }
    }

    #[test]
    fn certificates_decode_to_extremal_graphs() {
        let k3 = named::complete(3);
        let f = named::path(5);
        let rec = rex_brute(8, &k3, &f, None, &opts()).unwrap();
        for c in &rec.certificates {
            let g = graph6_decode(&c.canon_graph6).unwrap();
            assert!(!contains(&f, &g));
            assert!(g.is_regular().is_some());
            assert_eq!(count_copies(&k3, &g).copies, rec.best_value);
        }
    }

    #[test]
    fn regex_small() {
        let rec = regex_brute(8, &named::path(5), &opts()).unwrap();
        assert_eq!(rec.degree, Some(3));
        let rec = regex_brute(7, &named::complete(3), &opts()).unwrap();
        assert_eq!(rec.degree, Some(2));
        let rec = regex_brute(3, &Graph::empty(1), &opts()).unwrap();
        assert_eq!(rec.degree, None);
    }

    #[test]
    fn r_filter_limits_scan() {
        let rec = rex_brute(8, &named::complete(3), &named::complete(5), Some(3), &opts()).unwrap();
        assert_eq!(rec.regularities_scanned, vec![3]);
        assert_eq!(rec.best_value, BigUint::from(8u32));
    }

    #[test]
    fn budget_marks_inexhaustive() {
        let rec = rex_brute(
            10,
            &named::complete(3),
            &named::complete(5),
            None,
            &OracleOptions { budget: 5, degree_prune: true },
        )
        .unwrap();
        assert!(!rec.exhaustive);
        assert_eq!(verify_uniqueness(&rec, &named::complete(3)), Err(OracleError::NotExhaustive));
    }
}
