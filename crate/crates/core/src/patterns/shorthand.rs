//! Pattern shorthand: `K5`, `P7`, `C6`, `K3,3`, `K2,2,2`.

use thiserror::Error;

use crate::graph::{Graph, ORDER_CAP};
use crate::named;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("unrecognized pattern shorthand {0:?}")]
    Unrecognized(String),
    #[error("pattern {0:?} is too large")]
    TooLarge(String),
    #[error("cycles need at least 3 vertices, got {0:?}")]
    ShortCycle(String),
}

pub fn parse_pattern(s: &str) -> Result<Graph, PatternError> {
    let t = s.trim();
    let unrec = || PatternError::Unrecognized(s.to_string());
    let mut chars = t.chars();
    let kind = chars.next().ok_or_else(unrec)?;
    let nums: Vec<usize> = chars
        .as_str()
        .split(',')
        .map(|p| {
            if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                Err(unrec())
            } else {
                p.parse::<usize>().map_err(|_| unrec())
            }
        })
        .collect::<Result<_, _>>()?;
    let total = nums.iter().try_fold(0usize, |a, &b| a.checked_add(b));
    if total.is_none_or(|t| t > ORDER_CAP) {
        return Err(PatternError::TooLarge(s.to_string()));
    }
    match (kind, &nums[..]) {
        ('K', [n]) => Ok(named::complete(*n)),
        ('K', parts) => Ok(named::complete_multipartite(parts)),
        ('P', [n]) => Ok(named::path(*n)),
        ('C', [n]) if *n >= 3 => Ok(named::cycle(*n)),
        ('C', [_]) => Err(PatternError::ShortCycle(s.to_string())),
        _ => Err(unrec()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        assert_eq!(parse_pattern("K5").unwrap(), named::complete(5));
        assert_eq!(parse_pattern("P7").unwrap(), named::path(7));
        assert_eq!(parse_pattern("C6").unwrap(), named::cycle(6));
        assert_eq!(parse_pattern("K3,3").unwrap(), named::complete_bipartite(3, 3));
        assert_eq!(parse_pattern("K2,2,2").unwrap().edge_count(), 12);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "K", "X5", "P3,3", "K3,", "K-1", "C2", "P99999999999999999999"] {
            assert!(parse_pattern(bad).is_err(), "{bad}");
        }
    }
}
