//! Linear forest specifications: a multiset of path orders.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestSpecError {
    #[error("a linear forest needs at least one path")]
    Empty,
    #[error("path order {0} is below 2")]
    PartTooSmall(usize),
    #[error("cannot parse forest spec {0:?}; expected \"5,3,2\" or \"P5+P3+P2\"")]
    Parse(String),
}

/// A linear forest F = P_{k_1} ∪ … ∪ P_{k_ℓ}, orders stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForestSpec {
    parts: Vec<usize>,
}

impl LinearForestSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ForestSpecError> {
        if parts.is_empty() {
            return Err(ForestSpecError::Empty);
        }
        if let Some(&bad) = parts.iter().find(|&&k| k < 2) {
            return Err(ForestSpecError::PartTooSmall(bad));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForestSpec { parts })
    }

    /// Single path P_k.
    pub fn path(k: usize) -> Result<Self, ForestSpecError> {
        Self::new(vec![k])
    }

    /// Path orders, non-increasing.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The governing parameter p = Σ ⌊k_i/2⌋ − 1.
    pub fn p(&self) -> usize {
        self.parts.iter().map(|k| k / 2).sum::<usize>() - 1
    }

    pub fn total_order(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|k| k % 2 == 1)
    }

    /// Smallest path order k_ℓ.
    pub fn k_min(&self) -> usize {
        *self.parts.last().expect("non-empty")
    }

    /// Accepts "5,3,2" or "P5+P3+P2" (case-insensitive), any order.
    pub fn parse(s: &str) -> Result<Self, ForestSpecError> {
        let body = s.trim();
        let parts: Result<Vec<usize>, _> = if body.contains('+') || body.to_ascii_lowercase().starts_with('p') {
            body.split('+')
                .map(|tok| {
                    tok.trim()
                        .strip_prefix(['P', 'p'])
                        .ok_or(())
                        .and_then(|t| t.parse::<usize>().map_err(|_| ()))
                })
                .collect()
        } else {
            body.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| ()))
                .collect()
        };
        match parts {
            Ok(v) if !v.is_empty() => Self::new(v).map_err(|e| match e {
                ForestSpecError::Parse(_) => unreachable!(),
                other => other,
            }),
            _ => Err(ForestSpecError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for LinearForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "P{k}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_values() {
        assert_eq!(LinearForestSpec::new(vec![2, 2]).unwrap().p(), 1);
        assert_eq!(LinearForestSpec::new(vec![5, 3]).unwrap().p(), 2);
        assert_eq!(LinearForestSpec::new(vec![5, 5]).unwrap().p(), 3);
        assert_eq!(LinearForestSpec::path(2).unwrap().p(), 0);
    }

    #[test]
    fn parts_sort_non_increasing() {
        let s = LinearForestSpec::new(vec![3, 5, 2]).unwrap();
        assert_eq!(s.parts(), &[5, 3, 2]);
        assert_eq!(s.k_min(), 2);
        assert_eq!(s.total_order(), 10);
        assert!(!s.all_odd());
    }

    #[test]
    fn parse_both_syntaxes() {
        assert_eq!(LinearForestSpec::parse("5,3,2").unwrap().parts(), &[5, 3, 2]);
        assert_eq!(LinearForestSpec::parse("P5+P3+P2").unwrap().parts(), &[5, 3, 2]);
        assert_eq!(LinearForestSpec::parse("p2+p4").unwrap().parts(), &[4, 2]);
        assert_eq!(LinearForestSpec::parse(" 7 ").unwrap().parts(), &[7]);
    }

    #[test]
    fn parse_rejects_garbage_and_tiny_parts() {
        assert!(LinearForestSpec::parse("").is_err());
        assert!(LinearForestSpec::parse("P5+x").is_err());
        assert!(matches!(
            LinearForestSpec::parse("5,1"),
            Err(ForestSpecError::PartTooSmall(1))
        ));
    }

    #[test]
    fn display_round_trips() {
        let s = LinearForestSpec::new(vec![5, 3]).unwrap();
        assert_eq!(s.to_string(), "P5+P3");
        assert_eq!(LinearForestSpec::parse(&s.to_string()).unwrap(), s);
    }
}
