//! Partitions indexing power-sum monomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers. The empty partition
/// denotes the constant monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates weak decrease and positivity.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::BadPartition(parts))
        }
    }

    /// Sorts the given positive parts; panics on nonpositive input.
    pub fn from_unsorted(mut parts: Vec<i64>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn single(k: i64) -> Self {
        assert!(k > 0);
        Partition(vec![k])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Part value -> multiplicity.
    pub fn mult_map(&self) -> BTreeMap<i64, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// z_lambda = prod_i i^{m_i} m_i!, the squared norm of p_lambda.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, mult) in self.mult_map() {
            for _ in 0..mult {
                acc *= BigInt::from(part);
            }
            for r in 1..=mult {
                acc *= BigInt::from(r);
            }
        }
        acc
    }

    /// Union of multisets of parts (product of power-sum monomials).
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn has_only_odd_parts(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 1)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions of weight exactly `w`.
pub fn partitions_of(w: i64) -> Vec<Partition> {
    fn rec(remaining: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, w, &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight 0..=w (the empty partition included).
pub fn partitions_up_to(w: i64) -> Vec<Partition> {
    (0..=w).flat_map(partitions_of).collect()
}

pub fn strict_partitions_up_to(w: i64) -> Vec<Partition> {
    partitions_up_to(w).into_iter().filter(Partition::is_strict).collect()
}

pub fn odd_partitions_up_to(w: i64) -> Vec<Partition> {
    partitions_up_to(w)
        .into_iter()
        .filter(Partition::has_only_odd_parts)
        .collect()
}
