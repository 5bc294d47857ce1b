//! Brute-force ground truth for maximal subsemigroups.
//!
//! Nothing here uses the structure theory in [`crate::maximal`]: subsets are
//! enumerated directly, and maximality is checked by one-element extension.

use std::fmt;
use std::time::{Duration, Instant};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::semigroup::{ClosureBuilder, FiniteSemigroup};

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub size: usize,
    /// Non-empty maximal subsemigroups as sorted element lists, sorted.
    pub maximal: Vec<Vec<usize>>,
    pub elapsed: Duration,
}

/// Every non-empty maximal subsemigroup of `s`, by enumerating all subsets.
pub fn brute_force_maximal(s: &FiniteSemigroup, bounds: &Bounds) -> Result<OracleReport> {
    let start = Instant::now();
    let n = s.size();
    let bound = bounds.oracle_elements.min(30);
    if n > bound {
        return Err(Error::capacity(
            "oracle subset enumeration (use verify_maximal for larger semigroups)",
            n,
            bound,
        ));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let product: Vec<Vec<u32>> = (0..n)
        .map(|x| (0..n).map(|y| 1u32 << s.multiply(x, y)).collect())
        .collect();
    let closed = |mask: u32| {
        let mut rest = mask;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut inner = mask;
            while inner != 0 {
                let y = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                if product[x][y] & mask == 0 {
                    return false;
                }
            }
        }
        true
    };
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 1..full {
        if closed(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    let mut found: Vec<u32> = Vec::new();
    for level in by_size.iter().rev() {
        for &mask in level {
            if !found.iter().any(|&m| m & mask == mask) {
                found.push(mask);
            }
        }
    }
    let mut maximal: Vec<Vec<usize>> = found
        .into_iter()
        .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).collect())
        .collect();
    maximal.sort();
    Ok(OracleReport {
        size: n,
        maximal,
        elapsed: start.elapsed(),
    })
}

/// Why a set failed [`verify_maximal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotMaximal {
    OutOfRange(usize),
    Empty,
    /// `generated` is a product of elements of `M` outside `M`.
    NotClosed { generated: usize },
    NotProper,
    /// `⟨M ∪ {added}⟩` misses `missing`.
    Extension { added: usize, missing: usize },
}

impl fmt::Display for NotMaximal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotMaximal::OutOfRange(x) => write!(f, "element {x} is not in the semigroup"),
            NotMaximal::Empty => write!(f, "the set is empty"),
            NotMaximal::NotClosed { generated } => {
                write!(f, "not closed: element {generated} is a product of members but not a member")
            }
            NotMaximal::NotProper => write!(f, "not proper: the set is the whole semigroup"),
            NotMaximal::Extension { added, missing } => write!(
                f,
                "not maximal: adding {added} generates a proper subsemigroup missing {missing}"
            ),
        }
    }
}

/// Checks that `m` is closed, proper, and that adding any outside element
/// generates all of `s`.
pub fn verify_maximal(s: &FiniteSemigroup, m: &[usize]) -> std::result::Result<(), NotMaximal> {
    let n = s.size();
    if let Some(&x) = m.iter().find(|&&x| x >= n) {
        return Err(NotMaximal::OutOfRange(x));
    }
    if m.is_empty() {
        return Err(NotMaximal::Empty);
    }
    let mut member = vec![false; n];
    for &x in m {
        member[x] = true;
    }
    let mut builder = ClosureBuilder::new(n, |x, y| s.multiply(x, y));
    for &x in m {
        builder.add(x);
    }
    if let Some(&z) = builder.elements().iter().find(|&&z| !member[z]) {
        return Err(NotMaximal::NotClosed { generated: z });
    }
    if builder.len() == n {
        return Err(NotMaximal::NotProper);
    }
    for x in (0..n).filter(|&x| !member[x]) {
        let mut ext = builder.clone();
        ext.add(x);
        if ext.len() != n {
            let missing = (0..n).find(|&z| !ext.contains(z)).expect("proper");
            return Err(NotMaximal::Extension { added: x, missing });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn monogenic_has_one_maximal() {
        let s = catalog::monogenic(3, 1).unwrap();
        let r = brute_force_maximal(&s, &Bounds::default()).unwrap();
        assert_eq!(r.maximal, vec![vec![1, 2]]);
        assert!(verify_maximal(&s, &[1, 2]).is_ok());
    }

    #[test]
    fn trivial_semigroup_has_none() {
        let s = catalog::zero_semigroup(1).unwrap();
        assert!(brute_force_maximal(&s, &Bounds::default()).unwrap().maximal.is_empty());
    }

    #[test]
    fn brandt_c2_2_has_four() {
        let b = crate::ReesZeroMatrixSemigroup::brandt(catalog::cyclic_group(2).unwrap(), 2).unwrap();
        let s = b.to_semigroup(&Bounds::default()).unwrap();
        let r = brute_force_maximal(&s, &Bounds::default()).unwrap();
        assert_eq!(r.maximal.len(), 4);
        for m in &r.maximal {
            assert!(verify_maximal(&s, m).is_ok());
        }
    }

    #[test]
    fn verify_diagnostics() {
        let s = catalog::monogenic(3, 1).unwrap();
        assert_eq!(verify_maximal(&s, &[0, 1, 2]), Err(NotMaximal::NotProper));
        assert_eq!(verify_maximal(&s, &[0]), Err(NotMaximal::NotClosed { generated: 1 }));
        assert_eq!(verify_maximal(&s, &[]), Err(NotMaximal::Empty));
        assert_eq!(verify_maximal(&s, &[9]), Err(NotMaximal::OutOfRange(9)));
        assert_eq!(
            verify_maximal(&s, &[2]),
            Err(NotMaximal::Extension { added: 1, missing: 0 })
        );
    }

    #[test]
    fn capacity_error_above_bound() {
        let s = catalog::left_zero(17).unwrap();
        assert!(matches!(
            brute_force_maximal(&s, &Bounds::default()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn verify_accepts_exactly_oracle_sets() {
        // All subsets of a small semigroup: accepted iff reported.
        for s in [
            catalog::monogenic(2, 3).unwrap(),
            catalog::left_zero(3).unwrap(),
            catalog::full_transformation_monoid(2, &Bounds::default()).unwrap().semigroup,
        ] {
            let r = brute_force_maximal(&s, &Bounds::default()).unwrap();
            let n = s.size();
            for mask in 1u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                assert_eq!(verify_maximal(&s, &set).is_ok(), r.maximal.contains(&set));
            }
        }
    }

    #[test]
    fn invariant_under_relabelling() {
        let t = catalog::full_transformation_monoid(2, &Bounds::default()).unwrap();
        let s = &t.semigroup;
        let n = s.size();
        let perm: Vec<usize> = (0..n).rev().collect();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| perm[s.multiply(perm[a], perm[b])]).collect())
            .collect();
        let relabelled = FiniteSemigroup::from_table(&table, None, &Bounds::default()).unwrap();
        let original = brute_force_maximal(s, &Bounds::default()).unwrap().maximal;
        let other = brute_force_maximal(&relabelled.semigroup, &Bounds::default()).unwrap().maximal;
        let mut mapped: Vec<Vec<usize>> = other
            .iter()
            .map(|m| {
                let mut v: Vec<usize> = m
                    .iter()
                    .map(|&x| perm[relabelled.elements[x]])
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        mapped.sort();
        assert_eq!(mapped, original);
    }
}
