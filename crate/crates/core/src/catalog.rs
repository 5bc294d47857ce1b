//! Small standard semigroups and groups used by tests and examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::perm_group::{generate_group, PermGroup, Permutation};
use crate::rees_matrix::ReesZeroMatrixSemigroup;
use crate::semigroup::{Enumerated, FiniteSemigroup, Transformation};

fn from_table(table: Vec<Vec<usize>>, gens: Option<&[usize]>) -> Result<FiniteSemigroup> {
    let bounds = Bounds::default();
    Ok(FiniteSemigroup::from_table(&table, gens, &bounds)?.semigroup)
}

/// `⟨a | a^(index+period) = a^index⟩`, generated by `a`; element `k` is
/// `a^(k+1)`.
pub fn monogenic(index: usize, period: usize) -> Result<FiniteSemigroup> {
    if index == 0 || period == 0 {
        return Err(Error::input("index and period must be at least 1"));
    }
    let n = index + period - 1;
    let reduce = |e: usize| {
        if e < index + period {
            e
        } else {
            index + (e - index) % period
        }
    };
    let table = (1..=n)
        .map(|a| (1..=n).map(|b| reduce(a + b) - 1).collect())
        .collect();
    from_table(table, Some(&[0]))
}

/// Null semigroup on `n` elements: every product is element 0.
pub fn zero_semigroup(n: usize) -> Result<FiniteSemigroup> {
    from_table(vec![vec![0; n]; n], None)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> Result<FiniteSemigroup> {
    from_table((0..n).map(|a| vec![a; n]).collect(), None)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> Result<FiniteSemigroup> {
    from_table((0..n).map(|_| (0..n).collect()).collect(), None)
}

/// `S` with a new identity appended as the last element.
pub fn adjoin_identity(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let n = s.size();
    let table = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| match (a == n, b == n) {
                    (true, _) => b,
                    (_, true) => a,
                    _ => s.multiply(a, b),
                })
                .collect()
        })
        .collect();
    from_table(table, None)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::input("degree must be at least 1"));
    }
    Ok(())
}

fn transposition(n: usize) -> Transformation {
    let mut images: Vec<usize> = (0..n).collect();
    if n > 1 {
        images.swap(0, 1);
    }
    Transformation::new(images).expect("valid")
}

fn cycle(n: usize) -> Transformation {
    Transformation::new((0..n).map(|i| (i + 1) % n).collect()).expect("valid")
}

/// The full transformation monoid `T_n`.
pub fn full_transformation_monoid(n: usize, bounds: &Bounds) -> Result<Enumerated<Transformation>> {
    check_degree(n)?;
    let mut gens = vec![transposition(n), cycle(n)];
    let mut collapse: Vec<usize> = (0..n).collect();
    if n > 1 {
        collapse[1] = 0;
    }
    gens.push(Transformation::new(collapse)?);
    FiniteSemigroup::from_transformations(&gens, bounds)
}

/// The symmetric group `S_n` as transformations.
pub fn symmetric_group(n: usize, bounds: &Bounds) -> Result<Enumerated<Transformation>> {
    check_degree(n)?;
    FiniteSemigroup::from_transformations(&[transposition(n), cycle(n)], bounds)
}

/// `count` uniformly random transformations of degree `n`.
pub fn random_transformations(n: usize, count: usize, seed: u64) -> Vec<Transformation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Transformation::new((0..n).map(|_| rng.gen_range(0..n)).collect()).expect("valid"))
        .collect()
}

/// Cyclic group of order `n` acting on `n` points.
pub fn cyclic_group(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    let images = (0..n).map(|i| (i + 1) % n).collect();
    generate_group(n, &[Permutation::from_images(images)?])
}

/// Symmetric group on `n` points.
pub fn symmetric_perm_group(n: usize) -> Result<PermGroup> {
    check_degree(n)?;
    let mut swap: Vec<usize> = (0..n).collect();
    if n > 1 {
        swap.swap(0, 1);
    }
    let rot = (0..n).map(|i| (i + 1) % n).collect();
    generate_group(n, &[Permutation::from_images(swap)?, Permutation::from_images(rot)?])
}

/// Every regular Rees 0-matrix semigroup over `group` with the given
/// dimensions, as a semigroup generated by all its elements.
pub fn all_regular_rzms(group: &PermGroup, rows: usize, cols: usize) -> Result<Vec<FiniteSemigroup>> {
    let choices = group.order() + 1;
    let cells = rows * cols;
    let bounds = Bounds::default();
    let mut out = Vec::new();
    for code in 0..choices.pow(cells as u32) {
        let mut rest = code;
        let matrix: Vec<Option<usize>> = (0..cells)
            .map(|_| {
                let c = rest % choices;
                rest /= choices;
                c.checked_sub(1)
            })
            .collect();
        if let Ok(r) = ReesZeroMatrixSemigroup::new(rows, cols, group.clone(), matrix) {
            out.push(r.to_semigroup(&bounds)?);
        }
    }
    Ok(out)
}

/// Named small semigroups, each with at most 16 elements, for comparison
/// against the brute-force oracle: monogenic semigroups with
/// `index + period ≤ 8`, regular Rees 0-matrix semigroups over groups of
/// order 1 and 2 with at most two rows and columns, seeded random
/// subsemigroups of `T_3` and `T_4`, and null, left-zero and right-zero
/// semigroups.
pub fn oracle_corpus() -> Result<Vec<(String, FiniteSemigroup)>> {
    let mut out = Vec::new();
    for total in 2..=8 {
        for index in 1..total {
            let period = total - index;
            out.push((format!("monogenic({index},{period})"), monogenic(index, period)?));
        }
    }
    for order in [1, 2] {
        let group = cyclic_group(order)?;
        for rows in 1..=2 {
            for cols in 1..=2 {
                for (k, s) in all_regular_rzms(&group, rows, cols)?.into_iter().enumerate() {
                    out.push((format!("rzms(C{order},{rows}x{cols})#{k}"), s));
                }
            }
        }
    }
    let bounds = Bounds::default();
    for (degree, wanted) in [(3, 80), (4, 40)] {
        let mut found = 0;
        let mut seed = 0;
        while found < wanted {
            let count = 1 + (seed as usize % 3);
            let gens = random_transformations(degree, count, seed);
            let s = FiniteSemigroup::from_transformations(&gens, &bounds)?.semigroup;
            if s.size() <= 16 {
                out.push((format!("random(T{degree},seed={seed})"), s));
                found += 1;
            }
            seed += 1;
        }
    }
    for n in 1..=8 {
        out.push((format!("zero({n})"), zero_semigroup(n)?));
        out.push((format!("left_zero({n})"), left_zero(n)?));
        out.push((format!("right_zero({n})"), right_zero(n)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let b = Bounds::default();
        assert_eq!(monogenic(3, 1).unwrap().size(), 3);
        assert_eq!(monogenic(1, 5).unwrap().size(), 5);
        assert_eq!(zero_semigroup(4).unwrap().size(), 4);
        assert_eq!(left_zero(3).unwrap().size(), 3);
        assert_eq!(right_zero(3).unwrap().size(), 3);
        assert_eq!(full_transformation_monoid(1, &b).unwrap().semigroup.size(), 1);
        assert_eq!(full_transformation_monoid(3, &b).unwrap().semigroup.size(), 27);
        assert_eq!(full_transformation_monoid(4, &b).unwrap().semigroup.size(), 256);
        assert_eq!(symmetric_group(4, &b).unwrap().semigroup.size(), 24);
        assert_eq!(cyclic_group(5).unwrap().order(), 5);
        assert_eq!(symmetric_perm_group(4).unwrap().order(), 24);
        assert!(monogenic(0, 1).is_err());
    }

    #[test]
    fn corpus_is_large_and_small() {
        let corpus = oracle_corpus().unwrap();
        assert!(corpus.len() >= 200, "{}", corpus.len());
        assert!(corpus.iter().all(|(_, s)| s.size() <= 16));
    }

    #[test]
    fn regular_rzms_counts() {
        // 2x2 0/1 matrices with no zero row or column.
        assert_eq!(all_regular_rzms(&cyclic_group(1).unwrap(), 2, 2).unwrap().len(), 7);
        assert_eq!(all_regular_rzms(&cyclic_group(2).unwrap(), 1, 1).unwrap().len(), 2);
    }

    #[test]
    fn adjoined_identity_is_identity() {
        let s = adjoin_identity(&left_zero(3).unwrap()).unwrap();
        assert_eq!(s.size(), 4);
        let one = (0..4).find(|&e| (0..4).all(|x| s.multiply(e, x) == x && s.multiply(x, e) == x));
        assert!(one.is_some());
    }

    #[test]
    fn monogenic_relation() {
        // a^5 = a^3 for index 3, period 2.
        let s = monogenic(3, 2).unwrap();
        let a = 0;
        let pow = |k: usize| (1..k).fold(a, |acc, _| s.multiply(acc, a));
        assert_eq!(pow(5), pow(3));
        assert_ne!(pow(4), pow(3));
    }
}
