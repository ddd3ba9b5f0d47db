//! Brute-force ground truth, independent of the generating-function code:
//! isomorphism classes of graphs and multigraphs found by exhaustive
//! canonicalization, plus direct Burnside counts.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::genfunc::{fixed_subset_count, pair_classes, GraphCountVector, MultigraphSeriesVector};
use crate::invariants::{canonical_mask, is_orbit_minimum, pair_group_elements, EdgeMask};
use crate::perm::{factorial, num_edge_slots, PairPermutation};

pub const SIMPLE_LIMIT: usize = 6;
pub const MULTI_LIMIT: usize = 5;
pub const MULTI_CUTOFF_LIMIT: usize = 8;

/// Edge multiplicities of a multigraph, one per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    n: usize,
    weights: Vec<u32>,
}

impl WeightVector {
    pub fn new(n: usize, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != num_edge_slots(n) {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} slots",
                weights.len(),
                num_edge_slots(n)
            )));
        }
        Ok(WeightVector { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Number of edges counted with multiplicity.
    pub fn total(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn permuted(&self, p: &PairPermutation) -> WeightVector {
        WeightVector {
            n: self.n,
            weights: permute_weights(&self.weights, p.images()),
        }
    }
}

fn permute_weights(w: &[u32], images: &[usize]) -> Vec<u32> {
    let mut out = vec![0; w.len()];
    for (s, &x) in w.iter().enumerate() {
        out[images[s]] = x;
    }
    out
}

fn guard(path: &'static str, n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::Guard {
            path,
            n,
            limit,
            hint: "brute force is exponential; use the generating-function paths",
        });
    }
    Ok(())
}

/// Smallest mask in the orbit of `mask` (`n ≤ SIMPLE_LIMIT + 1`).
pub fn canonical_simple(mask: &EdgeMask) -> Result<EdgeMask> {
    let group = pair_group_elements(mask.n(), SIMPLE_LIMIT + 1)?;
    let images: Vec<&[usize]> = group.iter().map(|g| g.images()).collect();
    EdgeMask::new(mask.n(), canonical_mask(mask.bits(), &images))
}

/// Lexicographically smallest vector in the orbit of `w` (`n ≤ MULTI_LIMIT + 1`).
pub fn canonical_weights(w: &WeightVector) -> Result<WeightVector> {
    let group = pair_group_elements(w.n(), MULTI_LIMIT + 1)?;
    Ok(group.iter().map(|g| w.permuted(g)).min().expect("group is never empty"))
}

/// Number of isomorphism classes of simple graphs by edge count, by testing
/// every one of the `2^m` labeled graphs for orbit-minimality.
pub fn brute_simple_counts(n: usize) -> Result<GraphCountVector> {
    brute_simple_counts_with(n, Execution::default())
}

pub fn brute_simple_counts_with(n: usize, exec: Execution) -> Result<GraphCountVector> {
    guard("brute-force simple graphs", n, SIMPLE_LIMIT)?;
    let m = num_edge_slots(n);
    let group = pair_group_elements(n, SIMPLE_LIMIT)?;
    let images: Vec<&[usize]> = group.iter().map(|g| g.images()).collect();
    let counts = exec.fold_range(
        0..1u64 << m,
        || vec![0u64; m + 1],
        |mut acc, bits| {
            if is_orbit_minimum(bits, &images) {
                acc[bits.count_ones() as usize] += 1;
            }
            acc
        },
        add_counts,
    );

    // Burnside: the orbit total is the average number of fixed labeled graphs.
    let fixed: BigInt = group
        .iter()
        .map(|g| BigInt::from(2).pow(g.cycle_type().num_cycles() as u32))
        .sum();
    let total: u64 = counts.iter().sum();
    if fixed != BigInt::from(total) * factorial(n) {
        return Err(Error::Consistency(format!(
            "brute force found {total} classes for n = {n}, Burnside gives {fixed}/{n}!"
        )));
    }
    Ok(GraphCountVector::from_counts(
        n,
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

/// All weight vectors of length `m` with entries summing to `k`.
fn compositions(m: usize, k: u32) -> Vec<Vec<u32>> {
    fn go(m: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == m {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=rest).rev() {
            cur.push(x);
            go(m, rest - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, k, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Number of isomorphism classes of multigraphs by total edge multiplicity
/// `k ≤ cutoff`, by lexicographic-minimum canonicalization of every weight
/// vector. Each entry is also checked against a direct Burnside count.
pub fn brute_multigraph_counts(n: usize, cutoff: usize) -> Result<MultigraphSeriesVector> {
    brute_multigraph_counts_with(n, cutoff, Execution::default())
}

pub fn brute_multigraph_counts_with(n: usize, cutoff: usize, exec: Execution) -> Result<MultigraphSeriesVector> {
    guard("brute-force multigraphs", n, MULTI_LIMIT)?;
    if cutoff > MULTI_CUTOFF_LIMIT {
        return Err(Error::Guard {
            path: "brute-force multigraphs (cutoff)",
            n: cutoff,
            limit: MULTI_CUTOFF_LIMIT,
            hint: "lower --max-degree",
        });
    }
    let m = num_edge_slots(n);
    let group = pair_group_elements(n, MULTI_LIMIT)?;
    let order = group.len() as u64;
    let mut counts = Vec::with_capacity(cutoff + 1);
    for k in 0..=cutoff as u32 {
        let vectors = compositions(m, k);
        let (minimal, fixed) = exec.map_reduce(
            &vectors,
            || (0u64, 0u64),
            |w| {
                let mut is_min = true;
                let mut fixed = 0;
                for g in &group {
                    let image = permute_weights(w, g.images());
                    if image < *w {
                        is_min = false;
                    }
                    if image == *w {
                        fixed += 1;
                    }
                }
                (u64::from(is_min), fixed)
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
        if fixed != minimal * order {
            return Err(Error::Consistency(format!(
                "n = {n}, k = {k}: {minimal} canonical multigraphs but Burnside gives {fixed}/{order}"
            )));
        }
        counts.push(BigInt::from(minimal));
    }
    Ok(MultigraphSeriesVector::new(n, counts))
}

/// Orbits of `i`-subsets of slots, `(1/n!) Σ_classes |C| · #fixed`, with the
/// fixed-subset count taken from the explicit binomial sum.
pub fn burnside_subset_count(n: usize, i: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let m = num_edge_slots(n);
    if i > m {
        return Err(Error::InvalidInput(format!("edge count {i} exceeds m = {m}")));
    }
    let mut total = BigInt::zero();
    for c in pair_classes(n)? {
        total += &c.class_size * fixed_subset_count(&c.pair_type, i);
    }
    let order = factorial(n);
    if !(&total % &order).is_zero() {
        return Err(Error::Consistency(format!(
            "Burnside sum {total} not divisible by {order}"
        )));
    }
    Ok(total / order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn simple_small() {
        assert_eq!(brute_simple_counts(1).unwrap().counts(), ints(&[1]));
        assert_eq!(brute_simple_counts(3).unwrap().counts(), ints(&[1, 1, 1, 1]));
        assert_eq!(brute_simple_counts(4).unwrap().counts(), ints(&[1, 1, 2, 3, 2, 1, 1]));
        assert!(matches!(brute_simple_counts(7), Err(Error::Guard { .. })));
    }

    #[test]
    fn multigraph_small() {
        assert_eq!(brute_multigraph_counts(2, 5).unwrap().counts(), ints(&[1; 6]));
        assert_eq!(brute_multigraph_counts(3, 2).unwrap().counts(), ints(&[1, 1, 2]));
        assert_eq!(brute_multigraph_counts(1, 3).unwrap().counts(), ints(&[1, 0, 0, 0]));
        assert!(brute_multigraph_counts(6, 2).is_err());
        assert!(brute_multigraph_counts(3, 9).is_err());
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_subset_count(4, 3).unwrap(), BigInt::from(3));
        assert_eq!(burnside_subset_count(5, 0).unwrap(), BigInt::from(1));
        assert!(burnside_subset_count(4, 7).is_err());
    }

    #[test]
    fn compositions_count() {
        // C(k + m - 1, m - 1)
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(10, 8).len(), 24310);
        assert!(compositions(4, 3).iter().all(|w| w.iter().sum::<u32>() == 3));
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(0, 1).is_empty());
    }

    #[test]
    fn canonical_forms_are_orbit_constant() {
        for n in 2..=5 {
            let group = pair_group_elements(n, 6).unwrap();
            let m = num_edge_slots(n);
            for bits in (0..1u64 << m).step_by(7) {
                let mask = EdgeMask::new(n, bits).unwrap();
                let canon = canonical_simple(&mask).unwrap();
                assert_eq!(canonical_simple(&canon).unwrap(), canon);
                for g in group.iter().step_by(5) {
                    assert_eq!(canonical_simple(&mask.permuted(g)).unwrap(), canon);
                }
            }
        }
        let w = WeightVector::new(4, vec![2, 0, 1, 0, 0, 3]).unwrap();
        let canon = canonical_weights(&w).unwrap();
        assert_eq!(canon.total(), 6);
        for g in pair_group_elements(4, 6).unwrap() {
            assert_eq!(canonical_weights(&w.permuted(&g)).unwrap(), canon);
        }
        assert!(WeightVector::new(4, vec![1]).is_err());
    }
}
