//! Permutations of `{0..n}`, conjugacy classes of the symmetric group, and the
//! induced action on unordered vertex pairs (edge slots).
//!
//! Points and slots are 0-based in the API. Display and the CLI use the usual
//! 1-based names (`x_1`, `s_1`, vertex `1`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Default limit for iterating all of `S_n`.
pub const PERMUTATION_LIMIT: usize = 10;

/// A permutation in one-line notation: `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidInput("one-line notation is 1-based".into()));
        }
        Self::from_images(one_line.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation of degree `n` from disjoint cycles written 1-based,
    /// e.g. `from_cycles(4, &[&[1, 2]])` is the transposition `(1 2)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(Error::InvalidInput(format!("bad cycle {cycle:?} for degree {n}")));
                }
                touched[p - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    /// The `rank`-th permutation of `{0..n}` in lexicographic order (`rank < n!`).
    pub fn nth_lexicographic(n: usize, mut rank: u64) -> Self {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut fact: Vec<u64> = vec![1; n.max(1)];
        for i in 1..n {
            fact[i] = fact[i - 1] * i as u64;
        }
        let mut images = Vec::with_capacity(n);
        for pos in (0..n).rev() {
            let q = (rank / fact[pos]) as usize;
            rank %= fact[pos];
            images.push(pool.remove(q));
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        cycle_type_of_images(&self.images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Cycle type of a permutation of degree `N`: `j(k)` is the number of cycles of length `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    // counts[k - 1] = j_k, len = degree
    counts: Vec<usize>,
}

impl CycleType {
    /// From the vector `(j_1, ..., j_N)`; the degree is `Σ k j_k` and trailing zeros are padded.
    pub fn from_counts(counts: &[usize]) -> Self {
        let degree: usize = counts.iter().enumerate().map(|(i, &j)| (i + 1) * j).sum();
        let mut v = counts.to_vec();
        v.resize(degree, 0);
        CycleType { counts: v }
    }

    /// From a list of cycle lengths (a partition of the degree).
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let degree: usize = lengths.iter().sum();
        let mut counts = vec![0; degree];
        for &len in lengths {
            assert!(len >= 1, "cycle length must be positive");
            counts[len - 1] += 1;
        }
        CycleType { counts }
    }

    pub fn identity(degree: usize) -> Self {
        let mut counts = vec![0; degree];
        if degree > 0 {
            counts[0] = degree;
        }
        CycleType { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    /// Number of cycles of length `k` (0 for `k` out of range).
    pub fn j(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// The full vector `(j_1, ..., j_N)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `(k, j_k)` for every cycle length that actually occurs.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &j)| j > 0)
            .map(|(i, &j)| (i + 1, j))
    }

    pub fn num_cycles(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Cycle lengths in decreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.num_cycles());
        for (k, j) in self.nonzero().collect::<Vec<_>>().into_iter().rev() {
            parts.extend(std::iter::repeat_n(k, j));
        }
        parts
    }

    /// Size of the conjugacy class of `S_N` with this cycle type:
    /// `N! / Π_k (k^{j_k} j_k!)`.
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        for (k, j) in self.nonzero() {
            denom *= BigInt::from(k).pow(j as u32) * factorial(j);
        }
        factorial(self.degree()) / denom
    }

    /// One permutation with this cycle type: cycles of decreasing length laid
    /// over consecutive points `0, 1, 2, ...`.
    pub fn representative(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        let mut start = 0;
        for len in self.parts() {
            for i in 0..len {
                images[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType[{self}]")
    }
}

impl fmt::Display for CycleType {
    /// Exponential notation, e.g. `1^2 2^2`; the empty type prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().map(|(k, j)| format!("{k}^{j}")).collect();
        if parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub(crate) fn cycle_type_of_images(images: &[usize]) -> CycleType {
    let n = images.len();
    let mut counts = vec![0; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = images[p];
            len += 1;
        }
        counts[len - 1] += 1;
    }
    CycleType { counts }
}

/// Cycle type of any permutation.
pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Lexicographic numbering of the 2-subsets of `{0..n}`:
/// `{0,1}, {0,2}, ..., {0,n-1}, {1,2}, ..., {n-2,n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndexing {
    n: usize,
    pairs: Vec<(usize, usize)>,
    // slots[i * n + j] for i != j
    slots: Vec<usize>,
}

impl EdgeIndexing {
    pub fn new(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut slots = vec![usize::MAX; n * n];
        for i in 0..n {
            for j in i + 1..n {
                slots[i * n + j] = pairs.len();
                slots[j * n + i] = pairs.len();
                pairs.push((i, j));
            }
        }
        EdgeIndexing { n, pairs, slots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of slots, `n(n-1)/2`.
    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// The pair `(i, j)` with `i < j` held by `slot`.
    pub fn pair_of(&self, slot: usize) -> (usize, usize) {
        self.pairs[slot]
    }

    /// Slot of the unordered pair `{i, j}`; panics if `i == j`.
    #[inline]
    pub fn slot_of(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "no slot for a loop");
        self.slots[i * self.n + j]
    }
}

pub fn num_edge_slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A permutation of edge slots induced by a vertex permutation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairPermutation {
    n: usize,
    perm: Permutation,
}

impl PairPermutation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.perm.degree()
    }

    /// The underlying permutation of `{0..m}`.
    pub fn as_permutation(&self) -> &Permutation {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, slot: usize) -> usize {
        self.perm.apply(slot)
    }

    pub fn images(&self) -> &[usize] {
        self.perm.images()
    }

    pub fn compose(&self, other: &PairPermutation) -> PairPermutation {
        assert_eq!(self.n, other.n);
        PairPermutation {
            n: self.n,
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn cycle_type(&self) -> CycleType {
        self.perm.cycle_type()
    }
}

impl fmt::Debug for PairPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairPermutation(n={}, {})", self.n, self.perm)
    }
}

/// `σ'{i, j} = {σ i, σ j}`.
pub fn induce_pair_perm(sigma: &Permutation, idx: &EdgeIndexing) -> Result<PairPermutation> {
    if sigma.degree() != idx.n() {
        return Err(Error::DegreeMismatch {
            expected: idx.n(),
            found: sigma.degree(),
        });
    }
    let images = (0..idx.m())
        .map(|s| {
            let (i, j) = idx.pair_of(s);
            idx.slot_of(sigma.apply(i), sigma.apply(j))
        })
        .collect();
    Ok(PairPermutation {
        n: idx.n(),
        perm: Permutation { images },
    })
}

/// Lexicographic-order iterator over all of `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n!` permutations, refusing `n > PERMUTATION_LIMIT`.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    enumerate_permutations_limited(n, PERMUTATION_LIMIT)
}

pub fn enumerate_permutations_limited(n: usize, limit: usize) -> Result<Permutations> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::Guard {
            path: "permutation enumeration",
            n,
            limit,
            hint: "use the class-summed path instead",
        });
    }
    Ok(Permutations {
        next: Some((0..n).collect()),
    })
}

/// A conjugacy class of `S_n` together with its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClass {
    pub cycle_type: CycleType,
    pub class_size: BigInt,
}

/// One class per partition of `n`, parts in decreasing order, partitions in
/// reverse lexicographic order (`[n]` first, `[1^n]` last).
pub fn enumerate_partition_classes(n: usize) -> Result<Vec<PartitionClass>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions_into(n, n, &mut parts, &mut |p| {
        let cycle_type = CycleType::from_lengths(p);
        let class_size = cycle_type.class_size();
        out.push(PartitionClass { cycle_type, class_size });
    });
    Ok(out)
}

fn partitions_into(rest: usize, max: usize, parts: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if rest == 0 {
        emit(parts);
        return;
    }
    for k in (1..=max.min(rest)).rev() {
        parts.push(k);
        partitions_into(rest - k, k, parts, emit);
        parts.pop();
    }
}

/// Cycle type on edge slots of any permutation with vertex cycle type `lambda`,
/// found by tracing a representative.
pub fn pair_cycle_type_of_class(lambda: &CycleType, idx: &EdgeIndexing) -> Result<CycleType> {
    let rep = lambda.representative();
    Ok(induce_pair_perm(&rep, idx)?.cycle_type())
}

/// Closed-form pair cycle type (gcd/lcm rule). Cross-check only.
///
/// A `k`-cycle contributes `(k-1)/2` cycles of length `k` if `k` is odd, or
/// `(k-2)/2` of length `k` plus one of length `k/2` if even; two cycles of
/// lengths `r` and `t` contribute `gcd(r,t)` cycles of length `lcm(r,t)`.
pub fn pair_cycle_type_closed_form(lambda: &CycleType) -> CycleType {
    use num_integer::Integer;

    let m = num_edge_slots(lambda.degree());
    let mut counts = vec![0usize; m];
    let mut add = |len: usize, times: usize| {
        if times > 0 {
            counts[len - 1] += times;
        }
    };
    let present: Vec<(usize, usize)> = lambda.nonzero().collect();
    for (a, &(r, jr)) in present.iter().enumerate() {
        if r % 2 == 1 {
            add(r, jr * (r - 1) / 2);
        } else {
            add(r, jr * (r - 2) / 2);
            add(r / 2, jr);
        }
        add(r, r * jr * jr.saturating_sub(1) / 2);
        for &(t, jt) in &present[a + 1..] {
            add(r.lcm(&t), r.gcd(&t) * jr * jt);
        }
    }
    CycleType { counts }
}
