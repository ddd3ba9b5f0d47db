//! Generating functions of graphs counted by edges.
//!
//! Three routes to `g_n(z)` (simple graphs) and one to `m_n(z)` (multigraphs):
//!
//! * determinant ratio, class-summed: `Σ_classes |C| · Π_k (1 + z^k)^{j_k}`, divided by `n!`
//!   once at the end. `det(1 - αz²) / det(1 - αz)` factors into that product,
//!   so no division is performed here (see [`crate::detmat`] for the literal one);
//! * the cycle index of the pair group with `s_k ↦ 1 + z^k`;
//! * the same determinant-ratio average taken literally over all `n!` elements;
//! * the Molien average `Σ 1/det(1 - αz)` truncated at a cutoff degree.
//!
//! All group averages run over `σ ∈ S_n` with multiplicity, not over the set of
//! distinct induced permutations. The two differ for `n = 2`, where both
//! elements induce the identity on the single slot.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::perm::{
    enumerate_partition_classes, factorial, induce_pair_perm, num_edge_slots, pair_cycle_type_of_class, CycleType,
    EdgeIndexing, Permutation,
};
use crate::poly::{
    binomial_power, inverse_product_integers, poly_mul, ExactPolynomial, RationalPolynomial, ScaleToInteger,
    TruncatedSeries,
};

/// Default limit for the literal per-element sum over `S_n`.
pub const ELEMENT_LIMIT: usize = 8;

/// Coefficients of `g_n(z)`: `counts[i]` is the number of simple graphs on `n`
/// unlabeled vertices with `i` edges, for `0 ≤ i ≤ m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCountVector {
    n: usize,
    counts: Vec<BigInt>,
}

impl GraphCountVector {
    pub(crate) fn from_counts(n: usize, counts: Vec<BigInt>) -> Self {
        debug_assert_eq!(counts.len(), num_edge_slots(n) + 1);
        GraphCountVector { n, counts }
    }

    fn from_polynomial(n: usize, p: ExactPolynomial) -> Result<Self> {
        let m = num_edge_slots(n);
        let mut counts = p.into_coeffs();
        if counts.len() > m + 1 {
            return Err(Error::Consistency(format!(
                "g_{n} has degree {} > m = {m}",
                counts.len() - 1
            )));
        }
        counts.resize(m + 1, BigInt::zero());
        Ok(GraphCountVector { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// `g_n(1)`, the number of graphs on `n` unlabeled vertices.
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    pub fn to_polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::from_coeffs(self.counts.clone())
    }

    /// Checks `a[0] = a[m] = 1`, complement symmetry and positivity.
    pub fn check_invariants(&self) -> Result<()> {
        let m = self.m();
        let one = BigInt::one();
        if self.counts[0] != one || self.counts[m] != one {
            return Err(Error::Consistency(format!(
                "g_{}: a[0] = {}, a[m] = {}",
                self.n, self.counts[0], self.counts[m]
            )));
        }
        for i in 0..=m {
            if self.counts[i] != self.counts[m - i] {
                return Err(Error::Consistency(format!(
                    "g_{}: a[{i}] = {} but a[{}] = {}",
                    self.n,
                    self.counts[i],
                    m - i,
                    self.counts[m - i]
                )));
            }
            if self.counts[i] <= BigInt::zero() {
                return Err(Error::Consistency(format!("g_{}: a[{i}] is not positive", self.n)));
            }
        }
        Ok(())
    }
}

/// Coefficients of `m_n(z)` up to a cutoff: `counts[k]` is the number of
/// multigraphs on `n` unlabeled vertices with `k` edges counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigraphSeriesVector {
    n: usize,
    counts: Vec<BigInt>,
}

impl MultigraphSeriesVector {
    pub(crate) fn new(n: usize, counts: Vec<BigInt>) -> Self {
        MultigraphSeriesVector { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

/// A conjugacy class of `S_n` with the cycle type its elements induce on edge slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub vertex_type: CycleType,
    pub pair_type: CycleType,
    pub class_size: BigInt,
}

pub fn pair_classes(n: usize) -> Result<Vec<PairClass>> {
    let idx = EdgeIndexing::new(n);
    enumerate_partition_classes(n)?
        .into_iter()
        .map(|c| {
            Ok(PairClass {
                pair_type: pair_cycle_type_of_class(&c.cycle_type, &idx)?,
                vertex_type: c.cycle_type,
                class_size: c.class_size,
            })
        })
        .collect()
}

/// `Σ_i Tr(A^(i)) z^i = Π_k (1 + z^k)^{j_k}`: the `z^i` coefficient counts the
/// `i`-subsets of slots fixed by a permutation of this cycle type.
pub fn trace_genfunc_of_element(alpha_type: &CycleType) -> ExactPolynomial {
    let factors: Vec<(usize, usize)> = alpha_type.nonzero().collect();
    binomial_power(&factors)
}

/// Number of `i`-subsets of slots fixed by a permutation of this cycle type,
/// as `Σ Π_k C(j_k, β_k)` over `β` with `Σ k β_k = i`.
pub fn fixed_subset_count(alpha_type: &CycleType, i: usize) -> BigInt {
    fn go(factors: &[(usize, usize)], rest: usize) -> BigInt {
        let Some((&(k, j), tail)) = factors.split_first() else {
            return if rest == 0 { BigInt::one() } else { BigInt::zero() };
        };
        let mut total = BigInt::zero();
        for beta in 0..=j.min(rest / k) {
            let sub = go(tail, rest - k * beta);
            if !sub.is_zero() {
                total += binomial(BigInt::from(j), BigInt::from(beta)) * sub;
            }
        }
        total
    }
    let factors: Vec<(usize, usize)> = alpha_type.nonzero().collect();
    go(&factors, i)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    Ok(())
}

/// `g_n(z)` by the class-summed determinant-ratio average.
pub fn simple_genfunc_det(n: usize) -> Result<GraphCountVector> {
    simple_genfunc_det_with(n, Execution::default())
}

pub fn simple_genfunc_det_with(n: usize, exec: Execution) -> Result<GraphCountVector> {
    check_n(n)?;
    let classes = pair_classes(n)?;
    let acc = exec.map_reduce(
        &classes,
        ExactPolynomial::zero,
        |c| trace_genfunc_of_element(&c.pair_type).scale(&c.class_size),
        |a, b| a + b,
    );
    let g = acc.scale_and_assert_integer(&factorial(n))?;
    GraphCountVector::from_polynomial(n, g)
}

/// Cycle index of the pair group `S_n^(2)`, one monomial per distinct slot cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndex {
    n: usize,
    terms: BTreeMap<CycleType, BigRational>,
}

impl CycleIndex {
    pub fn pair_group(n: usize) -> Result<Self> {
        check_n(n)?;
        let order = factorial(n);
        let mut terms: BTreeMap<CycleType, BigRational> = BTreeMap::new();
        for class in pair_classes(n)? {
            *terms.entry(class.pair_type).or_insert_with(BigRational::zero) +=
                BigRational::new(class.class_size, order.clone());
        }
        Ok(CycleIndex { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(slot cycle type, coefficient)`, the identity term first.
    pub fn terms(&self) -> impl Iterator<Item = (&CycleType, &BigRational)> {
        self.terms.iter().rev()
    }

    /// `Z(s_k ↦ 1 + z^k)`, expanding each `(1 + z^k)^j` by the binomial theorem.
    pub fn substitute_one_plus_zk(&self) -> RationalPolynomial {
        let mut acc = RationalPolynomial::zero();
        for (ct, coeff) in &self.terms {
            let monomial = ct.nonzero().fold(ExactPolynomial::one(), |p, (k, j)| {
                let mut expansion = vec![BigInt::zero(); k * j + 1];
                for t in 0..=j {
                    expansion[k * t] = binomial(BigInt::from(j), BigInt::from(t));
                }
                poly_mul(&p, &ExactPolynomial::from_coeffs(expansion))
            });
            acc.add_scaled(coeff, &monomial);
        }
        acc
    }
}

impl fmt::Display for CycleIndex {
    /// `c * s_1^a*s_2^b + ...`; coefficients in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .terms()
            .map(|(ct, c)| {
                let vars: Vec<String> = ct
                    .nonzero()
                    .map(|(k, j)| if j == 1 { format!("s_{k}") } else { format!("s_{k}^{j}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c} * {}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// `g_n(z)` by substituting `1 + z^k` into the pair-group cycle index.
pub fn simple_genfunc_harary(n: usize) -> Result<GraphCountVector> {
    let z = CycleIndex::pair_group(n)?;
    let g = z.substitute_one_plus_zk().scale_and_assert_integer(&BigInt::one())?;
    GraphCountVector::from_polynomial(n, g)
}

/// `g_n(z)` as the literal average over all `n!` elements of `S_n`.
pub fn simple_genfunc_elementwise(n: usize, limit: usize) -> Result<GraphCountVector> {
    simple_genfunc_elementwise_with(n, limit, Execution::default())
}

pub fn simple_genfunc_elementwise_with(n: usize, limit: usize, exec: Execution) -> Result<GraphCountVector> {
    check_n(n)?;
    if n > limit {
        return Err(Error::Guard {
            path: "element-wise sum",
            n,
            limit,
            hint: "use --method det or --method harary",
        });
    }
    let idx = EdgeIndexing::new(n);
    let order: u64 = (1..=n as u64).product();
    let acc = exec.fold_range(
        0..order,
        ExactPolynomial::zero,
        |mut acc, rank| {
            let sigma = Permutation::nth_lexicographic(n, rank);
            let alpha = induce_pair_perm(&sigma, &idx).expect("degree matches by construction");
            acc += &trace_genfunc_of_element(&alpha.cycle_type());
            acc
        },
        |a, b| a + b,
    );
    let g = acc.scale_and_assert_integer(&factorial(n))?;
    GraphCountVector::from_polynomial(n, g)
}

/// `m_n(z)` up to `z^cutoff` by the class-summed Molien average.
pub fn multigraph_series(n: usize, cutoff: usize) -> Result<MultigraphSeriesVector> {
    multigraph_series_with(n, cutoff, Execution::default())
}

pub fn multigraph_series_with(n: usize, cutoff: usize, exec: Execution) -> Result<MultigraphSeriesVector> {
    check_n(n)?;
    let classes = pair_classes(n)?;
    let acc = exec.map_reduce(
        &classes,
        || vec![BigInt::zero(); cutoff + 1],
        |c| {
            let mut s = inverse_product_integers(&c.pair_type, cutoff);
            s.iter_mut().for_each(|x| *x *= &c.class_size);
            s
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    let series = TruncatedSeries::from_integers(&acc, cutoff).scale_and_assert_integer(&factorial(n))?;
    let counts = series.to_integers().expect("integrality checked above");
    Ok(MultigraphSeriesVector::new(n, counts))
}
