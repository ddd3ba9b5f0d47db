//! Polynomial invariants of the pair group acting on edge variables `x_1..x_m`.
//!
//! Simple graphs are squarefree monomials (equivalently [`EdgeMask`]s). The
//! reduction [`gamma_reduce`] sends `x_s^p ↦ x_s`, which is how polynomial
//! functions restrict to 0/1 edge weights.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::genfunc::pair_classes;
use crate::perm::{
    enumerate_permutations_limited, factorial, induce_pair_perm, num_edge_slots, CycleType, EdgeIndexing,
    PairPermutation,
};

/// Largest `n` for which the Reynolds operator iterates `S_n`.
pub const REYNOLDS_LIMIT: usize = 8;

/// Largest `n` for exhaustive orbit enumeration.
pub const ORBIT_LIMIT: usize = 7;

/// A simple graph on `n` vertices: bit `s` is set iff edge slot `s` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask {
    n: usize,
    bits: u64,
}

impl EdgeMask {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        let m = num_edge_slots(n);
        if m > 64 {
            return Err(Error::InvalidInput(format!("{m} edge slots do not fit in 64 bits")));
        }
        if m < 64 && bits >> m != 0 {
            return Err(Error::InvalidInput(format!("mask {bits:#x} has bits beyond slot {m}")));
        }
        Ok(EdgeMask { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn edge_count(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn contains(&self, slot: usize) -> bool {
        self.bits >> slot & 1 == 1
    }

    pub fn permuted(&self, p: &PairPermutation) -> EdgeMask {
        EdgeMask {
            n: self.n,
            bits: permute_bits(self.bits, p.images()),
        }
    }

    /// The squarefree monomial `Π_{s in mask} x_s`.
    pub fn to_monomial(&self) -> Monomial {
        let m = num_edge_slots(self.n);
        Monomial {
            exponents: (0..m).map(|s| u32::from(self.contains(s))).collect(),
        }
    }
}

#[inline]
pub(crate) fn permute_bits(mut bits: u64, images: &[usize]) -> u64 {
    let mut out = 0u64;
    while bits != 0 {
        let s = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << images[s];
    }
    out
}

/// `x_1^{e_1} ... x_m^{e_m}`; `exponents[s]` belongs to slot `s` (variable `x_{s+1}`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(m: usize) -> Self {
        Monomial { exponents: vec![0; m] }
    }

    /// From `(variable, exponent)` pairs using the 1-based variable names `x_1..x_m`.
    pub fn from_powers(m: usize, powers: &[(usize, u32)]) -> Self {
        let mut exponents = vec![0; m];
        for &(var, e) in powers {
            assert!((1..=m).contains(&var), "variable x_{var} out of range");
            exponents[var - 1] += e;
        }
        Monomial { exponents }
    }

    /// The squarefree monomial on the given 1-based variables.
    pub fn product_of(m: usize, vars: &[usize]) -> Self {
        let powers: Vec<(usize, u32)> = vars.iter().map(|&v| (v, 1)).collect();
        Self::from_powers(m, &powers)
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// `σ · x_s = x_{σ(s)}`.
    pub fn act(&self, p: &PairPermutation) -> Monomial {
        let mut exponents = vec![0; self.exponents.len()];
        for (s, &e) in self.exponents.iter().enumerate() {
            exponents[p.apply(s)] = e;
        }
        Monomial { exponents }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(s, &e)| {
                if e == 1 {
                    format!("x_{}", s + 1)
                } else {
                    format!("x_{}^{e}", s + 1)
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// `γ`: every positive exponent becomes 1.
pub fn gamma_reduce(mono: &Monomial) -> Monomial {
    Monomial {
        exponents: mono.exponents.iter().map(|&e| e.min(1)).collect(),
    }
}

/// Polynomial in `x_1..x_m` with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPoly {
    pub fn zero(num_vars: usize) -> Self {
        SymPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (BigRational, Monomial)>) -> Self {
        let mut p = Self::zero(num_vars);
        for (c, mono) in terms {
            p.add_term(mono, &c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_term(&mut self, mono: Monomial, c: &BigRational) {
        assert_eq!(
            mono.num_vars(),
            self.num_vars,
            "monomial in the wrong number of variables"
        );
        let entry = self.terms.entry(mono).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> SymPoly {
        SymPoly::from_terms(self.num_vars, self.terms.iter().map(|(mono, v)| (v * c, mono.clone())))
    }

    pub fn act(&self, p: &PairPermutation) -> SymPoly {
        SymPoly::from_terms(
            self.num_vars,
            self.terms.iter().map(|(mono, c)| (c.clone(), mono.act(p))),
        )
    }

    /// `γ` extended linearly.
    pub fn gamma(&self) -> SymPoly {
        SymPoly::from_terms(
            self.num_vars,
            self.terms.iter().map(|(mono, c)| (c.clone(), gamma_reduce(mono))),
        )
    }

    /// First monomial on which `self` and `other` disagree, with both coefficients.
    pub fn first_difference(&self, other: &SymPoly) -> Option<(Monomial, BigRational, BigRational)> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .find(|mono| self.coeff(mono) != other.coeff(mono))
            .map(|mono| (mono.clone(), self.coeff(mono), other.coeff(mono)))
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, c)| {
                if mono.degree() == 0 {
                    c.to_string()
                } else if c.is_one() {
                    mono.to_string()
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All `n!` induced slot permutations, in lexicographic order of `σ`.
pub fn pair_group_elements(n: usize, limit: usize) -> Result<Vec<PairPermutation>> {
    let idx = EdgeIndexing::new(n);
    enumerate_permutations_limited(n, limit)?
        .map(|sigma| induce_pair_perm(&sigma, &idx))
        .collect()
}

/// `R(mono) = (1/n!) Σ_{σ ∈ S_n} σ' · mono`.
pub fn reynolds(mono: &Monomial, n: usize) -> Result<SymPoly> {
    let group = pair_group_elements(n, REYNOLDS_LIMIT)?;
    reynolds_over(mono, &group)
}

fn reynolds_over(mono: &Monomial, group: &[PairPermutation]) -> Result<SymPoly> {
    let m = group.first().map_or(0, PairPermutation::m);
    if mono.num_vars() != m {
        return Err(Error::InvalidInput(format!(
            "monomial has {} variables, the pair group acts on {m}",
            mono.num_vars()
        )));
    }
    let weight = BigRational::new(BigInt::one(), BigInt::from(group.len()));
    let mut out = SymPoly::zero(m);
    for g in group {
        out.add_term(mono.act(g), &weight);
    }
    Ok(out)
}

/// True if every induced permutation of `S_n` fixes `poly`.
pub fn is_group_fixed(poly: &SymPoly, n: usize) -> Result<bool> {
    let group = pair_group_elements(n, REYNOLDS_LIMIT)?;
    Ok(group.iter().all(|g| &poly.act(g) == poly))
}

/// Number of `i`-subsets of slots that are unions of whole cycles of a
/// permutation with this cycle type (the trace of its action on `i`-subsets).
fn union_of_cycles_count(ct: &CycleType, i: usize) -> BigInt {
    let mut ways = vec![BigInt::zero(); i + 1];
    ways[0] = BigInt::one();
    for (len, j) in ct.nonzero() {
        for _ in 0..j {
            for total in (len..=i).rev() {
                let (lo, hi) = ways.split_at_mut(total);
                hi[0] += &lo[total - len];
            }
        }
    }
    ways.swap_remove(i)
}

/// Dimension of the degree-`i` part of the invariant algebra of simple graphs:
/// the trace of the averaged action on `i`-subsets of slots.
pub fn component_dimension(n: usize, i: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let m = num_edge_slots(n);
    if i > m {
        return Err(Error::InvalidInput(format!("edge count {i} exceeds m = {m}")));
    }
    let total: BigInt = pair_classes(n)?
        .iter()
        .map(|c| &c.class_size * union_of_cycles_count(&c.pair_type, i))
        .sum();
    let order = factorial(n);
    if &total % &order != BigInt::zero() {
        return Err(Error::Consistency(format!(
            "averaged trace {total}/{order} is not an integer"
        )));
    }
    Ok(total / order)
}

/// One mask per isomorphism class of `i`-edge graphs: the numerically smallest
/// mask of each orbit, in increasing order.
pub fn orbit_representatives(n: usize, i: usize, limit: usize) -> Result<Vec<EdgeMask>> {
    let m = num_edge_slots(n);
    if i > m {
        return Err(Error::InvalidInput(format!("edge count {i} exceeds m = {m}")));
    }
    if n > limit || m > 64 {
        return Err(Error::Guard {
            path: "orbit enumeration",
            n,
            limit,
            hint: "use component_dimension for counts",
        });
    }
    let group = pair_group_elements(n, limit)?;
    let images: Vec<&[usize]> = group.iter().map(|g| g.images()).collect();
    let mut reps = Vec::new();
    for bits in subsets_of_size(m, i) {
        if is_orbit_minimum(bits, &images) {
            reps.push(EdgeMask { n, bits });
        }
    }
    Ok(reps)
}

pub(crate) fn is_orbit_minimum(bits: u64, images: &[&[usize]]) -> bool {
    images.iter().all(|img| permute_bits(bits, img) >= bits)
}

/// Smallest mask in the orbit of `bits`.
pub(crate) fn canonical_mask(bits: u64, images: &[&[usize]]) -> u64 {
    images.iter().map(|img| permute_bits(bits, img)).min().unwrap_or(bits)
}

/// All `m`-bit masks with exactly `k` bits set, in increasing order.
fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut next = match k {
        _ if k > m => None,
        0 => Some(0),
        _ => Some(u64::MAX >> (64 - k)),
    };
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack: next larger integer with the same popcount
        next = (cur != 0)
            .then(|| {
                let low = cur & cur.wrapping_neg();
                let ripple = cur.checked_add(low)?;
                let succ = (((ripple ^ cur) >> 2) / low) | ripple;
                (m == 64 || succ >> m == 0).then_some(succ)
            })
            .flatten();
        Some(cur)
    })
}

/// One line of [`N4Report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N4Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of re-deriving the `n = 4` invariants and their `γ`-images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N4Report {
    pub checks: Vec<N4Check>,
}

impl N4Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for N4Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn compare(name: &str, got: &SymPoly, expected: &SymPoly) -> N4Check {
    let (passed, detail) = match got.first_difference(expected) {
        None => (true, format!("{} terms match", got.num_terms())),
        Some((mono, g, e)) => (false, format!("coefficient of {mono} is {g}, expected {e}")),
    };
    N4Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Orbit-shape check: `count` terms, all with coefficient `coeff`, each passing `shape`.
fn structure(
    name: &str,
    got: &SymPoly,
    count: usize,
    coeff: &BigRational,
    shape: impl Fn(&Monomial) -> bool,
) -> N4Check {
    let mut problems = Vec::new();
    if got.num_terms() != count {
        problems.push(format!("{} terms, expected {count}", got.num_terms()));
    }
    if let Some((mono, c)) = got.terms().find(|(_, c)| *c != coeff) {
        problems.push(format!("coefficient of {mono} is {c}, expected {coeff}"));
    }
    if let Some((mono, _)) = got.terms().find(|(mono, _)| !shape(mono)) {
        problems.push(format!("unexpected term {mono}"));
    }
    N4Check {
        name: name.to_string(),
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{count} terms with coefficient {coeff}")
        } else {
            problems.join("; ")
        },
    }
}

/// Recomputes the Reynolds images of the degree ≤ 5 generators for `n = 4`
/// and checks them against their known explicit expansions, then checks that
/// `γ` maps the weighted-graph generators onto the four simple-graph ones.
pub fn reproduce_n4_generators() -> Result<N4Report> {
    const M: usize = 6;
    let group = pair_group_elements(4, REYNOLDS_LIMIT)?;
    let idx = EdgeIndexing::new(4);
    let r = |powers: &[(usize, u32)]| reynolds_over(&Monomial::from_powers(M, powers), &group);
    let sq = |vars: &[usize]| Monomial::product_of(M, vars);
    let power_sum = |e: u32, c: &BigRational| {
        SymPoly::from_terms(M, (1..=M).map(|v| (c.clone(), Monomial::from_powers(M, &[(v, e)]))))
    };
    let adjacent = |a: usize, b: usize| {
        let (p, q) = (idx.pair_of(a), idx.pair_of(b));
        a != b && (p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1)
    };

    let mut checks = Vec::new();
    let sixth = ratio(1, 6);

    let r_x1 = r(&[(1, 1)])?;
    checks.push(compare("R(x_1)", &r_x1, &power_sum(1, &sixth)));
    for e in 2..=4 {
        checks.push(compare(&format!("R(x_1^{e})"), &r(&[(1, e)])?, &power_sum(e, &sixth)));
    }
    let r_x1_5 = r(&[(1, 5)])?;
    checks.push(structure("R(x_1^5)", &r_x1_5, 6, &sixth, |mono| {
        mono.degree() == 5 && mono.exponents().iter().filter(|&&e| e > 0).count() == 1
    }));

    let r_x1x6 = r(&[(1, 1), (6, 1)])?;
    let expected = SymPoly::from_terms(M, [[1, 6], [2, 5], [3, 4]].iter().map(|v| (ratio(1, 3), sq(v))));
    checks.push(compare("R(x_1 x_6)", &r_x1x6, &expected));

    let r_x1x2x3 = r(&[(1, 1), (2, 1), (3, 1)])?;
    let stars = [[1, 3, 2], [1, 5, 4], [2, 6, 4], [3, 6, 5]];
    let expected = SymPoly::from_terms(M, stars.iter().map(|v| (ratio(1, 4), sq(v))));
    checks.push(compare("R(x_1 x_2 x_3)", &r_x1x2x3, &expected));

    let r_x1x2 = r(&[(1, 1), (2, 1)])?;
    checks.push(structure("R(x_1 x_2)", &r_x1x2, 12, &ratio(1, 12), |mono| {
        let vars: Vec<usize> = (0..M).filter(|&s| mono.exponents()[s] == 1).collect();
        mono.is_squarefree() && vars.len() == 2 && adjacent(vars[0], vars[1])
    }));

    let r_x1sq_x2 = r(&[(1, 2), (2, 1)])?;
    let ordered_pairs: [(usize, usize); 24] = [
        (1, 2),
        (1, 3),
        (2, 1),
        (2, 3),
        (3, 1),
        (3, 2),
        (1, 4),
        (1, 5),
        (4, 1),
        (4, 5),
        (5, 1),
        (5, 4),
        (2, 4),
        (2, 6),
        (4, 2),
        (4, 6),
        (6, 2),
        (6, 4),
        (3, 5),
        (3, 6),
        (5, 3),
        (5, 6),
        (6, 3),
        (6, 5),
    ];
    let expected = SymPoly::from_terms(
        M,
        ordered_pairs
            .iter()
            .map(|&(a, b)| (ratio(1, 24), Monomial::from_powers(M, &[(a, 2), (b, 1)]))),
    );
    checks.push(compare("R(x_1^2 x_2)", &r_x1sq_x2, &expected));

    let r_x1cu_x2 = r(&[(1, 3), (2, 1)])?;
    checks.push(structure("R(x_1^3 x_2)", &r_x1cu_x2, 24, &ratio(1, 24), |mono| {
        let cube = mono.exponents().iter().position(|&e| e == 3);
        let lin = mono.exponents().iter().position(|&e| e == 1);
        match (cube, lin) {
            (Some(a), Some(b)) => mono.degree() == 4 && adjacent(a, b),
            _ => false,
        }
    }));

    for e in 2..=5 {
        let g = r(&[(1, e)])?.gamma();
        checks.push(compare(&format!("gamma(R(x_1^{e})) = R(x_1)"), &g, &r_x1));
    }
    checks.push(compare("gamma(R(x_1^2 x_2)) = R(x_1 x_2)", &r_x1sq_x2.gamma(), &r_x1x2));

    for (name, poly) in [
        ("R(x_1) invariant", &r_x1),
        ("R(x_1 x_6) invariant", &r_x1x6),
        ("R(x_1 x_2) invariant", &r_x1x2),
        ("R(x_1 x_2 x_3) invariant", &r_x1x2x3),
    ] {
        let fixed = group.iter().all(|g| &poly.act(g) == poly);
        checks.push(N4Check {
            name: name.to_string(),
            passed: fixed,
            detail: if fixed {
                "fixed by all 24 elements".into()
            } else {
                "moved by some element".into()
            },
        });
    }

    Ok(N4Report { checks })
}
