//! Cross-verification suites: every identity between the counting routes,
//! checked exactly for one `n`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::detmat::{char_like_det, det_ratio_literal};
use crate::error::{Error, Result};
use crate::genfunc::{
    fixed_subset_count, multigraph_series, pair_classes, simple_genfunc_det, simple_genfunc_elementwise,
    simple_genfunc_harary, trace_genfunc_of_element, GraphCountVector, ELEMENT_LIMIT,
};
use crate::invariants::{
    component_dimension, gamma_reduce, orbit_representatives, pair_group_elements, permute_bits,
    reproduce_n4_generators, reynolds, Monomial, ORBIT_LIMIT,
};
use crate::oracle::{
    brute_multigraph_counts, brute_simple_counts, burnside_subset_count, MULTI_CUTOFF_LIMIT, MULTI_LIMIT,
};
use crate::perm::{factorial, num_edge_slots, pair_cycle_type_closed_form};
use crate::poly::cyclotomic_like_product;

/// Largest `n` any suite accepts (brute force and literal determinants).
pub const VERIFY_LIMIT: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// det = harary = element-wise = brute force, and the Molien series
    Formulas,
    /// per-element trace and determinant identities
    Lemmas,
    /// invariant-algebra dimensions, orbits and the Reynolds operator
    Invariants,
    All,
}

impl Suite {
    fn expand(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Formulas, Suite::Lemmas, Suite::Invariants],
            Suite::Formulas => &[Suite::Formulas],
            Suite::Lemmas => &[Suite::Lemmas],
            Suite::Invariants => &[Suite::Invariants],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} [{}] {}", self.suite, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

struct Report {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            status: Status::Skip,
            detail: why.into(),
        });
    }

    fn compare<T: PartialEq + fmt::Debug>(&mut self, name: &str, left: &T, right: &T) {
        let ok = left == right;
        let detail = if ok {
            String::new()
        } else {
            format!("{left:?} != {right:?}")
        };
        self.push(name, ok, detail);
    }
}

/// Runs the selected suites for `n`. Refuses (`Error::Guard`) any `n` beyond
/// [`VERIFY_LIMIT`] rather than silently skipping the expensive checks.
pub fn run_suites(suites: &[Suite], n: usize) -> Result<Vec<Check>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut expanded: Vec<Suite> = Vec::new();
    for s in suites.iter().flat_map(|s| s.expand()) {
        if !expanded.contains(s) {
            expanded.push(*s);
        }
    }
    if n > VERIFY_LIMIT {
        return Err(Error::Guard {
            path: "verify",
            n,
            limit: VERIFY_LIMIT,
            hint: if expanded.contains(&Suite::Lemmas) {
                "literal determinants need m = n(n-1)/2 <= 15 and brute force is exhaustive; no suite was run"
            } else {
                "the brute-force oracles are exhaustive over labeled graphs; no suite was run"
            },
        });
    }
    let g = simple_genfunc_det(n)?;
    let mut out = Vec::new();
    for suite in expanded {
        let checks = match suite {
            Suite::Formulas => formulas(n, &g)?,
            Suite::Lemmas => lemmas(n, &g)?,
            Suite::Invariants => invariants(n, &g)?,
            Suite::All => unreachable!(),
        };
        out.extend(checks);
    }
    Ok(out)
}

fn formulas(n: usize, g: &GraphCountVector) -> Result<Vec<Check>> {
    let mut r = Report {
        suite: "formulas",
        checks: Vec::new(),
    };
    r.compare("det = harary", g, &simple_genfunc_harary(n)?);
    r.compare("det = element-wise", g, &simple_genfunc_elementwise(n, ELEMENT_LIMIT)?);
    r.compare("det = brute force", g, &brute_simple_counts(n)?);
    match g.check_invariants() {
        Ok(()) => r.push("a[0] = a[m] = 1, complement symmetry", true, ""),
        Err(e) => r.push("a[0] = a[m] = 1, complement symmetry", false, e.to_string()),
    }
    let burnside_total: BigInt = pair_classes(n)?
        .iter()
        .map(|c| &c.class_size * BigInt::from(2).pow(c.pair_type.num_cycles() as u32))
        .sum::<BigInt>()
        / factorial(n);
    r.compare("g_n(1) = (1/n!) Σ 2^cycles", &g.total(), &burnside_total);

    let m = num_edge_slots(n);
    if n <= MULTI_LIMIT {
        let cutoff = m.clamp(2, MULTI_CUTOFF_LIMIT);
        let molien = multigraph_series(n, cutoff)?;
        r.compare(
            &format!("Molien series = brute-force multigraphs up to z^{cutoff}"),
            &molien.counts().to_vec(),
            &brute_multigraph_counts(n, cutoff)?.counts().to_vec(),
        );
        let dominates = (0..=m.min(cutoff)).all(|k| molien.counts()[k] >= g.counts()[k]);
        r.push("multigraph counts >= simple counts", dominates, "");
    } else {
        r.skip(
            "Molien series = brute-force multigraphs",
            format!("brute force limited to n <= {MULTI_LIMIT}"),
        );
    }
    Ok(r.checks)
}

fn lemmas(n: usize, g: &GraphCountVector) -> Result<Vec<Check>> {
    let mut r = Report {
        suite: "lemmas",
        checks: Vec::new(),
    };
    let m = num_edge_slots(n);
    let group = pair_group_elements(n, VERIFY_LIMIT)?;

    // trace of the action on i-subsets, counted literally
    let mut literal_ok = true;
    let mut binomial_ok = true;
    let mut det_ok = true;
    let mut ratio_ok = true;
    let mut averaged = vec![BigInt::zero(); m + 1];
    let mut first_bad = String::new();
    for alpha in &group {
        let ct = alpha.cycle_type();
        let trace = trace_genfunc_of_element(&ct);
        let mut fixed = vec![0u64; m + 1];
        for bits in 0..1u64 << m {
            if permute_bits(bits, alpha.images()) == bits {
                fixed[bits.count_ones() as usize] += 1;
            }
        }
        for i in 0..=m {
            let by_binomials = fixed_subset_count(&ct, i);
            if BigInt::from(fixed[i]) != trace.coeff(i) {
                literal_ok = false;
            }
            if by_binomials != trace.coeff(i) {
                binomial_ok = false;
            }
            averaged[i] += by_binomials;
        }
        if char_like_det(alpha, 1)? != cyclotomic_like_product(&ct) {
            det_ok = false;
            first_bad = format!("{alpha:?}");
        }
        match det_ratio_literal(alpha) {
            Ok(q) if q == trace => {}
            Ok(_) | Err(Error::Consistency(_)) => {
                ratio_ok = false;
                first_bad = format!("{alpha:?}");
            }
            Err(e) => return Err(e),
        }
    }
    let k = group.len();
    r.push(
        format!("fixed i-subsets = z^i coefficient of Π(1+z^k)^j_k ({k} elements)"),
        literal_ok,
        "",
    );
    r.push(
        format!("binomial fixed-point sum = z^i coefficient ({k} elements)"),
        binomial_ok,
        "",
    );
    r.push(
        format!("det(1 - Az) = Π(1-z^k)^j_k ({k} elements)"),
        det_ok,
        first_bad.clone(),
    );
    r.push(
        format!("det(1 - Az^2)/det(1 - Az) = Π(1+z^k)^j_k, zero remainder ({k} elements)"),
        ratio_ok,
        first_bad,
    );
    let order = factorial(n);
    let averaged: Vec<BigInt> = averaged.into_iter().map(|x| x / &order).collect();
    r.compare("averaged fixed-subset counts = a[n,i]", &averaged, &g.counts().to_vec());

    let closed_form_ok = pair_classes(n)?
        .iter()
        .all(|c| pair_cycle_type_closed_form(&c.vertex_type) == c.pair_type);
    r.push("gcd/lcm pair cycle types = traced pair cycle types", closed_form_ok, "");
    Ok(r.checks)
}

fn invariants(n: usize, g: &GraphCountVector) -> Result<Vec<Check>> {
    let mut r = Report {
        suite: "invariants",
        checks: Vec::new(),
    };
    let m = num_edge_slots(n);
    let dims = (0..=m).map(|i| component_dimension(n, i)).collect::<Result<Vec<_>>>()?;
    r.compare("dim of degree-i invariants = a[n,i]", &dims, &g.counts().to_vec());
    r.compare("Σ_i dim = g_n(1)", &dims.iter().sum::<BigInt>(), &g.total());
    let burnside = (0..=m)
        .map(|i| burnside_subset_count(n, i))
        .collect::<Result<Vec<_>>>()?;
    r.compare("Burnside subset orbits = a[n,i]", &burnside, &g.counts().to_vec());
    let reps = (0..=m)
        .map(|i| orbit_representatives(n, i, ORBIT_LIMIT).map(|v| BigInt::from(v.len())))
        .collect::<Result<Vec<_>>>()?;
    r.compare(
        "orbit representatives per edge count = a[n,i]",
        &reps,
        &g.counts().to_vec(),
    );

    let group = pair_group_elements(n, VERIFY_LIMIT)?;
    let mut fixed_ok = true;
    let mut projector_ok = true;
    let mut monomials = vec![Monomial::one(m)];
    for a in 1..=m {
        monomials.push(Monomial::product_of(m, &[a]));
        for b in a + 1..=m {
            monomials.push(Monomial::product_of(m, &[a, b]));
        }
    }
    for mono in &monomials {
        let rm = reynolds(mono, n)?;
        if !group.iter().all(|g| rm.act(g) == rm) {
            fixed_ok = false;
        }
        let mut again = crate::invariants::SymPoly::zero(m);
        for (term, c) in rm.terms() {
            for (t2, c2) in reynolds(term, n)?.terms() {
                again.add_term(t2.clone(), &(c * c2));
            }
        }
        if again != rm {
            projector_ok = false;
        }
        if rm.terms().map(|(_, c)| c.clone()).sum::<BigRational>() != BigRational::one() {
            projector_ok = false;
        }
    }
    r.push(
        format!("R(x) is group-fixed ({} monomials of degree <= 2)", monomials.len()),
        fixed_ok,
        "",
    );
    r.push("R(R(x)) = R(x)", projector_ok, "");

    let mut commute_ok = true;
    for seed in 0..(3 * m as u32).max(1) {
        let exps: Vec<u32> = (0..m as u32).map(|s| (s * 7 + seed * 3 + s * seed) % 4).collect();
        let mono = Monomial::new(exps);
        for g in &group {
            if gamma_reduce(&mono.act(g)) != gamma_reduce(&mono).act(g) {
                commute_ok = false;
            }
        }
    }
    r.push("gamma commutes with the group action", commute_ok, "");

    let report = reproduce_n4_generators()?;
    let failed: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.clone())
        .collect();
    r.push(
        format!("n = 4 generators ({} checks)", report.checks.len()),
        failed.is_empty(),
        failed.join(", "),
    );
    Ok(r.checks)
}
