//! Permutation matrices and determinants of polynomial matrices.
//!
//! Used only to check the factorization `det(1 - A z) = Π_k (1 - z^k)^{j_k}`
//! and the resulting ratio literally, matrix by matrix.

use crate::error::{Error, Result};
use crate::perm::PairPermutation;
use crate::poly::ExactPolynomial;

/// Largest matrix size accepted by [`char_like_det`] and [`det_ratio_literal`] (`n ≤ 6`).
pub const DETMAT_LIMIT: usize = 15;

/// Largest matrix size for which cofactor expansion is offered.
pub const COFACTOR_LIMIT: usize = 8;

/// 0/1 matrix `A` of a slot permutation `p`, with `A e_s = e_{p(s)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermMatrix {
    // column s has its single 1 in row images[s]
    images: Vec<usize>,
}

impl PermMatrix {
    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> bool {
        self.images[col] == row
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let m = self.size();
        (0..m)
            .map(|r| (0..m).map(|c| u8::from(self.entry(r, c))).collect())
            .collect()
    }

    /// Applies the matrix to a vector.
    pub fn apply<T: Clone + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); v.len()];
        for (s, x) in v.iter().enumerate() {
            out[self.images[s]] = x.clone();
        }
        out
    }
}

pub fn perm_to_matrix(p: &PairPermutation) -> PermMatrix {
    PermMatrix {
        images: p.images().to_vec(),
    }
}

/// Square matrix with integer-polynomial entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<ExactPolynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<ExactPolynomial>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidInput("polynomial matrix must be square".into()));
        }
        Ok(PolyMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// `1 - A · z^power`.
    pub fn identity_minus(a: &PermMatrix, power: usize) -> Self {
        let m = a.size();
        let zp = ExactPolynomial::monomial(1.into(), power);
        let mut entries = vec![ExactPolynomial::zero(); m * m];
        for r in 0..m {
            for c in 0..m {
                let mut e = if r == c {
                    ExactPolynomial::one()
                } else {
                    ExactPolynomial::zero()
                };
                if a.entry(r, c) {
                    e = &e - &zp;
                }
                entries[r * m + c] = e;
            }
        }
        PolyMatrix { size: m, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactPolynomial {
        &self.entries[r * self.size + c]
    }

    /// Fraction-free (Bareiss) elimination over `Z[z]`. Every division is exact.
    pub fn det_bareiss(&self) -> Result<ExactPolynomial> {
        let m = self.size;
        if m == 0 {
            return Ok(ExactPolynomial::one());
        }
        let mut a: Vec<Vec<ExactPolynomial>> = self.entries.chunks(m).map(<[_]>::to_vec).collect();
        let mut negate = false;
        let mut prev = ExactPolynomial::one();
        for k in 0..m - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(ExactPolynomial::zero());
                };
                a.swap(k, r);
                negate = !negate;
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        Ok(if negate { -&det } else { det })
    }

    /// Laplace expansion along the first row. Limited to `COFACTOR_LIMIT`.
    pub fn det_cofactor(&self) -> Result<ExactPolynomial> {
        if self.size > COFACTOR_LIMIT {
            return Err(Error::Guard {
                path: "cofactor expansion",
                n: self.size,
                limit: COFACTOR_LIMIT,
                hint: "use det_bareiss",
            });
        }
        let cols: Vec<usize> = (0..self.size).collect();
        Ok(self.laplace(0, &cols))
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> ExactPolynomial {
        if cols.is_empty() {
            return ExactPolynomial::one();
        }
        let mut acc = ExactPolynomial::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = e * &self.laplace(row + 1, &rest);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

fn check_size(p: &PairPermutation) -> Result<()> {
    if p.m() > DETMAT_LIMIT {
        return Err(Error::Guard {
            path: "literal determinant",
            n: p.n(),
            limit: 6,
            hint: "matrix size m = n(n-1)/2 must stay at most 15",
        });
    }
    Ok(())
}

/// `det(1_m - A_p · z^power)` by fraction-free elimination, `power ∈ {1, 2}`.
pub fn char_like_det(p: &PairPermutation, power: usize) -> Result<ExactPolynomial> {
    if !(1..=2).contains(&power) {
        return Err(Error::InvalidInput(format!("power must be 1 or 2, got {power}")));
    }
    check_size(p)?;
    PolyMatrix::identity_minus(&perm_to_matrix(p), power).det_bareiss()
}

/// `det(1 - A z²) / det(1 - A z)` by exact polynomial long division.
/// A nonzero remainder is a consistency failure.
pub fn det_ratio_literal(p: &PairPermutation) -> Result<ExactPolynomial> {
    let num = char_like_det(p, 2)?;
    let den = char_like_det(p, 1)?;
    num.div_exact(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{induce_pair_perm, EdgeIndexing, Permutation};

    fn pp(n: usize, cycles: &[&[usize]]) -> PairPermutation {
        induce_pair_perm(&Permutation::from_cycles(n, cycles).unwrap(), &EdgeIndexing::new(n)).unwrap()
    }

    fn p(cs: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_i64s(cs)
    }

    fn pow(base: &ExactPolynomial, e: usize) -> ExactPolynomial {
        (0..e).fold(ExactPolynomial::one(), |acc, _| &acc * base)
    }

    #[test]
    fn matrices() {
        let id = perm_to_matrix(&pp(4, &[]));
        assert_eq!(
            id.to_dense(),
            (0..6)
                .map(|r| (0..6).map(|c| u8::from(r == c)).collect())
                .collect::<Vec<Vec<u8>>>()
        );
        assert_eq!(perm_to_matrix(&pp(2, &[])).to_dense(), vec![vec![1]]);

        let t = perm_to_matrix(&pp(4, &[&[1, 2]]));
        let ones: Vec<(usize, usize)> = (0..6)
            .flat_map(|r| (0..6).map(move |c| (r, c)))
            .filter(|&(r, c)| t.entry(r, c))
            .collect();
        assert_eq!(ones, vec![(0, 0), (1, 3), (2, 4), (3, 1), (4, 2), (5, 5)]);
        assert_eq!(t.apply(&[0, 1, 2, 3, 4, 5]), vec![0, 3, 4, 1, 2, 5]);
    }

    #[test]
    fn determinants() {
        assert_eq!(char_like_det(&pp(3, &[]), 1).unwrap(), pow(&p(&[1, -1]), 3));
        let t = pp(4, &[&[1, 2]]);
        let expect1 = &pow(&p(&[1, -1]), 2) * &pow(&p(&[1, 0, -1]), 2);
        let expect2 = &pow(&p(&[1, 0, -1]), 2) * &pow(&p(&[1, 0, 0, 0, -1]), 2);
        assert_eq!(char_like_det(&t, 1).unwrap(), expect1);
        assert_eq!(char_like_det(&t, 2).unwrap(), expect2);
        assert!(char_like_det(&t, 3).is_err());
    }

    #[test]
    fn ratios() {
        assert_eq!(det_ratio_literal(&pp(4, &[])).unwrap(), pow(&p(&[1, 1]), 6));
        assert_eq!(
            det_ratio_literal(&pp(4, &[&[1, 2]])).unwrap(),
            p(&[1, 2, 3, 4, 3, 2, 1])
        );
        assert_eq!(det_ratio_literal(&pp(3, &[&[1, 2, 3]])).unwrap(), p(&[1, 0, 0, 1]));
        assert_eq!(det_ratio_literal(&pp(1, &[])).unwrap(), ExactPolynomial::one());
    }

    #[test]
    fn guard() {
        let big = pp(7, &[]);
        assert!(matches!(char_like_det(&big, 1), Err(Error::Guard { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let idx = EdgeIndexing::new(4);
        for sigma in crate::perm::enumerate_permutations(4).unwrap() {
            let a = perm_to_matrix(&induce_pair_perm(&sigma, &idx).unwrap());
            for power in 1..=2 {
                let m = PolyMatrix::identity_minus(&a, power);
                assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
            }
        }
        // a matrix needing a pivot swap: [[0, 1], [1, z]]
        let m = PolyMatrix::from_rows(vec![
            vec![ExactPolynomial::zero(), ExactPolynomial::one()],
            vec![ExactPolynomial::one(), p(&[0, 1])],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), p(&[-1]));
        assert_eq!(m.det_cofactor().unwrap(), p(&[-1]));
        let singular = PolyMatrix::from_rows(vec![vec![p(&[1, 1]), p(&[1, 1])], vec![p(&[2, 2]), p(&[2, 2])]]).unwrap();
        assert!(singular.det_bareiss().unwrap().is_zero());
        assert!(PolyMatrix::from_rows(vec![vec![p(&[1])], vec![]]).is_err());
    }
}
