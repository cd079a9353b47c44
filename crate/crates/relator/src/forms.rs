//! Integral symmetric bilinear forms: exact signature, parity, definiteness,
//! unimodularity, the classification of indefinite unimodular forms by rank,
//! signature and parity, and the boundary-recognition dichotomy applied at
//! the form level.
//!
//! All arithmetic is exact: determinants by fraction-free elimination over
//! the integers, signatures by congruence diagonalization over the
//! rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::homology::IntegerMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular (|det| != 1)")]
    NotUnimodular,
    #[error("even indefinite invariants are inconsistent: signature {signature}, rank {rank}")]
    Inconsistent { signature: i64, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Where a unimodular symmetric form falls in the classification. Indefinite
/// unimodular forms are determined by rank, signature and parity; definite
/// ones are only reported by sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormClass {
    ZeroRank,
    NotUnimodular,
    Definite(Sign),
    /// Diagonalizable as `p` entries +1 and `q` entries -1.
    OddIndefinite { positives: usize, negatives: usize },
    /// `sign * (r copies of the rank-8 even form) + s hyperbolic planes`;
    /// rank `8 r + 2 s`, signature `sign * 8 r`.
    EvenIndefinite { sign: Sign, e8_count: usize, hyperbolic_count: usize },
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormClass::ZeroRank => write!(f, "zero rank"),
            FormClass::NotUnimodular => write!(f, "not unimodular"),
            FormClass::Definite(s) => write!(f, "definite({s})"),
            FormClass::OddIndefinite { positives, negatives } => {
                write!(f, "odd indefinite <{positives}>(+1) + <{negatives}>(-1)")
            }
            FormClass::EvenIndefinite { sign, e8_count, hyperbolic_count } => {
                write!(f, "even indefinite {sign}{e8_count} E8 + {hyperbolic_count} H")
            }
        }
    }
}

/// Form-level answer to "which closed simply connected 4-manifold could this
/// intersection form bound for": a zero signature is necessary, and then the
/// parity splits the two realizable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryVerdict {
    /// The form of the connected sum of k copies of S2 x S2.
    SphereBundleSum(usize),
    /// The form of the connected sum of k copies of CP2 # -CP2.
    CPSum(usize),
    /// Nonzero signature: cannot bound.
    CannotBound,
    /// Rank zero carries no recognition content here.
    OutOfScope,
}

impl fmt::Display for BoundaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryVerdict::SphereBundleSum(k) => write!(f, "#_{k}(S2 x S2)"),
            BoundaryVerdict::CPSum(k) => write!(f, "#_{k}(CP2 # -CP2)"),
            BoundaryVerdict::CannotBound => write!(f, "cannot bound (nonzero signature)"),
            BoundaryVerdict::OutOfScope => write!(f, "rank zero, out of scope"),
        }
    }
}

/// A symmetric integer matrix representing a bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl FormMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, FormsError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(FormsError::NotSquare);
        }
        let entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        let m = FormMatrix { n, entries };
        for i in 0..n {
            for j in (i + 1)..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(FormsError::NotSymmetric);
                }
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, FormsError> {
        FormMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn zero_rank() -> Self {
        FormMatrix { n: 0, entries: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn as_integer_matrix(&self) -> IntegerMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        IntegerMatrix::from_rows(rows)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut denom = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &denom;
                }
            }
            denom = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().magnitude().is_one()
    }

    /// Even when every diagonal entry is even; over the integers this is
    /// equivalent to the quadratic form being even everywhere, since
    /// `Q(x) = sum_i M_ii x_i^2 (mod 2)`.
    pub fn parity(&self) -> Parity {
        let even = (0..self.n).all(|i| (self.get(i, i) % 2u32).is_zero());
        if even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Signs of the pivots of an exact congruence diagonalization over the
    /// rationals. Zero diagonal blocks are handled as hyperbolic 2x2 blocks
    /// contributing one pivot of each sign.
    fn pivot_signs(&self) -> Result<Vec<i8>, FormsError> {
        let n = self.n;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut signs: Vec<i8> = Vec::with_capacity(n);

        let swap_sym = |m: &mut Vec<Vec<BigRational>>, a: usize, b: usize| {
            if a == b {
                return;
            }
            m.swap(a, b);
            for row in m.iter_mut() {
                row.swap(a, b);
            }
        };

        let mut k = 0;
        while k < n {
            if m[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                    swap_sym(&mut m, k, j);
                }
            }
            if !m[k][k].is_zero() {
                let pivot = m[k][k].clone();
                signs.push(if pivot.is_positive() { 1 } else { -1 });
                for i in k + 1..n {
                    if m[i][k].is_zero() {
                        continue;
                    }
                    let f = &m[i][k] / &pivot;
                    for j in 0..n {
                        let sub = &f * &m[k][j];
                        m[i][j] = &m[i][j] - &sub;
                    }
                    for r in 0..n {
                        let sub = &f * &m[r][k];
                        m[r][i] = &m[r][i] - &sub;
                    }
                }
                k += 1;
                continue;
            }
            // the whole remaining diagonal is zero: find an off-diagonal
            // entry; its 2x2 block is hyperbolic and contributes +1 and -1
            let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
                return Err(FormsError::Singular);
            };
            swap_sym(&mut m, k + 1, j);
            let t = m[k][k + 1].clone();
            for i in k + 2..n {
                let a = &m[i][k + 1] / &t;
                let b = &m[i][k] / &t;
                for jj in 0..n {
                    let sub = &a * &m[k][jj] + &b * &m[k + 1][jj];
                    m[i][jj] = &m[i][jj] - &sub;
                }
                for r in 0..n {
                    let sub = &a * &m[r][k] + &b * &m[r][k + 1];
                    m[r][i] = &m[r][i] - &sub;
                }
            }
            signs.push(1);
            signs.push(-1);
            k += 2;
        }
        Ok(signs)
    }

    /// Positive minus negative eigenvalue counts, exactly. Requires a
    /// nonsingular matrix.
    pub fn signature(&self) -> Result<i64, FormsError> {
        let signs = self.pivot_signs()?;
        Ok(signs.iter().map(|&s| s as i64).sum())
    }

    /// Requires a nonsingular matrix; the empty form counts as positive.
    pub fn definiteness(&self) -> Result<Definiteness, FormsError> {
        let signs = self.pivot_signs()?;
        if signs.iter().all(|&s| s > 0) {
            Ok(Definiteness::Positive)
        } else if signs.iter().all(|&s| s < 0) {
            Ok(Definiteness::Negative)
        } else {
            Ok(Definiteness::Indefinite)
        }
    }

    /// Block-diagonal sum. Rank and signature add; parity is even exactly
    /// when both summands are even.
    pub fn direct_sum(&self, other: &FormMatrix) -> FormMatrix {
        let n = self.n + other.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                entries[(self.n + i) * n + (self.n + j)] = other.get(i, j).clone();
            }
        }
        FormMatrix { n, entries }
    }

    /// Classification by the invariants (rank, signature, parity). Definite
    /// forms are reported by sign only; indefinite unimodular forms land in
    /// the odd diagonal family or the even `E8/H` family.
    pub fn classify(&self) -> Result<FormClass, FormsError> {
        if self.n == 0 {
            return Ok(FormClass::ZeroRank);
        }
        if !self.is_unimodular() {
            return Ok(FormClass::NotUnimodular);
        }
        match self.definiteness()? {
            Definiteness::Positive => return Ok(FormClass::Definite(Sign::Plus)),
            Definiteness::Negative => return Ok(FormClass::Definite(Sign::Minus)),
            Definiteness::Indefinite => {}
        }
        let rank = self.n;
        let signature = self.signature()?;
        match self.parity() {
            Parity::Odd => {
                // rank and signature always share parity
                let positives = ((rank as i64 + signature) / 2) as usize;
                let negatives = ((rank as i64 - signature) / 2) as usize;
                Ok(FormClass::OddIndefinite { positives, negatives })
            }
            Parity::Even => {
                if signature.rem_euclid(8) != 0 {
                    return Err(FormsError::Inconsistent { signature, rank });
                }
                let e8_count = (signature.unsigned_abs() / 8) as usize;
                let remaining = rank as i64 - 8 * e8_count as i64;
                if remaining <= 0 || remaining % 2 != 0 {
                    return Err(FormsError::Inconsistent { signature, rank });
                }
                let sign = if signature < 0 { Sign::Minus } else { Sign::Plus };
                Ok(FormClass::EvenIndefinite {
                    sign,
                    e8_count,
                    hyperbolic_count: (remaining / 2) as usize,
                })
            }
        }
    }

    /// The recognition dichotomy for unimodular forms: nonzero signature
    /// cannot bound; at signature zero the even forms are the sphere-bundle
    /// sums and the odd ones the complex-projective sums.
    pub fn recognize_boundary(&self) -> Result<BoundaryVerdict, FormsError> {
        if !self.is_unimodular() {
            return Err(FormsError::NotUnimodular);
        }
        if self.n == 0 {
            return Ok(BoundaryVerdict::OutOfScope);
        }
        if self.signature()? != 0 {
            return Ok(BoundaryVerdict::CannotBound);
        }
        // zero signature forces even rank
        let k = self.n / 2;
        Ok(match self.parity() {
            Parity::Even => BoundaryVerdict::SphereBundleSum(k),
            Parity::Odd => BoundaryVerdict::CPSum(k),
        })
    }
}

/// The rank-8 positive definite even unimodular form, written in the usual
/// graph convention: 2 on the diagonal, -1 between adjacent nodes of the
/// chain 0..=6 with node 7 attached to node 4.
pub fn e8() -> FormMatrix {
    let adjacent: [(usize, usize); 7] =
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    let mut rows = vec![vec![BigInt::zero(); 8]; 8];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = BigInt::from(2);
    }
    for (i, j) in adjacent {
        rows[i][j] = BigInt::from(-1);
        rows[j][i] = BigInt::from(-1);
    }
    FormMatrix::new(rows).unwrap()
}

/// The hyperbolic plane `[[0, 1], [1, 0]]`.
pub fn hyperbolic() -> FormMatrix {
    FormMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap()
}

/// `x^T M x` for an integer vector, used by exhaustive parity checks.
pub fn evaluate(m: &FormMatrix, x: &[BigInt]) -> BigInt {
    assert_eq!(x.len(), m.rank());
    let mut acc = BigInt::zero();
    for i in 0..m.rank() {
        for j in 0..m.rank() {
            acc += m.get(i, j) * &x[i] * &x[j];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diag(values: &[i64]) -> FormMatrix {
        let n = values.len();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (i, &v) in values.iter().enumerate() {
            rows[i][i] = BigInt::from(v);
        }
        FormMatrix::new(rows).unwrap()
    }

    /// Cofactor-expansion determinant, independent of the Bareiss path.
    fn det_oracle(m: &FormMatrix) -> BigInt {
        fn go(m: &FormMatrix, cols: &mut Vec<usize>, row: usize) -> BigInt {
            if cols.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for idx in 0..cols.len() {
                let j = cols[idx];
                let a = m.get(row, j).clone();
                if a.is_zero() {
                    continue;
                }
                cols.remove(idx);
                let minor = go(m, cols, row + 1);
                cols.insert(idx, j);
                acc += if idx % 2 == 0 { a * minor } else { -a * minor };
            }
            acc
        }
        let mut cols: Vec<usize> = (0..m.rank()).collect();
        go(m, &mut cols, 0)
    }

    #[test]
    fn symmetry_is_enforced() {
        assert_eq!(
            FormMatrix::from_i64_rows(&[&[0, 1], &[2, 0]]),
            Err(FormsError::NotSymmetric)
        );
        assert_eq!(
            FormMatrix::new(vec![vec![BigInt::zero()], vec![BigInt::one()]]),
            Err(FormsError::NotSquare)
        );
    }

    #[test]
    fn e8_determinant_is_one() {
        let m = e8();
        assert_eq!(m.determinant(), BigInt::one());
        assert_eq!(det_oracle(&m), BigInt::one());
        assert!(m.is_unimodular());
    }

    #[test]
    fn e8_is_even_positive_definite_of_signature_eight() {
        let m = e8();
        assert_eq!(m.rank(), 8);
        assert_eq!(m.parity(), Parity::Even);
        assert_eq!(m.definiteness().unwrap(), Definiteness::Positive);
        assert_eq!(m.signature().unwrap(), 8);
        assert_eq!(m.classify().unwrap(), FormClass::Definite(Sign::Plus));
    }

    #[test]
    fn hyperbolic_plane_invariants() {
        let h = hyperbolic();
        assert_eq!(h.determinant(), BigInt::from(-1));
        assert_eq!(h.parity(), Parity::Even);
        assert_eq!(h.signature().unwrap(), 0);
        assert_eq!(h.definiteness().unwrap(), Definiteness::Indefinite);
    }

    #[test]
    fn signature_of_simple_diagonals() {
        assert_eq!(diag(&[1, -1]).signature().unwrap(), 0);
        assert_eq!(diag(&[1, 1, -1]).signature().unwrap(), 1);
        assert_eq!(diag(&[2]).signature().unwrap(), 1);
        assert_eq!(diag(&[0]).signature(), Err(FormsError::Singular));
    }

    #[test]
    fn diag_one_minus_one_is_odd_unimodular_indefinite() {
        let m = diag(&[1, -1]);
        assert!(m.is_unimodular());
        assert_eq!(m.parity(), Parity::Odd);
        assert_eq!(m.definiteness().unwrap(), Definiteness::Indefinite);
        assert_eq!(
            m.classify().unwrap(),
            FormClass::OddIndefinite { positives: 1, negatives: 1 }
        );
    }

    #[test]
    fn diag_two_is_not_unimodular() {
        let m = diag(&[2]);
        assert!(!m.is_unimodular());
        assert_eq!(m.classify().unwrap(), FormClass::NotUnimodular);
    }

    #[test]
    fn direct_sum_adds_rank_and_signature() {
        let h = hyperbolic();
        let hh = h.direct_sum(&h);
        assert_eq!(hh.rank(), 4);
        assert_eq!(hh.signature().unwrap(), 0);
        assert_eq!(hh.parity(), Parity::Even);
        let e8h = e8().direct_sum(&h);
        assert_eq!(e8h.rank(), 10);
        assert_eq!(e8h.signature().unwrap(), 8);
        // identity for the empty form
        assert_eq!(e8().direct_sum(&FormMatrix::zero_rank()), e8());
    }

    #[test]
    fn nine_hyperbolic_planes_classify_and_recognize() {
        let mut m = FormMatrix::zero_rank();
        for _ in 0..9 {
            m = m.direct_sum(&hyperbolic());
        }
        assert_eq!(
            m.classify().unwrap(),
            FormClass::EvenIndefinite {
                sign: Sign::Plus,
                e8_count: 0,
                hyperbolic_count: 9
            }
        );
        assert_eq!(
            m.recognize_boundary().unwrap(),
            BoundaryVerdict::SphereBundleSum(9)
        );
    }

    #[test]
    fn recognition_dichotomy() {
        assert_eq!(
            diag(&[1, -1]).recognize_boundary().unwrap(),
            BoundaryVerdict::CPSum(1)
        );
        assert_eq!(
            e8().direct_sum(&hyperbolic()).recognize_boundary().unwrap(),
            BoundaryVerdict::CannotBound
        );
        assert_eq!(
            FormMatrix::zero_rank().recognize_boundary().unwrap(),
            BoundaryVerdict::OutOfScope
        );
        assert_eq!(
            diag(&[2]).recognize_boundary(),
            Err(FormsError::NotUnimodular)
        );
    }

    #[test]
    fn negative_e8_plus_hyperbolic_classifies_with_minus_sign() {
        let neg_e8 = FormMatrix::new(
            (0..8)
                .map(|i| (0..8).map(|j| -e8().get(i, j)).collect())
                .collect(),
        )
        .unwrap();
        let m = neg_e8.direct_sum(&hyperbolic());
        assert_eq!(
            m.classify().unwrap(),
            FormClass::EvenIndefinite {
                sign: Sign::Minus,
                e8_count: 1,
                hyperbolic_count: 1
            }
        );
    }

    fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> FormMatrix {
        loop {
            let mut rows = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for j in i..n {
                    let v = BigInt::from(rng.gen_range(-bound..=bound));
                    rows[i][j] = v.clone();
                    rows[j][i] = v;
                }
            }
            let m = FormMatrix::new(rows).unwrap();
            if !m.determinant().is_zero() {
                return m;
            }
        }
    }

    fn random_unimodular_transform(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<BigInt>> {
        let mut t = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in t.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n);
            while j == i {
                j = rng.gen_range(0..n);
            }
            match rng.gen_range(0..3) {
                0 => {
                    let c = BigInt::from(rng.gen_range(-2i64..=2));
                    for col in 0..n {
                        let add = &c * &t[j][col];
                        t[i][col] += add;
                    }
                }
                1 => t.swap(i, j),
                _ => {
                    for col in 0..n {
                        t[i][col] = -t[i][col].clone();
                    }
                }
            }
        }
        t
    }

    fn congruent(m: &FormMatrix, t: &[Vec<BigInt>]) -> FormMatrix {
        let n = m.rank();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for p in 0..n {
                    for q in 0..n {
                        acc += &t[p][i] * m.get(p, q) * &t[q][j];
                    }
                }
                rows[i][j] = acc;
            }
        }
        FormMatrix::new(rows).unwrap()
    }

    #[test]
    fn signature_is_a_congruence_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=8);
            let m = random_symmetric(&mut rng, n, 6);
            let t = random_unimodular_transform(&mut rng, n);
            let moved = congruent(&m, &t);
            assert_eq!(m.signature().unwrap(), moved.signature().unwrap());
        }
    }

    #[test]
    fn signature_adds_over_direct_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let na = rng.gen_range(1..=4);
            let nb = rng.gen_range(1..=4);
            let a = random_symmetric(&mut rng, na, 5);
            let b = random_symmetric(&mut rng, nb, 5);
            assert_eq!(
                a.direct_sum(&b).signature().unwrap(),
                a.signature().unwrap() + b.signature().unwrap()
            );
        }
    }

    #[test]
    fn parity_matches_exhaustive_binary_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let n = rng.gen_range(1..=10);
            let m = random_symmetric(&mut rng, n, 4);
            let exhaustive_even = (0..1u32 << n).all(|mask| {
                let x: Vec<BigInt> = (0..n)
                    .map(|i| BigInt::from((mask >> i) & 1))
                    .collect();
                (evaluate(&m, &x) % 2u32).is_zero()
            });
            assert_eq!(m.parity() == Parity::Even, exhaustive_even);
        }
    }

    #[test]
    fn indefinite_classification_depends_only_on_invariants() {
        // two different-looking even forms with equal invariants agree
        let h = hyperbolic();
        let a = h.direct_sum(&h);
        let t = vec![
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(-1), BigInt::from(0), BigInt::from(0), BigInt::from(1)],
        ];
        let b = congruent(&a, &t);
        assert_ne!(a, b);
        assert_eq!(a.classify().unwrap(), b.classify().unwrap());
    }

    #[test]
    fn determinant_matches_cofactor_oracle_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let n = rng.gen_range(1..=6);
            let m = random_symmetric(&mut rng, n, 8);
            assert_eq!(m.determinant(), det_oracle(&m));
        }
    }
}
