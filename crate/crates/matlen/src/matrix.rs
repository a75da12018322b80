//! Dense square matrices over an exact field, together with the
//! polynomial machinery used to recover the identity from an invertible
//! element: characteristic polynomial, minimal polynomial, derogatory
//! and invertibility tests.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::MatrixError;
use crate::field::{Field, Scalar};
use crate::span::SpanBasis;

/// A dense n×n matrix with entries in a single field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    /// Build from row-major entries, validating the count and that every
    /// entry lives in `field`.
    pub fn new(n: usize, field: Field, entries: Vec<Scalar>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::DimensionTooSmall { min: 1, got: 0 });
        }
        if entries.len() != n * n {
            return Err(MatrixError::BadEntryCount {
                n,
                got: entries.len(),
            });
        }
        for (idx, e) in entries.iter().enumerate() {
            if e.field() != field {
                return Err(MatrixError::ForeignEntry {
                    row: idx / n,
                    col: idx % n,
                    expected: field.to_string(),
                    found: e.field().to_string(),
                });
            }
        }
        Ok(SquareMatrix { n, field, entries })
    }

    pub fn from_fn(n: usize, field: Field, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix::new(n, field, entries).expect("from_fn produced a foreign entry")
    }

    pub fn zero(n: usize, field: Field) -> Self {
        SquareMatrix::from_fn(n, field, |_, _| Scalar::zero(&field))
    }

    pub fn identity(n: usize, field: Field) -> Self {
        SquareMatrix::from_fn(n, field, |i, j| {
            if i == j {
                Scalar::one(&field)
            } else {
                Scalar::zero(&field)
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Entry at 0-based position (i, j).
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.entries[i * self.n + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn compatible(&self, rhs: &SquareMatrix) -> Result<(), MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::DimensionMismatch(self.n, rhs.n));
        }
        if self.field != rhs.field {
            return Err(MatrixError::FieldMismatch(
                self.field.to_string(),
                rhs.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        self.compatible(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SquareMatrix {
            n: self.n,
            field: self.field,
            entries,
        })
    }

    pub fn try_sub(&self, rhs: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        self.compatible(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SquareMatrix {
            n: self.n,
            field: self.field,
            entries,
        })
    }

    pub fn try_mul(&self, rhs: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        self.compatible(rhs)?;
        let n = self.n;
        let zero = Scalar::zero(&self.field);
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    entries[i * n + j] = &entries[i * n + j] + &(a * b);
                }
            }
        }
        Ok(SquareMatrix {
            n,
            field: self.field,
            entries,
        })
    }

    pub fn scale(&self, c: &Scalar) -> SquareMatrix {
        assert_eq!(c.field(), self.field, "scale by a foreign scalar");
        SquareMatrix {
            n: self.n,
            field: self.field,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.n, self.field, |i, j| self.at(j, i).clone())
    }

    pub fn pow(&self, k: usize) -> SquareMatrix {
        let mut result = SquareMatrix::identity(self.n, self.field);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    /// Row-major flattening into the n²-dimensional coordinate space.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_vector(n: usize, field: Field, v: Vec<Scalar>) -> Result<Self, MatrixError> {
        SquareMatrix::new(n, field, v)
    }

    /// Rank by exact elimination: rows are fed to the incremental
    /// echelon basis and the surviving row count is the rank.
    pub fn rank(&self) -> usize {
        let mut basis = SpanBasis::new(self.n);
        for i in 0..self.n {
            let row: Vec<Scalar> = (0..self.n).map(|j| self.at(i, j).clone()).collect();
            basis
                .insert(row, 0, crate::span::Word::empty())
                .expect("row length matches ambient dimension");
        }
        basis.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// The monic characteristic polynomial, by similarity reduction to
    /// Hessenberg form followed by the leading-minor recurrence. Works
    /// over any field with exact division.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.n;
        let h = self.hessenberg();
        let mut minors: Vec<Polynomial> = Vec::with_capacity(n + 1);
        minors.push(Polynomial::constant(Scalar::one(&self.field)));
        for k in 1..=n {
            let mut p = minors[k - 1].mul_linear(h.at(k - 1, k - 1));
            let mut subdiag = Scalar::one(&self.field);
            for r in (0..k - 1).rev() {
                subdiag = &subdiag * h.at(r + 1, r);
                if subdiag.is_zero() {
                    break;
                }
                let factor = h.at(r, k - 1) * &subdiag;
                p = p.sub_scaled(&minors[r], &factor);
            }
            minors.push(p);
        }
        minors.pop().unwrap()
    }

    /// Similarity reduction to upper Hessenberg form with exact pivoting.
    fn hessenberg(&self) -> SquareMatrix {
        let n = self.n;
        let mut m = self.clone();
        for j in 0..n.saturating_sub(2) {
            let pivot_row = match (j + 1..n).find(|&r| !m.at(r, j).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != j + 1 {
                m.swap_rows(j + 1, pivot_row);
                m.swap_cols(j + 1, pivot_row);
            }
            let pivot = m.at(j + 1, j).clone();
            for i in j + 2..n {
                if m.at(i, j).is_zero() {
                    continue;
                }
                let factor = m.at(i, j).checked_div(&pivot).expect("nonzero pivot");
                // row_i -= f * row_{j+1}; col_{j+1} += f * col_i keeps
                // the transform a similarity.
                for c in 0..n {
                    let delta = &factor * m.at(j + 1, c);
                    m.set(i, c, m.at(i, c) - &delta);
                }
                for r in 0..n {
                    let delta = &factor * m.at(r, i);
                    m.set(r, j + 1, m.at(r, j + 1) + &delta);
                }
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.n {
            self.entries.swap(a * self.n + c, b * self.n + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in 0..self.n {
            self.entries.swap(r * self.n + a, r * self.n + b);
        }
    }

    /// The monic minimal polynomial: vectorized powers I, A, A², … are
    /// inserted into an echelon basis until one becomes dependent, then
    /// the dependence is solved for its coefficients.
    pub fn min_poly(&self) -> Polynomial {
        let mut basis = SpanBasis::new(self.n * self.n);
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut current = SquareMatrix::identity(self.n, self.field);
        loop {
            let v = current.vectorize();
            let inserted = basis
                .insert(v.clone(), 0, crate::span::Word::empty())
                .expect("power vector matches ambient dimension");
            if !inserted {
                let coeffs = solve_combination(&powers, &v)
                    .expect("dependent power lies in the span of earlier powers");
                let mut poly_coeffs: Vec<Scalar> = coeffs.iter().map(Scalar::negated).collect();
                poly_coeffs.push(Scalar::one(&self.field));
                return Polynomial::new(self.field, poly_coeffs);
            }
            powers.push(v);
            current = &current * self;
        }
    }

    /// A matrix is derogatory when its minimal polynomial has degree
    /// strictly below its dimension.
    pub fn is_derogatory(&self) -> bool {
        self.min_poly().degree().unwrap_or(0) < self.n
    }

    /// Rewrite the identity as a combination of powers A, …, A^m of an
    /// invertible matrix A, where m is the minimal polynomial degree.
    ///
    /// If A is a combination of words of length `word_len`, every power
    /// A^k is a combination of words of length k·`word_len`, so the
    /// identity lies in the span of words of length at most the returned
    /// bound m·`word_len`.
    pub fn identity_length_bound(&self, word_len: usize) -> Result<IdentityBound, MatrixError> {
        assert!(word_len >= 1, "word length must be positive");
        if !self.is_invertible() {
            return Err(MatrixError::Singular);
        }
        let min = self.min_poly();
        let m = min
            .degree()
            .expect("minimal polynomial of an invertible matrix is nonzero");
        let constant = min.coeff(0);
        debug_assert!(!constant.is_zero());
        let neg_inv = constant.inverse().expect("nonzero constant term").negated();
        // A^m + a_{m-1} A^{m-1} + ... + a_1 A + a_0 I = 0, so
        // I = -(1/a_0) (A^m + a_{m-1} A^{m-1} + ... + a_1 A).
        let mut coefficients = Vec::with_capacity(m);
        for k in 1..m {
            coefficients.push(&min.coeff(k) * &neg_inv);
        }
        coefficients.push(neg_inv);

        let mut check = SquareMatrix::zero(self.n, self.field);
        let mut power = self.clone();
        for c in &coefficients {
            check = &check + &power.scale(c);
            power = &power * self;
        }
        assert_eq!(
            check,
            SquareMatrix::identity(self.n, self.field),
            "identity reconstruction from the minimal polynomial must be exact"
        );
        Ok(IdentityBound {
            bound: m * word_len,
            min_poly_degree: m,
            coefficients,
        })
    }
}

/// Certificate that the identity is a combination of powers of an
/// invertible element: `identity = Σ coefficients[k-1]·A^k` for
/// `k = 1..=min_poly_degree`, hence a combination of words of length at
/// most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityBound {
    pub bound: usize,
    pub min_poly_degree: usize,
    pub coefficients: Vec<Scalar>,
}

/// Solve `Σ x_k columns[k] = target` exactly, if the target lies in the
/// span of the columns.
pub(crate) fn solve_combination(columns: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = target.len();
    let m = columns.len();
    if m == 0 {
        return if target.iter().all(Scalar::is_zero) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let field = target[0].field();
    let zero = Scalar::zero(&field);
    // Augmented system [columns | target], eliminated in place.
    let mut aug: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; m];
    let mut next_row = 0;
    for col in 0..m {
        let Some(p) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, p);
        let inv = aug[next_row][col].inverse().expect("nonzero pivot");
        for c in col..=m {
            aug[next_row][c] = &aug[next_row][c] * &inv;
        }
        for r in 0..rows {
            if r != next_row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=m {
                    aug[r][c] = &aug[r][c] - &(&f * &aug[next_row][c]);
                }
            }
        }
        pivot_of_col[col] = next_row;
        next_row += 1;
    }
    // Inconsistent if any zero row has a nonzero augmented entry.
    for row in aug.iter().skip(next_row) {
        if !row[m].is_zero() {
            return None;
        }
    }
    let mut solution = vec![zero; m];
    for col in 0..m {
        if pivot_of_col[col] != usize::MAX {
            solution[col] = aug[pivot_of_col[col]][m].clone();
        }
    }
    Some(solution)
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_add(rhs)
            .unwrap_or_else(|e| panic!("matrix addition: {e}"))
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_sub(rhs)
            .unwrap_or_else(|e| panic!("matrix subtraction: {e}"))
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_mul(rhs)
            .unwrap_or_else(|e| panic!("matrix multiplication: {e}"))
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A polynomial with coefficients in one field, stored lowest degree
/// first with a nonzero leading coefficient (the zero polynomial has no
/// coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::new(c.field(), vec![c])
    }

    pub fn zero(field: Field) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    /// Multiply by the linear factor (x − c).
    pub fn mul_linear(&self, c: &Scalar) -> Polynomial {
        let mut out = vec![Scalar::zero(&self.field); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k + 1] = &out[k + 1] + a;
            out[k] = &out[k] - &(a * c);
        }
        Polynomial::new(self.field, out)
    }

    /// self − factor·other.
    pub fn sub_scaled(&self, other: &Polynomial, factor: &Scalar) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(&self.coeff(k) - &(&other.coeff(k) * factor));
        }
        Polynomial::new(self.field, out)
    }

    /// Evaluate at a matrix argument by Horner's rule; the constant term
    /// contributes a multiple of the identity.
    pub fn eval_matrix(&self, a: &SquareMatrix) -> SquareMatrix {
        let n = a.dim();
        let mut acc = SquareMatrix::zero(n, a.field());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &SquareMatrix::identity(n, a.field()).scale(c);
        }
        acc
    }

    /// Exact polynomial division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = divisor.degree().unwrap();
        let lead_inv = divisor.coeffs[d]
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(&self.field); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = &rem[rem.len() - 1] * &lead_inv;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&factor * dc);
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (
            Polynomial::new(self.field, quot),
            Polynomial::new(self.field, rem),
        )
    }

    /// True when `self` divides `other` with zero remainder.
    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).1.is_zero()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "({c})x")?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{elem, jordan};
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn mat(n: usize, rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_fn(n, Q, |i, j| Scalar::from_integer(rows[i][j], &Q))
    }

    fn diag(values: &[i64]) -> SquareMatrix {
        SquareMatrix::from_fn(values.len(), Q, |i, j| {
            if i == j {
                Scalar::from_integer(values[i], &Q)
            } else {
                Scalar::zero(&Q)
            }
        })
    }

    fn poly(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(
            Q,
            coeffs.iter().map(|&c| Scalar::from_integer(c, &Q)).collect(),
        )
    }

    #[test]
    fn matrix_unit_products() {
        let e12 = elem(2, 1, 2, Q).unwrap();
        let e21 = elem(2, 2, 1, Q).unwrap();
        let e11 = elem(2, 1, 1, Q).unwrap();
        assert_eq!(&e12 * &e21, e11);

        let j3 = jordan(3, Scalar::zero(&Q)).unwrap();
        assert_eq!(&j3 * &j3, elem(3, 1, 3, Q).unwrap());
    }

    #[test]
    fn transpose_and_identity() {
        let j2 = jordan(2, Scalar::zero(&Q)).unwrap();
        assert_eq!(j2.transpose(), elem(2, 2, 1, Q).unwrap());
        assert_eq!(
            &j2 + &j2.transpose(),
            &elem(2, 1, 2, Q).unwrap() + &elem(2, 2, 1, Q).unwrap()
        );
        let i3 = SquareMatrix::identity(3, Q);
        let a = mat(3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(&a * &i3, a);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn mismatches_are_typed_errors() {
        let a = SquareMatrix::identity(2, Q);
        let b = SquareMatrix::identity(3, Q);
        assert!(matches!(
            a.try_mul(&b),
            Err(MatrixError::DimensionMismatch(2, 3))
        ));
        let f5 = Field::prime(5).unwrap();
        let c = SquareMatrix::identity(2, f5);
        assert!(matches!(a.try_add(&c), Err(MatrixError::FieldMismatch(..))));
        let bad = SquareMatrix::new(2, Q, vec![Scalar::one(&f5); 4]);
        assert!(matches!(bad, Err(MatrixError::ForeignEntry { .. })));
    }

    #[test]
    fn char_poly_of_nilpotent_and_diagonal() {
        let j2 = jordan(2, Scalar::zero(&Q)).unwrap();
        assert_eq!(j2.char_poly(), poly(&[0, 0, 1])); // x^2
        assert_eq!(diag(&[1, 2]).char_poly(), poly(&[2, -3, 1])); // x^2 - 3x + 2
    }

    #[test]
    fn char_poly_of_cyclic_shift_sum() {
        // J3 + (J3^T)^2 permutes the coordinates cyclically, so its
        // characteristic polynomial is x^3 - 1.
        let j3 = jordan(3, Scalar::zero(&Q)).unwrap();
        let a = &j3 + &j3.transpose().pow(2);
        assert_eq!(a.char_poly(), poly(&[-1, 0, 0, 1]));
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(SquareMatrix::identity(3, Q).min_poly(), poly(&[-1, 1]));
        assert_eq!(diag(&[1, 1, 2]).min_poly(), poly(&[2, -3, 1]));
        let j3 = jordan(3, Scalar::zero(&Q)).unwrap();
        assert_eq!(j3.min_poly(), poly(&[0, 0, 0, 1])); // x^3
    }

    #[test]
    fn derogatory_test() {
        assert!(diag(&[1, 1, 2]).is_derogatory());
        assert!(!jordan(3, Scalar::zero(&Q)).unwrap().is_derogatory());
        assert!(!diag(&[1, 2, 3]).is_derogatory());
    }

    #[test]
    fn invertibility_matches_rank() {
        assert!(!jordan(2, Scalar::zero(&Q)).unwrap().is_invertible());
        assert!(diag(&[1, 2]).is_invertible());
        // J4^2 + (J4^T)^2 swaps coordinate pairs, hence invertible.
        let j4 = jordan(4, Scalar::zero(&Q)).unwrap();
        let a = &j4.pow(2) + &j4.transpose().pow(2);
        assert!(a.is_invertible());
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn identity_bound_for_diagonal() {
        let a = diag(&[1, 2]);
        let bound = a.identity_length_bound(1).unwrap();
        assert_eq!(bound.bound, 2);
        assert_eq!(bound.min_poly_degree, 2);
        // identity = (3/2) A - (1/2) A^2
        assert_eq!(bound.coefficients[0], Scalar::parse("3/2", &Q).unwrap());
        assert_eq!(bound.coefficients[1], Scalar::parse("-1/2", &Q).unwrap());
    }

    #[test]
    fn identity_bound_for_nonderogatory_invertible() {
        // Companion-style invertible 4x4 with minimal polynomial of
        // full degree.
        let a = mat(
            4,
            &[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 2], &[0, 0, 1, 0]],
        );
        assert!(a.is_invertible());
        assert!(!a.is_derogatory());
        assert_eq!(a.identity_length_bound(1).unwrap().bound, 4);
    }

    #[test]
    fn identity_bound_for_derogatory_invertible() {
        let a = diag(&[1, 1, 2]);
        let bound = a.identity_length_bound(2).unwrap();
        assert_eq!(bound.bound, 4);
        assert!(bound.bound <= 2 * 3 - 2);
    }

    #[test]
    fn identity_bound_rejects_singular() {
        let j2 = jordan(2, Scalar::zero(&Q)).unwrap();
        assert!(matches!(
            j2.identity_length_bound(1),
            Err(MatrixError::Singular)
        ));
    }

    #[test]
    fn polynomial_division() {
        let product = poly(&[2, -3, 1]); // (x-1)(x-2)
        let factor = poly(&[-1, 1]);
        let (q, r) = product.div_rem(&factor);
        assert_eq!(q, poly(&[-2, 1]));
        assert!(r.is_zero());
        assert!(factor.divides(&product));
        assert!(!poly(&[-3, 1]).divides(&product));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            SquareMatrix::from_fn(n, Q, |i, j| Scalar::from_integer(v[i * n + j], &Q))
        })
    }

    fn arb_gf_matrix(n: usize, p: u64) -> impl Strategy<Value = SquareMatrix> {
        let field = Field::prime(p).unwrap();
        prop::collection::vec(0..p, n * n).prop_map(move |v| {
            SquareMatrix::from_fn(n, field, |i, j| {
                Scalar::from_integer(v[i * n + j] as i64, &field)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn cayley_hamilton_over_q(a in arb_matrix(4)) {
            prop_assert!(a.char_poly().eval_matrix(&a).is_zero());
        }

        #[test]
        fn cayley_hamilton_over_gf5(a in arb_gf_matrix(4, 5)) {
            prop_assert!(a.char_poly().eval_matrix(&a).is_zero());
        }

        #[test]
        fn min_poly_divides_char_poly(a in arb_matrix(3)) {
            let min = a.min_poly();
            let ch = a.char_poly();
            prop_assert!(min.is_monic());
            prop_assert!(min.divides(&ch));
            prop_assert!(min.eval_matrix(&a).is_zero());
        }

        #[test]
        fn invertible_iff_char_constant_nonzero(a in arb_matrix(3)) {
            prop_assert_eq!(a.is_invertible(), !a.char_poly().coeff(0).is_zero());
        }

        #[test]
        fn min_poly_divides_char_poly_gf2(a in arb_gf_matrix(4, 2)) {
            prop_assert!(a.min_poly().divides(&a.char_poly()));
        }
    }
}
