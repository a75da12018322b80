//! Constructors for the matrix families whose lengths the verifier
//! reproduces, and the k-diagonal calculus they live in.
//!
//! Diagonal indexing: the k-diagonal of an n×n matrix collects the
//! entries at positions (i, i+k) for k between −(n−1) and n−1, so the
//! main diagonal is k = 0, the superdiagonal k = 1, and the bottom-left
//! corner k = −(n−1).

use std::collections::BTreeSet;

use crate::error::MatrixError;
use crate::field::{Field, Scalar};
use crate::matrix::SquareMatrix;
use crate::span::{SpanBasis, Word};

/// The k×k upper Jordan block with eigenvalue `lambda`: `lambda` on the
/// main diagonal, ones on the superdiagonal.
pub fn jordan(n: usize, lambda: Scalar) -> Result<SquareMatrix, MatrixError> {
    if n == 0 {
        return Err(MatrixError::DimensionTooSmall { min: 1, got: 0 });
    }
    let field = lambda.field();
    Ok(SquareMatrix::from_fn(n, field, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            Scalar::one(&field)
        } else {
            Scalar::zero(&field)
        }
    }))
}

/// The nilpotent shift J_n = J_n(0).
pub fn shift(n: usize, field: Field) -> Result<SquareMatrix, MatrixError> {
    jordan(n, Scalar::zero(&field))
}

/// The matrix unit with a single 1 at 1-based position (i, j).
pub fn elem(n: usize, i: usize, j: usize, field: Field) -> Result<SquareMatrix, MatrixError> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(MatrixError::IndexOutOfRange { n, i, j });
    }
    Ok(SquareMatrix::from_fn(n, field, |r, c| {
        if r == i - 1 && c == j - 1 {
            Scalar::one(&field)
        } else {
            Scalar::zero(&field)
        }
    }))
}

/// The two-element family (J_n, B_n) with B_n = E_{n−1,1} − E_{n,2},
/// defined for n ≥ 3.
///
/// For n ≥ 4 the second element squares to zero, which keeps words in
/// the pair confined to narrow diagonal bands. At n = 3 the two nonzero
/// entries are adjacent and instead B₃² = B₃J₃⁰B₃ = −E₃₁ (the general
/// identity B_nJ_n^{n−3}B_n = −E_{n,1} specialized to n = 3); the
/// lengths of the family are the same either way.
pub fn nilpotent_pair(n: usize, field: Field) -> Result<(SquareMatrix, SquareMatrix), MatrixError> {
    if n < 3 {
        return Err(MatrixError::DimensionTooSmall { min: 3, got: n });
    }
    let j = shift(n, field)?;
    let b = elem(n, n - 1, 1, field)?.try_sub(&elem(n, n, 2, field)?)?;
    let b_squared = &b * &b;
    if n == 3 {
        let minus_e31 = elem(3, 3, 1, field)?.scale(&Scalar::from_integer(-1, &field));
        assert_eq!(b_squared, minus_e31);
    } else {
        assert!(b_squared.is_zero(), "B_n squares to zero for n >= 4");
    }
    Ok((j, b))
}

/// The pair (J_n^i, (J_n^T)^{n−i}) for 1 ≤ i < n.
pub fn jordan_power_pair(
    n: usize,
    i: usize,
    field: Field,
) -> Result<(SquareMatrix, SquareMatrix), MatrixError> {
    if i == 0 || i >= n {
        return Err(MatrixError::IndexOutOfRange { n, i, j: i });
    }
    let j = shift(n, field)?;
    Ok((j.pow(i), j.transpose().pow(n - i)))
}

/// The set of diagonals on which a matrix has nonzero entries; empty
/// exactly for the zero matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSupport {
    pub n: usize,
    pub diagonals: BTreeSet<i64>,
}

pub fn k_diagonal_support(a: &SquareMatrix) -> DiagonalSupport {
    let n = a.dim();
    let mut diagonals = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if !a.at(i, j).is_zero() {
                diagonals.insert(j as i64 - i as i64);
            }
        }
    }
    DiagonalSupport { n, diagonals }
}

/// The dimension of the space of matrices supported on one diagonal:
/// n − |k|.
pub fn diagonal_dim(n: usize, k: i64) -> usize {
    n - k.unsigned_abs() as usize
}

/// A matrix supported on a single diagonal, entries taken from an
/// iterator-like closure over the diagonal positions.
pub fn on_diagonal(
    n: usize,
    k: i64,
    field: Field,
    mut entry: impl FnMut(usize) -> Scalar,
) -> SquareMatrix {
    let mut m = SquareMatrix::zero(n, field);
    for t in 0..diagonal_dim(n, k) {
        let (i, j) = if k >= 0 {
            (t, t + k as usize)
        } else {
            (t + (-k) as usize, t)
        };
        m.set(i, j, entry(t));
    }
    m
}

/// The index orbit behind generation by the pair (J_n^i, (J_n^T)^{n−i}):
/// starting from k0, add n−i while the index is at most i, otherwise
/// subtract i. Returns the orbit up to and including the first repeated
/// value. The orbit has period n and visits all of {1, …, n} exactly
/// when i and n−i are co-prime.
pub fn k_sequence(n: usize, i: usize, k0: usize) -> Result<Vec<usize>, MatrixError> {
    if i == 0 || i >= n {
        return Err(MatrixError::IndexOutOfRange { n, i, j: i });
    }
    if k0 == 0 || k0 > n {
        return Err(MatrixError::IndexOutOfRange { n, i: k0, j: k0 });
    }
    let mut orbit = vec![k0];
    let mut seen = vec![false; n + 1];
    seen[k0] = true;
    let mut k = k0;
    loop {
        k = if k <= i { k + (n - i) } else { k - i };
        orbit.push(k);
        if seen[k] {
            return Ok(orbit);
        }
        seen[k] = true;
    }
}

/// The two-diagonal space that words of length n−2 in the pair
/// (J_n^i, (J_n^T)^{n−i}) land in, defined for co-prime i and n−i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSpace {
    pub n: usize,
    pub i: usize,
    pub diagonals: Vec<i64>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl WSpace {
    pub fn new(n: usize, i: usize) -> Result<Self, MatrixError> {
        if i == 0 || i >= n {
            return Err(MatrixError::IndexOutOfRange { n, i, j: i });
        }
        if gcd(i, n - i) != 1 {
            return Err(MatrixError::NotCoprime { n, i });
        }
        let n_i = n as i64;
        let i_i = i as i64;
        let diagonals = if n == 2 && i == 1 {
            vec![0]
        } else if 2 * i < n {
            vec![n_i - 2 * i_i, -2 * i_i]
        } else {
            vec![n_i - 2 * i_i, 2 * n_i - 2 * i_i]
        };
        Ok(WSpace { n, i, diagonals })
    }

    /// Total dimension: the component diagonals always sum to n.
    pub fn dim(&self) -> usize {
        self.diagonals
            .iter()
            .map(|&k| diagonal_dim(self.n, k))
            .sum()
    }

    /// A matrix-unit basis of the space, as vectorized rows.
    pub fn basis(&self, field: Field) -> SpanBasis {
        let mut basis = SpanBasis::new(self.n * self.n);
        for &k in &self.diagonals {
            for t in 0..diagonal_dim(self.n, k) {
                let unit = on_diagonal(self.n, k, field, |s| {
                    if s == t {
                        Scalar::one(&field)
                    } else {
                        Scalar::zero(&field)
                    }
                });
                basis
                    .insert(unit.vectorize(), 0, Word::empty())
                    .expect("unit vector has ambient dimension");
            }
        }
        assert_eq!(basis.dim(), self.dim());
        basis
    }
}

/// Matrix-unit basis of the word-target space for the pair
/// (J_n^i, (J_n^T)^{n−i}); rejects non-co-prime (i, n−i).
pub fn w_space_basis(n: usize, i: usize, field: Field) -> Result<SpanBasis, MatrixError> {
    let space = WSpace::new(n, i)?;
    let basis = space.basis(field);
    assert_eq!(basis.dim(), n, "the word-target space has dimension n");
    Ok(basis)
}
