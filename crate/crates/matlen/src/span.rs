//! The layered span engine.
//!
//! For a generating set S of n×n matrices, the engine computes the
//! filtration of vector spaces spanned by products of elements of S of
//! length at most k, layer by layer, together with the point at which
//! it stabilizes (the length of S), a word witness for every basis
//! element, and a brute-force enumeration oracle that recomputes the
//! same dimensions without the incremental machinery.
//!
//! Two conventions are supported and kept strictly apart: with the
//! identity assumed present (it seeds layer 0 as the empty word), and
//! without (layer 0 is the zero space; the identity only ever enters as
//! an honest product of generators).

use std::fmt;

use crate::error::SpanError;
use crate::field::{Field, Scalar};
use crate::matrix::SquareMatrix;

/// Default budget for the brute-force oracle, in word evaluations.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// A word over a generating set: a sequence of 0-based generator
/// indices, evaluated as the left-to-right product of the indexed
/// generators. The empty word denotes the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(indices: Vec<usize>) -> Self {
        Word(indices)
    }

    pub fn single(index: usize) -> Self {
        Word(vec![index])
    }

    /// The word with `index` prefixed, i.e. the word for g·(this word).
    pub fn prepended(&self, index: usize) -> Self {
        let mut indices = Vec::with_capacity(self.0.len() + 1);
        indices.push(index);
        indices.extend_from_slice(&self.0);
        Word(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Evaluate against the generating set the indices refer to.
    pub fn evaluate(&self, gens: &[SquareMatrix]) -> SquareMatrix {
        assert!(!gens.is_empty(), "cannot evaluate a word over an empty set");
        let n = gens[0].dim();
        let mut acc = SquareMatrix::identity(n, gens[0].field());
        for &i in &self.0 {
            acc = &acc * &gens[i];
        }
        acc
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// One row of a reduced echelon basis: the reduced vector, its pivot
/// column, the layer at which it entered, and the word it came from.
#[derive(Debug, Clone)]
pub struct SpanRow {
    pub vector: Vec<Scalar>,
    pub pivot: usize,
    pub layer: usize,
    pub witness: Word,
}

/// An incrementally maintained reduced row echelon basis of vectorized
/// matrices. Every row has pivot entry 1, pivots are distinct, and each
/// row is fully reduced against every other pivot.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    ambient_dim: usize,
    rows: Vec<SpanRow>,
}

impl SpanBasis {
    pub fn new(ambient_dim: usize) -> Self {
        SpanBasis {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SpanRow] {
        &self.rows
    }

    /// Reduce a vector against the basis, returning the remainder.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Result<Vec<Scalar>, SpanError> {
        if v.len() != self.ambient_dim {
            return Err(SpanError::AmbientMismatch {
                ambient: self.ambient_dim,
                got: v.len(),
            });
        }
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (j, rv) in row.vector.iter().enumerate() {
                if !rv.is_zero() {
                    v[j] = &v[j] - &(&c * rv);
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, SpanError> {
        Ok(self.reduce(v.to_vec())?.iter().all(Scalar::is_zero))
    }

    /// Reduce and, if a nonzero remainder survives, normalize and adopt
    /// it as a new row tagged with `layer` and `witness`. Returns whether
    /// the basis grew.
    pub fn insert(
        &mut self,
        v: Vec<Scalar>,
        layer: usize,
        witness: Word,
    ) -> Result<bool, SpanError> {
        debug_assert!(
            self.rows.last().map_or(true, |r| layer >= r.layer),
            "layers are inserted in nondecreasing order"
        );
        let mut v = self.reduce(v)?;
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pivot].inverse().expect("pivot entry is nonzero");
        if !inv.is_one() {
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        // Clear the new pivot column in the older rows so the basis
        // stays fully reduced.
        for row in &mut self.rows {
            let c = row.vector[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (j, nv) in v.iter().enumerate() {
                if !nv.is_zero() {
                    row.vector[j] = &row.vector[j] - &(&c * nv);
                }
            }
        }
        self.rows.push(SpanRow {
            vector: v,
            pivot,
            layer,
            witness,
        });
        Ok(true)
    }
}

/// The result of running the span filtration to stabilization.
///
/// `dims` lists the layer dimensions d₀, …, d_length, strictly
/// increasing; the layer after the last listed one adds nothing, which
/// is what `length` records. For oracle-produced profiles truncated at a
/// requested maximum length, `dims` covers every requested layer and
/// `length` is `None` when stabilization was not yet visible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthProfile {
    pub include_identity: bool,
    pub dims: Vec<usize>,
    pub length: Option<usize>,
    pub generates: bool,
    pub final_dim: usize,
    pub witnesses: Vec<Word>,
    pub notes: Vec<String>,
}

fn validate_generators(gens: &[SquareMatrix]) -> Result<(usize, Field), SpanError> {
    let n = gens[0].dim();
    let field = gens[0].field();
    for (index, g) in gens.iter().enumerate() {
        if g.dim() != n || g.field() != field {
            return Err(SpanError::MixedGenerators {
                index,
                n,
                field: field.to_string(),
                got: g.dim(),
                got_field: g.field().to_string(),
            });
        }
    }
    Ok((n, field))
}

fn duplicate_notes(gens: &[SquareMatrix]) -> Vec<String> {
    let mut notes = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i] == gens[j] {
                notes.push(format!("generators {i} and {j} are identical"));
            }
        }
    }
    notes
}

/// Everything the incremental engine produces in one pass: the basis,
/// the per-layer dimensions through the first repeated one, and the
/// (witness, evaluation) pair behind every row.
struct LayeredSpan {
    basis: SpanBasis,
    dims_full: Vec<usize>,
    pairs: Vec<(Word, SquareMatrix)>,
}

/// Core engine: runs the filtration either to stabilization
/// (`max_layer = None`) or through a fixed number of layers.
fn layered_span(
    gens: &[SquareMatrix],
    include_identity: bool,
    max_layer: Option<usize>,
) -> Result<LayeredSpan, SpanError> {
    let (n, field) = validate_generators(gens)?;
    let ambient = n * n;
    let mut basis = SpanBasis::new(ambient);
    let mut pairs: Vec<(Word, SquareMatrix)> = Vec::new();
    let mut dims_full = Vec::new();

    if include_identity {
        let id = SquareMatrix::identity(n, field);
        if basis.insert(id.vectorize(), 0, Word::empty())? {
            pairs.push((Word::empty(), id));
        }
    }
    dims_full.push(basis.dim());
    if max_layer == Some(0) {
        return Ok(LayeredSpan {
            basis,
            dims_full,
            pairs,
        });
    }

    // Layer 1 seeds the generators themselves; with the identity
    // present this coincides with multiplying the layer-0 frontier.
    let mut frontier: Vec<(Word, SquareMatrix)> = Vec::new();
    for (index, g) in gens.iter().enumerate() {
        let word = Word::single(index);
        if basis.insert(g.vectorize(), 1, word.clone())? {
            frontier.push((word.clone(), g.clone()));
            pairs.push((word, g.clone()));
        }
    }
    dims_full.push(basis.dim());

    // Each further layer multiplies generators by the words that first
    // appeared one layer below; products with older rows are already in
    // the span.
    let mut layer = 1;
    while dims_full[layer] > dims_full[layer - 1] && max_layer.is_none_or(|cap| layer < cap) {
        layer += 1;
        assert!(
            layer <= ambient + 1,
            "span filtration failed to stabilize within {} layers",
            ambient + 1
        );
        let mut next_frontier = Vec::new();
        for (index, g) in gens.iter().enumerate() {
            for (word, eval) in &frontier {
                let candidate = g * eval;
                let candidate_word = word.prepended(index);
                if basis.insert(candidate.vectorize(), layer, candidate_word.clone())? {
                    next_frontier.push((candidate_word.clone(), candidate.clone()));
                    pairs.push((candidate_word, candidate));
                }
            }
        }
        dims_full.push(basis.dim());
        frontier = next_frontier;
    }

    Ok(LayeredSpan {
        basis,
        dims_full,
        pairs,
    })
}

/// The (witness, evaluation) pairs behind a basis of the span of words
/// of length between 1 and `max_len` — the identity-free filtration,
/// truncated.
pub fn word_span_pairs(
    gens: &[SquareMatrix],
    max_len: usize,
) -> Result<Vec<(Word, SquareMatrix)>, SpanError> {
    if gens.is_empty() {
        return Err(SpanError::EmptyGenerators);
    }
    Ok(layered_span(gens, false, Some(max_len))?.pairs)
}

/// Run the span filtration for `gens` to stabilization and report the
/// per-layer dimensions, the length, whether the full matrix algebra is
/// reached, and a witness word per basis element.
///
/// A set that fails to generate is not an error; the profile then
/// describes the proper subalgebra it does span.
pub fn length_profile(
    gens: &[SquareMatrix],
    include_identity: bool,
) -> Result<LengthProfile, SpanError> {
    if gens.is_empty() {
        if include_identity {
            return Err(SpanError::EmptyGenerators);
        }
        return Ok(LengthProfile {
            include_identity,
            dims: vec![0],
            length: Some(0),
            generates: false,
            final_dim: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        });
    }
    let notes = duplicate_notes(gens);
    let span = layered_span(gens, include_identity, None)?;
    let ambient = span.basis.ambient_dim();
    let length = span.dims_full.len() - 2;
    let final_dim = span.basis.dim();
    Ok(LengthProfile {
        include_identity,
        dims: span.dims_full[..=length].to_vec(),
        length: Some(length),
        generates: final_dim == ambient,
        final_dim,
        witnesses: span.basis.rows().iter().map(|r| r.witness.clone()).collect(),
        notes,
    })
}

/// Witness words whose evaluations form a basis of the full matrix
/// algebra, each of length at most the length of `gens` (the identity
/// convention is in force, so the empty word may appear).
pub fn word_basis(gens: &[SquareMatrix]) -> Result<Vec<(Word, SquareMatrix)>, SpanError> {
    if gens.is_empty() {
        return Err(SpanError::EmptyGenerators);
    }
    let span = layered_span(gens, true, None)?;
    let ambient = span.basis.ambient_dim();
    if span.basis.dim() != ambient {
        return Err(SpanError::DoesNotGenerate {
            final_dim: span.basis.dim(),
            ambient,
        });
    }
    Ok(span.pairs)
}

/// Basis of the span of the evaluations of words of length exactly `m`,
/// built stage by stage from the single length-0 word.
pub fn exact_length_span(gens: &[SquareMatrix], m: usize) -> Result<SpanBasis, SpanError> {
    if gens.is_empty() {
        return Err(SpanError::EmptyGenerators);
    }
    let (n, field) = validate_generators(gens)?;
    let ambient = n * n;

    let mut stage: Vec<(Word, SquareMatrix)> =
        vec![(Word::empty(), SquareMatrix::identity(n, field))];
    let mut basis = SpanBasis::new(ambient);
    if m == 0 {
        basis.insert(stage[0].1.vectorize(), 0, Word::empty())?;
        return Ok(basis);
    }
    for j in 1..=m {
        let mut next_basis = SpanBasis::new(ambient);
        let mut next_stage = Vec::new();
        for (index, g) in gens.iter().enumerate() {
            for (word, eval) in &stage {
                let candidate = g * eval;
                let candidate_word = word.prepended(index);
                if next_basis.insert(candidate.vectorize(), j, candidate_word.clone())? {
                    next_stage.push((candidate_word, candidate));
                }
            }
        }
        stage = next_stage;
        basis = next_basis;
    }
    Ok(basis)
}

/// Independent oracle: enumerate every word of every length up to
/// `max_len`, evaluate each explicitly, and insert all of them into a
/// fresh basis. Reports the same per-layer dimensions the incremental
/// engine must produce, at exponential cost bounded by `budget`.
pub fn brute_force_profile(
    gens: &[SquareMatrix],
    include_identity: bool,
    max_len: usize,
    budget: u64,
) -> Result<LengthProfile, SpanError> {
    if gens.is_empty() {
        if include_identity {
            return Err(SpanError::EmptyGenerators);
        }
        return Ok(LengthProfile {
            include_identity,
            dims: vec![0; max_len + 1],
            length: Some(0),
            generates: false,
            final_dim: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        });
    }
    let words_at_max = (gens.len() as u128)
        .checked_pow(max_len as u32)
        .unwrap_or(u128::MAX);
    if words_at_max > budget as u128 {
        return Err(SpanError::BudgetExceeded {
            required: words_at_max,
            budget,
        });
    }
    let notes = duplicate_notes(gens);
    let (n, field) = validate_generators(gens)?;
    let ambient = n * n;
    let mut basis = SpanBasis::new(ambient);
    let mut dims = Vec::with_capacity(max_len + 1);

    if include_identity {
        basis.insert(
            SquareMatrix::identity(n, field).vectorize(),
            0,
            Word::empty(),
        )?;
    }
    dims.push(basis.dim());

    fn enumerate(
        gens: &[SquareMatrix],
        prefix: &SquareMatrix,
        word: &mut Vec<usize>,
        remaining: usize,
        layer: usize,
        basis: &mut SpanBasis,
    ) -> Result<(), SpanError> {
        if remaining == 0 {
            basis.insert(prefix.vectorize(), layer, Word::new(word.clone()))?;
            return Ok(());
        }
        for (index, g) in gens.iter().enumerate() {
            word.push(index);
            let extended = prefix * g;
            enumerate(gens, &extended, word, remaining - 1, layer, basis)?;
            word.pop();
        }
        Ok(())
    }

    let identity = SquareMatrix::identity(n, field);
    for layer in 1..=max_len {
        enumerate(gens, &identity, &mut Vec::new(), layer, layer, &mut basis)?;
        dims.push(basis.dim());
    }

    let length = (0..dims.len() - 1).find(|&k| dims[k] == dims[k + 1]);
    let final_dim = basis.dim();
    Ok(LengthProfile {
        include_identity,
        dims,
        length,
        generates: final_dim == ambient,
        final_dim,
        witnesses: basis.rows().iter().map(|r| r.witness.clone()).collect(),
        notes,
    })
}
