//! Optimal decoding and quantization through the stacked-system rank
//! conditions, exhaustive small-code oracles, and the closed-form
//! lower bound on quantizer failure for sparse parity checks.
//!
//! An erasure pattern is decodable (every received word with that
//! pattern has a unique completion) iff the selector rows for the
//! unerased positions stacked over H have rank n. The same matrix,
//! built from the dual generator and the complementary pattern, decides
//! quantizability, which is the entire duality: both constructors are
//! provided so the identity can be checked entrywise.

use crate::error::Error;
use crate::gf2::{BitVector, SparseBinaryMatrix};
use crate::peel::{ErasurePattern, ErasureWord};

/// Selector rows stacked over a code matrix, with the column order that
/// moves erased positions last recorded for canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedSystem {
    matrix: SparseBinaryMatrix,
    selector_rows: usize,
    col_perm: Vec<usize>,
}

impl StackedSystem {
    /// Selector rows (one per position in `selected`, ascending) over `m`.
    fn assemble(m: &SparseBinaryMatrix, selected: &[usize], col_perm: Vec<usize>) -> Self {
        let n = m.cols();
        let entries: Vec<(usize, usize)> =
            selected.iter().enumerate().map(|(r, &c)| (r, c)).collect();
        let selector = SparseBinaryMatrix::from_entries(selected.len(), n, &entries)
            .expect("selector entries in bounds");
        StackedSystem {
            matrix: selector.vstack(m).expect("matching widths"),
            selector_rows: selected.len(),
            col_perm,
        }
    }

    pub fn matrix(&self) -> &SparseBinaryMatrix {
        &self.matrix
    }

    pub fn selector_rows(&self) -> usize {
        self.selector_rows
    }

    /// Recorded column order: selected positions first, then the rest.
    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    /// The matrix with columns permuted so the selector block reads
    /// as an identity followed by zeros.
    pub fn canonical_matrix(&self) -> SparseBinaryMatrix {
        self.matrix.permute_cols(&self.col_perm)
    }

    /// True iff the stacked matrix has full column rank.
    pub fn full_column_rank(&self) -> bool {
        self.matrix.rank() == self.matrix.cols()
    }
}

/// The decoding-side system: selector rows pin the unerased positions
/// of `e`, the parity rows of `h` sit below.
pub fn build_stacked(h: &SparseBinaryMatrix, e: &ErasurePattern) -> StackedSystem {
    assert_eq!(e.len(), h.cols(), "pattern length must match column count");
    let unerased: Vec<usize> = (0..e.len()).filter(|&i| !e.is_erased(i)).collect();
    let erased: Vec<usize> = (0..e.len()).filter(|&i| e.is_erased(i)).collect();
    let mut perm = unerased.clone();
    perm.extend(&erased);
    StackedSystem::assemble(h, &unerased, perm)
}

/// The quantization-side system: selector rows cover the erased
/// positions of `e_dual`, the generator rows of `g_dual` sit below.
///
/// For `g_dual = h` and `e_dual = e.complement()` this produces exactly
/// the matrix of `build_stacked(h, e)`.
pub fn build_stacked_for_quantizer(
    g_dual: &SparseBinaryMatrix,
    e_dual: &ErasurePattern,
) -> StackedSystem {
    assert_eq!(
        e_dual.len(),
        g_dual.cols(),
        "pattern length must match column count"
    );
    let erased: Vec<usize> = (0..e_dual.len()).filter(|&i| e_dual.is_erased(i)).collect();
    let unerased: Vec<usize> = (0..e_dual.len())
        .filter(|&i| !e_dual.is_erased(i))
        .collect();
    let mut perm = erased.clone();
    perm.extend(&unerased);
    StackedSystem::assemble(g_dual, &erased, perm)
}

/// True iff every received word with erasure pattern `e` decodes
/// uniquely under the code with parity-check matrix `h`.
pub fn decodable(h: &SparseBinaryMatrix, e: &ErasurePattern) -> bool {
    build_stacked(h, e).full_column_rank()
}

/// True iff every source with erasure pattern `e_dual` can be quantized
/// with zero distortion by the code generated by `g_dual`.
pub fn quantizable(g_dual: &SparseBinaryMatrix, e_dual: &ErasurePattern) -> bool {
    build_stacked_for_quantizer(g_dual, e_dual).full_column_rank()
}

/// Result of maximum-likelihood erasure decoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MlOutcome {
    /// A completion consistent with the unerased values; `unique` iff it
    /// is the only one.
    Codeword { word: BitVector, unique: bool },
    /// No codeword matches the unerased values. Impossible for genuine
    /// channel outputs; reported as a distinct anomaly value.
    Inconsistent,
}

impl MlOutcome {
    pub fn word(&self) -> Option<&BitVector> {
        match self {
            MlOutcome::Codeword { word, .. } => Some(word),
            MlOutcome::Inconsistent => None,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, MlOutcome::Codeword { unique: true, .. })
    }
}

/// Maximum-likelihood erasure decoding: solve for a codeword of the
/// code with parity-check matrix `h` that matches `y` where unerased.
pub fn ml_decode(h: &SparseBinaryMatrix, y: &ErasureWord) -> Result<MlOutcome, Error> {
    if y.len() != h.cols() {
        return Err(Error::dim(h.cols(), y.len(), "received word length"));
    }
    let stacked = build_stacked(h, &y.pattern_of());
    let mut rhs = BitVector::zeros(stacked.matrix().rows());
    let mut row = 0;
    for i in 0..y.len() {
        if let Some(b) = y.symbol(i).bit() {
            rhs.set(row, b);
            row += 1;
        }
    }
    debug_assert_eq!(row, stacked.selector_rows());
    Ok(match stacked.matrix().solve_right(&rhs)? {
        Some(sol) => MlOutcome::Codeword {
            word: sol.x,
            unique: sol.unique,
        },
        None => MlOutcome::Inconsistent,
    })
}

/// Some codeword of the code with parity-check matrix `h` matching `z`
/// at every unerased position, if one exists. This is per-source
/// optimal quantization with the code used directly.
pub fn optimal_quantize_with_checks(
    h: &SparseBinaryMatrix,
    z: &ErasureWord,
) -> Result<Option<BitVector>, Error> {
    Ok(match ml_decode(h, z)? {
        MlOutcome::Codeword { word, .. } => Some(word),
        MlOutcome::Inconsistent => None,
    })
}

/// Witness that a source can be quantized with the code generated by
/// `g_dual`: a dual message `v` whose codeword matches the source at
/// every unerased position, plus the free choices `u` that absorb the
/// erased positions in the stacked-system equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleWitness {
    /// One bit per erased position (ascending), chosen so the stacked
    /// product reproduces the canonical source word exactly.
    pub free_choices: BitVector,
    /// The dual-code message v.
    pub message: BitVector,
    /// The codeword v · G matching the source where unerased.
    pub codeword: BitVector,
    /// The assembled stacked-system product: the source with erased
    /// positions canonically zero.
    pub word: BitVector,
}

/// Optimal quantization with the code generated by `g_dual`: find a
/// codeword matching `z` at every unerased position.
pub fn optimal_quantize(
    g_dual: &SparseBinaryMatrix,
    z: &ErasureWord,
) -> Result<Option<OracleWitness>, Error> {
    if z.len() != g_dual.cols() {
        return Err(Error::dim(g_dual.cols(), z.len(), "source word length"));
    }
    let unerased: Vec<usize> = (0..z.len()).filter(|&i| !z.is_erased(i)).collect();
    // Restrict the generator to the unerased columns and match values.
    let restricted_entries: Vec<(usize, usize)> = g_dual
        .entries()
        .filter_map(|(r, c)| {
            unerased
                .binary_search(&c)
                .ok()
                .map(|restricted| (r, restricted))
        })
        .collect();
    let restricted =
        SparseBinaryMatrix::from_entries(g_dual.rows(), unerased.len(), &restricted_entries)?;
    let mut target = BitVector::zeros(unerased.len());
    for (j, &i) in unerased.iter().enumerate() {
        if z.symbol(i).bit() == Some(true) {
            target.set(j, true);
        }
    }
    let Some(message) = restricted.solve_left(&target)? else {
        return Ok(None);
    };
    let codeword = g_dual.mul_vec_left(&message)?;
    // Free choices cancel the codeword on erased positions so the
    // assembled product equals the canonical source word.
    let erased: Vec<usize> = (0..z.len()).filter(|&i| z.is_erased(i)).collect();
    let mut free_choices = BitVector::zeros(erased.len());
    for (j, &i) in erased.iter().enumerate() {
        free_choices.set(j, codeword.get(i));
    }
    let mut word = codeword.clone();
    for &i in &erased {
        word.set(i, false);
    }
    debug_assert_eq!(word, z.known_bits());
    Ok(Some(OracleWitness {
        free_choices,
        message,
        codeword,
        word,
    }))
}

/// Brute-force quantizer: scans all 2^k messages of `g` in
/// lexicographic order and returns the first codeword matching `z` at
/// every unerased position.
pub fn exhaustive_quantize(
    g: &SparseBinaryMatrix,
    z: &ErasureWord,
) -> Result<Option<BitVector>, Error> {
    if z.len() != g.cols() {
        return Err(Error::dim(g.cols(), z.len(), "source word length"));
    }
    let k = g.rows();
    if k > 20 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive quantizer limited to 20 message bits, got {k}"
        )));
    }
    for t in 0..(1u64 << k) {
        let mut message = BitVector::zeros(k);
        for i in 0..k {
            // Message bit 0 is the most significant lexicographically.
            if (t >> (k - 1 - i)) & 1 == 1 {
                message.set(i, true);
            }
        }
        let codeword = g.mul_vec_left(&message)?;
        let matches = (0..z.len())
            .all(|i| z.symbol(i).bit().is_none_or(|b| b == codeword.get(i)));
        if matches {
            return Ok(Some(codeword));
        }
    }
    Ok(None)
}

fn validate_bound_params(c: f64, e: f64, d: usize) -> Result<(), Error> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "check fraction must be in (0, 1], got {c}"
        )));
    }
    if !(0.0..=1.0).contains(&e) {
        return Err(Error::InvalidParameter(format!(
            "erasure probability must be in [0, 1], got {e}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    Ok(())
}

/// Closed-form lower bound on the probability that optimal quantization
/// fails when at least `c·n` parity checks have degree at most `d`:
/// `1 - exp(-c·n·((1-e)/2)^d)`.
pub fn encoding_failure_bound(c: f64, n: usize, e: f64, d: usize) -> Result<f64, Error> {
    validate_bound_params(c, e, d)?;
    let per_check = ((1.0 - e) / 2.0).powi(d as i32);
    Ok(1.0 - (-c * n as f64 * per_check).exp())
}

/// The tighter product form of the same bound:
/// `1 - (1 - (1/2)·(1-e)^d)^(c·n)`.
pub fn encoding_failure_bound_product(c: f64, n: usize, e: f64, d: usize) -> Result<f64, Error> {
    validate_bound_params(c, e, d)?;
    let per_check = 0.5 * (1.0 - e).powi(d as i32);
    Ok(1.0 - (1.0 - per_check).powf(c * n as f64))
}

/// Both bound forms maximized over the degrees present in a check
/// profile: for each degree `d`, `c` is the fraction of the block
/// length contributed by checks of degree at most `d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize)]
pub struct FailureBounds {
    pub exponential: f64,
    pub product: f64,
}

pub fn profile_failure_bounds(
    profile: &[(usize, usize)],
    n: usize,
    e: f64,
) -> Result<FailureBounds, Error> {
    let mut best = FailureBounds::default();
    let mut cumulative = 0usize;
    for &(d, count) in profile {
        cumulative += count;
        if d < 1 {
            continue;
        }
        let c = (cumulative as f64 / n as f64).min(1.0);
        if c <= 0.0 {
            continue;
        }
        let exp_form = encoding_failure_bound(c, n, e, d)?;
        let prod_form = encoding_failure_bound_product(c, n, e, d)?;
        best.exponential = best.exponential.max(exp_form);
        best.product = best.product.max(prod_form);
    }
    Ok(best)
}
