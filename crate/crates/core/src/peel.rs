//! Sequential erasure peeling: iterative decoding and iterative
//! quantization, plus erasure words, patterns, and distortion.
//!
//! Both algorithms repeat one move until the word is clean or no move
//! exists. Decoding over a parity-check matrix H finds a check with
//! exactly one erased variable and sets that variable to the XOR of the
//! check's unerased bits. Quantizing over a generator matrix G finds a
//! message variable (row) touching exactly one unerased position,
//! reserves it to satisfy that position later, and erases the position.
//! Reserved variables are assigned in reverse reservation order, which
//! always succeeds because a reserved position never touches a variable
//! reserved earlier.
//!
//! Step 2 always selects the lowest-index eligible row. Eligibility is
//! tracked with per-row counters plus a constant-time membership set
//! (a summarized bitset), so a full run costs O(E) word operations with
//! E the edge count. A row's counter only decreases, so membership
//! changes at most twice per row.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::DecSymbol;
use crate::error::Error;
use crate::gf2::{BitVector, SparseBinaryMatrix};

/// A word over {0, 1, *}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasureWord {
    symbols: Vec<DecSymbol>,
}

impl ErasureWord {
    pub fn from_symbols(symbols: Vec<DecSymbol>) -> Self {
        ErasureWord { symbols }
    }

    /// Parses "01*" notation.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let symbols = text
            .chars()
            .map(DecSymbol::from_char)
            .collect::<Result<_, _>>()?;
        Ok(ErasureWord { symbols })
    }

    pub fn all_erased(n: usize) -> Self {
        ErasureWord {
            symbols: vec![DecSymbol::Erased; n],
        }
    }

    /// The word that transmits `codeword` and erases it at `pattern`.
    pub fn from_codeword(codeword: &BitVector, pattern: &ErasurePattern) -> Self {
        assert_eq!(codeword.len(), pattern.len(), "pattern length");
        let symbols = (0..codeword.len())
            .map(|i| {
                if pattern.is_erased(i) {
                    DecSymbol::Erased
                } else {
                    DecSymbol::from_bit(codeword.get(i))
                }
            })
            .collect();
        ErasureWord { symbols }
    }

    /// Random unerased values under a fixed pattern.
    pub fn random_with_pattern<R: Rng + ?Sized>(pattern: &ErasurePattern, rng: &mut R) -> Self {
        let symbols = (0..pattern.len())
            .map(|i| {
                if pattern.is_erased(i) {
                    DecSymbol::Erased
                } else {
                    DecSymbol::from_bit(rng.random())
                }
            })
            .collect();
        ErasureWord { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, i: usize) -> DecSymbol {
        self.symbols[i]
    }

    pub fn symbols(&self) -> &[DecSymbol] {
        &self.symbols
    }

    pub fn is_erased(&self, i: usize) -> bool {
        self.symbols[i].is_erased()
    }

    pub fn erased_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_erased()).count()
    }

    /// Indicator of the erased positions.
    pub fn pattern_of(&self) -> ErasurePattern {
        ErasurePattern::from_bools(
            &self
                .symbols
                .iter()
                .map(|s| s.is_erased())
                .collect::<Vec<_>>(),
        )
    }

    /// Unerased values as a vector, zeros at erased positions.
    pub fn known_bits(&self) -> BitVector {
        let mut v = BitVector::zeros(self.len());
        for (i, s) in self.symbols.iter().enumerate() {
            if let Some(true) = s.bit() {
                v.set(i, true);
            }
        }
        v
    }
}

impl fmt::Display for ErasureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Indicator vector e with e_i = 1 exactly at erased positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErasurePattern(BitVector);

impl ErasurePattern {
    pub fn from_bools(erased: &[bool]) -> Self {
        ErasurePattern(BitVector::from_bools(erased))
    }

    pub fn from_indicator(v: BitVector) -> Self {
        ErasurePattern(v)
    }

    pub fn none(n: usize) -> Self {
        ErasurePattern(BitVector::zeros(n))
    }

    /// Each position erased independently with probability `prob`.
    pub fn random<R: Rng + ?Sized>(n: usize, prob: f64, rng: &mut R) -> Self {
        let erased: Vec<bool> = (0..n).map(|_| rng.random_bool(prob)).collect();
        ErasurePattern::from_bools(&erased)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_erased(&self, i: usize) -> bool {
        self.0.get(i)
    }

    /// Number of erased positions, ‖e‖.
    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    /// The complementary pattern e' = 1 - e; an involution.
    pub fn complement(&self) -> ErasurePattern {
        ErasurePattern(self.0.complement())
    }

    pub fn indicator(&self) -> &BitVector {
        &self.0
    }
}

/// Policy for message variables left unconstrained by quantization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// All unreserved variables become 0.
    Zeros,
    /// Unreserved variables take seeded pseudo-random bits.
    SeededRandom(u64),
}

/// Reservations in the order they were made; no variable or check twice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReservationStack {
    items: Vec<(u32, u32)>,
}

impl ReservationStack {
    fn push(&mut self, var: u32, check: u32) {
        self.items.push((var, check));
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// (variable, check) pairs in reservation order.
    pub fn items(&self) -> &[(u32, u32)] {
        &self.items
    }
}

/// Result of iterative erasure decoding.
///
/// `iteration` counts completed peeling steps before the failing test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success {
        codeword: BitVector,
        iterations: usize,
    },
    Fail {
        iteration: usize,
        residual_erased: usize,
    },
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, DecodeOutcome::Success { .. })
    }

    pub fn codeword(&self) -> Option<&BitVector> {
        match self {
            DecodeOutcome::Success { codeword, .. } => Some(codeword),
            DecodeOutcome::Fail { .. } => None,
        }
    }
}

/// Result of iterative erasure quantization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuantOutcome {
    Success {
        /// Message variables w, one per row of G.
        message: BitVector,
        /// The reproduction w G.
        codeword: BitVector,
        reservations: ReservationStack,
    },
    Fail {
        iteration: usize,
        residual_unerased: usize,
    },
}

impl QuantOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, QuantOutcome::Success { .. })
    }

    pub fn codeword(&self) -> Option<&BitVector> {
        match self {
            QuantOutcome::Success { codeword, .. } => Some(codeword),
            QuantOutcome::Fail { .. } => None,
        }
    }
}

/// Constant-time membership set over a fixed index range that pops the
/// lowest member: a bitset with one summary word per 64 words, repeated
/// up to a single root word. Insert and remove touch one word per level
/// and pop-min descends from the root by trailing-zero counts, so every
/// operation costs a handful of word ops regardless of occupancy.
struct EligibleSet {
    levels: Vec<Vec<u64>>,
}

impl EligibleSet {
    fn with_capacity(capacity: usize) -> EligibleSet {
        let mut levels = Vec::new();
        let mut len = capacity.max(1).div_ceil(64);
        loop {
            levels.push(vec![0u64; len]);
            if len == 1 {
                break;
            }
            len = len.div_ceil(64);
        }
        EligibleSet { levels }
    }

    fn seeded(counts: &[u32]) -> EligibleSet {
        let mut set = EligibleSet::with_capacity(counts.len());
        for (i, &c) in counts.iter().enumerate() {
            if c == 1 {
                set.insert(i as u32);
            }
        }
        set
    }

    fn insert(&mut self, index: u32) {
        let mut i = index as usize;
        for level in &mut self.levels {
            let word = i / 64;
            let mask = 1u64 << (i % 64);
            let already = level[word] & mask != 0;
            level[word] |= mask;
            if already {
                break;
            }
            i = word;
        }
    }

    fn remove(&mut self, index: u32) {
        let mut i = index as usize;
        for level in &mut self.levels {
            let word = i / 64;
            let mask = 1u64 << (i % 64);
            if level[word] & mask == 0 {
                return; // not a member; summaries are already consistent
            }
            level[word] &= !mask;
            if level[word] != 0 {
                return;
            }
            i = word;
        }
    }

    fn pop_min(&mut self) -> Option<u32> {
        if *self.levels.last().unwrap().first().unwrap() == 0 {
            return None;
        }
        let mut i = 0usize;
        for level in self.levels.iter().rev() {
            i = i * 64 + level[i].trailing_zeros() as usize;
        }
        let found = i as u32;
        self.remove(found);
        Some(found)
    }
}

/// Iterative erasure decoding over the parity-check matrix `h`.
pub fn erasure_decode(h: &SparseBinaryMatrix, y: &ErasureWord) -> Result<DecodeOutcome, Error> {
    if y.len() != h.cols() {
        return Err(Error::dim(h.cols(), y.len(), "received word length"));
    }
    let n = h.cols();
    let m = h.rows();

    // Bit-packed working state keeps the mutable arrays cache-resident
    // even at large block lengths.
    let mut erased = BitVector::zeros(n);
    let mut values = BitVector::zeros(n);
    let mut erased_remaining = 0usize;
    for i in 0..n {
        match y.symbol(i).bit() {
            Some(b) => values.set(i, b),
            None => {
                erased.set(i, true);
                erased_remaining += 1;
            }
        }
    }

    // Per-check erased-variable counters and running XOR of unerased bits.
    let mut count = vec![0u32; m];
    let mut parity = BitVector::zeros(m);
    for r in 0..m {
        let mut acc = false;
        for &c in h.row(r) {
            if erased.get(c as usize) {
                count[r] += 1;
            } else {
                acc ^= values.get(c as usize);
            }
        }
        parity.set(r, acc);
    }

    let mut eligible = EligibleSet::seeded(&count);
    let mut iterations = 0usize;
    while erased_remaining > 0 {
        let Some(check) = eligible.pop_min() else {
            return Ok(DecodeOutcome::Fail {
                iteration: iterations,
                residual_erased: erased_remaining,
            });
        };
        let var = h
            .row(check as usize)
            .iter()
            .copied()
            .find(|&v| erased.get(v as usize))
            .expect("counter says one erased variable remains") as usize;
        let value = parity.get(check as usize);
        erased.set(var, false);
        values.set(var, value);
        erased_remaining -= 1;
        iterations += 1;
        for &k in h.column(var) {
            let old = count[k as usize];
            count[k as usize] -= 1;
            if value {
                parity.flip(k as usize);
            }
            if count[k as usize] == 1 {
                eligible.insert(k);
            } else if old == 1 {
                eligible.remove(k);
            }
        }
    }

    Ok(DecodeOutcome::Success {
        codeword: values,
        iterations,
    })
}

/// Iterative erasure quantization over the generator matrix `g`.
///
/// Rows of `g` are message variables; position `j` of the source `z`
/// is the check fed by column `j`.
pub fn erasure_quantize(
    g: &SparseBinaryMatrix,
    z: &ErasureWord,
    tie_break: TieBreak,
) -> Result<QuantOutcome, Error> {
    if z.len() != g.cols() {
        return Err(Error::dim(g.cols(), z.len(), "source word length"));
    }
    let n = g.cols();
    let k = g.rows();

    let mut unerased = BitVector::zeros(n);
    let mut z_values = BitVector::zeros(n);
    let mut unerased_remaining = 0usize;
    for j in 0..n {
        if let Some(b) = z.symbol(j).bit() {
            unerased.set(j, true);
            z_values.set(j, b);
            unerased_remaining += 1;
        }
    }

    // An unerased one with no incident variable can never be matched.
    for j in 0..n {
        if unerased.get(j) && z_values.get(j) && g.column(j).is_empty() {
            return Ok(QuantOutcome::Fail {
                iteration: 0,
                residual_unerased: unerased_remaining,
            });
        }
    }

    // Per-variable counters of incident unerased positions.
    let mut count = vec![0u32; k];
    for (i, c) in count.iter_mut().enumerate() {
        *c = g
            .row(i)
            .iter()
            .filter(|&&j| unerased.get(j as usize))
            .count() as u32;
    }

    let mut eligible = EligibleSet::seeded(&count);
    let mut reservations = ReservationStack::default();
    while unerased_remaining > 0 {
        let Some(var) = eligible.pop_min() else {
            return Ok(QuantOutcome::Fail {
                iteration: reservations.len(),
                residual_unerased: unerased_remaining,
            });
        };
        let check = g
            .row(var as usize)
            .iter()
            .copied()
            .find(|&j| unerased.get(j as usize))
            .expect("counter says one unerased check remains");
        reservations.push(var, check);
        unerased.set(check as usize, false);
        unerased_remaining -= 1;
        for &r in g.column(check as usize) {
            let old = count[r as usize];
            count[r as usize] -= 1;
            if count[r as usize] == 1 {
                eligible.insert(r);
            } else if old == 1 {
                eligible.remove(r);
            }
        }
    }

    // Step 8: unreserved variables take the tie-break assignment.
    let mut message = match tie_break {
        TieBreak::Zeros => BitVector::zeros(k),
        TieBreak::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            BitVector::random(k, &mut rng)
        }
    };

    // Step 9: satisfy reservations from the last back to the first. A
    // reserved position only touches unreserved variables and variables
    // reserved later, so every read below is already final.
    for &(var, check) in reservations.items().iter().rev() {
        let mut acc = z_values.get(check as usize);
        for &r in g.column(check as usize) {
            if r != var {
                acc ^= message.get(r as usize);
            }
        }
        message.set(var as usize, acc);
    }

    let codeword = g.mul_vec_left(&message)?;
    debug_assert!(
        (0..n).all(|j| !z.symbol(j).bit().is_some_and(|b| b != codeword.get(j))),
        "reproduction must match the source at unerased positions"
    );
    Ok(QuantOutcome::Success {
        message,
        codeword,
        reservations,
    })
}

/// Average per-letter distortion: erased source symbols cost nothing,
/// unerased symbols cost 1 when they differ from the reproduction.
pub fn distortion(source: &ErasureWord, reproduction: &BitVector) -> Result<f64, Error> {
    if source.len() != reproduction.len() {
        return Err(Error::dim(
            source.len(),
            reproduction.len(),
            "reproduction length",
        ));
    }
    if source.is_empty() {
        return Ok(0.0);
    }
    let mismatches = (0..source.len())
        .filter(|&i| {
            source
                .symbol(i)
                .bit()
                .is_some_and(|b| b != reproduction.get(i))
        })
        .count();
    Ok(mismatches as f64 / source.len() as f64)
}
