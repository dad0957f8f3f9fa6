//! The finite message algebras used by erasure decoding and erasure
//! quantization, plus the likelihood-ratio transform.
//!
//! Decoding messages range over {0, 1, *}; quantization adds the null
//! message ∅ to distinguish "free to choose" (*) from "not yet
//! determined" (∅). Products of conflicting known values yield a
//! contradiction, which is an outcome distinct from every message
//! symbol: it means the run as a whole has failed, so it is modeled as
//! an error channel rather than a fourth/fifth symbol.

use crate::error::Error;

/// Decoding message symbol: a known bit or an erasure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecSymbol {
    Zero,
    One,
    Erased,
}

/// Quantization message symbol: known bit, erasure (free), or null
/// (undetermined).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuantSymbol {
    Zero,
    One,
    Erased,
    Null,
}

/// Outcome of multiplying two conflicting known values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contradiction;

impl std::fmt::Display for Contradiction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#")
    }
}

impl DecSymbol {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            DecSymbol::One
        } else {
            DecSymbol::Zero
        }
    }

    pub fn bit(self) -> Option<bool> {
        match self {
            DecSymbol::Zero => Some(false),
            DecSymbol::One => Some(true),
            DecSymbol::Erased => None,
        }
    }

    pub fn is_erased(self) -> bool {
        self == DecSymbol::Erased
    }

    pub fn to_char(self) -> char {
        match self {
            DecSymbol::Zero => '0',
            DecSymbol::One => '1',
            DecSymbol::Erased => '*',
        }
    }

    pub fn from_char(c: char) -> Result<Self, Error> {
        match c {
            '0' => Ok(DecSymbol::Zero),
            '1' => Ok(DecSymbol::One),
            '*' => Ok(DecSymbol::Erased),
            other => Err(Error::InvalidParameter(format!(
                "invalid erasure symbol '{other}' (want 0, 1 or *)"
            ))),
        }
    }
}

impl From<DecSymbol> for QuantSymbol {
    fn from(s: DecSymbol) -> Self {
        match s {
            DecSymbol::Zero => QuantSymbol::Zero,
            DecSymbol::One => QuantSymbol::One,
            DecSymbol::Erased => QuantSymbol::Erased,
        }
    }
}

impl QuantSymbol {
    /// The restriction back to the decoding alphabet, if the symbol is
    /// not null.
    pub fn as_dec(self) -> Option<DecSymbol> {
        match self {
            QuantSymbol::Zero => Some(DecSymbol::Zero),
            QuantSymbol::One => Some(DecSymbol::One),
            QuantSymbol::Erased => Some(DecSymbol::Erased),
            QuantSymbol::Null => None,
        }
    }
}

/// Check-node combination rule for decoding: XOR with absorbing *.
pub fn dec_sum(a: DecSymbol, b: DecSymbol) -> DecSymbol {
    use DecSymbol::*;
    match (a, b) {
        (Erased, _) | (_, Erased) => Erased,
        (Zero, x) => x,
        (x, Zero) => x,
        (One, One) => Zero,
    }
}

/// Variable-node combination rule for decoding: agreement with identity
/// *; conflicting known values are a contradiction.
pub fn dec_prod(a: DecSymbol, b: DecSymbol) -> Result<DecSymbol, Contradiction> {
    use DecSymbol::*;
    match (a, b) {
        (Zero, One) | (One, Zero) => Err(Contradiction),
        (Erased, x) => Ok(x),
        (x, Erased) => Ok(x),
        (Zero, Zero) => Ok(Zero),
        (One, One) => Ok(One),
    }
}

/// Check-node combination rule for quantization.
pub fn quant_sum(a: QuantSymbol, b: QuantSymbol) -> QuantSymbol {
    use QuantSymbol::*;
    match (a, b) {
        (Erased, _) | (_, Erased) => Erased,
        (Null, _) | (_, Null) => Null,
        (Zero, x) => x,
        (x, Zero) => x,
        (One, One) => Zero,
    }
}

/// Variable-node combination rule for quantization.
pub fn quant_prod(a: QuantSymbol, b: QuantSymbol) -> Result<QuantSymbol, Contradiction> {
    use QuantSymbol::*;
    match (a, b) {
        (Zero, One) | (One, Zero) => Err(Contradiction),
        (Zero, _) | (_, Zero) => Ok(Zero),
        (One, _) | (_, One) => Ok(One),
        (Erased, Erased) => Ok(Erased),
        (Null, _) | (_, Null) => Ok(Null),
    }
}

/// Left fold of `dec_sum` (identity: 0).
pub fn dec_sum_fold<I: IntoIterator<Item = DecSymbol>>(items: I) -> DecSymbol {
    items.into_iter().fold(DecSymbol::Zero, dec_sum)
}

/// Left fold of `dec_prod` (identity: *), stopping at a contradiction.
pub fn dec_prod_fold<I: IntoIterator<Item = DecSymbol>>(
    items: I,
) -> Result<DecSymbol, Contradiction> {
    items
        .into_iter()
        .try_fold(DecSymbol::Erased, dec_prod)
}

/// Left fold of `quant_sum` (identity: 0).
pub fn quant_sum_fold<I: IntoIterator<Item = QuantSymbol>>(items: I) -> QuantSymbol {
    items.into_iter().fold(QuantSymbol::Zero, quant_sum)
}

/// Left fold of `quant_prod` (identity: *), stopping at a contradiction.
pub fn quant_prod_fold<I: IntoIterator<Item = QuantSymbol>>(
    items: I,
) -> Result<QuantSymbol, Contradiction> {
    items
        .into_iter()
        .try_fold(QuantSymbol::Erased, quant_prod)
}

/// Fourier transform of a likelihood ratio: Λ = (1 − λ) / (1 + λ).
///
/// Maps known ratios {0, +∞} to {1, −1} and the erased ratio 1 to 0;
/// applying the same map to a transform in [0, 1] recovers the ratio.
pub fn llr_fourier(lambda: f64) -> Result<f64, Error> {
    if lambda.is_nan() || lambda < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "likelihood ratio must be nonnegative, got {lambda}"
        )));
    }
    if lambda.is_infinite() {
        return Ok(-1.0);
    }
    Ok((1.0 - lambda) / (1.0 + lambda))
}
