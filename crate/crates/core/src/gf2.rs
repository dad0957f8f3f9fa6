//! Bit-packed GF(2) vectors and sparse binary matrices.
//!
//! Codewords are row vectors: the parity constraint is `H xᵀ = 0` and
//! encoding is `w G`. Rank and solve kernels run on dense bit-packed
//! copies with deterministic first-nonzero pivoting, so witnesses are
//! reproducible. The sparse entry lists are kept only for the graph
//! algorithms, which never eliminate.

use std::fmt;

use rand::Rng;

use crate::error::Error;

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A length-checked vector over GF(2), packed 64 bits per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// Builds from 0/1 bytes.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Zero vector of length `len` with ones at `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut v = BitVector::zeros(len);
        for w in v.words.iter_mut() {
            *w = rng.random();
        }
        v.mask_tail();
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of 1-bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Elementwise complement (1 - v).
    pub fn complement(&self) -> BitVector {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    /// Indices of the 1-bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    fn mask_tail(&mut self) {
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        // len == 0 keeps an empty word list
        if self.len == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(")?;
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

/// A solution of `M x = b` together with a uniqueness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightSolution {
    pub x: BitVector,
    /// True iff the nullspace of `M` is trivial, i.e. `rank(M) == cols`.
    pub unique: bool,
}

/// A binary matrix stored in compressed form for both orientations:
/// row `r` owns the sorted column indices
/// `col_indices[row_offsets[r]..row_offsets[r+1]]`, and the transposed
/// adjacency is kept alongside so column walks and dualization are free.
///
/// The entry set is exactly the set of 1 positions; duplicate input
/// entries collapse to one.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseBinaryMatrix {
    rows: usize,
    cols: usize,
    row_offsets: Vec<u32>,
    col_indices: Vec<u32>,
    col_offsets: Vec<u32>,
    row_indices: Vec<u32>,
}

impl SparseBinaryMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseBinaryMatrix {
            rows,
            cols,
            row_offsets: vec![0; rows + 1],
            col_indices: Vec::new(),
            col_offsets: vec![0; cols + 1],
            row_indices: Vec::new(),
        }
    }

    pub fn identity(k: usize) -> Self {
        SparseBinaryMatrix {
            rows: k,
            cols: k,
            row_offsets: (0..=k as u32).collect(),
            col_indices: (0..k as u32).collect(),
            col_offsets: (0..=k as u32).collect(),
            row_indices: (0..k as u32).collect(),
        }
    }

    /// Finishes construction from the row-side compressed form by
    /// counting-sorting the transposed adjacency.
    fn from_row_csr(
        rows: usize,
        cols: usize,
        row_offsets: Vec<u32>,
        col_indices: Vec<u32>,
    ) -> Self {
        let mut col_offsets = vec![0u32; cols + 1];
        for &c in &col_indices {
            col_offsets[c as usize + 1] += 1;
        }
        for i in 0..cols {
            col_offsets[i + 1] += col_offsets[i];
        }
        let mut row_indices = vec![0u32; col_indices.len()];
        let mut cursor = col_offsets.clone();
        for r in 0..rows {
            let (lo, hi) = (row_offsets[r] as usize, row_offsets[r + 1] as usize);
            for &c in &col_indices[lo..hi] {
                row_indices[cursor[c as usize] as usize] = r as u32;
                cursor[c as usize] += 1;
            }
        }
        SparseBinaryMatrix {
            rows,
            cols,
            row_offsets,
            col_indices,
            col_offsets,
            row_indices,
        }
    }

    fn from_sorted_rows(rows: usize, cols: usize, per_row: Vec<Vec<u32>>) -> Self {
        let mut row_offsets = Vec::with_capacity(rows + 1);
        row_offsets.push(0u32);
        let mut col_indices = Vec::with_capacity(per_row.iter().map(Vec::len).sum());
        for row in per_row {
            col_indices.extend_from_slice(&row);
            row_offsets.push(col_indices.len() as u32);
        }
        SparseBinaryMatrix::from_row_csr(rows, cols, row_offsets, col_indices)
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: &[(usize, usize)],
    ) -> Result<Self, Error> {
        for &(r, c) in entries {
            if r >= rows || c >= cols {
                return Err(Error::EntryOutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
        }
        let mut sorted: Vec<(u32, u32)> =
            entries.iter().map(|&(r, c)| (r as u32, c as u32)).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut row_offsets = vec![0u32; rows + 1];
        for &(r, _) in &sorted {
            row_offsets[r as usize + 1] += 1;
        }
        for i in 0..rows {
            row_offsets[i + 1] += row_offsets[i];
        }
        let col_indices = sorted.into_iter().map(|(_, c)| c).collect();
        Ok(SparseBinaryMatrix::from_row_csr(
            rows,
            cols,
            row_offsets,
            col_indices,
        ))
    }

    /// Builds from dense 0/1 rows; rows must share one length.
    pub fn from_dense_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let per_row: Vec<Vec<u32>> = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense rows");
                row.iter()
                    .enumerate()
                    .filter(|&(_, &bit)| bit != 0)
                    .map(|(c, _)| c as u32)
                    .collect()
            })
            .collect();
        SparseBinaryMatrix::from_sorted_rows(rows.len(), cols, per_row)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row(r).binary_search(&(c as u32)).is_ok()
    }

    /// Sorted column indices of the ones in row `r`.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.col_indices[self.row_offsets[r] as usize..self.row_offsets[r + 1] as usize]
    }

    /// Sorted row indices of the ones in column `c`.
    pub fn column(&self, c: usize) -> &[u32] {
        &self.row_indices[self.col_offsets[c] as usize..self.col_offsets[c + 1] as usize]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| self.row(r).iter().map(move |&c| (r, c as usize)))
    }

    pub fn entry_count(&self) -> usize {
        self.col_indices.len()
    }

    pub fn row_degrees(&self) -> Vec<usize> {
        (0..self.rows).map(|r| self.row(r).len()).collect()
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.cols];
        for (_, c) in self.entries() {
            deg[c] += 1;
        }
        deg
    }

    /// Sorted row indices of the ones in each column.
    pub fn column_supports(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c).to_vec()).collect()
    }

    pub fn transpose(&self) -> SparseBinaryMatrix {
        SparseBinaryMatrix {
            rows: self.cols,
            cols: self.rows,
            row_offsets: self.col_offsets.clone(),
            col_indices: self.row_indices.clone(),
            col_offsets: self.row_offsets.clone(),
            row_indices: self.col_indices.clone(),
        }
    }

    /// Stacks `self` on top of `other` (column counts must match).
    pub fn vstack(&self, other: &SparseBinaryMatrix) -> Result<SparseBinaryMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::dim(self.cols, other.cols, "vstack column count"));
        }
        let mut row_offsets = self.row_offsets.clone();
        let shift = *row_offsets.last().unwrap();
        row_offsets.extend(other.row_offsets[1..].iter().map(|&o| o + shift));
        let mut col_indices = self.col_indices.clone();
        col_indices.extend_from_slice(&other.col_indices);
        Ok(SparseBinaryMatrix::from_row_csr(
            self.rows + other.rows,
            self.cols,
            row_offsets,
            col_indices,
        ))
    }

    /// Reorders columns: new column `j` is old column `perm[j]`.
    pub fn permute_cols(&self, perm: &[usize]) -> SparseBinaryMatrix {
        assert_eq!(perm.len(), self.cols, "permutation length");
        let mut inv = vec![0u32; self.cols];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new as u32;
        }
        let per_row: Vec<Vec<u32>> = (0..self.rows)
            .map(|r| {
                let mut mapped: Vec<u32> =
                    self.row(r).iter().map(|&c| inv[c as usize]).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();
        SparseBinaryMatrix::from_sorted_rows(self.rows, self.cols, per_row)
    }

    /// Right product `M vᵀ`; result has one bit per row.
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, Error> {
        if v.len() != self.cols {
            return Err(Error::dim(self.cols, v.len(), "mul_vec input length"));
        }
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = false;
            for &c in self.row(r) {
                acc ^= v.get(c as usize);
            }
            out.set(r, acc);
        }
        Ok(out)
    }

    /// Left product `w M`; result has one bit per column.
    pub fn mul_vec_left(&self, w: &BitVector) -> Result<BitVector, Error> {
        if w.len() != self.rows {
            return Err(Error::dim(self.rows, w.len(), "mul_vec_left input length"));
        }
        let mut out = BitVector::zeros(self.cols);
        for r in 0..self.rows {
            if w.get(r) {
                for &c in self.row(r) {
                    out.flip(c as usize);
                }
            }
        }
        Ok(out)
    }

    /// True iff `self xᵀ = 0`, treating `self` as a parity-check matrix.
    pub fn is_codeword(&self, x: &BitVector) -> Result<bool, Error> {
        Ok(self.mul_vec(x)?.is_zero())
    }

    /// GF(2) rank by dense elimination.
    pub fn rank(&self) -> usize {
        Eliminator::reduce(self).pivots.len()
    }

    /// Solves `M x = b`. Returns `None` when inconsistent; the witness sets
    /// all free variables to zero and is unique iff `rank == cols`.
    pub fn solve_right(&self, b: &BitVector) -> Result<Option<RightSolution>, Error> {
        if b.len() != self.rows {
            return Err(Error::dim(self.rows, b.len(), "solve_right rhs length"));
        }
        let mut elim = Eliminator::reduce_augmented(self, b);
        Ok(elim.extract_solution(self.cols))
    }

    /// Solves `w M = z` for some `w`. Returns `None` when inconsistent.
    pub fn solve_left(&self, z: &BitVector) -> Result<Option<BitVector>, Error> {
        if z.len() != self.cols {
            return Err(Error::dim(self.cols, z.len(), "solve_left rhs length"));
        }
        Ok(self.transpose().solve_right(z)?.map(|sol| sol.x))
    }

    /// Re-labels a parity-check matrix as the generator of the dual code.
    ///
    /// The entries are unchanged; callers treat the rows as basis vectors
    /// of the orthogonal complement.
    pub fn dualize(&self) -> SparseBinaryMatrix {
        self.clone()
    }

    /// A basis of `{x : M xᵀ = 0}`, deterministic for a given matrix.
    pub fn nullspace_basis(&self) -> Vec<BitVector> {
        let elim = Eliminator::reduce(self);
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (row, &(_, col)) in elim.pivots.iter().enumerate() {
            pivot_of_col[col] = row;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free] != usize::MAX {
                continue;
            }
            let mut x = BitVector::zeros(self.cols);
            x.set(free, true);
            for (row, &(_, col)) in elim.pivots.iter().enumerate() {
                if elim.rows[row].get(free) {
                    x.set(col, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    pub fn to_dense_rows(&self) -> Vec<BitVector> {
        (0..self.rows)
            .map(|r| {
                let mut v = BitVector::zeros(self.cols);
                for &c in self.row(r) {
                    v.set(c as usize, true);
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for SparseBinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseBinaryMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Gauss-Jordan elimination over GF(2) on dense bit-packed rows.
///
/// Pivoting is first-nonzero in column order so every derived witness
/// (solutions, nullspace vectors) is reproducible.
struct Eliminator {
    rows: Vec<BitVector>,
    /// (row index, pivot column) pairs in increasing column order.
    pivots: Vec<(usize, usize)>,
    augmented: bool,
}

impl Eliminator {
    fn reduce(m: &SparseBinaryMatrix) -> Eliminator {
        Eliminator::run(m.to_dense_rows(), m.cols(), false)
    }

    fn reduce_augmented(m: &SparseBinaryMatrix, b: &BitVector) -> Eliminator {
        let mut rows = Vec::with_capacity(m.rows());
        for r in 0..m.rows() {
            let mut v = BitVector::zeros(m.cols() + 1);
            for &c in m.row(r) {
                v.set(c as usize, true);
            }
            v.set(m.cols(), b.get(r));
            rows.push(v);
        }
        Eliminator::run(rows, m.cols(), true)
    }

    fn run(mut rows: Vec<BitVector>, solve_cols: usize, augmented: bool) -> Eliminator {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..solve_cols {
            let Some(pivot) = (next_row..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next_row, pivot);
            let pivot_row = rows[next_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        Eliminator {
            rows,
            pivots,
            augmented,
        }
    }

    /// Reads the solution out of a reduced augmented system.
    fn extract_solution(&mut self, cols: usize) -> Option<RightSolution> {
        debug_assert!(self.augmented);
        let rank = self.pivots.len();
        // Inconsistent iff a zero row has rhs 1.
        for row in self.rows[rank..].iter() {
            if row.get(cols) {
                return None;
            }
        }
        let mut x = BitVector::zeros(cols);
        for &(row, col) in &self.pivots {
            x.set(col, self.rows[row].get(cols));
        }
        Some(RightSolution {
            x,
            unique: rank == cols,
        })
    }
}
