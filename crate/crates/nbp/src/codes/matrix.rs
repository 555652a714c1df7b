//! Dense GF(2) matrices and the linear-algebra needed for encoding and
//! syndrome checking.

use thiserror::Error;

use super::perm::Permutation;

/// Errors from GF(2) matrix operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix has no nonzero entries")]
    ZeroMatrix,
    #[error("matrix has full column rank; the code contains only the zero codeword")]
    FullRank,
    #[error("parity-check rank {rank} does not leave room for dimension {expected_k}")]
    RankMismatch { rank: usize, expected_k: usize },
}

/// Dense binary matrix over GF(2), row-major storage, entries 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl BinaryMatrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix must have at least one row and column");
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    /// Build from a row-major slice of 0/1 values.
    ///
    /// # Panics
    ///
    /// Panics if `data.len() != rows * cols` or any entry is not 0 or 1.
    pub fn from_dense(rows: usize, cols: usize, data: &[u8]) -> Self {
        assert_eq!(data.len(), rows * cols, "data length must equal rows * cols");
        assert!(data.iter().all(|&b| b <= 1), "entries must be 0 or 1");
        assert!(rows >= 1 && cols >= 1, "matrix must have at least one row and column");
        Self { rows, cols, data: data.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: u8) {
        assert!(value <= 1, "entries must be 0 or 1");
        self.data[r * self.cols + c] = value;
    }

    /// Row `r` as a slice of 0/1 bytes.
    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Number of nonzero entries.
    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&b| b != 0).count()
    }

    /// Rank over GF(2), by Gaussian elimination with first-pivot tie-breaking.
    pub fn rank(&self) -> usize {
        let (reduced, pivots) = rref(self);
        debug_assert_eq!(reduced.len(), pivots.len());
        pivots.len()
    }
}

/// Reduced row echelon form over GF(2).
///
/// Returns the nonzero reduced rows and their pivot columns; pivots are chosen
/// as the first available row for each column, scanning columns left to right.
fn rref(m: &BinaryMatrix) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut rows: Vec<Vec<u8>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..m.cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] == 1 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Multiply a bit vector by the matrix transpose: `word · mᵀ` over GF(2).
fn mul_transpose(m: &BinaryMatrix, word: &[u8]) -> Vec<u8> {
    (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .zip(word)
                .fold(0u8, |acc, (&h, &w)| acc ^ (h & w))
        })
        .collect()
}

/// Syndrome `h · wordᵀ` over GF(2); all-zero exactly when `word` is a codeword.
pub fn syndrome(h: &BinaryMatrix, word: &[u8]) -> Result<Vec<u8>, CodeError> {
    if word.len() != h.cols {
        return Err(CodeError::LengthMismatch { expected: h.cols, got: word.len() });
    }
    Ok(mul_transpose(h, word))
}

/// True when `h · wordᵀ = 0` over GF(2).
pub fn is_codeword(h: &BinaryMatrix, word: &[u8]) -> Result<bool, CodeError> {
    Ok(syndrome(h, word)?.iter().all(|&s| s == 0))
}

/// Encode `message · g` over GF(2); message length must equal `g.rows()`.
pub fn encode(g: &BinaryMatrix, message: &[u8]) -> Result<Vec<u8>, CodeError> {
    if message.len() != g.rows {
        return Err(CodeError::LengthMismatch { expected: g.rows, got: message.len() });
    }
    let mut out = vec![0u8; g.cols];
    for (r, &m) in message.iter().enumerate() {
        if m & 1 == 1 {
            for (o, &gbit) in out.iter_mut().zip(g.row(r)) {
                *o ^= gbit;
            }
        }
    }
    Ok(out)
}

/// Derive a systematic generator matrix from a parity-check matrix.
///
/// Dependent rows of `h` are dropped. Returns `(g, sigma)` where `g` is
/// `k x n` in systematic form `[I | P]` and `sigma` is the column permutation
/// such that `g · h'ᵀ = 0` for `h'` = `h` with columns permuted by `sigma`
/// (free columns first, pivot columns last).
pub fn systematic_generator(h: &BinaryMatrix) -> Result<(BinaryMatrix, Permutation), CodeError> {
    if h.count_ones() == 0 {
        return Err(CodeError::ZeroMatrix);
    }
    let (reduced, pivots) = rref(h);
    let rank = pivots.len();
    let n = h.cols;
    let k = n - rank;
    if k == 0 {
        return Err(CodeError::FullRank);
    }
    let is_pivot = {
        let mut mask = vec![false; n];
        for &p in &pivots {
            mask[p] = true;
        }
        mask
    };
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();

    // sigma maps original column -> permuted position: free columns to the
    // front (order preserved), pivot columns to the back.
    let mut map = vec![0usize; n];
    for (i, &f) in free.iter().enumerate() {
        map[f] = i;
    }
    for (j, &p) in pivots.iter().enumerate() {
        map[p] = k + j;
    }
    let sigma = Permutation::new(map).expect("constructed map is a bijection");

    // In RREF the pivot columns form an identity, so the permuted matrix is
    // h' = [B | I_r] with B[r][i] = reduced[r][free[i]], and g = [I_k | Bᵀ].
    let mut g = BinaryMatrix::zeros(k, n);
    for i in 0..k {
        g.set(i, i, 1);
        for (r, row) in reduced.iter().enumerate() {
            g.set(i, k + r, row[free[i]]);
        }
    }
    Ok((g, sigma))
}

/// Apply a column permutation: column `j` of the result is column
/// `sigma⁻¹(j)` of the input, i.e. `out.col(sigma(j)) = m.col(j)`.
pub fn permute_columns(m: &BinaryMatrix, sigma: &Permutation) -> BinaryMatrix {
    assert_eq!(m.cols, sigma.len(), "permutation size must match column count");
    let mut out = BinaryMatrix::zeros(m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            if m.get(r, c) == 1 {
                out.set(r, sigma.image_of(c), 1);
            }
        }
    }
    out
}
