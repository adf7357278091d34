//! GF(2) linear algebra for parity-check matrices: codeword enumeration,
//! minimum distance, Tanner-graph cycle counts, alist I/O and the built-in
//! matrices used throughout the crate.

mod alist;
mod builtins;
mod cycles;

pub use alist::{parse_alist, write_alist};
pub use builtins::{builtin_matrix, BUILTIN_NAMES};
pub use cycles::count_cycles;

use thiserror::Error;

/// Guard on `2^(n - rank)` blowup for codeword enumeration.
pub const MAX_CODE_DIMENSION: usize = 24;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("code dimension {dimension} exceeds enumeration guard {limit}")]
    DimensionTooLarge { dimension: usize, limit: usize },
    #[error("code has no nonzero codeword")]
    TrivialCode,
    #[error("unsupported cycle length {0} (only 4 and 6)")]
    UnsupportedLength(usize),
    #[error("unknown built-in matrix name {0:?}")]
    UnknownName(String),
    #[error("alist parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("alist degree mismatch: {0}")]
    DegreeMismatch(String),
}

/// An m×n parity-check matrix over GF(2), rows packed into 64-bit words.
///
/// Construction rejects all-zero rows, `m == 0` and `n < 2`. Instances are
/// immutable afterwards; every operation borrows `self`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    m: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
    row_supports: Vec<Vec<usize>>,
    col_supports: Vec<Vec<usize>>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

impl BinaryMatrix {
    /// Builds a matrix from dense 0/1 rows.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, CodeError> {
        if rows.is_empty() {
            return Err(CodeError::InvalidMatrix("no rows".into()));
        }
        let n = rows[0].len();
        if n < 2 {
            return Err(CodeError::InvalidMatrix(format!(
                "need at least 2 columns, got {n}"
            )));
        }
        let mut packed = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CodeError::InvalidMatrix(format!(
                    "row {j} has length {}, expected {n}",
                    row.len()
                )));
            }
            let mut words = vec![0u64; words_for(n)];
            for (i, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => set_bit(&mut words, i),
                    other => {
                        return Err(CodeError::InvalidMatrix(format!(
                            "entry ({j},{i}) = {other} not in {{0,1}}"
                        )))
                    }
                }
            }
            if words.iter().all(|&w| w == 0) {
                return Err(CodeError::InvalidMatrix(format!("row {j} is all-zero")));
            }
            packed.push(words);
        }
        Ok(Self::from_packed(rows.len(), n, packed))
    }

    /// Builds a matrix from 0-indexed row supports.
    pub fn from_row_supports(m: usize, n: usize, supports: &[Vec<usize>]) -> Result<Self, CodeError> {
        if supports.len() != m {
            return Err(CodeError::InvalidMatrix(format!(
                "got {} supports for {m} rows",
                supports.len()
            )));
        }
        let mut rows = vec![vec![0u8; n]; m];
        for (j, sup) in supports.iter().enumerate() {
            for &i in sup {
                if i >= n {
                    return Err(CodeError::InvalidMatrix(format!(
                        "row {j} references column {i} >= {n}"
                    )));
                }
                rows[j][i] = 1;
            }
        }
        Self::from_rows(&rows)
    }

    fn from_packed(m: usize, n: usize, rows: Vec<Vec<u64>>) -> Self {
        let mut row_supports = Vec::with_capacity(m);
        let mut col_supports = vec![Vec::new(); n];
        for (j, words) in rows.iter().enumerate() {
            let mut sup = Vec::new();
            for i in 0..n {
                if get_bit(words, i) {
                    sup.push(i);
                    col_supports[i].push(j);
                }
            }
            row_supports.push(sup);
        }
        Self { m, n, rows, row_supports, col_supports }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        get_bit(&self.rows[row], col)
    }

    /// Column indices of the ones in `row`, ascending.
    pub fn row_support(&self, row: usize) -> &[usize] {
        &self.row_supports[row]
    }

    /// Row indices of the ones in `col`, ascending.
    pub fn col_support(&self, col: usize) -> &[usize] {
        &self.col_supports[col]
    }

    pub fn row_weight(&self, row: usize) -> usize {
        self.row_supports[row].len()
    }

    /// Number of ones shared by two rows.
    pub fn row_overlap(&self, a: usize, b: usize) -> usize {
        self.rows[a]
            .iter()
            .zip(&self.rows[b])
            .map(|(&x, &y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn dense_rows(&self) -> Vec<Vec<u8>> {
        (0..self.m)
            .map(|j| (0..self.n).map(|i| self.get(j, i) as u8).collect())
            .collect()
    }

    /// Rank over GF(2) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        gf2_eliminate(&mut rows, self.n).len()
    }

    /// Syndrome H·x over GF(2); `bits` must have length n.
    pub fn syndrome(&self, bits: &[u8]) -> Vec<u8> {
        assert_eq!(bits.len(), self.n, "bit vector length mismatch");
        self.row_supports
            .iter()
            .map(|sup| sup.iter().map(|&i| bits[i] & 1).fold(0, |a, b| a ^ b))
            .collect()
    }

    pub fn is_codeword(&self, bits: &[u8]) -> bool {
        self.syndrome(bits).iter().all(|&s| s == 0)
    }

    /// A basis of the kernel {x : Hx = 0}, one dense 0/1 vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let mut rows = self.rows.clone();
        let pivots = gf2_reduce(&mut rows, self.n);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.n];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.n {
            if pivot_set[f].is_some() {
                continue;
            }
            let mut vec = vec![0u8; self.n];
            vec[f] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                if get_bit(&rows[r], f) {
                    vec[p] = 1;
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// All codewords of the code {x : Hx = 0}, sorted lexicographically.
    ///
    /// Fails with [`CodeError::DimensionTooLarge`] when `n - rank(H)` exceeds
    /// [`MAX_CODE_DIMENSION`].
    pub fn enumerate_codewords(&self) -> Result<Vec<Vec<u8>>, CodeError> {
        let basis = self.kernel_basis();
        let k = basis.len();
        if k > MAX_CODE_DIMENSION {
            return Err(CodeError::DimensionTooLarge { dimension: k, limit: MAX_CODE_DIMENSION });
        }
        let packed: Vec<Vec<u64>> = basis
            .iter()
            .map(|v| {
                let mut words = vec![0u64; words_for(self.n)];
                for (i, &b) in v.iter().enumerate() {
                    if b == 1 {
                        set_bit(&mut words, i);
                    }
                }
                words
            })
            .collect();
        let mut out = Vec::with_capacity(1usize << k);
        for mask in 0u64..(1u64 << k) {
            let mut words = vec![0u64; words_for(self.n)];
            for (b, bp) in packed.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    for (w, &x) in words.iter_mut().zip(bp) {
                        *w ^= x;
                    }
                }
            }
            out.push((0..self.n).map(|i| get_bit(&words, i) as u8).collect::<Vec<u8>>());
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Minimum Hamming weight over the nonzero codewords.
    pub fn min_hamming_distance(&self) -> Result<usize, CodeError> {
        let words = self.enumerate_codewords()?;
        words
            .iter()
            .map(|c| c.iter().map(|&b| b as usize).sum::<usize>())
            .filter(|&w| w > 0)
            .min()
            .ok_or(CodeError::TrivialCode)
    }

    pub fn summary(&self) -> Result<CodeSummary, CodeError> {
        let rank = self.rank();
        let k = self.n - rank;
        let d_min = self.min_hamming_distance()?;
        Ok(CodeSummary { n: self.n, k, d_min, codeword_count: 1u64 << k })
    }
}

impl std::fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.m, self.n)?;
        for j in 0..self.m {
            for i in 0..self.n {
                write!(f, "{}", self.get(j, i) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Basic parameters of the code defined by a parity-check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSummary {
    pub n: usize,
    pub k: usize,
    pub d_min: usize,
    pub codeword_count: u64,
}

/// Forward elimination; returns pivot columns. Rows end up in echelon form.
fn gf2_eliminate(rows: &mut [Vec<u64>], n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| get_bit(&rows[i], c)) else {
            continue;
        };
        rows.swap(r, pivot);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i > r && get_bit(row, c) {
                for (w, &p) in row.iter_mut().zip(&pivot_row) {
                    *w ^= p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Full reduction (RREF); returns pivot columns.
fn gf2_reduce(rows: &mut [Vec<u64>], n: usize) -> Vec<usize> {
    let pivots = gf2_eliminate(rows, n);
    for (r, &c) in pivots.iter().enumerate().rev() {
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i < r && get_bit(row, c) {
                for (w, &p) in row.iter_mut().zip(&pivot_row) {
                    *w ^= p;
                }
            }
        }
    }
    pivots
}
