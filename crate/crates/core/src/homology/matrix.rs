//! Sparse integer matrices and exact rank over prime fields and the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::FieldSpec;

/// An integer matrix stored as sparse rows `(column, value)`, sorted by column,
/// with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds a matrix from `(row, column, value)` triplets; repeated positions add up.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, i64)>>(rows: usize, cols: usize, entries: I) -> Self {
        let mut data: Vec<Vec<(usize, i64)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            data[r].push((c, v));
        }
        for row in &mut data {
            row.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            *row = merged;
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let triplets = dense.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            row.iter().enumerate().map(move |(c, &v)| (r, c, v))
        });
        Self::from_triplets(rows, cols, triplets)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                out[r][c] = v;
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r].binary_search_by_key(&c, |&(col, _)| col).map_or(0, |i| self.data[r][i].1)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut triplets = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &other.data[k] {
                    triplets.push((r, c, a * b));
                }
            }
        }
        IntMatrix::from_triplets(self.rows, other.cols, triplets)
    }

    /// Exact rank over `field`.
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) if p.get() == 2 => rank_gf2(self),
            FieldSpec::Prime(p) => rank_mod_p(self, p.get() as u64),
            FieldSpec::Rational => rank_rational(self),
        }
    }
}

/// Rank over GF(2) with bit-packed rows.
pub fn rank_gf2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    // basis[c] holds a reduced row whose lowest set bit is c
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; m.cols];
    let mut rank = 0;
    for row in &m.data {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v & 1 == 1 {
                bits[c / 64] |= 1 << (c % 64);
            }
        }
        let mut start = 0;
        while let Some(w) = (start..words).find(|&w| bits[w] != 0) {
            let c = w * 64 + bits[w].trailing_zeros() as usize;
            match &basis[c] {
                Some(b) => {
                    for i in w..words {
                        bits[i] ^= b[i];
                    }
                    start = w;
                }
                None => {
                    basis[c] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank over GF(p) for an odd prime `p < 2^31`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let cols = m.cols;
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    let pi = p as i64;
    for row in &m.data {
        let mut dense = vec![0u64; cols];
        for &(c, v) in row {
            dense[c] = v.rem_euclid(pi) as u64;
        }
        let mut c = 0;
        while c < cols {
            let a = dense[c];
            if a == 0 {
                c += 1;
                continue;
            }
            match &basis[c] {
                Some(b) => {
                    let factor = p - a;
                    for j in c..cols {
                        if b[j] != 0 {
                            dense[j] = (dense[j] + factor * b[j]) % p;
                        }
                    }
                }
                None => {
                    let inv = mod_inverse(a, p);
                    for x in dense[c..].iter_mut() {
                        *x = *x * inv % p;
                    }
                    basis[c] = Some(dense);
                    rank += 1;
                    break;
                }
            }
            c += 1;
        }
    }
    rank
}

/// Rank over the rationals.
///
/// Columns are first cleared with `±1` pivots using integer row operations,
/// which keeps every step exact and the entries small. Columns without a
/// unit entry are deferred; what remains of them is ranked by fraction-free
/// elimination over big integers. If an intermediate entry would overflow
/// `i64`, the whole matrix is handed to the big-integer routine instead.
pub fn rank_rational(m: &IntMatrix) -> usize {
    unit_pivot_rank(m).unwrap_or_else(|| rank_bareiss(&m.to_dense()))
}

fn unit_pivot_rank(m: &IntMatrix) -> Option<usize> {
    let mut a = m.to_dense();
    let mut active: Vec<bool> = vec![true; m.rows];
    let mut pivots = 0usize;
    let mut deferred: Vec<usize> = Vec::new();
    for c in 0..m.cols {
        let mut pivot = None;
        let mut any_nonzero = false;
        for r in (0..m.rows).filter(|&r| active[r]) {
            let v = a[r][c];
            if v != 0 {
                any_nonzero = true;
                if v.abs() == 1 {
                    pivot = Some(r);
                    break;
                }
            }
        }
        let Some(p) = pivot else {
            if any_nonzero {
                deferred.push(c);
            }
            continue;
        };
        active[p] = false;
        pivots += 1;
        let prow = std::mem::take(&mut a[p]);
        let sign = prow[c];
        // deferred columns left of c may still be nonzero in the pivot row
        let support: Vec<(usize, i64)> = prow.iter().copied().enumerate().filter(|&(_, v)| v != 0).collect();
        for r in 0..m.rows {
            if !active[r] || a[r][c] == 0 {
                continue;
            }
            // row_r -= (a[r][c] / sign) * row_p, with sign = ±1
            let factor = a[r][c] * sign;
            for &(j, y) in &support {
                a[r][j] = a[r][j].checked_sub(factor.checked_mul(y)?)?;
            }
        }
    }
    let residual: Vec<Vec<i64>> = (0..m.rows)
        .filter(|&r| active[r])
        .map(|r| deferred.iter().map(|&c| a[r][c]).collect::<Vec<i64>>())
        .filter(|row| row.iter().any(|&v| v != 0))
        .collect();
    Some(pivots + rank_bareiss(&residual))
}

/// Rank over the rationals by fraction-free (Bareiss) elimination over big integers.
pub fn rank_bareiss(dense: &[Vec<i64>]) -> usize {
    let rows = dense.len();
    if rows == 0 {
        return 0;
    }
    let cols = dense[0].len();
    let mut a: Vec<Vec<BigInt>> = dense.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = (&pivot * &row[j] - &lead * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
