//! Sparse integer matrices. Invariant factors are computed by eliminating
//! unit pivots sparsely and finishing the (usually tiny) remainder densely.

use std::collections::{BTreeMap, BTreeSet};

use super::smith::{invariant_factors, IntMatrix};
use super::HomologyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    /// Fails with overflow if an entry does not fit an `i64`.
    pub fn from_dense(m: &IntMatrix) -> Result<Self, HomologyError> {
        let mut s = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = i64::try_from(m.get(i, j)).map_err(|_| HomologyError::Overflow)?;
                s.add(i, j, v)?;
            }
        }
        Ok(s)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add(&mut self, i: usize, j: usize, v: i64) -> Result<(), HomologyError> {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of bounds");
        let e = self.data[i].entry(j).or_insert(0);
        *e = e.checked_add(v).ok_or(HomologyError::Overflow)?;
        if *e == 0 {
            self.data[i].remove(&j);
        }
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i].get(&j).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, &v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.triplets() {
            m.set(i, j, v.into());
        }
        m
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (i, k, a) in self.triplets() {
            for (&j, &b) in &other.data[k] {
                out.add(i, j, a.checked_mul(b).ok_or(HomologyError::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Nonzero invariant factors in divisibility order.
    pub fn invariant_factors(&self) -> Result<Vec<i64>, HomologyError> {
        let mut rows = self.data.clone();
        let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (i, j, _) in self.triplets() {
            cols[j].insert(i);
        }
        let mut units = 0usize;
        loop {
            let mut progress = false;
            for c in 0..self.cols {
                let pivot = cols[c]
                    .iter()
                    .copied()
                    .filter(|&r| rows[r][&c].unsigned_abs() == 1)
                    .min_by_key(|&r| (rows[r].len(), r));
                let Some(r) = pivot else {
                    continue;
                };
                progress = true;
                units += 1;
                let prow = std::mem::take(&mut rows[r]);
                let pv = prow[&c];
                for &j in prow.keys() {
                    cols[j].remove(&r);
                }
                let others: Vec<usize> = cols[c].iter().copied().collect();
                for i in others {
                    let f = rows[i][&c].checked_mul(pv).ok_or(HomologyError::Overflow)?;
                    for (&j, &v) in &prow {
                        let e = rows[i].entry(j).or_insert(0);
                        let was_zero = *e == 0;
                        *e = e
                            .checked_sub(f.checked_mul(v).ok_or(HomologyError::Overflow)?)
                            .ok_or(HomologyError::Overflow)?;
                        if *e == 0 {
                            rows[i].remove(&j);
                            cols[j].remove(&i);
                        } else if was_zero {
                            cols[j].insert(i);
                        }
                    }
                }
            }
            if !progress {
                break;
            }
        }
        let live_rows: Vec<usize> = (0..self.rows).filter(|&i| !rows[i].is_empty()).collect();
        let live_cols: Vec<usize> = (0..self.cols).filter(|&j| !cols[j].is_empty()).collect();
        let mut out = vec![1; units];
        if !live_rows.is_empty() {
            let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
            let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
            for (k, &i) in live_rows.iter().enumerate() {
                for (&j, &v) in &rows[i] {
                    dense.set(k, col_pos[&j], v.into());
                }
            }
            out.extend(invariant_factors(&dense)?);
        }
        Ok(out)
    }

    pub fn rank(&self) -> Result<usize, HomologyError> {
        Ok(self.invariant_factors()?.len())
    }
}
