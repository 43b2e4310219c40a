//! Dense integer matrices and their Smith normal form.
//!
//! Entries are stored as `i128`. Inputs coming from chain complexes are
//! `i64`, and the extra width absorbs the growth of the transformation
//! matrices; anything beyond that is reported as overflow.

use std::fmt;

use super::HomologyError;

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows<T: Copy + Into<i128>>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x.into()).collect(),
        }
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[i128]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a.checked_mul(other.get(k, j)).ok_or(HomologyError::Overflow)?;
                    let v = out.get(i, j).checked_add(p).ok_or(HomologyError::Overflow)?;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] -= q * row[src]`.
    fn sub_row(&mut self, dst: usize, src: usize, q: i128) -> Result<(), HomologyError> {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s != 0 {
                let d = q.checked_mul(s).ok_or(HomologyError::Overflow)?;
                let v = self.get(dst, j).checked_sub(d).ok_or(HomologyError::Overflow)?;
                self.set(dst, j, v);
            }
        }
        Ok(())
    }

    /// `col[dst] -= q * col[src]`.
    fn sub_col(&mut self, dst: usize, src: usize, q: i128) -> Result<(), HomologyError> {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s != 0 {
                let d = q.checked_mul(s).ok_or(HomologyError::Overflow)?;
                let v = self.get(i, dst).checked_sub(d).ok_or(HomologyError::Overflow)?;
                self.set(i, dst, v);
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<(), HomologyError> {
        for j in 0..self.cols {
            let v = self.get(i, j).checked_neg().ok_or(HomologyError::Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal with
/// nonnegative entries, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries of `D`.
    pub fn divisors(&self) -> Vec<i128> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i))
            .filter(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

/// Quotient rounded to the nearest integer, so the remainder is at most
/// half the divisor in absolute value.
fn nearest_quotient(a: i128, p: i128) -> Result<i128, HomologyError> {
    let q = a.checked_div_euclid(p).ok_or(HomologyError::Overflow)?;
    let r = a - q * p;
    Ok(if 2 * r > p.abs() { q + p.signum() } else { q })
}

struct Reducer {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    fn new(m: &IntMatrix, track: bool) -> Self {
        Reducer {
            a: m.clone(),
            u: track.then(|| IntMatrix::identity(m.rows)),
            v: track.then(|| IntMatrix::identity(m.cols)),
        }
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(u) = &mut self.u {
            u.swap_rows(x, y);
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some(v) = &mut self.v {
            v.swap_cols(x, y);
        }
    }

    fn sub_row(&mut self, dst: usize, src: usize, q: i128) -> Result<(), HomologyError> {
        self.a.sub_row(dst, src, q)?;
        if let Some(u) = &mut self.u {
            u.sub_row(dst, src, q)?;
        }
        Ok(())
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: i128) -> Result<(), HomologyError> {
        self.a.sub_col(dst, src, q)?;
        if let Some(v) = &mut self.v {
            v.sub_col(dst, src, q)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<(), HomologyError> {
        self.a.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        Ok(())
    }

    /// Smallest nonzero `|a_ij|` with `i, j >= t`; ties go to the first in
    /// row-major order.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(u128, usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let v = self.a.get(i, j).unsigned_abs();
                if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(mut self) -> Result<Reducer, HomologyError> {
        let n = self.a.rows.min(self.a.cols);
        for t in 0..n {
            loop {
                let Some((i, j)) = self.pivot(t) else {
                    return Ok(self);
                };
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                let p = self.a.get(t, t);
                let mut clean = true;
                for i in t + 1..self.a.rows {
                    let q = nearest_quotient(self.a.get(i, t), p)?;
                    if q != 0 {
                        self.sub_row(i, t, q)?;
                    }
                    clean &= self.a.get(i, t) == 0;
                }
                for j in t + 1..self.a.cols {
                    let q = nearest_quotient(self.a.get(t, j), p)?;
                    if q != 0 {
                        self.sub_col(j, t, q)?;
                    }
                    clean &= self.a.get(t, j) == 0;
                }
                if !clean {
                    continue;
                }
                let bad = (t + 1..self.a.rows)
                    .find(|&i| (t + 1..self.a.cols).any(|j| self.a.get(i, j) % p != 0));
                match bad {
                    // Bring a non-multiple into row t; the next round finds a
                    // smaller pivot.
                    Some(i) => self.sub_row(t, i, -1)?,
                    None => break,
                }
            }
            if self.a.get(t, t) < 0 {
                self.negate_row(t)?;
            }
        }
        Ok(self)
    }
}

/// Smith normal form with the transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithDecomposition, HomologyError> {
    let r = Reducer::new(m, true).run()?;
    Ok(SmithDecomposition {
        u: r.u.expect("tracked"),
        d: r.a,
        v: r.v.expect("tracked"),
    })
}

/// The nonzero invariant factors of `m`, in divisibility order. Factors
/// that do not fit an `i64` are reported as overflow.
pub fn invariant_factors(m: &IntMatrix) -> Result<Vec<i64>, HomologyError> {
    let d = Reducer::new(m, false).run()?.a;
    (0..m.rows.min(m.cols))
        .map(|i| d.get(i, i))
        .filter(|&x| x != 0)
        .map(|x| i64::try_from(x).map_err(|_| HomologyError::Overflow))
        .collect()
}
