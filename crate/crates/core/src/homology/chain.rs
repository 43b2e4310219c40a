//! Integer chain complexes built from augmented simplicial sets and from
//! precubical sets.

use super::sparse::SparseMatrix;
use super::{HomologyError, HomologyGroup};
use crate::nerves::AugmentedSimplicialSet;
use crate::precubical::{PrecubicalSet, Sign};

/// Whether degenerate simplices are kept in the chain basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChainMode {
    /// Every simplex is a basis element.
    #[default]
    Unnormalized,
    /// Degenerate simplices are dropped and faces landing on them vanish.
    Normalized,
}

/// Free abelian groups `C_n` for `min_degree <= n <= max_degree` with
/// differentials `d_n: C_n -> C_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    min_degree: i64,
    labels: Vec<Vec<String>>,
    /// `boundaries[k]` is `d_{min_degree + k + 1}`.
    boundaries: Vec<SparseMatrix>,
    /// Whether `d_{max_degree + 1}` is known to vanish. Complexes cut off
    /// from an infinite object do not know their top differential.
    closed_top: bool,
}

impl ChainComplex {
    pub fn new(
        min_degree: i64,
        labels: Vec<Vec<String>>,
        boundaries: Vec<SparseMatrix>,
        closed_top: bool,
    ) -> Result<Self, HomologyError> {
        if labels.is_empty() || boundaries.len() + 1 != labels.len() {
            return Err(HomologyError::Shape("one differential between each pair of degrees".into()));
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.rows() != labels[k].len() || d.cols() != labels[k + 1].len() {
                return Err(HomologyError::Shape(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    min_degree + k as i64 + 1,
                    d.rows(),
                    d.cols(),
                    labels[k].len(),
                    labels[k + 1].len()
                )));
            }
        }
        let c = ChainComplex {
            min_degree,
            labels,
            boundaries,
            closed_top,
        };
        for w in c.boundaries.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(HomologyError::NotAComplex);
            }
        }
        Ok(c)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.labels.len() as i64 - 1
    }

    fn slot(&self, n: i64) -> Option<usize> {
        (n >= self.min_degree && n <= self.max_degree()).then(|| (n - self.min_degree) as usize)
    }

    /// Rank of `C_n` (zero outside the stored range).
    pub fn rank(&self, n: i64) -> usize {
        self.slot(n).map_or(0, |k| self.labels[k].len())
    }

    pub fn labels(&self, n: i64) -> &[String] {
        self.slot(n).map_or(&[], |k| &self.labels[k])
    }

    /// `d_n`, if both `C_n` and `C_{n-1}` are stored.
    pub fn boundary(&self, n: i64) -> Option<&SparseMatrix> {
        let k = self.slot(n)?;
        k.checked_sub(1).map(|k| &self.boundaries[k])
    }

    /// `H_n = ker d_n / im d_{n+1}`.
    pub fn homology(&self, n: i64) -> Result<HomologyGroup, HomologyError> {
        let top = if self.closed_top {
            self.max_degree()
        } else {
            self.max_degree() - 1
        };
        if n < self.min_degree || n > top {
            return Err(HomologyError::DegreeOutOfRange {
                degree: n,
                min: self.min_degree,
                max: top,
            });
        }
        let rank_out = match self.boundary(n) {
            Some(d) => d.rank()?,
            None => 0,
        };
        let incoming = match self.boundary(n + 1) {
            Some(d) => d.invariant_factors()?,
            None => Vec::new(),
        };
        Ok(HomologyGroup {
            betti: self.rank(n) - rank_out - incoming.len(),
            torsion: incoming.into_iter().filter(|&f| f > 1).collect(),
        })
    }

    /// One line `degree row col value` per nonzero entry of each `d_n`.
    pub fn export_sparse(&self) -> String {
        let mut s = String::new();
        for n in self.min_degree + 1..=self.max_degree() {
            for (i, j, v) in self.boundary(n).expect("stored").triplets() {
                s.push_str(&format!("{n} {i} {j} {v}\n"));
            }
        }
        s
    }
}

/// The alternating-face complex of an augmented simplicial set, in degrees
/// `-1..=N`: `d_0 = ∂_{-1}` and `d_n = Σ (-1)^i ∂_i`.
pub fn chain_from_augmented(x: &AugmentedSimplicialSet, mode: ChainMode) -> ChainComplex {
    let top = x.top();
    let mut keep: Vec<Vec<bool>> = x.sizes.iter().map(|&s| vec![true; s]).collect();
    if mode == ChainMode::Normalized {
        for n in 0..top {
            for e in &x.degeneracies[n] {
                for &y in e {
                    keep[n + 1][y] = false;
                }
            }
        }
    }
    let index: Vec<Vec<Option<usize>>> = keep
        .iter()
        .map(|k| {
            let mut next = 0;
            k.iter()
                .map(|&b| {
                    b.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut labels = vec![(0..x.points).map(|p| format!("p{p}")).collect::<Vec<_>>()];
    for (n, k) in keep.iter().enumerate() {
        labels.push((0..k.len()).filter(|&i| k[i]).map(|i| format!("{n}:{i}")).collect());
    }
    let mut d0 = SparseMatrix::zeros(x.points, labels[1].len());
    for (v, &p) in x.augmentation.iter().enumerate() {
        d0.add(p, v, 1).expect("small entries");
    }
    let mut boundaries = vec![d0];
    for n in 1..=top {
        let mut d = SparseMatrix::zeros(labels[n].len(), labels[n + 1].len());
        for y in 0..x.sizes[n] {
            let Some(col) = index[n][y] else {
                continue;
            };
            for i in 0..=n {
                if let Some(row) = index[n - 1][x.face(n, i, y)] {
                    d.add(row, col, if i % 2 == 0 { 1 } else { -1 }).expect("small entries");
                }
            }
        }
        boundaries.push(d);
    }
    ChainComplex::new(-1, labels, boundaries, false).expect("simplicial identities give a complex")
}

/// The cubical complex of a precubical set: `C_n` is free on `K_n` and
/// `d = Σ_i (-1)^i (∂_i^- - ∂_i^+)`.
pub fn chain_from_precubical(k: &PrecubicalSet) -> Result<ChainComplex, HomologyError> {
    if let Some(v) = k.validate().first() {
        return Err(HomologyError::InvalidComplex(v.to_string()));
    }
    let dim = k.dim().unwrap_or(0);
    let labels: Vec<Vec<String>> = (0..=dim)
        .map(|n| k.cubes(n).map(|c| k.name(c).to_string()).collect())
        .collect();
    let mut boundaries = Vec::new();
    for n in 1..=dim {
        let mut d = SparseMatrix::zeros(k.count(n - 1), k.count(n));
        for x in k.cubes(n) {
            for i in 1..=n {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let lo = k.face(x, i, Sign::Minus).expect("validated");
                let hi = k.face(x, i, Sign::Plus).expect("validated");
                d.add(lo.index, x.index, sign)?;
                d.add(hi.index, x.index, -sign)?;
            }
        }
        boundaries.push(d);
    }
    ChainComplex::new(0, labels, boundaries, true)
}
