//! Integer homology: Smith normal form, chain complexes, and the homology
//! theories of precubical sets.
//!
//! For the nerve-based theories the index is shifted by one:
//! `H^u_{n+1}(K) = H_n(N^u(K))`, so `H^u_0` is the cokernel of the
//! augmentation and `H^u_1` is computed from nerve levels -1, 0 and 1.

mod chain;
mod smith;
mod sparse;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use chain::{chain_from_augmented, chain_from_precubical, ChainComplex, ChainMode};
pub use smith::{invariant_factors, smith_normal_form, IntMatrix, SmithDecomposition};
pub use sparse::SparseMatrix;

use crate::freeomega::{glob, realize, CellTable, FreeOmegaError, Limits};
use crate::nerves::{branching_nerve, globular_nerve, merging_nerve, Nerve, NerveError, PointMode};
use crate::precubical::PrecubicalSet;
use crate::FORMAT_VERSION;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("degree {degree} is outside the computable range {min}..={max}")]
    DegreeOutOfRange { degree: i64, min: i64, max: i64 },
    #[error("consecutive differentials do not compose to zero")]
    NotAComplex,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid precubical set: {0}")]
    InvalidComplex(String),
    #[error("theory {0} does not apply here")]
    UnsupportedTheory(Theory),
    #[error(transparent)]
    FreeOmega(#[from] FreeOmegaError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
}

/// A finitely generated abelian group `Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Invariant factors greater than 1, each dividing the next.
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Cellular homology of the precubical set.
    Cube,
    Globular,
    Branching,
    Merging,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Cube => "cube",
            Theory::Globular => "gl",
            Theory::Branching => "gl-",
            Theory::Merging => "gl+",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cube" => Ok(Theory::Cube),
            "gl" => Ok(Theory::Globular),
            "gl-" | "gl−" => Ok(Theory::Branching),
            "gl+" => Ok(Theory::Merging),
            _ => Err(format!("unknown theory {s:?}; expected cube, gl, gl- or gl+")),
        }
    }
}

/// `H^u_k` for each `k` in `degrees` (each 0 or 1) of a nerve.
pub fn nerve_homology(nerve: &Nerve, degrees: &[usize], mode: ChainMode) -> Result<Vec<HomologyGroup>, HomologyError> {
    let c = chain_from_augmented(&nerve.set, mode);
    degrees.iter().map(|&k| c.homology(k as i64 - 1)).collect()
}

fn nerve_level(degrees: &[usize]) -> Result<usize, HomologyError> {
    match degrees.iter().max() {
        Some(&k) if k > 1 => Err(HomologyError::DegreeOutOfRange {
            degree: k as i64,
            min: 0,
            max: 1,
        }),
        Some(&k) => Ok(k),
        None => Ok(0),
    }
}

/// Globular homology `H^{gl}_k` of a cell table.
pub fn globular_homology(
    table: &CellTable,
    degrees: &[usize],
    points: PointMode,
) -> Result<Vec<HomologyGroup>, HomologyError> {
    let n = globular_nerve(table, nerve_level(degrees)?, points)?;
    nerve_homology(&n, degrees, ChainMode::Unnormalized)
}

/// Branching homology `H^{gl-}_k` of a cell table.
pub fn branching_homology(table: &CellTable, degrees: &[usize]) -> Result<Vec<HomologyGroup>, HomologyError> {
    let n = branching_nerve(table, nerve_level(degrees)?)?;
    nerve_homology(&n, degrees, ChainMode::Unnormalized)
}

/// Merging homology `H^{gl+}_k` of a cell table.
pub fn merging_homology(table: &CellTable, degrees: &[usize]) -> Result<Vec<HomologyGroup>, HomologyError> {
    let n = merging_nerve(table, nerve_level(degrees)?)?;
    nerve_homology(&n, degrees, ChainMode::Unnormalized)
}

/// Options for [`homology_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub limits: Limits,
    pub points: PointMode,
    /// Apply the globe construction to the cell table first.
    pub glob: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            limits: Limits::new(2),
            points: PointMode::Full,
            glob: false,
        }
    }
}

/// Homology groups of one theory with the data they were computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub theory: Theory,
    pub groups: Vec<(usize, HomologyGroup)>,
    /// Level sizes `|X_{-1}|, |X_0|, ...` of the nerve, for nerve theories.
    pub nerve_sizes: Option<Vec<usize>>,
    /// Cell counts by dimension of the table, for nerve theories.
    pub cell_counts: Option<Vec<usize>>,
    pub truncated: bool,
}

impl HomologyReport {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct GroupOut<'a> {
            degree: usize,
            betti: usize,
            torsion: &'a [i64],
        }
        #[derive(Serialize)]
        struct ReportOut<'a> {
            version: &'static str,
            theory: &'static str,
            truncated: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            nerve_sizes: Option<&'a [usize]>,
            #[serde(skip_serializing_if = "Option::is_none")]
            cell_counts: Option<&'a [usize]>,
            groups: Vec<GroupOut<'a>>,
        }
        let out = ReportOut {
            version: FORMAT_VERSION,
            theory: self.theory.name(),
            truncated: self.truncated,
            nerve_sizes: self.nerve_sizes.as_deref(),
            cell_counts: self.cell_counts.as_deref(),
            groups: self
                .groups
                .iter()
                .map(|(d, g)| GroupOut {
                    degree: *d,
                    betti: g.betti,
                    torsion: &g.torsion,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("theory {}\n", self.theory);
        if let Some(c) = &self.cell_counts {
            s.push_str(&format!("cells by dimension {c:?}\n"));
        }
        if let Some(n) = &self.nerve_sizes {
            s.push_str(&format!("nerve level sizes (from level -1) {n:?}\n"));
        }
        for (d, g) in &self.groups {
            s.push_str(&format!("H_{d} = {g}\n"));
        }
        if self.truncated {
            s.push_str("warning: the cell table was truncated; groups may be incomplete\n");
        }
        s
    }
}

/// The cell table a nerve theory works on: `realize(K)`, optionally globed.
pub fn theory_table(k: &PrecubicalSet, opts: &ReportOptions) -> Result<CellTable, HomologyError> {
    let t = realize(k, opts.limits)?.table;
    Ok(if opts.glob { glob(&t) } else { t })
}

/// Homology of `k` in the given degrees. Cube theory accepts any degree up
/// to the dimension of `k`; nerve theories accept degrees 0 and 1.
pub fn homology_report(
    k: &PrecubicalSet,
    theory: Theory,
    degrees: &[usize],
    opts: &ReportOptions,
) -> Result<HomologyReport, HomologyError> {
    if theory == Theory::Cube {
        if opts.glob {
            return Err(HomologyError::UnsupportedTheory(theory));
        }
        let c = chain_from_precubical(k)?;
        let groups = degrees
            .iter()
            .map(|&d| Ok((d, c.homology(d as i64)?)))
            .collect::<Result<Vec<_>, HomologyError>>()?;
        return Ok(HomologyReport {
            theory,
            groups,
            nerve_sizes: None,
            cell_counts: None,
            truncated: false,
        });
    }
    let table = theory_table(k, opts)?;
    let level = nerve_level(degrees)?;
    let nerve = match theory {
        Theory::Globular => globular_nerve(&table, level, opts.points)?,
        Theory::Branching => branching_nerve(&table, level)?,
        Theory::Merging => merging_nerve(&table, level)?,
        Theory::Cube => unreachable!("handled above"),
    };
    let groups = nerve_homology(&nerve, degrees, ChainMode::Unnormalized)?;
    Ok(HomologyReport {
        theory,
        groups: degrees.iter().copied().zip(groups).collect(),
        nerve_sizes: Some(nerve.level_sizes()),
        cell_counts: Some(table.count_by_dim()),
        truncated: table.is_truncated(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precubical::{graph, grid, path, standard_cube};

    #[test]
    fn multiplication_by_two() {
        let mut d = SparseMatrix::zeros(1, 1);
        d.add(0, 0, 2).unwrap();
        let c = ChainComplex::new(0, vec![vec!["a".into()], vec!["b".into()]], vec![d], true).unwrap();
        assert_eq!(c.homology(0).unwrap(), HomologyGroup { betti: 0, torsion: vec![2] });
        assert_eq!(c.homology(1).unwrap(), HomologyGroup::free(0));
        assert!(c.homology(2).is_err());
    }

    #[test]
    fn d_squared_must_vanish() {
        let mut d1 = SparseMatrix::zeros(1, 1);
        d1.add(0, 0, 1).unwrap();
        let d2 = d1.clone();
        let l = || vec!["x".to_string()];
        assert_eq!(
            ChainComplex::new(0, vec![l(), l(), l()], vec![d1, d2], true),
            Err(HomologyError::NotAComplex)
        );
    }

    #[test]
    fn cubical_homology_of_small_complexes() {
        let hollow = grid(&[1, 1], &[vec![0, 0]]).unwrap();
        let c = chain_from_precubical(&hollow).unwrap();
        assert_eq!(c.homology(0).unwrap(), HomologyGroup::free(1));
        assert_eq!(c.homology(1).unwrap(), HomologyGroup::free(1));
        let full = chain_from_precubical(&standard_cube(3)).unwrap();
        for n in 1..=3 {
            assert!(full.homology(n).unwrap().is_trivial());
        }
    }

    #[test]
    fn single_edge_globular_zero() {
        let opts = ReportOptions::default();
        let r = homology_report(&standard_cube(1), Theory::Globular, &[0], &opts).unwrap();
        assert_eq!(r.groups[0].1, HomologyGroup::free(3));
        let sub = standard_cube(1).subdivide_edge(standard_cube(1).find("0").unwrap()).unwrap();
        let r = homology_report(&sub, Theory::Globular, &[0], &opts).unwrap();
        assert_eq!(r.groups[0].1, HomologyGroup::free(6));
    }

    #[test]
    fn v_shape_branching_zero() {
        let k = graph(&["o", "x", "y"], &[("f", "o", "x"), ("g", "o", "y")]);
        let r = homology_report(&k, Theory::Branching, &[0, 1], &ReportOptions::default()).unwrap();
        assert_eq!(r.groups[0].1, HomologyGroup::free(2));
        // f - g spans the kernel of the augmentation: one branching.
        assert_eq!(r.groups[1].1, HomologyGroup::free(1));
    }

    #[test]
    fn path_nerve_chain() {
        let t = realize(&path(2), Limits::new(2)).unwrap().table;
        let n = globular_nerve(&t, 1, PointMode::Realized).unwrap();
        let c = chain_from_augmented(&n.set, ChainMode::Unnormalized);
        assert_eq!(c.rank(-1), 3);
        assert_eq!(c.rank(0), 3);
        assert_eq!(c.rank(1), 3);
        // degenerate simplices have boundary ∂_0 - ∂_1 = 0
        assert!(c.boundary(1).unwrap().is_zero());
        let norm = chain_from_augmented(&n.set, ChainMode::Normalized);
        assert_eq!(norm.rank(1), 0);
    }
}
