//! Free strict ω-categories on simplices, cubes and precubical sets.
//!
//! Cells are represented by their support, the set of generating faces they
//! contain. [`CellTable::generate`] enumerates every cell up to a dimension,
//! [`realize`] builds the generating faces of a precubical set, and
//! [`glob`] / [`path_part`] shift a table up and down one dimension.

mod axioms;
mod generator;
mod globe;
mod realize;
mod support;
mod table;

use thiserror::Error;

pub use axioms::{check_axioms, AxiomReport, AxiomViolation};
pub use generator::{
    cube_atom_source_target, simplex_atom_source_target, CubeFace, FaceId, GeneratorComplex, GeneratorFace,
    Letter, SimplexFace,
};
pub use globe::{glob, path_part, GLOBE_SINK, GLOBE_SOURCE};
pub use realize::{pi_faces, realize, PiFace, Realization};
pub use support::Support;
pub use table::{Cell, CellId, CellTable, CellTableBuilder, Composition, FaceInfo, Limits, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeOmegaError {
    #[error("face {0} is 0-dimensional and has no atom source or target")]
    ZeroDimensional(String),
    #[error("invalid simplex face {0:?}: vertices must be nonempty and strictly increasing")]
    BadSimplexFace(Vec<usize>),
    #[error("invalid cube word {0:?}")]
    BadCubeWord(String),
    #[error("malformed generating faces: {0}")]
    MalformedComplex(String),
    #[error("the atom boundary of face {0} is not a cell")]
    AtomBoundaryMissing(String),
    #[error("cell limit reached after {cells} cells (max dimension {max_dim}); raise the limit or allow truncation")]
    LimitExceeded { cells: usize, max_dim: usize },
    #[error("the cell with support {{{0}}} has two different boundaries")]
    IllDefined(String),
    #[error("cells {left} and {right} are not composable along dimension {level}")]
    NotComposable { left: CellId, right: CellId, level: usize },
    #[error("the 1-skeleton has a directed cycle; loops are not supported")]
    CyclicSkeleton,
    #[error("invalid precubical set: {0}")]
    InvalidComplex(String),
    #[error("cell {0} is contracting: its 1-source or 1-target is a point")]
    Contracting(CellId),
    #[error("malformed cell table: {0}")]
    MalformedTable(String),
}
