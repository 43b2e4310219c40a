//! Combinatorial directed algebraic topology for higher-dimensional automata.
//!
//! The crate is organised bottom-up:
//!
//! - [`precubical`]: precubical sets, standard cubes, grids with holes and edge
//!   subdivision (the temporal deformation used by the invariance checks).
//! - [`freeomega`]: free strict ω-categories generated by the faces of simplices,
//!   cubes and precubical sets. Cells are identified by their face support.
//! - [`nerves`]: globular, branching and merging nerves truncated to simplicial
//!   level 1, the semi-path congruences and the maps between the nerves.
//! - [`homology`]: integer chain complexes, Smith normal form and homology groups.
//! - [`pvlang`]: a small semaphore (PV) language, its cube-with-holes model and
//!   deadlock / reachability analysis.
//! - [`cli`]: the `dhat` command line front end.
//!
//! Runnable walkthroughs for each capability live in the `examples/` directory of
//! this crate.

pub mod cli;
pub mod freeomega;
pub mod homology;
pub mod nerves;
pub mod precubical;
pub mod pvlang;
pub mod union_find;

/// Version tag written into every JSON document produced by this crate.
pub const FORMAT_VERSION: &str = "1";
