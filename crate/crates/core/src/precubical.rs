//! Precubical sets.
//!
//! A precubical set is a graded family of cubes `K_0, K_1, ...` with face maps
//! `∂_i^α : K_n -> K_{n-1}` for `1 <= i <= n` and `α ∈ {-, +}` satisfying the
//! cube axiom `∂_i^α ∂_j^β = ∂_{j-1}^β ∂_i^α` for `i < j`.
//!
//! Face indices are 1-based throughout this module.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::FORMAT_VERSION;

/// Orientation of a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    /// `(-)^i`: minus for odd `i`, plus for even `i`.
    pub fn alternating(i: usize) -> Sign {
        if i % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    fn slot(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }

    fn parse(s: &str) -> Option<Sign> {
        match s {
            "-" | "−" => Some(Sign::Minus),
            "+" => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A cube of a [`PrecubicalSet`], addressed by dimension and position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId {
    pub dim: usize,
    pub index: usize,
}

impl CubeId {
    pub fn new(dim: usize, index: usize) -> Self {
        CubeId { dim, index }
    }
}

impl fmt::Display for CubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-cube #{}", self.dim, self.index)
    }
}

pub type Vertex = CubeId;
pub type Edge = CubeId;

/// A defect reported by [`PrecubicalSet::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingFace {
        cube: CubeId,
        i: usize,
        sign: Sign,
    },
    DanglingFace {
        cube: CubeId,
        i: usize,
        sign: Sign,
        target: usize,
    },
    CubeAxiom {
        cube: CubeId,
        i: usize,
        j: usize,
        alpha: Sign,
        beta: Sign,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFace { cube, i, sign } => {
                write!(f, "{cube}: face ∂_{i}^{sign} is missing")
            }
            Violation::DanglingFace {
                cube,
                i,
                sign,
                target,
            } => write!(
                f,
                "{cube}: face ∂_{i}^{sign} points at nonexistent {}-cube #{target}",
                cube.dim - 1
            ),
            Violation::CubeAxiom {
                cube,
                i,
                j,
                alpha,
                beta,
            } => write!(
                f,
                "{cube}: ∂_{i}^{alpha} ∂_{j}^{beta} != ∂_{}^{beta} ∂_{i}^{alpha}",
                j - 1
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrecubicalError {
    #[error("a grid needs at least one axis")]
    EmptyGrid,
    #[error("grid axis lengths must be positive, got {0:?}")]
    ZeroLength(Vec<usize>),
    #[error("hole {hole:?} lies outside the grid {lengths:?}")]
    HoleOutOfBounds { hole: Vec<usize>, lengths: Vec<usize> },
    #[error("{0} does not exist")]
    NoSuchCube(CubeId),
    #[error("{0} is not an edge")]
    NotAnEdge(CubeId),
    #[error("edge {0:?} is a face of a higher cube and cannot be subdivided")]
    EdgeNotFree(String),
    #[error("duplicate cube name {0:?}")]
    DuplicateName(String),
    #[error("unknown cube name {0:?}")]
    UnknownName(String),
    #[error("bad face entry for {cube:?}: {reason}")]
    BadFace { cube: String, reason: String },
    #[error("malformed JSON: {0}")]
    Json(String),
}

/// A finite precubical set with named cubes.
///
/// Faces are stored per cube as `[∂_i^-, ∂_i^+]` indices into the next lower
/// dimension. Missing or dangling entries are representable so that
/// [`validate`](Self::validate) can report them; all constructors in this crate
/// produce valid sets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrecubicalSet {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<[Option<usize>; 2]>>>,
}

impl PrecubicalSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a cube of dimension `dim` with all faces unset.
    pub fn add_cube(&mut self, dim: usize, name: impl Into<String>) -> CubeId {
        while self.names.len() <= dim {
            self.names.push(Vec::new());
            self.faces.push(Vec::new());
        }
        self.names[dim].push(name.into());
        self.faces[dim].push(vec![[None, None]; dim]);
        CubeId::new(dim, self.names[dim].len() - 1)
    }

    /// Sets `∂_i^sign(cube)` to the `(dim - 1)`-cube with index `target`.
    ///
    /// Panics if `cube` does not exist or `i` is not in `1..=dim`.
    pub fn set_face(&mut self, cube: CubeId, i: usize, sign: Sign, target: usize) {
        assert!(i >= 1 && i <= cube.dim, "face index {i} out of range");
        self.faces[cube.dim][cube.index][i - 1][sign.slot()] = Some(target);
    }

    /// Highest dimension present, or `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.names.iter().rposition(|level| !level.is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.names.get(dim).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        match self.dim() {
            Some(d) => (0..=d).map(|n| self.count(n)).collect(),
            None => Vec::new(),
        }
    }

    pub fn contains(&self, cube: CubeId) -> bool {
        cube.index < self.count(cube.dim)
    }

    pub fn cubes(&self, dim: usize) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.count(dim)).map(move |index| CubeId::new(dim, index))
    }

    pub fn all_cubes(&self) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.names.len()).flat_map(move |d| self.cubes(d))
    }

    pub fn name(&self, cube: CubeId) -> &str {
        &self.names[cube.dim][cube.index]
    }

    /// Looks a cube up by name (names are unique across dimensions in sets built
    /// by this crate).
    pub fn find(&self, name: &str) -> Option<CubeId> {
        self.all_cubes().find(|&c| self.name(c) == name)
    }

    /// `∂_i^sign(cube)`, or `None` if unset. The result may dangle.
    pub fn face(&self, cube: CubeId, i: usize, sign: Sign) -> Option<CubeId> {
        if i == 0 || i > cube.dim {
            return None;
        }
        self.faces[cube.dim][cube.index][i - 1][sign.slot()].map(|t| CubeId::new(cube.dim - 1, t))
    }

    fn live_face(&self, cube: CubeId, i: usize, sign: Sign) -> Option<CubeId> {
        self.face(cube, i, sign).filter(|&f| self.contains(f))
    }

    /// Source and target vertex of an edge.
    pub fn endpoints(&self, edge: Edge) -> Option<(Vertex, Vertex)> {
        if edge.dim != 1 {
            return None;
        }
        Some((
            self.live_face(edge, 1, Sign::Minus)?,
            self.live_face(edge, 1, Sign::Plus)?,
        ))
    }

    /// Outgoing edges per vertex, in edge order.
    pub fn out_edges(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.count(0)];
        for e in self.cubes(1) {
            if let Some((s, _)) = self.endpoints(e) {
                out[s.index].push(e);
            }
        }
        out
    }

    /// Whether the directed graph of vertices and edges has a directed cycle.
    pub fn has_directed_cycle(&self) -> bool {
        let out = self.out_edges();
        let n = self.count(0);
        let mut indegree = vec![0usize; n];
        for e in self.cubes(1) {
            if let Some((_, t)) = self.endpoints(e) {
                indegree[t.index] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &e in &out[v] {
                let (_, t) = self.endpoints(e).expect("edge has endpoints");
                indegree[t.index] -= 1;
                if indegree[t.index] == 0 {
                    stack.push(t.index);
                }
            }
        }
        seen != n
    }

    /// Every missing face, dangling face and cube-axiom failure, ordered by
    /// dimension, cube index, then `(i, j, α, β)`.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for cube in self.all_cubes() {
            let n = cube.dim;
            for i in 1..=n {
                for sign in Sign::BOTH {
                    match self.face(cube, i, sign) {
                        None => out.push(Violation::MissingFace { cube, i, sign }),
                        Some(t) if !self.contains(t) => out.push(Violation::DanglingFace {
                            cube,
                            i,
                            sign,
                            target: t.index,
                        }),
                        Some(_) => {}
                    }
                }
            }
            for i in 1..=n {
                for j in (i + 1)..=n {
                    for alpha in Sign::BOTH {
                        for beta in Sign::BOTH {
                            let lhs = self
                                .live_face(cube, j, beta)
                                .and_then(|c| self.live_face(c, i, alpha));
                            let rhs = self
                                .live_face(cube, i, alpha)
                                .and_then(|c| self.live_face(c, j - 1, beta));
                            if let (Some(l), Some(r)) = (lhs, rhs) {
                                if l != r {
                                    out.push(Violation::CubeAxiom {
                                        cube,
                                        i,
                                        j,
                                        alpha,
                                        beta,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Whether `edge` is a face of some cube of dimension 2.
    pub fn bounds_higher_cube(&self, edge: Edge) -> bool {
        self.cubes(2).any(|sq| {
            (1..=2).any(|i| Sign::BOTH.iter().any(|&s| self.face(sq, i, s) == Some(edge)))
        })
    }

    /// Edges that are not a face of any square.
    pub fn free_edges(&self) -> Vec<Edge> {
        self.cubes(1).filter(|&e| !self.bounds_higher_cube(e)).collect()
    }

    fn fresh_name(&self, base: String) -> String {
        let taken: HashSet<&str> = self.names.iter().flatten().map(String::as_str).collect();
        let mut name = base;
        while taken.contains(name.as_str()) {
            name.push('\'');
        }
        name
    }

    /// Splits a free edge `e: u -> v` into `u -> m -> v` through a fresh vertex.
    ///
    /// The first half keeps the position of `e`; the second half is appended.
    pub fn subdivide_edge(&self, e: Edge) -> Result<PrecubicalSet, PrecubicalError> {
        if e.dim != 1 {
            return Err(PrecubicalError::NotAnEdge(e));
        }
        if !self.contains(e) {
            return Err(PrecubicalError::NoSuchCube(e));
        }
        if self.bounds_higher_cube(e) {
            return Err(PrecubicalError::EdgeNotFree(self.name(e).to_string()));
        }
        let (src, dst) = self.endpoints(e).ok_or(PrecubicalError::NoSuchCube(e))?;
        let base = self.name(e).to_string();
        let mid_name = self.fresh_name(format!("{base}.mid"));
        let first_name = self.fresh_name(format!("{base}.1"));
        let second_name = self.fresh_name(format!("{base}.2"));

        let mut out = self.clone();
        let mid = out.add_cube(0, mid_name);
        out.names[1][e.index] = first_name;
        out.set_face(e, 1, Sign::Minus, src.index);
        out.set_face(e, 1, Sign::Plus, mid.index);
        let second = out.add_cube(1, second_name);
        out.set_face(second, 1, Sign::Minus, mid.index);
        out.set_face(second, 1, Sign::Plus, dst.index);
        Ok(out)
    }

    /// Same set with cubes renamed through `rename`.
    pub fn renamed(&self, mut rename: impl FnMut(CubeId, &str) -> String) -> PrecubicalSet {
        let mut out = self.clone();
        for cube in self.all_cubes() {
            out.names[cube.dim][cube.index] = rename(cube, self.name(cube));
        }
        out
    }

    /// Same set with the cubes of each dimension reordered: `perm[d][old] = new`.
    pub fn permuted(&self, perm: &[Vec<usize>]) -> PrecubicalSet {
        let mut out = PrecubicalSet::new();
        for d in 0..self.names.len() {
            let mut names = vec![String::new(); self.count(d)];
            let mut faces = vec![Vec::new(); self.count(d)];
            for old in 0..self.count(d) {
                let new = perm[d][old];
                names[new] = self.names[d][old].clone();
                faces[new] = self.faces[d][old]
                    .iter()
                    .map(|pair| pair.map(|t| t.map(|t| perm[d - 1][t])))
                    .collect();
            }
            out.names.push(names);
            out.faces.push(faces);
        }
        out
    }

    /// Serializes to the `{"version", "dims", "faces"}` JSON document.
    pub fn to_json(&self) -> String {
        // trailing empty dimensions are not written
        let mut dims = BTreeMap::new();
        for d in 0..self.dim().map_or(0, |d| d + 1) {
            dims.insert(d, self.names[d].clone());
        }
        let mut faces = Vec::new();
        for cube in self.all_cubes() {
            for i in 1..=cube.dim {
                for sign in Sign::BOTH {
                    if let Some(t) = self.face(cube, i, sign) {
                        faces.push(FaceJson {
                            cube: self.name(cube).to_string(),
                            i,
                            sign: sign.symbol().to_string(),
                            target: self
                                .names
                                .get(t.dim)
                                .and_then(|l| l.get(t.index))
                                .cloned()
                                .unwrap_or_default(),
                        });
                    }
                }
            }
        }
        let doc = PrecubicalJson {
            version: Some(FORMAT_VERSION.to_string()),
            dims,
            faces,
        };
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<PrecubicalSet, PrecubicalError> {
        let doc: PrecubicalJson =
            serde_json::from_str(text).map_err(|e| PrecubicalError::Json(e.to_string()))?;
        let mut out = PrecubicalSet::new();
        let mut by_name: HashMap<String, CubeId> = HashMap::new();
        let top = doc.dims.keys().max().copied();
        if let Some(top) = top {
            for d in 0..=top {
                for name in doc.dims.get(&d).map(Vec::as_slice).unwrap_or(&[]) {
                    let id = out.add_cube(d, name.clone());
                    if by_name.insert(name.clone(), id).is_some() {
                        return Err(PrecubicalError::DuplicateName(name.clone()));
                    }
                }
            }
        }
        for f in doc.faces {
            let cube = *by_name
                .get(&f.cube)
                .ok_or_else(|| PrecubicalError::UnknownName(f.cube.clone()))?;
            let target = *by_name
                .get(&f.target)
                .ok_or_else(|| PrecubicalError::UnknownName(f.target.clone()))?;
            let bad = |reason: &str| PrecubicalError::BadFace {
                cube: f.cube.clone(),
                reason: reason.to_string(),
            };
            let sign = Sign::parse(&f.sign).ok_or_else(|| bad("sign must be \"-\" or \"+\""))?;
            if f.i == 0 || f.i > cube.dim {
                return Err(bad("face index out of range"));
            }
            if target.dim + 1 != cube.dim {
                return Err(bad("target has the wrong dimension"));
            }
            out.set_face(cube, f.i, sign, target.index);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct PrecubicalJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<String>,
    dims: BTreeMap<usize, Vec<String>>,
    faces: Vec<FaceJson>,
}

#[derive(Serialize, Deserialize)]
struct FaceJson {
    cube: String,
    i: usize,
    sign: String,
    target: String,
}

/// The standard `n`-cube: its `p`-cubes are the words over `{-, 0, +}` of length
/// `n` with exactly `p` zeros, and `∂_i^α` replaces the `i`-th zero by `α`.
pub fn standard_cube(n: usize) -> PrecubicalSet {
    let mut words: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                ['-', '0', '+'].into_iter().map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let mut set = PrecubicalSet::new();
    let mut index: HashMap<String, CubeId> = HashMap::new();
    for p in 0..=n {
        for w in words.iter().filter(|w| w.iter().filter(|&&c| c == '0').count() == p) {
            let name: String = w.iter().collect();
            let id = set.add_cube(p, name.clone());
            index.insert(name, id);
        }
    }
    for p in 1..=n {
        for cube in set.cubes(p).collect::<Vec<_>>() {
            let word: Vec<char> = set.name(cube).chars().collect();
            let zeros: Vec<usize> = (0..word.len()).filter(|&k| word[k] == '0').collect();
            for (i, &pos) in zeros.iter().enumerate() {
                for sign in Sign::BOTH {
                    let mut w = word.clone();
                    w[pos] = sign.symbol();
                    let target = index[&w.iter().collect::<String>()];
                    set.set_face(cube, i + 1, sign, target.index);
                }
            }
        }
    }
    set
}

/// A cube of a grid, as doubled coordinates: even `2x` is the point `x`, odd
/// `2x + 1` is the interval `[x, x + 1]`.
pub type GridCell = Vec<usize>;

/// A product-of-intervals complex together with the coordinates of its cubes.
#[derive(Clone, Debug)]
pub struct GridComplex {
    pub lengths: Vec<usize>,
    pub complex: PrecubicalSet,
    coords: Vec<Vec<GridCell>>,
    lookup: HashMap<GridCell, CubeId>,
}

impl GridComplex {
    /// Builds the grid over `lengths` without every cube for which `removed`
    /// holds, and without every cube having a removed cube as a face.
    pub fn build(
        lengths: &[usize],
        mut removed: impl FnMut(&[usize]) -> bool,
    ) -> Result<GridComplex, PrecubicalError> {
        if lengths.is_empty() {
            return Err(PrecubicalError::EmptyGrid);
        }
        if lengths.contains(&0) {
            return Err(PrecubicalError::ZeroLength(lengths.to_vec()));
        }
        let n = lengths.len();
        // all doubled coordinate vectors in lexicographic order
        let mut all: Vec<GridCell> = vec![Vec::new()];
        for &len in lengths {
            all = all
                .into_iter()
                .flat_map(|c| {
                    (0..=2 * len).map(move |x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        let dim_of = |c: &[usize]| c.iter().filter(|&&x| x % 2 == 1).count();

        let mut complex = PrecubicalSet::new();
        let mut coords: Vec<Vec<GridCell>> = Vec::new();
        let mut lookup: HashMap<GridCell, CubeId> = HashMap::new();
        for p in 0..=n {
            coords.push(Vec::new());
            if complex.names.len() <= p {
                complex.names.push(Vec::new());
                complex.faces.push(Vec::new());
            }
            for cell in all.iter().filter(|c| dim_of(c) == p) {
                if removed(cell) {
                    continue;
                }
                let mut faces = Vec::with_capacity(p);
                let mut ok = true;
                for pos in (0..n).filter(|&k| cell[k] % 2 == 1) {
                    let mut pair = [None, None];
                    for sign in Sign::BOTH {
                        let mut f = cell.clone();
                        f[pos] = match sign {
                            Sign::Minus => cell[pos] - 1,
                            Sign::Plus => cell[pos] + 1,
                        };
                        match lookup.get(&f) {
                            Some(id) => pair[sign.slot()] = Some(id.index),
                            None => ok = false,
                        }
                    }
                    faces.push(pair);
                }
                if !ok {
                    continue;
                }
                let id = CubeId::new(p, complex.names[p].len());
                complex.names[p].push(grid_cell_name(cell));
                complex.faces[p].push(faces);
                coords[p].push(cell.clone());
                lookup.insert(cell.clone(), id);
            }
        }
        Ok(GridComplex {
            lengths: lengths.to_vec(),
            complex,
            coords,
            lookup,
        })
    }

    /// Doubled coordinates of a cube.
    pub fn cell(&self, cube: CubeId) -> &GridCell {
        &self.coords[cube.dim][cube.index]
    }

    pub fn cube_at(&self, cell: &[usize]) -> Option<CubeId> {
        self.lookup.get(cell).copied()
    }

    /// Vertex at plain (undoubled) coordinates.
    pub fn vertex_at(&self, point: &[usize]) -> Option<Vertex> {
        let doubled: Vec<usize> = point.iter().map(|x| 2 * x).collect();
        self.cube_at(&doubled)
    }

    /// Plain coordinates of a vertex.
    pub fn point(&self, v: Vertex) -> Vec<usize> {
        self.cell(v).iter().map(|x| x / 2).collect()
    }
}

fn grid_cell_name(cell: &[usize]) -> String {
    cell.iter()
        .map(|&x| {
            if x % 2 == 0 {
                format!("{}", x / 2)
            } else {
                format!("{}..{}", x / 2, x / 2 + 1)
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// The grid over `lengths` (edges per axis) with the top cells at `holes`
/// removed. Only the named top cells disappear; their boundaries stay.
pub fn grid(lengths: &[usize], holes: &[Vec<usize>]) -> Result<PrecubicalSet, PrecubicalError> {
    for hole in holes {
        if hole.len() != lengths.len() || hole.iter().zip(lengths).any(|(&h, &l)| h >= l) {
            return Err(PrecubicalError::HoleOutOfBounds {
                hole: hole.clone(),
                lengths: lengths.to_vec(),
            });
        }
    }
    let doubled: HashSet<Vec<usize>> = holes
        .iter()
        .map(|h| h.iter().map(|x| 2 * x + 1).collect())
        .collect();
    Ok(GridComplex::build(lengths, |c| doubled.contains(c))?.complex)
}

/// A directed path `v0 -> v1 -> ... -> vn` with `n` edges.
pub fn path(n: usize) -> PrecubicalSet {
    let mut set = PrecubicalSet::new();
    for k in 0..=n {
        set.add_cube(0, format!("v{k}"));
    }
    for k in 0..n {
        let e = set.add_cube(1, format!("e{k}"));
        set.set_face(e, 1, Sign::Minus, k);
        set.set_face(e, 1, Sign::Plus, k + 1);
    }
    set
}

/// A graph-shaped precubical set: named vertices and named edges only.
pub fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> PrecubicalSet {
    let mut set = PrecubicalSet::new();
    for v in vertices {
        set.add_cube(0, *v);
    }
    for (name, s, t) in edges {
        let e = set.add_cube(1, *name);
        let s = set.find(s).expect("source vertex declared");
        let t = set.find(t).expect("target vertex declared");
        set.set_face(e, 1, Sign::Minus, s.index);
        set.set_face(e, 1, Sign::Plus, t.index);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn standard_cube_counts_and_validity() {
        for n in 0..=5 {
            let k = standard_cube(n);
            assert!(k.validate().is_empty(), "standard_cube({n}) invalid");
            for p in 0..=n {
                assert_eq!(k.count(p), binomial(n, p) * (1 << (n - p)), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn standard_cube_zero_is_a_point() {
        let k = standard_cube(0);
        assert_eq!(k.counts(), vec![1]);
        assert_eq!(k.name(CubeId::new(0, 0)), "");
    }

    #[test]
    fn first_face_of_square_replaces_first_zero() {
        let k = standard_cube(2);
        let sq = k.find("00").unwrap();
        assert_eq!(k.name(k.face(sq, 1, Sign::Minus).unwrap()), "-0");
        assert_eq!(k.name(k.face(sq, 2, Sign::Plus).unwrap()), "0+");
        assert_eq!(k.counts(), vec![4, 4, 1]);
    }

    #[test]
    fn rewired_face_yields_one_violation() {
        let mut k = standard_cube(2);
        let sq = k.find("00").unwrap();
        let wrong = k.find("0-").unwrap();
        k.set_face(sq, 1, Sign::Minus, wrong.index);
        let v = k.validate();
        assert_eq!(
            v,
            vec![Violation::CubeAxiom {
                cube: sq,
                i: 1,
                j: 2,
                alpha: Sign::Minus,
                beta: Sign::Plus
            }]
        );
    }

    #[test]
    fn rewiring_to_disjoint_edge_breaks_both_corners() {
        let mut k = standard_cube(2);
        let sq = k.find("00").unwrap();
        let wrong = k.find("+0").unwrap();
        k.set_face(sq, 1, Sign::Minus, wrong.index);
        assert_eq!(k.validate().len(), 2);
    }

    #[test]
    fn missing_and_dangling_faces_are_reported() {
        let mut k = PrecubicalSet::new();
        k.add_cube(0, "a");
        let e = k.add_cube(1, "e");
        k.set_face(e, 1, Sign::Minus, 0);
        k.set_face(e, 1, Sign::Plus, 7);
        assert_eq!(
            k.validate(),
            vec![Violation::DanglingFace {
                cube: e,
                i: 1,
                sign: Sign::Plus,
                target: 7
            }]
        );
        let f = k.add_cube(1, "f");
        assert_eq!(k.validate().len(), 3);
        assert!(matches!(k.validate()[1], Violation::MissingFace { cube, .. } if cube == f));
    }

    #[test]
    fn grid_unit_square_is_standard_square_up_to_renaming() {
        let g = grid(&[1, 1], &[]).unwrap();
        assert!(g.is_valid());
        assert_eq!(g.counts(), standard_cube(2).counts());
        let sq = CubeId::new(2, 0);
        // ∂_1^- is the left side x = 0
        assert_eq!(g.name(g.face(sq, 1, Sign::Minus).unwrap()), "0,0..1");
        assert_eq!(g.name(g.face(sq, 2, Sign::Plus).unwrap()), "0..1,1");
    }

    #[test]
    fn grid_of_one_interval() {
        let g = grid(&[1], &[]).unwrap();
        assert_eq!(g.counts(), vec![2, 1]);
    }

    #[test]
    fn grid_hole_keeps_boundary() {
        let g = grid(&[2, 2], &[vec![1, 1]]).unwrap();
        assert!(g.is_valid());
        assert_eq!(g.counts(), vec![9, 12, 3]);
        assert!(g.find("1..2,1..2").is_none());
        for edge in ["1,1..2", "2,1..2", "1..2,1", "1..2,2"] {
            assert!(g.find(edge).is_some(), "{edge} should survive");
        }
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert_eq!(grid(&[], &[]), Err(PrecubicalError::EmptyGrid));
        assert!(matches!(
            grid(&[2, 2], &[vec![2, 0]]),
            Err(PrecubicalError::HoleOutOfBounds { .. })
        ));
    }

    #[test]
    fn subdivide_single_edge() {
        let k = standard_cube(1);
        let e = CubeId::new(1, 0);
        let s = k.subdivide_edge(e).unwrap();
        assert_eq!(s.counts(), vec![3, 2]);
        assert!(s.is_valid());
        let (a, m) = s.endpoints(CubeId::new(1, 0)).unwrap();
        let (m2, b) = s.endpoints(CubeId::new(1, 1)).unwrap();
        assert_eq!(m, m2);
        assert_eq!(s.name(a), "-");
        assert_eq!(s.name(b), "+");
    }

    #[test]
    fn subdivide_path_lengthens_it() {
        let p = path(2);
        let s = p.subdivide_edge(CubeId::new(1, 0)).unwrap();
        assert_eq!(s.counts(), vec![4, 3]);
        assert!(!s.has_directed_cycle());
    }

    #[test]
    fn subdivide_rejects_bounding_edges() {
        let k = standard_cube(2);
        let e = k.find("-0").unwrap();
        assert!(matches!(k.subdivide_edge(e), Err(PrecubicalError::EdgeNotFree(_))));
        assert!(matches!(
            k.subdivide_edge(CubeId::new(1, 99)),
            Err(PrecubicalError::NoSuchCube(_))
        ));
        assert!(matches!(
            k.subdivide_edge(CubeId::new(0, 0)),
            Err(PrecubicalError::NotAnEdge(_))
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        for k in [standard_cube(3), grid(&[2, 1], &[vec![0, 0]]).unwrap(), path(3)] {
            let text = k.to_json();
            let back = PrecubicalSet::from_json(&text).unwrap();
            assert_eq!(back, k);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn json_rejects_unknown_names() {
        let text = r#"{"dims": {"0": ["a"], "1": ["e"]},
            "faces": [{"cube": "e", "i": 1, "sign": "-", "target": "zz"}]}"#;
        assert_eq!(
            PrecubicalSet::from_json(text),
            Err(PrecubicalError::UnknownName("zz".into()))
        );
    }

    #[test]
    fn cycle_detection() {
        assert!(!path(3).has_directed_cycle());
        let loop_ = graph(&["a", "b"], &[("x", "a", "b"), ("y", "b", "a")]);
        assert!(loop_.has_directed_cycle());
    }
}
