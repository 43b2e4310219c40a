//! Cell tables of free ω-categories.
//!
//! A cell is identified by its support: the set of generating faces it is
//! built from. Each cell stores its iterated sources `s_m` and targets `t_m`
//! for `m < dim`; for `m >= dim` both are the cell itself.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::generator::{FaceId, GeneratorComplex};
use super::support::Support;
use super::FreeOmegaError;
use crate::FORMAT_VERSION;

pub type CellId = usize;

/// Name and dimension of a generating face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceInfo {
    pub name: String,
    pub dim: usize,
}

/// How a cell first entered the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The atom of a generating face.
    Atom(FaceId),
    /// A composite `left *_level right`.
    Composite {
        left: CellId,
        right: CellId,
        level: usize,
    },
    /// Supplied directly, or produced by a construction without a
    /// composition witness.
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    support: Support,
    dim: usize,
    sources: Vec<CellId>,
    targets: Vec<CellId>,
    witness: Witness,
}

impl Cell {
    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn witness(&self) -> Witness {
        self.witness
    }
}

/// A recorded composite `left *_level right = result` with
/// `level < min(dim left, dim right)`. Composites along identities are not
/// recorded; see [`CellTable::composite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    pub left: CellId,
    pub right: CellId,
    pub level: usize,
    pub result: CellId,
}

/// Bounds on cell table generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dim: usize,
    pub max_cells: usize,
    pub allow_truncation: bool,
}

impl Limits {
    pub const DEFAULT_MAX_CELLS: usize = 200_000;

    pub fn new(max_dim: usize) -> Self {
        Limits {
            max_dim,
            max_cells: Self::DEFAULT_MAX_CELLS,
            allow_truncation: false,
        }
    }

    pub fn max_cells(mut self, max_cells: usize) -> Self {
        self.max_cells = max_cells;
        self
    }

    pub fn allow_truncation(mut self, allow: bool) -> Self {
        self.allow_truncation = allow;
        self
    }
}

enum Stop {
    Limit,
    Fatal(FreeOmegaError),
}

impl From<FreeOmegaError> for Stop {
    fn from(e: FreeOmegaError) -> Self {
        Stop::Fatal(e)
    }
}

/// The cells of a free ω-category up to a maximal dimension, with their
/// boundaries and the nontrivial compositions between them.
#[derive(Clone, Debug)]
pub struct CellTable {
    faces: Vec<FaceInfo>,
    cells: Vec<Cell>,
    by_support: HashMap<Support, CellId>,
    compositions: Vec<Composition>,
    composition_index: HashMap<(CellId, CellId, usize), CellId>,
    max_dim: usize,
    truncated: bool,
}

impl PartialEq for CellTable {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces
            && self.cells == other.cells
            && self.compositions == other.compositions
            && self.max_dim == other.max_dim
            && self.truncated == other.truncated
    }
}

impl Eq for CellTable {}

impl CellTable {
    fn empty(faces: Vec<FaceInfo>, max_dim: usize) -> Self {
        CellTable {
            faces,
            cells: Vec::new(),
            by_support: HashMap::new(),
            compositions: Vec::new(),
            composition_index: HashMap::new(),
            max_dim,
            truncated: false,
        }
    }

    /// Generates all cells of dimension at most `limits.max_dim` of the free
    /// ω-category on `complex`.
    ///
    /// Cells are produced dimension by dimension: first the atoms, then the
    /// closure under all defined compositions. The order is deterministic.
    pub fn generate(complex: &GeneratorComplex, limits: Limits) -> Result<CellTable, FreeOmegaError> {
        let faces = complex
            .faces()
            .iter()
            .map(|f| FaceInfo {
                name: f.name.clone(),
                dim: f.dim,
            })
            .collect();
        let mut gen = Generation {
            table: CellTable::empty(faces, limits.max_dim),
            max_cells: limits.max_cells,
            fresh: Vec::new(),
            queue: VecDeque::new(),
            by_source: HashMap::new(),
            by_target: HashMap::new(),
        };
        for d in 0..=limits.max_dim {
            for (id, f) in complex.faces().iter().enumerate() {
                if f.dim != d {
                    continue;
                }
                match gen.add_atom(complex, id) {
                    Ok(()) => {}
                    Err(Stop::Limit) => gen.table.truncated = true,
                    Err(Stop::Fatal(e)) => return Err(e),
                }
            }
            if let Err(Stop::Fatal(e)) = gen.saturate() {
                return Err(e);
            }
        }
        if gen.table.truncated && !limits.allow_truncation {
            return Err(FreeOmegaError::LimitExceeded {
                cells: gen.table.cells.len(),
                max_dim: limits.max_dim,
            });
        }
        Ok(gen.table)
    }

    /// The atoms of `complex` together with all their iterated boundary
    /// cells, without any further composites.
    pub fn atoms(complex: &GeneratorComplex, limits: Limits) -> Result<CellTable, FreeOmegaError> {
        let full = Self::generate(complex, limits)?;
        let mut keep = vec![false; full.cells.len()];
        let mut stack: Vec<CellId> = full
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c.witness, Witness::Atom(_)))
            .map(|(i, _)| i)
            .collect();
        while let Some(c) = stack.pop() {
            if keep[c] {
                continue;
            }
            keep[c] = true;
            stack.extend(full.cells[c].sources.iter().chain(&full.cells[c].targets));
        }
        full.restrict(&keep)
    }

    /// The sub-table on the cells marked in `keep`, which must be closed
    /// under boundaries.
    fn restrict(&self, keep: &[bool]) -> Result<CellTable, FreeOmegaError> {
        let mut map = vec![None; self.cells.len()];
        let mut next = 0;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                map[i] = Some(next);
                next += 1;
            }
        }
        let mut out = CellTable::empty(self.faces.clone(), self.max_dim);
        out.truncated = self.truncated;
        for (i, c) in self.cells.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            let m = |x: &CellId| map[*x].expect("boundary-closed");
            let witness = match c.witness {
                Witness::Composite { left, right, level }
                    if map[left].is_some() && map[right].is_some() =>
                {
                    Witness::Composite {
                        left: m(&left),
                        right: m(&right),
                        level,
                    }
                }
                Witness::Composite { .. } => Witness::Given,
                w => w,
            };
            out.push_cell(Cell {
                support: c.support.clone(),
                dim: c.dim,
                sources: c.sources.iter().map(m).collect(),
                targets: c.targets.iter().map(m).collect(),
                witness,
            })?;
        }
        for k in &self.compositions {
            if let (Some(l), Some(r), Some(c)) = (map[k.left], map[k.right], map[k.result]) {
                out.record(Composition {
                    left: l,
                    right: r,
                    level: k.level,
                    result: c,
                });
            }
        }
        Ok(out)
    }

    fn push_cell(&mut self, cell: Cell) -> Result<CellId, FreeOmegaError> {
        if self.by_support.contains_key(&cell.support) {
            return Err(FreeOmegaError::MalformedTable(format!(
                "duplicate support {}",
                self.support_names(&cell.support).join(" ")
            )));
        }
        let id = self.cells.len();
        self.by_support.insert(cell.support.clone(), id);
        self.cells.push(cell);
        Ok(id)
    }

    fn record(&mut self, k: Composition) {
        self.composition_index.insert((k.left, k.right, k.level), k.result);
        self.compositions.push(k);
    }

    /// Adds a cell unless one with the same support exists, in which case the
    /// two must agree on dimension and boundaries.
    fn intern(&mut self, cell: Cell, max_cells: usize, fresh: &mut Vec<CellId>) -> Result<CellId, Stop> {
        if let Some(&id) = self.by_support.get(&cell.support) {
            let old = &self.cells[id];
            if old.dim != cell.dim || old.sources != cell.sources || old.targets != cell.targets {
                return Err(Stop::Fatal(FreeOmegaError::IllDefined(
                    self.support_names(&cell.support).join(" "),
                )));
            }
            return Ok(id);
        }
        if self.cells.len() >= max_cells {
            return Err(Stop::Limit);
        }
        let id = self.push_cell(cell)?;
        fresh.push(id);
        Ok(id)
    }

    /// `a *_p b`, adding the composite and any intermediate cells it needs.
    /// The caller guarantees `t_p a = s_p b`.
    fn compose_into(
        &mut self,
        a: CellId,
        b: CellId,
        p: usize,
        max_cells: usize,
        fresh: &mut Vec<CellId>,
    ) -> Result<CellId, Stop> {
        let (da, db) = (self.cells[a].dim, self.cells[b].dim);
        if da <= p {
            return Ok(b);
        }
        if db <= p {
            return Ok(a);
        }
        if let Some(&c) = self.composition_index.get(&(a, b, p)) {
            return Ok(c);
        }
        let dim = da.max(db);
        let mut sources = Vec::with_capacity(dim);
        let mut targets = Vec::with_capacity(dim);
        for m in 0..dim {
            let (s, t) = match m.cmp(&p) {
                std::cmp::Ordering::Less => (self.source(a, m), self.target(a, m)),
                std::cmp::Ordering::Equal => (self.source(a, p), self.target(b, p)),
                std::cmp::Ordering::Greater => {
                    let s = self.compose_into(self.source(a, m), self.source(b, m), p, max_cells, fresh)?;
                    let t = self.compose_into(self.target(a, m), self.target(b, m), p, max_cells, fresh)?;
                    (s, t)
                }
            };
            sources.push(s);
            targets.push(t);
        }
        let support = self.cells[a].support.union(&self.cells[b].support);
        let c = self.intern(
            Cell {
                support,
                dim,
                sources,
                targets,
                witness: Witness::Composite {
                    left: a,
                    right: b,
                    level: p,
                },
            },
            max_cells,
            fresh,
        )?;
        self.record(Composition {
            left: a,
            right: b,
            level: p,
            result: c,
        });
        Ok(c)
    }

    /// Composes two cells of the table, extending it if the composite is new.
    pub fn compose(&mut self, a: CellId, b: CellId, p: usize) -> Result<CellId, FreeOmegaError> {
        if self.target(a, p) != self.source(b, p) {
            return Err(FreeOmegaError::NotComposable {
                left: a,
                right: b,
                level: p,
            });
        }
        let mut fresh = Vec::new();
        match self.compose_into(a, b, p, usize::MAX, &mut fresh) {
            Ok(c) => Ok(c),
            Err(Stop::Fatal(e)) => Err(e),
            Err(Stop::Limit) => unreachable!("no cell limit"),
        }
    }

    /// `a *_p b` if it is defined and present in the table.
    pub fn composite(&self, a: CellId, b: CellId, p: usize) -> Option<CellId> {
        if self.target(a, p) != self.source(b, p) {
            return None;
        }
        if self.cells[a].dim <= p {
            return Some(b);
        }
        if self.cells[b].dim <= p {
            return Some(a);
        }
        self.composition_index.get(&(a, b, p)).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.cells[id]
    }

    pub fn dim(&self, id: CellId) -> usize {
        self.cells[id].dim
    }

    pub fn faces(&self) -> &[FaceInfo] {
        &self.faces
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    /// `s_m(id)`.
    pub fn source(&self, id: CellId, m: usize) -> CellId {
        self.cells[id].sources.get(m).copied().unwrap_or(id)
    }

    /// `t_m(id)`.
    pub fn target(&self, id: CellId, m: usize) -> CellId {
        self.cells[id].targets.get(m).copied().unwrap_or(id)
    }

    pub fn cells_of_dim(&self, d: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.cells.len()).filter(move |&i| self.cells[i].dim == d)
    }

    pub fn count_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim + 1];
        for c in &self.cells {
            counts[c.dim] += 1;
        }
        counts
    }

    pub fn find_support(&self, support: &Support) -> Option<CellId> {
        self.by_support.get(support).copied()
    }

    /// The cell whose support is exactly the named faces.
    pub fn find_by_names(&self, names: &[&str]) -> Option<CellId> {
        let mut s = Support::empty(self.faces.len());
        for n in names {
            s.insert(self.faces.iter().position(|f| f.name == *n)?);
        }
        self.find_support(&s)
    }

    pub fn support_names(&self, support: &Support) -> Vec<String> {
        let mut names: Vec<String> = support.iter().map(|i| self.faces[i].name.clone()).collect();
        names.sort();
        names
    }

    /// The support of `id` as sorted face names.
    pub fn cell_names(&self, id: CellId) -> Vec<String> {
        self.support_names(&self.cells[id].support)
    }

    /// A stable identifier for a cell derived from its support names.
    pub fn cell_hash(&self, id: CellId) -> String {
        let joined = self.cell_names(id).join("\u{1f}");
        let digest = Sha256::digest(joined.as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// Whether every cell of dimension at least 2 has 1-dimensional `s_1`
    /// and `t_1`.
    pub fn is_noncontracting(&self) -> bool {
        self.first_contracting().is_none()
    }

    pub fn first_contracting(&self) -> Option<CellId> {
        (0..self.cells.len()).find(|&x| {
            self.cells[x].dim >= 2
                && (self.dim(self.source(x, 1)) != 1 || self.dim(self.target(x, 1)) != 1)
        })
    }

    /// Renumbers cells: `perm[old] = new`.
    pub fn relabel(&self, perm: &[CellId]) -> Result<CellTable, FreeOmegaError> {
        let n = self.cells.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(FreeOmegaError::MalformedTable("relabelling is not a permutation".into()));
        }
        let mut slots: Vec<Option<Cell>> = vec![None; n];
        for (old, c) in self.cells.iter().enumerate() {
            let witness = match c.witness {
                Witness::Composite { left, right, level } => Witness::Composite {
                    left: perm[left],
                    right: perm[right],
                    level,
                },
                w => w,
            };
            slots[perm[old]] = Some(Cell {
                support: c.support.clone(),
                dim: c.dim,
                sources: c.sources.iter().map(|&x| perm[x]).collect(),
                targets: c.targets.iter().map(|&x| perm[x]).collect(),
                witness,
            });
        }
        let mut out = CellTable::empty(self.faces.clone(), self.max_dim);
        out.truncated = self.truncated;
        for c in slots {
            out.push_cell(c.expect("permutation is onto"))?;
        }
        for k in &self.compositions {
            out.record(Composition {
                left: perm[k.left],
                right: perm[k.right],
                level: k.level,
                result: perm[k.result],
            });
        }
        Ok(out)
    }

    pub(crate) fn from_parts(
        faces: Vec<FaceInfo>,
        max_dim: usize,
        truncated: bool,
        cells: Vec<(Support, usize, Vec<CellId>, Vec<CellId>, Witness)>,
        compositions: Vec<Composition>,
    ) -> Result<CellTable, FreeOmegaError> {
        let mut out = CellTable::empty(faces, max_dim);
        out.truncated = truncated;
        for (support, dim, sources, targets, witness) in cells {
            out.push_cell(Cell {
                support,
                dim,
                sources,
                targets,
                witness,
            })?;
        }
        for k in compositions {
            out.record(k);
        }
        Ok(out)
    }

    /// JSON listing of faces and cells; cells carry hashed identifiers and
    /// their support as sorted face names.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct FaceOut<'a> {
            name: &'a str,
            dim: usize,
        }
        #[derive(Serialize)]
        struct CellOut {
            id: String,
            dim: usize,
            support: Vec<String>,
            sources: Vec<String>,
            targets: Vec<String>,
        }
        #[derive(Serialize)]
        struct TableOut<'a> {
            version: &'a str,
            max_dim: usize,
            truncated: bool,
            counts: Vec<usize>,
            faces: Vec<FaceOut<'a>>,
            cells: Vec<CellOut>,
            compositions: usize,
        }
        let hashes: Vec<String> = (0..self.cells.len()).map(|i| self.cell_hash(i)).collect();
        let out = TableOut {
            version: FORMAT_VERSION,
            max_dim: self.max_dim,
            truncated: self.truncated,
            counts: self.count_by_dim(),
            faces: self
                .faces
                .iter()
                .map(|f| FaceOut {
                    name: &f.name,
                    dim: f.dim,
                })
                .collect(),
            cells: self
                .cells
                .iter()
                .enumerate()
                .map(|(i, c)| CellOut {
                    id: hashes[i].clone(),
                    dim: c.dim,
                    support: self.cell_names(i),
                    sources: c.sources.iter().map(|&x| hashes[x].clone()).collect(),
                    targets: c.targets.iter().map(|&x| hashes[x].clone()).collect(),
                })
                .collect(),
            compositions: self.compositions.len(),
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }

    /// One line per cell: id, dimension and support.
    pub fn listing(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.cells.iter().enumerate() {
            s.push_str(&format!("{i}\t{}\t{{{}}}\n", c.dim, self.cell_names(i).join(", ")));
        }
        s
    }
}

struct Generation {
    table: CellTable,
    max_cells: usize,
    fresh: Vec<CellId>,
    queue: VecDeque<CellId>,
    by_source: HashMap<(usize, CellId), Vec<CellId>>,
    by_target: HashMap<(usize, CellId), Vec<CellId>>,
}

impl Generation {
    fn add_atom(&mut self, complex: &GeneratorComplex, id: FaceId) -> Result<(), Stop> {
        let f = complex.face(id);
        let t = &mut self.table;
        let (sources, targets) = if f.dim == 0 {
            (Vec::new(), Vec::new())
        } else {
            let s = t.find_support(&complex.closure_of(&f.source));
            let u = t.find_support(&complex.closure_of(&f.target));
            let (s, u) = match (s, u) {
                (Some(s), Some(u)) => (s, u),
                _ if t.truncated => return Ok(()),
                _ => return Err(FreeOmegaError::AtomBoundaryMissing(f.name.clone()).into()),
            };
            let d = f.dim - 1;
            let globular = (0..d).all(|m| t.source(s, m) == t.source(u, m) && t.target(s, m) == t.target(u, m));
            if t.dim(s) != d || t.dim(u) != d || !globular {
                return Err(FreeOmegaError::MalformedComplex(format!(
                    "atom boundary of {} is not a pair of parallel cells",
                    f.name
                ))
                .into());
            }
            let mut sources: Vec<CellId> = (0..d).map(|m| t.source(s, m)).collect();
            let mut targets: Vec<CellId> = (0..d).map(|m| t.target(s, m)).collect();
            sources.push(s);
            targets.push(u);
            (sources, targets)
        };
        let cell = Cell {
            support: complex.closure(id).clone(),
            dim: f.dim,
            sources,
            targets,
            witness: Witness::Atom(id),
        };
        let r = t.intern(cell, self.max_cells, &mut self.fresh);
        self.queue.extend(self.fresh.drain(..));
        r.map(|_| ())
    }

    fn saturate(&mut self) -> Result<(), Stop> {
        if self.table.truncated {
            self.queue.clear();
            return Ok(());
        }
        while let Some(c) = self.queue.pop_front() {
            let dim = self.table.dim(c);
            for p in 0..dim {
                self.by_source.entry((p, self.table.source(c, p))).or_default().push(c);
                self.by_target.entry((p, self.table.target(c, p))).or_default().push(c);
            }
            for p in 0..dim {
                let right = self.by_source.get(&(p, self.table.target(c, p))).cloned().unwrap_or_default();
                for b in right {
                    self.step(c, b, p)?;
                }
                let left = self.by_target.get(&(p, self.table.source(c, p))).cloned().unwrap_or_default();
                for a in left {
                    self.step(a, c, p)?;
                }
            }
        }
        Ok(())
    }

    fn step(&mut self, a: CellId, b: CellId, p: usize) -> Result<(), Stop> {
        let r = self.table.compose_into(a, b, p, self.max_cells, &mut self.fresh);
        self.queue.extend(self.fresh.drain(..));
        match r {
            Ok(_) => Ok(()),
            Err(Stop::Limit) => {
                self.table.truncated = true;
                self.queue.clear();
                Err(Stop::Limit)
            }
            Err(e) => Err(e),
        }
    }
}

/// Builds small cell tables by hand, for tests and examples.
pub struct CellTableBuilder {
    table: CellTable,
}

impl CellTableBuilder {
    pub fn new(faces: &[(&str, usize)], max_dim: usize) -> Self {
        let faces = faces
            .iter()
            .map(|&(name, dim)| FaceInfo {
                name: name.to_string(),
                dim,
            })
            .collect();
        CellTableBuilder {
            table: CellTable::empty(faces, max_dim),
        }
    }

    pub fn cell(
        &mut self,
        support: &[&str],
        dim: usize,
        sources: Vec<CellId>,
        targets: Vec<CellId>,
    ) -> Result<CellId, FreeOmegaError> {
        let t = &mut self.table;
        if sources.len() != dim || targets.len() != dim {
            return Err(FreeOmegaError::MalformedTable(format!(
                "a {dim}-cell needs {dim} sources and targets"
            )));
        }
        if sources.iter().chain(&targets).any(|&x| x >= t.cells.len()) {
            return Err(FreeOmegaError::MalformedTable("boundary refers to an unknown cell".into()));
        }
        let mut s = Support::empty(t.faces.len());
        for n in support {
            let i = t
                .faces
                .iter()
                .position(|f| f.name == *n)
                .ok_or_else(|| FreeOmegaError::MalformedTable(format!("unknown face {n}")))?;
            s.insert(i);
        }
        t.push_cell(Cell {
            support: s,
            dim,
            sources,
            targets,
            witness: Witness::Given,
        })
    }

    pub fn composition(&mut self, left: CellId, right: CellId, level: usize, result: CellId) -> &mut Self {
        self.table.record(Composition {
            left,
            right,
            level,
            result,
        });
        self
    }

    pub fn build(self) -> CellTable {
        self.table
    }
}
