//! Globular, branching and merging nerves of a noncontracting cell table,
//! truncated to simplicial level 1.
//!
//! A level-0 simplex is a 1-cell of the table (a point of the path
//! ω-category `PC`), a level-1 simplex is a cell of dimension 1 or 2
//! (degenerate exactly when it has dimension 1). Faces of a level-1 simplex
//! `u` are `∂_0 u = s_1 u` and `∂_1 u = t_1 u`; the augmentation sends a
//! 1-cell `v` to `(s_0 v, t_0 v)`.
//!
//! The branching (merging) nerve is the same construction on the quotient of
//! `PC` by the congruence that identifies a path with its extensions to the
//! future (past).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::freeomega::{CellId, CellTable};
use crate::union_find::UnionFind;
use crate::FORMAT_VERSION;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NerveError {
    #[error("cell {0} is contracting: its 1-source or 1-target is a point")]
    Contracting(CellId),
    #[error("nerves are computed up to level 1, not {0}")]
    UnsupportedLevel(usize),
    #[error("level {level} needs cells of dimension {needed}, but the table stops at {available}")]
    InsufficientDimension {
        level: usize,
        needed: usize,
        available: usize,
    },
    #[error("the augmentation is not constant on congruence class {0}")]
    IllDefinedAugmentation(usize),
    #[error("face {face} is not well defined on congruence class {class}")]
    IllDefinedFace { class: usize, face: usize },
    #[error("operation needs a globular nerve")]
    NotGlobular,
    #[error("simplices do not meet: the final point of the first is not the initial point of the second")]
    EndpointMismatch,
    #[error("the composite of cells {0} and {1} along dimension 0 is not in the table")]
    MissingComposite(CellId, CellId),
    #[error("no simplex {index} at level {level}")]
    NoSuchSimplex { level: usize, index: usize },
}

/// A truncated augmented simplicial set `X_{-1}, X_0, ..., X_N`.
///
/// Simplices of each level are numbered `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedSimplicialSet {
    /// `|X_{-1}|`.
    pub points: usize,
    /// `|X_n|` for `n = 0..=N`.
    pub sizes: Vec<usize>,
    /// `∂_{-1}: X_0 -> X_{-1}`.
    pub augmentation: Vec<usize>,
    /// `faces[n - 1][i]` is `∂_i: X_n -> X_{n-1}` for `n >= 1`, `0 <= i <= n`.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][i]` is `ε_i: X_n -> X_{n+1}` for `n < N`, `0 <= i <= n`.
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl AugmentedSimplicialSet {
    /// The truncation level `N`.
    pub fn top(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n - 1][i][x]
    }

    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degeneracies[n][i][x]
    }

    /// Every failure of the simplicial and augmentation identities, as text.
    pub fn identity_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let top = self.top();
        if self.augmentation.len() != self.sizes[0] || self.augmentation.iter().any(|&p| p >= self.points) {
            out.push("augmentation has the wrong shape".to_string());
            return out;
        }
        for n in 1..=top {
            for i in 0..=n {
                let f = &self.faces[n - 1][i];
                if f.len() != self.sizes[n] || f.iter().any(|&y| y >= self.sizes[n - 1]) {
                    out.push(format!("face {i} on level {n} has the wrong shape"));
                    return out;
                }
            }
        }
        for n in 0..top {
            for i in 0..=n {
                let e = &self.degeneracies[n][i];
                if e.len() != self.sizes[n] || e.iter().any(|&y| y >= self.sizes[n + 1]) {
                    out.push(format!("degeneracy {i} on level {n} has the wrong shape"));
                    return out;
                }
            }
        }
        if top >= 1 {
            for x in 0..self.sizes[1] {
                let a = self.augmentation[self.face(1, 0, x)];
                let b = self.augmentation[self.face(1, 1, x)];
                if a != b {
                    out.push(format!("augmentation identity fails on level-1 simplex {x}"));
                }
            }
        }
        for n in 2..=top {
            for x in 0..self.sizes[n] {
                for j in 0..=n {
                    for i in 0..j {
                        if self.face(n - 1, i, self.face(n, j, x)) != self.face(n - 1, j - 1, self.face(n, i, x)) {
                            out.push(format!("∂_{i}∂_{j} fails on level-{n} simplex {x}"));
                        }
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for x in 0..self.sizes[n] {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                        let rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                        if lhs != rhs {
                            out.push(format!("ε_{i}ε_{j} fails on level-{n} simplex {x}"));
                        }
                    }
                }
            }
        }
        for n in 0..top {
            for x in 0..self.sizes[n] {
                for j in 0..=n {
                    let y = self.degeneracy(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i, y);
                        let rhs = if i == j || i == j + 1 {
                            Some(x)
                        } else if n == 0 {
                            None
                        } else if i < j {
                            Some(self.degeneracy(n - 1, j - 1, self.face(n, i, x)))
                        } else {
                            Some(self.degeneracy(n - 1, j, self.face(n, i - 1, x)))
                        };
                        if rhs.is_some_and(|r| r != lhs) {
                            out.push(format!("∂_{i}ε_{j} fails on level-{n} simplex {x}"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A map of truncated augmented simplicial sets, level by level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub points: Vec<usize>,
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    /// Whether the map commutes with faces, degeneracies and augmentation.
    pub fn is_simplicial(&self, from: &AugmentedSimplicialSet, to: &AugmentedSimplicialSet) -> bool {
        let top = from.top().min(to.top());
        (0..from.sizes[0]).all(|x| self.points[from.augmentation[x]] == to.augmentation[self.levels[0][x]])
            && (1..=top).all(|n| {
                (0..from.sizes[n]).all(|x| {
                    (0..=n).all(|i| self.levels[n - 1][from.face(n, i, x)] == to.face(n, i, self.levels[n][x]))
                })
            })
            && (0..top).all(|n| {
                (0..from.sizes[n]).all(|x| {
                    (0..=n).all(|i| {
                        self.levels[n + 1][from.degeneracy(n, i, x)] == to.degeneracy(n, i, self.levels[n][x])
                    })
                })
            })
    }

    fn onto(map: &[usize], size: usize) -> bool {
        let mut hit = vec![false; size];
        for &y in map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Surjective on every level `>= 0`.
    pub fn is_surjective(&self, to: &AugmentedSimplicialSet) -> bool {
        self.levels.iter().zip(&to.sizes).all(|(m, &s)| Self::onto(m, s))
    }

    /// Bijective on every level `>= 0`.
    pub fn is_bijective(&self, from: &AugmentedSimplicialSet, to: &AugmentedSimplicialSet) -> bool {
        from.sizes == to.sizes && self.is_surjective(to)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Paths are identified with their extensions to the future.
    Negative,
    /// Paths are identified with their extensions to the past.
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NerveKind {
    Globular,
    Branching,
    Merging,
}

impl NerveKind {
    pub fn name(self) -> &'static str {
        match self {
            NerveKind::Globular => "globular",
            NerveKind::Branching => "branching",
            NerveKind::Merging => "merging",
        }
    }
}

/// Which pairs of points form level -1 of the globular nerve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PointMode {
    /// All of `C_0 × C_0`.
    #[default]
    Full,
    /// Only pairs `(s_0 v, t_0 v)` of some 1-cell `v`.
    Realized,
}

/// An element of level -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Pair(CellId, CellId),
    Single(CellId),
}

/// What a simplex of level `>= 0` stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Payload {
    Cell(CellId),
    /// A congruence class of the nerve's quotient.
    Class(usize),
}

/// A congruence on the cells of `PC` generated by one polarity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTable {
    pub polarity: Polarity,
    /// Class of each cell of the table; `None` for 0-cells.
    pub class_of: Vec<Option<usize>>,
    /// Members of each class in increasing order; classes are ordered by
    /// their least member.
    pub classes: Vec<Vec<CellId>>,
    /// The generating pairs taken from `*_0` composites of the table.
    pub witnesses: Vec<(CellId, CellId)>,
    pub truncated: bool,
}

impl QuotientTable {
    pub fn representative(&self, class: usize) -> CellId {
        self.classes[class][0]
    }

    pub fn same_class(&self, a: CellId, b: CellId) -> bool {
        self.class_of[a].is_some() && self.class_of[a] == self.class_of[b]
    }
}

fn check_noncontracting(table: &CellTable) -> Result<(), NerveError> {
    match table.first_contracting() {
        Some(x) => Err(NerveError::Contracting(x)),
        None => Ok(()),
    }
}

fn check_level(table: &CellTable, level: usize) -> Result<(), NerveError> {
    if level > 1 {
        return Err(NerveError::UnsupportedLevel(level));
    }
    if table.max_dim() < level + 1 {
        return Err(NerveError::InsufficientDimension {
            level,
            needed: level + 1,
            available: table.max_dim(),
        });
    }
    Ok(())
}

/// The congruence on `PC` generated by `(x, x *_0 y)` (negative) or
/// `(y, x *_0 y)` (positive) for the composites present in the table, closed
/// under boundaries `s_n`, `t_n` (`n >= 1`) and under compositions along
/// every `p >= 1`.
pub fn semi_quotient(table: &CellTable, polarity: Polarity) -> Result<QuotientTable, NerveError> {
    check_noncontracting(table)?;
    let n = table.len();
    let mut uf = UnionFind::new(n);
    let mut witnesses = Vec::new();
    for k in table.compositions() {
        if k.level == 0 {
            let x = match polarity {
                Polarity::Negative => k.left,
                Polarity::Positive => k.right,
            };
            witnesses.push((x, k.result));
            uf.union(x, k.result);
        }
    }
    let top = table.max_dim();
    let mut triples: Vec<(usize, CellId, CellId, CellId)> = Vec::new();
    for p in 1..top {
        for x in 0..n {
            let d = table.dim(x);
            if d == 0 {
                continue;
            }
            if d <= p {
                triples.push((p, x, x, x));
            } else {
                triples.push((p, table.source(x, p), x, x));
                triples.push((p, x, table.target(x, p), x));
            }
        }
    }
    triples.extend(
        table
            .compositions()
            .iter()
            .filter(|k| k.level >= 1)
            .map(|k| (k.level, k.left, k.right, k.result)),
    );
    loop {
        let mut changed = false;
        for x in 0..n {
            for m in 1..table.dim(x) {
                let r = uf.find(x);
                if r != x {
                    changed |= uf.union(table.source(x, m), table.source(r, m));
                    changed |= uf.union(table.target(x, m), table.target(r, m));
                }
            }
        }
        let mut seen: HashMap<(usize, usize, usize), CellId> = HashMap::new();
        for &(p, a, b, c) in &triples {
            let key = (p, uf.find(a), uf.find(b));
            match seen.get(&key) {
                Some(&c0) => changed |= uf.union(c0, c),
                None => {
                    seen.insert(key, c);
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut class_of = vec![None; n];
    let mut classes = Vec::new();
    for members in uf.classes() {
        if table.dim(members[0]) == 0 {
            continue;
        }
        for &m in &members {
            class_of[m] = Some(classes.len());
        }
        classes.push(members);
    }
    Ok(QuotientTable {
        polarity,
        class_of,
        classes,
        witnesses,
        truncated: table.is_truncated(),
    })
}

/// A nerve together with what its simplices stand for.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub kind: NerveKind,
    pub set: AugmentedSimplicialSet,
    pub points: Vec<Point>,
    /// `payloads[n][x]` for levels `n >= 0`.
    pub payloads: Vec<Vec<Payload>>,
    pub quotient: Option<QuotientTable>,
    pub truncated: bool,
}

impl Nerve {
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut v = vec![self.set.points];
        v.extend(&self.set.sizes);
        v
    }

    /// Index of the simplex carrying `cell` at `level` (for globular nerves).
    pub fn simplex_of_cell(&self, level: usize, cell: CellId) -> Option<usize> {
        self.payloads.get(level)?.iter().position(|p| *p == Payload::Cell(cell))
    }

    fn cell(&self, level: usize, x: usize) -> Result<CellId, NerveError> {
        match self.payloads.get(level).and_then(|l| l.get(x)) {
            Some(Payload::Cell(c)) => Ok(*c),
            Some(Payload::Class(_)) => Err(NerveError::NotGlobular),
            None => Err(NerveError::NoSuchSimplex { level, index: x }),
        }
    }

    /// JSON export with level sizes, payloads (cell hashes or class member
    /// hashes) and the face, degeneracy and augmentation tables.
    pub fn to_json(&self, table: &CellTable) -> String {
        #[derive(Serialize)]
        struct LevelOut {
            level: usize,
            payloads: Vec<Vec<String>>,
            faces: Vec<Vec<usize>>,
            degeneracies: Vec<Vec<usize>>,
        }
        #[derive(Serialize)]
        struct NerveOut {
            version: &'static str,
            kind: &'static str,
            truncated: bool,
            sizes: Vec<usize>,
            points: Vec<Vec<String>>,
            augmentation: Vec<usize>,
            levels: Vec<LevelOut>,
        }
        let hash = |c: CellId| table.cell_hash(c);
        let points = self
            .points
            .iter()
            .map(|p| match *p {
                Point::Pair(a, b) => vec![hash(a), hash(b)],
                Point::Single(a) => vec![hash(a)],
            })
            .collect();
        let levels = (0..=self.set.top())
            .map(|n| LevelOut {
                level: n,
                payloads: self.payloads[n]
                    .iter()
                    .map(|p| match *p {
                        Payload::Cell(c) => vec![hash(c)],
                        Payload::Class(k) => self.quotient.as_ref().expect("class payloads have a quotient").classes[k]
                            .iter()
                            .map(|&c| hash(c))
                            .collect(),
                    })
                    .collect(),
                faces: if n == 0 { Vec::new() } else { self.set.faces[n - 1].clone() },
                degeneracies: self.set.degeneracies.get(n).cloned().unwrap_or_default(),
            })
            .collect();
        let out = NerveOut {
            version: FORMAT_VERSION,
            kind: self.kind.name(),
            truncated: self.truncated,
            sizes: self.level_sizes(),
            points,
            augmentation: self.set.augmentation.clone(),
            levels,
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }
}

/// The globular nerve truncated at `level` (0 or 1).
pub fn globular_nerve(table: &CellTable, level: usize, mode: PointMode) -> Result<Nerve, NerveError> {
    check_noncontracting(table)?;
    check_level(table, level)?;
    let zero: Vec<CellId> = table.cells_of_dim(0).collect();
    let ones: Vec<CellId> = table.cells_of_dim(1).collect();
    let points: Vec<Point> = match mode {
        PointMode::Full => zero
            .iter()
            .flat_map(|&a| zero.iter().map(move |&b| Point::Pair(a, b)))
            .collect(),
        PointMode::Realized => {
            let mut v: Vec<Point> = ones
                .iter()
                .map(|&e| Point::Pair(table.source(e, 0), table.target(e, 0)))
                .collect();
            v.sort();
            v.dedup();
            v
        }
    };
    let point_index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let augmentation = ones
        .iter()
        .map(|&e| point_index[&Point::Pair(table.source(e, 0), table.target(e, 0))])
        .collect();
    let mut payloads = vec![ones.iter().map(|&c| Payload::Cell(c)).collect::<Vec<_>>()];
    let mut sizes = vec![ones.len()];
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    if level >= 1 {
        let index0: HashMap<CellId, usize> = ones.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let level1: Vec<CellId> = ones.iter().copied().chain(table.cells_of_dim(2)).collect();
        faces.push(vec![
            level1.iter().map(|&u| index0[&table.source(u, 1)]).collect(),
            level1.iter().map(|&u| index0[&table.target(u, 1)]).collect(),
        ]);
        degeneracies.push(vec![(0..ones.len()).collect()]);
        sizes.push(level1.len());
        payloads.push(level1.iter().map(|&c| Payload::Cell(c)).collect());
    }
    Ok(Nerve {
        kind: NerveKind::Globular,
        set: AugmentedSimplicialSet {
            points: points.len(),
            sizes,
            augmentation,
            faces,
            degeneracies,
        },
        points,
        payloads,
        quotient: None,
        truncated: table.is_truncated(),
    })
}

fn semi_nerve(table: &CellTable, level: usize, polarity: Polarity) -> Result<Nerve, NerveError> {
    check_noncontracting(table)?;
    check_level(table, level)?;
    let q = semi_quotient(table, polarity)?;
    let zero: Vec<CellId> = table.cells_of_dim(0).collect();
    let zero_index: HashMap<CellId, usize> = zero.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let has_dim = |k: usize, d: usize| q.classes[k].iter().any(|&c| table.dim(c) <= d);
    let level0: Vec<usize> = (0..q.classes.len()).filter(|&k| has_dim(k, 1)).collect();
    let index0: HashMap<usize, usize> = level0.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut augmentation = Vec::with_capacity(level0.len());
    for &k in &level0 {
        let end = |c: CellId| match polarity {
            Polarity::Negative => table.source(c, 0),
            Polarity::Positive => table.target(c, 0),
        };
        let a = end(q.classes[k][0]);
        if q.classes[k].iter().any(|&c| end(c) != a) {
            return Err(NerveError::IllDefinedAugmentation(k));
        }
        augmentation.push(zero_index[&a]);
    }
    let mut payloads = vec![level0.iter().map(|&k| Payload::Class(k)).collect::<Vec<_>>()];
    let mut sizes = vec![level0.len()];
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    if level >= 1 {
        let level1: Vec<usize> = level0
            .iter()
            .copied()
            .chain((0..q.classes.len()).filter(|&k| has_dim(k, 2) && !has_dim(k, 1)))
            .collect();
        let mut f = vec![Vec::with_capacity(level1.len()), Vec::with_capacity(level1.len())];
        for &k in &level1 {
            for (i, fi) in f.iter_mut().enumerate() {
                let face_class = |c: CellId| {
                    let b = if i == 0 { table.source(c, 1) } else { table.target(c, 1) };
                    q.class_of[b].expect("positive dimension")
                };
                let members: Vec<CellId> = q.classes[k].iter().copied().filter(|&c| table.dim(c) <= 2).collect();
                let first = face_class(members[0]);
                if members.iter().any(|&c| face_class(c) != first) {
                    return Err(NerveError::IllDefinedFace { class: k, face: i });
                }
                fi.push(index0[&first]);
            }
        }
        faces.push(f);
        degeneracies.push(vec![(0..level0.len()).collect()]);
        sizes.push(level1.len());
        payloads.push(level1.iter().map(|&k| Payload::Class(k)).collect());
    }
    Ok(Nerve {
        kind: match polarity {
            Polarity::Negative => NerveKind::Branching,
            Polarity::Positive => NerveKind::Merging,
        },
        set: AugmentedSimplicialSet {
            points: zero.len(),
            sizes,
            augmentation,
            faces,
            degeneracies,
        },
        points: zero.into_iter().map(Point::Single).collect(),
        payloads,
        quotient: Some(q),
        truncated: table.is_truncated(),
    })
}

/// The branching (negative semi-globular) nerve truncated at `level`.
pub fn branching_nerve(table: &CellTable, level: usize) -> Result<Nerve, NerveError> {
    semi_nerve(table, level, Polarity::Negative)
}

/// The merging (positive semi-globular) nerve truncated at `level`.
pub fn merging_nerve(table: &CellTable, level: usize) -> Result<Nerve, NerveError> {
    semi_nerve(table, level, Polarity::Positive)
}

/// The quotient map from the globular nerve onto a branching or merging
/// nerve of the same table and level.
pub fn h_map(globular: &Nerve, semi: &Nerve) -> Result<SimplicialMap, NerveError> {
    if globular.kind != NerveKind::Globular {
        return Err(NerveError::NotGlobular);
    }
    let q = semi.quotient.as_ref().ok_or(NerveError::NotGlobular)?;
    let single: HashMap<CellId, usize> = semi
        .points
        .iter()
        .enumerate()
        .filter_map(|(i, p)| match p {
            Point::Single(a) => Some((*a, i)),
            Point::Pair(..) => None,
        })
        .collect();
    let points = globular
        .points
        .iter()
        .map(|p| match (*p, q.polarity) {
            (Point::Pair(a, _), Polarity::Negative) | (Point::Pair(_, a), Polarity::Positive) => single[&a],
            (Point::Single(a), _) => single[&a],
        })
        .collect();
    let levels = (0..=globular.set.top().min(semi.set.top()))
        .map(|n| {
            let index: HashMap<usize, usize> = semi.payloads[n]
                .iter()
                .enumerate()
                .filter_map(|(i, p)| match p {
                    Payload::Class(k) => Some((*k, i)),
                    Payload::Cell(_) => None,
                })
                .collect();
            globular.payloads[n]
                .iter()
                .map(|p| match p {
                    Payload::Cell(c) => index[&q.class_of[*c].expect("positive dimension")],
                    Payload::Class(_) => unreachable!("globular payloads are cells"),
                })
                .collect()
        })
        .collect();
    Ok(SimplicialMap { points, levels })
}

/// `h⁻` and `h⁺` for one table.
pub fn h_maps(table: &CellTable, level: usize, mode: PointMode) -> Result<(SimplicialMap, SimplicialMap), NerveError> {
    let g = globular_nerve(table, level, mode)?;
    let minus = h_map(&g, &branching_nerve(table, level)?)?;
    let plus = h_map(&g, &merging_nerve(table, level)?)?;
    Ok((minus, plus))
}

/// The part of a globular nerve over one pair of endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponent {
    pub pair: (CellId, CellId),
    /// Index of the pair in the nerve's level -1.
    pub point: usize,
    /// Nerve over the pair, with the single point `(α, β)` at level -1.
    pub set: AugmentedSimplicialSet,
    /// `members[n][x]` is the index in the input of simplex `x` at level `n`.
    pub members: Vec<Vec<usize>>,
}

/// Splits a globular nerve by the endpoints `(S(x), T(x))` of its simplices.
/// Components appear in the order of their pairs at level -1.
pub fn grade(nerve: &Nerve) -> Result<Vec<GradedComponent>, NerveError> {
    if nerve.kind != NerveKind::Globular {
        return Err(NerveError::NotGlobular);
    }
    let set = &nerve.set;
    let top = set.top();
    // The point of a simplex is the point of any of its vertices.
    let mut point_of: Vec<Vec<usize>> = vec![set.augmentation.clone()];
    for n in 1..=top {
        point_of.push((0..set.sizes[n]).map(|x| point_of[n - 1][set.face(n, 0, x)]).collect());
    }
    let mut out = Vec::new();
    for (p, point) in nerve.points.iter().enumerate() {
        let members: Vec<Vec<usize>> = (0..=top)
            .map(|n| (0..set.sizes[n]).filter(|&x| point_of[n][x] == p).collect())
            .collect();
        if members[0].is_empty() {
            continue;
        }
        let local: Vec<HashMap<usize, usize>> = members
            .iter()
            .map(|m| m.iter().enumerate().map(|(i, &x)| (x, i)).collect())
            .collect();
        let faces = (1..=top)
            .map(|n| {
                (0..=n)
                    .map(|i| members[n].iter().map(|&x| local[n - 1][&set.face(n, i, x)]).collect())
                    .collect()
            })
            .collect();
        let degeneracies = (0..top)
            .map(|n| {
                (0..=n)
                    .map(|i| members[n].iter().map(|&x| local[n + 1][&set.degeneracy(n, i, x)]).collect())
                    .collect()
            })
            .collect();
        let pair = match *point {
            Point::Pair(a, b) => (a, b),
            Point::Single(a) => (a, a),
        };
        out.push(GradedComponent {
            pair,
            point: p,
            set: AugmentedSimplicialSet {
                points: 1,
                sizes: members.iter().map(Vec::len).collect(),
                augmentation: vec![0; members[0].len()],
                faces,
                degeneracies,
            },
            members,
        });
    }
    Ok(out)
}

/// Puts graded components back together over `points` elements at level -1.
pub fn reassemble(components: &[GradedComponent], points: usize) -> AugmentedSimplicialSet {
    let top = components.first().map_or(0, |c| c.set.top());
    let sizes: Vec<usize> = (0..=top)
        .map(|n| components.iter().map(|c| c.members[n].len()).sum())
        .collect();
    let mut augmentation = vec![0; sizes[0]];
    let mut faces: Vec<Vec<Vec<usize>>> = (1..=top).map(|n| vec![vec![0; sizes[n]]; n + 1]).collect();
    let mut degeneracies: Vec<Vec<Vec<usize>>> = (0..top).map(|n| vec![vec![0; sizes[n]]; n + 1]).collect();
    for c in components {
        for &g in &c.members[0] {
            augmentation[g] = c.point;
        }
        for n in 1..=top {
            for i in 0..=n {
                for (x, &g) in c.members[n].iter().enumerate() {
                    faces[n - 1][i][g] = c.members[n - 1][c.set.face(n, i, x)];
                }
            }
        }
        for n in 0..top {
            for i in 0..=n {
                for (x, &g) in c.members[n].iter().enumerate() {
                    degeneracies[n][i][g] = c.members[n + 1][c.set.degeneracy(n, i, x)];
                }
            }
        }
    }
    AugmentedSimplicialSet {
        points,
        sizes,
        augmentation,
        faces,
        degeneracies,
    }
}

/// `S(x)` and `T(x)`: the endpoints of a globular simplex.
pub fn endpoints(nerve: &Nerve, table: &CellTable, level: usize, x: usize) -> Result<(CellId, CellId), NerveError> {
    let c = nerve.cell(level, x)?;
    Ok((table.source(c, 0), table.target(c, 0)))
}

/// Pointwise `*_0` composite of two globular simplices of the same level.
pub fn simplex_compose(
    nerve: &Nerve,
    table: &CellTable,
    level: usize,
    x: usize,
    y: usize,
) -> Result<usize, NerveError> {
    let (a, b) = (nerve.cell(level, x)?, nerve.cell(level, y)?);
    if table.target(a, 0) != table.source(b, 0) {
        return Err(NerveError::EndpointMismatch);
    }
    let c = table.composite(a, b, 0).ok_or(NerveError::MissingComposite(a, b))?;
    nerve.simplex_of_cell(level, c).ok_or(NerveError::MissingComposite(a, b))
}
