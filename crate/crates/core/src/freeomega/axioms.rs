//! Exhaustive check of the strict ω-category axioms on a cell table.
//!
//! Composites are looked up, never recomputed, so the check is independent of
//! how the table was produced. Instances whose composites fall outside a
//! truncated table are skipped.

use std::collections::HashMap;
use std::fmt;

use super::table::{CellId, CellTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `d_m^β d_n^α x` differs from `d_min(m,n) x` with the matching sign.
    Globularity { cell: CellId, m: usize, n: usize },
    /// `s_n x *_n x` or `x *_n t_n x` is not `x`.
    Identity { cell: CellId, n: usize },
    /// A boundary of `x *_n y` is not what composition prescribes.
    Boundary { left: CellId, right: CellId, n: usize, m: usize },
    /// `(x *_n y) *_n z` differs from `x *_n (y *_n z)`.
    Associativity { x: CellId, y: CellId, z: CellId, n: usize },
    /// `(x *_n y) *_m (z *_n w)` differs from `(x *_m z) *_n (y *_m w)`.
    Interchange { x: CellId, y: CellId, z: CellId, w: CellId, n: usize, m: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Globularity { cell, m, n } => {
                write!(f, "globularity fails for cell {cell} at ({m}, {n})")
            }
            AxiomViolation::Identity { cell, n } => write!(f, "identity law fails for cell {cell} along {n}"),
            AxiomViolation::Boundary { left, right, n, m } => {
                write!(f, "boundary {m} of {left} *_{n} {right} is wrong")
            }
            AxiomViolation::Associativity { x, y, z, n } => {
                write!(f, "associativity fails for {x}, {y}, {z} along {n}")
            }
            AxiomViolation::Interchange { x, y, z, w, n, m } => {
                write!(f, "interchange fails for {x}, {y}, {z}, {w} along {n} and {m}")
            }
        }
    }
}

/// Number of instances checked for each of the five axioms, and the failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub globularity: usize,
    pub identity: usize,
    pub boundary: usize,
    pub associativity: usize,
    pub interchange: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All composable pairs along `n`, including those where one side is an
/// identity, as `(x, y, x *_n y)`.
fn composable_pairs(t: &CellTable, n: usize) -> Vec<(CellId, CellId, CellId)> {
    let mut out = Vec::new();
    for x in 0..t.len() {
        if t.dim(x) <= n {
            out.push((x, x, x));
        } else {
            out.push((t.source(x, n), x, x));
            out.push((x, t.target(x, n), x));
        }
    }
    for k in t.compositions() {
        if k.level == n {
            out.push((k.left, k.right, k.result));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn check_axioms(t: &CellTable) -> AxiomReport {
    let mut r = AxiomReport::default();
    let top = t.max_dim() + 1;

    for x in 0..t.len() {
        for m in 0..=top {
            for n in 0..=top {
                r.globularity += 4;
                let ok = t.source(t.source(x, n), m) == if m < n { t.source(x, m) } else { t.source(x, n) }
                    && t.target(t.source(x, n), m) == if m < n { t.target(x, m) } else { t.source(x, n) }
                    && t.source(t.target(x, n), m) == if m < n { t.source(x, m) } else { t.target(x, n) }
                    && t.target(t.target(x, n), m) == if m < n { t.target(x, m) } else { t.target(x, n) };
                if !ok {
                    r.violations.push(AxiomViolation::Globularity { cell: x, m, n });
                }
            }
        }
        for n in 0..=top {
            r.identity += 2;
            if t.composite(t.source(x, n), x, n) != Some(x) || t.composite(x, t.target(x, n), n) != Some(x) {
                r.violations.push(AxiomViolation::Identity { cell: x, n });
            }
        }
    }

    for k in t.compositions() {
        let (x, y, n, c) = (k.left, k.right, k.level, k.result);
        for m in 0..=top {
            r.boundary += 1;
            let ok = match m.cmp(&n) {
                std::cmp::Ordering::Less => {
                    t.source(c, m) == t.source(x, m) && t.target(c, m) == t.target(x, m)
                }
                std::cmp::Ordering::Equal => t.source(c, n) == t.source(x, n) && t.target(c, n) == t.target(y, n),
                std::cmp::Ordering::Greater => {
                    let s = t.composite(t.source(x, m), t.source(y, m), n);
                    let u = t.composite(t.target(x, m), t.target(y, m), n);
                    match (s, u) {
                        (Some(s), Some(u)) => t.source(c, m) == s && t.target(c, m) == u,
                        _ if t.is_truncated() => true,
                        _ => false,
                    }
                }
            };
            if !ok {
                r.violations.push(AxiomViolation::Boundary { left: x, right: y, n, m });
            }
        }
    }

    let mut pairs = Vec::with_capacity(top);
    let mut by_source: Vec<HashMap<CellId, Vec<CellId>>> = Vec::with_capacity(top);
    for n in 0..top {
        pairs.push(composable_pairs(t, n));
        let mut idx: HashMap<CellId, Vec<CellId>> = HashMap::new();
        for z in 0..t.len() {
            idx.entry(t.source(z, n)).or_default().push(z);
        }
        by_source.push(idx);
    }

    for n in 0..top {
        for &(x, y, xy) in &pairs[n] {
            for &z in by_source[n].get(&t.target(y, n)).map(Vec::as_slice).unwrap_or(&[]) {
                let Some(yz) = t.composite(y, z, n) else {
                    continue;
                };
                r.associativity += 1;
                match (t.composite(xy, z, n), t.composite(x, yz, n)) {
                    (Some(a), Some(b)) if a == b => {}
                    (Some(_), Some(_)) => r.violations.push(AxiomViolation::Associativity { x, y, z, n }),
                    _ if t.is_truncated() => {}
                    _ => r.violations.push(AxiomViolation::Associativity { x, y, z, n }),
                }
            }
        }
    }

    for n in 0..top {
        for m in 0..top {
            if m == n {
                continue;
            }
            for &(x, y, xy) in &pairs[n] {
                for &z in by_source[m].get(&t.target(x, m)).map(Vec::as_slice).unwrap_or(&[]) {
                    let Some(xz) = t.composite(x, z, m) else {
                        continue;
                    };
                    for &w in by_source[n].get(&t.target(z, n)).map(Vec::as_slice).unwrap_or(&[]) {
                        if t.source(w, m) != t.target(y, m) {
                            continue;
                        }
                        let (Some(zw), Some(yw)) = (t.composite(z, w, n), t.composite(y, w, m)) else {
                            continue;
                        };
                        r.interchange += 1;
                        match (t.composite(xy, zw, m), t.composite(xz, yw, n)) {
                            (Some(a), Some(b)) if a == b => {}
                            _ if t.is_truncated() => {}
                            _ => r.violations.push(AxiomViolation::Interchange { x, y, z, w, n, m }),
                        }
                    }
                }
            }
        }
    }
    r
}
