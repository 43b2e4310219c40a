//! Suspension of a cell table by two fresh points, and its inverse on
//! noncontracting tables: the ω-category of 1-cells between points.

use super::support::Support;
use super::table::{CellId, CellTable, Composition, FaceInfo, Witness};
use super::FreeOmegaError;

/// Name of the fresh initial point added by [`glob`].
pub const GLOBE_SOURCE: &str = "ι";
/// Name of the fresh final point added by [`glob`].
pub const GLOBE_SINK: &str = "σ";

fn fresh_name(base: &str, taken: &[FaceInfo]) -> String {
    let mut name = base.to_string();
    while taken.iter().any(|f| f.name == name) {
        name.push('\'');
    }
    name
}

/// `glob(T)`: two fresh 0-cells `ι`, `σ` (cells 0 and 1) followed by every
/// cell of `T` raised by one dimension, with `s_0 = ι` and `t_0 = σ`.
/// Compositions along `p` become compositions along `p + 1`.
pub fn glob(inner: &CellTable) -> CellTable {
    let iota = fresh_name(GLOBE_SOURCE, inner.faces());
    let sigma = fresh_name(GLOBE_SINK, inner.faces());
    let mut faces = vec![FaceInfo { name: iota, dim: 0 }, FaceInfo { name: sigma, dim: 0 }];
    faces.extend(inner.faces().iter().map(|f| FaceInfo {
        name: f.name.clone(),
        dim: f.dim + 1,
    }));
    let universe = faces.len();
    let mut cells = vec![
        (Support::from_indices(universe, [0]), 0, vec![], vec![], Witness::Atom(0)),
        (Support::from_indices(universe, [1]), 0, vec![], vec![], Witness::Atom(1)),
    ];
    for (id, c) in inner.cells().iter().enumerate() {
        let mut support = c.support().remap(universe, |i| Some(i + 2));
        support.insert(0);
        support.insert(1);
        let id_shift = |x: CellId| x + 2;
        let mut sources = vec![0];
        let mut targets = vec![1];
        for m in 0..c.dim() {
            sources.push(id_shift(inner.source(id, m)));
            targets.push(id_shift(inner.target(id, m)));
        }
        let witness = match c.witness() {
            Witness::Atom(f) => Witness::Atom(f + 2),
            Witness::Composite { left, right, level } => Witness::Composite {
                left: left + 2,
                right: right + 2,
                level: level + 1,
            },
            Witness::Given => Witness::Given,
        };
        cells.push((support, c.dim() + 1, sources, targets, witness));
    }
    let compositions = inner
        .compositions()
        .iter()
        .map(|k| Composition {
            left: k.left + 2,
            right: k.right + 2,
            level: k.level + 1,
            result: k.result + 2,
        })
        .collect();
    CellTable::from_parts(faces, inner.max_dim() + 1, inner.is_truncated(), cells, compositions)
        .expect("suspension keeps supports distinct")
}

/// The path part `PC`: the 1-cells of `C` as points, the higher cells one
/// dimension lower, and the compositions along `p >= 1` as compositions
/// along `p - 1`. Requires `C` to be noncontracting.
pub fn path_part(table: &CellTable) -> Result<CellTable, FreeOmegaError> {
    if let Some(x) = table.first_contracting() {
        return Err(FreeOmegaError::Contracting(x));
    }
    let mut face_map = vec![None; table.faces().len()];
    let mut faces = Vec::new();
    for (i, f) in table.faces().iter().enumerate() {
        if f.dim >= 1 {
            face_map[i] = Some(faces.len());
            faces.push(FaceInfo {
                name: f.name.clone(),
                dim: f.dim - 1,
            });
        }
    }
    let universe = faces.len();
    let mut cell_map = vec![None; table.len()];
    let mut next = 0;
    for (i, c) in table.cells().iter().enumerate() {
        if c.dim() >= 1 {
            cell_map[i] = Some(next);
            next += 1;
        }
    }
    let m = |x: CellId| cell_map[x].expect("positive-dimensional boundary");
    let mut cells = Vec::with_capacity(next);
    for (i, c) in table.cells().iter().enumerate() {
        if c.dim() == 0 {
            continue;
        }
        let support = c.support().remap(universe, |f| face_map[f]);
        let sources = (1..c.dim()).map(|k| m(table.source(i, k))).collect();
        let targets = (1..c.dim()).map(|k| m(table.target(i, k))).collect();
        let witness = match c.witness() {
            Witness::Atom(f) => Witness::Atom(face_map[f].expect("positive-dimensional atom")),
            Witness::Composite { left, right, level } if level >= 1 => Witness::Composite {
                left: m(left),
                right: m(right),
                level: level - 1,
            },
            _ => Witness::Given,
        };
        cells.push((support, c.dim() - 1, sources, targets, witness));
    }
    let compositions = table
        .compositions()
        .iter()
        .filter(|k| k.level >= 1)
        .map(|k| Composition {
            left: m(k.left),
            right: m(k.right),
            level: k.level - 1,
            result: m(k.result),
        })
        .collect();
    CellTable::from_parts(
        faces,
        table.max_dim().saturating_sub(1),
        table.is_truncated(),
        cells,
        compositions,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeomega::{realize, GeneratorComplex, Limits};
    use crate::precubical::path;

    #[test]
    fn path_part_of_glob_is_identity() {
        for t in [
            CellTable::generate(&GeneratorComplex::cube(2), Limits::new(2)).unwrap(),
            CellTable::generate(&GeneratorComplex::simplex(3), Limits::new(3)).unwrap(),
        ] {
            let g = glob(&t);
            assert_eq!(g.len(), t.len() + 2);
            assert_eq!(g.max_dim(), t.max_dim() + 1);
            assert!(g.is_noncontracting());
            assert_eq!(path_part(&g).unwrap(), t);
        }
    }

    #[test]
    fn path_part_of_two_edge_path() {
        let r = realize(&path(2), Limits::new(1)).unwrap();
        let pc = path_part(&r.table).unwrap();
        assert_eq!(pc.count_by_dim(), vec![3]);
        assert!(pc.compositions().is_empty());
    }

    #[test]
    fn contracting_tables_have_no_path_part() {
        let mut b = crate::freeomega::CellTableBuilder::new(&[("x", 0), ("f", 2)], 2);
        let x = b.cell(&["x"], 0, vec![], vec![]).unwrap();
        let f = b.cell(&["x", "f"], 2, vec![x, x], vec![x, x]).unwrap();
        let t = b.build();
        assert_eq!(t.first_contracting(), Some(f));
        assert_eq!(path_part(&t), Err(FreeOmegaError::Contracting(f)));
    }
}
