//! The generating faces `Π(K)` of a precubical set `K` and the free
//! ω-category they generate.
//!
//! A face of `K` is a pair `(x, w)` of a cube and a face word of the standard
//! cube, modulo `(∂_i^α x, w) ~ (x, w')` where `w'` is `w` with `α` inserted
//! at position `i`.

use std::collections::HashMap;

use super::generator::{CubeFace, GeneratorComplex, GeneratorFace, Letter};
use super::table::{CellTable, Limits};
use super::FreeOmegaError;
use crate::precubical::{CubeId, PrecubicalSet, Sign};
use crate::union_find::UnionFind;

/// One generating face of `Π(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiFace {
    /// The cube of `K` this face is (the member with an all-zero word).
    pub cube: CubeId,
    /// The least `(cube name, word)` pair of the class.
    pub representative: (CubeId, CubeFace),
    /// All pairs of the class, sorted by cube name and word.
    pub members: Vec<(CubeId, CubeFace)>,
}

/// `Π(K)` together with its cell table.
#[derive(Clone, Debug)]
pub struct Realization {
    pub complex: GeneratorComplex,
    pub faces: Vec<PiFace>,
    pub table: CellTable,
}

impl Realization {
    /// The generating face that is the cube `c`.
    pub fn face_of_cube(&self, c: CubeId) -> Option<usize> {
        self.faces.iter().position(|f| f.cube == c)
    }

    /// The 1-cell of the table consisting of the given edges, as a path.
    pub fn path_cell(&self, k: &PrecubicalSet, edges: &[CubeId]) -> Option<usize> {
        let mut names: Vec<&str> = Vec::new();
        for &e in edges {
            let (s, t) = k.endpoints(e)?;
            names.extend([k.name(s), k.name(e), k.name(t)]);
        }
        names.sort();
        names.dedup();
        self.table.find_by_names(&names)
    }
}

/// Builds the generating faces of `K`, ordered by dimension then
/// representative. Names are the names of the corresponding cubes.
pub fn pi_faces(k: &PrecubicalSet) -> Result<(GeneratorComplex, Vec<PiFace>), FreeOmegaError> {
    if let Some(v) = k.validate().first() {
        return Err(FreeOmegaError::InvalidComplex(v.to_string()));
    }
    if k.has_directed_cycle() {
        return Err(FreeOmegaError::CyclicSkeleton);
    }
    let mut pairs: Vec<(CubeId, CubeFace)> = Vec::new();
    for x in k.all_cubes() {
        for w in CubeFace::all(x.dim) {
            pairs.push((x, w));
        }
    }
    pairs.sort_by(|(x, w), (y, v)| k.name(*x).cmp(k.name(*y)).then_with(|| x.cmp(y)).then_with(|| w.cmp(v)));
    let index: HashMap<(CubeId, CubeFace), usize> =
        pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut uf = UnionFind::new(pairs.len());
    for x in k.all_cubes() {
        for i in 1..=x.dim {
            for alpha in Sign::BOTH {
                let y = k.face(x, i, alpha).expect("validated");
                for w in CubeFace::all(x.dim - 1) {
                    let lifted = w.inserted(i - 1, Letter::from(alpha));
                    uf.union(index[&(y, w)], index[&(x, lifted)]);
                }
            }
        }
    }
    let classes = uf.classes();
    let mut faces: Vec<PiFace> = Vec::with_capacity(classes.len());
    for class in &classes {
        let members: Vec<(CubeId, CubeFace)> = class.iter().map(|&i| pairs[i].clone()).collect();
        let mut cubes = members.iter().filter(|(x, w)| w.dim() == x.dim);
        let cube = match (cubes.next(), cubes.next()) {
            (Some((x, _)), None) => *x,
            _ => {
                return Err(FreeOmegaError::InvalidComplex(
                    "face identifications merge distinct cubes".into(),
                ))
            }
        };
        faces.push(PiFace {
            cube,
            representative: members[0].clone(),
            members,
        });
    }
    faces.sort_by(|a, b| {
        let (x, w) = &a.representative;
        let (y, v) = &b.representative;
        a.cube
            .dim
            .cmp(&b.cube.dim)
            .then_with(|| k.name(*x).cmp(k.name(*y)))
            .then_with(|| x.cmp(y))
            .then_with(|| w.cmp(v))
    });
    let mut face_of_root: HashMap<usize, usize> = HashMap::new();
    for (fid, f) in faces.iter().enumerate() {
        face_of_root.insert(uf.find(index[&f.representative]), fid);
    }
    let mut gen_faces = Vec::with_capacity(faces.len());
    for f in &faces {
        let (x, w) = &f.representative;
        let d = w.dim();
        let mut lookup = |w: CubeFace| face_of_root[&uf.find(index[&(*x, w)])];
        let mut source = Vec::with_capacity(d);
        let mut target = Vec::with_capacity(d);
        for i in 1..=d {
            source.push(lookup(w.replace_zero(i, Letter::alternating(i)).expect("zero")));
            target.push(lookup(w.replace_zero(i, Letter::alternating(i + 1)).expect("zero")));
        }
        gen_faces.push(GeneratorFace {
            name: k.name(f.cube).to_string(),
            dim: d,
            source,
            target,
        });
    }
    Ok((GeneratorComplex::new(gen_faces)?, faces))
}

/// The free ω-category on `Π(K)` up to `limits.max_dim`.
pub fn realize(k: &PrecubicalSet, limits: Limits) -> Result<Realization, FreeOmegaError> {
    let (complex, faces) = pi_faces(k)?;
    let table = CellTable::generate(&complex, limits)?;
    Ok(Realization { complex, faces, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precubical::{graph, path, standard_cube};

    #[test]
    fn standard_square_matches_cube_generators() {
        let r = realize(&standard_cube(2), Limits::new(2)).unwrap();
        assert_eq!(r.faces.len(), 9);
        assert_eq!(r.table.count_by_dim(), vec![4, 6, 1]);
    }

    #[test]
    fn face_rules_do_not_depend_on_the_member() {
        let k = standard_cube(3);
        let (complex, faces) = pi_faces(&k).unwrap();
        for (fid, f) in faces.iter().enumerate() {
            for (x, w) in &f.members {
                let d = w.dim();
                for i in 1..=d {
                    for (letter, expect) in [
                        (Letter::alternating(i), &complex.face(fid).source[i - 1]),
                        (Letter::alternating(i + 1), &complex.face(fid).target[i - 1]),
                    ] {
                        let w2 = w.replace_zero(i, letter).unwrap();
                        let owner = faces.iter().position(|g| g.members.contains(&(*x, w2.clone()))).unwrap();
                        assert_eq!(owner, *expect);
                    }
                }
            }
        }
    }

    #[test]
    fn path_of_two_edges() {
        let r = realize(&path(2), Limits::new(1)).unwrap();
        assert_eq!(r.table.count_by_dim(), vec![3, 3]);
    }

    #[test]
    fn cycles_are_rejected() {
        let k = graph(&["a", "b"], &[("f", "a", "b"), ("g", "b", "a")]);
        assert_eq!(pi_faces(&k).unwrap_err(), FreeOmegaError::CyclicSkeleton);
    }
}
