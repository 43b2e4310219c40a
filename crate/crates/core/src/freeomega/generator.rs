//! Generating faces for free ω-categories: simplices, cubes and arbitrary
//! finite complexes given by per-face source and target sets.

use std::fmt;
use std::str::FromStr;

use super::support::Support;
use super::FreeOmegaError;

pub type FaceId = usize;

/// A face of the standard simplex, as a strictly increasing vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexFace(Vec<usize>);

impl SimplexFace {
    pub fn new(vertices: Vec<usize>) -> Result<Self, FreeOmegaError> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FreeOmegaError::BadSimplexFace(vertices));
        }
        Ok(SimplexFace(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    fn without(&self, pos: usize) -> SimplexFace {
        let mut v = self.0.clone();
        v.remove(pos);
        SimplexFace(v)
    }
}

impl fmt::Display for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&v| v > 9) { "," } else { "" };
        let body: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", body.join(sep))
    }
}

/// Atom source and target of a simplex face of dimension at least 1.
///
/// The source drops the vertex at each odd 1-based position, the target drops
/// the vertex at each even position. Edges therefore run from the larger
/// vertex to the smaller one.
pub fn simplex_atom_source_target(
    x: &SimplexFace,
) -> Result<(Vec<SimplexFace>, Vec<SimplexFace>), FreeOmegaError> {
    if x.dim() == 0 {
        return Err(FreeOmegaError::ZeroDimensional(x.to_string()));
    }
    let len = x.0.len();
    let source = (0..len).step_by(2).map(|p| x.without(p)).collect();
    let target = (1..len).step_by(2).map(|p| x.without(p)).collect();
    Ok((source, target))
}

/// A letter of a cube face word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Minus,
    Zero,
    Plus,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::Minus => '-',
            Letter::Zero => '0',
            Letter::Plus => '+',
        }
    }

    /// `(-)^i` as a letter.
    pub fn alternating(i: usize) -> Letter {
        if i % 2 == 1 {
            Letter::Minus
        } else {
            Letter::Plus
        }
    }
}

impl From<crate::precubical::Sign> for Letter {
    fn from(s: crate::precubical::Sign) -> Self {
        match s {
            crate::precubical::Sign::Minus => Letter::Minus,
            crate::precubical::Sign::Plus => Letter::Plus,
        }
    }
}

/// A face of the standard cube: a word over `{-, 0, +}`; its dimension is
/// the number of zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeFace(Vec<Letter>);

impl CubeFace {
    pub fn new(letters: Vec<Letter>) -> Self {
        CubeFace(letters)
    }

    pub fn zeros(len: usize) -> Self {
        CubeFace(vec![Letter::Zero; len])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Zero).count()
    }

    /// All words of length `len`, in lexicographic order.
    pub fn all(len: usize) -> Vec<CubeFace> {
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w: Vec<Letter>| {
                    [Letter::Minus, Letter::Zero, Letter::Plus]
                        .into_iter()
                        .map(move |l| {
                            let mut w = w.clone();
                            w.push(l);
                            w
                        })
                })
                .collect();
        }
        words.into_iter().map(CubeFace).collect()
    }

    /// Inserts `letter` so that it lands at 0-based position `pos`.
    pub fn inserted(&self, pos: usize, letter: Letter) -> CubeFace {
        let mut w = self.0.clone();
        w.insert(pos, letter);
        CubeFace(w)
    }

    /// Replaces the `i`-th zero (1-based, left to right) by `letter`.
    pub fn replace_zero(&self, i: usize, letter: Letter) -> Option<CubeFace> {
        let pos = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Zero)
            .nth(i.checked_sub(1)?)?
            .0;
        let mut w = self.0.clone();
        w[pos] = letter;
        Some(CubeFace(w))
    }
}

impl fmt::Display for CubeFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for CubeFace {
    type Err = FreeOmegaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '-' | '−' => Ok(Letter::Minus),
                '0' => Ok(Letter::Zero),
                '+' => Ok(Letter::Plus),
                _ => Err(FreeOmegaError::BadCubeWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CubeFace)
    }
}

/// Atom source and target of a cube face of dimension at least 1: the `i`-th
/// zero is replaced by `(-)^i` for the source and by `(-)^(i+1)` for the
/// target.
pub fn cube_atom_source_target(
    x: &CubeFace,
) -> Result<(Vec<CubeFace>, Vec<CubeFace>), FreeOmegaError> {
    let d = x.dim();
    if d == 0 {
        return Err(FreeOmegaError::ZeroDimensional(x.to_string()));
    }
    let source = (1..=d)
        .map(|i| x.replace_zero(i, Letter::alternating(i)).expect("zero exists"))
        .collect();
    let target = (1..=d)
        .map(|i| x.replace_zero(i, Letter::alternating(i + 1)).expect("zero exists"))
        .collect();
    Ok((source, target))
}

/// One generating face together with its atom source and target sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFace {
    pub name: String,
    pub dim: usize,
    pub source: Vec<FaceId>,
    pub target: Vec<FaceId>,
}

/// A finite set of generating faces. The subface relation is the transitive
/// closure of "belongs to the source or target of".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorComplex {
    faces: Vec<GeneratorFace>,
    closures: Vec<Support>,
}

impl GeneratorComplex {
    pub fn new(faces: Vec<GeneratorFace>) -> Result<Self, FreeOmegaError> {
        let n = faces.len();
        for (id, f) in faces.iter().enumerate() {
            let bad = |why: &str| FreeOmegaError::MalformedComplex(format!("face {}: {why}", f.name));
            if f.dim == 0 && !(f.source.is_empty() && f.target.is_empty()) {
                return Err(bad("0-dimensional faces have no source or target"));
            }
            if f.dim > 0 && (f.source.is_empty() || f.target.is_empty()) {
                return Err(bad("source and target must be nonempty"));
            }
            for &g in f.source.iter().chain(&f.target) {
                if g >= n || faces[g].dim + 1 != f.dim || g == id {
                    return Err(bad("source and target faces must be one dimension lower"));
                }
            }
        }
        let mut order: Vec<FaceId> = (0..n).collect();
        order.sort_by_key(|&i| faces[i].dim);
        let mut closures = vec![Support::empty(n); n];
        for id in order {
            let mut c = Support::empty(n);
            c.insert(id);
            for &g in faces[id].source.iter().chain(&faces[id].target) {
                c.union_with(&closures[g]);
            }
            closures[id] = c;
        }
        Ok(GeneratorComplex { faces, closures })
    }

    /// The faces of the standard `n`-simplex, ordered by dimension and then
    /// lexicographically.
    pub fn simplex(n: usize) -> Self {
        let mut all: Vec<SimplexFace> = (1u64..(1 << (n + 1)))
            .map(|mask| SimplexFace((0..=n).filter(|v| mask & (1 << v) != 0).collect()))
            .collect();
        all.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let index = |f: &SimplexFace| all.iter().position(|g| g == f).expect("face of simplex");
        let faces = all
            .iter()
            .map(|f| {
                let (source, target) = if f.dim() == 0 {
                    (Vec::new(), Vec::new())
                } else {
                    let (s, t) = simplex_atom_source_target(f).expect("positive dimension");
                    (s.iter().map(index).collect(), t.iter().map(index).collect())
                };
                GeneratorFace {
                    name: f.to_string(),
                    dim: f.dim(),
                    source,
                    target,
                }
            })
            .collect();
        Self::new(faces).expect("simplex faces are well formed")
    }

    /// The faces of the standard `n`-cube, ordered by dimension and then
    /// lexicographically (`- < 0 < +`).
    pub fn cube(n: usize) -> Self {
        let mut all = CubeFace::all(n);
        all.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        let index = |f: &CubeFace| all.iter().position(|g| g == f).expect("face of cube");
        let faces = all
            .iter()
            .map(|f| {
                let (source, target) = if f.dim() == 0 {
                    (Vec::new(), Vec::new())
                } else {
                    let (s, t) = cube_atom_source_target(f).expect("positive dimension");
                    (s.iter().map(index).collect(), t.iter().map(index).collect())
                };
                GeneratorFace {
                    name: f.to_string(),
                    dim: f.dim(),
                    source,
                    target,
                }
            })
            .collect();
        Self::new(faces).expect("cube faces are well formed")
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[GeneratorFace] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &GeneratorFace {
        &self.faces[id]
    }

    pub fn find(&self, name: &str) -> Option<FaceId> {
        self.faces.iter().position(|f| f.name == name)
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.dim).max()
    }

    /// All subfaces of `id`, including itself.
    pub fn closure(&self, id: FaceId) -> &Support {
        &self.closures[id]
    }

    pub fn closure_of(&self, ids: &[FaceId]) -> Support {
        let mut s = Support::empty(self.faces.len());
        for &id in ids {
            s.union_with(&self.closures[id]);
        }
        s
    }

    /// Whether `a` is a proper subface of `b`.
    pub fn is_proper_subface(&self, a: FaceId, b: FaceId) -> bool {
        a != b && self.closures[b].contains(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(v: &[usize]) -> SimplexFace {
        SimplexFace::new(v.to_vec()).unwrap()
    }

    fn strings<T: ToString>(v: &[T]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn simplex_rule_on_worked_example() {
        let (s, t) = simplex_atom_source_target(&sf(&[0, 4, 5, 8, 9])).unwrap();
        assert_eq!(strings(&s), ["(4589)", "(0489)", "(0458)"]);
        assert_eq!(strings(&t), ["(0589)", "(0459)"]);
    }

    #[test]
    fn simplex_edges_point_down() {
        let (s, t) = simplex_atom_source_target(&sf(&[0, 1])).unwrap();
        assert_eq!(strings(&s), ["(1)"]);
        assert_eq!(strings(&t), ["(0)"]);
    }

    #[test]
    fn cube_rule_on_worked_example() {
        let x: CubeFace = "0+00".parse().unwrap();
        let (s, t) = cube_atom_source_target(&x).unwrap();
        assert_eq!(strings(&s), ["-+00", "0++0", "0+0-"]);
        assert_eq!(strings(&t), ["++00", "0+-0", "0+0+"]);
    }

    #[test]
    fn unit_interval_rule() {
        let (s, t) = cube_atom_source_target(&"0".parse().unwrap()).unwrap();
        assert_eq!(strings(&s), ["-"]);
        assert_eq!(strings(&t), ["+"]);
    }

    #[test]
    fn vertices_have_no_atom_boundary() {
        assert!(matches!(
            simplex_atom_source_target(&sf(&[3])),
            Err(FreeOmegaError::ZeroDimensional(_))
        ));
        assert!(cube_atom_source_target(&"+-".parse().unwrap()).is_err());
        assert!(SimplexFace::new(vec![2, 1]).is_err());
        assert!(SimplexFace::new(vec![]).is_err());
        assert!("0x".parse::<CubeFace>().is_err());
    }

    #[test]
    fn simplex_and_cube_sizes() {
        assert_eq!(GeneratorComplex::simplex(2).len(), 7);
        assert_eq!(GeneratorComplex::cube(2).len(), 9);
        assert_eq!(GeneratorComplex::cube(3).len(), 27);
        let d2 = GeneratorComplex::simplex(2);
        let top = d2.find("(012)").unwrap();
        assert_eq!(d2.closure(top).len(), 7);
        assert!(d2.is_proper_subface(d2.find("(0)").unwrap(), top));
    }

    #[test]
    fn malformed_complex_is_rejected() {
        let faces = vec![
            GeneratorFace {
                name: "a".into(),
                dim: 0,
                source: vec![],
                target: vec![],
            },
            GeneratorFace {
                name: "x".into(),
                dim: 2,
                source: vec![0],
                target: vec![0],
            },
        ];
        assert!(GeneratorComplex::new(faces).is_err());
    }
}
