//! Independent oracles shared by the integration tests. None of them call
//! into the code under test except to build inputs.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use dihomotopy::precubical::{graph, grid, path, standard_cube, CubeId, PrecubicalSet, Sign};
use dihomotopy::pvlang::{Op, PvProgram};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Every fixture file, sorted by path.
pub fn fixture_files() -> Vec<std::path::PathBuf> {
    let mut files: Vec<_> = std::fs::read_dir(fixture("")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

/// Every command variant exercised by the determinism check.
pub fn command_variants(file: &str) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<&str>> = vec![
        vec!["analyze", file],
        vec!["analyze", file, "--json"],
        vec!["cells", file],
        vec!["cells", file, "--json"],
        vec!["render", file],
    ];
    for theory in ["cube", "gl", "gl-", "gl+"] {
        v.push(vec!["homology", file, "--theory", theory]);
        v.push(vec!["homology", file, "--theory", theory, "--json"]);
    }
    for format in ["json", "cells", "nerve", "sparse"] {
        v.push(vec!["export", file, "--format", format]);
    }
    v.into_iter().map(|c| c.into_iter().map(String::from).collect()).collect()
}

// ---------------------------------------------------------------------------
// Generating faces, written out from the odd/even and alternating-sign rules.

/// `(name, dim, source names, target names)` of every face.
pub type FaceData = Vec<(String, usize, Vec<String>, Vec<String>)>;

fn simplex_name(vs: &[usize]) -> String {
    format!("({})", vs.iter().map(|v| v.to_string()).collect::<String>())
}

pub fn simplex_faces(n: usize) -> FaceData {
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n + 1)) {
        let vs: Vec<usize> = (0..=n).filter(|v| mask & (1 << v) != 0).collect();
        let d = vs.len() - 1;
        let drop = |parity: usize| -> Vec<String> {
            if d == 0 {
                return Vec::new();
            }
            (0..vs.len())
                .filter(|p| (p + 1) % 2 == parity)
                .map(|p| {
                    let mut w = vs.clone();
                    w.remove(p);
                    simplex_name(&w)
                })
                .collect()
        };
        out.push((simplex_name(&vs), d, drop(1), drop(0)));
    }
    out
}

pub fn cube_faces(n: usize) -> FaceData {
    let mut words: Vec<String> = vec![String::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| ["-", "0", "+"].map(|c| format!("{w}{c}")))
            .collect();
    }
    words
        .into_iter()
        .map(|w| {
            let zeros: Vec<usize> = w.char_indices().filter(|&(_, c)| c == '0').map(|(i, _)| i).collect();
            let put = |pos: usize, c: char| -> String {
                w.char_indices().map(|(i, x)| if i == pos { c } else { x }).collect()
            };
            let s = zeros
                .iter()
                .enumerate()
                .map(|(k, &pos)| put(pos, if (k + 1) % 2 == 1 { '-' } else { '+' }))
                .collect();
            let t = zeros
                .iter()
                .enumerate()
                .map(|(k, &pos)| put(pos, if (k + 1) % 2 == 1 { '+' } else { '-' }))
                .collect();
            (w.clone(), zeros.len(), s, t)
        })
        .collect()
}

/// A cell of the free ω-category: its support and the supports of its
/// iterated sources and targets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleCell {
    pub dim: usize,
    pub support: BTreeSet<String>,
    pub sources: Vec<BTreeSet<String>>,
    pub targets: Vec<BTreeSet<String>>,
}

/// Cells as sequences `(x_0^-, x_0^+, ..., x_n^-, x_n^+)` of face sets with
/// `x_0^±` single vertices, `d x_i^± = x_{i-1}^+ - x_{i-1}^-` in the chain
/// complex spanned by the faces, and `x_n^- = x_n^+`. Every subset of a
/// dimension is tried, so nothing depends on how cells are composed. The
/// support of a cell is the downward closure of the faces it uses.
pub fn chain_cells(faces: &FaceData) -> Vec<OracleCell> {
    let top = faces.iter().map(|f| f.1).max().unwrap_or(0);
    let by_dim: Vec<Vec<usize>> = (0..=top)
        .map(|d| (0..faces.len()).filter(|&i| faces[i].1 == d).collect())
        .collect();
    let index: HashMap<&str, usize> = faces.iter().enumerate().map(|(i, f)| (f.0.as_str(), i)).collect();
    // boundary of each face as a sparse chain
    let boundary = |f: usize| -> BTreeMap<usize, i64> {
        let mut c = BTreeMap::new();
        for t in &faces[f].3 {
            *c.entry(index[t.as_str()]).or_insert(0) += 1;
        }
        for s in &faces[f].2 {
            *c.entry(index[s.as_str()]).or_insert(0) -= 1;
        }
        c.retain(|_, v| *v != 0);
        c
    };
    // subsets of each dimension grouped by boundary
    let mut subsets: Vec<HashMap<BTreeMap<usize, i64>, Vec<Vec<usize>>>> = vec![HashMap::new()];
    for d in 1..=top {
        let fs = &by_dim[d];
        let mut m: HashMap<BTreeMap<usize, i64>, Vec<Vec<usize>>> = HashMap::new();
        for mask in 0u64..(1 << fs.len()) {
            let set: Vec<usize> = (0..fs.len()).filter(|b| mask & (1 << b) != 0).map(|b| fs[b]).collect();
            let mut c = BTreeMap::new();
            for &f in &set {
                for (k, v) in boundary(f) {
                    *c.entry(k).or_insert(0) += v;
                }
            }
            c.retain(|_, v| *v != 0);
            m.entry(c).or_default().push(set);
        }
        subsets.push(m);
    }
    // supports are closed under taking sources and targets of faces
    let names = |xs: &[usize]| -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut todo: Vec<usize> = xs.to_vec();
        while let Some(f) = todo.pop() {
            if out.insert(faces[f].0.clone()) {
                todo.extend(faces[f].2.iter().chain(&faces[f].3).map(|n| index[n.as_str()]));
            }
        }
        out
    };
    let mut out = Vec::new();
    // stack of (levels so far as (minus, plus) pairs)
    let mut stack: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::new();
    for &a in &by_dim[0] {
        for &b in &by_dim[0] {
            stack.push(vec![(vec![a], vec![b])]);
        }
    }
    while let Some(seq) = stack.pop() {
        let (lo, hi) = seq.last().unwrap().clone();
        let n = seq.len() - 1;
        if lo == hi {
            let mut support = BTreeSet::new();
            for (m, p) in &seq {
                support.extend(names(m));
                support.extend(names(p));
            }
            let side = |which: usize| -> Vec<BTreeSet<String>> {
                (0..n)
                    .map(|m| {
                        let mut s = BTreeSet::new();
                        for (a, b) in &seq[..m] {
                            s.extend(names(a));
                            s.extend(names(b));
                        }
                        s.extend(names(if which == 0 { &seq[m].0 } else { &seq[m].1 }));
                        s
                    })
                    .collect()
            };
            out.push(OracleCell {
                dim: n,
                support,
                sources: side(0),
                targets: side(1),
            });
            continue;
        }
        if n == top {
            continue;
        }
        let mut want = BTreeMap::new();
        for &f in &hi {
            *want.entry(f).or_insert(0i64) += 1;
        }
        for &f in &lo {
            *want.entry(f).or_insert(0i64) -= 1;
        }
        want.retain(|_, v| *v != 0);
        if let Some(cands) = subsets[n + 1].get(&want) {
            for x in cands {
                for y in cands {
                    let mut next = seq.clone();
                    next.push((x.clone(), y.clone()));
                    stack.push(next);
                }
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Directed paths.

/// All nonempty directed edge paths of the 1-skeleton, as edge lists.
pub fn directed_paths(k: &PrecubicalSet) -> Vec<Vec<CubeId>> {
    let mut out_edges: Vec<Vec<CubeId>> = vec![Vec::new(); k.count(0)];
    for e in k.cubes(1) {
        let s = k.face(e, 1, Sign::Minus).unwrap();
        out_edges[s.index].push(e);
    }
    let mut paths = Vec::new();
    fn walk(k: &PrecubicalSet, out_edges: &[Vec<CubeId>], cur: &mut Vec<CubeId>, paths: &mut Vec<Vec<CubeId>>) {
        let last = *cur.last().unwrap();
        paths.push(cur.clone());
        let t = k.face(last, 1, Sign::Plus).unwrap();
        for &e in &out_edges[t.index] {
            cur.push(e);
            walk(k, out_edges, cur, paths);
            cur.pop();
        }
    }
    for e in k.cubes(1) {
        let mut cur = vec![e];
        walk(k, &out_edges, &mut cur, &mut paths);
    }
    paths
}

/// Whether rewriting directed paths across squares can return to the
/// starting path. A square turns `d2- d1+` into `d1- d2+` wherever that
/// two-edge factor occurs.
pub fn square_rewrite_cycle(k: &PrecubicalSet) -> bool {
    let paths: Vec<Vec<usize>> = directed_paths(k).iter().map(|p| p.iter().map(|e| e.index).collect()).collect();
    let index: HashMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let rules: Vec<([usize; 2], [usize; 2])> = k
        .cubes(2)
        .map(|s| {
            let f = |i, sign| k.face(s, i, sign).unwrap().index;
            ([f(2, Sign::Minus), f(1, Sign::Plus)], [f(1, Sign::Minus), f(2, Sign::Plus)])
        })
        .collect();
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); paths.len()];
    for (i, p) in paths.iter().enumerate() {
        for w in 0..p.len().saturating_sub(1) {
            for (from, to) in &rules {
                if p[w..w + 2] == from[..] {
                    let mut q = p.clone();
                    q[w..w + 2].copy_from_slice(to);
                    next[i].push(index[&q]);
                }
            }
        }
    }
    // three-colour depth-first search
    fn visit(v: usize, next: &[Vec<usize>], colour: &mut [u8]) -> bool {
        colour[v] = 1;
        for &w in &next[v] {
            if colour[w] == 1 || (colour[w] == 0 && visit(w, next, colour)) {
                return true;
            }
        }
        colour[v] = 2;
        false
    }
    let mut colour = vec![0u8; paths.len()];
    (0..paths.len()).any(|v| colour[v] == 0 && visit(v, &next, &mut colour))
}

/// A random acyclic precubical set: a DAG on numbered vertices (edges go
/// from lower to higher numbers) with some commuting squares filled in.
pub fn random_acyclic(rng: &mut StdRng, max_edges: usize) -> PrecubicalSet {
    let nv = rng.gen_range(2..=12);
    let target = rng.gen_range(1..=max_edges);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tries = 0;
    while edges.len() < target && tries < 500 {
        tries += 1;
        let a = rng.gen_range(0..nv - 1);
        let b = rng.gen_range(a + 1..nv);
        // parallel edges are allowed, up to two
        if edges.iter().filter(|&&e| e == (a, b)).count() < 2 {
            edges.push((a, b));
        }
    }
    let mut k = PrecubicalSet::new();
    for v in 0..nv {
        k.add_cube(0, format!("v{v:02}"));
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        let e = k.add_cube(1, format!("e{i:02}"));
        k.set_face(e, 1, Sign::Minus, a);
        k.set_face(e, 1, Sign::Plus, b);
    }
    // squares with d2- = a->b, d1- = a->c, d1+ = b->d, d2+ = c->d
    let mut squares = 0;
    for i in 0..edges.len() {
        for j in 0..edges.len() {
            if squares >= 3 || i == j || edges[i].0 != edges[j].0 || !rng.gen_bool(0.3) {
                continue;
            }
            let (b, c) = (edges[i].1, edges[j].1);
            let closing = (0..edges.len())
                .filter(|&p| edges[p].0 == b)
                .find_map(|p| (0..edges.len()).find(|&q| edges[q] == (c, edges[p].1)).map(|q| (p, q)));
            if let Some((p, q)) = closing {
                let s = k.add_cube(2, format!("s{squares}"));
                k.set_face(s, 1, Sign::Minus, j);
                k.set_face(s, 1, Sign::Plus, p);
                k.set_face(s, 2, Sign::Minus, i);
                k.set_face(s, 2, Sign::Plus, q);
                squares += 1;
            }
        }
    }
    assert!(k.validate().is_empty(), "random complex must be valid");
    k
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Exact linear algebra by fraction-free elimination.

/// Determinant by Bareiss elimination.
pub fn bareiss_det<T: Copy + Into<BigInt>>(m: &[Vec<T>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let zero = BigInt::from(0);
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k] == zero {
            match (k + 1..n).find(|&i| a[i][k] != zero) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return zero,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::from(1) } else { a[n - 1][n - 1].clone() };
    if negate {
        -det
    } else {
        det
    }
}

/// Exact product of integer matrices.
pub fn big_mul<A: Clone + Into<BigInt>, B: Clone + Into<BigInt>>(a: &[Vec<A>], b: &[Vec<B>]) -> Vec<Vec<BigInt>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, r)| x.clone().into() * r[j].clone().into()).sum())
                .collect()
        })
        .collect()
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank<T: Copy + Into<i128>>(m: &[Vec<T>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let (f, g) = (a[r][c], a[rank][c]);
                for j in 0..cols {
                    a[r][j] = a[r][j] * g - a[rank][j] * f;
                }
                let gcd = a[r].iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
                if gcd > 1 {
                    a[r].iter_mut().for_each(|x| *x /= gcd);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all `k x k` minors.
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in subsets_of_size(rows, k) {
        for cs in subsets_of_size(cols, k) {
            let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            g = gcd(g, i128::try_from(bareiss_det(&sub)).expect("small minor"));
        }
    }
    g
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|b| m & (1 << b) != 0).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Interleaving semantics of PV programs.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    /// Whether the final state respects the capacities.
    pub final_ok: bool,
    pub deadlocks: BTreeSet<Vec<usize>>,
    pub unreachable: BTreeSet<Vec<usize>>,
    pub unsafe_states: BTreeSet<Vec<usize>>,
}

/// Joint positions with per-resource holder counts computed by replaying each
/// process prefix; steps advance one process by one action if the resulting
/// counts respect the capacities.
pub fn interleaving_oracle(prog: &PvProgram) -> OracleVerdict {
    let lens: Vec<usize> = prog.processes.iter().map(Vec::len).collect();
    let held_after = |p: usize, x: usize| -> HashSet<&str> {
        let mut h = HashSet::new();
        for a in &prog.processes[p][..x] {
            match a.op {
                Op::P => h.insert(a.resource.as_str()),
                Op::V => h.remove(a.resource.as_str()),
            };
        }
        h
    };
    let valid = |st: &[usize]| -> bool {
        prog.resources.iter().all(|(r, &cap)| {
            (0..st.len()).filter(|&p| held_after(p, st[p]).contains(r.as_str())).count() <= cap
        })
    };
    let mut all = vec![Vec::new()];
    for &l in &lens {
        all = all
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..=l).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let states: Vec<Vec<usize>> = all.into_iter().filter(|s| valid(s)).collect();
    let succ = |s: &Vec<usize>| -> Vec<Vec<usize>> {
        (0..s.len())
            .filter(|&p| s[p] < lens[p])
            .map(|p| {
                let mut t = s.clone();
                t[p] += 1;
                t
            })
            .filter(|t| valid(t))
            .collect()
    };
    let init = vec![0; lens.len()];
    let fin = lens.clone();
    let final_ok = valid(&fin);
    let mut reach = BTreeSet::from([init.clone()]);
    let mut queue = VecDeque::from([init]);
    while let Some(s) = queue.pop_front() {
        for t in succ(&s) {
            if reach.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    // coreachable: fixpoint over all valid states
    let mut co: BTreeSet<Vec<usize>> = BTreeSet::new();
    if final_ok {
        co.insert(fin.clone());
        loop {
            let before = co.len();
            for s in &states {
                if !co.contains(s) && succ(s).iter().any(|t| co.contains(t)) {
                    co.insert(s.clone());
                }
            }
            if co.len() == before {
                break;
            }
        }
    }
    OracleVerdict {
        final_ok,
        deadlocks: reach.iter().filter(|s| **s != fin && succ(s).is_empty()).cloned().collect(),
        unreachable: states.iter().filter(|s| !reach.contains(*s)).cloned().collect(),
        unsafe_states: reach.iter().filter(|s| !co.contains(*s)).cloned().collect(),
    }
}

/// Every disciplined action sequence of length 1..=`max_len` over the
/// given resources.
pub fn process_bodies(resources: &[&str], max_len: usize) -> Vec<Vec<(Op, String)>> {
    let mut out = Vec::new();
    let mut frontier: Vec<(Vec<(Op, String)>, BTreeSet<String>)> = vec![(Vec::new(), BTreeSet::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (body, held) in &frontier {
            for r in resources {
                let r = r.to_string();
                let (op, mut h) = if held.contains(&r) {
                    (Op::V, held.clone())
                } else {
                    (Op::P, held.clone())
                };
                if op == Op::V {
                    h.remove(&r);
                } else {
                    h.insert(r.clone());
                }
                let mut b = body.clone();
                b.push((op, r));
                next.push((b, h));
            }
        }
        out.extend(next.iter().map(|(b, _)| b.clone()));
        frontier = next;
    }
    out
}

/// The complete corpus: up to 2 processes of up to 4 actions, 1 or 2
/// resources, capacities 1 or 2.
pub fn pv_corpus() -> Vec<PvProgram> {
    let mut out = Vec::new();
    for names in [vec!["a"], vec!["a", "b"]] {
        let bodies = process_bodies(&names, 4);
        let caps: Vec<Vec<usize>> = if names.len() == 1 {
            vec![vec![1], vec![2]]
        } else {
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        };
        for cap in &caps {
            let res: Vec<(&str, usize)> = names.iter().copied().zip(cap.iter().copied()).collect();
            for b in &bodies {
                let p: Vec<(Op, &str)> = b.iter().map(|(o, r)| (*o, r.as_str())).collect();
                out.push(PvProgram::new(&res, &[&p]).unwrap());
            }
            for b1 in &bodies {
                for b2 in &bodies {
                    let p1: Vec<(Op, &str)> = b1.iter().map(|(o, r)| (*o, r.as_str())).collect();
                    let p2: Vec<(Op, &str)> = b2.iter().map(|(o, r)| (*o, r.as_str())).collect();
                    out.push(PvProgram::new(&res, &[&p1, &p2]).unwrap());
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Complexes with free edges, for the subdivision checks.

pub fn free_edge_corpus() -> Vec<(&'static str, PrecubicalSet)> {
    let mut square_with_tail = standard_cube(2);
    let tail_end = square_with_tail.add_cube(0, "tail");
    let top = square_with_tail.find("++").unwrap();
    let e = square_with_tail.add_cube(1, "tail-edge");
    square_with_tail.set_face(e, 1, Sign::Minus, top.index);
    square_with_tail.set_face(e, 1, Sign::Plus, tail_end.index);

    let cube_skeleton = {
        let c = standard_cube(3);
        let mut k = PrecubicalSet::new();
        for v in c.cubes(0) {
            k.add_cube(0, c.name(v));
        }
        for e in c.cubes(1) {
            let x = k.add_cube(1, c.name(e));
            k.set_face(x, 1, Sign::Minus, c.face(e, 1, Sign::Minus).unwrap().index);
            k.set_face(x, 1, Sign::Plus, c.face(e, 1, Sign::Plus).unwrap().index);
        }
        k
    };

    vec![
        ("edge", path(1)),
        ("path2", path(2)),
        ("path3", path(3)),
        ("v_shape", graph(&["o", "a", "b"], &[("f", "o", "a"), ("g", "o", "b")])),
        ("merge", graph(&["a", "b", "z"], &[("f", "a", "z"), ("g", "b", "z")])),
        (
            "diamond",
            graph(&["o", "a", "b", "z"], &[("f", "o", "a"), ("g", "o", "b"), ("h", "a", "z"), ("k", "b", "z")]),
        ),
        ("parallel", graph(&["a", "b"], &[("f", "a", "b"), ("g", "a", "b")])),
        ("hollow_square", grid(&[1, 1], &[vec![0, 0]]).unwrap()),
        ("square_with_tail", square_with_tail),
        ("cube_skeleton", cube_skeleton),
        (
            "two_diamonds",
            graph(
                &["o", "a", "b", "m", "c", "d", "z"],
                &[
                    ("f1", "o", "a"),
                    ("g1", "o", "b"),
                    ("h1", "a", "m"),
                    ("k1", "b", "m"),
                    ("f2", "m", "c"),
                    ("g2", "m", "d"),
                    ("h2", "c", "z"),
                    ("k2", "d", "z"),
                ],
            ),
        ),
        (
            "grid_skeleton",
            grid(&[2, 2], &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap(),
        ),
    ]
}
