//! The geometric model of a PV program and its analysis.
//!
//! Coordinate `j` of a vertex counts the actions process `j` has executed.
//! At a vertex, process `j` holds resource `r` if its first `x_j` actions
//! acquire `r` without releasing it again. A vertex is forbidden when some
//! resource is held by more processes than its capacity, and a cube is kept
//! exactly when none of its vertices is forbidden.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{PvError, PvProgram};
use crate::homology::{homology_report, HomologyReport, ReportOptions, Theory};
use crate::precubical::{GridComplex, PrecubicalSet, Vertex};
use crate::FORMAT_VERSION;

#[derive(Clone, Debug)]
pub struct PvModel {
    pub program: PvProgram,
    pub grid: GridComplex,
    pub init: Vertex,
    pub final_vertex: Vertex,
}

/// The first resource over capacity at `point`, if any.
fn overloaded(prog: &PvProgram, point: &[usize]) -> Option<String> {
    prog.resources
        .iter()
        .find(|(r, &cap)| (0..point.len()).filter(|&j| prog.holds(j, point[j], r)).count() > cap)
        .map(|(r, _)| r.clone())
}

/// Builds the grid over the process lengths without the forbidden cubes.
pub fn build_model(prog: &PvProgram) -> Result<PvModel, PvError> {
    let lengths = prog.lengths();
    if let Some(resource) = overloaded(prog, &lengths) {
        return Err(PvError::FinalForbidden { resource });
    }
    let grid = GridComplex::build(&lengths, |cell| {
        cell.iter().all(|x| x % 2 == 0) && {
            let point: Vec<usize> = cell.iter().map(|x| x / 2).collect();
            overloaded(prog, &point).is_some()
        }
    })?;
    let init = grid.vertex_at(&vec![0; lengths.len()]).expect("nothing is held initially");
    let final_vertex = grid.vertex_at(&lengths).expect("checked above");
    Ok(PvModel {
        program: prog.clone(),
        grid,
        init,
        final_vertex,
    })
}

/// Deadlocks, unreachable and unsafe vertices, as coordinate tuples in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub lengths: Vec<usize>,
    pub deadlocks: Vec<Vec<usize>>,
    pub unreachable: Vec<Vec<usize>>,
    #[serde(rename = "unsafe")]
    pub unsafe_states: Vec<Vec<usize>>,
    /// Grid points removed from the model.
    pub forbidden: Vec<Vec<usize>>,
    /// Cubes of the model by dimension.
    pub cubes: Vec<usize>,
}

impl PvModel {
    pub fn complex(&self) -> &PrecubicalSet {
        &self.grid.complex
    }

    pub fn point(&self, v: Vertex) -> Vec<usize> {
        self.grid.point(v)
    }

    fn out_neighbours(&self) -> Vec<Vec<usize>> {
        self.complex()
            .out_edges()
            .into_iter()
            .map(|es| {
                es.into_iter()
                    .map(|e| self.complex().endpoints(e).expect("valid edge").1.index)
                    .collect()
            })
            .collect()
    }

    fn closure(adj: &[Vec<usize>], start: usize) -> Vec<bool> {
        let mut seen = vec![false; adj.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Vertices reachable from the initial state along directed edges.
    pub fn reachable(&self) -> Vec<bool> {
        Self::closure(&self.out_neighbours(), self.init.index)
    }

    /// Vertices from which the final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let out = self.out_neighbours();
        let mut back = vec![Vec::new(); out.len()];
        for (v, ws) in out.iter().enumerate() {
            for &w in ws {
                back[w].push(v);
            }
        }
        Self::closure(&back, self.final_vertex.index)
    }

    fn points_where(&self, pred: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        let mut pts: Vec<Vec<usize>> = self.complex().cubes(0).filter(|v| pred(v.index)).map(|v| self.point(v)).collect();
        pts.sort();
        pts
    }

    /// Reachable vertices without outgoing edges, other than the final one.
    pub fn deadlocks(&self) -> Vec<Vec<usize>> {
        let reach = self.reachable();
        let out = self.out_neighbours();
        self.points_where(|v| reach[v] && out[v].is_empty() && v != self.final_vertex.index)
    }

    pub fn unreachable(&self) -> Vec<Vec<usize>> {
        let reach = self.reachable();
        self.points_where(|v| !reach[v])
    }

    /// Reachable vertices from which the final state cannot be reached.
    pub fn unsafe_region(&self) -> Vec<Vec<usize>> {
        let reach = self.reachable();
        let co = self.coreachable();
        self.points_where(|v| reach[v] && !co[v])
    }

    pub fn forbidden(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let lengths = self.program.lengths();
        let mut point = vec![0; lengths.len()];
        loop {
            if self.grid.vertex_at(&point).is_none() {
                out.push(point.clone());
            }
            let mut k = lengths.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if point[k] < lengths[k] {
                    point[k] += 1;
                    break;
                }
                point[k] = 0;
            }
        }
    }

    pub fn analyze(&self) -> AnalysisReport {
        AnalysisReport {
            lengths: self.program.lengths(),
            deadlocks: self.deadlocks(),
            unreachable: self.unreachable(),
            unsafe_states: self.unsafe_region(),
            forbidden: self.forbidden(),
            cubes: self.complex().counts(),
        }
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            version: &'static str,
            lengths: &'a [usize],
            deadlocks: &'a [Vec<usize>],
            unreachable: &'a [Vec<usize>],
            #[serde(rename = "unsafe")]
            unsafe_states: &'a [Vec<usize>],
            forbidden: &'a [Vec<usize>],
            counts: BTreeMap<&'static str, serde_json::Value>,
        }
        let mut counts = BTreeMap::new();
        counts.insert("cubes", serde_json::json!(self.cubes));
        counts.insert("deadlocks", serde_json::json!(self.deadlocks.len()));
        counts.insert("unreachable", serde_json::json!(self.unreachable.len()));
        counts.insert("unsafe", serde_json::json!(self.unsafe_states.len()));
        counts.insert("forbidden", serde_json::json!(self.forbidden.len()));
        let out = Out {
            version: FORMAT_VERSION,
            lengths: &self.lengths,
            deadlocks: &self.deadlocks,
            unreachable: &self.unreachable,
            unsafe_states: &self.unsafe_states,
            forbidden: &self.forbidden,
            counts,
        };
        let mut s = serde_json::to_string_pretty(&out).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let fmt = |pts: &[Vec<usize>]| -> String {
            if pts.is_empty() {
                "none".to_string()
            } else {
                pts.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>().join(" ")
            }
        };
        format!(
            "grid       {:?}\ncubes      {:?}\nforbidden  {}\ndeadlocks  {}\nunreachable {}\nunsafe     {}\n",
            self.lengths,
            self.cubes,
            fmt(&self.forbidden),
            fmt(&self.deadlocks),
            fmt(&self.unreachable),
            fmt(&self.unsafe_states)
        )
    }
}

/// Homology of the program's model in one theory.
pub fn homology_of_program(
    prog: &PvProgram,
    theory: Theory,
    degrees: &[usize],
    opts: &ReportOptions,
) -> Result<HomologyReport, PvError> {
    let model = build_model(prog)?;
    Ok(homology_report(model.complex(), theory, degrees, opts)?)
}
