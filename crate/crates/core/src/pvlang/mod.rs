//! PV programs: straight-line processes that acquire (`P`) and release (`V`)
//! counting semaphores, their geometric model as a grid with forbidden cubes
//! removed, and deadlock and reachability analysis on that model.

mod model;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use model::{build_model, homology_of_program, AnalysisReport, PvModel};
pub use parse::parse_pv;

use crate::homology::HomologyError;
use crate::precubical::PrecubicalError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PvError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("{line}:{col}: undeclared resource {name:?}")]
    UndeclaredResource { line: usize, col: usize, name: String },
    #[error("{line}:{col}: capacity must be a positive integer, found {text:?}")]
    BadCapacity { line: usize, col: usize, text: String },
    #[error("{line}:{col}: resource {name:?} declared twice")]
    DuplicateResource { line: usize, col: usize, name: String },
    #[error("{line}:{col}: release of {name:?}, which the process does not hold")]
    ReleaseWithoutHold { line: usize, col: usize, name: String },
    #[error("{line}:{col}: acquire of {name:?}, which the process already holds")]
    AlreadyHeld { line: usize, col: usize, name: String },
    #[error("{line}:{col}: process has no actions")]
    EmptyProcess { line: usize, col: usize },
    #[error("{line}:{col}: program has no processes")]
    NoProcesses { line: usize, col: usize },
    #[error("the final state exceeds the capacity of {resource:?}: the processes can never all terminate")]
    FinalForbidden { resource: String },
    #[error("precubical model: {0}")]
    Model(#[from] PrecubicalError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// Acquire.
    P,
    /// Release.
    V,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub op: Op,
    pub resource: String,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.op {
            Op::P => 'P',
            Op::V => 'V',
        };
        write!(f, "{op}{}", self.resource)
    }
}

/// A parsed program. Resources are kept sorted by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvProgram {
    pub resources: BTreeMap<String, usize>,
    pub processes: Vec<Vec<Action>>,
}

impl PvProgram {
    /// Programs built in code, without source positions.
    pub fn new(resources: &[(&str, usize)], processes: &[&[(Op, &str)]]) -> Result<PvProgram, PvError> {
        let prog = PvProgram {
            resources: resources.iter().map(|&(n, c)| (n.to_string(), c)).collect(),
            processes: processes
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|&(op, r)| Action {
                            op,
                            resource: r.to_string(),
                            line: 0,
                            col: 0,
                        })
                        .collect()
                })
                .collect(),
        };
        for (name, &cap) in &prog.resources {
            if cap == 0 {
                return Err(PvError::BadCapacity {
                    line: 0,
                    col: 0,
                    text: format!("{name}=0"),
                });
            }
        }
        if prog.processes.is_empty() {
            return Err(PvError::NoProcesses { line: 0, col: 0 });
        }
        for p in &prog.processes {
            if p.is_empty() {
                return Err(PvError::EmptyProcess { line: 0, col: 0 });
            }
            for a in p {
                if !prog.resources.contains_key(&a.resource) {
                    return Err(PvError::UndeclaredResource {
                        line: 0,
                        col: 0,
                        name: a.resource.clone(),
                    });
                }
            }
        }
        prog.check_discipline()?;
        Ok(prog)
    }

    /// Each process releases only what it holds and never acquires a
    /// resource it already holds.
    fn check_discipline(&self) -> Result<(), PvError> {
        for p in &self.processes {
            let mut held: Vec<&str> = Vec::new();
            for a in p {
                let pos = held.iter().position(|&r| r == a.resource);
                match (a.op, pos) {
                    (Op::P, None) => held.push(&a.resource),
                    (Op::V, Some(i)) => {
                        held.remove(i);
                    }
                    (Op::P, Some(_)) => {
                        return Err(PvError::AlreadyHeld {
                            line: a.line,
                            col: a.col,
                            name: a.resource.clone(),
                        })
                    }
                    (Op::V, None) => {
                        return Err(PvError::ReleaseWithoutHold {
                            line: a.line,
                            col: a.col,
                            name: a.resource.clone(),
                        })
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether process `p` holds `resource` after its first `x` actions.
    pub fn holds(&self, p: usize, x: usize, resource: &str) -> bool {
        let mut held = false;
        for a in self.processes[p].iter().take(x) {
            if a.resource == resource {
                held = a.op == Op::P;
            }
        }
        held
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.processes.iter().map(Vec::len).collect()
    }

    /// Source text that parses back to an equal program (up to positions).
    pub fn to_source(&self) -> String {
        let mut s = String::new();
        for (r, c) in &self.resources {
            s.push_str(&format!("res {r} = {c};\n"));
        }
        for p in &self.processes {
            let acts: Vec<String> = p.iter().map(ToString::to_string).collect();
            s.push_str(&format!("proc: {};\n", acts.join(" ")));
        }
        s
    }

    /// The same program with processes reordered: process `i` of the result
    /// is process `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> PvProgram {
        PvProgram {
            resources: self.resources.clone(),
            processes: order.iter().map(|&i| self.processes[i].clone()).collect(),
        }
    }
}
