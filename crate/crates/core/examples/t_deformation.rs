// Subdividing a free edge leaves the branching and merging homology in
// degree 1 unchanged, while the globular homology in degree 0 moves.

use dihomotopy::freeomega::{realize, Limits};
use dihomotopy::homology::{branching_homology, globular_homology, merging_homology};
use dihomotopy::nerves::PointMode;
use dihomotopy::precubical::path;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = path(1);
    let e = k.free_edges()[0];
    let k2 = k.subdivide_edge(e)?;
    for (name, k) in [("edge", &k), ("subdivided", &k2)] {
        let t = realize(k, Limits::new(2))?.table;
        println!(
            "{name:<10} gl_0 = {}  gl-_1 = {}  gl+_1 = {}",
            globular_homology(&t, &[0], PointMode::Full)?[0],
            branching_homology(&t, &[1])?[0],
            merging_homology(&t, &[1])?[0]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
