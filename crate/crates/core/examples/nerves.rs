// Globular, branching and merging nerves of a V-shaped graph and the maps
// from the globular nerve onto the other two.

use dihomotopy::freeomega::{realize, Limits};
use dihomotopy::nerves::{branching_nerve, globular_nerve, h_map, merging_nerve, PointMode};
use dihomotopy::precubical::graph;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let v = graph(&["o", "a", "b"], &[("f", "o", "a"), ("g", "o", "b")]);
    let t = realize(&v, Limits::new(2))?.table;

    let gl = globular_nerve(&t, 1, PointMode::Full)?;
    println!("{:<9} level sizes {:?}", gl.kind.name(), gl.level_sizes());
    for semi in [branching_nerve(&t, 1)?, merging_nerve(&t, 1)?] {
        let h = h_map(&gl, &semi)?;
        println!(
            "{:<9} level sizes {:?}, h simplicial {}, surjective {}",
            semi.kind.name(),
            semi.level_sizes(),
            h.is_simplicial(&gl.set, &semi.set),
            h.is_surjective(&semi.set)
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
