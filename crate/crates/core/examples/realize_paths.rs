// Realize a small precubical set and list its 1-cells, which are the
// directed paths of the 1-skeleton.

use dihomotopy::freeomega::{realize, Limits};
use dihomotopy::precubical::grid;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // two squares side by side
    let k = grid(&[2, 1], &[])?;
    let r = realize(&k, Limits::new(2))?;
    println!("generating faces: {}", r.faces.len());
    println!("cells by dimension: {:?}", r.table.count_by_dim());
    for c in r.table.cells_of_dim(1) {
        let (s, t) = (r.table.source(c, 0), r.table.target(c, 0));
        println!(
            "path {} -> {}: {}",
            r.table.cell_names(s).join(""),
            r.table.cell_names(t).join(""),
            r.table.cell_names(c).join(" ")
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
