// Shift a cell table up one dimension with the globe construction and back.

use dihomotopy::freeomega::{glob, path_part, CellTable, GeneratorComplex, Limits};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = CellTable::generate(&GeneratorComplex::cube(2), Limits::new(2))?;
    let g = glob(&t);
    println!("square:       {:?}", t.count_by_dim());
    println!("glob(square): {:?}", g.count_by_dim());
    let back = path_part(&g)?;
    assert_eq!(back, t);
    println!("path part recovers the original table");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
