// Build a 2x2 grid with the middle square removed, check the cube axiom and
// print it as JSON.

use dihomotopy::precubical::{grid, standard_cube};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cube = standard_cube(3);
    assert!(cube.is_valid());
    println!("standard 3-cube: {:?} cubes by dimension", cube.counts());

    let annulus = grid(&[2, 2], &[vec![1, 1]])?;
    assert!(annulus.validate().is_empty());
    println!("annulus: {:?} cubes by dimension", annulus.counts());
    println!("{}", annulus.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
