// Atom boundaries of simplex and cube faces, and the cells of the free
// ω-category on the 2-simplex.

use dihomotopy::freeomega::{
    check_axioms, cube_atom_source_target, simplex_atom_source_target, CellTable, CubeFace, GeneratorComplex,
    Limits, SimplexFace,
};

fn show<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = SimplexFace::new(vec![0, 4, 5, 8, 9])?;
    let (s, t) = simplex_atom_source_target(&x)?;
    println!("{x}: source {{{}}} target {{{}}}", show(&s), show(&t));

    let w: CubeFace = "0+00".parse()?;
    let (s, t) = cube_atom_source_target(&w)?;
    println!("{w}: source {{{}}} target {{{}}}", show(&s), show(&t));

    let table = CellTable::generate(&GeneratorComplex::simplex(2), Limits::new(2))?;
    println!("cells of the 2-simplex by dimension: {:?}", table.count_by_dim());
    print!("{}", table.listing());

    let report = check_axioms(&table);
    println!(
        "axioms: {} (globularity {}, identity {}, boundary {}, associativity {}, interchange {})",
        if report.holds() { "hold" } else { "fail" },
        report.globularity,
        report.identity,
        report.boundary,
        report.associativity,
        report.interchange
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
