// Smith normal form of a small matrix and the cubical homology of a grid
// with two holes.

use dihomotopy::homology::{homology_report, smith_normal_form, IntMatrix, ReportOptions, Theory};
use dihomotopy::precubical::grid;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m)?;
    println!("invariant factors {:?}", s.divisors());
    assert_eq!(s.u.mul(&m)?.mul(&s.v)?, s.d);

    let k = grid(&[3, 1], &[vec![0, 0], vec![2, 0]])?;
    let r = homology_report(&k, Theory::Cube, &[0, 1], &ReportOptions::default())?;
    print!("{}", r.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
