// The Swiss flag: two processes locking two mutexes in opposite order.

use dihomotopy::pvlang::{build_model, parse_pv};

const SWISS_FLAG: &str = "
res a=1;
res b=1;
proc: Pa Pb Vb Va;
proc: Pb Pa Va Vb;
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let prog = parse_pv(SWISS_FLAG)?;
    let model = build_model(&prog)?;
    let r = model.analyze();
    print!("{}", r.to_text());
    assert_eq!(r.deadlocks, vec![vec![1, 1]]);
    assert_eq!(r.unreachable, vec![vec![3, 3]]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
