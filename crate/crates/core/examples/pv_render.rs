// Draw the state space of a two-process program as SVG and run the same
// analysis through the command line front end.

use dihomotopy::cli::{render_svg, run};
use dihomotopy::pvlang::{build_model, parse_pv};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let prog = parse_pv("res a=1; proc: Pa Va; proc: Pa Va;")?;
    let svg = render_svg(&build_model(&prog)?)?;
    println!("svg: {} bytes, {} squares", svg.len(), svg.matches("class=\"square\"").count());

    let path = std::env::temp_dir().join(format!("dhat-example-{}.pv", std::process::id()));
    std::fs::write(&path, prog.to_source())?;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["dhat", "analyze", path.to_str().unwrap(), "--json"], &mut out, &mut err);
    std::fs::remove_file(&path)?;
    println!("exit {code}: {}", String::from_utf8(out)?.trim());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
