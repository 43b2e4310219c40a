//! Static SVG drawing of a two-process state space.
//!
//! Process 1 runs left to right and process 2 bottom to top, so the initial
//! state sits in the lower left corner. Squares missing from the model are
//! filled; states get one marker class per property so the output can be
//! inspected by counting `class="..."` attributes.

use std::fmt::Write as _;

use super::CliError;
use crate::pvlang::PvModel;

const UNIT: usize = 60;
const MARGIN: usize = 70;

pub fn render_svg(model: &PvModel) -> Result<String, CliError> {
    let lengths = model.program.lengths();
    if lengths.len() != 2 {
        return Err(CliError::Usage(format!(
            "render draws exactly 2 processes, the program has {}",
            lengths.len()
        )));
    }
    let (n1, n2) = (lengths[0], lengths[1]);
    let x = |i: usize| MARGIN + i * UNIT;
    let y = |j: usize| MARGIN + (n2 - j) * UNIT;
    let width = 2 * MARGIN + n1 * UNIT;
    let height = 2 * MARGIN + n2 * UNIT;
    let report = model.analyze();
    let k = model.complex();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    s.push_str(
        "<style>\
.forbidden{fill:#b0b0b0;stroke:none}\
.square{fill:#eef3fb;stroke:none}\
.edge{stroke:#404040;stroke-width:1.5}\
.vertex{fill:#404040}\
.deadlock{stroke:#d00000;stroke-width:3}\
.unreachable{fill:none;stroke:#0060c0;stroke-width:2}\
.unsafe{fill:none;stroke:#e08000;stroke-width:2}\
.init,.final{fill:#108010}\
text{font-family:sans-serif;font-size:12px}\
</style>\n",
    );

    for i in 0..n1 {
        for j in 0..n2 {
            let class = if model.grid.cube_at(&[2 * i + 1, 2 * j + 1]).is_some() {
                "square"
            } else {
                "forbidden"
            };
            let _ = writeln!(
                s,
                r#"<rect class="{class}" x="{}" y="{}" width="{UNIT}" height="{UNIT}"/>"#,
                x(i),
                y(j + 1)
            );
        }
    }
    for e in k.cubes(1) {
        let (a, b) = k.endpoints(e).expect("valid edge");
        let (pa, pb) = (model.point(a), model.point(b));
        let _ = writeln!(
            s,
            r#"<line class="edge" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            x(pa[0]),
            y(pa[1]),
            x(pb[0]),
            y(pb[1])
        );
    }
    for v in k.cubes(0) {
        let p = model.point(v);
        let _ = writeln!(s, r#"<circle class="vertex" cx="{}" cy="{}" r="3"/>"#, x(p[0]), y(p[1]));
    }

    for (p, label) in [(vec![0, 0], "init"), (vec![n1, n2], "final")] {
        let _ = writeln!(
            s,
            r#"<rect class="{label}" x="{}" y="{}" width="10" height="10"/>"#,
            x(p[0]) - 5,
            y(p[1]) - 5
        );
    }
    for p in &report.unreachable {
        let _ = writeln!(s, r#"<circle class="unreachable" cx="{}" cy="{}" r="9"/>"#, x(p[0]), y(p[1]));
    }
    for p in &report.unsafe_states {
        let (cx, cy) = (x(p[0]), y(p[1]));
        let _ = writeln!(
            s,
            r#"<polygon class="unsafe" points="{},{} {},{} {},{} {},{}"/>"#,
            cx,
            cy - 13,
            cx + 13,
            cy,
            cx,
            cy + 13,
            cx - 13,
            cy
        );
    }
    for p in &report.deadlocks {
        let (cx, cy) = (x(p[0]), y(p[1]));
        let _ = writeln!(
            s,
            r#"<path class="deadlock" d="M{} {} L{} {} M{} {} L{} {}"/>"#,
            cx - 7,
            cy - 7,
            cx + 7,
            cy + 7,
            cx - 7,
            cy + 7,
            cx + 7,
            cy - 7
        );
    }

    for (i, a) in model.program.processes[0].iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{a}</text>"#,
            x(i) + UNIT / 2,
            y(0) + 24
        );
    }
    for (j, a) in model.program.processes[1].iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{a}</text>"#,
            x(0) - 12,
            y(j) - UNIT / 2 + 4
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">deadlocks {} unreachable {} unsafe {}</text>"#,
        MARGIN,
        MARGIN / 2,
        report.deadlocks.len(),
        report.unreachable.len(),
        report.unsafe_states.len()
    );
    s.push_str("</svg>\n");
    Ok(s)
}
