//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and returns a JSON document. Failures
//! come back as `{"error": "..."}` so the page never has to catch.

use std::fmt::Write as _;

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use garside::diagram::Diagram;
use garside::partialbrace::{FractionGroup, OplusOutcome};
use garside::presentation::parse_positive_word;
use garside::reversing::{lcm_left, ReversingError, ReversingTrace};
use garside::ybe::{check_solution, mp_level, structure_presentation, MpLevel, Solution};
use garside::{
    parse_presentation, AtomTable, ComplementTable, CongruenceIndex, Direction, Presentation,
    DEFAULT_STEP_BUDGET,
};

const CELL: f64 = 60.0;
const MARGIN: f64 = 30.0;

fn error(msg: impl ToString) -> Value {
    json!({ "error": msg.to_string() })
}

fn load(text: &str) -> Result<Presentation, Value> {
    parse_presentation(text).map_err(error)
}

/// Left lcm of two positive words, with the reversing diagram as SVG.
pub fn lcm_value(presentation: &str, a: &str, b: &str) -> Value {
    let p = match load(presentation) {
        Ok(p) => p,
        Err(e) => return e,
    };
    let atoms = p.atoms();
    let words = parse_positive_word(a, atoms).and_then(|a| Ok((a, parse_positive_word(b, atoms)?)));
    let (a, b) = match words {
        Ok(w) => w,
        Err(e) => return error(e),
    };
    let ct = match ComplementTable::build(&p, Direction::Right) {
        Ok(ct) => ct,
        Err(e) => return error(e),
    };
    match lcm_left(&ct, &a, &b, DEFAULT_STEP_BUDGET) {
        Ok(l) => json!({
            "m": l.m.render(atoms),
            "u": l.u.render(atoms),
            "v": l.v.render(atoms),
            "steps": l.trace.steps.len(),
            "svg": diagram_svg(&l.trace, atoms),
        }),
        Err(ReversingError::Stuck { x, y, trace }) => json!({
            "stuck": [atoms.name(x), atoms.name(y)],
            "steps": trace.steps.len(),
            "svg": diagram_svg(&trace, atoms),
        }),
        Err(e) => error(e),
    }
}

/// Checks a solution given in the JSON file format and, if it is one,
/// returns its structure presentation.
pub fn solution_value(text: &str) -> Value {
    let (s, names) = match Solution::from_json_named(text) {
        Ok(s) => s,
        Err(e) => return error(e),
    };
    let report = check_solution(&s);
    let mut out = json!({
        "size": s.size(),
        "braided": report.braided,
        "involutive": report.involutive,
        "nondegenerate": report.nondegenerate,
        "squarefree": report.squarefree,
        "solution": report.is_solution(),
    });
    if !report.is_solution() {
        return out;
    }
    let level = match mp_level(&s, s.size()) {
        Ok(MpLevel::Level(k)) => json!(k),
        Ok(MpLevel::Irretractable) => json!("irretractable"),
        Ok(MpLevel::BudgetExceeded) => Value::Null,
        Err(e) => return error(e),
    };
    out["mp_level"] = level;
    let p = structure_presentation(&s).and_then(|p| match names {
        Some(names) => {
            let atoms = AtomTable::new(names).expect("names were validated with the file");
            Ok(Presentation::new(atoms, p.relations().to_vec()).expect("same relations, renamed atoms"))
        }
        None => Ok(p),
    });
    match p {
        Ok(p) => out["presentation"] = json!(p.render()),
        Err(e) => return error(e),
    }
    out
}

/// The partial operation on the group of fractions. `g` and `h` are
/// `num / den` or signed words such as `x1 x2^-1`.
pub fn oplus_value(presentation: &str, g: &str, h: &str, oracle_len: usize) -> Value {
    let p = match load(presentation) {
        Ok(p) => p,
        Err(e) => return e,
    };
    let atoms = p.atoms();
    let idx = match CongruenceIndex::build(&p, oracle_len) {
        Ok(idx) => idx,
        Err(e) => return error(e),
    };
    let ct = match ComplementTable::build(&p, Direction::Right) {
        Ok(ct) => ct,
        Err(e) => return error(e),
    };
    let fg = FractionGroup::new(&idx, &ct, DEFAULT_STEP_BUDGET);
    let (g, h) = match fg.parse(g, atoms).and_then(|g| Ok((g, fg.parse(h, atoms)?))) {
        Ok(pair) => pair,
        Err(e) => return error(e),
    };
    let mut out = json!({ "g": g.render(atoms), "h": h.render(atoms) });
    match fg.oplus(&g, &h) {
        Ok(OplusOutcome::Defined(v, trace)) => {
            out["value"] = json!(v.render(atoms));
            out["case"] = json!(format!("{:?}", trace.case).to_lowercase());
        }
        Ok(OplusOutcome::Undefined(u)) => out["undefined"] = json!(u.describe(atoms)),
        Ok(OplusOutcome::Ambiguous(vals)) => {
            out["ambiguous"] = json!(vals.iter().map(|v| v.render(atoms)).collect::<Vec<_>>())
        }
        Err(e) => return error(e),
    }
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws the grid of a reversing diagram. Vertices that share a grid point
/// are nudged apart by their layer.
pub fn diagram_svg(trace: &ReversingTrace, atoms: &AtomTable) -> String {
    let d = Diagram::from_trace(trace);
    if d.nodes.is_empty() {
        return String::from("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"60\" height=\"60\"></svg>");
    }
    let min_row = d.nodes.iter().map(|n| n.row).min().unwrap_or(0);
    let min_col = d.nodes.iter().map(|n| n.col).min().unwrap_or(0);
    let max_row = d.nodes.iter().map(|n| n.row).max().unwrap_or(0);
    let max_col = d.nodes.iter().map(|n| n.col).max().unwrap_or(0);
    let at = |v: usize| {
        let n = &d.nodes[v];
        let shift = 8.0 * n.layer as f64;
        (
            MARGIN + (n.col - min_col) as f64 * CELL + shift,
            MARGIN + (n.row - min_row) as f64 * CELL + shift,
        )
    };
    let width = 2.0 * MARGIN + (max_col - min_col) as f64 * CELL;
    let height = 2.0 * MARGIN + (max_row - min_row) as f64 * CELL;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    );
    for &(a, b) in &d.identified {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let _ = writeln!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#888\" stroke-dasharray=\"1 3\"/>"
        );
    }
    for e in &d.edges {
        let ((x1, y1), (x2, y2)) = (at(e.from), at(e.to));
        let colour = if e.blocked { "#c00" } else { "#222" };
        let dash = if e.negative { " stroke-dasharray=\"5 3\"" } else { "" };
        let _ = writeln!(
            out,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{colour}\"{dash}/>"
        );
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let (dx, dy) = if (y1 - y2).abs() < f64::EPSILON { (0.0, -5.0) } else { (6.0, 4.0) };
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" fill=\"{colour}\">{}</text>",
            mx + dx,
            my + dy,
            xml_escape(atoms.name(e.atom))
        );
    }
    for (v, n) in d.nodes.iter().enumerate() {
        let (x, y) = at(v);
        let fill = if n.blocked { "#c00" } else { "#222" };
        let _ = writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"{fill}\"/>");
    }
    out.push_str("</svg>\n");
    out
}

#[wasm_bindgen]
pub fn lcm(presentation: &str, a: &str, b: &str) -> String {
    lcm_value(presentation, a, b).to_string()
}

#[wasm_bindgen]
pub fn solution(text: &str) -> String {
    solution_value(text).to_string()
}

#[wasm_bindgen]
pub fn oplus(presentation: &str, g: &str, h: &str, oracle_len: usize) -> String {
    oplus_value(presentation, g, h, oracle_len).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const IRRETRACTABLE: &str = include_str!("../../../data/example2.pres");
    const INCOMPLETE: &str = include_str!("../../../data/fig2.pres");

    #[test]
    fn lcm_draws_the_grid() {
        let v = lcm_value(IRRETRACTABLE, "x1 x2", "x2 x1");
        assert_eq!(v["m"], "x1 x2 x3 x3");
        let svg = v["svg"].as_str().unwrap();
        assert_eq!(svg.matches("<circle").count(), 9);
        assert_eq!(svg.matches("<line").count(), 12);
    }

    #[test]
    fn stuck_lcm_is_reported() {
        let v = lcm_value(INCOMPLETE, "x0", "x1");
        assert_eq!(v["stuck"], json!(["x0", "x1"]));
        assert!(v["svg"].as_str().unwrap().contains("#c00"));
    }

    #[test]
    fn bad_input_is_an_error_value() {
        assert!(lcm_value("atoms: a\nrel: a = b\n", "a", "a")["error"].is_string());
        assert!(lcm_value(IRRETRACTABLE, "x1", "x7")["error"].is_string());
        assert!(solution_value("{")["error"].is_string());
    }

    #[test]
    fn irretractable_solution_solution() {
        let v = solution_value(include_str!("../../../data/example1.json"));
        assert_eq!(v["solution"], true);
        assert_eq!(v["squarefree"], false);
        assert_eq!(v["mp_level"], "irretractable");
        assert_eq!(v["presentation"].as_str().unwrap().matches("rel:").count(), 6);
    }

    #[test]
    fn oplus_outcomes() {
        let v = oplus_value(IRRETRACTABLE, "x3^-1", "x4^-1", 8);
        assert_eq!(v["value"], "1 / x1 x3");
        assert_eq!(v["case"], "negative");
        let v = oplus_value(IRRETRACTABLE, "x3", "x4^-1", 8);
        assert_eq!(v["undefined"], "no witness z with x4 ∨ z = x4 x3");
    }
}
