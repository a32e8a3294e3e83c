use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use serde_json::{json, Value};

use garside::diagram::export_dot;
use garside::mbrace::{
    check_left_mbrace, check_right_mbrace, invertible_uniqueness, right_distributivity_witness, MbraceError,
};
use garside::partialbrace::{FractionGroup, OplusOutcome, PartialBraceError, SampleSpec};
use garside::presentation::{parse_positive_word, ParseError};
use garside::report::{PropertyReport, Render};
use garside::reversing::{
    cube_check, lcm_left, lcm_right, left_reverse, right_reverse, ReversingError, ReversingTrace,
};
use garside::ybe::{check_solution, mp_level, retract, structure_presentation, MpLevel, Solution, YbeError};
use garside::{
    parse_presentation, parse_word, validate, AtomTable, ComplementTable, CongruenceIndex, Direction, OracleError,
    Presentation,
};

use crate::{CliError, Config, Report};

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded(_) | OracleError::OutOfRange { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<ReversingError> for CliError {
    fn from(e: ReversingError) -> Self {
        match e {
            ReversingError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            ReversingError::Oracle(o) => o.into(),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<MbraceError> for CliError {
    fn from(e: MbraceError) -> Self {
        match e {
            MbraceError::Oracle(o) => o.into(),
            MbraceError::Reversing(r) => r.into(),
        }
    }
}

impl From<PartialBraceError> for CliError {
    fn from(e: PartialBraceError) -> Self {
        match e {
            PartialBraceError::Oracle(o) => o.into(),
            PartialBraceError::Reversing(r) => r.into(),
            PartialBraceError::Parse(p) => p.into(),
        }
    }
}

impl From<YbeError> for CliError {
    fn from(e: YbeError) -> Self {
        match e {
            YbeError::Malformed(_) | YbeError::OutOfRange(_) => CliError::Input(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Presentation, CliError> {
    parse_presentation(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn pair(atoms: &AtomTable, x: usize, y: usize) -> String {
    format!("({},{})", atoms.name(x), atoms.name(y))
}

fn table(p: &Presentation, direction: Direction) -> Result<ComplementTable, CliError> {
    Ok(ComplementTable::build(p, direction)?)
}

pub fn check(c: &Config, path: &Path) -> Result<Report, CliError> {
    let p = load(path)?;
    let atoms = p.atoms();
    let v = validate(&p);
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut text = String::new();
    let _ = writeln!(text, "presentation: {} atoms, {} relations", p.rank(), p.relations().len());
    let _ = writeln!(text, "homogeneous: {}", yn(v.homogeneous));
    let _ = writeln!(text, "quadratic: {}", yn(v.quadratic));
    let _ = writeln!(text, "complemented: {}", yn(v.complemented));
    for ((x, y), rels) in &v.ambiguous_pairs {
        let nums: Vec<String> = rels.iter().map(|r| (r + 1).to_string()).collect();
        let _ = writeln!(text, "ambiguous pair {} closed by relations {}", pair(atoms, *x, *y), nums.join(", "));
    }
    let _ = writeln!(text, "complete: {}", yn(v.missing_pairs.is_empty()));
    for &(x, y) in &v.missing_pairs {
        let _ = writeln!(text, "missing pair {}", pair(atoms, x, y));
    }

    let mut cube_json = Value::Null;
    let mut cube_ok = false;
    if !v.homogeneous {
        let _ = writeln!(text, "cube check: not run (presentation is not homogeneous)");
    } else if !v.complemented {
        let _ = writeln!(text, "cube check: not run (presentation is not complemented)");
    } else {
        let ct = table(&p, Direction::Right)?;
        let idx = CongruenceIndex::build(&p, c.max_len)?;
        let r = cube_check(&ct, &idx, c.steps)?;
        cube_ok = r.passed;
        let _ = writeln!(
            text,
            "cube check: {} ({} triples checked, {} skipped)",
            if r.passed { "passed" } else { "failed" },
            r.checked,
            r.skipped.len()
        );
        for f in &r.failures {
            let (x, y, z) = f.triple;
            let _ = writeln!(
                text,
                "  triple ({},{},{}): {} vs {}",
                atoms.name(x),
                atoms.name(y),
                atoms.name(z),
                f.lhs.render(atoms),
                f.rhs.render(atoms)
            );
        }
        cube_json = json!({
            "passed": r.passed,
            "checked": r.checked,
            "skipped": r.skipped.len(),
            "failures": r.failures.iter().map(|f| json!({
                "triple": [atoms.name(f.triple.0), atoms.name(f.triple.1), atoms.name(f.triple.2)],
                "lhs": f.lhs.render(atoms),
                "rhs": f.rhs.render(atoms),
            })).collect::<Vec<_>>(),
        });
    }
    let passed = v.homogeneous && v.complemented && v.missing_pairs.is_empty() && cube_ok;
    let json = json!({
        "homogeneous": v.homogeneous,
        "quadratic": v.quadratic,
        "complemented": v.complemented,
        "missing_pairs": v.missing_pairs.iter().map(|&(x, y)| [atoms.name(x), atoms.name(y)]).collect::<Vec<_>>(),
        "ambiguous_pairs": v.ambiguous_pairs.iter().map(|((x, y), rels)| json!({
            "pair": [atoms.name(*x), atoms.name(*y)],
            "relations": rels.iter().map(|r| r + 1).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "cube": cube_json,
        "passed": passed,
    });
    Ok(Report { text, json, passed })
}

fn write_dot(dot: Option<&Path>, trace: &ReversingTrace, atoms: &AtomTable) -> Result<(), CliError> {
    match dot {
        Some(path) => write_file(path, &export_dot(trace, atoms)),
        None => Ok(()),
    }
}

/// Stuck reversings are reported on the normal output with exit code 1.
fn stuck_report(x: usize, y: usize, atoms: &AtomTable) -> Report {
    Report {
        text: format!("stuck at {}", pair(atoms, x, y)),
        json: json!({ "stuck": [atoms.name(x), atoms.name(y)] }),
        passed: false,
    }
}

pub fn lcm(c: &Config, path: &Path, a: &str, b: &str, right: bool, dot: Option<&Path>) -> Result<Report, CliError> {
    let p = load(path)?;
    let atoms = p.atoms();
    let (a, b) = (parse_positive_word(a, atoms)?, parse_positive_word(b, atoms)?);
    let result = if right {
        lcm_right(&table(&p, Direction::Left)?, &a, &b, c.steps)
    } else {
        lcm_left(&table(&p, Direction::Right)?, &a, &b, c.steps)
    };
    match result {
        Ok(l) => {
            write_dot(dot, &l.trace, atoms)?;
            Ok(Report {
                text: format!(
                    "m = {}\nu = {}\nv = {}\n",
                    l.m.render(atoms),
                    l.u.render(atoms),
                    l.v.render(atoms)
                ),
                json: json!({
                    "m": l.m.render(atoms),
                    "u": l.u.render(atoms),
                    "v": l.v.render(atoms),
                    "steps": l.trace.steps.len(),
                }),
                passed: true,
            })
        }
        Err(ReversingError::Stuck { x, y, trace }) => {
            write_dot(dot, &trace, atoms)?;
            Ok(stuck_report(x, y, atoms))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn reverse(c: &Config, path: &Path, word: &str, left: bool, dot: Option<&Path>) -> Result<Report, CliError> {
    let p = load(path)?;
    let atoms = p.atoms();
    let w = parse_word(word, atoms)?;
    let result = if left {
        left_reverse(&table(&p, Direction::Left)?, &w, c.steps)
    } else {
        right_reverse(&table(&p, Direction::Right)?, &w, c.steps)
    };
    match result {
        Ok(r) => {
            write_dot(dot, &r.trace, atoms)?;
            let shape = if left { "u^-1 v" } else { "u v^-1" };
            Ok(Report {
                text: format!(
                    "result = {} ({shape})\nu = {}\nv = {}\nsteps = {}\n",
                    r.trace.final_word.render(atoms),
                    r.u.render(atoms),
                    r.v.render(atoms),
                    r.trace.steps.len()
                ),
                json: json!({
                    "result": r.trace.final_word.render(atoms),
                    "u": r.u.render(atoms),
                    "v": r.v.render(atoms),
                    "steps": r.trace.steps.len(),
                }),
                passed: true,
            })
        }
        Err(ReversingError::Stuck { x, y, trace }) => {
            write_dot(dot, &trace, atoms)?;
            Ok(stuck_report(x, y, atoms))
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Args)]
pub struct SolutionArgs {
    /// Solution file: {"n", "sigma", "gamma"} with 1-based values, optional "names".
    pub file: PathBuf,
    /// Check the braid relation, involutivity and non-degeneracy (the default).
    #[arg(long)]
    pub check: bool,
    /// Print the retraction.
    #[arg(long)]
    pub retract: bool,
    /// Print the multipermutation level.
    #[arg(long = "mp-level")]
    pub mp_level: bool,
    /// Write the structure presentation to PATH, or print it without a path.
    #[arg(long = "emit-presentation", value_name = "PATH", num_args = 0..=1)]
    pub emit_presentation: Option<Option<PathBuf>>,
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

pub fn solution(_c: &Config, args: &SolutionArgs) -> Result<Report, CliError> {
    let (s, names) = Solution::from_json_named(&read(&args.file)?)?;
    let one = |x: usize| x + 1;
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    let mut passed = true;
    let nothing_requested = !args.check && !args.retract && !args.mp_level && args.emit_presentation.is_none();

    if args.check || nothing_requested {
        let r = check_solution(&s);
        passed &= r.is_solution();
        let _ = writeln!(text, "braided {} ({} triples)", mark(r.braided), r.triples_checked);
        let _ = writeln!(text, "involutive {} ({} pairs)", mark(r.involutive), r.pairs_checked);
        let _ = writeln!(
            text,
            "nondegenerate {} ({} permutation tests)",
            mark(r.nondegenerate),
            r.permutation_tests
        );
        let _ = writeln!(text, "square-free {}", mark(r.squarefree));
        if let Some(&(x, y, z)) = r.braid_witnesses.first() {
            let _ = writeln!(text, "braid relation fails at ({}, {}, {})", one(x), one(y), one(z));
        }
        if let Some(&(x, y)) = r.involution_witnesses.first() {
            let _ = writeln!(text, "r∘r differs from the identity at ({}, {})", one(x), one(y));
        }
        json.insert("check".into(), serde_json::to_value(&r).expect("report serializes"));
    }
    if args.retract {
        let r = retract(&s)?;
        let classes: Vec<usize> = r.classes.iter().map(|&c| one(c)).collect();
        let _ = writeln!(
            text,
            "retraction: {} points -> {} classes {:?}",
            s.size(),
            r.solution.size(),
            classes
        );
        json.insert(
            "retraction".into(),
            json!({ "classes": classes, "solution": r.solution.to_file() }),
        );
    }
    if args.mp_level {
        let level = match mp_level(&s, s.size())? {
            MpLevel::Level(k) => k.to_string(),
            MpLevel::Irretractable => "irretractable".to_string(),
            MpLevel::BudgetExceeded => return Err(CliError::Budget("multipermutation level not reached".into())),
        };
        let _ = writeln!(text, "multipermutation level: {level}");
        json.insert("mp_level".into(), json!(level));
    }
    if let Some(target) = &args.emit_presentation {
        let p = structure_presentation(&s)?;
        let p = match names {
            Some(names) => {
                let atoms = AtomTable::new(names)?;
                Presentation::new(atoms, p.relations().to_vec()).map_err(|e| CliError::Input(e.to_string()))?
            }
            None => p,
        };
        let rendered = p.render();
        match target {
            Some(path) => {
                write_file(path, &rendered)?;
                let _ = writeln!(text, "structure presentation written to {}", path.display());
            }
            None => text.push_str(&rendered),
        }
        json.insert("presentation".into(), json!(rendered));
    }
    Ok(Report {
        text,
        json: Value::Object(json),
        passed,
    })
}

#[derive(Debug, Args)]
pub struct BraceArgs {
    pub presentation: PathBuf,
    /// Left M-brace axioms for the left lcm (the default).
    #[arg(long)]
    pub left: bool,
    /// Right M-brace axioms for the right lcm.
    #[arg(long)]
    pub right: bool,
    /// Search for a failure of right distributivity of the left lcm.
    #[arg(long = "right-dist-witness")]
    pub right_dist_witness: bool,
    /// Partial brace axioms on the group of fractions.
    #[arg(long)]
    pub partial: bool,
    /// Compute g ⊕ h for two group elements (`num / den` or a signed word).
    #[arg(long, num_args = 2, value_names = ["G", "H"])]
    pub oplus: Option<Vec<String>>,
    /// Oracle length bound; defaults to max(8, 2·max-len + 4).
    #[arg(long = "oracle-len")]
    pub oracle_len: Option<usize>,
    /// Length bound on numerators and denominators for pair properties.
    #[arg(long = "pair-len", default_value_t = SampleSpec::default().pair_length)]
    pub pair_len: usize,
    /// Length bound on numerators and denominators for triple properties.
    #[arg(long = "triple-len", default_value_t = SampleSpec::default().triple_length)]
    pub triple_len: usize,
}

fn add_reports<T: Render>(
    reports: &[PropertyReport<T>],
    atoms: &AtomTable,
    text: &mut String,
    json: &mut Vec<Value>,
) -> bool {
    for r in reports {
        let _ = writeln!(text, "{}", r.summary(atoms));
        json.push(r.to_json(atoms));
    }
    reports.iter().all(|r| r.passed())
}

pub fn brace(c: &Config, args: &BraceArgs) -> Result<Report, CliError> {
    let p = load(&args.presentation)?;
    let atoms = p.atoms();
    let bound = args.oracle_len.unwrap_or((2 * c.max_len + 4).max(8));
    let idx = CongruenceIndex::build(&p, bound)?;
    let ct = table(&p, Direction::Right)?;
    let nothing_requested =
        !args.left && !args.right && !args.right_dist_witness && !args.partial && args.oplus.is_none();

    let mut text = String::new();
    let mut reports = Vec::new();
    let mut json = serde_json::Map::new();
    let mut passed = true;

    if args.left || nothing_requested {
        let mut rs = check_left_mbrace(&idx, &ct, c.max_len, c.steps)?;
        rs.push(invertible_uniqueness(&idx));
        passed &= add_reports(&rs, atoms, &mut text, &mut reports);
    }
    if args.right {
        let ctl = table(&p, Direction::Left)?;
        let rs = check_right_mbrace(&idx, &ctl, c.max_len, c.steps)?;
        passed &= add_reports(&rs, atoms, &mut text, &mut reports);
    }
    if args.right_dist_witness {
        match right_distributivity_witness(&idx, &ct, c.max_len, c.steps)? {
            Some(w) => {
                let _ = writeln!(
                    text,
                    "right distributivity fails: a = {}, b = {}, c = {}: (a ⊕ b) c = {} but a c ⊕ b c = {}",
                    w.a.render(atoms),
                    w.b.render(atoms),
                    w.c.render(atoms),
                    w.lhs.render(atoms),
                    w.rhs.render(atoms)
                );
                json.insert(
                    "right_dist_witness".into(),
                    json!({
                        "a": w.a.render(atoms), "b": w.b.render(atoms), "c": w.c.render(atoms),
                        "lhs": w.lhs.render(atoms), "rhs": w.rhs.render(atoms),
                    }),
                );
            }
            None => {
                let _ = writeln!(text, "right distributivity witness: none within bound");
                json.insert("right_dist_witness".into(), Value::Null);
            }
        }
    }
    let fg = FractionGroup::new(&idx, &ct, c.steps);
    if args.partial {
        let spec = SampleSpec {
            pair_length: args.pair_len,
            triple_length: args.triple_len,
        };
        let rs = fg.check_axioms(spec)?;
        passed &= add_reports(&rs, atoms, &mut text, &mut reports);
    }
    if let Some(pair) = &args.oplus {
        let g = fg.parse(&pair[0], atoms)?;
        let h = fg.parse(&pair[1], atoms)?;
        let value = match fg.oplus(&g, &h)? {
            OplusOutcome::Defined(v, _) => {
                let _ = writeln!(text, "{} ⊕ {} = {}", g.render(atoms), h.render(atoms), v.render(atoms));
                json!({ "defined": v.to_json(atoms) })
            }
            OplusOutcome::Undefined(u) => {
                let reason = u.describe(atoms);
                let _ = writeln!(text, "undefined: {reason}");
                json!({ "undefined": reason })
            }
            OplusOutcome::Ambiguous(vals) => {
                let shown: Vec<String> = vals.iter().map(|v| v.render(atoms)).collect();
                let _ = writeln!(text, "ambiguous: {}", shown.join("; "));
                json!({ "ambiguous": vals.iter().map(|v| v.to_json(atoms)).collect::<Vec<_>>() })
            }
        };
        json.insert("oplus".into(), value);
    }
    json.insert("reports".into(), Value::Array(reports));
    json.insert("passed".into(), json!(passed));
    Ok(Report {
        text,
        json: Value::Object(json),
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use garside::Word;

    #[test]
    fn error_classes_map_to_exit_codes() {
        let budget: CliError = OracleError::OutOfRange {
            length: 9,
            max_length: 4,
        }
        .into();
        assert!(matches!(budget, CliError::Budget(_)));
        let bad: CliError = YbeError::Malformed("x".into()).into();
        assert!(matches!(bad, CliError::Input(_)));
        let failed: CliError = YbeError::NotASolution("x".into()).into();
        assert!(matches!(failed, CliError::Failed(_)));
    }

    #[test]
    fn words_render_for_output() {
        let atoms = AtomTable::numbered(2);
        assert_eq!(pair(&atoms, 0, 1), "(x1,x2)");
        assert_eq!(Word::empty().render(&atoms), "1");
    }
}
