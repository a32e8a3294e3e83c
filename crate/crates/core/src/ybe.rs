//! Finite set-theoretic solutions `r(x, y) = (σ_x(y), γ_y(x))` of the
//! Yang–Baxter equation and their structure monoids.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::{validate, Atom, AtomTable, Presentation, Relation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbeError {
    #[error("malformed solution: {0}")]
    Malformed(String),
    #[error("point {0} is outside the solution")]
    OutOfRange(usize),
    #[error("not a non-degenerate involutive solution: {0}")]
    NotASolution(String),
    #[error("presentation does not have the shape of a structure monoid: {0}")]
    ShapeMismatch(String),
    #[error("conflicting values extracted for {map}[{x}][{y}]")]
    ExtractionConflict { map: &'static str, x: usize, y: usize },
    #[error("induced retraction map is not well defined at classes ({0}, {1})")]
    InconsistentRetract(usize, usize),
}

/// A map `r: X × X → X × X` on `X = {0, .., n-1}`.
///
/// `sigma[x][y] = σ_x(y)` and `gamma[y][x] = γ_y(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    n: usize,
    sigma: Vec<Vec<usize>>,
    gamma: Vec<Vec<usize>>,
}

/// The JSON form, with 1-based values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub n: usize,
    pub sigma: Vec<Vec<usize>>,
    pub gamma: Vec<Vec<usize>>,
    /// Optional point names, used for the structure presentation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl Solution {
    pub fn new(n: usize, sigma: Vec<Vec<usize>>, gamma: Vec<Vec<usize>>) -> Result<Self, YbeError> {
        if n == 0 {
            return Err(YbeError::Malformed("the set must be non-empty".into()));
        }
        for (name, table) in [("sigma", &sigma), ("gamma", &gamma)] {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(YbeError::Malformed(format!("{name} must be {n} rows of {n} values")));
            }
            if table.iter().flatten().any(|&v| v >= n) {
                return Err(YbeError::Malformed(format!("{name} has a value out of range")));
            }
        }
        Ok(Solution { n, sigma, gamma })
    }

    pub fn from_one_based(
        n: usize,
        sigma: &[Vec<usize>],
        gamma: &[Vec<usize>],
    ) -> Result<Self, YbeError> {
        let shift = |t: &[Vec<usize>]| -> Result<Vec<Vec<usize>>, YbeError> {
            t.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| {
                            v.checked_sub(1)
                                .ok_or_else(|| YbeError::Malformed("values are 1-based".into()))
                        })
                        .collect()
                })
                .collect()
        };
        Solution::new(n, shift(sigma)?, shift(gamma)?)
    }

    pub fn from_json(text: &str) -> Result<Self, YbeError> {
        Ok(Solution::from_json_named(text)?.0)
    }

    /// Like [`Solution::from_json`], also returning the `names` field if present.
    pub fn from_json_named(text: &str) -> Result<(Self, Option<Vec<String>>), YbeError> {
        let f: SolutionFile =
            serde_json::from_str(text).map_err(|e| YbeError::Malformed(e.to_string()))?;
        if f.names.as_ref().is_some_and(|names| names.len() != f.n) {
            return Err(YbeError::Malformed(format!("names must list {} points", f.n)));
        }
        Ok((Solution::from_one_based(f.n, &f.sigma, &f.gamma)?, f.names))
    }

    pub fn to_file(&self) -> SolutionFile {
        let shift = |t: &[Vec<usize>]| t.iter().map(|r| r.iter().map(|v| v + 1).collect()).collect();
        SolutionFile {
            n: self.n,
            sigma: shift(&self.sigma),
            gamma: shift(&self.gamma),
            names: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("plain data serializes")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sigma(&self, x: usize, y: usize) -> usize {
        self.sigma[x][y]
    }

    pub fn gamma(&self, y: usize, x: usize) -> usize {
        self.gamma[y][x]
    }

    /// `(σ_x(y), γ_y(x))`
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.sigma[x][y], self.gamma[y][x])
    }
}

pub fn r_map(s: &Solution, x: usize, y: usize) -> Result<(usize, usize), YbeError> {
    for p in [x, y] {
        if p >= s.n {
            return Err(YbeError::OutOfRange(p));
        }
    }
    Ok(s.r(x, y))
}

/// Which permutation failed the bijectivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapRef {
    Sigma(usize),
    Gamma(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub braided: bool,
    pub involutive: bool,
    pub nondegenerate: bool,
    pub squarefree: bool,
    pub triples_checked: usize,
    pub pairs_checked: usize,
    pub permutation_tests: usize,
    pub braid_witnesses: Vec<(usize, usize, usize)>,
    pub involution_witnesses: Vec<(usize, usize)>,
    pub degenerate_maps: Vec<MapRef>,
    pub squarefree_witnesses: Vec<usize>,
}

impl SolutionReport {
    /// Braided, involutive and non-degenerate.
    pub fn is_solution(&self) -> bool {
        self.braided && self.involutive && self.nondegenerate
    }
}

fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

pub fn check_solution(s: &Solution) -> SolutionReport {
    let n = s.n;
    let r12 = |(a, b, c): (usize, usize, usize)| {
        let (a, b) = s.r(a, b);
        (a, b, c)
    };
    let r23 = |(a, b, c): (usize, usize, usize)| {
        let (b, c) = s.r(b, c);
        (a, b, c)
    };
    let mut braid_witnesses = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = (x, y, z);
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    braid_witnesses.push(t);
                }
            }
        }
    }
    let mut involution_witnesses = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (a, b) = s.r(x, y);
            if s.r(a, b) != (x, y) {
                involution_witnesses.push((x, y));
            }
        }
    }
    let mut degenerate_maps = Vec::new();
    for x in 0..n {
        if !is_permutation(&s.sigma[x]) {
            degenerate_maps.push(MapRef::Sigma(x));
        }
        if !is_permutation(&s.gamma[x]) {
            degenerate_maps.push(MapRef::Gamma(x));
        }
    }
    let squarefree_witnesses: Vec<usize> = (0..n).filter(|&x| s.r(x, x) != (x, x)).collect();
    SolutionReport {
        braided: braid_witnesses.is_empty(),
        involutive: involution_witnesses.is_empty(),
        nondegenerate: degenerate_maps.is_empty(),
        squarefree: squarefree_witnesses.is_empty(),
        triples_checked: n * n * n,
        pairs_checked: n * n,
        permutation_tests: 2 * n,
        braid_witnesses,
        involution_witnesses,
        degenerate_maps,
        squarefree_witnesses,
    }
}

fn require_solution(s: &Solution) -> Result<SolutionReport, YbeError> {
    let report = check_solution(s);
    if !report.is_solution() {
        let mut failed = Vec::new();
        if !report.braided {
            failed.push("not braided");
        }
        if !report.involutive {
            failed.push("not involutive");
        }
        if !report.nondegenerate {
            failed.push("degenerate");
        }
        return Err(YbeError::NotASolution(failed.join(", ")));
    }
    Ok(report)
}

/// `Mon<X | x y = σ_x(y) γ_y(x)>` with trivial relations dropped and one
/// relation per unordered pair of words; each relation has its lexicographically
/// smaller side on the left, and relations are sorted by that side.
pub fn structure_presentation(s: &Solution) -> Result<Presentation, YbeError> {
    require_solution(s)?;
    let mut rels = BTreeSet::new();
    for x in 0..s.n {
        for y in 0..s.n {
            let (a, b) = s.r(x, y);
            if (a, b) != (x, y) {
                rels.insert(((x, y).min((a, b)), (x, y).max((a, b))));
            }
        }
    }
    let relations = rels
        .into_iter()
        .map(|((a, b), (c, d))| Relation::new(Word::new(vec![a, b]), Word::new(vec![c, d])))
        .collect();
    Ok(Presentation::new(AtomTable::numbered(s.n), relations)
        .expect("generated relations are non-degenerate"))
}

/// Reads `σ` and `γ` off a quadratic presentation with `n(n-1)/2` relations in
/// which no length-two word occurs twice.
pub fn presentation_to_solution(p: &Presentation) -> Result<Solution, YbeError> {
    let n = p.rank();
    let report = validate(p);
    if !report.quadratic {
        return Err(YbeError::ShapeMismatch("every relation side must have length 2".into()));
    }
    if p.relations().len() != n * (n - 1) / 2 {
        return Err(YbeError::ShapeMismatch(format!(
            "{} relations, expected n(n-1)/2 = {}",
            p.relations().len(),
            n * (n - 1) / 2
        )));
    }
    let mut seen = BTreeSet::new();
    for r in p.relations() {
        for side in [&r.lhs, &r.rhs] {
            if !seen.insert(side.clone()) {
                return Err(YbeError::ShapeMismatch(format!(
                    "word {} occurs more than once",
                    side.render(p.atoms())
                )));
            }
        }
    }
    let mut sigma: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let mut gamma: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let mut assign = |(x, y): (Atom, Atom), (z, w): (Atom, Atom)| -> Result<(), YbeError> {
        for (map, table, i, j, v) in [("sigma", &mut sigma, x, y, z), ("gamma", &mut gamma, y, x, w)] {
            match table[i][j] {
                Some(old) if old != v => return Err(YbeError::ExtractionConflict { map, x: i, y: j }),
                _ => table[i][j] = Some(v),
            }
        }
        Ok(())
    };
    for r in p.relations() {
        let (l, rr) = (r.lhs.letters(), r.rhs.letters());
        assign((l[0], l[1]), (rr[0], rr[1]))?;
        assign((rr[0], rr[1]), (l[0], l[1]))?;
    }
    for x in 0..n {
        for y in 0..n {
            if !seen.contains(&Word::new(vec![x, y])) {
                assign((x, y), (x, y))?;
            }
        }
    }
    let unwrap = |t: Vec<Vec<Option<usize>>>| -> Vec<Vec<usize>> {
        t.into_iter()
            .map(|row| row.into_iter().map(|v| v.expect("every pair is assigned")).collect())
            .collect()
    };
    let s = Solution::new(n, unwrap(sigma), unwrap(gamma))?;
    require_solution(&s)?;
    Ok(s)
}

/// The induced solution on classes of equal `σ` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Retraction {
    pub solution: Solution,
    /// Class of each point of the input, numbered by first occurrence.
    pub classes: Vec<usize>,
}

pub fn retract(s: &Solution) -> Result<Retraction, YbeError> {
    require_solution(s)?;
    let mut rows: Vec<&Vec<usize>> = Vec::new();
    let classes: Vec<usize> = s
        .sigma
        .iter()
        .map(|row| match rows.iter().position(|r| *r == row) {
            Some(i) => i,
            None => {
                rows.push(row);
                rows.len() - 1
            }
        })
        .collect();
    let m = rows.len();
    let mut sigma: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    let mut gamma: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    for x in 0..s.n {
        for y in 0..s.n {
            let (cx, cy) = (classes[x], classes[y]);
            let (a, b) = s.r(x, y);
            for (table, i, j, v) in [(&mut sigma, cx, cy, classes[a]), (&mut gamma, cy, cx, classes[b])] {
                match table[i][j] {
                    Some(old) if old != v => return Err(YbeError::InconsistentRetract(cx, cy)),
                    _ => table[i][j] = Some(v),
                }
            }
        }
    }
    let unwrap = |t: Vec<Vec<Option<usize>>>| -> Vec<Vec<usize>> {
        t.into_iter()
            .map(|row| row.into_iter().map(|v| v.expect("classes are inhabited")).collect())
            .collect()
    };
    Ok(Retraction {
        solution: Solution::new(m, unwrap(sigma), unwrap(gamma))?,
        classes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MpLevel {
    Level(usize),
    Irretractable,
    BudgetExceeded,
}

/// Iterates [`retract`] until a single point remains or the size stalls.
pub fn mp_level(s: &Solution, budget: usize) -> Result<MpLevel, YbeError> {
    let mut current = s.clone();
    if current.n == 1 {
        return Ok(MpLevel::Level(0));
    }
    for m in 1..=budget {
        let next = retract(&current)?.solution;
        if next.n == 1 {
            return Ok(MpLevel::Level(m));
        }
        if next.n == current.n {
            return Ok(MpLevel::Irretractable);
        }
        current = next;
    }
    Ok(MpLevel::BudgetExceeded)
}
