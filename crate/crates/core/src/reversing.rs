//! Word reversing over a complemented presentation.
//!
//! Right reversing rewrites `x^-1 y` into `u v^-1` whenever `x u = y v` is a
//! relation (or `x = y`, which closes with empty complements). Applied to
//! `a^-1 b` it terminates in `u v^-1` with `a u = b v` the left lcm of `a` and
//! `b` when the presentation is complete and satisfies the cube condition.
//! Left reversing is the mirror image: `x y^-1` becomes `u^-1 v` with
//! `u x = v y`.

use serde::Serialize;
use thiserror::Error;

use crate::oracle::{CongruenceIndex, OracleError};
use crate::presentation::{pair_cover, Atom, Direction, Letter, Presentation, SignedWord, Word};

/// Default number of rewriting steps before reversing gives up.
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReversingError {
    #[error("atom pair ({x},{y}) is closed by several relations: {relations:?}")]
    AmbiguousPair {
        x: Atom,
        y: Atom,
        relations: Vec<usize>,
    },
    #[error("stuck at ({x},{y}): no relation closes this pair")]
    Stuck {
        x: Atom,
        y: Atom,
        trace: Box<ReversingTrace>,
    },
    #[error("reversing exceeded the budget of {budget} steps")]
    BudgetExceeded {
        budget: usize,
        trace: Box<ReversingTrace>,
    },
    #[error("a {expected:?} complement table is required")]
    WrongDirection { expected: Direction },
    #[error("complement table has not passed the cube check")]
    CubeUnverified,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The closing data of one atom pair: `x·u = y·v` (right) or `u·x = v·y` (left).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complement {
    pub u: Word,
    pub v: Word,
    /// Source relation; `None` for the diagonal `(x, x)`.
    pub relation: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementTable {
    direction: Direction,
    rank: usize,
    entries: Vec<Option<Complement>>,
    missing: Vec<(Atom, Atom)>,
}

impl ComplementTable {
    /// Builds the table; pairs closed by two or more relations are refused.
    pub fn build(p: &Presentation, direction: Direction) -> Result<Self, ReversingError> {
        let n = p.rank();
        let mut entries = vec![None; n * n];
        for x in 0..n {
            entries[x * n + x] = Some(Complement {
                u: Word::empty(),
                v: Word::empty(),
                relation: None,
            });
        }
        let cover = pair_cover(p, direction);
        for (&(x, y), rels) in &cover {
            if rels.len() > 1 {
                return Err(ReversingError::AmbiguousPair {
                    x,
                    y,
                    relations: rels.clone(),
                });
            }
            let i = rels[0];
            let r = &p.relations()[i];
            let (lx, rest_l, rest_r) = match direction {
                Direction::Right => (
                    r.lhs.letters()[0],
                    r.lhs.suffix_from(1),
                    r.rhs.suffix_from(1),
                ),
                Direction::Left => (
                    *r.lhs.letters().last().unwrap(),
                    r.lhs.prefix(r.lhs.len() - 1),
                    r.rhs.prefix(r.rhs.len() - 1),
                ),
            };
            let (from_l, from_r) = if lx == x {
                (rest_l, rest_r)
            } else {
                (rest_r, rest_l)
            };
            entries[x * n + y] = Some(Complement {
                u: from_l.clone(),
                v: from_r.clone(),
                relation: Some(i),
            });
            entries[y * n + x] = Some(Complement {
                u: from_r,
                v: from_l,
                relation: Some(i),
            });
        }
        let missing = (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .filter(|&(x, y)| entries[x * n + y].is_none())
            .collect();
        Ok(ComplementTable {
            direction,
            rank: n,
            entries,
            missing,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, x: Atom, y: Atom) -> Option<&Complement> {
        self.entries[x * self.rank + y].as_ref()
    }

    /// Unordered pairs `x < y` with no closing relation.
    pub fn missing_pairs(&self) -> &[(Atom, Atom)] {
        &self.missing
    }

    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }

    /// A copy with the `(x, y)` entry replaced (and `(y, x)` transposed to match).
    pub fn with_entry(&self, x: Atom, y: Atom, u: Word, v: Word) -> Self {
        let mut out = self.clone();
        let relation = self.get(x, y).and_then(|c| c.relation);
        out.entries[x * self.rank + y] = Some(Complement {
            u: u.clone(),
            v: v.clone(),
            relation,
        });
        out.entries[y * self.rank + x] = Some(Complement { u: v, v: u, relation });
        out.missing.retain(|&p| p != (x.min(y), x.max(y)));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversingStep {
    /// Index of the first letter of the rewritten pair.
    pub position: usize,
    pub x: Atom,
    pub y: Atom,
    pub relation: Option<usize>,
    pub u: Word,
    pub v: Word,
}

/// Where reversing stopped because no relation closes a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Blocked {
    pub position: usize,
    pub x: Atom,
    pub y: Atom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversingTrace {
    pub direction: Direction,
    pub initial: SignedWord,
    pub steps: Vec<ReversingStep>,
    pub final_word: SignedWord,
    pub blocked: Option<Blocked>,
}

impl ReversingTrace {
    /// Replays every step on `initial`.
    pub fn replay(&self) -> SignedWord {
        let mut word = self.initial.letters().to_vec();
        for step in &self.steps {
            let replacement = replacement(self.direction, &step.u, &step.v);
            word.splice(step.position..step.position + 2, replacement);
        }
        SignedWord::new(word)
    }
}

fn replacement(direction: Direction, u: &Word, v: &Word) -> Vec<Letter> {
    match direction {
        Direction::Right => u.to_signed().concat(&v.inverse()),
        Direction::Left => u.inverse().concat(&v.to_signed()),
    }
    .letters()
    .to_vec()
}

/// Outcome of a completed reversing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reversal {
    /// Right: the positive part `u` of `u v^-1`. Left: `u` of `u^-1 v`.
    pub u: Word,
    pub v: Word,
    pub trace: ReversingTrace,
}

fn reverse(
    ct: &ComplementTable,
    w: &SignedWord,
    step_budget: usize,
) -> Result<Reversal, ReversingError> {
    let direction = ct.direction;
    let mut word = w.letters().to_vec();
    let mut steps = Vec::new();
    let mut from = 0;
    let is_pattern = |a: Letter, b: Letter| match direction {
        Direction::Right => !a.is_pos() && b.is_pos(),
        Direction::Left => a.is_pos() && !b.is_pos(),
    };
    loop {
        let Some(pos) = (from..word.len().saturating_sub(1)).find(|&i| is_pattern(word[i], word[i + 1]))
        else {
            break;
        };
        let (x, y) = (word[pos].atom, word[pos + 1].atom);
        let trace = |steps: Vec<ReversingStep>, word: &[Letter], blocked| ReversingTrace {
            direction,
            initial: w.clone(),
            steps,
            final_word: SignedWord::new(word.to_vec()),
            blocked,
        };
        let Some(c) = ct.get(x, y) else {
            return Err(ReversingError::Stuck {
                x,
                y,
                trace: Box::new(trace(steps, &word, Some(Blocked { position: pos, x, y }))),
            });
        };
        if steps.len() >= step_budget {
            return Err(ReversingError::BudgetExceeded {
                budget: step_budget,
                trace: Box::new(trace(steps, &word, None)),
            });
        }
        word.splice(pos..pos + 2, replacement(direction, &c.u, &c.v));
        steps.push(ReversingStep {
            position: pos,
            x,
            y,
            relation: c.relation,
            u: c.u.clone(),
            v: c.v.clone(),
        });
        from = pos.saturating_sub(1);
    }
    let final_word = SignedWord::new(word);
    let (u, v) = match direction {
        Direction::Right => final_word
            .split_positive_negative()
            .expect("no x^-1 y pattern remains"),
        Direction::Left => {
            let letters = final_word.letters();
            let cut = letters.iter().position(|l| l.is_pos()).unwrap_or(letters.len());
            debug_assert!(letters[cut..].iter().all(|l| l.is_pos()));
            let u = Word::new(letters[..cut].iter().rev().map(|l| l.atom).collect());
            let v = Word::new(letters[cut..].iter().map(|l| l.atom).collect());
            (u, v)
        }
    };
    Ok(Reversal {
        u,
        v,
        trace: ReversingTrace {
            direction,
            initial: w.clone(),
            steps,
            final_word,
            blocked: None,
        },
    })
}

/// Right reversing: `w` becomes `u v^-1`, leftmost `x^-1 y` first.
pub fn right_reverse(
    ct: &ComplementTable,
    w: &SignedWord,
    step_budget: usize,
) -> Result<Reversal, ReversingError> {
    if ct.direction != Direction::Right {
        return Err(ReversingError::WrongDirection {
            expected: Direction::Right,
        });
    }
    reverse(ct, w, step_budget)
}

/// Left reversing: `w` becomes `u^-1 v`, leftmost `x y^-1` first.
pub fn left_reverse(
    ct: &ComplementTable,
    w: &SignedWord,
    step_budget: usize,
) -> Result<Reversal, ReversingError> {
    if ct.direction != Direction::Left {
        return Err(ReversingError::WrongDirection {
            expected: Direction::Left,
        });
    }
    reverse(ct, w, step_budget)
}

/// A common multiple with its cofactors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lcm {
    pub m: Word,
    pub u: Word,
    pub v: Word,
    pub trace: ReversingTrace,
}

/// `m = a·u ≡ b·v`, the lcm for left divisibility, from `a^-1 b`.
pub fn lcm_left(
    ct: &ComplementTable,
    a: &Word,
    b: &Word,
    step_budget: usize,
) -> Result<Lcm, ReversingError> {
    let r = right_reverse(ct, &a.inverse().concat(&b.to_signed()), step_budget)?;
    Ok(Lcm {
        m: a.concat(&r.u),
        u: r.u,
        v: r.v,
        trace: r.trace,
    })
}

/// `m = u·a ≡ v·b`, the lcm for right divisibility, from `a b^-1`.
pub fn lcm_right(
    ct_left: &ComplementTable,
    a: &Word,
    b: &Word,
    step_budget: usize,
) -> Result<Lcm, ReversingError> {
    let r = left_reverse(ct_left, &a.to_signed().concat(&b.inverse()), step_budget)?;
    Ok(Lcm {
        m: r.u.concat(a),
        u: r.u,
        v: r.v,
        trace: r.trace,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFailure {
    pub triple: (Atom, Atom, Atom),
    /// `(x ∨ y) ∨ z`
    pub lhs: Word,
    /// `x ∨ (y ∨ z)`
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeReport {
    pub checked: usize,
    pub skipped: Vec<(Atom, Atom, Atom)>,
    pub failures: Vec<CubeFailure>,
    pub passed: bool,
    table: ComplementTable,
}

/// For every atom triple, compares `(x ∨ y) ∨ z` with `x ∨ (y ∨ z)` under the
/// oracle. Triples where reversing is stuck are skipped. A triple also fails
/// when a computed lcm is not a common multiple under the oracle.
pub fn cube_check(
    ct: &ComplementTable,
    idx: &CongruenceIndex,
    step_budget: usize,
) -> Result<CubeReport, ReversingError> {
    let n = ct.rank();
    let mut checked = 0;
    let mut skipped = Vec::new();
    let mut failures = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (x1, y1, z1) = (Word::atom(x), Word::atom(y), Word::atom(z));
                let eval = || -> Result<Option<(Word, Word, bool)>, ReversingError> {
                    let mut sound = true;
                    let mut step = |a: &Word, b: &Word| -> Result<Option<Word>, ReversingError> {
                        match lcm_left(ct, a, b, step_budget) {
                            Ok(l) => {
                                sound &= idx.equal(&l.m, &b.concat(&l.v))?;
                                Ok(Some(l.m))
                            }
                            Err(ReversingError::Stuck { .. }) => Ok(None),
                            Err(e) => Err(e),
                        }
                    };
                    let Some(xy) = step(&x1, &y1)? else { return Ok(None) };
                    let Some(lhs) = step(&xy, &z1)? else { return Ok(None) };
                    let Some(yz) = step(&y1, &z1)? else { return Ok(None) };
                    let Some(rhs) = step(&x1, &yz)? else { return Ok(None) };
                    Ok(Some((lhs, rhs, sound)))
                };
                match eval()? {
                    None => skipped.push((x, y, z)),
                    Some((lhs, rhs, sound)) => {
                        checked += 1;
                        if !sound || !idx.equal(&lhs, &rhs)? {
                            failures.push(CubeFailure {
                                triple: (x, y, z),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(CubeReport {
        checked,
        skipped,
        passed: failures.is_empty(),
        failures,
        table: ct.clone(),
    })
}

/// A right complement table that passed [`cube_check`].
#[derive(Debug, Clone)]
pub struct CheckedTable {
    table: ComplementTable,
}

impl CheckedTable {
    pub fn new(table: ComplementTable, report: &CubeReport) -> Result<Self, ReversingError> {
        if table.direction != Direction::Right {
            return Err(ReversingError::WrongDirection {
                expected: Direction::Right,
            });
        }
        if !report.passed || report.table != table {
            return Err(ReversingError::CubeUnverified);
        }
        Ok(CheckedTable { table })
    }

    pub fn table(&self) -> &ComplementTable {
        &self.table
    }
}

/// Decides `u ≡ v` by reversing `u^-1 v` to the empty word.
pub fn equal_reversing(
    checked: &CheckedTable,
    u: &Word,
    v: &Word,
    step_budget: usize,
) -> Result<bool, ReversingError> {
    let r = right_reverse(&checked.table, &u.inverse().concat(&v.to_signed()), step_budget)?;
    Ok(r.u.is_empty() && r.v.is_empty())
}
