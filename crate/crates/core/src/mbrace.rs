//! The lcm as a second operation on a monoid.
//!
//! With `a ⊕ b` the lcm for left divisibility, `(M, ⊕, ·)` is a commutative
//! idempotent monoid under `⊕` with `a·(b ⊕ c) = a·b ⊕ a·c`. The mirror
//! operation `a + b` (lcm for right divisibility) distributes on the right.
//! Operations are computed by reversing; every equality is decided by the
//! congruence oracle so the sweeps stay independent of the reversing engine.

use thiserror::Error;

use crate::oracle::{CongruenceIndex, OracleError};
use crate::presentation::Word;
use crate::report::PropertyReport;
use crate::reversing::{lcm_left, lcm_right, ComplementTable, ReversingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MbraceError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Reversing(ReversingError),
}

impl From<ReversingError> for MbraceError {
    fn from(e: ReversingError) -> Self {
        match e {
            ReversingError::Oracle(o) => MbraceError::Oracle(o),
            other => MbraceError::Reversing(other),
        }
    }
}

/// `a ⊕ b`: the lcm of `a` and `b` for left divisibility.
pub fn oplus(ct: &ComplementTable, a: &Word, b: &Word, step_budget: usize) -> Result<Word, ReversingError> {
    Ok(lcm_left(ct, a, b, step_budget)?.m)
}

/// `a + b`: the lcm of `a` and `b` for right divisibility.
pub fn plus_right(
    ct_left: &ComplementTable,
    a: &Word,
    b: &Word,
    step_budget: usize,
) -> Result<Word, ReversingError> {
    Ok(lcm_right(ct_left, a, b, step_budget)?.m)
}

/// `Ok(None)` when reversing is stuck (no common multiple).
fn defined(r: Result<Word, ReversingError>) -> Result<Option<Word>, MbraceError> {
    match r {
        Ok(w) => Ok(Some(w)),
        Err(ReversingError::Stuck { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

struct Sweep<'a> {
    idx: &'a CongruenceIndex,
    table: &'a ComplementTable,
    side: Side,
    budget: usize,
    universe: Vec<Word>,
    label: String,
}

impl Sweep<'_> {
    fn op(&self, a: &Word, b: &Word) -> Result<Option<Word>, MbraceError> {
        defined(match self.side {
            Side::Left => oplus(self.table, a, b, self.budget),
            Side::Right => plus_right(self.table, a, b, self.budget),
        })
    }

    fn compare(
        &self,
        report: &mut PropertyReport,
        inputs: Vec<Word>,
        sides: Option<(Word, Word)>,
    ) -> Result<(), MbraceError> {
        match sides {
            None => report.skip(),
            Some((lhs, rhs)) => {
                if self.idx.equal(&lhs, &rhs)? {
                    report.pass();
                } else {
                    report.fail(inputs, lhs, rhs);
                }
            }
        }
        Ok(())
    }

    fn run(&self) -> Result<Vec<PropertyReport>, MbraceError> {
        let sym = match self.side {
            Side::Left => "⊕",
            Side::Right => "+",
        };
        let u = &self.universe;
        let mut comm = PropertyReport::new(format!("{sym}-commutativity"), &self.label);
        let mut assoc = PropertyReport::new(format!("{sym}-associativity"), &self.label);
        let mut dist = PropertyReport::new(
            match self.side {
                Side::Left => "left distributivity a(b⊕c) = ab⊕ac",
                Side::Right => "right distributivity (a+b)c = ac+bc",
            },
            &self.label,
        );
        let mut ident = PropertyReport::new(format!("{sym}-identity"), &self.label);
        let mut idem = PropertyReport::new(format!("{sym}-idempotence"), &self.label);

        for a in u {
            let one = Word::empty();
            let sides = match (self.op(a, &one)?, self.op(&one, a)?) {
                (Some(x), Some(y)) => {
                    // both orders must give `a`
                    if !self.idx.equal(&x, a)? {
                        Some((x, a.clone()))
                    } else {
                        Some((y, a.clone()))
                    }
                }
                _ => None,
            };
            self.compare(&mut ident, vec![a.clone()], sides)?;
            let sides = self.op(a, a)?.map(|x| (x, a.clone()));
            self.compare(&mut idem, vec![a.clone()], sides)?;
        }

        for a in u {
            for b in u {
                let sides = match (self.op(a, b)?, self.op(b, a)?) {
                    (Some(x), Some(y)) => Some((x, y)),
                    _ => None,
                };
                self.compare(&mut comm, vec![a.clone(), b.clone()], sides)?;
                for c in u {
                    let inputs = vec![a.clone(), b.clone(), c.clone()];
                    let lhs = match self.op(a, b)? {
                        Some(ab) => self.op(&ab, c)?,
                        None => None,
                    };
                    let rhs = match self.op(b, c)? {
                        Some(bc) => self.op(a, &bc)?,
                        None => None,
                    };
                    self.compare(&mut assoc, inputs.clone(), lhs.zip(rhs))?;

                    let sides = match self.side {
                        Side::Left => {
                            let lhs = self.op(b, c)?.map(|bc| a.concat(&bc));
                            let rhs = self.op(&a.concat(b), &a.concat(c))?;
                            lhs.zip(rhs)
                        }
                        Side::Right => {
                            let lhs = self.op(a, b)?.map(|ab| ab.concat(c));
                            let rhs = self.op(&a.concat(c), &b.concat(c))?;
                            lhs.zip(rhs)
                        }
                    };
                    self.compare(&mut dist, inputs, sides)?;
                }
            }
        }
        Ok(vec![comm, assoc, dist, ident, idem])
    }
}

fn universe(idx: &CongruenceIndex, max_length: usize) -> (Vec<Word>, String) {
    let words = Word::all_up_to(idx.presentation().rank(), max_length);
    let label = format!("all {} words of length <= {max_length}", words.len());
    (words, label)
}

/// Exhaustively checks the left M-brace axioms for `⊕` over all words of
/// length at most `max_length`. Tuples where `⊕` is undefined are skipped.
pub fn check_left_mbrace(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    max_length: usize,
    step_budget: usize,
) -> Result<Vec<PropertyReport>, MbraceError> {
    let (universe, label) = universe(idx, max_length);
    Sweep {
        idx,
        table: ct,
        side: Side::Left,
        budget: step_budget,
        universe,
        label,
    }
    .run()
}

/// The same sweep for `+` (right lcm) and right distributivity.
pub fn check_right_mbrace(
    idx: &CongruenceIndex,
    ct_left: &ComplementTable,
    max_length: usize,
    step_budget: usize,
) -> Result<Vec<PropertyReport>, MbraceError> {
    let (universe, label) = universe(idx, max_length);
    Sweep {
        idx,
        table: ct_left,
        side: Side::Right,
        budget: step_budget,
        universe,
        label,
    }
    .run()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityWitness {
    pub a: Word,
    pub b: Word,
    pub c: Word,
    /// `(a ⊕ b)·c`
    pub lhs: Word,
    /// `a·c ⊕ b·c`
    pub rhs: Word,
}

/// First triple in shortlex order where `(a ⊕ b)·c` and `a·c ⊕ b·c` differ.
pub fn right_distributivity_witness(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    max_length: usize,
    step_budget: usize,
) -> Result<Option<DistributivityWitness>, MbraceError> {
    let (u, _) = universe(idx, max_length);
    for a in &u {
        for b in &u {
            let Some(ab) = defined(oplus(ct, a, b, step_budget))? else {
                continue;
            };
            for c in &u {
                let lhs = ab.concat(c);
                let Some(rhs) = defined(oplus(ct, &a.concat(c), &b.concat(c), step_budget))? else {
                    continue;
                };
                if !idx.equal(&lhs, &rhs)? {
                    return Ok(Some(DistributivityWitness {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        lhs,
                        rhs,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Passes iff the identity is the only invertible class within the oracle bound.
pub fn invertible_uniqueness(idx: &CongruenceIndex) -> PropertyReport {
    let mut report = PropertyReport::new(
        "1 is the unique invertible",
        format!("{} classes up to length {}", idx.class_count(), idx.max_length()),
    );
    for w in idx.invertibles() {
        if w.is_empty() {
            report.pass();
        } else {
            report.fail(vec![w.clone()], w, Word::empty());
        }
    }
    report
}
