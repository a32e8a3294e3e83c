//! The group of fractions of a Gaussian monoid and the partial operation ⊕
//! extending the left lcm from the monoid to the group.
//!
//! Elements are right fractions `num·den^-1`. The operation is defined by
//! cases: identities and equal arguments, two positive words (the lcm), two
//! negative words, one of each, and finally general fractions, which are
//! handled by a grid that closes one square per pair of signed letters.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::oracle::{CongruenceIndex, OracleError};
use crate::presentation::{parse_word, Atom, AtomTable, Letter, ParseError, SignedWord, Word};
use crate::report::{PropertyReport, Render};
use crate::reversing::{lcm_left, right_reverse, ComplementTable, ReversingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialBraceError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Reversing(ReversingError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl From<ReversingError> for PartialBraceError {
    fn from(e: ReversingError) -> Self {
        match e {
            ReversingError::Oracle(o) => PartialBraceError::Oracle(o),
            other => PartialBraceError::Reversing(other),
        }
    }
}

/// The fraction `num·den^-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub num: Word,
    pub den: Word,
}

impl GroupElement {
    pub fn new(num: Word, den: Word) -> Self {
        GroupElement { num, den }
    }

    pub fn identity() -> Self {
        GroupElement::default()
    }

    pub fn positive(w: Word) -> Self {
        GroupElement::new(w, Word::empty())
    }

    pub fn negative(w: Word) -> Self {
        GroupElement::new(Word::empty(), w)
    }

    pub fn inv(&self) -> Self {
        GroupElement::new(self.den.clone(), self.num.clone())
    }

    pub fn is_positive(&self) -> bool {
        self.den.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_empty()
    }

    pub fn to_signed(&self) -> SignedWord {
        self.num.to_signed().concat(&self.den.inverse())
    }

    /// `num / den`, with `1` for the empty word.
    pub fn render(&self, atoms: &AtomTable) -> String {
        format!("{} / {}", self.num.render(atoms), self.den.render(atoms))
    }

    pub fn to_json(&self, atoms: &AtomTable) -> Value {
        json!({ "num": self.num.names(atoms), "den": self.den.names(atoms) })
    }
}

impl Render for GroupElement {
    fn render(&self, atoms: &AtomTable) -> String {
        GroupElement::render(self, atoms)
    }
}

/// Why `g ⊕ h` has no value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Undefined {
    /// No `z` with `y ∨ z = y·x`, so `x ⊕ y^-1` is undefined.
    NoWitness { y: Word, x: Word },
    /// No coprime `a, b` with `a ∨ b = a·u = b·v`, so `u^-1 ⊕ v^-1` is undefined.
    NoWitnessPair { u: Word, v: Word },
    /// A positive square `x^-1 y` has no complement.
    Stuck { x: Atom, y: Atom },
    BudgetExceeded,
}

impl Undefined {
    pub fn describe(&self, atoms: &AtomTable) -> String {
        match self {
            Undefined::NoWitness { y, x } => format!(
                "no witness z with {} ∨ z = {}",
                y.render(atoms),
                y.concat(x).render(atoms)
            ),
            Undefined::NoWitnessPair { u, v } => format!(
                "no coprime witnesses a, b with a ∨ b = a {} = b {}",
                u.render(atoms),
                v.render(atoms)
            ),
            Undefined::Stuck { x, y } => format!("stuck at ({},{})", atoms.name(*x), atoms.name(*y)),
            Undefined::BudgetExceeded => "step budget exceeded".to_string(),
        }
    }
}

/// Which branch of the case analysis produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OplusCase {
    Trivial,
    Positive,
    Negative,
    Mixed,
    Grid,
}

/// One closed square: `top ⊕ left = top·right = left·bottom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridStep {
    pub position: usize,
    pub top: Letter,
    pub left: Letter,
    pub right: SignedWord,
    pub bottom: SignedWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OplusTrace {
    pub case: OplusCase,
    pub witness: Option<Word>,
    pub grid: Vec<GridStep>,
}

impl OplusTrace {
    fn new(case: OplusCase) -> Self {
        OplusTrace {
            case,
            witness: None,
            grid: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OplusOutcome {
    Defined(GroupElement, OplusTrace),
    Undefined(Undefined),
    /// Coprime witnesses giving at least two distinct values.
    Ambiguous(Vec<GroupElement>),
}

impl OplusOutcome {
    pub fn value(&self) -> Option<&GroupElement> {
        match self {
            OplusOutcome::Defined(g, _) => Some(g),
            _ => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        self.value().is_some()
    }
}

/// Local rule for one square of the grid.
#[derive(Debug, Clone)]
enum Square {
    Closed { right: SignedWord, bottom: SignedWord },
    Open(Undefined),
    Ambiguous(Vec<GroupElement>),
}

/// Element sampling for [`FractionGroup::check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleSpec {
    /// Bound on `|num|` and `|den|` for pair properties.
    pub pair_length: usize,
    /// Bound on `|num|` and `|den|` for triple properties.
    pub triple_length: usize,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            pair_length: 2,
            triple_length: 1,
        }
    }
}

/// Fraction arithmetic over a monoid given by its congruence oracle and
/// right complement table. Letter-level grid rules are cached.
pub struct FractionGroup<'a> {
    idx: &'a CongruenceIndex,
    ct: &'a ComplementTable,
    budget: usize,
    squares: RefCell<HashMap<(Letter, Letter), Square>>,
}

type Res<T> = Result<T, PartialBraceError>;

impl<'a> FractionGroup<'a> {
    pub fn new(idx: &'a CongruenceIndex, ct: &'a ComplementTable, step_budget: usize) -> Self {
        FractionGroup {
            idx,
            ct,
            budget: step_budget,
            squares: RefCell::new(HashMap::new()),
        }
    }

    pub fn index(&self) -> &CongruenceIndex {
        self.idx
    }

    /// Divides out the greatest common right divisor.
    pub fn reduce(&self, a: &Word, c: &Word) -> Res<GroupElement> {
        let g = self.idx.right_gcd(a, c)?;
        let quotient = |w: &Word| -> Res<Word> {
            Ok(self
                .idx
                .right_divides(&g, w)?
                .expect("a common divisor divides"))
        };
        Ok(GroupElement::new(quotient(a)?, quotient(c)?))
    }

    /// Equality in the group: `a b^-1 = c d^-1` iff `a·p ≡ c·q` where `b·p = d·q = b ∨ d`.
    pub fn group_equal(&self, g: &GroupElement, h: &GroupElement) -> Res<bool> {
        if g == h {
            return Ok(true);
        }
        let l = lcm_left(self.ct, &g.den, &h.den, self.budget)?;
        Ok(self.idx.equal(&g.num.concat(&l.u), &h.num.concat(&l.v))?)
    }

    pub fn is_identity(&self, g: &GroupElement) -> Res<bool> {
        self.group_equal(g, &GroupElement::identity())
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Res<GroupElement> {
        let r = right_reverse(self.ct, &g.den.inverse().concat(&h.num.to_signed()), self.budget)?;
        self.reduce(&g.num.concat(&r.u), &h.den.concat(&r.v))
    }

    /// The reduced fraction equal to a signed word in the group.
    pub fn from_signed(&self, w: &SignedWord) -> Res<GroupElement> {
        let r = right_reverse(self.ct, w, self.budget)?;
        self.reduce(&r.u, &r.v)
    }

    /// Parses `num / den` or a signed word such as `x3 x4^-1`.
    pub fn parse(&self, text: &str, atoms: &AtomTable) -> Res<GroupElement> {
        match text.split_once('/') {
            Some((n, d)) => {
                let num = parse_word(n.trim(), atoms)?;
                let den = parse_word(d.trim(), atoms)?;
                self.from_signed(&num.concat(&den.inverse()))
            }
            None => self.from_signed(&parse_word(text.trim(), atoms)?),
        }
    }

    /// Every `z` (as a class representative) with `y ∨ z ≡ y·x` and `y`, `z`
    /// left-coprime.
    pub fn witness_search(&self, y: &Word, x: &Word) -> Res<Vec<Word>> {
        let yx = y.concat(x);
        let mut out = Vec::new();
        for c in self.idx.left_divisors(&yx)? {
            let z = self.idx.representative(c);
            let Some(l) = self.idx.lcm(y, &z)? else {
                continue;
            };
            if self.idx.equal(&l, &yx)? && self.idx.left_gcd(y, &z)?.is_empty() {
                out.push(z);
            }
        }
        Ok(out)
    }

    /// Coprime `(a, b)` with `a ∨ b = a·u = b·v`. Any such pair satisfies
    /// `a·u = c·(u ∨' v)` for a common left divisor `c` of `a` and `b`, so
    /// coprimality leaves only the pair read off the right lcm.
    fn negative_witness(&self, u: &Word, v: &Word) -> Res<Result<(Word, Word, Word), Undefined>> {
        let Some(m) = self.idx.right_lcm(u, v)? else {
            return Ok(Err(Undefined::BudgetExceeded));
        };
        let a = self.idx.right_divides(u, &m)?.expect("u divides its lcm");
        let b = self.idx.right_divides(v, &m)?.expect("v divides its lcm");
        let lcm_ok = match self.idx.lcm(&a, &b)? {
            Some(l) => self.idx.equal(&l, &m)?,
            None => false,
        };
        if lcm_ok && self.idx.left_gcd(&a, &b)?.is_empty() {
            Ok(Ok((a, b, m)))
        } else {
            Ok(Err(Undefined::NoWitnessPair {
                u: u.clone(),
                v: v.clone(),
            }))
        }
    }

    /// `x ⊕ y^-1 = y^-1·b = x·v^-1` with `y·x = b·v`; returns `(b, v)` for
    /// each witness with a distinct value.
    fn mixed_witnesses(&self, y: &Word, x: &Word) -> Res<Vec<(Word, Word)>> {
        let yx = y.concat(x);
        let mut out: Vec<(Word, Word)> = Vec::new();
        for b in self.witness_search(y, x)? {
            let v = self.idx.left_divides(&b, &yx)?.expect("witness divides y·x");
            let value = GroupElement::new(x.clone(), v.clone());
            let mut seen = false;
            for (_, w) in &out {
                if self.group_equal(&value, &GroupElement::new(x.clone(), w.clone()))? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push((b, v));
            }
        }
        Ok(out)
    }

    fn square(&self, top: Letter, left: Letter) -> Res<Square> {
        if let Some(s) = self.squares.borrow().get(&(top, left)) {
            return Ok(s.clone());
        }
        let (x, y) = (Word::atom(top.atom), Word::atom(left.atom));
        let s = if top == left {
            Square::Closed {
                right: SignedWord::empty(),
                bottom: SignedWord::empty(),
            }
        } else {
            match (top.is_pos(), left.is_pos()) {
                (true, true) => match self.ct.get(top.atom, left.atom) {
                    Some(c) => Square::Closed {
                        right: c.u.to_signed(),
                        bottom: c.v.to_signed(),
                    },
                    None => Square::Open(Undefined::Stuck {
                        x: top.atom,
                        y: left.atom,
                    }),
                },
                (false, false) => match self.negative_witness(&x, &y)? {
                    // x^-1 ⊕ y^-1 = x^-1 a^-1 = y^-1 b^-1
                    Ok((a, b, _)) => Square::Closed {
                        right: a.inverse(),
                        bottom: b.inverse(),
                    },
                    Err(u) => Square::Open(u),
                },
                (true, false) => self.mixed_square(&y, &x, |b, v| (v.inverse(), b.to_signed()))?,
                (false, true) => self.mixed_square(&x, &y, |b, v| (b.to_signed(), v.inverse()))?,
            }
        };
        self.squares.borrow_mut().insert((top, left), s.clone());
        Ok(s)
    }

    fn mixed_square(
        &self,
        neg: &Word,
        pos: &Word,
        sides: impl Fn(&Word, &Word) -> (SignedWord, SignedWord),
    ) -> Res<Square> {
        let ws = self.mixed_witnesses(neg, pos)?;
        Ok(match ws.as_slice() {
            [] => Square::Open(Undefined::NoWitness {
                y: neg.clone(),
                x: pos.clone(),
            }),
            [(b, v)] => {
                let (right, bottom) = sides(b, v);
                Square::Closed { right, bottom }
            }
            many => Square::Ambiguous(
                many.iter()
                    .map(|(_, v)| GroupElement::new(pos.clone(), v.clone()))
                    .collect(),
            ),
        })
    }

    /// Grid for general fractions: the top row spells `g`, the left column
    /// spells `h`; squares are closed leftmost first. The value is `g`
    /// followed by the right column.
    fn grid(&self, g: &GroupElement, h: &GroupElement) -> Res<OplusOutcome> {
        #[derive(Clone, Copy, PartialEq)]
        enum Side {
            Top,
            Left,
        }
        // the path from the top right corner back along `g`, then down `h`;
        // top letters are stored in the order they are walked
        let mut path: Vec<(Side, Letter)> = g
            .to_signed()
            .letters()
            .iter()
            .rev()
            .map(|&l| (Side::Top, l))
            .chain(h.to_signed().letters().iter().map(|&l| (Side::Left, l)))
            .collect();
        let mut trace = OplusTrace::new(OplusCase::Grid);
        let mut from = 0;
        loop {
            let Some(pos) = (from..path.len().saturating_sub(1))
                .find(|&i| path[i].0 == Side::Top && path[i + 1].0 == Side::Left)
            else {
                break;
            };
            if trace.grid.len() >= self.budget {
                return Ok(OplusOutcome::Undefined(Undefined::BudgetExceeded));
            }
            let (top, left) = (path[pos].1, path[pos + 1].1);
            let (right, bottom) = match self.square(top, left)? {
                Square::Closed { right, bottom } => (right, bottom),
                Square::Open(u) => return Ok(OplusOutcome::Undefined(u)),
                Square::Ambiguous(vals) => return Ok(OplusOutcome::Ambiguous(vals)),
            };
            let replacement: Vec<(Side, Letter)> = right
                .letters()
                .iter()
                .map(|&l| (Side::Left, l))
                .chain(bottom.letters().iter().rev().map(|&l| (Side::Top, l)))
                .collect();
            path.splice(pos..pos + 2, replacement);
            trace.grid.push(GridStep {
                position: pos,
                top,
                left,
                right,
                bottom,
            });
            from = pos.saturating_sub(1);
        }
        let right_column: Vec<Letter> = path
            .iter()
            .take_while(|(s, _)| *s == Side::Left)
            .map(|&(_, l)| l)
            .collect();
        let value = g.to_signed().concat(&SignedWord::new(right_column));
        match self.from_signed(&value) {
            Ok(v) => Ok(OplusOutcome::Defined(v, trace)),
            Err(PartialBraceError::Reversing(ReversingError::Stuck { x, y, .. })) => {
                Ok(OplusOutcome::Undefined(Undefined::Stuck { x, y }))
            }
            Err(PartialBraceError::Reversing(ReversingError::BudgetExceeded { .. })) => {
                Ok(OplusOutcome::Undefined(Undefined::BudgetExceeded))
            }
            Err(e) => Err(e),
        }
    }

    /// `g ⊕ h`. Arguments are reduced first: the grid run on an unreduced
    /// representative can give a different value.
    pub fn oplus(&self, g: &GroupElement, h: &GroupElement) -> Res<OplusOutcome> {
        let g = &self.reduce(&g.num, &g.den)?;
        let h = &self.reduce(&h.num, &h.den)?;
        let defined = |v: GroupElement, case| OplusOutcome::Defined(v, OplusTrace::new(case));
        if self.is_identity(h)? || self.group_equal(g, h)? {
            return Ok(defined(self.reduce(&g.num, &g.den)?, OplusCase::Trivial));
        }
        if self.is_identity(g)? {
            return Ok(defined(self.reduce(&h.num, &h.den)?, OplusCase::Trivial));
        }
        if g.is_positive() && h.is_positive() {
            return Ok(match lcm_left(self.ct, &g.num, &h.num, self.budget) {
                Ok(l) => defined(self.reduce(&l.m, &Word::empty())?, OplusCase::Positive),
                Err(ReversingError::Stuck { x, y, .. }) => OplusOutcome::Undefined(Undefined::Stuck { x, y }),
                Err(ReversingError::BudgetExceeded { .. }) => OplusOutcome::Undefined(Undefined::BudgetExceeded),
                Err(e) => return Err(e.into()),
            });
        }
        if g.is_negative() && h.is_negative() {
            // u^-1 ⊕ v^-1 = u^-1 a^-1 = (a·u)^-1
            return Ok(match self.negative_witness(&g.den, &h.den)? {
                Ok((a, _, m)) => {
                    let mut t = OplusTrace::new(OplusCase::Negative);
                    t.witness = Some(a);
                    OplusOutcome::Defined(self.reduce(&Word::empty(), &m)?, t)
                }
                Err(u) => OplusOutcome::Undefined(u),
            });
        }
        let mixed = match (g.is_positive(), h.is_positive()) {
            (true, false) if h.is_negative() => Some((&h.den, &g.num)),
            (false, true) if g.is_negative() => Some((&g.den, &h.num)),
            _ => None,
        };
        if let Some((y, x)) = mixed {
            // x ⊕ y^-1 = y^-1 b = x v^-1 with y·x = b·v
            let ws = self.mixed_witnesses(y, x)?;
            return Ok(match ws.as_slice() {
                [] => OplusOutcome::Undefined(Undefined::NoWitness {
                    y: y.clone(),
                    x: x.clone(),
                }),
                [(b, v)] => {
                    let mut t = OplusTrace::new(OplusCase::Mixed);
                    t.witness = Some(b.clone());
                    OplusOutcome::Defined(self.reduce(x, v)?, t)
                }
                many => {
                    let mut vals = Vec::new();
                    for (_, v) in many {
                        vals.push(self.reduce(x, v)?);
                    }
                    OplusOutcome::Ambiguous(vals)
                }
            });
        }
        self.grid(g, h)
    }

    /// Reduced fractions `num/den` with class representatives of length at most `max_len`.
    pub fn sample(&self, max_len: usize) -> Res<Vec<GroupElement>> {
        let reps: Vec<Word> = self
            .idx
            .all_representatives()
            .into_iter()
            .filter(|w| w.len() <= max_len)
            .collect();
        let mut out = Vec::new();
        for num in &reps {
            for den in &reps {
                if self.idx.right_gcd(num, den)?.is_empty() {
                    out.push(GroupElement::new(num.clone(), den.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Padding, commutativity, associativity and left distributivity over
    /// sampled elements. Tuples where some required `⊕` is not defined are
    /// counted as skipped.
    pub fn check_axioms(&self, spec: SampleSpec) -> Res<Vec<PropertyReport<GroupElement>>> {
        let pairs = self.sample(spec.pair_length)?;
        let triples = self.sample(spec.triple_length)?;
        let label = |l: usize, k: usize| format!("{k} reduced fractions with |num|,|den| <= {l}");
        let pair_label = label(spec.pair_length, pairs.len());
        let triple_label = label(spec.triple_length, triples.len());
        let mut padding = PropertyReport::new("well-defined under padding g = (num a)(den a)^-1", &pair_label);
        let mut comm = PropertyReport::new("⊕-commutativity", &pair_label);
        let mut assoc = PropertyReport::new("⊕-associativity", &triple_label);
        let mut dist = PropertyReport::new("left distributivity w(g⊕h) = wg⊕wh", &triple_label);

        let mut table: HashMap<(usize, usize), Option<GroupElement>> = HashMap::new();
        for (i, g) in pairs.iter().enumerate() {
            for (j, h) in pairs.iter().enumerate() {
                let gh = self.oplus(g, h)?.value().cloned();
                table.insert((i, j), gh);
            }
        }
        let atoms: Vec<Word> = (0..self.idx.presentation().rank()).map(Word::atom).collect();
        let compare = |r: &mut PropertyReport<GroupElement>,
                           inputs: Vec<GroupElement>,
                           l: Option<GroupElement>,
                           rh: Option<GroupElement>|
         -> Res<()> {
            match (l, rh) {
                (Some(l), Some(rh)) => {
                    if self.group_equal(&l, &rh)? {
                        r.pass();
                    } else {
                        r.fail(inputs, l, rh);
                    }
                }
                _ => r.skip(),
            }
            Ok(())
        };

        for (i, g) in pairs.iter().enumerate() {
            for (j, h) in pairs.iter().enumerate() {
                let gh = table[&(i, j)].clone();
                compare(&mut comm, vec![g.clone(), h.clone()], gh.clone(), table[&(j, i)].clone())?;
                for a in &atoms {
                    let padded = GroupElement::new(g.num.concat(a), g.den.concat(a));
                    let p = self.oplus(&padded, h)?.value().cloned();
                    compare(&mut padding, vec![padded, h.clone()], gh.clone(), p)?;
                }
            }
        }

        let tindex: HashMap<&GroupElement, usize> = pairs.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let op = |g: &GroupElement, h: &GroupElement| -> Res<Option<GroupElement>> {
            if let (Some(&i), Some(&j)) = (tindex.get(g), tindex.get(h)) {
                return Ok(table[&(i, j)].clone());
            }
            Ok(self.oplus(g, h)?.value().cloned())
        };
        for g in &triples {
            for h in &triples {
                let gh = op(g, h)?;
                for k in &triples {
                    let inputs = vec![g.clone(), h.clone(), k.clone()];
                    let lhs = match &gh {
                        Some(gh) => op(gh, k)?,
                        None => None,
                    };
                    let rhs = match op(h, k)? {
                        Some(hk) => op(g, &hk)?,
                        None => None,
                    };
                    compare(&mut assoc, inputs.clone(), lhs, rhs)?;

                    // here `g` plays w, and (h, k) the pair
                    let lhs = match op(h, k)? {
                        Some(hk) => Some(self.mul(g, &hk)?),
                        None => None,
                    };
                    let rhs = op(&self.mul(g, h)?, &self.mul(g, k)?)?;
                    compare(&mut dist, inputs, lhs, rhs)?;
                }
            }
        }
        Ok(vec![padding, comm, assoc, dist])
    }
}

impl fmt::Debug for FractionGroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FractionGroup").field("budget", &self.budget).finish()
    }
}

pub fn reduce(idx: &CongruenceIndex, ct: &ComplementTable, a: &Word, c: &Word) -> Res<GroupElement> {
    FractionGroup::new(idx, ct, 0).reduce(a, c)
}

pub fn group_equal(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    g: &GroupElement,
    h: &GroupElement,
    step_budget: usize,
) -> Res<bool> {
    FractionGroup::new(idx, ct, step_budget).group_equal(g, h)
}

pub fn mul(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    g: &GroupElement,
    h: &GroupElement,
    step_budget: usize,
) -> Res<GroupElement> {
    FractionGroup::new(idx, ct, step_budget).mul(g, h)
}

pub fn witness_search(idx: &CongruenceIndex, ct: &ComplementTable, y: &Word, x: &Word) -> Res<Vec<Word>> {
    FractionGroup::new(idx, ct, 0).witness_search(y, x)
}

pub fn oplus_partial(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    g: &GroupElement,
    h: &GroupElement,
    step_budget: usize,
) -> Res<OplusOutcome> {
    FractionGroup::new(idx, ct, step_budget).oplus(g, h)
}

pub fn check_partial_axioms(
    idx: &CongruenceIndex,
    ct: &ComplementTable,
    spec: SampleSpec,
    step_budget: usize,
) -> Res<Vec<PropertyReport<GroupElement>>> {
    FractionGroup::new(idx, ct, step_budget).check_axioms(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::{Direction, Presentation};

    struct Fx {
        p: Presentation,
        idx: CongruenceIndex,
        ct: ComplementTable,
    }

    fn fx() -> Fx {
        let p = fixtures::irretractable();
        Fx {
            idx: CongruenceIndex::build(&p, 6).unwrap(),
            ct: ComplementTable::build(&p, Direction::Right).unwrap(),
            p,
        }
    }

    fn w(l: &[usize]) -> Word {
        Word::new(l.to_vec())
    }

    fn el(fg: &FractionGroup, f: &Fx, s: &str) -> GroupElement {
        fg.parse(s, f.p.atoms()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        assert_eq!(fg.reduce(&w(&[0, 2]), &w(&[2])).unwrap(), GroupElement::positive(w(&[0])));
        assert_eq!(fg.reduce(&w(&[1, 3]), &w(&[1, 3])).unwrap(), GroupElement::identity());
        assert_eq!(fg.reduce(&w(&[0, 2]), &w(&[1, 3])).unwrap(), GroupElement::identity());
    }

    #[test]
    fn equality_and_group_laws() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        let x3x4 = GroupElement::new(w(&[2]), w(&[3]));
        assert!(fg.group_equal(&x3x4, &x3x4).unwrap());
        assert!(!fg.is_identity(&x3x4).unwrap());
        // x1^-1 x2 = x3 x4^-1
        let g = el(&fg, &f, "x1^-1 x2");
        assert!(fg.group_equal(&g, &x3x4).unwrap());

        let one = GroupElement::identity();
        for s in ["x1 / x2", "x3^-1", "x2 x4 / x1"] {
            let g = el(&fg, &f, s);
            assert!(fg.group_equal(&fg.mul(&g, &one).unwrap(), &g).unwrap());
            assert!(fg.is_identity(&fg.mul(&g, &g.inv()).unwrap()).unwrap());
        }
        let p = fg
            .mul(&GroupElement::positive(w(&[0])), &GroupElement::positive(w(&[2])))
            .unwrap();
        assert_eq!(p, GroupElement::positive(w(&[0, 2])));
    }

    #[test]
    fn witnesses() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        assert!(fg.witness_search(&w(&[2]), &w(&[3])).unwrap().is_empty());
        assert!(fg.witness_search(&w(&[3]), &w(&[2])).unwrap().is_empty());
        let found = fg.witness_search(&w(&[0]), &w(&[2])).unwrap();
        assert!(found.iter().any(|z| f.idx.equal(z, &w(&[1])).unwrap()));
        let found = fg.witness_search(&Word::empty(), &w(&[3, 1])).unwrap();
        assert_eq!(found.len(), 1);
        assert!(f.idx.equal(&found[0], &w(&[3, 1])).unwrap());
    }

    #[test]
    fn undefined_pairs() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        for (a, b) in [("x3", "x4^-1"), ("x4", "x3^-1"), ("x4^-1", "x3")] {
            let out = fg.oplus(&el(&fg, &f, a), &el(&fg, &f, b)).unwrap();
            assert!(
                matches!(out, OplusOutcome::Undefined(Undefined::NoWitness { .. })),
                "{a} ⊕ {b}: {out:?}"
            );
        }
        let out = fg.oplus(&el(&fg, &f, "x3"), &el(&fg, &f, "x4^-1")).unwrap();
        let OplusOutcome::Undefined(u) = out else { unreachable!() };
        assert_eq!(u.describe(f.p.atoms()), "no witness z with x4 ∨ z = x4 x3");
    }

    #[test]
    fn negative_pair() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        let out = fg.oplus(&el(&fg, &f, "x3^-1"), &el(&fg, &f, "x4^-1")).unwrap();
        let v = out.value().expect("defined");
        assert!(fg
            .group_equal(v, &GroupElement::negative(w(&[0, 2])))
            .unwrap());
    }

    #[test]
    fn trivial_and_positive_cases() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        let g = el(&fg, &f, "x1 / x2");
        assert_eq!(fg.oplus(&g, &g).unwrap().value(), Some(&g));
        assert_eq!(fg.oplus(&g, &GroupElement::identity()).unwrap().value(), Some(&g));
        let out = fg
            .oplus(&GroupElement::positive(w(&[0])), &GroupElement::positive(w(&[1])))
            .unwrap();
        assert!(fg
            .group_equal(out.value().unwrap(), &GroupElement::positive(w(&[0, 2])))
            .unwrap());
    }

    #[test]
    fn mixed_value_and_definedness_agree_with_search() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        for x in 0..4 {
            for y in 0..4 {
                let (xw, yw) = (w(&[x]), w(&[y]));
                let out = fg
                    .oplus(&GroupElement::positive(xw.clone()), &GroupElement::negative(yw.clone()))
                    .unwrap();
                let found = fg.witness_search(&yw, &xw).unwrap();
                assert_eq!(out.is_defined(), !found.is_empty());
                if let Some(v) = out.value() {
                    // y^-1 ⊕ x starts with y^-1 followed by a positive word
                    let q = fg.mul(&GroupElement::positive(yw.clone()), v).unwrap();
                    assert!(q.is_positive(), "{x} {y}: {q:?}");
                }
            }
        }
    }

    #[test]
    fn padding_is_reduced_away() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        let padded = GroupElement::new(w(&[0, 1]), w(&[1]));
        let h = GroupElement::positive(w(&[2]));
        let out = fg.oplus(&padded, &h).unwrap();
        let direct = fg.oplus(&GroupElement::positive(w(&[0])), &h).unwrap();
        assert!(fg.group_equal(out.value().unwrap(), direct.value().unwrap()).unwrap());
        assert!(fg
            .group_equal(direct.value().unwrap(), &GroupElement::positive(w(&[0, 1])))
            .unwrap());

        // the raw grid on the padded form loses `x3` in the first square
        let raw = fg.grid(&padded, &h).unwrap();
        assert!(fg
            .group_equal(raw.value().unwrap(), &GroupElement::positive(w(&[0])))
            .unwrap());
    }

    #[test]
    fn grid_on_general_fractions_is_consistent() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 1000);
        let g = el(&fg, &f, "x1 / x2");
        let h = el(&fg, &f, "x3 / x4");
        let out = fg.oplus(&g, &h).unwrap();
        if let OplusOutcome::Defined(v, t) = &out {
            assert_eq!(t.case, OplusCase::Grid);
            let back = fg.oplus(&h, &g).unwrap();
            assert!(fg.group_equal(v, back.value().unwrap()).unwrap());
        }
    }

    #[test]
    fn text_and_json() {
        let f = fx();
        let fg = FractionGroup::new(&f.idx, &f.ct, 100);
        let g = el(&fg, &f, "x1 x3 / x2");
        assert_eq!(g.render(f.p.atoms()), "x1 x3 / x2");
        assert_eq!(g.to_json(f.p.atoms())["den"][0], "x2");
        assert_eq!(el(&fg, &f, "1 / 1"), GroupElement::identity());
    }
}
