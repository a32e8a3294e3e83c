//! Atoms, positive and signed words, monoid presentations and the
//! line-oriented presentation file format.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

/// Index of an atom in its [`AtomTable`] (0-based).
pub type Atom = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown atom `{name}`")]
    UnknownAtom {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}, column {column}: duplicate atom `{name}`")]
    DuplicateAtom {
        line: usize,
        column: usize,
        name: String,
    },
}

impl ParseError {
    fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The ordered generating set of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomTable {
    names: Vec<String>,
    lookup: BTreeMap<String, Atom>,
}

impl AtomTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, ParseError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(ParseError::syntax(1, 1, "at least one atom is required"));
        }
        let mut lookup = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(ParseError::syntax(1, 1, format!("invalid atom name `{name}`")));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(ParseError::DuplicateAtom {
                    line: 1,
                    column: 1,
                    name: name.clone(),
                });
            }
        }
        Ok(AtomTable { names, lookup })
    }

    /// `x1 .. xn`, the naming used throughout the fixtures.
    pub fn numbered(n: usize) -> Self {
        AtomTable::new((1..=n).map(|i| format!("x{i}"))).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, atom: Atom) -> &str {
        &self.names[atom]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<Atom> {
        self.lookup.get(name).copied()
    }
}

/// A positive word; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Atom>);

impl Word {
    pub fn new(letters: Vec<Atom>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn atom(a: Atom) -> Self {
        Word(vec![a])
    }

    pub fn letters(&self) -> &[Atom] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    /// Shortlex order: by length, then lexicographically by atom index.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }

    /// The formal inverse `w^-1`.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|&a| Letter::neg(a)).collect())
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord(self.0.iter().map(|&a| Letter::pos(a)).collect())
    }

    /// Space-separated atom names, `1` for the empty word.
    pub fn render(&self, atoms: &AtomTable) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&a| atoms.name(a))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn names(&self, atoms: &AtomTable) -> Vec<String> {
        self.0.iter().map(|&a| atoms.name(a).to_string()).collect()
    }

    /// Every word over `n` atoms of length at most `max_len`, in shortlex order.
    pub fn all_up_to(n: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * n);
            for w in &layer {
                for a in 0..n {
                    let mut letters = w.0.clone();
                    letters.push(a);
                    next.push(Word(letters));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters().serialize(s)
    }
}

impl From<Vec<Atom>> for Word {
    fn from(letters: Vec<Atom>) -> Self {
        Word(letters)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub atom: Atom,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(atom: Atom) -> Self {
        Letter {
            atom,
            sign: Sign::Pos,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Letter {
            atom,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            atom: self.atom,
            sign: self.sign.flip(),
        }
    }

    pub fn is_pos(self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn render(self, atoms: &AtomTable) -> String {
        match self.sign {
            Sign::Pos => atoms.name(self.atom).to_string(),
            Sign::Neg => format!("{}^-1", atoms.name(self.atom)),
        }
    }
}

/// A word over atoms and their formal inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedWord(Vec<Letter>);

impl SignedWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        SignedWord(letters)
    }

    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        SignedWord(letters)
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent `x x^-1` and `x^-1 x` pairs until none remain.
    pub fn free_reduce(&self) -> SignedWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        SignedWord(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// The underlying positive word, if every letter is positive.
    pub fn as_positive(&self) -> Option<Word> {
        self.0
            .iter()
            .map(|l| l.is_pos().then_some(l.atom))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    /// Splits `P · N` with `P` positive and `N` negative; `None` if a
    /// negative letter precedes a positive one.
    pub fn split_positive_negative(&self) -> Option<(Word, Word)> {
        let cut = self.0.iter().position(|l| !l.is_pos()).unwrap_or(self.0.len());
        let pos = Word(self.0[..cut].iter().map(|l| l.atom).collect());
        let tail = &self.0[cut..];
        if tail.iter().any(|l| l.is_pos()) {
            return None;
        }
        let neg = Word(tail.iter().rev().map(|l| l.atom).collect());
        Some((pos, neg))
    }

    pub fn render(&self, atoms: &AtomTable) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| l.render(atoms))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl From<&Word> for SignedWord {
    fn from(w: &Word) -> Self {
        w.to_signed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relation {0} has an empty side")]
    EmptySide(usize),
    #[error("relation {0} is degenerate (both sides identical)")]
    Degenerate(usize),
    #[error("relation {0} mentions an atom outside the table")]
    AtomOutOfRange(usize),
}

/// `Mon<atoms | relations>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    atoms: AtomTable,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(atoms: AtomTable, relations: Vec<Relation>) -> Result<Self, PresentationError> {
        for (i, r) in relations.iter().enumerate() {
            if r.lhs.is_empty() || r.rhs.is_empty() {
                return Err(PresentationError::EmptySide(i));
            }
            if r.lhs == r.rhs {
                return Err(PresentationError::Degenerate(i));
            }
            if r.lhs.letters().iter().chain(r.rhs.letters()).any(|&a| a >= atoms.len()) {
                return Err(PresentationError::AtomOutOfRange(i));
            }
        }
        Ok(Presentation { atoms, relations })
    }

    pub fn atoms(&self) -> &AtomTable {
        &self.atoms
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.atoms.len()
    }

    /// The same monoid with every relation side read backwards.
    pub fn mirrored(&self) -> Presentation {
        Presentation {
            atoms: self.atoms.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation::new(r.lhs.reversed(), r.rhs.reversed()))
                .collect(),
        }
    }

    /// Renders in the file format accepted by [`parse_presentation`].
    pub fn render(&self) -> String {
        let mut out = format!("atoms: {}\n", self.atoms.names().join(" "));
        for r in &self.relations {
            out.push_str(&format!(
                "rel: {} = {}\n",
                r.lhs.render(&self.atoms),
                r.rhs.render(&self.atoms)
            ));
        }
        out
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: offset + line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: offset + line[..s].chars().count() + 1,
        });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_positive(
    toks: &[Token<'_>],
    atoms: &AtomTable,
    line: usize,
    column: usize,
) -> Result<Word, ParseError> {
    if toks.is_empty() {
        return Err(ParseError::syntax(line, column, "empty relation side"));
    }
    toks.iter()
        .map(|t| {
            if !valid_name(t.text) {
                return Err(ParseError::syntax(
                    line,
                    t.column,
                    format!("expected an atom name, found `{}`", t.text),
                ));
            }
            atoms.index(t.text).ok_or_else(|| ParseError::UnknownAtom {
                line,
                column: t.column,
                name: t.text.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}

/// Parses the presentation file format:
///
/// ```text
/// atoms: x1 x2 x3
/// rel: x1 x2 = x3 x3   # comment
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut atoms: Option<AtomTable> = None;
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let body = line.trim_start();
        let indent_cols = line[..indent].chars().count();
        if let Some(rest) = body.strip_prefix("atoms:") {
            if atoms.is_some() {
                return Err(ParseError::syntax(line_no, indent_cols + 1, "`atoms:` declared twice"));
            }
            let toks = tokens(rest, indent_cols + "atoms:".len());
            if toks.is_empty() {
                return Err(ParseError::syntax(line_no, indent_cols + 1, "no atoms declared"));
            }
            let mut lookup: HashMap<&str, ()> = HashMap::new();
            for t in &toks {
                if !valid_name(t.text) {
                    return Err(ParseError::syntax(
                        line_no,
                        t.column,
                        format!("invalid atom name `{}`", t.text),
                    ));
                }
                if lookup.insert(t.text, ()).is_some() {
                    return Err(ParseError::DuplicateAtom {
                        line: line_no,
                        column: t.column,
                        name: t.text.to_string(),
                    });
                }
            }
            atoms = Some(AtomTable::new(toks.iter().map(|t| t.text))?);
        } else if let Some(rest) = body.strip_prefix("rel:") {
            let Some(table) = atoms.as_ref() else {
                return Err(ParseError::syntax(
                    line_no,
                    indent_cols + 1,
                    "`rel:` before `atoms:`",
                ));
            };
            let base = indent_cols + "rel:".len();
            let toks = tokens(rest, base);
            let eqs: Vec<usize> = toks
                .iter()
                .enumerate()
                .filter(|(_, t)| t.text == "=")
                .map(|(k, _)| k)
                .collect();
            if eqs.len() != 1 {
                return Err(ParseError::syntax(
                    line_no,
                    base + 1,
                    "expected exactly one `=` in relation",
                ));
            }
            let eq = eqs[0];
            let eq_col = toks[eq].column;
            let lhs = parse_positive(&toks[..eq], table, line_no, eq_col)?;
            let rhs = parse_positive(&toks[eq + 1..], table, line_no, eq_col)?;
            if lhs == rhs {
                return Err(ParseError::syntax(
                    line_no,
                    base + 1,
                    "degenerate relation: both sides are the same word",
                ));
            }
            relations.push(Relation::new(lhs, rhs));
        } else {
            return Err(ParseError::syntax(
                line_no,
                indent_cols + 1,
                "expected `atoms:` or `rel:`",
            ));
        }
    }
    let atoms = atoms.ok_or_else(|| ParseError::syntax(1, 1, "missing `atoms:` line"))?;
    Presentation::new(atoms, relations).map_err(|e| ParseError::syntax(1, 1, e.to_string()))
}

/// Parses `name` / `name^-1` tokens; `1` stands for the identity.
pub fn parse_word(text: &str, atoms: &AtomTable) -> Result<SignedWord, ParseError> {
    let mut letters = Vec::new();
    for t in tokens(text, 0) {
        if t.text == "1" {
            continue;
        }
        let (name, sign) = match t.text.strip_suffix("^-1") {
            Some(n) => (n, Sign::Neg),
            None => (t.text, Sign::Pos),
        };
        if !valid_name(name) {
            return Err(ParseError::syntax(
                1,
                t.column,
                format!("malformed letter `{}`", t.text),
            ));
        }
        let atom = atoms.index(name).ok_or_else(|| ParseError::UnknownAtom {
            line: 1,
            column: t.column,
            name: name.to_string(),
        })?;
        letters.push(Letter { atom, sign });
    }
    Ok(SignedWord(letters))
}

/// Parses a word that must be positive.
pub fn parse_positive_word(text: &str, atoms: &AtomTable) -> Result<Word, ParseError> {
    let w = parse_word(text, atoms)?;
    w.as_positive()
        .ok_or_else(|| ParseError::syntax(1, 1, "expected a positive word (no inverses)"))
}

/// Which end of the relation sides decides the atom pair a relation closes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Sides compared by first letter: `x.. = y..` closes right reversing of `x^-1 y`.
    Right,
    /// Sides compared by last letter: `..x = ..y` closes left reversing of `x y^-1`.
    Left,
}

/// For each unordered pair `x < y` of distinct atoms, the indices of the
/// relations whose two sides start (resp. end) with `x` and `y`.
pub fn pair_cover(p: &Presentation, direction: Direction) -> BTreeMap<(Atom, Atom), Vec<usize>> {
    let end = |w: &Word| match direction {
        Direction::Right => w.letters()[0],
        Direction::Left => *w.letters().last().expect("sides are non-empty"),
    };
    let mut cover: BTreeMap<(Atom, Atom), Vec<usize>> = BTreeMap::new();
    for (i, r) in p.relations().iter().enumerate() {
        let (x, y) = (end(&r.lhs), end(&r.rhs));
        if x != y {
            cover.entry((x.min(y), x.max(y))).or_default().push(i);
        }
    }
    cover
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub homogeneous: bool,
    pub quadratic: bool,
    pub complemented: bool,
    /// Unordered pairs `x < y` closed by no relation.
    pub missing_pairs: Vec<(Atom, Atom)>,
    /// Unordered pairs closed by two or more relations, with those relations.
    pub ambiguous_pairs: Vec<((Atom, Atom), Vec<usize>)>,
}

pub fn validate(p: &Presentation) -> ValidationReport {
    let homogeneous = p.relations().iter().all(|r| r.lhs.len() == r.rhs.len());
    let quadratic = p
        .relations()
        .iter()
        .all(|r| r.lhs.len() == 2 && r.rhs.len() == 2);
    let cover = pair_cover(p, Direction::Right);
    let n = p.rank();
    let mut missing_pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !cover.contains_key(&(x, y)) {
                missing_pairs.push((x, y));
            }
        }
    }
    let ambiguous_pairs: Vec<_> = cover
        .into_iter()
        .filter(|(_, rels)| rels.len() > 1)
        .collect();
    ValidationReport {
        homogeneous,
        quadratic,
        complemented: ambiguous_pairs.is_empty(),
        missing_pairs,
        ambiguous_pairs,
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const IRRETRACTABLE: &str = "\
atoms: x1 x2 x3 x4
rel: x1 x2 = x3 x3
rel: x1 x3 = x2 x4
rel: x2 x1 = x4 x4
rel: x2 x3 = x3 x1
rel: x1 x4 = x4 x2
rel: x3 x2 = x4 x1
";

    fn sw(letters: &[(Atom, i8)]) -> SignedWord {
        SignedWord(
            letters
                .iter()
                .map(|&(a, s)| if s > 0 { Letter::pos(a) } else { Letter::neg(a) })
                .collect(),
        )
    }

    #[test]
    fn parses_commutation() {
        let p = parse_presentation("atoms: a b\nrel: a b = b a").unwrap();
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.relations()[0].lhs, Word::new(vec![0, 1]));
    }

    #[test]
    fn parses_irretractable_monoid() {
        let p = parse_presentation(IRRETRACTABLE).unwrap();
        assert_eq!(p.relations().len(), 6);
        assert_eq!(p.relations()[0].rhs, Word::new(vec![2, 2]));
    }

    #[test]
    fn rejects_degenerate_relation() {
        let err = parse_presentation("atoms: a\nrel: a = a").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn rejects_empty_side() {
        assert!(parse_presentation("atoms: a b\nrel: a b =").is_err());
        assert!(parse_presentation("atoms: a b\nrel: = a").is_err());
    }

    #[test]
    fn unknown_and_duplicate_atoms() {
        let err = parse_presentation("atoms: a b\nrel: a c = b a").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownAtom {
                line: 2,
                column: 8,
                name: "c".into()
            }
        );
        let err = parse_presentation("atoms: a b a").unwrap_err();
        assert!(matches!(err, ParseError::DuplicateAtom { column: 12, .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_presentation("# header\n\natoms: a b # two\n  \nrel: a b = b a # comm\n").unwrap();
        assert_eq!(p.relations().len(), 1);
    }

    #[test]
    fn word_parsing() {
        let atoms = AtomTable::numbered(4);
        assert_eq!(parse_word("x1 x2", &atoms).unwrap(), sw(&[(0, 1), (1, 1)]));
        assert_eq!(
            parse_word("x3^-1 x1^-1", &atoms).unwrap(),
            sw(&[(2, -1), (0, -1)])
        );
        assert_eq!(parse_word("", &atoms).unwrap(), SignedWord::empty());
        assert_eq!(parse_word("1", &atoms).unwrap(), SignedWord::empty());
        assert!(matches!(
            parse_word("x9", &atoms),
            Err(ParseError::UnknownAtom { .. })
        ));
        assert!(matches!(
            parse_word("x1^2", &atoms),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn free_reduction() {
        assert_eq!(sw(&[(0, 1), (0, -1)]).free_reduce(), SignedWord::empty());
        assert_eq!(
            sw(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]).free_reduce(),
            sw(&[(2, 1)])
        );
        let w = sw(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(w.free_reduce(), w);
    }

    #[test]
    fn validates_irretractable_monoid() {
        let r = validate(&parse_presentation(IRRETRACTABLE).unwrap());
        assert!(r.homogeneous && r.quadratic && r.complemented);
        assert!(r.missing_pairs.is_empty());
        assert!(r.ambiguous_pairs.is_empty());
    }

    #[test]
    fn validates_obstructed_monoid() {
        let p = parse_presentation("atoms: x0 x1 x2\nrel: x0 x2 = x2 x1\nrel: x1 x2 = x2 x0").unwrap();
        let r = validate(&p);
        assert!(r.complemented);
        assert_eq!(r.missing_pairs, vec![(0, 1)]);
    }

    #[test]
    fn validates_free_monoid() {
        let p = parse_presentation("atoms: a").unwrap();
        let r = validate(&p);
        assert!(r.homogeneous && r.complemented && r.quadratic);
        assert!(r.missing_pairs.is_empty());
    }

    #[test]
    fn reports_ambiguous_and_non_homogeneous() {
        let p = parse_presentation("atoms: a b\nrel: a b = b a\nrel: a a = b b b").unwrap();
        let r = validate(&p);
        assert!(!r.homogeneous && !r.quadratic && !r.complemented);
        assert_eq!(r.ambiguous_pairs, vec![((0, 1), vec![0, 1])]);
    }

    #[test]
    fn split_positive_negative() {
        let w = sw(&[(0, 1), (1, 1), (2, -1), (3, -1)]);
        assert_eq!(
            w.split_positive_negative(),
            Some((Word::new(vec![0, 1]), Word::new(vec![3, 2])))
        );
        assert_eq!(sw(&[(0, -1), (1, 1)]).split_positive_negative(), None);
    }

    #[test]
    fn shortlex_enumeration() {
        let all = Word::all_up_to(4, 2);
        assert_eq!(all.len(), 21);
        assert!(all.windows(2).all(|w| w[0].shortlex_cmp(&w[1]).is_lt()));
    }
}
