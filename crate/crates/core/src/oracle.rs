//! Brute-force ground truth for homogeneous presentations.
//!
//! Every word of length at most `max_length` is enumerated and words of equal
//! length are merged under single relation substitutions. Homogeneity keeps
//! every derivation inside one length layer, so the connected components are
//! exactly the elements of the monoid of that length.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::presentation::{validate, Atom, Presentation, Word};

/// Default cap on the number of congruence classes an index may hold.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Hard limit on words enumerated in one length layer.
const WORD_LIMIT: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("presentation is not homogeneous")]
    NonHomogeneous,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("word of length {length} exceeds the oracle bound {max_length}")]
    OutOfRange { length: usize, max_length: usize },
    #[error("least common multiple is not unique: {} minimal classes", .0.len())]
    AmbiguousLcm(Vec<Word>),
    #[error("greatest common divisor is not unique: {} maximal classes", .0.len())]
    AmbiguousGcd(Vec<Word>),
}

pub type ClassId = u32;

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller code as root so roots are lexicographically least
        if ra < rb {
            self.parent[rb as usize] = ra;
        } else if rb < ra {
            self.parent[ra as usize] = rb;
        }
    }
}

#[derive(Debug, Clone)]
struct Class {
    length: usize,
    /// Word codes in increasing (= lexicographic) order.
    members: Vec<u64>,
}

/// The Garside candidate found by folding lcms of all atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarsideElement {
    pub delta: Word,
    pub balanced: bool,
    pub generates: bool,
}

/// Partition of all words of length `<= max_length` into congruence classes.
#[derive(Debug, Clone)]
pub struct CongruenceIndex {
    presentation: Presentation,
    max_length: usize,
    rank: usize,
    /// `layers[len][code]` is the class of the word with that code.
    layers: Vec<Vec<ClassId>>,
    classes: Vec<Class>,
}

impl CongruenceIndex {
    pub fn build(p: &Presentation, max_length: usize) -> Result<Self, OracleError> {
        Self::build_with_cap(p, max_length, DEFAULT_CLASS_CAP)
    }

    pub fn build_with_cap(
        p: &Presentation,
        max_length: usize,
        class_cap: usize,
    ) -> Result<Self, OracleError> {
        if !validate(p).homogeneous {
            return Err(OracleError::NonHomogeneous);
        }
        let n = p.rank() as u64;
        let mut layers = Vec::with_capacity(max_length + 1);
        let mut classes: Vec<Class> = Vec::new();
        for len in 0..=max_length {
            let size = n
                .checked_pow(len as u32)
                .filter(|&s| s <= WORD_LIMIT)
                .ok_or_else(|| {
                    OracleError::BudgetExceeded(format!(
                        "{} words of length {len} exceed the enumeration limit",
                        n.saturating_pow(len as u32)
                    ))
                })?;
            let mut uf = UnionFind::new(size as usize);
            for rel in p.relations() {
                let k = rel.lhs.len();
                if k > len {
                    continue;
                }
                let lhs = encode(rel.lhs.letters(), n);
                let rhs = encode(rel.rhs.letters(), n);
                for pos in 0..=len - k {
                    let tail = n.pow((len - pos - k) as u32);
                    let head = n.pow(pos as u32);
                    for pre in 0..head {
                        let base = pre * n.pow((len - pos) as u32);
                        for suf in 0..tail {
                            let a = base + lhs * tail + suf;
                            let b = base + rhs * tail + suf;
                            uf.union(a as u32, b as u32);
                        }
                    }
                }
            }
            let first = classes.len() as ClassId;
            let mut layer = vec![0 as ClassId; size as usize];
            let mut root_class = vec![u32::MAX; size as usize];
            for code in 0..size as u32 {
                let root = uf.find(code);
                if root_class[root as usize] == u32::MAX {
                    root_class[root as usize] = classes.len() as u32;
                    classes.push(Class {
                        length: len,
                        members: Vec::new(),
                    });
                    if classes.len() > class_cap {
                        return Err(OracleError::BudgetExceeded(format!(
                            "more than {class_cap} congruence classes"
                        )));
                    }
                }
                let cid = root_class[root as usize];
                layer[code as usize] = cid;
                classes[cid as usize].members.push(code as u64);
            }
            debug_assert!(layer.iter().all(|&c| c >= first));
            layers.push(layer);
        }
        Ok(CongruenceIndex {
            presentation: p.clone(),
            max_length,
            rank: p.rank(),
            layers,
            classes,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    fn check(&self, w: &Word) -> Result<(), OracleError> {
        if w.len() > self.max_length {
            Err(OracleError::OutOfRange {
                length: w.len(),
                max_length: self.max_length,
            })
        } else {
            Ok(())
        }
    }

    pub fn class_of(&self, w: &Word) -> Result<ClassId, OracleError> {
        self.check(w)?;
        Ok(self.layers[w.len()][encode(w.letters(), self.rank as u64) as usize])
    }

    fn class_at(&self, len: usize, code: u64) -> ClassId {
        self.layers[len][code as usize]
    }

    pub fn class_length(&self, c: ClassId) -> usize {
        self.classes[c as usize].length
    }

    /// Lexicographically least member of the class.
    pub fn representative(&self, c: ClassId) -> Word {
        let class = &self.classes[c as usize];
        decode(class.members[0], class.length, self.rank as u64)
    }

    pub fn members(&self, c: ClassId) -> Vec<Word> {
        let class = &self.classes[c as usize];
        class
            .members
            .iter()
            .map(|&m| decode(m, class.length, self.rank as u64))
            .collect()
    }

    /// Classes of words of the given length, in order of their representatives.
    pub fn classes_of_length(&self, len: usize) -> Vec<ClassId> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        if len > self.max_length {
            return out;
        }
        for &c in &self.layers[len] {
            if seen.insert(c) {
                out.push(c);
            }
        }
        out
    }

    /// Representatives of every class up to the bound, in shortlex order.
    pub fn all_representatives(&self) -> Vec<Word> {
        (0..=self.max_length)
            .flat_map(|len| self.classes_of_length(len))
            .map(|c| self.representative(c))
            .collect()
    }

    pub fn canonical(&self, w: &Word) -> Result<Word, OracleError> {
        Ok(self.representative(self.class_of(w)?))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, OracleError> {
        self.check(u)?;
        self.check(v)?;
        if u.len() != v.len() {
            return Ok(false);
        }
        Ok(self.class_of(u)? == self.class_of(v)?)
    }

    /// Some `u` with `a·u ≡ g`, as a class representative.
    pub fn left_divides(&self, a: &Word, g: &Word) -> Result<Option<Word>, OracleError> {
        let ca = self.class_of(a)?;
        let cg = self.class_of(g)?;
        Ok(self.left_quotient(ca, a.len(), cg))
    }

    fn left_quotient(&self, ca: ClassId, alen: usize, cg: ClassId) -> Option<Word> {
        let class = &self.classes[cg as usize];
        if alen > class.length {
            return None;
        }
        let n = self.rank as u64;
        let tail = n.pow((class.length - alen) as u32);
        class
            .members
            .iter()
            .find(|&&m| self.class_at(alen, m / tail) == ca)
            .map(|&m| self.representative(self.class_at(class.length - alen, m % tail)))
    }

    /// Some `u` with `u·a ≡ g`, as a class representative.
    pub fn right_divides(&self, a: &Word, g: &Word) -> Result<Option<Word>, OracleError> {
        let ca = self.class_of(a)?;
        let cg = self.class_of(g)?;
        let class = &self.classes[cg as usize];
        if a.len() > class.length {
            return Ok(None);
        }
        let n = self.rank as u64;
        let tail = n.pow(a.len() as u32);
        Ok(class
            .members
            .iter()
            .find(|&&m| self.class_at(a.len(), m % tail) == ca)
            .map(|&m| self.representative(self.class_at(class.length - a.len(), m / tail))))
    }

    /// All classes `d` with `d·u ≡ g` for some `u`.
    pub fn left_divisors(&self, g: &Word) -> Result<BTreeSet<ClassId>, OracleError> {
        let cg = self.class_of(g)?;
        let class = &self.classes[cg as usize];
        let n = self.rank as u64;
        let mut out = BTreeSet::new();
        for &m in &class.members {
            for k in 0..=class.length {
                out.insert(self.class_at(k, m / n.pow((class.length - k) as u32)));
            }
        }
        Ok(out)
    }

    /// All classes `d` with `u·d ≡ g` for some `u`.
    pub fn right_divisors(&self, g: &Word) -> Result<BTreeSet<ClassId>, OracleError> {
        let cg = self.class_of(g)?;
        let class = &self.classes[cg as usize];
        let n = self.rank as u64;
        let mut out = BTreeSet::new();
        for &m in &class.members {
            for k in 0..=class.length {
                out.insert(self.class_at(k, m % n.pow(k as u32)));
            }
        }
        Ok(out)
    }

    /// Least common multiple for left divisibility (`a` and `b` are prefixes).
    ///
    /// `Ok(None)` when no common multiple exists within the bound.
    pub fn lcm(&self, a: &Word, b: &Word) -> Result<Option<Word>, OracleError> {
        self.lcm_generic(a, b, false)
    }

    /// Least common multiple for right divisibility (`a` and `b` are suffixes).
    pub fn right_lcm(&self, a: &Word, b: &Word) -> Result<Option<Word>, OracleError> {
        self.lcm_generic(a, b, true)
    }

    fn lcm_generic(&self, a: &Word, b: &Word, right: bool) -> Result<Option<Word>, OracleError> {
        self.check(a)?;
        let cb = self.class_of(b)?;
        let n = self.rank as u64;
        let acode = encode(a.letters(), n);
        for len in a.len().max(b.len())..=self.max_length {
            let extra = len - a.len();
            let span = n.pow(extra as u32);
            let mut found = BTreeSet::new();
            for u in 0..span {
                let code = if right {
                    u * n.pow(a.len() as u32) + acode
                } else {
                    acode * span + u
                };
                let cm = self.class_at(len, code);
                if found.contains(&cm) {
                    continue;
                }
                let divides = if right {
                    self.right_divides_class(cb, b.len(), cm)
                } else {
                    self.left_quotient(cb, b.len(), cm).is_some()
                };
                if divides {
                    found.insert(cm);
                }
            }
            match found.len() {
                0 => continue,
                1 => return Ok(Some(self.representative(*found.iter().next().unwrap()))),
                _ => {
                    return Err(OracleError::AmbiguousLcm(
                        found.iter().map(|&c| self.representative(c)).collect(),
                    ))
                }
            }
        }
        Ok(None)
    }

    fn right_divides_class(&self, ca: ClassId, alen: usize, cg: ClassId) -> bool {
        let class = &self.classes[cg as usize];
        if alen > class.length {
            return false;
        }
        let tail = (self.rank as u64).pow(alen as u32);
        class
            .members
            .iter()
            .any(|&m| self.class_at(alen, m % tail) == ca)
    }

    fn gcd_generic(&self, a: &Word, b: &Word, right: bool) -> Result<Word, OracleError> {
        let ca = self.class_of(a)?;
        let cb = self.class_of(b)?;
        let n = self.rank as u64;
        let divisors = |c: ClassId, k: usize| -> BTreeSet<ClassId> {
            let class = &self.classes[c as usize];
            class
                .members
                .iter()
                .map(|&m| {
                    let code = if right {
                        m % n.pow(k as u32)
                    } else {
                        m / n.pow((class.length - k) as u32)
                    };
                    self.class_at(k, code)
                })
                .collect()
        };
        for k in (0..=a.len().min(b.len())).rev() {
            let common: Vec<ClassId> = divisors(ca, k)
                .intersection(&divisors(cb, k))
                .copied()
                .collect();
            match common.len() {
                0 => continue,
                1 => return Ok(self.representative(common[0])),
                _ => {
                    return Err(OracleError::AmbiguousGcd(
                        common.iter().map(|&c| self.representative(c)).collect(),
                    ))
                }
            }
        }
        Ok(Word::empty())
    }

    /// Greatest common right divisor (a common suffix).
    pub fn right_gcd(&self, a: &Word, b: &Word) -> Result<Word, OracleError> {
        self.gcd_generic(a, b, true)
    }

    /// Greatest common left divisor (a common prefix).
    pub fn left_gcd(&self, a: &Word, b: &Word) -> Result<Word, OracleError> {
        self.gcd_generic(a, b, false)
    }

    /// Classes `c` admitting some `d` with `c·d ≡ 1` within the bound.
    pub fn invertibles(&self) -> Vec<Word> {
        let one = self.layers[0][0];
        let n = self.rank as u64;
        let mut out = Vec::new();
        for (cid, class) in self.classes.iter().enumerate() {
            let c = class.members[0];
            let invertible = (0..=self.max_length - class.length).any(|dlen| {
                let span = n.pow(dlen as u32);
                (0..span).any(|d| self.class_at(class.length + dlen, c * span + d) == one)
            });
            if invertible {
                out.push(self.representative(cid as ClassId));
            }
        }
        out
    }

    /// Folds the lcm over all atoms and tests whether the result is balanced.
    pub fn garside_element(&self) -> Result<Option<GarsideElement>, OracleError> {
        if self.max_length == 0 {
            return Err(OracleError::BudgetExceeded(
                "oracle bound 0 cannot hold any atom".into(),
            ));
        }
        let mut delta = Word::atom(0);
        for x in 1..self.rank {
            match self.lcm(&delta, &Word::atom(x))? {
                Some(m) => delta = m,
                None => return Ok(None),
            }
        }
        let balanced = self.left_divisors(&delta)? == self.right_divisors(&delta)?;
        let mut generates = true;
        for x in 0..self.rank as Atom {
            generates &= self.left_divides(&Word::atom(x), &delta)?.is_some();
        }
        Ok(Some(GarsideElement {
            delta,
            balanced,
            generates,
        }))
    }
}

fn encode(letters: &[Atom], n: u64) -> u64 {
    letters.iter().fold(0, |acc, &a| acc * n + a as u64)
}

fn decode(mut code: u64, len: usize, n: u64) -> Word {
    let mut letters = vec![0; len];
    for slot in letters.iter_mut().rev() {
        *slot = (code % n) as Atom;
        code /= n;
    }
    Word::new(letters)
}
