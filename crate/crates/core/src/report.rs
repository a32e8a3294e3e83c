//! Outcome of an exhaustive property sweep.

use serde_json::{json, Value};

use crate::presentation::{AtomTable, Word};

/// Anything that can be printed with atom names.
pub trait Render {
    fn render(&self, atoms: &AtomTable) -> String;
}

impl Render for Word {
    fn render(&self, atoms: &AtomTable) -> String {
        Word::render(self, atoms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure<T> {
    pub inputs: Vec<T>,
    pub lhs: T,
    pub rhs: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport<T = Word> {
    pub property: String,
    pub universe: String,
    pub tested: usize,
    pub skipped: usize,
    pub failures: Vec<Failure<T>>,
}

impl<T> PropertyReport<T> {
    pub fn new(property: impl Into<String>, universe: impl Into<String>) -> Self {
        PropertyReport {
            property: property.into(),
            universe: universe.into(),
            tested: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.tested += 1;
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, inputs: Vec<T>, lhs: T, rhs: T) {
        self.tested += 1;
        self.failures.push(Failure { inputs, lhs, rhs });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl<T: Render> PropertyReport<T> {
    pub fn to_json(&self, atoms: &AtomTable) -> Value {
        json!({
            "property": self.property,
            "universe": self.universe,
            "tested": self.tested,
            "skipped": self.skipped,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| json!({
                "inputs": f.inputs.iter().map(|w| w.render(atoms)).collect::<Vec<_>>(),
                "lhs": f.lhs.render(atoms),
                "rhs": f.rhs.render(atoms),
            })).collect::<Vec<_>>(),
        })
    }

    /// One line: `PASS name (tested, skipped)` or `FAIL ...` with the first witness.
    pub fn summary(&self, atoms: &AtomTable) -> String {
        let head = format!(
            "{} {} [{}]: {} tested, {} skipped",
            if self.passed() { "PASS" } else { "FAIL" },
            self.property,
            self.universe,
            self.tested,
            self.skipped
        );
        match self.failures.first() {
            None => head,
            Some(f) => format!(
                "{head}, {} failures; first: ({}) gives {} vs {}",
                self.failures.len(),
                f.inputs.iter().map(|w| w.render(atoms)).collect::<Vec<_>>().join(", "),
                f.lhs.render(atoms),
                f.rhs.render(atoms)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let atoms = AtomTable::numbered(2);
        let mut r: PropertyReport = PropertyReport::new("commutativity", "length <= 1");
        r.pass();
        r.skip();
        r.fail(vec![Word::atom(0), Word::atom(1)], Word::atom(0), Word::empty());
        let v = r.to_json(&atoms);
        assert_eq!(v["tested"], 2);
        assert_eq!(v["skipped"], 1);
        assert_eq!(v["passed"], false);
        assert_eq!(v["failures"][0]["inputs"][1], "x2");
        assert_eq!(v["failures"][0]["rhs"], "1");
        assert!(r.summary(&atoms).starts_with("FAIL commutativity"));
    }
}
