//! Reversing diagrams: grid geometry recovered from a [`ReversingTrace`],
//! and Graphviz DOT rendering.
//!
//! The current word is tracked as a path of vertices. In right reversing a
//! positive letter steps one row down and a negative letter one column left,
//! so `a^-1 b` starts with `a` along the top row and `b` down the first
//! column, and every closed square lands on the grid. Left reversing uses
//! the mirrored convention.

use std::collections::HashMap;
use std::fmt::Write;

use crate::presentation::{Atom, AtomTable, Direction, Letter};
use crate::reversing::ReversingTrace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramNode {
    pub row: i64,
    pub col: i64,
    /// Disambiguates vertices that land on an occupied grid point.
    pub layer: usize,
    pub blocked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub atom: Atom,
    /// The letter entered the word with a negative sign.
    pub negative: bool,
    /// Part of the input word rather than a closing complement.
    pub initial: bool,
    pub blocked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagram {
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
    /// Vertex pairs identified by an empty closing (`x^-1 x`).
    pub identified: Vec<(usize, usize)>,
}

struct Builder {
    direction: Direction,
    nodes: Vec<DiagramNode>,
    edges: Vec<DiagramEdge>,
    identified: Vec<(usize, usize)>,
    occupied: HashMap<(i64, i64), usize>,
}

impl Builder {
    fn step(&self, l: Letter) -> (i64, i64) {
        match (self.direction, l.is_pos()) {
            (Direction::Right, true) => (1, 0),
            (Direction::Right, false) => (0, -1),
            (Direction::Left, true) => (0, 1),
            (Direction::Left, false) => (-1, 0),
        }
    }

    fn node(&mut self, row: i64, col: i64) -> usize {
        let layer = self.occupied.entry((row, col)).or_insert(0);
        let id = self.nodes.len();
        self.nodes.push(DiagramNode {
            row,
            col,
            layer: *layer,
            blocked: false,
        });
        *layer += 1;
        id
    }

    /// Edge for letter `l` walked from vertex `a` to vertex `b`.
    fn edge(&mut self, a: usize, b: usize, l: Letter, initial: bool) -> usize {
        let (from, to) = if l.is_pos() { (a, b) } else { (b, a) };
        self.edges.push(DiagramEdge {
            from,
            to,
            atom: l.atom,
            negative: !l.is_pos(),
            initial,
            blocked: false,
        });
        self.edges.len() - 1
    }

    fn pos(&self, v: usize) -> (i64, i64) {
        (self.nodes[v].row, self.nodes[v].col)
    }
}

impl Diagram {
    pub fn from_trace(trace: &ReversingTrace) -> Diagram {
        let mut b = Builder {
            direction: trace.direction,
            nodes: Vec::new(),
            edges: Vec::new(),
            identified: Vec::new(),
            occupied: HashMap::new(),
        };
        // path[i] is the vertex before letter i; edges[i] its edge
        let mut path = vec![b.node(0, 0)];
        let mut edges = Vec::new();
        for &l in trace.initial.letters() {
            let (r, c) = b.pos(*path.last().unwrap());
            let (dr, dc) = b.step(l);
            let v = b.node(r + dr, c + dc);
            edges.push(b.edge(*path.last().unwrap(), v, l, true));
            path.push(v);
        }
        for step in &trace.steps {
            let i = step.position;
            let (start, end) = (path[i], path[i + 2]);
            let (first, second): (Vec<Letter>, Vec<Letter>) = match trace.direction {
                Direction::Right => (
                    step.u.to_signed().letters().to_vec(),
                    step.v.inverse().letters().to_vec(),
                ),
                Direction::Left => (
                    step.u.inverse().letters().to_vec(),
                    step.v.to_signed().letters().to_vec(),
                ),
            };
            let letters: Vec<Letter> = first.iter().chain(second.iter()).copied().collect();
            if letters.is_empty() {
                let corner = b.node(b.pos(end).0, b.pos(start).1);
                b.identified.push((start, corner));
                b.identified.push((end, corner));
                path.splice(i..i + 3, [corner]);
                edges.splice(i..i + 2, []);
                continue;
            }
            // interior vertices: walk forward from `start` through the first
            // part, backward from `end` through the second
            let mut interior = Vec::with_capacity(letters.len() - 1);
            for k in 0..letters.len() - 1 {
                let (mut r, mut c) = if k < first.len() { b.pos(start) } else { b.pos(end) };
                if k < first.len() {
                    for &l in &letters[..=k] {
                        let (dr, dc) = b.step(l);
                        r += dr;
                        c += dc;
                    }
                } else {
                    for &l in &letters[k + 1..] {
                        let (dr, dc) = b.step(l);
                        r -= dr;
                        c -= dc;
                    }
                }
                interior.push(b.node(r, c));
            }
            let chain: Vec<usize> = std::iter::once(start)
                .chain(interior.iter().copied())
                .chain(std::iter::once(end))
                .collect();
            let new_edges: Vec<usize> = letters
                .iter()
                .enumerate()
                .map(|(k, &l)| b.edge(chain[k], chain[k + 1], l, false))
                .collect();
            path.splice(i + 1..i + 2, interior);
            edges.splice(i..i + 2, new_edges);
        }
        if let Some(blk) = trace.blocked {
            let corner = path[blk.position + 1];
            b.nodes[corner].blocked = true;
            b.edges[edges[blk.position]].blocked = true;
            b.edges[edges[blk.position + 1]].blocked = true;
        }
        let min_r = b.nodes.iter().map(|n| n.row).min().unwrap_or(0);
        let min_c = b.nodes.iter().map(|n| n.col).min().unwrap_or(0);
        for n in &mut b.nodes {
            n.row -= min_r;
            n.col -= min_c;
        }
        Diagram {
            nodes: b.nodes,
            edges: b.edges,
            identified: b.identified,
        }
    }

    pub fn node_id(&self, v: usize) -> String {
        let n = &self.nodes[v];
        if n.layer == 0 {
            format!("n_{}_{}", n.row, n.col)
        } else {
            format!("n_{}_{}_{}", n.row, n.col, n.layer)
        }
    }

    pub fn to_dot(&self, atoms: &AtomTable) -> String {
        let mut out = String::from("digraph reversing {\n  rankdir=LR;\n  node [shape=circle, label=\"\", width=0.15];\n");
        for (v, n) in self.nodes.iter().enumerate() {
            let mut attrs = vec![format!("pos=\"{},{}!\"", n.col, -n.row)];
            if n.blocked {
                attrs.push("color=red".into());
            }
            let _ = writeln!(out, "  {} [{}];", self.node_id(v), attrs.join(", "));
        }
        for e in &self.edges {
            let mut attrs = vec![format!("label=\"{}\"", atoms.name(e.atom))];
            if e.negative {
                attrs.push("style=dashed".into());
            }
            if e.blocked {
                attrs.push("color=red".into());
            }
            let _ = writeln!(
                out,
                "  {} -> {} [{}];",
                self.node_id(e.from),
                self.node_id(e.to),
                attrs.join(", ")
            );
        }
        for &(a, b) in &self.identified {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dotted, dir=none];",
                self.node_id(a),
                self.node_id(b)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// DOT rendering of the reversing diagram recorded in `trace`.
pub fn export_dot(trace: &ReversingTrace, atoms: &AtomTable) -> String {
    Diagram::from_trace(trace).to_dot(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::{parse_word, Word};
    use crate::reversing::{lcm_left, right_reverse, ComplementTable, ReversingError};

    #[test]
    fn crossed_pairs_grid() {
        let p = fixtures::irretractable();
        let ct = ComplementTable::build(&p, Direction::Right).unwrap();
        let l = lcm_left(&ct, &Word::new(vec![0, 1]), &Word::new(vec![1, 0]), 100).unwrap();
        let d = Diagram::from_trace(&l.trace);
        assert_eq!(d.nodes.len(), 9);
        assert_eq!(d.edges.len(), 12);
        assert!(d.nodes.iter().all(|n| n.layer == 0));
        let corners: Vec<(i64, i64)> = d.nodes.iter().map(|n| (n.row, n.col)).collect();
        for r in 0..3 {
            for c in 0..3 {
                assert!(corners.contains(&(r, c)));
            }
        }
        let dot = d.to_dot(p.atoms());
        assert!(dot.starts_with("digraph reversing {"));
        assert_eq!(dot.matches(" -> ").count(), 12);
        // every horizontal edge comes from a negative letter
        assert_eq!(dot.matches("style=dashed").count(), 6);
    }

    #[test]
    fn stuck_diagram_marks_blocked_corner() {
        let p = fixtures::incomplete();
        let ct = ComplementTable::build(&p, Direction::Right).unwrap();
        let word = parse_word("x0^-1 x1", p.atoms()).unwrap();
        let Err(ReversingError::Stuck { trace, .. }) = right_reverse(&ct, &word, 100) else {
            panic!("expected stuck");
        };
        let d = Diagram::from_trace(&trace);
        assert_eq!(d.nodes.iter().filter(|n| n.blocked).count(), 1);
        assert_eq!(d.edges.iter().filter(|e| e.blocked).count(), 2);
        let dot = export_dot(&trace, p.atoms());
        assert_eq!(dot.matches("color=red").count(), 3);
        assert!(dot.contains("label=\"x0\""));
    }

    #[test]
    fn empty_closing_is_identified() {
        let p = fixtures::irretractable();
        let ct = ComplementTable::build(&p, Direction::Right).unwrap();
        let word = parse_word("x1^-1 x1", p.atoms()).unwrap();
        let r = right_reverse(&ct, &word, 100).unwrap();
        let d = Diagram::from_trace(&r.trace);
        assert_eq!(d.identified.len(), 2);
        assert!(d.to_dot(p.atoms()).contains("style=dotted, dir=none"));
    }
}
