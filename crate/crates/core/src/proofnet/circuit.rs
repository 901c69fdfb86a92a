//! Alternating elementary circuits and chords.
//!
//! The graph has one vertex per atom occurrence. A compound leaf `A * B`
//! adds a conclusion vertex `v` and a middle vertex `w`, with a `B` pair
//! `v - w`, `R` edges from `w` to the roots of `A` and `B`, and between
//! those roots an `R` edge for `*`, an arc for `<`, nothing for `|`.
//! The conclusion term relates the roots of its leaves.

use std::fmt;

use crate::term::{Atom, Formula, Op, Term};

use super::ProofStructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitVertex {
    Atom(Atom),
    /// Conclusion of a formula link.
    Link(Formula),
    /// Middle vertex of a formula link.
    Middle(Formula),
}

impl fmt::Display for CircuitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircuitVertex::Atom(a) => write!(f, "{a}"),
            CircuitVertex::Link(x) => write!(f, "[{x}]"),
            CircuitVertex::Middle(x) => write!(f, "mid[{x}]"),
        }
    }
}

/// `vertices[0] -B- vertices[1] -R- vertices[2] -B- ... -R- vertices[0]`.
/// `arcs[k]` tells whether the `k`-th `R` step is an arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AeCircuit {
    pub vertices: Vec<CircuitVertex>,
    pub arcs: Vec<bool>,
}

impl fmt::Display for AeCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.vertices.len();
        for (i, v) in self.vertices.iter().enumerate() {
            write!(f, "{v}")?;
            if i % 2 == 0 {
                f.write_str(" -B- ")?;
            } else {
                f.write_str(if self.arcs[i / 2] { " -R-> " } else { " -R- " })?;
            }
        }
        write!(f, "{}", self.vertices[0 % n])
    }
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn intersection(&self, other: &Bits) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            let mut m = a & b;
            while m != 0 {
                out.push(w * 64 + m.trailing_zeros() as usize);
                m &= m - 1;
            }
        }
        out
    }
}

pub(crate) struct Graph {
    vertices: Vec<CircuitVertex>,
    mate: Vec<usize>,
    /// `out[i]` holds `j` when `(i, j)` is an `R` pair.
    out: Vec<Bits>,
    /// `R` pairs in either direction.
    und: Vec<Bits>,
}

impl Graph {
    pub(crate) fn build(ps: &ProofStructure) -> Graph {
        let mut g = Graph { vertices: Vec::new(), mate: Vec::new(), out: Vec::new(), und: Vec::new() };
        let mut pending: Vec<(usize, usize, bool)> = Vec::new();
        let mut bpairs: Vec<(usize, usize)> = Vec::new();
        let roots = g.add_term(&ps.conclusion, &mut pending, &mut bpairs);
        let n = g.vertices.len();
        g.mate = vec![usize::MAX; n];
        g.out = vec![Bits::new(n); n];
        g.und = vec![Bits::new(n); n];
        let index_of = |id| {
            g.vertices
                .iter()
                .position(|v| matches!(v, CircuitVertex::Atom(a) if a.id == id))
                .expect("axiom occurrence in conclusion")
        };
        let axioms: Vec<(usize, usize)> = ps.axioms.iter().map(|&(x, y)| (index_of(x), index_of(y))).collect();
        for (x, y) in axioms.into_iter().chain(bpairs) {
            g.mate[x] = y;
            g.mate[y] = x;
        }
        for (i, j, both) in pending {
            g.relate(i, j, both);
        }
        let mut next = 0;
        g.relate_term(&ps.conclusion, &roots, &mut next);
        g
    }

    fn relate(&mut self, i: usize, j: usize, both: bool) {
        self.out[i].set(j);
        self.und[i].set(j);
        self.und[j].set(i);
        if both {
            self.out[j].set(i);
        }
    }

    fn push(&mut self, v: CircuitVertex) -> usize {
        self.vertices.push(v);
        self.vertices.len() - 1
    }

    /// Adds the vertices of every leaf; returns the root vertex of each
    /// leaf in left-to-right order.
    fn add_term(&mut self, t: &Term, pending: &mut Vec<(usize, usize, bool)>, bpairs: &mut Vec<(usize, usize)>) -> Vec<usize> {
        t.leaves().into_iter().map(|f| self.add_formula(f, pending, bpairs)).collect()
    }

    fn add_formula(&mut self, f: &Formula, pending: &mut Vec<(usize, usize, bool)>, bpairs: &mut Vec<(usize, usize)>) -> usize {
        match f {
            Formula::Atom(a) => self.push(CircuitVertex::Atom(a.clone())),
            Formula::Conn(op, l, r) => {
                let a = self.add_formula(l, pending, bpairs);
                let b = self.add_formula(r, pending, bpairs);
                let v = self.push(CircuitVertex::Link(f.clone()));
                let w = self.push(CircuitVertex::Middle(f.clone()));
                bpairs.push((v, w));
                pending.push((w, a, true));
                pending.push((w, b, true));
                match op {
                    Op::Par => {}
                    Op::Before => pending.push((a, b, false)),
                    Op::Tensor => pending.push((a, b, true)),
                }
                v
            }
        }
    }

    /// Relates leaf roots according to the conclusion term; returns the
    /// leaf positions covered by `t`.
    fn relate_term(&mut self, t: &Term, roots: &[usize], next: &mut usize) -> Vec<usize> {
        match t {
            Term::Leaf(_) => {
                *next += 1;
                vec![roots[*next - 1]]
            }
            Term::Node(op, c) => {
                let groups: Vec<Vec<usize>> = c.iter().map(|x| self.relate_term(x, roots, next)).collect();
                for (k, g) in groups.iter().enumerate() {
                    for h in &groups[k + 1..] {
                        for &i in g {
                            for &j in h {
                                match op {
                                    Op::Par => {}
                                    Op::Before => self.relate(i, j, false),
                                    Op::Tensor => self.relate(i, j, true),
                                }
                            }
                        }
                    }
                }
                groups.concat()
            }
        }
    }

    /// First alternating elementary circuit (chordless when `chordless`).
    fn find(&self, chordless: bool) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut circ = Bits::new(n);
        let mut path = Vec::new();
        for s in 0..n {
            let m = self.mate[s];
            if self.out[m].get(s) {
                return Some(vec![s, m]);
            }
            if chordless && self.und[s].get(m) {
                continue;
            }
            circ.set(s);
            circ.set(m);
            path.push(s);
            path.push(m);
            if self.extend(s, chordless, &mut circ, &mut path) {
                return Some(path);
            }
            path.clear();
            circ.clear(s);
            circ.clear(m);
        }
        None
    }

    fn extend(&self, s: usize, chordless: bool, circ: &mut Bits, path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        let v0 = path[0];
        for x in self.out[last].intersection(&complement(circ)) {
            if x <= s {
                continue;
            }
            let y = self.mate[x];
            if circ.get(y) {
                continue;
            }
            let closes = self.out[y].get(v0);
            if chordless {
                if self.und[x].get(y) {
                    continue;
                }
                if self.und[x].intersection(circ) != [last] {
                    continue;
                }
                let yn = self.und[y].intersection(circ);
                if !(yn.is_empty() || (yn == [v0] && closes)) {
                    continue;
                }
            }
            path.push(x);
            path.push(y);
            if closes {
                return true;
            }
            circ.set(x);
            circ.set(y);
            if self.extend(s, chordless, circ, path) {
                return true;
            }
            circ.clear(x);
            circ.clear(y);
            path.pop();
            path.pop();
        }
        false
    }

    fn to_circuit(&self, path: &[usize]) -> AeCircuit {
        let k = path.len();
        let arcs = (0..k / 2)
            .map(|i| {
                let (a, b) = (path[2 * i + 1], path[(2 * i + 2) % k]);
                !self.out[b].get(a)
            })
            .collect();
        AeCircuit { vertices: path.iter().map(|&i| self.vertices[i].clone()).collect(), arcs }
    }
}

fn complement(b: &Bits) -> Bits {
    Bits(b.0.iter().map(|w| !w).collect())
}

/// A chordless alternating elementary circuit, if any. Compound leaves
/// contribute their formula links.
pub fn find_chordless_ae_circuit(ps: &ProofStructure) -> Option<AeCircuit> {
    let g = Graph::build(ps);
    g.find(true).map(|p| g.to_circuit(&p))
}

/// Any alternating elementary circuit, chords ignored.
pub fn find_ae_circuit(ps: &ProofStructure) -> Option<AeCircuit> {
    let g = Graph::build(ps);
    g.find(false).map(|p| g.to_circuit(&p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(axioms: &[(u32, u32)], s: &str) -> ProofStructure {
        ProofStructure::parse(axioms, s).unwrap()
    }

    #[test]
    fn single_axiom_has_no_circuit() {
        assert!(find_ae_circuit(&net(&[(0, 1)], "a#0 | a^#1")).is_none());
    }

    #[test]
    fn tensor_pairs_give_chordless_circuit() {
        let ps = net(&[(0, 1), (2, 3)], "(a#0 * b#2) | (a^#1 * b^#3)");
        let c = find_chordless_ae_circuit(&ps).unwrap();
        assert_eq!(c.to_string(), "a#0 -B- a^#1 -R- b^#3 -B- b#2 -R- a#0");
        assert!(!ps.is_correct());
    }

    #[test]
    fn ax2_circuits_have_chords() {
        let ps = ProofStructure::ax(&["a", "b"]);
        assert!(find_ae_circuit(&ps).is_some());
        assert!(ps.is_correct());
        assert!(ProofStructure::ax(&["a", "b", "c"]).is_correct());
    }

    #[test]
    fn before_pairs_are_correct() {
        assert!(net(&[(0, 1), (2, 3)], "(a#0 < b#2) | (a^#1 < b^#3)").is_correct());
        assert!(!net(&[(0, 1), (2, 3)], "(a#0 < b#2) | (b^#3 < a^#1)").is_correct());
    }

    #[test]
    fn relation_inside_an_axiom_is_a_circuit() {
        for s in ["a#0 * a^#1", "a#0 < a^#1", "a^#1 < a#0"] {
            let c = find_chordless_ae_circuit(&net(&[(0, 1)], s)).unwrap();
            assert_eq!(c.vertices.len(), 2, "{s}");
        }
    }

    #[test]
    fn linked_form_agrees_with_atoms() {
        let atoms = net(&[(0, 1), (2, 3)], "(a#0 | b#2) * (a^#1 | b^#3)");
        let folded = net(&[(0, 1), (2, 3)], "[a#0 | b#2] * [a^#1 | b^#3]");
        assert_eq!(atoms.is_correct(), folded.is_correct());
        let bad = net(&[(0, 1), (2, 3)], "[a#0 * b#2] | [a^#1 * b^#3]");
        assert!(!bad.is_correct());
        let one = net(&[(0, 1), (2, 3)], "[(a#0 < b#2) | (a^#1 < b^#3)]");
        assert!(one.is_correct());
    }
}
