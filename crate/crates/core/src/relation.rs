//! Relations over atom occurrences and the dicograph correspondence.

use std::collections::HashMap;

use crate::term::{Atom, Formula, Id, Op, Term, TermError};

/// Irreflexive relation over at most 64 points. `adj[i]` has bit `j` set
/// when `(i, j)` belongs to the relation. An arc is a pair whose reverse
/// is absent; an edge is a pair present in both directions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub points: Vec<Atom>,
    adj: Vec<u64>,
}

pub const MAX_POINTS: usize = 64;

impl Relation {
    pub fn empty(points: Vec<Atom>) -> Relation {
        assert!(points.len() <= MAX_POINTS, "relation over more than {MAX_POINTS} points");
        let n = points.len();
        Relation { points, adj: vec![0; n] }
    }

    /// Builds a relation from arcs and edges given by occurrence id.
    pub fn from_pairs(points: Vec<Atom>, arcs: &[(Id, Id)], edges: &[(Id, Id)]) -> Relation {
        let mut r = Relation::empty(points);
        for &(a, b) in arcs {
            let (i, j) = (r.index(a), r.index(b));
            r.set(i, j);
        }
        for &(a, b) in edges {
            let (i, j) = (r.index(a), r.index(b));
            r.set(i, j);
            r.set(j, i);
        }
        r
    }

    /// Builds a relation from a raw adjacency matrix.
    pub fn from_bits(points: Vec<Atom>, adj: Vec<u64>) -> Relation {
        assert_eq!(points.len(), adj.len());
        Relation { points, adj }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index(&self, id: Id) -> usize {
        self.points.iter().position(|a| a.id == id).unwrap_or_else(|| panic!("no point #{id}"))
    }

    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        self.adj[i] |= 1 << j;
    }

    pub fn has(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn row(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn is_arc(&self, i: usize, j: usize) -> bool {
        self.has(i, j) && !self.has(j, i)
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.has(i, j) && self.has(j, i)
    }

    /// True when `i` and `j` are related in either direction.
    pub fn related(&self, i: usize, j: usize) -> bool {
        self.has(i, j) || self.has(j, i)
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.len()).all(|i| !self.has(i, i))
    }

    /// Arcs as id pairs, sorted.
    pub fn arcs(&self) -> Vec<(Id, Id)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.is_arc(i, j) {
                    out.push((self.points[i].id, self.points[j].id));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Edges as id pairs with the smaller id first, sorted.
    pub fn edges(&self) -> Vec<(Id, Id)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.is_edge(i, j) {
                    let (a, b) = (self.points[i].id, self.points[j].id);
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All ordered pairs, by id.
    pub fn pairs(&self) -> Vec<(Id, Id)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.has(i, j) {
                    out.push((self.points[i].id, self.points[j].id));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Same points (by id), regardless of their order.
    pub fn same_domain(&self, other: &Relation) -> bool {
        let mut a: Vec<Id> = self.points.iter().map(|p| p.id).collect();
        let mut b: Vec<Id> = other.points.iter().map(|p| p.id).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Pair-set inclusion over a common domain.
    pub fn is_subset_of(&self, other: &Relation) -> bool {
        if !self.same_domain(other) {
            return false;
        }
        let map: Vec<usize> = self.points.iter().map(|p| other.index(p.id)).collect();
        (0..self.len()).all(|i| {
            (0..self.len()).all(|j| !self.has(i, j) || other.has(map[i], map[j]))
        })
    }

    /// Equality as pair sets over a common domain.
    pub fn same_pairs(&self, other: &Relation) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }
}

/// The relation denoted by a term. Compound leaves are unfolded first, so
/// the points are exactly the atom occurrences.
pub fn to_relation(t: &Term) -> Relation {
    let t = t.unfold_all();
    let points: Vec<Atom> = t.atoms().into_iter().cloned().collect();
    let mut r = Relation::empty(points);
    let mut next = 0;
    fill(&t, &mut r, &mut next);
    r
}

fn fill(t: &Term, r: &mut Relation, next: &mut usize) -> u64 {
    match t {
        Term::Leaf(_) => {
            *next += 1;
            1 << (*next - 1)
        }
        Term::Node(op, c) => {
            let masks: Vec<u64> = c.iter().map(|x| fill(x, r, next)).collect();
            for (k, &m) in masks.iter().enumerate() {
                for &later in &masks[k + 1..] {
                    for i in bits(m) {
                        for j in bits(later) {
                            match op {
                                Op::Par => {}
                                Op::Before => r.set(i, j),
                                Op::Tensor => {
                                    r.set(i, j);
                                    r.set(j, i);
                                }
                            }
                        }
                    }
                }
            }
            masks.iter().fold(0, |a, m| a | m)
        }
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected components of `s` under the symmetric adjacency `link`.
fn components(s: u64, link: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    let mut rest = s;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            for j in bits(rest & !comp) {
                if link(i, j) {
                    comp |= 1 << j;
                    frontier |= 1 << j;
                }
            }
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

/// Recovers the canonical term of a dicograph by recursive decomposition.
pub fn from_relation(r: &Relation) -> Result<Term, TermError> {
    if r.is_empty() || !r.is_irreflexive() {
        return Err(TermError::NotDicograph);
    }
    decompose(r, full_mask(r.len()))
}

fn decompose(r: &Relation, s: u64) -> Result<Term, TermError> {
    if s.count_ones() == 1 {
        let i = s.trailing_zeros() as usize;
        return Ok(Term::Leaf(Formula::Atom(r.points[i].clone())));
    }
    let par = components(s, |i, j| r.related(i, j));
    if par.len() > 1 {
        return build(r, Op::Par, par);
    }
    let tensor = components(s, |i, j| !r.is_edge(i, j));
    if tensor.len() > 1 {
        return build(r, Op::Tensor, tensor);
    }
    let mut before = components(s, |i, j| !r.is_arc(i, j) && !r.is_arc(j, i));
    if before.len() > 1 {
        // A block with fewer predecessors comes earlier.
        let preds = |m: u64| bits(s & !m).filter(|&j| r.is_arc(j, m.trailing_zeros() as usize)).count();
        before.sort_by_key(|&m| preds(m));
        for (k, &a) in before.iter().enumerate() {
            for &b in &before[k + 1..] {
                for i in bits(a) {
                    for j in bits(b) {
                        if !r.is_arc(i, j) {
                            return Err(TermError::NotDicograph);
                        }
                    }
                }
            }
        }
        return build(r, Op::Before, before);
    }
    Err(TermError::NotDicograph)
}

fn build(r: &Relation, op: Op, parts: Vec<u64>) -> Result<Term, TermError> {
    let children = parts.into_iter().map(|m| decompose(r, m)).collect::<Result<Vec<_>, _>>()?;
    Ok(Term::node(op, children))
}

/// Decides the dicograph property from the forbidden-configuration
/// characterization, without decomposing.
pub fn is_dicograph(r: &Relation) -> bool {
    let n = r.len();
    if !r.is_irreflexive() {
        return false;
    }
    let arc = |i: usize, j: usize| r.is_arc(i, j);
    let edge = |i: usize, j: usize| r.is_edge(i, j);
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                // arcs are transitive
                if arc(a, b) && arc(b, c) && !arc(a, c) {
                    return false;
                }
                // weak transitivity, both halves
                if arc(a, b) && r.has(b, c) && !r.has(a, c) {
                    return false;
                }
                if r.has(a, b) && arc(b, c) && !r.has(a, c) {
                    return false;
                }
            }
        }
    }
    let comparable = |i: usize, j: usize| arc(i, j) || arc(j, i);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if a == b || a == c || a == d || b == c || b == d || c == d {
                        continue;
                    }
                    // induced N: a<b, c<b, c<d, nothing else
                    if arc(a, b)
                        && arc(c, b)
                        && arc(c, d)
                        && !comparable(a, c)
                        && !comparable(a, d)
                        && !comparable(b, d)
                    {
                        return false;
                    }
                    // induced P4: a-b-c-d
                    if edge(a, b) && edge(b, c) && edge(c, d) && !edge(a, c) && !edge(b, d) && !edge(a, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Calls `f` on every canonical term over `points`, each exactly once.
pub fn for_each_term(points: &[Atom], f: &mut dyn FnMut(Term)) {
    assert!(points.len() <= 16, "term enumeration over more than 16 points");
    if points.is_empty() {
        return;
    }
    let mut g = TermGen { points, memo: HashMap::new() };
    let all = full_mask(points.len());
    if points.len() == 1 {
        f(g.leaf(0));
        return;
    }
    for op in [Op::Par, Op::Before, Op::Tensor] {
        g.each_split(all, op, &mut |children| f(Term::node(op, children)));
    }
}

/// Every canonical term over `points`, collected.
pub fn all_terms(points: &[Atom]) -> Vec<Term> {
    let mut out = Vec::new();
    for_each_term(points, &mut |t| out.push(t));
    out
}

struct TermGen<'a> {
    points: &'a [Atom],
    memo: HashMap<(u64, Option<Op>), Vec<Term>>,
}

impl TermGen<'_> {
    fn leaf(&self, i: usize) -> Term {
        Term::Leaf(Formula::Atom(self.points[i].clone()))
    }

    /// Terms over `mask` whose root operator is not `exclude`.
    fn terms(&mut self, mask: u64, exclude: Option<Op>) -> Vec<Term> {
        if let Some(v) = self.memo.get(&(mask, exclude)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if mask.count_ones() == 1 {
            out.push(self.leaf(mask.trailing_zeros() as usize));
        } else {
            for op in [Op::Par, Op::Before, Op::Tensor] {
                if Some(op) != exclude {
                    self.each_split(mask, op, &mut |c| out.push(Term::node(op, c)));
                }
            }
        }
        self.memo.insert((mask, exclude), out.clone());
        out
    }

    /// Calls `f` with every child list of an `op` node over `mask`.
    fn each_split(&mut self, mask: u64, op: Op, f: &mut dyn FnMut(Vec<Term>)) {
        let mut blocks = Vec::new();
        let ordered = op == Op::Before;
        let mut partitions = Vec::new();
        if ordered {
            ordered_partitions(mask, &mut blocks, &mut partitions);
        } else {
            set_partitions(mask, &mut blocks, &mut partitions);
        }
        for p in partitions.into_iter().filter(|p| p.len() >= 2) {
            let options: Vec<Vec<Term>> = p.iter().map(|&b| self.terms(b, Some(op))).collect();
            product(&options, &mut Vec::new(), f);
        }
    }
}

fn product(options: &[Vec<Term>], acc: &mut Vec<Term>, f: &mut dyn FnMut(Vec<Term>)) {
    match options.split_first() {
        None => f(acc.clone()),
        Some((first, rest)) => {
            for t in first {
                acc.push(t.clone());
                product(rest, acc, f);
                acc.pop();
            }
        }
    }
}

/// Unordered partitions; each block contains the lowest remaining point.
pub(crate) fn set_partitions(rest: u64, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 0 {
        out.push(blocks.clone());
        return;
    }
    let low = rest & rest.wrapping_neg();
    let others = rest & !low;
    let mut sub = others;
    loop {
        blocks.push(low | sub);
        set_partitions(others & !sub, blocks, out);
        blocks.pop();
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & others;
    }
}

/// Ordered partitions (sequences of nonempty blocks).
pub(crate) fn ordered_partitions(rest: u64, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 0 {
        out.push(blocks.clone());
        return;
    }
    let mut sub = rest;
    while sub != 0 {
        blocks.push(sub);
        ordered_partitions(rest & !sub, blocks, out);
        blocks.pop();
        sub = (sub - 1) & rest;
    }
}

/// Distinct positive atoms `p0, p1, ...` used by enumeration tests.
pub fn sample_points(n: usize) -> Vec<Atom> {
    (0..n).map(|i| Atom::pos(format!("p{i}"), i as Id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn relation_examples() {
        let r = to_relation(&t("(a#0 < b#1) | c#2"));
        assert_eq!(r.arcs(), vec![(0, 1)]);
        assert!(r.edges().is_empty());
        let r = to_relation(&t("a#0 * b#1"));
        assert_eq!(r.edges(), vec![(0, 1)]);
        assert!(r.arcs().is_empty());
        let ax2 = to_relation(&t("(a#0 | a^#1) * (b#2 | b^#3)"));
        assert_eq!(ax2.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(ax2.arcs().is_empty());
    }

    #[test]
    fn forbidden_shapes() {
        let p = sample_points(4);
        let n = Relation::from_pairs(p.clone(), &[(0, 1), (2, 1), (2, 3)], &[]);
        assert!(!is_dicograph(&n));
        assert_eq!(from_relation(&n), Err(TermError::NotDicograph));
        let p4 = Relation::from_pairs(p.clone(), &[], &[(0, 1), (1, 2), (2, 3)]);
        assert!(!is_dicograph(&p4));
        assert_eq!(from_relation(&p4), Err(TermError::NotDicograph));
        let weak = Relation::from_pairs(p[..3].to_vec(), &[(0, 1)], &[(1, 2)]);
        assert!(!is_dicograph(&weak));
        assert!(from_relation(&weak).is_err());
    }

    #[test]
    fn decomposes_before_of_tensor() {
        let p = sample_points(3);
        let r = Relation::from_pairs(p, &[(0, 2), (1, 2)], &[(0, 1)]);
        assert_eq!(from_relation(&r).unwrap(), t("(p0#0 * p1#1) < p2#2"));
    }

    #[test]
    fn before_is_associative_not_commutative() {
        let l = to_relation(&t("(a#0 < b#1) < c#2"));
        let r = to_relation(&t("a#0 < (b#1 < c#2)"));
        assert!(l.same_pairs(&r));
        assert!(!to_relation(&t("a#0 < b#1")).same_pairs(&to_relation(&t("b#1 < a#0"))));
    }

    #[test]
    fn term_counts_match_relation_counts() {
        // labelled dicographs counted two ways
        for n in 1..=4 {
            let points = sample_points(n);
            let terms = all_terms(&points);
            let mut distinct = terms.clone();
            distinct.sort();
            distinct.dedup();
            assert_eq!(distinct.len(), terms.len());
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
            let mut count = 0;
            for bitsel in 0u64..(1 << pairs.len()) {
                let mut r = Relation::empty(points.clone());
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if bitsel >> k & 1 == 1 {
                        r.set(i, j);
                    }
                }
                if is_dicograph(&r) {
                    count += 1;
                }
            }
            assert_eq!(terms.len(), count, "n = {n}");
        }
        assert_eq!(all_terms(&sample_points(5)).len(), 13072);
    }

    #[test]
    fn partitions_are_counted() {
        let mut out = Vec::new();
        set_partitions(0b1111, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 15);
        let mut out = Vec::new();
        ordered_partitions(0b111, &mut Vec::new(), &mut out);
        assert_eq!(out.len(), 13);
    }
}
