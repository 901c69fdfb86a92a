//! Splitting correct nets and reading proofs back from them.

use std::collections::{HashMap, HashSet};

use crate::relation::to_relation;
use crate::sequent::{check_dicograph, ProofTree};
use crate::term::{Atom, EquivKind, Formula, Id, Op, Term};

use super::{NetError, ProofStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitKind {
    /// Conclusion is an entropy weakening of `left < right`.
    Dimix,
    /// Conclusion is `T1 | (A * B) | T2` with premises `A | T1`, `B | T2`.
    Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub kind: SplitKind,
    pub left: ProofStructure,
    pub right: ProofStructure,
    /// `A` and `B` of a tensor split.
    pub active: Option<(Term, Term)>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        self.0[a] = b;
    }
}

fn par_parts(t: &Term) -> Vec<Term> {
    match t {
        Term::Node(Op::Par, c) => c.clone(),
        other => vec![other.clone()],
    }
}

fn restrict(ps: &ProofStructure, keep: &HashSet<Id>) -> Option<ProofStructure> {
    let conclusion = ps.conclusion.restrict(&|a: &Atom| keep.contains(&a.id))?;
    let axioms = ps.axioms.iter().copied().filter(|(x, _)| keep.contains(x)).collect();
    ProofStructure::new(axioms, conclusion).ok()
}

fn dimix_candidates(ps: &ProofStructure) -> Vec<Split> {
    let r = to_relation(&ps.conclusion);
    let n = r.len();
    let mut dsu = Dsu::new(n);
    for &(x, y) in &ps.axioms {
        dsu.union(r.index(x), r.index(y));
    }
    for i in 0..n {
        for j in 0..n {
            if r.is_edge(i, j) {
                dsu.union(i, j);
            }
        }
    }
    let unit: Vec<usize> = (0..n).map(|i| dsu.find(i)).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for start in 0..n {
        // close under arcs coming into the set
        let mut inside = vec![false; n];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for k in 0..n {
                if unit[k] == unit[i] && !inside[k] {
                    inside[k] = true;
                    stack.push(k);
                }
            }
            for k in 0..n {
                if !inside[k] && r.is_arc(k, i) {
                    stack.push(k);
                }
            }
        }
        let left: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();
        if left.len() == n || !seen.insert(left.clone()) {
            continue;
        }
        let ids = |want: bool| -> HashSet<Id> { (0..n).filter(|&i| inside[i] == want).map(|i| r.points[i].id).collect() };
        if let (Some(l), Some(rt)) = (restrict(ps, &ids(true)), restrict(ps, &ids(false))) {
            out.push(Split { kind: SplitKind::Dimix, left: l, right: rt, active: None });
        }
    }
    out
}

fn tensor_candidates(ps: &ProofStructure) -> Vec<Split> {
    let parts = par_parts(&ps.conclusion);
    let ids_of = |t: &Term| t.atom_ids();
    let all: Vec<Id> = ps.conclusion.atom_ids();
    let pos: HashMap<Id, usize> = all.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut out = Vec::new();
    for (p, part) in parts.iter().enumerate() {
        let Term::Node(Op::Tensor, c) = part else { continue };
        let m = c.len();
        for mask in (1u64..(1 << m)).filter(|s| s & 1 == 1 && *s != (1 << m) - 1) {
            let side = |inside: bool| -> Vec<Term> {
                (0..m).filter(|i| (mask >> i & 1 == 1) == inside).map(|i| c[i].clone()).collect()
            };
            let a = Term::node(Op::Tensor, side(true));
            let b = Term::node(Op::Tensor, side(false));
            let others: Vec<&Term> = parts.iter().enumerate().filter(|(q, _)| *q != p).map(|(_, t)| t).collect();
            let mut dsu = Dsu::new(all.len());
            let unite = |ids: &[Id], dsu: &mut Dsu| {
                for w in ids.windows(2) {
                    dsu.union(pos[&w[0]], pos[&w[1]]);
                }
            };
            for &(x, y) in &ps.axioms {
                unite(&[x, y], &mut dsu);
            }
            for t in others.iter().copied().chain([&a, &b]) {
                unite(&ids_of(t), &mut dsu);
            }
            let ra = dsu.find(pos[&a.min_id()]);
            let rb = dsu.find(pos[&b.min_id()]);
            if ra == rb {
                continue;
            }
            let mut left: HashSet<Id> = ids_of(&a).into_iter().collect();
            let mut right: HashSet<Id> = ids_of(&b).into_iter().collect();
            for t in others {
                let target = if dsu.find(pos[&t.min_id()]) == rb { &mut right } else { &mut left };
                target.extend(ids_of(t));
            }
            if let (Some(l), Some(r)) = (restrict(ps, &left), restrict(ps, &right)) {
                out.push(Split { kind: SplitKind::Tensor, left: l, right: r, active: Some((a, b)) });
            }
        }
    }
    out
}

/// Every split of the unfolded net whose two premises are correct.
pub fn splits(ps: &ProofStructure) -> Vec<Split> {
    let ps = ps.unfolded();
    tensor_candidates(&ps)
        .into_iter()
        .chain(dimix_candidates(&ps))
        .filter(|s| s.left.is_correct() && s.right.is_correct())
        .collect()
}

/// First split with correct premises. A single axiom has none.
pub fn split(ps: &ProofStructure) -> Option<Split> {
    splits(ps).into_iter().next()
}

fn is_axiom(ps: &ProofStructure) -> bool {
    match (&ps.conclusion, ps.axioms.as_slice()) {
        (Term::Node(Op::Par, c), [_]) => c.len() == 2 && c.iter().all(|x| x.as_leaf().is_some_and(Formula::is_atom)),
        _ => false,
    }
}

fn build(ps: &ProofStructure, memo: &mut HashMap<ProofStructure, Option<ProofTree>>) -> Option<ProofTree> {
    if let Some(hit) = memo.get(ps) {
        return hit.clone();
    }
    let result = if is_axiom(ps) {
        let atoms = ps.conclusion.atoms();
        let (p, n) = if atoms[0].polarity < atoms[1].polarity { (atoms[0], atoms[1]) } else { (atoms[1], atoms[0]) };
        Some(ProofTree::axiom(p.clone(), n.clone()))
    } else {
        splits(ps).into_iter().find_map(|s| {
            let l = build(&s.left, memo)?;
            let r = build(&s.right, memo)?;
            match s.active {
                Some((a, b)) => ProofTree::tensor(crate::sequent::Calculus::Dicograph, l, a, r, b),
                None => {
                    let d = ProofTree::dimix(l, r);
                    Some(if d.conclusion == ps.conclusion { d } else { ProofTree::entropy(d, ps.conclusion.clone()) })
                }
            }
        })
    };
    memo.insert(ps.clone(), result.clone());
    result
}

fn fold_formula(p: ProofTree, f: &Formula) -> Option<ProofTree> {
    let Formula::Conn(op, l, r) = f else { return Some(p) };
    let p = fold_formula(p, l)?;
    let p = fold_formula(p, r)?;
    ProofTree::intro(p, l, r, EquivKind::of_op(*op))
}

/// A dicograph-calculus proof of a correct net, or `None` when no
/// sequence of splits reaches the axioms.
pub fn sequentialize(ps: &ProofStructure) -> Result<Option<ProofTree>, NetError> {
    if !ps.is_correct() {
        return Err(NetError::NotCorrect);
    }
    let Some(mut p) = build(&ps.unfolded(), &mut HashMap::new()) else { return Ok(None) };
    for f in ps.conclusion.leaves() {
        p = fold_formula(p, f).expect("subformulas of a leaf are equivalent once folded");
    }
    debug_assert!(check_dicograph(&p).is_ok());
    Ok(Some(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::{proof_to_net, Calculus, Rule};

    fn net(axioms: &[(Id, Id)], s: &str) -> ProofStructure {
        ProofStructure::parse(axioms, s).unwrap()
    }

    fn round_trip(ps: &ProofStructure) -> ProofTree {
        let p = sequentialize(ps).unwrap().expect("sequentializable");
        check_dicograph(&p).unwrap();
        assert_eq!(proof_to_net(&p, Calculus::Dicograph).unwrap(), ps.unfolded());
        assert_eq!(p.conclusion, ps.conclusion);
        p
    }

    #[test]
    fn axioms_and_tensors() {
        round_trip(&ProofStructure::ax(&["a"]));
        let p = round_trip(&ProofStructure::ax(&["a", "b", "c"]));
        assert_eq!(p.count(Rule::TensorOrCut), 2);
    }

    #[test]
    fn before_net_uses_dimix_and_entropy() {
        let p = round_trip(&net(&[(0, 1), (2, 3)], "(a#0 < b#2) | (a^#1 < b^#3)"));
        assert_eq!(p.count(Rule::Dimix), 1);
        assert_eq!(p.count(Rule::Entropy), 1);
    }

    #[test]
    fn mix_is_a_dimix_split() {
        let p = round_trip(&net(&[(0, 1), (2, 3)], "a#0 | a^#1 | b#2 | b^#3"));
        assert_eq!(p.count(Rule::Dimix), 1);
    }

    #[test]
    fn compound_leaves_fold_back() {
        let p = round_trip(&net(&[(0, 1), (2, 3)], "[a#0 < b#2] | [a^#1 < b^#3]"));
        assert_eq!(p.count(Rule::BefIntro), 2);
    }

    #[test]
    fn cut_net_sequentializes() {
        round_trip(&net(&[(0, 1), (2, 3)], "a#0 | (a^#1 * a#2) | a^#3"));
    }

    #[test]
    fn incorrect_net_rejected() {
        let ps = net(&[(0, 1), (2, 3)], "(a#0 * b#2) | (a^#1 * b^#3)");
        assert_eq!(sequentialize(&ps), Err(NetError::NotCorrect));
    }

    #[test]
    fn every_correct_small_net_sequentializes() {
        for ps in super::super::enumerate_structures(&["a", "b"], 4).unwrap() {
            if ps.is_correct() {
                round_trip(&ps);
            }
        }
    }
}
