//! Cuts and their elimination.

use std::collections::{HashMap, HashSet};

use crate::term::{match_shapes, Id, Op, Position, Term};

use super::{NetError, ProofStructure};

/// A tensor node `K * K^` of the unfolded conclusion with no tensor
/// above it. `pairs` links each atom of `K` to its dual in `K^`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub position: Position,
    pub k: Term,
    pub k_dual: Term,
    pub pairs: Vec<(Id, Id)>,
}

/// Every cut, in pre-order of positions in the unfolded conclusion.
pub fn cuts(ps: &ProofStructure) -> Vec<Cut> {
    let t = ps.conclusion.unfold_all();
    let mut out = Vec::new();
    collect(&t, &mut Vec::new(), &mut out);
    out
}

fn collect(t: &Term, path: &mut Position, out: &mut Vec<Cut>) {
    match t {
        Term::Leaf(_) => {}
        Term::Node(Op::Tensor, c) => {
            if let Some(cut) = as_cut(c, path) {
                out.push(cut);
            }
        }
        Term::Node(_, c) => {
            for (i, x) in c.iter().enumerate() {
                path.push(i);
                collect(x, path, out);
                path.pop();
            }
        }
    }
}

fn as_cut(c: &[Term], path: &Position) -> Option<Cut> {
    let m = c.len();
    // `K` always takes the first child, so each split is tried once
    for mask in (1u64..(1 << m)).filter(|s| s & 1 == 1 && *s != (1 << m) - 1) {
        let pick = |inside: bool| -> Vec<Term> {
            (0..m).filter(|i| (mask >> i & 1 == 1) == inside).map(|i| c[i].clone()).collect()
        };
        let k = Term::node(Op::Tensor, pick(true));
        let k_dual = Term::node(Op::Tensor, pick(false));
        if let Some(pairs) = match_shapes(&k.dual(), &k_dual) {
            return Some(Cut { position: path.clone(), k, k_dual, pairs });
        }
    }
    None
}

/// Eliminates one cut: atoms of the cut disappear and each outside atom
/// whose axiom enters the cut is linked to its cut neighbour, reached by
/// alternating axioms and atomic cuts. Returns the reduced net and the
/// number of closed loops.
pub fn eliminate_cut(ps: &ProofStructure, cut: &Cut) -> Result<(ProofStructure, usize), NetError> {
    let cut = cuts(ps).into_iter().find(|c| c == cut).ok_or(NetError::NotACut)?;
    let conclusion = ps.conclusion.unfold_all().remove_at(&cut.position).ok_or(NetError::EmptyConclusion)?;
    let partner = ps.partners();
    let mut across: HashMap<Id, Id> = HashMap::new();
    for &(x, y) in &cut.pairs {
        across.insert(x, y);
        across.insert(y, x);
    }
    let inside = |id: &Id| across.contains_key(id);
    let mut visited: HashSet<Id> = HashSet::new();
    let mut axioms = Vec::new();
    for &(x, y) in &ps.axioms {
        match (inside(&x), inside(&y)) {
            (false, false) => axioms.push((x, y)),
            (true, true) => {}
            (false, true) | (true, false) => {
                let (start, mut cur) = if inside(&y) { (x, y) } else { (y, x) };
                let end = loop {
                    visited.insert(cur);
                    let z = across[&cur];
                    visited.insert(z);
                    let w = partner[&z];
                    if !inside(&w) {
                        break w;
                    }
                    cur = w;
                };
                axioms.push((start.min(end), start.max(end)));
            }
        }
    }
    axioms.sort_unstable();
    axioms.dedup();
    let mut loops = 0;
    let mut ids: Vec<Id> = across.keys().copied().collect();
    ids.sort_unstable();
    for id in ids {
        if visited.contains(&id) {
            continue;
        }
        loops += 1;
        let mut cur = id;
        while visited.insert(cur) {
            let z = partner[&cur];
            visited.insert(z);
            cur = across[&z];
        }
    }
    Ok((ProofStructure::new(axioms, conclusion)?, loops))
}

/// Eliminates cuts, first in position order, until none remain. Returns
/// the normal form and the total number of loops.
pub fn normalize(ps: &ProofStructure) -> Result<(ProofStructure, usize), NetError> {
    let mut cur = ps.unfolded();
    let mut loops = 0;
    while let Some(c) = cuts(&cur).into_iter().next() {
        let (next, l) = eliminate_cut(&cur, &c)?;
        cur = next;
        loops += l;
    }
    Ok((cur, loops))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(axioms: &[(Id, Id)], s: &str) -> ProofStructure {
        ProofStructure::parse(axioms, s).unwrap()
    }

    #[test]
    fn no_cut_in_axiom() {
        assert!(cuts(&ProofStructure::ax(&["a"])).is_empty());
    }

    #[test]
    fn axiom_against_cut() {
        let ps = net(&[(0, 1), (2, 3)], "a#0 | (a^#1 * a#2) | a^#3");
        let cs = cuts(&ps);
        assert_eq!(cs.len(), 1);
        let (out, loops) = eliminate_cut(&ps, &cs[0]).unwrap();
        assert_eq!(loops, 0);
        assert_eq!(out, net(&[(0, 3)], "a#0 | a^#3"));
    }

    #[test]
    fn compound_cut() {
        // two nets of a < b and a^ < b^ cut together, plus outside duals
        let ps = net(
            &[(0, 4), (1, 6), (2, 5), (3, 7)],
            "((a#0 < b#1) * (a^#2 < b^#3)) | (a^#4 < b^#6) | (a#5 < b#7)",
        );
        let cs = cuts(&ps);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].pairs, vec![(0, 2), (1, 3)]);
        let (out, loops) = normalize(&ps).unwrap();
        assert_eq!(loops, 0);
        assert_eq!(out, net(&[(4, 5), (6, 7)], "(a^#4 < b^#6) | (a#5 < b#7)"));
        assert!(ps.is_correct());
        assert!(out.is_correct());
    }

    #[test]
    fn cut_cycle_gives_loop() {
        let ps = net(&[(0, 1), (2, 3), (4, 5)], "(a#0 * a^#3) | (a^#1 * a#2) | b#4 | b^#5");
        let (out, loops) = normalize(&ps).unwrap();
        assert_eq!(loops, 1);
        assert_eq!(out, net(&[(4, 5)], "b#4 | b^#5"));
    }

    #[test]
    fn root_cut_has_no_conclusion() {
        let ps = net(&[(0, 1)], "a#0 * a^#1");
        let cs = cuts(&ps);
        assert_eq!(eliminate_cut(&ps, &cs[0]), Err(NetError::EmptyConclusion));
    }

    #[test]
    fn non_cut_rejected() {
        let ps = ProofStructure::ax(&["a"]);
        let fake = Cut { position: vec![], k: ps.conclusion.clone(), k_dual: ps.conclusion.clone(), pairs: vec![] };
        assert_eq!(eliminate_cut(&ps, &fake), Err(NetError::NotACut));
    }
}
