//! Search for a correct net that no split decomposes.

use crate::relation::{bits, set_partitions};
use crate::term::{Atom, Id, Op, Term};

use super::split::splits;
use super::{sequentialize, ProofStructure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub net: ProofStructure,
    /// Candidate conclusions examined, this one included.
    pub tested: usize,
}

/// Six axioms arranged as two tensors `a * (c < b^)` and `d * (e^ < f^)`
/// plus six single atoms.
pub fn counterexample_items() -> (Vec<Term>, Vec<(Id, Id)>) {
    let at = |n: &str, neg: bool, id: Id| Term::Leaf(if neg { Atom::neg(n, id) } else { Atom::pos(n, id) }.into());
    let t1 = Term::node(Op::Tensor, vec![at("a", false, 0), Term::node(Op::Before, vec![at("c", false, 4), at("b", true, 3)])]);
    let t2 = Term::node(Op::Tensor, vec![at("d", false, 6), Term::node(Op::Before, vec![at("e", true, 9), at("f", true, 11)])]);
    let items = vec![
        t1,
        t2,
        at("a", true, 1),
        at("b", false, 2),
        at("c", true, 5),
        at("d", true, 7),
        at("e", false, 8),
        at("f", false, 10),
    ];
    let axioms = (0..6).map(|i| (2 * i, 2 * i + 1)).collect();
    (items, axioms)
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Indices of the singleton items used by the filter.
const A_DUAL: usize = 2;
const B: usize = 3;
const C_DUAL: usize = 4;
const D_DUAL: usize = 5;
const E: usize = 6;
const F: usize = 7;

/// Chains must put `a^` before `f` and `e` before `b`, and `c^` in the
/// chain of `d^`.
fn admissible(chains: &[Vec<usize>]) -> bool {
    let place = |x: usize| {
        chains.iter().enumerate().find_map(|(k, c)| c.iter().position(|&y| y == x).map(|i| (k, i))).unwrap()
    };
    let before = |x, y| {
        let (p, q) = (place(x), place(y));
        p.0 == q.0 && p.1 < q.1
    };
    before(A_DUAL, F) && before(E, B) && place(C_DUAL).0 == place(D_DUAL).0
}

/// Enumerates pars of series chains over the items, most parallel first,
/// and returns the first correct net that has no split and no proof.
pub fn search_counterexample() -> Option<Counterexample> {
    let (items, axioms) = counterexample_items();
    let mut parts = Vec::new();
    set_partitions((1u64 << items.len()) - 1, &mut Vec::new(), &mut parts);
    parts.sort_by_key(|p| std::cmp::Reverse(p.len()));
    let mut tested = 0;
    for blocks in parts {
        let perms: Vec<Vec<Vec<usize>>> = blocks.iter().map(|&b| permutations(&bits(b).collect::<Vec<_>>())).collect();
        let mut choice = vec![0; blocks.len()];
        loop {
            let chains: Vec<Vec<usize>> = choice.iter().enumerate().map(|(k, &i)| perms[k][i].clone()).collect();
            if admissible(&chains) {
                tested += 1;
                let t = Term::node(
                    Op::Par,
                    chains.iter().map(|c| Term::node(Op::Before, c.iter().map(|&i| items[i].clone()).collect())).collect(),
                );
                let net = ProofStructure::new(axioms.clone(), t).expect("items are linked");
                if net.is_correct() && splits(&net).is_empty() && sequentialize(&net) == Ok(None) {
                    return Some(Counterexample { net, tested });
                }
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < perms[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn items_are_linked() {
        let (items, axioms) = counterexample_items();
        let t = Term::node(Op::Par, items);
        assert!(ProofStructure::new(axioms, t).is_ok());
    }

    #[test]
    fn finds_unsplittable_correct_net() {
        let c = search_counterexample().expect("counterexample");
        assert!(c.net.is_correct());
        assert_eq!(sequentialize(&c.net), Ok(None));
        assert_eq!(c.net.axioms.len(), 6);
    }
}
