//! Handsome proof structures: an axiom matching over atom occurrences
//! together with a conclusion term.

mod circuit;
mod cut;
mod search;
mod split;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_term;
use crate::relation::for_each_term;
use crate::rewrite::Derivation;
use crate::term::{Atom, Id, Op, Polarity, Term, TermError};

pub use circuit::{find_ae_circuit, find_chordless_ae_circuit, AeCircuit, CircuitVertex};
pub use cut::{cuts, eliminate_cut, normalize, Cut};
pub use search::{counterexample_items, search_counterexample, Counterexample};
pub use split::{sequentialize, split, splits, Split, SplitKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("occurrence #{0} is not covered by exactly one axiom")]
    BadMatching(Id),
    #[error("axiom #{0} - #{1} does not link dual atoms")]
    NotDual(Id, Id),
    #[error("position is not a cut")]
    NotACut,
    #[error("eliminating this cut leaves no conclusion")]
    EmptyConclusion,
    #[error("proof structure is not correct")]
    NotCorrect,
    #[error("enumeration bound exceeded: {0} axioms")]
    BoundExceeded(usize),
    #[error("derivation does not start from an axiom term")]
    BadStart,
    #[error("malformed net file: {0}")]
    Format(String),
}

/// Axioms `B` (pairs of dual occurrences, smaller id first, sorted) and a
/// conclusion term over exactly the linked occurrences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProofStructure {
    pub axioms: Vec<(Id, Id)>,
    pub conclusion: Term,
}

impl ProofStructure {
    /// Checks that the axioms form a perfect matching of dual atoms.
    pub fn new(mut axioms: Vec<(Id, Id)>, conclusion: Term) -> Result<ProofStructure, NetError> {
        conclusion.check_ids()?;
        let atoms: HashMap<Id, &Atom> = conclusion.atoms().into_iter().map(|a| (a.id, a)).collect();
        let mut seen: HashMap<Id, usize> = HashMap::new();
        for &(x, y) in &axioms {
            for id in [x, y] {
                if !atoms.contains_key(&id) {
                    return Err(NetError::BadMatching(id));
                }
                *seen.entry(id).or_default() += 1;
            }
            if !atoms[&x].is_dual_of(atoms[&y]) {
                return Err(NetError::NotDual(x, y));
            }
        }
        for id in conclusion.atom_ids() {
            if seen.get(&id) != Some(&1) {
                return Err(NetError::BadMatching(id));
            }
        }
        for ax in axioms.iter_mut() {
            if ax.0 > ax.1 {
                *ax = (ax.1, ax.0);
            }
        }
        axioms.sort_unstable();
        Ok(ProofStructure { axioms, conclusion })
    }

    /// The axiom net over `ax_n`: names get ids `2i` and `2i + 1`.
    pub fn ax(names: &[&str]) -> ProofStructure {
        let t = crate::rewrite::ax_n(names);
        let axioms = (0..names.len() as Id).map(|i| (2 * i, 2 * i + 1)).collect();
        ProofStructure::new(axioms, t).expect("ax_n is well formed")
    }

    /// Parses a conclusion and links atoms by the given pairs.
    pub fn parse(axioms: &[(Id, Id)], conclusion: &str) -> Result<ProofStructure, NetError> {
        ProofStructure::new(axioms.to_vec(), parse_term(conclusion)?)
    }

    pub fn partner(&self, id: Id) -> Option<Id> {
        self.axioms.iter().find_map(|&(x, y)| {
            if x == id {
                Some(y)
            } else if y == id {
                Some(x)
            } else {
                None
            }
        })
    }

    pub fn partners(&self) -> HashMap<Id, Id> {
        self.axioms.iter().flat_map(|&(x, y)| [(x, y), (y, x)]).collect()
    }

    pub fn atom(&self, id: Id) -> Option<&Atom> {
        self.conclusion.atoms().into_iter().find(|a| a.id == id)
    }

    /// Same net with every compound leaf unfolded.
    pub fn unfolded(&self) -> ProofStructure {
        ProofStructure { axioms: self.axioms.clone(), conclusion: self.conclusion.unfold_all() }
    }

    /// True when no alternating elementary circuit is chordless.
    pub fn is_correct(&self) -> bool {
        find_chordless_ae_circuit(self).is_none()
    }

    /// Renames occurrences to `0..2n` following the order of the atoms in
    /// the conclusion; used to compare nets up to renaming.
    pub fn renumbered(&self) -> ProofStructure {
        let mut cur = self.clone();
        // renaming can reorder commutative children, so iterate to a fixpoint
        for _ in 0..16 {
            let map: HashMap<Id, Id> =
                cur.conclusion.atoms().iter().enumerate().map(|(i, a)| (a.id, i as Id)).collect();
            if map.iter().all(|(k, v)| k == v) {
                break;
            }
            let conclusion =
                cur.conclusion.map_atoms(&mut |a| Atom::new(a.name.clone(), a.polarity, map[&a.id]));
            let axioms = cur.axioms.iter().map(|&(x, y)| (map[&x], map[&y])).collect();
            cur = ProofStructure::new(axioms, conclusion).expect("renaming keeps a matching");
        }
        cur
    }

    pub fn to_json(&self) -> String {
        let file = NetFile {
            axioms: self.axioms.iter().map(|&(x, y)| [x, y]).collect(),
            conclusion: self.conclusion.to_string(),
        };
        serde_json::to_string(&file).expect("net serializes")
    }

    pub fn from_json(src: &str) -> Result<ProofStructure, NetError> {
        let file: NetFile = serde_json::from_str(src).map_err(|e| NetError::Format(e.to_string()))?;
        let axioms = file.axioms.iter().map(|p| (p[0], p[1])).collect();
        ProofStructure::new(axioms, parse_term(&file.conclusion)?)
    }
}

#[derive(Serialize, Deserialize)]
struct NetFile {
    axioms: Vec<[Id; 2]>,
    conclusion: String,
}

/// Occurrences for `n` axioms named by `names`: axiom `i` links the
/// positive atom `2i` with the negative atom `2i + 1`.
pub fn axiom_points(names: &[&str]) -> Vec<Atom> {
    names
        .iter()
        .enumerate()
        .flat_map(|(i, n)| [Atom::pos(*n, 2 * i as Id), Atom::neg(*n, 2 * i as Id + 1)])
        .collect()
}

/// Calls `f` on every proof structure whose occurrences are
/// [`axiom_points`]: each canonical conclusion term combined with each
/// matching of positive to negative occurrences of the same name.
pub fn for_each_structure(
    names: &[&str],
    bound: usize,
    f: &mut dyn FnMut(ProofStructure),
) -> Result<(), NetError> {
    if names.len() > bound {
        return Err(NetError::BoundExceeded(names.len()));
    }
    let points = axiom_points(names);
    let matchings = name_matchings(&points);
    for_each_term(&points, &mut |t| {
        for m in &matchings {
            f(ProofStructure { axioms: m.clone(), conclusion: t.clone() });
        }
    });
    Ok(())
}

/// Collects [`for_each_structure`].
pub fn enumerate_structures(names: &[&str], bound: usize) -> Result<Vec<ProofStructure>, NetError> {
    let mut out = Vec::new();
    for_each_structure(names, bound, &mut |ps| out.push(ps))?;
    Ok(out)
}

fn name_matchings(points: &[Atom]) -> Vec<Vec<(Id, Id)>> {
    let pos: Vec<&Atom> = points.iter().filter(|a| a.polarity == Polarity::Pos).collect();
    let neg: Vec<&Atom> = points.iter().filter(|a| a.polarity == Polarity::Neg).collect();
    let mut out = Vec::new();
    let mut used = vec![false; neg.len()];
    fn go(
        pos: &[&Atom],
        neg: &[&Atom],
        i: usize,
        used: &mut [bool],
        acc: &mut Vec<(Id, Id)>,
        out: &mut Vec<Vec<(Id, Id)>>,
    ) {
        if i == pos.len() {
            let mut m = acc.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        for j in 0..neg.len() {
            if !used[j] && neg[j].name == pos[i].name {
                used[j] = true;
                acc.push((pos[i].id.min(neg[j].id), pos[i].id.max(neg[j].id)));
                go(pos, neg, i + 1, used, acc, out);
                acc.pop();
                used[j] = false;
            }
        }
    }
    go(&pos, &neg, 0, &mut used, &mut Vec::new(), &mut out);
    out
}

/// The net of a rewriting derivation from an axiom term.
pub fn from_derivation(d: &Derivation) -> Result<ProofStructure, NetError> {
    let pairs: Vec<&Term> = match &d.start {
        Term::Node(Op::Tensor, c) => c.iter().collect(),
        t @ Term::Node(Op::Par, _) => vec![t],
        _ => return Err(NetError::BadStart),
    };
    let mut axioms = Vec::new();
    for p in pairs {
        match p {
            Term::Node(Op::Par, c) if c.len() == 2 => {
                let (Some(x), Some(y)) = (c[0].as_leaf().and_then(|f| f.as_atom()), c[1].as_leaf().and_then(|f| f.as_atom())) else {
                    return Err(NetError::BadStart);
                };
                if !x.is_dual_of(y) {
                    return Err(NetError::BadStart);
                }
                axioms.push((x.id, y.id));
            }
            _ => return Err(NetError::BadStart),
        }
    }
    ProofStructure::new(axioms, d.end.clone())
}
