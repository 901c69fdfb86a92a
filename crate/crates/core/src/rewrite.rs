//! Inclusion rewriting on dicograph terms.
//!
//! Each rule replaces a composition of two operands by a weaker one, so
//! the relation of the result is contained in the relation of the source.
//! Matching works modulo associativity and commutativity: a plain
//! operand binds a nonempty group of children of the redex node, and a
//! compound operand binds one child carrying the required operator,
//! split in two.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::relation::to_relation;
use crate::term::{Atom, Id, Op, Polarity, Position, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    TsPa4,
    TsPa3,
    TsPa2,
    TsBef4,
    TsBef3l,
    TsBef3r,
    TsBef2,
    BefPa4,
    BefPa3l,
    BefPa3r,
    BefPa2,
}

use RuleId::*;

impl RuleId {
    pub const ALL: [RuleId; 11] =
        [TsPa4, TsPa3, TsPa2, TsBef4, TsBef3l, TsBef3r, TsBef2, BefPa4, BefPa3l, BefPa3r, BefPa2];

    pub fn name(self) -> &'static str {
        match self {
            TsPa4 => "ts_pa4",
            TsPa3 => "ts_pa3",
            TsPa2 => "ts_pa2",
            TsBef4 => "ts_bef4",
            TsBef3l => "ts_bef3l",
            TsBef3r => "ts_bef3r",
            TsBef2 => "ts_bef2",
            BefPa4 => "bef_pa4",
            BefPa3l => "bef_pa3l",
            BefPa3r => "bef_pa3r",
            BefPa2 => "bef_pa2",
        }
    }

    /// Operator of the redex node.
    pub fn outer(self) -> Op {
        match self {
            TsPa4 | TsPa3 | TsPa2 | TsBef4 | TsBef3l | TsBef3r | TsBef2 => Op::Tensor,
            BefPa4 | BefPa3l | BefPa3r | BefPa2 => Op::Before,
        }
    }

    /// Required operator of the left and right operands, if compound.
    pub fn shape(self) -> (Option<Op>, Option<Op>) {
        let (p, b) = (Some(Op::Par), Some(Op::Before));
        match self {
            TsPa4 | BefPa4 => (p, p),
            TsPa3 | BefPa3l => (p, None),
            BefPa3r => (None, p),
            TsBef4 => (b, b),
            TsBef3l => (b, None),
            TsBef3r => (None, b),
            TsPa2 | TsBef2 | BefPa2 => (None, None),
        }
    }

    /// False only for `ts_pa4`, which is not a valid implication.
    pub fn is_sound(self) -> bool {
        self != TsPa4
    }

    fn rhs(self, l: Bound, r: Bound) -> Term {
        use Bound::{One, Two};
        let n = Term::node;
        match (self, l, r) {
            (TsPa4, Two(x, y), Two(u, v)) => {
                n(Op::Par, vec![n(Op::Tensor, vec![x, u]), n(Op::Tensor, vec![y, v])])
            }
            (TsPa3, Two(x, y), One(u)) => n(Op::Par, vec![n(Op::Tensor, vec![x, u]), y]),
            (TsPa2 | BefPa2, One(y), One(u)) => n(Op::Par, vec![u, y]),
            (TsBef4, Two(x, y), Two(u, v)) => {
                n(Op::Before, vec![n(Op::Tensor, vec![x, u]), n(Op::Tensor, vec![y, v])])
            }
            (TsBef3l, Two(x, y), One(u)) => n(Op::Before, vec![n(Op::Tensor, vec![x, u]), y]),
            (TsBef3r, One(y), Two(u, v)) => n(Op::Before, vec![u, n(Op::Tensor, vec![y, v])]),
            (TsBef2, One(y), One(u)) => n(Op::Before, vec![u, y]),
            (BefPa4, Two(x, y), Two(u, v)) => {
                n(Op::Par, vec![n(Op::Before, vec![x, u]), n(Op::Before, vec![y, v])])
            }
            (BefPa3l, Two(x, y), One(u)) => n(Op::Par, vec![n(Op::Before, vec![x, u]), y]),
            (BefPa3r, One(y), Two(u, v)) => n(Op::Par, vec![u, n(Op::Before, vec![y, v])]),
            _ => unreachable!("operand shapes checked before building"),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = RewriteError;

    fn from_str(s: &str) -> Result<RuleId, RewriteError> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| RewriteError::UnknownRule(s.to_string()))
    }
}

/// The rule sets of the calculi.
pub mod rules {
    use super::RuleId::{self, *};

    pub const ALL: &[RuleId] = &RuleId::ALL;
    pub const GMLL: &[RuleId] = &[TsPa3];
    pub const GMLL_MIX: &[RuleId] = &[TsPa3, TsPa2];
    pub const DICOGRAPH: &[RuleId] =
        &[TsPa3, TsPa2, TsBef4, TsBef3l, TsBef3r, TsBef2, BefPa4, BefPa3l, BefPa3r, BefPa2];
    /// Inclusion of series-parallel orders.
    pub const BEF_PA: &[RuleId] = &[BefPa4, BefPa3l, BefPa3r, BefPa2];
}

/// How a metavariable group is bound inside the redex node.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operand {
    /// Children of the redex node, regrouped under its operator.
    Var(Vec<usize>),
    /// One child of the redex node with a compound operator; `first` lists
    /// the grandchildren bound to the first metavariable, the rest go to
    /// the second.
    Split { child: usize, first: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RewriteStep {
    pub rule: RuleId,
    pub position: Position,
    pub left: Operand,
    pub right: Operand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub start: Term,
    pub steps: Vec<RewriteStep>,
    pub end: Term,
}

impl Derivation {
    pub fn empty(t: Term) -> Derivation {
        Derivation { start: t.clone(), steps: Vec::new(), end: t }
    }

    /// Intermediate terms, `start` first and `end` last.
    pub fn terms(&self) -> Result<Vec<Term>, RewriteError> {
        let mut out = vec![self.start.clone()];
        for s in &self.steps {
            let next = apply_step(out.last().unwrap(), s)?;
            out.push(next);
        }
        if out.last() != Some(&self.end) {
            return Err(RewriteError::InvalidStep("replay does not reach the end term".into()));
        }
        Ok(out)
    }

    /// One line per step: `<rule> @ <position> : <before> => <after>`.
    pub fn log(&self) -> Result<String, RewriteError> {
        let terms = self.terms()?;
        let mut out = String::new();
        for (k, s) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{} @ {} : {} => {}\n",
                s.rule,
                format_position(&s.position),
                terms[k],
                terms[k + 1]
            ));
        }
        Ok(out)
    }
}

pub fn format_position(p: &[usize]) -> String {
    if p.is_empty() {
        "root".into()
    } else {
        p.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("invalid rewrite step: {0}")]
    InvalidStep(String),
    #[error("terms have different atom occurrences")]
    DomainMismatch,
    #[error("atoms cannot be paired into dual axioms")]
    NotBalanced,
    #[error("unknown rule '{0}'")]
    UnknownRule(String),
}

enum Bound {
    One(Term),
    Two(Term, Term),
}

fn invalid<T>(msg: &str) -> Result<T, RewriteError> {
    Err(RewriteError::InvalidStep(msg.to_string()))
}

fn bind(
    op: Op,
    children: &[Term],
    operand: &Operand,
    want: Option<Op>,
) -> Result<(Bound, Vec<usize>), RewriteError> {
    match (operand, want) {
        (Operand::Var(idx), None) => {
            if idx.is_empty() || idx.iter().any(|&i| i >= children.len()) {
                return invalid("operand out of range");
            }
            let group = idx.iter().map(|&i| children[i].clone()).collect();
            Ok((Bound::One(Term::node(op, group)), idx.clone()))
        }
        (Operand::Split { child, first }, Some(inner)) => {
            let Some(Term::Node(cop, grand)) = children.get(*child) else {
                return invalid("split operand is not a compound child");
            };
            if *cop != inner {
                return invalid("split operand has the wrong operator");
            }
            let m = grand.len();
            if first.is_empty() || first.len() >= m || first.iter().any(|&i| i >= m) {
                return invalid("split must be proper");
            }
            if inner == Op::Before && first.iter().enumerate().any(|(k, &i)| k != i) {
                return invalid("split of a series composition must be a prefix");
            }
            let x: Vec<Term> = first.iter().map(|&i| grand[i].clone()).collect();
            let y: Vec<Term> =
                (0..m).filter(|i| !first.contains(i)).map(|i| grand[i].clone()).collect();
            Ok((Bound::Two(Term::node(inner, x), Term::node(inner, y)), vec![*child]))
        }
        _ => invalid("operand shape does not match the rule"),
    }
}

/// Applies a step; the result is canonical.
pub fn apply_step(t: &Term, s: &RewriteStep) -> Result<Term, RewriteError> {
    let Some(Term::Node(op, children)) = t.at(&s.position) else {
        return invalid("position is not an interior node");
    };
    if *op != s.rule.outer() {
        return invalid("redex node has the wrong operator");
    }
    let (lw, rw) = s.rule.shape();
    let (l, li) = bind(*op, children, &s.left, lw)?;
    let (r, ri) = bind(*op, children, &s.right, rw)?;
    let mut used = li.clone();
    used.extend(&ri);
    let mut sorted = used.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != used.len() {
        return invalid("operands overlap");
    }
    let result = s.rule.rhs(l, r);
    let replaced = if *op == Op::Before {
        // left run immediately followed by right run
        let contiguous = |v: &[usize]| v.windows(2).all(|w| w[1] == w[0] + 1);
        if !contiguous(&li) || !contiguous(&ri) || li.last().unwrap() + 1 != ri[0] {
            return invalid("series operands must be adjacent runs");
        }
        let (i, j) = (li[0], ri.last().unwrap() + 1);
        let mut c = children[..i].to_vec();
        c.push(result);
        c.extend_from_slice(&children[j..]);
        Term::node(Op::Before, c)
    } else {
        let mut c: Vec<Term> = (0..children.len())
            .filter(|i| !used.contains(i))
            .map(|i| children[i].clone())
            .collect();
        c.push(result);
        Term::node(*op, c)
    };
    Ok(t.replace_at(&s.position, replaced))
}

fn nonempty_subsets(avail: &[usize]) -> Vec<Vec<usize>> {
    let n = avail.len();
    (1u64..(1 << n))
        .map(|m| (0..n).filter(|k| m >> k & 1 == 1).map(|k| avail[k]).collect())
        .collect()
}

/// All ways to bind an operand of shape `want` using children in `avail`.
fn operand_choices(children: &[Term], avail: &[usize], want: Option<Op>) -> Vec<Operand> {
    match want {
        None => nonempty_subsets(avail).into_iter().map(Operand::Var).collect(),
        Some(inner) => {
            let mut out = Vec::new();
            for &i in avail {
                if let Term::Node(cop, grand) = &children[i] {
                    if *cop != inner {
                        continue;
                    }
                    let m = grand.len();
                    if inner == Op::Before {
                        for k in 1..m {
                            out.push(Operand::Split { child: i, first: (0..k).collect() });
                        }
                    } else {
                        for sub in nonempty_subsets(&(0..m).collect::<Vec<_>>()) {
                            if sub.len() < m {
                                out.push(Operand::Split { child: i, first: sub });
                            }
                        }
                    }
                }
            }
            out
        }
    }
}

fn candidate_steps(t: &Term, rules: &[RuleId]) -> Vec<RewriteStep> {
    let mut out = Vec::new();
    for pos in t.node_positions() {
        let Some(Term::Node(op, children)) = t.at(&pos) else { continue };
        let n = children.len();
        for &rule in rules {
            if rule.outer() != *op {
                continue;
            }
            let (lw, rw) = rule.shape();
            if *op == Op::Before {
                for i in 0..n {
                    for k in i + 1..n {
                        for j in k + 1..=n {
                            let run = |a: usize, b: usize, w: Option<Op>| -> Vec<Operand> {
                                match w {
                                    None => vec![Operand::Var((a..b).collect())],
                                    Some(_) if b - a == 1 => {
                                        operand_choices(children, &[a], w)
                                    }
                                    Some(_) => Vec::new(),
                                }
                            };
                            for left in run(i, k, lw) {
                                for right in run(k, j, rw) {
                                    out.push(RewriteStep {
                                        rule,
                                        position: pos.clone(),
                                        left: left.clone(),
                                        right,
                                    });
                                }
                            }
                        }
                    }
                }
            } else {
                let all: Vec<usize> = (0..n).collect();
                for left in operand_choices(children, &all, lw) {
                    let taken = match &left {
                        Operand::Var(v) => v.clone(),
                        Operand::Split { child, .. } => vec![*child],
                    };
                    let rest: Vec<usize> = all.iter().copied().filter(|i| !taken.contains(i)).collect();
                    for right in operand_choices(children, &rest, rw) {
                        out.push(RewriteStep { rule, position: pos.clone(), left: left.clone(), right });
                    }
                }
            }
        }
    }
    out
}

/// Every applicable step, one per distinct (rule, position, result).
pub fn applicable_steps(t: &Term, rules: &[RuleId]) -> Vec<RewriteStep> {
    successors(t, rules).into_iter().map(|(s, _)| s).collect()
}

/// Applicable steps paired with their results, without duplicates.
pub fn successors(t: &Term, rules: &[RuleId]) -> Vec<(RewriteStep, Term)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in candidate_steps(t, rules) {
        let next = apply_step(t, &s).expect("enumerated steps are valid");
        if seen.insert((s.rule, s.position.clone(), next.clone())) {
            out.push((s, next));
        }
    }
    out
}

/// Relation matrix indexed by the rank of each id among `ids`.
fn matrix(t: &Term, ids: &[Id]) -> Vec<u64> {
    let r = to_relation(t);
    let rank: Vec<usize> = r.points.iter().map(|p| ids.binary_search(&p.id).unwrap()).collect();
    let mut m = vec![0u64; ids.len()];
    for i in 0..r.len() {
        for j in crate::relation::bits(r.row(i)) {
            m[rank[i]] |= 1 << rank[j];
        }
    }
    m
}

fn sorted_ids(t: &Term) -> Vec<Id> {
    let mut ids = t.atom_ids();
    ids.sort_unstable();
    ids
}

fn same_atoms(a: &Term, b: &Term) -> bool {
    let mut x: Vec<&Atom> = a.atoms();
    let mut y: Vec<&Atom> = b.atoms();
    x.sort();
    y.sort();
    x == y
}

/// Breadth-first search from `start` to `target` with the given rules,
/// visiting only terms whose relation contains the target relation.
pub fn search(start: &Term, target: &Term, rules: &[RuleId]) -> Option<Derivation> {
    let ids = sorted_ids(start);
    let goal = matrix(target, &ids);
    let covers = |t: &Term| matrix(t, &ids).iter().zip(&goal).all(|(c, g)| g & !c == 0);
    if !covers(start) {
        return None;
    }
    let mut parent: HashMap<Term, Option<(Term, RewriteStep)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        if &t == target {
            let mut steps = Vec::new();
            let mut cur = t.clone();
            while let Some(Some((prev, step))) = parent.get(&cur) {
                steps.push(step.clone());
                cur = prev.clone();
            }
            steps.reverse();
            return Some(Derivation { start: start.clone(), steps, end: t });
        }
        for (s, next) in successors(&t, rules) {
            if parent.contains_key(&next) || !covers(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((t.clone(), s)));
            queue.push_back(next);
        }
    }
    None
}

/// A derivation `big ⇝* small` using all rules, when the relation of
/// `small` is contained in that of `big`.
pub fn includes(big: &Term, small: &Term) -> Result<Option<Derivation>, RewriteError> {
    let (big, small) = (big.unfold_all(), small.unfold_all());
    if !same_atoms(&big, &small) {
        return Err(RewriteError::DomainMismatch);
    }
    Ok(search(&big, &small, rules::ALL))
}

/// The tensor of the par-pairs `a_i | a_i^`, with ids `2i` and `2i + 1`.
pub fn ax_n(names: &[&str]) -> Term {
    assert!(!names.is_empty(), "ax_n needs at least one atom");
    let pairs = names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let id = 2 * i as Id;
            Term::node(Op::Par, vec![Term::atom(*n, Polarity::Pos, id), Term::atom(*n, Polarity::Neg, id + 1)])
        })
        .collect();
    Term::node(Op::Tensor, pairs)
}

/// The axiom term over the given pairs of dual occurrences.
pub fn ax_of_pairs(pairs: &[(Atom, Atom)]) -> Term {
    let blocks = pairs
        .iter()
        .map(|(p, n)| {
            Term::node(Op::Par, vec![Term::Leaf(p.clone().into()), Term::Leaf(n.clone().into())])
        })
        .collect();
    Term::node(Op::Tensor, blocks)
}

/// Every perfect matching of the atoms of `t` into dual pairs
/// `(positive, negative)`, in a deterministic order.
pub fn balanced_pairings(t: &Term) -> Result<Vec<Vec<(Atom, Atom)>>, RewriteError> {
    let mut pos: Vec<Atom> = Vec::new();
    let mut neg: Vec<Atom> = Vec::new();
    for a in t.atoms() {
        match a.polarity {
            Polarity::Pos => pos.push(a.clone()),
            Polarity::Neg => neg.push(a.clone()),
        }
    }
    pos.sort_by_key(|a| a.id);
    neg.sort_by_key(|a| a.id);
    let mut names_p: Vec<&str> = pos.iter().map(|a| a.name.as_str()).collect();
    let mut names_n: Vec<&str> = neg.iter().map(|a| a.name.as_str()).collect();
    names_p.sort_unstable();
    names_n.sort_unstable();
    if names_p != names_n {
        return Err(RewriteError::NotBalanced);
    }
    let mut out = Vec::new();
    let mut used = vec![false; neg.len()];
    let mut acc = Vec::new();
    pairings(&pos, &neg, 0, &mut used, &mut acc, &mut out);
    Ok(out)
}

fn pairings(
    pos: &[Atom],
    neg: &[Atom],
    i: usize,
    used: &mut [bool],
    acc: &mut Vec<(Atom, Atom)>,
    out: &mut Vec<Vec<(Atom, Atom)>>,
) {
    if i == pos.len() {
        out.push(acc.clone());
        return;
    }
    for j in 0..neg.len() {
        if !used[j] && neg[j].name == pos[i].name {
            used[j] = true;
            acc.push((pos[i].clone(), neg[j].clone()));
            pairings(pos, neg, i + 1, used, acc, out);
            acc.pop();
            used[j] = false;
        }
    }
}

fn derive_with(target: &Term, rules: &[RuleId]) -> Result<Option<Derivation>, RewriteError> {
    let target = target.unfold_all();
    for pairs in balanced_pairings(&target)? {
        if let Some(d) = search(&ax_of_pairs(&pairs), &target, rules) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// A derivation of `target` from the axiom term in gMLL (`ts_pa3` only),
/// or gMLL with mix (`ts_pa3` and `ts_pa2`).
pub fn derive_gmll(target: &Term, mix: bool) -> Result<Option<Derivation>, RewriteError> {
    derive_with(target, if mix { rules::GMLL_MIX } else { rules::GMLL })
}

/// A derivation of `target` from the axiom term with every rule except
/// `ts_pa4`.
pub fn derive_dicograph(target: &Term) -> Result<Option<Derivation>, RewriteError> {
    derive_with(target, rules::DICOGRAPH)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn ax_n_shapes() {
        assert_eq!(ax_n(&["a"]), t("a#0 | a^#1"));
        assert_eq!(ax_n(&["a", "b"]), t("(a#0 | a^#1) * (b#2 | b^#3)"));
        let r = to_relation(&ax_n(&["a", "b", "c"]));
        assert!(r.arcs().is_empty());
        for i in 0..3 {
            assert!(!r.edges().contains(&(2 * i, 2 * i + 1)));
        }
    }

    #[test]
    fn no_redex_in_par() {
        assert!(applicable_steps(&t("a | b"), rules::ALL).is_empty());
    }

    #[test]
    fn ts_pa2_on_ax2() {
        let ax = ax_n(&["a", "b"]);
        let steps = successors(&ax, &[TsPa2]);
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].1, t("a#0 | a^#1 | b#2 | b^#3"));
        assert!(steps[0].0.position.is_empty());
    }

    #[test]
    fn ts_bef2_orients() {
        let s = RewriteStep { rule: TsBef2, position: vec![], left: Operand::Var(vec![1]), right: Operand::Var(vec![0]) };
        assert_eq!(apply_step(&t("a#0 * b#1"), &s).unwrap(), t("a#0 < b#1"));
    }

    #[test]
    fn bef_pa4_example() {
        let src = t("(a#0 | b#1) < (c#2 | d#3)");
        let results: Vec<Term> = successors(&src, &[BefPa4]).into_iter().map(|(_, r)| r).collect();
        assert!(results.contains(&t("(a#0 < c#2) | (b#1 < d#3)")));
    }

    #[test]
    fn invalid_steps_rejected() {
        let s = RewriteStep { rule: BefPa2, position: vec![], left: Operand::Var(vec![0]), right: Operand::Var(vec![1]) };
        assert!(apply_step(&t("a * b"), &s).is_err());
        let s = RewriteStep { rule: BefPa2, position: vec![], left: Operand::Var(vec![0]), right: Operand::Var(vec![2]) };
        assert!(apply_step(&t("a < b < c"), &s).is_err());
    }

    #[test]
    fn includes_examples() {
        let a = t("a#0 * b#1");
        assert_eq!(includes(&a, &a).unwrap().unwrap().steps.len(), 0);
        let d = includes(&a, &t("a#0 < b#1")).unwrap().unwrap();
        assert_eq!(d.steps.len(), 1);
        assert_eq!(d.steps[0].rule, TsBef2);
        assert!(includes(&t("a#0 < b#1"), &a).unwrap().is_none());
        let d = includes(&t("a#0 < (b#1 * c#2)"), &t("a#0 | b#1 | c#2")).unwrap().unwrap();
        assert_eq!(d.terms().unwrap().last().unwrap(), &t("a#0 | b#1 | c#2"));
        assert_eq!(includes(&a, &t("a#0 * c#1")), Err(RewriteError::DomainMismatch));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(derive_gmll(&t("a | a^"), false).unwrap().unwrap().steps.len(), 0);
        assert!(derive_gmll(&t("a^ | (a * b) | b^"), false).unwrap().is_some());
        assert!(derive_gmll(&t("(a * b) | (a^ * b^)"), true).unwrap().is_none());
        let d = derive_dicograph(&t("(a < b) | (a^ < b^)")).unwrap().unwrap();
        assert_eq!(d.steps.iter().map(|s| s.rule).collect::<Vec<_>>(), vec![TsBef2, BefPa4]);
        assert!(derive_dicograph(&t("(a * b) | (a^ < b^)")).unwrap().is_none());
        assert_eq!(derive_gmll(&t("a | b^"), false), Err(RewriteError::NotBalanced));
    }

    #[test]
    fn log_format() {
        let d = includes(&t("a#0 * b#1"), &t("a#0 < b#1")).unwrap().unwrap();
        assert_eq!(d.log().unwrap(), "ts_bef2 @ root : a#0 * b#1 => a#0 < b#1\n");
    }

    #[test]
    fn rule_names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.name().parse::<RuleId>().unwrap(), r);
        }
        assert!(!TsPa4.is_sound());
    }
}
