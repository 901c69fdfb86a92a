//! Sequent proofs over structured sequents.
//!
//! Two calculi share one tree type. In the series-parallel calculus the
//! structure of a sequent never contains `*`; tensors only appear inside
//! formula leaves. In the dicograph calculus sequents are dicographs and
//! the tensor rule composes whole dicographs.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_term;
use crate::proofnet::ProofStructure;
use crate::relation::to_relation;
use crate::rewrite::{rules, search, successors};
use crate::term::{Atom, EquivKind, Formula, Id, Op, Polarity, Position, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Axiom,
    Dimix,
    Entropy,
    TensorOrCut,
    ParIntro,
    BefIntro,
    TensorIntro,
}

impl Rule {
    pub const ALL: [Rule; 7] =
        [Rule::Axiom, Rule::Dimix, Rule::Entropy, Rule::TensorOrCut, Rule::ParIntro, Rule::BefIntro, Rule::TensorIntro];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Axiom => "axiom",
            Rule::Dimix => "dimix",
            Rule::Entropy => "entropy",
            Rule::TensorOrCut => "tensor_or_cut",
            Rule::ParIntro => "par_intro",
            Rule::BefIntro => "bef_intro",
            Rule::TensorIntro => "tensor_intro",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Rule::Axiom => 0,
            Rule::Dimix | Rule::TensorOrCut => 2,
            _ => 1,
        }
    }

    fn fold_kind(self) -> Option<EquivKind> {
        match self {
            Rule::ParIntro => Some(EquivKind::FreePar),
            Rule::BefIntro => Some(EquivKind::ArcBefore),
            Rule::TensorIntro => Some(EquivKind::EdgeTensor),
            _ => None,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Rule {
    type Err = SequentError;

    fn from_str(s: &str) -> Result<Rule, SequentError> {
        Rule::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| SequentError::Format(format!("unknown rule '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Calculus {
    SpPomset,
    Dicograph,
}

/// Active parts of a rule: the two tensor premises' active dicographs,
/// or the two formulas folded by an introduction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Params {
    pub left: Option<Term>,
    pub right: Option<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub rule: Rule,
    pub conclusion: Term,
    pub params: Params,
    pub premises: Vec<ProofTree>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequentError {
    #[error("rule {rule} at {path:?} rejected: {reason}")]
    RuleViolation { path: Position, rule: Rule, reason: String },
    #[error("proof does not check: {0}")]
    Unchecked(Box<SequentError>),
    #[error("malformed proof file: {0}")]
    Format(String),
}

impl ProofTree {
    pub fn axiom(pos: Atom, neg: Atom) -> ProofTree {
        ProofTree::new(Rule::Axiom, Term::node(Op::Par, vec![Term::Leaf(pos.into()), Term::Leaf(neg.into())]), Params::default(), vec![])
    }

    pub fn new(rule: Rule, conclusion: Term, params: Params, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree { rule, conclusion, params, premises }
    }

    pub fn dimix(l: ProofTree, r: ProofTree) -> ProofTree {
        let c = Term::node(Op::Before, vec![l.conclusion.clone(), r.conclusion.clone()]);
        ProofTree::new(Rule::Dimix, c, Params::default(), vec![l, r])
    }

    pub fn entropy(p: ProofTree, conclusion: Term) -> ProofTree {
        ProofTree::new(Rule::Entropy, conclusion, Params::default(), vec![p])
    }

    /// Tensor rule with active parts `a` (in `l`) and `b` (in `r`). In the
    /// series-parallel calculus both must be formula leaves.
    pub fn tensor(calculus: Calculus, l: ProofTree, a: Term, r: ProofTree, b: Term) -> Option<ProofTree> {
        let gamma = split_par(&l.conclusion, &a)?;
        let delta = split_par(&r.conclusion, &b)?;
        let mid = tensor_of(calculus, &a, &b)?;
        let mut c = gamma;
        c.push(mid);
        c.extend(delta);
        let params = Params { left: Some(a), right: Some(b) };
        Some(ProofTree::new(Rule::TensorOrCut, Term::node(Op::Par, c), params, vec![l, r]))
    }

    /// Introduction of the connective of `kind` on two equivalent formulas.
    pub fn intro(p: ProofTree, a: &Formula, b: &Formula, kind: EquivKind) -> Option<ProofTree> {
        let c = p.conclusion.fold(a, b, kind).ok()?;
        let rule = match kind {
            EquivKind::FreePar => Rule::ParIntro,
            EquivKind::ArcBefore => Rule::BefIntro,
            EquivKind::EdgeTensor => Rule::TensorIntro,
        };
        let params = Params { left: Some(Term::Leaf(a.clone())), right: Some(Term::Leaf(b.clone())) };
        Some(ProofTree::new(rule, c, params, vec![p]))
    }

    /// Number of rule instances.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    pub fn count(&self, rule: Rule) -> usize {
        (self.rule == rule) as usize + self.premises.iter().map(|p| p.count(rule)).sum::<usize>()
    }

    pub fn axiom_pairs(&self) -> Vec<(Id, Id)> {
        let mut out = Vec::new();
        self.collect_axioms(&mut out);
        out
    }

    fn collect_axioms(&self, out: &mut Vec<(Id, Id)>) {
        if self.rule == Rule::Axiom {
            let ids = self.conclusion.atom_ids();
            if ids.len() == 2 {
                out.push((ids[0].min(ids[1]), ids[0].max(ids[1])));
            }
        }
        self.premises.iter().for_each(|p| p.collect_axioms(out));
    }

    pub fn node_at(&self, path: &[usize]) -> Option<&ProofTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get(i)?.node_at(rest),
        }
    }

    fn node_at_mut(&mut self, path: &[usize]) -> Option<&mut ProofTree> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get_mut(i)?.node_at_mut(rest),
        }
    }

    fn paths(&self) -> Vec<Position> {
        let mut out = vec![Vec::new()];
        for (i, p) in self.premises.iter().enumerate() {
            for mut q in p.paths() {
                q.insert(0, i);
                out.push(q);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("proof serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("proof serializes")
    }

    fn to_file(&self) -> ProofFile {
        ProofFile {
            rule: self.rule.name().to_string(),
            conclusion: self.conclusion.to_string(),
            params: ParamsFile {
                left: self.params.left.as_ref().map(Term::to_string),
                right: self.params.right.as_ref().map(Term::to_string),
            },
            premises: self.premises.iter().map(ProofTree::to_file).collect(),
        }
    }

    pub fn from_json(src: &str) -> Result<ProofTree, SequentError> {
        let file: ProofFile = serde_json::from_str(src).map_err(|e| SequentError::Format(e.to_string()))?;
        from_file(&file)
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ProofFile {
    rule: String,
    conclusion: String,
    #[serde(default = "no_params")]
    params: ParamsFile,
    #[serde(default)]
    premises: Vec<ProofFile>,
}

fn no_params() -> ParamsFile {
    ParamsFile { left: None, right: None }
}

fn from_file(f: &ProofFile) -> Result<ProofTree, SequentError> {
    let term = |s: &str| parse_term(s).map_err(|e| SequentError::Format(e.to_string()));
    Ok(ProofTree {
        rule: f.rule.parse()?,
        conclusion: term(&f.conclusion)?,
        params: Params {
            left: f.params.left.as_deref().map(term).transpose()?,
            right: f.params.right.as_deref().map(term).transpose()?,
        },
        premises: f.premises.iter().map(from_file).collect::<Result<_, _>>()?,
    })
}

/// Components of `t` under its top-level par.
fn par_parts(t: &Term) -> Vec<Term> {
    match t {
        Term::Node(Op::Par, c) => c.clone(),
        other => vec![other.clone()],
    }
}

/// `Γ` such that `t = a | Γ`, as a list of par components (possibly empty).
pub fn split_par(t: &Term, a: &Term) -> Option<Vec<Term>> {
    let mut rest = par_parts(t);
    for part in par_parts(a) {
        let i = rest.iter().position(|x| *x == part)?;
        rest.remove(i);
    }
    Some(rest)
}

fn tensor_of(calculus: Calculus, a: &Term, b: &Term) -> Option<Term> {
    match calculus {
        Calculus::Dicograph => Some(Term::node(Op::Tensor, vec![a.clone(), b.clone()])),
        Calculus::SpPomset => {
            let (Term::Leaf(x), Term::Leaf(y)) = (a, b) else { return None };
            Some(Term::Leaf(Formula::conn(Op::Tensor, x.clone(), y.clone())))
        }
    }
}

/// Blocks left untouched by entropy: leaves in the series-parallel
/// calculus, maximal subterms not rooted in `|` or `<` in the dicograph
/// calculus.
fn blocks(t: &Term, calculus: Calculus, out: &mut Vec<Term>) {
    match t {
        Term::Node(Op::Par | Op::Before, c) => c.iter().for_each(|x| blocks(x, calculus, out)),
        Term::Node(Op::Tensor, c) if calculus == Calculus::SpPomset => c.iter().for_each(|x| blocks(x, calculus, out)),
        other => out.push(other.clone()),
    }
}

fn skeleton(t: &Term, calculus: Calculus, index: &[Term]) -> Term {
    if let Some(i) = index.iter().position(|b| b == t) {
        return Term::atom("_", Polarity::Pos, i as Id);
    }
    match t {
        Term::Node(op, c) => Term::node(*op, c.iter().map(|x| skeleton(x, calculus, index)).collect()),
        Term::Leaf(_) => unreachable!("every leaf lies in a block"),
    }
}

/// Entropy side condition: same blocks, and the order over blocks in
/// `weaker` is reachable from that of `stronger` with the series/parallel
/// inclusion rules. Returns the verdicts of the rewriting search and of
/// the relation inclusion test.
pub fn entropy_holds(stronger: &Term, weaker: &Term, calculus: Calculus) -> Option<(bool, bool)> {
    let (mut b1, mut b2) = (Vec::new(), Vec::new());
    blocks(stronger, calculus, &mut b1);
    blocks(weaker, calculus, &mut b2);
    b1.sort();
    b2.sort();
    if b1 != b2 {
        return None;
    }
    let (s, w) = (skeleton(stronger, calculus, &b1), skeleton(weaker, calculus, &b1));
    let by_rewriting = search(&s, &w, rules::BEF_PA).is_some();
    let by_relation = to_relation(&w).is_subset_of(&to_relation(&s));
    Some((by_rewriting, by_relation))
}

fn violation(path: &[usize], rule: Rule, reason: impl Into<String>) -> SequentError {
    SequentError::RuleViolation { path: path.to_vec(), rule, reason: reason.into() }
}

pub fn check(p: &ProofTree, calculus: Calculus) -> Result<(), SequentError> {
    p.conclusion.check_ids().map_err(|e| violation(&[], p.rule, e.to_string()))?;
    check_node(p, calculus, &mut Vec::new())
}

pub fn check_sp_pomset(p: &ProofTree) -> Result<(), SequentError> {
    check(p, Calculus::SpPomset)
}

pub fn check_dicograph(p: &ProofTree) -> Result<(), SequentError> {
    check(p, Calculus::Dicograph)
}

fn check_node(p: &ProofTree, calculus: Calculus, path: &mut Position) -> Result<(), SequentError> {
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        check_node(q, calculus, path)?;
        path.pop();
    }
    let fail = |reason: &str| Err(violation(path, p.rule, reason));
    if p.premises.len() != p.rule.arity() {
        return fail("wrong number of premises");
    }
    if calculus == Calculus::SpPomset && p.conclusion.has_op(Op::Tensor) {
        return fail("tensor composition in a series-parallel sequent");
    }
    let c = &p.conclusion;
    match p.rule {
        Rule::Axiom => {
            let ok = match c {
                Term::Node(Op::Par, k) if k.len() == 2 => match (k[0].as_leaf().and_then(Formula::as_atom), k[1].as_leaf().and_then(Formula::as_atom)) {
                    (Some(x), Some(y)) => x.is_dual_of(y),
                    _ => false,
                },
                _ => false,
            };
            if !ok {
                return fail("axiom must be a | a^");
            }
        }
        Rule::Dimix => {
            let want = Term::node(Op::Before, vec![p.premises[0].conclusion.clone(), p.premises[1].conclusion.clone()]);
            if *c != want {
                return fail("conclusion is not the series composition of the premises");
            }
        }
        Rule::Entropy => match entropy_holds(&p.premises[0].conclusion, c, calculus) {
            None => return fail("blocks differ"),
            Some((a, b)) if a != b => return fail("rewriting and inclusion disagree"),
            Some((false, _)) => return fail("order is not a sub-order of the premise"),
            Some(_) => {}
        },
        Rule::TensorOrCut => {
            let (Some(a), Some(b)) = (&p.params.left, &p.params.right) else {
                return fail("tensor needs both active parts");
            };
            let Some(gamma) = split_par(&p.premises[0].conclusion, a) else {
                return fail("left active part is not a par component");
            };
            let Some(delta) = split_par(&p.premises[1].conclusion, b) else {
                return fail("right active part is not a par component");
            };
            let Some(mid) = tensor_of(calculus, a, b) else {
                return fail("active parts must be formulas");
            };
            let mut parts = gamma;
            parts.push(mid);
            parts.extend(delta);
            if *c != Term::node(Op::Par, parts) {
                return fail("conclusion does not match the tensor of the premises");
            }
        }
        Rule::ParIntro | Rule::BefIntro | Rule::TensorIntro => {
            let kind = p.rule.fold_kind().unwrap();
            if calculus == Calculus::SpPomset && kind == EquivKind::EdgeTensor {
                return fail("no tensor introduction in the series-parallel calculus");
            }
            let (Some(Term::Leaf(a)), Some(Term::Leaf(b))) = (&p.params.left, &p.params.right) else {
                return fail("introduction needs two formulas");
            };
            match p.premises[0].conclusion.fold(a, b, kind) {
                Ok(t) if t == *c => {}
                Ok(_) => return fail("conclusion does not match the folded premise"),
                Err(_) => return fail("formulas are not equivalent with this kind"),
            }
        }
    }
    Ok(())
}

/// The net of a checked proof: axioms traced by occurrence id, conclusion
/// fully unfolded.
pub fn proof_to_net(p: &ProofTree, calculus: Calculus) -> Result<ProofStructure, SequentError> {
    check(p, calculus).map_err(|e| SequentError::Unchecked(Box::new(e)))?;
    ProofStructure::new(p.axiom_pairs(), p.conclusion.unfold_all())
        .map_err(|e| SequentError::Unchecked(Box::new(SequentError::Format(e.to_string()))))
}

// ---------------------------------------------------------------------------
// Random proofs

struct Fresh(Id);

impl Fresh {
    fn next(&mut self) -> Id {
        self.0 += 1;
        self.0 - 1
    }

    fn axiom(&mut self, name: &str) -> ProofTree {
        let (p, n) = (self.next(), self.next());
        ProofTree::axiom(Atom::pos(name, p), Atom::neg(name, n))
    }
}

/// Proof of `A^ | A'` where `A'` is a fresh copy of `A` and `A^` a fresh
/// copy of its dual.
fn eta(f: &Formula, fresh: &mut Fresh, calculus: Calculus) -> (ProofTree, Formula, Formula) {
    match f {
        Formula::Atom(a) => {
            let (p, n) = (fresh.next(), fresh.next());
            let copy = Atom::new(a.name.clone(), a.polarity, p);
            let dual = Atom::new(a.name.clone(), a.polarity.flip(), n);
            let (pos, neg) = if a.polarity == Polarity::Pos { (copy.clone(), dual.clone()) } else { (dual.clone(), copy.clone()) };
            (ProofTree::axiom(pos, neg), Formula::Atom(dual), Formula::Atom(copy))
        }
        Formula::Conn(op, l, r) => {
            let (pl, ld, lc) = eta(l, fresh, calculus);
            let (pr, rd, rc) = eta(r, fresh, calculus);
            let leaf = |x: &Formula| Term::Leaf(x.clone());
            let conn = |o: Op, a: &Formula, b: &Formula| Formula::conn(o, a.clone(), b.clone());
            match op {
                Op::Par => {
                    // |- lc | (ld * rd) | rc, then fold lc | rc
                    let t = ProofTree::tensor(calculus, pl, leaf(&ld), pr, leaf(&rd)).unwrap();
                    let t = close_tensor(t, &ld, &rd, calculus);
                    let t = ProofTree::intro(t, &lc, &rc, EquivKind::FreePar).unwrap();
                    (t, conn(Op::Tensor, &ld, &rd), conn(Op::Par, &lc, &rc))
                }
                Op::Tensor => {
                    let t = ProofTree::tensor(calculus, pl, leaf(&lc), pr, leaf(&rc)).unwrap();
                    let t = close_tensor(t, &lc, &rc, calculus);
                    let t = ProofTree::intro(t, &ld, &rd, EquivKind::FreePar).unwrap();
                    (t, conn(Op::Par, &ld, &rd), conn(Op::Tensor, &lc, &rc))
                }
                Op::Before => {
                    let d = ProofTree::dimix(pl, pr);
                    let weaker = Term::node(
                        Op::Par,
                        vec![
                            Term::node(Op::Before, vec![leaf(&ld), leaf(&rd)]),
                            Term::node(Op::Before, vec![leaf(&lc), leaf(&rc)]),
                        ],
                    );
                    let e = ProofTree::entropy(d, weaker);
                    let e = ProofTree::intro(e, &ld, &rd, EquivKind::ArcBefore).unwrap();
                    let e = ProofTree::intro(e, &lc, &rc, EquivKind::ArcBefore).unwrap();
                    (e, conn(Op::Before, &ld, &rd), conn(Op::Before, &lc, &rc))
                }
            }
        }
    }
}

/// In the dicograph calculus a tensor of two formulas is still a
/// composition of two leaves; fold it into one.
fn close_tensor(p: ProofTree, a: &Formula, b: &Formula, calculus: Calculus) -> ProofTree {
    match calculus {
        Calculus::SpPomset => p,
        Calculus::Dicograph => ProofTree::intro(p, a, b, EquivKind::EdgeTensor).unwrap(),
    }
}

fn unary_step<R: Rng>(rng: &mut R, p: ProofTree, calculus: Calculus) -> ProofTree {
    let c = p.conclusion.clone();
    if rng.gen_bool(0.5) {
        // entropy: one series/parallel weakening outside any tensor
        let steps: Vec<Term> = successors(&c, rules::BEF_PA)
            .into_iter()
            .filter(|(s, _)| (0..=s.position.len()).all(|k| c.at(&s.position[..k]).and_then(Term::op) != Some(Op::Tensor)))
            .map(|(_, t)| t)
            .collect();
        if let Some(t) = steps.choose(rng) {
            return ProofTree::entropy(p, t.clone());
        }
    }
    let pairs: Vec<_> = c
        .equivalent_pairs()
        .into_iter()
        .filter(|(_, _, k)| calculus == Calculus::Dicograph || *k != EquivKind::EdgeTensor)
        .collect();
    match pairs.choose(rng) {
        Some((a, b, k)) => ProofTree::intro(p, a, b, *k).unwrap(),
        None => p,
    }
}

fn binary_step<R: Rng>(rng: &mut R, l: ProofTree, r: ProofTree, calculus: Calculus) -> ProofTree {
    if rng.gen_bool(0.5) {
        let pick = |t: &Term, rng: &mut R| -> Option<Term> {
            let parts: Vec<Term> = par_parts(t)
                .into_iter()
                .filter(|x| calculus == Calculus::Dicograph || x.as_leaf().is_some())
                .collect();
            parts.choose(rng).cloned()
        };
        if let (Some(a), Some(b)) = (pick(&l.conclusion, rng), pick(&r.conclusion, rng)) {
            return ProofTree::tensor(calculus, l, a, r, b).expect("active parts chosen from the premises");
        }
    }
    ProofTree::dimix(l, r)
}

/// A random valid proof with at most `max_axioms` axioms before cuts; a
/// cut against an expansion proof is added with probability `cut_rate`.
pub fn random_proof<R: Rng>(rng: &mut R, calculus: Calculus, max_axioms: usize, cut_rate: f64) -> ProofTree {
    const NAMES: [&str; 3] = ["a", "b", "c"];
    let mut fresh = Fresh(0);
    let k = rng.gen_range(1..=max_axioms.max(1));
    let mut pool: Vec<ProofTree> = (0..k).map(|_| fresh.axiom(NAMES.choose(rng).unwrap())).collect();
    while pool.len() > 1 || rng.gen_bool(0.4) {
        if pool.len() > 1 && rng.gen_bool(0.6) {
            let i = rng.gen_range(0..pool.len());
            let l = pool.swap_remove(i);
            let j = rng.gen_range(0..pool.len());
            let r = pool.swap_remove(j);
            pool.push(binary_step(rng, l, r, calculus));
        } else {
            let i = rng.gen_range(0..pool.len());
            let p = pool.swap_remove(i);
            pool.push(unary_step(rng, p, calculus));
        }
    }
    let mut p = pool.pop().unwrap();
    if rng.gen_bool(cut_rate) {
        let parts: Vec<Term> = par_parts(&p.conclusion).into_iter().filter(|x| x.as_leaf().is_some()).collect();
        if let Some(Term::Leaf(f)) = parts.choose(rng) {
            let (q, dual, _) = eta(f, &mut fresh, calculus);
            p = ProofTree::tensor(calculus, p, Term::Leaf(f.clone()), q, Term::Leaf(dual)).expect("cut formula is a par component");
        }
    }
    p
}

/// Corrupts one node of a proof.
pub fn mutate<R: Rng>(rng: &mut R, p: &ProofTree) -> ProofTree {
    let mut out = p.clone();
    let paths = out.paths();
    let path = paths.choose(rng).unwrap().clone();
    let node = out.node_at_mut(&path).unwrap();
    match rng.gen_range(0..4) {
        0 => {
            let others: Vec<Rule> = Rule::ALL.into_iter().filter(|r| *r != node.rule).collect();
            node.rule = *others.choose(rng).unwrap();
        }
        1 => {
            let ids = node.conclusion.atom_ids();
            let target = *ids.choose(rng).unwrap();
            node.conclusion = node.conclusion.map_atoms(&mut |a| {
                if a.id == target {
                    a.dual()
                } else {
                    a.clone()
                }
            });
        }
        2 if node.params.left.is_some() => {
            std::mem::swap(&mut node.params.left, &mut node.params.right);
            if node.params.left == node.params.right {
                node.rule = Rule::Axiom;
            }
        }
        _ => {
            // reverse the series order of the first series node, or
            // serialize a parallel one
            let positions = node.conclusion.node_positions();
            let target = positions.iter().find(|q| node.conclusion.at(q).and_then(Term::op) != Some(Op::Tensor));
            match target {
                Some(q) => {
                    let sub = node.conclusion.at(q).unwrap().clone();
                    let new = match sub {
                        Term::Node(Op::Before, mut c) => {
                            c.reverse();
                            Term::node(Op::Before, c)
                        }
                        Term::Node(_, c) => Term::node(Op::Before, c),
                        leaf => leaf,
                    };
                    node.conclusion = node.conclusion.replace_at(q, new);
                }
                None => node.rule = if node.rule == Rule::Dimix { Rule::Entropy } else { Rule::Dimix },
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn before_pairs() -> ProofTree {
        let d = ProofTree::dimix(ProofTree::axiom(Atom::pos("a", 0), Atom::neg("a", 1)), ProofTree::axiom(Atom::pos("b", 2), Atom::neg("b", 3)));
        let e = ProofTree::entropy(d, t("(a#0 < b#2) | (a^#1 < b^#3)"));
        let f = e.conclusion.leaves().into_iter().cloned().collect::<Vec<_>>();
        let (a, na, b, nb) = (&f[0], &f[2], &f[1], &f[3]);
        let e = ProofTree::intro(e, a, b, EquivKind::ArcBefore).unwrap();
        ProofTree::intro(e, na, nb, EquivKind::ArcBefore).unwrap()
    }

    #[test]
    fn axiom_checks() {
        let p = ProofTree::axiom(Atom::pos("a", 0), Atom::neg("a", 1));
        assert!(check_sp_pomset(&p).is_ok());
        let bad = ProofTree::new(Rule::Axiom, t("a#0 | b^#1"), Params::default(), vec![]);
        assert!(check_sp_pomset(&bad).is_err());
    }

    #[test]
    fn dimix_entropy_before_intros() {
        let p = before_pairs();
        assert_eq!(p.conclusion, t("[a#0 < b#2] | [a^#1 < b^#3]"));
        check_sp_pomset(&p).unwrap();
        check_dicograph(&p).unwrap();
        let net = proof_to_net(&p, Calculus::SpPomset).unwrap();
        assert_eq!(net, ProofStructure::parse(&[(0, 1), (2, 3)], "(a#0 < b#2) | (a^#1 < b^#3)").unwrap());
        assert!(net.is_correct());
    }

    #[test]
    fn par_intro_on_before_rejected() {
        let d = ProofTree::new(Rule::Axiom, t("a#0 < a^#1"), Params::default(), vec![]);
        let leaves: Vec<Formula> = d.conclusion.leaves().into_iter().cloned().collect();
        let params = Params { left: Some(Term::Leaf(leaves[0].clone())), right: Some(Term::Leaf(leaves[1].clone())) };
        let p = ProofTree::new(Rule::ParIntro, t("[a#0 | a^#1]"), params, vec![d]);
        match check_sp_pomset(&p) {
            Err(SequentError::RuleViolation { .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tensor_intro_in_dicograph_calculus() {
        let ax = |i: Id, n: &str| ProofTree::axiom(Atom::pos(n, i), Atom::neg(n, i + 1));
        let p = ProofTree::tensor(Calculus::Dicograph, ax(0, "a"), t("a#0"), ax(2, "b"), t("b#2")).unwrap();
        assert_eq!(p.conclusion, t("a^#1 | (a#0 * b#2) | b^#3"));
        check_dicograph(&p).unwrap();
        assert!(check_sp_pomset(&p).is_err());
        let leaves: Vec<Formula> = p.conclusion.leaves().into_iter().cloned().collect();
        let (a, b) = (leaves.iter().find(|f| f.to_string() == "a#0").unwrap(), leaves.iter().find(|f| f.to_string() == "b#2").unwrap());
        let q = ProofTree::intro(p, a, b, EquivKind::EdgeTensor).unwrap();
        assert_eq!(q.conclusion, t("a^#1 | [a#0 * b#2] | b^#3"));
        check_dicograph(&q).unwrap();
    }

    #[test]
    fn entropy_cannot_drop_block_edges() {
        let ax = |i: Id, n: &str| ProofTree::axiom(Atom::pos(n, i), Atom::neg(n, i + 1));
        let p = ProofTree::tensor(Calculus::Dicograph, ax(0, "a"), t("a#0"), ax(2, "b"), t("b#2")).unwrap();
        let weakened = ProofTree::entropy(p, t("a^#1 | (a#0 < b#2) | b^#3"));
        assert!(matches!(check_dicograph(&weakened), Err(SequentError::RuleViolation { rule: Rule::Entropy, .. })));
    }

    #[test]
    fn ax3_derivation_checks() {
        let ax = |i: Id, n: &str| ProofTree::axiom(Atom::pos(n, i), Atom::neg(n, i + 1));
        let ab = ProofTree::tensor(Calculus::Dicograph, ax(0, "a"), t("a#0 | a^#1"), ax(2, "b"), t("b#2 | b^#3")).unwrap();
        let abc = ProofTree::tensor(Calculus::Dicograph, ab.clone(), ab.conclusion.clone(), ax(4, "c"), t("c#4 | c^#5")).unwrap();
        check_dicograph(&abc).unwrap();
        assert_eq!(proof_to_net(&abc, Calculus::Dicograph).unwrap(), ProofStructure::ax(&["a", "b", "c"]));
    }

    #[test]
    fn cut_proof_gives_cut_net() {
        let ax = |i: Id| ProofTree::axiom(Atom::pos("a", i), Atom::neg("a", i + 1));
        let p = ProofTree::tensor(Calculus::SpPomset, ax(0), t("a^#1"), ax(2), t("a#2")).unwrap();
        check_sp_pomset(&p).unwrap();
        let net = proof_to_net(&p, Calculus::SpPomset).unwrap();
        assert_eq!(crate::proofnet::cuts(&net).len(), 1);
        let (n, loops) = crate::proofnet::normalize(&net).unwrap();
        assert_eq!(loops, 0);
        assert_eq!(n, ProofStructure::parse(&[(0, 3)], "a#0 | a^#3").unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = before_pairs();
        let back = ProofTree::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(ProofTree::from_json("{\"rule\":\"nope\",\"conclusion\":\"a\"}").is_err());
    }

    #[test]
    fn random_proofs_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for calculus in [Calculus::SpPomset, Calculus::Dicograph] {
            for _ in 0..100 {
                let p = random_proof(&mut rng, calculus, 4, 0.3);
                check(&p, calculus).unwrap_or_else(|e| panic!("{e}\n{}", p.to_json_pretty()));
                assert!(proof_to_net(&p, calculus).unwrap().is_correct());
            }
        }
    }
}
