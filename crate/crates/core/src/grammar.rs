//! Grammars whose lexicon maps words to partial proof nets.
//!
//! An entry has an output atom and a body `a^ | (X1 * Y1) | ...` whose
//! word atom `a^` is linked to an `a` inside some `Xi` (or to the output)
//! by an axiom carrying the word. Unlinked atoms of the `Xi` are
//! hypotheses. Entries combine by plugging an output into a hypothesis,
//! or by cutting an output against one of the entry's cut conclusions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::parse_term;
use crate::proofnet::{NetError, ProofStructure};
use crate::relation::to_relation;
use crate::term::{Atom, Formula, Id, Op, Polarity, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrammarError {
    #[error("malformed entry '{word}': {reason}")]
    MalformedEntry { word: String, reason: String },
    #[error("cannot connect #{0} and #{1}: types differ")]
    TypeMismatch(Id, Id),
    #[error("occurrence #{0} used twice")]
    Reuse(Id),
    #[error("unknown word '{0}'")]
    UnknownWord(String),
    #[error("labels have no unique solution")]
    NoSolution,
    #[error(transparent)]
    Net(#[from] NetError),
    #[error("malformed lexicon: {0}")]
    Format(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexEntry {
    pub word: String,
    pub output: Atom,
    pub body: Term,
    /// Extra conclusions that must be cut.
    pub cuts: Vec<Atom>,
    /// Internal axioms; the word, when present, labels the first
    /// occurrence, which is a word atom of the body.
    pub axioms: Vec<(Id, Id, Option<String>)>,
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    word: String,
    output: String,
    body: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cuts: Vec<String>,
    axioms: Vec<serde_json::Value>,
}

fn atom_of(src: &str) -> Result<Atom, String> {
    let t = parse_term(src).map_err(|e| e.to_string())?;
    t.as_leaf().and_then(Formula::as_atom).cloned().ok_or_else(|| format!("'{src}' is not a single atom"))
}

impl LexEntry {
    fn from_file(f: &EntryFile) -> Result<LexEntry, GrammarError> {
        let bad = |reason: String| GrammarError::MalformedEntry { word: f.word.clone(), reason };
        let mut axioms = Vec::new();
        for a in &f.axioms {
            let arr = a.as_array().ok_or_else(|| bad("axiom is not an array".into()))?;
            let id = |k: usize| arr.get(k).and_then(|v| v.as_u64()).map(|x| x as Id).ok_or_else(|| bad("axiom ids".into()));
            let word = arr.get(2).map(|v| v.as_str().map(String::from).ok_or_else(|| bad("axiom label".into()))).transpose()?;
            axioms.push((id(0)?, id(1)?, word));
        }
        Ok(LexEntry {
            word: f.word.clone(),
            output: atom_of(&f.output).map_err(bad)?,
            body: parse_term(&f.body).map_err(|e| bad(e.to_string()))?,
            cuts: f.cuts.iter().map(|c| atom_of(c)).collect::<Result<_, _>>().map_err(bad)?,
            axioms,
        })
    }

    /// Words labelling the entry's axioms.
    pub fn words(&self) -> Vec<&str> {
        self.axioms.iter().filter_map(|(_, _, w)| w.as_deref()).collect()
    }

    fn atoms(&self) -> Vec<Atom> {
        let mut out: Vec<Atom> = self.body.atoms().into_iter().cloned().collect();
        out.push(self.output.clone());
        out.extend(self.cuts.iter().cloned());
        out
    }
}

pub fn load_lexicon(src: &str) -> Result<Vec<LexEntry>, GrammarError> {
    let files: Vec<EntryFile> = serde_json::from_str(src).map_err(|e| GrammarError::Format(e.to_string()))?;
    let entries: Vec<LexEntry> = files.iter().map(LexEntry::from_file).collect::<Result<_, _>>()?;
    entries.iter().try_for_each(validate_entry)?;
    Ok(entries)
}

/// Lexicon for the two French examples.
pub fn example_lexicon() -> Vec<LexEntry> {
    load_lexicon(include_str!("../data/french.json")).expect("shipped lexicon is valid")
}

fn tensor_free(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Conn(op, l, r) => *op != Op::Tensor && tensor_free(l) && tensor_free(r),
    }
}

pub fn validate_entry(e: &LexEntry) -> Result<(), GrammarError> {
    let fail = |reason: &str| Err(GrammarError::MalformedEntry { word: e.word.clone(), reason: reason.into() });
    let atoms = e.atoms();
    let ids: BTreeSet<Id> = atoms.iter().map(|a| a.id).collect();
    if ids.len() != atoms.len() {
        return fail("occurrence ids repeat");
    }
    let by_id: HashMap<Id, &Atom> = atoms.iter().map(|a| (a.id, a)).collect();
    let mut word_atoms = Vec::new();
    let mut xs = Vec::new();
    for part in par_parts(&e.body) {
        match part.as_leaf() {
            Some(Formula::Atom(a)) => word_atoms.push(a.id),
            Some(Formula::Conn(Op::Tensor, x, _)) => {
                if !tensor_free(x) {
                    return fail("tensor inside an argument part");
                }
                xs.extend(x.atoms().into_iter().map(|a| a.id));
            }
            _ => return fail("body parts must be word atoms or tensors"),
        }
    }
    let labelled: Vec<Id> = e.axioms.iter().filter(|a| a.2.is_some()).map(|a| a.0).collect();
    if labelled.is_empty() {
        return fail("no word axiom");
    }
    if e.cuts.is_empty() && word_atoms.len() != 1 {
        return fail("exactly one word atom expected");
    }
    let mut used = BTreeSet::new();
    for &(x, y, ref w) in &e.axioms {
        let (Some(a), Some(b)) = (by_id.get(&x), by_id.get(&y)) else { return fail("axiom on unknown occurrence") };
        if !a.is_dual_of(b) {
            return fail("axiom links non-dual atoms");
        }
        if !used.insert(x) || !used.insert(y) {
            return fail("occurrence in two axioms");
        }
        if w.is_some() && (!word_atoms.contains(&x) || !(xs.contains(&y) || y == e.output.id)) {
            return fail("word axiom must link the word atom to an argument part or the output");
        }
    }
    if word_atoms.iter().any(|a| !labelled.contains(a)) {
        return fail("word atom without a word");
    }
    if !used.contains(&e.output.id) {
        return fail("output is not linked");
    }
    if e.cuts.iter().any(|c| !used.contains(&c.id)) {
        return fail("cut conclusion is not linked");
    }
    Ok(())
}

fn par_parts(t: &Term) -> Vec<Term> {
    match t {
        Term::Node(Op::Par, c) => c.clone(),
        other => vec![other.clone()],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialNet {
    /// Par components of the conclusion.
    pub conclusions: Vec<Term>,
    pub axioms: Vec<(Id, Id)>,
    /// Word carried by each word atom.
    pub labels: BTreeMap<Id, String>,
    pub outputs: Vec<Atom>,
    pub hypotheses: Vec<Atom>,
    pub cut_points: Vec<Atom>,
}

impl PartialNet {
    /// The entry with every occurrence id shifted by `offset`.
    pub fn instantiate(e: &LexEntry, offset: Id) -> PartialNet {
        let shift = |a: &Atom| Atom::new(a.name.clone(), a.polarity, a.id + offset);
        let body = e.body.map_atoms(&mut |a| shift(a));
        let linked: BTreeSet<Id> = e.axioms.iter().flat_map(|a| [a.0, a.1]).collect();
        let hypotheses = e.body.atoms().into_iter().filter(|a| !linked.contains(&a.id)).map(shift).collect();
        let mut conclusions = par_parts(&body);
        conclusions.push(Term::Leaf(shift(&e.output).into()));
        conclusions.extend(e.cuts.iter().map(|c| Term::Leaf(shift(c).into())));
        PartialNet {
            conclusions,
            axioms: e.axioms.iter().map(|a| (a.0 + offset, a.1 + offset)).collect(),
            labels: e.axioms.iter().filter_map(|a| a.2.clone().map(|w| (a.0 + offset, w))).collect(),
            outputs: vec![shift(&e.output)],
            hypotheses,
            cut_points: e.cuts.iter().map(shift).collect(),
        }
    }

    /// Complete net when nothing is pending and the single output is
    /// named `target`.
    pub fn complete(&self, target: &str) -> Option<ProofStructure> {
        if !self.hypotheses.is_empty() || !self.cut_points.is_empty() || self.outputs.len() != 1 || self.outputs[0].name != target {
            return None;
        }
        ProofStructure::new(self.axioms.clone(), Term::node(Op::Par, self.conclusions.clone())).ok()
    }
}

fn take(list: &mut Vec<Atom>, id: Id) -> Option<Atom> {
    let i = list.iter().position(|a| a.id == id)?;
    Some(list.remove(i))
}

fn is_conclusion_atom(t: &Term, id: Id) -> bool {
    t.as_leaf().and_then(Formula::as_atom).is_some_and(|a| a.id == id)
}

/// Merges nets with disjoint ids, plugs each `(hypothesis, output)` and
/// cuts each pair of dual conclusions.
pub fn combine(nets: Vec<PartialNet>, plugs: &[(Id, Id)], cuts: &[(Id, Id)]) -> Result<PartialNet, GrammarError> {
    let mut net = PartialNet {
        conclusions: vec![],
        axioms: vec![],
        labels: BTreeMap::new(),
        outputs: vec![],
        hypotheses: vec![],
        cut_points: vec![],
    };
    for n in nets {
        net.conclusions.extend(n.conclusions);
        net.axioms.extend(n.axioms);
        net.labels.extend(n.labels);
        net.outputs.extend(n.outputs);
        net.hypotheses.extend(n.hypotheses);
        net.cut_points.extend(n.cut_points);
    }
    for &(h, o) in plugs {
        let hyp = take(&mut net.hypotheses, h).ok_or(GrammarError::Reuse(h))?;
        let out = take(&mut net.outputs, o).ok_or(GrammarError::Reuse(o))?;
        if hyp.name != out.name || hyp.polarity != out.polarity {
            return Err(GrammarError::TypeMismatch(h, o));
        }
        // the output occurrence is replaced by the hypothesis
        for ax in net.axioms.iter_mut() {
            if ax.0 == o {
                ax.0 = h;
            } else if ax.1 == o {
                ax.1 = h;
            }
        }
        net.conclusions.retain(|t| !is_conclusion_atom(t, o));
    }
    for &(x, y) in cuts {
        let mut pick = |id: Id| take(&mut net.outputs, id).or_else(|| take(&mut net.cut_points, id)).ok_or(GrammarError::Reuse(id));
        let (a, b) = (pick(x)?, pick(y)?);
        if !a.is_dual_of(&b) {
            return Err(GrammarError::TypeMismatch(x, y));
        }
        net.conclusions.retain(|t| !is_conclusion_atom(t, x) && !is_conclusion_atom(t, y));
        net.conclusions.push(Term::node(Op::Tensor, vec![Term::Leaf(a.into()), Term::Leaf(b.into())]));
    }
    Ok(net)
}

/// Eliminates cuts between two atoms, keeping formula leaves intact.
pub fn eliminate_atomic_cuts(ps: &ProofStructure) -> Result<ProofStructure, GrammarError> {
    let mut axioms = ps.axioms.clone();
    let mut rest = Vec::new();
    for part in par_parts(&ps.conclusion) {
        let pair = match &part {
            Term::Node(Op::Tensor, c) if c.len() == 2 => c[0].as_leaf().and_then(Formula::as_atom).zip(c[1].as_leaf().and_then(Formula::as_atom)),
            _ => None,
        };
        let Some((x, y)) = pair.filter(|(x, y)| x.is_dual_of(y)) else {
            rest.push(part);
            continue;
        };
        let other = |id: Id, axioms: &[(Id, Id)]| axioms.iter().find_map(|&(p, q)| if p == id { Some(q) } else if q == id { Some(p) } else { None });
        let (p, q) = (other(x.id, &axioms).unwrap(), other(y.id, &axioms).unwrap());
        axioms.retain(|&(a, b)| ![a, b].iter().any(|i| *i == x.id || *i == y.id));
        if p != y.id {
            axioms.push((p, q));
        }
    }
    if rest.is_empty() {
        return Err(NetError::EmptyConclusion.into());
    }
    Ok(ProofStructure::new(axioms, Term::node(Op::Par, rest))?)
}

/// An order over words; `None` is the empty order.
pub type WordOrder = Option<Term>;

fn par_hat(a: &WordOrder, b: &WordOrder) -> WordOrder {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(Term::node(Op::Par, vec![x.clone(), y.clone()])),
    }
}

fn bef_hat(a: &WordOrder, b: &WordOrder) -> WordOrder {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(Term::node(Op::Before, vec![x.clone(), y.clone()])),
    }
}

/// `r` with `l = r |^ s`, if it exists.
fn minus(l: &WordOrder, s: &WordOrder) -> Option<WordOrder> {
    let Some(st) = s else { return Some(l.clone()) };
    let lt = l.as_ref()?;
    let drop: BTreeSet<Id> = st.atom_ids().into_iter().collect();
    let r = lt.restrict(&|a: &Atom| !drop.contains(&a.id));
    (par_hat(&r, s) == *l).then_some(r)
}

enum Node {
    Atom,
    Link(Op, usize, usize),
}

struct Links {
    nodes: Vec<Node>,
    roots: Vec<(usize, Term)>,
    atom_node: HashMap<Id, usize>,
}

impl Links {
    fn new(ps: &ProofStructure) -> Links {
        let mut l = Links { nodes: vec![], roots: vec![], atom_node: HashMap::new() };
        for part in par_parts(&ps.conclusion) {
            let f = part.as_leaf().expect("cut-free grammar nets are pars of formulas").clone();
            let i = l.add(&f);
            l.roots.push((i, part));
        }
        l
    }

    fn add(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::Atom(a) => {
                self.atom_node.insert(a.id, self.nodes.len());
                Node::Atom
            }
            Formula::Conn(op, x, y) => {
                let (i, j) = (self.add(x), self.add(y));
                Node::Link(*op, i, j)
            }
        };
        self.nodes.push(node);
        self.nodes.len() - 1
    }
}

type State = Vec<Option<WordOrder>>;

/// Sets `v` at `i`; false on a clash.
fn assign(st: &mut State, i: usize, v: WordOrder, changed: &mut bool) -> bool {
    match &st[i] {
        Some(old) => *old == v,
        None => {
            st[i] = Some(v);
            *changed = true;
            true
        }
    }
}

/// Candidate values for the unknown side of a tensor link.
fn tensor_candidates(known: &WordOrder, s: &WordOrder) -> Vec<WordOrder> {
    let mut out = vec![par_hat(known, s)];
    if let Some(r) = minus(known, s) {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn propagate(links: &Links, axioms: &[(Id, Id)], st: &mut State) -> Result<Option<(usize, Vec<WordOrder>)>, ()> {
    loop {
        let mut changed = false;
        let mut branch = None;
        for &(x, y) in axioms {
            let (i, j) = (links.atom_node[&x], links.atom_node[&y]);
            match (st[i].clone(), st[j].clone()) {
                (Some(a), _) => {
                    if !assign(st, j, a, &mut changed) {
                        return Err(());
                    }
                }
                (None, Some(b)) => {
                    assign(st, i, b, &mut changed);
                }
                _ => {}
            }
        }
        for (k, n) in links.nodes.iter().enumerate() {
            let Node::Link(op, i, j) = *n else { continue };
            let (l, r, c) = (st[i].clone(), st[j].clone(), st[k].clone());
            match op {
                Op::Par | Op::Before => {
                    if let (Some(l), Some(r)) = (l, r) {
                        let v = if op == Op::Par { par_hat(&l, &r) } else { bef_hat(&l, &r) };
                        if !assign(st, k, v, &mut changed) {
                            return Err(());
                        }
                    }
                }
                Op::Tensor => match (l, r, c) {
                    (Some(l), Some(r), Some(s)) => {
                        if par_hat(&l, &s) != r && par_hat(&r, &s) != l {
                            return Err(());
                        }
                    }
                    (Some(known), None, Some(s)) | (None, Some(known), Some(s)) => {
                        let target = if st[i].is_some() { j } else { i };
                        let cands = tensor_candidates(&known, &s);
                        if cands.len() == 1 {
                            assign(st, target, cands[0].clone(), &mut changed);
                        } else if branch.is_none() {
                            branch = Some((target, cands));
                        }
                    }
                    (Some(l), Some(r), None) => {
                        let mut cands: Vec<WordOrder> = [minus(&l, &r), minus(&r, &l)].into_iter().flatten().collect();
                        cands.dedup();
                        match cands.len() {
                            0 => return Err(()),
                            1 => {
                                assign(st, k, cands[0].clone(), &mut changed);
                            }
                            _ => {
                                if branch.is_none() {
                                    branch = Some((k, cands));
                                }
                            }
                        }
                    }
                    _ => {}
                },
            }
        }
        if !changed {
            return Ok(branch);
        }
    }
}

fn solve(links: &Links, axioms: &[(Id, Id)], mut st: State, out: usize, found: &mut BTreeSet<Option<String>>, sols: &mut Vec<WordOrder>) {
    let Ok(branch) = propagate(links, axioms, &mut st) else { return };
    match branch {
        Some((i, cands)) => {
            for c in cands {
                let mut next = st.clone();
                next[i] = Some(c);
                solve(links, axioms, next, out, found, sols);
            }
        }
        None => {
            if let Some(v) = &st[out] {
                if found.insert(v.as_ref().map(|t| t.to_string())) {
                    sols.push(v.clone());
                }
            }
        }
    }
}

/// Order over words labelling the output `output` of a cut-free net.
pub fn label_words(ps: &ProofStructure, labels: &BTreeMap<Id, String>, output: Id) -> Result<Term, GrammarError> {
    let links = Links::new(ps);
    let mut st: State = vec![None; links.nodes.len()];
    for (id, word) in labels {
        let Some(&i) = links.atom_node.get(id) else { return Err(GrammarError::NoSolution) };
        st[i] = Some(Some(Term::atom(word.clone(), Polarity::Pos, *id)));
    }
    for (i, _) in &links.roots {
        if matches!(links.nodes[*i], Node::Link(Op::Tensor, _, _)) {
            st[*i] = Some(None);
        }
    }
    let out = *links.atom_node.get(&output).ok_or(GrammarError::NoSolution)?;
    let mut sols = Vec::new();
    solve(&links, &ps.axioms, st, out, &mut BTreeSet::new(), &mut sols);
    match sols.as_slice() {
        [Some(t)] => Ok(t.clone()),
        _ => Err(GrammarError::NoSolution),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parse {
    /// Cut-free net with formula leaves.
    pub net: ProofStructure,
    pub order: Term,
    /// Entries used, by headword.
    pub entries: Vec<String>,
}

impl Parse {
    /// True when `sentence` lists the words of the order as a linear
    /// extension of it.
    pub fn accepts(&self, sentence: &[&str]) -> bool {
        let atoms = self.order.atoms();
        let mut words: Vec<&str> = atoms.iter().map(|a| a.name.as_str()).collect();
        let mut given = sentence.to_vec();
        words.sort_unstable();
        given.sort_unstable();
        if words != given {
            return false;
        }
        let pos = |id: Id| {
            let w = &atoms.iter().find(|a| a.id == id).unwrap().name;
            sentence.iter().position(|s| s == w).unwrap()
        };
        to_relation(&self.order).arcs().into_iter().all(|(x, y)| pos(x) < pos(y))
    }
}

fn covers<'a>(lexicon: &'a [LexEntry], words: &mut Vec<&str>, acc: &mut Vec<&'a LexEntry>, out: &mut Vec<Vec<&'a LexEntry>>) {
    let Some(&first) = words.first() else {
        out.push(acc.clone());
        return;
    };
    for e in lexicon.iter().filter(|e| e.words().contains(&first)) {
        let mut rest = words.clone();
        if e.words().iter().all(|w| rest.iter().position(|x| x == w).map(|i| rest.remove(i)).is_some()) {
            acc.push(e);
            covers(lexicon, &mut rest, acc, out);
            acc.pop();
        }
    }
}

const OFFSET: Id = 1000;

struct Pending {
    /// `(id, owning entry)` of each hypothesis, then each cut point.
    wants: Vec<(Atom, usize, bool)>,
    outputs: Vec<(Atom, usize)>,
}

fn assignments(p: &Pending, k: usize, used: &mut Vec<bool>, plugs: &mut Vec<(Id, Id)>, cuts: &mut Vec<(Id, Id)>, f: &mut dyn FnMut(&[(Id, Id)], &[(Id, Id)])) {
    if k == p.wants.len() {
        f(plugs, cuts);
        return;
    }
    let (want, owner, is_cut) = &p.wants[k];
    for (i, (out, o)) in p.outputs.iter().enumerate() {
        let fits = if *is_cut { out.is_dual_of(want) } else { out.name == want.name && out.polarity == want.polarity };
        if used[i] || o == owner || !fits {
            continue;
        }
        used[i] = true;
        if *is_cut {
            cuts.push((out.id, want.id));
        } else {
            plugs.push((want.id, out.id));
        }
        assignments(p, k + 1, used, plugs, cuts, f);
        if *is_cut {
            cuts.pop();
        } else {
            plugs.pop();
        }
        used[i] = false;
    }
}

/// Every analysis of the multiset `words` as a correct net with output
/// `target`, after cut elimination; one per distinct net and order.
pub fn parse(lexicon: &[LexEntry], words: &[&str], target: &str) -> Result<Vec<Parse>, GrammarError> {
    for w in words {
        if !lexicon.iter().any(|e| e.words().contains(w)) {
            return Err(GrammarError::UnknownWord(w.to_string()));
        }
    }
    let mut choices = Vec::new();
    covers(lexicon, &mut words.to_vec(), &mut Vec::new(), &mut choices);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for entries in choices {
        let nets: Vec<PartialNet> = entries.iter().enumerate().map(|(k, e)| PartialNet::instantiate(e, OFFSET * k as Id)).collect();
        let mut pending = Pending { wants: vec![], outputs: vec![] };
        for (k, n) in nets.iter().enumerate() {
            pending.wants.extend(n.hypotheses.iter().map(|a| (a.clone(), k, false)));
            pending.wants.extend(n.cut_points.iter().map(|a| (a.clone(), k, true)));
            pending.outputs.extend(n.outputs.iter().map(|a| (a.clone(), k)));
        }
        let mut used = vec![false; pending.outputs.len()];
        assignments(&pending, 0, &mut used, &mut vec![], &mut vec![], &mut |plugs, cuts| {
            let Ok(net) = combine(nets.clone(), plugs, cuts) else { return };
            let Some(ps) = net.complete(target) else { return };
            if !ps.is_correct() {
                return;
            }
            let Ok(normal) = eliminate_atomic_cuts(&ps) else { return };
            if !normal.is_correct() {
                return;
            }
            let Ok(order) = label_words(&normal, &net.labels, net.outputs[0].id) else { return };
            let key = (normal.renumbered(), order.plain().to_string());
            if seen.insert(key) {
                out.push(Parse { net: normal, order, entries: entries.iter().map(|e| e.word.clone()).collect() });
            }
        });
    }
    out.sort_by_key(|p| p.order.plain().to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proofnet::normalize;

    fn lex() -> Vec<LexEntry> {
        example_lexicon()
    }

    fn entry(word: &str) -> LexEntry {
        lex().into_iter().find(|e| e.word == word).unwrap()
    }

    #[test]
    fn shipped_entries_validate() {
        assert_eq!(lex().len(), 6);
    }

    #[test]
    fn malformed_entries() {
        let mut e = entry("chanter");
        e.body = parse_term("c^#0 | [(np#1 * c#2) * inf^#3]").unwrap();
        assert!(matches!(validate_entry(&e), Err(GrammarError::MalformedEntry { .. })));
        let two = r#"[{"word":"x","output":"np#1 | s#2","body":"np^#0","axioms":[[0,1,"x"]]}]"#;
        assert!(matches!(load_lexicon(two), Err(GrammarError::MalformedEntry { .. })));
    }

    #[test]
    fn plugging() {
        let p = PartialNet::instantiate(&entry("Pierre"), 0);
        let c = PartialNet::instantiate(&entry("chanter"), 100);
        let m = combine(vec![p.clone(), c], &[(101, 1)], &[]).unwrap();
        assert!(m.hypotheses.is_empty());
        assert_eq!(m.outputs.len(), 1);
        assert!(m.axioms.contains(&(0, 101)));
        assert_eq!(combine(vec![p.clone()], &[], &[]).unwrap(), p);
        let e = PartialNet::instantiate(&entry("entend"), 200);
        assert_eq!(combine(vec![p, e], &[(203, 1)], &[]), Err(GrammarError::TypeMismatch(203, 1)));
    }

    #[test]
    fn single_word_order() {
        let p = PartialNet::instantiate(&entry("Pierre"), 0);
        let ps = p.complete("np").unwrap();
        assert_eq!(label_words(&ps, &p.labels, 1).unwrap().plain().to_string(), "Pierre");
    }

    #[test]
    fn free_word_order_sentence() {
        let parses = parse(&lex(), &["Pierre", "entend", "Marie", "chanter"], "S").unwrap();
        let orders: Vec<String> = parses.iter().map(|p| p.order.plain().to_string()).collect();
        assert!(orders.contains(&"Pierre < entend < (Marie | chanter)".to_string()), "{orders:?}");
        let both: Vec<&Parse> = parses
            .iter()
            .filter(|p| p.accepts(&["Pierre", "entend", "Marie", "chanter"]) && p.accepts(&["Pierre", "entend", "chanter", "Marie"]))
            .collect();
        assert_eq!(both.len(), 1);
        assert!(!both[0].accepts(&["Marie", "Pierre", "entend", "chanter"]));
        for p in &parses {
            assert!(p.net.is_correct());
        }
    }

    #[test]
    fn negation_uses_a_cut() {
        let parses = parse(&lex(), &["ne", "regarde", "pas"], "S").unwrap();
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].order.plain().to_string(), "ne < regarde < pas");
    }

    #[test]
    fn atomic_cut_elimination_agrees_with_nets() {
        let n = PartialNet::instantiate(&entry("ne"), 0);
        let r = PartialNet::instantiate(&entry("regarde"), 100);
        let m = combine(vec![n, r], &[], &[(101, 6)]).unwrap();
        let ps = m.complete("S").unwrap();
        assert_eq!(crate::proofnet::cuts(&ps).len(), 1);
        let ours = eliminate_atomic_cuts(&ps).unwrap();
        assert_eq!(ours.unfolded(), normalize(&ps).unwrap().0);
    }

    #[test]
    fn unknown_word() {
        assert_eq!(parse(&lex(), &["Jean"], "S"), Err(GrammarError::UnknownWord("Jean".into())));
    }
}
