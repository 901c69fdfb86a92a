//! Dicograph terms.
//!
//! A [`Term`] is an n-ary tree whose interior nodes are the three
//! dicograph compositions (parallel `|`, directed series `<`, symmetric
//! series `*`) and whose leaves are [`Formula`]s. A term whose leaves are
//! all atoms is a dicograph of atoms; otherwise it is a dicograph of
//! formulas (a structured sequent, or an intermediate proof-net conclusion).
//!
//! Terms built through [`Term::node`] are always canonical: no node has a
//! child with the same operator, children of `|` and `*` are sorted, and
//! children of `<` keep their order. Equality of canonical terms is
//! therefore equality of the dicographs they denote.

use std::fmt;

use thiserror::Error;

/// Occurrence identifier. Unique within a term or proof structure.
pub type Id = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }
}

/// An atom occurrence: a propositional variable or its negation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub name: String,
    pub polarity: Polarity,
    pub id: Id,
}

impl Atom {
    pub fn new(name: impl Into<String>, polarity: Polarity, id: Id) -> Atom {
        Atom { name: name.into(), polarity, id }
    }

    pub fn pos(name: impl Into<String>, id: Id) -> Atom {
        Atom::new(name, Polarity::Pos, id)
    }

    pub fn neg(name: impl Into<String>, id: Id) -> Atom {
        Atom::new(name, Polarity::Neg, id)
    }

    /// Same occurrence id, opposite polarity.
    pub fn dual(&self) -> Atom {
        Atom { name: self.name.clone(), polarity: self.polarity.flip(), id: self.id }
    }

    /// True when `other` is an occurrence of the dual atom.
    pub fn is_dual_of(&self, other: &Atom) -> bool {
        self.name == other.name && self.polarity != other.polarity
    }
}

/// Operators, shared by the dicograph compositions and the connectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Par,
    Before,
    Tensor,
}

impl Op {
    pub fn dual(self) -> Op {
        match self {
            Op::Par => Op::Tensor,
            Op::Tensor => Op::Par,
            Op::Before => Op::Before,
        }
    }

    pub fn is_commutative(self) -> bool {
        self != Op::Before
    }

    pub fn symbol(self) -> char {
        match self {
            Op::Par => '|',
            Op::Before => '<',
            Op::Tensor => '*',
        }
    }
}

/// A formula with binary connectives. Formulas are kept as written: the
/// connectives are not reassociated or reordered.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Conn(Op, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn conn(op: Op, left: Formula, right: Formula) -> Formula {
        Formula::Conn(op, Box::new(left), Box::new(right))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Formula::Atom(a) => Some(a),
            Formula::Conn(..) => None,
        }
    }

    /// De Morgan dual. `<` is self-dual and keeps its argument order.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(a.dual()),
            Formula::Conn(op, l, r) => Formula::conn(op.dual(), l.dual(), r.dual()),
        }
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Formula::Atom(a) => out.push(a),
            Formula::Conn(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn min_id(&self) -> Id {
        self.atoms().iter().map(|a| a.id).min().expect("formula has atoms")
    }

    /// Number of binary connectives.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Conn(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// The dicograph of atoms obtained by unfolding every connective.
    pub fn unfold_all(&self) -> Term {
        match self {
            Formula::Atom(a) => Term::Leaf(Formula::Atom(a.clone())),
            Formula::Conn(op, l, r) => Term::node(*op, vec![l.unfold_all(), r.unfold_all()]),
        }
    }

    pub(crate) fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Atom) -> Formula {
        match self {
            Formula::Atom(a) => Formula::Atom(f(a)),
            Formula::Conn(op, l, r) => Formula::conn(*op, l.map_atoms(f), r.map_atoms(f)),
        }
    }
}

impl From<Atom> for Formula {
    fn from(a: Atom) -> Formula {
        Formula::Atom(a)
    }
}

/// Canonical dicograph term over formula leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Leaf(Formula),
    Node(Op, Vec<Term>),
}

/// The three kinds of equivalent points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquivKind {
    FreePar,
    ArcBefore,
    EdgeTensor,
}

impl EquivKind {
    pub fn op(self) -> Op {
        match self {
            EquivKind::FreePar => Op::Par,
            EquivKind::ArcBefore => Op::Before,
            EquivKind::EdgeTensor => Op::Tensor,
        }
    }

    pub fn of_op(op: Op) -> EquivKind {
        match op {
            Op::Par => EquivKind::FreePar,
            Op::Before => EquivKind::ArcBefore,
            Op::Tensor => EquivKind::EdgeTensor,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("relation is not a dicograph")]
    NotDicograph,
    #[error("formulas are not {0:?}-equivalent in this term")]
    NotEquivalent(EquivKind),
    #[error("formula is not a compound leaf of this term")]
    NotCompound,
    #[error("occurrence id {0} is used twice")]
    DuplicateId(Id),
}

/// Path from the root through node children.
pub type Position = Vec<usize>;

impl Term {
    pub fn atom(name: impl Into<String>, polarity: Polarity, id: Id) -> Term {
        Term::Leaf(Formula::Atom(Atom::new(name, polarity, id)))
    }

    pub fn leaf(f: Formula) -> Term {
        Term::Leaf(f)
    }

    /// Canonical constructor: flattens same-operator children, sorts the
    /// children of commutative operators, and collapses singleton nodes.
    pub fn node(op: Op, children: Vec<Term>) -> Term {
        let mut flat = Vec::with_capacity(children.len());
        for c in children {
            match c {
                Term::Node(cop, grand) if cop == op => flat.extend(grand),
                other => flat.push(other),
            }
        }
        if op.is_commutative() {
            flat.sort();
        }
        match flat.len() {
            0 => panic!("empty {op:?} node"),
            1 => flat.pop().unwrap(),
            _ => Term::Node(op, flat),
        }
    }

    /// Rebuilds the term bottom-up through [`Term::node`].
    pub fn canonical(self) -> Term {
        match self {
            Term::Leaf(_) => self,
            Term::Node(op, children) => {
                Term::node(op, children.into_iter().map(Term::canonical).collect())
            }
        }
    }

    pub fn op(&self) -> Option<Op> {
        match self {
            Term::Leaf(_) => None,
            Term::Node(op, _) => Some(*op),
        }
    }

    pub fn children(&self) -> &[Term] {
        match self {
            Term::Leaf(_) => &[],
            Term::Node(_, c) => c,
        }
    }

    pub fn as_leaf(&self) -> Option<&Formula> {
        match self {
            Term::Leaf(f) => Some(f),
            Term::Node(..) => None,
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Term::Leaf(f) => out.push(f),
            Term::Node(_, c) => c.iter().for_each(|t| t.collect_leaves(out)),
        }
    }

    /// Every atom occurrence, including those inside compound leaves.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        for f in self.leaves() {
            f.collect_atoms(&mut out);
        }
        out
    }

    pub fn atom_ids(&self) -> Vec<Id> {
        self.atoms().iter().map(|a| a.id).collect()
    }

    pub fn min_id(&self) -> Id {
        self.atoms().iter().map(|a| a.id).min().expect("term has atoms")
    }

    /// True when every leaf is an atom.
    pub fn is_atomic(&self) -> bool {
        self.leaves().iter().all(|f| f.is_atom())
    }

    pub fn has_op(&self, op: Op) -> bool {
        match self {
            Term::Leaf(_) => false,
            Term::Node(o, c) => *o == op || c.iter().any(|t| t.has_op(op)),
        }
    }

    /// Checks that no occurrence id is repeated.
    pub fn check_ids(&self) -> Result<(), TermError> {
        let mut ids = self.atom_ids();
        ids.sort_unstable();
        match ids.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(TermError::DuplicateId(w[0])),
            None => Ok(()),
        }
    }

    /// De Morgan dual: polarities flip, `|` and `*` swap, `<` keeps its order.
    pub fn dual(&self) -> Term {
        match self {
            Term::Leaf(f) => Term::Leaf(f.dual()),
            Term::Node(op, c) => Term::node(op.dual(), c.iter().map(Term::dual).collect()),
        }
    }

    /// Replaces every compound leaf by the dicograph of its atoms.
    pub fn unfold_all(&self) -> Term {
        match self {
            Term::Leaf(f) => f.unfold_all(),
            Term::Node(op, c) => Term::node(*op, c.iter().map(Term::unfold_all).collect()),
        }
    }

    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> Atom) -> Term {
        match self {
            Term::Leaf(l) => Term::Leaf(l.map_atoms(f)),
            Term::Node(op, c) => Term::node(*op, c.iter().map(|t| t.map_atoms(f)).collect()),
        }
    }

    pub fn at(&self, pos: &[usize]) -> Option<&Term> {
        match pos.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.children().get(i)?.at(rest),
        }
    }

    /// Replaces the subterm at `pos` and re-canonicalizes along the path.
    pub fn replace_at(&self, pos: &[usize], new: Term) -> Term {
        match pos.split_first() {
            None => new,
            Some((&i, rest)) => match self {
                Term::Leaf(_) => panic!("position below a leaf"),
                Term::Node(op, c) => {
                    let mut c = c.clone();
                    c[i] = c[i].replace_at(rest, new);
                    Term::node(*op, c)
                }
            },
        }
    }

    /// Removes the subterm at a non-root position. Returns `None` if `pos`
    /// is the root.
    pub fn remove_at(&self, pos: &[usize]) -> Option<Term> {
        let (&last, parent_path) = pos.split_last()?;
        let parent = self.at(parent_path)?;
        let (op, c) = match parent {
            Term::Node(op, c) => (*op, c),
            Term::Leaf(_) => return None,
        };
        let mut c = c.clone();
        c.remove(last);
        Some(self.replace_at(parent_path, Term::node(op, c)))
    }

    /// Restriction to the atoms satisfying `keep`. Compound leaves are kept
    /// or dropped as a whole according to their first atom.
    pub fn restrict(&self, keep: &impl Fn(&Atom) -> bool) -> Option<Term> {
        match self {
            Term::Leaf(f) => keep(f.atoms()[0]).then(|| self.clone()),
            Term::Node(op, c) => {
                let kept: Vec<Term> = c.iter().filter_map(|t| t.restrict(keep)).collect();
                (!kept.is_empty()).then(|| Term::node(*op, kept))
            }
        }
    }

    /// Pairs of leaves that are equivalent points of the dicograph of
    /// leaves, classified by kind. `ArcBefore` pairs are ordered.
    pub fn equivalent_pairs(&self) -> Vec<(Formula, Formula, EquivKind)> {
        let mut out = Vec::new();
        self.collect_equivalent(&mut out);
        out.sort();
        out
    }

    fn collect_equivalent(&self, out: &mut Vec<(Formula, Formula, EquivKind)>) {
        let Term::Node(op, c) = self else { return };
        let kind = EquivKind::of_op(*op);
        if *op == Op::Before {
            for w in c.windows(2) {
                if let (Term::Leaf(a), Term::Leaf(b)) = (&w[0], &w[1]) {
                    out.push((a.clone(), b.clone(), kind));
                }
            }
        } else {
            let leaves: Vec<&Formula> = c.iter().filter_map(Term::as_leaf).collect();
            for (i, a) in leaves.iter().enumerate() {
                for b in &leaves[i + 1..] {
                    out.push(((*a).clone(), (*b).clone(), kind));
                }
            }
        }
        c.iter().for_each(|t| t.collect_equivalent(out));
    }

    /// Folds two equivalent leaves `a`, `b` into the single formula
    /// `a * b` with the connective matching `kind`.
    pub fn fold(&self, a: &Formula, b: &Formula, kind: EquivKind) -> Result<Term, TermError> {
        let pos = self.sibling_node(a, b, kind).ok_or(TermError::NotEquivalent(kind))?;
        let Some(Term::Node(op, c)) = self.at(&pos) else { unreachable!() };
        let folded = Term::Leaf(Formula::conn(kind.op(), a.clone(), b.clone()));
        let mut rest = Vec::with_capacity(c.len() - 1);
        for t in c {
            match t.as_leaf() {
                Some(f) if f == a => rest.push(folded.clone()),
                Some(f) if f == b => {}
                _ => rest.push(t.clone()),
            }
        }
        Ok(self.replace_at(&pos, Term::node(*op, rest)))
    }

    fn sibling_node(&self, a: &Formula, b: &Formula, kind: EquivKind) -> Option<Position> {
        let Term::Node(op, c) = self else { return None };
        if *op == kind.op() && a != b {
            let ia = c.iter().position(|t| t.as_leaf() == Some(a));
            let ib = c.iter().position(|t| t.as_leaf() == Some(b));
            if let (Some(ia), Some(ib)) = (ia, ib) {
                if *op != Op::Before || ib == ia + 1 {
                    return Some(Vec::new());
                }
            }
        }
        c.iter().enumerate().find_map(|(i, t)| {
            t.sibling_node(a, b, kind).map(|mut p| {
                p.insert(0, i);
                p
            })
        })
    }

    /// Splits a compound leaf into its two immediate subformulas, which
    /// become equivalent points of the result.
    pub fn unfold(&self, f: &Formula) -> Result<Term, TermError> {
        let Formula::Conn(op, l, r) = f else { return Err(TermError::NotCompound) };
        let pos = self.leaf_position(f).ok_or(TermError::NotCompound)?;
        let split = Term::Node(*op, vec![Term::Leaf((**l).clone()), Term::Leaf((**r).clone())]);
        Ok(self.replace_at(&pos, Term::node(*op, split.children().to_vec())))
    }

    pub fn leaf_position(&self, f: &Formula) -> Option<Position> {
        match self {
            Term::Leaf(g) => (g == f).then(Vec::new),
            Term::Node(_, c) => c.iter().enumerate().find_map(|(i, t)| {
                t.leaf_position(f).map(|mut p| {
                    p.insert(0, i);
                    p
                })
            }),
        }
    }

    /// Positions of every interior node, in pre-order.
    pub fn node_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        self.collect_positions(&mut Vec::new(), &mut out);
        out
    }

    fn collect_positions(&self, path: &mut Position, out: &mut Vec<Position>) {
        if let Term::Node(_, c) = self {
            out.push(path.clone());
            for (i, t) in c.iter().enumerate() {
                path.push(i);
                t.collect_positions(path, out);
                path.pop();
            }
        }
    }

    /// Shape of the term with occurrence ids erased, re-canonicalized.
    pub fn erase_ids(&self) -> Term {
        self.map_atoms(&mut |a| Atom::new(a.name.clone(), a.polarity, 0))
    }

    /// Display without occurrence ids.
    pub fn plain(&self) -> Plain<'_> {
        Plain(self)
    }
}

/// Finds a bijection between the atoms of `a` and `b` under which the two
/// terms coincide (ids ignored). Pairs are `(atom of a, atom of b)`.
pub fn match_shapes(a: &Term, b: &Term) -> Option<Vec<(Id, Id)>> {
    if a.erase_ids() != b.erase_ids() {
        return None;
    }
    let mut out = Vec::new();
    match_terms(a, b, &mut out).then_some(out)
}

fn match_terms(a: &Term, b: &Term, out: &mut Vec<(Id, Id)>) -> bool {
    match (a, b) {
        (Term::Leaf(fa), Term::Leaf(fb)) => match_formulas(fa, fb, out),
        (Term::Node(oa, ca), Term::Node(ob, cb)) if oa == ob && ca.len() == cb.len() => {
            if *oa == Op::Before {
                ca.iter().zip(cb).all(|(x, y)| match_terms(x, y, out))
            } else {
                let mut used = vec![false; cb.len()];
                match_unordered(ca, cb, 0, &mut used, out)
            }
        }
        _ => false,
    }
}

fn match_unordered(
    ca: &[Term],
    cb: &[Term],
    i: usize,
    used: &mut [bool],
    out: &mut Vec<(Id, Id)>,
) -> bool {
    if i == ca.len() {
        return true;
    }
    for j in 0..cb.len() {
        if used[j] {
            continue;
        }
        let mark = out.len();
        if match_terms(&ca[i], &cb[j], out) {
            used[j] = true;
            if match_unordered(ca, cb, i + 1, used, out) {
                return true;
            }
            used[j] = false;
        }
        out.truncate(mark);
    }
    false
}

pub(crate) fn match_formulas(a: &Formula, b: &Formula, out: &mut Vec<(Id, Id)>) -> bool {
    match (a, b) {
        (Formula::Atom(x), Formula::Atom(y)) => {
            if x.name == y.name && x.polarity == y.polarity {
                out.push((x.id, y.id));
                true
            } else {
                false
            }
        }
        (Formula::Conn(oa, la, ra), Formula::Conn(ob, lb, rb)) if oa == ob => {
            match_formulas(la, lb, out) && match_formulas(ra, rb, out)
        }
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Printing

fn write_atom(f: &mut fmt::Formatter<'_>, a: &Atom, ids: bool) -> fmt::Result {
    f.write_str(&a.name)?;
    if a.polarity == Polarity::Neg {
        f.write_str("^")?;
    }
    if ids {
        write!(f, "#{}", a.id)?;
    }
    Ok(())
}

fn write_formula(f: &mut fmt::Formatter<'_>, x: &Formula, ids: bool) -> fmt::Result {
    match x {
        Formula::Atom(a) => write_atom(f, a, ids),
        Formula::Conn(op, l, r) => {
            for (i, side) in [l, r].into_iter().enumerate() {
                if i == 1 {
                    write!(f, " {} ", op.symbol())?;
                }
                if side.is_atom() {
                    write_formula(f, side, ids)?;
                } else {
                    f.write_str("(")?;
                    write_formula(f, side, ids)?;
                    f.write_str(")")?;
                }
            }
            Ok(())
        }
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, ids: bool) -> fmt::Result {
    match t {
        Term::Leaf(x @ Formula::Atom(_)) => write_formula(f, x, ids),
        Term::Leaf(x) => {
            f.write_str("[")?;
            write_formula(f, x, ids)?;
            f.write_str("]")
        }
        Term::Node(op, c) => {
            for (i, child) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " {} ", op.symbol())?;
                }
                if child.op().is_some() {
                    f.write_str("(")?;
                    write_term(f, child, ids)?;
                    f.write_str(")")?;
                } else {
                    write_term(f, child, ids)?;
                }
            }
            Ok(())
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, true)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, true)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_atom(f, self, true)
    }
}

pub struct Plain<'a>(&'a Term);

impl fmt::Display for Plain<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self.0, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn node_flattens_and_sorts() {
        let a = Term::atom("a", Polarity::Pos, 0);
        let b = Term::atom("b", Polarity::Pos, 1);
        let c = Term::atom("c", Polarity::Pos, 2);
        let left = Term::node(Op::Par, vec![c.clone(), Term::node(Op::Par, vec![b.clone(), a.clone()])]);
        assert_eq!(left, Term::Node(Op::Par, vec![a.clone(), b.clone(), c.clone()]));
        let before = Term::node(Op::Before, vec![Term::node(Op::Before, vec![c.clone(), a.clone()]), b.clone()]);
        assert_eq!(before, Term::Node(Op::Before, vec![c, a, b]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(t("a#0 * b#1").dual(), t("a^#0 | b^#1"));
        assert_eq!(t("a#0 < b#1").dual(), t("a^#0 < b^#1"));
        let x = t("(a#0 < (b^#1 * c#2)) | d#3");
        assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn equivalent_pairs_examples() {
        let (a, b, c) = (t("a#0"), t("b#1"), t("c#2"));
        let leaf = |x: &Term| x.as_leaf().unwrap().clone();
        assert_eq!(
            t("(a#0 | b#1) < c#2").equivalent_pairs(),
            vec![(leaf(&a), leaf(&b), EquivKind::FreePar)]
        );
        assert_eq!(
            t("a#0 < b#1 < c#2").equivalent_pairs(),
            vec![
                (leaf(&a), leaf(&b), EquivKind::ArcBefore),
                (leaf(&b), leaf(&c), EquivKind::ArcBefore)
            ]
        );
        assert_eq!(t("a#0 * b#1").equivalent_pairs(), vec![(leaf(&a), leaf(&b), EquivKind::EdgeTensor)]);
    }

    #[test]
    fn fold_and_unfold() {
        let s = t("a#0 | a^#1");
        let (a, na) = (s.leaves()[0].clone(), s.leaves()[1].clone());
        let folded = s.fold(&a, &na, EquivKind::FreePar).unwrap();
        assert_eq!(folded, t("[a#0 | a^#1]"));
        assert_eq!(folded.unfold(folded.as_leaf().unwrap()).unwrap(), s);

        let seq = t("[a#0 < b#1] | c#2");
        let f = seq.leaves().into_iter().find(|f| !f.is_atom()).unwrap().clone();
        assert_eq!(seq.unfold(&f).unwrap(), t("(a#0 < b#1) | c#2"));
    }

    #[test]
    fn fold_rejects_wrong_kind() {
        let s = t("a#0 < a^#1");
        let (a, na) = (s.leaves()[0].clone(), s.leaves()[1].clone());
        assert_eq!(s.fold(&a, &na, EquivKind::FreePar), Err(TermError::NotEquivalent(EquivKind::FreePar)));
        // before-equivalence is ordered
        assert!(s.fold(&na, &a, EquivKind::ArcBefore).is_err());
        assert!(s.fold(&a, &na, EquivKind::ArcBefore).is_ok());
    }

    #[test]
    fn restrict_and_remove() {
        let x = t("(a#0 * b#1) < (c#2 | d#3)");
        let r = x.restrict(&|a: &Atom| a.id != 1 && a.id != 3).unwrap();
        assert_eq!(r, t("a#0 < c#2"));
        assert_eq!(x.remove_at(&[1]).unwrap(), t("a#0 * b#1"));
        assert_eq!(x.remove_at(&[]), None);
    }

    #[test]
    fn match_shapes_pairs_atoms() {
        let a = t("x#0 | (y#1 < z#2)");
        let b = t("(y#11 < z#12) | x#10");
        let m = match_shapes(&a, &b).unwrap();
        assert_eq!(m, vec![(0, 10), (1, 11), (2, 12)]);
        assert!(match_shapes(&a, &t("x#0 | (z#2 < y#1)")).is_none());
    }
}
