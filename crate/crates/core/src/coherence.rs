//! Finite coherence spaces and experiments on proof structures.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::proofnet::{cuts, for_each_structure, ProofStructure};
use crate::term::{Formula, Id, Op, Polarity, Term};

/// Relation between two tokens of a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    StrictIncoh,
    Equal,
    StrictCoh,
}

impl Class {
    pub fn dual(self) -> Class {
        match self {
            Class::StrictIncoh => Class::StrictCoh,
            Class::Equal => Class::Equal,
            Class::StrictCoh => Class::StrictIncoh,
        }
    }

    pub fn is_coherent(self) -> bool {
        self != Class::StrictIncoh
    }
}

/// Class of a pair of pairs from the classes of their components.
pub fn combine(op: Op, l: Class, r: Class) -> Class {
    use Class::*;
    match (op, l, r) {
        (_, Equal, Equal) => Equal,
        (Op::Par, StrictCoh, _) | (Op::Par, _, StrictCoh) => StrictCoh,
        (Op::Par, _, _) => StrictIncoh,
        (Op::Tensor, StrictIncoh, _) | (Op::Tensor, _, StrictIncoh) => StrictIncoh,
        (Op::Tensor, _, _) => StrictCoh,
        (Op::Before, Equal, x) => x,
        (Op::Before, x, _) => x,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoherenceError {
    #[error("no coherence space for atom '{0}'")]
    MissingSpace(String),
    #[error("structure has cuts")]
    HasCuts,
    #[error("malformed space: {0}")]
    Format(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceSpace {
    pub tokens: Vec<String>,
    /// `coh[i][j]`: tokens `i` and `j` are strictly coherent.
    coh: Vec<Vec<bool>>,
}

impl CoherenceSpace {
    pub fn new(tokens: Vec<String>, strict_coh: &[(usize, usize)]) -> CoherenceSpace {
        let n = tokens.len();
        let mut coh = vec![vec![false; n]; n];
        for &(i, j) in strict_coh {
            if i != j {
                coh[i][j] = true;
                coh[j][i] = true;
            }
        }
        CoherenceSpace { tokens, coh }
    }

    /// Space on tokens `t0..` whose strict coherence is given by a mask
    /// over the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_mask(n: usize, mask: u64) -> CoherenceSpace {
        let pairs: Vec<(usize, usize)> = pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| p).collect();
        CoherenceSpace::new((0..n).map(|i| format!("t{i}")).collect(), &pairs)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn class(&self, i: usize, j: usize) -> Class {
        if i == j {
            Class::Equal
        } else if self.coh[i][j] {
            Class::StrictCoh
        } else {
            Class::StrictIncoh
        }
    }

    pub fn strict_coh(&self) -> Vec<(usize, usize)> {
        pairs(self.len()).into_iter().filter(|&(i, j)| self.coh[i][j]).collect()
    }

    /// Same web, strict coherence and strict incoherence swapped.
    pub fn dual(&self) -> CoherenceSpace {
        let n = self.len();
        let coh = (0..n).map(|i| (0..n).map(|j| i != j && !self.coh[i][j]).collect()).collect();
        CoherenceSpace { tokens: self.tokens.clone(), coh }
    }

    pub fn is_clique(&self, tokens: &[usize]) -> bool {
        tokens.iter().all(|&i| tokens.iter().all(|&j| self.class(i, j).is_coherent()))
    }

    pub fn to_json(&self) -> String {
        let strict_coh = self.strict_coh().into_iter().map(|(i, j)| [self.tokens[i].clone(), self.tokens[j].clone()]).collect();
        serde_json::to_string(&SpaceFile { tokens: self.tokens.iter().cloned().map(serde_json::Value::String).collect(), strict_coh })
            .expect("space serializes")
    }

    pub fn from_json(src: &str) -> Result<CoherenceSpace, CoherenceError> {
        let f: SpaceFile = serde_json::from_str(src).map_err(|e| CoherenceError::Format(e.to_string()))?;
        let name = |v: &serde_json::Value| match v {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        let tokens: Vec<String> = f.tokens.iter().map(name).collect();
        let index = |t: &String| tokens.iter().position(|x| x == t).ok_or_else(|| CoherenceError::Format(format!("unknown token {t}")));
        let mut pairs = Vec::new();
        for [x, y] in &f.strict_coh {
            pairs.push((index(x)?, index(y)?));
        }
        Ok(CoherenceSpace::new(tokens, &pairs))
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceFile {
    tokens: Vec<serde_json::Value>,
    strict_coh: Vec<[String; 2]>,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Spaces by atom name.
pub type Spaces = HashMap<String, CoherenceSpace>;

/// The same space for every name.
pub fn uniform(names: &[&str], space: &CoherenceSpace) -> Spaces {
    names.iter().map(|n| (n.to_string(), space.clone())).collect()
}

fn all_names(t: &Term) -> BTreeSet<String> {
    t.atoms().into_iter().map(|a| a.name.clone()).collect()
}

/// Tokens of a formula or term: pairs follow binary formulas, and an
/// n-ary node nests to the right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TokenTree {
    Leaf(usize),
    Pair(Box<TokenTree>, Box<TokenTree>),
}

impl TokenTree {
    pub fn pair(l: TokenTree, r: TokenTree) -> TokenTree {
        TokenTree::Pair(Box::new(l), Box::new(r))
    }

    fn nest(mut items: Vec<TokenTree>) -> TokenTree {
        let mut acc = items.pop().expect("nodes have children");
        while let Some(x) = items.pop() {
            acc = TokenTree::pair(x, acc);
        }
        acc
    }
}

impl fmt::Display for TokenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenTree::Leaf(i) => write!(f, "{i}"),
            TokenTree::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}

fn tree_of_formula(f: &Formula, token: &dyn Fn(Id) -> usize) -> TokenTree {
    match f {
        Formula::Atom(a) => TokenTree::Leaf(token(a.id)),
        Formula::Conn(_, l, r) => TokenTree::pair(tree_of_formula(l, token), tree_of_formula(r, token)),
    }
}

fn tree_of_term(t: &Term, token: &dyn Fn(Id) -> usize) -> TokenTree {
    match t {
        Term::Leaf(f) => tree_of_formula(f, token),
        Term::Node(_, c) => TokenTree::nest(c.iter().map(|x| tree_of_term(x, token)).collect()),
    }
}

fn space_of<'a>(spaces: &'a Spaces, name: &str) -> Result<&'a CoherenceSpace, CoherenceError> {
    spaces.get(name).ok_or_else(|| CoherenceError::MissingSpace(name.to_string()))
}

fn class_formula(f: &Formula, x: &TokenTree, y: &TokenTree, spaces: &Spaces) -> Result<Class, CoherenceError> {
    match (f, x, y) {
        (Formula::Atom(a), TokenTree::Leaf(i), TokenTree::Leaf(j)) => {
            let c = space_of(spaces, &a.name)?.class(*i, *j);
            Ok(if a.polarity == Polarity::Neg { c.dual() } else { c })
        }
        (Formula::Conn(op, l, r), TokenTree::Pair(xl, xr), TokenTree::Pair(yl, yr)) => {
            Ok(combine(*op, class_formula(l, xl, yl, spaces)?, class_formula(r, xr, yr, spaces)?))
        }
        _ => panic!("token does not fit the formula"),
    }
}

/// Class of two tokens of the space of `t`.
pub fn class_term(t: &Term, x: &TokenTree, y: &TokenTree, spaces: &Spaces) -> Result<Class, CoherenceError> {
    match t {
        Term::Leaf(f) => class_formula(f, x, y, spaces),
        Term::Node(op, c) => {
            let (mut xs, mut ys) = (x, y);
            let mut classes = Vec::with_capacity(c.len());
            for (k, child) in c.iter().enumerate() {
                if k + 1 == c.len() {
                    classes.push(class_term(child, xs, ys, spaces)?);
                } else {
                    let (TokenTree::Pair(xl, xr), TokenTree::Pair(yl, yr)) = (xs, ys) else {
                        panic!("token does not fit the term")
                    };
                    classes.push(class_term(child, xl, yl, spaces)?);
                    xs = xr;
                    ys = yr;
                }
            }
            Ok(classes.into_iter().rev().reduce(|acc, c| combine(*op, c, acc)).unwrap())
        }
    }
}

/// The space of a term: every token tree over the leaf webs, with classes
/// computed by the connective tables.
pub struct TermSpace {
    pub tokens: Vec<TokenTree>,
    pub space: CoherenceSpace,
}

pub fn interpret_term(t: &Term, spaces: &Spaces) -> Result<TermSpace, CoherenceError> {
    let atoms = t.atoms();
    for a in &atoms {
        space_of(spaces, &a.name)?;
    }
    let sizes: Vec<usize> = atoms.iter().map(|a| spaces[&a.name].len()).collect();
    let ids: Vec<Id> = atoms.iter().map(|a| a.id).collect();
    let mut tokens = Vec::new();
    for_each_choice(&sizes, &mut |choice| {
        let token = |id: Id| choice[ids.iter().position(|&x| x == id).unwrap()];
        tokens.push(tree_of_term(t, &token));
    });
    let mut strict = Vec::new();
    for (i, x) in tokens.iter().enumerate() {
        for (j, y) in tokens.iter().enumerate().skip(i + 1) {
            if class_term(t, x, y, spaces)? == Class::StrictCoh {
                strict.push((i, j));
            }
        }
    }
    let space = CoherenceSpace::new(tokens.iter().map(TokenTree::to_string).collect(), &strict);
    Ok(TermSpace { tokens, space })
}

fn for_each_choice(sizes: &[usize], f: &mut dyn FnMut(&[usize])) {
    let mut choice = vec![0; sizes.len()];
    if sizes.contains(&0) {
        return;
    }
    loop {
        f(&choice);
        let mut k = 0;
        while k < sizes.len() {
            choice[k] += 1;
            if choice[k] < sizes[k] {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == sizes.len() {
            return;
        }
    }
}

/// One token per axiom, in the order of `ps.axioms`.
pub type Experiment = Vec<usize>;

/// Result of an experiment over the conclusion without its cuts, or
/// `None` when a cut sees different tokens on its two sides.
pub fn run_experiment(ps: &ProofStructure, e: &[usize]) -> Option<TokenTree> {
    let axiom_of: HashMap<Id, usize> = ps.axioms.iter().enumerate().flat_map(|(k, &(x, y))| [(x, k), (y, k)]).collect();
    let token = |id: Id| e[axiom_of[&id]];
    let cs = cuts(ps);
    if cs.iter().flat_map(|c| &c.pairs).any(|&(x, y)| token(x) != token(y)) {
        return None;
    }
    Some(tree_of_term(&visible(ps, &cs)?, &token))
}

fn visible(ps: &ProofStructure, cs: &[crate::proofnet::Cut]) -> Option<Term> {
    let hidden: BTreeSet<Id> = cs.iter().flat_map(|c| c.pairs.iter().flat_map(|&(x, y)| [x, y])).collect();
    let t = ps.conclusion.unfold_all();
    if hidden.is_empty() {
        Some(t)
    } else {
        t.restrict(&|a| !hidden.contains(&a.id))
    }
}

fn axiom_sizes(ps: &ProofStructure, spaces: &Spaces) -> Result<Vec<usize>, CoherenceError> {
    ps.axioms
        .iter()
        .map(|&(x, _)| {
            let a = ps.atom(x).expect("axiom occurrence");
            space_of(spaces, &a.name).map(CoherenceSpace::len)
        })
        .collect()
}

/// Results of all succeeding experiments.
pub fn interpretation(ps: &ProofStructure, spaces: &Spaces) -> Result<BTreeSet<TokenTree>, CoherenceError> {
    let sizes = axiom_sizes(ps, spaces)?;
    let mut out = BTreeSet::new();
    for_each_choice(&sizes, &mut |e| {
        if let Some(r) = run_experiment(ps, e) {
            out.insert(r);
        }
    });
    Ok(out)
}

/// Every two succeeding experiments have coherent or equal results.
pub fn predicts_normal(ps: &ProofStructure, spaces: &Spaces) -> Result<bool, CoherenceError> {
    let results: Vec<TokenTree> = interpretation(ps, spaces)?.into_iter().collect();
    let Some(t) = visible(ps, &cuts(ps)) else { return Ok(true) };
    for (i, x) in results.iter().enumerate() {
        for y in &results[i + 1..] {
            if !class_term(&t, x, y, spaces)?.is_coherent() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The interpretation of a cut-free structure is a clique when every
/// atom name lives in `space`.
pub fn semantic_correct(ps: &ProofStructure, space: &CoherenceSpace) -> Result<bool, CoherenceError> {
    if !cuts(ps).is_empty() {
        return Err(CoherenceError::HasCuts);
    }
    let names: Vec<String> = all_names(&ps.conclusion).into_iter().collect();
    let spaces: Spaces = names.into_iter().map(|n| (n, space.clone())).collect();
    predicts_normal(ps, &spaces)
}

/// Same answer as [`semantic_correct`], computed per axiom on the class of
/// the two tokens instead of on the tokens themselves: every class vector
/// the space can realize is tried.
pub fn semantic_correct_by_classes(ps: &ProofStructure, space: &CoherenceSpace) -> Result<bool, CoherenceError> {
    if !cuts(ps).is_empty() {
        return Err(CoherenceError::HasCuts);
    }
    let n = space.len();
    let mut realizable = vec![Class::Equal];
    for c in [Class::StrictIncoh, Class::StrictCoh] {
        if pairs(n).into_iter().any(|(i, j)| space.class(i, j) == c) {
            realizable.push(c);
        }
    }
    let t = ps.conclusion.unfold_all();
    let axiom_of: HashMap<Id, usize> = ps.axioms.iter().enumerate().flat_map(|(k, &(x, y))| [(x, k), (y, k)]).collect();
    let sizes = vec![realizable.len(); ps.axioms.len()];
    let mut ok = true;
    for_each_choice(&sizes, &mut |v| {
        if ok && v.iter().any(|&k| k != 0) {
            let cls = |id: Id, pol: Polarity| {
                let c = realizable[v[axiom_of[&id]]];
                if pol == Polarity::Neg {
                    c.dual()
                } else {
                    c
                }
            };
            ok = class_by(&t, &cls).is_coherent();
        }
    });
    Ok(ok)
}

fn class_by(t: &Term, cls: &dyn Fn(Id, Polarity) -> Class) -> Class {
    match t {
        Term::Leaf(f) => {
            let a = f.as_atom().expect("unfolded");
            cls(a.id, a.polarity)
        }
        Term::Node(op, c) => c.iter().map(|x| class_by(x, cls)).rev().reduce(|acc, x| combine(*op, x, acc)).unwrap(),
    }
}

/// Outcome of [`calibrate`].
#[derive(Clone, Debug)]
pub struct Calibration {
    pub space: CoherenceSpace,
    /// Spaces tried, up to isomorphism, before this one.
    pub rejected: usize,
    /// Structures compared for the chosen space.
    pub checked: usize,
}

fn canonical_mask(n: usize, mask: u64) -> u64 {
    let ps = pairs(n);
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut m = 0;
        for (k, &(i, j)) in ps.iter().enumerate() {
            if mask >> k & 1 == 1 {
                let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                m |= 1 << index[&(a, b)];
            }
        }
        best = best.min(m);
    });
    best
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Name lists used to compare the two notions of correctness: distinct
/// names, plus repeated names when `n > 1`.
pub fn calibration_names(n: usize) -> Vec<Vec<&'static str>> {
    const NAMES: [&str; 4] = ["a", "b", "c", "d"];
    let mut out = vec![NAMES[..n].to_vec()];
    if n > 1 {
        out.push(vec!["a"; n]);
    }
    out
}

/// Agreement of [`semantic_correct`] with the circuit criterion on every
/// cut-free structure over `names`. Returns the number compared, or the
/// first disagreement.
pub fn compare_with_criterion(names: &[&str], space: &CoherenceSpace, fast: bool) -> Result<usize, ProofStructure> {
    let mut count = 0;
    let mut bad = None;
    for_each_structure(names, names.len(), &mut |ps| {
        if bad.is_some() || !cuts(&ps).is_empty() {
            return;
        }
        count += 1;
        let sem = if fast { semantic_correct_by_classes(&ps, space) } else { semantic_correct(&ps, space) };
        if sem.expect("cut-free") != ps.is_correct() {
            bad = Some(ps);
        }
    })
    .expect("bound matches");
    bad.map_or(Ok(count), Err)
}

/// First four-token space, up to isomorphism, on which semantic
/// correctness and the circuit criterion agree for every cut-free
/// structure with at most `max_axioms` axioms.
pub fn calibrate(max_axioms: usize) -> Option<Calibration> {
    let n = 4;
    let mut seen = BTreeSet::new();
    let mut rejected = 0;
    for mask in 0..1u64 << pairs(n).len() {
        let canon = canonical_mask(n, mask);
        if !seen.insert(canon) || canon != mask {
            continue;
        }
        let space = CoherenceSpace::from_mask(n, mask);
        let mut checked = 0;
        let ok = (1..=max_axioms).flat_map(calibration_names).all(|names| match compare_with_criterion(&names, &space, false) {
            Ok(k) => {
                checked += k;
                true
            }
            Err(_) => false,
        });
        if ok {
            return Some(Calibration { space, rejected, checked });
        }
        rejected += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use Class::*;

    const CLASSES: [Class; 3] = [StrictIncoh, Equal, StrictCoh];

    fn two_tokens(coherent: bool) -> CoherenceSpace {
        CoherenceSpace::new(vec!["x".into(), "y".into()], if coherent { &[(0, 1)] } else { &[] })
    }

    #[test]
    fn tables() {
        assert_eq!(combine(Op::Par, Equal, StrictCoh), StrictCoh);
        assert_eq!(combine(Op::Tensor, StrictCoh, StrictIncoh), StrictIncoh);
        assert_eq!(combine(Op::Before, StrictIncoh, StrictCoh), StrictIncoh);
        assert_eq!(combine(Op::Before, StrictCoh, StrictIncoh), StrictCoh);
        assert_eq!(combine(Op::Before, Equal, StrictIncoh), StrictIncoh);
    }

    #[test]
    fn table_duality() {
        for l in CLASSES {
            for r in CLASSES {
                for op in [Op::Par, Op::Before, Op::Tensor] {
                    assert_eq!(combine(op, l, r).dual(), combine(op.dual(), l.dual(), r.dual()));
                }
                assert_eq!(combine(Op::Par, l, r), combine(Op::Par, r, l));
                assert_eq!(combine(Op::Tensor, l, r), combine(Op::Tensor, r, l));
            }
        }
        assert_ne!(combine(Op::Before, StrictCoh, StrictIncoh), combine(Op::Before, StrictIncoh, StrictCoh));
    }

    #[test]
    fn before_matches_lexicographic_clause() {
        // a chain is strictly coherent when some component is, and every
        // later one is coherent
        for_each_choice(&[3, 3, 3], &mut |v| {
            let cs: Vec<Class> = v.iter().map(|&i| CLASSES[i]).collect();
            let folded = cs.iter().rev().copied().reduce(|acc, c| combine(Op::Before, c, acc)).unwrap();
            let clause = (0..3).any(|i| cs[i] == StrictCoh && cs[..i].iter().all(|&c| c == Equal));
            let all_equal = cs.iter().all(|&c| c == Equal);
            assert_eq!(folded == StrictCoh, clause, "{cs:?}");
            assert_eq!(folded == Equal, all_equal);
        });
    }

    #[test]
    fn dual_space_is_involutive() {
        let s = CoherenceSpace::from_mask(4, 0b101001);
        assert_eq!(s.dual().dual(), s);
        assert_ne!(s.dual(), s);
    }

    #[test]
    fn json_round_trip() {
        let s = CoherenceSpace::from_mask(4, 0b000111);
        assert_eq!(CoherenceSpace::from_json(&s.to_json()).unwrap(), s);
        let n = CoherenceSpace::from_json(r#"{"tokens":[0,1],"strict_coh":[["0","1"]]}"#).unwrap();
        assert_eq!(n.class(0, 1), StrictCoh);
    }

    #[test]
    fn before_is_associative_up_to_repairing() {
        let s = CoherenceSpace::from_mask(3, 0b011);
        let spaces = uniform(&["a", "b", "c"], &s);
        let l = parse_term("[a < (b < c)]").unwrap();
        let r = parse_term("[(a < b) < c]").unwrap();
        let (il, ir) = (interpret_term(&l, &spaces).unwrap(), interpret_term(&r, &spaces).unwrap());
        let repair = |t: &TokenTree| match t {
            TokenTree::Pair(x, yz) => match &**yz {
                TokenTree::Pair(y, z) => TokenTree::pair(TokenTree::pair((**x).clone(), (**y).clone()), (**z).clone()),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        };
        for (i, x) in il.tokens.iter().enumerate() {
            for (j, y) in il.tokens.iter().enumerate() {
                let (ri, rj) = (
                    ir.tokens.iter().position(|t| *t == repair(x)).unwrap(),
                    ir.tokens.iter().position(|t| *t == repair(y)).unwrap(),
                );
                assert_eq!(il.space.class(i, j), ir.space.class(ri, rj));
            }
        }
    }

    #[test]
    fn canonical_maps_are_cliques() {
        // identity tokens of A * B -o A < B and A < B -o A | B
        for coh in [true, false] {
            let spaces = uniform(&["a", "b"], &two_tokens(coh));
            for (from, to) in [(Op::Tensor, Op::Before), (Op::Before, Op::Par)] {
                let map = parse_term(&format!("[a^#0 {} b^#1] | [a#2 {} b#3]", from.dual().symbol(), to.symbol())).unwrap();
                let diag: Vec<TokenTree> = (0..2)
                    .flat_map(|x| (0..2).map(move |y| TokenTree::pair(TokenTree::Leaf(x), TokenTree::Leaf(y))))
                    .map(|t| TokenTree::pair(t.clone(), t))
                    .collect();
                for x in &diag {
                    for y in &diag {
                        assert!(class_term(&map, x, y, &spaces).unwrap().is_coherent());
                    }
                }
            }
        }
    }

    #[test]
    fn experiments() {
        let s = two_tokens(true);
        let spaces = uniform(&["a"], &s);
        let ax = ProofStructure::ax(&["a"]);
        assert_eq!(run_experiment(&ax, &[0]), Some(TokenTree::pair(TokenTree::Leaf(0), TokenTree::Leaf(0))));
        assert_eq!(interpretation(&ax, &spaces).unwrap().len(), 2);
        let cut = ProofStructure::parse(&[(0, 1), (2, 3)], "a#0 | (a^#1 * a#2) | a^#3").unwrap();
        assert_eq!(run_experiment(&cut, &[0, 1]), None);
        assert_eq!(run_experiment(&cut, &[1, 1]), Some(TokenTree::pair(TokenTree::Leaf(1), TokenTree::Leaf(1))));
        let ax2 = ProofStructure::ax(&["a", "b"]);
        let r = run_experiment(&ax2, &[0, 1]).unwrap();
        assert_eq!(r.to_string(), "((0,0),(1,1))");
    }

    #[test]
    fn semantics_of_small_nets() {
        let s = CoherenceSpace::from_mask(4, 0b000011);
        assert!(semantic_correct(&ProofStructure::ax(&["a", "b"]), &s).unwrap());
        let bad = ProofStructure::parse(&[(0, 1), (2, 3)], "(a#0 * b#2) | (a^#1 * b^#3)").unwrap();
        assert!(!semantic_correct(&bad, &s).unwrap());
        let cut = ProofStructure::parse(&[(0, 1), (2, 3)], "a#0 | (a^#1 * a#2) | a^#3").unwrap();
        assert_eq!(semantic_correct(&cut, &s), Err(CoherenceError::HasCuts));
    }

    #[test]
    fn canonical_masks_give_eleven_graphs() {
        let classes: BTreeSet<u64> = (0..64).map(|m| canonical_mask(4, m)).collect();
        assert_eq!(classes.len(), 11);
    }

    #[test]
    fn class_vectors_agree_with_tokens() {
        for mask in [0u64, 1, 0b000111, 0b111111] {
            let s = CoherenceSpace::from_mask(4, mask);
            for_each_structure(&["a", "b"], 2, &mut |ps| {
                if cuts(&ps).is_empty() {
                    assert_eq!(semantic_correct(&ps, &s), semantic_correct_by_classes(&ps, &s), "{ps:?}");
                }
            })
            .unwrap();
        }
    }

    #[test]
    fn calibration_finds_a_space() {
        let c = calibrate(2).expect("some four-token space agrees");
        assert!(c.checked > 0);
        assert!(compare_with_criterion(&["a"], &c.space, false).is_ok());
    }
}
