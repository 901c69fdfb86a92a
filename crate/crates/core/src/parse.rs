//! Text syntax for terms.
//!
//! ```text
//! term    := chain
//! chain   := primary (op primary)*        -- a single operator per chain
//! primary := atom | "(" chain ")" | "[" formula "]"
//! formula := fprim (op fprim)*            -- binary, left associative
//! fprim   := atom | "(" formula ")"
//! atom    := ident ("^" | "⊥")? ("#" digits)?
//! op      := "|" | "℘" | "<" | "◁" | "*" | "⊗"
//! ```
//!
//! Square brackets delimit a formula leaf. Atoms without an explicit `#k`
//! receive the smallest unused ids in order of appearance.

use std::collections::BTreeSet;

use crate::term::{Atom, Formula, Id, Op, Polarity, Term, TermError};

#[derive(Debug)]
enum Raw {
    Atom(String, Polarity, Option<Id>),
    Node(Op, Vec<Raw>),
    Formula(Box<Raw>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Parse { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), TermError> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn peek_op(&mut self) -> Option<Op> {
        match self.peek()? {
            '|' | '℘' => Some(Op::Par),
            '<' | '◁' => Some(Op::Before),
            '*' | '⊗' => Some(Op::Tensor),
            _ => None,
        }
    }

    fn chain(&mut self, formula: bool) -> Result<Raw, TermError> {
        let first = self.primary(formula)?;
        let Some(op) = self.peek_op() else { return Ok(first) };
        let mut items = vec![first];
        while let Some(next) = self.peek_op() {
            if next != op {
                return self.err("mixed operators need parentheses");
            }
            self.bump();
            items.push(self.primary(formula)?);
        }
        if formula {
            let mut it = items.into_iter();
            let mut acc = it.next().unwrap();
            for r in it {
                acc = Raw::Node(op, vec![acc, r]);
            }
            Ok(acc)
        } else {
            Ok(Raw::Node(op, items))
        }
    }

    fn primary(&mut self, formula: bool) -> Result<Raw, TermError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.chain(formula)?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('[') if !formula => {
                self.bump();
                let inner = self.chain(true)?;
                self.expect(']')?;
                Ok(Raw::Formula(Box::new(inner)))
            }
            Some(c) if c.is_alphanumeric() || c == '_' => self.atom(),
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }

    fn atom(&mut self) -> Result<Raw, TermError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '_' || c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        let name = rest[..len].to_string();
        self.pos += len;
        let mut polarity = Polarity::Pos;
        if let Some(c @ ('^' | '⊥')) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
            polarity = Polarity::Neg;
        }
        let mut id = None;
        if self.src[self.pos..].starts_with('#') {
            self.pos += 1;
            let digits: String =
                self.src[self.pos..].chars().take_while(char::is_ascii_digit).collect();
            if digits.is_empty() {
                return self.err("expected digits after '#'");
            }
            self.pos += digits.len();
            id = Some(digits.parse().map_err(|_| TermError::Parse {
                offset: self.pos,
                message: "occurrence id out of range".into(),
            })?);
        }
        Ok(Raw::Atom(name, polarity, id))
    }
}

fn explicit_ids(r: &Raw, out: &mut Vec<Id>) {
    match r {
        Raw::Atom(_, _, Some(id)) => out.push(*id),
        Raw::Atom(..) => {}
        Raw::Node(_, c) => c.iter().for_each(|x| explicit_ids(x, out)),
        Raw::Formula(f) => explicit_ids(f, out),
    }
}

struct Fresh {
    used: BTreeSet<Id>,
    next: Id,
}

impl Fresh {
    fn take(&mut self, id: Option<Id>) -> Id {
        if let Some(id) = id {
            return id;
        }
        while self.used.contains(&self.next) {
            self.next += 1;
        }
        self.used.insert(self.next);
        self.next
    }
}

fn to_formula(r: Raw, fresh: &mut Fresh) -> Formula {
    match r {
        Raw::Atom(name, pol, id) => Formula::Atom(Atom::new(name, pol, fresh.take(id))),
        Raw::Node(op, c) => {
            let mut it = c.into_iter();
            let l = to_formula(it.next().unwrap(), fresh);
            let r = to_formula(it.next().unwrap(), fresh);
            Formula::conn(op, l, r)
        }
        Raw::Formula(f) => to_formula(*f, fresh),
    }
}

fn to_term(r: Raw, fresh: &mut Fresh) -> Term {
    match r {
        Raw::Atom(..) => Term::Leaf(to_formula(r, fresh)),
        Raw::Node(op, c) => Term::node(op, c.into_iter().map(|x| to_term(x, fresh)).collect()),
        Raw::Formula(f) => Term::Leaf(to_formula(*f, fresh)),
    }
}

fn parse_raw(src: &str, formula: bool) -> Result<(Raw, Fresh), TermError> {
    let mut p = Parser { src, pos: 0 };
    let raw = p.chain(formula)?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let mut ids = Vec::new();
    explicit_ids(&raw, &mut ids);
    let mut used = BTreeSet::new();
    for id in ids {
        if !used.insert(id) {
            return Err(TermError::DuplicateId(id));
        }
    }
    Ok((raw, Fresh { used, next: 0 }))
}

/// Parses a term. The result is canonical.
pub fn parse_term(src: &str) -> Result<Term, TermError> {
    let (raw, mut fresh) = parse_raw(src, false)?;
    Ok(to_term(raw, &mut fresh))
}

/// Parses a single formula; operators are binary connectives.
pub fn parse_formula(src: &str) -> Result<Formula, TermError> {
    let (raw, mut fresh) = parse_raw(src, true)?;
    Ok(to_formula(raw, &mut fresh))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assigns_fresh_ids_in_order() {
        let t = parse_term("a | b#0 | c").unwrap();
        assert_eq!(t.to_string(), "a#1 | b#0 | c#2");
    }

    #[test]
    fn mixed_operators_need_parentheses() {
        assert!(parse_term("a | b < c").is_err());
        assert!(parse_term("(a | b) < c").is_ok());
    }

    #[test]
    fn unicode_syntax() {
        let a = parse_term("(a ℘ a⊥) ⊗ (b ◁ c)").unwrap();
        let b = parse_term("(a | a^) * (b < c)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn duplicate_ids_rejected() {
        assert_eq!(parse_term("a#1 | b#1"), Err(TermError::DuplicateId(1)));
    }

    #[test]
    fn formula_leaves_round_trip() {
        for s in ["[a#0 < (b#1 * c#2)] | d#3", "[(a#0 | b#1) | c#2]", "a^#0 < [b#1 < c#2]"] {
            let t = parse_term(s).unwrap();
            assert_eq!(parse_term(&t.to_string()).unwrap(), t, "{s}");
        }
        let f = parse_formula("a | b | c").unwrap();
        assert_eq!(f.to_string(), "(a#0 | b#1) | c#2");
    }

    #[test]
    fn printer_is_canonical() {
        let t = parse_term("c#2 * ((b#1 < a#0) | d#3)").unwrap();
        assert_eq!(t.to_string(), "c#2 * (d#3 | (b#1 < a#0))");
        let u = parse_term("((d#3 | (b#1 < a#0))) * c#2").unwrap();
        assert_eq!(t.to_string(), u.to_string());
        assert_eq!(t.plain().to_string(), "c * (d | (b < a))");
    }

    #[test]
    fn errors_report_offset() {
        match parse_term("a | ") {
            Err(TermError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_term("a#").is_err());
        assert!(parse_term("(a | b").is_err());
    }
}
