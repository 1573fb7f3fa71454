//! Concrete syntax for group-ring elements.
//!
//! ```text
//! element     := term ("+" term)* | "0"
//! term        := signed-int ring-symbol "*" basis
//! ring-symbol := "j" digits? | ""
//! basis       := "g(" int ("," int)* ")" | "g" int
//! ```
//!
//! Whitespace may separate tokens. `g<i>` is the one-based legacy label.

use num_bigint::BigInt;

use super::DslError;
use crate::groupring::{Element, GroupRing};
use crate::ngroup::NaryGroup;

/// Group key literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Indices(Vec<u64>),
    Legacy(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermExpr {
    pub coeff: BigInt,
    pub symbol: String,
    pub symbol_offset: usize,
    pub basis: Basis,
    pub basis_offset: usize,
}

/// Parsed formal sum, before checking it against a context.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ElementExpr {
    pub terms: Vec<TermExpr>,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let found = match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        };
        DslError::Parse { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &[&str]) -> Result<(), DslError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn digits(&mut self) -> &'a str {
        let rest = &self.src[self.pos..];
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        self.pos += n;
        &rest[..n]
    }

    fn uint(&mut self, expected: &[&str]) -> Result<u64, DslError> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error(expected));
        }
        d.parse().map_err(|_| DslError::Parse {
            offset: start,
            expected: vec!["integer below 2^64".into()],
            found: d.to_string(),
        })
    }
}

fn basis(c: &mut Cursor<'_>) -> Result<Basis, DslError> {
    if !c.eat('g') {
        return Err(c.error(&["`g`"]));
    }
    c.skip_ws();
    if !c.eat('(') {
        return Ok(Basis::Legacy(c.uint(&["`(`", "integer"])?));
    }
    let mut idx = vec![c.uint(&["integer"])?];
    loop {
        c.skip_ws();
        if c.eat(')') {
            return Ok(Basis::Indices(idx));
        }
        c.expect(',', &["`,`", "`)`"])?;
        idx.push(c.uint(&["integer"])?);
    }
}

fn term(c: &mut Cursor<'_>) -> Result<TermExpr, DslError> {
    c.skip_ws();
    let negative = if c.eat('-') {
        true
    } else {
        c.eat('+');
        false
    };
    c.skip_ws();
    let d = c.digits();
    if d.is_empty() {
        return Err(c.error(&["integer"]));
    }
    let magnitude: BigInt = d.parse().expect("ascii digits");
    let coeff = if negative { -magnitude } else { magnitude };
    c.skip_ws();
    let symbol_offset = c.pos;
    let symbol = if c.eat('j') { format!("j{}", c.digits()) } else { String::new() };
    c.expect('*', &["ring symbol", "`*`"])?;
    c.skip_ws();
    let basis_offset = c.pos;
    let basis = basis(c)?;
    Ok(TermExpr { coeff, symbol, symbol_offset, basis, basis_offset })
}

/// Parses an element without reference to a context.
pub fn parse_element(text: &str) -> Result<ElementExpr, DslError> {
    if text.trim() == "0" {
        return Ok(ElementExpr::default());
    }
    let mut c = Cursor::new(text);
    let mut terms = vec![term(&mut c)?];
    loop {
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(ElementExpr { terms });
        }
        if !c.eat('+') {
            return Err(c.error(&["`+`", "end of input"]));
        }
        terms.push(term(&mut c)?);
    }
}

/// Parses a bare group key such as `g(1,2)` or `g5`.
pub fn parse_basis(text: &str) -> Result<Basis, DslError> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    let b = basis(&mut c)?;
    c.skip_ws();
    if c.peek().is_some() {
        return Err(c.error(&["end of input"]));
    }
    Ok(b)
}

/// Parses whitespace-separated group keys, e.g. `g(0,0) g5`.
pub fn parse_basis_list(text: &str) -> Result<Vec<Basis>, DslError> {
    let mut c = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(out);
        }
        out.push(basis(&mut c)?);
    }
}

/// Resolves a basis literal in `group`.
pub fn lower_basis<G: NaryGroup>(group: &G, b: &Basis) -> Result<G::Elem, DslError> {
    match b {
        Basis::Indices(idx) => group.key_from_indices(idx),
        Basis::Legacy(i) => group.key_from_legacy(*i),
    }
    .map_err(|e| DslError::KeyRange(e.to_string()))
}

/// Checks a parsed element against the ring symbol and group of `gr`.
pub fn lower<G: NaryGroup>(gr: &GroupRing<G>, expr: &ElementExpr) -> Result<Element<G>, DslError> {
    let symbol = gr.ring().symbol();
    let mut terms = Vec::with_capacity(expr.terms.len());
    for t in &expr.terms {
        if t.symbol != symbol {
            let expected = if symbol.is_empty() { "`*`".to_string() } else { format!("ring symbol `{symbol}`") };
            return Err(DslError::Parse {
                offset: t.symbol_offset,
                expected: vec![expected],
                found: if t.symbol.is_empty() { "`*`".into() } else { format!("`{}`", t.symbol) },
            });
        }
        let key = lower_basis(gr.group(), &t.basis)?;
        terms.push((key, gr.ring().scalar(t.coeff.clone())));
    }
    Ok(gr.from_terms(terms)?)
}

/// Parses and lowers in one step.
pub fn parse_in<G: NaryGroup>(gr: &GroupRing<G>, text: &str) -> Result<Element<G>, DslError> {
    lower(gr, &parse_element(text)?)
}

/// Canonical rendering; `parse_in` inverts it.
pub fn print_canonical<G: NaryGroup>(gr: &GroupRing<G>, x: &Element<G>) -> String {
    gr.format(x)
}
