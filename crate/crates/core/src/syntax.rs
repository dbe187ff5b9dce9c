//! Text formats for grammars, formulas and proofs.
//!
//! ```text
//! llg {
//!   alphabet: "John" "leaves";
//!   literal NP : lr;
//!   literal S : lr;
//!   start S;
//!   axiom JOHN : NP = { edge 1 "John" 2; }
//!   axiom LEAVES : NP -> S = { edge 1 "" 4; edge 3 "leaves" 2; }
//! }
//! ```
//!
//! Formulas use `A^` for negation, `*` for tensor, `@` for par and `A -> B`
//! for `A^ @ B`. Words are quoted and space separated; `""` is the empty
//! word. Comments run from `#` or `//` to the end of the line.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::acg::{self, Acg, LinType, LinearSignature, SignatureInterpretation, SignatureMap, Term};
use crate::category::Cowordism;
use crate::error::{Error, Result};
use crate::llg::{CowordismSignature, Llg};
use crate::mcfg::{Arg, CowProduction, CowordismCfg, Mcfg, Production};
use crate::mll::{self, Formula, MllProof};
use crate::multiword::{Boundary, CyclicWord, Edge, Multiword, Symbol, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Num(usize),
    Str(String),
    Punct(&'static str),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const PUNCT: [&str; 15] = ["->", "<-", "{", "}", "(", ")", ";", ":", ",", "=", "^", "*", "@", "\\", "."];

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            bump(c, &mut line, &mut col);
            i += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let (l0, c0) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, column: c0 });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| syntax(l0, c0, format!("number {s} is too large")))?;
            out.push(Token { tok: Tok::Num(n), line: l0, column: c0 });
            continue;
        }
        if c == '"' {
            let mut s = String::new();
            i += 1;
            col += 1;
            loop {
                let Some(&d) = chars.get(i) else { return Err(syntax(l0, c0, "unterminated string")) };
                i += 1;
                bump(d, &mut line, &mut col);
                match d {
                    '"' => break,
                    '\\' => {
                        let Some(&e) = chars.get(i) else { return Err(syntax(l0, c0, "unterminated string")) };
                        i += 1;
                        bump(e, &mut line, &mut col);
                        s.push(e);
                    }
                    _ => s.push(d),
                }
            }
            out.push(Token { tok: Tok::Str(s), line: l0, column: c0 });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match PUNCT.iter().find(|p| rest.starts_with(**p)) {
            Some(p) => {
                i += p.len();
                col += p.len();
                out.push(Token { tok: Tok::Punct(p), line: l0, column: c0 });
            }
            None => return Err(syntax(l0, c0, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        let toks = lex(text)?;
        let line = text.lines().count().max(1);
        let column = text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
        Ok(Parser { toks, pos: 0, end: (line, column) })
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(syntax(l, c, message))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn at(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn at_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(w)) if w == word)
    }

    fn eat(&mut self, p: &str) -> bool {
        if self.at(p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, p: &str) -> Result<()> {
        if self.eat(p) {
            Ok(())
        } else {
            self.error(format!("expected `{p}`{}", self.found()))
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => ", found end of input".into(),
            Some(Tok::Ident(s)) => format!(", found `{s}`"),
            Some(Tok::Num(n)) => format!(", found `{n}`"),
            Some(Tok::Str(s)) => format!(", found \"{s}\""),
            Some(Tok::Punct(p)) => format!(", found `{p}`"),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        if self.at_ident(word) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected `{word}`{}", self.found()))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.error(format!("expected a name{}", self.found())),
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.error(format!("expected a number{}", self.found())),
        }
    }

    fn string(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.error(format!("expected a quoted word{}", self.found())),
        }
    }

    fn word(&mut self) -> Result<Word> {
        Ok(Word::parse(&self.string()?))
    }

    /// Symbols up to `;`, quoted or bare.
    fn symbol_list(&mut self) -> Result<Vec<Symbol>> {
        let mut out = Vec::new();
        while !self.at(";") {
            match self.peek() {
                Some(Tok::Str(s)) => out.push(Symbol::new(s)),
                Some(Tok::Ident(s)) => out.push(Symbol::new(s)),
                _ => return self.error(format!("expected a symbol{}", self.found())),
            }
            self.pos += 1;
        }
        self.expect(";")?;
        Ok(out)
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            self.error(format!("unexpected input{}", self.found()))
        } else {
            Ok(())
        }
    }

    /// `lr…` polarity strings, or `1` for the empty boundary.
    fn boundary(&mut self) -> Result<Boundary> {
        let (l, c) = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(1)) => {
                self.pos += 1;
                Ok(Boundary::unit())
            }
            Some(Tok::Ident(s)) => {
                if let Some(k) = s.chars().position(|ch| ch != 'l' && ch != 'r') {
                    return Err(syntax(l, c + k, format!("bad polarity {:?} in {s:?}: expected l or r", s.chars().nth(k).unwrap())));
                }
                self.pos += 1;
                Boundary::parse(&s).map_err(|e| syntax(l, c, e.to_string()))
            }
            _ => self.error(format!("expected a polarity string{}", self.found())),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.par_formula()?;
        if self.eat("->") {
            let rhs = self.formula()?;
            return Ok(Formula::lolli(lhs, rhs));
        }
        Ok(lhs)
    }

    fn par_formula(&mut self) -> Result<Formula> {
        let mut f = self.tensor_formula()?;
        while self.eat("@") {
            f = Formula::par(f, self.tensor_formula()?);
        }
        Ok(f)
    }

    fn tensor_formula(&mut self) -> Result<Formula> {
        let mut f = self.atom_formula()?;
        while self.eat("*") {
            f = Formula::tensor(f, self.atom_formula()?);
        }
        Ok(f)
    }

    fn atom_formula(&mut self) -> Result<Formula> {
        let mut f = if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            f
        } else {
            Formula::pos(&self.ident()?)
        };
        while self.eat("^") {
            f = f.negate();
        }
        Ok(f)
    }

    fn proof(&mut self) -> Result<Arc<MllProof>> {
        let rule = self.ident()?;
        let at = if self.eat("@") { Some(self.number()?) } else { None };
        self.expect("(")?;
        let p = match (rule.as_str(), at) {
            ("ID", None) => MllProof::id(self.formula()?),
            ("AX", None) => MllProof::ax(&self.ident()?),
            ("CUT", None) | ("TENSOR", None) => {
                let a = self.proof()?;
                self.expect(",")?;
                let b = self.proof()?;
                if rule == "CUT" {
                    MllProof::cut(a, b)
                } else {
                    MllProof::tensor(a, b)
                }
            }
            ("EX", Some(k)) => MllProof::ex(self.proof()?, k),
            ("PAR", Some(k)) => MllProof::par(self.proof()?, k),
            _ => return self.error(format!("unknown rule {rule}")),
        };
        self.expect(")")?;
        Ok(p)
    }

    /// `{ edge i "w" j; loop "w"; }` on the given boundary.
    fn body(&mut self, boundary: &Boundary) -> Result<Multiword> {
        let (l, c) = self.here();
        self.expect("{")?;
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        while !self.eat("}") {
            if self.at_ident("edge") {
                self.pos += 1;
                let from = self.number()?;
                let w = self.word()?;
                let to = self.number()?;
                edges.push(Edge::new(from, w, to));
            } else if self.at_ident("loop") {
                self.pos += 1;
                loops.push(CyclicWord::new(self.word()?));
            } else {
                return self.error(format!("expected `edge`, `loop` or `}}`{}", self.found()));
            }
            self.expect(";")?;
        }
        Multiword::new(boundary.clone(), edges, loops).map_err(|e| syntax(l, c, e.to_string()))
    }

    fn lin_type(&mut self) -> Result<LinType> {
        let a = if self.eat("(") {
            let t = self.lin_type()?;
            self.expect(")")?;
            t
        } else {
            LinType::atom(&self.ident()?)
        };
        if self.eat("->") {
            return Ok(LinType::arrow(a, self.lin_type()?));
        }
        Ok(a)
    }

    fn term(&mut self, bound: &mut Vec<String>) -> Result<Term> {
        if self.eat("\\") {
            let x = self.ident()?;
            let ty = if self.eat(":") { Some(self.lin_type()?) } else { None };
            self.expect(".")?;
            bound.push(x.clone());
            let body = self.term(bound);
            bound.pop();
            return Ok(Term::Lam(x, ty, Box::new(body?)));
        }
        let mut t = self.term_atom(bound)?;
        while self.at("(") || self.at("\\") || matches!(self.peek(), Some(Tok::Ident(_))) {
            let arg = if self.at("\\") { self.term(bound)? } else { self.term_atom(bound)? };
            t = Term::app(t, arg);
        }
        Ok(t)
    }

    fn term_atom(&mut self, bound: &mut Vec<String>) -> Result<Term> {
        if self.eat("(") {
            let t = self.term(bound)?;
            self.expect(")")?;
            return Ok(t);
        }
        let x = self.ident()?;
        Ok(if bound.contains(&x) { Term::Var(x) } else { Term::Const(x) })
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn quote_word(w: &Word) -> String {
    quote(&w.to_string())
}

fn symbols_line(items: &[Symbol]) -> String {
    items.iter().map(|s| quote(s.as_str())).collect::<Vec<_>>().join(" ")
}

fn boundary_text(b: &Boundary) -> String {
    if b.is_empty() {
        "1".into()
    } else {
        b.to_string()
    }
}

fn write_body(out: &mut String, m: &Multiword) {
    out.push('{');
    for e in m.edges() {
        let _ = write!(out, " edge {} {} {};", e.from, quote_word(&e.label), e.to);
    }
    for c in m.cyclic() {
        let _ = write!(out, " loop {};", quote_word(c.word()));
    }
    out.push_str(" }");
}

pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.done()?;
    Ok(f)
}

pub fn parse_sequent(text: &str) -> Result<Vec<Formula>> {
    let mut p = Parser::new(text)?;
    let mut out = vec![p.formula()?];
    while p.eat(",") {
        out.push(p.formula()?);
    }
    p.done()?;
    Ok(out)
}

/// `CUT(AX(a), EX@1(ID(S)))` and so on.
pub fn parse_proof(text: &str) -> Result<Arc<MllProof>> {
    let mut p = Parser::new(text)?;
    let r = p.proof()?;
    p.done()?;
    Ok(r)
}

pub fn parse_boundary(text: &str) -> Result<Boundary> {
    let mut p = Parser::new(text)?;
    let b = p.boundary()?;
    p.done()?;
    Ok(b)
}

pub fn parse_type(text: &str) -> Result<LinType> {
    let mut p = Parser::new(text)?;
    let t = p.lin_type()?;
    p.done()?;
    Ok(t)
}

/// Names not bound by a `\` are constants.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser::new(text)?;
    let t = p.term(&mut Vec::new())?;
    p.done()?;
    Ok(t)
}

pub fn parse_llg(text: &str) -> Result<Llg> {
    let mut p = Parser::new(text)?;
    let g = llg_block(&mut p)?;
    p.done()?;
    Ok(g)
}

fn llg_block(p: &mut Parser) -> Result<Llg> {
    p.keyword("llg")?;
    p.expect("{")?;
    let mut sig = CowordismSignature::default();
    let mut start = None;
    while !p.eat("}") {
        let (l, c) = p.here();
        match p.ident()?.as_str() {
            "alphabet" => {
                p.expect(":")?;
                sig.alphabet = p.symbol_list()?;
            }
            "literal" => {
                let n = p.ident()?;
                p.expect(":")?;
                let b = p.boundary()?;
                p.expect(";")?;
                if sig.literals.insert(n.clone(), b).is_some() {
                    return Err(syntax(l, c, format!("literal {n} is declared twice")));
                }
            }
            "start" => {
                start = Some(p.ident()?);
                p.expect(";")?;
            }
            "axiom" => {
                let (nl, nc) = p.here();
                let name = p.ident()?;
                if sig.axiom(&name).is_some() {
                    return Err(syntax(nl, nc, format!("axiom {name} is declared twice")));
                }
                p.expect(":")?;
                let mut seq = vec![p.formula()?];
                while p.eat(",") {
                    seq.push(p.formula()?);
                }
                p.expect("=")?;
                let b = mll::interpret_sequent(&seq, &sig.literals).map_err(|e| syntax(nl, nc, e.to_string()))?;
                let body = p.body(&b)?;
                let cow = Cowordism::new(Boundary::unit(), b, body).map_err(|e| syntax(nl, nc, e.to_string()))?;
                sig.add_axiom(&name, seq, cow);
            }
            other => return Err(syntax(l, c, format!("unknown declaration `{other}`"))),
        }
    }
    let start = start.ok_or_else(|| syntax(p.end.0, p.end.1, "missing `start`"))?;
    Ok(Llg { signature: sig, start })
}

pub fn print_llg(g: &Llg) -> String {
    let mut out = String::from("llg {\n");
    let sig = &g.signature;
    if !sig.alphabet.is_empty() {
        let _ = writeln!(out, "  alphabet: {};", symbols_line(&sig.alphabet));
    }
    for (n, b) in &sig.literals {
        let _ = writeln!(out, "  literal {n} : {};", boundary_text(b));
    }
    let _ = writeln!(out, "  start {};", g.start);
    for a in &sig.axioms {
        let seq: Vec<String> = a.sequent.iter().map(|f| f.to_string()).collect();
        let _ = write!(out, "  axiom {} : {} = ", a.name, seq.join(", "));
        write_body(&mut out, a.cowordism.body());
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

pub fn parse_mcfg(text: &str) -> Result<Mcfg> {
    let mut p = Parser::new(text)?;
    let g = mcfg_block(&mut p)?;
    p.done()?;
    Ok(g)
}

fn note_arity(arities: &mut BTreeMap<String, usize>, n: &str, k: usize, at: (usize, usize)) -> Result<()> {
    match arities.get(n) {
        Some(&m) if m != k => Err(syntax(at.0, at.1, format!("{n} is used with {k} arguments but has arity {m}"))),
        _ => {
            arities.insert(n.to_string(), k);
            Ok(())
        }
    }
}

fn mcfg_block(p: &mut Parser) -> Result<Mcfg> {
    p.keyword("mcfg")?;
    p.expect("{")?;
    let mut g = Mcfg::default();
    let mut start = None;
    while !p.eat("}") {
        let at = p.here();
        let name = p.ident()?;
        match name.as_str() {
            "terminals" if p.at(":") => {
                p.expect(":")?;
                g.terminals = p.symbol_list()?;
            }
            "start" if !p.at("(") => {
                start = Some(p.ident()?);
                p.expect(";")?;
            }
            "nonterminal" if !p.at("(") => {
                let at = p.here();
                let n = p.ident()?;
                p.expect(":")?;
                let k = p.number()?;
                p.expect(";")?;
                note_arity(&mut g.nonterminals, &n, k, at)?;
            }
            _ => {
                // head: A(item*, …) with items variables or quoted words
                p.expect("(")?;
                let mut raw: Vec<Vec<(Option<String>, Word, (usize, usize))>> = Vec::new();
                loop {
                    let mut items = Vec::new();
                    while !p.at(",") && !p.at(")") {
                        let here = p.here();
                        match p.peek() {
                            Some(Tok::Ident(_)) => items.push((Some(p.ident()?), Word::empty(), here)),
                            Some(Tok::Str(_)) => items.push((None, p.word()?, here)),
                            _ => return p.error(format!("expected a variable or a quoted word{}", p.found())),
                        }
                    }
                    raw.push(items);
                    if p.eat(")") {
                        break;
                    }
                    p.expect(",")?;
                }
                note_arity(&mut g.nonterminals, &name, raw.len(), at)?;
                p.expect("<-")?;
                let mut body = Vec::new();
                let mut vars: BTreeMap<String, (usize, usize)> = BTreeMap::new();
                if !p.at(";") {
                    loop {
                        let bat = p.here();
                        let b = p.ident()?;
                        p.expect("(")?;
                        let mut k = 0;
                        if !p.at(")") {
                            loop {
                                let vat = p.here();
                                let v = p.ident()?;
                                if vars.insert(v.clone(), (body.len(), k)).is_some() {
                                    return Err(syntax(vat.0, vat.1, format!("variable {v} is bound twice")));
                                }
                                k += 1;
                                if !p.eat(",") {
                                    break;
                                }
                            }
                        }
                        p.expect(")")?;
                        note_arity(&mut g.nonterminals, &b, k, bat)?;
                        body.push(b);
                        if !p.eat(",") {
                            break;
                        }
                    }
                }
                p.expect(";")?;
                let mut args = Vec::new();
                for items in raw {
                    let mut arg = Vec::new();
                    for (v, w, at) in items {
                        match v {
                            Some(v) => {
                                let (j, i) = *vars
                                    .get(&v)
                                    .ok_or_else(|| syntax(at.0, at.1, format!("variable {v} is not bound in the body")))?;
                                arg.push(Arg::Var(j, i));
                            }
                            None => arg.extend(w.symbols().iter().cloned().map(Arg::Term)),
                        }
                    }
                    args.push(arg);
                }
                g.productions.push(Production { head: name, args, body });
            }
        }
    }
    g.start = start.ok_or_else(|| syntax(p.end.0, p.end.1, "missing `start`"))?;
    g.nonterminals.entry(g.start.clone()).or_insert(1);
    Ok(g)
}

fn mcfg_var(j: usize, i: usize) -> String {
    format!("x{}_{}", j + 1, i + 1)
}

pub fn print_mcfg(g: &Mcfg) -> String {
    let mut out = String::from("mcfg {\n");
    if !g.terminals.is_empty() {
        let _ = writeln!(out, "  terminals: {};", symbols_line(&g.terminals));
    }
    let _ = writeln!(out, "  start {};", g.start);
    for (n, k) in &g.nonterminals {
        let _ = writeln!(out, "  nonterminal {n} : {k};");
    }
    for pr in &g.productions {
        let args: Vec<String> = pr
            .args
            .iter()
            .map(|a| {
                // runs of terminals become one quoted word
                let mut parts = Vec::new();
                let mut run: Vec<Symbol> = Vec::new();
                for it in a {
                    match it {
                        Arg::Term(t) => run.push(t.clone()),
                        Arg::Var(j, i) => {
                            if !run.is_empty() {
                                parts.push(quote_word(&Word(std::mem::take(&mut run))));
                            }
                            parts.push(mcfg_var(*j, *i));
                        }
                    }
                }
                if !run.is_empty() || parts.is_empty() {
                    parts.push(quote_word(&Word(run)));
                }
                parts.join(" ")
            })
            .collect();
        let body: Vec<String> = pr
            .body
            .iter()
            .enumerate()
            .map(|(j, b)| {
                let k = g.nonterminals.get(b).copied().unwrap_or(0);
                let vs: Vec<String> = (0..k).map(|i| mcfg_var(j, i)).collect();
                format!("{b}({})", vs.join(", "))
            })
            .collect();
        let arrow = if body.is_empty() { "<-".to_string() } else { format!("<- {}", body.join(", ")) };
        let _ = writeln!(out, "  {}({}) {arrow};", pr.head, args.join(", "));
    }
    out.push_str("}\n");
    out
}

pub fn parse_cowcfg(text: &str) -> Result<CowordismCfg> {
    let mut p = Parser::new(text)?;
    let g = cowcfg_block(&mut p)?;
    p.done()?;
    Ok(g)
}

fn cowcfg_block(p: &mut Parser) -> Result<CowordismCfg> {
    p.keyword("cowcfg")?;
    p.expect("{")?;
    let mut g = CowordismCfg::default();
    let mut start = None;
    while !p.eat("}") {
        let (l, c) = p.here();
        match p.ident()?.as_str() {
            "terminals" => {
                p.expect(":")?;
                g.terminals = p.symbol_list()?;
            }
            "type" => {
                let n = p.ident()?;
                p.expect(":")?;
                let b = p.boundary()?;
                p.expect(";")?;
                g.types.insert(n, b);
            }
            "start" => {
                start = Some(p.ident()?);
                p.expect(";")?;
            }
            "production" => {
                let (nl, nc) = p.here();
                let name = p.ident()?;
                p.expect(":")?;
                let mut inputs = Vec::new();
                while !p.at("->") {
                    inputs.push(p.ident()?);
                    if !p.eat(",") {
                        break;
                    }
                }
                p.expect("->")?;
                let output = p.ident()?;
                p.expect("=")?;
                let carrier = |t: &str| g.types.get(t).cloned().ok_or_else(|| syntax(nl, nc, format!("type {t} is not declared")));
                let ins = inputs.iter().map(|t| carrier(t)).collect::<Result<Vec<_>>>()?;
                let source = Boundary::tensor_all(ins.iter());
                let target = carrier(&output)?;
                let body = p.body(&target.tensor(&source.dual()))?;
                let cowordism = Cowordism::new(source, target, body).map_err(|e| syntax(nl, nc, e.to_string()))?;
                g.productions.push(CowProduction { name, inputs, output, cowordism });
            }
            other => return Err(syntax(l, c, format!("unknown declaration `{other}`"))),
        }
    }
    g.start = start.ok_or_else(|| syntax(p.end.0, p.end.1, "missing `start`"))?;
    Ok(g)
}

pub fn print_cowcfg(g: &CowordismCfg) -> String {
    let mut out = String::from("cowcfg {\n");
    if !g.terminals.is_empty() {
        let _ = writeln!(out, "  terminals: {};", symbols_line(&g.terminals));
    }
    for (n, b) in &g.types {
        let _ = writeln!(out, "  type {n} : {};", boundary_text(b));
    }
    let _ = writeln!(out, "  start {};", g.start);
    for pr in &g.productions {
        let ins = if pr.inputs.is_empty() { String::new() } else { format!("{} ", pr.inputs.join(", ")) };
        let _ = write!(out, "  production {} : {ins}-> {} = ", pr.name, pr.output);
        write_body(&mut out, pr.cowordism.body());
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

/// How an ACG file gave its object signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ObjectSpec {
    /// `Str_T`.
    String(Vec<Symbol>),
    /// `Tree_{N,n}`.
    Tree(Vec<String>, usize),
    /// Atoms with boundaries and constants with cowordisms, written out.
    Explicit,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AcgFile {
    pub acg: Acg,
    pub object: ObjectSpec,
}

pub fn parse_acg(text: &str) -> Result<AcgFile> {
    let mut p = Parser::new(text)?;
    let g = acg_block(&mut p)?;
    p.done()?;
    Ok(g)
}

fn acg_block(p: &mut Parser) -> Result<AcgFile> {
    p.keyword("acg")?;
    p.expect("{")?;
    let mut abs = LinearSignature::default();
    let mut obj = None;
    let mut lexicon = SignatureMap::default();
    let mut start = None;
    while !p.eat("}") {
        let (l, c) = p.here();
        match p.ident()?.as_str() {
            "abstract" => {
                p.expect("{")?;
                while !p.eat("}") {
                    let (l, c) = p.here();
                    match p.ident()?.as_str() {
                        "type" => {
                            abs.atoms.insert(p.ident()?);
                            p.expect(";")?;
                        }
                        "const" => {
                            let n = p.ident()?;
                            p.expect(":")?;
                            abs.constants.insert(n, p.lin_type()?);
                            p.expect(";")?;
                        }
                        other => return Err(syntax(l, c, format!("unknown declaration `{other}`"))),
                    }
                }
            }
            "object" => obj = Some(object_block(p)?),
            "lexicon" => {
                p.expect("{")?;
                while !p.eat("}") {
                    if p.at_ident("type") {
                        p.pos += 1;
                        let a = p.ident()?;
                        p.expect(":")?;
                        p.expect("=")?;
                        lexicon.types.insert(a, p.lin_type()?);
                    } else {
                        let cn = p.ident()?;
                        p.expect(":")?;
                        p.expect("=")?;
                        lexicon.constants.insert(cn, p.term(&mut Vec::new())?);
                    }
                    p.expect(";")?;
                }
            }
            "start" => {
                start = Some(p.ident()?);
                p.expect(";")?;
            }
            other => return Err(syntax(l, c, format!("unknown declaration `{other}`"))),
        }
    }
    let (object_sig, object) = obj.ok_or_else(|| syntax(p.end.0, p.end.1, "missing `object` block"))?;
    let start = start.ok_or_else(|| syntax(p.end.0, p.end.1, "missing `start`"))?;
    Ok(AcgFile { acg: Acg { abstract_sig: abs, object_sig, lexicon, start }, object })
}

fn object_block(p: &mut Parser) -> Result<(LinearSignature, ObjectSpec)> {
    if p.at_ident("string") {
        p.pos += 1;
        p.expect("{")?;
        p.keyword("alphabet")?;
        p.expect(":")?;
        let a = p.symbol_list()?;
        p.expect("}")?;
        return Ok((acg::string_signature(&a), ObjectSpec::String(a)));
    }
    if p.at_ident("tree") {
        p.pos += 1;
        p.expect("{")?;
        p.keyword("labels")?;
        p.expect(":")?;
        let labels: Vec<String> = p.symbol_list()?.iter().map(|s| s.to_string()).collect();
        p.keyword("branching")?;
        p.expect(":")?;
        let n = p.number()?;
        p.expect(";")?;
        p.expect("}")?;
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        return Ok((acg::tree_signature(&refs, n), ObjectSpec::Tree(labels, n)));
    }
    p.expect("{")?;
    let mut sig = LinearSignature::default();
    let mut interp = SignatureInterpretation::default();
    while !p.eat("}") {
        let (l, c) = p.here();
        match p.ident()?.as_str() {
            "type" => {
                let n = p.ident()?;
                p.expect(":")?;
                interp.types.insert(n.clone(), p.boundary()?);
                sig.atoms.insert(n);
                p.expect(";")?;
            }
            "const" => {
                let (nl, nc) = p.here();
                let n = p.ident()?;
                p.expect(":")?;
                let t = p.lin_type()?;
                p.expect("=")?;
                let b = interp.type_boundary(&t).map_err(|e| syntax(nl, nc, e.to_string()))?;
                let body = p.body(&b)?;
                let cow = Cowordism::new(Boundary::unit(), b, body).map_err(|e| syntax(nl, nc, e.to_string()))?;
                interp.constants.insert(n.clone(), cow);
                sig.constants.insert(n, t);
            }
            other => return Err(syntax(l, c, format!("unknown declaration `{other}`"))),
        }
    }
    sig.interpretation = Some(interp);
    Ok((sig, ObjectSpec::Explicit))
}

pub fn print_acg(f: &AcgFile) -> String {
    let g = &f.acg;
    let mut out = String::from("acg {\n  abstract {\n");
    for a in &g.abstract_sig.atoms {
        let _ = writeln!(out, "    type {a};");
    }
    for (c, t) in &g.abstract_sig.constants {
        let _ = writeln!(out, "    const {c} : {t};");
    }
    out.push_str("  }\n");
    match &f.object {
        ObjectSpec::String(a) => {
            let _ = writeln!(out, "  object string {{ alphabet: {}; }}", symbols_line(a));
        }
        ObjectSpec::Tree(labels, n) => {
            let _ = writeln!(out, "  object tree {{ labels: {}; branching: {n}; }}", labels.join(" "));
        }
        ObjectSpec::Explicit => {
            out.push_str("  object {\n");
            let empty = SignatureInterpretation::default();
            let interp = g.object_sig.interpretation.as_ref().unwrap_or(&empty);
            for a in &g.object_sig.atoms {
                let b = interp.types.get(a).map(boundary_text).unwrap_or_default();
                let _ = writeln!(out, "    type {a} : {b};");
            }
            for (c, t) in &g.object_sig.constants {
                let _ = write!(out, "    const {c} : {t} = ");
                if let Some(s) = interp.constants.get(c) {
                    write_body(&mut out, s.body());
                }
                out.push('\n');
            }
            out.push_str("  }\n");
        }
    }
    out.push_str("  lexicon {\n");
    for (a, t) in &g.lexicon.types {
        let _ = writeln!(out, "    type {a} := {t};");
    }
    for (c, t) in &g.lexicon.constants {
        let _ = writeln!(out, "    {c} := {t};");
    }
    let _ = writeln!(out, "  }}\n  start {};\n}}", g.start);
    out
}

/// Any of the four grammar kinds, told apart by the leading keyword.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GrammarFile {
    Llg(Llg),
    Mcfg(Mcfg),
    CowCfg(CowordismCfg),
    Acg(AcgFile),
}

impl GrammarFile {
    pub fn kind(&self) -> &'static str {
        match self {
            GrammarFile::Llg(_) => "llg",
            GrammarFile::Mcfg(_) => "mcfg",
            GrammarFile::CowCfg(_) => "cowcfg",
            GrammarFile::Acg(_) => "acg",
        }
    }

    pub fn validate(&self) -> Vec<String> {
        match self {
            GrammarFile::Llg(g) => g.validate(),
            GrammarFile::Mcfg(g) => g.validate(),
            GrammarFile::CowCfg(g) => g.validate(),
            GrammarFile::Acg(f) => f.acg.validate(),
        }
    }
}

pub fn parse_grammar(text: &str) -> Result<GrammarFile> {
    let mut p = Parser::new(text)?;
    let g = match p.peek() {
        Some(Tok::Ident(k)) if k == "llg" => GrammarFile::Llg(llg_block(&mut p)?),
        Some(Tok::Ident(k)) if k == "mcfg" => GrammarFile::Mcfg(mcfg_block(&mut p)?),
        Some(Tok::Ident(k)) if k == "cowcfg" => GrammarFile::CowCfg(cowcfg_block(&mut p)?),
        Some(Tok::Ident(k)) if k == "acg" => GrammarFile::Acg(acg_block(&mut p)?),
        _ => return p.error(format!("expected `llg`, `mcfg`, `cowcfg` or `acg`{}", p.found())),
    };
    p.done()?;
    Ok(g)
}

pub fn print_grammar(g: &GrammarFile) -> String {
    match g {
        GrammarFile::Llg(g) => print_llg(g),
        GrammarFile::Mcfg(g) => print_mcfg(g),
        GrammarFile::CowCfg(g) => print_cowcfg(g),
        GrammarFile::Acg(f) => print_acg(f),
    }
}

/// Symbols of every label in a lexicon, for filling in a missing alphabet.
pub fn used_symbols(sig: &CowordismSignature) -> Vec<Symbol> {
    let mut s = BTreeSet::new();
    for a in &sig.axioms {
        for e in a.cowordism.body().edges() {
            s.extend(e.label.symbols().iter().cloned());
        }
    }
    s.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_round_trip() {
        for s in ["A", "A^", "A * B", "A @ B * C", "(A @ B) * C^", "A * (B * C)", "A^ @ B @ B^"] {
            let f = parse_formula(s).unwrap();
            assert_eq!(parse_formula(&f.to_string()).unwrap(), f, "{s}");
        }
        assert_eq!(parse_formula("NP -> S").unwrap(), Formula::par(Formula::neg("NP"), Formula::pos("S")));
        assert_eq!(parse_formula("(A * B)^").unwrap(), Formula::par(Formula::neg("A"), Formula::neg("B")));
        assert!(parse_formula("A *").is_err());
    }

    #[test]
    fn proofs_round_trip() {
        let text = "CUT(AX(JOHN), EX@1(PAR@1(TENSOR(ID(S), ID(NP^)))))";
        let p = parse_proof(text).unwrap();
        assert_eq!(p.to_string(), text);
        assert!(parse_proof("EX(AX(a))").is_err());
    }

    #[test]
    fn bad_polarity_is_located() {
        let e = parse_llg("llg {\n  literal NP : lx;\n  start NP;\n}").unwrap_err();
        assert_eq!(e, Error::Syntax { line: 2, column: 17, message: "bad polarity 'x' in \"lx\": expected l or r".into() });
    }

    #[test]
    fn llg_round_trip() {
        let text = r#"
            llg {
              alphabet: "John" "leaves";
              literal NP : lr;
              literal S : lr;  # sentences
              start S;
              axiom JOHN : NP = { edge 1 "John" 2; }
              axiom LEAVES : NP -> S = { edge 1 "" 4; edge 3 "leaves" 2; }
            }"#;
        let g = parse_llg(text).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.signature.axioms[1].sequent.len(), 1);
        let printed = print_llg(&g);
        assert_eq!(parse_llg(&printed).unwrap(), g);
        assert!(parse_llg("llg { start S; axiom A : S = { edge 1 \"a\" 2; } }").is_err());
    }

    #[test]
    fn mcfg_round_trip() {
        let text = r#"
            mcfg {
              terminals: a b;
              start S;
              P("", "") <- ;
              P(x "a", y "b") <- P(x, y);
              S(x z y w) <- P(x, y), P(z, w);
            }"#;
        let g = parse_mcfg(text).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(g.productions[1].args[0], vec![Arg::Var(0, 0), Arg::Term(Symbol::new("a"))]);
        assert_eq!(g.productions[2].args[0], vec![Arg::Var(0, 0), Arg::Var(1, 0), Arg::Var(0, 1), Arg::Var(1, 1)]);
        let printed = print_mcfg(&g);
        assert_eq!(parse_mcfg(&printed).unwrap(), g);
        assert!(parse_mcfg("mcfg { start S; S(x) <- P(x, y); P(x) <- ; }").is_err());
    }

    #[test]
    fn cowcfg_round_trip() {
        let g = crate::mcfg::mcfg_to_cowcfg(
            &parse_mcfg(r#"mcfg { start S; P("a", "b") <- ; S(x y) <- P(x, y); }"#).unwrap(),
        )
        .unwrap();
        let printed = print_cowcfg(&g);
        assert_eq!(parse_cowcfg(&printed).unwrap(), g);
    }

    #[test]
    fn acg_round_trip() {
        let text = r#"
            acg {
              abstract { type S; const z : S; const f : S -> S; }
              object string { alphabet: a b; }
              lexicon {
                type S := O -> O;
                z := \x. x;
                f := \g. \x. a (g (b x));
              }
              start S;
            }"#;
        let f = parse_acg(text).unwrap();
        assert!(f.acg.validate().is_empty(), "{:?}", f.acg.validate());
        assert_eq!(parse_acg(&print_acg(&f)).unwrap(), f);
        let explicit = AcgFile { object: ObjectSpec::Explicit, ..f.clone() };
        assert_eq!(parse_acg(&print_acg(&explicit)).unwrap().acg, f.acg);
    }

    #[test]
    fn terms_parse_with_binders() {
        let t = parse_term(r"\x : O. a (b x)").unwrap();
        assert_eq!(t.to_string(), r"\x : O. a (b x)");
        assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        let app = parse_term(r"(\x. x) c").unwrap();
        assert_eq!(app, Term::app(Term::lam("x", Term::var("x")), Term::constant("c")));
    }
}
