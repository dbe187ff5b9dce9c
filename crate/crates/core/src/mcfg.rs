//! Multiple context-free grammars, context-free cowordism grammars and the
//! translations between them and linear logic grammars.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{self as cat, Cowordism};
use crate::error::{Error, Result};
use crate::llg::{strip_pars, CowordismSignature, Llg};
use crate::mll::{Formula, Interpretation};
use crate::multiword::{Boundary, Edge, Multiword, Symbol, Word};

/// One item of a production head: a terminal or the `i`-th argument of the
/// `j`-th body predicate (both 0-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Arg {
    Term(Symbol),
    Var(usize, usize),
}

/// `B₁(…),…,Bₙ(…) ⊢ A(s₁,…,s_k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Production {
    pub head: String,
    pub args: Vec<Vec<Arg>>,
    pub body: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Mcfg {
    pub nonterminals: BTreeMap<String, usize>,
    pub terminals: Vec<Symbol>,
    pub start: String,
    pub productions: Vec<Production>,
}

impl Mcfg {
    pub fn arity(&self, name: &str) -> Option<usize> {
        self.nonterminals.get(name).copied()
    }

    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.arity(&self.start) {
            Some(1) => {}
            Some(k) => out.push(format!("start symbol {} has arity {k}, not 1", self.start)),
            None => out.push(format!("start symbol {} is not declared", self.start)),
        }
        for (n, &k) in &self.nonterminals {
            if k == 0 {
                out.push(format!("nonterminal {n} has arity 0"));
            }
        }
        for (pi, p) in self.productions.iter().enumerate() {
            let at = format!("production {}", pi + 1);
            match self.arity(&p.head) {
                Some(k) if k != p.args.len() => {
                    out.push(format!("{at}: {} expects {k} arguments, got {}", p.head, p.args.len()))
                }
                None => out.push(format!("{at}: unknown nonterminal {}", p.head)),
                _ => {}
            }
            let mut seen = HashSet::new();
            for (j, b) in p.body.iter().enumerate() {
                let Some(k) = self.arity(b) else {
                    out.push(format!("{at}: unknown nonterminal {b}"));
                    continue;
                };
                for i in 0..k {
                    let n = p.args.iter().flatten().filter(|a| **a == Arg::Var(j, i)).count();
                    if n != 1 {
                        out.push(format!("{at}: variable {i} of {b} occurs {n} times in the head"));
                    }
                    seen.insert((j, i));
                }
            }
            for a in p.args.iter().flatten() {
                match a {
                    Arg::Var(j, i) if !seen.contains(&(*j, *i)) => {
                        out.push(format!("{at}: head uses an unbound variable"));
                    }
                    Arg::Term(t) if !self.terminals.is_empty() && !self.terminals.contains(t) => {
                        out.push(format!("{at}: {t} is not a terminal"));
                    }
                    _ => {}
                }
            }
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(Error::Grammar(d.join("; ")))
        }
    }
}

/// `C(s₁,…,s_k)` with words as arguments.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PredicateFormula {
    pub predicate: String,
    pub args: Vec<Word>,
}

impl PredicateFormula {
    pub fn new(predicate: &str, args: Vec<Word>) -> PredicateFormula {
        PredicateFormula { predicate: predicate.to_string(), args }
    }

    pub fn total_len(&self) -> usize {
        self.args.iter().map(Word::len).sum()
    }
}

impl fmt::Display for PredicateFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.predicate)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Fills a head with the argument words of the body formulas.
pub fn substitute(p: &Production, body: &[&[Word]]) -> Vec<Word> {
    p.args
        .iter()
        .map(|s| {
            let mut w = Vec::new();
            for a in s {
                match a {
                    Arg::Term(t) => w.push(t.clone()),
                    Arg::Var(j, i) => w.extend_from_slice(body[*j][*i].symbols()),
                }
            }
            Word(w)
        })
        .collect()
}

/// Calls `f` on every tuple `t` with `t[i] < sizes[i]` in which at least one
/// position is at or past `fresh[i]`. With no positions, calls `f` once if
/// `first` is set.
fn fresh_tuples(sizes: &[usize], fresh: &[usize], first: bool, f: &mut dyn FnMut(&[usize])) {
    let n = sizes.len();
    if n == 0 {
        if first {
            f(&[]);
        }
        return;
    }
    for d in 0..n {
        let lo: Vec<usize> = (0..n).map(|i| if i == d { fresh[i] } else { 0 }).collect();
        let hi: Vec<usize> = (0..n).map(|i| if i < d { fresh[i] } else { sizes[i] }).collect();
        if (0..n).any(|i| lo[i] >= hi[i]) {
            continue;
        }
        let mut t = lo.clone();
        loop {
            f(&t);
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                t[i] += 1;
                if t[i] < hi[i] {
                    break;
                }
                t[i] = lo[i];
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX {
                break;
            }
        }
    }
}

/// Derivable formulas whose total argument length is at most `bound`.
pub fn mcfg_derive(g: &Mcfg, bound: usize) -> BTreeSet<PredicateFormula> {
    let names: Vec<&String> = g.nonterminals.keys().collect();
    let index = |n: &str| names.iter().position(|m| *m == n);
    let mut all: Vec<Vec<Vec<Word>>> = vec![Vec::new(); names.len()];
    let mut seen: HashSet<(usize, Vec<Word>)> = HashSet::new();
    let mut fresh = vec![0; names.len()];
    let mut first = true;
    loop {
        let sizes: Vec<usize> = all.iter().map(Vec::len).collect();
        let mut found = Vec::new();
        for p in &g.productions {
            let (Some(h), Some(body)) = (index(&p.head), p.body.iter().map(|b| index(b)).collect::<Option<Vec<_>>>())
            else {
                continue;
            };
            let bs: Vec<usize> = body.iter().map(|&b| sizes[b]).collect();
            let bf: Vec<usize> = body.iter().map(|&b| fresh[b]).collect();
            fresh_tuples(&bs, &bf, first, &mut |t| {
                let args: Vec<&[Word]> = t.iter().zip(&body).map(|(&x, &b)| all[b][x].as_slice()).collect();
                let head = substitute(p, &args);
                if head.iter().map(Word::len).sum::<usize>() <= bound {
                    found.push((h, head));
                }
            });
        }
        fresh = sizes;
        first = false;
        let mut grew = false;
        for (h, head) in found {
            if seen.insert((h, head.clone())) {
                all[h].push(head);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let mut out = BTreeSet::new();
    for (h, forms) in all.into_iter().enumerate() {
        for args in forms {
            out.insert(PredicateFormula { predicate: names[h].clone(), args });
        }
    }
    out
}

pub fn mcfg_language(g: &Mcfg, bound: usize) -> BTreeSet<Word> {
    mcfg_derive(g, bound)
        .into_iter()
        .filter(|f| f.predicate == g.start && f.args.len() == 1)
        .map(|mut f| f.args.remove(0))
        .collect()
}

/// `[C]`: `2k` points, left at the odd positions.
pub fn carrier(k: usize) -> Result<Boundary> {
    if k == 0 {
        return Err(Error::Grammar("predicates have non-zero arity".into()));
    }
    let left: Vec<usize> = (0..k).map(|i| 2 * i + 1).collect();
    Boundary::new(2 * k, &left)
}

/// `Pat(C)`: edges `(2i−1, ε, 2i)`.
pub fn predicate_pattern(k: usize) -> Result<Cowordism> {
    let b = carrier(k)?;
    let edges = (1..=k).map(|i| Edge::eps(2 * i - 1, 2 * i)).collect();
    Cowordism::from_edges(Boundary::unit(), b, edges, vec![])
}

/// `[C(s₁,…,s_k)]`: edges `(2i−1, s_i, 2i)`.
pub fn represent_formula(f: &PredicateFormula) -> Result<Cowordism> {
    represent_words(&f.args)
}

/// Edges `(2i−1, args_i, 2i)` on the carrier of arity `args.len()`.
pub fn represent_words(args: &[Word]) -> Result<Cowordism> {
    let b = carrier(args.len())?;
    let edges = args.iter().enumerate().map(|(i, w)| Edge::new(2 * i + 1, w.clone(), 2 * i + 2)).collect();
    Cowordism::from_edges(Boundary::unit(), b, edges, vec![])
}

/// Variables as letters of an extended alphabet. The NUL prefix keeps them
/// apart from any terminal a grammar file can spell.
pub fn var_symbol(j: usize, i: usize) -> Symbol {
    Symbol::new(&format!("\u{0}{j}.{i}"))
}

pub fn var_of(s: &Symbol) -> Option<(usize, usize)> {
    let rest = s.as_str().strip_prefix('\u{0}')?;
    let (j, i) = rest.split_once('.')?;
    Some((j.parse().ok()?, i.parse().ok()?))
}

/// `[B(x₁,…,x_k)]` for body position `j`.
fn variable_formula(j: usize, k: usize) -> Result<Cowordism> {
    let args: Vec<Word> = (0..k).map(|i| Word(vec![var_symbol(j, i)])).collect();
    represent_words(&args)
}

/// `[p]: [B₁]⊗…⊗[Bₙ] → [A]`. The body boundary is `[A]⊗[B]⊥`, so a point
/// `q` of `[B]` sits at `2k+|B|+1−q`.
pub fn represent_production(g: &Mcfg, p: &Production) -> Result<Cowordism> {
    let k = p.args.len();
    let target = carrier(k)?;
    let mut blocks = Vec::new();
    let mut offsets = Vec::new();
    let mut total = 0;
    for b in &p.body {
        let kb = g.arity(b).ok_or_else(|| Error::Grammar(format!("unknown nonterminal {b}")))?;
        offsets.push(total);
        blocks.push(carrier(kb)?);
        total += 2 * kb;
    }
    let source = Boundary::tensor_all(blocks.iter());
    let mirror = |q: usize| 2 * k + total + 1 - q;
    let l = |j: usize, i: usize| mirror(offsets[j] + 2 * i + 1);
    let r = |j: usize, i: usize| mirror(offsets[j] + 2 * i + 2);
    let mut edges = Vec::new();
    for (m, s) in p.args.iter().enumerate() {
        let mut from = 2 * m + 1;
        let mut label = Vec::new();
        for a in s {
            match a {
                Arg::Term(t) => label.push(t.clone()),
                Arg::Var(j, i) => {
                    if *j >= p.body.len() {
                        return Err(Error::Grammar("head variable out of range".into()));
                    }
                    edges.push(Edge::new(from, Word(std::mem::take(&mut label)), l(*j, *i)));
                    from = r(*j, *i);
                }
            }
        }
        edges.push(Edge::new(from, Word(label), 2 * m + 2));
    }
    Cowordism::from_edges(source, target, edges, vec![])
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CowProduction {
    pub name: String,
    pub inputs: Vec<String>,
    pub output: String,
    pub cowordism: Cowordism,
}

/// Context-free cowordism grammar.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CowordismCfg {
    pub types: BTreeMap<String, Boundary>,
    pub terminals: Vec<Symbol>,
    pub start: String,
    pub productions: Vec<CowProduction>,
}

impl CowordismCfg {
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.types.get(&self.start) {
            Some(b) if *b == Boundary::standard() => {}
            Some(b) => out.push(format!("sentence type {} has carrier {b}, not lr", self.start)),
            None => out.push(format!("sentence type {} is not declared", self.start)),
        }
        for p in &self.productions {
            let carriers: Option<Vec<&Boundary>> = p.inputs.iter().map(|t| self.types.get(t)).collect();
            let (Some(ins), Some(o)) = (carriers, self.types.get(&p.output)) else {
                out.push(format!("production {} uses an undeclared type", p.name));
                continue;
            };
            let src = Boundary::tensor_all(ins);
            if p.cowordism.source() != &src || p.cowordism.target() != o {
                out.push(format!(
                    "production {}: cowordism {} -> {} does not match {src} -> {o}",
                    p.name,
                    p.cowordism.source(),
                    p.cowordism.target()
                ));
            }
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        let d = self.validate();
        if d.is_empty() {
            Ok(())
        } else {
            Err(Error::Grammar(d.join("; ")))
        }
    }

    fn type_index(&self) -> (Vec<&String>, BTreeMap<&str, usize>) {
        let names: Vec<&String> = self.types.keys().collect();
        let idx = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        (names, idx)
    }
}

/// `P' = {[p] | p ∈ P}` over the carriers of the nonterminals.
pub fn mcfg_to_cowcfg(g: &Mcfg) -> Result<CowordismCfg> {
    g.check()?;
    let mut types = BTreeMap::new();
    for (n, &k) in &g.nonterminals {
        types.insert(n.clone(), carrier(k)?);
    }
    let productions = g
        .productions
        .iter()
        .enumerate()
        .map(|(i, p)| {
            Ok(CowProduction {
                name: format!("p{}", i + 1),
                inputs: p.body.clone(),
                output: p.head.clone(),
                cowordism: represent_production(g, p)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CowordismCfg { types, terminals: g.terminals.clone(), start: g.start.clone(), productions })
}

/// Least fixpoint of the productions on regular points, per type. `keep`
/// filters and may rewrite each new point (erasing labels, bounding size).
fn closure(g: &CowordismCfg, keep: &dyn Fn(Multiword) -> Option<Multiword>) -> BTreeMap<String, BTreeSet<Multiword>> {
    let (names, idx) = g.type_index();
    let mut all: Vec<Vec<Multiword>> = vec![Vec::new(); names.len()];
    let mut seen: Vec<HashSet<Multiword>> = vec![HashSet::new(); names.len()];
    let mut fresh = vec![0; names.len()];
    let mut first = true;
    let prods: Vec<(usize, Vec<usize>, &CowProduction)> = g
        .productions
        .iter()
        .filter_map(|p| {
            let o = *idx.get(p.output.as_str())?;
            let ins = p.inputs.iter().map(|t| idx.get(t.as_str()).copied()).collect::<Option<Vec<_>>>()?;
            Some((o, ins, p))
        })
        .collect();
    loop {
        let sizes: Vec<usize> = all.iter().map(Vec::len).collect();
        let mut found = Vec::new();
        for (o, ins, p) in &prods {
            let bs: Vec<usize> = ins.iter().map(|&b| sizes[b]).collect();
            let bf: Vec<usize> = ins.iter().map(|&b| fresh[b]).collect();
            fresh_tuples(&bs, &bf, first, &mut |t| {
                let args: Vec<Cowordism> =
                    t.iter().zip(ins).map(|(&x, &b)| Cowordism::point(all[b][x].clone())).collect();
                if let Ok(c) = cat::compose(&cat::tensor_all(&args), &p.cowordism) {
                    let body = c.into_body();
                    if body.is_regular() {
                        if let Some(b) = keep(body) {
                            found.push((*o, b));
                        }
                    }
                }
            });
        }
        fresh = sizes;
        first = false;
        let mut grew = false;
        for (o, b) in found {
            if seen[o].insert(b.clone()) {
                all[o].push(b);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    names.into_iter().cloned().zip(all.into_iter().map(|v| v.into_iter().collect())).collect()
}

/// Regular generated points of each type with at most `max_label` letters.
/// Letters are never lost in composition, so the bound is exact.
pub fn cowcfg_generate(g: &CowordismCfg, max_label: usize) -> BTreeMap<String, BTreeSet<Multiword>> {
    closure(g, &|b| (b.label_length() <= max_label).then_some(b))
}

pub fn cowcfg_language(g: &CowordismCfg, max_len: usize) -> BTreeSet<Word> {
    cowcfg_generate(g, max_len)
        .remove(&g.start)
        .unwrap_or_default()
        .into_iter()
        .filter_map(|b| b.edges().first().map(|e| e.label.clone()))
        .collect()
}

/// `Patt(A)`, computed with labels erased so the fixpoint is finite.
pub fn possible_patterns(g: &CowordismCfg) -> BTreeMap<String, BTreeSet<Multiword>> {
    let erased = CowordismCfg {
        productions: g
            .productions
            .iter()
            .map(|p| CowProduction { cowordism: p.cowordism.pattern(), ..p.clone() })
            .collect(),
        ..g.clone()
    };
    closure(&erased, &|b| Some(b.pattern()))
}

pub fn is_simple(g: &CowordismCfg) -> bool {
    possible_patterns(g).values().all(|p| p.len() <= 1)
}

fn fresh_name(base: &str, k: usize, taken: &BTreeSet<String>) -> String {
    let mut n = format!("{base}_{k}");
    while taken.contains(&n) {
        n.push('_');
    }
    n
}

/// Splits each type by its possible patterns. Types with one pattern keep
/// their name.
pub fn simplify(g: &CowordismCfg) -> CowordismCfg {
    let patt = possible_patterns(g);
    let start_patterns = patt.get(&g.start).cloned().unwrap_or_default();
    let mut out = CowordismCfg {
        types: BTreeMap::new(),
        terminals: g.terminals.clone(),
        start: g.start.clone(),
        productions: Vec::new(),
    };
    if start_patterns.is_empty() {
        out.types.insert(g.start.clone(), g.types.get(&g.start).cloned().unwrap_or_else(Boundary::standard));
        return out;
    }
    let taken: BTreeSet<String> = g.types.keys().cloned().collect();
    // (type, pattern) → new name
    let mut names: BTreeMap<(String, Multiword), String> = BTreeMap::new();
    for (t, ps) in &patt {
        for (k, p) in ps.iter().enumerate() {
            let n = if ps.len() == 1 { t.clone() } else { fresh_name(t, k + 1, &taken) };
            out.types.insert(n.clone(), g.types[t].clone());
            names.insert((t.clone(), p.clone()), n);
        }
    }
    let start_pattern = start_patterns.into_iter().next().expect("non-empty");
    out.start = names[&(g.start.clone(), start_pattern)].clone();
    for p in &g.productions {
        let choices: Vec<Vec<&Multiword>> =
            p.inputs.iter().map(|t| patt.get(t).map(|s| s.iter().collect()).unwrap_or_default()).collect();
        let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
        let zeros = vec![0; sizes.len()];
        let erased = p.cowordism.pattern();
        let mut variant = 0;
        fresh_tuples(&sizes, &zeros, true, &mut |t| {
            let args: Vec<Cowordism> = t.iter().zip(&choices).map(|(&x, c)| Cowordism::point(c[x].clone())).collect();
            let Ok(c) = cat::compose(&cat::tensor_all(&args), &erased) else { return };
            if !c.is_regular() {
                return;
            }
            let Some(out_name) = names.get(&(p.output.clone(), c.body().clone())) else { return };
            variant += 1;
            out.productions.push(CowProduction {
                name: if sizes.iter().product::<usize>() == 1 { p.name.clone() } else { format!("{}_{variant}", p.name) },
                inputs: t.iter().zip(&p.inputs).zip(&choices).map(|((&x, i), c)| names[&(i.clone(), c[x].clone())].clone()).collect(),
                output: out_name.clone(),
                cowordism: p.cowordism.clone(),
            });
        });
    }
    out
}

/// `ρ_A: [A] → [A]'` and `τ_A: [A]' → [A]` for a regular pattern on `[A]`,
/// where `[A]'` has its left points at the odd positions.
pub fn normalizers(pattern: &Multiword) -> Result<(Cowordism, Cowordism)> {
    let a = pattern.boundary().clone();
    let k = pattern.edges().len();
    let primed = if k == 0 { Boundary::unit() } else { carrier(k)? };
    let n = 4 * k;
    let mut rho = Vec::new();
    let mut tau = Vec::new();
    for (alpha, e) in (1..=k).zip(pattern.edges()) {
        let (i, j) = (e.from, e.to);
        rho.push(Edge::eps(2 * alpha - 1, n - i + 1));
        rho.push(Edge::eps(n - j + 1, 2 * alpha));
        tau.push(Edge::eps(i, n - 2 * alpha + 2));
        tau.push(Edge::eps(n + 1 - 2 * alpha, j));
    }
    Ok((
        Cowordism::from_edges(a.clone(), primed.clone(), rho, vec![])?,
        Cowordism::from_edges(primed, a, tau, vec![])?,
    ))
}

/// Reads a simple grammar back as an MCFG, after normalising every carrier
/// so that its pattern is `(2α−1, ε, 2α)`.
pub fn cowcfg_to_mcfg(g: &CowordismCfg) -> Result<Mcfg> {
    let patt = possible_patterns(g);
    if patt.values().any(|p| p.len() > 1) {
        return Err(Error::Grammar("cowordism grammar is not simple".into()));
    }
    let live: BTreeMap<&String, &Multiword> =
        patt.iter().filter_map(|(t, p)| p.iter().next().map(|m| (t, m))).collect();
    let mut norm = BTreeMap::new();
    let mut g_out = Mcfg { terminals: g.terminals.clone(), start: g.start.clone(), ..Default::default() };
    for (t, p) in &live {
        let k = p.edges().len();
        if k == 0 {
            return Err(Error::Grammar(format!("type {t} has an empty carrier")));
        }
        norm.insert((*t).clone(), normalizers(p)?);
        g_out.nonterminals.insert((*t).clone(), k);
    }
    if !g_out.nonterminals.contains_key(&g.start) {
        g_out.nonterminals.insert(g.start.clone(), 1);
    }
    for p in &g.productions {
        if !live.contains_key(&p.output) || p.inputs.iter().any(|t| !live.contains_key(t)) {
            continue;
        }
        let taus: Vec<Cowordism> = p.inputs.iter().map(|t| norm[t].1.clone()).collect();
        let sigma = cat::compose_all(&[cat::tensor_all(&taus), p.cowordism.clone(), norm[&p.output].0.clone()])?;
        let vars = p
            .inputs
            .iter()
            .enumerate()
            .map(|(j, t)| variable_formula(j, g_out.nonterminals[t]))
            .collect::<Result<Vec<_>>>()?;
        let t = cat::compose(&cat::tensor_all(&vars), &sigma)?;
        if !t.is_regular() {
            continue;
        }
        let k = g_out.nonterminals[&p.output];
        let mut args = vec![Vec::new(); k];
        for e in t.body().edges() {
            if e.from % 2 == 0 || e.to != e.from + 1 {
                return Err(Error::Grammar(format!("production {} does not normalise", p.name)));
            }
            args[(e.from - 1) / 2] = e
                .label
                .symbols()
                .iter()
                .map(|s| match var_of(s) {
                    Some((j, i)) => Arg::Var(j, i),
                    None => Arg::Term(s.clone()),
                })
                .collect();
        }
        g_out.productions.push(Production { head: p.output.clone(), args, body: p.inputs.clone() });
    }
    Ok(g_out)
}

/// Type name for a literal: `A` or `A^`.
fn literal_type(f: &Formula) -> Option<String> {
    match f {
        Formula::Pos(n) => Some(n.clone()),
        Formula::Neg(n) => Some(format!("{n}^")),
        _ => None,
    }
}

fn type_formula(t: &str) -> Formula {
    match t.strip_suffix('^') {
        Some(base) => Formula::neg(base),
        None => Formula::pos(t),
    }
}

/// Lexicon entries `⌈σ⌉ / ⊢A₁⊥,…,Aₙ⊥,A`, one per production.
pub fn cowcfg_to_llg(g: &CowordismCfg) -> Result<Llg> {
    g.check()?;
    let mut literals = Interpretation::new();
    for (t, b) in &g.types {
        let (base, carrier) = match t.strip_suffix('^') {
            Some(base) => (base.to_string(), b.dual()),
            None => (t.clone(), b.clone()),
        };
        if let Some(prev) = literals.get(&base) {
            if *prev != carrier {
                return Err(Error::Grammar(format!("types {base} and {base}^ are not dual")));
            }
        }
        literals.insert(base, carrier);
    }
    let mut sig = CowordismSignature { literals, alphabet: g.terminals.clone(), axioms: Vec::new() };
    for p in &g.productions {
        let mut seq: Vec<Formula> = p.inputs.iter().map(|t| type_formula(t).negate()).collect();
        seq.push(type_formula(&p.output));
        sig.add_axiom(&p.name, seq, cat::name(&p.cowordism));
    }
    Ok(Llg { signature: sig, start: g.start.clone() })
}

/// For each axiom `⊢A₁,…,Aₙ` of the par-stripped lexicon, the `n`
/// productions `A_{i+1}⊥⊗…⊗Aₙ⊥⊗A₁⊥⊗…⊗A_{i−1}⊥ → A_i`.
pub fn llg_to_cowcfg(g: &Llg) -> Result<CowordismCfg> {
    if !g.signature.is_tensor_free() {
        return Err(Error::Grammar("lexicon contains a tensor".into()));
    }
    let sig = strip_pars(&g.signature);
    let mut types = BTreeMap::new();
    for (n, b) in &sig.literals {
        types.insert(n.clone(), b.clone());
        types.insert(format!("{n}^"), b.dual());
    }
    let mut productions = Vec::new();
    for a in &sig.axioms {
        let n = a.sequent.len();
        let names = a.sequent.iter().map(literal_type).collect::<Option<Vec<_>>>().expect("stripped and tensor-free");
        let sizes: Vec<usize> = names.iter().map(|t| types[t].len()).collect();
        let body = a.cowordism.body();
        // axiom body blocks, in order, hold formulas n..1
        let mut off = vec![0; n];
        let mut acc = 0;
        for i in (0..n).rev() {
            off[i] = acc;
            acc += sizes[i];
        }
        for i in 0..n {
            // new block order: formula i, then i−1 down to 0, then n−1 down to i+1
            let mut order = vec![i];
            order.extend((0..i).rev());
            order.extend((i + 1..n).rev());
            let mut perm = vec![0; acc];
            let mut pol = Vec::with_capacity(acc);
            let mut pos = 0;
            for &f in &order {
                for t in 1..=sizes[f] {
                    perm[off[f] + t - 1] = pos + t;
                    pol.push(body.boundary().polarity(off[f] + t));
                }
                pos += sizes[f];
            }
            let rotated = body.relabel(Boundary::from_polarities(pol), &perm);
            let inputs: Vec<String> =
                (i + 1..n).chain(0..i).map(|m| literal_type(&a.sequent[m].negate()).expect("literal")).collect();
            let source = Boundary::tensor_all(inputs.iter().map(|t| &types[t]));
            let target = types[&names[i]].clone();
            let name = if n == 1 { a.name.clone() } else { format!("{}_{}", a.name, i + 1) };
            productions.push(CowProduction {
                name,
                inputs,
                output: names[i].clone(),
                cowordism: Cowordism::new(source, target, rotated)?,
            });
        }
    }
    Ok(CowordismCfg { types, terminals: sig.alphabet.clone(), start: g.start.clone(), productions })
}

/// A small random MCFG: start `S` plus up to two more nonterminals of
/// arity at most 2, at most `max_productions` productions over {a, b}.
pub fn random_mcfg<R: Rng>(rng: &mut R, max_productions: usize) -> Mcfg {
    let mut nonterminals = BTreeMap::new();
    nonterminals.insert("S".to_string(), 1);
    for n in ["A", "B"].iter().take(rng.gen_range(0..=2)) {
        nonterminals.insert(n.to_string(), rng.gen_range(1..=2));
    }
    let names: Vec<String> = nonterminals.keys().cloned().collect();
    let terminals = vec![Symbol::new("a"), Symbol::new("b")];
    let mut productions = Vec::new();
    for _ in 0..rng.gen_range(1..=max_productions.max(1)) {
        let head = names.choose(rng).expect("non-empty").clone();
        let k = nonterminals[&head];
        let body: Vec<String> = (0..rng.gen_range(0..=2)).map(|_| names.choose(rng).expect("non-empty").clone()).collect();
        let mut items: Vec<Arg> = Vec::new();
        for (j, b) in body.iter().enumerate() {
            items.extend((0..nonterminals[b]).map(|i| Arg::Var(j, i)));
        }
        for _ in 0..rng.gen_range(0..=2) {
            items.push(Arg::Term(terminals.choose(rng).expect("non-empty").clone()));
        }
        items.shuffle(rng);
        let mut args = vec![Vec::new(); k];
        for it in items {
            args[rng.gen_range(0..k)].push(it);
        }
        productions.push(Production { head, args, body });
    }
    Mcfg { nonterminals, terminals, start: "S".into(), productions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded;

    fn t(s: &str) -> Arg {
        Arg::Term(Symbol::new(s))
    }

    /// `{w aⁿ w bⁿ}`: productions (1)–(6).
    fn example() -> Mcfg {
        let v = |j, i| Arg::Var(j, i);
        let nonterminals = [("P", 2), ("Q", 2), ("S", 1)].iter().map(|(n, k)| (n.to_string(), *k)).collect();
        let p = |head: &str, args: Vec<Vec<Arg>>, body: &[&str]| Production {
            head: head.into(),
            args,
            body: body.iter().map(|s| s.to_string()).collect(),
        };
        Mcfg {
            nonterminals,
            terminals: vec![Symbol::new("a"), Symbol::new("b")],
            start: "S".into(),
            productions: vec![
                p("P", vec![vec![], vec![]], &[]),
                p("Q", vec![vec![], vec![]], &[]),
                p("P", vec![vec![v(0, 0), t("a")], vec![v(0, 1), t("b")]], &["P"]),
                p("Q", vec![vec![v(0, 0), t("a")], vec![v(0, 1), t("a")]], &["Q"]),
                p("Q", vec![vec![v(0, 0), t("b")], vec![v(0, 1), t("b")]], &["Q"]),
                p("S", vec![vec![v(0, 0), v(1, 0), v(0, 1), v(1, 1)]], &["Q", "P"]),
            ],
        }
    }

    fn expected(bound: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for wl in 0..=bound {
            for bits in 0..(1u32 << wl) {
                let w: Vec<&str> = (0..wl).map(|i| if bits >> i & 1 == 1 { "b" } else { "a" }).collect();
                for n in 0..=bound {
                    if 2 * wl + 2 * n > bound {
                        break;
                    }
                    let mut s: Vec<&str> = w.clone();
                    s.extend(std::iter::repeat_n("a", n));
                    s.extend(w.iter().copied());
                    s.extend(std::iter::repeat_n("b", n));
                    out.insert(Word::from_symbols(s));
                }
            }
        }
        out
    }

    #[test]
    fn carriers_and_patterns() {
        assert_eq!(carrier(1).unwrap(), Boundary::standard());
        assert_eq!(carrier(2).unwrap().left_set(), vec![1, 3]);
        assert!(carrier(0).is_err());
        let p = predicate_pattern(2).unwrap();
        assert_eq!(p.body().edges(), &[Edge::eps(1, 2), Edge::eps(3, 4)]);
        let f = PredicateFormula::new("P", vec![Word::parse("a b"), Word::parse("c")]);
        assert_eq!(represent_formula(&f).unwrap().body().edges()[0].label, Word::parse("a b"));
    }

    #[test]
    fn example_language_by_derivation() {
        let g = example();
        assert!(g.validate().is_empty());
        let d = mcfg_derive(&g, 8);
        assert!(d.contains(&PredicateFormula::new("Q", vec![Word::parse("a b"), Word::parse("a b")])));
        assert!(d.contains(&PredicateFormula::new("P", vec![Word::parse("a a"), Word::parse("b b")])));
        assert_eq!(mcfg_language(&g, 8), expected(8));
    }

    #[test]
    fn production_pictures() {
        let g = example();
        let p3 = represent_production(&g, &g.productions[2]).unwrap();
        // P(x,y) ⊢ P(xa, yb)
        assert_eq!(
            p3.body().edges(),
            &[Edge::eps(1, 8), Edge::new(2 + 5, Word::parse("a"), 2), Edge::eps(3, 6), Edge::new(5, Word::parse("b"), 4)]
                .iter()
                .cloned()
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
        let p1 = represent_production(&g, &g.productions[0]).unwrap();
        assert_eq!(p1.body().edges(), predicate_pattern(2).unwrap().body().edges());
    }

    #[test]
    fn substitution_identity_on_random_instances() {
        let mut rng = seeded(5);
        let mut checked = 0;
        while checked < 100 {
            let g = random_mcfg(&mut rng, 4);
            for p in &g.productions {
                let body: Vec<Vec<Word>> = p
                    .body
                    .iter()
                    .map(|b| {
                        (0..g.nonterminals[b])
                            .map(|_| crate::random::random_word(&mut rng, &Default::default()))
                            .collect()
                    })
                    .collect();
                let refs: Vec<&[Word]> = body.iter().map(Vec::as_slice).collect();
                let lhs_args: Vec<Cowordism> = body.iter().map(|ws| represent_words(ws).unwrap()).collect();
                let lhs = cat::compose(&cat::tensor_all(&lhs_args), &represent_production(&g, p).unwrap()).unwrap();
                let rhs = represent_words(&substitute(p, &refs)).unwrap();
                assert_eq!(lhs, rhs);
                checked += 1;
            }
        }
    }

    #[test]
    fn three_routes_agree_on_the_example() {
        let g = example();
        let c = mcfg_to_cowcfg(&g).unwrap();
        assert!(c.validate().is_empty());
        assert!(is_simple(&c));
        assert_eq!(cowcfg_language(&c, 8), expected(8));
        let back = cowcfg_to_mcfg(&c).unwrap();
        assert!(back.validate().is_empty(), "{:?}", back.validate());
        assert_eq!(mcfg_language(&back, 8), expected(8));
        let l = cowcfg_to_llg(&c).unwrap();
        assert!(l.signature.is_logic_free());
        assert!(l.validate().is_empty());
        let c2 = llg_to_cowcfg(&l).unwrap();
        assert!(c2.validate().is_empty());
        assert_eq!(cowcfg_language(&c2, 6), expected(6));
    }

    #[test]
    fn normalizers_are_inverse() {
        let b = Boundary::parse("rllr").unwrap();
        let p = Multiword::new(b.clone(), vec![Edge::eps(2, 1), Edge::eps(3, 4)], vec![]).unwrap();
        let (rho, tau) = normalizers(&p).unwrap();
        assert_eq!(cat::compose(&rho, &tau).unwrap(), cat::identity(&b));
        assert_eq!(cat::compose(&tau, &rho).unwrap(), cat::identity(&carrier(2).unwrap()));
        let normal = cat::compose(&Cowordism::point(p), &rho).unwrap();
        assert_eq!(normal, predicate_pattern(2).unwrap());
    }

    #[test]
    fn simplification_splits_patterns() {
        let b = Boundary::parse("lrlr").unwrap();
        let crossed = Cowordism::from_edges(Boundary::unit(), b.clone(), vec![Edge::new(1, Word::parse("a"), 4), Edge::new(3, Word::parse("b"), 2)], vec![]).unwrap();
        let straight = Cowordism::from_edges(Boundary::unit(), b.clone(), vec![Edge::new(1, Word::parse("c"), 2), Edge::new(3, Word::parse("d"), 4)], vec![]).unwrap();
        // S ← T by reading the first then the second slot: x₁ x₂ for straight
        let join = represent_production(
            &Mcfg { nonterminals: [("S".to_string(), 1), ("T".to_string(), 2)].into_iter().collect(), ..Default::default() },
            &Production { head: "S".into(), args: vec![vec![Arg::Var(0, 0), Arg::Var(0, 1)]], body: vec!["T".into()] },
        )
        .unwrap();
        let g = CowordismCfg {
            types: [("S".to_string(), Boundary::standard()), ("T".to_string(), b)].into_iter().collect(),
            terminals: vec![],
            start: "S".into(),
            productions: vec![
                CowProduction { name: "x".into(), inputs: vec![], output: "T".into(), cowordism: crossed },
                CowProduction { name: "y".into(), inputs: vec![], output: "T".into(), cowordism: straight },
                CowProduction { name: "j".into(), inputs: vec!["T".into()], output: "S".into(), cowordism: join },
            ],
        };
        assert!(!is_simple(&g));
        assert!(cowcfg_to_mcfg(&g).is_err());
        let s = simplify(&g);
        assert!(is_simple(&s));
        assert_eq!(s.types.len(), 3);
        assert_eq!(cowcfg_language(&s, 6), cowcfg_language(&g, 6));
        let m = cowcfg_to_mcfg(&s).unwrap();
        assert_eq!(mcfg_language(&m, 6), cowcfg_language(&g, 6));
    }

    #[test]
    fn tensor_lexicon_is_rejected() {
        let mut sig = CowordismSignature::default();
        sig.literals.insert("S".into(), Boundary::standard());
        let f = Formula::tensor(Formula::pos("S"), Formula::neg("S"));
        let b = crate::mll::interpret_sequent(&[f.clone(), Formula::pos("S")], &sig.literals).unwrap();
        let mut rng = seeded(3);
        let c = crate::random::random_cowordism(&mut rng, &Boundary::unit(), &b, &Default::default()).unwrap();
        sig.add_axiom("x", vec![f, Formula::pos("S")], c);
        assert!(llg_to_cowcfg(&Llg { signature: sig, start: "S".into() }).is_err());
    }
}
