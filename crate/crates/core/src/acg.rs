//! Linear λ-calculus, interpreted linear signatures, abstract categorial
//! grammars and their string and tree encodings.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{self as cat, Cowordism};
use crate::error::{Error, Result};
use crate::llg::{CowordismSignature, Llg};
use crate::mll::{Formula, Interpretation, MllProof};
use crate::multiword::{Boundary, Edge, Symbol, Word};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LinType {
    Atom(String),
    Arrow(Box<LinType>, Box<LinType>),
}

impl LinType {
    pub fn atom(name: &str) -> LinType {
        LinType::Atom(name.to_string())
    }

    pub fn arrow(a: LinType, b: LinType) -> LinType {
        LinType::Arrow(Box::new(a), Box::new(b))
    }

    /// `A₁⊸…⊸Aₙ⊸B`.
    pub fn curried(args: &[LinType], result: LinType) -> LinType {
        args.iter().rev().fold(result, |acc, a| LinType::arrow(a.clone(), acc))
    }

    /// Arguments and result of a curried type.
    pub fn uncurried(&self) -> (Vec<&LinType>, &LinType) {
        let mut args = Vec::new();
        let mut t = self;
        while let LinType::Arrow(a, b) = t {
            args.push(a.as_ref());
            t = b;
        }
        (args, t)
    }

    pub fn order(&self) -> usize {
        match self {
            LinType::Atom(_) => 0,
            LinType::Arrow(a, b) => (a.order() + 1).max(b.order()),
        }
    }

    pub fn atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            LinType::Atom(n) => {
                out.insert(n.clone());
            }
            LinType::Arrow(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }

    /// The classical formula, with `A⊸B` read as `A⊥℘B`.
    pub fn to_formula(&self) -> Formula {
        match self {
            LinType::Atom(n) => Formula::pos(n),
            LinType::Arrow(a, b) => Formula::lolli(a.to_formula(), b.to_formula()),
        }
    }
}

impl fmt::Display for LinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinType::Atom(n) => f.write_str(n),
            LinType::Arrow(a, b) => match a.as_ref() {
                LinType::Atom(_) => write!(f, "{a} -> {b}"),
                _ => write!(f, "({a}) -> {b}"),
            },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(String),
    Const(String),
    App(Box<Term>, Box<Term>),
    Lam(String, Option<LinType>, Box<Term>),
}

impl Term {
    pub fn var(x: &str) -> Term {
        Term::Var(x.to_string())
    }

    pub fn constant(c: &str) -> Term {
        Term::Const(c.to_string())
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    /// `f a₁ … aₙ`.
    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    pub fn lam(x: &str, body: Term) -> Term {
        Term::Lam(x.to_string(), None, Box::new(body))
    }

    pub fn lam_typed(x: &str, ty: LinType, body: Term) -> Term {
        Term::Lam(x.to_string(), Some(ty), Box::new(body))
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
            Term::Lam(_, _, b) => 1 + b.size(),
        }
    }

    /// Free variables in order of first occurrence, with repetitions.
    pub fn free_occurrences(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match self {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.push(x.clone());
                }
            }
            Term::Const(_) => {}
            Term::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            Term::Lam(x, _, b) => {
                bound.push(x.clone());
                b.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    fn has_free(&self, x: &str) -> bool {
        self.free_occurrences().iter().any(|y| y == x)
    }

    pub fn constants(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(_) => {}
            Term::Const(c) => {
                out.insert(c.clone());
            }
            Term::App(f, a) => {
                f.constants(out);
                a.constants(out);
            }
            Term::Lam(_, _, b) => b.constants(out),
        }
    }

    /// Binder names replaced by `_0`, `_1`, … in left-to-right order.
    pub fn canonical(&self) -> Term {
        fn go(t: &Term, env: &mut Vec<(String, String)>, next: &mut usize) -> Term {
            match t {
                Term::Var(x) => match env.iter().rev().find(|(o, _)| o == x) {
                    Some((_, n)) => Term::Var(n.clone()),
                    None => t.clone(),
                },
                Term::Const(_) => t.clone(),
                Term::App(f, a) => {
                    let f = go(f, env, next);
                    Term::app(f, go(a, env, next))
                }
                Term::Lam(x, ty, b) => {
                    let n = format!("_{next}");
                    *next += 1;
                    env.push((x.clone(), n.clone()));
                    let b = go(b, env, next);
                    env.pop();
                    Term::Lam(n, ty.clone(), Box::new(b))
                }
            }
        }
        go(self, &mut Vec::new(), &mut 0)
    }

    /// α-equivalence, ignoring binder annotations.
    pub fn alpha_eq(&self, other: &Term) -> bool {
        self.canonical().erase_annotations() == other.canonical().erase_annotations()
    }

    pub fn erase_annotations(&self) -> Term {
        match self {
            Term::Lam(x, _, b) => Term::Lam(x.clone(), None, Box::new(b.erase_annotations())),
            Term::App(f, a) => Term::app(f.erase_annotations(), a.erase_annotations()),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Const(x) => f.write_str(x),
            Term::App(g, a) => {
                match g.as_ref() {
                    Term::Lam(..) => write!(f, "({g})")?,
                    _ => write!(f, "{g}")?,
                }
                match a.as_ref() {
                    Term::App(..) | Term::Lam(..) => write!(f, " ({a})"),
                    _ => write!(f, " {a}"),
                }
            }
            Term::Lam(x, None, b) => write!(f, "\\{x}. {b}"),
            Term::Lam(x, Some(t), b) => write!(f, "\\{x} : {t}. {b}"),
        }
    }
}

fn fresh_var(base: &str, avoid: &HashSet<String>) -> String {
    let mut k = 1;
    loop {
        let n = format!("{base}{k}");
        if !avoid.contains(&n) {
            return n;
        }
        k += 1;
    }
}

fn all_names(t: &Term, out: &mut HashSet<String>) {
    match t {
        Term::Var(x) => {
            out.insert(x.clone());
        }
        Term::Const(_) => {}
        Term::App(f, a) => {
            all_names(f, out);
            all_names(a, out);
        }
        Term::Lam(x, _, b) => {
            out.insert(x.clone());
            all_names(b, out);
        }
    }
}

/// `t[x := s]`, renaming binders of `t` that would capture free variables
/// of `s`.
pub fn substitute(t: &Term, x: &str, s: &Term) -> Term {
    match t {
        Term::Var(y) if y == x => s.clone(),
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::App(f, a) => Term::app(substitute(f, x, s), substitute(a, x, s)),
        Term::Lam(y, _, _) if y == x => t.clone(),
        Term::Lam(y, ty, b) => {
            if s.has_free(y) {
                let mut avoid = HashSet::new();
                all_names(s, &mut avoid);
                all_names(b, &mut avoid);
                avoid.insert(x.to_string());
                let z = fresh_var(y, &avoid);
                let b = substitute(b, y, &Term::Var(z.clone()));
                Term::Lam(z, ty.clone(), Box::new(substitute(&b, x, s)))
            } else {
                Term::Lam(y.clone(), ty.clone(), Box::new(substitute(b, x, s)))
            }
        }
    }
}

/// β-normal form. Terminates on linear terms, where each step shrinks the
/// term.
pub fn beta_normalize(t: &Term) -> Term {
    match t {
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::Lam(x, ty, b) => Term::Lam(x.clone(), ty.clone(), Box::new(beta_normalize(b))),
        Term::App(f, a) => {
            let f = beta_normalize(f);
            let a = beta_normalize(a);
            match f {
                Term::Lam(x, _, b) => beta_normalize(&substitute(&b, &x, &a)),
                f => Term::app(f, a),
            }
        }
    }
}

/// Contracts `λx.(f x)` to `f` wherever `x` is not free in `f`.
pub fn eta_contract(t: &Term) -> Term {
    match t {
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::App(f, a) => Term::app(eta_contract(f), eta_contract(a)),
        Term::Lam(x, ty, b) => {
            let b = eta_contract(b);
            if let Term::App(f, a) = &b {
                if **a == Term::Var(x.clone()) && !f.has_free(x) {
                    return (**f).clone();
                }
            }
            Term::Lam(x.clone(), ty.clone(), Box::new(b))
        }
    }
}

pub fn beta_eta_normalize(t: &Term) -> Term {
    eta_contract(&beta_normalize(t))
}

pub type Context = Vec<(String, LinType)>;

/// A natural-deduction derivation. Each node's context lists the free
/// variables of its term in order of occurrence, which is the only order
/// the rules produce.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Typing {
    pub context: Context,
    pub term: Term,
    pub ty: LinType,
    pub rule: TypingRule,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TypingRule {
    Id,
    Const,
    /// `⊸E` from the function and the argument.
    Elim(Box<Typing>, Box<Typing>),
    /// `⊸I`; the abstracted variable sat at this index of the premise
    /// context.
    Intro(usize, Box<Typing>),
}

impl Typing {
    /// Every context variable is consumed exactly once at the leaves.
    pub fn is_linear(&self) -> bool {
        fn leaves(t: &Typing, out: &mut Vec<String>) -> bool {
            match &t.rule {
                TypingRule::Id => {
                    out.extend(t.context.iter().map(|(x, _)| x.clone()));
                    t.context.len() == 1
                }
                TypingRule::Const => t.context.is_empty(),
                TypingRule::Elim(f, a) => {
                    let mut l = Vec::new();
                    let ok = leaves(f, &mut l) && leaves(a, &mut l);
                    let names: Vec<String> = t.context.iter().map(|(x, _)| x.clone()).collect();
                    out.extend(names.iter().cloned());
                    ok && l == names
                }
                TypingRule::Intro(pos, b) => {
                    let mut l = Vec::new();
                    let ok = leaves(b, &mut l);
                    let mut names: Vec<String> = t.context.iter().map(|(x, _)| x.clone()).collect();
                    out.extend(names.iter().cloned());
                    if *pos > names.len() || *pos >= l.len() {
                        return false;
                    }
                    names.insert(*pos, l[*pos].clone());
                    ok && l == names
                }
            }
        }
        let mut out = Vec::new();
        let ok = leaves(self, &mut out);
        let distinct: HashSet<&String> = out.iter().collect();
        ok && distinct.len() == out.len()
    }
}

pub trait ConstantTypes {
    fn constant_type(&self, c: &str) -> Option<&LinType>;
}

/// Typechecks `term` against `expected` (or infers its type) under the
/// variable typing `context`, which must be used exactly once.
pub fn typecheck(
    sig: &dyn ConstantTypes,
    context: &[(String, LinType)],
    term: &Term,
    expected: Option<&LinType>,
) -> Result<Typing> {
    let mut names = HashSet::new();
    for (x, _) in context {
        if !names.insert(x.as_str()) {
            return Err(Error::Term(format!("variable {x} is declared twice in the context")));
        }
    }
    let env: BTreeMap<String, LinType> = context.iter().cloned().collect();
    let t = match expected {
        Some(ty) => check(sig, &env, term, ty)?,
        None => infer(sig, &env, term)?,
    };
    let used: BTreeSet<&String> = t.context.iter().map(|(x, _)| x).collect();
    for (x, _) in context {
        if !used.contains(x) {
            return Err(Error::Term(format!("variable {x} is not used")));
        }
    }
    Ok(t)
}

fn join_contexts(a: &Context, b: &Context) -> Result<Context> {
    let mut out = a.clone();
    for (x, t) in b {
        if a.iter().any(|(y, _)| y == x) {
            return Err(Error::Term(format!("variable {x} is used twice")));
        }
        out.push((x.clone(), t.clone()));
    }
    Ok(out)
}

fn infer(sig: &dyn ConstantTypes, env: &BTreeMap<String, LinType>, term: &Term) -> Result<Typing> {
    match term {
        Term::Var(x) => {
            let ty = env.get(x).ok_or_else(|| Error::Term(format!("unbound variable {x}")))?;
            Ok(Typing { context: vec![(x.clone(), ty.clone())], term: term.clone(), ty: ty.clone(), rule: TypingRule::Id })
        }
        Term::Const(c) => {
            let ty = sig.constant_type(c).ok_or_else(|| Error::Term(format!("unknown constant {c}")))?;
            Ok(Typing { context: vec![], term: term.clone(), ty: ty.clone(), rule: TypingRule::Const })
        }
        Term::App(f, a) => {
            // an unannotated redex takes its binder type from the argument
            let (tf, ta) = if let Term::Lam(x, None, b) = f.as_ref() {
                let ta = infer(sig, env, a)?;
                let tf = abstraction(sig, env, x, &ta.ty, b, None, f)?;
                (tf, ta)
            } else {
                let tf = infer(sig, env, f)?;
                let LinType::Arrow(dom, _) = &tf.ty else {
                    return Err(Error::Term(format!("{f} has type {}, not a function type", tf.ty)));
                };
                let ta = check(sig, env, a, dom)?;
                (tf, ta)
            };
            let LinType::Arrow(dom, cod) = tf.ty.clone() else { unreachable!() };
            if *dom != ta.ty {
                return Err(Error::Term(format!("{a} has type {}, expected {dom}", ta.ty)));
            }
            Ok(Typing {
                context: join_contexts(&tf.context, &ta.context)?,
                term: term.clone(),
                ty: *cod,
                rule: TypingRule::Elim(Box::new(tf), Box::new(ta)),
            })
        }
        Term::Lam(x, Some(dom), b) => abstraction(sig, env, x, dom, b, None, term),
        Term::Lam(..) => Err(Error::Term(format!("cannot infer the type of {term}"))),
    }
}

fn abstraction(
    sig: &dyn ConstantTypes,
    env: &BTreeMap<String, LinType>,
    x: &str,
    dom: &LinType,
    body: &Term,
    cod: Option<&LinType>,
    whole: &Term,
) -> Result<Typing> {
    if let Term::Lam(_, Some(ann), _) = whole {
        if ann != dom {
            return Err(Error::Term(format!("binder {x} is annotated {ann}, expected {dom}")));
        }
    }
    let mut inner = env.clone();
    inner.insert(x.to_string(), dom.clone());
    let tb = match cod {
        Some(c) => check(sig, &inner, body, c)?,
        None => infer(sig, &inner, body)?,
    };
    let pos = tb
        .context
        .iter()
        .position(|(y, _)| y == x)
        .ok_or_else(|| Error::Term(format!("bound variable {x} is not used in {body}")))?;
    let mut context = tb.context.clone();
    context.remove(pos);
    let ty = LinType::arrow(dom.clone(), tb.ty.clone());
    Ok(Typing { context, term: whole.clone(), ty, rule: TypingRule::Intro(pos, Box::new(tb)) })
}

fn check(sig: &dyn ConstantTypes, env: &BTreeMap<String, LinType>, term: &Term, ty: &LinType) -> Result<Typing> {
    match (term, ty) {
        (Term::Lam(x, _, b), LinType::Arrow(dom, cod)) => abstraction(sig, env, x, dom, b, Some(cod), term),
        (Term::Lam(..), _) => Err(Error::Term(format!("{term} is a function, expected {ty}"))),
        _ => {
            let t = infer(sig, env, term)?;
            if t.ty != *ty {
                return Err(Error::Term(format!("{term} has type {}, expected {ty}", t.ty)));
            }
            Ok(t)
        }
    }
}

/// Boundaries for atoms and cowordisms `1 → [𝔗(c)]` for constants.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SignatureInterpretation {
    pub types: Interpretation,
    pub constants: BTreeMap<String, Cowordism>,
}

impl SignatureInterpretation {
    pub fn type_boundary(&self, ty: &LinType) -> Result<Boundary> {
        match ty {
            LinType::Atom(n) => {
                self.types.get(n).cloned().ok_or_else(|| Error::Term(format!("atomic type {n} is not interpreted")))
            }
            LinType::Arrow(a, b) => Ok(cat::lolli(&self.type_boundary(a)?, &self.type_boundary(b)?)),
        }
    }

    fn context_boundary(&self, ctx: &[(String, LinType)]) -> Result<Vec<Boundary>> {
        ctx.iter().map(|(_, t)| self.type_boundary(t)).collect()
    }
}

/// `Σ = (N, C, 𝔗)` with an optional cowordism interpretation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LinearSignature {
    pub atoms: BTreeSet<String>,
    pub constants: BTreeMap<String, LinType>,
    pub interpretation: Option<SignatureInterpretation>,
}

impl ConstantTypes for LinearSignature {
    fn constant_type(&self, c: &str) -> Option<&LinType> {
        self.constants.get(c)
    }
}

impl LinearSignature {
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (c, t) in &self.constants {
            let mut a = BTreeSet::new();
            t.atoms(&mut a);
            for n in a.difference(&self.atoms) {
                out.push(format!("constant {c}: atomic type {n} is not declared"));
            }
        }
        if let Some(i) = &self.interpretation {
            for n in &self.atoms {
                if !i.types.contains_key(n) {
                    out.push(format!("atomic type {n} has no boundary"));
                }
            }
            for (c, t) in &self.constants {
                match (i.constants.get(c), i.type_boundary(t)) {
                    (None, _) => out.push(format!("constant {c} has no cowordism")),
                    (Some(_), Err(e)) => out.push(format!("constant {c}: {e}")),
                    (Some(s), Ok(b)) => {
                        if !s.source().is_empty() || *s.target() != b {
                            out.push(format!("constant {c}: cowordism {} -> {} is not 1 -> {b}", s.source(), s.target()));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn interpretation(&self) -> Result<&SignatureInterpretation> {
        self.interpretation.as_ref().ok_or_else(|| Error::Term("signature has no interpretation".into()))
    }
}

/// `[Γ ⊢ t : A] : [A₁]⊗…⊗[Aₙ] → [A]`, in the derivation's own context order.
pub fn interpret_typing(interp: &SignatureInterpretation, t: &Typing) -> Result<Cowordism> {
    match &t.rule {
        TypingRule::Id => Ok(cat::identity(&interp.type_boundary(&t.ty)?)),
        TypingRule::Const => {
            let Term::Const(c) = &t.term else { return Err(Error::Term("constant rule on a non-constant".into())) };
            interp.constants.get(c).cloned().ok_or_else(|| Error::Term(format!("constant {c} is not interpreted")))
        }
        TypingRule::Elim(f, a) => {
            let LinType::Arrow(dom, cod) = &f.ty else { return Err(Error::Term("ill-typed elimination".into())) };
            let ev = cat::evaluation(&interp.type_boundary(dom)?, &interp.type_boundary(cod)?);
            cat::compose(&cat::tensor(&interpret_typing(interp, f)?, &interpret_typing(interp, a)?), &ev)
        }
        TypingRule::Intro(pos, b) => {
            // [Γ]⊗[Δ]⊗[A] → [Γ]⊗[A]⊗[Δ] → [B], then curry off [A]
            let blocks = interp.context_boundary(&b.context)?;
            let n = blocks.len();
            let mut moved: Vec<usize> = (0..n).filter(|&i| i != *pos).collect();
            moved.push(*pos);
            let moved_blocks: Vec<Boundary> = moved.iter().map(|&i| blocks[i].clone()).collect();
            let mut back = vec![0; n];
            for (i, &m) in moved.iter().enumerate() {
                back[m] = i;
            }
            let perm = cat::block_permutation(&moved_blocks, &back)?;
            let body = cat::compose(&perm, &interpret_typing(interp, b)?)?;
            cat::curry(&body, &blocks[*pos])
        }
    }
}

/// The judgement `x₁:A₁,…,xₙ:Aₙ ⊢ t : A` for the given context order.
pub fn interpret_judgement(
    sig: &LinearSignature,
    context: &[(String, LinType)],
    term: &Term,
    ty: &LinType,
) -> Result<Cowordism> {
    let interp = sig.interpretation()?;
    let t = typecheck(sig, context, term, Some(ty))?;
    let c = interpret_typing(interp, &t)?;
    let blocks = interp.context_boundary(context)?;
    let order: Vec<usize> = t
        .context
        .iter()
        .map(|(x, _)| context.iter().position(|(y, _)| y == x).expect("typed context"))
        .collect();
    cat::compose(&cat::block_permutation(&blocks, &order)?, &c)
}

/// `A₁,…,Aₙ ⊢ A ↦ ⊢A₁⊥,…,Aₙ⊥,A`.
pub fn ill_to_ll(context: &[LinType], ty: &LinType) -> Vec<Formula> {
    let mut s: Vec<Formula> = context.iter().map(|t| t.to_formula().negate()).collect();
    s.push(ty.to_formula());
    s
}

/// The classical proof of the translated sequent, with constants as
/// lexicon axioms.
pub fn ill_proof_to_ll(t: &Typing) -> Arc<MllProof> {
    match &t.rule {
        TypingRule::Id => MllProof::id(t.ty.to_formula()),
        TypingRule::Const => {
            let Term::Const(c) = &t.term else { unreachable!("constant rule") };
            MllProof::ax(c)
        }
        TypingRule::Elim(f, a) => {
            // ⊢Δ⊥,A and ⊢B⊥,B give ⊢Δ⊥,A⊗B⊥,B; move A⊗B⊥ to the front and cut
            let LinType::Arrow(_, cod) = &f.ty else { unreachable!("typed elimination") };
            let m = a.context.len();
            let tens = MllProof::tensor(ill_proof_to_ll(a), MllProof::id(cod.to_formula()));
            let front = crate::mll::reorder(tens, &crate::mll::move_to_front(m + 2, m));
            MllProof::cut(ill_proof_to_ll(f), front)
        }
        TypingRule::Intro(pos, b) => {
            // ⊢Γ⊥,A⊥,Δ⊥,B becomes ⊢Γ⊥,Δ⊥,A⊥,B
            let m = b.context.len();
            let mut order = crate::mll::move_to_end(m, *pos);
            order.push(m);
            MllProof::par(crate::mll::reorder(ill_proof_to_ll(b), &order), m)
        }
    }
}

/// `Ξ = {[c] / ⊢𝔗(c)}`.
pub fn signature_to_cowordism_signature(sig: &LinearSignature) -> Result<CowordismSignature> {
    let interp = sig.interpretation()?;
    let mut out = CowordismSignature { literals: interp.types.clone(), alphabet: Vec::new(), axioms: Vec::new() };
    let mut alphabet = BTreeSet::new();
    for (c, t) in &sig.constants {
        let s = interp.constants.get(c).ok_or_else(|| Error::Term(format!("constant {c} is not interpreted")))?;
        for e in s.body().edges() {
            alphabet.extend(e.label.symbols().iter().cloned());
        }
        out.add_axiom(c, vec![t.to_formula()], s.clone());
    }
    out.alphabet = alphabet.into_iter().collect();
    Ok(out)
}

/// `φ = (F, G)`: atoms to object types, constants to object terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SignatureMap {
    pub types: BTreeMap<String, LinType>,
    pub constants: BTreeMap<String, Term>,
}

impl SignatureMap {
    pub fn map_type(&self, t: &LinType) -> Result<LinType> {
        match t {
            LinType::Atom(n) => {
                self.types.get(n).cloned().ok_or_else(|| Error::Term(format!("lexicon does not map type {n}")))
            }
            LinType::Arrow(a, b) => Ok(LinType::arrow(self.map_type(a)?, self.map_type(b)?)),
        }
    }

    pub fn map_term(&self, t: &Term) -> Result<Term> {
        Ok(match t {
            Term::Var(_) => t.clone(),
            Term::Const(c) => {
                self.constants.get(c).cloned().ok_or_else(|| Error::Term(format!("lexicon does not map {c}")))?
            }
            Term::App(f, a) => Term::app(self.map_term(f)?, self.map_term(a)?),
            Term::Lam(x, ty, b) => {
                let ty = ty.as_ref().map(|t| self.map_type(t)).transpose()?;
                Term::Lam(x.clone(), ty, Box::new(self.map_term(b)?))
            }
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Acg {
    pub abstract_sig: LinearSignature,
    pub object_sig: LinearSignature,
    pub lexicon: SignatureMap,
    pub start: String,
}

impl Acg {
    pub fn validate(&self) -> Vec<String> {
        let mut out: Vec<String> = self.abstract_sig.validate().into_iter().map(|d| format!("abstract: {d}")).collect();
        out.extend(self.object_sig.validate().into_iter().map(|d| format!("object: {d}")));
        if !self.abstract_sig.atoms.contains(&self.start) {
            out.push(format!("start type {} is not an abstract atom", self.start));
        }
        for (c, t) in &self.abstract_sig.constants {
            let ty = match self.lexicon.map_type(t) {
                Ok(ty) => ty,
                Err(e) => {
                    out.push(format!("constant {c}: {e}"));
                    continue;
                }
            };
            match self.lexicon.constants.get(c) {
                None => out.push(format!("lexicon does not map {c}")),
                Some(term) => {
                    if let Err(e) = typecheck(&self.object_sig, &[], term, Some(&ty)) {
                        out.push(format!("lexicon entry {c}: {e}"));
                    }
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

    /// The abstract signature interpreted through the lexicon:
    /// `[A] = [φ(A)]` and `[c] = [φ(c)]`.
    pub fn induced_interpretation(&self) -> Result<SignatureInterpretation> {
        let obj = self.object_sig.interpretation()?;
        let mut out = SignatureInterpretation::default();
        for a in &self.abstract_sig.atoms {
            let t = self.lexicon.map_type(&LinType::atom(a))?;
            out.types.insert(a.clone(), obj.type_boundary(&t)?);
        }
        for (c, t) in &self.abstract_sig.constants {
            let term = self.lexicon.constants.get(c).ok_or_else(|| Error::Term(format!("lexicon does not map {c}")))?;
            let ty = self.lexicon.map_type(t)?;
            out.constants.insert(c.clone(), interpret_judgement(&self.object_sig, &[], term, &ty)?);
        }
        Ok(out)
    }

    /// Object terms of the abstract language of a second-order grammar, up
    /// to `max_constants` abstract constants per term.
    pub fn abstract_terms(&self, max_constants: usize) -> Result<Vec<Term>> {
        second_order_terms(&self.abstract_sig, &self.start, max_constants)
    }
}

/// `G' = (Σ', S)` where `Σ'` represents the abstract signature under the
/// induced interpretation.
pub fn acg_to_llg(acg: &Acg) -> Result<Llg> {
    acg.check()?;
    let interpreted = LinearSignature { interpretation: Some(acg.induced_interpretation()?), ..acg.abstract_sig.clone() };
    let mut signature = signature_to_cowordism_signature(&interpreted)?;
    if let Some(obj) = &acg.object_sig.interpretation {
        let mut alphabet = BTreeSet::new();
        for c in obj.constants.values() {
            for e in c.body().edges() {
                alphabet.extend(e.label.symbols().iter().cloned());
            }
        }
        signature.alphabet = alphabet.into_iter().collect();
    }
    Ok(Llg { signature, start: acg.start.clone() })
}

/// Closed β-normal terms of atomic type `start` in a signature whose
/// constants all have types `A₁⊸…⊸Aₙ⊸B` over atoms.
pub fn second_order_terms(sig: &LinearSignature, start: &str, max_constants: usize) -> Result<Vec<Term>> {
    let mut shapes = Vec::new();
    for (c, t) in &sig.constants {
        let (args, res) = t.uncurried();
        let LinType::Atom(r) = res else { unreachable!() };
        let mut atoms = Vec::new();
        for a in args {
            match a {
                LinType::Atom(n) => atoms.push(n.clone()),
                _ => return Err(Error::Term(format!("constant {c} is not second order"))),
            }
        }
        shapes.push((c.clone(), atoms, r.clone()));
    }
    // by_size[k][atom] = terms with exactly k constants
    let mut by_size: Vec<BTreeMap<String, Vec<Term>>> = vec![BTreeMap::new(); max_constants + 1];
    for k in 1..=max_constants {
        for (c, args, r) in &shapes {
            let mut acc: Vec<(usize, Term)> = vec![(1, Term::constant(c))];
            for a in args {
                let mut next = Vec::new();
                for (used, t) in &acc {
                    for s in 1..=k.saturating_sub(*used) {
                        if let Some(ts) = by_size[s].get(a) {
                            for u in ts {
                                next.push((used + s, Term::app(t.clone(), u.clone())));
                            }
                        }
                    }
                }
                acc = next;
            }
            let found: Vec<Term> = acc.into_iter().filter(|(u, _)| *u == k).map(|(_, t)| t).collect();
            by_size[k].entry(r.clone()).or_default().extend(found);
        }
    }
    Ok(by_size.into_iter().flat_map(|mut m| m.remove(start).unwrap_or_default()).collect())
}

/// `Str_T`: one atom `O` on a single left point, and `c : O⊸O` with the
/// single edge `(1, c, 2)` for every letter.
pub fn string_signature(alphabet: &[Symbol]) -> LinearSignature {
    let mut interp = SignatureInterpretation::default();
    interp.types.insert("O".into(), Boundary::from_polarities(vec![crate::multiword::Polarity::Left]));
    let mut constants = BTreeMap::new();
    for c in alphabet {
        constants.insert(c.to_string(), str_type());
        let e = vec![Edge::new(1, Word(vec![c.clone()]), 2)];
        interp.constants.insert(
            c.to_string(),
            Cowordism::from_edges(Boundary::unit(), Boundary::standard(), e, vec![]).expect("one edge on lr"),
        );
    }
    LinearSignature { atoms: [String::from("O")].into_iter().collect(), constants, interpretation: Some(interp) }
}

/// `str = O⊸O`.
pub fn str_type() -> LinType {
    LinType::arrow(LinType::atom("O"), LinType::atom("O"))
}

/// `ρ(a₁…aₙ) = λx.a₁(…(aₙ x)…)`.
pub fn rho(w: &Word) -> Term {
    let body = w.symbols().iter().rev().fold(Term::var("x"), |acc, c| Term::app(Term::constant(c.as_str()), acc));
    Term::lam("x", body)
}

/// The word represented by a string term, read off its βη-normal form.
pub fn unrho(t: &Term) -> Result<Word> {
    let bad = || Error::Term(format!("{t} is not a string term"));
    match beta_normalize(t) {
        Term::Const(c) => Ok(Word(vec![Symbol::new(&c)])),
        Term::Lam(x, _, body) => {
            let mut out = Vec::new();
            let mut cur = *body;
            loop {
                match cur {
                    Term::Var(y) if y == x => return Ok(Word(out)),
                    Term::App(f, a) => match *f {
                        Term::Const(c) => {
                            out.push(Symbol::new(&c));
                            cur = *a;
                        }
                        _ => return Err(bad()),
                    },
                    _ => return Err(bad()),
                }
            }
        }
        _ => Err(bad()),
    }
}

/// A planar rooted tree with labelled nodes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tree {
    pub label: String,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: &str) -> Tree {
        Tree { label: label.to_string(), children: vec![] }
    }

    pub fn node(label: &str, children: Vec<Tree>) -> Tree {
        Tree { label: label.to_string(), children }
    }

    pub fn branching(&self) -> usize {
        self.children.iter().map(Tree::branching).max().unwrap_or(0).max(self.children.len())
    }

    /// Number of levels; a single node has depth 1.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Tree::depth).max().unwrap_or(0)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The letter `A_k^i`.
pub fn tree_symbol(label: &str, k: usize, i: usize) -> Symbol {
    Symbol::new(&format!("{label}_{k}^{i}"))
}

/// `A_k` as a constant name.
pub fn tree_constant(label: &str, k: usize) -> String {
    format!("{label}_{k}")
}

fn split_tree_symbol(s: &Symbol) -> Option<(String, usize, usize)> {
    let (head, i) = s.as_str().rsplit_once('^')?;
    let (label, k) = head.rsplit_once('_')?;
    Some((label.to_string(), k.parse().ok()?, i.parse().ok()?))
}

/// `[A_k(α₁,…,α_k)] = A_k^0 [α₁] A_k^1 … [α_k] A_k^k`.
pub fn encode_tree(t: &Tree) -> Word {
    let mut out = Vec::new();
    fn go(t: &Tree, out: &mut Vec<Symbol>) {
        let k = t.children.len();
        out.push(tree_symbol(&t.label, k, 0));
        for (i, c) in t.children.iter().enumerate() {
            go(c, out);
            out.push(tree_symbol(&t.label, k, i + 1));
        }
    }
    go(t, &mut out);
    Word(out)
}

/// Inverse of [`encode_tree`], by matching each opening letter with its
/// separators.
pub fn decode_tree(w: &Word) -> Option<Tree> {
    fn go(s: &[Symbol], at: &mut usize) -> Option<Tree> {
        let (label, k, i) = split_tree_symbol(s.get(*at)?)?;
        if i != 0 {
            return None;
        }
        *at += 1;
        let mut children = Vec::with_capacity(k);
        for j in 1..=k {
            children.push(go(s, at)?);
            let (l2, k2, i2) = split_tree_symbol(s.get(*at)?)?;
            if l2 != label || k2 != k || i2 != j {
                return None;
            }
            *at += 1;
        }
        Some(Tree { label, children })
    }
    let mut at = 0;
    let t = go(w.symbols(), &mut at)?;
    (at == w.len()).then_some(t)
}

/// `[A_k] : 𝒯^{⊗k} → 𝒯`, reading `A_k^0`, the first child, `A_k^1`, … .
pub fn elementary_tree_cowordism(label: &str, k: usize) -> Cowordism {
    let t = Boundary::standard();
    let source = Boundary::tensor_all(std::iter::repeat_n(&t, k));
    let mirror = |q: usize| 2 * k + 3 - q;
    let mut edges = Vec::new();
    let mut from = 1;
    for i in 0..k {
        edges.push(Edge::new(from, Word(vec![tree_symbol(label, k, i)]), mirror(2 * i + 1)));
        from = mirror(2 * i + 2);
    }
    edges.push(Edge::new(from, Word(vec![tree_symbol(label, k, k)]), 2));
    Cowordism::from_edges(source, t, edges, vec![]).expect("elementary tree")
}

/// `[α] : 1 → 𝒯`.
pub fn tree_cowordism(t: &Tree) -> Cowordism {
    Cowordism::from_edges(Boundary::unit(), Boundary::standard(), vec![Edge::new(1, encode_tree(t), 2)], vec![])
        .expect("one edge on lr")
}

/// `ρ(A_k(α₁,…,α_k)) = A_k ρ(α₁) … ρ(α_k)`.
pub fn rho_tree(t: &Tree) -> Term {
    Term::apps(Term::Const(tree_constant(&t.label, t.children.len())), t.children.iter().map(rho_tree))
}

/// `Tree_{N,n}` interpreted by the elementary tree cowordisms.
pub fn tree_signature(labels: &[&str], max_branching: usize) -> LinearSignature {
    let tt = LinType::atom("T");
    let mut interp = SignatureInterpretation::default();
    interp.types.insert("T".into(), Boundary::standard());
    let mut constants = BTreeMap::new();
    for l in labels {
        for k in 0..=max_branching {
            let name = tree_constant(l, k);
            constants.insert(name.clone(), LinType::curried(&vec![tt.clone(); k], tt.clone()));
            interp.constants.insert(name, cat::name(&elementary_tree_cowordism(l, k)));
        }
    }
    LinearSignature { atoms: [String::from("T")].into_iter().collect(), constants, interpretation: Some(interp) }
}

/// Every tree with at most `depth` levels and branching at most
/// `max_branching` over `labels`.
pub fn all_trees(labels: &[&str], max_branching: usize, depth: usize) -> Vec<Tree> {
    if depth == 0 {
        return Vec::new();
    }
    let below = all_trees(labels, max_branching, depth - 1);
    let mut out = Vec::new();
    for l in labels {
        for k in 0..=max_branching {
            let mut tuples: Vec<Vec<Tree>> = vec![vec![]];
            for _ in 0..k {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        below.iter().map(move |c| {
                            let mut t = t.clone();
                            t.push(c.clone());
                            t
                        })
                    })
                    .collect();
            }
            out.extend(tuples.into_iter().map(|children| Tree { label: l.to_string(), children }));
        }
    }
    out
}

/// A random well-typed linear term, built top-down. Missing constants are
/// added to `sig` with the type they are needed at; a constant's cowordism
/// is drawn by `interpret` when the signature is interpreted.
pub struct TermGenerator<'a, R: Rng> {
    pub rng: &'a mut R,
    pub sig: LinearSignature,
    pub types: Vec<LinType>,
    pub interpret: &'a mut dyn FnMut(&mut R, &Boundary) -> Option<Cowordism>,
    fresh: usize,
}

impl<'a, R: Rng> TermGenerator<'a, R> {
    pub fn new(
        rng: &'a mut R,
        sig: LinearSignature,
        types: Vec<LinType>,
        interpret: &'a mut dyn FnMut(&mut R, &Boundary) -> Option<Cowordism>,
    ) -> Self {
        TermGenerator { rng, sig, types, interpret, fresh: 0 }
    }

    fn fresh_name(&mut self, base: &str) -> String {
        self.fresh += 1;
        format!("{base}{}", self.fresh)
    }

    fn constant_of(&mut self, ty: &LinType) -> Term {
        if let Some((c, _)) =
            self.sig.constants.iter().filter(|(_, t)| *t == ty).collect::<Vec<_>>().choose(self.rng)
        {
            return Term::constant(c);
        }
        let mut name = self.fresh_name("k");
        while self.sig.constants.contains_key(&name) {
            name = self.fresh_name("k");
        }
        if let Some(interp) = self.sig.interpretation.as_mut() {
            let b = interp.type_boundary(ty).expect("interpreted atoms");
            let c = (self.interpret)(self.rng, &b).expect("balanced boundary");
            interp.constants.insert(name.clone(), c);
        }
        self.sig.constants.insert(name.clone(), ty.clone());
        Term::constant(&name)
    }

    /// A term `t` with `ctx ⊢ t : ty`, using the context in order.
    pub fn term(&mut self, ctx: &[(String, LinType)], ty: &LinType, budget: usize) -> Term {
        if budget <= 1 || self.rng.gen_range(0..4) == 0 {
            return self.spine(ctx, ty);
        }
        match self.rng.gen_range(0..3) {
            0 => {
                if let LinType::Arrow(a, b) = ty {
                    let x = self.fresh_name("x");
                    let mut inner = ctx.to_vec();
                    inner.insert(self.rng.gen_range(0..=ctx.len()), (x.clone(), (**a).clone()));
                    return Term::lam_typed(&x, (**a).clone(), self.term(&inner, b, budget - 1));
                }
                self.spine(ctx, ty)
            }
            1 => {
                // a redex (λx.t) s
                let a = self.types.choose(self.rng).expect("type pool").clone();
                let cut = self.rng.gen_range(0..=ctx.len());
                let x = self.fresh_name("x");
                let mut inner = ctx[..cut].to_vec();
                inner.insert(self.rng.gen_range(0..=cut), (x.clone(), a.clone()));
                let body = self.term(&inner, ty, budget / 2);
                let arg = self.term(&ctx[cut..], &a, budget / 2);
                Term::app(Term::lam_typed(&x, a, body), arg)
            }
            _ => {
                let a = self.types.choose(self.rng).expect("type pool").clone();
                let cut = self.rng.gen_range(0..=ctx.len());
                let f = self.term(&ctx[..cut], &LinType::arrow(a.clone(), ty.clone()), budget / 2);
                let arg = self.term(&ctx[cut..], &a, budget / 2);
                Term::app(f, arg)
            }
        }
    }

    /// `x` when the context is exactly `x : ty`, else a constant applied
    /// to the context variables in order.
    fn spine(&mut self, ctx: &[(String, LinType)], ty: &LinType) -> Term {
        if ctx.len() == 1 && ctx[0].1 == *ty {
            return Term::Var(ctx[0].0.clone());
        }
        let args: Vec<LinType> = ctx.iter().map(|(_, t)| t.clone()).collect();
        let head = self.constant_of(&LinType::curried(&args, ty.clone()));
        Term::apps(head, ctx.iter().map(|(x, _)| Term::Var(x.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mll;
    use crate::random::{random_cowordism, seeded, RandomConfig};

    fn ab() -> Vec<Symbol> {
        vec![Symbol::new("a"), Symbol::new("b")]
    }

    #[test]
    fn typing_basics() {
        let sig = string_signature(&ab());
        let o = LinType::atom("O");
        let id = typecheck(&sig, &[("x".into(), o.clone())], &Term::var("x"), Some(&o)).unwrap();
        assert_eq!(id.rule, TypingRule::Id);
        let t = rho(&Word::parse("a b"));
        assert_eq!(t.to_string(), "\\x. a (b x)");
        let d = typecheck(&sig, &[], &t, Some(&str_type())).unwrap();
        assert!(d.is_linear());
        let dup = Term::lam("x", Term::app(Term::var("x"), Term::var("x")));
        assert!(typecheck(&sig, &[], &dup, Some(&LinType::arrow(str_type(), o.clone()))).is_err());
        let unused = Term::lam("x", Term::constant("a"));
        assert!(typecheck(&sig, &[], &unused, Some(&LinType::arrow(o.clone(), str_type()))).is_err());
        assert!(typecheck(&sig, &[], &Term::app(Term::constant("a"), Term::constant("b")), None).is_err());
    }

    #[test]
    fn beta_steps() {
        let id = Term::app(Term::lam("x", Term::var("x")), Term::constant("c"));
        assert_eq!(beta_normalize(&id), Term::constant("c"));
        let t = Term::app(
            Term::lam("x", Term::app(Term::constant("a"), Term::var("x"))),
            Term::app(Term::constant("b"), Term::constant("c")),
        );
        let n = beta_normalize(&t);
        assert_eq!(n.to_string(), "a (b c)");
        assert_eq!(beta_normalize(&n), n);
        // capture: (λx.λy.x y) y  ~>  λy1. y y1
        let cap = Term::app(Term::lam("x", Term::lam("y", Term::app(Term::var("x"), Term::var("y")))), Term::var("y"));
        let n = beta_normalize(&cap);
        assert!(n.alpha_eq(&Term::lam("z", Term::app(Term::var("y"), Term::var("z")))));
        assert_eq!(eta_contract(&n), Term::var("y"));
    }

    #[test]
    fn string_terms() {
        let sig = string_signature(&ab());
        assert_eq!(rho(&Word::empty()), Term::lam("x", Term::var("x")));
        for w in ["", "a", "a b", "b b a"] {
            let w = Word::parse(w);
            let c = interpret_judgement(&sig, &[], &rho(&w), &str_type()).unwrap();
            assert_eq!(c.body().edges(), &[Edge::new(1, w.clone(), 2)]);
            assert_eq!(unrho(&rho(&w)).unwrap(), w);
        }
        let t = Term::lam("x", Term::app(rho(&Word::parse("a")), Term::app(Term::constant("b"), Term::var("x"))));
        assert_eq!(unrho(&t).unwrap(), Word::parse("a b"));
        assert_eq!(unrho(&Term::constant("a")).unwrap(), Word::parse("a"));
    }

    #[test]
    fn judgement_context_order_is_respected() {
        let sig = string_signature(&ab());
        let o = LinType::atom("O");
        let s = str_type();
        // f:str, g:str ⊢ λx. g (f x) : str
        let t = Term::lam("x", Term::app(Term::var("g"), Term::app(Term::var("f"), Term::var("x"))));
        let ctx = vec![("f".to_string(), s.clone()), ("g".to_string(), s.clone())];
        let c = interpret_judgement(&sig, &ctx, &t, &s).unwrap();
        // plug [a] for f and [b] for g: expect "b a"
        let a = sig.interpretation.as_ref().unwrap().constants["a"].clone();
        let b = sig.interpretation.as_ref().unwrap().constants["b"].clone();
        let r = cat::compose(&cat::tensor(&a, &b), &c).unwrap();
        assert_eq!(r.body().edges(), &[Edge::new(1, Word::parse("b a"), 2)]);
        let _ = o;
    }

    #[test]
    fn trees() {
        let t = Tree::node("A", vec![Tree::leaf("B"), Tree::leaf("C")]);
        assert_eq!(encode_tree(&t).to_string(), "A_2^0 B_0^0 A_2^1 C_0^0 A_2^2");
        assert_eq!(decode_tree(&encode_tree(&t)), Some(t.clone()));
        assert_eq!(decode_tree(&Word::parse("A_1^0 A_1^1")), None);
        assert_eq!(elementary_tree_cowordism("A", 0).body().edges(), &[Edge::new(1, Word::parse("A_0^0"), 2)]);
        let parts: Vec<Cowordism> = t.children.iter().map(tree_cowordism).collect();
        let composed = cat::compose(&cat::tensor_all(&parts), &elementary_tree_cowordism("A", 2)).unwrap();
        assert_eq!(composed, tree_cowordism(&t));
        let sig = tree_signature(&["A", "B", "C"], 2);
        let c = interpret_judgement(&sig, &[], &rho_tree(&t), &LinType::atom("T")).unwrap();
        assert_eq!(c, tree_cowordism(&t));
        assert_eq!(all_trees(&["A"], 1, 3).len(), 3);
    }

    fn random_sig() -> LinearSignature {
        let mut interp = SignatureInterpretation::default();
        interp.types.insert("A".into(), Boundary::standard());
        interp.types.insert("B".into(), Boundary::parse("rrll").unwrap());
        LinearSignature { atoms: ["A", "B"].iter().map(|s| s.to_string()).collect(), constants: BTreeMap::new(), interpretation: Some(interp) }
    }

    fn pool() -> Vec<LinType> {
        let a = LinType::atom("A");
        let b = LinType::atom("B");
        vec![a.clone(), b.clone(), LinType::arrow(a.clone(), b.clone()), LinType::arrow(b.clone(), a.clone())]
    }

    #[test]
    fn generated_terms_are_typed_and_beta_invariant() {
        let mut rng = seeded(21);
        let cfg = RandomConfig { alphabet: ab(), max_label: 2, cyclic_percent: 0 };
        let mut draw = |r: &mut crate::random::TestRng, b: &Boundary| random_cowordism(r, &Boundary::unit(), b, &cfg);
        let mut g = TermGenerator::new(&mut rng, random_sig(), pool(), &mut draw);
        for i in 0..40 {
            let ty = g.types[i % 4].clone();
            let t = g.term(&[], &ty, 10);
            let sig = g.sig.clone();
            let d = typecheck(&sig, &[], &t, Some(&ty)).unwrap();
            assert!(d.is_linear());
            let n = beta_normalize(&t);
            let lhs = interpret_judgement(&sig, &[], &t, &ty).unwrap();
            let rhs = interpret_judgement(&sig, &[], &n, &ty).unwrap();
            assert_eq!(lhs, rhs, "{t}");
        }
    }

    #[test]
    fn translated_proofs_have_the_named_interpretation() {
        let mut rng = seeded(8);
        let cfg = RandomConfig { alphabet: ab(), max_label: 2, cyclic_percent: 0 };
        let mut draw = |r: &mut crate::random::TestRng, b: &Boundary| random_cowordism(r, &Boundary::unit(), b, &cfg);
        let mut g = TermGenerator::new(&mut rng, random_sig(), pool(), &mut draw);
        for i in 0..30 {
            let ctx: Context = (0..i % 3).map(|j| (format!("v{j}"), pool()[(i + j) % 4].clone())).collect();
            let ty = pool()[i % 4].clone();
            let t = g.term(&ctx, &ty, 9);
            let sig = g.sig.clone();
            let d = typecheck(&sig, &ctx, &t, Some(&ty)).unwrap();
            let ill = interpret_typing(sig.interpretation.as_ref().unwrap(), &d).unwrap();
            let ll_sig = signature_to_cowordism_signature(&sig).unwrap();
            let p = ill_proof_to_ll(&d);
            let j = mll::interpret_proof(&p, &ll_sig.literals, &ll_sig).unwrap();
            let dctx: Vec<LinType> = d.context.iter().map(|(_, t)| t.clone()).collect();
            assert_eq!(j.sequent, ill_to_ll(&dctx, &ty));
            assert_eq!(j.cowordism, cat::name(&ill), "{t}");
        }
    }

    #[test]
    fn second_order_enumeration() {
        let s = LinType::atom("S");
        let sig = LinearSignature {
            atoms: ["S".to_string()].into_iter().collect(),
            constants: [("z".to_string(), s.clone()), ("f".to_string(), LinType::arrow(s.clone(), s.clone()))]
                .into_iter()
                .collect(),
            interpretation: None,
        };
        let ts = second_order_terms(&sig, "S", 3).unwrap();
        let shown: Vec<String> = ts.iter().map(Term::to_string).collect();
        assert_eq!(shown, vec!["z", "f z", "f (f z)"]);
    }
}
