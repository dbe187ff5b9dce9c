//! Multiplicative linear logic: formulas, one-sided sequent proofs and their
//! interpretation as cowordisms.
//!
//! A sequent `⊢A₁,…,Aₙ` is read as a point `1 → A₁℘…℘Aₙ`, whose concrete
//! boundary is `[Aₙ]⊗…⊗[A₁]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::category::{self as cat, Cowordism};
use crate::error::{Error, Result};
use crate::multiword::Boundary;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Formula {
    Pos(String),
    Neg(String),
    Tensor(Box<Formula>, Box<Formula>),
    Par(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn pos(name: &str) -> Formula {
        Formula::Pos(name.to_string())
    }

    pub fn neg(name: &str) -> Formula {
        Formula::Neg(name.to_string())
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn par(a: Formula, b: Formula) -> Formula {
        Formula::Par(Box::new(a), Box::new(b))
    }

    /// `A⊸B = A⊥℘B`.
    pub fn lolli(a: Formula, b: Formula) -> Formula {
        Formula::par(a.negate(), b)
    }

    /// De Morgan negation.
    pub fn negate(&self) -> Formula {
        match self {
            Formula::Pos(n) => Formula::Neg(n.clone()),
            Formula::Neg(n) => Formula::Pos(n.clone()),
            Formula::Tensor(a, b) => Formula::par(a.negate(), b.negate()),
            Formula::Par(a, b) => Formula::tensor(a.negate(), b.negate()),
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Formula::Pos(_) | Formula::Neg(_))
    }

    pub fn has_tensor(&self) -> bool {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => false,
            Formula::Tensor(..) => true,
            Formula::Par(a, b) => a.has_tensor() || b.has_tensor(),
        }
    }

    pub fn connectives(&self) -> usize {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => 0,
            Formula::Tensor(a, b) | Formula::Par(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }

    /// Names of the literals occurring in the formula.
    pub fn atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Pos(n) | Formula::Neg(n) => {
                if !out.contains(n) {
                    out.push(n.clone())
                }
            }
            Formula::Tensor(a, b) | Formula::Par(a, b) => {
                a.atoms(out);
                b.atoms(out);
            }
        }
    }

    /// All subformulas, the formula itself included.
    pub fn subformulas(&self, out: &mut Vec<Formula>) {
        out.push(self.clone());
        if let Formula::Tensor(a, b) | Formula::Par(a, b) = self {
            a.subformulas(out);
            b.subformulas(out);
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Pos(_) | Formula::Neg(_) => 3,
            Formula::Tensor(..) => 2,
            Formula::Par(..) => 1,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, child: &Formula, min: u8| {
            if child.precedence() < min {
                write!(f, "({child})")
            } else {
                write!(f, "{child}")
            }
        };
        match self {
            Formula::Pos(n) => f.write_str(n),
            Formula::Neg(n) => write!(f, "{n}^"),
            Formula::Tensor(a, b) => {
                side(f, a, 2)?;
                f.write_str(" * ")?;
                side(f, b, 3)
            }
            Formula::Par(a, b) => {
                side(f, a, 1)?;
                f.write_str(" @ ")?;
                side(f, b, 2)
            }
        }
    }
}

pub type Sequent = Vec<Formula>;

pub fn sequent_to_string(seq: &[Formula]) -> String {
    let items: Vec<String> = seq.iter().map(|f| f.to_string()).collect();
    format!("|- {}", items.join(", "))
}

/// Proof trees. Exchange and par name the 1-based position `k` of the first
/// of the two formulas involved.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MllProof {
    Id(Formula),
    Ax(String),
    Cut(Arc<MllProof>, Arc<MllProof>),
    Ex(Arc<MllProof>, usize),
    Par(Arc<MllProof>, usize),
    Tensor(Arc<MllProof>, Arc<MllProof>),
}

impl MllProof {
    pub fn cut(a: Arc<MllProof>, b: Arc<MllProof>) -> Arc<MllProof> {
        Arc::new(MllProof::Cut(a, b))
    }

    pub fn ex(p: Arc<MllProof>, k: usize) -> Arc<MllProof> {
        Arc::new(MllProof::Ex(p, k))
    }

    pub fn par(p: Arc<MllProof>, k: usize) -> Arc<MllProof> {
        Arc::new(MllProof::Par(p, k))
    }

    pub fn tensor(a: Arc<MllProof>, b: Arc<MllProof>) -> Arc<MllProof> {
        Arc::new(MllProof::Tensor(a, b))
    }

    pub fn ax(name: &str) -> Arc<MllProof> {
        Arc::new(MllProof::Ax(name.to_string()))
    }

    pub fn id(f: Formula) -> Arc<MllProof> {
        Arc::new(MllProof::Id(f))
    }

    /// Number of rule nodes, exchanges excluded.
    pub fn size(&self) -> usize {
        match self {
            MllProof::Id(_) | MllProof::Ax(_) => 1,
            MllProof::Ex(p, _) => p.size(),
            MllProof::Par(p, _) => 1 + p.size(),
            MllProof::Cut(a, b) | MllProof::Tensor(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Number of lexicon axiom leaves.
    pub fn axiom_uses(&self) -> usize {
        match self {
            MllProof::Id(_) => 0,
            MllProof::Ax(_) => 1,
            MllProof::Ex(p, _) | MllProof::Par(p, _) => p.axiom_uses(),
            MllProof::Cut(a, b) | MllProof::Tensor(a, b) => a.axiom_uses() + b.axiom_uses(),
        }
    }

    /// Names of lexicon axioms used, left to right.
    pub fn axioms(&self, out: &mut Vec<String>) {
        match self {
            MllProof::Id(_) => {}
            MllProof::Ax(n) => out.push(n.clone()),
            MllProof::Ex(p, _) | MllProof::Par(p, _) => p.axioms(out),
            MllProof::Cut(a, b) | MllProof::Tensor(a, b) => {
                a.axioms(out);
                b.axioms(out)
            }
        }
    }

    pub fn has_logical_rules(&self) -> bool {
        match self {
            MllProof::Id(_) | MllProof::Ax(_) => false,
            MllProof::Par(..) | MllProof::Tensor(..) => true,
            MllProof::Ex(p, _) => p.has_logical_rules(),
            MllProof::Cut(a, b) => a.has_logical_rules() || b.has_logical_rules(),
        }
    }
}

impl fmt::Display for MllProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MllProof::Id(a) => write!(f, "ID({a})"),
            MllProof::Ax(n) => write!(f, "AX({n})"),
            MllProof::Cut(a, b) => write!(f, "CUT({a}, {b})"),
            MllProof::Ex(p, k) => write!(f, "EX@{k}({p})"),
            MllProof::Par(p, k) => write!(f, "PAR@{k}({p})"),
            MllProof::Tensor(a, b) => write!(f, "TENSOR({a}, {b})"),
        }
    }
}

/// Lexicon axioms by name.
pub trait AxiomTable {
    fn lookup_axiom(&self, name: &str) -> Option<(&[Formula], &Cowordism)>;
}

impl AxiomTable for BTreeMap<String, (Sequent, Cowordism)> {
    fn lookup_axiom(&self, name: &str) -> Option<(&[Formula], &Cowordism)> {
        self.get(name).map(|(s, c)| (s.as_slice(), c))
    }
}

/// No lexicon: pure MLL.
pub struct NoAxioms;

impl AxiomTable for NoAxioms {
    fn lookup_axiom(&self, _: &str) -> Option<(&[Formula], &Cowordism)> {
        None
    }
}

/// Positive literal name to boundary.
pub type Interpretation = BTreeMap<String, Boundary>;

pub fn interpret_formula(f: &Formula, env: &Interpretation) -> Result<Boundary> {
    match f {
        Formula::Pos(n) => env.get(n).cloned().ok_or_else(|| Error::Proof(format!("unknown literal {n}"))),
        Formula::Neg(n) => env.get(n).map(|b| b.dual()).ok_or_else(|| Error::Proof(format!("unknown literal {n}"))),
        Formula::Tensor(a, b) => Ok(interpret_formula(a, env)?.tensor(&interpret_formula(b, env)?)),
        Formula::Par(a, b) => Ok(cat::par(&interpret_formula(a, env)?, &interpret_formula(b, env)?)),
    }
}

/// `[⊢A₁,…,Aₙ] = [Aₙ]⊗…⊗[A₁]`.
pub fn interpret_sequent(seq: &[Formula], env: &Interpretation) -> Result<Boundary> {
    let blocks = seq.iter().rev().map(|f| interpret_formula(f, env)).collect::<Result<Vec<_>>>()?;
    Ok(Boundary::tensor_all(blocks.iter()))
}

/// A typing judgement `σ / ⊢Γ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Judgement {
    pub sequent: Sequent,
    pub cowordism: Cowordism,
}

fn check_position(len: usize, k: usize, rule: &str) -> Result<()> {
    if k == 0 || k + 1 > len {
        return Err(Error::Proof(format!("{rule}@{k} out of range for a sequent of length {len}")));
    }
    Ok(())
}

/// The sequent derived by a proof.
pub fn conclusion(p: &MllProof, lex: &dyn AxiomTable) -> Result<Sequent> {
    match p {
        MllProof::Id(a) => Ok(vec![a.negate(), a.clone()]),
        MllProof::Ax(n) => lex
            .lookup_axiom(n)
            .map(|(s, _)| s.to_vec())
            .ok_or_else(|| Error::Proof(format!("unknown axiom {n}"))),
        MllProof::Ex(q, k) => {
            let mut s = conclusion(q, lex)?;
            check_position(s.len(), *k, "EX")?;
            s.swap(k - 1, *k);
            Ok(s)
        }
        MllProof::Par(q, k) => {
            let mut s = conclusion(q, lex)?;
            check_position(s.len(), *k, "PAR")?;
            let b = s.remove(*k);
            let a = s.remove(k - 1);
            s.insert(k - 1, Formula::par(a, b));
            Ok(s)
        }
        MllProof::Cut(a, b) => {
            let mut l = conclusion(a, lex)?;
            let r = conclusion(b, lex)?;
            match (l.last(), r.first()) {
                (Some(x), Some(y)) if x.negate() == *y => {
                    l.pop();
                    l.extend(r.into_iter().skip(1));
                    Ok(l)
                }
                _ => Err(Error::Proof("cut formulas are not dual".into())),
            }
        }
        MllProof::Tensor(a, b) => {
            let mut l = conclusion(a, lex)?;
            let r = conclusion(b, lex)?;
            let (Some(x), Some(y)) = (l.pop(), r.first().cloned()) else {
                return Err(Error::Proof("tensor of an empty sequent".into()));
            };
            l.push(Formula::tensor(x, y));
            l.extend(r.into_iter().skip(1));
            Ok(l)
        }
    }
}

/// `Id`: the copairing `1 → [A]⊗[A]⊥`.
pub fn rule_id(a: &Formula, env: &Interpretation) -> Result<Judgement> {
    let b = interpret_formula(a, env)?;
    Ok(Judgement { sequent: vec![a.negate(), a.clone()], cowordism: cat::copairing(&b) })
}

/// Exchange at 1-based `k`: a symmetry on the two adjacent blocks.
pub fn rule_ex(j: &Judgement, k: usize, env: &Interpretation) -> Result<Judgement> {
    let n = j.sequent.len();
    check_position(n, k, "EX")?;
    let high = interpret_sequent(&j.sequent[k + 1..], env)?;
    let low = interpret_sequent(&j.sequent[..k - 1], env)?;
    let a = interpret_formula(&j.sequent[k - 1], env)?;
    let b = interpret_formula(&j.sequent[k], env)?;
    let swap = cat::tensor_all(&[cat::identity(&high), cat::symmetry(&b, &a), cat::identity(&low)]);
    let mut sequent = j.sequent.clone();
    sequent.swap(k - 1, k);
    Ok(Judgement { sequent, cowordism: cat::compose(&j.cowordism, &swap)? })
}

/// `℘` at 1-based `k`: does strictly nothing to the cowordism.
pub fn rule_par(j: &Judgement, k: usize) -> Result<Judgement> {
    check_position(j.sequent.len(), k, "PAR")?;
    let mut sequent = j.sequent.clone();
    let b = sequent.remove(k);
    let a = sequent.remove(k - 1);
    sequent.insert(k - 1, Formula::par(a, b));
    Ok(Judgement { sequent, cowordism: j.cowordism.clone() })
}

/// Cut: `⊢Γ,X` and `⊢X⊥,Δ` give `⊢Γ,Δ` by partial pairing over `[X]`.
pub fn rule_cut(l: &Judgement, r: &Judgement, env: &Interpretation) -> Result<Judgement> {
    let (Some(x), Some(y)) = (l.sequent.last(), r.sequent.first()) else {
        return Err(Error::Proof("cut on an empty sequent".into()));
    };
    if x.negate() != *y {
        return Err(Error::Proof(format!("cut formulas {x} and {y} are not dual")));
    }
    let over = interpret_formula(x, env)?;
    let cowordism = cat::partial_pairing(&l.cowordism, &r.cowordism, &over)?;
    let mut sequent = l.sequent[..l.sequent.len() - 1].to_vec();
    sequent.extend_from_slice(&r.sequent[1..]);
    Ok(Judgement { sequent, cowordism })
}

/// `⊗`: `⊢Γ,A` and `⊢B,Δ` give `⊢Γ,A⊗B,Δ` via the internal tensor.
pub fn rule_tensor(l: &Judgement, r: &Judgement, env: &Interpretation) -> Result<Judgement> {
    let (Some(a), Some(b)) = (l.sequent.last(), r.sequent.first()) else {
        return Err(Error::Proof("tensor of an empty sequent".into()));
    };
    let gamma = interpret_sequent(&l.sequent[..l.sequent.len() - 1], env)?;
    let delta = interpret_sequent(&r.sequent[1..], env)?;
    let ba = interpret_formula(a, env)?;
    let bb = interpret_formula(b, env)?;
    let delta_map = cat::internal_tensor(&gamma, &ba, &bb, &delta);
    let cowordism = cat::compose(&cat::tensor(&l.cowordism, &r.cowordism), &delta_map)?;
    let mut sequent = l.sequent[..l.sequent.len() - 1].to_vec();
    sequent.push(Formula::tensor(a.clone(), b.clone()));
    sequent.extend_from_slice(&r.sequent[1..]);
    Ok(Judgement { sequent, cowordism })
}

/// A lexicon leaf, checked against the interpretation of its sequent.
pub fn rule_ax(name: &str, env: &Interpretation, lex: &dyn AxiomTable) -> Result<Judgement> {
    let (seq, c) = lex.lookup_axiom(name).ok_or_else(|| Error::Proof(format!("unknown axiom {name}")))?;
    let expect = interpret_sequent(seq, env)?;
    if !c.source().is_empty() || c.target() != &expect {
        return Err(Error::Mismatch(format!(
            "axiom {name}: cowordism boundary {} does not match [{}] = {}",
            c.target(),
            sequent_to_string(seq),
            expect
        )));
    }
    Ok(Judgement { sequent: seq.to_vec(), cowordism: c.clone() })
}

/// Interprets a proof compositionally.
pub fn interpret_proof(p: &MllProof, env: &Interpretation, lex: &dyn AxiomTable) -> Result<Judgement> {
    let j = match p {
        MllProof::Id(a) => rule_id(a, env)?,
        MllProof::Ax(n) => rule_ax(n, env, lex)?,
        MllProof::Ex(q, k) => rule_ex(&interpret_proof(q, env, lex)?, *k, env)?,
        MllProof::Par(q, k) => rule_par(&interpret_proof(q, env, lex)?, *k)?,
        MllProof::Cut(a, b) => rule_cut(&interpret_proof(a, env, lex)?, &interpret_proof(b, env, lex)?, env)?,
        MllProof::Tensor(a, b) => {
            rule_tensor(&interpret_proof(a, env, lex)?, &interpret_proof(b, env, lex)?, env)?
        }
    };
    debug_assert_eq!(
        interpret_sequent(&j.sequent, env).ok().as_ref(),
        Some(j.cowordism.target()),
        "factor order of an interpreted sequent"
    );
    Ok(j)
}

/// Wraps `p` in adjacent exchanges so that the formula at old index
/// `order[i]` ends up at position `i` (0-based).
pub fn reorder(p: Arc<MllProof>, order: &[usize]) -> Arc<MllProof> {
    let mut cur: Vec<usize> = (0..order.len()).collect();
    let mut p = p;
    for (pos, &want) in order.iter().enumerate() {
        let mut j = cur.iter().position(|&c| c == want).expect("order is a permutation");
        while j > pos {
            cur.swap(j - 1, j);
            p = MllProof::ex(p, j);
            j -= 1;
        }
    }
    p
}

/// Permutation moving index `from` to the end, keeping the others in order.
pub fn move_to_end(len: usize, from: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).filter(|&i| i != from).collect();
    v.push(from);
    v
}

/// Permutation moving index `from` to the front, keeping the others in order.
pub fn move_to_front(len: usize, from: usize) -> Vec<usize> {
    let mut v = vec![from];
    v.extend((0..len).filter(|&i| i != from));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiword::{Edge, Word};

    fn env() -> Interpretation {
        let mut e = Interpretation::new();
        e.insert("S".into(), Boundary::standard());
        e.insert("NP".into(), Boundary::standard());
        e.insert("P".into(), Boundary::parse("lrl").unwrap());
        e.insert("Q".into(), Boundary::parse("r").unwrap());
        e
    }

    #[test]
    fn negation_is_de_morgan() {
        let a = Formula::pos("A");
        let b = Formula::pos("B");
        assert_eq!(a.negate(), Formula::neg("A"));
        assert_eq!(Formula::tensor(a.clone(), b.clone()).negate(), Formula::par(a.negate(), b.negate()));
        let f = Formula::par(Formula::tensor(a.clone(), b.negate()), a.clone());
        assert_eq!(f.negate().negate(), f);
    }

    #[test]
    fn interpretation_of_connectives() {
        let e = env();
        let p = Formula::pos("P");
        let q = Formula::pos("Q");
        assert_eq!(interpret_formula(&Formula::pos("S"), &e).unwrap(), Boundary::standard());
        let pq = interpret_formula(&Formula::par(p.clone(), q.clone()), &e).unwrap();
        assert_eq!(pq, e["Q"].tensor(&e["P"]));
        let l = interpret_formula(&Formula::lolli(p.clone(), q.clone()), &e).unwrap();
        assert_eq!(l, e["Q"].tensor(&e["P"].dual()));
        assert_eq!(interpret_formula(&p.negate(), &e).unwrap(), e["P"].dual());
        assert!(interpret_formula(&Formula::pos("Z"), &e).is_err());
    }

    #[test]
    fn conclusions_of_rules() {
        let a = Formula::pos("A");
        let b = Formula::pos("B");
        assert_eq!(conclusion(&MllProof::Id(a.clone()), &NoAxioms).unwrap(), vec![a.negate(), a.clone()]);
        let t = MllProof::tensor(MllProof::id(a.clone()), MllProof::ex(MllProof::id(b.clone()), 1));
        assert_eq!(
            conclusion(&t, &NoAxioms).unwrap(),
            vec![a.negate(), Formula::tensor(a.clone(), b.clone()), b.negate()]
        );
        let bad = MllProof::cut(MllProof::id(a.clone()), MllProof::id(b.clone()));
        assert!(conclusion(&bad, &NoAxioms).is_err());
        assert!(conclusion(&MllProof::Ex(MllProof::id(a), 2), &NoAxioms).is_err());
    }

    #[test]
    fn id_interprets_as_copairing() {
        let j = rule_id(&Formula::pos("S"), &env()).unwrap();
        assert_eq!(j.cowordism.body().edges(), &[Edge::eps(1, 4), Edge::eps(3, 2)]);
    }

    #[test]
    fn par_rule_keeps_the_body() {
        let p = MllProof::par(MllProof::id(Formula::pos("P")), 1);
        let j = interpret_proof(&p, &env(), &NoAxioms).unwrap();
        assert_eq!(j.cowordism, cat::copairing(&env()["P"]));
        assert_eq!(j.sequent, vec![Formula::lolli(Formula::pos("P"), Formula::pos("P"))]);
    }

    #[test]
    fn cut_with_identity_is_neutral() {
        let mut lex = BTreeMap::new();
        let s = Formula::pos("S");
        let c = Cowordism::from_edges(
            Boundary::unit(),
            Boundary::standard(),
            vec![Edge::new(1, Word::parse("hello"), 2)],
            vec![],
        )
        .unwrap();
        lex.insert("H".to_string(), (vec![s.clone()], c.clone()));
        let p = MllProof::cut(MllProof::ax("H"), MllProof::id(s.clone()));
        let j = interpret_proof(&p, &env(), &lex).unwrap();
        assert_eq!(j.sequent, vec![s.clone()]);
        assert_eq!(j.cowordism, c);
    }

    #[test]
    fn reorder_realizes_permutations() {
        let seq: Vec<Formula> = ["A", "B", "C", "D"].iter().map(|n| Formula::pos(n)).collect();
        let mut lex = BTreeMap::new();
        let dummy = cat::identity(&Boundary::unit());
        lex.insert("X".to_string(), (seq.clone(), dummy));
        let order = vec![2, 0, 3, 1];
        let p = reorder(MllProof::ax("X"), &order);
        let got = conclusion(&p, &lex).unwrap();
        let want: Vec<Formula> = order.iter().map(|&i| seq[i].clone()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn formula_display_round_trips_precedence() {
        let a = Formula::pos("A");
        let b = Formula::neg("B");
        let c = Formula::pos("C");
        let f = Formula::tensor(Formula::par(a.clone(), b.clone()), c.clone());
        assert_eq!(f.to_string(), "(A @ B^) * C");
        let g = Formula::par(a.clone(), Formula::tensor(b.clone(), c.clone()));
        assert_eq!(g.to_string(), "A @ B^ * C");
    }
}
