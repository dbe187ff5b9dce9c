//! Cowordism signatures and linear logic grammars.

mod search;
mod shapes;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::Cowordism;
use crate::error::{Error, Result};
use crate::mll::{self, AxiomTable, Formula, Interpretation, Judgement, MllProof, Sequent};
use crate::multiword::{Boundary, Edge, Symbol, Word};
use crate::random::{random_cowordism, RandomConfig};

pub use search::{generate, member, GenerationBudget, GenerationResult, Generated, MemberResult};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Axiom {
    pub name: String,
    pub sequent: Sequent,
    pub cowordism: Cowordism,
}

/// `Σ = (N, T, Ξ)`: literal interpretation, alphabet and typed axioms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CowordismSignature {
    pub literals: Interpretation,
    pub alphabet: Vec<Symbol>,
    pub axioms: Vec<Axiom>,
}

impl CowordismSignature {
    pub fn axiom(&self, name: &str) -> Option<&Axiom> {
        self.axioms.iter().find(|a| a.name == name)
    }

    pub fn add_axiom(&mut self, name: &str, sequent: Sequent, cowordism: Cowordism) {
        self.axioms.push(Axiom { name: name.to_string(), sequent, cowordism });
    }

    /// No connective anywhere in the lexicon.
    pub fn is_logic_free(&self) -> bool {
        self.axioms.iter().all(|a| a.sequent.iter().all(Formula::is_literal))
    }

    pub fn is_tensor_free(&self) -> bool {
        self.axioms.iter().all(|a| a.sequent.iter().all(|f| !f.has_tensor()))
    }
}

impl AxiomTable for CowordismSignature {
    fn lookup_axiom(&self, name: &str) -> Option<(&[Formula], &Cowordism)> {
        self.axiom(name).map(|a| (a.sequent.as_slice(), &a.cowordism))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Llg {
    pub signature: CowordismSignature,
    pub start: String,
}

impl Llg {
    /// Diagnostics for the signature invariants; empty when valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let sig = &self.signature;
        match sig.literals.get(&self.start) {
            None => out.push(format!("start literal {} is not declared", self.start)),
            Some(b) if *b != Boundary::standard() => out.push(format!(
                "start literal {} is interpreted as {b}, not as a standard type lr",
                self.start
            )),
            _ => {}
        }
        let mut names = BTreeSet::new();
        for a in &sig.axioms {
            if !names.insert(a.name.as_str()) {
                out.push(format!("axiom {} is declared twice", a.name));
            }
            if a.sequent.is_empty() {
                out.push(format!("axiom {} has an empty sequent", a.name));
                continue;
            }
            match mll::interpret_sequent(&a.sequent, &sig.literals) {
                Err(e) => out.push(format!("axiom {}: {e}", a.name)),
                Ok(b) => {
                    if !a.cowordism.source().is_empty() || a.cowordism.target() != &b {
                        out.push(format!(
                            "axiom {}: body boundary {} does not match the sequent interpretation {b}",
                            a.name,
                            a.cowordism.body().boundary()
                        ));
                    }
                }
            }
            for e in a.cowordism.body().edges() {
                for s in e.label.symbols() {
                    if !sig.alphabet.is_empty() && !sig.alphabet.contains(s) {
                        out.push(format!("axiom {}: symbol {s} is not in the alphabet", a.name));
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

    /// The judgement generated by a proof with lexicon leaves.
    pub fn derive(&self, proof: &MllProof) -> Result<Judgement> {
        mll::interpret_proof(proof, &self.signature.literals, &self.signature)
    }

    /// The word of a derived judgement if it is a regular type-S cowordism.
    pub fn word_of(&self, j: &Judgement) -> Option<Word> {
        if j.sequent != [Formula::Pos(self.start.clone())] || !j.cowordism.is_regular() {
            return None;
        }
        j.cowordism.body().edges().first().map(|e| e.label.clone())
    }
}

/// Splits every top-level `A℘B` into `A, B`, repeatedly. Names and bodies are
/// kept; only sequents change.
pub fn strip_pars(sig: &CowordismSignature) -> CowordismSignature {
    let mut out = sig.clone();
    for a in &mut out.axioms {
        a.sequent = strip_sequent(&a.sequent);
    }
    out
}

fn strip_sequent(seq: &[Formula]) -> Sequent {
    let mut s = seq.to_vec();
    while let Some(k) = s.iter().position(|f| matches!(f, Formula::Par(..))) {
        if let Formula::Par(a, b) = s.remove(k) {
            s.insert(k, *b);
            s.insert(k, *a);
        }
    }
    s
}

/// A proof over the original lexicon concluding the stripped sequent of
/// axiom `name`, by cutting the axiom against η-expanded identities.
pub fn unstrip_axiom(name: &str, original: &[Formula]) -> Arc<MllProof> {
    let mut s = original.to_vec();
    let mut p = MllProof::ax(name);
    while let Some(k) = s.iter().position(|f| matches!(f, Formula::Par(..))) {
        let n = s.len();
        let Formula::Par(a, b) = s[k].clone() else { unreachable!() };
        // ⊢Γ,Δ,A℘B
        let moved = mll::reorder(p, &mll::move_to_end(n, k));
        // ⊢A, A⊥⊗B⊥, B  then  ⊢A⊥⊗B⊥, A, B
        let t = MllProof::tensor(MllProof::ex(MllProof::id((*a).clone()), 1), MllProof::id((*b).clone()));
        let t = mll::reorder(t, &[1, 0, 2]);
        // ⊢Γ,Δ,A,B  then back to ⊢Γ,A,B,Δ
        let cut = MllProof::cut(moved, t);
        let mut order: Vec<usize> = (0..k).collect();
        order.push(n - 1);
        order.push(n);
        order.extend(k..n - 1);
        p = mll::reorder(cut, &order);
        s.remove(k);
        s.insert(k, *b);
        s.insert(k, *a);
    }
    p
}

/// Replaces stripped-lexicon leaves by their derivations over `original`.
pub fn unstrip_proof(p: &MllProof, original: &CowordismSignature) -> Arc<MllProof> {
    match p {
        MllProof::Ax(n) => match original.axiom(n) {
            Some(a) => unstrip_axiom(n, &a.sequent),
            None => Arc::new(p.clone()),
        },
        MllProof::Id(_) => Arc::new(p.clone()),
        MllProof::Ex(q, k) => MllProof::ex(unstrip_proof(q, original), *k),
        MllProof::Par(q, k) => MllProof::par(unstrip_proof(q, original), *k),
        MllProof::Cut(a, b) => MllProof::cut(unstrip_proof(a, original), unstrip_proof(b, original)),
        MllProof::Tensor(a, b) => MllProof::tensor(unstrip_proof(a, original), unstrip_proof(b, original)),
    }
}

/// A small random tensor-free lexicon over literals `A` and `S`, both `lr`,
/// and letters {a, b}. One `⊢S` and one `⊢A` leaf, then up to three
/// entries `⊢B₁⊥,…,Bₙ⊥,C` with at least one pair of neighbours joined by ℘.
pub fn random_par_lexicon<R: Rng>(rng: &mut R) -> Llg {
    let lit: Interpretation = ["A", "S"].iter().map(|n| (n.to_string(), Boundary::standard())).collect();
    let letters = vec![Symbol::new("a"), Symbol::new("b")];
    let cfg = RandomConfig { alphabet: letters.clone(), max_label: 1, cyclic_percent: 0 };
    let mut sig = CowordismSignature { literals: lit, alphabet: letters.clone(), axioms: Vec::new() };
    for (name, lit) in [("LEAF_S", "S"), ("LEAF_A", "A")] {
        let w = Word(vec![letters.choose(rng).expect("letters").clone()]);
        let body = Cowordism::from_edges(Boundary::unit(), Boundary::standard(), vec![Edge::new(1, w, 2)], vec![])
            .expect("one edge on lr");
        sig.add_axiom(name, vec![Formula::pos(lit)], body);
    }
    let atom = |rng: &mut R| if rng.gen_bool(0.5) { "A" } else { "S" };
    for i in 0..rng.gen_range(1..=3) {
        let mut seq: Vec<Formula> = (0..rng.gen_range(1..=2)).map(|_| Formula::neg(atom(rng))).collect();
        seq.push(Formula::pos(atom(rng)));
        // join neighbours by ℘, at least once
        loop {
            let k = rng.gen_range(0..seq.len() - 1);
            let b = seq.remove(k + 1);
            let a = seq.remove(k);
            seq.insert(k, Formula::par(a, b));
            if seq.len() == 1 || rng.gen_bool(0.5) {
                break;
            }
        }
        let target = mll::interpret_sequent(&seq, &sig.literals).expect("declared literals");
        let body = random_cowordism(rng, &Boundary::unit(), &target, &cfg).expect("balanced sequent");
        sig.add_axiom(&format!("W{}", i + 1), seq, body);
    }
    Llg { signature: sig, start: "S".into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category as cat;

    fn sig_with(seq: Sequent, body_edges: Vec<Edge>) -> CowordismSignature {
        let mut lit = Interpretation::new();
        lit.insert("S".into(), Boundary::standard());
        lit.insert("NP".into(), Boundary::standard());
        let target = mll::interpret_sequent(&seq, &lit).unwrap();
        let c = Cowordism::from_edges(Boundary::unit(), target, body_edges, vec![]).unwrap();
        let mut sig = CowordismSignature { literals: lit, alphabet: vec![], axioms: vec![] };
        sig.add_axiom("A", seq, c);
        sig
    }

    #[test]
    fn strip_splits_par() {
        let f = Formula::par(Formula::neg("NP"), Formula::pos("S"));
        let sig = sig_with(vec![f], vec![Edge::new(1, Word::parse("x"), 4), Edge::eps(3, 2)]);
        let st = strip_pars(&sig);
        assert_eq!(st.axioms[0].sequent, vec![Formula::neg("NP"), Formula::pos("S")]);
        assert_eq!(st.axioms[0].cowordism, sig.axioms[0].cowordism);
        assert_eq!(strip_pars(&st), st);
    }

    #[test]
    fn unstripped_leaf_reproduces_the_body() {
        let np = Formula::pos("NP");
        let s = Formula::pos("S");
        let nested = Formula::par(Formula::par(np.negate(), s.clone()), np.clone());
        let seq = vec![s.negate(), nested];
        let lit: Interpretation = [("S".to_string(), Boundary::standard()), ("NP".to_string(), Boundary::standard())]
            .into_iter()
            .collect();
        let target = mll::interpret_sequent(&seq, &lit).unwrap();
        let mut rng = crate::random::seeded(11);
        let c = crate::random::random_cowordism(&mut rng, &Boundary::unit(), &target, &Default::default()).unwrap();
        let sig = CowordismSignature { literals: lit.clone(), alphabet: vec![], axioms: vec![Axiom { name: "A".into(), sequent: seq.clone(), cowordism: c.clone() }] };
        let p = unstrip_axiom("A", &seq);
        let j = mll::interpret_proof(&p, &lit, &sig).unwrap();
        assert_eq!(j.sequent, strip_sequent(&seq));
        assert_eq!(j.cowordism.body(), c.body());
    }

    #[test]
    fn validation_catches_bad_boundaries() {
        let mut sig = sig_with(vec![Formula::pos("S")], vec![Edge::new(1, Word::parse("a"), 2)]);
        let llg = Llg { signature: sig.clone(), start: "S".into() };
        assert!(llg.validate().is_empty());
        let wrong = cat::identity(&Boundary::standard());
        sig.add_axiom("B", vec![Formula::pos("S")], cat::name(&wrong));
        let llg = Llg { signature: sig.clone(), start: "S".into() };
        let d = llg.validate();
        assert_eq!(d.len(), 1);
        assert!(d[0].contains("axiom B"));
        sig.axioms.pop();
        sig.literals.insert("S".into(), Boundary::parse("lrlr").unwrap());
        let llg = Llg { signature: sig, start: "S".into() };
        assert!(llg.validate().iter().any(|d| d.contains("standard")));
    }
}
