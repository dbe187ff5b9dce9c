//! Built-in example grammars and the subset-sum oracle.

use std::sync::Arc;

use crate::syntax::AcgFile;
use crate::llg::Llg;
use crate::mcfg::Mcfg;
use crate::mll::MllProof;
use crate::multiword::{Symbol, Word};
use crate::syntax;

pub const TOY: &str = include_str!("../fixtures/toy.llg");
pub const TOY_VP: &str = include_str!("../fixtures/toy_vp.proof");
pub const TOY_SENTENCE: &str = include_str!("../fixtures/toy_sentence.proof");
pub const WANWBN: &str = include_str!("../fixtures/wanwbn.mcfg");
pub const SSP: &str = include_str!("../fixtures/ssp.llg");
pub const ANBN: &str = include_str!("../fixtures/anbn.acg");
pub const TREES: &str = include_str!("../fixtures/trees.acg");

// The embedded texts are covered by tests, so parsing cannot fail.
pub fn toy() -> Llg {
    syntax::parse_llg(TOY).expect("toy fixture")
}

/// `JOHN_LOVES_MADLY ⊢ NP⊥℘S`.
pub fn toy_vp() -> Arc<MllProof> {
    syntax::parse_proof(TOY_VP).expect("toy fixture")
}

/// "Mary who John loves madly leaves", built on [`toy_vp`].
pub fn toy_sentence() -> Arc<MllProof> {
    syntax::parse_proof(TOY_SENTENCE).expect("toy fixture")
}

pub fn wanwbn() -> Mcfg {
    syntax::parse_mcfg(WANWBN).expect("wanwbn fixture")
}

pub fn ssp() -> Llg {
    syntax::parse_llg(SSP).expect("ssp fixture")
}

pub fn anbn() -> AcgFile {
    syntax::parse_acg(ANBN).expect("anbn fixture")
}

pub fn trees() -> AcgFile {
    syntax::parse_acg(TREES).expect("trees fixture")
}

/// The list marker, spelled `.` in files.
pub const BULLET: &str = ".";

/// Reads a word as a list of numerals: each `.` opens a numeral, each `+`
/// and `-` adds or subtracts one. `None` if the word does not start with `.`
/// or has a foreign symbol.
pub fn decode_numerals(w: &Word) -> Option<Vec<i64>> {
    let mut out: Vec<i64> = Vec::new();
    for s in w.symbols() {
        match s.as_str() {
            "." => out.push(0),
            "+" => *out.last_mut()? += 1,
            "-" => *out.last_mut()? -= 1,
            _ => return None,
        }
    }
    Some(out)
}

/// Some nonempty sub-multiset sums to zero. Exhaustive, so keep lists short.
pub fn has_zero_sum_sublist(xs: &[i64]) -> bool {
    assert!(xs.len() <= 20, "zero-sum oracle is exponential");
    (1u32..1 << xs.len()).any(|mask| xs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x).sum::<i64>() == 0)
}

/// The canonical encoding: `.` then `|n|` marks of the sign of `n`.
pub fn irreducible_list(xs: &[i64]) -> Word {
    let mut out = Vec::new();
    for &x in xs {
        out.push(Symbol::new(BULLET));
        let mark = if x < 0 { "-" } else { "+" };
        out.extend((0..x.unsigned_abs()).map(|_| Symbol::new(mark)));
    }
    Word(out)
}

/// Axiom-use budget for finding the irreducible list of a yes-instance.
pub fn ssp_budget(w: &Word) -> usize {
    4 * w.len() + 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::llg::{generate, member, GenerationBudget};
    use crate::mcfg::mcfg_language;
    use crate::mll::Formula;

    #[test]
    fn fixtures_parse_and_validate() {
        assert!(toy().validate().is_empty());
        assert!(ssp().validate().is_empty());
        assert!(wanwbn().validate().is_empty());
        assert!(anbn().acg.validate().is_empty(), "{:?}", anbn().acg.validate());
        assert!(trees().acg.validate().is_empty(), "{:?}", trees().acg.validate());
    }

    #[test]
    fn scripted_toy_derivation() {
        let g = toy();
        let vp = g.derive(&toy_vp()).unwrap();
        assert_eq!(vp.sequent, vec![Formula::par(Formula::neg("NP"), Formula::pos("S"))]);
        let labels: Vec<String> = vp.cowordism.body().edges().iter().map(|e| e.label.to_string()).collect();
        assert_eq!(labels.iter().filter(|l| !l.is_empty()).collect::<Vec<_>>(), ["John loves", "madly"]);
        let s = g.derive(&toy_sentence()).unwrap();
        assert_eq!(g.word_of(&s), Some(Word::parse("Mary who John loves madly leaves")));
    }

    #[test]
    fn wanwbn_small_bound() {
        let l = mcfg_language(&wanwbn(), 4);
        let got: Vec<String> = l.iter().map(|w| w.to_string()).collect();
        assert!(got.contains(&"".to_string()));
        assert!(got.contains(&"a b".to_string()));
        assert!(got.contains(&"a a a b".to_string()));
        assert!(got.contains(&"b a b b".to_string()));
        assert!(got.contains(&"a a b b".to_string()));
        assert!(!got.contains(&"b a".to_string()));
    }

    #[test]
    fn oracle() {
        assert_eq!(decode_numerals(&Word::parse(". + + . - ."),), Some(vec![2, -1, 0]));
        assert_eq!(decode_numerals(&Word::parse("+ .")), None);
        assert!(has_zero_sum_sublist(&[2, -1, -1]));
        assert!(has_zero_sum_sublist(&[2, 1, -1, 5]));
        assert!(!has_zero_sum_sublist(&[1, 2]));
        assert_eq!(irreducible_list(&[2, -1, 0]).to_string(), ". + + . - .");
    }

    /// open_H puts the free entries before the list it extends, so the last
    /// entry always belongs to a zero-sum sub-multiset.
    #[test]
    fn ssp_lists_end_inside_a_zero_sum_block() {
        let r = generate(&ssp(), &GenerationBudget::axioms(7));
        for w in &r.words {
            let xs = decode_numerals(&w.word).expect("numeral list");
            let (last, rest) = xs.split_last().expect("non-empty");
            let hit = (0u32..1 << rest.len()).any(|m| last + rest.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, x)| x).sum::<i64>() == 0);
            assert!(hit, "{}", w.word);
        }
        let w = irreducible_list(&[0, -1]);
        assert!(member(&ssp(), &w, &GenerationBudget::axioms(ssp_budget(&w))).witness.is_none());
    }

    #[test]
    fn ssp_small_words_are_sound_and_complete() {
        let g = ssp();
        let r = generate(&g, &GenerationBudget::axioms(6));
        assert!(!r.words.is_empty());
        for w in &r.words {
            let xs = decode_numerals(&w.word).expect("numeral list");
            assert!(has_zero_sum_sublist(&xs), "{}", w.word);
        }
        for xs in [vec![0], vec![1, -1], vec![2, 1, -2]] {
            let w = irreducible_list(&xs);
            let m = member(&g, &w, &GenerationBudget::axioms(ssp_budget(&w)));
            assert!(m.witness.is_some(), "{w}");
        }
    }
}
