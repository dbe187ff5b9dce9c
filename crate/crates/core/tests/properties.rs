use proptest::prelude::*;

use cowordism::acg::{beta_eta_normalize, beta_normalize, decode_tree, encode_tree, rho, unrho, Tree};
use cowordism::fixtures::{decode_numerals, irreducible_list};
use cowordism::laws;
use cowordism::llg::random_par_lexicon;
use cowordism::mcfg::random_mcfg;
use cowordism::multiword::{Symbol, Word};
use cowordism::random::{random_any, random_from, seeded, RandomConfig};
use cowordism::syntax;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!["a", "b", "c"]), 0..8)
        .prop_map(|v| Word(v.into_iter().map(Symbol::new).collect()))
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = prop::sample::select(vec!["A", "B"]).prop_map(Tree::leaf);
    leaf.prop_recursive(3, 24, 3, |inner| {
        (prop::sample::select(vec!["A", "B"]), prop::collection::vec(inner, 1..=3))
            .prop_map(|(l, cs)| Tree::node(l, cs))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn category_laws(seed in any::<u64>()) {
        let cfg = RandomConfig::default();
        let mut rng = seeded(seed);
        let f = random_any(&mut rng, 5, &cfg);
        let g = random_from(&mut rng, f.target(), 5, &cfg);
        let h = random_from(&mut rng, g.target(), 5, &cfg);
        let f2 = random_any(&mut rng, 5, &cfg);
        let g2 = random_from(&mut rng, f2.target(), 5, &cfg);
        prop_assert_eq!(laws::associativity(&f, &g, &h), Ok(()));
        prop_assert_eq!(laws::identities(&f), Ok(()));
        prop_assert_eq!(laws::monoidal(&f, &g, &h), Ok(()));
        prop_assert_eq!(laws::interchange(&f, &g, &f2, &g2), Ok(()));
        prop_assert_eq!(laws::symmetry(&f, &f2), Ok(()));
        prop_assert_eq!(laws::duality(&f, &g), Ok(()));
        for ylen in 0..=f.source().len() {
            prop_assert_eq!(laws::closure(&f, ylen), Ok(()));
        }
        prop_assert_eq!(laws::compact(&f), Ok(()));
    }

    #[test]
    fn words_print_and_parse(w in word()) {
        prop_assert_eq!(Word::parse(&w.to_string()), w);
    }

    #[test]
    fn string_terms_round_trip(w in word()) {
        let t = rho(&w);
        prop_assert_eq!(unrho(&t).unwrap(), w);
        prop_assert_eq!(beta_normalize(&t), t.clone());
        prop_assert_eq!(beta_eta_normalize(&beta_eta_normalize(&t)), beta_eta_normalize(&t));
    }

    #[test]
    fn trees_round_trip(t in tree()) {
        prop_assert_eq!(decode_tree(&encode_tree(&t)), Some(t));
    }

    #[test]
    fn numerals_round_trip(xs in prop::collection::vec(-3i64..=3, 0..6)) {
        prop_assert_eq!(decode_numerals(&irreducible_list(&xs)), Some(xs));
    }

    #[test]
    fn mcfg_files_round_trip(seed in any::<u64>()) {
        let g = random_mcfg(&mut seeded(seed), 5);
        let text = syntax::print_mcfg(&g);
        prop_assert_eq!(syntax::parse_mcfg(&text).unwrap(), g, "{}", text);
    }

    #[test]
    fn llg_files_round_trip(seed in any::<u64>()) {
        let g = random_par_lexicon(&mut seeded(seed));
        prop_assert!(g.validate().is_empty());
        let text = syntax::print_llg(&g);
        prop_assert_eq!(syntax::parse_llg(&text).unwrap(), g, "{}", text);
    }
}
