//! Randomized invariants over D8 and E7.

use std::sync::OnceLock;

use orthoroots::macdonald::{ExpansionTable, MacElement, Rewriter, Target};
use orthoroots::{NRootSpace, SystemType};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space(name: &str) -> &'static NRootSpace {
    static D8: OnceLock<NRootSpace> = OnceLock::new();
    static E7: OnceLock<NRootSpace> = OnceLock::new();
    let cell = if name == "D8" { &D8 } else { &E7 };
    cell.get_or_init(|| NRootSpace::build(SystemType::parse(name).unwrap()).unwrap())
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..12)
}

proptest! {
    #[test]
    fn words_compose(u in word(7), v in word(7), x in 0usize..135) {
        let sp = space("E7");
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(sp.act_word(&uv, x).unwrap(), sp.act_word(&u, sp.act_word(&v, x).unwrap()).unwrap());
    }

    #[test]
    fn reflections_are_involutions(r in 0usize..56, x in 0usize..105) {
        let sp = space("D8");
        prop_assert_eq!(sp.reflect(r, sp.reflect(r, x)), x);
    }

    #[test]
    fn simple_reflections_change_level_by_at_most_one(i in 1usize..=8, x in 0usize..105) {
        let sp = space("D8");
        let (a, b) = (sp.level(x) as i64, sp.level(sp.simple(i, x)) as i64);
        prop_assert!((a - b).abs() <= 1);
    }

    #[test]
    fn normal_forms_are_linear_and_strategy_free(
        terms in prop::collection::vec((0usize..135, -4i64..=4), 1..6),
        seed in any::<u64>(),
    ) {
        let sp = space("E7");
        let rw = Rewriter::new(sp).unwrap();
        for t in [Target::Noncrossing, Target::Nonnesting] {
            let mut e = MacElement::zero();
            let mut sum = MacElement::zero();
            for &(x, c) in &terms {
                e.add_term(x, c);
                sum.add(&rw.normalize(t, &MacElement::unit(x)), c);
            }
            let det = rw.normalize(t, &e);
            prop_assert_eq!(&det, &sum);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            prop_assert_eq!(&rw.normalize_random(t, &e, &mut rng), &det);
            prop_assert!(det.terms.keys().all(|&y| rw.is_normal(t, y)));
        }
    }
}

#[test]
fn expansion_table_matches_rewriting() {
    let sp = space("D8");
    let rw = Rewriter::new(sp).unwrap();
    let table = ExpansionTable::build(&rw, Target::Nonnesting).unwrap();
    for x in 0..sp.len() {
        assert_eq!(table.element(x), rw.normalize(Target::Nonnesting, &MacElement::unit(x)));
    }
}
