use std::collections::BTreeMap;

use morgan_kit::algebra::{check_variety, dm4, enumerate_algebras, evaluate, valid, Variety};
use morgan_kit::calculi::{expand_g3dm, expand_g3sdm, Rule};
use morgan_kit::corpus::{derivable_dm_corpus, sdm_corpus, Generator};
use morgan_kit::interpolation::{interpolate_goal, verify_interpolant, Partition};
use morgan_kit::search::{check_derivation, Prover};
use morgan_kit::syntax::{
    parse_dm_sequent, parse_sdm_sequent, parse_term, DmSequent, DmWeight, SdmWeight, SdmSequent, Sequent, Structure, Term, Var,
};
use morgan_kit::translations::{f, t_sequent};
use morgan_kit::{G3dm, G3sdm};
use proptest::prelude::*;

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => prop::sample::select(vec!["p", "q", "r"]).prop_map(Term::var),
        1 => Just(Term::Bottom),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::neg),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Term::and(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Term::or(l, r)),
        ]
    })
}

fn structure() -> impl Strategy<Value = Structure> {
    (term(), any::<bool>()).prop_map(|(t, s)| if s { Structure::Starred(t) } else { Structure::Plain(t) })
}

fn sdm_sequent(min_ant: usize) -> impl Strategy<Value = SdmSequent> {
    (prop::collection::vec(structure(), min_ant..3), structure()).prop_map(|(a, s)| Sequent::new(a, s))
}

fn dm_sequent() -> impl Strategy<Value = DmSequent> {
    (prop::collection::vec(term(), 0..3), term()).prop_map(|(a, s)| Sequent::new(a, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn term_print_parse_round_trip(t in term()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn sequent_print_parse_round_trip(s in sdm_sequent(0), d in dm_sequent()) {
        prop_assert_eq!(parse_sdm_sequent(&s.to_string()).unwrap(), s);
        prop_assert_eq!(parse_dm_sequent(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn weights_are_positive(s in sdm_sequent(0), d in dm_sequent()) {
        prop_assert!(s.sdm_weight() >= 1);
        prop_assert!(d.dm_weight() >= 1);
    }

    #[test]
    fn canonical_is_idempotent(s in sdm_sequent(0)) {
        let c = s.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c);
    }

    #[test]
    fn expansions_conclude_the_goal(s in sdm_sequent(0), d in dm_sequent()) {
        for inst in expand_g3sdm(&s) {
            prop_assert_eq!(&inst.conclusion, &s);
        }
        for inst in expand_g3dm(&d) {
            prop_assert_eq!(&inst.conclusion, &d);
        }
    }

    #[test]
    fn dm_premisses_are_lighter(d in dm_sequent()) {
        for inst in expand_g3dm(&d) {
            for p in &inst.premisses {
                prop_assert!(p.dm_weight() < d.dm_weight(), "{} by {}", p, inst.rule);
            }
        }
    }

    #[test]
    fn sdm_premisses_are_lighter_outside_star_neg_and(s in sdm_sequent(0)) {
        for inst in expand_g3sdm(&s) {
            if matches!(inst.rule, Rule::StarNegAndL | Rule::StarNegAndR) {
                continue;
            }
            for p in &inst.premisses {
                prop_assert!(p.sdm_weight() < s.sdm_weight(), "{} by {}", p, inst.rule);
            }
        }
    }

    #[test]
    fn generalized_identity(t in term()) {
        let sdm = Prover::<G3sdm>::new();
        let dm = Prover::<G3dm>::new();
        prop_assert!(sdm.derivable(&Sequent::new(vec![Structure::Plain(t.clone())], Structure::Plain(t.clone()))));
        prop_assert!(sdm.derivable(&Sequent::new(vec![Structure::Starred(t.clone())], Structure::Starred(t.clone()))));
        prop_assert!(dm.derivable(&Sequent::new(vec![t.clone()], t)));
    }

    #[test]
    fn flattening_preserves_derivability(s in sdm_sequent(1)) {
        let p = Prover::<G3sdm>::new();
        prop_assert_eq!(p.derivable(&s), p.derivable(&t_sequent(&s)), "{}", s);
    }

    #[test]
    fn proofs_agree_with_decisions(s in sdm_sequent(0), d in dm_sequent()) {
        let sdm = Prover::<G3sdm>::new();
        match sdm.derive(&s) {
            Some(proof) => {
                prop_assert!(sdm.derivable(&s));
                prop_assert!(check_derivation::<G3sdm>(&proof).is_ok());
                prop_assert!(sdm.min_height(&s).unwrap() <= proof.height);
            }
            None => prop_assert!(!sdm.derivable(&s)),
        }
        let dm = Prover::<G3dm>::new();
        prop_assert_eq!(dm.derive(&d).is_some(), dm.derivable(&d));
    }

    #[test]
    fn dm_derivable_sequents_hold_in_dm4(d in dm_sequent()) {
        if Prover::<G3dm>::new().derivable(&d) {
            prop_assert!(valid(&d, &dm4()), "{}", d);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(t in term(), u in term(), p in 0..4usize, q in 0..4usize, r in 0..4usize) {
        let alg = dm4();
        let sigma: BTreeMap<Var, usize> = [("p", p), ("q", q), ("r", r)].into_iter().map(|(n, v)| (Var::base(n), v)).collect();
        let a = evaluate(&t, &sigma, &alg).unwrap();
        let b = evaluate(&u, &sigma, &alg).unwrap();
        prop_assert_eq!(evaluate(&Term::neg(t.clone()), &sigma, &alg).unwrap(), alg.neg[a]);
        prop_assert_eq!(evaluate(&Term::and(t.clone(), u.clone()), &sigma, &alg).unwrap(), alg.meet[a][b]);
        prop_assert_eq!(evaluate(&Term::or(t, u), &sigma, &alg).unwrap(), alg.join[a][b]);
    }

    #[test]
    fn f_keeps_variables(t in term()) {
        prop_assert_eq!(f(&t).vars(), t.vars());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn interpolation_is_deterministic_and_sound(seed in any::<u64>()) {
        let dm = Prover::<G3dm>::new();
        for goal in derivable_dm_corpus(seed, 3, 14, &dm) {
            for part in Partition::all(&goal) {
                let a = interpolate_goal(&dm, &part).unwrap().unwrap().interpolant;
                let b = interpolate_goal(&Prover::<G3dm>::new(), &part).unwrap().unwrap().interpolant;
                prop_assert_eq!(&a, &b);
                prop_assert!(verify_interpolant(&dm, &goal, &part, &a), "{} / {}", part, a);
            }
        }
    }

    #[test]
    fn corpora_are_reproducible(seed in any::<u64>()) {
        prop_assert_eq!(sdm_corpus(seed, 20, 20, false), sdm_corpus(seed, 20, 20, false));
        let mut g1 = Generator::new(seed);
        let mut g2 = Generator::new(seed);
        for _ in 0..10 {
            prop_assert_eq!(g1.dm_sequent(), g2.dm_sequent());
        }
    }
}

#[test]
fn enumerated_algebras_belong_to_their_variety() {
    for variety in [Variety::Sdm, Variety::Dm] {
        for alg in enumerate_algebras(variety, 5) {
            assert!(check_variety(&alg, variety).unwrap(), "{alg}");
        }
    }
}
