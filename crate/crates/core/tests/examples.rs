//! Every example runs and prints what it claims.

macro_rules! example {
    ($m:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $m {
            include!($file);
        }
    };
}

example!(proof_search, "../examples/proof_search.rs");
example!(interpolation, "../examples/interpolation.rs");
example!(translations, "../examples/translations.rs");
example!(embeddings, "../examples/embeddings.rs");
example!(algebras, "../examples/algebras.rs");
example!(intuitionistic, "../examples/intuitionistic.rs");
example!(admissibility, "../examples/admissibility.rs");

#[test]
fn proof_search_prints_trees() {
    let out = proof_search::run_example();
    assert!(out.contains("G3SDM ~p => ~p: derivable, height 3"));
    assert!(out.contains("G3SDM p => ~~p: not derivable"));
    assert!(out.contains("\\begin{prooftree}"));
}

#[test]
fn interpolants_verify() {
    let out = interpolation::run_example();
    assert!(!out.contains("verified false"));
    assert_eq!(out.matches("verified true").count(), 4);
    assert_eq!(out.matches("G3DM ").count(), 4);
}

#[test]
fn translations_match_definitions() {
    let out = translations::run_example();
    assert!(out.contains("f: p | q  ~>  ~~(~~p | ~~q)"));
    assert!(out.contains("k: ~p => ~~~p  ~>  p' => p'"));
    assert!(out.contains("\"schema\":\"morgan-kit/k-registry/v1\""));
}

#[test]
fn embeddings_report_every_kind() {
    let out = embeddings::run_example();
    for kind in ["dm-to-sdm-f", "dm-glivenko-sdm", "dm-to-cl-h", "cl-to-int-g", "sdm-to-int-k", "diagram"] {
        assert!(out.contains(&format!("{kind}: ")), "{kind}");
    }
    assert!(out.contains("dm-to-cl-h: 40/40"));
}

#[test]
fn algebra_counts() {
    let out = algebras::run_example();
    assert!(out.contains("up to size 5: 46 SDM algebras, 6 DM algebras"));
    assert!(out.contains("~(p & q) => ~p | ~q: valid in dm4"));
    assert!(out.contains("~~~p => ~p: no SDM counter-model up to size 5"));
}

#[test]
fn peirce_separates_ip_from_cp() {
    let out = intuitionistic::run_example();
    assert!(out.contains("=> ((p -> q) -> p) -> p      G3ip false G3cp true"));
    assert!(out.contains("=> ~~(p | ~p)                G3ip true  G3cp true"));
}

#[test]
fn admissibility_holds_on_sample() {
    let out = admissibility::run_example();
    assert!(out.contains("weakening 60/60, contraposition 60/60"));
}
