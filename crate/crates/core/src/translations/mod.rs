//! Translations between the calculi.
//!
//! | map | from        | to          |
//! |-----|-------------|-------------|
//! | t   | SDM members | terms       |
//! | f   | DM terms    | SDM terms   |
//! | nn  | DM terms    | SDM terms   |
//! | k   | SDM members | Int terms   |
//! | h   | DM terms    | CL terms    |
//! | g   | CL terms    | Int terms   |

mod embedding;
mod registry;

use crate::syntax::{DmSequent, ImpTerm, IntSequent, SdmSequent, Sequent, Structure, Term, Var};

pub use embedding::{check_embedding, Corpus, Counterexample, EmbeddingChecker, EmbeddingKind, EmbeddingReport};
pub use registry::{ClassRegistry, REGISTRY_SCHEMA};

/// `t(α)`: a starred member becomes a negation.
pub fn t_structure(s: &Structure) -> Term {
    s.flatten()
}

/// `t(Γ)`: left-associated conjunction of the flattened members in canonical
/// order; `T` for the empty antecedent.
pub fn t_flatten(gamma: &[Structure]) -> Term {
    let mut sorted = gamma.to_vec();
    sorted.sort();
    conj(sorted.iter().map(Structure::flatten))
}

/// `t(Γ) => t(α)` as a G3SDM sequent.
pub fn t_sequent(s: &SdmSequent) -> SdmSequent {
    Sequent::new(vec![Structure::Plain(t_flatten(&s.antecedent))], Structure::Plain(s.succedent.flatten()))
}

/// Left-associated conjunction; `T` when empty.
pub fn conj(terms: impl IntoIterator<Item = Term>) -> Term {
    terms.into_iter().reduce(Term::and).unwrap_or_else(Term::top)
}

/// Left-associated disjunction; `F` when empty.
pub fn disj(terms: impl IntoIterator<Item = Term>) -> Term {
    terms.into_iter().reduce(Term::or).unwrap_or(Term::Bottom)
}

/// Gödel–Gentzen translation.
pub fn f(t: &Term) -> Term {
    match t {
        Term::Bottom => Term::Bottom,
        Term::Var(_) => Term::neg_n(t.clone(), 2),
        Term::Neg(x) => Term::neg(f(x)),
        Term::And(l, r) => Term::and(f(l), f(r)),
        Term::Or(l, r) => Term::neg_n(Term::or(f(l), f(r)), 2),
    }
}

/// `f(Σ) = f(φ₁) & ... & f(φₙ)` in canonical order.
pub fn f_antecedent(sigma: &[Term]) -> Term {
    let mut sorted = sigma.to_vec();
    sorted.sort();
    conj(sorted.iter().map(f))
}

/// `f(Σ) => f(φ)` as a G3SDM sequent. An empty `Σ` becomes `T`.
pub fn f_sequent(s: &DmSequent) -> SdmSequent {
    Sequent::new(vec![Structure::Plain(f_antecedent(&s.antecedent))], Structure::Plain(f(&s.succedent)))
}

/// `~~φ`.
pub fn nn(t: &Term) -> Term {
    Term::neg_n(t.clone(), 2)
}

/// `~~Σ`: every member double negated.
pub fn nn_antecedent(sigma: &[Term]) -> Vec<Term> {
    sigma.iter().map(nn).collect()
}

/// Translation into classical logic: negations are pushed to the atoms
/// and a negated variable `~p` becomes the fresh variable `p'`.
pub fn h(t: &Term) -> ImpTerm {
    match t {
        Term::Var(v) => ImpTerm::Var(v.clone()),
        Term::Bottom => ImpTerm::Bottom,
        Term::And(l, r) => ImpTerm::and(h(l), h(r)),
        Term::Or(l, r) => ImpTerm::or(h(l), h(r)),
        Term::Neg(x) => match &**x {
            Term::Var(v) => ImpTerm::Var(Var::primed(&v.name)),
            Term::Bottom => ImpTerm::top(),
            Term::And(l, r) => ImpTerm::or(h(&Term::neg((**l).clone())), h(&Term::neg((**r).clone()))),
            Term::Or(l, r) => ImpTerm::and(h(&Term::neg((**l).clone())), h(&Term::neg((**r).clone()))),
            Term::Neg(y) => h(y),
        },
    }
}

/// Memberwise `h`.
pub fn h_sequent(s: &DmSequent) -> IntSequent {
    Sequent::new(s.antecedent.iter().map(h).collect(), h(&s.succedent))
}

/// Glivenko: `g(θ) = (θ -> F) -> F`.
pub fn g(t: &ImpTerm) -> ImpTerm {
    ImpTerm::neg(ImpTerm::neg(t.clone()))
}

/// `g(X) => ~~θ`.
pub fn g_sequent(s: &IntSequent) -> IntSequent {
    Sequent::new(s.antecedent.iter().map(g).collect(), g(&s.succedent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_imp_term, parse_sdm_sequent, parse_term};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }
    fn i(s: &str) -> ImpTerm {
        parse_imp_term(s).unwrap()
    }

    #[test]
    fn flattening() {
        assert_eq!(t_structure(&Structure::Starred(t("p"))), t("~p"));
        let s = parse_sdm_sequent("*q, p => p").unwrap();
        assert_eq!(t_flatten(&s.antecedent), t("p & ~q"));
        assert_eq!(t_flatten(&[Structure::Plain(t("p | q"))]), t("p | q"));
        assert_eq!(t_flatten(&[]), Term::top());
    }

    #[test]
    fn godel_gentzen() {
        assert_eq!(f(&t("p")), t("~~p"));
        assert_eq!(f(&t("p | q")), t("~~(~~p | ~~q)"));
        assert_eq!(f(&t("F")), t("F"));
        assert_eq!(f(&t("~(p & F)")), t("~(~~p & F)"));
    }

    #[test]
    fn double_negation() {
        assert_eq!(nn_antecedent(&[t("p"), t("q")]), vec![t("~~p"), t("~~q")]);
        assert_eq!(nn(&t("F")), t("~~F"));
        assert!(nn_antecedent(&[]).is_empty());
    }

    #[test]
    fn classical_translation() {
        assert_eq!(h(&t("~(p & q)")), i("p' | q'"));
        assert_eq!(h(&t("~~p")), i("p"));
        assert_eq!(h(&t("~F")), ImpTerm::top());
        assert_eq!(h(&t("~(p | ~q)")), i("p' & q"));
    }

    #[test]
    fn glivenko() {
        assert_eq!(g(&i("p")), i("(p -> F) -> F"));
        assert_eq!(g(&i("F")), i("(F -> F) -> F"));
        let s = crate::syntax::parse_int_sequent("p, q => r").unwrap();
        assert_eq!(g_sequent(&s).antecedent, vec![i("~~p"), i("~~q")]);
    }
}
