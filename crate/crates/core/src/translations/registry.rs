use std::collections::HashMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::calculi::G3sdm;
use crate::error::{Error, Result};
use crate::search::Prover;
use crate::syntax::{parse_term, ImpTerm, Sequent, Structure, Term, Var};

pub const REGISTRY_SCHEMA: &str = "morgan-kit/k-registry/v1";

/// Representatives of the G3SDM interderivability classes met so far, each
/// with its class variable `#kN`, plus the translation `k` that uses them.
///
/// Classes are numbered in first-encounter order. Lookups test a term
/// against every stored representative with two derivability queries.
pub struct ClassRegistry {
    entries: Vec<(Term, Var)>,
    verdicts: HashMap<(Term, Term), bool>,
    prover: Arc<Prover<G3sdm>>,
}

impl Default for ClassRegistry {
    fn default() -> Self {
        Self::new()
    }
}

impl ClassRegistry {
    pub fn new() -> Self {
        Self::with_prover(Arc::new(Prover::new()))
    }

    pub fn with_prover(prover: Arc<Prover<G3sdm>>) -> Self {
        ClassRegistry { entries: Vec::new(), verdicts: HashMap::new(), prover }
    }

    pub fn entries(&self) -> &[(Term, Var)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `φ ≡ ψ`: both `φ => ψ` and `ψ => φ` derivable in G3SDM.
    pub fn equivalent(&mut self, a: &Term, b: &Term) -> bool {
        if a == b {
            return true;
        }
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(&v) = self.verdicts.get(&key) {
            return v;
        }
        let seq = |x: &Term, y: &Term| Sequent::new(vec![Structure::Plain(x.clone())], Structure::Plain(y.clone()));
        let v = self.prover.derivable(&seq(a, b)) && self.prover.derivable(&seq(b, a));
        self.verdicts.insert(key, v);
        v
    }

    /// The class variable of `t`, registering a new class on a miss.
    pub fn class_of(&mut self, t: &Term) -> Var {
        for idx in 0..self.entries.len() {
            let rep = self.entries[idx].0.clone();
            if self.equivalent(t, &rep) {
                return self.entries[idx].1.clone();
            }
        }
        let v = Var::class(self.entries.len());
        self.entries.push((t.clone(), v.clone()));
        v
    }

    /// The translation `k` into the intuitionistic language.
    pub fn k(&mut self, t: &Term) -> ImpTerm {
        let (negs, size) = (t.neg_count(), t.size());
        let rec = |reg: &mut Self, next: Term| {
            debug_assert!(
                (next.neg_count(), next.size()) < (negs, size),
                "k measure must decrease: {t} -> {next}"
            );
            reg.k(&next)
        };
        match t {
            Term::Var(v) => ImpTerm::Var(v.clone()),
            Term::Bottom => ImpTerm::Bottom,
            Term::And(l, r) => ImpTerm::and(rec(self, (**l).clone()), rec(self, (**r).clone())),
            Term::Or(l, r) => ImpTerm::or(rec(self, (**l).clone()), rec(self, (**r).clone())),
            Term::Neg(x) => match &**x {
                Term::Var(v) => ImpTerm::Var(Var::primed(&v.name)),
                Term::Bottom => ImpTerm::top(),
                Term::Or(l, r) => ImpTerm::and(
                    rec(self, Term::neg((**l).clone())),
                    rec(self, Term::neg((**r).clone())),
                ),
                Term::And(l, r) => match (&**l, &**r) {
                    (Term::Neg(a), Term::Neg(b)) => {
                        rec(self, Term::neg_n(Term::or((**a).clone(), (**b).clone()), 2))
                    }
                    _ => ImpTerm::Var(self.class_of(t)),
                },
                Term::Neg(y) => match &**y {
                    Term::Var(v) => ImpTerm::Var(Var::doubled(&v.name)),
                    Term::Bottom => ImpTerm::Bottom,
                    Term::And(l, r) => ImpTerm::and(
                        rec(self, Term::neg_n((**l).clone(), 2)),
                        rec(self, Term::neg_n((**r).clone(), 2)),
                    ),
                    Term::Or(l, r) => match (&**l, &**r) {
                        (Term::Neg(a), Term::Neg(b)) => {
                            rec(self, Term::neg(Term::and((**a).clone(), (**b).clone())))
                        }
                        _ => ImpTerm::Var(self.class_of(t)),
                    },
                    Term::Neg(z) => rec(self, Term::neg((**z).clone())),
                },
            },
        }
    }

    /// `k(φ) = k(φ)`, `k(*φ) = k(~φ)`.
    pub fn k_structure(&mut self, s: &Structure) -> ImpTerm {
        match s {
            Structure::Plain(t) => self.k(t),
            Structure::Starred(t) => self.k(&Term::neg(t.clone())),
        }
    }

    /// Memberwise `k` on a G3SDM sequent.
    pub fn k_sequent(&mut self, s: &Sequent<Structure, Structure>) -> Sequent<ImpTerm, ImpTerm> {
        let ant = s.antecedent.iter().map(|m| self.k_structure(m)).collect();
        Sequent::new(ant, self.k_structure(&s.succedent))
    }

    /// The sidecar mapping class variables to representatives.
    pub fn to_json(&self) -> Value {
        let classes: Vec<Value> = self
            .entries
            .iter()
            .map(|(t, v)| json!({ "var": v.to_string(), "representative": t.to_string(), "term": t }))
            .collect();
        json!({ "schema": REGISTRY_SCHEMA, "classes": classes })
    }

    /// Restores entries from a sidecar written by [`to_json`](Self::to_json).
    pub fn load_json(&mut self, v: &Value) -> Result<()> {
        if v.get("schema").and_then(Value::as_str) != Some(REGISTRY_SCHEMA) {
            return Err(Error::Unsupported("registry sidecar without the expected schema".into()));
        }
        let classes = v.get("classes").and_then(Value::as_array).cloned().unwrap_or_default();
        self.entries.clear();
        for (i, c) in classes.iter().enumerate() {
            let t: Term = match c.get("term") {
                Some(j) => serde_json::from_value(j.clone())?,
                None => parse_term(c.get("representative").and_then(Value::as_str).unwrap_or(""))?,
            };
            self.entries.push((t, Var::class(i)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_imp_term;

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    #[test]
    fn literal_clauses() {
        let mut r = ClassRegistry::new();
        assert_eq!(r.k(&t("~p")), parse_imp_term("p'").unwrap());
        assert_eq!(r.k(&t("~~~p")), parse_imp_term("p'").unwrap());
        assert_eq!(r.k(&t("~~p")), parse_imp_term("p''").unwrap());
        assert_eq!(r.k(&t("~~F")), ImpTerm::Bottom);
        assert_eq!(r.k(&t("T")), ImpTerm::top());
        assert_eq!(r.k(&t("~(p | q)")), parse_imp_term("p' & q'").unwrap());
        assert_eq!(r.k(&t("~~(p & q)")), parse_imp_term("p'' & q''").unwrap());
        assert!(r.is_empty());
    }

    #[test]
    fn negated_conjunction_of_negations_shares_a_class() {
        let mut r = ClassRegistry::new();
        let a = r.k(&t("~(~p & ~q)"));
        let b = r.k(&t("~~(p | q)"));
        assert_eq!(a, b);
        assert_eq!(a, ImpTerm::Var(Var::class(0)));
        let c = r.k(&t("~(~~~p & ~~~q)"));
        assert_eq!(c, a);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn equivalent_terms_share_a_class() {
        let mut r = ClassRegistry::new();
        let a = r.k(&t("~(p & q)"));
        let b = r.k(&t("~(q & p)"));
        let c = r.k(&t("~(p & r)"));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn sidecar_round_trip() {
        let mut r = ClassRegistry::new();
        r.k(&t("~(p & q)"));
        r.k(&t("~~(p | r)"));
        let v = r.to_json();
        let mut back = ClassRegistry::new();
        back.load_json(&v).unwrap();
        assert_eq!(back.entries(), r.entries());
    }
}
