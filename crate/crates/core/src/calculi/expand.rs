use super::{Rule, RuleInstance};
use crate::syntax::{DmSequent, HasVars, ImpTerm, IntSequent, SdmSequent, Sequent, Structure, Term};

/// Accumulates instances in four buckets and concatenates them in search order.
struct Buckets<A, S> {
    axioms: Vec<RuleInstance<A, S>>,
    unary: Vec<RuleInstance<A, S>>,
    binary: Vec<RuleInstance<A, S>>,
    last: Vec<RuleInstance<A, S>>,
}

impl<A: Clone, S: Clone> Buckets<A, S> {
    fn new() -> Self {
        Buckets { axioms: Vec::new(), unary: Vec::new(), binary: Vec::new(), last: Vec::new() }
    }

    fn finish(mut self) -> Vec<RuleInstance<A, S>> {
        self.axioms.append(&mut self.unary);
        self.axioms.append(&mut self.binary);
        self.axioms.append(&mut self.last);
        self.axioms
    }
}

fn inst<A: Clone, S: Clone>(
    rule: Rule,
    principal: Option<usize>,
    goal: &Sequent<A, S>,
    premisses: Vec<Sequent<A, S>>,
) -> RuleInstance<A, S> {
    RuleInstance { rule, principal, conclusion: goal.clone(), premisses }
}

/// The antecedent without position `i`, followed by `extra`.
fn replace<A: Clone>(ant: &[A], i: usize, extra: impl IntoIterator<Item = A>) -> Vec<A> {
    let mut out = Vec::with_capacity(ant.len() + 1);
    out.extend(ant[..i].iter().cloned());
    out.extend(ant[i + 1..].iter().cloned());
    out.extend(extra);
    out
}

fn with<A: Clone>(ant: &[A], extra: A) -> Vec<A> {
    let mut out = ant.to_vec();
    out.push(extra);
    out
}

fn plain(t: &Term) -> Structure {
    Structure::Plain(t.clone())
}

fn star(t: &Term) -> Structure {
    Structure::Starred(t.clone())
}

fn star_neg(t: &Term) -> Structure {
    Structure::Starred(Term::neg(t.clone()))
}

pub fn expand_g3sdm(goal: &SdmSequent) -> Vec<RuleInstance<Structure, Structure>> {
    let mut b = Buckets::new();
    let ant = &goal.antecedent;
    let succ = &goal.succedent;
    let left = |i: usize, extra: Vec<Structure>| Sequent::new(replace(ant, i, extra), succ.clone());

    for (i, a) in ant.iter().enumerate() {
        match a {
            Structure::Plain(Term::Var(p)) => {
                if matches!(succ, Structure::Plain(Term::Var(q)) if q == p) {
                    b.axioms.push(inst(Rule::Id, Some(i), goal, vec![]));
                }
            }
            Structure::Plain(Term::Bottom) => b.axioms.push(inst(Rule::BotL, Some(i), goal, vec![])),
            Structure::Starred(Term::Neg(t)) if **t == Term::Bottom => {
                b.axioms.push(inst(Rule::StarNegBotL, Some(i), goal, vec![]))
            }
            Structure::Plain(Term::And(l, r)) => {
                b.unary.push(inst(Rule::AndL, Some(i), goal, vec![left(i, vec![plain(l), plain(r)])]))
            }
            Structure::Plain(Term::Or(l, r)) => b.binary.push(inst(
                Rule::OrL,
                Some(i),
                goal,
                vec![left(i, vec![plain(l)]), left(i, vec![plain(r)])],
            )),
            Structure::Plain(Term::Neg(t)) => {
                b.unary.push(inst(Rule::NegL, Some(i), goal, vec![left(i, vec![star(t)])]))
            }
            Structure::Starred(Term::Or(l, r)) => {
                b.unary.push(inst(Rule::StarOrL, Some(i), goal, vec![left(i, vec![star(l), star(r)])]))
            }
            Structure::Starred(Term::Neg(t)) => match &**t {
                Term::And(l, r) => b.unary.push(inst(
                    Rule::StarNegAndL,
                    Some(i),
                    goal,
                    vec![left(i, vec![star_neg(l), star_neg(r)])],
                )),
                Term::Neg(u) => {
                    b.unary.push(inst(Rule::StarNegNegL, Some(i), goal, vec![left(i, vec![star(u)])]))
                }
                _ => {}
            },
            _ => {}
        }
    }

    let right = |s: Structure| Sequent::new(ant.clone(), s);
    match succ {
        Structure::Starred(Term::Bottom) => b.axioms.push(inst(Rule::StarBotR, None, goal, vec![])),
        Structure::Plain(Term::And(l, r)) => {
            b.binary.push(inst(Rule::AndR, None, goal, vec![right(plain(l)), right(plain(r))]))
        }
        Structure::Plain(Term::Or(l, r)) => {
            b.unary.push(inst(Rule::OrR1, None, goal, vec![right(plain(l))]));
            b.unary.push(inst(Rule::OrR2, None, goal, vec![right(plain(r))]));
        }
        Structure::Plain(Term::Neg(t)) => b.unary.push(inst(Rule::NegR, None, goal, vec![right(star(t))])),
        Structure::Starred(Term::Or(l, r)) => {
            b.binary.push(inst(Rule::StarOrR, None, goal, vec![right(star(l)), right(star(r))]))
        }
        Structure::Starred(Term::Neg(t)) => match &**t {
            Term::And(l, r) => b.binary.push(inst(
                Rule::StarNegAndR,
                None,
                goal,
                vec![right(star_neg(l)), right(star_neg(r))],
            )),
            Term::Neg(u) => b.unary.push(inst(Rule::StarNegNegR, None, goal, vec![right(star(u))])),
            _ => {}
        },
        _ => {}
    }

    if let Structure::Starred(phi) = succ {
        for (i, a) in ant.iter().enumerate() {
            if let Structure::Starred(psi) = a {
                b.last.push(inst(Rule::Star, Some(i), goal, vec![Sequent::new(vec![plain(phi)], plain(psi))]));
            }
        }
    }
    b.finish()
}

pub fn expand_g3dm(goal: &DmSequent) -> Vec<RuleInstance<Term, Term>> {
    let mut b = Buckets::new();
    let ant = &goal.antecedent;
    let succ = &goal.succedent;
    let left = |i: usize, extra: Vec<Term>| Sequent::new(replace(ant, i, extra), succ.clone());
    let neg = |t: &Term| Term::neg(t.clone());

    for (i, a) in ant.iter().enumerate() {
        match a {
            Term::Var(_) => {
                if a == succ {
                    b.axioms.push(inst(Rule::Id1, Some(i), goal, vec![]));
                }
            }
            Term::Bottom => b.axioms.push(inst(Rule::BotL, Some(i), goal, vec![])),
            Term::And(l, r) => {
                b.unary.push(inst(Rule::AndL, Some(i), goal, vec![left(i, vec![(**l).clone(), (**r).clone()])]))
            }
            Term::Or(l, r) => b.binary.push(inst(
                Rule::OrL,
                Some(i),
                goal,
                vec![left(i, vec![(**l).clone()]), left(i, vec![(**r).clone()])],
            )),
            Term::Neg(t) => match &**t {
                Term::Var(_) => {
                    if a == succ {
                        b.axioms.push(inst(Rule::Id2, Some(i), goal, vec![]));
                    }
                }
                Term::And(l, r) => b.binary.push(inst(
                    Rule::NegAndL,
                    Some(i),
                    goal,
                    vec![left(i, vec![neg(l)]), left(i, vec![neg(r)])],
                )),
                Term::Or(l, r) => {
                    b.unary.push(inst(Rule::NegOrL, Some(i), goal, vec![left(i, vec![neg(l), neg(r)])]))
                }
                Term::Neg(u) => b.unary.push(inst(Rule::NegNegL, Some(i), goal, vec![left(i, vec![(**u).clone()])])),
                Term::Bottom => {}
            },
        }
    }

    let right = |t: Term| Sequent::new(ant.clone(), t);
    match succ {
        Term::And(l, r) => {
            b.binary.push(inst(Rule::AndR, None, goal, vec![right((**l).clone()), right((**r).clone())]))
        }
        Term::Or(l, r) => {
            b.unary.push(inst(Rule::OrR1, None, goal, vec![right((**l).clone())]));
            b.unary.push(inst(Rule::OrR2, None, goal, vec![right((**r).clone())]));
        }
        Term::Neg(t) => match &**t {
            Term::Bottom => b.axioms.push(inst(Rule::NegBotR, None, goal, vec![])),
            Term::And(l, r) => {
                b.unary.push(inst(Rule::NegAndR1, None, goal, vec![right(neg(l))]));
                b.unary.push(inst(Rule::NegAndR2, None, goal, vec![right(neg(r))]));
            }
            Term::Or(l, r) => b.binary.push(inst(Rule::NegOrR, None, goal, vec![right(neg(l)), right(neg(r))])),
            Term::Neg(u) => b.unary.push(inst(Rule::NegNegR, None, goal, vec![right((**u).clone())])),
            Term::Var(_) => {}
        },
        _ => {}
    }
    b.finish()
}

/// G3ip, and G3ip with `Gem-at` when `classical` is set.
///
/// Invertible rules (`&L`, `|L`, `&R`, `->R`) precede the others within the
/// non-axiom instances. `Gem-at` is instantiated only for variables that
/// occur in the goal.
pub fn expand_g3ip(goal: &IntSequent, classical: bool) -> Vec<RuleInstance<ImpTerm, ImpTerm>> {
    let mut axioms = Vec::new();
    let mut invertible = Vec::new();
    let mut other = Vec::new();
    let ant = &goal.antecedent;
    let succ = &goal.succedent;
    let left = |i: usize, extra: Vec<ImpTerm>| Sequent::new(replace(ant, i, extra), succ.clone());

    for (i, a) in ant.iter().enumerate() {
        match a {
            ImpTerm::Var(_) => {
                if a == succ {
                    axioms.push(inst(Rule::Id, Some(i), goal, vec![]));
                }
            }
            ImpTerm::Bottom => axioms.push(inst(Rule::IntBotL, Some(i), goal, vec![])),
            ImpTerm::And(l, r) => invertible.push(inst(
                Rule::IntAndL,
                Some(i),
                goal,
                vec![left(i, vec![(**l).clone(), (**r).clone()])],
            )),
            ImpTerm::Or(l, r) => invertible.push(inst(
                Rule::IntOrL,
                Some(i),
                goal,
                vec![left(i, vec![(**l).clone()]), left(i, vec![(**r).clone()])],
            )),
            ImpTerm::Imp(l, r) => other.push(inst(
                Rule::ImpL,
                Some(i),
                goal,
                vec![Sequent::new(ant.clone(), (**l).clone()), left(i, vec![(**r).clone()])],
            )),
        }
    }

    let right = |t: ImpTerm| Sequent::new(ant.clone(), t);
    match succ {
        ImpTerm::And(l, r) => {
            invertible.push(inst(Rule::IntAndR, None, goal, vec![right((**l).clone()), right((**r).clone())]))
        }
        ImpTerm::Or(l, r) => {
            other.insert(0, inst(Rule::IntOrR2, None, goal, vec![right((**r).clone())]));
            other.insert(0, inst(Rule::IntOrR1, None, goal, vec![right((**l).clone())]));
        }
        ImpTerm::Imp(l, r) => invertible.push(inst(
            Rule::ImpR,
            None,
            goal,
            vec![Sequent::new(with(ant, (**l).clone()), (**r).clone())],
        )),
        _ => {}
    }

    if classical {
        for p in goal.var_set() {
            let atom = ImpTerm::Var(p);
            other.push(inst(
                Rule::GemAt,
                None,
                goal,
                vec![
                    Sequent::new(with(ant, atom.clone()), succ.clone()),
                    Sequent::new(with(ant, ImpTerm::neg(atom)), succ.clone()),
                ],
            ));
        }
    }

    axioms.append(&mut invertible);
    axioms.append(&mut other);
    axioms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_dm_sequent, parse_int_sequent, parse_sdm_sequent};

    fn sdm(s: &str) -> SdmSequent {
        parse_sdm_sequent(s).unwrap()
    }
    fn dm(s: &str) -> DmSequent {
        parse_dm_sequent(s).unwrap()
    }
    fn int(s: &str) -> IntSequent {
        parse_int_sequent(s).unwrap()
    }

    #[test]
    fn sdm_identity_axiom() {
        let out = expand_g3sdm(&sdm("p, q => p"));
        assert!(out.iter().any(|i| i.rule == Rule::Id && i.premisses.is_empty() && i.principal == Some(0)));
    }

    #[test]
    fn sdm_star_or_left() {
        let out = expand_g3sdm(&sdm("*(p | q) => r"));
        let i = out.iter().find(|i| i.rule == Rule::StarOrL).unwrap();
        assert_eq!(i.premisses, vec![sdm("*p, *q => r")]);
    }

    #[test]
    fn sdm_star_rule_discards_context() {
        let out = expand_g3sdm(&sdm("*q, r => *p"));
        let stars: Vec<_> = out.iter().filter(|i| i.rule == Rule::Star).collect();
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0].premisses, vec![sdm("p => q")]);
    }

    #[test]
    fn sdm_per_occurrence_left_rules() {
        let out = expand_g3sdm(&sdm("p & q, p & q => r"));
        let ands: Vec<_> = out.iter().filter(|i| i.rule == Rule::AndL).collect();
        assert_eq!(ands.len(), 2);
        assert_ne!(ands[0].principal, ands[1].principal);
    }

    #[test]
    fn sdm_search_order() {
        let out = expand_g3sdm(&sdm("*p, p | q => *(p | q)"));
        let rules: Vec<_> = out.iter().map(|i| i.rule).collect();
        assert_eq!(rules, vec![Rule::OrL, Rule::StarOrR, Rule::Star]);
    }

    #[test]
    fn dm_examples() {
        assert!(expand_g3dm(&dm("~p, q => ~p")).iter().any(|i| i.rule == Rule::Id2 && i.premisses.is_empty()));
        let nn = expand_g3dm(&dm("~~p => p"));
        assert!(nn.iter().any(|i| i.rule == Rule::NegNegL && i.premisses == vec![dm("p => p")]));
        let no = expand_g3dm(&dm("~(p | q) => r"));
        assert!(no.iter().any(|i| i.rule == Rule::NegOrL && i.premisses == vec![dm("~p, ~q => r")]));
    }

    #[test]
    fn dm_negated_conjunction_right_uses_both_conjuncts() {
        let out = expand_g3dm(&dm("=> ~(p & q)"));
        let prem: Vec<_> = out.iter().map(|i| (i.rule, i.premisses[0].clone())).collect();
        assert_eq!(prem, vec![(Rule::NegAndR1, dm("=> ~p")), (Rule::NegAndR2, dm("=> ~q"))]);
    }

    #[test]
    fn int_implication_left_keeps_principal() {
        let out = expand_g3ip(&int("p -> q, p => q"), false);
        let i = out.iter().find(|i| i.rule == Rule::ImpL).unwrap();
        assert_eq!(i.premisses, vec![int("p -> q, p => p"), int("q, p => q")]);
    }

    #[test]
    fn gem_at_instances() {
        let out = expand_g3ip(&int("=> p | (p -> F)"), true);
        let g = out.iter().find(|i| i.rule == Rule::GemAt).unwrap();
        assert_eq!(g.premisses, vec![int("p => p | ~p"), int("~p => p | ~p")]);
        assert!(expand_g3ip(&int("=> p | (p -> F)"), false).iter().all(|i| i.rule != Rule::GemAt));
    }

    #[test]
    fn int_bottom_left() {
        let out = expand_g3ip(&int("F => q"), false);
        assert_eq!(out[0].rule, Rule::IntBotL);
        assert!(out[0].premisses.is_empty());
    }
}
