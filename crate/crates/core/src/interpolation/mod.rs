//! Maehara-style interpolant extraction for G3SDM and G3DM.
//!
//! The extractor walks a derivation of `Γ₁, Γ₂ => β` carrying a side label
//! for every antecedent member and assembles an interpolant bottom-up.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::calculi::{Calculus, G3dm, G3sdm, Rule};
use crate::error::{Error, Result};
use crate::search::{check_derivation, Proof, Prover};
use crate::syntax::{HasVars, ParsedPartition, Sequent, Structure, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `(Γ₁)(Γ₂; β)`: a split of a goal's antecedent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition<M> {
    pub left: Vec<M>,
    pub right: Vec<M>,
    pub succedent: M,
}

impl<M: Clone + Ord> Partition<M> {
    pub fn new(left: Vec<M>, right: Vec<M>, succedent: M) -> Self {
        Partition { left, right, succedent }
    }

    /// The partitioned goal `Γ₁, Γ₂ => β`.
    pub fn goal(&self) -> Sequent<M, M> {
        let mut ant = self.left.clone();
        ant.extend(self.right.iter().cloned());
        Sequent::new(ant, self.succedent.clone())
    }

    pub fn matches(&self, goal: &Sequent<M, M>) -> bool {
        self.goal() == *goal
    }

    /// Every split of the antecedent by position (`2^n` of them, duplicates
    /// included when members repeat).
    pub fn all(goal: &Sequent<M, M>) -> Vec<Partition<M>> {
        let n = goal.antecedent.len();
        (0..1usize << n)
            .map(|mask| {
                let (mut left, mut right) = (Vec::new(), Vec::new());
                for (i, a) in goal.antecedent.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        left.push(a.clone());
                    } else {
                        right.push(a.clone());
                    }
                }
                Partition::new(left, right, goal.succedent.clone())
            })
            .collect()
    }

    /// Side labels for the members of `goal`, pairing equal members greedily.
    fn sides_for(&self, goal: &Sequent<M, M>) -> Vec<Side> {
        let mut left = self.left.clone();
        goal.antecedent
            .iter()
            .map(|a| match left.iter().position(|l| l == a) {
                Some(k) => {
                    left.swap_remove(k);
                    Side::Left
                }
                None => Side::Right,
            })
            .collect()
    }
}

impl<M: fmt::Display> fmt::Display for Partition<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[M]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{} ; {} => {}", join(&self.left), join(&self.right), self.succedent)
    }
}

impl Partition<Structure> {
    pub fn from_parsed(p: ParsedPartition) -> Self {
        Partition::new(p.left, p.right, p.succedent)
    }
}

impl Partition<Term> {
    /// Rejects starred members.
    pub fn from_parsed(p: ParsedPartition) -> Result<Self> {
        let plain = |s: Structure| match s {
            Structure::Plain(t) => Ok(t),
            Structure::Starred(t) => Err(Error::Partition(format!("`*{t}` is not a G3DM member"))),
        };
        Ok(Partition::new(
            p.left.into_iter().map(plain).collect::<Result<_>>()?,
            p.right.into_iter().map(plain).collect::<Result<_>>()?,
            plain(p.succedent)?,
        ))
    }
}

/// An interpolant together with derivations of both obligations
/// `Γ₁ => α` and `α, Γ₂ => β`.
#[derive(Clone, Debug)]
pub struct InterpolationResult<C: Calculus> {
    pub interpolant: C::Member,
    pub left_derivation: Arc<Proof<C>>,
    pub right_derivation: Arc<Proof<C>>,
}

/// Calculi with an interpolation procedure. Interpolants are antecedent
/// members, which in both calculi are also admissible succedents.
pub trait Interpolating: Calculus<Succ = <Self as Calculus>::Member> {
    /// Interpolant for the node `d` whose antecedent carries `sides`.
    fn extract(d: &Proof<Self>, sides: &[Side]) -> Self::Member;
}

/// The obligations `Γ₁ => α` and `α, Γ₂ => β`.
pub fn obligations<M: Clone + Ord>(part: &Partition<M>, candidate: &M) -> (Sequent<M, M>, Sequent<M, M>) {
    let left = Sequent::new(part.left.clone(), candidate.clone());
    let mut ant = vec![candidate.clone()];
    ant.extend(part.right.iter().cloned());
    (left, Sequent::new(ant, part.succedent.clone()))
}

/// `var(α) ⊆ var(Γ₁) ∩ var(Γ₂, β)`.
pub fn variable_condition<M: HasVars>(part: &Partition<M>, candidate: &M) -> bool {
    let left: BTreeSet<Var> = part.left.var_set();
    let mut right: BTreeSet<Var> = part.right.var_set();
    part.succedent.collect_vars(&mut right);
    candidate.var_set().iter().all(|v| left.contains(v) && right.contains(v))
}

/// Checks the three interpolant conditions by search.
pub fn verify_interpolant<C: Interpolating>(
    prover: &Prover<C>,
    goal: &Sequent<C::Member, C::Member>,
    part: &Partition<C::Member>,
    candidate: &C::Member,
) -> bool {
    if !part.matches(goal) || !variable_condition(part, candidate) {
        return false;
    }
    let (l, r) = obligations(part, candidate);
    prover.derivable(&l) && prover.derivable(&r)
}

/// Extracts an interpolant for `part` from `d`, a derivation of the
/// partitioned goal, and derives both obligations.
pub fn interpolate<C: Interpolating>(
    prover: &Prover<C>,
    d: &Proof<C>,
    part: &Partition<C::Member>,
) -> Result<InterpolationResult<C>> {
    if !part.matches(&d.sequent) {
        return Err(Error::Partition(format!("`{}` vs goal `{}`", part, d.sequent)));
    }
    check_derivation::<C>(d)?;
    let sides = part.sides_for(&d.sequent);
    let interpolant = C::extract(d, &sides);
    let (l, r) = obligations(part, &interpolant);
    let missing = |s: &Sequent<C::Member, C::Member>| {
        Error::Partition(format!("interpolant `{interpolant}` leaves `{s}` underivable"))
    };
    let left_derivation = prover.derive(&l).ok_or_else(|| missing(&l))?;
    let right_derivation = prover.derive(&r).ok_or_else(|| missing(&r))?;
    if !variable_condition(part, &interpolant) {
        return Err(Error::Partition(format!("interpolant `{interpolant}` violates the variable condition")));
    }
    Ok(InterpolationResult { interpolant, left_derivation, right_derivation })
}

/// Derives the goal of `part` and interpolates it.
pub fn interpolate_goal<C: Interpolating>(
    prover: &Prover<C>,
    part: &Partition<C::Member>,
) -> Result<Option<InterpolationResult<C>>> {
    match prover.derive(&part.goal()) {
        Some(d) => interpolate(prover, &d, part).map(Some),
        None => Ok(None),
    }
}

/// Side labels for a premiss: context members keep their labels, members
/// introduced by the rule take the label of the principal occurrence.
fn child_sides<M: PartialEq, S>(
    parent: &Sequent<M, S>,
    sides: &[Side],
    principal: Option<usize>,
    child: &Sequent<M, S>,
) -> Vec<Side> {
    let mut context: Vec<(&M, Side)> = parent
        .antecedent
        .iter()
        .zip(sides)
        .enumerate()
        .filter(|(i, _)| Some(*i) != principal)
        .map(|(_, (m, s))| (m, *s))
        .collect();
    let fresh = principal.map(|i| sides[i]).unwrap_or(Side::Right);
    child
        .antecedent
        .iter()
        .map(|m| match context.iter().position(|(c, _)| *c == m) {
            Some(k) => context.swap_remove(k).1,
            None => fresh,
        })
        .collect()
}

fn principal_side(d_principal: Option<usize>, sides: &[Side]) -> Side {
    d_principal.map(|i| sides[i]).expect("left rule records its principal")
}

fn children<C: Calculus>(d: &Proof<C>, sides: &[Side]) -> Vec<Vec<Side>> {
    d.children.iter().map(|c| child_sides(&d.sequent, sides, d.principal, &c.sequent)).collect()
}

impl Interpolating for G3sdm {
    fn extract(d: &Proof<Self>, sides: &[Side]) -> Structure {
        let star_bot = || Structure::Starred(Term::Bottom);
        let kids = |d: &Proof<Self>| -> Vec<Structure> {
            children::<Self>(d, sides).iter().zip(&d.children).map(|(s, c)| Self::extract(c, s)).collect()
        };
        match d.rule {
            Rule::Id | Rule::BotL | Rule::StarNegBotL => match principal_side(d.principal, sides) {
                Side::Left => d.sequent.antecedent[d.principal.unwrap()].clone(),
                Side::Right => star_bot(),
            },
            Rule::StarBotR => star_bot(),
            Rule::AndR | Rule::StarOrR | Rule::StarNegAndR => {
                let k = kids(d);
                Structure::Plain(Term::and(k[0].flatten(), k[1].flatten()))
            }
            Rule::OrL => {
                let k = kids(d);
                match principal_side(d.principal, sides) {
                    Side::Left => Structure::Plain(Term::or(k[0].flatten(), k[1].flatten())),
                    Side::Right => Structure::Plain(Term::and(k[0].flatten(), k[1].flatten())),
                }
            }
            Rule::Star => {
                let i = d.principal.unwrap();
                match sides[i] {
                    Side::Right => star_bot(),
                    Side::Left => {
                        let psi = d.sequent.antecedent[i].clone();
                        let mut shared: BTreeSet<Var> = BTreeSet::new();
                        for (m, s) in d.sequent.antecedent.iter().zip(sides) {
                            if *s == Side::Right {
                                m.collect_vars(&mut shared);
                            }
                        }
                        d.sequent.succedent.collect_vars(&mut shared);
                        if psi.vars().is_subset(&shared) {
                            psi
                        } else {
                            let inner = Self::extract(&d.children[0], &[Side::Left]);
                            Structure::Starred(inner.flatten())
                        }
                    }
                }
            }
            _ => kids(d).pop().expect("one-premiss rule"),
        }
    }
}

impl Interpolating for G3dm {
    fn extract(d: &Proof<Self>, sides: &[Side]) -> Term {
        let kids = |d: &Proof<Self>| -> Vec<Term> {
            children::<Self>(d, sides).iter().zip(&d.children).map(|(s, c)| Self::extract(c, s)).collect()
        };
        match d.rule {
            Rule::Id1 | Rule::Id2 | Rule::BotL => match principal_side(d.principal, sides) {
                Side::Left => d.sequent.antecedent[d.principal.unwrap()].clone(),
                Side::Right => Term::top(),
            },
            Rule::NegBotR => Term::top(),
            Rule::AndR | Rule::NegOrR => {
                let k = kids(d);
                Term::and(k[0].clone(), k[1].clone())
            }
            Rule::OrL | Rule::NegAndL => {
                let k = kids(d);
                match principal_side(d.principal, sides) {
                    Side::Left => Term::or(k[0].clone(), k[1].clone()),
                    Side::Right => Term::and(k[0].clone(), k[1].clone()),
                }
            }
            _ => kids(d).pop().expect("one-premiss rule"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_partition, parse_sdm_sequent};

    fn sdm_part(s: &str) -> Partition<Structure> {
        Partition::<Structure>::from_parsed(parse_partition(s).unwrap())
    }

    fn dm_part(s: &str) -> Partition<Term> {
        Partition::<Term>::from_parsed(parse_partition(s).unwrap()).unwrap()
    }

    fn sdm_interpolant(s: &str) -> Structure {
        let p = Prover::<G3sdm>::new();
        interpolate_goal(&p, &sdm_part(s)).unwrap().unwrap().interpolant
    }

    #[test]
    fn identity_on_the_left_side() {
        assert_eq!(sdm_interpolant("p ; q => p"), Structure::Plain(Term::var("p")));
    }

    #[test]
    fn identity_on_the_right_side() {
        assert_eq!(sdm_interpolant("q ; p => p"), Structure::Starred(Term::Bottom));
    }

    #[test]
    fn star_rule_picks_the_starred_member() {
        let p = Prover::<G3sdm>::new();
        let part = sdm_part("*(p & q) ; => *(q & p)");
        let d = p.derive(&part.goal()).unwrap();
        assert_eq!(d.rule, Rule::Star);
        let r = interpolate(&p, &d, &part).unwrap();
        assert_eq!(r.interpolant, parse_sdm_sequent("=> *(p & q)").unwrap().succedent);
    }

    #[test]
    fn star_rule_respects_the_variable_condition() {
        let p = Prover::<G3sdm>::new();
        let part = sdm_part("*(p | q) ; => *p");
        let r = interpolate_goal(&p, &part).unwrap().unwrap();
        assert!(variable_condition(&part, &r.interpolant));
        assert_eq!(r.interpolant.vars().len(), 1);
    }

    #[test]
    fn verify_examples() {
        let p = Prover::<G3sdm>::new();
        let part = sdm_part("p ; q => p");
        let goal = part.goal();
        assert!(verify_interpolant(&p, &goal, &part, &Structure::Plain(Term::var("p"))));
        assert!(!verify_interpolant(&p, &goal, &part, &Structure::Plain(Term::var("q"))));
        let empty = sdm_part(" ; p => p");
        assert!(verify_interpolant(&p, &empty.goal(), &empty, &Structure::Plain(Term::top())));
    }

    #[test]
    fn dm_cases() {
        let p = Prover::<G3dm>::new();
        let r = interpolate_goal(&p, &dm_part("~p ; q => ~p")).unwrap().unwrap();
        assert_eq!(r.interpolant, Term::neg(Term::var("p")));
        let r = interpolate_goal(&p, &dm_part("q ; ~p => ~p")).unwrap().unwrap();
        assert_eq!(r.interpolant, Term::top());
        let part = dm_part("p | q ; ~p & ~q => p & ~p | q & ~q");
        let r = interpolate_goal(&p, &part).unwrap().unwrap();
        assert!(verify_interpolant(&p, &part.goal(), &part, &r.interpolant));
    }

    #[test]
    fn mismatched_partition_is_rejected() {
        let p = Prover::<G3sdm>::new();
        let d = p.derive(&parse_sdm_sequent("p, q => p").unwrap()).unwrap();
        assert!(interpolate(&p, &d, &sdm_part("p ; r => p")).is_err());
    }
}
