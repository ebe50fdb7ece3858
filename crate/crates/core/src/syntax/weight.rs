//! Weights used for termination arguments and the complexity measure.

use super::{Sequent, Structure, Term};

/// The G3SDM weight: atoms 1, `~` +2, `|` +2, `&` +3, `*` +1.
pub trait SdmWeight {
    fn sdm_weight(&self) -> usize;
}

impl SdmWeight for Term {
    fn sdm_weight(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bottom => 1,
            Term::Neg(t) => t.sdm_weight() + 2,
            Term::Or(l, r) => l.sdm_weight() + r.sdm_weight() + 2,
            Term::And(l, r) => l.sdm_weight() + r.sdm_weight() + 3,
        }
    }
}

impl SdmWeight for Structure {
    fn sdm_weight(&self) -> usize {
        match self {
            Structure::Plain(t) => t.sdm_weight(),
            Structure::Starred(t) => t.sdm_weight() + 1,
        }
    }
}

impl<A: SdmWeight, S: SdmWeight> SdmWeight for Sequent<A, S> {
    fn sdm_weight(&self) -> usize {
        self.antecedent.iter().map(SdmWeight::sdm_weight).sum::<usize>() + self.succedent.sdm_weight()
    }
}

/// The G3DM weight: atoms 1, `~` +1, `&` and `|` +2.
pub trait DmWeight {
    fn dm_weight(&self) -> usize;
}

impl DmWeight for Term {
    fn dm_weight(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bottom => 1,
            Term::Neg(t) => t.dm_weight() + 1,
            Term::Or(l, r) | Term::And(l, r) => l.dm_weight() + r.dm_weight() + 2,
        }
    }
}

impl<A: DmWeight, S: DmWeight> DmWeight for Sequent<A, S> {
    fn dm_weight(&self) -> usize {
        self.antecedent.iter().map(DmWeight::dm_weight).sum::<usize>() + self.succedent.dm_weight()
    }
}

/// Connective count (`~`, `&`, `|`, `*`).
pub trait Complexity {
    fn complexity(&self) -> usize;
}

impl Complexity for Term {
    fn complexity(&self) -> usize {
        Term::complexity(self)
    }
}

impl Complexity for Structure {
    fn complexity(&self) -> usize {
        Structure::complexity(self)
    }
}

/// Total connective count of a sequent.
pub fn complexity<A: Complexity, S: Complexity>(s: &Sequent<A, S>) -> usize {
    s.antecedent.iter().map(Complexity::complexity).sum::<usize>() + s.succedent.complexity()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_dm_sequent, parse_sdm_sequent, parse_term};

    #[test]
    fn sdm_weights() {
        assert_eq!(parse_term("p").unwrap().sdm_weight(), 1);
        assert_eq!(parse_term("~p").unwrap().sdm_weight(), 3);
        assert_eq!(parse_term("p | q").unwrap().sdm_weight(), 4);
        assert_eq!(parse_term("p & q").unwrap().sdm_weight(), 5);
        assert_eq!(parse_sdm_sequent("*p, q => *~p").unwrap().sdm_weight(), 2 + 1 + 4);
    }

    #[test]
    fn dm_weights() {
        assert_eq!(parse_term("~(p & q)").unwrap().dm_weight(), 5);
        assert_eq!(parse_dm_sequent("p, ~q => p | q").unwrap().dm_weight(), 1 + 2 + 4);
    }

    #[test]
    fn sequent_complexity() {
        assert_eq!(complexity(&parse_sdm_sequent("*~p, q & r => p").unwrap()), 3);
    }
}
