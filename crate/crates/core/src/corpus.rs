//! Seeded random terms and sequents. The same seed always yields the same corpus.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::calculi::{G3dm, G3sdm};
use crate::search::Prover;
use crate::syntax::{DmSequent, DmWeight, SdmSequent, SdmWeight, Sequent, Structure, Term, Var};

pub const MAX_DEPTH: usize = 5;

pub struct Generator {
    rng: ChaCha8Rng,
    max_depth: usize,
    max_antecedent: usize,
    vars: Vec<Var>,
}

impl Generator {
    /// Depth 3, variables `p, q, r`, at most 4 antecedent members.
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_depth: 3,
            max_antecedent: 4,
            vars: ["p", "q", "r"].iter().map(|v| Var::base(v)).collect(),
        }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.max_depth = depth.min(MAX_DEPTH);
        self
    }

    pub fn with_max_antecedent(mut self, n: usize) -> Self {
        self.max_antecedent = n;
        self
    }

    pub fn with_vars(mut self, names: &[&str]) -> Self {
        self.vars = names.iter().map(|v| Var::base(v)).collect();
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn leaf(&mut self) -> Term {
        if self.rng.gen_bool(0.1) {
            Term::Bottom
        } else {
            Term::Var(self.vars.choose(&mut self.rng).expect("variable pool").clone())
        }
    }

    /// A term of height at most `depth`.
    pub fn term_of_depth(&mut self, depth: usize) -> Term {
        if depth == 0 {
            return self.leaf();
        }
        match self.rng.gen_range(0..100) {
            0..=29 => self.leaf(),
            30..=54 => Term::neg(self.term_of_depth(depth - 1)),
            55..=77 => Term::and(self.term_of_depth(depth - 1), self.term_of_depth(depth - 1)),
            _ => Term::or(self.term_of_depth(depth - 1), self.term_of_depth(depth - 1)),
        }
    }

    pub fn term(&mut self) -> Term {
        let d = self.max_depth;
        self.term_of_depth(d)
    }

    pub fn structure(&mut self) -> Structure {
        let t = self.term();
        if self.rng.gen_bool(0.3) {
            Structure::Starred(t)
        } else {
            Structure::Plain(t)
        }
    }

    fn context<T>(&mut self, mut member: impl FnMut(&mut Self) -> T, room: usize) -> Vec<T> {
        let n = self.rng.gen_range(0..=room.min(self.max_antecedent));
        (0..n).map(|_| member(self)).collect()
    }

    pub fn sdm_sequent(&mut self) -> SdmSequent {
        let ant = self.context(Self::structure, usize::MAX);
        Sequent::new(ant, self.structure())
    }

    pub fn dm_sequent(&mut self) -> DmSequent {
        let ant = self.context(Self::term, usize::MAX);
        Sequent::new(ant, self.term())
    }

    /// A sequent from a family that is usually, not always, derivable.
    pub fn biased_sdm_sequent(&mut self) -> SdmSequent {
        let phi = self.term();
        let chi = self.term();
        let room = self.max_antecedent.saturating_sub(1);
        let mut ant = self.context(Self::structure, room);
        let succ = match self.rng.gen_range(0..6) {
            0 => {
                ant.push(Structure::Plain(phi.clone()));
                Structure::Plain(phi)
            }
            1 => {
                ant.push(Structure::Plain(Term::and(phi.clone(), chi.clone())));
                Structure::Plain(Term::or(chi, self.term()))
            }
            2 => {
                ant.push(Structure::Starred(Term::or(phi.clone(), chi)));
                Structure::Starred(phi)
            }
            3 => {
                ant.push(Structure::Plain(Term::neg(Term::or(chi, phi.clone()))));
                Structure::Plain(Term::neg(phi))
            }
            4 => {
                ant.push(Structure::Starred(phi.clone()));
                Structure::Starred(phi)
            }
            _ => {
                if self.rng.gen_bool(0.5) {
                    Structure::Plain(Term::or(phi, Term::top()))
                } else {
                    ant.push(Structure::Plain(phi.clone()));
                    Structure::Plain(Term::or(self.term(), phi))
                }
            }
        };
        ant.shuffle(&mut self.rng);
        Sequent::new(ant, succ)
    }

    pub fn biased_dm_sequent(&mut self) -> DmSequent {
        let phi = self.term();
        let chi = self.term();
        let room = self.max_antecedent.saturating_sub(1);
        let mut ant = self.context(Self::term, room);
        let succ = match self.rng.gen_range(0..6) {
            0 => {
                ant.push(phi.clone());
                phi
            }
            1 => {
                ant.push(Term::and(phi.clone(), chi.clone()));
                Term::or(chi, self.term())
            }
            2 => {
                ant.push(Term::neg(Term::or(phi.clone(), chi)));
                Term::neg(phi)
            }
            3 => {
                ant.push(Term::neg(Term::and(phi.clone(), chi.clone())));
                Term::or(Term::neg(chi), Term::neg(phi))
            }
            4 => {
                ant.push(Term::neg(Term::neg(phi.clone())));
                phi
            }
            _ => {
                ant.push(phi.clone());
                Term::neg(Term::neg(Term::or(phi, chi)))
            }
        };
        ant.shuffle(&mut self.rng);
        Sequent::new(ant, succ)
    }
}

const BATCH: usize = 256;

fn filtered<S, G, K>(n: usize, mut candidate: G, keep: K) -> Vec<S>
where
    S: Clone + Eq + std::hash::Hash + Send + Sync,
    G: FnMut() -> S,
    K: Fn(&S) -> bool + Sync,
{
    let mut out = Vec::with_capacity(n);
    let mut seen = HashSet::new();
    let mut attempts = 0;
    while out.len() < n && attempts < n * 2000 {
        let batch: Vec<S> = (0..BATCH).map(|_| candidate()).collect();
        attempts += BATCH;
        let verdicts: Vec<bool> = batch.par_iter().map(&keep).collect();
        for (s, ok) in batch.into_iter().zip(verdicts) {
            if ok && out.len() < n && seen.insert(s.clone()) {
                out.push(s);
            }
        }
    }
    out
}

/// `n` distinct G3SDM-derivable sequents of weight at most `max_weight`.
pub fn derivable_sdm_corpus(seed: u64, n: usize, max_weight: usize, prover: &Prover<G3sdm>) -> Vec<SdmSequent> {
    let mut g = Generator::new(seed);
    filtered(
        n,
        || if g.rng.gen_bool(0.7) { g.biased_sdm_sequent() } else { g.sdm_sequent() },
        |s| s.sdm_weight() <= max_weight && prover.derivable(s),
    )
}

/// `n` distinct G3DM-derivable sequents of weight at most `max_weight`.
pub fn derivable_dm_corpus(seed: u64, n: usize, max_weight: usize, prover: &Prover<G3dm>) -> Vec<DmSequent> {
    let mut g = Generator::new(seed);
    filtered(
        n,
        || if g.rng.gen_bool(0.7) { g.biased_dm_sequent() } else { g.dm_sequent() },
        |s| s.dm_weight() <= max_weight && prover.derivable(s),
    )
}

/// `n` distinct SDM sequents of weight at most `max_weight`, about half from
/// the derivable-leaning families. `plain_succedent` drops starred succedents.
pub fn sdm_corpus(seed: u64, n: usize, max_weight: usize, plain_succedent: bool) -> Vec<SdmSequent> {
    let mut g = Generator::new(seed);
    filtered(
        n,
        || if g.rng.gen_bool(0.5) { g.biased_sdm_sequent() } else { g.sdm_sequent() },
        |s| s.sdm_weight() <= max_weight && !(plain_succedent && s.succedent.is_starred()),
    )
}

/// `n` distinct DM sequents of weight at most `max_weight`, about half from
/// the derivable-leaning families.
pub fn dm_corpus(seed: u64, n: usize, max_weight: usize) -> Vec<DmSequent> {
    let mut g = Generator::new(seed);
    filtered(
        n,
        || if g.rng.gen_bool(0.5) { g.biased_dm_sequent() } else { g.dm_sequent() },
        |s| s.dm_weight() <= max_weight,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::HasVars;

    #[test]
    fn reproducible() {
        let a = sdm_corpus(7, 50, 20, false);
        let b = sdm_corpus(7, 50, 20, false);
        assert_eq!(a, b);
        assert_ne!(a, sdm_corpus(8, 50, 20, false));
    }

    #[test]
    fn depth_and_pool() {
        let mut g = Generator::new(1).with_depth(2).with_vars(&["p", "q"]);
        for _ in 0..200 {
            let t = g.term();
            assert!(t.var_set().iter().all(|v| &*v.name == "p" || &*v.name == "q"));
            assert!(depth(&t) <= 2);
        }
    }

    fn depth(t: &Term) -> usize {
        match t {
            Term::Var(_) | Term::Bottom => 0,
            Term::Neg(x) => 1 + depth(x),
            Term::And(l, r) | Term::Or(l, r) => 1 + depth(l).max(depth(r)),
        }
    }

    #[test]
    fn derivable_corpora() {
        let sdm = Prover::<G3sdm>::new();
        let c = derivable_sdm_corpus(3, 40, 25, &sdm);
        assert_eq!(c.len(), 40);
        assert!(c.iter().all(|s| sdm.derivable(s) && s.antecedent.len() <= 4));
        let dm = Prover::<G3dm>::new();
        let c = derivable_dm_corpus(3, 40, 25, &dm);
        assert_eq!(c.len(), 40);
        assert!(c.iter().all(|s| s.dm_weight() <= 25));
    }
}
