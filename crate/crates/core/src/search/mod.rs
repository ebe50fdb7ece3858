//! Root-first proof search with memoization.
//!
//! G3SDM and G3DM searches are exhaustive; every premiss is strictly lighter
//! than its conclusion under the termination measure, so the search tree is
//! finite. G3ip and G3cp add an ancestor loop check.

mod check;
mod render;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;

use crate::calculi::{Calculus, Instance, Rule, Seq};
use crate::syntax::Sequent;

pub use check::{check_derivation, CheckFailure};
pub use render::{parse_proof_json, render, render_ascii, render_json, render_latex, Format, PROOF_SCHEMA};

/// A finite tree of rule applications.
#[derive(Clone, Debug)]
pub struct Derivation<A, S> {
    pub sequent: Sequent<A, S>,
    pub rule: Rule,
    pub principal: Option<usize>,
    pub height: usize,
    pub children: Vec<Arc<Derivation<A, S>>>,
}

pub type Proof<C> = Derivation<<C as Calculus>::Member, <C as Calculus>::Succ>;

impl<A, S> Derivation<A, S> {
    pub fn leaf(sequent: Sequent<A, S>, rule: Rule, principal: Option<usize>) -> Self {
        Derivation { sequent, rule, principal, height: 0, children: Vec::new() }
    }

    pub fn node(sequent: Sequent<A, S>, rule: Rule, principal: Option<usize>, children: Vec<Arc<Self>>) -> Self {
        let height = if children.is_empty() { 0 } else { 1 + children.iter().map(|c| c.height).max().unwrap_or(0) };
        Derivation { sequent, rule, principal, height, children }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Self)) {
        f(self);
        for c in &self.children {
            c.visit(f);
        }
    }
}

/// Exact structural equality, antecedent order included.
impl<A: PartialEq, S: PartialEq> PartialEq for Derivation<A, S> {
    fn eq(&self, other: &Self) -> bool {
        self.sequent.antecedent == other.sequent.antecedent
            && self.sequent.succedent == other.sequent.succedent
            && self.rule == other.rule
            && self.principal == other.principal
            && self.height == other.height
            && self.children.len() == other.children.len()
            && self.children.iter().zip(&other.children).all(|(a, b)| a == b)
    }
}

type Memo<C> = DashMap<Seq<C>, Option<Arc<Proof<C>>>>;

/// Proof search for one calculus with a shared memo table.
///
/// Methods take `&self`; one prover can serve several threads.
pub struct Prover<C: Calculus> {
    memo: Memo<C>,
    bounded: DashMap<(Seq<C>, usize), Option<Arc<Proof<C>>>>,
    limit: usize,
    expansions: AtomicU64,
}

/// Environment variable capping memo entries per table.
pub const MEMO_LIMIT_VAR: &str = "MORGANKIT_MEMO_LIMIT";

impl<C: Calculus> Default for Prover<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Calculus> Prover<C> {
    /// A prover whose memo limit comes from `MORGANKIT_MEMO_LIMIT` (unbounded when unset).
    pub fn new() -> Self {
        let limit = std::env::var(MEMO_LIMIT_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(usize::MAX);
        Self::with_limit(limit)
    }

    pub fn with_limit(limit: usize) -> Self {
        Prover { memo: DashMap::new(), bounded: DashMap::new(), limit, expansions: AtomicU64::new(0) }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Number of goals expanded so far.
    pub fn expansions(&self) -> u64 {
        self.expansions.load(Ordering::Relaxed)
    }

    pub fn clear(&self) {
        self.memo.clear();
        self.bounded.clear();
    }

    fn expand(&self, goal: &Seq<C>) -> Vec<Instance<C>> {
        self.expansions.fetch_add(1, Ordering::Relaxed);
        C::expand(goal)
    }

    fn remember(&self, key: Seq<C>, verdict: Option<Arc<Proof<C>>>) {
        if self.memo.len() < self.limit {
            self.memo.insert(key, verdict);
        }
    }

    fn lookup(&self, key: &Seq<C>) -> Option<Option<Arc<Proof<C>>>> {
        self.memo.get(key).map(|e| e.value().clone())
    }

    pub fn derivable(&self, goal: &Seq<C>) -> bool {
        self.derive_canonical(&goal.canonical()).is_some()
    }

    /// A derivation of exactly `goal` (antecedent order kept at the root), if
    /// one exists.
    pub fn derive(&self, goal: &Seq<C>) -> Option<Arc<Proof<C>>> {
        let canonical = goal.canonical();
        let found = self.derive_canonical(&canonical)?;
        if goal.antecedent == canonical.antecedent {
            return Some(found);
        }
        self.rebuild_root(goal, |p| self.derive_canonical(&p.canonical()))
    }

    /// Re-runs the root expansion on a non-canonical goal once its verdict is
    /// known, so the root keeps the caller's member order.
    fn rebuild_root(
        &self,
        goal: &Seq<C>,
        child: impl Fn(&Seq<C>) -> Option<Arc<Proof<C>>>,
    ) -> Option<Arc<Proof<C>>> {
        for inst in self.expand(goal) {
            let kids: Option<Vec<_>> = inst.premisses.iter().map(&child).collect();
            if let Some(kids) = kids {
                return Some(Arc::new(Derivation::node(goal.clone(), inst.rule, inst.principal, kids)));
            }
        }
        None
    }

    fn derive_canonical(&self, goal: &Seq<C>) -> Option<Arc<Proof<C>>> {
        if let Some(v) = self.lookup(goal) {
            return v;
        }
        if C::LOOP_CHECK {
            let mut stack = Vec::new();
            self.search_looping(goal, &mut stack).0
        } else {
            self.search_plain(goal)
        }
    }

    fn search_plain(&self, goal: &Seq<C>) -> Option<Arc<Proof<C>>> {
        if let Some(v) = self.lookup(goal) {
            return v;
        }
        let mut result = None;
        'instances: for inst in self.expand(goal) {
            let mut kids = Vec::with_capacity(inst.premisses.len());
            for p in &inst.premisses {
                match self.search_plain(&p.canonical()) {
                    Some(d) => kids.push(d),
                    None => continue 'instances,
                }
            }
            result = Some(Arc::new(Derivation::node(goal.clone(), inst.rule, inst.principal, kids)));
            break;
        }
        self.remember(goal.clone(), result.clone());
        result
    }

    /// Returns the verdict and the shallowest ancestor depth the failure
    /// relied on (`usize::MAX` if none). Failures relying on an ancestor
    /// strictly above this node are not memoized.
    fn search_looping(&self, goal: &Seq<C>, stack: &mut Vec<Seq<C>>) -> (Option<Arc<Proof<C>>>, usize) {
        if let Some(v) = self.lookup(goal) {
            return (v, usize::MAX);
        }
        let key = loop_key::<C>(goal);
        if let Some(depth) = stack.iter().position(|k| *k == key) {
            return (None, depth);
        }
        let depth = stack.len();
        stack.push(key);

        let mut instances = self.expand(goal);
        if let Some(pos) = instances.iter().position(|i| i.rule.is_axiom()) {
            instances.truncate(pos + 1);
            instances.drain(..pos);
        } else if let Some(pos) = instances.iter().position(|i| i.rule.is_invertible_int()) {
            instances.truncate(pos + 1);
            instances.drain(..pos);
        }

        let mut relied = usize::MAX;
        let mut result = None;
        'instances: for inst in instances {
            let mut kids = Vec::with_capacity(inst.premisses.len());
            for p in &inst.premisses {
                let (d, r) = self.search_looping(&p.canonical(), stack);
                match d {
                    Some(d) => kids.push(d),
                    None => {
                        relied = relied.min(r);
                        continue 'instances;
                    }
                }
            }
            result = Some(Arc::new(Derivation::node(goal.clone(), inst.rule, inst.principal, kids)));
            break;
        }
        stack.pop();

        if result.is_some() {
            self.remember(goal.clone(), result.clone());
            (result, usize::MAX)
        } else if relied >= depth {
            self.remember(goal.clone(), None);
            (None, usize::MAX)
        } else {
            (None, relied)
        }
    }

    /// Whether some derivation of height at most `n` exists.
    pub fn derivable_within_height(&self, goal: &Seq<C>, n: usize) -> bool {
        self.derive_within_height(goal, n).is_some()
    }

    /// A derivation of `goal` with height at most `n`.
    pub fn derive_within_height(&self, goal: &Seq<C>, n: usize) -> Option<Arc<Proof<C>>> {
        let canonical = goal.canonical();
        let found = self.bounded_canonical(&canonical, n)?;
        if goal.antecedent == canonical.antecedent {
            return Some(found);
        }
        let rebuilt = self.rebuild_bounded_root(goal, n);
        debug_assert!(rebuilt.is_some());
        rebuilt
    }

    fn rebuild_bounded_root(&self, goal: &Seq<C>, n: usize) -> Option<Arc<Proof<C>>> {
        for inst in self.expand(goal) {
            if !inst.premisses.is_empty() && n == 0 {
                continue;
            }
            let kids: Option<Vec<_>> =
                inst.premisses.iter().map(|p| self.bounded_canonical(&p.canonical(), n.saturating_sub(1))).collect();
            if let Some(kids) = kids {
                return Some(Arc::new(Derivation::node(goal.clone(), inst.rule, inst.principal, kids)));
            }
        }
        None
    }

    fn bounded_canonical(&self, goal: &Seq<C>, n: usize) -> Option<Arc<Proof<C>>> {
        match self.lookup(goal) {
            Some(None) => return None,
            Some(Some(d)) if d.height <= n => return Some(d),
            _ => {}
        }
        let key = (goal.clone(), n);
        if let Some(v) = self.bounded.get(&key).map(|e| e.value().clone()) {
            return v;
        }
        let mut result = None;
        'instances: for inst in self.expand(goal) {
            if !inst.premisses.is_empty() && n == 0 {
                continue;
            }
            let mut kids = Vec::with_capacity(inst.premisses.len());
            for p in &inst.premisses {
                match self.bounded_canonical(&p.canonical(), n - 1) {
                    Some(d) => kids.push(d),
                    None => continue 'instances,
                }
            }
            result = Some(Arc::new(Derivation::node(goal.clone(), inst.rule, inst.principal, kids)));
            break;
        }
        if self.bounded.len() < self.limit {
            self.bounded.insert(key, result.clone());
        }
        result
    }

    /// Least height of a derivation of `goal`, by iterative deepening.
    pub fn min_height(&self, goal: &Seq<C>) -> Option<usize> {
        self.derive_min_height(goal).map(|d| d.height)
    }

    /// A derivation of minimal height.
    pub fn derive_min_height(&self, goal: &Seq<C>) -> Option<Arc<Proof<C>>> {
        let any = self.derive(goal)?;
        (0..=any.height).find_map(|n| self.derive_within_height(goal, n))
    }
}

/// Loop-check key: the antecedent as a set. Sequents differing only in
/// multiplicities are interderivable by contraction and weakening.
fn loop_key<C: Calculus>(goal: &Seq<C>) -> Seq<C> {
    let mut ant = goal.antecedent.clone();
    ant.sort();
    ant.dedup();
    Sequent::new(ant, goal.succedent.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculi::{G3cp, G3dm, G3ip, G3sdm};

    fn sdm(s: &str) -> Seq<G3sdm> {
        G3sdm::parse(s).unwrap()
    }

    #[test]
    fn sdm_triple_negation() {
        let p = Prover::<G3sdm>::new();
        assert!(p.derivable(&sdm("~~~p => ~p")));
        assert!(!p.derivable(&sdm("p => ~~p")));
    }

    #[test]
    fn dm_negated_conjunction_of_negations() {
        let p = Prover::<G3dm>::new();
        assert!(p.derivable(&G3dm::parse("~(~p & ~q) => p | q").unwrap()));
    }

    #[test]
    fn heights() {
        let p = Prover::<G3sdm>::new();
        assert!(p.derivable_within_height(&sdm("p, q => p"), 0));
        assert!(!p.derivable_within_height(&sdm("~p => ~p"), 2));
        assert!(p.derivable_within_height(&sdm("~p => ~p"), 3));
        assert_eq!(p.min_height(&sdm("~p => ~p")), Some(3));
        let d = Prover::<G3dm>::new();
        assert!(d.derivable_within_height(&G3dm::parse("~~p => p").unwrap(), 1));
    }

    #[test]
    fn root_keeps_member_order() {
        let p = Prover::<G3sdm>::new();
        let goal = sdm("q, p => p");
        let d = p.derive(&goal).unwrap();
        assert_eq!(d.sequent.antecedent, goal.antecedent);
        assert_eq!(d.principal, Some(1));
    }

    #[test]
    fn intuitionistic_and_classical() {
        let ip = Prover::<G3ip>::new();
        let cp = Prover::<G3cp>::new();
        let lem = G3ip::parse("=> p | ~p").unwrap();
        assert!(!ip.derivable(&lem));
        assert!(cp.derivable(&lem));
        assert!(ip.derivable(&G3ip::parse("=> ~~(p | ~p)").unwrap()));
        let peirce = G3ip::parse("=> ((p -> q) -> p) -> p").unwrap();
        assert!(!ip.derivable(&peirce));
        assert!(cp.derivable(&peirce));
        assert!(ip.derivable(&G3ip::parse("p -> q, q -> r => p -> r").unwrap()));
        assert!(!ip.derivable(&G3ip::parse("~~p => p").unwrap()));
    }

    #[test]
    fn memo_limit_is_respected() {
        let p = Prover::<G3sdm>::with_limit(3);
        assert!(p.derivable(&sdm("~(p & q) => ~(q & p)")));
        assert!(p.memo_len() <= 3);
    }
}
