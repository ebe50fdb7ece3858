//! Terms, structures and sequents for the four calculi.
//!
//! The SDM/DM language uses [`Term`] (variables, `F`, `~`, `&`, `|`). The
//! intuitionistic and classical targets use [`ImpTerm`], where negation is
//! notation for `θ -> F`.

mod parse;
mod print;
mod weight;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use parse::{
    parse_dm_sequent, parse_imp_term, parse_int_sequent, parse_partition, parse_sdm_sequent,
    parse_term, parse_structure, Language, ParsedPartition,
};
pub use print::Latex;
pub use weight::{complexity, Complexity, DmWeight, SdmWeight};

/// Which family a propositional variable belongs to.
///
/// Only `Base` may appear in user input for G3SDM/G3DM; the other namespaces
/// are produced by the translations into intuitionistic and classical logic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Namespace {
    Base,
    Primed,
    Doubled,
    Class,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var {
    pub ns: Namespace,
    pub name: Arc<str>,
}

impl Var {
    pub fn new(ns: Namespace, name: &str) -> Self {
        Var { ns, name: Arc::from(name) }
    }

    pub fn base(name: &str) -> Self {
        Var::new(Namespace::Base, name)
    }

    pub fn primed(name: &str) -> Self {
        Var::new(Namespace::Primed, name)
    }

    pub fn doubled(name: &str) -> Self {
        Var::new(Namespace::Doubled, name)
    }

    /// The `index`-th equivalence-class variable, printed `#k<index>`.
    pub fn class(index: usize) -> Self {
        Var::new(Namespace::Class, &format!("k{index}"))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ns {
            Namespace::Base => write!(f, "{}", self.name),
            Namespace::Primed => write!(f, "{}'", self.name),
            Namespace::Doubled => write!(f, "{}''", self.name),
            Namespace::Class => write!(f, "#{}", self.name),
        }
    }
}

/// A term of the SDM/DM language. `T` is notation for `~F`.
///
/// The derived order (variables, then `F`, `~`, `&`, `|`, each compared by
/// children) is the canonical order used to sort antecedents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    Var(Var),
    Bottom,
    Neg(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(Var::base(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn and(l: Term, r: Term) -> Term {
        Term::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Term, r: Term) -> Term {
        Term::Or(Box::new(l), Box::new(r))
    }

    /// `~F`.
    pub fn top() -> Term {
        Term::neg(Term::Bottom)
    }

    pub fn neg_n(t: Term, n: usize) -> Term {
        (0..n).fold(t, |acc, _| Term::neg(acc))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Term::Var(_) | Term::Bottom)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Bottom => {}
            Term::Neg(t) => t.collect_vars(out),
            Term::And(l, r) | Term::Or(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of `~`, `&` and `|` occurrences.
    pub fn complexity(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bottom => 0,
            Term::Neg(t) => 1 + t.complexity(),
            Term::And(l, r) | Term::Or(l, r) => 1 + l.complexity() + r.complexity(),
        }
    }

    /// Number of `~` occurrences.
    pub fn neg_count(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bottom => 0,
            Term::Neg(t) => 1 + t.neg_count(),
            Term::And(l, r) | Term::Or(l, r) => l.neg_count() + r.neg_count(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Bottom => 1,
            Term::Neg(t) => 1 + t.size(),
            Term::And(l, r) | Term::Or(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// True when every variable lives in the base namespace.
    pub fn is_base(&self) -> bool {
        self.vars().iter().all(|v| v.ns == Namespace::Base)
    }
}

/// A term of the implicational language of G3ip and G3ip+Gem-at.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ImpTerm {
    Var(Var),
    Bottom,
    And(Box<ImpTerm>, Box<ImpTerm>),
    Or(Box<ImpTerm>, Box<ImpTerm>),
    Imp(Box<ImpTerm>, Box<ImpTerm>),
}

impl ImpTerm {
    pub fn var(v: Var) -> ImpTerm {
        ImpTerm::Var(v)
    }

    pub fn and(l: ImpTerm, r: ImpTerm) -> ImpTerm {
        ImpTerm::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: ImpTerm, r: ImpTerm) -> ImpTerm {
        ImpTerm::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: ImpTerm, r: ImpTerm) -> ImpTerm {
        ImpTerm::Imp(Box::new(l), Box::new(r))
    }

    /// `θ -> F`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: ImpTerm) -> ImpTerm {
        ImpTerm::imp(t, ImpTerm::Bottom)
    }

    /// `F -> F`.
    pub fn top() -> ImpTerm {
        ImpTerm::imp(ImpTerm::Bottom, ImpTerm::Bottom)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            ImpTerm::Var(v) => {
                out.insert(v.clone());
            }
            ImpTerm::Bottom => {}
            ImpTerm::And(l, r) | ImpTerm::Or(l, r) | ImpTerm::Imp(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ImpTerm::Var(_) | ImpTerm::Bottom => 1,
            ImpTerm::And(l, r) | ImpTerm::Or(l, r) | ImpTerm::Imp(l, r) => 1 + l.size() + r.size(),
        }
    }
}

/// A basic SDM-structure: a term or a starred term. Stars do not nest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    Plain(Term),
    Starred(Term),
}

impl Structure {
    pub fn term(&self) -> &Term {
        match self {
            Structure::Plain(t) | Structure::Starred(t) => t,
        }
    }

    pub fn is_starred(&self) -> bool {
        matches!(self, Structure::Starred(_))
    }

    /// Star operator read as negation: `t(φ) = φ`, `t(*φ) = ~φ`.
    pub fn flatten(&self) -> Term {
        match self {
            Structure::Plain(t) => t.clone(),
            Structure::Starred(t) => Term::neg(t.clone()),
        }
    }

    /// Number of `~`, `&`, `|` and `*` occurrences.
    pub fn complexity(&self) -> usize {
        match self {
            Structure::Plain(t) => t.complexity(),
            Structure::Starred(t) => 1 + t.complexity(),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        self.term().collect_vars(out)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.term().vars()
    }
}

impl From<Term> for Structure {
    fn from(t: Term) -> Self {
        Structure::Plain(t)
    }
}

/// Anything with a set of propositional variables.
pub trait HasVars {
    fn collect_vars(&self, out: &mut BTreeSet<Var>);

    fn var_set(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }
}

impl HasVars for Term {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        Term::collect_vars(self, out)
    }
}

impl HasVars for ImpTerm {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        ImpTerm::collect_vars(self, out)
    }
}

impl HasVars for Structure {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        Structure::collect_vars(self, out)
    }
}

impl<T: HasVars> HasVars for [T] {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        for item in self {
            item.collect_vars(out);
        }
    }
}

impl<T: HasVars> HasVars for Vec<T> {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        self.as_slice().collect_vars(out)
    }
}

/// A single-succedent sequent with a multiset antecedent.
///
/// Equality and hashing ignore antecedent order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sequent<A, S> {
    pub antecedent: Vec<A>,
    pub succedent: S,
}

pub type SdmSequent = Sequent<Structure, Structure>;
pub type DmSequent = Sequent<Term, Term>;
/// Sequents of G3ip and of G3ip+Gem-at.
pub type IntSequent = Sequent<ImpTerm, ImpTerm>;

impl<A, S> Sequent<A, S> {
    pub fn new(antecedent: Vec<A>, succedent: S) -> Self {
        Sequent { antecedent, succedent }
    }
}

impl<A: Ord + Clone, S: Clone> Sequent<A, S> {
    /// Antecedent sorted by the canonical order on members. Idempotent.
    pub fn canonical(&self) -> Self {
        let mut antecedent = self.antecedent.clone();
        antecedent.sort();
        Sequent { antecedent, succedent: self.succedent.clone() }
    }

    pub fn is_canonical(&self) -> bool {
        self.antecedent.windows(2).all(|w| w[0] <= w[1])
    }

    fn sorted_antecedent(&self) -> std::borrow::Cow<'_, [A]> {
        if self.is_canonical() {
            std::borrow::Cow::Borrowed(&self.antecedent)
        } else {
            let mut v = self.antecedent.clone();
            v.sort();
            std::borrow::Cow::Owned(v)
        }
    }
}

impl<A: Ord + Clone, S: Clone + PartialEq> PartialEq for Sequent<A, S> {
    fn eq(&self, other: &Self) -> bool {
        self.succedent == other.succedent
            && self.antecedent.len() == other.antecedent.len()
            && self.sorted_antecedent() == other.sorted_antecedent()
    }
}

impl<A: Ord + Clone, S: Clone + Eq> Eq for Sequent<A, S> {}

impl<A: Ord + Clone + Hash, S: Clone + Hash> Hash for Sequent<A, S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted_antecedent().hash(state);
        self.succedent.hash(state);
    }
}

impl<A: HasVars, S: HasVars> HasVars for Sequent<A, S> {
    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        self.antecedent.collect_vars(out);
        self.succedent.collect_vars(out);
    }
}

impl<A: fmt::Display, S: fmt::Display> fmt::Display for Sequent<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.antecedent.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        if self.antecedent.is_empty() {
            write!(f, "=> {}", self.succedent)
        } else {
            write!(f, " => {}", self.succedent)
        }
    }
}
