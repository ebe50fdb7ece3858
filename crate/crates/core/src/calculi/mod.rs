//! Rule tables as backward-expansion functions.
//!
//! Given a goal, each `expand` function lists every rule instance whose
//! conclusion is the goal. Left rules are instantiated once per principal
//! occurrence. Instances come out in search order: axioms, one-premiss rules,
//! two-premiss rules, then (for G3SDM) the structural `*` rule.

mod expand;

use std::fmt;
use std::hash::Hash;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::syntax::{
    parse_dm_sequent, parse_int_sequent, parse_sdm_sequent, HasVars, ImpTerm, Sequent, Structure, Term,
};

pub use expand::{expand_g3dm, expand_g3ip, expand_g3sdm};

/// Bounds shared by antecedent members and succedents of every calculus.
pub trait Formula:
    Clone + Ord + Hash + fmt::Debug + fmt::Display + HasVars + Serialize + DeserializeOwned + Send + Sync + 'static
{
}

impl<T> Formula for T where
    T: Clone + Ord + Hash + fmt::Debug + fmt::Display + HasVars + Serialize + DeserializeOwned + Send + Sync + 'static
{
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CalculusKind {
    G3sdm,
    G3dm,
    G3ip,
    G3cp,
}

impl CalculusKind {
    pub fn name(self) -> &'static str {
        match self {
            CalculusKind::G3sdm => "g3sdm",
            CalculusKind::G3dm => "g3dm",
            CalculusKind::G3ip => "g3ip",
            CalculusKind::G3cp => "g3cp",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "g3sdm" => Some(CalculusKind::G3sdm),
            "g3dm" => Some(CalculusKind::G3dm),
            "g3ip" => Some(CalculusKind::G3ip),
            "g3cp" => Some(CalculusKind::G3cp),
            _ => None,
        }
    }
}

impl fmt::Display for CalculusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every rule of the four calculi. Rules shared between calculi (for
/// instance `&=>` in G3SDM and G3DM) are one variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Id,
    BotL,
    StarBotR,
    StarNegBotL,
    AndL,
    AndR,
    OrL,
    OrR1,
    OrR2,
    StarOrL,
    StarOrR,
    StarNegAndL,
    StarNegAndR,
    StarNegNegL,
    StarNegNegR,
    NegL,
    NegR,
    Star,
    Id1,
    Id2,
    NegBotR,
    NegAndL,
    NegAndR1,
    NegAndR2,
    NegOrL,
    NegOrR,
    NegNegL,
    NegNegR,
    IntBotL,
    IntAndL,
    IntAndR,
    IntOrL,
    IntOrR1,
    IntOrR2,
    ImpL,
    ImpR,
    GemAt,
}

const ALL_RULES: [Rule; 37] = [
    Rule::Id,
    Rule::BotL,
    Rule::StarBotR,
    Rule::StarNegBotL,
    Rule::AndL,
    Rule::AndR,
    Rule::OrL,
    Rule::OrR1,
    Rule::OrR2,
    Rule::StarOrL,
    Rule::StarOrR,
    Rule::StarNegAndL,
    Rule::StarNegAndR,
    Rule::StarNegNegL,
    Rule::StarNegNegR,
    Rule::NegL,
    Rule::NegR,
    Rule::Star,
    Rule::Id1,
    Rule::Id2,
    Rule::NegBotR,
    Rule::NegAndL,
    Rule::NegAndR1,
    Rule::NegAndR2,
    Rule::NegOrL,
    Rule::NegOrR,
    Rule::NegNegL,
    Rule::NegNegR,
    Rule::IntBotL,
    Rule::IntAndL,
    Rule::IntAndR,
    Rule::IntOrL,
    Rule::IntOrR1,
    Rule::IntOrR2,
    Rule::ImpL,
    Rule::ImpR,
    Rule::GemAt,
];

impl Rule {
    pub fn all() -> &'static [Rule] {
        &ALL_RULES
    }

    /// Stable ASCII label used in proof JSON and renderings.
    pub fn label(self) -> &'static str {
        match self {
            Rule::Id => "Id",
            Rule::BotL => "F=>",
            Rule::StarBotR => "=>*F",
            Rule::StarNegBotL => "*~F=>",
            Rule::AndL => "&=>",
            Rule::AndR => "=>&",
            Rule::OrL => "|=>",
            Rule::OrR1 => "=>|1",
            Rule::OrR2 => "=>|2",
            Rule::StarOrL => "*|=>",
            Rule::StarOrR => "=>*|",
            Rule::StarNegAndL => "*~&=>",
            Rule::StarNegAndR => "=>*~&",
            Rule::StarNegNegL => "*~~=>",
            Rule::StarNegNegR => "=>*~~",
            Rule::NegL => "~=>",
            Rule::NegR => "=>~",
            Rule::Star => "*",
            Rule::Id1 => "Id1",
            Rule::Id2 => "Id2",
            Rule::NegBotR => "=>~F",
            Rule::NegAndL => "~&=>",
            Rule::NegAndR1 => "=>~&1",
            Rule::NegAndR2 => "=>~&2",
            Rule::NegOrL => "~|=>",
            Rule::NegOrR => "=>~|",
            Rule::NegNegL => "~~=>",
            Rule::NegNegR => "=>~~",
            Rule::IntBotL => "FL",
            Rule::IntAndL => "&L",
            Rule::IntAndR => "&R",
            Rule::IntOrL => "|L",
            Rule::IntOrR1 => "|R1",
            Rule::IntOrR2 => "|R2",
            Rule::ImpL => "->L",
            Rule::ImpR => "->R",
            Rule::GemAt => "Gem-at",
        }
    }

    pub fn from_label(label: &str) -> Option<Rule> {
        ALL_RULES.iter().copied().find(|r| r.label() == label)
    }

    /// Label in LaTeX math mode, for proof-tree output.
    pub fn latex(self) -> &'static str {
        match self {
            Rule::Id => r"(\mathrm{Id})",
            Rule::BotL => r"(\bot\Rightarrow)",
            Rule::StarBotR => r"(\Rightarrow{*}\bot)",
            Rule::StarNegBotL => r"({*}\lnot\bot\Rightarrow)",
            Rule::AndL => r"(\wedge\Rightarrow)",
            Rule::AndR => r"(\Rightarrow\wedge)",
            Rule::OrL => r"(\vee\Rightarrow)",
            Rule::OrR1 => r"(\Rightarrow\vee_1)",
            Rule::OrR2 => r"(\Rightarrow\vee_2)",
            Rule::StarOrL => r"({*}\vee\Rightarrow)",
            Rule::StarOrR => r"(\Rightarrow{*}\vee)",
            Rule::StarNegAndL => r"({*}\lnot\wedge\Rightarrow)",
            Rule::StarNegAndR => r"(\Rightarrow{*}\lnot\wedge)",
            Rule::StarNegNegL => r"({*}\lnot\lnot\Rightarrow)",
            Rule::StarNegNegR => r"(\Rightarrow{*}\lnot\lnot)",
            Rule::NegL => r"(\lnot\Rightarrow)",
            Rule::NegR => r"(\Rightarrow\lnot)",
            Rule::Star => r"({*})",
            Rule::Id1 => r"(\mathrm{Id}_1)",
            Rule::Id2 => r"(\mathrm{Id}_2)",
            Rule::NegBotR => r"(\Rightarrow\lnot\bot)",
            Rule::NegAndL => r"(\lnot\wedge\Rightarrow)",
            Rule::NegAndR1 => r"(\Rightarrow\lnot\wedge_1)",
            Rule::NegAndR2 => r"(\Rightarrow\lnot\wedge_2)",
            Rule::NegOrL => r"(\lnot\vee\Rightarrow)",
            Rule::NegOrR => r"(\Rightarrow\lnot\vee)",
            Rule::NegNegL => r"(\lnot\lnot\Rightarrow)",
            Rule::NegNegR => r"(\Rightarrow\lnot\lnot)",
            Rule::IntBotL => r"(\bot\mathrm{L})",
            Rule::IntAndL => r"(\wedge\mathrm{L})",
            Rule::IntAndR => r"(\wedge\mathrm{R})",
            Rule::IntOrL => r"(\vee\mathrm{L})",
            Rule::IntOrR1 => r"(\vee\mathrm{R}_1)",
            Rule::IntOrR2 => r"(\vee\mathrm{R}_2)",
            Rule::ImpL => r"(\supset\mathrm{L})",
            Rule::ImpR => r"(\supset\mathrm{R})",
            Rule::GemAt => r"(\mathrm{Gem\text{-}at})",
        }
    }

    pub fn is_axiom(self) -> bool {
        matches!(
            self,
            Rule::Id | Rule::BotL | Rule::StarBotR | Rule::StarNegBotL | Rule::Id1 | Rule::Id2 | Rule::NegBotR | Rule::IntBotL
        )
    }

    /// Whether the principal occurrence sits in the antecedent.
    pub fn is_left(self) -> bool {
        matches!(
            self,
            Rule::Id
                | Rule::BotL
                | Rule::StarNegBotL
                | Rule::AndL
                | Rule::OrL
                | Rule::StarOrL
                | Rule::StarNegAndL
                | Rule::StarNegNegL
                | Rule::NegL
                | Rule::Star
                | Rule::Id1
                | Rule::Id2
                | Rule::NegAndL
                | Rule::NegOrL
                | Rule::NegNegL
                | Rule::IntBotL
                | Rule::IntAndL
                | Rule::IntOrL
                | Rule::ImpL
        )
    }

    /// Rules of G3ip that are invertible; search commits to them.
    pub fn is_invertible_int(self) -> bool {
        matches!(self, Rule::IntAndL | Rule::IntOrL | Rule::IntAndR | Rule::ImpR)
    }

    pub fn belongs_to(self, kind: CalculusKind) -> bool {
        use Rule::*;
        match kind {
            CalculusKind::G3sdm => matches!(
                self,
                Id | BotL
                    | StarBotR
                    | StarNegBotL
                    | AndL
                    | AndR
                    | OrL
                    | OrR1
                    | OrR2
                    | StarOrL
                    | StarOrR
                    | StarNegAndL
                    | StarNegAndR
                    | StarNegNegL
                    | StarNegNegR
                    | NegL
                    | NegR
                    | Star
            ),
            CalculusKind::G3dm => matches!(
                self,
                Id1 | Id2
                    | BotL
                    | NegBotR
                    | AndL
                    | AndR
                    | OrL
                    | OrR1
                    | OrR2
                    | NegAndL
                    | NegAndR1
                    | NegAndR2
                    | NegOrL
                    | NegOrR
                    | NegNegL
                    | NegNegR
            ),
            CalculusKind::G3ip => {
                matches!(self, Id | IntBotL | IntAndL | IntAndR | IntOrL | IntOrR1 | IntOrR2 | ImpL | ImpR)
            }
            CalculusKind::G3cp => self == GemAt || self.belongs_to(CalculusKind::G3ip),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Rule {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rule::from_label(&s).ok_or_else(|| serde::de::Error::custom(format!("unknown rule label `{s}`")))
    }
}

pub type Seq<C> = Sequent<<C as Calculus>::Member, <C as Calculus>::Succ>;

/// One backward application of a rule to a goal.
#[derive(Clone, Debug)]
pub struct RuleInstance<A, S> {
    pub rule: Rule,
    /// Antecedent index of the principal occurrence; `None` for rules acting
    /// on the succedent and for `Gem-at`.
    pub principal: Option<usize>,
    pub conclusion: Sequent<A, S>,
    pub premisses: Vec<Sequent<A, S>>,
}

pub type Instance<C> = RuleInstance<<C as Calculus>::Member, <C as Calculus>::Succ>;

/// A sequent calculus usable by the search engine.
pub trait Calculus: Copy + Default + fmt::Debug + Send + Sync + 'static {
    type Member: Formula;
    type Succ: Formula;
    const KIND: CalculusKind;
    /// Root-first search needs an ancestor loop check (rules that keep the
    /// principal formula).
    const LOOP_CHECK: bool;

    fn expand(goal: &Seq<Self>) -> Vec<Instance<Self>>;
    fn parse(input: &str) -> Result<Seq<Self>, ParseError>;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct G3sdm;
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct G3dm;
/// Intuitionistic G3ip.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct G3ip;
/// G3ip extended with `Gem-at` (classical).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct G3cp;

impl Calculus for G3sdm {
    type Member = Structure;
    type Succ = Structure;
    const KIND: CalculusKind = CalculusKind::G3sdm;
    const LOOP_CHECK: bool = false;

    fn expand(goal: &Seq<Self>) -> Vec<Instance<Self>> {
        expand_g3sdm(goal)
    }

    fn parse(input: &str) -> Result<Seq<Self>, ParseError> {
        parse_sdm_sequent(input)
    }
}

impl Calculus for G3dm {
    type Member = Term;
    type Succ = Term;
    const KIND: CalculusKind = CalculusKind::G3dm;
    const LOOP_CHECK: bool = false;

    fn expand(goal: &Seq<Self>) -> Vec<Instance<Self>> {
        expand_g3dm(goal)
    }

    fn parse(input: &str) -> Result<Seq<Self>, ParseError> {
        parse_dm_sequent(input)
    }
}

impl Calculus for G3ip {
    type Member = ImpTerm;
    type Succ = ImpTerm;
    const KIND: CalculusKind = CalculusKind::G3ip;
    const LOOP_CHECK: bool = true;

    fn expand(goal: &Seq<Self>) -> Vec<Instance<Self>> {
        expand_g3ip(goal, false)
    }

    fn parse(input: &str) -> Result<Seq<Self>, ParseError> {
        parse_int_sequent(input)
    }
}

impl Calculus for G3cp {
    type Member = ImpTerm;
    type Succ = ImpTerm;
    const KIND: CalculusKind = CalculusKind::G3cp;
    const LOOP_CHECK: bool = true;

    fn expand(goal: &Seq<Self>) -> Vec<Instance<Self>> {
        expand_g3ip(goal, true)
    }

    fn parse(input: &str) -> Result<Seq<Self>, ParseError> {
        parse_int_sequent(input)
    }
}
