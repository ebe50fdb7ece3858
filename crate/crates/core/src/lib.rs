//! Proof search, interpolation, translations and finite-algebra semantics for
//! G3SDM (semi-De Morgan algebras) and G3DM (De Morgan algebras), with G3ip and
//! G3ip+Gem-at as translation targets.
//!
//! ```
//! use morgan_kit::{parse_dm_sequent, G3dm, Prover};
//!
//! let prover = Prover::<G3dm>::new();
//! let goal = parse_dm_sequent("~(p & q) => ~p | ~q").unwrap();
//! assert!(prover.derivable(&goal));
//! ```

pub mod algebra;
pub mod calculi;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod interpolation;
pub mod search;
pub mod syntax;
pub mod translations;

pub use algebra::{dm4, enumerate_algebras, evaluate, refute, valid, FiniteAlgebra, Variety};
pub use calculi::{Calculus, CalculusKind, G3cp, G3dm, G3ip, G3sdm, Rule};
pub use error::{Error, ParseError, Result};
pub use interpolation::{interpolate, interpolate_goal, verify_interpolant, Partition};
pub use search::{check_derivation, render, Derivation, Format, Proof, Prover};
pub use syntax::{
    parse_dm_sequent, parse_imp_term, parse_int_sequent, parse_partition, parse_sdm_sequent, parse_structure,
    parse_term, DmSequent, ImpTerm, IntSequent, SdmSequent, Sequent, Structure, Term, Var,
};
pub use translations::{check_embedding, ClassRegistry, Corpus, EmbeddingKind, EmbeddingReport};
