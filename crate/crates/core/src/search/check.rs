use std::fmt;

use super::Proof;
use crate::calculi::Calculus;

/// Where and why a derivation failed to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    /// Child indices from the root.
    pub path: Vec<usize>,
    pub reason: String,
}

impl CheckFailure {
    pub fn path_string(&self) -> String {
        let mut s = String::from("root");
        for i in &self.path {
            s.push('/');
            s.push_str(&i.to_string());
        }
        s
    }
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path_string(), self.reason)
    }
}

impl std::error::Error for CheckFailure {}

impl From<CheckFailure> for crate::error::Error {
    fn from(c: CheckFailure) -> Self {
        crate::error::Error::Check { path: c.path_string(), reason: c.reason }
    }
}

/// Replays every node against the rule table of `C`.
///
/// A node passes when its rule belongs to `C`, its height field is
/// consistent with its children, and expanding its sequent yields an
/// instance with the same rule and principal whose premisses are the
/// children's sequents (as multisets), in order.
pub fn check_derivation<C: Calculus>(d: &Proof<C>) -> Result<(), CheckFailure> {
    let mut path = Vec::new();
    check_node::<C>(d, &mut path)
}

fn check_node<C: Calculus>(d: &Proof<C>, path: &mut Vec<usize>) -> Result<(), CheckFailure> {
    let fail = |path: &Vec<usize>, reason: String| Err(CheckFailure { path: path.clone(), reason });
    if !d.rule.belongs_to(C::KIND) {
        return fail(path, format!("rule {} is not a rule of {}", d.rule, C::KIND));
    }
    let expected = if d.children.is_empty() { 0 } else { 1 + d.children.iter().map(|c| c.height).max().unwrap_or(0) };
    if d.height != expected {
        return fail(path, format!("height field {} but children give {expected}", d.height));
    }
    if d.children.is_empty() != d.rule.is_axiom() {
        return fail(path, format!("rule {} with {} children", d.rule, d.children.len()));
    }
    let matched = C::expand(&d.sequent).into_iter().any(|inst| {
        inst.rule == d.rule
            && inst.principal == d.principal
            && inst.premisses.len() == d.children.len()
            && inst.premisses.iter().zip(&d.children).all(|(p, c)| *p == c.sequent)
    });
    if !matched {
        return fail(
            path,
            format!("no instance of {} with principal {:?} concludes `{}` from the given premisses", d.rule, d.principal, d.sequent),
        );
    }
    for (i, c) in d.children.iter().enumerate() {
        path.push(i);
        check_node::<C>(c, path)?;
        path.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::calculi::{G3dm, G3sdm};
    use crate::search::{Derivation, Prover};

    #[test]
    fn search_output_checks() {
        let p = Prover::<G3sdm>::new();
        let d = p.derive(&G3sdm::parse("~(p | q) => ~p & ~q").unwrap()).unwrap();
        assert_eq!(check_derivation::<G3sdm>(&d), Ok(()));
    }

    #[test]
    fn corrupted_premiss_fails() {
        let p = Prover::<G3dm>::new();
        let d = p.derive(&G3dm::parse("~~p => p").unwrap()).unwrap();
        let mut bad = (*d).clone();
        bad.children[0] = Arc::new(Derivation::leaf(G3dm::parse("q => q").unwrap(), crate::calculi::Rule::Id1, Some(0)));
        let err = check_derivation::<G3dm>(&bad).unwrap_err();
        assert_eq!(err.path, Vec::<usize>::new());
    }

    #[test]
    fn wrong_height_fails() {
        let p = Prover::<G3dm>::new();
        let d = p.derive(&G3dm::parse("~~p => p").unwrap()).unwrap();
        let mut bad = (*d).clone();
        bad.height = 5;
        assert!(check_derivation::<G3dm>(&bad).is_err());
    }

    #[test]
    fn foreign_rule_fails() {
        let p = Prover::<G3dm>::new();
        let d = p.derive(&G3dm::parse("p => p").unwrap()).unwrap();
        let mut bad = (*d).clone();
        bad.rule = crate::calculi::Rule::Id;
        assert!(check_derivation::<G3dm>(&bad).is_err());
    }
}
