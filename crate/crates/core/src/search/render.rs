use std::fmt::Write;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{check_derivation, CheckFailure, Derivation, Proof};
use crate::calculi::{Calculus, CalculusKind, Rule};
use crate::error::{Error, Result};
use crate::syntax::{Latex, Sequent};

pub const PROOF_SCHEMA: &str = "morgan-kit/proof/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected ascii, latex or json)")),
        }
    }
}

/// Checks `d` and renders it.
pub fn render<C: Calculus>(d: &Proof<C>, format: Format) -> std::result::Result<String, CheckFailure>
where
    C::Member: Latex,
    C::Succ: Latex,
{
    check_derivation::<C>(d)?;
    Ok(match format {
        Format::Ascii => render_ascii(d),
        Format::Latex => render_latex(d),
        Format::Json => render_json::<C>(d),
    })
}

/// Indented tree, premisses above their conclusion:
///
/// ```text
///   p => p   [Id1]
/// ~~p => p   [~~=>]
/// ```
pub fn render_ascii<A: std::fmt::Display, S: std::fmt::Display>(d: &Derivation<A, S>) -> String {
    let mut out = String::new();
    ascii_node(d, 0, &mut out);
    out
}

fn ascii_node<A: std::fmt::Display, S: std::fmt::Display>(d: &Derivation<A, S>, depth: usize, out: &mut String) {
    for c in &d.children {
        ascii_node(c, depth + 1, out);
    }
    let _ = writeln!(out, "{:indent$}{}   [{}]", "", d.sequent, d.rule.label(), indent = 2 * depth);
}

/// A `bussproofs` proof tree.
pub fn render_latex<A: Latex, S: Latex>(d: &Derivation<A, S>) -> String {
    let mut out = String::from("\\begin{prooftree}\n");
    latex_node(d, &mut out);
    out.push_str("\\end{prooftree}\n");
    out
}

fn latex_node<A: Latex, S: Latex>(d: &Derivation<A, S>, out: &mut String) {
    if d.children.is_empty() {
        out.push_str("\\AxiomC{}\n");
    }
    for c in &d.children {
        latex_node(c, out);
    }
    let inf = match d.children.len() {
        0 | 1 => "UnaryInfC",
        2 => "BinaryInfC",
        _ => "TrinaryInfC",
    };
    let _ = writeln!(out, "\\RightLabel{{\\scriptsize ${}$}}", d.rule.latex());
    let _ = writeln!(out, "\\{inf}{{${}$}}", d.sequent.latex());
}

#[derive(Serialize, Deserialize)]
struct ProofDoc<A, S> {
    schema: String,
    calculus: CalculusKind,
    root: NodeDoc<A, S>,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc<A, S> {
    sequent: Sequent<A, S>,
    #[serde(default)]
    text: String,
    rule: Rule,
    principal: Option<usize>,
    height: usize,
    children: Vec<NodeDoc<A, S>>,
}

fn to_doc<A: Clone + std::fmt::Display, S: Clone + std::fmt::Display>(d: &Derivation<A, S>) -> NodeDoc<A, S> {
    NodeDoc {
        text: d.sequent.to_string(),
        sequent: d.sequent.clone(),
        rule: d.rule,
        principal: d.principal,
        height: d.height,
        children: d.children.iter().map(|c| to_doc(c)).collect(),
    }
}

fn from_doc<A, S>(n: NodeDoc<A, S>) -> Derivation<A, S> {
    Derivation {
        sequent: n.sequent,
        rule: n.rule,
        principal: n.principal,
        height: n.height,
        children: n.children.into_iter().map(|c| Arc::new(from_doc(c))).collect(),
    }
}

/// Compact JSON under the `morgan-kit/proof/v1` schema.
pub fn render_json<C: Calculus>(d: &Proof<C>) -> String {
    let doc = ProofDoc { schema: PROOF_SCHEMA.to_string(), calculus: C::KIND, root: to_doc(d) };
    serde_json::to_string(&doc).expect("proof documents serialize")
}

/// Reads a proof object written by [`render_json`]. The calculus recorded in
/// the document must be `C`. The result is not replay-checked.
pub fn parse_proof_json<C: Calculus>(text: &str) -> Result<Proof<C>> {
    let doc: ProofDoc<C::Member, C::Succ> = serde_json::from_str(text)?;
    if doc.schema != PROOF_SCHEMA {
        return Err(Error::Unsupported(format!("proof schema `{}`", doc.schema)));
    }
    if doc.calculus != C::KIND {
        return Err(Error::Unsupported(format!("proof for {} read as {}", doc.calculus, C::KIND)));
    }
    Ok(from_doc(doc.root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculi::{G3dm, G3ip, G3sdm};
    use crate::search::Prover;

    #[test]
    fn single_axiom_ascii() {
        let d = Prover::<G3sdm>::new().derive(&G3sdm::parse("p => p").unwrap()).unwrap();
        assert_eq!(render_ascii(&d), "p => p   [Id]\n");
    }

    #[test]
    fn two_node_ascii() {
        let d = Prover::<G3dm>::new().derive(&G3dm::parse("~~p => p").unwrap()).unwrap();
        assert_eq!(render_ascii(&d), "  p => p   [Id1]\n~~p => p   [~~=>]\n");
    }

    #[test]
    fn json_round_trip() {
        let d = Prover::<G3sdm>::new().derive(&G3sdm::parse("~(p & q), r => ~(q & p)").unwrap()).unwrap();
        let text = render_json::<G3sdm>(&d);
        let back = parse_proof_json::<G3sdm>(&text).unwrap();
        assert_eq!(back, *d);
        assert!(parse_proof_json::<G3dm>(&text).is_err());
    }

    #[test]
    fn latex_uses_bussproofs() {
        let d = Prover::<G3ip>::new().derive(&G3ip::parse("p & q => q & p").unwrap()).unwrap();
        let tex = render::<G3ip>(&d, Format::Latex).unwrap();
        assert!(tex.starts_with("\\begin{prooftree}"));
        assert!(tex.contains("\\BinaryInfC{$p, q \\Rightarrow q \\wedge p$}"));
        assert!(tex.contains("\\UnaryInfC{$p \\wedge q \\Rightarrow q \\wedge p$}"));
    }
}
