//! Minimal-parenthesis printing. The ASCII output parses back to the same
//! tree; the LaTeX output uses the same bracketing.

use std::fmt::{self, Write};

use super::{ImpTerm, Sequent, Structure, Term};

const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const NEG: u8 = 4;
const ATOM: u8 = 5;

struct Style {
    bottom: &'static str,
    top: &'static str,
    neg: &'static str,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
    star: &'static str,
    arrow: &'static str,
    open: &'static str,
    close: &'static str,
}

const ASCII: Style = Style {
    bottom: "F",
    top: "T",
    neg: "~",
    and: " & ",
    or: " | ",
    imp: " -> ",
    star: "*",
    arrow: "=>",
    open: "(",
    close: ")",
};

const LATEX: Style = Style {
    bottom: r"\bot",
    top: r"\top",
    neg: r"\lnot ",
    and: r" \wedge ",
    or: r" \vee ",
    imp: r" \supset ",
    star: "{*}",
    arrow: r"\Rightarrow",
    open: "(",
    close: ")",
};

fn term_prec(t: &Term) -> u8 {
    match t {
        Term::Var(_) | Term::Bottom => ATOM,
        Term::Neg(inner) if **inner == Term::Bottom => ATOM,
        Term::Neg(_) => NEG,
        Term::And(..) => AND,
        Term::Or(..) => OR,
    }
}

fn write_term<W: Write>(t: &Term, st: &Style, f: &mut W) -> fmt::Result {
    match t {
        Term::Var(v) => write!(f, "{v}"),
        Term::Bottom => f.write_str(st.bottom),
        Term::Neg(inner) if **inner == Term::Bottom => f.write_str(st.top),
        Term::Neg(inner) => {
            f.write_str(st.neg)?;
            child_term(inner, term_prec(inner) < NEG, st, f)
        }
        Term::And(l, r) => binary_term(l, st.and, r, AND, st, f),
        Term::Or(l, r) => binary_term(l, st.or, r, OR, st, f),
    }
}

fn binary_term<W: Write>(l: &Term, op: &str, r: &Term, prec: u8, st: &Style, f: &mut W) -> fmt::Result {
    child_term(l, term_prec(l) < prec, st, f)?;
    f.write_str(op)?;
    child_term(r, term_prec(r) <= prec, st, f)
}

fn child_term<W: Write>(t: &Term, parens: bool, st: &Style, f: &mut W) -> fmt::Result {
    if parens {
        f.write_str(st.open)?;
        write_term(t, st, f)?;
        f.write_str(st.close)
    } else {
        write_term(t, st, f)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, &ASCII, f)
    }
}

fn is_top(t: &ImpTerm) -> bool {
    matches!(t, ImpTerm::Imp(l, r) if **l == ImpTerm::Bottom && **r == ImpTerm::Bottom)
}

fn imp_prec(t: &ImpTerm) -> u8 {
    match t {
        ImpTerm::Var(_) | ImpTerm::Bottom => ATOM,
        t if is_top(t) => ATOM,
        ImpTerm::And(..) => AND,
        ImpTerm::Or(..) => OR,
        ImpTerm::Imp(..) => IMP,
    }
}

fn write_imp<W: Write>(t: &ImpTerm, st: &Style, f: &mut W) -> fmt::Result {
    match t {
        ImpTerm::Var(v) => write!(f, "{v}"),
        ImpTerm::Bottom => f.write_str(st.bottom),
        t if is_top(t) => f.write_str(st.top),
        ImpTerm::And(l, r) => binary_imp(l, st.and, r, AND, st, f),
        ImpTerm::Or(l, r) => binary_imp(l, st.or, r, OR, st, f),
        ImpTerm::Imp(l, r) => binary_imp(l, st.imp, r, IMP, st, f),
    }
}

fn binary_imp<W: Write>(l: &ImpTerm, op: &str, r: &ImpTerm, prec: u8, st: &Style, f: &mut W) -> fmt::Result {
    child_imp(l, imp_prec(l) < prec, st, f)?;
    f.write_str(op)?;
    child_imp(r, imp_prec(r) <= prec, st, f)
}

fn child_imp<W: Write>(t: &ImpTerm, parens: bool, st: &Style, f: &mut W) -> fmt::Result {
    if parens {
        f.write_str(st.open)?;
        write_imp(t, st, f)?;
        f.write_str(st.close)
    } else {
        write_imp(t, st, f)
    }
}

impl fmt::Display for ImpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_imp(self, &ASCII, f)
    }
}

fn write_structure<W: Write>(s: &Structure, st: &Style, f: &mut W) -> fmt::Result {
    match s {
        Structure::Plain(t) => write_term(t, st, f),
        Structure::Starred(t) => {
            f.write_str(st.star)?;
            write_term(t, st, f)
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_structure(self, &ASCII, f)
    }
}

/// LaTeX math-mode rendering.
pub trait Latex {
    fn latex(&self) -> String;
}

fn latex_var_names(s: String) -> String {
    // `#kN` becomes `p_{N}`.
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '#' && chars.peek() == Some(&'k') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            write!(out, "p_{{{digits}}}").unwrap();
        } else {
            out.push(c);
        }
    }
    out
}

impl Latex for Term {
    fn latex(&self) -> String {
        let mut s = String::new();
        write_term(self, &LATEX, &mut s).unwrap();
        latex_var_names(s)
    }
}

impl Latex for ImpTerm {
    fn latex(&self) -> String {
        let mut s = String::new();
        write_imp(self, &LATEX, &mut s).unwrap();
        latex_var_names(s)
    }
}

impl Latex for Structure {
    fn latex(&self) -> String {
        let mut s = String::new();
        write_structure(self, &LATEX, &mut s).unwrap();
        latex_var_names(s)
    }
}

impl<A: Latex, S: Latex> Latex for Sequent<A, S> {
    fn latex(&self) -> String {
        let ant: Vec<String> = self.antecedent.iter().map(Latex::latex).collect();
        let sep = if ant.is_empty() { "" } else { " " };
        format!("{}{sep}{} {}", ant.join(", "), LATEX.arrow, self.succedent.latex())
    }
}

#[cfg(test)]
mod tests {
    use super::Latex;
    use super::super::{parse_imp_term, parse_sdm_sequent, parse_term};

    #[test]
    fn minimal_parentheses() {
        for s in ["~(p & q)", "p & q | r", "p & (q | r)", "p | (q | r)", "p | q | r", "~~p", "T", "~T"] {
            assert_eq!(parse_term(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_term("((p)) & (q)").unwrap().to_string(), "p & q");
    }

    #[test]
    fn implication_printing() {
        for s in ["p -> q -> r", "p -> (q -> r)", "p -> F -> F", "T", "p & q -> r | s"] {
            assert_eq!(parse_imp_term(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_imp_term("~~p").unwrap().to_string(), "p -> F -> F");
    }

    #[test]
    fn latex_output() {
        assert_eq!(parse_term("~(p & q) | F").unwrap().latex(), r"\lnot (p \wedge q) \vee \bot");
        assert_eq!(parse_sdm_sequent("*p, q => *T").unwrap().latex(), r"{*}p, q \Rightarrow {*}\top");
        assert_eq!(parse_imp_term("#k12 -> p'").unwrap().latex(), r"p_{12} \supset p'");
    }
}
