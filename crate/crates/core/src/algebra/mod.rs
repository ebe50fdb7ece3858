//! Finite semi-De Morgan and De Morgan algebras as a semantic oracle.

mod enumerate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::{DmSequent, HasVars, SdmSequent, Term, Var};
use crate::translations::{conj, t_flatten};

pub use enumerate::{enumerate_algebras, enumerate_lattices, refute, CounterWitness};

pub const ALGEBRA_SCHEMA: &str = "morgan-kit/algebra/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variety {
    Sdm,
    Dm,
}

impl Variety {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "sdm" => Some(Variety::Sdm),
            "dm" => Some(Variety::Dm),
            _ => None,
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::Sdm => "sdm",
            Variety::Dm => "dm",
        })
    }
}

/// A bounded lattice with negation, given by tables over `0..size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    pub size: usize,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

pub type Assignment = BTreeMap<Var, usize>;

impl FiniteAlgebra {
    /// Builds join and meet from an order relation `leq[a][b]`. Fails when
    /// the order is not a bounded lattice.
    pub fn from_order(leq: &[Vec<bool>], neg: Vec<usize>) -> Result<Self> {
        let n = leq.len();
        let bad = |m: String| Error::Algebra(m);
        if leq.iter().any(|row| row.len() != n) || neg.len() != n {
            return Err(bad("tables are not square".into()));
        }
        let bound = |upper: bool| -> Option<usize> {
            (0..n).find(|&x| (0..n).all(|y| if upper { leq[y][x] } else { leq[x][y] }))
        };
        let zero = bound(false).ok_or_else(|| bad("no least element".into()))?;
        let one = bound(true).ok_or_else(|| bad("no greatest element".into()))?;
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let ubs: Vec<usize> = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
                let lub = ubs.iter().copied().find(|&u| ubs.iter().all(|&v| leq[u][v]));
                let lbs: Vec<usize> = (0..n).filter(|&l| leq[l][a] && leq[l][b]).collect();
                let glb = lbs.iter().copied().find(|&l| lbs.iter().all(|&v| leq[v][l]));
                join[a][b] = lub.ok_or_else(|| bad(format!("{a} and {b} have no join")))?;
                meet[a][b] = glb.ok_or_else(|| bad(format!("{a} and {b} have no meet")))?;
            }
        }
        Ok(FiniteAlgebra { size: n, join, meet, neg, zero, one })
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    /// Element name: `0`, `1`, and letters for the rest.
    pub fn name(&self, x: usize) -> String {
        if x == self.zero {
            "0".into()
        } else if x == self.one {
            "1".into()
        } else {
            let rank = (0..x).filter(|&y| y != self.zero && y != self.one).count();
            ((b'a' + rank as u8) as char).to_string()
        }
    }

    /// Checks totality and ranges, then the bounded distributive lattice laws.
    pub fn check_lattice(&self) -> Result<()> {
        let n = self.size;
        let bad = |m: String| Err(Error::Algebra(m));
        if self.join.len() != n || self.meet.len() != n || self.neg.len() != n {
            return bad("table sizes differ from the carrier".into());
        }
        if self.join.iter().chain(&self.meet).any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("binary table not total over the carrier".into());
        }
        if self.neg.iter().any(|&x| x >= n) || self.zero >= n || self.one >= n {
            return bad("element out of range".into());
        }
        let (j, m) = (&self.join, &self.meet);
        for a in 0..n {
            if j[a][a] != a || m[a][a] != a {
                return bad(format!("idempotence fails at {a}"));
            }
            if j[a][self.zero] != a || m[a][self.one] != a {
                return bad(format!("bounds fail at {a}"));
            }
            for b in 0..n {
                if j[a][b] != j[b][a] || m[a][b] != m[b][a] {
                    return bad(format!("commutativity fails at {a}, {b}"));
                }
                if j[a][m[a][b]] != a || m[a][j[a][b]] != a {
                    return bad(format!("absorption fails at {a}, {b}"));
                }
                for c in 0..n {
                    if j[a][j[b][c]] != j[j[a][b]][c] || m[a][m[b][c]] != m[m[a][b]][c] {
                        return bad(format!("associativity fails at {a}, {b}, {c}"));
                    }
                    if m[a][j[b][c]] != j[m[a][b]][m[a][c]] {
                        return bad(format!("distributivity fails at {a}, {b}, {c}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the negation satisfies the identities of `variety`.
    pub fn satisfies(&self, variety: Variety) -> bool {
        let (n, j, m, neg) = (self.size, &self.join, &self.meet, &self.neg);
        if neg[self.zero] != self.one || neg[self.one] != self.zero {
            return false;
        }
        for a in 0..n {
            if neg[neg[neg[a]]] != neg[a] {
                return false;
            }
            if variety == Variety::Dm && neg[neg[a]] != a {
                return false;
            }
            for b in 0..n {
                if neg[j[a][b]] != m[neg[a]][neg[b]] {
                    return false;
                }
                if neg[neg[m[a][b]]] != m[neg[neg[a]]][neg[neg[b]]] {
                    return false;
                }
                if variety == Variety::Dm {
                    if neg[m[a][b]] != j[neg[a]][neg[b]] {
                        return false;
                    }
                    if j[a][b] != neg[m[neg[a]][neg[b]]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let order: Vec<[usize; 2]> = (0..self.size)
            .flat_map(|a| (0..self.size).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.leq(a, b))
            .map(|(a, b)| [a, b])
            .collect();
        let names: Vec<String> = (0..self.size).map(|x| self.name(x)).collect();
        serde_json::json!({
            "schema": ALGEBRA_SCHEMA,
            "size": self.size,
            "order": order,
            "neg": self.neg,
            "names": names,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            schema: String,
            size: usize,
            order: Vec<[usize; 2]>,
            neg: Vec<usize>,
        }
        let doc: Doc = serde_json::from_value(v.clone())?;
        if doc.schema != ALGEBRA_SCHEMA {
            return Err(Error::Unsupported(format!("algebra schema `{}`", doc.schema)));
        }
        let mut leq = vec![vec![false; doc.size]; doc.size];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for [a, b] in doc.order {
            if a >= doc.size || b >= doc.size {
                return Err(Error::Algebra(format!("order pair ({a}, {b}) out of range")));
            }
            leq[a][b] = true;
        }
        let alg = FiniteAlgebra::from_order(&leq, doc.neg)?;
        alg.check_lattice()?;
        Ok(alg)
    }

    /// Renders an assignment with element names.
    pub fn show_assignment(&self, sigma: &Assignment) -> String {
        sigma.iter().map(|(v, x)| format!("{v}={}", self.name(*x))).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.size).map(|x| self.name(x)).collect();
        let mut covers = Vec::new();
        for a in 0..self.size {
            for b in 0..self.size {
                let between = (0..self.size).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if a != b && self.leq(a, b) && !between {
                    covers.push(format!("{}<{}", names[a], names[b]));
                }
            }
        }
        let negs: Vec<String> = (0..self.size).map(|x| format!("~{}={}", names[x], names[self.neg[x]])).collect();
        write!(f, "{{{}}} covers [{}] neg [{}]", names.join(","), covers.join(" "), negs.join(" "))
    }
}

/// Validates the tables and checks every defining identity of `variety`.
pub fn check_variety(alg: &FiniteAlgebra, variety: Variety) -> Result<bool> {
    alg.check_lattice()?;
    Ok(alg.satisfies(variety))
}

/// The two-element Boolean algebra.
pub fn boolean2() -> FiniteAlgebra {
    FiniteAlgebra::from_order(&[vec![true, true], vec![false, true]], vec![1, 0]).expect("2-chain")
}

/// The four-element De Morgan algebra: `0 < a, b < 1` with `~a = a`, `~b = b`.
pub fn dm4() -> FiniteAlgebra {
    let t = true;
    let f = false;
    let leq = [vec![t, t, t, t], vec![f, t, f, t], vec![f, f, t, t], vec![f, f, f, t]];
    FiniteAlgebra::from_order(&leq, vec![3, 1, 2, 0]).expect("diamond")
}

/// Homomorphic evaluation of `t` under `sigma`.
pub fn evaluate(t: &Term, sigma: &Assignment, alg: &FiniteAlgebra) -> Result<usize> {
    Ok(match t {
        Term::Var(v) => *sigma.get(v).ok_or_else(|| Error::Unassigned(v.to_string()))?,
        Term::Bottom => alg.zero,
        Term::Neg(x) => alg.neg[evaluate(x, sigma, alg)?],
        Term::And(l, r) => alg.meet[evaluate(l, sigma, alg)?][evaluate(r, sigma, alg)?],
        Term::Or(l, r) => alg.join[evaluate(l, sigma, alg)?][evaluate(r, sigma, alg)?],
    })
}

/// A sequent read as a lattice inequality `lhs ≤ rhs`.
pub trait Inequality {
    fn inequality(&self) -> (Term, Term);
}

impl Inequality for SdmSequent {
    fn inequality(&self) -> (Term, Term) {
        (t_flatten(&self.antecedent), self.succedent.flatten())
    }
}

impl Inequality for DmSequent {
    fn inequality(&self) -> (Term, Term) {
        let mut ant = self.antecedent.clone();
        ant.sort();
        (conj(ant), self.succedent.clone())
    }
}

/// Every assignment of elements to `vars`, in lexicographic order.
pub fn assignments(vars: &[Var], size: usize) -> impl Iterator<Item = Assignment> + '_ {
    let total = size.checked_pow(vars.len() as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut sigma = Assignment::new();
        for v in vars.iter().rev() {
            sigma.insert(v.clone(), code % size);
            code /= size;
        }
        sigma
    })
}

/// First assignment under which `lhs ≤ rhs` fails.
pub fn counter_assignment<S: Inequality + HasVars>(s: &S, alg: &FiniteAlgebra) -> Option<Assignment> {
    let (lhs, rhs) = s.inequality();
    let vars: Vec<Var> = s.var_set().into_iter().collect();
    let found = assignments(&vars, alg.size).find(|sigma| {
        let l = evaluate(&lhs, sigma, alg).expect("all variables assigned");
        let r = evaluate(&rhs, sigma, alg).expect("all variables assigned");
        !alg.leq(l, r)
    });
    found
}

/// Validity in `alg`: `lhs ≤ rhs` under every assignment.
pub fn valid<S: Inequality + HasVars>(s: &S, alg: &FiniteAlgebra) -> bool {
    counter_assignment(s, alg).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_dm_sequent, parse_term};

    #[test]
    fn boolean_is_both() {
        let b = boolean2();
        assert!(check_variety(&b, Variety::Sdm).unwrap());
        assert!(check_variety(&b, Variety::Dm).unwrap());
    }

    #[test]
    fn diamond_tables() {
        let d = dm4();
        assert!(check_variety(&d, Variety::Dm).unwrap());
        let (a, b) = (1, 2);
        assert_eq!(d.meet[a][b], d.zero);
        assert_eq!(d.join[a][b], d.one);
        assert_eq!(d.neg[a], a);
        assert_eq!(d.to_string(), "{0,a,b,1} covers [0<a 0<b a<1 b<1] neg [~0=1 ~a=a ~b=b ~1=0]");
    }

    #[test]
    fn broken_involution() {
        let mut d = dm4();
        d.neg[1] = 0;
        assert!(!check_variety(&d, Variety::Dm).unwrap());
    }

    #[test]
    fn malformed_tables_are_errors() {
        let mut d = dm4();
        d.join[0].pop();
        assert!(check_variety(&d, Variety::Dm).is_err());
        let mut d = dm4();
        d.neg[0] = 9;
        assert!(check_variety(&d, Variety::Sdm).is_err());
    }

    #[test]
    fn evaluation() {
        let d = dm4();
        let sigma: Assignment = [(Var::base("p"), 1), (Var::base("q"), 2)].into_iter().collect();
        assert_eq!(evaluate(&parse_term("~F").unwrap(), &sigma, &d).unwrap(), d.one);
        assert_eq!(evaluate(&parse_term("~(p & q)").unwrap(), &sigma, &d).unwrap(), d.one);
        assert_eq!(evaluate(&parse_term("p | ~p").unwrap(), &sigma, &d).unwrap(), 1);
        assert!(matches!(evaluate(&parse_term("r").unwrap(), &sigma, &d), Err(Error::Unassigned(_))));
    }

    #[test]
    fn validity() {
        let d = dm4();
        assert!(valid(&parse_dm_sequent("p => p").unwrap(), &d));
        let s = parse_dm_sequent("p => ~p").unwrap();
        let w = counter_assignment(&s, &d).unwrap();
        assert_eq!(w[&Var::base("p")], d.one);
        assert!(!valid(&s, &d));
        assert!(valid(&parse_dm_sequent("~(p & q) => ~p | ~q").unwrap(), &d));
    }

    #[test]
    fn json_round_trip() {
        let d = dm4();
        assert_eq!(FiniteAlgebra::from_json(&d.to_json()).unwrap(), d);
    }
}
