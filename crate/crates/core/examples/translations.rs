// The translations t, f, k, h, g and the class registry behind k.

use morgan_kit::syntax::{parse_dm_sequent, parse_sdm_sequent, parse_term};
use morgan_kit::translations::{f, g_sequent, h_sequent, t_sequent, ClassRegistry};

pub fn run_example() -> String {
    let mut out = String::new();
    let s = parse_sdm_sequent("*p, q => *(p & q)").unwrap();
    out += &format!("t: {s}  ~>  {}\n", t_sequent(&s));

    for text in ["p | q", "~(p & q)", "p & ~p"] {
        out += &format!("f: {text}  ~>  {}\n", f(&parse_term(text).unwrap()));
    }

    let d = parse_dm_sequent("~(p & q) => ~p | ~q").unwrap();
    let cl = h_sequent(&d);
    out += &format!("h: {d}  ~>  {cl}\n");
    out += &format!("g: {cl}  ~>  {}\n", g_sequent(&cl));

    // k numbers equivalence classes of negated terms in first-encounter order
    let mut registry = ClassRegistry::new();
    for text in ["~p => ~~~p", "~(p & q) => ~(q & p)", "~p => ~(p & q)"] {
        let s = parse_sdm_sequent(text).unwrap();
        out += &format!("k: {s}  ~>  {}\n", registry.k_sequent(&s));
    }
    out += &format!("registry: {}\n", registry.to_json());
    out
}

fn main() {
    print!("{}", run_example());
}
