// Finite semi-De Morgan and De Morgan algebras as a semantic oracle.

use morgan_kit::algebra::{check_variety, counter_assignment, dm4, enumerate_algebras, refute, Variety};
use morgan_kit::syntax::{parse_dm_sequent, parse_sdm_sequent};

pub fn run_example() -> String {
    let mut out = String::new();
    for max in 2..=5 {
        let sdm = enumerate_algebras(Variety::Sdm, max).len();
        let dm = enumerate_algebras(Variety::Dm, max).len();
        out += &format!("up to size {max}: {sdm} SDM algebras, {dm} DM algebras\n");
    }

    let d = dm4();
    out += &format!("dm4 = {d}, De Morgan: {}\n", check_variety(&d, Variety::Dm).unwrap());
    for text in ["~(p & q) => ~p | ~q", "p & ~p => q"] {
        let s = parse_dm_sequent(text).unwrap();
        match counter_assignment(&s, &d) {
            None => out += &format!("{text}: valid in dm4\n"),
            Some(sigma) => out += &format!("{text}: fails in dm4 under {}\n", d.show_assignment(&sigma)),
        }
    }

    for text in ["p => ~~p", "~~p => p", "~(~p & ~q) => p | q", "~~~p => ~p"] {
        let s = parse_sdm_sequent(text).unwrap();
        match refute(&s, Variety::Sdm, 5) {
            Some(w) => out += &format!("{text}: refuted in {} under {}\n", w.algebra, w.algebra.show_assignment(&w.assignment)),
            None => out += &format!("{text}: no SDM counter-model up to size 5\n"),
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
