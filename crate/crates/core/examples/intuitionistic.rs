// G3ip and G3ip+Gem-at, the targets of the k, h and g translations.

use morgan_kit::search::{render, Format, Prover};
use morgan_kit::syntax::parse_int_sequent;
use morgan_kit::{G3cp, G3ip};

pub fn run_example() -> String {
    let ip = Prover::<G3ip>::new();
    let cp = Prover::<G3cp>::new();
    let mut out = String::new();
    for text in [
        "=> p | ~p",
        "=> ~~(p | ~p)",
        "=> ((p -> q) -> p) -> p",
        "p -> q, q -> r => p -> r",
        "~~p => p",
        "=> ~~(~~p -> p)",
    ] {
        let s = parse_int_sequent(text).unwrap();
        out += &format!("{text:<28} G3ip {:<5} G3cp {}\n", ip.derivable(&s), cp.derivable(&s));
    }
    let s = parse_int_sequent("p -> q, p => q").unwrap();
    out += &render::<G3ip>(&ip.derive(&s).unwrap(), Format::Ascii).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
