// Craig interpolants extracted from derivations, for every partition of a goal.

use morgan_kit::interpolation::{interpolate_goal, verify_interpolant, Partition};
use morgan_kit::search::Prover;
use morgan_kit::syntax::{parse_dm_sequent, parse_partition, Structure};
use morgan_kit::{G3dm, G3sdm};

pub fn run_example() -> String {
    let mut out = String::new();
    let sdm = Prover::<G3sdm>::new();
    for text in ["p ; q => p", "q ; p => p", "*q ; => *(p & q)", "*(p | q) ; => *p"] {
        let part = Partition::<Structure>::from_parsed(parse_partition(text).unwrap());
        let res = interpolate_goal(&sdm, &part).unwrap().expect("derivable");
        let ok = verify_interpolant(&sdm, &part.goal(), &part, &res.interpolant);
        out += &format!("G3SDM {text:<22} interpolant {:<10} verified {ok}\n", res.interpolant.to_string());
    }

    let dm = Prover::<G3dm>::new();
    let goal = parse_dm_sequent("p & q, ~q | r => p & (r | q)").unwrap();
    for part in Partition::all(&goal) {
        let res = interpolate_goal(&dm, &part).unwrap().expect("derivable");
        out += &format!("G3DM {part}\n    interpolant {}\n", res.interpolant);
    }
    out
}

fn main() {
    print!("{}", run_example());
}
