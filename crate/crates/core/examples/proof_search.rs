// Decide sequents in G3SDM and G3DM and render the derivations.

use morgan_kit::search::{render, Format, Prover};
use morgan_kit::{parse_dm_sequent, parse_sdm_sequent, G3dm, G3sdm};

pub fn run_example() -> String {
    let mut out = String::new();
    let sdm = Prover::<G3sdm>::new();
    for text in ["~p => ~p", "p, q => p & q", "p => ~~p", "~~~p => ~p"] {
        let goal = parse_sdm_sequent(text).unwrap();
        match sdm.derive(&goal) {
            Some(d) => {
                out += &format!("G3SDM {text}: derivable, height {}\n", d.height);
                out += &render::<G3sdm>(&d, Format::Ascii).unwrap();
            }
            None => out += &format!("G3SDM {text}: not derivable\n"),
        }
    }

    // minimal heights come from iterative deepening
    let goal = parse_sdm_sequent("~p => ~p").unwrap();
    out += &format!("min height of ~p => ~p: {:?}\n", sdm.min_height(&goal));

    let dm = Prover::<G3dm>::new();
    let goal = parse_dm_sequent("~~p => p").unwrap();
    let d = dm.derive(&goal).unwrap();
    out += &render::<G3dm>(&d, Format::Latex).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
