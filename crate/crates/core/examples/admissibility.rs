// Seeded corpora and extensional checks of admissible rules.

use morgan_kit::corpus::{derivable_sdm_corpus, Generator};
use morgan_kit::search::Prover;
use morgan_kit::syntax::{Sequent, Structure, Term};
use morgan_kit::G3sdm;

pub fn run_example() -> String {
    let prover = Prover::<G3sdm>::new();
    let corpus = derivable_sdm_corpus(5, 60, 25, &prover);
    let mut g = Generator::new(6);
    let (mut weakening, mut contraposition) = (0, 0);
    for s in &corpus {
        // height-preserving weakening
        let n = prover.min_height(s).unwrap();
        let mut ant = vec![g.structure()];
        ant.extend(s.antecedent.iter().cloned());
        weakening += prover.derivable_within_height(&Sequent::new(ant, s.succedent.clone()), n) as usize;

        // contraposition on the flattened sequent
        let phi = morgan_kit::translations::t_flatten(&s.antecedent);
        let psi = s.succedent.flatten();
        let cp = Sequent::new(vec![Structure::Plain(Term::neg(psi))], Structure::Plain(Term::neg(phi)));
        contraposition += prover.derivable(&cp) as usize;
    }
    let mut out = String::new();
    for s in corpus.iter().take(5) {
        out += &format!("  {s}\n");
    }
    out += &format!("weakening {weakening}/{}, contraposition {contraposition}/{}\n", corpus.len(), corpus.len());
    out += &format!("memo entries {}, expansions {}\n", prover.memo_len(), prover.expansions());
    out
}

fn main() {
    print!("{}", run_example());
}
