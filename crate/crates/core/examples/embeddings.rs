// Embedding checks on seeded corpora: derivability before and after each translation.

use morgan_kit::corpus::{dm_corpus, sdm_corpus};
use morgan_kit::translations::{h_sequent, Corpus, EmbeddingChecker, EmbeddingKind};

pub fn run_example() -> String {
    let dm = dm_corpus(11, 40, 16);
    let sdm = sdm_corpus(12, 40, 16, true);
    let cl = dm.iter().map(h_sequent).collect();
    let mut checker = EmbeddingChecker::new();
    let mut out = String::new();
    let runs = [
        (EmbeddingKind::DmToSdmF, Corpus::Dm(dm.clone())),
        (EmbeddingKind::DmGlivenkoSdm, Corpus::Dm(dm.clone())),
        (EmbeddingKind::DmToClH, Corpus::Dm(dm.clone())),
        (EmbeddingKind::ClToIntG, Corpus::Cl(cl)),
        (EmbeddingKind::SdmToIntK, Corpus::Sdm(sdm)),
        (EmbeddingKind::Diagram, Corpus::Dm(dm)),
    ];
    for (kind, corpus) in runs {
        out += &checker.check(kind, &corpus).unwrap().to_string();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
