//! The `morgan-kit` command line.
//!
//! Exit status: 0 derivable / valid / agreeing, 1 the negative verdict,
//! 2 parse or usage errors, 3 internal failures (a produced proof fails its check).

use std::fmt::Display;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{self, check_variety, counter_assignment, dm4, FiniteAlgebra, Inequality, Variety};
use crate::calculi::{Calculus, CalculusKind, G3cp, G3dm, G3ip, G3sdm};
use crate::corpus;
use crate::error::{Error, ParseError};
use crate::interpolation::{interpolate_goal, obligations, Interpolating, Partition};
use crate::search::{parse_proof_json, render, render_json, Format, Prover};
use crate::syntax::{
    parse_dm_sequent, parse_imp_term, parse_int_sequent, parse_partition, parse_sdm_sequent, parse_structure,
    parse_term, HasVars, Latex, Structure, Term,
};
use crate::translations::{self as tr, ClassRegistry, Corpus, EmbeddingChecker, EmbeddingKind};

#[derive(Parser, Debug)]
#[command(name = "morgan-kit", version, about = "Sequent calculi for semi-De Morgan and De Morgan algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search for a derivation and print it, or NOT DERIVABLE.
    Prove(ProveArgs),
    /// Exit 0 when derivable, 1 when not.
    Decide(ProveArgs),
    /// Interpolant for a partition `Γ₁ ; Γ₂ => β`, with both obligations.
    Interpolate(InterpolateArgs),
    /// Apply one of the translations t, f, nn, k, h, g.
    Translate(TranslateArgs),
    /// Compare derivability across a translation on a corpus.
    CheckEmbedding(EmbeddingArgs),
    /// Validity in finite algebras, with a counter-witness on failure.
    Validity(ValidityArgs),
    /// Finite algebra tools.
    Algebra(AlgebraArgs),
    /// Check and re-render a proof object (`morgan-kit/proof/v1`).
    Render(RenderArgs),
    /// Write a seeded random corpus, one sequent per line.
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
pub struct ProveArgs {
    #[arg(long, default_value = "g3sdm", value_parser = parse_calculus)]
    pub calculus: CalculusKind,
    #[arg(long, default_value = "ascii")]
    pub format: Format,
    /// Only accept derivations of height at most N (the shallowest is printed).
    #[arg(long)]
    pub height: Option<usize>,
    /// Read one sequent per line from a file (`-` for stdin), emit JSON lines.
    #[arg(long, conflicts_with = "input")]
    pub batch: Option<PathBuf>,
    /// Sequent, or `-` for stdin.
    #[arg(required_unless_present = "batch")]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct InterpolateArgs {
    #[arg(long, default_value = "g3sdm", value_parser = parse_calculus)]
    pub calculus: CalculusKind,
    #[arg(long, default_value = "ascii")]
    pub format: Format,
    pub input: String,
}

#[derive(Args, Debug)]
pub struct TranslateArgs {
    #[arg(long, value_parser = ["t", "f", "nn", "k", "h", "g"])]
    pub map: String,
    #[arg(long, default_value = "ascii")]
    pub format: Format,
    /// Class registry sidecar for `k`; read if present, always written.
    #[arg(long, default_value = "k-registry.json")]
    pub registry: PathBuf,
    /// Term or sequent.
    pub input: String,
}

#[derive(Args, Debug)]
pub struct EmbeddingArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: EmbeddingKind,
    /// Corpus file, one sequent per line in the source language of the kind.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 20)]
    pub max_weight: usize,
    #[arg(long, default_value = "ascii")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ValidityArgs {
    #[arg(long, default_value = "dm", value_parser = parse_variety)]
    pub variety: Variety,
    /// Largest algebra tried by the SDM search.
    #[arg(long, default_value_t = 5)]
    pub max_size: usize,
    /// Test in this algebra (`morgan-kit/algebra/v1`) instead.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    pub input: String,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[command(subcommand)]
    pub action: AlgebraAction,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraAction {
    /// All algebras of a variety up to isomorphism.
    Enumerate {
        #[arg(long, default_value = "sdm", value_parser = parse_variety)]
        variety: Variety,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value = "ascii")]
        format: Format,
    },
    /// Check an algebra file against a variety.
    Check {
        #[arg(long, default_value = "sdm", value_parser = parse_variety)]
        variety: Variety,
        file: PathBuf,
    },
    /// Print the four-element De Morgan algebra.
    Dm4 {
        #[arg(long, default_value = "ascii")]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[arg(long, default_value = "g3sdm", value_parser = parse_calculus)]
    pub calculus: CalculusKind,
    #[arg(long, default_value = "ascii")]
    pub format: Format,
    /// Proof JSON file, or `-` for stdin.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    #[arg(long, default_value = "g3sdm", value_parser = parse_calculus)]
    pub calculus: CalculusKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 20)]
    pub max_weight: usize,
    /// Keep only derivable sequents.
    #[arg(long)]
    pub derivable: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn parse_calculus(s: &str) -> Result<CalculusKind, String> {
    CalculusKind::from_name(s).ok_or_else(|| format!("unknown calculus `{s}` (g3sdm, g3dm, g3ip, g3cp)"))
}

fn parse_variety(s: &str) -> Result<Variety, String> {
    Variety::from_name(s).ok_or_else(|| format!("unknown variety `{s}` (sdm, dm)"))
}

fn parse_kind(s: &str) -> Result<EmbeddingKind, String> {
    EmbeddingKind::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = EmbeddingKind::all().iter().map(|k| k.name()).collect();
        format!("unknown embedding kind `{s}` ({})", names.join(", "))
    })
}

enum Failure {
    Parse { input: String, err: ParseError },
    Usage(String),
    Internal(String),
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Parse { .. } | Failure::Usage(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn report(&self) -> String {
        match self {
            Failure::Parse { input, err } => {
                format!("error: {err}\n  {input}\n  {}^\n", " ".repeat(err.pos()))
            }
            Failure::Usage(m) => format!("error: {m}\n"),
            Failure::Internal(m) => format!("internal error: {m}\n"),
        }
    }
}

fn parsed<T>(input: &str, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|err| Failure::Parse { input: input.to_string(), err })
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Check { .. } => Failure::Internal(e.to_string()),
            Error::Io(_) | Error::Json(_) | Error::Algebra(_) | Error::Unassigned(_) => Failure::Usage(e.to_string()),
            Error::Partition(_) | Error::CorpusMismatch { .. } | Error::Unsupported(_) => {
                Failure::Usage(e.to_string())
            }
            Error::Parse(err) => Failure::Parse { input: String::new(), err },
        }
    }
}

fn read_source(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn inline(input: &str) -> Result<String, Failure> {
    if input == "-" {
        Ok(read_source(Path::new("-"))?.trim().to_string())
    } else {
        Ok(input.to_string())
    }
}

fn lines(text: &str) -> Vec<&str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect()
}

type Output = (i32, String);

/// Parses `args` (including the program name) and runs the command.
/// Writes results to `out`, diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return status;
        }
    };
    match execute(cli.command) {
        Ok((status, text)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(f) => {
            let _ = err.write_all(f.report().as_bytes());
            f.status()
        }
    }
}

fn execute(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Prove(a) => prove(a, true),
        Command::Decide(a) => prove(a, false),
        Command::Interpolate(a) => interpolate_cmd(a),
        Command::Translate(a) => translate(a),
        Command::CheckEmbedding(a) => check_embedding_cmd(a),
        Command::Validity(a) => validity(a),
        Command::Algebra(a) => algebra_cmd(a.action),
        Command::Render(a) => render_cmd(a),
        Command::Corpus(a) => corpus_cmd(a),
    }
}

macro_rules! per_calculus {
    ($kind:expr, $f:ident($($arg:expr),*)) => {
        match $kind {
            CalculusKind::G3sdm => $f::<G3sdm>($($arg),*),
            CalculusKind::G3dm => $f::<G3dm>($($arg),*),
            CalculusKind::G3ip => $f::<G3ip>($($arg),*),
            CalculusKind::G3cp => $f::<G3cp>($($arg),*),
        }
    };
}

fn prove(a: ProveArgs, show: bool) -> Result<Output, Failure> {
    match &a.batch {
        Some(path) => {
            let text = read_source(path)?;
            per_calculus!(a.calculus, batch(&text, a.height, show))
        }
        None => {
            let input = inline(a.input.as_deref().unwrap_or("-"))?;
            per_calculus!(a.calculus, prove_one(&input, a.format, a.height, show))
        }
    }
}

fn search<C: Calculus>(prover: &Prover<C>, goal: &crate::calculi::Seq<C>, height: Option<usize>) -> Option<std::sync::Arc<crate::search::Proof<C>>> {
    match height {
        Some(n) => prover.derive_within_height(goal, n),
        None => prover.derive(goal),
    }
}

fn prove_one<C: Calculus>(input: &str, format: Format, height: Option<usize>, show: bool) -> Result<Output, Failure>
where
    C::Member: Latex,
    C::Succ: Latex,
{
    let goal = parsed(input, C::parse(input))?;
    let prover = Prover::<C>::new();
    match search(&prover, &goal, height) {
        Some(d) => {
            let text = render::<C>(&d, format).map_err(|e| Failure::Internal(Error::from(e).to_string()))?;
            Ok((0, if show { text } else { "derivable\n".into() }))
        }
        None => Ok((1, if show { "NOT DERIVABLE\n".into() } else { "not derivable\n".into() })),
    }
}

fn batch<C: Calculus>(text: &str, height: Option<usize>, show: bool) -> Result<Output, Failure>
where
    C::Member: Latex,
    C::Succ: Latex,
{
    let prover = Prover::<C>::new();
    let rows: Vec<(i32, Value)> = lines(text)
        .into_par_iter()
        .map(|line| match C::parse(line) {
            Err(e) => (2, json!({ "input": line, "error": e.to_string(), "pos": e.pos() })),
            Ok(goal) => match search(&prover, &goal, height) {
                None => (0, json!({ "input": line, "derivable": false })),
                Some(d) => match crate::search::check_derivation::<C>(&d) {
                    Err(f) => (3, json!({ "input": line, "error": Error::from(f).to_string() })),
                    Ok(()) => {
                        let mut row = json!({ "input": line, "derivable": true, "height": d.height });
                        if show {
                            let doc: Value = serde_json::from_str(&render_json::<C>(&d)).expect("proof JSON");
                            row["proof"] = doc;
                        }
                        (0, row)
                    }
                },
            },
        })
        .collect();
    let status = rows.iter().map(|(s, _)| *s).max().unwrap_or(0);
    let mut out = String::new();
    for (_, row) in rows {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    Ok((status, out))
}

fn interpolate_cmd(a: InterpolateArgs) -> Result<Output, Failure> {
    let raw = parsed(&a.input, parse_partition(&a.input))?;
    match a.calculus {
        CalculusKind::G3sdm => interpolate_with::<G3sdm>(Partition::<Structure>::from_parsed(raw), a.format),
        CalculusKind::G3dm => interpolate_with::<G3dm>(Partition::<Term>::from_parsed(raw)?, a.format),
        other => Err(Failure::Usage(format!("interpolation is available for g3sdm and g3dm, not {}", other.name()))),
    }
}

fn interpolate_with<C: Interpolating>(part: Partition<C::Member>, format: Format) -> Result<Output, Failure>
where
    C::Member: Latex,
{
    let prover = Prover::<C>::new();
    let Some(res) = interpolate_goal(&prover, &part)? else {
        return Ok((1, "NOT DERIVABLE\n".into()));
    };
    let (l, r) = obligations(&part, &res.interpolant);
    let proof = |d: &crate::search::Proof<C>, f: Format| {
        render::<C>(d, f).map_err(|e| Failure::Internal(Error::from(e).to_string()))
    };
    let text = match format {
        Format::Json => {
            let doc = |d: &crate::search::Proof<C>| -> Result<Value, Failure> {
                Ok(serde_json::from_str(&proof(d, Format::Json)?).expect("proof JSON"))
            };
            let v = json!({
                "partition": part.to_string(),
                "interpolant": res.interpolant.to_string(),
                "left": { "sequent": l.to_string(), "proof": doc(&res.left_derivation)? },
                "right": { "sequent": r.to_string(), "proof": doc(&res.right_derivation)? },
            });
            format!("{v}\n")
        }
        f => {
            let show = |x: &dyn Display, y: String| if f == Format::Latex { y } else { x.to_string() };
            format!(
                "interpolant: {}\nleft:  {}\nright: {}\n\n{}\n{}",
                show(&res.interpolant, res.interpolant.latex()),
                show(&l, l.latex()),
                show(&r, r.latex()),
                proof(&res.left_derivation, f)?,
                proof(&res.right_derivation, f)?
            )
        }
    };
    Ok((0, text))
}

fn shown<T: Display + Latex>(input: &str, map: &str, image: &T, format: Format) -> Output {
    let text = match format {
        Format::Ascii => image.to_string(),
        Format::Latex => image.latex(),
        Format::Json => json!({ "map": map, "input": input, "image": image.to_string() }).to_string(),
    };
    (0, text + "\n")
}

fn translate(a: TranslateArgs) -> Result<Output, Failure> {
    let input = inline(&a.input)?;
    let s = input.as_str();
    let is_seq = s.contains("=>");
    let fmt = a.format;
    let map = a.map.as_str();
    Ok(match (map, is_seq) {
        ("t", true) => shown(s, map, &tr::t_sequent(&parsed(s, parse_sdm_sequent(s))?), fmt),
        ("t", false) => shown(s, map, &tr::t_structure(&parsed(s, parse_structure(s))?), fmt),
        ("f", true) => shown(s, map, &tr::f_sequent(&parsed(s, parse_dm_sequent(s))?), fmt),
        ("f", false) => shown(s, map, &tr::f(&parsed(s, parse_term(s))?), fmt),
        ("nn", true) => {
            let seq = parsed(s, parse_dm_sequent(s))?;
            let img = crate::syntax::Sequent::new(tr::nn_antecedent(&seq.antecedent), tr::nn(&seq.succedent));
            shown(s, map, &img, fmt)
        }
        ("nn", false) => shown(s, map, &tr::nn(&parsed(s, parse_term(s))?), fmt),
        ("h", true) => shown(s, map, &tr::h_sequent(&parsed(s, parse_dm_sequent(s))?), fmt),
        ("h", false) => shown(s, map, &tr::h(&parsed(s, parse_term(s))?), fmt),
        ("g", true) => shown(s, map, &tr::g_sequent(&parsed(s, parse_int_sequent(s))?), fmt),
        ("g", false) => shown(s, map, &tr::g(&parsed(s, parse_imp_term(s))?), fmt),
        ("k", _) => {
            let mut registry = ClassRegistry::new();
            if a.registry.exists() {
                let text = read_source(&a.registry)?;
                let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
                registry.load_json(&v)?;
            }
            let out = if is_seq {
                let seq = parsed(s, parse_sdm_sequent(s))?;
                if seq.succedent.is_starred() {
                    return Err(Failure::Usage("k is defined for sequents with a plain succedent".into()));
                }
                shown(s, map, &registry.k_sequent(&seq), fmt)
            } else {
                shown(s, map, &registry.k_structure(&parsed(s, parse_structure(s))?), fmt)
            };
            let sidecar = serde_json::to_string_pretty(&registry.to_json()).expect("registry JSON");
            std::fs::write(&a.registry, sidecar + "\n")
                .map_err(|e| Failure::Usage(format!("{}: {e}", a.registry.display())))?;
            out
        }
        _ => unreachable!("clap restricts --map"),
    })
}

fn corpus_for(a: &EmbeddingArgs) -> Result<Corpus, Failure> {
    let want_sdm = a.kind == EmbeddingKind::SdmToIntK;
    let want_cl = a.kind == EmbeddingKind::ClToIntG;
    if let Some(path) = &a.corpus {
        let text = read_source(path)?;
        let ls = lines(&text);
        return Ok(if want_sdm {
            Corpus::Sdm(ls.iter().map(|l| parsed(l, parse_sdm_sequent(l))).collect::<Result<_, _>>()?)
        } else if want_cl {
            Corpus::Cl(ls.iter().map(|l| parsed(l, parse_int_sequent(l))).collect::<Result<_, _>>()?)
        } else {
            Corpus::Dm(ls.iter().map(|l| parsed(l, parse_dm_sequent(l))).collect::<Result<_, _>>()?)
        });
    }
    Ok(if want_sdm {
        Corpus::Sdm(corpus::sdm_corpus(a.seed, a.count, a.max_weight, true))
    } else {
        let dm = corpus::dm_corpus(a.seed, a.count, a.max_weight);
        if want_cl {
            Corpus::Cl(dm.iter().map(tr::h_sequent).collect())
        } else {
            Corpus::Dm(dm)
        }
    })
}

fn check_embedding_cmd(a: EmbeddingArgs) -> Result<Output, Failure> {
    let corpus = corpus_for(&a)?;
    let report = EmbeddingChecker::new().check(a.kind, &corpus)?;
    let text = match a.format {
        Format::Json => serde_json::to_string(&report).map_err(Error::from)? + "\n",
        _ => report.to_string(),
    };
    Ok((if report.all_agree() { 0 } else { 1 }, text))
}

fn load_algebra(path: &Path) -> Result<FiniteAlgebra, Failure> {
    let text = read_source(path)?;
    let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
    Ok(FiniteAlgebra::from_json(&v)?)
}

fn judge<S: Inequality + HasVars + Display>(s: &S, a: &ValidityArgs) -> Result<Output, Failure> {
    let verdict = |alg: &FiniteAlgebra, sigma: Option<algebra::Assignment>, scope: String| match sigma {
        None => (0, format!("valid {scope}\n")),
        Some(sigma) => (1, format!("not valid: {}\n  algebra {alg}\n  under {}\n", s, alg.show_assignment(&sigma))),
    };
    if let Some(path) = &a.algebra {
        let alg = load_algebra(path)?;
        if !check_variety(&alg, a.variety)? {
            return Err(Failure::Usage(format!("the algebra is not in the {} variety", a.variety)));
        }
        let sigma = counter_assignment(s, &alg);
        return Ok(verdict(&alg, sigma, "in the given algebra".into()));
    }
    match a.variety {
        Variety::Dm => {
            let alg = dm4();
            let sigma = counter_assignment(s, &alg);
            Ok(verdict(&alg, sigma, "in dm4".into()))
        }
        Variety::Sdm => match algebra::refute(s, Variety::Sdm, a.max_size) {
            Some(w) => Ok(verdict(&w.algebra, Some(w.assignment), String::new())),
            None => Ok((0, format!("valid in every SDM algebra with at most {} elements\n", a.max_size))),
        },
    }
}

fn validity(a: ValidityArgs) -> Result<Output, Failure> {
    let input = inline(&a.input)?;
    match a.variety {
        Variety::Sdm => judge(&parsed(&input, parse_sdm_sequent(&input))?, &a),
        Variety::Dm => judge(&parsed(&input, parse_dm_sequent(&input))?, &a),
    }
}

fn algebra_cmd(action: AlgebraAction) -> Result<Output, Failure> {
    let listing = |algs: &[FiniteAlgebra], format: Format| match format {
        Format::Json => algs.iter().map(|a| a.to_json().to_string() + "\n").collect::<String>(),
        _ => algs.iter().map(|a| format!("{a}\n")).collect(),
    };
    match action {
        AlgebraAction::Enumerate { variety, max_size, format } => {
            if !(2..=6).contains(&max_size) {
                return Err(Failure::Usage("--max-size must be between 2 and 6".into()));
            }
            Ok((0, listing(&algebra::enumerate_algebras(variety, max_size), format)))
        }
        AlgebraAction::Check { variety, file } => {
            let text = read_source(&file)?;
            let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
            let alg = FiniteAlgebra::from_json(&v)?;
            Ok(if check_variety(&alg, variety)? {
                (0, format!("{alg}\nis a {variety} algebra\n"))
            } else {
                (1, format!("{alg}\nis not a {variety} algebra\n"))
            })
        }
        AlgebraAction::Dm4 { format } => Ok((0, listing(&[dm4()], format))),
    }
}

fn render_cmd(a: RenderArgs) -> Result<Output, Failure> {
    let text = read_source(&a.file)?;
    per_calculus!(a.calculus, rerender(&text, a.format))
}

fn rerender<C: Calculus>(text: &str, format: Format) -> Result<Output, Failure>
where
    C::Member: Latex,
    C::Succ: Latex,
{
    let d = parse_proof_json::<C>(text)?;
    let out = render::<C>(&d, format).map_err(|e| Failure::Internal(Error::from(e).to_string()))?;
    Ok((0, out))
}

fn corpus_cmd(a: CorpusArgs) -> Result<Output, Failure> {
    let lines: Vec<String> = match (a.calculus, a.derivable) {
        (CalculusKind::G3sdm, false) => {
            corpus::sdm_corpus(a.seed, a.count, a.max_weight, false).iter().map(|s| s.to_string()).collect()
        }
        (CalculusKind::G3sdm, true) => {
            let p = Prover::new();
            corpus::derivable_sdm_corpus(a.seed, a.count, a.max_weight, &p).iter().map(|s| s.to_string()).collect()
        }
        (CalculusKind::G3dm, false) => {
            corpus::dm_corpus(a.seed, a.count, a.max_weight).iter().map(|s| s.to_string()).collect()
        }
        (CalculusKind::G3dm, true) => {
            let p = Prover::new();
            corpus::derivable_dm_corpus(a.seed, a.count, a.max_weight, &p).iter().map(|s| s.to_string()).collect()
        }
        (other, _) => return Err(Failure::Usage(format!("corpora are generated for g3sdm and g3dm, not {}", other.name()))),
    };
    let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
    match a.output {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok((0, format!("wrote {} sequents to {}\n", lines.len(), path.display())))
        }
        None => Ok((0, text)),
    }
}
