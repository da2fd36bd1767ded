//! Command-line surface: recognition with certificates, witness extraction,
//! catalog export, verification suites, and DOT rendering.
//!
//! Exit codes are a stable contract: 0 chordal/ok, 1 not chordal (or a
//! verification discrepancy), 2 input error, 3 witness requested on a
//! chordal graph.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalog::{
    generate_with_caps, standard_catalog, CatalogError, FamilyTag, GeneratorCaps, JoinOptions,
    TadpoleShape,
};
use crate::elimination::{
    digraph_to_signed_graph, recognize_chordal_signed_bigraph, recognize_chordal_signed_graph,
    EliminationCertificate,
};
use crate::fileformat::{
    parse_digraph, parse_graph, serialize_graph, serialize_graph_json, to_dot,
};
use crate::graph::{Sign, SignedGraph};
use crate::oracle::{run_suite, verify_catalog, Suite, SuiteConfig, DEFAULT_CODE_BUDGET};
use crate::structure::TadpoleKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CHORDAL: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_CHORDAL_NO_WITNESS: i32 = 3;

/// Budget override variable honoured by `verify`.
pub const BUDGET_ENV: &str = "SIGNED_CHORDAL_BUDGET";

#[derive(Parser)]
#[command(
    name = "signed-chordal",
    about = "Recognize chordal signed graphs and bigraphs, certify the answer, \
             and machine-verify the structure theory at small scale"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide chordality; prints the elimination certificate when chordal.
    Recognize(RecognizeArgs),
    /// Extract a minimal forbidden induced subgraph from a non-chordal input.
    Witness(WitnessArgs),
    /// Write family members as graph files plus a manifest.
    Catalog(CatalogArgs),
    /// Run a verification suite and report discrepancies.
    Verify(VerifyArgs),
    /// Render a graph file as DOT (positive blue, negative red).
    ExportDot(ExportDotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Bigraph,
    Graph,
    Digraph,
}

#[derive(Args)]
pub struct RecognizeArgs {
    /// Input graph file (arc list in digraph mode).
    pub path: PathBuf,
    #[arg(long, value_enum, default_value = "bigraph")]
    pub mode: Mode,
}

#[derive(Args)]
pub struct WitnessArgs {
    pub path: PathBuf,
}

#[derive(Args)]
pub struct CatalogArgs {
    /// Family name: F1..F6, M1..M5, D, W1..W6, Z1, Z2, C2k, Sum, Join, all.
    #[arg(long)]
    pub family: String,
    /// Family parameters, comma-separated key=value pairs
    /// (e.g. `k=4` or `t1=1,k1=1,t2=2,k2=3,adj=yes,lw=-`).
    #[arg(long, default_value = "")]
    pub params: String,
    #[arg(long)]
    pub outdir: PathBuf,
    /// Cap on cycle half-length for parametric generation.
    #[arg(long, default_value_t = 8)]
    pub cycle_cap: usize,
    /// Cap on tadpole tail lengths.
    #[arg(long, default_value_t = 8)]
    pub tail_cap: usize,
    /// Write members in the JSON mirror format instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite name: comp, minf, nonsep, main, main-sample, graph-variant,
    /// l2.1, l3.2, l3.4, l3.5, l4.2, l4.4, l4.6, l4.8, l4.10, cor5.2,
    /// or catalog.
    #[arg(long)]
    pub suite: String,
    /// Suite bounds, comma-separated (defaults are per suite).
    #[arg(long, default_value = "")]
    pub bounds: String,
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Enumeration budget in base-3 codes; also via SIGNED_CHORDAL_BUDGET.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 0xC0FFEE)]
    pub seed: u64,
    /// Emit the machine-readable report instead of the text summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct ExportDotArgs {
    pub path: PathBuf,
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Recognize(args) => cmd_recognize(&args),
        Command::Witness(args) => cmd_witness(&args),
        Command::Catalog(args) => cmd_catalog(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::ExportDot(args) => cmd_export_dot(&args),
    }
}

fn read_input(path: &Path) -> Result<String, i32> {
    fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_INPUT_ERROR
    })
}

fn load_graph(path: &Path) -> Result<SignedGraph, i32> {
    let text = read_input(path)?;
    parse_graph(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_INPUT_ERROR
    })
}

fn print_certificate(cert: &EliminationCertificate) {
    match cert {
        EliminationCertificate::VertexOrdering(seq) => {
            for v in seq {
                println!("{v}");
            }
        }
        EliminationCertificate::EdgeOrdering(seq) => {
            for (u, v) in seq {
                println!("{u} {v}");
            }
        }
    }
}

fn cmd_recognize(args: &RecognizeArgs) -> i32 {
    let cert = match args.mode {
        Mode::Bigraph => {
            let g = match load_graph(&args.path) {
                Ok(g) => g,
                Err(code) => return code,
            };
            match recognize_chordal_signed_bigraph(&g) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT_ERROR;
                }
            }
        }
        Mode::Graph => {
            let g = match load_graph(&args.path) {
                Ok(g) => g,
                Err(code) => return code,
            };
            recognize_chordal_signed_graph(&g)
        }
        Mode::Digraph => {
            let text = match read_input(&args.path) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let d = match parse_digraph(&text) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {}: {e}", args.path.display());
                    return EXIT_INPUT_ERROR;
                }
            };
            recognize_chordal_signed_graph(&digraph_to_signed_graph(&d))
        }
    };
    match cert {
        Some(c) => {
            print_certificate(&c);
            EXIT_OK
        }
        None => EXIT_NOT_CHORDAL,
    }
}

fn cmd_witness(args: &WitnessArgs) -> i32 {
    let g = match load_graph(&args.path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match crate::catalog::minimal_non_chordal_witness(&g) {
        Ok(w) => {
            println!("{}", w.tag);
            for (member, host) in w.embedding.iter().enumerate() {
                println!("{member} {host}");
            }
            EXIT_OK
        }
        Err(CatalogError::InputIsChordal) => {
            eprintln!("error: input is chordal; no forbidden witness exists");
            EXIT_CHORDAL_NO_WITNESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn parse_params(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for chunk in text.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let Some((k, v)) = chunk.split_once('=') else {
            return Err(format!("bad parameter `{chunk}`; expected key=value"));
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn parse_shape(
    params: &BTreeMap<String, String>,
    tkey: &str,
    kkey: &str,
) -> Result<TadpoleShape, String> {
    let t: usize = params
        .get(tkey)
        .ok_or_else(|| format!("missing parameter `{tkey}`"))?
        .parse()
        .map_err(|_| format!("`{tkey}` must be 1 or 2"))?;
    let kind = match t {
        1 => TadpoleKind::Type1,
        2 => TadpoleKind::Type2,
        _ => return Err(format!("`{tkey}` must be 1 or 2")),
    };
    let k: usize = params
        .get(kkey)
        .ok_or_else(|| format!("missing parameter `{kkey}`"))?
        .parse()
        .map_err(|_| format!("`{kkey}` must be a tail length"))?;
    Ok(TadpoleShape::new(kind, k))
}

fn parse_sign(text: &str) -> Result<Sign, String> {
    match text {
        "+" => Ok(Sign::Positive),
        "-" => Ok(Sign::Negative),
        _ => Err(format!("bad sign `{text}`")),
    }
}

fn family_tags(args: &CatalogArgs) -> Result<Vec<FamilyTag>, String> {
    let params = parse_params(&args.params)?;
    let simple = |tag: FamilyTag| -> Result<Vec<FamilyTag>, String> { Ok(vec![tag]) };
    match args.family.to_ascii_uppercase().as_str() {
        "F1" => simple(FamilyTag::F1),
        "F2" => simple(FamilyTag::F2),
        "F3" => simple(FamilyTag::F3),
        "F4" => simple(FamilyTag::F4),
        "F5" => simple(FamilyTag::F5),
        "F6" => simple(FamilyTag::F6),
        "D" => simple(FamilyTag::D),
        "M1" => simple(FamilyTag::MinimalComplete(1)),
        "M2" => simple(FamilyTag::MinimalComplete(2)),
        "M3" => simple(FamilyTag::MinimalComplete(3)),
        "M4" => simple(FamilyTag::MinimalComplete(4)),
        "M5" => simple(FamilyTag::MinimalComplete(5)),
        "W1" => simple(FamilyTag::W(1)),
        "W2" => simple(FamilyTag::W(2)),
        "W3" => simple(FamilyTag::W(3)),
        "W4" => simple(FamilyTag::W(4)),
        "W5" => simple(FamilyTag::W(5)),
        "W6" => simple(FamilyTag::W(6)),
        "Z1" => simple(FamilyTag::Z(1)),
        "Z2" => simple(FamilyTag::Z(2)),
        "C2K" => {
            let k: usize = params
                .get("k")
                .ok_or("C2k needs `k=<half length>`")?
                .parse()
                .map_err(|_| "`k` must be an integer".to_string())?;
            simple(FamilyTag::C2k(k))
        }
        "SUM" => {
            let a = parse_shape(&params, "t1", "k1")?;
            let b = parse_shape(&params, "t2", "k2")?;
            simple(FamilyTag::Sum(a, b))
        }
        "JOIN" => {
            let left = parse_shape(&params, "t1", "k1")?;
            let right = parse_shape(&params, "t2", "k2")?;
            let ends_adjacent = match params.get("adj").map(String::as_str) {
                Some("yes") | Some("true") => Some(true),
                Some("no") | Some("false") => Some(false),
                None => None,
                Some(other) => return Err(format!("bad `adj` value `{other}`")),
            };
            let left_w_sign = params.get("lw").map(|s| parse_sign(s)).transpose()?;
            let right_w_sign = params.get("rw").map(|s| parse_sign(s)).transpose()?;
            // Enumerate unpinned option bits into concrete tags.
            let opts = JoinOptions { ends_adjacent, left_w_sign, right_w_sign };
            let adjacency: Vec<bool> = match opts.ends_adjacent {
                Some(b) => vec![b],
                None if left.is_w1() || right.is_w1() => vec![true],
                None => vec![false, true],
            };
            let lsigns: Vec<Option<Sign>> = if left.is_w1() {
                opts.left_w_sign
                    .map(|s| vec![Some(s)])
                    .unwrap_or(vec![Some(Sign::Positive), Some(Sign::Negative)])
            } else {
                vec![None]
            };
            let rsigns: Vec<Option<Sign>> = if right.is_w1() {
                opts.right_w_sign
                    .map(|s| vec![Some(s)])
                    .unwrap_or(vec![Some(Sign::Positive), Some(Sign::Negative)])
            } else {
                vec![None]
            };
            let mut tags = Vec::new();
            for &ends_adjacent in &adjacency {
                for &lw in &lsigns {
                    for &rw in &rsigns {
                        tags.push(FamilyTag::Join {
                            left,
                            right,
                            ends_adjacent,
                            left_w_sign: lw,
                            right_w_sign: rw,
                        });
                    }
                }
            }
            Ok(tags)
        }
        "ALL" => Ok(Vec::new()), // handled separately
        other => Err(format!("unknown family `{other}`")),
    }
}

fn cmd_catalog(args: &CatalogArgs) -> i32 {
    let caps =
        GeneratorCaps { max_cycle_half_length: args.cycle_cap, max_tail: args.tail_cap };
    let entries = if args.family.eq_ignore_ascii_case("all") {
        match standard_catalog(&caps) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT_ERROR;
            }
        }
    } else {
        let tags = match family_tags(args) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INPUT_ERROR;
            }
        };
        let mut entries = Vec::new();
        for tag in tags {
            match generate_with_caps(&tag, &caps) {
                Ok(graphs) => entries.extend(
                    graphs
                        .into_iter()
                        .map(|graph| crate::catalog::CatalogEntry { tag: tag.clone(), graph }),
                ),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INPUT_ERROR;
                }
            }
        }
        entries
    };
    if let Err(e) = fs::create_dir_all(&args.outdir) {
        eprintln!("error: cannot create {}: {e}", args.outdir.display());
        return EXIT_INPUT_ERROR;
    }
    let mut manifest = String::from("file\ttag\tvertices\tedges\n");
    let ext = if args.json { "json" } else { "sg" };
    for (index, entry) in entries.iter().enumerate() {
        let slug: String = entry
            .tag
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        let filename = format!("{slug}_{index:04}.{ext}");
        let body = if args.json {
            serialize_graph_json(&entry.graph)
        } else {
            serialize_graph(&entry.graph)
        };
        if let Err(e) = fs::write(args.outdir.join(&filename), body) {
            eprintln!("error: cannot write {filename}: {e}");
            return EXIT_INPUT_ERROR;
        }
        manifest.push_str(&format!(
            "{filename}\t{}\t{}\t{}\n",
            entry.tag,
            entry.graph.n(),
            entry.graph.m()
        ));
    }
    if let Err(e) = fs::write(args.outdir.join("manifest.tsv"), manifest) {
        eprintln!("error: cannot write manifest: {e}");
        return EXIT_INPUT_ERROR;
    }
    println!("wrote {} members to {}", entries.len(), args.outdir.display());
    EXIT_OK
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let budget = args
        .budget
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_CODE_BUDGET);
    let workers = if args.workers == 0 {
        std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
    } else {
        args.workers
    };
    let cfg = SuiteConfig { workers, budget, seed: args.seed };
    let bounds: Vec<usize> = args
        .bounds
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>())
        .collect::<Result<_, _>>()
        .unwrap_or_default();

    let report = if args.suite.eq_ignore_ascii_case("catalog") {
        let caps = match bounds.as_slice() {
            [] => GeneratorCaps { max_cycle_half_length: 6, max_tail: 4 },
            [c] => GeneratorCaps { max_cycle_half_length: *c, max_tail: 4 },
            [c, t, ..] => GeneratorCaps { max_cycle_half_length: *c, max_tail: *t },
        };
        verify_catalog(&caps)
    } else {
        let Some(suite) = Suite::parse(&args.suite) else {
            eprintln!("error: unknown suite `{}`", args.suite);
            return EXIT_INPUT_ERROR;
        };
        run_suite(suite, &bounds, &cfg)
    };
    match report {
        Ok(report) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{report}");
            }
            if report.is_ok() {
                EXIT_OK
            } else {
                EXIT_NOT_CHORDAL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn cmd_export_dot(args: &ExportDotArgs) -> i32 {
    match load_graph(&args.path) {
        Ok(g) => {
            print!("{}", to_dot(&g));
            EXIT_OK
        }
        Err(code) => code,
    }
}
