//! Command-line surface: every subcommand is pure input to output, with
//! deterministic text formats and an optional `--json` machine-readable
//! mode carrying a schema version field.
//!
//! Exit codes: 0 on success, 1 on domain errors (one-line diagnostic on
//! stderr), 2 on malformed input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::chirality::{self, ChiralityError, DEFAULT_MAX_ORDER};
use crate::genwords::{canonical_form, canonical_form_projective, word_class, GenWord};
use crate::gl2::{classify_gl, classify_pgl, Gl2Error, Group, Mat2, Order};
use crate::hypermap::{map_from_json, map_to_json, AnyMap, MapError, OMap, UMap};
use crate::perm::Perm;
use crate::regular::{self, FinGroup, GenPair, RegularError};

const SCHEMA: &str = "hyperops/1";

pub enum CliError {
    /// Well-formed input outside the domain (exit 1).
    Domain(String),
    /// Malformed input (exit 2).
    Input(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Input(m) => m,
        }
    }
}

impl From<Gl2Error> for CliError {
    fn from(e: Gl2Error) -> Self {
        match e {
            Gl2Error::Parse(_) => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<RegularError> for CliError {
    fn from(e: RegularError) -> Self {
        match e {
            RegularError::BadGroupSpec(_) | RegularError::Perm(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ChiralityError> for CliError {
    fn from(e: ChiralityError) -> Self {
        match e {
            ChiralityError::Regular(inner) => inner.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hyperops",
    version,
    about = "Hypermap operations: matrix classification, canonical words, \
             operation application, regular census and chirality groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy class and order of a matrix in GL2(Z) or PGL2(Z)
    Classify {
        /// Matrix as "a,b;c,d"
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Classify the image in PGL2(Z)
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        json: bool,
    },
    /// Canonical word of a matrix
    Canon {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply an operation word to a hypermap
    #[command(name = "op-apply")]
    OpApply {
        /// Operation word; uppercase tokens for oriented maps, lowercase
        /// for unoriented
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        input: MapInput,
        /// Write the transformed map here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Type, constituent counts, Euler characteristic and genus
    #[command(name = "map-info")]
    MapInfo {
        #[command(flatten)]
        input: MapInput,
        #[arg(long)]
        json: bool,
    },
    /// Test two hypermaps for isomorphism
    Iso {
        /// First map: file path or inline JSON
        #[arg(long)]
        left: String,
        /// Second map: file path or inline JSON
        #[arg(long)]
        right: String,
        /// Print a witness bijection when isomorphic
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate regular hypermap classes over a group
    Enumerate {
        /// Group: A5, S4, C7, D6, ... or JSON {"degree":..,"generators":[..]}
        #[arg(long)]
        group: String,
        /// Also partition the classes into orbits under these operations
        #[arg(long, allow_hyphen_values = true)]
        orbits: Option<String>,
        /// Largest group order accepted for pair enumeration
        #[arg(long, default_value_t = 120)]
        bound: u64,
        /// Worker threads; the output is identical for any count
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Orbits of operation words on the regular hypermap classes
    Orbits {
        #[arg(long)]
        group: String,
        /// Whitespace-separated operation words, e.g. "X Y T"
        #[arg(long, allow_hyphen_values = true)]
        words: String,
        #[arg(long, default_value_t = 120)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generalized chirality report for a regular hypermap
    Chirality {
        #[arg(long)]
        group: String,
        /// Generating pair "g2-cycles;g0-cycles", e.g. "(2,5,4);(1,2,3,4,5)"
        #[arg(long)]
        pair: String,
        /// Periodic operation word
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct MapInput {
    /// Hypermap file path, or inline JSON starting with '{'
    #[arg(long)]
    map: Option<String>,
    /// Oriented map given inline: dart count with --rho0/--rho2 cycles
    #[arg(long, requires = "rho0", requires = "rho2", conflicts_with = "map")]
    darts: Option<usize>,
    #[arg(long)]
    rho0: Option<String>,
    #[arg(long)]
    rho2: Option<String>,
    /// Unoriented map given inline: flag count with --r0/--r1/--r2 cycles
    #[arg(long, requires = "r0", requires = "r1", requires = "r2", conflicts_with = "map")]
    flags: Option<usize>,
    #[arg(long)]
    r0: Option<String>,
    #[arg(long)]
    r1: Option<String>,
    #[arg(long)]
    r2: Option<String>,
}

impl MapInput {
    fn load(&self) -> Result<AnyMap, CliError> {
        if let Some(spec) = &self.map {
            let text = if spec.trim_start().starts_with('{') {
                spec.clone()
            } else {
                std::fs::read_to_string(spec)
                    .map_err(|e| CliError::Input(format!("cannot read {spec}: {e}")))?
            };
            return Ok(map_from_json(&text)?);
        }
        if let Some(n) = self.darts {
            let rho0 = Perm::parse_cycles(self.rho0.as_deref().unwrap_or_default(), n)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let rho2 = Perm::parse_cycles(self.rho2.as_deref().unwrap_or_default(), n)
                .map_err(|e| CliError::Input(e.to_string()))?;
            return Ok(AnyMap::Oriented(OMap::new(rho0, rho2)?));
        }
        if let Some(n) = self.flags {
            let parse = |s: &Option<String>| {
                Perm::parse_cycles(s.as_deref().unwrap_or_default(), n)
                    .map_err(|e| CliError::Input(e.to_string()))
            };
            return Ok(AnyMap::Unoriented(UMap::new(
                parse(&self.r0)?,
                parse(&self.r1)?,
                parse(&self.r2)?,
            )?));
        }
        Err(CliError::Input(
            "no map given: use --map, or --darts with --rho0/--rho2, or --flags with --r0/--r1/--r2"
                .to_string(),
        ))
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn max_order_from_env() -> Result<u64, CliError> {
    match std::env::var("HYPEROP_MAX_ORDER") {
        Ok(value) => value
            .parse()
            .map_err(|_| CliError::Input(format!("HYPEROP_MAX_ORDER is not a number: {value:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn parse_ops_list(words: &str) -> Result<Vec<GenWord>, CliError> {
    words
        .split_whitespace()
        .map(|tok| {
            GenWord::parse(tok, false).map_err(|e| CliError::Input(e.to_string()))
        })
        .collect()
}

fn order_json(order: Order) -> serde_json::Value {
    match order {
        Order::Finite(n) => json!(n),
        Order::Infinite => json!("infinite"),
    }
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Classify { matrix, projective, json } => {
            let m = Mat2::parse(&matrix)?;
            let label = if projective { classify_pgl(&m)? } else { classify_gl(&m)? };
            if json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "schema": SCHEMA,
                        "group": if projective { "PGL2(Z)" } else { "GL2(Z)" },
                        "class": label.to_string(),
                        "order": order_json(label.order),
                    })
                ))
            } else {
                Ok(format!("class={label} order={}\n", label.order))
            }
        }
        Command::Canon { matrix, projective, json } => {
            let m = Mat2::parse(&matrix)?;
            let word =
                if projective { canonical_form_projective(&m)? } else { canonical_form(&m)? };
            if json {
                let group = if projective { Group::Pgl } else { Group::Gl };
                let label = word_class(&word, group);
                Ok(format!(
                    "{}\n",
                    json!({
                        "schema": SCHEMA,
                        "word": word.to_string(),
                        "class": label.to_string(),
                        "order": order_json(label.order),
                    })
                ))
            } else {
                Ok(format!("{word}\n"))
            }
        }
        Command::OpApply { word, input, out, json } => {
            let map = input.load()?;
            let (result, word_text) = apply_word(&map, &word)?;
            let result_json = map_to_json(&result);
            if let Some(path) = &out {
                std::fs::write(path, format!("{result_json}\n"))
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            if json {
                let mut value = json!({
                    "schema": SCHEMA,
                    "word": word_text,
                    "map": serde_json::from_str::<serde_json::Value>(&result_json).unwrap(),
                });
                value["info"] = info_json(&result);
                return Ok(format!("{value}\n"));
            }
            let mut text = String::new();
            if out.is_none() {
                let _ = writeln!(text, "{result_json}");
            }
            text.push_str(&info_text(&result));
            Ok(text)
        }
        Command::MapInfo { input, json } => {
            let map = input.load()?;
            if json {
                Ok(format!(
                    "{}\n",
                    json!({ "schema": SCHEMA, "info": info_json(&map) })
                ))
            } else {
                Ok(info_text(&map))
            }
        }
        Command::Iso { left, right, witness, json } => {
            let load = |spec: &str| {
                MapInput {
                    map: Some(spec.to_string()),
                    darts: None,
                    rho0: None,
                    rho2: None,
                    flags: None,
                    r0: None,
                    r1: None,
                    r2: None,
                }
                .load()
            };
            let (a, b) = (load(&left)?, load(&right)?);
            let found = match (&a, &b) {
                (AnyMap::Oriented(x), AnyMap::Oriented(y)) => x.isomorphism(y),
                (AnyMap::Unoriented(x), AnyMap::Unoriented(y)) => x.isomorphism(y),
                _ => {
                    return Err(CliError::Domain(
                        "cannot compare an oriented with an unoriented hypermap".to_string(),
                    ))
                }
            };
            if json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "schema": SCHEMA,
                        "isomorphic": found.is_some(),
                        "witness": found.filter(|_| witness).map(|w| w.to_string()),
                    })
                ))
            } else {
                let mut text = format!("isomorphic={}\n", found.is_some());
                if witness {
                    if let Some(w) = found {
                        let _ = writeln!(text, "witness={w}");
                    }
                }
                Ok(text)
            }
        }
        Command::Enumerate { group, orbits, bound, threads, json } => {
            let g = FinGroup::parse_spec(&group)?;
            let classes = regular::enumerate_classes(&g, bound, threads.max(1))?;
            let blocks = match &orbits {
                Some(words) => {
                    Some(regular::operation_orbits(&g, &classes, &parse_ops_list(words)?)?)
                }
                None => None,
            };
            if json {
                Ok(format!("{}\n", census_json(&group, &classes, blocks.as_deref())))
            } else {
                let mut text = census_tsv(&classes);
                if let Some(blocks) = blocks {
                    text.push_str(&orbits_tsv(&blocks));
                }
                Ok(text)
            }
        }
        Command::Orbits { group, words, bound, threads, json } => {
            let g = FinGroup::parse_spec(&group)?;
            let classes = regular::enumerate_classes(&g, bound, threads.max(1))?;
            let blocks = regular::operation_orbits(&g, &classes, &parse_ops_list(&words)?)?;
            if json {
                Ok(format!("{}\n", census_json(&group, &classes, Some(&blocks))))
            } else {
                Ok(orbits_tsv(&blocks))
            }
        }
        Command::Chirality { group, pair, word, json } => {
            let g = FinGroup::parse_spec(&group)?;
            let p = GenPair::parse(&pair, g.degree())
                .map_err(|e| CliError::Input(e.to_string()))?;
            let w = GenWord::parse(&word, false).map_err(|e| CliError::Input(e.to_string()))?;
            let max_order = max_order_from_env()?;
            let report = chirality::chirality(&g, &p, &w, max_order)?;
            if json {
                Ok(format!(
                    "{}\n",
                    json!({
                        "schema": SCHEMA,
                        "word": report.word,
                        "period": report.period,
                        "upper_order": report.upper_order,
                        "lower_order": report.lower_order,
                        "full_lower_order": report.full_lower_order,
                        "upper_is_normal": report.upper_is_normal,
                        "upper": {
                            "order": report.upper.order,
                            "abelian": report.upper.is_abelian,
                            "abelian_invariants": report.upper.abelian_invariants,
                            "simple": report.upper.simple,
                        },
                    })
                ))
            } else {
                let mut text = String::new();
                let _ = writeln!(text, "word={}", report.word);
                let _ = writeln!(text, "period={}", report.period);
                let _ = writeln!(text, "upper_order={}", report.upper_order);
                let _ = writeln!(text, "lower_order={}", report.lower_order);
                let _ = writeln!(text, "full_lower_order={}", report.full_lower_order);
                let _ = writeln!(text, "upper_is_normal={}", report.upper_is_normal);
                let _ = writeln!(text, "upper_abelian={}", report.upper.is_abelian);
                if let Some(simple) = report.upper.simple {
                    let _ = writeln!(text, "upper_simple={simple}");
                }
                if let Some(divs) = &report.upper.abelian_invariants {
                    let list: Vec<String> = divs.iter().map(u64::to_string).collect();
                    let _ = writeln!(text, "upper_abelian_invariants={}", list.join(","));
                }
                Ok(text)
            }
        }
    }
}

/// Parses the word in the context implied by the map kind and applies it.
/// A word written in the other context's case is a domain error.
fn apply_word(map: &AnyMap, word: &str) -> Result<(AnyMap, String), CliError> {
    let projective = matches!(map, AnyMap::Unoriented(_));
    let parsed = match GenWord::parse(word, projective) {
        Ok(w) => w,
        Err(e) => {
            return if GenWord::parse(word, !projective).is_ok() {
                let (kind, case) = if projective {
                    ("unoriented", "lowercase")
                } else {
                    ("oriented", "uppercase")
                };
                Err(CliError::Domain(format!(
                    "word {word:?} does not match the {kind} map: use {case} tokens"
                )))
            } else {
                Err(CliError::Input(e.to_string()))
            };
        }
    };
    let result = match map {
        AnyMap::Oriented(m) => AnyMap::Oriented(m.apply_operation(&parsed)),
        AnyMap::Unoriented(u) => AnyMap::Unoriented(u.apply_operation(&parsed)),
    };
    Ok((result, parsed.to_string()))
}

fn info_text(map: &AnyMap) -> String {
    let mut text = String::new();
    match map {
        AnyMap::Oriented(m) => {
            let info = m.info();
            let (a, b, c) = info.type_triple;
            let _ = writeln!(text, "kind=oriented");
            let _ = writeln!(text, "darts={}", m.darts());
            let _ = writeln!(text, "type=({a},{b},{c})");
            let _ = writeln!(text, "hypervertices={}", info.hypervertices);
            let _ = writeln!(text, "hyperedges={}", info.hyperedges);
            let _ = writeln!(text, "hyperfaces={}", info.hyperfaces);
            let _ = writeln!(text, "euler={}", info.euler);
            let _ = writeln!(text, "genus={}", info.genus);
        }
        AnyMap::Unoriented(u) => {
            let info = u.info();
            let (a, b, c) = info.type_triple;
            let _ = writeln!(text, "kind=unoriented");
            let _ = writeln!(text, "flags={}", u.flags());
            let _ = writeln!(text, "type=({a},{b},{c})");
            let _ = writeln!(text, "hypervertices={}", info.hypervertices);
            let _ = writeln!(text, "hyperedges={}", info.hyperedges);
            let _ = writeln!(text, "hyperfaces={}", info.hyperfaces);
            let _ = writeln!(text, "euler={}", info.euler);
            let _ = writeln!(text, "orientable={}", info.orientable);
            let _ = writeln!(text, "genus={}", info.genus);
        }
    }
    text
}

fn info_json(map: &AnyMap) -> serde_json::Value {
    match map {
        AnyMap::Oriented(m) => {
            let info = m.info();
            json!({
                "kind": "oriented",
                "darts": m.darts(),
                "type": [info.type_triple.0, info.type_triple.1, info.type_triple.2],
                "hypervertices": info.hypervertices,
                "hyperedges": info.hyperedges,
                "hyperfaces": info.hyperfaces,
                "euler": info.euler,
                "genus": info.genus,
            })
        }
        AnyMap::Unoriented(u) => {
            let info = u.info();
            json!({
                "kind": "unoriented",
                "flags": u.flags(),
                "type": [info.type_triple.0, info.type_triple.1, info.type_triple.2],
                "hypervertices": info.hypervertices,
                "hyperedges": info.hyperedges,
                "hyperfaces": info.hyperfaces,
                "euler": info.euler,
                "orientable": info.orientable,
                "genus": info.genus,
            })
        }
    }
}

fn census_tsv(classes: &[regular::RegularClass]) -> String {
    let mut text = String::new();
    for (i, class) in classes.iter().enumerate() {
        let (a, b, c) = class.type_triple;
        let _ = writeln!(
            text,
            "{}\t({a},{b},{c})\t{}\t{}\t{}",
            i + 1,
            class.genus,
            class.class_size,
            class.representative
        );
    }
    text
}

fn orbits_tsv(blocks: &[Vec<usize>]) -> String {
    let mut text = String::new();
    for (i, block) in blocks.iter().enumerate() {
        let members: Vec<String> = block.iter().map(|c| (c + 1).to_string()).collect();
        let _ = writeln!(text, "orbit\t{}\t{}\t{}", i + 1, block.len(), members.join(","));
    }
    text
}

fn census_json(
    group: &str,
    classes: &[regular::RegularClass],
    blocks: Option<&[Vec<usize>]>,
) -> serde_json::Value {
    let class_values: Vec<serde_json::Value> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "id": i + 1,
                "type": [c.type_triple.0, c.type_triple.1, c.type_triple.2],
                "genus": c.genus,
                "size": c.class_size,
                "g2": c.representative.g2.to_string(),
                "g0": c.representative.g0.to_string(),
            })
        })
        .collect();
    let mut value = json!({
        "schema": SCHEMA,
        "group": group,
        "classes": class_values,
    });
    if let Some(blocks) = blocks {
        let orbit_values: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| b.iter().map(|c| c + 1).collect())
            .collect();
        value["orbits"] = json!(orbit_values);
    }
    value
}
