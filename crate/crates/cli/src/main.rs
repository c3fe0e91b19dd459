use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ncgb_core::catalog::{check_normal_element, check_regular_quotient, verify_family};
use ncgb_core::dsl::{parse_polynomial, parse_presentation};
use ncgb_core::groebner::complete_to_degree;
use ncgb_core::monomial::{enumerate_chains, hilbert_series_monomial, invariants_estimate, lyndon_series};
use ncgb_core::search::{load_eliminations, search_obstructions, ResolutionType, SearchConfig, DEFAULT_ELIMINATIONS};
use ncgb_core::series::TruncatedSeries;
use ncgb_core::Presentation;

#[derive(Parser)]
#[command(name = "ncgb", version, about = "Truncated noncommutative Gröbner bases and AS-regular family checks")]
struct Cli {
    /// Print compact single-line JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Presentation document, `-` for stdin.
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Args)]
struct Cap {
    /// Total degree cap.
    #[arg(long, env = "NCGB_CAP", default_value_t = 12)]
    cap: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis up to a total degree.
    Gb {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "NCGB_CAP", default_value_t = 12)]
        max_total_degree: u32,
    },
    /// Hilbert series of the algebra.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: Cap,
        /// Total degree series instead of the multigraded one.
        #[arg(long)]
        collapse: bool,
    },
    /// Anick chains of the obstruction set.
    Chains {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: Cap,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Normal Lyndon words and the product series.
    Lyndon {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: Cap,
    },
    /// Normality and regularity of a homogeneous element.
    Normal {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        cap: Cap,
        /// Element in the document's syntax.
        #[arg(long)]
        element: String,
    },
    /// Obstruction search for a resolution type.
    Search {
        #[arg(long = "type", value_parser = parse_type)]
        kind: ResolutionType,
        #[command(flatten)]
        cap: Cap,
        /// Recorded eliminations (JSON); the bundled list by default.
        #[arg(long)]
        eliminations: Option<PathBuf>,
        /// Keep both shapes of every switching orbit.
        #[arg(long)]
        all_shapes: bool,
        #[arg(long, default_value_t = 5_000)]
        max_nodes: usize,
    },
    /// Run every catalog check for a family at one parameter point.
    VerifyFamily {
        name: String,
        /// Parameter binding `name=value`, repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        #[command(flatten)]
        cap: Cap,
    },
}

fn parse_type(s: &str) -> Result<ResolutionType, String> {
    ResolutionType::from_code(s).ok_or_else(|| format!("unknown type `{s}`, expected 355, 347, 4445, 44455 or 444"))
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn read_presentation(input: &Input) -> Result<Presentation> {
    let text = if input.input.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input).with_context(|| format!("reading {}", input.input.display()))?
    };
    Ok(parse_presentation(&text)?)
}

fn series_json(h: &TruncatedSeries, collapse: bool) -> Value {
    if collapse {
        json!(h.collapse().to_vec())
    } else {
        let m: BTreeMap<String, i64> = h.terms().filter(|(_, c)| *c != 0).map(|(d, c)| (d.to_string(), c)).collect();
        json!(m)
    }
}

/// Output and whether the checks it reports passed.
fn run(cmd: Command) -> Result<(Value, bool)> {
    Ok(match cmd {
        Command::Gb { input, max_total_degree } => {
            let p = read_presentation(&input)?;
            let st = complete_to_degree(&p.alphabet, &p.relations, max_total_degree);
            let basis: Vec<Value> = st
                .basis
                .iter()
                .map(|e| {
                    let terms: Vec<Value> = e
                        .poly
                        .terms()
                        .rev()
                        .map(|(w, c)| json!({ "word": p.alphabet.render(w), "coeff": c.to_string() }))
                        .collect();
                    json!({
                        "lead_word": p.alphabet.render(e.poly.lw()),
                        "terms": terms,
                        "multidegree": e.degree.to_string(),
                        "minimal": e.minimal,
                    })
                })
                .collect();
            (json!(basis), true)
        }
        Command::Hilbert { input, cap, collapse } => {
            let p = read_presentation(&input)?;
            let st = complete_to_degree(&p.alphabet, &p.relations, cap.cap);
            (series_json(&hilbert_series_monomial(&p.alphabet, &st.obstructions(), cap.cap), collapse), true)
        }
        Command::Chains { input, cap, max_n } => {
            let p = read_presentation(&input)?;
            let v = complete_to_degree(&p.alphabet, &p.relations, cap.cap).obstructions();
            let levels: Vec<Value> = enumerate_chains(&p.alphabet, &v, max_n, cap.cap)
                .iter()
                .map(|s| {
                    let degrees: BTreeMap<String, usize> =
                        s.degree_counts(&p.alphabet).into_iter().map(|(d, n)| (d.to_string(), n)).collect();
                    json!({ "level": s.level, "count": s.chains.len(), "degrees": degrees })
                })
                .collect();
            let inv = invariants_estimate(&p.alphabet, &v, cap.cap);
            (json!({ "levels": levels, "invariants": inv }), true)
        }
        Command::Lyndon { input, cap } => {
            let p = read_presentation(&input)?;
            let st = complete_to_degree(&p.alphabet, &p.relations, cap.cap);
            let v = st.obstructions();
            let h = hilbert_series_monomial(&p.alphabet, &v, cap.cap);
            let (l, prod) = lyndon_series(&p.alphabet, &v, cap.cap)?;
            let matches = prod == h;
            (json!({ "basis": l, "product_series": series_json(&prod, false), "product_matches": matches }), matches)
        }
        Command::Normal { input, cap, element } => {
            let p = read_presentation(&input)?;
            let z = parse_polynomial(&element, &p)?;
            let n = check_normal_element(&z, &p, cap.cap)?;
            let r = check_regular_quotient(&z, &p, cap.cap)?;
            let ok = n.normal && r.regular;
            (json!({ "normality": n, "regularity": r }), ok)
        }
        Command::Search { kind, cap, eliminations, all_shapes, max_nodes } => {
            let text = match &eliminations {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                None => DEFAULT_ELIMINATIONS.to_string(),
            };
            let config = SearchConfig {
                cap: cap.cap,
                normalize: !all_shapes,
                eliminations: load_eliminations(&text)?,
                max_nodes,
            };
            (serde_json::to_value(search_obstructions(kind, &config)?)?, true)
        }
        Command::VerifyFamily { name, params, cap } => {
            let params: BTreeMap<String, String> = params.into_iter().collect();
            let r = verify_family(&name, &params, cap.cap)?;
            let ok = r.passed;
            (serde_json::to_value(r)?, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((value, ok)) => {
            let text = if cli.json { serde_json::to_string(&value) } else { serde_json::to_string_pretty(&value) };
            let _ = writeln!(std::io::stdout(), "{}", text.expect("JSON values serialize"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
