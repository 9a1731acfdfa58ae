//! Command-line front end: orbit listings, Richardson data, counts, Weyl
//! stabilizers, the label atlas, identity verification, and raw series.
//!
//! Exit codes: 0 success, 1 verification failure or internal assertion,
//! 2 usage error. All numeric output is exact; rationals print as `a/b`.

use charlab_cli::suites::{run_suite, SUITE_NAMES};
use charlab_cli::{CheckResult, RunConfig};
use charlab_core::atlas::{enumerate_char_labels, verify_counts};
use charlab_core::component::component_group;
use charlab_core::diagram::{enumerate_syd, DiagramRecord, SymmetricPair};
use charlab_core::hecke::{full_support_count, hecke_d, hecke_e, CountMode};
use charlab_core::richardson::{is_richardson, nilpotent_support_count, omega_data};
use charlab_core::series::identities::verify_identity;
use charlab_core::series::product::*;
use charlab_core::series::rat_string;
use charlab_core::support::{fundamental_group_descriptor, support_set};
use charlab_core::weyl::{restricted_root_datum, stabilizer, ICharacter};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(name = "charlab", version, about = "Exact combinatorics of nilpotent orbits and character sheaf labels for classical symmetric pairs", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the nilpotent orbit labels of a pair with their component groups.
    Orbits {
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Richardson data per orbit, or the nilpotent-support count.
    Richardson {
        #[arg(long)]
        pair: String,
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
    },
    /// Full-support or Hecke simple-module counts for a pair.
    Counts {
        #[arg(long)]
        pair: String,
        #[arg(long, value_parser = ["fullsupport", "hecke"])]
        what: String,
    },
    /// Stabilizer of the m-th standard character in the little Weyl group.
    Weyl {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        chi: u32,
    },
    /// Character sheaf labels and counting verification.
    Atlas {
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 6)]
        max_rank: u32,
    },
    /// Run a verification suite or a single named identity.
    Verify {
        #[arg(long, conflicts_with = "identity")]
        suite: Option<String>,
        #[arg(long)]
        identity: Option<String>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Expand a named product to a truncated series (CSV of coefficients).
    Series {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

fn parse_pair(s: &str) -> Result<SymmetricPair, i32> {
    s.parse::<SymmetricPair>().map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn run() -> Result<(), i32> {
    let cli = Cli::parse();
    let cfg = RunConfig::from_env();
    match cli.command {
        Command::Orbits { pair, format } => {
            let pair = parse_pair(&pair)?;
            let labels = enumerate_syd(pair);
            match format {
                Format::Json => {
                    let rows: Vec<_> = labels
                        .iter()
                        .map(|o| {
                            let record = DiagramRecord::from(o);
                            let group = component_group(pair, o).expect("enumerated orbit");
                            json!({
                                "orbit": o.to_string(),
                                "diagram": record,
                                "componentGroup": group.to_string(),
                                "characters": group.character_count(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap());
                }
                Format::Csv => {
                    println!("orbit,componentGroup,characters");
                    for o in &labels {
                        let group = component_group(pair, o).expect("enumerated orbit");
                        println!("{o},{group},{}", group.character_count());
                    }
                }
                Format::Text => {
                    for o in &labels {
                        let group = component_group(pair, o).expect("enumerated orbit");
                        println!("{o}  |  A = {group}");
                    }
                    println!("total: {} orbit labels", labels.len());
                }
            }
            Ok(())
        }
        Command::Richardson { pair, list, count } => {
            let pair = parse_pair(&pair)?;
            if count || !list {
                let c = nilpotent_support_count(pair);
                println!("{}", rat_string(&c));
            }
            if list {
                let rows: Vec<_> = enumerate_syd(pair)
                    .iter()
                    .map(|o| {
                        let richardson = is_richardson(pair, o).expect("enumerated orbit");
                        let omega = omega_data(o).ok();
                        json!({
                            "orbit": o.to_string(),
                            "richardson": richardson,
                            "omega": omega.as_ref().map(|d| d.omega.clone()),
                            "l": omega.as_ref().map(|d| d.l),
                            "piCount": omega.as_ref().map(|d| d.pi_cardinality),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            }
            Ok(())
        }
        Command::Counts { pair, what } => {
            let pair = parse_pair(&pair)?;
            match what.as_str() {
                "fullsupport" => {
                    println!("pair,mode,count");
                    println!(
                        "{pair},formula,{}",
                        rat_string(&full_support_count(pair, CountMode::Formula))
                    );
                    println!(
                        "{pair},true,{}",
                        rat_string(&full_support_count(pair, CountMode::True))
                    );
                }
                "hecke" => {
                    let rank = pair.little_weyl_rank();
                    println!("k,d,e");
                    for k in 0..=rank {
                        println!("{k},{},{}", hecke_d(k), hecke_e(k));
                    }
                }
                _ => unreachable!("clap validates"),
            }
            Ok(())
        }
        Command::Weyl { pair, chi } => {
            let pair = parse_pair(&pair)?;
            let datum = restricted_root_datum(pair);
            if chi > datum.i_rank {
                eprintln!("error: chi index {chi} exceeds the rank {} of I", datum.i_rank);
                return Err(2);
            }
            let character = ICharacter::standard(datum.i_rank, chi);
            match stabilizer(pair, &character, cfg.weyl_rank_bound) {
                Ok(data) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "pair": pair.to_string(),
                            "chi": chi,
                            "stabilizerOrder": data.stabilizer_order,
                            "w0Order": data.w0_order,
                            "quotient": data.quotient,
                        }))
                        .unwrap()
                    );
                    Ok(())
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Err(1)
                }
            }
        }
        Command::Atlas { pair, list, verify, max_rank } => {
            if verify {
                let mut pairs = Vec::new();
                for total in 0..=max_rank {
                    for p in 0..=total {
                        let q = total - p;
                        pairs.push(SymmetricPair::AiiiSl { p, q });
                        pairs.push(SymmetricPair::AiiiPgl { p, q });
                        pairs.push(SymmetricPair::Bdi { p, q });
                        pairs.push(SymmetricPair::Glgl { p, q });
                        if 2 * total <= max_rank {
                            pairs.push(SymmetricPair::Cii { p, q });
                        }
                    }
                }
                for n in 0..=max_rank / 2 {
                    pairs.push(SymmetricPair::Ci { n });
                    pairs.push(SymmetricPair::Diii { n });
                }
                println!("pair,orbital,charLabels,formulaValue,ok");
                let mut failed = false;
                for p in pairs {
                    let row = verify_counts(p);
                    println!(
                        "{},{},{},{},{}",
                        row.pair, row.orbital, row.char_labels, row.formula, row.ok
                    );
                    failed |= !row.ok;
                }
                return if failed { Err(1) } else { Ok(()) };
            }
            let Some(pair) = pair else {
                eprintln!("error: atlas needs --pair or --verify");
                return Err(2);
            };
            let pair = parse_pair(&pair)?;
            if list {
                let labels = enumerate_char_labels(pair);
                let rows: Vec<_> = labels
                    .iter()
                    .map(|l| {
                        json!({
                            "support": {
                                "pair": l.support.pair.to_string(),
                                "shape": l.support.shape.to_string(),
                                "mu": l.support.mu.to_string(),
                                "decoration": match l.support.decoration {
                                    charlab_core::diagram::Decoration::None => None,
                                    d => Some(d.to_string()),
                                },
                            },
                            "local": l.local.to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                // support table with descriptors
                let rows: Vec<_> = support_set(pair)
                    .iter()
                    .map(|s| {
                        let descriptor = fundamental_group_descriptor(s).expect("valid support");
                        json!({
                            "shape": s.shape.to_string(),
                            "mu": s.mu.to_string(),
                            "decoration": match s.decoration {
                                charlab_core::diagram::Decoration::None => None,
                                d => Some(d.to_string()),
                            },
                            "descriptor": {
                                "braid": descriptor.braid.iter().map(|b| json!({
                                    "family": format!("{:?}", b.family),
                                    "rank": b.rank,
                                })).collect::<Vec<_>>(),
                                "abelian": descriptor.abelian.clone(),
                            },
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            }
            Ok(())
        }
        Command::Verify { suite, identity, order } => {
            if let Some(name) = identity {
                let report = verify_identity(&name, order.unwrap_or(cfg.order1)).map_err(|e| {
                    eprintln!("error: {e}");
                    2
                })?;
                println!("{}", serde_json::to_string(&report).unwrap());
                return if report.holds { Ok(()) } else { Err(1) };
            }
            let name = suite.unwrap_or_else(|| "all".into());
            let mut cfg = cfg;
            if let Some(order) = order {
                cfg.order1 = order;
            }
            let Some(results) = run_suite(&name, &cfg) else {
                eprintln!("error: unknown suite `{name}`; available: {SUITE_NAMES:?}");
                return Err(2);
            };
            let mut failed = false;
            for r in &results {
                println!("{}", serde_json::to_string(r).unwrap());
                failed |= !r.ok;
            }
            summary(&results);
            if failed {
                Err(1)
            } else {
                Ok(())
            }
        }
        Command::Series { name, order } => {
            let spec = match name.as_str() {
                "hecke-d" => hecke_d_product(),
                "hecke-e" => hecke_e_product(),
                "partitions" => partition_product(),
                "richardson-c" => bc_product(),
                "cardinality-c" => cardinality_type_c_product(),
                "biorbital-b" => biorbital_b_product(),
                "biorbital-d" => biorbital_d_product(),
                "fullsupport-b" => fullsupp_b_product(),
                "fullsupport-d" => fullsupp_d_product(),
                "orbital-dlinear" => diii_orbital_product(),
                other => {
                    eprintln!(
                        "error: unknown series `{other}`; available: hecke-d, hecke-e, \
                         partitions, richardson-c, cardinality-c, biorbital-b, biorbital-d, \
                         fullsupport-b, fullsupport-d, orbital-dlinear"
                    );
                    return Err(2);
                }
            };
            let series = spec.expand1(order).map_err(|e| {
                eprintln!("error: {e}");
                1
            })?;
            println!("k,coefficient");
            for k in 0..=order {
                println!("{k},{}", rat_string(series.coefficient(k).unwrap()));
            }
            Ok(())
        }
    }
}

fn summary(results: &[CheckResult]) {
    let passed = results.iter().filter(|r| r.ok).count();
    println!(
        "{}",
        serde_json::to_string(&json!({
            "summary": { "passed": passed, "failed": results.len() - passed }
        }))
        .unwrap()
    );
}

fn main() {
    std::process::exit(match run() {
        Ok(()) => 0,
        Err(code) => code,
    });
}
