//! Command-line interface: build and inspect the catalog groups, verify the
//! embedding items and tables, run the searches, evaluate words, render
//! diagrams, and export JSON.

use anyhow::{anyhow, bail, Context, Result};
use bgw_core::catalog::Catalog;
use bgw_core::diagram::{diagram_from_wreath, render, DiagramStyle};
use bgw_core::embed::{block_embed, kk_embed, Embedding};
use bgw_core::group::{BlockSystem, GroupElem};
use bgw_core::modmat::{mat_act_perm, VectorLabeling};
use bgw_core::perm::Perm;
use bgw_core::verify;
use clap::{Parser, Subcommand};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bgw",
    about = "Exact wreath-product representations of the finite subgroups of SU(2)",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of human tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog groups.
    ListGroups,
    /// Group details: order, generators, element orders, center.
    Group {
        #[command(subcommand)]
        sub: GroupCmd,
    },
    /// Build a wreath embedding and print it as JSON.
    Embed {
        group: String,
        /// Comma-separated generator words for the subgroup, or a preset key
        /// via --ordering.
        #[arg(long)]
        subgroup: Option<String>,
        /// Catalog preset for subgroup and coset orderings (see list below).
        #[arg(long)]
        ordering: Option<String>,
        /// "auto" derives the block embedding for the eight-point actions.
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Run verifications; exit 0 only when nothing ends in discrepancy.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Run one of the exhaustive searches.
    Search {
        /// no-extension | icosa-twists | item8
        which: String,
    },
    /// Evaluate a word in a group and print its canonical form and order.
    Eval { group: String, expr: String },
    /// Render the image of a word under an embedding.
    Render {
        group: String,
        expr: String,
        /// Embedding key: item1, item2, ..., item11, or a preset name.
        #[arg(long)]
        rep: String,
        /// svg | ascii
        #[arg(long, default_value = "ascii")]
        format: String,
        /// beads | twists | bundles
        #[arg(long, default_value = "beads")]
        style: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<String>,
    },
    /// Export a group as JSON.
    Export {
        group: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        json_path: Option<String>,
        /// Include the full multiplication table.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info { name: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// All eleven items, or one with --item.
    Theorem1 {
        #[arg(long)]
        item: Option<usize>,
    },
    /// Every transcribed table.
    Tables,
    /// Items, tables, searches, tower, and power checks.
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cat = Catalog::get();
    match cli.command {
        Command::ListGroups => {
            for name in cat.group_names() {
                let g = cat.group_by_name(&name).unwrap();
                println!("{name:20} order {}", g.order());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Group { sub } => match sub {
            GroupCmd::Info { name } => {
                let g = cat.group_by_name(&name).map_err(|e| anyhow!("{e}"))?;
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&g.to_json(false))?);
                } else {
                    println!("{name}: order {}", g.order());
                    println!(
                        "generators: {}",
                        g.generators
                            .iter()
                            .map(|&i| g.repr(i))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    let spectrum = g.order_spectrum();
                    println!("element orders: {spectrum:?}");
                    let center = g.center();
                    println!(
                        "center (order {}): {}",
                        center.len(),
                        center
                            .iter()
                            .map(|&i| g.repr(i))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Embed {
            group,
            subgroup,
            ordering,
            blocks,
        } => {
            let e = build_embedding(&group, subgroup.as_deref(), ordering.as_deref(), blocks.as_deref())?;
            let report = e.verify();
            let mut v = e.to_json();
            v["verified"] = serde_json::json!({
                "homomorphism": report.homomorphism,
                "injective": report.injective,
                "top": report.top_name,
                "top_order": report.top_order,
                "beads": report.bead_name,
                "bead_order": report.bead_order,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what } => {
            let reports = match what {
                VerifyCmd::Theorem1 { item: Some(k) } => {
                    vec![verify::verify_item(k).map_err(|e| anyhow!("{e}"))?]
                }
                VerifyCmd::Theorem1 { item: None } => {
                    (1..=11).map(|k| verify::verify_item(k).unwrap()).collect()
                }
                VerifyCmd::Tables => verify::verify_tables(),
                VerifyCmd::All => verify::run_all(),
            };
            let mut ok = true;
            if cli.json {
                let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                println!("{}", serde_json::to_string_pretty(&v)?);
            }
            for r in &reports {
                if !cli.json {
                    print!("{}", r.render_text());
                }
                ok &= r.passed();
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Search { which } => {
            let report = match which.as_str() {
                "no-extension" => verify::no_extension_search(),
                "icosa-twists" => verify::verify_item(11).unwrap(),
                "item8" => verify::verify_item(8).unwrap(),
                other => bail!("unknown search {other:?}"),
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json())?);
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Eval { group, expr } => {
            let g = cat.group_by_name(&group).map_err(|e| anyhow!("{e}"))?;
            let names = cat.names_for_group(&group).map_err(|e| anyhow!("{e}"))?;
            let idx = bgw_core::expr::eval_in_group(&expr, &g, &names)
                .map_err(|e| anyhow!("{e}"))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "group": group,
                        "expr": expr,
                        "element": g.repr(idx),
                        "order": g.element_order(idx),
                    })
                );
            } else {
                println!("{}", g.repr(idx));
                println!("order {}", g.element_order(idx));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            group,
            expr,
            rep,
            format,
            style,
            out,
        } => {
            let e = embedding_by_key(&group, &rep)?;
            let names = cat.names_for_group(&group).map_err(|e| anyhow!("{e}"))?;
            let idx = bgw_core::expr::eval_in_group(&expr, &e.domain, &names)
                .map_err(|e| anyhow!("{e}"))?;
            let st = DiagramStyle::parse(&style).map_err(|e| anyhow!("{e}"))?;
            let d = diagram_from_wreath(e.image(idx), st, &format!("{group}: {expr}"))
                .map_err(|e| anyhow!("{e}"))?;
            let text = render(&d, &format).map_err(|e| anyhow!("{e}"))?;
            match out {
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .with_context(|| format!("creating {path}"))?;
                    f.write_all(text.as_bytes())?;
                    println!("wrote {path}");
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            group,
            json_path,
            table,
        } => {
            let g = cat.group_by_name(&group).map_err(|e| anyhow!("{e}"))?;
            let v = g.to_json(table);
            let text = serde_json::to_string_pretty(&v)?;
            match json_path {
                Some(path) => {
                    std::fs::write(&path, text).with_context(|| format!("writing {path}"))?;
                    println!("wrote {path}");
                }
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Catalog presets for `embed --ordering` and `render --rep`.
fn embedding_by_key(group: &str, key: &str) -> Result<Embedding> {
    let cat = Catalog::get();
    let e = match (group, key) {
        (_, "item1") | ("q8", "regular-pairs") => {
            let g = &cat.q8;
            let action: Vec<Perm> = (0..g.order()).map(|i| g.left_regular_perm(i)).collect();
            let blocks =
                BlockSystem::new(8, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]])
                    .unwrap();
            block_embed(g, &action, &blocks).map_err(|e| anyhow!("{e}"))?
        }
        (_, "item2") | ("q8", "j-cosets") => kk_embed(&cat.q8_j_dec().unwrap()).unwrap(),
        ("q8", "center") => kk_embed(&cat.q8_center_dec().unwrap()).unwrap(),
        (_, "item4") | ("sl2z3", "antipodal") => eight_point_embedding(&cat.sl2z3)?,
        (_, "item5") | ("binary-tetrahedral", "q8-cosets") => {
            kk_embed(&cat.at4_q8_dec().unwrap()).unwrap()
        }
        ("binary-tetrahedral", "s-cosets") => kk_embed(&cat.at4_s_dec().unwrap()).unwrap(),
        ("binary-tetrahedral", "n-cosets") => kk_embed(&cat.at4_n_dec().unwrap()).unwrap(),
        (_, "item7") | ("gl2z3", "antipodal") => eight_point_embedding(&cat.gl2z3)?,
        (_, "item8") | ("binary-octahedral", "q8-cosets") => {
            kk_embed(&cat.st4_q8_dec().unwrap()).unwrap()
        }
        (_, "item9") | ("binary-octahedral", "dic4-cosets") => {
            kk_embed(&cat.st4_dic4_dec().unwrap()).unwrap()
        }
        ("binary-octahedral", "s-cosets") => kk_embed(&cat.st4_s_dec().unwrap()).unwrap(),
        ("binary-octahedral", "p-cosets") => kk_embed(&cat.st4_p_dec().unwrap()).unwrap(),
        (_, "item11") | ("binary-icosahedral", "at4-cosets") => {
            kk_embed(&cat.at5_at4_dec().unwrap()).unwrap()
        }
        (g, "item3") | (g, "s-cosets") if g.starts_with("dic") => {
            let n: u32 = g[3..].parse().context("dic index")?;
            kk_embed(&cat.dic_s_dec(n).map_err(|e| anyhow!("{e}"))?).unwrap()
        }
        _ => bail!("no embedding preset {key:?} for group {group:?}"),
    };
    Ok(e)
}

fn eight_point_embedding(g: &std::sync::Arc<bgw_core::group::FiniteGroup>) -> Result<Embedding> {
    let labels = VectorLabeling::standard(3);
    let action: Vec<Perm> = (0..g.order())
        .map(|i| match g.elem(i) {
            GroupElem::Mat(m) => mat_act_perm(m, &labels).unwrap(),
            _ => unreachable!(),
        })
        .collect();
    let blocks = BlockSystem::new(8, (0..4).map(|b| vec![b, b + 4]).collect()).unwrap();
    block_embed(g, &action, &blocks).map_err(|e| anyhow!("{e}"))
}

fn build_embedding(
    group: &str,
    subgroup: Option<&str>,
    ordering: Option<&str>,
    blocks: Option<&str>,
) -> Result<Embedding> {
    let cat = Catalog::get();
    if let Some(key) = ordering {
        return embedding_by_key(group, key);
    }
    if let Some("auto") = blocks {
        return match group {
            "q8" => embedding_by_key(group, "item1"),
            "sl2z3" => embedding_by_key(group, "item4"),
            "gl2z3" => embedding_by_key(group, "item7"),
            other => bail!("no automatic block embedding for {other:?}"),
        };
    }
    let words = subgroup.ok_or_else(|| anyhow!("need --subgroup or --ordering"))?;
    let g = cat.group_by_name(group).map_err(|e| anyhow!("{e}"))?;
    let names = cat.names_for_group(group).map_err(|e| anyhow!("{e}"))?;
    let gens: Vec<usize> = words
        .split(',')
        .map(|w| bgw_core::expr::eval_in_group(w.trim(), &g, &names).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let sub = g.subgroup_closure(&gens);
    let dec = bgw_core::group::CosetDecomposition::new(&g, sub, None)
        .map_err(|e| anyhow!("{e}"))?;
    kk_embed(&dec).map_err(|e| anyhow!("{e}"))
}
