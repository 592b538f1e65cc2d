//! Command-line interface: graph construction, automorphism groups,
//! transitivity, normal quotients, basicness, and the table/lemma scans.

use clap::{Parser, Subcommand};
use heptasym::autsearch::{are_isomorphic, automorphism_group};
use heptasym::graphs::{analyze, dihedrant, DihedrantSpec, Graph};
use heptasym::group::{format_group_file, parse_group_file, PermutationGroup};
use heptasym::quotient::{is_basic_with_group, normal_quotient, verify_praeger};
use heptasym::report::{
    congruence_report, lemma31_report, lemma32_report, order_value, table1_report, tables_report,
    CheckStatus, PaperCheck, RunReport, Table1Row, SCHEMA_VERSION,
};
use heptasym::scan::TableId;
use heptasym::symmetry::transitivity_report;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "heptasym", version, about = "Seven-valent symmetric graph toolkit")]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the output to a file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Wall-clock budget for the whole command.
    #[arg(long = "budget-seconds", global = true, value_name = "N", default_value_t = 300)]
    budget_seconds: u64,
    /// Seed for randomized routines (minimal-normal-subgroup sampling).
    #[arg(long, global = true, value_name = "S", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a named graph and print its edge list.
    Build {
        /// K77, CC30, HS50, CC78a, CC78b, CC310, or CD<2m> (e.g. CD86).
        target: String,
    },
    /// Automorphism group of a graph given as an edge-list file.
    Aut { edgelist: PathBuf },
    /// Transitivity degree s and arc counts, under the full automorphism
    /// group or a group file.
    Stran {
        edgelist: PathBuf,
        groupfile: Option<PathBuf>,
    },
    /// Quotient by the orbits of a normal subgroup, with the
    /// normal-quotient theorem checks.
    Quotient {
        edgelist: PathBuf,
        groupfile: PathBuf,
    },
    /// Is the graph basic (no valency-preserving proper normal quotient)?
    Basic { edgelist: PathBuf },
    /// Reproduce the census table rows.
    Table1 {
        /// Comma-separated row ids; default all rows.
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        rows: Vec<String>,
    },
    /// The Lemma 3.1 prime and prime-power scans.
    Lemma31,
    /// The Lemma 3.2 prime scans.
    Lemma32,
    /// Re-derive the printed group tables and diff them.
    Tables {
        /// Comma-separated ids among table2..table5, lemma32iii;
        /// default the four tables.
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        id: Vec<String>,
    },
    /// Roots of x^6 + ... + x + 1 = 0 (mod m).
    Congruence {
        #[arg(long)]
        m: u64,
    },
    /// Isomorphism test between two edge-list files.
    Iso {
        edgelist1: PathBuf,
        edgelist2: PathBuf,
    },
}

/// Data and I/O problems are usage errors: exit 2.
fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn read_graph(path: &Path) -> Graph {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| usage_error(&format!("{}: {e}", path.display())));
    Graph::parse_edge_list(&text)
        .unwrap_or_else(|e| usage_error(&format!("{}: {e}", path.display())))
}

fn read_group(path: &Path, expected_degree: usize) -> PermutationGroup {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| usage_error(&format!("{}: {e}", path.display())));
    let (gens, degree) = parse_group_file(&text)
        .unwrap_or_else(|e| usage_error(&format!("{}: {e}", path.display())));
    if degree != expected_degree {
        usage_error(&format!(
            "group degree {degree} does not match the {expected_degree}-vertex graph"
        ));
    }
    PermutationGroup::from_generators(&gens, degree)
}

fn write_output(text: &str, out: Option<&Path>) {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text)
            .unwrap_or_else(|e| usage_error(&format!("{}: {e}", path.display())));
    }
}

fn emit(report: &RunReport, json: bool, out: Option<&Path>) -> i32 {
    let text = if json {
        let mut s = serde_json::to_string_pretty(report).unwrap();
        s.push('\n');
        s
    } else {
        report.render_text()
    };
    write_output(&text, out);
    report.exit_code()
}

fn budget_check(claim: &str) -> PaperCheck {
    PaperCheck::exceeded(claim, "completion within the budget".into(), "n/a (computational budget)")
}

fn build_target(name: &str) -> (Graph, String) {
    if let Some(row) = Table1Row::parse(name) {
        return (row.build(), row.id().to_string());
    }
    if let Some(rest) = name
        .strip_prefix("CD")
        .or_else(|| name.strip_prefix("cd"))
    {
        let order: u64 = rest
            .parse()
            .unwrap_or_else(|_| usage_error(&format!("bad dihedrant order in `{name}`")));
        if order % 2 != 0 || order < 6 {
            usage_error(&format!("CD target needs an even vertex count >= 6, got {order}"));
        }
        let spec = DihedrantSpec::canonical(order / 2)
            .unwrap_or_else(|e| usage_error(&e));
        return (dihedrant(&spec), format!("CD{order}"));
    }
    usage_error(&format!(
        "unknown target `{name}` (expected K77, CC30, HS50, CC78a, CC78b, CC310, or CD<2m>)"
    ));
}

fn graph_facts_value(g: &Graph) -> Value {
    let facts = analyze(g);
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "valency": facts.valency,
        "connected": facts.connected,
        "bipartite": facts.bipartition.is_some(),
        "girth": facts.girth,
    })
}

fn report_skeleton(command: &str, inputs: Value, seed: u64, budget: Duration) -> RunReport {
    RunReport {
        schema: SCHEMA_VERSION,
        command: command.into(),
        inputs,
        results: Value::Null,
        paper_checks: Vec::new(),
        elapsed: 0.0,
        seed,
        budget: budget.as_secs(),
    }
}

fn main() {
    let cli = Cli::parse();
    let budget = Duration::from_secs(cli.budget_seconds);
    let seed = cli.seed;
    let out = cli.out.as_deref();
    let start = Instant::now();

    let code = match cli.cmd {
        Cmd::Build { target } => {
            let (g, id) = build_target(&target);
            if cli.json {
                let mut rep = report_skeleton(
                    "build",
                    json!({ "target": id }),
                    seed,
                    budget,
                );
                rep.results = json!({
                    "facts": graph_facts_value(&g),
                    "edge_list": g.to_edge_list(),
                });
                rep.elapsed = start.elapsed().as_secs_f64();
                emit(&rep, true, out)
            } else {
                write_output(&g.to_edge_list(), out);
                0
            }
        }
        Cmd::Aut { edgelist } => {
            let g = read_graph(&edgelist);
            let mut rep = report_skeleton(
                "aut",
                json!({ "edgelist": edgelist.display().to_string() }),
                seed,
                budget,
            );
            match automorphism_group(&g, Some(budget)) {
                Ok(aut) => {
                    let gens: Vec<String> =
                        aut.generators().iter().map(|p| p.to_string()).collect();
                    rep.results = json!({
                        "facts": graph_facts_value(&g),
                        "order": order_value(aut.order()),
                        "generators": gens,
                        "group_file": format_group_file(aut.generators(), aut.degree()),
                    });
                }
                Err(_) => rep.paper_checks.push(budget_check("automorphism group search")),
            }
            rep.elapsed = start.elapsed().as_secs_f64();
            emit(&rep, cli.json, out)
        }
        Cmd::Stran { edgelist, groupfile } => {
            let g = read_graph(&edgelist);
            let mut rep = report_skeleton(
                "stran",
                json!({
                    "edgelist": edgelist.display().to_string(),
                    "groupfile": groupfile.as_ref().map(|p| p.display().to_string()),
                }),
                seed,
                budget,
            );
            let group = match &groupfile {
                Some(path) => Some(read_group(path, g.n())),
                None => match automorphism_group(&g, Some(budget)) {
                    Ok(aut) => Some(aut),
                    Err(_) => {
                        rep.paper_checks.push(budget_check("automorphism group search"));
                        None
                    }
                },
            };
            if let Some(group) = group {
                let t = transitivity_report(&g, &group)
                    .unwrap_or_else(|e| usage_error(&e));
                rep.results = json!({
                    "facts": graph_facts_value(&g),
                    "group_order": order_value(group.order()),
                    "s": t.s,
                    "per_level": t.per_level,
                    "arc_counts": t.arc_counts,
                    "stabilizer_order": t.stabilizer_order.map(order_value),
                    "stabilizer_profile": t.profile,
                });
            }
            rep.elapsed = start.elapsed().as_secs_f64();
            emit(&rep, cli.json, out)
        }
        Cmd::Quotient { edgelist, groupfile } => {
            let g = read_graph(&edgelist);
            let n_group = read_group(&groupfile, g.n());
            let mut rep = report_skeleton(
                "quotient",
                json!({
                    "edgelist": edgelist.display().to_string(),
                    "groupfile": groupfile.display().to_string(),
                }),
                seed,
                budget,
            );
            let q = normal_quotient(&g, &n_group).unwrap_or_else(|e| usage_error(&e));
            let quotient_facts = graph_facts_value(&q.quotient);
            let mut results = json!({
                "facts": graph_facts_value(&g),
                "subgroup_order": order_value(n_group.order()),
                "orbit_count": q.orbit_count,
                "is_cover": q.is_cover,
                "quotient": {
                    "facts": quotient_facts,
                    "edge_list": q.quotient.to_edge_list(),
                },
                "edge_multiplicities": {
                    "min": q.edge_multiplicities.iter().min(),
                    "max": q.edge_multiplicities.iter().max(),
                },
            });
            match automorphism_group(&g, Some(budget)) {
                Ok(aut) => match verify_praeger(&g, &aut, n_group.generators()) {
                    Ok(p) => {
                        results.as_object_mut().unwrap().insert(
                            "praeger".into(),
                            json!({
                                "semiregular": p.semiregular,
                                "quotient_arc_transitive": p.quotient_arc_transitive,
                                "is_cover": p.is_cover,
                                "stabilizer_orders_equal": p.stabilizer_orders_equal,
                                "element_orders_match": p.element_orders_match,
                            }),
                        );
                        rep.paper_checks.push(PaperCheck::exact(
                            "normal-quotient theorem checks (semiregular, arc-transitive \
                             quotient, cover, stabilizer match)",
                            "all pass".into(),
                            if p.all_pass() {
                                "all pass".into()
                            } else {
                                format!(
                                    "semiregular={}, quotient_arc_transitive={}, cover={}, \
                                     stabilizers_equal={}",
                                    p.semiregular,
                                    p.quotient_arc_transitive,
                                    p.is_cover,
                                    p.stabilizer_orders_equal
                                )
                            },
                            "normal quotient theorem, Section 2",
                        ));
                    }
                    Err(e) => rep.paper_checks.push(PaperCheck {
                        claim: "subgroup is normal in the full automorphism group".into(),
                        expected: "normal".into(),
                        computed: e,
                        status: CheckStatus::Fail,
                        paper_location: "normal quotient theorem, Section 2".into(),
                    }),
                },
                Err(_) => rep.paper_checks.push(budget_check("automorphism group search")),
            }
            rep.results = results;
            rep.elapsed = start.elapsed().as_secs_f64();
            emit(&rep, cli.json, out)
        }
        Cmd::Basic { edgelist } => {
            let g = read_graph(&edgelist);
            let mut rep = report_skeleton(
                "basic",
                json!({ "edgelist": edgelist.display().to_string() }),
                seed,
                budget,
            );
            match automorphism_group(&g, Some(budget)) {
                Ok(aut) => {
                    let b = is_basic_with_group(&g, &aut, seed)
                        .unwrap_or_else(|_| unreachable!("no budget inside basicness scan"));
                    rep.results = json!({
                        "facts": graph_facts_value(&g),
                        "aut_order": order_value(aut.order()),
                        "basic": b.basic,
                        "witness": b.witness.as_ref().map(|(m, orbits, valency)| json!({
                            "subgroup_order": order_value(m.order()),
                            "orbit_count": orbits,
                            "quotient_valency": valency,
                            "group_file": format_group_file(m.generators(), m.degree()),
                        })),
                        "completeness": match b.completeness {
                            heptasym::group::Completeness::Exhaustive => "exhaustive",
                            heptasym::group::Completeness::Sampled => "sampled",
                        },
                        "log": b.log,
                    });
                }
                Err(_) => rep.paper_checks.push(budget_check("automorphism group search")),
            }
            rep.elapsed = start.elapsed().as_secs_f64();
            emit(&rep, cli.json, out)
        }
        Cmd::Table1 { rows } => {
            let rows: Vec<Table1Row> = if rows.is_empty() {
                Table1Row::ALL.to_vec()
            } else {
                rows.iter()
                    .map(|r| {
                        Table1Row::parse(r)
                            .unwrap_or_else(|| usage_error(&format!("unknown row `{r}`")))
                    })
                    .collect()
            };
            emit(&table1_report(&rows, budget, seed), cli.json, out)
        }
        Cmd::Lemma31 => emit(&lemma31_report(budget, seed), cli.json, out),
        Cmd::Lemma32 => emit(&lemma32_report(budget, seed), cli.json, out),
        Cmd::Tables { id } => {
            let ids: Vec<TableId> = if id.is_empty() {
                vec![TableId::Table2, TableId::Table3, TableId::Table4, TableId::Table5]
            } else {
                id.iter()
                    .map(|s| match s.to_ascii_lowercase().as_str() {
                        "table2" => TableId::Table2,
                        "table3" => TableId::Table3,
                        "table4" => TableId::Table4,
                        "table5" => TableId::Table5,
                        "lemma32iii" => TableId::Lemma32iiiList,
                        _ => usage_error(&format!("unknown table id `{s}`")),
                    })
                    .collect()
            };
            emit(&tables_report(&ids, budget, seed), cli.json, out)
        }
        Cmd::Congruence { m } => {
            let rep = congruence_report(m, budget, seed).unwrap_or_else(|e| usage_error(&e));
            emit(&rep, cli.json, out)
        }
        Cmd::Iso { edgelist1, edgelist2 } => {
            let g1 = read_graph(&edgelist1);
            let g2 = read_graph(&edgelist2);
            let mut rep = report_skeleton(
                "iso",
                json!({
                    "edgelist1": edgelist1.display().to_string(),
                    "edgelist2": edgelist2.display().to_string(),
                }),
                seed,
                budget,
            );
            match are_isomorphic(&g1, &g2, Some(budget)) {
                Ok(witness) => {
                    rep.results = json!({
                        "isomorphic": witness.is_some(),
                        "witness": witness.map(|p| p.to_string()),
                    });
                }
                Err(_) => rep.paper_checks.push(budget_check("isomorphism search")),
            }
            rep.elapsed = start.elapsed().as_secs_f64();
            emit(&rep, cli.json, out)
        }
    };
    std::process::exit(code);
}
