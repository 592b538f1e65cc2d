//! Run reports shared by all CLI subcommands: the versioned JSON schema,
//! source-claim checks with locations, and the census-table row runners.

use crate::arith::FactoredInteger;
use crate::autsearch::automorphism_group;
use crate::graphs::{
    analyze, cc78_graphs, dihedrant, named_graph, solve_heptic_congruence, DihedrantSpec, Graph,
    NamedGraph,
};
use crate::scan::{
    lemma31_prime_list, lemma31_qlist, lemma32_k6_qlist, lemma32_prime_list, reproduce_table,
    two_power_qlist, TableId, TableReproduction, PAPER_LEMMA31_PRIMES, PAPER_LEMMA31_QLIST,
    PAPER_LEMMA32III, PAPER_LEMMA32_QLIST,
};
use crate::symmetry::transitivity_report;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::{Duration, Instant};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    DiscrepancyNoted,
    BudgetExceeded,
}

impl CheckStatus {
    pub fn label(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::DiscrepancyNoted => "discrepancy-noted",
            CheckStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

/// One verified claim from the source tables/lemmas, with its location.
#[derive(Serialize, Clone)]
pub struct PaperCheck {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
    pub paper_location: String,
}

impl PaperCheck {
    /// Pass/fail check: pass exactly when expected == computed.
    pub fn exact(claim: &str, expected: String, computed: String, location: &str) -> PaperCheck {
        let status = if expected == computed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        PaperCheck {
            claim: claim.into(),
            expected,
            computed,
            status,
            paper_location: location.into(),
        }
    }

    pub fn noted(claim: &str, expected: String, computed: String, location: &str) -> PaperCheck {
        PaperCheck {
            claim: claim.into(),
            expected,
            computed,
            status: CheckStatus::DiscrepancyNoted,
            paper_location: location.into(),
        }
    }

    pub fn exceeded(claim: &str, expected: String, location: &str) -> PaperCheck {
        PaperCheck {
            claim: claim.into(),
            expected,
            computed: "not computed within the budget".into(),
            status: CheckStatus::BudgetExceeded,
            paper_location: location.into(),
        }
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub paper_checks: Vec<PaperCheck>,
    /// Wall-clock seconds.
    pub elapsed: f64,
    pub seed: u64,
    pub budget: u64,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self
            .paper_checks
            .iter()
            .any(|c| c.status == CheckStatus::BudgetExceeded)
        {
            3
        } else if self.paper_checks.iter().any(|c| c.status == CheckStatus::Fail) {
            1
        } else {
            0
        }
    }

    /// Human-readable rendering (the default when --json is not given).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if self.inputs != Value::Null {
            out.push_str(&format!("inputs: {}\n", self.inputs));
        }
        out.push_str("results:\n");
        let pretty = serde_json::to_string_pretty(&self.results).unwrap();
        for line in pretty.lines() {
            out.push_str("  ");
            out.push_str(line);
            out.push('\n');
        }
        for c in &self.paper_checks {
            out.push_str(&format!(
                "[{}] {}: expected {}; computed {}  ({})\n",
                c.status.label(),
                c.claim,
                c.expected,
                c.computed,
                c.paper_location
            ));
        }
        out.push_str(&format!(
            "elapsed {:.2}s; seed {}; budget {}s\n",
            self.elapsed, self.seed, self.budget
        ));
        out
    }
}

/// Serialize an order both as a decimal string and in factored form.
pub fn order_value(order: u128) -> Value {
    factored_value(&FactoredInteger::factor(order))
}

pub fn factored_value(f: &FactoredInteger) -> Value {
    json!({ "decimal": f.value().to_string(), "factored": f.to_string() })
}

fn list_string(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}] ({} values)", parts.join(","), values.len())
}

/// The rows of the census table, in printed order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Table1Row {
    K77,
    Cc30,
    Hs50,
    Cc78a,
    Cc78b,
    Cc310,
    Cd86,
}

impl Table1Row {
    pub const ALL: [Table1Row; 7] = [
        Table1Row::K77,
        Table1Row::Cc30,
        Table1Row::Hs50,
        Table1Row::Cc78a,
        Table1Row::Cc78b,
        Table1Row::Cc310,
        Table1Row::Cd86,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Table1Row::K77 => "K77",
            Table1Row::Cc30 => "CC30",
            Table1Row::Hs50 => "HS50",
            Table1Row::Cc78a => "CC78a",
            Table1Row::Cc78b => "CC78b",
            Table1Row::Cc310 => "CC310",
            Table1Row::Cd86 => "CD86",
        }
    }

    pub fn parse(s: &str) -> Option<Table1Row> {
        Table1Row::ALL
            .iter()
            .copied()
            .find(|r| r.id().eq_ignore_ascii_case(s))
    }

    pub fn build(&self) -> Graph {
        match self {
            Table1Row::K77 => named_graph(&NamedGraph::CompleteBipartite(7)),
            Table1Row::Cc30 => named_graph(&NamedGraph::Pg32PointPlane),
            Table1Row::Hs50 => named_graph(&NamedGraph::HoffmanSingleton),
            Table1Row::Cc78a => cc78_graphs().expect("coset graph construction").0,
            Table1Row::Cc78b => cc78_graphs().expect("coset graph construction").1,
            Table1Row::Cc310 => named_graph(&NamedGraph::Pg42LinePlane),
            Table1Row::Cd86 => dihedrant(&DihedrantSpec::canonical(43).expect("43 has roots")),
        }
    }
}

struct RowExpect {
    display: &'static str,
    n: usize,
    aut_order: u128,
    printed_s: u32,
    stab_order: u128,
    profile: &'static str,
    location: &'static str,
}

fn row_expect(row: Table1Row) -> RowExpect {
    match row {
        Table1Row::K77 => RowExpect {
            display: "K_{7,7}",
            n: 14,
            aut_order: 50_803_200,
            printed_s: 3,
            stab_order: 3_628_800,
            profile: "S7xS6",
            location: "Table 1, row K_{7,7}; Lemma 2.4",
        },
        Table1Row::Cc30 => RowExpect {
            display: "CC_30",
            n: 30,
            aut_order: 40_320,
            printed_s: 2,
            stab_order: 1_344,
            profile: "ASL(3,2)",
            location: "Table 1, row CC_30; Example 2.2(i); Lemma 2.4",
        },
        Table1Row::Hs50 => RowExpect {
            display: "HS(50)",
            n: 50,
            aut_order: 252_000,
            printed_s: 2,
            stab_order: 5_040,
            profile: "S7",
            location: "Table 1, row HS(50); Lemma 2.4",
        },
        Table1Row::Cc78a => RowExpect {
            display: "CC_78^1",
            n: 78,
            aut_order: 1_092,
            printed_s: 1,
            stab_order: 14,
            profile: "F14",
            location: "Table 1, row CC_78^1; Example 2.2(ii); Lemma 2.4",
        },
        Table1Row::Cc78b => RowExpect {
            display: "CC_78^2",
            n: 78,
            aut_order: 2_184,
            printed_s: 1,
            stab_order: 28,
            profile: "F14xZ2",
            location: "Table 1, row CC_78^2; Example 2.2(ii); Lemma 2.4",
        },
        Table1Row::Cc310 => RowExpect {
            display: "CC_310",
            n: 310,
            aut_order: 19_998_720,
            printed_s: 3,
            stab_order: 64_512,
            profile: "Z2^6:(SL(2,2)xSL(3,2))",
            location: "Table 1, row CC_310; Example 2.2(iii); Lemma 2.4",
        },
        Table1Row::Cd86 => RowExpect {
            display: "CD(86,7)",
            n: 86,
            aut_order: 602,
            printed_s: 1,
            stab_order: 7,
            profile: "Z7",
            location: "Table 1, row CD(2p,7) at p=43; Example 2.1; Lemma 2.4",
        },
    }
}

/// Run the requested census rows within one overall wall-clock budget.
/// Rows that cannot start (or finish the automorphism search) before the
/// deadline get budget-exceeded checks, and the partial report is kept.
pub fn table1_report(rows: &[Table1Row], budget: Duration, seed: u64) -> RunReport {
    let start = Instant::now();
    let deadline = start + budget;
    let mut checks = Vec::new();
    let mut row_results = Vec::new();
    for &row in rows {
        let exp = row_expect(row);
        let remaining = deadline.saturating_duration_since(Instant::now());
        if remaining.is_zero() {
            checks.push(PaperCheck::exceeded(
                &format!("|Aut({})| and s", exp.display),
                format!("{} with s = {}", exp.aut_order, exp.printed_s),
                exp.location,
            ));
            continue;
        }
        let row_start = Instant::now();
        let g = row.build();
        let facts = analyze(&g);
        let mut result = json!({
            "row": row.id(),
            "n": g.n(),
            "valency": facts.valency,
            "connected": facts.connected,
            "bipartite": facts.bipartition.is_some(),
            "girth": facts.girth,
        });
        let aut = match automorphism_group(&g, Some(remaining)) {
            Ok(a) => a,
            Err(_) => {
                checks.push(PaperCheck::exceeded(
                    &format!("|Aut({})| and s", exp.display),
                    format!("{} with s = {}", exp.aut_order, exp.printed_s),
                    exp.location,
                ));
                row_results.push(result);
                continue;
            }
        };
        let rep = transitivity_report(&g, &aut).expect("7-valent census graph");
        let obj = result.as_object_mut().unwrap();
        obj.insert("aut_order".into(), factored_value(&aut.order_factored()));
        obj.insert("s".into(), json!(rep.s));
        obj.insert("per_level".into(), json!(rep.per_level));
        obj.insert("arc_counts".into(), json!(rep.arc_counts));
        obj.insert(
            "stabilizer_order".into(),
            rep.stabilizer_order.map_or(Value::Null, order_value),
        );
        obj.insert("stabilizer_profile".into(), json!(rep.profile));
        obj.insert(
            "elapsed".into(),
            json!(row_start.elapsed().as_secs_f64()),
        );
        checks.extend(row_checks(row, &exp, &g, &aut, &rep));
        row_results.push(result);
    }
    RunReport {
        schema: SCHEMA_VERSION,
        command: "table1".into(),
        inputs: json!({ "rows": rows.iter().map(|r| r.id()).collect::<Vec<_>>() }),
        results: json!({ "rows": row_results }),
        paper_checks: checks,
        elapsed: start.elapsed().as_secs_f64(),
        seed,
        budget: budget.as_secs(),
    }
}

fn row_checks(
    row: Table1Row,
    exp: &RowExpect,
    g: &Graph,
    aut: &crate::group::PermutationGroup,
    rep: &crate::symmetry::TransitivityReport,
) -> Vec<PaperCheck> {
    assert_eq!(g.n(), exp.n, "constructed vertex count");
    let mut checks = Vec::new();
    checks.push(PaperCheck::exact(
        &format!("|Aut({})|", exp.display),
        exp.aut_order.to_string(),
        aut.order().to_string(),
        exp.location,
    ));

    // Transitivity degree. HS(50) is the one documented disagreement: the
    // table prints s = 2, but the computed group is transitive on 3-arcs.
    if row == Table1Row::Hs50 && rep.s == 3 {
        checks.push(PaperCheck::noted(
            &format!("s({})", exp.display),
            format!("{} as printed", exp.printed_s),
            "3: the 2-arc (0,1,2) extends to all 6 continuations under the \
             pointwise stabilizer, and the 3-arc orbit has full size 12600"
                .into(),
            exp.location,
        ));
        checks.push(PaperCheck::noted(
            &format!("vertex stabilizer of {}", exp.display),
            format!(
                "{} = {} listed under s = {}",
                exp.stab_order, exp.profile, exp.printed_s
            ),
            format!(
                "order {} matches S7, but the classified s = 3 stabilizers have \
                 different orders",
                rep.stabilizer_order.unwrap_or(0)
            ),
            exp.location,
        ));
        return checks;
    }

    checks.push(PaperCheck::exact(
        &format!("s({})", exp.display),
        exp.printed_s.to_string(),
        rep.s.to_string(),
        exp.location,
    ));
    checks.push(PaperCheck::exact(
        &format!("vertex stabilizer of {}", exp.display),
        format!("order {} ({})", exp.stab_order, exp.profile),
        format!(
            "order {} ({})",
            rep.stabilizer_order.unwrap_or(0),
            rep.profile.unwrap_or("no profile at this s")
        ),
        exp.location,
    ));

    match row {
        Table1Row::Cc310 => {
            let facts = analyze(g);
            checks.push(PaperCheck::exact(
                "CC_310 structure",
                "310 vertices, valency 7, bipartite, connected".into(),
                format!(
                    "{} vertices, valency {}, {}bipartite, {}connected",
                    g.n(),
                    facts.valency.map_or("-".into(), |v| v.to_string()),
                    if facts.bipartition.is_some() { "" } else { "not " },
                    if facts.connected { "" } else { "not " },
                ),
                "Example 2.2(iii)",
            ));
        }
        Table1Row::Cc78a => {
            // The example prints Aut = PSL(2,23); the order computed here is
            // |PSL(2,13)| = 1092, matching the census table.
            checks.push(PaperCheck::noted(
                "name of Aut(CC_78^1) in the construction example",
                "PSL(2,23) as printed (order 6072)".into(),
                "computed order 1092 = |PSL(2,13)|, agreeing with Table 1".into(),
                "Example 2.2(ii)",
            ));
        }
        Table1Row::Cd86 => {
            // The table prints D_2p x Z_7; a direct product would have a
            // center of order 7 and elements of order 7*43.
            let orders = aut.element_orders();
            let has_301 = orders.iter().any(|&o| o == 301);
            checks.push(PaperCheck::noted(
                "structure of Aut(CD(86,7))",
                "D_86 x Z_7 as printed".into(),
                format!(
                    "order-602 group with{} elements of order 301, so not a direct \
                     product with Z_7; it is the Frobenius group Z_43:Z_14, matching \
                     the D_2m:Z_7 form of the construction example",
                    if has_301 { "" } else { " no" }
                ),
                "Table 1, row CD(2p,7); Example 2.1",
            ));
        }
        _ => {}
    }
    checks
}

fn compare_list(
    claim: &str,
    printed: &[u64],
    computed: &[u64],
    documented_extra: &[u64],
    documented_missing: &[u64],
    location: &str,
) -> PaperCheck {
    let printed_set: std::collections::BTreeSet<u64> = printed.iter().copied().collect();
    let computed_set: std::collections::BTreeSet<u64> = computed.iter().copied().collect();
    let extra: Vec<u64> = computed_set.difference(&printed_set).copied().collect();
    let missing: Vec<u64> = printed_set.difference(&computed_set).copied().collect();
    if extra.is_empty() && missing.is_empty() {
        return PaperCheck::exact(
            claim,
            list_string(printed),
            list_string(computed),
            location,
        );
    }
    let mut diff = Vec::new();
    if !extra.is_empty() {
        diff.push(format!("also satisfying the condition: {extra:?}"));
    }
    if !missing.is_empty() {
        diff.push(format!("printed but failing the condition: {missing:?}"));
    }
    let computed_desc = format!("{} — {}", list_string(computed), diff.join("; "));
    if extra == documented_extra && missing == documented_missing {
        PaperCheck::noted(claim, list_string(printed), computed_desc, location)
    } else {
        PaperCheck::exact(claim, list_string(printed), computed_desc, location)
    }
}

pub fn lemma31_report(budget: Duration, seed: u64) -> RunReport {
    let start = Instant::now();
    let primes = lemma31_prime_list();
    let qlist = lemma31_qlist();
    let two_powers = two_power_qlist(25, 4);
    let checks = vec![
        compare_list(
            "Lemma 3.1(i)(b) prime list",
            PAPER_LEMMA31_PRIMES,
            &primes,
            &[2647],
            &[],
            "Lemma 3.1(i)(b)",
        ),
        compare_list(
            "Lemma 3.1(ii)(a) q-list",
            PAPER_LEMMA31_QLIST,
            &qlist,
            &[],
            &[],
            "Lemma 3.1(ii)(a)",
        ),
    ];
    RunReport {
        schema: SCHEMA_VERSION,
        command: "lemma31".into(),
        inputs: Value::Null,
        results: json!({
            "prime_list": primes,
            "q_list": qlist,
            "two_power_q_list": two_powers,
        }),
        paper_checks: checks,
        elapsed: start.elapsed().as_secs_f64(),
        seed,
        budget: budget.as_secs(),
    }
}

pub fn lemma32_report(budget: Duration, seed: u64) -> RunReport {
    let start = Instant::now();
    let primes = lemma32_prime_list();
    let k6 = lemma32_k6_qlist();
    let checks = vec![
        compare_list(
            "Lemma 3.2(ii) prime list",
            PAPER_LEMMA32_QLIST,
            &primes,
            &[],
            &[],
            "Lemma 3.2(ii); Table 5",
        ),
        compare_list(
            "Lemma 3.2(iii) q-list",
            PAPER_LEMMA32III,
            &k6,
            &[],
            &[2267],
            "Lemma 3.2(iii)",
        ),
    ];
    RunReport {
        schema: SCHEMA_VERSION,
        command: "lemma32".into(),
        inputs: Value::Null,
        results: json!({ "prime_list": primes, "k6_q_list": k6 }),
        paper_checks: checks,
        elapsed: start.elapsed().as_secs_f64(),
        seed,
        budget: budget.as_secs(),
    }
}

/// Known defects per table, used to grade a reproduction diff: a diff equal
/// to the documented one is a noted discrepancy, anything else is a failure.
struct TableDefects {
    missing: &'static [&'static str],
    extra: &'static [&'static str],
    misprint_rows: &'static [&'static str],
    duplicates: &'static [&'static str],
}

fn table_defects(id: TableId) -> TableDefects {
    match id {
        TableId::Table2 => TableDefects {
            missing: &[],
            extra: &["Sz(8)"],
            misprint_rows: &["PSL(2,127)"],
            duplicates: &[],
        },
        TableId::Table3 => TableDefects {
            missing: &[],
            extra: &[],
            misprint_rows: &["PSL(2,43)"],
            duplicates: &["M22", "PSL(5,2)"],
        },
        TableId::Table4 => TableDefects {
            missing: &[],
            extra: &[],
            misprint_rows: &[],
            duplicates: &[],
        },
        TableId::Table5 => TableDefects {
            missing: &[],
            extra: &[],
            misprint_rows: &["PSL(2,125)"],
            duplicates: &[],
        },
        TableId::Lemma32iiiList => TableDefects {
            missing: &["2267"],
            extra: &[],
            misprint_rows: &[],
            duplicates: &[],
        },
    }
}

fn table_location(id: TableId) -> &'static str {
    match id {
        TableId::Table2 => "Table 2 (Lemma 3.1, K4-groups)",
        TableId::Table3 => "Table 3 (Lemma 3.1, K5-groups)",
        TableId::Table4 => "Table 4 (Lemma 3.2, K4-groups)",
        TableId::Table5 => "Table 5 (Lemma 3.2, K5-groups)",
        TableId::Lemma32iiiList => "Lemma 3.2(iii)",
    }
}

fn table_check(rep: &TableReproduction) -> PaperCheck {
    let defects = table_defects(rep.id);
    let location = table_location(rep.id);
    let claim = format!("{location} reproduction");
    let clean =
        rep.missing.is_empty() && rep.extra.is_empty() && rep.misprints.is_empty() && rep.duplicates.is_empty();
    let computed_count = if rep.groups.is_empty() {
        rep.values.len()
    } else {
        rep.groups.len()
    };
    if clean {
        return PaperCheck {
            claim,
            expected: format!("{computed_count} printed entries"),
            computed: format!("{computed_count} entries, matching exactly"),
            status: CheckStatus::Pass,
            paper_location: location.into(),
        };
    }
    let mut notes = Vec::new();
    if !rep.missing.is_empty() {
        notes.push(format!("printed but not derived: {:?}", rep.missing));
    }
    if !rep.extra.is_empty() {
        notes.push(format!("derived but not printed: {:?}", rep.extra));
    }
    if !rep.misprints.is_empty() {
        notes.push(format!("order misprints: {:?}", rep.misprints));
    }
    if !rep.duplicates.is_empty() {
        notes.push(format!("rows printed twice: {:?}", rep.duplicates));
    }
    let computed = format!("{} entries — {}", computed_count, notes.join("; "));
    let same = |got: &[String], want: &[&str]| {
        got.iter().map(String::as_str).eq(want.iter().copied())
    };
    let documented = same(&rep.missing, defects.missing)
        && same(&rep.extra, defects.extra)
        && same(&rep.duplicates, defects.duplicates)
        && rep.misprints.len() == defects.misprint_rows.len()
        && rep
            .misprints
            .iter()
            .zip(defects.misprint_rows)
            .all(|(m, row)| m.starts_with(row));
    if documented {
        PaperCheck::noted(&claim, "the printed rows".into(), computed, location)
    } else {
        PaperCheck {
            claim,
            expected: "the printed rows".into(),
            computed,
            status: CheckStatus::Fail,
            paper_location: location.into(),
        }
    }
}

fn table_value(rep: &TableReproduction) -> Value {
    if rep.id == TableId::Lemma32iiiList {
        return json!({
            "values": rep.values,
            "missing": rep.missing,
            "extra": rep.extra,
        });
    }
    let groups: Vec<Value> = rep
        .groups
        .iter()
        .map(|e| json!({ "name": e.name, "order": factored_value(&e.order) }))
        .collect();
    json!({
        "groups": groups,
        "missing": rep.missing,
        "extra": rep.extra,
        "misprints": rep.misprints,
        "duplicates": rep.duplicates,
    })
}

pub fn tables_report(ids: &[TableId], budget: Duration, seed: u64) -> RunReport {
    let start = Instant::now();
    let mut results = serde_json::Map::new();
    let mut checks = Vec::new();
    for &id in ids {
        let rep = reproduce_table(id);
        let key = match id {
            TableId::Table2 => "table2",
            TableId::Table3 => "table3",
            TableId::Table4 => "table4",
            TableId::Table5 => "table5",
            TableId::Lemma32iiiList => "lemma32iii",
        };
        results.insert(key.into(), table_value(&rep));
        checks.push(table_check(&rep));
    }
    RunReport {
        schema: SCHEMA_VERSION,
        command: "tables".into(),
        inputs: json!({ "tables": results.keys().collect::<Vec<_>>() }),
        results: Value::Object(results),
        paper_checks: checks,
        elapsed: start.elapsed().as_secs_f64(),
        seed,
        budget: budget.as_secs(),
    }
}

pub fn congruence_report(m: u64, budget: Duration, seed: u64) -> Result<RunReport, String> {
    let start = Instant::now();
    let roots = solve_heptic_congruence(m)?;
    let verified = roots.iter().all(|&k| {
        let mut acc: u64 = 1;
        let mut pw: u64 = 1;
        for _ in 0..6 {
            pw = (pw as u128 * k as u128 % m as u128) as u64;
            acc = (acc + pw) % m;
        }
        acc == 0
    });
    let mut checks = vec![PaperCheck::exact(
        &format!("all roots satisfy x^6 + ... + x + 1 = 0 (mod {m})"),
        "true".into(),
        verified.to_string(),
        "Example 2.1 (defining congruence of CD(2m,7))",
    )];
    if m == 43 {
        checks.push(PaperCheck::exact(
            "roots modulo 43",
            "[4,11,16,21,35,41]".into(),
            format!("{roots:?}").replace(' ', ""),
            "Example 2.1 at p = 43",
        ));
    }
    Ok(RunReport {
        schema: SCHEMA_VERSION,
        command: "congruence".into(),
        inputs: json!({ "m": m }),
        results: json!({ "roots": roots }),
        paper_checks: checks,
        elapsed: start.elapsed().as_secs_f64(),
        seed,
        budget: budget.as_secs(),
    })
}
