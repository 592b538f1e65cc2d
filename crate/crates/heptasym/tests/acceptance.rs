//! Acceptance harness: one test per criterion, each printing a single
//! pass/fail verdict line.  Computed ground truth is asserted exactly; the
//! only tolerated deviations from the printed source values are the
//! documented ones, which are reported as failures of the criterion without
//! failing the test run.  Any undocumented deviation panics.

mod common;

use heptasym::autsearch::{are_isomorphic, automorphism_group};
use heptasym::graphs::{dihedral_mul, dihedrant, named_graph, DihedrantSpec, NamedGraph};
use heptasym::group::PermutationGroup;
use heptasym::perm::Permutation;
use heptasym::quotient::{is_basic_with_group, normal_quotient, verify_praeger};
use heptasym::report::{
    lemma31_report, lemma32_report, table1_report, tables_report, CheckStatus, RunReport,
    Table1Row,
};
use heptasym::scan::TableId;
use serde_json::Value;
use std::time::{Duration, Instant};

fn verdict(criterion: u32, documented_failures: &[String]) {
    if documented_failures.is_empty() {
        println!("criterion {criterion}: pass");
    } else {
        println!("criterion {criterion}: fail (documented discrepancy)");
        for f in documented_failures {
            println!("  - {f}");
        }
    }
}

/// Claims allowed to carry discrepancy-noted status, with the failure line
/// to report when they do (None = informational, not a criterion cell).
fn documented_note(claim: &str) -> Option<Option<String>> {
    if claim == "s(HS(50))" {
        return Some(Some(
            "HS(50): printed s = 2, but the computed automorphism group is \
             transitive on 3-arcs (s = 3)"
                .into(),
        ));
    }
    if claim == "vertex stabilizer of HS(50)" {
        return Some(Some(
            "HS(50): stabilizer order 5040 matches S7, which the stabilizer \
             classification lists under s = 2, not the computed s = 3"
                .into(),
        ));
    }
    if claim.starts_with("name of Aut(CC_78^1)") || claim.starts_with("structure of Aut(CD(86,7))")
    {
        return Some(None);
    }
    None
}

/// Collect criterion failures from a table1 report, panicking on anything
/// not documented.  Only checks whose claim satisfies `relevant` count as
/// failures of the criterion; other documented notes are tolerated.
fn grade_table1(rep: &RunReport, relevant: impl Fn(&str) -> bool) -> Vec<String> {
    let mut failures = Vec::new();
    for c in &rep.paper_checks {
        match c.status {
            CheckStatus::Pass => {}
            CheckStatus::DiscrepancyNoted => match documented_note(&c.claim) {
                Some(Some(line)) => {
                    if relevant(&c.claim) {
                        failures.push(line);
                    }
                }
                Some(None) => {}
                None => panic!("undocumented discrepancy on `{}`: {}", c.claim, c.computed),
            },
            CheckStatus::Fail | CheckStatus::BudgetExceeded => {
                panic!("`{}` {}: {}", c.claim, c.status.label(), c.computed)
            }
        }
    }
    failures
}

fn row_result<'a>(rep: &'a RunReport, id: &str) -> &'a Value {
    rep.results["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["row"] == id)
        .unwrap_or_else(|| panic!("no row {id}"))
}

#[test]
fn criterion_1_census_rows() {
    let start = Instant::now();
    let rows = [
        Table1Row::K77,
        Table1Row::Cc30,
        Table1Row::Hs50,
        Table1Row::Cc78a,
        Table1Row::Cc78b,
        Table1Row::Cd86,
    ];
    let rep = table1_report(&rows, Duration::from_secs(300), 0);
    let failures = grade_table1(&rep, |claim| {
        claim.starts_with("|Aut(") || claim.starts_with("s(")
    });
    for (id, order, s) in [
        ("K77", "50803200", 3),
        ("CC30", "40320", 2),
        ("HS50", "252000", 3),
        ("CC78a", "1092", 1),
        ("CC78b", "2184", 1),
        ("CD86", "602", 1),
    ] {
        let row = row_result(&rep, id);
        assert_eq!(row["aut_order"]["decimal"], order, "{id} order");
        assert_eq!(row["s"], s, "{id} s");
    }
    assert!(start.elapsed() <= Duration::from_secs(300), "runtime bound");
    verdict(1, &failures);
    assert_eq!(
        failures.len(),
        1,
        "exactly the HS(50) s-cell should deviate"
    );
}

#[test]
fn criterion_2_cc310() {
    let start = Instant::now();
    let rep = table1_report(&[Table1Row::Cc310], Duration::from_secs(900), 0);
    let failures = grade_table1(&rep, |_| true);
    let row = row_result(&rep, "CC310");
    assert_eq!(row["n"], 310);
    assert_eq!(row["valency"], 7);
    assert_eq!(row["bipartite"], true);
    assert_eq!(row["connected"], true);
    assert_eq!(row["aut_order"]["decimal"], "19998720");
    assert_eq!(row["s"], 3);
    assert!(start.elapsed() <= Duration::from_secs(900), "runtime bound");
    verdict(2, &failures);
    assert!(failures.is_empty());
}

#[test]
fn criterion_3_stabilizers() {
    let rep = table1_report(&Table1Row::ALL, Duration::from_secs(900), 0);
    let failures = grade_table1(&rep, |claim| claim.starts_with("vertex stabilizer"));
    for (id, stab) in [
        ("K77", "3628800"),
        ("CC30", "1344"),
        ("HS50", "5040"),
        ("CC78a", "14"),
        ("CC78b", "28"),
        ("CC310", "64512"),
        ("CD86", "7"),
    ] {
        let row = row_result(&rep, id);
        assert_eq!(row["stabilizer_order"]["decimal"], stab, "{id} stabilizer");
        // every row except HS(50) must match a classified profile at its s
        if id != "HS50" {
            assert!(
                row["stabilizer_profile"].is_string(),
                "{id} profile missing"
            );
        } else {
            assert!(row["stabilizer_profile"].is_null());
        }
    }
    verdict(3, &failures);
    assert_eq!(failures.len(), 1, "only the HS(50) profile cell deviates");
}

#[test]
fn criterion_4_section3_enumerations() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let r31 = lemma31_report(Duration::from_secs(60), 0);
    assert_eq!(r31.paper_checks[0].status, CheckStatus::DiscrepancyNoted);
    assert_eq!(
        r31.results["prime_list"].as_array().unwrap().len(),
        13,
        "computed prime list"
    );
    failures.push(
        "Lemma 3.1(i)(b): the printed 12-prime list omits 2647, which satisfies \
         the stated divisor condition"
            .into(),
    );
    assert_eq!(r31.paper_checks[1].status, CheckStatus::Pass, "15-value q-list");
    assert_eq!(
        r31.results["q_list"].as_array().unwrap().last().unwrap(),
        16515073
    );

    let r32 = lemma32_report(Duration::from_secs(60), 0);
    assert_eq!(r32.paper_checks[0].status, CheckStatus::Pass, "21-prime list");
    assert_eq!(r32.paper_checks[1].status, CheckStatus::DiscrepancyNoted);
    assert_eq!(r32.results["k6_q_list"].as_array().unwrap().len(), 48);
    failures.push(
        "Lemma 3.2(iii): the printed 49-value list includes 2267, which fails \
         the stated condition (its spectrum has no 5)"
            .into(),
    );

    let rt = tables_report(
        &[TableId::Table2, TableId::Table3, TableId::Table4, TableId::Table5],
        Duration::from_secs(60),
        0,
    );
    let statuses: Vec<CheckStatus> = rt.paper_checks.iter().map(|c| c.status).collect();
    // Table 2: 11 computed groups (the printed table drops Sz(8)); Table 4
    // exact; Tables 3 and 5 reproduce up to itemized misprints/duplicates.
    assert_eq!(
        statuses,
        vec![
            CheckStatus::DiscrepancyNoted,
            CheckStatus::DiscrepancyNoted,
            CheckStatus::Pass,
            CheckStatus::DiscrepancyNoted,
        ]
    );
    assert_eq!(rt.results["table2"]["groups"].as_array().unwrap().len(), 11);
    assert_eq!(
        rt.results["table2"]["extra"],
        serde_json::json!(["Sz(8)"]),
        "Sz(8) itemized"
    );
    assert_eq!(rt.results["table4"]["groups"].as_array().unwrap().len(), 5);
    assert!(rt.results["table4"]["misprints"].as_array().unwrap().is_empty());
    assert_eq!(rt.results["table3"]["misprints"].as_array().unwrap().len(), 1);
    assert_eq!(rt.results["table3"]["duplicates"].as_array().unwrap().len(), 2);
    assert_eq!(rt.results["table5"]["misprints"].as_array().unwrap().len(), 1);

    assert!(start.elapsed() <= Duration::from_secs(60), "runtime bound");
    verdict(4, &failures);
    assert_eq!(failures.len(), 2);
}

#[test]
fn criterion_5_quotient_pipeline() {
    let start = Instant::now();
    let budget = Some(Duration::from_secs(300));

    let g = dihedrant(&DihedrantSpec::canonical(3683).unwrap());
    assert_eq!(g.n(), 7366);
    let aut = automorphism_group(&g, budget).unwrap();

    // The order-127 translation subgroup: right translation by the rotation
    // a^29, which has order 3683/29 = 127.
    let translation = Permutation::from_images(
        (0..7366u32)
            .map(|x| dihedral_mul(3683, x as usize, 29) as u32)
            .collect(),
    );
    assert_eq!(translation.order(), 127);
    let n_gens = vec![translation];
    let n_group = PermutationGroup::from_generators(&n_gens, 7366);

    let q = normal_quotient(&g, &n_group).unwrap();
    assert!(q.is_cover, "quotient by the order-127 subgroup is a cover");
    assert_eq!(q.orbit_count, 58);
    let cd58 = dihedrant(&DihedrantSpec::canonical(29).unwrap());
    assert!(
        are_isomorphic(&q.quotient, &cd58, budget).unwrap().is_some(),
        "quotient is isomorphic to CD(58,7)"
    );

    let praeger = verify_praeger(&g, &aut, &n_gens).unwrap();
    assert!(praeger.all_pass(), "normal-quotient theorem checks");

    let basic = is_basic_with_group(&g, &aut, 0).unwrap();
    assert!(!basic.basic, "CD(7366,7) is not basic");
    let (witness, orbits, valency) = basic.witness.as_ref().unwrap();
    assert_eq!(witness.order(), 127, "order-127 witness");
    assert_eq!(*orbits, 58);
    assert_eq!(*valency, 7);

    for (name, graph) in [
        ("CD(58,7)", cd58),
        ("K_{7,7}", named_graph(&NamedGraph::CompleteBipartite(7))),
        ("CC_30", named_graph(&NamedGraph::Pg32PointPlane)),
    ] {
        let a = automorphism_group(&graph, budget).unwrap();
        let b = is_basic_with_group(&graph, &a, 0).unwrap();
        assert!(b.basic, "{name} is basic");
    }

    assert!(start.elapsed() <= Duration::from_secs(300), "runtime bound");
    verdict(5, &[]);
}

#[test]
fn criterion_6_property_suites() {
    let start = Instant::now();
    common::s6_subgroup_suite(200, 20_240_817).unwrap();
    common::random_graph_suite(1000, 97).unwrap();
    common::arc_count_suite().unwrap();
    common::heptic_suite().unwrap();
    assert!(start.elapsed() <= Duration::from_secs(120), "runtime bound");
    verdict(6, &[]);
}
