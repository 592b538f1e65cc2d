//! s-arc counting, s-arc-transitivity, transitivity degree, and the vertex
//! stabilizer profiles admissible for connected 7-valent symmetric graphs.

use crate::graphs::Graph;
use crate::group::PermutationGroup;

/// Hard cap on tuple orbits so a runaway search fails loudly.
const ORBIT_CAP: usize = 10_000_000;

/// Number of s-arcs: walks (v0, ..., vs) along edges with v_{i+1} != v_{i-1}.
/// A 0-arc is a vertex, a 1-arc an ordered edge.
pub fn count_s_arcs(g: &Graph, s: u32) -> u64 {
    if s == 0 {
        return g.n() as u64;
    }
    let mut total = 0u64;
    let mut walk: Vec<u32> = Vec::with_capacity(s as usize + 1);
    for v in 0..g.n() as u32 {
        walk.push(v);
        total += extend_count(g, &mut walk, s);
        walk.pop();
    }
    total
}

fn extend_count(g: &Graph, walk: &mut Vec<u32>, remaining: u32) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let last = *walk.last().unwrap();
    let forbidden = walk.len().checked_sub(2).map(|i| walk[i]);
    let mut total = 0u64;
    for &w in g.neighbors(last) {
        if Some(w) == forbidden {
            continue;
        }
        walk.push(w);
        total += extend_count(g, walk, remaining - 1);
        walk.pop();
    }
    total
}

/// Lexicographically first s-arc, if any exists.
fn first_s_arc(g: &Graph, s: u32) -> Option<Vec<u32>> {
    fn extend(g: &Graph, walk: &mut Vec<u32>, remaining: u32) -> bool {
        if remaining == 0 {
            return true;
        }
        let last = *walk.last().unwrap();
        let forbidden = walk.len().checked_sub(2).map(|i| walk[i]);
        for &w in g.neighbors(last) {
            if Some(w) == forbidden {
                continue;
            }
            walk.push(w);
            if extend(g, walk, remaining - 1) {
                return true;
            }
            walk.pop();
        }
        false
    }
    for v in 0..g.n() as u32 {
        let mut walk = vec![v];
        if extend(g, &mut walk, s) {
            return Some(walk);
        }
    }
    None
}

/// Does the group act transitively on the s-arcs of the graph?  Decided by
/// comparing the orbit of one s-arc against the total count.  Errs if either
/// exceeds the internal cap.
pub fn is_s_arc_transitive(g: &Graph, group: &PermutationGroup, s: u32) -> Result<bool, String> {
    assert_eq!(group.degree(), g.n(), "group degree must match vertex count");
    if let Some(bad) = group
        .generators()
        .iter()
        .find(|p| !crate::autsearch::is_automorphism(g, p))
    {
        return Err(format!("generator {bad} is not an automorphism of the graph"));
    }
    let total = count_s_arcs(g, s);
    if total == 0 {
        return Ok(false);
    }
    if total > ORBIT_CAP as u64 {
        return Err(format!("{total} s-arcs exceeds the orbit cap"));
    }
    let start = first_s_arc(g, s).unwrap();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(arc) = queue.pop_front() {
        for gen in group.generators() {
            let image: Vec<u32> = arc.iter().map(|&v| gen.apply(v)).collect();
            if !seen.contains(&image) {
                if seen.len() >= ORBIT_CAP {
                    return Err("s-arc orbit exceeds the orbit cap".into());
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(seen.len() as u64 == total)
}

/// Largest s >= 1 such that the group is transitive on s-arcs; 0 if it is
/// not even arc-transitive.  A connected graph of valency 7 cannot be
/// 4-arc-transitive, so reaching s = 4 is reported as an error.
pub fn transitivity_degree(g: &Graph, group: &PermutationGroup) -> Result<u32, String> {
    let mut s = 0u32;
    while is_s_arc_transitive(g, group, s + 1)? {
        s += 1;
        if s >= 4 {
            return Err("4-arc-transitivity contradicts the valency-7 bound".into());
        }
    }
    Ok(s)
}

/// Full transitivity analysis: per-level results, arc counts, and the vertex
/// stabilizer order checked against the classified profiles.
pub struct TransitivityReport {
    pub s: u32,
    /// is_s_arc_transitive for levels 1..=per_level.len().
    pub per_level: Vec<bool>,
    pub arc_counts: Vec<u64>,
    /// |G| / n when the group is vertex-transitive.
    pub stabilizer_order: Option<u128>,
    pub profile: Option<&'static str>,
}

pub fn transitivity_report(g: &Graph, group: &PermutationGroup) -> Result<TransitivityReport, String> {
    let mut per_level = Vec::new();
    let mut arc_counts = Vec::new();
    let mut s = 0u32;
    for level in 1..=4u32 {
        let ok = is_s_arc_transitive(g, group, level)?;
        per_level.push(ok);
        arc_counts.push(count_s_arcs(g, level));
        if !ok {
            break;
        }
        s = level;
        if s >= 4 {
            return Err("4-arc-transitivity contradicts the valency-7 bound".into());
        }
    }
    let stabilizer_order = if group.is_transitive() && g.n() > 0 {
        Some(group.order() / g.n() as u128)
    } else {
        None
    };
    let profile = stabilizer_order.and_then(|o| stabilizer_profile_check(s, o));
    Ok(TransitivityReport {
        s,
        per_level,
        arc_counts,
        stabilizer_order,
        profile,
    })
}

/// A vertex stabilizer shape admissible for a connected 7-valent graph on
/// which a group acts s-arc-transitively but not (s+1)-arc-transitively.
pub struct StabilizerProfile {
    pub s: u32,
    pub name: &'static str,
    pub order: u128,
}

/// The classified stabilizer possibilities, keyed by exact s.
pub const STABILIZER_PROFILES: &[StabilizerProfile] = &[
    StabilizerProfile { s: 1, name: "Z7", order: 7 },
    StabilizerProfile { s: 1, name: "F14", order: 14 },
    StabilizerProfile { s: 1, name: "F21", order: 21 },
    StabilizerProfile { s: 1, name: "F14xZ2", order: 28 },
    StabilizerProfile { s: 1, name: "F21xZ3", order: 63 },
    StabilizerProfile { s: 2, name: "F42", order: 42 },
    StabilizerProfile { s: 2, name: "F42xZ2", order: 84 },
    StabilizerProfile { s: 2, name: "F42xZ3", order: 126 },
    StabilizerProfile { s: 2, name: "PSL(3,2)", order: 168 },
    StabilizerProfile { s: 2, name: "ASL(3,2)", order: 1344 },
    StabilizerProfile { s: 2, name: "ASL(3,2)xZ2", order: 2688 },
    StabilizerProfile { s: 2, name: "A7", order: 2520 },
    StabilizerProfile { s: 2, name: "S7", order: 5040 },
    StabilizerProfile { s: 3, name: "F42xZ6", order: 252 },
    StabilizerProfile { s: 3, name: "PSL(3,2)xS4", order: 4032 },
    StabilizerProfile { s: 3, name: "A7xA6", order: 907_200 },
    StabilizerProfile { s: 3, name: "S7xS6", order: 3_628_800 },
    StabilizerProfile { s: 3, name: "(A7xA6):Z2", order: 1_814_400 },
    StabilizerProfile { s: 3, name: "Z2^6:(SL(2,2)xSL(3,2))", order: 64_512 },
    StabilizerProfile { s: 3, name: "[2^20]:(SL(2,2)xSL(3,2))", order: 1_056_964_608 },
];

/// Match a stabilizer order against the profiles for the given s.
pub fn stabilizer_profile_check(s: u32, stab_order: u128) -> Option<&'static str> {
    STABILIZER_PROFILES
        .iter()
        .find(|p| p.s == s && p.order == stab_order)
        .map(|p| p.name)
}
