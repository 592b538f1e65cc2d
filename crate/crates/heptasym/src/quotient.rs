//! Normal quotient graphs, cover detection, the quotient-theorem checks,
//! and basicness of arc-transitive graphs.

use crate::autsearch::{automorphism_group, is_automorphism, BudgetExceeded};
use crate::graphs::{analyze, Graph};
use crate::group::{minimal_normal_subgroups, Completeness, PermutationGroup};
use crate::perm::Permutation;
use std::time::Duration;

pub struct QuotientResult {
    pub quotient: Graph,
    /// Quotient vertex containing each original vertex.
    pub orbit_of: Vec<u32>,
    pub orbit_count: usize,
    pub is_cover: bool,
    /// Number of original edges between the two orbits, per quotient edge
    /// (indexed like quotient.edges()).
    pub edge_multiplicities: Vec<usize>,
}

/// Quotient of a graph by the orbits of a subgroup of its automorphism
/// group: orbits are adjacent when some pair of their members is adjacent.
/// Multi-edges collapse; the multiplicity profile is kept for the cover
/// check (cover ⇔ quotient valency equals original valency).
pub fn normal_quotient(g: &Graph, n_group: &PermutationGroup) -> Result<QuotientResult, String> {
    if n_group.degree() != g.n() {
        return Err("subgroup degree does not match the vertex count".into());
    }
    if let Some(bad) = n_group
        .generators()
        .iter()
        .find(|p| !is_automorphism(g, p))
    {
        return Err(format!("generator {bad} is not an automorphism"));
    }
    let orbits = n_group.orbits();
    let mut orbit_of = vec![0u32; g.n()];
    for (i, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            orbit_of[v as usize] = i as u32;
        }
    }
    let mut multiplicity: std::collections::HashMap<(u32, u32), usize> =
        std::collections::HashMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (orbit_of[u as usize], orbit_of[v as usize]);
        if a != b {
            let key = (a.min(b), a.max(b));
            *multiplicity.entry(key).or_insert(0) += 1;
        }
    }
    let edges: Vec<(u32, u32)> = multiplicity.keys().cloned().collect();
    let quotient = Graph::from_edges(orbits.len(), &edges);
    let edge_multiplicities: Vec<usize> = quotient
        .edges()
        .iter()
        .map(|e| multiplicity[e])
        .collect();
    let facts_g = analyze(g);
    let facts_q = analyze(&quotient);
    let is_cover = match (facts_g.valency, facts_q.valency) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    Ok(QuotientResult {
        quotient,
        orbit_of,
        orbit_count: orbits.len(),
        is_cover,
        edge_multiplicities,
    })
}

/// The induced action of a group on the orbits of a normal subgroup, as a
/// permutation group on orbit indices.
pub fn induced_orbit_action(g: &PermutationGroup, orbit_of: &[u32], orbit_count: usize) -> PermutationGroup {
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|p| {
            let mut images = vec![u32::MAX; orbit_count];
            for v in 0..orbit_of.len() as u32 {
                images[orbit_of[v as usize] as usize] = orbit_of[p.apply(v) as usize];
            }
            Permutation::from_images(images)
        })
        .collect();
    PermutationGroup::from_generators(&gens, orbit_count)
}

/// Checks of the normal-quotient theorem on one (graph, group, subgroup)
/// instance: the subgroup must be normal with at least three orbits; then
/// (1) it is semiregular, (2) the quotient is arc-transitive under the
/// induced action and the graph covers it, (3) vertex stabilizer orders
/// agree (with element-order multisets compared when both are small).
#[derive(Debug)]
pub struct PraegerReport {
    pub semiregular: bool,
    pub quotient_arc_transitive: bool,
    pub is_cover: bool,
    pub stabilizer_orders_equal: bool,
    /// Some(result) when both stabilizers have order <= 10^4.
    pub element_orders_match: Option<bool>,
    pub orbit_count: usize,
}

impl PraegerReport {
    pub fn all_pass(&self) -> bool {
        self.semiregular
            && self.quotient_arc_transitive
            && self.is_cover
            && self.stabilizer_orders_equal
            && self.element_orders_match.unwrap_or(true)
    }
}

pub fn verify_praeger(
    g: &Graph,
    big: &PermutationGroup,
    n_gens: &[Permutation],
) -> Result<PraegerReport, String> {
    let n_group = PermutationGroup::from_generators(n_gens, big.degree());
    for p in n_gens {
        if !big.contains(p) {
            return Err("subgroup generator lies outside the group".into());
        }
    }
    if !big.normalizes(&n_group) {
        return Err("subgroup is not normal".into());
    }
    let q = normal_quotient(g, &n_group)?;
    if q.orbit_count <= 2 {
        return Err(format!(
            "subgroup has {} orbits; more than two are required",
            q.orbit_count
        ));
    }
    let semiregular = n_group.is_semiregular();
    let induced = induced_orbit_action(big, &q.orbit_of, q.orbit_count);
    let quotient_arc_transitive =
        crate::symmetry::is_s_arc_transitive(&q.quotient, &induced, 1)?;
    // stabilizer order comparison: |G_a| vs |(G/N)_d|
    let g_stab = big.stabilizer(0);
    let q_stab = induced.stabilizer(q.orbit_of[0]);
    let stabilizer_orders_equal = g_stab.order() == q_stab.order();
    let element_orders_match = if g_stab.order() <= 10_000 && q_stab.order() <= 10_000 {
        let mut a = g_stab.element_orders();
        let mut b = q_stab.element_orders();
        a.sort_unstable();
        b.sort_unstable();
        Some(a == b)
    } else {
        None
    };
    Ok(PraegerReport {
        semiregular,
        quotient_arc_transitive,
        is_cover: q.is_cover,
        stabilizer_orders_equal,
        element_orders_match,
        orbit_count: q.orbit_count,
    })
}

pub struct BasicnessReport {
    pub basic: bool,
    /// For a non-basic graph: the witness normal subgroup, its orbit count,
    /// and the quotient valency (equal to the original valency).
    pub witness: Option<(PermutationGroup, usize, u32)>,
    pub completeness: Completeness,
    /// One line per skipped or checked minimal normal subgroup.
    pub log: Vec<String>,
}

/// Is the graph basic, i.e. does no nontrivial normal subgroup of its full
/// automorphism group produce a same-valency quotient?  It suffices to scan
/// minimal normal subgroups: orbits of a smaller subgroup refine those of a
/// larger one, so quotient valency can only shrink along further quotients —
/// if any normal subgroup preserves the valency, the minimal one below it
/// does too.  Subgroups with at most two orbits are skipped: with odd
/// valency, a quotient on <= 2 vertices has valency <= 1.
pub fn is_basic(
    g: &Graph,
    seed: u64,
    budget: Option<Duration>,
) -> Result<BasicnessReport, BudgetExceeded> {
    let aut = automorphism_group(g, budget)?;
    is_basic_with_group(g, &aut, seed)
}

pub fn is_basic_with_group(
    g: &Graph,
    aut: &PermutationGroup,
    seed: u64,
) -> Result<BasicnessReport, BudgetExceeded> {
    let (minimals, completeness) =
        minimal_normal_subgroups(aut, seed, crate::group::DEFAULT_STABLE_SAMPLES);
    let mut log = Vec::new();
    // All minimal normal subgroups are scanned; if several produce covers,
    // the witness is the one with the fewest orbits (coarsest quotient).
    let mut best: Option<(PermutationGroup, usize, u32)> = None;
    for m in minimals {
        // a returned witness must be self-certifying
        debug_assert!(aut.normalizes(&m));
        let orbit_count = m.orbits().len();
        if orbit_count <= 2 {
            log.push(format!(
                "minimal normal subgroup of order {} has {} orbit(s); cannot yield a same-valency quotient (odd valency)",
                m.order(),
                orbit_count
            ));
            continue;
        }
        let q = normal_quotient(g, &m).expect("minimal normal subgroups act by automorphisms");
        if q.is_cover {
            let qv = analyze(&q.quotient).valency.unwrap_or(0);
            log.push(format!(
                "minimal normal subgroup of order {} gives a valency-{} quotient on {} vertices: not basic",
                m.order(),
                qv,
                q.orbit_count
            ));
            if best.as_ref().map_or(true, |(_, oc, _)| orbit_count < *oc) {
                best = Some((m, orbit_count, qv));
            }
        } else {
            log.push(format!(
                "minimal normal subgroup of order {} gives a valency-{:?} quotient on {} vertices (valency drops)",
                m.order(),
                analyze(&q.quotient).valency,
                q.orbit_count
            ));
        }
    }
    Ok(BasicnessReport {
        basic: best.is_none(),
        witness: best,
        completeness,
        log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{dihedral_mul, dihedrant, named_graph, DihedrantSpec, NamedGraph};

    fn cd(m: u64) -> Graph {
        dihedrant(&DihedrantSpec::canonical(m).unwrap())
    }

    #[test]
    fn trivial_and_transitive_quotients() {
        let g = named_graph(&NamedGraph::CompleteBipartite(7));
        let triv = PermutationGroup::trivial(14);
        let q = normal_quotient(&g, &triv).unwrap();
        assert_eq!(q.orbit_count, 14);
        assert!(q.is_cover);
        assert_eq!(q.quotient.edge_count(), g.edge_count());

        // the full dihedral rotation on a cycle is transitive
        let c6 = Graph::from_edges(6, &(0..6u32).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>());
        let rot = PermutationGroup::from_generators(
            &[Permutation::from_images((0..6).map(|i| (i + 1) % 6).collect())],
            6,
        );
        let q = normal_quotient(&c6, &rot).unwrap();
        assert_eq!(q.orbit_count, 1);
        assert!(!q.is_cover);
        assert_eq!(q.quotient.edge_count(), 0);
    }

    #[test]
    fn dihedrant_cover_of_cd58() {
        // CD(7366,7), m = 3683 = 29*127; quotient by the order-127
        // translation subgroup generated by a^29 is CD(58,7).
        let g = cd(3683);
        // right translation by a^29 (the automorphism side of the regular
        // dihedral action)
        let a29 = Permutation::from_images(
            (0..7366usize)
                .map(|x| dihedral_mul(3683, x, 29) as u32)
                .collect(),
        );
        assert_eq!(a29.order(), 127);
        let n = PermutationGroup::from_generators(&[a29.clone()], 7366);
        let q = normal_quotient(&g, &n).unwrap();
        assert_eq!(q.orbit_count, 58);
        assert!(q.is_cover);
        assert!(q.edge_multiplicities.iter().all(|&m| m == 127));
        let target = cd(29);
        let w = crate::autsearch::are_isomorphic(&q.quotient, &target, None)
            .unwrap()
            .expect("quotient must be CD(58,7)");
        for (u, v) in q.quotient.edges() {
            assert!(target.has_edge(w.apply(u), w.apply(v)));
        }
        // full check of the quotient theorem on this instance
        let aut = automorphism_group(&g, None).unwrap();
        let report = verify_praeger(&g, &aut, &[a29]).unwrap();
        assert!(report.semiregular);
        assert!(report.quotient_arc_transitive);
        assert!(report.is_cover);
        assert!(report.stabilizer_orders_equal);
        assert_eq!(report.element_orders_match, Some(true));
    }

    #[test]
    fn praeger_rejects_bad_subgroups() {
        let g = cd(29);
        let aut = automorphism_group(&g, None).unwrap();
        // a single reflection is not normal in the full group
        let refl = Permutation::from_images(
            (0..58usize).map(|x| dihedral_mul(29, x, 29) as u32).collect(),
        );
        assert!(verify_praeger(&g, &aut, &[refl]).is_err());
        // the full rotation subgroup has only 2 orbits
        let rot = Permutation::from_images(
            (0..58usize).map(|x| dihedral_mul(29, x, 1) as u32).collect(),
        );
        let err = verify_praeger(&g, &aut, &[rot]).unwrap_err();
        assert!(err.contains("orbits"), "{err}");
    }

    #[test]
    fn basicness_small_cases() {
        let k77 = named_graph(&NamedGraph::CompleteBipartite(7));
        let r = is_basic(&k77, 0, None).unwrap();
        assert!(r.basic);
        assert_eq!(r.completeness, Completeness::Sampled); // |Aut| > 10^6

        let g = cd(29);
        let r = is_basic(&g, 0, None).unwrap();
        assert!(r.basic);
        assert_eq!(r.completeness, Completeness::Exhaustive);
    }

    #[test]
    fn dihedrant_7366_is_not_basic() {
        let g = cd(3683);
        let r = is_basic(&g, 0, None).unwrap();
        assert!(!r.basic);
        let (witness, orbit_count, valency) = r.witness.unwrap();
        assert_eq!(witness.order(), 127);
        assert_eq!(orbit_count, 58);
        assert_eq!(valency, 7);
        // self-certifying: re-run the quotient with the witness
        let q = normal_quotient(&g, &witness).unwrap();
        assert!(q.is_cover);
    }
}
