//! Property-suite drivers shared by the integration and acceptance tests.

use heptasym::autsearch::{automorphism_group, is_automorphism};
use heptasym::graphs::{solve_heptic_congruence, Graph};
use heptasym::group::PermutationGroup;
use heptasym::perm::Permutation;
use heptasym::report::Table1Row;
use heptasym::symmetry::count_s_arcs;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn random_permutation(degree: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images)
}

/// Exhaustive closure of a generating set, by breadth-first multiplication.
fn closure_size(gens: &[Permutation], degree: usize) -> usize {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.images().to_vec());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.images().to_vec()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

/// (a) + (d): stabilizer-chain order vs exhaustive closure on random
/// 2-generator subgroups of S6, with the orbit-stabilizer identity checked
/// at every point of every group.
pub fn s6_subgroup_suite(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..count {
        let gens = vec![random_permutation(6, &mut rng), random_permutation(6, &mut rng)];
        let group = PermutationGroup::from_generators(&gens, 6);
        let brute = closure_size(&gens, 6) as u128;
        if group.order() != brute {
            return Err(format!(
                "trial {trial}: stabilizer chain says {} but the closure has {} elements",
                group.order(),
                brute
            ));
        }
        for point in 0..6u32 {
            let orbit = group.orbit(point).len() as u128;
            let stab = group.stabilizer(point).order();
            if orbit * stab != group.order() {
                return Err(format!(
                    "trial {trial}: orbit-stabilizer fails at {point}: {orbit} * {stab} != {}",
                    group.order()
                ));
            }
        }
    }
    Ok(())
}

/// Count automorphisms of a small graph by trying all n! permutations.
fn brute_force_aut_count(g: &Graph) -> u128 {
    let n = g.n();
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut count = 0u128;
    // Heap's algorithm over image vectors.
    let mut c = vec![0usize; n];
    if is_automorphism(g, &Permutation::from_images(images.clone())) {
        count += 1;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            if is_automorphism(g, &Permutation::from_images(images.clone())) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// (b): automorphism search vs brute force on random graphs with <= 7
/// vertices.
pub fn random_graph_suite(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..count {
        let n: usize = rng.gen_range(1..=7);
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges);
        let searched = automorphism_group(&g, None)
            .expect("no budget")
            .order();
        let brute = brute_force_aut_count(&g);
        if searched != brute {
            return Err(format!(
                "trial {trial}: n={n} edges={edges:?}: search found {searched}, brute force {brute}"
            ));
        }
    }
    Ok(())
}

/// (c): on every constructed 7-valent census graph, the number of s-arcs
/// matches n * 7 * 6^(s-1) for s <= 3.
pub fn arc_count_suite() -> Result<(), String> {
    for row in Table1Row::ALL {
        let g = row.build();
        let n = g.n() as u64;
        for s in 1..=3u32 {
            let expected = n * 7 * 6u64.pow(s - 1);
            let got = count_s_arcs(&g, s);
            if got != expected {
                return Err(format!(
                    "{}: {got} {s}-arcs, expected {expected}",
                    row.id()
                ));
            }
        }
    }
    Ok(())
}

/// (e): every congruence solver output satisfies the polynomial, and
/// non-roots are never reported (checked exhaustively for small moduli).
pub fn heptic_suite() -> Result<(), String> {
    let evaluate = |k: u64, m: u64| -> u64 {
        let mut acc: u64 = 1;
        let mut pw: u64 = 1;
        for _ in 0..6 {
            pw = (pw as u128 * k as u128 % m as u128) as u64;
            acc = ((acc as u128 + pw as u128) % m as u128) as u64;
        }
        acc
    };
    for m in 2..=500u64 {
        let roots = solve_heptic_congruence(m)?;
        let root_set: HashSet<u64> = roots.iter().copied().collect();
        for k in 0..m {
            let is_root = evaluate(k, m) == 0;
            if is_root != root_set.contains(&k) {
                return Err(format!("m={m}: residue {k} misclassified"));
            }
        }
    }
    // The factor-and-combine path (modulus above the direct-search limit);
    // every prime factor of 29 * 127 * 43 * 71 is 1 mod 7, so roots exist.
    let m = 29 * 127 * 43 * 71u64;
    let roots = solve_heptic_congruence(m)?;
    if roots.is_empty() {
        return Err(format!("m={m}: expected roots via the composite path"));
    }
    for &k in &roots {
        if evaluate(k, m) != 0 {
            return Err(format!("m={m}: reported root {k} fails the polynomial"));
        }
    }
    Ok(())
}
