//! Graph automorphism groups and isomorphism testing via equitable
//! partition refinement with individualization backtracking.
//!
//! The search follows the usual reference-leaf scheme: the leftmost leaf of
//! the search tree fixes a reference labeling, every other leaf reached is
//! compared against it, and each match yields an automorphism generator.
//! Subtrees hanging off the reference path are cut as soon as they produce
//! one automorphism, and sibling branches already covered by the orbits of
//! known generators are skipped.

use crate::graphs::Graph;
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use std::time::{Duration, Instant};

/// The time budget ran out before the search finished.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded;

impl std::fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "time budget exceeded during automorphism search")
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    if p.degree() as usize != g.n() {
        return false;
    }
    (0..g.n() as u32).all(|u| {
        g.neighbors(u)
            .iter()
            .all(|&v| g.has_edge(p.apply(u), p.apply(v)))
    })
}

/// Full automorphism group of an uncolored graph.
pub fn automorphism_group(
    g: &Graph,
    budget: Option<Duration>,
) -> Result<PermutationGroup, BudgetExceeded> {
    automorphism_group_colored(g, &vec![0; g.n()], budget)
}

/// Automorphism group respecting an initial vertex coloring.
pub fn automorphism_group_colored(
    g: &Graph,
    colors: &[u32],
    budget: Option<Duration>,
) -> Result<PermutationGroup, BudgetExceeded> {
    assert_eq!(colors.len(), g.n());
    if g.n() == 0 {
        return Ok(PermutationGroup::trivial(0));
    }
    let mut search = Search {
        g,
        deadline: budget.map(|b| Instant::now() + b),
        ref_prefix: Vec::new(),
        ref_invariants: Vec::new(),
        ref_leaf: None,
        gens: Vec::new(),
    };
    let mut start = colors.to_vec();
    normalize_colors(&mut start);
    search.explore(start, 0, true)?;
    if search.gens.is_empty() {
        Ok(PermutationGroup::trivial(g.n()))
    } else {
        Ok(PermutationGroup::from_generators(&search.gens, g.n()))
    }
}

/// Refine a coloring to the coarsest equitable refinement: repeatedly
/// re-color each vertex by (old color, multiset of neighbor colors) until
/// the number of classes stops growing.  Class order is the sort order of
/// those signatures, so it is deterministic and isomorphism-invariant.
pub fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.n();
    loop {
        let old_count = count_colors(colors);
        let mut keyed: Vec<(u32, Vec<u32>, u32)> = (0..n as u32)
            .map(|v| {
                let mut sig: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u as usize]).collect();
                sig.sort_unstable();
                (colors[v as usize], sig, v)
            })
            .collect();
        keyed.sort_unstable();
        let mut next = vec![0u32; n];
        let mut color = 0u32;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                color += 1;
            }
            next[keyed[i].2 as usize] = color;
        }
        let new_count = color as usize + 1;
        *colors = next;
        if new_count == old_count {
            return;
        }
    }
}

fn normalize_colors(colors: &mut Vec<u32>) {
    let mut sorted: Vec<u32> = colors.clone();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).unwrap() as u32;
    }
}

fn count_colors(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Cell sizes in color order; the node invariant compared against the
/// reference path.
fn cell_sizes(colors: &[u32]) -> Vec<u32> {
    let mut sizes = vec![0u32; count_colors(colors)];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes
}

enum Flow {
    Exhausted,
    FoundAuto,
}

struct Search<'a> {
    g: &'a Graph,
    deadline: Option<Instant>,
    /// Vertices individualized along the reference (leftmost) path.
    ref_prefix: Vec<u32>,
    ref_invariants: Vec<Vec<u32>>,
    /// Discrete coloring at the reference leaf.
    ref_leaf: Option<Vec<u32>>,
    gens: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn explore(&mut self, mut colors: Vec<u32>, depth: usize, on_ref: bool) -> Result<Flow, BudgetExceeded> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(BudgetExceeded);
            }
        }
        refine(self.g, &mut colors);
        let invariant = cell_sizes(&colors);
        if on_ref && depth == self.ref_invariants.len() {
            self.ref_invariants.push(invariant);
        } else if invariant != self.ref_invariants[depth] {
            return Ok(Flow::Exhausted);
        }
        let n = self.g.n();
        if count_colors(&colors) == n {
            return Ok(self.handle_leaf(&colors));
        }
        // First smallest non-singleton cell, by color order.
        let sizes = cell_sizes(&colors);
        let target = sizes
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s > 1)
            .min_by_key(|&(c, &s)| (s, c))
            .map(|(c, _)| c as u32)
            .unwrap();
        let mut branch: Vec<u32> = (0..n as u32).filter(|&v| colors[v as usize] == target).collect();
        branch.sort_unstable();
        let fresh = count_colors(&colors) as u32;
        if on_ref {
            let mut tried: Vec<u32> = Vec::new();
            let mut covered = vec![false; n];
            let mut gens_seen = self.gens.len();
            for (i, &v) in branch.iter().enumerate() {
                if covered[v as usize] {
                    continue;
                }
                let mut child = colors.clone();
                child[v as usize] = fresh;
                if i == 0 {
                    self.ref_prefix.push(v);
                    self.explore(child, depth + 1, true)?;
                } else {
                    self.explore(child, depth + 1, false)?;
                }
                tried.push(v);
                // Orbits of generators fixing the reference prefix above this
                // node cover branch vertices equivalent to ones already tried.
                if self.gens.len() != gens_seen || tried.len() == 1 {
                    gens_seen = self.gens.len();
                    let fixing: Vec<Permutation> = self
                        .gens
                        .iter()
                        .filter(|p| self.ref_prefix[..depth].iter().all(|&x| p.apply(x) == x))
                        .cloned()
                        .collect();
                    covered = vec![false; n];
                    for &t in &tried {
                        mark_orbit(&fixing, t, &mut covered);
                    }
                }
            }
            Ok(Flow::Exhausted)
        } else {
            for &v in &branch {
                let mut child = colors.clone();
                child[v as usize] = fresh;
                if let Flow::FoundAuto = self.explore(child, depth + 1, false)? {
                    return Ok(Flow::FoundAuto);
                }
            }
            Ok(Flow::Exhausted)
        }
    }

    fn handle_leaf(&mut self, colors: &[u32]) -> Flow {
        let n = self.g.n();
        match &self.ref_leaf {
            None => {
                self.ref_leaf = Some(colors.to_vec());
                Flow::Exhausted
            }
            Some(reference) => {
                // vertex with reference color c maps to the vertex with
                // candidate color c
                let mut by_color = vec![0u32; n];
                for (v, &c) in colors.iter().enumerate() {
                    by_color[c as usize] = v as u32;
                }
                let images: Vec<u32> = reference.iter().map(|&c| by_color[c as usize]).collect();
                let p = Permutation::from_images(images);
                if !p.is_identity() && is_automorphism(self.g, &p) {
                    self.gens.push(p);
                    Flow::FoundAuto
                } else {
                    Flow::Exhausted
                }
            }
        }
    }
}

fn mark_orbit(gens: &[Permutation], start: u32, covered: &mut [bool]) {
    if covered[start as usize] {
        return;
    }
    covered[start as usize] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !covered[y as usize] {
                covered[y as usize] = true;
                stack.push(y);
            }
        }
    }
}

/// Isomorphism test returning a vertex bijection from g1 onto g2 when one
/// exists.  Both graphs are placed in one colored graph with an apex vertex
/// per side (apexes share a color distinct from ordinary vertices, which
/// keeps disconnected inputs in one piece), and the automorphism group of
/// the union is searched for an element swapping the apexes.
pub fn are_isomorphic(
    g1: &Graph,
    g2: &Graph,
    budget: Option<Duration>,
) -> Result<Option<Permutation>, BudgetExceeded> {
    let (n1, n2) = (g1.n(), g2.n());
    if n1 != n2 || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut deg1: Vec<usize> = (0..n1 as u32).map(|v| g1.neighbors(v).len()).collect();
    let mut deg2: Vec<usize> = (0..n2 as u32).map(|v| g2.neighbors(v).len()).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return Ok(None);
    }
    // union layout: [g1][g2][apex1][apex2]
    let apex1 = (n1 + n2) as u32;
    let apex2 = apex1 + 1;
    let total = n1 + n2 + 2;
    let mut edges: Vec<(u32, u32)> = g1.edges();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1 as u32, v + n1 as u32)));
    edges.extend((0..n1 as u32).map(|v| (v, apex1)));
    edges.extend((0..n2 as u32).map(|v| (v + n1 as u32, apex2)));
    let union = Graph::from_edges(total, &edges);
    let mut colors = vec![0u32; total];
    colors[apex1 as usize] = 1;
    colors[apex2 as usize] = 1;
    let aut = automorphism_group_colored(&union, &colors, budget)?;
    // find a group element moving apex1 to apex2 by walking the orbit
    let gens = aut.generators().to_vec();
    let mut from: Vec<i64> = vec![-1; total]; // parent point
    let mut via: Vec<usize> = vec![0; total]; // generator index
    let mut seen = vec![false; total];
    seen[apex1 as usize] = true;
    let mut queue = std::collections::VecDeque::from([apex1]);
    while let Some(x) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                from[y as usize] = x as i64;
                via[y as usize] = gi;
                queue.push_back(y);
            }
        }
    }
    if !seen[apex2 as usize] {
        return Ok(None);
    }
    // compose the generator word along the tree path
    let mut word = Permutation::identity(total);
    let mut cursor = apex2;
    while from[cursor as usize] >= 0 {
        word = word.compose(&gens[via[cursor as usize]]);
        cursor = from[cursor as usize] as u32;
    }
    // `word` maps apex1 to apex2, hence g1's side onto g2's side.
    debug_assert_eq!(word.apply(apex1), apex2);
    let witness = Permutation::from_images(
        (0..n1 as u32).map(|v| word.apply(v) - n1 as u32).collect(),
    );
    debug_assert!((0..n1 as u32)
        .all(|u| g1.neighbors(u).iter().all(|&v| g2.has_edge(witness.apply(u), witness.apply(v)))));
    Ok(Some(witness))
}
