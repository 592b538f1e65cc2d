//! Permutation groups with a stabilizer chain (base and strong generating set).
//!
//! The chain is built by a deterministic Schreier-Sims procedure: base points
//! are chosen as the smallest point moved by the first element that reaches a
//! level, and Schreier generators are processed in a fixed queue order, so
//! identical input always yields an identical chain.  Transversals are stored
//! as Schreier vectors (parent pointers labelled by generator index); extra
//! shortcut labels keep every tree shallow so that sifting at degree ~10^4
//! stays cheap.

use crate::arith::FactoredInteger;
use crate::perm::Permutation;
use rand::Rng;
use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

const NOT_IN_ORBIT: i32 = -1;
const ROOT: i32 = -2;

/// Maximum Schreier-tree depth before a shortcut label is inserted.
const DEPTH_CAP: u32 = 20;

#[derive(Clone)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    /// Tree edge labels: generators, their inverses, and shortcut transversals.
    labels: Vec<Permutation>,
    labels_inv: Vec<Permutation>,
    /// Per point: NOT_IN_ORBIT, ROOT, or the label index leading back to the parent.
    schreier: Vec<i32>,
    depth: Vec<u32>,
    orbit: Vec<u32>,
    /// Schreier pairs (orbit position, generator index) not yet processed.
    pending: VecDeque<(u32, u32)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Level {
        let mut schreier = vec![NOT_IN_ORBIT; degree];
        schreier[base as usize] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            labels: Vec::new(),
            labels_inv: Vec::new(),
            schreier,
            depth: vec![0; degree],
            orbit: vec![base],
            pending: VecDeque::new(),
        }
    }

    fn in_orbit(&self, p: u32) -> bool {
        self.schreier[p as usize] != NOT_IN_ORBIT
    }

    fn add_gen(&mut self, g: Permutation) {
        let gidx = self.gens.len() as u32;
        self.gens.push(g.clone());
        for pos in 0..self.orbit.len() {
            self.pending.push_back((pos as u32, gidx));
        }
        let first_new_label = self.labels.len();
        let ginv = g.inverse();
        self.labels.push(g.clone());
        self.labels_inv.push(ginv.clone());
        if ginv != g {
            self.labels.push(ginv.clone());
            self.labels_inv.push(g);
        }
        self.extend_orbit(first_new_label);
    }

    /// Grow the orbit: first sweep old points with the new labels, then BFS
    /// from any newly discovered points with all labels.
    fn extend_orbit(&mut self, first_new_label: usize) {
        let mut queue: VecDeque<u32> = VecDeque::new();
        for pos in 0..self.orbit.len() {
            let p = self.orbit[pos];
            for j in first_new_label..self.labels.len() {
                let q = self.labels[j].apply(p);
                if !self.in_orbit(q) {
                    self.attach(q, j, self.depth[p as usize] + 1);
                    queue.push_back(q);
                }
            }
        }
        while let Some(p) = queue.pop_front() {
            let mut j = 0;
            while j < self.labels.len() {
                let q = self.labels[j].apply(p);
                if !self.in_orbit(q) {
                    self.attach(q, j, self.depth[p as usize] + 1);
                    queue.push_back(q);
                }
                j += 1;
            }
        }
    }

    fn attach(&mut self, q: u32, label: usize, depth: u32) {
        self.schreier[q as usize] = label as i32;
        self.depth[q as usize] = depth;
        let pos = self.orbit.len() as u32;
        self.orbit.push(q);
        for gidx in 0..self.gens.len() as u32 {
            self.pending.push_back((pos, gidx));
        }
        if depth > DEPTH_CAP {
            // Insert the full transversal element as a direct edge from the root.
            let u = self.transversal(q);
            let idx = self.labels.len();
            self.labels_inv.push(u.inverse());
            self.labels.push(u);
            self.schreier[q as usize] = idx as i32;
            self.depth[q as usize] = 1;
        }
    }

    /// The transversal element u with u(base) = point.
    fn transversal(&self, point: u32) -> Permutation {
        let mut walk: Vec<usize> = Vec::new();
        let mut p = point;
        while p != self.base {
            let j = self.schreier[p as usize];
            debug_assert!(j >= 0);
            walk.push(j as usize);
            p = self.labels_inv[j as usize].apply(p);
        }
        let degree = self.schreier.len();
        let mut u = Permutation::identity(degree);
        for &j in walk.iter().rev() {
            u = self.labels[j].compose(&u);
        }
        u
    }

    /// Multiply w on the left by label inverses until it fixes the base.
    /// Requires w(base) to lie in the orbit.
    fn strip(&self, mut w: Permutation) -> Permutation {
        let mut p = w.apply(self.base);
        while p != self.base {
            let j = self.schreier[p as usize];
            debug_assert!(j >= 0, "strip called with image outside orbit");
            w = self.labels_inv[j as usize].compose(&w);
            p = w.apply(self.base);
        }
        w
    }

    /// Parent-pointer tree as a child adjacency list (orbit-local).
    fn children(&self) -> Vec<Vec<u32>> {
        let mut kids: Vec<Vec<u32>> = vec![Vec::new(); self.schreier.len()];
        for &q in &self.orbit {
            if q != self.base {
                let j = self.schreier[q as usize] as usize;
                let parent = self.labels_inv[j].apply(q);
                kids[parent as usize].push(q);
            }
        }
        kids
    }
}

#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl std::fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermutationGroup(degree={}, order={})",
            self.degree,
            self.order()
        )
    }
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> PermutationGroup {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn from_generators(gens: &[Permutation], degree: usize) -> PermutationGroup {
        PermutationGroup::with_base_hint(gens, degree, &[])
    }

    /// Build a chain whose base starts with the given points (used to read
    /// off point stabilizers).  Remaining base points follow the default
    /// smallest-moved-point rule.
    pub fn with_base_hint(gens: &[Permutation], degree: usize, hint: &[u32]) -> PermutationGroup {
        let mut g = PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        };
        for &b in hint {
            assert!((b as usize) < degree);
            g.levels.push(Level::new(b, degree));
        }
        for p in gens {
            assert_eq!(p.degree(), degree, "generator degree mismatch");
            if !p.is_identity() {
                g.generators.push(p.clone());
                g.register(p.clone());
                g.process_pending();
            }
        }
        g
    }

    /// Sift h through the chain; if it survives, store the stripped residue
    /// as a strong generator at every level whose base prefix it fixes.  A
    /// generator is only ever stored when it strictly extends some basic
    /// orbit (or creates a new level), which bounds the total work.
    fn register(&mut self, h: Permutation) {
        let mut w = h;
        let mut level = 0;
        loop {
            if w.is_identity() {
                return;
            }
            if level == self.levels.len() {
                let base = w.smallest_moved_point().unwrap();
                self.levels.push(Level::new(base, self.degree));
            }
            let lv = &self.levels[level];
            let img = w.apply(lv.base);
            if img == lv.base {
                level += 1;
                continue;
            }
            if lv.in_orbit(img) {
                w = lv.strip(w);
                // strip leaves the base fixed; continue at the next level
                level += 1;
                continue;
            }
            // New strong generator: it fixes the bases of levels < `level`
            // and moves this base out of the current orbit.  It belongs to
            // the generating set of every level up to and including this one.
            for l in 0..=level {
                self.levels[l].add_gen(w.clone());
            }
            return;
        }
    }

    /// Work through queued Schreier pairs (shallowest level first); each
    /// residue that does not sift to the identity becomes a strong generator.
    fn process_pending(&mut self) {
        loop {
            let Some(level) = (0..self.levels.len())
                .find(|&l| !self.levels[l].pending.is_empty())
            else {
                return;
            };
            let (pos, gidx) = self.levels[level].pending.pop_front().unwrap();
            let lv = &self.levels[level];
            let point = lv.orbit[pos as usize];
            let s = &lv.gens[gidx as usize];
            // Tree edges give the identity Schreier generator; skip them.
            let img = s.apply(point);
            let j = lv.schreier[img as usize];
            if j >= 0 && &lv.labels[j as usize] == s && lv.labels_inv[j as usize].apply(img) == point {
                continue;
            }
            let u = lv.transversal(point);
            let w = s.compose(&u);
            let residue = lv.strip(w);
            self.register(residue);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        // Level 0 carries every strong generator (deeper levels hold subsets).
        self.levels.first().map_or(Vec::new(), |l| l.gens.clone())
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn order_factored(&self) -> FactoredInteger {
        FactoredInteger::factor(self.order())
    }

    /// Sift p through the chain; the residue is the identity iff p is a member.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        assert_eq!(p.degree(), self.degree, "degree mismatch");
        let mut w = p.clone();
        for lv in &self.levels {
            let img = w.apply(lv.base);
            if !lv.in_orbit(img) {
                return w;
            }
            w = lv.strip(w);
        }
        w
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(p).is_identity()
    }

    /// Orbit of a point under the original generators, in BFS discovery order.
    pub fn orbit(&self, point: u32) -> Vec<u32> {
        assert!((point as usize) < self.degree, "point out of range");
        orbit_of(&self.generators, self.degree, point)
    }

    /// All orbits on the permutation domain, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// The stabilizer of a point, as a group in its own right.
    pub fn stabilizer(&self, point: u32) -> PermutationGroup {
        assert!((point as usize) < self.degree, "point out of range");
        let rebased = PermutationGroup::with_base_hint(&self.generators, self.degree, &[point]);
        // Strong generators fixing the first base point generate its stabilizer.
        let gens = rebased.levels.get(1).map_or(Vec::new(), |l| l.gens.clone());
        PermutationGroup::from_generators(&gens, self.degree)
    }

    /// True iff every point stabilizer is trivial, i.e. every orbit has
    /// length |G|.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    /// Smallest normal subgroup of self containing the given elements.
    pub fn normal_closure(&self, h_gens: &[Permutation]) -> PermutationGroup {
        for h in h_gens {
            assert!(self.contains(h), "element not in the ambient group");
        }
        let gens: Vec<Permutation> = h_gens.iter().filter(|h| !h.is_identity()).cloned().collect();
        let mut n = PermutationGroup::from_generators(&gens, self.degree);
        let mut queue: VecDeque<Permutation> = gens.into_iter().collect();
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let c = x.conjugate_by(g);
                if !n.contains(&c) {
                    n.add_generator(c.clone());
                    queue.push_back(c);
                }
            }
        }
        n
    }

    /// Extend the group by one more generator, updating the chain in place.
    pub fn add_generator(&mut self, p: Permutation) {
        assert_eq!(p.degree(), self.degree, "generator degree mismatch");
        if !p.is_identity() {
            self.generators.push(p.clone());
            self.register(p);
            self.process_pending();
        }
    }

    /// True iff conjugating every generator of n by every generator of self
    /// stays inside n (sufficient when n <= self).
    pub fn normalizes(&self, n: &PermutationGroup) -> bool {
        self.generators.iter().all(|g| {
            n.generators
                .iter()
                .all(|x| n.contains(&x.conjugate_by(g)))
        })
    }

    /// Visit every group element exactly once (identity included).
    /// Cost is one O(degree) composition per element; intended for |G| <= ~10^6.
    pub fn for_each_element(&self, f: &mut dyn FnMut(&Permutation)) {
        // Deeper levels have small orbits; cache their transversals and
        // stream the (possibly large) top-level transversal from its tree.
        let deep: Vec<Vec<Permutation>> = self
            .levels
            .iter()
            .skip(1)
            .map(|l| l.orbit.iter().map(|&p| l.transversal(p)).collect())
            .collect();
        fn rec(
            deep: &[Vec<Permutation>],
            level: usize,
            current: &Permutation,
            f: &mut dyn FnMut(&Permutation),
        ) {
            if level == deep.len() {
                f(current);
                return;
            }
            for u in &deep[level] {
                rec(deep, level + 1, &current.compose(u), f);
            }
        }
        if self.levels.is_empty() {
            f(&Permutation::identity(self.degree));
            return;
        }
        // DFS over the top-level Schreier tree, composing one label per edge.
        let top = &self.levels[0];
        let kids = top.children();
        let mut stack: Vec<(u32, usize, Permutation)> = Vec::new();
        let id = Permutation::identity(self.degree);
        rec(&deep, 0, &id, f);
        stack.push((top.base, 0, id));
        while let Some((p, k, u)) = stack.pop() {
            if k < kids[p as usize].len() {
                let q = kids[p as usize][k];
                stack.push((p, k + 1, u.clone()));
                let j = top.schreier[q as usize] as usize;
                let uq = top.labels[j].compose(&u);
                rec(&deep, 0, &uq, f);
                stack.push((q, 0, uq));
            }
        }
    }

    /// Uniformly random element given the chain (random transversal product).
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for lv in &self.levels {
            let p = lv.orbit[rng.gen_range(0..lv.orbit.len())];
            g = g.compose(&lv.transversal(p));
        }
        g
    }

    /// Multiset of element orders, sorted; only sensible for small groups.
    pub fn element_orders(&self) -> Vec<u64> {
        let mut orders = Vec::new();
        self.for_each_element(&mut |p| orders.push(p.order()));
        orders.sort_unstable();
        orders
    }
}

/// Orbit of a point under a generating set (no chain required).
pub fn orbit_of(gens: &[Permutation], degree: usize, point: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    let mut orbit = vec![point];
    seen[point as usize] = true;
    let mut i = 0;
    while i < orbit.len() {
        let p = orbit[i];
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
            }
        }
        i += 1;
    }
    orbit
}

pub fn orbits_of(gens: &[Permutation], degree: usize) -> Vec<Vec<u32>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree as u32 {
        if !assigned[p as usize] {
            let orbit = orbit_of(gens, degree, p);
            for &q in &orbit {
                assigned[q as usize] = true;
            }
            out.push(orbit);
        }
    }
    out
}

pub struct CosetAction {
    /// The induced permutation group on coset indices.
    pub action: PermutationGroup,
    /// Coset representatives; coset i is reps[i]∘H.
    pub reps: Vec<Permutation>,
    /// True iff the action preserves the full group order (trivial core).
    pub faithful: bool,
}

/// Action of g on the cosets of the subgroup generated by h_gens.
/// Coset x∘H maps to (g∘x)∘H; two cosets are equal iff y⁻¹∘x ∈ H.
pub fn coset_action(g: &PermutationGroup, h_gens: &[Permutation]) -> CosetAction {
    for h in h_gens {
        assert!(g.contains(h), "subgroup generator not in the group");
    }
    let h = PermutationGroup::from_generators(h_gens, g.degree());
    let index = (g.order() / h.order()) as usize;
    let mut reps: Vec<Permutation> = vec![Permutation::identity(g.degree())];
    let find = |reps: &[Permutation], x: &Permutation| -> Option<usize> {
        reps.iter()
            .position(|r| h.contains(&r.inverse().compose(x)))
    };
    let mut i = 0;
    while i < reps.len() {
        for gen in g.generators() {
            let x = gen.compose(&reps[i]);
            if find(&reps, &x).is_none() {
                reps.push(x);
            }
        }
        i += 1;
    }
    assert_eq!(reps.len(), index, "coset enumeration disagrees with index");
    let mut images: Vec<Permutation> = Vec::new();
    for gen in g.generators() {
        let img: Vec<u32> = reps
            .iter()
            .map(|r| find(&reps, &gen.compose(r)).unwrap() as u32)
            .collect();
        images.push(Permutation::from_images(img));
    }
    let action = PermutationGroup::from_generators(&images, index.max(1));
    let faithful = action.order() == g.order();
    CosetAction {
        action,
        reps,
        faithful,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Completeness {
    Exhaustive,
    Sampled,
}

/// How many consecutive uninformative samples end the randomized search.
pub const DEFAULT_STABLE_SAMPLES: usize = 64;

const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

fn perm_hash(p: &Permutation) -> (u64, u64) {
    let mut h1 = DefaultHasher::new();
    p.images().hash(&mut h1);
    let mut h2 = DefaultHasher::new();
    0xabcdefu64.hash(&mut h2);
    p.images().hash(&mut h2);
    (h1.finish(), h2.finish())
}

/// Lexicographically smallest generator of the cyclic group <y>, y of prime
/// order p.  Two cyclic subgroups are equal iff their canonical generators are.
fn canonical_cyclic_generator(y: &Permutation, p: u64) -> Permutation {
    let mut best = y.clone();
    let mut cur = y.clone();
    for _ in 2..p {
        cur = cur.compose(y);
        if cur.images() < best.images() {
            best = cur.clone();
        }
    }
    best
}

/// All minimal normal subgroups of g, via normal closures of prime-order
/// cyclic subgroups (one closure per conjugacy class of such subgroups).
/// Exhaustive for |g| <= 10^6; otherwise seeded random sampling that stops
/// after `stable_target` consecutive samples discover nothing new.  Every
/// returned subgroup is verified normal either way, so a witness is always
/// genuine; sampling may only miss subgroups (reported via Completeness).
pub fn minimal_normal_subgroups(
    g: &PermutationGroup,
    seed: u64,
    stable_target: usize,
) -> (Vec<PermutationGroup>, Completeness) {
    assert!(g.order() > 1, "trivial group has no minimal normal subgroups");
    let (closures, completeness) = if g.order() <= EXHAUSTIVE_LIMIT {
        (prime_closures_exhaustive(g), Completeness::Exhaustive)
    } else {
        (
            prime_closures_sampled(g, seed, stable_target),
            Completeness::Sampled,
        )
    };
    // Keep the containment-minimal closures.
    let mut minimal: Vec<PermutationGroup> = Vec::new();
    for (i, c) in closures.iter().enumerate() {
        let dominated = closures.iter().enumerate().any(|(j, d)| {
            j != i
                && d.order() < c.order()
                && d.generators().iter().all(|x| c.contains(x))
        });
        if !dominated
            && !minimal
                .iter()
                .any(|m| m.order() == c.order() && c.generators().iter().all(|x| m.contains(x)))
        {
            minimal.push(PermutationGroup::from_generators(c.generators(), g.degree()));
        }
    }
    for m in &minimal {
        debug_assert!(g.normalizes(m));
    }
    minimal.sort_by_key(|m| m.order());
    (minimal, completeness)
}

/// Canonical generators of all prime-order cyclic subgroups, deduplicated.
fn prime_closures_exhaustive(g: &PermutationGroup) -> Vec<PermutationGroup> {
    let mut seen_elements: HashSet<(u64, u64)> = HashSet::new();
    let mut reps: Vec<(Permutation, u64)> = Vec::new();
    let mut seen_reps: HashSet<(u64, u64)> = HashSet::new();
    g.for_each_element(&mut |e| {
        if e.is_identity() {
            return;
        }
        let k = e.order();
        for (p, _) in FactoredInteger::factor(k as u128).factors() {
            let y = e.pow(k / p);
            if !seen_elements.insert(perm_hash(&y)) {
                continue;
            }
            // Mark the whole cyclic subgroup as seen while canonicalizing.
            let mut best = y.clone();
            let mut cur = y.clone();
            for _ in 2..*p {
                cur = cur.compose(&y);
                seen_elements.insert(perm_hash(&cur));
                if cur.images() < best.images() {
                    best = cur.clone();
                }
            }
            if seen_reps.insert(perm_hash(&best)) {
                reps.push((best, *p));
            }
        }
    });

    // One normal closure per conjugacy class of cyclic subgroups: conjugate
    // subgroups have the same (normal) closure, so mark each class by a BFS
    // over conjugation once a representative's closure is computed.
    let mut processed: HashSet<(u64, u64)> = HashSet::new();
    let mut closures: Vec<PermutationGroup> = Vec::new();
    for (rep, p) in &reps {
        let key = perm_hash(rep);
        if processed.contains(&key) {
            continue;
        }
        closures.push(g.normal_closure(std::slice::from_ref(rep)));
        let mut queue = vec![rep.clone()];
        processed.insert(key);
        while let Some(z) = queue.pop() {
            for gen in g.generators() {
                let c = canonical_cyclic_generator(&z.conjugate_by(gen), *p);
                if processed.insert(perm_hash(&c)) {
                    queue.push(c);
                }
            }
        }
    }
    closures
}

fn prime_closures_sampled(
    g: &PermutationGroup,
    seed: u64,
    stable_target: usize,
) -> Vec<PermutationGroup> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut seen_reps: HashSet<(u64, u64)> = HashSet::new();
    let mut closures: Vec<PermutationGroup> = Vec::new();
    let mut stable = 0usize;
    while stable < stable_target {
        let e = g.random_element(&mut rng);
        if e.is_identity() {
            stable += 1;
            continue;
        }
        let mut informative = false;
        let k = e.order();
        for (p, _) in FactoredInteger::factor(k as u128).factors() {
            let y = canonical_cyclic_generator(&e.pow(k / p), *p);
            if !seen_reps.insert(perm_hash(&y)) {
                continue;
            }
            let c = g.normal_closure(std::slice::from_ref(&y));
            let known = closures.iter().any(|d| {
                d.order() == c.order() && c.generators().iter().all(|x| d.contains(x))
            });
            if !known {
                closures.push(c);
                informative = true;
            }
        }
        if informative {
            stable = 0;
        } else {
            stable += 1;
        }
    }
    closures
}

/// Parse a group file: a `degree k` header line, then k permutation lines
/// (space-separated image lists, 0-based).
pub fn parse_group_file(text: &str) -> Result<(Vec<Permutation>, usize), String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty group file")?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        return Err("group file header must be `degree k`".into());
    }
    let degree: usize = parts[0]
        .parse()
        .map_err(|e| format!("bad degree: {e}"))?;
    let count: usize = parts[1]
        .parse()
        .map_err(|e| format!("bad generator count: {e}"))?;
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let line = lines.next().ok_or("fewer permutation lines than the header promises")?;
        let p = Permutation::parse(line)?;
        if p.degree() != degree {
            return Err(format!(
                "permutation of degree {} in a degree-{} group file",
                p.degree(),
                degree
            ));
        }
        gens.push(p);
    }
    if lines.next().is_some() {
        return Err("more permutation lines than the header promises".into());
    }
    Ok((gens, degree))
}

pub fn format_group_file(gens: &[Permutation], degree: usize) -> String {
    let mut out = format!("{} {}\n", degree, gens.len());
    for g in gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
