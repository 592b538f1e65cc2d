//! Permutations on the points 0..n-1, stored as image vectors.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Build from an image vector; panics if the vector is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Permutation {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!((x as usize) < n && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from disjoint cycles, e.g. `&[&[0, 1, 2]]` for a 3-cycle.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                assert_eq!(images[from], cycle[w] as u32, "cycles not disjoint");
                images[from] = to;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Composition acting left: (p ∘ q)(i) = p(q(i)).
    pub fn compose(&self, q: &Permutation) -> Permutation {
        assert_eq!(self.degree(), q.degree(), "degree mismatch");
        Permutation {
            images: q.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Conjugate self by g: g ∘ self ∘ g⁻¹.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base.clone());
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Space-separated image list, the text form used in group files.
    pub fn parse(text: &str) -> Result<Permutation, String> {
        let images: Result<Vec<u32>, _> = text.split_whitespace().map(|t| t.parse()).collect();
        let images = images.map_err(|e| format!("bad permutation entry: {e}"))?;
        if images.is_empty() {
            return Err("empty permutation line".into());
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err("image list is not a bijection".into());
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

/// Debug shows cycle notation, which is easier to eyeball in test failures.
impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_follows_right_then_left() {
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]);
        let cc = c.compose(&c);
        assert_eq!(cc, Permutation::from_cycles(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn identity_and_inverse() {
        let p = Permutation::from_images(vec![2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&p), p);
        assert_eq!(p.compose(&p.inverse()), id);
        assert_eq!(p.inverse().compose(&p), id);
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths() {
        let p = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]);
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(5).order(), 1);
    }

    #[test]
    fn text_round_trip() {
        let p = Permutation::from_images(vec![1, 0, 2]);
        assert_eq!(p.to_string(), "1 0 2");
        assert_eq!(Permutation::parse("1 0 2").unwrap(), p);
        assert!(Permutation::parse("1 1 2").is_err());
        assert!(Permutation::parse("3 0 1").is_err());
    }

    #[test]
    fn pow_matches_repeated_composition() {
        let p = Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        let mut q = Permutation::identity(7);
        for e in 0..10u64 {
            assert_eq!(p.pow(e), q);
            q = p.compose(&q);
        }
    }
}
