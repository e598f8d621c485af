//! Dense permutations of `[0, degree)` stored as image arrays.

use num_integer::Integer;

/// A permutation, `i -> perm[i]`. Degrees stay below `u16::MAX` everywhere in
/// this crate (the largest ambient root list handled is well under 1000).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// Multiplicative order, via the lcm of cycle lengths.
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
            ord = ord.lcm(&len);
        }
        ord
    }

    /// Cycle notation on 1-based points, fixed points omitted; identity is `()`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.images.len()];
        let mut out = String::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_order() {
        let a = Perm::from_images(vec![1, 2, 0]).unwrap(); // 3-cycle
        let b = Perm::from_images(vec![1, 0, 2]).unwrap(); // transposition
        assert_eq!(a.order(), 3);
        assert_eq!(b.order(), 2);
        assert_eq!(Perm::identity(3).order(), 1);
        // compose applies the right factor first
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), a.apply(b.apply(0)));
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_none());
        assert!(Perm::from_images(vec![0, 3]).is_none());
    }

    #[test]
    fn cycle_notation_matches() {
        let a = Perm::from_images(vec![1, 2, 0, 3, 5, 4]).unwrap();
        assert_eq!(a.cycle_notation(), "(1 2 3)(5 6)");
        assert_eq!(Perm::identity(4).cycle_notation(), "()");
    }
}
