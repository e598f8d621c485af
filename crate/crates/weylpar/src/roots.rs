//! Exact root systems and Weyl-group elements.
//!
//! Roots are integer vectors in simple-root coordinates; group elements are
//! permutations of the full root list. Everything is exact and immutable
//! after construction.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;

use crate::cartan::{CartanFamily, CartanType};
use crate::diagram;
use crate::error::{Error, Result};
use crate::perm::Perm;

type Rat = Ratio<i64>;

/// The largest rank for which root systems are materialized. Subset bitmasks
/// and permutation indices are sized for this.
pub const MAX_RANK: usize = 32;

/// A subset of the simple-root indices `0..rank`, stored as a bitset.
///
/// Human-readable formatting uses 1-based node numbers to match the
/// documented diagram numbering; the API itself is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetJ(u32);

impl SubsetJ {
    pub fn empty() -> SubsetJ {
        SubsetJ(0)
    }

    pub fn full(rank: usize) -> SubsetJ {
        debug_assert!(rank <= MAX_RANK);
        if rank == 32 {
            SubsetJ(u32::MAX)
        } else {
            SubsetJ((1u32 << rank) - 1)
        }
    }

    pub fn from_bits(bits: u32) -> SubsetJ {
        SubsetJ(bits)
    }

    /// Builds a subset from 0-based node indices, validating against `rank`.
    pub fn from_indices(indices: &[usize], rank: usize) -> Result<SubsetJ> {
        let mut bits = 0u32;
        for &i in indices {
            if i >= rank {
                return Err(Error::InvalidSubset(format!(
                    "node {} out of range for rank {}",
                    i + 1,
                    rank
                )));
            }
            bits |= 1 << i;
        }
        Ok(SubsetJ(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1u32 << i) != 0
    }

    pub fn with(self, i: usize) -> SubsetJ {
        SubsetJ(self.0 | (1u32 << i))
    }

    pub fn union(self, other: SubsetJ) -> SubsetJ {
        SubsetJ(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: SubsetJ) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1u32 << i) != 0)
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", indices.join(","))
    }
}

/// A Weyl-group element: a permutation of the full root list plus a word in
/// the simple reflections (reduced when produced by `longest_element`).
///
/// Elements compare equal exactly when they agree on the simple roots; this
/// is faithful since the root permutation is linear over the coordinates.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    perm: Perm,
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.perm.images()[..self.rank] == other.perm.images()[..other.rank]
    }
}
impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.images()[..self.rank].hash(state);
    }
}

impl WeylElement {
    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// The word in simple-reflection indices, leftmost factor first.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn order(&self) -> u64 {
        self.perm.order()
    }

    pub fn is_involution(&self) -> bool {
        !self.perm.is_identity() && self.perm.compose(&self.perm).is_identity()
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let nu = self.perm.degree() / 2;
        (0..nu)
            .filter(|&i| self.perm.apply(i as u16) as usize >= nu)
            .count()
    }

    /// Group product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        debug_assert_eq!(self.rank, other.rank);
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            rank: self.rank,
            perm: self.perm.compose(&other.perm),
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            perm: self.perm.inverse(),
            word: self.word.iter().rev().copied().collect(),
        }
    }
}

/// Length class of a root within its irreducible component. Simply-laced
/// components have only long roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootLength {
    Long,
    Short,
}

/// A crystallographic root system with its Weyl-group machinery.
pub struct RootSystem {
    ty: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    norm2: Vec<i64>,
    /// All roots: positives `0..nu` (simple roots first), then their
    /// negatives at `i + nu`.
    roots: Vec<Vec<i16>>,
    nu: usize,
    index: HashMap<Vec<i16>, u16>,
    simple_refl: Vec<Perm>,
    /// Support bitmask of each positive root.
    support: Vec<u32>,
}

impl RootSystem {
    /// Builds the root system of a canonical Cartan type by closing the
    /// simple roots under the simple reflections.
    pub fn new(ty: &CartanType) -> Result<RootSystem> {
        let rank = ty.rank();
        if rank > MAX_RANK {
            return Err(Error::InvalidType {
                input: ty.to_string(),
                reason: format!("rank {rank} exceeds the supported maximum {MAX_RANK}"),
            });
        }
        let (cartan, norm2) = assemble_cartan(ty);

        // Closure of the simple roots under all simple reflections, keeping
        // only positive roots.
        let mut set: HashMap<Vec<i16>, ()> = HashMap::new();
        let mut frontier: Vec<Vec<i16>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i16; rank];
            v[i] = 1;
            set.insert(v.clone(), ());
            frontier.push(v);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for j in 0..rank {
                    let s = reflect(r, j, &cartan);
                    if s.iter().all(|&c| c >= 0) && !set.contains_key(&s) {
                        set.insert(s.clone(), ());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }

        // Deterministic ordering: root i = simple root i for i < rank, then
        // the higher roots by height and lexicographic coordinates. The
        // simple-roots-first layout is what makes images of the points
        // 0..rank a faithful compact encoding of a group element.
        let mut higher: Vec<Vec<i16>> = set
            .into_keys()
            .filter(|r| r.iter().map(|&c| c as i32).sum::<i32>() > 1)
            .collect();
        higher.sort_by_key(|r| {
            let height: i32 = r.iter().map(|&c| c as i32).sum();
            (height, r.clone())
        });
        let mut positives: Vec<Vec<i16>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i16; rank];
                v[i] = 1;
                v
            })
            .collect();
        positives.extend(higher);
        let nu = positives.len();
        debug_assert_eq!(nu as u64, ty.positive_root_count());

        let mut roots = positives;
        for i in 0..nu {
            let neg: Vec<i16> = roots[i].iter().map(|&c| -c).collect();
            roots.push(neg);
        }
        let index: HashMap<Vec<i16>, u16> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i as u16))
            .collect();

        let simple_refl: Vec<Perm> = (0..rank)
            .map(|j| {
                let images: Vec<u16> = roots
                    .iter()
                    .map(|r| index[&reflect(r, j, &cartan)])
                    .collect();
                Perm::from_images(images).expect("reflection permutes the roots")
            })
            .collect();

        let support: Vec<u32> = roots[..nu]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != 0)
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();

        Ok(RootSystem {
            ty: ty.clone(),
            rank,
            cartan,
            norm2,
            roots,
            nu,
            index,
            simple_refl,
            support,
        })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_count(&self) -> usize {
        self.nu
    }

    /// Total number of roots (degree of the permutation representation).
    pub fn degree(&self) -> usize {
        2 * self.nu
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length of a simple root (1, 2 or 3; short roots have 1 except
    /// in simply-laced components where every root has 2).
    pub fn simple_norm2(&self, i: usize) -> i64 {
        self.norm2[i]
    }

    /// Invariant bilinear form on simple roots.
    pub fn gram(&self, i: usize, j: usize) -> Rat {
        Ratio::new(self.cartan[i][j] * self.norm2[j], 2)
    }

    /// Squared length of any root under the invariant form.
    pub fn root_norm2(&self, idx: usize) -> Rat {
        let r = &self.roots[idx];
        let mut acc = Rat::from_integer(0);
        for (a, &ca) in r.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (b, &cb) in r.iter().enumerate() {
                if cb != 0 {
                    acc += Rat::from_integer(ca as i64 * cb as i64) * self.gram(a, b);
                }
            }
        }
        acc
    }

    /// Long/short classification of a root, relative to the maximal length
    /// in the irreducible component carrying it.
    pub fn root_length(&self, idx: usize) -> RootLength {
        let support: Vec<usize> = self.roots[idx]
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect();
        // All nodes of a root's support lie in one component; take the
        // maximal node norm reachable from the first support node.
        let mut comp = vec![support[0]];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in 0..self.rank {
                if !comp.contains(&v) && self.cartan[u][v] != 0 && u != v {
                    comp.push(v);
                }
            }
        }
        let max_norm = comp.iter().map(|&i| self.norm2[i]).max().unwrap();
        if self.root_norm2(idx) == Rat::from_integer(max_norm) {
            RootLength::Long
        } else {
            RootLength::Short
        }
    }

    pub fn root(&self, idx: usize) -> &[i16] {
        &self.roots[idx]
    }

    pub fn index_of(&self, coords: &[i16]) -> Option<u16> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.nu
    }

    pub fn simple_reflection_perm(&self, j: usize) -> &Perm {
        &self.simple_refl[j]
    }

    /// Bond order between two distinct nodes (2, 3, 4 or 6).
    pub fn bond_order(&self, i: usize, j: usize) -> u32 {
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => unreachable!("off-diagonal Cartan product {p}"),
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            perm: Perm::identity(self.degree()),
            word: Vec::new(),
        }
    }

    pub fn simple_reflection(&self, j: usize) -> WeylElement {
        WeylElement {
            rank: self.rank,
            perm: self.simple_refl[j].clone(),
            word: vec![j as u8],
        }
    }

    /// `w * s_j`.
    pub fn right_mul_simple(&self, w: &WeylElement, j: usize) -> WeylElement {
        let mut word = w.word.clone();
        word.push(j as u8);
        WeylElement {
            rank: self.rank,
            perm: w.perm.compose(&self.simple_refl[j]),
            word,
        }
    }

    pub fn element_from_perm(&self, perm: Perm, word: Vec<u8>) -> WeylElement {
        WeylElement {
            rank: self.rank,
            perm,
            word,
        }
    }

    /// Number of reflections of the parabolic subgroup `W_J`: positive roots
    /// supported inside `J`.
    pub fn nu_of(&self, j: SubsetJ) -> u64 {
        self.support
            .iter()
            .filter(|&&m| SubsetJ::from_bits(m).is_subset_of(j))
            .count() as u64
    }

    /// Longest element of the parabolic `W_J`, built greedily by appending
    /// the lowest-index generator that still increases the length.
    pub fn longest_element(&self, j: SubsetJ) -> WeylElement {
        let mut w = self.identity();
        loop {
            let next = j
                .iter()
                .find(|&k| (w.perm.apply(k as u16) as usize) < self.nu);
            match next {
                Some(k) => w = self.right_mul_simple(&w, k),
                None => return w,
            }
        }
    }

    /// Canonical Cartan type of the sub-diagram spanned by `J`.
    pub fn subdiagram_type(&self, j: SubsetJ) -> Result<CartanType> {
        let nodes: Vec<usize> = j.iter().collect();
        for &i in &nodes {
            if i >= self.rank {
                return Err(Error::InvalidSubset(format!(
                    "node {} out of range for rank {}",
                    i + 1,
                    self.rank
                )));
            }
        }
        diagram::identify(&nodes, &|a, b| self.bond_order(a, b), &|a| {
            Ratio::from_integer(self.norm2[a])
        })
    }

    /// Checks that `J` only uses valid node indices.
    pub fn validate_subset(&self, j: SubsetJ) -> Result<()> {
        if self.rank == 32 || j.bits() < (1u32 << self.rank) {
            Ok(())
        } else {
            Err(Error::InvalidSubset(format!(
                "subset {} out of range for rank {}",
                j, self.rank
            )))
        }
    }
}

fn reflect(coords: &[i16], j: usize, cartan: &[Vec<i64>]) -> Vec<i16> {
    let pairing: i64 = coords
        .iter()
        .enumerate()
        .map(|(i, &c)| c as i64 * cartan[i][j])
        .sum();
    let mut out = coords.to_vec();
    out[j] -= pairing as i16;
    out
}

/// Block-diagonal Cartan matrix and squared simple-root lengths for a
/// canonical type, in the documented node numbering:
/// B(n) has its double bond between n-1 and n with the short root last;
/// C(n) is the same diagram with the long root last; D(n) forks at n-2;
/// E(n) is the chain 1-3-4-...-n with node 2 joined to node 4;
/// F4 is 1-2=>3-4 with nodes 1,2 long; G2 is the triple bond 1=2.
fn assemble_cartan(ty: &CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let rank = ty.rank();
    let mut a = vec![vec![0i64; rank]; rank];
    let mut norm2 = vec![2i64; rank];
    for i in 0..rank {
        a[i][i] = 2;
    }
    let mut offset = 0usize;
    for comp in ty.components() {
        let n = comp.rank as usize;
        let single = |x: usize, y: usize, a: &mut Vec<Vec<i64>>| {
            a[offset + x][offset + y] = -1;
            a[offset + y][offset + x] = -1;
        };
        match comp.family {
            CartanFamily::A => {
                for i in 0..n - 1 {
                    single(i, i + 1, &mut a);
                }
            }
            CartanFamily::B => {
                for i in 0..n.saturating_sub(2) {
                    single(i, i + 1, &mut a);
                }
                a[offset + n - 2][offset + n - 1] = -2;
                a[offset + n - 1][offset + n - 2] = -1;
                norm2[offset + n - 1] = 1;
            }
            CartanFamily::C => {
                for i in 0..n.saturating_sub(2) {
                    single(i, i + 1, &mut a);
                }
                a[offset + n - 2][offset + n - 1] = -1;
                a[offset + n - 1][offset + n - 2] = -2;
                for i in 0..n - 1 {
                    norm2[offset + i] = 1;
                }
            }
            CartanFamily::D => {
                for i in 0..n - 3 {
                    single(i, i + 1, &mut a);
                }
                single(n - 3, n - 2, &mut a);
                single(n - 3, n - 1, &mut a);
            }
            CartanFamily::E => {
                single(0, 2, &mut a);
                single(1, 3, &mut a);
                for i in 2..n - 1 {
                    single(i, i + 1, &mut a);
                }
            }
            CartanFamily::F => {
                single(0, 1, &mut a);
                single(2, 3, &mut a);
                a[offset + 1][offset + 2] = -2;
                a[offset + 2][offset + 1] = -1;
                norm2[offset + 2] = 1;
                norm2[offset + 3] = 1;
            }
            CartanFamily::G => {
                a[offset][offset + 1] = -1;
                a[offset + 1][offset] = -3;
                norm2[offset] = 1;
                norm2[offset + 1] = 3;
            }
        }
        offset += n;
    }
    (a, norm2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(spec: &str) -> RootSystem {
        RootSystem::new(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for spec in [
            "A1", "A2", "A5", "B2", "B3", "B6", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4",
            "G2", "A2+G2", "B2+B2",
        ] {
            let system = rs(spec);
            assert_eq!(
                system.positive_count() as u64,
                system.cartan_type().positive_root_count(),
                "count mismatch for {spec}"
            );
        }
    }

    #[test]
    fn a2_positive_roots_enumerated() {
        let system = rs("A2");
        let mut roots: Vec<Vec<i16>> = (0..3).map(|i| system.root(i).to_vec()).collect();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn simple_reflections_permute_other_positives() {
        for spec in ["B3", "F4", "G2", "D4"] {
            let system = rs(spec);
            for j in 0..system.rank() {
                let s = system.simple_reflection(j);
                for i in 0..system.positive_count() {
                    let image = s.perm().apply(i as u16) as usize;
                    if i == j {
                        assert!(!system.is_positive(image));
                    } else {
                        assert!(
                            system.is_positive(image),
                            "{spec}: s_{j} sent root {i} negative"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn longest_element_properties() {
        // Brute-force-checkable small case: w0(A2) = s1 s2 s1.
        let a2 = rs("A2");
        let w0 = a2.longest_element(SubsetJ::full(2));
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.word(), &[0, 1, 0]);
        let s1s2s1 = a2
            .simple_reflection(0)
            .compose(&a2.simple_reflection(1))
            .compose(&a2.simple_reflection(0));
        assert_eq!(w0, s1s2s1);

        for spec in ["A3", "B3", "C4", "D4", "F4", "G2", "E6"] {
            let system = rs(spec);
            let full = SubsetJ::full(system.rank());
            let w0 = system.longest_element(full);
            assert_eq!(w0.length() as u64, system.nu_of(full));
            assert_eq!(w0.word().len() as u64, system.nu_of(full));
            assert!(w0.compose(&w0).is_identity(), "w0 must be an involution");
        }
    }

    #[test]
    fn longest_element_of_singleton_and_empty() {
        let system = rs("B3");
        assert!(system.longest_element(SubsetJ::empty()).is_identity());
        let w = system.longest_element(SubsetJ::from_indices(&[1], 3).unwrap());
        assert_eq!(w, system.simple_reflection(1));
    }

    #[test]
    fn nu_of_subsets() {
        let f4 = rs("F4");
        assert_eq!(f4.nu_of(SubsetJ::full(4)), 24);
        assert_eq!(f4.nu_of(SubsetJ::empty()), 0);
        // Middle double bond spans a B2.
        assert_eq!(f4.nu_of(SubsetJ::from_indices(&[1, 2], 4).unwrap()), 4);

        let e7 = rs("E7");
        let d4 = SubsetJ::from_indices(&[1, 2, 3, 4], 7).unwrap();
        assert_eq!(e7.nu_of(d4), 12);
    }

    #[test]
    fn subdiagram_types() {
        let f4 = rs("F4");
        let b3 = f4.subdiagram_type(SubsetJ::from_indices(&[0, 1, 2], 4).unwrap());
        assert_eq!(b3.unwrap().to_string(), "B3");
        let c3 = f4.subdiagram_type(SubsetJ::from_indices(&[1, 2, 3], 4).unwrap());
        assert_eq!(c3.unwrap().to_string(), "C3");

        let e7 = rs("E7");
        let e6 = e7.subdiagram_type(SubsetJ::from_indices(&[0, 1, 2, 3, 4, 5], 7).unwrap());
        assert_eq!(e6.unwrap().to_string(), "E6");

        let e8 = rs("E8");
        let d4 = e8.subdiagram_type(SubsetJ::from_indices(&[1, 2, 3, 4], 8).unwrap());
        assert_eq!(d4.unwrap().to_string(), "D4");

        // Degenerate pieces canonicalize.
        let d5 = rs("D5");
        let a3 = d5.subdiagram_type(SubsetJ::from_indices(&[2, 3, 4], 5).unwrap());
        assert_eq!(a3.unwrap().to_string(), "A3");
    }

    #[test]
    fn long_short_partition() {
        let counts = |spec: &str| {
            let system = rs(spec);
            let long = (0..system.positive_count())
                .filter(|&i| system.root_length(i) == RootLength::Long)
                .count();
            (long, system.positive_count() - long)
        };
        assert_eq!(counts("B3"), (6, 3)); // e_i +- e_j long, e_i short
        assert_eq!(counts("C3"), (3, 6)); // lengths swap relative to B3
        assert_eq!(counts("F4"), (12, 12));
        assert_eq!(counts("G2"), (3, 3));
        assert_eq!(counts("A3"), (6, 0)); // simply laced: all long
    }

    #[test]
    fn element_orders() {
        let a2 = rs("A2");
        assert_eq!(a2.identity().order(), 1);
        assert_eq!(a2.simple_reflection(0).order(), 2);
        let cox = a2.simple_reflection(0).compose(&a2.simple_reflection(1));
        assert_eq!(cox.order(), 3);
    }

    #[test]
    fn perm_preserves_negation_and_length() {
        let f4 = rs("F4");
        let w = f4.longest_element(SubsetJ::from_indices(&[0, 1, 2], 4).unwrap());
        let nu = f4.positive_count();
        for i in 0..nu {
            let img = w.perm().apply(i as u16) as usize;
            let img_neg = w.perm().apply((i + nu) as u16) as usize;
            assert_eq!((img + nu) % (2 * nu), img_neg, "negation equivariance");
            // root lengths are preserved
            let n = |idx: usize| {
                let r = f4.root(idx);
                (0..4)
                    .flat_map(|a| (0..4).map(move |b| (a, b)))
                    .map(|(a, b)| Rat::from_integer(r[a] as i64 * r[b] as i64) * f4.gram(a, b))
                    .sum::<Rat>()
            };
            assert_eq!(n(i), n(img));
        }
    }
}
