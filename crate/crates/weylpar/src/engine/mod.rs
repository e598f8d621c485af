//! Generic exact finite-group computations over permutation generators:
//! breadth-first enumeration, conjugacy classes, centralizers, character
//! tables, and the set of pairs (class representative, irreducible of its
//! centralizer).
//!
//! Elements are stored as compact keys: the images of a fixed base. For Weyl
//! groups the base is the set of simple roots (the rest of the root
//! permutation is recovered linearly); for generic permutation groups the
//! base is every point. Stores are immutable once built and all queries are
//! read-only.

pub mod chartab;
pub mod cyclotomic;

use std::collections::HashMap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::roots::RootSystem;

/// Default cap for full element enumeration.
pub const DEFAULT_ENUM_BOUND: u64 = 3_000_000;
/// Opt-in cap for the heavy jobs.
pub const HEAVY_ENUM_BOUND: u64 = 1_000_000_000;
/// Default cap for character-table computations.
pub const DEFAULT_TABLE_BOUND: u64 = 20_000;

/// Maximum base length of an element key.
pub const MAX_BASE: usize = 24;

/// Compact element encoding: images of the base points, zero-padded.
pub type Key = [u8; MAX_BASE];

#[derive(Debug, Clone)]
enum Decoder {
    /// The base is every point; a key is the whole image array.
    Direct,
    /// Root permutation determined linearly by the simple-root images.
    Linear {
        rank: usize,
        coords: Vec<Vec<i16>>,
        index: HashMap<Vec<i16>, u16>,
    },
}

/// A finite permutation group given by generators.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    base_len: usize,
    generators: Vec<Perm>,
    decoder: Decoder,
    known_order: Option<u128>,
}

impl FiniteGroup {
    /// A generic permutation group on `degree` points (at most [`MAX_BASE`]).
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<FiniteGroup> {
        if degree > MAX_BASE {
            return Err(Error::InvalidGroup(format!(
                "degree {degree} exceeds the supported maximum {MAX_BASE} for generic groups"
            )));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidGroup(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(FiniteGroup {
            degree,
            base_len: degree,
            generators,
            decoder: Decoder::Direct,
            known_order: None,
        })
    }

    /// The full Weyl group of a root system, acting on the roots.
    pub fn weyl(rs: &RootSystem) -> Result<FiniteGroup> {
        let gens = (0..rs.rank())
            .map(|j| rs.simple_reflection_perm(j).clone())
            .collect();
        Self::weyl_subgroup(rs, gens, rs.cartan_type().weyl_order())
    }

    /// A subgroup of a Weyl group given by root-permutation generators.
    pub fn weyl_subgroup(
        rs: &RootSystem,
        generators: Vec<Perm>,
        known_order: Option<u128>,
    ) -> Result<FiniteGroup> {
        if rs.rank() > MAX_BASE {
            return Err(Error::InvalidGroup(format!(
                "rank {} exceeds the supported base length {MAX_BASE}",
                rs.rank()
            )));
        }
        let coords: Vec<Vec<i16>> = (0..rs.degree()).map(|i| rs.root(i).to_vec()).collect();
        let index: HashMap<Vec<i16>, u16> = coords
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i as u16))
            .collect();
        Ok(FiniteGroup {
            degree: rs.degree(),
            base_len: rs.rank(),
            generators,
            decoder: Decoder::Linear {
                rank: rs.rank(),
                coords,
                index,
            },
            known_order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn known_order(&self) -> Option<u128> {
        self.known_order
    }

    /// Encodes a full permutation as a key.
    pub fn encode(&self, p: &Perm) -> Key {
        let mut key = [0u8; MAX_BASE];
        for b in 0..self.base_len {
            key[b] = p.apply(b as u16) as u8;
        }
        key
    }

    /// Reconstructs the full permutation from a key.
    pub fn decode(&self, key: &Key) -> Perm {
        match &self.decoder {
            Decoder::Direct => {
                Perm::from_images(key[..self.base_len].iter().map(|&x| x as u16).collect())
                    .expect("store keys are valid permutations")
            }
            Decoder::Linear {
                rank,
                coords,
                index,
            } => {
                let mut images = Vec::with_capacity(self.degree);
                let mut scratch = vec![0i16; *rank];
                for r in 0..self.degree {
                    for s in scratch.iter_mut() {
                        *s = 0;
                    }
                    for (i, &c) in coords[r].iter().enumerate() {
                        if c != 0 {
                            let img = &coords[key[i] as usize];
                            for (s, &v) in scratch.iter_mut().zip(img.iter()) {
                                *s += c * v;
                            }
                        }
                    }
                    images.push(index[&scratch]);
                }
                Perm::from_images(images).expect("linear extension is a permutation")
            }
        }
    }

    /// Breadth-first closure of the generators. Fails fast when the group
    /// order is known to exceed `bound`.
    pub fn enumerate(&self, bound: u64) -> Result<ElementStore> {
        if let Some(order) = self.known_order {
            if order > bound as u128 {
                return Err(Error::BoundExceeded {
                    needed: order,
                    bound: bound as u128,
                });
            }
        }
        if self.degree > 256 {
            return Err(Error::InvalidGroup(format!(
                "degree {} exceeds the 256-point key limit for enumeration",
                self.degree
            )));
        }
        // Precomputed generator images of the base points for the
        // right-multiplication step.
        let gen_base: Vec<Vec<u16>> = self
            .generators
            .iter()
            .map(|g| (0..self.base_len).map(|b| g.apply(b as u16)).collect())
            .collect();

        // Short bases fit one machine word per element, which matters at the
        // multi-million-element scale.
        let keys = if self.base_len <= 8 {
            KeyStore::Narrow(self.bfs(bound, &gen_base, pack_narrow, unpack_narrow)?)
        } else {
            KeyStore::Wide(self.bfs(bound, &gen_base, |k| *k, |k| *k)?)
        };
        Ok(ElementStore {
            base_len: self.base_len,
            keys,
        })
    }

    fn bfs<K: Copy + Eq + std::hash::Hash + Ord>(
        &self,
        bound: u64,
        gen_base: &[Vec<u16>],
        pack: impl Fn(&Key) -> K,
        unpack: impl Fn(&K) -> Key,
    ) -> Result<Vec<K>> {
        let identity = pack(&self.encode(&Perm::identity(self.degree)));
        // Reserving from the closed-form order avoids reallocation spikes
        // (table doubling briefly holds two copies) during the largest runs.
        let capacity = self.known_order.map(|o| o as usize).unwrap_or(0);
        let mut seen: HashSet<K> = HashSet::with_capacity(capacity);
        seen.insert(identity);
        let mut elements: Vec<K> = Vec::with_capacity(capacity);
        elements.push(identity);
        let mut head = 0usize;
        while head < elements.len() {
            let key = unpack(&elements[head]);
            head += 1;
            let perm = self.decode(&key);
            for images in gen_base {
                let mut child = [0u8; MAX_BASE];
                for (b, &point) in images.iter().enumerate() {
                    child[b] = perm.apply(point) as u8;
                }
                if seen.insert(pack(&child)) {
                    if elements.len() as u64 >= bound {
                        return Err(Error::BoundExceeded {
                            needed: elements.len() as u128 + 1,
                            bound: bound as u128,
                        });
                    }
                    elements.push(pack(&child));
                }
            }
        }
        drop(seen);
        elements.sort_unstable();
        Ok(elements)
    }

    /// Conjugacy classes by orbit partition under generator conjugation.
    /// Classes are ordered by (size, minimal representative); representatives
    /// are the minimal keys of their orbits.
    pub fn conjugacy_classes(&self, store: &ElementStore) -> ClassData {
        let n = store.len();
        let gen_pairs: Vec<(Perm, Vec<u16>)> = self
            .generators
            .iter()
            .map(|g| {
                let ginv = g.inverse();
                let pre: Vec<u16> = (0..self.base_len).map(|b| ginv.apply(b as u16)).collect();
                (g.clone(), pre)
            })
            .collect();

        let mut class_of: Vec<u32> = vec![u32::MAX; n];
        let mut classes: Vec<(usize, u64)> = Vec::new(); // (rep position, size)
        let mut frontier: Vec<Key> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut size = 1u64;
            frontier.clear();
            frontier.push(store.key(start));
            while let Some(key) = frontier.pop() {
                let perm = self.decode(&key);
                for (g, pre) in &gen_pairs {
                    // g x g^{-1} evaluated on the base points only.
                    let mut child = [0u8; MAX_BASE];
                    for (b, &point) in pre.iter().enumerate() {
                        child[b] = g.apply(perm.apply(point)) as u8;
                    }
                    let pos = store
                        .position(&child)
                        .expect("conjugate stays in the group");
                    if class_of[pos] == u32::MAX {
                        class_of[pos] = id;
                        size += 1;
                        frontier.push(child);
                    }
                }
            }
            classes.push((start, size));
        }

        // Reorder classes by (size, representative key) and remap.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (classes[c].1, store.key(classes[c].0)));
        let mut remap = vec![0u32; classes.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            remap[old_id] = new_id as u32;
        }
        for c in class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        let classes: Vec<ConjClass> = order
            .iter()
            .map(|&old| ConjClass {
                rep_pos: classes[old].0,
                rep: store.key(classes[old].0),
                size: classes[old].1,
            })
            .collect();
        ClassData { class_of, classes }
    }

    /// Positions of all elements commuting with `x`.
    pub fn centralizer_positions(&self, store: &ElementStore, x: &Perm) -> Vec<usize> {
        let mut out = Vec::new();
        for pos in 0..store.len() {
            let z = self.decode(&store.key(pos));
            let mut commutes = true;
            for b in 0..self.base_len {
                if z.apply(x.apply(b as u16)) != x.apply(z.apply(b as u16)) {
                    commutes = false;
                    break;
                }
            }
            if commutes {
                out.push(pos);
            }
        }
        out
    }

    /// The centralizer of `x` as a group in its own right, with a greedily
    /// extracted generating set, plus its element store.
    pub fn centralizer(&self, store: &ElementStore, x: &Perm) -> (FiniteGroup, ElementStore) {
        let positions = self.centralizer_positions(store, x);
        let keys: Vec<Key> = positions.iter().map(|&p| store.key(p)).collect();
        let sub_store = ElementStore::from_keys(self.base_len, keys);
        let generators = self.greedy_generators(&sub_store);
        let group = FiniteGroup {
            degree: self.degree,
            base_len: self.base_len,
            generators,
            decoder: self.decoder.clone(),
            known_order: Some(sub_store.len() as u128),
        };
        (group, sub_store)
    }

    /// A small generating set for the subgroup whose sorted element keys are
    /// given: scan elements in key order and keep those that enlarge the
    /// generated closure.
    fn greedy_generators(&self, sub: &ElementStore) -> Vec<Perm> {
        let mut gens: Vec<Perm> = Vec::new();
        let mut closure: HashSet<Key> = HashSet::new();
        closure.insert(self.encode(&Perm::identity(self.degree)));
        for key in sub.iter() {
            if closure.contains(&key) {
                continue;
            }
            gens.push(self.decode(&key));
            closure = self.closure_keys(&gens);
            if closure.len() == sub.len() {
                break;
            }
        }
        gens
    }

    fn closure_keys(&self, gens: &[Perm]) -> HashSet<Key> {
        let mut seen = HashSet::new();
        let identity = Perm::identity(self.degree);
        seen.insert(self.encode(&identity));
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = p.compose(g);
                if seen.insert(self.encode(&q)) {
                    frontier.push(q);
                }
            }
        }
        seen
    }

    /// The pairs (conjugacy class, irreducible character of its centralizer),
    /// counted without materializing any character table. Requires every
    /// centralizer (in particular the whole group) within `table_bound`.
    pub fn m_set(&self, store: &ElementStore, table_bound: u64) -> Result<MSetReport> {
        if store.len() as u64 > table_bound {
            return Err(Error::BoundExceeded {
                needed: store.len() as u128,
                bound: table_bound as u128,
            });
        }
        let class_data = self.conjugacy_classes(store);
        let mut entries = Vec::new();
        let mut total: u128 = 0;
        for class in &class_data.classes {
            let x = self.decode(&class.rep);
            let (zg, zstore) = self.centralizer(store, &x);
            debug_assert_eq!(zstore.len() as u64 * class.size, store.len() as u64);
            let z_classes = zg.conjugacy_classes(&zstore);
            let irr_count = z_classes.classes.len() as u64;
            total += irr_count as u128;
            entries.push(MSetEntry {
                class_rep: class.rep,
                class_size: class.size,
                centralizer_order: zstore.len() as u64,
                irr_count,
            });
        }
        Ok(MSetReport { entries, total })
    }
}

/// Big-endian packing of a short key into one word; preserves the
/// lexicographic order of the underlying byte arrays.
fn pack_narrow(key: &Key) -> u64 {
    u64::from_be_bytes(key[..8].try_into().unwrap())
}

fn unpack_narrow(v: &u64) -> Key {
    let mut key = [0u8; MAX_BASE];
    key[..8].copy_from_slice(&v.to_be_bytes());
    key
}

#[derive(Debug, Clone)]
enum KeyStore {
    Narrow(Vec<u64>),
    Wide(Vec<Key>),
}

/// The sorted element store of an enumerated group.
#[derive(Debug, Clone)]
pub struct ElementStore {
    base_len: usize,
    keys: KeyStore,
}

impl ElementStore {
    fn from_keys(base_len: usize, keys: Vec<Key>) -> ElementStore {
        let keys = if base_len <= 8 {
            KeyStore::Narrow(keys.iter().map(pack_narrow).collect())
        } else {
            KeyStore::Wide(keys)
        };
        ElementStore { base_len, keys }
    }

    pub fn len(&self) -> usize {
        match &self.keys {
            KeyStore::Narrow(v) => v.len(),
            KeyStore::Wide(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn key(&self, pos: usize) -> Key {
        match &self.keys {
            KeyStore::Narrow(v) => unpack_narrow(&v[pos]),
            KeyStore::Wide(v) => v[pos],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Key> + '_ {
        (0..self.len()).map(|pos| self.key(pos))
    }

    pub fn position(&self, key: &Key) -> Option<usize> {
        match &self.keys {
            KeyStore::Narrow(v) => v.binary_search(&pack_narrow(key)).ok(),
            KeyStore::Wide(v) => v.binary_search(key).ok(),
        }
    }

    pub fn contains(&self, key: &Key) -> bool {
        self.position(key).is_some()
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }
}

/// Conjugacy-class partition of a store.
#[derive(Debug, Clone)]
pub struct ClassData {
    /// Class id per store position.
    pub class_of: Vec<u32>,
    /// Classes ordered by (size, minimal representative).
    pub classes: Vec<ConjClass>,
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: Key,
    pub rep_pos: usize,
    pub size: u64,
}

#[derive(Debug, Clone)]
pub struct MSetEntry {
    pub class_rep: Key,
    pub class_size: u64,
    pub centralizer_order: u64,
    pub irr_count: u64,
}

#[derive(Debug, Clone)]
pub struct MSetReport {
    pub entries: Vec<MSetEntry>,
    pub total: u128,
}

impl MSetReport {
    /// The flattened pairs (class index, irreducible index).
    pub fn pairs(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(c, e)| (0..e.irr_count).map(move |i| (c, i)))
    }
}

/// Parses a CLI group specification: `S<n>`, `Z<n>`, `Z2^<k>`,
/// `weyl:<type>`, or explicit generators in 1-based cycle notation separated
/// by semicolons, e.g. `(1 2 3)(4 5); (1 2)`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(ty) = spec.strip_prefix("weyl:") {
        let ty: crate::cartan::CartanType = ty.parse()?;
        let rs = RootSystem::new(&ty)?;
        return FiniteGroup::weyl(&rs);
    }
    if let Some(rest) = spec.strip_prefix('S') {
        if let Ok(n) = rest.parse::<usize>() {
            if n == 0 || n > MAX_BASE {
                return Err(Error::InvalidGroup(format!(
                    "S{n}: n must be between 1 and {MAX_BASE}"
                )));
            }
            let mut gens = Vec::new();
            if n >= 2 {
                let mut t: Vec<u16> = (0..n as u16).collect();
                t.swap(0, 1);
                gens.push(Perm::from_images(t).unwrap());
                let cycle: Vec<u16> = (1..n as u16).chain(std::iter::once(0)).collect();
                gens.push(Perm::from_images(cycle).unwrap());
            }
            return FiniteGroup::from_generators(n, gens);
        }
    }
    if let Some(rest) = spec.strip_prefix("Z2^") {
        if let Ok(k) = rest.parse::<usize>() {
            if k == 0 || 2 * k > MAX_BASE {
                return Err(Error::InvalidGroup(format!(
                    "Z2^{k}: k must be between 1 and {}",
                    MAX_BASE / 2
                )));
            }
            let gens = (0..k)
                .map(|i| {
                    let mut images: Vec<u16> = (0..2 * k as u16).collect();
                    images.swap(2 * i, 2 * i + 1);
                    Perm::from_images(images).unwrap()
                })
                .collect();
            return FiniteGroup::from_generators(2 * k, gens);
        }
    }
    if let Some(rest) = spec.strip_prefix('Z') {
        if let Ok(n) = rest.parse::<usize>() {
            if n == 0 || n > MAX_BASE {
                return Err(Error::InvalidGroup(format!(
                    "Z{n}: n must be between 1 and {MAX_BASE}"
                )));
            }
            let cycle: Vec<u16> = (1..n as u16).chain(std::iter::once(0)).collect();
            return FiniteGroup::from_generators(n, vec![Perm::from_images(cycle).unwrap()]);
        }
    }
    if spec.starts_with('(') {
        return parse_cycle_generators(spec);
    }
    Err(Error::InvalidGroup(format!(
        "unrecognized group spec `{spec}`"
    )))
}

fn parse_cycle_generators(spec: &str) -> Result<FiniteGroup> {
    let bad = |msg: String| Error::InvalidGroup(msg);
    let mut cycles_per_gen: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for gen_text in spec.split(';') {
        let gen_text = gen_text.trim();
        let mut cycles = Vec::new();
        let mut rest = gen_text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| bad(format!("expected `(` in `{gen_text}`")))?;
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| bad(format!("unbalanced parentheses in `{gen_text}`")))?
                + open;
            let body = &rest[open + 1..close];
            let points: Vec<usize> = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| bad(format!("invalid point `{t}`")))
                })
                .collect::<Result<_>>()?;
            if points.contains(&0) {
                return Err(bad("cycle points are 1-based".to_string()));
            }
            for &p in &points {
                max_point = max_point.max(p);
            }
            cycles.push(points);
            rest = rest[close + 1..].trim_start();
        }
        cycles_per_gen.push(cycles);
    }
    if max_point > MAX_BASE {
        return Err(bad(format!(
            "points up to {max_point} exceed the supported degree {MAX_BASE}"
        )));
    }
    let degree = max_point;
    let mut gens = Vec::new();
    for cycles in cycles_per_gen {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from] = to as u16;
            }
        }
        let p = Perm::from_images(images)
            .ok_or_else(|| bad("cycles do not define a permutation".to_string()))?;
        gens.push(p);
    }
    FiniteGroup::from_generators(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(spec: &str) -> (FiniteGroup, ElementStore) {
        let g = parse_group_spec(spec).unwrap();
        let store = g.enumerate(DEFAULT_ENUM_BOUND).unwrap();
        (g, store)
    }

    #[test]
    fn enumerates_presets() {
        assert_eq!(enumerate("S3").1.len(), 6);
        assert_eq!(enumerate("S5").1.len(), 120);
        assert_eq!(enumerate("Z2").1.len(), 2);
        assert_eq!(enumerate("Z2^3").1.len(), 8);
        assert_eq!(enumerate("S1").1.len(), 1);
    }

    #[test]
    fn enumerates_weyl_groups() {
        assert_eq!(enumerate("weyl:F4").1.len(), 1152);
        assert_eq!(enumerate("weyl:B3").1.len(), 48);
        assert_eq!(enumerate("weyl:A2+A1").1.len(), 12);
    }

    #[test]
    fn bound_is_enforced() {
        let g = parse_group_spec("weyl:E6").unwrap();
        match g.enumerate(1000) {
            Err(Error::BoundExceeded { needed, bound }) => {
                assert_eq!(needed, 51840);
                assert_eq!(bound, 1000);
            }
            other => panic!("expected BoundExceeded, got {other:?}"),
        }
        // Generic groups discover the bound during the walk.
        let s5 = parse_group_spec("S5").unwrap();
        assert!(matches!(
            s5.enumerate(100),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn conjugacy_classes_of_s3_and_s4() {
        let (g, store) = enumerate("S3");
        let data = g.conjugacy_classes(&store);
        let sizes: Vec<u64> = data.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);

        let (g, store) = enumerate("S4");
        let data = g.conjugacy_classes(&store);
        assert_eq!(data.classes.len(), 5);
        assert_eq!(data.classes.iter().map(|c| c.size).sum::<u64>(), 24);
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        let (g, store) = enumerate("Z2^3");
        let data = g.conjugacy_classes(&store);
        assert_eq!(data.classes.len(), 8);
        assert!(data.classes.iter().all(|c| c.size == 1));
    }

    #[test]
    fn orbit_stabilizer_for_every_class() {
        for spec in ["S4", "S5", "weyl:B3", "weyl:G2"] {
            let (g, store) = enumerate(spec);
            let data = g.conjugacy_classes(&store);
            for class in &data.classes {
                let x = g.decode(&class.rep);
                let z = g.centralizer_positions(&store, &x);
                assert_eq!(
                    z.len() as u64 * class.size,
                    store.len() as u64,
                    "orbit-stabilizer fails in {spec}"
                );
            }
        }
    }

    #[test]
    fn centralizer_fixtures() {
        let (g, store) = enumerate("S4");
        // Transposition (1 2): centralizer <(1 2),(3 4)> of order 4.
        let mut images: Vec<u16> = (0..4).collect();
        images.swap(0, 1);
        let x = Perm::from_images(images).unwrap();
        let (_, zstore) = g.centralizer(&store, &x);
        assert_eq!(zstore.len(), 4);

        let (g, store) = enumerate("S5");
        let five_cycle = Perm::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        let (_, zstore) = g.centralizer(&store, &five_cycle);
        assert_eq!(zstore.len(), 5);

        let identity = Perm::identity(5);
        let (_, zstore) = g.centralizer(&store, &identity);
        assert_eq!(zstore.len(), 120);
    }

    #[test]
    fn m_set_fixtures() {
        let sizes: Vec<(&str, u128)> = vec![("Z2", 4), ("S3", 8), ("S4", 21), ("S5", 39)];
        for (spec, expected) in sizes {
            let (g, store) = enumerate(spec);
            let report = g.m_set(&store, DEFAULT_TABLE_BOUND).unwrap();
            assert_eq!(report.total, expected, "M({spec})");
            assert_eq!(report.pairs().count() as u128, expected);
        }
        // S3 pair structure: centralizers S3, Z3, Z2 give 3 + 3 + 2.
        let (g, store) = enumerate("S3");
        let report = g.m_set(&store, DEFAULT_TABLE_BOUND).unwrap();
        let counts: Vec<u64> = report.entries.iter().map(|e| e.irr_count).collect();
        assert_eq!(counts, vec![3, 3, 2]);
    }

    #[test]
    fn m_set_respects_table_bound() {
        let (g, store) = enumerate("weyl:F4");
        assert!(matches!(
            g.m_set(&store, 100),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn m_set_is_relabeling_invariant() {
        // The same abstract group on relabeled points yields the same
        // multiset of (class size, centralizer class count).
        let profile = |spec: &str| {
            let (g, store) = enumerate(spec);
            let report = g.m_set(&store, DEFAULT_TABLE_BOUND).unwrap();
            let mut profile: Vec<(u64, u64)> = report
                .entries
                .iter()
                .map(|e| (e.class_size, e.irr_count))
                .collect();
            profile.sort_unstable();
            profile
        };
        assert_eq!(profile("S4"), profile("(2 3); (1 4 3 2)"));
        assert_eq!(profile("weyl:A3"), profile("S4"));
    }

    #[test]
    fn cycle_notation_parsing() {
        let g = parse_group_spec("(1 2 3 4 5); (1 2)").unwrap();
        assert_eq!(g.degree(), 5);
        let store = g.enumerate(DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(store.len(), 120); // these generate S5
                                      // (1 2 3)(4 5) with (1 2) only generates S3 x S2.
        let g = parse_group_spec("(1 2 3)(4 5); (1 2)").unwrap();
        assert_eq!(g.enumerate(DEFAULT_ENUM_BOUND).unwrap().len(), 12);
        assert!(parse_group_spec("(0 1)").is_err());
        assert!(parse_group_spec("(1 2").is_err());
    }

    #[test]
    fn weyl_decode_round_trip() {
        let ty = "F4".parse().unwrap();
        let rs = RootSystem::new(&ty).unwrap();
        let g = FiniteGroup::weyl(&rs).unwrap();
        let w = rs
            .longest_element(crate::roots::SubsetJ::full(4))
            .perm()
            .clone();
        let key = g.encode(&w);
        assert_eq!(g.decode(&key), w);
    }
}
