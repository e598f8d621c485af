//! Relative Weyl groups of parabolic subgroups.
//!
//! For a subset `J` of the simple roots whose parabolic type carries at least
//! one cuspidal label, the elements `sigma_h = w0(J+h) * w0(J)` for `h`
//! outside `J` are involutions normalizing the parabolic, and they generate a
//! reflection group: the relative Weyl group. Its Coxeter matrix is computed
//! twice and cross-checked: once from the permutation order of
//! `sigma_h sigma_h'`, and once from the closed formula
//! `2(nu(J+h+h') - nu(J)) / (nu(J+h) + nu(J+h') - 2 nu(J))`.
//! The Coxeter type is then recognized from the matrix together with the
//! lengths of the projections of the simple roots onto the orthogonal
//! complement of the parabolic, which distinguish B from C.

use num_rational::Ratio;
use num_traits::Zero;

use crate::cartan::CartanType;
use crate::cuspidal::cuspidal_count;
use crate::diagram;
use crate::engine::FiniteGroup;
use crate::error::{Error, Result};
use crate::roots::{RootSystem, SubsetJ, WeylElement};

type Rat = Ratio<i64>;

/// The involution `w0(J+h) * w0(J)`.
///
/// Defined when `h` lies outside `J` and the parabolic type of `J` has a
/// nonempty cuspidal set; outside that hypothesis the construction is
/// rejected with `CuspidalityViolation`.
pub fn sigma(rs: &RootSystem, j: SubsetJ, h: usize) -> Result<WeylElement> {
    rs.validate_subset(j)?;
    if h >= rs.rank() || j.contains(h) {
        return Err(Error::InvalidSubset(format!(
            "node {} must lie outside J = {}",
            h + 1,
            j
        )));
    }
    let levi = rs.subdiagram_type(j)?;
    if cuspidal_count(&levi) == 0 {
        return Err(Error::CuspidalityViolation {
            levi: levi.to_string(),
        });
    }
    let w0j = rs.longest_element(j);
    let w0jh = rs.longest_element(j.with(h));
    let result = w0jh.compose(&w0j);
    if !result.compose(&result).is_identity() || result.is_identity() {
        return Err(Error::InvolutionFailure {
            h: h + 1,
            subset: j.to_string(),
        });
    }
    Ok(result)
}

/// The closed-form order of `sigma_h sigma_h'`, as an exact rational.
/// Callers assert integrality when the hypothesis holds.
pub fn order_formula(rs: &RootSystem, j: SubsetJ, h: usize, hp: usize) -> Result<Rat> {
    rs.validate_subset(j)?;
    if h == hp || h >= rs.rank() || hp >= rs.rank() || j.contains(h) || j.contains(hp) {
        return Err(Error::InvalidSubset(format!(
            "h = {}, h' = {} must be distinct nodes outside J = {}",
            h + 1,
            hp + 1,
            j
        )));
    }
    let nu_j = rs.nu_of(j) as i64;
    let nu_h = rs.nu_of(j.with(h)) as i64;
    let nu_hp = rs.nu_of(j.with(hp)) as i64;
    let nu_both = rs.nu_of(j.with(h).with(hp)) as i64;
    let denominator = nu_h + nu_hp - 2 * nu_j;
    if denominator == 0 {
        return Err(Error::DegenerateFormula {
            subset: j.to_string(),
            h: h + 1,
            hp: hp + 1,
        });
    }
    Ok(Ratio::new(2 * (nu_both - nu_j), denominator))
}

/// The relative Weyl group attached to a parabolic subset.
#[derive(Debug, Clone)]
pub struct RelativeWeylGroup {
    pub ambient: CartanType,
    pub subset: SubsetJ,
    pub levi_type: CartanType,
    /// Nodes of the complement, ascending; generator `i` is `sigma` at
    /// `generator_nodes[i]`.
    pub generator_nodes: Vec<usize>,
    pub generators: Vec<WeylElement>,
    /// Orders `m(sigma_h, sigma_h')`, 1 on the diagonal.
    pub coxeter_matrix: Vec<Vec<u32>>,
    /// Squared lengths of the projected simple roots, one per generator.
    pub root_norms: Vec<Rat>,
    /// The recognized Coxeter type of the group.
    pub identified_type: CartanType,
}

impl RelativeWeylGroup {
    pub fn order(&self) -> Option<u128> {
        self.identified_type.weyl_order()
    }

    pub fn rank(&self) -> usize {
        self.generator_nodes.len()
    }
}

/// Builds the relative Weyl group over `J`, verifying every Coxeter-matrix
/// entry against both the permutation order and the closed formula.
pub fn relative_weyl_group(rs: &RootSystem, j: SubsetJ) -> Result<RelativeWeylGroup> {
    rs.validate_subset(j)?;
    let levi = rs.subdiagram_type(j)?;
    if cuspidal_count(&levi) == 0 {
        return Err(Error::CuspidalityViolation {
            levi: levi.to_string(),
        });
    }
    let nodes: Vec<usize> = (0..rs.rank()).filter(|&h| !j.contains(h)).collect();
    let generators: Vec<WeylElement> = nodes
        .iter()
        .map(|&h| sigma(rs, j, h))
        .collect::<Result<_>>()?;

    let k = nodes.len();
    let mut matrix = vec![vec![1u32; k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let direct = generators[a].compose(&generators[b]).order();
            let formula = order_formula(rs, j, nodes[a], nodes[b])?;
            if !formula.is_integer() || formula.to_integer() != direct as i64 {
                return Err(Error::MatrixMismatch {
                    h: nodes[a] + 1,
                    hp: nodes[b] + 1,
                    direct,
                    formula: formula.to_string(),
                });
            }
            if !matches!(direct, 2 | 3 | 4 | 6) {
                return Err(Error::UnknownDiagram(format!(
                    "order {} of sigma_{} sigma_{} outside {{2,3,4,6}}",
                    direct,
                    nodes[a] + 1,
                    nodes[b] + 1
                )));
            }
            matrix[a][b] = direct as u32;
            matrix[b][a] = direct as u32;
        }
    }

    let norms: Vec<Rat> = nodes.iter().map(|&h| projected_norm2(rs, j, h)).collect();

    let positions: Vec<usize> = (0..k).collect();
    let identified_type = diagram::identify(&positions, &|a, b| matrix[a][b], &|a| norms[a])?;

    Ok(RelativeWeylGroup {
        ambient: rs.cartan_type().clone(),
        subset: j,
        levi_type: levi,
        generator_nodes: nodes,
        generators,
        coxeter_matrix: matrix,
        root_norms: norms,
        identified_type,
    })
}

/// Squared length of the projection of the simple root `h` onto the
/// orthogonal complement of the span of `J`, under the invariant form.
fn projected_norm2(rs: &RootSystem, j: SubsetJ, h: usize) -> Rat {
    let nodes: Vec<usize> = j.iter().collect();
    let own = rs.gram(h, h);
    if nodes.is_empty() {
        return own;
    }
    // Solve G c = g for the Gram matrix of J; the projected norm is
    // (a_h, a_h) - g . c.
    let n = nodes.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rat> = (0..n).map(|c| rs.gram(nodes[r], nodes[c])).collect();
            row.push(rs.gram(nodes[r], h));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Gram matrix of a parabolic is invertible");
        aug.swap(col, pivot);
        let lead = aug[col][col];
        for entry in aug[col].iter_mut() {
            *entry /= lead;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col];
                for c in col..=n {
                    let sub = factor * aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    let mut norm = own;
    for (r, &node) in nodes.iter().enumerate() {
        norm -= aug[r][n] * rs.gram(node, h);
    }
    norm
}

/// The result of the brute-force normalizer check for one subset.
#[derive(Debug, Clone)]
pub struct NormalizerReport {
    pub group_order: u64,
    pub levi_order: u64,
    pub relative_order: u64,
    pub normalizer_order: u64,
    pub trivial_intersection: bool,
}

impl NormalizerReport {
    /// True when the relative group is a complement to the parabolic in its
    /// normalizer.
    pub fn holds(&self) -> bool {
        self.normalizer_order == self.levi_order * self.relative_order && self.trivial_intersection
    }
}

/// Verifies by explicit enumeration that the relative Weyl group is a
/// complement to `W_J` in the normalizer of `W_J`: the normalizer order
/// equals `|W_J| * |relative|` and the two groups meet only in the identity.
pub fn normalizer_complement_check(
    rs: &RootSystem,
    j: SubsetJ,
    bound: u64,
) -> Result<NormalizerReport> {
    rs.validate_subset(j)?;
    let order = rs
        .cartan_type()
        .weyl_order()
        .filter(|&o| o <= bound as u128)
        .ok_or_else(|| Error::BoundExceeded {
            needed: rs.cartan_type().weyl_order().unwrap_or(u128::MAX),
            bound: bound as u128,
        })? as u64;

    let relative = relative_weyl_group(rs, j)?;

    // Degenerate ends: the empty set is normalized by everything and its
    // complement is the whole group; the full set is its own normalizer with
    // trivial complement.
    if j.is_empty() {
        return Ok(NormalizerReport {
            group_order: order,
            levi_order: 1,
            relative_order: order,
            normalizer_order: order,
            trivial_intersection: true,
        });
    }
    if j == SubsetJ::full(rs.rank()) {
        return Ok(NormalizerReport {
            group_order: order,
            levi_order: order,
            relative_order: 1,
            normalizer_order: order,
            trivial_intersection: true,
        });
    }

    let ambient = FiniteGroup::weyl(rs)?;
    let store = ambient.enumerate(bound)?;

    let levi_gens: Vec<_> = j
        .iter()
        .map(|node| rs.simple_reflection_perm(node).clone())
        .collect();
    let levi_group = FiniteGroup::weyl_subgroup(rs, levi_gens, relative.levi_type.weyl_order())?;
    let levi_store = levi_group.enumerate(bound)?;

    let rel_gens: Vec<_> = relative
        .generators
        .iter()
        .map(|g| g.perm().clone())
        .collect();
    let rel_group = FiniteGroup::weyl_subgroup(rs, rel_gens, relative.order())?;
    let rel_store = rel_group.enumerate(bound)?;

    // Normalizer scan: w normalizes W_J iff it conjugates every generator
    // into W_J.
    let sj_perms: Vec<_> = j.iter().map(|n| rs.simple_reflection_perm(n)).collect();
    let mut normalizer_order = 0u64;
    for key in store.iter() {
        let w = ambient.decode(&key);
        let winv = w.inverse();
        let normalizes = sj_perms.iter().all(|s| {
            let mut conj = [0u8; crate::engine::MAX_BASE];
            for (b, slot) in conj.iter_mut().enumerate().take(rs.rank()) {
                *slot = w.apply(s.apply(winv.apply(b as u16))) as u8;
            }
            levi_store.contains(&conj)
        });
        if normalizes {
            normalizer_order += 1;
        }
    }

    let overlap = rel_store
        .iter()
        .filter(|key| levi_store.contains(key))
        .count();

    Ok(NormalizerReport {
        group_order: order,
        levi_order: levi_store.len() as u64,
        relative_order: rel_store.len() as u64,
        normalizer_order,
        trivial_intersection: overlap == 1,
    })
}
