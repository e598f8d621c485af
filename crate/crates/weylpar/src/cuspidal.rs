//! Cuspidal label sets, type by type.
//!
//! Every irreducible type carries a finite set of root-of-unity labels; the
//! trivial type carries the single label `1`. In types E8 and F4 the label 1
//! occurs twice and the two copies are kept apart as `1'` and `1''` (emitted
//! in that order). Labels are symbolic `(order, exponent)` pairs in lowest
//! terms, never floating point. Reducible types take the cartesian product of
//! their component sets, one label per component.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::cartan::{CartanFamily, CartanType};
use crate::error::{Error, Result};

/// Disambiguates the two order-1 labels of types E8 and F4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeMark {
    None,
    Prime,
    DoublePrime,
}

/// A root of unity `e^(2*pi*i*exponent/order)` in lowest terms, with an
/// optional prime mark on the label 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CuspidalLabel {
    order: u32,
    exponent: u32,
    mark: PrimeMark,
}

impl CuspidalLabel {
    /// The label `e^(2*pi*i*num/den)`, reduced to lowest terms.
    pub fn root_of_unity(num: u32, den: u32) -> CuspidalLabel {
        assert!(den > 0);
        let num = num % den;
        let g = num.gcd(&den);
        if num == 0 {
            CuspidalLabel {
                order: 1,
                exponent: 0,
                mark: PrimeMark::None,
            }
        } else {
            CuspidalLabel {
                order: den / g,
                exponent: num / g,
                mark: PrimeMark::None,
            }
        }
    }

    pub fn one() -> CuspidalLabel {
        Self::root_of_unity(0, 1)
    }

    pub fn minus_one() -> CuspidalLabel {
        Self::root_of_unity(1, 2)
    }

    pub fn one_prime() -> CuspidalLabel {
        CuspidalLabel {
            order: 1,
            exponent: 0,
            mark: PrimeMark::Prime,
        }
    }

    pub fn one_double_prime() -> CuspidalLabel {
        CuspidalLabel {
            order: 1,
            exponent: 0,
            mark: PrimeMark::DoublePrime,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn mark(&self) -> PrimeMark {
        self.mark
    }

    /// True when this denotes the complex number 1, with or without a mark.
    pub fn is_unity(&self) -> bool {
        self.order == 1
    }

    /// Equality of the underlying complex numbers, ignoring prime marks.
    pub fn same_root(&self, other: &CuspidalLabel) -> bool {
        self.order == other.order && self.exponent == other.exponent
    }
}

/// Sort order: by (order, exponent), with `1'` before `1''` before unmarked 1.
impl Ord for CuspidalLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mark_rank = |m: PrimeMark| match m {
            PrimeMark::Prime => 0u8,
            PrimeMark::DoublePrime => 1,
            PrimeMark::None => 2,
        };
        (self.order, self.exponent, mark_rank(self.mark)).cmp(&(
            other.order,
            other.exponent,
            mark_rank(other.mark),
        ))
    }
}

impl PartialOrd for CuspidalLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CuspidalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent, self.mark) {
            (1, 0, PrimeMark::None) => write!(f, "1"),
            (1, 0, PrimeMark::Prime) => write!(f, "1'"),
            (1, 0, PrimeMark::DoublePrime) => write!(f, "1''"),
            (2, 1, _) => write!(f, "-1"),
            (o, e, _) => write!(f, "zeta({o},{e})"),
        }
    }
}

impl FromStr for CuspidalLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "1" => return Ok(Self::one()),
            "1'" => return Ok(Self::one_prime()),
            "1''" => return Ok(Self::one_double_prime()),
            "-1" => return Ok(Self::minus_one()),
            _ => {}
        }
        let body = s
            .strip_prefix("zeta(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))?;
        let mut parts = body.split(',');
        let order: u32 = parts
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))?;
        let exponent: u32 = parts
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::InvalidLabel(s.to_string()))?;
        if parts.next().is_some() || order == 0 {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        Ok(Self::root_of_unity(exponent, order))
    }
}

/// The cuspidal set of a Cartan type: tuples of labels, one per irreducible
/// component. The trivial type has the single empty tuple, displayed `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalSet {
    ty: CartanType,
    tuples: Vec<Vec<CuspidalLabel>>,
}

impl CuspidalSet {
    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn tuples(&self) -> &[Vec<CuspidalLabel>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, tuple: &[CuspidalLabel]) -> bool {
        self.tuples.iter().any(|t| t.as_slice() == tuple)
    }
}

/// Formats a label tuple: `1` for the empty tuple, the single label for
/// irreducible types, and a parenthesized list otherwise.
pub fn format_tuple(tuple: &[CuspidalLabel]) -> String {
    match tuple.len() {
        0 => "1".to_string(),
        1 => tuple[0].to_string(),
        _ => format!(
            "({})",
            tuple
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
    }
}

/// Labels of one irreducible component, in canonical order.
pub fn component_labels(family: CartanFamily, rank: u8) -> Vec<CuspidalLabel> {
    use CartanFamily::*;
    let mut labels = match family {
        A => Vec::new(),
        B | C => {
            // Nonempty exactly when rank = k^2 + k; the label is (-1)^(rank/2).
            match exact_k(rank as u64, |k| k * k + k) {
                Some(_) => {
                    let half = rank as u64 / 2;
                    vec![if half.is_multiple_of(2) {
                        CuspidalLabel::one()
                    } else {
                        CuspidalLabel::minus_one()
                    }]
                }
                None => Vec::new(),
            }
        }
        D => match exact_k(rank as u64, |k| 4 * k * k) {
            Some(_) => {
                let quarter = rank as u64 / 4;
                vec![if quarter.is_multiple_of(2) {
                    CuspidalLabel::one()
                } else {
                    CuspidalLabel::minus_one()
                }]
            }
            None => Vec::new(),
        },
        E => match rank {
            // Primitive cube roots of 1.
            6 => vec![
                CuspidalLabel::root_of_unity(1, 3),
                CuspidalLabel::root_of_unity(2, 3),
            ],
            // Primitive fourth roots of 1.
            7 => vec![
                CuspidalLabel::root_of_unity(1, 4),
                CuspidalLabel::root_of_unity(3, 4),
            ],
            // Roots of (z^4-1)(z^5-1)(z^6-1)/(z^2-1), 1 doubled.
            8 => roots_of_quotient(&[4, 5, 6], &[2]),
            _ => unreachable!("canonical E rank"),
        },
        // Roots of (z^3-1)(z^4-1), 1 doubled.
        F => roots_of_quotient(&[3, 4], &[]),
        // Roots of (z^2-1)(z^3-1)/(z-1).
        G => roots_of_quotient(&[2, 3], &[1]),
    };
    labels.sort();
    labels
}

/// Root multiset of `prod (z^n - 1) / prod (z^d - 1)`; a residual double root
/// at 1 becomes the marked pair `1'`, `1''`.
fn roots_of_quotient(numerator: &[u32], denominator: &[u32]) -> Vec<CuspidalLabel> {
    let mut multiset: Vec<CuspidalLabel> = Vec::new();
    for &n in numerator {
        for j in 0..n {
            multiset.push(CuspidalLabel::root_of_unity(j, n));
        }
    }
    for &d in denominator {
        for j in 0..d {
            let root = CuspidalLabel::root_of_unity(j, d);
            let pos = multiset
                .iter()
                .position(|l| l.same_root(&root))
                .expect("denominator divides numerator");
            multiset.remove(pos);
        }
    }
    let ones = multiset.iter().filter(|l| l.is_unity()).count();
    let mut out: Vec<CuspidalLabel> = multiset.into_iter().filter(|l| !l.is_unity()).collect();
    match ones {
        0 => {}
        1 => out.push(CuspidalLabel::one()),
        2 => {
            out.push(CuspidalLabel::one_prime());
            out.push(CuspidalLabel::one_double_prime());
        }
        n => panic!("label 1 with multiplicity {n}"),
    }
    out
}

fn exact_k(n: u64, f: impl Fn(u64) -> u64) -> Option<u64> {
    (1..).take_while(|&k| f(k) <= n).find(|&k| f(k) == n)
}

/// The cuspidal set of an arbitrary type: the cartesian product over its
/// components.
pub fn cuspidal_set(ty: &CartanType) -> CuspidalSet {
    let per_component: Vec<Vec<CuspidalLabel>> = ty
        .components()
        .iter()
        .map(|c| component_labels(c.family, c.rank))
        .collect();
    let mut tuples: Vec<Vec<CuspidalLabel>> = vec![Vec::new()];
    for labels in &per_component {
        let mut next = Vec::with_capacity(tuples.len() * labels.len());
        for t in &tuples {
            for l in labels {
                let mut t2 = t.clone();
                t2.push(*l);
                next.push(t2);
            }
        }
        tuples = next;
    }
    CuspidalSet {
        ty: ty.clone(),
        tuples,
    }
}

/// `|cuspidal_set|` without materializing products.
pub fn cuspidal_count(ty: &CartanType) -> u128 {
    ty.components()
        .iter()
        .map(|c| component_labels(c.family, c.rank).len() as u128)
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(spec: &str) -> CuspidalSet {
        cuspidal_set(&spec.parse().unwrap())
    }

    fn labels(spec: &str) -> Vec<String> {
        set(spec).tuples().iter().map(|t| format_tuple(t)).collect()
    }

    #[test]
    fn fixed_small_types() {
        assert!(set("A5").is_empty());
        assert_eq!(labels("B6"), vec!["-1"]);
        assert_eq!(labels("D16"), vec!["1"]);
        assert_eq!(labels("B2"), vec!["-1"]);
        assert_eq!(labels("D4"), vec!["-1"]);
        assert_eq!(labels("E6"), vec!["zeta(3,1)", "zeta(3,2)"]);
        assert_eq!(labels("E7"), vec!["zeta(4,1)", "zeta(4,3)"]);
        assert_eq!(labels("G2"), vec!["1", "-1", "zeta(3,1)", "zeta(3,2)"]);
        assert_eq!(set("1").len(), 1);
        assert_eq!(format_tuple(&set("1").tuples()[0]), "1");
    }

    #[test]
    fn e8_and_f4_sets() {
        let e8 = labels("E8");
        assert_eq!(e8.len(), 13);
        assert_eq!(&e8[..3], &["1'", "1''", "-1"]);
        // Multiset of label orders, frozen from factorization of the
        // defining product.
        let orders: Vec<u32> = set("E8").tuples().iter().map(|t| t[0].order()).collect();
        assert_eq!(orders, vec![1, 1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6]);

        let f4 = labels("F4");
        assert_eq!(f4.len(), 7);
        let orders: Vec<u32> = set("F4").tuples().iter().map(|t| t[0].order()).collect();
        assert_eq!(orders, vec![1, 1, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn double_label_bookkeeping() {
        // Exactly two order-1 labels in E8 and F4; at most one elsewhere.
        for (spec, expect) in [("E8", 2), ("F4", 2), ("G2", 1), ("E6", 0), ("B6", 0)] {
            let ones = set(spec)
                .tuples()
                .iter()
                .filter(|t| t.len() == 1 && t[0].is_unity())
                .count();
            assert_eq!(ones, expect, "{spec}");
        }
        assert_ne!(
            CuspidalLabel::one_prime(),
            CuspidalLabel::one_double_prime()
        );
        assert!(CuspidalLabel::one_prime().same_root(&CuspidalLabel::one_double_prime()));
    }

    #[test]
    fn classical_nonemptiness_scan() {
        // B/C nonempty exactly at n = k^2+k, D exactly at n = 4k^2.
        let b_expected: Vec<u64> = (1..=13).map(|k| k * k + k).collect();
        let d_expected: Vec<u64> = (1..=7).map(|k| 4 * k * k).collect();
        for n in 2..=200u64 {
            let b = component_labels(CartanFamily::B, n as u8).len();
            assert_eq!(b == 1, b_expected.contains(&n), "B{n}");
            let c = component_labels(CartanFamily::C, n as u8).len();
            assert_eq!(b, c, "B{n} vs C{n}");
            if n >= 4 {
                let d = component_labels(CartanFamily::D, n as u8).len();
                assert_eq!(d == 1, d_expected.contains(&n), "D{n}");
            }
        }
        // Signs alternate along the families.
        assert_eq!(labels("B2"), vec!["-1"]);
        assert_eq!(labels("B12"), vec!["1"]);
        assert_eq!(labels("B20"), vec!["1"]);
        assert_eq!(labels("B30"), vec!["-1"]);
        assert_eq!(labels("D4"), vec!["-1"]);
        assert_eq!(labels("D36"), vec!["-1"]);
    }

    #[test]
    fn product_rule() {
        assert_eq!(cuspidal_count(&"A3+B2".parse().unwrap()), 0);
        assert_eq!(cuspidal_count(&"B2+G2".parse().unwrap()), 4);
        let t = set("B2+G2");
        assert_eq!(t.tuples()[0].len(), 2);
        assert_eq!(cuspidal_count(&"E8".parse().unwrap()), 13);
        assert_eq!(cuspidal_count(&"F4".parse().unwrap()), 7);
        assert_eq!(cuspidal_count(&"E6".parse().unwrap()), 2);
        assert_eq!(cuspidal_count(&"E7".parse().unwrap()), 2);
    }

    #[test]
    fn label_parsing_round_trip() {
        for s in ["1", "1'", "1''", "-1", "zeta(5,2)", "zeta(6,5)"] {
            let l: CuspidalLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("zeta(0,1)".parse::<CuspidalLabel>().is_err());
        assert!("2".parse::<CuspidalLabel>().is_err());
        // Non-reduced input reduces.
        let l: CuspidalLabel = "zeta(6,2)".parse().unwrap();
        assert_eq!(l.to_string(), "zeta(3,1)");
    }
}
