//! Cartan types: finite multisets of irreducible Dynkin-diagram components.
//!
//! A [`CartanType`] is the universal input of the crate. It is kept in a
//! canonical form (components sorted by family and rank, degenerate ranks
//! rewritten to their isomorphic standard names) so that equality means
//! isomorphism of the underlying Weyl groups together with their root-length
//! data.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Family letter of an irreducible component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanFamily {
    pub fn letter(self) -> char {
        match self {
            CartanFamily::A => 'A',
            CartanFamily::B => 'B',
            CartanFamily::C => 'C',
            CartanFamily::D => 'D',
            CartanFamily::E => 'E',
            CartanFamily::F => 'F',
            CartanFamily::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<CartanFamily> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanFamily::A),
            'B' => Some(CartanFamily::B),
            'C' => Some(CartanFamily::C),
            'D' => Some(CartanFamily::D),
            'E' => Some(CartanFamily::E),
            'F' => Some(CartanFamily::F),
            'G' => Some(CartanFamily::G),
            _ => None,
        }
    }
}

/// One irreducible component, e.g. `E8` or `B6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanComponent {
    pub family: CartanFamily,
    pub rank: u8,
}

impl CartanComponent {
    pub fn new(family: CartanFamily, rank: u8) -> Self {
        CartanComponent { family, rank }
    }

    /// Number of positive roots (equals the number of reflections).
    pub fn positive_root_count(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            CartanFamily::A => n * (n + 1) / 2,
            CartanFamily::B | CartanFamily::C => n * n,
            CartanFamily::D => n * (n - 1),
            CartanFamily::E => match self.rank {
                6 => 36,
                7 => 63,
                8 => 120,
                _ => unreachable!("canonical E rank"),
            },
            CartanFamily::F => 24,
            CartanFamily::G => 6,
        }
    }

    /// Order of the Weyl group; `None` when it overflows `u128`.
    pub fn weyl_order(&self) -> Option<u128> {
        let n = self.rank as u32;
        match self.family {
            CartanFamily::A => factorial(n + 1),
            CartanFamily::B | CartanFamily::C => factorial(n)?.checked_mul(1u128.checked_shl(n)?),
            CartanFamily::D => factorial(n)?.checked_mul(1u128.checked_shl(n - 1)?),
            CartanFamily::E => Some(match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!("canonical E rank"),
            }),
            CartanFamily::F => Some(1152),
            CartanFamily::G => Some(12),
        }
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

fn factorial(n: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for k in 2..=n as u128 {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}

/// Rewrites a raw (family, rank) pair into canonical components, recording a
/// note when an alias fires. Returns an error for ranks outside the family.
fn canonical_components(
    family: CartanFamily,
    rank: u8,
    notes: &mut Vec<String>,
) -> Result<Vec<CartanComponent>> {
    use CartanFamily::*;
    let bad = |reason: &str| Error::InvalidType {
        input: format!("{}{}", family.letter(), rank),
        reason: reason.to_string(),
    };
    let one = |f, r| Ok(vec![CartanComponent::new(f, r)]);
    match (family, rank) {
        (_, 0) => Err(bad("rank must be at least 1")),
        (A, n) => one(A, n),
        (B, 1) | (C, 1) | (D, 1) => {
            notes.push(format!("{}1 = A1", family.letter()));
            one(A, 1)
        }
        (B, n) => one(B, n),
        (C, 2) => {
            notes.push("C2 = B2".to_string());
            one(B, 2)
        }
        (C, n) => one(C, n),
        (D, 2) => {
            notes.push("D2 = A1+A1".to_string());
            Ok(vec![CartanComponent::new(A, 1), CartanComponent::new(A, 1)])
        }
        (D, 3) => {
            notes.push("D3 = A3".to_string());
            one(A, 3)
        }
        (D, n) => one(D, n),
        (E, n @ 6..=8) => one(E, n),
        (E, _) => Err(bad("E rank must be 6, 7 or 8")),
        (F, 4) => one(F, 4),
        (F, _) => Err(bad("F rank must be 4")),
        (G, 2) => one(G, 2),
        (G, _) => Err(bad("G rank must be 2")),
    }
}

/// A canonical multiset of irreducible components. The empty multiset is the
/// type of the trivial group and displays as `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    components: Vec<CartanComponent>,
}

impl CartanType {
    /// The type of the trivial group.
    pub fn trivial() -> Self {
        CartanType {
            components: Vec::new(),
        }
    }

    /// A single canonicalized component.
    pub fn irreducible(family: CartanFamily, rank: u8) -> Result<Self> {
        let mut notes = Vec::new();
        let comps = canonical_components(family, rank, &mut notes)?;
        Ok(Self::from_components(comps))
    }

    /// Builds a type from already-canonical components, restoring sort order.
    pub fn from_components(mut comps: Vec<CartanComponent>) -> Self {
        comps.sort();
        CartanType { components: comps }
    }

    /// Parses a `+`- or `x`-separated list of tokens such as `"E8"` or
    /// `"A2+G2"`, returning the canonical type and any alias notes applied
    /// (for example `D3 = A3`).
    pub fn parse_with_notes(spec: &str) -> Result<(Self, Vec<String>)> {
        let trimmed = spec.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidType {
                input: spec.to_string(),
                reason: "empty specification".to_string(),
            });
        }
        let mut notes = Vec::new();
        let mut comps = Vec::new();
        for token in trimmed.split(['+', 'x', 'X']) {
            let token = token.trim();
            if token == "1" {
                // The trivial type contributes no components.
                continue;
            }
            let mut chars = token.chars();
            let letter = chars.next().ok_or_else(|| Error::InvalidType {
                input: spec.to_string(),
                reason: "empty component token".to_string(),
            })?;
            let family = CartanFamily::from_letter(letter).ok_or_else(|| Error::InvalidType {
                input: spec.to_string(),
                reason: format!("unknown family letter `{letter}`"),
            })?;
            let digits: String = chars.collect();
            let rank: u8 = digits.parse().map_err(|_| Error::InvalidType {
                input: spec.to_string(),
                reason: format!("invalid rank `{digits}` in token `{token}`"),
            })?;
            comps.extend(canonical_components(family, rank, &mut notes)?);
        }
        Ok((Self::from_components(comps), notes))
    }

    pub fn components(&self) -> &[CartanComponent] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank as usize).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn positive_root_count(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.positive_root_count())
            .sum()
    }

    /// Order of the Weyl group; `None` on `u128` overflow.
    pub fn weyl_order(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for c in &self.components {
            acc = acc.checked_mul(c.weyl_order()?)?;
        }
        Some(acc)
    }

    /// Concatenation of two types (direct product of the Weyl groups).
    pub fn product(&self, other: &CartanType) -> CartanType {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().copied());
        Self::from_components(comps)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        let labels: Vec<String> = self.components.iter().map(|c| c.label()).collect();
        write!(f, "{}", labels.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::parse_with_notes(s)?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_canonicalizes() {
        assert_eq!(parse("G2").to_string(), "G2");
        assert_eq!(parse("A1xA1").components().len(), 2);
        assert_eq!(parse("A1+A1"), parse("A1xA1"));
        assert_eq!(parse("D3"), parse("A3"));
        assert_eq!(parse("C2"), parse("B2"));
        assert_eq!(parse("B1"), parse("A1"));
        assert_eq!(parse("D2"), parse("A1+A1"));
        // Canonical order does not depend on input order.
        assert_eq!(parse("G2+A2"), parse("A2xG2"));
        assert_eq!(parse("G2+A2").to_string(), "A2+G2");
    }

    #[test]
    fn alias_notes_are_recorded() {
        let (ty, notes) = CartanType::parse_with_notes("D3").unwrap();
        assert_eq!(ty, parse("A3"));
        assert_eq!(notes, vec!["D3 = A3".to_string()]);
    }

    #[test]
    fn rejects_out_of_range_ranks() {
        for bad in ["E9", "F5", "G3", "H4", "A0", "Q1", "E5"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn trivial_type() {
        let t = CartanType::trivial();
        assert_eq!(t.to_string(), "1");
        assert_eq!(t.rank(), 0);
        assert_eq!(t.positive_root_count(), 0);
        assert_eq!(t.weyl_order(), Some(1));
        assert_eq!(parse("1"), t);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(parse("F4").positive_root_count(), 24);
        assert_eq!(parse("E8").positive_root_count(), 120);
        assert_eq!(parse("A2").positive_root_count(), 3);
        assert_eq!(parse("B6").positive_root_count(), 36);
        assert_eq!(parse("D12").positive_root_count(), 132);

        assert_eq!(parse("A2").weyl_order(), Some(6));
        assert_eq!(parse("B2").weyl_order(), Some(8));
        assert_eq!(parse("D4").weyl_order(), Some(192));
        assert_eq!(parse("F4").weyl_order(), Some(1152));
        assert_eq!(parse("E6").weyl_order(), Some(51_840));
        assert_eq!(parse("E7").weyl_order(), Some(2_903_040));
        assert_eq!(parse("E8").weyl_order(), Some(696_729_600));
        assert_eq!(parse("A2+G2").weyl_order(), Some(72));
    }
}
