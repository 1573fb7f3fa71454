//! The ternary product of three elements of `jZ[adiag(C3)]` as tabulated in
//! the reference derivation, with a comparison against the computed
//! expansion.
//!
//! The published table lists the six monomial products with their ring
//! coefficients and the group key each lands on, then gathers them into a
//! four-term total. Group keys use the one-based labels `g1..g9`.

use std::fmt;

use crate::error::Result;
use crate::groupring::{Contribution, Element, GroupRing};
use crate::ngroup::{AdiagCyclic, AdiagKey, NaryGroup};
use crate::pring::PolyadicRing;

/// The three operands in the CLI syntax with legacy labels.
pub const OPERANDS: [&str; 3] = ["5j*g5", "2j*g7 + -7j*g8", "-4j*g2 + 7j*g3 + -3j*g6"];

/// Operands as `(coefficient, legacy label)` terms.
pub const OPERAND_TERMS: [&[(i64, u64)]; 3] = [&[(5, 5)], &[(2, 7), (-7, 8)], &[(-4, 2), (7, 3), (-3, 6)]];

/// One published monomial product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PublishedTerm {
    /// Legacy labels of the three group factors.
    pub factors: [u64; 3],
    pub coeff: i64,
    /// Legacy label of the published product key.
    pub key: u64,
}

/// The six published products in expansion order.
pub const PUBLISHED_EXPANSION: [PublishedTerm; 6] = [
    PublishedTerm { factors: [5, 7, 2], coeff: 40, key: 5 },
    PublishedTerm { factors: [5, 7, 3], coeff: -70, key: 6 },
    PublishedTerm { factors: [5, 7, 6], coeff: 30, key: 9 },
    PublishedTerm { factors: [5, 8, 2], coeff: -140, key: 9 },
    PublishedTerm { factors: [5, 8, 3], coeff: 245, key: 9 },
    PublishedTerm { factors: [5, 8, 6], coeff: -105, key: 3 },
];

/// The published gathered total as `(coefficient, legacy label)`.
pub const PUBLISHED_TOTAL: [(i64, u64); 4] = [(-105, 3), (40, 5), (-70, 6), (135, 9)];

/// `jZ` with `adiag(C3)` and all polyadic powers one.
pub fn context() -> GroupRing<AdiagCyclic> {
    let ring = PolyadicRing::jroot(2).expect("q = 2 is valid");
    let group = AdiagCyclic::new(3).expect("k = 3 is valid");
    GroupRing::new(ring, group, 1, 1, 1).expect("(2,3,3) with unit powers is quantized")
}

fn element(gr: &GroupRing<AdiagCyclic>, terms: &[(i64, u64)]) -> Result<Element<AdiagCyclic>> {
    let g = gr.group();
    let terms = terms
        .iter()
        .map(|&(c, i)| Ok((g.key_from_legacy(i)?, gr.ring().scalar(c))))
        .collect::<Result<Vec<_>>>()?;
    gr.from_terms(terms)
}

/// `r(1), r(2), r(3)`.
pub fn operands(gr: &GroupRing<AdiagCyclic>) -> Result<Vec<Element<AdiagCyclic>>> {
    OPERAND_TERMS.iter().map(|t| element(gr, t)).collect()
}

/// The published total as an element.
pub fn published_total(gr: &GroupRing<AdiagCyclic>) -> Result<Element<AdiagCyclic>> {
    element(gr, &PUBLISHED_TOTAL)
}

/// A computed term that disagrees with the published table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    /// Position in expansion order, starting at 1.
    pub term: usize,
    pub factors: [u64; 3],
    pub published_coeff: i64,
    pub computed_coeff: String,
    pub published_key: AdiagKey,
    pub computed_key: AdiagKey,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = AdiagCyclic::new(3).expect("k = 3 is valid");
        let [a, b, c] = self.factors;
        write!(
            f,
            "term {} (g{a} g{b} g{c}): published {}j at g{} = {}, computed {} at g{} = {}",
            self.term,
            self.published_coeff,
            g.legacy_index(&self.published_key),
            self.published_key,
            self.computed_coeff,
            g.legacy_index(&self.computed_key),
            self.computed_key,
        )
    }
}

/// Compares a computed expansion term by term with the published table.
/// Terms must be in the same order (the order of [`GroupRing::expand`]).
pub fn reconcile(gr: &GroupRing<AdiagCyclic>, computed: &[Contribution<AdiagKey>]) -> Result<Vec<Discrepancy>> {
    let g = gr.group();
    let mut out = Vec::new();
    for (i, (p, c)) in PUBLISHED_EXPANSION.iter().zip(computed).enumerate() {
        let published_key = g.key_from_legacy(p.key)?;
        if gr.ring().scalar(p.coeff) != c.coeff || published_key != c.key {
            out.push(Discrepancy {
                term: i + 1,
                factors: p.factors,
                published_coeff: p.coeff,
                computed_coeff: gr.ring().format(&c.coeff),
                published_key,
                computed_key: c.key,
            });
        }
    }
    Ok(out)
}
