//! Polyadic group rings `R[G]` over a ring from [`crate::pring`] and a group
//! from [`crate::ngroup`].
//!
//! Elements are finite formal sums `sum r_g * g` stored as an ordered sparse
//! map. Addition works key by key; multiplication runs over the Cartesian
//! product of the operand supports, multiplying coefficients in the ring and
//! keys in the group, then gathers contributions that land on the same key.
//! With polyadic powers the group-ring arities are
//! `M_r = ell_m*(m_r-1)+1` and `N_r = ell_n*(n_r-1)+1 = ell_g*(n_g-1)+1`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rand::seq::index::sample as sample_indices;
use rand::Rng;

use crate::arity::{admissible_length, try_iterate_op, ArityProfile};
use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::ngroup::{gidentities, product_closure, FiniteMagma, NaryGroup, Placement};
use crate::pring::{PolyadicRing, RingScalar};

/// Default cap on the number of monomial products one multiplication may
/// expand to.
pub const DEFAULT_MUL_BUDGET: u128 = 10_000_000;

/// Default cap on querelement candidates tried by the bounded search.
pub const DEFAULT_QUER_BUDGET: usize = 100_000;

/// Default cap on elements produced by [`GroupRing::enumerate_elements`].
pub const DEFAULT_ENUM_BUDGET: u128 = 1_000_000;

/// A finite formal sum in canonical form: no zero coefficients, keys in
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupRingElement<K: Ord> {
    terms: BTreeMap<K, RingScalar>,
}

impl<K: Ord + Clone> GroupRingElement<K> {
    /// The empty sum.
    pub fn zero() -> Self {
        GroupRingElement { terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<K, RingScalar> {
        &self.terms
    }

    pub fn coefficient(&self, key: &K) -> Option<&RingScalar> {
        self.terms.get(key)
    }

    pub fn support(&self) -> Vec<K> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((r, g))` when the element is a single term.
    pub fn as_monomial(&self) -> Option<(&K, &RingScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

/// One monomial product in the expansion of a multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution<K> {
    /// Index of the chosen term inside each operand's support.
    pub term_indices: Vec<usize>,
    pub coeff: RingScalar,
    pub key: K,
}

/// A ring, a group and a validated arity profile.
#[derive(Clone, Debug)]
pub struct GroupRing<G: NaryGroup> {
    ring: PolyadicRing,
    group: G,
    profile: ArityProfile,
    mul_budget: u128,
    quer_budget: usize,
    exec: Execution,
}

pub type Element<G> = GroupRingElement<<G as FiniteMagma>::Elem>;

impl<G: NaryGroup> GroupRing<G> {
    /// Builds the group ring, deriving `m_r`, `n_r`, `n_g` from the inputs and
    /// validating the powers against the quantization condition.
    pub fn new(ring: PolyadicRing, group: G, ell_m: u64, ell_n: u64, ell_g: u64) -> Result<Self> {
        let profile = ArityProfile::new(
            ring.add_arity() as u64,
            ring.mul_arity() as u64,
            group.arity() as u64,
            ell_m,
            ell_n,
            ell_g,
        )?;
        Ok(GroupRing {
            ring,
            group,
            profile,
            mul_budget: DEFAULT_MUL_BUDGET,
            quer_budget: DEFAULT_QUER_BUDGET,
            exec: Execution::default(),
        })
    }

    /// Builds the group ring from an explicit profile, which must agree with
    /// the arities of `ring` and `group`.
    pub fn with_profile(ring: PolyadicRing, group: G, profile: ArityProfile) -> Result<Self> {
        let actual = (ring.add_arity() as u64, ring.mul_arity() as u64, group.arity() as u64);
        if actual != (profile.m_r(), profile.n_r(), profile.n_g()) {
            return Err(AlgebraError::Incompatible(format!(
                "profile arities ({}, {}, {}) do not match ring/group arities {:?}",
                profile.m_r(),
                profile.n_r(),
                profile.n_g(),
                actual
            )));
        }
        Self::new(ring, group, profile.ell_m(), profile.ell_n(), profile.ell_g())
    }

    pub fn with_mul_budget(mut self, budget: u128) -> Self {
        self.mul_budget = budget;
        self
    }

    pub fn with_quer_budget(mut self, budget: usize) -> Self {
        self.quer_budget = budget;
        self
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn ring(&self) -> &PolyadicRing {
        &self.ring
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn profile(&self) -> &ArityProfile {
        &self.profile
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    pub fn add_arity(&self) -> usize {
        self.profile.add_arity() as usize
    }

    pub fn mul_arity(&self) -> usize {
        self.profile.mul_arity() as usize
    }

    pub fn label(&self) -> String {
        let ring = self.ring.label();
        if ring.contains(' ') {
            format!("({ring})[{}]", self.group.label())
        } else {
            format!("{ring}[{}]", self.group.label())
        }
    }

    fn zero_scalar(&self) -> Result<RingScalar> {
        self.ring.rzero().ok_or(AlgebraError::NoZero)
    }

    /// Canonical form of a raw coefficient map: zero coefficients dropped,
    /// membership of keys and scalars checked.
    pub fn normalize(&self, raw: BTreeMap<G::Elem, RingScalar>) -> Result<Element<G>> {
        let zero = self.ring.rzero();
        let mut terms = BTreeMap::new();
        for (k, r) in raw {
            if !self.group.contains(&k) {
                return Err(AlgebraError::NotAMember(self.group.format_elem(&k)));
            }
            if !self.ring.contains(&r) {
                return Err(AlgebraError::NotAMember(self.ring.format(&r)));
            }
            if zero.as_ref() != Some(&r) {
                terms.insert(k, r);
            }
        }
        Ok(GroupRingElement { terms })
    }

    /// Builds an element from terms; repeated keys are gathered by ring
    /// addition.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (G::Elem, RingScalar)>) -> Result<Element<G>> {
        let mut grouped: BTreeMap<G::Elem, Vec<RingScalar>> = BTreeMap::new();
        for (k, r) in terms {
            grouped.entry(k).or_default().push(r);
        }
        let raw = grouped
            .into_iter()
            .map(|(k, rs)| Ok((k, self.gather(rs)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        self.normalize(raw)
    }

    /// `r * g`.
    pub fn monomial(&self, r: RingScalar, g: G::Elem) -> Result<Element<G>> {
        self.normalize(BTreeMap::from([(g, r)]))
    }

    /// Sums a list of scalars with the ring addition, padding with the zero
    /// up to the next admissible length when the list is not composable.
    pub fn gather(&self, mut scalars: Vec<RingScalar>) -> Result<RingScalar> {
        let m = self.ring.add_arity();
        match scalars.len() {
            0 => self.zero_scalar(),
            1 => Ok(scalars.pop().expect("one element")),
            t => {
                let ell = ((t - 1) as u64).div_ceil(m as u64 - 1);
                let len = admissible_length(m as u64, ell)? as usize;
                if len > t {
                    let z = self.zero_scalar()?;
                    scalars.resize(len, z);
                }
                try_iterate_op(m, ell, &scalars, |w| self.ring.radd(w))
            }
        }
    }

    fn check_count(&self, expected: usize, got: usize) -> Result<()> {
        if expected != got {
            return Err(AlgebraError::ArityMismatch { expected, got });
        }
        Ok(())
    }

    /// `M_r`-ary addition: at each key the `ell_m`-fold ring addition of the
    /// operands' coefficients, missing keys read as the zero.
    pub fn gr_add(&self, operands: &[Element<G>]) -> Result<Element<G>> {
        self.check_count(self.add_arity(), operands.len())?;
        let keys: Vec<G::Elem> = operands.iter().flat_map(|x| x.terms.keys().cloned()).sorted().dedup().collect();
        let mut raw = BTreeMap::new();
        for k in keys {
            let coeffs = operands
                .iter()
                .map(|x| match x.terms.get(&k) {
                    Some(r) => Ok(r.clone()),
                    None => self.zero_scalar(),
                })
                .collect::<Result<Vec<_>>>()?;
            let sum = try_iterate_op(self.ring.add_arity(), self.profile.ell_m(), &coeffs, |w| self.ring.radd(w))?;
            raw.insert(k, sum);
        }
        self.normalize(raw)
    }

    /// Monomial products of an `N_r`-ary multiplication, in lexicographic
    /// order of the chosen terms (last operand fastest), before gathering.
    pub fn expand(&self, operands: &[Element<G>]) -> Result<Vec<Contribution<G::Elem>>> {
        self.check_count(self.mul_arity(), operands.len())?;
        let supports: Vec<Vec<(&G::Elem, &RingScalar)>> = operands.iter().map(|x| x.terms.iter().collect()).collect();
        let sizes: Vec<usize> = supports.iter().map(Vec::len).collect();
        let total = sizes.iter().fold(1u128, |acc, &s| acc.saturating_mul(s as u128));
        if total > self.mul_budget {
            return Err(AlgebraError::BudgetExceeded { needed: total, budget: self.mul_budget });
        }
        let total = total as usize;
        let (n_r, ell_n) = (self.ring.mul_arity(), self.profile.ell_n());
        let (n_g, ell_g) = (self.group.arity(), self.profile.ell_g());
        let results = self.exec.map_range(total, |mut idx| {
            let mut term_indices = vec![0; sizes.len()];
            for (slot, &s) in sizes.iter().enumerate().rev() {
                term_indices[slot] = idx % s;
                idx /= s;
            }
            let (keys, coeffs): (Vec<G::Elem>, Vec<RingScalar>) = term_indices
                .iter()
                .zip(&supports)
                .map(|(&i, sup)| (sup[i].0.clone(), sup[i].1.clone()))
                .unzip();
            let coeff = try_iterate_op(n_r, ell_n, &coeffs, |w| self.ring.rmul(w))?;
            let key = try_iterate_op(n_g, ell_g, &keys, |w| Ok::<_, AlgebraError>(self.group.product(w)))?;
            Ok(Contribution { term_indices, coeff, key })
        });
        results.into_iter().collect()
    }

    /// Gathers expanded contributions key by key into a canonical element.
    pub fn collect_contributions(&self, contributions: Vec<Contribution<G::Elem>>) -> Result<Element<G>> {
        self.from_terms(contributions.into_iter().map(|c| (c.key, c.coeff)))
    }

    /// `N_r`-ary convolution product.
    pub fn gr_mul(&self, operands: &[Element<G>]) -> Result<Element<G>> {
        let contributions = self.expand(operands)?;
        self.collect_contributions(contributions)
    }

    /// Scalar action by `n_r - 1` ring elements: each coefficient `r` becomes
    /// `mu_R[l_1, .., l_{n_r-1}, r]`.
    pub fn gr_scalar_action(&self, lambdas: &[RingScalar], x: &Element<G>) -> Result<Element<G>> {
        self.check_count(self.ring.mul_arity() - 1, lambdas.len())?;
        let mut raw = BTreeMap::new();
        for (k, r) in &x.terms {
            let mut w = lambdas.to_vec();
            w.push(r.clone());
            raw.insert(k.clone(), self.ring.rmul(&w)?);
        }
        self.normalize(raw)
    }

    /// The zero element (empty support); requires a ring zero.
    pub fn gr_zero(&self) -> Result<Element<G>> {
        self.zero_scalar()?;
        Ok(GroupRingElement::zero())
    }

    /// Basis monomials used to test neutrality laws.
    fn probe_elements(&self) -> Result<Vec<Element<G>>> {
        let scalars: Vec<RingScalar> = match self.ring.elements() {
            Ok(all) => all.into_iter().filter(|r| !self.ring.is_zero(r)).collect(),
            Err(_) => [-2i64, -1, 1, 2, 3, 7]
                .into_iter()
                .map(|k| self.ring.scalar(k))
                .filter(|r| self.ring.contains(r))
                .collect(),
        };
        let mut probes = Vec::new();
        for g in self.group.elements() {
            for r in &scalars {
                probes.push(self.monomial(r.clone(), g.clone())?);
            }
        }
        Ok(probes)
    }

    /// True when `e` is neutral for every basis monomial `x` placed first or
    /// last among `N_r - 1` copies of `e`.
    pub fn is_identity(&self, e: &Element<G>) -> Result<bool> {
        let n = self.mul_arity();
        for x in self.probe_elements()? {
            for pos in Placement::Ends.positions(n) {
                let mut w = vec![e.clone(); n];
                w[pos] = x.clone();
                if self.gr_mul(&w)? != x {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Candidates `e_R * e_G` from every ring identity and group identity,
    /// kept when they pass [`Self::is_identity`]. Empty for unitless rings.
    pub fn gr_trivial_identities(&self) -> Result<Vec<Element<G>>> {
        let mut out = Vec::new();
        for e_r in self.ring.ridentity_search() {
            for e_g in gidentities(&self.group) {
                let cand = self.monomial(e_r.clone(), e_g)?;
                if self.is_identity(&cand)? {
                    out.push(cand);
                }
            }
        }
        Ok(out)
    }

    /// `mu[x, .., q, .., x] == x` with `q` in each of the `N_r` positions.
    pub fn is_querelement(&self, x: &Element<G>, q: &Element<G>) -> Result<bool> {
        let n = self.mul_arity();
        for pos in 0..n {
            let mut w = vec![x.clone(); n];
            w[pos] = q.clone();
            if self.gr_mul(&w)? != *x {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Querelement of `x`.
    ///
    /// Monomials `r * g` with `r` a unit first try `r_bar * g_bar`. Otherwise
    /// a bounded search runs over elements supported in the product closure
    /// of `supp(x)` with unit coefficients, smallest supports first. `NotFound`
    /// means nothing was found within the bound, not that none exists.
    pub fn gr_quer(&self, x: &Element<G>) -> Result<Element<G>> {
        let not_found = || AlgebraError::NotFound(format!("querelement of {} within the search bound", self.format(x)));
        if self.mul_arity() < 3 {
            return Err(AlgebraError::Incompatible(
                "querelements need a multiplication of arity at least 3".into(),
            ));
        }
        if x.is_empty() {
            return Err(not_found());
        }
        let mut coeffs = self.ring.runits()?;
        if let Some((g, r)) = x.as_monomial() {
            if let (Ok(rq), Ok(gq)) = (self.ring.rquer(r), self.group.querelement(g)) {
                let cand = self.monomial(rq.clone(), gq)?;
                if self.is_querelement(x, &cand)? {
                    return Ok(cand);
                }
                coeffs.push(rq);
            }
        }
        coeffs.sort();
        coeffs.dedup();
        if coeffs.is_empty() {
            return Err(not_found());
        }
        let closure = product_closure(&self.group, &x.support());
        let mut budget = self.quer_budget;
        for size in 1..=closure.len() {
            let mut candidates = Vec::new();
            for keys in closure.iter().combinations(size) {
                for cs in std::iter::repeat_n(coeffs.iter(), size).multi_cartesian_product() {
                    if budget == 0 {
                        break;
                    }
                    budget -= 1;
                    let terms = keys.iter().zip(cs).map(|(k, c)| ((*k).clone(), c.clone()));
                    candidates.push(GroupRingElement { terms: terms.collect() });
                }
            }
            let hit = self
                .exec
                .find_first(candidates.len(), |i| match self.is_querelement(x, &candidates[i]) {
                    Ok(true) => Some(Ok(())),
                    Ok(false) => None,
                    Err(e) => Some(Err(e)),
                });
            if let Some((i, res)) = hit {
                res?;
                return Ok(candidates.swap_remove(i));
            }
            if budget == 0 {
                break;
            }
        }
        Err(not_found())
    }

    /// Augmentation: the ring sum of all coefficients, padded with the zero
    /// to an admissible number of summands. The zero element maps to the
    /// ring zero.
    pub fn augmentation(&self, x: &Element<G>) -> Result<RingScalar> {
        self.gather(x.terms.values().cloned().collect())
    }

    /// Membership in the augmentation ideal (kernel of the augmentation).
    pub fn in_augmentation_ideal(&self, x: &Element<G>) -> Result<bool> {
        let z = self.zero_scalar()?;
        Ok(self.augmentation(x)? == z)
    }

    /// Every element of a finite group ring: `|R|^|G|` canonical sums.
    pub fn enumerate_elements(&self) -> Result<Vec<Element<G>>> {
        let scalars = self.ring.elements()?;
        let keys = self.group.elements();
        let total = (scalars.len() as u128).checked_pow(keys.len() as u32).unwrap_or(u128::MAX);
        if total > DEFAULT_ENUM_BUDGET {
            return Err(AlgebraError::BudgetExceeded { needed: total, budget: DEFAULT_ENUM_BUDGET });
        }
        std::iter::repeat_n(scalars.iter(), keys.len())
            .multi_cartesian_product()
            .map(|cs| self.normalize(keys.iter().cloned().zip(cs.into_iter().cloned()).collect()))
            .collect()
    }

    /// Random element with at most `max_support` terms and coefficients drawn
    /// uniformly from `[lo, hi]`.
    pub fn random_element(&self, rng: &mut impl Rng, max_support: usize, lo: i64, hi: i64) -> Element<G> {
        let keys = self.group.elements();
        let size = rng.gen_range(0..=max_support.min(keys.len()));
        let mut terms = BTreeMap::new();
        for i in sample_indices(rng, keys.len(), size).into_iter() {
            terms.insert(keys[i].clone(), self.ring.sample(rng, lo, hi));
        }
        self.normalize(terms).expect("sampled terms are members")
    }

    /// Canonical text: `<coeff>*g(..)` terms joined by ` + `, or `0`.
    pub fn format(&self, x: &Element<G>) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.terms
            .iter()
            .map(|(k, r)| format!("{}*{}", self.ring.format(r), self.group.format_elem(k)))
            .join(" + ")
    }
}

impl<G: NaryGroup> fmt::Display for GroupRing<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {}", self.label(), self.profile)
    }
}
