//! Finite n-ary groups.
//!
//! Two families are provided: the nonderived ternary group of antidiagonal
//! 2x2 matrices over a cyclic group, [`AdiagCyclic`], stored as the exponent
//! pair `(m, n)` of `[[0, a^m], [a^n, 0]]`, and groups derived from a binary
//! cyclic group, [`DerivedCyclic`]. [`FnMagma`] wraps an arbitrary finite
//! operation so the search routines can run on structures that are not groups.

use std::collections::BTreeSet;
use std::fmt::{self, Debug};
use std::hash::Hash;

use itertools::Itertools;

use crate::arity::{polyadic_power, try_iterate_op};
use crate::error::{AlgebraError, Result};

/// A finite set with one n-ary operation.
pub trait FiniteMagma: Send + Sync {
    type Elem: Clone + Ord + Hash + Debug + Send + Sync;

    fn arity(&self) -> usize;

    /// Every element, in key order.
    fn elements(&self) -> Vec<Self::Elem>;

    fn contains(&self, x: &Self::Elem) -> bool;

    /// Raw product. Callers guarantee `polyad.len() == self.arity()`.
    fn product(&self, polyad: &[Self::Elem]) -> Self::Elem;

    /// Short human-readable name, e.g. `adiag(C3)`.
    fn label(&self) -> String;

    fn format_elem(&self, x: &Self::Elem) -> String;

    fn order(&self) -> usize {
        self.elements().len()
    }
}

/// An n-ary group: a finite magma whose operation is totally associative and
/// where every element has a querelement.
pub trait NaryGroup: FiniteMagma {
    /// The querelement of `x`. The default is an exhaustive search.
    fn querelement(&self, x: &Self::Elem) -> Result<Self::Elem> {
        find_querelement(self, x)
    }

    /// Builds a key from the indices of a `g(..)` literal.
    fn key_from_indices(&self, indices: &[u64]) -> Result<Self::Elem>;

    /// Builds a key from a one-based legacy label `g<i>`.
    fn key_from_legacy(&self, i: u64) -> Result<Self::Elem>;

    /// Indices printed inside `g(..)`.
    fn key_indices(&self, x: &Self::Elem) -> Vec<u64>;
}

fn format_key(indices: &[u64]) -> String {
    format!("g({})", indices.iter().join(","))
}

/// Element of [`AdiagCyclic`]: the matrix `[[0, a^m], [a^n, 0]]`.
///
/// Ordering compares `n` first, so keys sort by the legacy label
/// `i = k*n + m + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdiagKey {
    pub n: u32,
    pub m: u32,
}

impl AdiagKey {
    pub fn new(m: u32, n: u32) -> Self {
        AdiagKey { n, m }
    }
}

impl fmt::Display for AdiagKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({},{})", self.m, self.n)
    }
}

/// Ternary group `adiag(C_k, C_k)` of antidiagonal matrices over the cyclic
/// group of order `k`. The product of three elements is
/// `g(m1 + n2 + m3, n1 + m2 + n3)` with exponents mod `k`; binary products
/// are diagonal and leave the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdiagCyclic {
    k: u32,
}

/// Diagonal matrix `diag(a^upper, a^lower)`; what a binary product of two
/// antidiagonal elements evaluates to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalKey {
    pub upper: u32,
    pub lower: u32,
}

impl AdiagCyclic {
    pub fn new(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(AlgebraError::Incompatible("cyclic order must be positive".into()));
        }
        Ok(AdiagCyclic { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `g(m, n)` with exponents reduced mod `k`.
    pub fn key(&self, m: u32, n: u32) -> AdiagKey {
        AdiagKey::new(m % self.k, n % self.k)
    }

    /// One-based legacy label of a key.
    pub fn legacy_index(&self, x: &AdiagKey) -> u64 {
        self.k as u64 * x.n as u64 + x.m as u64 + 1
    }

    /// The `t`-th identity `g(t, -t)`.
    pub fn identity(&self, t: u32) -> AdiagKey {
        self.key(t, self.k - t % self.k)
    }

    /// Product of two antidiagonal matrices, which is diagonal.
    pub fn binary_product(&self, a: &AdiagKey, b: &AdiagKey) -> DiagonalKey {
        DiagonalKey { upper: (a.m + b.n) % self.k, lower: (a.n + b.m) % self.k }
    }
}

impl FiniteMagma for AdiagCyclic {
    type Elem = AdiagKey;

    fn arity(&self) -> usize {
        3
    }

    fn elements(&self) -> Vec<AdiagKey> {
        (0..self.k)
            .flat_map(|n| (0..self.k).map(move |m| AdiagKey::new(m, n)))
            .collect()
    }

    fn contains(&self, x: &AdiagKey) -> bool {
        x.m < self.k && x.n < self.k
    }

    fn product(&self, p: &[AdiagKey]) -> AdiagKey {
        debug_assert_eq!(p.len(), 3);
        let k = self.k as u64;
        let m = (p[0].m as u64 + p[1].n as u64 + p[2].m as u64) % k;
        let n = (p[0].n as u64 + p[1].m as u64 + p[2].n as u64) % k;
        AdiagKey::new(m as u32, n as u32)
    }

    fn label(&self) -> String {
        format!("adiag(C{})", self.k)
    }

    fn format_elem(&self, x: &AdiagKey) -> String {
        x.to_string()
    }

    fn order(&self) -> usize {
        (self.k * self.k) as usize
    }
}

impl NaryGroup for AdiagCyclic {
    /// Closed form: the querelement of `g(m, n)` is `g(-n, -m)`.
    fn querelement(&self, x: &AdiagKey) -> Result<AdiagKey> {
        if !self.contains(x) {
            return Err(AlgebraError::NotAMember(x.to_string()));
        }
        Ok(self.key(self.k - x.n, self.k - x.m))
    }

    fn key_from_indices(&self, idx: &[u64]) -> Result<AdiagKey> {
        match idx {
            [m, n] if *m < self.k as u64 && *n < self.k as u64 => Ok(AdiagKey::new(*m as u32, *n as u32)),
            [_, _] => Err(AlgebraError::NotAMember(format!(
                "{} (indices must lie in Z_{})",
                format_key(idx),
                self.k
            ))),
            _ => Err(AlgebraError::NotAMember(format!("{} (expected g(m,n))", format_key(idx)))),
        }
    }

    fn key_from_legacy(&self, i: u64) -> Result<AdiagKey> {
        let k = self.k as u64;
        if i < 1 || i > k * k {
            return Err(AlgebraError::NotAMember(format!("g{i} (labels run from 1 to {})", k * k)));
        }
        let j = i - 1;
        Ok(AdiagKey::new((j % k) as u32, (j / k) as u32))
    }

    fn key_indices(&self, x: &AdiagKey) -> Vec<u64> {
        vec![x.m as u64, x.n as u64]
    }
}

/// Element of a group derived from the cyclic group `Z_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicKey(pub u32);

/// The n-ary group obtained by iterating the binary addition of `Z_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedCyclic {
    order: u32,
    arity: usize,
}

impl DerivedCyclic {
    pub fn new(order: u32, arity: usize) -> Result<Self> {
        if arity < 2 {
            return Err(AlgebraError::InvalidArity(arity as u64));
        }
        if order < 1 {
            return Err(AlgebraError::Incompatible("cyclic order must be positive".into()));
        }
        Ok(DerivedCyclic { order, arity })
    }

    pub fn base_order(&self) -> u32 {
        self.order
    }

    /// The underlying binary product.
    pub fn binary_product(&self, a: &CyclicKey, b: &CyclicKey) -> CyclicKey {
        CyclicKey(((a.0 as u64 + b.0 as u64) % self.order as u64) as u32)
    }
}

impl FiniteMagma for DerivedCyclic {
    type Elem = CyclicKey;

    fn arity(&self) -> usize {
        self.arity
    }

    fn elements(&self) -> Vec<CyclicKey> {
        (0..self.order).map(CyclicKey).collect()
    }

    fn contains(&self, x: &CyclicKey) -> bool {
        x.0 < self.order
    }

    fn product(&self, p: &[CyclicKey]) -> CyclicKey {
        let s: u64 = p.iter().map(|x| x.0 as u64).sum();
        CyclicKey((s % self.order as u64) as u32)
    }

    fn label(&self) -> String {
        format!("der{}(C{})", self.arity, self.order)
    }

    fn format_elem(&self, x: &CyclicKey) -> String {
        format!("g({})", x.0)
    }

    fn order(&self) -> usize {
        self.order as usize
    }
}

impl NaryGroup for DerivedCyclic {
    /// `q + (n-1) x = x`, so `q = -(n-2) x`.
    fn querelement(&self, x: &CyclicKey) -> Result<CyclicKey> {
        if !self.contains(x) {
            return Err(AlgebraError::NotAMember(format!("{x:?}")));
        }
        let o = self.order as u64;
        let t = (x.0 as u64 * (self.arity as u64 - 2)) % o;
        Ok(CyclicKey(((o - t) % o) as u32))
    }

    fn key_from_indices(&self, idx: &[u64]) -> Result<CyclicKey> {
        match idx {
            [x] if *x < self.order as u64 => Ok(CyclicKey(*x as u32)),
            _ => Err(AlgebraError::NotAMember(format!(
                "{} (expected g(x) with x in Z_{})",
                format_key(idx),
                self.order
            ))),
        }
    }

    fn key_from_legacy(&self, i: u64) -> Result<CyclicKey> {
        if i < 1 || i > self.order as u64 {
            return Err(AlgebraError::NotAMember(format!("g{i} (labels run from 1 to {})", self.order)));
        }
        Ok(CyclicKey((i - 1) as u32))
    }

    fn key_indices(&self, x: &CyclicKey) -> Vec<u64> {
        vec![x.0 as u64]
    }
}

/// Finite magma given by an element list and a closure.
pub struct FnMagma<T, F> {
    label: String,
    elements: Vec<T>,
    arity: usize,
    op: F,
}

impl<T, F> FnMagma<T, F>
where
    T: Clone + Ord + Hash + Debug + Send + Sync,
    F: Fn(&[T]) -> T + Send + Sync,
{
    pub fn new(label: impl Into<String>, mut elements: Vec<T>, arity: usize, op: F) -> Self {
        elements.sort();
        elements.dedup();
        FnMagma { label: label.into(), elements, arity, op }
    }
}

impl<T, F> FiniteMagma for FnMagma<T, F>
where
    T: Clone + Ord + Hash + Debug + Send + Sync,
    F: Fn(&[T]) -> T + Send + Sync,
{
    type Elem = T;

    fn arity(&self) -> usize {
        self.arity
    }
    fn elements(&self) -> Vec<T> {
        self.elements.clone()
    }
    fn contains(&self, x: &T) -> bool {
        self.elements.binary_search(x).is_ok()
    }
    fn product(&self, p: &[T]) -> T {
        (self.op)(p)
    }
    fn label(&self) -> String {
        self.label.clone()
    }
    fn format_elem(&self, x: &T) -> String {
        format!("{x:?}")
    }
}

fn check_member<M: FiniteMagma + ?Sized>(g: &M, x: &M::Elem) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(AlgebraError::NotAMember(g.format_elem(x)))
    }
}

/// Checked n-ary product.
pub fn gmul<M: FiniteMagma + ?Sized>(g: &M, polyad: &[M::Elem]) -> Result<M::Elem> {
    if polyad.len() != g.arity() {
        return Err(AlgebraError::ArityMismatch { expected: g.arity(), got: polyad.len() });
    }
    for x in polyad {
        check_member(g, x)?;
    }
    Ok(g.product(polyad))
}

/// `ell`-fold left-nested product over a word of length `ell*(n-1)+1`.
pub fn gmul_iterated<M: FiniteMagma + ?Sized>(g: &M, ell: u64, word: &[M::Elem]) -> Result<M::Elem> {
    for x in word {
        check_member(g, x)?;
    }
    try_iterate_op(g.arity(), ell, word, |w| Ok::<_, AlgebraError>(g.product(w)))
}

/// Checked querelement lookup.
pub fn gquer<G: NaryGroup + ?Sized>(g: &G, x: &G::Elem) -> Result<G::Elem> {
    check_member(g, x)?;
    g.querelement(x)
}

/// `mu[x, .., q, .., x] == x` with `q` at position `pos`.
fn quer_holds_at<M: FiniteMagma + ?Sized>(g: &M, x: &M::Elem, q: &M::Elem, pos: usize) -> bool {
    let mut w = vec![x.clone(); g.arity()];
    w[pos] = q.clone();
    g.product(&w) == *x
}

/// True when `q` is a querelement of `x` in every argument position.
pub fn is_querelement<M: FiniteMagma + ?Sized>(g: &M, x: &M::Elem, q: &M::Elem) -> bool {
    (0..g.arity()).all(|pos| quer_holds_at(g, x, q, pos))
}

/// Exhaustive querelement search; the result is valid in every position.
pub fn find_querelement<M: FiniteMagma + ?Sized>(g: &M, x: &M::Elem) -> Result<M::Elem> {
    check_member(g, x)?;
    g.elements()
        .into_iter()
        .find(|q| is_querelement(g, x, q))
        .ok_or_else(|| AlgebraError::NotFound(format!("querelement of {}", g.format_elem(x))))
}

/// Argument positions at which a neutrality law places the tested element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    /// `x` first or last: `mu[x, e..e] = x` and `mu[e..e, x] = x`.
    Ends,
    /// `x` in every one of the `n` positions.
    Every,
}

impl Placement {
    pub fn positions(self, n: usize) -> Vec<usize> {
        match self {
            Placement::Ends if n >= 2 => vec![0, n - 1],
            Placement::Ends => vec![0],
            Placement::Every => (0..n).collect(),
        }
    }
}

/// True when `e` is neutral for every element at the given placements.
pub fn is_identity<M: FiniteMagma + ?Sized>(g: &M, e: &M::Elem, placement: Placement) -> bool {
    let n = g.arity();
    let positions = placement.positions(n);
    g.elements().iter().all(|x| {
        positions.iter().all(|&pos| {
            let mut w = vec![e.clone(); n];
            w[pos] = x.clone();
            g.product(&w) == *x
        })
    })
}

/// All identities: elements `e` with `mu[x, e^(n-1)] = x` and
/// `mu[e^(n-1), x] = x` for every `x`. Interior placements are not required;
/// the antidiagonal family fails them (`mu[e, x, e]` swaps the exponents of
/// `x`), see [`gidentities_every_position`].
pub fn gidentities<M: FiniteMagma + ?Sized>(g: &M) -> Vec<M::Elem> {
    g.elements().into_iter().filter(|e| is_identity(g, e, Placement::Ends)).collect()
}

/// Identities that are neutral in every argument position, interior ones
/// included.
pub fn gidentities_every_position<M: FiniteMagma + ?Sized>(g: &M) -> Vec<M::Elem> {
    g.elements().into_iter().filter(|e| is_identity(g, e, Placement::Every)).collect()
}

/// All neutral `(n-1)`-polyads `p` with `mu[x, p] = x` and `mu[p, x] = x` for
/// every `x`, in lexicographic order.
pub fn gneutral_polyads<M: FiniteMagma + ?Sized>(g: &M) -> Vec<Vec<M::Elem>> {
    let n = g.arity();
    let elems = g.elements();
    std::iter::repeat_n(elems.iter(), n - 1)
        .multi_cartesian_product()
        .map(|p| p.into_iter().cloned().collect::<Vec<_>>())
        .filter(|p| {
            elems.iter().all(|x| {
                let mut front = Vec::with_capacity(n);
                front.push(x.clone());
                front.extend_from_slice(p);
                let mut back = p.clone();
                back.push(x.clone());
                g.product(&front) == *x && g.product(&back) == *x
            })
        })
        .collect()
}

/// True iff `x^<ell> == x`.
pub fn gidempotent_check<M: FiniteMagma + ?Sized>(g: &M, x: &M::Elem, ell: u64) -> Result<bool> {
    check_member(g, x)?;
    Ok(polyadic_power(g.arity(), x, ell, |w| g.product(w))? == *x)
}

/// The universe in key order.
pub fn gelements<M: FiniteMagma + ?Sized>(g: &M) -> Vec<M::Elem> {
    g.elements()
}

/// Smallest subset containing `seed` and closed under the n-ary product.
pub fn product_closure<M: FiniteMagma + ?Sized>(g: &M, seed: &[M::Elem]) -> Vec<M::Elem> {
    let mut set: BTreeSet<M::Elem> = seed.iter().cloned().collect();
    if set.is_empty() {
        return Vec::new();
    }
    loop {
        let current: Vec<_> = set.iter().cloned().collect();
        let before = set.len();
        for p in std::iter::repeat_n(current.iter(), g.arity()).multi_cartesian_product() {
            let w: Vec<_> = p.into_iter().cloned().collect();
            set.insert(g.product(&w));
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}
