//! Axiom checks for finite and sampled structures.
//!
//! Each check enumerates *cases* (words over a [`Domain`]) either
//! exhaustively or by seeded sampling, evaluates both sides of a law, and
//! returns an [`AxiomReport`]. Failing reports carry the first counterexample
//! in enumeration order, so the outcome does not depend on the execution
//! strategy.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arity::try_iterate_op;
use crate::error::{AlgebraError, Result};
use crate::exec::Execution;
use crate::groupring::{Element, GroupRing};
use crate::ngroup::{FiniteMagma, NaryGroup, Placement};
use crate::pring::{PolyadicRing, RingScalar};

/// Default cap on exhaustively evaluated words per check.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Default number of sampled cases.
pub const DEFAULT_SAMPLES: u64 = 1000;

/// Coefficient range used when sampling infinite rings.
pub const SAMPLE_RANGE: (i64, i64) = (-50, 50);

type OpFn<'a, T> = dyn Fn(&[T]) -> Result<T> + Send + Sync + 'a;

/// An n-ary operation under test.
pub struct NaryOp<'a, T> {
    arity: usize,
    f: Box<OpFn<'a, T>>,
}

impl<'a, T> NaryOp<'a, T> {
    pub fn new(arity: usize, f: impl Fn(&[T]) -> Result<T> + Send + Sync + 'a) -> Self {
        NaryOp { arity, f: Box::new(f) }
    }

    /// Wraps an infallible operation.
    pub fn total(arity: usize, f: impl Fn(&[T]) -> T + Send + Sync + 'a) -> Self {
        Self::new(arity, move |w| Ok(f(w)))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Applies the operation, rejecting words of the wrong length.
    pub fn apply(&self, w: &[T]) -> Result<T> {
        if w.len() != self.arity {
            return Err(AlgebraError::ArityMismatch { expected: self.arity, got: w.len() });
        }
        (self.f)(w)
    }
}

type Sampler<'a, T> = dyn Fn(&mut ChaCha8Rng) -> T + Send + Sync + 'a;
type Formatter<'a, T> = dyn Fn(&T) -> String + Send + Sync + 'a;

/// Where the letters of test words come from: a finite universe, a sampler,
/// or both.
pub struct Domain<'a, T> {
    label: String,
    universe: Option<Vec<T>>,
    sampler: Option<Box<Sampler<'a, T>>>,
    format: Box<Formatter<'a, T>>,
}

impl<'a, T: Clone + Send + Sync + 'a> Domain<'a, T> {
    pub fn finite(label: impl Into<String>, universe: Vec<T>, format: impl Fn(&T) -> String + Send + Sync + 'a) -> Self {
        Domain { label: label.into(), universe: Some(universe), sampler: None, format: Box::new(format) }
    }

    pub fn sampled(
        label: impl Into<String>,
        sampler: impl Fn(&mut ChaCha8Rng) -> T + Send + Sync + 'a,
        format: impl Fn(&T) -> String + Send + Sync + 'a,
    ) -> Self {
        Domain { label: label.into(), universe: None, sampler: Some(Box::new(sampler)), format: Box::new(format) }
    }

    /// Replaces uniform sampling from the universe.
    pub fn with_sampler(mut self, sampler: impl Fn(&mut ChaCha8Rng) -> T + Send + Sync + 'a) -> Self {
        self.sampler = Some(Box::new(sampler));
        self
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> T {
        match (&self.sampler, &self.universe) {
            (Some(s), _) => s(rng),
            (None, Some(u)) => u[rng.gen_range(0..u.len())].clone(),
            (None, None) => unreachable!("a domain has a universe or a sampler"),
        }
    }
}

impl<T> Domain<'_, T> {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn universe(&self) -> Option<&[T]> {
        self.universe.as_deref()
    }

    pub fn format(&self, x: &T) -> String {
        (self.format)(x)
    }
}

/// How cases are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Sampled,
    /// Exhaustive when the universe is finite and within budget, sampled
    /// otherwise.
    Auto,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub strategy: Strategy,
    pub budget: u64,
    pub samples: u64,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            strategy: Strategy::Auto,
            budget: DEFAULT_BUDGET,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            exec: Execution::default(),
        }
    }
}

impl CheckConfig {
    pub fn exhaustive() -> Self {
        CheckConfig { strategy: Strategy::Exhaustive, ..Self::default() }
    }

    pub fn sampled(samples: u64, seed: u64) -> Self {
        CheckConfig { strategy: Strategy::Sampled, samples, seed, ..Self::default() }
    }

    pub fn with_exec(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

/// A word on which a law fails, with the disagreeing evaluations.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct Counterexample<T> {
    #[serde(skip)]
    pub word: Vec<T>,
    #[serde(rename = "word")]
    pub word_text: Vec<String>,
    pub evaluations: Vec<String>,
    pub detail: String,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct AxiomReport<T> {
    pub structure: String,
    pub axiom: String,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub cases: u64,
    pub status: Status,
    pub counterexample: Option<Counterexample<T>>,
    pub note: Option<String>,
}

impl<T> AxiomReport<T> {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Same report with the typed word dropped.
    pub fn erase(self) -> AxiomReport<String> {
        AxiomReport {
            structure: self.structure,
            axiom: self.axiom,
            mode: self.mode,
            seed: self.seed,
            cases: self.cases,
            status: self.status,
            counterexample: self.counterexample.map(|c| Counterexample {
                word: c.word_text.clone(),
                word_text: c.word_text,
                evaluations: c.evaluations,
                detail: c.detail,
            }),
            note: self.note,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl<T> fmt::Display for AxiomReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
        };
        write!(f, "{status} {} on {} ", self.axiom, self.structure)?;
        match (self.mode, self.seed) {
            (Mode::Exhaustive, _) => write!(f, "[exhaustive, {} cases]", self.cases)?,
            (Mode::Sampled, seed) => write!(f, "[sampled, {} cases, seed {}]", self.cases, seed.unwrap_or(0))?,
        }
        if let Some(c) = &self.counterexample {
            write!(
                f,
                " counterexample [{}] gives {}: {}",
                c.word_text.join(", "),
                c.evaluations.join(" vs "),
                c.detail
            )?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// A failing case found by a law evaluator.
struct Violation {
    evaluations: Vec<String>,
    detail: String,
}

fn show<T>(d: &Domain<'_, T>, r: &Result<T>) -> String {
    match r {
        Ok(x) => d.format(x),
        Err(e) => format!("error: {e}"),
    }
}

struct Plan {
    mode: Mode,
    cases: u64,
    note: Option<String>,
}

fn plan<T: Clone + Send + Sync>(domain: &Domain<'_, T>, word_len: usize, cfg: &CheckConfig) -> Result<Plan> {
    let exhaustive_count = domain
        .universe()
        .map(|u| (u.len() as u128).checked_pow(word_len as u32).unwrap_or(u128::MAX));
    let sampled = |note| Plan { mode: Mode::Sampled, cases: cfg.samples, note };
    match (cfg.strategy, exhaustive_count) {
        (Strategy::Sampled, _) => Ok(sampled(None)),
        (Strategy::Exhaustive, None) => Err(AlgebraError::InfiniteUniverse),
        (Strategy::Exhaustive, Some(n)) if n > cfg.budget as u128 => {
            Err(AlgebraError::BudgetExceeded { needed: n, budget: cfg.budget as u128 })
        }
        (Strategy::Auto, None) => Ok(sampled(None)),
        (Strategy::Auto, Some(n)) if n > cfg.budget as u128 => Ok(sampled(Some(format!(
            "{n} words exceed the exhaustive budget of {}; sampled instead",
            cfg.budget
        )))),
        (_, Some(n)) => Ok(Plan { mode: Mode::Exhaustive, cases: n as u64, note: None }),
    }
}

/// The `i`-th word: a mixed-radix index in exhaustive mode, a seeded draw
/// otherwise.
fn case_word<T: Clone + Send + Sync>(domain: &Domain<'_, T>, mode: Mode, seed: u64, word_len: usize, i: u64) -> Vec<T> {
    match mode {
        Mode::Exhaustive => {
            let u = domain.universe().expect("exhaustive mode has a universe");
            let mut idx = i;
            let mut w = vec![u[0].clone(); word_len];
            for slot in (0..word_len).rev() {
                w[slot] = u[(idx % u.len() as u64) as usize].clone();
                idx /= u.len() as u64;
            }
            w
        }
        Mode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            (0..word_len).map(|_| domain.sample(&mut rng)).collect()
        }
    }
}

/// Runs `law` on every case and reports the first violation.
fn run_cases<T, F>(
    domain: &Domain<'_, T>,
    axiom: &str,
    word_len: usize,
    cfg: &CheckConfig,
    law: F,
) -> Result<AxiomReport<T>>
where
    T: Clone + Send + Sync,
    F: Fn(&[T]) -> Option<Violation> + Send + Sync,
{
    let plan = plan(domain, word_len, cfg)?;
    let hit = cfg.exec.find_first(plan.cases as usize, |i| {
        let w = case_word(domain, plan.mode, cfg.seed, word_len, i as u64);
        law(&w).map(|v| (w, v))
    });
    let seed = (plan.mode == Mode::Sampled).then_some(cfg.seed);
    let (status, cases, counterexample) = match hit {
        None => (Status::Holds, plan.cases, None),
        Some((i, (word, v))) => {
            let word_text = word.iter().map(|x| domain.format(x)).collect();
            let c = Counterexample { word, word_text, evaluations: v.evaluations, detail: v.detail };
            (Status::Fails, i as u64 + 1, Some(c))
        }
    };
    Ok(AxiomReport {
        structure: domain.label().to_string(),
        axiom: axiom.to_string(),
        mode: plan.mode,
        seed,
        cases,
        status,
        counterexample,
        note: plan.note,
    })
}

/// `op` applied to `w` with the inner product of `w[p..p+n]` substituted.
pub fn placement_eval<T: Clone>(op: &NaryOp<'_, T>, w: &[T], p: usize) -> Result<T> {
    let n = op.arity();
    let inner = op.apply(&w[p..p + n])?;
    let mut outer = Vec::with_capacity(n);
    outer.extend_from_slice(&w[..p]);
    outer.push(inner);
    outer.extend_from_slice(&w[p + n..]);
    op.apply(&outer)
}

/// Total associativity: on words of length `2n - 1` all `n` placements of
/// the inner product agree.
pub fn check_total_associativity<T>(op: &NaryOp<'_, T>, domain: &Domain<'_, T>, cfg: &CheckConfig) -> Result<AxiomReport<T>>
where
    T: Clone + PartialEq + Send + Sync,
{
    let n = op.arity();
    run_cases(domain, "total-associativity", 2 * n - 1, cfg, |w| {
        let evals: Vec<Result<T>> = (0..n).map(|p| placement_eval(op, w, p)).collect();
        let bad = (1..n).find(|&p| evals[p] != evals[0] || evals[p].is_err())?;
        Some(Violation {
            evaluations: evals.iter().map(|e| show(domain, e)).collect(),
            detail: format!("placement 0 and placement {bad} disagree"),
        })
    })
}

/// Distributivity of `mul` over `add` in every slot: words are the
/// `n - 1` fixed factors followed by the `m` summands.
pub fn check_distributivity<T>(
    add: &NaryOp<'_, T>,
    mul: &NaryOp<'_, T>,
    domain: &Domain<'_, T>,
    cfg: &CheckConfig,
) -> Result<AxiomReport<T>>
where
    T: Clone + PartialEq + Send + Sync,
{
    let (m, n) = (add.arity(), mul.arity());
    run_cases(domain, "distributivity", n - 1 + m, cfg, |w| {
        let (others, summands) = w.split_at(n - 1);
        let with_at = |slot: usize, x: T| {
            let mut v = others.to_vec();
            v.insert(slot, x);
            v
        };
        for slot in 0..n {
            let lhs = add.apply(summands).and_then(|s| mul.apply(&with_at(slot, s)));
            let rhs = summands
                .iter()
                .map(|s| mul.apply(&with_at(slot, s.clone())))
                .collect::<Result<Vec<T>>>()
                .and_then(|ps| add.apply(&ps));
            if lhs != rhs || lhs.is_err() {
                return Some(Violation {
                    evaluations: vec![show(domain, &lhs), show(domain, &rhs)],
                    detail: format!("slot {slot}: product of the sum differs from the sum of products"),
                });
            }
        }
        None
    })
}

/// A law about one operation and distinguished elements.
pub enum Law<'a, T> {
    /// `z` absorbs: `op[.., z, ..] = z` at every position.
    Absorbing(T),
    /// `op[e, .., x, .., e] = x` for every `x` at the given placements.
    Identity(T, Placement),
    /// `op[x, .., quer(x), .., x] = x` at every position.
    Quer(&'a (dyn Fn(&T) -> T + Sync)),
    /// Invariance under every permutation of the operands.
    Commutativity,
}

impl<T> Law<'_, T> {
    fn name(&self) -> &'static str {
        match self {
            Law::Absorbing(_) => "zero-absorption",
            Law::Identity(..) => "identity",
            Law::Quer(_) => "querelement",
            Law::Commutativity => "commutativity",
        }
    }
}

/// Checks a single [`Law`] for `op`.
pub fn check_axiom<T>(op: &NaryOp<'_, T>, law: &Law<'_, T>, domain: &Domain<'_, T>, cfg: &CheckConfig) -> Result<AxiomReport<T>>
where
    T: Clone + PartialEq + Send + Sync,
{
    let n = op.arity();
    let violation = |expected: &T, got: Result<T>, detail: String| {
        (got.as_ref() != Ok(expected)).then(|| Violation {
            evaluations: vec![show(domain, &got), domain.format(expected)],
            detail,
        })
    };
    match law {
        Law::Absorbing(z) => run_cases(domain, law.name(), n - 1, cfg, |w| {
            (0..n).find_map(|pos| {
                let mut v = w.to_vec();
                v.insert(pos, z.clone());
                violation(z, op.apply(&v), format!("not absorbed at position {pos}"))
            })
        }),
        Law::Identity(e, placement) => run_cases(domain, law.name(), 1, cfg, |w| {
            placement.positions(n).into_iter().find_map(|pos| {
                let mut v = vec![e.clone(); n];
                v[pos] = w[0].clone();
                violation(&w[0], op.apply(&v), format!("not neutral with the element at position {pos}"))
            })
        }),
        Law::Quer(quer) => run_cases(domain, law.name(), 1, cfg, |w| {
            let q = quer(&w[0]);
            (0..n).find_map(|pos| {
                let mut v = vec![w[0].clone(); n];
                v[pos] = q.clone();
                violation(&w[0], op.apply(&v), format!("querelement {} fails at position {pos}", domain.format(&q)))
            })
        }),
        Law::Commutativity => run_cases(domain, law.name(), n, cfg, |w| {
            let base = op.apply(w);
            w.iter().cloned().permutations(n).find_map(|p| {
                let r = op.apply(&p);
                (r != base || r.is_err()).then(|| Violation {
                    evaluations: vec![show(domain, &base), show(domain, &r)],
                    detail: format!("permutation [{}] changes the result", p.iter().map(|x| domain.format(x)).join(", ")),
                })
            })
        }),
    }
}

/// Zero law of a ring-like structure: `z` is neutral for `add` in every
/// position and absorbing for `mul`. One report; cases are added up.
pub fn check_zero_law<T>(
    add: &NaryOp<'_, T>,
    mul: &NaryOp<'_, T>,
    z: &T,
    domain: &Domain<'_, T>,
    cfg: &CheckConfig,
) -> Result<AxiomReport<T>>
where
    T: Clone + PartialEq + Send + Sync,
{
    let neutral = check_axiom(add, &Law::Identity(z.clone(), Placement::Every), domain, cfg)?;
    let mut report = if neutral.holds() {
        let absorbing = check_axiom(mul, &Law::Absorbing(z.clone()), domain, cfg)?;
        AxiomReport { cases: neutral.cases + absorbing.cases, ..absorbing }
    } else {
        neutral
    };
    report.axiom = "zero-law".into();
    Ok(report)
}

/// `map` is a homomorphism from `src` to `dst`:
/// `map(src[x_1..x_n]) = dst[map(x_1)..map(x_n)]`.
pub fn check_homomorphism<T, U>(
    src: &NaryOp<'_, T>,
    dst: &NaryOp<'_, U>,
    map: &(dyn Fn(&T) -> Result<U> + Sync),
    format_target: &(dyn Fn(&U) -> String + Sync),
    domain: &Domain<'_, T>,
    cfg: &CheckConfig,
) -> Result<AxiomReport<T>>
where
    T: Clone + PartialEq + Send + Sync,
    U: Clone + PartialEq,
{
    let fmt_u = |r: &Result<U>| match r {
        Ok(u) => format_target(u),
        Err(e) => format!("error: {e}"),
    };
    run_cases(domain, "homomorphism", src.arity(), cfg, |w| {
        let lhs = src.apply(w).and_then(|x| map(&x));
        let rhs = w.iter().map(map).collect::<Result<Vec<U>>>().and_then(|v| dst.apply(&v));
        (lhs != rhs || lhs.is_err()).then(|| Violation {
            evaluations: vec![fmt_u(&lhs), fmt_u(&rhs)],
            detail: "image of the product differs from the product of images".into(),
        })
    })
}

/// Nonderivedness evidence. `binary` returns the would-be binary product
/// when it lies in the universe and `None` otherwise. The report holds when
/// at least one pair leaves the universe; the note records how many do, and
/// a failing report shows a pair whose product stays inside.
pub fn check_closure_nonderived<T>(
    binary: &(dyn Fn(&T, &T) -> Option<T> + Sync),
    domain: &Domain<'_, T>,
) -> Result<AxiomReport<T>>
where
    T: Clone + Send + Sync,
{
    let u = domain.universe().ok_or(AlgebraError::InfiniteUniverse)?;
    let pairs: Vec<(usize, usize)> = (0..u.len()).cartesian_product(0..u.len()).collect();
    let outside = pairs.iter().filter(|&&(a, b)| binary(&u[a], &u[b]).is_none()).count();
    let inside = pairs.iter().find_map(|&(a, b)| binary(&u[a], &u[b]).map(|p| (a, b, p)));
    let (status, counterexample) = if outside > 0 {
        (Status::Holds, None)
    } else {
        let (a, b, p) = inside.expect("a nonempty universe has a pair");
        let word = vec![u[a].clone(), u[b].clone()];
        let c = Counterexample {
            word_text: word.iter().map(|x| domain.format(x)).collect(),
            word,
            evaluations: vec![domain.format(&p)],
            detail: "every binary product stays in the universe".into(),
        };
        (Status::Fails, Some(c))
    };
    Ok(AxiomReport {
        structure: domain.label().to_string(),
        axiom: "nonderived".into(),
        mode: Mode::Exhaustive,
        seed: None,
        cases: pairs.len() as u64,
        status,
        counterexample,
        note: Some(format!("{outside} of {} binary products leave the universe", pairs.len())),
    })
}

// Builders for the concrete structures of this crate.

/// Ring elements: the full universe for modular rings, coefficients drawn
/// from [`SAMPLE_RANGE`] otherwise.
pub fn ring_domain(ring: &PolyadicRing) -> Domain<'_, RingScalar> {
    let fmt = move |r: &RingScalar| ring.format(r);
    let sampler = move |rng: &mut ChaCha8Rng| ring.sample(rng, SAMPLE_RANGE.0, SAMPLE_RANGE.1);
    match ring.elements() {
        Ok(all) => Domain::finite(ring.label(), all, fmt),
        Err(_) => Domain::sampled(ring.label(), sampler, fmt),
    }
}

pub fn ring_add(ring: &PolyadicRing) -> NaryOp<'_, RingScalar> {
    NaryOp::new(ring.add_arity(), move |w| ring.radd(w))
}

pub fn ring_mul(ring: &PolyadicRing) -> NaryOp<'_, RingScalar> {
    NaryOp::new(ring.mul_arity(), move |w| ring.rmul(w))
}

/// Distributivity of a concrete ring.
pub fn check_ring_distributivity(ring: &PolyadicRing, cfg: &CheckConfig) -> Result<AxiomReport<RingScalar>> {
    check_distributivity(&ring_add(ring), &ring_mul(ring), &ring_domain(ring), cfg)
}

pub fn group_domain<G: FiniteMagma>(g: &G) -> Domain<'_, G::Elem> {
    Domain::finite(g.label(), g.elements(), move |x| g.format_elem(x))
}

pub fn group_op<G: FiniteMagma>(g: &G) -> NaryOp<'_, G::Elem> {
    NaryOp::total(g.arity(), move |w| g.product(w))
}

/// Random group-ring elements with up to `max_support` terms; coefficients
/// from [`SAMPLE_RANGE`].
pub fn groupring_domain<G: NaryGroup>(gr: &GroupRing<G>, max_support: usize) -> Domain<'_, Element<G>> {
    Domain::sampled(
        gr.label(),
        move |rng| gr.random_element(rng, max_support, SAMPLE_RANGE.0, SAMPLE_RANGE.1),
        move |x| gr.format(x),
    )
}

pub fn groupring_add<G: NaryGroup>(gr: &GroupRing<G>) -> NaryOp<'_, Element<G>> {
    NaryOp::new(gr.add_arity(), move |w| gr.gr_add(w))
}

pub fn groupring_mul<G: NaryGroup>(gr: &GroupRing<G>) -> NaryOp<'_, Element<G>> {
    NaryOp::new(gr.mul_arity(), move |w| gr.gr_mul(w))
}

/// Ring addition iterated `ell_m` times, the target of the additive
/// augmentation homomorphism.
pub fn iterated_ring_op<'a>(n: usize, ell: u64, op: NaryOp<'a, RingScalar>) -> NaryOp<'a, RingScalar> {
    let len = crate::arity::admissible_length(n as u64, ell).expect("validated profile") as usize;
    NaryOp::new(len, move |w| try_iterate_op(n, ell, w, |x| op.apply(x)))
}

/// Negative controls: deliberately broken structures that every check must
/// reject.
pub mod controls {
    use num_bigint::BigInt;
    use num_traits::Signed;

    use super::*;
    use crate::ngroup::AdiagCyclic;

    /// `(a, b, c) -> a - b + 2c` on integers; not associative.
    pub fn skew_ternary(a: &[i64]) -> i64 {
        a[0] - a[1] + 2 * a[2]
    }

    pub fn integer_domain<'a>() -> Domain<'a, i64> {
        Domain::sampled("Z", |rng| rng.gen_range(SAMPLE_RANGE.0..=SAMPLE_RANGE.1), |x| x.to_string())
    }

    pub fn skew_associativity(cfg: &CheckConfig) -> Result<AxiomReport<i64>> {
        check_total_associativity(&NaryOp::total(3, skew_ternary), &integer_domain(), cfg)
    }

    /// Ring multiplication with the sign of the product replaced by `-|.|`.
    pub fn abs_corrupted_mul(ring: &PolyadicRing) -> NaryOp<'_, RingScalar> {
        NaryOp::new(ring.mul_arity(), move |w: &[RingScalar]| {
            let prod: BigInt = w.iter().map(|r| r.coeff().cloned().unwrap_or_default()).product();
            Ok(ring.scalar(-prod.abs()))
        })
    }

    pub fn corrupted_distributivity(ring: &PolyadicRing, cfg: &CheckConfig) -> Result<AxiomReport<RingScalar>> {
        let mut r = check_distributivity(&ring_add(ring), &abs_corrupted_mul(ring), &ring_domain(ring), cfg)?;
        r.structure = format!("{} with -|product| multiplication", r.structure);
        Ok(r)
    }

    /// Zero law with `1` posing as the zero.
    pub fn wrong_zero(ring: &PolyadicRing, cfg: &CheckConfig) -> Result<AxiomReport<RingScalar>> {
        let fake = ring.scalar(1);
        let mut r = check_zero_law(&ring_add(ring), &ring_mul(ring), &fake, &ring_domain(ring), cfg)?;
        r.structure = format!("{} with {} as zero", r.structure, ring.format(&fake));
        Ok(r)
    }

    /// Querelement law with `x -> x` as the querelement map.
    pub fn identity_as_quer(group: &AdiagCyclic, cfg: &CheckConfig) -> Result<AxiomReport<crate::ngroup::AdiagKey>> {
        let id = |x: &crate::ngroup::AdiagKey| *x;
        let mut r = check_axiom(&group_op(group), &Law::Quer(&id), &group_domain(group), cfg)?;
        r.structure = format!("{} with x as its own querelement", r.structure);
        Ok(r)
    }
}
