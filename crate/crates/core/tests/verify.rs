//! Verification engine: passing laws, negative controls, reproducibility.

mod support;

use pgr_core::ngroup::{gquer, AdiagCyclic, AdiagKey, Placement};
use pgr_core::verify::{self, controls, CheckConfig, Law, Mode, NaryOp, Status};
use pgr_core::{Execution, PolyadicRing, RingScalar};
use support::{adiag_triple, ring_product};

fn c(r: &RingScalar) -> i128 {
    r.coeff().unwrap().try_into().unwrap()
}

#[test]
fn corrupted_distributivity_counterexample_is_real() {
    let ring = PolyadicRing::jroot(2).unwrap();
    let r = controls::corrupted_distributivity(&ring, &CheckConfig::sampled(500, 1)).unwrap();
    assert_eq!(r.status, Status::Fails);
    let w: Vec<i128> = r.counterexample.as_ref().unwrap().word.iter().map(c).collect();
    // the corrupted product is -|a b c|; some slot must break distributivity
    let bad = |x: &[i128]| -(x.iter().product::<i128>()).abs();
    let (others, summands) = w.split_at(2);
    let broken = (0..3).any(|slot| {
        let with = |x| {
            let mut v = others.to_vec();
            v.insert(slot, x);
            v
        };
        bad(&with(summands[0] + summands[1])) != bad(&with(summands[0])) + bad(&with(summands[1]))
    });
    assert!(broken);
    // the genuine ring passes on the same word
    let (others, summands) = w.split_at(2);
    for slot in 0..3 {
        let with = |x| {
            let mut v = others.to_vec();
            v.insert(slot, x);
            v
        };
        assert_eq!(
            ring_product(2, &with(summands[0] + summands[1])),
            ring_product(2, &with(summands[0])) + ring_product(2, &with(summands[1]))
        );
    }
}

#[test]
fn wrong_zero_counterexample_is_real() {
    let ring = PolyadicRing::jroot(2).unwrap();
    let r = controls::wrong_zero(&ring, &CheckConfig::sampled(100, 2)).unwrap();
    assert_eq!(r.status, Status::Fails);
    let x = c(&r.counterexample.unwrap().word[0]);
    assert_ne!(x + 1, x);
}

#[test]
fn skew_associativity_counterexample_is_real() {
    let r = controls::skew_associativity(&CheckConfig::sampled(100, 3)).unwrap();
    assert_eq!(r.status, Status::Fails);
    let w = r.counterexample.unwrap().word;
    let f = |a: i64, b: i64, c: i64| a - b + 2 * c;
    let left = f(f(w[0], w[1], w[2]), w[3], w[4]);
    let mid = f(w[0], f(w[1], w[2], w[3]), w[4]);
    let right = f(w[0], w[1], f(w[2], w[3], w[4]));
    assert!(left != mid || mid != right);
}

#[test]
fn identity_as_quer_counterexample_is_real() {
    let g = AdiagCyclic::new(3).unwrap();
    let r = controls::identity_as_quer(&g, &CheckConfig::exhaustive()).unwrap();
    assert_eq!(r.status, Status::Fails);
    let x = r.counterexample.unwrap().word[0];
    let x = (x.m, x.n);
    assert!(adiag_triple(3, x, x, x) != x);
}

#[test]
fn genuine_laws_hold() {
    let g = AdiagCyclic::new(3).unwrap();
    let quer = |x: &AdiagKey| gquer(&g, x).unwrap();
    let r = verify::check_axiom(&verify::group_op(&g), &Law::Quer(&quer), &verify::group_domain(&g), &CheckConfig::default()).unwrap();
    assert!(r.holds());
    assert_eq!((r.mode, r.cases), (Mode::Exhaustive, 9));
    let e = AdiagKey::new(0, 0);
    let ends = Law::Identity(e, Placement::Ends);
    assert!(verify::check_axiom(&verify::group_op(&g), &ends, &verify::group_domain(&g), &CheckConfig::default()).unwrap().holds());
    let every = Law::Identity(e, Placement::Every);
    assert!(!verify::check_axiom(&verify::group_op(&g), &every, &verify::group_domain(&g), &CheckConfig::default()).unwrap().holds());

    let ring = PolyadicRing::jroot(2).unwrap();
    let cfg = CheckConfig::sampled(300, 9);
    assert!(verify::check_ring_distributivity(&ring, &cfg).unwrap().holds());
    let comm = verify::check_axiom(&verify::ring_mul(&ring), &Law::Commutativity, &verify::ring_domain(&ring), &cfg).unwrap();
    assert!(comm.holds());
}

#[test]
fn sampled_reports_are_reproducible() {
    let ring = PolyadicRing::jroot(2).unwrap();
    let run = |seed, exec| {
        let cfg = CheckConfig::sampled(200, seed).with_exec(exec);
        controls::corrupted_distributivity(&ring, &cfg).unwrap().erase()
    };
    let a = run(4, Execution::Parallel);
    assert_eq!(a, run(4, Execution::Parallel));
    assert_eq!(a, run(4, Execution::Sequential));
    assert_eq!(a.seed, Some(4));
    assert!(a.to_json().contains("\"status\":\"fails\""));
}

#[test]
fn auto_degrades_to_sampling() {
    let ring = PolyadicRing::jroot(2).unwrap().with_modulus(7).unwrap();
    let mut cfg = CheckConfig::default();
    let r = verify::check_ring_distributivity(&ring, &cfg).unwrap();
    assert_eq!((r.mode, r.cases), (Mode::Exhaustive, 7u64.pow(4)));
    cfg.budget = 100;
    let r = verify::check_ring_distributivity(&ring, &cfg).unwrap();
    assert_eq!(r.mode, Mode::Sampled);
    assert!(r.holds());
    let op = NaryOp::total(3, controls::skew_ternary);
    let exhaustive = verify::check_total_associativity(&op, &controls::integer_domain(), &CheckConfig::exhaustive());
    assert!(exhaustive.is_err());
}
