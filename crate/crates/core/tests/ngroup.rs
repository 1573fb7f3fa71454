//! n-ary group facts checked against the explicit matrix oracle.

mod support;

use pgr_core::ngroup::{
    gelements, gidempotent_check, gidentities, gidentities_every_position, gmul, gneutral_polyads, gquer,
    AdiagCyclic, AdiagKey, CyclicKey, DerivedCyclic, FiniteMagma, NaryGroup,
};
use support::{adiag_triple, adiag_universe, brute_identities, brute_quer, Mat};

fn key((m, n): (u32, u32)) -> AdiagKey {
    AdiagKey::new(m, n)
}

#[test]
fn products_match_matrix_multiplication() {
    for k in 2..=5 {
        let g = AdiagCyclic::new(k).unwrap();
        let u = adiag_universe(k);
        for &a in &u {
            for &b in &u {
                for &c in &u {
                    let (m, n) = adiag_triple(k, a, b, c);
                    assert_eq!(gmul(&g, &[key(a), key(b), key(c)]), Ok(AdiagKey::new(m, n)));
                }
            }
        }
    }
}

#[test]
fn spec_products() {
    let g = AdiagCyclic::new(3).unwrap();
    let k = |m, n| AdiagKey::new(m, n);
    assert_eq!(gmul(&g, &[k(1, 1), k(0, 2), k(1, 0)]), Ok(k(1, 1)));
    assert_eq!(gmul(&g, &[k(1, 1), k(1, 2), k(1, 0)]), Ok(k(1, 2)));
    for x in g.elements() {
        assert_eq!(gmul(&g, &[k(0, 0), k(0, 0), x]), Ok(x));
    }
    assert!(gmul(&g, &[k(0, 0), k(0, 0)]).is_err());
}

#[test]
fn binary_products_leave_the_set() {
    let k = 3;
    let u = adiag_universe(k);
    let mut count = 0;
    for &(m1, n1) in &u {
        for &(m2, n2) in &u {
            let p = Mat::antidiag(k, m1, n1).mul(&Mat::antidiag(k, m2, n2));
            assert!(p.is_diagonal() && p.as_antidiag().is_none());
            count += 1;
        }
    }
    assert_eq!(count, 81);
}

#[test]
fn identities_match_brute_force() {
    for k in 2..=5 {
        let g = AdiagCyclic::new(k).unwrap();
        let brute: Vec<AdiagKey> = brute_identities(k).into_iter().map(key).collect();
        let mut closed: Vec<AdiagKey> = (0..k).map(|t| AdiagKey::new(t, (k - t) % k)).collect();
        closed.sort();
        assert_eq!(gidentities(&g), brute);
        assert_eq!(gidentities(&g), closed);
        assert_eq!(gidentities(&g).len(), k as usize);
        // mu[e, x, e] swaps the exponents of x, so no element is neutral in
        // the middle position
        assert!(gidentities_every_position(&g).is_empty());
    }
    let g = AdiagCyclic::new(3).unwrap();
    assert_eq!(gidentities(&g), vec![AdiagKey::new(0, 0), AdiagKey::new(2, 1), AdiagKey::new(1, 2)]);
    let d = DerivedCyclic::new(3, 3).unwrap();
    assert_eq!(gidentities(&d), vec![CyclicKey(0)]);
    assert_eq!(gidentities_every_position(&d), vec![CyclicKey(0)]);
}

#[test]
fn querelements_match_brute_force() {
    for k in 2..=5 {
        let g = AdiagCyclic::new(k).unwrap();
        for x in adiag_universe(k) {
            let q = gquer(&g, &key(x)).unwrap();
            assert_eq!(Some((q.m, q.n)), brute_quer(k, x));
            assert_eq!((q.m, q.n), ((k - x.1) % k, (k - x.0) % k));
        }
    }
    let g = AdiagCyclic::new(3).unwrap();
    assert_eq!(gquer(&g, &AdiagKey::new(1, 2)), Ok(AdiagKey::new(1, 2)));
    assert_eq!(gquer(&g, &AdiagKey::new(0, 0)), Ok(AdiagKey::new(0, 0)));
    assert_eq!(gquer(&g, &AdiagKey::new(1, 0)), Ok(AdiagKey::new(0, 2)));
    let d = DerivedCyclic::new(5, 4).unwrap();
    for x in d.elements() {
        let q = d.querelement(&x).unwrap();
        assert_eq!(pgr_core::ngroup::find_querelement(&d, &x), Ok(q));
    }
}

#[test]
fn neutral_polyads() {
    let g = AdiagCyclic::new(3).unwrap();
    let polyads = gneutral_polyads(&g);
    assert_eq!(polyads.len(), 9);
    for p in &polyads {
        assert_eq!(gquer(&g, &p[0]), Ok(p[1]));
    }
    let constant: Vec<AdiagKey> = polyads.iter().filter(|p| p[0] == p[1]).map(|p| p[0]).collect();
    assert_eq!(constant, gidentities(&g));
    let d = DerivedCyclic::new(2, 3).unwrap();
    assert_eq!(gneutral_polyads(&d), vec![vec![CyclicKey(0); 2], vec![CyclicKey(1); 2]]);
}

#[test]
fn idempotence() {
    for k in 2..=5 {
        let g = AdiagCyclic::new(k).unwrap();
        for x in g.elements() {
            assert_eq!(gidempotent_check(&g, &x, k as u64), Ok(true));
        }
    }
    let g = AdiagCyclic::new(3).unwrap();
    assert_eq!(gidempotent_check(&g, &AdiagKey::new(1, 0), 1), Ok(false));
    assert_eq!(gidempotent_check(&g, &AdiagKey::new(0, 0), 1), Ok(true));
}

#[test]
fn enumeration() {
    assert_eq!(gelements(&AdiagCyclic::new(3).unwrap()).len(), 9);
    assert_eq!(gelements(&AdiagCyclic::new(2).unwrap()).len(), 4);
    assert_eq!(gelements(&DerivedCyclic::new(3, 3).unwrap()).len(), 3);
    let g = AdiagCyclic::new(3).unwrap();
    let labels: Vec<u64> = g.elements().iter().map(|x| g.legacy_index(x)).collect();
    assert_eq!(labels, (1..=9).collect::<Vec<_>>());
}
