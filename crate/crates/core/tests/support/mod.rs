//! Independent reference computations used by the integration tests.
//!
//! None of these call into the library's arithmetic: group elements are
//! multiplied as explicit 2x2 matrices over `C_k ∪ {0}`, ring scalars as
//! polynomials in `Z[x]/(x^q + 1)` with `j = x`.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Entry of a monomial matrix: `None` is zero, `Some(e)` is `a^e`.
pub type Entry = Option<u32>;

/// 2x2 matrix over `C_k ∪ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat {
    pub k: u32,
    pub e: [[Entry; 2]; 2],
}

impl Mat {
    /// `[[0, a^m], [a^n, 0]]`.
    pub fn antidiag(k: u32, m: u32, n: u32) -> Self {
        Mat { k, e: [[None, Some(m % k)], [Some(n % k), None]] }
    }

    /// Matrix product. Entries of products of monomial matrices have at most
    /// one nonzero summand; anything else would leave `C_k ∪ {0}`.
    pub fn mul(&self, o: &Mat) -> Mat {
        let mut e = [[None; 2]; 2];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let terms: Vec<u32> = (0..2)
                    .filter_map(|l| match (self.e[i][l], o.e[l][j]) {
                        (Some(a), Some(b)) => Some((a + b) % self.k),
                        _ => None,
                    })
                    .collect();
                assert!(terms.len() <= 1, "monomial matrices multiply to monomial matrices");
                *cell = terms.first().copied();
            }
        }
        Mat { k: self.k, e }
    }

    /// `(m, n)` when the matrix is antidiagonal with both corners nonzero.
    pub fn as_antidiag(&self) -> Option<(u32, u32)> {
        match self.e {
            [[None, Some(m)], [Some(n), None]] => Some((m, n)),
            _ => None,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.e[0][1].is_none() && self.e[1][0].is_none()
    }
}

/// Ternary product of antidiagonal matrices, returned as `(m, n)`.
pub fn adiag_triple(k: u32, a: (u32, u32), b: (u32, u32), c: (u32, u32)) -> (u32, u32) {
    let p = Mat::antidiag(k, a.0, a.1).mul(&Mat::antidiag(k, b.0, b.1)).mul(&Mat::antidiag(k, c.0, c.1));
    p.as_antidiag().expect("odd products of antidiagonal matrices are antidiagonal")
}

/// Product of any odd number of antidiagonal matrices.
pub fn adiag_word(k: u32, w: &[(u32, u32)]) -> (u32, u32) {
    let p = w.iter().skip(1).fold(Mat::antidiag(k, w[0].0, w[0].1), |acc, x| acc.mul(&Mat::antidiag(k, x.0, x.1)));
    p.as_antidiag().expect("odd-length word")
}

/// All `k^2` pairs in legacy order `i = k*n + m + 1`.
pub fn adiag_universe(k: u32) -> Vec<(u32, u32)> {
    (0..k).flat_map(|n| (0..k).map(move |m| (m, n))).collect()
}

pub fn legacy_label(k: u32, (m, n): (u32, u32)) -> u64 {
    (k * n + m + 1) as u64
}

pub fn from_legacy(k: u32, i: u64) -> (u32, u32) {
    let j = (i - 1) as u32;
    (j % k, j / k)
}

/// Brute-force identities: `e` with `e..e x = x = x e..e` for all `x`.
pub fn brute_identities(k: u32) -> Vec<(u32, u32)> {
    let u = adiag_universe(k);
    u.iter()
        .copied()
        .filter(|&e| u.iter().all(|&x| adiag_triple(k, e, e, x) == x && adiag_triple(k, x, e, e) == x))
        .collect()
}

/// Brute-force querelement valid at all three positions.
pub fn brute_quer(k: u32, x: (u32, u32)) -> Option<(u32, u32)> {
    adiag_universe(k).into_iter().find(|&q| {
        adiag_triple(k, q, x, x) == x && adiag_triple(k, x, q, x) == x && adiag_triple(k, x, x, q) == x
    })
}

/// Polynomial in `Z[x]/(x^q + 1)`, coefficients by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub q: usize,
    pub c: Vec<i128>,
}

impl Poly {
    /// `k * x`, the scalar written `k j_q`. For `q = 1` the ring is `Z`
    /// and the scalar is the constant `k`.
    pub fn jk(q: usize, k: i128) -> Self {
        let mut c = vec![0; q];
        if q == 1 {
            c[0] = k;
        } else {
            c[1] = k;
        }
        Poly { q, c }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let q = self.q;
        let mut c = vec![0i128; q];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                // x^q = -1 folds degree d >= q onto d - q with a sign flip
                let d = i + j;
                let (deg, sign) = if d >= q { (d - q, -1) } else { (d, 1) };
                c[deg] += sign * a * b;
            }
        }
        Poly { q, c }
    }

    /// The coefficient `k` when the polynomial is `k x` (or `k` for `q = 1`).
    pub fn as_jk(&self) -> Option<i128> {
        let deg = if self.q == 1 { 0 } else { 1 };
        self.c.iter().enumerate().all(|(d, &v)| d == deg || v == 0).then(|| self.c[deg])
    }
}

/// Ring product of `q + 1` scalars through the polynomial model.
pub fn ring_product(q: usize, ks: &[i128]) -> i128 {
    let p = ks.iter().skip(1).fold(Poly::jk(q, ks[0]), |acc, &k| acc.mul(&Poly::jk(q, k)));
    p.as_jk().expect("products of q+1 multiples of j are multiples of j")
}

/// Group-ring element as `legacy label -> coefficient`.
pub type Sparse = BTreeMap<u64, i128>;

/// Naive ternary product over `jZ[adiag(C_k)]`: every choice of terms, ring
/// coefficient by the polynomial model, key by matrix multiplication.
/// Returns the expansion in lexicographic term order and the gathered sum.
pub fn naive_ternary(k: u32, ops: [&[(i128, u64)]; 3]) -> (Vec<(i128, u64)>, Sparse) {
    let mut expansion = Vec::new();
    let mut total = Sparse::new();
    for &(a, ga) in ops[0] {
        for &(b, gb) in ops[1] {
            for &(c, gc) in ops[2] {
                let coeff = ring_product(2, &[a, b, c]);
                let key = adiag_triple(k, from_legacy(k, ga), from_legacy(k, gb), from_legacy(k, gc));
                let label = legacy_label(k, key);
                expansion.push((coeff, label));
                *total.entry(label).or_default() += coeff;
            }
        }
    }
    total.retain(|_, v| *v != 0);
    (expansion, total)
}
