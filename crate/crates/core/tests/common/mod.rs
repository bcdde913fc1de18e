//! Random loops for the integration tests. Everything is built from factors
//! whose class is known by construction: elementary matrices with polynomial
//! (or negative-power) entries, invertible constants and torus points.

#![allow(dead_code)]

use loopgrass::algebra::{Field, LaurentMatrix, LaurentPoly, Scalar};
use loopgrass::rootdata::Coweight;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

pub fn scalar(field: Field, rng: &mut TestRng) -> Scalar {
    field.from_i64(rng.gen_range(-3..=3))
}

pub fn nonzero_scalar(field: Field, rng: &mut TestRng) -> Scalar {
    loop {
        let c = scalar(field, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random Laurent polynomial supported on exponents `lo..=hi`.
pub fn laurent(field: Field, lo: i64, hi: i64, rng: &mut TestRng) -> LaurentPoly {
    LaurentPoly::from_terms(field, (lo..=hi).map(|k| (k, scalar(field, rng))))
}

fn elementary_product(
    field: Field,
    n: usize,
    factors: usize,
    lo: i64,
    hi: i64,
    rng: &mut TestRng,
) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(field, n);
    if n < 2 {
        return m;
    }
    for _ in 0..factors {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let e = LaurentMatrix::elementary(field, n, i, j, laurent(field, lo, hi, rng));
        m = m.mul(&e).unwrap();
    }
    m
}

/// Random element of `GL_n(k[t])`: a permutation, invertible constants and
/// elementary factors with entries of degree at most `deg`.
pub fn positive_unit(field: Field, n: usize, deg: i64, rng: &mut TestRng) -> LaurentMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let diag = (0..n)
        .map(|_| LaurentPoly::constant(nonzero_scalar(field, rng)))
        .collect();
    LaurentMatrix::permutation(field, &perm)
        .mul(&LaurentMatrix::diagonal(field, diag))
        .unwrap()
        .mul(&elementary_product(field, n, 2 * n, 0, deg, rng))
        .unwrap()
}

/// Random element of `L^{<0}`: unipotent factors with entries in
/// `t^-1 k[t^-1]` of degree at most `deg`.
pub fn negative_based(field: Field, n: usize, deg: i64, rng: &mut TestRng) -> LaurentMatrix {
    elementary_product(field, n, 2 * n, -deg, -1, rng)
}

pub fn coweight(n: usize, radius: i64, rng: &mut TestRng) -> Coweight {
    Coweight::new((0..n).map(|_| rng.gen_range(-radius..=radius)).collect())
}

/// `B1 · t^mu · B2` with random positive units.
pub fn double_coset_rep(field: Field, mu: &Coweight, rng: &mut TestRng) -> LaurentMatrix {
    let n = mu.coords().len();
    positive_unit(field, n, 2, rng)
        .mul(&LaurentMatrix::diagonal_t_powers(field, mu.coords()))
        .unwrap()
        .mul(&positive_unit(field, n, 2, rng))
        .unwrap()
}

/// A general loop: positive and negative factors around a torus point.
pub fn general_loop(field: Field, n: usize, rng: &mut TestRng) -> LaurentMatrix {
    let mu = coweight(n, 1, rng);
    positive_unit(field, n, 1, rng)
        .mul(&negative_based(field, n, 1, rng))
        .unwrap()
        .mul(&LaurentMatrix::diagonal_t_powers(field, mu.coords()))
        .unwrap()
        .mul(&positive_unit(field, n, 1, rng))
        .unwrap()
}

/// Sorted in decreasing order, the dominant form for `GL_n`.
pub fn sorted_desc(mu: &Coweight) -> Coweight {
    let mut v = mu.coords().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Coweight::new(v)
}
