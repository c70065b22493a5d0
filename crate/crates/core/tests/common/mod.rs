//! Test-only fixtures: the shipped worked example and a random generator of
//! matrices with known Jordan structure.
#![allow(dead_code)]

use std::path::PathBuf;

use chevalley::text::{parse_matrix, parse_polynomial};
use chevalley::{CrtSystem, Polynomial, Rational, SquareMatrix};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .canonicalize()
        .expect("fixture directory")
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_matrix(name: &str) -> SquareMatrix {
    parse_matrix(&fixture_text(name)).unwrap()
}

pub fn fixture_poly(name: &str) -> Polynomial {
    parse_polynomial(&fixture_text(name)).unwrap()
}

pub struct WorkedExample {
    pub u: SquareMatrix,
    pub d: SquareMatrix,
    pub n: SquareMatrix,
    pub p: Polynomial,
    pub gcd: Polynomial,
    pub p_tilde: Polynomial,
    pub h2: Polynomial,
}

pub fn worked_example() -> WorkedExample {
    WorkedExample {
        u: fixture_matrix("u_paper_15x15.txt"),
        d: fixture_matrix("d_paper_15x15.txt"),
        n: fixture_matrix("n_paper_15x15.txt"),
        p: fixture_poly("p_paper.txt"),
        gcd: fixture_poly("gcd_paper.txt"),
        p_tilde: fixture_poly("p_tilde_paper.txt"),
        h2: fixture_poly("h2_paper.txt"),
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn jordan_block(lambda: &Rational, k: usize) -> SquareMatrix {
    SquareMatrix::from_fn(k, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            int(1)
        } else {
            int(0)
        }
    })
}

/// `U = P^{-1} J P` with `J` a block-diagonal of Jordan blocks, together with
/// the parts of `U` known from the construction.
#[derive(Debug, Clone)]
pub struct JordanFixture {
    pub u: SquareMatrix,
    pub p: SquareMatrix,
    pub p_inv: SquareMatrix,
    /// `(eigenvalue, block size)` in block order.
    pub blocks: Vec<(Rational, usize)>,
    /// `P^{-1} diag(eigenvalues) P`.
    pub expected_d: SquareMatrix,
    /// `P^{-1} (J - diag) P`.
    pub expected_n: SquareMatrix,
}

impl JordanFixture {
    pub fn dim(&self) -> usize {
        self.u.dim()
    }

    /// Distinct eigenvalues with their algebraic multiplicities.
    pub fn spectrum(&self) -> Vec<(Rational, u32)> {
        let mut out: Vec<(Rational, u32)> = Vec::new();
        for (l, k) in &self.blocks {
            match out.iter_mut().find(|(r, _)| r == l) {
                Some((_, m)) => *m += *k as u32,
                None => out.push((l.clone(), *k as u32)),
            }
        }
        out
    }

    pub fn crt_system(&self) -> CrtSystem {
        CrtSystem::new(self.spectrum()).unwrap()
    }

    /// Largest Jordan block size: the nilpotency index of `N`.
    pub fn largest_block(&self) -> usize {
        self.blocks.iter().map(|(_, k)| *k).max().unwrap()
    }
}

/// Random unimodular integer matrix: a shuffled product of elementary
/// row additions, so both it and its inverse have integer entries.
pub fn random_unimodular(rng: &mut StdRng, n: usize) -> SquareMatrix {
    let mut p = SquareMatrix::identity(n);
    if n == 1 {
        return p;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = int(rng.gen_range(-2..=2));
        for col in 0..n {
            let v = p[(i, col)].clone() + c.clone() * p[(j, col)].clone();
            p.set(i, col, v);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    SquareMatrix::from_fn(n, |i, j| p[(perm[i], j)].clone())
}

fn random_eigenvalue(rng: &mut StdRng) -> Rational {
    let den = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    frac(rng.gen_range(-5..=5), den)
}

/// Random fixture of dimension `n`. Eigenvalues are drawn from a small pool
/// so that several blocks often share an eigenvalue.
pub fn random_jordan_fixture(rng: &mut StdRng, n: usize) -> JordanFixture {
    let pool: Vec<Rational> = {
        let mut pool = Vec::new();
        let want = rng.gen_range(1..=n.min(3));
        while pool.len() < want {
            let l = random_eigenvalue(rng);
            if !pool.contains(&l) {
                pool.push(l);
            }
        }
        pool
    };
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let k = rng.gen_range(1..=left.min(4));
        blocks.push((pool.choose(rng).unwrap().clone(), k));
        left -= k;
    }
    build_fixture(rng, blocks)
}

pub fn build_fixture(rng: &mut StdRng, blocks: Vec<(Rational, usize)>) -> JordanFixture {
    let j_blocks: Vec<SquareMatrix> = blocks.iter().map(|(l, k)| jordan_block(l, *k)).collect();
    let j = SquareMatrix::block_diagonal(&j_blocks).unwrap();
    let n = j.dim();
    let diag = SquareMatrix::from_fn(n, |i, k| if i == k { j[(i, i)].clone() } else { int(0) });
    let shift = &j - &diag;
    let p = random_unimodular(rng, n);
    let p_inv = p.inverse().unwrap();
    let conj = |m: &SquareMatrix| &(&p_inv * m) * &p;
    JordanFixture {
        u: conj(&j),
        expected_d: conj(&diag),
        expected_n: conj(&shift),
        p,
        p_inv,
        blocks,
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `count` fixtures with dimensions cycling through 2..=8.
pub fn fixture_suite(seed: u64, count: usize) -> Vec<JordanFixture> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| random_jordan_fixture(&mut rng, 2 + i % 7))
        .collect()
}

/// Independent power oracle.
pub fn naive_power(u: &SquareMatrix, m: u64) -> SquareMatrix {
    (0..m).fold(SquareMatrix::identity(u.dim()), |acc, _| &acc * u)
}

/// Checks `E(t) E(s) == E(t + s)` as an identity in two variables by
/// comparing the coefficient of `t^a s^b` on both sides.
pub fn group_law_holds(e: &chevalley::PolyMatrix) -> bool {
    let n = e.dim();
    let deg = e.degree().finite().unwrap_or(0);
    for i in 0..n {
        for k in 0..n {
            for a in 0..=2 * deg {
                for b in 0..=2 * deg {
                    let product = (0..n).fold(int(0), |acc, l| {
                        acc + e[(i, l)].coeff(a) * e[(l, k)].coeff(b)
                    });
                    let shifted = e[(i, k)].coeff(a + b) * binomial(a + b, a);
                    if product != shifted {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rational::from_integer(acc)
}
