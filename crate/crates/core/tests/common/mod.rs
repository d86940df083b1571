//! Test-only oracles, written without the library's algorithms so they can
//! check them: cofactor expansion, brute-force minor enumeration,
//! interpolated characteristic polynomials, and simple seeded streams.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand_core::RngCore;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;
use selfint::rational::{frac, int};
use selfint::{JacobiSpec, Matrix, Polynomial, Rational};

/// Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][j] * cofactor_det(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rows_of(m: &Matrix) -> Vec<Vec<Rational>> {
    m.rows().map(|r| r.to_vec()).collect()
}

/// Strictly increasing index subsets of `1..=n` of size `k`, by recursion.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn oracle_minor(m: &Matrix, rows: &[usize], cols: &[usize]) -> Rational {
    let sub: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
        .collect();
    cofactor_det(&sub)
}

/// All minors of order `k` by cofactor expansion.
pub fn oracle_minors(m: &Matrix, k: usize) -> Vec<Rational> {
    let sets = subsets(m.n(), k);
    let mut out = Vec::new();
    for r in &sets {
        for c in &sets {
            out.push(oracle_minor(m, r, c));
        }
    }
    out
}

pub fn oracle_tnn(m: &Matrix) -> bool {
    (1..=m.n()).all(|k| oracle_minors(m, k).iter().all(|v| !v.is_negative()))
}

/// `(-1)^(k(k-1)/2)`: the sign every order-`k` minor of `J·A` must take.
pub fn flip_sign(k: usize) -> i32 {
    if (k * (k - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Every minor of order `k` is nonzero with sign `flip_sign(k)^power`,
/// the signature of the `power`-th power of a flipped matrix.
pub fn oracle_strict_flip_signature(m: &Matrix, power: u32) -> bool {
    (1..=m.n()).all(|k| {
        let positive = flip_sign(k).pow(power) == 1;
        oracle_minors(m, k)
            .iter()
            .all(|v| !v.is_zero() && v.is_positive() == positive)
    })
}

/// Nonzero minors of each order share the sign `flip_sign(k)`.
pub fn oracle_flip_signature(m: &Matrix) -> bool {
    (1..=m.n()).all(|k| {
        oracle_minors(m, k)
            .iter()
            .filter(|v| !v.is_zero())
            .all(|v| v.is_positive() == (flip_sign(k) == 1))
    })
}

/// Characteristic polynomial `det(tI - M)` recovered by Lagrange
/// interpolation through `t = 0..=n`.
pub fn interpolated_charpoly(m: &Matrix) -> Polynomial {
    let n = m.n();
    let points: Vec<Rational> = (0..=n as i64).map(int).collect();
    let values: Vec<Rational> = points.iter().map(|t| det_shift(m, t)).collect();
    let mut result = Polynomial::zero();
    for (i, xi) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(values[i].clone());
        for (j, xj) in points.iter().enumerate() {
            if i != j {
                let scale = Rational::one() / (xi - xj);
                basis = basis.mul(&Polynomial::new(vec![scale.clone(), -(xj * &scale)]));
            }
        }
        result = result.sub(&basis.mul(&Polynomial::constant(-Rational::one())));
    }
    result
}

/// `det(tI - M)` by cofactor expansion.
pub fn det_shift(m: &Matrix, t: &Rational) -> Rational {
    let n = m.n();
    let rows: Vec<Vec<Rational>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let base = if i == j { t.clone() } else { Rational::zero() };
                    base - m.get(i, j)
                })
                .collect()
        })
        .collect();
    cofactor_det(&rows)
}

/// Seeded stream of small positive rationals for test corpora.
pub struct Draws(SplitMix64);

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws(SplitMix64::seed_from_u64(seed))
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.0.next_u64() % bound
    }

    /// `p/q` with `p` in `1..=9`, `q` in `1..=4`.
    pub fn positive(&mut self) -> Rational {
        frac(1 + self.below(9) as i64, 1 + self.below(4) as i64)
    }

    pub fn signed(&mut self) -> Rational {
        frac(self.below(11) as i64 - 5, 1 + self.below(3) as i64)
    }

    pub fn positives(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.positive()).collect()
    }
}

pub fn positive_jacobi(draws: &mut Draws, n: usize) -> JacobiSpec {
    JacobiSpec::new(
        draws.positives(n),
        draws.positives(n - 1),
        draws.positives(n - 1),
    )
    .expect("lengths match")
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn fracs(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(p, q)| frac(p, q)).collect()
}
