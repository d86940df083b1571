//! Structured matrix families and seeded random generators.
//!
//! # Random generators
//!
//! The generators build invertible (or, for [`random_tnn`], possibly
//! singular) totally nonnegative matrices as products of elementary
//! bidiagonal factors
//!
//! ```text
//! A = [L_n L_(n-1) ... L_2] [L_n ... L_3] ... [L_n] · D · [U_n] ... [U_3 ... U_n] [U_2 ... U_n]
//! ```
//!
//! with `L_i(l) = I + l·E_(i,i-1)`, `U_i(u) = I + u·E_(i-1,i)` and
//! `D = diag(d_1..d_n)`. All parameters are drawn from a SplitMix64 stream
//! seeded with the 64-bit seed, in this order: the `n(n-1)/2` lower
//! parameters in factor order, the `n` diagonal entries, then the `n(n-1)/2`
//! upper parameters in factor order. One draw `x` maps to the positive
//! rational `(1 + x mod 5) / (1 + (x >> 32) mod 4)`; a parameter that may
//! vanish is zero when `(x >> 16) mod 3 == 0`.

use num_traits::{Signed, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::matrix::Matrix;
use crate::rational::{frac, Rational};
use crate::{Error, Result};

fn require_positive(name: &str, values: &[Rational]) -> Result<()> {
    match values.iter().position(|v| !v.is_positive()) {
        Some(i) => Err(Error::PositivityViolated(format!("{name}[{}]", i + 1))),
        None => Ok(()),
    }
}

fn check_bidiagonal_lengths(d: &[Rational], e: &[Rational]) -> Result<()> {
    if d.is_empty() || e.len() + 1 != d.len() {
        return Err(Error::DimensionMismatch(format!(
            "bidiagonal needs n >= 1 diagonal and n-1 off-diagonal entries, got {} and {}",
            d.len(),
            e.len()
        )));
    }
    Ok(())
}

/// Diagonal `d`, first superdiagonal `e`, zeros elsewhere.
pub fn bidiagonal_upper(d: &[Rational], e: &[Rational]) -> Result<Matrix> {
    check_bidiagonal_lengths(d, e)?;
    require_positive("d", d)?;
    require_positive("e", e)?;
    let n = d.len();
    let mut m = Matrix::zeros(n);
    for i in 1..=n {
        m.set(i, i, d[i - 1].clone());
        if i < n {
            m.set(i, i + 1, e[i - 1].clone());
        }
    }
    Ok(m)
}

/// Transpose of [`bidiagonal_upper`]: positive entries on and under the
/// main diagonal.
pub fn bidiagonal_lower(d: &[Rational], e: &[Rational]) -> Result<Matrix> {
    Ok(bidiagonal_upper(d, e)?.transpose())
}

/// Parameters of a positive anti-bidiagonal matrix: the single main-diagonal
/// entry `a`, the entries `b_2..b_n` above it and `c_2..c_n` below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiBidiagonalSpec {
    pub a: Rational,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl AntiBidiagonalSpec {
    /// `b[0]` is `b_2`, `c[0]` is `c_2`.
    pub fn new(a: Rational, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::DimensionMismatch(format!(
                "b and c must have equal length, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        require_positive("a", std::slice::from_ref(&a))?;
        require_positive("b", &b)?;
        require_positive("c", &c)?;
        Ok(AntiBidiagonalSpec { a, b, c })
    }

    pub fn n(&self) -> usize {
        self.b.len() + 1
    }

    /// Values along the zigzag path from `(n, 1)` to `(1, n)`:
    /// `c_n, ..., c_2, a, b_2, ..., b_n`.
    pub fn zigzag_values(&self) -> Vec<Rational> {
        self.c
            .iter()
            .rev()
            .chain(std::iter::once(&self.a))
            .chain(self.b.iter())
            .cloned()
            .collect()
    }

    /// `(d, e)` with `anti_bidiagonal(self) = J · bidiagonal_upper(d, e)`.
    pub fn bidiagonal_factors(&self) -> (Vec<Rational>, Vec<Rational>) {
        let z = self.zigzag_values();
        let d = z.iter().step_by(2).cloned().collect();
        let e = z.iter().skip(1).step_by(2).cloned().collect();
        (d, e)
    }
}

/// Places the zigzag values at `(n+1-k, k)` and `(n+1-k, k+1)` for
/// `k = 1..n`, zeros elsewhere.
pub fn anti_bidiagonal(spec: &AntiBidiagonalSpec) -> Matrix {
    let n = spec.n();
    let mut m = Matrix::zeros(n);
    for (p, v) in spec.zigzag_values().into_iter().enumerate() {
        let k = p / 2 + 1;
        let col = if p % 2 == 0 { k } else { k + 1 };
        m.set(n + 1 - k, col, v);
    }
    m
}

/// Tridiagonal matrix with diagonal `(a, 0, ..., 0)`, superdiagonal
/// `b_2..b_n` and subdiagonal `c_2..c_n`. Its characteristic polynomial
/// equals that of [`anti_bidiagonal`].
pub fn equivalent_tridiagonal(spec: &AntiBidiagonalSpec) -> Matrix {
    let n = spec.n();
    let mut diag = vec![Rational::zero(); n];
    diag[0] = spec.a.clone();
    JacobiSpec {
        a: diag,
        b: spec.b.clone(),
        c: spec.c.clone(),
    }
    .matrix()
}

/// Tridiagonal (Jacobi) matrix parameters: diagonal `a_1..a_n`,
/// superdiagonal `b_1..b_(n-1)`, subdiagonal `c_1..c_(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiSpec {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl JacobiSpec {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if a.is_empty() || b.len() + 1 != a.len() || c.len() + 1 != a.len() {
            return Err(Error::DimensionMismatch(format!(
                "Jacobi parameters need lengths n, n-1, n-1; got {}, {}, {}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        Ok(JacobiSpec { a, b, c })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n);
        for i in 1..=n {
            m.set(i, i, self.a[i - 1].clone());
            if i < n {
                m.set(i, i + 1, self.b[i - 1].clone());
                m.set(i + 1, i, self.c[i - 1].clone());
            }
        }
        m
    }

    /// Parameters of the order-`k` leading block.
    pub fn truncate(&self, k: usize) -> JacobiSpec {
        let k = k.clamp(1, self.n());
        JacobiSpec {
            a: self.a[..k].to_vec(),
            b: self.b[..k - 1].to_vec(),
            c: self.c[..k - 1].to_vec(),
        }
    }

    pub fn require_positive(&self) -> Result<()> {
        require_positive("a", &self.a)?;
        require_positive("b", &self.b)?;
        require_positive("c", &self.c)
    }
}

pub fn jacobi_matrix(spec: &JacobiSpec) -> Matrix {
    spec.matrix()
}

/// The anti-tridiagonal matrix `M_J · J`; its first row is
/// `(0, ..., 0, b_1, a_1)`.
pub fn anti_jacobi(spec: &JacobiSpec) -> Matrix {
    spec.matrix().flip_cols()
}

struct ParamStream(SplitMix64);

impl ParamStream {
    fn new(seed: u64) -> Self {
        ParamStream(SplitMix64::seed_from_u64(seed))
    }

    fn positive(&mut self) -> Rational {
        let x = self.0.next_u64();
        frac(1 + (x % 5) as i64, 1 + ((x >> 32) % 4) as i64)
    }

    fn maybe_zero(&mut self) -> Rational {
        let x = self.0.next_u64();
        if (x >> 16).is_multiple_of(3) {
            Rational::zero()
        } else {
            frac(1 + (x % 5) as i64, 1 + ((x >> 32) % 4) as i64)
        }
    }
}

#[derive(Clone, Copy)]
enum Ladder {
    /// Every parameter may vanish, diagonal entries included.
    Sparse,
    /// Diagonal positive and the factors touching the first off-diagonals
    /// positive; everything else may vanish.
    Oscillatory,
    /// Every parameter positive.
    Full,
}

/// Index pairs `(block, i)` of the lower factors in product order.
fn lower_factor_order(n: usize) -> Vec<(usize, usize)> {
    (1..n)
        .flat_map(|j| (j + 1..=n).rev().map(move |i| (j, i)))
        .collect()
}

fn ladder_matrix(n: usize, seed: u64, ladder: Ladder) -> Matrix {
    let mut rng = ParamStream::new(seed);
    let draw = |block: usize, rng: &mut ParamStream| match ladder {
        Ladder::Full => rng.positive(),
        Ladder::Oscillatory if block == 1 => rng.positive(),
        _ => rng.maybe_zero(),
    };

    let order = lower_factor_order(n);
    let lower: Vec<(usize, Rational)> =
        order.iter().map(|&(j, i)| (i, draw(j, &mut rng))).collect();
    let diag: Vec<Rational> = (0..n)
        .map(|_| match ladder {
            Ladder::Sparse => {
                let x = rng.0.next_u64();
                if (x >> 16).is_multiple_of(8) {
                    Rational::zero()
                } else {
                    frac(1 + (x % 5) as i64, 1 + ((x >> 32) % 4) as i64)
                }
            }
            _ => rng.positive(),
        })
        .collect();
    // Upper factors mirror the lower ones in reverse product order.
    let upper: Vec<(usize, Rational)> = order
        .iter()
        .rev()
        .map(|&(j, i)| (i, draw(j, &mut rng)))
        .collect();

    let mut m = Matrix::identity(n);
    for (i, l) in &lower {
        // right-multiply by I + l E_(i,i-1): column i-1 += l * column i
        for r in 1..=n {
            let v = m.get(r, *i - 1) + l * m.get(r, *i);
            m.set(r, *i - 1, v);
        }
    }
    for (c, d) in diag.iter().enumerate() {
        for r in 1..=n {
            let v = m.get(r, c + 1) * d;
            m.set(r, c + 1, v);
        }
    }
    for (i, u) in &upper {
        // right-multiply by I + u E_(i-1,i): column i += u * column i-1
        for r in 1..=n {
            let v = m.get(r, *i) + u * m.get(r, *i - 1);
            m.set(r, *i, v);
        }
    }
    m
}

/// Seeded totally nonnegative matrix; may be singular.
pub fn random_tnn(n: usize, seed: u64) -> Matrix {
    ladder_matrix(n.max(1), seed, Ladder::Sparse)
}

/// Seeded oscillatory matrix.
pub fn random_oscillatory(n: usize, seed: u64) -> Matrix {
    ladder_matrix(n.max(1), seed, Ladder::Oscillatory)
}

/// Seeded nonsingular totally nonnegative matrix with every entry positive
/// (in fact strictly totally positive).
pub fn random_positive_tnn(n: usize, seed: u64) -> Matrix {
    ladder_matrix(n.max(1), seed, Ladder::Full)
}
