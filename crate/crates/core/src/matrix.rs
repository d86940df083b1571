//! Dense exact rational matrices.
//!
//! All indices in the public API are 1-based: `get(i, j)` is the entry
//! `a_ij` of the usual notation. Storage is row-major and 0-based.

use std::fmt;
use std::ops::Neg;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::par::{self, Strategy};
use crate::polynomial::Polynomial;
use crate::rational::{int, to_exact_string, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    /// Builds an `n×n` matrix from row-major entries.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { n, min: 1 });
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Matrix::new(n, rows.into_iter().flatten().collect())
    }

    /// Integer matrix literal, e.g. `Matrix::from_ints([[0, 1], [1, 1]])`.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        let entries = rows.iter().flatten().map(|&v| int(v)).collect();
        Matrix::new(N, entries).expect("N >= 1")
    }

    pub fn zeros(n: usize) -> Self {
        Matrix::new(n, vec![Rational::zero(); n * n]).expect("n >= 1")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 1..=n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The anti-identity `J` with ones on the anti-diagonal.
    pub fn anti_identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 1..=n {
            m.set(i, n + 1 - i, Rational::one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    /// Row `i` (1-based).
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (1..=self.n).map(|i| self.get(i, i)).sum()
    }

    /// First negative entry in row-major order, if any.
    pub fn first_negative_entry(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(Signed::is_negative)
            .map(|p| (p / self.n + 1, p % self.n + 1))
    }

    pub fn is_entrywise_positive(&self) -> bool {
        self.entries.iter().all(Signed::is_positive)
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, other.n
            )));
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    if !a.is_zero() {
                        acc += a * &other.entries[k * n + j];
                    }
                }
                out.push(acc);
            }
        }
        Ok(Matrix { n, entries: out })
    }

    /// `self^m` for `m >= 1`, by repeated squaring.
    pub fn matpow(&self, m: u32) -> Result<Matrix> {
        if m == 0 {
            return Err(Error::PreconditionFailed(
                "matrix power exponent must be at least 1".into(),
            ));
        }
        let mut result: Option<Matrix> = None;
        let mut base = self.clone();
        let mut e = m;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    Some(r) => r.matmul(&base)?,
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.matmul(&base)?;
        }
        Ok(result.expect("m >= 1"))
    }

    /// `J·A`: rows in reverse order.
    pub fn flip_rows(&self) -> Matrix {
        let entries = self.rows().rev().flatten().cloned().collect();
        Matrix { n: self.n, entries }
    }

    /// `A·J`: columns in reverse order.
    pub fn flip_cols(&self) -> Matrix {
        let entries = self.rows().flat_map(|r| r.iter().rev().cloned()).collect();
        Matrix { n: self.n, entries }
    }

    /// Exact determinant by Bareiss elimination.
    ///
    /// Each row is first scaled to integers by the lcm of its denominators,
    /// so the elimination itself runs over `BigInt` with exact divisions.
    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.rows() {
            let l = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            a.push(row.iter().map(|e| e.numer() * (&l / e.denom())).collect());
            scale *= l;
        }
        Rational::new(bareiss(&mut a), scale)
    }

    pub fn submatrix(&self, sel: &MinorSelector) -> Matrix {
        let entries = sel
            .rows
            .iter()
            .flat_map(|&i| sel.cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix {
            n: sel.order(),
            entries,
        }
    }

    /// The minor selected by `sel`.
    pub fn minor(&self, sel: &MinorSelector) -> Result<Rational> {
        sel.validate(self.n)?;
        Ok(self.submatrix(sel).determinant())
    }

    /// Leading principal minor of order `k`.
    pub fn leading_minor(&self, k: usize) -> Result<Rational> {
        self.minor(&MinorSelector::leading(k))
    }

    /// All `C(n,k)²` minors of order `k`, lazily, in lexicographic selector
    /// order (rows first, then columns).
    pub fn all_minors(&self, k: usize) -> Result<MinorStream<'_>> {
        if k == 0 || k > self.n {
            return Err(Error::InvalidOrder {
                order: k,
                n: self.n,
            });
        }
        let combos: Vec<Vec<usize>> = (1..=self.n).combinations(k).collect();
        Ok(MinorStream {
            matrix: self,
            combos,
            pos: 0,
        })
    }

    /// Scans the order-`k` minors in lexicographic order and returns the
    /// first value produced by `f`.
    pub fn find_minor<T, F>(&self, k: usize, strategy: Strategy, f: F) -> Result<Option<T>>
    where
        T: Send,
        F: Fn(&MinorSelector, &Rational) -> Option<T> + Sync + Send,
    {
        if k == 0 || k > self.n {
            return Err(Error::InvalidOrder {
                order: k,
                n: self.n,
            });
        }
        let combos: Vec<Vec<usize>> = (1..=self.n).combinations(k).collect();
        let c = combos.len();
        Ok(par::find_first(strategy, c * c, |idx| {
            let sel = MinorSelector {
                rows: combos[idx / c].clone(),
                cols: combos[idx % c].clone(),
            };
            let value = self.submatrix(&sel).determinant();
            f(&sel, &value)
        }))
    }

    /// Characteristic polynomial `det(zI - A)` by the Faddeev–LeVerrier
    /// trace recursion.
    pub fn charpoly(&self) -> Polynomial {
        let n = self.n;
        let mut coeffs = vec![Rational::one()];
        let mut m = Matrix::zeros(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = self.matmul(&m).expect("square");
            for i in 1..=n {
                let d = next.get(i, i) + &coeffs[k - 1];
                next.set(i, i, d);
            }
            let am = self.matmul(&next).expect("square");
            coeffs.push(-am.trace() / int(k as i64));
            m = next;
        }
        Polynomial::new(coeffs)
    }
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Neg for Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        -&self
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}]", row.iter().map(to_exact_string).join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{}", row.iter().map(to_exact_string).join(" "))?;
        }
        Ok(())
    }
}

/// Row and column index sets of a square minor, 1-based and strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSelector {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSelector {
    /// Unchecked against a dimension; [`Matrix::minor`] validates.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        MinorSelector { rows, cols }
    }

    pub fn leading(k: usize) -> Self {
        MinorSelector::new((1..=k).collect(), (1..=k).collect())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let k = self.rows.len();
        if k == 0 || k != self.cols.len() {
            return Err(Error::InvalidSelector(format!(
                "row and column lists must be nonempty and of equal length ({} vs {})",
                self.rows.len(),
                self.cols.len()
            )));
        }
        for list in [&self.rows, &self.cols] {
            if list.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::InvalidSelector(format!(
                    "index out of range 1..={n} in {list:?}"
                )));
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidSelector(format!(
                    "indices not strictly increasing: {list:?}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for MinorSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {{{}}} cols {{{}}}",
            self.rows.iter().join(","),
            self.cols.iter().join(",")
        )
    }
}

/// Lazy stream of `(selector, minor)` pairs of one order.
pub struct MinorStream<'a> {
    matrix: &'a Matrix,
    combos: Vec<Vec<usize>>,
    pos: usize,
}

impl Iterator for MinorStream<'_> {
    type Item = (MinorSelector, Rational);

    fn next(&mut self) -> Option<Self::Item> {
        let c = self.combos.len();
        if self.pos >= c * c {
            return None;
        }
        let sel = MinorSelector {
            rows: self.combos[self.pos / c].clone(),
            cols: self.combos[self.pos % c].clone(),
        };
        self.pos += 1;
        let value = self.matrix.submatrix(&sel).determinant();
        Some((sel, value))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.combos.len().pow(2) - self.pos;
        (left, Some(left))
    }
}

impl ExactSizeIterator for MinorStream<'_> {}
