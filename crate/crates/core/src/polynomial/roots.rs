//! Real-root isolation by Sturm sequences and exact bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::rational::{int, Rational, Sign};
use crate::{Error, Result};

/// An isolating interval for one simple real root.
///
/// Either `lo == hi` is the root itself, or `lo < hi` and the polynomial
/// changes sign strictly between the endpoints. Boxes never straddle zero,
/// so `sign` is the sign of every point in the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBox {
    pub lo: Rational,
    pub hi: Rational,
    pub sign: Sign,
}

impl RootBox {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Bounds `(min |x|, max |x|)` over the box.
    pub fn modulus_bounds(&self) -> (Rational, Rational) {
        match self.sign {
            Sign::Negative => (-&self.hi, -&self.lo),
            _ => (self.lo.clone(), self.hi.clone()),
        }
    }
}

/// `p, p', -rem(p, p'), ...` down to a nonzero constant or the gcd.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let (_, r) = seq.last().unwrap().div_rem(&next).expect("nonzero");
        seq.push(next);
        next = -&r;
    }
    seq
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut count = 0;
    let mut last = Sign::Zero;
    for s in signs.filter(|s| *s != Sign::Zero) {
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// A polynomial scaled to integer coefficients, for sign evaluation
/// without rational normalisation at every step.
struct IntegerPoly {
    coeffs: Vec<BigInt>,
}

impl IntegerPoly {
    fn new(p: &Polynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        IntegerPoly { coeffs }
    }

    /// Sign of `p(u/v)`, from `v^d·p(u/v) = sum a_k u^(d-k) v^k` with `v > 0`.
    fn sign_at(&self, x: &Rational) -> Sign {
        let (u, v) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut v_pow = BigInt::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k == 0 {
                acc = a.clone();
            } else {
                v_pow *= v;
                acc = acc * u + a * &v_pow;
            }
        }
        if acc.is_positive() {
            Sign::Positive
        } else if acc.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

struct Sturm {
    seq: Vec<IntegerPoly>,
    at_infinity: [usize; 2],
}

impl Sturm {
    fn new(p: &Polynomial) -> Self {
        let seq = sturm_sequence(p);
        let at_infinity = [false, true]
            .map(|positive| variations(seq.iter().map(|q| q.sign_at_infinity(positive))));
        Sturm {
            seq: seq.iter().map(IntegerPoly::new).collect(),
            at_infinity,
        }
    }

    fn at(&self, x: &Rational) -> usize {
        variations(self.seq.iter().map(|q| q.sign_at(x)))
    }

    fn at_infinity(&self, positive: bool) -> usize {
        self.at_infinity[usize::from(positive)]
    }

    /// Number of distinct roots in `(a, b]`.
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.at(a) - self.at(b)
    }
}

/// Strict upper bound on the modulus of every root.
fn cauchy_bound(p: &Polynomial) -> Rational {
    let a = p.coeffs();
    let lc = a[0].abs();
    let max = a[1..]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Isolating boxes for all real roots of a squarefree `p`, in increasing
/// order.
pub fn isolate_real_roots(p: &Polynomial) -> Result<Vec<RootBox>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let sturm = Sturm::new(p);
    let total = sturm.at_infinity(false) - sturm.at_infinity(true);
    let bound = cauchy_bound(p);

    let mut boxes = Vec::with_capacity(total);
    let mut stack = vec![(-&bound, bound, total)];
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => boxes.push(single_root_box(p, &sturm, a, b)),
            _ => {
                let m = (&a + &b) / int(2);
                let left = sturm.count(&a, &m);
                // right half first so the left half pops first
                stack.push((m.clone(), b, count - left));
                stack.push((a, m, left));
            }
        }
    }
    debug_assert_eq!(boxes.len(), total);
    boxes.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(boxes)
}

/// Shrinks `(a, b]`, known to hold exactly one root, to a valid [`RootBox`].
fn single_root_box(p: &Polynomial, sturm: &Sturm, mut a: Rational, mut b: Rational) -> RootBox {
    if p.degree() == 1 {
        let root = -&p.coeffs()[1] / &p.coeffs()[0];
        return settle_sign(p, root.clone(), root);
    }
    if p.eval(&b).is_zero() {
        return settle_sign(p, b.clone(), b);
    }
    // The root lies strictly above `a`; bisect until `a` is not a root of p.
    while p.eval(&a).is_zero() {
        let m = (&a + &b) / int(2);
        if p.eval(&m).is_zero() {
            return settle_sign(p, m.clone(), m);
        }
        if sturm.count(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
    settle_sign(p, a, b)
}

/// Splits a box that straddles zero so the root's sign is determined.
fn settle_sign(p: &Polynomial, lo: Rational, hi: Rational) -> RootBox {
    let zero = Rational::zero();
    if lo.is_negative() && hi.is_positive() {
        let at_zero = p.sign_at(&zero);
        if at_zero == Sign::Zero {
            return RootBox {
                lo: zero.clone(),
                hi: zero,
                sign: Sign::Zero,
            };
        }
        return if at_zero == p.sign_at(&lo) {
            RootBox {
                lo: zero,
                hi,
                sign: Sign::Positive,
            }
        } else {
            RootBox {
                lo,
                hi: zero,
                sign: Sign::Negative,
            }
        };
    }
    let sign = if lo.is_positive() {
        Sign::Positive
    } else if hi.is_negative() {
        Sign::Negative
    } else if lo.is_zero() && hi.is_zero() {
        Sign::Zero
    } else if lo.is_zero() {
        // p(0) != 0 here, otherwise the box would be exact
        Sign::Positive
    } else {
        Sign::Negative
    };
    RootBox { lo, hi, sign }
}

/// Bisects `root_box` until its width is at most `width_bound`.
///
/// Boxes already narrow enough are returned unchanged; exact rational roots
/// hit by a midpoint collapse to a point.
pub fn refine_root(p: &Polynomial, root_box: &RootBox, width_bound: &Rational) -> Result<RootBox> {
    if !width_bound.is_positive() {
        return Err(Error::InvalidTolerance);
    }
    let mut b = root_box.clone();
    if b.is_exact() {
        return Ok(b);
    }
    let p = &IntegerPoly::new(p);
    let mut lo_sign = p.sign_at(&b.lo);
    if lo_sign == Sign::Zero || p.sign_at(&b.hi) == Sign::Zero || lo_sign == p.sign_at(&b.hi) {
        return Err(Error::InvariantViolation(format!(
            "box [{}, {}] does not bracket a sign change",
            b.lo, b.hi
        )));
    }
    while &b.width() > width_bound {
        let m = b.midpoint();
        match p.sign_at(&m) {
            Sign::Zero => {
                b.lo = m.clone();
                b.hi = m;
                break;
            }
            s if s == lo_sign => {
                b.lo = m;
                lo_sign = s;
            }
            _ => b.hi = m,
        }
    }
    Ok(b)
}
