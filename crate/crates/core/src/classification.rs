//! Sign-definite classes, total nonnegativity and oscillatory matrices.
//!
//! Everything here is decided by exhaustive exact minor enumeration, which
//! doubles as the reference oracle for the structured criteria
//! ([`is_oscillatory`], [`jacobi_oscillatory_criterion`],
//! [`anti_tridiagonal_criterion`]).

use std::fmt;

use num_traits::{Signed, Zero};

use crate::certify::FlipSide;
use crate::constructors::JacobiSpec;
use crate::matrix::{Matrix, MinorSelector};
use crate::par::Strategy;
use crate::rational::Rational;
pub use crate::rational::Sign;
use crate::{Error, Result};

/// One entry `ε_k` of a signature sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignatureEntry {
    Plus,
    Minus,
    /// Every minor of this order vanishes.
    Undetermined,
}

impl SignatureEntry {
    pub fn sign(self) -> Sign {
        match self {
            SignatureEntry::Plus => Sign::Positive,
            SignatureEntry::Minus => Sign::Negative,
            SignatureEntry::Undetermined => Sign::Zero,
        }
    }

    fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Positive => SignatureEntry::Plus,
            Sign::Negative => SignatureEntry::Minus,
            Sign::Zero => SignatureEntry::Undetermined,
        }
    }
}

impl fmt::Display for SignatureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignatureEntry::Plus => "+1",
            SignatureEntry::Minus => "-1",
            SignatureEntry::Undetermined => "?",
        })
    }
}

/// `ε_k = (-1)^(k(k-1)/2)`, the signature carried by row- or column-reversed
/// totally nonnegative matrices: `+, -, -, +, +, -, -, ...`.
pub fn flip_signature(n: usize) -> Vec<Sign> {
    (1..=n)
        .map(|k| Sign::from_parity((k * (k - 1) / 2) % 2 == 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub selector: MinorSelector,
    pub value: Rational,
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}",
            self.selector,
            crate::rational::to_exact_string(&self.value)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignDefiniteVerdict {
    NotSignDefinite,
    SignDefiniteClassN,
    /// All minors nonzero with one sign per order; class `n⁺` with power 1.
    StrictlySignDefinite,
    /// Some power `m >= 2` within the cap is strictly sign definite.
    ClassNPlus,
}

impl fmt::Display for SignDefiniteVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignDefiniteVerdict::NotSignDefinite => "not sign definite",
            SignDefiniteVerdict::SignDefiniteClassN => "sign definite of class n",
            SignDefiniteVerdict::StrictlySignDefinite => "strictly sign definite",
            SignDefiniteVerdict::ClassNPlus => "sign definite of class n+",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignClassification {
    pub verdict: SignDefiniteVerdict,
    pub signature: Vec<SignatureEntry>,
    /// Two minors of equal order with opposite signs.
    pub witness: Option<(MinorWitness, MinorWitness)>,
    /// Least `m` with `M^m` strictly sign definite.
    pub power_exponent: Option<u32>,
    pub power_cap: usize,
}

impl SignClassification {
    pub fn is_sign_definite(&self) -> bool {
        self.verdict != SignDefiniteVerdict::NotSignDefinite
    }

    /// Class `n⁺`, including the strictly sign definite case.
    pub fn is_class_n_plus(&self) -> bool {
        matches!(
            self.verdict,
            SignDefiniteVerdict::ClassNPlus | SignDefiniteVerdict::StrictlySignDefinite
        )
    }

    /// True iff every determined `ε_k` equals `(-1)^(k(k-1)/2)`.
    pub fn has_flip_signature(&self) -> bool {
        self.signature
            .iter()
            .zip(flip_signature(self.signature.len()))
            .all(|(e, s)| *e == SignatureEntry::Undetermined || e.sign() == s)
    }
}

/// Default power cap `2(n-1)` (at least 1).
pub fn default_power_cap(n: usize) -> usize {
    (2 * n.saturating_sub(1)).max(1)
}

struct OrderScan {
    entry: SignatureEntry,
    conflict: Option<(MinorWitness, MinorWitness)>,
}

fn scan_order(m: &Matrix, k: usize, strategy: Strategy) -> OrderScan {
    let first = m
        .find_minor(k, strategy, |sel, v| {
            (!v.is_zero()).then(|| MinorWitness {
                selector: sel.clone(),
                value: v.clone(),
            })
        })
        .expect("valid order");
    let Some(first) = first else {
        return OrderScan {
            entry: SignatureEntry::Undetermined,
            conflict: None,
        };
    };
    let want = Sign::of(&first.value);
    let opposite = m
        .find_minor(k, strategy, |sel, v| {
            (Sign::of(v) == want.flip()).then(|| MinorWitness {
                selector: sel.clone(),
                value: v.clone(),
            })
        })
        .expect("valid order");
    OrderScan {
        entry: SignatureEntry::from_sign(want),
        conflict: opposite.map(|o| (first, o)),
    }
}

/// True iff every minor is nonzero and minors of each order share a sign.
pub fn is_strictly_sign_definite_with(m: &Matrix, strategy: Strategy) -> bool {
    (1..=m.n()).all(|k| {
        let want = Sign::of(&m.leading_minor(k).expect("valid order"));
        want != Sign::Zero
            && m.find_minor(k, strategy, |_, v| (Sign::of(v) != want).then_some(()))
                .expect("valid order")
                .is_none()
    })
}

pub fn classify_sign_definite(m: &Matrix, power_cap: Option<usize>) -> SignClassification {
    classify_sign_definite_with(m, power_cap, Strategy::default())
}

/// Classifies `m` as not sign definite, sign definite of class `n`,
/// strictly sign definite, or class `n⁺`.
///
/// Class `n⁺` is certified by the least `m ≤ power_cap` whose power is
/// strictly sign definite. If none exists within the cap the verdict stays
/// [`SignDefiniteVerdict::SignDefiniteClassN`], meaning "not certified within
/// the cap" rather than a proof that no power works.
pub fn classify_sign_definite_with(
    m: &Matrix,
    power_cap: Option<usize>,
    strategy: Strategy,
) -> SignClassification {
    let cap = power_cap.unwrap_or_else(|| default_power_cap(m.n())).max(1);
    let mut signature = Vec::with_capacity(m.n());
    for k in 1..=m.n() {
        let scan = scan_order(m, k, strategy);
        if let Some(conflict) = scan.conflict {
            signature.push(scan.entry);
            return SignClassification {
                verdict: SignDefiniteVerdict::NotSignDefinite,
                signature,
                witness: Some(conflict),
                power_exponent: None,
                power_cap: cap,
            };
        }
        signature.push(scan.entry);
    }

    let mut power_exponent = None;
    // A singular matrix has singular powers, which cannot be strictly sign
    // definite.
    if !signature.contains(&SignatureEntry::Undetermined) && !m.determinant().is_zero() {
        let mut power = m.clone();
        for e in 1..=cap as u32 {
            if e > 1 {
                power = power.matmul(m).expect("square");
            }
            if is_strictly_sign_definite_with(&power, strategy) {
                power_exponent = Some(e);
                break;
            }
        }
    }
    let verdict = match power_exponent {
        Some(1) => SignDefiniteVerdict::StrictlySignDefinite,
        Some(_) => SignDefiniteVerdict::ClassNPlus,
        None => SignDefiniteVerdict::SignDefiniteClassN,
    };
    SignClassification {
        verdict,
        signature,
        witness: None,
        power_exponent,
        power_cap: cap,
    }
}

/// Outcome of a total-nonnegativity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TnnCheck {
    pub holds: bool,
    /// First negative minor in (order, lexicographic selector) order.
    pub violation: Option<MinorWitness>,
}

pub fn is_totally_nonnegative(m: &Matrix) -> TnnCheck {
    is_totally_nonnegative_with(m, Strategy::default())
}

/// Exhaustive check that every minor is `>= 0`, ascending by order and
/// stopping at the first negative minor.
pub fn is_totally_nonnegative_with(m: &Matrix, strategy: Strategy) -> TnnCheck {
    for k in 1..=m.n() {
        let bad = m
            .find_minor(k, strategy, |sel, v| {
                v.is_negative().then(|| MinorWitness {
                    selector: sel.clone(),
                    value: v.clone(),
                })
            })
            .expect("valid order");
        if bad.is_some() {
            return TnnCheck {
                holds: false,
                violation: bad,
            };
        }
    }
    TnnCheck {
        holds: true,
        violation: None,
    }
}

pub fn is_strictly_totally_positive(m: &Matrix) -> bool {
    is_strictly_totally_positive_with(m, Strategy::default())
}

pub fn is_strictly_totally_positive_with(m: &Matrix, strategy: Strategy) -> bool {
    (1..=m.n()).all(|k| {
        m.find_minor(k, strategy, |_, v| (!v.is_positive()).then_some(()))
            .expect("valid order")
            .is_none()
    })
}

/// Oscillatory criterion: totally nonnegative, nonsingular, and both first
/// off-diagonals strictly positive.
pub fn is_oscillatory(m: &Matrix) -> bool {
    let n = m.n();
    let off_diagonals =
        (1..n).all(|j| m.get(j, j + 1).is_positive() && m.get(j + 1, j).is_positive());
    off_diagonals && !m.determinant().is_zero() && is_totally_nonnegative(m).holds
}

/// Definition: totally nonnegative with some power `M^p`, `p ≤ max(1, n-1)`,
/// strictly totally positive.
pub fn is_oscillatory_by_definition(m: &Matrix) -> bool {
    if !is_totally_nonnegative(m).holds {
        return false;
    }
    let cap = m.n().saturating_sub(1).max(1);
    let mut power = m.clone();
    for e in 1..=cap {
        if e > 1 {
            power = power.matmul(m).expect("square");
        }
        if is_strictly_totally_positive(&power) {
            return true;
        }
    }
    false
}

/// Corner witnesses for one index `i` of the corner conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerWitness {
    pub i: usize,
    pub r1: Option<usize>,
    pub r2: Option<usize>,
}

impl CornerWitness {
    pub fn holds(&self) -> bool {
        self.r1.is_some() && self.r2.is_some()
    }
}

/// Witnesses of the corner positivity conditions for `B = J·A`
/// (`row_flip`) and for `C = A·J` (`col_flip`), for `i = 1..n-1`.
///
/// For `B = J·A` the products are `a_(n-i, r1)·a_(n+1-r1, i) > 0` and
/// `a_(n+1-i, r2)·a_(n+1-r2, i+1) > 0`, which make the first sub- and
/// superdiagonal of `B²` positive. For `C = A·J` they are
/// `a_(i, n+1-r1)·a_(r1, n-i) > 0` and `a_(i+1, n+1-r2)·a_(r2, n+1-i) > 0`.
/// Each witness is the smallest valid `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerConditionReport {
    pub n: usize,
    pub row_flip: Vec<CornerWitness>,
    pub col_flip: Vec<CornerWitness>,
}

impl CornerConditionReport {
    pub fn holds_for(&self, side: FlipSide) -> bool {
        let list = match side {
            FlipSide::Left => &self.row_flip,
            FlipSide::Right => &self.col_flip,
        };
        list.iter().all(CornerWitness::holds)
    }

    /// First index `i` whose condition fails.
    pub fn first_failure(&self, side: FlipSide) -> Option<usize> {
        let list = match side {
            FlipSide::Left => &self.row_flip,
            FlipSide::Right => &self.col_flip,
        };
        list.iter().find(|w| !w.holds()).map(|w| w.i)
    }
}

pub fn check_corner_conditions(m: &Matrix) -> Result<CornerConditionReport> {
    let n = m.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if let Some((row, col)) = m.first_negative_entry() {
        return Err(Error::NonnegativityViolated { row, col });
    }
    let a = |i: usize, j: usize| m.get(i, j);
    let find = |f: &dyn Fn(usize) -> Rational| (1..=n).find(|&r| f(r).is_positive());

    let mut row_flip = Vec::with_capacity(n - 1);
    let mut col_flip = Vec::with_capacity(n - 1);
    for i in 1..n {
        row_flip.push(CornerWitness {
            i,
            r1: find(&|r| a(n - i, r) * a(n + 1 - r, i)),
            r2: find(&|r| a(n + 1 - i, r) * a(n + 1 - r, i + 1)),
        });
        col_flip.push(CornerWitness {
            i,
            r1: find(&|r| a(i, n + 1 - r) * a(r, n - i)),
            r2: find(&|r| a(i + 1, n + 1 - r) * a(r, n + 1 - i)),
        });
    }
    Ok(CornerConditionReport {
        n,
        row_flip,
        col_flip,
    })
}

/// Oscillatory test for a nonnegative tridiagonal (Jacobi) matrix:
/// all off-diagonal entries positive and all leading principal minors
/// positive.
pub fn jacobi_oscillatory_criterion(spec: &JacobiSpec) -> Result<bool> {
    let m = spec.matrix();
    if let Some((row, col)) = m.first_negative_entry() {
        return Err(Error::NonnegativityViolated { row, col });
    }
    if spec.b.iter().chain(&spec.c).any(|x| !x.is_positive()) {
        return Ok(false);
    }
    for k in 1..=m.n() {
        if !m.leading_minor(k)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Anti-tridiagonal test: for each `k`, the `k×k` anti-tridiagonal matrix
/// built from the first `k` diagonal parameters (the column reversal of the
/// order-`k` leading block of the Jacobi matrix) satisfies
/// `(-1)^(k(k-1)/2)·det > 0`.
pub fn anti_tridiagonal_criterion(spec: &JacobiSpec) -> Result<bool> {
    spec.require_positive()?;
    let signs = flip_signature(spec.n());
    for k in 1..=spec.n() {
        let block = spec.truncate(k).matrix().flip_cols();
        let det = block.determinant();
        if Sign::of(&det) * signs[k - 1] != Sign::Positive {
            return Ok(false);
        }
    }
    Ok(true)
}
