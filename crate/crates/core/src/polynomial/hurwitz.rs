//! Coefficient sign twist, Hurwitz stability and the self-interlacing test.
//!
//! A real polynomial `p(z) = Σ a_k z^(n-k)` has roots
//! `λ1 > -λ2 > λ3 > ... > (-1)^(n-1) λn > 0` (self-interlacing of kind I)
//! exactly when `Σ (-1)^(k(k+1)/2) a_k z^(n-k)` is Hurwitz stable.

use num_traits::Signed;

use super::Polynomial;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SIKind {
    /// `λ1 > -λ2 > λ3 > ... > 0`
    KindI,
    /// `-λ1 > λ2 > -λ3 > ... > 0`
    KindII,
}

/// The image of a polynomial under the sign twist `a_k -> (-1)^(k(k+1)/2) a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedPolynomial(Polynomial);

impl TwistedPolynomial {
    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.0
    }
}

/// `+, -, -, +` repeating with period four.
fn twist_negates(k: usize) -> bool {
    matches!(k % 4, 1 | 2)
}

pub fn si_twist(p: &Polynomial) -> Result<TwistedPolynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| if twist_negates(k) { -c } else { c.clone() })
        .collect();
    Ok(TwistedPolynomial(Polynomial::new(coeffs)))
}

/// The `n×n` Hurwitz matrix `H_ij = a_(2j-i)`, with `a_k = 0` outside `0..=n`.
pub fn hurwitz_matrix(p: &Polynomial) -> Result<Matrix> {
    let n = p.degree();
    if p.is_zero() || n == 0 {
        return Err(Error::DegreeZero);
    }
    let a = p.coeffs();
    let mut h = Matrix::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            let idx = 2 * j as isize - i as isize;
            if (0..=n as isize).contains(&idx) {
                h.set(i, j, a[idx as usize].clone());
            }
        }
    }
    Ok(h)
}

/// Leading principal minors `Δ_1..Δ_n` of the Hurwitz matrix, after
/// normalizing the leading coefficient to be positive.
pub fn hurwitz_minors(p: &Polynomial) -> Result<Vec<Rational>> {
    let h = hurwitz_matrix(&p.with_positive_leading())?;
    (1..=h.n()).map(|k| h.leading_minor(k)).collect()
}

/// True iff every root lies in the open left half-plane.
///
/// Decided by the Hurwitz determinants; a zero or negative `Δ_k` means not
/// stable. Polynomials with a negative leading coefficient are negated first.
pub fn hurwitz_stable(p: &Polynomial) -> Result<bool> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let q = p.with_positive_leading();
    // All coefficients positive is necessary.
    if q.coeffs().iter().any(|c| !c.is_positive()) {
        return Ok(false);
    }
    let h = hurwitz_matrix(&q)?;
    for k in 1..=h.n() {
        if !h.leading_minor(k)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_self_interlacing(p: &Polynomial, kind: SIKind) -> Result<bool> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    match kind {
        SIKind::KindI => hurwitz_stable(si_twist(p)?.polynomial()),
        SIKind::KindII => is_self_interlacing(&p.reflect(), SIKind::KindI),
    }
}

/// Twist of the polynomial whose kind-I property encodes `kind` for `p`.
pub fn twist_for_kind(p: &Polynomial, kind: SIKind) -> Result<TwistedPolynomial> {
    match kind {
        SIKind::KindI => si_twist(p),
        SIKind::KindII => si_twist(&p.reflect()),
    }
}

impl std::fmt::Display for SIKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SIKind::KindI => "I",
            SIKind::KindII => "II",
        })
    }
}

impl std::str::FromStr for SIKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" | "1" | "i" => Ok(SIKind::KindI),
            "II" | "2" | "ii" => Ok(SIKind::KindII),
            other => Err(format!("unknown kind {other:?}, expected I or II")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::poly_from_roots;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn twist_examples() {
        assert_eq!(
            si_twist(&p(&[1, -1, -1])).unwrap().polynomial(),
            &p(&[1, 1, 1])
        );
        assert_eq!(
            si_twist(&p(&[1, 0, 0, 0])).unwrap().polynomial(),
            &p(&[1, 0, 0, 0])
        );
        assert_eq!(
            si_twist(&p(&[1, -1, -2, 1])).unwrap().polynomial(),
            &p(&[1, 1, 2, 1])
        );
        assert_eq!(
            si_twist(&p(&[1, 1, 1, 1, 1, 1])).unwrap().polynomial(),
            &p(&[1, -1, -1, 1, 1, -1])
        );
        assert_eq!(si_twist(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn hurwitz_examples() {
        assert!(hurwitz_stable(&p(&[1, 1, 1])).unwrap());
        assert!(!hurwitz_stable(&p(&[1, -1, -1])).unwrap());
        assert!(hurwitz_stable(&p(&[1, 2, 2, 1])).unwrap());
        assert_eq!(
            hurwitz_minors(&p(&[1, 2, 2, 1])).unwrap(),
            vec![int(2), int(3), int(3)]
        );
        assert_eq!(
            hurwitz_minors(&p(&[1, 1, 2, 1])).unwrap(),
            vec![int(1), int(1), int(1)]
        );
        // negated leading coefficient
        assert!(hurwitz_stable(&p(&[-1, -2, -2, -1])).unwrap());
        assert_eq!(hurwitz_stable(&p(&[5])), Err(Error::DegreeZero));
    }

    #[test]
    fn hurwitz_boundary_is_unstable() {
        // z^3 + z^2 + z + 1 has roots ±i on the imaginary axis.
        assert!(!hurwitz_stable(&p(&[1, 1, 1, 1])).unwrap());
        // positive coefficients, but roots in the right half-plane
        assert!(!hurwitz_stable(&p(&[1, 1, 1, 5])).unwrap());
    }

    #[test]
    fn self_interlacing_examples() {
        assert!(is_self_interlacing(&p(&[1, -1, -1]), SIKind::KindI).unwrap());
        assert!(is_self_interlacing(&p(&[1, 1, -1]), SIKind::KindII).unwrap());
        assert!(!is_self_interlacing(&p(&[1, -3, 2]), SIKind::KindI).unwrap());
        assert!(!is_self_interlacing(&p(&[1, 1, -1]), SIKind::KindI).unwrap());
        assert_eq!(
            is_self_interlacing(&p(&[3]), SIKind::KindI),
            Err(Error::DegreeZero)
        );
    }

    #[test]
    fn degree_one_matches_root_sign() {
        for (root, expected) in [(frac(1, 2), true), (int(-3), false), (int(0), false)] {
            let q = poly_from_roots(&[root]);
            assert_eq!(is_self_interlacing(&q, SIKind::KindI).unwrap(), expected);
            assert_eq!(
                is_self_interlacing(&q.reflect(), SIKind::KindII).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn repeated_roots_are_not_self_interlacing() {
        let q = poly_from_roots(&[int(3), int(-2), int(-2)]);
        assert!(!is_self_interlacing(&q, SIKind::KindI).unwrap());
        let q = poly_from_roots(&[int(1), int(1)]);
        assert!(!is_self_interlacing(&q, SIKind::KindI).unwrap());
    }
}
