//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored highest degree first, `a_0 z^n + a_1 z^(n-1) +
//! ... + a_n`, so `coeffs()[k]` is `a_k`. The zero polynomial has no
//! coefficients; otherwise `a_0 != 0`.

mod hurwitz;
mod roots;

pub use hurwitz::{
    hurwitz_matrix, hurwitz_minors, hurwitz_stable, is_self_interlacing, si_twist, twist_for_kind,
    SIKind, TwistedPolynomial,
};
pub use roots::{isolate_real_roots, refine_root, sturm_sequence, RootBox};

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, to_exact_string, Rational, Sign};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Leading zeros are stripped.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        let coeffs = match first {
            Some(f) => coeffs[f..].to_vec(),
            None => Vec::new(),
        };
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monic linear factor `z - root`.
    pub fn linear(root: &Rational) -> Self {
        Polynomial::new(vec![Rational::one(), -root])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rational) -> Sign {
        Sign::of(&self.eval(x))
    }

    /// Sign as `z -> +∞` (`positive = true`) or `z -> -∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> Sign {
        match self.leading() {
            None => Sign::Zero,
            Some(lc) => {
                let s = Sign::of(lc);
                if !positive && self.degree() % 2 == 1 {
                    s.flip()
                } else {
                    s
                }
            }
        }
    }

    pub fn derivative(&self) -> Polynomial {
        let n = self.degree();
        Polynomial::new(
            self.coeffs
                .iter()
                .take(n)
                .enumerate()
                .map(|(k, c)| c * int((n - k) as i64))
                .collect(),
        )
    }

    /// `p(-z)`.
    pub fn reflect(&self) -> Polynomial {
        let n = self.degree();
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if (n - k) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lc) => Polynomial {
                coeffs: self.coeffs.iter().map(|c| c / lc).collect(),
            },
        }
    }

    /// Copy with a positive leading coefficient (root set unchanged).
    pub fn with_positive_leading(&self) -> Polynomial {
        match self.leading() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let pad = |p: &Polynomial, i: usize| {
            let off = len - p.coeffs.len();
            if i < off {
                Rational::zero()
            } else {
                p.coeffs[i - off].clone()
            }
        };
        Polynomial::new((0..len).map(|i| pad(self, i) - pad(other, i)).collect())
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let lc = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.coeffs.clone();
        let dn = divisor.coeffs.len();
        if rem.len() < dn {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let qlen = rem.len() - dn + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = &rem[i] / lc;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot.push(q);
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem[qlen..].to_vec())))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == 0
    }

    /// `p / gcd(p, p')`: same roots, each simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd nonzero").0
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Monic polynomial `∏ (z - r)`.
pub fn poly_from_roots(roots: &[Rational]) -> Polynomial {
    roots
        .iter()
        .fold(Polynomial::constant(Rational::one()), |acc, r| {
            acc.mul(&Polynomial::linear(r))
        })
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - k;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = power == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&to_exact_string(&mag))?;
            }
            match power {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{power}")?,
            }
        }
        Ok(())
    }
}

/// Space-separated exact coefficients `a_0 ... a_n`.
pub fn coeffs_to_string(p: &Polynomial) -> String {
    p.coeffs().iter().map(to_exact_string).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn from_roots_examples() {
        assert_eq!(poly_from_roots(&[int(1)]), Polynomial::from_ints(&[1, -1]));
        assert_eq!(
            poly_from_roots(&[int(2), int(-1)]),
            Polynomial::from_ints(&[1, -1, -2])
        );
        assert_eq!(
            poly_from_roots(&[int(3), int(-2), int(1)]),
            Polynomial::from_ints(&[1, -2, -5, 6])
        );
        assert_eq!(poly_from_roots(&[]), Polynomial::from_ints(&[1]));
    }

    #[test]
    fn basic_arithmetic() {
        let p = Polynomial::from_ints(&[1, -1, -1]);
        assert_eq!(p.eval(&int(2)), int(1));
        assert_eq!(p.derivative(), Polynomial::from_ints(&[2, -1]));
        assert_eq!(p.reflect(), Polynomial::from_ints(&[1, 1, -1]));
        assert_eq!(
            Polynomial::from_ints(&[1, -1, -2, 1]).reflect(),
            Polynomial::from_ints(&[-1, -1, 2, 1])
        );
        assert_eq!(Polynomial::from_ints(&[0, 0, 2, 1]).degree(), 1);
        assert!(Polynomial::from_ints(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = poly_from_roots(&[int(1), int(2), int(3)]);
        let b = poly_from_roots(&[int(2), int(5)]);
        assert_eq!(a.gcd(&b), Polynomial::from_ints(&[1, -2]));
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), Polynomial::zero());
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn squarefree() {
        let p = poly_from_roots(&[int(1), int(1), frac(1, 2)]);
        assert!(!p.is_squarefree());
        assert_eq!(
            p.squarefree_part().monic(),
            poly_from_roots(&[int(1), frac(1, 2)])
        );
        assert!(Polynomial::from_ints(&[1, -1, -1]).is_squarefree());
    }

    #[test]
    fn display() {
        assert_eq!(
            Polynomial::from_ints(&[1, -1, -1]).to_string(),
            "z^2 - z - 1"
        );
        assert_eq!(Polynomial::from_ints(&[-2, 0, 1]).to_string(), "-2z^2 + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
