//! Spectrum reports: exact self-interlacing verdicts backed by certified
//! eigenvalue boxes.
//!
//! The verdict always comes from the characteristic polynomial through the
//! twist/Hurwitz route. The root boxes are an independent cross-check and
//! the human-readable output; if they disagree with the verdict the report
//! fails with [`Error::InvariantViolation`].

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::classification::{classify_sign_definite, SignClassification};
use crate::matrix::Matrix;
use crate::par::{self, Strategy};
use crate::polynomial::{
    is_self_interlacing, isolate_real_roots, refine_root, Polynomial, RootBox, SIKind,
};
use crate::rational::{Rational, Sign, Tolerance};
use crate::{check_corner_conditions, is_totally_nonnegative, FlipSide};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectrumVerdict {
    SelfInterlacingKindI,
    SelfInterlacingKindII,
    Neither,
}

impl SpectrumVerdict {
    pub fn kind(self) -> Option<SIKind> {
        match self {
            SpectrumVerdict::SelfInterlacingKindI => Some(SIKind::KindI),
            SpectrumVerdict::SelfInterlacingKindII => Some(SIKind::KindII),
            SpectrumVerdict::Neither => None,
        }
    }
}

impl fmt::Display for SpectrumVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumVerdict::SelfInterlacingKindI => "self-interlacing kind I",
            SpectrumVerdict::SelfInterlacingKindII => "self-interlacing kind II",
            SpectrumVerdict::Neither => "not self-interlacing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub char_poly: Polynomial,
    pub verdict: SpectrumVerdict,
    /// One box per distinct real eigenvalue, by decreasing modulus; ties are
    /// ordered positive first.
    pub boxes: Vec<RootBox>,
    pub signs: Vec<Sign>,
    /// Some pair of eigenvalues has equal modulus: a repeated eigenvalue,
    /// or `λ` and `-λ` both eigenvalues with `λ != 0`.
    pub modulus_tie: bool,
    pub width_bound: Rational,
}

impl SpectrumReport {
    /// All eigenvalues are real (counted once each) and simple.
    pub fn all_real_simple(&self) -> bool {
        self.char_poly.is_squarefree() && self.boxes.len() == self.char_poly.degree()
    }
}

fn modulus_cmp_desc(a: &RootBox, b: &RootBox) -> Ordering {
    let (alo, ahi) = a.modulus_bounds();
    let (blo, bhi) = b.modulus_bounds();
    (&blo + &bhi)
        .cmp(&(&alo + &ahi))
        .then_with(|| b.sign.cmp(&a.sign))
}

/// Refines boxes until their modulus intervals are pairwise disjoint.
fn separate_moduli(p: &Polynomial, boxes: &mut [RootBox]) -> Result<()> {
    loop {
        boxes.sort_by(modulus_cmp_desc);
        let mut overlapping = Vec::new();
        for i in 0..boxes.len().saturating_sub(1) {
            let (lo_a, _) = boxes[i].modulus_bounds();
            let (_, hi_b) = boxes[i + 1].modulus_bounds();
            if hi_b >= lo_a {
                overlapping.extend([i, i + 1]);
            }
        }
        if overlapping.is_empty() {
            return Ok(());
        }
        overlapping.dedup();
        for i in overlapping {
            if !boxes[i].is_exact() {
                let half = boxes[i].width() / crate::rational::int(2);
                boxes[i] = refine_root(p, &boxes[i], &half)?;
            }
        }
    }
}

/// Factor of `gcd(p(z), p(-z))` left after removing a zero root: its roots
/// are the `λ != 0` with `-λ` also a root. `p` must be squarefree.
fn opposite_pair_factor(p: &Polynomial) -> Polynomial {
    let g = p.gcd(&p.reflect());
    match g.coeffs().last() {
        Some(c) if c.is_zero() && g.degree() > 0 => {
            g.div_rem(&Polynomial::from_ints(&[1, 0]))
                .expect("nonzero")
                .0
        }
        _ => g,
    }
}

pub fn spectrum_report(m: &Matrix, tol: &Tolerance) -> Result<SpectrumReport> {
    spectrum_report_with(m, tol, Strategy::default())
}

pub fn spectrum_report_with(
    m: &Matrix,
    tol: &Tolerance,
    strategy: Strategy,
) -> Result<SpectrumReport> {
    let p = m.charpoly();
    let verdict = if is_self_interlacing(&p, SIKind::KindI)? {
        SpectrumVerdict::SelfInterlacingKindI
    } else if is_self_interlacing(&p, SIKind::KindII)? {
        SpectrumVerdict::SelfInterlacingKindII
    } else {
        SpectrumVerdict::Neither
    };

    let simple = p.squarefree_part();
    let pairs = opposite_pair_factor(&simple);
    let modulus_tie = !p.is_squarefree() || pairs.degree() > 0;
    let mut boxes = isolate_real_roots(&simple)?;
    // Moduli of a real pair ±λ never separate.
    if pairs.degree() == 0 || isolate_real_roots(&pairs)?.is_empty() {
        separate_moduli(&simple, &mut boxes)?;
    }
    let refined: Vec<Result<RootBox>> =
        par::map_collect(strategy, &boxes, |b| refine_root(&simple, b, tol.get()));
    let mut boxes = refined.into_iter().collect::<Result<Vec<_>>>()?;
    boxes.sort_by(modulus_cmp_desc);
    let signs = boxes.iter().map(|b| b.sign).collect();

    let report = SpectrumReport {
        char_poly: p,
        verdict,
        boxes,
        signs,
        modulus_tie,
        width_bound: tol.get().clone(),
    };
    cross_check(&report)?;
    Ok(report)
}

/// Box-wise check of `λ1 > -λ2 > λ3 > ... > 0` (or the mirrored pattern)
/// whenever the exact verdict claims it.
fn cross_check(r: &SpectrumReport) -> Result<()> {
    let Some(kind) = r.verdict.kind() else {
        return Ok(());
    };
    let n = r.char_poly.degree();
    let fail = |why: &str| {
        Err(Error::InvariantViolation(format!(
            "{} verdict but {why}",
            r.verdict
        )))
    };
    if r.modulus_tie || r.boxes.len() != n {
        return fail("eigenvalues are not real, simple and of distinct modulus");
    }
    let first = match kind {
        SIKind::KindI => Sign::Positive,
        SIKind::KindII => Sign::Negative,
    };
    for (k, b) in r.boxes.iter().enumerate() {
        let want = if k % 2 == 0 { first } else { first.flip() };
        if b.sign != want {
            return fail("eigenvalue signs do not alternate");
        }
    }
    for w in r.boxes.windows(2) {
        if w[1].modulus_bounds().1 >= w[0].modulus_bounds().0 {
            return fail("eigenvalue moduli are not strictly decreasing");
        }
    }
    Ok(())
}

/// Checks `sign λ_k = ε_k / ε_(k-1)` (with `ε_0 = 1`) for a class `n⁺`
/// matrix with eigenvalues ordered by strictly decreasing modulus.
pub fn verify_sign_pattern(m: &Matrix) -> Result<bool> {
    let class = classify_sign_definite(m, None);
    let report = spectrum_report(m, &Tolerance::default())?;
    verify_sign_pattern_from(&class, &report)
}

pub fn verify_sign_pattern_from(
    class: &SignClassification,
    report: &SpectrumReport,
) -> Result<bool> {
    if !class.is_class_n_plus() {
        return Err(Error::NotClassNPlus {
            power_cap: class.power_cap,
        });
    }
    if report.modulus_tie {
        return Err(Error::ModulusTie);
    }
    if !report.all_real_simple() {
        return Ok(false);
    }
    let mut prev = Sign::Positive;
    for (entry, actual) in class.signature.iter().zip(&report.signs) {
        let eps = entry.sign();
        if prev * eps != *actual {
            return Ok(false);
        }
        prev = eps;
    }
    Ok(true)
}

/// Spectrum of `J·A` for a matrix `A` whose negation is totally
/// nonnegative, nonsingular and satisfies the row-reversal corner
/// conditions; such a spectrum is self-interlacing of kind II.
pub fn kind_two_report(a: &Matrix, tol: &Tolerance) -> Result<SpectrumReport> {
    let neg = -a;
    if let Some((row, col)) = neg.first_negative_entry() {
        return Err(Error::PreconditionFailed(format!(
            "-A has a negative entry at ({row}, {col})"
        )));
    }
    let tnn = is_totally_nonnegative(&neg);
    if !tnn.holds {
        let w = tnn.violation.expect("violation recorded");
        return Err(Error::PreconditionFailed(format!(
            "-A is not totally nonnegative: minor {w}"
        )));
    }
    if neg.determinant().is_zero() {
        return Err(Error::PreconditionFailed("A is singular".into()));
    }
    if a.n() >= 2 {
        let corners = check_corner_conditions(&neg)?;
        if let Some(i) = corners.first_failure(FlipSide::Left) {
            return Err(Error::PreconditionFailed(format!(
                "corner conditions fail for -A at i = {i}"
            )));
        }
    }
    let report = spectrum_report(&a.flip_rows(), tol)?;
    if report.verdict != SpectrumVerdict::SelfInterlacingKindII {
        return Err(Error::InvariantViolation(format!(
            "J·A has {} spectrum",
            report.verdict
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, pow10};
    use num_traits::Signed;

    fn close(b: &RootBox, target: Rational) -> bool {
        (b.midpoint() - target).abs() < pow10(-9)
    }

    #[test]
    fn golden_matrix() {
        let r =
            spectrum_report(&Matrix::from_ints([[0, 1], [1, 1]]), &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::SelfInterlacingKindI);
        assert_eq!(r.char_poly, Polynomial::from_ints(&[1, -1, -1]));
        assert_eq!(r.signs, vec![Sign::Positive, Sign::Negative]);
        assert!(close(&r.boxes[0], frac(161_803_398_875, 100_000_000_000)));
        assert!(close(&r.boxes[1], frac(-61_803_398_875, 100_000_000_000)));
        assert!(r.boxes.iter().all(|b| b.width() <= pow10(-9)));
        assert!(!r.modulus_tie);
    }

    #[test]
    fn anti_identity_has_tie() {
        let r = spectrum_report(&Matrix::anti_identity(2), &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::Neither);
        assert!(r.modulus_tie);
        assert_eq!(r.boxes.len(), 2);
        assert_eq!(r.signs, vec![Sign::Positive, Sign::Negative]);
    }

    #[test]
    fn anti_bidiagonal_three() {
        let m = Matrix::from_ints([[0, 0, 1], [0, 1, 1], [1, 1, 0]]);
        let r = spectrum_report(&m, &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::SelfInterlacingKindI);
        assert_eq!(r.char_poly, Polynomial::from_ints(&[1, -1, -2, 1]));
        assert!(close(&r.boxes[0], frac(1_801_937_736, 1_000_000_000)));
        assert!(close(&r.boxes[1], frac(-1_246_979_604, 1_000_000_000)));
        assert!(close(&r.boxes[2], frac(445_041_868, 1_000_000_000)));
    }

    #[test]
    fn zero_and_repeated_eigenvalues() {
        let r =
            spectrum_report(&Matrix::from_ints([[1, 1], [1, 1]]), &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::Neither);
        assert!(!r.modulus_tie);
        assert_eq!(r.signs, vec![Sign::Positive, Sign::Zero]);

        let r = spectrum_report(&Matrix::identity(3), &Tolerance::default()).unwrap();
        assert!(r.modulus_tie);
        assert_eq!(r.boxes.len(), 1);
        assert!(!r.all_real_simple());
    }

    #[test]
    fn complex_spectrum() {
        // rotation by 90 degrees: eigenvalues ±i
        let r =
            spectrum_report(&Matrix::from_ints([[0, -1], [1, 0]]), &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::Neither);
        assert!(r.boxes.is_empty());
        assert!(r.modulus_tie);
    }

    #[test]
    fn sign_pattern_examples() {
        assert!(verify_sign_pattern(&Matrix::from_ints([[0, 1], [1, 1]])).unwrap());
        assert!(verify_sign_pattern(&Matrix::from_ints([[2, 1], [1, 1]])).unwrap());
        assert!(matches!(
            verify_sign_pattern(&Matrix::anti_identity(3)),
            Err(Error::NotClassNPlus { .. })
        ));
    }

    #[test]
    fn kind_two_examples() {
        let a = -Matrix::from_ints([[1, 1], [0, 1]]);
        let r = kind_two_report(&a, &Tolerance::default()).unwrap();
        assert_eq!(r.char_poly, Polynomial::from_ints(&[1, 1, -1]));
        assert_eq!(r.verdict, SpectrumVerdict::SelfInterlacingKindII);

        let r =
            kind_two_report(&-Matrix::from_ints([[2, 1], [1, 1]]), &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::SelfInterlacingKindII);

        let e = kind_two_report(&-Matrix::identity(2), &Tolerance::default()).unwrap_err();
        assert!(matches!(e, Error::PreconditionFailed(ref s) if s.contains("corner")));
        let e = kind_two_report(&Matrix::from_ints([[1, 1], [0, 1]]), &Tolerance::default())
            .unwrap_err();
        assert!(matches!(e, Error::PreconditionFailed(_)));
    }

    #[test]
    fn exact_rational_eigenvalues() {
        // eigenvalues 3 and -1/2: kind I (3 > 1/2 > 0)
        let m = Matrix::new(2, vec![int(0), int(1), frac(3, 2), frac(5, 2)]).unwrap();
        let r = spectrum_report(&m, &Tolerance::default()).unwrap();
        assert_eq!(r.verdict, SpectrumVerdict::SelfInterlacingKindI);
        assert!(r.boxes[0].contains(&int(3)));
        assert!(r.boxes[1].contains(&frac(-1, 2)));
    }
}
