//! Certification pipeline: from a nonnegative matrix `A` to a certified
//! self-interlacing spectrum of `J·A` (or `A·J`).
//!
//! Stages, in order: entrywise nonnegativity, nonsingularity, total
//! nonnegativity, corner conditions, oscillation of the squared flip,
//! class `n⁺` with signature `(-1)^(k(k-1)/2)`, self-interlacing spectrum,
//! and the eigenvalue sign pattern. The pipeline stops at the first failing
//! stage; stage failures are reported in the certificate, not as errors.

use std::fmt;

use num_traits::Zero;

use crate::classification::{
    check_corner_conditions, classify_sign_definite, is_oscillatory, is_totally_nonnegative,
    CornerConditionReport, SignClassification,
};
use crate::matrix::Matrix;
use crate::rational::Tolerance;
use crate::spectra::{spectrum_report, verify_sign_pattern_from, SpectrumReport, SpectrumVerdict};
use crate::{Error, Result};

/// Which side the anti-identity multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FlipSide {
    /// `B = J·A`, rows reversed.
    #[default]
    Left,
    /// `C = A·J`, columns reversed.
    Right,
}

impl FlipSide {
    pub fn apply(self, a: &Matrix) -> Matrix {
        match self {
            FlipSide::Left => a.flip_rows(),
            FlipSide::Right => a.flip_cols(),
        }
    }
}

impl fmt::Display for FlipSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlipSide::Left => "left",
            FlipSide::Right => "right",
        })
    }
}

impl std::str::FromStr for FlipSide {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(FlipSide::Left),
            "right" => Ok(FlipSide::Right),
            other => Err(format!("unknown side {other:?}, expected left or right")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Nonnegativity,
    Nonsingularity,
    TotalNonnegativity,
    CornerConditions,
    SquareOscillatory,
    SignDefiniteClassNPlus,
    SelfInterlacingSpectrum,
    EigenvalueSigns,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Nonnegativity => "nonnegativity",
            Stage::Nonsingularity => "nonsingularity",
            Stage::TotalNonnegativity => "total-nonnegativity",
            Stage::CornerConditions => "corner-conditions",
            Stage::SquareOscillatory => "square-oscillatory",
            Stage::SignDefiniteClassNPlus => "class-n-plus",
            Stage::SelfInterlacingSpectrum => "self-interlacing-spectrum",
            Stage::EigenvalueSigns => "eigenvalue-signs",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub stage: Stage,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JflipCertificate {
    pub side: FlipSide,
    /// `J·A` or `A·J`.
    pub flipped: Matrix,
    pub stages: Vec<StageReport>,
    pub corners: Option<CornerConditionReport>,
    pub classification: Option<SignClassification>,
    pub spectrum: Option<SpectrumReport>,
}

impl JflipCertificate {
    pub fn certified(&self) -> bool {
        self.failed_stage().is_none()
    }

    pub fn failed_stage(&self) -> Option<&StageReport> {
        self.stages.iter().find(|s| !s.passed)
    }

    /// Turns a failing certificate into [`Error::StageFailed`].
    pub fn into_result(self) -> Result<Self> {
        match self.failed_stage() {
            Some(s) => Err(Error::StageFailed {
                stage: s.stage.name().to_string(),
                detail: s.detail.clone(),
            }),
            None => Ok(self),
        }
    }
}

struct Recorder {
    stages: Vec<StageReport>,
}

impl Recorder {
    /// Records the stage and returns whether it passed.
    fn record(&mut self, stage: Stage, passed: bool, detail: impl Into<String>) -> bool {
        self.stages.push(StageReport {
            stage,
            passed,
            detail: detail.into(),
        });
        passed
    }
}

/// Runs every stage on `a` and reports each; see the module docs.
///
/// Only internal invariant violations (an exact verdict contradicted by the
/// eigenvalue boxes) surface as errors.
pub fn jflip_si_certificate(
    a: &Matrix,
    side: FlipSide,
    tol: &Tolerance,
) -> Result<JflipCertificate> {
    let mut rec = Recorder { stages: Vec::new() };
    let mut cert = JflipCertificate {
        side,
        flipped: side.apply(a),
        stages: Vec::new(),
        corners: None,
        classification: None,
        spectrum: None,
    };
    let finish = |mut cert: JflipCertificate, rec: Recorder| {
        cert.stages = rec.stages;
        Ok(cert)
    };

    let negative = a.first_negative_entry();
    let detail = match negative {
        Some((i, j)) => format!("entry ({i}, {j}) is negative"),
        None => "all entries nonnegative".into(),
    };
    if !rec.record(Stage::Nonnegativity, negative.is_none(), detail) {
        return finish(cert, rec);
    }

    let det = a.determinant();
    if !rec.record(
        Stage::Nonsingularity,
        !det.is_zero(),
        format!("det A = {}", crate::rational::to_exact_string(&det)),
    ) {
        return finish(cert, rec);
    }

    let tnn = is_totally_nonnegative(a);
    let detail = match &tnn.violation {
        Some(w) => format!("negative minor {w}"),
        None => "all minors nonnegative".into(),
    };
    if !rec.record(Stage::TotalNonnegativity, tnn.holds, detail) {
        return finish(cert, rec);
    }

    if a.n() >= 2 {
        let corners = check_corner_conditions(a)?;
        let failure = corners.first_failure(side);
        let detail = match failure {
            Some(i) => format!("no witness r1/r2 for i = {i}"),
            None => "witnesses found for every i".into(),
        };
        cert.corners = Some(corners);
        if !rec.record(Stage::CornerConditions, failure.is_none(), detail) {
            return finish(cert, rec);
        }
    } else {
        rec.record(Stage::CornerConditions, true, "vacuous for n = 1");
    }

    let square = cert.flipped.matmul(&cert.flipped)?;
    let osc = is_oscillatory(&square);
    if !rec.record(
        Stage::SquareOscillatory,
        osc,
        if osc {
            "square of the flip is oscillatory"
        } else {
            "square of the flip is not oscillatory"
        },
    ) {
        return finish(cert, rec);
    }

    let class = classify_sign_definite(&cert.flipped, None);
    let ok = class.is_class_n_plus() && class.has_flip_signature();
    let detail = format!(
        "{} (power {}), signature [{}]",
        class.verdict,
        class
            .power_exponent
            .map_or_else(|| "none".to_string(), |e| e.to_string()),
        class
            .signature
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    cert.classification = Some(class);
    if !rec.record(Stage::SignDefiniteClassNPlus, ok, detail) {
        return finish(cert, rec);
    }

    let report = spectrum_report(&cert.flipped, tol)?;
    let ok = report.verdict == SpectrumVerdict::SelfInterlacingKindI;
    let detail = format!("{}", report.verdict);
    cert.spectrum = Some(report);
    if !rec.record(Stage::SelfInterlacingSpectrum, ok, detail) {
        return finish(cert, rec);
    }

    let class = cert.classification.as_ref().expect("set above");
    let spectrum = cert.spectrum.as_ref().expect("set above");
    let (ok, detail) = match verify_sign_pattern_from(class, spectrum) {
        Ok(true) => (true, "sign λ_k = ε_k/ε_(k-1) for all k".to_string()),
        Ok(false) => (
            false,
            "eigenvalue signs differ from ε_k/ε_(k-1)".to_string(),
        ),
        Err(e) => (false, e.to_string()),
    };
    rec.record(Stage::EigenvalueSigns, ok, detail);
    finish(cert, rec)
}
