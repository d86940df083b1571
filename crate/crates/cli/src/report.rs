//! Report structure shared by the analysis commands, with JSON and text
//! renderings.

use serde::Serialize;
use sha2::{Digest, Sha256};

use selfint::polynomial::coeffs_to_string;
use selfint::rational::{digits_for_width, to_decimal, to_exact_string};
use selfint::{Matrix, Polynomial, Rational, RootBox, SpectrumReport, SpectrumVerdict};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    pub stages: Vec<StageOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_definite: Option<SignDefiniteOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct StageOut {
    pub name: String,
    /// `pass`, `fail` or `skipped`.
    pub verdict: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl StageOut {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        StageOut {
            name: name.to_string(),
            verdict: if passed { "pass" } else { "fail" }.to_string(),
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Self {
        StageOut {
            name: name.to_string(),
            verdict: "skipped".to_string(),
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Debug, Serialize)]
pub struct SignDefiniteOut {
    pub verdict: String,
    pub class_n_plus: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_exponent: Option<u32>,
    pub power_cap: usize,
}

#[derive(Debug, Serialize)]
pub struct BoxOut {
    pub index: usize,
    pub lo: String,
    pub hi: String,
    pub sign: String,
    pub exact_lo: String,
    pub exact_hi: String,
}

#[derive(Debug, Serialize)]
pub struct SpectrumOut {
    /// `I`, `II` or `none`.
    pub verdict: String,
    pub char_poly: String,
    pub char_poly_coeffs: String,
    pub modulus_tie: bool,
    pub all_real_simple: bool,
    pub width_bound: String,
    pub eigenvalues: Vec<BoxOut>,
}

#[derive(Debug, Serialize)]
pub struct PolynomialOut {
    pub coeffs: String,
    pub kind: String,
    pub twist: String,
    pub hurwitz_minors: Vec<String>,
    pub hurwitz_stable: bool,
    pub self_interlacing: bool,
    pub squarefree: bool,
    pub width_bound: String,
    pub real_roots: Vec<BoxOut>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|row| row.iter().map(to_exact_string).collect())
        .collect()
}

pub fn verdict_code(v: SpectrumVerdict) -> &'static str {
    match v {
        SpectrumVerdict::SelfInterlacingKindI => "I",
        SpectrumVerdict::SelfInterlacingKindII => "II",
        SpectrumVerdict::Neither => "none",
    }
}

/// Endpoints rounded outward to enough digits that the printed interval
/// still reflects the requested width.
pub fn boxes_out(boxes: &[RootBox], width: &Rational) -> Vec<BoxOut> {
    let digits = digits_for_width(width);
    boxes
        .iter()
        .enumerate()
        .map(|(i, b)| BoxOut {
            index: i + 1,
            lo: to_decimal(&b.lo, digits, false),
            hi: to_decimal(&b.hi, digits, true),
            sign: b.sign.to_string(),
            exact_lo: to_exact_string(&b.lo),
            exact_hi: to_exact_string(&b.hi),
        })
        .collect()
}

pub fn spectrum_out(r: &SpectrumReport) -> SpectrumOut {
    SpectrumOut {
        verdict: verdict_code(r.verdict).to_string(),
        char_poly: r.char_poly.to_string(),
        char_poly_coeffs: coeffs_to_string(&r.char_poly),
        modulus_tie: r.modulus_tie,
        all_real_simple: r.all_real_simple(),
        width_bound: to_exact_string(&r.width_bound),
        eigenvalues: boxes_out(&r.boxes, &r.width_bound),
    }
}

pub fn poly_string(p: &Polynomial) -> String {
    coeffs_to_string(p)
}

/// One box per line: `index<TAB>lo<TAB>hi<TAB>sign`, after a header line.
pub fn plot_lines(boxes: &[BoxOut]) -> String {
    let mut out = String::from("index\tlo\thi\tsign\n");
    for b in boxes {
        out.push_str(&format!("{}\t{}\t{}\t{}\n", b.index, b.lo, b.hi, b.sign));
    }
    out
}

impl Report {
    pub fn new(command: String, input_digest: String) -> Self {
        Report {
            schema: SCHEMA,
            command,
            input_digest,
            matrix: None,
            stages: Vec::new(),
            signature: None,
            sign_definite: None,
            spectrum: None,
            polynomial: None,
            timing_ms: None,
        }
    }

    pub fn plot_boxes(&self) -> &[BoxOut] {
        if let Some(s) = &self.spectrum {
            &s.eigenvalues
        } else if let Some(p) = &self.polynomial {
            &p.real_roots
        } else {
            &[]
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        line(format!("input: {}", self.input_digest));
        if let Some(m) = &self.matrix {
            line("matrix:".into());
            for row in m {
                line(format!("  {}", row.join(" ")));
            }
        }
        if !self.stages.is_empty() {
            line("stages:".into());
            for s in &self.stages {
                let mut l = format!("  {}: {}", s.name, s.verdict);
                if !s.detail.is_empty() {
                    l.push_str(&format!(" ({})", s.detail));
                }
                if let Some(w) = &s.witness {
                    l.push_str(&format!(" [witness: {w}]"));
                }
                line(l);
            }
        }
        if let Some(sig) = &self.signature {
            line(format!("signature: {}", sig.join(" ")));
        }
        if let Some(sd) = &self.sign_definite {
            let power = sd
                .power_exponent
                .map(|m| format!(", power {m}"))
                .unwrap_or_default();
            line(format!(
                "sign definite: {}{power} (cap {})",
                sd.verdict, sd.power_cap
            ));
        }
        if let Some(sp) = &self.spectrum {
            line(format!("spectrum: {}", sp.verdict));
            line(format!("  characteristic polynomial: {}", sp.char_poly));
            line(format!("  modulus tie: {}", sp.modulus_tie));
            line(format!("  eigenvalues, width <= {}:", sp.width_bound));
            for b in &sp.eigenvalues {
                line(format!("    {} [{}, {}] {}", b.index, b.lo, b.hi, b.sign));
            }
        }
        if let Some(p) = &self.polynomial {
            line(format!("polynomial: {}", p.coeffs));
            line(format!("  kind: {}", p.kind));
            line(format!("  twist: {}", p.twist));
            line(format!("  hurwitz minors: {}", p.hurwitz_minors.join(" ")));
            line(format!("  hurwitz stable: {}", p.hurwitz_stable));
            line(format!("  self-interlacing: {}", p.self_interlacing));
            if p.squarefree {
                line(format!("  real roots, width <= {}:", p.width_bound));
                for b in &p.real_roots {
                    line(format!("    {} [{}, {}] {}", b.index, b.lo, b.hi, b.sign));
                }
            } else {
                line("  real roots: not isolated, repeated roots".into());
            }
        }
        if let Some(t) = self.timing_ms {
            line(format!("timing: {t} ms"));
        }
        out
    }
}
