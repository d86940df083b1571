//! The five subcommands.

use std::io::Read;
use std::time::Instant;

use selfint::rational::to_exact_string;
use selfint::{
    anti_bidiagonal, anti_jacobi, bidiagonal_upper, check_corner_conditions,
    classify_sign_definite, equivalent_tridiagonal, hurwitz_minors, hurwitz_stable, is_oscillatory,
    is_oscillatory_by_definition, is_self_interlacing, is_strictly_totally_positive,
    is_totally_nonnegative, isolate_real_roots, jacobi_matrix, jflip_si_certificate,
    random_oscillatory, random_positive_tnn, random_tnn, refine_root, spectrum_report,
    twist_for_kind, AntiBidiagonalSpec, FlipSide, JacobiSpec, Polynomial, SignClassification,
};

use crate::document::{
    parse_document, parse_numbers, render_document, MatrixDocument, Params, Structure,
};
use crate::report::{
    boxes_out, digest, matrix_rows, plot_lines, poly_string, spectrum_out, PolynomialOut, Report,
    SignDefiniteOut, StageOut,
};
use crate::{
    Check, ClassifyArgs, CliError, ConstructArgs, Family, JflipArgs, Output, PolyArgs, SpectrumArgs,
};

/// Largest order for which `classify` cross-checks the oscillatory
/// criterion against the definition.
const OSCILLATORY_CROSS_CHECK_MAX_N: usize = 5;

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    let mut bytes = Vec::new();
    let res = if path == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    res.map_err(|e| CliError::input(format!("cannot read {path}: {e}")))?;
    Ok(bytes)
}

fn read_document(path: &str) -> Result<(MatrixDocument, String), CliError> {
    let bytes = read_input(path)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::input(format!("{path} is not UTF-8 text")))?;
    Ok((parse_document(text)?, digest(&bytes)))
}

fn finish(mut report: Report, out: &Output, started: Instant) -> Result<String, CliError> {
    if out.timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    if let Some(path) = &out.plot_data {
        std::fs::write(path, plot_lines(report.plot_boxes()))
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if out.json {
        report.to_json()
    } else {
        report.to_text()
    })
}

fn sign_definite_stages(report: &mut Report, class: &SignClassification) {
    let witness = class.witness.as_ref().map(|(a, b)| format!("{a}; {b}"));
    report.stages.push(
        StageOut::new(
            "sign-definite",
            class.is_sign_definite(),
            class.verdict.to_string(),
        )
        .with_witness(witness),
    );
    let detail = match class.power_exponent {
        Some(m) => format!("power {m} strictly sign definite"),
        None => format!("no strictly sign definite power up to {}", class.power_cap),
    };
    report.stages.push(StageOut::new(
        "class-n-plus",
        class.is_class_n_plus(),
        detail,
    ));
    report.signature = Some(class.signature.iter().map(|s| s.to_string()).collect());
    report.sign_definite = Some(SignDefiniteOut {
        verdict: class.verdict.to_string(),
        class_n_plus: class.is_class_n_plus(),
        power_exponent: class.power_exponent,
        power_cap: class.power_cap,
    });
}

pub fn classify(args: &ClassifyArgs, out: &Output) -> Result<String, CliError> {
    let started = Instant::now();
    let (doc, input_digest) = read_document(&args.input)?;
    if args.power_cap == Some(0) {
        return Err(CliError::input("--power-cap must be at least 1"));
    }
    let checks: Vec<Check> = if args.checks.is_empty() {
        vec![
            Check::Tnn,
            Check::Stp,
            Check::Oscillatory,
            Check::SignDefinite,
            Check::Corners,
        ]
    } else {
        args.checks.clone()
    };
    let mut command = String::from("classify");
    if let Some(cap) = args.power_cap {
        command.push_str(&format!(" --power-cap {cap}"));
    }
    if !args.checks.is_empty() {
        let names: Vec<&str> = args
            .checks
            .iter()
            .map(|c| match c {
                Check::Tnn => "tnn",
                Check::Stp => "stp",
                Check::Oscillatory => "oscillatory",
                Check::SignDefinite => "sign-definite",
                Check::Corners => "corners",
            })
            .collect();
        command.push_str(&format!(" --checks {}", names.join(",")));
    }

    let m = &doc.matrix;
    let mut report = Report::new(command, input_digest);
    report.matrix = Some(matrix_rows(m));
    for check in checks {
        match check {
            Check::Tnn => {
                let tnn = is_totally_nonnegative(m);
                report.stages.push(
                    StageOut::new("total-nonnegativity", tnn.holds, "")
                        .with_witness(tnn.violation.map(|w| w.to_string())),
                );
            }
            Check::Stp => {
                report.stages.push(StageOut::new(
                    "strict-total-positivity",
                    is_strictly_totally_positive(m),
                    "",
                ));
            }
            Check::Oscillatory => {
                let holds = is_oscillatory(m);
                if m.n() <= OSCILLATORY_CROSS_CHECK_MAX_N
                    && holds != is_oscillatory_by_definition(m)
                {
                    return Err(CliError::Internal(
                        "oscillatory criterion disagrees with the definition".into(),
                    ));
                }
                report.stages.push(StageOut::new("oscillatory", holds, ""));
            }
            Check::SignDefinite => {
                let class = classify_sign_definite(m, args.power_cap);
                sign_definite_stages(&mut report, &class);
            }
            Check::Corners => {
                if m.n() < 2 {
                    report
                        .stages
                        .push(StageOut::skipped("corner-conditions", "needs n >= 2"));
                } else if m.first_negative_entry().is_some() {
                    report.stages.push(StageOut::skipped(
                        "corner-conditions",
                        "matrix has a negative entry",
                    ));
                } else {
                    let corners = check_corner_conditions(m)?;
                    for side in [FlipSide::Left, FlipSide::Right] {
                        let detail = match corners.first_failure(side) {
                            Some(i) => format!("fails at i = {i}"),
                            None => String::new(),
                        };
                        report.stages.push(StageOut::new(
                            &format!("corner-conditions-{side}"),
                            corners.holds_for(side),
                            detail,
                        ));
                    }
                }
            }
        }
    }
    finish(report, out, started)
}

pub fn jflip(args: &JflipArgs, out: &Output) -> Result<String, CliError> {
    let started = Instant::now();
    let (doc, input_digest) = read_document(&args.input)?;
    let command = format!(
        "jflip --side {} --tol {}",
        args.side,
        to_exact_string(args.tol.get())
    );
    let cert = jflip_si_certificate(&doc.matrix, args.side, &args.tol)?;
    let mut report = Report::new(command, input_digest);
    report.matrix = Some(matrix_rows(&cert.flipped));
    for s in &cert.stages {
        report
            .stages
            .push(StageOut::new(s.stage.name(), s.passed, s.detail.clone()));
    }
    if let Some(class) = &cert.classification {
        report.signature = Some(class.signature.iter().map(|s| s.to_string()).collect());
        report.sign_definite = Some(SignDefiniteOut {
            verdict: class.verdict.to_string(),
            class_n_plus: class.is_class_n_plus(),
            power_exponent: class.power_exponent,
            power_cap: class.power_cap,
        });
    }
    report.spectrum = cert.spectrum.as_ref().map(spectrum_out);
    report.stages.push(StageOut::new(
        "certificate",
        cert.certified(),
        match cert.failed_stage() {
            Some(s) => format!("stopped at {}", s.stage.name()),
            None => "self-interlacing spectrum certified".to_string(),
        },
    ));
    finish(report, out, started)
}

pub fn spectrum(args: &SpectrumArgs, out: &Output) -> Result<String, CliError> {
    let started = Instant::now();
    let (doc, input_digest) = read_document(&args.input)?;
    let mut command = format!("spectrum --tol {}", to_exact_string(args.tol.get()));
    if let Some(kind) = args.kind {
        command.push_str(&format!(" --kind {kind}"));
    }
    let r = spectrum_report(&doc.matrix, &args.tol)?;
    let mut report = Report::new(command, input_digest);
    report.matrix = Some(matrix_rows(&doc.matrix));
    if let Some(kind) = args.kind {
        report.stages.push(StageOut::new(
            &format!("self-interlacing-kind-{kind}"),
            r.verdict.kind() == Some(kind),
            r.verdict.to_string(),
        ));
    }
    report.spectrum = Some(spectrum_out(&r));
    finish(report, out, started)
}

pub fn poly(args: &PolyArgs, out: &Output) -> Result<String, CliError> {
    let started = Instant::now();
    let (text, input_digest) = match (&args.input, &args.coeffs) {
        (_, Some(c)) => (c.clone(), digest(c.as_bytes())),
        (Some(path), None) => {
            let bytes = read_input(path)?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| CliError::input(format!("{path} is not UTF-8 text")))?;
            (text, digest(&bytes))
        }
        (None, None) => return Err(CliError::input("give a coefficient file or --coeffs")),
    };
    let cleaned: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let coeffs = parse_numbers(&cleaned.join(" "))?;
    let p = Polynomial::new(coeffs);
    if p.is_zero() || p.degree() == 0 {
        return Err(CliError::input("polynomial must have degree at least 1"));
    }
    let twist = twist_for_kind(&p, args.kind)?.into_polynomial();
    let minors = hurwitz_minors(&twist)?;
    let squarefree = p.is_squarefree();
    let real_roots = if squarefree {
        isolate_real_roots(&p)?
            .iter()
            .map(|b| refine_root(&p, b, args.tol.get()))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let mut report = Report::new(
        format!(
            "poly --kind {} --tol {}",
            args.kind,
            to_exact_string(args.tol.get())
        ),
        input_digest,
    );
    let si = is_self_interlacing(&p, args.kind)?;
    report.stages.push(StageOut::new(
        &format!("self-interlacing-kind-{}", args.kind),
        si,
        "",
    ));
    report.polynomial = Some(PolynomialOut {
        coeffs: poly_string(&p),
        kind: args.kind.to_string(),
        twist: poly_string(&twist),
        hurwitz_minors: minors.iter().map(to_exact_string).collect(),
        hurwitz_stable: hurwitz_stable(&twist)?,
        self_interlacing: si,
        squarefree,
        width_bound: to_exact_string(args.tol.get()),
        real_roots: boxes_out(&real_roots, args.tol.get()),
    });
    finish(report, out, started)
}

fn numbers(flag: &str, value: &Option<String>) -> Result<Option<Vec<selfint::Rational>>, CliError> {
    value
        .as_deref()
        .map(|s| parse_numbers(s).map_err(|e| CliError::input(format!("--{flag}: {e}"))))
        .transpose()
}

fn require(
    flag: &str,
    v: Option<Vec<selfint::Rational>>,
) -> Result<Vec<selfint::Rational>, CliError> {
    v.ok_or_else(|| CliError::input(format!("this family needs --{flag}")))
}

fn single(flag: &str, v: Vec<selfint::Rational>) -> Result<selfint::Rational, CliError> {
    match <[_; 1]>::try_from(v) {
        Ok([x]) => Ok(x),
        Err(_) => Err(CliError::input(format!("--{flag} takes exactly one value"))),
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Bidiagonal => "bidiagonal",
        Family::Antibidiagonal => "antibidiagonal",
        Family::TridiagonalEquivalent => "tridiagonal-equivalent",
        Family::Jacobi => "jacobi",
        Family::Antijacobi => "antijacobi",
        Family::RandomTnn => "random-tnn",
        Family::RandomPositiveTnn => "random-positive-tnn",
        Family::RandomOscillatory => "random-oscillatory",
    }
}

/// Builds the document for `construct`; random families are re-checked
/// before they are emitted.
pub fn construct_document(args: &ConstructArgs) -> Result<MatrixDocument, CliError> {
    let params = Params {
        a: numbers("a", &args.a)?,
        b: numbers("b", &args.b)?,
        c: numbers("c", &args.c)?,
        d: numbers("d", &args.d)?,
        e: numbers("e", &args.e)?,
    };
    let name = family_name(args.family);
    let random_n = || {
        args.n
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::input(format!("{name} needs --n >= 1")))
    };
    let (structure, params, matrix, comments) = match args.family {
        Family::Bidiagonal => {
            let d = require("d", params.d)?;
            let e = require("e", params.e)?;
            let m = bidiagonal_upper(&d, &e)?;
            let p = Params {
                d: Some(d),
                e: Some(e),
                ..Params::default()
            };
            (Structure::Bidiagonal, p, m, vec![])
        }
        Family::Antibidiagonal | Family::TridiagonalEquivalent => {
            let a = require("a", params.a)?;
            let b = require("b", params.b)?;
            let c = require("c", params.c)?;
            let spec = AntiBidiagonalSpec::new(single("a", a.clone())?, b.clone(), c.clone())?;
            let p = Params {
                a: Some(a),
                b: Some(b),
                c: Some(c),
                ..Params::default()
            };
            if args.family == Family::Antibidiagonal {
                (Structure::AntiBidiagonal, p, anti_bidiagonal(&spec), vec![])
            } else {
                let comment = format!(
                    "tridiagonal-equivalent of antibidiagonal a: {} b: {} c: {}",
                    to_exact_string(&spec.a),
                    spec.b
                        .iter()
                        .map(to_exact_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    spec.c
                        .iter()
                        .map(to_exact_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
                (
                    Structure::General,
                    Params::default(),
                    equivalent_tridiagonal(&spec),
                    vec![comment],
                )
            }
        }
        Family::Jacobi | Family::Antijacobi => {
            let a = require("a", params.a)?;
            let b = require("b", params.b)?;
            let c = require("c", params.c)?;
            let spec = JacobiSpec::new(a.clone(), b.clone(), c.clone())?;
            let p = Params {
                a: Some(a),
                b: Some(b),
                c: Some(c),
                ..Params::default()
            };
            if args.family == Family::Jacobi {
                (Structure::Jacobi, p, jacobi_matrix(&spec), vec![])
            } else {
                (Structure::AntiJacobi, p, anti_jacobi(&spec), vec![])
            }
        }
        Family::RandomTnn | Family::RandomPositiveTnn | Family::RandomOscillatory => {
            let n = random_n()?;
            let (m, ok) = match args.family {
                Family::RandomTnn => {
                    let m = random_tnn(n, args.seed);
                    let ok = is_totally_nonnegative(&m).holds;
                    (m, ok)
                }
                Family::RandomPositiveTnn => {
                    let m = random_positive_tnn(n, args.seed);
                    let ok = m.is_entrywise_positive() && is_totally_nonnegative(&m).holds;
                    (m, ok)
                }
                _ => {
                    let m = random_oscillatory(n, args.seed);
                    let ok = is_oscillatory(&m);
                    (m, ok)
                }
            };
            if !ok {
                return Err(CliError::Internal(format!(
                    "{name} n = {n} seed = {} failed re-verification",
                    args.seed
                )));
            }
            let comment = format!("{name} n: {n} seed: {}", args.seed);
            (Structure::General, Params::default(), m, vec![comment])
        }
    };
    if let Some(n) = args.n {
        if n != matrix.n() {
            return Err(CliError::input(format!(
                "--n {n} does not match the parameters, which give n = {}",
                matrix.n()
            )));
        }
    }
    Ok(MatrixDocument {
        structure,
        params,
        matrix,
        comments,
    })
}

pub fn construct(args: &ConstructArgs, out: &Output) -> Result<String, CliError> {
    let doc = construct_document(args)?;
    let text = render_document(&doc);
    if !out.json {
        return Ok(text);
    }
    let mut report = Report::new(
        format!(
            "construct {} --seed {}",
            family_name(args.family),
            args.seed
        ),
        digest(text.as_bytes()),
    );
    report.matrix = Some(matrix_rows(&doc.matrix));
    Ok(report.to_json())
}
