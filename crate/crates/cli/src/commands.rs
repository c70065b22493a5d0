use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use chevalley::decomp::{from_quotient_run, QuotientNewton};
use chevalley::document::{decomposition_document, decomposition_from_document, Document};
use chevalley::text::{
    format_matrix, format_poly_matrix, format_polynomial, parse_matrix, parse_polynomial,
};
use chevalley::{
    exp_nilpotent_factor, iteration_bound, matrix_power, multiplicative, newton_quotient,
    verify_decomposition, Error, Polynomial, SquareMatrix,
};

use crate::{Command, Common, NewtonFlags};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Format(String),
    Math(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Format(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) | CliError::Format(m) => f.write_str(m),
            CliError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Format(m),
            other => CliError::Math(other),
        }
    }
}

pub enum Outcome {
    Success,
    VerificationFailed,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<SquareMatrix, CliError> {
    parse_matrix(&read(path)?).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn read_polynomial(path: &Path) -> Result<Polynomial, CliError> {
    parse_polynomial(&read(path)?).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

/// Runs Newton's iteration for `u`, validating a user-supplied annihilator.
fn newton_run(u: &SquareMatrix, flags: &NewtonFlags) -> Result<QuotientNewton<chevalley::Rational>, CliError> {
    let p = match &flags.annihilator {
        Some(path) => {
            let p = read_polynomial(path)?;
            if p.is_constant() || !u.eval_poly(&p).is_zero() {
                return Err(Error::InvalidAnnihilator.into());
            }
            p
        }
        None => u.char_poly(),
    };
    Ok(newton_quotient(&p)?)
}

fn push_intermediates(doc: &mut Document, run: &QuotientNewton<chevalley::Rational>) {
    if let Some(q) = &run.q {
        doc.push("q", format_polynomial(q));
    }
    for (k, h) in run.iterates.iter().enumerate() {
        doc.push(format!("h_{k}"), format_polynomial(h));
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Decompose { common, newton } => {
            let u = read_matrix(&common.input)?;
            let run = newton_run(&u, newton)?;
            let trace = newton.emit_intermediates.then(|| run.clone());
            let dec = from_quotient_run(&u, run);
            let report = verify_decomposition(&u, &dec);
            let mut doc = decomposition_document(&dec, &report);
            if let Some(run) = &trace {
                push_intermediates(&mut doc, run);
            }
            emit(common, &doc.to_string())?;
            Ok(Outcome::Success)
        }
        Command::Poly { common, newton } => {
            let u = read_matrix(&common.input)?;
            let run = newton_run(&u, newton)?;
            let sp = &run.separable;
            let mut doc = Document::new();
            doc.push("annihilator", format_polynomial(&run.annihilator));
            doc.push("p_tilde", format_polynomial(&sp.p_tilde));
            doc.push("p_bar", format_polynomial(&sp.p_bar));
            if let Some(q) = &run.q {
                doc.push("q", format_polynomial(q));
            }
            doc.push("multiplicity", sp.multiplicity.to_string());
            doc.push("iteration_bound", iteration_bound(sp.multiplicity)?.to_string());
            if newton.emit_intermediates {
                doc.push("iterations", run.iterations.to_string());
                for (k, h) in run.iterates.iter().enumerate() {
                    doc.push(format!("h_{k}"), format_polynomial(h));
                }
            }
            emit(common, &doc.to_string())?;
            Ok(Outcome::Success)
        }
        Command::Verify {
            common,
            decomposition,
        } => {
            let u = read_matrix(&common.input)?;
            let text = read(decomposition)?;
            let doc = Document::parse(&text)
                .and_then(|d| decomposition_from_document(&d))
                .map_err(|e| CliError::Format(format!("{}: {e}", decomposition.display())))?;
            let report = verify_decomposition(&u, &doc);
            emit(common, &format!("{report}"))?;
            Ok(if report.passed() {
                Outcome::Success
            } else {
                Outcome::VerificationFailed
            })
        }
        Command::Power { common, m } => {
            let u = read_matrix(&common.input)?;
            let pow = matrix_power(&u, *m)?;
            emit(common, &format!("{}\n", format_matrix(&pow)))?;
            Ok(Outcome::Success)
        }
        Command::Multiplicative { common } => {
            let u = read_matrix(&common.input)?;
            let mult = multiplicative(&u)?;
            let mut doc = Document::new();
            doc.push("d", format_matrix(&mult.d));
            doc.push("v", format_matrix(&mult.v));
            emit(common, &doc.to_string())?;
            Ok(Outcome::Success)
        }
        Command::ExpNilpotent { common } => {
            let n = read_matrix(&common.input)?;
            let e = exp_nilpotent_factor(&n)?;
            emit(common, &format!("{}\n", format_poly_matrix(&e)))?;
            Ok(Outcome::Success)
        }
    }
}
