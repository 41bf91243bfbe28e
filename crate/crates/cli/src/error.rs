use std::fmt;

use lace_poly::PolyError;
use lace_roots::RootError;
use lace_simplicial::ComplexError;
use lace_subdiv::SubdivError;
use lace_zono::ZonoError;

pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PRECONDITION, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn poly_code(e: &PolyError) -> u8 {
    match e {
        PolyError::Parse(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

fn complex_code(e: &ComplexError) -> u8 {
    match e {
        ComplexError::Parse { .. } => EXIT_PARSE,
        ComplexError::UniformityViolation(_) => EXIT_MISMATCH,
        ComplexError::Precondition(_) => EXIT_PRECONDITION,
    }
}

fn subdiv_code(e: &SubdivError) -> u8 {
    match e {
        SubdivError::Parse(_) => EXIT_PARSE,
        SubdivError::OutOfRange { .. } | SubdivError::Precondition(_) | SubdivError::Root(_) => EXIT_PRECONDITION,
        SubdivError::InconsistentFTriangle(_) | SubdivError::PathMismatch(_) => EXIT_MISMATCH,
        SubdivError::Poly(p) => poly_code(p),
        SubdivError::Complex(c) => complex_code(c),
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError { code: poly_code(&e), message: e.to_string() }
    }
}

impl From<RootError> for CliError {
    fn from(e: RootError) -> Self {
        CliError { code: EXIT_PRECONDITION, message: e.to_string() }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError { code: complex_code(&e), message: e.to_string() }
    }
}

impl From<SubdivError> for CliError {
    fn from(e: SubdivError) -> Self {
        CliError { code: subdiv_code(&e), message: e.to_string() }
    }
}

impl From<ZonoError> for CliError {
    fn from(e: ZonoError) -> Self {
        let code = match &e {
            ZonoError::Parse { .. } | ZonoError::Dimension(_) => EXIT_PARSE,
            ZonoError::TooLarge { .. } => EXIT_PRECONDITION,
            ZonoError::PathMismatch(_) => EXIT_MISMATCH,
            ZonoError::Poly(p) => poly_code(p),
            ZonoError::Subdiv(s) => subdiv_code(s),
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::parse(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
