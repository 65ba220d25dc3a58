use thiserror::Error;

use crate::divisors::AdmissibleTriple;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("triple ({i},{j},{k}) is not admissible: need i + j + k >= 1")]
    InadmissibleTriple { i: u32, j: u32, k: u32 },

    #[error("cannot parse triple {0:?}: expected I,J,K with nonnegative integers")]
    TripleSyntax(String),

    #[error("unknown form {0:?}: expected P or Q")]
    FormSyntax(String),

    #[error("argument must be a positive integer")]
    ZeroArgument,

    #[error("arithmetic table covers n <= {limit}, requested {n}")]
    TableTooSmall { n: usize, limit: usize },

    #[error("triple {0} has j > 0: the ordinary Euler transform needs j = 0")]
    RequiresJZero(AdmissibleTriple),

    #[error("oracle bound exceeded: n = {n} > {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("pole at s = {pole} absent for triple {triple}")]
    PoleAbsent { triple: AdmissibleTriple, pole: u8 },

    #[error("residue polynomial for {triple} {form} at s = {pole} is not tabulated")]
    NotTabulated {
        triple: AdmissibleTriple,
        form: crate::divisors::Form,
        pole: u8,
    },

    #[error("no closed-form coefficient estimate for {triple} {form}")]
    NoClosedForm {
        triple: AdmissibleTriple,
        form: crate::divisors::Form,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    BFileSyntax { line: usize, message: String },

    #[error("non-increasing index at line {line}")]
    NonIncreasingIndex { line: usize },

    #[error("computed sequence and reference do not overlap")]
    EmptyOverlap,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
