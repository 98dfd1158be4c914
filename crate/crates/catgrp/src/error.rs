use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Library-wide error type. Validation failures always carry a witness so
/// that a failing axiom can be reproduced by hand.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {axiom} fails ({witness})")]
    NotAGroup { axiom: &'static str, witness: String },

    #[error("not a homomorphism: map({x}+{y}) = {got}, expected {want}")]
    NotAHom { x: usize, y: usize, got: usize, want: usize },

    #[error("not a subgroup: {reason} ({witness})")]
    NotASubgroup { reason: &'static str, witness: String },

    #[error("subgroup not normal: conjugate of {member} by {by} = {conjugate} is outside")]
    NotNormal { by: usize, member: usize, conjugate: usize },

    #[error("{structure} axiom {axiom} fails ({witness})")]
    AxiomViolation { structure: &'static str, axiom: &'static str, witness: String },

    #[error("arrows not composable: d0(b) = {d0_b} but d1(a) = {d1_a}")]
    NotComposable { d0_b: usize, d1_a: usize },

    #[error("operand mismatch: {0}")]
    Mismatch(String),

    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: &'static str, needed: usize, cap: usize },

    #[error("actor tower requires a trivial center, but Z(G) has {arrows} arrows / {objects} objects")]
    CenterNotTrivial { arrows: usize, objects: usize },

    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: usize, msg: String },

    #[error("internal consistency failure (bug): {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code class used by the CLI: 1 = failure/invalid input,
    /// 2 = cap exceeded, 3 = internal inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}
