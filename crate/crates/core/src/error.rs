use core::fmt;

/// Failures of partial operations on distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Exact division by zero.
    DivisionByZero,
    /// A test function or function table is not defined at a required point.
    Domain,
    /// `Q` is not of the form `P ⊢ φ` on the support of `P`.
    NoDensity,
    /// The distribution has no finitely supported primitive for the step.
    NoPrimitive,
    /// The operation needs an invertible total and the total is zero.
    ZeroTotal,
    /// Conditioning on an event of probability zero.
    NullEvent,
    /// A function table takes a value other than 0 or 1.
    NotAnEvent,
    /// The distribution does not have total 1.
    NotProbability,
    /// A difference step of zero.
    ZeroStep,
    /// A unit of measure equal to zero.
    ZeroUnit,
    /// Function-space enumeration beyond the configured cap.
    SpaceTooLarge { size: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Domain => f.write_str("support point outside the domain of the function or operation"),
            Error::NoDensity => f.write_str("no density with respect to the given distribution"),
            Error::NoPrimitive => f.write_str("no finitely supported primitive for this step"),
            Error::ZeroTotal => f.write_str("total is zero"),
            Error::NullEvent => f.write_str("conditioning on a null event"),
            Error::NotAnEvent => f.write_str("event table must take only the values 0 and 1"),
            Error::NotProbability => f.write_str("distribution does not have total 1"),
            Error::ZeroStep => f.write_str("difference step must be nonzero"),
            Error::ZeroUnit => f.write_str("unit must be nonzero"),
            Error::SpaceTooLarge { size, cap } => {
                write!(f, "function space of size {size} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
