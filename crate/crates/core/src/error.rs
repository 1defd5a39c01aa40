use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by construction and by procedures whose hypotheses fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyTable,
    NotSquare { row: usize, len: usize, expected: usize },
    IndexOutOfRange { row: usize, col: usize, value: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    LabelCount { expected: usize, found: usize },
    EmptySeed,
    ElementOutOfRange(usize),
    /// `a * b = product` escapes the candidate subset.
    NotClosed { a: usize, b: usize, product: usize },
    OrderTooLarge(usize),
    NotInSubgroup(usize),
    NotRegular,
    NotAPreorder(&'static str),
    AxiomViolated { axiom: &'static str, witness: Vec<usize> },
    PreconditionFailed(String),
    WindowTooSmall { window: i64, minimum: i64 },
    WrongSemigroup,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyTable => f.write_str("table is empty"),
            Error::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            Error::IndexOutOfRange { row, col, value } => {
                write!(f, "entry ({row}, {col}) = {value} is out of range")
            }
            Error::NotAssociative { a, b, c } => {
                write!(f, "not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
            }
            Error::LabelCount { expected, found } => {
                write!(f, "expected {expected} labels, found {found}")
            }
            Error::EmptySeed => f.write_str("seed set is empty"),
            Error::ElementOutOfRange(e) => write!(f, "element {e} is out of range"),
            Error::NotClosed { a, b, product } => {
                write!(f, "subset not closed: {a}*{b} = {product} is outside it")
            }
            Error::OrderTooLarge(n) => write!(f, "order {n} is too large for exhaustive enumeration"),
            Error::NotInSubgroup(a) => write!(f, "element {a} does not lie in a subgroup"),
            Error::NotRegular => f.write_str("semigroup is not regular"),
            Error::NotAPreorder(which) => write!(f, "{which} is not a preorder"),
            Error::AxiomViolated { axiom, witness } => {
                write!(f, "*-pair axiom violated: {axiom} (witness {witness:?})")
            }
            Error::PreconditionFailed(why) => write!(f, "precondition failed: {why}"),
            Error::WindowTooSmall { window, minimum } => {
                write!(f, "window {window} is smaller than the minimum {minimum}")
            }
            Error::WrongSemigroup => f.write_str("element does not belong to this semigroup"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

/// A concrete failing instance of a quantified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Which clause of the statement failed.
    pub clause: &'static str,
    pub elements: Vec<usize>,
}

impl Counterexample {
    pub fn new(clause: &'static str, elements: &[usize]) -> Self {
        Counterexample { clause, elements: elements.to_vec() }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.clause, self.elements)
    }
}
