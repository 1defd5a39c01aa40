use core::fmt;

use crate::error::Counterexample;

/// Outcome of checking a named condition or quantified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
    /// The statement's hypotheses are not met on this instance.
    NotApplicable(&'static str),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn fail(clause: &'static str, elements: &[usize]) -> Self {
        Verdict::Fails(Counterexample::new(clause, elements))
    }

    pub fn witness(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Fails(c) => Some(c),
            _ => None,
        }
    }

    /// `Holds` when `first_failure` is `None`.
    pub fn from_failure(clause: &'static str, first_failure: Option<alloc::vec::Vec<usize>>) -> Self {
        match first_failure {
            None => Verdict::Holds,
            Some(w) => Verdict::fail(clause, &w),
        }
    }
}

impl From<Result<(), Counterexample>> for Verdict {
    fn from(r: Result<(), Counterexample>) -> Self {
        match r {
            Ok(()) => Verdict::Holds,
            Err(c) => Verdict::Fails(c),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(c) => write!(f, "fails ({c})"),
            Verdict::NotApplicable(why) => write!(f, "not applicable ({why})"),
        }
    }
}
