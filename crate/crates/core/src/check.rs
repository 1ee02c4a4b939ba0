//! Verdicts returned by the axiom checkers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::field::Field;

/// The first violated identity found by a checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<F> {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<F> {
    Pass,
    Fail(Violation<F>),
}

impl<F> Verdict<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation<F>> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }

    /// Name of the violated identity, if any.
    pub fn identity(&self) -> Option<&str> {
        self.violation().map(|v| v.identity.as_str())
    }
}

impl<F: Field> fmt::Display for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {:?}: lhs = [", self.identity, self.indices)?;
        write_vec(f, &self.lhs)?;
        write!(f, "], rhs = [")?;
        write_vec(f, &self.rhs)?;
        write!(f, "]")
    }
}

fn write_vec<F: Field>(f: &mut fmt::Formatter<'_>, v: &[F]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Early exit from a check: either a violated identity or a hard error.
#[derive(Debug)]
pub(crate) enum Stop<F> {
    Violated(Violation<F>),
    Error(Error),
}

impl<F> From<Error> for Stop<F> {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

pub(crate) type Flow<F> = core::result::Result<(), Stop<F>>;

pub(crate) fn finish<F>(flow: Flow<F>) -> crate::Result<Verdict<F>> {
    match flow {
        Ok(()) => Ok(Verdict::Pass),
        Err(Stop::Violated(v)) => Ok(Verdict::Fail(v)),
        Err(Stop::Error(e)) => Err(e),
    }
}

/// Turns a verdict back into a flow so sub-checks compose with `?`.
pub(crate) fn resume<F>(v: crate::Result<Verdict<F>>) -> Flow<F> {
    match v? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(v) => Err(Stop::Violated(v)),
    }
}

pub(crate) fn expect_eq<F: Field>(identity: &str, indices: &[usize], lhs: Vec<F>, rhs: Vec<F>) -> Flow<F> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Stop::Violated(Violation { identity: identity.to_string(), indices: indices.to_vec(), lhs, rhs }))
    }
}
