use std::fmt;

use super::signature::{Context, Signature};
use super::term::{infer_sort, Term, TermError};

/// An equation between two terms of a common sort.  Equality is not
/// reflexive: the equation holds only when both sides are defined and equal.
/// Definedness `def(t)` is encoded as the equation `t = t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    /// The definedness assertion `t = t`.
    pub fn defined(t: Term) -> Self {
        Equation {
            lhs: t.clone(),
            rhs: t,
        }
    }

    pub fn is_definedness(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Both sides must have the same inferable sort; returns it.
    pub fn check(&self, sig: &Signature, ctx: &Context) -> Result<String, TermError> {
        let ls = infer_sort(sig, &self.lhs, ctx)?;
        if self.is_definedness() {
            return Ok(ls);
        }
        let rs = infer_sort(sig, &self.rhs, ctx)?;
        if ls != rs {
            return Err(TermError::ArgSortMismatch {
                op: "=".to_string(),
                index: 1,
                expected: ls,
                got: rs,
                term: self.to_string(),
            });
        }
        Ok(ls)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_definedness() {
            write!(f, "def({})", self.lhs)
        } else {
            write!(f, "{} = {}", self.lhs, self.rhs)
        }
    }
}

/// A Horn formula: a finite conjunction of equations (empty means truth).
pub type Formula = Vec<Equation>;

fn fmt_formula(f: &mut fmt::Formatter<'_>, formula: &Formula) -> fmt::Result {
    for (i, eq) in formula.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{eq}")?;
    }
    Ok(())
}

/// A Horn sequent `premise |-(context) conclusion`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequent {
    pub context: Context,
    pub premise: Formula,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(context: Context, premise: Formula, conclusion: Formula) -> Self {
        Sequent {
            context,
            premise,
            conclusion,
        }
    }

    /// Sort-check every equation against the signature.
    pub fn check(&self, sig: &Signature) -> Result<(), TermError> {
        for eq in self.premise.iter().chain(&self.conclusion) {
            eq.check(sig, &self.context)?;
        }
        Ok(())
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.context.is_empty() {
            write!(f, "forall {} ", self.context)?;
        }
        write!(f, "[")?;
        fmt_formula(f, &self.premise)?;
        write!(f, "] |- ")?;
        fmt_formula(f, &self.conclusion)
    }
}
