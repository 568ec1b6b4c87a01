use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::signature::{Context, Signature};

/// A term over a signature: a sorted variable or an operation applied to
/// argument terms.  Constants are nullary applications.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var { name: String, sort: String },
    App { op: String, args: Vec<Term> },
}

impl Term {
    pub fn var(name: impl Into<String>, sort: impl Into<String>) -> Self {
        Term::Var {
            name: name.into(),
            sort: sort.into(),
        }
    }

    pub fn app(op: impl Into<String>, args: impl IntoIterator<Item = Term>) -> Self {
        Term::App {
            op: op.into(),
            args: args.into_iter().collect(),
        }
    }

    pub fn constant(op: impl Into<String>) -> Self {
        Term::app(op, [])
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Var { .. } => 1,
            Term::App { args, .. } => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    pub fn free_vars(&self) -> Vec<(String, String)> {
        fn walk(t: &Term, out: &mut Vec<(String, String)>) {
            match t {
                Term::Var { name, sort } => {
                    if !out.iter().any(|(n, _)| n == name) {
                        out.push((name.clone(), sort.clone()));
                    }
                }
                Term::App { args, .. } => {
                    for a in args {
                        walk(a, out);
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var { name, .. } => write!(f, "{name}"),
            Term::App { op, args } => {
                write!(f, "{op}")?;
                if !args.is_empty() {
                    write!(f, "(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("unknown operation `{op}` in term `{term}`")]
    UnknownOp { op: String, term: String },
    #[error("variable `{var}` is not declared in the context (term `{term}`)")]
    UnknownVar { var: String, term: String },
    #[error(
        "variable `{var}` is annotated with sort {annotated} but declared with sort {declared}"
    )]
    VarSortMismatch {
        var: String,
        annotated: String,
        declared: String,
    },
    #[error("operation `{op}` expects {expected} arguments, got {got} in term `{term}`")]
    ArityMismatch {
        op: String,
        expected: usize,
        got: usize,
        term: String,
    },
    #[error("argument {index} of `{op}` has sort {got}, expected {expected} (term `{term}`)")]
    ArgSortMismatch {
        op: String,
        index: usize,
        expected: String,
        got: String,
        term: String,
    },
    #[error("binding for `{var}` has sort {got}, expected {expected}")]
    BindingSortMismatch {
        var: String,
        expected: String,
        got: String,
    },
}

/// Infer the sort of `term` against `sig`, checking variables against
/// `context`.  Variable occurrences must be declared in the context and
/// their annotations must agree with the declaration.
pub fn infer_sort(sig: &Signature, term: &Term, context: &Context) -> Result<String, TermError> {
    match term {
        Term::Var { name, sort } => match context.sort_of(name) {
            None => Err(TermError::UnknownVar {
                var: name.clone(),
                term: term.to_string(),
            }),
            Some(declared) if declared != sort => Err(TermError::VarSortMismatch {
                var: name.clone(),
                annotated: sort.clone(),
                declared: declared.to_string(),
            }),
            Some(declared) => Ok(declared.to_string()),
        },
        Term::App { op, args } => {
            let decl = sig.op(op).ok_or_else(|| TermError::UnknownOp {
                op: op.clone(),
                term: term.to_string(),
            })?;
            if decl.arity() != args.len() {
                return Err(TermError::ArityMismatch {
                    op: op.clone(),
                    expected: decl.arity(),
                    got: args.len(),
                    term: term.to_string(),
                });
            }
            for (i, (arg, expected)) in args.iter().zip(&decl.arg_sorts).enumerate() {
                let got = infer_sort(sig, arg, context)?;
                if &got != expected {
                    return Err(TermError::ArgSortMismatch {
                        op: op.clone(),
                        index: i,
                        expected: expected.clone(),
                        got,
                        term: term.to_string(),
                    });
                }
            }
            Ok(decl.result_sort.clone())
        }
    }
}

/// Infer the sort of a term whose variables are taken at face value from
/// their annotations (used for checking substitution bindings, whose free
/// variables need not live in any particular context).
pub(crate) fn infer_sort_annotated(sig: &Signature, term: &Term) -> Result<String, TermError> {
    let ctx = Context::new(term.free_vars());
    infer_sort(sig, term, &ctx)
}

/// Simultaneously replace variables by terms.  Each binding must have the
/// sort the variable is annotated with; variables without a binding are left
/// in place.
pub fn substitute(
    sig: &Signature,
    term: &Term,
    bindings: &BTreeMap<String, Term>,
) -> Result<Term, TermError> {
    for (var, replacement) in bindings {
        if let Some((_, sort)) = term.free_vars().iter().find(|(n, _)| n == var) {
            let got = infer_sort_annotated(sig, replacement)?;
            if &got != sort {
                return Err(TermError::BindingSortMismatch {
                    var: var.clone(),
                    expected: sort.clone(),
                    got,
                });
            }
        }
    }
    Ok(replace(term, bindings))
}

fn replace(term: &Term, bindings: &BTreeMap<String, Term>) -> Term {
    match term {
        Term::Var { name, .. } => match bindings.get(name) {
            Some(t) => t.clone(),
            None => term.clone(),
        },
        Term::App { op, args } => Term::App {
            op: op.clone(),
            args: args.iter().map(|a| replace(a, bindings)).collect(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phl::signature::OpDecl;

    fn monoid_sig() -> Signature {
        Signature::new(
            ["M"],
            [
                OpDecl::new("e", Vec::<String>::new(), "M"),
                OpDecl::new("mul", ["M", "M"], "M"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn infers_application_sort() {
        let sig = monoid_sig();
        let ctx = Context::new([("x", "M")]);
        let t = Term::app("mul", [Term::var("x", "M"), Term::constant("e")]);
        assert_eq!(infer_sort(&sig, &t, &ctx).unwrap(), "M");
    }

    #[test]
    fn rejects_arity_mismatch_naming_term() {
        let sig = monoid_sig();
        let ctx = Context::new([("x", "M")]);
        let t = Term::app("mul", [Term::var("x", "M")]);
        let err = infer_sort(&sig, &t, &ctx).unwrap_err();
        assert!(err.to_string().contains("mul(x)"), "{err}");
    }

    #[test]
    fn rejects_undeclared_variable() {
        let sig = monoid_sig();
        let t = Term::var("y", "M");
        assert!(matches!(
            infer_sort(&sig, &t, &Context::default()),
            Err(TermError::UnknownVar { .. })
        ));
    }

    #[test]
    fn substitution_replaces_and_checks_sorts() {
        let sig = monoid_sig();
        let t = Term::app("mul", [Term::var("x", "M"), Term::var("x", "M")]);
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), Term::constant("e"));
        let got = substitute(&sig, &t, &b).unwrap();
        assert_eq!(
            got,
            Term::app("mul", [Term::constant("e"), Term::constant("e")])
        );
    }

    #[test]
    fn substitution_rejects_wrong_sort() {
        let mut sig = monoid_sig();
        sig.add_sort("N".into()).unwrap();
        sig.add_op(OpDecl::new("z", Vec::<String>::new(), "N")).unwrap();
        let t = Term::var("x", "M");
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), Term::constant("z"));
        assert!(matches!(
            substitute(&sig, &t, &b),
            Err(TermError::BindingSortMismatch { .. })
        ));
    }
}
