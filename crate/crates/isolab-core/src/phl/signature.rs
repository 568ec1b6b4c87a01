use std::fmt;

use thiserror::Error;

/// Declaration of a partial operation: `name : arg_sorts -> result_sort`.
/// Constants are operations with an empty argument list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpDecl {
    pub name: String,
    pub arg_sorts: Vec<String>,
    pub result_sort: String,
}

impl OpDecl {
    pub fn new(
        name: impl Into<String>,
        arg_sorts: impl IntoIterator<Item = impl Into<String>>,
        result_sort: impl Into<String>,
    ) -> Self {
        OpDecl {
            name: name.into(),
            arg_sorts: arg_sorts.into_iter().map(Into::into).collect(),
            result_sort: result_sort.into(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arg_sorts.len()
    }
}

impl fmt::Display for OpDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} :", self.name)?;
        for s in &self.arg_sorts {
            write!(f, " {s}")?;
        }
        write!(f, " -> {}", self.result_sort)
    }
}

/// A multi-sorted signature: sort names plus operation declarations, in
/// declaration order.  Operation names are unique across the signature.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    pub sorts: Vec<String>,
    pub ops: Vec<OpDecl>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SignatureError {
    #[error("duplicate sort `{0}`")]
    DuplicateSort(String),
    #[error("duplicate operation `{0}`")]
    DuplicateOp(String),
    #[error("operation `{op}` mentions unknown sort `{sort}`")]
    UnknownSort { op: String, sort: String },
}

impl Signature {
    pub fn new(
        sorts: impl IntoIterator<Item = impl Into<String>>,
        ops: impl IntoIterator<Item = OpDecl>,
    ) -> Result<Self, SignatureError> {
        let mut sig = Signature::default();
        for s in sorts {
            sig.add_sort(s.into())?;
        }
        for op in ops {
            sig.add_op(op)?;
        }
        Ok(sig)
    }

    pub fn add_sort(&mut self, sort: String) -> Result<(), SignatureError> {
        if self.has_sort(&sort) {
            return Err(SignatureError::DuplicateSort(sort));
        }
        self.sorts.push(sort);
        Ok(())
    }

    pub fn add_op(&mut self, op: OpDecl) -> Result<(), SignatureError> {
        if self.op(&op.name).is_some() {
            return Err(SignatureError::DuplicateOp(op.name));
        }
        for s in op.arg_sorts.iter().chain([&op.result_sort]) {
            if !self.has_sort(s) {
                return Err(SignatureError::UnknownSort {
                    op: op.name.clone(),
                    sort: s.clone(),
                });
            }
        }
        self.ops.push(op);
        Ok(())
    }

    pub fn has_sort(&self, sort: &str) -> bool {
        self.sorts.iter().any(|s| s == sort)
    }

    pub fn op(&self, name: &str) -> Option<&OpDecl> {
        self.ops.iter().find(|o| o.name == name)
    }

    pub fn constants_of_sort<'a>(&'a self, sort: &'a str) -> impl Iterator<Item = &'a OpDecl> {
        self.ops
            .iter()
            .filter(move |o| o.arg_sorts.is_empty() && o.result_sort == sort)
    }
}

/// An ordered variable context `x1:S1, ..., xn:Sn`.  Variable names are
/// unique within a context.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Context(pub Vec<(String, String)>);

impl Context {
    pub fn new(vars: impl IntoIterator<Item = (impl Into<String>, impl Into<String>)>) -> Self {
        Context(
            vars.into_iter()
                .map(|(v, s)| (v.into(), s.into()))
                .collect(),
        )
    }

    pub fn sort_of(&self, var: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(v, _)| v == var)
            .map(|(_, s)| s.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(v, s)| (v.as_str(), s.as_str()))
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, s)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{s}")?;
        }
        Ok(())
    }
}
