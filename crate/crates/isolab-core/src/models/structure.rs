use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::phl::Theory;

/// A finite partial structure for a theory's signature: per-sort finite
/// carriers of opaque element ids and a partial table per operation.  Rows
/// absent from a table mean the operation is undefined there.
///
/// A `PartialStructure` need not satisfy the theory's axioms; see
/// [`crate::models::check_model`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialStructure {
    pub theory: Theory,
    pub carriers: BTreeMap<String, Vec<String>>,
    pub tables: BTreeMap<String, BTreeMap<Vec<String>, String>>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("carrier given for unknown sort `{0}`")]
    UnknownSort(String),
    #[error("no carrier given for sort `{0}`")]
    MissingCarrier(String),
    #[error("duplicate element `{elem}` in carrier of sort `{sort}`")]
    DuplicateElement { sort: String, elem: String },
    #[error("table given for unknown operation `{0}`")]
    UnknownOp(String),
    #[error("row for `{op}` has {got} arguments, expected {expected}")]
    RowArity {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("row for `{op}` mentions `{elem}`, which is not in the carrier of sort `{sort}`")]
    RowElement {
        op: String,
        elem: String,
        sort: String,
    },
    #[error("duplicate row for `{op}` at arguments ({args})")]
    DuplicateRow { op: String, args: String },
    #[error("model file declares theory `{file}` but was checked against theory `{expected}`")]
    TheoryNameMismatch { file: String, expected: String },
}

impl PartialStructure {
    /// Build a structure, validating carriers and tables against the
    /// signature.  Every sort must have a (possibly empty) carrier; tables
    /// may be missing (meaning everywhere-undefined operations).
    pub fn new(
        theory: Theory,
        carriers: BTreeMap<String, Vec<String>>,
        tables: BTreeMap<String, BTreeMap<Vec<String>, String>>,
    ) -> Result<Self, ModelError> {
        for sort in carriers.keys() {
            if !theory.signature.has_sort(sort) {
                return Err(ModelError::UnknownSort(sort.clone()));
            }
        }
        for sort in &theory.signature.sorts {
            let carrier = carriers
                .get(sort)
                .ok_or_else(|| ModelError::MissingCarrier(sort.clone()))?;
            let mut seen = BTreeSet::new();
            for elem in carrier {
                if !seen.insert(elem) {
                    return Err(ModelError::DuplicateElement {
                        sort: sort.clone(),
                        elem: elem.clone(),
                    });
                }
            }
        }
        for (op, table) in &tables {
            let decl = theory
                .signature
                .op(op)
                .ok_or_else(|| ModelError::UnknownOp(op.clone()))?;
            for (args, result) in table {
                if args.len() != decl.arity() {
                    return Err(ModelError::RowArity {
                        op: op.clone(),
                        expected: decl.arity(),
                        got: args.len(),
                    });
                }
                for (elem, sort) in args
                    .iter()
                    .zip(&decl.arg_sorts)
                    .chain([(result, &decl.result_sort)])
                {
                    if !carriers[sort].contains(elem) {
                        return Err(ModelError::RowElement {
                            op: op.clone(),
                            elem: elem.clone(),
                            sort: sort.clone(),
                        });
                    }
                }
            }
        }
        Ok(PartialStructure {
            theory,
            carriers,
            tables,
        })
    }

    pub fn carrier(&self, sort: &str) -> &[String] {
        self.carriers
            .get(sort)
            .map(Vec::as_slice)
            .unwrap_or_default()
    }

    /// Table lookup; `None` means undefined at those arguments.
    pub fn op_value(&self, op: &str, args: &[String]) -> Option<&str> {
        self.tables
            .get(op)?
            .get(args)
            .map(String::as_str)
    }

    /// Canonical text rendering (the model file format): the theory name,
    /// one `sort` line per sort in signature order, then one `op` row per
    /// defined table entry in signature order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("theory {}\n", self.theory.name));
        for sort in &self.theory.signature.sorts {
            out.push_str(&format!("sort {sort}:"));
            for elem in self.carrier(sort) {
                out.push_str(&format!(" {elem}"));
            }
            out.push('\n');
        }
        for op in &self.theory.signature.ops {
            if let Some(table) = self.tables.get(&op.name) {
                for (args, result) in table {
                    out.push_str(&format!("op {}:", op.name));
                    for a in args {
                        out.push_str(&format!(" {a}"));
                    }
                    out.push_str(&format!(" -> {result}\n"));
                }
            }
        }
        out
    }
}

impl fmt::Display for PartialStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
