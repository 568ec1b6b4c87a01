use std::collections::BTreeMap;

use thiserror::Error;

use crate::phl::Theory;

use super::structure::{ModelError, PartialStructure};

/// A parsed model file, not yet bound to a theory: the declared theory
/// name, the per-sort element lists, and one `args -> result` row per
/// defined operation instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelFile {
    pub theory_name: String,
    pub carriers: Vec<(String, Vec<String>)>,
    pub rows: Vec<(String, Vec<String>, String)>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelFileError {
    #[error("model file line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn is_token(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '\'')
}

/// Parse the model file format:
///
/// ```text
/// theory monoid
/// sort M: 0 1
/// op e: -> 0
/// op mul: 0 0 -> 0
/// ```
///
/// `#` starts a comment; rows absent from the file are undefined.
pub fn parse_model_file(source: &str) -> Result<ModelFile, ModelFileError> {
    let mut file = ModelFile::default();
    let syntax = |line: usize, message: String| ModelFileError::Syntax { line, message };
    for (i, raw) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "theory" => {
                if !is_token(rest) {
                    return Err(syntax(line_no, format!("bad theory name `{rest}`")));
                }
                if !file.theory_name.is_empty() {
                    return Err(syntax(line_no, "duplicate `theory` line".to_string()));
                }
                file.theory_name = rest.to_string();
            }
            "sort" => {
                let (name, elems) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, "expected `sort <name>: <elements>`".to_string()))?;
                let name = name.trim();
                if !is_token(name) {
                    return Err(syntax(line_no, format!("bad sort name `{name}`")));
                }
                let elems: Vec<String> = elems.split_whitespace().map(str::to_string).collect();
                for e in &elems {
                    if !is_token(e) {
                        return Err(syntax(line_no, format!("bad element id `{e}`")));
                    }
                }
                file.carriers.push((name.to_string(), elems));
            }
            "op" => {
                let (name, row) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, "expected `op <name>: <args> -> <result>`".to_string()))?;
                let name = name.trim();
                if !is_token(name) {
                    return Err(syntax(line_no, format!("bad operation name `{name}`")));
                }
                let (args, result) = row
                    .split_once("->")
                    .ok_or_else(|| syntax(line_no, "expected `->` in op row".to_string()))?;
                let args: Vec<String> = args.split_whitespace().map(str::to_string).collect();
                let result = result.trim();
                for tok in args.iter().map(String::as_str).chain([result]) {
                    if !is_token(tok) {
                        return Err(syntax(line_no, format!("bad element id `{tok}`")));
                    }
                }
                file.rows
                    .push((name.to_string(), args, result.to_string()));
            }
            other => {
                return Err(syntax(
                    line_no,
                    format!("expected `theory`, `sort` or `op`, found `{other}`"),
                ))
            }
        }
    }
    if file.theory_name.is_empty() {
        return Err(syntax(0, "missing `theory` line".to_string()));
    }
    Ok(file)
}

impl ModelFile {
    /// Bind the file to a theory, validating sorts, operations and element
    /// references.  The file's declared theory name must match.
    pub fn into_structure(self, theory: &Theory) -> Result<PartialStructure, ModelFileError> {
        if self.theory_name != theory.name {
            return Err(ModelError::TheoryNameMismatch {
                file: self.theory_name,
                expected: theory.name.clone(),
            }
            .into());
        }
        let mut carriers: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (sort, elems) in self.carriers {
            carriers.entry(sort).or_default().extend(elems);
        }
        let mut tables: BTreeMap<String, BTreeMap<Vec<String>, String>> = BTreeMap::new();
        for (op, args, result) in self.rows {
            let table = tables.entry(op.clone()).or_default();
            if table.insert(args.clone(), result).is_some() {
                return Err(ModelError::DuplicateRow {
                    op,
                    args: args.join(", "),
                }
                .into());
            }
        }
        Ok(PartialStructure::new(theory.clone(), carriers, tables)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phl::parse_theory;

    const MONOID_SRC: &str = "\
theory monoid
sort M;
op e : -> M;
op mul : M M -> M;
axiom forall x:M, y:M [] |- def(mul(x, y));
axiom [] |- def(e);
axiom forall x:M, y:M, z:M [] |- mul(mul(x, y), z) = mul(x, mul(y, z));
axiom forall x:M [] |- mul(e, x) = x;
axiom forall x:M [] |- mul(x, e) = x;
";

    const Z2_MODEL: &str = "\
# the two-element cyclic group as a monoid
theory monoid
sort M: 0 1
op e: -> 0
op mul: 0 0 -> 0
op mul: 0 1 -> 1
op mul: 1 0 -> 1
op mul: 1 1 -> 0
";

    #[test]
    fn parses_and_binds_model_file() {
        let theory = parse_theory(MONOID_SRC).unwrap();
        let file = parse_model_file(Z2_MODEL).unwrap();
        let m = file.into_structure(&theory).unwrap();
        assert_eq!(m.carrier("M"), ["0", "1"]);
        assert_eq!(m.op_value("mul", &["1".into(), "1".into()]), Some("0"));
        assert!(crate::models::check_model(&m).ok());
    }

    #[test]
    fn render_round_trips() {
        let theory = parse_theory(MONOID_SRC).unwrap();
        let m = parse_model_file(Z2_MODEL)
            .unwrap()
            .into_structure(&theory)
            .unwrap();
        let rendered = m.render();
        let again = parse_model_file(&rendered)
            .unwrap()
            .into_structure(&theory)
            .unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn rejects_row_with_unknown_element() {
        let theory = parse_theory(MONOID_SRC).unwrap();
        let bad = "theory monoid\nsort M: 0\nop mul: 0 2 -> 0\n";
        let err = parse_model_file(bad).unwrap().into_structure(&theory);
        assert!(err.is_err());
    }

    #[test]
    fn rejects_name_mismatch() {
        let theory = parse_theory(MONOID_SRC).unwrap();
        let bad = "theory group\nsort M: 0\n";
        let err = parse_model_file(bad).unwrap().into_structure(&theory);
        assert!(matches!(
            err,
            Err(ModelFileError::Model(ModelError::TheoryNameMismatch { .. }))
        ));
    }
}
