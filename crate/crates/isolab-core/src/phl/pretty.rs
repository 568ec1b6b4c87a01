use std::fmt;

use super::theory::Theory;

/// The canonical `.thy` rendering: sorts, then operations, then axioms, in
/// declaration order.  `parse_theory(theory.to_string())` reproduces the
/// theory exactly.
impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theory {}", self.name)?;
        if !self.signature.sorts.is_empty() {
            writeln!(f)?;
        }
        for s in &self.signature.sorts {
            writeln!(f, "sort {s};")?;
        }
        if !self.signature.ops.is_empty() {
            writeln!(f)?;
        }
        for op in &self.signature.ops {
            writeln!(f, "op {op};")?;
        }
        if !self.axioms.is_empty() {
            writeln!(f)?;
        }
        for ax in &self.axioms {
            writeln!(f, "axiom {ax};")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::phl::parser::parse_theory;
    use crate::phl::signature::{Context, OpDecl, Signature};
    use crate::phl::term::Term;
    use crate::phl::{Equation, Sequent, Theory};

    #[test]
    fn round_trips_handwritten_theory() {
        let sig = Signature::new(
            ["A", "B"],
            [
                OpDecl::new("c", Vec::<String>::new(), "A"),
                OpDecl::new("f", ["A"], "B"),
                OpDecl::new("pair", ["A", "B"], "B"),
            ],
        )
        .unwrap();
        let axioms = vec![
            Sequent::new(
                Context::default(),
                vec![],
                vec![Equation::defined(Term::constant("c"))],
            ),
            Sequent::new(
                Context::new([("x", "A"), ("y", "B")]),
                vec![Equation::defined(Term::app("pair", [
                    Term::var("x", "A"),
                    Term::var("y", "B"),
                ]))],
                vec![Equation::new(
                    Term::app("pair", [Term::var("x", "A"), Term::var("y", "B")]),
                    Term::var("y", "B"),
                )],
            ),
        ];
        let theory = Theory::new("pairs", sig, axioms);
        let printed = theory.to_string();
        let reparsed = parse_theory(&printed).unwrap();
        assert_eq!(reparsed, theory);
        // Printing is idempotent.
        assert_eq!(reparsed.to_string(), printed);
    }
}
