use std::collections::BTreeMap;

use crate::phl::{Equation, Sequent, Term};

use super::structure::PartialStructure;

/// Evaluate a term under an environment with strict semantics: an
/// application is defined only when all arguments are defined and the
/// operation's table has a row there.  `None` means undefined.
///
/// Panics if the term mentions a variable missing from `env` or an
/// operation missing from the signature; environments are expected to cover
/// the term's context.
pub fn eval_term(
    m: &PartialStructure,
    term: &Term,
    env: &BTreeMap<String, String>,
) -> Option<String> {
    match term {
        Term::Var { name, .. } => Some(
            env.get(name)
                .unwrap_or_else(|| panic!("environment does not bind variable `{name}`"))
                .clone(),
        ),
        Term::App { op, args } => {
            m.theory
                .signature
                .op(op)
                .unwrap_or_else(|| panic!("unknown operation `{op}`"));
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                vals.push(eval_term(m, a, env)?);
            }
            m.op_value(op, &vals).map(str::to_string)
        }
    }
}

/// An equation is satisfied when both sides are defined and equal.  In
/// particular an equation with both sides undefined is *not* satisfied,
/// while `def(t)`, encoded as `t = t`, is satisfied exactly when `t` is
/// defined.
fn equation_holds(m: &PartialStructure, eq: &Equation, env: &BTreeMap<String, String>) -> bool {
    match (eval_term(m, &eq.lhs, env), eval_term(m, &eq.rhs, env)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

fn formula_holds(m: &PartialStructure, f: &[Equation], env: &BTreeMap<String, String>) -> bool {
    f.iter().all(|eq| equation_holds(m, eq, env))
}

/// Iterate all environments for the sequent's context.  Sorts with empty
/// carriers simply produce no environments, so sequents over them hold
/// vacuously; degenerate models need no special-casing.
fn environments(m: &PartialStructure, seq: &Sequent) -> Vec<BTreeMap<String, String>> {
    let mut envs = vec![BTreeMap::new()];
    for (var, sort) in seq.context.iter() {
        let carrier = m.carrier(sort);
        let mut next = Vec::with_capacity(envs.len() * carrier.len());
        for env in &envs {
            for elem in carrier {
                let mut e = env.clone();
                e.insert(var.to_string(), elem.clone());
                next.push(e);
            }
        }
        envs = next;
    }
    envs
}

/// Does the sequent hold in `m`?  For every environment over the context,
/// if the premise is satisfied then the conclusion must be satisfied.
pub fn holds(m: &PartialStructure, seq: &Sequent) -> bool {
    environments(m, seq)
        .iter()
        .all(|env| !formula_holds(m, &seq.premise, env) || formula_holds(m, &seq.conclusion, env))
}

/// A failed axiom instance: the axiom (by index and rendering) plus the
/// witnessing environment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom_index: usize,
    pub axiom: String,
    pub env: BTreeMap<String, String>,
}

/// Result of checking a structure against its theory's axioms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelReport {
    pub violations: Vec<Violation>,
}

impl ModelReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check every axiom of the structure's theory, collecting all violations
/// with witnessing environments.
pub fn check_model(m: &PartialStructure) -> ModelReport {
    let mut report = ModelReport::default();
    for (i, ax) in m.theory.axioms.iter().enumerate() {
        for env in environments(m, ax) {
            if formula_holds(m, &ax.premise, &env) && !formula_holds(m, &ax.conclusion, &env) {
                report.violations.push(Violation {
                    axiom_index: i,
                    axiom: ax.to_string(),
                    env,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phl::{parse_theory, Context};

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

    fn z2() -> PartialStructure {
        let theory = parse_theory(MONOID_SRC).unwrap();
        let mut carriers = BTreeMap::new();
        carriers.insert("M".to_string(), vec!["0".to_string(), "1".to_string()]);
        let mut mul = BTreeMap::new();
        for a in 0..2u8 {
            for b in 0..2u8 {
                mul.insert(
                    vec![a.to_string(), b.to_string()],
                    ((a + b) % 2).to_string(),
                );
            }
        }
        let mut tables = BTreeMap::new();
        tables.insert("e".to_string(), BTreeMap::from([(vec![], "0".to_string())]));
        tables.insert("mul".to_string(), mul);
        PartialStructure::new(theory, carriers, tables).unwrap()
    }

    #[test]
    fn evaluates_with_strict_semantics() {
        let m = z2();
        let env = BTreeMap::from([("x".to_string(), "1".to_string())]);
        let t = crate::phl::Term::app(
            "mul",
            [
                crate::phl::Term::var("x", "M"),
                crate::phl::Term::constant("e"),
            ],
        );
        assert_eq!(eval_term(&m, &t, &env), Some("1".to_string()));
    }

    #[test]
    fn undefined_argument_makes_application_undefined() {
        let mut m = z2();
        m.tables.remove("e");
        let t = crate::phl::Term::app(
            "mul",
            [crate::phl::Term::constant("e"), crate::phl::Term::constant("e")],
        );
        assert_eq!(eval_term(&m, &t, &BTreeMap::new()), None);
    }

    #[test]
    fn z2_is_a_model() {
        assert!(check_model(&z2()).ok());
    }

    // Removing a single row from the multiplication table must break the
    // totality axiom, and `holds` must report the failure.
    #[test]
    fn totality_fails_after_removing_one_row() {
        let mut m = z2();
        m.tables
            .get_mut("mul")
            .unwrap()
            .remove(&vec!["1".to_string(), "1".to_string()])
            .unwrap();
        let totality = &m.theory.axioms[0].clone();
        assert!(!holds(&m, totality));
        let report = check_model(&m);
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.axiom_index == 0));
    }

    // An equation with both sides undefined is not satisfied.
    #[test]
    fn equation_requires_definedness_on_both_sides() {
        let mut m = z2();
        m.tables.remove("e");
        let seq = crate::phl::Sequent::new(
            Context::default(),
            vec![],
            vec![Equation::new(
                crate::phl::Term::constant("e"),
                crate::phl::Term::constant("e"),
            )],
        );
        assert!(!holds(&m, &seq));
    }

    // Sequents over an empty carrier hold vacuously.
    #[test]
    fn empty_carrier_is_vacuous() {
        let theory = parse_theory("theory t\nsort A;\nop f : A -> A;\naxiom forall x:A [] |- def(f(x));").unwrap();
        let carriers = BTreeMap::from([("A".to_string(), vec![])]);
        let m = PartialStructure::new(theory, carriers, BTreeMap::new()).unwrap();
        assert!(check_model(&m).ok());
    }
}
