use std::collections::BTreeMap;

use thiserror::Error;

use crate::phl::{
    infer_sort, parse_term_in_context, Context, OpDecl, ParseError, Signature, SignatureError,
    Term, TermError, Theory,
};

/// A term over a theory signature extended with one indeterminate and one
/// nullary constant per model element.  `Undef` marks a subterm that has
/// been recognized as undefined; strictness propagates it upward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GTerm {
    X,
    Elem { sort: String, idx: u32 },
    App { op: String, args: Vec<GTerm> },
    Undef,
}

impl GTerm {
    pub fn elem(sort: impl Into<String>, idx: u32) -> Self {
        GTerm::Elem {
            sort: sort.into(),
            idx,
        }
    }

    pub fn app(op: impl Into<String>, args: impl IntoIterator<Item = GTerm>) -> Self {
        GTerm::App {
            op: op.into(),
            args: args.into_iter().collect(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            GTerm::App { args, .. } => 1 + args.iter().map(GTerm::size).sum::<usize>(),
            _ => 1,
        }
    }
}

/// A rewrite rule on terms: inspect a subterm, either decline or produce
/// its replacement.
pub struct TermRule<'a> {
    pub name: &'static str,
    #[allow(clippy::type_complexity)]
    pub apply: Box<dyn Fn(&GTerm) -> Option<GTerm> + 'a>,
}

/// Redex selection order.  Innermost rewrites arguments before the nodes
/// above them, scanning children left to right; outermost tries each node
/// before descending, scanning children right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermStrategy {
    LeftmostInnermost,
    RightmostOutermost,
}

pub const TERM_STRATEGIES: [TermStrategy; 2] = [
    TermStrategy::LeftmostInnermost,
    TermStrategy::RightmostOutermost,
];

/// One applied rewrite step: which rule fired, the path of argument indices
/// from the root to the redex, and the whole term afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStep {
    pub rule: &'static str,
    pub path: Vec<usize>,
    pub result: GTerm,
}

fn find_redex(
    t: &GTerm,
    rules: &[TermRule],
    strategy: TermStrategy,
    path: &mut Vec<usize>,
) -> Option<(Vec<usize>, GTerm, &'static str)> {
    let here = |path: &Vec<usize>| {
        for rule in rules {
            if let Some(next) = (rule.apply)(t) {
                return Some((path.clone(), next, rule.name));
            }
        }
        None
    };
    let children = |path: &mut Vec<usize>, indices: Vec<usize>| {
        if let GTerm::App { args, .. } = t {
            for i in indices {
                path.push(i);
                let found = find_redex(&args[i], rules, strategy, path);
                path.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    };
    let arg_count = match t {
        GTerm::App { args, .. } => args.len(),
        _ => 0,
    };
    match strategy {
        TermStrategy::LeftmostInnermost => {
            children(path, (0..arg_count).collect()).or_else(|| here(path))
        }
        TermStrategy::RightmostOutermost => {
            here(path).or_else(|| children(path, (0..arg_count).rev().collect()))
        }
    }
}

fn replace_at(t: &mut GTerm, path: &[usize], replacement: GTerm) {
    match path.split_first() {
        None => *t = replacement,
        Some((&i, rest)) => match t {
            GTerm::App { args, .. } => replace_at(&mut args[i], rest, replacement),
            _ => unreachable!("redex path leads through an application"),
        },
    }
}

/// Rewrite to a fixpoint: repeatedly find the strategy's next redex and
/// apply the first rule that fires there.
pub fn reduce_term(
    t: &GTerm,
    rules: &[TermRule],
    strategy: TermStrategy,
) -> (GTerm, Vec<TermStep>) {
    let mut term = t.clone();
    let mut steps = Vec::new();
    while let Some((path, replacement, rule)) = find_redex(&term, rules, strategy, &mut Vec::new())
    {
        replace_at(&mut term, &path, replacement);
        steps.push(TermStep {
            rule,
            path,
            result: term.clone(),
        });
    }
    (term, steps)
}

/// Propagate undefinedness: an application with an undefined argument is
/// undefined.  Listed first in every rule set.
pub fn undef_strict_rule() -> TermRule<'static> {
    TermRule {
        name: "undef-strict",
        apply: Box::new(|t| match t {
            GTerm::App { args, .. } if args.contains(&GTerm::Undef) => Some(GTerm::Undef),
            _ => None,
        }),
    }
}

/// Render a term using the model's element labels; `labels` maps a sort
/// and carrier index to a label.
pub fn render_gterm(t: &GTerm, x_name: &str, labels: &dyn Fn(&str, u32) -> String) -> String {
    match t {
        GTerm::X => x_name.to_string(),
        GTerm::Elem { sort, idx } => labels(sort, *idx),
        GTerm::Undef => "undefined".to_string(),
        GTerm::App { op, args } => {
            if args.is_empty() {
                op.clone()
            } else {
                let rendered: Vec<String> = args
                    .iter()
                    .map(|a| render_gterm(a, x_name, labels))
                    .collect();
                format!("{op}({})", rendered.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TermInputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Sort(#[from] TermError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("element label `{label}` of sort {sort} collides with an existing symbol")]
    LabelCollision { label: String, sort: String },
    #[error("indeterminate `{0}` collides with an existing symbol")]
    IndeterminateCollision(String),
    #[error("term has sort {got}, expected {expected}")]
    WrongSort { expected: String, got: String },
}

/// Extend a theory's signature with one nullary constant per carrier
/// element, so that concrete terms over a model can be parsed.  Collisions
/// between labels and existing symbols (or the indeterminate's name) are
/// rejected rather than silently shadowed.
pub fn extended_signature(
    theory: &Theory,
    carriers: &BTreeMap<String, Vec<String>>,
    x_name: &str,
) -> Result<Signature, TermInputError> {
    let mut sig = theory.signature.clone();
    for sort in &theory.signature.sorts {
        let empty = Vec::new();
        let labels = carriers.get(sort).unwrap_or(&empty);
        for label in labels {
            if label == x_name {
                return Err(TermInputError::LabelCollision {
                    label: label.clone(),
                    sort: sort.clone(),
                });
            }
            sig.add_op(OpDecl::new(label.clone(), Vec::<String>::new(), sort))
                .map_err(|_| TermInputError::LabelCollision {
                    label: label.clone(),
                    sort: sort.clone(),
                })?;
        }
    }
    if sig.op(x_name).is_some() {
        return Err(TermInputError::IndeterminateCollision(x_name.to_string()));
    }
    Ok(sig)
}

/// Parse a source term over the extended signature, sort-check it, and
/// convert it to the rewrite representation: the indeterminate becomes `X`
/// and element constants become `Elem`.
pub fn parse_gterm(
    theory: &Theory,
    carriers: &BTreeMap<String, Vec<String>>,
    x_name: &str,
    x_sort: &str,
    src: &str,
) -> Result<GTerm, TermInputError> {
    let sig = extended_signature(theory, carriers, x_name)?;
    let ctx = Context::new([(x_name, x_sort)]);
    let term = parse_term_in_context(&sig, &ctx, src)?;
    infer_sort(&sig, &term, &ctx)?;
    Ok(convert(theory, carriers, &sig, &term))
}

fn convert(
    theory: &Theory,
    carriers: &BTreeMap<String, Vec<String>>,
    sig: &Signature,
    term: &Term,
) -> GTerm {
    match term {
        Term::Var { .. } => GTerm::X,
        Term::App { op, args } => {
            if args.is_empty() && theory.signature.op(op).is_none() {
                let sort = sig.op(op).expect("term was checked").result_sort.clone();
                let idx = carriers[&sort]
                    .iter()
                    .position(|l| l == op)
                    .expect("constant was added from this carrier");
                return GTerm::Elem {
                    sort,
                    idx: idx as u32,
                };
            }
            GTerm::App {
                op: op.clone(),
                args: args
                    .iter()
                    .map(|a| convert(theory, carriers, sig, a))
                    .collect(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::{builtin_theory, BuiltinTheoryKind};

    fn monoid_carriers() -> BTreeMap<String, Vec<String>> {
        BTreeMap::from([(
            "M".to_string(),
            vec!["e".to_string(), "a".to_string(), "b".to_string()],
        )])
    }

    // mul(e, mul(x, b)) with constants resolved against the carrier.  `e`
    // is a theory constant, `b` a model element.
    #[test]
    fn parses_and_converts_mixed_constants() {
        let theory = builtin_theory(BuiltinTheoryKind::Monoid);
        let mut carriers = monoid_carriers();
        // `e` collides with the theory's own constant; keep model labels
        // disjoint from the signature for this test.
        carriers.get_mut("M").unwrap()[0] = "u".to_string();
        let t = parse_gterm(&theory, &carriers, "x", "M", "mul(u, mul(x, b))").unwrap();
        assert_eq!(
            t,
            GTerm::app(
                "mul",
                [
                    GTerm::elem("M", 0),
                    GTerm::app("mul", [GTerm::X, GTerm::elem("M", 2)])
                ]
            )
        );
    }

    #[test]
    fn rejects_label_colliding_with_operation() {
        let theory = builtin_theory(BuiltinTheoryKind::Monoid);
        let carriers = monoid_carriers();
        let err = extended_signature(&theory, &carriers, "x").unwrap_err();
        assert!(matches!(err, TermInputError::LabelCollision { ref label, .. } if label == "e"));
    }

    #[test]
    fn rejects_indeterminate_colliding_with_label() {
        let theory = builtin_theory(BuiltinTheoryKind::Monoid);
        let mut carriers = monoid_carriers();
        carriers.get_mut("M").unwrap()[0] = "x".to_string();
        assert!(matches!(
            extended_signature(&theory, &carriers, "x"),
            Err(TermInputError::LabelCollision { .. })
        ));
    }

    #[test]
    fn sort_errors_surface_from_parsing() {
        let theory = builtin_theory(BuiltinTheoryKind::StrMonCat);
        let carriers = BTreeMap::from([
            ("O".to_string(), vec!["p".to_string()]),
            ("A".to_string(), vec!["f".to_string()]),
        ]);
        // id expects an object, f is an arrow.
        let err = parse_gterm(&theory, &carriers, "x_O", "O", "id(f)").unwrap_err();
        assert!(matches!(err, TermInputError::Sort(_)), "{err}");
    }

    #[test]
    fn strategies_visit_redexes_in_opposite_order() {
        // A toy rule set over a free binary symbol: rewrite `p(a, a)` to
        // `a`.  On p(p(a,a), p(a,a)) the innermost-left strategy reduces
        // the left argument first, the outermost-right strategy starts at
        // the right argument.
        let a = || GTerm::elem("S", 0);
        let pair = |l, r| GTerm::app("p", [l, r]);
        let t = pair(pair(a(), a()), pair(a(), a()));
        let rules = [TermRule {
            name: "collapse",
            apply: Box::new(|t| match t {
                GTerm::App { op, args } if op == "p" && args[0] == args[1] => {
                    match &args[0] {
                        GTerm::Elem { .. } => Some(args[0].clone()),
                        _ => None,
                    }
                }
                _ => None,
            }),
        }];
        let (nf_a, steps_a) = reduce_term(&t, &rules, TermStrategy::LeftmostInnermost);
        let (nf_b, steps_b) = reduce_term(&t, &rules, TermStrategy::RightmostOutermost);
        assert_eq!(nf_a, a());
        assert_eq!(nf_a, nf_b);
        assert_eq!(steps_a[0].path, vec![0]);
        assert_eq!(steps_b[0].path, vec![1]);
    }

    #[test]
    fn undefinedness_is_strict() {
        let rules = [undef_strict_rule()];
        let t = GTerm::app("mul", [GTerm::X, GTerm::Undef]);
        let (nf, steps) = reduce_term(&t, &rules, TermStrategy::LeftmostInnermost);
        assert_eq!(nf, GTerm::Undef);
        assert_eq!(steps.len(), 1);
    }

    #[test]
    fn rendering_uses_labels_and_indeterminate_name() {
        let t = GTerm::app("mul", [GTerm::X, GTerm::elem("M", 1)]);
        let s = render_gterm(&t, "x", &|_, i| format!("g{i}"));
        assert_eq!(s, "mul(x, g1)");
    }
}
