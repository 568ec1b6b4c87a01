use crate::theories::FiniteMonoid;

/// A letter of a flat word over a monoid carrier: an element (by index), an
/// occurrence of the indeterminate, or its formal inverse (group words
/// only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Elem(u32),
    X,
    XInv,
}

/// Scan order used when picking the next redex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordStrategy {
    Leftmost,
    Rightmost,
}

pub const WORD_STRATEGIES: [WordStrategy; 2] = [WordStrategy::Leftmost, WordStrategy::Rightmost];

/// A rewrite rule on flat words.  At position `i` the rule either declines
/// or replaces the window `word[i..i + consumed]` by the replacement.
pub struct WordRule<'a> {
    pub name: &'static str,
    #[allow(clippy::type_complexity)]
    pub apply: Box<dyn Fn(&[Letter], usize) -> Option<(usize, Vec<Letter>)> + 'a>,
}

/// One applied rewrite step, kept for trace output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordStep {
    pub rule: &'static str,
    pub position: usize,
    pub result: Vec<Letter>,
}

/// Rewrite `letters` to a fixpoint.  Each step scans positions in strategy
/// order and applies the first rule that fires (rules are tried in the
/// order given), so the two strategies generally take different paths; the
/// rule sets in this module are confluent and land on the same fixpoint.
pub fn reduce_letters(
    letters: &[Letter],
    rules: &[WordRule],
    strategy: WordStrategy,
) -> (Vec<Letter>, Vec<WordStep>) {
    let mut word = letters.to_vec();
    let mut steps = Vec::new();
    'rewrite: loop {
        let n = word.len();
        let positions: Box<dyn Iterator<Item = usize>> = match strategy {
            WordStrategy::Leftmost => Box::new(0..n),
            WordStrategy::Rightmost => Box::new((0..n).rev()),
        };
        for i in positions {
            for rule in rules {
                if let Some((consumed, replacement)) = (rule.apply)(&word, i) {
                    word.splice(i..i + consumed, replacement);
                    steps.push(WordStep {
                        rule: rule.name,
                        position: i,
                        result: word.clone(),
                    });
                    continue 'rewrite;
                }
            }
        }
        return (word, steps);
    }
}

/// Merge two adjacent element letters by multiplying them.
pub fn merge_rule(m: &FiniteMonoid) -> WordRule<'_> {
    WordRule {
        name: "merge",
        apply: Box::new(move |w, i| match (w.get(i), w.get(i + 1)) {
            (Some(&Letter::Elem(a)), Some(&Letter::Elem(b))) => {
                Some((2, vec![Letter::Elem(m.mul(a, b))]))
            }
            _ => None,
        }),
    }
}

/// Drop a unit element letter.
pub fn unit_drop_rule(m: &FiniteMonoid) -> WordRule<'_> {
    WordRule {
        name: "unit-drop",
        apply: Box::new(move |w, i| match w.get(i) {
            Some(&Letter::Elem(a)) if a == m.unit => Some((1, vec![])),
            _ => None,
        }),
    }
}

/// Cancel an adjacent indeterminate/inverse pair (group words).
pub fn cancel_rule() -> WordRule<'static> {
    WordRule {
        name: "cancel",
        apply: Box::new(|w, i| match (w.get(i), w.get(i + 1)) {
            (Some(&Letter::X), Some(&Letter::XInv))
            | (Some(&Letter::XInv), Some(&Letter::X)) => Some((2, vec![])),
            _ => None,
        }),
    }
}

/// Move an element letter left past an indeterminate, so that commutative
/// words collect their coefficient in front.
pub fn x_swap_rule() -> WordRule<'static> {
    WordRule {
        name: "x-swap",
        apply: Box::new(|w, i| match (w.get(i), w.get(i + 1)) {
            (Some(&Letter::X), Some(&Letter::Elem(a))) => {
                Some((2, vec![Letter::Elem(a), Letter::X]))
            }
            _ => None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::fixtures;

    use Letter::{Elem, X, XInv};

    #[test]
    fn merge_then_drop_reaches_the_same_word_from_both_ends() {
        let m = fixtures::cyclic_monoid(4);
        let rules = [merge_rule(&m), unit_drop_rule(&m)];
        // a . a3 . x . a2 -> (a a3 = e drops) -> x a2
        let input = [Elem(1), Elem(3), X, Elem(2)];
        let (left, _) = reduce_letters(&input, &rules, WordStrategy::Leftmost);
        let (right, _) = reduce_letters(&input, &rules, WordStrategy::Rightmost);
        assert_eq!(left, vec![X, Elem(2)]);
        assert_eq!(left, right);
    }

    #[test]
    fn cancellation_can_cascade_through_merges() {
        let g = fixtures::cyclic_group(3);
        let rules = [merge_rule(&g.monoid), unit_drop_rule(&g.monoid), cancel_rule()];
        // x . a . a2 . x^-1: the elements merge to e, drop, then x x^-1 cancels.
        let input = [X, Elem(1), Elem(2), XInv];
        for strategy in WORD_STRATEGIES {
            let (word, steps) = reduce_letters(&input, &rules, strategy);
            assert!(word.is_empty(), "{strategy:?}: {word:?}");
            assert_eq!(steps.last().unwrap().rule, "cancel");
        }
    }

    #[test]
    fn swaps_collect_elements_in_front() {
        let m = fixtures::cyclic_monoid(2);
        let rules = [merge_rule(&m), unit_drop_rule(&m), x_swap_rule()];
        let input = [X, Elem(1), X, Elem(1)];
        for strategy in WORD_STRATEGIES {
            let (word, _) = reduce_letters(&input, &rules, strategy);
            assert_eq!(word, vec![X, X], "{strategy:?}");
        }
    }

    #[test]
    fn trace_records_rule_names_and_positions() {
        let m = fixtures::cyclic_monoid(2);
        let rules = [merge_rule(&m), unit_drop_rule(&m)];
        let (_, steps) = reduce_letters(&[Elem(1), Elem(1)], &rules, WordStrategy::Leftmost);
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].rule, "merge");
        assert_eq!(steps[0].position, 0);
        assert_eq!(steps[1].rule, "unit-drop");
    }
}
