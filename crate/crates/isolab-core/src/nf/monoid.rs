use thiserror::Error;

use crate::theories::{FiniteGroup, FiniteMonoid};

use super::word::{
    cancel_rule, merge_rule, reduce_letters, unit_drop_rule, x_swap_rule, Letter, WordStep,
    WordStrategy,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown element `{token}`; known elements are {known}")]
    UnknownElement { token: String, known: String },
    #[error("element label `{0}` is indistinguishable from the indeterminate token")]
    AmbiguousLabel(String),
    #[error("empty word")]
    Empty,
    #[error("`{0}` is only meaningful in group words")]
    InverseNotSupported(String),
}

pub const X_TOKEN: &str = "x";
pub const X_INV_TOKEN: &str = "x^-1";

/// Parse a whitespace-separated word like `x a x a2` against a monoid's
/// element labels.  `x` is the indeterminate and (when `allow_inverse` is
/// set) `x^-1` its formal inverse; every other token must be an element
/// label.
pub fn parse_word(
    m: &FiniteMonoid,
    src: &str,
    allow_inverse: bool,
) -> Result<Vec<Letter>, WordParseError> {
    for reserved in [X_TOKEN, X_INV_TOKEN] {
        if m.index_of(reserved).is_some() {
            return Err(WordParseError::AmbiguousLabel(reserved.to_string()));
        }
    }
    let mut letters = Vec::new();
    for token in src.split_whitespace() {
        if token == X_TOKEN {
            letters.push(Letter::X);
        } else if token == X_INV_TOKEN {
            if !allow_inverse {
                return Err(WordParseError::InverseNotSupported(token.to_string()));
            }
            letters.push(Letter::XInv);
        } else if let Some(i) = m.index_of(token) {
            letters.push(Letter::Elem(i));
        } else {
            return Err(WordParseError::UnknownElement {
                token: token.to_string(),
                known: m.labels.join(", "),
            });
        }
    }
    if letters.is_empty() {
        return Err(WordParseError::Empty);
    }
    Ok(letters)
}

/// An element of the one-indeterminate extension of a finite monoid, in
/// expanded-word form `m0 x m1 x ... x mn`: the maximal element blocks
/// between and around the indeterminate occurrences, each collapsed to a
/// single monoid element (possibly the unit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidNf {
    pub segments: Vec<u32>,
}

impl MonoidNf {
    pub fn constant(a: u32) -> Self {
        MonoidNf { segments: vec![a] }
    }

    /// The bare indeterminate, which is the substitution unit.
    pub fn x(m: &FiniteMonoid) -> Self {
        MonoidNf {
            segments: vec![m.unit, m.unit],
        }
    }

    pub fn x_count(&self) -> usize {
        self.segments.len() - 1
    }

    /// Letters when written out as an alternating word.
    pub fn letter_len(&self) -> usize {
        2 * self.segments.len() - 1
    }

    /// Word concatenation (the extension's multiplication): the two words
    /// meet at a seam whose elements multiply.
    pub fn concat(&self, other: &Self, m: &FiniteMonoid) -> Self {
        let mut segments = self.segments.clone();
        let seam = segments.pop().expect("a word has at least one segment");
        segments.push(m.mul(seam, other.segments[0]));
        segments.extend_from_slice(&other.segments[1..]);
        MonoidNf { segments }
    }

    /// Substitute `t` for every occurrence of the indeterminate.
    pub fn subst(&self, t: &Self, m: &FiniteMonoid) -> Self {
        let mut out = MonoidNf::constant(self.segments[0]);
        for &seg in &self.segments[1..] {
            out = out.concat(t, m).concat(&MonoidNf::constant(seg), m);
        }
        out
    }

    /// Assemble a merged letter sequence, inserting units between adjacent
    /// indeterminates and at the boundaries.
    pub fn assemble(letters: &[Letter], m: &FiniteMonoid) -> Self {
        let mut segments = Vec::new();
        let mut current = m.unit;
        for &l in letters {
            match l {
                Letter::Elem(a) => current = m.mul(current, a),
                Letter::X => {
                    segments.push(current);
                    current = m.unit;
                }
                Letter::XInv => panic!("inverse letters do not occur in monoid words"),
            }
        }
        segments.push(current);
        MonoidNf { segments }
    }

    /// Reduce arbitrary letters and assemble the normal form.
    pub fn reduce(
        letters: &[Letter],
        m: &FiniteMonoid,
        strategy: WordStrategy,
    ) -> (Self, Vec<WordStep>) {
        let rules = [merge_rule(m), unit_drop_rule(m)];
        let (word, steps) = reduce_letters(letters, &rules, strategy);
        (Self::assemble(&word, m), steps)
    }

    pub fn display(&self, m: &FiniteMonoid) -> String {
        self.segments
            .iter()
            .map(|&s| m.label(s))
            .collect::<Vec<_>>()
            .join(&format!(" {X_TOKEN} "))
    }
}

/// Normal form over a commutative monoid: a coefficient times a power of
/// the indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CmonoidNf {
    pub coeff: u32,
    pub exp: u32,
}

impl CmonoidNf {
    pub fn constant(a: u32) -> Self {
        CmonoidNf { coeff: a, exp: 0 }
    }

    pub fn x(m: &FiniteMonoid) -> Self {
        CmonoidNf {
            coeff: m.unit,
            exp: 1,
        }
    }

    pub fn x_count(&self) -> usize {
        self.exp as usize
    }

    pub fn mul(&self, other: &Self, m: &FiniteMonoid) -> Self {
        CmonoidNf {
            coeff: m.mul(self.coeff, other.coeff),
            exp: self.exp + other.exp,
        }
    }

    /// Substitute: `(c x^k)[d x^j] = c d^k x^(k j)`.
    pub fn subst(&self, t: &Self, m: &FiniteMonoid) -> Self {
        let mut coeff = self.coeff;
        for _ in 0..self.exp {
            coeff = m.mul(coeff, t.coeff);
        }
        CmonoidNf {
            coeff,
            exp: self.exp * t.exp,
        }
    }

    pub fn reduce(
        letters: &[Letter],
        m: &FiniteMonoid,
        strategy: WordStrategy,
    ) -> (Self, Vec<WordStep>) {
        let rules = [merge_rule(m), unit_drop_rule(m), x_swap_rule()];
        let (word, steps) = reduce_letters(letters, &rules, strategy);
        let mut nf = CmonoidNf::constant(m.unit);
        for &l in &word {
            match l {
                Letter::Elem(a) => nf.coeff = m.mul(nf.coeff, a),
                Letter::X => nf.exp += 1,
                Letter::XInv => panic!("inverse letters do not occur in commutative words"),
            }
        }
        (nf, steps)
    }

    pub fn display(&self, m: &FiniteMonoid) -> String {
        let xs = vec![X_TOKEN; self.exp as usize];
        if self.exp == 0 {
            m.label(self.coeff).to_string()
        } else if self.coeff == m.unit {
            xs.join(" ")
        } else {
            format!("{} {}", m.label(self.coeff), xs.join(" "))
        }
    }
}

/// Reduced word over a group with a formal indeterminate and its inverse:
/// no unit letters, no adjacent element letters, no adjacent cancelling
/// indeterminate pairs.  The empty word is the unit constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupNf {
    pub letters: Vec<Letter>,
}

impl GroupNf {
    pub fn constant(a: u32, g: &FiniteGroup) -> Self {
        let letters = if a == g.unit() {
            Vec::new()
        } else {
            vec![Letter::Elem(a)]
        };
        GroupNf { letters }
    }

    pub fn x() -> Self {
        GroupNf {
            letters: vec![Letter::X],
        }
    }

    pub fn x_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| matches!(l, Letter::X | Letter::XInv))
            .count()
    }

    pub fn letter_len(&self) -> usize {
        self.letters.len()
    }

    pub fn reduce(
        letters: &[Letter],
        g: &FiniteGroup,
        strategy: WordStrategy,
    ) -> (Self, Vec<WordStep>) {
        let rules = [
            merge_rule(&g.monoid),
            unit_drop_rule(&g.monoid),
            cancel_rule(),
        ];
        let (word, steps) = reduce_letters(letters, &rules, strategy);
        (GroupNf { letters: word }, steps)
    }

    /// Group inverse: reverse the word and invert each letter.  The inverse
    /// of a reduced word is already reduced.
    pub fn inverse(&self, g: &FiniteGroup) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&l| match l {
                Letter::Elem(a) => Letter::Elem(g.inverse(a)),
                Letter::X => Letter::XInv,
                Letter::XInv => Letter::X,
            })
            .collect();
        GroupNf { letters }
    }

    pub fn concat(&self, other: &Self, g: &FiniteGroup) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::reduce(&letters, g, WordStrategy::Leftmost).0
    }

    /// Substitute `t` for the indeterminate (and its inverse for the
    /// inverse indeterminate).
    pub fn subst(&self, t: &Self, g: &FiniteGroup) -> Self {
        let t_inv = t.inverse(g);
        let mut letters = Vec::new();
        for &l in &self.letters {
            match l {
                Letter::Elem(_) => letters.push(l),
                Letter::X => letters.extend_from_slice(&t.letters),
                Letter::XInv => letters.extend_from_slice(&t_inv.letters),
            }
        }
        Self::reduce(&letters, g, WordStrategy::Leftmost).0
    }

    pub fn display(&self, g: &FiniteGroup) -> String {
        if self.letters.is_empty() {
            return g.monoid.label(g.unit()).to_string();
        }
        self.letters
            .iter()
            .map(|&l| match l {
                Letter::Elem(a) => g.monoid.label(a).to_string(),
                Letter::X => X_TOKEN.to_string(),
                Letter::XInv => X_INV_TOKEN.to_string(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
