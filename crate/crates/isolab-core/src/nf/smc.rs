//! Words over a strict monoidal category with one adjoined indeterminate.
//!
//! Adjoining an object indeterminate or an arrow indeterminate both yield
//! models whose elements are alternating words: object words interleave
//! objects of the base category with object separators, arrow words
//! interleave arrows with arrow separators.  All structure — endpoints,
//! identities, composition — acts letterwise, and the tensor concatenates
//! words while multiplying the two letters that meet at the seam.

use crate::theories::FiniteStrictMonCat;

use super::term::{reduce_term, undef_strict_rule, GTerm, TermRule, TermStep, TermStrategy};

pub const OP_DOM: &str = "dom";
pub const OP_COD: &str = "cod";
pub const OP_ID: &str = "id";
pub const OP_COMP: &str = "comp";
pub const OP_TENSOR_O: &str = "tensor_O";
pub const OP_TENSOR_A: &str = "tensor_A";
pub const OP_UNIT_O: &str = "I_O";
pub const OP_UNIT_A: &str = "I_A";
pub const SORT_O: &str = "O";
pub const SORT_A: &str = "A";

/// Which indeterminate was adjoined: an object `x_O` or an arrow `x_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum World {
    ObjectWorld,
    ArrowWorld,
}

pub const WORLDS: [World; 2] = [World::ObjectWorld, World::ArrowWorld];

impl World {
    pub fn x_name(self) -> &'static str {
        match self {
            World::ObjectWorld => "x_O",
            World::ArrowWorld => "x_A",
        }
    }

    /// The sort of the adjoined indeterminate.
    pub fn x_sort(self) -> &'static str {
        match self {
            World::ObjectWorld => SORT_O,
            World::ArrowWorld => SORT_A,
        }
    }
}

/// Separator letters of object words.  `X` is the object indeterminate
/// itself; `DomX` and `CodX` are the endpoints of the arrow indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OSep {
    X,
    DomX,
    CodX,
}

/// Separator letters of arrow words: the identities on the three object
/// separators, and the arrow indeterminate itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ASep {
    IdX,
    XA,
    IdDomX,
    IdCodX,
}

impl OSep {
    pub fn world(self) -> World {
        match self {
            OSep::X => World::ObjectWorld,
            OSep::DomX | OSep::CodX => World::ArrowWorld,
        }
    }

    /// Identity separator on this object separator.
    pub fn id(self) -> ASep {
        match self {
            OSep::X => ASep::IdX,
            OSep::DomX => ASep::IdDomX,
            OSep::CodX => ASep::IdCodX,
        }
    }
}

impl ASep {
    pub fn world(self) -> World {
        match self {
            ASep::IdX => World::ObjectWorld,
            ASep::XA | ASep::IdDomX | ASep::IdCodX => World::ArrowWorld,
        }
    }

    pub fn dom(self) -> OSep {
        match self {
            ASep::IdX => OSep::X,
            ASep::XA | ASep::IdDomX => OSep::DomX,
            ASep::IdCodX => OSep::CodX,
        }
    }

    pub fn cod(self) -> OSep {
        match self {
            ASep::IdX => OSep::X,
            ASep::XA | ASep::IdCodX => OSep::CodX,
            ASep::IdDomX => OSep::DomX,
        }
    }

    pub fn is_identity(self) -> bool {
        self != ASep::XA
    }
}

/// Separator composition, defined exactly when the endpoint separators
/// match; an identity separator defers to the other factor.
pub fn comp_sep(g: ASep, f: ASep) -> Option<ASep> {
    if g.dom() != f.cod() {
        return None;
    }
    Some(if g.is_identity() { f } else { g })
}

/// An object word: a head object followed by separator/object pairs.
/// Ground words (no separators) are the objects of the base category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObWord {
    pub head: u32,
    pub tail: Vec<(OSep, u32)>,
}

/// An arrow word: a head arrow followed by separator/arrow pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArWord {
    pub head: u32,
    pub tail: Vec<(ASep, u32)>,
}

impl ObWord {
    pub fn constant(a: u32) -> Self {
        ObWord {
            head: a,
            tail: Vec::new(),
        }
    }

    /// The bare object indeterminate, padded with unit letters.
    pub fn x_word(c: &FiniteStrictMonCat) -> Self {
        ObWord {
            head: c.ob_unit,
            tail: vec![(OSep::X, c.ob_unit)],
        }
    }

    pub fn sep_count(&self) -> usize {
        self.tail.len()
    }

    /// The world the separators belong to; ground words belong to both.
    pub fn world(&self) -> Option<World> {
        self.tail.first().map(|&(s, _)| s.world())
    }

    fn last_letter_mut(&mut self) -> &mut u32 {
        match self.tail.last_mut() {
            Some((_, a)) => a,
            None => &mut self.head,
        }
    }

    pub fn tensor(&self, other: &Self, c: &FiniteStrictMonCat) -> Self {
        debug_assert!(
            self.world().is_none() || other.world().is_none() || self.world() == other.world(),
            "tensor factors live in the same world"
        );
        let mut out = self.clone();
        let last = out.last_letter_mut();
        *last = c.ob_ten(*last, other.head);
        out.tail.extend_from_slice(&other.tail);
        out
    }

    pub fn id(&self, c: &FiniteStrictMonCat) -> ArWord {
        ArWord {
            head: c.cat.id[self.head as usize],
            tail: self
                .tail
                .iter()
                .map(|&(s, a)| (s.id(), c.cat.id[a as usize]))
                .collect(),
        }
    }

    /// Substitute `t` for the object indeterminate; `self` must be a word
    /// over `x_O`.
    pub fn subst(&self, t: &ObWord, c: &FiniteStrictMonCat) -> ObWord {
        let mut out = ObWord::constant(self.head);
        for &(sep, a) in &self.tail {
            assert_eq!(sep, OSep::X, "substitution target is an x_O word");
            out = out.tensor(t, c);
            out = out.tensor(&ObWord::constant(a), c);
        }
        out
    }

    pub fn display(&self, c: &FiniteStrictMonCat) -> String {
        let mut parts = Vec::new();
        if self.head != c.ob_unit || self.tail.is_empty() {
            parts.push(c.cat.objects[self.head as usize].clone());
        }
        for &(sep, a) in &self.tail {
            parts.push(
                match sep {
                    OSep::X => "x_O",
                    OSep::DomX => "dom(x_A)",
                    OSep::CodX => "cod(x_A)",
                }
                .to_string(),
            );
            if a != c.ob_unit {
                parts.push(c.cat.objects[a as usize].clone());
            }
        }
        parts.join("⊗")
    }
}

impl ArWord {
    pub fn constant(f: u32) -> Self {
        ArWord {
            head: f,
            tail: Vec::new(),
        }
    }

    /// The bare arrow indeterminate, padded with unit letters.
    pub fn x_word(c: &FiniteStrictMonCat) -> Self {
        ArWord {
            head: c.arr_unit,
            tail: vec![(ASep::XA, c.arr_unit)],
        }
    }

    /// The identity on the object indeterminate, the arrow-sort generator
    /// of the object world.
    pub fn id_x_word(c: &FiniteStrictMonCat) -> Self {
        ObWord::x_word(c).id(c)
    }

    pub fn sep_count(&self) -> usize {
        self.tail.len()
    }

    pub fn world(&self) -> Option<World> {
        self.tail.first().map(|&(s, _)| s.world())
    }

    fn last_letter_mut(&mut self) -> &mut u32 {
        match self.tail.last_mut() {
            Some((_, f)) => f,
            None => &mut self.head,
        }
    }

    pub fn tensor(&self, other: &Self, c: &FiniteStrictMonCat) -> Self {
        debug_assert!(
            self.world().is_none() || other.world().is_none() || self.world() == other.world(),
            "tensor factors live in the same world"
        );
        let mut out = self.clone();
        let last = out.last_letter_mut();
        *last = c.arr_ten(*last, other.head);
        out.tail.extend_from_slice(&other.tail);
        out
    }

    pub fn dom(&self, c: &FiniteStrictMonCat) -> ObWord {
        ObWord {
            head: c.cat.dom[self.head as usize],
            tail: self
                .tail
                .iter()
                .map(|&(s, f)| (s.dom(), c.cat.dom[f as usize]))
                .collect(),
        }
    }

    pub fn cod(&self, c: &FiniteStrictMonCat) -> ObWord {
        ObWord {
            head: c.cat.cod[self.head as usize],
            tail: self
                .tail
                .iter()
                .map(|&(s, f)| (s.cod(), c.cat.cod[f as usize]))
                .collect(),
        }
    }

    /// Letterwise composition `self . other` (apply `other` first), defined
    /// exactly when the words have matching shape and every letter pair is
    /// composable — which is precisely when `dom(self) = cod(other)`.
    pub fn comp(&self, other: &Self, c: &FiniteStrictMonCat) -> Option<Self> {
        if self.tail.len() != other.tail.len() {
            return None;
        }
        let head = c.cat.comp(self.head, other.head)?;
        let mut tail = Vec::with_capacity(self.tail.len());
        for (&(gs, g), &(fs, f)) in self.tail.iter().zip(&other.tail) {
            tail.push((comp_sep(gs, fs)?, c.cat.comp(g, f)?));
        }
        Some(ArWord { head, tail })
    }

    /// Substitute `t` for the arrow indeterminate; `self` must be a word
    /// over `x_A`.  Identity separators receive the identity on the
    /// matching endpoint of `t`.
    pub fn subst(&self, t: &ArWord, c: &FiniteStrictMonCat) -> ArWord {
        let id_dom = t.dom(c).id(c);
        let id_cod = t.cod(c).id(c);
        let mut out = ArWord::constant(self.head);
        for &(sep, f) in &self.tail {
            let insert = match sep {
                ASep::XA => t,
                ASep::IdDomX => &id_dom,
                ASep::IdCodX => &id_cod,
                ASep::IdX => panic!("substitution target is an x_A word"),
            };
            out = out.tensor(insert, c);
            out = out.tensor(&ArWord::constant(f), c);
        }
        out
    }

    pub fn display(&self, c: &FiniteStrictMonCat) -> String {
        let mut parts = Vec::new();
        if self.head != c.arr_unit || self.tail.is_empty() {
            parts.push(c.cat.arrows[self.head as usize].clone());
        }
        for &(sep, f) in &self.tail {
            parts.push(
                match sep {
                    ASep::IdX => "id(x_O)",
                    ASep::XA => "x_A",
                    ASep::IdDomX => "id(dom(x_A))",
                    ASep::IdCodX => "id(cod(x_A))",
                }
                .to_string(),
            );
            if f != c.arr_unit {
                parts.push(c.cat.arrows[f as usize].clone());
            }
        }
        parts.join("⊗")
    }
}

// ---------------------------------------------------------------------------
// Reading terms as words and printing words back as terms.

fn flatten_ob(t: &GTerm, world: World, c: &FiniteStrictMonCat, out: &mut Vec<Result<u32, OSep>>) -> bool {
    match t {
        GTerm::Elem { sort, idx } if sort == SORT_O => {
            out.push(Ok(*idx));
            true
        }
        GTerm::X if world == World::ObjectWorld => {
            out.push(Err(OSep::X));
            true
        }
        GTerm::App { op, args } if op == OP_UNIT_O && args.is_empty() => {
            out.push(Ok(c.ob_unit));
            true
        }
        GTerm::App { op, args }
            if world == World::ArrowWorld
                && (op == OP_DOM || op == OP_COD)
                && args[..] == [GTerm::X] =>
        {
            out.push(Err(if op == OP_DOM { OSep::DomX } else { OSep::CodX }));
            true
        }
        GTerm::App { op, args } if op == OP_TENSOR_O => {
            flatten_ob(&args[0], world, c, out) && flatten_ob(&args[1], world, c, out)
        }
        _ => false,
    }
}

fn flatten_ar(t: &GTerm, world: World, c: &FiniteStrictMonCat, out: &mut Vec<Result<u32, ASep>>) -> bool {
    match t {
        GTerm::Elem { sort, idx } if sort == SORT_A => {
            out.push(Ok(*idx));
            true
        }
        GTerm::X if world == World::ArrowWorld => {
            out.push(Err(ASep::XA));
            true
        }
        GTerm::App { op, args } if op == OP_UNIT_A && args.is_empty() => {
            out.push(Ok(c.arr_unit));
            true
        }
        GTerm::App { op, args } if op == OP_ID => {
            let sep = match &args[0] {
                GTerm::X if world == World::ObjectWorld => Some(ASep::IdX),
                GTerm::App { op, args }
                    if world == World::ArrowWorld && args[..] == [GTerm::X] =>
                {
                    match op.as_str() {
                        OP_DOM => Some(ASep::IdDomX),
                        OP_COD => Some(ASep::IdCodX),
                        _ => None,
                    }
                }
                _ => None,
            };
            match sep {
                Some(s) => {
                    out.push(Err(s));
                    true
                }
                None => false,
            }
        }
        GTerm::App { op, args } if op == OP_TENSOR_A => {
            flatten_ar(&args[0], world, c, out) && flatten_ar(&args[1], world, c, out)
        }
        _ => false,
    }
}

/// Read a term as an object word of the given world: a tensor tree over
/// object letters, the object separators, and unit constants.
pub fn parse_ob_word(t: &GTerm, world: World, c: &FiniteStrictMonCat) -> Option<ObWord> {
    let mut items = Vec::new();
    if !flatten_ob(t, world, c, &mut items) {
        return None;
    }
    let mut w = ObWord::constant(c.ob_unit);
    for item in items {
        match item {
            Ok(a) => {
                let last = w.last_letter_mut();
                *last = c.ob_ten(*last, a);
            }
            Err(sep) => w.tail.push((sep, c.ob_unit)),
        }
    }
    Some(w)
}

/// Read a term as an arrow word of the given world.
pub fn parse_ar_word(t: &GTerm, world: World, c: &FiniteStrictMonCat) -> Option<ArWord> {
    let mut items = Vec::new();
    if !flatten_ar(t, world, c, &mut items) {
        return None;
    }
    let mut w = ArWord::constant(c.arr_unit);
    for item in items {
        match item {
            Ok(f) => {
                let last = w.last_letter_mut();
                *last = c.arr_ten(*last, f);
            }
            Err(sep) => w.tail.push((sep, c.arr_unit)),
        }
    }
    Some(w)
}

fn osep_term(s: OSep) -> GTerm {
    match s {
        OSep::X => GTerm::X,
        OSep::DomX => GTerm::app(OP_DOM, [GTerm::X]),
        OSep::CodX => GTerm::app(OP_COD, [GTerm::X]),
    }
}

fn asep_term(s: ASep) -> GTerm {
    match s {
        ASep::XA => GTerm::X,
        ASep::IdX => GTerm::app(OP_ID, [GTerm::X]),
        ASep::IdDomX => GTerm::app(OP_ID, [GTerm::app(OP_DOM, [GTerm::X])]),
        ASep::IdCodX => GTerm::app(OP_ID, [GTerm::app(OP_COD, [GTerm::X])]),
    }
}

fn spine(op: &str, items: Vec<GTerm>, unit: GTerm) -> GTerm {
    items
        .into_iter()
        .rev()
        .reduce(|acc, item| GTerm::app(op, [item, acc]))
        .unwrap_or(unit)
}

/// The canonical term of an object word: a right-nested tensor spine with
/// unit letters omitted.
pub fn ob_word_term(w: &ObWord, c: &FiniteStrictMonCat) -> GTerm {
    let mut items = Vec::new();
    if w.head != c.ob_unit {
        items.push(GTerm::elem(SORT_O, w.head));
    }
    for &(sep, a) in &w.tail {
        items.push(osep_term(sep));
        if a != c.ob_unit {
            items.push(GTerm::elem(SORT_O, a));
        }
    }
    spine(OP_TENSOR_O, items, GTerm::elem(SORT_O, c.ob_unit))
}

/// The canonical term of an arrow word.
pub fn ar_word_term(w: &ArWord, c: &FiniteStrictMonCat) -> GTerm {
    let mut items = Vec::new();
    if w.head != c.arr_unit {
        items.push(GTerm::elem(SORT_A, w.head));
    }
    for &(sep, f) in &w.tail {
        items.push(asep_term(sep));
        if f != c.arr_unit {
            items.push(GTerm::elem(SORT_A, f));
        }
    }
    spine(OP_TENSOR_A, items, GTerm::elem(SORT_A, c.arr_unit))
}

// ---------------------------------------------------------------------------
// The rewrite system.

fn unit_constant_rule(c: &FiniteStrictMonCat) -> TermRule<'_> {
    TermRule {
        name: "unit-constant",
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == OP_UNIT_O && args.is_empty() => {
                Some(GTerm::elem(SORT_O, c.ob_unit))
            }
            GTerm::App { op, args } if op == OP_UNIT_A && args.is_empty() => {
                Some(GTerm::elem(SORT_A, c.arr_unit))
            }
            _ => None,
        }),
    }
}

fn assoc_right_rule() -> TermRule<'static> {
    TermRule {
        name: "tensor-assoc",
        apply: Box::new(|t| match t {
            GTerm::App { op, args } if op == OP_TENSOR_O || op == OP_TENSOR_A => match &args[0] {
                GTerm::App {
                    op: inner,
                    args: inner_args,
                } if inner == op => Some(GTerm::app(
                    op.clone(),
                    [
                        inner_args[0].clone(),
                        GTerm::app(op.clone(), [inner_args[1].clone(), args[1].clone()]),
                    ],
                )),
                _ => None,
            },
            _ => None,
        }),
    }
}

fn fold_rule(c: &FiniteStrictMonCat) -> TermRule<'_> {
    let ten = move |op: &str, a: u32, b: u32| -> GTerm {
        if op == OP_TENSOR_O {
            GTerm::elem(SORT_O, c.ob_ten(a, b))
        } else {
            GTerm::elem(SORT_A, c.arr_ten(a, b))
        }
    };
    TermRule {
        name: "tensor-fold",
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == OP_TENSOR_O || op == OP_TENSOR_A => {
                match (&args[0], &args[1]) {
                    (GTerm::Elem { idx: a, .. }, GTerm::Elem { idx: b, .. }) => {
                        Some(ten(op, *a, *b))
                    }
                    (
                        GTerm::Elem { idx: a, .. },
                        GTerm::App {
                            op: inner,
                            args: inner_args,
                        },
                    ) if inner == op => match &inner_args[0] {
                        GTerm::Elem { idx: b, .. } => Some(GTerm::app(
                            op.clone(),
                            [ten(op, *a, *b), inner_args[1].clone()],
                        )),
                        _ => None,
                    },
                    _ => None,
                }
            }
            _ => None,
        }),
    }
}

fn tensor_unit_drop_rule(c: &FiniteStrictMonCat) -> TermRule<'_> {
    let is_unit = move |op: &str, t: &GTerm| -> bool {
        match t {
            GTerm::Elem { idx, .. } => {
                (op == OP_TENSOR_O && *idx == c.ob_unit)
                    || (op == OP_TENSOR_A && *idx == c.arr_unit)
            }
            _ => false,
        }
    };
    TermRule {
        name: "tensor-unit",
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == OP_TENSOR_O || op == OP_TENSOR_A => {
                if is_unit(op, &args[0]) {
                    Some(args[1].clone())
                } else if is_unit(op, &args[1]) {
                    Some(args[0].clone())
                } else {
                    None
                }
            }
            _ => None,
        }),
    }
}

fn endpoint_rule(c: &FiniteStrictMonCat, world: World, which: &'static str) -> TermRule<'_> {
    TermRule {
        name: if which == OP_DOM { "dom-word" } else { "cod-word" },
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == which => {
                let w = parse_ar_word(&args[0], world, c)?;
                let o = if which == OP_DOM { w.dom(c) } else { w.cod(c) };
                let next = ob_word_term(&o, c);
                (next != *t).then_some(next)
            }
            _ => None,
        }),
    }
}

fn id_rule(c: &FiniteStrictMonCat, world: World) -> TermRule<'_> {
    TermRule {
        name: "id-word",
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == OP_ID => {
                let w = parse_ob_word(&args[0], world, c)?;
                let next = ar_word_term(&w.id(c), c);
                (next != *t).then_some(next)
            }
            _ => None,
        }),
    }
}

fn comp_rule(c: &FiniteStrictMonCat, world: World) -> TermRule<'_> {
    TermRule {
        name: "comp-word",
        apply: Box::new(move |t| match t {
            GTerm::App { op, args } if op == OP_COMP => {
                let g = parse_ar_word(&args[0], world, c)?;
                let f = parse_ar_word(&args[1], world, c)?;
                Some(match g.comp(&f, c) {
                    Some(w) => ar_word_term(&w, c),
                    None => GTerm::Undef,
                })
            }
            _ => None,
        }),
    }
}

/// The rewrite system for terms over a strict monoidal category with the
/// given indeterminate adjoined.  Composites whose endpoint words disagree
/// rewrite to `Undef`.
pub fn smc_rules(c: &FiniteStrictMonCat, world: World) -> Vec<TermRule<'_>> {
    vec![
        undef_strict_rule(),
        unit_constant_rule(c),
        assoc_right_rule(),
        fold_rule(c),
        tensor_unit_drop_rule(c),
        endpoint_rule(c, world, OP_DOM),
        endpoint_rule(c, world, OP_COD),
        id_rule(c, world),
        comp_rule(c, world),
    ]
}

/// Fully reduce a term.  The normal form is either `Undef` or the
/// canonical term of a word; use [`parse_ob_word`]/[`parse_ar_word`] to
/// read the word back.
pub fn reduce_smc_term(
    t: &GTerm,
    c: &FiniteStrictMonCat,
    world: World,
    strategy: TermStrategy,
) -> (GTerm, Vec<TermStep>) {
    reduce_term(t, &smc_rules(c, world), strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::term::TERM_STRATEGIES;
    use crate::theories::fixtures;

    // The full separator composition table: composable exactly when the
    // endpoint separators match.
    #[test]
    fn separator_composition_table() {
        use ASep::*;
        let expected = [
            (IdX, IdX, Some(IdX)),
            (XA, IdDomX, Some(XA)),
            (IdCodX, XA, Some(XA)),
            (IdDomX, IdDomX, Some(IdDomX)),
            (IdCodX, IdCodX, Some(IdCodX)),
            (XA, XA, None),
            (IdDomX, XA, None),
            (XA, IdCodX, None),
            (IdDomX, IdCodX, None),
            (IdCodX, IdDomX, None),
        ];
        for (g, f, want) in expected {
            assert_eq!(comp_sep(g, f), want, "{g:?} . {f:?}");
        }
        // The object-world separator never meets the arrow-world ones.
        for s in [XA, IdDomX, IdCodX] {
            assert_eq!(comp_sep(IdX, s), None);
            assert_eq!(comp_sep(s, IdX), None);
        }
    }

    #[test]
    fn tensor_merges_at_the_seam_only() {
        let c = fixtures::signed_z2();
        // (u ⊗ x_O) ⊗ (u ⊗ x_O ⊗ u): the seam multiplies I.u = u.
        let left = ObWord {
            head: 1,
            tail: vec![(OSep::X, c.ob_unit)],
        };
        let right = ObWord {
            head: 1,
            tail: vec![(OSep::X, 1)],
        };
        let prod = left.tensor(&right, &c);
        assert_eq!(
            prod,
            ObWord {
                head: 1,
                tail: vec![(OSep::X, 1), (OSep::X, 1)],
            }
        );
        assert_eq!(prod.display(&c), "u⊗x_O⊗u⊗x_O⊗u");
    }

    #[test]
    fn endpoints_and_identities_act_letterwise() {
        let c = fixtures::signed_z2();
        // neg_e ⊗ x_A ⊗ neg_u  (arrows 1 and 3).
        let w = ArWord {
            head: 1,
            tail: vec![(ASep::XA, 3)],
        };
        assert_eq!(
            w.dom(&c),
            ObWord {
                head: 0,
                tail: vec![(OSep::DomX, 1)],
            }
        );
        assert_eq!(
            w.cod(&c),
            ObWord {
                head: 0,
                tail: vec![(OSep::CodX, 1)],
            }
        );
        let o = ObWord {
            head: 1,
            tail: vec![(OSep::X, 0)],
        };
        assert_eq!(
            o.id(&c),
            ArWord {
                head: 2,
                tail: vec![(ASep::IdX, 0)],
            }
        );
    }

    #[test]
    fn word_composition_requires_matching_shape() {
        let c = fixtures::signed_z2();
        let x = ArWord::x_word(&c);
        let id_dom = x.dom(&c).id(&c);
        let id_cod = x.cod(&c).id(&c);
        // x . id(dom x) = x and id(cod x) . x = x.
        assert_eq!(x.comp(&id_dom, &c), Some(x.clone()));
        assert_eq!(id_cod.comp(&x, &c), Some(x.clone()));
        // x . x is undefined, as is anything with mismatched shape.
        assert_eq!(x.comp(&x, &c), None);
        assert_eq!(x.comp(&ArWord::constant(0), &c), None);
    }

    #[test]
    fn substitution_inserts_matching_identities() {
        let c = fixtures::signed_z2();
        // s = id(u) ⊗ x_A ⊗ id(u); substitute the generic arrow itself.
        let s = ArWord {
            head: 3, // id(u) is pos_u = arrow 2? id of object u has positive sign.
            tail: vec![(ASep::XA, 3)],
        };
        // Correction: id(u) = arrow_at(u, +) = 2.
        let s = ArWord {
            head: 2,
            tail: vec![(ASep::XA, 2)],
        };
        let x = ArWord::x_word(&c);
        assert_eq!(
            s.subst(&x, &c),
            ArWord {
                head: 2,
                tail: vec![(ASep::XA, 2)],
            }
        );
        // Substituting a ground arrow turns the separator into that arrow.
        let got = s.subst(&ArWord::constant(1), &c);
        // id(u) ⊗ neg_e ⊗ id(u) = neg_u tensored by u on... letterwise:
        // the single letter is pos_u . neg_e . pos_u = neg_u? No: tensor,
        // not composition: pos_u ⊗ neg_e ⊗ pos_u = arrow on u+e+u = e with
        // sign + ^ - ^ + = -, i.e. neg_e = arrow 1.
        assert_eq!(got, ArWord::constant(1));
        assert!(s
            .subst(&ArWord::constant(1), &c)
            .world()
            .is_none());
    }

    #[test]
    fn terms_round_trip_through_words() {
        let c = fixtures::signed_z2();
        for world in WORLDS {
            let x = ArWord::x_word(&c);
            let w = match world {
                World::ObjectWorld => ArWord::id_x_word(&c),
                World::ArrowWorld => x,
            };
            let t = ar_word_term(&w, &c);
            assert_eq!(parse_ar_word(&t, world, &c), Some(w));
        }
        let o = ObWord {
            head: 1,
            tail: vec![(OSep::X, 0), (OSep::X, 1)],
        };
        let t = ob_word_term(&o, &c);
        assert_eq!(parse_ob_word(&t, World::ObjectWorld, &c), Some(o));
    }

    #[test]
    fn composing_with_identity_separators_reduces_to_the_indeterminate() {
        let c = fixtures::signed_z2();
        let t = GTerm::app(
            OP_COMP,
            [
                GTerm::X,
                GTerm::app(OP_ID, [GTerm::app(OP_DOM, [GTerm::X])]),
            ],
        );
        for strategy in TERM_STRATEGIES {
            let (nf, steps) = reduce_smc_term(&t, &c, World::ArrowWorld, strategy);
            assert_eq!(nf, GTerm::X, "{strategy:?}");
            assert!(!steps.is_empty());
        }
    }

    #[test]
    fn self_composition_of_the_arrow_indeterminate_is_undefined() {
        let c = fixtures::signed_z2();
        let t = GTerm::app(OP_COMP, [GTerm::X, GTerm::X]);
        for strategy in TERM_STRATEGIES {
            let (nf, _) = reduce_smc_term(&t, &c, World::ArrowWorld, strategy);
            assert_eq!(nf, GTerm::Undef, "{strategy:?}");
        }
    }

    #[test]
    fn undefined_composites_propagate_through_enclosing_terms() {
        let c = fixtures::signed_z2();
        let bad = GTerm::app(OP_COMP, [GTerm::X, GTerm::X]);
        let t = GTerm::app(OP_TENSOR_A, [GTerm::elem(SORT_A, 0), bad]);
        for strategy in TERM_STRATEGIES {
            let (nf, _) = reduce_smc_term(&t, &c, World::ArrowWorld, strategy);
            assert_eq!(nf, GTerm::Undef, "{strategy:?}");
        }
    }

    #[test]
    fn ground_tensor_folds_and_units_vanish() {
        let c = fixtures::signed_z2();
        // (u ⊗ u) ⊗ x_O: the ground letters merge to the unit and drop.
        let t = GTerm::app(
            OP_TENSOR_O,
            [
                GTerm::app(
                    OP_TENSOR_O,
                    [GTerm::elem(SORT_O, 1), GTerm::elem(SORT_O, 1)],
                ),
                GTerm::X,
            ],
        );
        for strategy in TERM_STRATEGIES {
            let (nf, _) = reduce_smc_term(&t, &c, World::ObjectWorld, strategy);
            assert_eq!(nf, GTerm::X, "{strategy:?}");
        }
    }

    #[test]
    fn stuck_letters_do_not_loop() {
        let c = fixtures::signed_z2();
        for (t, world) in [
            (GTerm::app(OP_DOM, [GTerm::X]), World::ArrowWorld),
            (GTerm::app(OP_ID, [GTerm::X]), World::ObjectWorld),
            (
                GTerm::app(OP_ID, [GTerm::app(OP_COD, [GTerm::X])]),
                World::ArrowWorld,
            ),
        ] {
            for strategy in TERM_STRATEGIES {
                let (nf, steps) = reduce_smc_term(&t, &c, world, strategy);
                assert_eq!(nf, t, "{strategy:?}");
                assert!(steps.is_empty(), "{strategy:?}: {steps:?}");
            }
        }
    }

    #[test]
    fn identity_of_endpoint_word_unfolds_to_identity_letters() {
        let c = fixtures::signed_z2();
        // id(dom(u ⊗ x_A)) = id(u ⊗ dom(x_A)) = id(u) ⊗ id(dom(x_A)).
        let t = GTerm::app(
            OP_ID,
            [GTerm::app(
                OP_DOM,
                [GTerm::app(OP_TENSOR_A, [GTerm::elem(SORT_A, 2), GTerm::X])],
            )],
        );
        let want = GTerm::app(
            OP_TENSOR_A,
            [
                GTerm::elem(SORT_A, 2),
                GTerm::app(OP_ID, [GTerm::app(OP_DOM, [GTerm::X])]),
            ],
        );
        for strategy in TERM_STRATEGIES {
            let (nf, _) = reduce_smc_term(&t, &c, World::ArrowWorld, strategy);
            assert_eq!(nf, want, "{strategy:?}");
        }
    }

    #[test]
    fn displays_use_tensor_notation() {
        let c = fixtures::signed_z2();
        let s_o = ObWord {
            head: 1,
            tail: vec![(OSep::X, 1)],
        };
        assert_eq!(s_o.display(&c), "u⊗x_O⊗u");
        let s_a = ArWord {
            head: 2,
            tail: vec![(ASep::XA, 2)],
        };
        assert_eq!(s_a.display(&c), "pos_u⊗x_A⊗pos_u");
        assert_eq!(ObWord::x_word(&c).display(&c), "x_O");
        assert_eq!(ObWord::constant(c.ob_unit).display(&c), "e");
    }
}
