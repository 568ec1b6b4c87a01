//! Built-in theories.  Each fixed theory is kept as embedded `.thy` source
//! and parsed through the front end, so the surface syntax is exercised on
//! every construction; the diagram theory is generated from a finite shape
//! category.

use super::category::FiniteCategory;
use crate::phl::{parse_theory, Theory};

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

const CMONOID_SRC: &str = "\
theory cmonoid

sort M;

op e : -> M;
op mul : M M -> M;

axiom forall x:M, y:M [] |- def(mul(x, y));
axiom [] |- def(e);
axiom forall x:M, y:M, z:M [] |- mul(mul(x, y), z) = mul(x, mul(y, z));
axiom forall x:M [] |- mul(e, x) = x;
axiom forall x:M [] |- mul(x, e) = x;
axiom forall x:M, y:M [] |- mul(x, y) = mul(y, x);
";

const GROUP_SRC: &str = "\
theory group

sort M;

op e : -> M;
op mul : M M -> M;
op inv : M -> M;

axiom forall x:M, y:M [] |- def(mul(x, y));
axiom [] |- def(e);
axiom forall x:M, y:M, z:M [] |- mul(mul(x, y), z) = mul(x, mul(y, z));
axiom forall x:M [] |- mul(e, x) = x;
axiom forall x:M [] |- mul(x, e) = x;
axiom forall x:M [] |- def(inv(x));
axiom forall x:M [] |- mul(inv(x), x) = e;
axiom forall x:M [] |- mul(x, inv(x)) = e;
";

const CATEGORY_AXIOMS: &str = "\
axiom forall f:A [] |- def(dom(f));
axiom forall f:A [] |- def(cod(f));
axiom forall o:O [] |- dom(id(o)) = o, cod(id(o)) = o;
axiom forall g:A, f:A [dom(g) = cod(f)] |- def(comp(g, f));
axiom forall g:A, f:A [def(comp(g, f))] |- dom(g) = cod(f);
axiom forall g:A, f:A [def(comp(g, f))] |- dom(comp(g, f)) = dom(f), cod(comp(g, f)) = cod(g);
axiom forall f:A [] |- comp(f, id(dom(f))) = f, comp(id(cod(f)), f) = f;
axiom forall h:A, g:A, f:A [dom(h) = cod(g), dom(g) = cod(f)] |- comp(comp(h, g), f) = comp(h, comp(g, f));
";

const MONOIDAL_AXIOMS: &str = "\
axiom forall a:O, b:O [] |- def(tensor_O(a, b));
axiom forall f:A, g:A [] |- dom(tensor_A(f, g)) = tensor_O(dom(f), dom(g)), cod(tensor_A(f, g)) = tensor_O(cod(f), cod(g));
axiom forall a:O, b:O, c:O [] |- tensor_O(tensor_O(a, b), c) = tensor_O(a, tensor_O(b, c));
axiom forall a:O [] |- tensor_O(I_O, a) = a, tensor_O(a, I_O) = a;
axiom forall f:A, g:A, h:A [] |- tensor_A(tensor_A(f, g), h) = tensor_A(f, tensor_A(g, h));
axiom forall f:A [] |- tensor_A(I_A, f) = f, tensor_A(f, I_A) = f;
axiom [] |- I_A = id(I_O);
axiom forall a:O, b:O [] |- tensor_A(id(a), id(b)) = id(tensor_O(a, b));
axiom forall f2:A, f1:A, g2:A, g1:A [dom(f2) = cod(f1), dom(g2) = cod(g1)] |- tensor_A(comp(f2, f1), comp(g2, g1)) = comp(tensor_A(f2, g2), tensor_A(f1, g1));
";

const SYMMETRY_AXIOMS: &str = "\
axiom forall a:O, b:O [] |- tensor_O(a, b) = tensor_O(b, a);
axiom forall f:A, g:A [] |- tensor_A(f, g) = tensor_A(g, f);
";

const XMOD_SRC: &str = "\
theory xmod

sort G;
sort H;

op e_g : -> G;
op mul_g : G G -> G;
op inv_g : G -> G;
op e_h : -> H;
op mul_h : H H -> H;
op inv_h : H -> H;
op bd : H -> G;
op act : G H -> H;

axiom forall p:G, q:G [] |- def(mul_g(p, q));
axiom [] |- def(e_g);
axiom forall p:G, q:G, r:G [] |- mul_g(mul_g(p, q), r) = mul_g(p, mul_g(q, r));
axiom forall p:G [] |- mul_g(e_g, p) = p;
axiom forall p:G [] |- mul_g(p, e_g) = p;
axiom forall p:G [] |- def(inv_g(p));
axiom forall p:G [] |- mul_g(inv_g(p), p) = e_g;
axiom forall p:G [] |- mul_g(p, inv_g(p)) = e_g;
axiom forall a:H, b:H [] |- def(mul_h(a, b));
axiom [] |- def(e_h);
axiom forall a:H, b:H, c:H [] |- mul_h(mul_h(a, b), c) = mul_h(a, mul_h(b, c));
axiom forall a:H [] |- mul_h(e_h, a) = a;
axiom forall a:H [] |- mul_h(a, e_h) = a;
axiom forall a:H [] |- def(inv_h(a));
axiom forall a:H [] |- mul_h(inv_h(a), a) = e_h;
axiom forall a:H [] |- mul_h(a, inv_h(a)) = e_h;
axiom forall a:H [] |- def(bd(a));
axiom forall a:H, b:H [] |- bd(mul_h(a, b)) = mul_g(bd(a), bd(b));
axiom forall p:G, a:H [] |- def(act(p, a));
axiom forall p:G, a:H, b:H [] |- act(p, mul_h(a, b)) = mul_h(act(p, a), act(p, b));
axiom forall a:H [] |- act(e_g, a) = a;
axiom forall p:G, q:G, a:H [] |- act(mul_g(p, q), a) = act(p, act(q, a));
axiom forall p:G, a:H [] |- bd(act(p, a)) = mul_g(mul_g(p, bd(a)), inv_g(p));
axiom forall a:H, b:H [] |- act(bd(a), b) = mul_h(mul_h(a, b), inv_h(a));
";

fn category_src(name: &str, extra_ops: &str, extra_axioms: &str) -> String {
    format!(
        "theory {name}\n\n\
         sort O;\n\
         sort A;\n\n\
         op dom : A -> O;\n\
         op cod : A -> O;\n\
         op id : O -> A;\n\
         op comp : A A -> A;\n\
         {extra_ops}\n\
         {CATEGORY_AXIOMS}{extra_axioms}"
    )
}

const TENSOR_OPS: &str = "\
op tensor_O : O O -> O;
op tensor_A : A A -> A;
op I_O : -> O;
op I_A : -> A;
";

fn parse_builtin(src: &str) -> Theory {
    parse_theory(src).expect("embedded theory source is valid")
}

pub fn monoid_theory() -> Theory {
    parse_builtin(MONOID_SRC)
}

pub fn cmonoid_theory() -> Theory {
    parse_builtin(CMONOID_SRC)
}

pub fn group_theory() -> Theory {
    parse_builtin(GROUP_SRC)
}

pub fn category_theory() -> Theory {
    parse_builtin(&category_src("category", "", ""))
}

pub fn strmoncat_theory() -> Theory {
    parse_builtin(&category_src("strmoncat", TENSOR_OPS, MONOIDAL_AXIOMS))
}

pub fn strsymmoncat_theory() -> Theory {
    parse_builtin(&category_src(
        "strsymmoncat",
        TENSOR_OPS,
        &format!("{MONOIDAL_AXIOMS}{SYMMETRY_AXIOMS}"),
    ))
}

pub fn xmod_theory() -> Theory {
    parse_builtin(XMOD_SRC)
}

/// The theory of set-valued diagrams on a fixed finite category `j`: one
/// sort per object, one total unary operation per arrow, with identity and
/// composition equations.
pub fn presheaf_theory(j: &FiniteCategory) -> Theory {
    let mut src = format!("theory presheaf_{}\n\n", j.name);
    for o in &j.objects {
        src.push_str(&format!("sort X_{o};\n"));
    }
    src.push('\n');
    for f in 0..j.n_arrows() {
        src.push_str(&format!(
            "op alpha_{} : X_{} -> X_{};\n",
            j.arrows[f], j.objects[j.dom[f] as usize], j.objects[j.cod[f] as usize]
        ));
    }
    src.push('\n');
    for f in 0..j.n_arrows() {
        src.push_str(&format!(
            "axiom forall x:X_{} [] |- def(alpha_{}(x));\n",
            j.objects[j.dom[f] as usize], j.arrows[f]
        ));
    }
    for (o, &i) in j.id.iter().enumerate() {
        src.push_str(&format!(
            "axiom forall x:X_{} [] |- alpha_{}(x) = x;\n",
            j.objects[o], j.arrows[i as usize]
        ));
    }
    for (g, f) in j.composable_pairs() {
        let gf = j.comp(g, f).expect("endpoints match");
        src.push_str(&format!(
            "axiom forall x:X_{} [] |- alpha_{}(alpha_{}(x)) = alpha_{}(x);\n",
            j.objects[j.dom[f as usize] as usize],
            j.arrows[g as usize],
            j.arrows[f as usize],
            j.arrows[gf as usize]
        ));
    }
    parse_theory(&src).expect("generated theory source is valid")
}

/// The built-in theories with a fixed signature.  Diagram theories are
/// parameterized by a shape and built with [`presheaf_theory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinTheoryKind {
    Monoid,
    CMonoid,
    Group,
    Category,
    StrMonCat,
    StrSymMonCat,
    XMod,
}

impl BuiltinTheoryKind {
    pub const ALL: [BuiltinTheoryKind; 7] = [
        BuiltinTheoryKind::Monoid,
        BuiltinTheoryKind::CMonoid,
        BuiltinTheoryKind::Group,
        BuiltinTheoryKind::Category,
        BuiltinTheoryKind::StrMonCat,
        BuiltinTheoryKind::StrSymMonCat,
        BuiltinTheoryKind::XMod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinTheoryKind::Monoid => "monoid",
            BuiltinTheoryKind::CMonoid => "cmonoid",
            BuiltinTheoryKind::Group => "group",
            BuiltinTheoryKind::Category => "category",
            BuiltinTheoryKind::StrMonCat => "strmoncat",
            BuiltinTheoryKind::StrSymMonCat => "strsymmoncat",
            BuiltinTheoryKind::XMod => "xmod",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl std::fmt::Display for BuiltinTheoryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub fn builtin_theory(kind: BuiltinTheoryKind) -> Theory {
    match kind {
        BuiltinTheoryKind::Monoid => monoid_theory(),
        BuiltinTheoryKind::CMonoid => cmonoid_theory(),
        BuiltinTheoryKind::Group => group_theory(),
        BuiltinTheoryKind::Category => category_theory(),
        BuiltinTheoryKind::StrMonCat => strmoncat_theory(),
        BuiltinTheoryKind::StrSymMonCat => strsymmoncat_theory(),
        BuiltinTheoryKind::XMod => xmod_theory(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::fixtures;

    #[test]
    fn builtin_theories_have_expected_shapes() {
        let cases = [
            (BuiltinTheoryKind::Monoid, 1, 2, 5),
            (BuiltinTheoryKind::CMonoid, 1, 2, 6),
            (BuiltinTheoryKind::Group, 1, 3, 8),
            (BuiltinTheoryKind::Category, 2, 4, 8),
            (BuiltinTheoryKind::StrMonCat, 2, 8, 17),
            (BuiltinTheoryKind::StrSymMonCat, 2, 8, 19),
            (BuiltinTheoryKind::XMod, 2, 8, 24),
        ];
        for (kind, sorts, ops, axioms) in cases {
            let t = builtin_theory(kind);
            assert_eq!(t.name, kind.name());
            assert_eq!(t.signature.sorts.len(), sorts, "{kind}");
            assert_eq!(t.signature.ops.len(), ops, "{kind}");
            assert_eq!(t.axioms.len(), axioms, "{kind}");
        }
    }

    #[test]
    fn diagram_theory_axiom_count_is_arrows_objects_pairs() {
        let j = fixtures::bz(2);
        let t = presheaf_theory(&j);
        assert_eq!(t.name, "presheaf_bz2");
        assert_eq!(t.signature.sorts, vec!["X_o"]);
        assert_eq!(t.signature.ops.len(), 2);
        // 2 totality + 1 identity + 4 composition.
        assert_eq!(t.axioms.len(), 7);

        let chain = fixtures::chain_poset3();
        let t = presheaf_theory(&chain);
        assert_eq!(t.axioms.len(), 6 + 3 + 10);
    }

    #[test]
    fn kind_round_trips_through_names() {
        for k in BuiltinTheoryKind::ALL {
            assert_eq!(BuiltinTheoryKind::from_name(k.name()), Some(k));
        }
        assert_eq!(BuiltinTheoryKind::from_name("nope"), None);
    }

    #[test]
    fn emitted_sources_round_trip_through_the_parser() {
        for k in BuiltinTheoryKind::ALL {
            let t = builtin_theory(k);
            let re = crate::phl::parse_theory(&t.to_string()).unwrap();
            assert_eq!(re, t, "{k}");
        }
    }
}
