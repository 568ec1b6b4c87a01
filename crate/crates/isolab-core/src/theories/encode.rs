//! Bridges between the concrete finite structures and generic partial
//! structures over the built-in theories, in both directions.  Encoding is
//! used to ship models in the text format and to run the generic axiom
//! checker against structures the validating constructors accept; decoding
//! turns a checked model file back into the concrete form the engines use.

use std::collections::BTreeMap;

use thiserror::Error;

use super::build::{builtin_theory, presheaf_theory, BuiltinTheoryKind};
use super::category::FiniteCategory;
use super::monoid::{AlgebraError, FiniteGroup, FiniteMonoid};
use super::presheaf::Presheaf;
use super::smc::FiniteStrictMonCat;
use super::xmod::CrossedModule;
use crate::models::{ModelError, PartialStructure};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("theory `{0}` is not supported by this codec")]
    UnsupportedKind(String),
    #[error("element `{0}` has no inverse, so a group table cannot be built")]
    MissingInverse(String),
    #[error("cannot decode `{name}`: {message}")]
    Shape { name: String, message: String },
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn shape(name: &str, message: impl Into<String>) -> EncodeError {
    EncodeError::Shape {
        name: name.to_string(),
        message: message.into(),
    }
}

type Table = BTreeMap<Vec<String>, String>;

fn index_in(name: &str, carrier: &[String], label: &str) -> Result<u32, EncodeError> {
    carrier
        .iter()
        .position(|l| l == label)
        .map(|i| i as u32)
        .ok_or_else(|| shape(name, format!("unknown element `{label}`")))
}

fn const_of(ps: &PartialStructure, name: &str, op: &str, carrier: &[String]) -> Result<u32, EncodeError> {
    let v = ps
        .op_value(op, &[])
        .ok_or_else(|| shape(name, format!("`{op}` is undefined")))?;
    index_in(name, carrier, v)
}

fn unary_total(
    ps: &PartialStructure,
    name: &str,
    op: &str,
    args: &[String],
    out: &[String],
) -> Result<Vec<u32>, EncodeError> {
    args.iter()
        .map(|a| {
            let v = ps
                .op_value(op, std::slice::from_ref(a))
                .ok_or_else(|| shape(name, format!("`{op}` is undefined at `{a}`")))?;
            index_in(name, out, v)
        })
        .collect()
}

fn binary_total(
    ps: &PartialStructure,
    name: &str,
    op: &str,
    lhs: &[String],
    rhs: &[String],
    out: &[String],
) -> Result<Vec<Vec<u32>>, EncodeError> {
    lhs.iter()
        .map(|a| {
            rhs.iter()
                .map(|b| {
                    let v = ps
                        .op_value(op, &[a.clone(), b.clone()])
                        .ok_or_else(|| {
                            shape(name, format!("`{op}` is undefined at (`{a}`, `{b}`)"))
                        })?;
                    index_in(name, out, v)
                })
                .collect()
        })
        .collect()
}

/// Encode a monoid against the `monoid` or `cmonoid` theory, or against
/// `group` (deriving the inverse table, which must exist).
pub fn encode_monoid(
    m: &FiniteMonoid,
    kind: BuiltinTheoryKind,
) -> Result<PartialStructure, EncodeError> {
    let mut tables: BTreeMap<String, Table> = BTreeMap::new();
    tables.insert(
        "e".into(),
        [(vec![], m.label(m.unit).to_string())].into(),
    );
    let mut mul = Table::new();
    for a in 0..m.order() as u32 {
        for b in 0..m.order() as u32 {
            mul.insert(
                vec![m.label(a).to_string(), m.label(b).to_string()],
                m.label(m.mul(a, b)).to_string(),
            );
        }
    }
    tables.insert("mul".into(), mul);
    match kind {
        BuiltinTheoryKind::Monoid | BuiltinTheoryKind::CMonoid => {}
        BuiltinTheoryKind::Group => {
            let mut inv = Table::new();
            for a in 0..m.order() as u32 {
                let b = m
                    .inverse(a)
                    .ok_or_else(|| EncodeError::MissingInverse(m.label(a).to_string()))?;
                inv.insert(vec![m.label(a).to_string()], m.label(b).to_string());
            }
            tables.insert("inv".into(), inv);
        }
        other => return Err(EncodeError::UnsupportedKind(other.name().into())),
    }
    let carriers = [("M".to_string(), m.labels.clone())].into();
    Ok(PartialStructure::new(builtin_theory(kind), carriers, tables)?)
}

/// Read a monoid back from a structure with `e`/`mul` tables (the `inv`
/// table of a group model, if present, is ignored; inverses are recomputed
/// on demand).
pub fn decode_monoid(ps: &PartialStructure, name: &str) -> Result<FiniteMonoid, EncodeError> {
    let carrier = ps.carrier("M").to_vec();
    let unit = const_of(ps, name, "e", &carrier)?;
    let table = binary_total(ps, name, "mul", &carrier, &carrier, &carrier)?;
    Ok(FiniteMonoid::new(name, carrier, unit, table)?)
}

pub fn encode_category(c: &FiniteCategory) -> Result<PartialStructure, EncodeError> {
    encode_category_part(c, builtin_theory(BuiltinTheoryKind::Category), BTreeMap::new())
}

fn encode_category_part(
    c: &FiniteCategory,
    theory: crate::phl::Theory,
    mut tables: BTreeMap<String, Table>,
) -> Result<PartialStructure, EncodeError> {
    let ob = |o: u32| c.objects[o as usize].clone();
    let ar = |f: u32| c.arrows[f as usize].clone();
    tables.insert(
        "dom".into(),
        (0..c.n_arrows() as u32)
            .map(|f| (vec![ar(f)], ob(c.dom[f as usize])))
            .collect(),
    );
    tables.insert(
        "cod".into(),
        (0..c.n_arrows() as u32)
            .map(|f| (vec![ar(f)], ob(c.cod[f as usize])))
            .collect(),
    );
    tables.insert(
        "id".into(),
        (0..c.n_objects() as u32)
            .map(|o| (vec![ob(o)], ar(c.id[o as usize])))
            .collect(),
    );
    let mut comp = Table::new();
    for g in 0..c.n_arrows() as u32 {
        for f in 0..c.n_arrows() as u32 {
            if let Some(h) = c.comp(g, f) {
                comp.insert(vec![ar(g), ar(f)], ar(h));
            }
        }
    }
    tables.insert("comp".into(), comp);
    let carriers = [
        ("O".to_string(), c.objects.clone()),
        ("A".to_string(), c.arrows.clone()),
    ]
    .into();
    Ok(PartialStructure::new(theory, carriers, tables)?)
}

fn decode_category_part(ps: &PartialStructure, name: &str) -> Result<FiniteCategory, EncodeError> {
    let objects = ps.carrier("O").to_vec();
    let arrows = ps.carrier("A").to_vec();
    let dom = unary_total(ps, name, "dom", &arrows, &objects)?;
    let cod = unary_total(ps, name, "cod", &arrows, &objects)?;
    let id = unary_total(ps, name, "id", &objects, &arrows)?;
    let mut comp = vec![vec![None; arrows.len()]; arrows.len()];
    for (g, gl) in arrows.iter().enumerate() {
        for (f, fl) in arrows.iter().enumerate() {
            if let Some(v) = ps.op_value("comp", &[gl.clone(), fl.clone()]) {
                comp[g][f] = Some(index_in(name, &arrows, v)?);
            }
        }
    }
    Ok(FiniteCategory::new(name, objects, arrows, dom, cod, id, comp)?)
}

pub fn decode_category(ps: &PartialStructure, name: &str) -> Result<FiniteCategory, EncodeError> {
    decode_category_part(ps, name)
}

/// Encode against `strmoncat`, or `strsymmoncat` for a strictly
/// commutative tensor.
pub fn encode_smc(
    s: &FiniteStrictMonCat,
    kind: BuiltinTheoryKind,
) -> Result<PartialStructure, EncodeError> {
    match kind {
        BuiltinTheoryKind::StrMonCat => {}
        BuiltinTheoryKind::StrSymMonCat => {}
        other => return Err(EncodeError::UnsupportedKind(other.name().into())),
    }
    let c = &s.cat;
    let ob = |o: u32| c.objects[o as usize].clone();
    let ar = |f: u32| c.arrows[f as usize].clone();
    let mut tables: BTreeMap<String, Table> = BTreeMap::new();
    tables.insert("I_O".into(), [(vec![], ob(s.ob_unit))].into());
    tables.insert("I_A".into(), [(vec![], ar(s.arr_unit))].into());
    let mut ten_o = Table::new();
    for a in 0..c.n_objects() as u32 {
        for b in 0..c.n_objects() as u32 {
            ten_o.insert(vec![ob(a), ob(b)], ob(s.ob_ten(a, b)));
        }
    }
    tables.insert("tensor_O".into(), ten_o);
    let mut ten_a = Table::new();
    for f in 0..c.n_arrows() as u32 {
        for g in 0..c.n_arrows() as u32 {
            ten_a.insert(vec![ar(f), ar(g)], ar(s.arr_ten(f, g)));
        }
    }
    tables.insert("tensor_A".into(), ten_a);
    encode_category_part(c, builtin_theory(kind), tables)
}

pub fn decode_smc(ps: &PartialStructure, name: &str) -> Result<FiniteStrictMonCat, EncodeError> {
    let cat = decode_category_part(ps, name)?;
    let objects = ps.carrier("O").to_vec();
    let arrows = ps.carrier("A").to_vec();
    let ob_unit = const_of(ps, name, "I_O", &objects)?;
    let arr_unit = const_of(ps, name, "I_A", &arrows)?;
    let ob_tensor = binary_total(ps, name, "tensor_O", &objects, &objects, &objects)?;
    let arr_tensor = binary_total(ps, name, "tensor_A", &arrows, &arrows, &arrows)?;
    Ok(FiniteStrictMonCat::new(cat, ob_unit, arr_unit, ob_tensor, arr_tensor)?)
}

pub fn encode_presheaf(p: &Presheaf) -> Result<PartialStructure, EncodeError> {
    let j = &p.shape;
    let carriers: BTreeMap<String, Vec<String>> = (0..j.n_objects())
        .map(|o| (format!("X_{}", j.objects[o]), p.carriers[o].clone()))
        .collect();
    let mut tables: BTreeMap<String, Table> = BTreeMap::new();
    for f in 0..j.n_arrows() as u32 {
        let d = j.dom[f as usize] as usize;
        let c = j.cod[f as usize] as usize;
        let table = (0..p.carriers[d].len() as u32)
            .map(|x| {
                (
                    vec![p.carriers[d][x as usize].clone()],
                    p.carriers[c][p.apply(f, x) as usize].clone(),
                )
            })
            .collect();
        tables.insert(format!("alpha_{}", j.arrows[f as usize]), table);
    }
    Ok(PartialStructure::new(presheaf_theory(j), carriers, tables)?)
}

pub fn decode_presheaf(
    ps: &PartialStructure,
    shape: &FiniteCategory,
    name: &str,
) -> Result<Presheaf, EncodeError> {
    let carriers: Vec<Vec<String>> = shape
        .objects
        .iter()
        .map(|o| ps.carrier(&format!("X_{o}")).to_vec())
        .collect();
    let maps = (0..shape.n_arrows())
        .map(|f| {
            unary_total(
                ps,
                name,
                &format!("alpha_{}", shape.arrows[f]),
                &carriers[shape.dom[f] as usize],
                &carriers[shape.cod[f] as usize],
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Presheaf::new(name, shape.clone(), carriers, maps)?)
}

pub fn encode_xmod(x: &CrossedModule) -> Result<PartialStructure, EncodeError> {
    let gl = |p: u32| x.g.monoid.label(p).to_string();
    let hl = |a: u32| x.h.monoid.label(a).to_string();
    let ng = x.g.order() as u32;
    let nh = x.h.order() as u32;
    let mut tables: BTreeMap<String, Table> = BTreeMap::new();
    tables.insert("e_g".into(), [(vec![], gl(x.g.unit()))].into());
    tables.insert("e_h".into(), [(vec![], hl(x.h.unit()))].into());
    tables.insert(
        "mul_g".into(),
        (0..ng)
            .flat_map(|p| (0..ng).map(move |q| (p, q)))
            .map(|(p, q)| (vec![gl(p), gl(q)], gl(x.g.mul(p, q))))
            .collect(),
    );
    tables.insert(
        "mul_h".into(),
        (0..nh)
            .flat_map(|a| (0..nh).map(move |b| (a, b)))
            .map(|(a, b)| (vec![hl(a), hl(b)], hl(x.h.mul(a, b))))
            .collect(),
    );
    tables.insert(
        "inv_g".into(),
        (0..ng).map(|p| (vec![gl(p)], gl(x.g.inverse(p)))).collect(),
    );
    tables.insert(
        "inv_h".into(),
        (0..nh).map(|a| (vec![hl(a)], hl(x.h.inverse(a)))).collect(),
    );
    tables.insert(
        "bd".into(),
        (0..nh).map(|a| (vec![hl(a)], gl(x.bd(a)))).collect(),
    );
    tables.insert(
        "act".into(),
        (0..ng)
            .flat_map(|p| (0..nh).map(move |a| (p, a)))
            .map(|(p, a)| (vec![gl(p), hl(a)], hl(x.act(p, a))))
            .collect(),
    );
    let carriers = [
        ("G".to_string(), x.g.monoid.labels.clone()),
        ("H".to_string(), x.h.monoid.labels.clone()),
    ]
    .into();
    Ok(PartialStructure::new(
        builtin_theory(BuiltinTheoryKind::XMod),
        carriers,
        tables,
    )?)
}

pub fn decode_xmod(ps: &PartialStructure, name: &str) -> Result<CrossedModule, EncodeError> {
    let gc = ps.carrier("G").to_vec();
    let hc = ps.carrier("H").to_vec();
    let g_unit = const_of(ps, name, "e_g", &gc)?;
    let h_unit = const_of(ps, name, "e_h", &hc)?;
    let g_mul = binary_total(ps, name, "mul_g", &gc, &gc, &gc)?;
    let h_mul = binary_total(ps, name, "mul_h", &hc, &hc, &hc)?;
    let g = FiniteGroup::from_monoid(FiniteMonoid::new(
        format!("{name}_g"),
        gc.clone(),
        g_unit,
        g_mul,
    )?)?;
    let h = FiniteGroup::from_monoid(FiniteMonoid::new(
        format!("{name}_h"),
        hc.clone(),
        h_unit,
        h_mul,
    )?)?;
    let boundary = unary_total(ps, name, "bd", &hc, &gc)?;
    let action = gc
        .iter()
        .map(|p| {
            hc.iter()
                .map(|a| {
                    let v = ps
                        .op_value("act", &[p.clone(), a.clone()])
                        .ok_or_else(|| shape(name, format!("`act` is undefined at (`{p}`, `{a}`)")))?;
                    index_in(name, &hc, v)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CrossedModule::new(name, g, h, boundary, action)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::check_model;
    use crate::theories::fixtures;

    #[test]
    fn encoded_fixtures_satisfy_their_theories() {
        let mut encoded = vec![
            encode_monoid(&fixtures::z3_with_zero(), BuiltinTheoryKind::Monoid).unwrap(),
            encode_monoid(&fixtures::klein_four(), BuiltinTheoryKind::CMonoid).unwrap(),
            encode_monoid(&fixtures::cyclic_monoid(4), BuiltinTheoryKind::Group).unwrap(),
            encode_category(&fixtures::chain_poset3()).unwrap(),
            encode_smc(&fixtures::signed_z2(), BuiltinTheoryKind::StrSymMonCat).unwrap(),
            encode_smc(&fixtures::flagged_z2(), BuiltinTheoryKind::StrMonCat).unwrap(),
            encode_xmod(&fixtures::xmod_z2_z4()).unwrap(),
        ];
        for j in fixtures::presheaf_shapes() {
            for p in fixtures::presheaf_models(&j) {
                encoded.push(encode_presheaf(&p).unwrap());
            }
        }
        for ps in encoded {
            let report = check_model(&ps);
            assert!(
                report.ok(),
                "{}: {:?}",
                ps.theory.name,
                report.violations.first()
            );
        }
    }

    #[test]
    fn noncommutative_monoid_fails_cmonoid_axioms() {
        let ps = encode_monoid(&fixtures::sym3(), BuiltinTheoryKind::CMonoid).unwrap();
        assert!(!check_model(&ps).ok());
    }

    #[test]
    fn monoid_round_trips() {
        let m = fixtures::z3_with_zero();
        let ps = encode_monoid(&m, BuiltinTheoryKind::Monoid).unwrap();
        let back = decode_monoid(&ps, "back").unwrap();
        assert_eq!(back.labels, m.labels);
        assert_eq!(back.unit, m.unit);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(back.mul(a, b), m.mul(a, b));
            }
        }
    }

    #[test]
    fn group_encoding_requires_inverses() {
        let err = encode_monoid(&fixtures::semilattice2(), BuiltinTheoryKind::Group).unwrap_err();
        assert!(matches!(err, EncodeError::MissingInverse(_)));
    }

    #[test]
    fn category_round_trips() {
        let c = fixtures::chain_poset3();
        let ps = encode_category(&c).unwrap();
        let back = decode_category(&ps, "chain_poset3").unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn smc_round_trips() {
        let s = fixtures::signed_z2();
        let ps = encode_smc(&s, BuiltinTheoryKind::StrSymMonCat).unwrap();
        let back = decode_smc(&ps, "signed_z2").unwrap();
        assert_eq!(back.ob_unit, s.ob_unit);
        assert_eq!(back.arr_unit, s.arr_unit);
        for f in 0..4 {
            for g in 0..4 {
                assert_eq!(back.arr_ten(f, g), s.arr_ten(f, g));
            }
        }
    }

    #[test]
    fn presheaf_round_trips() {
        let j = fixtures::bz(3);
        for p in fixtures::presheaf_models(&j) {
            let ps = encode_presheaf(&p).unwrap();
            let back = decode_presheaf(&ps, &j, &p.name).unwrap();
            assert_eq!(back, p);
        }
    }

    #[test]
    fn xmod_round_trips() {
        let x = fixtures::xmod_z2_z4();
        let ps = encode_xmod(&x).unwrap();
        let back = decode_xmod(&ps, "xmod_z2_z4").unwrap();
        assert_eq!(back.bd(1), x.bd(1));
        assert_eq!(back.act(3, 1), x.act(3, 1));
    }

    #[test]
    fn decode_reports_missing_rows() {
        let m = fixtures::cyclic_monoid(2);
        let mut ps = encode_monoid(&m, BuiltinTheoryKind::Monoid).unwrap();
        ps.tables.get_mut("mul").unwrap().remove(&vec!["a".to_string(), "a".to_string()]);
        let err = decode_monoid(&ps, "broken").unwrap_err();
        assert!(matches!(err, EncodeError::Shape { .. }), "{err}");
    }
}
