//! Small, hand-checked structures used across tests, the bundled model
//! files, and the verification suites.  Everything here is constructed
//! through the validating constructors, so a typo in a table fails loudly
//! at first use.

use super::category::FiniteCategory;
use super::monoid::{FiniteGroup, FiniteMonoid};
use super::presheaf::Presheaf;
use super::smc::FiniteStrictMonCat;
use super::xmod::CrossedModule;

/// The cyclic monoid (in fact group) of order `n`, labels `e, a, a2, ...`.
pub fn cyclic_monoid(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect())
        .collect();
    FiniteMonoid::new(format!("z{n}"), labels, 0, table).expect("fixture is valid")
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    FiniteGroup::from_monoid(cyclic_monoid(n)).expect("fixture is valid")
}

/// The two-element semilattice `{e, a}` with `a a = a`.
pub fn semilattice2() -> FiniteMonoid {
    FiniteMonoid::new(
        "semilattice2",
        vec!["e".into(), "a".into()],
        0,
        vec![vec![0, 1], vec![1, 1]],
    )
    .expect("fixture is valid")
}

/// The cyclic group of order 3 with an absorbing element `z` adjoined.
pub fn z3_with_zero() -> FiniteMonoid {
    let labels = vec!["e".into(), "a".into(), "a2".into(), "z".into()];
    let mut table = vec![vec![3u32; 4]; 4];
    for i in 0..3 {
        for j in 0..3 {
            table[i][j] = ((i + j) % 3) as u32;
        }
    }
    FiniteMonoid::new("z3_with_zero", labels, 0, table).expect("fixture is valid")
}

/// Direct product, elements labeled `x.y`.
pub fn product_monoid(a: &FiniteMonoid, b: &FiniteMonoid) -> FiniteMonoid {
    let na = a.order() as u32;
    let nb = b.order() as u32;
    let pair = |x: u32, y: u32| x * nb + y;
    let labels = (0..na)
        .flat_map(|x| (0..nb).map(move |y| (x, y)))
        .map(|(x, y)| format!("{}.{}", a.label(x), b.label(y)))
        .collect();
    let table = (0..na * nb)
        .map(|p| {
            (0..na * nb)
                .map(|q| {
                    pair(
                        a.mul(p / nb, q / nb),
                        b.mul(p % nb, q % nb),
                    )
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new(
        format!("{}x{}", a.name, b.name),
        labels,
        pair(a.unit, b.unit),
        table,
    )
    .expect("fixture is valid")
}

pub fn klein_four() -> FiniteMonoid {
    let z2 = cyclic_monoid(2);
    let mut m = product_monoid(&z2, &z2);
    m.name = "klein_four".into();
    m
}

/// The symmetric group on three letters, as a monoid of order 6.
pub fn sym3() -> FiniteMonoid {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 2, 0], // r
        [2, 0, 1], // rr
        [1, 0, 2], // s
        [2, 1, 0], // rs
        [0, 2, 1], // rrs
    ];
    let labels = vec![
        "e".into(),
        "r".into(),
        "rr".into(),
        "s".into(),
        "rs".into(),
        "rrs".into(),
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let pq = compose(p, q);
                    perms.iter().position(|r| *r == pq).unwrap() as u32
                })
                .collect()
        })
        .collect();
    FiniteMonoid::new("sym3", labels, 0, table).expect("fixture is valid")
}

/// A hand-picked spread of small monoids beyond the exhaustive order-3
/// enumeration: a cyclic group, a non-cyclic group, a group with an
/// absorbing element, a mixed direct product, and a group of prime order.
pub fn handpicked_monoids() -> Vec<FiniteMonoid> {
    vec![
        cyclic_monoid(4),
        klein_four(),
        z3_with_zero(),
        product_monoid(&cyclic_monoid(2), &semilattice2()),
        cyclic_monoid(5),
    ]
}

/// The one-object category whose endo-arrows form the given monoid, with
/// composition given by multiplication.
pub fn delooping(m: &FiniteMonoid) -> FiniteCategory {
    let n = m.order();
    let comp = (0..n as u32)
        .map(|g| (0..n as u32).map(|f| Some(m.mul(g, f))).collect())
        .collect();
    FiniteCategory::new(
        format!("b_{}", m.name),
        vec!["o".into()],
        m.labels.clone(),
        vec![0; n],
        vec![0; n],
        vec![m.unit],
        comp,
    )
    .expect("fixture is valid")
}

/// One-object category on the cyclic group of order `n`.
pub fn bz(n: usize) -> FiniteCategory {
    let mut c = delooping(&cyclic_monoid(n));
    c.name = format!("bz{n}");
    c
}

/// One-object category on the symmetric group on three letters.
pub fn bs3() -> FiniteCategory {
    let mut c = delooping(&sym3());
    c.name = "bs3".into();
    c
}

/// The three-element chain poset `p0 <= p1 <= p2` as a category.
pub fn chain_poset3() -> FiniteCategory {
    let objects = vec!["p0".into(), "p1".into(), "p2".into()];
    let arrows = vec![
        "id_p0".into(),
        "id_p1".into(),
        "id_p2".into(),
        "a01".into(),
        "a12".into(),
        "a02".into(),
    ];
    let dom = vec![0, 1, 2, 0, 1, 0];
    let cod = vec![0, 1, 2, 1, 2, 2];
    let arrow_from_to = |d: u32, c: u32| -> Option<u32> {
        match (d, c) {
            _ if d == c => Some(d),
            (0, 1) => Some(3),
            (1, 2) => Some(4),
            (0, 2) => Some(5),
            _ => None,
        }
    };
    let comp = (0..6usize)
        .map(|g| {
            (0..6usize)
                .map(|f| {
                    if dom[g] == cod[f] {
                        arrow_from_to(dom[f], cod[g])
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    FiniteCategory::new("chain_poset3", objects, arrows, dom, cod, vec![0, 1, 2], comp)
        .expect("fixture is valid")
}

/// Two objects with a parallel pair of arrows between them.
pub fn parallel_pair() -> FiniteCategory {
    let objects = vec!["v0".into(), "v1".into()];
    let arrows = vec!["id_v0".into(), "id_v1".into(), "f".into(), "g".into()];
    let dom = vec![0, 1, 0, 0];
    let cod = vec![0, 1, 1, 1];
    let mut comp = vec![vec![None; 4]; 4];
    comp[0][0] = Some(0);
    comp[1][1] = Some(1);
    comp[2][0] = Some(2);
    comp[3][0] = Some(3);
    comp[1][2] = Some(2);
    comp[1][3] = Some(3);
    FiniteCategory::new("parallel_pair", objects, arrows, dom, cod, vec![0, 1], comp)
        .expect("fixture is valid")
}

/// The shapes used by the bundled diagram models and the suites.
pub fn presheaf_shapes() -> Vec<FiniteCategory> {
    vec![
        bz(2),
        bz(3),
        bz(4),
        bs3(),
        chain_poset3(),
        parallel_pair(),
    ]
}

/// Three set-valued diagrams on `j`: the one-point diagram, the diagram
/// represented by the first object, and their disjoint union.
pub fn presheaf_models(j: &FiniteCategory) -> Vec<Presheaf> {
    let n_ob = j.n_objects();
    let n_ar = j.n_arrows();

    let trivial = Presheaf::new(
        format!("{}_trivial", j.name),
        j.clone(),
        vec![vec!["pt".to_string()]; n_ob],
        vec![vec![0]; n_ar],
    )
    .expect("fixture is valid");

    // hom(first object, o), ordered by arrow index.
    let hom0: Vec<Vec<u32>> = (0..n_ob as u32)
        .map(|o| {
            (0..n_ar as u32)
                .filter(|&w| j.dom[w as usize] == 0 && j.cod[w as usize] == o)
                .collect()
        })
        .collect();
    let rep_carriers: Vec<Vec<String>> = hom0
        .iter()
        .map(|ws| ws.iter().map(|&w| j.arrows[w as usize].clone()).collect())
        .collect();
    let post_compose = |f: u32, extra_point: bool| -> Vec<u32> {
        let d = j.dom[f as usize] as usize;
        let c = j.cod[f as usize] as usize;
        let mut map: Vec<u32> = hom0[d]
            .iter()
            .map(|&w| {
                let fw = j.comp(f, w).expect("endpoints match");
                hom0[c].iter().position(|&v| v == fw).unwrap() as u32
            })
            .collect();
        if extra_point {
            map.push(hom0[c].len() as u32);
        }
        map
    };
    let representable = Presheaf::new(
        format!("{}_regular", j.name),
        j.clone(),
        rep_carriers.clone(),
        (0..n_ar as u32).map(|f| post_compose(f, false)).collect(),
    )
    .expect("fixture is valid");

    let mixed_carriers: Vec<Vec<String>> = rep_carriers
        .into_iter()
        .map(|mut c| {
            c.push("pt".to_string());
            c
        })
        .collect();
    let mixed = Presheaf::new(
        format!("{}_mixed", j.name),
        j.clone(),
        mixed_carriers,
        (0..n_ar as u32).map(|f| post_compose(f, true)).collect(),
    )
    .expect("fixture is valid");

    vec![trivial, representable, mixed]
}

/// A strict symmetric monoidal groupoid: objects form the cyclic group of
/// order 2 under tensor, and each object carries a sign in the same group;
/// composition and tensor add signs.
pub fn signed_z2() -> FiniteStrictMonCat {
    signed_like("signed_z2", |s, t| s ^ t)
}

/// Same shape as `signed_z2`, but flags combine by OR, so flagged arrows
/// have no inverses.
pub fn flagged_z2() -> FiniteStrictMonCat {
    signed_like("flagged_z2", |s, t| s | t)
}

fn signed_like(name: &str, join: impl Fn(u32, u32) -> u32) -> FiniteStrictMonCat {
    let objects = vec!["e".to_string(), "u".to_string()];
    let arrows = vec![
        "pos_e".to_string(),
        "neg_e".to_string(),
        "pos_u".to_string(),
        "neg_u".to_string(),
    ];
    let at = |ob: u32, sign: u32| ob * 2 + sign;
    let dom = vec![0, 0, 1, 1];
    let cod = vec![0, 0, 1, 1];
    let id = vec![at(0, 0), at(1, 0)];
    let comp = (0..4u32)
        .map(|g| {
            (0..4u32)
                .map(|f| {
                    if g / 2 == f / 2 {
                        Some(at(g / 2, join(g % 2, f % 2)))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let cat = FiniteCategory::new(name, objects, arrows, dom, cod, id, comp)
        .expect("fixture is valid");
    let ob_tensor = vec![vec![0, 1], vec![1, 0]];
    let arr_tensor = (0..4u32)
        .map(|f| {
            (0..4u32)
                .map(|g| at((f / 2) ^ (g / 2), join(f % 2, g % 2)))
                .collect()
        })
        .collect();
    FiniteStrictMonCat::new(cat, 0, 0, ob_tensor, arr_tensor).expect("fixture is valid")
}

/// The inclusion of the order-2 subgroup into the cyclic group of order 4,
/// with the trivial action.
pub fn xmod_z2_z4() -> CrossedModule {
    let g = cyclic_group(4);
    let h = cyclic_group(2);
    CrossedModule::new("xmod_z2_z4", g, h, vec![0, 2], vec![vec![0, 1]; 4])
        .expect("fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shape_yields_three_valid_diagrams() {
        for j in presheaf_shapes() {
            let models = presheaf_models(&j);
            assert_eq!(models.len(), 3, "{}", j.name);
        }
    }

    #[test]
    fn handpicked_monoids_have_expected_orders() {
        let orders: Vec<usize> = handpicked_monoids().iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![4, 4, 4, 4, 5]);
    }

    #[test]
    fn sym3_is_a_noncommutative_group() {
        let m = sym3();
        assert!(!m.is_commutative());
        assert_eq!(m.invertible_elements().len(), 6);
    }
}
