use super::category::FiniteCategory;
use super::monoid::{AlgebraError, FiniteMonoid};

fn invalid(name: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid {
        structure: "strict monoidal category",
        name: name.to_string(),
        message: message.into(),
    }
}

/// A strict monoidal category on a finite underlying category: a tensor
/// monoid on objects and a total tensor on arrows, strictly associative and
/// unital, satisfying interchange with composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteStrictMonCat {
    pub cat: FiniteCategory,
    pub ob_unit: u32,
    pub arr_unit: u32,
    ob_tensor: Vec<Vec<u32>>,
    arr_tensor: Vec<Vec<u32>>,
}

impl FiniteStrictMonCat {
    pub fn new(
        cat: FiniteCategory,
        ob_unit: u32,
        arr_unit: u32,
        ob_tensor: Vec<Vec<u32>>,
        arr_tensor: Vec<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let m = FiniteStrictMonCat {
            cat,
            ob_unit,
            arr_unit,
            ob_tensor,
            arr_tensor,
        };
        let n_ob = m.cat.n_objects() as u32;
        let n_ar = m.cat.n_arrows() as u32;
        let bad = |msg: String| invalid(&m.cat.name, msg);
        if m.ob_tensor.len() != n_ob as usize
            || m.ob_tensor.iter().any(|r| r.len() != n_ob as usize)
            || m.arr_tensor.len() != n_ar as usize
            || m.arr_tensor.iter().any(|r| r.len() != n_ar as usize)
        {
            return Err(bad("tensor table is not square".into()));
        }
        if m.ob_tensor.iter().flatten().any(|&o| o >= n_ob)
            || m.arr_tensor.iter().flatten().any(|&f| f >= n_ar)
        {
            return Err(bad("tensor value out of range".into()));
        }
        if m.arr_unit != m.cat.id[m.ob_unit as usize] {
            return Err(bad("arrow unit is not the identity of the object unit".into()));
        }
        for a in 0..n_ob {
            if m.ob_ten(m.ob_unit, a) != a || m.ob_ten(a, m.ob_unit) != a {
                return Err(bad("object unit law fails".into()));
            }
            for b in 0..n_ob {
                for c in 0..n_ob {
                    if m.ob_ten(m.ob_ten(a, b), c) != m.ob_ten(a, m.ob_ten(b, c)) {
                        return Err(bad("object tensor is not associative".into()));
                    }
                }
            }
        }
        for f in 0..n_ar {
            if m.arr_ten(m.arr_unit, f) != f || m.arr_ten(f, m.arr_unit) != f {
                return Err(bad("arrow unit law fails".into()));
            }
            for g in 0..n_ar {
                let fg = m.arr_ten(f, g);
                let (fd, fc) = (m.cat.dom[f as usize], m.cat.cod[f as usize]);
                let (gd, gc) = (m.cat.dom[g as usize], m.cat.cod[g as usize]);
                if m.cat.dom[fg as usize] != m.ob_ten(fd, gd)
                    || m.cat.cod[fg as usize] != m.ob_ten(fc, gc)
                {
                    return Err(bad(format!(
                        "tensor of `{}` and `{}` has wrong endpoints",
                        m.cat.arrows[f as usize], m.cat.arrows[g as usize]
                    )));
                }
                for h in 0..n_ar {
                    if m.arr_ten(m.arr_ten(f, g), h) != m.arr_ten(f, m.arr_ten(g, h)) {
                        return Err(bad("arrow tensor is not associative".into()));
                    }
                }
            }
        }
        for a in 0..n_ob {
            for b in 0..n_ob {
                let ia = m.cat.id[a as usize];
                let ib = m.cat.id[b as usize];
                if m.arr_ten(ia, ib) != m.cat.id[m.ob_ten(a, b) as usize] {
                    return Err(bad("tensor of identities is not an identity".into()));
                }
            }
        }
        // Interchange: (f2 . f1) x (g2 . g1) = (f2 x g2) . (f1 x g1)
        // whenever both composites exist.
        for f2 in 0..n_ar {
            for f1 in 0..n_ar {
                let Some(f) = m.cat.comp(f2, f1) else { continue };
                for g2 in 0..n_ar {
                    for g1 in 0..n_ar {
                        let Some(g) = m.cat.comp(g2, g1) else { continue };
                        let lhs = m.arr_ten(f, g);
                        let rhs = m.cat.comp(m.arr_ten(f2, g2), m.arr_ten(f1, g1));
                        if rhs != Some(lhs) {
                            return Err(bad("interchange fails".into()));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn ob_ten(&self, a: u32, b: u32) -> u32 {
        self.ob_tensor[a as usize][b as usize]
    }

    pub fn arr_ten(&self, f: u32, g: u32) -> u32 {
        self.arr_tensor[f as usize][g as usize]
    }

    /// Does `a x b = b x a` on objects and `f x g = g x f` on arrows?
    pub fn is_strictly_commutative(&self) -> bool {
        let n_ob = self.cat.n_objects() as u32;
        let n_ar = self.cat.n_arrows() as u32;
        (0..n_ob).all(|a| (0..n_ob).all(|b| self.ob_ten(a, b) == self.ob_ten(b, a)))
            && (0..n_ar).all(|f| (0..n_ar).all(|g| self.arr_ten(f, g) == self.arr_ten(g, f)))
    }
}

/// The objects of a strict monoidal category under tensor, as a monoid.
pub fn ob_monoid(m: &FiniteStrictMonCat) -> Result<FiniteMonoid, AlgebraError> {
    let n = m.cat.n_objects();
    let table = (0..n)
        .map(|a| (0..n).map(|b| m.ob_ten(a as u32, b as u32)).collect())
        .collect();
    FiniteMonoid::new(
        format!("{}_ob", m.cat.name),
        m.cat.objects.clone(),
        m.ob_unit,
        table,
    )
}

/// The arrows of a strict monoidal category under tensor, as a monoid.
pub fn arr_monoid(m: &FiniteStrictMonCat) -> Result<FiniteMonoid, AlgebraError> {
    let n = m.cat.n_arrows();
    let table = (0..n)
        .map(|f| (0..n).map(|g| m.arr_ten(f as u32, g as u32)).collect())
        .collect();
    FiniteMonoid::new(
        format!("{}_arr", m.cat.name),
        m.cat.arrows.clone(),
        m.arr_unit,
        table,
    )
}

/// The discrete strict monoidal category on a monoid `M`: objects are the
/// elements of `M`, the only arrows are identities, tensor is the monoid
/// operation on both levels.
pub fn delta(m: &FiniteMonoid) -> Result<FiniteStrictMonCat, AlgebraError> {
    let n = m.order() as u32;
    let objects: Vec<String> = m.labels.clone();
    let arrows: Vec<String> = m.labels.iter().map(|l| format!("id_{l}")).collect();
    let idx: Vec<u32> = (0..n).collect();
    let comp = (0..n)
        .map(|g| {
            (0..n)
                .map(|f| if g == f { Some(g) } else { None })
                .collect()
        })
        .collect();
    let cat = FiniteCategory::new(
        format!("delta_{}", m.name),
        objects,
        arrows,
        idx.clone(),
        idx.clone(),
        idx,
        comp,
    )?;
    let table: Vec<Vec<u32>> = (0..n)
        .map(|a| (0..n).map(|b| m.mul(a, b)).collect())
        .collect();
    FiniteStrictMonCat::new(cat, m.unit, m.unit, table.clone(), table)
}

/// The indiscrete strict monoidal category on a monoid `M`: objects are the
/// elements of `M`, with exactly one arrow `a.b : b -> a` between any two
/// objects; tensor multiplies coordinates.
pub fn nabla(m: &FiniteMonoid) -> Result<FiniteStrictMonCat, AlgebraError> {
    let n = m.order() as u32;
    let objects: Vec<String> = m.labels.clone();
    let mut arrows = Vec::new();
    let mut dom = Vec::new();
    let mut cod = Vec::new();
    let arrow_at = |c: u32, d: u32| c * n + d;
    for c in 0..n {
        for d in 0..n {
            arrows.push(format!("{}.{}", m.label(c), m.label(d)));
            dom.push(d);
            cod.push(c);
        }
    }
    let id: Vec<u32> = (0..n).map(|o| arrow_at(o, o)).collect();
    let n_ar = (n * n) as usize;
    let mut comp = vec![vec![None; n_ar]; n_ar];
    for g in 0..n_ar {
        for f in 0..n_ar {
            if dom[g] == cod[f] {
                comp[g][f] = Some(arrow_at(cod[g], dom[f]));
            }
        }
    }
    let cat = FiniteCategory::new(
        format!("nabla_{}", m.name),
        objects,
        arrows,
        dom,
        cod,
        id,
        comp,
    )?;
    let ob_table: Vec<Vec<u32>> = (0..n)
        .map(|a| (0..n).map(|b| m.mul(a, b)).collect())
        .collect();
    let arr_table: Vec<Vec<u32>> = (0..n_ar as u32)
        .map(|f| {
            (0..n_ar as u32)
                .map(|g| {
                    let (fc, fd) = (f / n, f % n);
                    let (gc, gd) = (g / n, g % n);
                    arrow_at(m.mul(fc, gc), m.mul(fd, gd))
                })
                .collect()
        })
        .collect();
    FiniteStrictMonCat::new(cat, m.unit, arrow_at(m.unit, m.unit), ob_table, arr_table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::fixtures;

    #[test]
    fn delta_on_z2_has_only_identities() {
        let m = fixtures::cyclic_monoid(2);
        let d = delta(&m).unwrap();
        assert_eq!(d.cat.n_objects(), 2);
        assert_eq!(d.cat.n_arrows(), 2);
        assert!(d.is_strictly_commutative());
        assert!(monoid_eq_tables(&ob_monoid(&d).unwrap(), &m));
    }

    #[test]
    fn nabla_on_z2_is_indiscrete() {
        let m = fixtures::cyclic_monoid(2);
        let v = nabla(&m).unwrap();
        assert_eq!(v.cat.n_objects(), 2);
        assert_eq!(v.cat.n_arrows(), 4);
        // Exactly one arrow in each hom-set.
        for a in 0..2u32 {
            for b in 0..2u32 {
                let count = (0..4u32)
                    .filter(|&f| v.cat.dom[f as usize] == a && v.cat.cod[f as usize] == b)
                    .count();
                assert_eq!(count, 1);
            }
        }
        assert!(v.is_strictly_commutative());
    }

    #[test]
    fn nabla_on_sym3_is_not_commutative() {
        let m = fixtures::sym3();
        let v = nabla(&m).unwrap();
        assert_eq!(v.cat.n_arrows(), 36);
        assert!(!v.is_strictly_commutative());
    }

    #[test]
    fn signed_z2_validates_and_is_symmetric_monoid_on_arrows() {
        let s = fixtures::signed_z2();
        assert_eq!(s.cat.n_objects(), 2);
        assert_eq!(s.cat.n_arrows(), 4);
        assert!(s.is_strictly_commutative());
        let am = arr_monoid(&s).unwrap();
        assert_eq!(am.invertible_elements().len(), 4);
    }

    #[test]
    fn flagged_z2_arrow_monoid_has_two_units() {
        let s = fixtures::flagged_z2();
        let am = arr_monoid(&s).unwrap();
        assert_eq!(am.order(), 4);
        assert_eq!(am.invertible_elements().len(), 2);
    }

    fn monoid_eq_tables(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
        a.order() == b.order()
            && a.unit == b.unit
            && (0..a.order() as u32)
                .all(|x| (0..a.order() as u32).all(|y| a.mul(x, y) == b.mul(x, y)))
    }
}
