use std::collections::BTreeMap;

use thiserror::Error;

use super::structure::PartialStructure;

/// A sort-indexed family of total maps between the carriers of two
/// structures over the same signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism<'a> {
    pub source: &'a PartialStructure,
    pub target: &'a PartialStructure,
    /// Per sort: source element -> target element.
    pub maps: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("source and target have different signatures")]
    SignatureMismatch,
    #[error("no map given for sort `{0}`")]
    MissingSortMap(String),
    #[error("map for sort `{sort}` does not cover element `{elem}`")]
    MissingElement { sort: String, elem: String },
    #[error("map for sort `{sort}` sends `{elem}` to `{image}`, which is not in the target carrier")]
    ImageOutsideCarrier {
        sort: String,
        elem: String,
        image: String,
    },
}

/// Classification of a candidate homomorphism.
///
/// * `NotHom` — some defined operation instance is not preserved (the
///   witness names the operation and arguments).
/// * `Hom` — preserves all defined operation instances, but does not
///   reflect definedness.
/// * `HomReflecting` — additionally reflects definedness (whenever the
///   operation is defined on the image tuple it was already defined on the
///   original tuple), but is not sort-wise bijective.
/// * `Iso` — reflects definedness and is sort-wise bijective; equivalently,
///   has a two-sided inverse homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomClassification {
    NotHom { witness: String },
    Hom,
    HomReflecting,
    Iso,
}

impl<'a> Homomorphism<'a> {
    pub fn new(
        source: &'a PartialStructure,
        target: &'a PartialStructure,
        maps: BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Self, HomError> {
        if source.theory.signature != target.theory.signature {
            return Err(HomError::SignatureMismatch);
        }
        for sort in &source.theory.signature.sorts {
            let map = maps
                .get(sort)
                .ok_or_else(|| HomError::MissingSortMap(sort.clone()))?;
            for elem in source.carrier(sort) {
                let image = map.get(elem).ok_or_else(|| HomError::MissingElement {
                    sort: sort.clone(),
                    elem: elem.clone(),
                })?;
                if !target.carrier(sort).contains(image) {
                    return Err(HomError::ImageOutsideCarrier {
                        sort: sort.clone(),
                        elem: elem.clone(),
                        image: image.clone(),
                    });
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            maps,
        })
    }

    pub fn apply(&self, sort: &str, elem: &str) -> &str {
        &self.maps[sort][elem]
    }

    fn apply_tuple(&self, sorts: &[String], elems: &[String]) -> Vec<String> {
        sorts
            .iter()
            .zip(elems)
            .map(|(s, e)| self.apply(s, e).to_string())
            .collect()
    }

    /// Is the map bijective on every carrier?
    pub fn is_bijective(&self) -> bool {
        self.source.theory.signature.sorts.iter().all(|sort| {
            let src = self.source.carrier(sort);
            let tgt = self.target.carrier(sort);
            if src.len() != tgt.len() {
                return false;
            }
            let mut images: Vec<&str> = src.iter().map(|e| self.apply(sort, e)).collect();
            images.sort_unstable();
            images.dedup();
            images.len() == tgt.len()
        })
    }
}

/// Enumerate all tuples of source elements matching a list of sorts.
fn tuples(m: &PartialStructure, sorts: &[String]) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for sort in sorts {
        let carrier = m.carrier(sort);
        let mut next = Vec::with_capacity(out.len() * carrier.len());
        for t in &out {
            for e in carrier {
                let mut t2 = t.clone();
                t2.push(e.clone());
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Classify a candidate homomorphism between partial structures sharing a
/// signature.  Preservation: whenever `f` is defined on a tuple in the
/// source, it is defined on the image tuple in the target with the image
/// result.  Reflection: whenever `f` is defined on the image of a source
/// tuple, it was defined on that tuple.  A sort-wise bijective homomorphism
/// is an isomorphism exactly when it also reflects definedness.
pub fn check_homomorphism(h: &Homomorphism<'_>) -> HomClassification {
    let sig = &h.source.theory.signature;
    // Preservation over every defined row of every source table.
    for op in &sig.ops {
        if let Some(table) = h.source.tables.get(&op.name) {
            for (args, result) in table {
                let image_args = h.apply_tuple(&op.arg_sorts, args);
                let image_result = h.apply(&op.result_sort, result);
                match h.target.op_value(&op.name, &image_args) {
                    Some(v) if v == image_result => {}
                    _ => {
                        return HomClassification::NotHom {
                            witness: format!(
                                "{}({}) = {} is defined in the source but not preserved",
                                op.name,
                                args.join(", "),
                                result
                            ),
                        }
                    }
                }
            }
        }
    }
    // Reflection over every source tuple.
    let mut reflects = true;
    'outer: for op in &sig.ops {
        for args in tuples(h.source, &op.arg_sorts) {
            let image_args = h.apply_tuple(&op.arg_sorts, &args);
            if h.target.op_value(&op.name, &image_args).is_some()
                && h.source.op_value(&op.name, &args).is_none()
            {
                reflects = false;
                break 'outer;
            }
        }
    }
    match (reflects, h.is_bijective()) {
        (true, true) => HomClassification::Iso,
        (true, false) => HomClassification::HomReflecting,
        (false, _) => HomClassification::Hom,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phl::{parse_theory, Theory};

    fn category_theory() -> Theory {
        parse_theory(
            "\
theory category
sort O;
sort A;
op dom : A -> O;
op cod : A -> O;
op id : O -> A;
op comp : A A -> A;
",
        )
        .unwrap()
    }

    fn structure(
        theory: Theory,
        objects: &[&str],
        arrows: &[&str],
        dom: &[(&str, &str)],
        cod: &[(&str, &str)],
        id: &[(&str, &str)],
        comp: &[(&str, &str, &str)],
    ) -> PartialStructure {
        let carriers = BTreeMap::from([
            (
                "O".to_string(),
                objects.iter().map(|s| s.to_string()).collect(),
            ),
            (
                "A".to_string(),
                arrows.iter().map(|s| s.to_string()).collect(),
            ),
        ]);
        let unary =
            |rows: &[(&str, &str)]| -> BTreeMap<Vec<String>, String> {
                rows.iter()
                    .map(|(a, r)| (vec![a.to_string()], r.to_string()))
                    .collect()
            };
        let mut tables = BTreeMap::new();
        tables.insert("dom".to_string(), unary(dom));
        tables.insert("cod".to_string(), unary(cod));
        tables.insert("id".to_string(), unary(id));
        tables.insert(
            "comp".to_string(),
            comp.iter()
                .map(|(g, f, r)| (vec![g.to_string(), f.to_string()], r.to_string()))
                .collect(),
        );
        PartialStructure::new(theory, carriers, tables).unwrap()
    }

    fn identity_maps(m: &PartialStructure) -> BTreeMap<String, BTreeMap<String, String>> {
        m.carriers
            .iter()
            .map(|(sort, elems)| {
                (
                    sort.clone(),
                    elems.iter().map(|e| (e.clone(), e.clone())).collect(),
                )
            })
            .collect()
    }

    // Two structures over the category signature with identical carriers:
    // the source has a freely added arrow `a : 0 -> 1` and an *empty*
    // composition table, the target defines one extra composite.  The
    // identity map is then a bijective homomorphism that fails to reflect
    // definedness, hence is not an isomorphism.
    #[test]
    fn bijective_but_not_reflecting_is_not_iso() {
        let t = category_theory();
        let objects = ["0", "1"];
        let arrows = ["id0", "id1", "a"];
        let dom = [("id0", "0"), ("id1", "1"), ("a", "0")];
        let cod = [("id0", "0"), ("id1", "1"), ("a", "1")];
        let id = [("0", "id0"), ("1", "id1")];
        let source = structure(t.clone(), &objects, &arrows, &dom, &cod, &id, &[]);
        let target = structure(
            t,
            &objects,
            &arrows,
            &dom,
            &cod,
            &id,
            &[("id1", "a", "a")],
        );
        let h = Homomorphism::new(&source, &target, identity_maps(&source)).unwrap();
        assert!(h.is_bijective());
        assert_eq!(check_homomorphism(&h), HomClassification::Hom);
        // The inverse map is not even a homomorphism, so no two-sided
        // inverse exists.
        let g = Homomorphism::new(&target, &source, identity_maps(&target)).unwrap();
        assert!(matches!(
            check_homomorphism(&g),
            HomClassification::NotHom { .. }
        ));
    }

    #[test]
    fn identity_on_equal_structures_is_iso() {
        let t = category_theory();
        let m = structure(
            t,
            &["0"],
            &["id0"],
            &[("id0", "0")],
            &[("id0", "0")],
            &[("0", "id0")],
            &[("id0", "id0", "id0")],
        );
        let h = Homomorphism::new(&m, &m, identity_maps(&m)).unwrap();
        assert_eq!(check_homomorphism(&h), HomClassification::Iso);
    }

    #[test]
    fn unpreserved_row_is_not_hom_with_witness() {
        let t = category_theory();
        let m = structure(
            t.clone(),
            &["0"],
            &["id0"],
            &[("id0", "0")],
            &[("id0", "0")],
            &[("0", "id0")],
            &[("id0", "id0", "id0")],
        );
        let n = structure(
            t,
            &["0"],
            &["id0"],
            &[("id0", "0")],
            &[("id0", "0")],
            &[],
            &[("id0", "id0", "id0")],
        );
        let h = Homomorphism::new(&m, &n, identity_maps(&m)).unwrap();
        match check_homomorphism(&h) {
            HomClassification::NotHom { witness } => assert!(witness.contains("id("), "{witness}"),
            other => panic!("expected NotHom, got {other:?}"),
        }
    }
}
