use super::category::FiniteCategory;
use super::monoid::AlgebraError;

fn invalid(name: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid {
        structure: "diagram",
        name: name.to_string(),
        message: message.into(),
    }
}

/// A set-valued diagram on a finite category `J`: one finite carrier per
/// object and one total function per arrow, preserving identities and
/// composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf {
    pub name: String,
    pub shape: FiniteCategory,
    pub carriers: Vec<Vec<String>>,
    maps: Vec<Vec<u32>>,
}

impl Presheaf {
    pub fn new(
        name: impl Into<String>,
        shape: FiniteCategory,
        carriers: Vec<Vec<String>>,
        maps: Vec<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let p = Presheaf {
            name: name.into(),
            shape,
            carriers,
            maps,
        };
        let bad = |msg: String| invalid(&p.name, msg);
        if p.carriers.len() != p.shape.n_objects() {
            return Err(bad("one carrier per object is required".into()));
        }
        for (o, carrier) in p.carriers.iter().enumerate() {
            let mut seen = std::collections::BTreeSet::new();
            for label in carrier {
                if !seen.insert(label) {
                    return Err(bad(format!(
                        "duplicate element `{label}` at `{}`",
                        p.shape.objects[o]
                    )));
                }
            }
        }
        if p.maps.len() != p.shape.n_arrows() {
            return Err(bad("one map per arrow is required".into()));
        }
        for f in 0..p.shape.n_arrows() {
            let d = p.shape.dom[f] as usize;
            let c = p.shape.cod[f] as usize;
            if p.maps[f].len() != p.carriers[d].len() {
                return Err(bad(format!(
                    "map for `{}` has wrong domain size",
                    p.shape.arrows[f]
                )));
            }
            if p.maps[f].iter().any(|&y| (y as usize) >= p.carriers[c].len()) {
                return Err(bad(format!(
                    "map for `{}` lands outside its codomain",
                    p.shape.arrows[f]
                )));
            }
        }
        for (o, &i) in p.shape.id.iter().enumerate() {
            for x in 0..p.carriers[o].len() as u32 {
                if p.apply(i, x) != x {
                    return Err(bad(format!(
                        "identity at `{}` does not act as the identity",
                        p.shape.objects[o]
                    )));
                }
            }
        }
        for (g, f) in p.shape.composable_pairs() {
            let gf = p.shape.comp(g, f).expect("composable");
            for x in 0..p.carriers[p.shape.dom[f as usize] as usize].len() as u32 {
                if p.apply(gf, x) != p.apply(g, p.apply(f, x)) {
                    return Err(bad(format!(
                        "functoriality fails at `{} . {}`",
                        p.shape.arrows[g as usize], p.shape.arrows[f as usize]
                    )));
                }
            }
        }
        Ok(p)
    }

    /// Image of element index `x` of the carrier at `dom f` under the arrow `f`.
    pub fn apply(&self, f: u32, x: u32) -> u32 {
        self.maps[f as usize][x as usize]
    }

    pub fn carrier(&self, o: u32) -> &[String] {
        &self.carriers[o as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::fixtures;

    #[test]
    fn regular_action_of_bz2_is_a_diagram() {
        let p = fixtures::presheaf_models(&fixtures::bz(2))
            .into_iter()
            .find(|p| p.name.ends_with("_regular"))
            .unwrap();
        assert_eq!(p.carriers.len(), 1);
        assert_eq!(p.carrier(0).len(), 2);
        assert_eq!(p.apply(1, 0), 1);
        assert_eq!(p.apply(1, 1), 0);
    }

    #[test]
    fn non_functorial_maps_are_rejected() {
        let j = fixtures::bz(2);
        // The generator must act involutively; a constant map fails
        // functoriality against g . g = id.
        let bad = Presheaf::new(
            "bad",
            j,
            vec![vec!["p".into(), "q".into()]],
            vec![vec![0, 1], vec![0, 0]],
        );
        assert!(matches!(bad, Err(AlgebraError::Invalid { .. })));
    }

    #[test]
    fn identity_must_act_as_identity() {
        let j = fixtures::bz(2);
        let bad = Presheaf::new(
            "bad",
            j,
            vec![vec!["p".into(), "q".into()]],
            vec![vec![1, 0], vec![0, 1]],
        );
        assert!(matches!(bad, Err(AlgebraError::Invalid { .. })));
    }
}
