use super::monoid::AlgebraError;

fn invalid(name: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid {
        structure: "category",
        name: name.to_string(),
        message: message.into(),
    }
}

/// A finite category: indexed objects and arrows with labels, endpoint and
/// identity assignments, and a composition table `comp[g][f] = g . f`
/// (apply `f` first), defined exactly when `dom g = cod f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<String>,
    pub dom: Vec<u32>,
    pub cod: Vec<u32>,
    pub id: Vec<u32>,
    comp_table: Vec<Vec<Option<u32>>>,
}

impl FiniteCategory {
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<String>,
        dom: Vec<u32>,
        cod: Vec<u32>,
        id: Vec<u32>,
        comp_table: Vec<Vec<Option<u32>>>,
    ) -> Result<Self, AlgebraError> {
        let c = FiniteCategory {
            name: name.into(),
            objects,
            arrows,
            dom,
            cod,
            id,
            comp_table,
        };
        let n_ob = c.objects.len();
        let n_ar = c.arrows.len();
        let bad = |m: String| invalid(&c.name, m);
        if c.dom.len() != n_ar || c.cod.len() != n_ar || c.id.len() != n_ob {
            return Err(bad("endpoint/identity tables have wrong lengths".into()));
        }
        if c.comp_table.len() != n_ar || c.comp_table.iter().any(|r| r.len() != n_ar) {
            return Err(bad("composition table is not square".into()));
        }
        for &o in c.dom.iter().chain(&c.cod) {
            if (o as usize) >= n_ob {
                return Err(bad("endpoint out of range".into()));
            }
        }
        for (o, &f) in c.id.iter().enumerate() {
            if (f as usize) >= n_ar {
                return Err(bad("identity out of range".into()));
            }
            if c.dom[f as usize] != o as u32 || c.cod[f as usize] != o as u32 {
                return Err(bad(format!(
                    "identity of `{}` has wrong endpoints",
                    c.objects[o]
                )));
            }
        }
        for g in 0..n_ar as u32 {
            for f in 0..n_ar as u32 {
                let composable = c.dom[g as usize] == c.cod[f as usize];
                match c.comp(g, f) {
                    Some(h) => {
                        if !composable {
                            return Err(bad(format!(
                                "`{} . {}` defined but endpoints do not match",
                                c.arrows[g as usize], c.arrows[f as usize]
                            )));
                        }
                        if (h as usize) >= n_ar {
                            return Err(bad("composite out of range".into()));
                        }
                        if c.dom[h as usize] != c.dom[f as usize]
                            || c.cod[h as usize] != c.cod[g as usize]
                        {
                            return Err(bad(format!(
                                "`{} . {}` has wrong endpoints",
                                c.arrows[g as usize], c.arrows[f as usize]
                            )));
                        }
                    }
                    None => {
                        if composable {
                            return Err(bad(format!(
                                "`{} . {}` should be defined",
                                c.arrows[g as usize], c.arrows[f as usize]
                            )));
                        }
                    }
                }
            }
        }
        for f in 0..n_ar as u32 {
            let (d, co) = (c.dom[f as usize], c.cod[f as usize]);
            if c.comp(f, c.id[d as usize]) != Some(f) || c.comp(c.id[co as usize], f) != Some(f) {
                return Err(bad(format!(
                    "unit law fails at `{}`",
                    c.arrows[f as usize]
                )));
            }
        }
        for h in 0..n_ar as u32 {
            for g in 0..n_ar as u32 {
                for f in 0..n_ar as u32 {
                    if let (Some(hg), Some(gf)) = (c.comp(h, g), c.comp(g, f)) {
                        if c.comp(hg, f) != c.comp(h, gf) {
                            return Err(bad("associativity fails".into()));
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn comp(&self, g: u32, f: u32) -> Option<u32> {
        self.comp_table[g as usize][f as usize]
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn endos(&self, o: u32) -> Vec<u32> {
        (0..self.n_arrows() as u32)
            .filter(|&f| self.dom[f as usize] == o && self.cod[f as usize] == o)
            .collect()
    }

    /// Two-sided inverse of an arrow, if any.
    pub fn arrow_inverse(&self, f: u32) -> Option<u32> {
        let (d, c) = (self.dom[f as usize], self.cod[f as usize]);
        (0..self.n_arrows() as u32).find(|&g| {
            self.comp(g, f) == Some(self.id[d as usize])
                && self.comp(f, g) == Some(self.id[c as usize])
        })
    }

    /// Composable pairs `(g, f)` with `dom g = cod f`, in index order.
    pub fn composable_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for g in 0..self.n_arrows() as u32 {
            for f in 0..self.n_arrows() as u32 {
                if self.dom[g as usize] == self.cod[f as usize] {
                    out.push((g, f));
                }
            }
        }
        out
    }

    /// Is every object's only invertible endo-arrow its identity?
    pub fn is_rigid(&self) -> bool {
        (0..self.n_objects() as u32).all(|o| {
            self.endos(o)
                .into_iter()
                .filter(|&f| self.arrow_inverse(f).is_some())
                .all(|f| f == self.id[o as usize])
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::theories::fixtures;

    #[test]
    fn one_object_group_category_is_valid() {
        let c = fixtures::bz(3);
        assert_eq!(c.n_objects(), 1);
        assert_eq!(c.n_arrows(), 3);
        assert_eq!(c.composable_pairs().len(), 9);
        assert!(!c.is_rigid());
    }

    #[test]
    fn chain_poset_is_rigid() {
        let c = fixtures::chain_poset3();
        assert_eq!(c.n_objects(), 3);
        assert_eq!(c.n_arrows(), 6);
        assert!(c.is_rigid());
    }

    #[test]
    fn parallel_pair_is_rigid() {
        let c = fixtures::parallel_pair();
        assert_eq!(c.n_objects(), 2);
        assert_eq!(c.n_arrows(), 4);
        assert!(c.is_rigid());
    }
}
