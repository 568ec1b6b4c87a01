use super::monoid::{AlgebraError, FiniteGroup};

fn invalid(name: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid {
        structure: "crossed module",
        name: name.to_string(),
        message: message.into(),
    }
}

/// A crossed module: a group homomorphism `boundary : H -> G` together with
/// a left action of `G` on `H` by automorphisms, subject to
/// `boundary(g |> h) = g boundary(h) g^-1` and
/// `boundary(h) |> h' = h h' h^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub name: String,
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    boundary: Vec<u32>,
    action: Vec<Vec<u32>>,
}

impl CrossedModule {
    pub fn new(
        name: impl Into<String>,
        g: FiniteGroup,
        h: FiniteGroup,
        boundary: Vec<u32>,
        action: Vec<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let x = CrossedModule {
            name: name.into(),
            g,
            h,
            boundary,
            action,
        };
        let ng = x.g.order() as u32;
        let nh = x.h.order() as u32;
        let bad = |msg: String| invalid(&x.name, msg);
        if x.boundary.len() != nh as usize || x.boundary.iter().any(|&v| v >= ng) {
            return Err(bad("boundary table has wrong shape".into()));
        }
        if x.action.len() != ng as usize
            || x.action.iter().any(|r| r.len() != nh as usize)
            || x.action.iter().flatten().any(|&v| v >= nh)
        {
            return Err(bad("action table has wrong shape".into()));
        }
        if x.bd(x.h.unit()) != x.g.unit() {
            return Err(bad("boundary does not preserve the unit".into()));
        }
        for a in 0..nh {
            for b in 0..nh {
                if x.bd(x.h.mul(a, b)) != x.g.mul(x.bd(a), x.bd(b)) {
                    return Err(bad("boundary is not a homomorphism".into()));
                }
            }
        }
        for p in 0..ng {
            let mut seen = vec![false; nh as usize];
            for a in 0..nh {
                seen[x.act(p, a) as usize] = true;
            }
            if seen.iter().any(|&s| !s) {
                return Err(bad(format!(
                    "`{}` does not act bijectively",
                    x.g.monoid.label(p)
                )));
            }
            for a in 0..nh {
                for b in 0..nh {
                    if x.act(p, x.h.mul(a, b)) != x.h.mul(x.act(p, a), x.act(p, b)) {
                        return Err(bad(format!(
                            "`{}` does not act by an automorphism",
                            x.g.monoid.label(p)
                        )));
                    }
                }
            }
        }
        for a in 0..nh {
            if x.act(x.g.unit(), a) != a {
                return Err(bad("group unit does not act as the identity".into()));
            }
        }
        for p in 0..ng {
            for q in 0..ng {
                for a in 0..nh {
                    if x.act(x.g.mul(p, q), a) != x.act(p, x.act(q, a)) {
                        return Err(bad("action is not multiplicative".into()));
                    }
                }
            }
        }
        for p in 0..ng {
            for a in 0..nh {
                let lhs = x.bd(x.act(p, a));
                let rhs = x.g.mul(x.g.mul(p, x.bd(a)), x.g.inverse(p));
                if lhs != rhs {
                    return Err(bad("equivariance fails".into()));
                }
            }
        }
        for a in 0..nh {
            for b in 0..nh {
                let lhs = x.act(x.bd(a), b);
                let rhs = x.h.mul(x.h.mul(a, b), x.h.inverse(a));
                if lhs != rhs {
                    return Err(bad("conjugation compatibility fails".into()));
                }
            }
        }
        Ok(x)
    }

    pub fn bd(&self, a: u32) -> u32 {
        self.boundary[a as usize]
    }

    pub fn act(&self, p: u32, a: u32) -> u32 {
        self.action[p as usize][a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theories::fixtures;

    #[test]
    fn z2_into_z4_with_trivial_action_is_a_crossed_module() {
        let x = fixtures::xmod_z2_z4();
        assert_eq!(x.g.order(), 4);
        assert_eq!(x.h.order(), 2);
        assert_eq!(x.bd(1), 2);
    }

    #[test]
    fn nontrivial_boundary_into_noncentral_target_is_rejected() {
        // With the trivial action, conjugation compatibility forces the
        // boundary image to be central; aiming the generator of Z2 at a
        // transposition in Sym3 must fail.
        let g = FiniteGroup::from_monoid(fixtures::sym3()).unwrap();
        let h = FiniteGroup::from_monoid(fixtures::cyclic_monoid(2)).unwrap();
        let transposition = (0..6)
            .find(|&p| p != g.unit() && g.mul(p, p) == g.unit())
            .unwrap();
        let bad = CrossedModule::new(
            "bad",
            g,
            h,
            vec![0, transposition],
            vec![vec![0, 1]; 6],
        );
        assert!(matches!(bad, Err(AlgebraError::Invalid { .. })));
    }
}
