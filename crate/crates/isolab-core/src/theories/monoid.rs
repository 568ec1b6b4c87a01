use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{structure} `{name}`: {message}")]
    Invalid {
        structure: &'static str,
        name: String,
        message: String,
    },
}

fn invalid(structure: &'static str, name: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Invalid {
        structure,
        name: name.to_string(),
        message: message.into(),
    }
}

/// A finite monoid given by a total multiplication table over indexed
/// elements with human-readable labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: u32,
    mul_table: Vec<Vec<u32>>,
}

impl FiniteMonoid {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        unit: u32,
        mul_table: Vec<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let name = name.into();
        let n = labels.len();
        let bad = |m: String| invalid("monoid", &name, m);
        if labels.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(bad("duplicate element labels".into()));
        }
        if (unit as usize) >= n {
            return Err(bad("unit index out of range".into()));
        }
        if mul_table.len() != n || mul_table.iter().any(|r| r.len() != n) {
            return Err(bad("multiplication table is not square".into()));
        }
        for row in &mul_table {
            for &v in row {
                if (v as usize) >= n {
                    return Err(bad("table entry out of range".into()));
                }
            }
        }
        let m = FiniteMonoid {
            name,
            labels,
            unit,
            mul_table,
        };
        for x in 0..n as u32 {
            if m.mul(m.unit, x) != x || m.mul(x, m.unit) != x {
                return Err(invalid(
                    "monoid",
                    &m.name,
                    format!("unit law fails at `{}`", m.labels[x as usize]),
                ));
            }
        }
        for x in 0..n as u32 {
            for y in 0..n as u32 {
                for z in 0..n as u32 {
                    if m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z)) {
                        return Err(invalid(
                            "monoid",
                            &m.name,
                            format!(
                                "associativity fails at ({}, {}, {})",
                                m.labels[x as usize], m.labels[y as usize], m.labels[z as usize]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul_table[a as usize][b as usize]
    }

    pub fn product(&self, elems: impl IntoIterator<Item = u32>) -> u32 {
        elems.into_iter().fold(self.unit, |acc, x| self.mul(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order() as u32;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: u32) -> &str {
        &self.labels[a as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    /// The two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: u32) -> Option<u32> {
        let n = self.order() as u32;
        (0..n).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    /// Indices of all invertible elements, in index order.
    pub fn invertible_elements(&self) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&a| self.inverse(a).is_some())
            .collect()
    }

    /// Elements commuting with everything, in index order.
    pub fn center(&self) -> Vec<u32> {
        let n = self.order() as u32;
        (0..n)
            .filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Eventual-cycle fingerprint of an element under repeated self-
    /// multiplication: (tail length, cycle length).  Invariant under
    /// isomorphism.
    fn power_profile(&self, a: u32) -> (usize, usize) {
        let mut seen = Vec::new();
        let mut x = a;
        loop {
            if let Some(i) = seen.iter().position(|&y| y == x) {
                return (i, seen.len() - i);
            }
            seen.push(x);
            x = self.mul(x, a);
        }
    }
}

/// A finite group: a monoid in which every element has an inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub monoid: FiniteMonoid,
    pub inv: Vec<u32>,
}

impl FiniteGroup {
    pub fn from_monoid(monoid: FiniteMonoid) -> Result<Self, AlgebraError> {
        let mut inv = Vec::with_capacity(monoid.order());
        for a in 0..monoid.order() as u32 {
            match monoid.inverse(a) {
                Some(b) => inv.push(b),
                None => {
                    return Err(invalid(
                        "group",
                        &monoid.name,
                        format!("element `{}` has no inverse", monoid.label(a)),
                    ))
                }
            }
        }
        Ok(FiniteGroup { monoid, inv })
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.monoid.mul(a, b)
    }

    pub fn unit(&self) -> u32 {
        self.monoid.unit
    }

    pub fn inverse(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }
}

/// Decide whether two finite monoids are isomorphic by backtracking over
/// unit-preserving bijections, pruning with power profiles and partial
/// table consistency.  Intended for small orders (tens of elements).
pub fn monoid_isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    let mut prof_a: Vec<(usize, usize)> = (0..n as u32).map(|x| a.power_profile(x)).collect();
    let mut prof_b: Vec<(usize, usize)> = (0..n as u32).map(|x| b.power_profile(x)).collect();
    {
        let mut sa = prof_a.clone();
        let mut sb = prof_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    prof_a[a.unit as usize] = (usize::MAX, usize::MAX);
    prof_b[b.unit as usize] = (usize::MAX, usize::MAX);

    let mut image: Vec<Option<u32>> = vec![None; n];
    let mut used = vec![false; n];
    image[a.unit as usize] = Some(b.unit);
    used[b.unit as usize] = true;
    let order: Vec<u32> = (0..n as u32).filter(|&x| x != a.unit).collect();

    fn consistent(
        a: &FiniteMonoid,
        b: &FiniteMonoid,
        image: &[Option<u32>],
        x: u32,
    ) -> bool {
        for y in 0..a.order() as u32 {
            let Some(fy) = image[y as usize] else { continue };
            let fx = image[x as usize].unwrap();
            for (p, fp) in [(a.mul(x, y), b.mul(fx, fy)), (a.mul(y, x), b.mul(fy, fx))] {
                if let Some(fp_assigned) = image[p as usize] {
                    if fp_assigned != fp {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        a: &FiniteMonoid,
        b: &FiniteMonoid,
        prof_a: &[(usize, usize)],
        prof_b: &[(usize, usize)],
        order: &[u32],
        at: usize,
        image: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&x) = order.get(at) else {
            // All assigned; partial-consistency checks along the way imply
            // full homomorphism, but re-verify for clarity.
            return (0..a.order() as u32).all(|p| {
                (0..a.order() as u32).all(|q| {
                    image[a.mul(p, q) as usize].unwrap()
                        == b.mul(image[p as usize].unwrap(), image[q as usize].unwrap())
                })
            });
        };
        for y in 0..b.order() as u32 {
            if used[y as usize] || prof_b[y as usize] != prof_a[x as usize] {
                continue;
            }
            image[x as usize] = Some(y);
            used[y as usize] = true;
            if consistent(a, b, image, x)
                && search(a, b, prof_a, prof_b, order, at + 1, image, used)
            {
                return true;
            }
            image[x as usize] = None;
            used[y as usize] = false;
        }
        false
    }

    search(a, b, &prof_a, &prof_b, &order, 0, &mut image, &mut used)
}

/// Enumerate all monoids of each order `1..=max_order`, up to isomorphism.
/// The unit is fixed as element 0 and tables are canonicalized by taking
/// the lexicographically least relabeling among unit-fixing permutations.
pub fn enumerate_monoids(max_order: usize) -> Vec<FiniteMonoid> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for table in canonical_tables(n) {
            let labels = (0..n)
                .map(|i| {
                    if i == 0 {
                        "e".to_string()
                    } else {
                        // a, b, c, ...
                        char::from(b'a' + (i as u8 - 1)).to_string()
                    }
                })
                .collect();
            let name = format!("monoid{}_{}", n, out.iter().filter(|m: &&FiniteMonoid| m.order() == n).count());
            out.push(FiniteMonoid::new(name, labels, 0, table).expect("enumerated table is a monoid"));
        }
    }
    out
}

fn canonical_tables(n: usize) -> Vec<Vec<Vec<u32>>> {
    // Free entries: the (n-1) x (n-1) block not involving the unit.
    let free = (n - 1) * (n - 1);
    let mut canonical: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut assignment = vec![0u32; free];
    loop {
        let mut table = vec![vec![0u32; n]; n];
        for i in 0..n {
            table[0][i] = i as u32;
            table[i][0] = i as u32;
        }
        for (k, &v) in assignment.iter().enumerate() {
            let i = 1 + k / (n - 1);
            let j = 1 + k % (n - 1);
            table[i][j] = v;
        }
        if is_associative(&table) {
            canonical.insert(canonicalize(&table));
        }
        // Advance the odometer.
        let mut k = 0;
        loop {
            if k == free {
                return canonical.into_iter().collect();
            }
            assignment[k] += 1;
            if assignment[k] < n as u32 {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

fn is_associative(t: &[Vec<u32>]) -> bool {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            let xy = t[x][y] as usize;
            for z in 0..n {
                if t[xy][z] != t[x][t[y][z] as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// Least table under all relabelings that fix the unit (element 0).
fn canonicalize(t: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = t.len();
    let mut best: Option<Vec<Vec<u32>>> = None;
    let mut perm: Vec<u32> = (0..n as u32).collect();
    permute_rest(&mut perm, 1, &mut |p| {
        let mut relabeled = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                relabeled[p[i] as usize][p[j] as usize] = p[t[i][j] as usize];
            }
        }
        if best.as_ref().map_or(true, |b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap()
}

fn permute_rest(perm: &mut Vec<u32>, from: usize, visit: &mut impl FnMut(&[u32])) {
    if from >= perm.len() {
        visit(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_rest(perm, from + 1, visit);
        perm.swap(from, i);
    }
}
