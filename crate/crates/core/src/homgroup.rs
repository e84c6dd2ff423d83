//! Finite groups with an automorphism, the Hom-groups built from them, and
//! their linearization to Hom-group algebras.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::homalgebra::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra};
use crate::homspace::HomObject;
use crate::kernel::Matrix;
use crate::report::{tuples, AxiomResult, Report};
use crate::scalar::Scalar;

/// A group given by its Cayley table on elements `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// A permutation of the elements of a group respecting its product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    perm: Vec<usize>,
}

/// `(G, φ)` with product `g·h = φ(gh)`, comultiplication
/// `δ(g) = (φ⁻¹(g), φ⁻¹(g))` and antipode `g ↦ g⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGroup {
    group: FiniteGroup,
    phi: GroupAutomorphism,
    phi_inv: GroupAutomorphism,
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput(
                "a group has at least one element".into(),
            ));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidInput(
                "Cayley table must be square with entries in range".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidInput("Cayley table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for (g, row) in table.iter().enumerate() {
            let h = (0..n)
                .find(|&h| row[h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {g} has no inverse")))?;
            inverse.push(h);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!(
                            "product is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// `C_n` on `0..n`, element `k` standing for `g^k`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group of order 0".into()));
    }
    FiniteGroup::new(
        (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect(),
    )
}

/// All permutations of `0..n` in lexicographic order, `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 5 {
        return Err(Error::ResourceLimit(format!(
            "symmetric group on {n} points"
        )));
    }
    let perms = permutations(n);
    let index = |p: &Vec<usize>| {
        perms
            .iter()
            .position(|q| q == p)
            .expect("closed under composition")
    };
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                .collect()
        })
        .collect();
    FiniteGroup::new(table)
}

/// Elements of [`symmetric_group`] as permutations, in the same order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `G × H` on pairs `(g, h) ↦ g·|H| + h`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (a.order(), b.order());
    let table = (0..n * m)
        .map(|x| {
            (0..n * m)
                .map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
                .collect()
        })
        .collect();
    FiniteGroup::new(table).expect("product of groups is a group")
}

impl GroupAutomorphism {
    pub fn new(group: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        let n = group.order();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::NotAutomorphism(
                "map is not a bijection of the group".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                if perm[group.mul(a, b)] != group.mul(perm[a], perm[b]) {
                    return Err(Error::NotAutomorphism(format!(
                        "φ({a}·{b}) ≠ φ({a})·φ({b})"
                    )));
                }
            }
        }
        Ok(GroupAutomorphism { perm })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism {
            perm: (0..group.order()).collect(),
        }
    }

    pub fn apply(&self, g: usize) -> usize {
        self.perm[g]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (g, &h) in self.perm.iter().enumerate() {
            inv[h] = g;
        }
        GroupAutomorphism { perm: inv }
    }

    /// Linearization `e_g ↦ e_{φ(g)}`.
    pub fn matrix<F: Scalar>(&self) -> Matrix<F> {
        Matrix::permutation(&self.perm)
    }
}

/// `g ↦ g^k`; for cyclic groups this is an automorphism iff `gcd(k, n) = 1`.
pub fn automorphism_from_exponent(group: &FiniteGroup, k: u64) -> Result<GroupAutomorphism> {
    let n = group.order() as u64;
    let g = k.gcd(&n);
    let perm: Vec<usize> = (0..group.order()).map(|x| group.pow(x, k)).collect();
    GroupAutomorphism::new(group, perm).map_err(|_| {
        Error::NotAutomorphism(format!(
            "x ↦ x^{k} is not an automorphism of a group of order {n} (gcd {g})"
        ))
    })
}

/// Conjugation `x ↦ t x t⁻¹`.
pub fn inner_automorphism(group: &FiniteGroup, t: usize) -> GroupAutomorphism {
    let perm = (0..group.order())
        .map(|x| group.mul(group.mul(t, x), group.inverse(t)))
        .collect();
    GroupAutomorphism::new(group, perm).expect("conjugation is an automorphism")
}

/// Every automorphism, found by extending partial assignments in index order.
pub fn automorphisms(group: &FiniteGroup) -> Vec<GroupAutomorphism> {
    let n = group.order();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(group: &FiniteGroup, image: &[usize]) -> bool {
        let n = group.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (ia, ib, iab) = (image[a], image[b], image[group.mul(a, b)]);
                ia == usize::MAX
                    || ib == usize::MAX
                    || iab == usize::MAX
                    || iab == group.mul(ia, ib)
            })
        })
    }
    fn go(
        group: &FiniteGroup,
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<GroupAutomorphism>,
    ) {
        let n = group.order();
        if k == n {
            out.push(GroupAutomorphism {
                perm: image.clone(),
            });
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            image[k] = v;
            used[v] = true;
            if consistent(group, image) {
                go(group, k + 1, image, used, out);
            }
            used[v] = false;
            image[k] = usize::MAX;
        }
    }
    go(group, 0, &mut image, &mut used, &mut out);
    out
}

pub fn hom_group(group: &FiniteGroup, phi: &GroupAutomorphism) -> HomGroup {
    HomGroup {
        group: group.clone(),
        phi: phi.clone(),
        phi_inv: phi.inverse(),
    }
}

impl HomGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn phi(&self) -> &GroupAutomorphism {
        &self.phi
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn product(&self, g: usize, h: usize) -> usize {
        self.phi.apply(self.group.mul(g, h))
    }

    pub fn unit(&self) -> usize {
        self.group.identity()
    }

    pub fn coproduct(&self, g: usize) -> (usize, usize) {
        let x = self.phi_inv.apply(g);
        (x, x)
    }

    pub fn antipode(&self, g: usize) -> usize {
        self.group.inverse(g)
    }

    /// Set-level Hom-monoid, Hom-comonoid and antipode laws.
    pub fn check(&self) -> Report {
        let n = self.order();
        let phi = |g| self.phi.apply(g);
        let phi_inv = |g| self.phi_inv.apply(g);
        let mut r = Report::new("hom-group");
        r.push(AxiomResult::scan("hom_associativity", tuples(n, 3), |t| {
            let lhs = self.product(phi(t[0]), self.product(t[1], t[2]));
            let rhs = self.product(self.product(t[0], t[1]), phi(t[2]));
            (lhs != rhs).then(|| format!("{lhs} vs {rhs}"))
        }));
        r.push(AxiomResult::scan("hom_unitality", tuples(n, 1), |t| {
            let g = t[0];
            let (a, b) = (self.product(g, self.unit()), self.product(self.unit(), g));
            (a != phi(g) || b != phi(g)).then(|| format!("g·1 = {a}, 1·g = {b}, φ(g) = {}", phi(g)))
        }));
        r.push(AxiomResult::scan("multiplicativity", tuples(n, 2), |t| {
            let lhs = phi(self.product(t[0], t[1]));
            let rhs = self.product(phi(t[0]), phi(t[1]));
            (lhs != rhs).then(|| format!("{lhs} vs {rhs}"))
        }));
        r.push(AxiomResult::scan(
            "hom_coassociativity",
            tuples(n, 1),
            |t| {
                let (a, b) = self.coproduct(t[0]);
                let (b1, b2) = self.coproduct(b);
                let (a1, a2) = self.coproduct(a);
                ((phi_inv(a), b1, b2) != (a1, a2, phi_inv(b)))
                    .then(|| "coproducts differ".to_string())
            },
        ));
        r.push(AxiomResult::scan("counit_law", tuples(n, 1), |t| {
            let (a, b) = self.coproduct(t[0]);
            (a != phi_inv(t[0]) || b != phi_inv(t[0]))
                .then(|| "δ components are not φ⁻¹(g)".to_string())
        }));
        r.push(AxiomResult::scan("antipode", tuples(n, 1), |t| {
            let (a, b) = self.coproduct(t[0]);
            let l = self.product(self.antipode(a), b);
            let rr = self.product(a, self.antipode(b));
            (l != self.unit() || rr != self.unit())
                .then(|| format!("S∗id gives {l}, id∗S gives {rr}"))
        }));
        r
    }

    /// The Hom-group algebra on the free vector space with basis `G`.
    pub fn linearize<F: Scalar>(&self) -> HomHopfAlgebra<F> {
        let n = self.order();
        let obj = HomObject::new(self.phi.matrix()).expect("permutation matrices are invertible");
        let mut mult = Matrix::zeros(n, n * n);
        let mut comult = Matrix::zeros(n * n, n);
        let mut antipode = Matrix::zeros(n, n);
        for g in 0..n {
            for h in 0..n {
                mult.set(self.product(g, h), g * n + h, F::one());
            }
            let (a, b) = self.coproduct(g);
            comult.set(a * n + b, g, F::one());
            antipode.set(self.antipode(g), g, F::one());
        }
        let mut unit = vec![F::zero(); n];
        unit[self.unit()] = F::one();
        let algebra = HomAlgebra::new(obj.clone(), mult, unit).expect("shapes agree");
        let coalgebra = HomCoalgebra::new(obj, comult, vec![F::one(); n]).expect("shapes agree");
        let bialgebra = HomBialgebra::new(algebra, coalgebra).expect("same object");
        HomHopfAlgebra::new(bialgebra, antipode).expect("square antipode")
    }
}
