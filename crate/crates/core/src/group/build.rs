use std::collections::HashMap;

use super::{ops, Element, Group, Permutation, Subgroup, DEFAULT_MAX_ORDER, IDENTITY};
use crate::bitset::BitSet;
use crate::error::{Axiom, Error, Result};

impl Group {
    /// Wraps a table already known to satisfy the group axioms.
    pub(crate) fn from_table_unchecked(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        max_order_cap: usize,
        generators: Option<Vec<Element>>,
    ) -> Group {
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverse[a] = row.iter().position(|&x| x == 0).expect("row without identity") as u32;
        }
        let mut g = Group {
            name: name.into(),
            order,
            table,
            inverse,
            generators: Vec::new(),
            max_order_cap,
        };
        g.generators = match generators {
            Some(gens) => gens,
            None => ops::small_generating_set(&g),
        };
        g
    }

    /// Closes `generators` under composition. Elements are numbered
    /// breadth-first from the identity; each new layer is sorted by image tuple.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Permutation],
    ) -> Result<Group> {
        Self::from_permutations_with_cap(name, degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutations_with_cap(
        name: impl Into<String>,
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Group> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {:?} has degree {}, expected {degree}",
                    g.images(),
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut fresh: Vec<Permutation> = Vec::new();
            for &x in &layer {
                for g in generators {
                    let y = elements[x].then(g);
                    if !index.contains_key(&y) && !fresh.contains(&y) {
                        fresh.push(y);
                    }
                }
            }
            fresh.sort();
            layer.clear();
            for y in fresh {
                if elements.len() >= cap {
                    return Err(Error::ClosureExceedsCap { cap });
                }
                index.insert(y.clone(), elements.len());
                layer.push(elements.len());
                elements.push(y);
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i * n + j] = index[&a.then(b)] as u32;
            }
        }
        let gens = generators.iter().map(|g| index[g]).collect();
        Ok(Self::from_table_unchecked(name, n, table, cap, Some(gens)))
    }

    /// Validates a Cayley table: identity at index 0, Latin rows and columns,
    /// associativity.
    pub fn from_cayley_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Group> {
        Self::from_cayley_table_with_cap(name, table, DEFAULT_MAX_ORDER)
    }

    pub fn from_cayley_table_with_cap(
        name: impl Into<String>,
        table: &[Vec<usize>],
        cap: usize,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup { axiom: Axiom::Shape, witness: vec![] });
        }
        if n > cap {
            return Err(Error::ClosureExceedsCap { cap });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup { axiom: Axiom::Shape, witness: vec![i] });
            }
            if let Some(j) = row.iter().position(|&x| x >= n) {
                return Err(Error::NotAGroup { axiom: Axiom::Range, witness: vec![i, j] });
            }
        }
        for a in 0..n {
            if table[0][a] != a {
                return Err(Error::NotAGroup { axiom: Axiom::Identity, witness: vec![0, a] });
            }
            if table[a][0] != a {
                return Err(Error::NotAGroup { axiom: Axiom::Identity, witness: vec![a, 0] });
            }
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row_seen[table[a][b]], true) {
                    return Err(Error::NotAGroup { axiom: Axiom::Inverse, witness: vec![a, b] });
                }
                if std::mem::replace(&mut col_seen[table[b][a]], true) {
                    return Err(Error::NotAGroup { axiom: Axiom::Inverse, witness: vec![b, a] });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup {
                            axiom: Axiom::Associativity,
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        let flat = table.iter().flatten().map(|&x| x as u32).collect();
        Ok(Self::from_table_unchecked(name, n, flat, cap, None))
    }

    /// `A × B` on pairs `(a, b) ↦ a + |A|·b`.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
        let action = Action::trivial(a, b);
        Ok(Group::semidirect_product(a, b, &action)?.with_name(format!("{}x{}", a.name, b.name)))
    }

    /// `N ⋊ H` with `(n₁, h₁)(n₂, h₂) = (n₁ · h₁(n₂), h₁h₂)`; pairs are
    /// indexed as `n + |N|·h`.
    pub fn semidirect_product(n: &Group, h: &Group, action: &Action) -> Result<Group> {
        action.validate(n, h)?;
        let (nn, nh) = (n.order, h.order);
        let order = nn * nh;
        let cap = n.max_order_cap.max(h.max_order_cap);
        if order > cap {
            return Err(Error::ClosureExceedsCap { cap });
        }
        let mut table = vec![0u32; order * order];
        for h1 in 0..nh {
            for n1 in 0..nn {
                let x = n1 + nn * h1;
                for h2 in 0..nh {
                    let hh = h.mul(h1, h2);
                    for n2 in 0..nn {
                        let y = n2 + nn * h2;
                        let prod = n.mul(n1, action.images[h1][n2]) + nn * hh;
                        table[x * order + y] = prod as u32;
                    }
                }
            }
        }
        let mut gens: Vec<Element> = n.generators.clone();
        gens.extend(h.generators.iter().map(|&g| nn * g));
        gens.retain(|&g| g != IDENTITY);
        gens.dedup();
        Ok(Self::from_table_unchecked(
            format!("{}:{}", n.name, h.name),
            order,
            table,
            cap,
            Some(gens),
        ))
    }

    /// `H` as a group in its own right, with the embedding back into `self`.
    /// Elements keep their relative order, so the identity stays at 0.
    pub fn from_subgroup(&self, h: &Subgroup, name: impl Into<String>) -> (Group, Vec<Element>) {
        let embed: Vec<Element> = h.elements().collect();
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in embed.iter().enumerate() {
            local[g] = i;
        }
        let k = embed.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                table[i * k + j] = local[self.mul(a, b)] as u32;
            }
        }
        (
            Self::from_table_unchecked(name, k, table, self.max_order_cap, None),
            embed,
        )
    }

    /// Renumbers elements by `perm` (old index ↦ new index). `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Group> {
        let p = Permutation::from_images(perm.to_vec())?;
        if p.degree() != self.order || perm[0] != IDENTITY {
            return Err(Error::BadParameters(
                "relabelling must fix the identity and cover every element".into(),
            ));
        }
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        let gens = self.generators.iter().map(|&g| perm[g]).collect();
        Ok(Self::from_table_unchecked(self.name.clone(), n, table, self.max_order_cap, Some(gens)))
    }

    /// `G/N` on cosets ordered by least member, so the identity coset is 0.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        if !ops::is_normal(self, normal) {
            return Err(Error::NotNormal);
        }
        let n = self.order;
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if projection[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for k in normal.elements() {
                projection[self.mul(g, k)] = c;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = projection[self.mul(a, b)] as u32;
            }
        }
        let mut gens: Vec<Element> = self
            .generators
            .iter()
            .map(|&g| projection[g])
            .filter(|&c| c != IDENTITY)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        let group = Self::from_table_unchecked(
            format!("{}/N{}", self.name, normal.order()),
            m,
            table,
            self.max_order_cap,
            Some(gens),
        );
        Ok(Quotient {
            group,
            projection,
            kernel: normal.clone(),
        })
    }
}

/// A quotient group together with its projection from the parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: Group,
    projection: Vec<Element>,
    kernel: Subgroup,
}

impl Quotient {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn projection(&self) -> &[Element] {
        &self.projection
    }

    pub fn project(&self, g: Element) -> Element {
        self.projection[g]
    }

    /// Least element of the coset `c`.
    pub fn representative(&self, c: Element) -> Element {
        self.projection
            .iter()
            .position(|&x| x == c)
            .expect("every coset is nonempty")
    }

    /// `HN/N`
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(
            self.group.order(),
            h.elements().map(|g| self.projection[g]),
        ))
    }

    pub fn preimage(&self, k: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(
            self.projection.len(),
            (0..self.projection.len()).filter(|&g| k.contains(self.projection[g])),
        ))
    }
}

/// A homomorphism `H → Aut(N)`, stored as one image table per element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    images: Vec<Vec<Element>>,
}

impl Action {
    pub fn trivial(n: &Group, h: &Group) -> Action {
        Action {
            images: vec![(0..n.order()).collect(); h.order()],
        }
    }

    /// Full table: `images[h][x]` is the image of `x ∈ N` under `h`.
    pub fn from_table(images: Vec<Vec<Element>>) -> Action {
        Action { images }
    }

    /// Extends automorphisms given on the generators of `h` to all of `h`.
    pub fn from_generator_images(
        n: &Group,
        h: &Group,
        generator_images: &[Vec<Element>],
    ) -> Result<Action> {
        if generator_images.len() != h.generators().len() {
            return Err(Error::NotAnAction(format!(
                "{} generator images for {} generators",
                generator_images.len(),
                h.generators().len()
            )));
        }
        let mut images: Vec<Option<Vec<Element>>> = vec![None; h.order()];
        images[IDENTITY] = Some((0..n.order()).collect());
        let mut frontier = vec![IDENTITY];
        while let Some(x) = frontier.pop() {
            for (&g, img) in h.generators().iter().zip(generator_images) {
                let xg = h.mul(x, g);
                let composed: Vec<Element> = {
                    let ax = images[x].as_ref().expect("visited");
                    img.iter().map(|&y| ax[y]).collect()
                };
                match &images[xg] {
                    Some(existing) if *existing != composed => {
                        return Err(Error::NotAnAction(format!(
                            "generator images are inconsistent at element {xg}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        images[xg] = Some(composed);
                        frontier.push(xg);
                    }
                }
            }
        }
        let images = images
            .into_iter()
            .map(|i| i.ok_or_else(|| Error::NotAnAction("generators do not generate".into())))
            .collect::<Result<_>>()?;
        Ok(Action { images })
    }

    pub fn image(&self, h: Element, x: Element) -> Element {
        self.images[h][x]
    }

    fn validate(&self, n: &Group, h: &Group) -> Result<()> {
        if self.images.len() != h.order() {
            return Err(Error::NotAnAction(format!(
                "action has {} entries, acting group has order {}",
                self.images.len(),
                h.order()
            )));
        }
        for (x, img) in self.images.iter().enumerate() {
            if img.len() != n.order() || Permutation::from_images(img.clone()).is_err() {
                return Err(Error::NotAnAction(format!("image of {x} is not a bijection")));
            }
            for a in 0..n.order() {
                for b in 0..n.order() {
                    if img[n.mul(a, b)] != n.mul(img[a], img[b]) {
                        return Err(Error::NotAnAction(format!(
                            "image of {x} is not a homomorphism at ({a}, {b})"
                        )));
                    }
                }
            }
        }
        for x in 0..h.order() {
            for y in 0..h.order() {
                let xy = &self.images[h.mul(x, y)];
                let composed = (0..n.order()).all(|a| xy[a] == self.images[x][self.images[y][a]]);
                if !composed {
                    return Err(Error::NotAnAction(format!(
                        "action does not respect the product of {x} and {y}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(deg: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(deg, &cycles).unwrap()
    }

    fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn permutation_closures() {
        let s3 = Group::from_permutations("S3", 3, &[perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(s3.order(), 6);
        let a4 = Group::from_permutations(
            "A4",
            4,
            &[perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]]), perm(4, &[&[1, 2, 3]])],
        )
        .unwrap();
        assert_eq!(a4.order(), 12);
        let trivial = Group::from_permutations("1", 1, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn permutation_cap_and_errors() {
        let gens = [perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[0, 1]])];
        assert!(matches!(
            Group::from_permutations_with_cap("S5", 5, &gens, 100),
            Err(Error::ClosureExceedsCap { cap: 100 })
        ));
        assert!(Group::from_permutations_with_cap("S5", 5, &gens, 120).is_ok());
        assert!(matches!(
            Group::from_permutations("bad", 4, &[perm(3, &[&[0, 1]])]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn bfs_ordering_is_deterministic() {
        let gens = [perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 1]])];
        let a = Group::from_permutations("S4", 4, &gens).unwrap();
        let b = Group::from_permutations("S4", 4, &gens).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cayley_tables() {
        assert_eq!(Group::from_cayley_table("1", &[vec![0]]).unwrap().order(), 1);
        let z4 = Group::from_cayley_table("Z4", &cyclic_table(4)).unwrap();
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.element_order(1), 4);

        // Latin loop of order 5 in which every element is an involution.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match Group::from_cayley_table("loop", &loop5) {
            Err(Error::NotAGroup { axiom: Axiom::Associativity, witness }) => {
                let (a, b, c) = (witness[0], witness[1], witness[2]);
                assert_ne!(loop5[loop5[a][b]][c], loop5[a][loop5[b][c]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
        assert!(matches!(
            Group::from_cayley_table("bad", &[vec![0, 1], vec![1, 1]]),
            Err(Error::NotAGroup { axiom: Axiom::Inverse, .. })
        ));
        assert!(matches!(
            Group::from_cayley_table("bad", &[vec![0, 2], vec![1, 0]]),
            Err(Error::NotAGroup { axiom: Axiom::Range, .. })
        ));
        assert!(matches!(
            Group::from_cayley_table("bad", &[vec![1, 0], vec![0, 1]]),
            Err(Error::NotAGroup { axiom: Axiom::Identity, .. })
        ));
    }

    #[test]
    fn products() {
        let c7 = Group::from_cayley_table("C7", &cyclic_table(7)).unwrap();
        let c6 = Group::from_cayley_table("C6", &cyclic_table(6)).unwrap();
        // 3 is a primitive root mod 7; h acts as multiplication by 3^h.
        let images = (0..6)
            .map(|h| (0..7).map(|x| x * 3usize.pow(h as u32) % 7).collect())
            .collect();
        let hol = Group::semidirect_product(&c7, &c6, &Action::from_table(images)).unwrap();
        assert_eq!(hol.order(), 42);
        assert!(!ops::is_abelian(&hol));

        let bad = Action::from_table(vec![(0..7).map(|x| x * 2 % 7).collect(); 6]);
        assert!(matches!(
            Group::semidirect_product(&c7, &c6, &bad),
            Err(Error::NotAnAction(_))
        ));
    }

    #[test]
    fn quotient_basics() {
        let z4 = Group::from_cayley_table("Z4", &cyclic_table(4)).unwrap();
        let q = z4.quotient(&z4.trivial_subgroup()).unwrap();
        assert_eq!(q.group().table(), z4.table());
        let q = z4.quotient(&z4.whole()).unwrap();
        assert_eq!(q.group().order(), 1);
        let s3 = Group::from_permutations("S3", 3, &[perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])]).unwrap();
        let c2 = ops::subgroup_generated(&s3, &[s3.generators()[1]]);
        assert!(matches!(s3.quotient(&c2), Err(Error::NotNormal)));
    }
}
