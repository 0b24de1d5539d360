//! Named groups and parameterized families, plus the standard test suite with
//! its golden classification table.
//!
//! Names understood by [`construct`]:
//!
//! | name | group |
//! |------|-------|
//! | `1`, `C<n>` | cyclic of order `n` |
//! | `C<p>^<k>`, `V4` | elementary abelian of order `p^k` |
//! | `D<2n>` | dihedral of order `2n` |
//! | `Q8` | quaternion group |
//! | `S<n>`, `A<n>` | symmetric / alternating, `n ≤ 5` |
//! | `SL23` | `Q8 ⋊ C3`, the shape of `SL(2,3)` |
//! | `hol_C<p>` | `C_p ⋊ Aut(C_p)` |
//! | `C<n>:C<m>` | `C_n ⋊ C_m`, generator acting by inversion |
//! | `pq2_<p>_<q>` | `C_q² ⋊ C_p`, acting irreducibly |
//! | `pgroup_<p>_<k>_<q>_<r>` | `C_p^k ⋊ C_q`, generator acting as `a ↦ a^r` |
//! | `AxB` | direct product of named factors |

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{is_prime, Action, Group, Permutation, DEFAULT_MAX_ORDER};

pub fn construct(name: &str) -> Result<Group> {
    construct_with_cap(name, DEFAULT_MAX_ORDER)
}

pub fn construct_with_cap(name: &str, cap: usize) -> Result<Group> {
    let name = name.trim();
    let parts: Vec<&str> = name.split('x').collect();
    let group = if parts.len() > 1 {
        let mut acc = construct_factor(parts[0], cap)?;
        for p in &parts[1..] {
            let next = construct_factor(p, cap)?;
            check_cap(acc.order() * next.order(), cap)?;
            acc = Group::direct_product(&acc, &next)?;
        }
        acc
    } else {
        construct_factor(name, cap)?
    };
    check_cap(group.order(), cap)?;
    Ok(group.with_name(name).with_cap(cap))
}

fn construct_factor(name: &str, cap: usize) -> Result<Group> {
    let unknown = || Error::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<u64>().map_err(|_| unknown());
    match name {
        "1" => return cyclic(1),
        "V4" => return elementary_abelian(2, 2),
        "Q8" => return Ok(quaternion8()),
        "SL23" | "SL(2,3)" => return Ok(sl23()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("hol_C") {
        return holomorph_cyclic(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("pq2_") {
        let v: Vec<&str> = rest.split('_').collect();
        if v.len() != 2 {
            return Err(unknown());
        }
        return pq2(num(v[0])?, num(v[1])?);
    }
    if let Some(rest) = name.strip_prefix("pgroup_") {
        let v: Vec<u64> = rest.split('_').map(num).collect::<Result<_>>()?;
        if v.len() != 4 {
            return Err(unknown());
        }
        return p_group(v[0], v[1] as u32, v[2], v[3]);
    }
    if let Some((left, right)) = name.split_once(':') {
        let n = num(left.strip_prefix('C').ok_or_else(unknown)?)?;
        let m = num(right.strip_prefix('C').ok_or_else(unknown)?)?;
        return cyclic_by_inversion(n, m);
    }
    if let Some(rest) = name.strip_prefix('C') {
        if let Some((p, k)) = rest.split_once('^') {
            return elementary_abelian(num(p)?, num(k)? as u32);
        }
        let n = num(rest)?;
        check_cap(n as usize, cap)?;
        return cyclic(n);
    }
    if let Some(rest) = name.strip_prefix('D') {
        let m = num(rest)?;
        check_cap(m as usize, cap)?;
        return dihedral(m);
    }
    if let Some(rest) = name.strip_prefix('S') {
        return symmetric_with_cap(num(rest)? as usize, cap);
    }
    if let Some(rest) = name.strip_prefix('A') {
        return alternating_with_cap(num(rest)? as usize, cap);
    }
    Err(unknown())
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::ClosureExceedsCap { cap })
    } else {
        Ok(())
    }
}

/// Table groups whose axioms hold by construction; tests re-check them.
fn table_group(name: String, n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Group> {
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| op(a, b) as u32)
        .collect();
    Ok(Group::from_table_unchecked(name, n, table, n.max(DEFAULT_MAX_ORDER), None))
}

pub fn cyclic(n: u64) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameters("cyclic group of order 0".into()));
    }
    let n = n as usize;
    table_group(format!("C{n}"), n, |a, b| (a + b) % n)
}

/// `(C_p)^k` on base-`p` digit vectors.
pub fn elementary_abelian(p: u64, k: u32) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as usize;
    let n = p.pow(k);
    check_cap(n, DEFAULT_MAX_ORDER)?;
    table_group(format!("C{p}^{k}"), n, |a, b| vec_add(a, b, p, k))
}

fn vec_add(a: usize, b: usize, p: usize, k: u32) -> usize {
    let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
    for _ in 0..k {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Dihedral group of order `m` (`m` even), as `C_{m/2} ⋊ C_2` with inversion.
pub fn dihedral(m: u64) -> Result<Group> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::BadParameters(format!("dihedral order {m} must be even")));
    }
    Ok(cyclic_by_inversion(m / 2, 2)?.with_name(format!("D{m}")))
}

/// `C_n ⋊ C_m` where a generator of `C_m` inverts `C_n`.
pub fn cyclic_by_inversion(n: u64, m: u64) -> Result<Group> {
    if m == 0 || (m % 2 == 1 && n > 2) {
        return Err(Error::BadParameters(format!(
            "C{m} cannot act on C{n} by inversion"
        )));
    }
    let cn = cyclic(n)?;
    let cm = cyclic(m)?;
    let (n, m) = (n as usize, m as usize);
    let images = (0..m)
        .map(|h| {
            (0..n)
                .map(|x| if h % 2 == 0 { x } else { (n - x) % n })
                .collect()
        })
        .collect();
    Ok(Group::semidirect_product(&cn, &cm, &Action::from_table(images))?
        .with_name(format!("C{n}:C{m}")))
}

/// Quaternion group on `(sign, unit)` pairs, index `unit + 4·sign`, units `1, i, j, k`.
pub fn quaternion8() -> Group {
    table_group("Q8".into(), 8, |a, b| {
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (s, u) = unit_product(ua, ub);
        u + 4 * ((sa + sb + s) % 2)
    })
    .expect("quaternion table is a group")
}

fn unit_product(a: usize, b: usize) -> (usize, usize) {
    // (sign, unit) for units 0=1, 1=i, 2=j, 3=k
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    T[a][b]
}

/// `Q8 ⋊ C3` with the generator cycling `i → j → k`.
pub fn sl23() -> Group {
    let q8 = quaternion8();
    let c3 = cyclic(3).expect("C3");
    let rotate = |x: usize, h: usize| {
        let (s, u) = (x / 4, x % 4);
        let u = if u == 0 { 0 } else { (u - 1 + h) % 3 + 1 };
        u + 4 * s
    };
    let images = (0..3).map(|h| (0..8).map(|x| rotate(x, h)).collect()).collect();
    Group::semidirect_product(&q8, &c3, &Action::from_table(images))
        .expect("cyclic rotation of i, j, k is an automorphism")
        .with_name("SL23")
}

pub fn symmetric(n: usize) -> Result<Group> {
    symmetric_with_cap(n, DEFAULT_MAX_ORDER)
}

fn symmetric_with_cap(n: usize, cap: usize) -> Result<Group> {
    if !(1..=5).contains(&n) {
        return Err(Error::BadParameters(format!("symmetric degree {n} outside 1..=5")));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    Group::from_permutations_with_cap(format!("S{n}"), n, &gens, cap)
}

pub fn alternating(n: usize) -> Result<Group> {
    alternating_with_cap(n, DEFAULT_MAX_ORDER)
}

fn alternating_with_cap(n: usize, cap: usize) -> Result<Group> {
    if !(1..=5).contains(&n) {
        return Err(Error::BadParameters(format!("alternating degree {n} outside 1..=5")));
    }
    let gens = if n == 4 {
        vec![
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
            Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
            Permutation::from_cycles(4, &[vec![1, 2, 3]])?,
        ]
    } else {
        (2..n)
            .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]))
            .collect::<Result<_>>()?
    };
    Group::from_permutations_with_cap(format!("A{n}"), n, &gens, cap)
}

/// Least primitive root modulo the prime `p`.
pub fn least_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    (2..p)
        .find(|&r| multiplicative_order(r, p) == p - 1)
        .ok_or_else(|| Error::BadParameters(format!("no primitive root mod {p}")))
}

fn multiplicative_order(r: u64, p: u64) -> u64 {
    let mut x = r % p;
    let mut k = 1;
    while x != 1 {
        x = x * r % p;
        k += 1;
    }
    k
}

/// `C_p ⋊ Aut(C_p)`, with `h ∈ C_{p-1}` acting as multiplication by `r^h` for
/// the least primitive root `r`.
pub fn holomorph_cyclic(p: u64) -> Result<Group> {
    let r = least_primitive_root(p)?;
    let cp = cyclic(p)?;
    let ch = cyclic(p - 1)?;
    let images = (0..p - 1)
        .map(|h| {
            let f = mod_pow(r, h, p);
            (0..p).map(|x| (x * f % p) as usize).collect()
        })
        .collect();
    Ok(Group::semidirect_product(&cp, &ch, &Action::from_table(images))?
        .with_name(format!("hol_C{p}")))
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let (mut acc, mut b) = (1 % m, b % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `C_p^k ⋊ C_q` with the generator acting as the power map `a ↦ a^r`.
pub fn p_group(p: u64, k: u32, q: u64, r: u64) -> Result<Group> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if p == q {
        return Err(Error::BadParameters("p and q must differ".into()));
    }
    if mod_pow(r, q, p) != 1 % p {
        return Err(Error::BadParameters(format!("{r}^{q} is not 1 mod {p}")));
    }
    let a = elementary_abelian(p, k)?;
    let cq = cyclic(q)?;
    let (pu, n) = (p as usize, a.order());
    let scale = |x: usize, f: u64| {
        let (mut x, mut out, mut place) = (x, 0, 1);
        for _ in 0..k {
            out += ((x % pu) * f as usize % pu) * place;
            x /= pu;
            place *= pu;
        }
        out
    };
    let images = (0..q)
        .map(|h| {
            let f = mod_pow(r, h, p);
            (0..n).map(|x| scale(x, f)).collect()
        })
        .collect();
    Ok(Group::semidirect_product(&a, &cq, &Action::from_table(images))?
        .with_name(format!("pgroup_{p}_{k}_{q}_{r}")))
}

type Mat2 = [u64; 4];

fn mat_mul(a: Mat2, b: Mat2, q: u64) -> Mat2 {
    [
        (a[0] * b[0] + a[1] * b[2]) % q,
        (a[0] * b[1] + a[1] * b[3]) % q,
        (a[2] * b[0] + a[3] * b[2]) % q,
        (a[2] * b[1] + a[3] * b[3]) % q,
    ]
}

fn mat_apply(m: Mat2, x: u64, y: u64, q: u64) -> (u64, u64) {
    ((m[0] * x + m[1] * y) % q, (m[2] * x + m[3] * y) % q)
}

/// `C_q² ⋊ C_p` where the generator acts by the first (lexicographic) matrix of
/// order `p` in `GL(2, q)` with no invariant line.
pub fn pq2(p: u64, q: u64) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    const IDENT: Mat2 = [1, 0, 0, 1];
    let order_is_p = |m: Mat2| {
        let mut x = m;
        for _ in 1..p {
            if x == IDENT {
                return false;
            }
            x = mat_mul(x, m, q);
        }
        x == IDENT
    };
    let irreducible = |m: Mat2| {
        (0..q).all(|x| {
            (0..q).all(|y| {
                if x == 0 && y == 0 {
                    return true;
                }
                let (u, v) = mat_apply(m, x, y, q);
                // (u, v) parallel to (x, y) iff the determinant vanishes.
                (u * y + q * q - v * x % q) % q != 0
            })
        })
    };
    let mut found = None;
    'search: for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = [a, b, c, d];
                    if order_is_p(m) && irreducible(m) {
                        found = Some(m);
                        break 'search;
                    }
                }
            }
        }
    }
    let m = found.ok_or_else(|| {
        Error::BadParameters(format!("GL(2,{q}) has no irreducible element of order {p}"))
    })?;
    let n = elementary_abelian(q, 2)?;
    let cp = cyclic(p)?;
    let qu = q as usize;
    let mut images = Vec::new();
    let mut power = IDENT;
    for _ in 0..p {
        images.push(
            (0..qu * qu)
                .map(|v| {
                    let (x, y) = ((v % qu) as u64, (v / qu) as u64);
                    let (u, w) = mat_apply(power, x, y, q);
                    u as usize + qu * w as usize
                })
                .collect(),
        );
        power = mat_mul(power, m, q);
    }
    Ok(Group::semidirect_product(&n, &cp, &Action::from_table(images))?
        .with_name(format!("pq2_{p}_{q}")))
}

/// Where an expected classification value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated outright in the literature.
    Published,
    /// Worked out by hand or by independent computation.
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: bool,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    /// Profile fields asserted for this group, keyed by `ClassProfile` field name.
    pub expected: BTreeMap<String, Expectation>,
}

impl CatalogEntry {
    fn new(name: &str, fields: &[(&str, bool, Source)]) -> Self {
        CatalogEntry {
            name: name.to_string(),
            expected: fields
                .iter()
                .map(|&(k, value, source)| (k.to_string(), Expectation { value, source }))
                .collect(),
        }
    }

    pub fn construct(&self) -> Result<Group> {
        construct(&self.name)
    }
}

/// Groups exercised by the verification suite, with their golden fields.
pub fn standard_suite() -> Vec<CatalogEntry> {
    use Source::{Computed as C, Published as P};
    let abelian = |name: &str| {
        CatalogEntry::new(
            name,
            &[
                ("abelian", true, C),
                ("nilpotent", true, C),
                ("strongly_supersoluble", true, C),
                ("nearly_nilpotent", true, C),
                ("p_group_schmidt", false, C),
                ("schmidt_group", false, C),
            ],
        )
    };
    vec![
        CatalogEntry::new(
            "1",
            &[
                ("abelian", true, C),
                ("nilpotent", true, C),
                ("soluble", true, C),
                ("supersoluble", true, C),
                ("strongly_supersoluble", true, C),
                ("nearly_nilpotent", true, C),
                ("p_group_schmidt", false, C),
                ("schmidt_group", false, C),
                ("u_critical", false, C),
                ("ore_dispersive", true, C),
            ],
        ),
        abelian("C2"),
        abelian("C4"),
        abelian("C6"),
        abelian("C12"),
        abelian("V4"),
        abelian("C3^2"),
        CatalogEntry::new(
            "S3",
            &[
                ("nearly_nilpotent", true, P),
                ("nilpotent", false, P),
                ("abelian", false, C),
                ("soluble", true, C),
                ("supersoluble", true, C),
                ("p_group_schmidt", true, C),
                ("schmidt_group", true, C),
                ("ore_dispersive", true, C),
            ],
        ),
        CatalogEntry::new(
            "S3xC2",
            &[("supersoluble", true, C), ("nilpotent", false, C), ("p_group_schmidt", false, C)],
        ),
        CatalogEntry::new(
            "D8",
            &[("nilpotent", true, C), ("abelian", false, C), ("nearly_nilpotent", true, C)],
        ),
        CatalogEntry::new(
            "Q8",
            &[("nilpotent", true, C), ("abelian", false, C), ("p_group_schmidt", false, C)],
        ),
        CatalogEntry::new(
            "C3:C4",
            &[
                ("supersoluble", true, C),
                ("nilpotent", false, C),
                ("nearly_nilpotent", true, C),
                ("schmidt_group", true, C),
                ("p_group_schmidt", false, C),
            ],
        ),
        CatalogEntry::new(
            "A4",
            &[
                ("supersoluble", false, P),
                ("soluble", true, C),
                ("nilpotent", false, C),
                ("u_critical", true, C),
                ("schmidt_group", true, C),
                ("ore_dispersive", false, C),
            ],
        ),
        CatalogEntry::new(
            "S4",
            &[("soluble", true, C), ("supersoluble", false, C), ("u_critical", false, C)],
        ),
        CatalogEntry::new(
            "SL23",
            &[("supersoluble", false, C), ("u_critical", true, C), ("soluble", true, C)],
        ),
        CatalogEntry::new(
            "hol_C5",
            &[("supersoluble", true, C), ("strongly_supersoluble", false, C)],
        ),
        CatalogEntry::new(
            "hol_C7",
            &[
                ("strongly_supersoluble", true, P),
                ("nearly_nilpotent", false, P),
                ("supersoluble", true, C),
            ],
        ),
        CatalogEntry::new(
            "hol_C13",
            &[
                ("supersoluble", true, P),
                ("strongly_supersoluble", false, P),
                ("nearly_nilpotent", false, C),
            ],
        ),
        CatalogEntry::new(
            "A4xC2",
            &[("supersoluble", false, C), ("soluble", true, C), ("u_critical", false, C)],
        ),
        CatalogEntry::new(
            "pq2_3_5",
            &[("supersoluble", false, C), ("u_critical", true, C), ("schmidt_group", true, C)],
        ),
        CatalogEntry::new(
            "pgroup_3_2_2_2",
            &[("p_group_schmidt", true, C), ("nearly_nilpotent", true, C)],
        ),
        CatalogEntry::new(
            "pgroup_7_1_3_2",
            &[("p_group_schmidt", true, C), ("nearly_nilpotent", true, C)],
        ),
        CatalogEntry::new("A5", &[("soluble", false, C), ("u_critical", false, C)]),
        CatalogEntry::new("S5", &[("soluble", false, C)]),
    ]
}

/// Looks up a suite entry by name.
pub fn suite_entry(name: &str) -> Option<CatalogEntry> {
    standard_suite().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic, is_abelian};

    #[test]
    fn orders() {
        for (name, order) in [
            ("1", 1),
            ("S3", 6),
            ("hol_C7", 42),
            ("hol_C13", 156),
            ("A4xC2", 24),
            ("SL23", 24),
            ("Q8", 8),
            ("D8", 8),
            ("C3:C4", 12),
            ("C3^2", 9),
            ("pq2_3_5", 75),
            ("pq2_3_2", 12),
            ("S5", 120),
            ("A5", 60),
        ] {
            assert_eq!(construct(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(construct("Z7"), Err(Error::UnknownName(_))));
        assert!(matches!(construct("S6"), Err(Error::BadParameters(_))));
        assert!(matches!(construct("pq2_2_3"), Err(Error::BadParameters(_))));
        assert!(matches!(construct("hol_C8"), Err(Error::NotPrime(8))));
        assert!(matches!(construct_with_cap("S5", 60), Err(Error::ClosureExceedsCap { .. })));
    }

    #[test]
    fn constructions_agree() {
        assert!(are_isomorphic(&construct("pq2_3_2").unwrap(), &construct("A4").unwrap()));
        assert!(are_isomorphic(&construct("D6").unwrap(), &construct("S3").unwrap()));
        assert!(are_isomorphic(&construct("hol_C3").unwrap(), &construct("S3").unwrap()));
        assert!(!are_isomorphic(&construct("SL23").unwrap(), &construct("S4").unwrap()));
        assert!(!is_abelian(&construct("Q8").unwrap()));
        assert_eq!(least_primitive_root(7).unwrap(), 3);
        assert_eq!(least_primitive_root(13).unwrap(), 2);
    }

    #[test]
    fn table_groups_satisfy_axioms() {
        for g in [cyclic(12).unwrap(), elementary_abelian(3, 2).unwrap(), quaternion8()] {
            assert!(Group::from_cayley_table(g.name(), &g.table()).is_ok(), "{}", g.name());
        }
    }

    #[test]
    fn deterministic() {
        for e in standard_suite() {
            assert_eq!(e.construct().unwrap(), e.construct().unwrap(), "{}", e.name);
        }
    }
}
