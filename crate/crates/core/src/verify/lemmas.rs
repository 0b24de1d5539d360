//! Properties of modular and S-quasinormal subgroups, closure properties of
//! the classes, and facts about minimal non-supersoluble and primitive groups.

use super::{all_n_maximal, describe, describe_factor, Analysis, Check, Embedding, Hypothesis, Options, VerdictReport};
use crate::bitset::BitSet;
use crate::classify::{gcd, permutations, ChiefFactor, GroupClass, Structure};
use crate::error::Result;
use crate::group::{self, Action, Group, Subgroup};
use crate::lattice::{SubgroupId, SubgroupLattice};

fn modular_subgroups(lat: &SubgroupLattice) -> Vec<SubgroupId> {
    (0..lat.len()).filter(|&m| lat.is_modular(m)).collect()
}

/// `M/M_G` nilpotent, `M^G/M_G ≤ Z_U(G/M_G)`, and for core-free `M` a
/// decomposition `G = S₁ × … × S_r × K` as described in [`decompose`].
pub(super) fn lemma_2_1(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let g = an.group();
    let s = &an.structure;
    let modular = modular_subgroups(lat);
    let mut check = Check::new();
    check.clause(format!("M modular ({} subgroups)", modular.len()), Hypothesis::Holds);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        let mut found = Vec::new();
        for &m in &modular {
            let core = lat.core_of(m);
            if !group::nilpotent_modulo(g, lat.subgroup(m), lat.subgroup(core)) {
                failures.push(format!("{}: M/M_G not nilpotent", describe(lat, m)));
            }
            let zu = s.hypercyclic_center_modulo(core).expect("core is normal");
            if !lat.leq(lat.normal_closure_of(m), zu) {
                failures.push(format!("{}: M^G/M_G not inside Z_U(G/M_G)", describe(lat, m)));
            }
            if core == lat.trivial() {
                match decompose(an, m) {
                    Some((parts, k)) => {
                        let orders: Vec<usize> = parts.iter().map(|&p| lat.order_of(p)).collect();
                        found.push(format!(
                            "{}: r = {}, |S_i| = {orders:?}, |K| = {}",
                            describe(lat, m),
                            parts.len(),
                            lat.order_of(k)
                        ));
                    }
                    None => failures.push(format!("{}: no decomposition", describe(lat, m))),
                }
            }
        }
        c.note_list("core-free decomposition", found);
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.1", conclusion)
}

/// Searches for `G = S₁ × … × S_r × K` with pairwise coprime factor orders,
/// each `S_i` a non-abelian P-group, `M ∩ S_i` a non-normal Sylow subgroup of
/// `S_i`, `M = (M ∩ S₁)…(M ∩ S_r)(M ∩ K)`, and `M ∩ K` quasinormal in `G`.
/// Factors are normal Hall subgroups, so `K` is determined by the `S_i`.
pub fn decompose(an: &Analysis, m: SubgroupId) -> Option<(Vec<SubgroupId>, SubgroupId)> {
    let lat = an.lat;
    let s = &an.structure;
    let order = s.order();
    let candidates: Vec<SubgroupId> = s
        .normal_subgroups()
        .iter()
        .copied()
        .filter(|&p| {
            let o = lat.order_of(p);
            o > 1 && gcd(o, order / o) == 1 && {
                let sub = Structure::of_subgroup(lat, p);
                !sub.is_abelian() && sub.is_p_group_schmidt()
            }
        })
        .collect();
    assert!(candidates.len() < 20, "too many P-group factors to search");
    let mut subsets: Vec<u32> = (0..1u32 << candidates.len()).collect();
    subsets.sort_by_key(|mask| (mask.count_ones(), *mask));
    for mask in subsets {
        let parts: Vec<SubgroupId> = (0..candidates.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| candidates[i])
            .collect();
        let orders: Vec<usize> = parts.iter().map(|&p| lat.order_of(p)).collect();
        let coprime = orders
            .iter()
            .enumerate()
            .all(|(i, &a)| orders[i + 1..].iter().all(|&b| gcd(a, b) == 1));
        if !coprime {
            continue;
        }
        let k_order = order / orders.iter().product::<usize>();
        let Some(&k) = s.normal_subgroups().iter().find(|&&k| lat.order_of(k) == k_order) else {
            continue;
        };
        if fits(lat, m, &parts, k) {
            return Some((parts, k));
        }
    }
    None
}

fn fits(lat: &SubgroupLattice, m: SubgroupId, parts: &[SubgroupId], k: SubgroupId) -> bool {
    let mut product = 1;
    for &p in parts {
        let q = lat.meet(m, p);
        let qo = lat.order_of(q);
        let sylow = qo > 1 && {
            let f = group::factorize(qo as u64);
            f.len() == 1 && group::p_part(lat.order_of(p) as u64, f[0].0) == qo as u64
        };
        if !sylow || lat.is_normal_in(q, p) {
            return false;
        }
        product *= qo;
    }
    let mk = lat.meet(m, k);
    product * lat.order_of(mk) == lat.order_of(m) && lat.is_quasinormal(mk)
}

/// Joins of modular subgroups, images in quotients, normal subgroups,
/// restriction to overgroups, and transport along an isomorphism.
pub(super) fn lemma_2_2(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let modular = modular_subgroups(lat);
    let normals = an.structure.normal_subgroups().to_vec();
    let mut check = Check::new();
    check.clause(
        format!("A, B modular ({}), N normal ({})", modular.len(), normals.len()),
        Hypothesis::Holds,
    );
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        for (i, &a) in modular.iter().enumerate() {
            for &b in &modular[i..] {
                if !lat.is_modular(lat.join(a, b)) {
                    failures.push(format!("(1) join of #{a} and #{b}"));
                }
            }
        }
        for &n in &normals {
            let qv = an.quotient(n);
            for &a in &modular {
                if !qv.lattice.is_modular(qv.image_of(lat, a)) {
                    failures.push(format!("(2) image of #{a} modulo #{n}"));
                }
            }
            if !lat.is_modular(n) {
                failures.push(format!("(3) normal #{n}"));
            }
        }
        for &a in &modular {
            for b in lat.above(a).iter() {
                if !lat.is_modular_in(a, b) {
                    failures.push(format!("(4) #{a} in #{b}"));
                }
            }
        }
        failures.extend(transport_failures(lat, &modular));
        c.note(format!(
            "checked {} joins, {} quotients, {} overgroup restrictions",
            modular.len() * (modular.len() + 1) / 2,
            normals.len(),
            modular.iter().map(|&a| lat.above(a).count()).sum::<usize>()
        ));
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.2", conclusion)
}

/// Relabels the group's elements (fixing the identity, reversing the rest)
/// and checks that modular subgroups map to modular subgroups.
fn transport_failures(lat: &SubgroupLattice, modular: &[SubgroupId]) -> Vec<String> {
    let g = lat.group();
    let n = g.order();
    let perm: Vec<usize> = (0..n).map(|i| if i == 0 { 0 } else { n - i }).collect();
    let h = g.relabel(&perm).expect("identity-fixing relabelling");
    let hlat = SubgroupLattice::enumerate(&h);
    let mut failures = Vec::new();
    if modular_subgroups(&hlat).len() != modular.len() {
        failures.push("(5) modular counts differ after relabelling".to_string());
    }
    for &a in modular {
        let bits = BitSet::from_indices(n, lat.subgroup(a).elements().map(|x| perm[x]));
        match hlat.id_of_bits(&bits) {
            Some(b) if hlat.is_modular(b) => {}
            _ => failures.push(format!("(5) image of #{a} under relabelling")),
        }
    }
    failures
}

/// Restriction to overgroups, correspondence with quotients by normal
/// subgroups, subnormality and nilpotency of `H^G/H_G`.
pub(super) fn lemma_2_3(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let g = an.group();
    let sqn: Vec<SubgroupId> = (0..lat.len()).filter(|&h| lat.is_s_quasinormal(h)).collect();
    let mut check = Check::new();
    check.clause(format!("H ≤ K ≤ G, H S-quasinormal ({} subgroups)", sqn.len()), Hypothesis::Holds);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        for &h in &sqn {
            for k in lat.above(h).iter() {
                if !lat.is_s_quasinormal_in(h, k) {
                    failures.push(format!("(1) #{h} in #{k}"));
                }
            }
            if !lat.is_subnormal(h) {
                failures.push(format!("(3) #{h} not subnormal"));
            }
            let closure = lat.subgroup(lat.normal_closure_of(h));
            let core = lat.subgroup(lat.core_of(h));
            if !group::nilpotent_modulo(g, closure, core) {
                failures.push(format!("(3) H^G/H_G not nilpotent for #{h}"));
            }
        }
        for &n in an.structure.normal_subgroups() {
            let qv = an.quotient(n);
            for k in lat.above(n).iter() {
                let upstairs = lat.is_s_quasinormal(k);
                let downstairs = qv.lattice.is_s_quasinormal(qv.image_of(lat, k));
                if upstairs != downstairs {
                    failures.push(format!("(2) #{k} over #{n}: {upstairs} in G, {downstairs} in G/N"));
                }
            }
        }
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.3", conclusion)
}

/// Passing the depth hypothesis to quotients by minimal normal subgroups,
/// for offsets `r ∈ {0, 1}`.
pub(super) fn lemma_2_4(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let s = &an.structure;
    let emb = Embedding::ModularOrSQuasinormal;
    let minimal: Vec<SubgroupId> = s
        .chief_factors()
        .iter()
        .filter(|f| f.lower == lat.trivial() && f.upper != lat.top())
        .map(|f| f.upper)
        .collect();
    let mut instances = Vec::new();
    for r in 0..=1 {
        for n in an.depths() {
            let (status, _) = all_n_maximal(lat, n, emb);
            if status != Hypothesis::Fails && n <= an.pi() + r {
                for &m in &minimal {
                    instances.push((m, r, n));
                }
            }
        }
    }
    let mut check = Check::new();
    check.clause_bool("G soluble", s.is_soluble());
    let status = if minimal.is_empty() {
        Hypothesis::Vacuous
    } else if instances.is_empty() {
        Hypothesis::Fails
    } else {
        Hypothesis::Holds
    };
    check.clause(
        format!("some n ≤ |π(G)|+r with every n-maximal subgroup {} ({} cases)", emb.label(), instances.len()),
        status,
    );
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        let mut found = Vec::new();
        for &(m, r, n) in &instances {
            let qv = an.quotient(m);
            let qpi = group::PrimeSet::of(qv.quotient.group().order() as u64).len();
            let admissible = (1..=n).find(|&k| {
                k <= qpi + r && all_n_maximal(&qv.lattice, k, emb).0 != Hypothesis::Fails
            });
            match admissible {
                Some(k) => found.push(format!("N = #{m}, r = {r}, n = {n}: m = {k}")),
                None => failures.push(format!("N = #{m}, r = {r}, n = {n}")),
            }
        }
        c.note_list("case", found);
        let ok = failures.is_empty();
        c.note_list("no admissible m", failures);
        ok
    });
    check.finish(an, "Lem2.4", conclusion)
}

/// Closure of the strongly supersoluble class under subgroups, quotients,
/// Frattini extensions and subdirect products.
pub(super) fn lemma_2_5(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let s = &an.structure;
    let us = GroupClass::StronglySupersoluble;
    let mut check = Check::new();
    check.clause("closure of the strongly supersoluble class", Hypothesis::Holds);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        let member = s.is_strongly_supersoluble();
        if member {
            for h in 0..lat.len() {
                if !Structure::of_subgroup(lat, h).is_strongly_supersoluble() {
                    failures.push(format!("subgroup {}", describe(lat, h)));
                }
            }
            for &n in s.normal_subgroups() {
                if !s.holds_modulo(us, n) {
                    failures.push(format!("quotient by #{n}"));
                }
            }
        }
        if s.holds_modulo(us, lat.frattini()) && !member {
            failures.push("G/Φ(G) in the class but G is not".to_string());
        }
        let in_class: Vec<SubgroupId> = s
            .normal_subgroups()
            .iter()
            .copied()
            .filter(|&n| s.holds_modulo(us, n))
            .collect();
        for &a in &in_class {
            for &b in &in_class {
                if !s.holds_modulo(us, lat.meet(a, b)) {
                    failures.push(format!("quotient by #{a} ∩ #{b}"));
                }
            }
        }
        c.note(format!("strongly supersoluble: {member}; {} normal N with G/N in the class", in_class.len()));
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.5", conclusion)
}

/// Structure of minimal non-supersoluble groups.
pub(super) fn lemma_2_6(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let g = an.group();
    let s = &an.structure;
    let mut check = Check::new();
    check.clause_bool("G minimal non-supersoluble", s.is_u_critical());
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        if !(s.is_soluble() && an.pi() <= 3) {
            failures.push("(1) soluble with |π(G)| ≤ 3".to_string());
        }
        if !s.is_schmidt_group() && !s.is_ore_dispersive() {
            failures.push("(2) not Schmidt but not Ore dispersive".to_string());
        }
        let r = match s.residual_u() {
            Ok(r) => r,
            Err(e) => {
                c.note(format!("residual: {e}"));
                return false;
            }
        };
        let ro = lat.order_of(r);
        let primes = group::factorize(ro as u64);
        let p = primes.first().map_or(1, |&(p, _)| p);
        c.note(format!("supersoluble residual: {}", describe(lat, r)));
        if primes.len() != 1 || group::p_part(s.order() as u64, p) != ro as u64 {
            failures.push("(3) residual is not a Sylow subgroup".to_string());
        }
        let frattini = lat.frattini();
        let complements: Vec<SubgroupId> = lat
            .subgroups_of_order(lat.top(), s.order() / ro)
            .into_iter()
            .filter(|&k| lat.meet(k, r) == lat.trivial())
            .collect();
        if complements.is_empty() {
            failures.push("(4) no complement to the residual".to_string());
        }
        for &k in &complements {
            match complement_shape(lat, k, lat.meet(k, frattini)) {
                Ok(true) => {}
                Ok(false) => failures.push(format!("(4) complement #{k}")),
                Err(e) => failures.push(format!("(4) complement #{k}: {e}")),
            }
        }
        let phi_r = lat.frattini_of(r);
        let chief = s
            .chief_factors()
            .iter()
            .find(|f| f.lower == phi_r && f.upper == r);
        if !matches!(chief, Some(f) if !f.is_cyclic) {
            failures.push("(5) R/Φ(R) is not a non-cyclic chief factor".to_string());
        }
        let rs = lat.subgroup(r);
        if !group::is_abelian_subgroup(g, rs) {
            let center = group::centralizer(g, rs).meet(rs);
            let derived = group::commutator_subgroup(g, rs, rs);
            if center != derived || derived != *lat.subgroup(phi_r) {
                failures.push("(6) Z(R), R', Φ(R) differ".to_string());
            }
        }
        let exponent = rs.elements().map(|x| g.element_order(x)).max().unwrap_or(1);
        let bound = if p == 2 { 4 } else { p as usize };
        if exponent > bound {
            failures.push(format!("(7) exponent {exponent} exceeds {bound}"));
        }
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.6", conclusion)
}

/// `S/(S ∩ Φ(G))` is cyclic of prime-power order or minimal non-abelian.
fn complement_shape(lat: &SubgroupLattice, s: SubgroupId, inner: SubgroupId) -> Result<bool> {
    let g = lat.group();
    let (sg, embed) = g.from_subgroup(lat.subgroup(s), "S");
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let inner_local = Subgroup::from_bits(BitSet::from_indices(
        sg.order(),
        lat.subgroup(inner).elements().map(|x| local[x]),
    ));
    let q = sg.quotient(&inner_local)?;
    let qg = q.group();
    let cyclic_prime_power = group::factorize(qg.order() as u64).len() <= 1
        && qg.elements().any(|x| qg.element_order(x) == qg.order());
    if cyclic_prime_power {
        return Ok(true);
    }
    let qlat = SubgroupLattice::enumerate(qg);
    Ok(Structure::of_group(&qlat).is_miller_moreno())
}

/// `(H/K) ⋊ (G/C_G(H/K))` with the conjugation action.
pub fn factor_semidirect(lat: &SubgroupLattice, f: &ChiefFactor) -> Result<Group> {
    let g = lat.group();
    let (hs, ks) = (lat.subgroup(f.upper), lat.subgroup(f.lower));
    let (hg, embed) = g.from_subgroup(hs, "H");
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let k_local = Subgroup::from_bits(BitSet::from_indices(hg.order(), ks.elements().map(|x| local[x])));
    let hk = hg.quotient(&k_local)?;
    let c = Subgroup::from_bits(BitSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| hs.elements().all(|y| ks.contains(g.commutator(x, y)))),
    ));
    let gc = g.quotient(&c)?;
    let a = hk.group();
    let images = gc
        .group()
        .elements()
        .map(|b| {
            let rep = gc.representative(b);
            a.elements()
                .map(|x| {
                    let h = embed[hk.representative(x)];
                    hk.project(local[g.conj(rep, h)])
                })
                .collect()
        })
        .collect();
    Group::semidirect_product(a, gc.group(), &Action::from_table(images))
}

/// For an abelian chief factor `H/K` and a maximal `M ≥ K` with `MH = G`,
/// `G/M_G ≅ (H/K) ⋊ (G/C_G(H/K))`.
pub(super) fn lemma_2_7(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let g = an.group();
    let s = &an.structure;
    let mut cases: Vec<(&ChiefFactor, SubgroupId)> = Vec::new();
    for f in s.chief_factors() {
        let (hs, ks) = (lat.subgroup(f.upper), lat.subgroup(f.lower));
        if !group::commutator_subgroup(g, hs, hs).is_subgroup_of(ks) {
            continue;
        }
        let mut cores: Vec<SubgroupId> = lat
            .maximal_subgroups(lat.top())
            .iter()
            .filter(|&&m| lat.leq(f.lower, m) && !lat.leq(f.upper, m))
            .map(|&m| lat.core_of(m))
            .collect();
        cores.sort_unstable();
        cores.dedup();
        cases.extend(cores.into_iter().map(|core| (f, core)));
    }
    let mut check = Check::new();
    let status = if cases.is_empty() { Hypothesis::Vacuous } else { Hypothesis::Holds };
    check.clause(format!("abelian chief factor with a supplementing maximal subgroup ({} cases)", cases.len()), status);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        for &(f, core) in &cases {
            let primitive = g.quotient(lat.subgroup(core)).expect("core is normal");
            let ok = match factor_semidirect(lat, f) {
                Ok(sd) => group::are_isomorphic(primitive.group(), &sd),
                Err(_) => false,
            };
            if !ok {
                failures.push(format!("{} with core #{core}", describe_factor(lat, f)));
            }
        }
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.7", conclusion)
}

/// `G = R ⋊ M` soluble primitive with `R = C_G(R)` minimal normal: the
/// minimal normal `R` and its complements.
pub fn primitive_decomposition(an: &Analysis) -> Option<(SubgroupId, Vec<SubgroupId>)> {
    let lat = an.lat;
    let g = an.group();
    let s = &an.structure;
    if !s.is_soluble() {
        return None;
    }
    for f in s.chief_factors().iter().filter(|f| f.lower == lat.trivial()) {
        let r = f.upper;
        let rs = lat.subgroup(r);
        if group::centralizer(g, rs) != *rs {
            continue;
        }
        let complements: Vec<SubgroupId> = lat
            .maximal_subgroups(lat.top())
            .iter()
            .copied()
            .filter(|&m| lat.meet(m, r) == lat.trivial() && lat.order_of(m) * rs.order() == s.order())
            .collect();
        if !complements.is_empty() {
            return Some((r, complements));
        }
    }
    None
}

/// In a soluble primitive group that is not nearly nilpotent, nontrivial
/// proper subgroups of a complement are neither modular nor S-quasinormal,
/// and for prime `|M|` each proper subgroup order of `R` is realized by such
/// a subgroup of `R`.
pub(super) fn lemma_2_10(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let mut check = Check::new();
    let structure = if an.structure.is_nearly_nilpotent() {
        None
    } else {
        primitive_decomposition(an)
    };
    let Some((r, complements)) = structure else {
        check.clause(
            "G = R ⋊ M soluble primitive with R = C_G(R), not nearly nilpotent",
            Hypothesis::Vacuous,
        );
        let conclusion = check.conclude(opts, |_| true);
        return check.finish(an, "Lem2.10", conclusion);
    };
    check.clause(
        format!(
            "G = R ⋊ M soluble primitive with R = C_G(R), not nearly nilpotent (|R| = {}, {} complements)",
            lat.order_of(r),
            complements.len()
        ),
        Hypothesis::Holds,
    );
    let neither = |h: SubgroupId| !lat.is_modular_or_s_quasinormal(h);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        for &m in &complements {
            for t in lat.below(m).iter() {
                if t != lat.trivial() && t != m && !neither(t) {
                    failures.push(format!("(1) {} inside #{m}", describe(lat, t)));
                }
            }
        }
        if complements.iter().any(|&m| group::is_prime(lat.order_of(m) as u64)) {
            let mut sizes: Vec<usize> = lat
                .below(r)
                .iter()
                .filter(|&t| t != lat.trivial() && t != r)
                .map(|t| lat.order_of(t))
                .collect();
            sizes.dedup();
            for size in sizes {
                if lat.subgroups_of_order(r, size).into_iter().any(neither) {
                    c.note(format!("(2) order {size}: some subgroup of R is neither"));
                } else {
                    failures.push(format!("(2) every subgroup of R of order {size}"));
                }
            }
        }
        failures.sort();
        failures.dedup();
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem2.10", conclusion)
}

/// For each ordering `φ` of `π(G)`: `φ`-dispersive quotients are closed under
/// intersections of kernels, and `G/Φ(G)` `φ`-dispersive forces `G` to be.
pub(super) fn lemma_3_1(an: &Analysis, opts: Options) -> VerdictReport {
    let lat = an.lat;
    let s = &an.structure;
    let orderings = permutations(s.prime_spectrum().as_slice());
    let mut check = Check::new();
    check.clause(format!("φ an ordering of π(G) ({} orderings)", orderings.len()), Hypothesis::Holds);
    let conclusion = check.conclude(opts, |c| {
        let mut failures = Vec::new();
        for phi in &orderings {
            let good: Vec<SubgroupId> = s
                .normal_subgroups()
                .iter()
                .copied()
                .filter(|&n| s.is_phi_dispersive_modulo(n, phi).expect("φ covers π(G)"))
                .collect();
            for &a in &good {
                for &b in &good {
                    if !s.is_phi_dispersive_modulo(lat.meet(a, b), phi).expect("φ covers π(G)") {
                        failures.push(format!("{phi:?}: #{a} ∩ #{b}"));
                    }
                }
            }
            let frattini = s.is_phi_dispersive_modulo(lat.frattini(), phi).expect("φ covers π(G)");
            if frattini && !s.is_phi_dispersive(phi).expect("φ is π(G)") {
                failures.push(format!("{phi:?}: G/Φ(G) dispersive but G is not"));
            }
        }
        let ok = failures.is_empty();
        c.note_list("violation", failures);
        ok
    });
    check.finish(an, "Lem3.1", conclusion)
}
