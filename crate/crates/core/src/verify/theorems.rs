//! Depth-indexed structure theorems and the propositions and corollaries
//! about 2- and 3-maximal subgroups.

use super::{
    all_n_maximal, describe, describe_factor, Analysis, Check, Conclusion, Embedding, Hypothesis,
    Options, VerdictReport,
};
use crate::catalog;
use crate::classify::GroupClass;
use crate::group::{self, factorize, is_square_free};

const SOLUBLE: &str = "G soluble";

fn bound_clause(n: usize, pi: usize, extra: usize) -> String {
    if extra == 0 {
        format!("n ≤ |π(G)| ({n} ≤ {pi})")
    } else {
        format!("n ≤ |π(G)|+{extra} ({n} ≤ {})", pi + extra)
    }
}

/// Soluble, every `n`-maximal subgroup embedded, and `n` within the bound.
fn depth_hypothesis(an: &Analysis, check: &mut Check, n: usize, emb: Embedding, extra: usize) {
    check.clause_bool(SOLUBLE, an.structure.is_soluble());
    let (status, offenders) = all_n_maximal(an.lat, n, emb);
    check.clause(format!("every {n}-maximal subgroup {}", emb.label()), status);
    check.note_list(
        &format!("{n}-maximal, not {}", emb.label()),
        offenders.iter().map(|&h| describe(an.lat, h)),
    );
    check.clause_bool(bound_clause(n, an.pi(), extra), n <= an.pi() + extra);
}

/// Strongly supersoluble, and every non-Frattini chief factor has a
/// square-free automizer with at most `n` prime divisors.
fn strongly_supersoluble_bounded(an: &Analysis, check: &mut Check, n: usize) -> bool {
    let ss = an.structure.is_strongly_supersoluble();
    check.note(format!("strongly supersoluble: {ss}"));
    let offenders: Vec<String> = an
        .structure
        .chief_factors()
        .iter()
        .filter(|f| !f.is_frattini)
        .filter(|f| {
            let a = f.automizer_order as u64;
            !is_square_free(a) || factorize(a).len() > n
        })
        .map(|f| describe_factor(an.lat, f))
        .collect();
    let ok = offenders.is_empty();
    check.note_list("automizer outside the bound", offenders);
    ss && ok
}

fn with_sharpness_note(check: &mut Check, conclusion: Conclusion) {
    let failed = check.failed();
    if conclusion == Conclusion::Fails && failed.len() == 1 && failed[0].starts_with("n ≤") {
        check.note("sharpness: the depth bound is the only failing clause and the conclusion fails");
    }
}

fn theorem_a_like(an: &Analysis, n: usize, emb: Embedding, id: &str, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    depth_hypothesis(an, &mut check, n, emb, 0);
    let conclusion = check.conclude(opts, |c| strongly_supersoluble_bounded(an, c, n));
    with_sharpness_note(&mut check, conclusion);
    check.finish(an, format!("{id}[n={n}]"), conclusion)
}

pub(super) fn theorem_a(an: &Analysis, n: usize, opts: Options) -> VerdictReport {
    theorem_a_like(an, n, Embedding::Modular, "ThmA", opts)
}

pub(super) fn theorem_2_12(an: &Analysis, n: usize, opts: Options) -> VerdictReport {
    theorem_a_like(an, n, Embedding::ModularOrSQuasinormal, "Thm2.12", opts)
}

/// `G^{U_s}` is a nilpotent Hall subgroup.
fn residual_is_nilpotent_hall(an: &Analysis, check: &mut Check) -> bool {
    match an.structure.residual_us() {
        Ok(r) => {
            let order = an.lat.order_of(r);
            let hall = an.structure.is_nilpotent_hall(r);
            check.note(format!(
                "strongly supersoluble residual: {} with index {}, nilpotent Hall: {hall}",
                describe(an.lat, r),
                an.structure.order() / order
            ));
            hall
        }
        Err(e) => {
            check.note(format!("residual: {e}"));
            false
        }
    }
}

fn theorem_b_like(an: &Analysis, n: usize, emb: Embedding, id: &str, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    depth_hypothesis(an, &mut check, n, emb, 1);
    let conclusion = check.conclude(opts, |c| residual_is_nilpotent_hall(an, c));
    with_sharpness_note(&mut check, conclusion);
    check.finish(an, format!("{id}[n={n}]"), conclusion)
}

pub(super) fn theorem_b(an: &Analysis, n: usize, opts: Options) -> VerdictReport {
    theorem_b_like(an, n, Embedding::Modular, "ThmB", opts)
}

pub(super) fn theorem_3_4(an: &Analysis, n: usize, opts: Options) -> VerdictReport {
    theorem_b_like(an, n, Embedding::ModularOrSQuasinormal, "Thm3.4", opts)
}

/// Same hypothesis as the modular-or-S-quasinormal Hall theorem; concludes
/// `φ`-dispersive for some ordering.
pub(super) fn lemma_3_3(an: &Analysis, n: usize, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    depth_hypothesis(an, &mut check, n, Embedding::ModularOrSQuasinormal, 1);
    let conclusion = check.conclude(opts, |c| {
        let orderings = an.structure.dispersive_orderings();
        match orderings.first() {
            Some(phi) => {
                c.note(format!("dispersive for {phi:?}"));
                true
            }
            None => {
                c.note("dispersive for no ordering");
                false
            }
        }
    });
    check.finish(an, format!("Lem3.3[n={n}]"), conclusion)
}

/// Combines the statuses of the two alternatives of a disjunctive hypothesis.
fn either(a: Hypothesis, b: Hypothesis) -> Hypothesis {
    use Hypothesis::*;
    match (a, b) {
        (Holds, _) | (_, Holds) => Holds,
        (Vacuous, _) | (_, Vacuous) => Vacuous,
        _ => Fails,
    }
}

fn nearly_nilpotent_conclusion(an: &Analysis, check: &mut Check) -> bool {
    let nn = an.structure.is_nearly_nilpotent();
    let ss = an.structure.is_strongly_supersoluble();
    check.note(format!("nearly nilpotent: {nn}, strongly supersoluble: {ss}"));
    if !nn {
        check.note_list(
            "chief factor",
            an.structure
                .chief_factors()
                .iter()
                .map(|f| describe_factor(an.lat, f)),
        );
    }
    nn && ss
}

pub(super) fn prop_2_11(an: &Analysis, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    let emb = Embedding::ModularOrSQuasinormal;
    let (one, _) = all_n_maximal(an.lat, 1, emb);
    let (two, _) = all_n_maximal(an.lat, 2, emb);
    check.note(format!("every maximal subgroup {}: {one}", emb.label()));
    check.note(format!("every 2-maximal subgroup {}: {two}", emb.label()));
    check.clause(
        format!("every maximal or every 2-maximal subgroup {}", emb.label()),
        either(one, two),
    );
    let conclusion = check.conclude(opts, |c| nearly_nilpotent_conclusion(an, c));
    check.finish(an, "Prop2.11", conclusion)
}

fn two_maximal_corollary(
    an: &Analysis,
    id: &str,
    emb: Embedding,
    class: GroupClass,
    opts: Options,
) -> VerdictReport {
    let mut check = Check::new();
    let (status, offenders) = all_n_maximal(an.lat, 2, emb);
    check.clause(format!("every 2-maximal subgroup {}", emb.label()), status);
    check.note_list(
        &format!("2-maximal, not {}", emb.label()),
        offenders.iter().map(|&h| describe(an.lat, h)),
    );
    let conclusion = check.conclude(opts, |c| {
        let holds = an.structure.holds(class);
        c.note(format!("{}: {holds}", class.name()));
        holds
    });
    check.finish(an, id, conclusion)
}

pub(super) fn cor_4_1(an: &Analysis, opts: Options) -> VerdictReport {
    two_maximal_corollary(an, "Cor4.1", Embedding::Modular, GroupClass::NearlyNilpotent, opts)
}

pub(super) fn cor_4_2(an: &Analysis, opts: Options) -> VerdictReport {
    two_maximal_corollary(an, "Cor4.2", Embedding::SQuasinormal, GroupClass::NearlyNilpotent, opts)
}

pub(super) fn cor_4_3(an: &Analysis, opts: Options) -> VerdictReport {
    two_maximal_corollary(an, "Cor4.3", Embedding::SQuasinormal, GroupClass::Supersoluble, opts)
}

/// The class is closed under the primitive-quotient test: if `G/M_G` is
/// nearly nilpotent for every maximal `M`, then `G` is nearly nilpotent; such
/// groups are strongly supersoluble and all their quotients are nearly
/// nilpotent.
pub(super) fn prop_2_9(an: &Analysis, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    let lat = an.lat;
    let s = &an.structure;
    let maximals = lat.maximal_subgroups(lat.top());
    let bad: Vec<String> = maximals
        .iter()
        .filter(|&&m| !s.holds_modulo(GroupClass::NearlyNilpotent, lat.core_of(m)))
        .map(|&m| describe(lat, m))
        .collect();
    let status = if maximals.is_empty() {
        Hypothesis::Vacuous
    } else if bad.is_empty() {
        Hypothesis::Holds
    } else {
        Hypothesis::Fails
    };
    check.clause("G/M_G nearly nilpotent for every maximal M", status);
    check.note_list("primitive quotient not nearly nilpotent, M", bad);
    let conclusion = check.conclude(opts, |c| {
        let nn = s.is_nearly_nilpotent();
        let ss = s.is_strongly_supersoluble();
        let quotients = s
            .normal_subgroups()
            .iter()
            .all(|&n| s.holds_modulo(GroupClass::NearlyNilpotent, n));
        c.note(format!(
            "nearly nilpotent: {nn}, strongly supersoluble: {ss}, every quotient nearly nilpotent: {quotients}"
        ));
        nn && ss && quotients
    });
    check.finish(an, "Prop2.9", conclusion)
}

/// `|G| = p·q²` for distinct primes `p`, `q`.
fn order_pq2(order: usize) -> bool {
    let f = factorize(order as u64);
    f.len() == 2 && {
        let mut e: Vec<u32> = f.iter().map(|&(_, e)| e).collect();
        e.sort_unstable();
        e == [1, 2]
    }
}

/// `G = Q ⋊ P` with `Q` a normal quaternion subgroup of order 8 containing
/// its centralizer and `|P| = 3`. Checked structurally, then confirmed by an
/// isomorphism to the catalog `SL23`.
fn quaternion_branch(an: &Analysis, check: &mut Check) -> bool {
    let g = an.group();
    if g.order() != 24 {
        return false;
    }
    for &q in an.structure.normal_subgroups() {
        let qs = an.lat.subgroup(q);
        if qs.order() != 8 || group::is_abelian_subgroup(g, qs) {
            continue;
        }
        let involutions = qs.elements().filter(|&x| g.element_order(x) == 2).count();
        let self_centralizing = group::centralizer(g, qs).is_subgroup_of(qs);
        let has_complement = !an.lat.subgroups_of_order(an.lat.top(), 3).is_empty();
        if involutions == 1 && self_centralizing && has_complement {
            let iso = group::are_isomorphic(g, &catalog::sl23());
            check.note(format!(
                "normal quaternion {} contains its centralizer; isomorphic to SL23: {iso}",
                describe(an.lat, q)
            ));
            return iso;
        }
    }
    false
}

fn three_maximal_dichotomy(an: &Analysis, id: &str, emb: Embedding, opts: Options) -> VerdictReport {
    let mut check = Check::new();
    let (status, offenders) = all_n_maximal(an.lat, 3, emb);
    check.clause(format!("every 3-maximal subgroup {}", emb.label()), status);
    check.note_list(
        &format!("3-maximal, not {}", emb.label()),
        offenders.iter().map(|&h| describe(an.lat, h)),
    );
    check.clause_bool("G not supersoluble", !an.structure.is_supersoluble());
    let conclusion = check.conclude(opts, |c| {
        let pq2 = order_pq2(an.structure.order());
        c.note(format!("|G| = {} of the form p·q²: {pq2}", an.structure.order()));
        pq2 || quaternion_branch(an, c)
    });
    check.finish(an, id, conclusion)
}

pub(super) fn prop_3_2(an: &Analysis, opts: Options) -> VerdictReport {
    three_maximal_dichotomy(an, "Prop3.2", Embedding::ModularOrSQuasinormal, opts)
}

pub(super) fn cor_4_4(an: &Analysis, opts: Options) -> VerdictReport {
    three_maximal_dichotomy(an, "Cor4.4", Embedding::Modular, opts)
}

/// Narrative lines for the sharpness cells.
pub(super) fn sharpness_narrative(an: &Analysis, id: &str) -> Vec<String> {
    let lat = an.lat;
    let s = &an.structure;
    let census = super::census(lat);
    let mut out = Vec::new();
    match id {
        "ThmA" => {
            let three: Vec<String> = lat
                .n_maximal_set(3)
                .expect("n ≥ 1")
                .iter()
                .map(|&h| describe(lat, h))
                .collect();
            out.push(format!("narrative: the 3-maximal subgroups are [{}]", three.join(", ")));
            out.push(format!(
                "narrative: |π(G)| = {} < 3 and supersoluble = {}",
                an.pi(),
                s.is_supersoluble()
            ));
        }
        _ => {
            if let Ok(r) = s.residual_us() {
                out.push(format!(
                    "narrative: strongly supersoluble residual has order {} in |G| = {}, nilpotent Hall = {}",
                    lat.order_of(r),
                    s.order(),
                    s.is_nilpotent_hall(r)
                ));
            }
            out.push(format!(
                "narrative: least n with every n-maximal subgroup modular = {:?}, |π(G)|+1 = {}",
                census.min_n_all_modular,
                an.pi() + 1
            ));
        }
    }
    out
}
