//! Machine checks of the structure theorems on concrete groups.
//!
//! Every check evaluates a hypothesis and a conclusion independently and
//! reports both. A report is a soundness violation when the hypothesis holds
//! (or holds vacuously) while the conclusion fails.

mod census;
mod lemmas;
mod theorems;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::Structure;
use crate::error::{Error, Result};
use crate::group::{Group, Quotient};
use crate::lattice::{SubgroupId, SubgroupLattice};

pub use census::{census, CensusRow, ModularityCensus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Hypothesis {
    Holds,
    Fails,
    /// Holds because a quantifier ranges over an empty set.
    Vacuous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Holds,
    Fails,
    NotEvaluated,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Holds => "holds",
            Hypothesis::Fails => "fails",
            Hypothesis::Vacuous => "vacuous",
        })
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Holds => "holds",
            Conclusion::Fails => "fails",
            Conclusion::NotEvaluated => "not-evaluated",
        })
    }
}

impl From<bool> for Conclusion {
    fn from(b: bool) -> Self {
        if b {
            Conclusion::Holds
        } else {
            Conclusion::Fails
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub group: String,
    pub theorem: String,
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    pub witnesses: Vec<String>,
    /// Wall time in milliseconds; 0 unless timings were requested.
    pub ms: u64,
}

const CLAUSE_PREFIX: &str = "clause ";

impl VerdictReport {
    pub fn is_violation(&self) -> bool {
        self.hypothesis != Hypothesis::Fails && self.conclusion == Conclusion::Fails
    }

    /// Names of the hypothesis clauses recorded as failing.
    pub fn failed_clauses(&self) -> Vec<&str> {
        self.clauses()
            .filter(|(_, status)| *status == "fails")
            .map(|(name, _)| name)
            .collect()
    }

    /// `(name, status)` for every recorded hypothesis clause.
    pub fn clauses(&self) -> impl Iterator<Item = (&str, &str)> {
        self.witnesses.iter().filter_map(|w| {
            let rest = w.strip_prefix(CLAUSE_PREFIX)?;
            rest.rsplit_once(": ")
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Skip conclusions whose hypothesis already failed.
    pub fast: bool,
    /// Record wall time per report.
    pub timings: bool,
}

/// Accumulates hypothesis clauses and witness lines for one report.
pub(crate) struct Check {
    clauses: Vec<(String, Hypothesis)>,
    notes: Vec<String>,
}

impl Check {
    pub(crate) fn new() -> Self {
        Check {
            clauses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn clause(&mut self, name: impl Into<String>, status: Hypothesis) -> Hypothesis {
        self.clauses.push((name.into(), status));
        status
    }

    pub(crate) fn clause_bool(&mut self, name: impl Into<String>, holds: bool) -> bool {
        let status = if holds { Hypothesis::Holds } else { Hypothesis::Fails };
        self.clause(name, status);
        holds
    }

    pub(crate) fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Notes one line per item, eliding after the first few.
    pub(crate) fn note_list(&mut self, label: &str, items: impl IntoIterator<Item = String>) {
        const SHOWN: usize = 6;
        let items: Vec<String> = items.into_iter().collect();
        for item in items.iter().take(SHOWN) {
            self.note(format!("{label}: {item}"));
        }
        if items.len() > SHOWN {
            self.note(format!("{label}: … and {} more", items.len() - SHOWN));
        }
    }

    pub(crate) fn hypothesis(&self) -> Hypothesis {
        let statuses = self.clauses.iter().map(|(_, s)| *s);
        if statuses.clone().any(|s| s == Hypothesis::Fails) {
            Hypothesis::Fails
        } else if statuses.clone().any(|s| s == Hypothesis::Vacuous) {
            Hypothesis::Vacuous
        } else {
            Hypothesis::Holds
        }
    }

    pub(crate) fn failed(&self) -> Vec<&str> {
        self.clauses
            .iter()
            .filter(|(_, s)| *s == Hypothesis::Fails)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    /// Evaluates the conclusion unless `fast` is set and the hypothesis failed.
    pub(crate) fn conclude(
        &mut self,
        opts: Options,
        eval: impl FnOnce(&mut Check) -> bool,
    ) -> Conclusion {
        if opts.fast && self.hypothesis() == Hypothesis::Fails {
            Conclusion::NotEvaluated
        } else {
            eval(self).into()
        }
    }

    pub(crate) fn finish(self, an: &Analysis, theorem: impl Into<String>, conclusion: Conclusion) -> VerdictReport {
        let hypothesis = self.hypothesis();
        let mut witnesses: Vec<String> = self
            .clauses
            .into_iter()
            .map(|(name, status)| format!("{CLAUSE_PREFIX}{name}: {status}"))
            .collect();
        witnesses.extend(self.notes);
        VerdictReport {
            group: an.name().to_string(),
            theorem: theorem.into(),
            hypothesis,
            conclusion,
            witnesses,
            ms: 0,
        }
    }
}

/// How a subgroup is required to sit in the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    Modular,
    SQuasinormal,
    ModularOrSQuasinormal,
}

impl Embedding {
    pub fn holds(self, lat: &SubgroupLattice, h: SubgroupId) -> bool {
        match self {
            Embedding::Modular => lat.is_modular(h),
            Embedding::SQuasinormal => lat.is_s_quasinormal(h),
            Embedding::ModularOrSQuasinormal => lat.is_modular_or_s_quasinormal(h),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Embedding::Modular => "modular",
            Embedding::SQuasinormal => "S-quasinormal",
            Embedding::ModularOrSQuasinormal => "modular or S-quasinormal",
        }
    }
}

/// Whether every `n`-maximal subgroup has the embedding, with the offenders.
/// An empty `n`-maximal set gives [`Hypothesis::Vacuous`].
pub fn all_n_maximal(
    lat: &SubgroupLattice,
    n: usize,
    embedding: Embedding,
) -> (Hypothesis, Vec<SubgroupId>) {
    let set = lat.n_maximal_set(n).expect("n ≥ 1");
    let offenders: Vec<SubgroupId> = set
        .iter()
        .copied()
        .filter(|&h| !embedding.holds(lat, h))
        .collect();
    let status = if set.is_empty() {
        Hypothesis::Vacuous
    } else if offenders.is_empty() {
        Hypothesis::Holds
    } else {
        Hypothesis::Fails
    };
    (status, offenders)
}

pub(crate) fn describe(lat: &SubgroupLattice, h: SubgroupId) -> String {
    format!("subgroup #{h} of order {}", lat.order_of(h))
}

pub(crate) fn describe_factor(lat: &SubgroupLattice, f: &crate::classify::ChiefFactor) -> String {
    format!(
        "chief factor #{}/#{} of order {}: automizer order {}, {}, {}",
        f.upper,
        f.lower,
        f.factor_order,
        f.automizer_order,
        if f.is_cyclic { "cyclic" } else { "non-cyclic" },
        if f.is_frattini { "Frattini" } else { "non-Frattini" },
    ) + &format!(" (orders {}/{})", lat.order_of(f.upper), lat.order_of(f.lower))
}

/// `G/N` with its own lattice.
pub struct QuotientView {
    pub quotient: Quotient,
    pub lattice: SubgroupLattice,
}

impl QuotientView {
    /// Lattice index of `HN/N`.
    pub fn image_of(&self, parent: &SubgroupLattice, h: SubgroupId) -> SubgroupId {
        let img = self.quotient.image(parent.subgroup(h));
        self.lattice.index_of(&img).expect("image is a subgroup")
    }
}

/// A group's lattice and structure, with quotient lattices built on demand.
pub struct Analysis<'a> {
    pub lat: &'a SubgroupLattice,
    pub structure: Structure<'a>,
    quotients: Vec<OnceLock<QuotientView>>,
}

impl<'a> Analysis<'a> {
    pub fn new(lat: &'a SubgroupLattice) -> Self {
        Analysis {
            lat,
            structure: Structure::of_group(lat),
            quotients: (0..lat.len()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn name(&self) -> &str {
        self.lat.group().name()
    }

    pub fn group(&self) -> &Group {
        self.lat.group()
    }

    /// `G/N` for normal `n`.
    pub fn quotient(&self, n: SubgroupId) -> &QuotientView {
        assert!(self.lat.is_normal(n), "quotient by a non-normal subgroup");
        self.quotients[n].get_or_init(|| {
            let quotient = self
                .group()
                .quotient(self.lat.subgroup(n))
                .expect("normal subgroup");
            let lattice = SubgroupLattice::enumerate(quotient.group());
            QuotientView { quotient, lattice }
        })
    }

    pub fn pi(&self) -> usize {
        self.structure.prime_spectrum().len()
    }

    /// Depths `1..=max(longest chain, 1) + 1`, so every bound is probed one past
    /// the last nonempty `n`-maximal set.
    pub fn depths(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.lat.longest_chain().max(1) + 1
    }
}

/// Which checks a suite run performs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Theorems,
    Lemmas,
    Sharpness,
    /// A single check by id, e.g. `ThmA` or `Lem2.2`.
    Only(String),
    Empty,
}

pub const THEOREM_IDS: &[&str] = &[
    "ThmA", "Thm2.12", "ThmB", "Thm3.4", "Prop2.9", "Prop2.11", "Prop3.2", "Lem3.3", "Cor4.1",
    "Cor4.2", "Cor4.3", "Cor4.4",
];

pub const LEMMA_IDS: &[&str] = &[
    "Lem2.1", "Lem2.2", "Lem2.3", "Lem2.4", "Lem2.5", "Lem2.6", "Lem2.7", "Lem2.10", "Lem3.1",
];

/// The documented sharpness cells: group, check, depth.
pub const SHARPNESS: &[(&str, &str, usize)] = &[("A4", "ThmA", 3), ("A4xC2", "ThmB", 4)];

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Selector::All,
            "theorems" => Selector::Theorems,
            "lemmas" => Selector::Lemmas,
            "sharpness" => Selector::Sharpness,
            "" | "none" => Selector::Empty,
            id if THEOREM_IDS.contains(&id) || LEMMA_IDS.contains(&id) => {
                Selector::Only(id.to_string())
            }
            other => return Err(Error::UnknownSelector(other.to_string())),
        })
    }
}

/// Runs one check id on an analysed group. Depth-indexed checks produce one
/// report per depth.
pub fn run_check(an: &Analysis, id: &str, opts: Options) -> Result<Vec<VerdictReport>> {
    let per_depth = |f: fn(&Analysis, usize, Options) -> VerdictReport| {
        an.depths().map(|n| f(an, n, opts)).collect()
    };
    Ok(match id {
        "ThmA" => per_depth(theorems::theorem_a),
        "Thm2.12" => per_depth(theorems::theorem_2_12),
        "ThmB" => per_depth(theorems::theorem_b),
        "Thm3.4" => per_depth(theorems::theorem_3_4),
        "Lem3.3" => per_depth(theorems::lemma_3_3),
        "Prop2.9" => vec![theorems::prop_2_9(an, opts)],
        "Prop2.11" => vec![theorems::prop_2_11(an, opts)],
        "Prop3.2" => vec![theorems::prop_3_2(an, opts)],
        "Cor4.1" => vec![theorems::cor_4_1(an, opts)],
        "Cor4.2" => vec![theorems::cor_4_2(an, opts)],
        "Cor4.3" => vec![theorems::cor_4_3(an, opts)],
        "Cor4.4" => vec![theorems::cor_4_4(an, opts)],
        "Lem2.1" => vec![lemmas::lemma_2_1(an, opts)],
        "Lem2.2" => vec![lemmas::lemma_2_2(an, opts)],
        "Lem2.3" => vec![lemmas::lemma_2_3(an, opts)],
        "Lem2.4" => vec![lemmas::lemma_2_4(an, opts)],
        "Lem2.5" => vec![lemmas::lemma_2_5(an, opts)],
        "Lem2.6" => vec![lemmas::lemma_2_6(an, opts)],
        "Lem2.7" => vec![lemmas::lemma_2_7(an, opts)],
        "Lem2.10" => vec![lemmas::lemma_2_10(an, opts)],
        "Lem3.1" => vec![lemmas::lemma_3_1(an, opts)],
        other => return Err(Error::UnknownSelector(other.to_string())),
    })
}

/// Every report the selector asks for on one group.
pub fn check_group(g: &Group, selector: &Selector, opts: Options) -> Vec<VerdictReport> {
    let ids: Vec<&str> = match selector {
        Selector::All => THEOREM_IDS.iter().chain(LEMMA_IDS).copied().collect(),
        Selector::Theorems => THEOREM_IDS.to_vec(),
        Selector::Lemmas => LEMMA_IDS.to_vec(),
        Selector::Only(id) => vec![id.as_str()],
        Selector::Sharpness | Selector::Empty => Vec::new(),
    };
    let sharp: Vec<(&str, usize)> = match selector {
        Selector::Sharpness => SHARPNESS
            .iter()
            .filter(|(name, _, _)| *name == g.name())
            .map(|&(_, id, n)| (id, n))
            .collect(),
        _ => Vec::new(),
    };
    if ids.is_empty() && sharp.is_empty() {
        return Vec::new();
    }
    let lat = SubgroupLattice::enumerate(g);
    let an = Analysis::new(&lat);
    let mut reports = Vec::new();
    for id in ids {
        let start = Instant::now();
        let mut batch = run_check(&an, id, opts).expect("known check id");
        stamp(&mut batch, start, opts);
        reports.extend(batch);
    }
    for (id, n) in sharp {
        let start = Instant::now();
        let mut report = match id {
            "ThmA" => theorems::theorem_a(&an, n, opts),
            _ => theorems::theorem_b(&an, n, opts),
        };
        report.witnesses.extend(theorems::sharpness_narrative(&an, id));
        let mut batch = vec![report];
        stamp(&mut batch, start, opts);
        reports.extend(batch);
    }
    reports
}

fn stamp(batch: &mut [VerdictReport], start: Instant, opts: Options) {
    if opts.timings {
        let ms = start.elapsed().as_millis() as u64;
        for r in batch {
            r.ms = ms;
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
}

impl Summary {
    pub fn of(reports: &[VerdictReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            if r.is_violation() {
                s.fail += 1;
            } else if r.hypothesis == Hypothesis::Vacuous {
                s.vacuous += 1;
            } else {
                s.pass += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRun {
    pub reports: Vec<VerdictReport>,
    pub summary: Summary,
}

impl SuiteRun {
    pub fn violations(&self) -> impl Iterator<Item = &VerdictReport> {
        self.reports.iter().filter(|r| r.is_violation())
    }
}

/// Checks every group in parallel on `jobs` threads (0 = rayon default).
/// Reports are ordered by group name, then check id, then depth.
pub fn run_suite(groups: &[Group], selector: &Selector, jobs: usize, opts: Options) -> Result<SuiteRun> {
    let mut seen = HashSet::new();
    if let Some(dup) = groups.iter().find(|g| !seen.insert(g.name())) {
        return Err(Error::BadParameters(format!("group `{}` listed twice", dup.name())));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameters(e.to_string()))?;
    let mut reports: Vec<VerdictReport> = pool.install(|| {
        groups
            .par_iter()
            .map(|g| check_group(g, selector, opts))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });
    reports.sort_by(|a, b| report_key(a).cmp(&report_key(b)));
    let summary = Summary::of(&reports);
    Ok(SuiteRun { reports, summary })
}

fn report_key(r: &VerdictReport) -> (&str, &str, usize) {
    match r.theorem.split_once("[n=") {
        Some((id, rest)) => (
            r.group.as_str(),
            id,
            rest.trim_end_matches(']').parse().unwrap_or(usize::MAX),
        ),
        None => (r.group.as_str(), r.theorem.as_str(), 0),
    }
}
