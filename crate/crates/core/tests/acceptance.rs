//! Acceptance criteria, one line each. Runs as a plain binary so the output
//! is exactly one PASS/FAIL line per criterion; exits nonzero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use common::{brute_force_subgroups, lattice_members, modular_flags_z_outer};
use modlattice::catalog;
use modlattice::classify::Structure;
use modlattice::group::{are_isomorphic, Group};
use modlattice::verify::{self, census, Analysis, Conclusion, Hypothesis, Options, Selector, SuiteRun};
use modlattice::SubgroupLattice;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn suite() -> Vec<Group> {
    catalog::standard_suite().iter().map(|e| e.construct().unwrap()).collect()
}

fn golden_classifications() -> Outcome {
    let mut timings = Vec::new();
    for (name, field, want, other, other_want) in [
        ("S3", "nearly_nilpotent", true, "nilpotent", false),
        ("hol_C7", "strongly_supersoluble", true, "nearly_nilpotent", false),
        ("hol_C13", "supersoluble", true, "strongly_supersoluble", false),
    ] {
        let start = Instant::now();
        let g = catalog::construct(name).map_err(|e| e.to_string())?;
        let lat = SubgroupLattice::enumerate(&g);
        let p = Structure::of_group(&lat).profile();
        let elapsed = start.elapsed();
        ensure(p.field(field) == Some(want), format!("{name}: {field} != {want}"))?;
        ensure(p.field(other) == Some(other_want), format!("{name}: {other} != {other_want}"))?;
        ensure(elapsed < Duration::from_secs(1), format!("{name} took {elapsed:?}"))?;
        timings.push(format!("{name} {} ms", elapsed.as_millis()));
    }
    Ok(timings.join(", "))
}

fn soundness(run: &SuiteRun, elapsed: Duration) -> Outcome {
    let bad: Vec<String> = run.violations().map(|r| format!("{} {}", r.group, r.theorem)).collect();
    ensure(bad.is_empty(), format!("violations: {bad:?}"))?;
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    let s = run.summary;
    Ok(format!(
        "{} reports, 0 violations (pass {}, vacuous {}) in {:.1} s",
        run.reports.len(),
        s.pass,
        s.vacuous,
        elapsed.as_secs_f64()
    ))
}

fn theorem_a_sharpness() -> Outcome {
    let g = catalog::construct("A4").unwrap();
    let lat = SubgroupLattice::enumerate(&g);
    let an = Analysis::new(&lat);
    let three_max = lat.n_maximal_set(3).unwrap();
    ensure(three_max == vec![lat.trivial()], format!("3-maximal set {three_max:?}"))?;
    ensure(an.pi() == 2, "|π(A4)| != 2")?;
    ensure(!an.structure.is_supersoluble(), "A4 supersoluble")?;
    let reports = verify::run_check(&an, "ThmA", Options::default()).unwrap();
    let r = reports.iter().find(|r| r.theorem == "ThmA[n=3]").ok_or("no ThmA[n=3] report")?;
    let failed = r.failed_clauses();
    ensure(failed.len() == 1 && failed[0].starts_with("n ≤"), format!("failed clauses {failed:?}"))?;
    ensure(r.conclusion == Conclusion::Fails, "conclusion does not fail")?;
    Ok("3-maximal = {1}, |π| = 2 < 3, not supersoluble, only the bound fails".into())
}

fn theorem_b_sharpness() -> Outcome {
    let g = catalog::construct("A4xC2").unwrap();
    let lat = SubgroupLattice::enumerate(&g);
    let s = Structure::of_group(&lat);
    let r = s.residual_us().map_err(|e| e.to_string())?;
    let (rg, _) = g.from_subgroup(lat.subgroup(r), "R");
    let v4 = catalog::elementary_abelian(2, 2).unwrap();
    ensure(g.order() == 24, "order")?;
    ensure(are_isomorphic(&rg, &v4), format!("residual of order {} is not V4", rg.order()))?;
    ensure(!s.is_nilpotent_hall(r), "residual is a nilpotent Hall subgroup")?;
    let min = census(&lat).min_n_all_modular;
    ensure(min == Some(4), format!("min n = {min:?}"))?;
    ensure(4 > s.prime_spectrum().len() + 1, "bound not exceeded")?;
    Ok("residual ≅ V4 of order 4 in |G| = 24, not nilpotent Hall, min n = 4 > 3".into())
}

fn lemma_properties(run: &SuiteRun) -> Outcome {
    let mut counts = Vec::new();
    for id in ["Lem2.1", "Lem2.2", "Lem2.3"] {
        let reports: Vec<_> = run.reports.iter().filter(|r| r.theorem == id).collect();
        ensure(reports.len() == suite().len(), format!("{id}: {} reports", reports.len()))?;
        for r in &reports {
            ensure(
                r.hypothesis == Hypothesis::Holds && r.conclusion == Conclusion::Holds,
                format!("{id} on {}: {} / {}", r.group, r.hypothesis, r.conclusion),
            )?;
        }
        counts.push(format!("{id} holds on {} groups", reports.len()));
    }
    Ok(counts.join(", "))
}

fn lattice_oracle() -> Outcome {
    let mut checked = 0;
    for g in suite().iter().filter(|g| g.order() <= 24) {
        let lat = SubgroupLattice::enumerate(g);
        ensure(lattice_members(&lat) == brute_force_subgroups(g), format!("{} differs", g.name()))?;
        checked += 1;
    }
    for (name, want) in [("C7", 2), ("Q8", 6), ("S4", 30)] {
        let g = catalog::construct(name).unwrap();
        let got = brute_force_subgroups(&g).len();
        ensure(got == want && SubgroupLattice::enumerate(&g).len() == want, format!("{name}: {got}"))?;
    }
    Ok(format!("{checked} groups agree; C_p 2, Q8 6, S4 30"))
}

fn modularity_agreement() -> Outcome {
    let mut subgroups = 0;
    for g in suite() {
        let lat = SubgroupLattice::enumerate(&g);
        let other = modular_flags_z_outer(&lat);
        ensure(other == lat.modular_flags(), format!("{} disagrees", g.name()))?;
        for h in (0..lat.len()).filter(|&h| lat.is_normal(h)) {
            ensure(lat.is_modular(h), format!("{}: normal #{h} not modular", g.name()))?;
        }
        subgroups += lat.len();
    }
    Ok(format!("{subgroups} subgroups agree, every normal subgroup modular"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_modlattice");
    let run = || {
        std::process::Command::new(bin)
            .args(["verify", "--suite", "all", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    ensure(a.status.success() && b.status.success(), "nonzero exit")?;
    ensure(a.stdout == b.stdout, "outputs differ")?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let start = Instant::now();
    let run = verify::run_suite(&suite(), &Selector::All, 0, Options::default()).unwrap();
    let elapsed = start.elapsed();

    let results: Vec<(&str, Outcome)> = vec![
        ("golden classifications", golden_classifications()),
        ("soundness gate", soundness(&run, elapsed)),
        ("Theorem A sharpness on A4", theorem_a_sharpness()),
        ("Theorem B sharpness on A4xC2", theorem_b_sharpness()),
        ("lemma property suites", lemma_properties(&run)),
        ("lattice oracle equivalence", lattice_oracle()),
        ("modularity loop orders", modularity_agreement()),
        ("determinism", determinism()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
