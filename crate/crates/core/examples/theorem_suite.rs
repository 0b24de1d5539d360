//! Runs every check over the standard catalog and prints a summary line per
//! group, followed by any violations.

use modlattice::catalog;
use modlattice::verify::{run_suite, Options, Selector};

fn main() -> modlattice::Result<()> {
    let groups = catalog::standard_suite()
        .iter()
        .map(|e| e.construct())
        .collect::<modlattice::Result<Vec<_>>>()?;
    let opts = Options { fast: false, timings: true };
    let run = run_suite(&groups, &Selector::All, 0, opts)?;

    for g in &groups {
        let mine: Vec<_> = run.reports.iter().filter(|r| r.group == g.name()).collect();
        let ms: u64 = mine.iter().map(|r| r.ms).sum();
        println!("{:<16} order {:>4}  {:>3} reports  {:>6} ms", g.name(), g.order(), mine.len(), ms);
    }
    let s = run.summary;
    println!("pass {}  fail {}  vacuous {}", s.pass, s.fail, s.vacuous);
    for v in run.violations() {
        println!("VIOLATION {} {}: {:?}", v.group, v.theorem, v.failed_clauses());
        for w in &v.witnesses {
            println!("    {w}");
        }
    }
    Ok(())
}
