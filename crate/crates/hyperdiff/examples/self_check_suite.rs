// The built-in self-checks, run in parallel.

use hyperdiff::cli::suite::run_suite;

fn main() {
    let records = run_suite();
    for r in &records {
        println!("{} -> {}", r.summary.join("; "), r.verification);
    }
    assert!(records.iter().all(|r| !r.verification.failed()));
}
