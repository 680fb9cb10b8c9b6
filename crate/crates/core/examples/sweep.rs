//! Development sweep: run the verifier over selected tables and print
//! anything that is not green. Usage: sweep [tables] [max_dim]

use prehomog_core::verify::{run_verify, Status, VerifyConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let tables = args.get(1).map(|t| {
        t.split(',')
            .map(|s| s.trim().to_string())
            .collect::<std::collections::BTreeSet<_>>()
    });
    let max_dim: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(60);
    let check_invariants = args.get(3).map_or(true, |s| s != "noinv");
    let cfg = VerifyConfig {
        tables,
        max_dim,
        samples: 5,
        height: 100,
        seed: 42,
        check_invariants,
    };
    let t0 = std::time::Instant::now();
    let report = run_verify(&cfg);
    println!(
        "{} records in {:?}; counts: {:?}",
        report.entries.len(),
        t0.elapsed(),
        report.counts
    );
    for e in &report.entries {
        if e.status == Status::Fail {
            println!(
                "FAIL {} [{}] {} | dims {}/{} pre={:?} exp={:?} got={:?} note={:?}",
                e.id,
                e.variant,
                e.params,
                e.group_dim,
                e.space_dim,
                e.prehomogeneous,
                e.expected_isotropy,
                e.certified_isotropy,
                e.note
            );
            for i in &e.invariants {
                if i.status != "pass" && i.status != "unprinted" && i.status != "skipped" {
                    println!("    invariant {} -> {} {:?}", i.name, i.status, i.detail);
                }
            }
        }
    }
}
