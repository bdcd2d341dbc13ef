//! Check every shipped reference addressing against its graph, printing
//! the truncation shortfalls where the table is only exact up to s.

use halfcube::certify::{fixture_manifest, load_fixture, verify_certificate};
use halfcube::families;

fn main() {
    for entry in fixture_manifest() {
        let g = families::make(&entry.family).unwrap();
        let a = load_fixture(&entry.id).unwrap();
        let report = verify_certificate(&g, &a, entry.scale, entry.s).unwrap();
        println!(
            "{:<14} {:<12} scale {} s={} m={:<3} -> {}{}",
            entry.id,
            g.name,
            entry.scale,
            entry.s,
            a.m,
            if report.pass { "pass" } else { "FAIL" },
            if report.shortfalls.is_empty() {
                String::new()
            } else {
                format!(" ({} truncated pairs)", report.shortfalls.len())
            }
        );
        for v in report.violations.iter().take(3) {
            println!("    violation: {v:?}");
        }
    }
}
