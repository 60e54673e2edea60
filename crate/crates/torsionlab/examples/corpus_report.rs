// Runs the full verification corpus at default bounds and prints the
// human-readable table followed by the canonical JSON report.

use torsionlab::corpus::{run_all, CheckParams};

fn main() {
    let params = CheckParams::default();
    let suite = run_all(&params).expect("corpus runs to completion");
    for check in &suite.checks {
        println!("{:14} {:8} {:4} ms", check.check_id, check.status().as_str(), check.runtime_ms);
        for w in &check.witnesses {
            println!("    [{:^9}] {:42} {}", w.status.as_str(), w.claim, w.detail);
        }
    }
    println!("\noverall status: {}", suite.status().as_str());
    println!("\ncanonical JSON:\n{}", serde_json::to_string_pretty(&suite.to_json(true)).unwrap());
}
