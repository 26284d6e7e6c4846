//! Seeded random sweeps over the inequality checkers.
//!
//! cargo run --release --example sweeps -- 200 42

use zetalab::sweep::{run_sweep, Suite};
use zetalab::PrecisionPolicy;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let policy = PrecisionPolicy::default();

    for suite in Suite::ALL {
        let rep = run_sweep(suite, seed, n, &policy);
        println!(
            "{:<30} n={n} violations={} errors={} worst lhs/rhs={:.4} (instance {:?})",
            suite.name(),
            rep.violations,
            rep.errors,
            rep.max_ratio,
            rep.worst_index
        );
    }
}
