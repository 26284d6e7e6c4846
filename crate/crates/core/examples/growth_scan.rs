//! Growth of |ζ(σ + it)| in t, with CSV output.
//!
//! cargo run --release --example growth_scan > line.csv

use zetalab::growth::{bound_check_zetaupd, mu_estimate, scan_line, to_csv};
use zetalab::PrecisionPolicy;

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();

    for sigma in [0.5, 0.75, 1.0, 1.5, 2.0] {
        let mu = mu_estimate(sigma, 3.0, 200.0, 0.05, &policy)?;
        eprintln!(
            "sigma {sigma:<4}  max log|zeta|/log t = {:.4} at t = {:.2}, slope {:.4}",
            mu.sup_ratio,
            mu.argmax_t,
            mu.fitted_exponent.unwrap_or(f64::NAN)
        );
    }

    let b = bound_check_zetaupd(0.5, 100.0, &policy)?;
    eprintln!(
        "c = {:.4} at {}, c' = {:.4} at {}",
        b.c, b.c_witness, b.c_prime, b.c_prime_witness
    );

    print!("{}", to_csv(&scan_line(0.5, 3.0, 60.0, 0.05, &policy)?));
    Ok(())
}
