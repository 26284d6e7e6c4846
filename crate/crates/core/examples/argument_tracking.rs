//! Continuous argument along segments, and the sign-change bound on it.

use num_complex::Complex64;
use zetalab::contour::{im_log_delta, lemma21_check, sign_changes};
use zetalab::func::Xi;
use zetalab::geometry::Segment;
use zetalab::PrecisionPolicy;

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();
    let xi = Xi(policy);

    let seg = Segment::from_complex(Complex64::new(2.0, 0.0), Complex64::new(2.0, 30.0))?;
    let d = im_log_delta(&xi, &seg, &policy)?;
    println!(
        "arg xi from 2 to 2+30i: {d:.12} ({:.4} turns)",
        d / std::f64::consts::TAU
    );
    println!(
        "reversed:              {:.12}",
        im_log_delta(&xi, &seg.reversed(), &policy)?
    );

    let seg = Segment::from_complex(Complex64::new(0.6, 14.0), Complex64::new(0.6, 15.0))?;
    let crossings = sign_changes(&xi, &seg, 1e-3)?;
    println!("\nRe xi changes sign {} times on 0.6+14i -> 0.6+15i", crossings.len());
    for p in &crossings {
        println!("  at {p}");
    }

    for (a, b) in [
        ((1.5, 3.0), (3.0, 4.5)),
        ((2.0, 10.0), (2.0, 12.0)),
        ((1.6, 35.0), (2.9, 36.0)),
    ] {
        let seg = Segment::from_complex(Complex64::new(a.0, a.1), Complex64::new(b.0, b.1))?;
        let rep = lemma21_check(&xi, &seg, 1e-2, &policy)?;
        println!("|delta arg| {:.4} <= {:.4}: {}", rep.lhs, rep.rhs, rep.holds);
    }
    Ok(())
}
