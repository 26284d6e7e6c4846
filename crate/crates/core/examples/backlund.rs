//! The zero-regularized growth pipeline around σ0 + iT.
//!
//! cargo run --release --example backlund -- 30

use zetalab::lemma::backlund_pipeline;
use zetalab::PrecisionPolicy;

fn main() -> zetalab::Result<()> {
    let t: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(30.0);
    let rep = backlund_pipeline(1.25, t, 0.1, 0.5, &PrecisionPolicy::default())?;
    let r = &rep.radii;
    println!("eps {}  R0 {}  R1 {}  R {}  R2 {}", r.epsilon, r.r0, r.r1, r.r, r.r2);
    println!("zeros near the window:");
    for z in &rep.zeros_in_window {
        println!("  {}", z.point);
    }
    println!(
        "K: winding {}, grid {}, box {}",
        rep.k_winding, rep.k_grid, rep.k_bounding_box
    );
    println!("unimodularity defect {:.2e}", rep.unimodularity_defect);
    println!(
        "max |log Z| on C2 {:.4}, of which K log term {:.4}",
        rep.max_abs_log_z_on_c2, rep.k_log_term
    );
    for (name, c) in [
        ("Borel-Caratheodory", &rep.borel_caratheodory),
        ("  real-part form", &rep.borel_caratheodory_real_part),
        ("three circles", &rep.three_circle),
    ] {
        println!("{name:<20} {:.4e} <= {:.4e}  {}", c.lhs, c.rhs, c.holds);
    }
    println!("all hold: {}", rep.all_hold);
    Ok(())
}
