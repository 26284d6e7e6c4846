//! Count and locate zeros of ξ with the argument principle.

use zetalab::contour::{count_zeros_rectangle, density_window, locate_zeros};
use zetalab::func::Xi;
use zetalab::geometry::Rectangle;
use zetalab::PrecisionPolicy;

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();
    let xi = Xi(policy);

    for t_max in [30.0, 50.0, 100.0] {
        let rect = Rectangle::new(0.0, 1.0, 0.0, t_max)?;
        let rep = count_zeros_rectangle(&xi, &rect, &policy)?;
        println!(
            "zeros in [0,1]x[0,{t_max}]: {}  (residual {:.1e}, {} tracked steps)",
            rep.winding, rep.residual, rep.segments_evaluated
        );
    }

    let rect = Rectangle::new(0.0, 1.0, 10.0, 40.0)?;
    println!("\nlocated in [0,1]x[10,40]:");
    for z in locate_zeros(&xi, &rect, 1e-6, &policy)? {
        println!("  {}  multiplicity {}", z.point, z.multiplicity);
    }

    // Nothing off the critical line at these heights.
    for (lambda, t, e) in [(0.9, 20.0, 5.0), (0.6, 14.1, 0.5), (0.51, 60.0, 20.0)] {
        let n = density_window(lambda, t, e, &policy)?.winding;
        println!("zeros with sigma > {lambda}, |t - {t}| < {e}: {n}");
    }
    Ok(())
}
