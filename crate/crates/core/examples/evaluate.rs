//! ζ by each route, plus Γ and ξ, at a few points.
//!
//! cargo run --example evaluate -- 0.5+14.134725i

use zetalab::eval::{zeta, zeta_euler_maclaurin, zeta_global};
use zetalab::gamma_xi::{gamma_stirling, gamma_weierstrass, xi};
use zetalab::{ComplexPoint, PrecisionPolicy};

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();
    let points: Vec<ComplexPoint> = match std::env::args().nth(1) {
        Some(arg) => vec![arg.parse()?],
        None => ["2", "0.5+14.134725141734694i", "-3", "0.25+120i"]
            .iter()
            .map(|s| s.parse())
            .collect::<zetalab::Result<_>>()?,
    };

    for s in points {
        let auto = zeta(s, &policy)?;
        println!(
            "zeta({s}) = {:.15}  [{}, err {:.1e}]",
            auto.value,
            auto.method.as_str(),
            auto.err_estimate
        );

        // Both continuation routes, side by side.
        if let Ok(g) = zeta_global(s, &policy) {
            println!("  global sum      {:.15}  ({} terms)", g.value, g.terms_used);
        }
        let em = zeta_euler_maclaurin(s, &policy)?;
        println!("  euler-maclaurin {:.15}  ({} terms)", em.value, em.terms_used);

        println!("  xi(s)           {:.12e}", xi(s, &policy)?);
        match gamma_weierstrass(s, &policy) {
            Ok(g) => println!(
                "  Gamma(s)        {:.12e}  (stirling {:.12e})",
                g.value(),
                gamma_stirling(s)?.value()
            ),
            Err(e) => println!("  Gamma(s)        {e}"),
        }
    }
    Ok(())
}
