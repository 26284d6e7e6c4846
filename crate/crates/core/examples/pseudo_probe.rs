//! The exponential-quartic surrogates A and ∇ and how ζ, Γ compare to them.

use zetalab::geometry::{Disk, Rectangle};
use zetalab::pseudo::{
    case2_growth_check, params_from_height, pseudo_zeta, pseudo_zeta_dual, ratio_probe_gamma, ratio_probe_zeta,
};
use zetalab::{ComplexPoint, PrecisionPolicy};

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();
    let p = params_from_height(50.0, 0.5)?;
    println!(
        "B = {}, C = {:.6}, R = {}, case boundary t = {:.4}",
        p.b,
        p.c,
        p.r,
        p.case_boundary_t()
    );

    for s in ["0.5", "2", "0.5+10i", "0.75+40i"] {
        let s: ComplexPoint = s.parse()?;
        let d = pseudo_zeta_dual(s, &p)?;
        println!(
            "A({s}) = {:.12}  (paths agree to {:.1e})",
            pseudo_zeta(s, &p)?,
            d.rel_defect
        );
    }

    let region = Rectangle::new(0.5, 2.0, 0.0, 20.0)?;
    let zp = ratio_probe_zeta(&region, &p, 0.05, &policy)?;
    println!(
        "\nsup |zeta/A| on [0.5,2]x[0,20]: {:.6} at {}+{}i, min |A| below the boundary {:.4}",
        zp.sup,
        zp.argmax_sigma,
        zp.argmax_t,
        zp.min_abs_pseudo_case1.unwrap_or(f64::NAN)
    );

    let high = Rectangle::new(0.5, 2.0, p.case_boundary_t(), 60.0)?;
    let c2 = case2_growth_check(&high, &p, 0.1)?;
    println!(
        "|A| >= B^(Ct)/6 above the boundary: worst {:.4} <= {:.4}  {}",
        c2.lhs, c2.rhs, c2.holds
    );

    let circle = Disk::new(ComplexPoint::new(0.5, 0.0)?, 5.0)?;
    let gp = ratio_probe_gamma(&circle, &p.with_r(20.0)?, 2048, &policy)?;
    println!("sup |Gamma(s/2)/nabla| on |s - 1/2| = 5: {:.6}", gp.sup);
    Ok(())
}
