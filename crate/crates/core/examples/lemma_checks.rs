//! Single instances of the classical inequalities and the Blaschke factors.

use num_complex::Complex64;
use zetalab::lemma::{
    blaschke_factor, borel_caratheodory_check, jensen_growth_check, regularized_zeta, three_circle_check,
    BlaschkeSystem, DEFAULT_SAMPLES,
};
use zetalab::{ComplexPoint, PrecisionPolicy};

fn main() -> zetalab::Result<()> {
    let policy = PrecisionPolicy::default();
    let n = DEFAULT_SAMPLES;

    let cube = |z: Complex64| -> zetalab::Result<Complex64> { Ok(z * z * z) };
    let bc = borel_caratheodory_check(&cube, 3.0, 1.0, n, &policy)?;
    println!("Borel-Caratheodory, s^3:  {:.6} <= {:.6}  {}", bc.lhs, bc.rhs, bc.holds);

    let exp = |z: Complex64| -> zetalab::Result<Complex64> { Ok(z.exp()) };
    let tc = three_circle_check(&exp, 1.0, 2.0, 4.0, n)?;
    println!("three circles, exp:       {:.6} <= {:.6}  {}", tc.lhs, tc.rhs, tc.holds);

    let a = Complex64::new(0.3, -0.2);
    let lin = move |z: Complex64| -> zetalab::Result<Complex64> { Ok((z - a) * (z - a)) };
    let origin = ComplexPoint::new(0.0, 0.0)?;
    let j = jensen_growth_check(&lin, origin, 0.5, 1.5, n, &policy)?;
    println!("Jensen, (s-a)^2:          {:.6} <= {:.6}  {}", j.lhs, j.rhs, j.holds);

    // One factor dividing out the zero at 1/2 + 14.1347i from a disk around 1 + 14i.
    let s0 = ComplexPoint::new(1.0, 14.0)?;
    let rho = ComplexPoint::new(0.5, 14.134725141734694)?;
    let sys = BlaschkeSystem::new(s0, 0.8, vec![rho])?;
    for theta in [0.0, 1.0, 2.5] {
        let on = ComplexPoint::from_complex(s0.as_complex() + Complex64::from_polar(0.8, theta))?;
        println!(
            "|z_0| on the circle at angle {theta}: {:.15}",
            blaschke_factor(&sys, 0, on)?.norm()
        );
    }
    // ζ vanishes at ρ while Z = ζ·z_0 stays away from zero next to it.
    for h in [1e-2, 1e-4, 1e-6] {
        let s = ComplexPoint::new(rho.sigma() + h, rho.t())?;
        let z = regularized_zeta(&sys, s, &policy)?;
        println!("|Z| at rho + {h:e}: {:.6}", z.norm());
    }
    Ok(())
}
