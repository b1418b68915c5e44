//! Strata, H_Z, τ and the ramification modules Γ_Z with their closed forms.

use ramiq::io::example;
use ramiq::ramification::{compute_hz, gamma, gamma_cyclic, gamma_point, k_set, tau, theta_z};

fn main() -> ramiq::Result<()> {
    let s = example("z4_curve")?;
    for z in &s.strata {
        println!("stratum {} (stabilizer {:?})", z.id, z.stabilizer.members());
        for h in compute_hz(z)? {
            println!(
                "  H = {:?}: K = {:?}, θ_Z = {}, τ = {}",
                h.members(),
                k_set(z, &h)?,
                theta_z(z, &h)?,
                tau(z, &h)?
            );
        }
        let g = gamma(z)?;
        assert_eq!(g, gamma_point(z)?);
        assert_eq!(g, gamma_cyclic(z)?);
        println!("  Γ = {g}");
    }

    let surface = example("klein4_surface")?;
    let curve = surface.stratum("C_x0").expect("shipped stratum");
    println!("Klein surface, curve C_x0: Γ = {}", gamma(curve)?);
    Ok(())
}
