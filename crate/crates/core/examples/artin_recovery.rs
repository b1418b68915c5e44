//! The characteristic modules θ_H and the recovery of a class function from
//! its restrictions to cyclic subgroups.

use ramiq::cyclotomic::rational;
use ramiq::repring::{artin_recover, localized_division, theta, theta_direct, theta_recursive, LinearCharacter, Turn};
use ramiq::{ClassFunction, Cyclotomic, FiniteGroup};

fn main() -> ramiq::Result<()> {
    let z6 = FiniteGroup::cyclic(6)?;
    for h in z6.cyclic_subgroups() {
        let t = theta(&h)?;
        assert_eq!(theta_direct(&h)?, theta_recursive(&h)?);
        println!("θ_H for H = {:?}: {t}", h.members());
    }

    let chi = ClassFunction::from_fn(&z6, |g| Cyclotomic::from_rational(rational(g as i64 * g as i64, 3)));
    let back = artin_recover(&chi)?;
    println!("χ = {chi}\nrecovered = {back}");
    assert_eq!(back, chi);

    // dividing θ by (1 − φ) where φ is a faithful character of Z/4
    let z4 = FiniteGroup::cyclic(4)?;
    let h = z4.whole();
    let phi = LinearCharacter::on_cyclic(h.local(), 1, Turn::new(1, 4))?;
    let q = localized_division(&theta(&h)?, &phi)?;
    println!("θ_(Z/4) / (1 − φ) = {q}");
    Ok(())
}
