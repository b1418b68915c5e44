//! (Z/2)^n actions on surfaces: the closed form and the Ω¹ and nK presets.

use ramiq::chevalley_weil::{preset_closed_form, z2n_surface, z2n_unique_hz};
use ramiq::io::{example, multiplicity_line};
use ramiq::{chi_g, SheafKind};

fn main() -> ramiq::Result<()> {
    for name in ["p1xp1_involution", "klein4_surface"] {
        let s = example(name)?;
        let r = chi_g(&s)?;
        assert_eq!(z2n_surface(&s)?, r.chi_g);
        println!("{name}, O: {}", multiplicity_line(&r));
        for (id, h) in z2n_unique_hz(&s)? {
            println!("  H_Z of {id} = {:?}", h.members());
        }
        let presets = [SheafKind::Cotangent, SheafKind::CanonicalPower(-1), SheafKind::CanonicalPower(2)];
        for kind in presets {
            let p = s.clone().with_sheaf_preset(kind)?;
            let r = chi_g(&p)?;
            assert_eq!(preset_closed_form(&p)?, Some(r.chi_g.clone()));
            println!("  {kind:?}: χ = {}, {}", p.global_euler, multiplicity_line(&r));
        }
    }
    Ok(())
}
