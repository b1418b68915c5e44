//! χ_G on curves: the antipode of P¹, a hyperelliptic involution built in
//! code, and the multiplicity formula.

use ramiq::chevalley_weil::multiplicities_by_stratum;
use ramiq::io::{example, multiplicity_line};
use ramiq::ramification::{NormalEigen, SheafEigen};
use ramiq::repring::{LinearCharacter, Turn};
use ramiq::{chi_g, CharacterTable, FiniteGroup, Scenario, Stratum};

fn main() -> ramiq::Result<()> {
    let antipode = chi_g(&example("p1_antipode")?)?;
    println!("P1 antipode, O: {}", multiplicity_line(&antipode));

    // y² = f(x) of degree 2g + 2 with y ↦ −y, and E = ω
    let g2 = FiniteGroup::cyclic(2)?;
    let whole = g2.whole();
    let sign = LinearCharacter::on_cyclic(whole.local(), 1, Turn::new(1, 2))?;
    for genus in 2..=4u32 {
        let points = (0..2 * genus + 2)
            .map(|i| {
                Stratum::point(
                    format!("W{i}"),
                    whole.clone(),
                    vec![NormalEigen { character: sign.clone(), multiplicity: 1, degree: 0 }],
                    vec![SheafEigen { character: sign.clone(), rank: 1, degree: 0 }],
                )
            })
            .collect();
        let s = Scenario::on_curve(CharacterTable::abelian(&g2)?, genus, 1, 2 * i64::from(genus) - 2, points)?;
        let r = chi_g(&s)?;
        assert_eq!(multiplicities_by_stratum(&s)?, r.multiplicities);
        println!("genus {genus}, ω: {}", multiplicity_line(&r));
    }

    let free = chi_g(&example("free_action_curve")?)?;
    println!("free Z/3 on genus 4, O: {}", multiplicity_line(&free));
    Ok(())
}
