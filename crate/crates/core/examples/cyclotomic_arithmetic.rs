//! Exact arithmetic in cyclotomic fields.

use ramiq::cyclotomic::{euler_phi, rational};
use ramiq::Cyclotomic;

fn main() -> ramiq::Result<()> {
    let z8 = Cyclotomic::root_of_unity(8, 1)?;
    let z3 = Cyclotomic::root_of_unity(3, 1)?;

    // ζ8² = i and ζ8⁴ = −1 reduce to smaller conductors
    println!("ζ8^2 = {} (conductor {})", z8.pow(2)?, z8.pow(2)?.conductor());
    println!("ζ8^4 = {}", z8.pow(4)?);

    // mixing fields works in the compositum Q(ζ24)
    let sum = &z8 + &z3;
    println!("ζ8 + ζ3 = {sum} in Q(ζ{}), degree {}", sum.conductor(), euler_phi(sum.conductor()));

    let one_minus = &Cyclotomic::one() - &z3;
    let inv = one_minus.inverse()?;
    println!("1/(1 − ζ3) = {inv}");
    assert!((&inv * &one_minus).is_one());

    // 1 + ζ3 + ζ3² = 0
    let s = &(&Cyclotomic::one() + &z3) + &z3.pow(2)?;
    println!("1 + ζ3 + ζ3^2 = {s}");

    let half = Cyclotomic::from_rational(rational(1, 2));
    let x = &half * &(&z8 + &z8.conj());
    println!("(ζ8 + ζ8⁻¹)/2 = {x}, rational: {}", x.is_rational());
    println!("as JSON: {}", serde_json::to_string(&x).expect("serializable"));
    Ok(())
}
