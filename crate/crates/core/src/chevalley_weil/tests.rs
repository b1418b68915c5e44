use std::collections::BTreeMap;
use std::sync::Arc;

use super::*;
use crate::cyclotomic::{rational, Cyclotomic};
use crate::group::{FiniteGroup, Subgroup};
use crate::ramification::{NormalEigen, SheafEigen, Stratum};
use crate::repring::{CharacterTable, ClassFunction, LinearCharacter, Turn};
use crate::Error;

fn sign_on(h: &Subgroup) -> LinearCharacter {
    LinearCharacter::on_cyclic(h.local(), h.to_local(h.generator().unwrap()).unwrap(), Turn::new(1, 2))
        .unwrap()
}

fn line(character: LinearCharacter, degree: i64) -> NormalEigen {
    NormalEigen { character, multiplicity: 1, degree }
}

fn piece(character: LinearCharacter, rank: u32, degree: i64) -> SheafEigen {
    SheafEigen { character, rank, degree }
}

fn z2() -> (Arc<FiniteGroup>, CharacterTable) {
    let g = FiniteGroup::cyclic(2).unwrap();
    let t = CharacterTable::abelian(&g).unwrap();
    (g, t)
}

fn involution_points(g: &Arc<FiniteGroup>, count: usize, sheaf_sign: bool) -> Vec<Stratum> {
    let h = g.whole();
    (0..count)
        .map(|i| {
            let sheaf = if sheaf_sign { sign_on(&h) } else { LinearCharacter::trivial(h.local()) };
            Stratum::point(format!("P{i}"), h.clone(), vec![line(sign_on(&h), 0)], vec![piece(sheaf, 1, 0)])
        })
        .collect()
}

fn p1xp1() -> Scenario {
    let (g, t) = z2();
    let h = g.whole();
    let curves = ["C0", "Cinf"]
        .iter()
        .map(|id| {
            Stratum::curve(*id, h.clone(), 0, vec![line(sign_on(&h), 0)], vec![piece(
                LinearCharacter::trivial(h.local()),
                1,
                0,
            )])
        })
        .collect();
    let numbers = CurveNumbers { k_dot_c: -2, self_intersection: 0 };
    let inv = SurfaceInvariants {
        chi_o: 1,
        k2: 8,
        curves: BTreeMap::from([("C0".to_string(), numbers), ("Cinf".to_string(), numbers)]),
    };
    Scenario::on_surface(t, Some(inv), 1, rational(1, 1), curves).unwrap()
}

fn klein_surface() -> Scenario {
    let g = FiniteGroup::abelian_product(&[2, 2]).unwrap();
    let t = CharacterTable::abelian(&g).unwrap();
    let whole = g.whole();
    // χ_x: −1 on a, ab (acts on dx); χ_y: −1 on b, ab (acts on dy)
    let chi_x = LinearCharacter::from_turns(whole.local(), vec![Turn::new(0, 1), Turn::new(1, 2), Turn::new(0, 1), Turn::new(1, 2)]).unwrap();
    let chi_y = LinearCharacter::from_turns(whole.local(), vec![Turn::new(0, 1), Turn::new(0, 1), Turn::new(1, 2), Turn::new(1, 2)]).unwrap();
    let mut strata = Vec::new();
    for (gen, name) in [(1, "x"), (2, "y")] {
        let h = g.subgroup(&[0, gen]).unwrap();
        for at in ["0", "inf"] {
            strata.push(Stratum::curve(format!("C_{name}{at}"), h.clone(), 0, vec![line(sign_on(&h), 0)], vec![piece(
                LinearCharacter::trivial(h.local()),
                1,
                0,
            )]));
        }
    }
    for at in ["00", "0inf", "inf0", "infinf"] {
        strata.push(Stratum::point(
            format!("P_{at}"),
            whole.clone(),
            vec![line(chi_x.clone(), 0), line(chi_y.clone(), 0)],
            vec![piece(LinearCharacter::trivial(whole.local()), 1, 0)],
        ));
    }
    let inv = SurfaceInvariants { chi_o: 1, k2: 8, curves: BTreeMap::new() };
    Scenario::on_surface(t, Some(inv), 1, rational(1, 1), strata).unwrap()
}

fn ints(v: &[i64]) -> Vec<crate::Rational> {
    v.iter().map(|&x| rational(x, 1)).collect()
}

#[test]
fn antipode_on_projective_line() {
    let (g, t) = z2();
    let s = Scenario::on_curve(t, 0, 1, 0, involution_points(&g, 2, false)).unwrap();
    let r = chi_g(&s).unwrap();
    assert_eq!(r.chi_g, ClassFunction::trivial(&g));
    assert_eq!(r.multiplicities, ints(&[1, 0]));
    assert!(r.trace_ok() && r.integral);
    assert_eq!(r.gamma_of("P0").unwrap().values()[1], Cyclotomic::from_rational(rational(1, 2)));
}

#[test]
fn hyperelliptic_genus_two_canonical_sheaf() {
    let (g, t) = z2();
    let s = Scenario::on_curve(t, 2, 1, 2, involution_points(&g, 6, true)).unwrap();
    let r = chi_g(&s).unwrap();
    assert_eq!(r.multiplicities, ints(&[-1, 2]));
    let (lhs, rhs) = lefschetz_trace_check(&s, 1).unwrap();
    assert_eq!(lhs, Cyclotomic::from_integer(-3));
    assert_eq!(rhs, lhs);
    assert_eq!(multiplicities_by_stratum(&s).unwrap(), r.multiplicities);
}

#[test]
fn involution_of_p1xp1_with_fixed_curves() {
    let s = p1xp1();
    let r = chi_g(&s).unwrap();
    assert_eq!(r.chi_g, ClassFunction::trivial(&s.group));
    assert!(r.trace_ok());
    assert_eq!(z2n_surface(&s).unwrap(), r.chi_g);
    assert_eq!(z2n_unique_hz(&s).unwrap().len(), 2);
}

#[test]
fn presets_on_p1xp1() {
    for n in -2..=3 {
        let s = p1xp1().with_sheaf_preset(SheafKind::CanonicalPower(n)).unwrap();
        assert_eq!(s.global_euler, rational(1 + 4 * n * (n - 1), 1));
        let r = chi_g(&s).unwrap();
        assert!(r.trace_ok(), "n = {n}");
        assert_eq!(canonical_power_closed_form(&s, n).unwrap(), r.chi_g, "n = {n}");
        assert_eq!(z2n_surface(&s).unwrap(), r.chi_g);
    }
    let s = p1xp1().with_sheaf_preset(SheafKind::Cotangent).unwrap();
    assert_eq!(s.global_euler, rational(-2, 1));
    let r = chi_g(&s).unwrap();
    assert!(r.trace_ok());
    assert_eq!(cotangent_closed_form(&s).unwrap(), r.chi_g);
}

#[test]
fn klein_four_surface() {
    let s = klein_surface();
    let r = chi_g(&s).unwrap();
    assert_eq!(r.chi_g, ClassFunction::trivial(&s.group));
    assert!(r.trace_ok());
    assert_eq!(r.trace_table[3].lefschetz, Cyclotomic::one());
    assert_eq!(z2n_surface(&s).unwrap(), r.chi_g);
    for (_, h) in z2n_unique_hz(&s).unwrap() {
        assert_eq!(h.order(), 2);
    }
    for kind in [SheafKind::Cotangent, SheafKind::CanonicalPower(2), SheafKind::CanonicalPower(-1)] {
        let p = klein_surface().with_sheaf_preset(kind).unwrap();
        let r = chi_g(&p).unwrap();
        assert!(r.trace_ok() && r.integral, "{kind:?}");
        assert_eq!(preset_closed_form(&p).unwrap().unwrap(), r.chi_g);
    }
}

#[test]
fn free_surface_gives_multiple_of_regular() {
    let (g, t) = z2();
    let inv = SurfaceInvariants { chi_o: 2, k2: 0, curves: BTreeMap::new() };
    let s = Scenario::on_surface(t, Some(inv), 1, rational(2, 1), vec![]).unwrap();
    assert_eq!(z2n_surface(&s).unwrap(), ClassFunction::regular(&g));
    assert_eq!(chi_g(&s).unwrap().chi_g, ClassFunction::regular(&g));
}

#[test]
fn deleted_stratum_is_flagged() {
    let (g, t) = z2();
    let s = Scenario::on_curve(t, 2, 1, 2, involution_points(&g, 5, true)).unwrap();
    let r = chi_g(&s).unwrap();
    assert!(r.is_flagged());
    assert_eq!(r.ensure_consistent(), Err(Error::InconsistentTrace(vec![1])));
}

#[test]
fn empty_fixed_data_is_not_integral() {
    let (_, t) = z2();
    let s = Scenario::on_curve(t, 0, 1, 0, vec![]).unwrap();
    let r = chi_g(&s).unwrap();
    assert!(r.trace_ok());
    assert!(!r.integral && r.is_flagged());
}

#[test]
fn presets_need_surface_data() {
    let (g, t) = z2();
    let s = Scenario::on_curve(t, 0, 1, 0, involution_points(&g, 2, false)).unwrap();
    assert!(matches!(s.with_sheaf_preset(SheafKind::Cotangent), Err(Error::HypothesisViolation(_))));
}

#[test]
fn adjunction_is_checked() {
    let mut s = p1xp1();
    s.surface_invariants.as_mut().unwrap().curves.get_mut("C0").unwrap().k_dot_c = 0;
    assert!(matches!(s.validate(), Err(Error::InvalidStratum { .. })));
}
