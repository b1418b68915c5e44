mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramiq::cyclotomic::{rational, Rational};
use ramiq::ramification::{compute_hz, tau};
use ramiq::repring::{theta, LinearCharacter, Turn};
use ramiq::{chi_g, CharacterTable, ClassFunction, Cyclotomic, FiniteGroup, Scenario, Stratum};
use ramiq::ramification::{NormalEigen, SheafEigen};

use common::{corpus, random_class_function, test_groups};

fn cyclotomic_strategy() -> impl Strategy<Value = Cyclotomic> {
    (1u64..=24, prop::collection::vec((-20i64..=20, 1i64..=7), 1..=24)).prop_map(|(n, terms)| {
        let terms: Vec<Rational> = terms.into_iter().map(|(a, b)| rational(a, b)).collect();
        Cyclotomic::from_powers(n, &terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn inverses_are_exact(x in cyclotomic_strategy()) {
        prop_assume!(!x.is_zero());
        let inv = x.inverse().unwrap();
        prop_assert!(x.checked_mul(&inv).unwrap().is_one());
        prop_assert_eq!(x.conj().inverse().unwrap(), inv.conj());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn frobenius_reciprocity(group_index in 0usize..5, h_index in 0usize..16, seed in any::<u64>()) {
        let (_, table) = &test_groups()[group_index];
        let g = table.group();
        let subgroups = g.cyclic_subgroups();
        let h = &subgroups[h_index % subgroups.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_class_function(h.local(), &mut rng);
        let chi = random_class_function(g, &mut rng);
        let lhs = psi.induce(h).unwrap().inner_product(&chi).unwrap();
        let rhs = psi.inner_product(&chi.restrict(h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// `θ_H` vanishes on every proper subgroup of `H`.
#[test]
fn theta_restricts_to_zero_on_proper_subgroups() {
    for (name, table) in test_groups() {
        for h in table.group().cyclic_subgroups() {
            let t = theta(&h).unwrap();
            for b in h.local().cyclic_subgroups().iter().filter(|b| b.order() < h.order()) {
                assert!(t.restrict(b).unwrap().is_zero(), "{name}: H = {:?}", h.members());
            }
        }
    }
}

/// `Res_B τ_{Z,H} = τ_{Z,B}` for `B ⊆ H` both in `H_Z`.
#[test]
fn tau_is_compatible_with_restriction() {
    let mut checked = 0;
    for (name, s) in corpus() {
        for z in &s.strata {
            let hz = compute_hz(z).unwrap();
            for h in &hz {
                let t = tau(z, h).unwrap();
                for b in hz.iter().filter(|b| b.is_subgroup_of(h) && b.order() < h.order()) {
                    let rel = b.relative_to(h).unwrap();
                    assert_eq!(t.restrict(&rel).unwrap(), tau(z, b).unwrap(), "{name}/{}", z.id);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn artin_recovery_on_random_groups_is_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let orders: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(2..=5)).collect();
        let g = FiniteGroup::abelian_product(&orders).unwrap();
        let chi = random_class_function(&g, &mut rng);
        assert_eq!(ramiq::repring::artin_recover(&chi).unwrap(), chi, "{orders:?}");
    }
}

fn faithful(h: &ramiq::Subgroup, k: i64, n: i64) -> LinearCharacter {
    LinearCharacter::on_cyclic(h.local(), h.to_local(h.generator().unwrap()).unwrap(), Turn::new(k, n)).unwrap()
}

fn fixed_point(id: &str, h: &ramiq::Subgroup, normal: LinearCharacter, sheaf: LinearCharacter) -> Stratum {
    Stratum::point(
        id,
        h.clone(),
        vec![NormalEigen { character: normal, multiplicity: 1, degree: 0 }],
        vec![SheafEigen { character: sheaf, rank: 1, degree: 0 }],
    )
}

/// `z ↦ ζ_n^k z` on P¹ with `O`: only the constants survive, so `χ_G` is trivial.
#[test]
fn rotations_of_the_projective_line() {
    for n in 2..=12i64 {
        let g = FiniteGroup::cyclic(n as usize).unwrap();
        let table = CharacterTable::abelian(&g).unwrap();
        let whole = g.whole();
        for k in (1..n).filter(|k| num_integer::Integer::gcd(k, &n) == 1) {
            let strata = vec![
                fixed_point("0", &whole, faithful(&whole, -k, n), LinearCharacter::trivial(whole.local())),
                fixed_point("inf", &whole, faithful(&whole, k, n), LinearCharacter::trivial(whole.local())),
            ];
            let s = Scenario::on_curve(table.clone(), 0, 1, 0, strata).unwrap();
            let r = chi_g(&s).unwrap();
            assert_eq!(r.chi_g, ClassFunction::trivial(&g), "n = {n}, k = {k}");
            assert!(!r.is_flagged());
        }
    }
}

/// The hyperelliptic involution on a genus-g curve fixes `2g + 2` points.
/// `H⁰(ω)` is `g` copies of sign and `H¹(ω)` is trivial; dually for `O`.
#[test]
fn hyperelliptic_curves_of_every_small_genus() {
    let g2 = FiniteGroup::cyclic(2).unwrap();
    let table = CharacterTable::abelian(&g2).unwrap();
    let whole = g2.whole();
    let sign = faithful(&whole, 1, 2);
    let trivial = LinearCharacter::trivial(whole.local());
    for genus in 1..=6u32 {
        let points = |sheaf: &LinearCharacter| -> Vec<Stratum> {
            (0..2 * genus + 2)
                .map(|i| fixed_point(&format!("W{i}"), &whole, sign.clone(), sheaf.clone()))
                .collect()
        };
        let g = i64::from(genus);
        let canonical = Scenario::on_curve(table.clone(), genus, 1, 2 * g - 2, points(&sign)).unwrap();
        let r = chi_g(&canonical).unwrap();
        assert_eq!(r.multiplicities, vec![rational(-1, 1), rational(g, 1)], "ω, genus {genus}");
        let structure = Scenario::on_curve(table.clone(), genus, 1, 0, points(&trivial)).unwrap();
        let r = chi_g(&structure).unwrap();
        assert_eq!(r.multiplicities, vec![rational(1, 1), rational(-g, 1)], "O, genus {genus}");
    }
}
