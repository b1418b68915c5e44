use crate::cyclotomic::{rational, Cyclotomic};
use crate::group::Subgroup;
use crate::ramification::{GradedClassValue, Stratum, StratumDim};
use crate::repring::{localized_division, theta, theta_direct, ClassFunction};
use crate::{debug_checks_enabled, Error, Result};

fn on_subgroup(h: &Subgroup, mut f: impl FnMut(usize) -> Cyclotomic) -> ClassFunction {
    ClassFunction::from_fn(h.local(), |x| f(h.to_parent(x)))
}

fn try_on_subgroup(
    h: &Subgroup,
    mut f: impl FnMut(usize) -> Result<Cyclotomic>,
) -> Result<ClassFunction> {
    ClassFunction::try_from_fn(h.local(), |x| f(h.to_parent(x)))
}

fn check_member(z: &Stratum, h: &Subgroup) -> Result<()> {
    if h.is_subgroup_of(&z.stabilizer) {
        Ok(())
    } else {
        Err(Error::NotASubgroup(format!(
            "{:?} is not contained in the stabilizer of {}",
            h.members(),
            z.id
        )))
    }
}

/// `H_Z`: the cyclic subgroups `H ⊆ G_Z` fixing no normal direction, as
/// subgroups of the ambient group. For an ambient stratum, every cyclic
/// subgroup of `G_Z`.
pub fn compute_hz(z: &Stratum) -> Result<Vec<Subgroup>> {
    let gz = &z.stabilizer;
    let mut out = Vec::new();
    for local in gz.local().cyclic_subgroups() {
        let h = gz.lift_subgroup(&local)?;
        let keep = match z.dim {
            StratumDim::Ambient => true,
            _ => {
                let gen = h.generator().expect("cyclic");
                !z.fixes_normal_direction(gen)
            }
        };
        if keep {
            out.push(h);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyHZ(z.id.clone()));
    }
    Ok(out)
}

/// `K_{Z,H}`: the elements of `H` fixing some normal direction (parent
/// indices, sorted). Just the identity for an ambient stratum.
pub fn k_set(z: &Stratum, h: &Subgroup) -> Result<Vec<usize>> {
    check_member(z, h)?;
    Ok(match z.dim {
        StratumDim::Ambient => vec![h.parent().identity()],
        _ => h
            .members()
            .iter()
            .copied()
            .filter(|&g| z.fixes_normal_direction(g))
            .collect(),
    })
}

/// `θ_{Z,H}`: 1 on `H ∖ K_{Z,H}` and 0 on `K_{Z,H}`, on `h.local()`.
///
/// With debug checks on, compared with
/// `[1_H] − Σ_{B ⊆ K_{Z,H} cyclic} (|B|/|H|) Ind_B^H θ_B`.
pub fn theta_z(z: &Stratum, h: &Subgroup) -> Result<ClassFunction> {
    let k = k_set(z, h)?;
    let direct = on_subgroup(h, |g| {
        if k.contains(&g) {
            Cyclotomic::zero()
        } else {
            Cyclotomic::one()
        }
    });
    if debug_checks_enabled() {
        let inductive = theta_z_inductive(h, &k)?;
        if inductive != direct {
            return Err(Error::CrossCheckFailed(format!(
                "θ_(Z,H) for {} and H = {:?}: inductive {inductive}, direct {direct}",
                z.id,
                h.members()
            )));
        }
    }
    Ok(direct)
}

fn theta_z_inductive(h: &Subgroup, k: &[usize]) -> Result<ClassFunction> {
    let local = h.local();
    let mut acc = ClassFunction::trivial(local);
    for b in local.cyclic_subgroups() {
        if b.members().iter().all(|&x| k.contains(&h.to_parent(x))) {
            let term = theta_direct(&b)?
                .induce(&b)?
                .scale(&rational(b.order() as i64, h.order() as i64));
            acc = acc.checked_sub(&term)?;
        }
    }
    Ok(acc)
}

/// `Π_j (1 − φ_j(g))^{m_j}` and `Σ_j d_j φ_j(g)/(1 − φ_j(g))` at an element
/// fixing no normal direction.
fn normal_factors(z: &Stratum, g: usize) -> Result<(Cyclotomic, Cyclotomic)> {
    let mut product = Cyclotomic::one();
    let mut log_derivative = Cyclotomic::zero();
    for n in &z.normal {
        let phi = z.eval(&n.character, g);
        let one_minus = Cyclotomic::one().checked_sub(&phi)?;
        product = product.checked_mul(&one_minus.pow(i64::from(n.multiplicity))?)?;
        if n.degree != 0 {
            let term = phi.checked_div(&one_minus)?.scale(&rational(n.degree, 1));
            log_derivative = log_derivative.checked_add(&term)?;
        }
    }
    Ok((product, log_derivative))
}

/// `τ_{Z,H}`, the unique element supported off `K_{Z,H}` with
/// `τ · ch_H λ_{−1}(N*) = θ_{Z,H}`.
///
/// Off `K` it is `(1 − φe^x)^{−1}` expanded to first order in the Chern
/// roots: `c0 = Π (1 − φ_j)^{−m_j}`, `c1 = c0 · Σ_j d_j φ_j/(1 − φ_j)`.
/// This uses only `A₀ = 1` and `A₁(s) = s` from the series
/// `U(s, t) = (1 − s·Σ_{k≥1} t^k/k!)^{−1}`.
pub fn tau(z: &Stratum, h: &Subgroup) -> Result<GradedClassValue> {
    let k = k_set(z, h)?;
    let on_curve = z.dim == StratumDim::Curve;
    let mut c0_values = Vec::with_capacity(h.order());
    let mut c1_values = Vec::with_capacity(h.order());
    for &g in h.members() {
        if k.contains(&g) {
            c0_values.push(Cyclotomic::zero());
            c1_values.push(Cyclotomic::zero());
            continue;
        }
        let (product, log_derivative) = normal_factors(z, g)?;
        let c0 = product.inverse()?;
        let c1 = if on_curve {
            c0.checked_mul(&log_derivative)?
        } else {
            Cyclotomic::zero()
        };
        c0_values.push(c0);
        c1_values.push(c1);
    }
    // members are sorted, so local index i is members()[i]
    let value = GradedClassValue::new(
        ClassFunction::new(h.local().clone(), c0_values)?,
        ClassFunction::new(h.local().clone(), c1_values)?,
    )?;
    if debug_checks_enabled() {
        check_tau(z, h, &value)?;
    }
    Ok(value)
}

fn check_tau(z: &Stratum, h: &Subgroup, value: &GradedClassValue) -> Result<()> {
    let theta_zh = theta_z(z, h)?;
    let product = value.checked_mul(&ch_lambda(z, h)?)?;
    if product != GradedClassValue::constant(theta_zh.clone()) {
        return Err(Error::CrossCheckFailed(format!(
            "τ·chλ = {product} differs from θ_(Z,H) on {} for H = {:?}",
            z.id,
            h.members()
        )));
    }
    if z.dim == StratumDim::Ambient {
        return Ok(());
    }
    let rel = h.relative_to(&z.stabilizer)?;
    let mut quotient = theta_zh;
    for n in &z.normal {
        let phi = n.character.restrict(&rel)?;
        for _ in 0..n.multiplicity {
            quotient = localized_division(&quotient, &phi)?;
        }
    }
    if quotient != value.c0 {
        return Err(Error::CrossCheckFailed(format!(
            "τ degree-0 part {} differs from the localized division {quotient}",
            value.c0
        )));
    }
    Ok(())
}

/// `ch_H λ_{−1}(N*_{Z/X})`: each eigen sub-bundle of rank `m` and degree
/// `d` contributes `(1 − φ)^m − (1 − φ)^{m−1} φ d [pt]`.
pub fn ch_lambda(z: &Stratum, h: &Subgroup) -> Result<GradedClassValue> {
    check_member(z, h)?;
    let mut acc = GradedClassValue::one(h.local());
    for n in &z.normal {
        let m = i64::from(n.multiplicity);
        let c0 = try_on_subgroup(h, |g| {
            (Cyclotomic::one() - z.eval(&n.character, g)).pow(m)
        })?;
        let c1 = if z.dim == StratumDim::Curve {
            try_on_subgroup(h, |g| {
                let phi = z.eval(&n.character, g);
                let lower = (Cyclotomic::one() - phi.clone()).pow(m - 1)?;
                Ok(-lower.checked_mul(&phi)?.scale(&rational(n.degree, 1)))
            })?
        } else {
            ClassFunction::zero(h.local())
        };
        acc = acc.checked_mul(&GradedClassValue::new(c0, c1)?)?;
    }
    Ok(acc)
}

/// `ch_H(E|_Z)` and `td(Z)`.
///
/// `ch.c0 = Σ_ψ r_ψ ψ`, `ch.c1 = Σ_ψ e_ψ ψ` on curves; `td = 1 + (1 − g)[pt]`
/// on a curve of genus `g` and `1` on a point.
pub fn ch_and_todd(z: &Stratum, h: &Subgroup) -> Result<(GradedClassValue, GradedClassValue)> {
    check_member(z, h)?;
    let on_curve = z.dim == StratumDim::Curve;
    let weighted = |weight: &dyn Fn(usize) -> i64| {
        try_on_subgroup(h, |g| {
            let mut acc = Cyclotomic::zero();
            for (i, s) in z.sheaf.iter().enumerate() {
                let w = weight(i);
                if w != 0 {
                    acc = acc.checked_add(&z.eval(&s.character, g).scale(&rational(w, 1)))?;
                }
            }
            Ok(acc)
        })
    };
    let c0 = weighted(&|i| i64::from(z.sheaf[i].rank))?;
    let c1 = if on_curve {
        weighted(&|i| z.sheaf[i].degree)?
    } else {
        ClassFunction::zero(h.local())
    };
    let ch = GradedClassValue::new(c0, c1)?;
    let td_c1 = if on_curve {
        ClassFunction::trivial(h.local()).scale(&rational(1 - i64::from(z.genus), 1))
    } else {
        ClassFunction::zero(h.local())
    };
    let td = GradedClassValue::new(ClassFunction::trivial(h.local()), td_c1)?;
    Ok((ch, td))
}

/// `θ_H · ∫_Z ch_H(E|_Z) · τ_{Z,H} · td(Z)` on `h.local()`.
pub fn local_term(z: &Stratum, h: &Subgroup) -> Result<ClassFunction> {
    if z.dim == StratumDim::Ambient {
        return Err(Error::HypothesisViolation(format!(
            "{} is an ambient stratum; its module comes from the equivariant Euler characteristic",
            z.id
        )));
    }
    let (ch, td) = ch_and_todd(z, h)?;
    let integrand = ch.checked_mul(&tau(z, h)?)?.checked_mul(&td)?;
    theta(h)?.checked_mul(&integrand.integrate(z.dim == StratumDim::Curve))
}

/// `(H, local_term(Z, H))` for every `H ∈ H_Z`.
pub fn local_terms(z: &Stratum) -> Result<Vec<(Subgroup, ClassFunction)>> {
    compute_hz(z)?
        .into_iter()
        .map(|h| {
            let term = local_term(z, &h)?;
            Ok((h, term))
        })
        .collect()
}

/// The ramification module `Γ(E)_Z` as a class function on the ambient
/// group.
pub fn gamma(z: &Stratum) -> Result<ClassFunction> {
    if z.dim == StratumDim::Ambient {
        return gamma_ambient(z);
    }
    let g = z.stabilizer.parent();
    let mut acc = ClassFunction::zero(g);
    for (h, term) in local_terms(z)? {
        let induced = term.induce(&h)?.scale(&rational(h.order() as i64, g.order() as i64));
        acc = acc.checked_add(&induced)?;
    }
    if !acc.degree().is_zero() {
        return Err(Error::CrossCheckFailed(format!(
            "Γ_{} has nonzero dimension {}",
            z.id,
            acc.degree()
        )));
    }
    Ok(acc)
}

/// `Γ_Z = (|G_Z|/|G|) Ind χ_{G_Z}(Z, E|_Z) − (χ(Z, E|_Z)/|G|) C[G]` for a
/// connected component `Z` of `X`; zero when `G_Z` is trivial.
pub fn gamma_ambient(z: &Stratum) -> Result<ClassFunction> {
    if z.dim != StratumDim::Ambient {
        return Err(Error::HypothesisViolation(format!("{} is not an ambient stratum", z.id)));
    }
    let gz = &z.stabilizer;
    let g = gz.parent();
    if gz.is_trivial() {
        return Ok(ClassFunction::zero(g));
    }
    let chi = z
        .ambient_equivariant_chi
        .as_ref()
        .ok_or_else(|| Error::MissingAmbientChi(z.id.clone()))?;
    let euler = chi.degree().to_rational()?;
    let order = rational(g.order() as i64, 1);
    let induced = chi.induce(gz)?.scale(&rational(gz.order() as i64, g.order() as i64));
    induced.checked_sub(&ClassFunction::regular(g).scale(&(euler / order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ramification::{NormalEigen, SheafEigen};
    use crate::repring::{LinearCharacter, Turn};
    use std::sync::Arc;

    fn q(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rational(n, d))
    }

    fn character(g: &Arc<FiniteGroup>, turns: &[(i64, i64)]) -> LinearCharacter {
        LinearCharacter::from_turns(g, turns.iter().map(|&(a, b)| Turn::new(a, b)).collect()).unwrap()
    }

    fn klein_point() -> Stratum {
        // a = 1, b = 2, ab = 3; χ_a has kernel {0, 1}, χ_b has kernel {0, 2}
        let g = FiniteGroup::abelian_product(&[2, 2]).unwrap();
        let gz = g.whole();
        let chi_a = character(gz.local(), &[(0, 1), (0, 1), (1, 2), (1, 2)]);
        let chi_b = character(gz.local(), &[(0, 1), (1, 2), (0, 1), (1, 2)]);
        Stratum::point(
            "P",
            gz.clone(),
            vec![
                NormalEigen { character: chi_a, multiplicity: 1, degree: 0 },
                NormalEigen { character: chi_b, multiplicity: 1, degree: 0 },
            ],
            vec![SheafEigen { character: LinearCharacter::trivial(gz.local()), rank: 1, degree: 0 }],
        )
    }

    fn sign_curve(degree: i64, genus: u32) -> Stratum {
        let g = FiniteGroup::cyclic(2).unwrap();
        let gz = g.whole();
        let sign = character(gz.local(), &[(0, 1), (1, 2)]);
        Stratum::curve(
            "C",
            gz.clone(),
            genus,
            vec![NormalEigen { character: sign, multiplicity: 1, degree }],
            vec![SheafEigen { character: LinearCharacter::trivial(gz.local()), rank: 1, degree: 0 }],
        )
    }

    #[test]
    fn hz_of_klein_point_is_diagonal() {
        let p = klein_point();
        let hz = compute_hz(&p).unwrap();
        assert_eq!(hz.len(), 1);
        assert_eq!(hz[0].members(), &[0, 3]);
        assert_eq!(k_set(&p, &hz[0]).unwrap(), vec![0]);
    }

    #[test]
    fn hz_of_curve_and_ambient() {
        let c = sign_curve(0, 0);
        assert_eq!(compute_hz(&c).unwrap(), vec![c.stabilizer.clone()]);
        let g = FiniteGroup::cyclic(3).unwrap();
        let amb = Stratum::ambient("X", g.trivial_subgroup(), vec![], None);
        let hz = compute_hz(&amb).unwrap();
        assert_eq!(hz.len(), 1);
        assert!(hz[0].is_trivial());
        assert!(gamma(&amb).unwrap().is_zero());
    }

    #[test]
    fn k_set_with_order_two_character_on_z4() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let gz = g.whole();
        let phi = character(gz.local(), &[(0, 1), (1, 2), (0, 1), (1, 2)]);
        let p = Stratum::point(
            "P",
            gz.clone(),
            vec![NormalEigen { character: phi, multiplicity: 1, degree: 0 }],
            vec![],
        );
        let hz = compute_hz(&p).unwrap();
        assert_eq!(hz, vec![gz.clone()]);
        assert_eq!(k_set(&p, &gz).unwrap(), vec![0, 2]);
        let th = theta_z(&p, &gz).unwrap();
        assert_eq!(th.values(), &[q(0, 1), q(1, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn tau_on_curve_with_sign_normal() {
        let d = 3;
        let c = sign_curve(d, 0);
        let t = tau(&c, &c.stabilizer).unwrap();
        assert_eq!(t.c0.values(), &[q(0, 1), q(1, 2)]);
        assert_eq!(t.c1.values(), &[q(0, 1), q(-d, 4)]);
    }

    #[test]
    fn tau_on_point_with_two_sign_normals() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let gz = g.whole();
        let sign = character(gz.local(), &[(0, 1), (1, 2)]);
        let p = Stratum::point(
            "P",
            gz.clone(),
            vec![NormalEigen { character: sign, multiplicity: 2, degree: 0 }],
            vec![],
        );
        let t = tau(&p, &gz).unwrap();
        assert_eq!(t.c0.values(), &[q(0, 1), q(1, 4)]);
        assert!(t.c1.is_zero());
    }

    #[test]
    fn tau_on_point_in_curve_with_cube_root() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let gz = g.whole();
        let phi = character(gz.local(), &[(0, 1), (1, 3), (2, 3)]);
        let p = Stratum::point(
            "P",
            gz.clone(),
            vec![NormalEigen { character: phi, multiplicity: 1, degree: 0 }],
            vec![],
        );
        let t = tau(&p, &gz).unwrap();
        let z3 = Cyclotomic::root_of_unity(3, 1).unwrap();
        let expected = [
            q(0, 1),
            (Cyclotomic::one() - z3.clone()).inverse().unwrap(),
            (Cyclotomic::one() - z3.pow(2).unwrap()).inverse().unwrap(),
        ];
        assert_eq!(t.c0.values(), &expected);
    }

    #[test]
    fn ch_and_todd_on_curve() {
        let c = sign_curve(0, 0);
        let (ch, td) = ch_and_todd(&c, &c.stabilizer).unwrap();
        assert_eq!(ch.c0, ClassFunction::trivial(c.stabilizer.local()));
        assert!(ch.c1.is_zero());
        assert_eq!(td.c1, ClassFunction::trivial(c.stabilizer.local()));
    }

    #[test]
    fn gamma_of_antipodal_point_and_flat_curve() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let gz = g.whole();
        let sign = character(gz.local(), &[(0, 1), (1, 2)]);
        let p = Stratum::point(
            "P",
            gz.clone(),
            vec![NormalEigen { character: sign, multiplicity: 1, degree: 0 }],
            vec![SheafEigen { character: LinearCharacter::trivial(gz.local()), rank: 1, degree: 0 }],
        );
        assert_eq!(gamma(&p).unwrap().values(), &[q(0, 1), q(1, 2)]);
        assert_eq!(gamma(&sign_curve(0, 0)).unwrap().values(), &[q(0, 1), q(1, 2)]);
    }

    #[test]
    fn ambient_with_stabilizer_needs_chi() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let amb = Stratum::ambient("X", g.whole(), vec![], None);
        assert_eq!(gamma(&amb), Err(Error::MissingAmbientChi("X".into())));
        // G_Z = G acting trivially, χ_{G_Z} = trivial: Γ = trivial − ½·regular
        let amb = Stratum::ambient("X", g.whole(), vec![], Some(ClassFunction::trivial(&g)));
        assert_eq!(gamma(&amb).unwrap().values(), &[q(0, 1), q(1, 1)]);
    }
}
