use std::sync::Arc;

use crate::cyclotomic::{rational, Cyclotomic, Rational};
use crate::group::{FiniteGroup, Subgroup};
use crate::repring::{ClassFunction, LinearCharacter};
use crate::{debug_checks_enabled, Error, Result};

fn require_cyclic(group: &Arc<FiniteGroup>) -> Result<()> {
    if group.whole().is_cyclic() {
        Ok(())
    } else {
        Err(Error::NotCyclic(group.order()))
    }
}

fn ratio(num: usize, den: usize) -> Rational {
    rational(num as i64, den as i64)
}

fn direct_on(group: &Arc<FiniteGroup>) -> ClassFunction {
    let n = group.order();
    ClassFunction::from_fn(group, |g| {
        if group.element_order(g) == n {
            Cyclotomic::one()
        } else {
            Cyclotomic::zero()
        }
    })
}

/// `θ_H = [1_H] − Σ_{B ⊊ H cyclic} (|B|/|H|) Ind_B^H θ_B`.
fn recursive_on(group: &Arc<FiniteGroup>) -> Result<ClassFunction> {
    let mut acc = ClassFunction::trivial(group);
    for b in group.cyclic_subgroups() {
        if b.order() == group.order() {
            continue;
        }
        let induced = recursive_on(b.local())?.induce(&b)?;
        acc = acc.checked_sub(&induced.scale(&ratio(b.order(), group.order())))?;
    }
    Ok(acc)
}

/// The characteristic function of the generators of a cyclic subgroup, as
/// a class function on `h.local()`.
pub fn theta_direct(h: &Subgroup) -> Result<ClassFunction> {
    require_cyclic(h.local())?;
    Ok(direct_on(h.local()))
}

/// `θ_H` through the recursion over proper cyclic subgroups.
pub fn theta_recursive(h: &Subgroup) -> Result<ClassFunction> {
    require_cyclic(h.local())?;
    recursive_on(h.local())
}

/// `θ_H` for a cyclic subgroup `H`: value 1 on generators of `H`, 0
/// elsewhere. With debug checks on, the recursion is evaluated too and
/// must agree.
pub fn theta(h: &Subgroup) -> Result<ClassFunction> {
    let direct = theta_direct(h)?;
    if debug_checks_enabled() {
        let recursive = recursive_on(h.local())?;
        if recursive != direct {
            return Err(Error::CrossCheckFailed(format!(
                "θ_H for |H| = {}: recursion gives {recursive}, direct form {direct}",
                h.order()
            )));
        }
    }
    Ok(direct)
}

/// `Σ_{H cyclic} (|H|/|G|) Ind_H^G(θ_H · Res_H χ)`, which reproduces `χ`.
pub fn artin_recover(chi: &ClassFunction) -> Result<ClassFunction> {
    let group = chi.group();
    let mut acc = ClassFunction::zero(group);
    for h in group.cyclic_subgroups() {
        let local = theta(&h)?.checked_mul(&chi.restrict(&h)?)?;
        acc = acc.checked_add(&local.induce(&h)?.scale(&ratio(h.order(), group.order())))?;
    }
    Ok(acc)
}

/// `ψ / (1 − φ)` on the elements where `φ ≠ 1`, and 0 where `φ = 1`.
///
/// Requires `ψ` to vanish wherever `φ` is 1. The result is also computed
/// as the polynomial `−(1/|φ|)·ψ·Σ_{d<|φ|} d·φ^d` and the two must agree.
pub fn localized_division(psi: &ClassFunction, phi: &LinearCharacter) -> Result<ClassFunction> {
    let group = psi.group();
    if !group.same_as(phi.group()) {
        return Err(Error::GroupMismatch);
    }
    require_cyclic(group)?;
    if group.order() == 1 || phi.is_trivial() {
        return Err(Error::SupportViolation(
            "division by 1 − φ needs a nontrivial φ on a nontrivial group".into(),
        ));
    }
    for g in group.elements() {
        if phi.is_one_at(g) && !psi.at(g).is_zero() {
            return Err(Error::SupportViolation(format!(
                "ψ is nonzero at element {g} where φ = 1"
            )));
        }
    }
    let by_values = ClassFunction::try_from_fn(group, |g| {
        if phi.is_one_at(g) {
            Ok(Cyclotomic::zero())
        } else {
            psi.at(g).checked_div(&(Cyclotomic::one() - phi.value(g)))
        }
    })?;

    let order = phi.order();
    let mut series = ClassFunction::zero(group);
    for d in 1..order {
        let term = phi.pow(d as i64).to_class_function().scale(&ratio(d, 1));
        series = series.checked_add(&term)?;
    }
    let by_polynomial = psi
        .checked_mul(&series)?
        .scale(&-ratio(1, order));
    if by_polynomial != by_values {
        return Err(Error::CrossCheckFailed(format!(
            "localized division: values give {by_values}, polynomial gives {by_polynomial}"
        )));
    }
    Ok(by_values)
}
