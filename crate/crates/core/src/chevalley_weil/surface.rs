//! Closed forms for `G ≅ (Z/2)^n` acting on a connected surface.

use crate::cyclotomic::{rational, Rational};
use crate::group::Subgroup;
use crate::ramification::{compute_hz, StratumDim};
use crate::repring::ClassFunction;
use crate::{Error, Result};

use super::{Scenario, SheafKind};

struct Shape {
    /// `n` with `|G| = 2^n`.
    rank: u32,
    points: Vec<(usize, Subgroup)>,
    curves: Vec<(usize, Subgroup)>,
}

fn shape(s: &Scenario) -> Result<Shape> {
    let violation = |msg: String| Err(Error::HypothesisViolation(msg));
    if s.ambient_dim != 2 {
        return violation("the (Z/2)^n formulas need a surface".into());
    }
    if !s.is_elementary_abelian_two() {
        return violation(format!("a group of order {} that is not (Z/2)^n", s.group.order()));
    }
    if s.surface_invariants.is_none() {
        return violation("the (Z/2)^n formulas need the surface invariants".into());
    }
    let mut points = Vec::new();
    let mut curves = Vec::new();
    for (i, z) in s.strata.iter().enumerate() {
        if z.dim == StratumDim::Ambient {
            if !z.stabilizer.is_trivial() {
                return violation(format!("{}: the action must be faithful", z.id));
            }
            continue;
        }
        let mut hz = compute_hz(z)?;
        if hz.len() != 1 {
            return violation(format!("{}: H_Z has {} elements, expected exactly one", z.id, hz.len()));
        }
        let h = hz.pop().expect("one element");
        match z.dim {
            StratumDim::Point => points.push((i, h)),
            _ => curves.push((i, h)),
        }
    }
    Ok(Shape {
        rank: s.group.order().trailing_zeros(),
        points,
        curves,
    })
}

/// `[1_H] − ½ C[H]`.
fn half_augmentation(h: &Subgroup) -> Result<ClassFunction> {
    ClassFunction::trivial(h.local()).checked_sub(&ClassFunction::regular(h.local()).scale(&rational(1, 2)))
}

fn power_of_two(k: u32) -> Rational {
    rational(1i64 << k, 1)
}

/// The `H_Z` of every non-ambient stratum, which for `(Z/2)^n` is a single
/// subgroup of order 2.
pub fn z2n_unique_hz(s: &Scenario) -> Result<Vec<(String, Subgroup)>> {
    let sh = shape(s)?;
    let mut out: Vec<(usize, Subgroup)> = sh.points.into_iter().chain(sh.curves).collect();
    out.sort_by_key(|(i, _)| *i);
    Ok(out
        .into_iter()
        .map(|(i, h)| (s.strata[i].id.clone(), h))
        .collect())
}

/// `χ_G(X, E)` for `G ≅ (Z/2)^n`:
///
/// ```text
/// χ/2^n · C[G]
///   + 1/2^{n+1} Σ_P Ind_{H_P}([E|_P] − r/2 · C[H_P])
///   + 1/2^{n+1} Σ_C Ind_{H_C}(−(K·C)(r⁺ − r⁻) + 2(deg⁺ − deg⁻)) ([1] − ½ C[H_C])
/// ```
pub fn z2n_surface(s: &Scenario) -> Result<ClassFunction> {
    s.validate()?;
    let sh = shape(s)?;
    let group = &s.group;
    let mut acc = ClassFunction::regular(group).scale(&(&s.global_euler / power_of_two(sh.rank)));
    let weight = rational(1, 1) / power_of_two(sh.rank + 1);
    let r = rational(i64::from(s.sheaf_rank), 2);
    for (i, h) in &sh.points {
        let z = &s.strata[*i];
        let rel = h.relative_to(&z.stabilizer)?;
        let mut fibre = ClassFunction::zero(h.local());
        for e in &z.sheaf {
            let psi = e.character.restrict(&rel)?.to_class_function();
            fibre = fibre.checked_add(&psi.scale(&rational(i64::from(e.rank), 1)))?;
        }
        let term = fibre.checked_sub(&ClassFunction::regular(h.local()).scale(&r))?;
        acc = acc.checked_add(&term.induce(h)?.scale(&weight))?;
    }
    for (i, h) in &sh.curves {
        let z = &s.strata[*i];
        let rel = h.relative_to(&z.stabilizer)?;
        let (mut rank_diff, mut degree_diff) = (0i64, 0i64);
        for e in &z.sheaf {
            let sign = if e.character.restrict(&rel)?.is_trivial() { 1 } else { -1 };
            rank_diff += sign * i64::from(e.rank);
            degree_diff += sign * e.degree;
        }
        let k_dot_c = s.curve_numbers(z)?.k_dot_c;
        let coefficient = rational(-k_dot_c * rank_diff + 2 * degree_diff, 1);
        let term = half_augmentation(h)?.scale(&coefficient);
        acc = acc.checked_add(&term.induce(h)?.scale(&weight))?;
    }
    Ok(acc)
}

/// `χ_G(X, Ω¹_X)` for `G ≅ (Z/2)^n`:
///
/// ```text
/// (K² − 10χ(O))/2^n · C[G] − 1/2^n Σ_P Ind([1] − ½C[H_P])
///   + 1/2^n Σ_C Ind (2g(C) − 2 + C²)([1] − ½C[H_C])
/// ```
pub fn cotangent_closed_form(s: &Scenario) -> Result<ClassFunction> {
    let sh = shape(s)?;
    let inv = s.surface_invariants.as_ref().expect("checked by shape");
    let scale = rational(1, 1) / power_of_two(sh.rank);
    let mut acc = ClassFunction::regular(&s.group).scale(&(rational(inv.k2 - 10 * inv.chi_o, 1) * &scale));
    for (_, h) in &sh.points {
        acc = acc.checked_sub(&half_augmentation(h)?.induce(h)?.scale(&scale))?;
    }
    for (i, h) in &sh.curves {
        let z = &s.strata[*i];
        let c2 = s.curve_numbers(z)?.self_intersection;
        let coefficient = rational(2 * i64::from(z.genus) - 2 + c2, 1) * &scale;
        acc = acc.checked_add(&half_augmentation(h)?.induce(h)?.scale(&coefficient))?;
    }
    Ok(acc)
}

/// `χ_G(X, nK_X)` for `G ≅ (Z/2)^m`:
///
/// ```text
/// (χ(O) + n(n−1)K²/2)/2^m · C[G] + 1/2^{m+1} Σ_P Ind([1] − ½C[H_P])
///   + (−1)^n (2n − 1)/2^{m+1} Σ_C Ind (K·C)([1] − ½C[H_C])
/// ```
pub fn canonical_power_closed_form(s: &Scenario, n: i64) -> Result<ClassFunction> {
    let sh = shape(s)?;
    let inv = s.surface_invariants.as_ref().expect("checked by shape");
    let euler = rational(inv.chi_o, 1) + rational(n * (n - 1) * inv.k2, 2);
    let mut acc = ClassFunction::regular(&s.group).scale(&(euler / power_of_two(sh.rank)));
    let weight = rational(1, 1) / power_of_two(sh.rank + 1);
    for (_, h) in &sh.points {
        acc = acc.checked_add(&half_augmentation(h)?.induce(h)?.scale(&weight))?;
    }
    let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
    for (i, h) in &sh.curves {
        let k_dot_c = s.curve_numbers(&s.strata[*i])?.k_dot_c;
        let coefficient = rational(sign * (2 * n - 1) * k_dot_c, 1) * &weight;
        acc = acc.checked_add(&half_augmentation(h)?.induce(h)?.scale(&coefficient))?;
    }
    Ok(acc)
}

/// The closed form matching the scenario's sheaf preset, if it has one.
pub fn preset_closed_form(s: &Scenario) -> Result<Option<ClassFunction>> {
    match s.sheaf_kind {
        SheafKind::General => Ok(None),
        SheafKind::Cotangent => cotangent_closed_form(s).map(Some),
        SheafKind::CanonicalPower(n) => canonical_power_closed_form(s, n).map(Some),
    }
}
