//! Closed forms of `Γ(E)_Z` for special strata. Each one is independent of
//! the general assembly in [`super::gamma`] and must agree with it.

use crate::cyclotomic::{rational, Rational};
use crate::group::Subgroup;
use crate::ramification::{ch_and_todd, compute_hz, tau, Stratum, StratumDim};
use crate::repring::{theta, ClassFunction, LinearCharacter};
use crate::{Error, Result};

/// `χ(Z, F) = rk F · (1 − g) + deg F` on a curve of genus `g`.
pub fn curve_euler(rank: i64, degree: i64, genus: i64) -> Rational {
    rational(rank * (1 - genus) + degree, 1)
}

/// `−(1/|φ|) Σ_{d<|φ|} d·φ^d` for a linear character `φ`.
fn division_polynomial(phi: &LinearCharacter) -> Result<ClassFunction> {
    let order = phi.order();
    let mut acc = ClassFunction::zero(phi.group());
    for d in 1..order {
        acc = acc.checked_add(&phi.pow(d as i64).to_class_function().scale(&rational(d as i64, 1)))?;
    }
    Ok(acc.scale(&rational(-1, order as i64)))
}

fn induce_weighted(term: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    let g = h.parent();
    Ok(term.induce(h)?.scale(&rational(h.order() as i64, g.order() as i64)))
}

/// Isolated point `P`:
/// `Σ_{H∈H_P} (|H|/|G|) Ind_H^G θ_H [E|_P]_H Π_φ (−(1/|φ|) Σ_d d φ^d)^{m_φ}`.
pub fn gamma_point(z: &Stratum) -> Result<ClassFunction> {
    if z.dim != StratumDim::Point {
        return Err(Error::HypothesisViolation(format!("{} is not a point stratum", z.id)));
    }
    let mut acc = ClassFunction::zero(z.stabilizer.parent());
    for h in compute_hz(z)? {
        let rel = h.relative_to(&z.stabilizer)?;
        let mut term = theta(&h)?;
        let mut fibre = ClassFunction::zero(h.local());
        for s in &z.sheaf {
            let psi = s.character.restrict(&rel)?.to_class_function();
            fibre = fibre.checked_add(&psi.scale(&rational(i64::from(s.rank), 1)))?;
        }
        term = term.checked_mul(&fibre)?;
        for n in &z.normal {
            let factor = division_polynomial(&n.character.restrict(&rel)?)?;
            for _ in 0..n.multiplicity {
                term = term.checked_mul(&factor)?;
            }
        }
        acc = acc.checked_add(&induce_weighted(&term, &h)?)?;
    }
    Ok(acc)
}

/// Fixed curve `C` on a surface with cyclic stabilizer acting faithfully on
/// the conormal line by `φ_C`:
///
/// ```text
/// Γ_C = −(|G_C|/|G|) Ind θ_C Σ_ψ ψ ( χ(E_ψ)/|G_C| · S + rk E_ψ · C²/|G_C|² · S² φ_C )
/// ```
///
/// with `S = Σ_{d<|G_C|} d φ_C^d`, `θ_C = [1] − C[G_C]/|G_C|` and
/// `C² = −deg N*`.
pub fn gamma_curve(z: &Stratum) -> Result<ClassFunction> {
    let violation = |reason: &str| Err(Error::HypothesisViolation(format!("{}: {reason}", z.id)));
    if z.dim != StratumDim::Curve {
        return violation("not a curve stratum");
    }
    let gc = &z.stabilizer;
    if !gc.is_cyclic() {
        return violation("the stabilizer is not cyclic");
    }
    let [normal] = z.normal.as_slice() else {
        return violation("the conormal bundle must be a single eigen line");
    };
    if normal.multiplicity != 1 || normal.character.order() != gc.order() {
        return violation("the conormal character must be a faithful line");
    }
    let local = gc.local();
    let n = gc.order() as i64;
    let phi = normal.character.to_class_function();
    let s = division_polynomial(&normal.character)?.scale(&rational(-n, 1));
    let self_intersection = -normal.degree;
    let theta_c = ClassFunction::trivial(local)
        .checked_sub(&ClassFunction::regular(local).scale(&rational(1, n)))?;
    let mut sum = ClassFunction::zero(local);
    for e in &z.sheaf {
        let euler = curve_euler(i64::from(e.rank), e.degree, i64::from(z.genus));
        let first = s.scale(&(euler / rational(n, 1)));
        let second = s
            .checked_mul(&s)?
            .checked_mul(&phi)?
            .scale(&rational(i64::from(e.rank) * self_intersection, n * n));
        let bracket = first.checked_add(&second)?;
        sum = sum.checked_add(&e.character.to_class_function().checked_mul(&bracket)?)?;
    }
    let term = theta_c.checked_mul(&sum)?.neg();
    induce_weighted(&term, gc)
}

/// Stratum with cyclic stabilizer:
/// `Γ_Z = (|G_Z|/|G|) Ind_{G_Z}^G ∫_Z ch_{G_Z}(E|_Z) td_{G_Z}(Z)`.
pub fn gamma_cyclic(z: &Stratum) -> Result<ClassFunction> {
    if z.dim == StratumDim::Ambient {
        return Err(Error::HypothesisViolation(format!(
            "{} is an ambient stratum; use the ambient form",
            z.id
        )));
    }
    let gz = &z.stabilizer;
    if !gz.is_cyclic() {
        return Err(Error::HypothesisViolation(format!("{}: the stabilizer is not cyclic", z.id)));
    }
    if !compute_hz(z)?.contains(gz) {
        return Err(Error::HypothesisViolation(format!(
            "{}: the stabilizer fixes a normal direction",
            z.id
        )));
    }
    let (ch, td) = ch_and_todd(z, gz)?;
    let integrand = ch.checked_mul(&tau(z, gz)?)?.checked_mul(&td)?;
    induce_weighted(&integrand.integrate(z.dim == StratumDim::Curve), gz)
}
