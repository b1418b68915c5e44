use crate::cyclotomic::{rational, Cyclotomic};
use crate::ramification::{Stratum, StratumDim};
use crate::{Error, Result};

use super::Scenario;

/// `a + b·x` with `x² = 0`: enough of `H^even` of a point or a curve.
#[derive(Clone)]
struct Truncated {
    a: Cyclotomic,
    b: Cyclotomic,
}

impl Truncated {
    fn new(a: Cyclotomic, b: Cyclotomic) -> Self {
        Truncated { a, b }
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Truncated {
            a: self.a.checked_mul(&other.a)?,
            b: self.a.checked_mul(&other.b)?.checked_add(&self.b.checked_mul(&other.a)?)?,
        })
    }

    fn inverse(&self) -> Result<Self> {
        let inv = self.a.inverse()?;
        let b = -(self.b.checked_mul(&inv)?.checked_mul(&inv)?);
        Ok(Truncated { a: inv, b })
    }
}

/// Contribution of one stratum to the holomorphic Lefschetz number of `g`,
/// or `None` when `g` does not have `Z` as a component of `X^g`.
pub(crate) fn fixed_component_contribution(z: &Stratum, g: usize) -> Result<Option<Cyclotomic>> {
    if !z.stabilizer.contains(g) {
        return Ok(None);
    }
    if z.dim == StratumDim::Ambient {
        if z.stabilizer.is_trivial() {
            return Ok(None);
        }
        let chi = z
            .ambient_equivariant_chi
            .as_ref()
            .ok_or_else(|| Error::MissingAmbientChi(z.id.clone()))?;
        return Ok(Some(chi.at(z.local_index(g)).clone()));
    }
    if z.fixes_normal_direction(g) {
        return Ok(None);
    }
    let curve = z.dim == StratumDim::Curve;
    let degree = |d: i64| {
        if curve {
            Cyclotomic::from_integer(d)
        } else {
            Cyclotomic::zero()
        }
    };
    // ch_g(E|_Z) = Σ_ψ ψ(g) (r_ψ + e_ψ x)
    let mut ch = Truncated::new(Cyclotomic::zero(), Cyclotomic::zero());
    for s in &z.sheaf {
        let psi = z.eval(&s.character, g);
        ch.a = ch.a.checked_add(&psi.scale(&rational(i64::from(s.rank), 1)))?;
        ch.b = ch.b.checked_add(&psi.checked_mul(&degree(s.degree))?)?;
    }
    // ch_g λ_{−1}(N*) = Π over Chern roots of (1 − φ e^{x_i}); a sub-bundle of
    // rank m and degree d gives (1 − φ)^m − m(1 − φ)^{m−1} φ (d/m) x
    let mut lambda = Truncated::new(Cyclotomic::one(), Cyclotomic::zero());
    for n in &z.normal {
        let phi = z.eval(&n.character, g);
        let m = i64::from(n.multiplicity);
        let share = degree(n.degree).scale(&rational(1, m));
        let root = Truncated::new(Cyclotomic::one() - phi.clone(), -(phi.checked_mul(&share)?));
        for _ in 0..m {
            lambda = lambda.mul(&root)?;
        }
    }
    let todd = Truncated::new(
        Cyclotomic::one(),
        if curve {
            Cyclotomic::from_integer(1 - i64::from(z.genus))
        } else {
            Cyclotomic::zero()
        },
    );
    let integrand = ch.mul(&todd)?.mul(&lambda.inverse()?)?;
    Ok(Some(if curve { integrand.b } else { integrand.a }))
}

/// Trace of `g` on `χ_G(X, E)` from fixed-point data alone.
///
/// For `g = 1` this is `χ(X, E)`; otherwise the sum over the strata that are
/// components of `X^g` of `∫_Z ch_g(E|_Z) td(Z) / ch_g λ_{−1}(N*_Z)`, plus
/// `χ_{G_Z}(g)` for ambient components fixed by `g`.
pub fn lefschetz_rhs(s: &Scenario, g: usize) -> Result<(Cyclotomic, usize)> {
    if g == s.group.identity() {
        return Ok((Cyclotomic::from_rational(s.global_euler.clone()), 0));
    }
    let mut acc = Cyclotomic::zero();
    let mut count = 0;
    for z in &s.strata {
        if let Some(v) = fixed_component_contribution(z, g)? {
            acc = acc.checked_add(&v)?;
            count += 1;
        }
    }
    Ok((acc, count))
}
