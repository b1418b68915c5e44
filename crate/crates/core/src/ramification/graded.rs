use std::fmt;
use std::sync::Arc;

use crate::group::{FiniteGroup, Subgroup};
use crate::repring::ClassFunction;
use crate::{Error, Result};

/// An element of `H^even(Z, Q) ⊗ R(H)` for `dim Z ≤ 1`: a degree-0
/// coefficient and a degree-2 coefficient already integrated against the
/// point class.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedClassValue {
    pub c0: ClassFunction,
    pub c1: ClassFunction,
}

impl fmt::Display for GradedClassValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·[pt]", self.c0, self.c1)
    }
}

impl GradedClassValue {
    pub fn new(c0: ClassFunction, c1: ClassFunction) -> Result<Self> {
        if !c0.group().same_as(c1.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(GradedClassValue { c0, c1 })
    }

    /// A pure degree-0 value.
    pub fn constant(c0: ClassFunction) -> Self {
        let c1 = ClassFunction::zero(c0.group());
        GradedClassValue { c0, c1 }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(ClassFunction::trivial(group))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.c0.group()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        Ok(GradedClassValue {
            c0: self.c0.checked_add(&other.c0)?,
            c1: self.c1.checked_add(&other.c1)?,
        })
    }

    /// Product truncated above degree 2: `(a0 + a1)(b0 + b1) = a0b0 + (a0b1 + a1b0)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let c0 = self.c0.checked_mul(&other.c0)?;
        let c1 = self
            .c0
            .checked_mul(&other.c1)?
            .checked_add(&self.c1.checked_mul(&other.c0)?)?;
        Ok(GradedClassValue { c0, c1 })
    }

    /// Restriction of both coefficients to a subgroup of `self.group()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        Ok(GradedClassValue {
            c0: self.c0.restrict(h)?,
            c1: self.c1.restrict(h)?,
        })
    }

    /// `∫_Z` of the value: the degree-0 part on a point, the point-class
    /// coefficient on a curve.
    pub fn integrate(&self, on_curve: bool) -> ClassFunction {
        if on_curve {
            self.c1.clone()
        } else {
            self.c0.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;

    #[test]
    fn truncated_product() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let cf = |a: i64, b: i64| {
            ClassFunction::new(g.clone(), vec![Cyclotomic::from_integer(a), Cyclotomic::from_integer(b)])
                .unwrap()
        };
        let x = GradedClassValue::new(cf(1, 2), cf(3, 4)).unwrap();
        let y = GradedClassValue::new(cf(5, 6), cf(7, 8)).unwrap();
        let p = x.checked_mul(&y).unwrap();
        assert_eq!(p.c0, cf(5, 12));
        assert_eq!(p.c1, cf(7 + 15, 16 + 24));
        assert_eq!(GradedClassValue::one(&g).checked_mul(&x).unwrap(), x);
        assert_eq!(p.integrate(false), cf(5, 12));
    }
}
