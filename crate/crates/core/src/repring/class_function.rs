use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::group::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// A virtual character: one exact value per conjugacy class.
///
/// Every virtual module in the crate (characters, `θ_H`, ramification
/// modules, `χ_G`) is stored by its class values; addition and pointwise
/// multiplication realize direct sum and tensor product.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.values.iter().map(ToString::to_string))
            .finish()
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::invalid(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    /// Builds a class function from its value at each class representative.
    pub fn from_fn(group: &Arc<FiniteGroup>, mut f: impl FnMut(usize) -> Cyclotomic) -> Self {
        let values = (0..group.num_classes())
            .map(|c| f(group.class_representative(c)))
            .collect();
        ClassFunction {
            group: Arc::clone(group),
            values,
        }
    }

    pub fn try_from_fn(
        group: &Arc<FiniteGroup>,
        mut f: impl FnMut(usize) -> Result<Cyclotomic>,
    ) -> Result<Self> {
        let values = (0..group.num_classes())
            .map(|c| f(group.class_representative(c)))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group: Arc::clone(group),
            values,
        })
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, |_| Cyclotomic::zero())
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::from_fn(group, |_| Cyclotomic::one())
    }

    /// Character of `C[G]`: `|G|` at the identity, `0` elsewhere.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order() as i64;
        Self::from_fn(group, |g| {
            if g == 0 {
                Cyclotomic::from_integer(n)
            } else {
                Cyclotomic::zero()
            }
        })
    }

    /// Characteristic function of a union of conjugacy classes.
    pub fn indicator(group: &Arc<FiniteGroup>, set: &[usize]) -> Result<Self> {
        let mut inside = vec![false; group.order()];
        for &g in set {
            if g >= group.order() {
                return Err(Error::invalid(format!("element {g} out of range")));
            }
            inside[g] = true;
        }
        for class in group.conjugacy_classes() {
            let hits = class.iter().filter(|&&g| inside[g]).count();
            if hits != 0 && hits != class.len() {
                return Err(Error::invalid("indicator set is not a union of conjugacy classes"));
            }
        }
        Ok(Self::from_fn(group, |g| {
            if inside[g] {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        }))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Values in conjugacy-class order.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_of_class(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// `Tr(g; α)`.
    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    /// Value at the identity (the virtual dimension).
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Elements (of the group, not classes) where the value is nonzero.
    pub fn support(&self) -> Vec<usize> {
        self.group.elements().filter(|&g| !self.at(g).is_zero()).collect()
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Result<Cyclotomic>,
    ) -> Result<Self> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group: Arc::clone(&self.group),
            values,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Cyclotomic::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Cyclotomic::checked_sub)
    }

    /// Pointwise product, i.e. the tensor product of virtual modules.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Cyclotomic::checked_mul)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|v| v.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn conj(&self) -> Self {
        self.map(Cyclotomic::conj)
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// `⟨α, β⟩ = (1/|G|) Σ_g α(g)·conj(β(g))`, summed class by class.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut acc = Cyclotomic::zero();
        for (c, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            let term = a.checked_mul(&b.conj())?;
            acc = acc.checked_add(&term.scale(&Rational::from_integer(self.group.class_size(c).into())))?;
        }
        Ok(acc.scale(&Rational::new(1.into(), self.group.order().into())))
    }

    /// `Res^G_H α`, a class function on `h.local()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        if !self.group.same_as(h.parent()) {
            return Err(Error::NotASubgroup(
                "restriction target is not a subgroup of the class function's group".into(),
            ));
        }
        Ok(Self::from_fn(h.local(), |local| self.at(h.to_parent(local)).clone()))
    }

    /// `Ind_H^G α` for `α` on `h.local()`, by the Frobenius formula
    /// `Ind α(g) = (1/|H|) Σ_{s ∈ G, s⁻¹gs ∈ H} α(s⁻¹gs)`.
    pub fn induce(&self, h: &Subgroup) -> Result<Self> {
        if !self.group.same_as(h.local()) {
            return Err(Error::NotASubgroup(
                "class function does not live on the given subgroup".into(),
            ));
        }
        let g = h.parent();
        let inv_order = Rational::new(1.into(), h.order().into());
        Self::try_from_fn(g, |x| {
            let mut acc = Cyclotomic::zero();
            for s in g.elements() {
                if let Some(local) = h.to_local(g.conjugate(x, s)) {
                    acc = acc.checked_add(self.at(local))?;
                }
            }
            Ok(acc.scale(&inv_order))
        })
    }
}
