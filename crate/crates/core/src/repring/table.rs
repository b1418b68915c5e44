use std::sync::Arc;

use num_traits::Zero;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::group::FiniteGroup;
use crate::repring::{dual_group, ClassFunction};
use crate::{Error, Result};

/// The irreducible characters of a group, trivial character first.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    names: Vec<String>,
}

/// Multiplicities `⟨χ, χ_i⟩` against every irreducible of a table.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub multiplicities: Vec<Rational>,
    pub integral: bool,
}

fn default_names(group_order: usize, count: usize) -> Vec<String> {
    (0..count)
        .map(|i| match (i, group_order) {
            (0, _) => "trivial".to_string(),
            (1, 2) => "sign".to_string(),
            _ => format!("chi{i}"),
        })
        .collect()
}

impl CharacterTable {
    /// The table of `group`: computed as the dual group when `group` is
    /// abelian, otherwise taken from `supplied` (names, rows) after
    /// validation. A supplied table always takes precedence.
    pub fn for_group(
        group: &Arc<FiniteGroup>,
        supplied: Option<(Vec<String>, Vec<ClassFunction>)>,
    ) -> Result<Self> {
        match supplied {
            Some((names, rows)) => Self::from_rows(group, names, rows),
            None => Self::abelian(group),
        }
    }

    pub fn abelian(group: &Arc<FiniteGroup>) -> Result<Self> {
        let irreducibles: Vec<ClassFunction> = dual_group(group)?
            .iter()
            .map(|chi| chi.to_class_function())
            .collect();
        let names = default_names(group.order(), irreducibles.len());
        Ok(CharacterTable {
            group: Arc::clone(group),
            irreducibles,
            names,
        })
    }

    /// Validates a user-supplied table: one row per class, first row
    /// trivial, positive integer degrees, orthonormal rows and
    /// `Σ (dim χ_i)² = |G|`. Empty `names` selects default names.
    pub fn from_rows(
        group: &Arc<FiniteGroup>,
        names: Vec<String>,
        rows: Vec<ClassFunction>,
    ) -> Result<Self> {
        let k = group.num_classes();
        if rows.len() != k {
            return Err(Error::InvalidTable(format!(
                "{} rows supplied for a group with {k} conjugacy classes",
                rows.len()
            )));
        }
        let names = if names.is_empty() {
            default_names(group.order(), k)
        } else if names.len() == k {
            names
        } else {
            return Err(Error::InvalidTable(format!(
                "{} names supplied for {k} characters",
                names.len()
            )));
        };
        if rows.iter().any(|r| !r.group().same_as(group)) {
            return Err(Error::InvalidTable("a row lives on a different group".into()));
        }
        if rows[0] != ClassFunction::trivial(group) {
            return Err(Error::InvalidTable("the first row must be the trivial character".into()));
        }
        let mut dim_square_sum = Rational::zero();
        for (name, row) in names.iter().zip(&rows) {
            let dim = row
                .degree()
                .to_rational()
                .ok()
                .filter(|d| d.is_integer() && *d > Rational::zero())
                .ok_or_else(|| {
                    Error::InvalidTable(format!("{name}: degree {} is not a positive integer", row.degree()))
                })?;
            dim_square_sum += &dim * &dim;
        }
        if dim_square_sum != Rational::from_integer(group.order().into()) {
            return Err(Error::InvalidTable(format!(
                "sum of squared degrees is {dim_square_sum}, expected {}",
                group.order()
            )));
        }
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expected {
                    return Err(Error::InvalidTable(format!(
                        "⟨{}, {}⟩ = {ip}, expected {expected}",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(CharacterTable {
            group: Arc::clone(group),
            irreducibles: rows,
            names,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    /// `μ_i = ⟨χ, χ_i⟩` for every irreducible `χ_i`.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Decomposition> {
        if !chi.group().same_as(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let mut multiplicities = Vec::with_capacity(self.len());
        for (name, irr) in self.names.iter().zip(&self.irreducibles) {
            let ip = chi.inner_product(irr)?;
            let mu = ip.to_rational().map_err(|_| Error::NotRationalMultiplicity {
                irreducible: name.clone(),
                value: ip.to_string(),
            })?;
            multiplicities.push(mu);
        }
        let integral = multiplicities.iter().all(|m| m.is_integer());
        Ok(Decomposition {
            multiplicities,
            integral,
        })
    }

    /// `Σ μ_i χ_i`.
    pub fn recombine(&self, multiplicities: &[Rational]) -> Result<ClassFunction> {
        if multiplicities.len() != self.len() {
            return Err(Error::invalid("one multiplicity per irreducible is required"));
        }
        let mut acc = ClassFunction::zero(&self.group);
        for (m, irr) in multiplicities.iter().zip(&self.irreducibles) {
            acc = acc.checked_add(&irr.scale(m))?;
        }
        Ok(acc)
    }

    pub fn index_of_trivial(&self) -> usize {
        0
    }

    /// Whether every irreducible has degree one.
    pub fn all_linear(&self) -> bool {
        self.irreducibles.iter().all(|c| c.degree().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rational, rational_int};

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn s3_rows(g: &Arc<FiniteGroup>, third: [i64; 3]) -> Vec<ClassFunction> {
        let by_order = |vals: [i64; 3]| {
            ClassFunction::from_fn(g, |x| match g.element_order(x) {
                1 => c(vals[0]),
                2 => c(vals[1]),
                _ => c(vals[2]),
            })
        };
        vec![by_order([1, 1, 1]), by_order([1, -1, 1]), by_order(third)]
    }

    #[test]
    fn cyclic_two_table() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = CharacterTable::abelian(&g).unwrap();
        assert_eq!(t.names(), &["trivial", "sign"]);
        assert_eq!(t.irreducibles()[1].values(), &[c(1), c(-1)]);
    }

    #[test]
    fn klein_four_table() {
        let g = FiniteGroup::abelian_product(&[2, 2]).unwrap();
        let t = CharacterTable::abelian(&g).unwrap();
        assert_eq!(t.len(), 4);
        for irr in t.irreducibles() {
            assert!(irr.values().iter().all(|v| *v == c(1) || *v == c(-1)));
        }
    }

    #[test]
    fn supplied_s3_table() {
        let g = FiniteGroup::from_permutation_generators(&[vec![vec![1, 2]], vec![vec![1, 2, 3]]])
            .unwrap();
        assert_eq!(CharacterTable::for_group(&g, None).unwrap_err(), Error::TableRequired(6));
        let t = CharacterTable::from_rows(&g, vec![], s3_rows(&g, [2, 0, -1])).unwrap();
        assert_eq!(t.len(), 3);
        let bad = CharacterTable::from_rows(&g, vec![], s3_rows(&g, [2, 0, 1]));
        assert!(matches!(bad, Err(Error::InvalidTable(_))));
        let bad_dim = CharacterTable::from_rows(&g, vec![], s3_rows(&g, [1, 0, -1]));
        assert!(matches!(bad_dim, Err(Error::InvalidTable(_))));
    }

    #[test]
    fn decompositions() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = CharacterTable::abelian(&g).unwrap();
        let d = t.decompose(&ClassFunction::regular(&g)).unwrap();
        assert_eq!(d.multiplicities, vec![rational_int(1), rational_int(1)]);
        assert!(d.integral);
        let theta = ClassFunction::new(g.clone(), vec![c(0), c(1)]).unwrap();
        let d = t.decompose(&theta).unwrap();
        assert_eq!(d.multiplicities, vec![rational(1, 2), rational(-1, 2)]);
        assert!(!d.integral);
        let d = t.decompose(&ClassFunction::zero(&g)).unwrap();
        assert!(d.multiplicities.iter().all(Zero::is_zero));
    }

    #[test]
    fn irrational_multiplicity_is_flagged() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let t = CharacterTable::abelian(&g).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1).unwrap();
        let weird = ClassFunction::new(g.clone(), vec![i, c(0), c(0), c(0)]).unwrap();
        assert!(matches!(t.decompose(&weird), Err(Error::NotRationalMultiplicity { .. })));
    }
}
