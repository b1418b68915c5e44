use std::fmt;

use crate::cyclotomic::Cyclotomic;
use crate::group::Subgroup;
use crate::repring::{ClassFunction, LinearCharacter};
use crate::{Error, Result};

/// Dimension of a stratum: an isolated point, a curve, or a whole
/// connected component of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumDim {
    Point,
    Curve,
    Ambient,
}

impl fmt::Display for StratumDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StratumDim::Point => "0",
            StratumDim::Curve => "1",
            StratumDim::Ambient => "ambient",
        })
    }
}

/// One eigen sub-bundle of the conormal bundle: its character under the
/// stabilizer, its rank, and the degree of the whole sub-bundle (curves
/// only).
#[derive(Clone, Debug, PartialEq)]
pub struct NormalEigen {
    pub character: LinearCharacter,
    pub multiplicity: u32,
    pub degree: i64,
}

/// One eigen sub-sheaf `E_{Z,ψ}` of `E|_Z`: character `ψ`, rank and degree
/// (curves only).
#[derive(Clone, Debug, PartialEq)]
pub struct SheafEigen {
    pub character: LinearCharacter,
    pub rank: u32,
    pub degree: i64,
}

/// A connected component `Z` of a fixed locus `X^g`, together with its
/// pointwise stabilizer `G_Z` and eigendata on `G_Z`.
///
/// All characters live on `stabilizer.local()`.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub id: String,
    pub dim: StratumDim,
    pub stabilizer: Subgroup,
    pub normal: Vec<NormalEigen>,
    pub sheaf: Vec<SheafEigen>,
    pub genus: u32,
    pub ambient_equivariant_chi: Option<ClassFunction>,
}

impl Stratum {
    pub fn point(
        id: impl Into<String>,
        stabilizer: Subgroup,
        normal: Vec<NormalEigen>,
        sheaf: Vec<SheafEigen>,
    ) -> Self {
        Stratum {
            id: id.into(),
            dim: StratumDim::Point,
            stabilizer,
            normal,
            sheaf,
            genus: 0,
            ambient_equivariant_chi: None,
        }
    }

    pub fn curve(
        id: impl Into<String>,
        stabilizer: Subgroup,
        genus: u32,
        normal: Vec<NormalEigen>,
        sheaf: Vec<SheafEigen>,
    ) -> Self {
        Stratum {
            id: id.into(),
            dim: StratumDim::Curve,
            stabilizer,
            normal,
            sheaf,
            genus,
            ambient_equivariant_chi: None,
        }
    }

    pub fn ambient(
        id: impl Into<String>,
        stabilizer: Subgroup,
        sheaf: Vec<SheafEigen>,
        ambient_equivariant_chi: Option<ClassFunction>,
    ) -> Self {
        Stratum {
            id: id.into(),
            dim: StratumDim::Ambient,
            stabilizer,
            normal: Vec::new(),
            sheaf,
            genus: 0,
            ambient_equivariant_chi,
        }
    }

    /// Stabilizer-local index of a parent element of `G_Z`.
    pub(crate) fn local_index(&self, g: usize) -> usize {
        self.stabilizer
            .to_local(g)
            .expect("element lies in the stabilizer")
    }

    /// `χ(g)` for a character on `G_Z` and a parent element `g ∈ G_Z`.
    pub fn eval(&self, chi: &LinearCharacter, g: usize) -> Cyclotomic {
        chi.value(self.local_index(g))
    }

    pub(crate) fn is_one_at(&self, chi: &LinearCharacter, g: usize) -> bool {
        chi.is_one_at(self.local_index(g))
    }

    /// Whether some normal eigencharacter takes the value 1 at `g ∈ G_Z`,
    /// i.e. `g` fixes a normal direction.
    pub fn fixes_normal_direction(&self, g: usize) -> bool {
        self.normal.iter().any(|n| self.is_one_at(&n.character, g))
    }

    pub fn sheaf_rank(&self) -> u32 {
        self.sheaf.iter().map(|s| s.rank).sum()
    }

    /// Checks the shape of the stratum inside an ambient space of complex
    /// dimension `ambient_dim` carrying a sheaf of rank `sheaf_rank`.
    pub fn validate(&self, ambient_dim: u32, sheaf_rank: u32) -> Result<()> {
        let fail = |reason: String| Err(Error::stratum(&self.id, reason));
        let local = self.stabilizer.local();
        for n in &self.normal {
            if !n.character.group().same_as(local) {
                return fail("normal character is not defined on the stabilizer".into());
            }
        }
        for s in &self.sheaf {
            if !s.character.group().same_as(local) {
                return fail("sheaf character is not defined on the stabilizer".into());
            }
        }
        let codim = match (self.dim, ambient_dim) {
            (StratumDim::Ambient, _) => 0,
            (StratumDim::Point, d) => d,
            (StratumDim::Curve, 2) => 1,
            (StratumDim::Curve, d) => {
                return fail(format!("a curve stratum needs a surface, ambient dimension is {d}"))
            }
        };
        if self.normal.iter().any(|n| n.multiplicity == 0) {
            return fail("normal multiplicities must be positive".into());
        }
        let total: u32 = self.normal.iter().map(|n| n.multiplicity).sum();
        if total != codim {
            return fail(format!(
                "normal multiplicities sum to {total}, codimension is {codim}"
            ));
        }
        if self.sheaf_rank() != sheaf_rank {
            return fail(format!(
                "sheaf ranks sum to {}, the sheaf has rank {sheaf_rank}",
                self.sheaf_rank()
            ));
        }
        if self.dim != StratumDim::Ambient {
            if let Some(n) = self.normal.iter().find(|n| n.character.is_trivial()) {
                return fail(format!(
                    "normal character {:?} is trivial on the stabilizer",
                    n.character
                ));
            }
        }
        if self.dim != StratumDim::Curve {
            if self.normal.iter().any(|n| n.degree != 0) || self.sheaf.iter().any(|s| s.degree != 0) {
                return fail("degrees are only meaningful on curve strata".into());
            }
            if self.genus != 0 {
                return fail("genus is only meaningful on curve strata".into());
            }
        }
        match (&self.ambient_equivariant_chi, self.dim) {
            (Some(chi), StratumDim::Ambient) => {
                if !chi.group().same_as(local) {
                    return fail("ambient_equivariant_chi is not a class function on the stabilizer".into());
                }
            }
            (Some(_), _) => return fail("ambient_equivariant_chi is only allowed on ambient strata".into()),
            (None, _) => {}
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::repring::Turn;

    fn sign_point(mult: u32) -> Stratum {
        let g = FiniteGroup::cyclic(2).unwrap();
        let h = g.whole();
        let sign = LinearCharacter::on_cyclic(h.local(), 1, Turn::new(1, 2)).unwrap();
        Stratum::point(
            "P",
            h.clone(),
            vec![NormalEigen {
                character: sign,
                multiplicity: mult,
                degree: 0,
            }],
            vec![SheafEigen {
                character: LinearCharacter::trivial(h.local()),
                rank: 1,
                degree: 0,
            }],
        )
    }

    #[test]
    fn codimension_is_checked() {
        assert!(sign_point(1).validate(1, 1).is_ok());
        assert!(sign_point(2).validate(2, 1).is_ok());
        assert!(matches!(sign_point(1).validate(2, 1), Err(Error::InvalidStratum { .. })));
        assert!(matches!(sign_point(1).validate(1, 2), Err(Error::InvalidStratum { .. })));
    }

    #[test]
    fn trivial_normal_character_is_rejected() {
        let mut p = sign_point(1);
        p.normal[0].character = LinearCharacter::trivial(p.stabilizer.local());
        let err = p.validate(1, 1).unwrap_err();
        assert!(matches!(err, Error::InvalidStratum { ref id, .. } if id == "P"));
    }

    #[test]
    fn point_degrees_are_rejected() {
        let mut p = sign_point(1);
        p.sheaf[0].degree = 3;
        assert!(p.validate(1, 1).is_err());
    }
}
