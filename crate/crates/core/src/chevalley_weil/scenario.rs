use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::cyclotomic::{rational, Rational};
use crate::group::FiniteGroup;
use crate::ramification::{compute_hz, curve_euler, NormalEigen, SheafEigen, Stratum, StratumDim};
use crate::repring::{CharacterTable, LinearCharacter};
use crate::{Error, Result};

/// Which equivariant sheaf the scenario describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SheafKind {
    /// Eigendata supplied stratum by stratum.
    General,
    /// `O_X(nK_X)` on a surface.
    CanonicalPower(i64),
    /// `Ω¹_X` on a surface.
    Cotangent,
}

/// Intersection numbers of a fixed curve `C` on a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveNumbers {
    pub k_dot_c: i64,
    pub self_intersection: i64,
}

/// Numerical invariants of a surface: `χ(O_X)`, `K_X²` and, optionally,
/// `K·C` and `C²` for its fixed curves. Missing curve numbers are derived
/// from the normal degree (`C² = −deg N*`) and adjunction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub chi_o: i64,
    pub k2: i64,
    pub curves: BTreeMap<String, CurveNumbers>,
}

/// A finite group acting on a compact curve or surface together with an
/// equivariant locally free sheaf, described by its fixed-point data.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub group: Arc<FiniteGroup>,
    pub table: CharacterTable,
    pub ambient_dim: u32,
    /// Genus of the ambient curve, when `ambient_dim = 1`.
    pub ambient_genus: Option<u32>,
    /// `χ(X, E)`.
    pub global_euler: Rational,
    pub sheaf_rank: u32,
    pub strata: Vec<Stratum>,
    pub surface_invariants: Option<SurfaceInvariants>,
    pub sheaf_kind: SheafKind,
}

/// `C²` of a curve stratum, read off the conormal degree.
pub(crate) fn self_intersection(z: &Stratum) -> i64 {
    -z.normal.iter().map(|n| n.degree).sum::<i64>()
}

impl Scenario {
    /// A curve of genus `genus` with a sheaf of the given rank and degree;
    /// `χ(X, E)` follows from Riemann-Roch.
    pub fn on_curve(
        table: CharacterTable,
        genus: u32,
        rank: u32,
        degree: i64,
        strata: Vec<Stratum>,
    ) -> Result<Self> {
        let scenario = Scenario {
            group: Arc::clone(table.group()),
            table,
            ambient_dim: 1,
            ambient_genus: Some(genus),
            global_euler: curve_euler(i64::from(rank), degree, i64::from(genus)),
            sheaf_rank: rank,
            strata,
            surface_invariants: None,
            sheaf_kind: SheafKind::General,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// A surface with a general sheaf whose Euler characteristic is given.
    pub fn on_surface(
        table: CharacterTable,
        invariants: Option<SurfaceInvariants>,
        rank: u32,
        euler: Rational,
        strata: Vec<Stratum>,
    ) -> Result<Self> {
        let scenario = Scenario {
            group: Arc::clone(table.group()),
            table,
            ambient_dim: 2,
            ambient_genus: None,
            global_euler: euler,
            sheaf_rank: rank,
            strata,
            surface_invariants: invariants,
            sheaf_kind: SheafKind::General,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn stratum(&self, id: &str) -> Option<&Stratum> {
        self.strata.iter().find(|z| z.id == id)
    }

    /// `K·C` and `C²` for a curve stratum on a surface.
    pub fn curve_numbers(&self, z: &Stratum) -> Result<CurveNumbers> {
        if z.dim != StratumDim::Curve {
            return Err(Error::HypothesisViolation(format!("{} is not a curve stratum", z.id)));
        }
        if let Some(numbers) = self
            .surface_invariants
            .as_ref()
            .and_then(|inv| inv.curves.get(&z.id))
        {
            return Ok(*numbers);
        }
        let c2 = self_intersection(z);
        Ok(CurveNumbers {
            k_dot_c: 2 * i64::from(z.genus) - 2 - c2,
            self_intersection: c2,
        })
    }

    /// Checks group membership, stratum shapes, `H_Z ≠ ∅` and the
    /// consistency of the surface invariants. No computation.
    pub fn validate(&self) -> Result<()> {
        if !self.table.group().same_as(&self.group) {
            return Err(Error::InvalidTable("the character table belongs to another group".into()));
        }
        if !(1..=2).contains(&self.ambient_dim) {
            return Err(Error::invalid(format!(
                "ambient dimension must be 1 or 2, got {}",
                self.ambient_dim
            )));
        }
        let mut seen = HashSet::new();
        for z in &self.strata {
            if !seen.insert(z.id.as_str()) {
                return Err(Error::stratum(&z.id, "duplicate stratum id"));
            }
            if !z.stabilizer.parent().same_as(&self.group) {
                return Err(Error::NotASubgroup(format!(
                    "the stabilizer of {} is not a subgroup of the acting group",
                    z.id
                )));
            }
            z.validate(self.ambient_dim, self.sheaf_rank)?;
            if z.dim != StratumDim::Ambient {
                compute_hz(z)?;
            }
        }
        if self.sheaf_kind != SheafKind::General && self.surface_invariants.is_none() {
            return Err(Error::invalid("sheaf presets need the surface invariants"));
        }
        if let Some(inv) = &self.surface_invariants {
            if self.ambient_dim != 2 {
                return Err(Error::invalid("surface invariants given for a curve"));
            }
            for (id, numbers) in &inv.curves {
                let z = self
                    .stratum(id)
                    .filter(|z| z.dim == StratumDim::Curve)
                    .ok_or_else(|| Error::invalid(format!("surface invariants name {id:?}, which is not a curve stratum")))?;
                if numbers.self_intersection != self_intersection(z) {
                    return Err(Error::stratum(
                        id,
                        format!(
                            "C² = {} disagrees with the conormal degree {}",
                            numbers.self_intersection,
                            -self_intersection(z)
                        ),
                    ));
                }
                let adjunction = numbers.k_dot_c + numbers.self_intersection;
                if adjunction != 2 * i64::from(z.genus) - 2 {
                    return Err(Error::stratum(
                        id,
                        format!("adjunction fails: K·C + C² = {adjunction}, 2g − 2 = {}", 2 * i64::from(z.genus) - 2),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Whether the acting group is `(Z/2)^n` for some `n`.
    pub fn is_elementary_abelian_two(&self) -> bool {
        self.group.order().is_power_of_two() && self.group.elements().all(|g| self.group.element_order(g) <= 2)
    }

    /// Fills in the global Euler characteristic and all sheaf eigendata for
    /// `Ω¹_X` or `O_X(nK_X)` on a surface with a `(Z/2)^n` action.
    ///
    /// * `Ω¹`: `χ = K² − 10χ(O)`; at a point the cotangent characters, on a
    ///   curve `Ω_C ⊕ N*` with degrees `2g − 2` and `−C²`.
    /// * `O(nK)`: `χ = χ(O) + n(n−1)K²/2`; at a point `det(T*)^n`, on a curve
    ///   `φ_C^n` of degree `n·K·C`.
    pub fn with_sheaf_preset(mut self, kind: SheafKind) -> Result<Self> {
        let violation = |msg: &str| Err(Error::HypothesisViolation(msg.to_string()));
        if self.ambient_dim != 2 {
            return violation("sheaf presets are defined on surfaces");
        }
        let Some(inv) = self.surface_invariants.clone() else {
            return violation("sheaf presets need the surface invariants");
        };
        if !self.is_elementary_abelian_two() {
            return violation("sheaf presets assume an elementary abelian 2-group");
        }
        let (euler, rank) = match kind {
            SheafKind::General => return Ok(self),
            SheafKind::Cotangent => (rational(inv.k2 - 10 * inv.chi_o, 1), 2),
            SheafKind::CanonicalPower(n) => (
                rational(inv.chi_o, 1) + rational(n * (n - 1) * inv.k2, 2),
                1,
            ),
        };
        let mut strata = Vec::with_capacity(self.strata.len());
        for z in &self.strata {
            let local = z.stabilizer.local();
            let mut z = z.clone();
            z.sheaf = match (z.dim, kind) {
                (StratumDim::Ambient, _) => {
                    if !z.stabilizer.is_trivial() {
                        return violation("presets assume a faithful action");
                    }
                    vec![SheafEigen { character: LinearCharacter::trivial(local), rank, degree: 0 }]
                }
                (StratumDim::Point, SheafKind::Cotangent) => z
                    .normal
                    .iter()
                    .map(|n| SheafEigen { character: n.character.clone(), rank: n.multiplicity, degree: 0 })
                    .collect(),
                (StratumDim::Point, _) => {
                    let power = match kind {
                        SheafKind::CanonicalPower(n) => n,
                        _ => unreachable!(),
                    };
                    vec![SheafEigen { character: determinant(&z.normal, local)?.pow(power), rank: 1, degree: 0 }]
                }
                (StratumDim::Curve, _) => {
                    let numbers = self.curve_numbers(&z)?;
                    let phi = z.normal[0].character.clone();
                    match kind {
                        SheafKind::Cotangent => vec![
                            SheafEigen {
                                character: LinearCharacter::trivial(local),
                                rank: 1,
                                degree: 2 * i64::from(z.genus) - 2,
                            },
                            SheafEigen { character: phi, rank: 1, degree: -numbers.self_intersection },
                        ],
                        SheafKind::CanonicalPower(n) => vec![SheafEigen {
                            character: phi.pow(n),
                            rank: 1,
                            degree: n * numbers.k_dot_c,
                        }],
                        SheafKind::General => unreachable!(),
                    }
                }
            };
            strata.push(z);
        }
        self.strata = strata;
        self.global_euler = euler;
        self.sheaf_rank = rank;
        self.sheaf_kind = kind;
        self.surface_invariants = Some(inv);
        self.validate()?;
        Ok(self)
    }
}

fn determinant(normal: &[NormalEigen], local: &Arc<FiniteGroup>) -> Result<LinearCharacter> {
    let mut det = LinearCharacter::trivial(local);
    for n in normal {
        det = det.mul(&n.character.pow(i64::from(n.multiplicity)))?;
    }
    Ok(det)
}
