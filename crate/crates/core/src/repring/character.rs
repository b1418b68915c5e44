use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::cyclotomic::Cyclotomic;
use crate::group::{FiniteGroup, Subgroup};
use crate::repring::ClassFunction;
use crate::{Error, Result};

/// Fraction of a full turn: the value `exp(2πi·t)` is stored as `t ∈ [0, 1)`.
pub type Turn = Ratio<i64>;

fn normalize_turn(t: Turn) -> Turn {
    let floor = t.floor();
    t - floor
}

/// A one-dimensional character, one root of unity per element.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCharacter {
    group: Arc<FiniteGroup>,
    turns: Vec<Turn>,
}

impl fmt::Debug for LinearCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.turns.iter().map(|t| format!("[{}, {}]", t.denom(), t.numer())))
            .finish()
    }
}

impl LinearCharacter {
    /// Builds a character from turn fractions, checking multiplicativity on
    /// every pair of elements.
    pub fn from_turns(group: &Arc<FiniteGroup>, turns: Vec<Turn>) -> Result<Self> {
        if turns.len() != group.order() {
            return Err(Error::InvalidCharacter(format!(
                "expected a value for each of the {} elements, got {}",
                group.order(),
                turns.len()
            )));
        }
        let turns: Vec<Turn> = turns.into_iter().map(normalize_turn).collect();
        if !turns[0].is_zero() {
            return Err(Error::InvalidCharacter("value at the identity must be 1".into()));
        }
        for a in group.elements() {
            for b in group.elements() {
                let ab = group.mul(a, b);
                if normalize_turn(turns[a] + turns[b]) != turns[ab] {
                    return Err(Error::InvalidCharacter(format!(
                        "not multiplicative: value({a})·value({b}) ≠ value({ab})"
                    )));
                }
            }
        }
        Ok(LinearCharacter {
            group: Arc::clone(group),
            turns,
        })
    }

    /// From `[N, k]` pairs meaning `ζ_N^k`, one per element.
    pub fn from_roots(group: &Arc<FiniteGroup>, roots: &[(u64, i64)]) -> Result<Self> {
        let turns = roots
            .iter()
            .map(|&(n, k)| {
                if n == 0 {
                    Err(Error::InvalidCharacter("root of unity order must be positive".into()))
                } else {
                    Ok(Turn::new(k, n as i64))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_turns(group, turns)
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        LinearCharacter {
            group: Arc::clone(group),
            turns: vec![Turn::zero(); group.order()],
        }
    }

    /// The character of a cyclic group sending `generator` to `exp(2πi·turn)`.
    pub fn on_cyclic(group: &Arc<FiniteGroup>, generator: usize, turn: Turn) -> Result<Self> {
        let n = group.order();
        if group.element_order(generator) != n {
            return Err(Error::NotCyclic(n));
        }
        let mut turns = vec![Turn::zero(); n];
        let mut x = 0;
        for k in 0..n as i64 {
            turns[x] = turn * k;
            x = group.mul(x, generator);
        }
        Self::from_turns(group, turns)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn turn(&self, g: usize) -> Turn {
        self.turns[g]
    }

    pub fn value(&self, g: usize) -> Cyclotomic {
        let t = self.turns[g];
        Cyclotomic::root_of_unity(*t.denom() as u64, *t.numer())
            .expect("character values have order dividing the group exponent")
    }

    /// Whether the value at `g` is 1.
    pub fn is_one_at(&self, g: usize) -> bool {
        self.turns[g].is_zero()
    }

    pub fn is_trivial(&self) -> bool {
        self.turns.iter().all(Zero::is_zero)
    }

    /// Order of the character in the dual group.
    pub fn order(&self) -> usize {
        self.turns
            .iter()
            .fold(1i64, |acc, t| acc.lcm(t.denom())) as usize
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.group.elements().filter(|&g| self.is_one_at(g)).collect()
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        if !self.group.same_as(h.parent()) {
            return Err(Error::NotASubgroup(
                "restriction target is not a subgroup of the character's group".into(),
            ));
        }
        Ok(LinearCharacter {
            group: Arc::clone(h.local()),
            turns: h.members().iter().map(|&g| self.turns[g]).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(LinearCharacter {
            group: Arc::clone(&self.group),
            turns: self
                .turns
                .iter()
                .zip(&other.turns)
                .map(|(a, b)| normalize_turn(a + b))
                .collect(),
        })
    }

    pub fn pow(&self, k: i64) -> Self {
        LinearCharacter {
            group: Arc::clone(&self.group),
            turns: self.turns.iter().map(|t| normalize_turn(t * k)).collect(),
        }
    }

    pub fn to_class_function(&self) -> ClassFunction {
        ClassFunction::from_fn(&self.group, |g| self.value(g))
    }
}

/// All linear characters of an abelian group, trivial first.
///
/// Built along a chain `1 = S_0 ⊂ S_1 ⊂ … ⊂ G` where each step adjoins an
/// element `g` of maximal order outside `S_i`; with `m` minimal such that
/// `g^m ∈ S_i`, every character `χ` of `S_i` has exactly `m` extensions,
/// `s·g^j ↦ χ(s)·ω^j` with `ω^m = χ(g^m)`.
pub fn dual_group(group: &Arc<FiniteGroup>) -> Result<Vec<LinearCharacter>> {
    if !group.is_abelian() {
        return Err(Error::TableRequired(group.order()));
    }
    let n = group.order();
    // turns indexed by element; None outside the current subgroup
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0usize];
    let mut chars: Vec<Vec<Turn>> = vec![vec![Turn::zero(); n]];
    while members.len() < n {
        let g = group
            .elements()
            .filter(|&x| !inside[x])
            .max_by(|&a, &b| group.element_order(a).cmp(&group.element_order(b)).then(b.cmp(&a)))
            .expect("subgroup is proper");
        let mut m = 1;
        let mut gm = g;
        while !inside[gm] {
            gm = group.mul(gm, g);
            m += 1;
        }
        let mut new_members = Vec::with_capacity(members.len() * m);
        // (element, s, j) with element = s·g^j
        let mut decomposition = Vec::with_capacity(members.len() * m);
        let mut gj = 0;
        for j in 0..m {
            for &s in &members {
                let x = group.mul(s, gj);
                new_members.push(x);
                decomposition.push((x, s, j));
            }
            gj = group.mul(gj, g);
        }
        let mut next = Vec::with_capacity(chars.len() * m);
        for chi in &chars {
            for r in 0..m {
                let omega = (chi[gm] + Turn::from_integer(r as i64)) / Turn::from_integer(m as i64);
                let mut ext = vec![Turn::zero(); n];
                for &(x, s, j) in &decomposition {
                    ext[x] = normalize_turn(chi[s] + omega * (j as i64));
                }
                next.push(ext);
            }
        }
        for &x in &new_members {
            inside[x] = true;
        }
        members = new_members;
        chars = next;
    }
    chars
        .into_iter()
        .map(|turns| LinearCharacter::from_turns(group, turns))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicativity_is_checked() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let ok = LinearCharacter::from_roots(&c4, &[(1, 0), (4, 1), (2, 1), (4, 3)]).unwrap();
        assert_eq!(ok.order(), 4);
        assert_eq!(ok.kernel(), vec![0]);
        let bad = LinearCharacter::from_roots(&c4, &[(1, 0), (4, 1), (4, 1), (4, 3)]);
        assert!(matches!(bad, Err(Error::InvalidCharacter(_))));
        let bad_id = LinearCharacter::from_roots(&c4, &[(2, 1), (1, 0), (1, 0), (1, 0)]);
        assert!(bad_id.is_err());
    }

    #[test]
    fn restriction_and_powers() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let chi = LinearCharacter::on_cyclic(&c4, 1, Turn::new(1, 4)).unwrap();
        let h = c4.subgroup(&[0, 2]).unwrap();
        let res = chi.restrict(&h).unwrap();
        assert_eq!(res.order(), 2);
        assert_eq!(chi.pow(2).kernel(), vec![0, 2]);
        assert!(chi.pow(4).is_trivial());
        assert_eq!(chi.mul(&chi.pow(3)).unwrap(), LinearCharacter::trivial(&c4));
    }

    #[test]
    fn dual_of_abelian_groups() {
        for orders in [vec![1], vec![2], vec![6], vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
            let g = FiniteGroup::abelian_product(&orders).unwrap();
            let dual = dual_group(&g).unwrap();
            assert_eq!(dual.len(), g.order());
            assert!(dual[0].is_trivial());
            for (i, a) in dual.iter().enumerate() {
                for b in &dual[i + 1..] {
                    assert_ne!(a, b);
                }
            }
        }
    }

    #[test]
    fn dual_requires_abelian() {
        let s3 = FiniteGroup::from_permutation_generators(&[vec![vec![1, 2]], vec![vec![1, 2, 3]]])
            .unwrap();
        assert_eq!(dual_group(&s3), Err(Error::TableRequired(6)));
    }
}
