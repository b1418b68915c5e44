//! Finite groups materialized by their Cayley tables.
//!
//! Elements are indices `0..n` with `0` the identity. Subgroups are sorted
//! element sets of a parent group; each one also carries its own intrinsic
//! [`FiniteGroup`] (the restricted table) so class functions on a subgroup
//! use the subgroup's conjugacy classes.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::{Error, Result};

/// Largest supported group order.
pub const MAX_ORDER: usize = 512;

/// Associativity is checked on all triples up to this order, on a sample of
/// triples above it.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_orders: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    exponent: usize,
    abelian: bool,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("classes", &self.classes.len())
            .field("abelian", &self.abelian)
            .finish()
    }
}

impl FiniteGroup {
    /// The cyclic group `Z/n`; element `i` is `g^i`.
    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        Self::abelian_product(&[n])
    }

    /// `Z/n_1 × … × Z/n_k`; element indices are mixed-radix with the first
    /// factor least significant, so for `(2, 2)` the elements are
    /// `0 = (0,0), 1 = (1,0), 2 = (0,1), 3 = (1,1)`.
    pub fn abelian_product(orders: &[usize]) -> Result<Arc<Self>> {
        if orders.contains(&0) {
            return Err(Error::invalid("cyclic factor orders must be positive"));
        }
        let n = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o).filter(|&p| p <= MAX_ORDER))
            .ok_or(Error::UnsupportedOrder(MAX_ORDER + 1))?;
        let digits = |mut x: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect()
        };
        let encode = |ds: &[usize]| -> usize {
            ds.iter()
                .zip(orders)
                .rev()
                .fold(0, |acc, (&d, &o)| acc * o + d)
        };
        let mut table = vec![0; n * n];
        for a in 0..n {
            let da = digits(a);
            for b in 0..n {
                let db = digits(b);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(orders)
                    .map(|((x, y), o)| (x + y) % o)
                    .collect();
                table[a * n + b] = encode(&sum);
            }
        }
        Ok(Arc::new(Self::from_valid_table(n, table)))
    }

    /// Validates and builds a group from an explicit multiplication table
    /// (`rows[a][b]` is the index of `a·b`). Element `0` must be the identity.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Arc<Self>> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty multiplication table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {a} is out of range")));
            }
            table.extend_from_slice(row);
        }
        for a in 0..n {
            if table[a] != a || table[a * n] != a {
                return Err(Error::NotAGroup("element 0 must be the identity".into()));
            }
        }
        for a in 0..n {
            let has_inverse = (0..n).any(|b| table[a * n + b] == 0 && table[b * n + a] == 0);
            if !has_inverse {
                return Err(Error::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        let triples: Box<dyn Iterator<Item = usize>> = if n <= EXHAUSTIVE_ASSOCIATIVITY {
            Box::new(0..n)
        } else {
            let stride = n / EXHAUSTIVE_ASSOCIATIVITY;
            Box::new((0..n).step_by(stride.max(1)))
        };
        for a in triples {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    let bc = table[b * n + c];
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(Self::from_valid_table(n, table)))
    }

    /// The permutation group generated by `generators`, each given as a list
    /// of disjoint cycles over arbitrary point labels. Products compose right
    /// to left: `(p·q)(x) = p(q(x))`. Elements are numbered in breadth-first
    /// order from the identity.
    pub fn from_permutation_generators(generators: &[Vec<Vec<usize>>]) -> Result<Arc<Self>> {
        let degree = generators
            .iter()
            .flatten()
            .flatten()
            .map(|&p| p + 1)
            .max()
            .unwrap_or(1);
        let mut perms = Vec::with_capacity(generators.len());
        for (gi, cycles) in generators.iter().enumerate() {
            let mut perm: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for cycle in cycles {
                for &p in cycle {
                    if std::mem::replace(&mut seen[p], true) {
                        return Err(Error::NotAGroup(format!(
                            "generator {gi}: point {p} appears in more than one cycle position"
                        )));
                    }
                }
                for (i, &p) in cycle.iter().enumerate() {
                    perm[p] = cycle[(i + 1) % cycle.len()];
                }
            }
            perms.push(perm);
        }

        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &perms {
                let next = compose(&elements[i], s);
                if !index.contains_key(&next) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::UnsupportedOrder(MAX_ORDER + 1));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        Ok(Arc::new(Self::from_valid_table(n, table)))
    }

    fn from_valid_table(n: usize, table: Vec<usize>) -> Self {
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .expect("validated table has inverses");
        }
        let mut element_orders = vec![1; n];
        for (a, ord) in element_orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * n + a];
                *ord += 1;
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|s| table[table[inverse[s] * n + x] * n + s])
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                class_of[y] = classes.len();
            }
            classes.push(class);
        }
        let exponent = element_orders.iter().fold(1, |acc, &o| acc.lcm(&o));
        let abelian = (0..n).all(|a| (0..a).all(|b| table[a * n + b] == table[b * n + a]));
        FiniteGroup {
            order: n,
            table,
            inverse,
            element_orders,
            classes,
            class_of,
            exponent,
            abelian,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.element_orders[a] as i64;
        let e = k.rem_euclid(ord);
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `s⁻¹ g s`.
    pub fn conjugate(&self, g: usize, s: usize) -> usize {
        self.mul(self.mul(self.inverse[s], g), s)
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    /// Conjugacy classes, each sorted, listed by their smallest element
    /// (the canonical representative). Class 0 is `{identity}`.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].len()
    }

    /// Structural identity of two handles to groups.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// The closure of `generators ∪ {identity}` under multiplication.
    pub fn subgroup_generated(self: &Arc<Self>, generators: &[usize]) -> Result<Subgroup> {
        if let Some(&bad) = generators.iter().find(|&&g| g >= self.order) {
            return Err(Error::invalid(format!("element {bad} is not in a group of order {}", self.order)));
        }
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        Ok(Subgroup::from_closed(Arc::clone(self), members))
    }

    /// Wraps an element set as a subgroup after checking closure.
    pub fn subgroup(self: &Arc<Self>, elements: &[usize]) -> Result<Subgroup> {
        let mut members = elements.to_vec();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&g| g >= self.order) {
            return Err(Error::invalid(format!("element {bad} is not in a group of order {}", self.order)));
        }
        if members.first() != Some(&0) {
            return Err(Error::NotAGroup(format!("{members:?} does not contain the identity")));
        }
        let mut inside = vec![false; self.order];
        for &m in &members {
            inside[m] = true;
        }
        for &a in &members {
            for &b in &members {
                if !inside[self.mul(a, b)] {
                    return Err(Error::NotAGroup(format!(
                        "{members:?} is not closed under multiplication ({a}·{b} = {})",
                        self.mul(a, b)
                    )));
                }
            }
        }
        Ok(Subgroup::from_closed(Arc::clone(self), members))
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_closed(Arc::clone(self), (0..self.order).collect())
    }

    pub fn trivial_subgroup(self: &Arc<Self>) -> Subgroup {
        Subgroup::from_closed(Arc::clone(self), vec![0])
    }

    /// Every subgroup `⟨g⟩`, deduplicated, ordered by size and then
    /// lexicographically by member list.
    pub fn cyclic_subgroups(self: &Arc<Self>) -> Vec<Subgroup> {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order {
            let mut members = Vec::with_capacity(self.element_orders[g]);
            let mut x = 0;
            loop {
                members.push(x);
                x = self.mul(x, g);
                if x == 0 {
                    break;
                }
            }
            members.sort_unstable();
            sets.push(members);
        }
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        sets.into_iter()
            .map(|m| Subgroup::from_closed(Arc::clone(self), m))
            .collect()
    }
}

/// A subgroup of a parent group, stored as a sorted set of parent indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    local: Arc<FiniteGroup>,
    to_local: Vec<Option<usize>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent.same_as(&other.parent)
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_closed(parent: Arc<FiniteGroup>, members: Vec<usize>) -> Self {
        let m = members.len();
        let mut to_local = vec![None; parent.order()];
        for (i, &g) in members.iter().enumerate() {
            to_local[g] = Some(i);
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                table.push(to_local[parent.mul(a, b)].expect("subgroup is closed"));
            }
        }
        let local = Arc::new(FiniteGroup::from_valid_table(m, table));
        Subgroup {
            parent,
            members,
            local,
            to_local,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sorted parent indices of the elements.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// The subgroup as a group in its own right; local index `i` is
    /// `members()[i]`.
    pub fn local(&self) -> &Arc<FiniteGroup> {
        &self.local
    }

    pub fn contains(&self, g: usize) -> bool {
        self.to_local.get(g).is_some_and(Option::is_some)
    }

    pub fn to_local(&self, g: usize) -> Option<usize> {
        self.to_local.get(g).copied().flatten()
    }

    pub fn to_parent(&self, local: usize) -> usize {
        self.members[local]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator().is_some()
    }

    /// Smallest parent index generating the subgroup, if it is cyclic.
    pub fn generator(&self) -> Option<usize> {
        let n = self.order();
        self.members
            .iter()
            .copied()
            .find(|&g| self.parent.element_order(g) == n)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.members.iter().all(|&g| other.contains(g))
    }

    /// Re-expresses `self` as a subgroup of `outer.local()`.
    pub fn relative_to(&self, outer: &Subgroup) -> Result<Subgroup> {
        if !self.is_subgroup_of(outer) {
            return Err(Error::NotASubgroup(format!(
                "{:?} is not contained in {:?}",
                self.members, outer.members
            )));
        }
        let local: Vec<usize> = self
            .members
            .iter()
            .map(|&g| outer.to_local(g).expect("checked containment"))
            .collect();
        outer.local.subgroup(&local)
    }

    /// Maps a subgroup of `self.local()` back to a subgroup of the parent.
    pub fn lift_subgroup(&self, inner: &Subgroup) -> Result<Subgroup> {
        if !inner.parent.same_as(&self.local) {
            return Err(Error::NotASubgroup("subgroup does not live in this subgroup".into()));
        }
        let members: Vec<usize> = inner.members.iter().map(|&l| self.members[l]).collect();
        self.parent.subgroup(&members)
    }
}
