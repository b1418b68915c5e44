//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`Cyclotomic`] stores its conductor `N` and its coordinates in the
//! power basis `1, ζ_N, …, ζ_N^{φ(N)-1}` modulo the `N`-th cyclotomic
//! polynomial `Φ_N`. Reduction modulo `Φ_N` (rather than `x^N - 1`) makes the
//! representation canonical for a fixed conductor, so equality and
//! rationality are coordinate tests. Operands of different conductors are
//! lifted to the least common multiple before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational numbers used for every coefficient in the crate.
pub type Rational = BigRational;

/// Largest conductor a value may carry.
pub const MAX_CONDUCTOR: u64 = 10_000;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim());
        let q = BigInt::from_str(q.trim());
        match (p, q) {
            (Ok(p), Ok(q)) if !q.is_zero() => Some(Rational::new(p, q)),
            _ => None,
        }
    } else {
        BigInt::from_str(t).ok().map(Rational::from_integer)
    };
    parsed.ok_or_else(|| Error::invalid(format!("{s:?} is not an exact rational (expected \"p/q\")")))
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Coefficients of `Φ_n`, lowest degree first, via `Φ_n = Π_{d|n} (x^d - 1)^{μ(n/d)}`.
fn compute_cyclotomic_poly(n: u32) -> Vec<i64> {
    let n = n as usize;
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut poly = vec![1i64];
    // multiply by the numerator factors first so every division below is exact
    for &d in &divisors {
        if mobius((n / d) as u64) == 1 {
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius((n / d) as u64) == -1 {
            // divide by (x^d - 1): q_i = q_{i-d} - p_i, from the bottom up
            let out_len = poly.len() - d;
            let mut q = vec![0i64; out_len];
            for i in 0..out_len {
                let prev = if i >= d { q[i - d] } else { 0 };
                q[i] = prev - poly[i];
            }
            poly = q;
        }
    }
    poly
}

fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let p = Arc::new(compute_cyclotomic_poly(n));
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(n, Arc::clone(&p));
    p
}

/// Integer numerators over the least common denominator.
fn to_integers(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

fn over(nums: Vec<BigInt>, den: &BigInt) -> Vec<Rational> {
    nums.into_iter().map(|x| Rational::new(x, den.clone())).collect()
}

/// Folds exponents modulo `n` and reduces modulo `Φ_n` (monic, integral);
/// result has length `φ(n)`.
fn reduce_integers(n: u32, dense: Vec<BigInt>) -> Vec<BigInt> {
    let n_us = n as usize;
    let mut folded = vec![BigInt::zero(); n_us];
    for (i, c) in dense.into_iter().enumerate() {
        if !c.is_zero() {
            folded[i % n_us] += c;
        }
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for i in (deg..n_us).rev() {
        if folded[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut folded[i]);
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                folded[i - deg + j] -= &c * pj;
            }
        }
    }
    folded.truncate(deg);
    folded
}

fn reduce(n: u32, dense: Vec<Rational>) -> Vec<Rational> {
    let (nums, den) = to_integers(&dense);
    over(reduce_integers(n, nums), &den)
}

fn check_conductor(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::invalid("conductor must be at least 1"));
    }
    if n > MAX_CONDUCTOR {
        return Err(Error::ConductorOverflow(n));
    }
    Ok(n as u32)
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rational_int(n))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        let n = check_conductor(n)?;
        let e = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![Rational::zero(); e + 1];
        dense[e] = Rational::one();
        Ok(Self::normalized(n, reduce(n, dense)))
    }

    /// Builds a value from power-basis coordinates; `coeffs.len()` must be `φ(n)`.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rational>) -> Result<Self> {
        let n = check_conductor(n)?;
        let phi = euler_phi(n as u64) as usize;
        if coeffs.len() != phi {
            return Err(Error::invalid(format!(
                "conductor {n} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self::normalized(n, coeffs))
    }

    /// `Σ_i c_i ζ_n^i` for an arbitrary number of terms.
    pub fn from_powers(n: u64, terms: &[Rational]) -> Result<Self> {
        let n = check_conductor(n)?;
        Ok(Self::normalized(n, reduce(n, terms.to_vec())))
    }

    fn normalized(conductor: u32, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, euler_phi(conductor as u64));
        if conductor > 1 && coeffs[1..].iter().all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap_or_else(Rational::zero);
            return Self::from_rational(c);
        }
        Cyclotomic { conductor, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor as u64
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Whether the value lies in `Z[ζ_N]`, the ring of integers of `Q(ζ_N)`.
    /// The power basis is an integral basis, so this is a coordinate test.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Re-expresses the value in `Q(ζ_n)`; `n` must be a multiple of the conductor.
    pub fn lift(&self, n: u64) -> Result<Self> {
        let n = check_conductor(n)?;
        if n % self.conductor != 0 {
            return Err(Error::invalid(format!(
                "cannot lift conductor {} to {n}",
                self.conductor
            )));
        }
        Ok(self.lift_unchecked(n))
    }

    /// Coordinates in `Q(ζ_n)` without collapsing rationals; `n` is a multiple of the conductor.
    pub fn coords_in(&self, n: u64) -> Result<Vec<Rational>> {
        let n = check_conductor(n)?;
        if n % self.conductor != 0 {
            return Err(Error::invalid(format!(
                "cannot lift conductor {} to {n}",
                self.conductor
            )));
        }
        Ok(self.lift_coords(n))
    }

    fn lift_coords(&self, n: u32) -> Vec<Rational> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        reduce(n, dense)
    }

    fn lift_unchecked(&self, n: u32) -> Self {
        Self::normalized(n, self.lift_coords(n))
    }

    fn common(a: &Self, b: &Self) -> Result<(u32, Vec<Rational>, Vec<Rational>)> {
        let l = (a.conductor as u64).lcm(&(b.conductor as u64));
        let l = check_conductor(l)?;
        Ok((l, a.lift_coords(l), b.lift_coords(l)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_rational() && other.is_rational() {
            return Ok(Self::from_rational(&self.coeffs[0] + &other.coeffs[0]));
        }
        let (n, a, b) = Self::common(self, other)?;
        let sum = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        Ok(Self::normalized(n, sum))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_rational() {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.is_rational() {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let (n, a, b) = Self::common(self, other)?;
        let (a, da) = to_integers(&a);
        let (b, db) = to_integers(&b);
        let mut dense = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Ok(Self::normalized(n, over(reduce_integers(n, dense), &(da * db))))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inverse()?)
    }

    /// Multiplicative inverse; `InvalidInput` on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero in a cyclotomic field"));
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // x = X/d; solve X·Y = 1 as a linear system in the power basis
        let n = self.conductor;
        let (x, d) = to_integers(&self.coeffs);
        let k = x.len();
        let mut matrix = vec![vec![BigInt::zero(); k + 1]; k];
        for j in 0..k {
            let mut shifted = vec![BigInt::zero(); j];
            shifted.extend(x.iter().cloned());
            for (row, c) in matrix.iter_mut().zip(reduce_integers(n, shifted)) {
                row[j] = c;
            }
        }
        matrix[0][k] = BigInt::one();
        let (y, det) = linear::solve(matrix);
        let y: Vec<Rational> = y.into_iter().map(|v| Rational::new(v * &d, det.clone())).collect();
        Ok(Self::normalized(n, y))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{-1}`.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.conductor as usize;
        let mut dense = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[(n - i) % n] = c.clone();
        }
        Self::normalized(self.conductor, reduce(self.conductor, dense))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // values of different conductors can only agree if both are rational
        // or both lift to a common field; compare there without the cap
        let l = (self.conductor as u64).lcm(&(other.conductor as u64)) as u32;
        self.lift_coords(l) == other.lift_coords(l)
    }
}

impl Eq for Cyclotomic {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            /// Panics if the combined conductor exceeds [`MAX_CONDUCTOR`];
            /// use the `checked_*` form to handle that case.
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).expect("cyclotomic conductor overflow")
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, c: &Rational, power: Option<(u32, usize)>, first: bool) -> fmt::Result {
    let negative = c.is_negative();
    let abs = c.abs();
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match power {
        None => write!(f, "{abs}"),
        Some((n, k)) => {
            if !abs.is_one() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            if k == 1 {
                write!(f, "ζ{n}")
            } else {
                write!(f, "ζ{n}^{k}")
            }
        }
    }
}

/// Symbolic rendering, e.g. `1/2 - (3/2)ζ8^3`, where `ζN = exp(2πi/N)`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = if k == 0 { None } else { Some((self.conductor, k)) };
            fmt_coeff_term(f, c, power, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Serialized as `[N, ["p/q", ...]]`.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        (self.conductor, coeffs).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (n, coeffs): (u64, Vec<String>) = Deserialize::deserialize(d)?;
        let coeffs = coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Cyclotomic::from_coeffs(n, coeffs).map_err(D::Error::custom)
    }
}

mod linear {
    //! Fraction-free Gaussian elimination over the integers.

    use num_bigint::BigInt;
    use num_traits::Zero;

    /// Solves the nonsingular system `[A | b]` (`k` rows, `k + 1` columns)
    /// by Bareiss elimination. Returns `(X, D)` with `x = X / D`.
    pub(super) fn solve(mut a: Vec<Vec<BigInt>>) -> (Vec<BigInt>, BigInt) {
        let k = a.len();
        let mut prev = BigInt::from(1);
        for p in 0..k {
            let pivot = (p..k)
                .find(|&r| !a[r][p].is_zero())
                .expect("the multiplication matrix of a nonzero element is invertible");
            a.swap(p, pivot);
            for i in p + 1..k {
                for j in p + 1..=k {
                    let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][p] = BigInt::zero();
            }
            prev = a[p][p].clone();
        }
        // the last pivot is ±det A and det·x is integral
        let det = prev;
        let mut x = vec![BigInt::zero(); k];
        for i in (0..k).rev() {
            let mut acc = &a[i][k] * &det;
            for j in i + 1..k {
                acc -= &a[i][j] * &x[j];
            }
            x[i] = acc / &a[i][i];
        }
        (x, det)
    }
}
