//! Exact arithmetic in the cyclotomic integers `Z[ζ_N]`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}`, reduced
//! modulo the cyclotomic polynomial `Φ_N`, so equality is coefficientwise.
//! [`RawCyclotomic`] is the unreduced group-ring form `Z[C_N]` used inside
//! state sums; it wraps on overflow and is reduced once at the end.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug)]
pub struct CyclotomicRing {
    order: u32,
    /// Monic `Φ_N`, low degree first.
    phi: Vec<i64>,
    /// `ζ^k mod Φ_N` for `k < N`.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicRing {
    pub fn get(order: u32) -> Arc<CyclotomicRing> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicRing>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicRing::build(order)))
            .clone()
    }

    fn build(order: u32) -> CyclotomicRing {
        assert!(order >= 1, "root order must be positive");
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; deg.max(1)];
        if deg == 0 {
            cur = vec![1];
        } else {
            cur[0] = 1;
        }
        for _ in 0..order {
            powers.push(cur.clone());
            if deg == 0 {
                continue;
            }
            // multiply by x, then reduce the x^deg term
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..deg {
                    cur[i] -= top * phi[i];
                }
            }
        }
        CyclotomicRing { order, phi, powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of `Φ_N`, the rank of the power basis.
    pub fn degree(&self) -> usize {
        (self.phi.len() - 1).max(1)
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = *den.last().unwrap();
    debug_assert!(lead == 1 || lead == -1);
    let qlen = rem.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn] * lead;
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_divide_exact(&num, &phi_d);
        }
    }
    num
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// An element of `Z[ζ_N]` in canonical form.
#[derive(Clone)]
pub struct CyclotomicInt {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(order: u32) -> Self {
        let ring = CyclotomicRing::get(order);
        let coeffs = vec![0; ring.degree()];
        CyclotomicInt { ring, coeffs }
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = v;
        z
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// `ζ^k`; negative `k` allowed.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let ring = CyclotomicRing::get(order);
        let idx = k.rem_euclid(order as i64) as usize;
        let coeffs = ring.powers[idx].clone();
        CyclotomicInt { ring, coeffs }
    }

    /// Builds from coefficients of `ζ^0, ζ^1, …` of any length, reducing.
    pub fn from_power_coeffs(order: u32, raw: &[i64]) -> Self {
        let mut r = RawCyclotomic::zero(order);
        for (k, &c) in raw.iter().enumerate() {
            let i = k % order as usize;
            r.coeffs[i] = r.coeffs[i].wrapping_add(c);
        }
        r.reduce()
    }

    pub fn order(&self) -> u32 {
        self.ring.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `δ = −A² − A⁻²` with `A = ζ_N`.
    pub fn loop_value(order: u32) -> Self {
        -(&Self::zeta_pow(order, 2) + &Self::zeta_pow(order, -2))
    }

    /// `θ = −A³`, the factor of one positive unit of framing.
    pub fn twist(order: u32) -> Self {
        -Self::zeta_pow(order, 3)
    }

    /// `θ^r` for any integer `r`.
    pub fn twist_pow(order: u32, r: i64) -> Self {
        let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
        &Self::from_int(order, sign) * &Self::zeta_pow(order, 3 * r)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.ring.order, other.ring.order,
            "mixed root orders in cyclotomic arithmetic"
        );
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInt {}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt[N={}]({})", self.order(), self)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m}z")?,
                (k, 1) => write!(f, "z^{k}")?,
                (k, m) => write!(f, "{m}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.wrapping_add(*b))
            .collect();
        CyclotomicInt {
            ring: self.ring.clone(),
            coeffs,
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| c.wrapping_neg()).collect(),
        }
    }
}

impl Neg for CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.check_same(rhs);
        let n = self.order() as usize;
        let mut raw = RawCyclotomic::zero(self.order());
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                raw.coeffs[k] = raw.coeffs[k].wrapping_add(a.wrapping_mul(b));
            }
        }
        raw.reduce()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $m(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: u32,
    coeffs: Vec<i64>,
}

impl Serialize for CyclotomicInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr {
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CyclotomicRepr::deserialize(d)?;
        if r.order == 0 {
            return Err(serde::de::Error::custom("root order must be positive"));
        }
        Ok(CyclotomicInt::from_power_coeffs(r.order, &r.coeffs))
    }
}

/// Unreduced element of the group ring `Z[C_N]`, coefficient `k` on `ζ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawCyclotomic {
    pub coeffs: Vec<i64>,
}

impl RawCyclotomic {
    pub fn zero(order: u32) -> Self {
        RawCyclotomic {
            coeffs: vec![0; order as usize],
        }
    }

    pub fn monomial(order: u32, k: i64, c: i64) -> Self {
        let mut r = Self::zero(order);
        r.coeffs[k.rem_euclid(order as i64) as usize] = c;
        r
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `self += c · ζ^k · other`.
    pub fn add_shifted(&mut self, other: &RawCyclotomic, k: i64, c: i64) {
        let n = self.coeffs.len();
        let s = k.rem_euclid(n as i64) as usize;
        for (i, &v) in other.coeffs.iter().enumerate() {
            if v != 0 {
                let j = (i + s) % n;
                self.coeffs[j] = self.coeffs[j].wrapping_add(v.wrapping_mul(c));
            }
        }
    }

    pub fn add_assign(&mut self, other: &RawCyclotomic) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.wrapping_add(*b);
        }
    }

    pub fn mul(&self, other: &RawCyclotomic) -> RawCyclotomic {
        let n = self.coeffs.len();
        let mut out = RawCyclotomic::zero(n as u32);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out.coeffs[k] = out.coeffs[k].wrapping_add(a.wrapping_mul(b));
            }
        }
        out
    }

    /// Multiplication by `δ = −ζ² − ζ⁻²`.
    pub fn times_loop(&self) -> RawCyclotomic {
        let mut out = RawCyclotomic::zero(self.order());
        out.add_shifted(self, 2, -1);
        out.add_shifted(self, -2, -1);
        out
    }

    pub fn reduce(&self) -> CyclotomicInt {
        let ring = CyclotomicRing::get(self.order());
        let deg = ring.degree();
        let mut coeffs = vec![0i64; deg];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, &p) in ring.powers[k].iter().enumerate() {
                coeffs[i] = coeffs[i].wrapping_add(c.wrapping_mul(p));
            }
        }
        CyclotomicInt { ring, coeffs }
    }
}

impl From<&CyclotomicInt> for RawCyclotomic {
    fn from(x: &CyclotomicInt) -> Self {
        let mut r = RawCyclotomic::zero(x.order());
        for (i, &c) in x.coeffs.iter().enumerate() {
            r.coeffs[i] = c;
        }
        r
    }
}

/// Multiplicative order of `ζ_N^k`.
pub fn root_order(n: u32, k: i64) -> u64 {
    let k = k.rem_euclid(n as i64) as u64;
    n as u64 / gcd(n as u64, k)
}

pub(crate) fn require_order(order: u32) -> Result<()> {
    if order < 3 {
        return Err(Error::InvalidArgument(format!(
            "root order must be at least 3, got {order}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len() - 1, 8);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in [3u32, 4, 8, 12, 20, 28] {
            assert!(CyclotomicInt::zeta_pow(n, n as i64).is_one());
            assert!(CyclotomicInt::zeta_pow(n, 1).pow(n as u64).is_one());
            assert!(!CyclotomicInt::zeta_pow(n, 1).is_one());
            let z = CyclotomicInt::zeta_pow(n, 5);
            assert_eq!(&z * &CyclotomicInt::zeta_pow(n, -5), CyclotomicInt::one(n));
        }
    }

    #[test]
    fn loop_value_vanishes_at_eight() {
        assert!(CyclotomicInt::loop_value(8).is_zero());
        assert!(!CyclotomicInt::loop_value(20).is_zero());
    }

    #[test]
    fn twist_pow_matches_repeated_product() {
        let n = 20;
        let theta = CyclotomicInt::twist(n);
        assert_eq!(CyclotomicInt::twist_pow(n, 3), theta.pow(3));
        assert!((&CyclotomicInt::twist_pow(n, -4) * &theta.pow(4)).is_one());
    }

    #[test]
    fn display_and_serde() {
        let x = &CyclotomicInt::from_int(12, 3) - &CyclotomicInt::zeta_pow(12, 1);
        assert_eq!(x.to_string(), "3 - z");
        let s = serde_json::to_string(&x).unwrap();
        let y: CyclotomicInt = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
