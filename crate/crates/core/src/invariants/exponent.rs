//! Orders of the squared braiding in both theories.

use crate::cyclotomic::{lcm, require_order, root_order, CyclotomicInt};
use crate::error::{Error, Result};
use crate::group::FiniteGroupWithClass;

/// Element `x·1 + y·e` of the two-strand Temperley–Lieb algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Tl2 {
    x: CyclotomicInt,
    y: CyclotomicInt,
}

impl Tl2 {
    fn mul(&self, o: &Tl2, delta: &CyclotomicInt) -> Tl2 {
        let y = &(&(&self.x * &o.y) + &(&self.y * &o.x)) + &(&(delta * &self.y) * &o.y);
        Tl2 {
            x: &self.x * &o.x,
            y,
        }
    }

    fn is_identity(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }
}

/// Order `e` of `σ²` acting on two strands at `A = ζ_N`, so that `2e`
/// same-sign crossings act trivially. The closed form
/// `lcm(ord A², ord A⁶)` is confirmed by powering the braiding; fails when
/// the braiding has infinite order (at `N = 8` the loop value vanishes and
/// `σ²` is unipotent).
pub fn tl_vafa_exponent(order: u32) -> Result<u64> {
    require_order(order)?;
    let e = lcm(root_order(order, 2), root_order(order, 6));
    let delta = CyclotomicInt::loop_value(order);
    let sigma = Tl2 {
        x: CyclotomicInt::zeta_pow(order, 1),
        y: CyclotomicInt::zeta_pow(order, -1),
    };
    let sq = sigma.mul(&sigma, &delta);
    let mut acc = sq.clone();
    let mut k = 1u64;
    while !acc.is_identity() {
        if k > e {
            return Err(Error::Degenerate(format!(
                "squared braiding has infinite order at N = {order}"
            )));
        }
        acc = acc.mul(&sq, &delta);
        k += 1;
    }
    if k != e {
        return Err(Error::Internal(format!(
            "braiding order {k} differs from closed form {e} at N = {order}"
        )));
    }
    Ok(e)
}

/// Order of `(a, b) ↦ ((ab)a(ab)⁻¹, (ab)b(ab)⁻¹)` on `C × C`.
pub fn dw_vafa_exponent(g: &FiniteGroupWithClass) -> u64 {
    pair_order(g, g.class(), g.class())
}

/// Same map on `C × C⁻¹`, the squared braiding of two antiparallel strands.
pub fn dw_vafa_exponent_antiparallel(g: &FiniteGroupWithClass) -> u64 {
    let inv: Vec<usize> = g.class().iter().map(|&c| g.inv(c)).collect();
    pair_order(g, g.class(), &inv)
}

/// Exponent used for padding: a multiple of both orders above, so twist
/// regions of either orientation are covered.
pub fn dw_pad_exponent(g: &FiniteGroupWithClass) -> u64 {
    lcm(dw_vafa_exponent(g), dw_vafa_exponent_antiparallel(g))
}

fn pair_order(g: &FiniteGroupWithClass, left: &[usize], right: &[usize]) -> u64 {
    let mut order = 1u64;
    let n = g.order();
    let mut seen = vec![false; n * n];
    for &a0 in left {
        for &b0 in right {
            if seen[a0 * n + b0] {
                continue;
            }
            let (mut a, mut b) = (a0, b0);
            let mut len = 0u64;
            loop {
                seen[a * n + b] = true;
                let ab = g.mul(a, b);
                a = g.conj(ab, a);
                b = g.conj(ab, b);
                len += 1;
                if a == a0 && b == b0 {
                    break;
                }
            }
            order = lcm(order, len);
        }
    }
    order
}

/// Smallest multiple of `e` that is at least 2.
pub fn pad_unit(e: u64) -> u64 {
    if e >= 2 {
        e
    } else {
        2
    }
}
