//! Exact invariants used to check every rewrite: the Kauffman bracket at a
//! root of unity (frontier state sum on PD codes, Temperley–Lieb sweep on
//! plats) and homomorphism counts into a finite group (arc colouring on PD
//! codes, strand sweep on plats).

pub mod bracket;
pub mod exponent;
pub mod homcount;

pub use bracket::{
    bracket_pd, bracket_pd_with_cap, bracket_plat, bracket_plat_with_cap, framed_invariant,
    jones_value, jones_value_with_cap,
};
pub use exponent::{
    dw_pad_exponent, dw_vafa_exponent, dw_vafa_exponent_antiparallel, pad_unit, tl_vafa_exponent,
};
pub use homcount::{homcount_pd, homcount_pd_with_cap, homcount_plat, homcount_plat_with_budget};
