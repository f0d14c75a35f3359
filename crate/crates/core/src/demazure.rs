//! Demazure products in closed form via minimal pairs of length positive
//! elements, and the generic actions `rho_x`, `rho_x^vee` on the finite Weyl
//! group.

use crate::affine::{self, length, length_positive_set, ExtAffElt};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylElt};

/// Pairs in `LP(x1) x LP(x2)` minimizing `d(v1 => w2 v2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPairSet {
    pub pairs: Vec<(WeylElt, WeylElt)>,
    pub min_distance: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureProduct {
    pub product: ExtAffElt,
    pub length: u32,
    pub pairs: MinimalPairSet,
}

fn unique_argmin(items: impl Iterator<Item = (WeylElt, u32)>, what: &str) -> Result<WeylElt> {
    let mut best: Option<(WeylElt, u32)> = None;
    let mut tie = false;
    for (v, d) in items {
        match best {
            Some((_, bd)) if d > bd => {}
            Some((_, bd)) if d == bd => tie = true,
            _ => {
                best = Some((v, d));
                tie = false;
            }
        }
    }
    match best {
        None => Err(Error::UniquenessViolation(format!("{what}: empty LP set"))),
        Some(_) if tie => Err(Error::UniquenessViolation(format!("{what}: tie in distance"))),
        Some((v, _)) => Ok(v),
    }
}

/// `rho_x(u)` given `LP(x)`: the member `v` minimizing `d(u => w v)`.
pub fn rho_lp(rs: &RootSystem, x: &ExtAffElt, lp: &[WeylElt], u: WeylElt) -> Result<WeylElt> {
    let o = rs.qbg0();
    unique_argmin(lp.iter().map(|&v| (v, o.d(u, rs.mul(x.w, v)))), "rho")
}

/// `rho_x^vee(u)` given `LP(x)`: the member `v` minimizing `d(v => u)`.
pub fn rho_vee_lp(rs: &RootSystem, lp: &[WeylElt], u: WeylElt) -> Result<WeylElt> {
    let o = rs.qbg0();
    unique_argmin(lp.iter().map(|&v| (v, o.d(v, u))), "rho_vee")
}

pub fn rho(rs: &RootSystem, x: &ExtAffElt, u: WeylElt) -> Result<WeylElt> {
    rho_lp(rs, x, &length_positive_set(rs, x), u)
}

pub fn rho_vee(rs: &RootSystem, x: &ExtAffElt, u: WeylElt) -> Result<WeylElt> {
    rho_vee_lp(rs, &length_positive_set(rs, x), u)
}

/// `rho_x` through the dual action of `x^{-1}`: `w^{-1} rho^vee_{x^{-1}}(u w0) w0`.
pub fn rho_by_duality(rs: &RootSystem, x: &ExtAffElt, u: WeylElt) -> Result<WeylElt> {
    let w0 = rs.w0();
    let r = rho_vee(rs, &affine::inv(rs, x), rs.mul(u, w0))?;
    Ok(rs.mul(rs.mul(rs.inv(x.w), r), w0))
}

/// `rho_x(u)` by composing the one-step actions along a reduced word
/// `x = omega r_{a_1} ... r_{a_n}`.
pub fn rho_via_word(rs: &RootSystem, x: &ExtAffElt, u: WeylElt) -> WeylElt {
    let (omega, word) = affine::reduced_word(rs, x);
    let mut v = rs.mul(rs.inv(omega.w), u);
    for a in word {
        if !rs.is_pos(rs.act_root(rs.inv(v), a.root)) {
            v = rs.mul(rs.reflection(a.root), v);
        }
    }
    v
}

pub fn minimal_pairs_lp(rs: &RootSystem, x2: &ExtAffElt, lp1: &[WeylElt], lp2: &[WeylElt]) -> MinimalPairSet {
    let o = rs.qbg0();
    let mut best = u32::MAX;
    let mut pairs = Vec::new();
    for &v1 in lp1 {
        for &v2 in lp2 {
            let d = o.d(v1, rs.mul(x2.w, v2));
            if d < best {
                best = d;
                pairs.clear();
            }
            if d == best {
                pairs.push((v1, v2));
            }
        }
    }
    MinimalPairSet { pairs, min_distance: best }
}

pub fn minimal_pairs(rs: &RootSystem, x1: &ExtAffElt, x2: &ExtAffElt) -> MinimalPairSet {
    minimal_pairs_lp(rs, x2, &length_positive_set(rs, x1), &length_positive_set(rs, x2))
}

/// `w1 v1 v2^{-1} e^{v2 v1^{-1} mu1 + mu2 - v2 wt(v1 => w2 v2)}`.
pub fn product_from_pair(rs: &RootSystem, x1: &ExtAffElt, x2: &ExtAffElt, v1: WeylElt, v2: WeylElt) -> ExtAffElt {
    let wt = rs.qbg0().wt(v1, rs.mul(x2.w, v2));
    let v2v1i = rs.mul(v2, rs.inv(v1));
    let mu = rs.act_cw(v2v1i, &x1.mu) + x2.mu - rs.act_cw(v2, &rs.coroot_to_pairings(&wt));
    ExtAffElt::new(rs.mul(rs.mul(x1.w, v1), rs.inv(v2)), mu)
}

/// Closed-form Demazure product given precomputed LP sets and lengths.
pub fn demazure_closed_lp(
    rs: &RootSystem,
    x1: &ExtAffElt,
    x2: &ExtAffElt,
    lp1: &[WeylElt],
    lp2: &[WeylElt],
    len_sum: u32,
) -> DemazureProduct {
    let pairs = minimal_pairs_lp(rs, x2, lp1, lp2);
    let (v1, v2) = pairs.pairs[0];
    let product = product_from_pair(rs, x1, x2, v1, v2);
    debug_assert!(pairs.pairs.iter().all(|&(a, b)| product_from_pair(rs, x1, x2, a, b) == product));
    DemazureProduct { product, length: len_sum - pairs.min_distance, pairs }
}

pub fn demazure_closed(rs: &RootSystem, x1: &ExtAffElt, x2: &ExtAffElt) -> DemazureProduct {
    let (lp1, lp2) = (length_positive_set(rs, x1), length_positive_set(rs, x2));
    demazure_closed_lp(rs, x1, x2, &lp1, &lp2, length(rs, x1) + length(rs, x2))
}

/// The auxiliary factors `(x1', x2')` with `x1' x2 = x1 x2' = x_*` for a given
/// pair `(v1, v2)`.
#[cfg(test)]
pub(crate) fn situation_factors(
    rs: &RootSystem,
    x1: &ExtAffElt,
    x2: &ExtAffElt,
    v1: WeylElt,
    v2: WeylElt,
) -> (ExtAffElt, ExtAffElt) {
    let wt = rs.coroot_to_pairings(&rs.qbg0().wt(v1, rs.mul(x2.w, v2)));
    let u = rs.mul(x2.w, v2);
    let x1p = ExtAffElt::new(
        rs.mul(rs.mul(x1.w, v1), rs.inv(u)),
        rs.act_cw(rs.mul(u, rs.inv(v1)), &x1.mu) - rs.act_cw(u, &wt),
    );
    let x2p = ExtAffElt::new(rs.mul(v1, rs.inv(v2)), x2.mu - rs.act_cw(v2, &wt));
    (x1p, x2p)
}
