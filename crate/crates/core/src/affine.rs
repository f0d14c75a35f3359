//! Extended affine Weyl group: elements `w e^mu`, affine roots, lengths, the
//! length functional, length positive chambers, and brute-force oracles for the
//! Bruhat order and the Demazure product.

use crate::error::{Error, Result};
use crate::rootsys::{IVec, RootSystem, WeylElt};

/// Affine root `(a, k)`, with `a` a root index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub root: usize,
    pub k: i32,
}

impl AffineRoot {
    pub fn new(root: usize, k: i32) -> Self {
        AffineRoot { root, k }
    }

    pub fn is_positive(&self, rs: &RootSystem) -> bool {
        self.k >= 1 - rs.ind(self.root)
    }

    pub fn neg(&self, rs: &RootSystem) -> AffineRoot {
        AffineRoot { root: rs.neg(self.root), k: -self.k }
    }
}

/// Simple affine roots: `(a_i, 0)` for each simple index, then `(-theta, 1)` for
/// each irreducible component.
pub fn simple_affine_roots(rs: &RootSystem) -> Vec<AffineRoot> {
    let mut out: Vec<AffineRoot> = (0..rs.rank()).map(|i| AffineRoot::new(rs.simple_root(i), 0)).collect();
    for c in 0..rs.components().len() {
        out.push(AffineRoot::new(rs.neg(rs.theta(c)), 1));
    }
    out
}

/// Element `w e^mu`; `mu` is a coweight given by pairings with the simple roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtAffElt {
    pub w: WeylElt,
    pub mu: IVec,
}

impl ExtAffElt {
    pub const ID: ExtAffElt = ExtAffElt { w: WeylElt::ID, mu: IVec::ZERO };

    pub fn new(w: WeylElt, mu: IVec) -> Self {
        ExtAffElt { w, mu }
    }

    pub fn translation(mu: IVec) -> Self {
        ExtAffElt { w: WeylElt::ID, mu }
    }

    pub fn finite(w: WeylElt) -> Self {
        ExtAffElt { w, mu: IVec::ZERO }
    }
}

/// `(w1 e^mu1)(w2 e^mu2) = w1 w2 e^(w2^{-1} mu1 + mu2)`.
#[inline]
pub fn mul(rs: &RootSystem, x: &ExtAffElt, y: &ExtAffElt) -> ExtAffElt {
    ExtAffElt {
        w: rs.mul(x.w, y.w),
        mu: rs.act_cw(rs.inv(y.w), &x.mu) + y.mu,
    }
}

#[inline]
pub fn inv(rs: &RootSystem, x: &ExtAffElt) -> ExtAffElt {
    let wi = rs.inv(x.w);
    ExtAffElt { w: wi, mu: -rs.act_cw(x.w, &x.mu) }
}

/// `(w e^mu)(a, k) = (w a, k - <mu, a>)`.
#[inline]
pub fn act_affine(rs: &RootSystem, x: &ExtAffElt, a: AffineRoot) -> AffineRoot {
    AffineRoot { root: rs.act_root(x.w, a.root), k: a.k - rs.pair(&x.mu, a.root) }
}

/// Affine reflection `r_(a,k) = s_a e^(k a^vee)`.
pub fn reflection(rs: &RootSystem, a: AffineRoot) -> ExtAffElt {
    ExtAffElt { w: rs.reflection(a.root), mu: rs.coroot_pairings(a.root) * a.k }
}

/// `l(x, a) = <mu, a> + [a > 0] - [w a > 0]`.
#[inline]
pub fn length_functional(rs: &RootSystem, x: &ExtAffElt, r: usize) -> i32 {
    rs.pair(&x.mu, r) + rs.ind(r) - rs.ind(rs.act_root(x.w, r))
}

/// Length via the Iwahori-Matsumoto closed form.
pub fn length(rs: &RootSystem, x: &ExtAffElt) -> u32 {
    let mut l = 0;
    for a in rs.pos_roots() {
        let p = rs.pair(&x.mu, a);
        l += if rs.is_pos(rs.act_root(x.w, a)) { p.abs() } else { (p + 1).abs() };
    }
    l as u32
}

/// Length as the sum of positive values of the length functional.
pub fn length_by_functional(rs: &RootSystem, x: &ExtAffElt) -> u32 {
    (0..rs.n_roots()).map(|r| length_functional(rs, x, r).max(0)).sum::<i32>() as u32
}

/// Length by counting positive affine roots sent to negative ones.
pub fn length_by_count(rs: &RootSystem, x: &ExtAffElt) -> u32 {
    let bound = (0..rs.n_roots()).map(|r| rs.pair(&x.mu, r).abs()).max().unwrap_or(0) + 1;
    let mut cnt = 0;
    for r in 0..rs.n_roots() {
        for k in 1 - rs.ind(r)..=bound {
            let a = AffineRoot::new(r, k);
            if !act_affine(rs, x, a).is_positive(rs) {
                cnt += 1;
            }
        }
    }
    cnt
}

pub fn semi_infinite_length(rs: &RootSystem, x: &ExtAffElt) -> i32 {
    rs.len(x.w) as i32 + rs.pair_two_rho(&x.mu)
}

pub fn is_length_positive(rs: &RootSystem, x: &ExtAffElt, v: WeylElt) -> bool {
    rs.pos_roots().all(|a| length_functional(rs, x, rs.act_root(v, a)) >= 0)
}

/// `LP(x)`, in increasing index order.
pub fn length_positive_set(rs: &RootSystem, x: &ExtAffElt) -> Vec<WeylElt> {
    rs.weyl_elements().filter(|&v| is_length_positive(rs, x, v)).collect()
}

/// Moves `v` to a length positive element by repeatedly replacing `v` with
/// `v s_a` whenever `l(x, v a) < 0`.
pub fn adjust_to_length_positive(rs: &RootSystem, x: &ExtAffElt, v: WeylElt) -> Result<WeylElt> {
    let limit = rs.weyl_order() * (length(rs, x) as usize + rs.n_roots() + 1);
    let mut v = v;
    for _ in 0..limit {
        match rs.pos_roots().find(|&a| length_functional(rs, x, rs.act_root(v, a)) < 0) {
            None => return Ok(v),
            Some(a) => v = rs.mul(v, rs.reflection(a)),
        }
    }
    Err(Error::NonTermination(limit))
}

pub fn is_shrunken(rs: &RootSystem, x: &ExtAffElt) -> bool {
    (0..rs.n_roots()).all(|r| length_functional(rs, x, r) != 0)
}

/// Canonical residue of `mu` in `X_* / Z Phi^vee`: scaled coroot coordinates
/// reduced modulo the Cartan determinant.
pub fn omega_class(rs: &RootSystem, x: &ExtAffElt) -> IVec {
    let d = rs.det() as i32;
    IVec(rs.scaled_coroot_coords(&x.mu).0.map(|c| c.rem_euclid(d)))
}

/// `r_a y`, for `a` a left descent candidate.
fn left_mul(rs: &RootSystem, a: AffineRoot, y: &ExtAffElt) -> ExtAffElt {
    mul(rs, &reflection(rs, a), y)
}

fn left_descent(rs: &RootSystem, delta: &[AffineRoot], y: &ExtAffElt) -> Option<AffineRoot> {
    let yi = inv(rs, y);
    delta.iter().copied().find(|&a| !act_affine(rs, &yi, a).is_positive(rs))
}

fn right_descent(rs: &RootSystem, delta: &[AffineRoot], y: &ExtAffElt) -> Option<AffineRoot> {
    delta.iter().copied().find(|&a| !act_affine(rs, y, a).is_positive(rs))
}

/// Writes `x = omega r_{b_1} ... r_{b_m}` with `m = l(x)`; returns `(omega, [b_1..b_m])`.
pub fn reduced_word(rs: &RootSystem, x: &ExtAffElt) -> (ExtAffElt, Vec<AffineRoot>) {
    let delta = simple_affine_roots(rs);
    let mut y = *x;
    let mut rev = Vec::new();
    while let Some(a) = right_descent(rs, &delta, &y) {
        y = mul(rs, &y, &reflection(rs, a));
        rev.push(a);
    }
    rev.reverse();
    (y, rev)
}

/// Bruhat order by the lifting property: for a left descent `s` of `y`,
/// `x <= y` iff `min(x, s x) <= s y`. The recursion is a single chain.
pub fn bruhat_leq_oracle(rs: &RootSystem, x: &ExtAffElt, y: &ExtAffElt) -> bool {
    if omega_class(rs, x) != omega_class(rs, y) {
        return false;
    }
    let delta = simple_affine_roots(rs);
    let (mut x, mut y) = (*x, *y);
    let (mut lx, mut ly) = (length(rs, &x), length(rs, &y));
    loop {
        if lx > ly {
            return false;
        }
        let Some(a) = left_descent(rs, &delta, &y) else {
            return x == y;
        };
        if !act_affine(rs, &inv(rs, &x), a).is_positive(rs) {
            x = left_mul(rs, a, &x);
            lx -= 1;
        }
        y = left_mul(rs, a, &y);
        ly -= 1;
    }
}

/// Demazure product by folding over a reduced word of `y`.
pub fn demazure_oracle(rs: &RootSystem, x: &ExtAffElt, y: &ExtAffElt) -> ExtAffElt {
    let (omega, word) = reduced_word(rs, y);
    let mut z = mul(rs, x, &omega);
    for a in word {
        if act_affine(rs, &z, a).is_positive(rs) {
            z = mul(rs, &z, &reflection(rs, a));
        }
    }
    z
}

/// All `x` with `l(x) <= max_length` and `|<mu, a_i>| <= max_mu`, sorted by
/// length, then finite part, then coweight. `budget` caps the candidate space.
pub fn enumerate_ball(rs: &RootSystem, max_length: u32, max_mu: i32, budget: usize) -> Result<Vec<ExtAffElt>> {
    let n = rs.rank();
    let side = (2 * max_mu.max(0) + 1) as usize;
    let space = side.checked_pow(n as u32).and_then(|s| s.checked_mul(rs.weyl_order()));
    match space {
        Some(s) if s <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded(format!(
                "ball with max_mu {max_mu} in {} exceeds budget {budget}",
                rs.name()
            )))
        }
    }
    let mut out = Vec::new();
    let mut coords = vec![-max_mu; n];
    loop {
        let mu = IVec::from_slice(&coords);
        for w in rs.weyl_elements() {
            let x = ExtAffElt::new(w, mu);
            if length(rs, &x) <= max_length {
                out.push(x);
            }
        }
        let mut i = 0;
        while i < n {
            coords[i] += 1;
            if coords[i] <= max_mu {
                break;
            }
            coords[i] = -max_mu;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out.sort_by_key(|x| (length(rs, x), x.w, x.mu));
    Ok(out)
}

/// Precomputed per-element data used by the sweep-heavy criteria.
#[derive(Clone, Debug)]
pub struct ElementInfo {
    pub x: ExtAffElt,
    pub len: u32,
    pub lp: Vec<WeylElt>,
    pub class: IVec,
}

impl ElementInfo {
    pub fn new(rs: &RootSystem, x: &ExtAffElt) -> Self {
        ElementInfo {
            x: *x,
            len: length(rs, x),
            lp: length_positive_set(rs, x),
            class: omega_class(rs, x),
        }
    }
}
