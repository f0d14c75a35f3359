//! Bruhat order criteria on the extended affine Weyl group, Bruhat covers,
//! the semi-infinite order, admissible and permissible sets, and the
//! double-coset (Deodhar) refinements.

use serde::Serialize;

use crate::affine::{self, length, length_functional, length_positive_set, reflection, AffineRoot, ExtAffElt};
use crate::demazure::{rho_lp, rho_vee_lp};
use crate::error::{Error, Result};
use crate::qbg::EdgeKind;
use crate::rootsys::{IVec, QVec, RootSystem, SimpleSet, WeylElt, Q};
use crate::semiaffine::{
    coset_length_functional, is_min_double_coset_rep, is_positive_for_coset, positive_chamber, sup_fundamental,
    AffSubset, SemiAffine,
};

/// `(v, J_1..J_m)`: `v` length positive for `x` and `l(x, v a) = 0` on `Phi_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecidingDatum {
    pub v: WeylElt,
    pub js: Vec<SimpleSet>,
}

impl DecidingDatum {
    pub fn validate(&self, rs: &RootSystem, x: &ExtAffElt) -> Result<()> {
        if self.js.is_empty() {
            return Err(Error::InvalidDatum("empty list of subsets".into()));
        }
        if !affine::is_length_positive(rs, x, self.v) {
            return Err(Error::InvalidDatum("v is not length positive".into()));
        }
        let j = self.js.iter().fold(rs.full_set(), |a, &b| a & b);
        let bad = (0..rs.n_roots()).any(|a| rs.root_in_j(a, j) && length_functional(rs, x, rs.act_root(self.v, a)) != 0);
        if bad {
            return Err(Error::InvalidDatum("length functional nonzero on the common parabolic".into()));
        }
        Ok(())
    }
}

/// First length positive element with the single subset `{}`.
pub fn default_datum(rs: &RootSystem, x: &ExtAffElt) -> DecidingDatum {
    let v = rs.weyl_elements().find(|&v| affine::is_length_positive(rs, x, v)).expect("LP(x) is nonempty");
    DecidingDatum { v, js: vec![0] }
}

/// Whether `v^{-1} mu + wt_r(v' => v) + wt_l(w v => w' v') <= v'^{-1} mu'` modulo `j`.
#[inline]
fn inequality(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, v: WeylElt, vp: WeylElt, wts: IVec, j: SimpleSet) -> bool {
    let lhs = rs.act_cw(rs.inv(v), &x.mu) + rs.coroot_to_pairings(&wts);
    rs.dominance_leq(&lhs, &rs.act_cw(rs.inv(vp), &xp.mu), j)
}

fn plain_inequality(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, v: WeylElt, vp: WeylElt, j: SimpleSet) -> bool {
    let o = rs.qbg0();
    let wts = o.wt(vp, v) + o.wt(rs.mul(x.w, v), rs.mul(xp.w, vp));
    inequality(rs, x, xp, v, vp, wts, j)
}

/// How the existential `v'` is searched for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Search {
    /// Only `rho_{x'}(w v)` and `rho^vee_{x'}(v)`.
    Candidates,
    /// Every element of `W`.
    FullScan,
}

fn exists_vp(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, lp_xp: &[WeylElt], v: WeylElt, j: SimpleSet, search: Search) -> bool {
    match search {
        Search::Candidates => {
            let c1 = rho_lp(rs, xp, lp_xp, rs.mul(x.w, v)).expect("generic action is unique");
            if plain_inequality(rs, x, xp, v, c1, j) {
                return true;
            }
            let c2 = rho_vee_lp(rs, lp_xp, v).expect("generic action is unique");
            plain_inequality(rs, x, xp, v, c2, j)
        }
        Search::FullScan => rs.weyl_elements().any(|vp| plain_inequality(rs, x, xp, v, vp, j)),
    }
}

/// Bruhat-deciding criterion with an explicit search mode and precomputed `LP(x')`.
pub fn bruhat_leq_datum_with(
    rs: &RootSystem,
    x: &ExtAffElt,
    xp: &ExtAffElt,
    lp_xp: &[WeylElt],
    datum: &DecidingDatum,
    search: Search,
) -> bool {
    datum.js.iter().all(|&j| exists_vp(rs, x, xp, lp_xp, datum.v, j, search))
}

pub fn bruhat_leq_datum(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, datum: &DecidingDatum) -> Result<bool> {
    datum.validate(rs, x)?;
    Ok(bruhat_leq_datum_with(rs, x, xp, &length_positive_set(rs, xp), datum, Search::Candidates))
}

/// For every `v1 in W` some `v2` satisfies the inequality. Candidates are tried
/// before a full scan.
pub fn bruhat_leq_lp_with(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, lp_xp: &[WeylElt]) -> bool {
    if affine::omega_class(rs, x) != affine::omega_class(rs, xp) {
        return false;
    }
    rs.weyl_elements().all(|v| {
        exists_vp(rs, x, xp, lp_xp, v, 0, Search::Candidates) || exists_vp(rs, x, xp, lp_xp, v, 0, Search::FullScan)
    })
}

pub fn bruhat_leq_lp(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt) -> bool {
    bruhat_leq_lp_with(rs, x, xp, &length_positive_set(rs, xp))
}

/// Single inequality against the unique length positive element of `x'`.
pub fn bruhat_leq_shrunken(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt) -> Result<bool> {
    let lp = length_positive_set(rs, xp);
    if lp.len() != 1 {
        return Err(Error::NotShrunken);
    }
    let v = default_datum(rs, x).v;
    Ok(plain_inequality(rs, x, xp, v, lp[0], 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverTag {
    C1,
    C2,
    C3,
    C4,
}

/// Bruhat covers of `x`, each tagged with every clause that produces it.
pub fn covers(rs: &RootSystem, x: &ExtAffElt) -> Vec<(ExtAffElt, CoverTag)> {
    let o = rs.qbg0();
    let v = default_datum(rs, x).v;
    let wv = rs.mul(x.w, v);
    let mut out = Vec::new();
    for a in rs.pos_roots() {
        let sa = rs.reflection(a);
        let vp = rs.mul(sa, v);
        let right = [
            (ExtAffElt::finite(sa), EdgeKind::Bruhat, CoverTag::C1),
            (reflection(rs, AffineRoot::new(rs.neg(a), 1)), EdgeKind::Quantum, CoverTag::C2),
        ];
        for (r, kind, tag) in right {
            if o.edge_kind(vp, v) == Some(kind) {
                let xp = affine::mul(rs, x, &r);
                if affine::is_length_positive(rs, &xp, vp) {
                    out.push((xp, tag));
                }
            }
        }
        let swv = rs.mul(sa, wv);
        let left = [
            (ExtAffElt::finite(sa), EdgeKind::Bruhat, CoverTag::C3),
            (reflection(rs, AffineRoot::new(rs.neg(a), 1)), EdgeKind::Quantum, CoverTag::C4),
        ];
        for (r, kind, tag) in left {
            if o.edge_kind(wv, swv) == Some(kind) {
                let xp = affine::mul(rs, &r, x);
                if affine::is_length_positive(rs, &xp, v) {
                    out.push((xp, tag));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Covers by brute force: `x r_a` for affine reflections with `l = l(x) + 1`
/// and `x <= x r_a`.
pub fn covers_oracle(rs: &RootSystem, x: &ExtAffElt) -> Vec<ExtAffElt> {
    let lx = length(rs, x);
    let kmax = lx as i32 + 2;
    let mut out = Vec::new();
    for a in rs.pos_roots() {
        for k in -kmax..=kmax {
            let y = affine::mul(rs, x, &reflection(rs, AffineRoot::new(a, k)));
            if length(rs, &y) == lx + 1 && affine::bruhat_leq_oracle(rs, x, &y) {
                out.push(y);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `mu1 + wt(w1 => w2) <= mu2`.
pub fn semi_infinite_leq(rs: &RootSystem, x1: &ExtAffElt, x2: &ExtAffElt) -> bool {
    let lhs = x1.mu + rs.coroot_to_pairings(&rs.qbg0().wt(x1.w, x2.w));
    rs.dominance_leq(&lhs, &x2.mu, 0)
}

/// Compares `x1 e^lam <= x2 e^lam` with the oracle for `lam = c * (sum of
/// positive coroots)`, raising `c` until two consecutive verdicts agree.
pub fn semi_infinite_leq_via_bruhat(rs: &RootSystem, x1: &ExtAffElt, x2: &ExtAffElt) -> bool {
    let base = rs.coroot_to_pairings(&rs.pos_roots().fold(IVec::ZERO, |s, a| s + rs.coroot(a)));
    let min_pair = (0..rs.rank()).map(|i| base.0[i]).min().unwrap_or(1).max(1);
    let need = (length(rs, x1) + length(rs, x2) + 2) as i32;
    let mut c = (need + min_pair - 1) / min_pair;
    let verdict = |c: i32| {
        let t = ExtAffElt::translation(base * c);
        affine::bruhat_leq_oracle(rs, &affine::mul(rs, x1, &t), &affine::mul(rs, x2, &t))
    };
    let mut prev = verdict(c);
    let mut stable = 0;
    while stable < 2 {
        c *= 2;
        let cur = verdict(c);
        if cur == prev {
            stable += 1;
        } else {
            stable = 0;
            prev = cur;
        }
    }
    prev
}

fn check_dominant(rs: &RootSystem, lam: &IVec) -> Result<()> {
    if rs.is_dominant(lam) {
        Ok(())
    } else {
        Err(Error::NotDominant)
    }
}

/// `v^{-1} mu + wt(w v => v) <= lam` for all `v`.
pub fn in_admissible(rs: &RootSystem, x: &ExtAffElt, lam: &IVec) -> Result<bool> {
    check_dominant(rs, lam)?;
    let o = rs.qbg0();
    Ok(rs.weyl_elements().all(|v| {
        let lhs = rs.act_cw(rs.inv(v), &x.mu) + rs.coroot_to_pairings(&o.wt(rs.mul(x.w, v), v));
        rs.dominance_leq(&lhs, lam, 0)
    }))
}

/// `x <= e^{u lam}` for some `u`, via the oracle.
pub fn in_admissible_oracle(rs: &RootSystem, x: &ExtAffElt, lam: &IVec) -> bool {
    rs.weyl_elements()
        .any(|u| affine::bruhat_leq_oracle(rs, x, &ExtAffElt::translation(rs.act_cw(u, lam))))
}

fn mu_congruent(rs: &RootSystem, mu: &IVec, lam: &IVec) -> bool {
    rs.in_coroot_lattice(&(*mu - *lam))
}

/// `v^{-1} mu + sup_a (v^{-1} w_a - (w v)^{-1} w_a) <= lam` for all `v`, with
/// normalized fundamental coweights.
pub fn in_permissible(rs: &RootSystem, x: &ExtAffElt, lam: &IVec) -> Result<bool> {
    check_dominant(rs, lam)?;
    if !mu_congruent(rs, &x.mu, lam) {
        return Ok(false);
    }
    let lam_c = rs.coroot_coords_q(&QVec::from_ivec(lam));
    Ok(rs.weyl_elements().all(|v| {
        let mu_c = rs.coroot_coords_q(&QVec::from_ivec(&rs.act_cw(rs.inv(v), &x.mu)));
        let lhs = mu_c + sup_fundamental(rs, rs.mul(x.w, v), v, true, AffSubset::EMPTY);
        (0..rs.rank()).all(|i| lhs.0[i] <= lam_c.0[i])
    }))
}

/// Normalized fundamental coweights as pairings, one per affine simple root
/// (zero for the affine roots).
fn normalized_coweights(rs: &RootSystem) -> Vec<QVec> {
    let mut out = vec![QVec::ZERO; rs.components().len()];
    for i in 0..rs.rank() {
        let th = rs.theta(rs.component_of_root(rs.simple_root(i)));
        let mut p = QVec::ZERO;
        p.0[i] = Q::new(1, rs.root(th).0[i] as i64);
        out.push(p);
    }
    out
}

/// The defining condition `(mu + w_a - w^{-1} w_a)^dom <= lam` for every `a`.
pub fn in_permissible_by_definition(rs: &RootSystem, x: &ExtAffElt, lam: &IVec) -> Result<bool> {
    check_dominant(rs, lam)?;
    if !mu_congruent(rs, &x.mu, lam) {
        return Ok(false);
    }
    let lam_q = QVec::from_ivec(lam);
    let wi = rs.inv(x.w);
    Ok(normalized_coweights(rs).iter().all(|om| {
        let v = QVec::from_ivec(&x.mu) + *om - rs.act_q(wi, om);
        rs.dominance_leq_q(&rs.dominant_rep_q(&v).0, &lam_q)
    }))
}

/// Whether `ceil(sup_a w2^{-1} w_a - w1^{-1} w_a) = wt(w1 => w2)` for all pairs;
/// returns the first failing pair otherwise.
pub fn adm_eq_perm_type_check(rs: &RootSystem) -> (bool, Option<(WeylElt, WeylElt)>) {
    let o = rs.qbg0();
    for w1 in rs.weyl_elements() {
        for w2 in rs.weyl_elements() {
            if sup_fundamental(rs, w1, w2, true, AffSubset::EMPTY).ceil() != o.wt(w1, w2) {
                return (false, Some((w1, w2)));
            }
        }
    }
    (true, None)
}

fn check_regular(rs: &RootSystem, sets: &[AffSubset]) -> Result<()> {
    if sets.iter().all(|s| s.is_regular(rs)) {
        Ok(())
    } else {
        Err(Error::NotRegular)
    }
}

fn coset_inequality(
    rs: &RootSystem,
    x: &ExtAffElt,
    xp: &ExtAffElt,
    l: &SemiAffine,
    r: &SemiAffine,
    v: WeylElt,
    vp: WeylElt,
    j: SimpleSet,
) -> bool {
    let wts = r.wt(vp, v) + l.wt(rs.mul(x.w, v), rs.mul(xp.w, vp));
    inequality(rs, x, xp, v, vp, wts, j)
}

fn check_coset_datum(rs: &RootSystem, x: &ExtAffElt, l: &SemiAffine, r: &SemiAffine, v: WeylElt, js: &[SimpleSet]) -> Result<()> {
    if !is_positive_for_coset(rs, x, v, l, r) {
        return Err(Error::InvalidPositivity);
    }
    if js.is_empty() {
        return Err(Error::InvalidDatum("empty list of subsets".into()));
    }
    let j = js.iter().fold(rs.full_set(), |a, &b| a & b);
    let bad = (0..rs.n_roots()).any(|a| rs.root_in_j(a, j) && coset_length_functional(rs, x, rs.act_root(v, a), l, r) < 0);
    if bad {
        return Err(Error::InvalidDatum("coset functional negative on the common parabolic".into()));
    }
    Ok(())
}

/// Compares the minimal representatives of `W_L x W_R` and `W_L x' W_R`.
pub fn coset_bruhat_leq(
    rs: &RootSystem,
    x: &ExtAffElt,
    xp: &ExtAffElt,
    l: AffSubset,
    r: AffSubset,
    v: WeylElt,
    js: &[SimpleSet],
) -> Result<bool> {
    check_regular(rs, &[l, r])?;
    let (sl, sr) = (rs.semi_affine(l)?, rs.semi_affine(r)?);
    check_coset_datum(rs, x, &sl, &sr, v, js)?;
    Ok(js.iter().all(|&j| rs.weyl_elements().any(|vp| coset_inequality(rs, x, xp, &sl, &sr, v, vp, j))))
}

/// Oracle: Bruhat comparison of the minimal double coset representatives.
pub fn coset_bruhat_leq_oracle(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, l: AffSubset, r: AffSubset) -> Result<bool> {
    let a = crate::semiaffine::double_coset_min(rs, x, l, r)?;
    let b = crate::semiaffine::double_coset_min(rs, xp, l, r)?;
    Ok(affine::bruhat_leq_oracle(rs, &a, &b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeodharDatum {
    pub ls: Vec<AffSubset>,
    pub rs: Vec<AffSubset>,
    /// `v[i][j]`, positive for the `(L_i, R_j)` coset functional.
    pub v: Vec<Vec<WeylElt>>,
    pub js: Vec<Vec<Vec<SimpleSet>>>,
}

fn intersect_all(sets: &[AffSubset]) -> AffSubset {
    sets.iter().fold(AffSubset { finite: u32::MAX, theta: u32::MAX }, |a, b| a.intersect(b))
}

impl DeodharDatum {
    /// Positive chambers found by scan, with the single subset `{}` everywhere.
    pub fn build(rs: &RootSystem, x: &ExtAffElt, ls: Vec<AffSubset>, rsets: Vec<AffSubset>) -> Result<DeodharDatum> {
        check_regular(rs, &ls)?;
        check_regular(rs, &rsets)?;
        let mut v = Vec::new();
        for &l in &ls {
            let sl = rs.semi_affine(l)?;
            let mut row = Vec::new();
            for &r in &rsets {
                row.push(positive_chamber(rs, x, &sl, &*rs.semi_affine(r)?)?);
            }
            v.push(row);
        }
        let js = vec![vec![vec![0]; rsets.len()]; ls.len()];
        let d = DeodharDatum { ls, rs: rsets, v, js };
        d.validate(rs, x)?;
        Ok(d)
    }

    pub fn validate(&self, rs: &RootSystem, x: &ExtAffElt) -> Result<()> {
        if self.ls.is_empty() || self.rs.is_empty() {
            return Err(Error::InvalidDatum("empty list of coset subsets".into()));
        }
        check_regular(rs, &self.ls).map_err(|_| Error::InvalidDatum("irregular left subset".into()))?;
        check_regular(rs, &self.rs).map_err(|_| Error::InvalidDatum("irregular right subset".into()))?;
        if self.v.len() != self.ls.len() || self.js.len() != self.ls.len() {
            return Err(Error::InvalidDatum("table shape".into()));
        }
        if !is_min_double_coset_rep(rs, x, intersect_all(&self.ls), intersect_all(&self.rs)) {
            return Err(Error::InvalidDatum("x is not minimal in its double coset".into()));
        }
        for (i, &l) in self.ls.iter().enumerate() {
            if self.v[i].len() != self.rs.len() || self.js[i].len() != self.rs.len() {
                return Err(Error::InvalidDatum("table shape".into()));
            }
            let sl = rs.semi_affine(l)?;
            for (j, &r) in self.rs.iter().enumerate() {
                let sr = rs.semi_affine(r)?;
                check_coset_datum(rs, x, &sl, &sr, self.v[i][j], &self.js[i][j])
                    .map_err(|e| Error::InvalidDatum(format!("entry ({i},{j}): {e}")))?;
            }
        }
        Ok(())
    }
}

pub fn deodhar_leq(rs: &RootSystem, x: &ExtAffElt, xp: &ExtAffElt, datum: &DeodharDatum) -> Result<bool> {
    datum.validate(rs, x)?;
    for (i, &l) in datum.ls.iter().enumerate() {
        for (j, &r) in datum.rs.iter().enumerate() {
            if !coset_bruhat_leq(rs, x, xp, l, r, datum.v[i][j], &datum.js[i][j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `v^{-1} mu + ^K wt(w v => v) <= lam` for every `v`.
pub fn in_generalized_admissible(rs: &RootSystem, x: &ExtAffElt, lam: &IVec, k: AffSubset) -> Result<bool> {
    check_regular(rs, &[k])?;
    check_dominant(rs, lam)?;
    let sk = rs.semi_affine(k)?;
    Ok(rs.weyl_elements().all(|v| {
        let lhs = rs.act_cw(rs.inv(v), &x.mu) + rs.coroot_to_pairings(&sk.wt(rs.mul(x.w, v), v));
        rs.dominance_leq(&lhs, lam, 0)
    }))
}

/// Oracle: some element of `W_K x W_K` is admissible.
pub fn in_generalized_admissible_oracle(rs: &RootSystem, x: &ExtAffElt, lam: &IVec, k: AffSubset) -> Result<bool> {
    let coset = crate::semiaffine::double_coset(rs, x, k, k)?;
    Ok(coset.iter().any(|y| in_admissible_oracle(rs, y, lam)))
}
