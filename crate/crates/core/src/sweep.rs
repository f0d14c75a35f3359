//! Exhaustive verification sweeps over enumerated balls. Each suite compares
//! the fast path against an oracle and reports counterexamples verbatim.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::affine::{self, bruhat_leq_oracle, demazure_oracle, enumerate_ball, length, ElementInfo, ExtAffElt};
use crate::criteria::{
    adm_eq_perm_type_check, bruhat_leq_lp_with, bruhat_leq_datum_with, coset_bruhat_leq, covers, covers_oracle,
    default_datum, in_admissible, in_admissible_oracle, in_permissible, in_permissible_by_definition, Search,
};
use crate::demazure::{demazure_closed_lp, rho_lp, rho_via_word};
use crate::error::{Error, Result};
use crate::format::{element_json, format_aff_subset, format_element, weyl_json};
use crate::newton::{
    generic_newton_point_for, generic_newton_point_oracle, is_fundamental, newton_point, twisted_rho, x_infinity,
    SigmaAut,
};
use crate::qbg::{is_quantum_root, is_quantum_root_by_pairing, wt_general_via_diamond, wt_to_identity_fast};
use crate::rootsys::{IVec, RootSystem, WeylElt};
use crate::semiaffine::{double_coset_min, positive_chamber, sup_fundamental, AffSubset};

/// Candidate-space cap handed to ball enumeration.
const BALL_BUDGET: usize = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Exec {
    /// `Parallel` when built with the `parallel` feature.
    pub fn best() -> Exec {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_items<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = exec;
    items.iter().map(f).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BruhatMaster,
    Demazure,
    QbgWeights,
    QbgWeight2rho,
    QuantumRoots,
    AdmPerm,
    Covers,
    GenericActions,
    Newton,
    SemiAffine,
    Deodhar,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::BruhatMaster,
        Suite::Demazure,
        Suite::QbgWeights,
        Suite::QbgWeight2rho,
        Suite::QuantumRoots,
        Suite::AdmPerm,
        Suite::Covers,
        Suite::GenericActions,
        Suite::Newton,
        Suite::SemiAffine,
        Suite::Deodhar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BruhatMaster => "bruhat-master",
            Suite::Demazure => "demazure",
            Suite::QbgWeights => "qbg-weights",
            Suite::QbgWeight2rho => "qbg-weight2rho",
            Suite::QuantumRoots => "quantum-roots",
            Suite::AdmPerm => "adm-perm",
            Suite::Covers => "covers",
            Suite::GenericActions => "generic-actions",
            Suite::Newton => "newton",
            Suite::SemiAffine => "semi-affine",
            Suite::Deodhar => "deodhar",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidDatum(format!("unknown suite `{s}`")))
    }
}

fn default_max_length() -> u32 {
    4
}
fn default_max_mu() -> i32 {
    2
}
fn default_max_report() -> usize {
    20
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub suite: Suite,
    pub root_system: String,
    #[serde(default = "default_max_length")]
    pub max_length: u32,
    #[serde(default = "default_max_mu")]
    pub max_mu: i32,
    /// Upper bound on checked cases; `0` makes the sweep vacuous.
    #[serde(default)]
    pub max_cases: Option<u64>,
    #[serde(default = "default_max_report")]
    pub max_report: usize,
}

impl SweepConfig {
    pub fn new(suite: Suite, root_system: &str, max_length: u32, max_mu: i32) -> SweepConfig {
        SweepConfig {
            suite,
            root_system: root_system.to_string(),
            max_length,
            max_mu,
            max_cases: None,
            max_report: default_max_report(),
        }
    }

    pub fn from_toml(s: &str) -> Result<SweepConfig> {
        toml::from_str(s).map_err(|e| {
            let pos = e.span().map_or(0, |r| r.start);
            Error::parse(pos, e.message().to_string())
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub root_system: String,
    pub max_length: u32,
    pub max_mu: i32,
    pub elements: usize,
    pub cases: u64,
    pub violations: u64,
    pub counterexamples: Vec<String>,
    pub vacuous: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

struct Ctx<'a> {
    rs: &'a RootSystem,
    ball: Vec<ElementInfo>,
    exec: Exec,
    max_cases: Option<u64>,
}

impl Ctx<'_> {
    fn plan(&self, cases: u64) -> Result<()> {
        match self.max_cases {
            Some(m) if cases > m => Err(Error::BudgetExceeded(format!("{cases} cases planned, budget {m}"))),
            _ => Ok(()),
        }
    }

    fn fe(&self, x: &ExtAffElt) -> String {
        format_element(self.rs, x)
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    bad: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.bad.push(msg());
        }
    }

    fn merge(parts: Vec<Tally>) -> Tally {
        let mut out = Tally::default();
        for p in parts {
            out.cases += p.cases;
            out.bad.extend(p.bad);
        }
        out
    }
}

/// Runs one suite with the given executor.
pub fn run_sweep(cfg: &SweepConfig, exec: Exec) -> Result<Report> {
    let rs = RootSystem::build(&cfg.root_system)?;
    let mut report = Report {
        suite: cfg.suite,
        root_system: rs.name().to_string(),
        max_length: cfg.max_length,
        max_mu: cfg.max_mu,
        elements: 0,
        cases: 0,
        violations: 0,
        counterexamples: Vec::new(),
        vacuous: false,
        passed: true,
        details: Value::Null,
    };
    if cfg.max_cases == Some(0) {
        report.vacuous = true;
        return Ok(report);
    }
    let ball_els = enumerate_ball(&rs, cfg.max_length, cfg.max_mu, BALL_BUDGET)?;
    let ball = map_items(exec, &ball_els, |x| ElementInfo::new(&rs, x));
    let ctx = Ctx { rs: &rs, ball, exec, max_cases: cfg.max_cases };
    let (tally, details) = match cfg.suite {
        Suite::BruhatMaster => (bruhat_master(&ctx)?, Value::Null),
        Suite::Demazure => (demazure(&ctx)?, Value::Null),
        Suite::QbgWeights => (qbg_weights(&ctx)?, Value::Null),
        Suite::QbgWeight2rho => (qbg_weight2rho(&ctx)?, Value::Null),
        Suite::QuantumRoots => (quantum_roots(&ctx)?, Value::Null),
        Suite::AdmPerm => adm_perm(&ctx)?,
        Suite::Covers => (cover_suite(&ctx)?, Value::Null),
        Suite::GenericActions => (generic_actions(&ctx)?, Value::Null),
        Suite::Newton => (newton_suite(&ctx)?, Value::Null),
        Suite::SemiAffine => (semi_affine(&ctx)?, Value::Null),
        Suite::Deodhar => (deodhar(&ctx)?, Value::Null),
    };
    report.elements = ctx.ball.len();
    report.cases = tally.cases;
    report.violations = tally.bad.len() as u64;
    report.passed = tally.bad.is_empty();
    report.vacuous = tally.cases == 0;
    report.counterexamples = tally.bad.into_iter().take(cfg.max_report).collect();
    report.details = details;
    Ok(report)
}

fn pairs_plan(ctx: &Ctx<'_>) -> Result<()> {
    let n = ctx.ball.len() as u64;
    ctx.plan(n * n)
}

fn bruhat_master(ctx: &Ctx<'_>) -> Result<Tally> {
    pairs_plan(ctx)?;
    let rs = ctx.rs;
    let parts = map_items(ctx.exec, &ctx.ball, |xi| {
        let d = default_datum(rs, &xi.x);
        let mut t = Tally::default();
        for yi in &ctx.ball {
            let o = bruhat_leq_oracle(rs, &xi.x, &yi.x);
            let t2 = bruhat_leq_datum_with(rs, &xi.x, &yi.x, &yi.lp, &d, Search::Candidates);
            let t1 = bruhat_leq_lp_with(rs, &xi.x, &yi.x, &yi.lp);
            t.check(o == t1 && o == t2, || {
                format!("{} <= {}: oracle={o} all-v={t1} datum={t2}", ctx.fe(&xi.x), ctx.fe(&yi.x))
            });
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn demazure(ctx: &Ctx<'_>) -> Result<Tally> {
    pairs_plan(ctx)?;
    let rs = ctx.rs;
    let o = rs.qbg0();
    let parts = map_items(ctx.exec, &ctx.ball, |a| {
        let mut t = Tally::default();
        for b in &ctx.ball {
            let p = demazure_closed_lp(rs, &a.x, &b.x, &a.lp, &b.lp, a.len + b.len);
            let oracle = demazure_oracle(rs, &a.x, &b.x);
            let pairs_ok = p.pairs.pairs.iter().all(|&(v1, v2)| {
                a.lp.contains(&v1) && b.lp.contains(&v2) && o.d(v1, rs.mul(b.x.w, v2)) == p.pairs.min_distance
            });
            let ok = p.product == oracle && length(rs, &oracle) == p.length && pairs_ok;
            t.check(ok, || {
                format!(
                    "{} * {}: closed={} oracle={} certified length={}",
                    ctx.fe(&a.x),
                    ctx.fe(&b.x),
                    ctx.fe(&p.product),
                    ctx.fe(&oracle),
                    p.length
                )
            });
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn qbg_weights(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let n = rs.weyl_order() as u64;
    ctx.plan(n + n * n)?;
    let o = rs.qbg0();
    let ws: Vec<WeylElt> = rs.weyl_elements().collect();
    let parts = map_items(ctx.exec, &ws, |&w1| {
        let mut t = Tally::default();
        let f = wt_to_identity_fast(rs, w1);
        t.check(f == o.wt(w1, WeylElt::ID), || format!("wt({:?} => 1): fast={f:?} bfs={:?}", rs.word(w1), o.wt(w1, WeylElt::ID)));
        for &w2 in &ws {
            let g = wt_general_via_diamond(rs, w1, w2);
            t.check(g == o.wt(w1, w2), || format!("wt({:?} => {:?}): diamond={g:?} bfs={:?}", rs.word(w1), rs.word(w2), o.wt(w1, w2)));
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn qbg_weight2rho(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let subsets: Vec<u32> = (0..=rs.full_set()).collect();
    let n = rs.weyl_order() as u64;
    ctx.plan(subsets.len() as u64 * n * n)?;
    let full = rs.qbg0();
    let parts = map_items(ctx.exec, &subsets, |&j| {
        let o = rs.qbg(j);
        let mut two_rho_j = IVec::ZERO;
        for a in rs.pos_roots().filter(|&a| rs.root_in_j(a, j)) {
            two_rho_j += rs.root(a);
        }
        let mut t = Tally::default();
        for &a in o.vertices() {
            for &b in o.vertices() {
                let wt = o.wt(a, b);
                let p = rs.coroot_to_pairings(&wt);
                let lhs = rs.two_rho().dot(&p) - two_rho_j.dot(&p);
                let rhs = o.d(a, b) as i32 + rs.len(a) as i32 - rs.len(b) as i32;
                let proj = rs.mod_j(&full.wt(a, b), j) == wt;
                t.check(lhs == rhs && proj, || {
                    format!("J={j:#b} {:?} => {:?}: pairing={lhs} expected={rhs} projection={proj}", rs.word(a), rs.word(b))
                });
            }
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn quantum_roots(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    ctx.plan(rs.n_pos() as u64)?;
    let mut t = Tally::default();
    for a in rs.pos_roots() {
        let q = is_quantum_root(rs, a);
        let bound = rs.len(rs.reflection(a)) as i32 <= rs.coroot_two_rho(&rs.coroot(a)) - 1;
        let short_support = (0..rs.rank())
            .filter(|&i| rs.root(a).0[i] != 0)
            .all(|i| rs.is_short(rs.simple_root(i)));
        let by_class = !rs.is_short(a) || short_support;
        t.check(bound && q == is_quantum_root_by_pairing(rs, a) && q == by_class, || {
            format!("root {:?}: length test={q} pairing test={} class={by_class}", rs.root(a).to_vec(rs.rank()), is_quantum_root_by_pairing(rs, a))
        });
    }
    Ok(t)
}

fn adm_lambdas(rs: &RootSystem) -> Vec<IVec> {
    let mut out: Vec<IVec> = (0..rs.rank()).map(IVec::unit).collect();
    for c in 0..rs.components().len() {
        out.push(rs.coroot_pairings(rs.theta(c)));
    }
    out.sort();
    out.dedup();
    out
}

/// Shrunken element in `Perm(lam) \ Adm(lam)` built from a failing pair.
pub fn perm_not_adm_witness(rs: &RootSystem, w1: WeylElt, w2: WeylElt) -> (ExtAffElt, IVec) {
    let nu = IVec::from_slice(&vec![20; rs.rank()]);
    let c = sup_fundamental(rs, w1, w2, true, AffSubset::EMPTY).ceil();
    let lam = nu + rs.coroot_to_pairings(&c);
    (ExtAffElt::new(rs.mul(w1, rs.inv(w2)), rs.act_cw(w2, &nu)), lam)
}

fn adm_perm(ctx: &Ctx<'_>) -> Result<(Tally, Value)> {
    let rs = ctx.rs;
    let lams = adm_lambdas(rs);
    let n = rs.weyl_order() as u64;
    ctx.plan(n * n + (ctx.ball.len() * lams.len()) as u64)?;
    let (equal, witness) = adm_eq_perm_type_check(rs);
    let mut t = Tally { cases: n * n, bad: Vec::new() };
    let mut details = json!({ "adm_eq_perm": equal });
    if let Some((w1, w2)) = witness {
        let (x, lam) = perm_not_adm_witness(rs, w1, w2);
        let perm = in_permissible(rs, &x, &lam)?;
        let perm_def = in_permissible_by_definition(rs, &x, &lam)?;
        let adm = in_admissible(rs, &x, &lam)?;
        let adm_oracle = in_admissible_oracle(rs, &x, &lam);
        t.check(perm && perm_def && !adm && !adm_oracle, || {
            format!("witness {}: perm={perm} perm_def={perm_def} adm={adm} adm_oracle={adm_oracle}", ctx.fe(&x))
        });
        details["witness"] = json!({
            "w1": weyl_json(rs, w1),
            "w2": weyl_json(rs, w2),
            "element": element_json(rs, &x),
            "lambda": lam.to_vec(rs.rank()),
            "permissible": perm,
            "admissible": adm,
        });
    }
    let parts = map_items(ctx.exec, &ctx.ball, |xi| {
        let mut t = Tally::default();
        for lam in &lams {
            let a = in_admissible(rs, &xi.x, lam).expect("dominant");
            let ao = in_admissible_oracle(rs, &xi.x, lam);
            let p = in_permissible(rs, &xi.x, lam).expect("dominant");
            let pd = in_permissible_by_definition(rs, &xi.x, lam).expect("dominant");
            t.check(a == ao && p == pd && (!a || p), || {
                format!("{} in {:?}: adm={a} oracle={ao} perm={p} perm_def={pd}", ctx.fe(&xi.x), lam.to_vec(rs.rank()))
            });
        }
        t
    });
    let mut all = Tally::merge(parts);
    all.cases += t.cases;
    t.bad.extend(all.bad);
    all.bad = t.bad;
    Ok((all, details))
}

fn cover_suite(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let nw = rs.weyl_order() as u64;
    ctx.plan(ctx.ball.len() as u64 + nw * nw)?;
    let parts = map_items(ctx.exec, &ctx.ball, |xi| {
        let mut got: Vec<ExtAffElt> = covers(rs, &xi.x).into_iter().map(|p| p.0).collect();
        got.dedup();
        let want = covers_oracle(rs, &xi.x);
        let mut t = Tally::default();
        t.check(got == want, || format!("covers of {}: {} clause-built vs {} oracle", ctx.fe(&xi.x), got.len(), want.len()));
        t
    });
    let mut t = Tally::merge(parts);
    // Superregular regime: covers correspond to QBG edges into v and out of w v.
    let o = rs.qbg0();
    let nu = IVec::from_slice(&(0..rs.rank() as i32).map(|i| 2 * ctx.ball.len().max(4) as i32 + i).collect::<Vec<_>>());
    let ws: Vec<WeylElt> = rs.weyl_elements().collect();
    let parts = map_items(ctx.exec, &ws, |&w| {
        let mut t = Tally::default();
        for u in rs.weyl_elements() {
            let x = ExtAffElt::new(w, rs.act_cw(u, &nu));
            let lp = affine::length_positive_set(rs, &x);
            let v = lp[0];
            let expect = o.edges().iter().filter(|e| e.to == v).count() + o.out_edges(rs.mul(w, v)).count();
            let mut got: Vec<ExtAffElt> = covers(rs, &x).into_iter().map(|p| p.0).collect();
            got.dedup();
            t.check(lp.len() == 1 && got.len() == expect, || {
                format!("superregular {}: {} covers, {} QBG edges", ctx.fe(&x), got.len(), expect)
            });
        }
        t
    });
    t.cases += parts.iter().map(|p| p.cases).sum::<u64>();
    t.bad.extend(parts.into_iter().flat_map(|p| p.bad));
    Ok(t)
}

fn generic_actions(ctx: &Ctx<'_>) -> Result<Tally> {
    pairs_plan(ctx)?;
    let rs = ctx.rs;
    let parts = map_items(ctx.exec, &ctx.ball, |a| {
        let mut t = Tally::default();
        for u in rs.weyl_elements() {
            let r = rho_lp(rs, &a.x, &a.lp, u);
            let w = rho_via_word(rs, &a.x, u);
            t.check(r.as_ref() == Ok(&w), || format!("rho_{}({:?}): argmin={r:?} word={w:?}", ctx.fe(&a.x), rs.word(u)));
        }
        for b in &ctx.ball {
            let p = demazure_closed_lp(rs, &a.x, &b.x, &a.lp, &b.lp, a.len + b.len).product;
            let lp_p = affine::length_positive_set(rs, &p);
            let image: BTreeSet<WeylElt> = a.lp.iter().map(|&v| rho_lp(rs, &b.x, &b.lp, v).expect("unique")).collect();
            let lp_set: BTreeSet<WeylElt> = lp_p.iter().copied().collect();
            let chain = rs.weyl_elements().all(|u| {
                let r1 = rho_lp(rs, &a.x, &a.lp, u).expect("unique");
                rho_lp(rs, &p, &lp_p, u).ok() == rho_lp(rs, &b.x, &b.lp, r1).ok()
            });
            t.check(image == lp_set && chain, || {
                format!("{} * {}: LP image={} chaining={chain}", ctx.fe(&a.x), ctx.fe(&b.x), image == lp_set)
            });
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn newton_suite(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let mut sigmas = vec![SigmaAut::identity(rs)];
    if let Ok(f) = SigmaAut::flip(rs) {
        sigmas.push(f);
    }
    ctx.plan((ctx.ball.len() * sigmas.len()) as u64)?;
    let o = rs.qbg0();
    let parts = map_items(ctx.exec, &ctx.ball, |xi| {
        let mut t = Tally::default();
        for sig in &sigmas {
            let x = &xi.x;
            let res = (|| -> Result<bool> {
                let s = x_infinity(rs, x, sig)?;
                let mut ok = is_fundamental(rs, &s.x_inf, sig)?;
                let via_inf = newton_point(rs, &s.x_inf, sig)?;
                let oracle = generic_newton_point_oracle(rs, x, sig)?;
                ok &= via_inf == oracle;
                for &v in &s.stable_lp {
                    ok &= generic_newton_point_for(rs, x, &xi.lp, sig, v)? == oracle;
                    let r = twisted_rho(rs, x, &xi.lp, sig, v);
                    let d = o.d(v, sig.weyl(rs.mul(x.w, r)));
                    ok &= length(rs, &s.x_inf) + d == xi.len;
                }
                Ok(ok)
            })();
            t.check(matches!(res, Ok(true)), || format!("{} sigma={:?}: {res:?}", ctx.fe(x), sig.perm()));
        }
        t
    });
    Ok(Tally::merge(parts))
}

fn semi_affine(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let regs = AffSubset::all_regular(rs);
    let n = rs.weyl_order() as u64;
    ctx.plan(regs.len() as u64 * (n * n * n + n * n * rs.n_roots() as u64) + (regs.len() * regs.len()) as u64 * n * n)?;
    let ws: Vec<WeylElt> = rs.weyl_elements().collect();
    let leq = |a: &IVec, b: &IVec| rs.coroot_leq(a, b, 0);
    let type_a = rs.components().iter().all(|c| c.kind == 'A');
    let mut parts = map_items(ctx.exec, &regs, |&jj| {
        let s = rs.semi_affine(jj).expect("regular");
        let js = format_aff_subset(rs, &jj);
        let mut t = Tally::default();
        for &a in &ws {
            for &b in &ws {
                let w = s.wt(a, b);
                for &c in &ws {
                    t.check(leq(&s.wt(a, c), &(w + s.wt(b, c))), || format!("J={js} triangle {:?} {:?} {:?}", rs.word(a), rs.word(b), rs.word(c)));
                }
                for r in 0..rs.n_roots() {
                    let sr = rs.reflection(r);
                    if s.in_phi_j(r) {
                        let cor = rs.coroot(r);
                        let k = s.chi(rs, r);
                        let ok = s.wt(rs.mul(sr, a), b) == w + rs.act_coroot(rs.inv(a), &cor) * k
                            && s.wt(a, rs.mul(sr, b)) == w - rs.act_coroot(rs.inv(b), &cor) * k;
                        t.check(ok, || format!("J={js} shift {:?} {:?} root {r}", rs.word(a), rs.word(b)));
                    }
                    if rs.is_pos(r) {
                        let cor = rs.coroot(r);
                        let c1 = s.chi(rs, rs.act_root(a, r));
                        let c2 = s.chi(rs, rs.neg(rs.act_root(b, r)));
                        let ok = leq(&s.wt(rs.mul(a, sr), b), &(w + cor * c1)) && leq(&s.wt(a, rs.mul(b, sr)), &(w + cor * c2));
                        t.check(ok, || format!("J={js} estimate {:?} {:?} root {r}", rs.word(a), rs.word(b)));
                    }
                }
                let simple = (0..rs.n_roots())
                    .filter(|&r| s.is_pos_j(r))
                    .all(|r| rs.is_pos(rs.act_root(rs.inv(a), r)) || !rs.is_pos(rs.act_root(rs.inv(b), r)));
                if simple {
                    t.check(w == rs.qbg0().wt(a, b), || format!("J={js} simplification {:?} {:?}", rs.word(a), rs.word(b)));
                }
                if type_a {
                    let cf = sup_fundamental(rs, a, b, false, jj).to_ivec();
                    t.check(cf == Some(w), || format!("J={js} type A closed form {:?} {:?}", rs.word(a), rs.word(b)));
                }
            }
        }
        for &r2 in &regs {
            let s2 = rs.semi_affine(r2).expect("regular");
            let si = rs.semi_affine(jj.intersect(&r2)).expect("regular");
            for &a in &ws {
                for &b in &ws {
                    let (x, y) = (s.wt(a, b), s2.wt(a, b));
                    let mut m = IVec::ZERO;
                    for i in 0..rs.rank() {
                        m.0[i] = x.0[i].max(y.0[i]);
                    }
                    t.check(si.wt(a, b) == m, || format!("supremum J={js} R={} {:?} {:?}", format_aff_subset(rs, &r2), rs.word(a), rs.word(b)));
                }
            }
        }
        t
    });
    if type_a {
        let o = rs.qbg0();
        let mut t = Tally::default();
        for &a in &ws {
            for &b in &ws {
                let cf = sup_fundamental(rs, a, b, false, AffSubset::EMPTY).to_ivec();
                t.check(cf == Some(o.wt(a, b)), || format!("type A closed form {:?} {:?}", rs.word(a), rs.word(b)));
            }
        }
        parts.push(t);
    }
    Ok(Tally::merge(parts))
}

fn deodhar(ctx: &Ctx<'_>) -> Result<Tally> {
    let rs = ctx.rs;
    let regs = AffSubset::all_regular(rs);
    let n = ctx.ball.len() as u64;
    ctx.plan((regs.len() * regs.len()) as u64 * n * n)?;
    let lr: Vec<(AffSubset, AffSubset)> = regs.iter().flat_map(|&l| regs.iter().map(move |&r| (l, r))).collect();
    let parts = map_items(ctx.exec, &lr, |&(l, r)| {
        let (sl, sr) = (rs.semi_affine(l).expect("regular"), rs.semi_affine(r).expect("regular"));
        let mins: Vec<ExtAffElt> = ctx.ball.iter().map(|e| double_coset_min(rs, &e.x, l, r).expect("regular")).collect();
        let mut t = Tally::default();
        for (i, a) in ctx.ball.iter().enumerate() {
            let v = positive_chamber(rs, &a.x, &sl, &sr).expect("a positive chamber exists");
            for (j, b) in ctx.ball.iter().enumerate() {
                let got = coset_bruhat_leq(rs, &a.x, &b.x, l, r, v, &[0]);
                let want = bruhat_leq_oracle(rs, &mins[i], &mins[j]);
                t.check(got == Ok(want), || {
                    format!(
                        "L={} R={} {} <= {}: criterion={got:?} oracle={want}",
                        format_aff_subset(rs, &l),
                        format_aff_subset(rs, &r),
                        ctx.fe(&a.x),
                        ctx.fe(&b.x)
                    )
                });
            }
        }
        t
    });
    Ok(Tally::merge(parts))
}
