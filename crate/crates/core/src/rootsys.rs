//! Reduced crystallographic root systems, their Weyl groups, coweights and the
//! dominance order.
//!
//! Conventions: `C[i][j] = <a_i^vee, a_j>` with Bourbaki numbering. Roots are
//! stored in simple-root coordinates, coroots in simple-coroot coordinates and
//! coweights by their pairings with the simple roots.
//!
//! | type | short/long simple roots | `C[n-1][n]` | `C[n][n-1]` |
//! |------|-------------------------|-------------|-------------|
//! | B_n  | a_n short               | -1          | -2          |
//! | C_n  | a_n long                | -2          | -1          |
//! | F4   | a_3, a_4 short          | C[2][3]=-1  | C[3][2]=-2  |
//! | G2   | a_1 short               | C[1][2]=-3  | C[2][1]=-1  |

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::qbg::QbgOracle;

pub const MAX_RANK: usize = 8;

/// Default bound on the Weyl group order. Covers every type of rank at most 4.
pub const DEFAULT_WEYL_BOUND: usize = 2048;

/// Integer vector with a fixed capacity; entries past the rank are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IVec(pub [i32; MAX_RANK]);

impl IVec {
    pub const ZERO: IVec = IVec([0; MAX_RANK]);

    pub fn unit(i: usize) -> IVec {
        let mut v = IVec::ZERO;
        v.0[i] = 1;
        v
    }

    pub fn from_slice(s: &[i32]) -> IVec {
        let mut v = IVec::ZERO;
        v.0[..s.len()].copy_from_slice(s);
        v
    }

    pub fn dot(&self, o: &IVec) -> i32 {
        let mut s = 0;
        for i in 0..MAX_RANK {
            s += self.0[i] * o.0[i];
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_vec(&self, n: usize) -> Vec<i32> {
        self.0[..n].to_vec()
    }

    pub fn sum(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl fmt::Debug for IVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = MAX_RANK - self.0.iter().rev().take_while(|&&c| c == 0).count();
        write!(f, "{:?}", &self.0[..n])
    }
}

impl Add for IVec {
    type Output = IVec;
    fn add(mut self, o: IVec) -> IVec {
        self += o;
        self
    }
}

impl AddAssign for IVec {
    fn add_assign(&mut self, o: IVec) {
        for i in 0..MAX_RANK {
            self.0[i] += o.0[i];
        }
    }
}

impl Sub for IVec {
    type Output = IVec;
    fn sub(mut self, o: IVec) -> IVec {
        self -= o;
        self
    }
}

impl SubAssign for IVec {
    fn sub_assign(&mut self, o: IVec) {
        for i in 0..MAX_RANK {
            self.0[i] -= o.0[i];
        }
    }
}

impl Neg for IVec {
    type Output = IVec;
    fn neg(self) -> IVec {
        IVec(self.0.map(|c| -c))
    }
}

impl Mul<i32> for IVec {
    type Output = IVec;
    fn mul(self, k: i32) -> IVec {
        IVec(self.0.map(|c| c * k))
    }
}

pub type Q = Ratio<i64>;

/// Rational vector, used for rational coweights (pairings) and coroot coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVec(pub [Q; MAX_RANK]);

impl Default for QVec {
    fn default() -> Self {
        QVec::ZERO
    }
}

impl QVec {
    pub const ZERO: QVec = QVec([Q::new_raw(0, 1); MAX_RANK]);

    pub fn from_ivec(v: &IVec) -> QVec {
        QVec(v.0.map(|c| Q::from_integer(c as i64)))
    }

    pub fn scale(&self, k: Q) -> QVec {
        QVec(self.0.map(|c| c * k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn to_ivec(&self) -> Option<IVec> {
        let mut out = IVec::ZERO;
        for i in 0..MAX_RANK {
            if !self.0[i].is_integer() {
                return None;
            }
            out.0[i] = *self.0[i].numer() as i32;
        }
        Some(out)
    }

    pub fn max(&self, o: &QVec) -> QVec {
        let mut r = *self;
        for i in 0..MAX_RANK {
            if o.0[i] > r.0[i] {
                r.0[i] = o.0[i];
            }
        }
        r
    }

    pub fn ceil(&self) -> IVec {
        IVec(self.0.map(|c| *c.ceil().numer() as i32))
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = MAX_RANK - self.0.iter().rev().take_while(|c| c.is_zero()).count();
        let parts: Vec<String> = self.0[..n].iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for QVec {
    type Output = QVec;
    fn add(self, o: QVec) -> QVec {
        let mut r = self;
        for i in 0..MAX_RANK {
            r.0[i] += o.0[i];
        }
        r
    }
}

impl Sub for QVec {
    type Output = QVec;
    fn sub(self, o: QVec) -> QVec {
        let mut r = self;
        for i in 0..MAX_RANK {
            r.0[i] -= o.0[i];
        }
        r
    }
}

impl Neg for QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.map(|c| -c))
    }
}

/// Finite Weyl group element: an index into the tables of its root system.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct WeylElt(pub u32);

impl WeylElt {
    pub const ID: WeylElt = WeylElt(0);

    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Bitmask over the finite simple roots.
pub type SimpleSet = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub kind: char,
    pub rank: usize,
    /// Global simple indices, in Bourbaki order.
    pub nodes: Vec<usize>,
    /// Root index of the highest root.
    pub theta: usize,
}

pub struct RootSystem {
    name: String,
    n: usize,
    cartan: Vec<Vec<i32>>,
    components: Vec<Component>,
    roots: Vec<IVec>,
    coroots: Vec<IVec>,
    /// `<b^vee, a_i>` for every root b.
    coroot_pairings: Vec<IVec>,
    npos: usize,
    index: HashMap<IVec, usize>,
    simple: Vec<usize>,
    two_rho: IVec,
    det: i64,
    /// `det * (C^T)^{-1}`: maps pairings to scaled coroot coordinates.
    adj: [IVec; MAX_RANK],

    nw: usize,
    perm: Vec<u16>,
    lens: Vec<u32>,
    words: Vec<Vec<u8>>,
    mult: Vec<u32>,
    inv: Vec<u32>,
    sref: Vec<u32>,
    refl: Vec<u32>,
    w0: u32,
    keys: HashMap<Vec<u16>, u32>,
    /// Rows `i` of the coweight action: simple coordinates of `w^{-1} a_i`.
    act_cw: Vec<IVec>,
    /// Rows of the coroot-coordinate action.
    act_cr: Vec<IVec>,

    pub(crate) qbg0: OnceLock<Arc<QbgOracle>>,
    pub(crate) qbg_cache: Mutex<HashMap<SimpleSet, Arc<QbgOracle>>>,
    pub(crate) semi_cache: Mutex<HashMap<crate::semiaffine::AffSubset, Arc<crate::semiaffine::SemiAffine>>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.name)
    }
}

fn irreducible_cartan(kind: char, n: usize) -> Option<Vec<Vec<i32>>> {
    let ok = match kind {
        'A' => n >= 1,
        'B' | 'C' => n >= 2,
        'D' => n >= 4,
        'E' => (6..=8).contains(&n),
        'F' => n == 4,
        'G' => n == 2,
        _ => false,
    };
    if !ok {
        return None;
    }
    let mut c = vec![vec![0i32; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        'A' | 'B' | 'C' | 'F' | 'G' => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        'D' => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        _ => unreachable!(),
    }
    match kind {
        'B' => c[n - 1][n - 2] = -2,
        'C' => c[n - 2][n - 1] = -2,
        'F' => c[2][1] = -2,
        'G' => c[0][1] = -3,
        _ => {}
    }
    Some(c)
}

fn expected_root_count(kind: char, n: usize) -> usize {
    match kind {
        'A' => n * (n + 1),
        'B' | 'C' => 2 * n * n,
        'D' => 2 * n * (n - 1),
        'E' => [72, 126, 240][n - 6],
        'F' => 48,
        'G' => 12,
        _ => 0,
    }
}

fn parse_type(name: &str) -> Result<Vec<(char, usize)>> {
    let bad = || Error::UnknownType(name.to_string());
    let mut out = Vec::new();
    for part in name.split(['x', 'X', '×']) {
        let part = part.trim();
        let mut chars = part.chars();
        let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        irreducible_cartan(kind, n).ok_or_else(bad)?;
        out.push((kind, n));
    }
    Ok(out)
}

/// Determinant and `det * M^{-1}` by exact rational elimination.
fn scaled_inverse(m: &[Vec<i32>]) -> Result<(i64, Vec<Vec<i64>>)> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = m[i].iter().map(|&x| Q::from_integer(x as i64)).collect();
            row.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            row
        })
        .collect();
    let mut det = Q::from_integer(1);
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col];
        det *= pv;
        for x in a[col].iter_mut() {
            *x /= pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let t = a[col][c] * f;
                    a[r][c] -= t;
                }
            }
        }
    }
    let d = det.to_integer();
    let inv = (0..n)
        .map(|i| (0..n).map(|j| (a[i][n + j] * Q::from_integer(d)).to_integer()).collect())
        .collect();
    Ok((d, inv))
}

impl RootSystem {
    /// Builds a root system from a type string such as `"A2"` or `"B3xA1"`.
    pub fn build(name: &str) -> Result<RootSystem> {
        Self::build_with_bound(name, DEFAULT_WEYL_BOUND)
    }

    pub fn build_with_bound(name: &str, weyl_bound: usize) -> Result<RootSystem> {
        let parts = parse_type(name)?;
        let n: usize = parts.iter().map(|p| p.1).sum();
        if n > MAX_RANK {
            return Err(Error::BudgetExceeded(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let mut cartan = vec![vec![0i32; n]; n];
        let mut comp_nodes = Vec::new();
        let mut off = 0;
        for &(kind, r) in &parts {
            let c = irreducible_cartan(kind, r).unwrap();
            for i in 0..r {
                for j in 0..r {
                    cartan[off + i][off + j] = c[i][j];
                }
            }
            comp_nodes.push((kind, r, (off..off + r).collect::<Vec<_>>()));
            off += r;
        }
        let name = parts.iter().map(|(k, r)| format!("{k}{r}")).collect::<Vec<_>>().join("x");
        let mut rs = Self::from_cartan(name, cartan, weyl_bound)?;
        let mut comps = Vec::new();
        for (kind, r, nodes) in comp_nodes {
            let cnt = rs
                .roots
                .iter()
                .filter(|b| nodes.iter().any(|&i| b.0[i] != 0))
                .count();
            if cnt != expected_root_count(kind, r) {
                return Err(Error::UnknownType(format!("{kind}{r}: root count {cnt}")));
            }
            let theta = (0..rs.npos)
                .filter(|&b| nodes.iter().any(|&i| rs.roots[b].0[i] != 0))
                .max_by_key(|&b| (rs.roots[b].sum(), rs.roots[b]))
                .unwrap();
            comps.push(Component { kind, rank: r, nodes, theta });
        }
        rs.components = comps;
        Ok(rs)
    }

    fn from_cartan(name: String, cartan: Vec<Vec<i32>>, weyl_bound: usize) -> Result<RootSystem> {
        let n = cartan.len();
        let c = &cartan;
        // Roots and coroots together, closed under simple reflections.
        let mut found: HashMap<IVec, IVec> = HashMap::new();
        let mut queue = Vec::new();
        for i in 0..n {
            let (r, cr) = (IVec::unit(i), IVec::unit(i));
            found.insert(r, cr);
            queue.push((r, cr));
        }
        while let Some((b, bc)) = queue.pop() {
            for i in 0..n {
                let p: i32 = (0..n).map(|j| b.0[j] * c[i][j]).sum();
                let q: i32 = (0..n).map(|j| bc.0[j] * c[j][i]).sum();
                let (mut nb, mut nbc) = (b, bc);
                nb.0[i] -= p;
                nbc.0[i] -= q;
                if let Some(prev) = found.get(&nb) {
                    if *prev != nbc {
                        return Err(Error::UnknownType(name));
                    }
                } else {
                    if found.len() > 1000 {
                        return Err(Error::UnknownType(name));
                    }
                    found.insert(nb, nbc);
                    queue.push((nb, nbc));
                }
            }
        }
        let mut pos: Vec<(IVec, IVec)> = found
            .iter()
            .filter(|(b, _)| b.0.iter().all(|&x| x >= 0))
            .map(|(b, bc)| (*b, *bc))
            .collect();
        if pos.len() * 2 != found.len() {
            return Err(Error::UnknownType(name));
        }
        pos.sort_by_key(|(b, _)| (b.sum(), std::cmp::Reverse(*b)));
        let npos = pos.len();
        let mut roots: Vec<IVec> = pos.iter().map(|p| p.0).collect();
        let mut coroots: Vec<IVec> = pos.iter().map(|p| p.1).collect();
        roots.extend(pos.iter().map(|p| -p.0));
        coroots.extend(pos.iter().map(|p| -p.1));
        let index: HashMap<IVec, usize> = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let coroot_pairings: Vec<IVec> = coroots
            .iter()
            .map(|bc| {
                let mut p = IVec::ZERO;
                for i in 0..n {
                    p.0[i] = (0..n).map(|j| bc.0[j] * c[j][i]).sum();
                }
                p
            })
            .collect();
        for r in 0..roots.len() {
            if coroot_pairings[r].dot(&roots[r]) != 2 {
                return Err(Error::UnknownType(name));
            }
        }
        let simple: Vec<usize> = (0..n).map(|i| index[&IVec::unit(i)]).collect();
        let mut two_rho = IVec::ZERO;
        for r in &roots[..npos] {
            two_rho += *r;
        }
        let ct: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect();
        let (det, inv) = scaled_inverse(&ct)?;
        let mut adj = [IVec::ZERO; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                adj[i].0[j] = inv[i][j] as i32;
            }
        }

        let mut rs = RootSystem {
            name,
            n,
            cartan,
            components: Vec::new(),
            roots,
            coroots,
            coroot_pairings,
            npos,
            index,
            simple,
            two_rho,
            det,
            adj,
            nw: 0,
            perm: Vec::new(),
            lens: Vec::new(),
            words: Vec::new(),
            mult: Vec::new(),
            inv: Vec::new(),
            sref: Vec::new(),
            refl: Vec::new(),
            w0: 0,
            keys: HashMap::new(),
            act_cw: Vec::new(),
            act_cr: Vec::new(),
            qbg0: OnceLock::new(),
            qbg_cache: Mutex::new(HashMap::new()),
            semi_cache: Mutex::new(HashMap::new()),
        };
        rs.build_weyl(weyl_bound)?;
        Ok(rs)
    }

    fn reflect_root(&self, a: usize, b: usize) -> usize {
        let p = self.coroot_pairings[a].dot(&self.roots[b]);
        self.index[&(self.roots[b] - self.roots[a] * p)]
    }

    fn build_weyl(&mut self, bound: usize) -> Result<()> {
        let nr = self.roots.len();
        let n = self.n;
        let sperm: Vec<Vec<u16>> = (0..n)
            .map(|i| (0..nr).map(|b| self.reflect_root(self.simple[i], b) as u16).collect())
            .collect();
        let key_of = |p: &[u16], simple: &[usize]| -> Vec<u16> { simple.iter().map(|&s| p[s]).collect() };
        let mut perms: Vec<Vec<u16>> = vec![(0..nr as u16).collect()];
        let mut keys = HashMap::new();
        keys.insert(key_of(&perms[0], &self.simple), 0u32);
        let mut head = 0;
        while head < perms.len() {
            for i in 0..n {
                let np: Vec<u16> = (0..nr).map(|b| perms[head][sperm[i][b] as usize]).collect();
                let k = key_of(&np, &self.simple);
                if !keys.contains_key(&k) {
                    if perms.len() >= bound {
                        return Err(Error::BudgetExceeded(format!(
                            "Weyl group of {} exceeds {bound} elements",
                            self.name
                        )));
                    }
                    keys.insert(k, perms.len() as u32);
                    perms.push(np);
                }
            }
            head += 1;
        }
        let nw = perms.len();
        self.nw = nw;
        self.perm = perms.iter().flatten().copied().collect();
        self.keys = keys;
        self.lens = (0..nw)
            .map(|w| (0..self.npos).filter(|&b| perms[w][b] as usize >= self.npos).count() as u32)
            .collect();
        let mut mult = vec![0u32; nw * nw];
        for a in 0..nw {
            for b in 0..nw {
                let k: Vec<u16> =
                    self.simple.iter().map(|&s| perms[a][perms[b][s] as usize]).collect();
                mult[a * nw + b] = self.keys[&k];
            }
        }
        self.mult = mult;
        self.inv = (0..nw)
            .map(|a| (0..nw).find(|&b| self.mult[a * nw + b] == 0).unwrap() as u32)
            .collect();
        self.sref = (0..n).map(|i| self.keys[&key_of(&sperm[i], &self.simple)]).collect();
        self.w0 = (0..nw).max_by_key(|&w| self.lens[w]).unwrap() as u32;
        self.refl = (0..nr)
            .map(|a| {
                let k: Vec<u16> = self.simple.iter().map(|&s| self.reflect_root(a, s) as u16).collect();
                self.keys[&k]
            })
            .collect();
        // Canonical reduced words: strip the smallest left descent first.
        let mut order: Vec<usize> = (0..nw).collect();
        order.sort_by_key(|&w| self.lens[w]);
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); nw];
        for &w in &order {
            if w == 0 {
                continue;
            }
            let wi = self.inv[w] as usize;
            let i = (0..n)
                .find(|&i| perms[wi][self.simple[i]] as usize >= self.npos)
                .unwrap();
            let rest = self.mult[self.sref[i] as usize * nw + w] as usize;
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[rest]);
            words[w] = word;
        }
        self.words = words;
        let mut act_cw = Vec::with_capacity(nw * n);
        let mut act_cr = Vec::with_capacity(nw * n);
        for w in 0..nw {
            let wi = self.inv[w] as usize;
            for i in 0..n {
                act_cw.push(self.roots[perms[wi][self.simple[i]] as usize]);
                let mut row = IVec::ZERO;
                for j in 0..n {
                    row.0[j] = self.coroots[perms[w][self.simple[j]] as usize].0[i];
                }
                act_cr.push(row);
            }
        }
        self.act_cw = act_cw;
        self.act_cr = act_cr;
        Ok(())
    }

    // ---- root data ----

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn rank(&self) -> usize {
        self.n
    }
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }
    pub fn components(&self) -> &[Component] {
        &self.components
    }
    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }
    pub fn n_pos(&self) -> usize {
        self.npos
    }
    /// Positive roots are indices `0..n_pos()`, sorted by height.
    pub fn pos_roots(&self) -> std::ops::Range<usize> {
        0..self.npos
    }
    pub fn root(&self, r: usize) -> IVec {
        self.roots[r]
    }
    pub fn coroot(&self, r: usize) -> IVec {
        self.coroots[r]
    }
    pub fn coroot_pairings(&self, r: usize) -> IVec {
        self.coroot_pairings[r]
    }
    #[inline]
    pub fn is_pos(&self, r: usize) -> bool {
        r < self.npos
    }
    /// 1 for positive roots, 0 for negative ones.
    #[inline]
    pub fn ind(&self, r: usize) -> i32 {
        (r < self.npos) as i32
    }
    #[inline]
    pub fn neg(&self, r: usize) -> usize {
        if r < self.npos {
            r + self.npos
        } else {
            r - self.npos
        }
    }
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple[i]
    }
    pub fn root_index(&self, coords: &IVec) -> Option<usize> {
        self.index.get(coords).copied()
    }
    pub fn two_rho(&self) -> IVec {
        self.two_rho
    }
    pub fn theta(&self, comp: usize) -> usize {
        self.components[comp].theta
    }
    /// Component containing a root.
    pub fn component_of_root(&self, r: usize) -> usize {
        let b = self.roots[r];
        self.components
            .iter()
            .position(|c| c.nodes.iter().any(|&i| b.0[i] != 0))
            .unwrap()
    }
    pub fn height(&self, r: usize) -> i32 {
        self.roots[r].sum()
    }

    /// `<b^vee, a>` for root indices.
    #[inline]
    pub fn pair_roots(&self, coroot_of: usize, root: usize) -> i32 {
        self.coroot_pairings[coroot_of].dot(&self.roots[root])
    }
    /// `<mu, a>` for a coweight given by pairings.
    #[inline]
    pub fn pair(&self, mu: &IVec, r: usize) -> i32 {
        self.roots[r].dot(mu)
    }
    pub fn pair_q(&self, mu: &QVec, r: usize) -> Q {
        let mut s = Q::zero();
        for i in 0..self.n {
            s += mu.0[i] * Q::from_integer(self.roots[r].0[i] as i64);
        }
        s
    }
    /// `<mu, 2 rho>`.
    pub fn pair_two_rho(&self, mu: &IVec) -> i32 {
        self.two_rho.dot(mu)
    }
    /// `<a, 2 rho>` for a vector in coroot coordinates.
    pub fn coroot_two_rho(&self, a: &IVec) -> i32 {
        2 * a.sum()
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    /// Pairings of a vector given in coroot coordinates.
    pub fn coroot_to_pairings(&self, a: &IVec) -> IVec {
        let mut p = IVec::ZERO;
        for i in 0..self.n {
            let mut s = 0;
            for j in 0..self.n {
                s += a.0[j] * self.cartan[j][i];
            }
            p.0[i] = s;
        }
        p
    }

    /// `det * (coroot coordinates)` of a coweight given by pairings.
    pub fn scaled_coroot_coords(&self, p: &IVec) -> IVec {
        let mut a = IVec::ZERO;
        for i in 0..self.n {
            a.0[i] = self.adj[i].dot(p);
        }
        a
    }

    /// Coroot coordinates of an integral coweight, if it lies in the coroot lattice.
    pub fn coroot_coords(&self, p: &IVec) -> Option<IVec> {
        let s = self.scaled_coroot_coords(p);
        let d = self.det as i32;
        if s.0.iter().all(|&c| c % d == 0) {
            Some(IVec(s.0.map(|c| c / d)))
        } else {
            None
        }
    }

    pub fn coroot_coords_q(&self, p: &QVec) -> QVec {
        let mut a = QVec::ZERO;
        let d = Q::from_integer(self.det);
        for i in 0..self.n {
            let mut s = Q::zero();
            for j in 0..self.n {
                s += Q::from_integer(self.adj[i].0[j] as i64) * p.0[j];
            }
            a.0[i] = s / d;
        }
        a
    }

    pub fn coroot_to_pairings_q(&self, a: &QVec) -> QVec {
        let mut p = QVec::ZERO;
        for i in 0..self.n {
            let mut s = Q::zero();
            for j in 0..self.n {
                s += a.0[j] * Q::from_integer(self.cartan[j][i] as i64);
            }
            p.0[i] = s;
        }
        p
    }

    pub fn in_coroot_lattice(&self, p: &IVec) -> bool {
        self.coroot_coords(p).is_some()
    }

    /// Dominance order on integral coweights, modulo the coroots of `j`.
    pub fn dominance_leq(&self, mu1: &IVec, mu2: &IVec, j: SimpleSet) -> bool {
        let s = self.scaled_coroot_coords(&(*mu2 - *mu1));
        let d = self.det as i32;
        (0..self.n).all(|i| s.0[i] % d == 0 && (j >> i & 1 == 1 || s.0[i] >= 0))
    }

    /// Dominance order on vectors given in coroot coordinates, modulo `j`.
    #[inline]
    pub fn coroot_leq(&self, a: &IVec, b: &IVec, j: SimpleSet) -> bool {
        (0..self.n).all(|i| j >> i & 1 == 1 || a.0[i] <= b.0[i])
    }

    /// Dominance order on rational coweights (pairings).
    pub fn dominance_leq_q(&self, mu1: &QVec, mu2: &QVec) -> bool {
        let a = self.coroot_coords_q(&(*mu2 - *mu1));
        (0..self.n).all(|i| !a.0[i].is_negative())
    }

    /// Canonical representative of a coroot-coordinate vector modulo `j`.
    pub fn mod_j(&self, a: &IVec, j: SimpleSet) -> IVec {
        let mut r = *a;
        for i in 0..self.n {
            if j >> i & 1 == 1 {
                r.0[i] = 0;
            }
        }
        r
    }

    pub fn is_dominant(&self, mu: &IVec) -> bool {
        (0..self.n).all(|i| mu.0[i] >= 0)
    }

    /// Returns `(mu_dom, v)` with `v(mu) = mu_dom` dominant.
    pub fn dominant_rep(&self, mu: &IVec) -> (IVec, WeylElt) {
        let mut m = *mu;
        let mut v = WeylElt::ID;
        while let Some(i) = (0..self.n).find(|&i| m.0[i] < 0) {
            let c = m.0[i];
            for j in 0..self.n {
                m.0[j] -= c * self.cartan[i][j];
            }
            v = self.mul(self.simple_refl(i), v);
        }
        (m, v)
    }

    pub fn dominant_rep_q(&self, mu: &QVec) -> (QVec, WeylElt) {
        let mut m = *mu;
        let mut v = WeylElt::ID;
        while let Some(i) = (0..self.n).find(|&i| m.0[i].is_negative()) {
            let c = m.0[i];
            for j in 0..self.n {
                m.0[j] -= c * Q::from_integer(self.cartan[i][j] as i64);
            }
            v = self.mul(self.simple_refl(i), v);
        }
        (m, v)
    }

    // ---- Weyl group ----

    pub fn weyl_order(&self) -> usize {
        self.nw
    }
    pub fn weyl_elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.nw as u32).map(WeylElt)
    }
    pub fn w0(&self) -> WeylElt {
        WeylElt(self.w0)
    }
    #[inline]
    pub fn len(&self, w: WeylElt) -> u32 {
        self.lens[w.idx()]
    }
    /// Canonical reduced word, 0-based simple indices.
    pub fn word(&self, w: WeylElt) -> &[u8] {
        &self.words[w.idx()]
    }
    #[inline]
    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        WeylElt(self.mult[a.idx() * self.nw + b.idx()])
    }
    #[inline]
    pub fn inv(&self, w: WeylElt) -> WeylElt {
        WeylElt(self.inv[w.idx()])
    }
    #[inline]
    pub fn simple_refl(&self, i: usize) -> WeylElt {
        WeylElt(self.sref[i])
    }
    /// The reflection `s_a` for a root index.
    #[inline]
    pub fn reflection(&self, r: usize) -> WeylElt {
        WeylElt(self.refl[r])
    }
    #[inline]
    pub fn act_root(&self, w: WeylElt, r: usize) -> usize {
        self.perm[w.idx() * self.roots.len() + r] as usize
    }
    /// Action on a coweight given by pairings.
    #[inline]
    pub fn act_cw(&self, w: WeylElt, mu: &IVec) -> IVec {
        let rows = &self.act_cw[w.idx() * self.n..(w.idx() + 1) * self.n];
        let mut out = IVec::ZERO;
        for (i, row) in rows.iter().enumerate() {
            out.0[i] = row.dot(mu);
        }
        out
    }
    /// Action on a vector in coroot coordinates.
    #[inline]
    pub fn act_coroot(&self, w: WeylElt, a: &IVec) -> IVec {
        let rows = &self.act_cr[w.idx() * self.n..(w.idx() + 1) * self.n];
        let mut out = IVec::ZERO;
        for (i, row) in rows.iter().enumerate() {
            out.0[i] = row.dot(a);
        }
        out
    }
    pub fn act_q(&self, w: WeylElt, mu: &QVec) -> QVec {
        let rows = &self.act_cw[w.idx() * self.n..(w.idx() + 1) * self.n];
        let mut out = QVec::ZERO;
        for (i, row) in rows.iter().enumerate() {
            let mut s = Q::zero();
            for j in 0..self.n {
                s += Q::from_integer(row.0[j] as i64) * mu.0[j];
            }
            out.0[i] = s;
        }
        out
    }

    /// Element from a word of 0-based simple indices.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut w = WeylElt::ID;
        for &i in word {
            if i >= self.n {
                return Err(Error::InvalidDatum(format!("simple index {} out of range", i + 1)));
            }
            w = self.mul(w, self.simple_refl(i));
        }
        Ok(w)
    }

    /// Looks up an element from the images of the simple roots.
    pub fn from_simple_images(&self, images: &[u16]) -> Option<WeylElt> {
        self.keys.get(images).map(|&w| WeylElt(w))
    }

    /// Inversion set `{a > 0 : w^{-1} a < 0}`.
    pub fn inversions(&self, w: WeylElt) -> Vec<usize> {
        let wi = self.inv(w);
        self.pos_roots().filter(|&a| !self.is_pos(self.act_root(wi, a))).collect()
    }

    pub fn in_parabolic(&self, w: WeylElt, j: SimpleSet) -> bool {
        self.word(w).iter().all(|&i| j >> i & 1 == 1)
    }

    /// Whether a root lies in the span of the simple roots of `j`.
    pub fn root_in_j(&self, r: usize, j: SimpleSet) -> bool {
        (0..self.n).all(|i| j >> i & 1 == 1 || self.roots[r].0[i] == 0)
    }

    /// Right: `w = w^J w_J` returned as `(w^J, w_J)`. Left: `w = w_J ^Jw` returned
    /// as `(w_J, ^Jw)`.
    pub fn coset_decompose(&self, w: WeylElt, j: SimpleSet, side: Side) -> (WeylElt, WeylElt) {
        let mut u = w;
        match side {
            Side::Right => {
                while let Some(i) = (0..self.n)
                    .find(|&i| j >> i & 1 == 1 && !self.is_pos(self.act_root(u, self.simple[i])))
                {
                    u = self.mul(u, self.simple_refl(i));
                }
                (u, self.mul(self.inv(u), w))
            }
            Side::Left => {
                while let Some(i) = (0..self.n).find(|&i| {
                    j >> i & 1 == 1 && !self.is_pos(self.act_root(self.inv(u), self.simple[i]))
                }) {
                    u = self.mul(self.simple_refl(i), u);
                }
                (self.mul(w, self.inv(u)), u)
            }
        }
    }

    /// Minimal representative of `w W_J`.
    pub fn min_rep(&self, w: WeylElt, j: SimpleSet) -> WeylElt {
        if j == 0 {
            w
        } else {
            self.coset_decompose(w, j, Side::Right).0
        }
    }

    pub fn is_min_rep(&self, w: WeylElt, j: SimpleSet) -> bool {
        (0..self.n).all(|i| j >> i & 1 == 0 || self.is_pos(self.act_root(w, self.simple[i])))
    }

    pub fn full_set(&self) -> SimpleSet {
        ((1u64 << self.n) - 1) as SimpleSet
    }

    /// Half the squared length of a root, normalized so that the shortest
    /// simple root of each component has value 1.
    pub fn root_norm(&self, r: usize) -> Q {
        let n = self.n;
        let mut d: Vec<Option<Q>> = vec![None; n];
        for c in &self.components {
            let mut stack = vec![c.nodes[0]];
            d[c.nodes[0]] = Some(Q::from_integer(1));
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if j != i && self.cartan[i][j] != 0 && d[j].is_none() {
                        let di = d[i].unwrap();
                        d[j] = Some(di * Q::new(self.cartan[i][j] as i64, self.cartan[j][i] as i64));
                        stack.push(j);
                    }
                }
            }
            let m = c.nodes.iter().map(|&i| d[i].unwrap()).min().unwrap();
            for &i in &c.nodes {
                d[i] = Some(d[i].unwrap() / m);
            }
        }
        let (b, bc) = (self.roots[r], self.coroots[r]);
        let i = (0..n).find(|&i| b.0[i] != 0).unwrap();
        d[i].unwrap() * Q::new(b.0[i] as i64, bc.0[i] as i64)
    }

    /// Whether a root is short inside its irreducible component.
    pub fn is_short(&self, r: usize) -> bool {
        let c = self.component_of_root(r);
        self.root_norm(r) < self.root_norm(self.theta(c))
    }

    /// Fundamental coweight of simple index `i`, in coroot coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> QVec {
        let mut p = QVec::ZERO;
        p.0[i] = Q::from_integer(1);
        self.coroot_coords_q(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_weyl_orders() {
        for (t, nr, nw) in [
            ("A1", 2, 2),
            ("A2", 6, 6),
            ("B2", 8, 8),
            ("G2", 12, 12),
            ("A3", 12, 24),
            ("B3", 18, 48),
            ("C3", 18, 48),
            ("D4", 24, 192),
            ("C4", 32, 384),
            ("F4", 48, 1152),
            ("B3xA1", 20, 96),
        ] {
            let rs = RootSystem::build(t).unwrap();
            assert_eq!(rs.n_roots(), nr, "{t}");
            assert_eq!(rs.weyl_order(), nw, "{t}");
        }
    }

    #[test]
    fn type_strings() {
        assert!(matches!(RootSystem::build("Q3"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::build("A"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::build("D3"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::build("E6"), Err(Error::BudgetExceeded(_))));
        assert_eq!(RootSystem::build("a1xc3").unwrap().name(), "A1xC3");
    }

    #[test]
    fn a2_data() {
        let rs = RootSystem::build("A2").unwrap();
        assert_eq!(rs.n_pos(), 3);
        assert_eq!(rs.root(rs.theta(0)), IVec::from_slice(&[1, 1]));
        let s1 = rs.simple_refl(0);
        assert_eq!(rs.act_root(s1, rs.simple_root(0)), rs.neg(rs.simple_root(0)));
        assert_eq!(rs.root(rs.act_root(s1, rs.simple_root(1))), IVec::from_slice(&[1, 1]));
        let mu = IVec::from_slice(&[3, -2]);
        assert_eq!(rs.act_cw(WeylElt::ID, &mu), mu);
    }

    #[test]
    fn b2_convention() {
        let rs = RootSystem::build("B2").unwrap();
        assert_eq!(rs.n_roots(), 8);
        let (a1, a2) = (rs.simple_root(0), rs.simple_root(1));
        assert_eq!(rs.pair_roots(a1, a2), -1);
        assert_eq!(rs.pair_roots(a2, a1), -2);
    }

    #[test]
    fn g2_theta() {
        let rs = RootSystem::build("G2").unwrap();
        let th = rs.theta(0);
        assert_eq!(rs.root(th), IVec::from_slice(&[3, 2]));
        assert_eq!(rs.coroot_two_rho(&rs.coroot(th)), 6);
        assert_eq!(rs.len(rs.reflection(th)), 5);
        // Independent inversion count of s_theta.
        let cnt = rs
            .pos_roots()
            .filter(|&b| {
                let img = rs.root(b) - rs.root(th) * rs.pair_roots(th, b);
                img.0.iter().any(|&c| c < 0)
            })
            .count();
        assert_eq!(cnt, 5);
    }

    #[test]
    fn weyl_tables_consistent() {
        for t in ["A3", "B3", "G2", "A1xB2"] {
            let rs = RootSystem::build(t).unwrap();
            let w0 = rs.w0();
            assert_eq!(rs.mul(w0, w0), WeylElt::ID);
            assert!(rs.pos_roots().all(|a| !rs.is_pos(rs.act_root(w0, a))));
            for w in rs.weyl_elements() {
                assert_eq!(rs.word(w).len() as u32, rs.len(w));
                let ws: Vec<usize> = rs.word(w).iter().map(|&i| i as usize).collect();
                assert_eq!(rs.from_word(&ws).unwrap(), w);
                assert_eq!(rs.len(rs.inv(w)), rs.len(w));
            }
            for a in rs.weyl_elements().step_by(3) {
                for b in rs.weyl_elements().step_by(2) {
                    let ab = rs.mul(a, b);
                    for r in 0..rs.n_roots() {
                        assert_eq!(rs.act_root(ab, r), rs.act_root(a, rs.act_root(b, r)));
                    }
                    let mu = IVec::from_slice(&[1, -2, 3, 0]);
                    assert_eq!(rs.act_cw(ab, &mu), rs.act_cw(a, &rs.act_cw(b, &mu)));
                    assert_eq!(rs.act_coroot(ab, &mu), rs.act_coroot(a, &rs.act_coroot(b, &mu)));
                }
            }
        }
    }

    #[test]
    fn coweight_action_matches_reflection_formula() {
        let rs = RootSystem::build("B3").unwrap();
        let mu = IVec::from_slice(&[2, -1, 3]);
        for r in rs.pos_roots() {
            // s_a(mu) = mu - <mu,a> a^vee, in pairings.
            let expect = mu - rs.coroot_to_pairings(&rs.coroot(r)) * rs.pair(&mu, r);
            assert_eq!(rs.act_cw(rs.reflection(r), &mu), expect);
            let a = rs.coroot(r);
            let img = rs.act_coroot(rs.reflection(r), &a);
            assert_eq!(img, -a);
        }
    }

    #[test]
    fn dominance() {
        let rs = RootSystem::build("A2").unwrap();
        let a1 = rs.coroot_to_pairings(&IVec::unit(0));
        let a2 = rs.coroot_to_pairings(&IVec::unit(1));
        let z = IVec::ZERO;
        assert!(rs.dominance_leq(&a1, &a1, 0));
        assert!(rs.dominance_leq(&z, &a1, 0));
        assert!(!rs.dominance_leq(&a1, &a2, 0));
        assert!(rs.dominance_leq(&a2, &z, 0b10));
        // fundamental coweights are not in the coroot lattice
        assert!(!rs.dominance_leq(&z, &IVec::unit(0), 0));
    }

    #[test]
    fn dominant_reps() {
        let rs = RootSystem::build("A2").unwrap();
        let m = -rs.coroot_to_pairings(&IVec::unit(0));
        let (d, v) = rs.dominant_rep(&m);
        assert!(rs.is_dominant(&d));
        assert_eq!(rs.act_cw(v, &m), d);
        let a1 = RootSystem::build("A1").unwrap();
        let (d, v) = a1.dominant_rep(&IVec::from_slice(&[-2]));
        assert_eq!((d, v), (IVec::from_slice(&[2]), a1.simple_refl(0)));
    }

    #[test]
    fn coset_decomposition() {
        let rs = RootSystem::build("A2").unwrap();
        let w0 = rs.w0();
        let (wj, w_j) = rs.coset_decompose(w0, 0b01, Side::Right);
        assert_eq!(wj, rs.from_word(&[0, 1]).unwrap());
        assert_eq!(w_j, rs.simple_refl(0));
        assert_eq!(rs.coset_decompose(w0, 0, Side::Right), (w0, WeylElt::ID));
        let s1 = rs.simple_refl(0);
        assert_eq!(rs.coset_decompose(s1, 0b01, Side::Right), (WeylElt::ID, s1));
        let rs = RootSystem::build("B3").unwrap();
        for j in 0..8 {
            for w in rs.weyl_elements() {
                let (a, b) = rs.coset_decompose(w, j, Side::Right);
                assert_eq!(rs.mul(a, b), w);
                assert_eq!(rs.len(a) + rs.len(b), rs.len(w));
                assert!(rs.is_min_rep(a, j) && rs.in_parabolic(b, j));
                let (c, d) = rs.coset_decompose(w, j, Side::Left);
                assert_eq!(rs.mul(c, d), w);
                assert_eq!(rs.len(c) + rs.len(d), rs.len(w));
                assert!(rs.in_parabolic(c, j));
            }
        }
    }
}
