//! Quantum Bruhat graphs `QB(W^J)`: edges, all-pairs distances and weights,
//! plus the fast weight recursion through maximal inversions.
//!
//! Weights are vectors in coroot coordinates. Modulo `J` they are normalized by
//! zeroing the coordinates indexed by `J`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{IVec, RootSystem, SimpleSet, WeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QbgEdge {
    pub from: WeylElt,
    pub to: WeylElt,
    pub kind: EdgeKind,
    pub weight: IVec,
    /// Positive root `a` with `to = (from s_a)^J`.
    pub root: usize,
}

const UNREACHED: u16 = u16::MAX;
const NOT_VERTEX: u32 = u32::MAX;

/// All-pairs data for one parabolic quotient.
#[derive(Debug)]
pub struct QbgOracle {
    j: SimpleSet,
    verts: Vec<WeylElt>,
    vidx: Vec<u32>,
    edges: Vec<QbgEdge>,
    out: Vec<Vec<u32>>,
    dist: Vec<u16>,
    wt: Vec<IVec>,
    /// Edge kind per ordered vertex pair: 0 none, 1 Bruhat, 2 quantum.
    kind: Vec<u8>,
}

impl QbgOracle {
    pub fn build(rs: &RootSystem, j: SimpleSet) -> QbgOracle {
        let verts: Vec<WeylElt> = rs.weyl_elements().filter(|&w| rs.is_min_rep(w, j)).collect();
        let nv = verts.len();
        let mut vidx = vec![NOT_VERTEX; rs.weyl_order()];
        for (i, v) in verts.iter().enumerate() {
            vidx[v.idx()] = i as u32;
        }
        let mut two_rho_j = IVec::ZERO;
        for a in rs.pos_roots() {
            if rs.root_in_j(a, j) {
                two_rho_j += rs.root(a);
            }
        }
        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); nv];
        let mut kind = vec![0u8; nv * nv];
        for (vi, &w) in verts.iter().enumerate() {
            let lw = rs.len(w) as i32;
            for a in rs.pos_roots() {
                if rs.root_in_j(a, j) {
                    continue;
                }
                let to = rs.min_rep(rs.mul(w, rs.reflection(a)), j);
                let lt = rs.len(to) as i32;
                let k = if lt == lw + 1 {
                    EdgeKind::Bruhat
                } else {
                    let c = rs.coroot_pairings(a);
                    let pairing = rs.two_rho().dot(&c) - two_rho_j.dot(&c);
                    if lt == lw + 1 - pairing {
                        EdgeKind::Quantum
                    } else {
                        continue;
                    }
                };
                let weight = match k {
                    EdgeKind::Bruhat => IVec::ZERO,
                    EdgeKind::Quantum => rs.mod_j(&rs.coroot(a), j),
                };
                let ti = vidx[to.idx()] as usize;
                out[vi].push(edges.len() as u32);
                if kind[vi * nv + ti] == 0 {
                    kind[vi * nv + ti] = if k == EdgeKind::Bruhat { 1 } else { 2 };
                }
                edges.push(QbgEdge { from: w, to, kind: k, weight, root: a });
            }
        }
        let mut dist = vec![UNREACHED; nv * nv];
        let mut wt = vec![IVec::ZERO; nv * nv];
        let mut queue = Vec::with_capacity(nv);
        for s in 0..nv {
            let row = s * nv;
            dist[row + s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = dist[row + u];
                let wu = wt[row + u];
                for &e in &out[u] {
                    let e = &edges[e as usize];
                    let t = vidx[e.to.idx()] as usize;
                    if dist[row + t] == UNREACHED {
                        dist[row + t] = du + 1;
                        wt[row + t] = wu + e.weight;
                        queue.push(t);
                    }
                }
            }
        }
        QbgOracle { j, verts, vidx, edges, out, dist, wt, kind }
    }

    pub fn parabolic(&self) -> SimpleSet {
        self.j
    }

    pub fn vertices(&self) -> &[WeylElt] {
        &self.verts
    }

    pub fn edges(&self) -> &[QbgEdge] {
        &self.edges
    }

    pub fn out_edges(&self, w: WeylElt) -> impl Iterator<Item = &QbgEdge> + '_ {
        let i = self.vidx[w.idx()] as usize;
        self.out[i].iter().map(move |&e| &self.edges[e as usize])
    }

    pub fn contains(&self, w: WeylElt) -> bool {
        self.vidx[w.idx()] != NOT_VERTEX
    }

    fn check(&self, w: WeylElt) -> Result<usize> {
        match self.vidx.get(w.idx()) {
            Some(&i) if i != NOT_VERTEX => Ok(i as usize),
            _ => Err(Error::VertexNotInQuotient),
        }
    }

    pub fn distance(&self, w1: WeylElt, w2: WeylElt) -> Result<u32> {
        let (a, b) = (self.check(w1)?, self.check(w2)?);
        Ok(self.dist[a * self.verts.len() + b] as u32)
    }

    pub fn weight(&self, w1: WeylElt, w2: WeylElt) -> Result<IVec> {
        let (a, b) = (self.check(w1)?, self.check(w2)?);
        Ok(self.wt[a * self.verts.len() + b])
    }

    /// Unchecked distance for vertices known to lie in the quotient.
    #[inline]
    pub fn d(&self, w1: WeylElt, w2: WeylElt) -> u32 {
        let n = self.verts.len();
        self.dist[self.vidx[w1.idx()] as usize * n + self.vidx[w2.idx()] as usize] as u32
    }

    /// Unchecked weight for vertices known to lie in the quotient.
    #[inline]
    pub fn wt(&self, w1: WeylElt, w2: WeylElt) -> IVec {
        let n = self.verts.len();
        self.wt[self.vidx[w1.idx()] as usize * n + self.vidx[w2.idx()] as usize]
    }

    pub fn edge_kind(&self, w1: WeylElt, w2: WeylElt) -> Option<EdgeKind> {
        let n = self.verts.len();
        let (a, b) = (self.vidx[w1.idx()], self.vidx[w2.idx()]);
        if a == NOT_VERTEX || b == NOT_VERTEX {
            return None;
        }
        match self.kind[a as usize * n + b as usize] {
            1 => Some(EdgeKind::Bruhat),
            2 => Some(EdgeKind::Quantum),
            _ => None,
        }
    }

    /// Whether some path of weight exactly `mu` (mod `J`) joins `w1` to `w2`.
    pub fn path_of_weight_exists(&self, rs: &RootSystem, w1: WeylElt, w2: WeylElt, mu: &IVec) -> Result<bool> {
        let wt = self.weight(w1, w2)?;
        Ok(rs.coroot_leq(&wt, mu, self.j))
    }

    /// A shortest path from `w1` to `w2`, as a list of vertices.
    pub fn shortest_path(&self, w1: WeylElt, w2: WeylElt) -> Result<Vec<WeylElt>> {
        let mut path = vec![w1];
        let mut u = w1;
        let mut remaining = self.distance(w1, w2)?;
        while u != w2 {
            let e = self
                .out_edges(u)
                .find(|e| self.d(e.to, w2) + 1 == remaining && self.wt(u, w2) == e.weight + self.wt(e.to, w2))
                .expect("BFS table inconsistent");
            u = e.to;
            remaining -= 1;
            path.push(u);
        }
        Ok(path)
    }

    /// Weight of a vertex path, or `None` if some step is not an edge. Uses
    /// the smallest available edge weight between consecutive vertices.
    pub fn path_weight(&self, path: &[WeylElt]) -> Option<IVec> {
        let mut total = IVec::ZERO;
        for p in path.windows(2) {
            let e = self
                .out_edges(p[0])
                .filter(|e| e.to == p[1])
                .min_by_key(|e| e.weight.sum())?;
            total += e.weight;
        }
        Some(total)
    }

    /// For `J = {}`: a path of weight exactly `mu`, obtained by appending
    /// `w2 -> w2 s_i -> w2` detours to a shortest path.
    pub fn path_with_weight(&self, rs: &RootSystem, w1: WeylElt, w2: WeylElt, mu: &IVec) -> Result<Option<Vec<WeylElt>>> {
        if self.j != 0 {
            return Err(Error::InvalidDatum("detour construction needs the full Weyl group".into()));
        }
        if !self.path_of_weight_exists(rs, w1, w2, mu)? {
            return Ok(None);
        }
        let mut path = self.shortest_path(w1, w2)?;
        let excess = *mu - self.wt(w1, w2);
        for i in 0..rs.rank() {
            for _ in 0..excess.0[i] {
                path.push(rs.mul(w2, rs.simple_refl(i)));
                path.push(w2);
            }
        }
        Ok(Some(path))
    }

    pub fn to_dot(&self, rs: &RootSystem) -> String {
        let mut s = format!("digraph qbg {{\n  // {} J={:#b}\n", rs.name(), self.j);
        for &v in &self.verts {
            s.push_str(&format!("  \"{}\";\n", word_label(rs, v)));
        }
        for e in &self.edges {
            let label = match e.kind {
                EdgeKind::Bruhat => "B".to_string(),
                EdgeKind::Quantum => format!("Q {:?}", e.weight.to_vec(rs.rank())),
            };
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                word_label(rs, e.from),
                word_label(rs, e.to),
                label
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn tables_json(&self, rs: &RootSystem) -> serde_json::Value {
        let n = rs.rank();
        let words: Vec<Vec<usize>> = self.verts.iter().map(|&v| word_1based(rs, v)).collect();
        let dist: Vec<Vec<u32>> = self
            .verts
            .iter()
            .map(|&a| self.verts.iter().map(|&b| self.d(a, b)).collect())
            .collect();
        let weight: Vec<Vec<Vec<i32>>> = self
            .verts
            .iter()
            .map(|&a| self.verts.iter().map(|&b| self.wt(a, b).to_vec(n)).collect())
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "from": word_1based(rs, e.from),
                    "to": word_1based(rs, e.to),
                    "kind": e.kind,
                    "weight": e.weight.to_vec(n),
                    "root": rs.root(e.root).to_vec(n),
                })
            })
            .collect();
        serde_json::json!({
            "type": rs.name(),
            "parabolic": (0..n).filter(|&i| self.j >> i & 1 == 1).map(|i| i + 1).collect::<Vec<_>>(),
            "vertices": words,
            "edges": edges,
            "distance": dist,
            "weight": weight,
        })
    }
}

pub fn word_1based(rs: &RootSystem, w: WeylElt) -> Vec<usize> {
    rs.word(w).iter().map(|&i| i as usize + 1).collect()
}

fn word_label(rs: &RootSystem, w: WeylElt) -> String {
    if rs.len(w) == 0 {
        "1".to_string()
    } else {
        rs.word(w).iter().map(|&i| format!("s{}", i + 1)).collect()
    }
}

impl RootSystem {
    /// Cached oracle for the full Weyl group.
    pub fn qbg0(&self) -> &QbgOracle {
        self.qbg0.get_or_init(|| Arc::new(QbgOracle::build(self, 0)))
    }

    /// Cached oracle for the quotient by the simple roots in `j`.
    pub fn qbg(&self, j: SimpleSet) -> Arc<QbgOracle> {
        if j == 0 {
            self.qbg0();
            return self.qbg0.get().unwrap().clone();
        }
        let mut cache = self.qbg_cache.lock().unwrap();
        cache.entry(j).or_insert_with(|| Arc::new(QbgOracle::build(self, j))).clone()
    }
}

/// `l(s_a) = <a^vee, 2 rho> - 1`.
pub fn is_quantum_root(rs: &RootSystem, a: usize) -> bool {
    rs.len(rs.reflection(a)) as i32 == rs.coroot_two_rho(&rs.coroot(a)) - 1
}

/// Equality-case characterization: `<a^vee, b> = 1` for every positive root
/// `b != a` with `s_a b < 0`.
pub fn is_quantum_root_by_pairing(rs: &RootSystem, a: usize) -> bool {
    let s = rs.reflection(a);
    rs.pos_roots()
        .filter(|&b| b != a && !rs.is_pos(rs.act_root(s, b)))
        .all(|b| rs.pair_roots(a, b) == 1)
}

fn root_leq(rs: &RootSystem, a: usize, b: usize) -> bool {
    let (x, y) = (rs.root(a), rs.root(b));
    (0..rs.rank()).all(|i| x.0[i] <= y.0[i])
}

/// Inversions of `w` that are maximal for the root order.
pub fn max_inversions(rs: &RootSystem, w: WeylElt) -> Vec<usize> {
    let inv = rs.inversions(w);
    inv.iter()
        .copied()
        .filter(|&g| !inv.iter().any(|&a| a != g && root_leq(rs, g, a)))
        .collect()
}

/// `wt(w => 1)` by stripping maximal inversions: `wt(w => 1) = wt(s_g w => 1) - w^{-1} g^vee`.
pub fn wt_to_identity_fast(rs: &RootSystem, w: WeylElt) -> IVec {
    let mut w = w;
    let mut acc = IVec::ZERO;
    while w != WeylElt::ID {
        let g = max_inversions(rs, w)
            .into_iter()
            .min_by_key(|&g| rs.root(g))
            .unwrap();
        acc -= rs.coroot(rs.act_root(rs.inv(w), g));
        w = rs.mul(rs.reflection(g), w);
    }
    acc
}

/// `wt(w1 => w2)` for the full Weyl group: peel left descents off `w2`, then
/// finish with [`wt_to_identity_fast`].
pub fn wt_general_via_diamond(rs: &RootSystem, w1: WeylElt, w2: WeylElt) -> IVec {
    let (mut w1, mut w2) = (w1, w2);
    while w2 != WeylElt::ID {
        let i = (0..rs.rank())
            .find(|&i| !rs.is_pos(rs.act_root(rs.inv(w2), rs.simple_root(i))))
            .unwrap();
        let s = rs.simple_refl(i);
        if !rs.is_pos(rs.act_root(rs.inv(w1), rs.simple_root(i))) {
            w1 = rs.mul(s, w1);
        }
        w2 = rs.mul(s, w2);
    }
    wt_to_identity_fast(rs, w1)
}
