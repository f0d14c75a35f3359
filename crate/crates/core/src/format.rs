//! Text and JSON encodings: the element grammar `w:[i,...] mu:[m,...]`,
//! coweight lists, affine simple-root subsets and rational vectors.

use serde_json::{json, Value};

use crate::affine::ExtAffElt;
use crate::error::{Error, Result};
use crate::qbg::word_1based;
use crate::rootsys::{IVec, QVec, RootSystem, WeylElt};
use crate::semiaffine::AffSubset;

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{lit}`")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(usize, i64)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.s[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+')))
            .count();
        let tok = &rest[..len];
        let v = tok.parse::<i64>().map_err(|_| Error::parse(start, "expected an integer"))?;
        self.pos += len;
        Ok((start, v))
    }

    /// `[a, b, ...]` with items parsed by `item`.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "trailing input"))
        }
    }
}

fn int_list(c: &mut Cursor<'_>) -> Result<Vec<(usize, i64)>> {
    c.list(|c| c.int())
}

fn coweight_from(rs: &RootSystem, items: &[(usize, i64)], at: usize) -> Result<IVec> {
    if items.len() != rs.rank() {
        return Err(Error::parse(at, format!("expected {} pairings, found {}", rs.rank(), items.len())));
    }
    let mut mu = IVec::ZERO;
    for (i, &(p, v)) in items.iter().enumerate() {
        mu.0[i] = i32::try_from(v).map_err(|_| Error::parse(p, "pairing out of range"))?;
    }
    Ok(mu)
}

fn word_from(rs: &RootSystem, items: &[(usize, i64)]) -> Result<WeylElt> {
    let mut word = Vec::with_capacity(items.len());
    for &(p, v) in items {
        if v < 1 || v as usize > rs.rank() {
            return Err(Error::parse(p, format!("simple index {v} out of range 1..={}", rs.rank())));
        }
        word.push(v as usize - 1);
    }
    rs.from_word(&word)
}

/// Parses `w:[i,j,...] mu:[m1,...,mn]` (1-based simple indices, integer pairings).
pub fn parse_element(s: &str, rs: &RootSystem) -> Result<ExtAffElt> {
    let mut c = Cursor { s, pos: 0 };
    c.expect("w:")?;
    let w = word_from(rs, &int_list(&mut c)?)?;
    c.expect("mu:")?;
    c.skip_ws();
    let at = c.pos;
    let mu = coweight_from(rs, &int_list(&mut c)?, at)?;
    c.finish()?;
    Ok(ExtAffElt::new(w, mu))
}

/// Parses a pairings vector `[m1,...,mn]`.
pub fn parse_coweight(s: &str, rs: &RootSystem) -> Result<IVec> {
    let mut c = Cursor { s, pos: 0 };
    let items = int_list(&mut c)?;
    c.finish()?;
    coweight_from(rs, &items, 0)
}

/// Parses a Weyl group word `[i,j,...]`.
pub fn parse_weyl(s: &str, rs: &RootSystem) -> Result<WeylElt> {
    let mut c = Cursor { s, pos: 0 };
    let items = int_list(&mut c)?;
    c.finish()?;
    word_from(rs, &items)
}

/// Parses `[1, 3, theta:1]`: finite simple indices and per-component affine
/// roots, all 1-based.
pub fn parse_aff_subset(s: &str, rs: &RootSystem) -> Result<AffSubset> {
    let mut c = Cursor { s, pos: 0 };
    let mut out = AffSubset::EMPTY;
    let ncomp = rs.components().len();
    c.list(|c| {
        c.skip_ws();
        if c.s[c.pos..].starts_with("theta") {
            c.expect("theta")?;
            c.expect(":")?;
            let (p, k) = c.int()?;
            if k < 1 || k as usize > ncomp {
                return Err(Error::parse(p, format!("component {k} out of range 1..={ncomp}")));
            }
            out.theta |= 1 << (k - 1);
        } else {
            let (p, i) = c.int()?;
            if i < 1 || i as usize > rs.rank() {
                return Err(Error::parse(p, format!("simple index {i} out of range 1..={}", rs.rank())));
            }
            out.finite |= 1 << (i - 1);
        }
        Ok(())
    })?;
    c.finish()?;
    Ok(out)
}

fn list_str<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Canonical form: canonical reduced word and pairings.
pub fn format_element(rs: &RootSystem, x: &ExtAffElt) -> String {
    format!("w:{} mu:{}", list_str(word_1based(rs, x.w)), list_str(x.mu.to_vec(rs.rank())))
}

pub fn format_coweight(rs: &RootSystem, mu: &IVec) -> String {
    list_str(mu.to_vec(rs.rank()))
}

pub fn format_aff_subset(rs: &RootSystem, j: &AffSubset) -> String {
    let fin = (0..rs.rank()).filter(|&i| j.finite >> i & 1 == 1).map(|i| (i + 1).to_string());
    let th = (0..rs.components().len()).filter(|&k| j.theta >> k & 1 == 1).map(|k| format!("theta:{}", k + 1));
    list_str(fin.chain(th))
}

pub fn element_json(rs: &RootSystem, x: &ExtAffElt) -> Value {
    json!({ "w": word_1based(rs, x.w), "mu": x.mu.to_vec(rs.rank()) })
}

pub fn weyl_json(rs: &RootSystem, w: WeylElt) -> Value {
    json!(word_1based(rs, w))
}

/// Exact rationals as strings, e.g. `["1/2","0"]`.
pub fn qvec_json(rs: &RootSystem, v: &QVec) -> Value {
    json!(v.0[..rs.rank()].iter().map(|c| c.to_string()).collect::<Vec<_>>())
}
