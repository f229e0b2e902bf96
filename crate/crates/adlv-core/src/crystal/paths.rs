//! Littelmann LS paths and root operators: an independent path-model oracle
//! for weight multiplicities and branching.

use crate::error::Error;
use crate::rational::{dot_iq, rat, Rat};
use crate::rootdata::{CoweightClass, GroupData};
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// A piecewise-linear path from 0: segments `(direction, length)` with
/// positive rational lengths summing to 1. Directions lie in a single
/// Weyl orbit for LS paths of fixed shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LsPath {
    pub segs: Vec<(Vec<i64>, Rat)>,
}

impl LsPath {
    pub fn straight(dir: Vec<i64>) -> LsPath {
        LsPath {
            segs: vec![(dir, rat(1))],
        }
    }

    fn normalize(mut self) -> LsPath {
        let mut out: Vec<(Vec<i64>, Rat)> = Vec::with_capacity(self.segs.len());
        for (d, l) in self.segs.drain(..) {
            if l.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((pd, pl)) if *pd == d => *pl = *pl + l,
                _ => out.push((d, l)),
            }
        }
        LsPath { segs: out }
    }

    pub fn endpoint(&self) -> Vec<Rat> {
        let k = self.segs.first().map_or(0, |(d, _)| d.len());
        let mut e = vec![Rat::zero(); k];
        for (d, l) in &self.segs {
            for (ei, &di) in e.iter_mut().zip(d) {
                *ei = *ei + *l * rat(di);
            }
        }
        e
    }
}

pub fn endpoint_integral(p: &LsPath) -> Result<Vec<i64>, Error> {
    let e = p.endpoint();
    if !e.iter().all(|x| x.is_integer()) {
        return Err(Error::OracleMismatch("LS path endpoint not integral".into()));
    }
    Ok(e.iter().map(|x| x.to_integer()).collect())
}

/// Corner values of `h_i(t) = <phi_i, path(t)>` (length = segs + 1).
fn corner_values(g: &GroupData, p: &LsPath, i: usize) -> Vec<Rat> {
    let phi = g.rel.simple_covector(i);
    let mut h = vec![Rat::zero()];
    let mut cur = Rat::zero();
    for (d, l) in &p.segs {
        cur = cur + *l * rat(dot_iq_int(phi, d));
        h.push(cur);
    }
    h
}

fn dot_iq_int(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The lowering root operator `f_i`; None when undefined.
pub fn f_op(g: &GroupData, p: &LsPath, i: usize) -> Option<LsPath> {
    let h = corner_values(g, p, i);
    let m = h.iter().copied().min()?;
    let last = *h.last()?;
    if last - m < rat(1) {
        return None;
    }
    // last corner attaining the minimum
    let j = (0..h.len()).rev().find(|&t| h[t] == m)?;
    // first segment after j where h reaches m+1
    let mut t = j;
    let target = m + rat(1);
    loop {
        if t >= p.segs.len() {
            return None; // cannot happen when last - m >= 1
        }
        if h[t + 1] >= target {
            break;
        }
        t += 1;
    }
    let mut segs: Vec<(Vec<i64>, Rat)> = Vec::with_capacity(p.segs.len() + 1);
    segs.extend_from_slice(&p.segs[..j]);
    // reflect [j ..= t], splitting segment t if the crossing is interior
    if h[t + 1] == target {
        for (d, l) in &p.segs[j..=t] {
            segs.push((g.rel.apply_simple(i, d), *l));
        }
        segs.extend_from_slice(&p.segs[t + 1..]);
    } else {
        let (d, l) = &p.segs[t];
        let slope = rat(dot_iq_int(g.rel.simple_covector(i), d));
        let cut = (target - h[t]) / slope;
        debug_assert!(cut > rat(0) && cut < *l);
        for (dd, ll) in &p.segs[j..t] {
            segs.push((g.rel.apply_simple(i, dd), *ll));
        }
        segs.push((g.rel.apply_simple(i, d), cut));
        segs.push((d.clone(), *l - cut));
        segs.extend_from_slice(&p.segs[t + 1..]);
    }
    Some(LsPath { segs }.normalize())
}

/// The full path crystal of shape `mu`, generated from the straight
/// dominant path by the lowering operators.
pub fn path_crystal(g: &GroupData, mu: &CoweightClass) -> Result<Vec<LsPath>, Error> {
    if !g.rel.is_dominant(&mu.free) {
        return Err(Error::BadInput("path shape must be dominant".into()));
    }
    let start = LsPath::straight(mu.free.clone());
    let mut seen: BTreeSet<LsPath> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(p) = frontier.pop() {
        for i in 0..g.rel.num_simples() {
            if let Some(q) = f_op(g, &p, i) {
                if seen.insert(q.clone()) {
                    if seen.len() > 2_000_000 {
                        return Err(Error::WindowExhausted("path crystal too large".into()));
                    }
                    frontier.push(q);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Number of LS paths of shape `mu` ending at `lam`.
pub fn littelmann_count(g: &GroupData, mu: &CoweightClass, lam: &CoweightClass) -> Result<i64, Error> {
    if lam.torsion != mu.torsion {
        return Ok(0);
    }
    let crystal = path_crystal(g, mu)?;
    let mut count = 0i64;
    for p in &crystal {
        let e = p.endpoint();
        if e.iter().all(|x| x.is_integer()) {
            let ei: Vec<i64> = e.iter().map(|x| x.to_integer()).collect();
            if ei == lam.free {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Does `shift + path(t)` stay dominant for all `t`? (Checked at corners,
/// which suffices for piecewise-linear paths and linear-form conditions.)
pub fn stays_dominant_shifted(g: &GroupData, p: &LsPath, shift: &[i64]) -> bool {
    let k = shift.len();
    let mut pos: Vec<Rat> = shift.iter().map(|&x| rat(x)).collect();
    if !g.rel.is_dominant_rat(&pos) {
        return false;
    }
    for (d, l) in &p.segs {
        for x in 0..k {
            pos[x] = pos[x] + *l * rat(d[x]);
        }
        if !g.rel.is_dominant_rat(&pos) {
            return false;
        }
    }
    true
}
