//! The standard modules of a path algebra: indecomposable projectives and
//! injectives, simples, the regular module, and — for line quivers — the
//! interval family, which exhausts the indecomposables there.

use super::{direct_sum, Morphism, Rep};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};
use crate::quiver::Quiver;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Indecomposable projective at vertex `v0` (0-based): the space at vertex `j`
/// has one basis element per path `v0 -> j`, in canonical path order; arrows
/// act by post-composition.
pub fn proj_at(field: Fp, quiver: &Arc<Quiver>, v0: usize) -> Rep {
    let paths = quiver.all_paths();
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertices];
    let mut index: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for (k, p) in paths.iter().enumerate() {
        if p.from == v0 {
            index.insert((p.to, p.arrows.clone()), basis[p.to].len());
            basis[p.to].push(k);
        }
    }
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let mut action = Vec::new();
    for a in 0..quiver.arrows.len() {
        let (s, t) = (quiver.src(a), quiver.tgt(a));
        let mut m = Mat::zero(dims[t], dims[s]);
        for (col, &k) in basis[s].iter().enumerate() {
            let mut ext = paths[k].arrows.clone();
            ext.push(a);
            let row = index[&(t, ext)];
            m.set(row, col, 1);
        }
        action.push(m);
    }
    Rep::new(field, quiver.clone(), dims, action).expect("projective module")
}

/// Indecomposable injective at vertex `v0` (0-based): the space at vertex `j`
/// has one basis element per path `j -> v0`; an arrow `a: s -> t` sends a path
/// `q: s -> v0` to its tail `t -> v0` when `q` starts with `a`, else to zero.
pub fn inj_at(field: Fp, quiver: &Arc<Quiver>, v0: usize) -> Rep {
    let paths = quiver.all_paths();
    let mut basis: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertices];
    let mut index: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
    for (k, p) in paths.iter().enumerate() {
        if p.to == v0 {
            index.insert((p.from, p.arrows.clone()), basis[p.from].len());
            basis[p.from].push(k);
        }
    }
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let mut action = Vec::new();
    for a in 0..quiver.arrows.len() {
        let (s, t) = (quiver.src(a), quiver.tgt(a));
        let mut m = Mat::zero(dims[t], dims[s]);
        for (col, &k) in basis[s].iter().enumerate() {
            let q = &paths[k].arrows;
            if q.first() == Some(&a) {
                let row = index[&(t, q[1..].to_vec())];
                m.set(row, col, 1);
            }
        }
        action.push(m);
    }
    Rep::new(field, quiver.clone(), dims, action).expect("injective module")
}

/// Simple module at vertex `v0` (0-based).
pub fn simple_at(field: Fp, quiver: &Arc<Quiver>, v0: usize) -> Rep {
    let mut dims = vec![0; quiver.vertices];
    dims[v0] = 1;
    let action = (0..quiver.arrows.len())
        .map(|a| Mat::zero(dims[quiver.tgt(a)], dims[quiver.src(a)]))
        .collect();
    Rep::new(field, quiver.clone(), dims, action).expect("simple module")
}

/// The regular module `⊕_v P_v` with its canonical summand inclusions.
pub fn regular(field: Fp, quiver: &Arc<Quiver>) -> (Rep, Vec<Morphism>) {
    let parts: Vec<Rep> = (0..quiver.vertices)
        .map(|v| proj_at(field, quiver, v))
        .collect();
    let refs: Vec<&Rep> = parts.iter().collect();
    let (total, injs, _) = direct_sum(&refs);
    (total, injs)
}

/// Interval module on a line quiver: one-dimensional on vertices
/// `lo0 ..= hi0` (0-based), identity along the edges inside the interval.
/// Works for any orientation of the edges.
pub fn interval(field: Fp, quiver: &Arc<Quiver>, lo0: usize, hi0: usize) -> Result<Rep> {
    if quiver.as_an_orientation().is_none() {
        return Err(Error::InvalidInput(format!(
            "{} is not a line quiver",
            quiver.describe()
        )));
    }
    if lo0 > hi0 || hi0 >= quiver.vertices {
        return Err(Error::InvalidInput(format!(
            "interval [{}, {}] out of range for {} vertices",
            lo0 + 1,
            hi0 + 1,
            quiver.vertices
        )));
    }
    let dims: Vec<usize> = (0..quiver.vertices)
        .map(|v| usize::from(lo0 <= v && v <= hi0))
        .collect();
    let mut action = Vec::new();
    for a in 0..quiver.arrows.len() {
        let (s, t) = (quiver.src(a), quiver.tgt(a));
        let edge = s.min(t); // the edge joins `edge` and `edge + 1`
        let inside = lo0 <= edge && edge + 1 <= hi0;
        let m = if inside {
            Mat::identity(1)
        } else {
            Mat::zero(dims[t], dims[s])
        };
        action.push(m);
    }
    Rep::new(field, quiver.clone(), dims, action)
}

/// All interval modules of a line quiver, ordered by (lo, hi). These are
/// exactly the indecomposables, `n(n+1)/2` of them.
pub fn intervals(field: Fp, quiver: &Arc<Quiver>) -> Result<Vec<(usize, usize, Rep)>> {
    let n = quiver.vertices;
    let mut out = Vec::new();
    for lo in 0..n {
        for hi in lo..n {
            out.push((lo, hi, interval(field, quiver, lo, hi)?));
        }
    }
    Ok(out)
}

pub fn interval_label(lo0: usize, hi0: usize) -> String {
    format!("[{},{}]", lo0 + 1, hi0 + 1)
}
