//! Radical, socle, projective covers, and injective envelopes.
//!
//! Over a path algebra of an acyclic quiver the radical of a module is the sum
//! of the images of all arrow actions, and the socle is the intersection of
//! their kernels. Covers and envelopes are built explicitly from the top and
//! socle, with the defining properties asserted rather than trusted.

use super::{image, inj_at, proj_at, quotient, Morphism, Rep, SubRep};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};

/// Radical: at each vertex, the sum of the images of the incoming arrows.
pub fn radical(m: &Rep) -> SubRep {
    let f = m.field;
    let q = &m.quiver;
    let mut spaces: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
    for a in 0..q.arrows.len() {
        let t = q.tgt(a);
        spaces[t] = spaces[t].sum(&Subspace::from_cols(&m.action[a], f), f);
    }
    SubRep::new(m.clone(), spaces).expect("radical is arrow-closed")
}

/// Socle: at each vertex, the intersection of the kernels of the outgoing
/// arrows.
pub fn socle(m: &Rep) -> SubRep {
    let f = m.field;
    let q = &m.quiver;
    let mut spaces: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::full(d)).collect();
    for a in 0..q.arrows.len() {
        let s = q.src(a);
        let ker = Subspace::from_cols(&m.action[a].nullspace(f), f);
        spaces[s] = spaces[s].intersect(&ker, f);
    }
    SubRep::new(m.clone(), spaces).expect("socle is arrow-closed")
}

/// Top `M / rad M` with the projection.
pub fn top(m: &Rep) -> (Rep, Morphism) {
    quotient(m, &radical(m))
}

/// A projective cover: `map: rep -> M` surjective with superfluous kernel,
/// `rep = ⊕_v P_v^{mult[v]}`.
#[derive(Debug, Clone)]
pub struct Cover {
    pub rep: Rep,
    pub map: Morphism,
    pub mult: Vec<usize>,
}

/// An injective envelope: `map: M -> rep` injective and essential,
/// `rep = ⊕_v I_v^{mult[v]}`.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub rep: Rep,
    pub map: Morphism,
    pub mult: Vec<usize>,
}

/// Projective cover of `m`. The multiplicity of `P_v` is `dim top(m)_v`;
/// the cover sends the path basis element `(q: v -> j, l)` to
/// `act_m(q) · g_{v,l}` where the `g_{v,l}` are radical-complement generators.
pub fn projective_cover(m: &Rep) -> Result<Cover> {
    let f = m.field;
    let q = &m.quiver;
    let rad = radical(m);
    let mult: Vec<usize> = (0..q.vertices)
        .map(|v| m.dims[v] - rad.spaces[v].dim())
        .collect();

    // generators: columns of the quotient section at each vertex
    let gens: Vec<Mat> = rad.spaces.iter().map(Subspace::quotient_sect).collect();

    let paths = q.all_paths();
    let mut parts: Vec<Rep> = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new(); // (vertex, generator index)
    for v in 0..q.vertices {
        for l in 0..mult[v] {
            parts.push(proj_at(f, q, v));
            blocks.push((v, l));
        }
    }
    if parts.is_empty() {
        let p = Rep::zero_rep(f, q.clone());
        let map = Morphism::zero(&p, m);
        if !m.is_zero() {
            return Err(Error::Internal("cover of a nonzero module is zero".into()));
        }
        return Ok(Cover { rep: p, map, mult });
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    let (total, _, _) = super::direct_sum(&refs);

    // Component at vertex j: columns run over blocks, inside a block over the
    // canonical paths v -> j; column for (q, l) is act(q) · g_{v,l}.
    let mut comps = Vec::new();
    for j in 0..q.vertices {
        let mut cols: Vec<Vec<u64>> = Vec::new();
        for &(v, l) in &blocks {
            let g = gens[v].col(l);
            let gmat = Mat::from_cols(vec![g], m.dims[v]).expect("generator column");
            for p in paths.iter().filter(|p| p.from == v && p.to == j) {
                cols.push(m.act_path(p).mul(&gmat, f).col(0));
            }
        }
        comps.push(Mat::from_cols(cols, m.dims[j]).expect("cover columns"));
    }
    let map = Morphism::new(total.clone(), m.clone(), comps)?;
    if !map.is_vertexwise_surjective() {
        return Err(Error::Internal("projective cover failed to surject".into()));
    }
    Ok(Cover {
        rep: total,
        map,
        mult,
    })
}

/// Injective envelope of `m`. The multiplicity of `I_v` is `dim soc(m)_v`;
/// the row of the embedding for `(v, l)` at a path `q: j -> v` is
/// `e_{p_l}^T · act_m(q)` with `p_l` the pivot of the `l`-th socle basis row.
pub fn injective_envelope(m: &Rep) -> Result<Envelope> {
    let f = m.field;
    let q = &m.quiver;
    let soc = socle(m);
    let mult: Vec<usize> = (0..q.vertices).map(|v| soc.spaces[v].dim()).collect();

    let paths = q.all_paths();
    let mut parts: Vec<Rep> = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new(); // (vertex, pivot coordinate)
    for v in 0..q.vertices {
        for l in 0..mult[v] {
            parts.push(inj_at(f, q, v));
            blocks.push((v, soc.spaces[v].pivots()[l]));
        }
    }
    if parts.is_empty() {
        let e = Rep::zero_rep(f, q.clone());
        let map = Morphism::zero(m, &e);
        if !m.is_zero() {
            return Err(Error::Internal("envelope of a nonzero module is zero".into()));
        }
        return Ok(Envelope { rep: e, map, mult });
    }
    let refs: Vec<&Rep> = parts.iter().collect();
    let (total, _, _) = super::direct_sum(&refs);

    let mut comps = Vec::new();
    for j in 0..q.vertices {
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for &(v, pivot) in &blocks {
            for p in paths.iter().filter(|p| p.from == j && p.to == v) {
                rows.push(m.act_path(p).row(pivot).to_vec());
            }
        }
        comps.push(Mat::from_rows(rows, m.dims[j]).expect("envelope rows"));
    }
    let map = Morphism::new(m.clone(), total.clone(), comps)?;
    if !map.is_vertexwise_injective() {
        return Err(Error::Internal("envelope embedding failed to inject".into()));
    }
    // essential: the socle of the envelope must land inside the image
    let im = image(&map);
    let env_soc = socle(&total);
    for v in 0..q.vertices {
        if !im.spaces[v].contains(&env_soc.spaces[v], f) {
            return Err(Error::Internal("envelope embedding not essential".into()));
        }
    }
    Ok(Envelope {
        rep: total,
        map,
        mult,
    })
}

/// A module is projective iff its projective cover has the same dimension.
pub fn is_projective(m: &Rep) -> bool {
    projective_cover(m)
        .map(|c| c.rep.total_dim() == m.total_dim())
        .unwrap_or(false)
}

/// A module is injective iff its injective envelope has the same dimension.
pub fn is_injective(m: &Rep) -> bool {
    injective_envelope(m)
        .map(|e| e.rep.total_dim() == m.total_dim())
        .unwrap_or(false)
}
