//! Linear-algebraic computation of Hom spaces and derived morphisms.

use super::{Morphism, Rep, SubRep};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Composition `outer ∘ inner`.
pub fn compose(outer: &Morphism, inner: &Morphism) -> Result<Morphism> {
    if inner.target != outer.source {
        return Err(Error::Shape("composition endpoints do not match".into()));
    }
    let f = inner.field();
    let components = outer
        .components
        .iter()
        .zip(&inner.components)
        .map(|(g, h)| g.mul(h, f))
        .collect();
    Ok(Morphism {
        source: inner.source.clone(),
        target: outer.target.clone(),
        components,
    })
}

/// A basis of Hom(A, B) as a representation-morphism space.
///
/// Unknowns are the entries of all components in `flatten` order; each arrow
/// `a: s -> t` contributes the linear constraints `F_t · act_A(a) = act_B(a) · F_s`.
/// The result is the canonical nullspace basis, so it is deterministic.
pub fn hom_basis(a: &Rep, b: &Rep) -> Vec<Morphism> {
    assert!(a.same_context(b), "hom between different contexts");
    let f = a.field;
    let q = &a.quiver;
    let n = q.vertices;
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + b.dims[v] * a.dims[v];
    }
    let unknowns = offsets[n];
    // index of entry F_v[i][j] in the flattening
    let idx = |v: usize, i: usize, j: usize| offsets[v] + i * a.dims[v] + j;

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for arr in 0..q.arrows.len() {
        let (s, t) = (q.src(arr), q.tgt(arr));
        // one constraint per entry (i, j) of the t.dims[b] x s.dims[a] product
        for i in 0..b.dims[t] {
            for j in 0..a.dims[s] {
                let mut row = vec![0u64; unknowns];
                for k in 0..a.dims[t] {
                    let c = a.action[arr].get(k, j);
                    if c != 0 {
                        let p = idx(t, i, k);
                        row[p] = f.add(row[p], c);
                    }
                }
                for k in 0..b.dims[s] {
                    let c = b.action[arr].get(i, k);
                    if c != 0 {
                        let p = idx(s, k, j);
                        row[p] = f.sub(row[p], c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = if rows.is_empty() {
        Mat::zero(0, unknowns)
    } else {
        Mat::from_rows(rows, unknowns).expect("constraint rows")
    };
    let null = sys.nullspace(f);
    (0..null.cols())
        .map(|c| {
            let flat: Vec<u64> = (0..unknowns).map(|r| null.get(r, c)).collect();
            Morphism::from_flat(a, b, &flat).expect("nullspace vectors commute")
        })
        .collect()
}

/// Express `target` as a linear combination of `basis` (all in Hom(A, B)),
/// returning the coefficients.
pub fn in_span(basis: &[Morphism], target: &Morphism) -> Option<Vec<u64>> {
    let f = target.field();
    let flat = target.flatten();
    let n = flat.len();
    let cols: Vec<Vec<u64>> = basis.iter().map(Morphism::flatten).collect();
    let m = Mat::from_cols(cols, n).expect("uniform flattening");
    let rhs = Mat::from_cols(vec![flat], n).expect("rhs column");
    let sol = m.solve(&rhs, f)?;
    Some(sol.particular.col(0))
}

/// Linear combination of morphisms with the given coefficients.
pub fn combine(basis: &[Morphism], coeffs: &[u64]) -> Morphism {
    assert_eq!(basis.len(), coeffs.len());
    assert!(!basis.is_empty(), "combine needs at least one term for shape");
    let mut acc = Morphism::zero(&basis[0].source, &basis[0].target);
    for (b, &c) in basis.iter().zip(coeffs) {
        acc = acc.add(&b.scale(c));
    }
    acc
}

/// Solve `u ∘ through = target` for `u`; both morphisms must share their
/// source. Returns any solution of the linear system, or none.
pub fn factor_left(through: &Morphism, target: &Morphism) -> Option<Morphism> {
    assert!(through.source == target.source, "factor_left sources differ");
    let basis = hom_basis(&through.target, &target.target);
    if basis.is_empty() {
        return if target.is_zero_map() {
            Some(Morphism::zero(&through.target, &target.target))
        } else {
            None
        };
    }
    let composed: Vec<Morphism> = basis
        .iter()
        .map(|u| compose(u, through).expect("compose"))
        .collect();
    let coeffs = in_span(&composed, target)?;
    Some(combine(&basis, &coeffs))
}

/// Solve `through ∘ u = target` for `u`; both morphisms must share their
/// target.
pub fn factor_right(through: &Morphism, target: &Morphism) -> Option<Morphism> {
    assert!(through.target == target.target, "factor_right targets differ");
    let basis = hom_basis(&target.source, &through.source);
    if basis.is_empty() {
        return if target.is_zero_map() {
            Some(Morphism::zero(&target.source, &through.source))
        } else {
            None
        };
    }
    let composed: Vec<Morphism> = basis
        .iter()
        .map(|u| compose(through, u).expect("compose"))
        .collect();
    let coeffs = in_span(&composed, target)?;
    Some(combine(&basis, &coeffs))
}

/// A retraction `r` with `r ∘ incl = id`, if the inclusion splits as a
/// module map.
pub fn module_retraction(incl: &Morphism) -> Option<Morphism> {
    factor_left(incl, &Morphism::identity(&incl.source))
}

/// A section `s` with `p ∘ s = id`, if the surjection splits as a module map.
pub fn module_section(p: &Morphism) -> Option<Morphism> {
    factor_right(p, &Morphism::identity(&p.target))
}

/// Induced morphism on subrepresentations: requires `f(sub_a) ⊆ sub_b`.
pub fn restrict(f: &Morphism, sub_a: &SubRep, sub_b: &SubRep) -> Result<Morphism> {
    let field = f.field();
    let (ra, incl_a) = sub_a.to_rep();
    let (rb, incl_b) = sub_b.to_rep();
    let mut comps = Vec::new();
    for v in 0..f.source.quiver.vertices {
        let rhs = f.components[v].mul(&incl_a.components[v], field);
        let sol = incl_b.components[v].solve(&rhs, field).ok_or_else(|| {
            Error::InvalidInput("map does not carry the subrepresentation into the other".into())
        })?;
        comps.push(sol.particular);
    }
    Morphism::new(ra, rb, comps)
}

/// Induced morphism on quotients `A/U -> B/V`: requires `f(U) ⊆ V`.
pub fn descend(f: &Morphism, sub_a: &SubRep, sub_b: &SubRep) -> Result<Morphism> {
    let field = f.field();
    let (qa, proj_a) = super::quotient(&f.source, sub_a);
    let (qb, proj_b) = super::quotient(&f.target, sub_b);
    let mut comps = Vec::new();
    for v in 0..f.source.quiver.vertices {
        // g · proj_a = proj_b · f, solved by transposing
        let rhs = proj_b.components[v].mul(&f.components[v], field).transpose();
        let sol = proj_a.components[v]
            .transpose()
            .solve(&rhs, field)
            .ok_or_else(|| {
                Error::InvalidInput("map does not carry the subrepresentation into the other".into())
            })?;
        comps.push(sol.particular.transpose());
    }
    Morphism::new(qa, qb, comps)
}
