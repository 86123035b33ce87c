//! The torsion theory that controls the stable category of a hereditary
//! algebra.
//!
//! For a module M over the path algebra, t(M) is the common kernel of all
//! homomorphisms M -> Λ into the regular module; equivalently the largest
//! submodule with no nonzero map to Λ. The quotient M^♯ = M / t(M) embeds in
//! a product of copies of Λ, and over a finite-dimensional hereditary algebra
//! it is projective — this module asserts that and fails loudly otherwise.
//!
//! M is a *stable* module when t(M) = M, i.e. Hom(M, Λ) = 0. Every module is
//! isomorphic in the stable category to its torsion part, because the
//! complement M^♯ is projective and hence vanishes there.

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rep::{self, descend, hom_basis, quotient, regular, restrict, Morphism, Rep, SubRep};

/// The torsion submodule t(M): intersection of the vertex-wise kernels of
/// every basis element of Hom(M, Λ).
pub fn torsion_submodule(m: &Rep) -> SubRep {
    let f = m.field;
    let (reg, _) = regular(f, &m.quiver);
    let basis = hom_basis(m, &reg);
    let mut spaces: Vec<Subspace> = m.dims.iter().map(|&d| Subspace::full(d)).collect();
    for h in &basis {
        for v in 0..m.quiver.vertices {
            let ker = Subspace::from_cols(&h.components[v].nullspace(f), f);
            spaces[v] = spaces[v].intersect(&ker, f);
        }
    }
    SubRep::new(m.clone(), spaces).expect("torsion part is a submodule")
}

/// Result of splitting M into its torsion part and projective quotient.
#[derive(Debug, Clone)]
pub struct TorsionSplit {
    /// t(M) realized as a representation.
    pub torsion: Rep,
    /// The inclusion t(M) -> M.
    pub incl: Morphism,
    /// M^♯ = M / t(M), a projective module.
    pub sharp: Rep,
    /// The projection M -> M^♯.
    pub proj: Morphism,
}

/// The projective quotient M^♯ = M / t(M) with its projection.
pub fn sharp(m: &Rep) -> (Rep, Morphism) {
    quotient(m, &torsion_submodule(m))
}

/// The restriction t(f): t(A) -> t(B). Well-defined for every morphism,
/// since composing with any linear form on the target gives one on the
/// source.
pub fn torsion_map(f: &Morphism) -> Result<Morphism> {
    restrict(
        f,
        &torsion_submodule(&f.source),
        &torsion_submodule(&f.target),
    )
}

/// The induced map on torsion-free quotients f^♯: A^♯ -> B^♯.
pub fn sharp_map(f: &Morphism) -> Result<Morphism> {
    descend(
        f,
        &torsion_submodule(&f.source),
        &torsion_submodule(&f.target),
    )
}

/// M has no nonzero homomorphism to the regular module.
pub fn is_stable_module(m: &Rep) -> bool {
    let (reg, _) = regular(m.field, &m.quiver);
    hom_basis(m, &reg).is_empty()
}

/// Split M canonically as `0 -> t(M) -> M -> M^♯ -> 0` and certify the two
/// defining properties: Hom(t(M), Λ) = 0 and M^♯ projective. Both hold for
/// every module over a finite-dimensional hereditary algebra; a failure means
/// the input is outside the supported class (or a bug) and is reported as
/// such rather than silently accepted.
pub fn canonical_split(m: &Rep) -> Result<TorsionSplit> {
    let t = torsion_submodule(m);
    let (torsion, incl) = t.to_rep();
    let (sharp_rep, proj) = quotient(m, &t);
    if !is_stable_module(&torsion) {
        return Err(Error::SplitAssertionFailed(format!(
            "torsion part of {} still maps to the regular module",
            m.describe()
        )));
    }
    if !rep::is_projective(&sharp_rep) {
        return Err(Error::SplitAssertionFailed(format!(
            "torsion-free quotient of {} is not projective",
            m.describe()
        )));
    }
    Ok(TorsionSplit {
        torsion,
        incl,
        sharp: sharp_rep,
        proj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::quiver::Quiver;
    use crate::rep::{inj_at, is_projective, proj_at, simple_at};
    use std::sync::Arc;

    fn f() -> Fp {
        Fp::default_field()
    }

    #[test]
    fn projectives_are_torsion_free() {
        let q = Arc::new(Quiver::an(3, "><").unwrap());
        for v in 0..3 {
            let p = proj_at(f(), &q, v);
            assert_eq!(torsion_submodule(&p).total_dim(), 0);
            let split = canonical_split(&p).unwrap();
            assert!(split.torsion.is_zero());
            assert_eq!(split.sharp, p);
        }
    }

    #[test]
    fn simple_socle_is_torsion_where_not_projective() {
        // 1 -> 2 <- 3: S_1 admits no map to Λ (nothing maps out of the top
        // of P_1 without hitting the radical), so S_1 is a stable module.
        let q = Arc::new(Quiver::an(3, "><").unwrap());
        let s1 = simple_at(f(), &q, 0);
        assert!(is_stable_module(&s1));
        let split = canonical_split(&s1).unwrap();
        assert_eq!(split.torsion.dims, vec![1, 0, 0]);
        assert!(split.sharp.is_zero());

        // S_2 = P_2 is projective, hence torsion-free
        let s2 = simple_at(f(), &q, 1);
        assert!(!is_stable_module(&s2));
        assert_eq!(torsion_submodule(&s2).total_dim(), 0);
    }

    #[test]
    fn middle_injective_is_entirely_torsion() {
        // I_2 over 1 -> 2 <- 3 admits no nonzero map to any P_v (each one
        // forces the middle coordinate to zero), so t(I_2) = I_2.
        let q = Arc::new(Quiver::an(3, "><").unwrap());
        let i2 = inj_at(f(), &q, 1);
        let split = canonical_split(&i2).unwrap();
        assert!(is_stable_module(&i2));
        assert_eq!(split.torsion.total_dim(), 3);
        assert!(split.sharp.is_zero());
    }

    #[test]
    fn equioriented_line_separates_the_two_ends() {
        // 1 -> 2 -> 3: I_1 = S_1 is a stable module, while I_3 = P_1 is
        // projective and therefore torsion-free.
        let q = Arc::new(Quiver::an(3, ">>").unwrap());
        let i1 = inj_at(f(), &q, 0);
        assert_eq!(i1.dims, vec![1, 0, 0]);
        assert!(is_stable_module(&i1));
        let i3 = inj_at(f(), &q, 2);
        assert!(is_projective(&i3));
        assert_eq!(torsion_submodule(&i3).total_dim(), 0);
    }

    #[test]
    fn mixed_module_splits() {
        // S_1 ⊕ P_1 over 1 -> 2 <- 3: torsion part S_1, sharp part P_1.
        let q = Arc::new(Quiver::an(3, "><").unwrap());
        let s1 = simple_at(f(), &q, 0);
        let p1 = proj_at(f(), &q, 0);
        let (sum, _, _) = rep::direct_sum(&[&s1, &p1]);
        let split = canonical_split(&sum).unwrap();
        assert_eq!(split.torsion.dims, vec![1, 0, 0]);
        assert_eq!(split.sharp.total_dim(), 2);
        assert!(is_projective(&split.sharp));
        assert!(!is_stable_module(&sum));
    }
}
