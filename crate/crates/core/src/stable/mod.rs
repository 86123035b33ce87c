//! The projectively stable category: hom groups modulo maps factoring
//! through a projective, decision procedures for mono/epi/split/iso, and
//! constructive witnesses.
//!
//! The workhorse is [`StableHom`], which fixes a basis of Hom(A, B) and the
//! subspace of *trivial* maps — those factoring through a projective. A map
//! factors through a projective iff it factors through the projective cover
//! of its target (lift the projective leg over the cover), so the trivial
//! subspace is spanned by `cover_B ∘ g` for `g` running over a basis of
//! Hom(A, Q_B). Stable hom groups are quotients in these coordinates, and
//! every decision below reduces to exact linear algebra in them.

mod criteria;
mod oracle;

pub use criteria::{
    is_stable_epi, is_stable_iso, is_stable_mono, is_stable_split_epi, is_stable_split_mono,
    is_stable_zero, CriterionReport, Method, Witness,
};
pub use oracle::{IntervalOracle, OracleFailure};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::rep::{
    combine, compose, direct_sum, hom_basis, in_span, kernel, projective_cover, pushout,
    Morphism, Rep,
};

/// A factorization `right ∘ left` of a morphism through the module `through`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub through: Rep,
    pub left: Morphism,
    pub right: Morphism,
}

/// Hom(A, B) together with the subspace of maps factoring through a
/// projective, in the coordinates of the canonical hom basis.
pub struct StableHom {
    pub source: Rep,
    pub target: Rep,
    pub basis: Vec<Morphism>,
    trivial: Subspace,
    cover: crate::rep::Cover,
    cover_precompositions: Vec<Morphism>,
}

impl StableHom {
    pub fn new(a: &Rep, b: &Rep) -> Result<StableHom> {
        let basis = hom_basis(a, b);
        let cover = projective_cover(b)?;
        let through_cover = hom_basis(a, &cover.rep);
        let f = a.field;
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut cover_precompositions = Vec::new();
        for g in &through_cover {
            let t = compose(&cover.map, g)?;
            let coords = in_span(&basis, &t)
                .ok_or_else(|| Error::Internal("trivial map outside hom space".into()))?;
            rows.push(coords);
            cover_precompositions.push(t);
        }
        let gen = Mat::from_rows(rows, basis.len())?;
        let trivial = Subspace::from_rows(&gen, f);
        Ok(StableHom {
            source: a.clone(),
            target: b.clone(),
            basis,
            trivial,
            cover,
            cover_precompositions,
        })
    }

    pub fn dim_hom(&self) -> usize {
        self.basis.len()
    }

    pub fn trivial_dim(&self) -> usize {
        self.trivial.dim()
    }

    /// Dimension of the stable hom group Hom(A, B) / (maps through projectives).
    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.trivial.dim()
    }

    /// Spanning set of the trivial subspace, as morphisms.
    pub fn trivial_generators(&self) -> &[Morphism] {
        &self.cover_precompositions
    }

    /// Coordinates of `f` in the hom basis; errors if `f` is not a morphism
    /// A -> B (shape or commutation failure shows up as unsolvability).
    pub fn coords(&self, f: &Morphism) -> Result<Vec<u64>> {
        if f.source != self.source || f.target != self.target {
            return Err(Error::Shape("morphism belongs to a different hom space".into()));
        }
        in_span(&self.basis, f)
            .ok_or_else(|| Error::Internal("morphism outside its own hom space".into()))
    }

    /// Is the stable class of `f` zero?
    pub fn is_trivial(&self, f: &Morphism) -> Result<bool> {
        let c = self.coords(f)?;
        Ok(self.trivial.contains_vec(&c, self.source.field))
    }

    /// Coordinates of the stable class of `f`: reduce modulo the trivial
    /// subspace and keep the complementary (non-pivot) coordinates.
    pub fn project(&self, f: &Morphism) -> Result<Vec<u64>> {
        let c = self.coords(f)?;
        Ok(self.project_coords(&c))
    }

    pub(crate) fn project_coords(&self, coords: &[u64]) -> Vec<u64> {
        let f = self.source.field;
        let proj = self.trivial.quotient_proj(f);
        let col = Mat::from_cols(vec![coords.to_vec()], coords.len()).expect("coords column");
        proj.mul(&col, f).col(0)
    }

    /// A morphism representing the stable class with the given quotient
    /// coordinates (the canonical section).
    pub fn from_class(&self, class: &[u64]) -> Morphism {
        if self.basis.is_empty() {
            return Morphism::zero(&self.source, &self.target);
        }
        let sect = self.trivial.quotient_sect();
        let f = self.source.field;
        let col = Mat::from_cols(vec![class.to_vec()], class.len()).expect("class column");
        let coords = sect.mul(&col, f).col(0);
        combine(&self.basis, &coords)
    }

    /// If the stable class of `f` is zero, produce an explicit factorization
    /// through the projective cover of the target.
    pub fn factorization(&self, f: &Morphism) -> Result<Option<Factorization>> {
        if !self.is_trivial(f)? {
            return Ok(None);
        }
        let through_cover = hom_basis(&self.source, &self.cover.rep);
        if through_cover.is_empty() {
            // only the zero map is trivial here
            return Ok(Some(Factorization {
                through: self.cover.rep.clone(),
                left: Morphism::zero(&self.source, &self.cover.rep),
                right: self.cover.map.clone(),
            }));
        }
        let coeffs = in_span(&self.cover_precompositions, f)
            .ok_or_else(|| Error::Internal("trivial map did not factor over the cover".into()))?;
        let left = combine(&through_cover, &coeffs);
        Ok(Some(Factorization {
            through: self.cover.rep.clone(),
            left,
            right: self.cover.map.clone(),
        }))
    }
}

/// The kernel of the stable class of `f`, as an inclusion. Over a hereditary
/// algebra the quotient functor preserves kernels, so the vertex-wise kernel
/// inclusion represents ker of the stable class for every morphism.
pub fn stable_kernel(f: &Morphism) -> (Rep, Morphism) {
    kernel(f).to_rep()
}

/// A vertex-surjective morphism in the same stable class: `[f | q] : A ⊕ Q_B -> B`
/// with `q` the projective cover of B. The added summand is projective, so the
/// source is unchanged in the stable category.
pub fn epi_representative(f: &Morphism) -> Morphism {
    let cover = projective_cover(&f.target).expect("cover exists");
    let (sum, _, _) = direct_sum(&[&f.source, &cover.rep]);
    let comps: Vec<Mat> = (0..f.source.quiver.vertices)
        .map(|v| f.components[v].hstack(&cover.map.components[v]))
        .collect();
    Morphism::new(sum, f.target.clone(), comps).expect("padded morphism")
}

/// Given a vertex-surjective `f: A -> B` and any `h: A -> Y`, decide whether
/// the structure map `B -> D` of the pushout of `(f, h)` lifts through the
/// pushed-out epimorphism `Y -> D`, and return the lift `s: B -> Y`.
///
/// When the codomain of `h` is projective, a lift exists for every `h` iff
/// the stable class of `f` is an epimorphism; a lift also certifies that the
/// stable class of the structure map `B -> D` is zero.
pub fn pushout_lift(f: &Morphism, h: &Morphism) -> Result<Option<Morphism>> {
    if !f.is_vertexwise_surjective() {
        return Err(Error::NotEpi);
    }
    if f.source != h.source {
        return Err(Error::Shape("lift legs must share a source".into()));
    }
    let (_, from_b, from_y) = pushout(f, h);
    let basis = hom_basis(&f.target, &h.target);
    if basis.is_empty() {
        return Ok(if from_b.is_zero_map() {
            Some(Morphism::zero(&f.target, &h.target))
        } else {
            None
        });
    }
    let pushed: Vec<Morphism> = basis
        .iter()
        .map(|s| compose(&from_y, s).expect("compose"))
        .collect();
    match in_span(&pushed, &from_b) {
        Some(coeffs) => Ok(Some(combine(&basis, &coeffs))),
        None => Ok(None),
    }
}

/// Certificate that the stable class of `f` is *not* an epimorphism.
#[derive(Debug)]
pub struct EpiFailure {
    /// Interval (0-based, inclusive) supporting the failing test object.
    pub interval: (usize, usize),
    /// `g: B -> X` with nonzero stable class annihilating the class of `f`.
    pub test_map: Morphism,
    /// Vertex-surjective representative of the class of `f`.
    pub representative: Morphism,
    /// `h: source(representative) -> Q` with projective codomain such that
    /// the pushout of `(representative, h)` admits no diagonal lift — the
    /// concrete sense in which `f` fails to be an epimorphism.
    pub probe: Morphism,
}

/// Search the interval family for a witness that the stable class of `f` is
/// not an epimorphism. Only available over line quivers, where the intervals
/// exhaust the indecomposables.
pub fn epi_witness(f: &Morphism) -> Result<EpiFailure> {
    let oracle = IntervalOracle::for_morphism(f).ok_or_else(|| {
        Error::InvalidInput(format!(
            "witness search needs the interval family; {} is not a line quiver",
            f.source.quiver.describe()
        ))
    })?;
    let (lo, hi, g) = match oracle.nonzero_annihilator(f)? {
        Some(found) => found,
        None => return Err(Error::IsActuallyEpi),
    };
    let representative = if f.is_vertexwise_surjective() {
        f.clone()
    } else {
        epi_representative(f)
    };
    // g ∘ representative is stably zero (the padding lands in a projective),
    // so it factors through the cover of X; the projective leg is the probe.
    let composite = compose(&g, &representative)?;
    let sh = StableHom::new(&representative.source, &g.target)?;
    let fact = sh.factorization(&composite)?.ok_or_else(|| {
        Error::Internal("annihilating composite is not stably zero".into())
    })?;
    let probe = fact.left;
    if pushout_lift(&representative, &probe)?.is_some() {
        return Err(Error::Internal(
            "lift exists against a certified non-epimorphism".into(),
        ));
    }
    Ok(EpiFailure {
        interval: (lo, hi),
        test_map: g,
        representative,
        probe,
    })
}
