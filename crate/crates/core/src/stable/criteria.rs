//! Decision procedures for the stable class of a morphism: zero, mono, epi,
//! split mono, split epi, iso.
//!
//! Each decision runs every route that applies and demands agreement:
//!
//! * a *structural* criterion in terms of kernels, torsion, and module-level
//!   splittings (valid over any finite-dimensional hereditary algebra);
//! * a *definitional* solve, where the defining equation (e.g. `g∘f ≡ id`
//!   modulo maps through projectives) is solved by exact linear algebra;
//! * over line quivers, the *interval sweep* of [`super::IntervalOracle`].
//!
//! Disagreement between any two routes is a counterexample to a theorem this
//! library is built on, so it aborts with a mismatch error rather than a
//! verdict.

use super::{Factorization, IntervalOracle, StableHom};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rep::{
    combine, compose, hom_basis, image, in_span, is_projective, kernel, module_retraction,
    Morphism, Rep, SubRep,
};
use crate::torsion::torsion_submodule;

/// Which decision routes produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Structural / definitional criteria only (no interval family available).
    FastPath,
    /// Interval sweep only.
    Oracle,
    /// Structural criteria and interval sweep, in agreement.
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FastPath => "fast-path",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

/// Constructive evidence attached to a verdict.
#[derive(Debug)]
pub enum Witness {
    /// The morphism is stably zero: an explicit factorization through a
    /// projective.
    Factorization(Factorization),
    /// Left inverse modulo projectives (split mono).
    Retraction(Morphism),
    /// Right inverse modulo projectives (split epi).
    Section(Morphism),
    /// Two-sided inverse modulo projectives (iso).
    Inverse(Morphism),
    /// The vertex-wise kernel, which fails to be projective (mono failure).
    NonProjectiveKernel(Rep),
    /// A map from the kernel into a projective that does not extend over the
    /// kernel inclusion, so pushing the sequence out along it cannot split
    /// (normal-epi failure).
    NonSplitPushout(Morphism),
    /// Interval test object on which the sweep failed.
    FailingInterval { lo: usize, hi: usize, reason: String },
}

#[derive(Debug)]
pub struct CriterionReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

fn merge_oracle(
    what: &str,
    f: &Morphism,
    structural: bool,
    witness: &mut Option<Witness>,
    sweep: Result<Option<super::OracleFailure>>,
) -> Result<Method> {
    let sweep = sweep?;
    let oracle_verdict = sweep.is_none();
    if oracle_verdict != structural {
        return Err(Error::OracleMismatch(format!(
            "{}: structural criterion says {}, interval sweep says {} for a morphism {} -> {}",
            what,
            structural,
            oracle_verdict,
            f.source.describe(),
            f.target.describe()
        )));
    }
    if let Some(fail) = sweep {
        *witness = Some(Witness::FailingInterval {
            lo: fail.lo,
            hi: fail.hi,
            reason: fail.reason,
        });
    }
    Ok(Method::Both)
}

/// Image of a subrepresentation under a morphism, as a subrepresentation of
/// the target.
fn pushforward(f: &Morphism, sub: &SubRep) -> SubRep {
    let field = f.field();
    let spaces: Vec<Subspace> = (0..f.source.quiver.vertices)
        .map(|v| {
            let cols = f.components[v].mul(&sub.spaces[v].basis().transpose(), field);
            Subspace::from_cols(&cols, field)
        })
        .collect();
    SubRep::new(f.target.clone(), spaces).expect("image of a submodule is a submodule")
}

/// Is the stable class of `f` the zero morphism? The verdict comes with an
/// explicit factorization through the projective cover of the target.
pub fn is_stable_zero(f: &Morphism) -> Result<CriterionReport> {
    let sh = StableHom::new(&f.source, &f.target)?;
    let verdict = sh.is_trivial(f)?;
    let witness = if verdict {
        sh.factorization(f)?.map(Witness::Factorization)
    } else {
        None
    };
    Ok(CriterionReport {
        verdict,
        method: Method::FastPath,
        witness,
    })
}

/// Monomorphism test: the vertex-wise kernel must be projective.
pub fn is_stable_mono(f: &Morphism) -> Result<CriterionReport> {
    let (ker_rep, _) = kernel(f).to_rep();
    let verdict = is_projective(&ker_rep);
    let mut witness = if verdict {
        None
    } else {
        Some(Witness::NonProjectiveKernel(ker_rep))
    };
    let mut method = Method::FastPath;
    if let Some(oracle) = IntervalOracle::for_morphism(f) {
        method = merge_oracle("mono", f, verdict, &mut witness, oracle.mono(f))?;
    }
    Ok(CriterionReport {
        verdict,
        method,
        witness,
    })
}

/// Epimorphism test: the torsion part of the target must land inside the
/// image of the torsion part of the source.
pub fn is_stable_epi(f: &Morphism) -> Result<CriterionReport> {
    let field = f.field();
    let t_source = torsion_submodule(&f.source);
    let t_target = torsion_submodule(&f.target);
    let hit = pushforward(f, &t_source);
    let verdict = hit.contains(&t_target, field);
    let mut witness = None;
    let mut method = Method::FastPath;
    if let Some(oracle) = IntervalOracle::for_morphism(f) {
        method = merge_oracle("epi", f, verdict, &mut witness, oracle.epi(f))?;
    }
    Ok(CriterionReport {
        verdict,
        method,
        witness,
    })
}

/// Split epimorphism test. Structural route: the kernel is a module-split
/// summand of the source and the torsion of the target lies in the image.
/// Definitional route: solve `f ∘ s ≡ id` modulo trivial maps.
pub fn is_stable_split_epi(f: &Morphism) -> Result<CriterionReport> {
    let field = f.field();
    let (_, ker_incl) = kernel(f).to_rep();
    let summand = module_retraction(&ker_incl).is_some();
    let torsion_hit = image(f).contains(&torsion_submodule(&f.target), field);
    let structural = summand && torsion_hit;

    let section = section_modulo_trivial(f)?;
    if section.is_some() != structural {
        return Err(Error::OracleMismatch(format!(
            "split-epi: structural criterion says {}, definitional solve says {} for a morphism {} -> {}",
            structural,
            section.is_some(),
            f.source.describe(),
            f.target.describe()
        )));
    }

    let mut witness = section.map(Witness::Section);
    let mut method = Method::FastPath;
    if let Some(oracle) = IntervalOracle::for_morphism(f) {
        method = merge_oracle("split-epi", f, structural, &mut witness, oracle.split_epi(f))?;
    }
    Ok(CriterionReport {
        verdict: structural,
        method,
        witness,
    })
}

/// Split monomorphism test, decided by the definitional solve
/// `g ∘ f ≡ id` modulo trivial maps.
pub fn is_stable_split_mono(f: &Morphism) -> Result<CriterionReport> {
    let retraction = retraction_modulo_trivial(f)?;
    let verdict = retraction.is_some();
    let mut witness = retraction.map(Witness::Retraction);
    let mut method = Method::FastPath;
    if let Some(oracle) = IntervalOracle::for_morphism(f) {
        method = merge_oracle("split-mono", f, verdict, &mut witness, oracle.split_mono(f))?;
    }
    Ok(CriterionReport {
        verdict,
        method,
        witness,
    })
}

/// Isomorphism test. Structural route: projective kernel, module-split kernel
/// inclusion, and the torsion of the target inside the image. Definitional
/// route: two-sided invertibility modulo trivial maps.
pub fn is_stable_iso(f: &Morphism) -> Result<CriterionReport> {
    let field = f.field();
    let (ker_rep, ker_incl) = kernel(f).to_rep();
    let structural = is_projective(&ker_rep)
        && module_retraction(&ker_incl).is_some()
        && image(f).contains(&torsion_submodule(&f.target), field);

    let section = section_modulo_trivial(f)?;
    let retraction = retraction_modulo_trivial(f)?;
    let definitional = section.is_some() && retraction.is_some();
    if definitional != structural {
        return Err(Error::OracleMismatch(format!(
            "iso: structural criterion says {}, definitional solve says {} for a morphism {} -> {}",
            structural,
            definitional,
            f.source.describe(),
            f.target.describe()
        )));
    }

    // a one-sided inverse of an isomorphism is the inverse
    let mut witness = if structural { section.map(Witness::Inverse) } else { None };
    let mut method = Method::FastPath;
    if let Some(oracle) = IntervalOracle::for_morphism(f) {
        method = merge_oracle("iso", f, structural, &mut witness, oracle.iso(f))?;
    }
    Ok(CriterionReport {
        verdict: structural,
        method,
        witness,
    })
}

/// `s: B -> A` with `f ∘ s ≡ id_B` modulo trivial maps, if one exists.
fn section_modulo_trivial(f: &Morphism) -> Result<Option<Morphism>> {
    let shb = StableHom::new(&f.target, &f.target)?;
    let basis = hom_basis(&f.target, &f.source);
    let through: Vec<Morphism> = basis
        .iter()
        .map(|s| compose(f, s))
        .collect::<Result<_>>()?;
    let id = Morphism::identity(&f.target);
    Ok(solve_one_sided(
        &through,
        &basis,
        shb.trivial_generators(),
        &id,
        &f.target,
        &f.source,
    ))
}

/// `g: B -> A` with `g ∘ f ≡ id_A` modulo trivial maps, if one exists.
fn retraction_modulo_trivial(f: &Morphism) -> Result<Option<Morphism>> {
    let sha = StableHom::new(&f.source, &f.source)?;
    let basis = hom_basis(&f.target, &f.source);
    let through: Vec<Morphism> = basis
        .iter()
        .map(|g| compose(g, f))
        .collect::<Result<_>>()?;
    let id = Morphism::identity(&f.source);
    Ok(solve_one_sided(
        &through,
        &basis,
        sha.trivial_generators(),
        &id,
        &f.target,
        &f.source,
    ))
}

/// Solve `id ≡ Σ c_j through[j]` modulo the trivial maps, returning the
/// corresponding combination of `lifts` (a morphism B -> A). When the hom
/// space of lifts is zero but the identity is spanned by trivial maps — a
/// projective endpoint — the zero morphism is a valid witness.
fn solve_one_sided(
    through: &[Morphism],
    lifts: &[Morphism],
    trivial: &[Morphism],
    id: &Morphism,
    lift_source: &Rep,
    lift_target: &Rep,
) -> Option<Morphism> {
    debug_assert_eq!(through.len(), lifts.len());
    let mut cands: Vec<Morphism> = through.to_vec();
    cands.extend_from_slice(trivial);
    if cands.is_empty() {
        return if id.is_zero_map() {
            Some(Morphism::zero(lift_source, lift_target))
        } else {
            None
        };
    }
    let coeffs = in_span(&cands, id)?;
    if lifts.is_empty() {
        return Some(Morphism::zero(lift_source, lift_target));
    }
    Some(combine(lifts, &coeffs[..lifts.len()]))
}
