//! Decision by test objects: over a line quiver the interval modules exhaust
//! the indecomposables, so a stable class is monic / epic / split / invertible
//! exactly when the induced maps on stable hom groups against every interval
//! are injective / injective (contravariantly) / surjective / bijective.
//!
//! These sweeps are independent of the structural criteria in
//! [`super::criteria`]; the two are always compared when both apply, and a
//! disagreement is reported as a hard error rather than silently resolved.

use super::StableHom;
use crate::error::Result;
use crate::linalg::{Fp, Mat};
use crate::quiver::Quiver;
use crate::rep::{compose, intervals, Morphism, Rep};
use std::sync::Arc;

/// First interval on which a sweep failed, with the linear-algebra reason.
#[derive(Debug, Clone)]
pub struct OracleFailure {
    /// 0-based inclusive endpoints.
    pub lo: usize,
    pub hi: usize,
    pub reason: String,
}

pub struct IntervalOracle {
    pub field: Fp,
    pub quiver: Arc<Quiver>,
    pub members: Vec<(usize, usize, Rep)>,
}

impl IntervalOracle {
    /// Available only when the quiver underlying `f` is a line.
    pub fn for_morphism(f: &Morphism) -> Option<IntervalOracle> {
        IntervalOracle::for_quiver(f.source.field, &f.source.quiver)
    }

    pub fn for_quiver(field: Fp, quiver: &Arc<Quiver>) -> Option<IntervalOracle> {
        quiver.as_an_orientation()?;
        let members = intervals(field, quiver).expect("line quiver has intervals");
        Some(IntervalOracle {
            field,
            quiver: quiver.clone(),
            members,
        })
    }

    /// Matrix of `g ↦ f ∘ g : Hom(X, A) -> Hom(X, B)` on stable classes, in
    /// the canonical quotient coordinates of both sides.
    fn post_map(&self, f: &Morphism, x: &Rep) -> Result<Mat> {
        let sxa = StableHom::new(x, &f.source)?;
        let sxb = StableHom::new(x, &f.target)?;
        let cols: Vec<Vec<u64>> = sxa
            .basis
            .iter()
            .map(|g| sxb.project(&compose(f, g)?))
            .collect::<Result<_>>()?;
        let full = Mat::from_cols(cols, sxb.quotient_dim())?;
        Ok(full.mul(&sxa.trivial.quotient_sect(), self.field))
    }

    /// Matrix of `g ↦ g ∘ f : Hom(B, X) -> Hom(A, X)` on stable classes.
    fn pre_map(&self, f: &Morphism, x: &Rep) -> Result<Mat> {
        let sbx = StableHom::new(&f.target, x)?;
        let sax = StableHom::new(&f.source, x)?;
        let cols: Vec<Vec<u64>> = sbx
            .basis
            .iter()
            .map(|g| sax.project(&compose(g, f)?))
            .collect::<Result<_>>()?;
        let full = Mat::from_cols(cols, sax.quotient_dim())?;
        Ok(full.mul(&sbx.trivial.quotient_sect(), self.field))
    }

    pub fn mono(&self, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let m = self.post_map(f, x)?;
            if m.nullspace(self.field).cols() > 0 {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "postcomposition kills a nonzero stable class".into(),
                }));
            }
        }
        Ok(None)
    }

    pub fn epi(&self, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let m = self.pre_map(f, x)?;
            if m.nullspace(self.field).cols() > 0 {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "precomposition kills a nonzero stable class".into(),
                }));
            }
        }
        Ok(None)
    }

    pub fn split_epi(&self, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let m = self.post_map(f, x)?;
            if m.rank(self.field) < m.rows() {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "postcomposition misses a stable class".into(),
                }));
            }
        }
        Ok(None)
    }

    pub fn split_mono(&self, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let m = self.pre_map(f, x)?;
            if m.rank(self.field) < m.rows() {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "precomposition misses a stable class".into(),
                }));
            }
        }
        Ok(None)
    }

    pub fn iso(&self, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let m = self.post_map(f, x)?;
            if m.nullspace(self.field).cols() > 0 || m.rank(self.field) < m.rows() {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "postcomposition is not bijective on stable classes".into(),
                }));
            }
        }
        Ok(None)
    }

    /// Sweep for the cokernel universal property of `f: A -> B` against the
    /// kernel inclusion `k: K -> A`: for every interval `X`, precomposition
    /// with the class of `f` must be injective (unique factorizations) and
    /// must reach every class `A -> X` that the class of `k` kills
    /// (existence).
    pub fn cokernel_property(&self, k: &Morphism, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, x) in &self.members {
            let pre_f = self.pre_map(f, x)?;
            let pre_k = self.pre_map(k, x)?;
            if pre_f.nullspace(self.field).cols() > 0 {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "factorizations through the map are not unique".into(),
                }));
            }
            let killed = pre_k.nullspace(self.field);
            if killed.cols() > 0 && pre_f.solve(&killed, self.field).is_none() {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "a class annihilating the kernel does not factor through the map"
                        .into(),
                }));
            }
        }
        Ok(None)
    }

    /// Sweep for the kernel universal property of `k: W -> A` against
    /// `f: A -> B` (the composite class is assumed zero): for every interval
    /// `Y`, postcomposition with the class of `k` must be injective and must
    /// reach every class `Y -> A` that the class of `f` kills.
    pub fn kernel_property(&self, k: &Morphism, f: &Morphism) -> Result<Option<OracleFailure>> {
        for (lo, hi, y) in &self.members {
            let post_k = self.post_map(k, y)?;
            let post_f = self.post_map(f, y)?;
            if post_k.nullspace(self.field).cols() > 0 {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason: "factorizations through the candidate kernel are not unique".into(),
                }));
            }
            let killed = post_f.nullspace(self.field);
            if killed.cols() > 0 && post_k.solve(&killed, self.field).is_none() {
                return Ok(Some(OracleFailure {
                    lo: *lo,
                    hi: *hi,
                    reason:
                        "a class killed by the map does not factor through the candidate kernel"
                            .into(),
                }));
            }
        }
        Ok(None)
    }

    /// A morphism `g: B -> X` into an interval whose stable class is nonzero
    /// but which annihilates the class of `f` — a counterexample to `f` being
    /// an epimorphism, if one exists.
    pub fn nonzero_annihilator(
        &self,
        f: &Morphism,
    ) -> Result<Option<(usize, usize, Morphism)>> {
        for (lo, hi, x) in &self.members {
            let sbx = StableHom::new(&f.target, x)?;
            let m = self.pre_map(f, x)?;
            let null = m.nullspace(self.field);
            if null.cols() > 0 {
                let class = null.col(0);
                let g = sbx.from_class(&class);
                debug_assert!(!sbx.is_trivial(&g)?);
                let sax = StableHom::new(&f.source, x)?;
                debug_assert!(sax.is_trivial(&compose(&g, f)?)?);
                return Ok(Some((*lo, *hi, g)));
            }
        }
        Ok(None)
    }

    /// All the stable classes `B -> X` for each interval `X`, as canonical
    /// representatives; used by cokernel-style universal-property checks.
    pub fn class_reps_into(&self, b: &Rep) -> Result<Vec<(usize, usize, Vec<Morphism>)>> {
        let mut out = Vec::new();
        for (lo, hi, x) in &self.members {
            let sbx = StableHom::new(b, x)?;
            let qd = sbx.quotient_dim();
            let mut reps = Vec::new();
            for l in 0..qd {
                let mut class = vec![0u64; qd];
                class[l] = 1;
                reps.push(sbx.from_class(&class));
            }
            out.push((*lo, *hi, reps));
        }
        Ok(out)
    }

    /// Stable hom dimension table against all intervals, for reports.
    pub fn hom_profile(&self, m: &Rep) -> Result<Vec<((usize, usize), usize, usize)>> {
        let mut out = Vec::new();
        for (lo, hi, x) in &self.members {
            let from = StableHom::new(x, m)?.quotient_dim();
            let into = StableHom::new(m, x)?.quotient_dim();
            out.push(((*lo, *hi), from, into));
        }
        Ok(out)
    }
}

