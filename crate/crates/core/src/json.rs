//! JSON wire formats.
//!
//! The serde-derived structs in the rest of the crate (suite and equivalence
//! reports) serialize directly. Quivers, representations, and morphisms go
//! through explicit DTOs instead, so that deserialization runs the same
//! validation as the ordinary constructors (acyclicity, matrix shapes,
//! commutation with the arrows) and malformed documents are rejected rather
//! than smuggled in. Vertices are 1-based on the wire, matching arrow
//! endpoints; matrices are row-major lists of rows keyed by arrow name in a
//! sorted map, so emitted documents are byte-deterministic.

use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};
use crate::normality::{BimorphismWitness, NormalMonoCertificate};
use crate::quiver::{Arrow, Quiver};
use crate::rep::{Morphism, Rep};
use crate::stable::{CriterionReport, StableHom, Witness};
use crate::verdict::Verdict;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDto {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDto {
    pub vertices: usize,
    pub arrows: Vec<ArrowDto>,
}

impl QuiverDto {
    pub fn of(q: &Quiver) -> QuiverDto {
        QuiverDto {
            vertices: q.vertices,
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowDto {
                    name: a.name.clone(),
                    from: a.from,
                    to: a.to,
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<Quiver> {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                from: a.from,
                to: a.to,
            })
            .collect();
        Quiver::new(self.vertices, arrows)
    }
}

/// A representation on the wire: dimension vector plus one matrix per arrow,
/// keyed by arrow name. Arrows with zero matrices may be omitted on input;
/// the optional `field` records the modulus and overrides the configured
/// default when present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<u64>,
    pub quiver: QuiverDto,
    pub dims: Vec<usize>,
    pub matrices: BTreeMap<String, Vec<Vec<u64>>>,
}

impl RepDto {
    pub fn of(rep: &Rep) -> RepDto {
        let mut matrices = BTreeMap::new();
        for (a, m) in rep.action.iter().enumerate() {
            matrices.insert(rep.quiver.arrows[a].name.clone(), mat_rows(m));
        }
        RepDto {
            field: Some(rep.field.modulus()),
            quiver: QuiverDto::of(&rep.quiver),
            dims: rep.dims.clone(),
            matrices,
        }
    }

    pub fn build(&self, default_field: Fp) -> Result<Rep> {
        let field = self.pick_field(default_field)?;
        let quiver = Arc::new(self.quiver.build()?);
        if self.dims.len() != quiver.vertices {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                self.dims.len(),
                quiver.vertices
            )));
        }
        for name in self.matrices.keys() {
            if quiver.arrow_index(name).is_none() {
                return Err(Error::InvalidInput(format!(
                    "matrix for unknown arrow {name:?}"
                )));
            }
        }
        let mut action = Vec::new();
        for a in 0..quiver.arrows.len() {
            let (s, t) = (quiver.src(a), quiver.tgt(a));
            match self.matrices.get(&quiver.arrows[a].name) {
                Some(rows) => action.push(Mat::from_rows(rows.clone(), self.dims[s])?),
                None => action.push(Mat::zero(self.dims[t], self.dims[s])),
            }
        }
        Rep::new(field, quiver, self.dims.clone(), action)
    }

    fn pick_field(&self, default_field: Fp) -> Result<Fp> {
        match self.field {
            Some(p) => Fp::new(p),
            None => Ok(default_field),
        }
    }
}

/// A morphism on the wire: both endpoint representations in full, plus one
/// component matrix per vertex (`target.dims[v] x source.dims[v]` rows).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDto {
    pub source: RepDto,
    pub target: RepDto,
    pub components: Vec<Vec<Vec<u64>>>,
}

impl MorphismDto {
    pub fn of(f: &Morphism) -> MorphismDto {
        MorphismDto {
            source: RepDto::of(&f.source),
            target: RepDto::of(&f.target),
            components: f.components.iter().map(mat_rows).collect(),
        }
    }

    pub fn build(&self, default_field: Fp) -> Result<Morphism> {
        let source = self.source.build(default_field)?;
        let target = self.target.build(default_field)?;
        if self.components.len() != source.quiver.vertices {
            return Err(Error::Shape(format!(
                "{} components for {} vertices",
                self.components.len(),
                source.quiver.vertices
            )));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(v, rows)| Mat::from_rows(rows.clone(), source.dims[v]))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(source, target, components)
    }
}

fn mat_rows(m: &Mat) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
        .collect()
}

/// Constructive evidence attached to a criterion verdict, self-contained on
/// the wire (morphism witnesses embed their endpoints). Interval endpoints
/// are 1-based here, like every other vertex reference in a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessDto {
    FactorsThroughProjective {
        through: RepDto,
        left: MorphismDto,
        right: MorphismDto,
    },
    Retraction {
        map: MorphismDto,
    },
    Section {
        map: MorphismDto,
    },
    Inverse {
        map: MorphismDto,
    },
    NonProjectiveKernel {
        kernel: RepDto,
    },
    NonSplitPushout {
        alpha: MorphismDto,
    },
    FailingInterval {
        lo: usize,
        hi: usize,
        reason: String,
    },
}

impl WitnessDto {
    pub fn of(w: &Witness) -> WitnessDto {
        match w {
            Witness::Factorization(f) => WitnessDto::FactorsThroughProjective {
                through: RepDto::of(&f.through),
                left: MorphismDto::of(&f.left),
                right: MorphismDto::of(&f.right),
            },
            Witness::Retraction(m) => WitnessDto::Retraction {
                map: MorphismDto::of(m),
            },
            Witness::Section(m) => WitnessDto::Section {
                map: MorphismDto::of(m),
            },
            Witness::Inverse(m) => WitnessDto::Inverse {
                map: MorphismDto::of(m),
            },
            Witness::NonProjectiveKernel(k) => WitnessDto::NonProjectiveKernel {
                kernel: RepDto::of(k),
            },
            Witness::NonSplitPushout(a) => WitnessDto::NonSplitPushout {
                alpha: MorphismDto::of(a),
            },
            Witness::FailingInterval { lo, hi, reason } => WitnessDto::FailingInterval {
                lo: lo + 1,
                hi: hi + 1,
                reason: reason.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionDto {
    pub verdict: bool,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

impl CriterionDto {
    pub fn of(r: &CriterionReport) -> CriterionDto {
        CriterionDto {
            verdict: r.verdict,
            method: r.method.as_str().to_string(),
            witness: r.witness.as_ref().map(WitnessDto::of),
        }
    }
}

/// Dimensions of a stable hom group together with the class of one morphism
/// in the quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableHomDto {
    pub dim_hom: usize,
    pub dim_trivial: usize,
    pub dim_stable: usize,
    pub class: Vec<u64>,
}

impl StableHomDto {
    pub fn of(space: &StableHom, f: &Morphism) -> Result<StableHomDto> {
        Ok(StableHomDto {
            dim_hom: space.dim_hom(),
            dim_trivial: space.trivial_dim(),
            dim_stable: space.quotient_dim(),
            class: space.project(f)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimorphismDto {
    pub projective: RepDto,
    pub envelope: RepDto,
    pub embedding: MorphismDto,
    pub quotient: MorphismDto,
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

impl BimorphismDto {
    pub fn of(w: &BimorphismWitness) -> BimorphismDto {
        BimorphismDto {
            projective: RepDto::of(&w.pair.projective),
            envelope: RepDto::of(&w.pair.envelope),
            embedding: MorphismDto::of(&w.pair.embedding),
            quotient: MorphismDto::of(&w.p),
            mono: w.mono,
            epi: w.epi,
            iso: w.iso,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDto {
    pub algebra: String,
    pub field: u64,
    pub abelian: bool,
    pub envelope_projective: bool,
    pub envelope_of_ring: RepDto,
    pub reasons: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BimorphismDto>,
}

impl VerdictDto {
    pub fn of(v: &Verdict) -> VerdictDto {
        VerdictDto {
            algebra: v.algebra.clone(),
            field: v.field,
            abelian: v.abelian,
            envelope_projective: v.envelope_projective,
            envelope_of_ring: RepDto::of(&v.envelope_of_ring),
            reasons: v.reasons.clone(),
            witness: v.witness.as_ref().map(BimorphismDto::of),
        }
    }
}

/// Certificate exhibiting a stable monomorphism as a kernel: the quotient by
/// the kernel of an epi representative, the projective envelope of that
/// kernel, and the induced map whose stable kernel recovers the class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub quotient: MorphismDto,
    pub envelope: RepDto,
    pub envelope_embedding: MorphismDto,
    pub induced: MorphismDto,
}

impl CertificateDto {
    pub fn of(c: &NormalMonoCertificate) -> CertificateDto {
        CertificateDto {
            quotient: MorphismDto::of(&c.p),
            envelope: RepDto::of(&c.envelope.rep),
            envelope_embedding: MorphismDto::of(&c.envelope.map),
            induced: MorphismDto::of(&c.fprime),
        }
    }
}

/// Outcome of a witness search: either the quotient-of-the-envelope
/// bimorphism, or the reason none can exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOutcomeDto {
    pub exists: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<BimorphismDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionDto {
    pub torsion: RepDto,
    pub inclusion: MorphismDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpDto {
    pub sharp: RepDto,
    pub projection: MorphismDto,
}
