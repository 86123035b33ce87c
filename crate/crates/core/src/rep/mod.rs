//! Representations of a finite acyclic quiver over F_p — equivalently,
//! finite-dimensional left modules over the path algebra — together with the
//! constructions the stable category needs: subrepresentations, quotients,
//! kernels, images, biproducts, pushouts, and short exact sequences.
//!
//! Conventions. A representation assigns `dims[v]` to each vertex and to each
//! arrow `a: s -> t` a matrix of shape `dims[t] x dims[s]` acting on column
//! vectors. A morphism is a per-vertex matrix family commuting with the
//! actions. Subspaces of vertex spaces are kept in canonical RREF form, so
//! every derived object (kernel, image, quotient, ...) is deterministic.

mod hom;
mod standard;
mod structure;

pub use hom::{
    combine, compose, descend, factor_left, factor_right, hom_basis, in_span, module_retraction,
    module_section, restrict,
};
pub use standard::{interval, interval_label, intervals, proj_at, inj_at, regular, simple_at};
pub use structure::{
    injective_envelope, is_injective, is_projective, projective_cover, radical, socle, top,
    Cover, Envelope,
};

use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat, Subspace};
use crate::quiver::{Path, Quiver};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub field: Fp,
    pub quiver: Arc<Quiver>,
    pub dims: Vec<usize>,
    /// One matrix per arrow, `dims[tgt] x dims[src]`.
    pub action: Vec<Mat>,
}

impl Rep {
    pub fn new(field: Fp, quiver: Arc<Quiver>, dims: Vec<usize>, action: Vec<Mat>) -> Result<Rep> {
        quiver.validate()?;
        if dims.len() != quiver.vertices {
            return Err(Error::Shape(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertices
            )));
        }
        if action.len() != quiver.arrows.len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} arrows",
                action.len(),
                quiver.arrows.len()
            )));
        }
        for (a, m) in action.iter().enumerate() {
            let (s, t) = (quiver.src(a), quiver.tgt(a));
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::Shape(format!(
                    "arrow {} wants {}x{}, got {}x{}",
                    quiver.arrows[a].name,
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.entries().iter().any(|&x| x >= field.modulus()) {
                return Err(Error::InvalidInput(format!(
                    "entry out of range for modulus {} on arrow {}",
                    field.modulus(),
                    quiver.arrows[a].name
                )));
            }
        }
        Ok(Rep {
            field,
            quiver,
            dims,
            action,
        })
    }

    pub fn zero_rep(field: Fp, quiver: Arc<Quiver>) -> Rep {
        let dims = vec![0; quiver.vertices];
        let action = (0..quiver.arrows.len()).map(|_| Mat::zero(0, 0)).collect();
        Rep {
            field,
            quiver,
            dims,
            action,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn same_context(&self, other: &Rep) -> bool {
        self.field == other.field && self.quiver == other.quiver
    }

    /// Action of a whole path (identity for the trivial path).
    pub fn act_path(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.dims[p.from]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m, self.field);
        }
        m
    }

    pub fn describe(&self) -> String {
        format!("{} dims {:?}", self.quiver.describe(), self.dims)
    }
}

/// Biproduct with canonical injections and projections.
pub fn direct_sum(parts: &[&Rep]) -> (Rep, Vec<Morphism>, Vec<Morphism>) {
    assert!(!parts.is_empty(), "direct_sum needs a context");
    let field = parts[0].field;
    let quiver = parts[0].quiver.clone();
    assert!(parts.iter().all(|r| r.same_context(parts[0])));
    let n = quiver.vertices;
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|r| r.dims[v]).sum()).collect();
    let action: Vec<Mat> = (0..quiver.arrows.len())
        .map(|a| Mat::block_diag(&parts.iter().map(|r| r.action[a].clone()).collect::<Vec<_>>()))
        .collect();
    let total = Rep {
        field,
        quiver,
        dims: dims.clone(),
        action,
    };
    let mut injs = Vec::new();
    let mut projs = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        let mut inj_comps = Vec::new();
        let mut proj_comps = Vec::new();
        for v in 0..n {
            let before: usize = parts[..k].iter().map(|r| r.dims[v]).sum();
            let mut inj = Mat::zero(dims[v], part.dims[v]);
            let mut prj = Mat::zero(part.dims[v], dims[v]);
            for i in 0..part.dims[v] {
                inj.set(before + i, i, 1);
                prj.set(i, before + i, 1);
            }
            inj_comps.push(inj);
            proj_comps.push(prj);
        }
        injs.push(Morphism::new((*part).clone(), total.clone(), inj_comps).unwrap());
        projs.push(Morphism::new(total.clone(), (*part).clone(), proj_comps).unwrap());
    }
    (total, injs, projs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: Rep,
    pub target: Rep,
    /// One matrix per vertex, `target.dims[v] x source.dims[v]`.
    pub components: Vec<Mat>,
}

impl Morphism {
    pub fn new(source: Rep, target: Rep, components: Vec<Mat>) -> Result<Morphism> {
        if !source.same_context(&target) {
            return Err(Error::InvalidInput(
                "morphism endpoints live over different quivers or fields".into(),
            ));
        }
        let q = &source.quiver;
        if components.len() != q.vertices {
            return Err(Error::Shape(format!(
                "{} components for {} vertices",
                components.len(),
                q.vertices
            )));
        }
        for v in 0..q.vertices {
            let c = &components[v];
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::Shape(format!(
                    "component at vertex {} wants {}x{}, got {}x{}",
                    v + 1,
                    target.dims[v],
                    source.dims[v],
                    c.rows(),
                    c.cols()
                )));
            }
            if c.entries().iter().any(|&x| x >= source.field.modulus()) {
                return Err(Error::InvalidInput("morphism entry out of range".into()));
            }
        }
        let f = source.field;
        for a in 0..q.arrows.len() {
            let (s, t) = (q.src(a), q.tgt(a));
            let lhs = components[t].mul(&source.action[a], f);
            let rhs = target.action[a].mul(&components[s], f);
            if lhs != rhs {
                return Err(Error::InvalidInput(format!(
                    "components do not commute with arrow {}",
                    q.arrows[a].name
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            components,
        })
    }

    pub fn identity(rep: &Rep) -> Morphism {
        let components = rep.dims.iter().map(|&d| Mat::identity(d)).collect();
        Morphism {
            source: rep.clone(),
            target: rep.clone(),
            components,
        }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Morphism {
        assert!(source.same_context(target));
        let components = (0..source.quiver.vertices)
            .map(|v| Mat::zero(target.dims[v], source.dims[v]))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            components,
        }
    }

    pub fn field(&self) -> Fp {
        self.source.field
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert!(self.source == other.source && self.target == other.target);
        let f = self.field();
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b, f))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.scale(self.field().neg(1)))
    }

    pub fn scale(&self, s: u64) -> Morphism {
        let f = self.field();
        let components = self.components.iter().map(|m| m.scale(s, f)).collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn is_zero_map(&self) -> bool {
        self.components.iter().all(Mat::is_zero)
    }

    pub fn is_vertexwise_injective(&self) -> bool {
        let f = self.field();
        self.components.iter().all(|c| c.rank(f) == c.cols())
    }

    pub fn is_vertexwise_surjective(&self) -> bool {
        let f = self.field();
        self.components.iter().all(|c| c.rank(f) == c.rows())
    }

    pub fn is_vertexwise_iso(&self) -> bool {
        self.components.iter().all(|c| c.rows() == c.cols()) && self.is_vertexwise_injective()
    }

    /// Fixed linearization: vertices in order, each component row-major.
    pub fn flatten(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for c in &self.components {
            out.extend_from_slice(c.entries());
        }
        out
    }

    pub fn from_flat(source: &Rep, target: &Rep, flat: &[u64]) -> Result<Morphism> {
        let mut components = Vec::new();
        let mut off = 0;
        for v in 0..source.quiver.vertices {
            let (r, c) = (target.dims[v], source.dims[v]);
            let mut m = Mat::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, flat[off + i * c + j]);
                }
            }
            off += r * c;
            components.push(m);
        }
        assert_eq!(off, flat.len(), "flat morphism length");
        Morphism::new(source.clone(), target.clone(), components)
    }
}

/// A subrepresentation: an arrow-closed family of subspaces of the parent's
/// vertex spaces, each in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubRep {
    pub parent: Rep,
    pub spaces: Vec<Subspace>,
}

impl SubRep {
    pub fn new(parent: Rep, spaces: Vec<Subspace>) -> Result<SubRep> {
        let f = parent.field;
        if spaces.len() != parent.quiver.vertices {
            return Err(Error::Shape("one subspace per vertex".into()));
        }
        for (v, s) in spaces.iter().enumerate() {
            if s.ambient() != parent.dims[v] {
                return Err(Error::Shape(format!(
                    "subspace at vertex {} has ambient {}, parent has {}",
                    v + 1,
                    s.ambient(),
                    parent.dims[v]
                )));
            }
        }
        for a in 0..parent.quiver.arrows.len() {
            let (s, t) = (parent.quiver.src(a), parent.quiver.tgt(a));
            let pushed = parent.action[a].mul(&spaces[s].basis().transpose(), f);
            let pushed = Subspace::from_cols(&pushed, f);
            if !spaces[t].contains(&pushed, f) {
                return Err(Error::InvalidInput(format!(
                    "subspaces not closed under arrow {}",
                    parent.quiver.arrows[a].name
                )));
            }
        }
        Ok(SubRep { parent, spaces })
    }

    pub fn zero(parent: &Rep) -> SubRep {
        let spaces = parent.dims.iter().map(|&d| Subspace::zero(d)).collect();
        SubRep {
            parent: parent.clone(),
            spaces,
        }
    }

    pub fn full(parent: &Rep) -> SubRep {
        let spaces = parent.dims.iter().map(|&d| Subspace::full(d)).collect();
        SubRep {
            parent: parent.clone(),
            spaces,
        }
    }

    /// Smallest subrepresentation containing the seed subspaces.
    pub fn closure(parent: &Rep, seeds: Vec<Subspace>) -> SubRep {
        let f = parent.field;
        let mut spaces = seeds;
        loop {
            let mut grew = false;
            for a in 0..parent.quiver.arrows.len() {
                let (s, t) = (parent.quiver.src(a), parent.quiver.tgt(a));
                let pushed = parent.action[a].mul(&spaces[s].basis().transpose(), f);
                let sum = spaces[t].sum(&Subspace::from_cols(&pushed, f), f);
                if sum.dim() > spaces[t].dim() {
                    spaces[t] = sum;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        SubRep::new(parent.clone(), spaces).expect("closure is arrow-closed")
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn contains(&self, other: &SubRep, f: Fp) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains(b, f))
    }

    /// Realize the subrepresentation as a representation in its own right,
    /// with the inclusion morphism. Basis: the RREF rows of each subspace.
    pub fn to_rep(&self) -> (Rep, Morphism) {
        let parent = &self.parent;
        let f = parent.field;
        let q = parent.quiver.clone();
        let dims: Vec<usize> = self.spaces.iter().map(Subspace::dim).collect();
        let incl_comps: Vec<Mat> = self.spaces.iter().map(|s| s.basis().transpose()).collect();
        let mut action = Vec::new();
        for a in 0..q.arrows.len() {
            let (s, t) = (q.src(a), q.tgt(a));
            let rhs = parent.action[a].mul(&incl_comps[s], f);
            let sol = incl_comps[t]
                .solve(&rhs, f)
                .expect("arrow-closed subrepresentation");
            action.push(sol.particular);
        }
        let rep = Rep::new(f, q, dims, action).expect("valid subrepresentation");
        let incl = Morphism::new(rep.clone(), parent.clone(), incl_comps)
            .expect("inclusion is a morphism");
        (rep, incl)
    }
}

/// Quotient by an arrow-closed subrepresentation, in canonical coordinates
/// (the non-pivot coordinates of each vertex subspace), with the projection.
pub fn quotient(parent: &Rep, sub: &SubRep) -> (Rep, Morphism) {
    assert_eq!(parent, &sub.parent, "quotient by a foreign subrepresentation");
    let f = parent.field;
    let q = parent.quiver.clone();
    let projs: Vec<Mat> = sub.spaces.iter().map(|s| s.quotient_proj(f)).collect();
    let sects: Vec<Mat> = sub.spaces.iter().map(Subspace::quotient_sect).collect();
    let dims: Vec<usize> = projs.iter().map(Mat::rows).collect();
    let mut action = Vec::new();
    for a in 0..q.arrows.len() {
        let (s, t) = (q.src(a), q.tgt(a));
        action.push(projs[t].mul(&parent.action[a], f).mul(&sects[s], f));
    }
    let rep = Rep::new(f, q, dims, action).expect("valid quotient representation");
    let proj =
        Morphism::new(parent.clone(), rep.clone(), projs).expect("projection is a morphism");
    (rep, proj)
}

pub fn kernel(m: &Morphism) -> SubRep {
    let f = m.field();
    let spaces = m
        .components
        .iter()
        .map(|c| Subspace::from_cols(&c.nullspace(f), f))
        .collect();
    SubRep::new(m.source.clone(), spaces).expect("kernels are arrow-closed")
}

pub fn image(m: &Morphism) -> SubRep {
    let f = m.field();
    let spaces = m.components.iter().map(|c| Subspace::from_cols(c, f)).collect();
    SubRep::new(m.target.clone(), spaces).expect("images are arrow-closed")
}

pub fn cokernel(m: &Morphism) -> (Rep, Morphism) {
    quotient(&m.target, &image(m))
}

/// Pushout of `f: A -> B` along `h: A -> Y`: the cokernel of `(f, -h)` into
/// the biproduct, with the two structure maps `B -> D` and `Y -> D`.
pub fn pushout(f: &Morphism, h: &Morphism) -> (Rep, Morphism, Morphism) {
    assert!(f.source == h.source, "pushout legs share a source");
    let (sum, injs, _) = direct_sum(&[&f.target, &h.target]);
    let field = f.field();
    let comps: Vec<Mat> = (0..sum.quiver.vertices)
        .map(|v| f.components[v].vstack(&h.components[v].neg(field)))
        .collect();
    let glue = Morphism::new(f.source.clone(), sum.clone(), comps).expect("glue morphism");
    let (d, pr) = cokernel(&glue);
    let from_b = compose(&pr, &injs[0]).expect("compose");
    let from_y = compose(&pr, &injs[1]).expect("compose");
    (d, from_b, from_y)
}

/// A short exact sequence `0 -> left -> mid -> right -> 0`.
#[derive(Debug, Clone)]
pub struct Ses {
    pub incl: Morphism,
    pub proj: Morphism,
}

impl Ses {
    pub fn new(incl: Morphism, proj: Morphism) -> Result<Ses> {
        if incl.target != proj.source {
            return Err(Error::Shape("sequence maps do not compose".into()));
        }
        if !incl.is_vertexwise_injective() {
            return Err(Error::InvalidInput("sequence start is not injective".into()));
        }
        if !proj.is_vertexwise_surjective() {
            return Err(Error::InvalidInput("sequence end is not surjective".into()));
        }
        let f = incl.field();
        let im = image(&incl);
        let ker = kernel(&proj);
        if !(im.contains(&ker, f) && ker.contains(&im, f)) {
            return Err(Error::InvalidInput("sequence is not exact in the middle".into()));
        }
        Ok(Ses { incl, proj })
    }

    pub fn left(&self) -> &Rep {
        &self.incl.source
    }

    pub fn mid(&self) -> &Rep {
        &self.incl.target
    }

    pub fn right(&self) -> &Rep {
        &self.proj.target
    }

    /// Kernel sequence of a vertex-wise surjection.
    pub fn of_epi(f: &Morphism) -> Result<Ses> {
        if !f.is_vertexwise_surjective() {
            return Err(Error::NotEpi);
        }
        let (_, incl) = kernel(f).to_rep();
        Ses::new(incl, f.clone())
    }

    /// Cokernel sequence of a vertex-wise injection.
    pub fn of_mono(f: &Morphism) -> Result<Ses> {
        if !f.is_vertexwise_injective() {
            return Err(Error::InvalidInput("not vertex-wise injective".into()));
        }
        let (_, proj) = cokernel(f);
        Ses::new(f.clone(), proj)
    }
}
