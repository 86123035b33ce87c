use super::{Fp, Mat};

/// A subspace of F_p^n held as its unique RREF row basis. Two `Subspace`
/// values are equal iff they denote the same subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Mat::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Mat, f: Fp) -> Subspace {
        let r = m.rref(f);
        let keep: Vec<usize> = (0..r.pivots.len()).collect();
        Subspace {
            ambient: m.cols(),
            basis: r.mat.take_rows(&keep),
            pivots: r.pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn from_cols(m: &Mat, f: Fp) -> Subspace {
        Subspace::from_rows(&m.transpose(), f)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical coset representative: subtract the pivot components.
    pub fn reduce(&self, v: &[u64], f: Fp) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c != 0 {
                for j in 0..self.ambient {
                    out[j] = f.sub(out[j], f.mul(c, self.basis.get(r, j)));
                }
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[u64], f: Fp) -> bool {
        self.reduce(v, f).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace, f: Fp) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|r| self.contains_vec(other.basis.row(r), f))
    }

    pub fn sum(&self, other: &Subspace, f: Fp) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_rows(&self.basis.vstack(&other.basis), f)
    }

    /// Intersection via annihilator duality: the row space of V equals the
    /// common kernel of the functionals given by a kernel basis of V.
    pub fn intersect(&self, other: &Subspace, f: Fp) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let ann_self = self.basis.nullspace(f).transpose();
        let ann_other = other.basis.nullspace(f).transpose();
        let stacked = ann_self.vstack(&ann_other);
        Subspace::from_cols(&stacked.nullspace(f), f)
    }

    /// Indices of the non-pivot coordinates: the canonical coordinates of the
    /// quotient F^n / V.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// The complement spanned by the non-pivot standard basis vectors.
    pub fn complement(&self) -> Subspace {
        let coords = self.complement_coords();
        let basis = Mat::from_fn(coords.len(), self.ambient, |r, c| u64::from(coords[r] == c));
        Subspace {
            ambient: self.ambient,
            pivots: coords,
            basis,
        }
    }

    /// Matrix of the canonical projection F^n -> F^n/V in quotient
    /// coordinates: reduce mod V, then read off the non-pivot entries.
    pub fn quotient_proj(&self, f: Fp) -> Mat {
        let coords = self.complement_coords();
        let mut m = Mat::zero(coords.len(), self.ambient);
        for (l, &cl) in coords.iter().enumerate() {
            m.set(l, cl, 1);
            for (r, &pc) in self.pivots.iter().enumerate() {
                m.set(l, pc, f.neg(self.basis.get(r, cl)));
            }
        }
        m
    }

    /// Section of `quotient_proj`: place quotient coordinates at the
    /// non-pivot positions. `quotient_proj * quotient_sect = id`.
    pub fn quotient_sect(&self) -> Mat {
        let coords = self.complement_coords();
        let mut m = Mat::zero(self.ambient, coords.len());
        for (l, &cl) in coords.iter().enumerate() {
            m.set(cl, l, 1);
        }
        m
    }
}
