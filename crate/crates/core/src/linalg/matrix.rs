use super::Fp;
use crate::error::{Error, Result};

/// Dense row-major matrix over F_p. Zero-row and zero-column shapes are
/// legal and show up constantly (vertex spaces of dimension 0).
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form plus its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

/// Particular solution of `A X = B` together with a canonical basis of
/// `{x : A x = 0}` stored column-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Mat,
    pub nullspace: Mat,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(fm, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(fm, "  {:?}", self.row(r))?;
        }
        write!(fm, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows of already-reduced entries; rejects ragged input.
    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Result<Mat> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            data.extend(r);
        }
        Ok(Mat {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_cols(cols: Vec<Vec<u64>>, rows: usize) -> Result<Mat> {
        let m = Mat::from_rows(cols, rows)?;
        Ok(m.transpose())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Mat {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Row-major flattening; the fixed coordinate convention for hom spaces.
    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat, f: Fp) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, rhs.get(k, j))));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat, f: Fp) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Mat, f: Fp) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: u64, f: Fp) -> Mat {
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self, f: Fp) -> Mat {
        self.scale(f.neg(1), f)
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.rows, rhs.rows, "hstack row count");
        let mut out = Mat::zero(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c));
            }
        }
        out
    }

    /// `[self; rhs]`.
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols, "vstack column count");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(ro + r, co + c, b.get(r, c));
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn take_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    pub fn take_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(idx.len(), self.cols, |r, c| self.get(idx[r], c))
    }

    /// Reduced row echelon form; the unique canonical form under row
    /// operations. Pivot search scans columns left to right and picks the
    /// first nonzero entry, so the output is deterministic.
    pub fn rref(&self, f: Fp) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            let Some(pr) = (lead..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, col));
            m.scale_row(lead, inv, f);
            for r in 0..m.rows {
                if r != lead {
                    let factor = m.get(r, col);
                    if factor != 0 {
                        m.axpy_row(r, lead, f.neg(factor), f);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == m.rows {
                break;
            }
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self, f: Fp) -> usize {
        self.rref(f).pivots.len()
    }

    /// Canonical basis of the right kernel `{x : A x = 0}`, one column per
    /// free coordinate of the RREF, ordered by free column index.
    pub fn nullspace(&self, f: Fp) -> Mat {
        let Rref { mat, pivots } = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(mat.get(r, fc)));
            }
        }
        out
    }

    /// Solve `A X = B` for all columns of `B` at once. The particular
    /// solution has zero entries in all free coordinates.
    pub fn solve(&self, b: &Mat, f: Fp) -> Option<Solution> {
        assert_eq!(self.rows, b.rows, "solve shape");
        let aug = self.hstack(b).rref(f);
        // A pivot in the augmented block certifies inconsistency.
        if aug.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.cols, b.cols);
        for (r, &pc) in aug.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.mat.get(r, self.cols + j));
            }
        }
        Some(Solution {
            particular: x,
            nullspace: self.nullspace(f),
        })
    }

    pub fn inverse(&self, f: Fp) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Mat::identity(self.rows), f)?;
        if sol.nullspace.cols() != 0 {
            return None;
        }
        Some(sol.particular)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (x, y) = (self.get(a, c), self.get(b, c));
            self.set(a, c, y);
            self.set(b, c, x);
        }
    }

    fn scale_row(&mut self, r: usize, s: u64, f: Fp) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, f.mul(v, s));
        }
    }

    /// row[r] += s * row[src]
    fn axpy_row(&mut self, r: usize, src: usize, s: u64, f: Fp) {
        for c in 0..self.cols {
            let v = f.add(self.get(r, c), f.mul(s, self.get(src, c)));
            self.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> Fp {
        Fp::new(101).unwrap()
    }

    #[test]
    fn rref_rank_one() {
        // [[1,2],[2,4]] reduces to [[1,2],[0,0]] with a single pivot.
        let m = Mat::from_rows(vec![vec![1, 2], vec![2, 4]], 2).unwrap();
        let r = m.rref(f101());
        assert_eq!(r.mat, Mat::from_rows(vec![vec![1, 2], vec![0, 0]], 2).unwrap());
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(m.rank(f101()), 1);
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Mat::identity(3);
        assert_eq!(id.rref(f101()).mat, id);
        let z = Mat::zero(2, 3);
        assert_eq!(z.rref(f101()).mat, z);
        assert!(z.rref(f101()).pivots.is_empty());
    }

    #[test]
    fn solve_underdetermined() {
        // x + y = 3 over F_101: particular (3,0); the canonical kernel vector
        // puts 1 in the free coordinate y, so it is (-1, 1) = (100, 1).
        let a = Mat::from_rows(vec![vec![1, 1]], 2).unwrap();
        let b = Mat::from_rows(vec![vec![3]], 1).unwrap();
        let s = a.solve(&b, f101()).unwrap();
        assert_eq!(s.particular, Mat::from_rows(vec![vec![3], vec![0]], 1).unwrap());
        assert_eq!(s.nullspace, Mat::from_rows(vec![vec![100], vec![1]], 1).unwrap());
    }

    #[test]
    fn solve_inconsistent() {
        let a = Mat::from_rows(vec![vec![1, 1], vec![1, 1]], 2).unwrap();
        let b = Mat::from_rows(vec![vec![1], vec![2]], 1).unwrap();
        assert!(a.solve(&b, f101()).is_none());
    }

    #[test]
    fn inverse_2x2() {
        let a = Mat::from_rows(vec![vec![2, 1], vec![1, 1]], 2).unwrap();
        let inv = a.inverse(f101()).unwrap();
        assert_eq!(inv, Mat::from_rows(vec![vec![1, 100], vec![100, 2]], 2).unwrap());
        assert_eq!(a.mul(&inv, f101()), Mat::identity(2));
        let sing = Mat::from_rows(vec![vec![1, 2], vec![2, 4]], 2).unwrap();
        assert!(sing.inverse(f101()).is_none());
    }

    #[test]
    fn empty_shapes() {
        let f = f101();
        let a = Mat::zero(0, 3);
        // A 0xN system is always consistent and its kernel is everything.
        let s = a.solve(&Mat::zero(0, 1), f).unwrap();
        assert_eq!(s.nullspace, Mat::identity(3));
        assert_eq!(s.particular, Mat::zero(3, 1));
        let b = Mat::zero(3, 0);
        assert_eq!(b.mul(&Mat::zero(0, 2), f), Mat::zero(3, 2));
        assert_eq!(Mat::zero(0, 0).rank(f), 0);
    }

    #[test]
    fn stacking() {
        let a = Mat::identity(2);
        let b = Mat::zero(2, 1);
        assert_eq!(a.hstack(&b).cols(), 3);
        assert_eq!(a.vstack(&a).rows(), 4);
        let d = Mat::block_diag(&[Mat::identity(1), Mat::zero(2, 3)]);
        assert_eq!((d.rows(), d.cols()), (3, 4));
        assert_eq!(d.get(0, 0), 1);
    }
}
