//! Deterministic exact linear algebra over the rationals.
//!
//! Everything here is dense and exact: Gauss-Jordan elimination with the
//! first nonzero pivot, the canonical nullspace basis (one vector per free
//! column, 1 at that column, 0 at the other free columns), and subspaces
//! kept as row-reduced basis matrices so equality of subspaces is
//! structural equality.

use std::fmt;

use num_traits::Zero;

use crate::coeff::Rational;

/// A dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, crate::coeff::int(1));
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix"
        );
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Row canonical form and the pivot columns, by exact Gauss-Jordan
    /// elimination. The pivot is always the first nonzero entry of the
    /// current column at or below the current row.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let pivot = m.get(pivot_row, col).clone();
            for c in col..m.cols {
                let v = m.get(pivot_row, c) / &pivot;
                m.set(pivot_row, c, v);
            }
            for other in 0..m.rows {
                if other == pivot_row || m.get(other, col).is_zero() {
                    continue;
                }
                let factor = m.get(other, col).clone();
                for c in col..m.cols {
                    let v = m.get(other, c) - &factor * m.get(pivot_row, c);
                    m.set(other, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// The canonical nullspace basis: one vector per free column `f`, in
    /// increasing order of `f`, with entry 1 at `f`, 0 at the other free
    /// columns, and `-rref[i][f]` at the pivot column of row `i`.
    pub fn nullspace_canonical(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = crate::coeff::int(1);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-vector product. Panics on dimension mismatch.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }
}

impl fmt::Display for ExactMatrix {
    /// Space-separated entries, `.` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                let v = self.get(r, c);
                if v.is_zero() {
                    write!(f, ".")?;
                } else {
                    write!(f, "{v}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A linear subspace, stored as a row-reduced basis so that two values are
/// equal exactly when they are the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
}

impl Subspace {
    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(vectors: &[Vec<Rational>], ambient: usize) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient, "dimension mismatch");
        }
        let (r, pivots) = ExactMatrix::from_rows(vectors.to_vec()).rref();
        let mut rows = r.row_vecs();
        rows.truncate(pivots.len());
        let basis = if rows.is_empty() {
            ExactMatrix::zero(0, ambient)
        } else {
            ExactMatrix::from_rows(rows)
        };
        Subspace { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Row-reduced basis vectors.
    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "dimension mismatch");
        let mut rem = v.to_vec();
        for i in 0..self.basis.rows() {
            // basis rows are reduced, so the leading entry is the pivot
            let p = (0..self.ambient)
                .find(|&c| !self.basis.get(i, c).is_zero())
                .expect("zero row in subspace basis");
            if rem[p].is_zero() {
                continue;
            }
            let factor = rem[p].clone();
            for c in 0..self.ambient {
                let v = &rem[c] - &factor * self.basis.get(i, c);
                rem[c] = v;
            }
        }
        rem.iter().all(Rational::is_zero)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "dimension mismatch");
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Subspace::span(&rows, self.ambient)
    }

    /// Intersection, via the kernel of the stacked-basis system: a vector
    /// lies in both spans exactly when some coefficient pair (alpha, beta)
    /// satisfies `alpha * A - beta * B = 0`. The dimension identity
    /// `dim(A) + dim(B) = dim(A + B) + dim(A meet B)` is asserted as a
    /// cross-check.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "dimension mismatch");
        let (k, l) = (self.dim(), other.dim());
        let mut stacked = ExactMatrix::zero(self.ambient, k + l);
        for i in 0..k {
            for j in 0..self.ambient {
                stacked.set(j, i, self.basis.get(i, j).clone());
            }
        }
        for i in 0..l {
            for j in 0..self.ambient {
                stacked.set(j, k + i, -other.basis.get(i, j).clone());
            }
        }
        let vectors: Vec<Vec<Rational>> = stacked
            .nullspace_canonical()
            .iter()
            .map(|coeffs| {
                (0..self.ambient)
                    .map(|j| {
                        (0..k)
                            .map(|i| &coeffs[i] * self.basis.get(i, j))
                            .fold(Rational::zero(), |acc, x| acc + x)
                    })
                    .collect()
            })
            .collect();
        let meet = Subspace::span(&vectors, self.ambient);
        debug_assert_eq!(
            meet.dim() + self.sum(other).dim(),
            self.dim() + other.dim(),
            "intersection dimension cross-check failed"
        );
        meet
    }
}
