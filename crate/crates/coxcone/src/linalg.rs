//! Small dense exact linear algebra over [`Scalar`].
//!
//! Matrices here are tiny (rank × rank) except in the nullspace computation
//! for deformation cones, which streams rows through [`RankAccumulator`].

use crate::field::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// Plain coordinate dot product (no Gram form).
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

pub fn is_zero_vector(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Row-major entries, usable as a canonical hash key.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) = &*out.at(r, c) + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Exact inverse by Gauss–Jordan elimination. Panics on a singular
    /// matrix; every matrix inverted in this crate (Cartan, Gram, ambient
    /// base changes, Weyl elements) is invertible by construction.
    pub fn inverse(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .expect("singular matrix");
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.at(col, col).clone();
            let pinv = p.inverse().expect("nonzero pivot");
            a.scale_row(col, &pinv);
            inv.scale_row(col, &pinv);
            for r in 0..n {
                if r != col && !a.at(r, col).is_zero() {
                    let factor = a.at(r, col).clone();
                    a.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        inv
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            *self.at_mut(r, c) = &*self.at(r, c) * factor;
        }
    }

    /// row r -= factor * row src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let delta = self.at(src, c) * factor;
            *self.at_mut(r, c) = &*self.at(r, c) - &delta;
        }
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Streaming row-echelon rank over the exact field.
///
/// Rows are fed one at a time; each is reduced against the pivot rows seen
/// so far and, if nonzero, becomes a new pivot row (normalized to a unit
/// pivot). Memory is O(rank × width).
pub struct RankAccumulator {
    width: usize,
    /// Sorted by pivot column; each row has a 1 in its pivot column and
    /// zeros in earlier pivot columns.
    pivot_rows: Vec<(usize, Vector)>,
}

impl RankAccumulator {
    pub fn new(width: usize) -> Self {
        RankAccumulator {
            width,
            pivot_rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Reduce `row` and absorb it. Returns true if the rank increased.
    pub fn push_sparse(&mut self, entries: &[(u32, Scalar)]) -> bool {
        let mut row = zero_vector(self.width);
        for (idx, coeff) in entries {
            let idx = *idx as usize;
            row[idx] = &row[idx] + coeff;
        }
        self.push_dense(row)
    }

    /// Consume the accumulator, yielding `(pivot column, row)` pairs in
    /// ascending pivot-column order.
    pub fn into_pivot_rows(self) -> Vec<(usize, Vector)> {
        self.pivot_rows
    }

    pub fn push_dense(&mut self, mut row: Vector) -> bool {
        assert_eq!(row.len(), self.width);
        for (pivot_col, pivot_row) in &self.pivot_rows {
            let factor = row[*pivot_col].clone();
            if factor.is_zero() {
                continue;
            }
            for c in *pivot_col..self.width {
                if !pivot_row[c].is_zero() {
                    row[c] = &row[c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        let lead = match row.iter().position(|x| !x.is_zero()) {
            Some(c) => c,
            None => return false,
        };
        let inv = row[lead].inverse().expect("nonzero leading entry");
        for c in lead..self.width {
            if !row[c].is_zero() {
                row[c] = &row[c] * &inv;
            }
        }
        let pos = self
            .pivot_rows
            .partition_point(|(col, _)| *col < lead);
        self.pivot_rows.insert(pos, (lead, row));
        true
    }
}

/// Solve the square system `m · x = b` exactly. Panics on singular `m`.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Vector {
    m.inverse().mul_vec(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![s(2), s(-1)],
            vec![s(-1), s(2)],
        ]);
        let inv = m.inverse();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(*inv.at(0, 0), Scalar::ratio(2, 3));
        assert_eq!(*inv.at(0, 1), Scalar::ratio(1, 3));
    }

    #[test]
    fn rank_accumulator_counts_independent_rows() {
        let mut acc = RankAccumulator::new(3);
        assert!(acc.push_dense(vec![s(1), s(2), s(3)]));
        assert!(acc.push_dense(vec![s(0), s(1), s(1)]));
        // dependent: row1 + 2*row2
        assert!(!acc.push_dense(vec![s(1), s(4), s(5)]));
        assert!(acc.push_dense(vec![s(0), s(0), s(7)]));
        assert_eq!(acc.rank(), 3);
    }

    #[test]
    fn sparse_rows_accumulate_duplicate_indices() {
        let mut acc = RankAccumulator::new(2);
        assert!(acc.push_sparse(&[(0, s(1)), (0, s(1)), (1, s(-2))]));
        assert!(!acc.push_sparse(&[(0, s(4)), (1, s(-4))]));
        assert_eq!(acc.rank(), 1);
    }
}
