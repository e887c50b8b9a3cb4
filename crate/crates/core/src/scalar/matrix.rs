use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{Mode, Scalar};
use crate::error::{Error, Result};

/// Largest matrix for which a symbolic determinant is attempted by default.
pub const DEFAULT_SYMBOLIC_CEILING: usize = 20;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> ScalarMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| S::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            entries.extend(r);
        }
        Self::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> ScalarMatrix<T> {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs.get(k, j);
                    out.entries[i * rhs.cols + j] += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a.clone() * x);
                    }
                }
                acc
            })
            .collect())
    }

    /// Reorders rows and columns simultaneously: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Result<Self> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for a {}x{} matrix",
                perm.len(),
                self.rows,
                self.cols
            )));
        }
        let n = self.rows;
        let mut entries = Vec::with_capacity(n * n);
        for &pi in perm {
            for &pj in perm {
                entries.push(self.get(pi, pj).clone());
            }
        }
        Self::new(n, n, entries)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "stacking {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::new(self.rows + other.rows, self.cols, entries)
    }

    /// Determinant by fraction-free (Bareiss) elimination, with the default
    /// symbolic size ceiling.
    pub fn determinant(&self) -> Result<S> {
        self.determinant_with_ceiling(DEFAULT_SYMBOLIC_CEILING)
    }

    /// Determinant by fraction-free elimination. Every division is exact, so
    /// this works over any integral domain. `ceiling` bounds the dimension
    /// accepted in symbolic mode.
    pub fn determinant_with_ceiling(&self, ceiling: usize) -> Result<S> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if S::MODE == Mode::Symbolic && n > ceiling {
            return Err(Error::SymbolicCeiling { dim: n, ceiling });
        }
        if n == 0 {
            return Ok(S::one());
        }
        let mut a: Vec<Vec<S>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(S::zero()),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in bottom.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let mut num = row[j].clone() * pivot;
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        num -= &(lead.clone() * &pivot_row[j]);
                    }
                    row[j] = num.exact_div(&prev).ok_or_else(|| {
                        Error::Consistency(format!("inexact Bareiss division at step {k}"))
                    })?;
                }
                row[k] = S::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// Reduced row echelon form (field mode only). Returns the reduced
    /// matrix and the pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>)> {
        if S::MODE != Mode::Evaluated {
            return Err(Error::UnsupportedMode("rref"));
        }
        let mut a: Vec<Vec<S>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = S::one().exact_div(&a[r][c]).ok_or(Error::DivisionByZero)?;
            for x in a[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x -= &(f.clone() * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let entries = a.into_iter().flatten().collect();
        Ok((Self::new(self.rows, self.cols, entries)?, pivots))
    }

    /// Exact rank (field mode only).
    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of the right kernel `{x : self * x = 0}` (field mode only).
    ///
    /// The basis is the unique one in reduced echelon form taken from the
    /// last coordinate backwards: each vector's highest-index nonzero entry
    /// is 1, and no other basis vector is nonzero at that index. Vectors are
    /// listed by increasing position of that entry.
    pub fn nullspace(&self) -> Result<Vec<Vec<S>>> {
        if S::MODE != Mode::Evaluated {
            return Err(Error::UnsupportedMode("nullspace"));
        }
        let n = self.cols;
        let reversed = self.reverse_columns();
        let (r, pivots) = reversed.rref()?;
        let mut basis = Vec::new();
        let mut is_pivot = alloc::vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut x: Vec<S> = (0..n).map(|_| S::zero()).collect();
            x[f] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(row, f).clone();
            }
            basis.push(x);
        }
        if basis.is_empty() {
            return Ok(basis);
        }
        let k = basis.len();
        let kernel = Self::from_rows(n, basis)?;
        let (echelon, _) = kernel.rref()?;
        Ok((0..k)
            .rev()
            .map(|i| echelon.row(i).iter().rev().cloned().collect())
            .collect())
    }

    fn reverse_columns(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().rev().cloned());
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl<S: fmt::Debug> fmt::Debug for ScalarMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{:?}", self.entries[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ParamPoly, Rational, Var};
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn qm(rows: &[&[i64]]) -> ScalarMatrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        ScalarMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_determinant() {
        assert_eq!(
            ScalarMatrix::<Rational>::identity(3).determinant().unwrap(),
            Rational::one()
        );
        assert_eq!(
            ScalarMatrix::<Rational>::zeros(0, 0).determinant().unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn zero_row_is_singular() {
        let m = qm(&[&[1, 2, 3], &[0, 0, 0], &[4, 5, 6]]);
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn needs_pivoting() {
        let m = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), Rational::from_int(-1));
        let m = qm(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        assert_eq!(m.determinant().unwrap(), Rational::from_int(-6));
    }

    #[test]
    fn non_square_is_an_error() {
        let m = qm(&[&[1, 2, 3]]);
        assert_eq!(m.determinant(), Err(Error::NotSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn symbolic_two_by_two() {
        // [[0, hI], [hI - 2 cLI, 2h]] has determinant -hI (hI - 2 cLI)
        let hi = ParamPoly::var(Var::HI);
        let cli = ParamPoly::var(Var::CLI);
        let h = ParamPoly::var(Var::H);
        let two = Rational::from_int(2);
        let a = &hi - &cli.scale(&two);
        let m = ScalarMatrix::new(
            2,
            2,
            vec![ParamPoly::zero(), hi.clone(), a.clone(), h.scale(&two)],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), -(&hi * &a));
    }

    #[test]
    fn symbolic_ceiling() {
        let m = ScalarMatrix::<ParamPoly>::identity(3);
        assert_eq!(
            m.determinant_with_ceiling(2),
            Err(Error::SymbolicCeiling { dim: 3, ceiling: 2 })
        );
        assert_eq!(m.determinant_with_ceiling(3), Ok(ParamPoly::one()));
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        for n in 0..5 {
            assert!(ScalarMatrix::<Rational>::identity(n)
                .nullspace()
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn nullspace_single_relation() {
        let m = ScalarMatrix::from_rows(2, vec![vec![q(3, 2), q(-5, 7)]]).unwrap();
        let k = m.nullspace().unwrap();
        // (-b/a, 1) with a = 3/2, b = -5/7
        assert_eq!(k, vec![vec![q(10, 21), q(1, 1)]]);
    }

    #[test]
    fn nullspace_normal_form() {
        let m = qm(&[&[1, 1, 0, 0]]);
        let k = m.nullspace().unwrap();
        assert_eq!(
            k,
            vec![
                vec![q(-1, 1), q(1, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)],
            ]
        );
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn nullspace_rejects_symbolic() {
        let m = ScalarMatrix::<ParamPoly>::identity(2);
        assert_eq!(m.nullspace(), Err(Error::UnsupportedMode("nullspace")));
    }

    #[test]
    fn permutation_preserves_determinant() {
        let m = qm(&[&[2, 1, 0], &[1, 3, 1], &[0, 4, 5]]);
        let d = m.determinant().unwrap();
        let p = m.permute_symmetric(&[2, 0, 1]).unwrap();
        assert_eq!(p.determinant().unwrap(), d);
    }

    #[test]
    fn rank_counts_pivots() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank().unwrap(), 2);
    }
}
