use std::collections::BTreeMap;

use super::{ExactError, ExactScalar};

/// A sparse row of a matrix: column index → nonzero entry.
pub type SparseRow = BTreeMap<usize, ExactScalar>;

/// A matrix over ℚ(i) stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: Vec<SparseRow>,
    cols: usize,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows: vec![SparseRow::new(); rows], cols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, ExactScalar::one());
        }
        m
    }

    /// An empty matrix with a fixed column count; rows are appended with [`push_row`](Self::push_row).
    pub fn with_cols(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn from_dense(rows: Vec<Vec<ExactScalar>>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::with_cols(cols);
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::DimensionMismatch { expected: cols, found: row.len() });
            }
            m.rows.push(row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        }
        Ok(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_dense(rows.iter().map(|r| r.iter().map(|&x| ExactScalar::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseRow {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> ExactScalar {
        self.rows[r].get(&c).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, value: ExactScalar) {
        assert!(c < self.cols, "column {c} out of range for {} columns", self.cols);
        if value.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, value);
        }
    }

    pub fn push_row(&mut self, row: SparseRow) -> Result<(), ExactError> {
        if let Some((&c, _)) = row.last_key_value() {
            if c >= self.cols {
                return Err(ExactError::DimensionMismatch { expected: self.cols, found: c + 1 });
            }
        }
        self.rows.push(row.into_iter().filter(|(_, x)| !x.is_zero()).collect());
        Ok(())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self.rows.iter().map(|row| row.iter().map(|(&c, x)| x * &v[c]).sum()).collect())
    }

    fn echelon(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            if basis.is_full() {
                break;
            }
            basis.insert(row.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// A basis of `{v : M v = 0}`, in reduced echelon form: each vector has leading entry 1
    /// and the leading positions are strictly increasing and cleared in the other vectors.
    pub fn nullspace(&self) -> Vec<Vec<ExactScalar>> {
        self.echelon().kernel()
    }

    /// Inverse of a square matrix by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.cols;
        if self.rows() != n {
            return Err(ExactError::DimensionMismatch { expected: n, found: self.rows() });
        }
        let mut aug: Vec<SparseRow> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut a = row.clone();
                a.insert(n + r, ExactScalar::one());
                a
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| aug[r].contains_key(&c)).ok_or(ExactError::Singular)?;
            aug.swap(c, p);
            let inv = aug[c][&c].inv()?;
            aug[c] = aug[c].iter().map(|(&k, x)| (k, x * &inv)).collect();
            let pivot = aug[c].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r != c {
                    if let Some(f) = row.get(&c).cloned() {
                        axpy(row, &f, &pivot);
                    }
                }
            }
        }
        let rows = aug
            .into_iter()
            .map(|row| row.into_iter().filter(|&(k, _)| k >= n).map(|(k, x)| (k - n, x)).collect())
            .collect();
        Ok(Self { rows, cols: n })
    }
}

/// `row -= factor · pivot`, dropping cancelled entries.
fn axpy(row: &mut SparseRow, factor: &ExactScalar, pivot: &SparseRow) {
    for (&k, x) in pivot {
        let delta = factor * x;
        match row.get_mut(&k) {
            Some(y) => {
                *y -= &delta;
                if y.is_zero() {
                    row.remove(&k);
                }
            }
            None => {
                row.insert(k, -delta);
            }
        }
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are inserted one at a time; each stored row has a pivot entry equal to 1 and every
/// pivot column is zero in all other stored rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self { cols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.cols
    }

    /// Reduce `row` against the stored pivots. Returns the residual.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = 0;
        loop {
            let next = row.range(cursor..).map(|(&k, _)| k).find(|k| self.pivots.contains_key(k));
            let Some(k) = next else { break };
            let f = row[&k].clone();
            axpy(&mut row, &f, &self.pivots[&k]);
            cursor = k + 1;
        }
        row
    }

    /// Insert a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, x)) = row.first_key_value() else { return false };
        let inv = x.inv().expect("leading entry of a reduced row is nonzero");
        let row: SparseRow = row.into_iter().map(|(k, y)| (k, &y * &inv)).collect();
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&lead).cloned() {
                axpy(other, &f, &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Kernel of the stored row space, as reduced echelon vectors.
    pub fn kernel(&self) -> Vec<Vec<ExactScalar>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let mut kernel = EchelonBasis::new(self.cols);
        for &f in &free {
            let mut v = SparseRow::new();
            v.insert(f, ExactScalar::one());
            for (&p, row) in &self.pivots {
                if let Some(x) = row.get(&f) {
                    v.insert(p, -x.clone());
                }
            }
            kernel.insert(v);
        }
        kernel
            .pivots
            .into_values()
            .map(|row| {
                let mut dense = vec![ExactScalar::zero(); self.cols];
                for (k, x) in row {
                    dense[k] = x;
                }
                dense
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactScalar> {
        v.iter().map(|&x| ExactScalar::from_int(x)).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(ExactMatrix::identity(2).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let k = ExactMatrix::zeros(2, 3).nullspace();
        assert_eq!(k, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn small_kernel_by_hand() {
        let m = ExactMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        assert_eq!(m.nullspace(), vec![ints(&[1, -1, 1])]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_leading_entries_are_one() {
        let m = ExactMatrix::from_ints(&[&[0, 2, 4, 6], &[0, 1, 2, 3]]).unwrap();
        let k = m.nullspace();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_one());
            assert!(m.mul_vec(v).unwrap().iter().all(ExactScalar::is_zero));
        }
    }

    #[test]
    fn inverse_of_complex_matrix() {
        let i = ExactScalar::i();
        let one = ExactScalar::one();
        let m = ExactMatrix::from_dense(vec![vec![one.clone(), i.clone()], vec![i.clone(), one.clone()]]).unwrap();
        let inv = m.inverse().unwrap();
        for r in 0..2 {
            for c in 0..2 {
                let x: ExactScalar = (0..2).map(|k| &m.get(r, k) * &inv.get(k, c)).sum();
                assert_eq!(x, if r == c { one.clone() } else { ExactScalar::zero() });
            }
        }
        assert_eq!(ExactMatrix::zeros(2, 2).inverse(), Err(ExactError::Singular));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        assert!(ExactMatrix::from_ints(&[&[1, 2], &[3]]).is_err());
    }
}
