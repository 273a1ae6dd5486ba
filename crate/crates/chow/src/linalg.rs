//! Dense exact-rational matrices and the row-reduction kernels that every
//! normal-form computation in the engine ultimately reduces to.
//!
//! Pivoting is deterministic: the pivot of a row is its first nonzero entry
//! in column order, and rows are eliminated in order. Reduced row echelon
//! form is unique for a fixed column order, so canonical bases are stable
//! across runs.

use crate::rational::Rat;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major; `data.len() == rows * cols`.
    pub data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| crate::rational::rat_int(n)).collect())
                .collect(),
        )
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc += self.at(i, j) * &v[j];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduced row echelon form of `m`, with the strictly increasing list of
/// pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        // First row at or below `row` with a nonzero entry in this column.
        let mut sel = None;
        for r in row..a.rows {
            if !a.at(r, col).is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        // Swap into place and normalize.
        if sel != row {
            for j in 0..a.cols {
                let hi = sel * a.cols + j;
                let lo = row * a.cols + j;
                a.data.swap(hi, lo);
            }
        }
        let inv = a.at(row, col).clone();
        for j in col..a.cols {
            let v = a.at(row, j).clone() / &inv;
            *a.at_mut(row, j) = v;
        }
        // Eliminate the column everywhere else.
        for r in 0..a.rows {
            if r == row || a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone();
            for j in col..a.cols {
                let v = a.at(r, j).clone() - &f * a.at(row, j);
                *a.at_mut(r, j) = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Some solution of `a x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &RationalMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    let mut aug = RationalMatrix::zero(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, a.cols) = b[i].clone();
    }
    let (r, pivots) = rref(&aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); a.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.at(i, a.cols).clone();
    }
    Some(x)
}

/// A basis of the null space of `a`; empty iff `a` is injective.
pub fn kernel_basis(a: &RationalMatrix) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(a);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); a.cols];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.at(i, f).clone();
        }
        basis.push(v);
    }
    basis
}

/// Sparse row: strictly increasing column indices with nonzero coefficients.
pub type SparseRow = Vec<(usize, Rat)>;

/// Incremental sparse reduced row echelon form, keyed by pivot column.
///
/// Equivalent to `rref` on the same rows and column order, but suited to the
/// relation-span matrices built during ring construction, which are wide and
/// extremely sparse.
#[derive(Debug, Default, Clone)]
pub struct SparseReducer {
    /// pivot column -> reduced row (leading coefficient 1, tail reduced).
    rows: std::collections::BTreeMap<usize, SparseRow>,
}

fn row_axpy(dst: &mut SparseRow, coeff: &Rat, src: &SparseRow) {
    // dst -= coeff * src, merging sorted runs.
    let mut out: SparseRow = Vec::with_capacity(dst.len() + src.len());
    let mut i = 0;
    let mut j = 0;
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((ci, _)), Some((cj, _))) if ci == cj => {
                let v = dst[i].1.clone() - coeff * &src[j].1;
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, _)), Some((cj, _))) if ci < cj => {
                out.push(dst[i].clone());
                i += 1;
            }
            (Some(_), Some(_)) => {
                let v = -(coeff * &src[j].1);
                out.push((src[j].0, v));
                j += 1;
            }
            (Some(_), None) => {
                out.push(dst[i].clone());
                i += 1;
            }
            (None, Some(_)) => {
                let v = -(coeff * &src[j].1);
                out.push((src[j].0, v));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    *dst = out;
}

impl SparseReducer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Eliminate every pivot column from `row` (leading and tail entries),
    /// leaving a row supported on non-pivot columns only.
    fn reduce_fully(&self, row: &mut SparseRow) {
        let mut i = 0;
        while i < row.len() {
            let (c, v) = row[i].clone();
            if let Some(p) = self.rows.get(&c) {
                let p = p.clone();
                row_axpy(row, &v, &p);
                // Columns before position i are untouched (pivot rows start
                // at their pivot), so rescanning from i is enough.
            } else {
                i += 1;
            }
        }
    }

    /// Reduce `row` against the current pivots; if a remainder survives,
    /// install it as a new pivot row and return its pivot column.
    pub fn add_row(&mut self, mut row: SparseRow) -> Option<usize> {
        self.reduce_fully(&mut row);
        let Some((lead, lead_coeff)) = row.first().cloned() else {
            return None;
        };
        // Normalize to leading coefficient 1.
        for (_, v) in row.iter_mut() {
            *v = v.clone() / &lead_coeff;
        }
        // Back-substitute into existing rows so the form stays fully
        // reduced; the new row's tail holds no pivot columns.
        let cols: Vec<usize> = self.rows.keys().copied().collect();
        for c in cols {
            let coeff = self.rows[&c]
                .iter()
                .find(|(j, _)| *j == lead)
                .map(|(_, v)| v.clone());
            if let Some(coeff) = coeff {
                let r = self.rows.get_mut(&c).unwrap();
                row_axpy(r, &coeff, &row);
            }
        }
        self.rows.insert(lead, row);
        Some(lead)
    }

    /// Reduce `row` against the pivots without installing it.
    pub fn remainder(&self, mut row: SparseRow) -> SparseRow {
        self.reduce_fully(&mut row);
        row
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The reduced row with the given pivot column.
    pub fn row(&self, pivot: usize) -> Option<&SparseRow> {
        self.rows.get(&pivot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn rref_rank_one() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, pivots) = rref(&m);
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.at(0, 1), &rat_int(2));
        assert!(r.at(1, 0).is_zero() && r.at(1, 1).is_zero());
    }

    #[test]
    fn rref_identity_fixed() {
        let m = RationalMatrix::identity(3);
        let (r, pivots) = rref(&m);
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_two_by_two_full_rank() {
        // Hand Gaussian elimination: [[2,1],[1,1]] -> identity.
        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let (r, pivots) = rref(&m);
        assert_eq!(r, RationalMatrix::identity(2));
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn solve_identity() {
        let a = RationalMatrix::identity(2);
        let b = vec![rat_int(1), rat_int(2)];
        assert_eq!(solve(&a, &b), Some(b.clone()));
    }

    #[test]
    fn solve_homogeneous_underdetermined() {
        let a = RationalMatrix::from_i64(&[&[1, 1]]);
        let x = solve(&a, &[rat_int(0)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat_int(0)]);
    }

    #[test]
    fn solve_inconsistent() {
        let a = RationalMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(solve(&a, &[rat_int(1), rat_int(2)]), None);
    }

    #[test]
    fn kernel_empty_for_identity() {
        assert!(kernel_basis(&RationalMatrix::identity(3)).is_empty());
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let z = RationalMatrix::zero(2, 2);
        assert_eq!(kernel_basis(&z).len(), 2);
    }

    #[test]
    fn kernel_of_one_row() {
        let a = RationalMatrix::from_i64(&[&[1, 2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        // Proportional to (-2, 1).
        assert_eq!(k[0], vec![rat(-2, 1), rat_int(1)]);
        assert_eq!(a.mul_vec(&k[0]), vec![rat_int(0)]);
    }

    #[test]
    fn sparse_agrees_with_dense() {
        // Deterministic pseudo-random small matrices.
        let mut seed = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..200 {
            let rows = (next() % 5 + 1) as usize;
            let cols = (next() % 5 + 1) as usize;
            let mut m = RationalMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    let v = (next() % 7) as i64 - 3;
                    *m.at_mut(i, j) = rat_int(v);
                }
            }
            let (r, pivots) = rref(&m);
            let mut red = SparseReducer::new();
            for i in 0..rows {
                let row: SparseRow = (0..cols)
                    .filter(|&j| !m.at(i, j).is_zero())
                    .map(|j| (j, m.at(i, j).clone()))
                    .collect();
                red.add_row(row);
            }
            assert_eq!(red.pivot_columns(), pivots, "matrix {m:?}");
            // The reduced rows must agree entry-for-entry with the dense
            // rref (which is unique for a fixed column order).
            for (i, &p) in pivots.iter().enumerate() {
                let sparse_row = red.row(p).unwrap();
                let dense_row: SparseRow = (0..cols)
                    .filter(|&j| !r.at(i, j).is_zero())
                    .map(|j| (j, r.at(i, j).clone()))
                    .collect();
                assert_eq!(sparse_row, &dense_row, "row {i} of {m:?}");
            }
        }
    }
}
