//! Dense exact linear algebra: solving, kernels, canonical echelon forms,
//! and quotients with chosen sections.
//!
//! Everything downstream reduces subspace questions to exact equality of
//! reduced echelon bases, so all bases produced here are canonical.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::Error;

/// Dense matrix, row-major. All entries share one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

/// Index of `e_i (x) e_j` in the row-major tensor basis of V (x) W,
/// where `dim_w` is the dimension of the second factor.
pub fn tensor_index(i: usize, j: usize, dim_w: usize) -> usize {
    i * dim_w + j
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Add `c * b` into `a` in place.
pub fn vec_axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.add(&c.mul(y));
    }
}

/// Kronecker product of coordinate vectors.
pub fn vec_tensor(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.mul(y));
        }
    }
    out
}

pub fn vec_zero(field: &FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

/// Deterministic lexicographic comparison of two same-field vectors.
pub fn vec_cmp(a: &[Scalar], b: &[Scalar]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.canonical_cmp(y);
        if o != std::cmp::Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field.clone(), n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Build from rows; all rows must share the length and field.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {cols}-column matrix",
                    r.len()
                )));
            }
            for s in &r {
                if s.field() != field {
                    return Err(Error::MixedFields("row entries in a different field".into()));
                }
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            field,
            data,
        })
    }

    pub fn from_cols(field: FieldSpec, rows: usize, cols: Vec<Vector>) -> Result<Self, Error> {
        let m = Matrix::from_rows(field, rows, cols)?;
        Ok(m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = vec_zero(&self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out[i] = out[i].add(&e.mul(x));
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Matrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().map(|a| c.mul(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Kronecker product: (A (x) B)(v (x) w) = Av (x) Bw under row-major
    /// tensor indexing.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Matrix::from_fn(self.field.clone(), rows, cols, |i, j| {
            let (i1, i2) = (i / other.rows, i % other.rows);
            let (j1, j2) = (j / other.cols, j % other.cols);
            self.get(i1, j1).mul(other.get(i2, j2))
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field.clone(),
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut pivot_row = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let id = Matrix::identity(self.field.clone(), n);
        let mut aug = Matrix::zero(self.field.clone(), n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
                aug.set(i, n + j, id.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field.clone(), n, n, |i, j| {
            r.get(i, n + j).clone()
        }))
    }

    /// Canonical kernel basis in reduced echelon form.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec_zero(&self.field, self.cols);
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, f).neg();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.field.clone(), self.cols, basis)
    }

    /// Solve A x = b exactly. The particular solution is canonical: free
    /// variables are zero under the fixed column order.
    pub fn solve(&self, b: &[Scalar]) -> Result<SolveOutcome, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "rhs of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        for s in b {
            if s.field() != self.field {
                return Err(Error::MixedFields("rhs in a different field".into()));
            }
        }
        let mut aug = Matrix::zero(self.field.clone(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(SolveOutcome::Inconsistent);
        }
        let mut x = vec_zero(&self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(SolveOutcome::Solved {
            particular: x,
            kernel: self.kernel(),
        })
    }

    /// Convenience: unique-ish solution of A x = b, erroring when
    /// inconsistent (the kernel is ignored).
    pub fn solve_vec(&self, b: &[Scalar]) -> Result<Vector, Error> {
        match self.solve(b)? {
            SolveOutcome::Solved { particular, .. } => Ok(particular),
            SolveOutcome::Inconsistent => Err(Error::MathFailure(
                "inconsistent linear system".into(),
            )),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{}", self.get(i, j)))
                .collect();
            writeln!(w, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Inconsistent,
    Solved { particular: Vector, kernel: Subspace },
}

/// A subspace of k^n with a canonical reduced-echelon basis, so equality of
/// subspaces is entry-wise equality of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    /// Rows form a reduced echelon basis.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let m = Matrix::from_rows(field.clone(), ambient, vectors)
            .expect("spanning vectors of equal length");
        let (r, pivots) = m.rref();
        let dim = pivots.len();
        let basis = Matrix::from_fn(field.clone(), dim, ambient, |i, j| r.get(i, j).clone());
        Subspace {
            ambient,
            field,
            basis,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_spanning(field, ambient, Vec::new())
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        let id = Matrix::identity(field.clone(), ambient);
        let rows = (0..ambient).map(|i| id.row(i).to_vec()).collect();
        Subspace::from_spanning(field, ambient, rows)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or None if `v` is outside.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rem = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let row = self.basis.row(i);
                for (x, y) in rem.iter_mut().zip(row) {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        if vec_is_zero(&rem) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows: Vec<Vector> = (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect();
        rows.extend((0..other.dim()).map(|i| other.basis.row(i).to_vec()));
        Subspace::from_spanning(self.field.clone(), self.ambient, rows)
    }

    /// Matrix whose columns are the basis vectors (ambient x dim).
    pub fn embedding_matrix(&self) -> Matrix {
        self.basis.transpose()
    }
}

/// Projection and section for V / R: `proj * sec = id` on the quotient,
/// `ker(proj) = R`, and the section is the canonical complement of the
/// echelon pivot columns of R.
pub fn quotient_with_section(
    field: &FieldSpec,
    ambient: usize,
    r: &Subspace,
) -> Result<(Matrix, Matrix), Error> {
    if r.ambient() != ambient {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ambient {} inside dimension {ambient}",
            r.ambient()
        )));
    }
    if r.field() != field {
        return Err(Error::MixedFields("quotient over a different field".into()));
    }
    let pivots = r.pivots().to_vec();
    let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    // proj(v)[j] = (v - sum_i v[pivot_i] * r_i)[free_j]
    let mut proj = Matrix::zero(field.clone(), q, ambient);
    for (j, &f) in free.iter().enumerate() {
        proj.set(j, f, field.one());
        for (i, &p) in pivots.iter().enumerate() {
            proj.set(j, p, r.basis().get(i, f).neg());
        }
    }
    let mut sec = Matrix::zero(field.clone(), ambient, q);
    for (j, &f) in free.iter().enumerate() {
        sec.set(f, j, field.one());
    }
    Ok((proj, sec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::finite(p, 1).unwrap()
    }

    fn s(field: &FieldSpec, n: i64) -> Scalar {
        field.from_integer(n)
    }

    #[test]
    fn solve_identity() {
        let q = FieldSpec::rational();
        let a = Matrix::identity(q.clone(), 2);
        let b = vec![s(&q, 1), s(&q, 0)];
        match a.solve(&b).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                assert_eq!(particular, b);
                assert_eq!(kernel.dim(), 0);
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn solve_inconsistent_over_gf2() {
        let f = gf(2);
        let a = Matrix::zero(f.clone(), 1, 1);
        let b = vec![s(&f, 1)];
        assert!(matches!(a.solve(&b).unwrap(), SolveOutcome::Inconsistent));
    }

    #[test]
    fn solve_underdetermined_gf3() {
        // [[1,1],[0,0]] x = (2,0): canonical particular (2,0), kernel spanned
        // by (2,1) (same line as the reduced basis row).
        let f = gf(3);
        let a = Matrix::from_rows(
            f.clone(),
            2,
            vec![vec![s(&f, 1), s(&f, 1)], vec![s(&f, 0), s(&f, 0)]],
        )
        .unwrap();
        let b = vec![s(&f, 2), s(&f, 0)];
        match a.solve(&b).unwrap() {
            SolveOutcome::Solved { particular, kernel } => {
                assert_eq!(particular, vec![s(&f, 2), s(&f, 0)]);
                // verify by direct substitution
                assert_eq!(a.apply(&particular), b);
                assert_eq!(kernel.dim(), 1);
                assert!(kernel.contains(&[s(&f, 2), s(&f, 1)]));
                for i in 0..kernel.dim() {
                    assert!(vec_is_zero(&a.apply(kernel.basis_vector(i))));
                }
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn kernel_cases() {
        let q = FieldSpec::rational();
        assert_eq!(Matrix::identity(q.clone(), 3).kernel().dim(), 0);
        assert_eq!(Matrix::zero(q.clone(), 2, 3).kernel().dim(), 3);
        // counit row (1,1) of the C2 group algebra: kernel spanned by (1,-1)
        let a = Matrix::from_rows(q.clone(), 2, vec![vec![s(&q, 1), s(&q, 1)]]).unwrap();
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[s(&q, 1), s(&q, -1)]));
    }

    #[test]
    fn subspace_bases_are_canonical() {
        let q = FieldSpec::rational();
        // two different spanning sets of the same plane
        let s1 = Subspace::from_spanning(
            q.clone(),
            3,
            vec![
                vec![s(&q, 1), s(&q, 1), s(&q, 0)],
                vec![s(&q, 0), s(&q, 2), s(&q, 2)],
            ],
        );
        let s2 = Subspace::from_spanning(
            q.clone(),
            3,
            vec![
                vec![s(&q, 2), s(&q, 2), s(&q, 0)],
                vec![s(&q, 1), s(&q, 3), s(&q, 2)],
            ],
        );
        assert_eq!(s1, s2);
    }

    #[test]
    fn quotient_cases() {
        let f = gf(2);
        // R = 0: proj = sec = identity
        let r0 = Subspace::zero(f.clone(), 2);
        let (p, sec) = quotient_with_section(&f, 2, &r0).unwrap();
        assert_eq!(p, Matrix::identity(f.clone(), 2));
        assert_eq!(sec, Matrix::identity(f.clone(), 2));
        // R = V: zero-dimensional quotient
        let rv = Subspace::full(f.clone(), 2);
        let (p, _) = quotient_with_section(&f, 2, &rv).unwrap();
        assert_eq!(p.rows(), 0);
        // V = 2, R = span{(1,1)} over GF(2): 1-dim quotient, proj(1,0) != 0
        let r = Subspace::from_spanning(f.clone(), 2, vec![vec![s(&f, 1), s(&f, 1)]]);
        let (p, sec) = quotient_with_section(&f, 2, &r).unwrap();
        assert_eq!(p.rows(), 1);
        assert!(!vec_is_zero(&p.apply(&[s(&f, 1), s(&f, 0)])));
        // proj . sec = id, ker(proj) = R
        assert_eq!(p.matmul(&sec), Matrix::identity(f.clone(), 1));
        assert_eq!(p.kernel(), r);
    }

    proptest! {
        #[test]
        fn solve_and_kernel_are_consistent(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = gf(5);
            let rows = rng.gen_range(1..5usize);
            let cols = rng.gen_range(1..5usize);
            let a = Matrix::from_fn(f.clone(), rows, cols, |_, _| {
                s(&f, rng.gen_range(0..5) as i64)
            });
            let x0: Vec<Scalar> = (0..cols).map(|_| s(&f, rng.gen_range(0..5) as i64)).collect();
            let b = a.apply(&x0);
            match a.solve(&b).unwrap() {
                SolveOutcome::Solved { particular, kernel } => {
                    prop_assert_eq!(a.apply(&particular), b);
                    for i in 0..kernel.dim() {
                        prop_assert!(vec_is_zero(&a.apply(kernel.basis_vector(i))));
                    }
                    // rank-nullity
                    prop_assert_eq!(kernel.dim(), cols - a.rank());
                }
                SolveOutcome::Inconsistent => prop_assert!(false, "constructed rhs must be solvable"),
            }
        }
    }
}
