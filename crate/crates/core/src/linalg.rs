//! Exact dense linear algebra over the rationals.
//!
//! Everything here works on [`Scalar`] (arbitrary-precision rationals), so
//! ranks, nullspaces and subspace comparisons are exact. Subspaces are kept
//! in reduced row echelon form, which makes equality a plain comparison of
//! the stored rows.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always normalized (lowest terms, positive denominator).
pub type Scalar = BigRational;

/// Column vector of scalars.
pub type Vector = Vec<Scalar>;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Scalar::zero(); len]
}

pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = zero_vector(len);
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; surrounding whitespace is ignored.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    let parsed: std::result::Result<Scalar, _> = trimmed.parse();
    match parsed {
        Ok(v) => Ok(v),
        Err(_) => Err(Error::Parse(format!("not a rational number: {text:?}"))),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        check_len(rows * cols, entries.len())?;
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let count = rows.len();
        let mut entries = Vec::with_capacity(count * cols);
        for row in rows {
            check_len(cols, row.len())?;
            entries.extend(row);
        }
        Ok(Self {
            rows: count,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(cols, data).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            check_len(rows, col.len())?;
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        Ok(m)
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

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.entries)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.rows, other.rows)?;
        check_len(self.cols, other.cols)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        check_len(self.cols, other.cols)?;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Incremental Gauss-Jordan elimination.
///
/// Rows are kept fully reduced against each other: every stored row has a
/// leading 1 and zeros in every other stored row's pivot column. Sorting the
/// stored rows by pivot therefore yields the reduced row echelon form of
/// everything pushed so far.
#[derive(Clone, Debug)]
pub struct RowReducer {
    width: usize,
    rows: Vec<(usize, Vector)>,
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows in place.
    fn reduce(&self, v: &mut [Scalar]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (target, src) in v.iter_mut().zip(row).skip(*pivot) {
                if !src.is_zero() {
                    *target -= &factor * src;
                }
            }
        }
    }

    /// Residue of `v` modulo the stored row space.
    pub fn residue(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.residue(v))
    }

    /// Adds a row; returns `true` when it increased the rank.
    pub fn push(&mut self, v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let mut v = v;
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[pivot].clone();
        if !lead.is_one() {
            for x in v.iter_mut().skip(pivot) {
                if !x.is_zero() {
                    *x /= &lead;
                }
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (target, src) in row.iter_mut().zip(&v).skip(pivot) {
                if !src.is_zero() {
                    *target -= &factor * src;
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vector> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Basis of `{x : row · x = 0 for every stored row}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let pivots = self.pivot_columns();
        let mut is_pivot = vec![false; self.width];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.width)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = zero_vector(self.width);
                v[free] = Scalar::one();
                for (pivot, row) in &self.rows {
                    if !row[free].is_zero() {
                        v[*pivot] = -row[free].clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form with rank and pivot columns.
pub fn rref(m: &Matrix) -> Rref {
    let mut reducer = RowReducer::new(m.cols());
    for r in 0..m.rows() {
        reducer.push(m.row(r).to_vec());
    }
    let rank = reducer.rank();
    let pivot_columns = reducer.pivot_columns();
    let mut entries = Vec::with_capacity(m.rows() * m.cols());
    for row in reducer.into_rows() {
        entries.extend(row);
    }
    entries.resize(m.rows() * m.cols(), Scalar::zero());
    Rref {
        matrix: Matrix {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        },
        rank,
        pivot_columns,
    }
}

/// A linear subspace of `Q^ambient_dim` stored by its canonical (RREF) basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    #[serde(with = "crate::format::scalar_rows")]
    basis: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
        }
    }

    /// Canonical basis of the span of `generators`.
    pub fn span(ambient_dim: usize, generators: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let mut reducer = RowReducer::new(ambient_dim);
        for g in generators {
            check_len(ambient_dim, g.len())?;
            reducer.push(g);
        }
        Ok(Self::from_reducer(reducer))
    }

    pub fn from_reducer(reducer: RowReducer) -> Self {
        Self {
            ambient_dim: reducer.width(),
            basis: reducer.into_rows(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn reducer(&self) -> RowReducer {
        RowReducer {
            width: self.ambient_dim,
            rows: self
                .basis
                .iter()
                .map(|r| {
                    let p = r.iter().position(|x| !x.is_zero()).expect("zero basis row");
                    (p, r.clone())
                })
                .collect(),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_len(self.ambient_dim, v.len())?;
        Ok(self.reducer().contains(v))
    }

    /// `true` when every basis vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        let r = other.reducer();
        Ok(self.basis.iter().all(|v| r.contains(v)))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        let mut r = self.reducer();
        for v in &other.basis {
            r.push(v.clone());
        }
        Ok(Self::from_reducer(r))
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        // v = sum a_i s_i = sum b_j o_j  <=>  [S^T | -O^T] (a, b) = 0
        let ra = self.rank();
        let width = ra + other.rank();
        let mut system = RowReducer::new(width);
        for coord in 0..self.ambient_dim {
            let mut row = Vec::with_capacity(width);
            row.extend(self.basis.iter().map(|s| s[coord].clone()));
            row.extend(other.basis.iter().map(|o| -o[coord].clone()));
            system.push(row);
        }
        let vectors = system.kernel().into_iter().map(|coeffs| {
            let mut v = zero_vector(self.ambient_dim);
            for (a, s) in coeffs[..ra].iter().zip(&self.basis) {
                if a.is_zero() {
                    continue;
                }
                for (t, x) in v.iter_mut().zip(s) {
                    *t += a * x;
                }
            }
            v
        });
        Self::span(self.ambient_dim, vectors)
    }

    pub fn equals(&self, other: &SubspaceBasis) -> Result<bool> {
        check_len(self.ambient_dim, other.ambient_dim)?;
        Ok(self.basis == other.basis)
    }

    /// Coordinates of `v` in terms of the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        check_len(self.ambient_dim, v.len())?;
        if !self.contains(v)? {
            return Ok(None);
        }
        // RREF basis: the coefficient of row r is v at that row's pivot.
        Ok(Some(
            self.basis
                .iter()
                .map(|row| {
                    let p = row.iter().position(|x| !x.is_zero()).expect("zero basis row");
                    v[p].clone()
                })
                .collect(),
        ))
    }
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubspaceBasis(ambient {}, rank {}) [",
            self.ambient_dim,
            self.rank()
        )?;
        for row in &self.basis {
            let row: Vec<String> = row.iter().map(format_scalar).collect();
            write!(f, " ({})", row.join(", "))?;
        }
        write!(f, " ]")
    }
}

pub fn nullspace(m: &Matrix) -> SubspaceBasis {
    let mut reducer = RowReducer::new(m.cols());
    for r in 0..m.rows() {
        reducer.push(m.row(r).to_vec());
    }
    nullspace_of(&reducer)
}

/// Canonical kernel basis of an already reduced system.
pub fn nullspace_of(reducer: &RowReducer) -> SubspaceBasis {
    SubspaceBasis::span(reducer.width(), reducer.kernel()).expect("kernel vectors have system width")
}

pub fn subspace_contains(s: &SubspaceBasis, v: &[Scalar]) -> Result<bool> {
    s.contains(v)
}

pub fn subspace_intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis> {
    a.intersect(b)
}

pub fn subspace_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<bool> {
    a.equals(b)
}

/// Solution set of `m x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub homogeneous: SubspaceBasis,
}

impl AffineSolution {
    pub fn contains(&self, x: &[Scalar]) -> Result<bool> {
        check_len(self.particular.len(), x.len())?;
        let diff: Vector = x.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        self.homogeneous.contains(&diff)
    }

    /// `true` iff `functional · x == value` holds for every solution `x`.
    pub fn implies(&self, functional: &[Scalar], value: &Scalar) -> Result<bool> {
        check_len(self.particular.len(), functional.len())?;
        let dot = |v: &[Scalar]| -> Scalar {
            v.iter()
                .zip(functional)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        };
        Ok(&dot(&self.particular) == value
            && self.homogeneous.basis().iter().all(|d| dot(d).is_zero()))
    }

    pub fn equals(&self, other: &AffineSolution) -> Result<bool> {
        Ok(self.homogeneous.equals(&other.homogeneous)? && self.contains(&other.particular)?)
    }
}

/// Solves the affine system `m x = b` exactly; `None` when inconsistent.
pub fn solve_affine(m: &Matrix, b: &[Scalar]) -> Result<Option<AffineSolution>> {
    check_len(m.rows(), b.len())?;
    let n = m.cols();
    let mut reducer = RowReducer::new(n + 1);
    for (r, rhs) in b.iter().enumerate() {
        let mut row = m.row(r).to_vec();
        row.push(rhs.clone());
        reducer.push(row);
    }
    if reducer.pivot_columns().contains(&n) {
        return Ok(None);
    }
    let mut particular = zero_vector(n);
    let mut homogeneous = RowReducer::new(n);
    for (pivot, row) in &reducer.rows {
        particular[*pivot] = row[n].clone();
        homogeneous.push(row[..n].to_vec());
    }
    Ok(Some(AffineSolution {
        particular,
        homogeneous: nullspace_of(&homogeneous),
    }))
}

/// Sign-normalized gcd-free integer representative of a vector (for display).
pub fn primitive_integer_vector(v: &[Scalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(2);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_columns, vec![0, 1]);

        let z = Matrix::zeros(2, 2);
        let r = rref(&z);
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_columns.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let r = rref(&m);
        assert_eq!(r.matrix, Matrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
    }

    #[test]
    fn rref_scales_and_clears_above() {
        let m = Matrix::from_i64_rows(&[&[0, 2, 4], &[3, 0, 3], &[1, 1, 3]]);
        let r = rref(&m);
        // x + z = 0 ... row 3 = row2/3 + row1/2 -> rank 2
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix.row(0), v(&[1, 0, 1]).as_slice());
        assert_eq!(r.matrix.row(1), v(&[0, 1, 2]).as_slice());
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::zeros(3, 3)).rank(), 3);
        assert_eq!(nullspace(&Matrix::identity(3)).rank(), 0);
        let ns = nullspace(&Matrix::from_i64_rows(&[&[1, 2]]));
        assert_eq!(ns.rank(), 1);
        // canonical form has a leading 1: (-2, 1) scales to (1, -1/2)
        assert_eq!(ns.basis()[0], vec![int(1), frac(-1, 2)]);
        assert!(ns.contains(&v(&[-2, 1])).unwrap());
    }

    #[test]
    fn contains_examples() {
        let s = SubspaceBasis::span(2, vec![v(&[1, 0])]).unwrap();
        assert!(s.contains(&v(&[0, 0])).unwrap());
        assert!(!s.contains(&v(&[0, 1])).unwrap());
        let t = SubspaceBasis::span(2, vec![v(&[1, 2]), v(&[0, 1])]).unwrap();
        assert!(t.contains(&v(&[3, 7])).unwrap());
        assert!(matches!(
            s.contains(&v(&[1, 0, 0])),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn intersect_examples() {
        let s = SubspaceBasis::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.intersect(&s).unwrap(), s);
        let a = SubspaceBasis::span(2, vec![v(&[1, 0])]).unwrap();
        let b = SubspaceBasis::span(2, vec![v(&[0, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().rank(), 0);
        let p = SubspaceBasis::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let q = SubspaceBasis::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = p.intersect(&q).unwrap();
        assert_eq!(i, SubspaceBasis::span(3, vec![v(&[0, 1, 0])]).unwrap());
        assert!(a.intersect(&SubspaceBasis::zero(3)).is_err());
    }

    #[test]
    fn equal_examples() {
        let s = SubspaceBasis::span(2, vec![v(&[1, 2])]).unwrap();
        assert!(s.equals(&s).unwrap());
        assert!(!SubspaceBasis::full(2).equals(&SubspaceBasis::zero(2)).unwrap());
        let t = SubspaceBasis::span(2, vec![v(&[2, 4])]).unwrap();
        assert!(s.equals(&t).unwrap());
        assert!(s.equals(&SubspaceBasis::zero(3)).is_err());
    }

    #[test]
    fn solve_affine_examples() {
        let b = v(&[3, -4, 5]);
        let sol = solve_affine(&Matrix::identity(3), &b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert_eq!(sol.homogeneous.rank(), 0);

        assert!(solve_affine(&Matrix::zeros(2, 2), &v(&[1, 0])).unwrap().is_none());

        let sol = solve_affine(&Matrix::from_i64_rows(&[&[1, 1]]), &v(&[2])).unwrap().unwrap();
        assert_eq!(sol.particular, v(&[2, 0]));
        assert_eq!(
            sol.homogeneous,
            SubspaceBasis::span(2, vec![v(&[1, -1])]).unwrap()
        );
    }

    #[test]
    fn coordinates_recover_combination() {
        let s = SubspaceBasis::span(3, vec![v(&[1, 0, 2]), v(&[0, 1, -1])]).unwrap();
        let c = s.coordinates(&v(&[2, 3, 1])).unwrap().unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(s.coordinates(&v(&[0, 0, 1])).unwrap().is_none());
    }

    #[test]
    fn scalar_text_round_trip() {
        assert_eq!(parse_scalar(" -3/6 ").unwrap(), frac(-1, 2));
        assert_eq!(format_scalar(&frac(4, 2)), "2");
        assert_eq!(format_scalar(&frac(-2, 6)), "-1/3");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
    }

    #[test]
    fn primitive_vector_normalizes_sign() {
        let p = primitive_integer_vector(&[frac(-1, 2), int(1), int(0)]);
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(-2), BigInt::from(0)]);
    }
}
