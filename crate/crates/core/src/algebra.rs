//! ω-Lie algebras given by structure constants.
//!
//! An [`OmegaAlgebra`] stores `[e_i, e_j] = Σ_k c[i][j][k] e_k` together with
//! the values `ω(e_i, e_j)` of the skew form. Indices are 0-based in the API;
//! the file formats and the CLI use 1-based indices.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    format_scalar, is_zero_vector, nullspace, unit_vector, zero_vector, Matrix, Scalar,
    SubspaceBasis, Vector,
};

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaAlgebra {
    name: String,
    dim: usize,
    structure: Vec<Scalar>,
    omega: Vec<Scalar>,
    basis_labels: Vec<String>,
}

impl OmegaAlgebra {
    /// Algebra with all brackets and ω zero; fill it in with the setters.
    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        Self {
            name: name.into(),
            dim,
            structure: vec![Scalar::zero(); dim * dim * dim],
            omega: vec![Scalar::zero(); dim * dim],
            basis_labels: (1..=dim).map(|i| format!("e{i}")).collect(),
        }
    }

    /// Raw constructor; nothing beyond the array shapes is validated, so
    /// the result may violate antisymmetry (see [`OmegaAlgebra::check_axioms`]).
    pub fn from_raw(
        name: impl Into<String>,
        dim: usize,
        structure: Vec<Scalar>,
        omega: Vec<Scalar>,
    ) -> Result<Self> {
        check_len(dim * dim * dim, structure.len())?;
        check_len(dim * dim, omega.len())?;
        let mut a = Self::abelian(name, dim);
        a.structure = structure;
        a.omega = omega;
        Ok(a)
    }

    pub fn with_basis_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_len(self.dim, labels.len())?;
        self.basis_labels = labels;
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Sets `[e_i, e_j] = Σ coeffs` and `[e_j, e_i]` to its negative.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: &[Scalar]) -> Result<()> {
        check_len(self.dim, coeffs.len())?;
        if i >= self.dim || j >= self.dim {
            return Err(Error::Invalid(format!(
                "bracket index ({}, {}) out of range for dimension {}",
                i + 1,
                j + 1,
                self.dim
            )));
        }
        if i == j && !is_zero_vector(coeffs) {
            return Err(Error::Invalid(format!("[e{0}, e{0}] must be zero", i + 1)));
        }
        for (k, v) in coeffs.iter().enumerate() {
            let idx = self.idx3(i, j, k);
            self.structure[idx] = v.clone();
            let idx = self.idx3(j, i, k);
            self.structure[idx] = -v.clone();
        }
        Ok(())
    }

    /// Sets `ω(e_i, e_j) = value` and `ω(e_j, e_i) = -value`.
    pub fn set_omega(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::Invalid(format!(
                "omega index ({}, {}) out of range for dimension {}",
                i + 1,
                j + 1,
                self.dim
            )));
        }
        if i == j && !value.is_zero() {
            return Err(Error::Invalid(format!("omega(e{0}, e{0}) must be zero", i + 1)));
        }
        self.omega[i * self.dim + j] = value.clone();
        self.omega[j * self.dim + i] = -value;
        Ok(())
    }

    /// Overwrites a single ω entry without touching its mirror.
    pub fn set_omega_entry(&mut self, i: usize, j: usize, value: Scalar) {
        self.omega[i * self.dim + j] = value;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    fn idx3(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[self.idx3(i, j, k)]
    }

    /// `[e_i, e_j]` as a coefficient slice.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        let start = self.idx3(i, j, 0);
        &self.structure[start..start + self.dim]
    }

    pub fn omega_entry(&self, i: usize, j: usize) -> &Scalar {
        &self.omega[i * self.dim + j]
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn omega_entries(&self) -> &[Scalar] {
        &self.omega
    }

    pub fn is_lie(&self) -> bool {
        is_zero_vector(&self.omega)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &coeff * c;
                    }
                }
            }
        }
        out
    }

    pub fn omega_form(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        Ok(self.omega_unchecked(x, y))
    }

    pub(crate) fn omega_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let w = self.omega_entry(i, j);
                if !yj.is_zero() && !w.is_zero() {
                    acc += xi * yj * w;
                }
            }
        }
        acc
    }

    /// ω-Jacobi defect `J(x,y,z) − (ω(x,y)z + ω(y,z)x + ω(z,x)y)`.
    pub fn jacobi_defect(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
        let jac = {
            let a = self.bracket(&self.bracket(x, y)?, z)?;
            let b = self.bracket(&self.bracket(y, z)?, x)?;
            let c = self.bracket(&self.bracket(z, x)?, y)?;
            a.into_iter()
                .zip(b)
                .zip(c)
                .map(|((a, b), c)| a + b + c)
                .collect::<Vector>()
        };
        let wxy = self.omega_form(x, y)?;
        let wyz = self.omega_form(y, z)?;
        let wzx = self.omega_form(z, x)?;
        Ok((0..self.dim)
            .map(|t| &jac[t] - (&wxy * &z[t] + &wyz * &x[t] + &wzx * &y[t]))
            .collect())
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let mut bracket_antisymmetric = true;
        for i in 0..n {
            for j in 0..n {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(p, q)| !(p + q).is_zero()) {
                    bracket_antisymmetric = false;
                }
            }
        }
        let omega_skew = (0..n).all(|i| {
            self.omega_entry(i, i).is_zero()
                && (0..n).all(|j| (self.omega_entry(i, j) + self.omega_entry(j, i)).is_zero())
        });
        let mut defects = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = self
                        .jacobi_defect(
                            &self.basis_vector(i),
                            &self.basis_vector(j),
                            &self.basis_vector(k),
                        )
                        .expect("basis vectors have algebra dimension");
                    defects.push(TripleDefect {
                        triple: (i, j, k),
                        defect,
                    });
                }
            }
        }
        let jacobi_ok = defects.iter().all(|d| is_zero_vector(&d.defect));
        AxiomReport {
            passed: jacobi_ok && bracket_antisymmetric && omega_skew,
            bracket_antisymmetric,
            omega_skew,
            omega_is_zero: self.is_lie(),
            defects,
        }
    }

    /// `ad_x`, the map `y ↦ [x, y]`.
    pub fn adjoint(&self, x: &[Scalar]) -> Result<LinearMap> {
        check_len(self.dim, x.len())?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket_unchecked(x, &self.basis_vector(j)))
            .collect();
        LinearMap::new(Matrix::from_columns(self.dim, &cols)?)
    }

    pub fn killing_form(&self) -> KillingForm {
        let ads: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                self.adjoint(&self.basis_vector(i))
                    .expect("basis vector has algebra dimension")
                    .into_matrix()
            })
            .collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                k[(i, j)] = ads[i].mul(&ads[j]).expect("square").trace();
            }
        }
        KillingForm {
            matrix: k,
            omega_nonzero: !self.is_lie(),
        }
    }

    /// `ω == 0` and nondegenerate Killing form.
    pub fn is_semisimple_lie(&self) -> bool {
        self.is_lie() && self.killing_form().matrix.rank() == self.dim
    }

    pub fn center(&self) -> SubspaceBasis {
        // [x, e_j]_k = Σ_i x_i c[i][j][k]; one row per (j, k).
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    m[(j * n + k, i)] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        nullspace(&m)
    }

    pub fn direct_sum(&self, other: &OmegaAlgebra) -> OmegaAlgebra {
        let (p, q) = (self.dim, other.dim);
        let n = p + q;
        let mut out = OmegaAlgebra::abelian(format!("{} (+) {}", self.name, other.name), n);
        for i in 0..n {
            for j in 0..n {
                let block = match (i < p, j < p) {
                    (true, true) => Some((self, i, j, 0)),
                    (false, false) => Some((other, i - p, j - p, p)),
                    _ => None,
                };
                if let Some((src, a, b, offset)) = block {
                    for k in 0..src.dim {
                        let idx = out.idx3(i, j, k + offset);
                        out.structure[idx] = src.structure_constant(a, b, k).clone();
                    }
                    out.omega[i * n + j] = src.omega_entry(a, b).clone();
                }
            }
        }
        out.basis_labels = self
            .basis_labels
            .iter()
            .chain(&other.basis_labels)
            .cloned()
            .collect();
        out
    }

    /// Bracket-preserving invertible map; with `check_omega` ω must be preserved too.
    pub fn is_automorphism(&self, phi: &LinearMap, check_omega: bool) -> bool {
        if phi.dim() != self.dim || !phi.is_invertible() {
            return false;
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| phi.image_of_basis(i)).collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = phi.apply_unchecked(self.basis_bracket(i, j));
                let rhs = self.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return false;
                }
                if check_omega && &self.omega_unchecked(&images[i], &images[j]) != self.omega_entry(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Invertible `φ` with `φ([x, y]) = [φy, φx]`.
    pub fn is_anti_automorphism(&self, phi: &LinearMap) -> bool {
        if phi.dim() != self.dim || !phi.is_invertible() {
            return false;
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| phi.image_of_basis(i)).collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = phi.apply_unchecked(self.basis_bracket(i, j));
                let rhs = self.bracket_unchecked(&images[j], &images[i]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The bracket itself as a bilinear map.
    pub fn bracket_tensor(&self) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            data: self.structure.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDefect {
    pub triple: (usize, usize, usize),
    pub defect: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub bracket_antisymmetric: bool,
    pub omega_skew: bool,
    /// ω vanishes identically, i.e. the algebra is an ordinary Lie algebra.
    pub omega_is_zero: bool,
    pub defects: Vec<TripleDefect>,
}

impl AxiomReport {
    pub fn failing_triples(&self) -> Vec<(usize, usize, usize)> {
        self.defects
            .iter()
            .filter(|d| !is_zero_vector(&d.defect))
            .map(|d| d.triple)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    pub matrix: Matrix,
    /// Set when ω ≠ 0; Killing-form arguments only apply to Lie algebras.
    pub omega_nonzero: bool,
}

/// Linear endomorphism; column `j` of the matrix is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Invalid(format!(
                "linear map needs a square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zeros(n, n),
        }
    }

    /// Reshapes a row-major vector of length n² (entry `(r, c)` at `r·n + c`).
    pub fn from_vector(n: usize, v: &[Scalar]) -> Result<Self> {
        Self::new(Matrix::from_row_major(n, n, v.to_vec())?)
    }

    pub fn to_vector(&self) -> Vector {
        self.matrix.entries().to_vec()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(x)
    }

    pub(crate) fn apply_unchecked(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x).expect("vector has map dimension")
    }

    pub fn image_of_basis(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        LinearMap::new(self.matrix.mul(&other.matrix)?)
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap {
            matrix: self.matrix.scale(s),
        }
    }
}

/// Bilinear map `δ(e_i, e_j) = Σ_k d[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    data: Vec<Scalar>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Reshapes a vector of length n³ (entry `d[i][j][k]` at `(i·n + j)·n + k`).
    pub fn from_vector(dim: usize, v: &[Scalar]) -> Result<Self> {
        check_len(dim * dim * dim, v.len())?;
        Ok(Self {
            dim,
            data: v.to_vec(),
        })
    }

    pub fn to_vector(&self) -> Vector {
        self.data.clone()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_value(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        check_len(self.dim, x.len())?;
        check_len(self.dim, y.len())?;
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if xi.is_zero() || yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, d) in self.basis_value(i, j).iter().enumerate() {
                    if !d.is_zero() {
                        out[k] += &c * d;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `δ(y, x)`.
    pub fn swapped(&self) -> BilinearMap {
        let n = self.dim;
        let mut out = BilinearMap::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.data[(i * n + j) * n + k] = self.entry(j, i, k).clone();
                }
            }
        }
        out
    }

    pub fn add(&self, other: &BilinearMap) -> Result<BilinearMap> {
        check_len(self.dim, other.dim)?;
        Ok(BilinearMap {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_symmetric(&self) -> bool {
        self == &self.swapped()
    }

    pub fn is_skew(&self) -> bool {
        self.add(&self.swapped()).expect("same dimension").is_zero()
    }

    /// Nonzero `(i, j)` argument pairs.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !is_zero_vector(self.basis_value(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub(crate) fn describe_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}

/// Rows in bracket notation, e.g. `[[1, 0], [0, 1]]`.
pub(crate) fn describe_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .row_vectors()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sl2() -> OmegaAlgebra {
        // basis (h, e, f)
        let mut a = OmegaAlgebra::abelian("sl2", 3);
        a.set_bracket(0, 1, &[int(0), int(2), int(0)]).unwrap();
        a.set_bracket(0, 2, &[int(0), int(0), int(-2)]).unwrap();
        a.set_bracket(1, 2, &[int(1), int(0), int(0)]).unwrap();
        a
    }

    fn l1() -> OmegaAlgebra {
        let mut a = OmegaAlgebra::abelian("L1", 3);
        a.set_bracket(0, 1, &[int(0), int(1), int(0)]).unwrap();
        a.set_bracket(1, 2, &[int(0), int(0), int(1)]).unwrap();
        a.set_omega(0, 1, int(1)).unwrap();
        a
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn bracket_on_basis_and_diagonal() {
        let a = l1();
        assert_eq!(a.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 1, 0]));
        let x = v(&[3, -1, 2]);
        assert_eq!(a.bracket(&x, &x).unwrap(), v(&[0, 0, 0]));
        assert!(a.bracket(&v(&[1, 0]), &x).is_err());
    }

    #[test]
    fn axioms_hold_for_sl2_and_l1() {
        let r = sl2().check_axioms();
        assert!(r.passed);
        assert!(r.omega_is_zero);
        let r = l1().check_axioms();
        assert!(r.passed);
        assert!(!r.omega_is_zero);
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let mut s = l1().structure_constants().to_vec();
        s[3 + 1] = int(5);
        let a = OmegaAlgebra::from_raw("bad", 3, s, l1().omega_entries().to_vec()).unwrap();
        let r = a.check_axioms();
        assert!(!r.bracket_antisymmetric);
        assert!(!r.passed);
    }

    #[test]
    fn adjoint_of_h_is_diagonal() {
        let a = sl2();
        let ad = a.adjoint(&v(&[1, 0, 0])).unwrap();
        let expected = Matrix::from_i64_rows(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]);
        assert_eq!(ad.matrix(), &expected);
        assert!(a.adjoint(&v(&[0, 0, 0])).unwrap().matrix().is_zero());
    }

    #[test]
    fn adjoint_matches_bracket() {
        let a = l1();
        let x = v(&[1, 2, -3]);
        let y = v(&[0, 5, 1]);
        let ad = a.adjoint(&x).unwrap();
        assert_eq!(ad.apply(&y).unwrap(), a.bracket(&x, &y).unwrap());
    }

    #[test]
    fn killing_form_of_sl2() {
        let k = sl2().killing_form();
        assert_eq!(
            k.matrix,
            Matrix::from_i64_rows(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])
        );
        assert!(!k.omega_nonzero);
        assert!(sl2().is_semisimple_lie());
        assert!(l1().killing_form().omega_nonzero);
        assert!(!l1().is_semisimple_lie());
    }

    #[test]
    fn center_examples() {
        assert_eq!(sl2().center().rank(), 0);
        assert_eq!(OmegaAlgebra::abelian("ab", 3).center().rank(), 3);
        assert_eq!(l1().center().rank(), 0);
    }

    #[test]
    fn direct_sum_dims_and_identity() {
        let s = sl2().direct_sum(&sl2());
        assert_eq!(s.dim(), 6);
        assert!(s.check_axioms().passed);
        assert_eq!(s.center().rank(), 0);
        let empty = OmegaAlgebra::abelian("0", 0);
        let same = l1().direct_sum(&empty);
        assert_eq!(same.structure_constants(), l1().structure_constants());
        assert_eq!(same.omega_entries(), l1().omega_entries());
    }

    #[test]
    fn automorphism_predicates() {
        let a = sl2();
        assert!(a.is_automorphism(&LinearMap::identity(3), true));
        assert!(!a.is_automorphism(&LinearMap::zero(3), false));
        let minus = LinearMap::identity(3).scale(&int(-1));
        assert!(a.is_anti_automorphism(&minus));
        assert!(!a.is_anti_automorphism(&LinearMap::identity(3)));
        assert!(OmegaAlgebra::abelian("ab", 2).is_anti_automorphism(&LinearMap::identity(2)));
    }

    #[test]
    fn omega_preservation_is_opt_in() {
        // In dimension >= 3 the ω-Jacobi identity pins ω down from the bracket,
        // so only a 2-dimensional algebra can separate the two modes.
        let mut a = OmegaAlgebra::abelian("w2", 2);
        a.set_omega(0, 1, int(1)).unwrap();
        assert!(a.check_axioms().passed);
        let phi = LinearMap::new(Matrix::from_i64_rows(&[&[1, 0], &[0, 2]])).unwrap();
        assert!(a.is_automorphism(&phi, false));
        assert!(!a.is_automorphism(&phi, true));
    }

    #[test]
    fn bilinear_symmetry_helpers() {
        let t = sl2().bracket_tensor();
        assert!(t.is_skew());
        assert!(!t.is_symmetric());
        assert_eq!(t.eval(&v(&[0, 1, 0]), &v(&[0, 0, 1])).unwrap(), v(&[1, 0, 0]));
    }
}
