//! Solution spaces of the linear defining identities.
//!
//! Every identity (derivation, centroid, biderivation, ...) is linear in
//! the unknown map or tensor, so it is instantiated on basis tuples and the
//! resulting homogeneous system is solved exactly.
//!
//! Unknowns are vectorized row-major: a map `D` has `D[r][c]` at `r·n + c`
//! (column `c` is `D e_c`), a tensor `d[i][j][k]` sits at `(i·n + j)·n + k`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearMap, LinearMap, OmegaAlgebra};
use crate::error::Result;
use crate::linalg::{
    format_scalar, frac, nullspace_of, zero_vector, Matrix, RowReducer, Scalar, SubspaceBasis,
    Vector,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Derivation,
    OmegaDerivation,
    Centroid,
    Commuting,
    AntiCommuting,
    DeltaDerivation(#[serde(with = "crate::format::scalar")] Scalar),
}

impl MapKind {
    pub fn half_derivation() -> Self {
        MapKind::DeltaDerivation(frac(1, 2))
    }

    /// Checks the defining identity directly on every ordered basis pair.
    pub fn holds(&self, alg: &OmegaAlgebra, map: &LinearMap) -> bool {
        let n = alg.dim();
        if map.dim() != n {
            return false;
        }
        let e = |i: usize| alg.basis_vector(i);
        let img: Vec<Vector> = (0..n).map(|i| map.image_of_basis(i)).collect();
        let sub = |a: Vector, b: Vector| -> Vector { a.into_iter().zip(b).map(|(x, y)| x - y).collect() };
        for i in 0..n {
            for j in 0..n {
                let ok = match self {
                    MapKind::Derivation | MapKind::OmegaDerivation | MapKind::DeltaDerivation(_) => {
                        let delta = match self {
                            MapKind::DeltaDerivation(d) => d.clone(),
                            _ => Scalar::one(),
                        };
                        let lhs = map.apply_unchecked(alg.basis_bracket(i, j));
                        let rhs: Vector = alg
                            .bracket_unchecked(&img[i], &e(j))
                            .into_iter()
                            .zip(alg.bracket_unchecked(&e(i), &img[j]))
                            .map(|(a, b)| (a + b) * &delta)
                            .collect();
                        let mut ok = lhs == rhs;
                        if matches!(self, MapKind::OmegaDerivation) {
                            let w = alg.omega_unchecked(&img[i], &e(j)) + alg.omega_unchecked(&e(i), &img[j]);
                            ok &= w.is_zero();
                        }
                        ok
                    }
                    MapKind::Centroid => {
                        map.apply_unchecked(alg.basis_bracket(i, j)) == alg.bracket_unchecked(&img[i], &e(j))
                    }
                    MapKind::Commuting => {
                        alg.bracket_unchecked(&img[i], &e(j)) == alg.bracket_unchecked(&e(i), &img[j])
                    }
                    MapKind::AntiCommuting => {
                        let d = sub(
                            alg.bracket_unchecked(&img[i], &e(j)),
                            alg.bracket_unchecked(&img[j], &e(i)),
                        );
                        d.iter().all(Zero::is_zero)
                    }
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn label(&self) -> String {
        match self {
            MapKind::Derivation => "derivation".into(),
            MapKind::OmegaDerivation => "omega_derivation".into(),
            MapKind::Centroid => "centroid".into(),
            MapKind::Commuting => "commuting".into(),
            MapKind::AntiCommuting => "anticommuting".into(),
            MapKind::DeltaDerivation(d) => format!("delta_derivation({})", format_scalar(d)),
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TensorKind {
    Biderivation,
    Symmetric,
    Skew,
    OmegaBiderivation,
}

impl TensorKind {
    /// Checks both biderivation identities plus the kind's extra conditions
    /// on every basis triple.
    pub fn holds(&self, alg: &OmegaAlgebra, t: &BilinearMap) -> bool {
        let n = alg.dim();
        if t.dim() != n {
            return false;
        }
        let e = |i: usize| alg.basis_vector(i);
        let ev = |x: &[Scalar], y: &[Scalar]| t.eval(x, y).expect("dimension");
        let add = |a: Vector, b: Vector| -> Vector { a.into_iter().zip(b).map(|(x, y)| x + y).collect() };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let first = ev(&alg.bracket_unchecked(&x, &y), &z)
                        == add(alg.bracket_unchecked(&x, &ev(&y, &z)), alg.bracket_unchecked(&ev(&x, &z), &y));
                    let second = ev(&x, &alg.bracket_unchecked(&y, &z))
                        == add(alg.bracket_unchecked(&y, &ev(&x, &z)), alg.bracket_unchecked(&ev(&x, &y), &z));
                    if !(first && second) {
                        return false;
                    }
                    if *self == TensorKind::OmegaBiderivation {
                        let lhs = alg.omega_unchecked(&ev(&x, &y), &z);
                        if lhs != alg.omega_unchecked(&y, &ev(&x, &z))
                            || lhs != alg.omega_unchecked(&x, &ev(&z, &y))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        match self {
            TensorKind::Symmetric => t.is_symmetric(),
            TensorKind::Skew => t.is_skew(),
            _ => true,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TensorKind::Biderivation => "biderivation",
            TensorKind::Symmetric => "symmetric_biderivation",
            TensorKind::Skew => "skew_biderivation",
            TensorKind::OmegaBiderivation => "omega_biderivation",
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A solution space of linear maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapSpace {
    pub algebra: String,
    pub dim: usize,
    pub kind: MapKind,
    pub space: SubspaceBasis,
}

impl MapSpace {
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space
            .basis()
            .iter()
            .map(|v| LinearMap::from_vector(self.dim, v).expect("n^2 vector"))
            .collect()
    }

    pub fn contains(&self, map: &LinearMap) -> Result<bool> {
        self.space.contains(&map.to_vector())
    }
}

/// A solution space of bilinear maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorSpace {
    pub algebra: String,
    pub dim: usize,
    pub kind: TensorKind,
    pub space: SubspaceBasis,
}

impl TensorSpace {
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn basis_tensors(&self) -> Vec<BilinearMap> {
        self.space
            .basis()
            .iter()
            .map(|v| BilinearMap::from_vector(self.dim, v).expect("n^3 vector"))
            .collect()
    }

    pub fn contains(&self, t: &BilinearMap) -> Result<bool> {
        self.space.contains(&t.to_vector())
    }
}

/// Vector-valued linear expression in the unknowns: one coefficient row per
/// output coordinate.
#[derive(Clone)]
struct Expr {
    comps: Vec<Vector>,
}

impl Expr {
    fn zero(n: usize, unknowns: usize) -> Self {
        Self {
            comps: vec![zero_vector(unknowns); n],
        }
    }

    fn unknowns(&self) -> usize {
        self.comps.first().map_or(0, Vec::len)
    }

    fn add_scaled(&mut self, other: &Expr, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.comps.iter_mut().zip(&other.comps) {
            for (x, y) in a.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += s * y;
                }
            }
        }
    }

    /// `[self, y]` for a constant vector `y`.
    fn bracket_right_const(&self, alg: &OmegaAlgebra, y: &[Scalar]) -> Expr {
        let n = alg.dim();
        let mut out = Expr::zero(n, self.unknowns());
        for (i, comp) in self.comps.iter().enumerate() {
            if comp.iter().all(Zero::is_zero) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in alg.basis_bracket(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let s = yj * c;
                    for (x, v) in out.comps[k].iter_mut().zip(comp) {
                        if !v.is_zero() {
                            *x += &s * v;
                        }
                    }
                }
            }
        }
        out
    }

    /// `[x, self]` for a constant vector `x`.
    fn bracket_left_const(&self, alg: &OmegaAlgebra, x: &[Scalar]) -> Expr {
        let mut e = self.bracket_right_const(alg, x);
        for comp in &mut e.comps {
            for v in comp.iter_mut() {
                *v = -v.clone();
            }
        }
        e
    }

    /// `ω(self, z)` as a single row.
    fn omega_right_const(&self, alg: &OmegaAlgebra, z: &[Scalar]) -> Vector {
        let mut row = zero_vector(self.unknowns());
        for (t, comp) in self.comps.iter().enumerate() {
            let w = alg.omega_unchecked(&alg.basis_vector(t), z);
            if w.is_zero() {
                continue;
            }
            for (x, v) in row.iter_mut().zip(comp) {
                if !v.is_zero() {
                    *x += &w * v;
                }
            }
        }
        row
    }

    /// `ω(x, self)` as a single row.
    fn omega_left_const(&self, alg: &OmegaAlgebra, x: &[Scalar]) -> Vector {
        let mut row = zero_vector(self.unknowns());
        for (t, comp) in self.comps.iter().enumerate() {
            let w = alg.omega_unchecked(x, &alg.basis_vector(t));
            if w.is_zero() {
                continue;
            }
            for (r, v) in row.iter_mut().zip(comp) {
                if !v.is_zero() {
                    *r += &w * v;
                }
            }
        }
        row
    }
}

/// `D x` with `D` the unknown map.
fn map_apply(n: usize, x: &[Scalar]) -> Expr {
    let mut e = Expr::zero(n, n * n);
    for (c, xc) in x.iter().enumerate() {
        if xc.is_zero() {
            continue;
        }
        for r in 0..n {
            e.comps[r][r * n + c] += xc;
        }
    }
    e
}

/// `δ(u, v)` with `δ` the unknown tensor.
fn tensor_apply(n: usize, u: &[Scalar], v: &[Scalar]) -> Expr {
    let mut e = Expr::zero(n, n * n * n);
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            if ui.is_zero() || vj.is_zero() {
                continue;
            }
            let s = ui * vj;
            for k in 0..n {
                e.comps[k][(i * n + j) * n + k] += &s;
            }
        }
    }
    e
}

fn push_expr(out: &mut Vec<Vector>, e: Expr) {
    out.extend(e.comps.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
}

/// Coefficient rows of the linear system defining `kind`, in deterministic order.
pub fn map_constraint_rows(alg: &OmegaAlgebra, kind: &MapKind) -> Vec<Vector> {
    let n = alg.dim();
    let e = |i: usize| alg.basis_vector(i);
    let mut rows = Vec::new();
    let pairs: Vec<(usize, usize)> = match kind {
        // The centroid and commuting identities are not alternating in (i, j).
        MapKind::Centroid => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
        MapKind::Commuting => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
        _ => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
    };
    for (i, j) in pairs {
        let (x, y) = (e(i), e(j));
        match kind {
            MapKind::Derivation | MapKind::OmegaDerivation | MapKind::DeltaDerivation(_) => {
                let delta = match kind {
                    MapKind::DeltaDerivation(d) => d.clone(),
                    _ => Scalar::one(),
                };
                let mut expr = map_apply(n, alg.basis_bracket(i, j));
                expr.add_scaled(&map_apply(n, &x).bracket_right_const(alg, &y), &-delta.clone());
                expr.add_scaled(&map_apply(n, &y).bracket_left_const(alg, &x), &-delta);
                push_expr(&mut rows, expr);
            }
            MapKind::Centroid => {
                let mut expr = map_apply(n, alg.basis_bracket(i, j));
                expr.add_scaled(&map_apply(n, &x).bracket_right_const(alg, &y), &-Scalar::one());
                push_expr(&mut rows, expr);
            }
            MapKind::Commuting => {
                let mut expr = map_apply(n, &x).bracket_right_const(alg, &y);
                expr.add_scaled(&map_apply(n, &y).bracket_left_const(alg, &x), &-Scalar::one());
                push_expr(&mut rows, expr);
            }
            MapKind::AntiCommuting => {
                let mut expr = map_apply(n, &x).bracket_right_const(alg, &y);
                expr.add_scaled(&map_apply(n, &y).bracket_right_const(alg, &x), &-Scalar::one());
                push_expr(&mut rows, expr);
            }
        }
    }
    rows
}

/// Rows of `ω(D e_i, e_j) + ω(e_i, D e_j) = 0`, `i < j`.
pub fn omega_compatibility_rows(alg: &OmegaAlgebra) -> Vec<Vector> {
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (alg.basis_vector(i), alg.basis_vector(j));
            let row: Vector = map_apply(n, &x)
                .omega_right_const(alg, &y)
                .into_iter()
                .zip(map_apply(n, &y).omega_left_const(alg, &x))
                .map(|(a, b)| a + b)
                .collect();
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

pub fn map_constraint_matrix(alg: &OmegaAlgebra, kind: &MapKind) -> Matrix {
    let n = alg.dim();
    Matrix::from_rows(n * n, map_constraint_rows(alg, kind)).expect("rows have n^2 entries")
}

fn solve_rows(width: usize, rows: impl IntoIterator<Item = Vector>) -> SubspaceBasis {
    let mut reducer = RowReducer::new(width);
    for r in rows {
        reducer.push(r);
    }
    nullspace_of(&reducer)
}

fn map_space(alg: &OmegaAlgebra, kind: MapKind, space: SubspaceBasis) -> MapSpace {
    MapSpace {
        algebra: alg.name().to_string(),
        dim: alg.dim(),
        kind,
        space,
    }
}

fn solve_map_kind(alg: &OmegaAlgebra, kind: MapKind) -> MapSpace {
    let n = alg.dim();
    let space = solve_rows(n * n, map_constraint_rows(alg, &kind));
    map_space(alg, kind, space)
}

pub fn derivations(alg: &OmegaAlgebra) -> MapSpace {
    solve_map_kind(alg, MapKind::Derivation)
}

pub fn omega_derivations(alg: &OmegaAlgebra) -> MapSpace {
    let n = alg.dim();
    let der = derivations(alg);
    let compatible = solve_rows(n * n, omega_compatibility_rows(alg));
    let space = der
        .space
        .intersect(&compatible)
        .expect("both spaces live in n^2");
    map_space(alg, MapKind::OmegaDerivation, space)
}

pub fn centroid(alg: &OmegaAlgebra) -> MapSpace {
    solve_map_kind(alg, MapKind::Centroid)
}

pub fn commuting_maps(alg: &OmegaAlgebra) -> MapSpace {
    solve_map_kind(alg, MapKind::Commuting)
}

pub fn anticommuting_maps(alg: &OmegaAlgebra) -> MapSpace {
    solve_map_kind(alg, MapKind::AntiCommuting)
}

/// Maps with `Δ([x,y]) = δ([Δx, y] + [x, Δy])`.
pub fn delta_derivations(alg: &OmegaAlgebra, delta: &Scalar) -> MapSpace {
    solve_map_kind(alg, MapKind::DeltaDerivation(delta.clone()))
}

pub fn half_derivations(alg: &OmegaAlgebra) -> MapSpace {
    delta_derivations(alg, &frac(1, 2))
}

pub fn solve_map(alg: &OmegaAlgebra, kind: &MapKind) -> MapSpace {
    match kind {
        MapKind::OmegaDerivation => omega_derivations(alg),
        other => solve_map_kind(alg, other.clone()),
    }
}

/// Rows of both biderivation identities over every triple `(i, j, k)`.
fn biderivation_rows(alg: &OmegaAlgebra) -> Vec<Vector> {
    let n = alg.dim();
    let e = |i: usize| alg.basis_vector(i);
    let minus = -Scalar::one();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                // δ([x,y],z) − [x, δ(y,z)] − [δ(x,z), y]
                let mut first = tensor_apply(n, alg.basis_bracket(i, j), &z);
                first.add_scaled(&tensor_apply(n, &y, &z).bracket_left_const(alg, &x), &minus);
                first.add_scaled(&tensor_apply(n, &x, &z).bracket_right_const(alg, &y), &minus);
                push_expr(&mut rows, first);
                // δ(x,[y,z]) − [y, δ(x,z)] − [δ(x,y), z]
                let mut second = tensor_apply(n, &x, alg.basis_bracket(j, k));
                second.add_scaled(&tensor_apply(n, &x, &z).bracket_left_const(alg, &y), &minus);
                second.add_scaled(&tensor_apply(n, &x, &y).bracket_right_const(alg, &z), &minus);
                push_expr(&mut rows, second);
            }
        }
    }
    rows
}

fn symmetry_rows(n: usize, sign: i64) -> Vec<Vector> {
    // d[i][j][k] + sign · d[j][i][k] = 0 for i < j (and i == j when sign = +1)
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && sign < 0 {
                continue;
            }
            for k in 0..n {
                let mut r = zero_vector(n * n * n);
                r[(i * n + j) * n + k] += Scalar::one();
                r[(j * n + i) * n + k] += crate::linalg::int(sign);
                rows.push(r);
            }
        }
    }
    rows
}

/// `ω(δ(x,y), z) = ω(y, δ(x,z))` and `ω(δ(x,y), z) = ω(x, δ(z,y))` on basis triples.
fn omega_biderivation_rows(alg: &OmegaAlgebra) -> Vec<Vector> {
    let n = alg.dim();
    let e = |i: usize| alg.basis_vector(i);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (e(i), e(j), e(k));
                let lhs = tensor_apply(n, &x, &y).omega_right_const(alg, &z);
                let a = tensor_apply(n, &x, &z).omega_left_const(alg, &y);
                let b = tensor_apply(n, &z, &y).omega_left_const(alg, &x);
                for rhs in [a, b] {
                    let r: Vector = lhs.iter().zip(rhs).map(|(p, q)| p - q).collect();
                    if r.iter().any(|v| !v.is_zero()) {
                        rows.push(r);
                    }
                }
            }
        }
    }
    rows
}

fn tensor_space(alg: &OmegaAlgebra, kind: TensorKind, space: SubspaceBasis) -> TensorSpace {
    TensorSpace {
        algebra: alg.name().to_string(),
        dim: alg.dim(),
        kind,
        space,
    }
}

pub fn tensor_constraint_rows(alg: &OmegaAlgebra, kind: TensorKind) -> Vec<Vector> {
    let n = alg.dim();
    let mut rows = biderivation_rows(alg);
    match kind {
        TensorKind::Biderivation => {}
        TensorKind::Symmetric => rows.extend(symmetry_rows(n, -1)),
        TensorKind::Skew => rows.extend(symmetry_rows(n, 1)),
        TensorKind::OmegaBiderivation => rows.extend(omega_biderivation_rows(alg)),
    }
    rows
}

pub fn solve_tensor(alg: &OmegaAlgebra, kind: TensorKind) -> TensorSpace {
    let n = alg.dim();
    let space = solve_rows(n * n * n, tensor_constraint_rows(alg, kind));
    tensor_space(alg, kind, space)
}

pub fn biderivations(alg: &OmegaAlgebra) -> TensorSpace {
    solve_tensor(alg, TensorKind::Biderivation)
}

pub fn symmetric_biderivations(alg: &OmegaAlgebra) -> TensorSpace {
    solve_tensor(alg, TensorKind::Symmetric)
}

pub fn skew_biderivations(alg: &OmegaAlgebra) -> TensorSpace {
    solve_tensor(alg, TensorKind::Skew)
}

pub fn omega_biderivations(alg: &OmegaAlgebra) -> TensorSpace {
    solve_tensor(alg, TensorKind::OmegaBiderivation)
}

/// `δ = δ⁺ + δ⁻` with `δ⁺` symmetric and `δ⁻` skew.
pub fn split_biderivation(delta: &BilinearMap) -> (BilinearMap, BilinearMap) {
    let half = frac(1, 2);
    let swapped = delta.swapped();
    let plus = delta.add(&swapped).expect("same dimension").scale(&half);
    let minus = delta
        .add(&swapped.scale(&-Scalar::one()))
        .expect("same dimension")
        .scale(&half);
    (plus, minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sl2() -> OmegaAlgebra {
        let mut a = OmegaAlgebra::abelian("sl2", 3);
        a.set_bracket(0, 1, &[int(0), int(2), int(0)]).unwrap();
        a.set_bracket(0, 2, &[int(0), int(0), int(-2)]).unwrap();
        a.set_bracket(1, 2, &[int(1), int(0), int(0)]).unwrap();
        a
    }

    #[test]
    fn abelian_algebra_everything_free() {
        let a = OmegaAlgebra::abelian("ab", 2);
        assert_eq!(derivations(&a).rank(), 4);
        assert_eq!(centroid(&a).rank(), 4);
        assert_eq!(commuting_maps(&a).rank(), 4);
        assert_eq!(anticommuting_maps(&a).rank(), 4);
        assert_eq!(biderivations(&a).rank(), 8);
    }

    #[test]
    fn sl2_derivations_are_inner() {
        let a = sl2();
        let der = derivations(&a);
        assert_eq!(der.rank(), 3);
        for i in 0..3 {
            let ad = a.adjoint(&a.basis_vector(i)).unwrap();
            assert!(der.contains(&ad).unwrap());
        }
        assert_eq!(omega_derivations(&a), MapSpace { kind: MapKind::OmegaDerivation, ..der });
    }

    #[test]
    fn sl2_map_spaces() {
        let a = sl2();
        assert_eq!(anticommuting_maps(&a).rank(), 0);
        let cent = centroid(&a);
        assert_eq!(cent.rank(), 1);
        assert!(cent.contains(&LinearMap::identity(3)).unwrap());
        assert_eq!(commuting_maps(&a).space, cent.space);
    }

    #[test]
    fn delta_one_is_derivation() {
        let a = sl2();
        assert_eq!(delta_derivations(&a, &int(1)).space, derivations(&a).space);
    }

    #[test]
    fn sl2_biderivations_are_bracket_multiples() {
        let a = sl2();
        let b = biderivations(&a);
        assert_eq!(b.rank(), 1);
        assert!(b.contains(&a.bracket_tensor()).unwrap());
        assert_eq!(symmetric_biderivations(&a).rank(), 0);
        assert_eq!(skew_biderivations(&a).rank(), 1);
    }

    #[test]
    fn split_examples() {
        let t = sl2().bracket_tensor();
        let (p, m) = split_biderivation(&t);
        assert!(p.is_zero());
        assert_eq!(m, t);
        let mut v = vec![int(0); 27];
        v[(3 + 2) * 3] = int(1);
        v[(2 * 3 + 1) * 3] = int(1);
        let sym = BilinearMap::from_vector(3, &v).unwrap();
        let (p, m) = split_biderivation(&sym);
        assert_eq!(p, sym);
        assert!(m.is_zero());
    }

    #[test]
    fn residuals_vanish_on_returned_bases() {
        let a = sl2();
        for kind in [MapKind::Derivation, MapKind::Centroid, MapKind::Commuting, MapKind::AntiCommuting, MapKind::half_derivation()] {
            let s = solve_map(&a, &kind);
            for m in s.basis_maps() {
                assert!(kind.holds(&a, &m), "{kind}");
            }
        }
        for t in biderivations(&a).basis_tensors() {
            assert!(TensorKind::Biderivation.holds(&a, &t));
        }
    }

    #[test]
    fn holds_rejects_non_solutions() {
        let a = sl2();
        assert!(!MapKind::Derivation.holds(&a, &LinearMap::identity(3)));
        assert!(MapKind::Centroid.holds(&a, &LinearMap::identity(3)));
        assert!(!TensorKind::Symmetric.holds(&a, &a.bracket_tensor()));
    }
}
