//! Local and 2-local membership relative to a solution space.
//!
//! A linear map `Δ` is local with respect to a space `S` of maps when, for
//! every point `x`, `Δx` lies in the evaluation subspace
//! `W(x) = {Sx : S ∈ S}`. For a fixed `x` that is a linear condition on
//! `Δ`, so intersecting over finitely many sample points gives an upper
//! bound (the candidate space) for the set of local maps. `S` itself is
//! always inside it, hence a candidate equal to `S` proves rigidity.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{describe_vector, LinearMap, OmegaAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    int, is_zero_vector, nullspace_of, solve_affine, zero_vector, AffineSolution, Matrix,
    RowReducer, Scalar, SubspaceBasis, Vector,
};
use crate::solvers::MapSpace;

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
pub const DEFAULT_RANDOM_SAMPLES: usize = 8;

/// Which points to test: always every `e_i` and every `e_i + e_j`, plus
/// `random_count` pseudo-random integer points drawn from `seed`.
///
/// Constraints only get stronger where `W(x)` drops rank, and those loci are
/// often thin (for instance `x4 = 0, x2 = 2x1`), so random points can miss
/// them. A nonzero `lattice_budget` adds every primitive integer point of the
/// largest box `[-r, r]^n` holding at most that many points up to sign.
///
/// With `targeted` set, points are also drawn from the loci where `W(x)`
/// falls into a hyperplane `a^⊥`, for every small primitive covector `a`
/// (see [`degenerate_points`]).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub random_count: usize,
    pub seed: u64,
    /// Random coordinates are drawn uniformly from `-entry_bound..=entry_bound`.
    pub entry_bound: i64,
    pub lattice_budget: usize,
    pub targeted: bool,
}

impl Default for SamplePlan {
    fn default() -> Self {
        Self {
            random_count: DEFAULT_RANDOM_SAMPLES,
            seed: DEFAULT_SEED,
            entry_bound: 5,
            lattice_budget: 0,
            targeted: false,
        }
    }
}

pub const THOROUGH_LATTICE_BUDGET: usize = 1500;

impl SamplePlan {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    /// Default plan plus the small-lattice sweep and the targeted search.
    pub fn thorough() -> Self {
        Self {
            lattice_budget: THOROUGH_LATTICE_BUDGET,
            targeted: true,
            ..Self::default()
        }
    }

    /// [`SamplePlan::points`] followed, for a targeted plan, by the
    /// degenerate points of the given maps.
    pub fn points_for(&self, n: usize, maps: &[Matrix]) -> Vec<Vector> {
        let mut pts = self.points(n);
        if self.targeted {
            pts.extend(degenerate_points(n, maps, self.seed));
            let mut seen = std::collections::HashSet::new();
            pts.retain(|p| seen.insert(p.clone()));
        }
        pts
    }

    /// Deterministic sample list for dimension `n`, with duplicates removed
    /// (first occurrence kept).
    pub fn points(&self, n: usize) -> Vec<Vector> {
        let mut pts = Vec::new();
        for i in 0..n {
            pts.push(crate::linalg::unit_vector(n, i));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut v = zero_vector(n);
                v[i] = Scalar::one();
                v[j] = Scalar::one();
                pts.push(v);
            }
        }
        pts.extend(self.random_points(n, self.random_count));
        pts.extend(lattice_points(n, lattice_radius(n, self.lattice_budget)));
        let mut seen = std::collections::HashSet::new();
        pts.retain(|p| seen.insert(p.clone()));
        pts
    }

    /// Nonzero integer points from the plan's seed; vectors with fewer than
    /// two nonzero coordinates are redrawn since they repeat basis samples.
    pub fn random_points(&self, n: usize, count: usize) -> Vec<Vector> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(count);
        while out.len() < count && n > 0 {
            let raw: Vec<i64> = (0..n)
                .map(|_| rng.gen_range(-self.entry_bound..=self.entry_bound))
                .collect();
            let nonzero = raw.iter().filter(|v| **v != 0).count();
            if nonzero >= 2.min(n) && nonzero > 0 {
                out.push(raw.into_iter().map(int).collect());
            }
        }
        out
    }
}

/// Largest `r` with `((2r+1)^n - 1) / 2 <= budget`; 0 disables the sweep.
pub fn lattice_radius(n: usize, budget: usize) -> i64 {
    let count = |r: i64| -> Option<usize> {
        let side = usize::try_from(2 * r + 1).ok()?;
        side.checked_pow(u32::try_from(n).ok()?).map(|c| (c - 1) / 2)
    };
    let mut r = 0;
    while n > 0 && count(r + 1).is_some_and(|c| c <= budget) {
        r += 1;
    }
    r
}

/// Integer points of `[-r, r]^n` whose first nonzero entry is positive and
/// whose entries have gcd 1, in lexicographic order.
pub fn lattice_points(n: usize, r: i64) -> Vec<Vector> {
    use num_integer::Integer;
    let mut out = Vec::new();
    if r == 0 || n == 0 {
        return out;
    }
    let mut cur = vec![-r; n];
    loop {
        let first = cur.iter().find(|v| **v != 0);
        let gcd = cur.iter().fold(0i64, |g, v| g.gcd(v));
        if first.is_some_and(|f| *f > 0) && gcd == 1 {
            out.push(cur.iter().map(|v| int(*v)).collect());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < r {
                cur[k] += 1;
                break;
            }
            cur[k] = -r;
        }
    }
}

/// Points where `span{S x : S ∈ maps}` lies in some hyperplane `a^⊥`.
///
/// For every primitive covector `a` with entries in `{-1, 0, 1}` the set
/// `{x : aᵀ S x = 0 for all S}` is a subspace; when it is proper and nonzero
/// its basis vectors and two integer combinations of them are returned.
/// These are where `W(x)` drops rank, which is where the local conditions
/// are strongest.
pub fn degenerate_points(n: usize, maps: &[Matrix], seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut out = Vec::new();
    for a in lattice_points(n, 1) {
        let mut reducer = RowReducer::new(n);
        for m in maps {
            let row: Vector = (0..n)
                .map(|c| (0..n).fold(Scalar::zero(), |acc, r| acc + &a[r] * &m[(r, c)]))
                .collect();
            reducer.push(row);
        }
        let kernel = reducer.kernel();
        if kernel.is_empty() || kernel.len() == n {
            continue;
        }
        for _ in 0..2 {
            let mut v = zero_vector(n);
            for k in &kernel {
                let t = int(rng.gen_range(-5..=5));
                for (vi, ki) in v.iter_mut().zip(k) {
                    *vi += &t * ki;
                }
            }
            if !is_zero_vector(&v) {
                out.push(v);
            }
        }
        out.extend(kernel);
    }
    out
}

/// `W(x)`, the values attained at `x` by maps of a space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationSubspace {
    #[serde(with = "crate::format::scalar_vec")]
    pub point: Vector,
    pub space: SubspaceBasis,
}

pub fn evaluation_subspace(space: &MapSpace, x: &[Scalar]) -> Result<EvaluationSubspace> {
    if x.len() != space.dim {
        return Err(Error::DimensionMismatch {
            expected: space.dim,
            found: x.len(),
        });
    }
    let values = space
        .basis_maps()
        .into_iter()
        .map(|m| m.apply(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(EvaluationSubspace {
        point: x.to_vec(),
        space: SubspaceBasis::span(space.dim, values)?,
    })
}

/// Rows `a ⊗ x` (over the n² map unknowns) for every `a` annihilating `W`.
fn membership_rows(n: usize, w: &SubspaceBasis, x: &[Scalar]) -> Vec<Vector> {
    let mut reducer = RowReducer::new(n);
    for v in w.basis() {
        reducer.push(v.clone());
    }
    reducer
        .kernel()
        .into_iter()
        .map(|a| {
            let mut row = zero_vector(n * n);
            for r in 0..n {
                if a[r].is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !x[c].is_zero() {
                        row[r * n + c] = &a[r] * &x[c];
                    }
                }
            }
            row
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalClosureResult {
    pub candidate: SubspaceBasis,
    pub base: MapSpace,
    pub certified: bool,
    #[serde(with = "crate::format::scalar_rows")]
    pub samples_used: Vec<Vector>,
    /// A candidate basis map outside the base space, when not certified.
    #[serde(with = "opt_map")]
    pub witness: Option<LinearMap>,
}

mod opt_map {
    use super::*;
    use crate::format::{matrix_from_rows, matrix_to_rows, Rational};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<LinearMap>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.as_ref().map(|m| matrix_to_rows(m.matrix())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<LinearMap>, D::Error> {
        let rows = Option::<Vec<Vec<Rational>>>::deserialize(d)?;
        rows.map(|r| {
            matrix_from_rows(&r)
                .and_then(LinearMap::new)
                .map_err(serde::de::Error::custom)
        })
        .transpose()
    }
}

/// Intersection over sample points of `{B : Bx ∈ W(x)}`.
pub fn local_closure_at(space: &MapSpace, samples: &[Vector]) -> Result<LocalClosureResult> {
    let n = space.dim;
    // Per-sample rows are independent; merging them in sample order keeps
    // the reduced basis bit-identical to a sequential run.
    let per_sample = samples
        .par_iter()
        .map(|x| Ok(membership_rows(n, &evaluation_subspace(space, x)?.space, x)))
        .collect::<Result<Vec<_>>>()?;
    let mut reducer = RowReducer::new(n * n);
    for row in per_sample.into_iter().flatten() {
        reducer.push(row);
    }
    let candidate = nullspace_of(&reducer);
    let certified = candidate.equals(&space.space)?;
    let witness = if certified {
        None
    } else {
        let base = &space.space;
        candidate
            .basis()
            .iter()
            .find(|v| !base.contains(v).unwrap_or(true))
            .map(|v| LinearMap::from_vector(n, v))
            .transpose()?
    };
    Ok(LocalClosureResult {
        candidate,
        base: space.clone(),
        certified,
        samples_used: samples.to_vec(),
        witness,
    })
}

pub fn local_closure(alg: &OmegaAlgebra, space: &MapSpace, plan: &SamplePlan) -> Result<LocalClosureResult> {
    check_space(alg, space)?;
    local_closure_at(space, &plan.points_for(alg.dim(), &space_matrices(space)))
}

fn space_matrices(space: &MapSpace) -> Vec<Matrix> {
    space.basis_maps().into_iter().map(LinearMap::into_matrix).collect()
}

fn check_space(alg: &OmegaAlgebra, space: &MapSpace) -> Result<()> {
    if alg.dim() != space.dim {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: space.dim,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum LocalVerdict {
    /// `Δx ∉ W(x)` at the recorded point.
    NotLocal {
        #[serde(with = "crate::format::scalar_vec")]
        witness: Vector,
    },
    /// Passed every sample but is not known to be in the base space.
    LocalOnSamples,
    /// `Δ` belongs to the base space, so it is local everywhere.
    LocalCertified,
}

impl fmt::Display for LocalVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalVerdict::NotLocal { witness } => write!(f, "NOT_LOCAL at {}", describe_vector(witness)),
            LocalVerdict::LocalOnSamples => f.write_str("LOCAL_ON_SAMPLES"),
            LocalVerdict::LocalCertified => f.write_str("LOCAL_CERTIFIED"),
        }
    }
}

pub fn is_local_member(
    alg: &OmegaAlgebra,
    space: &MapSpace,
    map: &LinearMap,
    plan: &SamplePlan,
) -> Result<LocalVerdict> {
    check_space(alg, space)?;
    if map.dim() != space.dim {
        return Err(Error::DimensionMismatch {
            expected: space.dim,
            found: map.dim(),
        });
    }
    for x in plan.points_for(alg.dim(), &space_matrices(space)) {
        let w = evaluation_subspace(space, &x)?;
        if !w.space.contains(&map.apply(&x)?)? {
            return Ok(LocalVerdict::NotLocal { witness: x });
        }
    }
    if space.contains(map)? {
        Ok(LocalVerdict::LocalCertified)
    } else {
        Ok(LocalVerdict::LocalOnSamples)
    }
}

/// A point `e` at which evaluation `S ↦ S e` is injective on the space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingCertificate {
    #[serde(with = "crate::format::scalar_vec")]
    pub vector: Vector,
    pub kernel_rank: usize,
    pub conclusion: String,
}

/// Rank of `{S ∈ space : S e = 0}`.
pub fn evaluation_kernel_rank(space: &MapSpace, e: &[Scalar]) -> Result<usize> {
    let w = evaluation_subspace(space, e)?;
    Ok(space.rank() - w.space.rank())
}

pub fn separating_vector(space: &MapSpace, candidates: &[Vector]) -> Result<Option<SeparatingCertificate>> {
    if space.rank() > space.dim {
        return Ok(None);
    }
    for e in candidates {
        if evaluation_kernel_rank(space, e)? == 0 {
            return Ok(Some(SeparatingCertificate {
                vector: e.clone(),
                kernel_rank: 0,
                conclusion: format!(
                    "every map in the {} space is determined by its value at {}; a 2-local map agrees at every x with the unique member matching it at this point, so it lies in the space",
                    space.kind,
                    describe_vector(e)
                ),
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum TwoLocalReport {
    Rigid { certificate: SeparatingCertificate },
    Inconclusive {
        space_rank: usize,
        dim: usize,
        /// Smallest evaluation-kernel rank seen over the candidate points.
        min_kernel_rank: usize,
        #[serde(with = "crate::format::scalar_vec")]
        best_point: Vector,
    },
}

impl TwoLocalReport {
    pub fn is_rigid(&self) -> bool {
        matches!(self, TwoLocalReport::Rigid { .. })
    }

    pub fn certificate(&self) -> Option<&SeparatingCertificate> {
        match self {
            TwoLocalReport::Rigid { certificate } => Some(certificate),
            TwoLocalReport::Inconclusive { .. } => None,
        }
    }
}

pub fn two_local_report(alg: &OmegaAlgebra, space: &MapSpace, plan: &SamplePlan) -> Result<TwoLocalReport> {
    check_space(alg, space)?;
    let candidates = plan.points(alg.dim());
    if let Some(certificate) = separating_vector(space, &candidates)? {
        return Ok(TwoLocalReport::Rigid { certificate });
    }
    let mut best: Option<(usize, Vector)> = None;
    for e in &candidates {
        let k = evaluation_kernel_rank(space, e)?;
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, e.clone()));
        }
    }
    let (min_kernel_rank, best_point) = best.unwrap_or((space.rank(), zero_vector(alg.dim())));
    Ok(TwoLocalReport::Inconclusive {
        space_rank: space.rank(),
        dim: alg.dim(),
        min_kernel_rank,
        best_point,
    })
}

/// Affine functional `Σ coeffs_i t_i + constant`, required to be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenCondition {
    pub coeffs: Vec<Scalar>,
    pub constant: Scalar,
}

impl OpenCondition {
    pub fn describe(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("{c}*{name}"));
            }
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        format!("{} != 0", parts.join(" + "))
    }
}

/// Matrices `A₀ + Σ tᵢ Aᵢ` subject to open (nonvanishing) conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFamily {
    base: Matrix,
    directions: Vec<Matrix>,
    parameter_names: Vec<String>,
    open_conditions: Vec<OpenCondition>,
}

impl AffineFamily {
    pub fn new(
        base: Matrix,
        directions: Vec<Matrix>,
        parameter_names: Vec<String>,
        open_conditions: Vec<OpenCondition>,
    ) -> Result<Self> {
        if !base.is_square() {
            return Err(Error::Invalid("family base matrix must be square".into()));
        }
        let n = base.rows();
        if directions.iter().any(|d| d.rows() != n || d.cols() != n) {
            return Err(Error::Invalid(format!("family directions must all be {n}x{n}")));
        }
        if parameter_names.len() != directions.len() {
            return Err(Error::Invalid("one parameter name per direction".into()));
        }
        if open_conditions.iter().any(|c| c.coeffs.len() != directions.len()) {
            return Err(Error::Invalid("open condition arity differs from parameter count".into()));
        }
        Ok(Self {
            base,
            directions,
            parameter_names,
            open_conditions,
        })
    }

    pub fn dim(&self) -> usize {
        self.base.rows()
    }

    pub fn base(&self) -> &Matrix {
        &self.base
    }

    pub fn directions(&self) -> &[Matrix] {
        &self.directions
    }

    pub fn parameter_names(&self) -> &[String] {
        &self.parameter_names
    }

    pub fn open_conditions(&self) -> &[OpenCondition] {
        &self.open_conditions
    }

    pub fn realize(&self, params: &[Scalar]) -> Result<Matrix> {
        if params.len() != self.directions.len() {
            return Err(Error::DimensionMismatch {
                expected: self.directions.len(),
                found: params.len(),
            });
        }
        let mut m = self.base.clone();
        for (t, d) in params.iter().zip(&self.directions) {
            m = m.add(&d.scale(t))?;
        }
        Ok(m)
    }

    /// `{A₀ + Σ tᵢAᵢ}` as an affine subspace of the vectorized n×n matrices.
    pub fn hull(&self) -> AffineSolution {
        AffineSolution {
            particular: self.base.entries().to_vec(),
            homogeneous: SubspaceBasis::span(
                self.dim() * self.dim(),
                self.directions.iter().map(|d| d.entries().to_vec()),
            )
            .expect("directions are n x n"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineClosureResult {
    /// The sampled conditions are inconsistent: no map is locally realizable.
    Empty { samples_used: Vec<Vector> },
    Closure {
        solution: AffineSolution,
        matches_family_hull: bool,
        samples_used: Vec<Vector>,
        caveats: Vec<String>,
    },
}

impl AffineClosureResult {
    pub fn matches_family_hull(&self) -> bool {
        matches!(self, AffineClosureResult::Closure { matches_family_hull: true, .. })
    }

    pub fn solution(&self) -> Option<&AffineSolution> {
        match self {
            AffineClosureResult::Closure { solution, .. } => Some(solution),
            AffineClosureResult::Empty { .. } => None,
        }
    }
}

/// `{B : Bx ∈ A₀x + span{A₁x, …, A_mx}}` over the plan's samples.
pub fn affine_local_closure(alg: &OmegaAlgebra, family: &AffineFamily, plan: &SamplePlan) -> Result<AffineClosureResult> {
    let n = alg.dim();
    if family.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: family.dim(),
        });
    }
    let samples = plan.points_for(n, family.directions());
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in &samples {
        let values = family
            .directions()
            .iter()
            .map(|d| d.mul_vec(x))
            .collect::<Result<Vec<_>>>()?;
        let w = SubspaceBasis::span(n, values)?;
        let target = family.base().mul_vec(x)?;
        let mut annihilators = RowReducer::new(n);
        for v in w.basis() {
            annihilators.push(v.clone());
        }
        for a in annihilators.kernel() {
            let mut row = zero_vector(n * n);
            for r in 0..n {
                for c in 0..n {
                    if !a[r].is_zero() && !x[c].is_zero() {
                        row[r * n + c] = &a[r] * &x[c];
                    }
                }
            }
            let value = a
                .iter()
                .zip(&target)
                .fold(Scalar::zero(), |acc, (p, q)| acc + p * q);
            if is_zero_vector(&row) && value.is_zero() {
                continue;
            }
            rows.push(row);
            rhs.push(value);
        }
    }
    let system = Matrix::from_rows(n * n, rows)?;
    let Some(solution) = solve_affine(&system, &rhs)? else {
        return Ok(AffineClosureResult::Empty { samples_used: samples });
    };
    let matches_family_hull = solution.equals(&family.hull())?;
    let mut caveats: Vec<String> = family
        .open_conditions()
        .iter()
        .map(|c| {
            format!(
                "open condition {} is not enforced by the linear closure",
                c.describe(family.parameter_names())
            )
        })
        .collect();
    caveats.push(
        "members of the closure are not checked for invertibility at boundary parameters".to_string(),
    );
    Ok(AffineClosureResult::Closure {
        solution,
        matches_family_hull,
        samples_used: samples,
        caveats,
    })
}

/// Functional on n×n matrices picking `Σ coeffs · B[r][c]` (0-based entries).
pub fn entry_functional(n: usize, terms: &[((usize, usize), i64)]) -> Vector {
    let mut f = zero_vector(n * n);
    for &((r, c), v) in terms {
        f[r * n + c] += int(v);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::derivations;

    fn l14() -> OmegaAlgebra {
        crate::catalog::get("L_{1,4}", &[]).unwrap()
    }

    #[test]
    fn plan_points_are_deterministic() {
        let p = SamplePlan::default();
        assert_eq!(p.points(4), p.points(4));
        assert_eq!(p.points(4).len(), 4 + 6 + 8);
        assert_eq!(lattice_radius(4, THOROUGH_LATTICE_BUDGET), 3);
        assert_eq!(lattice_radius(6, THOROUGH_LATTICE_BUDGET), 1);
        assert_eq!(lattice_radius(4, 0), 0);
        // primitive points of [-1,1]^2 up to sign: (0,1), (1,-1), (1,0), (1,1)
        assert_eq!(lattice_points(2, 1).len(), 4);
        let t = SamplePlan::thorough().points(4);
        assert!(t.len() > 500);
        assert!(t.contains(&vec![int(1), int(2), int(0), int(0)]));
        assert_ne!(SamplePlan::with_seed(1).points(4), p.points(4));
        for v in p.random_points(4, 20) {
            assert!(!is_zero_vector(&v));
        }
    }

    #[test]
    fn zero_point_has_zero_evaluation() {
        let der = derivations(&l14());
        assert_eq!(evaluation_subspace(&der, &zero_vector(4)).unwrap().space.rank(), 0);
        assert!(evaluation_subspace(&der, &zero_vector(3)).is_err());
    }

    #[test]
    fn base_members_are_certified() {
        let a = l14();
        let der = derivations(&a);
        let plan = SamplePlan::default();
        for m in der.basis_maps() {
            assert_eq!(is_local_member(&a, &der, &m, &plan).unwrap(), LocalVerdict::LocalCertified);
        }
        assert_eq!(
            is_local_member(&a, &der, &LinearMap::zero(4), &plan).unwrap(),
            LocalVerdict::LocalCertified
        );
    }

    #[test]
    fn identity_family_closure_is_identity() {
        let a = l14();
        let fam = AffineFamily::new(Matrix::identity(4), vec![], vec![], vec![]).unwrap();
        let r = affine_local_closure(&a, &fam, &SamplePlan::default()).unwrap();
        assert!(r.matches_family_hull());
        let sol = r.solution().unwrap();
        assert_eq!(sol.homogeneous.rank(), 0);
        assert_eq!(sol.particular, Matrix::identity(4).entries().to_vec());
    }

    #[test]
    fn open_condition_text() {
        let c = OpenCondition {
            coeffs: vec![int(1), int(0)],
            constant: int(1),
        };
        assert_eq!(c.describe(&["a".into(), "b".into()]), "a + 1 != 0");
    }
}
