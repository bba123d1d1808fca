//! Reproduction checks for the published claims about the catalog.
//!
//! Each criterion compares computed objects with the values recorded in
//! [`crate::catalog::ExpectedResults`] (or with the structural patterns the
//! literature prints) and reports every mismatch it finds.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{describe_matrix, describe_vector, BilinearMap, LinearMap, OmegaAlgebra};
use crate::catalog::{self, CatalogEntry};
use crate::linalg::{
    format_scalar, frac, int, rref, unit_vector, zero_vector, Matrix, Scalar, SubspaceBasis, Vector,
};
use crate::local::{
    affine_local_closure, evaluation_subspace, local_closure, two_local_report, AffineFamily,
    OpenCondition, SamplePlan, TwoLocalReport,
};
use crate::solvers::{
    anticommuting_maps, biderivations, centroid, commuting_maps, delta_derivations, derivations,
    half_derivations, map_constraint_rows, omega_biderivations, skew_biderivations, solve_map,
    solve_tensor, symmetric_biderivations, MapKind, MapSpace, TensorKind,
};

pub const CRITERIA: u32 = 11;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionResult {
    fn new(id: u32, title: &str) -> Self {
        Self {
            id,
            title: title.to_string(),
            passed: true,
            details: Vec::new(),
        }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.passed = false;
        self.details.push(msg.into());
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

/// One concrete algebra: a catalog entry at one admissible sample.
pub struct Instance {
    pub entry: CatalogEntry,
    pub params: Vec<(String, Scalar)>,
    pub algebra: OmegaAlgebra,
}

impl Instance {
    pub fn label(&self) -> &str {
        self.algebra.name()
    }
}

pub fn instances(entries: &[CatalogEntry]) -> Vec<Instance> {
    entries
        .iter()
        .flat_map(|e| {
            e.sample_assignments().into_iter().map(move |params| Instance {
                entry: e.clone(),
                algebra: e.build(&params).expect("catalog samples are admissible"),
                params,
            })
        })
        .collect()
}

fn cat(key: &str) -> OmegaAlgebra {
    catalog::get(key, &[]).expect("built-in key")
}

fn e(n: usize, i: usize) -> Vector {
    unit_vector(n, i)
}

/// Runs every criterion; criteria are independent and run concurrently,
/// results come back ordered by id.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=CRITERIA)
        .into_par_iter()
        .map(|id| run(id, seed).expect("id in range"))
        .collect()
}

pub fn run(id: u32, seed: u64) -> Option<CriterionResult> {
    Some(match id {
        1 => axioms(),
        2 => derivation_forms(),
        3 => skew_biderivations_vanish(),
        4 => symmetric_biderivation_table(),
        5 => simple_three_dimensional(),
        6 => local_rigidity(seed),
        7 => two_local_rigidity(seed),
        8 => local_automorphism_families(seed),
        9 => omega_biderivation_equality(),
        10 => semisimple_lie(),
        11 => properties(seed),
        _ => return None,
    })
}

pub fn axioms() -> CriterionResult {
    let mut r = CriterionResult::new(1, "catalog algebras satisfy the omega-Lie axioms");
    let mut entries = catalog::classified();
    entries.extend(catalog::list().into_iter().filter(|e| e.group == catalog::Group::SpecialPoint));
    let all = instances(&entries);
    for inst in &all {
        let rep = inst.algebra.check_axioms();
        r.check(rep.passed, || {
            let t: Vec<String> = rep
                .failing_triples()
                .iter()
                .map(|(i, j, k)| format!("({},{},{})", i + 1, j + 1, k + 1))
                .collect();
            format!("{} fails on triples {}", inst.label(), t.join(" "))
        });
        r.check(!rep.omega_is_zero, || format!("{} has omega = 0", inst.label()));
    }
    for key in ["sl2", "sl2_plus_sl2"] {
        let rep = cat(key).check_axioms();
        r.check(rep.passed && rep.omega_is_zero, || format!("{key} is not a Lie algebra"));
    }
    r.note(format!("{} omega-algebra instances and 2 Lie fixtures checked", all.len()));
    r
}

/// Entries of the basis maps outside `allowed` cells, as (row, col), 1-based.
fn cells_outside(space: &MapSpace, allowed: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let n = space.dim;
    let mut out = Vec::new();
    for m in space.basis_maps() {
        for r in 0..n {
            for c in 0..n {
                if !m.matrix()[(r, c)].is_zero() && !allowed(r, c) && !out.contains(&(r + 1, c + 1)) {
                    out.push((r + 1, c + 1));
                }
            }
        }
    }
    out
}

fn transposed(space: &MapSpace) -> MapSpace {
    let maps: Vec<Vector> = space
        .basis_maps()
        .iter()
        .map(|m| m.matrix().transpose().into_entries())
        .collect();
    MapSpace {
        space: SubspaceBasis::span(space.dim * space.dim, maps).expect("n^2 vectors"),
        ..space.clone()
    }
}

/// The printed matrix form of Der(L_{1,1}): columns 1 and 2 vanish and on
/// columns 3, 4 the second row is minus the first.
fn matches_l11_form(der: &MapSpace) -> Vec<String> {
    let mut bad = Vec::new();
    let off = cells_outside(der, |_, c| c >= 2);
    if !off.is_empty() {
        bad.push(format!("nonzero entries outside columns 3-4 at {off:?}"));
    }
    for m in der.basis_maps() {
        let a = m.matrix();
        if (2..4).any(|c| a[(1, c)] != -a[(0, c)].clone()) {
            bad.push("row 2 is not minus row 1 on columns 3-4".into());
            break;
        }
    }
    bad
}

/// The printed form of Der(L_{1,4}): only column 3 is nonzero and it reads
/// (a, -a, a, b), with both a and b free.
fn matches_l14_form(der: &MapSpace) -> Vec<String> {
    let mut bad = Vec::new();
    let off = cells_outside(der, |_, c| c == 2);
    if !off.is_empty() {
        bad.push(format!("nonzero entries outside column 3 at {off:?}"));
    }
    let cols: Vec<Vector> = der.basis_maps().iter().map(|m| m.matrix().column(2)).collect();
    let pattern = SubspaceBasis::span(4, vec![vec![int(1), int(-1), int(1), int(0)], e(4, 3)]).unwrap();
    let got = SubspaceBasis::span(4, cols).unwrap();
    if !got.equals(&pattern).unwrap() {
        bad.push(format!("column-3 values span {got:?}, not span{{(1,-1,1,0), (0,0,0,1)}}"));
    }
    bad
}

pub fn derivation_forms() -> CriterionResult {
    let mut r = CriterionResult::new(2, "Der(L_{1,1}) and Der(L_{1,4}) have the printed matrix forms");
    for (key, rank, check) in [
        ("L_{1,1}", 6, matches_l11_form as fn(&MapSpace) -> Vec<String>),
        ("L_{1,4}", 2, matches_l14_form),
    ] {
        let der = derivations(&cat(key));
        r.check(der.rank() == rank, || format!("Der({key}) has rank {}, expected {rank}", der.rank()));
        let bad = check(&der);
        if !bad.is_empty() {
            for b in bad {
                r.fail(format!("Der({key}): {b}"));
            }
            if check(&transposed(&der)).is_empty() {
                r.note(format!(
                    "Der({key}): the transposed basis (row i = image of e_i) matches the printed form exactly"
                ));
            }
        }
    }
    r
}

pub fn skew_biderivations_vanish() -> CriterionResult {
    let mut r = CriterionResult::new(3, "4-dimensional algebras have no skew biderivations");
    let all = instances(&catalog::four_dimensional());
    let ranks: Vec<(String, usize)> = all
        .par_iter()
        .map(|i| (i.label().to_string(), skew_biderivations(&i.algebra).rank()))
        .collect();
    for (label, rank) in ranks {
        r.check(rank == 0, || format!("{label}: skew biderivation rank {rank}"));
    }
    r
}

pub fn symmetric_biderivation_table() -> CriterionResult {
    let mut r = CriterionResult::new(4, "symmetric biderivation ranks match the published table");
    let mut entries = catalog::four_dimensional();
    entries.extend(catalog::list().into_iter().filter(|e| e.group == catalog::Group::SpecialPoint));
    let all = instances(&entries);
    let ranks: Vec<usize> = all
        .par_iter()
        .map(|i| symmetric_biderivations(&i.algebra).rank())
        .collect();
    for (inst, rank) in all.iter().zip(ranks) {
        let want = inst.entry.expected.sym_bider_rank.expect("4d entries carry a table value");
        if rank != want {
            let note = if inst.entry.key == "E_{1,alpha}" {
                " (see the entry's table discrepancy note)"
            } else {
                ""
            };
            r.fail(format!("{}: rank {rank}, table says {want}{note}", inst.label()));
        }
    }
    let sym = symmetric_biderivations(&cat("L_{1,1}"));
    let mut outside = Vec::new();
    for t in sym.basis_tensors() {
        for (i, j) in t.support() {
            if !(i >= 2 && j >= 2) && !outside.contains(&(i + 1, j + 1)) {
                outside.push((i + 1, j + 1));
            }
        }
    }
    r.check(outside.is_empty(), || {
        format!("L_{{1,1}}: symmetric biderivations are nonzero at index pairs {outside:?}, outside {{3,4}}x{{3,4}}")
    });
    r
}

/// The first equation of the published ½-derivation system for A_α, read
/// with `a_ij` the `e_i`-coefficient of `Δ(e_j)`:
/// `2a11 = a11 - α a31 + a22`, returned as a functional on the unknowns.
pub fn half_system_first_row(alpha: &Scalar) -> Vector {
    let mut f = zero_vector(9);
    f[0] = int(1); // 2a11 - a11
    f[2 * 3] = alpha.clone(); // + α a31
    f[4] = int(-1); // - a22
    f
}

pub fn simple_three_dimensional() -> CriterionResult {
    let mut r = CriterionResult::new(5, "simple 3-dimensional algebras: zero biderivations, scalar 1/2-derivations");
    let alpha = int(2);
    for (key, alg) in [
        ("A_2", catalog::get_alpha("A_alpha", alpha.clone()).unwrap()),
        ("B", cat("B")),
        ("C_2", catalog::get_alpha("C_alpha", alpha.clone()).unwrap()),
    ] {
        let b = biderivations(&alg);
        r.check(b.rank() == 0, || format!("{key}: biderivation rank {}", b.rank()));
        let h = half_derivations(&alg);
        let id = LinearMap::identity(3);
        r.check(h.rank() == 1 && h.contains(&id).unwrap(), || {
            format!(
                "{key}: 1/2-derivation rank {} (identity {}in the space)",
                h.rank(),
                if h.contains(&id).unwrap() { "" } else { "not " }
            )
        });
    }
    let a2 = catalog::get_alpha("A_alpha", alpha.clone()).unwrap();
    let rows = map_constraint_rows(&a2, &MapKind::half_derivation());
    let row_space = SubspaceBasis::span(9, rows).unwrap();
    let f = half_system_first_row(&alpha);
    r.check(row_space.contains(&f).unwrap(), || {
        "A_2: 2a11 = a11 - alpha a31 + a22 is not implied by the assembled 1/2-derivation rows".into()
    });
    let mut with_a32 = f.clone();
    with_a32[2 * 3 + 1] = int(-1);
    if row_space.contains(&with_a32).unwrap() && !row_space.basis().is_empty() {
        r.note("A_2: the instantiated identity on (e1,e2) reads 2a11 = a11 - alpha a31 + a22 + a32; the printed form drops a32, which other rows force to 0");
    }
    r
}

fn plan_for_local(seed: u64) -> SamplePlan {
    SamplePlan {
        seed,
        ..SamplePlan::thorough()
    }
}

pub fn local_rigidity(seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(6, "local derivations are derivations; local 1/2-derivations are scalar");
    let plan = plan_for_local(seed);
    let mut entries = catalog::four_dimensional();
    entries.extend(catalog::three_dimensional());
    let all = instances(&entries);
    let outcomes: Vec<(String, usize, usize, Option<LinearMap>)> = all
        .par_iter()
        .map(|i| {
            let der = derivations(&i.algebra);
            let res = local_closure(&i.algebra, &der, &plan).unwrap();
            (i.label().to_string(), res.candidate.rank(), der.rank(), res.witness)
        })
        .collect();
    for (label, cand, base, witness) in outcomes {
        r.check(cand == base, || {
            format!(
                "{label}: Der rank {base}, local closure rank {cand}; extra map {}",
                witness.map_or("none".into(), |w| describe_matrix(w.matrix()))
            )
        });
    }
    let simple = instances(
        &["A_alpha", "B", "C_alpha"]
            .iter()
            .map(|k| catalog::entry(k).unwrap())
            .collect::<Vec<_>>(),
    );
    for inst in &simple {
        let h = half_derivations(&inst.algebra);
        let res = local_closure(&inst.algebra, &h, &plan).unwrap();
        r.check(res.certified && res.candidate.rank() == 1, || {
            format!(
                "{}: 1/2-derivation rank {}, local closure rank {} (certified {})",
                inst.label(),
                h.rank(),
                res.candidate.rank(),
                res.certified
            )
        });
    }
    r.note(format!(
        "sample plan: basis, pairwise sums, {} random points (seed {:#x}), primitive lattice points up to budget {}",
        plan.random_count, plan.seed, plan.lattice_budget
    ));
    r
}

pub fn two_local_rigidity(seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(7, "2-local rigidity via separating vectors");
    let plan = SamplePlan::with_seed(seed);
    let entries = catalog::four_dimensional();
    let reports: Vec<(CatalogEntry, Vec<(String, TwoLocalReport)>)> = entries
        .par_iter()
        .map(|entry| {
            let reps = instances(std::slice::from_ref(entry))
                .into_iter()
                .map(|i| {
                    let der = derivations(&i.algebra);
                    (i.label().to_string(), two_local_report(&i.algebra, &der, &plan).unwrap())
                })
                .collect();
            (entry.clone(), reps)
        })
        .collect();
    let mut rigid = Vec::new();
    for (entry, reps) in &reports {
        let all_rigid = reps.iter().all(|(_, rep)| rep.is_rigid());
        if all_rigid {
            rigid.push(entry.key.clone());
        }
        match entry.expected.two_local_rigid {
            Some(true) => {
                for (label, rep) in reps {
                    match rep {
                        TwoLocalReport::Rigid { certificate } => {
                            let v = &certificate.vector;
                            r.check(*v == e(4, 2) || *v == e(4, 3), || {
                                format!("{label}: separating vector {} is neither e3 nor e4", describe_vector(v))
                            });
                        }
                        TwoLocalReport::Inconclusive { space_rank, min_kernel_rank, .. } => r.fail(format!(
                            "{label}: no separating vector (Der rank {space_rank}, smallest evaluation kernel rank {min_kernel_rank})"
                        )),
                    }
                }
            }
            Some(false) => {
                r.check(!all_rigid, || format!("{}: expected INCONCLUSIVE, found RIGID", entry.key));
            }
            None => {}
        }
    }
    let listed: Vec<String> = entries
        .iter()
        .filter(|e| e.expected.two_local_rigid == Some(true))
        .map(|e| e.key.clone())
        .collect();
    let extra: Vec<&String> = rigid.iter().filter(|k| !listed.contains(k)).collect();
    if !extra.is_empty() {
        r.fail(format!("separating vectors also exist for {extra:?}, outside the published list"));
    }
    for inst in instances(
        &["A_alpha", "B", "C_alpha"]
            .iter()
            .map(|k| catalog::entry(k).unwrap())
            .collect::<Vec<_>>(),
    ) {
        let h = half_derivations(&inst.algebra);
        let rep = two_local_report(&inst.algebra, &h, &plan).unwrap();
        r.check(rep.is_rigid(), || format!("{}: 1/2-derivations not separated", inst.label()));
    }
    r
}

/// `E_{rc}` with 1-based indices.
pub fn unit_matrix(n: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(r - 1, c - 1)] = int(1);
    m
}

/// Automorphism-pattern family for L_{1,1}: identity plus a·(E13 - E23 + E33) + b·E43.
pub fn l11_automorphism_family() -> AffineFamily {
    let a_dir = unit_matrix(4, 1, 3)
        .add(&unit_matrix(4, 2, 3).scale(&int(-1)))
        .and_then(|m| m.add(&unit_matrix(4, 3, 3)))
        .unwrap();
    AffineFamily::new(
        Matrix::identity(4),
        vec![a_dir, unit_matrix(4, 4, 3)],
        vec!["a".into(), "b".into()],
        vec![OpenCondition {
            coeffs: vec![int(1), int(0)],
            constant: int(1),
        }],
    )
    .unwrap()
}

/// Automorphism-pattern family for L_{2,3}: (I - E44) + a·(E14 - E24 + E34) + b·E44.
pub fn l23_automorphism_family() -> AffineFamily {
    let base = Matrix::identity(4).add(&unit_matrix(4, 4, 4).scale(&int(-1))).unwrap();
    let a_dir = unit_matrix(4, 1, 4)
        .add(&unit_matrix(4, 2, 4).scale(&int(-1)))
        .and_then(|m| m.add(&unit_matrix(4, 3, 4)))
        .unwrap();
    AffineFamily::new(
        base,
        vec![a_dir, unit_matrix(4, 4, 4)],
        vec!["a".into(), "b".into()],
        vec![OpenCondition {
            coeffs: vec![int(0), int(1)],
            constant: int(0),
        }],
    )
    .unwrap()
}

/// Functional `Σ coeff · b_rc` over vectorized 4×4 matrices (1-based cells).
fn cells(terms: &[((usize, usize), i64)]) -> Vector {
    let mut f = zero_vector(16);
    for &((r, c), v) in terms {
        f[(r - 1) * 4 + (c - 1)] += int(v);
    }
    f
}

pub fn local_automorphism_families(seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(8, "local automorphism closures match the affine families");
    let plan = SamplePlan::with_seed(seed);
    for (key, fam) in [("L_{1,1}", l11_automorphism_family()), ("L_{2,3}", l23_automorphism_family())] {
        let res = affine_local_closure(&cat(key), &fam, &plan).unwrap();
        r.check(res.matches_family_hull(), || format!("{key}: closure differs from the family hull"));
        if key == "L_{1,1}" {
            let Some(sol) = res.solution() else {
                r.fail("L_{1,1}: closure is empty");
                continue;
            };
            let claims: [(&str, Vector, Scalar); 5] = [
                ("b11 = 1", cells(&[((1, 1), 1)]), int(1)),
                ("b22 = 1", cells(&[((2, 2), 1)]), int(1)),
                ("b44 = 1", cells(&[((4, 4), 1)]), int(1)),
                ("b13 = -b23", cells(&[((1, 3), 1), ((2, 3), 1)]), int(0)),
                ("b13 = b33 - 1", cells(&[((1, 3), 1), ((3, 3), -1)]), int(-1)),
            ];
            for (label, f, v) in claims {
                r.check(sol.implies(&f, &v).unwrap(), || format!("L_{{1,1}}: closure does not force {label}"));
            }
        } else if let Some(sol) = res.solution() {
            let free = sol.homogeneous.basis().iter().any(|v| !v[15].is_zero());
            r.check(free, || "L_{2,3}: b44 is not a free direction".into());
        }
    }
    r
}

pub fn omega_biderivation_equality() -> CriterionResult {
    let mut r = CriterionResult::new(9, "omega-biderivations equal biderivations except L_{1,6}, L_{1,8}");
    let all = instances(&catalog::four_dimensional());
    let ranks: Vec<(usize, usize)> = all
        .par_iter()
        .map(|i| (biderivations(&i.algebra).rank(), omega_biderivations(&i.algebra).rank()))
        .collect();
    for (inst, (b, w)) in all.iter().zip(ranks) {
        match inst.entry.expected.bider_omega_equal {
            Some(true) => r.check(b == w, || format!("{}: BDer_w rank {w} < BDer rank {b}", inst.label())),
            Some(false) => r.check(w < b, || format!("{}: BDer_w == BDer (rank {b}), expected strict inclusion", inst.label())),
            None => {}
        }
    }
    r
}

pub fn semisimple_lie() -> CriterionResult {
    let mut r = CriterionResult::new(10, "semisimple Lie checks on sl2 and sl2+sl2");
    let sl2 = cat("sl2");
    let ac = anticommuting_maps(&sl2).rank();
    r.check(ac == 0, || format!("sl2: Acmap rank {ac}"));
    let sym = symmetric_biderivations(&sl2).rank();
    r.check(sym == 0, || format!("sl2: symmetric biderivation rank {sym}"));
    let skew = skew_biderivations(&sl2);
    let br = sl2.bracket_tensor();
    r.check(skew.rank() == 1 && skew.contains(&br).unwrap(), || {
        format!("sl2: skew biderivation rank {}, bracket in span: {}", skew.rank(), skew.contains(&br).unwrap())
    });
    let cent = centroid(&sl2);
    let cmap = commuting_maps(&sl2);
    r.check(cent.rank() == 1, || format!("sl2: centroid rank {}", cent.rank()));
    r.check(cmap.space == cent.space, || "sl2: Cmap differs from Cent".into());
    let two = cat("sl2_plus_sl2");
    let skew2 = skew_biderivations(&two).rank();
    r.check(skew2 == 2, || format!("sl2+sl2: skew biderivation rank {skew2}"));
    r
}

fn random_matrix(rng: &mut ChaCha8Rng) -> Matrix {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=7);
    let sparse = rng.gen_bool(0.5);
    let entries = (0..rows * cols)
        .map(|_| {
            if sparse && rng.gen_bool(0.6) {
                Scalar::zero()
            } else {
                frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
            }
        })
        .collect();
    Matrix::from_row_major(rows, cols, entries).unwrap()
}

fn tensor_kinds() -> [TensorKind; 4] {
    [
        TensorKind::Biderivation,
        TensorKind::Symmetric,
        TensorKind::Skew,
        TensorKind::OmegaBiderivation,
    ]
}

fn map_kinds() -> Vec<MapKind> {
    vec![
        MapKind::Derivation,
        MapKind::OmegaDerivation,
        MapKind::Centroid,
        MapKind::Commuting,
        MapKind::AntiCommuting,
        MapKind::half_derivation(),
    ]
}

pub fn properties(seed: u64) -> CriterionResult {
    let mut r = CriterionResult::new(11, "property suites: residuals, rank-nullity, soundness, determinism");
    let all = instances(&catalog::list());

    let residual_failures: Vec<String> = all
        .par_iter()
        .flat_map(|inst| {
            let a = &inst.algebra;
            let mut bad = Vec::new();
            for kind in map_kinds() {
                if !solve_map(a, &kind).basis_maps().iter().all(|m| kind.holds(a, m)) {
                    bad.push(format!("{}: {kind} basis violates its identity", inst.label()));
                }
            }
            for kind in tensor_kinds() {
                let ok = solve_tensor(a, kind)
                    .basis_tensors()
                    .iter()
                    .all(|t: &BilinearMap| kind.holds(a, t));
                if !ok {
                    bad.push(format!("{}: {kind} basis violates its identity", inst.label()));
                }
            }
            if delta_derivations(a, &int(1)).space != derivations(a).space {
                bad.push(format!("{}: 1-derivations differ from derivations", inst.label()));
            }
            bad
        })
        .collect();
    for b in residual_failures {
        r.fail(b);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..1000 {
        let m = random_matrix(&mut rng);
        let red = rref(&m);
        let ns = crate::linalg::nullspace(&m);
        if red.rank + ns.rank() != m.cols() {
            r.fail(format!("random matrix {trial}: rank-nullity fails"));
        }
        if rref(&red.matrix).matrix != red.matrix {
            r.fail(format!("random matrix {trial}: rref is not idempotent"));
        }
        if ns.basis().iter().any(|v| !m.mul_vec(v).unwrap().iter().all(Zero::is_zero)) {
            r.fail(format!("random matrix {trial}: nullspace vector not annihilated"));
        }
    }

    let plan = SamplePlan::with_seed(seed);
    let sandwich: Vec<String> = all
        .par_iter()
        .flat_map(|inst| {
            let a = &inst.algebra;
            let mut bad = Vec::new();
            for space in [derivations(a), half_derivations(a)] {
                let res = local_closure(a, &space, &plan).unwrap();
                if !space.space.is_subspace_of(&res.candidate).unwrap() {
                    bad.push(format!("{}: base space not inside local closure", inst.label()));
                }
                if local_closure(a, &space, &plan).unwrap() != res {
                    bad.push(format!("{}: local closure not deterministic", inst.label()));
                }
                if res.certified {
                    bad.extend(reverify_certificate(inst.label(), &space, &res.candidate, seed));
                }
            }
            bad
        })
        .collect();
    for b in sandwich {
        r.fail(b);
    }
    r.note(format!(
        "{} catalog instances, 1000 random matrices, seed {seed:#x}",
        all.len()
    ));
    r
}

/// Rechecks `Bx ∈ W(x)` for every candidate basis map at 500 fresh points.
fn reverify_certificate(label: &str, space: &MapSpace, candidate: &SubspaceBasis, seed: u64) -> Vec<String> {
    let n = space.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_F5E7);
    let maps: Vec<LinearMap> = candidate
        .basis()
        .iter()
        .map(|v| LinearMap::from_vector(n, v).unwrap())
        .collect();
    for _ in 0..500 {
        let x: Vector = (0..n)
            .map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        let w = evaluation_subspace(space, &x).unwrap();
        for m in &maps {
            if !w.space.contains(&m.apply(&x).unwrap()).unwrap() {
                return vec![format!(
                    "{label}: certified candidate fails at {}",
                    x.iter().map(format_scalar).collect::<Vec<_>>().join(",")
                )];
            }
        }
    }
    Vec::new()
}
