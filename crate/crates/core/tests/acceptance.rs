//! Acceptance suite: each criterion checks published claims, written here as
//! literal values, against exact computation. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use omega_lie::catalog::{self, CatalogEntry};
use omega_lie::linalg::{format_scalar, int, unit_vector, zero_vector, Matrix, Scalar, SubspaceBasis, Vector};
use omega_lie::local::{
    affine_local_closure, local_closure, two_local_report, AffineFamily, OpenCondition, SamplePlan,
    TwoLocalReport, DEFAULT_SEED,
};
use omega_lie::solvers::{
    anticommuting_maps, biderivations, centroid, commuting_maps, derivations, half_derivations,
    map_constraint_rows, omega_biderivations, skew_biderivations, symmetric_biderivations, MapKind,
};
use omega_lie::{LinearMap, OmegaAlgebra};

const FOUR_DIM: [&str; 19] = [
    "L_{1,1}", "L_{1,2}", "L_{1,3}", "L_{1,4}", "L_{1,5}", "L_{1,6}", "L_{1,7}", "L_{1,8}",
    "L_{2,1}", "L_{2,2}", "L_{2,3}", "L_{2,4}", "E_{1,alpha}", "F_{1,alpha}", "G_{1,alpha}",
    "H_{1,alpha}", "Atilde_alpha", "Btilde", "Ctilde_alpha",
];
const THREE_DIM: [&str; 5] = ["L_1", "L_2", "A_alpha", "B", "C_alpha"];
const SIMPLE: [&str; 3] = ["A_alpha", "B", "C_alpha"];

/// Symmetric biderivation ranks as tabulated.
const SYM_TABLE: [(&str, usize); 20] = [
    ("L_{1,1}", 9),
    ("L_{1,2}", 4),
    ("L_{1,3}", 2),
    ("L_{1,4}", 2),
    ("L_{1,5}", 4),
    ("L_{1,6}", 2),
    ("L_{1,7}", 2),
    ("L_{1,8}", 1),
    ("L_{2,1}", 2),
    ("L_{2,2}", 0),
    ("L_{2,3}", 2),
    ("L_{2,4}", 0),
    ("E_{1,alpha}", 4),
    ("F_{1,alpha}", 2),
    ("G_{1,alpha}", 0),
    ("H_{1,alpha}", 0),
    ("Atilde_alpha", 1),
    ("Btilde", 2),
    ("Ctilde_alpha", 1),
    ("Ctilde_1", 5),
];

const TWO_LOCAL_RIGID: [&str; 8] = [
    "L_{1,3}", "L_{1,4}", "L_{1,7}", "L_{1,8}", "L_{2,2}", "L_{2,3}", "L_{2,4}", "F_{1,alpha}",
];

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

/// Every generic sample of `key`, labelled.
fn samples(key: &str) -> Vec<(String, OmegaAlgebra)> {
    tagged_samples(key)
        .into_iter()
        .filter(|(_, _, special)| !special)
        .map(|(label, a, _)| (label, a))
        .collect()
}

/// Samples including parameter values flagged as special.
fn every_sample(key: &str) -> Vec<(String, OmegaAlgebra)> {
    tagged_samples(key).into_iter().map(|(label, a, _)| (label, a)).collect()
}

fn tagged_samples(key: &str) -> Vec<(String, OmegaAlgebra, bool)> {
    let entry: CatalogEntry = catalog::entry(key).unwrap();
    entry
        .sample_assignments()
        .into_iter()
        .map(|p| {
            let a = catalog::get(key, &p).unwrap();
            (a.name().to_string(), a, entry.is_special(&p))
        })
        .collect()
}

fn all_samples(keys: &[&str]) -> Vec<(String, OmegaAlgebra)> {
    keys.iter().flat_map(|k| samples(k)).collect()
}

fn show(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
}

fn get(key: &str) -> OmegaAlgebra {
    catalog::get(key, &[]).unwrap()
}

fn alpha(key: &str, a: i64) -> OmegaAlgebra {
    catalog::get_alpha(key, int(a)).unwrap()
}

/// 4×4 matrix from 1-based `(row, col, value)` cells.
fn m4(cells: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for &(r, c, v) in cells {
        m[(r - 1, c - 1)] = int(v);
    }
    m
}

fn span(maps: &[Matrix]) -> SubspaceBasis {
    let n = maps[0].rows();
    SubspaceBasis::span(n * n, maps.iter().map(|m| m.entries().to_vec())).unwrap()
}

fn c1_axioms() -> Outcome {
    let mut o = Outcome::new();
    let mut keys: Vec<&str> = THREE_DIM.to_vec();
    keys.extend(FOUR_DIM);
    keys.push("Ctilde_1");
    for (label, a) in all_samples(&keys) {
        let rep = a.check_axioms();
        o.check(rep.passed, || format!("{label}: omega-Jacobi fails on {:?}", rep.failing_triples()));
        o.check(!rep.omega_is_zero, || format!("{label}: omega vanishes"));
    }
    for key in ["sl2", "sl2_plus_sl2"] {
        let rep = get(key).check_axioms();
        o.check(rep.passed && rep.omega_is_zero, || format!("{key}: not a Lie algebra"));
    }
    o
}

fn c2_derivation_forms() -> Outcome {
    let mut o = Outcome::new();
    // Columns 1, 2 vanish; row 2 is minus row 1.
    let l11 = span(&[
        m4(&[(1, 3, 1), (2, 3, -1)]),
        m4(&[(1, 4, 1), (2, 4, -1)]),
        m4(&[(3, 3, 1)]),
        m4(&[(3, 4, 1)]),
        m4(&[(4, 3, 1)]),
        m4(&[(4, 4, 1)]),
    ]);
    // Only column 3 is nonzero, reading (a, -a, a, b).
    let l14 = span(&[m4(&[(1, 3, 1), (2, 3, -1), (3, 3, 1)]), m4(&[(4, 3, 1)])]);
    for (key, want) in [("L_{1,1}", l11), ("L_{1,4}", l14)] {
        let der = derivations(&get(key));
        o.check(der.space.equals(&want).unwrap(), || {
            format!("Der({key}) has rank {} and differs from the printed form (rank {})", der.rank(), want.rank())
        });
    }
    o
}

fn c3_skew_vanish() -> Outcome {
    let mut o = Outcome::new();
    for (label, a) in all_samples(&FOUR_DIM) {
        let r = skew_biderivations(&a).rank();
        o.check(r == 0, || format!("{label}: skew biderivation rank {r}"));
    }
    o
}

fn c4_symmetric_table() -> Outcome {
    let mut o = Outcome::new();
    for (key, want) in SYM_TABLE {
        for (label, a) in samples(key) {
            let r = symmetric_biderivations(&a).rank();
            o.check(r == want, || format!("{label}: rank {r}, table {want}"));
        }
    }
    // Symmetric biderivations of L_{1,1} live on span{e3, e4}.
    let sym = symmetric_biderivations(&get("L_{1,1}"));
    let off: BTreeSet<(usize, usize)> = sym
        .basis_tensors()
        .iter()
        .flat_map(|t| t.support())
        .filter(|&(i, j)| i < 2 || j < 2)
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    o.check(off.is_empty(), || format!("L_{{1,1}}: nonzero on index pairs {off:?}, outside {{3,4}}x{{3,4}}"));
    o
}

fn c5_simple() -> Outcome {
    let mut o = Outcome::new();
    let id = LinearMap::identity(3);
    for (label, a) in [("A_2", alpha("A_alpha", 2)), ("B", get("B")), ("C_2", alpha("C_alpha", 2))] {
        let b = biderivations(&a).rank();
        o.check(b == 0, || format!("{label}: biderivation rank {b}"));
        let h = half_derivations(&a);
        o.check(h.rank() == 1 && h.contains(&id).unwrap(), || {
            format!("{label}: 1/2-derivation rank {}", h.rank())
        });
    }
    // First equation of the ½-derivation system of A_α at α = 2:
    // 2a11 = a11 - 2 a31 + a22 with a_ij the e_i-coefficient of Δ(e_j).
    let rows = map_constraint_rows(&alpha("A_alpha", 2), &MapKind::half_derivation());
    let rs = SubspaceBasis::span(9, rows).unwrap();
    let mut f = zero_vector(9);
    f[0] = int(1);
    f[6] = int(2);
    f[4] = int(-1);
    o.check(rs.contains(&f).unwrap(), || "A_2: first system equation not implied".into());
    o
}

fn thorough(seed: u64) -> SamplePlan {
    SamplePlan { seed, ..SamplePlan::thorough() }
}

fn c6_local(seed: u64) -> Outcome {
    let mut o = Outcome::new();
    let plan = thorough(seed);
    let mut keys: Vec<&str> = FOUR_DIM.to_vec();
    keys.extend(THREE_DIM);
    for (label, a) in all_samples(&keys) {
        let der = derivations(&a);
        let res = local_closure(&a, &der, &plan).unwrap();
        o.check(res.certified, || {
            format!("{label}: local closure rank {} exceeds Der rank {}", res.candidate.rank(), der.rank())
        });
    }
    for (label, a) in SIMPLE.iter().flat_map(|k| every_sample(k)) {
        let h = half_derivations(&a);
        let res = local_closure(&a, &h, &plan).unwrap();
        o.check(res.certified && res.candidate.rank() == 1, || {
            format!("{label}: local 1/2-derivation closure rank {}", res.candidate.rank())
        });
    }
    o
}

fn c7_two_local(seed: u64) -> Outcome {
    let mut o = Outcome::new();
    let plan = SamplePlan::with_seed(seed);
    let e3 = unit_vector(4, 2);
    let e4 = unit_vector(4, 3);
    for key in TWO_LOCAL_RIGID {
        for (label, a) in samples(key) {
            match two_local_report(&a, &derivations(&a), &plan).unwrap() {
                TwoLocalReport::Rigid { certificate } => {
                    let v = certificate.vector;
                    o.check(v == e3 || v == e4, || format!("{label}: separated at {}, not e3 or e4", show(&v)));
                }
                TwoLocalReport::Inconclusive { .. } => o.check(false, || format!("{label}: no separating vector")),
            }
        }
    }
    // The list is exhaustive: no other 4-dimensional algebra separates.
    for key in FOUR_DIM.iter().filter(|k| !TWO_LOCAL_RIGID.contains(k)) {
        let reps: Vec<bool> = samples(key)
            .iter()
            .map(|(_, a)| two_local_report(a, &derivations(a), &plan).unwrap().is_rigid())
            .collect();
        o.check(!reps.iter().all(|r| *r), || format!("{key}: separating vector exists, outside the list"));
    }
    let l11 = get("L_{1,1}");
    o.check(!two_local_report(&l11, &derivations(&l11), &plan).unwrap().is_rigid(), || {
        "L_{1,1}: unexpectedly separated".into()
    });
    for (label, a) in SIMPLE.iter().flat_map(|k| every_sample(k)) {
        let rep = two_local_report(&a, &half_derivations(&a), &plan).unwrap();
        o.check(rep.is_rigid(), || format!("{label}: 1/2-derivations not separated"));
    }
    o
}

fn c8_automorphisms(seed: u64) -> Outcome {
    let mut o = Outcome::new();
    let plan = SamplePlan::with_seed(seed);
    let l11 = AffineFamily::new(
        Matrix::identity(4),
        vec![m4(&[(1, 3, 1), (2, 3, -1), (3, 3, 1)]), m4(&[(4, 3, 1)])],
        vec!["a".into(), "b".into()],
        vec![OpenCondition { coeffs: vec![int(1), int(0)], constant: int(1) }],
    )
    .unwrap();
    let l23 = AffineFamily::new(
        m4(&[(1, 1, 1), (2, 2, 1), (3, 3, 1)]),
        vec![m4(&[(1, 4, 1), (2, 4, -1), (3, 4, 1)]), m4(&[(4, 4, 1)])],
        vec!["a".into(), "b".into()],
        vec![OpenCondition { coeffs: vec![int(0), int(1)], constant: int(0) }],
    )
    .unwrap();
    let cell = |terms: &[(usize, usize, i64)]| -> Vector {
        let mut f = zero_vector(16);
        for &(r, c, v) in terms {
            f[(r - 1) * 4 + c - 1] = int(v);
        }
        f
    };
    let res = affine_local_closure(&get("L_{1,1}"), &l11, &plan).unwrap();
    o.check(res.matches_family_hull(), || "L_{1,1}: closure differs from the family".into());
    if let Some(sol) = res.solution() {
        let claims: [(&str, Vector, Scalar); 5] = [
            ("b11 = 1", cell(&[(1, 1, 1)]), int(1)),
            ("b22 = 1", cell(&[(2, 2, 1)]), int(1)),
            ("b44 = 1", cell(&[(4, 4, 1)]), int(1)),
            ("b13 = -b23", cell(&[(1, 3, 1), (2, 3, 1)]), int(0)),
            ("b13 = b33 - 1", cell(&[(1, 3, 1), (3, 3, -1)]), int(-1)),
        ];
        for (label, f, v) in claims {
            o.check(sol.implies(&f, &v).unwrap(), || format!("L_{{1,1}}: {label} not forced"));
        }
    }
    let res = affine_local_closure(&get("L_{2,3}"), &l23, &plan).unwrap();
    o.check(res.matches_family_hull(), || "L_{2,3}: closure differs from the family".into());
    if let Some(sol) = res.solution() {
        o.check(sol.homogeneous.basis().iter().any(|v| v[15] != int(0)), || "L_{2,3}: b44 not free".into());
    }
    o
}

fn c9_omega_biderivations() -> Outcome {
    let mut o = Outcome::new();
    for key in FOUR_DIM {
        let strict = matches!(key, "L_{1,6}" | "L_{1,8}");
        for (label, a) in samples(key) {
            let (b, w) = (biderivations(&a).rank(), omega_biderivations(&a).rank());
            if strict {
                o.check(w < b, || format!("{label}: BDer_w = BDer (rank {b})"));
            } else {
                o.check(w == b, || format!("{label}: BDer_w rank {w} < BDer rank {b}"));
            }
        }
    }
    o
}

fn c10_semisimple() -> Outcome {
    let mut o = Outcome::new();
    let sl2 = get("sl2");
    o.check(anticommuting_maps(&sl2).rank() == 0, || "sl2: Acmap nonzero".into());
    o.check(symmetric_biderivations(&sl2).rank() == 0, || "sl2: symmetric biderivations".into());
    let skew = skew_biderivations(&sl2);
    o.check(skew.rank() == 1 && skew.contains(&sl2.bracket_tensor()).unwrap(), || {
        format!("sl2: skew biderivation rank {}", skew.rank())
    });
    let cent = centroid(&sl2);
    o.check(cent.rank() == 1 && commuting_maps(&sl2).space == cent.space, || "sl2: Cmap != Cent".into());
    let two = get("sl2_plus_sl2");
    let r = skew_biderivations(&two).rank();
    o.check(r == 2, || format!("sl2+sl2: skew biderivation rank {r}"));
    let cent2 = centroid(&two);
    o.check(cent2.rank() == 2 && commuting_maps(&two).space == cent2.space, || "sl2+sl2: Cmap != Cent".into());
    o
}

fn c11_properties(seed: u64) -> Outcome {
    let mut o = Outcome::new();
    let r = omega_lie::verify::properties(seed);
    o.failures.extend(r.details.into_iter().filter(|_| !r.passed));
    // Reports are byte-for-byte reproducible.
    let run = || {
        let mut out = Vec::new();
        let code = omega_lie::cli::run(
            ["omega-lie", "--format", "json", "local", "der", "@E_{1,alpha}"],
            &mut out,
            &mut Vec::new(),
        );
        (code, out)
    };
    o.check(run() == run(), || "CLI report differs between runs".into());
    o
}

fn main() -> ExitCode {
    let seed = DEFAULT_SEED;
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (1, "omega-Lie axioms on the catalog", Box::new(c1_axioms)),
        (2, "printed forms of Der(L_{1,1}) and Der(L_{1,4})", Box::new(c2_derivation_forms)),
        (3, "no skew biderivations in dimension 4", Box::new(c3_skew_vanish)),
        (4, "symmetric biderivation table", Box::new(c4_symmetric_table)),
        (5, "simple 3-dimensional algebras", Box::new(c5_simple)),
        (6, "local derivations are derivations", Box::new(move || c6_local(seed))),
        (7, "2-local derivations are derivations", Box::new(move || c7_two_local(seed))),
        (8, "local automorphism families", Box::new(move || c8_automorphisms(seed))),
        (9, "omega-biderivations equal biderivations", Box::new(c9_omega_biderivations)),
        (10, "semisimple Lie fixtures", Box::new(c10_semisimple)),
        (11, "property suites", Box::new(move || c11_properties(seed))),
    ];
    let mut failed = 0;
    for (id, title, f) in criteria {
        let start = Instant::now();
        let o = f();
        let ok = o.failures.is_empty();
        println!(
            "criterion {id:>2} {}  {title} ({:.1}s)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for msg in &o.failures {
            println!("    {msg}");
        }
        failed += usize::from(!ok);
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
