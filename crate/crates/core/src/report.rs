//! Command results in a form that can be printed as text or JSON.
//!
//! The JSON document is the canonical output: it holds exact rationals as
//! strings, and parsing it back yields an identical [`Report`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{AxiomReport, BilinearMap, LinearMap, OmegaAlgebra};
use crate::catalog::{CatalogEntry, ExpectedResults};
use crate::error::Result;
use crate::format::{matrix_to_rows, AlgebraDocument, Rational};
use crate::linalg::{format_scalar, is_zero_vector, AffineSolution, Matrix, Scalar};
use crate::local::{AffineClosureResult, LocalClosureResult, LocalVerdict, TwoLocalReport};
use crate::solvers::{MapSpace, TensorSpace};
use crate::verify::CriterionResult;

pub type Rows = Vec<Vec<Rational>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraIdentity {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub parameters: BTreeMap<String, Rational>,
    /// `sha256:` of the algebra document with the name blanked, so equal
    /// tables hash equally whatever they are called.
    pub content_hash: String,
}

impl AlgebraIdentity {
    pub fn of(alg: &OmegaAlgebra, params: &[(String, Scalar)]) -> Self {
        let mut doc = AlgebraDocument::from_algebra(alg);
        doc.name.clear();
        let text = serde_json::to_string(&doc).expect("algebra documents serialize");
        Self {
            name: alg.name().to_string(),
            dim: alg.dim(),
            parameters: params
                .iter()
                .map(|(k, v)| (k.clone(), Rational(v.clone())))
                .collect(),
            content_hash: format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Defect {
    /// 1-based basis indices.
    pub triple: [usize; 3],
    pub defect: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub key: String,
    pub dim: usize,
    pub group: String,
    pub parameters: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Axioms {
        passed: bool,
        bracket_antisymmetric: bool,
        omega_skew: bool,
        omega_is_zero: bool,
        failing: Vec<Defect>,
    },
    MapSpace {
        kind: String,
        rank: usize,
        basis: Vec<Rows>,
    },
    TensorSpace {
        kind: String,
        rank: usize,
        /// `basis[t][i][j]` holds the coordinates of `δ_t(e_i, e_j)`.
        basis: Vec<Vec<Rows>>,
    },
    LocalClosure {
        space_kind: String,
        base_rank: usize,
        candidate_rank: usize,
        certified: bool,
        sample_count: usize,
        candidate_basis: Vec<Rows>,
        witness: Option<Rows>,
    },
    LocalMember {
        space_kind: String,
        verdict: String,
        witness: Option<Vec<Rational>>,
    },
    AffineClosure {
        verdict: String,
        particular: Option<Rows>,
        directions: Vec<Rows>,
        sample_count: usize,
        caveats: Vec<String>,
    },
    TwoLocal {
        space_kind: String,
        space_rank: usize,
        verdict: String,
        vector: Option<Vec<Rational>>,
        kernel_rank: usize,
        conclusion: Option<String>,
    },
    CatalogList {
        entries: Vec<CatalogSummary>,
    },
    CatalogEntry {
        entry: CatalogEntry,
        algebra: AlgebraDocument,
    },
    Verify {
        criteria: Vec<CriterionResult>,
    },
}

/// One computed quantity set against a claimed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub algebra: Option<AlgebraIdentity>,
    pub payload: Payload,
    #[serde(default)]
    pub verdicts: Vec<Verdict>,
}

fn rationals(v: &[Scalar]) -> Vec<Rational> {
    v.iter().cloned().map(Rational).collect()
}

fn map_rows(m: &LinearMap) -> Rows {
    matrix_to_rows(m.matrix())
}

fn tensor_rows(t: &BilinearMap) -> Vec<Rows> {
    let n = t.dim();
    (0..n)
        .map(|i| (0..n).map(|j| rationals(t.basis_value(i, j))).collect())
        .collect()
}

fn vector_matrix(n: usize, v: &[Scalar]) -> Rows {
    LinearMap::from_vector(n, v).map(|m| map_rows(&m)).unwrap_or_default()
}

impl Payload {
    pub fn axioms(r: &AxiomReport) -> Self {
        Payload::Axioms {
            passed: r.passed,
            bracket_antisymmetric: r.bracket_antisymmetric,
            omega_skew: r.omega_skew,
            omega_is_zero: r.omega_is_zero,
            failing: r
                .defects
                .iter()
                .filter(|d| !is_zero_vector(&d.defect))
                .map(|d| Defect {
                    triple: [d.triple.0 + 1, d.triple.1 + 1, d.triple.2 + 1],
                    defect: rationals(&d.defect),
                })
                .collect(),
        }
    }

    pub fn map_space(s: &MapSpace) -> Self {
        Payload::MapSpace {
            kind: s.kind.label(),
            rank: s.rank(),
            basis: s.basis_maps().iter().map(map_rows).collect(),
        }
    }

    pub fn tensor_space(s: &TensorSpace) -> Self {
        Payload::TensorSpace {
            kind: s.kind.label().to_string(),
            rank: s.rank(),
            basis: s.basis_tensors().iter().map(tensor_rows).collect(),
        }
    }

    pub fn local_closure(r: &LocalClosureResult) -> Self {
        let n = r.base.dim;
        Payload::LocalClosure {
            space_kind: r.base.kind.label(),
            base_rank: r.base.rank(),
            candidate_rank: r.candidate.rank(),
            certified: r.certified,
            sample_count: r.samples_used.len(),
            candidate_basis: r.candidate.basis().iter().map(|v| vector_matrix(n, v)).collect(),
            witness: r.witness.as_ref().map(map_rows),
        }
    }

    pub fn local_member(space: &MapSpace, v: &LocalVerdict) -> Self {
        let (verdict, witness) = match v {
            LocalVerdict::NotLocal { witness } => ("NOT_LOCAL", Some(rationals(witness))),
            LocalVerdict::LocalOnSamples => ("LOCAL_ON_SAMPLES", None),
            LocalVerdict::LocalCertified => ("LOCAL_CERTIFIED", None),
        };
        Payload::LocalMember {
            space_kind: space.kind.label(),
            verdict: verdict.into(),
            witness,
        }
    }

    pub fn affine_closure(n: usize, r: &AffineClosureResult) -> Self {
        let sol_rows = |s: &AffineSolution| {
            (
                Some(vector_matrix(n, &s.particular)),
                s.homogeneous.basis().iter().map(|v| vector_matrix(n, v)).collect(),
            )
        };
        match r {
            AffineClosureResult::Empty { samples_used } => Payload::AffineClosure {
                verdict: "EMPTY".into(),
                particular: None,
                directions: vec![],
                sample_count: samples_used.len(),
                caveats: vec![],
            },
            AffineClosureResult::Closure {
                solution,
                matches_family_hull,
                samples_used,
                caveats,
            } => {
                let (particular, directions) = sol_rows(solution);
                Payload::AffineClosure {
                    verdict: if *matches_family_hull {
                        "MATCHES_FAMILY_HULL"
                    } else {
                        "DIFFERS_FROM_FAMILY_HULL"
                    }
                    .into(),
                    particular,
                    directions,
                    sample_count: samples_used.len(),
                    caveats: caveats.clone(),
                }
            }
        }
    }

    pub fn two_local(space: &MapSpace, r: &TwoLocalReport) -> Self {
        match r {
            TwoLocalReport::Rigid { certificate } => Payload::TwoLocal {
                space_kind: space.kind.label(),
                space_rank: space.rank(),
                verdict: "RIGID".into(),
                vector: Some(rationals(&certificate.vector)),
                kernel_rank: certificate.kernel_rank,
                conclusion: Some(certificate.conclusion.clone()),
            },
            TwoLocalReport::Inconclusive {
                space_rank,
                min_kernel_rank,
                best_point,
                ..
            } => Payload::TwoLocal {
                space_kind: space.kind.label(),
                space_rank: *space_rank,
                verdict: "INCONCLUSIVE".into(),
                vector: Some(rationals(best_point)),
                kernel_rank: *min_kernel_rank,
                conclusion: None,
            },
        }
    }
}

impl Verdict {
    pub fn new(check: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Self {
            check: check.into(),
            passed: expected == computed,
            expected,
            computed,
        }
    }
}

/// Verdicts for whatever `payload` computed that `expected` makes a claim about.
pub fn compare(expected: &ExpectedResults, payload: &Payload) -> Vec<Verdict> {
    let mut out = Vec::new();
    match payload {
        Payload::MapSpace { kind, rank, .. } => {
            let claim = match kind.as_str() {
                "derivation" => expected.der_rank,
                "delta_derivation(1/2)" => expected.half_der_rank,
                "centroid" => expected.centroid_rank,
                "anticommuting" => expected.anticommuting_rank,
                _ => None,
            };
            if let Some(want) = claim {
                out.push(Verdict::new(format!("{kind} rank"), want, rank));
            }
        }
        Payload::TensorSpace { kind, rank, .. } => {
            let claim = match kind.as_str() {
                "biderivation" => expected.bider_rank,
                "symmetric_biderivation" => expected.sym_bider_rank,
                "skew_biderivation" => expected.skew_bider_rank,
                _ => None,
            };
            if let Some(want) = claim {
                out.push(Verdict::new(format!("{kind} rank"), want, rank));
            }
        }
        Payload::LocalClosure {
            space_kind, certified, ..
        } => {
            let claim = match space_kind.as_str() {
                "derivation" => expected.local_der_certified,
                "delta_derivation(1/2)" => expected.local_half_der_certified,
                _ => None,
            };
            if let Some(want) = claim {
                out.push(Verdict::new(format!("local {space_kind} certified"), want, certified));
            }
        }
        Payload::TwoLocal {
            space_kind, verdict, ..
        } => {
            let claim = match space_kind.as_str() {
                "derivation" => expected.two_local_rigid,
                "delta_derivation(1/2)" => expected.two_local_half_rigid,
                _ => None,
            };
            if let Some(want) = claim {
                out.push(Verdict::new(
                    format!("2-local {space_kind}"),
                    if want { "RIGID" } else { "INCONCLUSIVE" },
                    verdict,
                ));
            }
        }
        _ => {}
    }
    out
}

impl Report {
    pub fn new(command: Vec<String>, algebra: Option<AlgebraIdentity>, payload: Payload) -> Self {
        Self {
            command,
            algebra,
            payload,
            verdicts: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        let verify_ok = match &self.payload {
            Payload::Verify { criteria } => criteria.iter().all(|c| c.passed),
            _ => true,
        };
        verify_ok && self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(a) = &self.algebra {
            let _ = writeln!(s, "algebra: {} (dim {}, {})", a.name, a.dim, a.content_hash);
        }
        render_payload(&mut s, &self.payload);
        for v in &self.verdicts {
            let _ = writeln!(
                s,
                "check {}: expected {}, computed {} [{}]",
                v.check,
                v.expected,
                v.computed,
                if v.passed { "ok" } else { "MISMATCH" }
            );
        }
        s
    }
}

fn rows_text(rows: &Rows) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| format_scalar(&x.0)).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", inner.join(", "))
}

fn vec_text(v: &[Rational]) -> String {
    format!("({})", v.iter().map(|x| format_scalar(&x.0)).collect::<Vec<_>>().join(", "))
}

fn render_payload(s: &mut String, p: &Payload) {
    match p {
        Payload::Axioms {
            passed,
            bracket_antisymmetric,
            omega_skew,
            omega_is_zero,
            failing,
        } => {
            let _ = writeln!(s, "axioms: {}", if *passed { "PASSED" } else { "FAILED" });
            let _ = writeln!(
                s,
                "bracket antisymmetric: {bracket_antisymmetric}, omega skew: {omega_skew}, omega zero: {omega_is_zero}"
            );
            for d in failing {
                let _ = writeln!(
                    s,
                    "defect on ({},{},{}): {}",
                    d.triple[0],
                    d.triple[1],
                    d.triple[2],
                    vec_text(&d.defect)
                );
            }
        }
        Payload::MapSpace { kind, rank, basis } => {
            let _ = writeln!(s, "{kind}: rank {rank}");
            for (i, m) in basis.iter().enumerate() {
                let _ = writeln!(s, "  basis {}: {}", i + 1, rows_text(m));
            }
        }
        Payload::TensorSpace { kind, rank, basis } => {
            let _ = writeln!(s, "{kind}: rank {rank}");
            for (t, tensor) in basis.iter().enumerate() {
                let _ = writeln!(s, "  basis {}:", t + 1);
                for (i, row) in tensor.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        if v.iter().any(|x| !x.0.is_zero()) {
                            let _ = writeln!(s, "    d(e{}, e{}) = {}", i + 1, j + 1, vec_text(v));
                        }
                    }
                }
            }
        }
        Payload::LocalClosure {
            space_kind,
            base_rank,
            candidate_rank,
            certified,
            sample_count,
            witness,
            ..
        } => {
            let _ = writeln!(
                s,
                "local {space_kind}: base rank {base_rank}, candidate rank {candidate_rank}, {sample_count} samples"
            );
            let _ = writeln!(
                s,
                "verdict: {}",
                if *certified {
                    "LOCAL_CERTIFIED (every local map lies in the base space)"
                } else {
                    "OPEN (candidate is only an upper bound)"
                }
            );
            if let Some(w) = witness {
                let _ = writeln!(s, "candidate map outside the base space: {}", rows_text(w));
            }
        }
        Payload::LocalMember {
            space_kind,
            verdict,
            witness,
        } => {
            let _ = write!(s, "local {space_kind} membership: {verdict}");
            if let Some(w) = witness {
                let _ = write!(s, " at {}", vec_text(w));
            }
            s.push('\n');
        }
        Payload::AffineClosure {
            verdict,
            particular,
            directions,
            sample_count,
            caveats,
        } => {
            let _ = writeln!(s, "affine closure: {verdict} ({sample_count} samples)");
            if let Some(p) = particular {
                let _ = writeln!(s, "  particular: {}", rows_text(p));
            }
            for (i, d) in directions.iter().enumerate() {
                let _ = writeln!(s, "  direction {}: {}", i + 1, rows_text(d));
            }
            for c in caveats {
                let _ = writeln!(s, "  caveat: {c}");
            }
        }
        Payload::TwoLocal {
            space_kind,
            space_rank,
            verdict,
            vector,
            kernel_rank,
            conclusion,
        } => {
            let _ = writeln!(s, "2-local {space_kind} (space rank {space_rank}): {verdict}");
            if let Some(v) = vector {
                let label = if verdict == "RIGID" { "separating vector" } else { "best point" };
                let _ = writeln!(s, "  {label}: {} (evaluation kernel rank {kernel_rank})", vec_text(v));
            }
            if let Some(c) = conclusion {
                let _ = writeln!(s, "  {c}");
            }
        }
        Payload::CatalogList { entries } => {
            for e in entries {
                let params = if e.parameters.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", e.parameters.join(", "))
                };
                let _ = writeln!(s, "{:<16} dim {} {}{}", e.key, e.dim, e.group, params);
            }
        }
        Payload::CatalogEntry { entry, algebra } => {
            let _ = writeln!(s, "{} (dim {}, {})", entry.key, entry.dim, entry.group);
            for p in &entry.parameters {
                let ex: Vec<String> = p.excluded.iter().map(format_scalar).collect();
                let sm: Vec<String> = p.samples.iter().map(format_scalar).collect();
                let _ = writeln!(
                    s,
                    "parameter {}: excluded [{}], samples [{}]",
                    p.name,
                    ex.join(", "),
                    sm.join(", ")
                );
            }
            for b in &algebra.brackets {
                let terms: Vec<String> = b
                    .coeffs
                    .iter()
                    .map(|(k, v)| format!("{}*e{k}", format_scalar(&v.0)))
                    .collect();
                let _ = writeln!(s, "[e{}, e{}] = {}", b.i, b.j, terms.join(" + "));
            }
            for w in &algebra.omega {
                let _ = writeln!(s, "omega(e{}, e{}) = {}", w.i, w.j, format_scalar(&w.value.0));
            }
            for n in &entry.notes {
                let _ = writeln!(s, "note: {n}");
            }
            for sp in &entry.special_samples {
                let _ = writeln!(s, "special sample {} = {}: {}", sp.parameter, format_scalar(&sp.value), sp.reason);
            }
            if !entry.expected.source.is_empty() {
                let _ = writeln!(s, "claims: {}", entry.expected.source);
            }
        }
        Payload::Verify { criteria } => {
            for c in criteria {
                let _ = writeln!(
                    s,
                    "[{:>2}] {}  {}",
                    c.id,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.title
                );
                for d in &c.details {
                    let _ = writeln!(s, "       {d}");
                }
            }
            let failed = criteria.iter().filter(|c| !c.passed).count();
            let _ = writeln!(s, "{} of {} criteria passed", criteria.len() - failed, criteria.len());
        }
    }
}

/// Matrix helper for callers that hold a raw [`Matrix`].
pub fn matrix_rows(m: &Matrix) -> Rows {
    matrix_to_rows(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::solvers::{derivations, symmetric_biderivations};

    #[test]
    fn json_round_trip() {
        let a = catalog::get("L_{1,4}", &[]).unwrap();
        let mut r = Report::new(
            vec!["solve".into(), "der".into()],
            Some(AlgebraIdentity::of(&a, &[])),
            Payload::map_space(&derivations(&a)),
        );
        r.verdicts = compare(&catalog::expected("L_{1,4}").unwrap(), &r.payload);
        assert_eq!(r.verdicts.len(), 1);
        assert!(r.verdicts[0].passed);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);

        let t = Report::new(vec![], None, Payload::tensor_space(&symmetric_biderivations(&a)));
        assert_eq!(Report::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn hash_ignores_name() {
        let a = catalog::get("B", &[]).unwrap();
        let h1 = AlgebraIdentity::of(&a, &[]).content_hash;
        let h2 = AlgebraIdentity::of(&a.clone().renamed("other"), &[]).content_hash;
        assert_eq!(h1, h2);
        let c = catalog::get("L_1", &[]).unwrap();
        assert_ne!(h1, AlgebraIdentity::of(&c, &[]).content_hash);
        assert!(h1.starts_with("sha256:") && h1.len() == 7 + 64);
    }
}
