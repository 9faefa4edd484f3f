//! Brute-force verification of the predicted component structure: per-algebra
//! reports, the 1-step-solvable component theorem, direct-sum behavior, and
//! catalog-wide sweeps with machine-readable output.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{
    self, admissible_ids, family_skips, instantiate, predicted_components, AlgebraId,
    CatalogError, Family, PredictedShape, SkipStatus,
};
use crate::field::{Field, FieldRef};
use crate::graph::{CommutingGraph, ComponentPartition};
use crate::lie::LieAlgebra;
use crate::shape::{check_clique_union, check_complete, check_windmill, CentralizerCache, ShapeSpec};

/// Largest q a sweep will accept.
pub const MAX_SWEEP_Q: u64 = 9;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("max_q {0} exceeds the sweep bound {MAX_SWEEP_Q}")]
    SweepTooLarge(u64),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub build_us: u128,
    pub components_us: u128,
    pub predict_us: u128,
    pub shapes_us: u128,
    pub total_us: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeOutcome {
    pub label: String,
    pub size: usize,
    pub expected: ShapeSpec,
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComputedBlock {
    pub vertices: usize,
    pub cc_count: usize,
    pub sizes: Vec<usize>,
    pub center_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shapes: Option<Vec<ShapeOutcome>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictedComponentSummary {
    pub label: String,
    pub size: usize,
    pub shape: ShapeSpec,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictedBlock {
    pub vertices: usize,
    pub cc_count: usize,
    pub sizes: Vec<usize>,
    /// RREF basis of the classified center, rows of element indices.
    pub center: Vec<Vec<u64>>,
    pub components: Vec<PredictedComponentSummary>,
}

/// Result of verifying one algebra over one field.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub field: String,
    pub algebra: String,
    pub params: BTreeMap<String, u64>,
    pub computed: ComputedBlock,
    pub predicted: PredictedBlock,
    pub one_step_split: OneStepSplitSummary,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<String>,
    pub timings: Timings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn params_map(id: &AlgebraId) -> BTreeMap<String, u64> {
    let mut m = BTreeMap::new();
    if let Some(a) = id.alpha() {
        m.insert("alpha".to_string(), a.index() as u64);
    }
    if let Some(b) = id.beta() {
        m.insert("beta".to_string(), b.index() as u64);
    }
    m
}

/// Builds the algebra, computes its components by brute force, and compares
/// count, size multiset, center, and (optionally) per-component shapes
/// against the closed-form prediction. Predicted components are matched to
/// computed ones by exact vertex-set equality.
pub fn verify(id: &AlgebraId, field: &FieldRef, check_shapes: bool) -> Result<VerificationReport, CatalogError> {
    let t0 = Instant::now();
    let algebra = instantiate(id, field)?;
    let graph = CommutingGraph::new(algebra).expect("catalog algebras are noncommutative");
    let build_us = t0.elapsed().as_micros();

    let t1 = Instant::now();
    let parts = graph.components();
    let components_us = t1.elapsed().as_micros();

    let t2 = Instant::now();
    let prediction = predicted_components(id, field)?;
    let predict_us = t2.elapsed().as_micros();

    let mut divergences: Vec<String> = Vec::new();

    if *graph.center() != prediction.center {
        divergences.push("computed center differs from the classified center".into());
    }
    if parts.len() != prediction.cc_count {
        divergences.push(format!(
            "component count: computed {}, predicted {}",
            parts.len(),
            prediction.cc_count
        ));
    }
    if parts.sizes() != prediction.sizes() {
        divergences.push(format!(
            "component sizes: computed {:?}, predicted {:?}",
            parts.sizes(),
            prediction.sizes()
        ));
    }

    let t3 = Instant::now();
    let shapes = if check_shapes {
        let mut outcomes = Vec::with_capacity(prediction.components.len());
        for pc in &prediction.components {
            let report = if parts.find_component(&pc.vertices).is_none() {
                crate::shape::ShapeReport {
                    matched: false,
                    expected: pc.shape.to_spec(pc.vertices.len()),
                    detected: None,
                    mismatch: Some("predicted vertex set is not a computed component".into()),
                }
            } else {
                let cache = CentralizerCache::new(&graph, &pc.vertices);
                match &pc.shape {
                    PredictedShape::Complete => check_complete(&cache, &pc.vertices, pc.vertices.len()),
                    PredictedShape::Windmill { core_size, blade_size, blade_count } => {
                        check_windmill(&cache, &pc.vertices, *core_size, *blade_size, *blade_count)
                    }
                    PredictedShape::CliqueUnion { cliques } => {
                        check_clique_union(&cache, &pc.vertices, cliques)
                    }
                }
            };
            if !report.matched {
                divergences.push(format!(
                    "shape of {}: {}",
                    pc.label,
                    report.mismatch.clone().unwrap_or_default()
                ));
            }
            outcomes.push(ShapeOutcome {
                label: pc.label.clone(),
                size: pc.vertices.len(),
                expected: pc.shape.to_spec(pc.vertices.len()),
                matched: report.matched,
                detail: report.mismatch,
            });
        }
        Some(outcomes)
    } else {
        None
    };
    let shapes_us = t3.elapsed().as_micros();

    let theorem = one_step_split_over(&graph, &parts);
    if theorem.applicable && !theorem.pass {
        divergences.push("sizes predicted by the 1-step-solvable theorem do not match".into());
    }

    let verdict = if divergences.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        field: field.describe(),
        algebra: id.family.name().to_string(),
        params: params_map(id),
        computed: ComputedBlock {
            vertices: graph.vertex_count(),
            cc_count: parts.len(),
            sizes: parts.sizes(),
            center_dim: graph.center().dim(),
            shapes,
        },
        predicted: PredictedBlock {
            vertices: prediction.sizes().iter().sum(),
            cc_count: prediction.cc_count,
            sizes: prediction.sizes(),
            center: prediction
                .center
                .basis()
                .iter()
                .map(|row| row.iter().map(|c| c.index() as u64).collect())
                .collect(),
            components: prediction
                .components
                .iter()
                .map(|pc| PredictedComponentSummary {
                    label: pc.label.clone(),
                    size: pc.vertices.len(),
                    shape: pc.shape.to_spec(pc.vertices.len()),
                })
                .collect(),
        },
        one_step_split: theorem,
        verdict,
        first_divergence: divergences.into_iter().next(),
        timings: Timings {
            build_us,
            components_us,
            predict_us,
            shapes_us,
            total_us: t0.elapsed().as_micros(),
        },
    })
}

/// Hypotheses and conclusion of the disconnectedness theorem for 1-step
/// solvable algebras with L^1 meeting the center trivially and
/// dim(L^1 + Z) = dim L - 1: the graph then splits into 1 + q^{dim L^1}
/// complete components, one of size q^{n-1} - q^{dim Z} and q^{dim L^1} of
/// size (q-1) q^{dim Z}.
#[derive(Debug, Clone, Serialize)]
pub struct OneStepSplitSummary {
    pub applicable: bool,
    pub one_step_solvable: bool,
    pub derived_meets_center_trivially: bool,
    pub derived_plus_center_codim_one: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_cc_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sizes_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_components_complete: Option<bool>,
    /// True when inapplicable, or when every asserted conclusion holds.
    pub pass: bool,
}

/// Expected size multiset under the theorem's hypotheses.
pub fn one_step_split_sizes(q: usize, n: usize, dim_derived: usize, dim_center: usize) -> Vec<usize> {
    let big = q.pow(n as u32 - 1) - q.pow(dim_center as u32);
    let small = (q - 1) * q.pow(dim_center as u32);
    let mut sizes = vec![small; q.pow(dim_derived as u32)];
    sizes.push(big);
    sizes.sort_unstable();
    sizes
}

/// Checks the theorem's hypotheses, and, when they hold, its conclusions
/// against a brute-force component computation. Reports inapplicability
/// rather than failing when the hypotheses are not met.
pub fn verify_one_step_split(algebra: &LieAlgebra) -> OneStepSplitSummary {
    match CommutingGraph::new(algebra.clone()) {
        Ok(graph) => {
            let parts = graph.components();
            one_step_split_over(&graph, &parts)
        }
        Err(_) => OneStepSplitSummary {
            applicable: false,
            one_step_solvable: true,
            derived_meets_center_trivially: false,
            derived_plus_center_codim_one: false,
            expected_cc_count: None,
            count_matches: None,
            sizes_match: None,
            all_components_complete: None,
            pass: true,
        },
    }
}

fn one_step_split_over(graph: &CommutingGraph, parts: &ComponentPartition) -> OneStepSplitSummary {
    let algebra = graph.algebra();
    let n = algebra.dim();
    let q = algebra.field().q();
    let center = graph.center();
    let derived = algebra.derived_algebra();

    let one_step = algebra.is_one_step_solvable();
    let meets_trivially = derived.intersect(center).map(|s| s.is_zero()).unwrap_or(false);
    let codim_one = derived.sum(center).map(|s| s.dim() == n - 1).unwrap_or(false);
    let applicable = one_step && meets_trivially && codim_one;

    if !applicable {
        return OneStepSplitSummary {
            applicable,
            one_step_solvable: one_step,
            derived_meets_center_trivially: meets_trivially,
            derived_plus_center_codim_one: codim_one,
            expected_cc_count: None,
            count_matches: None,
            sizes_match: None,
            all_components_complete: None,
            pass: true,
        };
    }

    let expected_cc = 1 + q.pow(derived.dim() as u32);
    let expected_sizes = one_step_split_sizes(q, n, derived.dim(), center.dim());
    let count_matches = parts.len() == expected_cc;
    let sizes_match = parts.sizes() == expected_sizes;
    let all_complete = parts.components().iter().all(|comp| {
        let cache = CentralizerCache::new(graph, comp);
        check_complete(&cache, comp, comp.len()).matched
    });

    OneStepSplitSummary {
        applicable,
        one_step_solvable: one_step,
        derived_meets_center_trivially: meets_trivially,
        derived_plus_center_codim_one: codim_one,
        expected_cc_count: Some(expected_cc),
        count_matches: Some(count_matches),
        sizes_match: Some(sizes_match),
        all_components_complete: Some(all_complete),
        pass: count_matches && sizes_match && all_complete,
    }
}

/// Direct-sum behavior: H + F^k has as many components as H, and each
/// component of the sum projects onto exactly one component of H.
#[derive(Debug, Clone, Serialize)]
pub struct DirectSumReport {
    pub abelian_summand_dim: usize,
    pub cc_count_h: usize,
    pub cc_count_sum: usize,
    pub counts_equal: bool,
    pub projection_bijective: bool,
    pub pass: bool,
}

pub fn verify_direct_sum(h: &LieAlgebra, k: usize) -> Result<DirectSumReport, CatalogError> {
    let field = h.field().clone();
    let sum = if k == 0 {
        h.clone()
    } else {
        h.direct_sum(&LieAlgebra::abelian(field.clone(), k))?
    };
    let gh = CommutingGraph::new(h.clone()).expect("summand must be noncommutative");
    let gs = CommutingGraph::new(sum).expect("sum of a noncommutative algebra is noncommutative");
    let ph = gh.components();
    let ps = gs.components();

    let q = field.q();
    let qk = q.pow(k as u32);
    let dim_h = h.dim();
    let mut hit = vec![false; ph.len()];
    let mut bijective = true;
    for comp in ps.components() {
        let mut projected: Vec<usize> = comp
            .iter()
            .map(|&v| {
                let coords = gs.indexer().decode(v);
                gh.indexer().encode(&coords[..dim_h])
            })
            .collect();
        projected.sort_unstable();
        projected.dedup();
        match ph.find_component(&projected) {
            Some(idx) if !hit[idx] && comp.len() == projected.len() * qk => hit[idx] = true,
            _ => {
                bijective = false;
                break;
            }
        }
    }
    bijective = bijective && hit.iter().all(|&h| h);

    let counts_equal = ph.len() == ps.len();
    Ok(DirectSumReport {
        abelian_summand_dim: k,
        cc_count_h: ph.len(),
        cc_count_sum: ps.len(),
        counts_equal,
        projection_bijective: bijective,
        pass: counts_equal && bijective,
    })
}

/// The two non-isomorphic 3-dimensional algebras with identical commuting
/// graphs: N3_1 and N3_2 at alpha = 1 share their component size multiset.
#[derive(Debug, Clone, Serialize)]
pub struct IsomorphicGraphsReport {
    pub field: String,
    pub sizes_n3_1: Vec<usize>,
    pub sizes_n3_2_1: Vec<usize>,
    pub equal: bool,
}

pub fn verify_isomorphic_graphs_example(field: &FieldRef) -> Result<IsomorphicGraphsReport, CatalogError> {
    let a = instantiate(&AlgebraId::plain(Family::N3_1), field)?;
    let b = instantiate(&AlgebraId::new(Family::N3_2, vec![field.one()]), field)?;
    let pa = CommutingGraph::new(a).expect("noncommutative").components();
    let pb = CommutingGraph::new(b).expect("noncommutative").components();
    Ok(IsomorphicGraphsReport {
        field: field.describe(),
        sizes_n3_1: pa.sizes(),
        sizes_n3_2_1: pb.sizes(),
        equal: pa.sizes() == pb.sizes(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedEntry {
    pub field: String,
    pub algebra: String,
    pub status: SkipStatus,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepTimings {
    pub total_us: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub max_q: u64,
    pub dims: Vec<usize>,
    pub all_pass: bool,
    pub verified: usize,
    pub failed: usize,
    pub entries: Vec<VerificationReport>,
    pub skipped: Vec<SkippedEntry>,
    pub timings: SweepTimings,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_q: u64,
    pub dims: Vec<usize>,
    pub check_shapes: bool,
    /// Worker threads; 0 lets the pool pick.
    pub threads: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { max_q: 5, dims: vec![2, 3, 4], check_shapes: true, threads: 0 }
    }
}

/// Runs `verify` for every admissible catalog instantiation over every prime
/// power q <= max_q, in parallel, assembling a deterministic report ordered
/// by (q, family, parameters).
pub fn sweep(opts: &SweepOptions) -> Result<SweepReport, VerifyError> {
    if opts.max_q > MAX_SWEEP_Q {
        return Err(VerifyError::SweepTooLarge(opts.max_q));
    }
    let t0 = Instant::now();

    let mut jobs: Vec<(AlgebraId, FieldRef)> = Vec::new();
    let mut skipped: Vec<SkippedEntry> = Vec::new();
    for (p, k) in crate::field::prime_powers_up_to(opts.max_q) {
        let field = Field::gf(p, k).expect("p is prime and q is bounded");
        for family in Family::ALL {
            if !opts.dims.contains(&family.dim()) {
                continue;
            }
            for skip in family_skips(family, &field) {
                skipped.push(SkippedEntry {
                    field: field.describe(),
                    algebra: skip.label,
                    status: skip.status,
                    reason: skip.reason,
                });
            }
            for id in admissible_ids(family, &field) {
                jobs.push((id, field.clone()));
            }
        }
    }

    let run = || -> Result<Vec<VerificationReport>, CatalogError> {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|(id, field)| verify(id, field, opts.check_shapes))
            .collect()
    };
    let entries = if opts.threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(run)?
    } else {
        run()?
    };

    let failed = entries.iter().filter(|e| !e.passed()).count();
    Ok(SweepReport {
        schema: REPORT_SCHEMA,
        max_q: opts.max_q,
        dims: opts.dims.clone(),
        all_pass: failed == 0,
        verified: entries.len(),
        failed,
        entries,
        skipped,
        timings: SweepTimings { total_us: t0.elapsed().as_micros() },
    })
}

pub use catalog::Prediction;
