//! The JSON run report. Field order is fixed by the struct definitions, so
//! equal runs serialize to equal bytes.

use serde::Serialize;

use crate::codes::LinearCode;
use crate::pipeline::{IntersectionProfile, PipelineRun, Verdict};

#[derive(Clone, Debug, Serialize)]
pub struct ReportDoc {
    pub run: RunInfo,
    pub counts: Counts,
    pub survivors: Vec<SurvivorRecord>,
    pub profiles: Vec<Vec<IntersectionProfile>>,
    pub cases_table: Vec<[usize; 3]>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunInfo {
    pub n: usize,
    pub target_d: usize,
    pub threads: usize,
    /// Only present when requested, since it breaks reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub database: usize,
    pub library: usize,
    pub representatives: usize,
    pub buckets: usize,
    pub work_items: usize,
    pub survivors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurvivorRecord {
    pub n: usize,
    pub k: usize,
    pub min_distance: usize,
    pub pair: &'static str,
    pub bucket: usize,
    pub parent_alpha: usize,
    pub parent_beta: usize,
    pub omega: String,
    pub pair_dim: usize,
    pub generator: Vec<String>,
    pub canonical: Vec<String>,
}

fn rows(c: &LinearCode) -> Vec<String> {
    c.generator().rows().iter().map(|r| r.to_string()).collect()
}

impl ReportDoc {
    pub fn new(run: &PipelineRun, threads: usize, wall_time_ms: Option<u128>) -> Self {
        ReportDoc {
            run: RunInfo {
                n: run.frame.n,
                target_d: run.target_d,
                threads,
                wall_time_ms,
            },
            counts: Counts {
                database: run.db_size,
                library: run.library.len(),
                representatives: run.reps.len(),
                buckets: run.partition.len(),
                work_items: run.work_items,
                survivors: run.survivors.len(),
            },
            survivors: run
                .survivors
                .iter()
                .map(|s| SurvivorRecord {
                    n: s.code.len(),
                    k: s.code.dim(),
                    min_distance: s.min_distance,
                    pair: s.pair.name(),
                    bucket: s.bucket,
                    parent_alpha: s.parent_alpha,
                    parent_beta: s.parent_beta,
                    omega: s.omega.to_string(),
                    pair_dim: s.pair_dim,
                    generator: rows(&s.code),
                    canonical: rows(&s.canonical),
                })
                .collect(),
            profiles: run.profiles.clone(),
            cases_table: run.table.rows.iter().map(|&(a, b, c)| [a, b, c]).collect(),
            verdict: run.verdict,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
