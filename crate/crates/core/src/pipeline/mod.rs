//! The search for self-dual codes with a prescribed elementary abelian
//! group of order 8: frames, candidate libraries, orbit representatives,
//! the `chi`-fixed refinement, gluing, and the final compatibility check.

mod candidates;
mod chi;
mod frame;
mod glue;
mod profiles;
mod reps;

pub use candidates::{filter_candidates, klein_witness, Candidate, CandidateLibrary};
pub use chi::{refine_by_chi_fixed, Bucket, BucketMember, ChiPartition};
pub use frame::{standard_frame, InvolutionFrame};
pub use glue::{glue_search, GlueOutcome, GluePair, GlueSurvivor};
pub use profiles::{cases_table, intersection_profiles, profiles_of, verdict, CasesTable, IntersectionProfile, Verdict};
pub use reps::{orbit_reps, OrbitRep, OrbitRepSet};

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::codes::{library, CodeError, LinearCode};
use crate::perm::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("frame length {0} is not a positive multiple of 8")]
    FrameLength(usize),
    #[error("database entry {index} has length {found}, expected {expected}")]
    WrongLength { index: usize, expected: usize, found: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Parameters of one end-to-end run.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub n: usize,
    pub target_d: usize,
    /// Pairs of frame involutions tried as the glued pair. Survivors are
    /// merged across pairs by canonical form.
    pub pairs: Vec<GluePair>,
}

impl PipelineConfig {
    pub fn new(n: usize, target_d: usize) -> Self {
        PipelineConfig {
            n,
            target_d,
            pairs: GluePair::ALL.to_vec(),
        }
    }
}

/// Everything a run produces, in the order it was computed.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub frame: InvolutionFrame,
    pub target_d: usize,
    pub db_size: usize,
    pub library: CandidateLibrary,
    pub reps: OrbitRepSet,
    pub partition: ChiPartition,
    pub work_items: usize,
    pub survivors: Vec<GlueSurvivor>,
    /// One list per survivor.
    pub profiles: Vec<Vec<IntersectionProfile>>,
    pub table: CasesTable,
    pub verdict: Verdict,
}

pub fn run_pipeline(db: &[LinearCode], config: &PipelineConfig) -> Result<PipelineRun, PipelineError> {
    let frame = standard_frame(config.n)?;
    let library = filter_candidates(db, &frame, config.target_d / 2)?;
    let reps = orbit_reps(&library, &frame)?;
    let partition = refine_by_chi_fixed(&reps, &frame)?;
    let mut seen = HashSet::new();
    let mut survivors = Vec::new();
    let mut work_items = 0;
    for &pair in &config.pairs {
        let outcome = glue_search(&partition, &frame, config.target_d, pair)?;
        work_items += outcome.work_items;
        for s in outcome.survivors {
            if seen.insert(s.canonical.clone()) {
                survivors.push(s);
            }
        }
    }
    let profiles: Vec<Vec<IntersectionProfile>> = survivors
        .par_iter()
        .map(|s| intersection_profiles(s, &frame))
        .collect::<Result<_, _>>()?;
    let table = cases_table(&library, &frame)?;
    let verdict = verdict(&survivors, &profiles, &table);
    Ok(PipelineRun {
        frame,
        target_d: config.target_d,
        db_size: db.len(),
        library,
        reps,
        partition,
        work_items,
        survivors,
        profiles,
        table,
        verdict,
    })
}

/// The desk-scale run: length 8, target distance 4, and `i_2^2` (the only
/// self-dual `[4,2]` code up to equivalence) as the database.
pub fn selftest() -> Result<PipelineRun, PipelineError> {
    run_pipeline(&[library::i2(2)], &PipelineConfig::new(8, 4))
}
