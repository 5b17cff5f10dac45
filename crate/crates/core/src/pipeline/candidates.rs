use rayon::prelude::*;

use crate::codes::{automorphism_group, min_distance, DistanceMode, LinearCode};
use crate::perm::{
    centralizer, involution_class_reps, is_free_klein_pair, klein_pair_conjugator, PermGroup, Permutation,
};

use super::{InvolutionFrame, PipelineError};

/// A database code admitted to the search.
#[derive(Clone, Debug)]
pub struct Candidate {
    /// Position in the input database.
    pub source: usize,
    pub code: LinearCode,
    pub aut: PermGroup,
    /// `t` with `<chi, mu> <= Aut(code^t)`.
    pub witness: Permutation,
}

#[derive(Clone, Debug)]
pub struct CandidateLibrary {
    pub half_n: usize,
    pub codes: Vec<Candidate>,
}

impl CandidateLibrary {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

/// The group generated by one permutation.
pub(crate) fn cyclic(x: &Permutation) -> PermGroup {
    PermGroup::new(x.degree(), vec![x.clone()]).expect("single generator")
}

/// Some `t` with `t^-1 <x', y'> t = <chi, mu>` for a free Klein pair
/// `(x', y')` inside `aut`, if there is one.
pub fn klein_witness(aut: &PermGroup, chi: &Permutation, mu: &Permutation) -> Result<Option<Permutation>, PipelineError> {
    for x in involution_class_reps(aut, true)? {
        let cent = centralizer(aut, &cyclic(&x))?;
        let mut partner = None;
        cent.for_each_element(|y| {
            if is_free_klein_pair(&x, y) {
                partner = Some(y.clone());
                return false;
            }
            true
        });
        if let Some(y) = partner {
            return Ok(klein_pair_conjugator((&x, &y), (chi, mu))?);
        }
    }
    Ok(None)
}

/// Keeps the self-dual codes of length `n/2` with minimum distance at least
/// `half_target_d` whose automorphism group contains a conjugate of
/// `<chi, mu>`.
pub fn filter_candidates(
    db: &[LinearCode],
    frame: &InvolutionFrame,
    half_target_d: usize,
) -> Result<CandidateLibrary, PipelineError> {
    let half_n = frame.half_n();
    for (i, c) in db.iter().enumerate() {
        if c.len() != half_n {
            return Err(PipelineError::WrongLength {
                index: i,
                expected: half_n,
                found: c.len(),
            });
        }
    }
    let kept: Vec<Option<Candidate>> = db
        .par_iter()
        .enumerate()
        .map(|(i, c)| -> Result<Option<Candidate>, PipelineError> {
            if !c.is_self_dual() {
                return Ok(None);
            }
            if half_target_d > 0 && min_distance(c, DistanceMode::Auto, Some(half_target_d))? < half_target_d {
                return Ok(None);
            }
            let aut = automorphism_group(c)?;
            Ok(klein_witness(&aut, &frame.chi, &frame.mu)?.map(|witness| Candidate {
                source: i,
                code: c.clone(),
                aut,
                witness,
            }))
        })
        .collect::<Result<_, _>>()?;
    Ok(CandidateLibrary {
        half_n,
        codes: kept.into_iter().flatten().collect(),
    })
}
