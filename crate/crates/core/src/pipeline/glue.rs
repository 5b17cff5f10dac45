use std::collections::HashSet;

use rayon::prelude::*;

use crate::codes::{
    automorphism_group_of_structure, canonical_form, lift_orbit_permutation, min_distance, pi_lift, DistanceMode,
    LinearCode,
};
use crate::perm::{right_transversal, Permutation};

use super::{ChiPartition, InvolutionFrame, PipelineError};

/// Which two frame involutions play the roles of `alpha` and `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GluePair {
    AlphaBeta,
    AlphaGamma,
    BetaGamma,
}

impl GluePair {
    pub const ALL: [GluePair; 3] = [GluePair::AlphaBeta, GluePair::AlphaGamma, GluePair::BetaGamma];

    pub fn name(self) -> &'static str {
        match self {
            GluePair::AlphaBeta => "alpha,beta",
            GluePair::AlphaGamma => "alpha,gamma",
            GluePair::BetaGamma => "beta,gamma",
        }
    }

    /// A relabeling `nu` normalizing the frame group with
    /// `nu^-1 alpha nu` and `nu^-1 beta nu` the selected pair. It permutes
    /// the three low bits of each point.
    pub fn relabeling(self, n: usize) -> Permutation {
        let bits: [usize; 3] = match self {
            GluePair::AlphaBeta => [0, 1, 2],
            GluePair::AlphaGamma => [0, 2, 1],
            GluePair::BetaGamma => [1, 2, 0],
        };
        let images = (0..n)
            .map(|x| {
                let low = (0..3).fold(0, |acc, i| acc | ((x >> i & 1) << bits[i]));
                (x & !7) | low
            })
            .collect();
        Permutation::from_images(images).expect("bit permutation")
    }
}

#[derive(Clone, Debug)]
pub struct GlueSurvivor {
    pub code: LinearCode,
    pub canonical: LinearCode,
    pub pair: GluePair,
    pub bucket: usize,
    /// Orbit-representative indices of the two parents.
    pub parent_alpha: usize,
    pub parent_beta: usize,
    /// Element of `C_{Aut(E)}(<chi, mu>)` applied to the second parent.
    pub omega: Permutation,
    /// Dimension of the intersection of the two lifted parents.
    pub pair_dim: usize,
    pub min_distance: usize,
}

#[derive(Clone, Debug, Default)]
pub struct GlueOutcome {
    pub survivors: Vec<GlueSurvivor>,
    pub work_items: usize,
    /// Glued codes passing the distance filter, before deduplication.
    pub passed: usize,
}

struct Item {
    bucket: usize,
    a: usize,
    b: usize,
    omega: Permutation,
}

/// Forms `lift_alpha(Y_a) + lift_beta(Y_b)^omega` for every bucket, every
/// ordered pair of its members and every `omega` in a right transversal of
/// `Aut(Y_b) cap W` in `W = C_{Aut(E)}(<chi, mu>)`; keeps the codes with
/// minimum distance at least `target_d`, one per `S_n`-class.
pub fn glue_search(
    partition: &ChiPartition,
    frame: &InvolutionFrame,
    target_d: usize,
    pair: GluePair,
) -> Result<GlueOutcome, PipelineError> {
    let perms = [frame.chi.clone(), frame.mu.clone()];
    let mut items = Vec::new();
    for (bi, bucket) in partition.buckets.iter().enumerate() {
        let w = automorphism_group_of_structure(&bucket.fixed, &perms)?;
        let transversals: Vec<Vec<Permutation>> = bucket
            .members
            .par_iter()
            .map(|m| -> Result<Vec<Permutation>, PipelineError> {
                let h = automorphism_group_of_structure(&m.code, &perms)?;
                Ok(right_transversal(&w, &h)?.representatives().to_vec())
            })
            .collect::<Result<_, _>>()?;
        for a in 0..bucket.members.len() {
            for (b, t) in transversals.iter().enumerate() {
                for omega in t {
                    items.push(Item {
                        bucket: bi,
                        a,
                        b,
                        omega: omega.clone(),
                    });
                }
            }
        }
    }
    let nu = pair.relabeling(frame.n);
    let evaluated: Vec<Option<(LinearCode, usize, usize)>> = items
        .par_iter()
        .map(|it| -> Result<_, PipelineError> {
            let bucket = &partition.buckets[it.bucket];
            let ya = pi_lift(&bucket.members[it.a].code, &frame.alpha)?;
            let rho = lift_orbit_permutation(&it.omega, &frame.beta)?;
            let yb = pi_lift(&bucket.members[it.b].code, &frame.beta)?.image(&rho)?;
            let glued = ya.sum(&yb);
            let d = if glued.dim() == 0 {
                0
            } else {
                min_distance(&glued, DistanceMode::Auto, Some(target_d))?
            };
            if d < target_d {
                return Ok(None);
            }
            let pair_dim = ya.intersection(&yb).dim();
            Ok(Some((glued.image(&nu)?, pair_dim, d)))
        })
        .collect::<Result<_, _>>()?;
    let passing: Vec<(usize, LinearCode, usize, usize)> = evaluated
        .into_iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|(c, p, d)| (i, c, p, d)))
        .collect();
    let canon: Vec<LinearCode> = passing
        .par_iter()
        .map(|(_, c, _, _)| canonical_form(c))
        .collect::<Result<_, _>>()?;
    let mut seen = HashSet::new();
    let mut survivors = Vec::new();
    for ((i, code, pair_dim, d), canonical) in passing.iter().zip(canon) {
        if !seen.insert(canonical.clone()) {
            continue;
        }
        let it = &items[*i];
        let bucket = &partition.buckets[it.bucket];
        survivors.push(GlueSurvivor {
            code: code.clone(),
            canonical,
            pair,
            bucket: it.bucket,
            parent_alpha: bucket.members[it.a].entry,
            parent_beta: bucket.members[it.b].entry,
            omega: it.omega.clone(),
            pair_dim: *pair_dim,
            min_distance: *d,
        });
    }
    Ok(GlueOutcome {
        survivors,
        work_items: items.len(),
        passed: passing.len(),
    })
}
