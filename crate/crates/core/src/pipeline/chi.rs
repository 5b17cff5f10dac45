use std::collections::HashMap;

use rayon::prelude::*;

use crate::codes::{canonical_labeling, fixed_subcode, LinearCode};
use crate::perm::Permutation;

use super::{InvolutionFrame, OrbitRepSet, PipelineError};

/// A representative adjusted so that its `chi`-fixed subcode is the
/// bucket's code exactly.
#[derive(Clone, Debug)]
pub struct BucketMember {
    /// Index into the orbit representative set.
    pub entry: usize,
    /// `epsilon` in `C(<chi, mu>)` with `Y(chi)^epsilon = E`.
    pub adjuster: Permutation,
    /// `Y^epsilon`.
    pub code: LinearCode,
}

#[derive(Clone, Debug)]
pub struct Bucket {
    /// The common `chi`-fixed subcode `E`.
    pub fixed: LinearCode,
    pub members: Vec<BucketMember>,
}

#[derive(Clone, Debug, Default)]
pub struct ChiPartition {
    pub buckets: Vec<Bucket>,
}

impl ChiPartition {
    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }
}

/// Groups the representatives by the `C(<chi, mu>)`-orbit of their
/// `chi`-fixed subcode and conjugates each into its bucket's subcode.
///
/// Two structures `(E, chi, mu)` and `(E', chi, mu)` are isomorphic under
/// `S_m` exactly when some element centralizing `chi` and `mu` maps `E` to
/// `E'`, so canonical labelings of those structures decide the orbits.
pub fn refine_by_chi_fixed(reps: &OrbitRepSet, frame: &InvolutionFrame) -> Result<ChiPartition, PipelineError> {
    let perms = [frame.chi.clone(), frame.mu.clone()];
    let labeled: Vec<(LinearCode, crate::codes::CanonicalLabeling)> = reps
        .entries
        .par_iter()
        .map(|e| -> Result<_, PipelineError> {
            let fixed = fixed_subcode(&e.code, &frame.chi)?;
            let lab = canonical_labeling(&fixed, &perms)?;
            Ok((fixed, lab))
        })
        .collect::<Result<_, _>>()?;

    let mut index: HashMap<(LinearCode, Vec<Permutation>), usize> = HashMap::new();
    let mut buckets: Vec<Bucket> = Vec::new();
    let mut rep_labeling: Vec<Permutation> = Vec::new();
    for (i, (fixed, lab)) in labeled.into_iter().enumerate() {
        let key = (lab.code.clone(), lab.perms.clone());
        let code = &reps.entries[i].code;
        match index.get(&key) {
            None => {
                index.insert(key, buckets.len());
                rep_labeling.push(lab.labeling);
                buckets.push(Bucket {
                    fixed,
                    members: vec![BucketMember {
                        entry: i,
                        adjuster: Permutation::identity(code.len()),
                        code: code.clone(),
                    }],
                });
            }
            Some(&b) => {
                let eps = lab.labeling.compose(&rep_labeling[b].inverse());
                debug_assert!(eps.commutes_with(&frame.chi) && eps.commutes_with(&frame.mu));
                debug_assert_eq!(fixed.image(&eps)?, buckets[b].fixed);
                buckets[b].members.push(BucketMember {
                    entry: i,
                    adjuster: eps.clone(),
                    code: code.image(&eps)?,
                });
            }
        }
    }
    Ok(ChiPartition { buckets })
}
