use rayon::prelude::*;

use crate::codes::LinearCode;
use crate::perm::{
    centralizer, conjugator_in_sym, involution_class_reps, involution_class_reps_where, is_free_klein_pair,
    klein_pair_conjugator, Permutation, DEFAULT_ENUMERATION_BOUND,
};

use super::candidates::cyclic;
use super::{CandidateLibrary, InvolutionFrame, PipelineError};

/// One code `Y_{k,l} = Y^{tau_k sigma_l}` with `<chi, mu> <= Aut(Y_{k,l})`.
#[derive(Clone, Debug)]
pub struct OrbitRep {
    pub code: LinearCode,
    /// Index into the candidate library.
    pub source: usize,
    pub chi_class: usize,
    pub mu_class: usize,
    pub tau: Permutation,
    pub sigma: Permutation,
}

#[derive(Clone, Debug, Default)]
pub struct OrbitRepSet {
    pub entries: Vec<OrbitRep>,
}

impl OrbitRepSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Representatives of the orbits of `C(<chi, mu>)` on the codes equivalent
/// to a library code and admitting `<chi, mu>`:
///
/// 1. classes `chi_1..chi_s` of fixed-point-free involutions in `Aut(Y)`;
/// 2. `tau_k` with `tau_k^-1 chi_k tau_k = chi`, `Y_k = Y^tau_k`;
/// 3. classes `mu_1..mu_t` under `C_{Aut(Y_k)}(chi)` of the `mu'` there with
///    `<chi, mu'>` acting freely (equivalently, conjugate to `<chi, mu>`);
/// 4. `sigma_l` in `C(chi)` with `sigma_l^-1 mu_l sigma_l = mu`.
pub fn orbit_reps(lib: &CandidateLibrary, frame: &InvolutionFrame) -> Result<OrbitRepSet, PipelineError> {
    let (chi, mu) = (&frame.chi, &frame.mu);
    let per_code: Vec<Vec<OrbitRep>> = lib
        .codes
        .par_iter()
        .enumerate()
        .map(|(idx, cand)| -> Result<Vec<OrbitRep>, PipelineError> {
            let mut out = Vec::new();
            for (k, chi_k) in involution_class_reps(&cand.aut, true)?.iter().enumerate() {
                let tau = conjugator_in_sym(chi_k, chi)?.expect("fpf involutions share a cycle type");
                let y_k = cand.code.image(&tau)?;
                let aut_k = cand.aut.conjugate(&tau);
                let cent = centralizer(&aut_k, &cyclic(chi))?;
                let mus = involution_class_reps_where(&cent, DEFAULT_ENUMERATION_BOUND, |x| is_free_klein_pair(chi, x))?;
                for (l, mu_l) in mus.iter().enumerate() {
                    let sigma = klein_pair_conjugator((chi, mu_l), (chi, mu))?.expect("free Klein actions are conjugate");
                    let code = y_k.image(&sigma)?;
                    debug_assert!(code.is_automorphism(chi) && code.is_automorphism(mu));
                    out.push(OrbitRep {
                        code,
                        source: idx,
                        chi_class: k,
                        mu_class: l,
                        tau: tau.clone(),
                        sigma,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;
    Ok(OrbitRepSet {
        entries: per_code.into_iter().flatten().collect(),
    })
}
