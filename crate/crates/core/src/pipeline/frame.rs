use crate::codes::eta;
use crate::perm::{xor_involution, Permutation};

use super::PipelineError;

/// Three commuting fixed-point-free involutions generating an elementary
/// abelian group of order 8, and the pair they induce on `alpha`-orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionFrame {
    pub n: usize,
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
    /// `eta(beta, alpha)`.
    pub chi: Permutation,
    /// `eta(gamma, alpha)`.
    pub mu: Permutation,
}

impl InvolutionFrame {
    pub fn half_n(&self) -> usize {
        self.n / 2
    }

    /// The seven nontrivial elements of `<alpha, beta, gamma>`.
    pub fn nontrivial_elements(&self) -> Vec<Permutation> {
        let gens = [&self.alpha, &self.beta, &self.gamma];
        (1..8u32)
            .map(|mask| {
                let mut g = Permutation::identity(self.n);
                for (i, x) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g = g.compose(x);
                    }
                }
                g
            })
            .collect()
    }
}

/// `alpha = (1,2)(3,4)..`, `beta = (1,3)(2,4)..`, `gamma = (1,5)(2,6)..`:
/// on 0-based points, `x -> x xor 1`, `x xor 2`, `x xor 4`.
pub fn standard_frame(n: usize) -> Result<InvolutionFrame, PipelineError> {
    if n == 0 || n % 8 != 0 {
        return Err(PipelineError::FrameLength(n));
    }
    let alpha = xor_involution(n, 1);
    let beta = xor_involution(n, 2);
    let gamma = xor_involution(n, 4);
    let chi = eta(&beta, &alpha)?;
    let mu = eta(&gamma, &alpha)?;
    debug_assert_eq!(chi, xor_involution(n / 2, 1));
    debug_assert_eq!(mu, xor_involution(n / 2, 2));
    Ok(InvolutionFrame {
        n,
        alpha,
        beta,
        gamma,
        chi,
        mu,
    })
}
