mod common;

use fixglue::codes::{
    canonical_form, fixed_subcode, library, min_distance, pi_lift, pi_project, weight_enumerator, DistanceMode,
    LinearCode,
};
use fixglue::perm::Permutation;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn code_and_perm() -> impl Strategy<Value = (LinearCode, Permutation)> {
    (2usize..=16, any::<u64>()).prop_flat_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = (seed as usize % n) + 1;
        let c = library::random_code(n, k.min(n), &mut rng);
        (Just(c), perm_strategy(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutations_preserve_invariants((c, sigma) in code_and_perm()) {
        let image = c.image(&sigma).unwrap();
        prop_assert_eq!(image.dim(), c.dim());
        prop_assert_eq!(weight_enumerator(&image).unwrap(), weight_enumerator(&c).unwrap());
        prop_assert_eq!(canonical_form(&image).unwrap(), canonical_form(&c).unwrap());
        let d = min_distance(&c, DistanceMode::Auto, None).unwrap();
        prop_assert_eq!(d, min_distance(&image, DistanceMode::Exhaustive, None).unwrap());
    }

    #[test]
    fn fixed_subcode_is_the_fixed_words((c, sigma) in code_and_perm()) {
        let f = fixed_subcode(&c, &sigma).unwrap();
        prop_assert!(c.contains_code(&f));
        prop_assert_eq!(1usize << f.dim(), common::fixed_words(&c, &sigma).len());
    }

    #[test]
    fn weight_enumerator_counts_every_word((c, _) in code_and_perm()) {
        let we = weight_enumerator(&c).unwrap();
        prop_assert_eq!(we.total(), 1u64 << c.dim());
        prop_assert_eq!(we.count(0), 1);
    }

    /// For a self-dual code and a fixed-point-free involution in its group,
    /// the projected fixed code is self-dual exactly when `dim C(sigma) = n/4`.
    #[test]
    fn projection_is_self_dual_iff_fixed_dimension_is_minimal(seed in any::<u64>(), m in 1usize..=5) {
        let n = 4 * m;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sigma = Permutation::from_images((0..n).map(|x| x ^ 1).collect()).unwrap();
        let c = common::random_invariant_self_dual(n, &[sigma.clone()], &mut rng);
        let f = fixed_subcode(&c, &sigma).unwrap();
        prop_assert!(f.dim() >= n / 4);
        let p = pi_project(&f, &sigma).unwrap();
        prop_assert_eq!(p.is_self_dual(), f.dim() == n / 4);
        prop_assert_eq!(pi_lift(&p, &sigma).unwrap(), f);
    }
}
