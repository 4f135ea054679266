use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dihedral_walk::prelude::*;
use dihedral_walk::walk::time_averaged_distribution;

fn setup(n: usize, seed: u64) -> (DihedralParams, CoinOperator, WalkerState) {
    let p = DihedralParams::new(n).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coin = CoinOperator::haar_random(&mut rng);
    let psi = WalkerState::random(p, &mut rng);
    (p, coin, psi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evolution_preserves_norm(n in 3usize..40, seed: u64, t in 0usize..60) {
        let (_, coin, psi) = setup(n, seed);
        prop_assert!((evolve(&psi, &coin, t).norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn direct_and_fourier_agree(n in 3usize..24, seed: u64, t in 0usize..40) {
        let (_, coin, psi) = setup(n, seed);
        let d = evolve(&psi, &coin, t).max_abs_diff(&evolve_fourier(&psi, &coin, t).unwrap());
        prop_assert!(d < 1e-10);
    }

    #[test]
    fn superposed_start_is_mirror_symmetric(n in 3usize..30, a in -1.0f64..1.0, b in -1.0f64..1.0, g in -1.0f64..1.0, t in 0usize..80) {
        let r = (a * a + b * b + g * g).sqrt();
        prop_assume!(r > 1e-3);
        let p = DihedralParams::new(n).unwrap();
        let cs = InitialCoinState::from_real(a / r, b / r, g / r).unwrap();
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let terms = [(p.identity(), h), (GroupElement::new(1, 0, &p).unwrap(), h)];
        let psi = WalkerState::from_position_superposition(&cs, &terms, p).unwrap();
        let dist = position_distribution(&evolve(&psi, &CoinOperator::grover(), t));
        for x in 0..n {
            let mirror = n + (n - x) % n;
            prop_assert!((dist.get(VertexIndex(x)) - dist.get(VertexIndex(mirror))).abs() < 1e-10);
        }
    }

    #[test]
    fn time_average_is_a_distribution(n in 3usize..16, seed: u64, horizon in 1usize..100) {
        let (_, coin, psi) = setup(n, seed);
        let avg = time_averaged_distribution(&psi, &coin, horizon).unwrap();
        prop_assert!((avg.total() - 1.0).abs() < 1e-12);
        prop_assert!(avg.probs().iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn limits_form_a_distribution(n in 3usize..20, seed: u64) {
        let (p, coin, psi) = setup(n, seed);
        let limits = FourierPropagator::new(&coin, p).unwrap().limiting_distribution(&psi).unwrap();
        prop_assert!((limits.total() - 1.0).abs() < 1e-9);
    }
}
