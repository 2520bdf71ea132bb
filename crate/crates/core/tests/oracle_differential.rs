mod support {
    pub mod differential;
    pub mod oracle;
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stretched_core::semigroup::brute_force_elements;
use stretched_core::NumericalSemigroup;

use support::differential::{check_case, random_case};
use support::oracle;

#[test]
fn threshold_engine_matches_set_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checks = 0;
    for _ in 0..200 {
        let case = random_case(&mut rng, 12);
        checks += check_case(&case).unwrap_or_else(|msg| panic!("{msg}"));
    }
    assert!(checks > 200 * 20);
}

#[test]
fn oracle_semigroup_agrees_with_library_enumeration() {
    for gens in [&[3, 5][..], &[6, 13, 33, 40, 41], &[10, 21, 26, 37]] {
        let bound = 120;
        let o = oracle::semigroup(gens, bound);
        let lib = brute_force_elements(gens, bound);
        assert_eq!(
            o.elements().collect::<Vec<_>>(),
            lib.into_iter().collect::<Vec<_>>()
        );
        let h = NumericalSemigroup::new(gens).unwrap();
        assert!((0..=bound).all(|x| h.contains(x) == o.contains(x)));
    }
}

#[test]
fn oracle_hilbert_function_of_an_example() {
    // ℓ(A/m^{n+1}) = 7(n+1) − 9 for n ≥ 2
    let gens = [7, 15, 18, 26, 27];
    for n in 2..5 {
        let got = oracle::hilbert_function(&gens, &gens, n, 400);
        assert_eq!(got as i64, 7 * (n as i64 + 1) - 9);
    }
}
