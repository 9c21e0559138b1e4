//! Invariants of the classifier and decomposition checks on random nilpotent algebras.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use evoalg::classify::{classify, normal_form, witness_isomorphism};
use evoalg::oracle::{exhaustive_iso, verify_hom, SearchBudget};
use evoalg::{Error, EvolutionAlgebra, FieldDescriptor, Matrix, Verdict};

fn random_nilpotent(p: u64, n: usize, seed: u64) -> EvolutionAlgebra {
    let f = FieldDescriptor::prime(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::zeros(f, n, n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                m.set(a, b, f.int(rng.gen_range(0..p as i64)));
            }
        }
    }
    EvolutionAlgebra::from_matrix(m).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for a in (1..n).rev() {
        perm.swap(a, rng.gen_range(0..=a));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_witnesses_are_ideals(n in 1usize..=6, seed in any::<u64>()) {
        let e = random_nilpotent(13, n, seed);
        if let Verdict::Decomposable { witness: Some((i, j)), .. } = e.decomposability_check() {
            prop_assert!(e.is_direct_sum_of_ideals(&i, &j));
        }
    }

    #[test]
    fn labels_ignore_basis_order(n in 1usize..=5, seed in any::<u64>(), s2 in any::<u64>()) {
        let e = random_nilpotent(13, n, seed);
        let moved = e.permute(&shuffled(n, s2));
        // a parameter known only through its square may lie outside F13;
        // then both presentations must fail alike
        let (a, b) = match (normal_form(&e), normal_form(&moved)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::SqrtUnavailable(_)), Err(Error::SqrtUnavailable(_))) => return Ok(()),
            (a, b) => return Err(TestCaseError::fail(format!("{a:?} vs {b:?}"))),
        };
        prop_assert_eq!(&a.parts, &b.parts);
        match witness_isomorphism(&e, &moved) {
            Ok(Some(w)) => prop_assert!(verify_hom(&e, &moved, &w).unwrap()),
            Ok(None) => prop_assert!(false, "equal labels but no witness"),
            Err(Error::SqrtUnavailable(_)) => prop_assert!(a.map.is_none() || b.map.is_none()),
            Err(other) => prop_assert!(false, "{}", other),
        }
    }

    #[test]
    fn isomorphic_over_f5_means_equal_labels(n in 1usize..=3, s1 in any::<u64>(), s2 in any::<u64>()) {
        let e1 = random_nilpotent(5, n, s1);
        let e2 = random_nilpotent(5, n, s2);
        let found = exhaustive_iso(&e1, &e2, SearchBudget::exhaustive()).unwrap();
        if found.is_some() {
            prop_assert_eq!(classify(&e1).unwrap(), classify(&e2).unwrap());
        }
    }
}
