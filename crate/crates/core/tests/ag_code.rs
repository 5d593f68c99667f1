#[path = "../../validation/src/lib.rs"]
mod common;

use common::{hermitian, random_vec, rs};
use powerag::CodeSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn codes() -> Vec<CodeSpec> {
    vec![rs(2, 3, 2), rs(2, 4, 4), rs(3, 2, 5), hermitian(2, 3), hermitian(3, 8), hermitian(4, 15), hermitian(5, 55)]
}

#[test]
fn minimum_distance_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for code in codes() {
        let fs = code.backend().field();
        let mut tested = 0;
        while tested < 200 {
            let msg = random_vec(fs, code.k(), &mut rng);
            if msg.iter().all(|m| m.is_zero()) {
                continue;
            }
            let wt = code.encode(&msg).unwrap().iter().filter(|c| !c.is_zero()).count();
            assert!(wt >= code.dstar(), "{} weight {wt} < {}", code.backend().name(), code.dstar());
            tested += 1;
        }
    }
}

#[test]
fn encoding_is_injective_and_interpolation_has_full_rank() {
    for code in codes() {
        let fs = code.backend().field();
        assert_eq!(code.generator_matrix().rank(fs), code.k());
        assert_eq!(code.evaluation_matrix(code.gamma() + code.rho()).rank(fs), code.n());
    }
}

#[test]
fn message_coordinates_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for code in codes() {
        let msg = random_vec(code.backend().field(), code.k(), &mut rng);
        let f = code.message_function(&msg).unwrap();
        assert_eq!(code.message_coords(&f).unwrap(), msg);
        assert_eq!(code.evaluate_all(&f), code.encode(&msg).unwrap());
    }
}
