//! Machine versus reference normalizer on random closed terms.

mod common;

use heap_lambda::{
    decode, encode, reference_normalize, to_index, EvalLimits, EvalOutcome, Machine32,
    OracleOutcome, Term,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FUEL: u64 = 200;
const BLOCKS: usize = 1 << 18;

fn compare(t: &Term) -> Result<(), TestCaseError> {
    let mut m = Machine32::new(BLOCKS).unwrap();
    m.reset();
    encode(&mut m, t).unwrap();
    let machine = m.normal(EvalLimits::steps(FUEL));
    let oracle = reference_normalize(&to_index(t).unwrap(), FUEL);
    match (machine, oracle) {
        (EvalOutcome::NormalForm { root, steps }, OracleOutcome::NormalForm { term, steps: s }) => {
            let got = decode(&m, root).unwrap();
            prop_assert_eq!(to_index(&got).unwrap(), term);
            prop_assert_eq!(steps, s);
            prop_assert_eq!(m.free_count().unwrap() + m.subtree_nodes(root).len(), BLOCKS);
        }
        (EvalOutcome::StepLimit { .. }, OracleOutcome::FuelExhausted) => {}
        (machine, oracle) => {
            prop_assert!(false, "{t}: machine {machine:?}, oracle {oracle:?}")
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn machine_agrees_with_oracle(seed in any::<u64>(), size in 2usize..=30) {
        let t = common::closed_term(&mut ChaCha8Rng::seed_from_u64(seed), size);
        compare(&t)?;
    }

    #[test]
    fn encode_decode_round_trip(seed in any::<u64>(), size in 2usize..=40) {
        let t = common::closed_term(&mut ChaCha8Rng::seed_from_u64(seed), size);
        let mut m = Machine32::new(64).unwrap();
        m.reset();
        let root = encode(&mut m, &t).unwrap();
        prop_assert!(m.validate(root).is_ok());
        prop_assert_eq!(to_index(&decode(&m, root).unwrap()).unwrap(), to_index(&t).unwrap());
        prop_assert_eq!(m.free_count().unwrap(), 64 - size);
    }
}

#[test]
fn known_tricky_terms() {
    for src in [
        r"(\x.\y.x y) (\a.a) (\b.b)",
        r"\z.(\x.\y.x) z",
        r"\a.\b.(\x.\y.x y) (\c.a c b)",
        r"(\f.\x.f (f x)) (\f.\x.f (f x))",
        r"\w.(\x.x (\y.x y w)) (\p.\q.p q)",
        r"((\x.\y.x) (\a.a)) ((\s.s s) (\s.s s))",
    ] {
        compare(&common::term(src)).unwrap();
    }
}
