use nyldon::fastfactor::{self, Comparator};
use nyldon::melancon::{self, BlockChain, Mode};
use nyldon::oracle::BruteForce;
use nyldon::word::{conjugates, is_primitive};
use nyldon::{Alphabet, Policy, Word};
use proptest::prelude::*;

fn word(max_size: u32, max_len: usize) -> impl Strategy<Value = Word> {
    (2..=max_size).prop_flat_map(move |k| {
        prop::collection::vec(0..k, 1..=max_len)
            .prop_map(move |v| Word::new(Alphabet::new(k).unwrap(), v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn factorizations_agree(w in word(4, 14)) {
        let oracle = BruteForce::new(&Policy::Lex).factorize(&w).unwrap();
        let fast = fastfactor::nyldon_factorize(&w).unwrap();
        let naive = fastfactor::factor_stack(&w, Comparator::Naive).unwrap().to_factorization(&w);
        let queue = melancon::factorize(&w, &Policy::Lex).unwrap();
        prop_assert_eq!(fast.factors(), oracle.factors());
        prop_assert_eq!(naive.factors(), oracle.factors());
        prop_assert_eq!(queue.factors(), oracle.factors());
        prop_assert!(fast.is_valid_for(&w, &Policy::Lex));
    }

    #[test]
    fn chain_and_queue_agree(w in word(3, 14), p in prop::sample::select(Policy::ALL.to_vec())) {
        let mut chain = BlockChain::new(&w, &p, Mode::Linear).unwrap();
        chain.run().unwrap();
        let queue = melancon::factorize(&w, &p).unwrap();
        let chained = chain.into_factorization();
        prop_assert_eq!(chained.factors(), queue.factors());
    }

    #[test]
    fn unique_member_conjugate(w in word(3, 12)) {
        prop_assume!(is_primitive(&w).unwrap());
        let oracle = BruteForce::new(&Policy::Lex);
        let members: Vec<Word> = conjugates(&w)
            .unwrap()
            .into_iter()
            .filter(|c| oracle.is_member(c).unwrap())
            .collect();
        prop_assert_eq!(members.len(), 1);
        prop_assert_eq!(&melancon::conjugate(&w, &Policy::Lex).unwrap(), &members[0]);
    }

    #[test]
    fn conjugate_is_rotation_invariant(w in word(3, 40), r in 0usize..40) {
        prop_assume!(is_primitive(&w).unwrap());
        let c = melancon::conjugate(&w, &Policy::Lex).unwrap();
        let rotated = w.rotate(r % w.len());
        prop_assert_eq!(melancon::conjugate(&rotated, &Policy::Lex).unwrap(), c);
    }

    #[test]
    fn factors_are_members(w in word(3, 200)) {
        let f = fastfactor::nyldon_factorize(&w).unwrap();
        prop_assert!(f.is_valid_for(&w, &Policy::Lex));
        for factor in f.factors() {
            prop_assert!(fastfactor::is_nyldon(factor).unwrap());
        }
    }
}
