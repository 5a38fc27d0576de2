//! Randomized invariant checks: ring axioms for the Laurent polynomial
//! and cyclotomic arithmetic, and word-level laws of the group engine.

use coxkl_core::coxeter::{Bond, CoxeterSystem, Side};
use coxkl_core::laurent::LaurentPoly;
use coxkl_core::num::Ring;
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn abar_coeff_roundtrip(cs in proptest::collection::vec(-9i64..=9, 0..8)) {
        let cs: Vec<BigInt> = cs.into_iter().map(BigInt::from).collect();
        let p = LaurentPoly::from_abar_coeffs(&cs);
        let back = p.abar_coeffs().unwrap();
        // roundtrip recovers the input up to trailing zeros
        let mut padded = back.clone();
        padded.resize(cs.len().max(back.len()), BigInt::from(0));
        let mut orig = cs.clone();
        orig.resize(padded.len(), BigInt::from(0));
        prop_assert_eq!(padded, orig);
    }

    #[test]
    fn cyclotomic_ring_axioms(
        n in prop::sample::select(vec![8u64, 10, 12, 30]),
        xs in proptest::collection::vec(-5i64..=5, 3),
        ys in proptest::collection::vec(-5i64..=5, 3),
    ) {
        let ring = Ring::cyclotomic(n);
        let g = ring.two_cos_pi_over(n);
        let combine = |cs: &[i64]| {
            let mut acc = ring.zero();
            let mut pw = ring.one();
            for c in cs {
                acc = ring.add(&acc, &ring.mul(&ring.from_i64(*c), &pw));
                pw = ring.mul(&pw, &g);
            }
            acc
        };
        let a = combine(&xs);
        let b = combine(&ys);
        prop_assert!(ring.is_zero(&ring.sub(&ring.add(&a, &b), &ring.add(&b, &a))));
        prop_assert!(ring.is_zero(&ring.sub(&ring.mul(&a, &b), &ring.mul(&b, &a))));
        prop_assert!(ring.is_zero(&ring.sub(&a, &a)));
        prop_assert_eq!(ring.sign(&ring.neg(&a)), -ring.sign(&a));
        // sign is multiplicative
        prop_assert_eq!(ring.sign(&ring.mul(&a, &b)), ring.sign(&a) * ring.sign(&b));
    }
}

fn b2() -> CoxeterSystem {
    CoxeterSystem::new(
        vec!["s1".into(), "s2".into()],
        vec![vec![Bond::Finite(1), Bond::Finite(4)], vec![Bond::Finite(4), Bond::Finite(1)]],
    )
    .unwrap()
}

fn a3() -> CoxeterSystem {
    let b = |k| Bond::Finite(k);
    CoxeterSystem::new(
        vec!["s1".into(), "s2".into(), "s3".into()],
        vec![
            vec![b(1), b(3), b(2)],
            vec![b(3), b(1), b(3)],
            vec![b(2), b(3), b(1)],
        ],
    )
    .unwrap()
}

proptest! {
    #[test]
    fn group_word_laws(word in proptest::collection::vec(0usize..3, 0..10), sys_idx in 0usize..2) {
        let sys = if sys_idx == 0 { a3() } else { b2() };
        let n = sys.rank();
        let mut x = sys.identity();
        for s in word.iter().map(|s| s % n) {
            x = sys.mul_gen(&x, s, Side::Right);
        }
        // length equals the inversion count
        prop_assert_eq!(sys.inversions(&x).len(), sys.length(&x));
        // x * x^{-1} = 1 and lengths agree
        let xi = sys.inv(&x);
        prop_assert_eq!(sys.prod(&[&x, &xi]).unwrap(), sys.identity());
        prop_assert_eq!(sys.length(&xi), sys.length(&x));
        // multiplying by a generator changes length by exactly one
        for s in 0..n {
            let xs = sys.mul_gen(&x, s, Side::Right);
            prop_assert_eq!((sys.length(&xs) as i64 - sys.length(&x) as i64).abs(), 1);
        }
        // the canonical word is reduced and reproduces the element
        let w: Vec<u8> = x.word().to_vec();
        prop_assert_eq!(w.len(), sys.length(&x));
        let mut y = sys.identity();
        for s in &w {
            y = sys.mul_gen(&y, *s as usize, Side::Right);
        }
        prop_assert_eq!(y, x);
    }
}
