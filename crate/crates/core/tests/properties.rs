use proptest::prelude::*;

use cpt_core::autosolve::Monomial;
use cpt_core::exactnum::{ExactMatrix, GaussianRational};
use cpt_core::golden::{format_monomial, parse_monomial};
use cpt_core::lorentzrep::{spintensor_transform, SpinTensor};
use cpt_core::multivector::{volume_element, volume_inverse, AlgebraSignature, Multivector};
use cpt_core::spinbasis::build_brauer_weyl;

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

fn matrix(dim: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(coeff(), dim * dim).prop_map(move |v| ExactMatrix::from_fn(dim, |r, c| v[r * dim + c].clone()))
}

fn element(sig: AlgebraSignature) -> impl Strategy<Value = Multivector> {
    proptest::collection::vec((0..(1u32 << sig.n()), coeff()), 0..8).prop_map(move |t| Multivector::from_terms(sig, t))
}

fn signature() -> impl Strategy<Value = AlgebraSignature> {
    prop_oneof![
        (1..=6usize).prop_map(|n| AlgebraSignature::complex(n).unwrap()),
        (1..=6usize)
            .prop_flat_map(|n| (Just(n), 0..=n))
            .prop_map(|(n, p)| AlgebraSignature::real(p, n - p).unwrap()),
    ]
}

fn pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    signature().prop_flat_map(|s| (element(s), element(s)))
}

fn real_pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    (1..=6usize)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_map(|(n, p)| AlgebraSignature::real(p, n - p).unwrap())
        .prop_flat_map(|s| (element(s), element(s)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn kron_is_associative(a in matrix(2), b in matrix(2), c in matrix(2)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kron_is_bilinear_over_products(a in matrix(2), b in matrix(2), c in matrix(2), d in matrix(2)) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_and_conj_are_involutions(a in matrix(3)) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.adjoint(), a.transpose().conj());
    }

    #[test]
    fn automorphisms_are_involutions(a in signature().prop_flat_map(element)) {
        prop_assert_eq!(a.grade_involution().grade_involution(), a.clone());
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.clifford_conjugation().clifford_conjugation(), a.clone());
        prop_assert_eq!(a.clifford_conjugation(), a.grade_involution().reversion());
    }

    #[test]
    fn pseudo_conjugation_is_involution(a in (1..=6usize).prop_flat_map(|n| element(AlgebraSignature::complex(n).unwrap()))) {
        let p = a.pseudo_conjugation().unwrap();
        prop_assert_eq!(p.pseudo_conjugation().unwrap(), a);
    }

    #[test]
    fn grade_involution_is_homomorphism((a, b) in pair()) {
        let lhs = a.geometric_product(&b).unwrap().grade_involution();
        let rhs = a.grade_involution().geometric_product(&b.grade_involution()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversion_is_antihomomorphism((a, b) in pair()) {
        let lhs = a.geometric_product(&b).unwrap().reversion();
        let rhs = b.reversion().geometric_product(&a.reversion()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn geometric_product_is_associative((a, b) in pair(), c in any::<u8>()) {
        let c = Multivector::blade(a.signature(), u32::from(c) & a.signature().full_mask(), GaussianRational::from_ints(1, 1));
        let lhs = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
        let rhs = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn even_n_volume_conjugation_is_grade_involution((a, _) in real_pair()) {
        let sig = a.signature();
        let conj = volume_element(sig).geometric_product(&a).unwrap().geometric_product(&volume_inverse(sig)).unwrap();
        if sig.n() % 2 == 0 {
            prop_assert_eq!(conj, a.grade_involution());
        } else {
            prop_assert_eq!(conj, a);
        }
    }

    #[test]
    fn spintensor_transform_composes(
        s1 in matrix(2), s2 in matrix(2), d1 in matrix(2), d2 in matrix(2),
        k in 0u32..=2, r in 0u32..=2, seed in proptest::collection::vec(coeff(), 16),
    ) {
        let t = SpinTensor::new(k, r, seed[..1 << (k + r)].to_vec()).unwrap();
        let twice = spintensor_transform(&s2, &d2, &spintensor_transform(&s1, &d1, &t).unwrap()).unwrap();
        let once = spintensor_transform(&s2.mul(&s1).unwrap(), &d2.mul(&d1).unwrap(), &t).unwrap();
        prop_assert_eq!(twice.components, once.components);
    }

    #[test]
    fn monomial_commutation_parity(m in 1usize..=4, mask in any::<u32>(), j in 0usize..8) {
        let g = build_brauer_weyl(m).unwrap();
        let n = g.len();
        let j = j % n + 1;
        let mono = Monomial { sign: 1, mask: mask & ((1 << n) - 1) };
        let x = mono.matrix(&g).unwrap();
        let lhs = x.mul(g.gen(j)).unwrap();
        let rhs = g.gen(j).mul(&x).unwrap();
        let expected = if mono.conjugation_sign(j) > 0 { rhs } else { rhs.neg() };
        prop_assert_eq!(lhs, expected);
    }

    #[test]
    fn monomial_product_matches_matrices(m in 1usize..=3, a in any::<u32>(), b in any::<u32>()) {
        let g = build_brauer_weyl(m).unwrap();
        let full = (1u32 << g.len()) - 1;
        let squares = g.squares.clone();
        let (x, y) = (Monomial { sign: 1, mask: a & full }, Monomial { sign: -1, mask: b & full });
        let product = x.mul(y, &squares);
        prop_assert_eq!(product.matrix(&g).unwrap(), x.matrix(&g).unwrap().mul(&y.matrix(&g).unwrap()).unwrap());
    }

    #[test]
    fn monomial_tokens_round_trip(m in 1usize..=6, mask in any::<u32>(), neg in any::<bool>()) {
        let x = Monomial { sign: if neg { -1 } else { 1 }, mask: mask & ((1u32 << (2 * m)) - 1) };
        prop_assert_eq!(parse_monomial(&format_monomial(x, m), m).unwrap(), x);
    }
}
