//! Randomized property tests for the exact arithmetic layers.

use proptest::prelude::*;

use contracta_core::eps::Eps;
use contracta_core::jet::Jet2;
use contracta_core::liealg::{e2c, o3c};
use contracta_core::matrix::{symmetrizer3, Matrix};
use contracta_core::poly::MPoly;
use contracta_core::ring::{Field, Ring};
use contracta_core::scalar::Scalar;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9)
        .prop_map(|(p, q, r, s)| Scalar::from_parts(p, q, r, s))
}

fn poly_strategy() -> impl Strategy<Value = MPoly<Scalar>> {
    proptest::collection::vec((0u32..=2, 0u32..=2, -5i64..=5), 1..5).prop_map(|terms| {
        let x = MPoly::<Scalar>::var("x");
        let y = MPoly::<Scalar>::var("y");
        let mut p = MPoly::int(0);
        for (i, j, c) in terms {
            p = p.add(&x.pow(i).mul(&y.pow(j)).scale(&Scalar::from_int(c)));
        }
        p
    })
}

fn eps_poly_strategy() -> impl Strategy<Value = Eps> {
    proptest::collection::vec((0i64..=3, -5i64..=5), 1..4).prop_map(|terms| {
        let mut e = Eps::from_int(0);
        for (k, c) in terms {
            e = e.add(&Eps::monomial(k, Scalar::from_int(c)));
        }
        e
    })
}

fn matrix_strategy() -> impl Strategy<Value = Matrix<Scalar>> {
    proptest::collection::vec(-5i64..=5, 4).prop_map(|v| {
        Matrix::from_fn(2, 2, |i, j| Scalar::from_int(v[2 * i + j]))
    })
}

proptest! {
    #[test]
    fn scalars_form_a_field(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.neg()), Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv()), Scalar::one());
        }
    }

    #[test]
    fn laurent_limits_are_multiplicative(a in eps_poly_strategy(), b in eps_poly_strategy()) {
        // Both factors are polynomial in the parameter, so each limit exists
        // and the limit of the product is the product of the limits.
        let la = a.eps_limit().unwrap();
        let lb = b.eps_limit().unwrap();
        prop_assert_eq!(a.mul(&b).eps_limit().unwrap(), la.mul(&lb));
    }

    #[test]
    fn jets_respect_polynomial_products(p in poly_strategy(), q in poly_strategy()) {
        let base = (Scalar::from_ratio(1, 2), Scalar::from_ratio(-1, 3));
        let names = ("x", "y");
        let jp = Jet2::from_poly(&p, names, base.clone(), 4);
        let jq = Jet2::from_poly(&q, names, base.clone(), 4);
        let jpq = Jet2::from_poly(&p.mul(&q), names, base, 4);
        prop_assert_eq!(jp.mul(&jq), jpq);
    }

    #[test]
    fn jet_partials_satisfy_the_product_rule(p in poly_strategy(), q in poly_strategy()) {
        let base = (Scalar::from_ratio(2, 5), Scalar::from_ratio(1, 7));
        let names = ("x", "y");
        let jp = Jet2::from_poly(&p, names, base.clone(), 3);
        let jq = Jet2::from_poly(&q, names, base, 3);
        for axis in 0..2 {
            let lhs = jp.mul(&jq).partial(axis);
            let rhs = jp.partial(axis).mul(&jq.truncate(2)).add(&jp.truncate(2).mul(&jq.partial(axis)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn symmetrizer_is_permutation_invariant(a in matrix_strategy(), b in matrix_strategy(), c in matrix_strategy()) {
        let s = symmetrizer3(&a, &b, &c);
        prop_assert!(s.sub(&symmetrizer3(&b, &a, &c)).is_zero());
        prop_assert!(s.sub(&symmetrizer3(&c, &b, &a)).is_zero());
        prop_assert!(s.sub(&symmetrizer3(&b, &c, &a)).is_zero());
    }

    #[test]
    fn lie_brackets_satisfy_jacobi_on_random_vectors(
        u in proptest::collection::vec(-5i64..=5, 3),
        v in proptest::collection::vec(-5i64..=5, 3),
        w in proptest::collection::vec(-5i64..=5, 3),
    ) {
        let us: Vec<Scalar> = u.iter().map(|n| Scalar::from_int(*n)).collect();
        let vs: Vec<Scalar> = v.iter().map(|n| Scalar::from_int(*n)).collect();
        let ws: Vec<Scalar> = w.iter().map(|n| Scalar::from_int(*n)).collect();
        for alg in [e2c(), o3c()] {
            let t1 = alg.bracket(&alg.bracket(&us, &vs).unwrap(), &ws).unwrap();
            let t2 = alg.bracket(&alg.bracket(&vs, &ws).unwrap(), &us).unwrap();
            let t3 = alg.bracket(&alg.bracket(&ws, &us).unwrap(), &vs).unwrap();
            for k in 0..3 {
                prop_assert!(t1[k].add(&t2[k]).add(&t3[k]).is_zero());
            }
        }
    }
}
