use num_bigint::BigInt;
use num_rational::BigRational;
use pascal_core::io::{matrix_from_json, matrix_to_json};
use pascal_core::{
    binomial, d_matrix, eigenpairs, factorize_q, p1_matrix, q_matrix, verify_factorization,
    z_parameter, Field, FieldElement, Matrix, RationalMatrix, Scalar, SquareMatrix,
};
use proptest::prelude::*;

fn ext_fields() -> Vec<Field> {
    [
        "gf:2^2",
        "gf:2^3",
        "gf:3^2",
        "gf:5^2",
        "gf:2^4:m=1,1,0,0,1",
        "gf:3^3",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

fn element(f: &Field, seed: u64) -> FieldElement {
    f.element_at(seed % f.size().unwrap()).unwrap()
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Convolution followed by long division by the modulus, done on plain
/// integer vectors.
fn convolve_reduce(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut c = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += (*x * *y) as i128;
        }
    }
    for d in (k..c.len()).rev() {
        let lead = c[d];
        for (i, mi) in m.iter().enumerate() {
            c[d - k + i] -= lead * *mi as i128;
        }
    }
    c[..k]
        .iter()
        .map(|v| v.rem_euclid(p as i128) as u64)
        .collect()
}

fn lucas(mut m: u64, mut r: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while m > 0 || r > 0 {
        let (a, b) = (m % p, r % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * (a - i) / (i + 1);
        }
        acc = acc * (c % p) % p;
        m /= p;
        r /= p;
    }
    acc
}

proptest! {
    #[test]
    fn prime_field_matches_integers(p in prop::sample::select(vec![2u64, 3, 5, 7, 13, 101, 65537]),
                                     a in any::<i32>(), b in any::<i32>()) {
        let f = Field::prime(p).unwrap();
        let (x, y) = (f.from_int(a as i64), f.from_int(b as i64));
        let r = |v: i128| v.rem_euclid(p as i128) as u64;
        prop_assert_eq!((&x + &y).as_residue(), Some(r(a as i128 + b as i128)));
        prop_assert_eq!((&x - &y).as_residue(), Some(r(a as i128 - b as i128)));
        prop_assert_eq!((&x * &y).as_residue(), Some(r(a as i128 * b as i128)));
        if !x.is_zero() {
            prop_assert!((x.inv().unwrap() * x.clone()).is_one());
        }
    }

    #[test]
    fn extension_mul_matches_convolution(fi in 0usize..6, s1 in any::<u64>(), s2 in any::<u64>()) {
        let f = &ext_fields()[fi];
        let (a, b) = (element(f, s1), element(f, s2));
        let expected = convolve_reduce(a.coefficients().unwrap(), b.coefficients().unwrap(),
                                       f.modulus().unwrap(), f.characteristic());
        let product = &a * &b;
        prop_assert_eq!(product.coefficients().unwrap(), &expected[..]);
    }

    #[test]
    fn pow_is_additive_in_exponent(fi in 0usize..6, s in any::<u64>(), e1 in -10i64..=10, e2 in -10i64..=10) {
        let f = &ext_fields()[fi];
        let a = element(f, s);
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.pow(e1 + e2).unwrap(), a.pow(e1).unwrap() * a.pow(e2).unwrap());
        prop_assert!((a.inv().unwrap() * a.clone()).is_one());
    }

    #[test]
    fn element_text_round_trip(fi in 0usize..6, s in any::<u64>(), n in -1000i64..1000, d in 1i64..1000) {
        let f = &ext_fields()[fi];
        let a = element(f, s);
        prop_assert_eq!(f.parse_element(&a.to_string()).unwrap(), a);
        let q = Field::rational();
        let r = q.ratio(&BigInt::from(n), &BigInt::from(d)).unwrap();
        prop_assert_eq!(q.parse_element(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn matrix_json_round_trip(fi in 0usize..6, sy in any::<u64>(), sx in any::<u64>(), n in 1usize..6) {
        let f = &ext_fields()[fi];
        let x = element(f, sx);
        prop_assume!(!x.is_zero());
        let m = q_matrix(&element(f, sy), &x, n).unwrap();
        prop_assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn binomial_matches_lucas(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), m in 0u64..=200, r in 0u64..=200) {
        prop_assume!(r <= m);
        let f = Field::prime(p).unwrap();
        let got: FieldElement = binomial(m as usize, r as i64, &f);
        prop_assert_eq!(got.as_residue(), Some(lucas(m, r, p)));
    }

    #[test]
    fn p1_additive_law_over_rationals(a in -20i64..20, b in -20i64..20, d in 1i64..9, n in 1usize..=8) {
        let (ya, yb) = (rational(a, d), rational(b, d + 1));
        let lhs = p1_matrix(&ya, n).unwrap().mul(&p1_matrix(&yb, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, p1_matrix(&(ya + yb), n).unwrap());
    }

    #[test]
    fn factorization_over_small_extensions(fi in 0usize..4, sy in any::<u64>(), sx in any::<u64>(), n in 2usize..=8) {
        let f = &ext_fields()[fi];
        let (y, x) = (element(f, sy), element(f, sx));
        prop_assume!(!x.is_zero() && !x.square().is_one());
        let d = factorize_q(&y, &x, n).unwrap();
        prop_assert!(verify_factorization(&d));
        prop_assert_eq!(z_parameter(&-y.clone(), &x).unwrap(), -d.z.clone());
        let q = q_matrix(&y, &x, n).unwrap();
        let basis = SquareMatrix::from_fn(f.clone(), n, |i, j| eigenpairs(&y, &x, n).unwrap()[j].vector[i].clone());
        prop_assert_eq!(basis.rank(), n);
        for pair in eigenpairs(&y, &x, n).unwrap() {
            let lv: Vec<_> = pair.vector.iter().map(|v| pair.value.clone() * v.clone()).collect();
            prop_assert_eq!(q.mul_vec(&pair.vector).unwrap(), lv);
        }
    }

    #[test]
    fn factorization_over_rationals(yn in -30i64..30, yd in 1i64..10, xn in -30i64..30, xd in 1i64..10, n in 2usize..=6) {
        let (y, x) = (rational(yn, yd), rational(xn, xd));
        prop_assume!(!Scalar::is_zero(&x) && !x.square().is_one());
        let native = factorize_q(&y, &x, n).unwrap();
        prop_assert!(verify_factorization(&native));

        // the runtime-field route must produce the same matrices
        let q = Field::rational();
        let ye = q.ratio(&BigInt::from(yn), &BigInt::from(yd)).unwrap();
        let xe = q.ratio(&BigInt::from(xn), &BigInt::from(xd)).unwrap();
        let runtime = factorize_q(&ye, &xe, n).unwrap();
        prop_assert_eq!(runtime.z.as_rational().unwrap(), &native.z);
        let as_native = |m: &Matrix| -> RationalMatrix {
            SquareMatrix::from_fn(pascal_core::Rationals, m.n(), |i, j| m.get(i, j).as_rational().unwrap().clone())
        };
        prop_assert_eq!(as_native(&runtime.left), native.left.clone());
        prop_assert_eq!(as_native(&runtime.middle), native.middle.clone());
    }

    #[test]
    fn d_matrix_is_multiplicative(a in -9i64..9, b in -9i64..9, m in 0u64..6, n in 1usize..6) {
        let (a, b) = (rational(a, 1), rational(b, 2));
        let lhs = d_matrix(&a, n).unwrap().mul(&d_matrix(&b, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, d_matrix(&(a.clone() * b), n).unwrap());
        prop_assert_eq!(d_matrix(&a, n).unwrap().pow(m), d_matrix(&Scalar::pow(&a, m as i64).unwrap(), n).unwrap());
    }
}

#[test]
fn gf4_modulus_is_the_unique_quadratic() {
    let f: Field = "gf:2^2".parse().unwrap();
    assert_eq!(f.modulus(), Some(&[1u64, 1, 1][..]));
    let f = Field::extension(3, 2, Some(vec![1, 0, 1])).unwrap();
    // t² + 1 has no root mod 3
    for t in 0..3u64 {
        assert_ne!((t * t + 1) % 3, 0);
    }
    assert_eq!(f.to_string(), "gf:3^2:m=1,0,1");
}
