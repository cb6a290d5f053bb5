use std::sync::{Arc, OnceLock};

use bouquet::poly::{parse_polynomial, Monomial, PolyMatrix, Polynomial};
use bouquet::ring::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn ring() -> &'static Arc<Ring> {
    static R: OnceLock<Arc<Ring>> = OnceLock::new();
    R.get_or_init(|| Ring::new(&["x", "y", "z"]).unwrap())
}

fn term() -> impl Strategy<Value = (Vec<u32>, i64, i64)> {
    (prop::collection::vec(0u32..4, 3), -9i64..=9, 1i64..=3)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    polynomial_with(5)
}

fn polynomial_with(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(term(), 0..max_terms).prop_map(|ts| {
        let terms = ts
            .into_iter()
            .map(|(e, p, q)| (Monomial::from_exponents(e), BigRational::new(BigInt::from(p), BigInt::from(q))));
        Polynomial::from_terms(ring(), terms.collect::<Vec<_>>())
    })
}

/// Evaluation at an integer point, computed term by term.
fn eval(p: &Polynomial, pt: &[i64]) -> BigRational {
    let mut acc = BigRational::from_integer(0.into());
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (&e, &x) in m.exponents().iter().zip(pt) {
            v *= BigRational::from_integer(BigInt::from(x).pow(e));
        }
        acc += v;
    }
    acc
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(ring()), a.clone());
        prop_assert_eq!(&a + &(-&b), &a - &b);
    }

    #[test]
    fn products_evaluate_pointwise(a in polynomial(), b in polynomial(), pt in prop::collection::vec(-3i64..=3, 3)) {
        prop_assert_eq!(eval(&(&a * &b), &pt), eval(&a, &pt) * eval(&b, &pt));
        prop_assert_eq!(eval(&(&a + &b), &pt), eval(&a, &pt) + eval(&b, &pt));
    }

    #[test]
    fn display_parses_back(a in polynomial()) {
        let text = a.to_string();
        prop_assert_eq!(parse_polynomial(&text, ring()).unwrap(), a);
    }

    #[test]
    fn leibniz_rule(a in polynomial(), b in polynomial(), i in 0usize..3) {
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn determinants_agree(entries in prop::collection::vec(polynomial_with(3), 9), other in prop::collection::vec(polynomial_with(3), 9)) {
        let m = PolyMatrix::new(ring(), 3, 3, entries).unwrap();
        let n = PolyMatrix::new(ring(), 3, 3, other).unwrap();
        let d = m.determinant_cofactor().unwrap();
        prop_assert_eq!(&d, &m.determinant_bareiss().unwrap());
        prop_assert_eq!(&d, &m.transpose().determinant().unwrap());
        let prod = m.mul(&n).unwrap().determinant_bareiss().unwrap();
        prop_assert_eq!(prod, &d * &n.determinant_cofactor().unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in polynomial(), b in polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }
}

#[test]
fn five_by_five_determinants_agree() {
    let r = ring();
    let rows: Vec<Vec<Polynomial>> = (0..5)
        .map(|i| {
            (0..5)
                .map(|j| {
                    let s = format!("{}*x^{} + {}*y*z - {}", i + j + 1, (i * j) % 3, (i + 2 * j) % 4, (i * 7 + j) % 5);
                    parse_polynomial(&s, r).unwrap()
                })
                .collect()
        })
        .collect();
    let m = PolyMatrix::from_rows(r, rows).unwrap();
    assert_eq!(m.determinant_cofactor().unwrap(), m.determinant_bareiss().unwrap());
}
