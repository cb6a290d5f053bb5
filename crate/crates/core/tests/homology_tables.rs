mod common;

use bouquet::homology::{
    bouquet, smith_normal_form, table_set, Coefficients, FgAbelianGroup, HomologyTable, IntMatrix, Parameters, Space,
};
use common::{determinantal_divisor, rational_rank};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let sparse = rng.gen_bool(0.3);
    (0..r)
        .map(|_| (0..c).map(|_| if sparse && rng.gen_bool(0.6) { 0 } else { rng.gen_range(-20..=20) }).collect())
        .collect()
}

#[test]
fn smith_normal_form_against_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let rows = random_matrix(&mut rng);
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d, "{rows:?}");
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one());
        let diag = s.d.diagonal();
        assert!(diag.iter().all(|x| !x.is_negative()));
        let f = s.invariant_factors();
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])), "{f:?}");
        assert_eq!(s.rank(), rational_rank(&rows));
        // d_1 ⋯ d_k equals the gcd of the k × k minors
        let mut prod = BigInt::one();
        for (k, d) in f.iter().enumerate() {
            prod *= d;
            assert_eq!(prod, determinantal_divisor(&rows, k + 1), "{rows:?}");
        }
        if f.len() < rows.len().min(rows[0].len()) {
            assert!(determinantal_divisor(&rows, f.len() + 1).is_zero());
        }
    }
}

fn cyclic_orders() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..=36, 0..6)
}

proptest! {
    #[test]
    fn group_normalization(rank in 0u64..4, orders in cyclic_orders()) {
        let g = FgAbelianGroup::new(rank, &orders);
        prop_assert!(g.torsion.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert!(g.torsion.iter().all(|&d| d >= 2));
        let zeros = orders.iter().filter(|&&d| d == 0).count() as u64;
        prop_assert_eq!(g.rank, rank + zeros);
        let order: u64 = orders.iter().filter(|&&d| d > 0).product();
        prop_assert_eq!(g.torsion.iter().product::<u64>(), order);
        // dim G ⊗ Z/2 counts the even cyclic summands of any decomposition
        let even = orders.iter().filter(|&&d| d % 2 == 0).count() as u64;
        prop_assert_eq!(g.tensor_z2_dim(), rank + even);
    }

    #[test]
    fn direct_sum_is_commutative_and_associative(a in cyclic_orders(), b in cyclic_orders(), c in cyclic_orders()) {
        let (x, y, z) = (FgAbelianGroup::new(1, &a), FgAbelianGroup::new(0, &b), FgAbelianGroup::new(2, &c));
        prop_assert_eq!(x.direct_sum(&y), y.direct_sum(&x));
        prop_assert_eq!(x.direct_sum(&y).direct_sum(&z), x.direct_sum(&y.direct_sum(&z)));
        let mut all = a.clone();
        all.extend(&b);
        prop_assert_eq!(x.direct_sum(&y), FgAbelianGroup::new(1, &all));
    }

    #[test]
    fn universal_coefficients_keep_euler_characteristic(
        groups in prop::collection::vec((0u64..4, prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 6]), 0..3)), 1..7)
    ) {
        let top = groups.len();
        let mut t = HomologyTable::new(Space::X, Coefficients::Integral, top);
        for (d, (r, tors)) in groups.iter().enumerate() {
            t.add(d, FgAbelianGroup::new(*r, tors)).unwrap();
        }
        let m = t.universal_coefficients_mod2().unwrap();
        prop_assert_eq!(m.euler(), t.euler());
    }

    #[test]
    fn admissible_parameters_build_and_pass(mu0 in 0u64..4, mu1 in 0u64..7, a in 0u64..5, corank in 0usize..4, a1 in 0u64..3, n in 5usize..10) {
        prop_assume!(corank <= n - 3);
        let p = Parameters { mu0, mu1, a, corank, a1, n };
        let (m1, ai, m0) = (mu1 as i64, a as i64, mu0 as i64);
        let e = i64::from(corank == 2);
        let admissible = match corank {
            0 | 1 => a == 0,
            _ => a >= 1 && ai <= m1 && m1 - 2 * ai + 1 >= 0 && 2 * m1 - 3 * ai + 1 >= 0 && m0 + 2 * m1 - 4 * ai + 1 + e >= 0,
        };
        match table_set(p) {
            Ok(set) => {
                prop_assert!(admissible, "{p:?} accepted");
                prop_assert!(set.all_pass(), "{:?}", set.checks);
                let b = bouquet(&set.fibre).unwrap();
                let rank_sum: u64 = set.fibre.nontrivial().filter(|(d, _)| *d > 0).map(|(_, g)| g.rank).sum();
                prop_assert_eq!(b.sphere_count(), rank_sum);
            }
            Err(_) => prop_assert!(!admissible, "{p:?} rejected"),
        }
    }
}
