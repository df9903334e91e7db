use proptest::prelude::*;

use lsa_core::algebra::{algebra_from_json, algebra_to_json};
use lsa_core::classification::catalog::{self, Params, ENTRIES};
use lsa_core::classification::iso_family5;
use lsa_core::completeness::is_complete;
use lsa_core::field::{Matrix, Qi};
use lsa_core::Algebra;

fn q(n: i64) -> Qi {
    Qi::int(n)
}

fn entry(i: usize) -> Algebra<Qi> {
    catalog::catalog(ENTRIES[i % ENTRIES.len()].name, &Params::new()).unwrap()
}

/// Unipotent upper times lower triangular, so always invertible.
fn basis_change(n: usize, upper: &[i64], lower: &[i64]) -> Matrix<Qi> {
    let u = Matrix::from_fn(n, n, |i, j| if i == j { q(1) } else if i < j { q(upper[(i * n + j) % upper.len()]) } else { q(0) });
    let l = Matrix::from_fn(n, n, |i, j| if i == j { q(1) } else if i > j { q(lower[(i * n + j) % lower.len()]) } else { q(0) });
    &u * &l
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn json_round_trip(i in 0usize..64) {
        let a = entry(i);
        let text = algebra_to_json(&a);
        let b: Algebra<Qi> = algebra_from_json(&text).unwrap();
        prop_assert_eq!(algebra_to_json(&b), text);
    }

    #[test]
    fn basis_change_preserves_structure(
        i in 0usize..64,
        upper in prop::collection::vec(-2i64..=2, 1..8),
        lower in prop::collection::vec(-2i64..=2, 1..8),
    ) {
        let a = entry(i);
        let n = a.dim();
        prop_assume!(n > 0 && n <= 4);
        let p = basis_change(n, &upper, &lower);
        let b = a.change_basis(&p, a.basis().to_vec()).unwrap();
        prop_assert!(b.is_isomorphism(&a, &p));
        prop_assert_eq!(a.is_left_symmetric(), b.is_left_symmetric());
        if a.is_left_symmetric() {
            prop_assert_eq!(is_complete(&a).unwrap().verdict, is_complete(&b).unwrap().verdict);
        }
    }

    #[test]
    fn iso_family5_is_symmetric(a in -3i64..=3, b in -3i64..=3, s in prop_oneof![Just(-2i64), Just(-1), Just(1), Just(3)]) {
        // 2 alpha = beta + gamma
        let t = [q(a), q(b), q(2 * a - b)];
        let u = [q(s * a), q(s * b), q(s * (2 * a - b))];
        let w = [q(b), q(a), q(2 * b - a)];
        prop_assert!(iso_family5(&t, &u).unwrap());
        prop_assert_eq!(iso_family5(&t, &w).unwrap(), iso_family5(&w, &t).unwrap());
    }
}
