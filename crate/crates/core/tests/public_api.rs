use proptest::prelude::*;
use torus_hilbert::arith::sigma;
use torus_hilbert::closed_forms::{build_c, build_p};
use torus_hilbert::special_values::{a_d_closed, section_direct, section_formula};
use torus_hilbert::zeta::{build_local_zeta, functional_equation_check};
use torus_hilbert::{Int, LaurentPoly, Root};

fn q_minus_one_squared() -> LaurentPoly {
    LaurentPoly::from_dense(0, vec![Int::from(1), Int::from(-2), Int::from(1)])
}

#[test]
fn small_polynomials() {
    assert_eq!(build_c(1).to_string(), "q^2 - 2q + 1");
    assert_eq!(build_p(3).to_string(), "q^4 + q^3 + q + 1");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn p_is_c_over_q_minus_one_squared(n in 1u64..400) {
        let p = build_c(n).div_exact(&q_minus_one_squared());
        prop_assert_eq!(p, Some(build_p(n)));
    }

    #[test]
    fn p_at_one_is_sigma(n in 1u64..400) {
        let one = Int::from(1);
        prop_assert_eq!(build_p(n).eval_int(&one).unwrap(), Int::from(sigma(n)));
        prop_assert_eq!(section_formula(n, 1).unwrap(), sigma(n));
    }

    #[test]
    fn sections_agree(n in 1u64..400, k in prop::sample::select(vec![1u64, 2, 3, 4, 6])) {
        prop_assert_eq!(section_formula(n, k).unwrap(), section_direct(n, k));
    }

    #[test]
    fn a_2_matches_signed_evaluation_at_minus_one(n in 1u64..400) {
        let v = build_c(n).eval_int(&Int::from(-1)).unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(v, Int::from(sign * a_d_closed(n, Root::Two).unwrap()));
    }

    #[test]
    fn zeta_is_balanced(n in 1u64..400) {
        prop_assert_eq!(build_local_zeta(n).exponent_sum(), 0);
        prop_assert!(functional_equation_check(n).is_ok_and(|c| c.holds()));
    }
}
