mod common;

use common::rational;
use critloc::exactmath::Rational;
use critloc::genus2::{involution_apply, CurveParams, PhasePoint};
use critloc::kummer::*;
use proptest::prelude::*;

fn curve() -> impl Strategy<Value = CurveParams> {
    (rational(), rational(), rational()).prop_filter_map("admissible", |(r, s, t)| CurveParams::new(r, s, t).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eval_even_in_each_flip_pair(c in curve(), u in prop::array::uniform3(rational())) {
        let base = kummer_eval(&c, &u).unwrap();
        let [a, b, d] = u.clone();
        for flipped in [[a.clone(), -b.clone(), -d.clone()], [-a.clone(), -b.clone(), d.clone()], [-a, b, -d]] {
            prop_assert_eq!(kummer_eval(&c, &flipped).unwrap(), base.clone());
        }
    }

    #[test]
    fn eval_invariant_under_involution_u_part(c in curve(), u in prop::array::uniform3(rational())) {
        let z = Rational::zero();
        let p = PhasePoint::new(u.clone(), [z.clone(), z.clone(), z]);
        let q = involution_apply(&p);
        prop_assert_eq!(kummer_eval(&c, &q.u).unwrap(), kummer_eval(&c, &u).unwrap());
    }

    #[test]
    fn discriminant_nonzero_for_admissible(c in curve()) {
        let d = c2_discriminant_identity();
        let vals = std::collections::HashMap::from([
            (critloc::exactmath::sym("s"), c.s.clone()),
            (critloc::exactmath::sym("t"), c.t.clone()),
        ]);
        prop_assert!(!d.lhs.eval(&vals).unwrap().is_zero());
        let q = c2_fiber_quartic(&c.s, &c.t);
        prop_assert_eq!(&q[0], &q[4]);
        prop_assert!(q[1].is_zero() && q[3].is_zero());
    }

    #[test]
    fn pencil_reconstructs_at_any_r(c in curve(), u in prop::array::uniform3(rational())) {
        let rep = pencil_check();
        let mut vals = c.assignment();
        for (n, v) in ["u0", "u1", "u2"].iter().zip(&u) {
            vals.insert(critloc::exactmath::sym(n), v.clone());
        }
        let q0 = rep.q0.eval(&vals).unwrap();
        let q1 = rep.q1.eval(&vals).unwrap();
        prop_assert_eq!(&q0 + &(&c.r * &q1), kummer_eval(&c, &u).unwrap());
    }
}

#[test]
fn node_count_never_exceeds_sixteen() {
    for (r, s, t) in [(2, 3, 5), (7, 11, 13), (-3, 4, 9)] {
        let c = CurveParams::from_i64(r, s, t).unwrap();
        let nodes = kummer_singular_search(&c, &NodeSearchOptions { seeds: 150, ..Default::default() }).unwrap();
        assert!(nodes.len() <= 16);
    }
}
