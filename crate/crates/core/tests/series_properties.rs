//! Property tests for the series kernel: ring laws, the Leibniz rule for
//! the charge-aware derivative, commuting partials, and window soundness
//! across truncation orders.

use std::sync::Arc;

use proptest::prelude::*;

use gwv_core::rat;
use gwv_core::series::{Monomial, TruncatedSeries, VarShape};

const N_T: usize = 3;
const N_Q: usize = 1;

fn shape(trunc_t: i64) -> Arc<VarShape> {
    // t2 carries charge 1 in the single Novikov variable.
    Arc::new(VarShape::new(
        N_T,
        N_Q,
        trunc_t,
        3,
        vec![vec![0], vec![1], vec![0]],
    ))
}

fn arb_series(trunc_t: i64) -> impl Strategy<Value = TruncatedSeries> {
    let term = (
        proptest::collection::vec(0u16..3, N_T),
        0u16..3,
        -6i64..7,
        1i64..5,
    );
    proptest::collection::vec(term, 0..8).prop_map(move |terms| {
        let sh = shape(trunc_t);
        TruncatedSeries::from_terms(
            sh.clone(),
            terms.into_iter().map(|(t, q, num, den)| {
                (
                    Monomial {
                        t: t.into_iter().collect(),
                        q: smallvec::smallvec![q],
                    },
                    rat::frac(num, den),
                )
            }),
        )
    })
}

fn assert_equal_on_window(a: &TruncatedSeries, b: &TruncatedSeries) {
    let window = a.valid_t().min(b.valid_t());
    let diff = a.sub(b);
    for (m, c) in diff.iter() {
        assert!(
            m.t_degree() > window || num::Zero::is_zero(c),
            "difference at {} = {}",
            m.render(),
            rat::render(c)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
        assert_equal_on_window(&a.add(&b), &b.add(&a));
        assert_equal_on_window(&a.mul(&b), &b.mul(&a));
        assert_equal_on_window(&a.add(&b).add(&c), &a.add(&b.add(&c)));
        assert_equal_on_window(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)));
        assert_equal_on_window(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn leibniz_rule(a in arb_series(6), b in arb_series(6), alpha in 0usize..N_T) {
        let lhs = a.mul(&b).deriv(alpha);
        let rhs = a.deriv(alpha).mul(&b).add(&a.mul(&b.deriv(alpha)));
        assert_equal_on_window(&lhs, &rhs);
    }

    #[test]
    fn partials_commute(a in arb_series(6), alpha in 0usize..N_T, beta in 0usize..N_T) {
        let ab = a.deriv(alpha).deriv(beta);
        let ba = a.deriv(beta).deriv(alpha);
        assert_equal_on_window(&ab, &ba);
    }

    #[test]
    fn windows_are_sound(a in arb_series(5), b in arb_series(5)) {
        // The same computation at a higher truncation order agrees with the
        // low-order result on the low order's validity window.
        let promote = |s: &TruncatedSeries| {
            TruncatedSeries::from_terms(
                shape(9),
                s.iter().map(|(m, c)| (m.clone(), c.clone())),
            )
        };
        let lo = a.mul(&b).deriv(1).mul(&a).deriv(0);
        let hi = promote(&a).mul(&promote(&b)).deriv(1).mul(&promote(&a)).deriv(0);
        for (m, c) in hi.iter() {
            if m.t_degree() <= lo.valid_t() {
                prop_assert_eq!(lo.coeff(m), c.clone(), "at {}", m.render());
            }
        }
        // Nothing valid may be missing from the low-order result either.
        for (m, c) in lo.iter() {
            if m.t_degree() <= lo.valid_t() {
                prop_assert_eq!(hi.coeff(m), c.clone(), "at {}", m.render());
            }
        }
    }
}
