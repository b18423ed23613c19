use std::sync::Arc;

use proptest::prelude::*;

use promisekit::gap::{
    gap_member, interval_index, interval_limits, time_construct_wrap, Affine, MaxOf, Meter,
    SharedCosted,
};
use promisekit::Word;

/// Interval index of `len` by iterating `v ↦ a·v + b` from 0 in plain
/// integer arithmetic.
fn direct_index(a: u64, b: u64, len: u64) -> u64 {
    let (mut v, mut n) = (0u64, 0u64);
    while a * v + b <= len {
        v = a * v + b;
        n += 1;
    }
    n
}

proptest! {
    #[test]
    fn budgeted_membership_matches_iteration(a in 1u64..=4, b in 1u64..=6, bits in prop::collection::vec(any::<bool>(), 0..=80)) {
        let x = Word::from_bits(bits);
        let r = Affine { a, b };
        let n = direct_index(a, b, x.len() as u64);
        prop_assert_eq!(interval_index(&r, x.len() as u64).unwrap(), n);
        prop_assert_eq!(gap_member(&r, &x).unwrap(), n.is_multiple_of(2));
    }

    #[test]
    fn membership_depends_only_on_length(a in 1u64..=3, b in 1u64..=4, len in 0usize..=64, seed in any::<u64>()) {
        let r = Affine { a, b };
        let x = Word::from_bits((0..len).map(|k| (seed >> (k % 64)) & 1 == 1).collect());
        prop_assert_eq!(gap_member(&r, &x).unwrap(), gap_member(&r, &Word::zeros(len)).unwrap());
    }

    #[test]
    fn wrapped_functions_pay_their_value(a in 0u64..=3, b in 0u64..=5, c in 0u64..=3, n in 0u64..=200) {
        let inner: SharedCosted = Arc::new(MaxOf(Arc::new(Affine { a, b }), Arc::new(Affine { a: c, b: 1 })));
        let f = time_construct_wrap(inner.clone());
        let v = f.eval(n).unwrap();
        prop_assert_eq!(v.cost, v.value);
        prop_assert!(v.value > n);
        prop_assert!(v.value >= inner.eval(n).unwrap().value);
        // the cached value is charged again in full
        prop_assert_eq!(f.eval(n).unwrap(), v);
        prop_assert!(f.eval_metered(n, &mut Meter::with_budget(v.value - 1)).is_err());
        prop_assert!(f.eval_metered(n, &mut Meter::with_budget(v.value)).is_ok());
    }

    #[test]
    fn wrapped_limits_partition_lengths(a in 1u64..=3, b in 0u64..=3, len in 0u64..=300) {
        let r = time_construct_wrap(Arc::new(Affine { a, b }));
        let limits = interval_limits(r.as_ref(), len).unwrap();
        let k = limits.windows(2).position(|w| w[0] <= len && len < w[1]).unwrap() as u64;
        prop_assert_eq!(interval_index(r.as_ref(), len).unwrap(), k);
    }
}
