use super::{TotalDecider, Verdict};
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest word length accepted by [`differences`].
pub const DIFF_BOUND_CAP: usize = 20;

/// Difference sets of two promise problems restricted to `Σ^{≤bound}`,
/// each in shortlex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Differences {
    /// `A ▲ B`: words on which the two problems commit to opposite answers.
    pub conflict: Vec<Word>,
    /// `A \ B`: A commits and B does not commit to the same answer.
    pub a_minus_b: Vec<Word>,
    pub b_minus_a: Vec<Word>,
    /// `A △ B = (A \ B) ∪ (B \ A)`.
    pub symmetric: Vec<Word>,
}

fn minus(a: Verdict, b: Verdict) -> bool {
    a.is_promised() && a != b
}

pub fn differences(a: &TotalDecider, b: &TotalDecider, bound: usize) -> Result<Differences> {
    if bound > DIFF_BOUND_CAP {
        return Err(Error::DimensionCap {
            what: "difference bound",
            requested: bound,
            cap: DIFF_BOUND_CAP,
        });
    }
    let mut d = Differences::default();
    for x in Word::all_up_to(bound) {
        let (va, vb) = (a.classify(&x)?, b.classify(&x)?);
        if va.is_promised() && vb.is_promised() && va != vb {
            d.conflict.push(x.clone());
        }
        let (ab, ba) = (minus(va, vb), minus(vb, va));
        if ab {
            d.a_minus_b.push(x.clone());
        }
        if ba {
            d.b_minus_a.push(x.clone());
        }
        if ab || ba {
            d.symmetric.push(x);
        }
    }
    Ok(d)
}

/// `A ⊕ A′`: `0x` is routed to `A`, `1x` to `A′`; `ε` is outside the promise.
pub fn marked_union(a: &TotalDecider, a2: &TotalDecider) -> TotalDecider {
    let (a, a2) = (a.clone(), a2.clone());
    let name = format!("{}⊕{}", a.name(), a2.name());
    TotalDecider::builtin(name, move |x| match x.split_first() {
        None => Ok(Verdict::OutsidePromise),
        Some((false, rest)) => a.classify(&rest),
        Some((true, rest)) => a2.classify(&rest),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::promise::registry::{builtin, parity};

    #[test]
    fn reflexive_differences_are_empty() {
        let p = parity();
        assert_eq!(differences(&p, &p, 6).unwrap(), Differences::default());
    }

    #[test]
    fn decision_problems_collapse_all_notions() {
        let (p, e) = (parity(), builtin("even-length").unwrap());
        let d = differences(&p, &e, 6).unwrap();
        assert_eq!(d.conflict, d.a_minus_b);
        assert_eq!(d.conflict, d.b_minus_a);
        assert_eq!(d.conflict, d.symmetric);
        assert!(!d.conflict.is_empty());
    }

    #[test]
    fn const_no_against_parity() {
        let d = differences(&TotalDecider::constant(Verdict::No), &parity(), 5).unwrap();
        let odd: Vec<Word> = Word::all_up_to(5).filter(|w| w.count_ones() % 2 == 1).collect();
        assert_eq!(d.conflict, odd);
        assert!(d.conflict.iter().all(|w| d.symmetric.contains(w)));
    }

    #[test]
    fn outside_answers_enter_only_one_direction() {
        let out = TotalDecider::constant(Verdict::OutsidePromise);
        let d = differences(&parity(), &out, 3).unwrap();
        assert!(d.conflict.is_empty());
        assert_eq!(d.a_minus_b.len(), 15);
        assert!(d.b_minus_a.is_empty());
    }

    #[test]
    fn marked_union_routes() {
        let u = marked_union(&parity(), &TotalDecider::constant(Verdict::Yes));
        assert_eq!(u.classify(&Word::empty()).unwrap(), Verdict::OutsidePromise);
        assert_eq!(u.classify(&Word::from("01")).unwrap(), Verdict::Yes);
        assert_eq!(u.classify(&Word::from("011")).unwrap(), Verdict::No);
        assert_eq!(u.classify(&Word::from("100")).unwrap(), Verdict::Yes);
        assert!(differences(&u, &u, 30).is_err());
    }
}
