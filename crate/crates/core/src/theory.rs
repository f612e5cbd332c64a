//! Decision procedures on Weyl modules, all reduced to closure computations.

use std::collections::BTreeSet;

use crate::closure::{closed_elements, closure, is_closed};
use crate::error::{Error, Result};
use crate::lweight::LWeight;
use crate::multisegment::{connected, Multisegment, Sign};

/// Dominant l-weights of `W(w_ms)`: the weights of the closure members.
pub fn weyl_dominant_weights(ms: &Multisegment, rank: u32) -> Result<BTreeSet<LWeight>> {
    closure(&ms.sort_plus(), rank)?
        .members
        .iter()
        .map(|t| t.weight(rank))
        .collect()
}

/// `dim Hom(W(w_src), W(w_dst))`, which is 0 or 1.
pub fn hom_dim(src: &Multisegment, dst: &Multisegment, rank: u32) -> Result<u32> {
    let w = src.weight(rank)?;
    Ok(u32::from(weyl_dominant_weights(dst, rank)?.contains(&w)))
}

/// One summand of a socle: the simple Weyl module of a closed member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleSummand {
    pub weight: LWeight,
    pub representative: Multisegment,
}

/// The socle of `W(w_ms)`, one multiplicity-free summand per orbit of
/// closed closure members.
pub fn socle(ms: &Multisegment, rank: u32) -> Result<Vec<SocleSummand>> {
    let mut out: Vec<SocleSummand> = Vec::new();
    for rep in closed_elements(ms, rank)? {
        let weight = rep.weight(rank)?;
        if out.iter().any(|s| s.weight == weight) {
            return Err(Error::Internal(format!(
                "two closed orbits of {ms} share the weight {weight}"
            )));
        }
        out.push(SocleSummand {
            weight,
            representative: rep,
        });
    }
    Ok(out)
}

pub fn is_irreducible_weyl(ms: &Multisegment, rank: u32) -> bool {
    is_closed(ms, rank)
}

/// Every connected pair `p < s` has `i_p + j_p >= i_s + j_s`, so the Weyl
/// module is the tensor product of fundamentals in the given order.
pub fn weylpermute_check(ms: &Multisegment, rank: u32) -> bool {
    let p = ms.parts();
    (0..p.len()).all(|a| {
        (a + 1..p.len()).all(|b| !connected(p[a], p[b], rank) || p[a].height() >= p[b].height())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtVerdict {
    /// The closure weight sets are disjoint, so `Ext^0` and `Ext^1` vanish.
    Vanishes,
    /// The sets meet; no conclusion. Carries the smallest shared weight.
    Inconclusive { shared: LWeight },
}

pub fn ext_vanishing(ms1: &Multisegment, ms2: &Multisegment, rank: u32) -> Result<ExtVerdict> {
    let a = weyl_dominant_weights(ms1, rank)?;
    let b = weyl_dominant_weights(ms2, rank)?;
    Ok(match a.intersection(&b).next() {
        Some(w) => ExtVerdict::Inconclusive { shared: w.clone() },
        None => ExtVerdict::Vanishes,
    })
}

/// Whether the dominant weight `w` lies in the submonoid generated by the
/// `w[i_s, j_p]` built from endpoints of `base`.
pub fn subcategory_membership(base: &Multisegment, w: &LWeight, rank: u32) -> Result<bool> {
    if !w.is_dominant() {
        return Err(Error::NotDominant);
    }
    let lefts: BTreeSet<i64> = base.parts().iter().map(|s| s.left()).collect();
    let rights: BTreeSet<i64> = base.parts().iter().map(|s| s.right()).collect();
    let cap = i64::from(rank) + 1;
    Ok(w.support().all(|s| {
        lefts.contains(&s.left()) && rights.contains(&s.right()) && (0..=cap).contains(&s.len())
    }))
}

/// The simple quotient and simple submodule singled out for the ordered
/// tensor product of fundamentals along `ms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedWeylMaps {
    pub head: LWeight,
    pub socle_candidate: LWeight,
    pub plus_form: Multisegment,
    pub minus_form: Multisegment,
}

pub fn mixed_weyl_maps(ms: &Multisegment, rank: u32) -> Result<MixedWeylMaps> {
    ms.check(rank)?;
    let plus_form = ms.normal_form(Sign::Plus, rank);
    let minus_form = ms.normal_form(Sign::Minus, rank);
    Ok(MixedWeylMaps {
        head: plus_form.weight(rank)?,
        socle_candidate: minus_form.weight(rank)?,
        plus_form,
        minus_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segment::Segment;

    fn ms(p: &[(i64, i64)]) -> Multisegment {
        Multisegment::from_pairs(p).unwrap()
    }

    fn weights(v: &[&[(i64, i64)]], rank: u32) -> BTreeSet<LWeight> {
        v.iter().map(|p| ms(p).weight(rank).unwrap()).collect()
    }

    #[test]
    fn dominant_weights_rank_six() {
        let s = ms(&[(0, 6), (2, 7), (1, 8)]);
        assert_eq!(
            weyl_dominant_weights(&s, 6).unwrap(),
            weights(&[&[(0, 6), (2, 7), (1, 8)], &[(2, 6), (0, 7), (1, 8)]], 6)
        );
    }

    #[test]
    fn connected_pair_has_two_dominant_weights() {
        let p = ms(&[(0, 3), (2, 5)]);
        let ws = weyl_dominant_weights(&p, 5).unwrap();
        let crossed = p.tau(1, 2, 5).unwrap().unwrap();
        assert_eq!(
            ws,
            [p.weight(5).unwrap(), crossed.weight(5).unwrap()].into()
        );
    }

    #[test]
    fn closed_tuple_has_one_dominant_weight() {
        let c = ms(&[(2, 6), (0, 7), (1, 8)]);
        assert_eq!(weyl_dominant_weights(&c, 6).unwrap().len(), 1);
    }

    #[test]
    fn hom_examples() {
        let s = ms(&[(0, 6), (2, 7), (1, 8)]);
        assert_eq!(hom_dim(&ms(&[(2, 6), (0, 7), (1, 8)]), &s, 6).unwrap(), 1);
        assert_eq!(hom_dim(&s, &s, 6).unwrap(), 1);
        // [0,8] is not a segment at rank 6
        assert!(matches!(
            hom_dim(&ms(&[(1, 6), (2, 7), (0, 8)]), &s, 6),
            Err(Error::InvalidSegment { .. })
        ));
        assert_eq!(hom_dim(&ms(&[(1, 6), (2, 7), (1, 7)]), &s, 6).unwrap(), 0);
        assert_eq!(hom_dim(&ms(&[(1, 6), (2, 7), (0, 8)]), &s, 7).unwrap(), 1);
    }

    #[test]
    fn socle_examples() {
        let s = socle(&ms(&[(0, 6), (2, 7), (1, 8)]), 6).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(
            s[0].weight,
            ms(&[(2, 6), (0, 7), (1, 8)]).weight(6).unwrap()
        );

        let two = socle(&ms(&[(2, 3), (1, 2), (0, 1)]), 1).unwrap();
        let ws: Vec<String> = two.iter().map(|s| s.weight.to_string()).collect();
        assert_eq!(ws.len(), 2);
        assert!(ws.contains(&"w[0,1]^1".to_string()));
        assert!(ws.contains(&"w[2,3]^1".to_string()));

        let closed = ms(&[(0, 2), (5, 9)]);
        let one = socle(&closed, 8).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].weight, closed.weight(8).unwrap());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_weyl(&ms(&[(2, 6), (0, 7), (1, 8)]), 6));
        assert!(!is_irreducible_weyl(&ms(&[(0, 6), (2, 7), (1, 8)]), 6));
        assert!(is_irreducible_weyl(&ms(&[(0, 4)]), 6));
    }

    #[test]
    fn weylpermute_examples() {
        assert!(weylpermute_check(&ms(&[(3, 4), (2, 9), (0, 5)]), 9));
        assert!(weylpermute_check(&ms(&[(1, 9), (2, 7), (0, 6)]), 9));
        assert!(!weylpermute_check(&ms(&[(0, 6), (2, 7)]), 6));
        assert!(weylpermute_check(&ms(&[(0, 2), (5, 9), (3, 4)]), 9));
    }

    #[test]
    fn ext_examples() {
        let a = ms(&[(0, 2), (1, 3)]);
        let far = ms(&[(20, 22), (21, 23)]);
        assert_eq!(ext_vanishing(&a, &far, 4).unwrap(), ExtVerdict::Vanishes);
        assert!(matches!(
            ext_vanishing(&a, &a, 4).unwrap(),
            ExtVerdict::Inconclusive { .. }
        ));
        let s = ms(&[(0, 6), (2, 7), (1, 8)]);
        let t = ms(&[(2, 6), (0, 7), (1, 8)]);
        assert_eq!(
            ext_vanishing(&s, &t, 6).unwrap(),
            ExtVerdict::Inconclusive {
                shared: t.weight(6).unwrap()
            }
        );
    }

    #[test]
    fn subcategory_examples() {
        let base = ms(&[(0, 3), (2, 5)]);
        assert!(subcategory_membership(&base, &base.weight(6).unwrap(), 6).unwrap());
        let cross = LWeight::of_segment(Segment::new(2, 3).unwrap(), 6).unwrap();
        assert!(subcategory_membership(&base, &cross, 6).unwrap());
        let outside = LWeight::of_segment(Segment::new(1, 3).unwrap(), 6).unwrap();
        assert!(!subcategory_membership(&base, &outside, 6).unwrap());
        assert_eq!(
            subcategory_membership(&base, &cross.inv(), 6),
            Err(Error::NotDominant)
        );
    }

    #[test]
    fn mixed_maps_example() {
        let s = ms(&[(0, 6), (4, 8), (2, 5)]);
        let m = mixed_weyl_maps(&s, 8).unwrap();
        assert_eq!(m.head, ms(&[(0, 8), (4, 6), (2, 5)]).weight(8).unwrap());
        assert_eq!(
            m.socle_candidate,
            ms(&[(4, 5), (0, 6), (2, 8)]).weight(8).unwrap()
        );
        let single = ms(&[(1, 4)]);
        let m1 = mixed_weyl_maps(&single, 5).unwrap();
        assert_eq!(m1.head, single.weight(5).unwrap());
        assert_eq!(m1.socle_candidate, m1.head);
        let closed = ms(&[(5, 9), (3, 4), (0, 2)]);
        let mc = mixed_weyl_maps(&closed, 9).unwrap();
        assert_eq!(mc.head, closed.weight(9).unwrap());
        assert_eq!(mc.socle_candidate, mc.head);
    }
}
