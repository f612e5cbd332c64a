//! Closures under the crossing operators, closed elements and their
//! canonical representatives.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::multisegment::{connected, Multisegment};
use crate::segment::Segment;

/// The closure of a single seed at a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSet {
    pub rank: u32,
    pub seed: Multisegment,
    /// All members, sorted lexicographically on part sequences.
    pub members: Vec<Multisegment>,
    /// Members with no connected pair of parts, in member order.
    pub closed_members: Vec<Multisegment>,
    /// `sort_plus` forms of the closed members, deduplicated and sorted.
    pub orbit_representatives: Vec<Multisegment>,
}

impl ClosureSet {
    pub fn contains(&self, ms: &Multisegment) -> bool {
        self.members.binary_search(ms).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Breadth-first saturation of `{ms}` under every nonzero `tau_{m,l}` and
/// under transposing two parts with equal right endpoints.
pub fn closure(ms: &Multisegment, rank: u32) -> Result<ClosureSet> {
    ms.check(rank)?;
    let (lo, hi) = ms.bounding_box();
    let r = ms.len();

    let mut seen: BTreeSet<Multisegment> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(ms.clone());
    queue.push_back(ms.clone());

    let visit = |t: Multisegment, seen: &mut BTreeSet<Multisegment>, queue: &mut VecDeque<_>| {
        if let Some(bad) = t.parts().iter().find(|s| s.left() < lo || s.right() > hi) {
            return Err(Error::Internal(format!(
                "closure of {ms} produced {bad} outside the seed box [{lo},{hi}]"
            )));
        }
        if seen.insert(t.clone()) {
            queue.push_back(t);
        }
        Ok(())
    };

    while let Some(cur) = queue.pop_front() {
        let parts = cur.parts();
        for a in 0..r {
            for b in a + 1..r {
                if let Some(t) = cur.tau0(a, b, rank) {
                    visit(t, &mut seen, &mut queue)?;
                }
                if parts[a].right() == parts[b].right() && parts[a] != parts[b] {
                    visit(cur.swap(a + 1, b + 1)?, &mut seen, &mut queue)?;
                }
            }
        }
    }

    let members: Vec<Multisegment> = seen.into_iter().collect();
    let closed_members: Vec<Multisegment> = members
        .iter()
        .filter(|t| is_closed(t, rank))
        .cloned()
        .collect();
    let orbit_representatives: Vec<Multisegment> = closed_members
        .iter()
        .map(Multisegment::orbit_canonical)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(ClosureSet {
        rank,
        seed: ms.clone(),
        members,
        closed_members,
        orbit_representatives,
    })
}

/// No two parts are connected.
pub fn is_closed(ms: &Multisegment, rank: u32) -> bool {
    let p = ms.parts();
    (0..p.len()).all(|a| (a + 1..p.len()).all(|b| !connected(p[a], p[b], rank)))
}

/// One `sort_plus` representative per permutation orbit of closed members.
pub fn closed_elements(ms: &Multisegment, rank: u32) -> Result<Vec<Multisegment>> {
    Ok(closure(ms, rank)?.orbit_representatives)
}

fn check_rank_covers(ms: &Multisegment, rank: u32) -> Result<()> {
    if ms.span() > i64::from(rank) {
        return Err(Error::PreconditionViolated(format!(
            "rank {rank} is below the span {} of {ms}",
            ms.span()
        )));
    }
    Ok(())
}

/// The closed member built by the greedy permutation: for `p = r` down to
/// `1`, give position `p` the unused left endpoint of smallest index that
/// does not exceed `j_p`.
///
/// Requires a doubly sorted tuple and `rank >= span`.
pub fn canonical_closed(ms: &Multisegment, rank: u32) -> Result<Multisegment> {
    ms.check(rank)?;
    if !ms.is_doubly_sorted() {
        return Err(Error::PreconditionViolated(format!(
            "{ms} is not doubly sorted"
        )));
    }
    check_rank_covers(ms, rank)?;
    let p = ms.parts();
    let r = p.len();
    let mut used = vec![false; r];
    let mut out = vec![Segment { i: 0, j: 0 }; r];
    for pos in (0..r).rev() {
        let jp = p[pos].right();
        // indices pos..r all have i <= j_pos and only r - pos - 1 are taken
        let s = (0..r)
            .find(|&s| !used[s] && p[s].left() <= jp)
            .ok_or_else(|| Error::Internal(format!("no admissible left endpoint for {ms}")))?;
        used[s] = true;
        out[pos] = Segment {
            i: p[s].left(),
            j: jp,
        };
    }
    Ok(Multisegment::from_parts_unchecked(out))
}

/// A tuple with the same right endpoints, left endpoints sorted weakly
/// decreasing, whose closure contains `ms`.
///
/// Requires `ms` plus-ordered and `rank >= span`.
pub fn dominant_ancestor(ms: &Multisegment, rank: u32) -> Result<Multisegment> {
    ms.check(rank)?;
    if !ms.is_plus_ordered() {
        return Err(Error::PreconditionViolated(format!(
            "{ms} does not have weakly decreasing right endpoints"
        )));
    }
    check_rank_covers(ms, rank)?;
    Ok(Multisegment::from_parts_unchecked(ancestor(ms.parts())))
}

fn ancestor(parts: &[Segment]) -> Vec<Segment> {
    let r = parts.len();
    if r == 1 {
        return parts.to_vec();
    }
    let mut head = ancestor(&parts[..r - 1]);
    let last = parts[r - 1];
    if head.iter().all(|s| last.left() <= s.left()) {
        head.push(last);
        return head;
    }
    // Exchange the left endpoints of the last two parts; the original tuple
    // is recovered from this one by a swap (equal j) or a tau.
    let prev = head[r - 2];
    head[r - 2] = Segment {
        i: last.left(),
        j: prev.right(),
    };
    let mut out = ancestor(&head);
    out.push(Segment {
        i: prev.left(),
        j: last.right(),
    });
    out
}
