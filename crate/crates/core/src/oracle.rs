//! Brute-force connection oracle.
//!
//! Enumerates chains straight from the definition, level by level: the set of
//! partial sums reachable with exactly `k` admissible steps, for every `k` up
//! to a depth bound. It shares no code with the graph reduction in
//! [`crate::connections`] and is used to cross-check it.

use crate::connections::{Mode, Partition};
use crate::functional::Functional;
use std::collections::{BTreeMap, BTreeSet};

/// Depth that makes the enumeration exhaustive: a shortest chain never
/// revisits a partial sum, and there are at most `|Λ| + |𝒫|` of them.
pub fn default_depth(lambda: &[Functional], weights: &[Functional]) -> usize {
    lambda.len() + weights.len()
}

/// For each start element, the set of elements it is connected to by a chain
/// of at most `max_depth` steps.
pub fn chain_relation(
    lambda: &[Functional],
    weights: &[Functional],
    mode: Mode,
    max_depth: usize,
) -> BTreeMap<Functional, BTreeSet<Functional>> {
    let lambda_set: BTreeSet<&Functional> = lambda.iter().collect();
    let weight_set: BTreeSet<&Functional> = weights.iter().collect();
    let (starts, steps, allowed): (BTreeSet<&Functional>, Vec<&Functional>, BTreeSet<&Functional>) = match mode {
        Mode::Weights => (weight_set.clone(), lambda_set.iter().copied().collect(), weight_set.clone()),
        Mode::Roots => {
            let all: BTreeSet<&Functional> = lambda_set.union(&weight_set).copied().collect();
            (lambda_set.clone(), all.iter().copied().collect(), all)
        }
    };
    let mut out = BTreeMap::new();
    for &start in &starts {
        let mut reached: BTreeSet<Functional> = BTreeSet::from([start.clone()]);
        let mut level: BTreeSet<Functional> = BTreeSet::from([start.clone()]);
        for _ in 0..max_depth {
            let mut next = BTreeSet::new();
            for s in &level {
                for z in &steps {
                    let t = s + *z;
                    if allowed.contains(&t) {
                        next.insert(t);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            reached.extend(next.iter().cloned());
            level = next;
        }
        // The final sum may land on δ or on -δ.
        let related: BTreeSet<Functional> = starts
            .iter()
            .filter(|d| reached.contains(**d) || reached.contains(&-**d))
            .map(|d| (*d).clone())
            .collect();
        out.insert(start.clone(), related);
    }
    out
}

/// True iff every element's oracle class equals its class in `partition`.
pub fn agrees_with(relation: &BTreeMap<Functional, BTreeSet<Functional>>, partition: &Partition) -> bool {
    relation.len() == partition.elements().len()
        && relation.iter().all(|(f, related)| match partition.class_of(f) {
            Some(id) => partition.classes()[id].iter().collect::<BTreeSet<_>>() == related.iter().collect(),
            None => false,
        })
}

/// Elements whose oracle class differs from the partition's.
pub fn mismatches(relation: &BTreeMap<Functional, BTreeSet<Functional>>, partition: &Partition) -> Vec<Functional> {
    relation
        .iter()
        .filter(|(f, related)| match partition.class_of(f) {
            Some(id) => partition.classes()[id].iter().collect::<BTreeSet<_>>() != related.iter().collect(),
            None => true,
        })
        .map(|(f, _)| f.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[i64]) -> Vec<Functional> {
        v.iter().map(|&x| Functional::from_ints(&[x])).collect()
    }

    #[test]
    fn depth_four_enumeration_separates_classes() {
        let rel = chain_relation(&fs(&[2, -2]), &fs(&[1, -1, 2, -2]), Mode::Weights, 4);
        let one = Functional::from_ints(&[1]);
        assert_eq!(rel[&one], fs(&[-1, 1]).into_iter().collect());
    }

    #[test]
    fn shallow_bound_can_miss_links() {
        // 1 → 3 → 5 needs two steps.
        let l = fs(&[2, -2]);
        let p = fs(&[1, -1, 3, -3, 5, -5]);
        let one = Functional::from_ints(&[1]);
        let five = Functional::from_ints(&[5]);
        assert!(!chain_relation(&l, &p, Mode::Weights, 1)[&one].contains(&five));
        assert!(chain_relation(&l, &p, Mode::Weights, 2)[&one].contains(&five));
    }
}
