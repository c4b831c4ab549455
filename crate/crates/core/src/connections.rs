//! Connection relations on weights (`∼` on `𝒫`) and on roots (`≈` on `Λ`).
//!
//! A connection is a chain of steps whose partial sums stay inside an allowed
//! set. Because `Λ` and `𝒫` are closed under negation, every step can be
//! undone and reaching `-δ` is as good as reaching `δ`, so the relation is
//! reachability in an undirected graph: nodes are the allowed partial sums,
//! edges join `μ` to `μ + ζ` for each admissible step `ζ`, plus `μ` to `-μ`.
//! The classes are its connected components.

use crate::error::Result;
use crate::functional::{check_system, Functional};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Steps in `Λ`, partial sums in `𝒫`.
    Weights,
    /// Steps and partial sums in `Λ ∪ 𝒫`, starting from a root.
    Roots,
}

/// Equivalence classes over a finite set of functionals. Classes are sorted
/// internally and ordered by their least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    elements: Vec<Functional>,
    classes: Vec<Vec<Functional>>,
    class_of: BTreeMap<Functional, usize>,
}

impl Partition {
    pub fn from_classes(groups: impl IntoIterator<Item = Vec<Functional>>) -> Self {
        let mut classes: Vec<Vec<Functional>> = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|mut g| {
                g.sort();
                g.dedup();
                g
            })
            .collect();
        classes.sort();
        let mut class_of = BTreeMap::new();
        for (id, c) in classes.iter().enumerate() {
            for f in c {
                class_of.insert(f.clone(), id);
            }
        }
        let elements = class_of.keys().cloned().collect();
        Partition { elements, classes, class_of }
    }

    pub fn elements(&self) -> &[Functional] {
        &self.elements
    }

    pub fn classes(&self) -> &[Vec<Functional>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, f: &Functional) -> Option<usize> {
        self.class_of.get(f).copied()
    }

    pub fn same_class(&self, a: &Functional, b: &Functional) -> bool {
        matches!((self.class_of(a), self.class_of(b)), (Some(x), Some(y)) if x == y)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

fn validate(lambda: &[Functional], weights: &[Functional]) -> Result<()> {
    let rank = lambda.first().or(weights.first()).map(Functional::rank);
    check_system(lambda, "root system", rank)?;
    check_system(weights, "weight system", rank)
}

/// Nodes, step set and the starting set for each mode.
fn graph_sets(lambda: &[Functional], weights: &[Functional], mode: Mode) -> (Vec<Functional>, Vec<Functional>) {
    let uniq = |v: Vec<&Functional>| -> Vec<Functional> {
        v.into_iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    };
    match mode {
        Mode::Weights => (uniq(weights.iter().collect()), uniq(lambda.iter().collect())),
        Mode::Roots => {
            let all = uniq(lambda.iter().chain(weights).collect());
            (all.clone(), all)
        }
    }
}

fn components(nodes: &[Functional], steps: &[Functional]) -> Vec<Vec<Functional>> {
    let index: BTreeMap<&Functional, usize> = nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut uf = UnionFind::new(nodes.len());
    for (i, mu) in nodes.iter().enumerate() {
        if let Some(&j) = index.get(&-mu) {
            uf.union(i, j);
        }
        for z in steps {
            if let Some(&j) = index.get(&(mu + z)) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Functional>> = BTreeMap::new();
    for (i, f) in nodes.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(f.clone());
    }
    groups.into_values().collect()
}

/// `𝒫 / ∼`.
pub fn connect_weights(lambda: &[Functional], weights: &[Functional]) -> Result<Partition> {
    validate(lambda, weights)?;
    let (nodes, steps) = graph_sets(lambda, weights, Mode::Weights);
    Ok(Partition::from_classes(components(&nodes, &steps)))
}

/// `Λ / ≈`, where roots may be linked through weights of `𝒫`.
pub fn connect_roots(lambda: &[Functional], weights: &[Functional]) -> Result<Partition> {
    validate(lambda, weights)?;
    let (nodes, steps) = graph_sets(lambda, weights, Mode::Roots);
    let roots: BTreeSet<&Functional> = lambda.iter().collect();
    Ok(Partition::from_classes(
        components(&nodes, &steps).into_iter().map(|c| c.into_iter().filter(|f| roots.contains(f)).collect()),
    ))
}

pub fn connect(lambda: &[Functional], weights: &[Functional], mode: Mode) -> Result<Partition> {
    match mode {
        Mode::Weights => connect_weights(lambda, weights),
        Mode::Roots => connect_roots(lambda, weights),
    }
}

/// A shortest connection `[from, step₁, …, stepₙ]` from `from` to `to`,
/// lexicographically least among shortest ones, or `None`.
pub fn find_connection(
    lambda: &[Functional],
    weights: &[Functional],
    from: &Functional,
    to: &Functional,
    mode: Mode,
) -> Option<Vec<Functional>> {
    let (nodes, steps) = graph_sets(lambda, weights, mode);
    let node_set: BTreeSet<&Functional> = nodes.iter().collect();
    let start_ok = match mode {
        Mode::Weights => node_set.contains(from),
        Mode::Roots => lambda.contains(from),
    };
    let end_ok = match mode {
        Mode::Weights => node_set.contains(to),
        Mode::Roots => lambda.contains(to),
    };
    if !start_ok || !end_ok {
        return None;
    }
    let neg_to = -to;
    if from == to || *from == neg_to {
        return Some(vec![from.clone()]);
    }
    // BFS in FIFO order over sorted steps yields the lexicographically least
    // step sequence among shortest ones.
    let mut parent: BTreeMap<Functional, (Functional, Functional)> = BTreeMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    let mut seen: BTreeSet<Functional> = BTreeSet::from([from.clone()]);
    while let Some(mu) = queue.pop_front() {
        for z in &steps {
            let next = &mu + z;
            if !node_set.contains(&next) || seen.contains(&next) {
                continue;
            }
            seen.insert(next.clone());
            parent.insert(next.clone(), (mu.clone(), z.clone()));
            if next == *to || next == neg_to {
                let mut chain = Vec::new();
                let mut cur = next;
                while let Some((prev, step)) = parent.get(&cur) {
                    chain.push(step.clone());
                    cur = prev.clone();
                }
                chain.push(from.clone());
                chain.reverse();
                return Some(chain);
            }
            queue.push_back(next);
        }
    }
    None
}

/// Checks a chain `[start, step₁, …, stepₙ]` against the definition of a
/// connection from `start` to `to` directly, without the graph reduction.
pub fn is_connection(
    lambda: &[Functional],
    weights: &[Functional],
    chain: &[Functional],
    to: &Functional,
    mode: Mode,
) -> bool {
    let Some((start, steps)) = chain.split_first() else {
        return false;
    };
    let in_steps = |z: &Functional| match mode {
        Mode::Weights => lambda.contains(z),
        Mode::Roots => lambda.contains(z) || weights.contains(z),
    };
    // Partial sums live where the steps do in roots mode, in 𝒫 in weights mode.
    let allowed = |s: &Functional| match mode {
        Mode::Weights => weights.contains(s),
        Mode::Roots => lambda.contains(s) || weights.contains(s),
    };
    let start_ok = match mode {
        Mode::Weights => weights.contains(start),
        Mode::Roots => lambda.contains(start),
    };
    if !start_ok || !steps.iter().all(in_steps) {
        return false;
    }
    let mut sum = start.clone();
    for (k, z) in steps.iter().enumerate() {
        sum = &sum + z;
        if k + 1 < steps.len() && !allowed(&sum) {
            return false;
        }
    }
    sum == *to || sum == -to
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn fs(v: &[i64]) -> Vec<Functional> {
        v.iter().map(|&x| Functional::from_ints(&[x])).collect()
    }

    fn shown(p: &Partition) -> Vec<Vec<String>> {
        p.classes().iter().map(|c| c.iter().map(|f| f.to_string()).collect()).collect()
    }

    #[test]
    fn weight_examples() {
        let p = connect_weights(&fs(&[2, -2]), &fs(&[2, -2])).unwrap();
        assert_eq!(shown(&p), [["(-2)", "(2)"]]);

        let p = connect_weights(&fs(&[2, -2]), &fs(&[1, -1, 2, -2])).unwrap();
        assert_eq!(shown(&p), [vec!["(-2)", "(2)"], vec!["(-1)", "(1)"]]);

        let p = connect_weights(&[], &fs(&[1, -1])).unwrap();
        assert_eq!(shown(&p), [["(-1)", "(1)"]]);
    }

    #[test]
    fn root_examples() {
        let p = connect_roots(&fs(&[2, -2]), &fs(&[2, -2])).unwrap();
        assert_eq!(p.len(), 1);

        let two = |a, b| Functional::from_ints(&[a, b]);
        let lambda = vec![two(2, 0), two(-2, 0), two(0, 2), two(0, -2)];
        let p = connect_roots(&lambda, &lambda).unwrap();
        assert_eq!(shown(&p), [vec!["(-2, 0)", "(2, 0)"], vec!["(0, -2)", "(0, 2)"]]);

        let p = connect_roots(&fs(&[2, -2]), &fs(&[1, -1, 2, -2, 3, -3])).unwrap();
        assert_eq!(shown(&p), [["(-2)", "(2)"]]);
    }

    #[test]
    fn asymmetric_input_rejected() {
        assert!(matches!(connect_weights(&fs(&[2]), &fs(&[1, -1])), Err(Error::SymmetryViolation { .. })));
        assert!(matches!(connect_roots(&fs(&[2, -2]), &fs(&[1])), Err(Error::SymmetryViolation { .. })));
        assert!(matches!(connect_weights(&fs(&[]), &fs(&[0])), Err(Error::ZeroFunctional { .. })));
    }

    #[test]
    fn witness_examples() {
        let l = fs(&[2, -2]);
        let f2 = Functional::from_ints(&[2]);
        let w = find_connection(&l, &l, &f2, &-&f2, Mode::Weights).unwrap();
        assert_eq!(w, vec![f2.clone()]);
        assert!(is_connection(&l, &l, &w, &-&f2, Mode::Weights));

        let p = fs(&[1, -1, 2, -2]);
        assert_eq!(find_connection(&l, &p, &Functional::from_ints(&[1]), &f2, Mode::Weights), None);

        let two = |a, b| Functional::from_ints(&[a, b]);
        let lambda = vec![two(2, 0), two(-2, 0), two(0, 2), two(0, -2)];
        let w = find_connection(&lambda, &lambda, &two(2, 0), &two(2, 0), Mode::Roots).unwrap();
        assert_eq!(w, vec![two(2, 0)]);
    }

    #[test]
    fn witness_through_weights() {
        // Λ = {±2}, 𝒫 = {±1, ±3}: 1 reaches 3 by +2 and -1 by -2.
        let l = fs(&[2, -2]);
        let p = fs(&[1, -1, 3, -3]);
        let w = find_connection(&l, &p, &Functional::from_ints(&[-1]), &Functional::from_ints(&[3]), Mode::Weights)
            .unwrap();
        assert_eq!(w, fs(&[-1, -2]));
        assert!(is_connection(&l, &p, &w, &Functional::from_ints(&[3]), Mode::Weights));
        // Chain with a partial sum outside 𝒫 is rejected.
        assert!(!is_connection(&l, &p, &fs(&[1, 2, 2, -2]), &Functional::from_ints(&[3]), Mode::Weights));
    }

    #[test]
    fn partition_ordering() {
        let p = Partition::from_classes(vec![fs(&[3, -3]), fs(&[1, -1])]);
        assert_eq!(p.class_of(&Functional::from_ints(&[1])), Some(1));
        assert_eq!(p.class_of(&Functional::from_ints(&[-3])), Some(0));
        assert!(p.same_class(&Functional::from_ints(&[3]), &Functional::from_ints(&[-3])));
    }
}
