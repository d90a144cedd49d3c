//! Enumeration of mono-crossing and non-crossing arc diagrams.
//!
//! Diagrams of a given kind are exactly the cliques (empty and non-maximal
//! ones included) of a compatibility graph on the legal arcs. The search
//! extends cliques by arcs of larger index, so the visit order is the
//! lexicographic order on sorted arc lists.

use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::arc::{crossing_kind, AlgebraSpec, Arc, CrossKind};
use crate::diagram::ArcDiagram;
use crate::error::{Error, Result};
use crate::poset::MonobrickPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramKind {
    Monobrick,
    Semibrick,
    CofinallyClosed,
}

impl FromStr for DiagramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "monobrick" | "mono" => Ok(DiagramKind::Monobrick),
            "semibrick" | "semi" => Ok(DiagramKind::Semibrick),
            "cofinally-closed" | "closed" => Ok(DiagramKind::CofinallyClosed),
            other => Err(Error::InvalidAlgebra(format!("unknown diagram kind `{other}`"))),
        }
    }
}

/// Upper bounds on the algebra parameter accepted by [`enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_linear: u32,
    pub max_cyclic: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_linear: 10,
            max_cyclic: 7,
        }
    }
}

impl Budget {
    pub fn check(&self, spec: AlgebraSpec) -> Result<()> {
        let cap = match spec {
            AlgebraSpec::LinearA(_) => self.max_linear,
            AlgebraSpec::CyclicB(_) => self.max_cyclic,
        };
        if spec.rank() > cap {
            return Err(Error::BudgetExceeded {
                algebra: spec.to_string(),
                cap,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Drops every index `<= i`.
    fn above(&self, i: usize) -> BitSet {
        let mut out = self.clone();
        for (w, word) in out.words.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= i + 1 {
                *word = 0;
            } else if lo <= i {
                let keep = i + 1 - lo;
                *word &= !((1u64 << keep) - 1);
            }
        }
        out
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Arcs of `spec` with the compatibility relation for `kind`.
struct CompatGraph {
    spec: AlgebraSpec,
    arcs: Vec<Arc>,
    adjacent: Vec<BitSet>,
}

impl CompatGraph {
    fn new(spec: AlgebraSpec, kind: DiagramKind) -> Self {
        let arcs = spec.arcs();
        let n = spec.marks();
        let mut adjacent = vec![BitSet::empty(arcs.len()); arcs.len()];
        for (x, &a) in arcs.iter().enumerate() {
            for (y, &b) in arcs.iter().enumerate().skip(x + 1) {
                let k = crossing_kind(a, b, n).expect("distinct arcs");
                let ok = match kind {
                    DiagramKind::Semibrick => k == CrossKind::NonCrossing,
                    DiagramKind::Monobrick | DiagramKind::CofinallyClosed => {
                        matches!(k, CrossKind::NonCrossing | CrossKind::MonoCrossing)
                    }
                };
                if ok {
                    adjacent[x].insert(y);
                    adjacent[y].insert(x);
                }
            }
        }
        CompatGraph { spec, arcs, adjacent }
    }

    fn all(&self) -> BitSet {
        let mut s = BitSet::empty(self.arcs.len());
        for i in 0..self.arcs.len() {
            s.insert(i);
        }
        s
    }

    fn diagram(&self, clique: &[usize]) -> ArcDiagram {
        ArcDiagram::from_sorted(self.spec, clique.iter().map(|&i| self.arcs[i]).collect())
    }

    /// Visits `clique` and every extension by arcs from `candidates`.
    fn search(&self, clique: &mut Vec<usize>, candidates: &BitSet, visit: &mut dyn FnMut(&[usize])) {
        visit(clique);
        for next in candidates.iter() {
            clique.push(next);
            let narrowed = candidates.above(next).and(&self.adjacent[next]);
            self.search(clique, &narrowed, visit);
            clique.pop();
        }
    }
}

fn accepts(kind: DiagramKind, d: &ArcDiagram) -> bool {
    match kind {
        DiagramKind::CofinallyClosed => MonobrickPoset::new(d.clone())
            .map(|p| p.is_cofinally_closed())
            .unwrap_or(false),
        _ => true,
    }
}

/// Visits every diagram of `kind` over `spec` once, in lexicographic order of
/// the (start, length)-sorted arc lists, and returns how many were visited.
pub fn enumerate(
    spec: AlgebraSpec,
    kind: DiagramKind,
    budget: &Budget,
    mut visitor: impl FnMut(&ArcDiagram),
) -> Result<u64> {
    spec.validate()?;
    budget.check(spec)?;
    let graph = CompatGraph::new(spec, kind);
    let mut count = 0u64;
    let mut clique = Vec::new();
    graph.search(&mut clique, &graph.all(), &mut |c| {
        let d = graph.diagram(c);
        if accepts(kind, &d) {
            count += 1;
            visitor(&d);
        }
    });
    Ok(count)
}

pub fn count(spec: AlgebraSpec, kind: DiagramKind, budget: &Budget) -> Result<u64> {
    enumerate(spec, kind, budget, |_| {})
}

/// Splits the search by first arc across `workers` threads.
///
/// The visitor runs under a lock, so it is never invoked concurrently; with
/// more than one worker the visit order is unspecified, the count is not.
pub fn enumerate_parallel(
    spec: AlgebraSpec,
    kind: DiagramKind,
    budget: &Budget,
    workers: usize,
    visitor: impl FnMut(&ArcDiagram) + Send,
) -> Result<u64> {
    if workers <= 1 {
        return enumerate(spec, kind, budget, visitor);
    }
    spec.validate()?;
    budget.check(spec)?;
    let graph = CompatGraph::new(spec, kind);
    let visitor = Mutex::new(visitor);
    let next_branch = AtomicUsize::new(0);
    let all = graph.all();

    let mut total = 0u64;
    let empty = ArcDiagram::empty(spec);
    if accepts(kind, &empty) {
        (visitor.lock().unwrap())(&empty);
        total += 1;
    }
    let branch_total: u64 = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = 0u64;
                    loop {
                        let first = next_branch.fetch_add(1, Ordering::Relaxed);
                        if first >= graph.arcs.len() {
                            break;
                        }
                        let mut clique = vec![first];
                        let candidates = all.above(first).and(&graph.adjacent[first]);
                        graph.search(&mut clique, &candidates, &mut |c| {
                            let d = graph.diagram(c);
                            if accepts(kind, &d) {
                                local += 1;
                                (visitor.lock().unwrap())(&d);
                            }
                        });
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .sum()
    });
    total += branch_total;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(spec: AlgebraSpec, kind: DiagramKind) -> u64 {
        count(spec, kind, &Budget::default()).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(n(AlgebraSpec::LinearA(3), DiagramKind::Monobrick), 22);
        assert_eq!(n(AlgebraSpec::CyclicB(2), DiagramKind::Monobrick), 8);
        assert_eq!(n(AlgebraSpec::LinearA(1), DiagramKind::Monobrick), 2);
        assert_eq!(n(AlgebraSpec::CyclicB(2), DiagramKind::Semibrick), 6);
        assert_eq!(n(AlgebraSpec::LinearA(0), DiagramKind::Monobrick), 1);
    }

    #[test]
    fn torsion_free_classes_of_a3() {
        // 10 rows of the |M| >= 2 list plus the empty set and {1}, {2}, {3}.
        assert_eq!(n(AlgebraSpec::LinearA(3), DiagramKind::CofinallyClosed), 14);
        // ∅, {1}, {2}, {1 < 2/1}, {2 < 1/2}, {1, 2}
        assert_eq!(n(AlgebraSpec::CyclicB(2), DiagramKind::CofinallyClosed), 6);
    }

    /// Oracle: every subset of legal arcs, filtered by the pairwise predicate.
    fn brute_force(spec: AlgebraSpec, kind: DiagramKind) -> Vec<ArcDiagram> {
        let arcs = spec.arcs();
        let mut out = Vec::new();
        for mask in 0u64..(1 << arcs.len()) {
            let chosen: Vec<Arc> = (0..arcs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| arcs[i])
                .collect();
            let d = ArcDiagram::new(spec, chosen).unwrap();
            let ok = match kind {
                DiagramKind::Semibrick => d.is_semibrick(),
                _ => d.is_monobrick(),
            };
            if ok {
                out.push(d);
            }
        }
        out.sort_by(|a, b| {
            a.arcs()
                .iter()
                .map(|x| x.sort_key(spec.marks()))
                .cmp(b.arcs().iter().map(|x| x.sort_key(spec.marks())))
        });
        out
    }

    #[test]
    fn matches_brute_force_in_lexicographic_order() {
        for spec in [
            AlgebraSpec::LinearA(2),
            AlgebraSpec::LinearA(3),
            AlgebraSpec::LinearA(4),
            AlgebraSpec::CyclicB(2),
            AlgebraSpec::CyclicB(3),
        ] {
            for kind in [DiagramKind::Monobrick, DiagramKind::Semibrick] {
                let mut seen = Vec::new();
                enumerate(spec, kind, &Budget::default(), |d| seen.push(d.clone())).unwrap();
                assert_eq!(seen, brute_force(spec, kind), "{spec} {kind:?}");
            }
        }
    }

    #[test]
    fn parallel_counts_match() {
        for workers in [1, 2, 4] {
            for spec in [AlgebraSpec::LinearA(5), AlgebraSpec::CyclicB(4)] {
                for kind in [DiagramKind::Monobrick, DiagramKind::CofinallyClosed] {
                    let mut seen = 0u64;
                    let c =
                        enumerate_parallel(spec, kind, &Budget::default(), workers, |_| seen += 1).unwrap();
                    assert_eq!(c, seen);
                    assert_eq!(c, n(spec, kind));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = count(
            AlgebraSpec::CyclicB(8),
            DiagramKind::Monobrick,
            &Budget::default(),
        );
        assert!(matches!(err, Err(Error::BudgetExceeded { cap: 7, .. })));
        let err = count(
            AlgebraSpec::LinearA(11),
            DiagramKind::Monobrick,
            &Budget::default(),
        );
        assert!(matches!(err, Err(Error::BudgetExceeded { cap: 10, .. })));
    }

    #[test]
    fn bitset_above() {
        let mut s = BitSet::empty(130);
        for i in [0, 5, 63, 64, 65, 127, 128] {
            s.insert(i);
        }
        assert_eq!(s.above(63).iter().collect::<Vec<_>>(), vec![64, 65, 127, 128]);
        assert_eq!(
            s.above(0).iter().collect::<Vec<_>>(),
            vec![5, 63, 64, 65, 127, 128]
        );
        assert_eq!(s.above(128).iter().count(), 0);
    }
}
