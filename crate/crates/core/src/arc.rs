//! Arcs on `[n] = {1, ..., n}` and the bricks they stand for.
//!
//! An arc `(i, j)` encodes the uniserial module with socle `S_i` and top
//! `S_{j-1}` over the linear Nakayama algebra `A_{n-1}` (admissible arcs,
//! `i < j`) or the cyclic one `B_n` (all arcs). Marks are 1-based and all
//! arithmetic on them is cyclic, so `n + 1 = 1` and `1 - 1 = n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces `value` cyclically into `[n]`. Never returns 0.
pub fn cyclic(value: i64, n: u32) -> u32 {
    let n = i64::from(n);
    ((value - 1).rem_euclid(n) + 1) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Arc {
    pub start: u32,
    pub end: u32,
}

impl From<(u32, u32)> for Arc {
    fn from((start, end): (u32, u32)) -> Self {
        Arc { start, end }
    }
}

impl From<Arc> for (u32, u32) {
    fn from(arc: Arc) -> Self {
        (arc.start, arc.end)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

impl Arc {
    pub const fn new(start: u32, end: u32) -> Self {
        Arc { start, end }
    }

    pub fn in_range(&self, n: u32) -> bool {
        (1..=n).contains(&self.start) && (1..=n).contains(&self.end)
    }

    /// `end - start` taken cyclically into `[n]`; `(i, i)` has length `n`.
    pub fn length(&self, n: u32) -> u32 {
        cyclic(i64::from(self.end) - i64::from(self.start), n)
    }

    pub fn is_admissible(&self) -> bool {
        self.start < self.end
    }

    /// The vertex of the top composition factor, `j - 1`.
    pub fn top(&self, n: u32) -> u32 {
        cyclic(i64::from(self.end) - 1, n)
    }

    pub fn socle_series(&self, n: u32) -> SocleSeries {
        socle_series(*self, n)
    }

    /// Ordering key used everywhere arcs are listed: start, then length.
    pub fn sort_key(&self, n: u32) -> (u32, u32) {
        (self.start, self.length(n))
    }
}

/// Composition factors of `M_α` from the socle upwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SocleSeries(Vec<u32>);

impl SocleSeries {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, mark: u32) -> bool {
        self.0.contains(&mark)
    }

    pub fn position(&self, mark: u32) -> Option<usize> {
        self.0.iter().position(|&m| m == mark)
    }

    /// Contiguous (non-cyclic) subsequence test.
    pub fn is_partial_sequence_of(&self, other: &SocleSeries) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        other.0.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }

    pub fn is_disjoint_from(&self, other: &SocleSeries) -> bool {
        !self.0.iter().any(|m| other.contains(*m))
    }
}

pub fn socle_series(arc: Arc, n: u32) -> SocleSeries {
    let len = arc.length(n);
    SocleSeries(
        (0..len)
            .map(|k| cyclic(i64::from(arc.start) + i64::from(k), n))
            .collect(),
    )
}

/// The algebra an arc diagram lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraSpec {
    /// Path algebra of `1 <- 2 <- ... <- m`; arcs are the admissible arcs on `[m+1]`.
    LinearA(u32),
    /// Cyclic quiver on `n` vertices modulo paths of length `n`; every arc on `[n]`.
    CyclicB(u32),
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::LinearA(m) => write!(f, "A_{m}"),
            AlgebraSpec::CyclicB(n) => write!(f, "B_{n}"),
        }
    }
}

impl AlgebraSpec {
    /// Checks the parameter. `A_0` (the zero category, one mark and no arcs) is
    /// accepted so that the counting conventions start at `a_1 = 1`.
    pub fn validate(&self) -> Result<()> {
        match *self {
            AlgebraSpec::CyclicB(0) => Err(Error::InvalidAlgebra("B_n needs n >= 1".into())),
            _ => Ok(()),
        }
    }

    /// Size of the mark set the arcs live on.
    pub fn marks(&self) -> u32 {
        match *self {
            AlgebraSpec::LinearA(m) => m + 1,
            AlgebraSpec::CyclicB(n) => n,
        }
    }

    /// The parameter as written (`m` for `A_m`, `n` for `B_n`).
    pub fn rank(&self) -> u32 {
        match *self {
            AlgebraSpec::LinearA(m) => m,
            AlgebraSpec::CyclicB(n) => n,
        }
    }

    pub fn letter(&self) -> &'static str {
        match self {
            AlgebraSpec::LinearA(_) => "A",
            AlgebraSpec::CyclicB(_) => "B",
        }
    }

    pub fn is_legal(&self, arc: Arc) -> bool {
        let n = self.marks();
        arc.in_range(n)
            && match self {
                AlgebraSpec::LinearA(_) => arc.is_admissible(),
                AlgebraSpec::CyclicB(_) => true,
            }
    }

    pub fn check(&self, arc: Arc) -> Result<()> {
        if self.is_legal(arc) {
            Ok(())
        } else {
            Err(Error::IllegalArc {
                arc,
                algebra: self.to_string(),
            })
        }
    }

    /// Every legal arc, ordered by (start, length).
    pub fn arcs(&self) -> Vec<Arc> {
        let n = self.marks();
        let mut arcs: Vec<Arc> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| Arc::new(i, j)))
            .filter(|a| self.is_legal(*a))
            .collect();
        arcs.sort_by_key(|a| a.sort_key(n));
        arcs
    }

    pub fn arc_count(&self) -> usize {
        match *self {
            AlgebraSpec::LinearA(m) => (m as usize + 1) * m as usize / 2,
            AlgebraSpec::CyclicB(n) => (n as usize).pow(2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossKind {
    NonCrossing,
    MonoCrossing,
    EpiCrossing,
    StrictlyCrossing,
}

impl fmt::Display for CrossKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossKind::NonCrossing => "non-crossing",
            CrossKind::MonoCrossing => "mono-crossing",
            CrossKind::EpiCrossing => "epi-crossing",
            CrossKind::StrictlyCrossing => "strictly crossing",
        })
    }
}

/// Classification of the (at most one-dimensional) hom space `M_a -> M_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MorphismKind {
    Zero,
    Injection,
    NonzeroNonInjection,
    Iso,
}

impl MorphismKind {
    /// Zero or a monomorphism.
    pub fn is_zero_or_injective(self) -> bool {
        !matches!(self, MorphismKind::NonzeroNonInjection)
    }
}

pub fn crossing_kind(a: Arc, b: Arc, n: u32) -> Result<CrossKind> {
    if a == b {
        return Err(Error::EqualArcs(a));
    }
    let (sa, sb) = (a.socle_series(n), b.socle_series(n));
    let weakly_non_crossing =
        sa.is_partial_sequence_of(&sb) || sb.is_partial_sequence_of(&sa) || sa.is_disjoint_from(&sb);
    Ok(if !weakly_non_crossing {
        CrossKind::StrictlyCrossing
    } else if a.start == b.start {
        CrossKind::MonoCrossing
    } else if a.end == b.end {
        CrossKind::EpiCrossing
    } else {
        CrossKind::NonCrossing
    })
}

/// Morphism kind between `M_a` and `M_b` read off the arcs.
///
/// With `a = (i, j)` and `b = (c, d)`, a nonzero map exists exactly when the
/// socle of `b` occurs among the factors of `a` and the top of `a` occurs among
/// the factors of `b`; its image is then the segment `c, ..., j-1`, which is
/// all of `M_a` precisely when `c = i`.
pub fn hom_kind(a: Arc, b: Arc, spec: AlgebraSpec) -> MorphismKind {
    if a == b {
        return MorphismKind::Iso;
    }
    let n = spec.marks();
    let nonzero = a.socle_series(n).contains(b.start) && b.socle_series(n).contains(a.top(n));
    match (nonzero, a.start == b.start) {
        (false, _) => MorphismKind::Zero,
        (true, true) => MorphismKind::Injection,
        (true, false) => MorphismKind::NonzeroNonInjection,
    }
}

/// Arcs of the submodules of `M_a`: `(i, i+1), ..., (i, j)` by increasing length.
pub fn submodule_arcs(a: Arc, spec: AlgebraSpec) -> Vec<Arc> {
    let n = spec.marks();
    (1..=a.length(n))
        .map(|t| Arc::new(a.start, cyclic(i64::from(a.start) + i64::from(t), n)))
        .collect()
}

/// Human-readable module label, top factor first: `(1,4)` on `[4]` is `3/2/1`.
pub fn arc_label(a: Arc, n: u32) -> String {
    let series = a.socle_series(n);
    series
        .entries()
        .iter()
        .rev()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join("/")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(a: (u32, u32), n: u32) -> Vec<u32> {
        socle_series(a.into(), n).entries().to_vec()
    }

    #[test]
    fn cyclic_reduction_stays_in_range() {
        assert_eq!(cyclic(4, 3), 1);
        assert_eq!(cyclic(0, 3), 3);
        assert_eq!(cyclic(3, 3), 3);
        assert_eq!(cyclic(-5, 3), 1);
    }

    #[test]
    fn socle_series_examples() {
        assert_eq!(series((2, 3), 3), vec![2]);
        assert_eq!(series((3, 2), 3), vec![3, 1]);
        assert_eq!(series((1, 1), 3), vec![1, 2, 3]);
        assert_eq!(Arc::new(1, 1).length(3), 3);
    }

    #[test]
    fn partial_sequences_are_contiguous_and_not_cyclic() {
        let whole = SocleSeries(vec![2, 3, 1]);
        for yes in [vec![3, 1], vec![2], vec![2, 3, 1]] {
            assert!(SocleSeries(yes).is_partial_sequence_of(&whole));
        }
        for no in [vec![1, 2], vec![2, 1], vec![3, 1, 2]] {
            assert!(!SocleSeries(no).is_partial_sequence_of(&whole));
        }
    }

    #[test]
    fn crossing_examples() {
        let k = |a: (u32, u32), b: (u32, u32), n| crossing_kind(a.into(), b.into(), n).unwrap();
        assert_eq!(k((1, 3), (2, 4), 4), CrossKind::StrictlyCrossing);
        assert_eq!(k((3, 1), (3, 2), 3), CrossKind::MonoCrossing);
        assert_eq!(k((1, 2), (3, 4), 4), CrossKind::NonCrossing);
        assert_eq!(k((3, 2), (1, 1), 3), CrossKind::StrictlyCrossing);
        // the remaining pairs of {(1,1),(2,3),(3,1),(3,2)} on [3]
        assert_eq!(k((1, 1), (2, 3), 3), CrossKind::NonCrossing);
        assert_eq!(k((1, 1), (3, 1), 3), CrossKind::EpiCrossing);
        assert_eq!(k((2, 3), (3, 2), 3), CrossKind::NonCrossing);
        assert_eq!(k((3, 1), (2, 3), 3), CrossKind::NonCrossing);
    }

    #[test]
    fn crossing_rejects_equal_arcs() {
        let a = Arc::new(1, 2);
        assert_eq!(crossing_kind(a, a, 3), Err(Error::EqualArcs(a)));
    }

    #[test]
    fn admissible_strict_crossing_matches_interleaving() {
        let n = 6;
        let arcs = AlgebraSpec::LinearA(n - 1).arcs();
        for &a in &arcs {
            for &b in &arcs {
                if a == b {
                    continue;
                }
                let interleaved = (a.start < b.start && b.start < a.end && a.end < b.end)
                    || (b.start < a.start && a.start < b.end && b.end < a.end);
                let strict = crossing_kind(a, b, n).unwrap() == CrossKind::StrictlyCrossing;
                assert_eq!(interleaved, strict, "{a} {b}");
            }
        }
    }

    #[test]
    fn hom_kind_examples() {
        use MorphismKind::*;
        let h = |a: (u32, u32), b: (u32, u32), s| hom_kind(a.into(), b.into(), s);
        assert_eq!(h((1, 3), (2, 3), AlgebraSpec::LinearA(2)), NonzeroNonInjection);
        assert_eq!(h((1, 2), (1, 4), AlgebraSpec::LinearA(3)), Injection);
        assert_eq!(h((1, 2), (2, 3), AlgebraSpec::LinearA(2)), Zero);
        assert_eq!(h((1, 1), (2, 2), AlgebraSpec::CyclicB(2)), NonzeroNonInjection);
        assert_eq!(h((2, 4), (2, 4), AlgebraSpec::LinearA(3)), Iso);
    }

    #[test]
    fn submodule_arc_examples() {
        let s = |a: (u32, u32), spec| submodule_arcs(a.into(), spec);
        assert_eq!(
            s((1, 4), AlgebraSpec::LinearA(3)),
            vec![Arc::new(1, 2), Arc::new(1, 3), Arc::new(1, 4)]
        );
        assert_eq!(
            s((3, 2), AlgebraSpec::CyclicB(3)),
            vec![Arc::new(3, 1), Arc::new(3, 2)]
        );
        assert_eq!(s((1, 2), AlgebraSpec::LinearA(3)), vec![Arc::new(1, 2)]);
    }

    #[test]
    fn arc_set_sizes() {
        for m in 0..8 {
            let spec = AlgebraSpec::LinearA(m);
            assert_eq!(spec.arcs().len(), spec.arc_count());
        }
        for n in 1..8 {
            let spec = AlgebraSpec::CyclicB(n);
            assert_eq!(spec.arcs().len(), spec.arc_count());
        }
        assert_eq!(AlgebraSpec::LinearA(3).arc_count(), 6);
        assert_eq!(AlgebraSpec::CyclicB(3).arc_count(), 9);
    }

    #[test]
    fn labels() {
        assert_eq!(arc_label(Arc::new(1, 4), 4), "3/2/1");
        assert_eq!(arc_label(Arc::new(1, 1), 2), "2/1");
        assert_eq!(arc_label(Arc::new(3, 2), 3), "1/3");
    }
}
