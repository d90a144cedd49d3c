use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{crossing_kind, AlgebraSpec, Arc, CrossKind};
use crate::error::{Error, Result};

/// A set of legal arcs over one algebra, kept sorted by (start, length).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    spec: AlgebraSpec,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Validates every arc against `spec`; duplicates are merged.
    pub fn new(spec: AlgebraSpec, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        spec.validate()?;
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        for &arc in &arcs {
            spec.check(arc)?;
        }
        let n = spec.marks();
        arcs.sort_by_key(|a| a.sort_key(n));
        arcs.dedup();
        Ok(ArcDiagram { spec, arcs })
    }

    pub fn empty(spec: AlgebraSpec) -> Self {
        ArcDiagram {
            spec,
            arcs: Vec::new(),
        }
    }

    /// Caller guarantees legality and ordering.
    pub(crate) fn from_sorted(spec: AlgebraSpec, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.iter().all(|a| spec.is_legal(*a)));
        ArcDiagram { spec, arcs }
    }

    pub fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, arc: Arc) -> bool {
        self.arcs.contains(&arc)
    }

    pub fn is_subset_of(&self, other: &ArcDiagram) -> bool {
        self.arcs.iter().all(|a| other.contains(*a))
    }

    /// Every unordered pair of distinct arcs with its crossing kind.
    pub fn pairs(&self) -> impl Iterator<Item = (Arc, Arc, CrossKind)> + '_ {
        let n = self.spec.marks();
        self.arcs.iter().enumerate().flat_map(move |(k, &a)| {
            self.arcs[k + 1..].iter().map(move |&b| {
                (
                    a,
                    b,
                    crossing_kind(a, b, n).expect("arcs in a diagram are distinct"),
                )
            })
        })
    }

    /// First pair that is neither mono-crossing nor non-crossing.
    pub fn monobrick_violation(&self) -> Option<(Arc, Arc, CrossKind)> {
        self.pairs()
            .find(|(_, _, k)| !matches!(k, CrossKind::MonoCrossing | CrossKind::NonCrossing))
    }

    pub fn is_monobrick(&self) -> bool {
        self.monobrick_violation().is_none()
    }

    /// Non-crossing diagram, i.e. a semibrick.
    pub fn is_semibrick(&self) -> bool {
        self.pairs().all(|(_, _, k)| k == CrossKind::NonCrossing)
    }

    pub fn require_monobrick(&self) -> Result<()> {
        match self.monobrick_violation() {
            None => Ok(()),
            Some((a, b, kind)) => Err(Error::NotMonobrick { a, b, kind }),
        }
    }
}

pub fn is_monobrick_diagram(d: &ArcDiagram) -> bool {
    d.is_monobrick()
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.spec)?;
        for (k, a) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Interchange form: `{"n":3,"algebra":"B","arcs":[[1,1],[2,3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub n: u32,
    pub algebra: String,
    pub arcs: Vec<Arc>,
}

impl From<&ArcDiagram> for DiagramRecord {
    fn from(d: &ArcDiagram) -> Self {
        DiagramRecord {
            n: d.spec.rank(),
            algebra: d.spec.letter().to_string(),
            arcs: d.arcs.clone(),
        }
    }
}

impl DiagramRecord {
    pub fn spec(&self) -> Result<AlgebraSpec> {
        match self.algebra.as_str() {
            "A" => Ok(AlgebraSpec::LinearA(self.n)),
            "B" => Ok(AlgebraSpec::CyclicB(self.n)),
            other => Err(Error::InvalidAlgebra(format!("unknown algebra `{other}`"))),
        }
    }

    pub fn to_diagram(&self) -> Result<ArcDiagram> {
        ArcDiagram::new(self.spec()?, self.arcs.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(spec: AlgebraSpec, arcs: &[(u32, u32)]) -> ArcDiagram {
        ArcDiagram::new(spec, arcs.iter().map(|&a| Arc::from(a))).unwrap()
    }

    #[test]
    fn monobrick_examples() {
        assert!(ArcDiagram::empty(AlgebraSpec::CyclicB(3)).is_monobrick());
        let d = diagram(AlgebraSpec::CyclicB(3), &[(1, 1), (2, 3), (3, 1), (3, 2)]);
        assert!(!d.is_monobrick());
        // (1,4) and (3,4) share an end point
        let d = diagram(AlgebraSpec::LinearA(3), &[(1, 2), (1, 4), (3, 4)]);
        assert_eq!(
            d.monobrick_violation(),
            Some((Arc::new(1, 4), Arc::new(3, 4), CrossKind::EpiCrossing))
        );
        let d = diagram(AlgebraSpec::LinearA(3), &[(1, 2), (1, 4), (2, 3)]);
        assert!(d.is_monobrick());
        assert!(!d.is_semibrick());
    }

    #[test]
    fn illegal_arcs_rejected() {
        let err = ArcDiagram::new(AlgebraSpec::LinearA(3), [Arc::new(3, 2)]).unwrap_err();
        assert!(matches!(err, Error::IllegalArc { .. }));
        assert!(ArcDiagram::new(AlgebraSpec::CyclicB(3), [Arc::new(4, 1)]).is_err());
    }

    #[test]
    fn arcs_sorted_by_start_then_length() {
        let d = diagram(AlgebraSpec::CyclicB(3), &[(2, 3), (2, 2), (2, 1), (1, 1)]);
        assert_eq!(
            d.arcs(),
            &[Arc::new(1, 1), Arc::new(2, 3), Arc::new(2, 1), Arc::new(2, 2)]
        );
    }

    #[test]
    fn record_roundtrip() {
        let d = diagram(AlgebraSpec::CyclicB(3), &[(1, 1), (2, 3)]);
        let json = serde_json::to_string(&DiagramRecord::from(&d)).unwrap();
        assert_eq!(json, r#"{"n":3,"algebra":"B","arcs":[[1,1],[2,3]]}"#);
        let back: DiagramRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_diagram().unwrap(), d);
    }
}
