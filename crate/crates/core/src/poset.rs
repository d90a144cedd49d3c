//! The submodule order on a monobrick, maximal elements and cofinal closure.

use serde::{Deserialize, Serialize};

use crate::arc::{hom_kind, submodule_arcs, Arc, MorphismKind};
use crate::diagram::ArcDiagram;
use crate::error::{Error, Result};

/// A validated mono-crossing diagram ordered by `a <= b` iff `M_a` embeds in `M_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonobrickPoset {
    diagram: ArcDiagram,
}

/// A covering relation `lower < upper` with nothing in between.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub lower: Arc,
    pub upper: Arc,
}

impl MonobrickPoset {
    pub fn new(diagram: ArcDiagram) -> Result<Self> {
        diagram.require_monobrick()?;
        Ok(MonobrickPoset { diagram })
    }

    pub fn diagram(&self) -> &ArcDiagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> ArcDiagram {
        self.diagram
    }

    pub fn arcs(&self) -> &[Arc] {
        self.diagram.arcs()
    }

    pub fn leq(&self, a: Arc, b: Arc) -> bool {
        matches!(
            hom_kind(a, b, self.diagram.spec()),
            MorphismKind::Injection | MorphismKind::Iso
        )
    }

    fn lt(&self, a: Arc, b: Arc) -> bool {
        a != b && self.leq(a, b)
    }

    /// Arcs with nothing strictly above them; always a semibrick.
    pub fn mmax(&self) -> ArcDiagram {
        let arcs = self.arcs();
        let top = arcs
            .iter()
            .copied()
            .filter(|&a| !arcs.iter().any(|&b| self.lt(a, b)))
            .collect();
        ArcDiagram::from_sorted(self.diagram.spec(), top)
    }

    /// Adds every submodule arc `N` of a member whose maps into all members
    /// are zero or injective.
    pub fn cofinal_closure(&self) -> MonobrickPoset {
        let spec = self.diagram.spec();
        let mut arcs = self.arcs().to_vec();
        for &m in self.arcs() {
            for n in submodule_arcs(m, spec) {
                if self
                    .arcs()
                    .iter()
                    .all(|&other| hom_kind(n, other, spec).is_zero_or_injective())
                {
                    arcs.push(n);
                }
            }
        }
        let closed = ArcDiagram::new(spec, arcs).expect("submodule arcs are legal");
        debug_assert!(closed.is_monobrick());
        MonobrickPoset { diagram: closed }
    }

    pub fn is_cofinally_closed(&self) -> bool {
        self.cofinal_closure() == *self
    }

    /// `other` contains `self` and each of its arcs lies below an arc of `self`.
    pub fn is_cofinal_extension(&self, other: &MonobrickPoset) -> Result<bool> {
        let (s, o) = (self.diagram.spec(), other.diagram.spec());
        if s != o {
            return Err(Error::AlgebraMismatch(s.to_string(), o.to_string()));
        }
        Ok(self.diagram.is_subset_of(&other.diagram)
            && other
                .arcs()
                .iter()
                .all(|&n| self.arcs().iter().any(|&m| self.leq(n, m))))
    }

    /// Covering pairs, ordered by lower arc then upper arc in diagram order.
    pub fn hasse(&self) -> Vec<Cover> {
        let arcs = self.arcs();
        let mut covers = Vec::new();
        for &lower in arcs {
            for &upper in arcs {
                if self.lt(lower, upper)
                    && !arcs.iter().any(|&mid| self.lt(lower, mid) && self.lt(mid, upper))
                {
                    covers.push(Cover { lower, upper });
                }
            }
        }
        covers
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::AlgebraSpec;
    use crate::enumerate::{enumerate, Budget, DiagramKind};

    const A3: AlgebraSpec = AlgebraSpec::LinearA(3);

    fn poset(spec: AlgebraSpec, arcs: &[(u32, u32)]) -> MonobrickPoset {
        MonobrickPoset::new(ArcDiagram::new(spec, arcs.iter().map(|&a| Arc::from(a))).unwrap()).unwrap()
    }

    fn all_monobricks(spec: AlgebraSpec) -> Vec<MonobrickPoset> {
        let mut out = Vec::new();
        enumerate(spec, DiagramKind::Monobrick, &Budget::default(), |d| {
            out.push(MonobrickPoset::new(d.clone()).unwrap())
        })
        .unwrap();
        out
    }

    #[test]
    fn rejects_non_monobricks() {
        let d = ArcDiagram::new(A3, [Arc::new(1, 3), Arc::new(2, 4)]).unwrap();
        assert!(matches!(MonobrickPoset::new(d), Err(Error::NotMonobrick { .. })));
    }

    #[test]
    fn mmax_examples() {
        let chain = poset(A3, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(chain.mmax().arcs(), &[Arc::new(1, 4)]);
        assert!(poset(A3, &[]).mmax().is_empty());
        let pair = poset(A3, &[(1, 2), (3, 4)]);
        assert_eq!(pair.mmax(), *pair.diagram());
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            poset(A3, &[(1, 2), (2, 4)]).cofinal_closure(),
            poset(A3, &[(1, 2), (2, 3), (2, 4)])
        );
        assert_eq!(
            poset(A3, &[(1, 4)]).cofinal_closure(),
            poset(A3, &[(1, 2), (1, 3), (1, 4)])
        );
        assert_eq!(poset(A3, &[]).cofinal_closure(), poset(A3, &[]));
        let b2 = AlgebraSpec::CyclicB(2);
        assert_eq!(
            poset(b2, &[(1, 1)]).cofinal_closure(),
            poset(b2, &[(1, 2), (1, 1)])
        );
        assert_eq!(
            poset(b2, &[(2, 2)]).cofinal_closure(),
            poset(b2, &[(2, 1), (2, 2)])
        );
    }

    #[test]
    fn closedness_examples() {
        assert!(poset(A3, &[(1, 2), (1, 3), (1, 4)]).is_cofinally_closed());
        assert!(!poset(A3, &[(1, 4)]).is_cofinally_closed());
        assert!(poset(A3, &[]).is_cofinally_closed());
    }

    #[test]
    fn cofinal_extension_examples() {
        let top = poset(A3, &[(1, 4)]);
        let chain = poset(A3, &[(1, 2), (1, 3), (1, 4)]);
        assert!(top.is_cofinal_extension(&chain).unwrap());
        assert!(top.is_cofinal_extension(&top).unwrap());
        assert!(!poset(A3, &[(1, 2)])
            .is_cofinal_extension(&poset(A3, &[(1, 2), (3, 4)]))
            .unwrap());
        let other = poset(AlgebraSpec::CyclicB(3), &[]);
        assert!(matches!(
            top.is_cofinal_extension(&other),
            Err(Error::AlgebraMismatch(..))
        ));
    }

    #[test]
    fn hasse_examples() {
        assert_eq!(poset(A3, &[(1, 2), (1, 3), (1, 4)]).hasse().len(), 2);
        assert!(poset(A3, &[(1, 2), (3, 4)]).hasse().is_empty());
        let covers = poset(A3, &[(1, 2), (1, 3), (1, 4)]).hasse();
        assert_eq!(
            covers[0],
            Cover {
                lower: Arc::new(1, 2),
                upper: Arc::new(1, 3)
            }
        );
        assert_eq!(
            covers[1],
            Cover {
                lower: Arc::new(1, 3),
                upper: Arc::new(1, 4)
            }
        );
    }

    #[test]
    fn order_is_partial_and_lengths_increase() {
        for spec in [AlgebraSpec::LinearA(4), AlgebraSpec::CyclicB(3)] {
            let n = spec.marks();
            for p in all_monobricks(spec) {
                let arcs = p.arcs();
                for &a in arcs {
                    assert!(p.leq(a, a));
                    for &b in arcs {
                        if a != b && p.leq(a, b) {
                            assert!(!p.leq(b, a));
                            assert!(a.length(n) < b.length(n));
                        }
                        for &c in arcs {
                            if p.leq(a, b) && p.leq(b, c) {
                                assert!(p.leq(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closure_laws_on_all_monobricks() {
        for spec in [
            AlgebraSpec::LinearA(4),
            AlgebraSpec::CyclicB(2),
            AlgebraSpec::CyclicB(3),
        ] {
            let all = all_monobricks(spec);
            for p in &all {
                let c = p.cofinal_closure();
                assert!(p.diagram().is_subset_of(c.diagram()));
                assert_eq!(c.cofinal_closure(), c);
                assert_eq!(c.mmax(), p.mmax());
                assert!(c.mmax().is_semibrick());
                // every cofinal extension found by exhaustion lies inside the closure
                for q in &all {
                    if p.is_cofinal_extension(q).unwrap() {
                        assert!(
                            q.diagram().is_subset_of(c.diagram()),
                            "{} {}",
                            p.diagram(),
                            q.diagram()
                        );
                    }
                }
                let semi = p.diagram().is_semibrick();
                assert_eq!(semi, p.mmax() == *p.diagram());
                assert_eq!(semi, p.hasse().is_empty());
                if semi {
                    assert_eq!(c.mmax(), *p.diagram());
                }
                for &a in p.arcs() {
                    assert!(p.mmax().arcs().iter().any(|&m| p.leq(a, m)));
                }
            }
        }
    }
}
