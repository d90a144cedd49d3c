//! Subcategories of a bounded universe and their closure properties.
//!
//! Every quantifier ranges over the universe only: extensions are detected
//! when the middle term fits the dimension bound, and "for all X in E" means
//! all members up to that bound.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use super::universe::{ClassId, Universe, ZERO};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClosureFlags {
    pub extensions: bool,
    pub kernels: bool,
    pub cokernels: bool,
    pub images: bool,
    pub subobjects: bool,
    pub quotients: bool,
    pub summands: bool,
}

impl ClosureFlags {
    pub fn is_wide(&self) -> bool {
        self.extensions && self.kernels && self.cokernels
    }

    pub fn is_torsion_free(&self) -> bool {
        self.extensions && self.subobjects
    }
}

/// A set of classes of one universe, always containing the zero module.
#[derive(Clone)]
pub struct SubcatSet<'u> {
    universe: &'u Universe,
    members: Vec<bool>,
    flags: OnceLock<ClosureFlags>,
}

impl PartialEq for SubcatSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.universe, other.universe) && self.members == other.members
    }
}

impl Eq for SubcatSet<'_> {}

impl fmt::Debug for SubcatSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.members().map(|m| self.universe.label(m)).collect();
        f.debug_set().entries(labels).finish()
    }
}

impl<'u> SubcatSet<'u> {
    pub fn new(universe: &'u Universe, members: impl IntoIterator<Item = ClassId>) -> Self {
        let mut set = vec![false; universe.len()];
        set[ZERO] = true;
        for m in members {
            set[m] = true;
        }
        SubcatSet {
            universe,
            members: set,
            flags: OnceLock::new(),
        }
    }

    pub fn universe(&self) -> &'u Universe {
        self.universe
    }

    pub fn contains(&self, id: ClassId) -> bool {
        self.members[id]
    }

    /// Member ids in increasing order, zero first.
    pub fn members(&self) -> impl Iterator<Item = ClassId> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Indecomposable members.
    pub fn indecomposables(&self) -> BTreeSet<ClassId> {
        self.members()
            .filter(|&m| self.universe.class(m).is_indecomposable())
            .collect()
    }

    /// Indecomposable summands of members, i.e. the indecomposables of `add E`.
    pub fn add_indecomposables(&self) -> BTreeSet<ClassId> {
        self.members()
            .flat_map(|m| self.universe.summands(m).iter().copied())
            .filter(|&s| self.universe.class(s).is_indecomposable())
            .collect()
    }

    fn has_filtration(&self, x: ClassId) -> bool {
        self.universe
            .extension_pairs(x)
            .iter()
            .any(|&(a, b)| self.members[a] && self.members[b])
    }

    /// Nonzero members with no proper filtration inside the set.
    pub fn simp(&self) -> Vec<ClassId> {
        self.members()
            .filter(|&m| m != ZERO && !self.has_filtration(m))
            .collect()
    }

    /// Every nonzero map from a simple member to a member is injective.
    pub fn is_left_schur(&self) -> bool {
        let members: Vec<ClassId> = self.members().collect();
        self.simp().into_iter().all(|s| {
            members.iter().all(|&x| {
                self.universe
                    .profile(s, x)
                    .triples
                    .iter()
                    .all(|t| t.kernel == ZERO || t.kernel == s)
            })
        })
    }

    pub fn closure_flags(&self) -> ClosureFlags {
        *self.flags.get_or_init(|| self.compute_flags())
    }

    fn compute_flags(&self) -> ClosureFlags {
        let u = self.universe;
        let members: Vec<ClassId> = self.members().collect();
        let inside = |set: &BTreeSet<ClassId>| set.iter().all(|&c| self.members[c]);
        let mut flags = ClosureFlags {
            extensions: (0..u.len()).all(|x| self.members[x] || !self.has_filtration(x)),
            kernels: true,
            cokernels: true,
            images: true,
            subobjects: members.iter().all(|&m| inside(&u.subobjects(m))),
            quotients: members.iter().all(|&m| inside(&u.quotients(m))),
            summands: members
                .iter()
                .all(|&m| u.summands(m).iter().all(|&s| self.members[s])),
        };
        for &x in &members {
            for &y in &members {
                for t in &u.profile(x, y).triples {
                    flags.kernels &= self.members[t.kernel];
                    flags.images &= self.members[t.image];
                    flags.cokernels &= self.members[t.cokernel];
                }
            }
        }
        flags
    }

    /// Members `W` all of whose maps into members have their cokernel inside.
    pub fn w_map(&self) -> SubcatSet<'u> {
        let members: Vec<ClassId> = self.members().collect();
        let kept = members.iter().copied().filter(|&w| {
            members.iter().all(|&x| {
                self.universe
                    .profile(w, x)
                    .triples
                    .iter()
                    .all(|t| self.members[t.cokernel])
            })
        });
        SubcatSet::new(self.universe, kept.collect::<Vec<_>>())
    }
}

impl Universe {
    /// Least extension-closed set containing `gens` and zero.
    pub fn filt(&self, gens: impl IntoIterator<Item = ClassId>) -> SubcatSet<'_> {
        let mut set = SubcatSet::new(self, gens);
        // ids increase with dimension and filtration factors are smaller
        for x in 0..self.len() {
            if !set.members[x] && set.has_filtration(x) {
                set.members[x] = true;
            }
        }
        set
    }

    /// `Filt` of the subobject closure.
    pub fn f_map(&self, gens: impl IntoIterator<Item = ClassId>) -> SubcatSet<'_> {
        let subs: BTreeSet<ClassId> = gens.into_iter().flat_map(|g| self.subobjects(g)).collect();
        self.filt(subs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::preset::Preset;
    use crate::oracle::universe::UniverseConfig;

    fn universe(name: &str, bound: usize) -> Universe {
        Universe::build(Preset::by_name(name).unwrap(), UniverseConfig::with_bound(bound)).unwrap()
    }

    fn ids(u: &Universe, labels: &[&str]) -> Vec<ClassId> {
        labels.iter().map(|l| u.class_of_label(l).unwrap()).collect()
    }

    #[test]
    fn torsion_free_example() {
        let u = universe("a3_linear", 5);
        let gens = ids(&u, &["1", "2/1", "3/2/1", "2"]);
        let e = u.filt(gens.clone());
        assert_eq!(e.indecomposables(), gens.iter().copied().collect());
        assert_eq!(e.add_indecomposables(), e.indecomposables());
        assert_eq!(e.simp(), {
            let mut s = ids(&u, &["1", "2", "3/2/1"]);
            s.sort_unstable();
            s
        });
        assert!(e.is_left_schur());
        assert!(e.closure_flags().is_torsion_free());
        let e2 = u.filt(ids(&u, &["2/1", "3/2/1", "2"]));
        assert!(!e2.is_left_schur());
    }

    #[test]
    fn zero_subcategory() {
        let u = universe("a3_linear", 3);
        let z = u.filt([]);
        assert_eq!(z.len(), 1);
        assert!(z.simp().is_empty());
        assert!(z.is_left_schur());
        let f = z.closure_flags();
        assert!(f.extensions && f.kernels && f.cokernels && f.images);
        assert!(f.subobjects && f.quotients && f.summands);
        assert_eq!(u.f_map([]), z);
    }

    #[test]
    fn w_and_f_examples() {
        let u = universe("a3_linear", 5);
        let e = u.filt(ids(&u, &["1", "2/1"]));
        assert_eq!(e.w_map(), u.filt(ids(&u, &["2/1"])));
        let semisimple = u.filt(ids(&u, &["1", "2", "3"]));
        assert_eq!(semisimple.w_map(), semisimple);
        let w = u.filt(ids(&u, &["2/1"]));
        assert_eq!(w.w_map(), w);
        assert_eq!(u.f_map(ids(&u, &["3/2"])), u.filt(ids(&u, &["2", "3/2"])));
    }

    #[test]
    fn starred_row_is_not_summand_closed() {
        let u = universe("a3_source", 6);
        let e = u.filt(ids(&u, &["2", "13/2"]));
        let f = e.closure_flags();
        assert!(!f.summands);
        assert!(!f.images);
        let white: BTreeSet<ClassId> = ids(&u, &["1/2", "3/2"]).into_iter().collect();
        let extra: BTreeSet<ClassId> = e
            .add_indecomposables()
            .difference(&e.indecomposables())
            .copied()
            .collect();
        assert_eq!(extra, white);
    }

    #[test]
    fn double_starred_row() {
        let u = universe("a3_source", 6);
        let e = u.filt(ids(&u, &["3/2", "13/2", "1/2"]));
        let f = e.closure_flags();
        assert!(f.images);
        assert!(f.summands);
        assert!(!f.kernels);
    }
}
