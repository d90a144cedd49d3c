//! A bounded model of the module category of a preset: every direct sum of
//! indecomposables up to a total dimension, with all subrepresentations and
//! (lazily) the kernels, images and cokernels of all maps between them.
//!
//! A map `f: X -> Y` factors as `X -> X/ker f = im f -> Y`, so the triples
//! realized by maps `X -> Y` are exactly the `(K, I, C)` where `(K, I)` is a
//! (sub, quotient) pair of `X` and `(I, C)` one of `Y`. Profiles are built from
//! that join; enumerating hom elements is kept for bricks and for audits.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc as Shared, Mutex};

use crate::arc::MorphismKind;
use crate::error::{Error, Result};

use super::linalg::{Field, Subspace};
use super::preset::Preset;
use super::rep::{zero_morphism, HomSpace, Morphism, Rep, SubspaceCache};

pub type ClassId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniverseConfig {
    pub dim_bound: usize,
    pub field: Field,
    /// Hom spaces with more elements than this are not enumerated
    /// element by element.
    pub element_cap: u64,
}

impl Default for UniverseConfig {
    fn default() -> Self {
        UniverseConfig {
            dim_bound: 6,
            field: Field::new(2).expect("F_2"),
            element_cap: 1 << 14,
        }
    }
}

impl UniverseConfig {
    pub fn with_bound(dim_bound: usize) -> Self {
        UniverseConfig {
            dim_bound,
            ..UniverseConfig::default()
        }
    }
}

/// An isomorphism class: a multiset of indecomposables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModClass {
    pub id: ClassId,
    /// Indecomposable indices, non-decreasing.
    pub parts: Vec<usize>,
    pub rep: Rep,
    /// Dimension vector followed by `dim Hom(I, X)` and `dim Hom(X, I)` for
    /// every indecomposable `I`.
    pub fingerprint: Vec<usize>,
}

impl ModClass {
    pub fn dim(&self) -> usize {
        self.rep.total_dim()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.parts.len() == 1
    }
}

/// Kernel, image and cokernel classes of one map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MapTriple {
    pub kernel: ClassId,
    pub image: ClassId,
    pub cokernel: ClassId,
}

/// What the maps `X -> Y` look like, up to the classes they produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapProfile {
    /// Distinct triples, sorted; the zero map gives `(X, 0, Y)`.
    pub triples: Vec<MapTriple>,
}

pub struct Universe {
    preset: Preset,
    config: UniverseConfig,
    classes: Vec<ModClass>,
    by_parts: HashMap<Vec<usize>, ClassId>,
    indecs: Vec<ClassId>,
    /// Encoded stable subspace tuple -> (sub class, quotient class).
    subreps: Vec<HashMap<Vec<u8>, (ClassId, ClassId)>>,
    /// Distinct (sub, quotient) pairs over all subrepresentations.
    sub_quot: Vec<Vec<(ClassId, ClassId)>>,
    /// The pairs of `sub_quot` with both entries nonzero.
    extensions: Vec<Vec<(ClassId, ClassId)>>,
    summands: Vec<Vec<ClassId>>,
    profiles: Mutex<HashMap<(ClassId, ClassId), Shared<MapProfile>>>,
}

pub const ZERO: ClassId = 0;

fn encode(subs: &[Subspace]) -> Vec<u8> {
    let mut key = Vec::new();
    for s in subs {
        s.encode(&mut key);
    }
    key
}

impl Universe {
    pub fn build(preset: Preset, config: UniverseConfig) -> Result<Universe> {
        let q = &preset.quiver;
        let f = config.field;
        let indec_reps: Vec<Rep> = (0..preset.indecomposables.len())
            .map(|k| preset.indec_rep(k))
            .collect();
        for (k, r) in indec_reps.iter().enumerate() {
            if !r.satisfies_relations(q, f) {
                return Err(Error::Oracle(format!(
                    "indecomposable {} violates a relation",
                    preset.indecomposables[k].label
                )));
            }
        }
        let fingerprint = |r: &Rep| -> Vec<usize> {
            let mut fp = r.dims().to_vec();
            fp.extend(indec_reps.iter().map(|i| HomSpace::compute(q, i, r, f).dim()));
            fp.extend(indec_reps.iter().map(|i| HomSpace::compute(q, r, i, f).dim()));
            fp
        };

        let dims: Vec<usize> = indec_reps.iter().map(Rep::total_dim).collect();
        let mut multisets = Vec::new();
        collect_multisets(&dims, config.dim_bound, 0, 0, &mut Vec::new(), &mut multisets);
        multisets
            .sort_by_key(|parts: &Vec<usize>| (parts.iter().map(|&k| dims[k]).sum::<usize>(), parts.clone()));

        let mut classes = Vec::with_capacity(multisets.len());
        let mut by_parts = HashMap::new();
        let mut by_fp: HashMap<Vec<usize>, ClassId> = HashMap::new();
        for (id, parts) in multisets.into_iter().enumerate() {
            let rep = parts
                .iter()
                .fold(Rep::zero(q), |acc, &k| acc.direct_sum(&indec_reps[k], q));
            let fp = fingerprint(&rep);
            if let Some(&other) = by_fp.get(&fp) {
                let other: &ModClass = &classes[other];
                return Err(Error::Oracle(format!(
                    "fingerprint collision between {:?} and {:?}",
                    other.parts, parts
                )));
            }
            by_fp.insert(fp.clone(), id);
            by_parts.insert(parts.clone(), id);
            classes.push(ModClass {
                id,
                parts,
                rep,
                fingerprint: fp,
            });
        }
        let indecs: Vec<ClassId> = (0..indec_reps.len())
            .filter_map(|k| by_parts.get(&vec![k]).copied())
            .collect();

        let mut memo: HashMap<Rep, ClassId> = classes.iter().map(|c| (c.rep.clone(), c.id)).collect();
        let mut classify = |r: Rep, whole: &ModClass| -> Result<ClassId> {
            if let Some(&id) = memo.get(&r) {
                return Ok(id);
            }
            let fp = fingerprint(&r);
            let id = *by_fp.get(&fp).ok_or_else(|| {
                Error::Oracle(format!(
                    "a subquotient of {:?} matches no known class; the indecomposable list is incomplete",
                    whole.parts
                ))
            })?;
            memo.insert(r, id);
            Ok(id)
        };

        let mut cache = SubspaceCache::default();
        let mut subreps = Vec::with_capacity(classes.len());
        let mut sub_quot = Vec::with_capacity(classes.len());
        let mut extensions = Vec::with_capacity(classes.len());
        for class in &classes {
            let mut table = HashMap::new();
            let mut pairs = BTreeSet::new();
            for subs in class.rep.subreps(q, f, &mut cache) {
                let sub = classify(class.rep.restrict(q, &subs, f), class)?;
                let quot = classify(class.rep.quotient(q, &subs, f), class)?;
                pairs.insert((sub, quot));
                table.insert(encode(&subs), (sub, quot));
            }
            subreps.push(table);
            extensions.push(
                pairs
                    .iter()
                    .copied()
                    .filter(|&(a, b)| a != ZERO && b != ZERO)
                    .collect(),
            );
            sub_quot.push(pairs.into_iter().collect());
        }

        let summands = classes
            .iter()
            .map(|c| {
                let mut found = BTreeSet::new();
                for mask in 0u32..(1 << c.parts.len()) {
                    let sub: Vec<usize> = c
                        .parts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &k)| k)
                        .collect();
                    found.insert(by_parts[&sub]);
                }
                found.into_iter().collect()
            })
            .collect();

        Ok(Universe {
            preset,
            config,
            classes,
            by_parts,
            indecs,
            subreps,
            sub_quot,
            extensions,
            summands,
            profiles: Mutex::new(HashMap::new()),
        })
    }

    pub fn preset(&self) -> &Preset {
        &self.preset
    }

    pub fn config(&self) -> &UniverseConfig {
        &self.config
    }

    pub fn field(&self) -> Field {
        self.config.field
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ModClass] {
        &self.classes
    }

    pub fn class(&self, id: ClassId) -> &ModClass {
        &self.classes[id]
    }

    pub fn dim(&self, id: ClassId) -> usize {
        self.classes[id].dim()
    }

    /// Class ids of the indecomposables within the bound, in preset order.
    pub fn indecomposables(&self) -> &[ClassId] {
        &self.indecs
    }

    pub fn class_of_parts(&self, parts: &[usize]) -> Option<ClassId> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        self.by_parts.get(&sorted).copied()
    }

    pub fn class_of_label(&self, label: &str) -> Option<ClassId> {
        self.class_of_parts(&[self.preset.indec_index(label)?])
    }

    /// Direct sums are written with `+`, the zero module as `0`.
    pub fn label(&self, id: ClassId) -> String {
        let parts = &self.classes[id].parts;
        if parts.is_empty() {
            return "0".into();
        }
        parts
            .iter()
            .map(|&k| self.preset.indecomposables[k].label)
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn subrep_table(&self, id: ClassId) -> &HashMap<Vec<u8>, (ClassId, ClassId)> {
        &self.subreps[id]
    }

    /// Classes of all subrepresentations of `id` (with repetitions removed).
    pub fn subobjects(&self, id: ClassId) -> BTreeSet<ClassId> {
        self.subreps[id].values().map(|&(s, _)| s).collect()
    }

    pub fn quotients(&self, id: ClassId) -> BTreeSet<ClassId> {
        self.subreps[id].values().map(|&(_, q)| q).collect()
    }

    /// Classes `(A, X/A)` over all subrepresentations `A` of `X`.
    pub fn sub_quotient_pairs(&self, id: ClassId) -> &[(ClassId, ClassId)] {
        &self.sub_quot[id]
    }

    /// Pairs `(A, X/A)` with `A` a proper nonzero subrepresentation of `X`.
    pub fn extension_pairs(&self, id: ClassId) -> &[(ClassId, ClassId)] {
        &self.extensions[id]
    }

    pub fn summands(&self, id: ClassId) -> &[ClassId] {
        &self.summands[id]
    }

    pub fn hom_space(&self, x: ClassId, y: ClassId) -> HomSpace {
        HomSpace::compute(
            &self.preset.quiver,
            &self.classes[x].rep,
            &self.classes[y].rep,
            self.field(),
        )
    }

    pub fn hom_dim(&self, x: ClassId, y: ClassId) -> usize {
        self.hom_space(x, y).dim()
    }

    fn triple(&self, x: ClassId, y: ClassId, m: &Morphism) -> MapTriple {
        let f = self.field();
        let (kernel, _) = self.subreps[x][&encode(&m.kernel(f))];
        let (image, cokernel) = self.subreps[y][&encode(&m.image(f))];
        MapTriple {
            kernel,
            image,
            cokernel,
        }
    }

    /// Kernel, image and cokernel classes over every map `x -> y`, cached.
    pub fn profile(&self, x: ClassId, y: ClassId) -> Shared<MapProfile> {
        if let Some(p) = self.profiles.lock().expect("profile cache").get(&(x, y)) {
            return p.clone();
        }
        let mut triples = BTreeSet::new();
        for &(kernel, image) in &self.sub_quot[x] {
            for &(_, cokernel) in self.sub_quot[y].iter().filter(|&&(s, _)| s == image) {
                triples.insert(MapTriple {
                    kernel,
                    image,
                    cokernel,
                });
            }
        }
        let profile = Shared::new(MapProfile {
            triples: triples.into_iter().collect(),
        });
        self.profiles
            .lock()
            .expect("profile cache")
            .insert((x, y), profile.clone());
        profile
    }

    /// The same triples as [`Universe::profile`], found by running through
    /// every element of `Hom(x, y)`. `None` above the element cap.
    pub fn enumerated_profile(&self, x: ClassId, y: ClassId) -> Option<MapProfile> {
        let hom = self.hom_space(x, y);
        let n = self.field().count(hom.dim())?;
        if n > self.config.element_cap {
            return None;
        }
        let zero = zero_morphism(&self.classes[x].rep, &self.classes[y].rep);
        let triples: BTreeSet<MapTriple> = hom.elements(zero).map(|m| self.triple(x, y, &m)).collect();
        Some(MapProfile {
            triples: triples.into_iter().collect(),
        })
    }

    fn enumerated(&self, x: ClassId, y: ClassId) -> MapProfile {
        self.enumerated_profile(x, y).unwrap_or_else(|| {
            panic!(
                "Hom({}, {}) is too large to enumerate",
                self.label(x),
                self.label(y)
            )
        })
    }

    /// Every element of `Hom(x, y)` is zero or injective.
    pub fn maps_zero_or_injective(&self, x: ClassId, y: ClassId) -> bool {
        self.enumerated(x, y)
            .triples
            .iter()
            .all(|t| t.kernel == ZERO || t.kernel == x)
    }

    /// Some element of `Hom(x, y)` is injective.
    pub fn injects(&self, x: ClassId, y: ClassId) -> bool {
        self.enumerated(x, y).triples.iter().any(|t| t.kernel == ZERO)
    }

    /// `End(x)` is one-dimensional; for these presets the same as being a brick.
    pub fn is_brick(&self, x: ClassId) -> bool {
        self.classes[x].is_indecomposable() && self.hom_dim(x, x) == 1
    }

    pub fn bricks(&self) -> Vec<ClassId> {
        self.indecs
            .iter()
            .copied()
            .filter(|&i| self.is_brick(i))
            .collect()
    }

    /// Classification of `Hom(x, y)` between bricks from the matrices.
    pub fn morphism_kind(&self, x: ClassId, y: ClassId) -> Result<MorphismKind> {
        let f = self.field();
        let hom = self.hom_space(x, y);
        if hom.dim() > 1 {
            return Err(Error::Oracle(format!(
                "Hom({}, {}) has dimension {}",
                self.label(x),
                self.label(y),
                hom.dim()
            )));
        }
        let Some(g) = hom.basis().first() else {
            return Ok(MorphismKind::Zero);
        };
        Ok(if g.is_iso(f) {
            MorphismKind::Iso
        } else if g.is_injective(f) {
            MorphismKind::Injection
        } else {
            MorphismKind::NonzeroNonInjection
        })
    }

    /// Subsets of bricks in which every map between members (in either
    /// direction, including endomorphisms) is zero or injective, sorted.
    pub fn monobricks_bruteforce(&self) -> Vec<Vec<ClassId>> {
        let bricks = self.bricks();
        let ok: Vec<Vec<bool>> = bricks
            .iter()
            .map(|&a| {
                bricks
                    .iter()
                    .map(|&b| self.maps_zero_or_injective(a, b))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << bricks.len()) {
            let idx: Vec<usize> = (0..bricks.len()).filter(|i| mask >> i & 1 == 1).collect();
            if idx.iter().all(|&i| idx.iter().all(|&j| ok[i][j])) {
                out.push(idx.iter().map(|&i| bricks[i]).collect());
            }
        }
        out.sort();
        out
    }

    /// Members with no injection into a different member.
    pub fn brick_mmax(&self, set: &[ClassId]) -> Vec<ClassId> {
        set.iter()
            .copied()
            .filter(|&m| !set.iter().any(|&n| n != m && self.injects(m, n)))
            .collect()
    }

    /// Bricks `N` injecting into some member such that every map from `N`
    /// into a member is zero or injective.
    pub fn brick_cofinal_closure(&self, set: &[ClassId]) -> Vec<ClassId> {
        self.bricks()
            .into_iter()
            .filter(|&n| {
                set.iter().any(|&m| self.injects(n, m))
                    && set.iter().all(|&m| self.maps_zero_or_injective(n, m))
            })
            .collect()
    }

    /// Covering pairs of the injection order on `set`.
    pub fn brick_hasse(&self, set: &[ClassId]) -> Vec<(ClassId, ClassId)> {
        let lt = |a: ClassId, b: ClassId| a != b && self.injects(a, b);
        let mut out = Vec::new();
        for &a in set {
            for &b in set {
                if lt(a, b) && !set.iter().any(|&c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn collect_multisets(
    dims: &[usize],
    bound: usize,
    from: usize,
    used: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(cur.clone());
    for k in from..dims.len() {
        if used + dims[k] <= bound {
            cur.push(k);
            collect_multisets(dims, bound, k, used + dims[k], cur, out);
            cur.pop();
        }
    }
}
