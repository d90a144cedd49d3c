//! Per-preset verification suite: census, reference tables, the
//! monobrick/subcategory bijections and agreement with the arc model.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::arc::hom_kind;
use crate::diagram::ArcDiagram;
use crate::enumerate::{enumerate, Budget, DiagramKind};
use crate::error::Result;
use crate::poset::MonobrickPoset;

use super::preset::Preset;
use super::subcat::SubcatSet;
use super::tables::{check_table, labels, resolve, table_for, Mark};
use super::universe::{ClassId, Universe, UniverseConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub preset: String,
    pub dim_bound: usize,
    pub p: u8,
    pub classes: usize,
    pub bricks: usize,
    pub monobricks: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Collects up to a few counterexamples for a check.
struct Failures {
    count: usize,
    shown: Vec<String>,
}

impl Failures {
    fn new() -> Self {
        Failures {
            count: 0,
            shown: Vec::new(),
        }
    }

    fn push(&mut self, msg: impl FnOnce() -> String) {
        self.count += 1;
        if self.shown.len() < 5 {
            self.shown.push(msg());
        }
    }

    fn finish(self, name: &'static str, checked: usize) -> Check {
        let detail = if self.count == 0 {
            format!("{checked} checked")
        } else {
            format!("{} of {checked} failed: {}", self.count, self.shown.join("; "))
        };
        Check {
            name,
            passed: self.count == 0,
            detail,
        }
    }
}

fn sorted(mut v: Vec<ClassId>) -> Vec<ClassId> {
    v.sort_unstable();
    v
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub struct Suite<'u> {
    u: &'u Universe,
    monobricks: Vec<Vec<ClassId>>,
}

impl<'u> Suite<'u> {
    pub fn new(u: &'u Universe) -> Self {
        Suite {
            u,
            monobricks: u.monobricks_bruteforce(),
        }
    }

    pub fn monobricks(&self) -> &[Vec<ClassId>] {
        &self.monobricks
    }

    fn show(&self, ids: &[ClassId]) -> String {
        labels(self.u, ids.iter().copied())
    }

    /// Brute-force count against the arc enumeration, or against the table
    /// plus the sets too small to be listed.
    pub fn census(&self) -> Check {
        let preset = self.u.preset();
        let found = self.monobricks.len();
        let expected = if let Some(spec) = preset.arc_model {
            enumerate(spec, DiagramKind::Monobrick, &Budget::default(), |_| {})
                .ok()
                .map(|c| c as usize)
        } else {
            table_for(preset.name).map(|t| {
                let b = self.u.bricks().len();
                t.rows.len() + (0..t.min_size).map(|k| binomial(b, k)).sum::<usize>()
            })
        };
        Check {
            name: "census",
            passed: expected.is_none_or(|e| e == found),
            detail: match expected {
                Some(e) => format!("{found} monobricks, expected {e}"),
                None => format!("{found} monobricks, no reference count"),
            },
        }
    }

    pub fn tables(&self) -> Option<Check> {
        let table = table_for(self.u.preset().name)?;
        let problems = check_table(self.u, table);
        Some(Check {
            name: "tables",
            passed: problems.is_empty(),
            detail: if problems.is_empty() {
                format!("{} rows matched", table.rows.len())
            } else {
                problems.join("; ")
            },
        })
    }

    pub fn simp_filt(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let s = self.u.filt(mm.iter().copied()).simp();
            if &s != mm {
                f.push(|| format!("{} gives {}", self.show(mm), self.show(&s)));
            }
        }
        f.finish("simp-filt", self.monobricks.len())
    }

    pub fn filt_simp(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let e = self.u.filt(mm.iter().copied());
            if self.u.filt(e.simp()) != e {
                f.push(|| self.show(mm));
            }
        }
        f.finish("filt-simp", self.monobricks.len())
    }

    pub fn closure_is_simp_f(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let closure = sorted(self.u.brick_cofinal_closure(mm));
            let s = self.u.f_map(mm.iter().copied()).simp();
            if s != closure {
                f.push(|| {
                    format!(
                        "{}: closure {} but simp F {}",
                        self.show(mm),
                        self.show(&closure),
                        self.show(&s)
                    )
                });
            }
        }
        f.finish("closure-simp-f", self.monobricks.len())
    }

    pub fn torsion_free_iff_closed(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let closed = &sorted(self.u.brick_cofinal_closure(mm)) == mm;
            let tf = self.u.filt(mm.iter().copied()).closure_flags().is_torsion_free();
            if closed != tf {
                f.push(|| format!("{}: closed {closed}, torsion-free {tf}", self.show(mm)));
            }
        }
        f.finish("torsion-free-cofinal", self.monobricks.len())
    }

    pub fn w_of_filt(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let w = self.u.filt(mm.iter().copied()).w_map();
            let mmax = self.u.brick_mmax(mm);
            if w != self.u.filt(mmax.iter().copied()) {
                f.push(|| format!("{}: W gives {:?}", self.show(mm), w));
            }
        }
        f.finish("w-filt-mmax", self.monobricks.len())
    }

    pub fn mmax_of_closure(&self) -> Check {
        let mut f = Failures::new();
        for mm in &self.monobricks {
            let a = sorted(self.u.brick_mmax(mm));
            let b = sorted(self.u.brick_mmax(&self.u.brick_cofinal_closure(mm)));
            if a != b {
                f.push(|| format!("{}: {} vs {}", self.show(mm), self.show(&a), self.show(&b)));
            }
        }
        f.finish("mmax-closure", self.monobricks.len())
    }

    fn subcats(&self, keep: impl Fn(&SubcatSet<'u>) -> bool) -> Vec<SubcatSet<'u>> {
        let mut out: Vec<SubcatSet<'u>> = Vec::new();
        for mm in &self.monobricks {
            let e = self.u.filt(mm.iter().copied());
            if keep(&e) && !out.contains(&e) {
                out.push(e);
            }
        }
        out
    }

    /// `W(F(W)) = W` on wide subcategories, and `F`, `W` are inverse
    /// bijections between wide subcategories and torsion-free classes.
    pub fn wide_torsion_free(&self) -> [Check; 2] {
        let wide = self.subcats(|e| e.closure_flags().is_wide());
        let tf = self.subcats(|e| e.closure_flags().is_torsion_free());

        let mut f = Failures::new();
        for w in &wide {
            let back = self.u.f_map(w.members()).w_map();
            if &back != w {
                f.push(|| format!("{w:?} returns as {back:?}"));
            }
        }
        let identity = f.finish("w-f-identity", wide.len());

        let mut f = Failures::new();
        if wide.len() != tf.len() {
            f.push(|| format!("{} wide but {} torsion-free", wide.len(), tf.len()));
        }
        for w in &wide {
            let t = self.u.f_map(w.members());
            if !tf.contains(&t) {
                f.push(|| format!("F{w:?} = {t:?} is not a listed torsion-free class"));
            }
        }
        for t in &tf {
            let w = t.w_map();
            if !wide.contains(&w) || self.u.f_map(w.members()) != *t {
                f.push(|| format!("W{t:?} = {w:?} does not return"));
            }
        }
        let mut bijection = f.finish("wide-torsion-free-bijection", wide.len() + tf.len());
        bijection.detail = format!(
            "{} wide, {} torsion-free; {}",
            wide.len(),
            tf.len(),
            bijection.detail
        );
        [identity, bijection]
    }

    /// Taking the closure is injective on semibricks, and both counts agree
    /// with the wide and torsion-free counts.
    pub fn counting(&self) -> Check {
        let semibricks: Vec<&Vec<ClassId>> = self
            .monobricks
            .iter()
            .filter(|mm| sorted(self.u.brick_mmax(mm)) == **mm)
            .collect();
        let closed = self
            .monobricks
            .iter()
            .filter(|mm| sorted(self.u.brick_cofinal_closure(mm)) == **mm)
            .count();
        let images: BTreeSet<Vec<ClassId>> = semibricks
            .iter()
            .map(|s| sorted(self.u.brick_cofinal_closure(s)))
            .collect();
        let wide = self.subcats(|e| e.closure_flags().is_wide()).len();
        let tf = self.subcats(|e| e.closure_flags().is_torsion_free()).len();
        let passed =
            images.len() == semibricks.len() && semibricks.len() == wide && closed == tf && closed == wide;
        Check {
            name: "counting",
            passed,
            detail: format!(
                "{} bricks, {} semibricks, {} cofinally closed, {} wide, {} torsion-free",
                self.u.bricks().len(),
                semibricks.len(),
                closed,
                wide,
                tf
            ),
        }
    }

    /// Filt of every set of bricks, deduplicated.
    fn generated(&self) -> Vec<(Vec<ClassId>, SubcatSet<'u>)> {
        let bricks = self.u.bricks();
        let mut seen = BTreeMap::new();
        for mask in 0u32..(1 << bricks.len()) {
            let gens: Vec<ClassId> = (0..bricks.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| bricks[i])
                .collect();
            let e = self.u.filt(gens.iter().copied());
            let key: Vec<ClassId> = e.members().collect();
            seen.entry(key).or_insert((gens, e));
        }
        seen.into_values().collect()
    }

    /// Left Schur iff closed under extensions, kernels and images. On a
    /// Nakayama preset there must be no exception; otherwise the exceptions
    /// must include every table row flagged as not closed.
    pub fn left_schur(&self) -> [Check; 2] {
        let generated = self.generated();
        let mut sufficient = Failures::new();
        let mut exceptions = Vec::new();
        for (gens, e) in &generated {
            let flags = e.closure_flags();
            let closed = flags.extensions && flags.kernels && flags.images;
            let schur = e.is_left_schur();
            if closed && !schur {
                sufficient.push(|| self.show(gens));
            }
            if closed != schur {
                exceptions.push(e.simp());
            }
        }
        let sufficient = sufficient.finish("left-schur-sufficient", generated.len());

        let nakayama = self.u.preset().arc_model.is_some();
        let flagged: Vec<Vec<ClassId>> = table_for(self.u.preset().name)
            .map(|t| {
                t.rows
                    .iter()
                    .filter(|r| r.mark != Mark::None)
                    .filter_map(|r| resolve(self.u, r.monobrick))
                    .collect()
            })
            .unwrap_or_default();
        let passed = if nakayama {
            exceptions.is_empty()
        } else {
            exceptions.len() >= 4 && flagged.iter().all(|f| exceptions.contains(f))
        };
        let shown: Vec<String> = exceptions.iter().take(8).map(|s| self.show(s)).collect();
        let characterization = Check {
            name: "left-schur-characterization",
            passed,
            detail: format!(
                "{} generated subcategories, {} exceptions{}{}",
                generated.len(),
                exceptions.len(),
                if shown.is_empty() { "" } else { ": " },
                shown.join(", ")
            ),
        };
        [characterization, sufficient]
    }

    /// `hom_kind` against the matrices, and the brute-forced monobricks
    /// against the arc enumeration, including mmax and closure.
    pub fn arc_agreement(&self) -> Result<Option<[Check; 2]>> {
        let preset = self.u.preset();
        let Some(spec) = preset.arc_model else {
            return Ok(None);
        };
        let arcs = spec.arcs();
        let class = |a| -> Result<ClassId> {
            let k = preset.indec_of_arc(a)?;
            Ok(self.u.class_of_parts(&[k]).expect("indecomposable in universe"))
        };

        let mut f = Failures::new();
        for &a in &arcs {
            for &b in &arcs {
                let arc_side = hom_kind(a, b, spec);
                let matrix_side = self.u.morphism_kind(class(a)?, class(b)?)?;
                if arc_side != matrix_side {
                    f.push(|| format!("{a:?} -> {b:?}: {arc_side:?} vs {matrix_side:?}"));
                }
            }
        }
        let homs = f.finish("arc-hom-kind", arcs.len() * arcs.len());

        let translate = |d: &ArcDiagram| -> Result<Vec<ClassId>> {
            Ok(sorted(d.arcs().iter().map(|&a| class(a)).collect::<Result<_>>()?))
        };
        let mut f = Failures::new();
        let mut images = BTreeSet::new();
        let mut diagrams = Vec::new();
        enumerate(spec, DiagramKind::Monobrick, &Budget::default(), |d| {
            diagrams.push(d.clone())
        })?;
        for d in &diagrams {
            let mm = translate(d)?;
            let poset = MonobrickPoset::new(d.clone())?;
            let closure = translate(poset.cofinal_closure().diagram())?;
            let mmax = translate(&poset.mmax())?;
            if closure != sorted(self.u.brick_cofinal_closure(&mm)) || mmax != sorted(self.u.brick_mmax(&mm))
            {
                f.push(|| format!("{} disagrees on closure or mmax", self.show(&mm)));
            }
            images.insert(mm);
        }
        let expected: BTreeSet<Vec<ClassId>> = self.monobricks.iter().cloned().collect();
        if images != expected {
            f.push(|| {
                format!(
                    "{} arc images vs {} brute-forced sets",
                    images.len(),
                    expected.len()
                )
            });
        }
        let sets = f.finish("arc-monobricks", diagrams.len());
        Ok(Some([homs, sets]))
    }

    pub fn run(&self) -> Result<Vec<Check>> {
        let mut checks = vec![self.census()];
        checks.extend(self.tables());
        checks.extend([
            self.simp_filt(),
            self.filt_simp(),
            self.closure_is_simp_f(),
            self.torsion_free_iff_closed(),
            self.w_of_filt(),
            self.mmax_of_closure(),
        ]);
        checks.extend(self.wide_torsion_free());
        checks.push(self.counting());
        checks.extend(self.left_schur());
        if let Some(arc) = self.arc_agreement()? {
            checks.extend(arc);
        }
        Ok(checks)
    }
}

/// Builds the universe for `preset` and runs every check.
pub fn run_suite(preset: &str, config: UniverseConfig) -> Result<SuiteReport> {
    let u = Universe::build(Preset::by_name(preset)?, config)?;
    let suite = Suite::new(&u);
    let checks = suite.run()?;
    Ok(SuiteReport {
        preset: preset.to_string(),
        dim_bound: config.dim_bound,
        p: config.field.p(),
        classes: u.len(),
        bricks: u.bricks().len(),
        monobricks: suite.monobricks().len(),
        checks,
    })
}
